//! Exact linear algebra over a prime field `F_p`.
//!
//! Everything downstream (homology, Koszul complexes, spectral pages) is
//! reduced to ranks, kernels and coordinate solves on small dense matrices,
//! so this module keeps to plain Gaussian elimination with deterministic
//! pivoting: the first nonzero entry, scanning columns left to right.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("characteristic {0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("target vector is not in the span of the given columns")]
    NotInSpan,
    #[error("image of a cycle could not be expressed in the codomain homology basis")]
    RepresentationFailure,
    #[error("boundary subspace is not contained in the cycle subspace")]
    BoundariesNotInCycles,
    #[error("dimension mismatch: {0}")]
    Shape(String),
}

/// The prime field `F_p`. Elements are plain residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, LinalgError> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    /// `F_2`, the default coefficient field.
    pub fn binary() -> Self {
        Self { p: 2 }
    }

    #[inline]
    pub fn characteristic(self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.p - b % self.p)
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    /// `(-1)^k` as a field element.
    #[inline]
    pub fn sign(self, k: usize) -> u32 {
        if k.is_multiple_of(2) {
            1
        } else {
            self.neg(1)
        }
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        let mut base = a as u64 % self.p as u64;
        let mut exp = self.p as u64 - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            exp >>= 1;
        }
        acc as u32
    }

    /// Signed representative in `(-p/2, p/2]`, used when printing coefficients.
    pub fn signed(self, a: u32) -> i64 {
        if a as u64 * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn element(self, x: i64) -> FieldElement {
        FieldElement { value: self.reduce(x), field: self }
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self::binary()
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A single element of `F_p` carrying its field.
///
/// Matrices store bare residues; this type is for scalar arithmetic at the
/// API boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    field: PrimeField,
}

impl FieldElement {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inverse(self) -> Option<Self> {
        (!self.is_zero()).then(|| Self { value: self.field.inv(self.value), field: self.field })
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        Self { value: self.field.add(self.value, rhs.value), field: self.field }
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        Self { value: self.field.sub(self.value, rhs.value), field: self.field }
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        Self { value: self.field.mul(self.value, rhs.value), field: self.field }
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self { value: self.field.neg(self.value), field: self.field }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Dense row-major matrix over `F_p`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over F_{}", self.rows, self.cols, self.field.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing every entry mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &x) in row.iter().enumerate() {
                m.set(r, c, field.reduce(x));
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors (already reduced).
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, &x) in col.iter().enumerate() {
                m.set(r, c, x % field.p);
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        (0..self.cols).map(|c| self.column(c))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b != 0 {
                        let idx = r * out.cols + c;
                        out.data[idx] = f.add(out.data[idx], f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// Submatrix with the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.set(i, j, self.get(r, c));
            }
        }
        m
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            if pr != lead {
                for k in 0..self.cols {
                    self.data.swap(pr * self.cols + k, lead * self.cols + k);
                }
            }
            let inv = f.inv(self.get(lead, c));
            for k in c..self.cols {
                let idx = lead * self.cols + k;
                self.data[idx] = f.mul(self.data[idx], inv);
            }
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self.get(r, c);
                if factor == 0 {
                    continue;
                }
                for k in c..self.cols {
                    let v = self.data[lead * self.cols + k];
                    if v != 0 {
                        let idx = r * self.cols + k;
                        self.data[idx] = f.sub(self.data[idx], f.mul(factor, v));
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }
}

/// Rank over `F_p`; zero for matrices with no rows or no columns.
pub fn rank(m: &Matrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    // Eliminate along the shorter side.
    let mut work = if m.rows <= m.cols { m.clone() } else { m.transpose() };
    work.rref_in_place().len()
}

/// A subspace of `F_p^ambient`, stored as a matrix of independent columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Matrix::zeros(field, ambient_dim, 0) }
    }

    /// The span of `vectors`, keeping the independent ones in order.
    pub fn span(field: PrimeField, ambient_dim: usize, vectors: &[Vec<u32>]) -> Self {
        let mut reducer = ReducedSpan::new(field, ambient_dim, false);
        let kept: Vec<Vec<u32>> = vectors.iter().filter(|v| reducer.insert(v)).cloned().collect();
        Self { ambient_dim, basis: Matrix::from_columns(field, ambient_dim, &kept) }
    }

    /// The column space of `m`, keeping its pivot columns.
    pub fn column_space(m: &Matrix) -> Self {
        let cols: Vec<Vec<u32>> = m.columns().collect();
        Self::span(m.field(), m.rows(), &cols)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<u32>> {
        self.basis.columns().collect()
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut reducer = ReducedSpan::new(self.field(), self.ambient_dim, false);
        for b in self.basis.columns() {
            reducer.insert(&b);
        }
        reducer.contains(v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        let mut reducer = ReducedSpan::new(self.field(), self.ambient_dim, false);
        for b in other.basis.columns() {
            reducer.insert(&b);
        }
        self.basis.columns().all(|v| reducer.contains(&v))
    }

    /// Dimension of `self + other`.
    pub fn sum_dim(&self, other: &Subspace) -> usize {
        let mut reducer = ReducedSpan::new(self.field(), self.ambient_dim, false);
        for b in self.basis.columns().chain(other.basis.columns()) {
            reducer.insert(&b);
        }
        reducer.rank()
    }
}

/// Null space of `m`, as a subspace of `F_p^{cols(m)}`.
///
/// Basis vectors come from the free columns of the reduced row echelon form,
/// in increasing column order.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let f = m.field();
    let n = m.cols();
    if m.rows() == 0 {
        return Subspace { ambient_dim: n, basis: Matrix::identity(f, n) };
    }
    let mut r = m.clone();
    let pivots = r.rref_in_place();
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let vectors: Vec<Vec<u32>> = (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0; n];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, free));
            }
            v
        })
        .collect();
    Subspace { ambient_dim: n, basis: Matrix::from_columns(f, n, &vectors) }
}

/// Solves `columns * x = target`. Dependent columns receive coefficient 0.
pub fn solve_in_span(columns: &Matrix, target: &[u32]) -> Result<Vec<u32>, LinalgError> {
    if target.len() != columns.rows() {
        return Err(LinalgError::Shape(format!(
            "target has length {} but columns have {} rows",
            target.len(),
            columns.rows()
        )));
    }
    let mut reducer = ReducedSpan::new(columns.field(), columns.rows(), true);
    for c in columns.columns() {
        reducer.insert(&c);
    }
    reducer.solve(target).ok_or(LinalgError::NotInSpan)
}

/// Incrementally maintained reduced echelon basis of a span.
///
/// Stored vectors are fully reduced against each other (each has zeros at
/// every other stored pivot). With tracking enabled, every stored vector also
/// remembers its expression in terms of the inserted vectors, so that
/// [`ReducedSpan::solve`] returns coefficients over the insertion order.
#[derive(Debug, Clone)]
pub struct ReducedSpan {
    field: PrimeField,
    ambient: usize,
    pivots: Vec<usize>,
    vectors: Vec<Vec<u32>>,
    combos: Option<Vec<Vec<u32>>>,
    inserted: usize,
}

impl ReducedSpan {
    pub fn new(field: PrimeField, ambient: usize, track: bool) -> Self {
        Self {
            field,
            ambient,
            pivots: Vec::new(),
            vectors: Vec::new(),
            combos: track.then(Vec::new),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    fn axpy(f: PrimeField, dst: &mut Vec<u32>, c: u32, src: &[u32]) {
        if dst.len() < src.len() {
            dst.resize(src.len(), 0);
        }
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = f.sub(*d, f.mul(c, s));
            }
        }
    }

    /// Inserts `v`; returns whether it was independent of the current span.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let f = self.field;
        let index = self.inserted;
        self.inserted += 1;
        let mut w: Vec<u32> = v.iter().map(|&x| x % f.p).collect();
        let mut combo = self.combos.as_ref().map(|_| {
            let mut c = vec![0; index + 1];
            c[index] = 1;
            c
        });
        for k in 0..self.vectors.len() {
            let c = w[self.pivots[k]];
            if c == 0 {
                continue;
            }
            Self::axpy(f, &mut w, c, &self.vectors[k]);
            if let (Some(combo), Some(combos)) = (combo.as_mut(), self.combos.as_ref()) {
                Self::axpy(f, combo, c, &combos[k]);
            }
        }
        let Some(pivot) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[pivot]);
        w.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        if let Some(combo) = combo.as_mut() {
            combo.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        }
        for k in 0..self.vectors.len() {
            let c = self.vectors[k][pivot];
            if c == 0 {
                continue;
            }
            Self::axpy(f, &mut self.vectors[k], c, &w);
            if let (Some(combo), Some(combos)) = (combo.as_ref(), self.combos.as_mut()) {
                Self::axpy(f, &mut combos[k], c, combo);
            }
        }
        self.pivots.push(pivot);
        self.vectors.push(w);
        if let (Some(combo), Some(combos)) = (combo, self.combos.as_mut()) {
            combos.push(combo);
        }
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let f = self.field;
        let mut w: Vec<u32> = v.iter().map(|&x| x % f.p).collect();
        for k in 0..self.vectors.len() {
            let c = w[self.pivots[k]];
            if c != 0 {
                Self::axpy(f, &mut w, c, &self.vectors[k]);
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// Coefficients over the inserted vectors reproducing `target`, or `None`
    /// when `target` is outside the span. Requires tracking.
    pub fn solve(&self, target: &[u32]) -> Option<Vec<u32>> {
        let combos = self.combos.as_ref().expect("ReducedSpan::solve requires tracking");
        assert_eq!(target.len(), self.ambient, "vector length mismatch");
        let f = self.field;
        let mut w: Vec<u32> = target.iter().map(|&x| x % f.p).collect();
        let mut coeffs = vec![0; self.inserted];
        for k in 0..self.vectors.len() {
            let c = w[self.pivots[k]];
            if c == 0 {
                continue;
            }
            Self::axpy(f, &mut w, c, &self.vectors[k]);
            for (i, &x) in combos[k].iter().enumerate() {
                if x != 0 {
                    coeffs[i] = f.add(coeffs[i], f.mul(c, x));
                }
            }
        }
        w.iter().all(|&x| x == 0).then_some(coeffs)
    }
}

/// A quotient `cycles / boundaries` with a fixed basis of coset
/// representatives.
///
/// The representatives are chosen by scanning the cycle basis in order and
/// keeping each vector that is independent of the boundaries and of the
/// representatives kept so far.
#[derive(Debug, Clone)]
pub struct QuotientBasis {
    ambient: usize,
    boundary_dim: usize,
    representatives: Vec<Vec<u32>>,
    solver: ReducedSpan,
}

impl QuotientBasis {
    pub fn new(cycles: &Subspace, boundaries: &Subspace) -> Result<Self, LinalgError> {
        if cycles.ambient_dim() != boundaries.ambient_dim() {
            return Err(LinalgError::Shape("cycle and boundary ambients differ".into()));
        }
        let field = cycles.field();
        let ambient = cycles.ambient_dim();
        let mut solver = ReducedSpan::new(field, ambient, true);
        for b in boundaries.basis().columns() {
            solver.insert(&b);
        }
        let boundary_dim = solver.rank();
        let mut representatives = Vec::new();
        for z in cycles.basis().columns() {
            if solver.insert(&z) {
                representatives.push(z);
            }
        }
        // Boundaries must already lie in the cycle span.
        if boundary_dim + representatives.len() != cycles.dim() {
            return Err(LinalgError::BoundariesNotInCycles);
        }
        // Rebuild the solver over [boundaries | representatives] so that
        // coordinates split cleanly into the two blocks.
        let mut clean = ReducedSpan::new(field, ambient, true);
        for b in boundaries.basis().columns() {
            clean.insert(&b);
        }
        for r in &representatives {
            clean.insert(r);
        }
        Ok(Self { ambient, boundary_dim, representatives, solver: clean })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn boundary_dim(&self) -> usize {
        self.boundary_dim
    }

    pub fn representatives(&self) -> &[Vec<u32>] {
        &self.representatives
    }

    /// Coordinates of the class of `v` in the representative basis.
    pub fn coordinates(&self, v: &[u32]) -> Result<Vec<u32>, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::Shape("vector length differs from ambient".into()));
        }
        let coeffs = self.solver.solve(v).ok_or(LinalgError::RepresentationFailure)?;
        Ok(coeffs[self.boundary_dim..].to_vec())
    }

    /// Whether `v` lies in the boundary subspace (represents the zero class).
    pub fn is_trivial(&self, v: &[u32]) -> Result<bool, LinalgError> {
        Ok(self.coordinates(v)?.iter().all(|&x| x == 0))
    }
}

/// Matrix of the map `dom -> cod` induced by `f` (identity when `None`)
/// on the quotients, in the fixed representative bases.
pub fn induced_map_between(
    field: PrimeField,
    f: Option<&Matrix>,
    dom: &QuotientBasis,
    cod: &QuotientBasis,
) -> Result<Matrix, LinalgError> {
    let mut out = Matrix::zeros(field, cod.dim(), dom.dim());
    for (j, rep) in dom.representatives().iter().enumerate() {
        let image = match f {
            Some(f) => f.mul_vec(rep),
            None => rep.clone(),
        };
        let coords = cod.coordinates(&image)?;
        for (i, c) in coords.into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    Ok(out)
}

/// The map on `dom_cycles/dom_boundaries -> cod_cycles/cod_boundaries`
/// induced by `f`.
pub fn induced_quotient_map(
    f: &Matrix,
    dom_cycles: &Subspace,
    dom_boundaries: &Subspace,
    cod_cycles: &Subspace,
    cod_boundaries: &Subspace,
) -> Result<Matrix, LinalgError> {
    if f.cols() != dom_cycles.ambient_dim() || f.rows() != cod_cycles.ambient_dim() {
        return Err(LinalgError::Shape("map does not match the ambient spaces".into()));
    }
    let dom = QuotientBasis::new(dom_cycles, dom_boundaries)?;
    let cod = QuotientBasis::new(cod_cycles, cod_boundaries)?;
    induced_map_between(f.field(), Some(f), &dom, &cod)
}
