//! One-critical bounded multi-filtrations: entrance grades, sublevel
//! subcomplexes and the finite evaluation grid.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

use crate::complex::{CellComplex, CellId, ComplexError, Subcomplex};
use crate::field::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiltrationError {
    #[error("parameter count must be at least 1")]
    NoParameters,
    #[error("cell {0} has no entrance grade")]
    MissingGrade(CellId),
    #[error("grade of cell {cell} has {found} coordinates, expected {expected}")]
    WrongLength { cell: CellId, expected: usize, found: usize },
    #[error("grade {0} given for an unknown cell")]
    UnknownCell(CellId),
    #[error("filtration has no cells")]
    EmptyFiltration,
    #[error("invalid grade '{0}'")]
    BadGrade(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// A point of `Z^n` with the coordinatewise partial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grade(Vec<i64>);

impl Grade {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `self ⪯ other`.
    pub fn leq(&self, other: &Grade) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self − e_j` (0-based `j`).
    pub fn minus_e(&self, j: usize) -> Grade {
        let mut c = self.0.clone();
        c[j] -= 1;
        Grade(c)
    }

    /// `self − e_σ` for a set of 0-based indices.
    pub fn minus_sigma(&self, sigma: &[usize]) -> Grade {
        let mut c = self.0.clone();
        for &j in sigma {
            c[j] -= 1;
        }
        Grade(c)
    }

    pub fn join(&self, other: &Grade) -> Grade {
        Grade(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn meet(&self, other: &Grade) -> Grade {
        Grade(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

impl FromStr for Grade {
    type Err = FiltrationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coords: Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
        match coords {
            Ok(c) if !c.is_empty() => Ok(Grade(c)),
            _ => Err(FiltrationError::BadGrade(s.to_string())),
        }
    }
}

impl From<Vec<i64>> for Grade {
    fn from(v: Vec<i64>) -> Self {
        Grade(v)
    }
}

/// Non-empty subsets of `{0, …, n−1}` of size `k`, in lexicographic order of
/// their sorted element lists.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 || k > n {
        return Vec::new();
    }
    (0..n).combinations(k).collect()
}

/// Violations of boundedness and monotonicity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FiltrationReport {
    /// Cells whose entrance grade is not `⪰ 0`.
    pub unbounded: Vec<CellId>,
    /// Pairs `(tau, sigma)` with `k(tau, sigma) != 0` but `grade(sigma) ⋠ grade(tau)`.
    pub non_monotone: Vec<(CellId, CellId)>,
}

impl FiltrationReport {
    pub fn is_ok(&self) -> bool {
        self.unbounded.is_empty() && self.non_monotone.is_empty()
    }
}

/// A cell complex with one entrance grade per cell.
#[derive(Debug, Clone)]
pub struct MultiFiltration {
    complex: CellComplex,
    n: usize,
    /// Entrance grade of each cell, by cell position.
    grades: Vec<Grade>,
}

impl MultiFiltration {
    pub fn new(
        complex: CellComplex,
        n: usize,
        entrance: &HashMap<CellId, Grade>,
    ) -> Result<Self, FiltrationError> {
        if n == 0 {
            return Err(FiltrationError::NoParameters);
        }
        for id in entrance.keys() {
            if complex.position(*id).is_none() {
                return Err(FiltrationError::UnknownCell(*id));
            }
        }
        let mut grades = Vec::with_capacity(complex.len());
        for c in complex.cells() {
            let g = entrance.get(&c.id).ok_or(FiltrationError::MissingGrade(c.id))?;
            if g.n() != n {
                return Err(FiltrationError::WrongLength { cell: c.id, expected: n, found: g.n() });
            }
            grades.push(g.clone());
        }
        Ok(Self { complex, n, grades })
    }

    /// Simplicial filtration from graded simplices.
    ///
    /// A missing vertex enters at the componentwise minimum of the grades of
    /// the listed simplices containing it; any other missing face enters at
    /// the componentwise maximum of its vertices' grades.
    pub fn from_graded_simplices(
        field: PrimeField,
        n: usize,
        simplices: &[(Vec<CellId>, Grade)],
    ) -> Result<(Self, Vec<Vec<CellId>>), FiltrationError> {
        if n == 0 {
            return Err(FiltrationError::NoParameters);
        }
        let mut given: BTreeMap<Vec<CellId>, Grade> = BTreeMap::new();
        for (s, g) in simplices {
            if g.n() != n {
                return Err(FiltrationError::WrongLength { cell: 0, expected: n, found: g.n() });
            }
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            given.insert(s, g.clone());
        }
        let lists: Vec<Vec<CellId>> = given.keys().cloned().collect();
        let sc = CellComplex::from_simplices(field, &lists)?;
        let mut vertex_grade: HashMap<CellId, Grade> = HashMap::new();
        for (s, g) in &given {
            if s.len() == 1 {
                vertex_grade.insert(s[0], g.clone());
            }
        }
        for (s, g) in &given {
            for v in s {
                if !given.contains_key(&vec![*v]) {
                    let e = vertex_grade.entry(*v).or_insert_with(|| g.clone());
                    *e = e.meet(g);
                }
            }
        }
        let mut entrance = HashMap::new();
        for (id, s) in sc.simplices.iter().enumerate() {
            let g = match given.get(s) {
                Some(g) => g.clone(),
                None => s
                    .iter()
                    .map(|v| vertex_grade[v].clone())
                    .reduce(|a, b| a.join(&b))
                    .expect("simplices are non-empty"),
            };
            entrance.insert(id as CellId, g);
        }
        let filt = MultiFiltration::new(sc.complex, n, &entrance)?;
        Ok((filt, sc.added))
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> PrimeField {
        self.complex.field()
    }

    /// Entrance grade of the cell at position `pos`.
    pub fn grade_at(&self, pos: usize) -> &Grade {
        &self.grades[pos]
    }

    pub fn grade_of(&self, id: CellId) -> Option<&Grade> {
        self.complex.position(id).map(|p| &self.grades[p])
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn validate_filtration(&self) -> FiltrationReport {
        let zero = Grade::zero(self.n);
        let mut report = FiltrationReport::default();
        for (pos, g) in self.grades.iter().enumerate() {
            let tau = self.complex.cell(pos);
            if !zero.leq(g) {
                report.unbounded.push(tau.id);
            }
            for &(f, _) in self.complex.faces(pos) {
                if !self.grades[f].leq(g) {
                    report.non_monotone.push((tau.id, self.complex.cell(f).id));
                }
            }
        }
        report
    }

    /// `X^u`: cells with entrance grade `⪯ u`.
    pub fn sublevel(&self, u: &Grade) -> Subcomplex {
        Subcomplex::from_mask(self.grades.iter().map(|g| g.leq(u)).collect())
    }

    /// `∪_j X^{u−e_j}`.
    pub fn below_union(&self, u: &Grade) -> Subcomplex {
        let shifted: Vec<Grade> = (0..self.n).map(|j| u.minus_e(j)).collect();
        Subcomplex::from_mask(
            self.grades.iter().map(|g| shifted.iter().any(|s| g.leq(s))).collect(),
        )
    }

    /// `∩_{j∈σ} X^{u−e_j}`, computed as `X^{u−e_σ}`.
    pub fn below_intersection(&self, u: &Grade, sigma: &[usize]) -> Subcomplex {
        assert!(!sigma.is_empty(), "sigma must be non-empty");
        let sub = self.sublevel(&u.minus_sigma(sigma));
        debug_assert_eq!(sub, self.literal_intersection(u, sigma));
        sub
    }

    /// The set-theoretic intersection of the sublevels `X^{u−e_j}`, `j ∈ σ`.
    pub fn literal_intersection(&self, u: &Grade, sigma: &[usize]) -> Subcomplex {
        sigma
            .iter()
            .map(|&j| self.sublevel(&u.minus_e(j)))
            .reduce(|a, b| a.intersection(&b))
            .unwrap_or_else(|| self.complex.full())
    }

    /// Positions of the cells entering exactly at `u`.
    pub fn entering_at(&self, u: &Grade) -> Vec<usize> {
        (0..self.grades.len()).filter(|&p| self.grades[p] == *u).collect()
    }

    /// Componentwise minimum and maximum entrance grades.
    pub fn bounds(&self) -> Result<(Grade, Grade), FiltrationError> {
        let lo = self.grades.iter().cloned().reduce(|a, b| a.meet(&b));
        let hi = self.grades.iter().cloned().reduce(|a, b| a.join(&b));
        match (lo, hi) {
            (Some(lo), Some(hi)) => Ok((lo, hi)),
            _ => Err(FiltrationError::EmptyFiltration),
        }
    }

    /// Every grade of the box from `min − 1` to `max`, lexicographic order.
    pub fn evaluation_grid(&self) -> Result<Vec<Grade>, FiltrationError> {
        let (lo, hi) = self.bounds()?;
        Ok(lo
            .coords()
            .iter()
            .zip(hi.coords())
            .map(|(&a, &b)| (a - 1)..=b)
            .multi_cartesian_product()
            .map(Grade)
            .collect())
    }

    /// The grid grade with the same sublevel as `u`: each coordinate is
    /// clamped into `[min − 1, max]`.
    pub fn clamp_to_grid(&self, u: &Grade) -> Result<Grade, FiltrationError> {
        let (lo, hi) = self.bounds()?;
        Ok(Grade(
            u.coords()
                .iter()
                .zip(lo.coords().iter().zip(hi.coords()))
                .map(|(&x, (&a, &b))| x.clamp(a - 1, b))
                .collect(),
        ))
    }

    /// Whether `u` lies in the evaluation grid.
    pub fn in_grid(&self, u: &Grade) -> bool {
        match self.bounds() {
            Ok((lo, hi)) => {
                u.n() == self.n
                    && u.coords()
                        .iter()
                        .zip(lo.coords().iter().zip(hi.coords()))
                        .all(|(&x, (&a, &b))| a - 1 <= x && x <= b)
            }
            Err(_) => false,
        }
    }

    /// Disjoint union of two filtrations with the same field and parameter
    /// count. Cell ids of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &MultiFiltration) -> Result<MultiFiltration, FiltrationError> {
        use crate::complex::CellSpec;
        if self.n != other.n {
            return Err(FiltrationError::WrongLength { cell: 0, expected: self.n, found: other.n });
        }
        let shift = self.complex.cells().iter().map(|c| c.id + 1).max().unwrap_or(0);
        let mut specs = Vec::new();
        let mut entrance = HashMap::new();
        for (f, off) in [(self, 0), (other, shift)] {
            let c = f.complex();
            for pos in 0..c.len() {
                let cell = c.cell(pos);
                let boundary = c
                    .faces(pos)
                    .iter()
                    .map(|&(fp, k)| (c.cell(fp).id + off, i64::from(k)))
                    .collect();
                specs.push(CellSpec { id: cell.id + off, dim: cell.dim, boundary });
                entrance.insert(cell.id + off, f.grade_at(pos).clone());
            }
        }
        let complex = CellComplex::new(self.field(), specs)?;
        MultiFiltration::new(complex, self.n, &entrance)
    }
}
