//! The Mayer-Vietoris double complex of the cover `{X^{u−e_j}}_j` at a grade,
//! its total complex, and the pages of the spectral sequence of the column
//! filtration.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::HomologyData;
use crate::error::{Error, Result};
use crate::field::{kernel_basis, rank, Matrix, PrimeField, ReducedSpan};
use crate::filtration::{subsets_of_size, Grade, MultiFiltration};
use crate::koszul::{KoszulComplex, PersistenceModule};

/// Generator of a total-complex degree: a cell of `X^{u−e_σ}` in block `σ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Generator {
    block: usize,
    cell: usize,
}

/// One total degree `T_k = ⊕_{p+q=k} C_{p,q}`, ordered by `p`, then `σ`,
/// then cell position, so that `F_p T_k` is a prefix.
#[derive(Debug, Clone, Default)]
struct TotalDegree {
    generators: Vec<Generator>,
    /// `column_start[p]` is the index of the first generator of column `p`;
    /// the last entry is the total size.
    column_start: Vec<usize>,
    index: HashMap<Generator, usize>,
}

impl TotalDegree {
    fn len(&self) -> usize {
        self.generators.len()
    }

    /// Size of `F_p T_k`.
    fn prefix(&self, p: i64) -> usize {
        if p < 0 {
            0
        } else {
            let n = self.column_start.len() - 1;
            self.column_start[(p as usize + 1).min(n)]
        }
    }

    fn column(&self, p: usize) -> std::ops::Range<usize> {
        self.column_start[p]..self.column_start[p + 1]
    }
}

/// `C_{p,q} = ⊕_{|σ|=p+1} C_q(X^{u−e_σ})` with horizontal differential
/// `δ` and vertical differential `(−1)^p ∂`.
#[derive(Debug, Clone)]
pub struct DoubleComplex {
    u: Grade,
    n: usize,
    top_q: usize,
    field: PrimeField,
    /// Index sets `σ`, by column then lexicographically.
    blocks: Vec<Vec<usize>>,
    degrees: Vec<TotalDegree>,
    horizontal: Vec<Matrix>,
    vertical: Vec<Matrix>,
    total: Vec<Matrix>,
}

impl DoubleComplex {
    pub fn build(filt: &MultiFiltration, u: &Grade) -> Result<Self> {
        if u.n() != filt.n() {
            return Err(Error::GradeShape(u.clone()));
        }
        let n = filt.n();
        let complex = filt.complex();
        let field = filt.field();
        let top_q = complex.dim();
        let blocks: Vec<Vec<usize>> = (1..=n).flat_map(|s| subsets_of_size(n, s)).collect();
        let block_cells: Vec<Vec<Vec<usize>>> = blocks
            .iter()
            .map(|sigma| {
                let sub = filt.below_intersection(u, sigma);
                (0..=top_q)
                    .map(|q| complex.positions_of_dim(q).filter(|&p| sub.contains(p)).collect())
                    .collect()
            })
            .collect();
        let max_k = n - 1 + top_q;
        let degrees: Vec<TotalDegree> = (0..=max_k)
            .map(|k| {
                let mut d = TotalDegree::default();
                for p in 0..n {
                    d.column_start.push(d.generators.len());
                    if k < p || k - p > top_q {
                        continue;
                    }
                    let q = k - p;
                    for (b, sigma) in blocks.iter().enumerate() {
                        if sigma.len() != p + 1 {
                            continue;
                        }
                        for &cell in &block_cells[b][q] {
                            d.generators.push(Generator { block: b, cell });
                        }
                    }
                }
                d.column_start.push(d.generators.len());
                d.index = d.generators.iter().enumerate().map(|(i, &g)| (g, i)).collect();
                d
            })
            .collect();
        let block_index: HashMap<&Vec<usize>, usize> =
            blocks.iter().enumerate().map(|(i, s)| (s, i)).collect();

        let mut horizontal = Vec::with_capacity(degrees.len());
        let mut vertical = Vec::with_capacity(degrees.len());
        let mut total = Vec::with_capacity(degrees.len());
        for k in 0..degrees.len() {
            let cols = degrees[k].len();
            let rows = if k == 0 { 0 } else { degrees[k - 1].len() };
            let mut h = Matrix::zeros(field, rows, cols);
            let mut v = Matrix::zeros(field, rows, cols);
            if k > 0 {
                let target = &degrees[k - 1];
                for (j, g) in degrees[k].generators.iter().enumerate() {
                    let sigma = &blocks[g.block];
                    let p = sigma.len() - 1;
                    for l in 1..=sigma.len() {
                        if p == 0 {
                            break;
                        }
                        let mut face = sigma.clone();
                        face.remove(l - 1);
                        let fb = block_index[&face];
                        let i = target.index[&Generator { block: fb, cell: g.cell }];
                        h.set(i, j, field.sign(p + 1 - l));
                    }
                    let s = field.sign(p);
                    for &(f, coeff) in complex.faces(g.cell) {
                        let i = target.index[&Generator { block: g.block, cell: f }];
                        v.set(i, j, field.mul(s, coeff));
                    }
                }
            }
            let mut t = h.clone();
            for i in 0..rows {
                for j in 0..cols {
                    t.set(i, j, field.add(h.get(i, j), v.get(i, j)));
                }
            }
            horizontal.push(h);
            vertical.push(v);
            total.push(t);
        }
        let dc = Self { u: u.clone(), n, top_q, field, blocks, degrees, horizontal, vertical, total };
        dc.check_anticommutes()?;
        Ok(dc)
    }

    fn check_anticommutes(&self) -> Result<()> {
        for k in 1..self.degrees.len() {
            let hh = self.horizontal[k - 1].mul(&self.horizontal[k])?;
            let vv = self.vertical[k - 1].mul(&self.vertical[k])?;
            let hv = self.horizontal[k - 1].mul(&self.vertical[k])?;
            let vh = self.vertical[k - 1].mul(&self.horizontal[k])?;
            let mixed_zero = (0..hv.rows())
                .all(|i| (0..hv.cols()).all(|j| self.field.add(hv.get(i, j), vh.get(i, j)) == 0));
            if !hh.is_zero() || !vv.is_zero() || !mixed_zero {
                return Err(Error::AnticommutativityFailure { u: self.u.clone() });
            }
        }
        Ok(())
    }

    pub fn grade(&self) -> &Grade {
        &self.u
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn top_q(&self) -> usize {
        self.top_q
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Largest total degree, `n − 1 + dim X`.
    pub fn max_total_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    /// `dim C_{p,q}`.
    pub fn dim(&self, p: usize, q: usize) -> usize {
        let k = p + q;
        if p >= self.n || q > self.top_q {
            return 0;
        }
        self.degrees[k].column(p).len()
    }

    pub fn total_dim(&self, k: usize) -> usize {
        self.degrees.get(k).map_or(0, TotalDegree::len)
    }

    /// Matrix of the total differential `T_k → T_{k−1}`.
    pub fn total_differential(&self, k: usize) -> Option<&Matrix> {
        self.total.get(k)
    }

    /// Matrix of the horizontal part `T_k → T_{k−1}`.
    pub fn horizontal_differential(&self, k: usize) -> Option<&Matrix> {
        self.horizontal.get(k)
    }

    /// Matrix of the vertical part `T_k → T_{k−1}`.
    pub fn vertical_differential(&self, k: usize) -> Option<&Matrix> {
        self.vertical.get(k)
    }

    /// Positions in `T_{p+q}` of the generators of block `σ` that are
    /// `q`-cells, together with the cell positions.
    pub fn block_generators(&self, sigma: &[usize], q: usize) -> Vec<(usize, usize)> {
        let Some(b) = self.blocks.iter().position(|s| s == sigma) else {
            return Vec::new();
        };
        let k = sigma.len() - 1 + q;
        match self.degrees.get(k) {
            Some(d) => d
                .generators
                .iter()
                .enumerate()
                .filter(|(_, g)| g.block == b)
                .map(|(i, g)| (i, g.cell))
                .collect(),
            None => Vec::new(),
        }
    }

    fn total_rank(&self, k: usize) -> usize {
        self.total.get(k).map_or(0, rank)
    }

    /// `dim H_k(T_*)`.
    pub fn total_homology(&self) -> Vec<usize> {
        (0..self.degrees.len())
            .map(|k| self.total_dim(k) - self.total_rank(k) - self.total_rank(k + 1))
            .collect()
    }
}

/// Dimensions, differential ranks and representatives of `E^r_{p,q}`,
/// `r = 0..=n`, `0 ≤ p ≤ n − 1`, `0 ≤ q ≤ dim X`.
#[derive(Debug, Clone)]
pub struct SpectralPages {
    pub u: Grade,
    pub n: usize,
    pub top_q: usize,
    /// `dims[r][p][q]`.
    pub dims: Vec<Vec<Vec<usize>>>,
    /// `ranks[r][p][q] = rank d^r_{p,q}`.
    pub ranks: Vec<Vec<Vec<usize>>>,
    /// Lifts in `T_{p+q}` whose classes form a basis of `E^r_{p,q}`.
    pub representatives: Vec<Vec<Vec<Vec<Vec<u32>>>>>,
    /// `dim H_k(T_*)`.
    pub total_homology: Vec<usize>,
}

impl SpectralPages {
    /// `dim E^r_{p,q}`, zero outside the first-quadrant strip. Pages past
    /// `n` equal `E^n`.
    pub fn dim(&self, r: usize, p: i64, q: i64) -> usize {
        if p < 0 || q < 0 || p as usize >= self.n || q as usize > self.top_q {
            return 0;
        }
        self.dims[r.min(self.n)][p as usize][q as usize]
    }

    /// `rank d^r_{p,q}`, zero outside the strip.
    pub fn rank(&self, r: usize, p: i64, q: i64) -> usize {
        if p < 0 || q < 0 || p as usize >= self.n || q as usize > self.top_q || r > self.n {
            return 0;
        }
        self.ranks[r][p as usize][q as usize]
    }

    /// `dim E^∞_{p,q} = dim E^n_{p,q}`.
    pub fn limit(&self, p: i64, q: i64) -> usize {
        self.dim(self.n, p, q)
    }
}

struct PageBuilder<'a> {
    dc: &'a DoubleComplex,
    z_cache: HashMap<(i64, i64, usize), Vec<Vec<u32>>>,
}

impl PageBuilder<'_> {
    /// Basis of `Z^s_{p} = {a ∈ F_p T_k : d a ∈ F_{p−s} T_{k−1}}` as vectors of `T_k`.
    fn z_basis(&mut self, s: i64, p: i64, k: usize) -> Vec<Vec<u32>> {
        if p < 0 || k >= self.dc.degrees.len() {
            return Vec::new();
        }
        let key = (s, p, k);
        if let Some(z) = self.z_cache.get(&key) {
            return z.clone();
        }
        let deg = &self.dc.degrees[k];
        let width = deg.prefix(p);
        let cols: Vec<usize> = (0..width).collect();
        let z: Vec<Vec<u32>> = if k == 0 {
            (0..width).map(|i| unit(deg.len(), i)).collect()
        } else {
            let below = &self.dc.degrees[k - 1];
            let rows: Vec<usize> = (below.prefix(p - s)..below.len()).collect();
            let m = self.dc.total[k].select(&rows, &cols);
            kernel_basis(&m)
                .basis()
                .columns()
                .map(|v| {
                    let mut full = v;
                    full.resize(deg.len(), 0);
                    full
                })
                .collect()
        };
        self.z_cache.insert(key, z.clone());
        z
    }

    /// Projections onto column `p` of `T_{k−1}` of `d(Z^s_{p'})`, `Z ⊆ T_k`.
    fn boundary_projections(&mut self, s: i64, p_source: i64, k: usize, p: usize) -> Vec<Vec<u32>> {
        if k == 0 || k >= self.dc.degrees.len() {
            return Vec::new();
        }
        let z = self.z_basis(s, p_source, k);
        let range = self.dc.degrees[k - 1].column(p);
        z.iter()
            .map(|v| self.dc.total[k].mul_vec(v)[range.clone()].to_vec())
            .collect()
    }
}

fn unit(len: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

/// Pages `E^0, …, E^n` from the coset formula
/// `E^r_{p,q} = (Z^r_p + F_{p−1}) / (d Z^{r−1}_{p+r−1} + F_{p−1})` in `T_{p+q}`.
pub fn compute_pages(dc: &DoubleComplex) -> SpectralPages {
    let n = dc.n;
    let top_q = dc.top_q;
    let f = dc.field;
    let mut b = PageBuilder { dc, z_cache: HashMap::new() };
    let mut dims = vec![vec![vec![0; top_q + 1]; n]; n + 1];
    let mut ranks = vec![vec![vec![0; top_q + 1]; n]; n + 1];
    let mut representatives = vec![vec![vec![Vec::new(); top_q + 1]; n]; n + 1];
    for r in 0..=n {
        let ri = r as i64;
        for p in 0..n {
            for q in 0..=top_q {
                let k = p + q;
                let pi = p as i64;
                let column = dc.degrees[k].column(p);
                let width = column.len();
                let mut span = ReducedSpan::new(f, width, false);
                for v in b.boundary_projections(ri - 1, pi + ri - 1, k + 1, p) {
                    span.insert(&v);
                }
                let mut reps = Vec::new();
                for z in b.z_basis(ri, pi, k) {
                    if span.insert(&z[column.clone()]) {
                        reps.push(z);
                    }
                }
                dims[r][p][q] = reps.len();
                if r <= p && k >= 1 {
                    let target = p - r;
                    let mut tspan = ReducedSpan::new(f, dc.degrees[k - 1].column(target).len(), false);
                    for v in b.boundary_projections(ri - 1, pi - 1, k, target) {
                        tspan.insert(&v);
                    }
                    let base = tspan.rank();
                    let trange = dc.degrees[k - 1].column(target);
                    for z in &reps {
                        let image = dc.total[k].mul_vec(z);
                        tspan.insert(&image[trange.clone()]);
                    }
                    ranks[r][p][q] = tspan.rank() - base;
                }
                representatives[r][p][q] = reps;
            }
        }
    }
    SpectralPages {
        u: dc.u.clone(),
        n,
        top_q,
        dims,
        ranks,
        representatives,
        total_homology: dc.total_homology(),
    }
}

/// A failed comparison between two integers attached to `(r, p, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PageMismatch {
    pub check: &'static str,
    pub r: usize,
    pub p: i64,
    pub q: i64,
    pub expected: i64,
    pub found: i64,
}

fn compare(
    out: &mut Vec<PageMismatch>,
    check: &'static str,
    (r, p, q): (usize, i64, i64),
    expected: usize,
    found: usize,
) {
    if expected != found {
        out.push(PageMismatch { check, r, p, q, expected: expected as i64, found: found as i64 });
    }
}

/// `dim E^{r+1}_{p,q} = dim E^r_{p,q} − rank d^r_{p,q} − rank d^r_{p+r,q−r+1}`
/// for `r = 0..n`.
pub fn check_page_recursion(pages: &SpectralPages) -> Vec<PageMismatch> {
    let mut out = Vec::new();
    for r in 0..pages.n {
        for p in 0..pages.n as i64 {
            for q in 0..=pages.top_q as i64 {
                let ri = r as i64;
                let lhs = pages.dim(r + 1, p, q);
                let rhs = pages.dim(r, p, q) as i64
                    - pages.rank(r, p, q) as i64
                    - pages.rank(r, p + ri, q - ri + 1) as i64;
                if lhs as i64 != rhs {
                    out.push(PageMismatch {
                        check: "page_recursion",
                        r,
                        p,
                        q,
                        expected: rhs,
                        found: lhs as i64,
                    });
                }
            }
        }
    }
    out
}

/// `E^0_{p,q} = C_{p,q}`.
pub fn check_e0(pages: &SpectralPages, dc: &DoubleComplex) -> Vec<PageMismatch> {
    let mut out = Vec::new();
    for p in 0..pages.n {
        for q in 0..=pages.top_q {
            compare(&mut out, "e0", (0, p as i64, q as i64), dc.dim(p, q), pages.dim(0, p as i64, q as i64));
        }
    }
    out
}

/// `E^1_{p,q} ≅ K_{p+1}` of the Koszul complex of `V_q`; `d^1_{p,q}`
/// matches `d_{p+1}` for `p ≥ 1` and vanishes for `p = 0`, where the
/// Koszul complex continues with the merge map.
pub fn check_e1_is_truncated_koszul(
    pages: &SpectralPages,
    koszul: &[KoszulComplex],
) -> Vec<PageMismatch> {
    let mut out = Vec::new();
    for (q, kc) in koszul.iter().enumerate().take(pages.top_q + 1) {
        for p in 0..pages.n {
            let at = (1, p as i64, q as i64);
            compare(&mut out, "e1_dim", at, kc.dim(p + 1), pages.dim(1, p as i64, q as i64));
            let expected = if p == 0 { 0 } else { kc.rank(p + 1) };
            compare(&mut out, "e1_rank", at, expected, pages.rank(1, p as i64, q as i64));
        }
    }
    out
}

/// `dim E^2_{0,q} = rank merge_q + ξ_1^q` and `dim E^2_{p,q} = ξ_{p+1}^q`.
pub fn check_e2_dims(pages: &SpectralPages, koszul: &[KoszulComplex]) -> Vec<PageMismatch> {
    let mut out = Vec::new();
    for (q, kc) in koszul.iter().enumerate().take(pages.top_q + 1) {
        for p in 0..pages.n {
            let expected = if p == 0 { kc.rank(1) + kc.betti(1) } else { kc.betti(p + 1) };
            compare(&mut out, "e2_dim", (2, p as i64, q as i64), expected, pages.dim(2, p as i64, q as i64));
        }
    }
    out
}

/// `dim H_k(∪_j X^{u−e_j}) = Σ_{p+q=k} dim E^n_{p,q}`.
pub fn check_convergence(pages: &SpectralPages, union_dims: &[usize]) -> Vec<PageMismatch> {
    let mut out = Vec::new();
    let max_k = pages.n - 1 + pages.top_q;
    for k in 0..=max_k {
        let sum: usize = (0..pages.n as i64).map(|p| pages.limit(p, k as i64 - p)).sum();
        let expected = union_dims.get(k).copied().unwrap_or(0);
        compare(&mut out, "convergence", (pages.n, -1, k as i64), expected, sum);
    }
    out
}

/// `dim E^n_{0,q} = rank ε̄_q`.
pub fn check_einfty0(pages: &SpectralPages, epsilon_ranks: &[usize]) -> Vec<PageMismatch> {
    let mut out = Vec::new();
    for q in 0..=pages.top_q {
        let expected = epsilon_ranks.get(q).copied().unwrap_or(0);
        compare(&mut out, "einfty0", (pages.n, 0, q as i64), expected, pages.limit(0, q as i64));
    }
    out
}

/// `dim H_k(T_*) = dim H_k(∪_j X^{u−e_j})`.
pub fn check_total_homology(pages: &SpectralPages, union_dims: &[usize]) -> Vec<PageMismatch> {
    let mut out = Vec::new();
    for (k, &t) in pages.total_homology.iter().enumerate() {
        compare(&mut out, "total_homology", (0, -1, k as i64), union_dims.get(k).copied().unwrap_or(0), t);
    }
    out
}

/// `E^2 − Σ_i E^2_{p−i,q+i−1} − Σ_i E^2_{p+i,q−i+1} ≤ E^{r+1}_{p,q} ≤ E^2_{p,q}`
/// for `2 ≤ r ≤ n − 1`, sums over `2 ≤ i ≤ r`.
pub fn check_sandwich(pages: &SpectralPages) -> Vec<PageMismatch> {
    let mut out = Vec::new();
    for r in 2..pages.n {
        for p in 0..pages.n as i64 {
            for q in 0..=pages.top_q as i64 {
                let e2 = pages.dim(2, p, q) as i64;
                let mut lower = e2;
                for i in 2..=r as i64 {
                    lower -= pages.dim(2, p - i, q + i - 1) as i64;
                    lower -= pages.dim(2, p + i, q - i + 1) as i64;
                }
                let mid = pages.dim(r + 1, p, q) as i64;
                if mid < lower || mid > e2 {
                    out.push(PageMismatch { check: "sandwich", r, p, q, expected: e2, found: mid });
                }
            }
        }
    }
    out
}

/// Ranks of `ε̄_q : ⊕_j H_q(X^{u−e_j}) → H_q(∪_j X^{u−e_j})` for `q = 0..=dim X`.
pub fn epsilon_bar_ranks(
    module: &PersistenceModule<'_>,
    u: &Grade,
    union: &HomologyData,
) -> Result<Vec<usize>> {
    let f = module.field();
    (0..=union.top_degree())
        .map(|q| {
            let mut columns = Vec::new();
            for j in 0..module.n() {
                let m = module.homology_at(&u.minus_e(j))?.map_into(union, q)?;
                columns.extend(m.columns());
            }
            Ok(rank(&Matrix::from_columns(f, union.dim(q), &columns)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(c: &[i64]) -> Grade {
        Grade::new(c.to_vec())
    }

    fn filt(field: PrimeField, n: usize, simplices: &[(&[u64], &[i64])]) -> MultiFiltration {
        let s: Vec<(Vec<u64>, Grade)> =
            simplices.iter().map(|(v, gr)| (v.to_vec(), g(gr))).collect();
        MultiFiltration::from_graded_simplices(field, n, &s).unwrap().0
    }

    #[test]
    fn one_parameter_is_a_single_column() {
        let f = filt(PrimeField::binary(), 1, &[(&[0, 1], &[0]), (&[0, 1, 2], &[1])]);
        let dc = DoubleComplex::build(&f, &g(&[1])).unwrap();
        assert_eq!(dc.blocks(), &[vec![0]]);
        let below = f.sublevel(&g(&[0]));
        for q in 0..=2 {
            assert_eq!(dc.dim(0, q), f.complex().boundary_matrix(&below, q).cols());
        }
        let pages = compute_pages(&dc);
        assert_eq!(pages.dims[1][0], vec![1, 0, 0]);
        assert!(check_page_recursion(&pages).is_empty());
    }

    #[test]
    fn empty_cover_gives_zero_complex() {
        let f = filt(PrimeField::binary(), 2, &[(&[0], &[1, 1])]);
        let dc = DoubleComplex::build(&f, &g(&[1, 1])).unwrap();
        assert_eq!(dc.total_dim(0), 0);
        let pages = compute_pages(&dc);
        assert!(pages.dims.iter().flatten().flatten().all(|&d| d == 0));
        assert_eq!(pages.total_homology, vec![0, 0]);
    }

    #[test]
    fn horizontal_signs_for_two_parameters() {
        let f3 = PrimeField::new(3).unwrap();
        let f = filt(f3, 2, &[(&[0, 1], &[0, 0]), (&[2], &[1, 0])]);
        let dc = DoubleComplex::build(&f, &g(&[1, 1])).unwrap();
        // The block {0,1} maps to block {0} with sign +1 and to block {1} with sign −1.
        let h = dc.horizontal_differential(1).unwrap();
        let src = dc.block_generators(&[0, 1], 0);
        let to0 = dc.block_generators(&[0], 0);
        let to1 = dc.block_generators(&[1], 0);
        assert_eq!(src.len(), 2);
        for &(col, cell) in &src {
            let r0 = to0.iter().find(|&&(_, c)| c == cell).unwrap().0;
            let r1 = to1.iter().find(|&&(_, c)| c == cell).unwrap().0;
            assert_eq!(h.get(r0, col), 1);
            assert_eq!(h.get(r1, col), 2);
        }
    }

    #[test]
    fn two_parameter_pages_stabilize_at_e2() {
        let f = filt(
            PrimeField::binary(),
            2,
            &[
                (&[0, 1], &[0, 0]),
                (&[1, 2], &[1, 0]),
                (&[0, 2], &[0, 1]),
                (&[0, 1, 2], &[1, 1]),
            ],
        );
        let u = g(&[1, 1]);
        let dc = DoubleComplex::build(&f, &u).unwrap();
        let pages = compute_pages(&dc);
        assert_eq!(check_page_recursion(&pages), vec![], "{:?} {:?}", pages.dims, pages.ranks);
        for p in 0..2 {
            for q in 0..=2 {
                assert_eq!(pages.rank(2, p, q), 0);
                assert_eq!(pages.dim(2, p, q), pages.dim(1 + 1, p, q));
            }
        }
        let union = f.below_union(&u);
        let dims = f.complex().betti_numbers(&union);
        assert_eq!(dims, vec![1, 1, 0]);
        assert!(check_total_homology(&pages, &dims).is_empty());
        assert!(check_convergence(&pages, &dims).is_empty());
    }
}
