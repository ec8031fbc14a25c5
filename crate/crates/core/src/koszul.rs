//! Persistence modules `V_q = H_q(X^•)`, Koszul complexes at a grade, Betti
//! tables and the merge map.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::complex::HomologyData;
use crate::error::{Error, Result};
use crate::field::{rank, Matrix, PrimeField};
use crate::filtration::{subsets_of_size, Grade, MultiFiltration};

/// Homology of every sublevel of a filtration, indexed by grid grade.
///
/// Grades outside the evaluation grid are answered through
/// [`MultiFiltration::clamp_to_grid`], which preserves the sublevel.
#[derive(Debug)]
pub struct PersistenceModule<'a> {
    filt: &'a MultiFiltration,
    homology: HashMap<Grade, HomologyData>,
    empty: HomologyData,
}

impl<'a> PersistenceModule<'a> {
    pub fn new(filt: &'a MultiFiltration) -> Result<Self> {
        let grid = filt.evaluation_grid()?;
        let complex = filt.complex();
        let homology = grid
            .into_par_iter()
            .map(|u| {
                let h = complex.homology(&filt.sublevel(&u))?;
                Ok((u, h))
            })
            .collect::<Result<HashMap<_, _>>>()?;
        let empty = complex.homology(&complex.empty_subcomplex())?;
        Ok(Self { filt, homology, empty })
    }

    pub fn filtration(&self) -> &MultiFiltration {
        self.filt
    }

    pub fn field(&self) -> PrimeField {
        self.filt.field()
    }

    pub fn n(&self) -> usize {
        self.filt.n()
    }

    pub fn homology_at(&self, u: &Grade) -> Result<&HomologyData> {
        if u.n() != self.n() {
            return Err(Error::GradeShape(u.clone()));
        }
        let c = self.filt.clamp_to_grid(u)?;
        Ok(self.homology.get(&c).unwrap_or(&self.empty))
    }

    /// `dim H_q(X^u)`.
    pub fn dim(&self, q: usize, u: &Grade) -> Result<usize> {
        Ok(self.homology_at(u)?.dim(q))
    }

    /// Matrix of `ι_q^{v,w} : H_q(X^v) → H_q(X^w)` in the stored bases.
    pub fn induced_map(&self, q: usize, v: &Grade, w: &Grade) -> Result<Matrix> {
        if !v.leq(w) {
            return Err(Error::GradeShape(v.clone()));
        }
        let hv = self.homology_at(v)?;
        let hw = self.homology_at(w)?;
        Ok(hv.map_into(hw, q)?)
    }

    /// Koszul complex of `V_q` at grade `u`.
    pub fn koszul_at(&self, u: &Grade, q: usize) -> Result<KoszulComplex> {
        let n = self.n();
        let f = self.field();
        let mut blocks: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
        for i in 1..=n {
            blocks.push(subsets_of_size(n, i));
        }
        let block_dims: Vec<Vec<usize>> = blocks
            .iter()
            .map(|bs| bs.iter().map(|s| self.dim(q, &u.minus_sigma(s))).collect())
            .collect::<Result<_>>()?;
        let mut differentials = Vec::with_capacity(n);
        for i in 1..=n {
            let rows: usize = block_dims[i - 1].iter().sum();
            let cols: usize = block_dims[i].iter().sum();
            let mut d = Matrix::zeros(f, rows, cols);
            let row_offset = offsets(&block_dims[i - 1]);
            let col_offset = offsets(&block_dims[i]);
            let row_index: HashMap<&Vec<usize>, usize> =
                blocks[i - 1].iter().enumerate().map(|(k, s)| (s, k)).collect();
            for (cb, sigma) in blocks[i].iter().enumerate() {
                let from = u.minus_sigma(sigma);
                for l in 0..i {
                    let mut tau = sigma.clone();
                    tau.remove(l);
                    let rb = row_index[&tau];
                    let sign = f.sign(i - (l + 1));
                    let m = self.induced_map(q, &from, &u.minus_sigma(&tau))?;
                    for r in 0..m.rows() {
                        for c in 0..m.cols() {
                            let v = m.get(r, c);
                            if v != 0 {
                                d.set(row_offset[rb] + r, col_offset[cb] + c, f.mul(sign, v));
                            }
                        }
                    }
                }
            }
            differentials.push(d);
        }
        for i in 1..n {
            if !differentials[i - 1].mul(&differentials[i])?.is_zero() {
                return Err(Error::DifferentialNotSquareZero { u: u.clone(), q, i });
            }
        }
        let ranks = differentials.iter().map(rank).collect();
        Ok(KoszulComplex { u: u.clone(), q, blocks, block_dims, differentials, ranks })
    }

    /// `ξ_p^q(u)` for `p = 0..=n`.
    pub fn betti_row(&self, u: &Grade, q: usize) -> Result<Vec<usize>> {
        let k = self.koszul_at(u, q)?;
        Ok((0..=self.n()).map(|p| k.betti(p)).collect())
    }

    pub fn betti(&self, u: &Grade, q: usize, p: usize) -> Result<usize> {
        Ok(self.betti_row(u, q)?.get(p).copied().unwrap_or(0))
    }

    /// Rank of the merge map `⊕_j H_q(X^{u−e_j}) → H_q(X^u)`.
    pub fn merge_rank(&self, u: &Grade, q: usize) -> Result<usize> {
        Ok(self.koszul_at(u, q)?.rank(1))
    }
}

fn offsets(dims: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    dims.iter()
        .map(|&d| {
            let o = acc;
            acc += d;
            o
        })
        .collect()
}

/// `K_i = ⊕_{|σ|=i} H_q(X^{u−e_σ})` with differentials `d_i : K_i → K_{i−1}`.
#[derive(Debug, Clone)]
pub struct KoszulComplex {
    pub u: Grade,
    pub q: usize,
    /// Index sets `σ` of the summands of each `K_i`, lexicographic.
    pub blocks: Vec<Vec<Vec<usize>>>,
    /// `dim H_q(X^{u−e_σ})` for each summand.
    pub block_dims: Vec<Vec<usize>>,
    /// `differentials[i − 1]` is `d_i`.
    pub differentials: Vec<Matrix>,
    ranks: Vec<usize>,
}

impl KoszulComplex {
    pub fn n(&self) -> usize {
        self.blocks.len() - 1
    }

    pub fn dim(&self, i: usize) -> usize {
        self.block_dims.get(i).map_or(0, |b| b.iter().sum())
    }

    /// `d_i` for `1 ≤ i ≤ n`; `None` for the zero maps `d_0`, `d_{n+1}`.
    pub fn differential(&self, i: usize) -> Option<&Matrix> {
        if i == 0 {
            None
        } else {
            self.differentials.get(i - 1)
        }
    }

    /// `rank d_i`, zero for `i = 0` and `i > n`.
    pub fn rank(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.ranks.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// `dim ker d_p − rank d_{p+1}`.
    pub fn betti(&self, p: usize) -> usize {
        self.dim(p) - self.rank(p) - self.rank(p + 1)
    }
}

/// `ξ_p^q(u)` over the evaluation grid, for `q = 0..=dim X`.
#[derive(Debug, Clone)]
pub struct BettiTable {
    n: usize,
    top_degree: usize,
    /// `values[u][q][p]`.
    values: HashMap<Grade, Vec<Vec<usize>>>,
    grid: Vec<Grade>,
}

impl BettiTable {
    pub fn compute(module: &PersistenceModule<'_>) -> Result<Self> {
        let filt = module.filtration();
        let grid = filt.evaluation_grid()?;
        let top_degree = filt.complex().dim();
        let values = grid
            .par_iter()
            .map(|u| {
                let rows = (0..=top_degree)
                    .map(|q| module.betti_row(u, q))
                    .collect::<Result<Vec<_>>>()?;
                Ok((u.clone(), rows))
            })
            .collect::<Result<HashMap<_, _>>>()?;
        Ok(Self { n: filt.n(), top_degree, values, grid })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grid(&self) -> &[Grade] {
        &self.grid
    }

    /// `ξ_p^q(u)`; zero for negative `q`, `q > dim X`, `p > n` or `u`
    /// outside the grid.
    pub fn get(&self, p: usize, q: i64, u: &Grade) -> usize {
        if q < 0 || q as usize > self.top_degree {
            return 0;
        }
        self.values
            .get(u)
            .and_then(|rows| rows[q as usize].get(p))
            .copied()
            .unwrap_or(0)
    }

    /// `Σ_j (−1)^j Σ_{v ⪯ u} ξ_j^q(v)` over grid grades `v`.
    pub fn alternating_sum_below(&self, q: i64, u: &Grade) -> i64 {
        self.grid
            .iter()
            .filter(|v| v.leq(u))
            .map(|v| {
                (0..=self.n)
                    .map(|j| sign(j) * self.get(j, q, v) as i64)
                    .sum::<i64>()
            })
            .sum()
    }
}

pub(crate) fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Outcome of comparing `dim H_q(X^u)` with the alternating Betti sum below `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionCheck {
    pub lhs: i64,
    pub rhs: i64,
}

impl DimensionCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn pointwise_dimension_check(
    module: &PersistenceModule<'_>,
    table: &BettiTable,
    u: &Grade,
    q: usize,
) -> Result<DimensionCheck> {
    Ok(DimensionCheck {
        lhs: module.dim(q, u)? as i64,
        rhs: table.alternating_sum_below(q as i64, u),
    })
}
