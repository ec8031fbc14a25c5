//! Critical counts `c_q(u)` and the comparisons between them, the Betti
//! tables and the Mayer-Vietoris pages at every grade of a filtration.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::filtration::{Grade, MultiFiltration};
use crate::koszul::{sign, BettiTable, KoszulComplex, PersistenceModule};
use crate::spectral::{self, compute_pages, DoubleComplex, PageMismatch, SpectralPages};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Eq,
    Ge,
    Le,
}

/// `lhs (relation) rhs` between two integers, with the literal outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub lhs: i64,
    pub rhs: i64,
    pub relation: Relation,
    pub holds: bool,
    /// `lhs − rhs` for `Ge` and `Eq`, `rhs − lhs` for `Le`.
    pub slack: i64,
}

impl Comparison {
    pub fn eq(lhs: i64, rhs: i64) -> Self {
        Self { lhs, rhs, relation: Relation::Eq, holds: lhs == rhs, slack: lhs - rhs }
    }

    pub fn ge(lhs: i64, rhs: i64) -> Self {
        Self { lhs, rhs, relation: Relation::Ge, holds: lhs >= rhs, slack: lhs - rhs }
    }

    pub fn le(lhs: i64, rhs: i64) -> Self {
        Self { lhs, rhs, relation: Relation::Le, holds: lhs <= rhs, slack: rhs - lhs }
    }

    pub fn tight(&self) -> bool {
        self.slack == 0
    }
}

/// `c_q(u) = dim H_q(X^u, ∪_j X^{u−e_j})` for `q = 0..=dim X`.
///
/// Errors if the cells of the relative complex are not exactly the cells
/// entering at `u`.
pub fn critical_counts(filt: &MultiFiltration, u: &Grade) -> Result<Vec<usize>> {
    let complex = filt.complex();
    let x = filt.sublevel(u);
    let a = filt.below_union(u);
    let relative: Vec<usize> = x.positions().filter(|&p| !a.contains(p)).collect();
    if relative != filt.entering_at(u) {
        return Err(Error::RelativeComplexMismatch { u: u.clone() });
    }
    Ok(complex.relative_homology_dims(&x, &a)?)
}

/// Everything measured at one grade; indices beyond the stored ranges read
/// as zero.
#[derive(Debug, Clone)]
pub struct GradeData {
    pub u: Grade,
    pub n: usize,
    /// `dim X`.
    pub d: usize,
    pub critical: Vec<usize>,
    /// Number of cells with entrance grade `u`.
    pub entering: usize,
    /// `xi[q][p] = ξ_p^q(u)`.
    pub xi: Vec<Vec<usize>>,
    /// `dim H_q(X^u)`.
    pub homology: Vec<usize>,
    /// `dim H_q(∪_j X^{u−e_j})`.
    pub union_homology: Vec<usize>,
    /// `rank merge_q`.
    pub merge: Vec<usize>,
    /// `rank i_q : H_q(∪_j X^{u−e_j}) → H_q(X^u)`.
    pub inclusion: Vec<usize>,
    /// `rank ε̄_q`.
    pub epsilon: Vec<usize>,
    /// `Σ_j (−1)^j Σ_{v⪯u} ξ_j^q(v)`.
    pub betti_below: Vec<i64>,
    pub pages: SpectralPages,
    pub koszul: Vec<KoszulComplex>,
}

fn at(v: &[usize], q: i64) -> i64 {
    if q < 0 {
        0
    } else {
        v.get(q as usize).copied().unwrap_or(0) as i64
    }
}

impl GradeData {
    pub fn compute(
        module: &PersistenceModule<'_>,
        table: &BettiTable,
        u: &Grade,
    ) -> Result<Self> {
        let filt = module.filtration();
        let complex = filt.complex();
        let n = filt.n();
        let d = complex.dim();
        let critical = critical_counts(filt, u)?;
        let koszul: Vec<KoszulComplex> =
            (0..=d).map(|q| module.koszul_at(u, q)).collect::<Result<_>>()?;
        let xi = koszul.iter().map(|k| (0..=n).map(|p| k.betti(p)).collect()).collect();
        let merge = koszul.iter().map(|k| k.rank(1)).collect();
        let hu = module.homology_at(u)?;
        let union = complex.homology(&filt.below_union(u))?;
        let inclusion = (0..=d)
            .map(|q| Ok(crate::field::rank(&union.map_into(hu, q)?)))
            .collect::<Result<Vec<_>>>()?;
        let epsilon = spectral::epsilon_bar_ranks(module, u, &union)?;
        let dc = DoubleComplex::build(filt, u)?;
        let pages = compute_pages(&dc);
        Ok(Self {
            u: u.clone(),
            n,
            d,
            critical,
            entering: filt.entering_at(u).len(),
            xi,
            homology: hu.dims(),
            union_homology: union.dims(),
            merge,
            inclusion,
            epsilon,
            betti_below: (0..=d as i64).map(|q| table.alternating_sum_below(q, u)).collect(),
            pages,
            koszul,
        })
    }

    pub fn c(&self, q: i64) -> i64 {
        at(&self.critical, q)
    }

    /// `ξ_p^q(u)`, zero for negative `q` or out-of-range indices.
    pub fn xi(&self, p: i64, q: i64) -> i64 {
        if p < 0 || q < 0 {
            return 0;
        }
        self.xi
            .get(q as usize)
            .and_then(|row| row.get(p as usize))
            .map_or(0, |&v| v as i64)
    }

    pub fn h(&self, q: i64) -> i64 {
        at(&self.homology, q)
    }

    pub fn h_union(&self, q: i64) -> i64 {
        at(&self.union_homology, q)
    }

    pub fn merge(&self, q: i64) -> i64 {
        at(&self.merge, q)
    }

    pub fn inclusion(&self, q: i64) -> i64 {
        at(&self.inclusion, q)
    }

    pub fn epsilon(&self, q: i64) -> i64 {
        at(&self.epsilon, q)
    }

    fn rk(&self, r: usize, p: i64, q: i64) -> i64 {
        self.pages.rank(r, p, q) as i64
    }

    fn e(&self, r: usize, p: i64, q: i64) -> i64 {
        self.pages.dim(r, p, q) as i64
    }
}

/// `Σ_{i≤q} (−1)^{q+i} c_i  ≥  Σ_{i≤q} (−1)^{q+i} (ξ_0^i − Σ_{p=1}^{i+1} ξ_p^{i+1−p})`.
pub fn check_strong(g: &GradeData, q: i64) -> Comparison {
    let mut lhs = 0;
    let mut rhs = 0;
    for i in 0..=q {
        let s = sign((q + i) as usize);
        lhs += s * g.c(i);
        let correction: i64 = (1..=i + 1).map(|p| g.xi(p, i + 1 - p)).sum();
        rhs += s * (g.xi(0, i) - correction);
    }
    Comparison::ge(lhs, rhs)
}

/// `c_q ≥ ξ_0^q − Σ_{p=1}^{q+1} ξ_p^{q+1−p}`.
pub fn check_weak(g: &GradeData, q: i64) -> Comparison {
    let correction: i64 = (1..=q + 1).map(|p| g.xi(p, q + 1 - p)).sum();
    Comparison::ge(g.c(q), g.xi(0, q) - correction)
}

/// `Σ_q (−1)^q c_q = Σ_{p,q} (−1)^{p+q} ξ_p^q`.
pub fn check_relative_euler(g: &GradeData) -> Comparison {
    let lhs = (0..=g.d as i64 + 1).map(|q| sign(q as usize) * g.c(q)).sum();
    let rhs = (0..=g.d as i64)
        .flat_map(|q| (0..=g.n as i64).map(move |p| (p, q)))
        .map(|(p, q)| sign((p + q) as usize) * g.xi(p, q))
        .sum();
    Comparison::eq(lhs, rhs)
}

/// `χ(X^u) = Σ_{p,q} (−1)^{p+q} Σ_{v⪯u} ξ_p^q(v)`.
pub fn check_global_euler(g: &GradeData) -> Comparison {
    let lhs = (0..=g.d as i64).map(|q| sign(q as usize) * g.h(q)).sum();
    let rhs = g.betti_below.iter().enumerate().map(|(q, &s)| sign(q) * s).sum();
    Comparison::eq(lhs, rhs)
}

/// `dim H_q(X^u) = Σ_j (−1)^j Σ_{v⪯u} ξ_j^q(v)`.
pub fn check_pointwise_dimension(g: &GradeData, q: i64) -> Comparison {
    let rhs = if q < 0 { 0 } else { g.betti_below.get(q as usize).copied().unwrap_or(0) };
    Comparison::eq(g.h(q), rhs)
}

/// The lower bound in terms of Betti tables and spectral differential ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub critical: i64,
    pub bound: i64,
    pub bound_without_remainder: i64,
    pub remainder: i64,
    /// `c_q ≥ bound`.
    pub with_remainder: Comparison,
    /// `c_q ≥ bound − R`.
    pub without_remainder: Comparison,
    /// `bound = ξ_0^q − Σ_{i≥1} dim E^n_{i,q−i} − rank merge_{q−1} + dim E^n_{0,q−1}`.
    pub spectral_form: Comparison,
    /// `R ≥ 0`.
    pub remainder_nonnegative: Comparison,
}

pub fn remainder(g: &GradeData, q: i64) -> i64 {
    let n = g.n as i64;
    let mut total = 0;
    for r in 2..n {
        let ru = r as usize;
        for i in 1..r {
            total += g.rk(ru, i, q - i);
        }
        for i in r + 1..n {
            total += g.rk(ru, i, q - i);
        }
        for i in 1..n {
            total += g.rk(ru, i + r, q - i - r + 1);
        }
    }
    total
}

pub fn lower_bound(g: &GradeData, q: i64) -> LowerBound {
    let n = g.n as i64;
    let base = g.xi(0, q) + g.xi(1, q - 1) - (1..n).map(|i| g.xi(i + 1, q - i)).sum::<i64>();
    let r = remainder(g, q);
    let bound = base + r;
    let nn = g.n;
    let spectral = g.xi(0, q) - (1..n).map(|i| g.e(nn, i, q - i)).sum::<i64>() - g.merge(q - 1)
        + g.e(nn, 0, q - 1);
    LowerBound {
        critical: g.c(q),
        bound,
        bound_without_remainder: base,
        remainder: r,
        with_remainder: Comparison::ge(g.c(q), bound),
        without_remainder: Comparison::ge(g.c(q), base),
        spectral_form: Comparison::eq(bound, spectral),
        remainder_nonnegative: Comparison::ge(r, 0),
    }
}

/// `c_q ≤ Σ_{i=0}^n ξ_i^{q−i}`.
pub fn upper_bound(g: &GradeData, q: i64) -> Comparison {
    let bound = (0..=g.n as i64).map(|i| g.xi(i, q - i)).sum();
    Comparison::le(g.c(q), bound)
}

/// `rank i_q ≤ rank merge_q + dim H_q(∪) − rank ε̄_q`.
pub fn check_image_bound(g: &GradeData, q: i64) -> Comparison {
    Comparison::le(g.inclusion(q), g.merge(q) + g.h_union(q) - g.epsilon(q))
}

/// `dim H_q(∪) ≤ rank merge_q + Σ_{i=1}^n ξ_i^{q−i+1}`, an equality for `n ≤ 2`.
pub fn check_union_bound(g: &GradeData, q: i64) -> Comparison {
    let rhs = g.merge(q) + (1..=g.n as i64).map(|i| g.xi(i, q - i + 1)).sum::<i64>();
    if g.n <= 2 {
        Comparison::eq(g.h_union(q), rhs)
    } else {
        Comparison::le(g.h_union(q), rhs)
    }
}

/// `c_q = (dim H_q(X^u) − rank i_q) + (dim H_{q−1}(∪) − rank i_{q−1})`.
pub fn check_coker_ker(g: &GradeData, q: i64) -> Comparison {
    Comparison::eq(g.c(q), g.h(q) - g.inclusion(q) + g.h_union(q - 1) - g.inclusion(q - 1))
}

/// Alternating inequality on the long exact sequence of
/// `(X^u, ∪_j X^{u−e_j})`, truncated at every depth `0..=dim X + 1`.
pub fn check_subadditivity(g: &GradeData) -> Vec<Comparison> {
    (0..=g.d as i64 + 1)
        .map(|depth| {
            let mut ac = 0;
            let mut b = 0;
            for i in 0..=depth {
                let s = sign((depth + i) as usize);
                ac += s * (g.h_union(i) + g.c(i));
                b += s * g.h(i);
            }
            Comparison::ge(ac, b)
        })
        .collect()
}

/// All comparisons at one degree `q`.
#[derive(Debug, Clone, Serialize)]
pub struct DegreeReport {
    pub q: i64,
    pub critical: i64,
    /// `ξ_p^q(u)` for `p = 0..=n`.
    pub betti: Vec<i64>,
    pub homology: i64,
    pub union_homology: i64,
    pub merge_rank: i64,
    pub inclusion_rank: i64,
    pub epsilon_rank: i64,
    pub strong: Comparison,
    pub weak: Comparison,
    pub lower: LowerBound,
    pub upper: Comparison,
    pub image_bound: Comparison,
    pub union_bound: Comparison,
    pub coker_ker: Comparison,
    pub pointwise_dimension: Comparison,
}

#[derive(Debug, Clone, Serialize)]
pub struct PageSummary {
    /// `dims[r][p][q] = dim E^r_{p,q}`.
    pub dims: Vec<Vec<Vec<usize>>>,
    /// `ranks[r][p][q] = rank d^r_{p,q}`.
    pub ranks: Vec<Vec<Vec<usize>>>,
    pub total_homology: Vec<usize>,
    pub mismatches: Vec<PageMismatch>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GradeReport {
    pub grade: String,
    pub entering_cells: usize,
    pub degrees: Vec<DegreeReport>,
    pub relative_euler: Comparison,
    pub global_euler: Comparison,
    /// Strong inequality at `q = dim X + 1` must be an equality.
    pub strong_top_equality: Comparison,
    pub subadditivity: Vec<Comparison>,
    pub pages: PageSummary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub grade: String,
    pub check: String,
    pub q: Option<i64>,
    pub lhs: i64,
    pub rhs: i64,
}

impl GradeReport {
    pub fn build(g: &GradeData) -> Self {
        let top = g.d as i64 + 1;
        let degrees = (0..=top)
            .map(|q| DegreeReport {
                q,
                critical: g.c(q),
                betti: (0..=g.n as i64).map(|p| g.xi(p, q)).collect(),
                homology: g.h(q),
                union_homology: g.h_union(q),
                merge_rank: g.merge(q),
                inclusion_rank: g.inclusion(q),
                epsilon_rank: g.epsilon(q),
                strong: check_strong(g, q),
                weak: check_weak(g, q),
                lower: lower_bound(g, q),
                upper: upper_bound(g, q),
                image_bound: check_image_bound(g, q),
                union_bound: check_union_bound(g, q),
                coker_ker: check_coker_ker(g, q),
                pointwise_dimension: check_pointwise_dimension(g, q),
            })
            .collect();
        let strong_top = check_strong(g, top);
        let mut mismatches = Vec::new();
        mismatches.extend(spectral::check_page_recursion(&g.pages));
        mismatches.extend(spectral::check_e1_is_truncated_koszul(&g.pages, &g.koszul));
        mismatches.extend(spectral::check_e2_dims(&g.pages, &g.koszul));
        mismatches.extend(spectral::check_convergence(&g.pages, &g.union_homology));
        mismatches.extend(spectral::check_einfty0(&g.pages, &g.epsilon));
        mismatches.extend(spectral::check_total_homology(&g.pages, &g.union_homology));
        mismatches.extend(spectral::check_sandwich(&g.pages));
        GradeReport {
            grade: g.u.to_string(),
            entering_cells: g.entering,
            degrees,
            relative_euler: check_relative_euler(g),
            global_euler: check_global_euler(g),
            strong_top_equality: Comparison::eq(strong_top.lhs, strong_top.rhs),
            subadditivity: check_subadditivity(g),
            pages: PageSummary {
                dims: g.pages.dims.clone(),
                ranks: g.pages.ranks.clone(),
                total_homology: g.pages.total_homology.clone(),
                mismatches,
            },
        }
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut push = |check: &str, q: Option<i64>, c: &Comparison| {
            if !c.holds {
                out.push(Violation {
                    grade: self.grade.clone(),
                    check: check.to_string(),
                    q,
                    lhs: c.lhs,
                    rhs: c.rhs,
                });
            }
        };
        for d in &self.degrees {
            let q = Some(d.q);
            push("strong", q, &d.strong);
            push("weak", q, &d.weak);
            push("lower", q, &d.lower.with_remainder);
            push("lower_without_remainder", q, &d.lower.without_remainder);
            push("lower_spectral_form", q, &d.lower.spectral_form);
            push("remainder_nonnegative", q, &d.lower.remainder_nonnegative);
            push("upper", q, &d.upper);
            push("image_bound", q, &d.image_bound);
            push("union_bound", q, &d.union_bound);
            push("coker_ker", q, &d.coker_ker);
            push("pointwise_dimension", q, &d.pointwise_dimension);
        }
        push("relative_euler", None, &self.relative_euler);
        push("global_euler", None, &self.global_euler);
        push("strong_top_equality", None, &self.strong_top_equality);
        for (depth, c) in self.subadditivity.iter().enumerate() {
            push("subadditivity", Some(depth as i64), c);
        }
        for m in &self.pages.mismatches {
            out.push(Violation {
                grade: self.grade.clone(),
                check: format!("{}[r={},p={}]", m.check, m.r, m.p),
                q: Some(m.q),
                lhs: m.found,
                rhs: m.expected,
            });
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Meta {
    pub n: usize,
    pub cells: usize,
    pub dim: usize,
    pub field: u32,
    pub grid_min: String,
    pub grid_max: String,
    pub grades: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Aggregates {
    /// `Σ_u χ(X^u, ∪_j X^{u−e_j})` over the grid.
    pub relative_euler_sum: i64,
    /// `χ(V_q) = Σ_p (−1)^p Σ_u ξ_p^q(u)`, by degree.
    pub module_euler: Vec<i64>,
    /// `Σ_q (−1)^q χ(V_q)`.
    pub module_euler_sum: i64,
    pub equal: Comparison,
}

#[derive(Debug, Clone, Serialize)]
pub struct KoszulTrace {
    pub q: usize,
    pub dims: Vec<usize>,
    /// Rows of each `d_i`, `i = 1..=n`.
    pub differentials: Vec<Vec<Vec<u32>>>,
}

/// Data needed to reproduce a failed check by hand.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub grade: String,
    pub check: String,
    pub filtration: String,
    pub koszul: Vec<KoszulTrace>,
    pub pages: PageSummary,
    pub homology: Vec<usize>,
    pub union_homology: Vec<usize>,
    pub critical: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub status: String,
    pub checked_grades: usize,
    pub violations: Vec<Violation>,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FiltrationReport {
    pub meta: Meta,
    pub grades: Vec<GradeReport>,
    pub aggregates: Aggregates,
    pub verdict: Verdict,
}

impl FiltrationReport {
    pub fn passed(&self) -> bool {
        self.verdict.violations.is_empty()
    }

    /// Pretty JSON with lexicographically sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    pub fn grade(&self, u: &Grade) -> Option<&GradeReport> {
        let key = u.to_string();
        self.grades.iter().find(|g| g.grade == key)
    }
}

fn counterexample(filt: &MultiFiltration, g: &GradeData, report: &GradeReport, check: &str) -> Counterexample {
    Counterexample {
        grade: g.u.to_string(),
        check: check.to_string(),
        filtration: crate::io::write_portable(filt),
        koszul: g
            .koszul
            .iter()
            .map(|k| KoszulTrace {
                q: k.q,
                dims: (0..=k.n()).map(|i| k.dim(i)).collect(),
                differentials: k
                    .differentials
                    .iter()
                    .map(|m| (0..m.rows()).map(|r| m.row(r).to_vec()).collect())
                    .collect(),
            })
            .collect(),
        pages: report.pages.clone(),
        homology: g.homology.clone(),
        union_homology: g.union_homology.clone(),
        critical: g.critical.clone(),
    }
}

/// Every check at every grid grade and every `q ∈ [0, dim X + 1]`.
///
/// With `strict`, the report stops at the first grade (in grid order) with a
/// violation and carries a counterexample bundle for it.
pub fn full_report(filt: &MultiFiltration, strict: bool) -> Result<FiltrationReport> {
    let module = PersistenceModule::new(filt)?;
    let table = BettiTable::compute(&module)?;
    let grid = filt.evaluation_grid()?;
    let (lo, hi) = filt.bounds()?;
    let computed: Vec<(GradeData, GradeReport)> = grid
        .par_iter()
        .map(|u| {
            let g = GradeData::compute(&module, &table, u)?;
            let r = GradeReport::build(&g);
            Ok((g, r))
        })
        .collect::<Result<_>>()?;

    let mut grades = Vec::with_capacity(computed.len());
    let mut violations = Vec::new();
    let mut bundle = None;
    for (g, r) in &computed {
        let v = r.violations();
        grades.push(r.clone());
        if !v.is_empty() && strict {
            bundle = Some(counterexample(filt, g, r, &v[0].check));
            violations.extend(v);
            break;
        }
        violations.extend(v);
    }

    let d = filt.complex().dim();
    let relative_euler_sum = computed.iter().map(|(_, r)| r.relative_euler.lhs).sum();
    let module_euler: Vec<i64> = (0..=d as i64)
        .map(|q| {
            grid.iter()
                .map(|u| (0..=filt.n()).map(|p| sign(p) * table.get(p, q, u) as i64).sum::<i64>())
                .sum()
        })
        .collect();
    let module_euler_sum = module_euler.iter().enumerate().map(|(q, &x)| sign(q) * x).sum();
    let aggregates = Aggregates {
        relative_euler_sum,
        module_euler,
        module_euler_sum,
        equal: Comparison::eq(relative_euler_sum, module_euler_sum),
    };
    if !aggregates.equal.holds && bundle.is_none() {
        violations.push(Violation {
            grade: String::new(),
            check: "aggregate_euler".to_string(),
            q: None,
            lhs: relative_euler_sum,
            rhs: module_euler_sum,
        });
    }
    let status = if violations.is_empty() { "PASS" } else { "FAIL" };
    let checked_grades = grades.len();
    Ok(FiltrationReport {
        meta: Meta {
            n: filt.n(),
            cells: filt.complex().len(),
            dim: d,
            field: filt.field().characteristic(),
            grid_min: lo.coords().iter().map(|c| (c - 1).to_string()).collect::<Vec<_>>().join(","),
            grid_max: hi.to_string(),
            grades: grid.len(),
        },
        grades,
        aggregates,
        verdict: Verdict {
            status: status.to_string(),
            checked_grades,
            violations,
            counterexample: bundle,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::generators::{random_filtration, RandomSpec};

    fn single_vertex() -> MultiFiltration {
        let list = vec![(vec![0], Grade::new(vec![0, 0]))];
        MultiFiltration::from_graded_simplices(PrimeField::binary(), 2, &list).unwrap().0
    }

    #[test]
    fn single_vertex_passes() {
        let f = single_vertex();
        let report = full_report(&f, false).unwrap();
        assert!(report.passed());
        assert_eq!(report.meta.grades, 4);
        let top = report.grade(&Grade::new(vec![0, 0])).unwrap();
        assert_eq!(top.degrees[0].critical, 1);
        assert_eq!(top.degrees[0].betti, vec![1, 0, 0]);
        assert!(top.degrees[0].lower.with_remainder.tight());
        let below = report.grade(&Grade::new(vec![-1, 0])).unwrap();
        assert_eq!(below.degrees[0].critical, 0);
    }

    #[test]
    fn comparisons() {
        assert!(Comparison::ge(2, 1).holds && !Comparison::ge(1, 2).holds);
        assert_eq!(Comparison::le(1, 3).slack, 2);
        assert!(Comparison::eq(4, 4).tight());
    }

    #[test]
    fn random_filtrations_pass() {
        for seed in 0..30 {
            let f = random_filtration(&RandomSpec::suite(seed), PrimeField::new(3).unwrap()).unwrap();
            let report = full_report(&f, true).unwrap();
            assert!(report.passed(), "seed {seed}: {:?}", report.verdict.violations);
            assert_eq!(report.aggregates.relative_euler_sum, report.aggregates.module_euler_sum);
        }
    }

    #[test]
    fn json_keys_are_sorted() {
        let json = full_report(&single_vertex(), false).unwrap().to_json();
        let a = json.find("\"aggregates\"").unwrap();
        let g = json.find("\"grades\"").unwrap();
        let m = json.find("\"meta\"").unwrap();
        let v = json.find("\"verdict\"").unwrap();
        assert!(a < g && g < m && m < v);
    }

    #[test]
    fn remainder_sums_the_listed_differentials() {
        let ex = crate::generators::build_example(crate::generators::ExampleName::Sphere(4), PrimeField::binary()).unwrap();
        let module = PersistenceModule::new(&ex.filtration).unwrap();
        let table = BettiTable::compute(&module).unwrap();
        let mut g = GradeData::compute(&module, &table, &ex.top).unwrap();
        assert!((0..5).all(|q| remainder(&g, q) == 0));
        let top_q = g.pages.top_q;
        g.pages.ranks = vec![vec![vec![0; top_q + 1]; 4]; 5];
        g.pages.ranks[2][3][0] = 1;
        g.pages.ranks[3][3][0] = 5;
        g.pages.ranks[2][2][1] = 7;
        assert_eq!((remainder(&g, 2), remainder(&g, 3)), (1, 1));
        g.pages.ranks[2][1][1] = 4;
        assert_eq!(remainder(&g, 2), 1 + 4);
        assert_eq!(remainder(&g, 4), 0);
    }
}
