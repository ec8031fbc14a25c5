//! Sharpness examples for the Betti-table bounds and seeded random
//! filtrations.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::CellId;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::filtration::{Grade, MultiFiltration};
use crate::morse::FiltrationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExampleName {
    LowerI,
    LowerII,
    LowerIII,
    UpperI,
    UpperII,
    UpperIII,
    /// Sphere `∂Δ^n` filtered over `n` parameters, `n ∈ {1, 2, 3, 4}`.
    Sphere(usize),
}

impl ExampleName {
    pub const ALL: [ExampleName; 9] = [
        ExampleName::LowerI,
        ExampleName::LowerII,
        ExampleName::LowerIII,
        ExampleName::UpperI,
        ExampleName::UpperII,
        ExampleName::UpperIII,
        ExampleName::Sphere(1),
        ExampleName::Sphere(2),
        ExampleName::Sphere(3),
    ];
}

impl fmt::Display for ExampleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExampleName::LowerI => write!(f, "lower_i"),
            ExampleName::LowerII => write!(f, "lower_ii"),
            ExampleName::LowerIII => write!(f, "lower_iii"),
            ExampleName::UpperI => write!(f, "upper_i"),
            ExampleName::UpperII => write!(f, "upper_ii"),
            ExampleName::UpperIII => write!(f, "upper_iii"),
            ExampleName::Sphere(n) => write!(f, "sphere_{n}"),
        }
    }
}

impl FromStr for ExampleName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(n) = s.strip_prefix("sphere_").and_then(|n| n.parse::<usize>().ok()) {
            if (1..=4).contains(&n) {
                return Ok(ExampleName::Sphere(n));
            }
        }
        ExampleName::ALL
            .iter()
            .find(|e| e.to_string() == s)
            .copied()
            .ok_or_else(|| Error::ParametersOutOfRange(format!("unknown example '{s}'")))
    }
}

/// A quantity evaluated by the engine at a grade.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    /// `c_q(u)`.
    Critical { q: usize },
    /// `ξ_p^q(u)`.
    Betti { p: usize, q: usize },
    /// `c_q(u)` minus the lower bound with remainder.
    LowerSlack { q: usize },
    /// Upper bound minus `c_q(u)`.
    UpperSlack { q: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub quantity: Quantity,
    pub grade: Grade,
    pub value: i64,
}

#[derive(Debug, Clone)]
pub struct Example {
    pub name: ExampleName,
    pub filtration: MultiFiltration,
    /// The grade at which the example is read off.
    pub top: Grade,
    pub expected: Vec<Expectation>,
}

type Graded = Vec<(Vec<CellId>, Vec<i64>)>;

fn build(field: PrimeField, n: usize, simplices: Graded) -> Result<MultiFiltration> {
    let list: Vec<(Vec<CellId>, Grade)> =
        simplices.into_iter().map(|(s, g)| (s, Grade::new(g))).collect();
    let (filt, added) = MultiFiltration::from_graded_simplices(field, n, &list)?;
    debug_assert!(added.is_empty());
    Ok(filt)
}

/// All non-empty subsets of `vertices`.
fn faces_of(vertices: &[CellId]) -> Vec<Vec<CellId>> {
    (1..=vertices.len())
        .flat_map(|k| vertices.iter().copied().combinations(k))
        .collect()
}

/// `∂Δ^n` on vertices `0..=n` with apex `n`: the simplices avoiding the apex
/// enter at 0, and `τ ∪ {n}` enters at `Σ_{j∈τ} e_{n−j}` (1-based `e`).
fn staggered_sphere(n: usize) -> Graded {
    let base: Vec<CellId> = (0..n as CellId).collect();
    let apex = n as CellId;
    let mut out: Graded = faces_of(&base).into_iter().map(|s| (s, vec![0; n])).collect();
    out.push((vec![apex], vec![0; n]));
    for tau in faces_of(&base) {
        if tau.len() == n {
            continue;
        }
        let mut g = vec![0; n];
        for &j in &tau {
            g[n - 1 - j as usize] += 1;
        }
        let mut s = tau.clone();
        s.push(apex);
        out.push((s, g));
    }
    out
}

/// `∂Δ^3` with the 1-skeleton and the face `012` at 0 and the faces `013`,
/// `023`, `123` entering one step below `(1,1,1)` in each direction.
fn skeleton_sphere() -> Graded {
    let mut out: Graded = Vec::new();
    for v in 0..4 {
        out.push((vec![v], vec![0, 0, 0]));
    }
    for e in (0..4).combinations(2) {
        out.push((e, vec![0, 0, 0]));
    }
    out.push((vec![0, 1, 2], vec![0, 0, 0]));
    out.push((vec![0, 1, 3], vec![0, 1, 1]));
    out.push((vec![0, 2, 3], vec![1, 0, 1]));
    out.push((vec![1, 2, 3], vec![1, 1, 0]));
    out
}

/// Suspension of `equator` (given with all its faces) with poles entering
/// at `top`; the equator enters at 0.
fn suspension(equator: &[Vec<CellId>], poles: [CellId; 2], top: &[i64]) -> Graded {
    let zero = vec![0; top.len()];
    let mut out: Graded = equator.iter().map(|s| (s.clone(), zero.clone())).collect();
    for pole in poles {
        out.push((vec![pole], top.to_vec()));
        for s in equator {
            let mut c = s.clone();
            c.push(pole);
            out.push((c, top.to_vec()));
        }
    }
    out
}

fn expect(quantity: Quantity, top: &Grade, value: i64) -> Expectation {
    Expectation { quantity, grade: top.clone(), value }
}

pub fn build_example(name: ExampleName, field: PrimeField) -> Result<Example> {
    use Quantity::*;
    let top3 = Grade::new(vec![1, 1, 1]);
    let (filtration, top, expected) = match name {
        ExampleName::LowerI | ExampleName::UpperI => {
            let mut cells = staggered_sphere(3);
            if name == ExampleName::UpperI {
                cells.push((vec![0, 1, 2, 3], vec![1, 1, 1]));
                let e = vec![
                    expect(Critical { q: 3 }, &top3, 1),
                    expect(Betti { p: 3, q: 0 }, &top3, 1),
                    expect(UpperSlack { q: 3 }, &top3, 0),
                ];
                (build(field, 3, cells)?, top3, e)
            } else {
                let e = vec![
                    expect(Critical { q: 2 }, &top3, 0),
                    expect(Betti { p: 0, q: 2 }, &top3, 1),
                    expect(Betti { p: 3, q: 0 }, &top3, 1),
                    expect(LowerSlack { q: 2 }, &top3, 0),
                ];
                (build(field, 3, cells)?, top3, e)
            }
        }
        ExampleName::LowerII | ExampleName::UpperII => {
            let mut cells = skeleton_sphere();
            if name == ExampleName::UpperII {
                cells.push((vec![0, 1, 2, 3], vec![1, 1, 1]));
                let e = vec![
                    expect(Critical { q: 3 }, &top3, 1),
                    expect(Betti { p: 2, q: 1 }, &top3, 1),
                    expect(UpperSlack { q: 3 }, &top3, 0),
                ];
                (build(field, 3, cells)?, top3, e)
            } else {
                let e = vec![
                    expect(Critical { q: 2 }, &top3, 0),
                    expect(Betti { p: 0, q: 2 }, &top3, 1),
                    expect(Betti { p: 2, q: 1 }, &top3, 1),
                    expect(LowerSlack { q: 2 }, &top3, 0),
                ];
                (build(field, 3, cells)?, top3, e)
            }
        }
        ExampleName::LowerIII => {
            let top = Grade::new(vec![1, 0, 0]);
            let square: Vec<Vec<CellId>> =
                vec![vec![0], vec![1], vec![2], vec![3], vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]];
            let cells = suspension(&square, [4, 5], top.coords());
            let e = vec![
                expect(Critical { q: 2 }, &top, 2),
                expect(Betti { p: 0, q: 2 }, &top, 1),
                expect(Betti { p: 1, q: 1 }, &top, 1),
                expect(LowerSlack { q: 2 }, &top, 0),
            ];
            (build(field, 3, cells)?, top, e)
        }
        ExampleName::UpperIII => {
            let top = Grade::new(vec![1, 0, 0]);
            let sphere: Vec<Vec<CellId>> = faces_of(&[0, 1, 2, 3])
                .into_iter()
                .filter(|s| s.len() < 4)
                .collect();
            let cells = suspension(&sphere, [4, 5], top.coords());
            let e = vec![
                expect(Critical { q: 3 }, &top, 2),
                expect(Betti { p: 0, q: 3 }, &top, 1),
                expect(Betti { p: 1, q: 2 }, &top, 1),
                expect(UpperSlack { q: 3 }, &top, 0),
            ];
            (build(field, 3, cells)?, top, e)
        }
        ExampleName::Sphere(n) => {
            if !(1..=4).contains(&n) {
                return Err(Error::ParametersOutOfRange(format!("sphere needs n in 1..=4, got {n}")));
            }
            let top = Grade::new(vec![1; n]);
            let cells = if n == 1 {
                vec![(vec![0], vec![0]), (vec![1], vec![1])]
            } else {
                staggered_sphere(n)
            };
            let e = vec![expect(LowerSlack { q: n - 1 }, &top, 0)];
            (build(field, n, cells)?, top, e)
        }
    };
    Ok(Example { name, filtration, top, expected })
}

impl Expectation {
    /// The engine's value of this quantity in `report`, if the grade was
    /// evaluated.
    pub fn measure(&self, report: &FiltrationReport) -> Option<i64> {
        let g = report.grade(&self.grade)?;
        let degree = |q: usize| g.degrees.get(q);
        match self.quantity {
            Quantity::Critical { q } => degree(q).map(|d| d.critical),
            Quantity::Betti { p, q } => degree(q).map(|d| d.betti.get(p).copied().unwrap_or(0)),
            Quantity::LowerSlack { q } => degree(q).map(|d| d.lower.with_remainder.slack),
            Quantity::UpperSlack { q } => degree(q).map(|d| d.upper.slack),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Critical { q } => write!(f, "c_{q}"),
            Quantity::Betti { p, q } => write!(f, "xi_{p}^{q}"),
            Quantity::LowerSlack { q } => write!(f, "lower_slack_{q}"),
            Quantity::UpperSlack { q } => write!(f, "upper_slack_{q}"),
        }
    }
}

/// Disjoint union of two filtrations.
pub fn disjoint_union(a: &MultiFiltration, b: &MultiFiltration) -> Result<MultiFiltration> {
    Ok(a.disjoint_union(b)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSpec {
    pub seed: u64,
    pub n: usize,
    pub max_cells: usize,
    pub max_dim: usize,
    /// Vertex grades are drawn from `[0, grade_max]^n`.
    pub grade_max: i64,
}

impl RandomSpec {
    /// Parameters used by the property suites: `n = 1 + seed mod 3`, at most
    /// 40 cells, dimension at most 3, grades in `[0, 3]^n`.
    pub fn suite(seed: u64) -> Self {
        Self { seed, n: 1 + (seed % 3) as usize, max_cells: 40, max_dim: 3, grade_max: 3 }
    }
}

const MAX_VERTICES: usize = 10;

/// A random simplicial complex filtered by the coordinatewise maximum of
/// random vertex grades.
pub fn random_filtration(spec: &RandomSpec, field: PrimeField) -> Result<MultiFiltration> {
    if !(1..=4).contains(&spec.n) {
        return Err(Error::ParametersOutOfRange(format!("n must be in 1..=4, got {}", spec.n)));
    }
    if spec.max_cells == 0 || spec.max_cells > 10_000 {
        return Err(Error::ParametersOutOfRange(format!("max_cells must be in 1..=10000, got {}", spec.max_cells)));
    }
    if spec.max_dim > 6 {
        return Err(Error::ParametersOutOfRange(format!("max_dim must be at most 6, got {}", spec.max_dim)));
    }
    if !(0..=1000).contains(&spec.grade_max) {
        return Err(Error::ParametersOutOfRange(format!("grade_max must be in 0..=1000, got {}", spec.grade_max)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let vertices = rng.gen_range(1..=spec.max_cells.min(MAX_VERTICES));
    let density: f64 = rng.gen_range(0.25..0.85);
    let mut present: BTreeSet<Vec<CellId>> = (0..vertices as CellId).map(|v| vec![v]).collect();
    let mut budget = spec.max_cells - vertices;
    for k in 1..=spec.max_dim {
        for s in (0..vertices as CellId).combinations(k + 1) {
            if budget == 0 {
                break;
            }
            let closed = (0..s.len()).all(|i| {
                let mut f = s.clone();
                f.remove(i);
                present.contains(&f)
            });
            if closed && rng.gen_bool(density) {
                present.insert(s);
                budget -= 1;
            }
        }
    }
    let vertex_grades: Vec<Vec<i64>> = (0..vertices)
        .map(|_| (0..spec.n).map(|_| rng.gen_range(0..=spec.grade_max)).collect())
        .collect();
    let graded: Vec<(Vec<CellId>, Grade)> = present
        .into_iter()
        .map(|s| {
            let g = s
                .iter()
                .map(|&v| Grade::new(vertex_grades[v as usize].clone()))
                .reduce(|a, b| a.join(&b))
                .expect("non-empty simplex");
            (s, g)
        })
        .collect();
    Ok(MultiFiltration::from_graded_simplices(field, spec.n, &graded)?.0)
}
