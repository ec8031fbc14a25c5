//! Finite cell complexes with an explicit incidence function, their
//! subcomplexes, and homology over `F_p`.
//!
//! Cells are kept sorted by `(dimension, id)`; every matrix in the crate uses
//! that order. Chains of any subcomplex are written in the coordinates of the
//! whole complex (one coordinate per `q`-cell of `X`), so the chain map of an
//! inclusion is the identity and induced maps reduce to coordinate solves.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::field::{
    induced_map_between, kernel_basis, rank, LinalgError, Matrix, PrimeField, QuotientBasis,
    Subspace,
};

pub type CellId = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("duplicate cell id {0}")]
    DuplicateId(CellId),
    #[error("cell {cell} lists unknown face {face}")]
    UnknownFace { cell: CellId, face: CellId },
    #[error("cell set is not closed under taking faces (cell {cell} misses face {face})")]
    NotClosed { cell: CellId, face: CellId },
    #[error("not a subcomplex of the given complex")]
    NotASubcomplex,
    #[error("simplex with no vertices")]
    EmptySimplex,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub id: CellId,
    pub dim: usize,
}

/// Input record for [`CellComplex::new`]: a cell and its boundary as
/// `(face id, coefficient)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellSpec {
    pub id: CellId,
    pub dim: usize,
    pub boundary: Vec<(CellId, i64)>,
}

#[derive(Debug, Clone)]
pub struct CellComplex {
    field: PrimeField,
    cells: Vec<Cell>,
    index: HashMap<CellId, usize>,
    /// Nonzero incidences `(face position, coefficient)` of each cell.
    faces: Vec<Vec<(usize, u32)>>,
    /// `dim_offsets[q]` is the position of the first `q`-cell.
    dim_offsets: Vec<usize>,
}

/// Violations of the two incidence conditions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Pairs `(tau, sigma)` with nonzero incidence but `dim tau != dim sigma + 1`.
    pub degree_violations: Vec<(CellId, CellId)>,
    /// Pairs `(tau, sigma)` with `sum_rho k(tau, rho) k(rho, sigma) != 0`.
    pub square_violations: Vec<(CellId, CellId)>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.degree_violations.is_empty() && self.square_violations.is_empty()
    }
}

impl CellComplex {
    pub fn new(field: PrimeField, specs: Vec<CellSpec>) -> Result<Self, ComplexError> {
        let mut cells: Vec<Cell> = specs.iter().map(|s| Cell { id: s.id, dim: s.dim }).collect();
        cells.sort_by_key(|c| (c.dim, c.id));
        let mut index = HashMap::with_capacity(cells.len());
        for (pos, c) in cells.iter().enumerate() {
            if index.insert(c.id, pos).is_some() {
                return Err(ComplexError::DuplicateId(c.id));
            }
        }
        let mut faces = vec![Vec::new(); cells.len()];
        for spec in &specs {
            let pos = index[&spec.id];
            let mut acc: BTreeMap<usize, u32> = BTreeMap::new();
            for &(face, coeff) in &spec.boundary {
                let fpos = *index
                    .get(&face)
                    .ok_or(ComplexError::UnknownFace { cell: spec.id, face })?;
                let e = acc.entry(fpos).or_insert(0);
                *e = field.add(*e, field.reduce(coeff));
            }
            faces[pos] = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        }
        let max_dim = cells.last().map_or(0, |c| c.dim);
        let mut dim_offsets = vec![0; max_dim + 2];
        for q in 0..=max_dim + 1 {
            dim_offsets[q] = cells.partition_point(|c| c.dim < q);
        }
        Ok(Self { field, cells, index, faces, dim_offsets })
    }

    /// Simplicial complex with alternating-sign incidences.
    ///
    /// Vertices are ordered by label. Missing faces are added and listed in
    /// the returned [`SimplicialComplex`]. Cell ids are assigned in
    /// `(dimension, sorted vertex list)` order starting from 0.
    pub fn from_simplices(
        field: PrimeField,
        simplices: &[Vec<CellId>],
    ) -> Result<SimplicialComplex, ComplexError> {
        let mut given: BTreeSet<Vec<CellId>> = BTreeSet::new();
        for s in simplices {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                return Err(ComplexError::EmptySimplex);
            }
            given.insert(s);
        }
        let mut all = given.clone();
        let mut stack: Vec<Vec<CellId>> = given.iter().cloned().collect();
        while let Some(s) = stack.pop() {
            if s.len() == 1 {
                continue;
            }
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                if all.insert(face.clone()) {
                    stack.push(face);
                }
            }
        }
        let added: Vec<Vec<CellId>> = all.difference(&given).cloned().collect();
        let mut ordered: Vec<Vec<CellId>> = all.into_iter().collect();
        ordered.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let ids: HashMap<&Vec<CellId>, CellId> =
            ordered.iter().enumerate().map(|(i, s)| (s, i as CellId)).collect();
        let specs = ordered
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let boundary = if s.len() == 1 {
                    Vec::new()
                } else {
                    (0..s.len())
                        .map(|k| {
                            let mut face = s.clone();
                            face.remove(k);
                            let sign = if k % 2 == 0 { 1 } else { -1 };
                            (ids[&face], sign)
                        })
                        .collect()
                };
                CellSpec { id: i as CellId, dim: s.len() - 1, boundary }
            })
            .collect();
        let complex = CellComplex::new(field, specs)?;
        let mut added = added;
        added.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(SimplicialComplex { complex, simplices: ordered, added })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, pos: usize) -> Cell {
        self.cells[pos]
    }

    pub fn position(&self, id: CellId) -> Option<usize> {
        self.index.get(&id).copied()
    }

    /// Maximum cell dimension (0 for an empty complex).
    pub fn dim(&self) -> usize {
        self.cells.last().map_or(0, |c| c.dim)
    }

    /// Number of `q`-cells.
    pub fn count(&self, q: usize) -> usize {
        if q + 1 >= self.dim_offsets.len() {
            return 0;
        }
        self.dim_offsets[q + 1] - self.dim_offsets[q]
    }

    /// Positions of all `q`-cells.
    pub fn positions_of_dim(&self, q: usize) -> std::ops::Range<usize> {
        if q + 1 >= self.dim_offsets.len() {
            return 0..0;
        }
        self.dim_offsets[q]..self.dim_offsets[q + 1]
    }

    /// Index of the cell at `pos` among the cells of its dimension.
    #[inline]
    pub fn index_in_dim(&self, pos: usize) -> usize {
        pos - self.dim_offsets[self.cells[pos].dim]
    }

    /// Nonzero incidences `(face position, coefficient)` of the cell at `pos`.
    pub fn faces(&self, pos: usize) -> &[(usize, u32)] {
        &self.faces[pos]
    }

    /// Incidence `k(tau, sigma)` by cell id.
    pub fn incidence(&self, tau: CellId, sigma: CellId) -> u32 {
        let (Some(t), Some(s)) = (self.position(tau), self.position(sigma)) else {
            return 0;
        };
        self.faces[t].iter().find(|&&(f, _)| f == s).map_or(0, |&(_, c)| c)
    }

    pub fn validate(&self) -> ValidationReport {
        let f = self.field;
        let mut report = ValidationReport::default();
        for (pos, faces) in self.faces.iter().enumerate() {
            let tau = self.cells[pos];
            for &(fp, _) in faces {
                let sigma = self.cells[fp];
                if tau.dim != sigma.dim + 1 {
                    report.degree_violations.push((tau.id, sigma.id));
                }
            }
            let mut sq: BTreeMap<usize, u32> = BTreeMap::new();
            for &(rho, a) in faces {
                for &(sigma, b) in &self.faces[rho] {
                    let e = sq.entry(sigma).or_insert(0);
                    *e = f.add(*e, f.mul(a, b));
                }
            }
            for (sigma, v) in sq {
                if v != 0 {
                    report.square_violations.push((tau.id, self.cells[sigma].id));
                }
            }
        }
        report
    }

    pub fn full(&self) -> Subcomplex {
        Subcomplex { mask: vec![true; self.len()] }
    }

    pub fn empty_subcomplex(&self) -> Subcomplex {
        Subcomplex { mask: vec![false; self.len()] }
    }

    /// Subcomplex from cell ids; errors if an id is unknown or the set is
    /// not closed under faces.
    pub fn subcomplex_from_ids(&self, ids: &[CellId]) -> Result<Subcomplex, ComplexError> {
        let mut mask = vec![false; self.len()];
        for &id in ids {
            let pos = self.position(id).ok_or(ComplexError::NotASubcomplex)?;
            mask[pos] = true;
        }
        let sub = Subcomplex { mask };
        self.check_closed(&sub)?;
        Ok(sub)
    }

    /// Closure of a set of cells under taking faces.
    pub fn closure(&self, positions: impl IntoIterator<Item = usize>) -> Subcomplex {
        let mut mask = vec![false; self.len()];
        let mut stack: Vec<usize> = positions.into_iter().collect();
        while let Some(p) = stack.pop() {
            if mask[p] {
                continue;
            }
            mask[p] = true;
            stack.extend(self.faces[p].iter().map(|&(f, _)| f));
        }
        Subcomplex { mask }
    }

    pub fn check_closed(&self, sub: &Subcomplex) -> Result<(), ComplexError> {
        if sub.mask.len() != self.len() {
            return Err(ComplexError::NotASubcomplex);
        }
        for pos in sub.positions() {
            for &(f, _) in &self.faces[pos] {
                if !sub.mask[f] {
                    return Err(ComplexError::NotClosed {
                        cell: self.cells[pos].id,
                        face: self.cells[f].id,
                    });
                }
            }
        }
        Ok(())
    }

    /// Matrix of `d_q : C_q(S) -> C_{q-1}(S)` in the local cell order of `sub`.
    pub fn boundary_matrix(&self, sub: &Subcomplex, q: usize) -> Matrix {
        let cols: Vec<usize> = self.positions_of_dim(q).filter(|&p| sub.mask[p]).collect();
        let rows: Vec<usize> = if q == 0 {
            Vec::new()
        } else {
            self.positions_of_dim(q - 1).filter(|&p| sub.mask[p]).collect()
        };
        self.incidence_block(&rows, &cols)
    }

    /// Incidence block with the given face rows and cell columns.
    pub(crate) fn incidence_block(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let row_of: HashMap<usize, usize> = rows.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut m = Matrix::zeros(self.field, rows.len(), cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for &(f, k) in &self.faces[c] {
                if let Some(&i) = row_of.get(&f) {
                    m.set(i, j, k);
                }
            }
        }
        m
    }

    /// Homology of a subcomplex in every degree `0..=dim X`, with bases in
    /// the chain coordinates of the whole complex.
    pub fn homology(&self, sub: &Subcomplex) -> Result<HomologyData, ComplexError> {
        let top = self.dim();
        let f = self.field;
        let local: Vec<Vec<usize>> = (0..=top + 1)
            .map(|q| self.positions_of_dim(q).filter(|&p| sub.mask[p]).collect())
            .collect();
        let embed = |q: usize, v: &[u32]| -> Vec<u32> {
            let mut g = vec![0; self.count(q)];
            for (i, &x) in v.iter().enumerate() {
                g[self.index_in_dim(local[q][i])] = x;
            }
            g
        };
        let mut degrees = Vec::with_capacity(top + 1);
        for q in 0..=top {
            let ambient = self.count(q);
            let d_q = if q == 0 {
                Matrix::zeros(f, 0, local[0].len())
            } else {
                self.incidence_block(&local[q - 1], &local[q])
            };
            let cycles_local = kernel_basis(&d_q);
            let cycles: Vec<Vec<u32>> =
                cycles_local.basis().columns().map(|v| embed(q, &v)).collect();
            let d_next = self.incidence_block(&local[q], &local[q + 1]);
            let bds: Vec<Vec<u32>> = d_next.columns().map(|v| embed(q, &v)).collect();
            let cycles = Subspace::span(f, ambient, &cycles);
            let boundaries = Subspace::span(f, ambient, &bds);
            let quotient = QuotientBasis::new(&cycles, &boundaries)?;
            degrees.push(DegreeHomology { cycles, boundaries, quotient });
        }
        Ok(HomologyData { field: f, degrees })
    }

    /// Homology dimensions of the subcomplex, degrees `0..=dim X`.
    pub fn betti_numbers(&self, sub: &Subcomplex) -> Vec<usize> {
        self.quotient_homology_dims(&sub.mask)
    }

    /// Dimensions of `H_q(X, A)` from the quotient chain complex on the cells
    /// of `x` not in `a`.
    pub fn relative_homology_dims(
        &self,
        x: &Subcomplex,
        a: &Subcomplex,
    ) -> Result<Vec<usize>, ComplexError> {
        self.check_closed(x)?;
        self.check_closed(a)?;
        if !a.is_subset_of(x) {
            return Err(ComplexError::NotASubcomplex);
        }
        let mask: Vec<bool> = x.mask.iter().zip(&a.mask).map(|(&i, &j)| i && !j).collect();
        Ok(self.quotient_homology_dims(&mask))
    }

    /// Homology dimensions of the chain complex spanned by the masked cells
    /// with the restricted boundary (rows outside the mask dropped).
    fn quotient_homology_dims(&self, mask: &[bool]) -> Vec<usize> {
        let top = self.dim();
        let local: Vec<Vec<usize>> = (0..=top + 1)
            .map(|q| self.positions_of_dim(q).filter(|&p| mask[p]).collect())
            .collect();
        let ranks: Vec<usize> = (0..=top + 1)
            .map(|q| if q == 0 { 0 } else { rank(&self.incidence_block(&local[q - 1], &local[q])) })
            .collect();
        (0..=top).map(|q| local[q].len() - ranks[q] - ranks[q + 1]).collect()
    }
}

/// Output of [`CellComplex::from_simplices`].
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    pub complex: CellComplex,
    /// Sorted vertex list of each cell, indexed by cell id.
    pub simplices: Vec<Vec<CellId>>,
    /// Faces that were missing from the input and added automatically.
    pub added: Vec<Vec<CellId>>,
}

impl SimplicialComplex {
    pub fn id_of(&self, vertices: &[CellId]) -> Option<CellId> {
        let mut v = vertices.to_vec();
        v.sort_unstable();
        self.simplices.iter().position(|s| *s == v).map(|i| i as CellId)
    }
}

/// A set of cells of a fixed parent complex, as a mask over cell positions.
///
/// Closure under faces is not enforced by the type; constructors on
/// [`CellComplex`] and the filtration module only produce closed sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subcomplex {
    mask: Vec<bool>,
}

impl Subcomplex {
    pub fn from_mask(mask: Vec<bool>) -> Self {
        Self { mask }
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.mask[pos]
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&b| b)
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn is_subset_of(&self, other: &Subcomplex) -> bool {
        self.mask.len() == other.mask.len()
            && self.mask.iter().zip(&other.mask).all(|(&a, &b)| !a || b)
    }

    pub fn union(&self, other: &Subcomplex) -> Subcomplex {
        Subcomplex { mask: self.mask.iter().zip(&other.mask).map(|(&a, &b)| a || b).collect() }
    }

    pub fn intersection(&self, other: &Subcomplex) -> Subcomplex {
        Subcomplex { mask: self.mask.iter().zip(&other.mask).map(|(&a, &b)| a && b).collect() }
    }
}

/// Cycles, boundaries and a representative basis of `H_q` for one degree.
#[derive(Debug, Clone)]
pub struct DegreeHomology {
    pub cycles: Subspace,
    pub boundaries: Subspace,
    pub quotient: QuotientBasis,
}

impl DegreeHomology {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
}

/// Homology of a subcomplex in degrees `0..=dim X`.
#[derive(Debug, Clone)]
pub struct HomologyData {
    field: PrimeField,
    degrees: Vec<DegreeHomology>,
}

impl HomologyData {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.len().saturating_sub(1)
    }

    pub fn degree(&self, q: usize) -> Option<&DegreeHomology> {
        self.degrees.get(q)
    }

    /// `dim H_q`, zero beyond the top degree.
    pub fn dim(&self, q: usize) -> usize {
        self.degrees.get(q).map_or(0, DegreeHomology::dim)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(DegreeHomology::dim).collect()
    }

    /// Representative cycles of `H_q`, in whole-complex chain coordinates.
    pub fn representatives(&self, q: usize) -> &[Vec<u32>] {
        self.degrees.get(q).map_or(&[], |d| d.quotient.representatives())
    }

    /// Matrix of the map `H_q(self) -> H_q(target)` induced by inclusion of
    /// the underlying subcomplexes (the caller guarantees containment).
    pub fn map_into(&self, target: &HomologyData, q: usize) -> Result<Matrix, LinalgError> {
        match (self.degrees.get(q), target.degrees.get(q)) {
            (Some(a), Some(b)) => induced_map_between(self.field, None, &a.quotient, &b.quotient),
            (Some(a), None) => Ok(Matrix::zeros(self.field, 0, a.dim())),
            (None, Some(b)) => Ok(Matrix::zeros(self.field, b.dim(), 0)),
            (None, None) => Ok(Matrix::zeros(self.field, 0, 0)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> PrimeField {
        PrimeField::binary()
    }

    fn boundary_of_tetrahedron(field: PrimeField) -> SimplicialComplex {
        let faces: Vec<Vec<CellId>> =
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
        CellComplex::from_simplices(field, &faces).unwrap()
    }

    #[test]
    fn single_vertex() {
        let s = CellComplex::from_simplices(f2(), &[vec![7]]).unwrap();
        assert_eq!(s.complex.len(), 1);
        assert!(s.complex.faces(0).is_empty());
        assert_eq!(s.complex.boundary_matrix(&s.complex.full(), 0).rows(), 0);
        assert_eq!(s.complex.betti_numbers(&s.complex.full()), vec![1]);
    }

    #[test]
    fn one_edge_signs() {
        let f3 = PrimeField::new(3).unwrap();
        let s = CellComplex::from_simplices(f3, &[vec![0, 1], vec![0], vec![1]]).unwrap();
        let c = &s.complex;
        let ab = s.id_of(&[0, 1]).unwrap();
        let a = s.id_of(&[0]).unwrap();
        let b = s.id_of(&[1]).unwrap();
        assert_eq!(c.incidence(ab, b), 1);
        assert_eq!(c.incidence(ab, a), 2); // -1 mod 3
        let s2 = CellComplex::from_simplices(f2(), &[vec![0, 1]]).unwrap();
        assert_eq!(s2.complex.boundary_matrix(&s2.complex.full(), 1).column(0), vec![1, 1]);
        assert_eq!(s2.added, vec![vec![0], vec![1]]);
    }

    #[test]
    fn sphere_from_tetrahedron_boundary() {
        for p in [2, 3] {
            let s = boundary_of_tetrahedron(PrimeField::new(p).unwrap());
            let c = &s.complex;
            assert_eq!((c.count(0), c.count(1), c.count(2)), (4, 6, 4));
            assert!(c.validate().is_ok());
            let d2 = c.boundary_matrix(&c.full(), 2);
            assert_eq!((d2.rows(), d2.cols()), (6, 4));
            assert_eq!(rank(&d2), 3);
            assert_eq!(c.betti_numbers(&c.full()), vec![1, 0, 1]);
            assert_eq!(c.homology(&c.full()).unwrap().dims(), vec![1, 0, 1]);
        }
    }

    #[test]
    fn two_points() {
        let s = CellComplex::from_simplices(f2(), &[vec![0], vec![1]]).unwrap();
        assert_eq!(s.complex.homology(&s.complex.full()).unwrap().dims(), vec![2]);
    }

    #[test]
    fn empty_subcomplex_has_zero_homology() {
        let s = boundary_of_tetrahedron(f2());
        let c = &s.complex;
        assert_eq!(c.homology(&c.empty_subcomplex()).unwrap().dims(), vec![0, 0, 0]);
    }

    #[test]
    fn degree_violation_is_reported() {
        let specs = vec![
            CellSpec { id: 0, dim: 0, boundary: vec![] },
            CellSpec { id: 1, dim: 0, boundary: vec![(0, 1)] },
        ];
        let c = CellComplex::new(f2(), specs).unwrap();
        let r = c.validate();
        assert_eq!(r.degree_violations, vec![(1, 0)]);
        assert!(r.square_violations.is_empty());
    }

    #[test]
    fn square_violation_is_reported() {
        // A triangle over F_3 with one face sign flipped: d(abc) = bc + ac + ab.
        // Then dd(abc) at vertex a is k(abc,ac)k(ac,a) + k(abc,ab)k(ab,a) = -1 - 1 != 0.
        let f3 = PrimeField::new(3).unwrap();
        let specs = vec![
            CellSpec { id: 0, dim: 0, boundary: vec![] },
            CellSpec { id: 1, dim: 0, boundary: vec![] },
            CellSpec { id: 2, dim: 0, boundary: vec![] },
            CellSpec { id: 10, dim: 1, boundary: vec![(1, 1), (0, -1)] },
            CellSpec { id: 11, dim: 1, boundary: vec![(2, 1), (0, -1)] },
            CellSpec { id: 12, dim: 1, boundary: vec![(2, 1), (1, -1)] },
            CellSpec { id: 20, dim: 2, boundary: vec![(12, 1), (11, 1), (10, 1)] },
        ];
        let c = CellComplex::new(f3, specs).unwrap();
        let r = c.validate();
        assert!(r.degree_violations.is_empty());
        assert!(!r.square_violations.is_empty());
        assert!(r.square_violations.iter().all(|&(t, _)| t == 20));
    }

    #[test]
    fn unknown_faces_and_duplicates_are_rejected() {
        let dup = vec![
            CellSpec { id: 0, dim: 0, boundary: vec![] },
            CellSpec { id: 0, dim: 0, boundary: vec![] },
        ];
        assert_eq!(CellComplex::new(f2(), dup).err(), Some(ComplexError::DuplicateId(0)));
        let unknown = vec![CellSpec { id: 1, dim: 1, boundary: vec![(5, 1)] }];
        assert_eq!(
            CellComplex::new(f2(), unknown).err(),
            Some(ComplexError::UnknownFace { cell: 1, face: 5 })
        );
    }

    #[test]
    fn relative_homology_cases() {
        let s = boundary_of_tetrahedron(f2());
        let c = &s.complex;
        let x = c.full();
        assert_eq!(c.relative_homology_dims(&x, &x).unwrap(), vec![0, 0, 0]);

        let p = CellComplex::from_simplices(f2(), &[vec![0]]).unwrap().complex;
        assert_eq!(p.relative_homology_dims(&p.full(), &p.empty_subcomplex()).unwrap(), vec![1]);

        // (S^2, one closed triangle) has H_2 = F and nothing else.
        let tri = c.closure([c.position(s.id_of(&[0, 1, 2]).unwrap()).unwrap()]);
        assert_eq!(c.relative_homology_dims(&x, &tri).unwrap(), vec![0, 0, 1]);
        assert_eq!(
            c.relative_homology_dims(&tri, &x).err(),
            Some(ComplexError::NotASubcomplex)
        );
    }

    #[test]
    fn circle_class_dies_in_disk() {
        let s = CellComplex::from_simplices(f2(), &[vec![0, 1, 2]]).unwrap();
        let c = &s.complex;
        let circle = c.subcomplex_from_ids(
            &[vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2], vec![1, 2]]
                .iter()
                .map(|v| s.id_of(v).unwrap())
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let hc = c.homology(&circle).unwrap();
        let hd = c.homology(&c.full()).unwrap();
        assert_eq!(hc.dim(1), 1);
        let m = hc.map_into(&hd, 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 1));
        let m0 = hc.map_into(&hd, 0).unwrap();
        assert_eq!(m0, Matrix::identity(f2(), 1));
    }

    #[test]
    fn not_closed_is_rejected() {
        let s = CellComplex::from_simplices(f2(), &[vec![0, 1]]).unwrap();
        let edge = s.id_of(&[0, 1]).unwrap();
        assert!(matches!(
            s.complex.subcomplex_from_ids(&[edge]),
            Err(ComplexError::NotClosed { .. })
        ));
    }
}
