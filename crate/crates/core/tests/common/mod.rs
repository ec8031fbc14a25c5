#![allow(dead_code)]

use std::collections::HashMap;

use multimorse::field::{rank, Matrix, PrimeField};
use multimorse::filtration::{Grade, MultiFiltration};
use rand::Rng;

/// Births and deaths per `(degree, grade)` from a column reduction of the
/// boundary matrix ordered by entrance value, written without the engine's
/// linear algebra.
#[derive(Debug, Default)]
pub struct Barcode {
    pub births: HashMap<(usize, i64), usize>,
    pub deaths: HashMap<(usize, i64), usize>,
}

fn inverse(a: u64, p: u64) -> u64 {
    let mut result = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

pub fn standard_persistence(filt: &MultiFiltration) -> Barcode {
    assert_eq!(filt.n(), 1);
    let c = filt.complex();
    let p = u64::from(c.field().characteristic());
    let mut order: Vec<usize> = (0..c.len()).collect();
    order.sort_by_key(|&pos| (filt.grade_at(pos).coords()[0], c.cell(pos).dim, pos));
    let index: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &pos)| (pos, i)).collect();
    let value = |i: usize| filt.grade_at(order[i]).coords()[0];
    let dim = |i: usize| c.cell(order[i]).dim;

    let mut columns: Vec<Vec<u64>> = order
        .iter()
        .map(|&pos| {
            let mut col = vec![0u64; order.len()];
            for &(face, k) in c.faces(pos) {
                col[index[&face]] = u64::from(k);
            }
            col
        })
        .collect();
    let low = |col: &[u64]| col.iter().rposition(|&x| x != 0);
    let mut owner: HashMap<usize, usize> = HashMap::new();
    let mut paired = vec![false; order.len()];
    let mut bars = Barcode::default();
    for j in 0..columns.len() {
        while let Some(l) = low(&columns[j]) {
            match owner.get(&l) {
                Some(&k) => {
                    let factor = columns[j][l] * inverse(columns[k][l], p) % p;
                    for r in 0..=l {
                        let sub = factor * columns[k][r] % p;
                        columns[j][r] = (columns[j][r] + p - sub) % p;
                    }
                }
                None => break,
            }
        }
        if let Some(l) = low(&columns[j]) {
            owner.insert(l, j);
            paired[l] = true;
            paired[j] = true;
            if value(l) != value(j) {
                *bars.births.entry((dim(l), value(l))).or_default() += 1;
                *bars.deaths.entry((dim(l), value(j))).or_default() += 1;
            }
        }
    }
    for i in 0..order.len() {
        if !paired[i] {
            *bars.births.entry((dim(i), value(i))).or_default() += 1;
        }
    }
    bars
}

/// `dim H_k(A ∪ B)` for `A = X^{u−e_1}`, `B = X^{u−e_2}` from the
/// Mayer-Vietoris long exact sequence
/// `H_k(A∩B) → H_k(A) ⊕ H_k(B) → H_k(A∪B) → H_{k−1}(A∩B) → …`.
pub fn mayer_vietoris_union(filt: &MultiFiltration, u: &Grade) -> Vec<usize> {
    assert_eq!(filt.n(), 2);
    let c = filt.complex();
    let a = filt.sublevel(&u.minus_e(0));
    let b = filt.sublevel(&u.minus_e(1));
    let ab = a.intersection(&b);
    let (ha, hb, hab) = (c.homology(&a).unwrap(), c.homology(&b).unwrap(), c.homology(&ab).unwrap());
    let field = c.field();
    let phi_rank = |q: usize| -> usize {
        let ia = hab.map_into(&ha, q).unwrap();
        let ib = hab.map_into(&hb, q).unwrap();
        let cols = hab.dim(q);
        let mut m = Matrix::zeros(field, ia.rows() + ib.rows(), cols);
        for j in 0..cols {
            for r in 0..ia.rows() {
                m.set(r, j, ia.get(r, j));
            }
            for r in 0..ib.rows() {
                m.set(ia.rows() + r, j, field.neg(ib.get(r, j)));
            }
        }
        rank(&m)
    };
    (0..=c.dim())
        .map(|k| {
            let coker = ha.dim(k) + hb.dim(k) - phi_rank(k);
            let ker = if k == 0 { 0 } else { hab.dim(k - 1) - phi_rank(k - 1) };
            coker + ker
        })
        .collect()
}

pub fn random_matrix(rng: &mut impl Rng, field: PrimeField, rows: usize, cols: usize) -> Matrix {
    let p = field.characteristic() as i64;
    let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..p)).collect()).collect();
    if rows == 0 {
        return Matrix::zeros(field, 0, cols);
    }
    Matrix::from_rows(field, &data)
}

/// A random matrix of rank at most `r`, so that kernels and images are
/// non-trivial more often than for uniform matrices.
pub fn low_rank_matrix(rng: &mut impl Rng, field: PrimeField, rows: usize, cols: usize) -> Matrix {
    let r = rng.gen_range(0..=rows.min(cols));
    let left = random_matrix(rng, field, rows, r);
    let right = random_matrix(rng, field, r, cols);
    left.mul(&right).unwrap()
}

pub fn fields() -> [PrimeField; 2] {
    [PrimeField::binary(), PrimeField::new(3).unwrap()]
}
