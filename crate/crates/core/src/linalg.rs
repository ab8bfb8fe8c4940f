//! Sparse reduced row echelon forms over any [`Field`], kernels, and coordinate
//! solves against a fixed list of vectors.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact_arith::{Field, GaussRational, QI};
use crate::exterior::{BasisIndex, Form};

pub type SparseVec<E> = BTreeMap<usize, E>;

/// Reduced row echelon basis: every row has pivot coefficient one and is zero
/// on the pivot columns of all other rows. Pivot = first nonzero column.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    rows: Vec<SparseVec<F::Elem>>,
    pivots: BTreeMap<usize, usize>,
}

impl<F: Field + Clone> Echelon<F> {
    pub fn new(field: F) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F::Elem>] {
        &self.rows
    }

    /// Pivot column to row index.
    pub fn pivots(&self) -> &BTreeMap<usize, usize> {
        &self.pivots
    }

    fn axpy(&self, v: &mut SparseVec<F::Elem>, c: &F::Elem, row: &SparseVec<F::Elem>) {
        for (k, x) in row {
            let e = v.entry(*k).or_insert_with(|| self.field.zero());
            self.field.sub_mul(e, c, x);
            if self.field.is_zero(e) {
                v.remove(k);
            }
        }
    }

    pub fn reduce(&self, v: &mut SparseVec<F::Elem>) {
        let hits: Vec<usize> = v
            .keys()
            .filter(|k| self.pivots.contains_key(k))
            .copied()
            .collect();
        for p in hits {
            if let Some(c) = v.get(&p).cloned() {
                self.axpy(v, &c, &self.rows[self.pivots[&p]]);
            }
        }
    }

    pub fn contains(&self, v: &SparseVec<F::Elem>) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_empty()
    }

    /// Reduces and inserts; returns the new pivot, or `None` if `v` was already in the span.
    pub fn insert(&mut self, mut v: SparseVec<F::Elem>) -> Option<usize> {
        v.retain(|_, x| !self.field.is_zero(x));
        self.reduce(&mut v);
        let (&p, lead) = v.iter().next()?;
        let inv = self.field.inv(lead).expect("nonzero lead");
        for x in v.values_mut() {
            *x = self.field.mul(x, &inv);
        }
        for k in 0..self.rows.len() {
            if let Some(c) = self.rows[k].get(&p).cloned() {
                let mut row = std::mem::take(&mut self.rows[k]);
                self.axpy(&mut row, &c, &v);
                self.rows[k] = row;
            }
        }
        self.pivots.insert(p, self.rows.len());
        self.rows.push(v);
        Some(p)
    }
}

pub fn rank<F: Field + Clone>(
    field: F,
    vectors: impl IntoIterator<Item = SparseVec<F::Elem>>,
) -> usize {
    let mut e = Echelon::new(field);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Kernel of the matrix with the given rows, as vectors over `0..ncols`.
pub fn kernel<F: Field + Clone>(
    field: F,
    ncols: usize,
    rows: impl IntoIterator<Item = SparseVec<F::Elem>>,
) -> Vec<SparseVec<F::Elem>> {
    let mut e = Echelon::new(field.clone());
    for r in rows {
        e.insert(r);
    }
    (0..ncols)
        .filter(|c| !e.pivots.contains_key(c))
        .map(|free| {
            let mut x = SparseVec::new();
            x.insert(free, field.one());
            for (&p, &ri) in &e.pivots {
                if let Some(v) = e.rows[ri].get(&free) {
                    x.insert(p, field.neg(v));
                }
            }
            x
        })
        .collect()
}

const AUG: usize = 1 << 24;

/// Expresses vectors as combinations of a fixed independent list.
#[derive(Clone, Debug)]
pub struct SpanSolver<F: Field> {
    echelon: Echelon<F>,
    len: usize,
}

impl<F: Field + Clone> SpanSolver<F> {
    /// Fails if the vectors are dependent; the error names the first redundant index.
    pub fn new(field: F, vectors: &[SparseVec<F::Elem>]) -> Result<Self> {
        let mut echelon = Echelon::new(field.clone());
        for (k, v) in vectors.iter().enumerate() {
            debug_assert!(v.keys().all(|&c| c < AUG));
            let mut w = v.clone();
            w.insert(AUG + k, field.one());
            match echelon.insert(w) {
                Some(p) if p < AUG => {}
                _ => {
                    return Err(Error::Dependent(format!(
                        "vector {k} lies in the span of the previous ones"
                    )))
                }
            }
        }
        Ok(SpanSolver {
            echelon,
            len: vectors.len(),
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn solve(&self, v: &SparseVec<F::Elem>) -> Option<Vec<F::Elem>> {
        let f = &self.echelon.field;
        let mut w = v.clone();
        self.echelon.reduce(&mut w);
        if w.keys().any(|&k| k < AUG) {
            return None;
        }
        let mut x = vec![f.zero(); self.len];
        for (k, c) in w {
            x[k - AUG] = f.neg(&c);
        }
        Some(x)
    }
}

pub fn form_to_sparse(f: &Form) -> SparseVec<GaussRational> {
    f.terms().map(|(m, c)| (m.index(), c.clone())).collect()
}

pub fn sparse_to_form(v: &SparseVec<GaussRational>) -> Form {
    v.iter()
        .map(|(k, c)| (BasisIndex::new(*k as u16).unwrap(), c.clone()))
        .collect()
}

pub fn rank_of_forms<'a>(forms: impl IntoIterator<Item = &'a Form>) -> usize {
    rank(QI, forms.into_iter().map(form_to_sparse))
}

/// Coordinates of forms in a fixed basis of forms.
#[derive(Clone, Debug)]
pub struct FormSolver {
    solver: SpanSolver<QI>,
}

impl FormSolver {
    pub fn new(basis: &[Form]) -> Result<Self> {
        let v: Vec<_> = basis.iter().map(form_to_sparse).collect();
        Ok(FormSolver {
            solver: SpanSolver::new(QI, &v)?,
        })
    }

    pub fn solve(&self, f: &Form) -> Option<Vec<GaussRational>> {
        self.solver.solve(&form_to_sparse(f))
    }

    pub fn len(&self) -> usize {
        self.solver.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solver.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{rat, PrimeField, Q};

    fn sv(x: &[(usize, i64)]) -> SparseVec<crate::exact_arith::Rational> {
        x.iter().map(|&(k, v)| (k, rat(v, 1))).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let rows = vec![
            sv(&[(0, 1), (1, 2), (2, 3)]),
            sv(&[(0, 2), (1, 4), (2, 6)]),
            sv(&[(1, 1), (2, 1)]),
        ];
        assert_eq!(rank(Q, rows.clone()), 2);
        let ker = kernel(Q, 3, rows.clone());
        assert_eq!(ker.len(), 1);
        for r in &rows {
            let dot: crate::exact_arith::Rational = r
                .iter()
                .map(|(k, v)| v * ker[0].get(k).cloned().unwrap_or_default())
                .sum();
            assert_eq!(dot, rat(0, 1));
        }
    }

    #[test]
    fn solver_recovers_coordinates() {
        let basis = vec![sv(&[(0, 1), (3, 1)]), sv(&[(1, 1), (3, -1)]), sv(&[(2, 5)])];
        let s = SpanSolver::new(Q, &basis).unwrap();
        let target = sv(&[(0, 2), (1, -3), (2, 10), (3, 5)]);
        assert_eq!(
            s.solve(&target).unwrap(),
            vec![rat(2, 1), rat(-3, 1), rat(2, 1)]
        );
        assert!(s.solve(&sv(&[(3, 1)])).is_none());
        let dep = vec![sv(&[(0, 1)]), sv(&[(0, 3)])];
        assert!(SpanSolver::new(Q, &dep).is_err());
    }

    #[test]
    fn modular_echelon_matches_rational() {
        let f = PrimeField::new(13).unwrap();
        let rows: Vec<SparseVec<u64>> = vec![
            [(0, 1), (1, 2)].into_iter().collect(),
            [(0, 3), (1, 6)].into_iter().collect(),
            [(1, 5)].into_iter().collect(),
        ];
        assert_eq!(rank(f, rows), 2);
    }
}
