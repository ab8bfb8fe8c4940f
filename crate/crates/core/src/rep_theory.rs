//! Decomposition of the exterior algebra under the rotation triple
//! `e = iJ1 - J2`, `f = iJ1 + J2`, `h = 2iJ3`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::{GaussRational, QI};
use crate::exterior::{BasisIndex, Form};
use crate::linalg::{kernel, sparse_to_form, FormSolver, SparseVec};
use crate::operators::{Canonical, Operator};

/// Multiplicity of `ρ_k` (dimension `2k + 1`) inside `Λ^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotypicalTable {
    pub multiplicity: [[usize; 4]; 10],
}

impl IsotypicalTable {
    /// `sum_k mult(d,k)(2k+1) = C(9,d)` for each degree.
    pub fn dimensions_consistent(&self) -> bool {
        (0..10).all(|d| {
            let s: usize = (0..4).map(|k| self.multiplicity[d][k] * (2 * k + 1)).sum();
            s == binomial(9, d)
        })
    }

    /// Total number of highest weight vectors of each type.
    pub fn hw_dimensions(&self) -> [usize; 4] {
        let mut t = [0; 4];
        for row in &self.multiplicity {
            for k in 0..4 {
                t[k] += row[k];
            }
        }
        t
    }

    /// `(even, odd)` split of each highest weight space.
    pub fn hw_parity_split(&self) -> [(usize, usize); 4] {
        let mut t = [(0, 0); 4];
        for (d, row) in self.multiplicity.iter().enumerate() {
            for k in 0..4 {
                if d % 2 == 0 {
                    t[k].0 += row[k];
                } else {
                    t[k].1 += row[k];
                }
            }
        }
        t
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("degree,rho0,rho1,rho2,rho3\n");
        for (d, r) in self.multiplicity.iter().enumerate() {
            s.push_str(&format!("{d},{},{},{},{}\n", r[0], r[1], r[2], r[3]));
        }
        s
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn masks_of_degree(d: u32) -> Vec<BasisIndex> {
    BasisIndex::all().filter(|m| m.degree() == d).collect()
}

/// Rows of `op - shift·Id` restricted to `Λ^d`, indexed by position in `dom`.
fn restricted_rows(
    op: &Operator,
    dom: &[BasisIndex],
    shift: &GaussRational,
) -> Vec<SparseVec<GaussRational>> {
    let index = |m: BasisIndex| dom.binary_search(&m).ok();
    let mut rows: std::collections::BTreeMap<usize, SparseVec<GaussRational>> = Default::default();
    for (c, m) in dom.iter().enumerate() {
        let mut img = op.apply_basis(*m);
        if !shift.is_zero() {
            img.add_term(*m, &-shift);
        }
        for (r, v) in img.terms() {
            let ri = index(r).expect("operator preserves degree");
            rows.entry(ri).or_default().insert(c, v.clone());
        }
    }
    rows.into_values().collect()
}

/// Highest weight vectors of weight `2k` in `Λ^d`: `ker e ∩ ker(h - 2k)`.
pub fn highest_weight_vectors(d: u32, k: usize) -> Vec<Form> {
    let c = Canonical::get();
    let dom = masks_of_degree(d);
    let mut rows = restricted_rows(&c.sl2_e, &dom, &GaussRational::zero());
    rows.extend(restricted_rows(
        &c.sl2_h,
        &dom,
        &GaussRational::from_int(2 * k as i64),
    ));
    kernel(QI, dom.len(), rows)
        .into_iter()
        .map(|v| {
            let w: SparseVec<GaussRational> =
                v.into_iter().map(|(i, x)| (dom[i].index(), x)).collect();
            sparse_to_form(&w)
        })
        .collect()
}

pub fn isotypical_table() -> IsotypicalTable {
    let rows: Vec<[usize; 4]> = (0..10u32)
        .into_par_iter()
        .map(|d| {
            let mut r = [0; 4];
            for (k, slot) in r.iter_mut().enumerate() {
                *slot = highest_weight_vectors(d, k).len();
            }
            r
        })
        .collect();
    let mut multiplicity = [[0; 4]; 10];
    multiplicity.copy_from_slice(&rows);
    IsotypicalTable { multiplicity }
}

/// Echelon-canonical basis of `HW_k`, split by degree parity.
#[derive(Clone, Debug)]
pub struct HWSpace {
    pub type_k: usize,
    pub even_basis: Vec<Form>,
    pub odd_basis: Vec<Form>,
}

impl HWSpace {
    pub fn dim(&self) -> usize {
        self.even_basis.len() + self.odd_basis.len()
    }

    /// Even vectors first, then odd.
    pub fn basis(&self) -> Vec<Form> {
        self.even_basis
            .iter()
            .chain(&self.odd_basis)
            .cloned()
            .collect()
    }
}

pub fn highest_weight_space(k: usize) -> Result<HWSpace> {
    if k > 3 {
        return Err(Error::OutOfRange(format!("HW type {k}")));
    }
    let per_degree: Vec<Vec<Form>> = (0..10u32)
        .into_par_iter()
        .map(|d| highest_weight_vectors(d, k))
        .collect();
    let mut s = HWSpace {
        type_k: k,
        even_basis: Vec::new(),
        odd_basis: Vec::new(),
    };
    for (d, v) in per_degree.into_iter().enumerate() {
        if d % 2 == 0 {
            s.even_basis.extend(v);
        } else {
            s.odd_basis.extend(v);
        }
    }
    Ok(s)
}

/// Dense complex matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<GaussRational>,
}

impl GaussMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GaussMatrix {
            rows,
            cols,
            data: vec![GaussRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = GaussMatrix::zeros(n, n);
        for k in 0..n {
            m.data[k * n + k] = GaussRational::one();
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn nonzero_positions(&self) -> Vec<(usize, usize)> {
        (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .filter(|&(r, c)| !self.get(r, c).is_zero())
            .collect()
    }

    pub fn submatrix(
        &self,
        rows: std::ops::Range<usize>,
        cols: std::ops::Range<usize>,
    ) -> GaussMatrix {
        let mut m = GaussMatrix::zeros(rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }
}

/// Matrices of operators in a fixed basis of an invariant subspace.
#[derive(Clone, Debug)]
pub struct Restrictor {
    basis: Vec<Form>,
    solver: FormSolver,
}

impl Restrictor {
    pub fn new(basis: Vec<Form>) -> Result<Self> {
        let solver = FormSolver::new(&basis)?;
        Ok(Restrictor { basis, solver })
    }

    pub fn basis(&self) -> &[Form] {
        &self.basis
    }

    pub fn coordinates(&self, f: &Form) -> Option<Vec<GaussRational>> {
        self.solver.solve(f)
    }

    /// `M[r][c]` is the coefficient of basis vector `r` in `φ(basis vector c)`.
    pub fn restrict(&self, phi: &Operator) -> Result<GaussMatrix> {
        let n = self.basis.len();
        let mut m = GaussMatrix::zeros(n, n);
        for (c, b) in self.basis.iter().enumerate() {
            let x = self
                .solver
                .solve(&phi.apply(b))
                .ok_or(Error::NotInvariant { index: c })?;
            for (r, v) in x.into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        Ok(m)
    }
}

pub fn restrict_operator(phi: &Operator, basis: &[Form]) -> Result<GaussMatrix> {
    Restrictor::new(basis.to_vec())?.restrict(phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_degrees() {
        let r = |d: u32| -> [usize; 4] {
            let mut a = [0; 4];
            for (k, s) in a.iter_mut().enumerate() {
                *s = highest_weight_vectors(d, k).len();
            }
            a
        };
        assert_eq!(r(0), [1, 0, 0, 0]);
        assert_eq!(r(1), [0, 3, 0, 0]);
        assert_eq!(r(2), [3, 6, 3, 0]);
    }

    #[test]
    fn w10_is_highest_weight() {
        let c = Canonical::get();
        let w = Form::w(0).unwrap();
        assert!(c.sl2_e.apply(&w).is_zero());
        assert_eq!(c.sl2_h.apply(&w), w.scale(&GaussRational::from_int(2)));
        let hw1 = highest_weight_space(1).unwrap();
        let solver = FormSolver::new(&hw1.basis()).unwrap();
        assert!(solver.solve(&w).is_some());
    }

    #[test]
    fn restrict_identity() {
        let hw3 = highest_weight_space(3).unwrap();
        let m = restrict_operator(&Operator::identity(), &hw3.basis()).unwrap();
        assert_eq!(m, GaussMatrix::identity(8));
        let escape = restrict_operator(&Canonical::get().e[0][0], &hw3.basis());
        assert!(matches!(escape, Err(Error::NotInvariant { .. })));
    }
}
