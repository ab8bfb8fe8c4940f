//! Linear operators on the 512-dimensional exterior algebra, stored column-sparse
//! (column = input monomial), and the canonical operators built from the coframe.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::GaussRational;
use crate::exterior::{hodge_sign, wedge_sign, BasisIndex, Form, Pos, Shift, DIM};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl Parity {
    fn sign_exp(self) -> Result<bool> {
        match self {
            Parity::Even => Ok(false),
            Parity::Odd => Ok(true),
            Parity::Mixed => Err(Error::MixedParity),
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Operator {
    cols: Vec<Vec<(u16, GaussRational)>>,
}

impl Default for Operator {
    fn default() -> Self {
        Operator::zero()
    }
}

fn push_col(acc: BTreeMap<u16, GaussRational>) -> Vec<(u16, GaussRational)> {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl Operator {
    pub fn zero() -> Operator {
        Operator {
            cols: vec![Vec::new(); DIM],
        }
    }

    pub fn identity() -> Operator {
        Operator::diagonal(|_| GaussRational::one())
    }

    pub fn diagonal(f: impl Fn(BasisIndex) -> GaussRational) -> Operator {
        let mut op = Operator::zero();
        for m in BasisIndex::all() {
            let v = f(m);
            if !v.is_zero() {
                op.cols[m.index()].push((m.mask(), v));
            }
        }
        op
    }

    /// `(-1)^deg` on every monomial.
    pub fn parity_operator() -> Operator {
        Operator::diagonal(|m| GaussRational::from_int(if m.is_odd() { -1 } else { 1 }))
    }

    /// Builds an operator from `(row, col, value)` triples; repeated positions add up.
    pub fn from_entries<I>(entries: I) -> Operator
    where
        I: IntoIterator<Item = (BasisIndex, BasisIndex, GaussRational)>,
    {
        let mut acc: Vec<BTreeMap<u16, GaussRational>> = vec![BTreeMap::new(); DIM];
        for (r, c, v) in entries {
            *acc[c.index()].entry(r.mask()).or_default() += &v;
        }
        Operator {
            cols: acc.into_iter().map(push_col).collect(),
        }
    }

    /// Operator given by its action on each monomial.
    pub fn from_columns(f: impl Fn(BasisIndex) -> Form) -> Operator {
        let mut op = Operator::zero();
        for m in BasisIndex::all() {
            op.cols[m.index()] = f(m).terms().map(|(r, v)| (r.mask(), v.clone())).collect();
        }
        op
    }

    pub fn entries(&self) -> impl Iterator<Item = (BasisIndex, BasisIndex, &GaussRational)> {
        self.cols.iter().enumerate().flat_map(|(c, col)| {
            col.iter()
                .map(move |(r, v)| (BasisIndex::raw(*r as usize), BasisIndex::raw(c), v))
        })
    }

    pub fn entry(&self, row: BasisIndex, col: BasisIndex) -> GaussRational {
        self.cols[col.index()]
            .iter()
            .find(|(r, _)| *r == row.mask())
            .map(|(_, v)| v.clone())
            .unwrap_or_default()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// Even if every entry joins masks of equal degree parity; the zero operator counts as even.
    pub fn parity(&self) -> Parity {
        let mut seen = [false; 2];
        for (r, c, _) in self.entries() {
            seen[(r.is_odd() != c.is_odd()) as usize] = true;
        }
        match seen {
            [_, false] => Parity::Even,
            [false, true] => Parity::Odd,
            _ => Parity::Mixed,
        }
    }

    /// Common `multidegree(row) - multidegree(col)` of all entries, if there is one.
    pub fn multidegree_shift(&self) -> Option<Shift> {
        let mut it = self
            .entries()
            .map(|(r, c, _)| c.multidegree().shift_to(r.multidegree()));
        let first = it.next()?;
        it.all(|s| s == first).then_some(first)
    }

    pub fn apply(&self, f: &Form) -> Form {
        let mut out = Form::zero();
        for (m, x) in f.terms() {
            for (r, v) in &self.cols[m.index()] {
                out.add_term(BasisIndex::raw(*r as usize), &(v * x));
            }
        }
        out
    }

    pub fn apply_basis(&self, m: BasisIndex) -> Form {
        self.cols[m.index()]
            .iter()
            .map(|(r, v)| (BasisIndex::raw(*r as usize), v.clone()))
            .collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Operator) -> Operator {
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<u16, GaussRational> = BTreeMap::new();
                for (k, v) in col {
                    for (r, w) in &self.cols[*k as usize] {
                        *acc.entry(*r).or_default() += &(w * v);
                    }
                }
                push_col(acc)
            })
            .collect();
        Operator { cols }
    }

    fn combine(&self, other: &Operator, negate: bool) -> Operator {
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut acc: BTreeMap<u16, GaussRational> = a.iter().cloned().collect();
                for (r, v) in b {
                    let e = acc.entry(*r).or_default();
                    if negate {
                        *e -= v;
                    } else {
                        *e += v;
                    }
                }
                push_col(acc)
            })
            .collect();
        Operator { cols }
    }

    pub fn add(&self, other: &Operator) -> Operator {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Operator) -> Operator {
        self.combine(other, true)
    }

    pub fn scale(&self, c: &GaussRational) -> Operator {
        if c.is_zero() {
            return Operator::zero();
        }
        let cols = self
            .cols
            .iter()
            .map(|col| col.iter().map(|(r, v)| (*r, v * c)).collect())
            .collect();
        Operator { cols }
    }

    pub fn neg(&self) -> Operator {
        self.scale(&GaussRational::from_int(-1))
    }

    pub fn times_i(&self) -> Operator {
        self.scale(&GaussRational::i())
    }

    fn transpose_with(
        &self,
        f: impl Fn(BasisIndex, BasisIndex, &GaussRational) -> GaussRational,
    ) -> Operator {
        Operator::from_entries(self.entries().map(|(r, c, v)| (c, r, f(r, c, v))))
    }

    /// Conjugate transpose in the orthonormal monomial basis.
    pub fn plain_adjoint(&self) -> Operator {
        self.transpose_with(|_, _, v| v.conj())
    }

    /// Adjoint for `(φa, b) = (-1)^{|φ| deg a} (a, φ^⋆ b)`:
    /// `φ^⋆[a, b] = (-1)^{|φ| deg a} conj(φ[b, a])`.
    pub fn super_adjoint(&self) -> Result<Operator> {
        let odd = self.parity().sign_exp()?;
        Ok(self.transpose_with(|_, c, v| v.conj().signed(odd && c.is_odd())))
    }

    /// Graded commutator `φψ - (-1)^{|φ||ψ|} ψφ`.
    pub fn superbracket(&self, other: &Operator) -> Result<Operator> {
        let both_odd = self.parity().sign_exp()? && other.parity().sign_exp()?;
        let ab = self.compose(other);
        let ba = other.compose(self);
        Ok(if both_odd { ab.add(&ba) } else { ab.sub(&ba) })
    }

    /// `* ∘ φ ∘ *`.
    pub fn hodge_conjugate(&self) -> Operator {
        self.conjugate_by_involution(|m| (m.complement(), hodge_sign(m.mask())))
    }

    /// Conjugation by an involutive signed permutation of monomials.
    fn conjugate_by_involution(&self, f: impl Fn(BasisIndex) -> (BasisIndex, bool)) -> Operator {
        Operator::from_entries(self.entries().map(|(r, c, v)| {
            let (r2, sr) = f(r);
            let (c2, sc) = f(c);
            (r2, c2, v.clone().signed(sr ^ sc))
        }))
    }

    /// Super adjoint for the form that is `(x, y)` on even and `i (x, y)` on odd vectors:
    /// `<Tx, y> = (-1)^{|T| deg x} <x, T^† y>`.
    pub fn dagger(&self) -> Result<Operator> {
        let odd = self.parity().sign_exp()?;
        Ok(self.transpose_with(|y, x, v| {
            // entry T[y, x] becomes T^†[x, y] = conj(c(y) T[y, x] (-1)^{|T| deg x} / c(x))
            let mut z = v.clone().signed(odd && x.is_odd());
            match (y.is_odd(), x.is_odd()) {
                (true, false) => z = z.times_i(),
                (false, true) => z = -z.times_i(),
                _ => {}
            }
            z.conj()
        }))
    }

    /// Sorted `row col scalar` lines.
    pub fn dump(&self) -> String {
        let mut e: Vec<_> = self.entries().collect();
        e.sort_by_key(|(r, c, _)| (*r, *c));
        let mut s = String::new();
        for (r, c, v) in e {
            writeln!(s, "{} {} {}", r.mask(), c.mask(), v).unwrap();
        }
        s
    }

    pub fn parse_dump(text: &str) -> Result<Operator> {
        let mut entries = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let mut it = line.split_whitespace();
            let mut mask = || -> Result<BasisIndex> {
                let t = it.next().ok_or_else(|| Error::Parse(line.to_string()))?;
                BasisIndex::new(t.parse().map_err(|_| Error::Parse(line.to_string()))?)
            };
            let r = mask()?;
            let c = mask()?;
            let v: GaussRational = it.collect::<String>().parse()?;
            entries.push((r, c, v));
        }
        Ok(Operator::from_entries(entries))
    }
}

impl std::fmt::Debug for Operator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Operator(nnz={})", self.nnz())
    }
}

/// `E_ij`: wedge with `v_ij` from the left.
pub fn wedge_op(p: Pos) -> Operator {
    let b = p.bit();
    Operator::from_entries(BasisIndex::all().filter(|m| m.mask() & b == 0).map(|m| {
        let neg = (m.mask() & (b - 1)).count_ones() % 2 == 1;
        (
            BasisIndex::raw((m.mask() | b) as usize),
            m,
            GaussRational::one().signed(neg),
        )
    }))
}

/// `I_ij`: contraction with the dual of `v_ij`.
pub fn contract_op(p: Pos) -> Operator {
    let b = p.bit();
    Operator::from_entries(BasisIndex::all().filter(|m| m.mask() & b != 0).map(|m| {
        let neg = (m.mask() & (b - 1)).count_ones() % 2 == 1;
        (
            BasisIndex::raw((m.mask() ^ b) as usize),
            m,
            GaussRational::one().signed(neg),
        )
    }))
}

/// Left wedge multiplication by a form.
pub fn wedge_by(f: &Form) -> Operator {
    Operator::from_columns(|m| f.wedge(&Form::monomial(m, GaussRational::one())))
}

pub fn hodge_operator() -> Operator {
    Operator::from_columns(|m| Form::monomial(m, GaussRational::one()).hodge_star())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanonicalName {
    E(usize, usize),
    I(usize, usize),
    L(usize),
    V(usize),
    J(usize),
}

pub fn build_canonical(name: CanonicalName) -> Result<Operator> {
    let idx = |j: usize| {
        if j > 2 {
            Err(Error::OutOfRange(format!("index {j}")))
        } else {
            Ok(j)
        }
    };
    Ok(match name {
        CanonicalName::E(i, j) => wedge_op(Pos::new(i, j)?),
        CanonicalName::I(i, j) => contract_op(Pos::new(i, j)?),
        CanonicalName::L(j) => match idx(j)? {
            0 => wedge_by(&Form::omega_d()),
            1 => wedge_by(&Form::omega_2()).neg(),
            _ => wedge_by(&Form::omega_1()),
        },
        CanonicalName::V(j) => wedge_by(&Form::vol_w(idx(j)?)?),
        CanonicalName::J(k) => {
            if !(1..=3).contains(&k) {
                return Err(Error::OutOfRange(format!("J{k}")));
            }
            rotation_generator(k)
        }
    })
}

/// Even derivation extending the infinitesimal rotation `J_k` of the `i` index:
/// J1: v2 -> v3, v3 -> -v2; J2: v3 -> v1, v1 -> -v3; J3: v1 -> v2, v2 -> -v1.
fn rotation_generator(k: usize) -> Operator {
    let (a, b) = match k {
        1 => (2, 3),
        2 => (3, 1),
        _ => (1, 2),
    };
    let mut op = Operator::zero();
    for j in 0..3 {
        let pa = Pos::new(a, j).unwrap();
        let pb = Pos::new(b, j).unwrap();
        op = op
            .add(&wedge_op(pb).compose(&contract_op(pa)))
            .sub(&wedge_op(pa).compose(&contract_op(pb)));
    }
    op
}

/// Permutation of the index set {0,1,2}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Perm(pub [usize; 3]);

impl Perm {
    /// Order: id, (01), (02), (12), (012), (021).
    pub fn all() -> [Perm; 6] {
        [
            Perm([0, 1, 2]),
            Perm([1, 0, 2]),
            Perm([2, 1, 0]),
            Perm([0, 2, 1]),
            Perm([1, 2, 0]),
            Perm([2, 0, 1]),
        ]
    }

    pub fn apply(self, j: usize) -> usize {
        self.0[j]
    }

    pub fn inverse(self) -> Perm {
        let mut inv = [0; 3];
        for j in 0..3 {
            inv[self.0[j]] = j;
        }
        Perm(inv)
    }

    pub fn is_odd(self) -> bool {
        let p = self.0;
        ((p[0] > p[1]) as u8 + (p[0] > p[2]) as u8 + (p[1] > p[2]) as u8) % 2 == 1
    }

    pub fn name(self) -> &'static str {
        match self.0 {
            [0, 1, 2] => "id",
            [1, 0, 2] => "(01)",
            [2, 1, 0] => "(02)",
            [0, 2, 1] => "(12)",
            [1, 2, 0] => "(012)",
            _ => "(021)",
        }
    }

    /// Image of the monomial `m` under `v_ij -> v_{i σ(j)}`, with its sign.
    pub fn act_on_mask(self, m: BasisIndex) -> (BasisIndex, bool) {
        let mut mask = 0u16;
        let mut neg = false;
        for p in Pos::all().filter(|p| m.mask() & p.bit() != 0) {
            let q = Pos::new(p.i(), self.apply(p.j())).unwrap();
            neg ^= wedge_sign(mask, q.bit()).unwrap();
            mask |= q.bit();
        }
        (BasisIndex::raw(mask as usize), neg)
    }

    pub fn operator(self) -> Operator {
        Operator::from_entries(BasisIndex::all().map(|m| {
            let (r, neg) = self.act_on_mask(m);
            (r, m, GaussRational::one().signed(neg))
        }))
    }
}

/// `σ ∘ φ ∘ σ^{-1}`.
pub fn s3_conjugate(sigma: Perm, phi: &Operator) -> Operator {
    sigma
        .operator()
        .compose(phi)
        .compose(&sigma.inverse().operator())
}

/// Kw weight as the coefficients of `i` in `(z0, z1, z2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct KwWeight(pub [i8; 3]);

impl KwWeight {
    pub fn components(self) -> [GaussRational; 3] {
        self.0.map(|x| GaussRational::from_ints(0, x as i64))
    }

    /// Short label such as `(0,-,-)`.
    pub fn label(self) -> String {
        let c = |x: i8| match x {
            0 => "0".to_string(),
            1 => "+".to_string(),
            -1 => "-".to_string(),
            n => format!("{n}"),
        };
        format!("({},{},{})", c(self.0[0]), c(self.0[1]), c(self.0[2]))
    }
}

/// `δ_{a0} - δ_{a3}` per block: the Kw eigenvalue of a monomial divided by `i (-1)^deg`.
pub fn kw_normalized(m: BasisIndex) -> [i8; 3] {
    m.multidegree().0.map(|a| (a == 0) as i8 - (a == 3) as i8)
}

/// Eigenvalue triple of `(K00, K11, K22)` on a monomial, as coefficients of `i`.
pub fn kw_of_mask(m: BasisIndex) -> [i8; 3] {
    let s = if m.is_odd() { -1 } else { 1 };
    kw_normalized(m).map(|x| s * x)
}

fn split_by(
    phi: &Operator,
    weight: impl Fn(BasisIndex) -> [i8; 3],
) -> BTreeMap<KwWeight, Operator> {
    let mut buckets: BTreeMap<KwWeight, Vec<(BasisIndex, BasisIndex, GaussRational)>> =
        BTreeMap::new();
    for (r, c, v) in phi.entries() {
        let (wr, wc) = (weight(r), weight(c));
        let w = KwWeight([wr[0] - wc[0], wr[1] - wc[1], wr[2] - wc[2]]);
        buckets.entry(w).or_default().push((r, c, v.clone()));
    }
    buckets
        .into_iter()
        .map(|(w, e)| (w, Operator::from_entries(e)))
        .collect()
}

/// Simultaneous eigen-decomposition of `φ` under `ad(K00), ad(K11), ad(K22)`,
/// read off from row and column multidegrees.
pub fn kw_decompose(phi: &Operator) -> BTreeMap<KwWeight, Operator> {
    split_by(phi, kw_of_mask)
}

/// Same split using the parity-free weight `i(δ_{a0} - δ_{a3}, ...)`; these are the
/// eigen-buckets of `ad(P K_mm)` with `P` the parity operator. The pattern table labels
/// and the four-term splitting of `iL_j` use this grading.
pub fn kw_decompose_normalized(phi: &Operator) -> BTreeMap<KwWeight, Operator> {
    split_by(phi, kw_normalized)
}

pub const GENERATOR_NAMES: [&str; 12] = [
    "iL0", "iL1", "iL2", "iLam0", "iLam1", "iLam2", "iV0", "iV1", "iV2", "A0", "A1", "A2",
];

/// Every operator the verification suites need, built once.
pub struct Canonical {
    pub e: [[Operator; 3]; 3],
    pub i: [[Operator; 3]; 3],
    pub l: [Operator; 3],
    pub lam: [Operator; 3],
    pub v: [Operator; 3],
    pub a: [Operator; 3],
    pub j: [Operator; 3],
    pub hodge: Operator,
    pub parity: Operator,
    pub h: [Operator; 3],
    pub k: [[Operator; 3]; 3],
    pub serre_e: [Operator; 3],
    pub serre_f: [Operator; 3],
    pub serre_h: [Operator; 3],
    pub sl2_e: Operator,
    pub sl2_f: Operator,
    pub sl2_h: Operator,
    /// `iL0, iL1, iL2, iΛ0, iΛ1, iΛ2, iV0, iV1, iV2, A0, A1, A2`.
    pub generators: Vec<Operator>,
}

fn arr3<T>(f: impl Fn(usize) -> T) -> [T; 3] {
    [f(0), f(1), f(2)]
}

fn br(a: &Operator, b: &Operator) -> Operator {
    a.superbracket(b)
        .expect("canonical operators have definite parity")
}

impl Canonical {
    pub fn build() -> Canonical {
        let c = |n| build_canonical(n).expect("valid index");
        let e = arr3(|i| arr3(|j| c(CanonicalName::E(i + 1, j))));
        let i = arr3(|i| arr3(|j| c(CanonicalName::I(i + 1, j))));
        let l = arr3(|j| c(CanonicalName::L(j)));
        let v = arr3(|j| c(CanonicalName::V(j)));
        let lam = arr3(|j| l[j].super_adjoint().unwrap());
        let a = arr3(|j| v[j].super_adjoint().unwrap());
        let jr = arr3(|k| c(CanonicalName::J(k + 1)));
        let il = arr3(|j| l[j].times_i());
        let ilam = arr3(|j| lam[j].times_i());
        let iv = arr3(|j| v[j].times_i());
        let h = arr3(|j| br(&ilam[j], &il[j]));
        let k = arr3(|l_| arr3(|m| br(&iv[l_], &a[m])));
        let serre_e = [br(&l[0], &lam[1]), br(&l[1], &lam[2]), l[2].clone()];
        let serre_f = [br(&l[1], &lam[0]), br(&l[2], &lam[1]), lam[2].clone()];
        let serre_h = arr3(|q| br(&serre_e[q], &serre_f[q]));
        let sl2_e = jr[0].times_i().sub(&jr[1]);
        let sl2_f = jr[0].times_i().add(&jr[1]);
        let sl2_h = jr[2].scale(&GaussRational::from_ints(0, 2));
        let mut generators = Vec::with_capacity(12);
        generators.extend(il.iter().cloned());
        generators.extend(ilam.iter().cloned());
        generators.extend(iv.iter().cloned());
        generators.extend(a.iter().cloned());
        Canonical {
            e,
            i,
            l,
            lam,
            v,
            a,
            j: jr,
            hodge: hodge_operator(),
            parity: Operator::parity_operator(),
            h,
            k,
            serre_e,
            serre_f,
            serre_h,
            sl2_e,
            sl2_f,
            sl2_h,
            generators,
        }
    }

    /// Shared instance.
    pub fn get() -> &'static Canonical {
        static CELL: OnceLock<Canonical> = OnceLock::new();
        CELL.get_or_init(Canonical::build)
    }

    pub fn generator(&self, name: &str) -> Result<&Operator> {
        GENERATOR_NAMES
            .iter()
            .position(|n| *n == name)
            .map(|k| &self.generators[k])
            .ok_or_else(|| Error::Unknown(name.to_string()))
    }

    pub fn even_generators(&self) -> &[Operator] {
        &self.generators[..6]
    }

    /// Named lookup used by the command line: generators plus `L0`, `Lam0`, `V0`, `E10`, `I10`, `J1`, ...
    pub fn by_name(&self, name: &str) -> Result<Operator> {
        if let Ok(g) = self.generator(name) {
            return Ok(g.clone());
        }
        let unknown = || Error::Unknown(name.to_string());
        let digits: Vec<usize> = name
            .chars()
            .filter(|c| c.is_ascii_digit())
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect();
        let stem: String = name.chars().filter(|c| !c.is_ascii_digit()).collect();
        let one = |arr: &[Operator; 3]| -> Result<Operator> {
            match digits.as_slice() {
                [j] if *j < 3 => Ok(arr[*j].clone()),
                _ => Err(unknown()),
            }
        };
        match stem.as_str() {
            "L" => one(&self.l),
            "Lam" => one(&self.lam),
            "V" => one(&self.v),
            "A" => one(&self.a),
            "H" => one(&self.h),
            "J" => match digits.as_slice() {
                [k] if (1..=3).contains(k) => Ok(self.j[k - 1].clone()),
                _ => Err(unknown()),
            },
            "E" | "I" | "K" => match digits.as_slice() {
                [x, y] => {
                    let (x, y) = (*x, *y);
                    match stem.as_str() {
                        "E" if (1..=3).contains(&x) && y < 3 => Ok(self.e[x - 1][y].clone()),
                        "I" if (1..=3).contains(&x) && y < 3 => Ok(self.i[x - 1][y].clone()),
                        "K" if x < 3 && y < 3 => Ok(self.k[x][y].clone()),
                        _ => Err(unknown()),
                    }
                }
                _ => Err(unknown()),
            },
            _ => Err(unknown()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cn() -> &'static Canonical {
        Canonical::get()
    }

    fn f(s: &str) -> Form {
        s.parse().unwrap()
    }

    #[test]
    fn factory_examples() {
        let c = cn();
        assert_eq!(c.l[0].apply(&Form::one()), Form::omega_d());
        assert_eq!(c.v[0].apply(&Form::one()), f("v10^v20^v30"));
        assert!(c.j[0].apply(&Form::omega_1()).is_zero());
        assert!(build_canonical(CanonicalName::L(3)).is_err());
        assert!(build_canonical(CanonicalName::E(0, 1)).is_err());
        assert!(build_canonical(CanonicalName::J(0)).is_err());
    }

    #[test]
    fn rotation_action_on_vectors() {
        let c = cn();
        assert_eq!(c.j[0].apply(&f("v21")), f("v31"));
        assert_eq!(c.j[0].apply(&f("v31")), f("-v21"));
        assert_eq!(c.j[1].apply(&f("v30")), f("v10"));
        assert_eq!(c.j[2].apply(&f("v12")), f("v22"));
    }

    #[test]
    fn adjoint_examples() {
        let c = cn();
        assert_eq!(c.e[0][0].plain_adjoint(), c.i[0][0]);
        assert_eq!(Operator::identity().plain_adjoint(), Operator::identity());
        assert_eq!(c.l[0].plain_adjoint().plain_adjoint(), c.l[0]);
        // (L0 1, ω_D) = (ω_D, ω_D) = 3
        assert_eq!(
            c.lam[0].apply(&Form::omega_d()),
            Form::monomial(BasisIndex::new(0).unwrap(), 3.into())
        );
        // odd operators: ⋆⋆ = -1
        assert_eq!(
            c.v[0].super_adjoint().unwrap().super_adjoint().unwrap(),
            c.v[0].neg()
        );
        assert_eq!(c.a[0].apply(&Form::vol_w(0).unwrap()), Form::one());
        assert_eq!(c.l[0].add(&c.v[0]).super_adjoint(), Err(Error::MixedParity));
    }

    #[test]
    fn bracket_examples() {
        let c = cn();
        assert_eq!(
            c.k[0][0].apply(&Form::one()),
            Form::one().scale(&GaussRational::i())
        );
        assert!(c.l[0].superbracket(&c.l[0]).unwrap().is_zero());
        assert!(c.l[0].superbracket(&c.v[0]).unwrap().is_zero());
        let x = c.l[1].superbracket(&c.a[0]).unwrap();
        assert!(!x.is_zero());
        assert_eq!(x.parity(), Parity::Odd);
        assert_eq!(c.v[0].superbracket(&c.a[0]).unwrap().parity(), Parity::Even);
    }

    #[test]
    fn parity_and_shift() {
        let c = cn();
        assert_eq!(c.l[0].parity(), Parity::Even);
        assert_eq!(c.v[1].parity(), Parity::Odd);
        assert_eq!(c.l[0].multidegree_shift(), Some(Shift([0, 1, 1])));
        assert_eq!(c.a[2].multidegree_shift(), Some(Shift([0, 0, -3])));
        assert_eq!(c.l[0].add(&c.l[1]).multidegree_shift(), None);
    }

    #[test]
    fn s3_examples() {
        let c = cn();
        let s01 = Perm::all()[1];
        assert_eq!(s3_conjugate(s01, &c.v[0]), c.v[1]);
        assert_eq!(s3_conjugate(s01, &c.l[0]), c.l[1].neg());
        assert_eq!(s3_conjugate(s01, &c.j[0]), c.j[0]);
        let odd: Vec<bool> = Perm::all().iter().map(|p| p.is_odd()).collect();
        assert_eq!(odd, vec![false, true, true, true, false, false]);
    }

    #[test]
    fn hodge_conjugate_examples() {
        let c = cn();
        assert_eq!(c.generators[0].hodge_conjugate(), c.generators[3]);
        assert_eq!(c.v[0].hodge_conjugate(), c.a[0]);
        assert_eq!(Operator::identity().hodge_conjugate(), Operator::identity());
    }

    #[test]
    fn kw_examples() {
        let c = cn();
        let keys = |m: BTreeMap<KwWeight, Operator>| m.keys().copied().collect::<Vec<_>>();
        let mut expect = vec![
            KwWeight([0, 0, 0]),
            KwWeight([0, -1, 0]),
            KwWeight([0, 0, -1]),
            KwWeight([0, -1, -1]),
        ];
        expect.sort();
        assert_eq!(keys(kw_decompose_normalized(&c.generators[0])), expect);
        let opposite: Vec<_> = expect
            .iter()
            .map(|w| KwWeight(w.0.map(|x| -x)))
            .rev()
            .collect();
        assert_eq!(keys(kw_decompose_normalized(&c.generators[3])), opposite);
        assert_eq!(keys(kw_decompose(&c.k[0][0])), vec![KwWeight([0, 0, 0])]);
    }

    #[test]
    fn dagger_examples() {
        // two-dimensional space spanned by 1 (even) and v10 (odd)
        let e = BasisIndex::new(0).unwrap();
        let o = BasisIndex::new(1).unwrap();
        let g = |re, im| GaussRational::from_ints(re, im);
        let (a, b, cc) = (g(2, 3), g(5, 0), g(0, 7));
        let even = Operator::from_entries([(e, e, a.clone()), (o, o, -a.conj())]);
        let odd = Operator::from_entries([(e, o, b.clone()), (o, e, cc.clone())]);
        let expect = Operator::from_entries([
            (e, e, a.conj()),
            (o, o, -a.clone()),
            (e, o, cc.times_i()),
            (o, e, -b.times_i()),
        ]);
        assert_eq!(even.dagger().unwrap().add(&odd.dagger().unwrap()), expect);
        assert_eq!(Operator::identity().dagger().unwrap(), Operator::identity());
        let l0 = &cn().l[0];
        assert_eq!(l0.dagger().unwrap().dagger().unwrap(), *l0);
    }

    #[test]
    fn dump_round_trip() {
        let e10 = &cn().e[0][0];
        let d = e10.dump();
        // v10 is the lowest factor, so every entry is +1
        let mut expect: Vec<(u16, u16)> = (0..512u16)
            .filter(|m| m & 1 == 0)
            .map(|m| (m | 1, m))
            .collect();
        expect.sort();
        let want: String = expect
            .iter()
            .map(|(r, c)| format!("{r} {c} (1+0*i)\n"))
            .collect();
        assert_eq!(d, want);
        assert_eq!(Operator::parse_dump(&d).unwrap(), *e10);
    }

    #[test]
    fn by_name_lookup() {
        let c = cn();
        assert_eq!(c.by_name("iLam2").unwrap(), c.generators[5]);
        assert_eq!(c.by_name("K01").unwrap(), c.k[0][1]);
        assert_eq!(c.by_name("E32").unwrap(), c.e[2][2]);
        assert!(c.by_name("L7").is_err());
        assert!(c.by_name("Q1").is_err());
    }
}
