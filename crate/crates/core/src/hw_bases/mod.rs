//! Explicit bases of the highest weight spaces built from `iL_j` monomials applied
//! to `1`, `w_1j`, `w_1j ^ w_1k` and `w_10 ^ w_11 ^ w_12`, plus the nonzero
//! patterns of the Kw components of `iL_j` and some `K_lm` in those bases.

mod pattern_data;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::GaussRational;
use crate::exterior::Form;
use crate::linalg::{rank_of_forms, FormSolver};
use crate::operators::{kw_decompose_normalized, Canonical, KwWeight, Operator};
use crate::rep_theory::{highest_weight_space, GaussMatrix, Restrictor};
use crate::report::Check;

pub use pattern_data::TABLES;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum HwKind {
    HW0,
    HW1,
    HW2,
    HW3,
}

impl HwKind {
    pub const ALL: [HwKind; 4] = [HwKind::HW0, HwKind::HW1, HwKind::HW2, HwKind::HW3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["hw0", "hw1", "hw2", "hw3"][self as usize]
    }

    pub fn from_name(s: &str) -> Result<HwKind> {
        HwKind::ALL
            .into_iter()
            .find(|k| k.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Unknown(s.to_string()))
    }

    /// Dimension of each parity half.
    pub fn half_dim(self) -> usize {
        [20, 36, 20, 4][self as usize]
    }
}

/// `(a,b,c)` followed by the seed indices, e.g. `(1,0,2)01`; Hodge images carry a `*` prefix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub exps: [u8; 3],
    pub seed: Vec<u8>,
    pub hodge: bool,
}

impl Label {
    pub fn new(exps: [u8; 3], seed: &[u8]) -> Label {
        Label {
            exps,
            seed: seed.to_vec(),
            hodge: false,
        }
    }

    pub fn hodge_image(&self) -> Label {
        Label {
            hodge: !self.hodge,
            ..self.clone()
        }
    }

    /// `(iL0)^a (iL1)^b (iL2)^c` applied to the seed, then `*` if flagged.
    pub fn vector(&self) -> Form {
        let c = Canonical::get();
        let mut f = match self.seed.as_slice() {
            [] => Form::one(),
            seeds => seeds.iter().fold(Form::one(), |acc, &j| {
                acc.wedge(&Form::w(j as usize).expect("seed index below 3"))
            }),
        };
        for (j, &e) in self.exps.iter().enumerate() {
            for _ in 0..e {
                f = c.generators[j].apply(&f);
            }
        }
        if self.hodge {
            f.hodge_star()
        } else {
            f
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star = if self.hodge { "*" } else { "" };
        let seed: String = self.seed.iter().map(|d| d.to_string()).collect();
        write!(
            f,
            "{star}({},{},{}){seed}",
            self.exps[0], self.exps[1], self.exps[2]
        )
    }
}

impl FromStr for Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Label> {
        let bad = || Error::Parse(format!("bad basis label `{s}`"));
        let (hodge, t) = match s.trim().strip_prefix('*') {
            Some(t) => (true, t),
            None => (false, s.trim()),
        };
        let t = t.strip_prefix('(').ok_or_else(bad)?;
        let (inner, seed) = t.split_once(')').ok_or_else(bad)?;
        let e: Vec<u8> = inner
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let exps: [u8; 3] = e.try_into().map_err(|_| bad())?;
        let seed: Vec<u8> = seed
            .chars()
            .map(|ch| {
                ch.to_digit(10)
                    .filter(|&d| d < 3)
                    .map(|d| d as u8)
                    .ok_or_else(bad)
            })
            .collect::<Result<_>>()?;
        Ok(Label { exps, seed, hodge })
    }
}

impl Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Basis of one `HW_k`, ordered even half then odd half.
#[derive(Clone, Debug)]
pub struct LabeledBasis {
    pub kind: HwKind,
    pub labels: Vec<Label>,
    pub vectors: Vec<Form>,
    pub n_even: usize,
}

impl LabeledBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn even_range(&self) -> std::ops::Range<usize> {
        0..self.n_even
    }

    pub fn odd_range(&self) -> std::ops::Range<usize> {
        self.n_even..self.len()
    }

    pub fn is_odd_index(&self, k: usize) -> bool {
        k >= self.n_even
    }

    pub fn position(&self, label: &Label) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `label: expansion` lines.
    pub fn dump(&self) -> String {
        self.labels
            .iter()
            .zip(&self.vectors)
            .map(|(l, v)| format!("{l}: {v}\n"))
            .collect()
    }
}

const LOW: [[u8; 3]; 10] = [
    [0, 0, 0],
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [2, 0, 0],
    [1, 1, 0],
    [1, 0, 1],
    [0, 2, 0],
    [0, 1, 1],
    [0, 0, 2],
];

const CUBIC: [[u8; 3]; 10] = [
    [3, 0, 0],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [1, 1, 1],
    [1, 0, 2],
    [0, 3, 0],
    [0, 2, 1],
    [0, 1, 2],
    [0, 0, 3],
];

/// Labels of the half built directly from `iL` monomials, in table order.
pub fn primary_labels(kind: HwKind) -> Vec<Label> {
    match kind {
        HwKind::HW0 => LOW
            .iter()
            .chain(&CUBIC)
            .map(|e| Label::new(*e, &[]))
            .collect(),
        HwKind::HW1 => (0..3u8)
            .flat_map(|j| {
                let mut cube = [0u8; 3];
                cube[j as usize] = 3;
                LOW.iter()
                    .copied()
                    .chain([cube, [1, 1, 1]])
                    .map(move |e| Label::new(e, &[j]))
                    .collect::<Vec<_>>()
            })
            .collect(),
        HwKind::HW2 => {
            let groups: [(&[u8], &[[u8; 3]]); 3] = [
                (
                    &[0, 1],
                    &[
                        [0, 0, 0],
                        [1, 0, 0],
                        [0, 1, 0],
                        [0, 0, 1],
                        [2, 0, 0],
                        [1, 1, 0],
                        [0, 2, 0],
                    ],
                ),
                (
                    &[0, 2],
                    &[
                        [0, 0, 0],
                        [1, 0, 0],
                        [0, 1, 0],
                        [0, 0, 1],
                        [2, 0, 0],
                        [0, 0, 2],
                    ],
                ),
                (
                    &[1, 2],
                    &[
                        [0, 0, 0],
                        [1, 0, 0],
                        [0, 1, 0],
                        [0, 0, 1],
                        [0, 2, 0],
                        [0, 1, 1],
                        [0, 0, 2],
                    ],
                ),
            ];
            groups
                .iter()
                .flat_map(|(seed, exps)| exps.iter().map(|e| Label::new(*e, seed)))
                .collect()
        }
        HwKind::HW3 => [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]
            .iter()
            .map(|e| Label::new(*e, &[0, 1, 2]))
            .collect(),
    }
}

/// Whether the monomial-built half is the even one.
fn primary_is_even(kind: HwKind) -> bool {
    matches!(kind, HwKind::HW0 | HwKind::HW2)
}

fn build(kind: HwKind) -> Result<LabeledBasis> {
    let primary = primary_labels(kind);
    let images: Vec<Label> = primary.iter().map(Label::hodge_image).collect();
    let labels: Vec<Label> = if primary_is_even(kind) {
        [primary, images].concat()
    } else {
        [images, primary].concat()
    };
    let vectors: Vec<Form> = labels.iter().map(Label::vector).collect();
    let n_even = kind.half_dim();
    let c = Canonical::get();
    let weight = GaussRational::from_int(2 * kind.index() as i64);
    for (l, v) in labels.iter().zip(&vectors) {
        if v.is_zero() {
            return Err(Error::Dependent(format!("{l} vanishes")));
        }
        let homogeneous = v.multidegree().is_some();
        let in_hw = c.sl2_e.apply(v).is_zero() && c.sl2_h.apply(v) == v.scale(&weight);
        if !homogeneous || !in_hw {
            return Err(Error::Dependent(format!(
                "{l} is not a homogeneous highest weight vector"
            )));
        }
    }
    FormSolver::new(&vectors).map_err(|e| Error::Dependent(format!("{}: {e}", kind.name())))?;
    Ok(LabeledBasis {
        kind,
        labels,
        vectors,
        n_even,
    })
}

pub fn build_hw0_basis() -> Result<LabeledBasis> {
    build(HwKind::HW0)
}

pub fn build_hw1_basis() -> Result<LabeledBasis> {
    build(HwKind::HW1)
}

pub fn build_hw2_basis() -> Result<LabeledBasis> {
    build(HwKind::HW2)
}

pub fn build_hw3_basis() -> Result<LabeledBasis> {
    build(HwKind::HW3)
}

/// The four bases with coordinate solvers, built once.
pub struct HwBases {
    pub bases: Vec<LabeledBasis>,
    pub restrictors: Vec<Restrictor>,
}

impl HwBases {
    pub fn build() -> Result<HwBases> {
        let bases: Vec<LabeledBasis> = HwKind::ALL
            .iter()
            .map(|k| build(*k))
            .collect::<Result<_>>()?;
        let restrictors = bases
            .iter()
            .map(|b| Restrictor::new(b.vectors.clone()))
            .collect::<Result<_>>()?;
        Ok(HwBases { bases, restrictors })
    }

    pub fn get() -> &'static HwBases {
        static CELL: OnceLock<HwBases> = OnceLock::new();
        CELL.get_or_init(|| HwBases::build().expect("highest weight bases are independent"))
    }

    pub fn basis(&self, kind: HwKind) -> &LabeledBasis {
        &self.bases[kind.index()]
    }

    pub fn restrict(&self, kind: HwKind, phi: &Operator) -> Result<GaussMatrix> {
        self.restrictors[kind.index()].restrict(phi)
    }
}

fn nonzero(name: &str, f: &Form) -> Check {
    Check::with_detail(name, !f.is_zero(), format!("{} terms", f.len()))
}

/// Non-vanishing facts and relations used to prove independence of each basis.
pub fn basis_facts(kind: HwKind) -> Vec<Check> {
    let c = Canonical::get();
    let il = &c.generators[..3];
    let w = |j| Form::w(j).unwrap();
    let mut out = Vec::new();
    match kind {
        HwKind::HW0 => {
            let (od, o1, o2) = (Form::omega_d(), Form::omega_1(), Form::omega_2());
            out.push(nonzero(
                "omega_D^omega_D^omega_2 != 0",
                &od.wedge(&od).wedge(&o2),
            ));
            out.push(nonzero(
                "omega_D^omega_D^omega_D != 0",
                &od.wedge(&od).wedge(&od),
            ));
            out.push(nonzero(
                "omega_D^omega_1^omega_2 != 0",
                &od.wedge(&o1).wedge(&o2),
            ));
        }
        HwKind::HW1 => {
            let w10 = w(0);
            let cube = il[0].apply(&il[0].apply(&il[0].apply(&w10)));
            out.push(nonzero("(iL0)^3 w10 != 0", &cube));
            out.push(nonzero(
                "iL0 iL1 iL2 w10 != 0",
                &il[0].apply(&il[1].apply(&il[2].apply(&w10))),
            ));
            out.push(nonzero("L1^2 w10 != 0", &c.l[1].apply(&c.l[1].apply(&w10))));
        }
        HwKind::HW2 => {
            let l = &c.l;
            let a = l[0].apply(&l[1].apply(&w(0).wedge(&w(1))));
            let b = l[1].apply(&l[2].apply(&w(1).wedge(&w(2))));
            let d = l[2].apply(&l[0].apply(&w(2).wedge(&w(0))));
            let sum = a.clone() + b.clone() + d.clone();
            out.push(Check::with_detail(
                "L0L1(w10^w11) + L1L2(w11^w12) + L2L0(w12^w10) = 0",
                sum.is_zero(),
                format!("{} nonzero terms", sum.len()),
            ));
            for (name, x, y) in [
                ("first,second", &a, &b),
                ("second,third", &b, &d),
                ("first,third", &a, &d),
            ] {
                out.push(Check::equal(
                    format!("summands {name} independent"),
                    rank_of_forms([x, y]),
                    2,
                ));
            }
            out.push(nonzero(
                "iL2(w10^w11) != 0",
                &il[2].apply(&w(0).wedge(&w(1))),
            ));
        }
        HwKind::HW3 => {
            let w3 = w(0).wedge(&w(1)).wedge(&w(2));
            out.push(nonzero("iL2(w10^w11^w12) != 0", &il[2].apply(&w3)));
            let v: Vec<Form> = std::iter::once(w3.clone())
                .chain(il.iter().map(|g| g.apply(&w3)))
                .collect();
            let degs: BTreeSet<_> = v.iter().filter_map(|f| f.multidegree()).collect();
            out.push(Check::equal(
                "odd vectors have distinct multidegrees",
                degs.len(),
                4,
            ));
        }
    }
    out
}

/// Checks one labelled basis: size, independence, Hodge pairing of the halves,
/// agreement with the echelon-canonical highest weight space.
pub fn basis_checks(kind: HwKind) -> Vec<Check> {
    let mut out = Vec::new();
    let b = match build(kind) {
        Ok(b) => b,
        Err(e) => {
            return vec![Check::with_detail(
                format!("{} builds", kind.name()),
                false,
                e.to_string(),
            )]
        }
    };
    out.push(Check::equal(
        format!("{} size", kind.name()),
        b.len(),
        2 * kind.half_dim(),
    ));
    out.push(Check::equal(
        format!("{} rank", kind.name()),
        rank_of_forms(&b.vectors),
        b.len(),
    ));
    let hodge_ok = (0..b.n_even).all(|k| b.vectors[k].hodge_star() == b.vectors[b.n_even + k]);
    out.push(Check::new(
        format!("{} Hodge star swaps halves vector by vector", kind.name()),
        hodge_ok,
    ));
    let parity_ok = b
        .vectors
        .iter()
        .enumerate()
        .all(|(k, v)| v.parity() == Some(b.is_odd_index(k)));
    out.push(Check::new(
        format!("{} halves have the stated parity", kind.name()),
        parity_ok,
    ));
    if let Ok(space) = highest_weight_space(kind.index()) {
        let solver = FormSolver::new(&space.basis());
        let coords: Option<Vec<Vec<GaussRational>>> = solver
            .ok()
            .and_then(|s| b.vectors.iter().map(|v| s.solve(v)).collect());
        let ok = match coords {
            Some(rows) => {
                let vs = rows.iter().map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(k, x)| (k, x.clone()))
                        .collect()
                });
                space.dim() == b.len() && crate::linalg::rank(crate::exact_arith::QI, vs) == b.len()
            }
            None => false,
        };
        out.push(Check::new(
            format!(
                "{} change of basis to echelon basis is invertible",
                kind.name()
            ),
            ok,
        ));
    }
    out
}

/// One pattern table: labels in listing order and the marked cells.
#[derive(Clone, Copy, Debug)]
pub struct PatternTable {
    pub name: &'static str,
    pub block: HwKind,
    pub rows: &'static [&'static str],
    pub cols: &'static [&'static str],
    pub marks: &'static [Mark],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MarkOp {
    /// Kw component of `iL_j` with the given weight.
    L(usize, [i8; 3]),
    K(usize, usize),
}

impl fmt::Display for MarkOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MarkOp::L(j, w) => write!(f, "L{j}^{}", KwWeight(*w).label()),
            MarkOp::K(l, m) => write!(f, "K{l}{m}"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Mark {
    pub row: &'static str,
    pub col: &'static str,
    pub op: MarkOp,
    /// Cell carries the `×` flag: presence asserted, value irrelevant.
    pub crossed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellDiff {
    pub row: String,
    pub col: String,
    pub op: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub name: String,
    pub block: HwKind,
    pub marked: usize,
    pub crossed: usize,
    pub computed: usize,
    /// Marked but zero.
    pub missing: Vec<CellDiff>,
    /// Nonzero but unmarked.
    pub unexpected: Vec<CellDiff>,
    /// One string per row; `o` = marked and nonzero, `.` = unmarked and zero, `!` = mismatch.
    pub cells: Vec<String>,
    pub passed: bool,
}

/// Compares the nonzero pattern of each Kw component (parity-free weights) of
/// `iL0, iL1, iL2` and of the `K_lm` mentioned in a table against its marks.
pub fn verify_table(table: &PatternTable) -> Result<TableReport> {
    let hb = HwBases::get();
    let basis = hb.basis(table.block);
    let rows: Vec<Label> = table
        .rows
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_>>()?;
    let cols: Vec<Label> = table
        .cols
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_>>()?;
    let vecs: Vec<Form> = rows
        .iter()
        .map(|l| {
            basis
                .position(l)
                .map(|k| basis.vectors[k].clone())
                .ok_or_else(|| Error::Unknown(l.to_string()))
        })
        .collect::<Result<_>>()?;
    let col_index: BTreeMap<&Label, usize> = cols.iter().enumerate().map(|(k, l)| (l, k)).collect();
    let restrictor = Restrictor::new(vecs)?;
    let c = Canonical::get();

    let mut ops: Vec<(MarkOp, Operator)> = Vec::new();
    for j in 0..3 {
        for (w, op) in kw_decompose_normalized(&c.generators[j]) {
            ops.push((MarkOp::L(j, w.0), op));
        }
    }
    let ks: BTreeSet<(usize, usize)> = table
        .marks
        .iter()
        .filter_map(|m| match m.op {
            MarkOp::K(l, m) => Some((l, m)),
            _ => None,
        })
        .collect();
    for (l, m) in ks {
        ops.push((MarkOp::K(l, m), c.k[l][m].clone()));
    }

    let mut computed: BTreeSet<(usize, usize, MarkOp)> = BTreeSet::new();
    for (name, op) in &ops {
        let m = restrictor.restrict(op)?;
        for (r, cc) in m.nonzero_positions() {
            if let Some(&ci) = col_index.get(&rows[cc]) {
                computed.insert((r, ci, *name));
            }
        }
    }
    let row_index: BTreeMap<&Label, usize> = rows.iter().enumerate().map(|(k, l)| (l, k)).collect();
    let mut marked: BTreeSet<(usize, usize, MarkOp)> = BTreeSet::new();
    for m in table.marks {
        let r = row_index[&m.row.parse::<Label>()?];
        let cc = col_index[&m.col.parse::<Label>()?];
        marked.insert((r, cc, m.op));
    }
    let diff = |set: Vec<&(usize, usize, MarkOp)>| -> Vec<CellDiff> {
        set.into_iter()
            .map(|(r, cc, op)| CellDiff {
                row: rows[*r].to_string(),
                col: cols[*cc].to_string(),
                op: op.to_string(),
            })
            .collect()
    };
    let missing = diff(marked.difference(&computed).collect());
    let unexpected = diff(computed.difference(&marked).collect());
    let bad: BTreeSet<(usize, usize)> = marked
        .symmetric_difference(&computed)
        .map(|(r, cc, _)| (*r, *cc))
        .collect();
    let hit: BTreeSet<(usize, usize)> = marked.iter().map(|(r, cc, _)| (*r, *cc)).collect();
    let cells = (0..rows.len())
        .map(|r| {
            (0..cols.len())
                .map(|cc| {
                    if bad.contains(&(r, cc)) {
                        '!'
                    } else if hit.contains(&(r, cc)) {
                        'o'
                    } else {
                        '.'
                    }
                })
                .collect()
        })
        .collect();
    Ok(TableReport {
        name: table.name.to_string(),
        block: table.block,
        marked: marked.len(),
        crossed: table.marks.iter().filter(|m| m.crossed).count(),
        computed: computed.len(),
        passed: missing.is_empty() && unexpected.is_empty(),
        missing,
        unexpected,
        cells,
    })
}

pub fn verify_pattern_tables() -> Result<Vec<TableReport>> {
    use rayon::prelude::*;
    TABLES.par_iter().map(verify_table).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_round_trip() {
        for s in ["(0,0,0)", "(1,2,0)01", "*(0,0,1)012", "(3,0,0)2"] {
            assert_eq!(s.parse::<Label>().unwrap().to_string(), s);
        }
        assert!("(1,2)0".parse::<Label>().is_err());
        assert!("(1,2,3)5".parse::<Label>().is_err());
    }

    #[test]
    fn primary_labels_follow_tables() {
        let as_str = |k| {
            primary_labels(k)
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
        };
        for t in TABLES {
            let rows: Vec<String> = t.rows.iter().map(|s| s.to_string()).collect();
            assert_eq!(as_str(t.block), rows, "{}", t.name);
        }
        let hw1_cols: Vec<&str> = TABLES[2]
            .cols
            .iter()
            .chain(TABLES[3].cols)
            .copied()
            .collect();
        assert_eq!(as_str(HwKind::HW1), hw1_cols);
    }

    #[test]
    fn small_examples() {
        assert_eq!(Label::new([0, 0, 0], &[]).vector(), Form::one());
        let b3 = build_hw3_basis().unwrap();
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.n_even, 4);
    }
}
