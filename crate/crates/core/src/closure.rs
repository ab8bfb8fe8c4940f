//! Lie superalgebra generated by operators, computed on the restrictions to the
//! highest weight bases.
//!
//! An operator restricted to `HW_0 ⊕ … ⊕ HW_3` is a list of square block matrices.
//! Real coordinates are `(re, im)` of every entry (the algebra is real and all
//! structure constants are rational, so the rank over Q of these coordinates is
//! its real dimension); complex coordinates use one scalar per entry.
//!
//! Every generator moves multidegrees by a fixed shift, so each entry `(r, c)`
//! belongs to the sector `mdeg(r) - mdeg(c)` and the span splits into independent
//! sectors. Each sector keeps its own reduced echelon basis; pivots inside a sector
//! follow the global coordinate order.

use std::collections::HashMap;
use std::ops::Range;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exact_arith::{Field, GaussRational, PrimeField, Q, QI};
use crate::exterior::{Multidegree, Shift};
use crate::hw_bases::{HwBases, HwKind};
use crate::linalg::{Echelon, SparseVec};
use crate::operators::{Canonical, Operator};
use crate::rep_theory::GaussMatrix;

/// Coordinates over the real form or over its complexification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Scalars {
    Real,
    Complex,
}

impl Scalars {
    pub fn width(self) -> usize {
        match self {
            Scalars::Real => 2,
            Scalars::Complex => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FieldChoice {
    Exact,
    Modular(u64),
}

#[derive(Clone, Debug)]
pub struct BlockInfo {
    pub kind: HwKind,
    pub n: usize,
    pub n_even: usize,
    /// First entry index of the block.
    pub offset: usize,
    mdeg: Vec<Multidegree>,
}

#[derive(Clone, Debug)]
pub struct SectorInfo {
    pub shift: Shift,
    pub odd: bool,
    /// Global entry indices, ascending.
    pub entries: Vec<u32>,
    /// Positions (in `entries`) belonging to each layout block.
    pub block_ranges: Vec<Range<usize>>,
}

/// Entry bookkeeping for the selected blocks.
#[derive(Clone, Debug)]
pub struct Layout {
    pub blocks: Vec<BlockInfo>,
    pub n_entries: usize,
    pub sectors: Vec<SectorInfo>,
    entry_info: Vec<(u8, u16, u16)>,
    entry_loc: Vec<(u32, u32)>,
    sector_index: HashMap<Shift, usize>,
}

impl Layout {
    pub fn new(kinds: &[HwKind]) -> Layout {
        let hb = HwBases::get();
        let mut blocks = Vec::new();
        let mut offset = 0;
        for &kind in kinds {
            let b = hb.basis(kind);
            let mdeg = b
                .vectors
                .iter()
                .map(|v| v.multidegree().expect("homogeneous basis"))
                .collect();
            blocks.push(BlockInfo {
                kind,
                n: b.len(),
                n_even: b.n_even,
                offset,
                mdeg,
            });
            offset += b.len() * b.len();
        }
        let mut entry_info = Vec::with_capacity(offset);
        let mut by_shift: std::collections::BTreeMap<Shift, Vec<u32>> = Default::default();
        for (bi, b) in blocks.iter().enumerate() {
            for r in 0..b.n {
                for c in 0..b.n {
                    let e = entry_info.len() as u32;
                    entry_info.push((bi as u8, r as u16, c as u16));
                    by_shift
                        .entry(b.mdeg[c].shift_to(b.mdeg[r]))
                        .or_default()
                        .push(e);
                }
            }
        }
        let mut entry_loc = vec![(0, 0); offset];
        let mut sectors = Vec::new();
        let mut sector_index = HashMap::new();
        for (si, (shift, entries)) in by_shift.into_iter().enumerate() {
            for (k, &e) in entries.iter().enumerate() {
                entry_loc[e as usize] = (si as u32, k as u32);
            }
            let block_ranges = (0..blocks.len())
                .map(|bi| {
                    let lo = entries.partition_point(|&e| (entry_info[e as usize].0 as usize) < bi);
                    let hi =
                        entries.partition_point(|&e| (entry_info[e as usize].0 as usize) <= bi);
                    lo..hi
                })
                .collect();
            sector_index.insert(shift, si);
            sectors.push(SectorInfo {
                shift,
                odd: shift.is_odd(),
                entries,
                block_ranges,
            });
        }
        Layout {
            blocks,
            n_entries: offset,
            sectors,
            entry_info,
            entry_loc,
            sector_index,
        }
    }

    pub fn kinds(&self) -> Vec<HwKind> {
        self.blocks.iter().map(|b| b.kind).collect()
    }

    /// `(block, row, col)` of an entry.
    pub fn entry(&self, e: usize) -> (usize, usize, usize) {
        let (b, r, c) = self.entry_info[e];
        (b as usize, r as usize, c as usize)
    }

    fn entry_index(&self, b: usize, r: usize, c: usize) -> usize {
        let blk = &self.blocks[b];
        blk.offset + r * blk.n + c
    }

    pub fn sector_of(&self, shift: Shift) -> Option<usize> {
        self.sector_index.get(&shift).copied()
    }

    /// Length of the real coordinate vector, `2 sum n^2`.
    pub fn real_len(&self) -> usize {
        2 * self.n_entries
    }
}

/// Restriction of `φ` to the selected blocks.
pub fn restrict_blocks(phi: &Operator, kinds: &[HwKind]) -> Result<Vec<GaussMatrix>> {
    let hb = HwBases::get();
    kinds.iter().map(|k| hb.restrict(*k, phi)).collect()
}

/// Real coordinates over Q: `(re, im)` of each entry of each block matrix, blocks in order.
pub fn flatten_restricted(
    phi: &Operator,
    kinds: &[HwKind],
) -> Result<Vec<crate::exact_arith::Rational>> {
    let mats = restrict_blocks(phi, kinds)?;
    let mut out = Vec::new();
    for m in mats {
        for z in &m.data {
            out.push(z.re.clone());
            out.push(z.im.clone());
        }
    }
    Ok(out)
}

type Cx<E> = (E, E);

/// Per block, per row: nonzero `(column, value)` pairs.
type SparseBlocks<E> = Vec<Vec<Vec<(usize, Cx<E>)>>>;

fn embed<F: Field>(field: &F, scalars: Scalars, z: &GaussRational) -> Result<Cx<F::Elem>> {
    let re = field.of_rational(&z.re)?;
    let im = field.of_rational(&z.im)?;
    Ok(match scalars {
        Scalars::Real => (re, im),
        Scalars::Complex => {
            let i = field
                .imag_unit()
                .ok_or_else(|| Error::Unknown("field without i".into()))?;
            (field.add(&re, &field.mul(&i, &im)), field.zero())
        }
    })
}

/// Sparse block of a restricted generator.
#[derive(Clone, Debug)]
struct BlockSparse<E> {
    by_col: Vec<Vec<(u16, Cx<E>)>>,
    by_row: Vec<Vec<(u16, Cx<E>)>>,
}

#[derive(Clone, Debug)]
pub struct RestrictedOp<E> {
    odd: bool,
    blocks: Vec<BlockSparse<E>>,
}

/// One element of the span: coordinates of a single sector.
#[derive(Clone, Debug, PartialEq)]
pub struct SectorVec<E> {
    pub sector: usize,
    pub coords: Vec<E>,
}

#[derive(Clone, Debug)]
struct SectorEchelon<E> {
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E> Default for SectorEchelon<E> {
    fn default() -> Self {
        SectorEchelon {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }
}

impl<E: Clone> SectorEchelon<E> {
    fn reduce<F: Field<Elem = E>>(&self, f: &F, v: &mut [E]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for j in p..v.len() {
                f.sub_mul(&mut v[j], &c, &row[j]);
            }
        }
    }

    /// Inserts the reduced vector; returns it normalized if it was new.
    fn insert<F: Field<Elem = E>>(&mut self, f: &F, mut v: Vec<E>) -> Option<Vec<E>> {
        self.reduce(f, &mut v);
        let p = v.iter().position(|x| !f.is_zero(x))?;
        let inv = f.inv(&v[p]).expect("nonzero pivot");
        for x in v.iter_mut().skip(p) {
            *x = f.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for j in p..v.len() {
                f.sub_mul(&mut row[j], &c, &v[j]);
            }
        }
        self.rows.push(v.clone());
        self.pivots.push(p);
        Some(v)
    }
}

/// Per-run counters.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ClosureStats {
    pub brackets: usize,
    pub nonzero_brackets: usize,
    pub wall_seconds: f64,
}

/// Echelonized span closed under brackets with the generators.
#[derive(Clone, Debug)]
pub struct ClosureState<F: Field> {
    pub field: F,
    pub scalars: Scalars,
    pub layout: Layout,
    echelons: Vec<SectorEchelon<F::Elem>>,
    pub stats: ClosureStats,
}

struct Engine<'a, F: Field> {
    field: &'a F,
    scalars: Scalars,
    layout: &'a Layout,
}

impl<F: Field + Clone> Engine<'_, F> {
    fn width(&self) -> usize {
        self.scalars.width()
    }

    fn restricted(&self, phi: &Operator) -> Result<RestrictedOp<F::Elem>> {
        let mats = restrict_blocks(phi, &self.layout.kinds())?;
        let mut blocks = Vec::new();
        for m in &mats {
            let mut b = BlockSparse {
                by_col: vec![Vec::new(); m.cols],
                by_row: vec![Vec::new(); m.rows],
            };
            for (r, c) in m.nonzero_positions() {
                let z = embed(self.field, self.scalars, m.get(r, c))?;
                b.by_col[c].push((r as u16, z.clone()));
                b.by_row[r].push((c as u16, z));
            }
            blocks.push(b);
        }
        Ok(RestrictedOp {
            odd: phi.parity().is_odd(),
            blocks,
        })
    }

    /// Sector pieces of a restricted operator (all nonzero sectors).
    fn split(&self, mats: &[GaussMatrix]) -> Result<Vec<SectorVec<F::Elem>>> {
        let w = self.width();
        let mut parts: HashMap<usize, Vec<F::Elem>> = HashMap::new();
        for (bi, m) in mats.iter().enumerate() {
            for (r, c) in m.nonzero_positions() {
                let (s, k) = self.layout.entry_loc[self.layout.entry_index(bi, r, c)];
                let len = self.layout.sectors[s as usize].entries.len() * w;
                let v = parts
                    .entry(s as usize)
                    .or_insert_with(|| vec![self.field.zero(); len]);
                let z = embed(self.field, self.scalars, m.get(r, c))?;
                v[w * k as usize] = z.0;
                if w == 2 {
                    v[w * k as usize + 1] = z.1;
                }
            }
        }
        let mut out: Vec<_> = parts
            .into_iter()
            .map(|(sector, coords)| SectorVec { sector, coords })
            .collect();
        out.sort_by_key(|v| v.sector);
        Ok(out)
    }

    #[inline]
    fn mac(&self, out: &mut [F::Elem], g: &Cx<F::Elem>, x: &[F::Elem], negate: bool) {
        let f = self.field;
        if self.width() == 1 {
            let t = f.mul(&g.0, &x[0]);
            out[0] = if negate {
                f.sub(&out[0], &t)
            } else {
                f.add(&out[0], &t)
            };
        } else {
            let re = f.sub(&f.mul(&g.0, &x[0]), &f.mul(&g.1, &x[1]));
            let im = f.add(&f.mul(&g.0, &x[1]), &f.mul(&g.1, &x[0]));
            if negate {
                out[0] = f.sub(&out[0], &re);
                out[1] = f.sub(&out[1], &im);
            } else {
                out[0] = f.add(&out[0], &re);
                out[1] = f.add(&out[1], &im);
            }
        }
    }

    /// `[g, x] = g x - (-1)^{|g||x|} x g`, or `None` if zero.
    fn bracket(
        &self,
        g: &RestrictedOp<F::Elem>,
        x: &SectorVec<F::Elem>,
    ) -> Option<SectorVec<F::Elem>> {
        let w = self.width();
        let lay = self.layout;
        let xs = &lay.sectors[x.sector];
        let mut target: Option<usize> = None;
        let mut out: Vec<F::Elem> = Vec::new();
        let x_odd = xs.odd;
        let plus = g.odd && x_odd;
        let place = |e: usize, out: &mut Vec<F::Elem>, target: &mut Option<usize>| -> usize {
            let (s, k) = lay.entry_loc[e];
            match *target {
                None => {
                    *target = Some(s as usize);
                    *out = vec![self.field.zero(); lay.sectors[s as usize].entries.len() * w];
                }
                Some(t) => debug_assert_eq!(t, s as usize, "generator is not shift homogeneous"),
            }
            k as usize * w
        };
        for (k, &e) in xs.entries.iter().enumerate() {
            let xv = &x.coords[k * w..k * w + w];
            if xv.iter().all(|v| self.field.is_zero(v)) {
                continue;
            }
            let (b, r, c) = lay.entry(e as usize);
            let gb = &g.blocks[b];
            for (r2, gv) in &gb.by_col[r] {
                let pos = place(lay.entry_index(b, *r2 as usize, c), &mut out, &mut target);
                self.mac(&mut out[pos..pos + w], gv, xv, false);
            }
            for (c2, gv) in &gb.by_row[c] {
                let pos = place(lay.entry_index(b, r, *c2 as usize), &mut out, &mut target);
                // x g: coefficient order does not matter, scalars commute
                self.mac(&mut out[pos..pos + w], gv, xv, !plus);
            }
        }
        let sector = target?;
        if out.iter().all(|v| self.field.is_zero(v)) {
            return None;
        }
        Some(SectorVec {
            sector,
            coords: out,
        })
    }
}

/// Closure of the span of `generators` under `ad(g)` for every generator, on the
/// chosen blocks. Generators are processed first-in first-out; bracket results are
/// inserted in queue order, so the result does not depend on `threads`.
pub fn lie_closure<F: Field + Clone>(
    field: F,
    scalars: Scalars,
    generators: &[Operator],
    kinds: &[HwKind],
) -> Result<ClosureState<F>> {
    let start = Instant::now();
    let layout = Layout::new(kinds);
    let mut echelons: Vec<SectorEchelon<F::Elem>> =
        vec![SectorEchelon::default(); layout.sectors.len()];
    let mut stats = ClosureStats::default();
    let engine = Engine {
        field: &field,
        scalars,
        layout: &layout,
    };
    let gens: Vec<RestrictedOp<F::Elem>> = generators
        .iter()
        .map(|g| engine.restricted(g))
        .collect::<Result<_>>()?;
    let mut frontier: Vec<SectorVec<F::Elem>> = Vec::new();
    for g in generators {
        let mats = restrict_blocks(g, kinds)?;
        for piece in engine.split(&mats)? {
            if let Some(v) = echelons[piece.sector].insert(&field, piece.coords) {
                frontier.push(SectorVec {
                    sector: piece.sector,
                    coords: v,
                });
            }
        }
    }
    const BATCH: usize = 256;
    let mut next = 0;
    while next < frontier.len() {
        let end = (next + BATCH).min(frontier.len());
        let jobs: Vec<(usize, usize)> = (next..end)
            .flat_map(|x| (0..gens.len()).map(move |g| (x, g)))
            .collect();
        let candidates: Vec<SectorVec<F::Elem>> = jobs
            .par_iter()
            .filter_map(|&(x, g)| engine.bracket(&gens[g], &frontier[x]))
            .collect();
        stats.brackets += jobs.len();
        stats.nonzero_brackets += candidates.len();
        next = end;
        // reduce sector by sector in parallel, keeping queue order inside each sector
        let mut by_sector: HashMap<usize, Vec<usize>> = HashMap::new();
        for (k, c) in candidates.iter().enumerate() {
            by_sector.entry(c.sector).or_default().push(k);
        }
        let mut work: Vec<(usize, Vec<usize>, SectorEchelon<F::Elem>)> = by_sector
            .into_iter()
            .map(|(s, ks)| (s, ks, std::mem::take(&mut echelons[s])))
            .collect();
        let mut candidates: Vec<Option<SectorVec<F::Elem>>> =
            candidates.into_iter().map(Some).collect();
        let mut inputs: Vec<Vec<(usize, Vec<F::Elem>)>> = work
            .iter()
            .map(|(_, ks, _)| {
                ks.iter()
                    .map(|&k| (k, candidates[k].take().unwrap().coords))
                    .collect()
            })
            .collect();
        let fresh: Vec<Vec<(usize, Vec<F::Elem>)>> = work
            .par_iter_mut()
            .zip(inputs.par_iter_mut())
            .map(|((_, _, ech), input)| {
                std::mem::take(input)
                    .into_iter()
                    .filter_map(|(k, v)| ech.insert(&field, v).map(|v| (k, v)))
                    .collect()
            })
            .collect();
        let mut new_elems: Vec<(usize, usize, Vec<F::Elem>)> = Vec::new();
        for ((s, _, ech), list) in work.into_iter().zip(fresh) {
            echelons[s] = ech;
            new_elems.extend(list.into_iter().map(|(k, v)| (k, s, v)));
        }
        new_elems.sort_by_key(|(k, _, _)| *k);
        frontier.extend(
            new_elems
                .into_iter()
                .map(|(_, sector, coords)| SectorVec { sector, coords }),
        );
    }
    stats.wall_seconds = start.elapsed().as_secs_f64();
    Ok(ClosureState {
        field,
        scalars,
        layout,
        echelons,
        stats,
    })
}

/// Summary of a closure run.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ClosureSummary {
    pub field: String,
    pub prime: Option<u64>,
    pub scalars: Scalars,
    pub blocks: Vec<HwKind>,
    pub dimension: usize,
    pub block_dimensions: Vec<usize>,
    pub even_dimension: usize,
    pub odd_dimension: usize,
    pub basis_hash: String,
    pub brackets: usize,
}

impl<F: Field + Clone> ClosureState<F> {
    pub fn dimension(&self) -> usize {
        self.echelons.iter().map(|e| e.rows.len()).sum()
    }

    /// `(even, odd)` dimensions.
    pub fn parity_dimensions(&self) -> (usize, usize) {
        let mut d = (0, 0);
        for (s, e) in self.layout.sectors.iter().zip(&self.echelons) {
            if s.odd {
                d.1 += e.rows.len();
            } else {
                d.0 += e.rows.len();
            }
        }
        d
    }

    /// Rank of the projection of the span onto each block.
    pub fn block_dimensions(&self) -> Vec<usize> {
        let w = self.scalars.width();
        (0..self.layout.blocks.len())
            .map(|bi| {
                self.layout
                    .sectors
                    .par_iter()
                    .zip(&self.echelons)
                    .map(|(s, e)| {
                        let r = &s.block_ranges[bi];
                        if r.is_empty() || e.rows.is_empty() {
                            return 0;
                        }
                        let mut ech = SectorEchelon::default();
                        let mut n = 0;
                        for row in &e.rows {
                            if ech
                                .insert(&self.field, row[r.start * w..r.end * w].to_vec())
                                .is_some()
                            {
                                n += 1;
                            }
                        }
                        n
                    })
                    .sum()
            })
            .collect()
    }

    /// SHA-256 over sector shifts, pivots and encoded rows.
    pub fn basis_hash(&self) -> String {
        let mut h = Sha256::new();
        let mut buf = Vec::new();
        for (s, e) in self.layout.sectors.iter().zip(&self.echelons) {
            let mut order: Vec<usize> = (0..e.rows.len()).collect();
            order.sort_by_key(|&k| e.pivots[k]);
            buf.clear();
            buf.extend(s.shift.0.iter().map(|&x| x as u8));
            for k in order {
                buf.extend_from_slice(&(e.pivots[k] as u64).to_le_bytes());
                for x in &e.rows[k] {
                    self.field.encode(x, &mut buf);
                }
            }
            h.update(&buf);
        }
        hex::encode(h.finalize())
    }

    /// Whether the restriction of `φ` lies in the span.
    pub fn contains(&self, phi: &Operator) -> Result<bool> {
        let engine = Engine {
            field: &self.field,
            scalars: self.scalars,
            layout: &self.layout,
        };
        let mats = restrict_blocks(phi, &self.layout.kinds())?;
        for mut piece in engine.split(&mats)? {
            self.echelons[piece.sector].reduce(&self.field, &mut piece.coords);
            if piece.coords.iter().any(|x| !self.field.is_zero(x)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Basis vectors whose supertrace on some block is nonzero (first few).
    pub fn supertrace_violations(&self) -> Vec<(Shift, usize, usize)> {
        let w = self.scalars.width();
        let mut bad = Vec::new();
        for (s, e) in self.layout.sectors.iter().zip(&self.echelons) {
            if s.shift != Shift([0, 0, 0]) {
                continue;
            }
            for (ri, row) in e.rows.iter().enumerate() {
                let mut tr: Vec<Vec<F::Elem>> =
                    vec![vec![self.field.zero(); w]; self.layout.blocks.len()];
                for (k, &ent) in s.entries.iter().enumerate() {
                    let (b, r, c) = self.layout.entry(ent as usize);
                    if r != c {
                        continue;
                    }
                    let odd = r >= self.layout.blocks[b].n_even;
                    for t in 0..w {
                        let x = &row[k * w + t];
                        tr[b][t] = if odd {
                            self.field.sub(&tr[b][t], x)
                        } else {
                            self.field.add(&tr[b][t], x)
                        };
                    }
                }
                for (b, t) in tr.iter().enumerate() {
                    if t.iter().any(|x| !self.field.is_zero(x)) {
                        bad.push((s.shift, ri, b));
                    }
                }
            }
        }
        bad
    }

    /// For every basis element `φ` checks `<φx, y> + (-1)^{|φ||x|} <x, φy> = 0` on all
    /// pairs of basis vectors, with `<x, y> = (x, *y)`. Needs real coordinates
    /// (conjugation is not defined on complex residues). Returns the number of
    /// violating elements.
    pub fn pairing_violations(&self) -> Result<usize> {
        if self.scalars != Scalars::Real {
            return Err(Error::Unknown(
                "pairing check needs real coordinates".into(),
            ));
        }
        let f = &self.field;
        let hb = HwBases::get();
        // Gram matrices, sparse by row
        let grams: SparseBlocks<F::Elem> = self
            .layout
            .blocks
            .iter()
            .map(|b| {
                let v = &hb.basis(b.kind).vectors;
                (0..b.n)
                    .map(|a| {
                        (0..b.n)
                            .filter_map(|c| {
                                let z = v[a].poincare(&v[c]);
                                (!z.is_zero()).then(|| embed(f, Scalars::Real, &z).map(|e| (c, e)))
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let mut bad = 0;
        for (s, e) in self.layout.sectors.iter().zip(&self.echelons) {
            for row in &e.rows {
                // accumulate M[a, b] per block as a map
                let mut m: HashMap<(usize, usize, usize), Cx<F::Elem>> = HashMap::new();
                let mut acc = |key: (usize, usize, usize), z: Cx<F::Elem>| {
                    let ent = m.entry(key).or_insert_with(|| (f.zero(), f.zero()));
                    ent.0 = f.add(&ent.0, &z.0);
                    ent.1 = f.add(&ent.1, &z.1);
                };
                let cmul = |a: &Cx<F::Elem>, b: &Cx<F::Elem>| -> Cx<F::Elem> {
                    (
                        f.sub(&f.mul(&a.0, &b.0), &f.mul(&a.1, &b.1)),
                        f.add(&f.mul(&a.0, &b.1), &f.mul(&a.1, &b.0)),
                    )
                };
                for (k, &ent) in s.entries.iter().enumerate() {
                    let phi = (row[2 * k].clone(), row[2 * k + 1].clone());
                    if f.is_zero(&phi.0) && f.is_zero(&phi.1) {
                        continue;
                    }
                    let (b, c, a) = self.layout.entry(ent as usize);
                    let n_even = self.layout.blocks[b].n_even;
                    // term 1: sum_c φ[c, a] Q[c, bb] at (a, bb)
                    for (bb, q) in &grams[b][c] {
                        acc((b, a, *bb), cmul(&phi, q));
                    }
                    // term 2: s_a sum_c Q[a', c] conj(φ[c, bb]) at (a', bb) with c, bb = this entry
                    let conj = (phi.0.clone(), f.neg(&phi.1));
                    let bb = a;
                    for (a2, gram_row) in grams[b].iter().enumerate() {
                        if let Some((_, q)) = gram_row.iter().find(|(col, _)| *col == c) {
                            let mut z = cmul(q, &conj);
                            if s.odd && a2 >= n_even {
                                z = (f.neg(&z.0), f.neg(&z.1));
                            }
                            acc((b, a2, bb), z);
                        }
                    }
                }
                if m.values().any(|z| !f.is_zero(&z.0) || !f.is_zero(&z.1)) {
                    bad += 1;
                }
            }
        }
        Ok(bad)
    }

    pub fn summary(&self, field_name: &str, prime: Option<u64>) -> ClosureSummary {
        let (even, odd) = self.parity_dimensions();
        ClosureSummary {
            field: field_name.to_string(),
            prime,
            scalars: self.scalars,
            blocks: self.layout.kinds(),
            dimension: self.dimension(),
            block_dimensions: self.block_dimensions(),
            even_dimension: even,
            odd_dimension: odd,
            basis_hash: self.basis_hash(),
            brackets: self.stats.brackets,
        }
    }
}

/// Runs a closure and returns its summary; modular runs report `Error::NotInvertibleMod`
/// when a denominator vanishes so the caller can move to another prime.
pub fn run_closure(
    field: FieldChoice,
    scalars: Scalars,
    generators: &[Operator],
    kinds: &[HwKind],
) -> Result<ClosureSummary> {
    match field {
        FieldChoice::Exact => match scalars {
            Scalars::Real => Ok(lie_closure(Q, scalars, generators, kinds)?.summary("exact", None)),
            Scalars::Complex => {
                Ok(lie_closure(QI, scalars, generators, kinds)?.summary("exact", None))
            }
        },
        FieldChoice::Modular(p) => {
            let f = PrimeField::new(p)?;
            Ok(lie_closure(f, scalars, generators, kinds)?.summary("modular", Some(p)))
        }
    }
}

/// Sum over the four blocks of `dim su(n|n) = 4n^2 - 1`, with `2n = 40, 72, 40, 8`.
pub fn invariant_bound() -> usize {
    4 * (20 * 20 + 36 * 36 + 20 * 20 + 4 * 4) - 4
}

/// Closure computed directly on 512×512 operators over Q (real coordinates);
/// only sensible for small algebras. Stops once `limit` is exceeded.
pub fn full_space_closure(generators: &[Operator], limit: usize) -> Result<usize> {
    let flat = |op: &Operator| -> SparseVec<crate::exact_arith::Rational> {
        let mut v = SparseVec::new();
        for (r, c, z) in op.entries() {
            let k = 2 * (r.index() * 512 + c.index());
            if !z.re.is_zero_like() {
                v.insert(k, z.re.clone());
            }
            if !z.im.is_zero_like() {
                v.insert(k + 1, z.im.clone());
            }
        }
        v
    };
    let mut ech = Echelon::new(Q);
    let mut queue: Vec<Operator> = Vec::new();
    for g in generators {
        if ech.insert(flat(g)).is_some() {
            queue.push(g.clone());
        }
    }
    let mut k = 0;
    while k < queue.len() {
        for g in generators {
            let b = g.superbracket(&queue[k])?;
            if ech.insert(flat(&b)).is_some() {
                queue.push(b);
                if ech.rank() > limit {
                    return Ok(ech.rank());
                }
            }
        }
        k += 1;
    }
    Ok(ech.rank())
}

trait ZeroLike {
    fn is_zero_like(&self) -> bool;
}

impl ZeroLike for crate::exact_arith::Rational {
    fn is_zero_like(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

/// The 12 generators in frontier order.
pub fn default_generators() -> Vec<Operator> {
    Canonical::get().generators.clone()
}
