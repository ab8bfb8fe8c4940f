//! Named verification suites. Each returns a list of [`Check`]s plus a JSON payload
//! with the computed data; `all` runs them in dependency order.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use crate::closure::{
    full_space_closure, lie_closure, restrict_blocks, ClosureSummary, FieldChoice, Scalars,
};
use crate::error::{Error, Result};
use crate::exact_arith::{prime_below, GaussRational, PrimeField, DEFAULT_PRIMES, Q, QI};
use crate::exterior::{BasisIndex, Form};
use crate::hw_bases::{basis_checks, basis_facts, verify_pattern_tables, HwBases, HwKind};
use crate::linalg::rank;
use crate::operators::{
    kw_decompose, kw_decompose_normalized, kw_of_mask, s3_conjugate, Canonical, KwWeight, Operator,
    Perm,
};
use crate::rep_theory::{isotypical_table, GaussMatrix};
use crate::report::Check;

/// Registry in dependency order.
pub const SUITES: [&str; 6] = [
    "relations",
    "table1",
    "bases",
    "appendix",
    "structure",
    "closure",
];

/// Isotypical multiplicities per degree, columns `ρ0..ρ3`.
pub const ISOTYPICAL_MULTIPLICITIES: [[usize; 4]; 10] = [
    [1, 0, 0, 0],
    [0, 3, 0, 0],
    [3, 6, 3, 0],
    [10, 9, 8, 1],
    [6, 18, 9, 3],
    [6, 18, 9, 3],
    [10, 9, 8, 1],
    [3, 6, 3, 0],
    [0, 3, 0, 0],
    [1, 0, 0, 0],
];

pub const CLOSURE_DIMENSION: usize = 8396;
pub const BLOCK_DIMENSIONS: [usize; 4] = [1599, 5183, 1599, 15];
pub const INVARIANT_BOUND: usize = 8444;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub data: Value,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<Check>, data: Value) -> SuiteReport {
        let passed = checks.iter().all(|c| c.passed);
        SuiteReport {
            suite: suite.to_string(),
            passed,
            checks,
            data,
        }
    }
}

/// Inputs shared by the suites.
pub struct Context<'a> {
    pub canonical: &'a Canonical,
    pub primes: Vec<u64>,
}

impl Default for Context<'static> {
    fn default() -> Self {
        Context {
            canonical: Canonical::get(),
            primes: DEFAULT_PRIMES.to_vec(),
        }
    }
}

/// Primes from a comma separated list such as the `WSD_PRIMES` variable.
pub fn parse_primes(s: &str) -> Result<Vec<u64>> {
    let v: Vec<u64> = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("prime {t:?}: {e}")))
        })
        .collect::<Result<_>>()?;
    for &p in &v {
        PrimeField::new(p)?;
    }
    if v.is_empty() {
        return Err(Error::Parse("empty prime list".into()));
    }
    Ok(v)
}

/// Operator set with one Clifford generator doubled, for exercising failure paths.
/// `name` is `E<i><j>` or `I<i><j>`.
pub fn corrupted_canonical(name: &str) -> Result<Canonical> {
    let bad = || Error::Unknown(format!("cannot corrupt {name:?}"));
    let b = name.as_bytes();
    if b.len() != 3 {
        return Err(bad());
    }
    let (i, j) = (
        (b[1] as char).to_digit(10).ok_or_else(bad)? as usize,
        (b[2] as char).to_digit(10).ok_or_else(bad)? as usize,
    );
    if i == 0 || i > 3 || j > 2 {
        return Err(bad());
    }
    let mut c = Canonical::build();
    let two = GaussRational::from_int(2);
    match b[0] {
        b'E' => c.e[i - 1][j] = c.e[i - 1][j].scale(&two),
        b'I' => c.i[i - 1][j] = c.i[i - 1][j].scale(&two),
        _ => return Err(bad()),
    }
    Ok(c)
}

pub fn run_suite(name: &str, ctx: &Context) -> Result<SuiteReport> {
    match name {
        "relations" => Ok(relations(ctx)),
        "table1" => Ok(table1()),
        "bases" => bases(ctx),
        "appendix" => appendix(),
        "structure" => structure(ctx),
        "closure" => closure(ctx),
        _ => Err(Error::Unknown(format!("suite {name:?}"))),
    }
}

/// `all` expands to the registry; other names must be registered.
pub fn expand_selector(selector: &str) -> Result<Vec<&'static str>> {
    if selector == "all" {
        return Ok(SUITES.to_vec());
    }
    SUITES
        .iter()
        .find(|s| **s == selector)
        .map(|s| vec![*s])
        .ok_or_else(|| Error::Unknown(format!("suite {selector:?}")))
}

fn anti(a: &Operator, b: &Operator) -> Operator {
    a.compose(b).add(&b.compose(a))
}

fn comm(a: &Operator, b: &Operator) -> Operator {
    a.compose(b).sub(&b.compose(a))
}

/// One check per family; failures are named in the detail.
fn family(name: &str, results: Vec<(String, bool)>) -> Check {
    let total = results.len();
    let failed: Vec<String> = results
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| n)
        .collect();
    let detail = if failed.is_empty() {
        format!("{total}/{total}")
    } else {
        let shown: Vec<_> = failed.iter().take(5).cloned().collect();
        format!(
            "{}/{total} hold; failing: {}",
            total - failed.len(),
            shown.join("; ")
        )
    };
    Check::with_detail(name, failed.is_empty(), detail)
}

fn pairs() -> Vec<(usize, usize)> {
    (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).collect()
}

/// Anticommutation relations of the creation and annihilation operators, plus the
/// two adjoint readings.
pub fn clifford_checks(c: &Canonical) -> Vec<Check> {
    let id = Operator::identity();
    let nm = |p: (usize, usize)| format!("({},{})", p.0 + 1, p.1);
    let mut ee = Vec::new();
    let mut ii = Vec::new();
    let mut ei = Vec::new();
    let mut unit = Vec::new();
    for p in pairs() {
        for q in pairs() {
            let (e1, e2) = (&c.e[p.0][p.1], &c.e[q.0][q.1]);
            let (i1, i2) = (&c.i[p.0][p.1], &c.i[q.0][q.1]);
            ee.push((
                format!("E{}E{} + E{}E{} = 0", nm(p), nm(q), nm(q), nm(p)),
                anti(e1, e2).is_zero(),
            ));
            ii.push((
                format!("I{}I{} + I{}I{} = 0", nm(p), nm(q), nm(q), nm(p)),
                anti(i1, i2).is_zero(),
            ));
            if p == q {
                unit.push((
                    format!("E{}I{} + I{}E{} = Id", nm(p), nm(p), nm(p), nm(p)),
                    anti(e1, i1) == id,
                ));
            } else {
                ei.push((
                    format!("E{}I{} + I{}E{} = 0", nm(p), nm(q), nm(q), nm(p)),
                    anti(e1, i2).is_zero(),
                ));
            }
        }
    }
    let parity = &c.parity;
    let plain = pairs()
        .into_iter()
        .map(|p| {
            (
                format!("E{}^* = I{}", nm(p), nm(p)),
                c.e[p.0][p.1].plain_adjoint() == c.i[p.0][p.1],
            )
        })
        .collect();
    let sup = pairs()
        .into_iter()
        .map(|p| {
            let ok = c.e[p.0][p.1]
                .super_adjoint()
                .map(|s| s == c.i[p.0][p.1].compose(parity).neg())
                .unwrap_or(false);
            (format!("super adjoint of E{} = -I{} P", nm(p), nm(p)), ok)
        })
        .collect();
    vec![
        family("E anticommute", ee),
        family("I anticommute", ii),
        family("E I anticommute off the diagonal", ei),
        family("E I + I E = Id", unit),
        family("metric adjoint of E is I", plain),
        family("super adjoint of E is -I P", sup),
    ]
}

/// `[g, J_k] = 0` for every generator and the S3 equivariance identities.
pub fn invariance_checks(c: &Canonical) -> Vec<Check> {
    let mut inv = Vec::new();
    for (g, name) in c.generators.iter().zip(crate::operators::GENERATOR_NAMES) {
        for k in 0..3 {
            let ok = g
                .superbracket(&c.j[k])
                .map(|b| b.is_zero())
                .unwrap_or(false);
            inv.push((format!("[{name}, J{}] = 0", k + 1), ok));
        }
    }
    let mut eq = Vec::new();
    for s in Perm::all() {
        let eps = GaussRational::one().signed(s.is_odd());
        for j in 0..3 {
            let t = s.apply(j);
            let n = s.name();
            eq.push((
                format!("{n}(V{j}) = V{t}"),
                s3_conjugate(s, &c.v[j]) == c.v[t],
            ));
            eq.push((
                format!("{n}(A{j}) = A{t}"),
                s3_conjugate(s, &c.a[j]) == c.a[t],
            ));
            eq.push((
                format!("{n}(L{j}) = eps L{t}"),
                s3_conjugate(s, &c.l[j]) == c.l[t].scale(&eps),
            ));
            eq.push((
                format!("{n}(Lam{j}) = eps Lam{t}"),
                s3_conjugate(s, &c.lam[j]) == c.lam[t].scale(&eps),
            ));
            eq.push((
                format!("{n}(J{}) = J{}", j + 1, j + 1),
                s3_conjugate(s, &c.j[j]) == c.j[j],
            ));
        }
    }
    vec![
        family("generators commute with J1, J2, J3", inv),
        family("S3 equivariance", eq),
    ]
}

const CARTAN_A3: [[i64; 3]; 3] = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]];

/// Serre relations of type A3 and the rotation triple relations.
pub fn serre_checks(c: &Canonical) -> Vec<Check> {
    let (e, f, h) = (&c.serre_e, &c.serre_f, &c.serre_h);
    let mut rel = Vec::new();
    for k in 0..3 {
        for l in 0..3 {
            let a = GaussRational::from_int(CARTAN_A3[k][l]);
            rel.push((format!("[h{k},h{l}] = 0"), comm(&h[k], &h[l]).is_zero()));
            let want = if k == l {
                h[k].clone()
            } else {
                Operator::zero()
            };
            rel.push((
                format!("[e{k},f{l}] = delta h{k}"),
                comm(&e[k], &f[l]) == want,
            ));
            rel.push((
                format!("[h{k},e{l}] = a{k}{l} e{l}"),
                comm(&h[k], &e[l]) == e[l].scale(&a),
            ));
            rel.push((
                format!("[h{k},f{l}] = -a{k}{l} f{l}"),
                comm(&h[k], &f[l]) == f[l].scale(&-a.clone()),
            ));
            if k != l {
                let times = (1 - CARTAN_A3[k][l]) as usize;
                let (mut xe, mut xf) = (e[l].clone(), f[l].clone());
                for _ in 0..times {
                    xe = comm(&e[k], &xe);
                    xf = comm(&f[k], &xf);
                }
                rel.push((format!("ad(e{k})^{times} e{l} = 0"), xe.is_zero()));
                rel.push((format!("ad(f{k})^{times} f{l} = 0"), xf.is_zero()));
            }
        }
    }
    let two = GaussRational::from_int(2);
    let triple = vec![
        (
            "[h,e] = 2e".to_string(),
            comm(&c.sl2_h, &c.sl2_e) == c.sl2_e.scale(&two),
        ),
        (
            "[h,f] = -2f".to_string(),
            comm(&c.sl2_h, &c.sl2_f) == c.sl2_f.scale(&-two.clone()),
        ),
        ("[e,f] = h".to_string(), comm(&c.sl2_e, &c.sl2_f) == c.sl2_h),
    ];
    let nonzero = (0..3).all(|k| !e[k].is_zero() && !f[k].is_zero() && !h[k].is_zero());
    vec![
        Check::new("Serre generators nonzero", nonzero),
        family("A3 Serre relations", rel),
        family("rotation triple relations", triple),
    ]
}

/// Real dimension of the algebra generated by `iL_j, iΛ_j` on all forms.
pub fn even_closure_check(c: &Canonical) -> Check {
    match full_space_closure(c.even_generators(), 64) {
        Ok(d) => Check::equal("closure of the six even generators", d, 15),
        Err(e) => Check::with_detail("closure of the six even generators", false, e.to_string()),
    }
}

/// Weight set `{w : w_j = 0, w_k ∈ {0, -1}}` expected for `iL_j` (negated for `iΛ_j`).
pub fn expected_kw_weights(j: usize, sign: i8) -> BTreeSet<KwWeight> {
    let mut out = BTreeSet::new();
    for bits in 0..4u8 {
        let mut w = [0i8; 3];
        let others: Vec<usize> = (0..3).filter(|&k| k != j).collect();
        for (b, &k) in others.iter().enumerate() {
            if bits >> b & 1 == 1 {
                w[k] = -sign;
            }
        }
        out.insert(KwWeight(w));
    }
    out
}

pub fn kw_checks(c: &Canonical) -> Vec<Check> {
    let i = GaussRational::i();
    let mut eig = Vec::new();
    for m in 0..3 {
        for x in BasisIndex::all() {
            let img = c.k[m][m].apply_basis(x);
            let z = GaussRational::from_ints(0, kw_of_mask(x)[m] as i64);
            let ok = img == Form::monomial(x, z);
            eig.push((
                format!("K{m}{m} on {}", crate::exterior::monomial_name(x)),
                ok,
            ));
        }
    }
    let mut buckets = Vec::new();
    let mut eigen = Vec::new();
    let even_proj = Operator::diagonal(|m| {
        if m.is_odd() {
            GaussRational::zero()
        } else {
            GaussRational::one()
        }
    });
    for j in 0..3 {
        for (g, sign, name) in [
            (&c.generators[j], 1i8, format!("iL{j}")),
            (&c.generators[3 + j], -1, format!("iLam{j}")),
        ] {
            let want = expected_kw_weights(j, sign);
            let norm = kw_decompose_normalized(g);
            let got: BTreeSet<_> = norm.keys().copied().collect();
            let sum = norm.values().fold(Operator::zero(), |a, b| a.add(b));
            buckets.push((
                format!(
                    "{name} splits into {:?}",
                    want.iter().map(|w| w.label()).collect::<Vec<_>>()
                ),
                got == want && sum == *g,
            ));
            let on_even: BTreeSet<_> = kw_decompose(&g.compose(&even_proj))
                .keys()
                .copied()
                .collect();
            buckets.push((
                format!("{name} on even forms has the same eigen-buckets"),
                on_even == want,
            ));
            for (w, part) in kw_decompose(g) {
                for m in 0..3 {
                    let z = GaussRational::from_ints(0, w.0[m] as i64);
                    let ok = comm(&c.k[m][m], &part) == part.scale(&z);
                    eigen.push((
                        format!(
                            "[K{m}{m}, {name}^{}] = z{m} {name}^{}",
                            w.label(),
                            w.label()
                        ),
                        ok,
                    ));
                }
            }
        }
    }
    let mut hk = Vec::new();
    for j in 0..3 {
        for l in 0..3 {
            for m in 0..3 {
                let coef = -3 * (j == l) as i64 + 3 * (j == m) as i64;
                let ok =
                    comm(&c.h[j], &c.k[l][m]) == c.k[l][m].scale(&GaussRational::from_int(coef));
                hk.push((format!("[H{j},K{l}{m}] = {coef} K{l}{m}"), ok));
            }
        }
    }
    let k00 = c.k[0][0].apply(&Form::one()) == Form::one().scale(&i);
    vec![
        Check::new("K00(1) = i", k00),
        family("K_mm eigenvalues on monomials", eig),
        family("Kw splitting of iL_j and iLam_j", buckets),
        family("Kw buckets are ad(K_mm) eigenvectors", eigen),
        family("[H_j, K_lm] = (-3 d_jl + 3 d_jm) K_lm", hk),
    ]
}

pub fn relations(ctx: &Context) -> SuiteReport {
    let c = ctx.canonical;
    let mut checks = clifford_checks(c);
    checks.extend(invariance_checks(c));
    checks.extend(serre_checks(c));
    checks.push(even_closure_check(c));
    checks.extend(kw_checks(c));
    SuiteReport::new("relations", checks, json!({}))
}

pub fn table1() -> SuiteReport {
    let t = isotypical_table();
    let mut checks = Vec::new();
    for (d, row) in ISOTYPICAL_MULTIPLICITIES.iter().enumerate() {
        checks.push(Check::equal(
            format!("degree {d} multiplicities"),
            t.multiplicity[d],
            *row,
        ));
    }
    checks.push(Check::new(
        "multiplicities account for every degree",
        t.dimensions_consistent(),
    ));
    checks.push(Check::equal(
        "highest weight dimensions",
        t.hw_dimensions(),
        [40, 72, 40, 8],
    ));
    checks.push(Check::equal(
        "even|odd splits",
        t.hw_parity_split(),
        [(20, 20), (36, 36), (20, 20), (4, 4)],
    ));
    let data = json!({ "multiplicity": t.multiplicity, "hw_dimensions": t.hw_dimensions() });
    SuiteReport::new("table1", checks, data)
}

/// `iL_j` on the odd half of HW3 has a single entry 1 at row `j+1`, column 0;
/// the six V/A operators vanish on HW3.
pub fn hw3_matrix_checks(c: &Canonical) -> Result<Vec<Check>> {
    let hb = HwBases::get();
    let b = hb.basis(HwKind::HW3);
    let mut out = Vec::new();
    for j in 0..3 {
        let m = hb.restrict(HwKind::HW3, &c.generators[j])?;
        let odd = m.submatrix(b.odd_range(), b.odd_range());
        let mut want = GaussMatrix::zeros(4, 4);
        want.set(j + 1, 0, GaussRational::one());
        out.push(Check::new(
            format!("iL{j} on the odd half of hw3"),
            odd == want,
        ));
    }
    let zero =
        c.v.iter()
            .chain(&c.a)
            .map(|op| hb.restrict(HwKind::HW3, op).map(|m| m.is_zero()))
            .collect::<Result<Vec<_>>>()?;
    out.push(Check::new(
        "V0..V2, A0..A2 vanish on hw3",
        zero.iter().all(|z| *z),
    ));
    let k01 = restrict_blocks(&c.k[0][1], &[HwKind::HW0, HwKind::HW2])?;
    out.push(Check::new(
        "K01 is nonzero on hw0 and zero on hw2",
        !k01[0].is_zero() && k01[1].is_zero(),
    ));
    Ok(out)
}

pub fn bases(ctx: &Context) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let mut sizes = Vec::new();
    for k in HwKind::ALL {
        checks.extend(basis_checks(k));
        checks.extend(basis_facts(k).into_iter().map(|mut c| {
            c.name = format!("{}: {}", k.name(), c.name);
            c
        }));
        sizes.push(HwBases::get().basis(k).len());
    }
    checks.extend(hw3_matrix_checks(ctx.canonical)?);
    let labels: Vec<Vec<String>> = HwKind::ALL
        .iter()
        .map(|k| {
            HwBases::get()
                .basis(*k)
                .labels
                .iter()
                .map(|l| l.to_string())
                .collect()
        })
        .collect();
    Ok(SuiteReport::new(
        "bases",
        checks,
        json!({ "sizes": sizes, "labels": labels }),
    ))
}

pub fn appendix() -> Result<SuiteReport> {
    let reports = verify_pattern_tables()?;
    let checks = reports
        .iter()
        .map(|r| {
            Check::with_detail(
                format!("{} marked pattern", r.name),
                r.passed,
                format!(
                    "{} marked, {} missing, {} unexpected",
                    r.marked,
                    r.missing.len(),
                    r.unexpected.len()
                ),
            )
        })
        .collect();
    Ok(SuiteReport::new(
        "appendix",
        checks,
        serde_json::to_value(&reports).map_err(|e| Error::Unknown(e.to_string()))?,
    ))
}

/// Rank of the pairing `(x, *y)` on each highest weight basis.
pub fn pairing_ranks() -> [usize; 4] {
    HwKind::ALL.map(|k| {
        let v = &HwBases::get().basis(k).vectors;
        let rows = v.iter().map(|x| {
            v.iter()
                .enumerate()
                .filter_map(|(c, y)| Some((c, x.poincare(y))).filter(|(_, z)| !z.is_zero()))
                .collect()
        });
        rank(QI, rows)
    })
}

/// Supertrace of a block matrix with the even half first.
pub fn supertrace(m: &GaussMatrix, n_even: usize) -> GaussRational {
    (0..m.rows).fold(GaussRational::zero(), |acc, k| {
        if k < n_even {
            &acc + m.get(k, k)
        } else {
            &acc - m.get(k, k)
        }
    })
}

pub fn structure(ctx: &Context) -> Result<SuiteReport> {
    let c = ctx.canonical;
    let mut checks = Vec::new();
    let star = c
        .generators
        .iter()
        .zip(crate::operators::GENERATOR_NAMES)
        .map(|(g, n)| {
            (
                format!("{n}^* = -*{n}*"),
                g.super_adjoint()
                    .map(|s| s == g.hodge_conjugate().neg())
                    .unwrap_or(false),
            )
        })
        .collect();
    checks.push(family("generators are super-antiHermitean", star));
    checks.push(Check::new(
        "Hodge star squares to the identity",
        c.hodge.compose(&c.hodge) == Operator::identity(),
    ));
    checks.push(Check::equal(
        "pairing ranks on hw0..hw3",
        pairing_ranks(),
        [40, 72, 40, 8],
    ));
    let hb = HwBases::get();
    let mut st = Vec::new();
    for (g, n) in c.generators.iter().zip(crate::operators::GENERATOR_NAMES) {
        for k in HwKind::ALL {
            let m = hb.restrict(k, g)?;
            st.push((
                format!("supertrace of {n} on {}", k.name()),
                supertrace(&m, hb.basis(k).n_even).is_zero(),
            ));
        }
    }
    checks.push(family("generator supertraces vanish", st));

    let p = ctx.primes[0];
    let state = lie_closure(
        PrimeField::new(p)?,
        Scalars::Real,
        &c.generators,
        &HwKind::ALL,
    )?;
    let st = state.supertrace_violations();
    checks.push(Check::with_detail(
        "supertrace of every closure basis element",
        st.is_empty(),
        format!("{} violations mod {p}", st.len()),
    ));
    let pv = state.pairing_violations()?;
    checks.push(Check::with_detail(
        "closure basis preserves the pairing",
        pv == 0,
        format!("{pv} violations mod {p}"),
    ));
    let mut dag = Vec::new();
    for (g, n) in c.generators.iter().zip(crate::operators::GENERATOR_NAMES) {
        dag.push((
            format!("dagger of {n} in the span"),
            state.contains(&g.dagger()?)?,
        ));
    }
    checks.push(family("closure is stable under dagger", dag));
    let cx = lie_closure(
        PrimeField::new(p)?,
        Scalars::Complex,
        &c.generators,
        &HwKind::ALL,
    )?;
    checks.push(Check::equal(
        "complexified dimension",
        cx.dimension(),
        CLOSURE_DIMENSION,
    ));
    checks.push(Check::equal(
        "real dimension of the complexification",
        2 * cx.dimension(),
        2 * CLOSURE_DIMENSION,
    ));
    checks.push(Check::equal(
        "gap to the invariant bound",
        INVARIANT_BOUND.saturating_sub(state.dimension()),
        48,
    ));
    let data = json!({ "prime": p, "real_dimension": state.dimension(), "complex_dimension": cx.dimension() });
    Ok(SuiteReport::new("structure", checks, data))
}

/// Modular closure that moves to a smaller prime when a denominator vanishes mod `p`.
/// Returns the summary and the primes that had to be skipped.
pub fn closure_with_retry(
    p: u64,
    scalars: Scalars,
    gens: &[Operator],
    kinds: &[HwKind],
) -> Result<(ClosureSummary, Vec<u64>)> {
    let mut skipped = Vec::new();
    let mut q = p;
    loop {
        match crate::closure::run_closure(FieldChoice::Modular(q), scalars, gens, kinds) {
            Err(Error::NotInvertibleMod(bad)) => {
                skipped.push(bad);
                q = prime_below(q).ok_or(Error::BadModulus(q))?;
            }
            other => return other.map(|s| (s, skipped)),
        }
    }
}

/// Expected dimension of the closure on a single block or on all of them.
pub fn expected_dimension(kinds: &[HwKind]) -> Option<usize> {
    match kinds {
        [k] => Some(BLOCK_DIMENSIONS[k.index()]),
        _ if kinds == HwKind::ALL => Some(CLOSURE_DIMENSION),
        _ => None,
    }
}

pub fn closure(ctx: &Context) -> Result<SuiteReport> {
    let gens = &ctx.canonical.generators;
    let mut checks = Vec::new();
    let mut summaries = Vec::new();
    for &p in &ctx.primes {
        let (s, skipped) = closure_with_retry(p, Scalars::Real, gens, &HwKind::ALL)?;
        let tag = format!("mod {}", s.prime.unwrap_or(p));
        if !skipped.is_empty() {
            checks.push(Check::with_detail(
                format!("{tag}: pivot loss"),
                true,
                format!("skipped {skipped:?}"),
            ));
        }
        checks.push(Check::equal(
            format!("{tag}: dimension"),
            s.dimension,
            CLOSURE_DIMENSION,
        ));
        checks.push(Check::equal(
            format!("{tag}: block dimensions"),
            s.block_dimensions.clone(),
            BLOCK_DIMENSIONS.to_vec(),
        ));
        checks.push(Check::new(
            format!("{tag}: within the invariant bound"),
            s.dimension <= INVARIANT_BOUND,
        ));
        summaries.push(s);
    }
    let agree = summaries.windows(2).all(|w| {
        w[0].dimension == w[1].dimension && w[0].block_dimensions == w[1].block_dimensions
    });
    checks.push(Check::new("primes agree", agree));
    let again = crate::closure::run_closure(
        FieldChoice::Modular(summaries[0].prime.unwrap_or(ctx.primes[0])),
        Scalars::Real,
        gens,
        &HwKind::ALL,
    )?;
    checks.push(Check::new(
        "repeat run has the same basis hash",
        again.basis_hash == summaries[0].basis_hash,
    ));
    let hw3 = lie_closure(Q, Scalars::Real, gens, &[HwKind::HW3])?;
    checks.push(Check::equal("exact closure on hw3", hw3.dimension(), 15));
    let hw3_mod = summaries[0].block_dimensions[3];
    checks.push(Check::equal(
        "exact and modular agree on hw3",
        hw3.dimension(),
        hw3_mod,
    ));
    Ok(SuiteReport::new(
        "closure",
        checks,
        json!({ "runs": summaries, "exact_hw3": hw3.dimension() }),
    ))
}
