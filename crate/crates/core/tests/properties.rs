mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wsd_core::exact_arith::{mod_project, rat, PrimeField, DEFAULT_PRIMES, QI};
use wsd_core::exterior::{BasisIndex, Form, Pos};
use wsd_core::linalg::{rank, SparseVec};
use wsd_core::GaussRational;

fn mono(m: u16) -> Form {
    Form::monomial(BasisIndex::new(m).unwrap(), GaussRational::one())
}

fn low_degree() -> Vec<u16> {
    (0..512u16).filter(|m| m.count_ones() <= 3).collect()
}

fn sign_of(neg: bool) -> GaussRational {
    GaussRational::one().signed(neg)
}

#[test]
fn wedge_matches_permutation_sign_oracle() {
    for s in 0..512u16 {
        for t in 0..512u16 {
            let got = mono(s).wedge(&mono(t));
            let mut p = common::positions(s);
            p.extend(common::positions(t));
            let want = match common::wedge_positions(&p) {
                None => Form::zero(),
                Some((neg, m)) => Form::monomial(BasisIndex::new(m).unwrap(), sign_of(neg)),
            };
            assert_eq!(got, want, "{s} ^ {t}");
        }
    }
}

#[test]
fn wedge_associative_up_to_degree_three() {
    let ms = low_degree();
    let forms: Vec<Form> = ms.iter().map(|&m| mono(m)).collect();
    for a in &forms {
        for b in &forms {
            let ab = a.wedge(b);
            for c in &forms {
                let bc = b.wedge(c);
                assert_eq!(ab.wedge(c), a.wedge(&bc));
            }
        }
    }
}

#[test]
fn wedge_graded_commutative() {
    for s in 0..512u16 {
        for t in 0..512u16 {
            let neg = (s.count_ones() * t.count_ones()) % 2 == 1;
            assert_eq!(
                mono(s).wedge(&mono(t)),
                mono(t).wedge(&mono(s)).scale(&sign_of(neg))
            );
        }
    }
}

#[test]
fn contraction_is_adjoint_of_wedge() {
    let forms: Vec<Form> = (0..512u16).map(mono).collect();
    for pos in Pos::all() {
        let v = Form::v(pos.i(), pos.j()).unwrap();
        let wedged: Vec<Form> = forms.iter().map(|a| v.wedge(a)).collect();
        let contracted: Vec<Form> = forms.iter().map(|b| b.contract(pos)).collect();
        for (a, va) in forms.iter().zip(&wedged) {
            for (b, cb) in forms.iter().zip(&contracted) {
                assert_eq!(va.inner(b), a.inner(cb));
            }
        }
    }
}

#[test]
fn hodge_star_is_an_involutive_isometry() {
    let forms: Vec<Form> = (0..512u16).map(mono).collect();
    let stars: Vec<Form> = forms.iter().map(|f| f.hodge_star()).collect();
    for (a, sa) in forms.iter().zip(&stars) {
        assert_eq!(&sa.hodge_star(), a);
        for (b, sb) in forms.iter().zip(&stars) {
            assert_eq!(sa.inner(sb), a.inner(b));
        }
    }
}

#[test]
fn even_odd_pairing_has_full_rank() {
    let even: Vec<u16> = (0..512u16).filter(|m| m.count_ones() % 2 == 0).collect();
    let odd: Vec<u16> = (0..512u16).filter(|m| m.count_ones() % 2 == 1).collect();
    assert_eq!((even.len(), odd.len()), (256, 256));
    let rows = even.iter().map(|&e| {
        odd.iter()
            .enumerate()
            .filter_map(|(c, &o)| {
                Some((c, mono(e).poincare(&mono(o)))).filter(|(_, z)| !z.is_zero())
            })
            .collect::<SparseVec<_>>()
    });
    assert_eq!(rank(QI, rows), 256);
}

#[test]
fn omega_1_cubed_by_expansion() {
    // expand (sum_i v_i0 ^ v_i1)^3 over all ordered choices of terms
    let terms: Vec<[usize; 2]> = (1..=3)
        .map(|i| {
            [
                Pos::new(i, 0).unwrap().index(),
                Pos::new(i, 1).unwrap().index(),
            ]
        })
        .collect();
    let mut want = Form::zero();
    for a in &terms {
        for b in &terms {
            for c in &terms {
                let p = [a[0], a[1], b[0], b[1], c[0], c[1]];
                if let Some((neg, m)) = common::wedge_positions(&p) {
                    want.add_term(BasisIndex::new(m).unwrap(), &sign_of(neg));
                }
            }
        }
    }
    let w = Form::omega_1();
    let got = w.wedge(&w).wedge(&w);
    assert_eq!(got, want);
    let v = |i, j| Form::v(i, j).unwrap();
    let product = v(1, 0)
        .wedge(&v(1, 1))
        .wedge(&v(2, 0))
        .wedge(&v(2, 1))
        .wedge(&v(3, 0))
        .wedge(&v(3, 1));
    assert_eq!(got, product.scale(&GaussRational::from_int(6)));
}

/// `(a/b) + (c/d) i` as raw big integers.
#[derive(Clone, Debug)]
struct RawGauss {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl RawGauss {
    fn new(a: i64, b: i64, c: i64, d: i64) -> RawGauss {
        RawGauss {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    fn to_gauss(&self) -> GaussRational {
        GaussRational::new(
            num_rational::BigRational::new(self.a.clone(), self.b.clone()),
            num_rational::BigRational::new(self.c.clone(), self.d.clone()),
        )
    }

    fn add(&self, o: &RawGauss) -> RawGauss {
        RawGauss {
            a: &self.a * &o.b + &o.a * &self.b,
            b: &self.b * &o.b,
            c: &self.c * &o.d + &o.c * &self.d,
            d: &self.d * &o.d,
        }
    }

    fn mul(&self, o: &RawGauss) -> RawGauss {
        // (x + yi)(u + vi) = (xu - yv) + (xv + yu) i
        let re_num = &self.a * &o.a * &self.d * &o.d - &self.c * &o.c * &self.b * &o.b;
        let im_num = &self.a * &o.c * &self.d * &o.b + &self.c * &o.a * &self.b * &o.d;
        let den = &self.b * &o.b * &self.d * &o.d;
        RawGauss {
            a: re_num,
            b: den.clone(),
            c: im_num,
            d: den,
        }
    }

    /// Cross-multiplied equality with a reduced value.
    fn equals(&self, g: &GaussRational) -> bool {
        &self.a * g.re.denom() == g.re.numer() * &self.b
            && &self.c * g.im.denom() == g.im.numer() * &self.d
    }
}

fn raw() -> impl Strategy<Value = RawGauss> {
    (-1000i64..1000, 1i64..60, -1000i64..1000, 1i64..60)
        .prop_map(|(a, b, c, d)| RawGauss::new(a, b, c, d))
}

fn small_form() -> impl Strategy<Value = Form> {
    prop::collection::vec((0u16..512, -5i64..5, -5i64..5), 0..8).prop_map(|terms| {
        let mut f = Form::zero();
        for (m, re, im) in terms {
            f.add_term(
                BasisIndex::new(m).unwrap(),
                &GaussRational::from_ints(re, im),
            );
        }
        f
    })
}

proptest! {
    #[test]
    fn gauss_arithmetic_matches_big_integer_oracle(x in raw(), y in raw()) {
        let (gx, gy) = (x.to_gauss(), y.to_gauss());
        prop_assert!(x.add(&y).equals(&(&gx + &gy)));
        prop_assert!(x.mul(&y).equals(&(&gx * &gy)));
        if !gy.is_zero() {
            let q = gx.checked_div(&gy).unwrap();
            prop_assert_eq!(&q * &gy, gx);
        }
    }

    #[test]
    fn display_parse_round_trip(x in raw()) {
        let g = x.to_gauss();
        prop_assert_eq!(g.to_string().parse::<GaussRational>().unwrap(), g);
    }

    #[test]
    fn form_text_round_trip(f in small_form()) {
        prop_assert_eq!(f.to_string().parse::<Form>().unwrap(), f);
    }

    #[test]
    fn hodge_isometry_on_random_forms(a in small_form(), b in small_form()) {
        prop_assert_eq!(a.hodge_star().inner(&b.hodge_star()), a.inner(&b));
        prop_assert_eq!(a.hodge_star().hodge_star(), a);
    }

    #[test]
    fn wedge_bilinear_and_associative(a in small_form(), b in small_form(), c in small_form()) {
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
        prop_assert_eq!(a.wedge(&(b.clone() + c.clone())), a.wedge(&b) + a.wedge(&c));
    }
}

#[test]
fn mod_project_is_a_ring_map() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_251_015);
    for &p in &DEFAULT_PRIMES {
        let f = PrimeField::new(p).unwrap();
        // i^2 = -1
        let i = mod_project(&GaussRational::i(), &f).unwrap();
        assert_eq!((i * i).residue, p - 1);
        let draw = |rng: &mut ChaCha8Rng| {
            GaussRational::new(
                rat(
                    rng.gen_range(-1_000_000..1_000_000),
                    rng.gen_range(1..10_000),
                ),
                rat(
                    rng.gen_range(-1_000_000..1_000_000),
                    rng.gen_range(1..10_000),
                ),
            )
        };
        for _ in 0..10_000 {
            let (x, y) = (draw(&mut rng), draw(&mut rng));
            let (mx, my) = (mod_project(&x, &f).unwrap(), mod_project(&y, &f).unwrap());
            assert_eq!(mod_project(&(&x + &y), &f).unwrap(), mx + my);
            assert_eq!(mod_project(&(&x * &y), &f).unwrap(), mx * my);
        }
    }
}
