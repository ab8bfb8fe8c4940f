//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use wsd_core::exact_arith::Q;
use wsd_core::linalg::{rank, SparseVec};

/// Real dimension of `{φ ∈ gl(n|n, C) : <φx, y> + (-1)^{|φ||x|} <x, φy> = 0, str φ = 0}`
/// where `<x, y> = (x, S y)`, `( , )` is the standard Hermitean product and `S`
/// swaps the k-th even basis vector with the k-th odd one. Counted as the nullity of
/// the stacked real constraint equations.
pub fn su_nn_dimension(n: usize) -> usize {
    let dim = 2 * n;
    let odd = |k: usize| k >= n;
    let swap = |k: usize| if k < n { k + n } else { k - n };
    // parameter index of Re/Im of entry (r, c)
    let re = |r: usize, c: usize| 2 * (r * dim + c);
    let one = || BigRational::from_integer(BigInt::from(1));
    let neg = || BigRational::from_integer(BigInt::from(-1));
    let mut rows: Vec<SparseVec<BigRational>> = Vec::new();
    let mut push = |terms: Vec<(usize, BigRational)>| {
        let mut v: SparseVec<BigRational> = SparseVec::new();
        for (k, x) in terms {
            let e = v
                .entry(k)
                .or_insert_with(|| BigRational::from_integer(BigInt::from(0)));
            *e += x;
        }
        v.retain(|_, x| *x != BigRational::from_integer(BigInt::from(0)));
        if !v.is_empty() {
            rows.push(v);
        }
    };
    for phi_odd in [false, true] {
        // entries of φ with this parity only
        let in_part = |r: usize, c: usize| (odd(r) != odd(c)) == phi_odd;
        for a in 0..dim {
            for b in 0..dim {
                // φ[s(b), a] + sign conj(φ[s(a), b]) = 0
                let sign_neg = phi_odd && odd(a);
                let (r1, c1) = (swap(b), a);
                let (r2, c2) = (swap(a), b);
                let mut re_terms = Vec::new();
                let mut im_terms = Vec::new();
                if in_part(r1, c1) {
                    re_terms.push((re(r1, c1), one()));
                    im_terms.push((re(r1, c1) + 1, one()));
                }
                if in_part(r2, c2) {
                    let s = if sign_neg { neg() } else { one() };
                    re_terms.push((re(r2, c2), s.clone()));
                    // conj flips the imaginary part
                    im_terms.push((re(r2, c2) + 1, -s));
                }
                push(re_terms);
                push(im_terms);
            }
        }
    }
    for part in 0..2 {
        push(
            (0..dim)
                .map(|k| (re(k, k) + part, if odd(k) { neg() } else { one() }))
                .collect(),
        );
    }
    2 * dim * dim - rank(Q, rows)
}

/// Sign and mask of `v_{p_1} ^ ... ^ v_{p_k}` from the parity of the sorting
/// permutation (bubble sort inversions), or `None` on a repeated factor.
pub fn wedge_positions(positions: &[usize]) -> Option<(bool, u16)> {
    let mut inv = 0;
    for a in 0..positions.len() {
        for b in a + 1..positions.len() {
            if positions[a] == positions[b] {
                return None;
            }
            if positions[a] > positions[b] {
                inv += 1;
            }
        }
    }
    let mask = positions.iter().fold(0u16, |m, &p| m | 1 << p);
    Some((inv % 2 == 1, mask))
}

/// Ascending positions of a mask.
pub fn positions(mask: u16) -> Vec<usize> {
    (0..9).filter(|p| mask >> p & 1 == 1).collect()
}

/// Peak resident set size in bytes, if the platform reports it.
pub fn peak_rss_bytes() -> Option<u64> {
    let s = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = s.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}
