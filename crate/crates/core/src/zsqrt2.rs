//! Ideal arithmetic in Z[sqrt(2)]: enumerate ideals of a given norm,
//! reduce generators to minimal positive trace, and evaluate the
//! correction sums of the class number identities.
//!
//! Every ideal is principal (class number one). An [`IdealRep`] stores the
//! generator `a + b sqrt(2)` of element norm `+m` with minimal positive
//! `a` within its orbit under the norm-one unit group +-(3 + 2 sqrt(2))^k;
//! ties in `a` break toward minimal |b| and then b >= 0. Inputs with
//! element norm `-m` are flipped once by the norm-(-1) fundamental unit
//! 1 + sqrt(2).

use std::collections::HashMap;

/// Fundamental solution of a^2 - 8 b^2 = 1, kept as a cross-check constant:
/// 3 + 1*sqrt(8) = 3 + 2 sqrt(2).
pub const PELL_FUNDAMENTAL: (i64, i64) = (3, 1);

/// An element a + b sqrt(2), used as the reduced generator of an ideal of
/// norm |a^2 - 2 b^2|.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealRep {
    pub a: i64,
    pub b: i64,
}

impl IdealRep {
    pub fn norm(&self) -> u64 {
        (self.a * self.a - 2 * self.b * self.b).unsigned_abs()
    }
}

fn element_norm(a: i64, b: i64) -> i64 {
    a * a - 2 * b * b
}

fn mul(x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
    (x.0 * y.0 + 2 * x.1 * y.1, x.0 * y.1 + x.1 * y.0)
}

// multiply by the norm-one unit 3 + 2 sqrt(2) or its inverse 3 - 2 sqrt(2)
fn step_up(x: (i64, i64)) -> (i64, i64) {
    (3 * x.0 + 4 * x.1, 2 * x.0 + 3 * x.1)
}

fn step_down(x: (i64, i64)) -> (i64, i64) {
    (3 * x.0 - 4 * x.1, -2 * x.0 + 3 * x.1)
}

fn normalize_sign(x: (i64, i64)) -> (i64, i64) {
    if x.0 < 0 || (x.0 == 0 && x.1 < 0) {
        (-x.0, -x.1)
    } else {
        x
    }
}

/// Reduce `(a, b)` to the associate of minimal positive `a` (ties toward
/// minimal |b|, then b >= 0) within the norm-positive unit orbit. Elements
/// of negative norm are first multiplied by 1 + sqrt(2).
///
/// The trace along the unit orbit is unimodal, so greedy descent
/// terminates at the global minimum.
pub fn reduce_to_minimal_trace(a: i64, b: i64) -> IdealRep {
    assert!((a, b) != (0, 0), "zero element has no ideal");
    let mut x = (a, b);
    if element_norm(x.0, x.1) < 0 {
        x = mul(x, (1, 1)); // times 1 + sqrt(2), flips the norm sign
    }
    x = normalize_sign(x);
    if x.0 == 0 {
        // a = 0 forces norm < 0, handled above
        unreachable!("norm-positive element cannot have a = 0");
    }
    loop {
        let up = normalize_sign(step_up(x));
        let down = normalize_sign(step_down(x));
        let better = [up, down].into_iter().filter(|c| c.0 > 0).min_by_key(|c| c.0);
        match better {
            Some(c) if c.0 < x.0 => x = c,
            _ => break,
        }
    }
    // resolve ties at the minimal a: the norm fixes b up to sign, so at most
    // the immediate neighbors can tie; prefer minimal |b|, then b >= 0
    let key = |p: (i64, i64)| (p.1.abs(), -p.1.signum());
    let mut best = x;
    for c in [normalize_sign(step_up(x)), normalize_sign(step_down(x))] {
        if c.0 == best.0 && key(c) < key(best) {
            best = c;
        }
    }
    IdealRep { a: best.0, b: best.1 }
}

/// All ideals of Z[sqrt(2)] of norm `m`, one reduced representative each,
/// built multiplicatively from prime ideals. Empty when `m` is not a norm
/// (an inert prime to odd power).
pub fn ideals_of_norm(m: u64, cache: &mut PrimeElementCache) -> Vec<IdealRep> {
    assert!(m >= 1);
    let mut reps: Vec<(i64, i64)> = vec![(1, 0)];
    let mut rem = m;
    let mut p = 2u64;
    while p * p <= rem {
        if rem % p == 0 {
            let mut e = 0u32;
            while rem % p == 0 {
                rem /= p;
                e += 1;
            }
            if !extend_by_prime(&mut reps, p, e, cache) {
                return Vec::new();
            }
        }
        p += 1;
    }
    if rem > 1 && !extend_by_prime(&mut reps, rem, 1, cache) {
        return Vec::new();
    }
    let mut out: Vec<IdealRep> = reps
        .into_iter()
        .map(|(a, b)| reduce_to_minimal_trace(a, b))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn extend_by_prime(
    reps: &mut Vec<(i64, i64)>,
    p: u64,
    e: u32,
    cache: &mut PrimeElementCache,
) -> bool {
    match crate::arith::chi8(p as i64) {
        0 if p == 2 => {
            // ramified: (sqrt 2)^e
            let mut sq = (1i64, 0i64);
            for _ in 0..e {
                sq = mul(sq, (0, 1));
            }
            for r in reps.iter_mut() {
                *r = reduced_mul(*r, sq);
            }
            true
        }
        1 => {
            // split: pi^k pibar^(e-k), k = 0..e
            let pi = cache.norm_p_element(p);
            let pibar = (pi.0, -pi.1);
            let mut next = Vec::with_capacity(reps.len() * (e as usize + 1));
            for &r in reps.iter() {
                for k in 0..=e {
                    let mut v = r;
                    for _ in 0..k {
                        v = reduced_mul(v, pi);
                    }
                    for _ in 0..(e - k) {
                        v = reduced_mul(v, pibar);
                    }
                    next.push(v);
                }
            }
            *reps = next;
            true
        }
        _ => {
            // inert: p stays prime, norm p^2; odd exponents are not norms
            if e % 2 != 0 {
                return false;
            }
            let mut q = (1i64, 0i64);
            for _ in 0..(e / 2) {
                q = mul(q, (p as i64, 0));
            }
            for r in reps.iter_mut() {
                *r = reduced_mul(*r, q);
            }
            true
        }
    }
}

// multiply and immediately reduce to keep intermediate coordinates small
fn reduced_mul(x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
    let r = reduce_to_minimal_trace_raw(mul(x, y));
    (r.a, r.b)
}

fn reduce_to_minimal_trace_raw(x: (i64, i64)) -> IdealRep {
    reduce_to_minimal_trace(x.0, x.1)
}

/// Cache of norm +-p elements for split primes p = +-1 mod 8.
#[derive(Debug, Default)]
pub struct PrimeElementCache {
    found: HashMap<u64, (i64, i64)>,
}

impl PrimeElementCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// A fixed element of norm +-p, found by scanning b in a^2 = p + 2b^2
    /// or a^2 = 2b^2 - p. Panics if `p` is not actually split.
    fn norm_p_element(&mut self, p: u64) -> (i64, i64) {
        if let Some(&e) = self.found.get(&p) {
            return e;
        }
        let mut b = 0i64;
        // the reduced solution satisfies a <= sqrt(2p), so b^2 <= p stays small,
        // but scan generously in case the first hit is unreduced
        let bound = 4 * (p as f64).sqrt() as i64 + 4;
        let e = loop {
            assert!(b <= bound, "no element of norm +-{p}; is {p} split?");
            let c1 = p as i64 + 2 * b * b;
            if let Some(a) = crate::arith::is_square(c1 as u64) {
                break (a as i64, b);
            }
            let c2 = 2 * b * b - p as i64;
            if c2 >= 0 {
                if let Some(a) = crate::arith::is_square(c2 as u64) {
                    break (a as i64, b);
                }
            }
            b += 1;
        };
        self.found.insert(p, e);
        e
    }
}

/// Brute-force enumeration of ideals of norm `m`: every reduced
/// representative satisfies |b| <= a/2 and hence a <= sqrt(2m), so a full
/// scan of that window followed by reduction and deduplication is complete.
pub fn ideals_of_norm_brute(m: u64) -> Vec<IdealRep> {
    assert!(m >= 1);
    let mut out = Vec::new();
    let mut a = 1i64;
    while (a * a) as u64 <= 2 * m {
        let bb = a * a - m as i64;
        if bb >= 0 && bb % 2 == 0 {
            if let Some(b) = crate::arith::is_square((bb / 2) as u64) {
                let b = b as i64;
                out.push(reduce_to_minimal_trace(a, b));
                if b != 0 {
                    out.push(reduce_to_minimal_trace(a, -b));
                }
            }
        }
        a += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// The correction sum `sum over ideals of norm m of (|b| - a)` for the
/// reduced generator `a + b sqrt(2)`.
pub fn correction_sum(m: u64, cache: &mut PrimeElementCache) -> i64 {
    ideals_of_norm(m, cache)
        .into_iter()
        .map(|r| r.b.abs() - r.a)
        .sum()
}

/// The same correction computed over conjugation orbits: conjugate ideal
/// pairs are merged and weighted 2, conjugation-stable ideals weighted 1.
/// Agreement with [`correction_sum`] pins down the normalization of the
/// Pell-type sum (per-ideal vs per-orbit counting give the same total).
pub fn correction_sum_conjugation_orbits(m: u64, cache: &mut PrimeElementCache) -> i64 {
    let ideals = ideals_of_norm(m, cache);
    let mut seen: Vec<IdealRep> = Vec::new();
    let mut total = 0i64;
    for rep in ideals {
        let conj = reduce_to_minimal_trace(rep.a, -rep.b);
        if seen.contains(&conj) {
            continue; // counted when the conjugate was visited
        }
        seen.push(rep);
        let weight = if conj == rep { 1 } else { 2 };
        total += weight * (rep.b.abs() - rep.a);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_examples() {
        assert_eq!(reduce_to_minimal_trace(4, 1), IdealRep { a: 4, b: 1 });
        assert_eq!(reduce_to_minimal_trace(0, 1), IdealRep { a: 2, b: 1 });
        assert_eq!(reduce_to_minimal_trace(2, 0), IdealRep { a: 2, b: 0 });
        // norm 8: associates of 2 sqrt(2) reduce to 4 + 2 sqrt(2)
        assert_eq!(reduce_to_minimal_trace(0, 2), IdealRep { a: 4, b: 2 });
    }

    #[test]
    fn reduction_idempotent() {
        for a in -20i64..=20 {
            for b in -20i64..=20 {
                if (a, b) == (0, 0) {
                    continue;
                }
                let r = reduce_to_minimal_trace(a, b);
                assert_eq!(reduce_to_minimal_trace(r.a, r.b), r, "({a}, {b})");
            }
        }
    }

    #[test]
    fn ideals_norm_14() {
        let mut cache = PrimeElementCache::new();
        let ideals = ideals_of_norm(14, &mut cache);
        assert_eq!(ideals, vec![IdealRep { a: 4, b: -1 }, IdealRep { a: 4, b: 1 }]);
    }

    #[test]
    fn ideals_inert_and_ramified() {
        let mut cache = PrimeElementCache::new();
        assert!(ideals_of_norm(3, &mut cache).is_empty());
        assert!(ideals_of_norm(6, &mut cache).is_empty());
        assert_eq!(ideals_of_norm(2, &mut cache).len(), 1);
        assert_eq!(ideals_of_norm(9, &mut cache).len(), 1); // (3)
    }

    #[test]
    fn correction_sum_examples() {
        let mut cache = PrimeElementCache::new();
        assert_eq!(correction_sum(14, &mut cache), -6);
        assert_eq!(correction_sum(6, &mut cache), 0);
        assert_eq!(correction_sum(8, &mut cache), -2);
    }

    #[test]
    fn norms_exact() {
        let mut cache = PrimeElementCache::new();
        for m in 1..=300u64 {
            for rep in ideals_of_norm(m, &mut cache) {
                assert_eq!(rep.norm(), m, "norm of {rep:?}");
            }
        }
    }

    #[test]
    fn fast_path_matches_brute_force() {
        let mut cache = PrimeElementCache::new();
        for m in 1..=2000u64 {
            assert_eq!(
                ideals_of_norm(m, &mut cache),
                ideals_of_norm_brute(m),
                "m = {m}"
            );
        }
    }

    #[test]
    fn conjugation_closure() {
        let mut cache = PrimeElementCache::new();
        for m in 1..=300u64 {
            let ideals = ideals_of_norm(m, &mut cache);
            for rep in &ideals {
                let conj = reduce_to_minimal_trace(rep.a, -rep.b);
                assert!(ideals.contains(&conj), "conjugate of {rep:?} missing at m = {m}");
            }
        }
    }

    #[test]
    fn ideal_count_multiplicative() {
        let mut cache = PrimeElementCache::new();
        let pairs = [(7u64, 9u64), (2, 7), (14, 9), (17, 8), (23, 49), (31, 50)];
        for (m1, m2) in pairs {
            let c1 = ideals_of_norm(m1, &mut cache).len();
            let c2 = ideals_of_norm(m2, &mut cache).len();
            let c = ideals_of_norm(m1 * m2, &mut cache).len();
            assert_eq!(c, c1 * c2, "({m1}, {m2})");
        }
    }

    #[test]
    fn conjugation_orbit_weighting_agrees() {
        let mut cache = PrimeElementCache::new();
        for m in 1..=200u64 {
            assert_eq!(
                correction_sum(m, &mut cache),
                correction_sum_conjugation_orbits(m, &mut cache),
                "m = {m}"
            );
        }
    }

    #[test]
    fn pell_fundamental_constant() {
        let (a, b) = PELL_FUNDAMENTAL;
        assert_eq!(a * a - 8 * b * b, 1);
    }
}
