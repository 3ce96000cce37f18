//! Hurwitz class numbers by reduced-form enumeration, and representation
//! counts by the ternary quadratic forms used in the identities.
//!
//! H(n) counts SL2(Z)-classes of positive-definite integral binary forms
//! ax^2 + bxy + cy^2 with b^2 - 4ac = -n via reduced triples
//! (|b| <= a <= c, b >= 0 when |b| = a or a = c), weight 1/3 for forms
//! proportional to (1,1,1) and 1/2 for forms proportional to (1,0,1).
//! H(0) = -1/12 is a convention forced by the Eichler relation at n = 1:
//! H(4) + 2 H(3) + 2 H(0) = 2 sigma_1(1) - 2 lambda_1(1) = 1 requires
//! H(0) = -1/12 given H(3) = 1/3, H(4) = 1/2.

use num_rational::Rational64;

/// Hurwitz class number of a single discriminant `-n`.
pub fn hurwitz(n: u64) -> Rational64 {
    if n == 0 {
        return Rational64::new(-1, 12);
    }
    if n % 4 == 1 || n % 4 == 2 {
        return Rational64::from_integer(0);
    }
    let mut twelfths: i64 = 0;
    let mut a = 1u64;
    while 3 * a * a <= n {
        for b in -(a as i64)..=(a as i64) {
            let disc = (b * b) as i64 + n as i64; // 4ac
            if disc % (4 * a as i64) != 0 {
                continue;
            }
            let c = (disc / (4 * a as i64)) as u64;
            if c < a {
                continue;
            }
            // boundary conventions: b >= 0 when |b| = a or a = c
            if (b.unsigned_abs() == a || a == c) && b < 0 {
                continue;
            }
            twelfths += form_weight_twelfths(a, b, c);
        }
        a += 1;
    }
    Rational64::new(twelfths, 12)
}

fn form_weight_twelfths(a: u64, b: i64, c: u64) -> i64 {
    if b as u64 == a && a == c {
        4 // weight 1/3, proportional to (1,1,1)
    } else if b == 0 && a == c {
        6 // weight 1/2, proportional to (1,0,1)
    } else {
        12
    }
}

/// Table of `H(n)` for `0 <= n <= max`, filled by a single sweep over
/// reduced triples with `4ac - b^2 <= max`.
#[derive(Debug, Clone)]
pub struct HurwitzTable {
    twelfths: Vec<i64>,
}

impl HurwitzTable {
    pub fn build(max: u64) -> Self {
        let mut twelfths = vec![0i64; max as usize + 1];
        let mut a = 1u64;
        while 3 * a * a <= max {
            for b in -(a as i64)..=(a as i64) {
                if (b.unsigned_abs() == a) && b < 0 {
                    continue;
                }
                let mut c = a;
                loop {
                    let n = 4 * (a * c) as i64 - b * b;
                    if n > max as i64 {
                        break;
                    }
                    // skip the b < 0 half of the a = c boundary
                    if !(a == c && b < 0) && n >= 0 {
                        twelfths[n as usize] += form_weight_twelfths(a, b, c);
                    }
                    c += 1;
                }
            }
            a += 1;
        }
        HurwitzTable { twelfths }
    }

    pub fn max(&self) -> u64 {
        self.twelfths.len() as u64 - 1
    }

    /// `H(n)`; panics if `n` exceeds the table bound.
    pub fn get(&self, n: u64) -> Rational64 {
        if n == 0 {
            return Rational64::new(-1, 12);
        }
        Rational64::new(self.twelfths[n as usize], 12)
    }

    /// `H(n)` for a possibly negative argument, 0 below zero.
    pub fn get_i64(&self, n: i64) -> Rational64 {
        if n < 0 {
            Rational64::from_integer(0)
        } else {
            self.get(n as u64)
        }
    }
}

/// `r_3(n)`: the number of `(x, y, z)` in `Z^3` with `x^2 + y^2 + z^2 = n`,
/// signs and order counted.
pub fn r3(n: u64) -> u64 {
    rep_count_ternary((1, 1, 1), n)
}

/// Number of `(a, b, c)` in `Z^3` with `c1 a^2 + c2 b^2 + c3 c^2 = n`.
pub fn rep_count_ternary(coeffs: (u64, u64, u64), n: u64) -> u64 {
    let (c1, c2, c3) = coeffs;
    assert!(c1 >= 1 && c2 >= 1 && c3 >= 1);
    let mut count = 0u64;
    let mut a = 0u64;
    while c1 * a * a <= n {
        let ra = n - c1 * a * a;
        let mut b = 0u64;
        while c2 * b * b <= ra {
            let rb = ra - c2 * b * b;
            if rb % c3 == 0 {
                if let Some(c) = crate::arith::is_square(rb / c3) {
                    let mut m = 1u64;
                    if a != 0 {
                        m *= 2;
                    }
                    if b != 0 {
                        m *= 2;
                    }
                    if c != 0 {
                        m *= 2;
                    }
                    count += m;
                }
            }
            b += 1;
        }
        a += 1;
    }
    count
}

/// Table of representation counts `#{v : c1 x^2 + c2 y^2 + c3 z^2 = n}` for
/// `0 <= n <= max`, built by one sweep over the lattice points of the
/// ellipsoid.
pub fn rep_count_table(coeffs: (u64, u64, u64), max: u64) -> Vec<u64> {
    let (c1, c2, c3) = coeffs;
    let mut t = vec![0u64; max as usize + 1];
    let mut a = 0u64;
    while c1 * a * a <= max {
        let ra = max - c1 * a * a;
        let ma = if a == 0 { 1 } else { 2 };
        let mut b = 0u64;
        while c2 * b * b <= ra {
            let rb = ra - c2 * b * b;
            let mab = if b == 0 { ma } else { ma * 2 };
            let base = c1 * a * a + c2 * b * b;
            let mut c = 0u64;
            while c3 * c * c <= rb {
                let n = base + c3 * c * c;
                t[n as usize] += if c == 0 { mab } else { mab * 2 };
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    t
}

/// Table of `r_3(n)` for `0 <= n <= max`.
pub fn r3_table(max: u64) -> Vec<u64> {
    rep_count_table((1, 1, 1), max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{lambda1, sigma1, sigma1_div};

    #[test]
    fn hurwitz_small_values() {
        assert_eq!(hurwitz(0), Rational64::new(-1, 12));
        assert_eq!(hurwitz(3), Rational64::new(1, 3));
        assert_eq!(hurwitz(4), Rational64::new(1, 2));
        assert_eq!(hurwitz(7), Rational64::from_integer(1));
        assert_eq!(hurwitz(15), Rational64::from_integer(2));
        assert_eq!(hurwitz(23), Rational64::from_integer(3));
    }

    #[test]
    fn hurwitz_vanishing_residues() {
        for n in 1..200u64 {
            if n % 4 == 1 || n % 4 == 2 {
                assert_eq!(hurwitz(n), Rational64::from_integer(0));
            }
        }
    }

    #[test]
    fn table_matches_pointwise() {
        let t = HurwitzTable::build(500);
        for n in 0..=500u64 {
            assert_eq!(t.get(n), hurwitz(n), "H({n})");
        }
        assert_eq!(t.get(23), Rational64::from_integer(3));
    }

    #[test]
    fn r3_small_values() {
        assert_eq!(r3(0), 1);
        assert_eq!(r3(1), 6);
        assert_eq!(r3(2), 12);
        assert_eq!(r3(3), 8);
    }

    #[test]
    fn rep_count_values() {
        assert_eq!(rep_count_ternary((4, 1, 1), 2), 4);
        assert_eq!(rep_count_ternary((4, 2, 1), 7), 8);
        assert_eq!(rep_count_ternary((4, 1, 1), 3), 0);
    }

    #[test]
    fn rep_tables_match_pointwise() {
        for coeffs in [(1, 1, 1), (4, 1, 1), (4, 2, 1)] {
            let t = rep_count_table(coeffs, 200);
            for n in 0..=200u64 {
                assert_eq!(t[n as usize], rep_count_ternary(coeffs, n));
            }
        }
    }

    #[test]
    fn eichler_relations_small() {
        let h = HurwitzTable::build(800);
        for n in 1..=200i64 {
            let mut s = Rational64::from_integer(0);
            let mut r = 0i64;
            while r * r <= 4 * n {
                s += h.get_i64(4 * n - r * r);
                if r != 0 {
                    s += h.get_i64(4 * n - r * r);
                }
                r += 1;
            }
            let rhs = Rational64::from_integer(2 * sigma1(n as u64)) - lambda1(n as u64) * 2;
            assert_eq!(s, rhs, "Eichler 4n at n = {n}");
        }
        for n in (1..=200i64).step_by(2) {
            let mut s = Rational64::from_integer(0);
            let mut r = 0i64;
            while r * r <= n {
                s += h.get_i64(n - r * r);
                if r != 0 {
                    s += h.get_i64(n - r * r);
                }
                r += 1;
            }
            let rhs = Rational64::new(sigma1(n as u64), 3) - lambda1(n as u64);
            assert_eq!(s, rhs, "Eichler odd at n = {n}");
        }
    }

    #[test]
    fn jacobi_formula_small() {
        let t = r3_table(400);
        for n in 1..=400i64 {
            let mut s = 0i64;
            let mut alt = 0i64;
            let mut r = 0i64;
            while r * r <= n {
                let v = t[(n - r * r) as usize] as i64;
                let sign = if r % 2 == 0 { 1 } else { -1 };
                s += v;
                alt += sign * v;
                if r != 0 {
                    s += v;
                    alt += sign * v;
                }
                r += 1;
            }
            assert_eq!(s, 8 * sigma1(n as u64) - 32 * sigma1_div(n as u64, 4), "Jacobi n = {n}");
            if n % 2 == 1 {
                let sign = if (n - 1) / 2 % 2 == 0 { 1 } else { -1 };
                assert_eq!(alt, sign * 4 * sigma1(n as u64), "alternating Jacobi n = {n}");
            }
        }
    }
}
