//! Overpartition enumeration, the M2-rank statistic, and the rank
//! difference alpha2(n) by brute force and by closed form.
//!
//! An overpartition is a pair (D, P): a partition D of some n1 into
//! distinct parts (the overlined numbers) and an arbitrary partition P of
//! n2 = n - n1. The closed form expresses |alpha2(n)| through r_3(n) and
//! Hurwitz class numbers, with sign + for n = 1, 2 mod 4 and - for
//! n = 0, 3 mod 4.

use crate::classnum::HurwitzTable;
use num_rational::Rational64;

/// Default ceiling for exhaustive enumeration; p(40) is about 1.4e6
/// overpartitions, enumerable in seconds.
pub const DEFAULT_BRUTE_CEILING: u64 = 40;

/// An overpartition: strictly decreasing overlined parts and weakly
/// decreasing plain parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overpartition {
    pub overlined: Vec<u64>,
    pub plain: Vec<u64>,
}

impl Overpartition {
    pub fn weight(&self) -> u64 {
        self.overlined.iter().sum::<u64>() + self.plain.iter().sum::<u64>()
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OverpartError {
    #[error("n = {n} exceeds the brute-force ceiling {ceiling}")]
    CeilingExceeded { n: u64, ceiling: u64 },
    #[error("closed form produced a non-integral value at n = {n}: r3(n) = {r3} not divisible by 3 as required")]
    NonIntegral { n: u64, r3: u64 },
}

/// Visits every overpartition of `n` exactly once.
pub fn for_each_overpartition(n: u64, mut f: impl FnMut(&Overpartition)) {
    let mut overlined = Vec::new();
    for n1 in 0..=n {
        distinct_parts(n1, n1, &mut overlined, &mut |d| {
            let mut plain = Vec::new();
            plain_parts(n - n1, n - n1, &mut plain, &mut |p| {
                f(&Overpartition {
                    overlined: d.to_vec(),
                    plain: p.to_vec(),
                });
            });
        });
    }
}

fn distinct_parts(rem: u64, max: u64, cur: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
    if rem == 0 {
        f(cur);
        return;
    }
    let mut part = rem.min(max);
    while part >= 1 {
        cur.push(part);
        distinct_parts(rem - part, part.saturating_sub(1), cur, f);
        cur.pop();
        part -= 1;
    }
}

fn plain_parts(rem: u64, max: u64, cur: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
    if rem == 0 {
        f(cur);
        return;
    }
    let mut part = rem.min(max);
    while part >= 1 {
        cur.push(part);
        plain_parts(rem - part, part, cur, f);
        cur.pop();
        part -= 1;
    }
}

/// M2-rank statistics of an overpartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct M2Stats {
    pub ell: u64,
    pub nparts: u64,
    pub n_odd_plain: u64,
    pub chi: u64,
}

impl M2Stats {
    /// Stats from parts directly, without materializing an `Overpartition`.
    ///
    /// When the largest part value occurs both overlined and plain, the
    /// overlined copy is listed first, so the largest part counts as
    /// overlined and chi = 0.
    pub fn from_parts(overlined: &[u64], plain: &[u64]) -> Option<M2Stats> {
        let d_max = overlined.first().copied().unwrap_or(0);
        let p_max = plain.first().copied().unwrap_or(0);
        let ell = d_max.max(p_max);
        if ell == 0 {
            return None;
        }
        let chi = u64::from(ell % 2 == 1 && ell > d_max);
        let n_odd_plain = plain.iter().filter(|&&p| p % 2 == 1).count() as u64;
        Some(M2Stats {
            ell,
            nparts: (overlined.len() + plain.len()) as u64,
            n_odd_plain,
            chi,
        })
    }

    pub fn rank(&self) -> i64 {
        (self.ell.div_ceil(2) as i64) - self.nparts as i64 + self.n_odd_plain as i64
            - self.chi as i64
    }
}

/// The M2-rank. Rank of the empty overpartition is defined as 0.
pub fn m2_rank(op: &Overpartition) -> i64 {
    M2Stats::from_parts(&op.overlined, &op.plain).map_or(0, |s| s.rank())
}

/// alpha2(n) = #(even M2-rank) - #(odd M2-rank), by exhaustive enumeration.
pub fn alpha2_brute(n: u64, ceiling: u64) -> Result<i64, OverpartError> {
    if n > ceiling {
        return Err(OverpartError::CeilingExceeded { n, ceiling });
    }
    if n == 0 {
        return Ok(1); // the empty overpartition has rank 0 (even)
    }
    let mut diff: i64 = 0;
    let mut overlined = Vec::new();
    for n1 in 0..=n {
        distinct_parts(n1, n1, &mut overlined, &mut |d| {
            let mut plain = Vec::new();
            plain_parts(n - n1, n - n1, &mut plain, &mut |p| {
                let rank = M2Stats::from_parts(d, p).expect("nonempty").rank();
                diff += if rank % 2 == 0 { 1 } else { -1 };
            });
        });
    }
    Ok(diff)
}

/// Number of overpartitions of `n`, by exhaustive enumeration.
pub fn overpartition_count(n: u64) -> u64 {
    let mut count = 0u64;
    for_each_overpartition(n, |_| count += 1);
    count
}

/// Closed form for alpha2(n) from r3 and Hurwitz class number tables.
///
/// |alpha2(n)| = r3(n)/3 for n = 1, 2 mod 4 and 8 H(n) - r3(n)/3 for
/// n = 0, 3 mod 4, with sign + resp. -; alpha2(0) = 1.
pub struct Alpha2Closed {
    r3: Vec<u64>,
    h: HurwitzTable,
}

impl Alpha2Closed {
    pub fn build(max: u64) -> Self {
        Alpha2Closed {
            r3: crate::classnum::r3_table(max),
            h: HurwitzTable::build(max),
        }
    }

    pub fn max(&self) -> u64 {
        self.r3.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> Result<i64, OverpartError> {
        if n == 0 {
            return Ok(1);
        }
        let r3n = self.r3[n as usize];
        let value = match n % 4 {
            1 | 2 => {
                if r3n % 3 != 0 {
                    return Err(OverpartError::NonIntegral { n, r3: r3n });
                }
                (r3n / 3) as i64
            }
            _ => {
                let v = self.h.get(n) * 8 - Rational64::new(r3n as i64, 3);
                if !v.is_integer() {
                    return Err(OverpartError::NonIntegral { n, r3: r3n });
                }
                -v.to_integer()
            }
        };
        Ok(value)
    }

    /// |alpha2(n)| with negative arguments treated as 0 (for shifted sums).
    pub fn abs_at(&self, n: i64) -> Result<i64, OverpartError> {
        if n < 0 {
            return Ok(0);
        }
        Ok(self.get(n as u64)?.abs())
    }
}

/// Convenience single-value closed form.
pub fn alpha2_closed(n: u64) -> Result<i64, OverpartError> {
    Alpha2Closed::build(n).get(n)
}

/// Coefficients of prod (1 + x^n)/(1 - x^n): the overpartition counting
/// function, used as an independent generating-function oracle.
pub fn overpartition_gf(max: u64) -> Vec<u64> {
    let max = max as usize;
    let mut c = vec![0u64; max + 1];
    c[0] = 1;
    // multiply by (1 + x^k), then divide by (1 - x^k), k = 1..max
    for k in 1..=max {
        for i in (k..=max).rev() {
            c[i] += c[i - k];
        }
        for i in k..=max {
            c[i] += c[i - k];
        }
    }
    c
}
