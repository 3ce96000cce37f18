//! Identity harness: closed-form right-hand sides, independently computed
//! left-hand sides, exact-equality reports, and the suite runner behind the
//! `verify` binary.
//!
//! Every identity is checked as an exact equality of rationals. Left-hand
//! sides are assembled only from the independent kernels (overpartition
//! counts, reduced-form class numbers, lattice point counts, ideal
//! arithmetic, pentagonal eta expansions); right-hand sides come from the
//! closed divisor-sum formulas. Two known misprints in the source material
//! are reported as discrepancies without failing the suite; see
//! [`Discrepancy`].

use crate::arith::{chi8, is_square, lambda1, sigma1, sigma1_chi, split2};
use crate::classnum::{rep_count_table, HurwitzTable};
use crate::localcount::{
    count_series, density_ratio_sequence, local_limit_sequence, q2_form, q2_tilde_form,
    stable_value, LocalCountError, DEFAULT_CEILING,
};
use crate::overpart::{alpha2_brute, Alpha2Closed, OverpartError, DEFAULT_BRUTE_CEILING};
use crate::qseries::{e2_level1, eta_quotient, theta_coset, CosetVector, GramForm, QSeries, QSeriesError};
use crate::zsqrt2::{correction_sum, ideals_of_norm, PrimeElementCache};
use num_rational::Rational64;
use num_traits::Zero;

/// Tag attached to every recorded discrepancy.
pub const DISCREPANCY_TAG: &str = "suspected typo, brute-force value authoritative";

/// Every verified identity, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    Prop1Series,
    Prop2,
    Cor3,
    Prop4,
    Cor5I,
    Cor5II,
    Cor5III,
    InertPrimes,
    Eichler4n,
    EichlerOdd,
    Jacobi,
    JacobiAlt,
    Remark6Theta,
    Lemma7,
    Lemma9I,
    Lemma9II,
    Remark10Eta,
    Remark10RepSums,
    E2AQuasimodular,
    E2BSeries,
    Example12,
    Remark13,
    Eq2Limits,
}

impl IdentityId {
    pub const ALL: [IdentityId; 23] = [
        IdentityId::Prop1Series,
        IdentityId::Prop2,
        IdentityId::Cor3,
        IdentityId::Prop4,
        IdentityId::Cor5I,
        IdentityId::Cor5II,
        IdentityId::Cor5III,
        IdentityId::InertPrimes,
        IdentityId::Eichler4n,
        IdentityId::EichlerOdd,
        IdentityId::Jacobi,
        IdentityId::JacobiAlt,
        IdentityId::Remark6Theta,
        IdentityId::Lemma7,
        IdentityId::Lemma9I,
        IdentityId::Lemma9II,
        IdentityId::Remark10Eta,
        IdentityId::Remark10RepSums,
        IdentityId::E2AQuasimodular,
        IdentityId::E2BSeries,
        IdentityId::Example12,
        IdentityId::Remark13,
        IdentityId::Eq2Limits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Prop1Series => "prop1_series",
            IdentityId::Prop2 => "prop2",
            IdentityId::Cor3 => "cor3",
            IdentityId::Prop4 => "prop4",
            IdentityId::Cor5I => "cor5i",
            IdentityId::Cor5II => "cor5ii",
            IdentityId::Cor5III => "cor5iii",
            IdentityId::InertPrimes => "inert_primes",
            IdentityId::Eichler4n => "eichler4n",
            IdentityId::EichlerOdd => "eichler_odd",
            IdentityId::Jacobi => "jacobi",
            IdentityId::JacobiAlt => "jacobi_alt",
            IdentityId::Remark6Theta => "remark6_theta",
            IdentityId::Lemma7 => "lemma7",
            IdentityId::Lemma9I => "lemma9i",
            IdentityId::Lemma9II => "lemma9ii",
            IdentityId::Remark10Eta => "remark10_eta",
            IdentityId::Remark10RepSums => "remark10_repsums",
            IdentityId::E2AQuasimodular => "e2A_quasimodular",
            IdentityId::E2BSeries => "e2B_series",
            IdentityId::Example12 => "example12",
            IdentityId::Remark13 => "remark13",
            IdentityId::Eq2Limits => "eq2_limits",
        }
    }

    /// Statement pointer and a one-line description, for `--list`.
    pub fn location(self) -> &'static str {
        match self {
            IdentityId::Prop1Series => {
                "Section 1 series: brute-force M2-rank differences vs the r3/H closed form, n = 0..40"
            }
            IdentityId::Prop2 => {
                "Proposition 2: the alpha(n) aggregate equals the three-case divisor-sum formula"
            }
            IdentityId::Cor3 => {
                "Corollary 3: sum over odd r of H(4n - r^2), three-case formula"
            }
            IdentityId::Prop4 => {
                "Proposition 4: sum over r of |a2(n - 2r^2)| vs twisted divisor sum plus ideal correction"
            }
            IdentityId::Cor5I => "Corollary 5(i): sum over r of H(4n - 2r^2)",
            IdentityId::Cor5II => "Corollary 5(ii): sum over r of H(2n - 2r^2), n odd",
            IdentityId::Cor5III => "Corollary 5(iii): sum over r of H(n - 2r^2), n odd",
            IdentityId::InertPrimes => {
                "Inert-prime formulas after Corollary 5: 7(p-1)/6, (p-1)/2, (p-1)/6 for chi(p) = -1"
            }
            IdentityId::Eichler4n => "Eichler class number relation: sum over r of H(4n - r^2)",
            IdentityId::EichlerOdd => "Eichler class number relation: sum over r of H(n - r^2), n odd",
            IdentityId::Jacobi => "Jacobi's formula: sum over r of r3(n - r^2)",
            IdentityId::JacobiAlt => "Alternating Jacobi variant: sum over r of (-1)^r r3(n - r^2), n odd",
            IdentityId::Remark6Theta => {
                "Remark 6: theta(B1) - theta(B2) equals twice the positive-residue part of the rank series"
            }
            IdentityId::Lemma7 => "Lemma 7: displayed coefficients vs -4 H(n) for n = 7, 15, 23, 31",
            IdentityId::Lemma9I => {
                "Lemma 9(i): displayed coefficients vs -1/2 times representations of 2n by 4a^2 + b^2 + c^2"
            }
            IdentityId::Lemma9II => {
                "Lemma 9(ii): displayed coefficients vs -1/2 times representations of n by 4a^2 + 2b^2 + c^2"
            }
            IdentityId::Remark10Eta => {
                "Remark 10: eta(2t)^3 eta(4t) eta(8t)^2 / eta(t)^2 has coefficients sigma_1(n, chi)"
            }
            IdentityId::Remark10RepSums => {
                "Remark 10: odd-r representation sums equal 8 sigma_1(n, chi) and 16 sigma_1(n, chi)"
            }
            IdentityId::E2AQuasimodular => {
                "Section 4 quasimodular assembly vs the piecewise -4 sigma_1 coefficient formula"
            }
            IdentityId::E2BSeries => {
                "Section 5 series: alternating r3 sum vs -8 sigma_1(n, chi)(2 + chi(m)/2^(v+2))"
            }
            IdentityId::Example12 => "Example 12: both sides evaluate to 24 at n = 7",
            IdentityId::Remark13 => "Remark 13: sum over r of |a2(p - 2r^2)| = 2(p - 1) for inert primes",
            IdentityId::Eq2Limits => {
                "Eq. (2) local limits: congruence count densities at p = 2 stabilize at 2 resp. 1"
            }
        }
    }

    pub fn from_name(s: &str) -> Option<IdentityId> {
        IdentityId::ALL.iter().copied().find(|id| id.name() == s)
    }

    /// Identities that check a fixed displayed set rather than a range;
    /// user-supplied ranges are intersected with the default instead of
    /// extending it.
    pub fn fixed_range(self) -> bool {
        matches!(
            self,
            IdentityId::Prop1Series
                | IdentityId::Lemma7
                | IdentityId::Lemma9I
                | IdentityId::Lemma9II
                | IdentityId::Example12
                | IdentityId::Eq2Limits
        )
    }

    /// Default `n`-range (inclusive); fixed-set identities return the hull
    /// of their fixed sets and intersect with any user-supplied range.
    pub fn default_range(self) -> (i64, i64) {
        match self {
            IdentityId::Prop1Series => (0, DEFAULT_BRUTE_CEILING as i64),
            IdentityId::Prop2 | IdentityId::Cor3 => (1, 10_000),
            IdentityId::Prop4 | IdentityId::Cor5I | IdentityId::Cor5II | IdentityId::Cor5III => (1, 5_000),
            IdentityId::InertPrimes | IdentityId::Remark13 => (2, 999),
            IdentityId::Eichler4n
            | IdentityId::EichlerOdd
            | IdentityId::Jacobi
            | IdentityId::JacobiAlt => (1, 10_000),
            IdentityId::Remark6Theta => (1, 1_000),
            IdentityId::Lemma7 => (7, 31),
            IdentityId::Lemma9I => (1, 9),
            IdentityId::Lemma9II => (7, 39),
            IdentityId::Remark10Eta | IdentityId::Remark10RepSums => (1, 2_000),
            IdentityId::E2AQuasimodular | IdentityId::E2BSeries => (0, 2_000),
            IdentityId::Example12 => (7, 7),
            IdentityId::Eq2Limits => (0, 8),
        }
    }
}

/// One exact comparison. `pass` holds iff `lhs - rhs` is exactly zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub n: i64,
    pub lhs: Rational64,
    pub rhs: Rational64,
}

impl IdentityReport {
    pub fn residual(&self) -> Rational64 {
        self.lhs - self.rhs
    }

    pub fn pass(&self) -> bool {
        self.residual().is_zero()
    }
}

/// A recorded mismatch between a displayed value and the brute-force
/// computation, reported without failing the suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub context: String,
    pub printed: String,
    pub computed: String,
}

impl Discrepancy {
    pub fn message(&self) -> String {
        format!(
            "discrepancy: {} (printed {}, computed {}) -- {}",
            self.context, self.printed, self.computed, DISCREPANCY_TAG
        )
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("empty or inverted range: min {0} > max {1}")]
    EmptyRange(i64, i64),
    #[error("range too large for {id}: max {max} exceeds the feasibility cap {cap}")]
    RangeTooLarge { id: &'static str, max: i64, cap: i64 },
    #[error("overpartition enumeration: {0}")]
    Overpart(#[from] OverpartError),
    #[error("q-series: {0}")]
    QSeries(#[from] QSeriesError),
    #[error("local count: {0}")]
    LocalCount(#[from] LocalCountError),
}

/// Shared tables, sized once for all requested checks.
pub struct Kernels {
    pub hurwitz: HurwitzTable,
    pub alpha2: Alpha2Closed,
    pub r3: Vec<u64>,
    /// representations by 4a^2 + b^2 + c^2
    pub rep_a: Vec<u64>,
    /// representations by 4a^2 + 2b^2 + c^2
    pub rep_b: Vec<u64>,
    pub pell: PrimeElementCache,
}

/// A resolved request: identity plus inclusive n-range.
pub type Request = (IdentityId, i64, i64);

/// Per-identity feasibility caps (table sizes grow linearly in these).
fn feasibility_cap(id: IdentityId) -> i64 {
    match id {
        IdentityId::Prop1Series => 50,
        IdentityId::Prop2 | IdentityId::Cor3 | IdentityId::Eichler4n => 200_000,
        IdentityId::Remark6Theta => 20_000,
        IdentityId::Remark10Eta => 50_000,
        IdentityId::E2AQuasimodular => 100_000,
        IdentityId::Eq2Limits => 8,
        _ => 200_000,
    }
}

/// Resolve the identity list and range overrides into concrete requests.
pub fn resolve_requests(
    ids: &[IdentityId],
    min: Option<i64>,
    max: Option<i64>,
) -> Result<Vec<Request>, VerifyError> {
    let mut out = Vec::new();
    for &id in ids {
        let (dlo, dhi) = id.default_range();
        let mut lo = min.unwrap_or(dlo);
        let mut hi = max.unwrap_or(dhi);
        if id.fixed_range() {
            lo = lo.max(dlo);
            hi = hi.min(dhi);
            if lo > hi {
                // the user's window simply misses this fixed set
                continue;
            }
        }
        if lo > hi {
            return Err(VerifyError::EmptyRange(lo, hi));
        }
        let cap = feasibility_cap(id);
        if hi > cap {
            return Err(VerifyError::RangeTooLarge { id: id.name(), max: hi, cap });
        }
        out.push((id, lo, hi));
    }
    Ok(out)
}

impl Kernels {
    pub fn build(requests: &[Request]) -> Kernels {
        let mut h_max: u64 = 16;
        let mut a2_max: u64 = 8;
        let mut r3_max: u64 = 8;
        let mut repa_max: u64 = 8;
        let mut repb_max: u64 = 8;
        for &(id, _, hi) in requests {
            let hi = hi.max(0) as u64;
            match id {
                IdentityId::Prop1Series => a2_max = a2_max.max(hi),
                IdentityId::Prop2 => {
                    a2_max = a2_max.max(hi);
                    h_max = h_max.max(4 * hi);
                }
                IdentityId::Cor3 | IdentityId::Eichler4n => h_max = h_max.max(4 * hi),
                IdentityId::Prop4 => a2_max = a2_max.max(hi),
                IdentityId::Cor5I => h_max = h_max.max(4 * hi),
                IdentityId::Cor5II => h_max = h_max.max(2 * hi),
                IdentityId::Cor5III | IdentityId::EichlerOdd => h_max = h_max.max(hi),
                IdentityId::InertPrimes => h_max = h_max.max(8 * hi),
                IdentityId::Jacobi | IdentityId::JacobiAlt => r3_max = r3_max.max(hi),
                IdentityId::Remark6Theta => a2_max = a2_max.max(hi),
                IdentityId::Lemma7 => h_max = h_max.max(hi),
                IdentityId::Lemma9I => repa_max = repa_max.max(2 * hi),
                IdentityId::Lemma9II => repb_max = repb_max.max(hi),
                IdentityId::Remark10RepSums => {
                    repa_max = repa_max.max(4 * hi);
                    repb_max = repb_max.max(8 * hi);
                }
                IdentityId::E2BSeries => r3_max = r3_max.max(4 * hi),
                IdentityId::Example12 => a2_max = a2_max.max(8),
                IdentityId::Remark13 => a2_max = a2_max.max(hi),
                IdentityId::Remark10Eta
                | IdentityId::E2AQuasimodular
                | IdentityId::Eq2Limits => {}
            }
        }
        Kernels {
            hurwitz: HurwitzTable::build(h_max),
            alpha2: Alpha2Closed::build(a2_max),
            r3: crate::classnum::r3_table(r3_max),
            rep_a: rep_count_table((4, 1, 1), repa_max),
            rep_b: rep_count_table((4, 2, 1), repb_max),
            pell: PrimeElementCache::new(),
        }
    }
}

fn rat(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

// ---------------------------------------------------------------------------
// Left-hand sides and closed forms
// ---------------------------------------------------------------------------

/// `sum over r in Z of |a2(n - r^2)|`.
pub fn abs_alpha2_square_sum(k: &Kernels, n: i64) -> Result<i64, OverpartError> {
    let mut total = k.alpha2.abs_at(n)?;
    let mut r = 1i64;
    while r * r <= n {
        total += 2 * k.alpha2.abs_at(n - r * r)?;
        r += 1;
    }
    Ok(total)
}

/// `sum over r in Z of |a2(n - 2r^2)|`.
pub fn abs_alpha2_two_square_sum(k: &Kernels, n: i64) -> Result<i64, OverpartError> {
    let mut total = k.alpha2.abs_at(n)?;
    let mut r = 1i64;
    while 2 * r * r <= n {
        total += 2 * k.alpha2.abs_at(n - 2 * r * r)?;
        r += 1;
    }
    Ok(total)
}

/// `sum over odd r of H(4n - r^2)` restricted to arguments `== 7 mod 8`.
/// The restriction is automatic for even `n` and empties the sum for odd
/// `n`; it reflects the support of the relevant Eisenstein component.
pub fn h_sum_odd_r_supported(k: &Kernels, n: i64) -> Rational64 {
    let mut total = Rational64::zero();
    let mut r = 1i64;
    while r * r < 4 * n {
        let arg = 4 * n - r * r;
        if arg.rem_euclid(8) == 7 {
            total += k.hurwitz.get(arg as u64) * 2;
        }
        r += 2;
    }
    total
}

/// `sum over odd r of H(4n - r^2)`, unrestricted (the Corollary 3 sum).
pub fn h_sum_odd_r(k: &Kernels, n: i64) -> Rational64 {
    let mut total = Rational64::zero();
    let mut r = 1i64;
    while r * r < 4 * n {
        total += k.hurwitz.get((4 * n - r * r) as u64) * 2;
        r += 2;
    }
    total
}

/// `sum over all r in Z of H(c n - r^2)`, including `H(0) = -1/12` terms.
fn h_sum_all_r(k: &Kernels, m: i64) -> Rational64 {
    let mut total = k.hurwitz.get_i64(m);
    let mut r = 1i64;
    while r * r <= m {
        total += k.hurwitz.get_i64(m - r * r) * 2;
        r += 1;
    }
    total
}

/// `sum over r in Z of H(m - 2r^2)`, including `H(0)` terms.
pub fn h_sum_two_squares(k: &Kernels, m: i64) -> Rational64 {
    let mut total = k.hurwitz.get_i64(m);
    let mut r = 1i64;
    while 2 * r * r <= m {
        total += k.hurwitz.get_i64(m - 2 * r * r) * 2;
        r += 1;
    }
    total
}

/// The Proposition 2 aggregate
/// `alpha(n) = sum |a2(n - r^2)| + 4 sum_{r odd, supported} H(4n - r^2)
///  + 8 lambda_1(n) - (4 if n is a square)`.
///
/// The lambda coefficient 8 and the mod-8 support condition on the class
/// number sum are forced by the assembled proof identity (see
/// [`lemma8_aggregate`] and [`pell_square_sum`]); the displayed statement
/// abbreviates both.
pub fn prop2_alpha(k: &Kernels, n: i64) -> Result<Rational64, OverpartError> {
    let mut total = rat(abs_alpha2_square_sum(k, n)?);
    total += h_sum_odd_r_supported(k, n) * 4;
    total += lambda1(n as u64) * 8;
    if is_square(n as u64).is_some() {
        total -= rat(4);
    }
    Ok(total)
}

/// The three-case right-hand side of Proposition 2.
pub fn prop2_rhs(n: i64) -> Rational64 {
    let n = n as u64;
    match n % 4 {
        0 => rat(8 * sigma1(n / 2) + 16 * sigma1(n / 4)),
        2 => rat(24 * sigma1(n / 2)),
        _ => rat(4 * sigma1(n)),
    }
}

/// `sum over r in Z with r^2 - 4n a perfect square of (|r| - sqrt(r^2-4n))`.
pub fn pell_square_sum(n: i64) -> i64 {
    let mut total = 0i64;
    let mut r = 0i64;
    while r <= n + 1 {
        let d = r * r - 4 * n;
        if d >= 0 {
            if let Some(s) = is_square(d as u64) {
                let term = r - s as i64;
                total += if r == 0 { term } else { 2 * term };
            }
        }
        r += 1;
    }
    total
}

/// Exact value of the square-constrained Pell sum in terms of divisors:
/// `4 lambda_1(n) + (2 sqrt(n) if n is a square)`.
pub fn pell_square_sum_closed(n: i64) -> Rational64 {
    let mut total = lambda1(n as u64) * 4;
    if let Some(s) = is_square(n as u64) {
        total += rat(2 * s as i64);
    }
    total
}

/// The assembled proof identity behind Proposition 2, per residue class
/// of `n` mod 4; equals [`prop2_rhs`] at every `n`.
pub fn lemma8_aggregate(k: &Kernels, n: i64) -> Result<Rational64, OverpartError> {
    let mut total = rat(abs_alpha2_square_sum(k, n)?);
    match n.rem_euclid(4) {
        0 | 2 => {
            total += h_sum_odd_r(k, n) * 4;
            total += rat(2 * pell_square_sum(n));
            if n % 4 == 0 {
                if let Some(s) = is_square(n as u64) {
                    total -= rat(4 * (s as i64 + 1));
                }
            }
        }
        _ => {
            total += rat(2 * pell_square_sum(n));
            if let Some(s) = is_square(n as u64) {
                total -= rat(4 * (s as i64 + 1));
            }
        }
    }
    Ok(total)
}

/// Corollary 3 right-hand side.
pub fn cor3_rhs(n: i64) -> Rational64 {
    let u = n as u64;
    match u % 4 {
        2 => rat(4 * sigma1(u / 2)) - lambda1(u) * 2,
        0 => {
            Rational64::new(2 * sigma1(u), 3) + rat(2 * sigma1(u / 2))
                - Rational64::new(8 * sigma1(u / 4), 3)
                + lambda1(u / 4) * 4
                - lambda1(u) * 2
        }
        _ => Rational64::new(2 * sigma1(u), 3),
    }
}

/// `2 + chi(m) / 2^v` for `n = 2^v m`, `m` odd.
fn twist_factor(n: u64, extra: u32) -> Rational64 {
    let (v, m) = split2(n);
    rat(2) + Rational64::new(chi8(m as i64), 1 << (v + extra))
}

/// Proposition 4 right-hand side.
pub fn prop4_rhs(k: &mut Kernels, n: i64) -> Rational64 {
    let u = n as u64;
    let mut total = twist_factor(u, 0) * 2 * sigma1_chi(u);
    total += rat(4 * correction_sum(2 * u, &mut k.pell));
    if is_square(2 * u).is_some() {
        total += rat(4);
    }
    total
}

/// Corollary 5 right-hand sides.
pub fn cor5i_rhs(k: &mut Kernels, n: i64) -> Rational64 {
    let u = n as u64;
    twist_factor(u, 2) * Rational64::new(2 * sigma1_chi(u), 3)
        + Rational64::new(correction_sum(8 * u, &mut k.pell), 2)
}

pub fn cor5ii_rhs(k: &mut Kernels, n: i64) -> Rational64 {
    let u = n as u64;
    Rational64::new((4 + chi8(n)) * sigma1_chi(u), 6)
        + Rational64::new(correction_sum(4 * u, &mut k.pell), 2)
}

pub fn cor5iii_rhs(k: &mut Kernels, n: i64) -> Rational64 {
    let u = n as u64;
    Rational64::new((2 + chi8(n)) * sigma1_chi(u), 6)
        + Rational64::new(correction_sum(2 * u, &mut k.pell), 2)
}

/// `sum over r in Z of r3(n - r^2)` from the table.
pub fn jacobi_lhs(k: &Kernels, n: i64) -> i64 {
    let mut total = k.r3[n as usize] as i64;
    let mut r = 1i64;
    while r * r <= n {
        total += 2 * k.r3[(n - r * r) as usize] as i64;
        r += 1;
    }
    total
}

/// `sum over r in Z of (-1)^r r3(n - r^2)`.
pub fn jacobi_alt_lhs(k: &Kernels, n: i64) -> i64 {
    let mut total = k.r3[n as usize] as i64;
    let mut r = 1i64;
    while r * r <= n {
        let sign = if r % 2 == 0 { 2 } else { -2 };
        total += sign * k.r3[(n - r * r) as usize] as i64;
        r += 1;
    }
    total
}

/// Coefficient formula for the weight-2 quasimodular component of
/// section 4: 1 at n = 0, then `-4 s1(n)` (odd), `-24 s1(n/2)` (n = 2 mod
/// 4), `-8 s1(n/2) - 16 s1(n/4)` (n = 0 mod 4).
pub fn e2a_coeff(n: i64) -> Rational64 {
    if n == 0 {
        return rat(1);
    }
    -prop2_rhs(n)
}

/// Coefficient formula for the weight-2 modular form of section 5:
/// `-8 sigma_1(n, chi) (2 + chi(m)/2^(v+2))`, with constant term 1.
pub fn e2b_coeff(n: i64) -> Rational64 {
    if n == 0 {
        return rat(1);
    }
    let u = n as u64;
    twist_factor(u, 2) * rat(-8 * sigma1_chi(u))
}

/// `sum over r in Z of (-1)^r r3(4n - 2r^2)`.
pub fn e2b_lhs(k: &Kernels, n: i64) -> i64 {
    let mut total = k.r3[4 * n as usize] as i64;
    let mut r = 1i64;
    while 2 * r * r <= 4 * n {
        let sign = if r % 2 == 0 { 2 } else { -2 };
        total += sign * k.r3[(4 * n - 2 * r * r) as usize] as i64;
        r += 1;
    }
    total
}

/// `sum over odd r of rep(c n - 2r^2)` for a representation-count table.
fn odd_r_rep_sum(table: &[u64], m: i64, two_r_sq: bool) -> i64 {
    let mut total = 0i64;
    let mut r = 1i64;
    loop {
        let arg = if two_r_sq { m - 2 * r * r } else { m - r * r };
        if arg < 0 {
            break;
        }
        total += 2 * table[arg as usize] as i64;
        r += 2;
    }
    total
}

/// The quasimodular assembly of section 4 as a q-series:
/// `(2/3) E2(2t) + (2/3) E2(4t) - (1/3) E2(2t + 1/2) - 4 sum s1(2k+1) q^(2k+1)`.
pub fn e2a_series(max_n: i64) -> Result<QSeries, QSeriesError> {
    let trunc = 8 * (max_n + 1);
    let e2 = e2_level1(trunc);
    let third = Rational64::new(1, 3);
    let mut acc = e2.rescale_exponents(2).scale(third * 2);
    acc = acc.add(&e2.rescale_exponents(4).scale(third * 2));
    // E2(2t + 1/2): negate odd coefficients, then double exponents
    acc = acc.sub(&e2.alternate_signs()?.rescale_exponents(2).scale(third));
    let mut odd = QSeries::zero(trunc);
    let mut m = 1i64;
    while m <= max_n {
        odd.set(8 * m, rat(-4 * sigma1(m as u64)));
        m += 2;
    }
    Ok(acc.add(&odd))
}

/// Sieve of primes up to `hi` inclusive.
fn primes_to(hi: i64) -> Vec<i64> {
    if hi < 2 {
        return Vec::new();
    }
    let n = hi as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    if n >= 1 {
        sieve[1] = false;
    }
    let mut p = 2usize;
    while p * p <= n {
        if sieve[p] {
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as i64).collect()
}

// ---------------------------------------------------------------------------
// Per-identity checks
// ---------------------------------------------------------------------------

struct CheckOutput {
    reports: Vec<IdentityReport>,
    discrepancies: Vec<Discrepancy>,
}

fn report(id: IdentityId, n: i64, lhs: Rational64, rhs: Rational64) -> IdentityReport {
    IdentityReport { id, n, lhs, rhs }
}

/// Displayed opening coefficients of the signed section-5 component
/// `1 - sum |a2(n)| q^n`; the q^4 entry disagrees with the computed value.
const SECTION5_COMPONENT_DISPLAY: [(i64, i64); 6] =
    [(0, 1), (1, -2), (2, -4), (3, 0), (4, -4), (5, -8)];

fn check_prop1_series(
    k: &Kernels,
    lo: i64,
    hi: i64,
    brute_ceiling: u64,
) -> Result<CheckOutput, VerifyError> {
    let mut reports = Vec::new();
    let mut discrepancies = Vec::new();
    let hi = hi.min(brute_ceiling as i64);
    for n in lo.max(0)..=hi {
        let lhs = alpha2_brute(n as u64, brute_ceiling)?;
        let rhs = k.alpha2.get(n as u64)?;
        reports.push(report(IdentityId::Prop1Series, n, rat(lhs), rat(rhs)));
    }
    // cross-check the displayed signed series; exactly one entry disagrees
    for (n, printed) in SECTION5_COMPONENT_DISPLAY {
        let computed = if n == 0 { 1 } else { -k.alpha2.abs_at(n)? };
        if computed != printed {
            discrepancies.push(Discrepancy {
                context: format!(
                    "signed component series 1 - sum |a2(n)| q^n, coefficient of q^{n}"
                ),
                printed: printed.to_string(),
                computed: computed.to_string(),
            });
        }
    }
    Ok(CheckOutput { reports, discrepancies })
}

fn check_prop2(k: &Kernels, lo: i64, hi: i64) -> Result<CheckOutput, VerifyError> {
    let mut reports = Vec::new();
    for n in lo.max(1)..=hi {
        let lhs = prop2_alpha(k, n)?;
        let rhs = prop2_rhs(n);
        reports.push(report(IdentityId::Prop2, n, lhs, rhs));
        // internal consistency: assembled proof route and divisor bridge
        let bridge = rat(pell_square_sum(n));
        if bridge != pell_square_sum_closed(n) {
            reports.push(report(IdentityId::Prop2, n, bridge, pell_square_sum_closed(n)));
        }
        let lemma8 = lemma8_aggregate(k, n)?;
        if lemma8 != rhs {
            reports.push(report(IdentityId::Prop2, n, lemma8, rhs));
        }
        // sign relation with the section-4 coefficient formula
        if lhs != -e2a_coeff(n) {
            reports.push(report(IdentityId::Prop2, n, lhs, -e2a_coeff(n)));
        }
        // cross-consistency with Corollary 3: for even n the supported
        // class number sum is the full odd-r sum, so the Corollary 3
        // closed form must account for the gap between the alpha2 part
        // and the divisor-sum side; for odd n the supported sum is empty
        let gap = (rhs - rat(abs_alpha2_square_sum(k, n)?) - lambda1(n as u64) * 8
            + if is_square(n as u64).is_some() { rat(4) } else { rat(0) })
            / 4;
        let cor3_part = if n % 2 == 0 { cor3_rhs(n) } else { Rational64::zero() };
        if gap != cor3_part {
            reports.push(report(IdentityId::Prop2, n, gap, cor3_part));
        }
    }
    Ok(CheckOutput { reports, discrepancies: Vec::new() })
}

fn check_simple<F>(id: IdentityId, lo: i64, hi: i64, mut f: F) -> Result<CheckOutput, VerifyError>
where
    F: FnMut(i64) -> Result<Option<(Rational64, Rational64)>, VerifyError>,
{
    let mut reports = Vec::new();
    for n in lo..=hi {
        if let Some((lhs, rhs)) = f(n)? {
            reports.push(report(id, n, lhs, rhs));
        }
    }
    Ok(CheckOutput { reports, discrepancies: Vec::new() })
}

fn check_remark6(k: &Kernels, lo: i64, hi: i64) -> Result<CheckOutput, VerifyError> {
    let trunc = 8 * (hi + 1);
    let b1 = GramForm::diagonal(&[2, 2, 2])?;
    let b2 = GramForm::diagonal(&[4, 4, 2])?;
    let th1 = theta_coset(&b1, &CosetVector::zero(&b1), trunc)?;
    let th2 = theta_coset(&b2, &CosetVector::zero(&b2), trunc)?;
    let diff = th1.sub(&th2);
    check_simple(IdentityId::Remark6Theta, lo.max(1), hi, |n| {
        let rhs = if n % 4 == 1 || n % 4 == 2 {
            rat(2 * k.alpha2.get(n as u64)?)
        } else {
            Rational64::zero()
        };
        Ok(Some((diff.coeff_int(n), rhs)))
    })
}

fn check_remark10_eta(lo: i64, hi: i64) -> Result<CheckOutput, VerifyError> {
    let trunc = 8 * (hi + 1);
    let quotient = eta_quotient(&[(1, -2), (2, 3), (4, 1), (8, 2)], trunc)?;
    check_simple(IdentityId::Remark10Eta, lo.max(1), hi, |n| {
        Ok(Some((quotient.coeff_int(n), rat(sigma1_chi(n as u64)))))
    })
}

fn check_e2a(lo: i64, hi: i64) -> Result<CheckOutput, VerifyError> {
    let series = e2a_series(hi)?;
    check_simple(IdentityId::E2AQuasimodular, lo.max(0), hi, |n| {
        Ok(Some((series.coeff_int(n), e2a_coeff(n))))
    })
}

/// Fixed displayed coefficients for the component series of Lemmas 7 and 9.
const LEMMA7_DISPLAY: [(i64, i64); 4] = [(7, -4), (15, -8), (23, -12), (31, -12)];
const LEMMA9I_DISPLAY: [(i64, i64); 5] = [(1, -2), (3, -4), (5, -4), (7, -8), (9, -6)];
const LEMMA9II_DISPLAY: [(i64, i64); 5] = [(7, -4), (15, -4), (23, -4), (31, -8), (39, -4)];

fn check_display<F>(
    id: IdentityId,
    display: &[(i64, i64)],
    lo: i64,
    hi: i64,
    mut rhs: F,
) -> Result<CheckOutput, VerifyError>
where
    F: FnMut(i64) -> Rational64,
{
    let mut reports = Vec::new();
    for &(n, printed) in display {
        if n < lo || n > hi {
            continue;
        }
        reports.push(report(id, n, rat(printed), rhs(n)));
    }
    Ok(CheckOutput { reports, discrepancies: Vec::new() })
}

fn check_eq2(ceiling: u128) -> Result<CheckOutput, VerifyError> {
    let q2 = q2_form();
    let q2t = q2_tilde_form();
    let zero = Rational64::zero();
    // (case label, form, coset, expected limit, use pole extraction)
    let cases: Vec<(&GramForm, Vec<(i64, i64)>, i64, bool)> = vec![
        (&q2, vec![(0, 1), (0, 1), (0, 1)], 2, true),
        (&q2t, vec![(0, 1), (0, 1), (0, 1)], 2, true),
        // the half-integral coset with integral Q-value
        (&q2, vec![(1, 2), (0, 1), (1, 2)], 2, false),
        (&q2, vec![(1, 4), (1, 2), (1, 4)], 1, false),
        (&q2, vec![(1, 4), (1, 2), (3, 4)], 1, false),
        (&q2, vec![(3, 4), (1, 2), (1, 4)], 1, false),
        (&q2, vec![(3, 4), (1, 2), (3, 4)], 1, false),
        (&q2t, vec![(1, 2), (1, 2), (0, 1)], 2, false),
        (&q2t, vec![(1, 4), (1, 4), (0, 1)], 1, false),
    ];
    let mut reports = Vec::new();
    for (idx, (form, coords, expected, pole)) in cases.iter().enumerate() {
        let gamma = CosetVector::from_i64_fracs(form, coords)?;
        let seq = if *pole {
            local_limit_sequence(form, &gamma, zero, 2, 8, ceiling)?
        } else {
            density_ratio_sequence(form, &gamma, zero, 2, 6, ceiling)?
        };
        let lhs = match stable_value(&seq) {
            Some((value, first)) if first <= 6 => value,
            // not stabilized: report the final value, which cannot silently
            // match because the run-length requirement failed
            _ => *seq.last().expect("nonempty sequence") + rat(1_000_000),
        };
        reports.push(report(IdentityId::Eq2Limits, idx as i64, lhs, rat(*expected)));
    }

    // The displayed closed form for the gamma = 0 local series at p = 2,
    // written in t = 2^(-s), is (1 - 8t^2 + 128t^4) / ((1 - 4t) t^2 (1 - 8t^2)).
    // Its Laurent expansion begins at t^(-2), while the defining count
    // series begins at t^0 = 1; equivalently, the closed form as displayed
    // evaluates the pole limit to 32 instead of the stated 2. After
    // clearing the spurious t^2 every coefficient matches the brute-force
    // congruence counts, which pins the misprint to the (2^(2s) - 8)^(-1)
    // factor (read: (1 - 2^(3-2s))^(-1)).
    let counts = count_series(&q2, &CosetVector::zero(&q2), zero, 2, 5, ceiling)?;
    let cleared = closed_form_counts_cleared(5);
    for nu in 0..=5usize {
        assert_eq!(
            cleared[nu], counts[nu] as i64,
            "cleared closed form must reproduce the counts at nu = {nu}"
        );
    }
    let discrepancies = vec![Discrepancy {
        context: "closed form for the gamma = 0 local series at p = 2, expanded in \
                  t = 2^(-s): leading exponent (defining count series begins at t^0; \
                  multiplying the displayed form by t^2 reproduces every brute-force \
                  count, so the pole limit is 2, not 32)"
            .to_string(),
        printed: "-2".to_string(),
        computed: "0".to_string(),
    }];
    Ok(CheckOutput { reports, discrepancies })
}

/// Coefficients of t^2 * (1 - 8t^2 + 128t^4) / ((1 - 4t) t^2 (1 - 8t^2)),
/// i.e. the displayed closed form renormalized to start at t^0.
pub fn closed_form_counts_cleared(nu_max: usize) -> Vec<i64> {
    // b = 1 / ((1 - 4t)(1 - 8t^2)); numerator (1 - 8t^2 + 128t^4)
    let mut b = vec![0i64; nu_max + 1];
    for (kk, bk) in b.iter_mut().enumerate() {
        let mut total = 0i64;
        let mut j = 0usize;
        while 2 * j <= kk {
            total += 8i64.pow(j as u32) * 4i64.pow((kk - 2 * j) as u32);
            j += 1;
        }
        *bk = total;
    }
    (0..=nu_max)
        .map(|kk| {
            let mut c = b[kk];
            if kk >= 2 {
                c -= 8 * b[kk - 2];
            }
            if kk >= 4 {
                c += 128 * b[kk - 4];
            }
            c
        })
        .collect()
}

/// Run one identity over an inclusive range.
pub fn check_identity(
    k: &mut Kernels,
    id: IdentityId,
    lo: i64,
    hi: i64,
    brute_ceiling: u64,
) -> Result<(Vec<IdentityReport>, Vec<Discrepancy>), VerifyError> {
    let out = match id {
        IdentityId::Prop1Series => check_prop1_series(k, lo, hi, brute_ceiling)?,
        IdentityId::Prop2 => check_prop2(k, lo, hi)?,
        IdentityId::Cor3 => check_simple(id, lo.max(1), hi, |n| {
            Ok(Some((h_sum_odd_r(k, n), cor3_rhs(n))))
        })?,
        IdentityId::Prop4 => {
            let mut reports = Vec::new();
            for n in lo.max(1)..=hi {
                let lhs = rat(abs_alpha2_two_square_sum(k, n)?);
                let rhs = prop4_rhs(k, n);
                reports.push(report(id, n, lhs, rhs));
            }
            CheckOutput { reports, discrepancies: Vec::new() }
        }
        IdentityId::Cor5I => {
            let mut reports = Vec::new();
            for n in lo.max(1)..=hi {
                let lhs = h_sum_two_squares(k, 4 * n);
                let rhs = cor5i_rhs(k, n);
                reports.push(report(id, n, lhs, rhs));
            }
            CheckOutput { reports, discrepancies: Vec::new() }
        }
        IdentityId::Cor5II => {
            let mut reports = Vec::new();
            for n in (lo.max(1)..=hi).filter(|n| n % 2 == 1) {
                let lhs = h_sum_two_squares(k, 2 * n);
                let rhs = cor5ii_rhs(k, n);
                reports.push(report(id, n, lhs, rhs));
            }
            CheckOutput { reports, discrepancies: Vec::new() }
        }
        IdentityId::Cor5III => {
            let mut reports = Vec::new();
            for n in (lo.max(1)..=hi).filter(|n| n % 2 == 1) {
                let lhs = h_sum_two_squares(k, n);
                let rhs = cor5iii_rhs(k, n);
                reports.push(report(id, n, lhs, rhs));
            }
            CheckOutput { reports, discrepancies: Vec::new() }
        }
        IdentityId::InertPrimes => {
            let mut reports = Vec::new();
            for p in primes_to(hi) {
                if p < lo || chi8(p) != -1 {
                    continue;
                }
                reports.push(report(id, p, h_sum_two_squares(k, 4 * p), Rational64::new(7 * (p - 1), 6)));
                reports.push(report(id, p, h_sum_two_squares(k, 2 * p), Rational64::new(p - 1, 2)));
                reports.push(report(id, p, h_sum_two_squares(k, p), Rational64::new(p - 1, 6)));
            }
            CheckOutput { reports, discrepancies: Vec::new() }
        }
        IdentityId::Eichler4n => check_simple(id, lo.max(1), hi, |n| {
            Ok(Some((h_sum_all_r(k, 4 * n), rat(2 * sigma1(n as u64)) - lambda1(n as u64) * 2)))
        })?,
        IdentityId::EichlerOdd => check_simple(id, lo.max(1), hi, |n| {
            if n % 2 == 0 {
                return Ok(None);
            }
            Ok(Some((
                h_sum_all_r(k, n),
                Rational64::new(sigma1(n as u64), 3) - lambda1(n as u64),
            )))
        })?,
        IdentityId::Jacobi => check_simple(id, lo.max(1), hi, |n| {
            Ok(Some((
                rat(jacobi_lhs(k, n)),
                rat(8 * sigma1(n as u64) - 32 * crate::arith::sigma1_div(n as u64, 4)),
            )))
        })?,
        IdentityId::JacobiAlt => check_simple(id, lo.max(1), hi, |n| {
            if n % 2 == 0 {
                return Ok(None);
            }
            let sign = if (n - 1) / 2 % 2 == 0 { 4 } else { -4 };
            Ok(Some((rat(jacobi_alt_lhs(k, n)), rat(sign * sigma1(n as u64)))))
        })?,
        IdentityId::Remark6Theta => check_remark6(k, lo, hi)?,
        IdentityId::Lemma7 => check_display(id, &LEMMA7_DISPLAY, lo, hi, |n| {
            k.hurwitz.get(n as u64) * -4
        })?,
        IdentityId::Lemma9I => check_display(id, &LEMMA9I_DISPLAY, lo, hi, |n| {
            Rational64::new(-(k.rep_a[2 * n as usize] as i64), 2)
        })?,
        IdentityId::Lemma9II => check_display(id, &LEMMA9II_DISPLAY, lo, hi, |n| {
            Rational64::new(-(k.rep_b[n as usize] as i64), 2)
        })?,
        IdentityId::Remark10Eta => check_remark10_eta(lo, hi)?,
        IdentityId::Remark10RepSums => {
            let mut reports = Vec::new();
            for n in lo.max(1)..=hi {
                let s = sigma1_chi(n as u64);
                reports.push(report(id, n, rat(odd_r_rep_sum(&k.rep_a, 4 * n, true)), rat(8 * s)));
                reports.push(report(id, n, rat(odd_r_rep_sum(&k.rep_b, 8 * n, false)), rat(16 * s)));
            }
            CheckOutput { reports, discrepancies: Vec::new() }
        }
        IdentityId::E2AQuasimodular => check_e2a(lo, hi)?,
        IdentityId::E2BSeries => check_simple(id, lo.max(0), hi, |n| {
            Ok(Some((rat(e2b_lhs(k, n)), e2b_coeff(n))))
        })?,
        IdentityId::Example12 => {
            let mut reports = Vec::new();
            if lo <= 7 && 7 <= hi {
                let lhs = rat(abs_alpha2_two_square_sum(k, 7)?);
                // 48 - 12 - 12, assembled from the twisted divisor sum and
                // the two ideals of norm 14 with reduced trace 8
                let main = twist_factor(7, 0) * 2 * sigma1_chi(7);
                let ideals = ideals_of_norm(14, &mut k.pell);
                let corr: i64 = ideals.iter().map(|r| 4 * (r.b.abs() - r.a)).sum();
                reports.push(report(id, 7, lhs, main + rat(corr)));
            }
            CheckOutput { reports, discrepancies: Vec::new() }
        }
        IdentityId::Remark13 => {
            let mut reports = Vec::new();
            for p in primes_to(hi) {
                if p < lo || chi8(p) != -1 {
                    continue;
                }
                let lhs = rat(abs_alpha2_two_square_sum(k, p)?);
                reports.push(report(id, p, lhs, rat(2 * (p - 1))));
            }
            CheckOutput { reports, discrepancies: Vec::new() }
        }
        IdentityId::Eq2Limits => check_eq2(DEFAULT_CEILING)?,
    };
    Ok((out.reports, out.discrepancies))
}

// ---------------------------------------------------------------------------
// Suite runner
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub ids: Vec<IdentityId>,
    pub min: Option<i64>,
    pub max: Option<i64>,
    pub brute_ceiling: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            ids: IdentityId::ALL.to_vec(),
            min: None,
            max: None,
            brute_ceiling: DEFAULT_BRUTE_CEILING,
        }
    }
}

pub struct SuiteOutcome {
    pub reports: Vec<IdentityReport>,
    pub discrepancies: Vec<Discrepancy>,
}

impl SuiteOutcome {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(IdentityReport::pass)
    }

    pub fn failures(&self) -> usize {
        self.reports.iter().filter(|r| !r.pass()).count()
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome, VerifyError> {
    let requests = resolve_requests(&cfg.ids, cfg.min, cfg.max)?;
    let mut kernels = Kernels::build(&requests);
    let mut reports = Vec::new();
    let mut discrepancies = Vec::new();
    for &(id, lo, hi) in &requests {
        let (mut r, mut d) = check_identity(&mut kernels, id, lo, hi, cfg.brute_ceiling)?;
        reports.append(&mut r);
        discrepancies.append(&mut d);
    }
    Ok(SuiteOutcome { reports, discrepancies })
}

/// Render a rational as `p/q`, omitting a trivial denominator.
pub fn format_rational(r: Rational64) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_kernels(ids: &[IdentityId], hi: i64) -> Kernels {
        let requests: Vec<Request> = ids.iter().map(|&id| (id, 1, hi)).collect();
        Kernels::build(&requests)
    }

    #[test]
    fn prop2_small_values() {
        let k = small_kernels(&[IdentityId::Prop2], 50);
        for n in 1..=50 {
            assert_eq!(prop2_alpha(&k, n).unwrap(), prop2_rhs(n), "n = {n}");
        }
        // spot values from the statement
        assert_eq!(prop2_alpha(&k, 1).unwrap(), rat(4));
        assert_eq!(prop2_alpha(&k, 2).unwrap(), rat(24));
    }

    #[test]
    fn lemma8_and_bridge_agree() {
        let k = small_kernels(&[IdentityId::Prop2], 60);
        for n in 1..=60 {
            assert_eq!(rat(pell_square_sum(n)), pell_square_sum_closed(n), "bridge n = {n}");
            assert_eq!(lemma8_aggregate(&k, n).unwrap(), prop2_rhs(n), "lemma 8 n = {n}");
        }
    }

    #[test]
    fn cor3_small_values() {
        let k = small_kernels(&[IdentityId::Cor3], 60);
        for n in 1..=60 {
            assert_eq!(h_sum_odd_r(&k, n), cor3_rhs(n), "n = {n}");
        }
    }

    #[test]
    fn prop4_example12() {
        let mut k = small_kernels(&[IdentityId::Prop4], 40);
        assert_eq!(abs_alpha2_two_square_sum(&k, 7).unwrap(), 24);
        assert_eq!(prop4_rhs(&mut k, 7), rat(24));
        for n in 1..=40 {
            assert_eq!(
                rat(abs_alpha2_two_square_sum(&k, n).unwrap()),
                prop4_rhs(&mut k, n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn e2a_series_matches_coefficients() {
        let series = e2a_series(30).unwrap();
        let printed = [1i64, -4, -24, -16, -40, -24];
        for (n, &p) in printed.iter().enumerate() {
            assert_eq!(series.coeff_int(n as i64), rat(p), "printed n = {n}");
        }
        for n in 0..=30 {
            assert_eq!(series.coeff_int(n), e2a_coeff(n), "n = {n}");
        }
    }

    #[test]
    fn e2b_printed_values() {
        let k = small_kernels(&[IdentityId::E2BSeries], 10);
        let printed = [1i64, -18, -34, -28, -66, -56, -60];
        for (n, &p) in printed.iter().enumerate() {
            let n = n as i64;
            assert_eq!(rat(e2b_lhs(&k, n)), rat(p), "lhs n = {n}");
            assert_eq!(e2b_coeff(n), rat(p), "rhs n = {n}");
        }
    }

    #[test]
    fn closed_form_cleared_matches_counts() {
        // after clearing the spurious t^2 the displayed closed form
        // reproduces the gamma = 0 congruence counts exactly
        let c = closed_form_counts_cleared(8);
        assert_eq!(c, vec![1, 4, 16, 64, 384, 1536, 7168, 28672, 122880]);
    }

    #[test]
    fn format_rational_plain_and_fraction() {
        assert_eq!(format_rational(rat(-8)), "-8");
        assert_eq!(format_rational(Rational64::new(7, 6)), "7/6");
    }

    #[test]
    fn identity_names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(IdentityId::from_name(id.name()), Some(id));
        }
        assert_eq!(IdentityId::from_name("nope"), None);
    }
}
