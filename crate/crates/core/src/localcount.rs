//! Brute-force congruence counting behind the local L-series: exact counts
//! of solutions of Q(v - gamma) + n = 0 mod p^nu and the density ratio
//! sequences whose stable values are the local limit constants.

use crate::qseries::{CosetVector, GramForm};
use num_rational::Rational64;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LocalCountError {
    #[error("n + Q(gamma) = {value} is not an integer; the congruence is not well-defined")]
    OffsetNotIntegral { value: Rational64 },
    #[error("enumeration size p^(nu e) = {points} exceeds the ceiling {ceiling}")]
    CeilingExceeded { points: u128, ceiling: u128 },
}

/// Default feasibility ceiling on the number of enumerated points.
pub const DEFAULT_CEILING: u128 = 1 << 26;

/// Exact count of `v` in `(Z/p^nu)^e` with `Q(v - gamma) + n = 0 mod p^nu`,
/// by exhaustive enumeration.
///
/// Well-defined because `S gamma` is integral, so `Q(v - gamma) + n` is an
/// integer-valued polynomial in `v` whenever `n + Q(gamma)` is an integer.
pub fn count_congruence(
    form: &GramForm,
    gamma: &CosetVector,
    n: Rational64,
    p: u64,
    nu: u32,
    ceiling: u128,
) -> Result<u64, LocalCountError> {
    let q_gamma = form.q_of(gamma.coords());
    let offset = n + q_gamma;
    if !offset.is_integer() {
        return Err(LocalCountError::OffsetNotIntegral { value: offset });
    }
    if nu == 0 {
        return Ok(1);
    }
    let e = form.dim() as u32;
    let points = (p as u128).pow(nu * e);
    if points > ceiling {
        return Err(LocalCountError::CeilingExceeded { points, ceiling });
    }
    let modulus = (p as i64).pow(nu);

    // clear denominators: gamma = g/d, Q(v - gamma) = (dv - g)^T S (dv - g) / (2 d^2)
    let d = gamma
        .coords()
        .iter()
        .fold(1i64, |acc, c| num_integer::lcm(acc, *c.denom()));
    let g: Vec<i64> = gamma
        .coords()
        .iter()
        .map(|c| {
            let scaled = c * d;
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .collect();
    let n_num = *n.numer();
    let n_den = *n.denom();
    let scale = 2 * d * d; // Q(v-gamma) = val / scale
    let full_den = scale * n_den;

    let e = e as usize;
    let mut v = vec![0i64; e];
    let mut count = 0u64;
    loop {
        // w = d v - g
        let mut val: i64 = 0;
        for i in 0..e {
            let wi = d * v[i] - g[i];
            for j in 0..e {
                let wj = d * v[j] - g[j];
                val += form.gram()[i][j] * wi * wj;
            }
        }
        // total = val/scale + n_num/n_den; integral by the precondition
        let total_num = val * n_den + n_num * scale;
        debug_assert_eq!(total_num % full_den, 0);
        let total = total_num / full_den;
        if total.rem_euclid(modulus) == 0 {
            count += 1;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == e {
                return Ok(count);
            }
            v[i] += 1;
            if v[i] < modulus {
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

/// The sequence `count(nu) / p^(nu (e-1))` for `nu = 0..=nu_max`. When the
/// local L-series has a simple pole of the expected shape, this sequence is
/// eventually constant and its stable value is the local limit constant.
pub fn density_ratio_sequence(
    form: &GramForm,
    gamma: &CosetVector,
    n: Rational64,
    p: u64,
    nu_max: u32,
    ceiling: u128,
) -> Result<Vec<Rational64>, LocalCountError> {
    let e = form.dim() as u32;
    (0..=nu_max)
        .map(|nu| {
            let c = count_congruence(form, gamma, n, p, nu, ceiling)?;
            Ok(Rational64::new(c as i64, (p as i64).pow(nu * (e - 1))))
        })
        .collect()
}

/// Like [`density_ratio_sequence`] but with an explicit normalization
/// exponent `sigma` (counts divided by `p^(nu sigma)`); the weight-3/2
/// coefficient formulas evaluate the local series at different points for
/// different dimensions.
pub fn scaled_count_sequence(
    form: &GramForm,
    gamma: &CosetVector,
    n: Rational64,
    p: u64,
    nu_max: u32,
    sigma: u32,
    ceiling: u128,
) -> Result<Vec<Rational64>, LocalCountError> {
    (0..=nu_max)
        .map(|nu| {
            let c = count_congruence(form, gamma, n, p, nu, ceiling)?;
            Ok(Rational64::new(c as i64, (p as i64).pow(nu * sigma)))
        })
        .collect()
}

/// The pole-extracted local limit sequence: the congruence counts grow like
/// `C p^{nu (e-1)}` plus a square-root-cancellation term of size `p^{nu e/2}`,
/// so the plain density ratio converges to the local limit without ever
/// becoming constant when the subdominant term is present. The combination
///
/// `t(nu) = (count(nu+2) - p^e count(nu)) / (p^{(nu+2)(e-1)} - p^{e + nu(e-1)})`
///
/// annihilates the subdominant term exactly and is eventually constant with
/// value equal to the local limit of Eq. (2) type. When the counts are
/// already exactly `C p^{nu(e-1)}` (generic cosets) it reproduces `C`.
pub fn local_limit_sequence(
    form: &GramForm,
    gamma: &CosetVector,
    n: Rational64,
    p: u64,
    nu_max: u32,
    ceiling: u128,
) -> Result<Vec<Rational64>, LocalCountError> {
    let e = form.dim() as u32;
    // degenerate for e = 2: dominant and subdominant growth coincide
    assert_ne!(e, 2, "local_limit_sequence is undefined in dimension 2");
    let counts = count_series(form, gamma, n, p, nu_max, ceiling)?;
    let pe = (p as i64).pow(e);
    Ok(counts
        .windows(3)
        .enumerate()
        .map(|(nu, w)| {
            let nu = nu as u32;
            let num = w[2] as i64 - pe * w[0] as i64;
            let den = (p as i64).pow((nu + 2) * (e - 1)) - (p as i64).pow(e + nu * (e - 1));
            Rational64::new(num, den)
        })
        .collect())
}

/// Returns `Some(value)` when the tail of the sequence starting at
/// `from` is constant, together with the first index where it stabilizes.
pub fn stable_value(seq: &[Rational64]) -> Option<(Rational64, usize)> {
    let last = *seq.last()?;
    let mut first = seq.len() - 1;
    while first > 0 && seq[first - 1] == last {
        first -= 1;
    }
    if first < seq.len() - 1 || seq.len() == 1 {
        Some((last, first))
    } else {
        None
    }
}

/// The `e_0`-component defining series of the local L-function: counts as
/// coefficients of `t^nu`, `t = p^{-s}`, used for the closed-form
/// comparison.
pub fn count_series(
    form: &GramForm,
    gamma: &CosetVector,
    n: Rational64,
    p: u64,
    nu_max: u32,
    ceiling: u128,
) -> Result<Vec<u64>, LocalCountError> {
    (0..=nu_max)
        .map(|nu| count_congruence(form, gamma, n, p, nu, ceiling))
        .collect()
}

pub fn q2_form() -> GramForm {
    GramForm::diagonal(&[4, -2, 4]).expect("valid Gram matrix")
}

pub fn q2_tilde_form() -> GramForm {
    GramForm::diagonal(&[4, -4, 2]).expect("valid Gram matrix")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn zero_n() -> Rational64 {
        Rational64::zero()
    }

    #[test]
    fn nu_zero_is_one() {
        let f = q2_form();
        let g = CosetVector::zero(&f);
        assert_eq!(count_congruence(&f, &g, zero_n(), 2, 0, DEFAULT_CEILING), Ok(1));
    }

    #[test]
    fn q2_nu_one() {
        // Q2 = 2x^2 - y^2 + 2z^2 = y mod 2, so y even: 2*1*2 solutions
        let f = q2_form();
        let g = CosetVector::zero(&f);
        assert_eq!(count_congruence(&f, &g, zero_n(), 2, 1, DEFAULT_CEILING), Ok(4));
    }

    #[test]
    fn off_grid_offset_rejected() {
        let f = q2_form();
        // gamma = (1/2, 1/2, 0): Q(gamma) = 1/4, n = 0 is not admissible
        let g = CosetVector::from_i64_fracs(&f, &[(1, 2), (1, 2), (0, 1)]).unwrap();
        assert!(matches!(
            count_congruence(&f, &g, zero_n(), 2, 1, DEFAULT_CEILING),
            Err(LocalCountError::OffsetNotIntegral { .. })
        ));
    }

    #[test]
    fn ceiling_refusal() {
        let f = q2_form();
        let g = CosetVector::zero(&f);
        assert!(matches!(
            count_congruence(&f, &g, zero_n(), 2, 10, 1 << 26),
            Err(LocalCountError::CeilingExceeded { .. })
        ));
    }

    #[test]
    fn unramified_odd_primes_hensel_growth() {
        // p odd, p not dividing the discriminant, p not dividing n: every
        // solution mod p is nonsingular, so count(nu) = count(1) p^{2(nu-1)}
        let f = q2_form();
        let g = CosetVector::zero(&f);
        for p in [3u64, 5, 7] {
            let c1 =
                count_congruence(&f, &g, Rational64::from_integer(1), p, 1, DEFAULT_CEILING)
                    .unwrap();
            assert!(c1 > 0);
            for nu in 2..=3u32 {
                let c = count_congruence(&f, &g, Rational64::from_integer(1), p, nu, DEFAULT_CEILING)
                    .unwrap();
                assert_eq!(c as u128, c1 as u128 * (p as u128).pow(2 * (nu - 1)), "p = {p}, nu = {nu}");
            }
        }
    }

    #[test]
    fn fiber_bound() {
        let f = q2_tilde_form();
        let g = CosetVector::zero(&f);
        let counts = count_series(&f, &g, zero_n(), 2, 5, DEFAULT_CEILING).unwrap();
        for w in counts.windows(2) {
            assert!(w[1] <= 8 * w[0], "fiber bound violated: {w:?}");
        }
    }

    #[test]
    fn q2_local_limit_stabilizes_at_two() {
        let f = q2_form();
        let g = CosetVector::zero(&f);
        let seq = local_limit_sequence(&f, &g, zero_n(), 2, 8, DEFAULT_CEILING).unwrap();
        let (value, first) = stable_value(&seq).expect("stabilizes");
        assert_eq!(value, Rational64::from_integer(2));
        assert!(first <= 6, "stabilized only at nu = {first}");
    }

    #[test]
    fn q2_tilde_local_limit_stabilizes_at_two() {
        let f = q2_tilde_form();
        let g = CosetVector::zero(&f);
        let seq = local_limit_sequence(&f, &g, zero_n(), 2, 8, DEFAULT_CEILING).unwrap();
        let (value, _) = stable_value(&seq).expect("stabilizes");
        assert_eq!(value, Rational64::from_integer(2));
    }

    #[test]
    fn q2_plain_ratio_converges_without_stabilizing() {
        // the counts carry a subdominant term of size (2 sqrt 2)^nu, so the
        // raw density ratio approaches 2 but is never eventually constant
        let f = q2_form();
        let g = CosetVector::zero(&f);
        let seq = density_ratio_sequence(&f, &g, zero_n(), 2, 8, DEFAULT_CEILING).unwrap();
        assert_eq!(seq[4], Rational64::new(3, 2));
        assert_eq!(seq[8], Rational64::new(15, 8));
        assert_eq!(stable_value(&seq), None);
    }

    #[test]
    fn q2_generic_coset_density_is_one() {
        // gamma = (1/4, 1/2, 1/4): S gamma integral and Q(gamma) = 0
        let f = q2_form();
        let g = CosetVector::from_i64_fracs(&f, &[(1, 4), (1, 2), (1, 4)]).unwrap();
        let seq = density_ratio_sequence(&f, &g, zero_n(), 2, 7, DEFAULT_CEILING).unwrap();
        let (value, first) = stable_value(&seq).expect("stabilizes");
        assert_eq!(value, Rational64::from_integer(1));
        assert!(first <= 6);
        let lim = local_limit_sequence(&f, &g, zero_n(), 2, 7, DEFAULT_CEILING).unwrap();
        assert_eq!(stable_value(&lim).unwrap().0, Rational64::from_integer(1));
    }

    #[test]
    fn q2_half_coset_density_is_two() {
        // gamma = (1/2, 0, 1/2): Q(gamma) = 1, counts are exactly 2 * 4^nu
        // from nu = 2 on, so even the plain ratio stabilizes at 2
        let f = q2_form();
        let g = CosetVector::from_i64_fracs(&f, &[(1, 2), (0, 1), (1, 2)]).unwrap();
        let seq = density_ratio_sequence(&f, &g, zero_n(), 2, 6, DEFAULT_CEILING).unwrap();
        let (value, first) = stable_value(&seq).expect("stabilizes");
        assert_eq!(value, Rational64::from_integer(2));
        assert_eq!(first, 2);
    }

    #[test]
    fn stable_value_helper() {
        let seq: Vec<Rational64> = [1, 4, 2, 2, 2].iter().map(|&x| Rational64::from_integer(x)).collect();
        assert_eq!(stable_value(&seq), Some((Rational64::from_integer(2), 2)));
        let seq: Vec<Rational64> = [1, 4, 2].iter().map(|&x| Rational64::from_integer(x)).collect();
        assert_eq!(stable_value(&seq), None);
    }
}
