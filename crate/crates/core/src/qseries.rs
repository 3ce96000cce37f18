//! Exact truncated power-series arithmetic on the eighth-integer exponent
//! grid, plus the theta-series and eta-quotient constructors used by the
//! verification identities.
//!
//! A [`QSeries`] stores exact rational coefficients indexed by an integer
//! `k` standing for `q^(k/8)`. Every exponent that occurs in the
//! identities (n, n/2, n/4, n/8, (8n+7)/8 after clearing) is a multiple
//! of 1/8, so a single integer index suffices. Truncation is pessimistic:
//! arithmetic carries `trunc = min` of the operand truncations and an
//! operation never reports a coefficient that could be polluted by
//! unknown tails.

use num_rational::Rational64;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum QSeriesError {
    #[error("series has support on fractional exponents (index {index} not divisible by 8)")]
    FractionalSupport { index: i64 },
    #[error("Gram matrix is not positive definite (leading principal minor {minor} of order {order})")]
    NotPositiveDefinite { order: usize, minor: i64 },
    #[error("coset exponents do not land on the eighth-integer grid")]
    CosetOffGrid,
    #[error("eta prefactor exponent {num}/24 does not land on the eighth-integer grid")]
    PrefactorOffGrid { num: i64 },
    #[error("eta quotient has negative leading exponent {num}/24")]
    NegativeLeadingExponent { num: i64 },
    #[error("gram matrix must be symmetric with even diagonal")]
    BadGramMatrix,
    #[error("coset vector gamma is not in S^-1 Z^e")]
    BadCoset,
}

/// Truncated formal q-expansion on the eighth-integer exponent grid.
///
/// Coefficient of `q^(k/8)` is `coeffs[&k]`; absent indices below `trunc`
/// are zero; indices at or above `trunc` are unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: BTreeMap<i64, Rational64>,
    trunc: i64,
}

impl QSeries {
    pub fn zero(trunc: i64) -> Self {
        QSeries { coeffs: BTreeMap::new(), trunc }
    }

    pub fn one(trunc: i64) -> Self {
        let mut s = Self::zero(trunc);
        s.set(0, Rational64::one());
        s
    }

    /// Series with a single term `c * q^(k/8)`.
    pub fn monomial(k: i64, c: Rational64, trunc: i64) -> Self {
        let mut s = Self::zero(trunc);
        s.set(k, c);
        s
    }

    /// Build from integer-exponent coefficients `c[n]` of `q^n`.
    pub fn from_integer_coeffs(coeffs: &[Rational64]) -> Self {
        let mut s = Self::zero(8 * coeffs.len() as i64);
        for (n, &c) in coeffs.iter().enumerate() {
            s.set(8 * n as i64, c);
        }
        s
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// Coefficient of `q^(k/8)`. Panics when the index is at or beyond the
    /// truncation (the value would be unknown, not zero).
    pub fn coeff(&self, k: i64) -> Rational64 {
        assert!(k < self.trunc, "coefficient index {k} is beyond truncation {}", self.trunc);
        if k < 0 {
            return Rational64::zero();
        }
        self.coeffs.get(&k).copied().unwrap_or_else(Rational64::zero)
    }

    /// Coefficient of the integer power `q^n`.
    pub fn coeff_int(&self, n: i64) -> Rational64 {
        self.coeff(8 * n)
    }

    pub fn set(&mut self, k: i64, c: Rational64) {
        assert!((0..self.trunc).contains(&k), "index {k} outside [0, {})", self.trunc);
        if c.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, c);
        }
    }

    pub fn support(&self) -> impl Iterator<Item = (i64, Rational64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let trunc = self.trunc.min(other.trunc);
        let mut out = QSeries::zero(trunc);
        for (&k, &c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if k < trunc {
                let v = out.coeff(k) + c;
                out.set(k, v);
            }
        }
        out
    }

    pub fn scale(&self, c: Rational64) -> QSeries {
        let mut out = QSeries::zero(self.trunc);
        if c.is_zero() {
            return out;
        }
        for (&k, &v) in &self.coeffs {
            out.set(k, v * c);
        }
        out
    }

    pub fn neg(&self) -> QSeries {
        self.scale(-Rational64::one())
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    /// Cauchy product; every reported coefficient is exact.
    pub fn multiply(&self, other: &QSeries) -> QSeries {
        let trunc = self.trunc.min(other.trunc);
        let mut acc: BTreeMap<i64, Rational64> = BTreeMap::new();
        for (&ka, &ca) in &self.coeffs {
            if ka >= trunc {
                break;
            }
            for (&kb, &cb) in &other.coeffs {
                let k = ka + kb;
                if k >= trunc {
                    break;
                }
                *acc.entry(k).or_insert_with(Rational64::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        QSeries { coeffs: acc, trunc }
    }

    /// Substitution tau -> m tau: index `k` moves to `m k`, truncation
    /// scales by `m`.
    pub fn rescale_exponents(&self, m: i64) -> QSeries {
        assert!(m >= 1);
        let mut out = QSeries::zero(self.trunc * m);
        for (&k, &c) in &self.coeffs {
            out.set(k * m, c);
        }
        out
    }

    /// Multiply the coefficient of each integer exponent n by (-1)^n.
    /// Rejects series with fractional-exponent support.
    pub fn alternate_signs(&self) -> Result<QSeries, QSeriesError> {
        let mut out = QSeries::zero(self.trunc);
        for (&k, &c) in &self.coeffs {
            if k % 8 != 0 {
                return Err(QSeriesError::FractionalSupport { index: k });
            }
            let n = k / 8;
            out.set(k, if n % 2 == 0 { c } else { -c });
        }
        Ok(out)
    }

    /// Multiply by `q^(s/8)` for `s >= 0`; truncation shifts with the
    /// exponents so no information is invented.
    pub fn shift(&self, s: i64) -> QSeries {
        assert!(s >= 0);
        let mut out = QSeries::zero(self.trunc + s);
        for (&k, &c) in &self.coeffs {
            out.set(k + s, c);
        }
        out
    }

    /// Inverse of a series with constant term 1.
    pub fn invert_unit(&self) -> QSeries {
        assert!(self.coeff(0).is_one(), "invert_unit requires constant term 1");
        let t = self.trunc.max(1) as usize;
        let mut inv = vec![Rational64::zero(); t];
        inv[0] = Rational64::one();
        let tail: Vec<(i64, Rational64)> =
            self.coeffs.iter().filter(|(&k, _)| k > 0).map(|(&k, &c)| (k, c)).collect();
        for k in 1..t as i64 {
            let mut s = Rational64::zero();
            for &(j, c) in &tail {
                if j > k {
                    break;
                }
                s += c * inv[(k - j) as usize];
            }
            if !s.is_zero() {
                inv[k as usize] = -s;
            }
        }
        let mut out = QSeries::zero(self.trunc);
        for (k, c) in inv.into_iter().enumerate() {
            if !c.is_zero() {
                out.set(k as i64, c);
            }
        }
        out
    }

    /// Quotient `self / den` for a denominator with constant term 1,
    /// solved coefficient by coefficient. Unlike `invert_unit` followed by
    /// `multiply`, intermediate values never exceed the quotient's own
    /// coefficients times the denominator's, which matters when the
    /// denominator's inverse has huge coefficients but the quotient does
    /// not (eta quotients that are honest modular forms).
    pub fn div_unit(&self, den: &QSeries) -> QSeries {
        assert!(den.coeff(0).is_one(), "div_unit requires denominator constant term 1");
        let t = self.trunc.min(den.trunc).max(1) as usize;
        let mut out = vec![Rational64::zero(); t];
        let tail: Vec<(i64, Rational64)> =
            den.coeffs.iter().filter(|(&k, _)| k > 0).map(|(&k, &c)| (k, c)).collect();
        for k in 0..t as i64 {
            let mut s = self.coeff(k);
            for &(j, c) in &tail {
                if j > k {
                    break;
                }
                s -= c * out[(k - j) as usize];
            }
            out[k as usize] = s;
        }
        let mut q = QSeries::zero(t as i64);
        for (k, c) in out.into_iter().enumerate() {
            if !c.is_zero() {
                q.set(k as i64, c);
            }
        }
        q
    }

    pub fn pow(&self, e: u32) -> QSeries {
        let mut out = QSeries::one(self.trunc);
        for _ in 0..e {
            out = out.multiply(self);
        }
        out
    }
}

/// Integral quadratic form `Q(x) = x^T S x / 2` given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramForm {
    dim: usize,
    gram: Vec<Vec<i64>>,
}

impl GramForm {
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self, QSeriesError> {
        let dim = gram.len();
        for (i, row) in gram.iter().enumerate() {
            if row.len() != dim || row[i] % 2 != 0 {
                return Err(QSeriesError::BadGramMatrix);
            }
            for j in 0..dim {
                if gram[i][j] != gram[j][i] {
                    return Err(QSeriesError::BadGramMatrix);
                }
            }
        }
        Ok(GramForm { dim, gram })
    }

    pub fn diagonal(diag: &[i64]) -> Result<Self, QSeriesError> {
        let dim = diag.len();
        let mut gram = vec![vec![0i64; dim]; dim];
        for (i, &d) in diag.iter().enumerate() {
            gram[i][i] = d;
        }
        Self::new(gram)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// `Q(x) = x^T S x / 2` on a rational vector.
    pub fn q_of(&self, x: &[Rational64]) -> Rational64 {
        assert_eq!(x.len(), self.dim);
        let mut s = Rational64::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                s += x[i] * x[j] * Rational64::from_integer(self.gram[i][j]);
            }
        }
        s / 2
    }

    /// Leading principal minors, by exact integer cofactor expansion
    /// (dimensions here are tiny).
    fn leading_minors(&self) -> Vec<i64> {
        (1..=self.dim)
            .map(|k| {
                let sub: Vec<Vec<i64>> =
                    self.gram[..k].iter().map(|r| r[..k].to_vec()).collect();
                det(&sub)
            })
            .collect()
    }

    pub fn check_positive_definite(&self) -> Result<(), QSeriesError> {
        for (i, &m) in self.leading_minors().iter().enumerate() {
            if m <= 0 {
                return Err(QSeriesError::NotPositiveDefinite { order: i + 1, minor: m });
            }
        }
        Ok(())
    }
}

fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut s = 0i64;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter_map(|(c, &v)| (c != j).then_some(v))
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        s += sign * m[0][j] * det(&minor);
    }
    s
}

/// A rational coset `gamma + Z^e` of the discriminant group grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetVector {
    coords: Vec<Rational64>,
}

impl CosetVector {
    /// Checks the invariant `S gamma` integral.
    pub fn new(form: &GramForm, coords: Vec<Rational64>) -> Result<Self, QSeriesError> {
        if coords.len() != form.dim() {
            return Err(QSeriesError::BadCoset);
        }
        for i in 0..form.dim() {
            let mut s = Rational64::zero();
            for j in 0..form.dim() {
                s += Rational64::from_integer(form.gram()[i][j]) * coords[j];
            }
            if !s.is_integer() {
                return Err(QSeriesError::BadCoset);
            }
        }
        Ok(CosetVector { coords })
    }

    pub fn zero(form: &GramForm) -> Self {
        CosetVector { coords: vec![Rational64::zero(); form.dim()] }
    }

    pub fn from_i64_fracs(form: &GramForm, fracs: &[(i64, i64)]) -> Result<Self, QSeriesError> {
        Self::new(form, fracs.iter().map(|&(n, d)| Rational64::new(n, d)).collect())
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.coords
    }

    pub fn neg(&self) -> CosetVector {
        CosetVector { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

/// Theta series of a positive-definite form over the coset `gamma + Z^e`:
/// `sum q^{Q(lambda)}` over `Q(lambda) < T/8`.
///
/// Enumeration goes through an exact rational LDL decomposition of the
/// Gram matrix and nested interval bounds, so no floating point enters.
pub fn theta_coset(
    form: &GramForm,
    gamma: &CosetVector,
    trunc: i64,
) -> Result<QSeries, QSeriesError> {
    form.check_positive_definite()?;
    // exponents must land on the eighth grid: 8 Q(gamma) integral suffices
    // since Q(gamma + v) - Q(gamma) is an integer multiple of 1/1 shifts
    // by v^T S gamma + Q(v), both integral for S gamma integral.
    let q_gamma = form.q_of(gamma.coords());
    if !(q_gamma * 8).is_integer() {
        return Err(QSeriesError::CosetOffGrid);
    }

    let e = form.dim();
    // LDL: x^T S x = sum_i d[i] * (x_i + sum_{j>i} u[i][j] x_j)^2
    let mut a: Vec<Vec<Rational64>> = form
        .gram()
        .iter()
        .map(|r| r.iter().map(|&v| Rational64::from_integer(v)).collect())
        .collect();
    let mut d = vec![Rational64::zero(); e];
    let mut u = vec![vec![Rational64::zero(); e]; e];
    for i in 0..e {
        d[i] = a[i][i];
        for j in (i + 1)..e {
            u[i][j] = a[i][j] / d[i];
        }
        for j in (i + 1)..e {
            for k in (i + 1)..e {
                let delta = d[i] * u[i][j] * u[i][k];
                a[j][k] -= delta;
            }
        }
    }

    let bound = Rational64::new(trunc, 8); // Q(lambda) < trunc/8
    let mut out = QSeries::zero(trunc);
    let mut y = vec![Rational64::zero(); e];
    enumerate_theta(form, gamma, &d, &u, bound, e, &mut y, Rational64::zero(), &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_theta(
    form: &GramForm,
    gamma: &CosetVector,
    d: &[Rational64],
    u: &[Vec<Rational64>],
    bound: Rational64,
    level: usize,
    y: &mut Vec<Rational64>,
    partial: Rational64, // sum of completed square terms / 2 so far
    out: &mut QSeries,
) {
    if level == 0 {
        let q = form.q_of(y);
        debug_assert!(q < bound);
        let idx = q * 8;
        debug_assert!(idx.is_integer());
        let k = idx.to_integer();
        let c = out.coeff(k) + 1;
        out.set(k, c);
        return;
    }
    let i = level - 1;
    // term_i = d[i]/2 * (y_i - c_i)^2 with c_i = -sum_{j>i} u[i][j] y_j
    let mut center = Rational64::zero();
    for j in level..form.dim() {
        center -= u[i][j] * y[j];
    }
    let budget = bound - partial; // term_i < budget required (strict: Q < bound)
    if budget <= Rational64::zero() {
        return;
    }
    // (y_i - c_i)^2 < 2 budget / d[i]
    let r2 = budget * 2 / d[i];
    let gamma_i = gamma.coords()[i];
    let w = center - gamma_i; // valid integers t cluster around w
    let t0 = w.floor().to_integer();
    for dir in [0i64, 1] {
        let mut t = t0 + dir;
        loop {
            let yi = gamma_i + Rational64::from_integer(t);
            let dev = yi - center;
            if dev * dev >= r2 {
                break;
            }
            y[i] = yi;
            let term = d[i] * dev * dev / 2;
            enumerate_theta(form, gamma, d, u, bound, i, y, partial + term, out);
            t += if dir == 0 { -1 } else { 1 };
        }
    }
    y[i] = Rational64::zero();
}

/// Expansion of a product of eta factors `prod_m eta(m tau)^{r_m}` without
/// analytic content: each `eta(m tau)` is `q^(m/24)` times the pentagonal
/// number expansion of `prod (1 - q^{mn})`, and negative exponents invert
/// the unit series by truncated recursion.
pub fn eta_quotient(factors: &[(u64, i64)], trunc: i64) -> Result<QSeries, QSeriesError> {
    let sum_mr: i64 = factors.iter().map(|&(m, r)| m as i64 * r).sum();
    if sum_mr % 3 != 0 {
        return Err(QSeriesError::PrefactorOffGrid { num: sum_mr });
    }
    let shift = sum_mr / 3; // index units of 1/8: 8 * sum_mr / 24
    if shift < 0 {
        return Err(QSeriesError::NegativeLeadingExponent { num: sum_mr });
    }
    // build the unit part to (trunc - shift) and shift at the end
    let unit_trunc = trunc - shift;
    if unit_trunc <= 0 {
        return Ok(QSeries::zero(trunc));
    }
    // accumulate numerator and denominator separately and divide once, so
    // intermediate coefficients stay comparable to the quotient itself
    let mut num = QSeries::one(unit_trunc);
    let mut den = QSeries::one(unit_trunc);
    for &(m, r) in factors {
        if r == 0 {
            continue;
        }
        let base = pentagonal_product(m, unit_trunc).pow(r.unsigned_abs() as u32);
        if r > 0 {
            num = num.multiply(&base);
        } else {
            den = den.multiply(&base);
        }
    }
    Ok(num.div_unit(&den).shift(shift))
}

/// `prod_{n>=1} (1 - q^{mn})` via the pentagonal number theorem.
fn pentagonal_product(m: u64, trunc: i64) -> QSeries {
    let mut s = QSeries::zero(trunc);
    let m = m as i64;
    let mut k = 0i64;
    loop {
        // generalized pentagonal exponents k(3k-1)/2 for k = 0, 1, -1, 2, -2, ...
        let mut hit = false;
        let signs: &[i64] = if k == 0 { &[k] } else { &[k, -k] };
        for &kk in signs {
            let pent = kk * (3 * kk - 1) / 2;
            let idx = 8 * m * pent;
            if idx < trunc {
                hit = true;
                let sign = if kk.rem_euclid(2) == 0 { 1 } else { -1 };
                let c = s.coeff(idx) + Rational64::from_integer(sign);
                s.set(idx, c);
            }
        }
        if !hit && k > 0 {
            break;
        }
        k += 1;
    }
    s
}

/// Quasimodular Eisenstein series `E_2 = 1 - 24 sum sigma_1(n) q^n` up to
/// integer order `trunc/8`.
pub fn e2_level1(trunc: i64) -> QSeries {
    let nmax = if trunc > 0 { (trunc - 1) / 8 } else { 0 };
    let sig = crate::arith::sigma1_table(nmax as u64);
    let mut s = QSeries::zero(trunc);
    s.set(0, Rational64::one());
    for n in 1..=nmax {
        s.set(8 * n, Rational64::from_integer(-24 * sig[n as usize]));
    }
    s
}

/// The classical theta series `Theta = sum q^{n^2}` up to `trunc/8`.
pub fn theta_classical(trunc: i64) -> QSeries {
    let mut s = QSeries::zero(trunc);
    let mut n = 0i64;
    while 8 * n * n < trunc {
        let c = s.coeff(8 * n * n) + if n == 0 { 1 } else { 2 };
        s.set(8 * n * n, c);
        n += 1;
    }
    s
}
