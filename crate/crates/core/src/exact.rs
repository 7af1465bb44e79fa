//! Exact scalars, Euler and derangement numbers, and polynomials in the
//! umbral symbol `E`.
//!
//! Everything here is exact. A polynomial in `E` is kept fully expanded;
//! [`umbral_eval`] replaces each `E^k` by the Euler number `E_k`, and is
//! never applied implicitly. Callers finish all polynomial algebra first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

/// Builds `num / den` as a [`Rational`].
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Commutative ring with exact division by nonzero rationals.
///
/// Implemented by [`Rational`] and by [`Poly`] over any `Ring`, so the
/// series machinery works over `Q`, `Q[E]` and `Q[E][q]` alike.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn from_rational(c: Rational) -> Self;
    /// The value as a rational, when it is a constant.
    fn constant(&self) -> Option<Rational>;
    fn describe(&self) -> String;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn from_rational(c: Rational) -> Self {
        c
    }
    fn constant(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn describe(&self) -> String {
        format_rational(self)
    }
}

/// Dense univariate polynomial with coefficients in a [`Ring`].
///
/// `coeffs[k]` is the coefficient of `x^k`; trailing zeros are never stored,
/// so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Polynomial in the umbral symbol `E` over the rationals.
pub type EulerPoly = Poly<Rational>;

impl<C: Ring> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant_poly(c: C) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = <Self as Ring>::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Exponents carrying a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
    }
}

impl<C: Ring> Ring for Poly<C> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Poly::new(vec![C::one()])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k).add_ref(&other.coeff(k))).collect())
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k).sub_ref(&other.coeff(k))).collect())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Poly::new(out)
    }
    fn neg_ref(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(Ring::neg_ref).collect() }
    }
    fn scale(&self, c: &Rational) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }
    fn from_rational(c: Rational) -> Self {
        Poly::new(vec![C::from_rational(c)])
    }
    fn constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Zero::zero()),
            1 => self.coeffs[0].constant(),
            _ => None,
        }
    }
    fn describe(&self) -> String {
        format!("{self:?}")
    }
}

impl<C: Ring> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        self.add_ref(rhs)
    }
}

impl<C: Ring> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        self.sub_ref(rhs)
    }
}

impl<C: Ring> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        self.mul_ref(rhs)
    }
}

impl<C: Ring> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Poly<C>) -> Poly<C> {
        self.add_ref(&rhs)
    }
}

impl<C: Ring> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Poly<C>) -> Poly<C> {
        self.sub_ref(&rhs)
    }
}

impl<C: Ring> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        self.mul_ref(&rhs)
    }
}

impl<C: Ring> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_ref()
    }
}

impl EulerPoly {
    /// The umbral symbol `E`.
    pub fn e() -> Self {
        Self::x()
    }

    /// Polynomial from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `E^2 + c` (used for the staircase and square factors).
    pub fn e_squared_plus(c: i64) -> Self {
        Self::from_ints(&[c, 0, 1])
    }

    /// True when every exponent with nonzero coefficient is congruent to
    /// `parity` mod 2.
    pub fn has_parity(&self, parity: usize) -> bool {
        self.support().all(|k| k % 2 == parity % 2)
    }

    /// Exact division by `divisor`; `None` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &EulerPoly) -> Option<EulerPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Euclidean division over `Q`.
    pub fn div_rem(&self, divisor: &EulerPoly) -> (EulerPoly, EulerPoly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![<Rational as Zero>::zero(); rem.len().saturating_sub(d).max(1)];
        while rem.len() > d {
            let top = rem.len() - 1;
            let c = &rem[top] / &lead;
            if !Zero::is_zero(&c) {
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    rem[top - d + i] -= &c * b;
                }
                quot[top - d] = c;
            }
            rem.pop();
        }
        (Poly::new(quot), Poly::new(rem))
    }
}

impl<C: Ring> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({})x^{k}", c.describe()))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Display for EulerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if Zero::is_zero(c) {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = abs.is_one();
            match k {
                0 => write!(f, "{}", format_rational(&abs))?,
                _ => {
                    if !unit {
                        write!(f, "{}*", format_rational(&abs))?;
                    }
                    if k == 1 {
                        write!(f, "E")?;
                    } else {
                        write!(f, "E^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Euler numbers `E_0..=E_{n_max}` (`sec x + tan x = sum E_n x^n / n!`).
///
/// Computed by the boustrophedon triangle; debug builds also compare the
/// result against the series expansion of `sec x + tan x`.
pub fn euler_numbers(n_max: usize) -> Vec<BigInt> {
    let out = boustrophedon(n_max);
    debug_assert_eq!(out, crate::useries::euler_numbers_from_series(n_max));
    out
}

/// Seidel–Entringer–Arnold triangle: `T(n,0) = 0`, `T(n,k) = T(n,k-1) +
/// T(n-1,n-k)`, `E_n = T(n,n)`. Integer additions only.
pub(crate) fn boustrophedon(n_max: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut prev = vec![BigInt::one()];
    out.push(BigInt::one());
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n + 1);
        row.push(BigInt::zero());
        for k in 1..=n {
            let v = &row[k - 1] + &prev[n - k];
            row.push(v);
        }
        out.push(row[n].clone());
        prev = row;
    }
    out
}

fn euler_cache() -> &'static Mutex<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(boustrophedon(64)))
}

/// `E_n`, from a shared table that grows on demand.
pub fn euler_number(n: usize) -> BigInt {
    let mut table = euler_cache().lock().unwrap_or_else(|e| e.into_inner());
    if n >= table.len() {
        *table = boustrophedon((2 * n).max(64));
    }
    table[n].clone()
}

/// `E_n` as a rational.
pub fn euler_rational(n: usize) -> Rational {
    Rational::from_integer(euler_number(n))
}

/// Derangement numbers `D_0..=D_{n_max}` via `D_n = n D_{n-1} + (-1)^n`.
pub fn derangement_numbers(n_max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for n in 1..=n_max {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let next = &out[n - 1] * BigInt::from(n) + BigInt::from(sign);
        out.push(next);
    }
    out
}

/// Replaces each `E^k` by `E_k` and sums.
pub fn umbral_eval(p: &EulerPoly) -> Rational {
    p.coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !Zero::is_zero(*c))
        .map(|(k, c)| c * euler_rational(k))
        .fold(<Rational as Zero>::zero(), |acc, x| acc + x)
}

/// Multiplies the coefficient of `E^l` by `(-1)^((n-l)/2)`.
///
/// Turns `f[E,0,E,0,...]` into `f[E,0,-E,0,...]` for `f` of degree `n` in
/// the odd power sums. Panics if an exponent has the wrong parity.
pub fn alternate_odd_signs(p: &EulerPoly, n: usize) -> EulerPoly {
    Poly::new(
        p.coeffs
            .iter()
            .enumerate()
            .map(|(l, c)| {
                if Zero::is_zero(c) {
                    return c.clone();
                }
                assert!(l <= n && (n - l).is_multiple_of(2), "exponent {l} has the wrong parity for degree {n}");
                if ((n - l) / 2) % 2 == 1 {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect(),
    )
}

/// Converts a rational known to be an integer; `None` otherwise.
pub fn to_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

/// Converts a rational to `f64` (lossy).
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
