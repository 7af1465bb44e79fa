//! Counting formulas. Each count is computed by one primary route and, where
//! one exists, re-derived by independent routes recorded as cross-checks.
//!
//! Umbral evaluation is always the final step: polynomials in `E` are
//! multiplied out completely before `E^k -> E_k` is applied.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{
    alternate_odd_signs, derangement_numbers, euler_rational, int, rat, to_f64, to_integer, umbral_eval, EulerPoly,
    Rational, Ring,
};
use crate::perms::{multiset_shape, partitions, tau_shape, Composition, DoubleVariant, Partition, SkewShape};
use crate::symfunc::{self, divisors, gr_L, inner_product, mobius, skew_schur_in_p, substitute, z_of, Pattern, SymP};
use crate::useries::{
    arctan_t, lift_q, one_plus_over_one_minus, substitute_qt, umbral_coefficients, umbral_q_coefficients, ESeries,
    Parity, QESeries, RSeries,
};

/// A computed quantity together with the routes that confirm it.
#[derive(Clone, Debug, PartialEq)]
pub struct CountReport {
    pub n: usize,
    pub value: Rational,
    pub route: String,
    pub crosschecks: Vec<(String, Rational)>,
    /// Pre-umbral polynomial of the primary route, when it has one.
    pub polynomial: Option<EulerPoly>,
}

impl CountReport {
    fn new(n: usize, value: Rational, route: &str) -> Self {
        CountReport { n, value, route: route.to_string(), crosschecks: Vec::new(), polynomial: None }
    }

    fn check(mut self, route: &str, value: Rational) -> Self {
        self.crosschecks.push((route.to_string(), value));
        self
    }

    fn with_polynomial(mut self, p: EulerPoly) -> Self {
        self.polynomial = Some(p);
        self
    }

    /// True when every cross-check equals `value`.
    pub fn consistent(&self) -> bool {
        self.crosschecks.iter().all(|(_, v)| v == &self.value)
    }

    pub fn integer(&self) -> Option<BigInt> {
        to_integer(&self.value)
    }
}

fn e_poly() -> EulerPoly {
    EulerPoly::e()
}

fn inv_big(x: impl Into<BigInt>) -> Rational {
    Rational::new(BigInt::from(1), x.into())
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

/// `exp(c * arctan t)`.
fn exp_arctan(c: &EulerPoly, order: usize) -> Result<ESeries> {
    arctan_t::<EulerPoly>(order).mul_scalar(c).exp()
}

/// `1 + t^2`.
fn one_plus_t2(order: usize) -> ESeries {
    ESeries::from_rationals(vec![int(1), int(0), int(1)], order)
}

/// `(1 + t^2) / (1 - t^2)`.
fn ratio_t2(order: usize) -> ESeries {
    one_plus_over_one_minus(order).compose_power(2, order)
}

// ---------------------------------------------------------------------------
// Doubly alternating permutations

/// `L(t) = (1/2) log((1+t)/(1-t)) = t + t^3/3 + t^5/5 + ...`
fn half_log_ratio(order: usize) -> RSeries {
    let coeffs = (0..=order).map(|k| if k % 2 == 1 { rat(1, k as i64) } else { int(0) }).collect();
    RSeries::new(coeffs, order)
}

/// Coefficients `0..=order` of `sum_n f(n) t^n` (or of `f*` when `mixed`,
/// i.e. when exactly one of `w`, `w^-1` is reverse alternating).
pub fn doubly_alternating_series(order: usize, mixed: bool) -> Result<Vec<Rational>> {
    let l = half_log_ratio(order);
    let mut power = RSeries::one(order);
    let mut fact = int(1);
    let mut odd = RSeries::zero(order);
    let mut even = RSeries::zero(order);
    for j in 0..=order {
        if j > 0 {
            power = power.mul(&l);
            fact *= int(j as i64);
        }
        let e = euler_rational(j);
        let term = power.scale(&(&e * &e / &fact));
        if j % 2 == 1 {
            odd = odd.add(&term);
        } else {
            even = even.add(&term);
        }
    }
    let one_minus_t2 = RSeries::new(vec![int(1), int(0), int(-1)], order);
    let factor = if mixed { one_minus_t2.sqrt()? } else { one_minus_t2.pow(&rat(-1, 2))? };
    Ok(odd.add(&even.mul(&factor)).coeffs().to_vec())
}

/// `sum_mu z_mu^{-1} chi(mu) chi'(mu)` with the closed-form ribbon characters.
fn doubly_partition_sum(n: usize, mixed: bool) -> Rational {
    let mut total = int(0);
    for mu in partitions(n) {
        let odd = mu.parts().iter().filter(|&&p| p % 2 == 1).count();
        let even = mu.len() - odd;
        if n % 2 == 1 && even > 0 {
            continue;
        }
        let e = euler_rational(odd);
        let s = int(sign(mixed && even % 2 == 1));
        total += e.clone() * e * s / Rational::from_integer(z_of(&mu));
    }
    total
}

/// Number of `w` in `S_n` with `w` and `w^-1` of the given zigzag types.
pub fn doubly_alternating(n: usize, variant: DoubleVariant) -> Result<CountReport> {
    if n == 0 {
        return Err(Error::Argument("n must be at least 1".into()));
    }
    let (rw, rinv) = variant.flags();
    let mixed = rw != rinv;
    let ip = inner_product(&skew_schur_in_p(&tau_shape(n, rw)), &skew_schur_in_p(&tau_shape(n, rinv)))?;
    let series = doubly_alternating_series(n, mixed)?.swap_remove(n);
    Ok(CountReport::new(n, ip, "inner_product")
        .check("partition_sum", doubly_partition_sum(n, mixed))
        .check("series", series))
}

// ---------------------------------------------------------------------------
// Shapes

/// Pre-umbral polynomial `s_shape[pattern]`.
pub fn umbral_poly_shape(shape: &SkewShape, pat: &Pattern) -> EulerPoly {
    substitute(&skew_schur_in_p(shape), pat)
}

/// Multiplicity of `factor` in `poly` (0 if it does not divide).
pub fn factor_multiplicity(poly: &EulerPoly, factor: &EulerPoly) -> usize {
    if poly.is_zero() {
        return 0;
    }
    let mut count = 0;
    let mut rest = poly.clone();
    while let Some(q) = rest.div_exact(factor) {
        count += 1;
        rest = q;
    }
    count
}

/// Multiplicities of the candidate factors `E` and `E^2 + j^2`, `j <= j_max`,
/// listing only those that divide.
pub fn factor_probe(poly: &EulerPoly, j_max: usize) -> Vec<(EulerPoly, usize)> {
    std::iter::once(e_poly())
        .chain((1..=j_max).map(|j| EulerPoly::e_squared_plus((j * j) as i64)))
        .map(|f| {
            let m = factor_multiplicity(poly, &f);
            (f, m)
        })
        .filter(|(_, m)| *m > 0)
        .collect()
}

/// Number of alternating (or reverse alternating) standard tableaux of a
/// skew shape.
pub fn alt_shape(shape: &SkewShape, reverse: bool) -> Result<CountReport> {
    let n = shape.size();
    if n == 0 {
        return Err(Error::Argument("shape must be nonempty".into()));
    }
    let poly = umbral_poly_shape(shape, &Pattern::for_size(n, reverse));
    Ok(CountReport::new(n, umbral_eval(&poly), "schur_substitution").with_polynomial(poly))
}

/// `E^k prod_{j=1}^{m-2} (E^2 + j^2)^{e_j} / H_{delta_m}`.
pub fn staircase_polynomial(m: usize) -> Result<EulerPoly> {
    if m < 2 {
        return Err(Error::Argument("staircase needs m >= 2".into()));
    }
    let k = m / 2;
    let mut poly = e_poly().pow(k as u32);
    for j in 1..=m - 2 {
        let exponent = if m.is_multiple_of(2) { k - j.div_ceil(2) } else { k - j / 2 };
        poly = poly.mul_ref(&EulerPoly::e_squared_plus((j * j) as i64).pow(exponent as u32));
    }
    Ok(poly.scale(&inv_big(Partition::staircase(m).hook_product())))
}

/// Alternating tableaux of the staircase `(m-1, ..., 1)`.
pub fn staircase(m: usize) -> Result<CountReport> {
    let poly = staircase_polynomial(m)?;
    let shape = SkewShape::straight(Partition::staircase(m));
    let mut report = CountReport::new(shape.size(), umbral_eval(&poly), "staircase_product");
    if shape.size() <= 21 {
        report = report.check("schur_substitution", alt_shape(&shape, false)?.value);
    }
    Ok(report.with_polynomial(poly))
}

/// Determinant of a square matrix over `Q[E]` by Laplace expansion with
/// memoized minors.
pub fn poly_determinant(m: &[Vec<EulerPoly>]) -> EulerPoly {
    fn minor(m: &[Vec<EulerPoly>], row: usize, mask: u32, memo: &mut HashMap<u32, EulerPoly>) -> EulerPoly {
        if row == m.len() {
            return EulerPoly::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let mut acc = EulerPoly::zero();
        let mut position = 0;
        for col in 0..m.len() {
            if mask & (1 << col) == 0 {
                continue;
            }
            if !m[row][col].is_zero() {
                let term = m[row][col].mul_ref(&minor(m, row + 1, mask & !(1 << col), memo));
                acc = if position % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
            }
            position += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    assert!(m.len() < 32 && m.iter().all(|r| r.len() == m.len()), "square matrix of size < 32 expected");
    minor(m, 0, (1u32 << m.len()) - 1, &mut HashMap::new())
}

/// `det(a_{p-i+j}(E))` with `a_n` the coefficients of
/// `((1+t)/(1-t))^{E/2}`, converted to the alternating sign pattern.
pub fn square_determinant(p: usize) -> Result<EulerPoly> {
    if p == 0 {
        return Err(Error::Argument("p must be at least 1".into()));
    }
    let a = one_plus_over_one_minus(2 * p - 1).pow(&e_poly().scale(&rat(1, 2)))?;
    let matrix: Vec<Vec<EulerPoly>> = (0..p).map(|i| (0..p).map(|j| a.coeff(p - i + j).clone()).collect()).collect();
    Ok(alternate_odd_signs(&poly_determinant(&matrix), p * p))
}

/// Alternating tableaux of the `p x p` square, `p` odd.
pub fn square(p: usize) -> Result<CountReport> {
    if p == 0 || p.is_multiple_of(2) {
        return Err(Error::Argument(format!("square needs odd p, got {p}")));
    }
    let mut poly = e_poly().pow(p as u32);
    for i in 1..p {
        poly = poly.mul_ref(&EulerPoly::e_squared_plus((4 * i * i) as i64).pow((p - i) as u32));
    }
    let poly = poly.scale(&inv_big(Partition::rectangle(p, p).hook_product()));
    let n = p * p;
    let mut report = CountReport::new(n, umbral_eval(&poly), "hook_product")
        .check("determinant", umbral_eval(&square_determinant(p)?));
    if n <= 9 {
        report = report.check("schur_substitution", alt_shape(&SkewShape::straight(Partition::rectangle(p, p)), false)?.value);
    }
    Ok(report.with_polynomial(poly))
}

// ---------------------------------------------------------------------------
// Cycle type

/// Alternating (or reverse alternating) permutations of cycle type `rho`.
pub fn b_cycle_type(rho: &Partition, reverse: bool) -> Result<CountReport> {
    let n = rho.size();
    if n == 0 {
        return Err(Error::Argument("cycle type must be nonempty".into()));
    }
    let l = gr_L(rho);
    let poly = substitute(&l, &Pattern::for_size(n, reverse));
    let ip = inner_product(&l, &skew_schur_in_p(&tau_shape(n, reverse)))?;
    Ok(CountReport::new(n, umbral_eval(&poly), "lyndon_substitution").check("inner_product", ip).with_polynomial(poly))
}

/// Divisor-sum closed form for `n`-cycles.
pub fn b_ncycle_closed(n: usize, reverse: bool) -> Result<CountReport> {
    if n == 0 {
        return Err(Error::Argument("n must be at least 1".into()));
    }
    let odd_part = n >> n.trailing_zeros();
    let value = if n == 2 {
        int(if reverse { 0 } else { 1 })
    } else if n % 2 == 1 {
        divisors(n)
            .into_iter()
            .map(|d| int(mobius(d) * sign(((d - 1) / 2) % 2 == 1)) * euler_rational(n / d))
            .fold(int(0), |a, b| a + b)
            / int(n as i64)
    } else if odd_part >= 3 {
        divisors(odd_part)
            .into_iter()
            .map(|d| int(mobius(d)) * euler_rational(n / d))
            .fold(int(0), |a, b| a + b)
            / int(n as i64)
    } else {
        (euler_rational(n) - int(1)) / int(n as i64)
    };
    Ok(CountReport::new(n, value, "divisor_sum").check("lyndon_substitution", b_cycle_type(&Partition::rectangle(n, 1), reverse)?.value))
}

/// `F_m(t) = sum_r b(<m^r>) t^r` (or `F*_m`) before umbral evaluation.
pub fn fm_generating_function(m: usize, order: usize, reverse: bool) -> Result<ESeries> {
    if m == 0 {
        return Err(Error::Argument("m must be at least 1".into()));
    }
    let e = e_poly();
    if m == 1 {
        let x = arctan_t::<EulerPoly>(order).mul_scalar(&e);
        let root = one_plus_t2(order).sqrt()?;
        let c = x.cosh()?;
        let even = if reverse { c.mul(&root) } else { c.div(&root)? };
        return Ok(x.sinh()?.add(&even));
    }
    if m % 2 == 1 {
        let exponent = divisors(m)
            .into_iter()
            .map(|d| e.pow((m / d) as u32).scale(&int(mobius(d) * sign(((d - 1) / 2) % 2 == 1))))
            .fold(EulerPoly::zero(), |a, b| a.add_ref(&b))
            .scale(&rat(1, m as i64));
        return exp_arctan(&exponent, order);
    }
    let ratio = one_plus_over_one_minus(order);
    if m == 2 {
        let f = ratio.pow(&EulerPoly::e_squared_plus(1).scale(&rat(1, 4)))?;
        return if reverse { f.div(&ESeries::from_rationals(vec![int(1), int(1)], order)) } else { Ok(f) };
    }
    let odd_part = m >> m.trailing_zeros();
    let exponent = if odd_part >= 3 {
        divisors(odd_part)
            .into_iter()
            .map(|d| e.pow((m / d) as u32).scale(&int(mobius(d))))
            .fold(EulerPoly::zero(), |a, b| a.add_ref(&b))
    } else {
        e.pow(m as u32).sub_ref(&EulerPoly::one())
    };
    ratio.pow(&exponent.scale(&rat(1, 2 * m as i64)))
}

/// `b(<m^r>)` (or `b*`) for `r = 0..=order`.
pub fn fm_series(m: usize, order: usize, reverse: bool) -> Result<Vec<Rational>> {
    Ok(umbral_coefficients(&fm_generating_function(m, order, reverse)?))
}

type Monomials = BTreeMap<Vec<usize>, EulerPoly>;

fn cycle_factor(m: usize, order: usize, parity: Parity, reverse: bool) -> Result<ESeries> {
    let e = e_poly();
    match (m, parity) {
        (1, Parity::Odd) => exp_arctan(&e, order),
        (1, Parity::Even) => {
            let root = one_plus_t2(order).sqrt()?;
            let base = exp_arctan(&e, order)?;
            if reverse {
                Ok(base.mul(&root))
            } else {
                base.div(&root)
            }
        }
        (2, Parity::Odd) => one_plus_over_one_minus(order).pow(&e.pow(2).scale(&rat(1, 4))),
        (2, Parity::Even) => fm_generating_function(2, order, reverse),
        // for m = 2^k the odd pattern kills p_{2r}, so the -1 in the exponent drops out
        (_, Parity::Odd) if m.is_power_of_two() => {
            one_plus_over_one_minus(order).pow(&e.pow(m as u32).scale(&rat(1, 2 * m as i64)))
        }
        _ => fm_generating_function(m, order, false),
    }
}

/// Coefficients of the truncated cycle indicator: `b(lambda)` (or
/// `b*(lambda)`) for every `lambda` with parts `<= max_part` and size
/// `<= max_size`, including the empty partition.
pub fn cycle_indicator_truncated(max_part: usize, max_size: usize, reverse: bool) -> Result<BTreeMap<Partition, Rational>> {
    if max_part == 0 || max_part > 6 || max_size > 12 {
        return Err(Error::Argument(format!(
            "cycle indicator needs 1 <= M <= 6 and N <= 12, got M = {max_part}, N = {max_size}"
        )));
    }
    let mut out = BTreeMap::new();
    for parity in [Parity::Odd, Parity::Even] {
        let mut terms: Monomials = BTreeMap::from([(Vec::new(), EulerPoly::one())]);
        for m in 1..=max_part {
            let factor = cycle_factor(m, max_size / m, parity, reverse)?;
            let mut next = Monomials::new();
            for (key, poly) in &terms {
                let weight: usize = key.iter().enumerate().map(|(i, r)| (i + 1) * r).sum();
                for r in 0..=(max_size - weight) / m {
                    let c = factor.coeff(r);
                    if c.is_zero() {
                        continue;
                    }
                    let mut k = key.clone();
                    k.push(r);
                    next.insert(k, poly.mul_ref(c));
                }
            }
            terms = next;
        }
        for (key, poly) in terms {
            let weight: usize = key.iter().enumerate().map(|(i, r)| (i + 1) * r).sum();
            if Parity::of(weight) != parity {
                continue;
            }
            let parts = key.iter().enumerate().rev().flat_map(|(i, &r)| std::iter::repeat_n(i + 1, r)).collect();
            out.insert(Partition::new(parts)?, umbral_eval(&poly));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Involutions and fixed points

/// Alternating involutions `c(0..=order)`. The reverse count is taken from
/// the cycle indicator specialized at `t_1 = t, t_2 = t^2`, the forward one
/// from the closed product form.
pub fn involutions_series(order: usize, reverse: bool) -> Result<Vec<Rational>> {
    let e = e_poly();
    let x = arctan_t::<EulerPoly>(order).mul_scalar(&e);
    let ratio = ratio_t2(order);
    let (odd, even) = if reverse {
        let odd = x.exp()?.mul(&ratio.pow(&e.pow(2).scale(&rat(1, 4)))?);
        let even = x
            .exp()?
            .mul(&one_plus_t2(order).sqrt()?)
            .div(&one_plus_t2(order))?
            .mul(&ratio.pow(&EulerPoly::e_squared_plus(1).scale(&rat(1, 4)))?);
        (odd, even)
    } else {
        let common = ratio.pow(&e.pow(2).scale(&rat(1, 4)))?;
        let quartic = ESeries::from_rationals(vec![int(1), int(0), int(0), int(0), int(-1)], order).pow(&EulerPoly::constant_poly(rat(-1, 4)))?;
        (x.sinh()?.mul(&common), x.cosh()?.mul(&quartic).mul(&common))
    };
    let total = odd.parity_part(Parity::Odd).add(&even.parity_part(Parity::Even));
    Ok(umbral_coefficients(&total))
}

/// `exp(E(arctan qt - arctan t)) / (1 - Et)` as a `q`-series.
fn fixed_point_base(order: usize) -> Result<QESeries> {
    let e = e_poly();
    let forward = exp_arctan(&e, order)?;
    let backward = exp_arctan(&e.neg_ref(), order)?;
    let geometric = ESeries::new(vec![EulerPoly::one(), e.neg_ref()], order).inverse()?;
    Ok(substitute_qt(&forward).mul(&lift_q(&backward.mul(&geometric))))
}

/// Table `d_k(n)` (or `d*_k(n)`): row `n` lists the counts by number of
/// fixed points `k`, for `n = 0..=order`.
pub fn fixed_point_series(order: usize, reverse: bool) -> Result<Vec<Vec<Rational>>> {
    let base = fixed_point_base(order)?;
    let plain = one_plus_t2(order).sqrt()?;
    let scaled = substitute_qt(&one_plus_t2(order).pow(&EulerPoly::constant_poly(rat(-1, 2)))?);
    let root = if reverse {
        // sqrt((1 + q^2 t^2) / (1 + t^2))
        substitute_qt(&plain).mul(&lift_q(&plain.inverse()?))
    } else {
        lift_q(&plain).mul(&scaled)
    };
    let total = base.parity_part(Parity::Odd).add(&base.mul(&root).parity_part(Parity::Even));
    Ok(umbral_q_coefficients(&total))
}

/// One verified (or refuted) statement about the fixed-point table.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjectureRow {
    pub n: usize,
    pub statement: &'static str,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

fn max_nonzero(row: &[Rational]) -> Rational {
    int(row.iter().rposition(|c| !c.is_zero()).map_or(-1, |k| k as i64))
}

/// Checks the derangement identities for the extreme fixed-point counts
/// and the position of the last nonzero entry, for `4 <= n <= n_max`.
pub fn conjecture_check(n_max: usize) -> Result<Vec<ConjectureRow>> {
    if n_max < 4 {
        return Err(Error::Argument("conjecture check needs n_max >= 4".into()));
    }
    let d = fixed_point_series(n_max, false)?;
    let ds = fixed_point_series(n_max, true)?;
    let der = derangement_numbers(n_max);
    let at = |row: &[Rational], k: usize| row.get(k).cloned().unwrap_or_else(|| int(0));
    let mut out = Vec::new();
    let mut push = |n, statement, lhs: Rational, rhs: Rational| {
        let holds = lhs == rhs;
        out.push(ConjectureRow { n, statement, lhs, rhs, holds });
    };
    for n in 4..=n_max {
        let big = |i: usize| Rational::from_integer(der[i].clone());
        push(n, "d_ceil(n/2)(n) = D_floor(n/2)", at(&d[n], n.div_ceil(2)), big(n / 2));
        push(n, "max k with d_k(n) != 0 is ceil(n/2)", max_nonzero(&d[n]), int(n.div_ceil(2) as i64));
        if n >= 5 {
            push(n, "d*_ceil((n+1)/2)(n) = D_floor((n-1)/2)", at(&ds[n], (n + 1).div_ceil(2)), big((n - 1) / 2));
            push(n, "max k with d*_k(n) != 0 is ceil((n+1)/2)", max_nonzero(&ds[n]), int((n + 1).div_ceil(2) as i64));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Asymptotics

/// Which expansion of the derangement counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AsymptoticKind {
    /// `d_0(n)`, `n` odd.
    A,
    /// `d_0(n)`, `n` even.
    B,
    /// `d*_0(n)`, `n` even.
    C,
}

impl FromStr for AsymptoticKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(AsymptoticKind::A),
            "b" => Ok(AsymptoticKind::B),
            "c" => Ok(AsymptoticKind::C),
            _ => Err(Error::Argument(format!("unknown expansion kind {s:?} (expected a, b or c)"))),
        }
    }
}

impl fmt::Display for AsymptoticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AsymptoticKind::A => "a",
            AsymptoticKind::B => "b",
            AsymptoticKind::C => "c",
        };
        write!(f, "{s}")
    }
}

/// Coefficients of `x^0, x^2, ..., x^{2K}` in `exp(1 - arctan(x)/x)`,
/// multiplied by `sqrt(1+x^2)` for `B` and divided by it for `C`.
pub fn asymptotic_coeffs(kind: AsymptoticKind, terms: usize) -> Result<Vec<Rational>> {
    let order = 2 * terms;
    let inner: Vec<Rational> = (0..=order)
        .map(|i| if i % 2 == 0 && i > 0 { int(-sign((i / 2) % 2 == 1)) / int(i as i64 + 1) } else { int(0) })
        .collect();
    let base = RSeries::new(inner, order).exp()?;
    let root = RSeries::new(vec![int(1), int(0), int(1)], order).sqrt()?;
    let series = match kind {
        AsymptoticKind::A => base,
        AsymptoticKind::B => base.mul(&root),
        AsymptoticKind::C => base.div(&root)?,
    };
    Ok((0..=terms).map(|k| series.coeff(2 * k).clone()).collect())
}

/// Exact derangement count against its truncated expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticSample {
    pub n: usize,
    pub kind: AsymptoticKind,
    pub exact: Rational,
    /// `(1/e) sum_{k <= K} coeff_k E_{n-2k}`.
    pub approximation: f64,
    pub relative_error: f64,
}

/// Compares `d_0(n)` (`d*_0(n)` when `reverse` and `n` even) with the first
/// `K + 1` terms of its expansion.
pub fn asymptotic_sanity(n: usize, terms: usize, reverse: bool) -> Result<AsymptoticSample> {
    if n < 5 || terms > 4 {
        return Err(Error::Argument(format!("asymptotic check needs n >= 5 and K <= 4, got n = {n}, K = {terms}")));
    }
    let kind = match (n % 2 == 1, reverse) {
        (true, _) => AsymptoticKind::A,
        (false, false) => AsymptoticKind::B,
        (false, true) => AsymptoticKind::C,
    };
    let exact = fixed_point_series(n, reverse)?[n][0].clone();
    let sum = asymptotic_coeffs(kind, terms)?
        .into_iter()
        .enumerate()
        .take_while(|(k, _)| 2 * k <= n)
        .map(|(k, c)| c * euler_rational(n - 2 * k))
        .fold(int(0), |a, b| a + b);
    let e = std::f64::consts::E;
    let ratio = to_f64(&(&sum / &exact));
    Ok(AsymptoticSample { n, kind, exact, approximation: to_f64(&sum) / e, relative_error: (1.0 - ratio / e).abs() })
}

// ---------------------------------------------------------------------------
// Multisets and e/h specializations

/// Elementary or complete homogeneous symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EhKind {
    E,
    H,
}

/// `sum_i e_i[pattern] t^i` or `sum_i h_i[pattern] t^i`, pre-umbral.
pub fn eh_generating_function(kind: EhKind, pat: &Pattern, order: usize) -> Result<ESeries> {
    let base = exp_arctan(&e_poly(), order)?;
    let root = one_plus_t2(order).sqrt()?;
    match (pat, kind) {
        (Pattern::Odd, _) => Ok(base),
        (Pattern::EvenAlt, EhKind::E) | (Pattern::EvenRalt, EhKind::H) => Ok(base.mul(&root)),
        (Pattern::EvenRalt, EhKind::E) | (Pattern::EvenAlt, EhKind::H) => base.div(&root),
        _ => Err(Error::Argument(format!("no closed form for pattern {}", pat.name()))),
    }
}

fn validate_row_set(alpha: &Composition, row_set: &BTreeSet<usize>) -> Result<()> {
    match row_set.iter().find(|&&i| i == 0 || i > alpha.len()) {
        Some(i) => Err(Error::Argument(format!("index {i} is outside 1..={}", alpha.len()))),
        None => Ok(()),
    }
}

/// `N(alpha, A)` (or `N*` when `reverse`): `(A,B)`-alternating permutations
/// of the multiset `{1^alpha_1, ..., k^alpha_k}`.
pub fn multiset_count(alpha: &Composition, row_set: &BTreeSet<usize>, reverse: bool) -> Result<CountReport> {
    validate_row_set(alpha, row_set)?;
    let n = alpha.size();
    let pat = Pattern::for_size(n, reverse);
    let max = alpha.parts().iter().copied().max().unwrap_or(0);
    let es = eh_generating_function(EhKind::E, &pat, max)?;
    let hs = eh_generating_function(EhKind::H, &pat, max)?;
    let mut poly = EulerPoly::one();
    let mut sym = SymP::one();
    for (idx, &a) in alpha.parts().iter().enumerate() {
        let in_a = row_set.contains(&(idx + 1));
        poly = poly.mul_ref(if in_a { es.coeff(a) } else { hs.coeff(a) });
        sym = sym.mul(&if in_a { symfunc::e(a) } else { symfunc::h(a) });
    }
    let skew = alt_shape(&multiset_shape(alpha, row_set), !reverse)?.value;
    Ok(CountReport::new(n, umbral_eval(&poly), "eh_series")
        .check("symmetric_function", umbral_eval(&substitute(&sym, &pat)))
        .check("skew_shape", skew)
        .with_polynomial(poly))
}

/// `e_i` and `h_i` under one pattern.
#[derive(Clone, Debug, PartialEq)]
pub struct EhRow {
    pub i: usize,
    pub pattern: Pattern,
    pub e: EulerPoly,
    pub h: EulerPoly,
}

pub const TABLE_PATTERNS: [Pattern; 3] = [Pattern::Odd, Pattern::EvenAlt, Pattern::EvenRalt];

/// `e_i[P]`, `h_i[P]` for `1 <= i <= i_max` and the three alternating
/// patterns, read off the generating functions.
pub fn eh_specialization_table(i_max: usize) -> Result<Vec<EhRow>> {
    if i_max == 0 {
        return Err(Error::Argument("i_max must be at least 1".into()));
    }
    let mut rows = Vec::new();
    for pat in TABLE_PATTERNS {
        let es = eh_generating_function(EhKind::E, &pat, i_max)?;
        let hs = eh_generating_function(EhKind::H, &pat, i_max)?;
        for i in 1..=i_max {
            rows.push(EhRow { i, pattern: pat.clone(), e: es.coeff(i).clone(), h: hs.coeff(i).clone() });
        }
    }
    Ok(rows)
}

fn partner(pat: &Pattern) -> Pattern {
    match pat {
        Pattern::EvenAlt => Pattern::EvenRalt,
        Pattern::EvenRalt => Pattern::EvenAlt,
        other => other.clone(),
    }
}

/// Violations of `e_i[P] = h_i[P']` (`P'` the partner pattern) and of
/// agreement with direct substitution into `e_i`, `h_i`.
pub fn eh_identity_failures(rows: &[EhRow]) -> Vec<String> {
    let mut out = Vec::new();
    for row in rows {
        let partner_h = rows.iter().find(|r| r.i == row.i && r.pattern == partner(&row.pattern)).map(|r| &r.h);
        if partner_h.is_some_and(|h| h != &row.e) {
            out.push(format!("e_{}[{}] differs from h_{} at the partner pattern", row.i, row.pattern.name(), row.i));
        }
        if substitute(&symfunc::e(row.i), &row.pattern) != row.e {
            out.push(format!("e_{}[{}] differs from direct substitution", row.i, row.pattern.name()));
        }
        if substitute(&symfunc::h(row.i), &row.pattern) != row.h {
            out.push(format!("h_{}[{}] differs from direct substitution", row.i, row.pattern.name()));
        }
    }
    out
}

/// Published values of `e_i[P]` as `(i, P, integer coefficients from E^0
/// up, denominator)`.
pub fn reference_eh_values() -> Vec<(usize, Pattern, Vec<i64>, i64)> {
    use Pattern::*;
    vec![
        (1, Odd, vec![0, 1], 1),
        (2, Odd, vec![0, 0, 1], 2),
        (3, Odd, vec![0, -2, 0, 1], 6),
        (4, Odd, vec![0, 0, -8, 0, 1], 24),
        (5, Odd, vec![0, 24, 0, -20, 0, 1], 120),
        (1, EvenAlt, vec![0, 1], 1),
        (1, EvenRalt, vec![0, 1], 1),
        (2, EvenAlt, vec![1, 0, 1], 2),
        (2, EvenRalt, vec![-1, 0, 1], 2),
        (3, EvenAlt, vec![0, 1, 0, 1], 6),
        (3, EvenRalt, vec![0, -5, 0, 1], 6),
        (4, EvenAlt, vec![-3, 0, -2, 0, 1], 24),
        (4, EvenRalt, vec![9, 0, -7, 0, 1], 24),
        (5, EvenAlt, vec![-11, 0, 0, -10, 0, 1], 120),
        (5, EvenRalt, vec![89, 0, 0, 0, -30, 1], 120),
    ]
}

/// Reference entries that disagree with the computed `e_i[P]`, as
/// `(i, P, published, computed)`.
pub fn reference_table_mismatches() -> Result<Vec<(usize, Pattern, EulerPoly, EulerPoly)>> {
    let rows = eh_specialization_table(5)?;
    let mut out = Vec::new();
    for (i, pat, coeffs, den) in reference_eh_values() {
        let published = EulerPoly::from_ints(&coeffs).scale(&rat(1, den));
        let computed = rows.iter().find(|r| r.i == i && r.pattern == pat).map(|r| r.e.clone()).expect("row present");
        if published != computed {
            out.push((i, pat, published, computed));
        }
    }
    Ok(out)
}
