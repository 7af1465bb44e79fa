//! Homogeneous symmetric functions in the power-sum basis.
//!
//! A [`SymP`] stores the coefficients of `p_lambda`. Skew Schur functions
//! come from Murnaghan–Nakayama characters, the Hall pairing is
//! `<p_lambda, p_mu> = delta z_lambda`, and [`substitute`] sends each `p_j`
//! to a value in `Q[E]` (one of the alternating patterns).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{euler_number, int, rat, EulerPoly, Poly, Rational};
use crate::perms::{partitions, tau_shape, Partition, SkewShape};
use crate::useries::RSeries;

/// Homogeneous symmetric function of degree `n`: `sum c_lambda p_lambda`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymP {
    degree: usize,
    terms: BTreeMap<Partition, Rational>,
}

impl SymP {
    pub fn zero(degree: usize) -> Self {
        SymP { degree, terms: BTreeMap::new() }
    }

    /// `p_lambda`.
    pub fn p(lambda: Partition) -> Self {
        let mut s = SymP::zero(lambda.size());
        s.terms.insert(lambda, Rational::one());
        s
    }

    /// The unit, `p_()` in degree 0.
    pub fn one() -> Self {
        SymP::p(Partition::default())
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Result<Self> {
        let mut s = SymP::zero(degree);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::Argument(format!("{lambda} has size {} in degree {degree}", lambda.size())));
            }
            s.add_term(lambda, c);
        }
        Ok(s)
    }

    fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            // drop cancelled terms
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &SymP) -> Result<SymP> {
        if self.degree != other.degree {
            return Err(Error::Argument(format!("degrees {} and {} differ", self.degree, other.degree)));
        }
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> SymP {
        let mut out = SymP::zero(self.degree);
        for (l, v) in &self.terms {
            out.add_term(l.clone(), v * c);
        }
        out
    }

    /// Product in the ring of symmetric functions (`p_lambda p_mu =
    /// p_{lambda cup mu}`).
    pub fn mul(&self, other: &SymP) -> SymP {
        let mut out = SymP::zero(self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }

    /// `f(x^s)`: every `p_j` becomes `p_{js}`.
    pub fn stretch(&self, s: usize) -> SymP {
        let mut out = SymP::zero(self.degree * s);
        for (l, c) in &self.terms {
            out.add_term(l.stretch(s), c.clone());
        }
        out
    }

    /// Numeric value at `p_j = values[j-1]`.
    pub fn evaluate(&self, values: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(l, c)| l.parts().iter().fold(c.clone(), |acc, &j| acc * &values[j - 1]))
            .fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Debug for SymP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let body: Vec<String> =
            self.terms.iter().map(|(l, c)| format!("{}*p{}", crate::exact::format_rational(c), l)).collect();
        write!(f, "{}", body.join(" + "))
    }
}

/// `z_lambda = prod_i i^{m_i} m_i!`.
pub fn z_of(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (size, mult) in lambda.multiplicities() {
        for k in 1..=mult {
            z *= size * k;
        }
    }
    z
}

fn z_rational(lambda: &Partition) -> Rational {
    Rational::from_integer(z_of(lambda))
}

/// `h_n = sum_lambda z_lambda^{-1} p_lambda`.
pub fn h(n: usize) -> SymP {
    let mut s = SymP::zero(n);
    for l in partitions(n) {
        let c = Rational::one() / z_rational(&l);
        s.add_term(l, c);
    }
    s
}

/// `e_n = sum_lambda eps_lambda z_lambda^{-1} p_lambda`.
pub fn e(n: usize) -> SymP {
    let mut s = SymP::zero(n);
    for l in partitions(n) {
        let sign = if (n - l.len()).is_multiple_of(2) { 1 } else { -1 };
        let c = int(sign) / z_rational(&l);
        s.add_term(l, c);
    }
    s
}

/// Murnaghan–Nakayama evaluator with a per-instance memo table.
struct MnMemo<'a> {
    inner: &'a Partition,
    rows: usize,
    memo: HashMap<(Vec<usize>, Vec<usize>), i128>,
}

impl<'a> MnMemo<'a> {
    fn new(shape: &'a SkewShape) -> Self {
        MnMemo { inner: shape.inner(), rows: shape.rows(), memo: HashMap::new() }
    }

    /// `outer` has exactly `rows` entries (zeros allowed); strips are
    /// removed for the parts of `rho` from the front.
    fn chi(&mut self, outer: &[usize], rho: &[usize]) -> i128 {
        let Some((&r, rest)) = rho.split_first() else {
            return (0..self.rows).all(|i| outer[i] == self.inner.part(i)) as i128;
        };
        let key = (outer.to_vec(), rho.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let k = self.rows;
        // beta numbers, strictly decreasing
        let beta: Vec<usize> = (0..k).map(|i| outer[i] + (k - 1 - i)).collect();
        let mut total = 0i128;
        for i in 0..k {
            let Some(target) = beta[i].checked_sub(r) else { continue };
            if beta.contains(&target) {
                continue;
            }
            let between = beta.iter().filter(|&&b| b > target && b < beta[i]).count();
            let mut next = beta.clone();
            next[i] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let new_outer: Vec<usize> = (0..k).map(|j| next[j] - (k - 1 - j)).collect();
            if (0..k).any(|j| new_outer[j] < self.inner.part(j)) {
                continue;
            }
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * self.chi(&new_outer, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// `chi^{shape}(rho)` by the Murnaghan–Nakayama rule.
pub fn mn_character(shape: &SkewShape, rho: &Partition) -> Result<i128> {
    if shape.size() != rho.size() {
        return Err(Error::Argument(format!("shape {shape} has size {}, class {rho} has size {}", shape.size(), rho.size())));
    }
    let mut memo = MnMemo::new(shape);
    let outer: Vec<usize> = (0..shape.rows()).map(|i| shape.outer().part(i)).collect();
    Ok(memo.chi(&outer, rho.parts()))
}

/// `s_{shape} = sum_rho z_rho^{-1} chi^{shape}(rho) p_rho`.
pub fn skew_schur_in_p(shape: &SkewShape) -> SymP {
    let n = shape.size();
    let mut memo = MnMemo::new(shape);
    let outer: Vec<usize> = (0..shape.rows()).map(|i| shape.outer().part(i)).collect();
    let mut s = SymP::zero(n);
    for rho in partitions(n) {
        let chi = memo.chi(&outer, rho.parts());
        if chi != 0 {
            let c = Rational::from_integer(BigInt::from(chi)) / z_rational(&rho);
            s.add_term(rho, c);
        }
    }
    s
}

/// Closed-form value of `chi^{tau_n}(mu)` (or `chi^{tau'_n}` when `primed`).
///
/// Odd `n = 2k+1`: zero if `mu` has an even part, else `(-1)^{k+r}
/// E_{2r+1}` with `2r+1` parts. Even `n = 2k` with `2r` odd parts and `e`
/// even parts: `(-1)^{k+r} E_{2r}` for `tau_n` and `(-1)^{k+r+e} E_{2r}`
/// for `tau'_n`.
pub fn foulkes_character(n: usize, mu: &Partition, primed: bool) -> Result<BigInt> {
    if mu.size() != n {
        return Err(Error::Argument(format!("{mu} is not a partition of {n}")));
    }
    let odd = mu.parts().iter().filter(|&&p| p % 2 == 1).count();
    let even = mu.len() - odd;
    let k = n / 2;
    if n % 2 == 1 {
        if even > 0 {
            return Ok(BigInt::zero());
        }
        let r = (odd - 1) / 2;
        let sign = if (k + r).is_multiple_of(2) { 1 } else { -1 };
        return Ok(euler_number(odd) * sign);
    }
    let r = odd / 2;
    let exponent = k + r + if primed { even } else { 0 };
    let sign = if exponent.is_multiple_of(2) { 1 } else { -1 };
    Ok(euler_number(odd) * sign)
}

/// Number-theoretic Möbius function.
pub fn mobius(n: usize) -> i64 {
    assert!(n >= 1);
    let mut m = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if m > 1 {
        result = -result;
    }
    result
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// `L_n = (1/n) sum_{d | n} mu(d) p_d^{n/d}`.
pub fn lyndon_l(n: usize) -> SymP {
    let mut s = SymP::zero(n);
    for d in divisors(n) {
        let mu = mobius(d);
        if mu != 0 {
            s.add_term(Partition::rectangle(d, n / d), rat(mu, n as i64));
        }
    }
    s
}

/// `L_{<m^r>}` from `r L_{<m^r>} = sum_{s=1}^r L_m(x^s) L_{<m^{r-s}>}`.
fn l_rectangle(m: usize, r: usize) -> SymP {
    let lm = lyndon_l(m);
    let mut table = vec![SymP::one()];
    for rr in 1..=r {
        let mut acc = SymP::zero(m * rr);
        for s in 1..=rr {
            acc = acc.add(&lm.stretch(s).mul(&table[rr - s])).expect("equal degrees");
        }
        table.push(acc.scale(&rat(1, rr as i64)));
    }
    table.swap_remove(r)
}

/// Gessel–Reutenauer function `L_lambda = prod_m L_{<m^{m_m}>}`.
#[allow(non_snake_case)]
pub fn gr_L(lambda: &Partition) -> SymP {
    lambda
        .multiplicities()
        .into_iter()
        .fold(SymP::one(), |acc, (m, r)| acc.mul(&l_rectangle(m, r)))
}

/// Hall inner product `sum_lambda z_lambda f_lambda g_lambda`.
pub fn inner_product(f: &SymP, g: &SymP) -> Result<Rational> {
    if f.degree != g.degree {
        return Err(Error::Argument(format!("degrees {} and {} differ", f.degree, g.degree)));
    }
    Ok(f.terms
        .iter()
        .filter_map(|(l, c)| g.terms.get(l).map(|d| c * d * z_rational(l)))
        .fold(Rational::zero(), |acc, x| acc + x))
}

/// Value assigned to one power sum by a [`Pattern`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternValue {
    /// `sign * E`, with `sign` = +1 or -1.
    SignedE(i8),
    Constant(Rational),
}

/// Assignment `p_j -> value` used by [`substitute`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// `[E, 0, -E, 0, E, ...]`.
    Odd,
    /// `[E, -1, -E, 1, ...]`.
    EvenAlt,
    /// `[E, 1, -E, -1, ...]`.
    EvenRalt,
    /// `p_j -> E` for all `j`.
    AllE,
    /// `[E, 0, E, 0, ...]`: odd power sums to `E`, even ones to zero.
    OddAllE,
    /// Explicit values for `p_1, p_2, ...`, repeated cyclically.
    Custom(Vec<PatternValue>),
}

impl Pattern {
    /// Pattern pairing with `tau_n` (or `tau'_n` when `reverse`).
    pub fn for_size(n: usize, reverse: bool) -> Pattern {
        match (n % 2 == 1, reverse) {
            (true, _) => Pattern::Odd,
            (false, false) => Pattern::EvenAlt,
            (false, true) => Pattern::EvenRalt,
        }
    }

    pub fn value(&self, j: usize) -> PatternValue {
        let odd_sign = if (j / 2).is_multiple_of(2) { 1 } else { -1 };
        match self {
            Pattern::Odd | Pattern::EvenAlt | Pattern::EvenRalt if j % 2 == 1 => PatternValue::SignedE(odd_sign),
            Pattern::Odd => PatternValue::Constant(Rational::zero()),
            Pattern::EvenAlt => PatternValue::Constant(int(if (j / 2) % 2 == 1 { -1 } else { 1 })),
            Pattern::EvenRalt => PatternValue::Constant(int(if (j / 2) % 2 == 1 { 1 } else { -1 })),
            Pattern::AllE => PatternValue::SignedE(1),
            Pattern::OddAllE if j % 2 == 1 => PatternValue::SignedE(1),
            Pattern::OddAllE => PatternValue::Constant(Rational::zero()),
            Pattern::Custom(values) => values[(j - 1) % values.len()].clone(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Pattern::Odd => "odd",
            Pattern::EvenAlt => "even_alt",
            Pattern::EvenRalt => "even_ralt",
            Pattern::AllE => "all_e",
            Pattern::OddAllE => "odd_all_e",
            Pattern::Custom(_) => "custom",
        }
    }
}

/// Ring homomorphism `f -> f[pattern]`; the result is pre-umbral.
pub fn substitute(f: &SymP, pat: &Pattern) -> EulerPoly {
    let max_part = f.terms.keys().map(|l| l.part(0)).max().unwrap_or(0);
    let values: Vec<PatternValue> = (1..=max_part).map(|j| pat.value(j)).collect();
    let mut coeffs = vec![Rational::zero(); f.degree + 1];
    for (l, c) in &f.terms {
        let mut scalar = c.clone();
        let mut power = 0;
        for &j in l.parts() {
            match &values[j - 1] {
                PatternValue::SignedE(s) => {
                    power += 1;
                    if *s < 0 {
                        scalar = -scalar;
                    }
                }
                PatternValue::Constant(v) => scalar *= v,
            }
            if scalar.is_zero() {
                break;
            }
        }
        if !scalar.is_zero() {
            coeffs[power] += scalar;
        }
    }
    Poly::new(coeffs)
}

/// Random-specialization check of the ribbon generating function
///
/// `sum s_{tau'_n} t^n = (1 + sum (-1)^n h_{2n+1} t^{2n+1}) / sum (-1)^n h_{2n} t^{2n}`
///
/// together with its image under `omega` (`tau_n` with `e` in place of `h`),
/// through `t^N`, at `trials` seeded rational points `p_1..p_N`.
pub fn carlitz_identity_check(n_max: usize, trials: usize, seed: u64) -> bool {
    let lhs_tau: Vec<SymP> = (1..=n_max).map(|n| skew_schur_in_p(&tau_shape(n, false))).collect();
    let lhs_tau_primed: Vec<SymP> = (1..=n_max).map(|n| skew_schur_in_p(&tau_shape(n, true))).collect();
    let hs: Vec<SymP> = (0..=n_max).map(h).collect();
    let es: Vec<SymP> = (0..=n_max).map(e).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let values: Vec<Rational> = (0..n_max)
            .map(|_| rat(rng.gen_range(-40..=40), rng.gen_range(1..=12)))
            .collect();
        for (lhs, basis) in [(&lhs_tau_primed, &hs), (&lhs_tau, &es)] {
            let mut left = vec![Rational::one()];
            left.extend(lhs.iter().map(|s| s.evaluate(&values)));
            let rhs = carlitz_rhs(basis, &values, n_max);
            if RSeries::new(left, n_max) != rhs {
                return false;
            }
        }
    }
    true
}

/// `(1 + sum (-1)^n b_{2n+1} t^{2n+1}) / sum (-1)^n b_{2n} t^{2n}`, with
/// `b_k` evaluated at `values`.
fn carlitz_rhs(basis: &[SymP], values: &[Rational], n_max: usize) -> RSeries {
    let mut num = vec![Rational::one()];
    let mut den = Vec::new();
    for (k, b) in basis.iter().enumerate() {
        let sign = int(if (k / 2) % 2 == 0 { 1 } else { -1 });
        let v = b.evaluate(values) * sign;
        if k % 2 == 1 {
            num.push(v);
            den.push(Rational::zero());
        } else {
            if k > 0 {
                num.push(Rational::zero());
            }
            den.push(v);
        }
    }
    RSeries::new(num, n_max).div(&RSeries::new(den, n_max)).expect("h_0 = 1")
}

/// The printed form `1/sum (-1)^n h_{2n} t^{2n} + sum h_{2n+1} t^{2n+1} /
/// sum (-1)^n h_{2n} t^{2n}` against `s_{tau_n}`; kept to document that it
/// does not hold.
pub fn carlitz_printed_form_holds(n_max: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values: Vec<Rational> = (0..n_max).map(|_| rat(rng.gen_range(-40..=40), rng.gen_range(1..=12))).collect();
    let mut left = vec![Rational::one()];
    left.extend((1..=n_max).map(|n| skew_schur_in_p(&tau_shape(n, false)).evaluate(&values)));
    let mut num = vec![Rational::one()];
    let mut den = Vec::new();
    for k in 0..=n_max {
        let v = h(k).evaluate(&values);
        if k % 2 == 1 {
            num.push(v);
            den.push(Rational::zero());
        } else {
            if k > 0 {
                num.push(Rational::zero());
            }
            den.push(v * int(if (k / 2) % 2 == 0 { 1 } else { -1 }));
        }
    }
    let rhs = RSeries::new(num, n_max).div(&RSeries::new(den, n_max)).expect("h_0 = 1");
    RSeries::new(left, n_max) == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{umbral_eval, Ring as _};
    use crate::perms::{
        compositions, enumerate_syt, ribbon_shape, tally_descent_pairs, Composition, OracleConfig,
    };

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sp(terms: &[(&[usize], Rational)]) -> SymP {
        let n = terms[0].0.iter().sum();
        SymP::from_terms(n, terms.iter().map(|(l, c)| (part(l), c.clone()))).unwrap()
    }

    #[test]
    fn z_values() {
        assert_eq!(z_of(&part(&[1, 1, 1, 1])), BigInt::from(24));
        assert_eq!(z_of(&part(&[5])), BigInt::from(5));
        assert_eq!(z_of(&part(&[2, 1])), BigInt::from(2));
        assert_eq!(z_of(&part(&[2, 2, 1])), BigInt::from(8));
    }

    #[test]
    fn characters() {
        assert_eq!(mn_character(&tau_shape(3, false), &part(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&SkewShape::straight(part(&[4])), &part(&[4])).unwrap(), 1);
        for mu in partitions(5).into_iter().filter(|m| m.parts().iter().any(|p| p % 2 == 0)) {
            assert_eq!(mn_character(&tau_shape(5, false), &mu).unwrap(), 0);
        }
        assert!(mn_character(&tau_shape(3, false), &part(&[2])).is_err());
        // column of height 2 at a transposition
        assert_eq!(mn_character(&tau_shape(2, false), &part(&[2])).unwrap(), -1);
    }

    #[test]
    fn characters_count_tableaux() {
        for n in 1..=8 {
            for lam in partitions(n) {
                let shape = SkewShape::straight(lam.clone());
                let dim = mn_character(&shape, &Partition::rectangle(1, n)).unwrap();
                assert_eq!(dim as usize, enumerate_syt(&shape, 14).unwrap().len());
            }
            for alpha in compositions(n) {
                let shape = ribbon_shape(&alpha);
                let dim = mn_character(&shape, &Partition::rectangle(1, n)).unwrap();
                assert_eq!(dim as usize, enumerate_syt(&shape, 14).unwrap().len());
            }
        }
    }

    #[test]
    fn schur_expansions() {
        assert_eq!(
            skew_schur_in_p(&SkewShape::straight(part(&[2, 1]))),
            sp(&[(&[1, 1, 1], rat(1, 3)), (&[3], rat(-1, 3))])
        );
        assert_eq!(skew_schur_in_p(&SkewShape::straight(part(&[1]))), SymP::p(part(&[1])));
        assert_eq!(skew_schur_in_p(&SkewShape::straight(part(&[1, 1]))), e(2));
        assert_eq!(skew_schur_in_p(&SkewShape::straight(part(&[3]))), h(3));
    }

    #[test]
    fn foulkes_examples() {
        assert_eq!(foulkes_character(3, &part(&[1, 1, 1]), false).unwrap(), BigInt::from(2));
        assert_eq!(foulkes_character(3, &part(&[2, 1]), false).unwrap(), BigInt::zero());
        assert_eq!(foulkes_character(2, &part(&[2]), false).unwrap(), BigInt::from(-1));
        assert_eq!(foulkes_character(2, &part(&[2]), true).unwrap(), BigInt::from(1));
        assert!(foulkes_character(3, &part(&[2]), false).is_err());
    }

    #[test]
    fn foulkes_matches_mn() {
        for n in 1..=10 {
            for mu in partitions(n) {
                for primed in [false, true] {
                    let mn = mn_character(&tau_shape(n, primed), &mu).unwrap();
                    assert_eq!(BigInt::from(mn), foulkes_character(n, &mu, primed).unwrap(), "n={n} mu={mu} primed={primed}");
                }
            }
        }
    }

    #[test]
    fn l_functions() {
        assert_eq!(gr_L(&part(&[1])), SymP::p(part(&[1])));
        assert_eq!(gr_L(&part(&[2, 1])), sp(&[(&[1, 1, 1], rat(1, 2)), (&[2, 1], rat(-1, 2))]));
        for n in 1..=8 {
            let total = partitions(n).iter().fold(SymP::zero(n), |acc, l| acc.add(&gr_L(l)).unwrap());
            assert_eq!(total, SymP::p(Partition::rectangle(1, n)), "n = {n}");
        }
    }

    #[test]
    fn inner_products() {
        let r21 = skew_schur_in_p(&ribbon_shape(&Composition::new(vec![2, 1]).unwrap()));
        assert_eq!(inner_product(&r21, &r21).unwrap(), int(1));
        let p1 = SymP::p(part(&[1]));
        assert_eq!(inner_product(&p1, &p1).unwrap(), int(1));
        assert!(inner_product(&p1, &h(2)).is_err());
    }

    #[test]
    fn ribbon_pairing_matches_descent_pairs() {
        let cfg = OracleConfig::default();
        for n in 1..=5 {
            let tally = tally_descent_pairs(n, &cfg).unwrap();
            let comps = compositions(n);
            let ribbons: Vec<SymP> = comps.iter().map(|a| skew_schur_in_p(&ribbon_shape(a))).collect();
            for (i, a) in comps.iter().enumerate() {
                for (j, b) in comps.iter().enumerate() {
                    let ip = inner_product(&ribbons[i], &ribbons[j]).unwrap();
                    let count = tally.get(&(b.clone(), a.clone())).copied().unwrap_or(0);
                    assert_eq!(ip, int(count as i64), "alpha={a} beta={b}");
                }
            }
        }
    }

    #[test]
    fn substitutions() {
        let custom = Pattern::Custom(vec![PatternValue::SignedE(1), PatternValue::SignedE(-1)]);
        let sub = substitute(&e(2), &custom);
        assert_eq!(sub, Poly::new(vec![int(0), rat(1, 2), rat(1, 2)]));
        assert_eq!(umbral_eval(&sub), int(1));
        assert_eq!(substitute(&SymP::p(part(&[1])), &Pattern::Odd), EulerPoly::e());
        let s21 = substitute(&skew_schur_in_p(&SkewShape::straight(part(&[2, 1]))), &Pattern::Odd);
        assert_eq!(s21, Poly::new(vec![int(0), rat(1, 3), int(0), rat(1, 3)]));
        assert_eq!(umbral_eval(&s21), int(1));
    }

    #[test]
    fn pattern_values() {
        let vals = |p: Pattern| -> Vec<PatternValue> { (1..=4).map(|j| p.value(j)).collect() };
        use PatternValue::*;
        assert_eq!(vals(Pattern::Odd), [SignedE(1), Constant(int(0)), SignedE(-1), Constant(int(0))]);
        assert_eq!(vals(Pattern::EvenAlt), [SignedE(1), Constant(int(-1)), SignedE(-1), Constant(int(1))]);
        assert_eq!(vals(Pattern::EvenRalt), [SignedE(1), Constant(int(1)), SignedE(-1), Constant(int(-1))]);
    }

    #[test]
    fn carlitz() {
        assert!(carlitz_identity_check(1, 2, 0));
        assert!(carlitz_identity_check(6, 2, 11));
        assert!(!carlitz_printed_form_holds(4, 5));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn sym(n: usize) -> impl Strategy<Value = SymP> {
            let parts = partitions(n);
            let k = parts.len();
            prop::collection::vec((-6i64..6, 1i64..4), k).prop_map(move |cs| {
                SymP::from_terms(n, parts.iter().cloned().zip(cs.into_iter().map(|(a, b)| rat(a, b)))).unwrap()
            })
        }

        fn pattern() -> impl Strategy<Value = Pattern> {
            prop_oneof![Just(Pattern::Odd), Just(Pattern::EvenAlt), Just(Pattern::EvenRalt), Just(Pattern::AllE)]
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn substitute_is_multiplicative(f in sym(3), g in sym(4), pat in pattern()) {
                prop_assert_eq!(substitute(&f.mul(&g), &pat), substitute(&f, &pat).mul_ref(&substitute(&g, &pat)));
            }

            #[test]
            fn substitution_parity(f in sym(5), g in sym(4)) {
                for pat in [Pattern::Odd, Pattern::EvenAlt, Pattern::EvenRalt] {
                    prop_assert!(substitute(&f, &pat).has_parity(5));
                    prop_assert!(substitute(&g, &pat).has_parity(4));
                }
            }
        }
    }
}
