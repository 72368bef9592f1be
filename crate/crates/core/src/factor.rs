//! Extraction of linear factors over the rationals.
//!
//! The direction of any linear factor of `p` must divide the homogeneous
//! leading form of `p`, so admissible slopes are the rational roots of the
//! dehomogenized leading form. For each admissible direction the offset is
//! pinned by requiring the restriction of `p` to the shifted line to vanish
//! identically: the restriction coefficients are univariate polynomials in
//! the offset, and their gcd collects the admissible offsets as rational
//! roots. This is complete over the rationals; factors with irrational
//! coefficients are out of scope by design.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Result;
use crate::poly::{LinearForm, Monomial, Point, Poly};
use crate::scalar::Scalar;

/// `p = scalar * product(factors^multiplicity) * residual`, exactly.
/// The residual has no rational linear factor and is monic with respect to
/// the canonical monomial order (so it equals one iff `p` splits).
#[derive(Clone, Debug)]
pub struct LinearFactorization {
    pub scalar: Scalar,
    pub factors: Vec<(LinearForm, u32)>,
    pub residual: Poly,
}

impl LinearFactorization {
    /// Re-multiplies the factorization; used by callers as an exactness check.
    pub fn expand(&self) -> Poly {
        let mut acc = Poly::constant(self.scalar.clone());
        for (f, mult) in &self.factors {
            acc = acc * f.to_poly().pow(*mult);
        }
        acc * &self.residual
    }

    pub fn factor_count(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    pub fn splits_completely(&self) -> bool {
        self.residual == Poly::one()
    }
}

/// All rational linear factors of `p` with multiplicity, each scaled to take
/// the value one at `z` whenever `z` is not on the factor line (otherwise the
/// canonical line normalization is kept).
///
/// `hints` are candidate lines tried by exact division before the general
/// search; they only accelerate, never change, the result.
pub fn linear_factors(p: &Poly, z: &Point, hints: &[LinearForm]) -> Result<LinearFactorization> {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    let (raw, residual) = extract_linear_factors(p, hints);

    let mut scalar = {
        let (_, lead) = residual.leading_term().expect("nonzero residual");
        lead.clone()
    };
    let residual = residual.scale(&scalar.recip());

    let mut factors: Vec<(LinearForm, u32)> = Vec::new();
    for f in raw {
        let at_z = f.evaluate(z);
        let norm = if at_z.is_zero() {
            f.normalized()
        } else {
            f.scale(&at_z.recip())
        };
        // Fold the rescaling into the overall scalar: f = c * norm.
        let c = scale_between(&norm, &f);
        scalar *= &c;
        match factors.iter_mut().find(|(g, _)| *g == norm) {
            Some((_, m)) => *m += 1,
            None => factors.push((norm, 1)),
        }
    }
    Ok(LinearFactorization {
        scalar,
        factors,
        residual,
    })
}

/// The scalar `c` with `target = c * reference` (both nonzero multiples of a
/// common line).
fn scale_between(reference: &LinearForm, target: &LinearForm) -> Scalar {
    for (r, t) in [
        (&reference.a1, &target.a1),
        (&reference.a2, &target.a2),
        (&reference.a0, &target.a0),
    ] {
        if !r.is_zero() {
            return t / r;
        }
    }
    unreachable!("zero linear form");
}

/// Peels off rational linear factors one at a time. Returns the factors (in
/// extraction order, repeated per multiplicity) and the unfactorable rest.
pub fn extract_linear_factors(p: &Poly, hints: &[LinearForm]) -> (Vec<LinearForm>, Poly) {
    let mut factors = Vec::new();
    let mut rest = p.clone();
    'outer: while rest.degree().unwrap_or(0) >= 1 {
        for h in hints {
            if h.is_constant() {
                continue;
            }
            if let Some(q) = rest.div_exact(&h.to_poly()) {
                factors.push(h.clone());
                rest = q;
                continue 'outer;
            }
        }
        match find_one_linear_factor(&rest) {
            Some(f) => {
                let q = rest
                    .div_exact(&f.to_poly())
                    .expect("found factor must divide");
                factors.push(f);
                rest = q;
            }
            None => break,
        }
    }
    (factors, rest)
}

/// Finds some rational linear factor of `p` (degree >= 1), if any exists.
fn find_one_linear_factor(p: &Poly) -> Option<LinearForm> {
    let lead = p.leading_form().expect("nonzero");
    let d = lead.degree().unwrap();
    debug_assert!(d >= 1);

    // Dehomogenize the leading form at x2 = 1: a factor x1 - c*x2 of the
    // leading form corresponds to a rational root c.
    let mut g = vec![Scalar::zero(); d as usize + 1];
    for (m, c) in lead.terms() {
        g[m.e1 as usize] = c.clone();
    }
    let g = UniPoly::new(g);

    for c in rational_roots(&g) {
        // Offset b of a factor x1 - c*x2 - b: substitute x1 = c*x2 + b and
        // require the restriction to vanish for all x2.
        let sub_x1 = Poly::from_terms([
            (Monomial::new(1, 0), c.clone()),
            (Monomial::new(0, 1), Scalar::one()),
        ]);
        let restricted = p.compose(&sub_x1, &Poly::x1());
        if let Some(b) = common_root_of_coefficient_polys(&restricted) {
            return Some(LinearForm::new(-b, Scalar::one(), -&c));
        }
    }

    // The direction x2 divides the leading form iff the x1^d coefficient
    // vanishes (equivalently the dehomogenization drops degree). A factor
    // x2 - b requires p(x1, b) to vanish identically, i.e. b is a common
    // root of the coefficient polynomials of p grouped by powers of x1.
    if g.degree() != Some(d as usize) {
        if let Some(b) = common_root_of_coefficient_polys(p) {
            return Some(LinearForm::new(-b, Scalar::zero(), Scalar::one()));
        }
    }
    None
}

/// Treats `q(x1, x2)` as a polynomial in `x1` whose coefficients are
/// univariate polynomials in `x2`, and returns a common rational root of all
/// those coefficient polynomials (an admissible offset), if one exists.
fn common_root_of_coefficient_polys(q: &Poly) -> Option<Scalar> {
    let mut gcd_poly: Option<UniPoly> = None;
    let max_e1 = q.terms().map(|(m, _)| m.e1).max().unwrap_or(0);
    for e1 in 0..=max_e1 {
        let mut coeffs = Vec::new();
        for (m, c) in q.terms() {
            if m.e1 == e1 {
                let idx = m.e2 as usize;
                if coeffs.len() <= idx {
                    coeffs.resize(idx + 1, Scalar::zero());
                }
                coeffs[idx] = c.clone();
            }
        }
        let phi = UniPoly::new(coeffs);
        if phi.is_zero() {
            continue;
        }
        gcd_poly = Some(match gcd_poly {
            None => phi,
            Some(g) => g.gcd(&phi),
        });
        if let Some(g) = &gcd_poly {
            if g.degree() == Some(0) {
                return None;
            }
        }
    }
    let g = gcd_poly?;
    rational_roots(&g).into_iter().next()
}

/// Dense univariate polynomial over the rationals, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn rem(&self, div: &UniPoly) -> UniPoly {
        let dd = div.degree().expect("division by zero polynomial");
        let lead = div.coeffs.last().unwrap().clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let k = r.len() - 1;
            let f = r[k].clone() / lead.clone();
            if !f.is_zero() {
                for i in 0..=dd {
                    let t = &div.coeffs[i] * &f;
                    r[k - dd + i] -= &t;
                }
            }
            r.pop();
        }
        UniPoly::new(r)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if let Some(lead) = a.coeffs.last().cloned() {
            let inv = lead.recip();
            a = UniPoly::new(a.coeffs.iter().map(|c| c * &inv).collect());
        }
        a
    }
}

/// All distinct rational roots of a nonzero univariate polynomial.
pub fn rational_roots(p: &UniPoly) -> Vec<Scalar> {
    if p.is_zero() {
        panic!("rational_roots of the zero polynomial");
    }
    let mut roots = Vec::new();
    let mut coeffs = p.coeffs.to_vec();

    // Strip the power of t dividing p; it contributes the root zero.
    let shift = coeffs.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        coeffs.drain(0..shift);
        roots.push(Scalar::zero());
    }
    if coeffs.len() <= 1 {
        return roots;
    }

    // Primitive integer coefficients.
    let mut lcm = BigInt::one();
    for c in &coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for v in &ints {
        content = content.gcd(v);
    }
    for v in &mut ints {
        *v /= &content;
    }

    let a0 = ints.first().unwrap().abs();
    let ad = ints.last().unwrap().abs();
    let ps = divisors(&a0);
    let qs = divisors(&ad);

    let poly = UniPoly::new(coeffs);
    let mut seen = std::collections::BTreeSet::new();
    for num in &ps {
        for den in &qs {
            if num.gcd(den) != BigInt::one() {
                continue;
            }
            for sgn in [1i64, -1] {
                let cand = Scalar::from_bigints(num * BigInt::from(sgn), den.clone());
                if seen.insert(cand.clone()) && poly.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// All positive divisors of `n > 0`.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factorize(n.clone()) {
        let prior = divs.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk *= &p;
            divs.extend(prior.iter().map(|d| d * &pk));
        }
    }
    divs
}

/// Prime factorization: trial division by small primes, then Pollard rho on
/// what remains so large cofactors are still split completely.
fn factorize(mut n: BigInt) -> Vec<(BigInt, u32)> {
    assert!(n.is_positive());
    let mut out: std::collections::BTreeMap<BigInt, u32> = std::collections::BTreeMap::new();
    for small in 2u64..=4096 {
        let p = BigInt::from(small);
        if &p * &p > n {
            break;
        }
        while (&n % &p).is_zero() {
            n /= &p;
            *out.entry(p.clone()).or_insert(0) += 1;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    out.into_iter().collect()
}

fn is_prime(n: &BigInt) -> bool {
    let n = n.to_biguint().expect("positive");
    if n < 2u32.into() {
        return false;
    }
    let two = num_bigint::BigUint::from(2u32);
    if &n % &two == num_bigint::BigUint::ZERO {
        return n == two;
    }
    let n_minus_1 = &n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    // Deterministic Miller-Rabin witnesses for anything below 3.3 * 10^24.
    'witness: for w in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let a = num_bigint::BigUint::from(w) % &n;
        if a.is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, &n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, &n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard rho (Brent variant) on an odd composite.
fn pollard_rho(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let mut c = BigInt::one();
    loop {
        let mut x = BigInt::from(2);
        let mut y = BigInt::from(2);
        let mut d = BigInt::one();
        let step = |v: &BigInt| (v * v + &c) % n;
        while d.is_one() {
            x = step(&x);
            y = step(&step(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_frac(n, d)
    }

    #[test]
    fn roots_of_small_polys() {
        // (t - 2)(t + 1/3) up to scale: 3t^2 - 5t - 2
        let p = UniPoly::new(vec![s(-2), s(-5), s(3)]);
        assert_eq!(rational_roots(&p), vec![q(-1, 3), s(2)]);

        // t^2 + 1 has none
        let p = UniPoly::new(vec![s(1), s(0), s(1)]);
        assert!(rational_roots(&p).is_empty());

        // t^3: root zero only
        let p = UniPoly::new(vec![s(0), s(0), s(0), s(1)]);
        assert_eq!(rational_roots(&p), vec![s(0)]);
    }

    #[test]
    fn roots_with_large_coefficients() {
        // (t - 1000003)(t - 1/999983), both primes beyond trial division.
        let a = s(1000003);
        let b = q(1, 999983);
        let p = UniPoly::new(vec![&a * &b, -(&a + &b), s(1)]);
        let mut r = rational_roots(&p);
        r.sort();
        assert_eq!(r, vec![b, a]);
    }

    #[test]
    fn factorization_of_line_products() {
        // x1 * x2 * (x1 + x2 - 1), normalized at z = (1/3, 1/3).
        let p = Poly::x1() * Poly::x2() * (Poly::x1() + Poly::x2() - Poly::one());
        let z = Point::from_fracs((1, 3), (1, 3));
        let f = linear_factors(&p, &z, &[]).unwrap();
        assert_eq!(f.factor_count(), 3);
        assert!(f.splits_completely());
        assert_eq!(f.expand(), p);
        for (m, _) in &f.factors {
            assert!(m.evaluate(&z).is_one());
        }
    }

    #[test]
    fn positive_poly_has_no_factors() {
        let p = Poly::from_terms([
            (Monomial::new(2, 0), s(1)),
            (Monomial::new(0, 2), s(1)),
            (Monomial::one(), s(1)),
        ]);
        let f = linear_factors(&p, &Point::from_ints(0, 0), &[]).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.residual, p);
        assert!(f.scalar.is_one());
    }

    #[test]
    fn double_factor_has_multiplicity_two() {
        let k = Poly::x1() - Poly::x2();
        let p = &k * &k;
        let f = linear_factors(&p, &Point::from_ints(1, 0), &[]).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0].1, 2);
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn vertical_and_horizontal_factors() {
        // (x1 - 2) * (x2 + 3) * (x2 - x1)
        let p = (Poly::x1() - Poly::constant(s(2)))
            * (Poly::x2() + Poly::constant(s(3)))
            * (Poly::x2() - Poly::x1());
        let f = linear_factors(&p, &Point::from_ints(7, 11), &[]).unwrap();
        assert_eq!(f.factor_count(), 3);
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn hints_do_not_change_the_result() {
        let p = Poly::x1() * (Poly::x1() + Poly::x2() - Poly::one());
        let z = Point::from_ints(2, 5);
        let hint = LinearForm::from_ints(-1, 1, 1);
        let with = linear_factors(&p, &z, &[hint]).unwrap();
        let without = linear_factors(&p, &z, &[]).unwrap();
        assert_eq!(with.expand(), p);
        assert_eq!(without.expand(), p);
        assert_eq!(with.factor_count(), without.factor_count());
    }

    #[test]
    fn mixed_factorable_and_irreducible() {
        // x1 * (x1^2 + x2^2 + 1), leading coefficient 5.
        let irr = Poly::from_terms([
            (Monomial::new(2, 0), s(1)),
            (Monomial::new(0, 2), s(1)),
            (Monomial::one(), s(1)),
        ]);
        let p = Poly::x1().scale(&s(5)) * &irr;
        let f = linear_factors(&p, &Point::from_ints(1, 1), &[]).unwrap();
        assert_eq!(f.factor_count(), 1);
        assert_eq!(f.residual, irr);
        assert_eq!(f.expand(), p);
    }
}
