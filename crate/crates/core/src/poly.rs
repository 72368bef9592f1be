//! Sparse bivariate polynomials over the rationals.
//!
//! The canonical monomial order is graded, with ties broken by the exponent
//! of `x1` (so `x1^d` is the largest monomial of degree `d`). Serialized
//! polynomials list terms leading-first in this order, which keeps all JSON
//! output reproducible.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A power product `x1^e1 * x2^e2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub e1: u32,
    pub e2: u32,
}

impl Monomial {
    pub fn new(e1: u32, e2: u32) -> Self {
        Monomial { e1, e2 }
    }

    pub fn one() -> Self {
        Monomial { e1: 0, e2: 0 }
    }

    pub fn degree(&self) -> u32 {
        self.e1 + self.e2
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.e1 + other.e1, self.e2 + other.e2)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.e1 <= other.e1 && self.e2 <= other.e2
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial::new(other.e1 - self.e1, other.e2 - self.e2)
    }
}

/// Graded order, ties by `e1`; the maximum is the leading monomial.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.e1).cmp(&(other.degree(), other.e1))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.e1, self.e2) {
            (0, 0) => write!(f, "1"),
            (e1, 0) => write_var(f, "x1", e1),
            (0, e2) => write_var(f, "x2", e2),
            (e1, e2) => {
                write_var(f, "x1", e1)?;
                f.write_str("*")?;
                write_var(f, "x2", e2)
            }
        }
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: &str, e: u32) -> fmt::Result {
    if e == 1 {
        f.write_str(name)
    } else {
        write!(f, "{name}^{e}")
    }
}

/// All monomials of total degree at most `n`, leading-first in the canonical
/// order (degree descending, then `e1` descending).
pub fn monomials_upto(n: usize) -> Vec<Monomial> {
    let mut out = Vec::with_capacity((n + 1) * (n + 2) / 2);
    for d in (0..=n as u32).rev() {
        for e1 in (0..=d).rev() {
            out.push(Monomial::new(e1, d - e1));
        }
    }
    out
}

/// Monomials of total degree exactly `d`, `e1` descending.
pub fn monomials_of_degree(d: usize) -> Vec<Monomial> {
    (0..=d as u32)
        .rev()
        .map(|e1| Monomial::new(e1, d as u32 - e1))
        .collect()
}

/// A point of the rational plane.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Scalar::from_int(x), Scalar::from_int(y))
    }

    pub fn from_fracs(x: (i64, i64), y: (i64, i64)) -> Self {
        Point::new(Scalar::from_frac(x.0, x.1), Scalar::from_frac(y.0, y.1))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.x, &self.y).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (x, y) = <(Scalar, Scalar)>::deserialize(d)?;
        Ok(Point::new(x, y))
    }
}

/// A sparse bivariate polynomial. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn x1() -> Self {
        Poly::monomial(Monomial::new(1, 0), Scalar::one())
    }

    pub fn x2() -> Self {
        Poly::monomial(Monomial::new(0, 1), Scalar::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(iter: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` is the degree of the zero polynomial, kept as a
    /// distinct sentinel so it can never be compared as an ordinary integer.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn is_constant(&self) -> bool {
        self.degree().unwrap_or(0) == 0
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Terms leading-first.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// The homogeneous component of top degree. Errors on the zero polynomial.
    pub fn leading_form(&self) -> Result<Poly> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_component(d))
    }

    pub fn homogeneous_component(&self, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    /// Exact evaluation.
    pub fn evaluate(&self, p: &Point) -> Scalar {
        let dx = self.terms.keys().map(|m| m.e1).max().unwrap_or(0);
        let dy = self.terms.keys().map(|m| m.e2).max().unwrap_or(0);
        let xs = powers(&p.x, dx);
        let ys = powers(&p.y, dy);
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            acc += &(c * &xs[m.e1 as usize] * &ys[m.e2 as usize]);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes polynomials for both variables.
    pub fn compose(&self, x1_image: &Poly, x2_image: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let t = x1_image.pow(m.e1) * x2_image.pow(m.e2);
            acc += &t.scale(c);
        }
        acc
    }

    /// Restriction to the parametrized line `base + t * dir`, as a univariate
    /// polynomial in `t` (dense coefficients, constant first).
    pub fn restrict_to_line(&self, base: &Point, dir: &Point) -> Vec<Scalar> {
        let x_img = Poly::from_terms([
            (Monomial::one(), base.x.clone()),
            (Monomial::new(1, 0), dir.x.clone()),
        ]);
        let y_img = Poly::from_terms([
            (Monomial::one(), base.y.clone()),
            (Monomial::new(1, 0), dir.y.clone()),
        ]);
        let restricted = self.compose(&x_img, &y_img);
        let deg = restricted.degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Scalar::zero(); deg + 1];
        for (m, c) in restricted.terms() {
            debug_assert_eq!(m.e2, 0);
            coeffs[m.e1 as usize] = c.clone();
        }
        coeffs
    }

    /// Exact polynomial division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        let (dm, dc) = {
            let (m, c) = divisor.leading_term().unwrap();
            (*m, c.clone())
        };
        while let Some((rm, rc)) = rem.leading_term() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = dm.quotient(rm);
            let qc = rc / &dc;
            rem -= &divisor.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Coefficient vector with respect to the monomials of degree `<= n`,
    /// leading-first. Errors if the polynomial sticks out of that space.
    pub fn coeff_vec(&self, n: usize) -> Result<Vec<Scalar>> {
        if let Some(d) = self.degree() {
            if d as usize > n {
                return Err(Error::DegreeBound {
                    bound: n,
                    got: d as usize,
                });
            }
        }
        Ok(monomials_upto(n).iter().map(|m| self.coeff(m)).collect())
    }

    pub fn from_coeff_vec(v: &[Scalar], n: usize) -> Poly {
        Poly::from_terms(
            monomials_upto(n)
                .into_iter()
                .zip(v.iter().cloned())
                .map(|(m, c)| (m, c)),
        )
    }
}

fn powers(base: &Scalar, up_to: u32) -> Vec<Scalar> {
    let mut v = Vec::with_capacity(up_to as usize + 1);
    v.push(Scalar::one());
    for i in 0..up_to as usize {
        v.push(&v[i] * base);
    }
    v
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m.mul(m2), c * c2);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Mul<&Poly> for Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        &self * rhs
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    e1: u32,
    e2: u32,
    coeff: Scalar,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermDto> = self
            .terms_desc()
            .map(|(m, c)| TermDto {
                e1: m.e1,
                e2: m.e2,
                coeff: c.clone(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermDto>::deserialize(d)?;
        let mut seen = std::collections::BTreeSet::new();
        for t in &terms {
            if !seen.insert((t.e1, t.e2)) {
                return Err(de::Error::custom(format!(
                    "duplicate monomial x1^{}*x2^{}",
                    t.e1, t.e2
                )));
            }
        }
        Ok(Poly::from_terms(
            terms
                .into_iter()
                .map(|t| (Monomial::new(t.e1, t.e2), t.coeff)),
        ))
    }
}

/// A polynomial of degree at most one, `a0 + a1*x1 + a2*x2`. Used as a line
/// equation it must satisfy `(a1, a2) != (0, 0)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearForm {
    pub a0: Scalar,
    pub a1: Scalar,
    pub a2: Scalar,
}

impl LinearForm {
    pub fn new(a0: Scalar, a1: Scalar, a2: Scalar) -> Self {
        LinearForm { a0, a1, a2 }
    }

    pub fn from_ints(a0: i64, a1: i64, a2: i64) -> Self {
        LinearForm::new(
            Scalar::from_int(a0),
            Scalar::from_int(a1),
            Scalar::from_int(a2),
        )
    }

    /// The vertical line `x1 = c`.
    pub fn vertical(c: Scalar) -> Self {
        LinearForm::new(-c, Scalar::one(), Scalar::zero())
    }

    pub fn is_constant(&self) -> bool {
        self.a1.is_zero() && self.a2.is_zero()
    }

    pub fn evaluate(&self, p: &Point) -> Scalar {
        &self.a0 + &self.a1 * &p.x + &self.a2 * &p.y
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_terms([
            (Monomial::one(), self.a0.clone()),
            (Monomial::new(1, 0), self.a1.clone()),
            (Monomial::new(0, 1), self.a2.clone()),
        ])
    }

    pub fn from_poly(p: &Poly) -> Option<LinearForm> {
        if p.degree().unwrap_or(0) > 1 {
            return None;
        }
        Some(LinearForm::new(
            p.coeff(&Monomial::one()),
            p.coeff(&Monomial::new(1, 0)),
            p.coeff(&Monomial::new(0, 1)),
        ))
    }

    pub fn scale(&self, c: &Scalar) -> LinearForm {
        LinearForm::new(&self.a0 * c, &self.a1 * c, &self.a2 * c)
    }

    /// Canonical representative of the line: the first nonzero coefficient
    /// among `(a1, a2, a0)` is scaled to one.
    pub fn normalized(&self) -> LinearForm {
        let lead = [&self.a1, &self.a2, &self.a0]
            .into_iter()
            .find(|c| !c.is_zero())
            .cloned()
            .expect("zero linear form has no normalization");
        self.scale(&lead.recip())
    }

    /// Key for exact set semantics on normalized lines.
    pub fn canonical_key(&self) -> (Scalar, Scalar, Scalar) {
        let n = self.normalized();
        (n.a1, n.a2, n.a0)
    }

    /// A direction vector of the line `self = 0`.
    pub fn direction(&self) -> Point {
        Point::new(-&self.a2, self.a1.clone())
    }

    /// Some point on the line `self = 0`.
    pub fn point_on(&self) -> Result<Point> {
        if self.is_constant() {
            return Err(Error::ConstantLinearForm(self.to_string()));
        }
        Ok(if !self.a1.is_zero() {
            Point::new(-&self.a0 / &self.a1, Scalar::zero())
        } else {
            Point::new(Scalar::zero(), -&self.a0 / &self.a2)
        })
    }

    /// Intersection point of two lines; `None` if parallel or degenerate.
    pub fn intersect(&self, other: &LinearForm) -> Option<Point> {
        let det = &self.a1 * &other.a2 - &self.a2 * &other.a1;
        if det.is_zero() {
            return None;
        }
        // a1 x + a2 y = -a0
        let x = (-&self.a0 * &other.a2 - &self.a2 * (-&other.a0)) / det.clone();
        let y = (&self.a1 * (-&other.a0) - (-&self.a0) * &other.a1) / det;
        Some(Point::new(x, y))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl Serialize for LinearForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.a0, &self.a1, &self.a2).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinearForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (a0, a1, a2) = <(Scalar, Scalar, Scalar)>::deserialize(d)?;
        Ok(LinearForm::new(a0, a1, a2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn monomial_order_is_graded_with_x1_tiebreak() {
        let ms = monomials_upto(2);
        let printed: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(
            printed,
            ["x1^2", "x1*x2", "x2^2", "x1", "x2", "1"],
            "leading-first listing"
        );
    }

    #[test]
    fn cancellation_and_annihilator() {
        let p = Poly::x1() + Poly::x2();
        let q = Poly::x1() - Poly::x2();
        assert_eq!(&p + &q, Poly::x1().scale(&s(2)));
        assert_eq!(&p * &Poly::zero(), Poly::zero());
    }

    #[test]
    fn hand_expansion() {
        let a = Poly::x1() + Poly::one();
        let b = Poly::x1() - Poly::one();
        let expect = Poly::from_terms([
            (Monomial::new(2, 0), s(1)),
            (Monomial::one(), s(-1)),
        ]);
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn evaluation() {
        let p = Poly::from_terms([(Monomial::new(2, 0), s(1)), (Monomial::new(0, 1), s(1))]);
        assert_eq!(p.evaluate(&Point::from_ints(0, 0)), s(0));
        assert_eq!(Poly::one().evaluate(&Point::from_ints(7, -3)), s(1));
        let xy = Poly::monomial(Monomial::new(1, 1), s(1));
        assert_eq!(
            xy.evaluate(&Point::from_fracs((1, 2), (1, 3))),
            Scalar::from_frac(1, 6)
        );
    }

    #[test]
    fn leading_forms() {
        let p = Poly::from_terms([
            (Monomial::new(2, 0), s(1)),
            (Monomial::new(0, 1), s(1)),
            (Monomial::one(), s(1)),
        ]);
        assert_eq!(p.leading_form().unwrap(), Poly::monomial(Monomial::new(2, 0), s(1)));

        let q = Poly::from_terms([
            (Monomial::new(1, 1), s(1)),
            (Monomial::new(0, 2), s(1)),
            (Monomial::new(1, 0), s(1)),
        ]);
        let top = Poly::from_terms([(Monomial::new(1, 1), s(1)), (Monomial::new(0, 2), s(1))]);
        assert_eq!(q.leading_form().unwrap(), top);

        assert_eq!(Poly::constant(s(7)).leading_form().unwrap(), Poly::constant(s(7)));
        assert!(matches!(
            Poly::zero().leading_form(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn exact_division() {
        // (x1^2 - x2^2) / (x1 - x2) = x1 + x2
        let p = Poly::from_terms([(Monomial::new(2, 0), s(1)), (Monomial::new(0, 2), s(-1))]);
        let k = Poly::x1() - Poly::x2();
        assert_eq!(p.div_exact(&k).unwrap(), Poly::x1() + Poly::x2());

        let q = Poly::from_terms([(Monomial::new(2, 0), s(1)), (Monomial::one(), s(1))]);
        assert!(q.div_exact(&Poly::x1()).is_none());

        assert_eq!(Poly::zero().div_exact(&Poly::x1()).unwrap(), Poly::zero());
    }

    #[test]
    fn restriction_to_line() {
        // p = x1 * x2 along (t, 1 + t): t + t^2
        let p = Poly::monomial(Monomial::new(1, 1), s(1));
        let coeffs = p.restrict_to_line(&Point::from_ints(0, 1), &Point::from_ints(1, 1));
        assert_eq!(coeffs, vec![s(0), s(1), s(1)]);
    }

    #[test]
    fn json_terms_leading_first() {
        let p = Poly::from_terms([
            (Monomial::one(), s(1)),
            (Monomial::new(2, 0), s(3)),
            (Monomial::new(1, 1), s(-2)),
        ]);
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(
            j,
            r#"[{"e1":2,"e2":0,"coeff":"3"},{"e1":1,"e2":1,"coeff":"-2"},{"e1":0,"e2":0,"coeff":"1"}]"#
        );
        let back: Poly = serde_json::from_str(&j).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn line_helpers() {
        let k = LinearForm::from_ints(-1, 1, 1); // x1 + x2 - 1
        assert_eq!(k.evaluate(&Point::from_ints(1, 0)), s(0));
        let n = LinearForm::from_ints(-2, 2, 2).normalized();
        assert_eq!(n, LinearForm::from_ints(-1, 1, 1));
        let horizontal = LinearForm::from_ints(0, 0, 1);
        let vertical = LinearForm::vertical(s(3));
        assert_eq!(
            horizontal.intersect(&vertical),
            Some(Point::from_ints(3, 0))
        );
        assert_eq!(horizontal.intersect(&LinearForm::from_ints(5, 0, 2)), None);
    }
}
