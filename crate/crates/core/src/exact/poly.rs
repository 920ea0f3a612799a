use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Signed, Zero};

use super::vars::VarNames;

/// Exponent vector with trailing zeros trimmed, so `x1` in two and in three
/// variables is the same monomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Self(exps)
    }

    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        Self(
            (0..n)
                .map(|i| self.exponent(i) + other.exponent(i))
                .collect(),
        )
    }
}

/// Graded lexicographic order with `x1 > x2 > ...`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            (0..n)
                .map(|i| self.exponent(i).cmp(&other.exponent(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Result of a homogeneity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    Zero,
    Degree(u32),
    Inhomogeneous,
}

impl Homogeneity {
    /// Whether a polynomial with this homogeneity may sit where degree `d`
    /// is required. Negative required degrees only admit zero.
    pub fn fits(self, d: i64) -> bool {
        match self {
            Homogeneity::Zero => true,
            Homogeneity::Degree(k) => d >= 0 && k as i64 == d,
            Homogeneity::Inhomogeneous => false,
        }
    }
}

/// Multivariate polynomial over the rationals. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// The variable with zero-based index `i` (displayed as `x{i+1}` by
    /// default).
    pub fn var(i: usize) -> Self {
        Self::term(BigRational::one(), Monomial::var(i))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Highest total degree among the terms; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) if degs.all(|e| e == d) => Homogeneity::Degree(d),
            Some(_) => Homogeneity::Inhomogeneous,
        }
    }

    /// Number of variables actually occurring (one past the highest index).
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn display<'a>(&'a self, names: &'a VarNames) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    names: &'a VarNames,
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, names: &VarNames) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", names.name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, m, self.names)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = VarNames::default();
        write!(f, "{}", self.display(&names))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
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
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
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
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
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

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        let mut acc = Poly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(i: usize) -> Poly {
        Poly::var(i)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(0) + &x(1)) * &(&x(0) - &x(1));
        assert_eq!(p, &x(0).pow(2) - &x(1).pow(2));
        assert_eq!(p.to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn homogeneity_cases() {
        let a = &x(0).pow(2) + &(&x(0) * &x(1));
        assert_eq!(a.homogeneity(), Homogeneity::Degree(2));
        let b = &x(0) + &x(1).pow(2);
        assert_eq!(b.homogeneity(), Homogeneity::Inhomogeneous);
        assert_eq!(Poly::zero().homogeneity(), Homogeneity::Zero);
        assert!(Homogeneity::Zero.fits(-3));
        assert!(!Homogeneity::Degree(0).fits(-1));
    }

    #[test]
    fn display_orders_grlex_and_signs() {
        let p = &(&x(0).pow(2) * &x(1)).scale_int(3) - &x(2);
        assert_eq!(p.to_string(), "3*x1^2*x2 - x3");
        assert_eq!((-&x(0)).to_string(), "-x1");
        assert_eq!(Poly::from_int(-4).to_string(), "-4");
        assert_eq!(Poly::zero().to_string(), "0");
        let half = Poly::constant(BigRational::new(1.into(), 2.into()));
        assert_eq!((&half * &x(1)).to_string(), "1/2*x2");
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let m = |v: Vec<u32>| Monomial::new(v);
        assert!(m(vec![0, 0, 2]) > m(vec![1]));
        assert!(m(vec![1, 1]) > m(vec![0, 2]));
        assert!(m(vec![2, 0, 0]) == m(vec![2]));
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-3i64..4, 0u32..3, 0u32..3, 0u32..2), 0..5).prop_map(|ts| {
            ts.into_iter()
                .map(|(c, a, b, d)| {
                    Poly::term(
                        BigRational::from_integer(c.into()),
                        Monomial::new(vec![a, b, d]),
                    )
                })
                .sum()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }
    }
}
