//! The exact ring Z\[q^{±1}, s^{±1}\]\[t\] and its fraction field.
//!
//! `LPoly3` is a term map from exponent triples (a, b, c) — a for q, b for s,
//! both of either sign, and c ≥ 0 for t — to nonzero integer coefficients.
//! `LRat` is a formal quotient; equality is decided by cross-multiplication,
//! with no multivariate GCD anywhere. Specialization lands in a cyclotomic
//! field and is the bridge between the generic three-variable families and
//! their root-of-unity counterparts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cyclo::CycNum;
use crate::linalg::{FieldElem, RingElem};
use crate::{Error, Result};

/// Exponents of (q, s, t); t never carries a negative exponent.
pub type Exps = (i32, i32, u32);

/// An element of Z\[q^{±1}, s^{±1}\]\[t\].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LPoly3 {
    terms: BTreeMap<Exps, BigInt>,
}

impl LPoly3 {
    pub fn zero() -> Self {
        LPoly3::default()
    }

    pub fn one() -> Self {
        LPoly3::mono(0, 0, 0, 1)
    }

    /// The monomial coeff · q^a s^b t^c.
    pub fn mono(a: i32, b: i32, c: u32, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert((a, b, c), BigInt::from(coeff));
        }
        LPoly3 { terms }
    }

    pub fn q_pow(a: i32) -> Self {
        Self::mono(a, 0, 0, 1)
    }

    pub fn s_pow(b: i32) -> Self {
        Self::mono(0, b, 0, 1)
    }

    pub fn t() -> Self {
        Self::mono(0, 0, 1, 1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::mono(0, 0, 0, c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest t-exponent appearing (0 for constants and zero).
    pub fn t_degree(&self) -> u32 {
        self.terms.keys().map(|&(_, _, c)| c).max().unwrap_or(0)
    }

    fn insert_term(&mut self, e: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
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

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(*e, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LPoly3 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = LPoly3::zero();
        for ((a1, b1, c1), k1) in &self.terms {
            for ((a2, b2, c2), k2) in &rhs.terms {
                out.insert_term((a1 + a2, b1 + b2, c1 + c2), k1 * k2);
            }
        }
        out
    }

    /// Exact evaluation at a point of a cyclotomic field.
    pub fn specialize(&self, q0: &CycNum, s0: &CycNum, t0: &CycNum) -> CycNum {
        let field = q0.field().clone();
        let mut acc = field.zero();
        for ((a, b, c), k) in &self.terms {
            let mut term = field.from_rational(num_rational::BigRational::from_integer(k.clone()));
            term = &term * &q0.pow(*a as i64);
            term = &term * &s0.pow(*b as i64);
            term = &term * &t0.pow(*c as i64);
            acc = &acc + &term;
        }
        acc
    }

    /// Substitute q = s = 1 (t stays symbolic); used by the s = q = 1 family.
    pub fn at_q1_s1(&self) -> LPoly3 {
        let mut out = LPoly3::zero();
        for ((_, _, c), k) in &self.terms {
            out.insert_term((0, 0, *c), k.clone());
        }
        out
    }
}

impl std::fmt::Debug for LPoly3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, b, c), k) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{k}")?;
            if *a != 0 {
                write!(f, "*q^{a}")?;
            }
            if *b != 0 {
                write!(f, "*s^{b}")?;
            }
            if *c != 0 {
                write!(f, "*t^{c}")?;
            }
        }
        Ok(())
    }
}

impl RingElem for LPoly3 {
    fn zero_like(&self) -> Self {
        LPoly3::zero()
    }
    fn one_like(&self) -> Self {
        LPoly3::one()
    }
    fn is_zero(&self) -> bool {
        LPoly3::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

/// A formal quotient of Laurent polynomials with nonzero denominator.
/// Equality is exact via cross-multiplication; no GCD normalization is
/// performed beyond stripping common monomial and integer content.
#[derive(Clone, Debug)]
pub struct LRat {
    num: LPoly3,
    den: LPoly3,
}

impl LRat {
    pub fn new(num: LPoly3, den: LPoly3) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("LRat::new"));
        }
        let mut out = LRat { num, den };
        out.reduce_content();
        Ok(out)
    }

    pub fn from_poly(p: LPoly3) -> Self {
        LRat {
            num: p,
            den: LPoly3::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(LPoly3::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LPoly3::one())
    }

    pub fn num(&self) -> &LPoly3 {
        &self.num
    }

    pub fn den(&self) -> &LPoly3 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Strip the common monomial content from num and den, and the common
    /// integer content of all coefficients. Keeps growth bounded in
    /// elimination without any multivariate GCD, and flips signs so the
    /// denominator's leading coefficient is positive.
    fn reduce_content(&mut self) {
        if self.num.is_zero() {
            self.den = LPoly3::one();
            return;
        }
        let strip = |p: &LPoly3| -> (i32, i32, u32) {
            let mut it = p.terms.keys();
            let first = *it.next().unwrap();
            it.fold(first, |(a, b, c), &(a2, b2, c2)| {
                (a.min(a2), b.min(b2), c.min(c2))
            })
        };
        let (na, nb, nc) = strip(&self.num);
        let (da, db, dc) = strip(&self.den);
        // common q/s monomial may be negative; t only non-negative
        let (ca, cb, cc) = (na.min(da), nb.min(db), nc.min(dc));
        let shift = |p: &LPoly3| LPoly3 {
            terms: p
                .terms
                .iter()
                .map(|(&(a, b, c), k)| ((a - ca, b - cb, c - cc), k.clone()))
                .collect(),
        };
        self.num = shift(&self.num);
        self.den = shift(&self.den);
        let mut content: Option<BigInt> = None;
        for k in self.num.terms.values().chain(self.den.terms.values()) {
            let a = k.abs();
            content = Some(match content {
                None => a,
                Some(g) => num_integer::Integer::gcd(&g, &a),
            });
        }
        if let Some(g) = content {
            if !g.is_zero() && g != BigInt::from(1) {
                let div = |p: &LPoly3| LPoly3 {
                    terms: p.terms.iter().map(|(e, k)| (*e, k / &g)).collect(),
                };
                self.num = div(&self.num);
                self.den = div(&self.den);
            }
        }
        if self
            .den
            .terms
            .values()
            .next_back()
            .is_some_and(Signed::is_negative)
        {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        let mut out = LRat { num, den };
        out.reduce_content();
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        LRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = LRat {
            num: self.num.mul(&rhs.num),
            den: self.den.mul(&rhs.den),
        };
        out.reduce_content();
        out
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero("LRat::div"));
        }
        let mut out = LRat {
            num: self.num.mul(&rhs.den),
            den: self.den.mul(&rhs.num),
        };
        out.reduce_content();
        Ok(out)
    }

    /// Exact evaluation; the denominator must not specialize to zero.
    pub fn specialize(&self, q0: &CycNum, s0: &CycNum, t0: &CycNum) -> Result<CycNum> {
        let d = self.den.specialize(q0, s0, t0);
        if d.is_zero() {
            return Err(Error::ZeroDenominator(format!("{:?}", self.den)));
        }
        let n = self.num.specialize(q0, s0, t0);
        Ok(&n * &d.inv().expect("checked nonzero"))
    }
}

impl PartialEq for LRat {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl RingElem for LRat {
    fn zero_like(&self) -> Self {
        LRat::zero()
    }
    fn one_like(&self) -> Self {
        LRat::one()
    }
    fn is_zero(&self) -> bool {
        LRat::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

impl FieldElem for LRat {
    fn inv_ref(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        let mut out = LRat {
            num: self.den.clone(),
            den: self.num.clone(),
        };
        out.reduce_content();
        out
    }
}
