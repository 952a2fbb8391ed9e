//! Exact arithmetic in the cyclotomic field Q(ζ_{4r}).
//!
//! The field houses q = ζ_{4r}², q^{1/2} = ζ_{4r} and s = q^{r−1}, together
//! with the quantum numbers {x} = q^x − q^{−x}, \[x\] = {x}/{1}, quantum
//! factorials and binomials. Elements are coefficient vectors in the power
//! basis of ζ_{4r}, reduced modulo the 4r-th cyclotomic polynomial, so the
//! zero test is exact and Q(ζ_{4r}) really is a field.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::{FieldElem, RingElem};
use crate::{Error, Result};

type Poly = Vec<BigRational>;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn poly_trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    poly_trim(&mut out);
    out
}

/// Exact division with remainder in Q[x].
fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Poly, Poly) {
    assert!(!den.is_empty(), "polynomial division by zero");
    let mut rem: Poly = num.to_vec();
    poly_trim(&mut rem);
    let dd = den.len() - 1;
    let lead = den.last().unwrap().clone();
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    while rem.len() > dd {
        let k = rem.len() - 1 - dd;
        let c = rem.last().unwrap() / &lead;
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            let t = &c * d;
            rem[k + i] -= t;
        }
        poly_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    poly_trim(&mut quot);
    (quot, rem)
}

/// The m-th cyclotomic polynomial by the standard recursion:
/// Φ_m = (x^m − 1) / Π_{d | m, d < m} Φ_d.
fn cyclotomic_poly(m: u32) -> Poly {
    fn build(m: u32, memo: &mut HashMap<u32, Poly>) -> Poly {
        if let Some(p) = memo.get(&m) {
            return p.clone();
        }
        let mut num = vec![BigRational::zero(); m as usize + 1];
        num[0] = -BigRational::one();
        num[m as usize] = BigRational::one();
        let mut acc = num;
        for d in 1..m {
            if m.is_multiple_of(d) {
                let phi_d = build(d, memo);
                let (q, r) = poly_divmod(&acc, &phi_d);
                assert!(r.is_empty(), "cyclotomic recursion left a remainder");
                acc = q;
            }
        }
        memo.insert(m, acc.clone());
        acc
    }
    build(m, &mut HashMap::new())
}

struct FieldInner {
    r: u32,
    degree: usize,
    /// Monic Φ_{4r}, coefficients low to high, length degree + 1.
    modulus: Poly,
    /// ζ^k reduced mod Φ_{4r}, as dense length-`degree` vectors, k in [0, 4r).
    zeta_pows: Vec<Vec<BigRational>>,
}

/// The cyclotomic field Q(ζ_{4r}). Cheap to clone; instances for the same r
/// share their tables.
#[derive(Clone)]
pub struct CycField(Arc<FieldInner>);

impl std::fmt::Debug for CycField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CycField(r = {}, degree = {})", self.r(), self.degree())
    }
}

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.0.r == other.0.r
    }
}

static FIELDS: OnceLock<Mutex<HashMap<u32, CycField>>> = OnceLock::new();

/// Construct (or fetch the memoized) field Q(ζ_{4r}).
pub fn make_field(r: u32) -> Result<CycField> {
    if r < 2 {
        return Err(Error::RankTooSmall(r));
    }
    let cache = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(f) = guard.get(&r) {
        return Ok(f.clone());
    }
    let m = 4 * r;
    let modulus = cyclotomic_poly(m);
    let degree = modulus.len() - 1;
    let mut zeta_pows: Vec<Vec<BigRational>> = Vec::with_capacity(m as usize);
    let mut cur = vec![BigRational::zero(); degree];
    cur[0] = BigRational::one();
    zeta_pows.push(cur.clone());
    for _ in 1..m {
        // multiply by zeta: shift, then reduce the single overflow term
        let top = cur[degree - 1].clone();
        for i in (1..degree).rev() {
            cur[i] = cur[i - 1].clone();
        }
        cur[0] = BigRational::zero();
        if !top.is_zero() {
            // zeta^degree = -(modulus[0..degree]) since modulus is monic
            for i in 0..degree {
                let t = &top * &modulus[i];
                cur[i] -= t;
            }
        }
        zeta_pows.push(cur.clone());
    }
    let field = CycField(Arc::new(FieldInner {
        r,
        degree,
        modulus,
        zeta_pows,
    }));
    guard.insert(r, field.clone());
    Ok(field)
}

impl CycField {
    pub fn r(&self) -> u32 {
        self.0.r
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Coefficients of Φ_{4r}, low to high.
    pub fn modulus(&self) -> &[BigRational] {
        &self.0.modulus
    }

    pub fn zero(&self) -> CycNum {
        CycNum {
            field: self.clone(),
            coeffs: vec![BigRational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> CycNum {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, c: BigRational) -> CycNum {
        let mut coeffs = vec![BigRational::zero(); self.degree()];
        coeffs[0] = c;
        CycNum {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn from_i64(&self, c: i64) -> CycNum {
        self.from_rational(rat(c))
    }

    /// ζ_{4r}^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> CycNum {
        let m = 4 * self.0.r as i64;
        let k = k.rem_euclid(m) as usize;
        CycNum {
            field: self.clone(),
            coeffs: self.0.zeta_pows[k].clone(),
        }
    }

    pub fn zeta(&self) -> CycNum {
        self.zeta_pow(1)
    }

    /// q = ζ_{4r}², the primitive 2r-th root of unity e^{iπ/r}.
    pub fn q(&self) -> CycNum {
        self.q_pow(1)
    }

    pub fn q_pow(&self, k: i64) -> CycNum {
        self.zeta_pow(2 * k)
    }

    /// s = q^{r−1}.
    pub fn s(&self) -> CycNum {
        self.s_pow(1)
    }

    pub fn s_pow(&self, k: i64) -> CycNum {
        self.zeta_pow(2 * (self.0.r as i64 - 1) * k)
    }

    /// {x} = q^x − q^{−x}.
    pub fn qnum(&self, x: i64) -> CycNum {
        &self.q_pow(x) - &self.q_pow(-x)
    }

    /// \[x\] = {x}/{1}. The denominator {1} never vanishes for r ≥ 2.
    pub fn qint(&self, x: i64) -> CycNum {
        let num = self.qnum(x);
        let den = self.qnum(1);
        &num * &den.inv().expect("{1} is nonzero for r >= 2")
    }

    /// \[n\]! for 0 ≤ n < r.
    pub fn qfact(&self, n: i64) -> Result<CycNum> {
        if !(0..self.0.r as i64).contains(&n) {
            return Err(Error::QRangeError {
                n,
                m: 0,
                r: self.0.r,
            });
        }
        let mut acc = self.one();
        for k in 1..=n {
            acc = &acc * &self.qint(k);
        }
        Ok(acc)
    }

    /// Quantum binomial \[n choose m\] for 0 ≤ m ≤ n < r.
    pub fn qbinom(&self, n: i64, m: i64) -> Result<CycNum> {
        if !(0 <= m && m <= n && n < self.0.r as i64) {
            return Err(Error::QRangeError { n, m, r: self.0.r });
        }
        let num = self.qfact(n)?;
        let den = &self.qfact(m)? * &self.qfact(n - m)?;
        Ok(&num * &den.inv().expect("[m]![n-m]! is nonzero for n < r"))
    }
}

/// An element of Q(ζ_{4r}) in the power basis of ζ_{4r}, reduced mod Φ_{4r}.
#[derive(Clone)]
pub struct CycNum {
    field: CycField,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    pub fn field(&self) -> &CycField {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn from_coeffs(field: &CycField, coeffs: Vec<BigRational>) -> Result<CycNum> {
        if coeffs.len() != field.degree() {
            return Err(Error::BadParameter(format!(
                "coefficient vector must have length {} (got {})",
                field.degree(),
                coeffs.len()
            )));
        }
        Ok(CycNum {
            field: field.clone(),
            coeffs,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check_field(&self, rhs: &CycNum) {
        assert_eq!(
            self.field.r(),
            rhs.field.r(),
            "operands belong to different cyclotomic fields"
        );
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the modulus.
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("CycNum::inv"));
        }
        // extended Euclid: r0 = modulus, r1 = self; track s-coefficients of self
        let mut r0: Poly = self.field.0.modulus.clone();
        let mut r1: Poly = self.coeffs.clone();
        poly_trim(&mut r1);
        let mut t0: Poly = Vec::new();
        let mut t1: Poly = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, rem) = poly_divmod(&r0, &r1);
            let qt1 = poly_mul(&q, &t1);
            let mut t2 = t0.clone();
            t2.resize(t2.len().max(qt1.len()), BigRational::zero());
            for (i, v) in qt1.iter().enumerate() {
                t2[i] -= v;
            }
            poly_trim(&mut t2);
            r0 = r1;
            r1 = rem;
            t0 = t1;
            t1 = t2;
        }
        // r0 = gcd, a nonzero constant since the modulus is irreducible
        assert_eq!(r0.len(), 1, "gcd with irreducible modulus must be constant");
        let c = r0[0].clone();
        let mut out = vec![BigRational::zero(); self.field.degree()];
        for (i, v) in t0.iter().enumerate() {
            out[i] = v / &c;
        }
        Ok(CycNum {
            field: self.field.clone(),
            coeffs: out,
        })
    }

    pub fn pow(&self, k: i64) -> CycNum {
        let base = if k < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = k.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        acc
    }

    /// Evaluate in C at ζ_{4r} = e^{iπ/(2r)}.
    pub fn to_complex(&self) -> Complex64 {
        let theta = std::f64::consts::PI / (2.0 * self.field.r() as f64);
        let zeta = Complex64::new(0.0, theta).exp();
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            let cf = rational_to_f64(c);
            acc = acc * zeta + Complex64::new(cf, 0.0);
        }
        acc
    }
}

fn rational_to_f64(c: &BigRational) -> f64 {
    let num = c.numer();
    let den = c.denom();
    // desk-scale coefficients fit comfortably in f64
    let nf: f64 = num.to_string().parse().unwrap_or(if num.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    });
    let df: f64 = den.to_string().parse().unwrap_or(f64::INFINITY);
    nf / df
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.r() == other.field.r() && self.coeffs == other.coeffs
    }
}

impl std::fmt::Debug for CycNum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*z^{i}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl std::ops::Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        self.check_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycNum {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl std::ops::Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self.check_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycNum {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl std::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl std::ops::Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        self.check_field(rhs);
        let deg = self.field.degree();
        let mut prod = vec![BigRational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let mut out = prod[..deg].to_vec();
        for (k, c) in prod.iter().enumerate().skip(deg) {
            if c.is_zero() {
                continue;
            }
            // zeta^k reduced, k < 2*deg - 1 <= 4r - 1
            for (i, z) in self.field.0.zeta_pows[k].iter().enumerate() {
                if !z.is_zero() {
                    out[i] += c * z;
                }
            }
        }
        CycNum {
            field: self.field.clone(),
            coeffs: out,
        }
    }
}

impl RingElem for CycNum {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl FieldElem for CycNum {
    fn inv_ref(&self) -> Self {
        self.inv().expect("inverse of zero cyclotomic number")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn field_construction() {
        // r=2: Phi_8 = x^4 + 1, degree phi(8) = 4
        let f = make_field(2).unwrap();
        assert_eq!(f.degree(), 4);
        let m: Vec<i64> = vec![1, 0, 0, 0, 1];
        for (c, e) in f.modulus().iter().zip(m) {
            assert_eq!(*c, rat(e));
        }
        // r=3: Phi_12 = x^4 - x^2 + 1
        let f = make_field(3).unwrap();
        assert_eq!(f.degree(), 4);
        let m: Vec<i64> = vec![1, 0, -1, 0, 1];
        for (c, e) in f.modulus().iter().zip(m) {
            assert_eq!(*c, rat(e));
        }
        // r=4: Phi_16 = x^8 + 1, q^8 = 1
        let f = make_field(4).unwrap();
        assert_eq!(f.degree(), 8);
        assert!(f.q_pow(8).is_one());
        assert!(matches!(make_field(1), Err(Error::RankTooSmall(1))));
    }

    #[test]
    fn modulus_divides_x4r_minus_1() {
        // independent check of the recursion: prod of Phi_d over d | 4r is x^{4r} - 1
        for r in 2..=6 {
            let m = 4 * r;
            let mut acc = vec![BigRational::one()];
            for d in 1..=m {
                if m % d == 0 {
                    acc = poly_mul(&acc, &cyclotomic_poly(d));
                }
            }
            let mut expect = vec![BigRational::zero(); m as usize + 1];
            expect[0] = -BigRational::one();
            expect[m as usize] = BigRational::one();
            assert_eq!(acc, expect, "r = {r}");
        }
    }

    #[test]
    fn arithmetic_basics() {
        let f = make_field(4).unwrap();
        let q = f.q();
        assert!((&q * &q.inv().unwrap()).is_one());
        // s = q^3, s^2 = q^6 = -q^2
        assert_eq!(f.s(), f.q_pow(3));
        assert_eq!(f.s_pow(2), -&f.q_pow(2));
        let f3 = make_field(3).unwrap();
        assert_eq!(f3.q_pow(3), f3.from_i64(-1));
        // cross-field arithmetic is a bug
        let r = std::panic::catch_unwind(|| &f.q() + &f3.q());
        assert!(r.is_err());
    }

    #[test]
    fn quantum_numbers() {
        let f = make_field(4).unwrap();
        assert!(f.qnum(0).is_zero());
        assert!(f.qbinom(3, 0).unwrap().is_one());
        assert!(f.qbinom(3, 3).unwrap().is_one());
        // [2] = q + q^{-1} = sqrt(2) at r = 4
        let v = f.qint(2).to_complex();
        assert!(close(v, Complex64::new(2.0_f64.sqrt(), 0.0), 1e-12));
        // [m] != 0 for 0 < m < r, [r] = 0
        for r in 2..=8 {
            let f = make_field(r).unwrap();
            for m in 1..r as i64 {
                assert!(!f.qint(m).is_zero(), "[{m}] at r = {r}");
            }
            assert!(f.qint(r as i64).is_zero(), "[r] at r = {r}");
        }
        assert!(f.qfact(4).is_err());
        assert!(f.qbinom(4, 1).is_err());
    }

    #[test]
    fn qbinom_times_factorials() {
        for r in [3u32, 4, 5] {
            let f = make_field(r).unwrap();
            for n in 0..r as i64 {
                for m in 0..=n {
                    let lhs = &(&f.qbinom(n, m).unwrap() * &f.qfact(m).unwrap())
                        * &f.qfact(n - m).unwrap();
                    assert_eq!(lhs, f.qfact(n).unwrap(), "r={r} n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn symmetry_of_qbinom() {
        let f = make_field(5).unwrap();
        for n in 0..5i64 {
            for m in 0..=n {
                assert_eq!(f.qbinom(n, m).unwrap(), f.qbinom(n, n - m).unwrap());
            }
        }
    }

    #[test]
    fn to_complex_agrees_with_unit_circle() {
        // q^k = e^{i pi k / r} on all monomials |k| <= 4r, plus q^{2r} = 1, q^r = -1
        for r in 2..=8u32 {
            let f = make_field(r).unwrap();
            for k in -(4 * r as i64)..=(4 * r as i64) {
                let exact = f.q_pow(k).to_complex();
                let expect = Complex64::new(0.0, std::f64::consts::PI * k as f64 / r as f64).exp();
                assert!(close(exact, expect, 1e-10), "r={r} k={k}");
            }
            assert!(f.q_pow(2 * r as i64).is_one());
            assert_eq!(f.q_pow(r as i64), f.from_i64(-1));
            assert_eq!(f.s_pow(2), f.q_pow(-2));
        }
    }

    #[test]
    fn to_complex_examples() {
        let f = make_field(2).unwrap();
        assert!(close(f.one().to_complex(), Complex64::new(1.0, 0.0), 1e-12));
        assert!(close(f.q().to_complex(), Complex64::new(0.0, 1.0), 1e-12));
        // r=5: [3] = 1 + 2cos(2 pi / 5), the golden ratio
        let f = make_field(5).unwrap();
        let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
        assert!(close(
            f.qint(3).to_complex(),
            Complex64::new(phi, 0.0),
            1e-9
        ));
    }

    #[test]
    fn inverse_of_zero_rejected() {
        let f = make_field(3).unwrap();
        assert!(matches!(f.zero().inv(), Err(Error::DivisionByZero(_))));
    }
}
