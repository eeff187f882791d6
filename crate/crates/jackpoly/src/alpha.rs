//! Exact univariate arithmetic in the Jack parameter `a` (alpha).
//!
//! [`AlphaPoly`] is a polynomial in alpha with arbitrary-precision integer
//! coefficients; [`AlphaRational`] is a canonical ratio of two such
//! polynomials and models the field Q(alpha). The creation-operator pipeline
//! stays inside `AlphaPoly` coefficients (denominator 1); only the
//! Gram-Schmidt oracle exercises genuine rational functions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial in alpha with `BigInt` coefficients, indexed by degree.
///
/// Canonical form: trailing zeros trimmed, so the empty vector is zero and
/// otherwise the last entry is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphaPoly {
    coeffs: Vec<BigInt>,
}

impl AlphaPoly {
    pub fn zero() -> Self {
        AlphaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        AlphaPoly::constant(BigInt::one())
    }

    /// The bare parameter alpha.
    pub fn alpha() -> Self {
        AlphaPoly::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            AlphaPoly::zero()
        } else {
            AlphaPoly { coeffs: vec![c] }
        }
    }

    /// `c * alpha^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return AlphaPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        AlphaPoly { coeffs }
    }

    /// Builds from raw coefficients (degree-ascending), trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        AlphaPoly { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        AlphaPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `alpha^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// True when every coefficient is nonnegative (vacuously true for zero).
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn mul_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return AlphaPoly::zero();
        }
        AlphaPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `alpha^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return AlphaPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        AlphaPoly { coeffs }
    }

    /// Nonnegative gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `d`, which must divide exactly.
    fn div_int_exact(&self, d: &BigInt) -> Self {
        debug_assert!(!d.is_zero());
        AlphaPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        }
    }

    /// Exact division in Z[alpha]; `None` when the division does not come out
    /// exactly with integer quotient coefficients.
    pub fn div_exact(&self, d: &AlphaPoly) -> Option<AlphaPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(AlphaPoly::zero());
        }
        let dd = d.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return None;
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        let lead = d.leading().unwrap();
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (off, dc) in d.coeffs.iter().enumerate() {
                rem[k + off] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(AlphaPoly::from_coeffs(quot))
    }

    /// Primitive part with positive leading coefficient; zero stays zero.
    pub fn primitive(&self) -> AlphaPoly {
        if self.is_zero() {
            return AlphaPoly::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        self.div_int_exact(&c)
    }

    /// The gcd in Z[a], with positive leading coefficient: the integer gcd
    /// of the contents times the gcd of the primitive parts, the latter by
    /// the primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() || other.is_zero() {
            let nz = if self.is_zero() { other } else { self };
            return match nz.leading() {
                None => AlphaPoly::zero(),
                Some(l) if l.is_negative() => -nz,
                Some(_) => nz.clone(),
            };
        }
        let content_gcd = self.content().gcd(&other.content());
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b).primitive();
            a = b;
            b = r;
        }
        a.primitive().mul_int(&content_gcd)
    }

    /// Evaluates at an exact rational alpha.
    pub fn eval(&self, alpha: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * alpha + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Renders with explicit spacing, ascending degree: `2 - 3*a + a^2`.
    pub fn render(&self) -> String {
        self.render_with(" + ", " - ", "*")
    }

    /// Compact rendering for CSV cells: `2-3a+a^2`.
    pub fn render_compact(&self) -> String {
        self.render_with("+", "-", "")
    }

    fn render_with(&self, plus: &str, minus: &str, times: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { minus } else { plus });
            }
            let mag = c.abs();
            if deg == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push_str(times);
                }
                out.push('a');
                if deg > 1 {
                    out.push_str(&format!("^{deg}"));
                }
            }
        }
        out
    }
}

impl fmt::Debug for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaPoly({})", self.render())
    }
}

impl fmt::Display for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<i64> for AlphaPoly {
    fn from(c: i64) -> Self {
        AlphaPoly::constant(BigInt::from(c))
    }
}

impl From<BigInt> for AlphaPoly {
    fn from(c: BigInt) -> Self {
        AlphaPoly::constant(c)
    }
}

impl Add for &AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = rhs.coeffs.get(k) {
                c += d;
            }
            coeffs.push(c);
        }
        AlphaPoly::from_coeffs(coeffs)
    }
}

impl Sub for &AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, rhs: &AlphaPoly) -> AlphaPoly {
        self + &(-rhs)
    }
}

impl Neg for &AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() || rhs.is_zero() {
            return AlphaPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        AlphaPoly::from_coeffs(coeffs)
    }
}

/// Pseudo-remainder of `a` by `b`: the remainder of `lc(b)^(da-db+1) * a`
/// divided by `b` over Z. Requires `deg a >= deg b`, `b` nonzero.
fn pseudo_rem(a: &AlphaPoly, b: &AlphaPoly) -> AlphaPoly {
    let da = a.degree().unwrap();
    let db = b.degree().unwrap();
    debug_assert!(da >= db);
    let lead = b.leading().unwrap().clone();
    let mut rem = a.coeffs.clone();
    for k in (db..=da).rev() {
        let top = rem[k].clone();
        for c in rem.iter_mut().take(k) {
            *c *= &lead;
        }
        // rem[k] itself is cancelled exactly by the subtraction below
        rem[k] = BigInt::zero();
        let off = k - db;
        for (i, bc) in b.coeffs.iter().enumerate().take(db) {
            rem[off + i] -= &top * bc;
        }
    }
    rem.truncate(db);
    AlphaPoly::from_coeffs(rem)
}

/// Canonical element of Q(alpha).
///
/// Invariants: `den` is nonzero with positive leading coefficient, `num` and
/// `den` share no polynomial factor over Q and no common integer content, and
/// zero is stored as 0/1. Equality is plain componentwise comparison.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlphaRational {
    num: AlphaPoly,
    den: AlphaPoly,
}

impl AlphaRational {
    pub fn zero() -> Self {
        AlphaRational {
            num: AlphaPoly::zero(),
            den: AlphaPoly::one(),
        }
    }

    pub fn one() -> Self {
        AlphaRational {
            num: AlphaPoly::one(),
            den: AlphaPoly::one(),
        }
    }

    pub fn alpha() -> Self {
        AlphaPoly::alpha().into()
    }

    pub fn from_int(c: i64) -> Self {
        AlphaPoly::from(c).into()
    }

    pub fn from_bigint(c: BigInt) -> Self {
        AlphaPoly::constant(c).into()
    }

    pub fn from_big_rational(r: &BigRational) -> Self {
        AlphaRational::new(
            AlphaPoly::constant(r.numer().clone()),
            AlphaPoly::constant(r.denom().clone()),
        )
        .expect("BigRational denominator is nonzero")
    }

    /// Builds `num/den` in canonical form.
    pub fn new(num: AlphaPoly, den: AlphaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: AlphaPoly, den: AlphaPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return AlphaRational::zero();
        }
        if den.is_one() {
            return AlphaRational {
                num,
                den: AlphaPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let mut c = num.content().gcd(&den.content());
        if den.leading().unwrap().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_int_exact(&c);
            den = den.div_int_exact(&c);
        }
        AlphaRational { num, den }
    }

    pub fn num(&self) -> &AlphaPoly {
        &self.num
    }

    pub fn den(&self) -> &AlphaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the canonical form is a polynomial in alpha with integer
    /// coefficients, i.e. the denominator is exactly 1.
    pub fn is_integer_poly(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator as a plain polynomial, when the denominator is 1.
    pub fn as_integer_poly(&self) -> Option<&AlphaPoly> {
        self.is_integer_poly().then_some(&self.num)
    }

    pub fn inverse(&self) -> Result<Self> {
        AlphaRational::new(self.den.clone(), self.num.clone())
    }

    /// Multiplies by a plain integer polynomial.
    pub fn mul_poly(&self, p: &AlphaPoly) -> Self {
        if self.den.is_one() {
            return AlphaRational {
                num: &self.num * p,
                den: AlphaPoly::one(),
            };
        }
        Self::normalized(&self.num * p, self.den.clone())
    }

    pub fn mul_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return AlphaRational::zero();
        }
        if self.den.is_one() {
            return AlphaRational {
                num: self.num.mul_int(c),
                den: AlphaPoly::one(),
            };
        }
        Self::normalized(self.num.mul_int(c), self.den.clone())
    }

    /// Evaluates at an exact rational alpha; `None` when the denominator
    /// vanishes there.
    pub fn eval(&self, alpha: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(alpha);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(alpha) / d)
    }

    /// Renders like `1 + a` or `(2)/(1 + a)` for genuine fractions.
    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }

    /// Compact rendering for CSV cells.
    pub fn render_compact(&self) -> String {
        if self.den.is_one() {
            self.num.render_compact()
        } else {
            format!(
                "({})/({})",
                self.num.render_compact(),
                self.den.render_compact()
            )
        }
    }
}

impl fmt::Debug for AlphaRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaRational({})", self.render())
    }
}

impl fmt::Display for AlphaRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<AlphaPoly> for AlphaRational {
    fn from(p: AlphaPoly) -> Self {
        AlphaRational {
            num: p,
            den: AlphaPoly::one(),
        }
    }
}

impl Add for &AlphaRational {
    type Output = AlphaRational;
    fn add(self, rhs: &AlphaRational) -> AlphaRational {
        if self.den.is_one() && rhs.den.is_one() {
            return AlphaRational {
                num: &self.num + &rhs.num,
                den: AlphaPoly::one(),
            };
        }
        AlphaRational::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &AlphaRational {
    type Output = AlphaRational;
    fn sub(self, rhs: &AlphaRational) -> AlphaRational {
        self + &(-rhs)
    }
}

impl Neg for &AlphaRational {
    type Output = AlphaRational;
    fn neg(self) -> AlphaRational {
        AlphaRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &AlphaRational {
    type Output = AlphaRational;
    fn mul(self, rhs: &AlphaRational) -> AlphaRational {
        if self.den.is_one() && rhs.den.is_one() {
            return AlphaRational {
                num: &self.num * &rhs.num,
                den: AlphaPoly::one(),
            };
        }
        AlphaRational::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &AlphaRational {
    type Output = AlphaRational;
    /// Panics when `rhs` is zero; callers on the oracle path check first.
    fn div(self, rhs: &AlphaRational) -> AlphaRational {
        assert!(!rhs.is_zero(), "division of rational functions by zero");
        AlphaRational::normalized(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> AlphaPoly {
        AlphaPoly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn canonical_trimming() {
        assert!(AlphaPoly::from_coeffs(vec![BigInt::zero(), BigInt::zero()]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(AlphaPoly::zero().degree(), None);
    }

    #[test]
    fn ring_ops() {
        let a = p(&[1, 1]); // 1 + a
        let b = p(&[-1, 1]); // -1 + a
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, AlphaPoly::zero());
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]); // a^2 - 1
        let b = p(&[1, 1]);
        assert_eq!(a.div_exact(&b), Some(p(&[-1, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&b), None);
        // non-monic divisor with integer quotient
        let c = p(&[2, 7, 3]); // (3a+1)(a+2)
        assert_eq!(c.div_exact(&p(&[1, 3])), Some(p(&[2, 1])));
    }

    #[test]
    fn gcd_in_integer_ring() {
        let a = p(&[-2, 0, 2]); // 2(a-1)(a+1)
        let b = p(&[2, 4, 2]); // 2(a+1)^2
        assert_eq!(a.gcd(&b), p(&[2, 2]));
        assert_eq!(a.primitive().gcd(&b.primitive()), p(&[1, 1]));
        assert_eq!(p(&[0]).gcd(&p(&[-3, -3])), p(&[3, 3]));
        assert_eq!(p(&[6]).gcd(&p(&[4])), p(&[2]));
        assert_eq!(p(&[0]).gcd(&p(&[0])), AlphaPoly::zero());
    }

    #[test]
    fn rational_canonical_form() {
        // 2a / (2a^2 + 2a) = 1/(a+1)
        let r = AlphaRational::new(p(&[0, 2]), p(&[0, 2, 2])).unwrap();
        assert_eq!(r.num(), &p(&[1]));
        assert_eq!(r.den(), &p(&[1, 1]));
        // denominator sign is normalized
        let s = AlphaRational::new(p(&[1]), p(&[-2])).unwrap();
        assert_eq!(s.num(), &p(&[-1]));
        assert_eq!(s.den(), &p(&[2]));
        assert!(AlphaRational::new(p(&[0]), p(&[5])).unwrap().is_zero());
        assert!(AlphaRational::new(p(&[1]), p(&[])).is_err());
    }

    #[test]
    fn normalization_is_idempotent() {
        let r = AlphaRational::new(p(&[0, 2]), p(&[0, 2, 2])).unwrap();
        let again = AlphaRational::new(r.num().clone(), r.den().clone()).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn field_ops() {
        let half = AlphaRational::new(p(&[1]), p(&[2])).unwrap();
        let two = AlphaRational::from_int(2);
        assert!((&half * &two).is_one());
        let a = AlphaRational::alpha();
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_one());
        let sum = &half + &half;
        assert!(sum.is_one());
        // (a^2 + a)/2 appears as <m_11, m_11> at N = 2
        let g = AlphaRational::new(p(&[0, 1, 1]), p(&[2])).unwrap();
        let q = &AlphaRational::new(p(&[0, -1]), p(&[1])).unwrap() / &g;
        assert_eq!(q, AlphaRational::new(p(&[-2]), p(&[1, 1])).unwrap());
    }

    #[test]
    fn eval_at_rational() {
        let r = AlphaRational::new(p(&[1, 1]), p(&[2])).unwrap();
        let v = r.eval(&BigRational::new(BigInt::from(1), BigInt::from(3)));
        assert_eq!(v, Some(BigRational::new(BigInt::from(2), BigInt::from(3))));
        let s = AlphaRational::new(p(&[1]), p(&[-1, 1])).unwrap();
        assert_eq!(s.eval(&BigRational::one()), None);
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[]).render(), "0");
        assert_eq!(p(&[2]).render(), "2");
        assert_eq!(p(&[1, 1]).render(), "1 + a");
        assert_eq!(p(&[2, -3, 1]).render(), "2 - 3*a + a^2");
        assert_eq!(p(&[0, 0, -1]).render(), "-a^2");
        assert_eq!(p(&[2, 4]).render_compact(), "2+4a");
        let r = AlphaRational::new(p(&[2]), p(&[1, 1])).unwrap();
        assert_eq!(r.render(), "(2)/(1 + a)");
    }
}
