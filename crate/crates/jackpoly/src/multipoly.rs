//! Sparse multivariate polynomials over Q(alpha).
//!
//! Terms are keyed by exponent vectors in a `BTreeMap` ordered graded
//! lexicographically, so iteration (and therefore serialization) is
//! deterministic. No zero coefficient is ever stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::alpha::AlphaRational;
use crate::error::{Error, Result};

/// Exponent vector of a single monomial; the length is the ambient variable
/// count of the containing polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn constant(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// `x_i` as a monomial (`i` is 1-based, matching `x1..xn`).
    pub fn var(n: usize, i: usize) -> Self {
        debug_assert!(i >= 1 && i <= n);
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, idx0: usize) -> u32 {
        self.0[idx0]
    }

    pub fn with_exp(&self, idx0: usize, e: u32) -> Monomial {
        let mut v = self.0.clone();
        v[idx0] = e;
        Monomial(v)
    }

    pub fn swapped(&self, i0: usize, j0: usize) -> Monomial {
        let mut v = self.0.clone();
        v.swap(i0, j0);
        Monomial(v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then lexicographic on the
    /// exponent vector.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `x1..xn` with [`AlphaRational`] coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Monomial, AlphaRational>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        MultiPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: AlphaRational) -> Self {
        let mut p = MultiPoly::zero(n);
        p.add_term(Monomial::constant(n), c);
        p
    }

    pub fn one(n: usize) -> Self {
        MultiPoly::constant(n, AlphaRational::one())
    }

    /// `x_i` (1-based) in `n` variables.
    pub fn var(n: usize, i: usize) -> Result<Self> {
        check_index(i, n)?;
        let mut p = MultiPoly::zero(n);
        p.add_term(Monomial::var(n, i), AlphaRational::one());
        Ok(p)
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, AlphaRational)>,
    {
        let mut p = MultiPoly::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &AlphaRational)> {
        self.terms.iter()
    }

    /// Iterates terms in the canonical serialization order: descending
    /// graded-lex, highest monomial first.
    pub fn terms_canonical(&self) -> impl Iterator<Item = (&Monomial, &AlphaRational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> AlphaRational {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(AlphaRational::zero)
    }

    /// Accumulates `c` onto the monomial `m`, dropping the entry if it
    /// cancels to zero.
    pub fn add_term(&mut self, m: Monomial, c: AlphaRational) {
        debug_assert_eq!(m.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn checked_add(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_vars(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_vars(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_vars(rhs)?;
        let mut out = MultiPoly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    fn check_same_vars(&self, rhs: &MultiPoly) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::VariableCountMismatch(self.n, rhs.n));
        }
        Ok(())
    }

    /// Multiplies every coefficient by `c` exactly.
    pub fn scale(&self, c: &AlphaRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.n);
        }
        MultiPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> MultiPoly {
        self.scale(&AlphaRational::from_int(c))
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same variable count");
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base).expect("same variable count");
            }
        }
        acc
    }

    /// Multiplies by the squarefree monomial over the 1-based indices in `js`.
    pub fn mul_by_vars(&self, js: &[usize]) -> MultiPoly {
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    for &j in js {
                        e[j - 1] += 1;
                    }
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// The Euler operator `x_i d/dx_i` (1-based index): multiplies each term
    /// by its `x_i`-exponent.
    pub fn euler(&self, i: usize) -> Result<MultiPoly> {
        check_index(i, self.n)?;
        let mut out = MultiPoly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.exp(i - 1);
            if e > 0 {
                out.add_term(m.clone(), c.mul_int(&BigInt::from(e)));
            }
        }
        Ok(out)
    }

    /// Total degree when homogeneous; `None` on mixed degrees. The zero
    /// polynomial reports degree 0.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = match it.next() {
            None => return Some(0),
            Some(m) => m.degree(),
        };
        it.all(|m| m.degree() == d).then_some(d)
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// True when every coefficient lies in Z[alpha] (denominator 1).
    pub fn has_integer_poly_coeffs(&self) -> bool {
        self.terms.values().all(AlphaRational::is_integer_poly)
    }

    /// Evaluates the alpha parameter at an exact rational, leaving a
    /// polynomial in `x1..xn` over Q. `None` if any coefficient denominator
    /// vanishes at that alpha.
    pub fn eval_alpha(
        &self,
        alpha: &num_rational::BigRational,
    ) -> Option<Vec<(Monomial, num_rational::BigRational)>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.iter().rev() {
            out.push((m.clone(), c.eval(alpha)?));
        }
        Some(out)
    }

    /// Exact quotient of `self` by `(x_i - x_j)`, 1-based indices.
    ///
    /// Performs synthetic division treating the polynomial as univariate in
    /// `x_i`; fails with [`Error::NonzeroRemainder`] when the division is not
    /// exact, which is how non-symmetric input reaches symmetric-only paths.
    pub fn exact_divide_diff(&self, i: usize, j: usize) -> Result<MultiPoly> {
        check_index(i, self.n)?;
        check_index(j, self.n)?;
        if i == j {
            return Err(Error::IndicesNotDistinct(i));
        }
        if self.is_zero() {
            return Ok(MultiPoly::zero(self.n));
        }
        let i0 = i - 1;
        let j0 = j - 1;
        // Coefficients of x_i^k, each a polynomial with x_i-exponent zeroed.
        let top = self.terms.keys().map(|m| m.exp(i0)).max().unwrap() as usize;
        let mut layers: Vec<Vec<(Monomial, AlphaRational)>> = vec![Vec::new(); top + 1];
        for (m, c) in &self.terms {
            let k = m.exp(i0) as usize;
            layers[k].push((m.with_exp(i0, 0), c.clone()));
        }
        // Horner pass at the root x_i = x_j: b_{k-1} = c_k + x_j * b_k.
        let mut quotient = MultiPoly::zero(self.n);
        let mut carry = MultiPoly::zero(self.n); // b_k, with x_i-exponent zero
        for k in (0..=top).rev() {
            let mut layer = MultiPoly::from_terms(self.n, layers[k].drain(..));
            if !carry.is_zero() {
                let shifted = MultiPoly {
                    n: self.n,
                    terms: carry
                        .terms
                        .iter()
                        .map(|(m, c)| (m.with_exp(j0, m.exp(j0) + 1), c.clone()))
                        .collect(),
                };
                layer = layer.checked_add(&shifted)?;
            }
            if k == 0 {
                // layer is now the remainder, f evaluated at x_i = x_j
                if !layer.is_zero() {
                    return Err(Error::NonzeroRemainder { i, j });
                }
            } else {
                for (m, c) in &layer.terms {
                    quotient.add_term(m.with_exp(i0, (k - 1) as u32), c.clone());
                }
                carry = layer;
            }
        }
        Ok(quotient)
    }
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(())
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    /// Panics on mismatched variable counts; use `checked_add` at call sites
    /// where the counts are not known to agree.
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).unwrap()
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).unwrap()
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).unwrap()
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render_multipoly(self))
    }
}
