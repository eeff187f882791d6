//! Monomial and power-sum symmetric polynomials, expansion into the m-basis,
//! and the alpha-deformed scalar product diagonal on power sums.
//!
//! All degree-N basis work happens in n = N variables, where the monomial
//! symmetric polynomials of degree N are in bijection with partitions of N.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::alpha::{AlphaPoly, AlphaRational};
use crate::error::{Error, Result};
use crate::multipoly::{Monomial, MultiPoly};
use crate::partition::{partitions_of, Partition};

/// A symmetric polynomial written in monomial-symmetric coordinates: a map
/// from partitions of `degree` to coefficients, zeros never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MExpansion {
    degree: u32,
    coeffs: std::collections::BTreeMap<Partition, AlphaRational>,
}

impl MExpansion {
    pub fn zero(degree: u32) -> Self {
        MExpansion {
            degree,
            coeffs: std::collections::BTreeMap::new(),
        }
    }

    /// The single basis element `m_lambda`.
    pub fn unit(lambda: Partition) -> Self {
        let mut e = MExpansion::zero(lambda.weight());
        e.add_term(lambda, AlphaRational::one());
        e
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, mu: &Partition) -> AlphaRational {
        self.coeffs
            .get(mu)
            .cloned()
            .unwrap_or_else(AlphaRational::zero)
    }

    /// Ascending lexicographic key order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &AlphaRational)> {
        self.coeffs.iter()
    }

    /// Canonical presentation order: descending lexicographic, so the
    /// dominance-maximal key prints first.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Partition, &AlphaRational)> {
        self.coeffs.iter().rev()
    }

    pub fn add_term(&mut self, mu: Partition, c: AlphaRational) {
        debug_assert_eq!(mu.weight(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(mu) {
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

    /// `self += c * other`, exact.
    pub fn add_scaled(&mut self, other: &MExpansion, c: &AlphaRational) {
        debug_assert_eq!(self.degree, other.degree);
        if c.is_zero() {
            return;
        }
        for (mu, x) in &other.coeffs {
            self.add_term(mu.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &AlphaRational) -> MExpansion {
        if c.is_zero() {
            return MExpansion::zero(self.degree);
        }
        MExpansion {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(mu, x)| (mu.clone(), x * c))
                .collect(),
        }
    }

    /// True when every coefficient is a polynomial in alpha with integer
    /// coefficients (canonical denominator 1).
    pub fn all_integer_polys(&self) -> bool {
        self.coeffs.values().all(AlphaRational::is_integer_poly)
    }

    /// Rebuilds the symmetric polynomial in `n` variables; keys longer than
    /// `n` contribute nothing since their `m_poly` vanishes.
    pub fn to_poly(&self, n: usize) -> MultiPoly {
        let mut f = MultiPoly::zero(n);
        for (mu, c) in &self.coeffs {
            let m = m_poly(mu, n);
            f = &f + &m.scale(c);
        }
        f
    }

    /// Substitutes an exact rational for alpha; `None` if a denominator
    /// vanishes there. Pairs come out in descending key order.
    pub fn eval_alpha(&self, alpha: &BigRational) -> Option<Vec<(Partition, BigRational)>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (mu, c) in self.coeffs.iter().rev() {
            out.push((mu.clone(), c.eval(alpha)?));
        }
        Some(out)
    }
}

/// Lexicographic next permutation in place; false once the sequence is the
/// descending-sorted last one.
fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The monomial symmetric polynomial `m_mu` in `n` variables: one term per
/// distinct rearrangement of the exponent vector, each with coefficient 1.
/// Zero when `mu` has more parts than variables.
pub fn m_poly(mu: &Partition, n: usize) -> MultiPoly {
    if mu.len() > n {
        return MultiPoly::zero(n);
    }
    let mut exps: Vec<u32> = vec![0; n - mu.len()];
    let mut parts = mu.parts().to_vec();
    parts.reverse();
    exps.extend(parts);
    // exps starts ascending-sorted, the lexicographically first arrangement
    let mut f = MultiPoly::zero(n);
    loop {
        f.add_term(Monomial::new(exps.clone()), AlphaRational::one());
        if !next_permutation(&mut exps) {
            break;
        }
    }
    f
}

/// The power-sum polynomial `p_lambda` in `n` variables: the product over
/// parts k of `x_1^k + ... + x_n^k`. The empty partition gives 1.
pub fn p_poly(lambda: &Partition, n: usize) -> MultiPoly {
    let mut f = MultiPoly::one(n);
    for &k in lambda.parts() {
        let mut pk = MultiPoly::zero(n);
        for i in 1..=n {
            pk.add_term(Monomial::var(n, i).with_exp(i - 1, k), AlphaRational::one());
        }
        f = &f * &pk;
    }
    f
}

/// Expands a symmetric homogeneous polynomial in the m-basis.
///
/// Each `m_mu` contributes exactly one monomial whose exponents are already
/// sorted decreasing, so those terms are read off directly; the claimed
/// expansion is then rebuilt and compared against the input, which rejects
/// non-symmetric input without any group-orbit bookkeeping.
pub fn to_m_expansion(f: &MultiPoly) -> Result<MExpansion> {
    let degree = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let mut exp = MExpansion::zero(degree);
    for (m, c) in f.terms() {
        let e = m.exponents();
        if e.windows(2).all(|w| w[0] >= w[1]) {
            exp.add_term(Partition::from_exponents(e), c.clone());
        }
    }
    if &exp.to_poly(f.num_vars()) != f {
        return Err(Error::NotSymmetric);
    }
    Ok(exp)
}

/// Cached per-degree basis data: the partition list of degree N in
/// descending lex order, the integer p-in-m transition matrix, its rational
/// inverse, and the scalar-product diagonal `z * alpha^len` per partition.
struct DegreeBasis {
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    p_in_m: Vec<Vec<BigInt>>,
    m_in_p: Vec<Vec<BigRational>>,
    m_in_p_alpha: Vec<Vec<AlphaRational>>,
    z_alpha: Vec<AlphaRational>,
}

fn degree_basis(degree: u32) -> Arc<DegreeBasis> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<DegreeBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().unwrap().get(&degree) {
        return Arc::clone(b);
    }
    let built = Arc::new(build_degree_basis(degree));
    cache.lock().unwrap().entry(degree).or_insert(built).clone()
}

fn build_degree_basis(degree: u32) -> DegreeBasis {
    let n = degree.max(1) as usize;
    let partitions = partitions_of(degree, degree as usize);
    let index: HashMap<Partition, usize> = partitions
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let dim = partitions.len();
    let mut p_in_m = vec![vec![BigInt::zero(); dim]; dim];
    for (row, lambda) in partitions.iter().enumerate() {
        let expansion = to_m_expansion(&p_poly(lambda, n)).expect("power sums are symmetric");
        for (mu, c) in expansion.iter() {
            let v = c
                .as_integer_poly()
                .and_then(|p| {
                    if p.degree().unwrap_or(0) == 0 {
                        Some(p.coeff(0))
                    } else {
                        None
                    }
                })
                .expect("power-sum expansion coefficients are integers");
            p_in_m[row][index[mu]] = v;
        }
    }
    let rational: Vec<Vec<BigRational>> = p_in_m
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| BigRational::from_integer(v.clone()))
                .collect()
        })
        .collect();
    let m_in_p = invert_matrix(&rational)
        .expect("p-in-m transition matrix is unitriangular up to multiplicities");
    let m_in_p_alpha: Vec<Vec<AlphaRational>> = m_in_p
        .iter()
        .map(|row| row.iter().map(AlphaRational::from_big_rational).collect())
        .collect();
    let z_alpha = partitions
        .iter()
        .map(|p| AlphaRational::from(AlphaPoly::monomial(p.z(), p.len())))
        .collect();
    DegreeBasis {
        partitions,
        index,
        p_in_m,
        m_in_p,
        m_in_p_alpha,
        z_alpha,
    }
}

/// Gauss-Jordan inversion over exact rationals; `None` for singular input.
fn invert_matrix(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let dim = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..dim {
        let pivot = (col..dim).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
            *x /= p.clone();
        }
        for r in 0..dim {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..dim {
                let t = &factor * &a[col][c];
                a[r][c] -= t;
                let t = &factor * &inv[col][c];
                inv[r][c] -= t;
            }
        }
    }
    Some(inv)
}

/// Integer matrix expanding each `p_lambda` of degree N in the m-basis,
/// rows and columns both indexed by `partitions_of(N, N)` order.
pub fn p_in_m_matrix(degree: u32) -> Vec<Vec<BigInt>> {
    degree_basis(degree).p_in_m.clone()
}

/// Rational inverse of [`p_in_m_matrix`]: row lambda expands `m_lambda` in
/// the p-basis.
pub fn m_to_p_matrix(degree: u32) -> Vec<Vec<BigRational>> {
    degree_basis(degree).m_in_p.clone()
}

/// The partitions indexing the rows/columns of the degree-N matrices.
pub fn basis_partitions(degree: u32) -> Vec<Partition> {
    degree_basis(degree).partitions.clone()
}

/// The alpha-deformed scalar product, diagonal on power sums with
/// `<p_lambda, p_lambda> = z_lambda * alpha^len(lambda)`, extended
/// bilinearly. Both arguments must have the same degree.
pub fn scalar_product(f: &MExpansion, g: &MExpansion) -> Result<AlphaRational> {
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch(f.degree(), g.degree()));
    }
    let basis = degree_basis(f.degree());
    let fp = to_p_coords(f, &basis);
    let gp = to_p_coords(g, &basis);
    let mut acc = AlphaRational::zero();
    for (j, w) in basis.z_alpha.iter().enumerate() {
        if fp[j].is_zero() || gp[j].is_zero() {
            continue;
        }
        acc = &acc + &(&(&fp[j] * &gp[j]) * w);
    }
    Ok(acc)
}

fn to_p_coords(f: &MExpansion, basis: &DegreeBasis) -> Vec<AlphaRational> {
    let dim = basis.partitions.len();
    let mut out = vec![AlphaRational::zero(); dim];
    for (mu, c) in f.iter() {
        let i = basis.index[mu];
        for (j, acc) in out.iter_mut().enumerate() {
            let w = &basis.m_in_p_alpha[i][j];
            if w.is_zero() {
                continue;
            }
            *acc = &*acc + &(c * w);
        }
    }
    out
}
