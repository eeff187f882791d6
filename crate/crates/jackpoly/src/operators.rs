//! The operator layer: variable swaps, Dunkl operators, ordered products
//! over index subsets, degree-raising creation operators, and the Sutherland
//! operator whose eigenfunctions the creation operators build.
//!
//! Everything acts on concrete polynomials; operators are not reified. All
//! variable indices in this module are 1-based, matching `x1..xn`.

use num_bigint::BigInt;

use crate::alpha::AlphaPoly;
use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;

/// A set of variable indices `j_1 < j_2 < ... < j_l` within `1..=n`,
/// validated at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubsetJ {
    indices: Vec<usize>,
    n: usize,
}

impl SubsetJ {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        let in_range = indices.iter().all(|&j| j >= 1 && j <= n);
        if !increasing || !in_range || indices.is_empty() {
            return Err(Error::InvalidSubset { indices, n });
        }
        Ok(SubsetJ { indices, n })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn size(&self) -> usize {
        self.indices.len()
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }
}

/// Exchanges the exponents of `x_i` and `x_j` in every term.
pub fn apply_swap(f: &MultiPoly, i: usize, j: usize) -> Result<MultiPoly> {
    check_var(i, f.num_vars())?;
    check_var(j, f.num_vars())?;
    if i == j {
        return Err(Error::IndicesNotDistinct(i));
    }
    let mut out = MultiPoly::zero(f.num_vars());
    for (m, c) in f.terms() {
        out.add_term(m.swapped(i - 1, j - 1), c.clone());
    }
    Ok(out)
}

/// The Dunkl operator
/// `D_i = alpha x_i d/dx_i + sum_{j != i} x_i/(x_i - x_j) (1 - K_ij)`.
///
/// The exchange summand acts on a monomial with `x_i`-exponent `a` and
/// `x_j`-exponent `b` through the telescoped quotient of
/// `x_i (x_i^a x_j^b - x_i^b x_j^a)` by `(x_i - x_j)`: for `a > b` the
/// exponent pairs `(b+1+s, a-1-s)` for `0 <= s < a-b`, for `a < b` the
/// negated pairs `(a+1+s, b-1-s)` for `0 <= s < b-a`, and nothing for
/// `a = b`. No rational function in the variables ever appears, so
/// coefficients stay in Z[alpha] when they start there.
pub fn apply_dunkl(f: &MultiPoly, i: usize) -> Result<MultiPoly> {
    let n = f.num_vars();
    check_var(i, n)?;
    let i0 = i - 1;
    let mut out = MultiPoly::zero(n);
    for (m, c) in f.terms() {
        let a = m.exp(i0);
        if a > 0 {
            // Euler part: alpha * a * (same monomial)
            out.add_term(
                m.clone(),
                c.mul_poly(&AlphaPoly::monomial(BigInt::from(a), 1)),
            );
        }
        for j0 in 0..n {
            if j0 == i0 {
                continue;
            }
            let b = m.exp(j0);
            if a > b {
                for s in 0..(a - b) {
                    let t = m.with_exp(i0, b + 1 + s).with_exp(j0, a - 1 - s);
                    out.add_term(t, c.clone());
                }
            } else if a < b {
                for s in 0..(b - a) {
                    let t = m.with_exp(i0, a + 1 + s).with_exp(j0, b - 1 - s);
                    out.add_term(t, -c);
                }
            }
        }
    }
    Ok(out)
}

/// The ordered product `D_J = (D_{j_1} + 1)(D_{j_2} + 2) ... (D_{j_l} + l)`
/// applied to `f`, rightmost factor first.
pub fn apply_dj(f: &MultiPoly, subset: &SubsetJ) -> Result<MultiPoly> {
    if subset.ambient_n() != f.num_vars() {
        return Err(Error::InvalidSubset {
            indices: subset.indices.clone(),
            n: f.num_vars(),
        });
    }
    let mut g = f.clone();
    for (pos, &j) in subset.indices.iter().enumerate().rev() {
        g = dunkl_plus_shift(&g, j, pos as u32 + 1)?;
    }
    Ok(g)
}

/// `(D_j + shift) g` in one pass.
fn dunkl_plus_shift(g: &MultiPoly, j: usize, shift: u32) -> Result<MultiPoly> {
    let mut out = apply_dunkl(g, j)?;
    if shift > 0 {
        out = out.checked_add(&g.scale_int(shift as i64))?;
    }
    Ok(out)
}

/// The creation operator `B_i^+ = sum_{|J| = i} x_J D_J` over all
/// cardinality-`i` subsets of `{1..n}`.
///
/// Chains are walked depth-first from the rightmost factor, so subsets
/// sharing a suffix `(j_p, ..., j_i)` share the partial operator product;
/// the per-subset `x_J` multiplication happens at the leaves. The
/// accumulation order is fixed, and exact arithmetic makes the sum
/// independent of it anyway.
pub fn apply_creation(f: &MultiPoly, i: usize) -> Result<MultiPoly> {
    let n = f.num_vars();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let mut acc = MultiPoly::zero(n);
    let mut chain = vec![0usize; i + 1];
    descend_chain(f, i, n, &mut chain, &mut acc)?;
    Ok(acc)
}

/// Chooses `j_pos <= hi` and applies `(D_{j_pos} + pos)` to `g`, which holds
/// `(D_{j_{pos+1}} + pos+1)...(D_{j_i} + i) f` for the already-fixed suffix.
fn descend_chain(
    g: &MultiPoly,
    pos: usize,
    hi: usize,
    chain: &mut Vec<usize>,
    acc: &mut MultiPoly,
) -> Result<()> {
    if pos == 0 {
        *acc = acc.checked_add(&g.mul_by_vars(&chain[1..]))?;
        return Ok(());
    }
    // j_pos needs pos-1 smaller indices available below it
    for j in (pos..=hi).rev() {
        chain[pos] = j;
        let next = dunkl_plus_shift(g, j, pos as u32)?;
        descend_chain(&next, pos - 1, j - 1, chain, acc)?;
    }
    Ok(())
}

/// The Sutherland operator
/// `H = alpha sum_j (x_j d/dx_j)^2
///      + sum_{j<k} ((x_j + x_k)/(x_j - x_k)) (x_j d/dx_j - x_k d/dx_k)`,
/// defined on symmetric polynomials only; the pair terms are evaluated by
/// exact division, which fails with `NonzeroRemainder` on non-symmetric
/// input.
pub fn apply_hamiltonian(f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.num_vars();
    let mut euler_sq = MultiPoly::zero(n);
    for j in 1..=n {
        euler_sq = euler_sq.checked_add(&f.euler(j)?.euler(j)?)?;
    }
    let mut out = euler_sq.scale(&crate::alpha::AlphaRational::alpha());
    for j in 1..=n {
        for k in (j + 1)..=n {
            let g = f.euler(j)?.checked_sub(&f.euler(k)?)?;
            let q = g.exact_divide_diff(j, k)?;
            let factor = MultiPoly::var(n, j)?.checked_add(&MultiPoly::var(n, k)?)?;
            out = out.checked_add(&q.checked_mul(&factor)?)?;
        }
    }
    Ok(out)
}

/// Symmetry under every variable swap; adjacent transpositions generate all
/// of them, so only those are tested.
pub fn is_symmetric(f: &MultiPoly) -> bool {
    let n = f.num_vars();
    (1..n).all(|i| apply_swap(f, i, i + 1).map(|g| &g == f).unwrap_or(false))
}

fn check_var(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(())
}
