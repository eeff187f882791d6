//! Staged creation-operator construction of Jack polynomials and the checks
//! that pin its output down: eigenvalue equation, dominance triangularity,
//! factorial normalization, integrality, and coefficient positivity.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::alpha::{AlphaPoly, AlphaRational};
use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;
use crate::operators::{apply_creation, apply_hamiltonian};
use crate::partition::{dominance_leq, factorial, Partition};
use crate::symfunc::{to_m_expansion, MExpansion};

/// A constructed Jack polynomial: the partition and variable count it was
/// built for, the raw polynomial, and its monomial-basis expansion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JackResult {
    pub lambda: Partition,
    pub n: usize,
    pub poly: MultiPoly,
    pub expansion: MExpansion,
}

/// Every intermediate state of the staged product: starting from the
/// constant 1, the k-th creation operator is applied `lambda_k -
/// lambda_{k+1}` times, for k ascending from 1 to n. The returned list holds
/// the seed and the state after each single application.
pub fn rodrigues_stages(lambda: &Partition, n: usize) -> Result<Vec<MultiPoly>> {
    if lambda.len() > n {
        return Err(Error::PartitionTooLong {
            len: lambda.len(),
            n,
        });
    }
    let mut stages = vec![MultiPoly::one(n)];
    for k in 1..=n {
        let reps = lambda.part(k) - lambda.part(k + 1);
        for _ in 0..reps {
            let next = apply_creation(stages.last().unwrap(), k)?;
            stages.push(next);
        }
    }
    Ok(stages)
}

/// Builds `J_lambda(x1..xn; alpha)` by the staged creation-operator product
/// and expands it in the monomial symmetric basis.
pub fn rodrigues_jack(lambda: &Partition, n: usize) -> Result<JackResult> {
    let stages = rodrigues_stages(lambda, n)?;
    let poly = stages.into_iter().next_back().unwrap();
    let expansion = to_m_expansion(&poly)?;
    Ok(JackResult {
        lambda: lambda.clone(),
        n,
        poly,
        expansion,
    })
}

/// The spectrum of the Sutherland operator:
/// `epsilon_lambda = sum_j [alpha lambda_j^2 + (n+1-2j) lambda_j]`.
pub fn epsilon(lambda: &Partition, n: usize) -> Result<AlphaPoly> {
    if lambda.len() > n {
        return Err(Error::PartitionTooLong {
            len: lambda.len(),
            n,
        });
    }
    let mut linear = BigInt::from(0);
    let mut constant = BigInt::from(0);
    for (j, &part) in lambda.parts().iter().enumerate() {
        let p = BigInt::from(part);
        linear += &p * &p;
        constant += (n as i64 + 1 - 2 * (j as i64 + 1)) * p;
    }
    Ok(AlphaPoly::from_coeffs(vec![constant, linear]))
}

/// Whether the constructed polynomial is an eigenfunction of the Sutherland
/// operator with the predicted eigenvalue. Failures of any kind, including a
/// non-symmetric polynomial sneaking in, count as `false`.
pub fn check_eigen(result: &JackResult) -> bool {
    let Ok(eps) = epsilon(&result.lambda, result.n) else {
        return false;
    };
    match apply_hamiltonian(&result.poly) {
        Ok(h) => h == result.poly.scale(&eps.into()),
        Err(_) => false,
    }
}

/// Verifies the commutator identity
/// `[H, B_i^+] phi = B_i^+ (2 alpha |lambda| + i alpha + i(n-i)) phi`
/// where `phi` is the staged product for `lambda` viewed as a partition with
/// at most `i` parts.
pub fn check_commutator(lambda: &Partition, i: usize, n: usize) -> Result<bool> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    if lambda.len() > i {
        return Err(Error::PartitionTooLong {
            len: lambda.len(),
            n: i,
        });
    }
    let phi = rodrigues_jack(lambda, n)?.poly;
    let b_phi = apply_creation(&phi, i)?;
    let lhs =
        apply_hamiltonian(&b_phi)?.checked_sub(&apply_creation(&apply_hamiltonian(&phi)?, i)?)?;
    let brace = AlphaPoly::from_coeffs(vec![
        BigInt::from((i * (n - i)) as u64),
        BigInt::from(2 * lambda.weight() as u64 + i as u64),
    ]);
    let rhs = apply_creation(&phi.scale(&brace.into()), i)?;
    Ok(lhs == rhs)
}

/// Whether every key of the expansion lies below `lambda` in dominance
/// order. Requires `n >= |lambda|` so that no keys were truncated away.
pub fn check_triangularity(result: &JackResult) -> Result<bool> {
    require_untruncated(result)?;
    for (mu, _) in result.expansion.iter() {
        if !dominance_leq(mu, &result.lambda)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the coefficient of `m_{(1,...,1)}` is exactly `|lambda|!`.
/// Requires `n >= |lambda|` so that the all-ones key exists.
pub fn check_normalization(result: &JackResult) -> Result<bool> {
    require_untruncated(result)?;
    let weight = result.lambda.weight();
    let ones = Partition::new(vec![1; weight as usize]).expect("all-ones partition");
    let expected = AlphaRational::from_bigint(factorial(weight as u64));
    Ok(result.expansion.coeff(&ones) == expected)
}

fn require_untruncated(result: &JackResult) -> Result<()> {
    let needed = result.lambda.weight() as usize;
    if result.n < needed {
        return Err(Error::NotEnoughVariables {
            needed,
            n: result.n,
        });
    }
    Ok(())
}

/// One expansion coefficient with its integrality and positivity verdicts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjectureEntry {
    pub mu: Partition,
    pub v: AlphaRational,
    /// `v` is a polynomial in alpha with integer coefficients.
    pub is_integer_poly: bool,
    /// `v` divided by the product of multiplicity factorials of `mu`.
    pub tilde_v: AlphaRational,
    /// `tilde_v` is a polynomial in alpha with nonnegative integer
    /// coefficients.
    pub is_nonneg_integer_poly: bool,
}

/// Structured integrality/positivity findings for one expansion; any entry
/// with a false verdict is a potential counterexample worth reporting.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjectureReport {
    pub lambda: Partition,
    pub entries: Vec<ConjectureEntry>,
}

impl ConjectureReport {
    pub fn all_integer(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer_poly)
    }

    pub fn all_nonneg(&self) -> bool {
        self.entries.iter().all(|e| e.is_nonneg_integer_poly)
    }
}

/// Examines every expansion coefficient `v` and its renormalization
/// `tilde_v = v / prod_i m_i(mu)!`, recording integrality and positivity.
/// Requires `n >= |lambda|`; entries come out with `mu` descending.
pub fn conjecture_report(result: &JackResult) -> Result<ConjectureReport> {
    require_untruncated(result)?;
    let mut entries = Vec::with_capacity(result.expansion.num_terms());
    for (mu, v) in result.expansion.iter_desc() {
        let denom = AlphaRational::from_bigint(mu.mult_factorial());
        let tilde_v = v * &denom.inverse().expect("factorial is nonzero");
        let is_integer_poly = v.is_integer_poly();
        let is_nonneg_integer_poly = tilde_v
            .as_integer_poly()
            .map(AlphaPoly::is_nonnegative)
            .unwrap_or(false);
        entries.push(ConjectureEntry {
            mu: mu.clone(),
            v: v.clone(),
            is_integer_poly,
            tilde_v,
            is_nonneg_integer_poly,
        });
    }
    Ok(ConjectureReport {
        lambda: result.lambda.clone(),
        entries,
    })
}

/// Serializes an integer alpha-polynomial as `[[degree, coefficient], ...]`
/// in ascending degree, nonzero terms only.
pub fn alpha_poly_json(p: &AlphaPoly) -> Value {
    let terms: Vec<Value> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(deg, c)| json!([deg, bigint_json(c)]))
        .collect();
    Value::Array(terms)
}

pub(crate) fn bigint_json(b: &BigInt) -> Value {
    Value::Number(serde_json::Number::from_str(&b.to_string()).expect("integer literal"))
}

pub(crate) fn partition_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&x| json!(x)).collect())
}

/// JSON record of a constructed expansion:
/// `{"lambda":[...], "n":..., "coeffs":[{"mu":[...], "v":[[deg,int],...]}]}`.
/// A coefficient outside Z[alpha] (never produced by the staged pipeline)
/// serializes as `{"num":..., "den":...}` and sets a top-level
/// `"rational": true` flag.
pub fn jack_json_record(result: &JackResult) -> Value {
    let mut rational_seen = false;
    let coeffs: Vec<Value> = result
        .expansion
        .iter_desc()
        .map(|(mu, c)| {
            let v = match c.as_integer_poly() {
                Some(p) => alpha_poly_json(p),
                None => {
                    rational_seen = true;
                    json!({
                        "num": alpha_poly_json(c.num()),
                        "den": alpha_poly_json(c.den()),
                    })
                }
            };
            json!({ "mu": partition_json(mu), "v": v })
        })
        .collect();
    let mut record = json!({
        "lambda": partition_json(&result.lambda),
        "n": result.n,
        "coeffs": coeffs,
    });
    if rational_seen {
        record["rational"] = json!(true);
    }
    record
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::m_poly;
    use crate::text::parse_multipoly;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn jack(parts: &[u32], n: usize) -> JackResult {
        rodrigues_jack(&pt(parts), n).unwrap()
    }

    #[test]
    fn single_box_and_column() {
        let j1 = jack(&[1], 2);
        assert_eq!(j1.poly, parse_multipoly("x1 + x2", 2).unwrap());
        assert_eq!(j1.expansion.coeff(&pt(&[1])), AlphaRational::from_int(1));
        assert_eq!(j1.expansion.num_terms(), 1);

        let j11 = jack(&[1, 1], 2);
        assert_eq!(j11.poly, parse_multipoly("2*x1*x2", 2).unwrap());
        assert_eq!(
            j11.expansion.coeff(&pt(&[1, 1])),
            AlphaRational::from_int(2)
        );
        assert_eq!(j11.expansion.num_terms(), 1);
    }

    #[test]
    fn single_row_of_two() {
        let j2 = jack(&[2], 2);
        assert_eq!(
            j2.expansion.coeff(&pt(&[2])),
            AlphaRational::from(AlphaPoly::from_i64_coeffs(&[1, 1]))
        );
        assert_eq!(j2.expansion.coeff(&pt(&[1, 1])), AlphaRational::from_int(2));
        assert_eq!(j2.expansion.num_terms(), 2);
        // same coefficients in a larger variable count
        let j2_3 = jack(&[2], 3);
        assert_eq!(j2_3.expansion, j2.expansion);
    }

    #[test]
    fn too_many_parts_rejected() {
        assert_eq!(
            rodrigues_jack(&pt(&[1, 1, 1]), 2),
            Err(Error::PartitionTooLong { len: 3, n: 2 })
        );
    }

    #[test]
    fn stage_list_length_and_integrality() {
        // (2,1) at n=3: B1 once, then B2 once; seed plus two states
        let stages = rodrigues_stages(&pt(&[2, 1]), 3).unwrap();
        assert_eq!(stages.len(), 3);
        for s in &stages {
            assert!(s.has_integer_poly_coeffs());
        }
        // (3) at n=2: B1 three times
        let stages3 = rodrigues_stages(&pt(&[3]), 2).unwrap();
        assert_eq!(stages3.len(), 4);
    }

    #[test]
    fn spectrum_values() {
        assert_eq!(
            epsilon(&pt(&[1]), 2).unwrap(),
            AlphaPoly::from_i64_coeffs(&[1, 1])
        );
        assert_eq!(
            epsilon(&pt(&[2]), 2).unwrap(),
            AlphaPoly::from_i64_coeffs(&[2, 4])
        );
        assert_eq!(
            epsilon(&pt(&[1, 1]), 2).unwrap(),
            AlphaPoly::from_i64_coeffs(&[0, 2])
        );
        assert_eq!(epsilon(&Partition::empty(), 3).unwrap(), AlphaPoly::zero());
        assert!(epsilon(&pt(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn eigen_checks() {
        assert!(check_eigen(&jack(&[1], 2)));
        assert!(check_eigen(&jack(&[1, 1], 2)));
        assert!(check_eigen(&jack(&[2], 2)));
        // m_(2) alone is not an eigenfunction
        let fake_poly = m_poly(&pt(&[2]), 2);
        let fake = JackResult {
            lambda: pt(&[2]),
            n: 2,
            expansion: to_m_expansion(&fake_poly).unwrap(),
            poly: fake_poly,
        };
        assert!(!check_eigen(&fake));
    }

    #[test]
    fn commutator_small_cases() {
        assert!(check_commutator(&Partition::empty(), 1, 2).unwrap());
        assert!(check_commutator(&pt(&[1]), 1, 2).unwrap());
        assert!(check_commutator(&pt(&[1]), 2, 2).unwrap());
        assert!(check_commutator(&pt(&[2, 1]), 1, 2).is_err());
        assert!(check_commutator(&pt(&[1]), 3, 2).is_err());
    }

    #[test]
    fn commutator_empty_partition_both_sides() {
        // with phi = 1: H B_1+ 1 = (a+1)(x1+x2) and the brace is a+1
        let phi = MultiPoly::one(2);
        let b = apply_creation(&phi, 1).unwrap();
        let lhs = apply_hamiltonian(&b).unwrap();
        assert_eq!(lhs, parse_multipoly("(a + 1)*x1 + (a + 1)*x2", 2).unwrap());
    }

    #[test]
    fn triangularity_checks() {
        assert!(check_triangularity(&jack(&[2], 2)).unwrap());
        assert!(check_triangularity(&jack(&[2, 1], 3)).unwrap());
        // an expansion with a key not below lambda fails
        let mut exp = MExpansion::zero(3);
        exp.add_term(pt(&[2, 1]), AlphaRational::from_int(1));
        exp.add_term(pt(&[1, 1, 1]), AlphaRational::from_int(6));
        let doctored = JackResult {
            lambda: pt(&[1, 1, 1]),
            n: 3,
            poly: exp.to_poly(3),
            expansion: exp,
        };
        assert!(!check_triangularity(&doctored).unwrap());
        // truncated computations are refused
        let narrow = jack(&[2], 1);
        assert_eq!(
            check_triangularity(&narrow),
            Err(Error::NotEnoughVariables { needed: 2, n: 1 })
        );
    }

    #[test]
    fn normalization_checks() {
        assert!(check_normalization(&jack(&[1, 1], 2)).unwrap());
        assert!(check_normalization(&jack(&[2], 2)).unwrap());
        assert!(check_normalization(&jack(&[3], 3)).unwrap());
        let mut doctored = jack(&[2], 2);
        doctored
            .expansion
            .add_term(pt(&[1, 1]), AlphaRational::from_int(1));
        assert!(!check_normalization(&doctored).unwrap());
    }

    #[test]
    fn conjecture_reports() {
        let rep = conjecture_report(&jack(&[2], 2)).unwrap();
        assert_eq!(rep.entries.len(), 2);
        // entries in descending key order: (2) then (1,1)
        assert_eq!(rep.entries[0].mu, pt(&[2]));
        assert_eq!(
            rep.entries[0].tilde_v,
            AlphaRational::from(AlphaPoly::from_i64_coeffs(&[1, 1]))
        );
        assert_eq!(rep.entries[1].mu, pt(&[1, 1]));
        assert_eq!(rep.entries[1].v, AlphaRational::from_int(2));
        assert_eq!(rep.entries[1].tilde_v, AlphaRational::from_int(1));
        assert!(rep.all_integer());
        assert!(rep.all_nonneg());

        let rep11 = conjecture_report(&jack(&[1, 1], 2)).unwrap();
        assert_eq!(rep11.entries.len(), 1);
        assert_eq!(rep11.entries[0].v, AlphaRational::from_int(2));
        assert_eq!(rep11.entries[0].tilde_v, AlphaRational::from_int(1));

        let rep1 = conjecture_report(&jack(&[1], 1)).unwrap();
        assert_eq!(rep1.entries[0].v, AlphaRational::from_int(1));
        assert_eq!(rep1.entries[0].tilde_v, AlphaRational::from_int(1));
    }

    #[test]
    fn json_record_shape() {
        let record = jack_json_record(&jack(&[2], 2));
        let expected: Value = serde_json::from_str(
            r#"{"lambda":[2],"n":2,"coeffs":[
                {"mu":[2],"v":[[0,1],[1,1]]},
                {"mu":[1,1],"v":[[0,2]]}
            ]}"#,
        )
        .unwrap();
        assert_eq!(record, expected);
        assert!(record.get("rational").is_none());
    }

    #[test]
    fn json_record_flags_rational_coefficients() {
        let mut exp = MExpansion::zero(1);
        exp.add_term(
            pt(&[1]),
            AlphaRational::new(AlphaPoly::one(), AlphaPoly::from_i64_coeffs(&[1, 1])).unwrap(),
        );
        let doctored = JackResult {
            lambda: pt(&[1]),
            n: 1,
            poly: exp.to_poly(1),
            expansion: exp,
        };
        let record = jack_json_record(&doctored);
        assert_eq!(record["rational"], json!(true));
        assert_eq!(record["coeffs"][0]["v"]["den"], json!([[0, 1], [1, 1]]));
    }
}
