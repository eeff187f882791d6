//! Cross-cutting properties of the construction pipeline that go beyond a
//! single module: agreement with the Gram-Schmidt construction, stability
//! under change of variable count, and eigenfunction behavior away from the
//! minimal variable count.

use jackpoly::jack::{check_eigen, rodrigues_jack};
use jackpoly::oracle::gram_schmidt_jack;
use jackpoly::partition::partitions_of;
use jackpoly::symfunc::{to_m_expansion, MExpansion};

#[test]
fn staged_product_agrees_with_gram_schmidt_up_to_weight_four() {
    for weight in 1..=4u32 {
        let oracle = gram_schmidt_jack(weight).unwrap();
        for lambda in partitions_of(weight, weight as usize) {
            let built = rodrigues_jack(&lambda, weight as usize).unwrap();
            assert_eq!(
                built.expansion, oracle[&lambda],
                "disagreement at {}",
                lambda
            );
        }
    }
}

#[test]
fn expansions_are_stable_under_variable_count() {
    // computing with fewer variables n' >= len(lambda) must equal the full
    // expansion with all keys longer than n' dropped
    for weight in 1..=5u32 {
        let n_full = weight as usize;
        for lambda in partitions_of(weight, weight as usize) {
            let full = rodrigues_jack(&lambda, n_full).unwrap();
            for n_small in lambda.len().max(1)..n_full {
                let small = rodrigues_jack(&lambda, n_small).unwrap();
                let mut truncated = MExpansion::zero(weight);
                for (mu, c) in full.expansion.iter() {
                    if mu.len() <= n_small {
                        truncated.add_term(mu.clone(), c.clone());
                    }
                }
                assert_eq!(
                    small.expansion, truncated,
                    "lambda = {}, n = {}",
                    lambda, n_small
                );
                // and the polynomial really is the truncated expansion
                assert_eq!(small.poly, truncated.to_poly(n_small));
            }
        }
    }
}

#[test]
fn eigen_holds_above_the_minimal_variable_count() {
    for weight in 0..=4u32 {
        for lambda in partitions_of(weight, 4) {
            for n in lambda.len().max(1)..=4 {
                let built = rodrigues_jack(&lambda, n).unwrap();
                assert!(check_eigen(&built), "lambda = {}, n = {}", lambda, n);
            }
        }
    }
}

#[test]
fn rebuilt_polynomials_round_trip_through_the_m_basis() {
    for weight in 1..=4u32 {
        for lambda in partitions_of(weight, weight as usize) {
            let built = rodrigues_jack(&lambda, weight as usize).unwrap();
            let rebuilt = built.expansion.to_poly(built.n);
            assert_eq!(rebuilt, built.poly);
            assert_eq!(to_m_expansion(&rebuilt).unwrap(), built.expansion);
        }
    }
}
