//! Recomputes every expansion of a given weight two independent ways, then
//! diffs them: the operator pipeline against Gram-Schmidt in the m-basis.

use jackpoly::{gram_schmidt_jack, partitions_of, rodrigues_jack, verify_oracle_self};

fn main() -> jackpoly::Result<()> {
    for weight in 1..=5u32 {
        let oracle = gram_schmidt_jack(weight)?;
        let mut agree = 0usize;
        for lambda in partitions_of(weight, weight as usize) {
            let built = rodrigues_jack(&lambda, weight as usize)?;
            if built.expansion != oracle[&lambda] {
                println!("disagreement at lambda = {lambda}");
                println!("  operators:    {:?}", built.expansion);
                println!("  gram-schmidt: {:?}", oracle[&lambda]);
                std::process::exit(1);
            }
            agree += 1;
        }
        println!(
            "weight {weight}: {agree} expansions agree; oracle self-check: {}",
            verify_oracle_self(weight)
        );
    }
    Ok(())
}
