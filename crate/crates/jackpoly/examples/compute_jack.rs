//! Builds a few Jack polynomials and prints their monomial-basis expansions.

use jackpoly::{jack_plain, parse_alpha, rodrigues_jack, Partition};

fn main() -> jackpoly::Result<()> {
    for parts in [vec![3], vec![2, 1], vec![1, 1, 1]] {
        let lambda = Partition::new(parts)?;
        let n = lambda.weight() as usize;
        let result = rodrigues_jack(&lambda, n)?;
        print!("{}", jack_plain(&result, None)?);
    }

    // More variables than the weight: the same coefficients survive, new
    // orbits like m[1,1,1] simply truncate away at n = 2.
    println!();
    let lambda = Partition::new(vec![2])?;
    for n in [2, 4] {
        let result = rodrigues_jack(&lambda, n)?;
        print!("n = {n}:  {}", jack_plain(&result, None)?);
    }

    // At alpha = 1 the coefficients specialize to those of a scaled Schur
    // polynomial family; the expansion stays exact.
    println!();
    let one = parse_alpha("1")?;
    let result = rodrigues_jack(&Partition::new(vec![2, 1])?, 3)?;
    print!("alpha = 1:  {}", jack_plain(&result, Some(&one))?);
    println!("raw polynomial: {}", result.poly);
    Ok(())
}
