//! Demonstrates the alpha-deformed scalar product: power sums are
//! orthogonal, constructed polynomials are orthogonal, and the norms of the
//! latter are rational functions of alpha.

use jackpoly::{p_poly, partitions_of, rodrigues_jack, scalar_product, to_m_expansion, Partition};

fn main() -> jackpoly::Result<()> {
    // <p_lambda, p_mu> = z_lambda alpha^len(lambda) delta_{lambda mu}
    let n = 3;
    for parts in [vec![3], vec![2, 1], vec![1, 1, 1]] {
        let lambda = Partition::new(parts)?;
        let p = to_m_expansion(&p_poly(&lambda, n))?;
        println!(
            "<p[{lambda}], p[{lambda}]> = {}   (z = {})",
            scalar_product(&p, &p)?.render(),
            lambda.z()
        );
    }

    // Distinct equal-weight polynomials from the pipeline are orthogonal;
    // the diagonal norms do not factor through z alone.
    println!();
    let weight = 4u32;
    let lambdas = partitions_of(weight, weight as usize);
    for a in &lambdas {
        let ja = rodrigues_jack(a, weight as usize)?;
        for b in &lambdas {
            let jb = rodrigues_jack(b, weight as usize)?;
            let s = scalar_product(&ja.expansion, &jb.expansion)?;
            if a == b {
                println!("|J[{a}]|^2 = {}", s.render());
            } else if !s.is_zero() {
                println!("unexpected overlap <J[{a}], J[{b}]> = {}", s.render());
            }
        }
    }
    println!("all off-diagonal products vanished");
    Ok(())
}
