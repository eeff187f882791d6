//! Walks the creation-operator product one stage at a time and shows each
//! intermediate polynomial keeping integer alpha-coefficients.

use jackpoly::{apply_creation, rodrigues_stages, MultiPoly, Partition};

fn main() -> jackpoly::Result<()> {
    // B1+ adds one box to one row, B2+ adds a column of two, and so on.
    let n = 3;
    let one = MultiPoly::one(n);
    let row = apply_creation(&one, 1)?;
    let column = apply_creation(&one, 2)?;
    println!("B1+ 1 = {row}");
    println!("B2+ 1 = {column}");
    println!("B2+ B1+ 1 = {}", apply_creation(&row, 2)?);

    // The full product for lambda = (2,1): exponents are the part
    // differences, lowest operator applied first.
    let lambda = Partition::new(vec![2, 1])?;
    println!("\nstages toward J[{lambda}] in {n} variables:");
    for (k, stage) in rodrigues_stages(&lambda, n)?.iter().enumerate() {
        println!(
            "  stage {k} ({} terms, integer alpha-coefficients: {}):",
            stage.num_terms(),
            stage.has_integer_poly_coeffs()
        );
        println!("    {stage}");
    }
    Ok(())
}
