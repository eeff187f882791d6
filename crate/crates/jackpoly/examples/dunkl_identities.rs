//! Shows the Dunkl-type operator on monomials and the exchange identities
//! it satisfies, including the commutator with a creation operator.

use jackpoly::{apply_dunkl, apply_swap, check_commutator, parse_multipoly, Partition};

fn main() -> jackpoly::Result<()> {
    let n = 2;
    for input in ["x1", "x2", "x1^2", "x1*x2", "x2^3"] {
        let f = parse_multipoly(input, n)?;
        println!("D1 {input} = {}", apply_dunkl(&f, 1)?);
    }

    // Commutation: [D1, D2] f = (D2 - D1) K12 f for any f.
    let f = parse_multipoly("x1^3*x2 + 2*x3^2", 3)?;
    let lhs = &apply_dunkl(&apply_dunkl(&f, 2)?, 1)? - &apply_dunkl(&apply_dunkl(&f, 1)?, 2)?;
    let swapped = apply_swap(&f, 1, 2)?;
    let rhs = &apply_dunkl(&swapped, 2)? - &apply_dunkl(&swapped, 1)?;
    println!("\n[D1, D2] f            = {lhs}");
    println!("(D2 - D1) K12 f       = {rhs}");
    println!("equal: {}", lhs == rhs);

    // On pair-symmetric inputs the shifted operators commute as well:
    // (D1 + m)(D2 + m + 1) f = (D2 + m)(D1 + m + 1) f.
    let g = parse_multipoly("x1^2*x2^2 + x1 + x2", 2)?;
    let shifted = |h: &jackpoly::MultiPoly, v: usize, m: i64| {
        Ok::<_, jackpoly::Error>(&apply_dunkl(h, v)? + &h.scale_int(m))
    };
    for m in 0..=3i64 {
        let lhs = shifted(&shifted(&g, 2, m + 1)?, 1, m)?;
        let rhs = shifted(&shifted(&g, 1, m + 1)?, 2, m)?;
        println!("restricted identity at m = {m}: {}", lhs == rhs);
    }

    // The Sutherland operator moves through a creation operator with a
    // scalar defect, checked here for several (lambda, i, n).
    println!();
    for (parts, i, n) in [(vec![], 1, 2), (vec![1], 2, 3), (vec![2, 1], 2, 3)] {
        let lambda = Partition::new(parts)?;
        println!(
            "commutator defect matches at lambda = {lambda}, i = {i}, n = {n}: {}",
            check_commutator(&lambda, i, n)?
        );
    }
    Ok(())
}
