//! Applies the Sutherland-type operator to each constructed polynomial and
//! reads off its eigenvalue, a polynomial in alpha.

use jackpoly::{apply_hamiltonian, check_eigen, epsilon, partitions_of, rodrigues_jack};

fn main() -> jackpoly::Result<()> {
    for weight in 1..=4u32 {
        for lambda in partitions_of(weight, weight as usize) {
            let n = weight as usize;
            let built = rodrigues_jack(&lambda, n)?;
            let eig = epsilon(&lambda, n)?;
            println!(
                "H J[{lambda}] = ({}) J[{lambda}]   n = {n}, confirmed: {}",
                eig.render(),
                check_eigen(&built)
            );
        }
        println!();
    }

    // The eigenvalues separate partitions of equal weight, which is what
    // makes the polynomials simultaneous eigenfunctions with distinct labels.
    let lambdas = partitions_of(4, 4);
    for la in &lambdas {
        println!("epsilon({la}) = {}", epsilon(la, 4)?.render());
    }

    // The image under H really is the rescaled polynomial, term by term.
    let built = rodrigues_jack(&lambdas[1], 4)?;
    let image = apply_hamiltonian(&built.poly)?;
    println!(
        "\nimage has {} terms, input has {} terms",
        image.num_terms(),
        built.poly.num_terms()
    );
    Ok(())
}
