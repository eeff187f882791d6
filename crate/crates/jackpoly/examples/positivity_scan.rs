//! Scans every expansion coefficient up to a weight bound for the
//! integrality and positivity patterns, then prints one table in full.

use jackpoly::{conjecture_report, partitions_of, rodrigues_jack, Partition};

fn main() -> jackpoly::Result<()> {
    let max_weight = 6u32;
    let mut coefficients = 0usize;
    let mut findings = Vec::new();
    for w in 1..=max_weight {
        for lambda in partitions_of(w, w as usize) {
            let report = conjecture_report(&rodrigues_jack(&lambda, w as usize)?)?;
            for entry in &report.entries {
                coefficients += 1;
                if !entry.is_integer_poly {
                    findings.push(format!(
                        "non-integer v at ({lambda}; {}): {}",
                        entry.mu,
                        entry.v.render()
                    ));
                }
                if !entry.is_nonneg_integer_poly {
                    findings.push(format!(
                        "negative tilde v at ({lambda}; {}): {}",
                        entry.mu,
                        entry.tilde_v.render()
                    ));
                }
            }
        }
    }
    println!("scanned {coefficients} coefficients up to weight {max_weight}");
    if findings.is_empty() {
        println!("all v integral, all tilde v with nonnegative integer coefficients");
    } else {
        for f in &findings {
            println!("{f}");
        }
    }

    let lambda = Partition::new(vec![3, 1])?;
    let report = conjecture_report(&rodrigues_jack(&lambda, 4)?)?;
    println!("\nlambda = {lambda}:");
    println!("{:<10} {:<28} tilde v", "mu", "v");
    for entry in &report.entries {
        let v = entry.v.as_integer_poly().expect("integral on this path");
        let tv = entry
            .tilde_v
            .as_integer_poly()
            .expect("integral on this path");
        println!(
            "{:<10} {:<28} {}",
            entry.mu.to_string(),
            v.render(),
            tv.render()
        );
    }
    Ok(())
}
