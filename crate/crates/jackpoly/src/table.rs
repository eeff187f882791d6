//! Tabulates monomial-expansion coefficients `v` and their rescalings
//! `v-tilde` for every partition up to a weight bound, as CSV or JSON.

use num_rational::BigRational;
use serde_json::{json, Value};

use crate::alpha::AlphaRational;
use crate::error::{Error, Result};
use crate::jack::{conjecture_report, partition_json, rodrigues_jack};
use crate::output::{eval_value, rational_json, render_rational, render_value, value_json};
use crate::partition::{partitions_of, Partition};

/// One `(lambda, mu)` cell of the coefficient table.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub lambda: Partition,
    pub mu: Partition,
    pub v: AlphaRational,
    /// `v` divided by the product of multiplicity factorials of `mu`.
    pub tilde_v: AlphaRational,
}

/// Rows for every nonempty `lambda` with weight at most `max_weight`,
/// computed with `n = |lambda|` variables. Order: weight ascending, then
/// `lambda` descending-lex, then `mu` descending-lex; only nonzero
/// coefficients appear.
pub fn coefficient_table(max_weight: u32) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for w in 1..=max_weight {
        for lambda in partitions_of(w, w as usize) {
            let result = rodrigues_jack(&lambda, w as usize)?;
            let report = conjecture_report(&result)?;
            for entry in report.entries {
                rows.push(TableRow {
                    lambda: lambda.clone(),
                    mu: entry.mu,
                    v: entry.v,
                    tilde_v: entry.tilde_v,
                });
            }
        }
    }
    Ok(rows)
}

/// CSV with header `lambda,mu,v,v_tilde`. Coefficients render compactly in
/// ascending degree (`2+4a`); with `alpha` set they are evaluated to exact
/// rationals instead.
pub fn table_to_csv(rows: &[TableRow], alpha: Option<&BigRational>) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["lambda", "mu", "v", "v_tilde"])
        .map_err(|e| Error::Parse(e.to_string()))?;
    for row in rows {
        let (v, tv) = match alpha {
            None => (render_value(&row.v), render_value(&row.tilde_v)),
            Some(a) => (
                render_rational(&eval_value(&row.v, a)?),
                render_rational(&eval_value(&row.tilde_v, a)?),
            ),
        };
        writer
            .write_record([row.lambda.to_string(), row.mu.to_string(), v, tv])
            .map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

/// JSON array of `{"lambda": [...], "mu": [...], "v": ..., "v_tilde": ...}`
/// records, polynomials as `[[degree, coefficient], ...]`.
pub fn table_to_json(rows: &[TableRow], alpha: Option<&BigRational>) -> Result<Value> {
    let mut records = Vec::with_capacity(rows.len());
    for row in rows {
        let (v, tv) = match alpha {
            None => (value_json(&row.v), value_json(&row.tilde_v)),
            Some(a) => (
                rational_json(&eval_value(&row.v, a)?),
                rational_json(&eval_value(&row.tilde_v, a)?),
            ),
        };
        records.push(json!({
            "lambda": partition_json(&row.lambda),
            "mu": partition_json(&row.mu),
            "v": v,
            "v_tilde": tv,
        }));
    }
    Ok(Value::Array(records))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn weight_two_rows_in_order() {
        let rows = coefficient_table(2).unwrap();
        let cells: Vec<(Partition, Partition)> = rows
            .iter()
            .map(|r| (r.lambda.clone(), r.mu.clone()))
            .collect();
        assert_eq!(
            cells,
            vec![
                (pt(&[1]), pt(&[1])),
                (pt(&[2]), pt(&[2])),
                (pt(&[2]), pt(&[1, 1])),
                (pt(&[1, 1]), pt(&[1, 1])),
            ]
        );
        // J_(2) = (1+a) m_(2) + 2 m_(1,1); m_(1,1) has multiplicity 2! so
        // tilde v there is 1.
        assert_eq!(rows[1].v.as_integer_poly().unwrap().render(), "1 + a");
        assert_eq!(rows[2].v, AlphaRational::from_int(2));
        assert_eq!(rows[2].tilde_v, AlphaRational::from_int(1));
        assert_eq!(rows[3].v, AlphaRational::from_int(2));
    }

    #[test]
    fn csv_golden_weight_two() {
        let rows = coefficient_table(2).unwrap();
        let csv = table_to_csv(&rows, None).unwrap();
        let expected = "\
lambda,mu,v,v_tilde
1,1,1,1
2,2,1+a,1+a
2,\"1,1\",2,1
\"1,1\",\"1,1\",2,1
";
        assert_eq!(csv, expected);
    }

    #[test]
    fn csv_evaluated_at_rational_alpha() {
        let rows = coefficient_table(2).unwrap();
        let alpha = BigRational::new(BigInt::from(1), BigInt::from(2));
        let csv = table_to_csv(&rows, Some(&alpha)).unwrap();
        assert!(csv.contains("2,2,3/2,3/2\n"));
        assert!(csv.contains("2,\"1,1\",2,1\n"));
    }

    #[test]
    fn json_records_shape() {
        let rows = coefficient_table(2).unwrap();
        let value = table_to_json(&rows, None).unwrap();
        let records = value.as_array().unwrap();
        assert_eq!(records.len(), 4);
        assert_eq!(records[1]["lambda"], json!([2]));
        assert_eq!(records[1]["mu"], json!([2]));
        assert_eq!(records[1]["v"], json!([[0, 1], [1, 1]]));
        assert_eq!(records[2]["v"], json!([[0, 2]]));
        assert_eq!(records[2]["v_tilde"], json!([[0, 1]]));
    }

    #[test]
    fn json_evaluated_at_integer_alpha() {
        let rows = coefficient_table(2).unwrap();
        let alpha = BigRational::from_integer(BigInt::from(2));
        let value = table_to_json(&rows, Some(&alpha)).unwrap();
        assert_eq!(value[1]["v"], json!(3));
    }

    #[test]
    fn zero_weight_table_is_empty() {
        assert!(coefficient_table(0).unwrap().is_empty());
    }
}
