//! Exact construction of Jack symmetric polynomials by creation operators,
//! with an independent Gram-Schmidt cross-check.

pub mod alpha;
pub mod error;
pub mod jack;
pub mod multipoly;
pub mod operators;
pub mod oracle;
pub mod output;
pub mod partition;
pub mod symfunc;
pub mod table;
pub mod text;
pub mod verify;

pub use alpha::{AlphaPoly, AlphaRational};
pub use error::{Error, Result};
pub use jack::{
    check_commutator, check_eigen, check_normalization, check_triangularity, conjecture_report,
    epsilon, rodrigues_jack, rodrigues_stages, ConjectureEntry, ConjectureReport, JackResult,
};
pub use multipoly::{Monomial, MultiPoly};
pub use operators::{
    apply_creation, apply_dj, apply_dunkl, apply_hamiltonian, apply_swap, is_symmetric, SubsetJ,
};
pub use oracle::{gram_schmidt_jack, gram_schmidt_jack_in_order, verify_oracle_self};
pub use output::{jack_csv, jack_json, jack_plain, parse_alpha};
pub use partition::{dominance_leq, partitions_of, Partition};
pub use symfunc::{m_poly, p_poly, scalar_product, to_m_expansion, MExpansion};
pub use table::{coefficient_table, table_to_csv, table_to_json, TableRow};
pub use text::parse_multipoly;
pub use verify::{run_verify, Check, CheckReport, VerifySummary};
