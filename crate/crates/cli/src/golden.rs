//! Expected outcomes bundled with the binary.

use ly_polyid::exactla::{read_dump, ExactMatrix, Field, Rationals};
use ly_polyid::pipeline::PartitionAnalysis;
use ly_polyid::symrep::Partition;
use ly_polyid::Result;

/// Canonical form of the binary consequences of the lifted identities in the
/// sign representation of degree 8.
pub const SIGN8_IDENTITIES: &str = include_str!("../golden/sign8_identities.dump");
/// Canonical form of the binary skew-symmetries in the same representation.
pub const SIGN8_SKEW: &str = include_str!("../golden/sign8_skew.dump");

/// Whether a new identity is expected in this representation.
pub fn expects_new_identity(pi: &Partition) -> bool {
    pi.n() == 8 && pi.is_sign()
}

fn golden<F: Field>(text: &str, field: &F) -> Result<ExactMatrix<F>> {
    read_dump(Rationals, text)?.convert(field.clone())
}

/// Differences between an analysis and the expected outcome; empty when
/// they agree.
pub fn compare<F: Field>(a: &PartitionAnalysis<F>, field: &F) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let expected = expects_new_identity(&a.partition);
    if a.contained() == expected {
        out.push(format!(
            "{}: expected {}, found {}",
            a.partition,
            if expected { "a new identity" } else { "containment" },
            if a.contained() { "containment" } else { "a new identity" },
        ));
    }
    if expected {
        if a.a_pi != golden(SIGN8_IDENTITIES, field)? {
            out.push(format!("{}: identity matrix differs from the golden table", a.partition));
        }
        if a.b_pi != golden(SIGN8_SKEW, field)? {
            out.push(format!("{}: skew-symmetry matrix differs from the golden table", a.partition));
        }
        if a.new_rows.len() != 1 {
            out.push(format!("{}: expected one new row, found {}", a.partition, a.new_rows.len()));
        }
    }
    Ok(out)
}
