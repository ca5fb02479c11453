//! Defect and atypicality of a few gl(m|n) weights, checked against the exhaustive oracle.

use supvar::atypicality::{atypicality, atypicality_oracle, defect, theoretical_support};
use supvar::roots::Weight;

fn main() -> supvar::Result<()> {
    for text in ["0|0", "1|0", "2|1", "0,0|0", "1,0|0", "2,-1|1", "0,0|0,0", "1,0|0,-1", "3,1|0,-2"] {
        let lambda = Weight::parse(text)?;
        let (m, n) = lambda.shape();
        let cert = atypicality(&lambda);
        assert!(cert.validate(&lambda));
        let witness: Vec<String> = cert.witness.iter().map(|r| format!("e{}-e{}", r.i() + 1, r.j() + 1)).collect();
        let support = theoretical_support(&lambda)?;
        println!(
            "gl({m}|{n}) λ = {text:<9} defect {}  atyp {}  oracle {}  witness [{}]  support dim {}",
            defect(m, n),
            cert.value,
            atypicality_oracle(&lambda)?,
            witness.join(", "),
            support.support.dim
        );
    }
    Ok(())
}
