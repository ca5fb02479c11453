//! Rank varieties over the detecting subalgebra compared with the closed form.

use supvar::modules::kac_module;
use supvar::roots::Weight;
use supvar::support::{compare_to_theorem, empirical_support, is_projective_at, OddPoint, DEFAULT_SEED};

fn main() -> supvar::Result<()> {
    let k0 = kac_module(&Weight::parse("0,0|0,0")?)?;
    println!(
        "K(0) of gl(2|2) projective at (1, -2): {}",
        is_projective_at(&k0.rep, &OddPoint::from_ints(&[1, -2]))?
    );
    let support = empirical_support(&k0.rep, 3, DEFAULT_SEED)?;
    println!("K(0) of gl(2|2) support: {}", serde_json::to_string(&support.support).expect("json"));

    for text in ["0|0", "1|0", "2|1", "0,0|0", "1,0|0", "0,0|0,0", "1,0|0,-1", "1,0|0,0"] {
        let report = compare_to_theorem(&Weight::parse(text)?)?;
        println!(
            "L({text:<9}) theoretical {}  empirical {}  match {}",
            serde_json::to_string(&report.theoretical).expect("json"),
            serde_json::to_string(&report.empirical).expect("json"),
            report.matches
        );
    }
    Ok(())
}
