//! Kac modules, their contravariant forms and simple quotients.

use supvar::modules::{contravariant_form, kac_module, simple_module_from, simplicity_check, verify_rep};
use supvar::roots::{dim_l0, Weight};

fn main() -> supvar::Result<()> {
    for text in ["0|0", "1|0", "0,0|0", "1,0|0", "2,0|-1", "0,0|0,0", "1,0|0,-1"] {
        let lambda = Weight::parse(text)?;
        let kac = kac_module(&lambda)?;
        let form = contravariant_form(&kac)?;
        let simple = simple_module_from(&kac)?;
        println!(
            "λ = {text:<9} dim L0 {:>2}  dim K {:>3}  rank form {:>3}  dim L {:>3}  sdim L {:>3}  rep ok {}  simple {}",
            dim_l0(&lambda)?,
            kac.dim(),
            form.rank(),
            simple.dim(),
            simple.rep.superdimension(),
            verify_rep(&simple.rep).ok,
            simplicity_check(&simple.rep, &lambda),
        );
    }
    Ok(())
}
