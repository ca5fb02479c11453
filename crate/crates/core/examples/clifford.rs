//! Clifford blocks and the 2-divisibility laws.

use supvar::algebra::{detecting_subalgebra, gl_superalgebra};
use supvar::clifford::{classify_block, form_from_weight, module_divisibility_default, simple_divisibility, OddFormData};
use supvar::modules::{kac_module, tensor};
use supvar::roots::Weight;

fn main() -> supvar::Result<()> {
    println!("dim_c1  n  z  simple  type  projective");
    for dim in 1..=4 {
        for n in 0..=dim {
            let c = classify_block(&OddFormData::diagonal(n, dim - n));
            println!("{dim:>6} {n:>2} {:>2} {:>7} {:>5?} {:>11}", dim - n, c.simple_dim, c.simple_type, c.projective_dim);
        }
    }

    let g = gl_superalgebra(2, 2);
    let e = detecting_subalgebra(2, 2);
    for text in ["0,0|0,0", "1,0|0,-1", "2,1|0,0"] {
        let form = form_from_weight(&g, e.odd_basis(), &Weight::parse(text)?)?;
        println!("χ from {text:<9} z {} n {} -> {:?}", form.z, form.n, classify_block(&form));
    }

    for text in ["1|0", "0|0", "1,0|0", "0,0|0,0", "1,0|0,-1"] {
        let s = simple_divisibility(&Weight::parse(text)?)?;
        println!(
            "L({text:<9}) dim {:>3} sdim {:>3} d {} pass {}",
            s.report.dim, s.report.superdimension, s.report.codimension, s.report.pass
        );
    }

    let k = kac_module(&Weight::parse("0|0")?)?;
    let product = tensor(&k.rep, &k.rep)?;
    let report = module_divisibility_default(&product)?;
    println!("K(0)⊗K(0) of gl(1|1): dim {} support {} pass {}", report.dim, report.support_dim, report.pass);
    Ok(())
}
