//! Relative cohomology of gl(m|n) and Ext groups out of Kac modules by two routes.

use supvar::algebra::gl_superalgebra;
use supvar::cohomology::{build_complex, hilbert_series, kac_ext_dims, kac_ext_via_complex, vanishing_bound};
use supvar::modules::{kac_module, simple_module, SuperModuleRep};
use supvar::roots::Weight;

fn main() -> supvar::Result<()> {
    for (m, n) in [(1, 1), (2, 1), (2, 2)] {
        let g = gl_superalgebra(m, n);
        let complex = build_complex(&g, &SuperModuleRep::trivial(g.clone()), 6)?;
        println!(
            "gl({m}|{n}) H^p(g, g0; C) = {:?}  Hilbert series {:?}",
            complex.cohomology_dims()?,
            hilbert_series(m.min(n), 6)
        );
    }

    let g = gl_superalgebra(1, 1);
    let coefficients = [
        ("C", SuperModuleRep::trivial(g.clone())),
        ("K(0)", kac_module(&Weight::parse("0|0")?)?.rep),
        ("L(1|0)", simple_module(&Weight::parse("1|0")?)?.rep),
    ];
    for lambda in ["0|0", "1|0", "-1|1"] {
        let lambda = Weight::parse(lambda)?;
        for (name, module) in &coefficients {
            println!(
                "Ext(K({lambda}), {name:<6}) full {:?}  reduced {:?}  vanishes from degree {}",
                kac_ext_via_complex(&lambda, module, 4)?.dims,
                kac_ext_dims(&lambda, module, 4)?.dims,
                vanishing_bound(&lambda, module)?
            );
        }
    }
    Ok(())
}
