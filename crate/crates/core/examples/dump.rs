//! JSON dump of a module: basis labels, parities, weights and action matrices.

use supvar::modules::{dual, dump, simple_module};
use supvar::roots::Weight;

fn main() -> supvar::Result<()> {
    let simple = simple_module(&Weight::parse("1|0")?)?;
    println!("{}", serde_json::to_string_pretty(&dump(&simple.rep)).expect("json"));
    let d = dump(&dual(&simple.rep));
    println!("dual: dim {} superdimension {}", d.dim, d.superdimension);
    Ok(())
}
