//! Shortlex geodesics and word lengths in a finite group.

use palinwidth::{presets, Element};

fn main() -> palinwidth::Result<()> {
    for (name, g) in [("S3", presets::s3()), ("Q8", presets::q8()), ("D4", presets::d4())] {
        let table = g.geodesics()?;
        println!("{name}: order {}, diameter {}", g.order().unwrap(), table.diameter());
        for (i, len) in table.lengths().iter().enumerate() {
            println!("  {:>2}  len {len}  {}", i, g.represent(&Element::Finite(i))?);
        }
    }
    Ok(())
}
