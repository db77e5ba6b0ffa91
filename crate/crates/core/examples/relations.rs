//! Relations whose reverse is not a relation.

use palinwidth::decompose::{find_reversal_asymmetric_relation, DEFAULT_RELATION_BUDGET};
use palinwidth::{presets, Group};

fn main() -> palinwidth::Result<()> {
    let groups = [
        ("S3", presets::s3()),
        ("D4", presets::d4()),
        ("Q8", presets::q8()),
        ("S4", presets::s4()),
        ("BS(1,2)", Group::baumslag_solitar(1, 2)?),
        ("BS(2,3)", Group::baumslag_solitar(2, 3)?),
    ];
    for (name, g) in groups {
        let w = find_reversal_asymmetric_relation(&g, DEFAULT_RELATION_BUDGET)?;
        let extra = w.extra_generator.as_ref().map_or(String::new(), |e| format!(" with {} = {}", e.name, e.word));
        println!("{name:<8} {}{extra}; reverse gives {}", w.relation, w.group.format_element(&w.reverse_value));
    }
    // Equal parameters admit no witness of the fixed shape.
    println!("BS(2,2): {:?}", find_reversal_asymmetric_relation(&Group::baumslag_solitar(2, 2)?, 64).err());
    Ok(())
}
