//! Base values in the derived subgroup: one palindrome `h . reverse(h)`
//! after the top factors.

use palinwidth::commutators::CommutatorData;
use palinwidth::decompose::{decompose_derived_wreath, find_reversal_asymmetric_relation};
use palinwidth::{presets, Element, Word, WreathGroup};

fn main() -> palinwidth::Result<()> {
    let top = presets::d4();
    let w = WreathGroup::new(&presets::free(2), &top)?;
    let witness = find_reversal_asymmetric_relation(&top, 64)?;
    println!("relation {}", witness.relation);
    let base = w.base().alphabet();
    let mut cd = CommutatorData::new();
    cd.push(Element::Finite(0), vec![(Word::parse(base, "y1")?, Word::parse(base, "y2")?)]);
    cd.push(Element::Finite(3), vec![(Word::parse(base, "y2 y1")?, Word::parse(base, "y1^-1")?)]);
    let f = decompose_derived_wreath(&w, &cd, &Element::Finite(5), &witness)?;
    println!("{} palindromes (bound {})", f.len(), f.bound.as_ref().unwrap().value);
    for p in &f.factors {
        println!("  {} letters: {}", p.len(), p);
    }
    Ok(())
}
