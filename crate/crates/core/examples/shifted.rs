//! Seven palindromes per commutator when the top has an element of infinite order.

use palinwidth::commutators::CommutatorData;
use palinwidth::decompose::decompose_shifted_commutators;
use palinwidth::{presets, Element, Word, WreathGroup};

fn main() -> palinwidth::Result<()> {
    let w = WreathGroup::new(&presets::s3(), &presets::free_abelian(1))?;
    let base = w.base().alphabet();
    let mut cd = CommutatorData::new();
    cd.push(Element::Vector(vec![0]), vec![(Word::parse(base, "s")?, Word::parse(base, "t")?)]);
    cd.push(Element::Vector(vec![2]), vec![(Word::parse(base, "t s")?, Word::parse(base, "s")?)]);
    let f = decompose_shifted_commutators(&w, &cd, &Element::Vector(vec![-3]), None)?;
    println!("target {}", w.format_element(&f.target));
    for (i, p) in f.factors.iter().enumerate() {
        println!("{:>2}  {p}", i + 1);
    }
    Ok(())
}
