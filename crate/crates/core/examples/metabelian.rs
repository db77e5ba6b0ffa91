//! Pluggable metabelian factorizations: exact for finite groups, refused otherwise.

use palinwidth::decompose::{decompose_metabelian, ExternalMetabelian, FiniteMetabelian};
use palinwidth::presets;

fn main() -> palinwidth::Result<()> {
    let d4 = presets::d4();
    for e in d4.elements()? {
        let f = decompose_metabelian(&FiniteMetabelian, &d4, &e)?;
        let words: Vec<String> = f.factors.iter().map(|w| w.to_string()).collect();
        println!("{:<12} {}", d4.represent(&e)?.to_string(), words.join(" | "));
    }
    println!("{:?}", decompose_metabelian(&FiniteMetabelian, &presets::s4(), &presets::s4().identity()).err());
    println!("{:?}", decompose_metabelian(&ExternalMetabelian, &d4, &d4.identity()).err());
    Ok(())
}
