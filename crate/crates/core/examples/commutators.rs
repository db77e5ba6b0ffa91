//! Commutator expressions in free and finite groups.

use palinwidth::commutators::{express_in_derived, express_in_derived_finite, is_perfect, verify_free_expression};
use palinwidth::{presets, Word};

fn main() -> palinwidth::Result<()> {
    let a = presets::free(3).alphabet().clone();
    let w = Word::parse(&a, "y1 y2 y3 y1^-1 y3^-1 y2^-1")?;
    let pairs = express_in_derived(&w)?;
    for (u, v) in &pairs {
        println!("[{u}, {v}]");
    }
    println!("recovers {w}: {}", verify_free_expression(&w, &pairs)?);

    let a5 = presets::a5();
    println!("A5 perfect: {}", is_perfect(&a5)?);
    let x = a5.evaluate(&Word::parse(a5.alphabet(), "a b")?)?;
    let parts: Vec<String> = express_in_derived_finite(&a5, &x)?.iter().map(|(u, v)| format!("[{u}, {v}]")).collect();
    println!("a b = {}", parts.join(" "));
    Ok(())
}
