//! Literal words: reversal, inversion and palindrome certificates.

use palinwidth::{presets, Word};

fn main() -> palinwidth::Result<()> {
    let a = presets::free(2).alphabet().clone();
    let w = Word::parse(&a, "y1 y2^-1 y2 y1^3")?;
    println!("w            = {w}");
    println!("reverse(w)   = {}", w.reverse());
    println!("w^-1         = {}", w.invert());
    println!("reduced      = {}", w.reduce_free());

    // No cancellation happens before the palindrome check.
    let p = Word::sandwich(&Word::parse(&a, "y1 y2^-1")?, &Word::parse(&a, "y2")?)?;
    match p.is_palindrome() {
        Some(cert) => println!("{p} is a palindrome, center {:?}", cert.center_name()),
        None => println!("{p} is not a palindrome"),
    }
    println!("{w} palindrome? {}", w.is_palindrome().is_some());
    Ok(())
}
