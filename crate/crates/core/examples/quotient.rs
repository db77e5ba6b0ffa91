//! Palindrome factorizations survive quotient maps with the same count.

use palinwidth::decompose::{certify, push_factorization};
use palinwidth::groups::Homomorphism;
use palinwidth::{presets, Letter, Word};

fn main() -> palinwidth::Result<()> {
    let f2 = presets::free(2);
    let a = f2.alphabet();
    let factors = ["y1 y2 y1", "y2^-1", "y1 y2 y2 y1"].map(|s| Word::parse(a, s).unwrap()).to_vec();
    let target = f2.evaluate(&Word::product(a, &factors)?)?;
    let fact = certify(&f2, target, factors, None)?;
    for q in [presets::klein_four(), presets::s3()] {
        let images = [q.letter_value(Letter::pos(0))?, q.letter_value(Letter::pos(1))?];
        let hom = Homomorphism::quotient_map(&f2, &q, &images)?;
        let pushed = push_factorization(&hom, &fact)?;
        println!("order {:?}: {} palindromes, target {}", hom.target().order(), pushed.len(), hom.target().format_element(&pushed.target));
    }
    Ok(())
}
