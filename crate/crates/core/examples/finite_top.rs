//! Any element of `F_2 wr S_3` as a bounded product of palindromes.

use palinwidth::decompose::{decompose_full_finite_top, FiniteTopBounds};
use palinwidth::{presets, sampling, WreathGroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> palinwidth::Result<()> {
    let w = WreathGroup::new(&presets::free(2), &presets::s3())?;
    let bounds = FiniteTopBounds::new(w.top(), 2)?;
    println!("bound {} ({}), published {}", bounds.guaranteed.value, bounds.guaranteed.rule, bounds.theorem.value);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..5 {
        let word = sampling::random_word(&mut rng, w.alphabet(), 30);
        let f = decompose_full_finite_top(&w, &word, None)?;
        println!("{:>2} letters -> {:>2} palindromes", word.len(), f.len());
    }
    Ok(())
}
