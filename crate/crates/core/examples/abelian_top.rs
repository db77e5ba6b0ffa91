//! `[a, t]` in `F_2 wr Z^n` as exactly 2n or 2n+1 palindromes.

use palinwidth::decompose::{decompose_commutator_pair, decompose_commutator_abelian_top};
use palinwidth::{presets, Word, WreathGroup};

fn main() -> palinwidth::Result<()> {
    for n in 1..=3 {
        let w = WreathGroup::new(&presets::free(2), &presets::free_abelian(n))?;
        let a = Word::parse(w.alphabet(), "y1 y2^-1 y1")?;
        let exps: Vec<i64> = (1..=n as i64).collect();
        let f = decompose_commutator_abelian_top(&w, &a, &exps)?;
        println!("n = {n}: {} palindromes", f.len());
        for p in &f.factors {
            println!("  {p}");
        }
    }
    let w = WreathGroup::new(&presets::free(2), &presets::free_abelian(2))?;
    let (a, b) = (Word::parse(w.alphabet(), "y1")?, Word::parse(w.alphabet(), "y2")?);
    let pair = decompose_commutator_pair(&w, &a, &b, &[1, -1])?;
    println!("[y1, t][y2, t^2]: {} palindromes, bound {:?}", pair.len(), pair.bound.map(|b| b.value));
    Ok(())
}
