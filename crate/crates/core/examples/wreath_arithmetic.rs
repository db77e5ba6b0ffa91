//! Lamplighter-style arithmetic in `F_2 wr S_3` and `F_1 wr Z/5`.

use palinwidth::{presets, Word, WreathGroup};

fn main() -> palinwidth::Result<()> {
    let w = WreathGroup::new(&presets::free(2), &presets::s3())?;
    let g = w.evaluate(&Word::parse(w.alphabet(), "s^-1 y1 s t y2^2")?)?;
    println!("g        = {}", w.format_element(&g));
    println!("g^-1     = {}", w.format_element(&w.inverse(&g)?));
    let nf = w.normal_form(&g)?;
    println!("assembled: {}", w.assemble(&nf)?);

    let l = presets::lamplighter(5);
    let walk = l.evaluate(&Word::parse(l.alphabet(), "y1 c y1^2 c y1^3 c^-2")?)?;
    println!("lamplighter: {}", l.format_element(&walk));
    Ok(())
}
