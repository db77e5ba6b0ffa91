//! Exact palindromic widths of small finite groups.

use palinwidth::oracle::exact_palindromic_width;
use palinwidth::presets;

fn main() -> palinwidth::Result<()> {
    let mut groups = vec![
        ("V4".to_string(), presets::klein_four()),
        ("S3".to_string(), presets::s3()),
        ("Q8".to_string(), presets::q8()),
        ("S4".to_string(), presets::s4()),
        ("A5".to_string(), presets::a5()),
    ];
    groups.extend((3..=6).map(|n| (format!("D{n}"), presets::dihedral(n).unwrap())));
    println!("{:<4} {:>5} {:>5}  histogram", "", "order", "width");
    for (name, g) in groups {
        let r = exact_palindromic_width(&g)?;
        println!("{name:<4} {:>5} {:>5}  {:?}", g.order().unwrap(), r.width, r.histogram);
    }
    Ok(())
}
