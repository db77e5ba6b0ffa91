//! Built-in groups, so examples and acceptance runs need no input files.
//!
//! Permutations are one-line images, 1-based, multiplied left to right.

use crate::error::{Error, Result};
use crate::groups::Group;
use crate::wreath::WreathGroup;

/// `S_3 = <s, t>` with `s = (1 2)`, `t = (1 2 3)`.
pub fn s3() -> Group {
    Group::from_permutations(&["s", "t"], &[vec![2, 1, 3], vec![2, 3, 1]]).expect("S3")
}

/// `S_4 = <s, t>` with `s = (1 2)`, `t = (1 2 3 4)`.
pub fn s4() -> Group {
    Group::from_permutations(&["s", "t"], &[vec![2, 1, 3, 4], vec![2, 3, 4, 1]]).expect("S4")
}

/// Dihedral group of order `2n` on `<r, f>`: rotation and reflection of an n-gon.
pub fn dihedral(n: usize) -> Result<Group> {
    if n < 2 {
        return Err(Error::GroupDefinition("dihedral group needs n >= 2".into()));
    }
    let r: Vec<usize> = (0..n).map(|i| (i + 1) % n + 1).collect();
    let f: Vec<usize> = (0..n).map(|i| (n - i) % n + 1).collect();
    Group::from_permutations(&["r", "f"], &[r, f])
}

/// Symmetries of the square, order 8.
pub fn d4() -> Group {
    dihedral(4).expect("D4")
}

/// Quaternion group `<i, j>` of order 8, from its Cayley table.
pub fn q8() -> Group {
    // Element 2*u + sign, units u in (1, i, j, k), sign 1 meaning negated.
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let table: Vec<Vec<usize>> = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (u, neg) = UNIT[a / 2][b / 2];
                    2 * u + usize::from(neg ^ (a % 2 == 1) ^ (b % 2 == 1))
                })
                .collect()
        })
        .collect();
    Group::from_cayley_table(&["i", "j"], &table, &[2, 4]).expect("Q8")
}

/// `Z/2 x Z/2 = <a, b>`.
pub fn klein_four() -> Group {
    Group::from_permutations(&["a", "b"], &[vec![2, 1, 4, 3], vec![3, 4, 1, 2]]).expect("V4")
}

/// Cyclic group `Z/k = <c>`.
pub fn cyclic(k: usize) -> Group {
    let k = k.max(1);
    let c: Vec<usize> = (0..k).map(|i| (i + 1) % k + 1).collect();
    Group::from_permutations(&["c"], &[c]).expect("cyclic")
}

/// Alternating group `A_5 = <a, b>` with `a = (1 2 3)`, `b = (1 2 3 4 5)`; perfect.
pub fn a5() -> Group {
    Group::from_permutations(&["a", "b"], &[vec![2, 3, 1, 4, 5], vec![2, 3, 4, 5, 1]]).expect("A5")
}

/// Free group on `y1, ..., yd`.
pub fn free(d: usize) -> Group {
    let names: Vec<String> = (1..=d).map(|i| format!("y{i}")).collect();
    Group::free(&names).expect("free")
}

/// `F_d^ab` on `y1, ..., yd`.
pub fn abelianized_free(d: usize) -> Group {
    let names: Vec<String> = (1..=d).map(|i| format!("y{i}")).collect();
    Group::abelianized_free(&names).expect("abelianized free")
}

/// `Z^n` on `t1, ..., tn`.
pub fn free_abelian(n: usize) -> Group {
    let names: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    Group::free_abelian(&names).expect("free abelian")
}

/// `F_1 wr Z/k`: an integer lamp at each point of a k-cycle, cursor `c`, lamp `y1`.
pub fn lamplighter(k: usize) -> WreathGroup {
    WreathGroup::new(&free(1), &cyclic(k)).expect("disjoint names")
}

/// Resolves a preset name: `S3`, `S4`, `D<n>`, `Q8`, `V4` / `Z2xZ2`, `A5`,
/// `C<k>`, `F<d>`, `F<d>ab`, `Z^<n>` (or `Z` for `Z^1`), `BS(n,m)`.
pub fn by_name(name: &str) -> Result<Group> {
    let name = name.trim();
    let unknown = || Error::GroupDefinition(format!("unknown preset `{name}`"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    match name {
        "S3" => return Ok(s3()),
        "S4" => return Ok(s4()),
        "Q8" => return Ok(q8()),
        "V4" | "Z2xZ2" => return Ok(klein_four()),
        "A5" => return Ok(a5()),
        "Z" => return Ok(free_abelian(1)),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("BS(").and_then(|r| r.strip_suffix(')')) {
        let (n, m) = rest.split_once(',').ok_or_else(unknown)?;
        let n: i64 = n.trim().parse().map_err(|_| unknown())?;
        let m: i64 = m.trim().parse().map_err(|_| unknown())?;
        return Group::baumslag_solitar(n, m);
    }
    if let Some(rest) = name.strip_prefix("Z^") {
        return Ok(free_abelian(num(rest)?));
    }
    if let Some(rest) = name.strip_prefix('F') {
        if let Some(d) = rest.strip_suffix("ab") {
            return Ok(abelianized_free(num(d)?));
        }
        return Ok(free(num(rest)?));
    }
    if let Some(rest) = name.strip_prefix('D') {
        return dihedral(num(rest)?);
    }
    if let Some(rest) = name.strip_prefix('C') {
        let k = num(rest)?;
        if k == 0 {
            return Err(unknown());
        }
        return Ok(cyclic(k));
    }
    Err(unknown())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(s3().order(), Some(6));
        assert_eq!(s4().order(), Some(24));
        assert_eq!(d4().order(), Some(8));
        assert_eq!(q8().order(), Some(8));
        assert_eq!(klein_four().order(), Some(4));
        assert_eq!(cyclic(5).order(), Some(5));
        assert_eq!(a5().order(), Some(60));
        assert_eq!(dihedral(5).unwrap().order(), Some(10));
    }

    #[test]
    fn q8_is_quaternion() {
        let q = q8();
        assert!(!q.is_abelian());
        let w = |s: &str| q.evaluate(&crate::word::Word::parse(q.alphabet(), s).unwrap()).unwrap();
        // i^2 = j^2 = (ij)^2, of order 2.
        assert_eq!(w("i^2"), w("j^2"));
        assert_eq!(w("i^2"), w("i j i j"));
        assert!(!q.is_identity(&w("i^2")));
        assert!(q.is_identity(&w("i^4")));
    }

    #[test]
    fn names_resolve() {
        for n in ["S3", "S4", "D4", "D6", "Q8", "V4", "Z2xZ2", "A5", "C7", "F2", "F3ab", "Z^2", "Z", "BS(1,2)"] {
            assert!(by_name(n).is_ok(), "{n}");
        }
        let l = lamplighter(3);
        let w = crate::word::Word::parse(l.alphabet(), "y1 c y1 c y1 c").unwrap();
        assert_eq!(l.evaluate(&w).unwrap().support().count(), 3);
        for n in ["S9", "C0", "Fx", "BS(1)", "nope"] {
            assert!(by_name(n).is_err(), "{n}");
        }
    }
}
