//! Affine image of the Baumslag–Solitar groups.
//!
//! `(scale, shift)` stands for `x -> scale * x + shift`; words act left to
//! right, so `(s1, t1)·(s2, t2) = (s1 s2, s2 t1 + t2)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Element;
use crate::word::Letter;

pub(super) fn identity() -> Element {
    Element::Affine(BigRational::one(), BigRational::zero())
}

pub(super) fn letter(n: i64, m: i64, l: Letter) -> Element {
    let g = if l.generator == 0 {
        Element::Affine(BigRational::new(BigInt::from(m), BigInt::from(n)), BigRational::zero())
    } else {
        Element::Affine(BigRational::one(), BigRational::one())
    };
    if l.inverse { inverse(&g) } else { g }
}

pub(super) fn multiply(a: &Element, b: &Element) -> Element {
    match (a, b) {
        (Element::Affine(s1, t1), Element::Affine(s2, t2)) => {
            Element::Affine(s1 * s2, s2 * t1 + t2)
        }
        _ => unreachable!("affine payloads"),
    }
}

pub(super) fn inverse(a: &Element) -> Element {
    match a {
        Element::Affine(s, t) => {
            let inv = s.recip();
            let shift = -(t * &inv);
            Element::Affine(inv, shift)
        }
        _ => unreachable!("affine payloads"),
    }
}

#[cfg(test)]
mod tests {
    use crate::groups::Group;
    use crate::word::Word;

    #[test]
    fn defining_relation_holds() {
        for (n, m) in [(1, 2), (2, 3), (3, 1), (2, -2)] {
            let g = Group::baumslag_solitar(n, m).unwrap();
            let r = Word::parse(g.alphabet(), &format!("a^-1 b^{n} a b^{}", -m)).unwrap();
            assert!(g.is_identity(&g.evaluate(&r).unwrap()), "BS({n},{m})");
        }
    }

    #[test]
    fn reverse_of_relation_in_bs12() {
        let g = Group::baumslag_solitar(1, 2).unwrap();
        let r = Word::parse(g.alphabet(), "a^-1 b a b^-2").unwrap();
        let rev = g.evaluate(&r.reverse()).unwrap();
        assert!(!g.is_identity(&rev));
        assert_eq!(g.format_element(&rev), "x -> 1*x + -3/2");
    }
}
