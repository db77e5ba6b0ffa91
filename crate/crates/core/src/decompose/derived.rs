//! Derived-base elements of `G ≀ H` as one palindrome `h·reverse(h)`.
//!
//! With a relation `r` of `H` whose reverse `r̄` is not a relation, each
//! commutator `[f, g]` at a position is spelled `f^-1 r^-1 g^-1 r f r^-1 g r`.
//! Since `r = 1` this evaluates to `[f, g]`, while in its reverse the `f`
//! parts and the `g` parts land on positions differing by `r̄ != 1`, where
//! they cancel separately. So `reverse(h) = 1` and the palindrome
//! `h·reverse(h)` evaluates to `h`.

use super::abelian_top::power_words;
use super::{certify, Bound, PalindromeFactorization, RelationWitness};
use crate::commutators::CommutatorData;
use crate::error::{Error, Result};
use crate::groups::{Element, Group, GroupKind};
use crate::oracle::PalindromeOracle;
use crate::word::Word;
use crate::wreath::{WreathElement, WreathGroup};

/// Palindromic top words for `a` and the most that could be needed, if the
/// top group admits such a decomposition.
pub(crate) fn top_factors(top: &Group, a: &Element) -> Result<(Vec<Word>, Bound)> {
    match top.kind() {
        GroupKind::Finite => {
            let oracle = PalindromeOracle::new(top)?;
            Ok((oracle.decompose_top_element(a)?, Bound::new(oracle.width(), "pw(H)")))
        }
        GroupKind::FreeAbelian | GroupKind::AbelianizedFree => match a {
            Element::Vector(v) => Ok((power_words(top, v)?, Bound::new(top.rank(), "rank(H)"))),
            _ => Err(top.check(a).unwrap_err()),
        },
        _ if top.is_identity(a) => Ok((Vec::new(), Bound::new(0, "0"))),
        k => Err(Error::Unsupported(format!("palindrome factorizations of top elements in a {k}"))),
    }
}

/// A word for a top position; the identity needs none even in groups
/// without normal forms.
fn position_word(top: &Group, a: &Element) -> Result<Word> {
    if top.is_identity(a) {
        Ok(Word::empty(top.alphabet()))
    } else {
        top.represent(a)
    }
}

/// Factors `a_top · ∏_i a_i^-1 (∏_j [f_ij, g_ij]) a_i` as palindromes for
/// `a_top` followed by the single palindrome `h·reverse(h)`.
///
/// When the witness adds a generator to the top group, the factors and the
/// target live in the wreath product over the extended top.
pub fn decompose_derived_wreath(
    wreath: &WreathGroup,
    cd: &CommutatorData,
    a_top: &Element,
    witness: &RelationWitness,
) -> Result<PalindromeFactorization<WreathElement>> {
    witness.validate()?;
    let top = witness.working_top(wreath.top())?;
    let work = wreath.with_top(&top)?;
    let alphabet = work.alphabet().clone();

    let r = work.embed_top(&witness.relation)?;
    let r_inv = r.invert();
    let mut parts: Vec<Word> = Vec::new();
    for entry in cd.entries() {
        let a = work.embed_top(&position_word(&top, &entry.position)?)?;
        parts.push(a.invert());
        for (f, g) in &entry.pairs {
            let f = work.embed_base(f)?;
            let g = work.embed_base(g)?;
            parts.extend([f.invert(), r_inv.clone(), g.invert(), r.clone(), f, r_inv.clone(), g, r.clone()]);
        }
        parts.push(a);
    }
    let h = Word::product(&alphabet, &parts)?;
    if !work.is_identity(&work.evaluate(&h.reverse())?) {
        return Err(Error::ReverseNotTrivial);
    }

    let (top_words, top_bound) = top_factors(&top, a_top)?;
    let mut factors = top_words.iter().map(|w| work.embed_top(w)).collect::<Result<Vec<_>>>()?;
    if !h.is_empty() {
        factors.push(h.concat(&h.reverse())?);
    }
    let target = work.multiply(&work.from_top(a_top)?, &cd.target(&work)?)?;
    let bound = Bound::new(top_bound.value + 1, format!("{}+1", top_bound.rule));
    let mut out = certify(&work, target, factors, Some(bound))?;
    out.extra_generator = witness.extra_generator.clone();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{baumslag_solitar_witness, find_reversal_asymmetric_relation};
    use crate::presets;

    fn setup() -> (WreathGroup, RelationWitness) {
        let w = WreathGroup::new(&presets::free(2), &presets::s3()).unwrap();
        let rw = find_reversal_asymmetric_relation(w.top(), 32).unwrap();
        (w, rw)
    }

    fn y(w: &WreathGroup, s: &str) -> Word {
        Word::parse(w.base().alphabet(), s).unwrap()
    }

    #[test]
    fn empty_data_gives_empty_factorization() {
        let (w, rw) = setup();
        let f = decompose_derived_wreath(&w, &CommutatorData::new(), &w.top().identity(), &rw).unwrap();
        assert!(f.is_empty());
    }

    #[test]
    fn one_commutator_is_one_palindrome() {
        let (w, rw) = setup();
        let mut cd = CommutatorData::new();
        cd.push(w.top().identity(), vec![(y(&w, "y1"), y(&w, "y2"))]);
        let f = decompose_derived_wreath(&w, &cd, &w.top().identity(), &rw).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.extra_generator.as_ref().unwrap().name, "c");
        let lamp = f.target.base.get(&Element::Finite(0)).unwrap();
        assert_eq!(w.base().format_element(lamp), "y1^-1 y2^-1 y1 y2");
    }

    #[test]
    fn top_component_uses_at_most_width_more() {
        let (w, rw) = setup();
        let pw = PalindromeOracle::new(&rw.group).unwrap().width();
        let mut cd = CommutatorData::new();
        cd.push(Element::Finite(3), vec![(y(&w, "y1 y2"), y(&w, "y2")), (y(&w, "y2"), y(&w, "y1^2"))]);
        cd.push(Element::Finite(5), vec![(y(&w, "y1"), y(&w, "y1 y2^-1"))]);
        for a in w.top().elements().unwrap() {
            let f = decompose_derived_wreath(&w, &cd, &a, &rw).unwrap();
            assert!(f.len() <= pw + 1);
        }
    }

    #[test]
    fn bs_top_at_identity() {
        let top = Group::baumslag_solitar(1, 2).unwrap();
        let w = WreathGroup::new(&presets::free(2), &top).unwrap();
        let rw = baumslag_solitar_witness(&top).unwrap();
        let mut cd = CommutatorData::new();
        cd.push(top.identity(), vec![(y(&w, "y1"), y(&w, "y2^2"))]);
        let f = decompose_derived_wreath(&w, &cd, &top.identity(), &rw).unwrap();
        assert_eq!(f.len(), 1);
        assert!(f.extra_generator.is_none());
    }

    #[test]
    fn foreign_witness_is_rejected() {
        let (w, _) = setup();
        let other = find_reversal_asymmetric_relation(&presets::d4(), 32).unwrap();
        let e = decompose_derived_wreath(&w, &CommutatorData::new(), &w.top().identity(), &other);
        assert!(matches!(e, Err(Error::InvalidWitness(_))));
    }
}
