//! `F_d ≀ H` for finite `H`: an abelianized stage that moves a cursor over
//! the support, then one palindrome for the remaining derived part.

use super::{certify, decompose_derived_wreath, find_relation_avoiding, Bound, PalindromeFactorization};
use super::{RelationWitness, DEFAULT_RELATION_BUDGET};
use crate::commutators::CommutatorData;
use crate::error::{Error, Result};
use crate::groups::{Element, Group, GroupKind};
use crate::word::Word;
use crate::wreath::{WreathElement, WreathGroup};

/// Bounds for `F_d ≀ H` in terms of `|H|`, `d` and the longest geodesic
/// `max l_X(h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTopBounds {
    pub order: usize,
    pub rank: usize,
    pub max_length: usize,
    /// What the cursor construction guarantees: `|H|·(max + d) + 1`.
    pub guaranteed: Bound,
    /// The published bound `max·(d·|H| + 1) + 1`. It agrees with the
    /// guarantee when `(max - 1)(d - 1) >= 1` but can be smaller when
    /// `d = 1` or `max = 1`.
    pub theorem: Bound,
}

impl FiniteTopBounds {
    pub fn new(top: &Group, d: usize) -> Result<Self> {
        let order = top.order().ok_or(Error::WrongGroupKind {
            expected: "a finite group",
            found: top.kind().to_string(),
        })?;
        let max_length = top.geodesics()?.diameter();
        Ok(Self {
            order,
            rank: d,
            max_length,
            guaranteed: Bound::new(order * (max_length + d) + 1, "|H|(max+d)+1"),
            theorem: Bound::new(max_length * (d * order + 1) + 1, "max(d|H|+1)+1"),
        })
    }
}

fn require_finite_top(wreath: &WreathGroup) -> Result<()> {
    if wreath.top().kind() != GroupKind::Finite {
        return Err(Error::WrongGroupKind {
            expected: "a finite top group",
            found: wreath.top().kind().to_string(),
        });
    }
    Ok(())
}

/// Factors an element of `Z^d ≀ H` (base abelianized free or free abelian,
/// `H` finite). The cursor visits the support greedily, nearest first, each
/// move spelled as a geodesic whose letters are single-letter palindromes;
/// at each stop the lamp is written with at most `d` power words. The last
/// move goes to the top component.
pub fn decompose_finite_top_abelianized(
    wreath: &WreathGroup,
    g: &WreathElement,
) -> Result<PalindromeFactorization<WreathElement>> {
    require_finite_top(wreath)?;
    let base = wreath.base();
    if !matches!(base.kind(), GroupKind::AbelianizedFree | GroupKind::FreeAbelian) {
        return Err(Error::WrongGroupKind { expected: "a free abelian base", found: base.kind().to_string() });
    }
    let top = wreath.top();
    let geo = top.geodesics()?;
    let bounds = FiniteTopBounds::new(top, base.rank())?;

    // A lamp at position p is written while the running prefix is p^-1.
    let mut stops: Vec<(Element, &Element)> = g
        .base
        .iter()
        .map(|(p, v)| Ok((top.inverse(p)?, v)))
        .collect::<Result<_>>()?;
    let mut cursor = top.identity();
    let mut factors = Vec::new();
    let move_to = |from: &Element, to: &Element, factors: &mut Vec<Word>| -> Result<()> {
        let step = top.multiply(&top.inverse(from)?, to)?;
        let word = wreath.embed_top(geo.word(top.finite_index(&step)?))?;
        for &l in word.letters() {
            factors.push(Word::letter(wreath.alphabet(), l)?);
        }
        Ok(())
    };
    while !stops.is_empty() {
        let cost = |c: &Element| -> Result<usize> {
            let step = top.multiply(&top.inverse(&cursor)?, c)?;
            Ok(geo.length(top.finite_index(&step)?))
        };
        let mut best = 0;
        let mut best_cost = cost(&stops[0].0)?;
        for (i, (c, _)) in stops.iter().enumerate().skip(1) {
            let k = cost(c)?;
            if k < best_cost || (k == best_cost && c < &stops[best].0) {
                best = i;
                best_cost = k;
            }
        }
        let (c, value) = stops.remove(best);
        move_to(&cursor, &c, &mut factors)?;
        let Element::Vector(v) = value else { return Err(base.check(value).unwrap_err()) };
        for (i, &e) in v.iter().enumerate().filter(|(_, &e)| e != 0) {
            let inner = Word::power(base.alphabet(), i, e)?;
            factors.push(wreath.embed_base(&inner)?);
        }
        cursor = c;
    }
    move_to(&cursor, &g.top, &mut factors)?;

    let guaranteed = Bound::new(bounds.guaranteed.value - 1, "|H|(max+d)");
    let mut out = certify(wreath, g.clone(), factors, Some(guaranteed))?;
    out.theorem_bound = Some(bounds.theorem);
    Ok(out)
}

/// Factors the element of `F_d ≀ H` given by `word` (`H` finite and
/// non-abelian): the abelianized stage, lifted letter for letter, followed
/// by one palindrome for the residual, which has trivial top and base
/// values in the derived subgroup.
///
/// Without a `witness`, one is searched for; if it needs an extra top
/// generator the factors live in the wreath product over the extended top.
pub fn decompose_full_finite_top(
    wreath: &WreathGroup,
    word: &Word,
    witness: Option<&RelationWitness>,
) -> Result<PalindromeFactorization<WreathElement>> {
    require_finite_top(wreath)?;
    let base = wreath.base();
    if base.kind() != GroupKind::Free {
        return Err(Error::WrongGroupKind { expected: "a free base", found: base.kind().to_string() });
    }
    let top = wreath.top();
    let found;
    let witness = match witness {
        Some(w) => w,
        None => {
            found = find_relation_avoiding(top, DEFAULT_RELATION_BUDGET, &[base.alphabet()])?;
            &found
        }
    };
    let bounds = FiniteTopBounds::new(top, base.rank())?;
    let work = wreath.with_top(&witness.working_top(top)?)?;

    let ab = WreathGroup::new(&Group::abelianized_free(base.alphabet().names())?, top)?;
    let g_ab = ab.evaluate(&word.translate(ab.alphabet())?)?;
    let stage = decompose_finite_top_abelianized(&ab, &g_ab)?;
    let lifted = stage.factors.iter().map(|f| f.translate(wreath.alphabet())).collect::<Result<Vec<_>>>()?;

    let lift = wreath.evaluate(&Word::product(wreath.alphabet(), &lifted)?)?;
    let g = wreath.evaluate(word)?;
    let residual = wreath.multiply(&wreath.inverse(&lift)?, &g)?;
    let (cd, rest) = CommutatorData::from_element(wreath, &residual)?;
    debug_assert!(top.is_identity(&rest));
    let derived = decompose_derived_wreath(wreath, &cd, &top.identity(), witness)?;

    let mut factors = lifted.iter().map(|f| f.translate(work.alphabet())).collect::<Result<Vec<_>>>()?;
    factors.extend(derived.factors);
    let target = work.evaluate(&word.translate(work.alphabet())?)?;
    let mut out = certify(&work, target, factors, Some(bounds.guaranteed))?;
    out.theorem_bound = Some(bounds.theorem);
    out.extra_generator = witness.extra_generator.clone();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn z2_s3() -> WreathGroup {
        WreathGroup::new(&presets::abelianized_free(2), &presets::s3()).unwrap()
    }

    #[test]
    fn identity_and_single_lamp() {
        let w = z2_s3();
        assert!(decompose_finite_top_abelianized(&w, &w.identity()).unwrap().is_empty());
        let g = w.lamp(&w.top().identity(), &Element::Vector(vec![1, 0])).unwrap();
        let f = decompose_finite_top_abelianized(&w, &g).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.factors[0].to_string(), "y1");
    }

    #[test]
    fn full_support_within_bounds() {
        let w = z2_s3();
        let mut g = w.from_top(&Element::Finite(4)).unwrap();
        for (i, p) in w.top().elements().unwrap().iter().enumerate() {
            let lamp = w.lamp(p, &Element::Vector(vec![i as i64 + 1, -2])).unwrap();
            g = w.multiply(&g, &lamp).unwrap();
        }
        let f = decompose_finite_top_abelianized(&w, &g).unwrap();
        let b = FiniteTopBounds::new(w.top(), 2).unwrap();
        assert_eq!((b.max_length, b.guaranteed.value, b.theorem.value), (2, 25, 27));
        assert!(f.len() < b.guaranteed.value);
    }

    #[test]
    fn full_pipeline() {
        let w = WreathGroup::new(&presets::free(2), &presets::s3()).unwrap();
        let a = w.alphabet().clone();
        assert!(decompose_full_finite_top(&w, &Word::empty(&a), None).unwrap().is_empty());
        let one = decompose_full_finite_top(&w, &Word::parse(&a, "y1").unwrap(), None).unwrap();
        assert_eq!(one.len(), 1);
        let word = Word::parse(&a, "s y1 t y2^-1 [y1, y2] t^-1 y1 s t [y2, s y1]").unwrap();
        let f = decompose_full_finite_top(&w, &word, None).unwrap();
        assert!(f.len() <= 27);
        assert_eq!(f.extra_generator.as_ref().unwrap().name, "c");
    }

    #[test]
    fn abelian_top_is_refused() {
        let w = WreathGroup::new(&presets::free(2), &presets::klein_four()).unwrap();
        let word = Word::parse(w.alphabet(), "a y1").unwrap();
        assert_eq!(decompose_full_finite_top(&w, &word, None).unwrap_err(), Error::AbelianGroup);
    }
}
