//! Products of commutators over a top group with an element of infinite
//! order, seven palindromes per commutator index.
//!
//! With `κ_j = ∏_i a_i^-1 f_ij a_i`, `τ_j = ∏_i a_i^-1 g_ij a_i`, `s = x^q`
//! and `t = x^y`, the seven palindromes
//!
//! ```text
//! κ^-1 s^-1 rev(κ^-1) · s · τ^-1 t^-1 rev(τ^-1) · x^(y-q) · rev(κ) s κ · t^-1 · rev(τ) t τ
//! ```
//!
//! multiply to `[κ, τ]` as soon as the reversed parts, shifted by `s` and
//! `t`, have supports disjoint from each other and from the `a_i`.

use super::derived::top_factors;
use super::{certify, Bound, PalindromeFactorization};
use crate::commutators::CommutatorData;
use crate::error::{Error, Result};
use crate::groups::{Element, Group};
use crate::word::Word;
use crate::wreath::{WreathElement, WreathGroup};

pub const MAX_SHIFT_RETRIES: usize = 16;

/// `s = x^q` and `t = x^y` for the top generator `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftParams {
    pub generator: usize,
    pub q: i64,
    pub y: i64,
}

impl ShiftParams {
    /// `q = 1`, `y = 2` on the first top generator of infinite order.
    pub fn initial(top: &Group) -> Result<Self> {
        let generator = top.infinite_order_generator().ok_or(Error::NoInfiniteOrderGenerator)?;
        Ok(Self { generator, q: 1, y: 2 })
    }

    pub fn doubled(self) -> Self {
        Self { q: 2 * self.q, y: 2 * self.y, ..self }
    }
}

fn conjugate_product(wreath: &WreathGroup, cd: &CommutatorData, j: usize, second: bool) -> Result<Word> {
    let top = wreath.top();
    let mut parts = Vec::new();
    for entry in cd.entries() {
        let Some((f, g)) = entry.pairs.get(j) else { continue };
        let a = wreath.embed_top(&top.represent(&entry.position)?)?;
        parts.push(a.invert());
        parts.push(wreath.embed_base(if second { g } else { f })?);
        parts.push(a);
    }
    Word::product(wreath.alphabet(), &parts)
}

fn seven_factors(wreath: &WreathGroup, cd: &CommutatorData, sp: ShiftParams) -> Result<Vec<Word>> {
    let alphabet = wreath.alphabet();
    let x = sp.generator;
    let s = Word::power(alphabet, x, sp.q)?;
    let t = Word::power(alphabet, x, sp.y)?;
    let mut out = Vec::with_capacity(7 * cd.max_commutators());
    for j in 0..cd.max_commutators() {
        let kappa = conjugate_product(wreath, cd, j, false)?;
        let tau = conjugate_product(wreath, cd, j, true)?;
        out.push(Word::sandwich(&kappa.invert(), &s.invert())?);
        out.push(s.clone());
        out.push(Word::sandwich(&tau.invert(), &t.invert())?);
        out.push(Word::power(alphabet, x, sp.y - sp.q)?);
        out.push(Word::sandwich(&kappa.reverse(), &s)?);
        out.push(t.invert());
        out.push(Word::sandwich(&tau.reverse(), &t)?);
    }
    Ok(out)
}

/// Factors `a_top · ∏_i a_i^-1 (∏_j [f_ij, g_ij]) a_i` as at most `r`
/// power words for `a_top` and seven palindromes per commutator index.
/// Starts from `start` (or [`ShiftParams::initial`]) and doubles both
/// exponents after each failed verification.
pub fn decompose_shifted_commutators(
    wreath: &WreathGroup,
    cd: &CommutatorData,
    a_top: &Element,
    start: Option<ShiftParams>,
) -> Result<PalindromeFactorization<WreathElement>> {
    let top = wreath.top();
    let mut sp = match start {
        Some(sp) => sp,
        None => ShiftParams::initial(top)?,
    };
    if sp.generator >= top.rank() {
        return Err(Error::GeneratorOutOfRange { index: sp.generator, len: top.rank() });
    }
    if sp.q == sp.y {
        return Err(Error::GroupDefinition("shift exponents must differ".into()));
    }
    let (top_words, top_bound) = top_factors(top, a_top)?;
    let head = top_words.iter().map(|w| wreath.embed_top(w)).collect::<Result<Vec<_>>>()?;
    let target = wreath.multiply(&wreath.from_top(a_top)?, &cd.target(wreath)?)?;
    let n = cd.max_commutators();
    let bound = Bound::new(top_bound.value + 7 * n, format!("{}+7n", top_bound.rule));
    for _ in 0..=MAX_SHIFT_RETRIES {
        let mut factors = head.clone();
        factors.extend(seven_factors(wreath, cd, sp)?);
        match certify(wreath, target.clone(), factors, Some(bound.clone())) {
            Ok(f) => return Ok(f),
            Err(Error::Verification(_)) => sp = sp.doubled(),
            Err(e) => return Err(e),
        }
    }
    Err(Error::NoValidShift { retries: MAX_SHIFT_RETRIES })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn s3_z() -> WreathGroup {
        WreathGroup::new(&presets::s3(), &presets::free_abelian(1)).unwrap()
    }

    fn w(g: &Group, s: &str) -> Word {
        Word::parse(g.alphabet(), s).unwrap()
    }

    #[test]
    fn one_commutator_gives_seven() {
        let wr = s3_z();
        let b = wr.base().clone();
        let mut cd = CommutatorData::new();
        cd.push(Element::Vector(vec![0]), vec![(w(&b, "s"), w(&b, "t"))]);
        let f = decompose_shifted_commutators(&wr, &cd, &Element::Vector(vec![0]), None).unwrap();
        assert_eq!(f.len(), 7);
        let f = decompose_shifted_commutators(&wr, &cd, &Element::Vector(vec![-3]), None).unwrap();
        assert_eq!(f.len(), 8);
    }

    #[test]
    fn empty_data_gives_only_top() {
        let wr = s3_z();
        let cd = CommutatorData::new();
        let f = decompose_shifted_commutators(&wr, &cd, &Element::Vector(vec![2]), None).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0].to_string(), "t1^2");
    }

    #[test]
    fn overlapping_supports_force_retries() {
        // Positions 0 and 1 collide with the shift q = 1.
        let wr = s3_z();
        let b = wr.base().clone();
        let mut cd = CommutatorData::new();
        cd.push(Element::Vector(vec![0]), vec![(w(&b, "s"), w(&b, "t")), (w(&b, "t"), w(&b, "s t"))]);
        cd.push(Element::Vector(vec![1]), vec![(w(&b, "t"), w(&b, "s"))]);
        cd.push(Element::Vector(vec![-2]), vec![(w(&b, "s t"), w(&b, "t s"))]);
        let f = decompose_shifted_commutators(&wr, &cd, &Element::Vector(vec![0]), None).unwrap();
        assert_eq!(f.len(), 14);
    }

    #[test]
    fn finite_top_has_no_shift() {
        let wr = WreathGroup::new(&presets::s3(), &presets::cyclic(3)).unwrap();
        let e = decompose_shifted_commutators(&wr, &CommutatorData::new(), &Element::Finite(0), None);
        assert_eq!(e.unwrap_err(), Error::NoInfiniteOrderGenerator);
    }
}
