//! Wreath products with a free abelian top group `Z^n`.

use super::{certify, Bound, PalindromeFactorization};
use crate::commutators::{commutator_word, derived_subgroup};
use crate::error::{Error, Result};
use crate::groups::{Element, Group, GroupKind};
use crate::oracle::PalindromeOracle;
use crate::word::Word;
use crate::wreath::{WreathElement, WreathGroup};

fn require_free_abelian(top: &Group) -> Result<()> {
    match top.kind() {
        GroupKind::FreeAbelian | GroupKind::AbelianizedFree => Ok(()),
        k => Err(Error::WrongGroupKind { expected: "a free abelian group", found: k.to_string() }),
    }
}

/// Power words `t_i^{v_i}`, one per nonzero coordinate.
pub(crate) fn power_words(group: &Group, v: &[i64]) -> Result<Vec<Word>> {
    v.iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| Word::power(group.alphabet(), i, e))
        .collect()
}

/// `t_1^{v_1} ... t_n^{v_n}` as at most `n` power words.
pub fn decompose_abelian_element(top: &Group, v: &[i64]) -> Result<PalindromeFactorization<Element>> {
    require_free_abelian(top)?;
    let target = Element::Vector(v.to_vec());
    top.check(&target)?;
    let factors = power_words(top, v)?;
    certify(top, target, factors, Some(Bound::new(top.rank(), "rank")))
}

/// The palindromes for the commutator `[a, t]` with
/// `t = t_1^{i_1} ... t_n^{i_n}`, not yet certified.
fn commutator_factors(wreath: &WreathGroup, a: &Word, exps: &[i64]) -> Result<Vec<Word>> {
    let top = wreath.top();
    require_free_abelian(top)?;
    let n = exps.len();
    if n == 0 {
        return Err(Error::NoTopGenerators);
    }
    if n != top.rank() {
        return Err(Error::GroupDefinition(format!("{n} exponents for a top group of rank {}", top.rank())));
    }
    crate::word::check_alphabet(wreath.alphabet(), a.alphabet())?;
    let alphabet = wreath.alphabet();
    let a_inv = a.invert();
    let a_rev = a.reverse();
    let mut factors = Vec::with_capacity(2 * n + 1);
    for k in (0..n).rev() {
        let power = Word::power(alphabet, k, -exps[k])?;
        let outer = if (n - 1 - k).is_multiple_of(2) { &a_inv } else { &a_rev };
        factors.push(Word::sandwich(outer, &power)?);
    }
    if n % 2 == 1 {
        factors.push(a_rev.concat(a)?);
    }
    for (k, &e) in exps.iter().enumerate() {
        factors.push(Word::power(alphabet, k, e)?);
    }
    Ok(factors)
}

fn t_word(wreath: &WreathGroup, exps: &[i64]) -> Result<Word> {
    let blocks: Vec<(usize, i64)> = exps.iter().copied().enumerate().collect();
    Word::from_blocks(wreath.alphabet(), &blocks)
}

fn commutator_bound(n: usize) -> Bound {
    if n.is_multiple_of(2) {
        Bound::new(2 * n, "2n")
    } else {
        Bound::new(2 * n + 1, "2n+1")
    }
}

/// `[a, t]` for `t = t_1^{i_1} ... t_n^{i_n}` as `2n` palindromes (`n`
/// even) or `2n + 1` palindromes (`n` odd). Power words of exponent zero
/// are kept as empty factors so the count is exact.
pub fn decompose_commutator_abelian_top(
    wreath: &WreathGroup,
    a: &Word,
    exps: &[i64],
) -> Result<PalindromeFactorization<WreathElement>> {
    let factors = commutator_factors(wreath, a, exps)?;
    let target = wreath.evaluate(&commutator_word(a, &t_word(wreath, exps)?)?)?;
    certify(wreath, target, factors, Some(commutator_bound(exps.len())))
}

/// `[a, t][b, t^2]`, the shape every element of the derived subgroup takes;
/// at most `4n` palindromes (`n` even) or `4n + 2` (`n` odd).
pub fn decompose_commutator_pair(
    wreath: &WreathGroup,
    a: &Word,
    b: &Word,
    exps: &[i64],
) -> Result<PalindromeFactorization<WreathElement>> {
    let doubled: Vec<i64> = exps.iter().map(|e| 2 * e).collect();
    let mut factors = commutator_factors(wreath, a, exps)?;
    factors.extend(commutator_factors(wreath, b, &doubled)?);
    let first = commutator_word(a, &t_word(wreath, exps)?)?;
    let second = commutator_word(b, &t_word(wreath, &doubled)?)?;
    let target = wreath.evaluate(&first.concat(&second)?)?;
    let n = exps.len();
    let bound = if n.is_multiple_of(2) { Bound::new(4 * n, "4n") } else { Bound::new(4 * n + 2, "4n+2") };
    certify(wreath, target, factors, Some(bound))
}

/// Palindrome factorizations of a metabelian group, supplied from outside
/// the constructions in this crate.
pub trait MetabelianDecomposer {
    fn name(&self) -> &'static str;

    /// Palindromic words over `group`'s alphabet multiplying to `element`.
    fn decompose(&self, group: &Group, element: &Element) -> Result<Vec<Word>>;
}

/// Refuses: the metabelian width bound is an external result with no
/// construction here.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExternalMetabelian;

impl MetabelianDecomposer for ExternalMetabelian {
    fn name(&self) -> &'static str {
        "external"
    }

    fn decompose(&self, _: &Group, _: &Element) -> Result<Vec<Word>> {
        Err(Error::ExternalConstruction("a palindrome factorization of a free metabelian group"))
    }
}

/// Exact factorizations for finite metabelian groups, via the oracle.
#[derive(Debug, Clone, Copy, Default)]
pub struct FiniteMetabelian;

impl MetabelianDecomposer for FiniteMetabelian {
    fn name(&self) -> &'static str {
        "finite"
    }

    fn decompose(&self, group: &Group, element: &Element) -> Result<Vec<Word>> {
        let f = group.as_finite().ok_or(Error::WrongGroupKind {
            expected: "a finite group",
            found: group.kind().to_string(),
        })?;
        let derived = derived_subgroup(group)?;
        let abelian = derived
            .iter()
            .all(|&x| derived.iter().all(|&y| f.mul(x, y) == f.mul(y, x)));
        if !abelian {
            return Err(Error::Unsupported("group is not metabelian".into()));
        }
        PalindromeOracle::new(group)?.decompose_top_element(element)
    }
}

/// Runs `decomposer` and certifies its output.
pub fn decompose_metabelian(
    decomposer: &dyn MetabelianDecomposer,
    group: &Group,
    element: &Element,
) -> Result<PalindromeFactorization<Element>> {
    let factors = decomposer.decompose(group, element)?;
    certify(group, element.clone(), factors, None)
}
