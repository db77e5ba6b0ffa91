//! Products of commutators.
//!
//! The convention throughout is `[u, v] = u^-1 v^-1 u v`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::groups::{Element, Group, GroupKind};
use crate::word::Word;
use crate::wreath::{WreathElement, WreathGroup};

/// `u^-1 v^-1 u v`, unreduced.
pub fn commutator_word(u: &Word, v: &Word) -> Result<Word> {
    Word::product(u.alphabet(), [&u.invert(), &v.invert(), u, v])
}

/// Writes a word with zero exponent sums as `∏_k [u_k, v_k]`.
///
/// Peels one commutator per step: with `w = a·u·a^-1·v` (first letter `a`,
/// first later occurrence of `a^-1`), `w = [a^-1, u^-1] · (u v)`, and the
/// recursion continues on the reduced `u v`. Each step removes at least two
/// letters, so at most `⌈|w|/2⌉` commutators are produced. No attempt is
/// made to minimise their number.
pub fn express_in_derived(w: &Word) -> Result<Vec<(Word, Word)>> {
    let sums = w.exponent_sums();
    if sums.iter().any(|&s| s != 0) {
        return Err(Error::NotInDerivedSubgroup(sums));
    }
    let alphabet = w.alphabet();
    let mut rest = w.reduce_free().letters().to_vec();
    let mut out = Vec::new();
    while let Some(&a) = rest.first() {
        let j = rest[1..]
            .iter()
            .position(|&l| l == a.inv())
            .map(|p| p + 1)
            .expect("zero exponent sum forces a later inverse");
        let u = rest[1..j].to_vec();
        let v = rest[j + 1..].to_vec();
        let u_word = Word::from_letters(alphabet, u.clone())?;
        out.push((Word::letter(alphabet, a.inv())?, u_word.invert()));
        let mut next = u;
        next.extend(v);
        rest = Word::from_letters(alphabet, next)?.reduce_free().letters().to_vec();
    }
    Ok(out)
}

/// Concatenation of `[u_k, v_k]` over all pairs.
pub fn product_of_commutators(alphabet: &std::sync::Arc<crate::word::Alphabet>, pairs: &[(Word, Word)]) -> Result<Word> {
    let words = pairs.iter().map(|(u, v)| commutator_word(u, v)).collect::<Result<Vec<_>>>()?;
    Word::product(alphabet, &words)
}

fn finite_of(group: &Group) -> Result<&crate::groups::FiniteGroup> {
    group.as_finite().ok_or(Error::WrongGroupKind {
        expected: "a finite group",
        found: group.kind().to_string(),
    })
}

/// Distinct commutator values of a finite group, each with the first pair
/// `(x, y)` in canonical order producing it.
fn commutator_values(group: &Group) -> Result<Vec<(usize, usize, usize)>> {
    let f = finite_of(group)?;
    let n = f.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let c = f.mul(f.mul(f.inv(x), f.inv(y)), f.mul(x, y));
            if !seen[c] && c != 0 {
                seen[c] = true;
                out.push((c, x, y));
            }
        }
    }
    Ok(out)
}

/// The derived subgroup `[G, G]` of a finite group, in discovery order.
pub fn derived_subgroup(group: &Group) -> Result<Vec<usize>> {
    let f = finite_of(group)?;
    let steps = commutator_values(group)?;
    let mut seen = vec![false; f.order()];
    seen[0] = true;
    let mut order = vec![0];
    let mut head = 0;
    while head < order.len() {
        let cur = order[head];
        head += 1;
        for &(c, _, _) in &steps {
            let next = f.mul(cur, c);
            if !seen[next] {
                seen[next] = true;
                order.push(next);
            }
        }
    }
    Ok(order)
}

/// `G = [G, G]`.
pub fn is_perfect(group: &Group) -> Result<bool> {
    Ok(derived_subgroup(group)?.len() == finite_of(group)?.order())
}

/// Shortest expression of an element of a finite group as a product of
/// commutators of geodesic words, by breadth-first search over commutator
/// values.
pub fn express_in_derived_finite(group: &Group, element: &Element) -> Result<Vec<(Word, Word)>> {
    let f = finite_of(group)?;
    let target = group.finite_index(element)?;
    let steps = commutator_values(group)?;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; f.order()];
    let mut seen = vec![false; f.order()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(cur) = queue.pop_front() {
        if cur == target {
            break;
        }
        for (k, &(c, _, _)) in steps.iter().enumerate() {
            let next = f.mul(cur, c);
            if !seen[next] {
                seen[next] = true;
                parent[next] = Some((cur, k));
                queue.push_back(next);
            }
        }
    }
    if !seen[target] {
        return Err(Error::NotAProductOfCommutators(group.format_element(element)));
    }
    let geo = group.geodesics()?;
    let mut pairs = Vec::new();
    let mut cur = target;
    while let Some((prev, k)) = parent[cur] {
        let (_, x, y) = steps[k];
        pairs.push((geo.word(x).clone(), geo.word(y).clone()));
        cur = prev;
    }
    pairs.reverse();
    Ok(pairs)
}

/// Writes a base-group element as a product of commutators, choosing the
/// method by backend.
pub fn express_base_value(base: &Group, value: &Element) -> Result<Vec<(Word, Word)>> {
    match base.kind() {
        GroupKind::Free => express_in_derived(&base.represent(value)?),
        GroupKind::Finite => express_in_derived_finite(base, value),
        _ if base.is_identity(value) => Ok(Vec::new()),
        _ => Err(Error::Unsupported(format!(
            "commutator expressions in a {}",
            base.kind()
        ))),
    }
}

/// Commutators grouped by position: the data `a_i, (f_ij, g_ij)` of
/// `∏_i a_i^-1 (∏_j [f_ij, g_ij]) a_i`.
///
/// Positions are distinct and sorted; pushing an existing position appends
/// to its list, which multiplies the two products at that position.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CommutatorData {
    entries: Vec<PositionCommutators>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionCommutators {
    pub position: Element,
    pub pairs: Vec<(Word, Word)>,
}

impl CommutatorData {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, position: Element, pairs: Vec<(Word, Word)>) {
        match self.entries.binary_search_by(|e| e.position.cmp(&position)) {
            Ok(i) => self.entries[i].pairs.extend(pairs),
            Err(i) => self.entries.insert(i, PositionCommutators { position, pairs }),
        }
    }

    pub fn entries(&self) -> &[PositionCommutators] {
        &self.entries
    }

    /// True when there are no commutators at all.
    pub fn is_empty(&self) -> bool {
        self.entries.iter().all(|e| e.pairs.is_empty())
    }

    /// `n = max_i n_i`.
    pub fn max_commutators(&self) -> usize {
        self.entries.iter().map(|e| e.pairs.len()).max().unwrap_or(0)
    }

    pub fn total_commutators(&self) -> usize {
        self.entries.iter().map(|e| e.pairs.len()).sum()
    }

    /// The base-only element `∏_i a_i^-1 (∏_j [f_ij, g_ij]) a_i`.
    pub fn target(&self, wreath: &WreathGroup) -> Result<WreathElement> {
        let base = wreath.base();
        let mut acc = wreath.identity();
        for e in &self.entries {
            let word = product_of_commutators(base.alphabet(), &e.pairs)?;
            let value = base.evaluate(&word)?;
            acc = wreath.multiply(&acc, &wreath.lamp(&e.position, &value)?)?;
        }
        Ok(acc)
    }

    /// Splits `g = a · ∏ a_i^-1 b_i a_i` and expresses every `b_i` as a
    /// product of commutators. Returns the data and the top component `a`.
    pub fn from_element(wreath: &WreathGroup, g: &WreathElement) -> Result<(Self, Element)> {
        let nf = wreath.normal_form(g)?;
        let mut cd = Self::new();
        for (pos, value) in nf.entries {
            cd.push(pos, express_base_value(wreath.base(), &value)?);
        }
        Ok((cd, nf.top))
    }
}

/// Letter-level check that `pairs` multiply out to `w` in the free group.
pub fn verify_free_expression(w: &Word, pairs: &[(Word, Word)]) -> Result<bool> {
    let prod = product_of_commutators(w.alphabet(), pairs)?;
    Ok(prod.concat(&w.invert())?.reduce_free().is_empty())
}
