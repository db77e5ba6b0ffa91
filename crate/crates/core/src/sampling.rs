//! Seeded random inputs for tests, benches and examples.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::commutators::CommutatorData;
use crate::groups::{Element, GroupKind};
use crate::word::{Alphabet, Letter, Word};
use crate::wreath::WreathGroup;

/// A word of length exactly `len` with letters drawn uniformly from `letters`.
pub fn word_from<R: Rng + ?Sized>(rng: &mut R, alphabet: &Arc<Alphabet>, letters: &[Letter], len: usize) -> Word {
    let picked = (0..len).map(|_| *letters.choose(rng).expect("nonempty letter set")).collect();
    Word::from_letters(alphabet, picked).expect("letters from the alphabet")
}

/// A uniformly random word of length at most `max_len` over all signed letters.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, alphabet: &Arc<Alphabet>, max_len: usize) -> Word {
    let letters: Vec<Letter> = alphabet.letters().collect();
    if letters.is_empty() {
        return Word::empty(alphabet);
    }
    let len = rng.gen_range(0..=max_len);
    word_from(rng, alphabet, &letters, len)
}

/// A random word with all exponent sums zero and length at most `max_len`:
/// random letters followed by their inverses in shuffled order.
pub fn random_zero_sum_word<R: Rng + ?Sized>(rng: &mut R, alphabet: &Arc<Alphabet>, max_len: usize) -> Word {
    let letters: Vec<Letter> = alphabet.letters().collect();
    if letters.is_empty() {
        return Word::empty(alphabet);
    }
    let half = rng.gen_range(0..=max_len / 2);
    let mut first: Vec<Letter> = (0..half).map(|_| *letters.choose(rng).unwrap()).collect();
    let mut second: Vec<Letter> = first.iter().map(|l| l.inv()).collect();
    second.shuffle(rng);
    first.extend(second);
    Word::from_letters(alphabet, first).expect("letters from the alphabet")
}

/// A random position in the top group: uniform for finite tops, small
/// coordinates for free abelian tops, the identity otherwise.
pub fn random_position<R: Rng + ?Sized>(rng: &mut R, wreath: &WreathGroup, spread: i64) -> Element {
    let top = wreath.top();
    match top.kind() {
        GroupKind::Finite => Element::Finite(rng.gen_range(0..top.order().unwrap_or(1))),
        GroupKind::FreeAbelian | GroupKind::AbelianizedFree => {
            Element::Vector((0..top.rank()).map(|_| rng.gen_range(-spread..=spread)).collect())
        }
        _ => top.identity(),
    }
}

/// Commutator data with at most `positions` distinct positions, `1..=pairs`
/// commutators at each, and argument words of length at most `max_len`.
pub fn random_commutator_data<R: Rng + ?Sized>(
    rng: &mut R,
    wreath: &WreathGroup,
    positions: usize,
    pairs: usize,
    max_len: usize,
) -> CommutatorData {
    let base = wreath.base().alphabet();
    let mut cd = CommutatorData::new();
    let mut used: Vec<Element> = Vec::new();
    for _ in 0..rng.gen_range(1..=positions.max(1)) {
        let pos = random_position(rng, wreath, 3);
        if used.contains(&pos) {
            continue;
        }
        used.push(pos.clone());
        let list = (0..rng.gen_range(1..=pairs.max(1)))
            .map(|_| (random_word(rng, base, max_len), random_word(rng, base, max_len)))
            .collect();
        cd.push(pos, list);
    }
    cd
}
