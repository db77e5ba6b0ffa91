use std::sync::Arc;

use super::FiniteGroup;
use crate::word::{Alphabet, Letter, Word};

/// Word length and one shortlex geodesic per element of a finite group.
///
/// Built breadth-first from the identity, expanding elements in discovery
/// order and letters in shortlex order, so the first word reaching an
/// element is its shortlex-least geodesic.
#[derive(Debug, Clone)]
pub struct GeodesicTable {
    lengths: Vec<usize>,
    words: Vec<Word>,
}

impl GeodesicTable {
    pub(super) fn build(alphabet: &Arc<Alphabet>, group: &FiniteGroup) -> Self {
        let n = group.order();
        let mut parent: Vec<Option<(usize, Letter)>> = vec![None; n];
        let mut lengths = vec![usize::MAX; n];
        lengths[0] = 0;
        let mut queue = std::collections::VecDeque::from([0usize]);
        let letters: Vec<Letter> = alphabet.letters().collect();
        while let Some(cur) = queue.pop_front() {
            for &l in &letters {
                let next = group.mul(cur, group.letter_value(l));
                if lengths[next] == usize::MAX {
                    lengths[next] = lengths[cur] + 1;
                    parent[next] = Some((cur, l));
                    queue.push_back(next);
                }
            }
        }
        let mut words: Vec<Option<Word>> = vec![None; n];
        // Parents are discovered before children, so BFS order fills prefixes first.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&e| lengths[e]);
        for e in order {
            let w = match parent[e] {
                None => Word::empty(alphabet),
                Some((p, l)) => {
                    let mut letters = words[p].as_ref().expect("prefix first").letters().to_vec();
                    letters.push(l);
                    Word::from_raw(alphabet, letters)
                }
            };
            words[e] = Some(w);
        }
        Self { lengths, words: words.into_iter().map(Option::unwrap).collect() }
    }

    pub fn length(&self, element: usize) -> usize {
        self.lengths[element]
    }

    pub fn word(&self, element: usize) -> &Word {
        &self.words[element]
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// `max_h l_X(h)`.
    pub fn diameter(&self) -> usize {
        self.lengths.iter().copied().max().unwrap_or(0)
    }
}
