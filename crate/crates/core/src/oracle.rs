//! Exact palindrome data for finite groups.
//!
//! A word `u` determines the pair `(eval(u), eval(reverse(u)))`. Appending a
//! letter `x` sends `(g, g*)` to `(g·x, x·g*)`, so the reachable pairs of a
//! finite group are a finite closure. Every palindrome is `u·c·reverse(u)`
//! with `c` empty or one letter, so the palindromic elements are exactly the
//! products `g·c·g*` over reachable pairs.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, VerificationFailure};
use crate::groups::{Element, Evaluator, FiniteGroup, Group};
use crate::word::{check_alphabet, Letter, Word};

const NONE: u32 = u32::MAX;

fn finite(group: &Group) -> Result<&FiniteGroup> {
    group.as_finite().ok_or(Error::WrongGroupKind {
        expected: "a finite group",
        found: group.kind().to_string(),
    })
}

/// Reachable `(eval(u), eval(reverse(u)))` pairs with predecessor links.
#[derive(Debug, Clone)]
pub struct PairAutomaton {
    group: Group,
    order: usize,
    letters: Vec<Letter>,
    /// Per state `g * order + g*`: predecessor state, or `NONE`.
    parent: Vec<u32>,
    /// Letter index appended on the link into a state.
    via: Vec<u8>,
    /// Breadth-first depth, i.e. the length of the shortest `u`.
    depth: Vec<u32>,
    /// Reachable states in discovery order.
    discovered: Vec<u32>,
}

impl PairAutomaton {
    pub fn build(group: &Group) -> Result<Self> {
        let f = finite(group)?;
        let n = f.order();
        let letters: Vec<Letter> = group.alphabet().letters().collect();
        if letters.len() > u8::MAX as usize {
            return Err(Error::Unsupported("more than 127 generators".into()));
        }
        let values: Vec<usize> = letters.iter().map(|&l| f.letter_value(l)).collect();
        let states = n * n;
        let mut parent = vec![NONE; states];
        let mut via = vec![0u8; states];
        let mut depth = vec![u32::MAX; states];
        let mut discovered = vec![0u32];
        depth[0] = 0;
        let mut head = 0;
        while head < discovered.len() {
            let s = discovered[head] as usize;
            head += 1;
            let (g, gs) = (s / n, s % n);
            for (k, &x) in values.iter().enumerate() {
                let t = f.mul(g, x) * n + f.mul(x, gs);
                if depth[t] == u32::MAX {
                    depth[t] = depth[s] + 1;
                    parent[t] = s as u32;
                    via[t] = k as u8;
                    discovered.push(t as u32);
                }
            }
        }
        Ok(Self { group: group.clone(), order: n, letters, parent, via, depth, discovered })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.discovered.len()
    }

    pub fn is_empty(&self) -> bool {
        self.discovered.is_empty()
    }

    /// Reachable pairs of element indices in discovery order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.discovered.iter().map(|&s| (s as usize / self.order, s as usize % self.order))
    }

    pub fn contains(&self, g: usize, g_star: usize) -> bool {
        g < self.order && g_star < self.order && self.depth[g * self.order + g_star] != u32::MAX
    }

    /// Shortest word `u` reaching `(g, g*)`, if any.
    pub fn witness(&self, g: usize, g_star: usize) -> Option<Word> {
        if !self.contains(g, g_star) {
            return None;
        }
        let mut s = g * self.order + g_star;
        let mut letters = Vec::with_capacity(self.depth[s] as usize);
        while self.parent[s] != NONE {
            letters.push(self.letters[self.via[s] as usize]);
            s = self.parent[s] as usize;
        }
        letters.reverse();
        Some(Word::from_letters(self.group.alphabet(), letters).expect("automaton letters"))
    }

    fn depth_of(&self, g: usize, g_star: usize) -> usize {
        self.depth[g * self.order + g_star] as usize
    }

    /// The first-discovered relation `r` (so `eval(r) = 1`) whose reverse
    /// is not the identity, with `eval(reverse(r))`.
    pub fn asymmetric_relation(&self) -> Option<(Word, usize)> {
        let (_, gs) = self.pairs().find(|&(g, gs)| g == 0 && gs != 0)?;
        Some((self.witness(0, gs)?, gs))
    }

    /// True when every reachable pair has `g = g*`.
    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(g, gs)| g == gs)
    }
}

/// Palindromic elements of a finite group with shortest palindromic words.
#[derive(Debug, Clone)]
pub struct PalindromeSet {
    /// Per element: the pair and center realising its shortest palindrome.
    best: Vec<Option<(usize, usize, Option<Letter>)>>,
    automaton: PairAutomaton,
}

impl PalindromeSet {
    pub fn from_automaton(automaton: PairAutomaton) -> Self {
        let f = finite(&automaton.group).expect("automaton over a finite group");
        let mut best: Vec<Option<(usize, usize, Option<Letter>)>> = vec![None; automaton.order];
        let mut best_len = vec![usize::MAX; automaton.order];
        let centers: Vec<Option<Letter>> =
            std::iter::once(None).chain(automaton.letters.iter().copied().map(Some)).collect();
        for (g, gs) in automaton.pairs() {
            let d = automaton.depth_of(g, gs);
            for &c in &centers {
                let cv = c.map_or(0, |l| f.letter_value(l));
                let h = f.mul(f.mul(g, cv), gs);
                let len = 2 * d + usize::from(c.is_some());
                if len < best_len[h] {
                    best_len[h] = len;
                    best[h] = Some((g, gs, c));
                }
            }
        }
        Self { best, automaton }
    }

    pub fn build(group: &Group) -> Result<Self> {
        Ok(Self::from_automaton(PairAutomaton::build(group)?))
    }

    pub fn automaton(&self) -> &PairAutomaton {
        &self.automaton
    }

    pub fn contains(&self, element: usize) -> bool {
        self.best.get(element).is_some_and(Option::is_some)
    }

    /// Palindromic element indices in canonical order.
    pub fn elements(&self) -> Vec<usize> {
        (0..self.best.len()).filter(|&h| self.contains(h)).collect()
    }

    pub fn len(&self) -> usize {
        self.best.iter().flatten().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// A shortest palindromic word for `element`.
    pub fn witness(&self, element: usize) -> Option<Word> {
        let (g, gs, c) = (*self.best.get(element)?)?;
        let u = self.automaton.witness(g, gs)?;
        let alphabet = u.alphabet().clone();
        let center = match c {
            Some(l) => Word::letter(&alphabet, l).ok()?,
            None => Word::empty(&alphabet),
        };
        Word::sandwich(&u, &center).ok()
    }
}

/// Previous element and the step taken from it.
pub type Parent = Option<(usize, usize)>;

/// Breadth-first distances from the identity where one step multiplies on
/// the right by an element of `steps`. Errors if some element is missed.
pub fn width_with_steps(group: &Group, steps: &[usize]) -> Result<(Vec<usize>, Vec<Parent>)> {
    let f = finite(group)?;
    let n = f.order();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![None; n];
    dist[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(cur) = queue.pop_front() {
        for &p in steps {
            let next = f.mul(cur, p);
            if dist[next] == usize::MAX {
                dist[next] = dist[cur] + 1;
                parent[next] = Some((cur, p));
                queue.push_back(next);
            }
        }
    }
    let reached = dist.iter().filter(|&&d| d != usize::MAX).count();
    if reached < n {
        return Err(Error::NotGenerated { reached, order: n });
    }
    Ok((dist, parent))
}

/// Exact palindromic width and per-element distances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthReport {
    pub width: usize,
    /// Canonical index of the first element attaining the width.
    pub witness: usize,
    pub distances: Vec<usize>,
    /// `histogram[k]` elements need exactly `k` palindromes.
    pub histogram: Vec<usize>,
}

/// Palindrome set plus palindrome-step distances of a finite group.
#[derive(Debug, Clone)]
pub struct PalindromeOracle {
    set: PalindromeSet,
    report: WidthReport,
    parent: Vec<Option<(usize, usize)>>,
}

impl PalindromeOracle {
    pub fn new(group: &Group) -> Result<Self> {
        let set = PalindromeSet::build(group)?;
        let steps: Vec<usize> = set.elements().into_iter().filter(|&h| h != 0).collect();
        let (distances, parent) = width_with_steps(group, &steps)?;
        let width = distances.iter().copied().max().unwrap_or(0);
        let witness = distances.iter().position(|&d| d == width).unwrap_or(0);
        let mut histogram = vec![0; width + 1];
        for &d in &distances {
            histogram[d] += 1;
        }
        Ok(Self { set, report: WidthReport { width, witness, distances, histogram }, parent })
    }

    pub fn group(&self) -> &Group {
        self.set.automaton().group()
    }

    pub fn palindromes(&self) -> &PalindromeSet {
        &self.set
    }

    pub fn width(&self) -> usize {
        self.report.width
    }

    pub fn report(&self) -> &WidthReport {
        &self.report
    }

    /// At most `width` palindromic words multiplying to `a`, along a
    /// shortest palindrome-step path.
    pub fn decompose_top_element(&self, a: &Element) -> Result<Vec<Word>> {
        let mut cur = self.group().finite_index(a)?;
        let mut out = Vec::new();
        while let Some((prev, step)) = self.parent[cur] {
            out.push(self.set.witness(step).expect("steps are palindromic"));
            cur = prev;
        }
        out.reverse();
        Ok(out)
    }
}

/// `exact_palindromic_width(h)`.
pub fn exact_palindromic_width(group: &Group) -> Result<WidthReport> {
    Ok(PalindromeOracle::new(group)?.report.clone())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorCertificate {
    pub length: usize,
    /// Name of the middle letter for odd-length palindromes.
    pub center: Option<String>,
}

/// Result of a successful verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationCertificate {
    pub factors: Vec<FactorCertificate>,
    pub product_matches: bool,
}

/// Checks that every factor is literally a palindrome and that the product
/// of the factors evaluates to `target`.
pub fn verify_factorization<E: Evaluator>(
    evaluator: &E,
    target: &E::Value,
    factors: &[Word],
) -> Result<FactorizationCertificate, VerificationFailure> {
    let mut certs = Vec::with_capacity(factors.len());
    for (index, w) in factors.iter().enumerate() {
        if check_alphabet(evaluator.alphabet(), w.alphabet()).is_err() {
            return Err(VerificationFailure::AlphabetMismatch { index });
        }
        let cert = w.is_palindrome().ok_or(VerificationFailure::NotPalindrome { index })?;
        certs.push(FactorCertificate { length: w.len(), center: cert.center_name() });
    }
    let product = Word::product(evaluator.alphabet(), factors)
        .map_err(|e| VerificationFailure::Evaluation { index: 0, message: e.to_string() })?;
    let value = evaluator.evaluate_word(&product).map_err(|e| {
        VerificationFailure::Evaluation { index: factors.len().saturating_sub(1), message: e.to_string() }
    })?;
    if &value != target {
        return Err(VerificationFailure::ProductMismatch);
    }
    Ok(FactorizationCertificate { factors: certs, product_matches: true })
}
