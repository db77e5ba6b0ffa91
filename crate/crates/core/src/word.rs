//! Words over signed generator alphabets.
//!
//! A [`Word`] is a flat sequence of signed letters tied to the [`Alphabet`] it
//! was built over. Nothing here reduces implicitly: reversal, inversion and
//! concatenation act on the literal letter sequence, and palindrome checks
//! look at that sequence as written. Free reduction happens only when
//! [`Word::reduce_free`] is called.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of distinct generator names.
///
/// Order matters: it fixes letter indices and shortlex tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidAlphabet(format!(
                    "`{name}` is not an identifier"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidAlphabet(format!("duplicate name `{name}`")));
            }
        }
        Ok(Arc::new(Self { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Names of `self` followed by names of `other`; the two must be disjoint.
    pub fn concat(&self, other: &Alphabet) -> Result<Arc<Self>> {
        Self::new(self.names.iter().chain(other.names.iter()).cloned())
    }

    /// This alphabet with one more generator appended.
    pub fn extended(&self, name: &str) -> Result<Arc<Self>> {
        Self::new(self.names.iter().cloned().chain(std::iter::once(name.to_owned())))
    }

    /// All signed letters in shortlex order: `x1, x1^-1, x2, x2^-1, ...`.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).flat_map(|g| [Letter::pos(g), Letter::neg(g)])
    }

    fn describe(&self) -> String {
        self.names.join(", ")
    }
}

/// A generator or its formal inverse.
///
/// The derived order (generator index, then positive before negative) is the
/// shortlex letter order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub const fn pos(generator: usize) -> Self {
        Self { generator, inverse: false }
    }

    pub const fn neg(generator: usize) -> Self {
        Self { generator, inverse: true }
    }

    pub const fn inv(self) -> Self {
        Self { generator: self.generator, inverse: !self.inverse }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse { -1 } else { 1 }
    }
}

/// A finite sequence of signed letters over a fixed alphabet.
///
/// Equality is letter-for-letter on the flat sequence, together with
/// name-wise alphabet equality.
#[derive(Clone)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    letters: Vec<Letter>,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && same_alphabet(&self.alphabet, &other.alphabet)
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

pub(crate) fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

pub(crate) fn check_alphabet(expected: &Arc<Alphabet>, found: &Arc<Alphabet>) -> Result<()> {
    if same_alphabet(expected, found) {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch {
            expected: expected.describe(),
            found: found.describe(),
        })
    }
}

impl Word {
    pub fn empty(alphabet: &Arc<Alphabet>) -> Self {
        Self { alphabet: Arc::clone(alphabet), letters: Vec::new() }
    }

    pub fn from_letters(alphabet: &Arc<Alphabet>, letters: Vec<Letter>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| l.generator >= alphabet.len()) {
            return Err(Error::GeneratorOutOfRange { index: bad.generator, len: alphabet.len() });
        }
        Ok(Self { alphabet: Arc::clone(alphabet), letters })
    }

    /// Builds a word from `(generator, exponent)` blocks. Blocks need not be
    /// maximal; a zero exponent contributes nothing.
    pub fn from_blocks(alphabet: &Arc<Alphabet>, blocks: &[(usize, i64)]) -> Result<Self> {
        let mut letters = Vec::new();
        for &(g, e) in blocks {
            let letter = if e < 0 { Letter::neg(g) } else { Letter::pos(g) };
            letters.extend(std::iter::repeat_n(letter, e.unsigned_abs() as usize));
        }
        Self::from_letters(alphabet, letters)
    }

    pub fn letter(alphabet: &Arc<Alphabet>, letter: Letter) -> Result<Self> {
        Self::from_letters(alphabet, vec![letter])
    }

    /// The power word `x^k` of generator `g`.
    pub fn power(alphabet: &Arc<Alphabet>, generator: usize, exponent: i64) -> Result<Self> {
        Self::from_blocks(alphabet, &[(generator, exponent)])
    }

    pub(crate) fn from_raw(alphabet: &Arc<Alphabet>, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.generator < alphabet.len()));
        Self { alphabet: Arc::clone(alphabet), letters }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Maximal runs of equal letters as `(generator, exponent)` blocks.
    pub fn blocks(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64, bool)> = Vec::new();
        for l in &self.letters {
            match out.last_mut() {
                Some((g, e, inv)) if *g == l.generator && *inv == l.inverse => *e += l.exponent(),
                _ => out.push((l.generator, l.exponent(), l.inverse)),
            }
        }
        out.into_iter().map(|(g, e, _)| (g, e)).collect()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        check_alphabet(&self.alphabet, &other.alphabet)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Self { alphabet: Arc::clone(&self.alphabet), letters })
    }

    /// Concatenates `words` in order. All of them must be over `alphabet`.
    pub fn product<'a, I>(alphabet: &Arc<Alphabet>, words: I) -> Result<Word>
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let mut letters = Vec::new();
        for w in words {
            check_alphabet(alphabet, &w.alphabet)?;
            letters.extend_from_slice(&w.letters);
        }
        Ok(Self { alphabet: Arc::clone(alphabet), letters })
    }

    /// The reverse word: letter order flipped, each letter keeping its sign.
    pub fn reverse(&self) -> Word {
        let letters = self.letters.iter().rev().copied().collect();
        Self { alphabet: Arc::clone(&self.alphabet), letters }
    }

    /// The formal inverse: letter order flipped and every sign flipped.
    pub fn invert(&self) -> Word {
        let letters = self.letters.iter().rev().map(|l| l.inv()).collect();
        Self { alphabet: Arc::clone(&self.alphabet), letters }
    }

    pub fn reduce_free(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&l.inv()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Self { alphabet: Arc::clone(&self.alphabet), letters: stack }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inv())
    }

    /// Exponent sum of each generator; the image in the abelianization.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.alphabet.len()];
        for l in &self.letters {
            sums[l.generator] += l.exponent();
        }
        sums
    }

    /// Returns a certificate iff the literal letter sequence reads the same
    /// backwards. No reduction is applied first.
    pub fn is_palindrome(&self) -> Option<PalindromeCertificate> {
        let n = self.letters.len();
        if (0..n / 2).any(|i| self.letters[i] != self.letters[n - 1 - i]) {
            return None;
        }
        let left = Self::from_raw(&self.alphabet, self.letters[..n / 2].to_vec());
        let center = (n % 2 == 1).then(|| self.letters[n / 2]);
        Some(PalindromeCertificate { word: self.clone(), left, center })
    }

    /// `u · p · reverse(u)` for a palindrome `p`.
    pub fn sandwich(u: &Word, p: &Word) -> Result<Word> {
        check_alphabet(&u.alphabet, &p.alphabet)?;
        if p.is_palindrome().is_none() {
            return Err(Error::NotPalindrome(p.to_string()));
        }
        let mut letters = Vec::with_capacity(2 * u.len() + p.len());
        letters.extend_from_slice(&u.letters);
        letters.extend_from_slice(&p.letters);
        letters.extend(u.letters.iter().rev().copied());
        Ok(Self { alphabet: Arc::clone(&u.alphabet), letters })
    }

    /// Rewrites this word over `target`, matching generators by name.
    pub fn translate(&self, target: &Arc<Alphabet>) -> Result<Word> {
        if same_alphabet(&self.alphabet, target) {
            return Ok(Self { alphabet: Arc::clone(target), letters: self.letters.clone() });
        }
        let letters = self
            .letters
            .iter()
            .map(|l| {
                let name = self.alphabet.name(l.generator);
                let generator =
                    target.index_of(name).ok_or_else(|| Error::UnknownGenerator(name.to_owned()))?;
                Ok(Letter { generator, inverse: l.inverse })
            })
            .collect::<Result<_>>()?;
        Ok(Self { alphabet: Arc::clone(target), letters })
    }

    /// Same letter sequence with generator indices shifted by `offset`, over
    /// a larger alphabet. Used for embeddings into combined alphabets.
    pub(crate) fn shifted(&self, target: &Arc<Alphabet>, offset: usize) -> Word {
        let letters = self
            .letters
            .iter()
            .map(|l| Letter { generator: l.generator + offset, inverse: l.inverse })
            .collect();
        Self::from_raw(target, letters)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, e)) in self.blocks().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.alphabet.name(g))?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Witness that a word is a palindrome: `word = left · center · reverse(left)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromeCertificate {
    pub word: Word,
    pub left: Word,
    pub center: Option<Letter>,
}

impl PalindromeCertificate {
    pub fn reconstruct(&self) -> Word {
        let mut letters = self.left.letters.clone();
        letters.extend(self.center);
        letters.extend(self.left.letters.iter().rev().copied());
        Word::from_raw(&self.left.alphabet, letters)
    }

    pub fn center_name(&self) -> Option<String> {
        self.center.map(|l| {
            let name = self.word.alphabet.name(l.generator);
            if l.inverse { format!("{name}^-1") } else { name.to_owned() }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Arc<Alphabet> {
        Alphabet::new(["x1", "x2"]).unwrap()
    }

    fn w(blocks: &[(usize, i64)]) -> Word {
        Word::from_blocks(&ab(), blocks).unwrap()
    }

    #[test]
    fn alphabet_rejects_duplicates_and_bad_names() {
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["1a"]).is_err());
        assert!(Alphabet::new([""]).is_err());
        assert_eq!(Alphabet::new(["a", "b"]).unwrap().index_of("b"), Some(1));
    }

    #[test]
    fn reverse_keeps_signs() {
        assert_eq!(w(&[(0, 1), (1, -1)]).reverse(), w(&[(1, -1), (0, 1)]));
        assert!(Word::empty(&ab()).reverse().is_empty());
        let p = w(&[(0, 1), (1, 1), (0, 1)]);
        assert_eq!(p.reverse(), p);
    }

    #[test]
    fn invert_flips_order_and_signs() {
        assert_eq!(w(&[(0, 1), (1, 1)]).invert(), w(&[(1, -1), (0, -1)]));
        assert!(Word::empty(&ab()).invert().is_empty());
        let x = w(&[(0, 2), (1, -1), (0, 1)]);
        assert!(x.concat(&x.invert()).unwrap().reduce_free().is_empty());
    }

    #[test]
    fn free_reduction() {
        assert!(w(&[(0, 1), (0, -1)]).reduce_free().is_empty());
        let x = Word::from_letters(
            &ab(),
            vec![Letter::pos(0), Letter::pos(1), Letter::neg(1), Letter::pos(0)],
        )
        .unwrap();
        assert_eq!(x.reduce_free(), w(&[(0, 2)]));
        let r = w(&[(0, 1), (1, -3), (0, 2)]);
        assert_eq!(r.reduce_free(), r);
        assert!(r.is_freely_reduced());
    }

    #[test]
    fn palindrome_certificates() {
        let p = w(&[(0, 2), (1, 1), (0, 2)]);
        let cert = p.is_palindrome().unwrap();
        assert_eq!(cert.center, Some(Letter::pos(1)));
        assert_eq!(cert.left, w(&[(0, 2)]));
        assert_eq!(cert.reconstruct(), p);

        assert!(w(&[(0, 1), (1, 1)]).is_palindrome().is_none());

        let e = Word::empty(&ab()).is_palindrome().unwrap();
        assert!(e.left.is_empty() && e.center.is_none());
    }

    #[test]
    fn palindrome_check_does_not_reduce() {
        // x1 x1^-1 x2 reduces to the palindrome x2 but is not one as written.
        let x = Word::from_letters(&ab(), vec![Letter::pos(0), Letter::neg(0), Letter::pos(1)])
            .unwrap();
        assert!(x.is_palindrome().is_none());
        assert!(x.reduce_free().is_palindrome().is_some());
    }

    #[test]
    fn power_words_are_palindromes() {
        for k in -6..=6 {
            assert!(w(&[(1, k)]).is_palindrome().is_some());
        }
    }

    #[test]
    fn sandwich_builds_palindromes() {
        let alpha = Alphabet::new(["x1", "x2", "y1"]).unwrap();
        let u = Word::from_blocks(&alpha, &[(0, 1), (1, 1)]).unwrap();
        let p = Word::from_blocks(&alpha, &[(2, 1)]).unwrap();
        let s = Word::sandwich(&u, &p).unwrap();
        assert_eq!(s, Word::from_blocks(&alpha, &[(0, 1), (1, 1), (2, 1), (1, 1), (0, 1)]).unwrap());
        assert_eq!(Word::sandwich(&Word::empty(&alpha), &p).unwrap(), p);
        let aa = Word::sandwich(&u, &Word::empty(&alpha)).unwrap();
        assert!(aa.is_palindrome().is_some());
        assert!(matches!(Word::sandwich(&u, &u), Err(Error::NotPalindrome(_))));
    }

    #[test]
    fn concat_rejects_foreign_alphabets() {
        let other = Alphabet::new(["x1", "x2", "c"]).unwrap();
        let a = w(&[(0, 1)]);
        let b = Word::from_blocks(&other, &[(2, 1)]).unwrap();
        assert!(matches!(a.concat(&b), Err(Error::AlphabetMismatch { .. })));
        // Same names in a separately allocated alphabet are the same alphabet.
        let again = Alphabet::new(["x1", "x2"]).unwrap();
        assert!(a.concat(&Word::power(&again, 1, 2).unwrap()).is_ok());
    }

    #[test]
    fn blocks_flatten_regardless_of_split() {
        let a = w(&[(0, 1), (0, 2), (1, -1), (1, -1)]);
        let b = w(&[(0, 3), (1, -2)]);
        assert_eq!(a, b);
        assert_eq!(a.blocks(), vec![(0, 3), (1, -2)]);
        assert_eq!(a.to_string(), "x1^3 x2^-2");
        assert_eq!(Word::empty(&ab()).to_string(), "1");
    }

    #[test]
    fn translate_by_name() {
        let ext = Alphabet::new(["c", "x2", "x1"]).unwrap();
        let t = w(&[(0, 1), (1, -1)]).translate(&ext).unwrap();
        assert_eq!(t, Word::from_blocks(&ext, &[(2, 1), (1, -1)]).unwrap());
        assert!(Word::empty(&ext).translate(&ab()).is_ok());
        assert!(Word::power(&ext, 0, 1).unwrap().translate(&ab()).is_err());
    }
}
