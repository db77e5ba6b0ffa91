//! Group backends with one evaluation contract.
//!
//! A [`Group`] is an immutable, cheaply clonable handle pairing an
//! [`Alphabet`] with one of a few concrete backends on which equality is
//! decidable: finite groups, free groups, free abelian groups, abelianized
//! free groups, products of two handles, and the affine image of the
//! Baumslag–Solitar groups.

mod affine;
mod finite;
mod geodesic;
mod quotient;
pub mod spec;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_rational::BigRational;

pub use finite::FiniteGroup;
pub use geodesic::GeodesicTable;
pub use quotient::Homomorphism;

use crate::error::{Error, Result};
use crate::word::{check_alphabet, Alphabet, Letter, Word};

/// A group element. The payload shape matches the backend that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// Index into a finite group's canonical element order.
    Finite(usize),
    /// Freely reduced letter sequence.
    Free(Vec<Letter>),
    /// Exponent vector of a free abelian (or abelianized free) group.
    Vector(Vec<i64>),
    /// Affine map `x -> scale * x + shift` of the rationals.
    Affine(BigRational, BigRational),
    Pair(Box<Element>, Box<Element>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Finite,
    Free,
    FreeAbelian,
    AbelianizedFree,
    BaumslagSolitar,
    Product,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupKind::Finite => "finite group",
            GroupKind::Free => "free group",
            GroupKind::FreeAbelian => "free abelian group",
            GroupKind::AbelianizedFree => "abelianized free group",
            GroupKind::BaumslagSolitar => "Baumslag-Solitar group",
            GroupKind::Product => "product group",
        };
        f.write_str(s)
    }
}

#[derive(Debug)]
enum Backend {
    Finite(FiniteGroup),
    Free,
    FreeAbelian,
    AbelianizedFree,
    BaumslagSolitar { n: i64, m: i64 },
    Product(Group, Group),
}

#[derive(Debug)]
struct Inner {
    alphabet: Arc<Alphabet>,
    backend: Backend,
    geodesics: OnceLock<GeodesicTable>,
}

/// Shared handle to a group with a fixed generating set.
#[derive(Debug, Clone)]
pub struct Group(Arc<Inner>);

/// Anything that assigns values to words over its alphabet.
pub trait Evaluator {
    type Value: Clone + PartialEq + fmt::Debug;

    fn alphabet(&self) -> &Arc<Alphabet>;

    fn evaluate_word(&self, word: &Word) -> Result<Self::Value>;
}

impl Group {
    fn new(alphabet: Arc<Alphabet>, backend: Backend) -> Self {
        Self(Arc::new(Inner { alphabet, backend, geodesics: OnceLock::new() }))
    }

    /// Permutation group; `images` are one-line images, 1-based.
    pub fn from_permutations<S: AsRef<str>>(names: &[S], images: &[Vec<usize>]) -> Result<Self> {
        let alphabet = Alphabet::new(names.iter().map(|s| s.as_ref().to_owned()))?;
        if alphabet.len() != images.len() {
            return Err(Error::GroupDefinition("one permutation per generator name".into()));
        }
        Ok(Self::new(alphabet, Backend::Finite(FiniteGroup::from_permutations(images)?)))
    }

    /// Group given by a Cayley table; `generators[i]` is the table index of
    /// the generator named `names[i]`.
    pub fn from_cayley_table<S: AsRef<str>>(
        names: &[S],
        table: &[Vec<usize>],
        generators: &[usize],
    ) -> Result<Self> {
        let alphabet = Alphabet::new(names.iter().map(|s| s.as_ref().to_owned()))?;
        if alphabet.len() != generators.len() {
            return Err(Error::GroupDefinition("one table index per generator name".into()));
        }
        Ok(Self::new(alphabet, Backend::Finite(FiniteGroup::from_table(table, generators)?)))
    }

    pub fn from_finite(alphabet: Arc<Alphabet>, group: FiniteGroup) -> Result<Self> {
        if alphabet.len() != group.generators().len() {
            return Err(Error::GroupDefinition("alphabet size differs from generator count".into()));
        }
        Ok(Self::new(alphabet, Backend::Finite(group)))
    }

    pub fn free<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let alphabet = Alphabet::new(names.iter().map(|s| s.as_ref().to_owned()))?;
        Ok(Self::new(alphabet, Backend::Free))
    }

    pub fn free_abelian<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let alphabet = Alphabet::new(names.iter().map(|s| s.as_ref().to_owned()))?;
        Ok(Self::new(alphabet, Backend::FreeAbelian))
    }

    /// `F_d^ab`, i.e. `Z^d` presented on the generators of `F_d`.
    pub fn abelianized_free<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let alphabet = Alphabet::new(names.iter().map(|s| s.as_ref().to_owned()))?;
        Ok(Self::new(alphabet, Backend::AbelianizedFree))
    }

    /// `BS(n, m) = <a, b | a^-1 b^n a = b^m>` through its affine image
    /// `a -> (x -> (m/n) x)`, `b -> (x -> x + 1)`. The image is faithful
    /// when `|n| = 1` or `|m| = 1`; otherwise equality is equality in the
    /// image, so "not equal" is always sound.
    pub fn baumslag_solitar(n: i64, m: i64) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::GroupDefinition("BS(n, m) needs nonzero n and m".into()));
        }
        Ok(Self::new(Alphabet::new(["a", "b"])?, Backend::BaumslagSolitar { n, m }))
    }

    /// Direct product; the alphabet is `left`'s names followed by `right`'s.
    pub fn product(left: &Group, right: &Group) -> Result<Self> {
        let alphabet = left.alphabet().concat(right.alphabet())?;
        Ok(Self::new(alphabet, Backend::Product(left.clone(), right.clone())))
    }

    /// Same group with one more generator standing for `element`.
    /// Finite only; element indices are unchanged.
    pub fn with_extra_generator(&self, name: &str, element: &Element) -> Result<Self> {
        let f = self.as_finite().ok_or(Error::WrongGroupKind {
            expected: "a finite group",
            found: self.kind().to_string(),
        })?;
        let idx = self.finite_index(element)?;
        let alphabet = self.alphabet().extended(name)?;
        Ok(Self::new(alphabet, Backend::Finite(f.with_generator(idx))))
    }

    pub fn kind(&self) -> GroupKind {
        match &self.0.backend {
            Backend::Finite(_) => GroupKind::Finite,
            Backend::Free => GroupKind::Free,
            Backend::FreeAbelian => GroupKind::FreeAbelian,
            Backend::AbelianizedFree => GroupKind::AbelianizedFree,
            Backend::BaumslagSolitar { .. } => GroupKind::BaumslagSolitar,
            Backend::Product(..) => GroupKind::Product,
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.0.alphabet
    }

    pub fn rank(&self) -> usize {
        self.0.alphabet.len()
    }

    pub fn as_finite(&self) -> Option<&FiniteGroup> {
        match &self.0.backend {
            Backend::Finite(f) => Some(f),
            _ => None,
        }
    }

    pub fn factors(&self) -> Option<(&Group, &Group)> {
        match &self.0.backend {
            Backend::Product(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn baumslag_solitar_params(&self) -> Option<(i64, i64)> {
        match self.0.backend {
            Backend::BaumslagSolitar { n, m } => Some((n, m)),
            _ => None,
        }
    }

    pub fn order(&self) -> Option<usize> {
        match &self.0.backend {
            Backend::Finite(f) => Some(f.order()),
            Backend::Product(a, b) => Some(a.order()? * b.order()?),
            _ if self.rank() == 0 => Some(1),
            _ => None,
        }
    }

    pub fn is_abelian(&self) -> bool {
        match &self.0.backend {
            Backend::Finite(f) => f.is_abelian(),
            Backend::Free => self.rank() <= 1,
            Backend::FreeAbelian | Backend::AbelianizedFree => true,
            Backend::BaumslagSolitar { n, m } => n == m,
            Backend::Product(a, b) => a.is_abelian() && b.is_abelian(),
        }
    }

    /// Index of a generator of infinite order, if one is known.
    pub fn infinite_order_generator(&self) -> Option<usize> {
        match &self.0.backend {
            Backend::Finite(_) => None,
            Backend::Free | Backend::FreeAbelian | Backend::AbelianizedFree => {
                (self.rank() > 0).then_some(0)
            }
            Backend::BaumslagSolitar { .. } => Some(1),
            Backend::Product(a, b) => a
                .infinite_order_generator()
                .or_else(|| b.infinite_order_generator().map(|g| g + a.rank())),
        }
    }

    pub fn identity(&self) -> Element {
        match &self.0.backend {
            Backend::Finite(_) => Element::Finite(0),
            Backend::Free => Element::Free(Vec::new()),
            Backend::FreeAbelian | Backend::AbelianizedFree => Element::Vector(vec![0; self.rank()]),
            Backend::BaumslagSolitar { .. } => affine::identity(),
            Backend::Product(a, b) => Element::Pair(Box::new(a.identity()), Box::new(b.identity())),
        }
    }

    pub fn is_identity(&self, a: &Element) -> bool {
        *a == self.identity()
    }

    pub fn letter_value(&self, l: Letter) -> Result<Element> {
        if l.generator >= self.rank() {
            return Err(Error::GeneratorOutOfRange { index: l.generator, len: self.rank() });
        }
        Ok(match &self.0.backend {
            Backend::Finite(f) => Element::Finite(f.letter_value(l)),
            Backend::Free => Element::Free(vec![l]),
            Backend::FreeAbelian | Backend::AbelianizedFree => {
                let mut v = vec![0; self.rank()];
                v[l.generator] = l.exponent();
                Element::Vector(v)
            }
            Backend::BaumslagSolitar { n, m } => affine::letter(*n, *m, l),
            Backend::Product(a, b) => {
                if l.generator < a.rank() {
                    Element::Pair(Box::new(a.letter_value(l)?), Box::new(b.identity()))
                } else {
                    let inner = Letter { generator: l.generator - a.rank(), inverse: l.inverse };
                    Element::Pair(Box::new(a.identity()), Box::new(b.letter_value(inner)?))
                }
            }
        })
    }

    fn mismatch(&self, a: &Element) -> Error {
        Error::HandleMismatch(format!("{a:?} is not an element of this {}", self.kind()))
    }

    /// Checks that `a` has the payload shape of this group's elements.
    pub fn check(&self, a: &Element) -> Result<()> {
        let ok = match (&self.0.backend, a) {
            (Backend::Finite(f), Element::Finite(i)) => *i < f.order(),
            (Backend::Free, Element::Free(w)) => {
                w.iter().all(|l| l.generator < self.rank())
                    && w.windows(2).all(|p| p[0] != p[1].inv())
            }
            (Backend::FreeAbelian | Backend::AbelianizedFree, Element::Vector(v)) => {
                v.len() == self.rank()
            }
            (Backend::BaumslagSolitar { .. }, Element::Affine(..)) => true,
            (Backend::Product(l, r), Element::Pair(x, y)) => {
                return l.check(x).and_then(|_| r.check(y)).map_err(|_| self.mismatch(a));
            }
            _ => false,
        };
        if ok { Ok(()) } else { Err(self.mismatch(a)) }
    }

    pub(crate) fn finite_index(&self, a: &Element) -> Result<usize> {
        match (&self.0.backend, a) {
            (Backend::Finite(f), Element::Finite(i)) if *i < f.order() => Ok(*i),
            _ => Err(self.mismatch(a)),
        }
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(match (&self.0.backend, a, b) {
            (Backend::Finite(f), Element::Finite(x), Element::Finite(y))
                if *x < f.order() && *y < f.order() =>
            {
                Element::Finite(f.mul(*x, *y))
            }
            (Backend::Free, Element::Free(x), Element::Free(y)) => {
                let mut out = x.clone();
                for &l in y {
                    if out.last() == Some(&l.inv()) {
                        out.pop();
                    } else {
                        out.push(l);
                    }
                }
                Element::Free(out)
            }
            (Backend::FreeAbelian | Backend::AbelianizedFree, Element::Vector(x), Element::Vector(y))
                if x.len() == self.rank() && y.len() == self.rank() =>
            {
                Element::Vector(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            (Backend::BaumslagSolitar { .. }, Element::Affine(..), Element::Affine(..)) => {
                affine::multiply(a, b)
            }
            (Backend::Product(l, r), Element::Pair(x1, y1), Element::Pair(x2, y2)) => Element::Pair(
                Box::new(l.multiply(x1, x2)?),
                Box::new(r.multiply(y1, y2)?),
            ),
            _ => {
                return Err(if self.check(a).is_err() { self.mismatch(a) } else { self.mismatch(b) })
            }
        })
    }

    pub fn inverse(&self, a: &Element) -> Result<Element> {
        self.check(a)?;
        Ok(match (&self.0.backend, a) {
            (Backend::Finite(f), Element::Finite(x)) => Element::Finite(f.inv(*x)),
            (Backend::Free, Element::Free(x)) => Element::Free(x.iter().rev().map(|l| l.inv()).collect()),
            (_, Element::Vector(x)) => Element::Vector(x.iter().map(|v| -v).collect()),
            (_, Element::Affine(..)) => affine::inverse(a),
            (Backend::Product(l, r), Element::Pair(x, y)) => {
                Element::Pair(Box::new(l.inverse(x)?), Box::new(r.inverse(y)?))
            }
            _ => unreachable!("checked above"),
        })
    }

    pub fn equal(&self, a: &Element, b: &Element) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(a == b)
    }

    pub fn evaluate(&self, word: &Word) -> Result<Element> {
        check_alphabet(self.alphabet(), word.alphabet())?;
        let mut acc = self.identity();
        for &l in word.letters() {
            acc = self.multiply(&acc, &self.letter_value(l)?)?;
        }
        Ok(acc)
    }

    /// A word representing `a`: the shortlex geodesic for finite groups, the
    /// reduced word for free groups, the power product `x1^v1 x2^v2 ...` for
    /// free abelian groups, and the concatenation for products.
    pub fn represent(&self, a: &Element) -> Result<Word> {
        self.check(a)?;
        match (&self.0.backend, a) {
            (Backend::Finite(_), Element::Finite(i)) => Ok(self.geodesics()?.word(*i).clone()),
            (Backend::Free, Element::Free(x)) => Word::from_letters(self.alphabet(), x.clone()),
            (_, Element::Vector(v)) => {
                let blocks: Vec<(usize, i64)> = v.iter().copied().enumerate().collect();
                Word::from_blocks(self.alphabet(), &blocks)
            }
            (Backend::Product(l, r), Element::Pair(x, y)) => {
                let left = l.represent(x)?.shifted(self.alphabet(), 0);
                let right = r.represent(y)?.shifted(self.alphabet(), l.rank());
                left.concat(&right)
            }
            _ => Err(Error::Unsupported(format!("normal-form words in a {}", self.kind()))),
        }
    }

    /// Breadth-first geodesics from the identity, built once per handle.
    pub fn geodesics(&self) -> Result<&GeodesicTable> {
        let f = self.as_finite().ok_or(Error::WrongGroupKind {
            expected: "a finite group",
            found: self.kind().to_string(),
        })?;
        Ok(self.0.geodesics.get_or_init(|| GeodesicTable::build(self.alphabet(), f)))
    }

    /// Every element of a finite group in canonical order.
    pub fn elements(&self) -> Result<Vec<Element>> {
        let f = self.as_finite().ok_or(Error::WrongGroupKind {
            expected: "a finite group",
            found: self.kind().to_string(),
        })?;
        Ok((0..f.order()).map(Element::Finite).collect())
    }

    pub fn format_element(&self, a: &Element) -> String {
        match (&self.0.backend, a) {
            (Backend::Finite(_), Element::Finite(_)) | (Backend::Free, Element::Free(_)) => {
                self.represent(a).map(|w| w.to_string()).unwrap_or_else(|_| format!("{a:?}"))
            }
            (_, Element::Vector(v)) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                format!("({})", parts.join(","))
            }
            (_, Element::Affine(s, t)) => format!("x -> {s}*x + {t}"),
            (Backend::Product(l, r), Element::Pair(x, y)) => {
                format!("({}, {})", l.format_element(x), r.format_element(y))
            }
            _ => format!("{a:?}"),
        }
    }

    /// Whether two handles denote the same group on the same generators.
    pub fn same_as(&self, other: &Group) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        if self.alphabet() != other.alphabet() {
            return false;
        }
        match (&self.0.backend, &other.0.backend) {
            (Backend::Finite(a), Backend::Finite(b)) => {
                a.order() == b.order()
                    && a.generators() == b.generators()
                    && (0..a.order()).all(|x| (0..a.order()).all(|y| a.mul(x, y) == b.mul(x, y)))
            }
            (Backend::Free, Backend::Free)
            | (Backend::FreeAbelian, Backend::FreeAbelian)
            | (Backend::AbelianizedFree, Backend::AbelianizedFree) => true,
            (Backend::BaumslagSolitar { n, m }, Backend::BaumslagSolitar { n: n2, m: m2 }) => {
                n == n2 && m == m2
            }
            (Backend::Product(a, b), Backend::Product(c, d)) => a.same_as(c) && b.same_as(d),
            _ => false,
        }
    }
}

impl Evaluator for Group {
    type Value = Element;

    fn alphabet(&self) -> &Arc<Alphabet> {
        Group::alphabet(self)
    }

    fn evaluate_word(&self, word: &Word) -> Result<Element> {
        self.evaluate(word)
    }
}

/// Exponent-sum vector of a word over `F_d`; its image in `Z^d`.
pub fn abelianize(word: &Word) -> Vec<i64> {
    word.exponent_sums()
}
