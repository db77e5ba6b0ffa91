//! Restricted regular wreath products `B ≀ A`.
//!
//! An element is a top component in `A` together with a finitely supported
//! map from positions (elements of `A`) to values in `B`.
//!
//! Action convention: the word `a^-1 · f · a` places the lamp `f` at
//! position `a`. When a word is read left to right and the running top
//! prefix is `s`, a base letter multiplies into position `s^-1`. In
//! products, `(φ, s)·(ψ, t) = (q ↦ φ(q)·ψ(q·s), s·t)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groups::{Element, Evaluator, Group};
use crate::word::{check_alphabet, Alphabet, Letter, Word};

/// `B ≀ A` on the combined generating set: top names first, then base names.
#[derive(Debug, Clone)]
pub struct WreathGroup {
    base: Group,
    top: Group,
    alphabet: Arc<Alphabet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    pub top: Element,
    /// Position to lamp value; identity values are never stored.
    pub base: BTreeMap<Element, Element>,
}

/// `g = a · ∏ a_i^-1 (f_i, 1) a_i`, entries sorted by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub top: Element,
    pub entries: Vec<(Element, Element)>,
}

impl WreathElement {
    pub fn support(&self) -> impl Iterator<Item = &Element> {
        self.base.keys()
    }

    pub fn is_base_only(&self, wreath: &WreathGroup) -> bool {
        wreath.top.is_identity(&self.top)
    }
}

impl WreathGroup {
    pub fn new(base: &Group, top: &Group) -> Result<Self> {
        let alphabet = top.alphabet().concat(base.alphabet())?;
        Ok(Self { base: base.clone(), top: top.clone(), alphabet })
    }

    pub fn base(&self) -> &Group {
        &self.base
    }

    pub fn top(&self) -> &Group {
        &self.top
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Same base, different top (e.g. the top with an extra generator).
    pub fn with_top(&self, top: &Group) -> Result<Self> {
        Self::new(&self.base, top)
    }

    pub fn with_base(&self, base: &Group) -> Result<Self> {
        Self::new(base, &self.top)
    }

    pub fn is_top_letter(&self, l: Letter) -> bool {
        l.generator < self.top.rank()
    }

    pub fn embed_top(&self, w: &Word) -> Result<Word> {
        check_alphabet(self.top.alphabet(), w.alphabet())?;
        Ok(w.shifted(&self.alphabet, 0))
    }

    pub fn embed_base(&self, w: &Word) -> Result<Word> {
        check_alphabet(self.base.alphabet(), w.alphabet())?;
        Ok(w.shifted(&self.alphabet, self.top.rank()))
    }

    pub fn identity(&self) -> WreathElement {
        WreathElement { top: self.top.identity(), base: BTreeMap::new() }
    }

    pub fn is_identity(&self, g: &WreathElement) -> bool {
        g.base.is_empty() && self.top.is_identity(&g.top)
    }

    pub fn from_top(&self, a: &Element) -> Result<WreathElement> {
        self.top.check(a)?;
        Ok(WreathElement { top: a.clone(), base: BTreeMap::new() })
    }

    /// The base-only element with `value` at `position`.
    pub fn lamp(&self, position: &Element, value: &Element) -> Result<WreathElement> {
        self.top.check(position)?;
        self.base.check(value)?;
        let mut base = BTreeMap::new();
        if !self.base.is_identity(value) {
            base.insert(position.clone(), value.clone());
        }
        Ok(WreathElement { top: self.top.identity(), base })
    }

    fn check(&self, g: &WreathElement) -> Result<()> {
        self.top.check(&g.top)?;
        for (p, v) in &g.base {
            self.top.check(p)?;
            self.base.check(v)?;
            if self.base.is_identity(v) {
                return Err(Error::HandleMismatch("identity lamp stored in base map".into()));
            }
        }
        Ok(())
    }

    /// Multiplies `value` into position `pos` on the right.
    fn push_lamp(&self, map: &mut BTreeMap<Element, Element>, pos: Element, value: &Element) -> Result<()> {
        let current = map.remove(&pos).unwrap_or_else(|| self.base.identity());
        let next = self.base.multiply(&current, value)?;
        if !self.base.is_identity(&next) {
            map.insert(pos, next);
        }
        Ok(())
    }

    pub fn multiply(&self, g: &WreathElement, h: &WreathElement) -> Result<WreathElement> {
        self.check(g)?;
        self.check(h)?;
        let s_inv = self.top.inverse(&g.top)?;
        let mut base = g.base.clone();
        for (p, v) in &h.base {
            let q = self.top.multiply(p, &s_inv)?;
            self.push_lamp(&mut base, q, v)?;
        }
        Ok(WreathElement { top: self.top.multiply(&g.top, &h.top)?, base })
    }

    pub fn inverse(&self, g: &WreathElement) -> Result<WreathElement> {
        self.check(g)?;
        let s = &g.top;
        let mut base = BTreeMap::new();
        for (p, v) in &g.base {
            base.insert(self.top.multiply(p, s)?, self.base.inverse(v)?);
        }
        Ok(WreathElement { top: self.top.inverse(s)?, base })
    }

    pub fn evaluate(&self, w: &Word) -> Result<WreathElement> {
        check_alphabet(&self.alphabet, w.alphabet())?;
        let k = self.top.rank();
        let mut top = self.top.identity();
        let mut top_inv = self.top.identity();
        let mut base = BTreeMap::new();
        for &l in w.letters() {
            if l.generator < k {
                let x = self.top.letter_value(l)?;
                let x_inv = self.top.letter_value(l.inv())?;
                top = self.top.multiply(&top, &x)?;
                top_inv = self.top.multiply(&x_inv, &top_inv)?;
            } else {
                let inner = Letter { generator: l.generator - k, inverse: l.inverse };
                let y = self.base.letter_value(inner)?;
                self.push_lamp(&mut base, top_inv.clone(), &y)?;
            }
        }
        Ok(WreathElement { top, base })
    }

    /// Splits `g` as `a · ∏ a_i^-1 (f_i, 1) a_i`.
    pub fn normal_form(&self, g: &WreathElement) -> Result<NormalForm> {
        self.check(g)?;
        let mut entries = g
            .base
            .iter()
            .map(|(p, v)| Ok((self.top.multiply(p, &g.top)?, v.clone())))
            .collect::<Result<Vec<_>>>()?;
        entries.sort();
        Ok(NormalForm { top: g.top.clone(), entries })
    }

    /// The word `word(a) · ∏ word(a_i)^-1 word(f_i) word(a_i)`.
    pub fn assemble(&self, nf: &NormalForm) -> Result<Word> {
        let mut parts = vec![self.embed_top(&self.top.represent(&nf.top)?)?];
        for (pos, value) in &nf.entries {
            let a = self.embed_top(&self.top.represent(pos)?)?;
            parts.push(a.invert());
            parts.push(self.embed_base(&self.base.represent(value)?)?);
            parts.push(a);
        }
        Word::product(&self.alphabet, &parts)
    }

    /// Inverse of [`normal_form`](Self::normal_form).
    pub fn from_normal_form(&self, nf: &NormalForm) -> Result<WreathElement> {
        let mut acc = self.identity();
        for (pos, value) in &nf.entries {
            acc = self.multiply(&acc, &self.lamp(pos, value)?)?;
        }
        self.multiply(&self.from_top(&nf.top)?, &acc)
    }

    pub fn format_element(&self, g: &WreathElement) -> String {
        let lamps: Vec<String> = g
            .base
            .iter()
            .map(|(p, v)| format!("{}: {}", self.top.format_element(p), self.base.format_element(v)))
            .collect();
        format!("top {} | lamps {{{}}}", self.top.format_element(&g.top), lamps.join("; "))
    }
}

impl Evaluator for WreathGroup {
    type Value = WreathElement;

    fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    fn evaluate_word(&self, word: &Word) -> Result<WreathElement> {
        self.evaluate(word)
    }
}
