use super::{Element, Group};
use crate::error::{Error, Result};
use crate::word::Word;

/// Homomorphism from a free group onto a finite group, given by the images
/// of the free generators.
///
/// The target handle is the subgroup generated by the images, presented on
/// the *source* generator names: the generating set is the image of the
/// source generators. Words therefore push forward letter for letter, and a
/// palindromic word maps to a palindromic word.
#[derive(Debug, Clone)]
pub struct Homomorphism {
    source: Group,
    target: Group,
    ambient: Group,
    embedding: Vec<usize>,
}

impl Homomorphism {
    pub fn quotient_map(source: &Group, ambient: &Group, images: &[Element]) -> Result<Self> {
        if source.kind() != super::GroupKind::Free {
            return Err(Error::WrongGroupKind {
                expected: "a free group",
                found: source.kind().to_string(),
            });
        }
        let f = ambient.as_finite().ok_or(Error::WrongGroupKind {
            expected: "a finite group",
            found: ambient.kind().to_string(),
        })?;
        if images.len() != source.rank() {
            return Err(Error::GroupDefinition(format!(
                "{} images for {} generators",
                images.len(),
                source.rank()
            )));
        }
        let idx = images.iter().map(|e| ambient.finite_index(e)).collect::<Result<Vec<_>>>()?;
        let (sub, embedding) = f.subgroup(&idx)?;
        let target = Group::from_finite(source.alphabet().clone(), sub)?;
        Ok(Self { source: source.clone(), target, ambient: ambient.clone(), embedding })
    }

    pub fn source(&self) -> &Group {
        &self.source
    }

    /// The image, generated by the images of the source generators.
    pub fn target(&self) -> &Group {
        &self.target
    }

    /// Letter-for-letter image of a source word.
    pub fn push_word(&self, w: &Word) -> Result<Word> {
        crate::word::check_alphabet(self.source.alphabet(), w.alphabet())?;
        Word::from_letters(self.target.alphabet(), w.letters().to_vec())
    }

    pub fn push_element(&self, a: &Element) -> Result<Element> {
        self.source.check(a)?;
        let w = self.source.represent(a)?;
        self.target.evaluate(&self.push_word(&w)?)
    }

    /// The element of the ambient finite group that a target element is.
    pub fn to_ambient(&self, a: &Element) -> Result<Element> {
        Ok(Element::Finite(self.embedding[self.target.finite_index(a)?]))
    }

    pub fn ambient(&self) -> &Group {
        &self.ambient
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn f2() -> Group {
        Group::free(&["y1", "y2"]).unwrap()
    }

    fn gens(g: &Group) -> Vec<Element> {
        g.alphabet().letters().step_by(2).map(|l| g.letter_value(l).unwrap()).collect()
    }

    #[test]
    fn identity_and_palindromes_push_forward() {
        let s3 = presets::s3();
        let h = Homomorphism::quotient_map(&f2(), &s3, &gens(&s3)).unwrap();
        let e = Word::empty(f2().alphabet());
        assert!(h.target().is_identity(&h.target().evaluate(&h.push_word(&e).unwrap()).unwrap()));
        let p = Word::parse(f2().alphabet(), "y1 y2 y1").unwrap();
        let q = h.push_word(&p).unwrap();
        assert!(q.is_palindrome().is_some());
        let amb = h.to_ambient(&h.target().evaluate(&q).unwrap()).unwrap();
        let sts = s3.evaluate(&Word::parse(s3.alphabet(), "s t s").unwrap()).unwrap();
        assert_eq!(amb, sts);
    }

    #[test]
    fn commutators_die_in_abelian_quotients() {
        let v4 = presets::klein_four();
        let h = Homomorphism::quotient_map(&f2(), &v4, &gens(&v4)).unwrap();
        let c = Word::parse(f2().alphabet(), "[y1, y2]").unwrap();
        let img = h.target().evaluate(&h.push_word(&c).unwrap()).unwrap();
        assert!(h.target().is_identity(&img));
        let e = f2().evaluate(&c).unwrap();
        assert!(h.target().is_identity(&h.push_element(&e).unwrap()));
    }

    #[test]
    fn image_may_be_a_proper_subgroup() {
        let s3 = presets::s3();
        let t = s3.letter_value(crate::word::Letter::pos(1)).unwrap();
        let h = Homomorphism::quotient_map(&f2(), &s3, &[t.clone(), t]).unwrap();
        assert_eq!(h.target().order(), Some(3));
    }
}
