//! Constructive palindrome factorizations.
//!
//! Every construction returns a [`PalindromeFactorization`] only after the
//! factor list has passed [`verify_factorization`]: each factor is checked
//! letter by letter for being a palindrome and the product is evaluated
//! against the target. Factors are never freely reduced.

mod abelian_top;
mod derived;
mod finite_top;
mod relation;
mod shifted;

use serde::{Deserialize, Serialize};

pub use abelian_top::{
    decompose_abelian_element, decompose_commutator_pair, decompose_commutator_abelian_top,
    decompose_metabelian, ExternalMetabelian, FiniteMetabelian, MetabelianDecomposer,
};
pub use derived::decompose_derived_wreath;
pub use finite_top::{decompose_finite_top_abelianized, decompose_full_finite_top, FiniteTopBounds};
pub use relation::{
    baumslag_solitar_witness, find_reversal_asymmetric_relation, find_relation_avoiding,
    ExtraGenerator, ExtraGeneratorView, RelationWitness, DEFAULT_RELATION_BUDGET,
};
pub use shifted::{decompose_shifted_commutators, ShiftParams, MAX_SHIFT_RETRIES};

use crate::error::{Error, Result};
use crate::groups::{Element, Evaluator, Homomorphism};
use crate::oracle::{verify_factorization, FactorizationCertificate};
use crate::word::{PalindromeCertificate, Word};

/// An upper bound on the factor count and the rule it comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub value: usize,
    pub rule: String,
}

impl Bound {
    pub fn new(value: usize, rule: impl Into<String>) -> Self {
        Self { value, rule: rule.into() }
    }
}

/// A verified list of palindromes whose product is `target`.
#[derive(Debug, Clone)]
pub struct PalindromeFactorization<V> {
    pub factors: Vec<Word>,
    pub certificates: Vec<PalindromeCertificate>,
    pub target: V,
    /// Enforced: construction fails with [`Error::BoundExceeded`] otherwise.
    pub bound: Option<Bound>,
    /// A published bound recorded for comparison; not enforced.
    pub theorem_bound: Option<Bound>,
    pub certificate: FactorizationCertificate,
    /// Set when the factors use a generator added to the top group.
    pub extra_generator: Option<ExtraGenerator>,
}

impl<V> PalindromeFactorization<V> {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// All factors concatenated.
    pub fn word(&self) -> Option<Word> {
        let first = self.factors.first()?;
        Word::product(first.alphabet(), &self.factors).ok()
    }
}

/// Verifies `factors` against `target` and checks the bound.
pub fn certify<E: Evaluator>(
    evaluator: &E,
    target: E::Value,
    factors: Vec<Word>,
    bound: Option<Bound>,
) -> Result<PalindromeFactorization<E::Value>> {
    let certificate = verify_factorization(evaluator, &target, &factors)?;
    if let Some(b) = &bound {
        if factors.len() > b.value {
            return Err(Error::BoundExceeded { count: factors.len(), bound: b.value });
        }
    }
    let certificates = factors
        .iter()
        .map(|w| w.is_palindrome().expect("verified palindrome"))
        .collect();
    Ok(PalindromeFactorization {
        factors,
        certificates,
        target,
        bound,
        theorem_bound: None,
        certificate,
        extra_generator: None,
    })
}

/// Pushes a factorization over the source of `hom` to its image. Words map
/// letter for letter, so palindromes stay palindromes and the count is kept.
pub fn push_factorization(
    hom: &Homomorphism,
    fact: &PalindromeFactorization<Element>,
) -> Result<PalindromeFactorization<Element>> {
    let factors = fact.factors.iter().map(|w| hom.push_word(w)).collect::<Result<Vec<_>>>()?;
    let target = hom.push_element(&fact.target)?;
    certify(hom.target(), target, factors, fact.bound.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::word::Letter;

    #[test]
    fn certify_checks_bounds() {
        let g = presets::s3();
        let s = Word::parse(g.alphabet(), "s").unwrap();
        let target = g.letter_value(Letter::pos(0)).unwrap();
        let ok = certify(&g, target.clone(), vec![s.clone()], Some(Bound::new(1, "1"))).unwrap();
        assert_eq!(ok.len(), 1);
        assert_eq!(ok.certificates[0].center, Some(Letter::pos(0)));
        let err = certify(&g, g.identity(), vec![s.clone(), s], Some(Bound::new(1, "1")));
        assert_eq!(err.unwrap_err(), Error::BoundExceeded { count: 2, bound: 1 });
    }

    #[test]
    fn push_through_quotient() {
        let f2 = presets::free(2);
        let v4 = presets::klein_four();
        let images = [Letter::pos(0), Letter::pos(1)].map(|l| v4.letter_value(l).unwrap());
        let hom = Homomorphism::quotient_map(&f2, &v4, &images).unwrap();
        let w = Word::parse(f2.alphabet(), "y1 y2 y1").unwrap();
        let fact = certify(&f2, f2.evaluate(&w).unwrap(), vec![w], None).unwrap();
        let pushed = push_factorization(&hom, &fact).unwrap();
        assert_eq!(pushed.len(), 1);
    }
}
