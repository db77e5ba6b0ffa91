//! Machine-readable run reports and their re-verification.

use serde::{Deserialize, Serialize};

use crate::decompose::{Bound, ExtraGeneratorView};
use crate::error::{Error, Result, VerificationFailure};
use crate::groups::spec::GroupSpec;
use crate::groups::Group;
use crate::oracle::{verify_factorization, FactorizationCertificate};
use crate::word::Word;
use crate::wreath::WreathGroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub factors: usize,
    pub letters: usize,
}

/// Everything needed to rebuild the group and check the factors again.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub mode: String,
    pub top: GroupSpec,
    pub base: GroupSpec,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extend_gens: Vec<String>,
    pub word: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word2: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exps: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extra_generator: Option<ExtraGeneratorView>,
    pub target: String,
    /// A word over the working alphabet that evaluates to the target.
    pub target_word: String,
    pub factors: Vec<String>,
    pub counts: Counts,
    pub bound: Option<Bound>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem_bound: Option<Bound>,
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<FactorizationCertificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<VerificationFailure>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

/// Applies `name=word` generator definitions to a finite group in order.
pub fn extend_generators(group: &Group, defs: &[String]) -> Result<Group> {
    let mut g = group.clone();
    for def in defs {
        let (name, word) = def
            .split_once('=')
            .ok_or_else(|| Error::GroupDefinition(format!("`{def}` is not of the form name=word")))?;
        let w = Word::parse(g.alphabet(), word)?;
        let value = g.evaluate(&w)?;
        g = g.with_extra_generator(name.trim(), &value)?;
    }
    Ok(g)
}

impl RunReport {
    /// The wreath product the factors live in.
    pub fn working_wreath(&self) -> Result<WreathGroup> {
        let mut top = extend_generators(&self.top.build()?, &self.extend_gens)?;
        if let Some(extra) = &self.extra_generator {
            top = extend_generators(&top, &[format!("{}={}", extra.name, extra.word)])?;
        }
        WreathGroup::new(&self.base.build()?, &top)
    }

    /// Re-checks the factors against the target word and the bound.
    pub fn reverify(&self) -> Result<std::result::Result<FactorizationCertificate, VerificationFailure>> {
        let wreath = self.working_wreath()?;
        let alphabet = wreath.alphabet();
        let target = wreath.evaluate(&Word::parse(alphabet, &self.target_word)?)?;
        let factors = self.factors.iter().map(|f| Word::parse(alphabet, f)).collect::<Result<Vec<_>>>()?;
        if let Some(b) = &self.bound {
            if factors.len() > b.value {
                return Err(Error::BoundExceeded { count: factors.len(), bound: b.value });
            }
        }
        Ok(verify_factorization(&wreath, &target, &factors))
    }
}
