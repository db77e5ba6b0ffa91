//! Relations whose reverse is not a relation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{Element, Group, GroupKind};
use crate::oracle::PairAutomaton;
use crate::word::{Alphabet, Letter, Word};

pub const DEFAULT_RELATION_BUDGET: usize = 64;

/// A generator appended to a top group, `name = word`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtraGenerator {
    pub name: String,
    /// The new generator as a word over the original generators.
    pub word: Word,
    pub value: Element,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtraGeneratorView {
    pub name: String,
    pub word: String,
}

impl ExtraGenerator {
    pub fn view(&self) -> ExtraGeneratorView {
        ExtraGeneratorView { name: self.name.clone(), word: self.word.to_string() }
    }

    /// `group` with this generator appended.
    pub fn extend(&self, group: &Group) -> Result<Group> {
        group.with_extra_generator(&self.name, &self.value)
    }
}

/// `r` with `eval(r) = 1` and `eval(reverse(r)) != 1`, over `group`.
#[derive(Debug, Clone)]
pub struct RelationWitness {
    pub relation: Word,
    pub extra_generator: Option<ExtraGenerator>,
    pub reverse_value: Element,
    /// The group `r` lives in: the input group, or it with the extra generator.
    pub group: Group,
}

impl RelationWitness {
    /// Checks a user-supplied relation.
    pub fn from_word(group: &Group, relation: Word) -> Result<Self> {
        let w = Self {
            reverse_value: group.evaluate(&relation.reverse())?,
            relation,
            extra_generator: None,
            group: group.clone(),
        };
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        if !g.is_identity(&g.evaluate(&self.relation)?) {
            return Err(Error::InvalidWitness(format!("{} is not a relation", self.relation)));
        }
        let rev = g.evaluate(&self.relation.reverse())?;
        if g.is_identity(&rev) {
            return Err(Error::InvalidWitness(format!(
                "the reverse of {} is also a relation",
                self.relation
            )));
        }
        if rev != self.reverse_value {
            return Err(Error::InvalidWitness("stored reverse value is wrong".into()));
        }
        Ok(())
    }

    /// The group the witness works in, given the group it was found for.
    pub(crate) fn working_top(&self, top: &Group) -> Result<Group> {
        let expected = match &self.extra_generator {
            Some(extra) => extra.extend(top)?,
            None => top.clone(),
        };
        if !expected.same_as(&self.group) {
            return Err(Error::InvalidWitness("relation belongs to a different group".into()));
        }
        Ok(self.group.clone())
    }
}

/// `a^-1 b^n a b^-m` in `BS(n, m)`. Its reverse evaluates to the affine map
/// `x -> x + n^2/m - m`, so it is a witness exactly when `|n| != |m|`.
pub fn baumslag_solitar_witness(group: &Group) -> Result<RelationWitness> {
    let (n, m) = group.baumslag_solitar_params().ok_or(Error::WrongGroupKind {
        expected: "a Baumslag-Solitar group",
        found: group.kind().to_string(),
    })?;
    let a = group.alphabet();
    let relation = Word::product(
        a,
        [
            &Word::power(a, 0, -1)?,
            &Word::power(a, 1, n)?,
            &Word::power(a, 0, 1)?,
            &Word::power(a, 1, -m)?,
        ],
    )?;
    let w = RelationWitness {
        reverse_value: group.evaluate(&relation.reverse())?,
        relation,
        extra_generator: None,
        group: group.clone(),
    };
    w.validate()?;
    Ok(w)
}

fn fresh_name(taken: &[&Alphabet]) -> String {
    std::iter::once("c".to_owned())
        .chain((1..).map(|i| format!("c{i}")))
        .find(|n| taken.iter().all(|a| a.index_of(n).is_none()))
        .expect("unbounded name supply")
}

/// Searches a finite group for a relation whose reverse is not a relation,
/// adding `c = x·y` for the first non-commuting generator pair when the
/// generating set itself has none. Baumslag-Solitar groups get their fixed
/// witness.
pub fn find_reversal_asymmetric_relation(group: &Group, budget: usize) -> Result<RelationWitness> {
    find_relation_avoiding(group, budget, &[])
}

/// As [`find_reversal_asymmetric_relation`], choosing a name for the extra
/// generator that appears in none of `reserved`.
pub fn find_relation_avoiding(group: &Group, budget: usize, reserved: &[&Alphabet]) -> Result<RelationWitness> {
    if group.kind() == GroupKind::BaumslagSolitar {
        return baumslag_solitar_witness(group);
    }
    if group.kind() != GroupKind::Finite {
        return Err(Error::WrongGroupKind {
            expected: "a finite group or a Baumslag-Solitar group",
            found: group.kind().to_string(),
        });
    }
    if group.is_abelian() {
        return Err(Error::AbelianGroup);
    }
    let from_automaton = |g: &Group| -> Result<Option<(Word, Element)>> {
        let auto = PairAutomaton::build(g)?;
        match auto.asymmetric_relation() {
            Some((r, _)) if r.len() > budget => Err(Error::BudgetExhausted { budget }),
            Some((r, gs)) => Ok(Some((r, Element::Finite(gs)))),
            None => Ok(None),
        }
    };
    if let Some((relation, reverse_value)) = from_automaton(group)? {
        return Ok(RelationWitness { relation, extra_generator: None, reverse_value, group: group.clone() });
    }
    let k = group.rank();
    let (x, y) = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .find(|&(i, j)| {
            let a = group.letter_value(Letter::pos(i)).unwrap();
            let b = group.letter_value(Letter::pos(j)).unwrap();
            group.multiply(&a, &b).unwrap() != group.multiply(&b, &a).unwrap()
        })
        .ok_or(Error::AbelianGroup)?;
    let word = Word::from_letters(group.alphabet(), vec![Letter::pos(x), Letter::pos(y)])?;
    let mut taken = reserved.to_vec();
    taken.push(group.alphabet());
    let extra = ExtraGenerator { name: fresh_name(&taken), value: group.evaluate(&word)?, word };
    let extended = extra.extend(group)?;
    match from_automaton(&extended)? {
        Some((relation, reverse_value)) => Ok(RelationWitness {
            relation,
            extra_generator: Some(extra),
            reverse_value,
            group: extended,
        }),
        None => Err(Error::InvalidWitness(format!(
            "no reversal-asymmetric relation even with {} = {}",
            extra.name, extra.word
        ))),
    }
}
