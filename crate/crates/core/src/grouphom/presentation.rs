use std::sync::Arc;

use super::table::FiniteGroupTable;
use crate::error::{input, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

pub type Word = Vec<Letter>;

/// A finite presentation `<S | relators>` together with a surjection onto an explicit
/// finite group, given by where each generator goes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpGroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    target: Arc<FiniteGroupTable>,
    assignment: Vec<usize>,
}

impl FpGroupPresentation {
    /// Checks that every relator maps to the identity and the images generate the target.
    pub fn new(
        generators: Vec<String>,
        relators: Vec<Word>,
        target: Arc<FiniteGroupTable>,
        assignment: Vec<usize>,
    ) -> Result<Self> {
        if assignment.len() != generators.len() {
            return input(format!(
                "{} generators but {} assigned elements",
                generators.len(),
                assignment.len()
            ));
        }
        if assignment.iter().any(|&x| x >= target.order()) {
            return input("generator assigned to an element outside the group");
        }
        if relators
            .iter()
            .flatten()
            .any(|l| l.generator >= generators.len())
        {
            return input("relator uses an unknown generator");
        }
        let pres = FpGroupPresentation {
            generators,
            relators,
            target,
            assignment,
        };
        for (k, r) in pres.relators.iter().enumerate() {
            if pres.evaluate(r) != 0 {
                return input(format!("relator {k} does not evaluate to the identity"));
            }
        }
        if !pres
            .target
            .generated_by(&pres.assignment)
            .iter()
            .all(|&b| b)
        {
            return input("assigned elements do not generate the group");
        }
        Ok(pres)
    }

    /// Parses relators written over single-letter generator names, uppercase meaning
    /// inverse (`"ABab"` is `a⁻¹b⁻¹ab`).
    pub fn from_strings(
        generators: &[&str],
        relators: &[&str],
        target: Arc<FiniteGroupTable>,
        assignment: Vec<usize>,
    ) -> Result<Self> {
        let gens: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let words = relators
            .iter()
            .map(|r| parse_word(r, &gens))
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens, words, target, assignment)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn target(&self) -> &Arc<FiniteGroupTable> {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Image of a letter in the target group.
    pub fn letter_image(&self, l: Letter) -> usize {
        let g = self.assignment[l.generator];
        if l.inverse {
            self.target.inv(g)
        } else {
            g
        }
    }

    pub fn evaluate(&self, w: &[Letter]) -> usize {
        w.iter()
            .fold(0, |acc, &l| self.target.mul(acc, self.letter_image(l)))
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        w.iter()
            .map(|l| {
                let name = &self.generators[l.generator];
                if l.inverse {
                    name.to_uppercase()
                } else {
                    name.clone()
                }
            })
            .collect()
    }
}

pub fn parse_word(s: &str, generators: &[String]) -> Result<Word> {
    s.chars()
        .map(|c| {
            let lower = c.to_lowercase().to_string();
            let generator = generators
                .iter()
                .position(|g| *g == lower)
                .ok_or_else(|| crate::Error::Input(format!("unknown generator '{c}' in '{s}'")))?;
            Ok(Letter {
                generator,
                inverse: c.is_uppercase(),
            })
        })
        .collect()
}
