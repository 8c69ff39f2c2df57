use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::order::{TotalOrder, MAX_ORDER_ENUMERATION_DEGREE};
use crate::word::{check_degree, Letter, Word};

use super::LexCode;

/// One refinement: split the cell of `word` by `a = min Γ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RefinementStep {
    pub word: Word,
    pub gamma: Vec<Letter>,
}

/// A sequence of refinement steps.
///
/// Text form: one step per line, `x : a1,a2,...`, with `-` for the empty
/// word. Blank lines and `#` comments are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RefinementScript {
    pub steps: Vec<RefinementStep>,
}

impl RefinementScript {
    pub fn new(steps: Vec<RefinementStep>) -> Self {
        RefinementScript { steps }
    }

    pub fn parse(text: &str, degree: u8) -> Result<Self> {
        let mut steps = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let syntax = |message: String| Error::ScriptSyntax { line, message };
            let (x, gamma) = content
                .split_once(':')
                .ok_or_else(|| syntax("expected `x : a1,a2,...`".into()))?;
            let word = Word::parse(x.trim(), Some(degree)).map_err(|e| syntax(e.to_string()))?;
            let gamma = gamma.trim();
            if gamma.is_empty() {
                return Err(syntax("Γ must not be empty".into()));
            }
            let gamma = gamma
                .split(',')
                .map(|item| {
                    let item = item.trim();
                    let a: Letter = item
                        .parse()
                        .map_err(|_| syntax(format!("`{item}` is not a letter")))?;
                    if a == 0 || a > degree {
                        return Err(syntax(Error::letter(a, degree).to_string()));
                    }
                    Ok(a)
                })
                .collect::<Result<Vec<_>>>()?;
            steps.push(RefinementStep { word, gamma });
        }
        Ok(RefinementScript { steps })
    }
}

impl fmt::Display for RefinementScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            let gamma: Vec<String> = step.gamma.iter().map(ToString::to_string).collect();
            writeln!(f, "{} : {}", step.word, gamma.join(","))?;
        }
        Ok(())
    }
}

/// The evolving partition `(C_x)` indexed by the current words `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementState {
    degree: u8,
    cells: BTreeMap<Word, Vec<TotalOrder>>,
    applied: usize,
}

impl RefinementState {
    /// `X = {ε}` with `C_ε` holding every order.
    pub fn new(degree: u8) -> Result<Self> {
        check_degree(degree as usize)?;
        if degree > MAX_ORDER_ENUMERATION_DEGREE {
            return Err(Error::Capacity {
                what: "lex-code refinement",
                degree,
                max: MAX_ORDER_ENUMERATION_DEGREE,
            });
        }
        let mut cells = BTreeMap::new();
        cells.insert(Word::empty(degree)?, TotalOrder::all(degree)?);
        Ok(RefinementState {
            degree,
            cells,
            applied: 0,
        })
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn cells(&self) -> &BTreeMap<Word, Vec<TotalOrder>> {
        &self.cells
    }

    /// The children `xa` and their cells produced by splitting `C_x` with
    /// `a = min Γ`, without changing the state.
    pub fn split(&self, x: &Word, gamma: &[Letter]) -> Result<Vec<(Word, Vec<TotalOrder>)>> {
        let step = self.applied + 1;
        let fail = |message: String| Error::Script { step, message };
        let cell = self
            .cells
            .get(x)
            .ok_or_else(|| fail(format!("{x} is not in the current set")))?;
        if cell.len() < 2 {
            return Err(fail(format!("the cell of {x} holds a single order")));
        }
        if gamma.is_empty() {
            return Err(fail("Γ is empty".into()));
        }
        if let Some(&a) = gamma.iter().find(|&&a| a == 0 || a > self.degree) {
            return Err(fail(Error::letter(a, self.degree).to_string()));
        }
        let mut children: BTreeMap<Letter, Vec<TotalOrder>> = BTreeMap::new();
        for order in cell {
            let a = order
                .ranking()
                .iter()
                .copied()
                .find(|a| gamma.contains(a))
                .expect("Γ is a non-empty subset of the alphabet");
            children.entry(a).or_default().push(order.clone());
        }
        Ok(children
            .into_iter()
            .map(|(a, orders)| {
                let mut letters = x.letters().to_vec();
                letters.push(a);
                (Word::from_raw(letters, self.degree), orders)
            })
            .collect())
    }

    /// Replaces `x` by its children. Step numbers in errors count from 1.
    pub fn apply(&mut self, step: &RefinementStep) -> Result<()> {
        let children = self.split(&step.word, &step.gamma)?;
        self.cells.remove(&step.word);
        for (child, orders) in children {
            if self.cells.insert(child.clone(), orders).is_some() {
                return Err(Error::Script {
                    step: self.applied + 1,
                    message: format!("{child} is already in the set"),
                });
            }
        }
        self.applied += 1;
        Ok(())
    }

    /// Whether every cell is a single order.
    pub fn is_complete(&self) -> bool {
        self.cells.values().all(|c| c.len() == 1)
    }

    pub fn into_lex_code(self) -> Result<LexCode> {
        if let Some((x, cell)) = self.cells.iter().find(|(_, c)| c.len() != 1) {
            return Err(Error::Script {
                step: self.applied,
                message: format!(
                    "the script ends with {} orders left in the cell of {x}",
                    cell.len()
                ),
            });
        }
        Ok(LexCode::from_sorted(
            self.cells.into_keys().collect(),
            self.degree,
        ))
    }
}

/// Runs `script` from `X = {ε}` and returns the resulting lex-code.
pub fn refine_lex_code(degree: u8, script: &RefinementScript) -> Result<LexCode> {
    let mut state = RefinementState::new(degree)?;
    for step in &script.steps {
        state.apply(step)?;
    }
    state.into_lex_code()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexcode::validate_lex_code;

    const FIRST: &str = "\
# the non-Hamiltonian example
- : 1,2
1 : 1,3
2 : 2,3
11 : 2,3
22 : 1,3
";

    const SECOND: &str = "- : 1,2,3\n1 : 2,3\n2 : 1,3\n3 : 1,2\n";

    fn strings(code: &LexCode) -> Vec<String> {
        code.words().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn example_scripts() {
        let script = RefinementScript::parse(FIRST, 3).unwrap();
        assert_eq!(script.steps.len(), 5);
        let code = refine_lex_code(3, &script).unwrap();
        assert_eq!(strings(&code), ["112", "113", "13", "221", "223", "23"]);

        let code = refine_lex_code(3, &RefinementScript::parse(SECOND, 3).unwrap()).unwrap();
        assert_eq!(strings(&code), ["12", "13", "21", "23", "31", "32"]);
    }

    #[test]
    fn intermediate_cells() {
        let script = RefinementScript::parse(FIRST, 3).unwrap();
        let mut state = RefinementState::new(3).unwrap();
        for step in &script.steps[..2] {
            state.apply(step).unwrap();
        }
        let cell = |w: &str| -> Vec<String> {
            state.cells()[&Word::parse(w, Some(3)).unwrap()]
                .iter()
                .map(|o| o.ranking().iter().map(ToString::to_string).collect())
                .collect()
        };
        assert_eq!(cell("11"), ["123", "132"]);
        assert_eq!(cell("13"), ["312"]);
        assert!(!state.is_complete());
    }

    #[test]
    fn degree_one() {
        let code = refine_lex_code(1, &RefinementScript::default()).unwrap();
        assert_eq!(strings(&code), ["-"]);
    }

    #[test]
    fn script_errors_name_the_step() {
        let step = |text: &str| RefinementScript::parse(text, 3).unwrap().steps.remove(0);
        let absent = RefinementScript::new(vec![step("- : 1,2,3"), step("11 : 1,2")]);
        assert!(matches!(refine_lex_code(3, &absent), Err(Error::Script { step: 2, .. })));

        let singleton = RefinementScript::new(vec![step("- : 1,2"), step("1 : 1,3"), step("13 : 1,2")]);
        assert!(matches!(refine_lex_code(3, &singleton), Err(Error::Script { step: 3, .. })));

        let empty = RefinementScript::new(vec![RefinementStep {
            word: Word::empty(3).unwrap(),
            gamma: Vec::new(),
        }]);
        assert!(matches!(refine_lex_code(3, &empty), Err(Error::Script { step: 1, .. })));

        let out_of_range = RefinementScript::new(vec![RefinementStep {
            word: Word::empty(3).unwrap(),
            gamma: vec![4],
        }]);
        assert!(matches!(refine_lex_code(3, &out_of_range), Err(Error::Script { step: 1, .. })));

        let incomplete = RefinementScript::new(vec![step("- : 1,2,3")]);
        assert!(matches!(refine_lex_code(3, &incomplete), Err(Error::Script { .. })));
    }

    #[test]
    fn parse_errors_name_the_line() {
        let bad = "- : 1,2\n\n1 1,3\n";
        assert!(matches!(
            RefinementScript::parse(bad, 3),
            Err(Error::ScriptSyntax { line: 3, .. })
        ));
        assert!(matches!(
            RefinementScript::parse("- : 1,x", 3),
            Err(Error::ScriptSyntax { line: 1, .. })
        ));
        assert!(matches!(
            RefinementScript::parse("- : 4", 3),
            Err(Error::ScriptSyntax { line: 1, .. })
        ));
        assert!(matches!(
            RefinementScript::parse("17 : 1", 3),
            Err(Error::ScriptSyntax { line: 1, .. })
        ));
        assert!(matches!(
            RefinementScript::parse("- :", 3),
            Err(Error::ScriptSyntax { line: 1, .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        let script = RefinementScript::parse(FIRST, 3).unwrap();
        let text = script.to_string();
        assert_eq!(text, "- : 1,2\n1 : 1,3\n2 : 2,3\n11 : 2,3\n22 : 1,3\n");
        assert_eq!(RefinementScript::parse(&text, 3).unwrap(), script);
    }

    #[test]
    fn every_terminal_state_is_a_lex_code() {
        // exhaustive over Γ choices at degree 3, always refining the least cell
        fn walk(state: RefinementState, depth: usize, seen: &mut usize) {
            if state.is_complete() {
                let code = state.into_lex_code().unwrap();
                assert!(validate_lex_code(code.words(), 3).unwrap().valid, "{code}");
                *seen += 1;
                return;
            }
            if depth == 0 {
                return;
            }
            let x = state
                .cells()
                .iter()
                .find(|(_, c)| c.len() > 1)
                .map(|(x, _)| x.clone())
                .unwrap();
            for mask in 1u8..8 {
                let gamma: Vec<Letter> = (1..=3).filter(|a| mask & (1 << (a - 1)) != 0).collect();
                let mut next = state.clone();
                next.apply(&RefinementStep { word: x.clone(), gamma }).unwrap();
                walk(next, depth - 1, seen);
            }
        }
        let mut seen = 0;
        walk(RefinementState::new(3).unwrap(), 5, &mut seen);
        assert!(seen > 0);
    }
}
