use crate::blocker::blocker;
use crate::clutter::Clutter;
use crate::edge::{EdgeSet, VertexId};
use crate::error::{Error, Result};

/// DIMACS literal: `v` for `x_v`, `-v` for its negation.
pub type Literal = i32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    pub fn new(num_vars: u32, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        let mut out = Vec::with_capacity(clauses.len());
        for (i, mut clause) in clauses.into_iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::InvalidInput(format!("clause {i} is empty")));
            }
            if let Some(&lit) = clause
                .iter()
                .find(|&&l| l == 0 || l.unsigned_abs() > num_vars)
            {
                return Err(Error::InvalidInput(format!(
                    "literal {lit} in clause {i} is out of range for {num_vars} variables"
                )));
            }
            clause.sort_unstable_by_key(|l| (l.unsigned_abs(), *l < 0));
            clause.dedup();
            out.push(clause);
        }
        Ok(CnfFormula {
            num_vars,
            clauses: out,
        })
    }

    /// Reads DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>`
    /// header, then clauses terminated by `0` (possibly spanning lines).
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(u32, usize)> = None;
        let mut clauses = Vec::new();
        let mut current: Vec<Literal> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('%') {
                break;
            }
            if line.starts_with('p') {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate problem line"));
                }
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 4 || parts[1] != "cnf" {
                    return Err(Error::parse(line_no, "expected `p cnf <vars> <clauses>`"));
                }
                let vars = parts[2]
                    .parse()
                    .map_err(|_| Error::parse(line_no, "invalid variable count"))?;
                let count = parts[3]
                    .parse()
                    .map_err(|_| Error::parse(line_no, "invalid clause count"))?;
                header = Some((vars, count));
                continue;
            }
            let Some((vars, _)) = header else {
                return Err(Error::parse(line_no, "clause before `p cnf` header"));
            };
            for tok in line.split_whitespace() {
                let lit: Literal = tok
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("invalid literal `{tok}`")))?;
                if lit == 0 {
                    if current.is_empty() {
                        return Err(Error::parse(line_no, "empty clause"));
                    }
                    clauses.push(std::mem::take(&mut current));
                } else if lit.unsigned_abs() > vars {
                    return Err(Error::parse(
                        line_no,
                        format!("literal {lit} exceeds declared {vars} variables"),
                    ));
                } else {
                    current.push(lit);
                }
            }
        }
        let (vars, count) = header.ok_or_else(|| Error::parse(1, "missing `p cnf` header"))?;
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != count {
            log::warn!("header declares {count} clauses, found {}", clauses.len());
        }
        CnfFormula::new(vars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                out.push_str(&l.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, a: &Assignment) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&l| a.value(l.unsigned_abs()) == (l > 0)))
    }
}

/// Total truth assignment over variables `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    /// Value of variable `var` (1-based).
    pub fn value(&self, var: u32) -> bool {
        self.values[var as usize - 1]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    /// DIMACS-style literal list, `v` when true and `-v` when false.
    pub fn literals(&self) -> Vec<Literal> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                if b {
                    i as Literal + 1
                } else {
                    -(i as Literal + 1)
                }
            })
            .collect()
    }
}

/// `x_v` maps to vertex `2v`, `¬x_v` to `2v + 1`.
pub fn literal_vertex(lit: Literal) -> VertexId {
    let v = lit.unsigned_abs() * 2;
    if lit > 0 {
        v
    } else {
        v + 1
    }
}

/// One edge per clause over its literal vertices. Subsumed clauses drop out.
pub fn cnf_to_clutter(f: &CnfFormula) -> Clutter {
    Clutter::minimalize(
        f.clauses
            .iter()
            .map(|c| c.iter().map(|&l| literal_vertex(l)).collect::<EdgeSet>()),
    )
}

/// Satisfiable iff some minimal transversal avoids every complementary pair.
/// Such a set fixes the variables it touches; the rest are set false.
pub fn solve_sat(f: &CnfFormula) -> Result<Option<Assignment>> {
    let b = blocker(&cnf_to_clutter(f))?;
    let consistent = b
        .iter()
        .find(|t| t.iter().all(|v| !(v % 2 == 0 && t.contains(v + 1))));
    let Some(t) = consistent else {
        return Ok(None);
    };
    let values = (1..=f.num_vars).map(|var| t.contains(2 * var)).collect();
    let assignment = Assignment::new(values);
    if !f.is_satisfied_by(&assignment) {
        return Err(Error::precondition(
            "blocker scan produced a non-satisfying assignment",
        ));
    }
    Ok(Some(assignment))
}
