use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blocker::blocker;
use crate::clutter::Clutter;
use crate::edge::{EdgeSet, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSet {
    pub name: String,
    /// Elements of the universe `1..=n`.
    pub elements: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    universe_size: u32,
    sets: Vec<NamedSet>,
    weights: Option<Vec<BigRational>>,
}

impl SetCoverInstance {
    pub fn new(
        universe_size: u32,
        sets: Vec<NamedSet>,
        weights: Option<Vec<BigRational>>,
    ) -> Result<Self> {
        for s in &sets {
            if let Some(&e) = s.elements.iter().find(|&&e| e == 0 || e > universe_size) {
                return Err(Error::InvalidInput(format!(
                    "set {} has element {e} outside 1..={universe_size}",
                    s.name
                )));
            }
        }
        if let Some(w) = &weights {
            if w.len() != sets.len() {
                return Err(Error::InvalidInput(format!(
                    "{} weights for {} sets",
                    w.len(),
                    sets.len()
                )));
            }
            if let Some(bad) = w.iter().find(|x| x.is_negative()) {
                return Err(Error::Domain(format!("negative weight {bad}")));
            }
        }
        Ok(SetCoverInstance {
            universe_size,
            sets,
            weights,
        })
    }

    /// Parses the text format: a line `n m`, then `m` lines
    /// `<weight> <size> <e1> ... <esize>` with 1-based elements. Blank lines
    /// and lines starting with `#` are ignored. Sets are named `S0`, `S1`, ...
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
        let head: Vec<&str> = header.split_whitespace().collect();
        if head.len() != 2 {
            return Err(Error::parse(hline, "header must be `n m`"));
        }
        let n: u32 = parse_int(hline, head[0])?;
        let m: usize = parse_int(hline, head[1])?;

        let mut sets = Vec::with_capacity(m);
        let mut weights = Vec::with_capacity(m);
        for idx in 0..m {
            let (line, content) = lines
                .next()
                .ok_or_else(|| Error::parse(hline, format!("expected {m} sets, found {idx}")))?;
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if tokens.len() < 2 {
                return Err(Error::parse(
                    line,
                    "expected `<weight> <size> <elements...>`",
                ));
            }
            let weight = parse_rational(tokens[0]).map_err(|e| Error::parse(line, e))?;
            let size: usize = parse_int(line, tokens[1])?;
            if tokens.len() != size + 2 {
                return Err(Error::parse(
                    line,
                    format!(
                        "declared size {size} but found {} elements",
                        tokens.len() - 2
                    ),
                ));
            }
            let elements = tokens[2..]
                .iter()
                .map(|t| parse_int(line, t))
                .collect::<Result<Vec<u32>>>()?;
            sets.push(NamedSet {
                name: format!("S{idx}"),
                elements,
            });
            weights.push(weight);
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::parse(line, "unexpected content after the last set"));
        }
        SetCoverInstance::new(n, sets, Some(weights))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.universe_size, self.sets.len());
        for (i, s) in self.sets.iter().enumerate() {
            let w = self
                .weights
                .as_ref()
                .map_or_else(|| "1".to_string(), |w| w[i].to_string());
            let _ = write!(out, "{w} {}", s.elements.len());
            for e in &s.elements {
                let _ = write!(out, " {e}");
            }
            out.push('\n');
        }
        out
    }

    pub fn universe_size(&self) -> u32 {
        self.universe_size
    }

    pub fn sets(&self) -> &[NamedSet] {
        &self.sets
    }

    pub fn weights(&self) -> Option<&[BigRational]> {
        self.weights.as_deref()
    }

    /// Whether the chosen set indices cover the whole universe.
    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        (1..=self.universe_size).all(|u| chosen.iter().any(|&i| self.sets[i].elements.contains(&u)))
    }
}

fn parse_int<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid integer `{tok}`")))
}

/// Parses `p`, `p/q` or a decimal such as `0.25` into an exact rational.
pub fn parse_rational(tok: &str) -> std::result::Result<BigRational, String> {
    let bad = || format!("invalid rational `{tok}`");
    if let Some((int, frac)) = tok.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int_digits}{frac}");
        let numer: BigInt = digits.parse().map_err(|_| bad())?;
        let denom = BigInt::from(10u32).pow(frac.len() as u32);
        let value = BigRational::new(numer, denom);
        return Ok(if negative { -value } else { value });
    }
    tok.parse::<BigRational>().map_err(|_| bad())
}

/// Vertices are set indices; each universe element becomes the edge of the
/// sets covering it.
pub fn setcover_to_clutter(inst: &SetCoverInstance) -> Result<Clutter> {
    let mut edges = Vec::with_capacity(inst.universe_size as usize);
    for u in 1..=inst.universe_size {
        let covering: EdgeSet = inst
            .sets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.elements.contains(&u))
            .map(|(i, _)| i as VertexId)
            .collect();
        if covering.is_empty() {
            return Err(Error::Infeasible { element: u });
        }
        edges.push(covering);
    }
    Ok(Clutter::minimalize(edges))
}

/// Caller-defined monotone cost of a family of sets, given by name.
pub trait MonotoneOracle {
    fn evaluate(&mut self, names: &[&str]) -> Result<BigRational>;
}

impl<F> MonotoneOracle for F
where
    F: FnMut(&[&str]) -> Result<BigRational>,
{
    fn evaluate(&mut self, names: &[&str]) -> Result<BigRational> {
        self(names)
    }
}

pub enum Objective<'a> {
    Cardinality,
    Weighted,
    Oracle(&'a mut dyn MonotoneOracle),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    /// Indices into the instance's sets, ascending.
    pub sets: Vec<usize>,
    pub names: Vec<String>,
    pub cost: BigRational,
}

/// Scans the minimal covers (the blocker) for the cheapest. Objectives are
/// monotone, so some minimal cover is optimal; ties go to the first minimal
/// cover in canonical order.
pub fn solve_setcover(inst: &SetCoverInstance, objective: Objective<'_>) -> Result<Cover> {
    let clutter = setcover_to_clutter(inst)?;
    let minimal_covers = blocker(&clutter)?;
    let mut objective = objective;
    if matches!(objective, Objective::Weighted) && inst.weights.is_none() {
        return Err(Error::InvalidInput(
            "weighted objective needs weights".into(),
        ));
    }

    let mut best: Option<(BigRational, &EdgeSet)> = None;
    for cover in &minimal_covers {
        let cost = match &mut objective {
            Objective::Cardinality => BigRational::from_integer(BigInt::from(cover.len())),
            Objective::Weighted => {
                let w = inst.weights.as_ref().expect("checked above");
                cover
                    .iter()
                    .fold(BigRational::zero(), |acc, i| acc + &w[i as usize])
            }
            Objective::Oracle(oracle) => {
                let names: Vec<&str> = cover
                    .iter()
                    .map(|i| inst.sets[i as usize].name.as_str())
                    .collect();
                oracle.evaluate(&names)?
            }
        };
        if best.as_ref().is_none_or(|(b, _)| cost < *b) {
            best = Some((cost, cover));
        }
    }
    // A feasible instance always has at least one minimal cover.
    let (cost, cover) = best.ok_or_else(|| Error::InvalidInput("instance has no cover".into()))?;
    let sets: Vec<usize> = cover.iter().map(|i| i as usize).collect();
    Ok(Cover {
        names: sets.iter().map(|&i| inst.sets[i].name.clone()).collect(),
        sets,
        cost,
    })
}

/// Samples random nested pairs `A ⊆ B` of set families and reports those
/// with `Q(A) > Q(B)`. Violations are logged, not fatal.
pub fn spot_check_monotone(
    inst: &SetCoverInstance,
    oracle: &mut dyn MonotoneOracle,
    samples: usize,
    seed: u64,
) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = inst.sets.len();
    let mut violations = Vec::new();
    for _ in 0..samples {
        let big: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.5)).collect();
        let small: Vec<usize> = big.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        let names = |idx: &[usize]| -> Vec<&str> {
            idx.iter().map(|&i| inst.sets[i].name.as_str()).collect()
        };
        let q_small = oracle.evaluate(&names(&small))?;
        let q_big = oracle.evaluate(&names(&big))?;
        if q_small > q_big {
            log::warn!("oracle is not monotone: Q({small:?}) = {q_small} > Q({big:?}) = {q_big}");
            violations.push((small, big));
        }
    }
    Ok(violations)
}
