//! Executable checks of the lattice, minor and duality identities, run on
//! seeded random clutters. Used by the `laws` command and the test suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blocker::blocker;
use crate::clutter::Clutter;
use crate::edge::{EdgeSet, VertexId};
use crate::error::Result;
use crate::generate::random_with;
use crate::matching::expansion;

/// Outcome of one named identity over all samples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawOutcome {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct LawReport {
    pub outcomes: Vec<LawOutcome>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.failures.is_empty())
    }

    fn record(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let idx = match self.outcomes.iter().position(|o| o.name == name) {
            Some(i) => i,
            None => {
                self.outcomes.push(LawOutcome {
                    name,
                    checked: 0,
                    failures: Vec::new(),
                });
                self.outcomes.len() - 1
            }
        };
        let o = &mut self.outcomes[idx];
        o.checked += 1;
        if !ok {
            o.failures.push(detail());
        }
    }
}

/// Small random clutter over `{1..=7}`; occasionally one of the two
/// extreme clutters so the identities involving them get exercised.
pub fn sample_clutter<R: Rng>(rng: &mut R) -> Clutter {
    match rng.gen_range(0..20) {
        0 => Clutter::zero(),
        1 => Clutter::one(),
        _ => {
            let m = rng.gen_range(1..=5);
            let r = rng.gen_range(1..=4);
            random_with(rng, 7, m, r).expect("valid parameters")
        }
    }
}

/// Checks the seven families of algebraic identities on `samples` seeded
/// random triples.
pub fn check_algebraic_laws(samples: usize, seed: u64) -> Result<LawReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = LawReport::default();
    let zero = Clutter::zero();
    let one = Clutter::one();

    for _ in 0..samples {
        let f = sample_clutter(&mut rng);
        let g = sample_clutter(&mut rng);
        let h = sample_clutter(&mut rng);
        let v: VertexId = rng.gen_range(1..=7);
        let u: VertexId = loop {
            let u = rng.gen_range(1..=7);
            if u != v {
                break u;
            }
        };
        let show = || format!("F={f} G={g} H={h} v={v} u={u}");

        // (1) deletion and contraction commute
        rep.record(
            "minors commute",
            h.delete_vertex(v).delete_vertex(u) == h.delete_vertex(u).delete_vertex(v)
                && h.delete_vertex(v).contract_vertex(u) == h.contract_vertex(u).delete_vertex(v)
                && h.contract_vertex(v).contract_vertex(u)
                    == h.contract_vertex(u).contract_vertex(v),
            show,
        );

        // (2) bounded distributive lattice
        rep.record(
            "commutative",
            f.join(&g) == g.join(&f) && f.meet(&g) == g.meet(&f),
            show,
        );
        rep.record(
            "associative",
            f.join(&g.join(&h)) == f.join(&g).join(&h)
                && f.meet(&g.meet(&h)) == f.meet(&g).meet(&h),
            show,
        );
        rep.record(
            "absorption",
            f.join(&f.meet(&g)) == f && f.meet(&f.join(&g)) == f,
            show,
        );
        rep.record("identity", f.join(&zero) == f && f.meet(&one) == f, show);
        rep.record(
            "distributive",
            f.meet(&g.join(&h)) == f.meet(&g).join(&f.meet(&h))
                && f.join(&g.meet(&h)) == f.join(&g).meet(&f.join(&h)),
            show,
        );
        rep.record(
            "join is one iff an operand is one",
            f.join(&h).is_one() == (f.is_one() || h.is_one()),
            show,
        );
        rep.record(
            "meet is zero iff an operand is zero",
            f.meet(&h).is_zero() == (f.is_zero() || h.is_zero()),
            show,
        );

        let bf = blocker(&f)?;
        let bh = blocker(&h)?;

        // (3) duality
        rep.record("blocker is an involution", blocker(&bh)? == h, show);

        // (4) deletion and contraction are dual
        rep.record(
            "deletion dual to contraction",
            blocker(&h.delete_vertex(v))? == bh.contract_vertex(v)
                && blocker(&h.contract_vertex(v))? == bh.delete_vertex(v),
            show,
        );

        // (5) join and meet are dual
        rep.record(
            "join dual to meet",
            blocker(&f.join(&h))? == bf.meet(&bh) && blocker(&f.meet(&h))? == bf.join(&bh),
            show,
        );

        // (6) minors are preserved by duality, at the level of the witness
        let (s, t) = random_disjoint_pair(&mut rng, &h.vertex_set());
        rep.record(
            "blocker of a minor is the dual minor",
            blocker(&h.restrict(&s, &t)?)? == bh.restrict(&t, &s)?,
            || format!("H={h} S={s} T={t}"),
        );

        // (7) minors commute with join
        rep.record(
            "minors commute with join",
            f.join(&h).delete_vertex(v) == f.delete_vertex(v).join(&h.delete_vertex(v))
                && f.join(&h).contract_vertex(v)
                    == f.contract_vertex(v).join(&h.contract_vertex(v)),
            show,
        );
    }

    rep.record("blocker of zero is one", blocker(&zero)? == one, || {
        "b(0) != 1".to_string()
    });
    Ok(rep)
}

fn random_disjoint_pair<R: Rng>(rng: &mut R, universe: &EdgeSet) -> (EdgeSet, EdgeSet) {
    let mut s = Vec::new();
    let mut t = Vec::new();
    for v in universe.iter() {
        match rng.gen_range(0..3) {
            0 => s.push(v),
            1 => t.push(v),
            _ => {}
        }
    }
    (EdgeSet::new(s), EdgeSet::new(t))
}

/// A failure of the transversal disjunction for `(T, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjunctionFailure {
    pub transversal: EdgeSet,
    pub vertex: VertexId,
}

/// For every `T ∈ b(H)` and `v ∈ V(H)`: either `T - v ∈ b(H \ v)`, or some
/// edge `S` and `u ∈ S` with `v ∈ S - u` have
/// `T \ {v, u} ∈ b(H ∘ ({{v, u}}, S))`. Returns the pairs where neither holds
/// and the number of pairs checked.
pub fn check_transversal_disjunction(h: &Clutter) -> Result<(usize, Vec<DisjunctionFailure>)> {
    let bh = blocker(h)?;
    let vertices = h.vertex_set();
    let mut failures = Vec::new();
    let mut checked = 0;
    for t in &bh {
        for v in vertices.iter() {
            checked += 1;
            if blocker(&h.delete_vertex(v))?.contains_edge(&t.without(v)) {
                continue;
            }
            let mut found = false;
            'search: for s in h.iter().filter(|s| s.contains(v)) {
                for u in s.iter().filter(|&u| u != v) {
                    let r = EdgeSet::from([v, u]);
                    let expanded = expansion(h, std::slice::from_ref(&r), s)?;
                    if blocker(&expanded)?.contains_edge(&t.difference(&r)) {
                        found = true;
                        break 'search;
                    }
                }
            }
            if !found {
                failures.push(DisjunctionFailure {
                    transversal: t.clone(),
                    vertex: v,
                });
            }
        }
    }
    Ok((checked, failures))
}
