//! Game solvers over explicit graphs: win/loss/draw classification, the
//! Sprague-Grundy function on acyclic graphs, and its generalization with
//! counters on cyclic graphs.

use crate::gamegraph::GameGraph;
use crate::gf2::{mex, BitVec};
use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Previous player wins: the mover has no good option (or no move).
    P,
    /// Next player (the mover) wins.
    N,
    /// Draw under optimal play.
    D,
}

/// Value of the generalized Sprague-Grundy function at one position:
/// either a finite value, or infinite with the set K of finite values
/// reachable in one move (the draw position's exits).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaValue {
    Finite(u64),
    Infinite(BTreeSet<u64>),
}

impl GammaValue {
    #[must_use]
    pub fn finite(&self) -> Option<u64> {
        match self {
            GammaValue::Finite(k) => Some(*k),
            GammaValue::Infinite(_) => None,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has a cycle; the plain Sprague-Grundy function is undefined")]
    Cyclic,
    #[error("sum has a component with infinite value; sum value out of scope")]
    InfiniteComponent,
}

/// Structural audit failures; each names the violated clause.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AuditError {
    #[error("position {u}: follower {v} repeats finite value {k}")]
    RepeatedValueOnFollower { u: usize, v: usize, k: u64 },
    #[error("position {u} (value {k}): no earlier-counter follower with value {j}")]
    MissingSmallerValue { u: usize, j: u64, k: u64 },
    #[error("position {u} (value {k}): draw-capable follower {v} has no earlier-counter exit at {k}")]
    MissingExit { u: usize, v: usize, k: u64 },
    #[error("position {u}: recorded exit set does not match follower values")]
    WrongExitSet { u: usize },
    #[error("position {u}: missing counter on finite value")]
    MissingCounter { u: usize },
    #[error("position {u}: outcome {outcome:?} inconsistent with value {value:?}")]
    OutcomeMismatch {
        u: usize,
        outcome: Outcome,
        value: GammaValue,
    },
}

/// Values plus assignment-order counters for the finite positions.
pub struct GammaTable {
    values: Vec<GammaValue>,
    counters: Vec<u64>,
}

impl GammaTable {
    #[must_use]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[must_use]
    pub fn value(&self, u: usize) -> &GammaValue {
        &self.values[u]
    }

    /// Assignment-order witness, 1-based; `None` on infinite positions.
    #[must_use]
    pub fn counter(&self, u: usize) -> Option<u64> {
        if self.counters[u] == 0 {
            None
        } else {
            Some(self.counters[u])
        }
    }

    #[must_use]
    pub fn max_finite(&self) -> Option<u64> {
        self.values.iter().filter_map(GammaValue::finite).max()
    }

    #[must_use]
    pub fn finite_count(&self) -> usize {
        self.values.iter().filter(|v| v.finite().is_some()).count()
    }

    /// (position word, value) pairs over the finite positions, for graphs
    /// whose vertex index is the position's integer encoding.
    #[must_use]
    pub fn finite_entries(&self, width: u32) -> Vec<(BitVec, u64)> {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(u, v)| v.finite().map(|k| (BitVec::new(width, u as u64), k)))
            .collect()
    }
}

/// Backward induction over the reverse graph. Sinks are P; a position with
/// a P follower is N; a position whose followers are all N is P; whatever
/// never resolves is D.
#[must_use]
pub fn classify_pnd(g: &GameGraph) -> Vec<Outcome> {
    let n = g.n();
    let mut state: Vec<Option<Outcome>> = vec![None; n];
    // pending[u]: followers not yet known to be N.
    let mut pending: Vec<usize> = (0..n).map(|u| g.out_degree(u)).collect();
    let mut queue: Vec<usize> = Vec::new();
    for u in 0..n {
        if pending[u] == 0 {
            state[u] = Some(Outcome::P);
            queue.push(u);
        }
    }
    while let Some(u) = queue.pop() {
        match state[u].unwrap() {
            Outcome::P => {
                for &w in g.ancestors(u) {
                    let w = w as usize;
                    if state[w].is_none() {
                        state[w] = Some(Outcome::N);
                        queue.push(w);
                    }
                }
            }
            Outcome::N => {
                for &w in g.ancestors(u) {
                    let w = w as usize;
                    if state[w].is_none() {
                        pending[w] -= 1;
                        if pending[w] == 0 {
                            state[w] = Some(Outcome::P);
                            queue.push(w);
                        }
                    }
                }
            }
            Outcome::D => unreachable!(),
        }
    }
    state.into_iter().map(|s| s.unwrap_or(Outcome::D)).collect()
}

/// Sprague-Grundy values by mex over followers, processed in an order
/// where every follower is finished first. Fails on cyclic graphs.
pub fn grundy_acyclic(g: &GameGraph) -> Result<Vec<u64>, SolveError> {
    let n = g.n();
    let mut pending: Vec<usize> = (0..n).map(|u| g.out_degree(u)).collect();
    let mut values: Vec<u64> = vec![0; n];
    let mut done = vec![false; n];
    let mut queue: Vec<usize> = (0..n).filter(|&u| pending[u] == 0).collect();
    let mut processed = 0usize;
    let mut scratch: Vec<u64> = Vec::new();
    while let Some(u) = queue.pop() {
        scratch.clear();
        scratch.extend(g.followers(u).iter().map(|&v| values[v as usize]));
        values[u] = mex(&scratch);
        done[u] = true;
        processed += 1;
        for &w in g.ancestors(u) {
            let w = w as usize;
            if !done[w] {
                pending[w] -= 1;
                if pending[w] == 0 {
                    queue.push(w);
                }
            }
        }
    }
    if processed != n {
        return Err(SolveError::Cyclic);
    }
    Ok(values)
}

/// Staged computation of the generalized Sprague-Grundy function.
///
/// A position u takes finite value k (with the next counter) once
///   (a) every j < k appears on some labeled follower,
///   (b) no labeled follower carries k, and
///   (c) every still-unlabeled follower has a labeled follower valued k.
/// Assignments are made smallest (k, u) first, so the counter order is
/// deterministic. Positions never labeled are infinite, recorded with the
/// finite values of their followers.
///
/// The scan is event-driven rather than a repeated global sweep: per
/// position we track the set of follower values seen, the running mex, and
/// a count of condition-(c) blockers, updating ancestors on each
/// assignment. The assignment order equals the naive sweep's because a
/// position is pushed exactly when it becomes eligible and eligibility is
/// only ever lost by taking a label or growing the mex, both of which
/// re-push or invalidate stale heap entries.
#[must_use]
pub fn gamma_solve(g: &GameGraph) -> GammaTable {
    let n = g.n();
    const UNLABELED: u64 = u64::MAX;
    // Every finite value is at most its vertex's out-degree.
    let value_bound = g.max_out_degree() + 2;
    let words_per = value_bound.div_ceil(64);

    let mut seen = vec![0u64; n * words_per];
    let mut label = vec![UNLABELED; n];
    let mut counters = vec![0u64; n];
    let mut kcand = vec![0u64; n];
    let mut blockers: Vec<u32> = (0..n).map(|u| g.out_degree(u) as u32).collect();
    let mut heap: BinaryHeap<Reverse<(u64, u32)>> = BinaryHeap::new();

    let seen_get = |seen: &[u64], u: usize, k: u64| -> bool {
        let k = k as usize;
        debug_assert!(k < value_bound);
        seen[u * words_per + k / 64] >> (k % 64) & 1 == 1
    };

    for (u, &b) in blockers.iter().enumerate() {
        if b == 0 {
            heap.push(Reverse((0, u as u32)));
        }
    }

    let mut next_counter = 1u64;
    while let Some(Reverse((k, u32u))) = heap.pop() {
        let u = u32u as usize;
        // Stale entries: label taken, candidate moved on, or still blocked.
        if label[u] != UNLABELED || kcand[u] != k || blockers[u] != 0 {
            continue;
        }
        label[u] = k;
        counters[u] = next_counter;
        next_counter += 1;

        for &v32 in g.ancestors(u) {
            let v = v32 as usize;
            if label[v] != UNLABELED {
                continue;
            }
            let slot = v * words_per + (k as usize) / 64;
            let bit = 1u64 << (k % 64);
            let was_new = seen[slot] & bit == 0;
            seen[slot] |= bit;

            if kcand[v] == k {
                // Candidate invalidated by (b); advance the mex and
                // recount (c) blockers against the new candidate.
                let mut nk = k + 1;
                while seen_get(&seen, v, nk) {
                    nk += 1;
                }
                kcand[v] = nk;
                let mut b = 0u32;
                for &x in g.followers(v) {
                    let x = x as usize;
                    if label[x] == UNLABELED && !seen_get(&seen, x, nk) {
                        b += 1;
                    }
                }
                blockers[v] = b;
                if b == 0 {
                    heap.push(Reverse((nk, v32)));
                }
            } else if !seen_get(&seen, u, kcand[v]) {
                // u leaves v's unlabeled-follower pool while still not
                // showing v's candidate, so it was blocking.
                blockers[v] -= 1;
                if blockers[v] == 0 {
                    heap.push(Reverse((kcand[v], v32)));
                }
            }

            if was_new {
                // v now sees k: ancestors waiting on k at follower v
                // lose a blocker.
                for &w32 in g.ancestors(v) {
                    let w = w32 as usize;
                    if label[w] == UNLABELED && kcand[w] == k {
                        blockers[w] -= 1;
                        if blockers[w] == 0 {
                            heap.push(Reverse((k, w32)));
                        }
                    }
                }
            }
        }
    }

    let values: Vec<GammaValue> = (0..n)
        .map(|u| {
            if label[u] != UNLABELED {
                GammaValue::Finite(label[u])
            } else {
                let exits: BTreeSet<u64> = g
                    .followers(u)
                    .iter()
                    .filter(|&&v| label[v as usize] != UNLABELED)
                    .map(|&v| label[v as usize])
                    .collect();
                GammaValue::Infinite(exits)
            }
        })
        .collect();

    GammaTable { values, counters }
}

/// A recommended move given the outcome classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveRec {
    /// No followers at all: the mover has already lost.
    NoMove,
    /// Every follower hands the opponent the win.
    Resign,
    /// Move to this vertex: first winning (or draw-keeping) follower in
    /// move order.
    MoveTo(u32),
}

#[must_use]
pub fn best_move(g: &GameGraph, pos: usize, outcomes: &[Outcome]) -> MoveRec {
    let followers = g.followers(pos);
    if followers.is_empty() {
        return MoveRec::NoMove;
    }
    match outcomes[pos] {
        Outcome::P => MoveRec::Resign,
        Outcome::N => {
            let v = followers
                .iter()
                .find(|&&v| outcomes[v as usize] == Outcome::P)
                .expect("an N-position has a P follower");
            MoveRec::MoveTo(*v)
        }
        Outcome::D => {
            let v = followers
                .iter()
                .find(|&&v| outcomes[v as usize] == Outcome::D)
                .expect("a D-position has a D follower");
            MoveRec::MoveTo(*v)
        }
    }
}

/// XOR of finite component values; any infinite component is out of scope.
pub fn sum_gamma(values: &[GammaValue]) -> Result<GammaValue, SolveError> {
    let mut acc = 0u64;
    for v in values {
        match v {
            GammaValue::Finite(k) => acc ^= k,
            GammaValue::Infinite(_) => return Err(SolveError::InfiniteComponent),
        }
    }
    Ok(GammaValue::Finite(acc))
}

/// Direct structural audit of a solved table, independent of the solver's
/// bookkeeping: no finite value repeats on a follower, every smaller value
/// appears on an earlier-counter follower, every draw-capable follower of
/// a finite position has an earlier-counter exit at the same value, and
/// recorded exit sets match the followers.
pub fn audit_gamma_invariants(g: &GameGraph, t: &GammaTable) -> Result<(), AuditError> {
    for u in 0..g.n() {
        match t.value(u) {
            GammaValue::Finite(k) => {
                let k = *k;
                let cu = t.counter(u).ok_or(AuditError::MissingCounter { u })?;
                for &v in g.followers(u) {
                    let v = v as usize;
                    match t.value(v) {
                        GammaValue::Finite(kv) if *kv == k => {
                            return Err(AuditError::RepeatedValueOnFollower { u, v, k });
                        }
                        GammaValue::Finite(_) => {}
                        GammaValue::Infinite(_) => {
                            let ok = g.followers(v).iter().any(|&w| {
                                let w = w as usize;
                                t.value(w).finite() == Some(k)
                                    && t.counter(w).is_some_and(|cw| cw < cu)
                            });
                            if !ok {
                                return Err(AuditError::MissingExit { u, v, k });
                            }
                        }
                    }
                }
                for j in 0..k {
                    let ok = g.followers(u).iter().any(|&v| {
                        let v = v as usize;
                        t.value(v).finite() == Some(j)
                            && t.counter(v).is_some_and(|cv| cv < cu)
                    });
                    if !ok {
                        return Err(AuditError::MissingSmallerValue { u, j, k });
                    }
                }
            }
            GammaValue::Infinite(exits) => {
                let actual: BTreeSet<u64> = g
                    .followers(u)
                    .iter()
                    .filter_map(|&v| t.value(v as usize).finite())
                    .collect();
                if &actual != exits {
                    return Err(AuditError::WrongExitSet { u });
                }
            }
        }
    }
    Ok(())
}

/// Cross-check outcomes against values: P is exactly value 0; N is a
/// positive finite value or a draw-capable position with a 0 exit; D is
/// draw-capable with no 0 exit.
pub fn audit_outcome_gamma(outcomes: &[Outcome], t: &GammaTable) -> Result<(), AuditError> {
    assert_eq!(outcomes.len(), t.len());
    for (u, &outcome) in outcomes.iter().enumerate() {
        let expected = match t.value(u) {
            GammaValue::Finite(0) => Outcome::P,
            GammaValue::Finite(_) => Outcome::N,
            GammaValue::Infinite(exits) => {
                if exits.contains(&0) {
                    Outcome::N
                } else {
                    Outcome::D
                }
            }
        };
        if outcome != expected {
            return Err(AuditError::OutcomeMismatch {
                u,
                outcome,
                value: t.value(u).clone(),
            });
        }
    }
    Ok(())
}
