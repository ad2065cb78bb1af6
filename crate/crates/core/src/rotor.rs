//! Simple rotor walks.
//!
//! Every vertex carries a cyclic order of its outgoing edges and a rotor
//! pointing at the exit it used most recently. A step advances the rotor at
//! the walker's vertex by one position and then moves the walker along the
//! edge the rotor now points at. The full state (walker plus all rotors)
//! takes finitely many values, so the walk is eventually periodic; on a
//! strongly connected graph the periodic part is a tour using each edge
//! `pi[tail]` times for the primitive period vector `pi`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::DirectedMultigraph;
use crate::period::summarize;
use crate::rng::SplitMix64;
use crate::tour::{validate_tour, Tour};

/// Step budget used when the state-space bound does not fit in a `u64`.
pub const FALLBACK_STEP_CAP: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotorState {
    cyclic_orders: Vec<Vec<usize>>,
    positions: Vec<usize>,
    walker: usize,
}

impl RotorState {
    pub fn new(
        g: &DirectedMultigraph,
        cyclic_orders: Vec<Vec<usize>>,
        positions: Vec<usize>,
        walker: usize,
    ) -> Result<Self> {
        let state = RotorState {
            cyclic_orders,
            positions,
            walker,
        };
        state.check(g)?;
        Ok(state)
    }

    /// Rotors in ascending edge order, each set so that the first exit from a
    /// vertex is its lowest outgoing edge.
    pub fn ascending(g: &DirectedMultigraph, walker: usize) -> Result<Self> {
        let cyclic_orders: Vec<Vec<usize>> = (0..g.vertex_count())
            .map(|v| g.out_edges(v).to_vec())
            .collect();
        let positions = cyclic_orders
            .iter()
            .map(|o| o.len().saturating_sub(1))
            .collect();
        Self::new(g, cyclic_orders, positions, walker)
    }

    /// Draws, vertex by vertex, a shuffled cyclic order and then a rotor
    /// position; finally draws the walker's vertex.
    pub fn random(g: &DirectedMultigraph, rng: &mut SplitMix64) -> Self {
        let mut cyclic_orders = Vec::with_capacity(g.vertex_count());
        let mut positions = Vec::with_capacity(g.vertex_count());
        for v in 0..g.vertex_count() {
            let mut order = g.out_edges(v).to_vec();
            rng.shuffle(&mut order);
            positions.push(if order.is_empty() {
                0
            } else {
                rng.below(order.len())
            });
            cyclic_orders.push(order);
        }
        let walker = rng.below(g.vertex_count());
        RotorState {
            cyclic_orders,
            positions,
            walker,
        }
    }

    fn check(&self, g: &DirectedMultigraph) -> Result<()> {
        let n = g.vertex_count();
        if self.cyclic_orders.len() != n || self.positions.len() != n {
            return Err(Error::InvalidRotorState(format!("expected {n} rotors")));
        }
        if self.walker >= n {
            return Err(Error::InvalidRotorState(format!(
                "walker at unknown vertex #{}",
                self.walker
            )));
        }
        for v in 0..n {
            let mut order = self.cyclic_orders[v].clone();
            order.sort_unstable();
            if order != g.out_edges(v) {
                return Err(Error::InvalidRotorState(format!(
                    "order at `{}` is not a permutation of its outgoing edges",
                    g.vertex_name(v)
                )));
            }
            if self.positions[v] >= order.len().max(1) {
                return Err(Error::InvalidRotorState(format!(
                    "rotor position at `{}` out of range",
                    g.vertex_name(v)
                )));
            }
        }
        Ok(())
    }

    pub fn cyclic_orders(&self) -> &[Vec<usize>] {
        &self.cyclic_orders
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn walker(&self) -> usize {
        self.walker
    }

    /// Edge the rotor at `v` currently points at.
    pub fn rotor(&self, v: usize) -> Option<usize> {
        self.cyclic_orders[v].get(self.positions[v]).copied()
    }

    /// Advances in place and returns the traversed edge.
    ///
    /// Panics if the walker's vertex has no outgoing edge.
    pub fn advance(&mut self, g: &DirectedMultigraph) -> usize {
        let v = self.walker;
        let order = &self.cyclic_orders[v];
        assert!(!order.is_empty(), "walker stuck at a sink");
        let position = (self.positions[v] + 1) % order.len();
        self.positions[v] = position;
        let edge = order[position];
        self.walker = g.edges()[edge].head;
        edge
    }

    fn key(&self) -> Vec<usize> {
        let mut key = Vec::with_capacity(self.positions.len() + 1);
        key.push(self.walker);
        key.extend_from_slice(&self.positions);
        key
    }
}

pub fn rotor_step(g: &DirectedMultigraph, state: &RotorState) -> (RotorState, usize) {
    let mut next = state.clone();
    let edge = next.advance(g);
    (next, edge)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SettlingReport {
    /// Steps taken before the first state that later recurs.
    pub transient_length: u64,
    pub period: u64,
    /// Edges traversed during one period, starting from the recurrent state.
    pub periodic_tour: Tour,
    pub is_multi_eulerian: bool,
}

/// `|V| * prod d_v + tour length`, when it fits.
fn default_cap(g: &DirectedMultigraph, tour_length: &BigUint) -> u64 {
    let states = g
        .out_degrees()
        .iter()
        .fold(BigUint::from(g.vertex_count()), |acc, &d| acc * d.max(1));
    (states + tour_length).to_u64().unwrap_or(FALLBACK_STEP_CAP)
}

/// Runs the walk until a full state repeats. `cap` bounds the number of
/// steps; `None` picks a bound no walk can exceed when one fits in a `u64`.
pub fn run_until_periodic(
    g: &DirectedMultigraph,
    start: &RotorState,
    cap: Option<u64>,
) -> Result<SettlingReport> {
    let summary = summarize(g)?;
    start.check(g)?;
    let cap = cap.unwrap_or_else(|| default_cap(g, &summary.minimal_tour_length));

    let mut seen: HashMap<Vec<usize>, u64> = HashMap::new();
    let mut traversed = Vec::new();
    let mut state = start.clone();
    let mut step = 0u64;
    let first = loop {
        if let Some(&first) = seen.get(&state.key()) {
            break first;
        }
        if step >= cap {
            return Err(Error::CapExceeded { cap });
        }
        seen.insert(state.key(), step);
        traversed.push(state.advance(g));
        step += 1;
    };

    let periodic_tour = Tour::new(traversed[first as usize..].to_vec());
    let is_multi_eulerian =
        validate_tour(g, summary.primitive_period.entries(), &periodic_tour)?.is_valid();
    Ok(SettlingReport {
        transient_length: first,
        period: step - first,
        periodic_tour,
        is_multi_eulerian,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialOutcome {
    pub walker: usize,
    pub transient_length: u64,
    pub period: u64,
    pub is_multi_eulerian: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SettleSummary {
    pub expected_period: BigUint,
    pub passed: usize,
    pub failed: usize,
    pub max_transient: u64,
    pub outcomes: Vec<TrialOutcome>,
}

impl SettleSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Runs `trials` walks from random rotor configurations drawn from one
/// [`SplitMix64`] stream seeded with `seed`, and checks that each settles
/// with period equal to the minimal multi-Eulerian tour length and a
/// periodic window that is a tour for the primitive period vector.
pub fn check_settles(g: &DirectedMultigraph, trials: usize, seed: u64) -> Result<SettleSummary> {
    let expected_period = summarize(g)?.minimal_tour_length;
    let mut rng = SplitMix64::new(seed);
    let mut outcomes = Vec::with_capacity(trials);
    for _ in 0..trials {
        let start = RotorState::random(g, &mut rng);
        let report = run_until_periodic(g, &start, None)?;
        let passed = report.is_multi_eulerian && BigUint::from(report.period) == expected_period;
        outcomes.push(TrialOutcome {
            walker: start.walker(),
            transient_length: report.transient_length,
            period: report.period,
            is_multi_eulerian: report.is_multi_eulerian,
            passed,
        });
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    Ok(SettleSummary {
        expected_period,
        passed,
        failed: trials - passed,
        max_transient: outcomes
            .iter()
            .map(|o| o.transient_length)
            .max()
            .unwrap_or(0),
        outcomes,
    })
}
