//! Validating, constructing and counting pi-Eulerian tours.
//!
//! A tour is a closed walk recorded as its sequence of edge ids. It is
//! pi-Eulerian when every edge `e` occurs exactly `pi[tail(e)]` times. Two
//! tours are the same exactly when their edge id sequences are equal, so
//! counting "tours starting with `e`" counts sequences whose first entry is
//! `e`.

use std::collections::BTreeSet;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::census::kappa;
use crate::error::{Error, Result};
use crate::graph::{positive_multipliers, DirectedMultigraph};

/// Default bound on the tour length the brute-force counter accepts.
pub const DEFAULT_BRUTEFORCE_CAP: u64 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tour {
    edge_ids: Vec<usize>,
}

impl Tour {
    pub fn new(edge_ids: Vec<usize>) -> Self {
        Tour { edge_ids }
    }

    pub fn edge_ids(&self) -> &[usize] {
        &self.edge_ids
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    /// Cyclic rotation beginning at the first occurrence of `edge`.
    pub fn rotated_to(&self, edge: usize) -> Option<Tour> {
        let at = self.edge_ids.iter().position(|&id| id == edge)?;
        let mut edge_ids = self.edge_ids[at..].to_vec();
        edge_ids.extend_from_slice(&self.edge_ids[..at]);
        Some(Tour { edge_ids })
    }
}

impl fmt::Display for Tour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, id) in self.edge_ids.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{id}")?;
        }
        Ok(())
    }
}

/// The first reason a walk fails to be a pi-Eulerian tour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    UnknownEdge {
        position: usize,
        edge: usize,
    },
    /// `edge` at `position` ends where `next` does not start. The last
    /// position wraps around to the first edge.
    ChainBreak {
        position: usize,
        edge: usize,
        next: usize,
    },
    UsageMismatch {
        edge: usize,
        used: usize,
        expected: BigUint,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => f.write_str("tour is empty"),
            Violation::UnknownEdge { position, edge } => {
                write!(f, "position {position}: unknown edge {edge}")
            }
            Violation::ChainBreak {
                position,
                edge,
                next,
            } => write!(
                f,
                "position {position}: edge {edge} does not end where edge {next} starts"
            ),
            Violation::UsageMismatch {
                edge,
                used,
                expected,
            } => {
                write!(f, "edge {edge} used {used} times, expected {expected}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn validate_tour(
    g: &DirectedMultigraph,
    pi: &[BigUint],
    tour: &Tour,
) -> Result<ValidationReport> {
    positive_multipliers_unbounded(g, pi)?;
    let report = |violation| {
        Ok(ValidationReport {
            violation: Some(violation),
        })
    };
    let ids = tour.edge_ids();
    if ids.is_empty() {
        return report(Violation::Empty);
    }
    if let Some((position, &edge)) = ids.iter().enumerate().find(|(_, &id)| id >= g.edge_count()) {
        return report(Violation::UnknownEdge { position, edge });
    }
    let edges = g.edges();
    for (position, &edge) in ids.iter().enumerate() {
        let next = ids[(position + 1) % ids.len()];
        if edges[edge].head != edges[next].tail {
            return report(Violation::ChainBreak {
                position,
                edge,
                next,
            });
        }
    }
    let mut used = vec![0usize; g.edge_count()];
    for &id in ids {
        used[id] += 1;
    }
    for (edge, (&count, e)) in used.iter().zip(edges).enumerate() {
        if BigUint::from(count) != pi[e.tail] {
            return report(Violation::UsageMismatch {
                edge,
                used: count,
                expected: pi[e.tail].clone(),
            });
        }
    }
    Ok(ValidationReport { violation: None })
}

/// Dimension and positivity checks without converting to machine integers.
fn positive_multipliers_unbounded(g: &DirectedMultigraph, pi: &[BigUint]) -> Result<()> {
    if pi.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: g.vertex_count(),
            found: pi.len(),
        });
    }
    match pi.iter().position(Zero::is_zero) {
        Some(index) => Err(Error::NonPositiveEntry { index }),
        None => Ok(()),
    }
}

fn ensure_tour_preconditions(g: &DirectedMultigraph, pi: &[BigUint]) -> Result<()> {
    g.ensure_strongly_connected()?;
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    positive_multipliers_unbounded(g, pi)?;
    if !g.laplacian().annihilates(pi)? {
        return Err(Error::NotPeriodVector);
    }
    Ok(())
}

/// Where a constructed tour should begin.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TourOptions {
    /// Defaults to the first vertex.
    pub start_vertex: Option<usize>,
    /// Defaults to the lowest edge id leaving the start vertex. Takes
    /// precedence over `start_vertex`.
    pub start_edge: Option<usize>,
}

pub fn construct_tour(g: &DirectedMultigraph, pi: &[BigUint]) -> Result<Tour> {
    construct_tour_with(g, pi, TourOptions::default())
}

/// Builds a pi-Eulerian tour by finding an Eulerian circuit of the lifted
/// graph with Hierholzer's algorithm and mapping every lifted edge back to
/// the edge it copies.
pub fn construct_tour_with(
    g: &DirectedMultigraph,
    pi: &[BigUint],
    options: TourOptions,
) -> Result<Tour> {
    ensure_tour_preconditions(g, pi)?;
    let first = match (options.start_edge, options.start_vertex) {
        (Some(edge), _) => {
            g.edge(edge)?;
            edge
        }
        (None, vertex) => {
            let vertex = vertex.unwrap_or(0);
            if vertex >= g.vertex_count() {
                return Err(Error::UnknownVertex(format!("#{vertex}")));
            }
            g.out_edges(vertex)[0]
        }
    };

    let (lifted, map) = g.lift(pi)?;
    let circuit = eulerian_circuit(&lifted, g.edges()[first].tail);
    assert_eq!(
        circuit.len(),
        lifted.edge_count(),
        "lifted graph is not Eulerian"
    );
    let projected = Tour::new(
        circuit
            .iter()
            .map(|&id| map.original(id).unwrap().0)
            .collect(),
    );
    Ok(projected
        .rotated_to(first)
        .expect("every edge occurs in the tour"))
}

/// Hierholzer's algorithm from `start`. Unused edges at a vertex are taken in
/// ascending id order.
fn eulerian_circuit(g: &DirectedMultigraph, start: usize) -> Vec<usize> {
    let mut next = vec![0usize; g.vertex_count()];
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut circuit = Vec::with_capacity(g.edge_count());
    while let Some(&(v, _)) = stack.last() {
        let out = g.out_edges(v);
        if next[v] < out.len() {
            let id = out[next[v]];
            next[v] += 1;
            stack.push((g.edges()[id].head, Some(id)));
        } else if let Some((_, Some(id))) = stack.pop() {
            circuit.push(id);
        }
    }
    circuit.reverse();
    circuit
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TourCount {
    pub value: BigUint,
    pub start_edge: usize,
    pub pi: Vec<BigUint>,
}

/// Factorials of a fixed set of arguments, computed in one ascending sweep.
struct Factorials {
    values: HashMap<usize, BigUint>,
}

impl Factorials {
    fn of(arguments: impl IntoIterator<Item = usize>) -> Self {
        let wanted: BTreeSet<usize> = arguments.into_iter().collect();
        let mut values = HashMap::with_capacity(wanted.len());
        let mut running = BigUint::one();
        let mut at = 0usize;
        for n in wanted {
            while at < n {
                at += 1;
                running *= at;
            }
            values.insert(n, running.clone());
        }
        Factorials { values }
    }

    fn get(&self, n: usize) -> &BigUint {
        &self.values[&n]
    }
}

/// Number of pi-Eulerian tours whose first edge is `start_edge`:
/// `kappa_w * prod_v (d_v pi_v - 1)! / ((pi_v!)^(d_v - 1) (pi_v - 1)!)`
/// where `w` is the tail of `start_edge`.
pub fn count_tours(g: &DirectedMultigraph, pi: &[BigUint], start_edge: usize) -> Result<TourCount> {
    let root = g.edge(start_edge)?.tail;
    ensure_tour_preconditions(g, pi)?;
    let multipliers = positive_multipliers(g, pi)?;
    let degrees = g.out_degrees();
    let totals = multipliers
        .iter()
        .zip(&degrees)
        .map(|(&p, &d)| {
            p.checked_mul(d)
                .ok_or_else(|| Error::TooLarge(format!("{p} * {d}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let factorials = Factorials::of(
        multipliers
            .iter()
            .zip(&totals)
            .flat_map(|(&p, &t)| [t - 1, p, p - 1]),
    );

    let mut value = kappa(g, root)?;
    for v in 0..g.vertex_count() {
        let (p, d) = (multipliers[v], degrees[v]);
        let exponent = u32::try_from(d - 1).map_err(|_| Error::TooLarge(d.to_string()))?;
        let denominator = factorials.get(p).pow(exponent) * factorials.get(p - 1);
        let (ratio, remainder) = factorials.get(totals[v] - 1).div_rem(&denominator);
        assert!(
            remainder.is_zero(),
            "multinomial ratio at vertex {v} is not integral"
        );
        value *= ratio;
    }
    Ok(TourCount {
        value,
        start_edge,
        pi: pi.to_vec(),
    })
}

/// Eulerian tours starting with `start_edge`: `kappa_w * prod_v (d_v - 1)!`.
pub fn count_eulerian_best(g: &DirectedMultigraph, start_edge: usize) -> Result<TourCount> {
    let root = g.edge(start_edge)?.tail;
    g.ensure_strongly_connected()?;
    if let Some(v) = g.first_unbalanced_vertex() {
        return Err(Error::NotEulerian(g.vertex_name(v).to_owned()));
    }
    let degrees = g.out_degrees();
    let factorials = Factorials::of(degrees.iter().map(|d| d - 1));
    let value = degrees
        .iter()
        .fold(kappa(g, root)?, |acc, d| acc * factorials.get(d - 1));
    Ok(TourCount {
        value,
        start_edge,
        pi: vec![BigUint::one(); g.vertex_count()],
    })
}

/// Exhaustive depth-first search over walks that respect per-edge usage
/// budgets. Only budget exhaustion prunes the search.
struct BudgetSearch<'a> {
    g: &'a DirectedMultigraph,
    budget: Vec<u32>,
    remaining: u64,
    target: usize,
    path: Vec<usize>,
}

impl<'a> BudgetSearch<'a> {
    fn new(g: &'a DirectedMultigraph, pi: &[BigUint], cap: u64) -> Result<Self> {
        positive_multipliers_unbounded(g, pi)?;
        let degrees = g.out_degrees();
        let length: BigUint = pi.iter().zip(&degrees).map(|(p, &d)| p * d).sum();
        if length > BigUint::from(cap) {
            return Err(Error::SearchSpaceTooLarge {
                size: length.to_string(),
                cap,
            });
        }
        // length <= cap, so every entry with an outgoing edge fits.
        let budget = g
            .edges()
            .iter()
            .map(|e| u32::try_from(&pi[e.tail]).expect("bounded by cap"))
            .collect();
        Ok(BudgetSearch {
            g,
            budget,
            remaining: u64::try_from(&length).expect("bounded by cap"),
            target: 0,
            path: Vec::new(),
        })
    }

    fn take(&mut self, edge: usize) -> usize {
        self.budget[edge] -= 1;
        self.remaining -= 1;
        self.path.push(edge);
        self.g.edges()[edge].head
    }

    fn give_back(&mut self, edge: usize) {
        self.budget[edge] += 1;
        self.remaining += 1;
        self.path.pop();
    }

    fn count_from(&mut self, at: usize) -> u64 {
        if self.remaining == 0 {
            return u64::from(at == self.target);
        }
        let mut total = 0;
        for &edge in self.g.out_edges(at) {
            if self.budget[edge] > 0 {
                let head = self.take(edge);
                total += self.count_from(head);
                self.give_back(edge);
            }
        }
        total
    }

    fn find_from(&mut self, at: usize) -> bool {
        if self.remaining == 0 {
            return at == self.target;
        }
        for &edge in self.g.out_edges(at) {
            if self.budget[edge] > 0 {
                let head = self.take(edge);
                if self.find_from(head) {
                    return true;
                }
                self.give_back(edge);
            }
        }
        false
    }
}

/// Counts pi-Eulerian tours starting with `start_edge` by exhaustive search.
/// Does not require `pi` to be a period vector; the count is zero when no
/// tour exists. Rejects instances whose tour length exceeds `cap`.
pub fn count_tours_bruteforce(
    g: &DirectedMultigraph,
    pi: &[BigUint],
    start_edge: usize,
    cap: u64,
) -> Result<TourCount> {
    let edge = g.edge(start_edge)?;
    let mut search = BudgetSearch::new(g, pi, cap)?;
    search.target = edge.tail;
    let head = search.take(start_edge);
    let value = BigUint::from(search.count_from(head));
    Ok(TourCount {
        value,
        start_edge,
        pi: pi.to_vec(),
    })
}

/// The lexicographically first pi-Eulerian tour starting with `start_edge`,
/// found by the same exhaustive search.
pub fn find_tour_bruteforce(
    g: &DirectedMultigraph,
    pi: &[BigUint],
    start_edge: usize,
    cap: u64,
) -> Result<Option<Tour>> {
    let edge = g.edge(start_edge)?;
    let mut search = BudgetSearch::new(g, pi, cap)?;
    search.target = edge.tail;
    let head = search.take(start_edge);
    Ok(search.find_from(head).then(|| Tour::new(search.path)))
}

/// Counts pi-Eulerian tours whose first edge leaves `start_vertex`, by
/// exhaustive search.
pub fn count_tours_from_vertex_bruteforce(
    g: &DirectedMultigraph,
    pi: &[BigUint],
    start_vertex: usize,
    cap: u64,
) -> Result<BigUint> {
    if start_vertex >= g.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{start_vertex}")));
    }
    let mut search = BudgetSearch::new(g, pi, cap)?;
    search.target = start_vertex;
    if search.remaining == 0 {
        return Ok(BigUint::zero());
    }
    Ok(BigUint::from(search.count_from(start_vertex)))
}
