//! Exact multi-Eulerian tour theory for finite, strongly connected directed
//! multigraphs.
//!
//! A closed walk that uses every edge `e` exactly `pi[tail(e)]` times is a
//! *pi-Eulerian tour*. Such a tour exists precisely when `pi` lies in the
//! kernel of the graph Laplacian, and the number of them starting with a
//! fixed edge has a closed form in terms of oriented spanning tree counts.
//!
//! * [`graph`]: multigraphs, degrees, the Laplacian, edge lifting.
//! * [`census`]: oriented spanning tree counts (Matrix-Tree and enumeration).
//! * [`period`]: primitive period vector, Pham index, unicycles, minimal length.
//! * [`tour`]: validating, constructing and counting tours.
//! * [`rotor`]: simple rotor walks and their settling behaviour.
//!
//! All arithmetic on counts is exact.

pub mod census;
pub mod error;
pub mod graph;
pub mod period;
pub mod rng;
pub mod rotor;
pub mod tour;

pub use census::{determinant_exact, enumerate_arborescences, kappa, kappa_vector, KappaVector};
pub use error::{Error, Result};
pub use graph::{DirectedMultigraph, Edge, EdgeLiftMap, Laplacian};
pub use period::{
    is_period_vector, minimal_tour_length, pham_index, primitive_period_vector, summarize,
    unicycle_count, EulerianessSummary, PeriodVector,
};
pub use rotor::{
    check_settles, rotor_step, run_until_periodic, RotorState, SettleSummary, SettlingReport,
    TrialOutcome,
};
pub use tour::{
    construct_tour, construct_tour_with, count_eulerian_best, count_tours, count_tours_bruteforce,
    find_tour_bruteforce, validate_tour, Tour, TourCount, TourOptions, ValidationReport, Violation,
};
