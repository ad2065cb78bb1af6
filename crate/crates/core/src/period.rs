//! Period vectors and the quantities derived from the tree counts: the Pham
//! index `M = gcd(kappa)`, the primitive period vector `kappa / M`, the
//! unicycle count `U = sum kappa_v * d_v` and the minimal multi-Eulerian tour
//! length `U / M`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::census::{kappa_vector, KappaVector};
use crate::error::{Error, Result};
use crate::graph::DirectedMultigraph;

/// A nonzero, nonnegative integer vector in the kernel of the Laplacian.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodVector {
    entries: Vec<BigUint>,
}

impl PeriodVector {
    /// Checks the kernel condition against `g`.
    pub fn new(g: &DirectedMultigraph, entries: Vec<BigUint>) -> Result<Self> {
        let signed: Vec<BigInt> = entries.iter().cloned().map(BigInt::from).collect();
        if !is_period_vector(g, &signed)? {
            return Err(Error::NotPeriodVector);
        }
        Ok(PeriodVector { entries })
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn is_primitive(&self) -> bool {
        gcd_all(&self.entries).is_one()
    }

    /// Componentwise multiple `n * self`, `n > 0`.
    pub fn scaled(&self, n: u64) -> PeriodVector {
        assert!(n > 0, "period vectors are nonzero");
        PeriodVector {
            entries: self.entries.iter().map(|x| x * n).collect(),
        }
    }

    pub fn into_entries(self) -> Vec<BigUint> {
        self.entries
    }
}

/// `p` is nonzero, nonnegative and annihilated by the Laplacian.
pub fn is_period_vector(g: &DirectedMultigraph, p: &[BigInt]) -> Result<bool> {
    let image = g.laplacian().apply(p)?;
    Ok(p.iter().any(|x| !x.is_zero())
        && p.iter().all(|x| !x.is_negative())
        && image.iter().all(Zero::is_zero))
}

pub(crate) fn gcd_all(values: &[BigUint]) -> BigUint {
    values.iter().fold(BigUint::zero(), |acc, x| acc.gcd(x))
}

/// All derived quantities, computed from one pass of determinants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianessSummary {
    pub kappa: KappaVector,
    pub pham_index: BigUint,
    pub primitive_period: PeriodVector,
    pub unicycles: BigUint,
    pub minimal_tour_length: BigUint,
    pub eulerian: bool,
}

pub fn summarize(g: &DirectedMultigraph) -> Result<EulerianessSummary> {
    g.ensure_strongly_connected()?;
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let kappa = kappa_vector(g)?;
    let degrees = g.out_degrees();
    let pham_index = gcd_all(kappa.counts());
    let period: Vec<BigUint> = kappa.counts().iter().map(|k| k / &pham_index).collect();
    let unicycles: BigUint = kappa
        .counts()
        .iter()
        .zip(&degrees)
        .map(|(k, &d)| k * d)
        .sum();

    let (minimal_tour_length, remainder) = unicycles.div_rem(&pham_index);
    assert!(
        remainder.is_zero(),
        "unicycle count not divisible by the Pham index"
    );
    let direct: BigUint = period.iter().zip(&degrees).map(|(p, &d)| p * d).sum();
    assert_eq!(direct, minimal_tour_length, "tour length routes disagree");

    let primitive_period = PeriodVector::new(g, period)?;
    debug_assert!(primitive_period.is_primitive());
    Ok(EulerianessSummary {
        kappa,
        pham_index,
        primitive_period,
        unicycles,
        minimal_tour_length,
        eulerian: g.is_eulerian(),
    })
}

pub fn primitive_period_vector(g: &DirectedMultigraph) -> Result<PeriodVector> {
    Ok(summarize(g)?.primitive_period)
}

pub fn pham_index(g: &DirectedMultigraph) -> Result<BigUint> {
    Ok(summarize(g)?.pham_index)
}

pub fn unicycle_count(g: &DirectedMultigraph) -> Result<BigUint> {
    Ok(summarize(g)?.unicycles)
}

pub fn minimal_tour_length(g: &DirectedMultigraph) -> Result<BigUint> {
    Ok(summarize(g)?.minimal_tour_length)
}
