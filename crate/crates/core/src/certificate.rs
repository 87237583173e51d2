use crate::error::Result;
use crate::exec::Limits;
use crate::graph::Graph;
use crate::orient::{eulerian_census, EulerianCensus, Orientation};
use crate::poly::coefficient_of;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A monomial of the graph polynomial with nonzero coefficient.
    Monomial {
        exponents: Vec<u32>,
        coefficient: BigInt,
    },
    /// An orientation whose even and odd Eulerian subdigraph counts differ.
    Orientation {
        orientation: Orientation,
        census: EulerianCensus,
    },
}

/// Witness that a graph's Alon-Tarsi number is at most `atn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtnCertificate {
    pub atn: usize,
    pub witness: Witness,
}

impl AtnCertificate {
    /// Re-checks the witness against `g` from scratch.
    pub fn verify(&self, g: &Graph, limits: &Limits) -> Result<bool> {
        Ok(match &self.witness {
            Witness::Monomial {
                exponents,
                coefficient,
            } => {
                let max = exponents.iter().copied().max().unwrap_or(0) as usize;
                exponents.len() == g.n()
                    && max + 1 == self.atn
                    && !coefficient.is_zero()
                    && coefficient_of(g, exponents) == *coefficient
            }
            Witness::Orientation {
                orientation,
                census,
            } => {
                orientation.base() == g
                    && orientation.max_outdegree() as usize + 1 == self.atn
                    && eulerian_census(orientation, limits)? == *census
                    && census.is_alon_tarsi()
            }
        })
    }

    pub fn to_json(&self) -> Value {
        match &self.witness {
            Witness::Monomial {
                exponents,
                coefficient,
            } => json!({
                "kind": "monomial",
                "atn": self.atn,
                "exponents": exponents,
                "coefficient": bigint_json(coefficient),
            }),
            Witness::Orientation {
                orientation,
                census,
            } => json!({
                "kind": "orientation",
                "atn": self.atn,
                "arcs": orientation.arcs().iter().map(|&(t, h)| [t, h]).collect::<Vec<_>>(),
                "orientation": orientation.to_hex(),
                "census": {"even": census.even, "odd": census.odd},
            }),
        }
    }
}

/// Small integers as JSON numbers, anything wider as a decimal string.
pub fn bigint_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}
