//! Orientations, Eulerian subdigraph census, and the orientation route to the
//! Alon-Tarsi number.
//!
//! An Eulerian subdigraph is any arc subset with in-degree equal to out-degree
//! at every vertex. It need not be connected, and the empty subset counts (as
//! even). Out-degree is the convention tying an orientation to an exponent
//! vector.

use crate::certificate::{AtnCertificate, Witness};
use crate::error::{Error, Result};
use crate::exec::{find_map_first, Limits};
use crate::graph::Graph;
use crate::poly::coefficient_of;
use num_bigint::BigInt;
use serde_json::{json, Value};

/// Direction bit per edge in canonical order: `false` is `u → v`, `true` is
/// `v → u` for the stored pair `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    base: Graph,
    bits: Vec<bool>,
}

impl Orientation {
    pub fn new(base: Graph, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != base.m() {
            return Err(Error::Precondition(format!(
                "orientation has {} bits for {} edges",
                bits.len(),
                base.m()
            )));
        }
        Ok(Orientation { base, bits })
    }

    /// All edges oriented from the smaller to the larger endpoint.
    pub fn ascending(base: Graph) -> Self {
        let bits = vec![false; base.m()];
        Orientation { base, bits }
    }

    /// Parses the hex form written by [`Orientation::to_hex`].
    pub fn from_hex(base: Graph, hex: &str) -> Result<Self> {
        let m = base.m();
        let digits = hex.trim().trim_start_matches("0x");
        if digits.len() != m.div_ceil(4) {
            return Err(Error::Parse(format!(
                "orientation {hex:?} should have {} hex digits for {m} edges",
                m.div_ceil(4)
            )));
        }
        let mut bits = Vec::with_capacity(digits.len() * 4);
        for ch in digits.chars() {
            let d = ch
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("bad hex digit {ch:?}")))?;
            bits.extend((0..4).rev().map(|b| d >> b & 1 == 1));
        }
        if bits[m..].iter().any(|&b| b) {
            return Err(Error::Parse("padding bits must be zero".into()));
        }
        bits.truncate(m);
        Orientation::new(base, bits)
    }

    /// Edge 0 is the most significant bit; the bit string is right-padded with
    /// zeros to a whole number of hex digits.
    pub fn to_hex(&self) -> String {
        self.bits
            .chunks(4)
            .map(|c| {
                let v = c
                    .iter()
                    .chain(std::iter::repeat(&false))
                    .take(4)
                    .fold(0u32, |acc, &b| acc << 1 | b as u32);
                char::from_digit(v, 16).unwrap()
            })
            .collect()
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Arcs `(tail, head)` in canonical edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.base
            .edges()
            .iter()
            .zip(&self.bits)
            .map(|(&(u, v), &flip)| if flip { (v, u) } else { (u, v) })
            .collect()
    }

    pub fn outdegrees(&self) -> Vec<u32> {
        let mut out = vec![0; self.base.n()];
        for (t, _) in self.arcs() {
            out[t] += 1;
        }
        out
    }

    pub fn max_outdegree(&self) -> u32 {
        self.outdegrees().into_iter().max().unwrap_or(0)
    }

    pub fn reversed(&self) -> Orientation {
        Orientation {
            base: self.base.clone(),
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EulerianCensus {
    pub even: u64,
    pub odd: u64,
}

impl EulerianCensus {
    pub fn is_alon_tarsi(&self) -> bool {
        self.even != self.odd
    }

    pub fn difference(&self) -> i128 {
        self.even as i128 - self.odd as i128
    }

    pub fn to_json(&self, max_outdegree: u32) -> Value {
        json!({
            "even": self.even,
            "odd": self.odd,
            "maxOutdegree": max_outdegree,
            "alonTarsi": self.is_alon_tarsi(),
        })
    }
}

/// Counts Eulerian subdigraphs of `d` by arc parity.
pub fn eulerian_census(d: &Orientation, limits: &Limits) -> Result<EulerianCensus> {
    let m = d.base.m();
    if m > limits.max_census_edges {
        return Err(Error::guard("census edges", limits.max_census_edges, m));
    }
    Ok(census_of_arcs(&d.arcs(), d.base.n()))
}

fn census_of_arcs(arcs: &[(usize, usize)], n: usize) -> EulerianCensus {
    let mut remaining = vec![0i32; n];
    for &(t, h) in arcs {
        remaining[t] += 1;
        remaining[h] += 1;
    }
    let mut balance = vec![0i32; n];
    let mut census = EulerianCensus::default();
    census_step(arcs, 0, 0, &mut balance, &mut remaining, &mut census);
    census
}

// A vertex whose |out - in| exceeds its undecided arcs can never balance.
fn census_step(
    arcs: &[(usize, usize)],
    i: usize,
    taken: usize,
    balance: &mut [i32],
    remaining: &mut [i32],
    census: &mut EulerianCensus,
) {
    let Some(&(t, h)) = arcs.get(i) else {
        if taken.is_multiple_of(2) {
            census.even += 1;
        } else {
            census.odd += 1;
        }
        return;
    };
    remaining[t] -= 1;
    remaining[h] -= 1;
    let ok = |b: &[i32], r: &[i32]| b[t].abs() <= r[t] && b[h].abs() <= r[h];
    if ok(balance, remaining) {
        census_step(arcs, i + 1, taken, balance, remaining, census);
    }
    balance[t] += 1;
    balance[h] -= 1;
    if ok(balance, remaining) {
        census_step(arcs, i + 1, taken + 1, balance, remaining, census);
    }
    balance[t] -= 1;
    balance[h] += 1;
    remaining[t] += 1;
    remaining[h] += 1;
}

pub fn is_alon_tarsi(d: &Orientation, limits: &Limits) -> Result<bool> {
    Ok(eulerian_census(d, limits)?.is_alon_tarsi())
}

/// Alon-Tarsi number as one more than the least maximum out-degree of an
/// Alon-Tarsi orientation.
///
/// Out-degree bounds are tried in increasing order; for each bound the
/// orientations respecting it are enumerated in bit-vector order (edge 0 most
/// significant, `u → v` first), so the certificate is the first Alon-Tarsi
/// orientation in that order among those achieving the minimum. Work is
/// sharded by fixed bit prefixes; the first hit in prefix order wins.
pub fn atn_from_orientations(g: &Graph, limits: &Limits) -> Result<AtnCertificate> {
    let m = g.m();
    if m > limits.max_census_edges {
        return Err(Error::guard("census edges", limits.max_census_edges, m));
    }
    let start = if m == 0 { 0 } else { m.div_ceil(g.n()) as u32 };
    for bound in start..=m as u32 {
        let search = BoundedSearch::new(g, bound);
        let prefix_len = m.min(PREFIX_BITS);
        let prefixes = search.prefixes(prefix_len);
        let hit = find_map_first(limits.exec, &prefixes, |prefix| search.first_from(prefix));
        if let Some((bits, census)) = hit {
            let orientation = Orientation::new(g.clone(), bits)?;
            return Ok(AtnCertificate {
                atn: bound as usize + 1,
                witness: Witness::Orientation {
                    orientation,
                    census,
                },
            });
        }
    }
    unreachable!("every acyclic orientation is Alon-Tarsi")
}

const PREFIX_BITS: usize = 6;

struct BoundedSearch<'a> {
    g: &'a Graph,
    bound: u32,
}

impl BoundedSearch<'_> {
    fn new(g: &Graph, bound: u32) -> BoundedSearch<'_> {
        BoundedSearch { g, bound }
    }

    fn prefixes(&self, len: usize) -> Vec<Vec<bool>> {
        let mut out = Vec::new();
        let mut bits = Vec::with_capacity(len);
        let mut outdeg = vec![0u32; self.g.n()];
        self.collect_prefixes(len, &mut bits, &mut outdeg, &mut out);
        out
    }

    fn collect_prefixes(
        &self,
        len: usize,
        bits: &mut Vec<bool>,
        outdeg: &mut [u32],
        out: &mut Vec<Vec<bool>>,
    ) {
        if bits.len() == len {
            out.push(bits.clone());
            return;
        }
        let (u, v) = self.g.edges()[bits.len()];
        for (flip, tail) in [(false, u), (true, v)] {
            if outdeg[tail] < self.bound {
                outdeg[tail] += 1;
                bits.push(flip);
                self.collect_prefixes(len, bits, outdeg, out);
                bits.pop();
                outdeg[tail] -= 1;
            }
        }
    }

    fn first_from(&self, prefix: &[bool]) -> Option<(Vec<bool>, EulerianCensus)> {
        let mut outdeg = vec![0u32; self.g.n()];
        for (&(u, v), &flip) in self.g.edges().iter().zip(prefix) {
            outdeg[if flip { v } else { u }] += 1;
        }
        let mut bits = prefix.to_vec();
        self.extend(&mut bits, &mut outdeg)
    }

    fn extend(
        &self,
        bits: &mut Vec<bool>,
        outdeg: &mut [u32],
    ) -> Option<(Vec<bool>, EulerianCensus)> {
        let edges = self.g.edges();
        if bits.len() == edges.len() {
            let arcs: Vec<_> = edges
                .iter()
                .zip(bits.iter())
                .map(|(&(u, v), &f)| if f { (v, u) } else { (u, v) })
                .collect();
            let census = census_of_arcs(&arcs, self.g.n());
            return census.is_alon_tarsi().then(|| (bits.clone(), census));
        }
        let (u, v) = edges[bits.len()];
        for (flip, tail) in [(false, u), (true, v)] {
            if outdeg[tail] < self.bound {
                outdeg[tail] += 1;
                bits.push(flip);
                let found = self.extend(bits, outdeg);
                bits.pop();
                outdeg[tail] -= 1;
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }
}

/// Checks `|coefficient of the out-degree monomial| = |even - odd|`.
pub fn duality_check(g: &Graph, d: &Orientation, limits: &Limits) -> Result<bool> {
    let census = eulerian_census(d, limits)?;
    let coeff = coefficient_of(g, &d.outdegrees());
    Ok(coeff.magnitude() == BigInt::from(census.difference()).magnitude())
}
