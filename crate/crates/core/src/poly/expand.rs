//! Capped expansion of products of binomials `x_p - x_q`.
//!
//! Intermediate polynomials are kept as vectors of `(packed key, coefficient)`
//! sorted by key. Variable 0 occupies the most significant field of the key, so
//! key order is lexicographic order of exponent vectors. Multiplying by `x_p`
//! adds a constant to every key without carries, which keeps each of the two
//! partial products sorted; the new polynomial is a linear merge of the two.

use super::{ExponentVector, SparsePolynomial};
use crate::error::{Error, Result};
use crate::exec::{Exec, Limits};
use crate::graph::Graph;
use num_bigint::BigInt;
use num_traits::Zero;

/// The factor `x_plus - x_minus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Binomial {
    pub plus: usize,
    pub minus: usize,
}

/// One factor per edge `(u, v)`, `u < v`, as `x_u - x_v`, in canonical edge
/// order.
pub fn graph_polynomial_factors(g: &Graph) -> Vec<Binomial> {
    g.edges()
        .iter()
        .map(|&(u, v)| Binomial { plus: u, minus: v })
        .collect()
}

struct Packing {
    nvars: usize,
    width: u32,
    field: u128,
}

impl Packing {
    fn new(nvars: usize, max_value: u32) -> Result<Self> {
        let width = (32 - max_value.leading_zeros()).max(1);
        let bits = nvars * width as usize;
        if bits > 128 {
            return Err(Error::guard("packed exponent bits", 128, bits));
        }
        Ok(Packing {
            nvars,
            width,
            field: (1u128 << width) - 1,
        })
    }

    fn shift(&self, var: usize) -> u32 {
        (self.nvars - 1 - var) as u32 * self.width
    }

    fn unit(&self, var: usize) -> u128 {
        1u128 << self.shift(var)
    }

    fn get(&self, key: u128, var: usize) -> u32 {
        ((key >> self.shift(var)) & self.field) as u32
    }

    fn unpack(&self, key: u128) -> ExponentVector {
        ExponentVector((0..self.nvars).map(|v| self.get(key, v)).collect())
    }
}

type Terms = Vec<(u128, BigInt)>;

/// Expands `∏ (x_plus - x_minus)` keeping only monomials whose every exponent is
/// at most `cap`.
///
/// Exponents never decrease under multiplication, so a term is dropped as soon
/// as one exponent exceeds `cap`. A term is also dropped when the remaining
/// factors cannot be absorbed without exceeding `cap`, which never removes a
/// term that could reach the final result. With `cap >= factors.len()` this is
/// the full expansion.
pub fn expand_capped(
    factors: &[Binomial],
    nvars: usize,
    cap: u32,
    limits: &Limits,
) -> Result<SparsePolynomial> {
    for f in factors {
        assert!(f.plus < nvars && f.minus < nvars && f.plus != f.minus);
    }
    // remaining[t][v]: factors t.. touching v.
    let mut remaining = vec![vec![0u32; nvars]; factors.len() + 1];
    for t in (0..factors.len()).rev() {
        remaining[t] = remaining[t + 1].clone();
        remaining[t][factors[t].plus] += 1;
        remaining[t][factors[t].minus] += 1;
    }
    let max_value = remaining[0].iter().copied().max().unwrap_or(0).min(cap);
    let packing = Packing::new(nvars, max_value)?;

    let feasible = |key: u128, t: usize| -> bool {
        let need = (factors.len() - t) as u64;
        let room: u64 = (0..nvars)
            .map(|v| (cap - packing.get(key, v)).min(remaining[t][v]) as u64)
            .sum();
        room >= need
    };

    let mut terms: Terms = vec![(0, BigInt::from(1))];
    if !feasible(0, 0) {
        terms.clear();
    }
    for (t, f) in factors.iter().enumerate() {
        if terms.is_empty() {
            break;
        }
        terms = multiply_step(&terms, f, &packing, cap, t + 1, &feasible, limits.exec);
        if terms.len() > limits.max_terms {
            return Err(Error::MemoryGuardExceeded {
                limit: limits.max_terms,
                live: terms.len(),
            });
        }
    }
    Ok(SparsePolynomial::from_sorted_terms(
        nvars,
        terms
            .into_iter()
            .map(|(k, c)| (packing.unpack(k), c))
            .collect(),
    ))
}

/// Full expansion of the product.
pub fn expand_full(
    factors: &[Binomial],
    nvars: usize,
    limits: &Limits,
) -> Result<SparsePolynomial> {
    expand_capped(factors, nvars, factors.len() as u32, limits)
}

fn multiply_step<F>(
    terms: &Terms,
    f: &Binomial,
    packing: &Packing,
    cap: u32,
    next_t: usize,
    feasible: &F,
    exec: Exec,
) -> Terms
where
    F: Fn(u128, usize) -> bool + Sync,
{
    let lift = |var: usize, negate: bool| {
        let unit = packing.unit(var);
        move |(key, c): &(u128, BigInt)| {
            if packing.get(*key, var) >= cap {
                return None;
            }
            let k = key + unit;
            feasible(k, next_t).then(|| (k, if negate { -c } else { c.clone() }))
        }
    };
    let plus = lift(f.plus, false);
    let minus = lift(f.minus, true);

    #[cfg(feature = "parallel")]
    if exec.is_parallel() && terms.len() >= PARALLEL_THRESHOLD {
        return parallel::step(terms, &plus, &minus);
    }
    let _ = exec;
    let a: Terms = terms.iter().filter_map(&plus).collect();
    let b: Terms = terms.iter().filter_map(&minus).collect();
    merge(&a, &b)
}

#[cfg(feature = "parallel")]
const PARALLEL_THRESHOLD: usize = 4096;

/// Merges two key-sorted term lists, adding coefficients and dropping zeros.
fn merge(a: &[(u128, BigInt)], b: &[(u128, BigInt)]) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = &a[i].1 + &b[j].1;
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(feature = "parallel")]
mod parallel {
    use super::{merge, Terms};
    use num_bigint::BigInt;
    use rayon::prelude::*;

    /// Splits the key space at quantiles of the first list and merges each
    /// slice independently. Concatenating the slices in key order gives the
    /// same vector as the sequential merge.
    pub(super) fn step<P, M>(terms: &Terms, plus: &P, minus: &M) -> Terms
    where
        P: Fn(&(u128, BigInt)) -> Option<(u128, BigInt)> + Sync,
        M: Fn(&(u128, BigInt)) -> Option<(u128, BigInt)> + Sync,
    {
        let a: Terms = terms.par_iter().filter_map(plus).collect();
        let b: Terms = terms.par_iter().filter_map(minus).collect();
        let chunks = (rayon::current_num_threads() * 4).max(1);
        let mut bounds: Vec<u128> = (1..chunks)
            .filter_map(|i| a.get(i * a.len() / chunks).map(|t| t.0))
            .collect();
        bounds.dedup();
        let mut ranges = Vec::with_capacity(bounds.len() + 1);
        let (mut ia, mut ib) = (0, 0);
        for &k in &bounds {
            let ea = a.partition_point(|t| t.0 < k);
            let eb = b.partition_point(|t| t.0 < k);
            ranges.push((ia..ea, ib..eb));
            ia = ea;
            ib = eb;
        }
        ranges.push((ia..a.len(), ib..b.len()));
        ranges
            .into_par_iter()
            .map(|(ra, rb)| merge(&a[ra], &b[rb]))
            .collect::<Vec<_>>()
            .concat()
    }
}
