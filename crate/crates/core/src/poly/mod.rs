//! Exact sparse multivariate polynomials over arbitrary-precision integers.

mod atn;
mod expand;

pub use atn::{atn_from_polynomial, coefficient_of};
pub use expand::{expand_capped, expand_full, graph_polynomial_factors, Binomial};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

/// Exponents of one monomial, one entry per variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn max_exponent(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// Map from exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(ExponentVector(vec![0; nvars]), BigInt::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The zero polynomial is the one with no terms.
    pub fn is_zero(&self) -> bool {
        self.is_empty()
    }

    /// Terms in increasing lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms
            .get(&ExponentVector(exps.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Adds `coeff` to the term at `exps`, dropping it if it cancels.
    pub fn add_term(&mut self, exps: ExponentVector, coeff: BigInt) {
        assert_eq!(exps.0.len(), self.nvars, "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Exact evaluation at an integer point.
    pub fn evaluate(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.nvars, "point length");
        self.terms
            .iter()
            .map(|(e, c)| {
                e.0.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| acc * x.pow(k))
            })
            .sum()
    }

    /// Debug dump: one line `coeff e_0 … e_{n-1}` per term, sorted by
    /// exponent vector.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (e, c) in &self.terms {
            s.push_str(&c.to_string());
            for k in &e.0 {
                s.push(' ');
                s.push_str(&k.to_string());
            }
            s.push('\n');
        }
        s
    }

    pub(crate) fn from_sorted_terms(nvars: usize, terms: Vec<(ExponentVector, BigInt)>) -> Self {
        SparsePolynomial {
            nvars,
            terms: terms.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector(v.to_vec())
    }

    #[test]
    fn add_term_cancels() {
        let mut p = SparsePolynomial::zero(2);
        p.add_term(ev(&[1, 0]), BigInt::from(3));
        p.add_term(ev(&[0, 1]), BigInt::from(1));
        p.add_term(ev(&[1, 0]), BigInt::from(-3));
        assert_eq!(p.len(), 1);
        assert_eq!(p.coefficient(&[0, 1]), BigInt::from(1));
        assert_eq!(p.coefficient(&[1, 0]), BigInt::zero());
    }

    #[test]
    fn evaluate_binomial() {
        let mut p = SparsePolynomial::zero(2);
        p.add_term(ev(&[1, 0]), BigInt::from(1));
        p.add_term(ev(&[0, 1]), BigInt::from(-1));
        assert_eq!(
            p.evaluate(&[BigInt::from(5), BigInt::from(2)]),
            BigInt::from(3)
        );
        assert_eq!(p.dump(), "-1 0 1\n1 1 0\n");
    }

    #[test]
    fn one_is_constant() {
        let p = SparsePolynomial::one(3);
        assert_eq!(p.evaluate(&[7.into(), 8.into(), 9.into()]), BigInt::one());
    }
}
