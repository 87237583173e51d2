use super::{expand_capped, graph_polynomial_factors};
use crate::certificate::{AtnCertificate, Witness};
use crate::error::Result;
use crate::exec::Limits;
use crate::graph::Graph;
use num_bigint::BigInt;

/// Alon-Tarsi number from the graph polynomial: the least `b` such that some
/// monomial with every exponent below `b` survives with a nonzero coefficient.
///
/// Caps are tried in increasing order. The first nonzero capped expansion has
/// all surviving exponents maxed at exactly `b - 1`; the certificate is the
/// surviving monomial with the lexicographically largest exponent vector,
/// i.e. the one whose sorted variable-index word is smallest (x0²x1 for K3).
pub fn atn_from_polynomial(g: &Graph, limits: &Limits) -> Result<AtnCertificate> {
    let factors = graph_polynomial_factors(g);
    let n = g.n();
    let m = g.m() as u32;
    let mut cap = 0u32;
    loop {
        // Homogeneity: total degree m cannot fit under cap * n.
        if cap as u64 * n as u64 >= m as u64 {
            let p = expand_capped(&factors, n, cap, limits)?;
            let last = p.terms().next_back().map(|(e, c)| (e.0.clone(), c.clone()));
            if let Some((exponents, coefficient)) = last {
                return Ok(AtnCertificate {
                    atn: cap as usize + 1,
                    witness: Witness::Monomial {
                        exponents,
                        coefficient,
                    },
                });
            }
        }
        cap += 1;
    }
}

/// Exact coefficient of `∏ x_v^{target[v]}` in the graph polynomial, by
/// factor-by-factor descent. A branch is cut as soon as some vertex needs more
/// of its exponent than its remaining incident factors can supply.
pub fn coefficient_of(g: &Graph, target: &[u32]) -> BigInt {
    assert_eq!(target.len(), g.n(), "target length must equal vertex count");
    let total: u64 = target.iter().map(|&t| t as u64).sum();
    if total != g.m() as u64 {
        return BigInt::from(0);
    }
    let mut remaining = g.degrees().iter().map(|&d| d as u32).collect::<Vec<_>>();
    if target.iter().zip(&remaining).any(|(t, r)| t > r) {
        return BigInt::from(0);
    }
    let mut need = target.to_vec();
    BigInt::from(descend(g.edges(), 0, &mut need, &mut remaining))
}

// The signed count is bounded by 2^m; i128 is exact for every graph this
// enumeration could finish on.
fn descend(edges: &[(usize, usize)], i: usize, need: &mut [u32], remaining: &mut [u32]) -> i128 {
    let Some(&(u, v)) = edges.get(i) else {
        return 1;
    };
    remaining[u] -= 1;
    remaining[v] -= 1;
    let mut sum = 0i128;
    if need[u] > 0 {
        need[u] -= 1;
        if need[u] <= remaining[u] && need[v] <= remaining[v] {
            sum += descend(edges, i + 1, need, remaining);
        }
        need[u] += 1;
    }
    if need[v] > 0 {
        need[v] -= 1;
        if need[u] <= remaining[u] && need[v] <= remaining[v] {
            sum -= descend(edges, i + 1, need, remaining);
        }
        need[v] += 1;
    }
    remaining[u] += 1;
    remaining[v] += 1;
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn mono(c: &AtnCertificate) -> (Vec<u32>, BigInt) {
        match &c.witness {
            Witness::Monomial {
                exponents,
                coefficient,
            } => (exponents.clone(), coefficient.clone()),
            _ => panic!("expected a monomial certificate"),
        }
    }

    #[test]
    fn edgeless_is_one() {
        let c = atn_from_polynomial(&Graph::empty(5), &Limits::default()).unwrap();
        assert_eq!(c.atn, 1);
        assert_eq!(mono(&c), (vec![0; 5], BigInt::from(1)));
        assert_eq!(
            atn_from_polynomial(&Graph::empty(0), &Limits::default())
                .unwrap()
                .atn,
            1
        );
    }

    #[test]
    fn k3_certificate() {
        let c = atn_from_polynomial(&named("K3").unwrap(), &Limits::default()).unwrap();
        assert_eq!(c.atn, 3);
        assert_eq!(mono(&c), (vec![2, 1, 0], BigInt::from(1)));
    }

    #[test]
    fn c4_certificate() {
        let c = atn_from_polynomial(&named("C4").unwrap(), &Limits::default()).unwrap();
        assert_eq!(c.atn, 2);
        let (e, k) = mono(&c);
        assert_eq!(e, vec![1, 1, 1, 1]);
        assert_eq!(k.magnitude(), &2u32.into());
    }

    #[test]
    fn coefficient_examples() {
        let k3 = named("K3").unwrap();
        assert_eq!(coefficient_of(&k3, &[1, 1, 1]), BigInt::from(0));
        assert_eq!(coefficient_of(&k3, &[2, 1, 0]), BigInt::from(1));
        assert_eq!(coefficient_of(&k3, &[0, 1, 2]), BigInt::from(-1));
        let c4 = named("C4").unwrap();
        assert_eq!(coefficient_of(&c4, &[1, 1, 1, 1]).magnitude(), &2u32.into());
        let k2 = named("K2").unwrap();
        assert_eq!(coefficient_of(&k2, &[1, 0]), BigInt::from(1));
        assert_eq!(coefficient_of(&k2, &[0, 1]), BigInt::from(-1));
        assert_eq!(coefficient_of(&k2, &[1, 1]), BigInt::from(0));
    }
}
