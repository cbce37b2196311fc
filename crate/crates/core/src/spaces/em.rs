//! Eilenberg-MacLane spaces K(G, n) in the minimal model: a k-simplex is
//! a normalized G-valued n-cocycle on the standard k-simplex.
//!
//! A cocycle is stored as its value vector over the increasing (n+1)-tuples
//! drawn from {0..k}, in lexicographic order. Faces and degeneracies pull
//! back along the coface and codegeneracy maps of the indexing tuples; the
//! pullback of a tuple collapsed by a codegeneracy is degenerate, where a
//! normalized cochain takes the identity value.

use crate::error::{EngineError, Result};
use crate::groups::FiniteGroup;
use crate::kan::{rebound_truncated, KanComplex};
use crate::limits::Limits;
use crate::simplicial::{tuples, DenseLevels};

use super::{classifying_space, discrete};

struct CocycleLevels<'a> {
    g: &'a FiniteGroup,
    n: usize,
}

impl CocycleLevels<'_> {
    /// The coboundary on one (n+2)-tuple: the alternating product of the
    /// cochain's values on its faces.
    fn coboundary(&self, cells: &[Vec<usize>], c: &[usize], t: &[usize]) -> usize {
        let mut acc = self.g.identity();
        for i in 0..t.len() {
            let mut f = t.to_vec();
            f.remove(i);
            let v = c[cells.iter().position(|u| *u == f).unwrap()];
            acc = self.g.mul(acc, if i % 2 == 0 { v } else { self.g.inv(v) });
        }
        acc
    }
}

impl DenseLevels for CocycleLevels<'_> {
    type Key = Vec<usize>;

    fn level(&self, k: usize) -> Vec<Vec<usize>> {
        let cells = tuples(k, self.n + 1);
        let conditions = tuples(k, self.n + 2);
        let mut out = Vec::new();
        let mut c = vec![0usize; cells.len()];
        loop {
            if conditions
                .iter()
                .all(|t| self.coboundary(&cells, &c, t) == self.g.identity())
            {
                out.push(c.clone());
            }
            let mut i = 0;
            loop {
                if i == c.len() {
                    return out;
                }
                c[i] += 1;
                if c[i] < self.g.order() {
                    break;
                }
                c[i] = 0;
                i += 1;
            }
        }
    }

    fn face(&self, k: usize, key: &Vec<usize>, i: usize) -> Vec<usize> {
        let dst = tuples(k, self.n + 1);
        tuples(k - 1, self.n + 1)
            .iter()
            .map(|t| {
                let im: Vec<usize> = t.iter().map(|&v| if v < i { v } else { v + 1 }).collect();
                key[dst.iter().position(|u| *u == im).unwrap()]
            })
            .collect()
    }

    fn degeneracy(&self, k: usize, key: &Vec<usize>, i: usize) -> Vec<usize> {
        let dst = tuples(k, self.n + 1);
        tuples(k + 1, self.n + 1)
            .iter()
            .map(|t| {
                let im: Vec<usize> = t.iter().map(|&v| if v <= i { v } else { v - 1 }).collect();
                if im.windows(2).any(|w| w[0] == w[1]) {
                    self.g.identity()
                } else {
                    key[dst.iter().position(|u| *u == im).unwrap()]
                }
            })
            .collect()
    }
}

pub fn eilenberg_maclane(g: &FiniteGroup, n: usize, limits: &Limits) -> Result<KanComplex> {
    match n {
        0 => discrete(g.order(), limits),
        1 => classifying_space(g, limits),
        _ => {
            if !g.is_abelian() {
                return Err(EngineError::NonAbelian { name: g.name().to_string() });
            }
            // The top stored level filters |G|^(n+2) candidate cochains;
            // refuse upfront rather than grind through a hopeless loop.
            let candidates = g.order().max(2).saturating_pow(n as u32 + 2);
            if candidates > limits.level_cap {
                return Err(EngineError::SizeCapExceeded {
                    dim: n + 1,
                    count: candidates,
                    cap: limits.level_cap,
                });
            }
            let (_, space) = rebound_truncated(&CocycleLevels { g, n }, n, limits)?;
            Ok(space)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, symmetric};
    use crate::testutil::z2_nerve_by_hand;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn low_degrees_reduce_to_sets_and_nerves() {
        let k0 = eilenberg_maclane(&cyclic(3), 0, &lim()).unwrap();
        assert_eq!(k0.vertex_count(), 3);
        let k1 = eilenberg_maclane(&cyclic(2), 1, &lim()).unwrap();
        assert_eq!(k1.data(), &z2_nerve_by_hand());
    }

    #[test]
    fn k_z2_2_has_the_cocycle_counts() {
        let k = eilenberg_maclane(&cyclic(2), 2, &lim()).unwrap();
        assert_eq!(k.bound(), 3);
        // dense: 1, 1, 2, 2^4/2; one nondeg 2-cell, four nondeg 3-cells
        assert_eq!(
            (0..=3).map(|d| k.total_count(d)).collect::<Vec<_>>(),
            vec![1, 1, 2, 8]
        );
        assert_eq!(
            (0..=3).map(|d| k.nondeg_count(d)).collect::<Vec<_>>(),
            vec![1, 0, 1, 4]
        );
    }

    #[test]
    fn k_z3_2_counts() {
        let k = eilenberg_maclane(&cyclic(3), 2, &lim()).unwrap();
        assert_eq!(k.total_count(2), 3);
        assert_eq!(k.total_count(3), 27);
        assert_eq!(k.nondeg_count(3), 20);
    }

    #[test]
    fn nonabelian_coefficients_are_refused_above_degree_one() {
        assert!(matches!(
            eilenberg_maclane(&symmetric(3), 2, &lim()),
            Err(EngineError::NonAbelian { .. })
        ));
        assert!(eilenberg_maclane(&symmetric(3), 1, &lim()).is_ok());
    }

    #[test]
    fn hopeless_sizes_are_refused_upfront() {
        assert!(matches!(
            eilenberg_maclane(&cyclic(30), 4, &lim()),
            Err(EngineError::SizeCapExceeded { .. })
        ));
    }
}
