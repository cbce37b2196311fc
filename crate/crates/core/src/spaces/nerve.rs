//! Nerves of finite groupoids and what is built from them: classifying
//! spaces, the maps induced by group homomorphisms, and the universe of
//! finite sets.
//!
//! A k-simplex of the nerve is a composable string of k arrows together
//! with its start object (so level 0 still knows where it sits). Faces
//! compose adjacent arrows or drop an end; degeneracies insert identities.
//! The nerve of a groupoid is 1-truncated, so it is stored at bound 2.

use crate::error::{EngineError, Result};
use crate::groupoids::FiniteGroupoid;
use crate::groups::{symmetric, FiniteGroup, GroupHom};
use crate::kan::{kan_check, rebound_truncated, KanComplex};
use crate::limits::Limits;
use crate::maps::SimplicialMap;
use crate::simplicial::{assemble, coproduct_data, DenseLevels};

/// Start object plus a composable arrow string.
pub(crate) type NerveKey = (usize, Vec<usize>);

pub(crate) struct NerveLevels<'a> {
    pub g: &'a FiniteGroupoid,
}

impl NerveLevels<'_> {
    fn vertex(&self, key: &NerveKey, i: usize) -> usize {
        if i == 0 {
            key.0
        } else {
            self.g.dst(key.1[i - 1])
        }
    }
}

impl DenseLevels for NerveLevels<'_> {
    type Key = NerveKey;

    fn level(&self, k: usize) -> Vec<NerveKey> {
        let mut out: Vec<NerveKey> = (0..self.g.objects()).map(|x| (x, Vec::new())).collect();
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|(x, arrows)| {
                    let at = if arrows.is_empty() { x } else { self.g.dst(*arrows.last().unwrap()) };
                    (0..self.g.arrows())
                        .filter(move |&f| self.g.src(f) == at)
                        .map(move |f| {
                            let mut next = arrows.clone();
                            next.push(f);
                            (x, next)
                        })
                })
                .collect();
        }
        out
    }

    fn face(&self, k: usize, key: &NerveKey, i: usize) -> NerveKey {
        let (x, arrows) = key;
        if i == 0 {
            (self.vertex(key, 1), arrows[1..].to_vec())
        } else if i == k {
            (*x, arrows[..k - 1].to_vec())
        } else {
            let mut next = arrows.clone();
            next[i - 1] = self.g.then(arrows[i - 1], arrows[i]);
            next.remove(i);
            (*x, next)
        }
    }

    fn degeneracy(&self, _k: usize, key: &NerveKey, i: usize) -> NerveKey {
        let mut next = key.1.clone();
        next.insert(i, self.g.identity_at(self.vertex(key, i)));
        (key.0, next)
    }
}

pub fn nerve_groupoid(g: &FiniteGroupoid, limits: &Limits) -> Result<KanComplex> {
    let (_, space) = rebound_truncated(&NerveLevels { g }, 1, limits)?;
    Ok(space)
}

pub fn classifying_space(group: &FiniteGroup, limits: &Limits) -> Result<KanComplex> {
    nerve_groupoid(&FiniteGroupoid::one_object(group), limits)
}

/// The group nerve at an arbitrary stored bound, with its key tables. The
/// one-object groupoid numbers its arrows by the group's own element
/// indices, so nerve keys are element strings.
pub(crate) fn group_nerve_assembled(
    group: &FiniteGroup,
    bound: usize,
    limits: &Limits,
) -> Result<(crate::simplicial::Assembled<NerveKey>, KanComplex)> {
    let gpd = FiniteGroupoid::one_object(group);
    let assembled = assemble(&NerveLevels { g: &gpd }, bound, limits)?;
    let space = kan_check(assembled.data.clone(), limits)?;
    Ok((assembled, space))
}

/// B of a homomorphism: the induced map of classifying spaces.
pub fn classifying_map(hom: &GroupHom, limits: &Limits) -> Result<SimplicialMap> {
    let (a, _) = group_nerve_assembled(hom.source(), 2, limits)?;
    let (b, _) = group_nerve_assembled(hom.target(), 2, limits)?;
    let images = (0..=2usize)
        .map(|dim| {
            (0..a.data.nondeg_count(dim))
                .map(|id| {
                    let (_, arrows) = a.key_of_nondeg(dim, id);
                    let mapped = (0, arrows.iter().map(|&f| hom.apply(f)).collect());
                    b.ref_of(dim, &mapped).clone()
                })
                .collect()
        })
        .collect();
    SimplicialMap::new(a.data.clone(), b.data.clone(), images)
}

/// The universe of finite sets of size at most n: one classifying-space
/// component per cardinality, B(S_0) through B(S_n).
pub fn symmetric_universe(n: usize, limits: &Limits) -> Result<KanComplex> {
    if n > limits.universe_cap {
        return Err(EngineError::UniverseCap { requested: n, cap: limits.universe_cap });
    }
    let mut data = classifying_space(&symmetric(0), limits)?.into_data();
    for k in 1..=n {
        let next = classifying_space(&symmetric(k), limits)?;
        (data, _) = coproduct_data(&data, next.data())?;
    }
    kan_check(data, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::cyclic;
    use crate::testutil::z2_nerve_by_hand;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn the_z2_nerve_comes_out_exactly_as_written_by_hand() {
        let bz2 = classifying_space(&cyclic(2), &lim()).unwrap();
        assert_eq!(bz2.data(), &z2_nerve_by_hand());
    }

    #[test]
    fn nerve_counts_for_s3() {
        let b = classifying_space(&symmetric(3), &lim()).unwrap();
        assert_eq!(b.vertex_count(), 1);
        assert_eq!(b.nondeg_count(1), 5);
        assert_eq!(b.nondeg_count(2), 25);
        assert_eq!(b.total_count(2), 36);
    }

    #[test]
    fn the_pair_groupoid_nerve_is_a_contractible_looking_square() {
        let gpd = FiniteGroupoid::connected(2, &cyclic(1));
        let n = nerve_groupoid(&gpd, &lim()).unwrap();
        assert_eq!(n.vertex_count(), 2);
        assert_eq!(n.nondeg_count(1), 2);
        assert_eq!(n.nondeg_count(2), 2);
    }

    #[test]
    fn induced_maps_validate() {
        let incl = GroupHom::alternating_in_symmetric(3);
        let f = classifying_map(&incl, &lim()).unwrap();
        assert_eq!(f.source().nondeg_count(1), 2);
        assert_eq!(f.target().nondeg_count(1), 5);
    }

    #[test]
    fn small_universes() {
        let u = symmetric_universe(2, &lim()).unwrap();
        assert_eq!(u.vertex_count(), 3);
        assert_eq!(u.nondeg_count(1), 1);
        assert!(matches!(
            symmetric_universe(9, &lim()),
            Err(EngineError::UniverseCap { .. })
        ));
    }
}
