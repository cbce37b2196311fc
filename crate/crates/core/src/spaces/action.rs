//! Group actions by simplicial automorphisms and their homotopy quotients.
//!
//! The quotient is the diagonal bar construction: a k-simplex is a string
//! of k group elements together with a k-simplex of the space, the inner
//! faces multiply adjacent elements, and the 0th face twists by acting
//! with the inverse of the leading element. That twist makes the result a
//! twisted product of the space with the group's nerve, so it fibers over
//! the classifying space with the original space as fiber.

use crate::error::{EngineError, Result};
use crate::groups::FiniteGroup;
use crate::kan::{raise_bound, rebound_truncated, KanComplex};
use crate::limits::Limits;
use crate::maps::SimplicialMap;
use crate::simplicial::{DenseLevels, FillerIndex, SimplexRef, Tables};

use super::nerve::group_nerve_assembled;

/// An action of a finite group on a space, stored as one permutation of
/// the nondegenerate simplices per level per group element.
#[derive(Clone)]
pub struct GroupAction {
    group: FiniteGroup,
    space: KanComplex,
    images: Vec<Vec<Vec<usize>>>,
}

impl GroupAction {
    /// Validate and wrap: `images[g][dim][id]` is where element `g` sends
    /// nondegenerate simplex `id` of level `dim`. Checks shapes, that the
    /// identity acts trivially, that every element acts simplicially and
    /// invertibly, and that composition matches the group's table.
    pub fn new(
        group: FiniteGroup,
        space: KanComplex,
        images: Vec<Vec<Vec<usize>>>,
    ) -> Result<GroupAction> {
        let bound = space.bound();
        if images.len() != group.order() {
            return Err(EngineError::InvalidAction(format!(
                "{} image tables for a group of order {}",
                images.len(),
                group.order()
            )));
        }
        for (g, per) in images.iter().enumerate() {
            if per.len() != bound + 1 || per.iter().enumerate().any(|(d, lvl)| lvl.len() != space.nondeg_count(d)) {
                return Err(EngineError::InvalidAction(format!(
                    "image table of element {g} does not match the space's level sizes"
                )));
            }
        }
        let e = group.identity();
        if (0..=bound).any(|d| (0..space.nondeg_count(d)).any(|id| images[e][d][id] != id)) {
            return Err(EngineError::InvalidAction(
                "the identity element must act trivially".into(),
            ));
        }
        for (g, per) in images.iter().enumerate() {
            let refs = per
                .iter()
                .map(|lvl| lvl.iter().map(|&id| SimplexRef::nondeg(id)).collect())
                .collect();
            let f = SimplicialMap::new(space.data().clone(), space.data().clone(), refs)
                .map_err(|err| {
                    EngineError::InvalidAction(format!("element {g} does not act simplicially: {err}"))
                })?;
            if !f.is_isomorphism() {
                return Err(EngineError::InvalidAction(format!(
                    "element {g} does not act invertibly"
                )));
            }
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let gh = group.mul(g, h);
                for d in 0..=bound {
                    for id in 0..space.nondeg_count(d) {
                        if images[g][d][images[h][d][id]] != images[gh][d][id] {
                            return Err(EngineError::InvalidAction(format!(
                                "action of {g} after {h} disagrees with their product at level {d}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(GroupAction { group, space, images })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn space(&self) -> &KanComplex {
        &self.space
    }

    /// Where `g` sends nondegenerate simplex `id` of level `dim`.
    pub fn act(&self, g: usize, dim: usize, id: usize) -> usize {
        self.images[g][dim][id]
    }

    /// The action on an arbitrary reference: degeneracy words ride along.
    pub fn act_ref(&self, g: usize, dim: usize, r: &SimplexRef) -> SimplexRef {
        SimplexRef {
            word: r.word.clone(),
            base: self.images[g][r.base_dim(dim)][r.base],
        }
    }
}

pub fn trivial_action(group: &FiniteGroup, space: &KanComplex) -> GroupAction {
    let images = (0..group.order())
        .map(|_| (0..=space.bound()).map(|d| (0..space.nondeg_count(d)).collect()).collect())
        .collect();
    GroupAction::new(group.clone(), space.clone(), images)
        .expect("the trivial action always validates")
}

/// The group permuting its own elements by left multiplication.
pub fn translation_action(group: &FiniteGroup, limits: &Limits) -> Result<GroupAction> {
    let space = super::discrete(group.order(), limits)?;
    let images = (0..group.order())
        .map(|g| vec![(0..group.order()).map(|v| group.mul(g, v)).collect(), Vec::new()])
        .collect();
    GroupAction::new(group.clone(), space, images)
}

/// Extend an action along [`raise_bound`]. Above the original bound a
/// simplex is determined by its faces, so each element's image is the
/// unique simplex whose faces are the images of the faces.
pub fn raise_action(action: &GroupAction, new_bound: usize, limits: &Limits) -> Result<GroupAction> {
    let old_bound = action.space.bound();
    if new_bound <= old_bound {
        return Ok(action.clone());
    }
    let raised = raise_bound(&action.space, new_bound, limits)?;
    let tables = Tables::new(raised.data(), limits)?;
    let mut images = action.images.clone();
    for per in &mut images {
        per.resize(new_bound + 1, Vec::new());
    }
    for dim in old_bound + 1..=new_bound {
        let fidx = FillerIndex::new(&tables, dim);
        for g in 0..action.group.order() {
            let mut level = Vec::with_capacity(raised.nondeg_count(dim));
            for id in 0..raised.nondeg_count(dim) {
                let mapped: Vec<usize> = raised
                    .simplex(dim, id)
                    .faces
                    .iter()
                    .map(|r| {
                        let b = images[g][r.base_dim(dim - 1)][r.base];
                        tables.idx(dim - 1, &SimplexRef { word: r.word.clone(), base: b })
                    })
                    .collect();
                let idx = fidx
                    .with_faces(&mapped)
                    .iter()
                    .copied()
                    .find(|&c| tables.is_nondeg(dim, c))
                    .expect("the image sphere of a raised simplex has its own filler");
                level.push(tables.simplex_ref(dim, idx).base);
            }
            images[g][dim] = level;
        }
    }
    GroupAction::new(action.group.clone(), raised, images)
}

/// String of group elements plus a simplex of the space, by table index.
type BorelKey = (Vec<usize>, usize);

struct BorelLevels<'a> {
    action: &'a GroupAction,
    tables: &'a Tables,
}

impl BorelLevels<'_> {
    fn act_idx(&self, g: usize, dim: usize, idx: usize) -> usize {
        let r = self.tables.simplex_ref(dim, idx);
        self.tables.idx(dim, &self.action.act_ref(g, dim, r))
    }
}

impl DenseLevels for BorelLevels<'_> {
    type Key = BorelKey;

    fn level(&self, k: usize) -> Vec<BorelKey> {
        let order = self.action.group.order();
        let mut strings = vec![Vec::new()];
        for _ in 0..k {
            strings = strings
                .into_iter()
                .flat_map(|s: Vec<usize>| {
                    (0..order).map(move |g| {
                        let mut t = s.clone();
                        t.push(g);
                        t
                    })
                })
                .collect();
        }
        (0..self.tables.count(k))
            .flat_map(|y| strings.iter().map(move |s| (s.clone(), y)))
            .collect()
    }

    fn face(&self, k: usize, key: &BorelKey, i: usize) -> BorelKey {
        let (hs, y) = key;
        if i == 0 {
            let g = self.action.group.inv(hs[0]);
            (hs[1..].to_vec(), self.act_idx(g, k - 1, self.tables.face(k, *y, 0)))
        } else if i == k {
            (hs[..k - 1].to_vec(), self.tables.face(k, *y, k))
        } else {
            let mut next = hs.clone();
            next[i - 1] = self.action.group.mul(hs[i - 1], hs[i]);
            next.remove(i);
            (next, self.tables.face(k, *y, i))
        }
    }

    fn degeneracy(&self, k: usize, key: &BorelKey, i: usize) -> BorelKey {
        let mut next = key.0.clone();
        next.insert(i, self.action.group.identity());
        (next, self.tables.degeneracy(k, key.1, i))
    }
}

/// A homotopy quotient with its two structure maps: the projection from
/// the space and the classifying map to the group's nerve. The composite
/// of the two is constant.
pub struct HomotopyQuotient {
    pub space: KanComplex,
    pub quotient_map: SimplicialMap,
    pub base_map: SimplicialMap,
}

/// The quotient fibers over B(G) with the space as fiber, so it is
/// truncated one below max(bound, 2); we build the bar levels up there
/// and certify with one coskeletal level to spare.
pub fn homotopy_quotient(action: &GroupAction, limits: &Limits) -> Result<HomotopyQuotient> {
    let bound = action.space.bound().max(2);
    let action = raise_action(action, bound, limits)?;
    let tables = Tables::new(action.space.data(), limits)?;
    let provider = BorelLevels { action: &action, tables: &tables };
    let (assembled, space) = rebound_truncated(&provider, bound - 1, limits)?;

    let e = action.group.identity();
    let q_images = (0..=bound)
        .map(|dim| {
            (0..action.space.nondeg_count(dim))
                .map(|id| {
                    let idx = tables.idx(dim, &SimplexRef::nondeg(id));
                    assembled.ref_of(dim, &(vec![e; dim], idx)).clone()
                })
                .collect()
        })
        .collect();
    let quotient_map =
        SimplicialMap::new(action.space.data().clone(), space.data().clone(), q_images)?;

    let (bg_assembled, bg) = group_nerve_assembled(&action.group, bound, limits)?;
    let b_images = (0..=bound)
        .map(|dim| {
            (0..space.nondeg_count(dim))
                .map(|id| {
                    let (hs, _) = assembled.key_of_nondeg(dim, id);
                    bg_assembled.ref_of(dim, &(0, hs.clone())).clone()
                })
                .collect()
        })
        .collect();
    let base_map = SimplicialMap::new(space.data().clone(), bg.into_data(), b_images)?;

    Ok(HomotopyQuotient { space, quotient_map, base_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::cyclic;
    use crate::hom::coproduct;
    use crate::kan::kan_check;
    use crate::spaces::{discrete, point};
    use crate::testutil::z2_nerve_by_hand;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn quotienting_the_point_yields_the_nerve_on_the_nose() {
        let pt = point(&lim()).unwrap();
        let q = homotopy_quotient(&trivial_action(&cyclic(2), &pt), &lim()).unwrap();
        assert_eq!(q.space.data(), &z2_nerve_by_hand());
        assert_eq!(q.base_map, SimplicialMap::identity(q.space.data()));
    }

    #[test]
    fn the_translation_quotient_joins_everything_up() {
        let act = translation_action(&cyclic(2), &lim()).unwrap();
        let q = homotopy_quotient(&act, &lim()).unwrap();
        assert_eq!(
            (0..=2).map(|d| q.space.nondeg_count(d)).collect::<Vec<_>>(),
            vec![2, 2, 2]
        );
        let crossing = (0..2).any(|id| {
            let f = &q.space.simplex(1, id).faces;
            f[0] != f[1]
        });
        assert!(crossing, "a free transitive action must glue the points");
    }

    #[test]
    fn the_trivial_quotient_keeps_components_apart() {
        let two = discrete(2, &lim()).unwrap();
        let q = homotopy_quotient(&trivial_action(&cyclic(2), &two), &lim()).unwrap();
        assert_eq!(
            (0..=2).map(|d| q.space.nondeg_count(d)).collect::<Vec<_>>(),
            vec![2, 2, 2]
        );
        for id in 0..2 {
            let f = &q.space.simplex(1, id).faces;
            assert_eq!(f[0], f[1], "loops stay loops when nothing moves");
        }
    }

    #[test]
    fn the_structure_maps_compose_to_the_constant() {
        let act = translation_action(&cyclic(3), &lim()).unwrap();
        let q = homotopy_quotient(&act, &lim()).unwrap();
        let collapsed = q.quotient_map.then(&q.base_map).unwrap();
        let constant =
            SimplicialMap::constant(q.quotient_map.source(), q.base_map.target(), 0).unwrap();
        assert_eq!(collapsed, constant);
    }

    #[test]
    fn raising_follows_an_action_through_determined_levels() {
        let bz2 = kan_check(z2_nerve_by_hand(), &lim()).unwrap();
        let x = coproduct(&bz2, &bz2, &lim()).unwrap();
        let swap = vec![
            vec![vec![0, 1], vec![0, 1], vec![0, 1]],
            vec![vec![1, 0], vec![1, 0], vec![1, 0]],
        ];
        let act = GroupAction::new(cyclic(2), x, swap).unwrap();
        let raised = raise_action(&act, 3, &lim()).unwrap();
        assert_eq!(raised.space().nondeg_count(3), 2);
        assert_eq!(raised.act(1, 3, 0), 1);
        assert_eq!(raised.act(1, 3, 1), 0);
        assert_eq!(raised.act(0, 3, 0), 0);
    }

    #[test]
    fn lawless_tables_are_rejected() {
        let two = discrete(2, &lim()).unwrap();
        let collapse = vec![vec![vec![0, 1], vec![]], vec![vec![0, 0], vec![]]];
        assert!(matches!(
            GroupAction::new(cyclic(2), two.clone(), collapse),
            Err(EngineError::InvalidAction(_))
        ));
        let id2 = vec![vec![0, 1], vec![]];
        let sw = vec![vec![1, 0], vec![]];
        let broken = vec![id2.clone(), sw, id2.clone(), id2];
        assert!(matches!(
            GroupAction::new(cyclic(4), two, broken),
            Err(EngineError::InvalidAction(_))
        ));
    }
}
