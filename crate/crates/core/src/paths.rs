//! Path-object constructions: mapping path spaces, homotopy pullbacks,
//! and loop spaces.
//!
//! Strict pullbacks only deserve the name "homotopy pullback" along a
//! fibration, so general pullbacks are computed by first replacing the
//! left leg with the projection out of its mapping path space
//! X ×_Y hom(Δ[1], Y). Both inputs Kan makes that projection a
//! fibration: a lifting problem against it splits into a horn filler in
//! X and an extension of a partial prism into Y.

use std::collections::HashMap;

use crate::error::{EngineError, Result};
use crate::hom::{
    component, map_value, maps_into, paired, precompose, FiberedSearch, MapKey, PrismKey,
    PrismLevels, ProductSpace,
};
use crate::kan::{kan_check, rebound_truncated, KanComplex};
use crate::limits::Limits;
use crate::maps::SimplicialMap;
use crate::simplicial::{
    assemble, standard_simplex, Assembled, DenseLevels, FillerIndex, SimplexRef, SimplicialData,
    Tables,
};
use crate::spaces::point;

/// The mapping path space factorization of a map f: X → Y.
///
/// `space` is X ×_Y hom(Δ[1], Y), pairs of a simplex of X with a path
/// starting at its image. `fibration` evaluates the path at its other
/// end; `inclusion` pairs a simplex with the constant path and is an
/// equivalence, split by `retraction` on the nose.
pub struct FibrantReplacement {
    pub space: KanComplex,
    pub fibration: SimplicialMap,
    pub inclusion: SimplicialMap,
    pub retraction: SimplicialMap,
}

/// A simplex of X with a path out of its image: the cylinder map is keyed
/// on the interval prism Δ[1] × Δ[k].
type PathKey = (SimplexRef, MapKey);

struct PathLevels<'a> {
    x: &'a SimplicialData,
    xtab: &'a Tables,
    ytab: &'a Tables,
    /// Target table index of the f image of every simplex of X, per level.
    fidx: &'a [Vec<usize>],
    prisms: &'a [Assembled<PrismKey>],
    /// Per level, the enumerated paths grouped by their starting simplex.
    paths: &'a [HashMap<usize, Vec<MapKey>>],
    bound: usize,
}

impl DenseLevels for PathLevels<'_> {
    type Key = PathKey;

    fn level(&self, k: usize) -> Vec<PathKey> {
        let mut out = Vec::new();
        for i in 0..self.xtab.count(k) {
            let r = self.xtab.simplex_ref(k, i);
            for m in &self.paths[k][&self.fidx[k][i]] {
                out.push((r.clone(), m.clone()));
            }
        }
        out
    }

    fn face(&self, k: usize, key: &PathKey, i: usize) -> PathKey {
        let up = |v| if v < i { v } else { v + 1 };
        let m = precompose(self.prisms, self.ytab, self.bound, k - 1, k, &key.1, up);
        (self.x.face(k, &key.0, i), m)
    }

    fn degeneracy(&self, k: usize, key: &PathKey, i: usize) -> PathKey {
        let down = |v| if v <= i { v } else { v - 1 };
        let m = precompose(self.prisms, self.ytab, self.bound, k + 1, k, &key.1, down);
        (self.x.degeneracy(&key.0, i), m)
    }
}

pub fn fibrant_replace(f: &SimplicialMap, limits: &Limits) -> Result<FibrantReplacement> {
    kan_check(f.source().clone(), limits)?;
    kan_check(f.target().clone(), limits)?;
    let bound = f.bound();
    let interval = standard_simplex(1, bound);
    let itab = Tables::new(&interval, limits)?;
    let xtab = Tables::new(f.source(), limits)?;
    let ytab = Tables::new(f.target(), limits)?;
    let yfill: Vec<FillerIndex> = (1..=bound).map(|d| FillerIndex::new(&ytab, d)).collect();

    let fidx: Vec<Vec<usize>> = (0..=bound)
        .map(|k| {
            (0..xtab.count(k))
                .map(|i| ytab.idx(k, &f.apply(k, xtab.simplex_ref(k, i))))
                .collect()
        })
        .collect();

    // Enumerate paths with the whole near end of the cylinder pinned to
    // the starting simplex, one search per distinct start. Pinning during
    // the search is what keeps this tractable: the unconstrained path
    // space can be orders of magnitude larger than the pulled back part.
    let mut budget = limits.budget("fibrant_replace");
    let mut prisms: Vec<Assembled<PrismKey>> = Vec::with_capacity(bound + 1);
    let mut paths: Vec<HashMap<usize, Vec<MapKey>>> = Vec::with_capacity(bound + 1);
    for k in 0..=bound {
        let provider = PrismLevels { a: &interval, atab: &itab, k, over: None };
        let prism = assemble(&provider, bound, limits)?;
        let mut found: HashMap<usize, Vec<MapKey>> = HashMap::new();
        for &yk in &fidx[k] {
            if found.contains_key(&yk) {
                continue;
            }
            let required: Vec<Vec<Option<usize>>> = (0..=bound)
                .map(|p| {
                    (0..prism.data.nondeg_count(p))
                        .map(|pid| {
                            let (e, t) = prism.key_of_nondeg(p, pid);
                            (*e == interval.degenerate_vertex(0, p))
                                .then(|| ytab.restrict(k, yk, t))
                        })
                        .collect()
                })
                .collect();
            let fiber = FiberedSearch { target_leg: None, required: &required };
            let maps = maps_into(&prism.data, &ytab, &yfill, Some(fiber), k, limits, &mut budget)?;
            found.insert(yk, maps);
        }
        prisms.push(prism);
        paths.push(found);
    }

    let provider = PathLevels {
        x: f.source(),
        xtab: &xtab,
        ytab: &ytab,
        fidx: &fidx,
        prisms: &prisms,
        paths: &paths,
        bound,
    };
    let (keys, space) = rebound_truncated(&provider, bound - 1, limits)?;

    let retraction = component(&keys, &space, f.source(), |key: &PathKey| key.0.clone())?;

    // the fibration reads the path at the far end of the cylinder
    let images = (0..=bound)
        .map(|k| {
            (0..space.nondeg_count(k))
                .map(|id| {
                    let (_, m) = keys.key_of_nondeg(k, id);
                    let pair = (interval.degenerate_vertex(1, k), (0..=k).collect());
                    let idx = map_value(&prisms[k], &ytab, m, k, &pair);
                    ytab.simplex_ref(k, idx).clone()
                })
                .collect()
        })
        .collect();
    let fibration = SimplicialMap::new(space.data().clone(), f.target().clone(), images)?;

    // x pairs with the constant path at f(x), projected off the cylinder
    let images = (0..=bound)
        .map(|k| {
            (0..f.source().nondeg_count(k))
                .map(|id| {
                    let constant: MapKey = (0..=bound)
                        .map(|p| {
                            (0..prisms[k].data.nondeg_count(p))
                                .map(|pid| {
                                    let (_, t) = prisms[k].key_of_nondeg(p, pid);
                                    ytab.restrict(k, fidx[k][id], t)
                                })
                                .collect()
                        })
                        .collect();
                    keys.ref_of(k, &(SimplexRef::nondeg(id), constant)).clone()
                })
                .collect()
        })
        .collect();
    let inclusion = SimplicialMap::new(f.source().clone(), space.data().clone(), images)?;

    Ok(FibrantReplacement { space, fibration, inclusion, retraction })
}

/// X ×_Y hom(Δ[1], Y) ×_Y Z, the strict pullback of g against the
/// fibrant replacement of f. `left` retracts the path coordinate away;
/// `right` is the strict projection.
pub fn homotopy_pullback(
    f: &SimplicialMap,
    g: &SimplicialMap,
    limits: &Limits,
) -> Result<ProductSpace> {
    if f.target() != g.target() {
        return Err(EngineError::InvalidMap(
            "pullback legs must share their target".into(),
        ));
    }
    kan_check(g.source().clone(), limits)?;
    let replaced = fibrant_replace(f, limits)?;
    let (keys, space) = paired(
        replaced.space.data(),
        g.source(),
        Some((&replaced.fibration, g)),
        limits,
    )?;
    let to_replaced = component(&keys, &space, replaced.space.data(), |key| key.0.clone())?;
    let left = to_replaced.then(&replaced.retraction)?;
    let right = component(&keys, &space, g.source(), |key| key.1.clone())?;
    Ok(ProductSpace { space, left, right })
}

/// Loops at a vertex: the homotopy pullback of x: 1 → X against itself.
/// Shifts homotopy down a degree, so its groups are those of X one
/// dimension up.
pub fn loop_space(x: &KanComplex, vertex: usize, limits: &Limits) -> Result<KanComplex> {
    let unit = crate::kan::raise_bound(&point(limits)?, x.bound(), limits)?;
    let at = SimplicialMap::constant(unit.data(), x.data(), vertex)?;
    Ok(homotopy_pullback(&at, &at, limits)?.space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::symmetric;
    use crate::groups::GroupHom;
    use crate::hom::{hom_complex, product};
    use crate::kan::{is_fibration, raise_bound};
    use crate::spaces::{classifying_map, classifying_space, discrete};
    use crate::testutil::z2_nerve_by_hand;

    fn lim() -> Limits {
        Limits::default()
    }

    fn bz2() -> KanComplex {
        kan_check(z2_nerve_by_hand(), &lim()).unwrap()
    }

    #[test]
    fn replacing_a_map_factors_it_strictly() {
        let b = bz2();
        let unit = raise_bound(&point(&lim()).unwrap(), 2, &lim()).unwrap();
        let f = SimplicialMap::constant(unit.data(), b.data(), 0).unwrap();
        let rep = fibrant_replace(&f, &lim()).unwrap();
        assert_eq!(rep.inclusion.then(&rep.fibration).unwrap(), f);
        assert_eq!(
            rep.inclusion.then(&rep.retraction).unwrap(),
            SimplicialMap::identity(unit.data())
        );
        assert!(is_fibration(&rep.fibration, &lim()).unwrap().holds());
        assert!(!is_fibration(&f, &lim()).unwrap().holds());
    }

    #[test]
    fn replacing_an_identity_gives_the_path_space() {
        let b = bz2();
        let rep = fibrant_replace(&SimplicialMap::identity(b.data()), &lim()).unwrap();
        // pairs (x, path from x): one vertex per path, so the two edges
        // of the nerve appear as the two vertices here
        assert_eq!(rep.space.vertex_count(), 2);
        assert!(is_fibration(&rep.fibration, &lim()).unwrap().holds());
    }

    #[test]
    fn pullbacks_over_the_point_are_products() {
        let two = discrete(2, &lim()).unwrap();
        let three = discrete(3, &lim()).unwrap();
        let unit = point(&lim()).unwrap();
        let f = SimplicialMap::constant(two.data(), unit.data(), 0).unwrap();
        let g = SimplicialMap::constant(three.data(), unit.data(), 0).unwrap();
        let pulled = homotopy_pullback(&f, &g, &lim()).unwrap();
        let straight = product(&two, &three, &lim()).unwrap();
        assert_eq!(pulled.space.data(), straight.space.data());
        assert_eq!(pulled.left.image(0, 3), straight.left.image(0, 3));
    }

    #[test]
    fn the_fiber_over_a_subgroup_inclusion_counts_cosets() {
        let incl = classifying_map(&GroupHom::alternating_in_symmetric(3), &lim()).unwrap();
        let unit = raise_bound(&point(&lim()).unwrap(), 2, &lim()).unwrap();
        let base = SimplicialMap::constant(unit.data(), incl.target(), 0).unwrap();
        let fiber = homotopy_pullback(&base, &incl, &lim()).unwrap();
        // a vertex is a path in B(S_3) from the basepoint back to itself,
        // one per group element; components will pair them up by coset
        assert_eq!(fiber.space.vertex_count(), 6);
    }

    #[test]
    fn loops_in_a_nerve_are_group_elements() {
        let loops = loop_space(&bz2(), 0, &lim()).unwrap();
        assert_eq!(loops.vertex_count(), 2);
        let s3 = classifying_space(&symmetric(3), &lim()).unwrap();
        assert_eq!(loop_space(&s3, 0, &lim()).unwrap().vertex_count(), 6);
    }

    #[test]
    fn loops_in_a_discrete_space_collapse() {
        let three = discrete(3, &lim()).unwrap();
        let loops = loop_space(&three, 1, &lim()).unwrap();
        assert_eq!(loops.vertex_count(), 1);
        assert_eq!(loops.nondeg_count(1), 0);
    }

    #[test]
    fn constant_paths_evaluate_back_to_where_they_sit() {
        let b = bz2();
        let paths = hom_complex(&standard_simplex(1, 2), &b, &lim()).unwrap();
        let c = paths.constants().unwrap();
        for v in 0..2 {
            let ev = paths.evaluation_at(v).unwrap();
            assert_eq!(c.then(&ev).unwrap(), SimplicialMap::identity(b.data()));
        }
    }
}
