//! Products, coproducts, and function complexes.
//!
//! A k-simplex of hom(A, Y) is a truncated simplicial map from A × Δ[k]
//! into Y. The prism A × Δ[k] is assembled as pairs (simplex of A, weakly
//! increasing vertex tuple of Δ[k]); maps out of it are enumerated by
//! backtracking over its nondegenerate simplices in dimension order,
//! where the candidates for each simplex are exactly the targets whose
//! face vector matches the already-assigned images. Faces and
//! degeneracies of the function complex precompose with the coface and
//! codegeneracy inclusions of the prism factor.

use crate::error::Result;
use crate::kan::{kan_check, raise_bound, raise_data, rebound_truncated, KanComplex};
use crate::limits::{Budget, Limits};
use crate::maps::SimplicialMap;
use crate::simplicial::{
    assemble, coproduct_data, Assembled, DenseLevels, FillerIndex, SimplexRef, SimplicialData,
    Tables,
};

/// Pairs of same-level simplices, optionally filtered to a strict pullback.
struct PairLevels<'a> {
    a: &'a SimplicialData,
    b: &'a SimplicialData,
    atab: &'a Tables,
    btab: &'a Tables,
    along: Option<(&'a SimplicialMap, &'a SimplicialMap)>,
}

pub(crate) type PairKey = (SimplexRef, SimplexRef);

impl DenseLevels for PairLevels<'_> {
    type Key = PairKey;

    fn level(&self, k: usize) -> Vec<PairKey> {
        let mut out = Vec::new();
        for i in 0..self.atab.count(k) {
            let ra = self.atab.simplex_ref(k, i);
            for j in 0..self.btab.count(k) {
                let rb = self.btab.simplex_ref(k, j);
                if let Some((f, g)) = self.along {
                    if f.apply(k, ra) != g.apply(k, rb) {
                        continue;
                    }
                }
                out.push((ra.clone(), rb.clone()));
            }
        }
        out
    }

    fn face(&self, k: usize, key: &PairKey, i: usize) -> PairKey {
        (self.a.face(k, &key.0, i), self.b.face(k, &key.1, i))
    }

    fn degeneracy(&self, _k: usize, key: &PairKey, i: usize) -> PairKey {
        (self.a.degeneracy(&key.0, i), self.b.degeneracy(&key.1, i))
    }
}

pub struct ProductSpace {
    pub space: KanComplex,
    pub left: SimplicialMap,
    pub right: SimplicialMap,
}

/// Levelwise product, stored at the equalized bound. Coskeleton is a right
/// adjoint, so the stored levels denote the product space.
pub fn product(x: &KanComplex, y: &KanComplex, limits: &Limits) -> Result<ProductSpace> {
    let bound = x.bound().max(y.bound());
    let x = raise_bound(x, bound, limits)?;
    let y = raise_bound(y, bound, limits)?;
    let (assembled, space) = paired(x.data(), y.data(), None, limits)?;
    let left = component(&assembled, &space, x.data(), |key| key.0.clone())?;
    let right = component(&assembled, &space, y.data(), |key| key.1.clone())?;
    Ok(ProductSpace { space, left, right })
}

/// The subspace of the product where the two legs agree, with its
/// projections. When `f` is a fibration this computes the homotopy
/// pullback of the legs.
pub fn strict_pullback(
    f: &SimplicialMap,
    g: &SimplicialMap,
    limits: &Limits,
) -> Result<ProductSpace> {
    let (assembled, space) = paired(f.source(), g.source(), Some((f, g)), limits)?;
    let left = component(&assembled, &space, f.source(), |key| key.0.clone())?;
    let right = component(&assembled, &space, g.source(), |key| key.1.clone())?;
    Ok(ProductSpace { space, left, right })
}

pub(crate) fn paired(
    a: &SimplicialData,
    b: &SimplicialData,
    along: Option<(&SimplicialMap, &SimplicialMap)>,
    limits: &Limits,
) -> Result<(Assembled<PairKey>, KanComplex)> {
    let atab = Tables::new(a, limits)?;
    let btab = Tables::new(b, limits)?;
    let provider = PairLevels { a, b, atab: &atab, btab: &btab, along };
    rebound_truncated(&provider, a.bound() - 1, limits)
}

pub(crate) fn component<K: Clone + Eq + std::hash::Hash + Ord + std::fmt::Debug>(
    assembled: &Assembled<K>,
    space: &KanComplex,
    target: &SimplicialData,
    pick: impl Fn(&K) -> SimplexRef,
) -> Result<SimplicialMap> {
    let images = (0..=space.bound())
        .map(|dim| {
            (0..space.nondeg_count(dim))
                .map(|id| pick(assembled.key_of_nondeg(dim, id)))
                .collect()
        })
        .collect();
    SimplicialMap::new(space.data().clone(), target.clone(), images)
}

/// Disjoint union. Bounds are equalized by raising the lower one, which
/// changes no denotation.
pub fn coproduct(a: &KanComplex, b: &KanComplex, limits: &Limits) -> Result<KanComplex> {
    let bound = a.bound().max(b.bound());
    let a = raise_bound(a, bound, limits)?;
    let b = raise_bound(b, bound, limits)?;
    let (data, _) = coproduct_data(a.data(), b.data())?;
    kan_check(data, limits)
}

/// A simplex of A times a monotone vertex tuple of Δ[k].
pub(crate) type PrismKey = (SimplexRef, Vec<usize>);

/// Restricts the prism to the fiber product with a fixed k-simplex of a
/// base: keep the cells where the base simplex restricted along the
/// tuple agrees with the image of the A component.
pub(crate) struct OverBase<'a> {
    pub(crate) base_tab: &'a Tables,
    pub(crate) base_idx: usize,
    pub(crate) image_idx: &'a [Vec<usize>],
}

pub(crate) struct PrismLevels<'a> {
    pub(crate) a: &'a SimplicialData,
    pub(crate) atab: &'a Tables,
    pub(crate) k: usize,
    pub(crate) over: Option<OverBase<'a>>,
}

impl DenseLevels for PrismLevels<'_> {
    type Key = PrismKey;

    fn level(&self, p: usize) -> Vec<PrismKey> {
        let tuples = weak_tuples(self.k, p + 1);
        let restricted: Option<Vec<usize>> = self.over.as_ref().map(|o| {
            tuples.iter().map(|t| o.base_tab.restrict(self.k, o.base_idx, t)).collect()
        });
        let mut out = Vec::new();
        for i in 0..self.atab.count(p) {
            let r = self.atab.simplex_ref(p, i);
            for (ti, t) in tuples.iter().enumerate() {
                if let Some((o, res)) = self.over.as_ref().zip(restricted.as_ref()) {
                    if o.image_idx[p][i] != res[ti] {
                        continue;
                    }
                }
                out.push((r.clone(), t.clone()));
            }
        }
        out
    }

    fn face(&self, p: usize, key: &PrismKey, j: usize) -> PrismKey {
        let mut t = key.1.clone();
        t.remove(j);
        (self.a.face(p, &key.0, j), t)
    }

    fn degeneracy(&self, _p: usize, key: &PrismKey, j: usize) -> PrismKey {
        let mut t = key.1.clone();
        let v = t[j];
        t.insert(j, v);
        (self.a.degeneracy(&key.0, j), t)
    }
}

/// Weakly increasing `len`-tuples with entries in `0..=n`, lexicographic.
fn weak_tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                let lo = t.last().copied().unwrap_or(0);
                (lo..=n).map(move |v| {
                    let mut u = t.clone();
                    u.push(v);
                    u
                })
            })
            .collect();
    }
    out
}

/// A map recorded as one target table index per nondegenerate prism
/// simplex, level by level.
pub(crate) type MapKey = Vec<Vec<usize>>;

/// Cuts the map search down cell by cell: a pinned source simplex only
/// accepts candidates matching its `required` entry, compared through
/// `target_leg` when one is given (to search over a base) and directly
/// otherwise (to pin exact values).
pub(crate) struct FiberedSearch<'a> {
    pub(crate) target_leg: Option<&'a [Vec<usize>]>,
    pub(crate) required: &'a [Vec<Option<usize>>],
}

impl FiberedSearch<'_> {
    fn admits(&self, p: usize, id: usize, candidate: usize) -> bool {
        match self.required[p][id] {
            None => true,
            Some(want) => self.target_leg.map_or(candidate, |leg| leg[p][candidate]) == want,
        }
    }
}

/// The image of a possibly degenerate prism simplex: look up the base,
/// then ride the degeneracy word through the target's tables.
pub(crate) fn map_value(
    prism: &Assembled<PrismKey>,
    ytab: &Tables,
    key: &MapKey,
    p: usize,
    pair: &PrismKey,
) -> usize {
    let r = prism.ref_of(p, pair);
    let mut d = r.base_dim(p);
    let mut idx = key[d][r.base];
    for &i in r.word.iter().rev() {
        idx = ytab.degeneracy(d, idx, i);
        d += 1;
    }
    idx
}

/// All truncated simplicial maps from `source` into the tabled target, in
/// assignment order: increasing dimension, id order within a dimension.
pub(crate) fn maps_into(
    source: &SimplicialData,
    ytab: &Tables,
    yfill: &[FillerIndex],
    fiber: Option<FiberedSearch<'_>>,
    hom_dim: usize,
    limits: &Limits,
    budget: &mut Budget,
) -> Result<Vec<MapKey>> {
    let bound = source.bound();
    let positions: Vec<(usize, usize)> = (0..=bound)
        .flat_map(|p| (0..source.nondeg_count(p)).map(move |id| (p, id)))
        .collect();

    // A cell prunes as soon as the last of its faces is assigned: if no
    // target simplex has the mapped boundary, the branch is dead. Without
    // this the search fixes every edge before any triangle is consulted.
    let offset: Vec<usize> = (0..=bound)
        .scan(0, |acc, p| {
            let at = *acc;
            *acc += source.nondeg_count(p);
            Some(at)
        })
        .collect();
    let mut checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); positions.len()];
    for &(p, id) in positions.iter().filter(|&&(p, _)| p > 0) {
        let complete_at = source
            .simplex(p, id)
            .faces
            .iter()
            .map(|r| offset[p - 1 - r.word.len()] + r.base)
            .max()
            .expect("positive-dimensional simplices have faces");
        checks[complete_at].push((p, id));
    }

    let mut search = MapSearch {
        positions,
        checks,
        source,
        ytab,
        yfill,
        fiber,
        vals: (0..=bound).map(|p| vec![usize::MAX; source.nondeg_count(p)]).collect(),
        out: Vec::new(),
        hom_dim,
        limits,
        budget,
    };
    search.run()?;
    Ok(search.out)
}

struct MapSearch<'a> {
    positions: Vec<(usize, usize)>,
    checks: Vec<Vec<(usize, usize)>>,
    source: &'a SimplicialData,
    ytab: &'a Tables,
    yfill: &'a [FillerIndex],
    fiber: Option<FiberedSearch<'a>>,
    vals: Vec<Vec<usize>>,
    out: Vec<MapKey>,
    hom_dim: usize,
    limits: &'a Limits,
    budget: &'a mut Budget,
}

impl MapSearch<'_> {
    /// Depth-first over assignment positions, kept iterative: the depth is
    /// the number of nondegenerate source simplices, far past any call
    /// stack. Each frame is the candidate list and a cursor into it.
    fn run(&mut self) -> Result<()> {
        if self.positions.is_empty() {
            self.out.push(self.vals.clone());
            return self.limits.check_level(self.hom_dim, self.out.len());
        }
        let mut frames = vec![(self.candidates(0), 0usize)];
        while let Some(pos) = frames.len().checked_sub(1) {
            let (p, id) = self.positions[pos];
            if frames[pos].1 == frames[pos].0.len() {
                self.vals[p][id] = usize::MAX;
                frames.pop();
                continue;
            }
            let v = frames[pos].0[frames[pos].1];
            frames[pos].1 += 1;
            let (dim, found) = (self.hom_dim, self.out.len());
            self.budget.tick(|| format!("level {dim}: {found} maps so far, at depth {pos}"))?;
            self.vals[p][id] = v;
            if self.viable(pos) {
                if pos + 1 == self.positions.len() {
                    self.out.push(self.vals.clone());
                    self.limits.check_level(self.hom_dim, self.out.len())?;
                } else {
                    frames.push((self.candidates(pos + 1), 0));
                }
            }
        }
        Ok(())
    }

    fn candidates(&self, pos: usize) -> Vec<usize> {
        let (p, id) = self.positions[pos];
        if p == 0 {
            (0..self.ytab.count(0)).filter(|&v| self.admits(p, id, v)).collect()
        } else {
            self.yfill[p - 1]
                .with_faces(&self.boundary(p, id))
                .iter()
                .copied()
                .filter(|&v| self.admits(p, id, v))
                .collect()
        }
    }

    fn admits(&self, p: usize, id: usize, candidate: usize) -> bool {
        self.fiber.as_ref().is_none_or(|f| f.admits(p, id, candidate))
    }

    fn boundary(&self, p: usize, id: usize) -> Vec<usize> {
        self.source
            .simplex(p, id)
            .faces
            .iter()
            .map(|r| self.value(p - 1, r))
            .collect()
    }

    fn viable(&self, pos: usize) -> bool {
        self.checks[pos].iter().all(|&(p, id)| {
            self.yfill[p - 1]
                .with_faces(&self.boundary(p, id))
                .iter()
                .any(|&v| self.admits(p, id, v))
        })
    }

    /// Image of a possibly degenerate face under the partial assignment.
    fn value(&self, dim: usize, r: &SimplexRef) -> usize {
        let mut d = r.base_dim(dim);
        let mut idx = self.vals[d][r.base];
        for &i in r.word.iter().rev() {
            idx = self.ytab.degeneracy(d, idx, i);
            d += 1;
        }
        idx
    }
}

/// Precompose a map on prism `val_k` with the prism map induced by a
/// vertex map Δ[src_k] → Δ[val_k]: same A component, moved tuple.
pub(crate) fn precompose(
    prisms: &[Assembled<PrismKey>],
    ytab: &Tables,
    bound: usize,
    src_k: usize,
    val_k: usize,
    key: &MapKey,
    vertex: impl Fn(usize) -> usize,
) -> MapKey {
    let src = &prisms[src_k];
    (0..=bound)
        .map(|p| {
            (0..src.data.nondeg_count(p))
                .map(|id| {
                    let (rx, t) = src.key_of_nondeg(p, id);
                    let mapped = (rx.clone(), t.iter().map(|&v| vertex(v)).collect());
                    map_value(&prisms[val_k], ytab, key, p, &mapped)
                })
                .collect()
        })
        .collect()
}

struct HomLevels<'a> {
    bound: usize,
    ytab: &'a Tables,
    prisms: &'a [Assembled<PrismKey>],
    levels: &'a [Vec<MapKey>],
}

impl DenseLevels for HomLevels<'_> {
    type Key = MapKey;

    fn level(&self, k: usize) -> Vec<MapKey> {
        self.levels[k].clone()
    }

    fn face(&self, k: usize, key: &MapKey, i: usize) -> MapKey {
        let up = |v| if v < i { v } else { v + 1 };
        precompose(self.prisms, self.ytab, self.bound, k - 1, k, key, up)
    }

    fn degeneracy(&self, k: usize, key: &MapKey, i: usize) -> MapKey {
        let down = |v| if v <= i { v } else { v - 1 };
        precompose(self.prisms, self.ytab, self.bound, k + 1, k, key, down)
    }
}

/// A function complex with enough plumbing kept around to read its
/// simplices back as actual maps.
pub struct MappingSpace {
    space: KanComplex,
    source: SimplicialData,
    target: KanComplex,
    keys: Assembled<MapKey>,
    prisms: Vec<Assembled<PrismKey>>,
    ytab: Tables,
}

/// hom(A, Y), stored at Y's bound. A is aligned to that bound first:
/// raised coskeletally when lower (auxiliary domains meant skeletally
/// should be constructed at Y's bound to begin with; the constructors
/// take a bound argument for exactly that reason), or cut down when
/// higher, which loses nothing against a coskeletal target.
pub fn hom_complex(a: &SimplicialData, y: &KanComplex, limits: &Limits) -> Result<MappingSpace> {
    let bh = y.bound();
    let source = at_bound(a, bh, limits)?;
    let atab = Tables::new(&source, limits)?;
    let ytab = Tables::new(y.data(), limits)?;
    let yfill: Vec<FillerIndex> = (1..=bh).map(|d| FillerIndex::new(&ytab, d)).collect();

    let mut budget = limits.budget("hom_complex");
    let mut prisms = Vec::with_capacity(bh + 1);
    let mut levels = Vec::with_capacity(bh + 1);
    for k in 0..=bh {
        let provider = PrismLevels { a: &source, atab: &atab, k, over: None };
        let prism = assemble(&provider, bh, limits)?;
        levels.push(maps_into(&prism.data, &ytab, &yfill, None, k, limits, &mut budget)?);
        prisms.push(prism);
    }

    let provider = HomLevels { bound: bh, ytab: &ytab, prisms: &prisms, levels: &levels };
    let (keys, space) = rebound_truncated(&provider, bh - 1, limits)?;
    Ok(MappingSpace { space, source, target: y.clone(), keys, prisms, ytab })
}

impl MappingSpace {
    pub fn space(&self) -> &KanComplex {
        &self.space
    }

    pub fn into_space(self) -> KanComplex {
        self.space
    }

    pub fn source(&self) -> &SimplicialData {
        &self.source
    }

    pub fn target(&self) -> &KanComplex {
        &self.target
    }

    pub(crate) fn keys(&self) -> &Assembled<MapKey> {
        &self.keys
    }

    pub(crate) fn prisms(&self) -> &[Assembled<PrismKey>] {
        &self.prisms
    }

    pub(crate) fn ytab(&self) -> &Tables {
        &self.ytab
    }

    /// The vertex standing for a given map, undoing [`MappingSpace::vertex_map`].
    /// None when the map does not go from this complex's source to its target.
    pub fn vertex_of(&self, m: &SimplicialMap) -> Option<usize> {
        if m.source() != &self.source || m.target() != self.target.data() {
            return None;
        }
        let key: MapKey = (0..=self.space.bound())
            .map(|p| {
                (0..self.prisms[0].data.nondeg_count(p))
                    .map(|pid| {
                        let (a_ref, _) = self.prisms[0].key_of_nondeg(p, pid);
                        self.ytab.idx(p, m.image(p, a_ref.base))
                    })
                    .collect()
            })
            .collect();
        self.keys.find_ref(0, &key).map(|r| r.base)
    }

    /// The map A → Y that vertex `v` of the function complex stands for.
    pub fn vertex_map(&self, v: usize) -> SimplicialMap {
        let key = self.keys.key_of_nondeg(0, v);
        let images = (0..=self.source.bound())
            .map(|p| {
                (0..self.source.nondeg_count(p))
                    .map(|id| {
                        let pair = (SimplexRef::nondeg(id), vec![0; p + 1]);
                        let idx = map_value(&self.prisms[0], &self.ytab, key, p, &pair);
                        self.ytab.simplex_ref(p, idx).clone()
                    })
                    .collect()
            })
            .collect();
        SimplicialMap::new(self.source.clone(), self.target.data().clone(), images)
            .expect("an enumerated simplex of the function complex is a map")
    }

    /// The inclusion Y → hom(A, Y) of constant families: a k-simplex y
    /// goes to the composite of y with the projection A × Δ[k] → Δ[k].
    /// Evaluation at any vertex of A takes it back to y on the nose.
    pub fn constants(&self) -> Result<SimplicialMap> {
        let y = self.target.data();
        let bh = self.space.bound();
        let images = (0..=y.bound())
            .map(|k| {
                (0..y.nondeg_count(k))
                    .map(|id| {
                        let key: MapKey = (0..=bh)
                            .map(|p| {
                                (0..self.prisms[k].data.nondeg_count(p))
                                    .map(|pid| {
                                        let (_, t) = self.prisms[k].key_of_nondeg(p, pid);
                                        self.ytab.restrict(k, id, t)
                                    })
                                    .collect()
                            })
                            .collect();
                        self.keys.ref_of(k, &key).clone()
                    })
                    .collect()
            })
            .collect();
        SimplicialMap::new(y.clone(), self.space.data().clone(), images)
    }

    /// Evaluation at a vertex of A, as a map out of the function complex.
    pub fn evaluation_at(&self, v: usize) -> Result<SimplicialMap> {
        let bh = self.space.bound();
        let images = (0..=bh)
            .map(|k| {
                (0..self.space.nondeg_count(k))
                    .map(|id| {
                        let key = self.keys.key_of_nondeg(k, id);
                        let pair = (self.source.degenerate_vertex(v, k), (0..=k).collect());
                        let idx = map_value(&self.prisms[k], &self.ytab, key, k, &pair);
                        self.ytab.simplex_ref(k, idx).clone()
                    })
                    .collect()
            })
            .collect();
        SimplicialMap::new(self.space.data().clone(), self.target.data().clone(), images)
    }
}

/// Reading data against a fixed bound: raise coskeletally below it, drop
/// stored levels above it.
fn at_bound(a: &SimplicialData, bound: usize, limits: &Limits) -> Result<SimplicialData> {
    if a.bound() < bound {
        raise_data(a, bound, limits)
    } else if a.bound() > bound {
        let mut levels = a.clone_levels();
        levels.truncate(bound + 1);
        SimplicialData::new(bound, levels)
    } else {
        Ok(a.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::symmetric;
    use crate::spaces::{classifying_space, discrete, point};
    use crate::simplicial::{circle, standard_simplex};
    use crate::testutil::z2_nerve_by_hand;

    fn lim() -> Limits {
        Limits::default()
    }

    fn bz2() -> KanComplex {
        kan_check(z2_nerve_by_hand(), &lim()).unwrap()
    }

    #[test]
    fn products_of_discrete_spaces_multiply_points() {
        let two = discrete(2, &lim()).unwrap();
        let three = discrete(3, &lim()).unwrap();
        let p = product(&two, &three, &lim()).unwrap();
        assert_eq!(p.space.vertex_count(), 6);
        assert_eq!(p.space.nondeg_count(1), 0);
    }

    #[test]
    fn the_point_is_a_strict_unit() {
        let b = bz2();
        let p = product(&b, &point(&lim()).unwrap(), &lim()).unwrap();
        assert_eq!(p.space.data(), b.data());
        assert_eq!(p.left, SimplicialMap::identity(b.data()));
    }

    #[test]
    fn product_projections_commute_with_structure() {
        let b = bz2();
        let two = discrete(2, &lim()).unwrap();
        let p = product(&two, &b, &lim()).unwrap();
        assert_eq!(p.space.vertex_count(), 2);
        assert_eq!(p.space.nondeg_count(1), 2);
        assert_eq!(p.space.nondeg_count(2), 2);
        assert!(!p.right.is_isomorphism());
    }

    #[test]
    fn coproducts_still_work_from_their_new_home() {
        let two = discrete(2, &lim()).unwrap();
        let s = coproduct(&two, &bz2(), &lim()).unwrap();
        assert_eq!(s.bound(), 2);
        assert_eq!(s.vertex_count(), 3);
        assert_eq!(s.nondeg_count(1), 1);
    }

    #[test]
    fn hom_between_finite_sets_is_the_function_set() {
        let two = discrete(2, &lim()).unwrap();
        let three = discrete(3, &lim()).unwrap();
        let h = hom_complex(two.data(), &three, &lim()).unwrap();
        assert_eq!(h.space().vertex_count(), 9);
        assert_eq!(h.space().total_count(1), 9);
        let f = h.vertex_map(0);
        assert_eq!(f.source().vertex_count(), 2);
        assert_eq!(f.target().vertex_count(), 3);
    }

    #[test]
    fn hom_out_of_the_point_has_the_target_counts() {
        let b = bz2();
        let h = hom_complex(point(&lim()).unwrap().data(), &b, &lim()).unwrap();
        for d in 0..=2 {
            assert_eq!(h.space().nondeg_count(d), b.nondeg_count(d));
        }
    }

    #[test]
    fn self_maps_of_the_z2_nerve() {
        let b = bz2();
        let h = hom_complex(b.data(), &b, &lim()).unwrap();
        // identity and collapse, never homotopic, each with one central
        // self-conjugation loop
        assert_eq!(h.space().vertex_count(), 2);
        assert_eq!(h.space().nondeg_count(1), 2);
        for id in 0..2 {
            let e = &h.space().simplex(1, id).faces;
            assert_eq!(e[0], e[1]);
        }
        let kinds: Vec<bool> = (0..2).map(|v| h.vertex_map(v).is_isomorphism()).collect();
        assert_eq!(kinds.iter().filter(|&&k| k).count(), 1);
    }

    #[test]
    fn loops_in_a_classifying_space_are_group_elements() {
        let b = classifying_space(&symmetric(3), &lim()).unwrap();
        let h = hom_complex(&circle(2), &b, &lim()).unwrap();
        assert_eq!(h.space().vertex_count(), 6);
    }

    #[test]
    fn paths_spaces_connect_endpoint_candidates() {
        let b = bz2();
        let h = hom_complex(&standard_simplex(1, 2), &b, &lim()).unwrap();
        assert_eq!(h.space().vertex_count(), 2);
        let joined = (0..h.space().nondeg_count(1)).any(|id| {
            let f = &h.space().simplex(1, id).faces;
            f[0] != f[1]
        });
        assert!(joined, "the path space of a connected space is connected");
        let ev0 = h.evaluation_at(0).unwrap();
        let ev1 = h.evaluation_at(1).unwrap();
        assert_ne!(ev0, ev1);
    }
}
