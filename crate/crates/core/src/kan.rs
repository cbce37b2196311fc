//! Horn filling: certification, bound changes, fibration checking.
//!
//! [`kan_check`] is the one door to [`KanComplex`]; every certified complex
//! in the crate went through it. Horns are examined in dimensions 1 through
//! `bound + 1`. At `bound + 1` a filler lives in the coskeletal part, where
//! a simplex is a compatible family of top-level faces, so the missing face
//! is forced by the simplicial identities and filling reduces to its
//! existence. Above `bound + 1` the forced face is itself such a family and
//! always present, so nothing is checked there.

use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{EngineError, Result};
use crate::limits::{Budget, Limits};
use crate::maps::SimplicialMap;
use crate::simplicial::{
    assemble, Assembled, DenseLevels, FillerIndex, Simplex, SimplexRef, SimplicialData, Tables,
};

/// A horn with no filler: the faces of the would-be simplex of dimension
/// `dim`, with `None` at the missing position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HornWitness {
    pub dim: usize,
    pub missing: usize,
    pub faces: Vec<Option<SimplexRef>>,
}

impl fmt::Display for HornWitness {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "dimension {}, missing d_{},", self.dim, self.missing)?;
        for (j, face) in self.faces.iter().enumerate() {
            match face {
                Some(r) => write!(out, " d_{j}={r:?}")?,
                None => write!(out, " d_{j}=?")?,
            }
        }
        Ok(())
    }
}

/// A complex certified to fill all horns. Obtainable only from
/// [`kan_check`], so holding one is proof the check ran and passed.
#[derive(Clone, PartialEq, Eq)]
pub struct KanComplex {
    data: SimplicialData,
}

impl fmt::Debug for KanComplex {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "Kan{:?}", self.data)
    }
}

impl Deref for KanComplex {
    type Target = SimplicialData;

    fn deref(&self) -> &SimplicialData {
        &self.data
    }
}

impl KanComplex {
    pub fn data(&self) -> &SimplicialData {
        &self.data
    }

    pub fn into_data(self) -> SimplicialData {
        self.data
    }
}

/// Validate the simplicial identities, then certify horn filling in
/// dimensions 1 through `bound + 1`.
pub fn kan_check(data: SimplicialData, limits: &Limits) -> Result<KanComplex> {
    let report = data.validate();
    if !report.is_clean() {
        return Err(EngineError::InvalidData(report));
    }
    let mut budget = limits.budget("kan_check");
    let tables = Tables::new(&data, limits)?;
    let bound = data.bound();

    for dim in 1..=bound {
        let filler = FillerIndex::new(&tables, dim);
        let sf = (dim >= 2).then(|| SingleFace::new(&tables, dim - 1));
        for hole in 0..=dim {
            let found = scan_horns(&tables, sf.as_ref(), dim, hole, &mut budget, |faces, _| {
                !filler.with_hole(hole, faces).is_empty()
            })?;
            if let Some(w) = found {
                return Err(EngineError::NotKan(w));
            }
        }
    }

    let filler = FillerIndex::new(&tables, bound);
    let sf = SingleFace::new(&tables, bound);
    for hole in 0..=bound + 1 {
        let found = scan_horns(&tables, Some(&sf), bound + 1, hole, &mut budget, |_, tuple| {
            let forced = forced_face(&tables, bound, hole, tuple);
            !filler.with_faces(&forced).is_empty()
        })?;
        if let Some(w) = found {
            return Err(EngineError::NotKan(w));
        }
    }

    Ok(KanComplex { data })
}

/// Raise the stored bound without changing the denoted object: each new top
/// level is the set of compatible families over the old one, minus the
/// degeneracies of stored simplices.
pub fn raise_bound(x: &KanComplex, new_bound: usize, limits: &Limits) -> Result<KanComplex> {
    if new_bound <= x.bound() {
        return Ok(x.clone());
    }
    kan_check(raise_data(&x.data, new_bound, limits)?, limits)
}

/// The data-level part of [`raise_bound`]: coskeletal extension makes no
/// use of fillers, so it applies to auxiliary domains too.
pub(crate) fn raise_data(
    data: &SimplicialData,
    new_bound: usize,
    limits: &Limits,
) -> Result<SimplicialData> {
    let mut budget = limits.budget("raise_bound");
    let mut data = data.clone();
    while data.bound() < new_bound {
        data = raise_once(&data, limits, &mut budget)?;
    }
    Ok(data)
}

fn raise_once(data: &SimplicialData, limits: &Limits, budget: &mut Budget) -> Result<SimplicialData> {
    let bound = data.bound();
    let tables = Tables::new(data, limits)?;
    let sf = SingleFace::new(&tables, bound);

    // face families of s_i(x) for stored x; a compatible family not of this
    // shape is a new nondegenerate simplex
    let mut degenerate: HashSet<Vec<usize>> = HashSet::new();
    for idx in 0..tables.count(bound) {
        for i in 0..=bound {
            degenerate.insert(degeneracy_faces(&tables, bound, idx, i));
        }
    }

    let mut new_level: Vec<Simplex> = Vec::new();
    let search = TupleSearch {
        tables: &tables,
        d: bound,
        len: bound + 2,
        hole: None,
        sf: Some(&sf),
    };
    search.run(budget, &mut |tuple| {
        if !degenerate.contains(tuple) {
            new_level.push(Simplex {
                faces: tuple.iter().map(|&t| tables.simplex_ref(bound, t).clone()).collect(),
            });
            limits.check_level(bound + 1, new_level.len())?;
        }
        Ok(true)
    })?;

    let mut levels = data.clone_levels();
    levels.push(new_level);
    SimplicialData::new(bound + 1, levels)
}

/// Postnikov truncation: drop the stored levels above `n + 1`. The result
/// has bound `min(bound, n + 1)`; homotopy above `n` dies against the
/// coskeletal reading at the smaller bound.
pub fn truncate(x: &KanComplex, n: usize, limits: &Limits) -> Result<KanComplex> {
    let new_bound = (n + 1).min(x.bound());
    let mut levels = x.data.clone_levels();
    levels.truncate(new_bound + 1);
    kan_check(SimplicialData::new(new_bound, levels)?, limits)
}

/// Assemble a dense presentation known to be `m`-truncated, storing levels
/// `0..=m+1` only, and certify it. Constructions whose output is simpler
/// than their working bound (quotients, for one) come back down through
/// this.
pub fn rebound_truncated<P: DenseLevels>(
    provider: &P,
    m: usize,
    limits: &Limits,
) -> Result<(Assembled<P::Key>, KanComplex)> {
    let assembled = assemble(provider, m + 1, limits)?;
    let space = kan_check(assembled.data.clone(), limits)?;
    Ok((assembled, space))
}

/// Outcome of [`is_fibration`].
#[derive(Clone, Debug)]
pub enum FibrationVerdict {
    Fibration,
    Fails(LiftingWitness),
}

impl FibrationVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, FibrationVerdict::Fibration)
    }
}

/// A lifting problem with no solution: a horn in the source whose image
/// extends to a target simplex no source filler maps onto.
#[derive(Clone, Debug)]
pub struct LiftingWitness {
    pub dim: usize,
    pub missing: usize,
    pub horn: Vec<Option<SimplexRef>>,
    pub target: TargetCell,
}

/// The target simplex of a failed lift: stored, or (one level above the
/// bound) the face family that pins it down.
#[derive(Clone, Debug)]
pub enum TargetCell {
    Stored(SimplexRef),
    Sphere(Vec<SimplexRef>),
}

impl fmt::Display for LiftingWitness {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "horn at dimension {}, missing d_{},", self.dim, self.missing)?;
        for (j, face) in self.horn.iter().enumerate() {
            if let Some(r) = face {
                write!(out, " d_{j}={r:?}")?;
            }
        }
        match &self.target {
            TargetCell::Stored(r) => write!(out, " has no lift against {r:?}"),
            TargetCell::Sphere(faces) => write!(out, " has no lift against the family {faces:?}"),
        }
    }
}

/// Check the right lifting property against all horn inclusions. Both
/// complexes are read coskeletally, so dimensions 1 through `bound + 1`
/// decide it.
pub fn is_fibration(f: &SimplicialMap, limits: &Limits) -> Result<FibrationVerdict> {
    let mut budget = limits.budget("is_fibration");
    let xt = Tables::new(f.source(), limits)?;
    let yt = Tables::new(f.target(), limits)?;
    let bound = f.bound();

    let fidx: Vec<Vec<usize>> = (0..=bound)
        .map(|dim| {
            (0..xt.count(dim))
                .map(|i| yt.idx(dim, &f.apply(dim, xt.simplex_ref(dim, i))))
                .collect()
        })
        .collect();

    for dim in 1..=bound {
        let xf = FillerIndex::new(&xt, dim);
        let yf = FillerIndex::new(&yt, dim);
        let sf = (dim >= 2).then(|| SingleFace::new(&xt, dim - 1));
        for hole in 0..=dim {
            let mut bad = None;
            let search = TupleSearch {
                tables: &xt,
                d: dim - 1,
                len: dim + 1,
                hole: Some(hole),
                sf: sf.as_ref(),
            };
            search.run(&mut budget, &mut |tuple| {
                let mut faces = tuple.to_vec();
                faces.remove(hole);
                let image: Vec<usize> = faces.iter().map(|&t| fidx[dim - 1][t]).collect();
                let lifts = xf.with_hole(hole, &faces);
                for &sigma in yf.with_hole(hole, &image) {
                    if !lifts.iter().any(|&x| fidx[dim][x] == sigma) {
                        bad = Some(LiftingWitness {
                            dim,
                            missing: hole,
                            horn: horn_refs(&xt, dim, hole, tuple),
                            target: TargetCell::Stored(yt.simplex_ref(dim, sigma).clone()),
                        });
                        return Ok(false);
                    }
                }
                Ok(true)
            })?;
            if let Some(w) = bad {
                return Ok(FibrationVerdict::Fails(w));
            }
        }
    }

    let xf = FillerIndex::new(&xt, bound);
    let yf = FillerIndex::new(&yt, bound);
    let sf = SingleFace::new(&xt, bound);
    for hole in 0..=bound + 1 {
        let mut bad = None;
        let search = TupleSearch {
            tables: &xt,
            d: bound,
            len: bound + 2,
            hole: Some(hole),
            sf: Some(&sf),
        };
        search.run(&mut budget, &mut |tuple| {
            let forced_x = forced_face(&xt, bound, hole, tuple);
            let forced_y: Vec<usize> = forced_x.iter().map(|&t| fidx[bound - 1][t]).collect();
            let lifts = xf.with_faces(&forced_x);
            for &sigma in yf.with_faces(&forced_y) {
                if !lifts.iter().any(|&x| fidx[bound][x] == sigma) {
                    let sphere = tuple
                        .iter()
                        .enumerate()
                        .map(|(j, &t)| {
                            if j == hole {
                                yt.simplex_ref(bound, sigma).clone()
                            } else {
                                yt.simplex_ref(bound, fidx[bound][t]).clone()
                            }
                        })
                        .collect();
                    bad = Some(LiftingWitness {
                        dim: bound + 1,
                        missing: hole,
                        horn: horn_refs(&xt, bound + 1, hole, tuple),
                        target: TargetCell::Sphere(sphere),
                    });
                    return Ok(false);
                }
            }
            Ok(true)
        })?;
        if let Some(w) = bad {
            return Ok(FibrationVerdict::Fails(w));
        }
    }

    Ok(FibrationVerdict::Fibration)
}

/// Backtracking enumeration of compatible families: tuples of length `len`
/// of level `d` simplices satisfying d_a(f_b) = d_{b-1}(f_a) for a < b, with
/// an optional unconstrained hole. Entries are chosen left to right; the
/// first constraint is resolved through the single-face index, the rest by
/// direct table lookups.
struct TupleSearch<'a> {
    tables: &'a Tables,
    d: usize,
    len: usize,
    hole: Option<usize>,
    sf: Option<&'a SingleFace>,
}

impl TupleSearch<'_> {
    fn run(
        &self,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
    ) -> Result<()> {
        let mut tuple = Vec::with_capacity(self.len);
        self.go(&mut tuple, budget, visit).map(|_| ())
    }

    fn go(
        &self,
        tuple: &mut Vec<usize>,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
    ) -> Result<bool> {
        let pos = tuple.len();
        if pos == self.len {
            return visit(tuple);
        }
        if Some(pos) == self.hole {
            tuple.push(usize::MAX);
            let more = self.go(tuple, budget, visit)?;
            tuple.pop();
            return Ok(more);
        }
        let first = (0..pos).find(|&a| Some(a) != self.hole);
        match first {
            _ if self.d == 0 => {
                // vertices impose no conditions on each other
                for cand in 0..self.tables.count(0) {
                    if !self.descend(cand, tuple, budget, visit)? {
                        return Ok(false);
                    }
                }
            }
            None => {
                for cand in 0..self.tables.count(self.d) {
                    if !self.descend(cand, tuple, budget, visit)? {
                        return Ok(false);
                    }
                }
            }
            Some(a0) => {
                let want = self.tables.face(self.d, tuple[a0], pos - 1);
                let sf = self.sf.expect("constrained search needs a single-face index");
                for &cand in sf.get(a0, want) {
                    let ok = (a0 + 1..pos).filter(|&a| Some(a) != self.hole).all(|a| {
                        self.tables.face(self.d, cand, a)
                            == self.tables.face(self.d, tuple[a], pos - 1)
                    });
                    if ok && !self.descend(cand, tuple, budget, visit)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    fn descend(
        &self,
        cand: usize,
        tuple: &mut Vec<usize>,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
    ) -> Result<bool> {
        budget.tick(|| format!("family search over level {}", self.d))?;
        tuple.push(cand);
        let more = self.go(tuple, budget, visit)?;
        tuple.pop();
        Ok(more)
    }
}

/// For a level `d >= 1`: which simplices have face `v` at position `pos`.
struct SingleFace {
    buckets: Vec<Vec<Vec<usize>>>,
}

impl SingleFace {
    fn new(tables: &Tables, d: usize) -> SingleFace {
        let below = tables.count(d - 1);
        let mut buckets = vec![vec![Vec::new(); below]; d + 1];
        for idx in 0..tables.count(d) {
            for pos in 0..=d {
                buckets[pos][tables.face(d, idx, pos)].push(idx);
            }
        }
        SingleFace { buckets }
    }

    fn get(&self, pos: usize, v: usize) -> &[usize] {
        &self.buckets[pos][v]
    }
}

fn scan_horns(
    tables: &Tables,
    sf: Option<&SingleFace>,
    dim: usize,
    hole: usize,
    budget: &mut Budget,
    mut fillable: impl FnMut(&[usize], &[usize]) -> bool,
) -> Result<Option<HornWitness>> {
    let search = TupleSearch { tables, d: dim - 1, len: dim + 1, hole: Some(hole), sf };
    let mut witness = None;
    search.run(budget, &mut |tuple| {
        let mut faces = tuple.to_vec();
        faces.remove(hole);
        if fillable(&faces, tuple) {
            Ok(true)
        } else {
            witness = Some(HornWitness {
                dim,
                missing: hole,
                faces: horn_refs(tables, dim, hole, tuple),
            });
            Ok(false)
        }
    })?;
    Ok(witness)
}

/// Faces of the missing face of a horn at `bound + 1`, dictated by
/// d_a(t_i) = d_{i-1}(t_a) for a < i and d_{b-1}(t_i) = d_i(t_b) for b > i.
fn forced_face(tables: &Tables, bound: usize, hole: usize, tuple: &[usize]) -> Vec<usize> {
    let mut forced = Vec::with_capacity(bound + 1);
    for a in 0..hole {
        forced.push(tables.face(bound, tuple[a], hole - 1));
    }
    for b in hole + 1..=bound + 1 {
        forced.push(tables.face(bound, tuple[b], hole));
    }
    forced
}

/// Face indices of s_i(x) for x at the top level, by the identities
/// d_j s_i = s_{i-1} d_j (j < i), identity (j = i, i+1), s_i d_{j-1} (else).
fn degeneracy_faces(tables: &Tables, bound: usize, x: usize, i: usize) -> Vec<usize> {
    (0..=bound + 1)
        .map(|j| {
            if j == i || j == i + 1 {
                x
            } else if j < i {
                tables.degeneracy(bound - 1, tables.face(bound, x, j), i - 1)
            } else {
                tables.degeneracy(bound - 1, tables.face(bound, x, j - 1), i)
            }
        })
        .collect()
}

fn horn_refs(tables: &Tables, dim: usize, hole: usize, tuple: &[usize]) -> Vec<Option<SimplexRef>> {
    tuple
        .iter()
        .enumerate()
        .map(|(j, &t)| (j != hole).then(|| tables.simplex_ref(dim - 1, t).clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard_simplex;
    use crate::testutil::{z2_nerve_by_hand, Z2Strings};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn group_nerve_is_kan() {
        let x = kan_check(z2_nerve_by_hand(), &lim()).unwrap();
        assert_eq!(x.bound(), 2);
    }

    #[test]
    fn the_walking_arrow_is_not_kan_and_the_witness_is_real() {
        let data = standard_simplex(1, 2);
        let err = kan_check(data.clone(), &lim()).unwrap_err();
        let EngineError::NotKan(w) = err else { panic!("expected a horn witness") };
        assert_eq!(w.dim, 2);
        // brute scan: nothing stored or degenerate fills the reported horn
        let tables = Tables::new(&data, &lim()).unwrap();
        for idx in 0..tables.count(2) {
            let candidate = tables.simplex_ref(2, idx);
            let fills = (0..=2)
                .filter(|&j| j != w.missing)
                .all(|j| Some(&data.face(2, candidate, j)) == w.faces[j].as_ref());
            assert!(!fills, "witness horn is filled by {candidate:?}");
        }
    }

    #[test]
    fn raising_the_nerve_adds_the_word_triples() {
        let x = kan_check(z2_nerve_by_hand(), &lim()).unwrap();
        let raised = raise_bound(&x, 3, &lim()).unwrap();
        assert_eq!(raised.bound(), 3);
        assert_eq!(raised.nondeg_count(3), 1); // (g, g, g)
        assert_eq!(raised.total_count(3), 8); // all triples over Z/2
    }

    #[test]
    fn raise_then_truncate_returns_the_stored_levels() {
        let x = kan_check(z2_nerve_by_hand(), &lim()).unwrap();
        let up = raise_bound(&x, 4, &lim()).unwrap();
        assert_eq!(up.total_count(4), 16);
        let back = truncate(&up, 1, &lim()).unwrap();
        assert_eq!(back.data(), x.data());
    }

    #[test]
    fn truncation_to_dimension_zero_keeps_bound_one() {
        let x = kan_check(z2_nerve_by_hand(), &lim()).unwrap();
        let t = truncate(&x, 0, &lim()).unwrap();
        assert_eq!(t.bound(), 1);
        // the loop is still stored; it bounds in the coskeletal reading
        assert_eq!(t.nondeg_count(1), 1);
    }

    #[test]
    fn rebounding_a_dense_presentation_certifies_it() {
        let (assembled, space) = rebound_truncated(&Z2Strings, 1, &lim()).unwrap();
        assert_eq!(space.bound(), 2);
        assert_eq!(space.data(), &assembled.data);
        assert_eq!(space.data(), &z2_nerve_by_hand());
    }

    #[test]
    fn vertex_inclusion_into_the_nerve_is_not_a_fibration() {
        let pt = standard_simplex(0, 2);
        let y = z2_nerve_by_hand();
        let f = SimplicialMap::constant(&pt, &y, 0).unwrap();
        let FibrationVerdict::Fails(w) = is_fibration(&f, &lim()).unwrap() else {
            panic!("expected a failing lift");
        };
        assert_eq!(w.dim, 1);
        // the unliftable target is the nondegenerate loop
        match &w.target {
            TargetCell::Stored(r) => assert_eq!(r, &SimplexRef::nondeg(0)),
            TargetCell::Sphere(_) => panic!("stored target expected at dimension 1"),
        }
    }

    #[test]
    fn projection_to_the_point_is_a_fibration_exactly_for_kan_sources() {
        let pt = standard_simplex(0, 2);
        let f = SimplicialMap::constant(&z2_nerve_by_hand(), &pt, 0).unwrap();
        assert!(is_fibration(&f, &lim()).unwrap().holds());
        let g = SimplicialMap::constant(&standard_simplex(1, 2), &pt, 0).unwrap();
        assert!(!is_fibration(&g, &lim()).unwrap().holds());
    }

    #[test]
    fn identities_are_fibrations() {
        let y = z2_nerve_by_hand();
        assert!(is_fibration(&SimplicialMap::identity(&y), &lim()).unwrap().holds());
    }
}
