//! Dependent products: the space of sections of a family, pushed
//! forward along a fibration.
//!
//! A k-simplex over a k-simplex σ of the base Y is a truncated
//! simplicial map from the pullback prism Δ[k] ×_Y X into E that
//! commutes with the projections to X. The prism reuses the product
//! machinery of the function complexes, filtered fiberwise; sections
//! are enumerated by the same backtracking search, with candidates
//! additionally pinned to the right fiber of E.

use crate::error::{EngineError, Result};
use crate::hom::{map_value, maps_into, FiberedSearch, MapKey, OverBase, PrismKey, PrismLevels};
use crate::kan::{is_fibration, rebound_truncated, KanComplex};
use crate::limits::Limits;
use crate::maps::SimplicialMap;
use crate::simplicial::{
    assemble, Assembled, DenseLevels, FillerIndex, SimplexRef, SimplicialData, Tables,
};

pub struct DependentProduct {
    pub space: KanComplex,
    pub fibration: SimplicialMap,
}

/// The base simplex paired with one section over its pullback prism.
type SectionKey = (SimplexRef, MapKey);

struct SectionLevels<'a> {
    y: &'a SimplicialData,
    ytab: &'a Tables,
    etab: &'a Tables,
    prisms: &'a [Vec<Assembled<PrismKey>>],
    sections: &'a [Vec<Vec<MapKey>>],
    bound: usize,
}

impl SectionLevels<'_> {
    /// Reads a section over one base simplex back along a vertex map of
    /// standard simplices, producing the induced section over the other.
    fn transport(
        &self,
        from: (usize, usize),
        s: &MapKey,
        to: (usize, usize),
        vertex: impl Fn(usize) -> usize,
    ) -> MapKey {
        let src = &self.prisms[from.0][from.1];
        let dst = &self.prisms[to.0][to.1];
        (0..=self.bound)
            .map(|p| {
                (0..dst.data.nondeg_count(p))
                    .map(|pid| {
                        let (x, t) = dst.key_of_nondeg(p, pid);
                        let moved = (x.clone(), t.iter().map(|&v| vertex(v)).collect());
                        map_value(src, self.etab, s, p, &moved)
                    })
                    .collect()
            })
            .collect()
    }
}

impl DenseLevels for SectionLevels<'_> {
    type Key = SectionKey;

    fn level(&self, k: usize) -> Vec<SectionKey> {
        let mut out = Vec::new();
        for si in 0..self.ytab.count(k) {
            let r = self.ytab.simplex_ref(k, si);
            for s in &self.sections[k][si] {
                out.push((r.clone(), s.clone()));
            }
        }
        out
    }

    fn face(&self, k: usize, key: &SectionKey, i: usize) -> SectionKey {
        let from = (k, self.ytab.idx(k, &key.0));
        let tr = self.y.face(k, &key.0, i);
        let to = (k - 1, self.ytab.idx(k - 1, &tr));
        let vals = self.transport(from, &key.1, to, |v| if v < i { v } else { v + 1 });
        (tr, vals)
    }

    fn degeneracy(&self, k: usize, key: &SectionKey, i: usize) -> SectionKey {
        let from = (k, self.ytab.idx(k, &key.0));
        let tr = self.y.degeneracy(&key.0, i);
        let to = (k + 1, self.ytab.idx(k + 1, &tr));
        let vals = self.transport(from, &key.1, to, |v| if v <= i { v } else { v - 1 });
        (tr, vals)
    }
}

/// Π_f of the family p, for p: E → X and f: X → Y both fibrations.
pub fn dependent_product(
    p: &SimplicialMap,
    f: &SimplicialMap,
    limits: &Limits,
) -> Result<DependentProduct> {
    if p.target() != f.source() {
        return Err(EngineError::InvalidMap(
            "the family must sit over the source of the pushforward leg".into(),
        ));
    }
    if !is_fibration(p, limits)?.holds() {
        return Err(EngineError::NotFibration("the family is not a fibration".into()));
    }
    if !is_fibration(f, limits)?.holds() {
        return Err(EngineError::NotFibration("the pushforward leg is not a fibration".into()));
    }

    let bound = f.bound();
    let xtab = Tables::new(f.source(), limits)?;
    let ytab = Tables::new(f.target(), limits)?;
    let etab = Tables::new(p.source(), limits)?;
    let efill: Vec<FillerIndex> = (1..=bound).map(|d| FillerIndex::new(&etab, d)).collect();

    // table-index forms of the two legs, so the searches compare plain
    // numbers instead of rebuilding refs
    let fidx: Vec<Vec<usize>> = (0..=bound)
        .map(|d| {
            (0..xtab.count(d))
                .map(|i| ytab.idx(d, &f.apply(d, xtab.simplex_ref(d, i))))
                .collect()
        })
        .collect();
    let pidx: Vec<Vec<usize>> = (0..=bound)
        .map(|d| {
            (0..etab.count(d))
                .map(|i| xtab.idx(d, &p.apply(d, etab.simplex_ref(d, i))))
                .collect()
        })
        .collect();

    let mut budget = limits.budget("dependent_product");
    let mut prisms: Vec<Vec<Assembled<PrismKey>>> = Vec::with_capacity(bound + 1);
    let mut sections: Vec<Vec<Vec<MapKey>>> = Vec::with_capacity(bound + 1);
    for k in 0..=bound {
        let mut row_prisms = Vec::with_capacity(ytab.count(k));
        let mut row_sections = Vec::with_capacity(ytab.count(k));
        for si in 0..ytab.count(k) {
            let provider = PrismLevels {
                a: f.source(),
                atab: &xtab,
                k,
                over: Some(OverBase { base_tab: &ytab, base_idx: si, image_idx: &fidx }),
            };
            let prism = assemble(&provider, bound, limits)?;
            let required: Vec<Vec<Option<usize>>> = (0..=bound)
                .map(|d| {
                    (0..prism.data.nondeg_count(d))
                        .map(|pid| Some(xtab.idx(d, &prism.key_of_nondeg(d, pid).0)))
                        .collect()
                })
                .collect();
            let fiber = FiberedSearch { target_leg: Some(&pidx), required: &required };
            row_sections.push(maps_into(
                &prism.data,
                &etab,
                &efill,
                Some(fiber),
                k,
                limits,
                &mut budget,
            )?);
            row_prisms.push(prism);
        }
        prisms.push(row_prisms);
        sections.push(row_sections);
    }

    let provider = SectionLevels {
        y: f.target(),
        ytab: &ytab,
        etab: &etab,
        prisms: &prisms,
        sections: &sections,
        bound,
    };
    let (keys, space) = rebound_truncated(&provider, bound - 1, limits)?;

    let images = (0..=bound)
        .map(|k| {
            (0..space.nondeg_count(k))
                .map(|id| keys.key_of_nondeg(k, id).0.clone())
                .collect()
        })
        .collect();
    let fibration = SimplicialMap::new(space.data().clone(), f.target().clone(), images)?;
    Ok(DependentProduct { space, fibration })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::{hom_complex, product};
    use crate::kan::{kan_check, raise_bound};
    use crate::spaces::{discrete, point};
    use crate::testutil::z2_nerve_by_hand;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn sections_of_a_trivial_family_count_functions() {
        let two = discrete(2, &lim()).unwrap();
        let three = discrete(3, &lim()).unwrap();
        let unit = point(&lim()).unwrap();
        let family = product(&two, &three, &lim()).unwrap().left;
        let leg = SimplicialMap::constant(two.data(), unit.data(), 0).unwrap();
        let pi = dependent_product(&family, &leg, &lim()).unwrap();
        assert_eq!(pi.space.data(), discrete(9, &lim()).unwrap().data());
        assert_eq!(pi.fibration.target(), unit.data());
    }

    #[test]
    fn pushing_along_the_identity_returns_the_family() {
        let two = discrete(2, &lim()).unwrap();
        let three = discrete(3, &lim()).unwrap();
        let prod = product(&two, &three, &lim()).unwrap();
        let pi = dependent_product(&prod.left, &SimplicialMap::identity(two.data()), &lim())
            .unwrap();
        assert_eq!(pi.space.data(), prod.space.data());
        for v in 0..6 {
            assert_eq!(pi.fibration.image(0, v), prod.left.image(0, v));
        }
    }

    #[test]
    fn sections_over_a_nerve_match_the_function_complex() {
        let b = kan_check(z2_nerve_by_hand(), &lim()).unwrap();
        let two = raise_bound(&discrete(2, &lim()).unwrap(), 2, &lim()).unwrap();
        let unit = raise_bound(&point(&lim()).unwrap(), 2, &lim()).unwrap();
        let family = product(&b, &two, &lim()).unwrap().left;
        let leg = SimplicialMap::constant(b.data(), unit.data(), 0).unwrap();
        let pi = dependent_product(&family, &leg, &lim()).unwrap();
        let maps = hom_complex(b.data(), &two, &lim()).unwrap();
        assert_eq!(pi.space.vertex_count(), 2);
        assert_eq!(pi.space.vertex_count(), maps.space().vertex_count());
        assert_eq!(pi.space.nondeg_count(1), 0);
    }

    #[test]
    fn non_fibrations_are_turned_away() {
        let b = kan_check(z2_nerve_by_hand(), &lim()).unwrap();
        let unit = raise_bound(&point(&lim()).unwrap(), 2, &lim()).unwrap();
        let into = SimplicialMap::constant(unit.data(), b.data(), 0).unwrap();
        let ok = SimplicialMap::constant(b.data(), unit.data(), 0).unwrap();
        let err = dependent_product(&ok, &ok, &lim());
        assert!(matches!(err, Err(EngineError::InvalidMap(_))));
        let err = dependent_product(&into, &ok, &lim());
        assert!(matches!(err, Err(EngineError::NotFibration(_))));
    }
}
