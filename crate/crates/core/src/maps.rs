//! Maps of truncated simplicial data.
//!
//! A map is stored by its values on nondegenerate simplices only and acts on
//! arbitrary references by `f(s_W b) = s_W f(b)`, so it commutes with
//! degeneracies by construction. Construction verifies commutation with
//! faces; maps into a coskeletally read target need nothing above the bound,
//! since simplices there are sphere families and their images are forced.

use serde::{Deserialize, Serialize};

use crate::error::{EngineError, Result};
use crate::simplicial::{SimplexRef, SimplicialData};
use crate::word;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SimplicialMap {
    source: SimplicialData,
    target: SimplicialData,
    images: Vec<Vec<SimplexRef>>,
}

impl SimplicialMap {
    pub fn new(
        source: SimplicialData,
        target: SimplicialData,
        images: Vec<Vec<SimplexRef>>,
    ) -> Result<SimplicialMap> {
        if source.bound() != target.bound() {
            return Err(EngineError::BoundMismatch {
                left: source.bound(),
                right: target.bound(),
            });
        }
        let bound = source.bound();
        if images.len() != bound + 1 {
            return Err(EngineError::InvalidMap(format!(
                "expected {} image levels, got {}",
                bound + 1,
                images.len()
            )));
        }
        for dim in 0..=bound {
            if images[dim].len() != source.nondeg_count(dim) {
                return Err(EngineError::InvalidMap(format!(
                    "level {dim} has {} simplices but {} images",
                    source.nondeg_count(dim),
                    images[dim].len()
                )));
            }
            for (id, r) in images[dim].iter().enumerate() {
                if !word::is_canonical(&r.word) || r.word.len() > dim {
                    return Err(EngineError::InvalidMap(format!(
                        "image of simplex {id} at level {dim} has bad word {:?}",
                        r.word
                    )));
                }
                let base_dim = dim - r.word.len();
                if r.base >= target.nondeg_count(base_dim) {
                    return Err(EngineError::InvalidMap(format!(
                        "image of simplex {id} at level {dim} points at missing simplex {} of level {base_dim}",
                        r.base
                    )));
                }
            }
        }
        let map = SimplicialMap { source, target, images };
        for dim in 1..=bound {
            for id in 0..map.source.nondeg_count(dim) {
                let r = SimplexRef::nondeg(id);
                for i in 0..=dim {
                    let through_source = map.apply(dim - 1, &map.source.face(dim, &r, i));
                    let through_target = map.target.face(dim, &map.images[dim][id], i);
                    if through_source != through_target {
                        return Err(EngineError::InvalidMap(format!(
                            "face {i} of simplex {id} at level {dim} does not commute: \
                             {through_source:?} vs {through_target:?}"
                        )));
                    }
                }
            }
        }
        Ok(map)
    }

    pub fn source(&self) -> &SimplicialData {
        &self.source
    }

    pub fn target(&self) -> &SimplicialData {
        &self.target
    }

    pub fn bound(&self) -> usize {
        self.source.bound()
    }

    pub fn image(&self, dim: usize, id: usize) -> &SimplexRef {
        &self.images[dim][id]
    }

    /// Value on an arbitrary reference of dimension `dim`.
    pub fn apply(&self, dim: usize, r: &SimplexRef) -> SimplexRef {
        let base_dim = r.base_dim(dim);
        let b = &self.images[base_dim][r.base];
        SimplexRef {
            word: word::compose(&r.word, &b.word),
            base: b.base,
        }
    }

    pub fn identity(data: &SimplicialData) -> SimplicialMap {
        let images = (0..=data.bound())
            .map(|dim| (0..data.nondeg_count(dim)).map(SimplexRef::nondeg).collect())
            .collect();
        SimplicialMap {
            source: data.clone(),
            target: data.clone(),
            images,
        }
    }

    /// Collapse everything onto the degeneracies of one target vertex.
    pub fn constant(source: &SimplicialData, target: &SimplicialData, vertex: usize) -> Result<SimplicialMap> {
        if vertex >= target.vertex_count() {
            return Err(EngineError::NoSuchVertex { vertex, count: target.vertex_count() });
        }
        let images = (0..=source.bound())
            .map(|dim| {
                (0..source.nondeg_count(dim))
                    .map(|_| target.degenerate_vertex(vertex, dim))
                    .collect()
            })
            .collect();
        SimplicialMap::new(source.clone(), target.clone(), images)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if self.target != other.source {
            return Err(EngineError::InvalidMap(
                "composition targets do not line up".into(),
            ));
        }
        let images = (0..=self.bound())
            .map(|dim| {
                (0..self.source.nondeg_count(dim))
                    .map(|id| other.apply(dim, &self.images[dim][id]))
                    .collect()
            })
            .collect();
        Ok(SimplicialMap {
            source: self.source.clone(),
            target: other.target.clone(),
            images,
        })
    }

    /// Levelwise bijection on nondegenerate simplices. Such a map has an
    /// inverse that is again simplicial, so this is isomorphism of data.
    pub fn is_isomorphism(&self) -> bool {
        for dim in 0..=self.bound() {
            if self.source.nondeg_count(dim) != self.target.nondeg_count(dim) {
                return false;
            }
            let mut seen = vec![false; self.target.nondeg_count(dim)];
            for r in &self.images[dim] {
                if !r.is_nondegenerate() || seen[r.base] {
                    return false;
                }
                seen[r.base] = true;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard_simplex;

    #[test]
    fn identity_and_constant_maps_validate() {
        let d2 = standard_simplex(2, 2);
        let id = SimplicialMap::identity(&d2);
        assert!(id.is_isomorphism());
        let c = SimplicialMap::constant(&d2, &d2, 1).unwrap();
        assert!(!c.is_isomorphism());
        // the collapsed triangle is the doubly degenerate vertex 1
        assert_eq!(c.image(2, 0), &SimplexRef { word: vec![1, 0], base: 1 });
        assert_eq!(id.then(&c).unwrap(), c);
    }

    #[test]
    fn non_commuting_images_are_rejected() {
        let d1 = standard_simplex(1, 1);
        // send the edge 01 to the degenerate edge at vertex 0, but vertex 1 to 1
        let images = vec![
            vec![SimplexRef::nondeg(0), SimplexRef::nondeg(1)],
            vec![SimplexRef { word: vec![0], base: 0 }],
        ];
        let err = SimplicialMap::new(d1.clone(), d1, images).unwrap_err();
        assert!(matches!(err, EngineError::InvalidMap(_)));
    }
}
