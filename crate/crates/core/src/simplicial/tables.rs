use std::collections::HashMap;

use crate::error::Result;
use crate::limits::Limits;

use super::{SimplexRef, SimplicialData};
use crate::word::valid_words;

/// Dense per-level view of a complex: every simplex of every stored level,
/// degenerate ones included, indexed by position in a canonical enumeration
/// (nondegenerate simplices first in storage order, then degenerate ones
/// sorted by base and word). Face and degeneracy maps become integer tables.
pub struct Tables {
    bound: usize,
    refs: Vec<Vec<SimplexRef>>,
    index: Vec<HashMap<SimplexRef, usize>>,
    nondeg: Vec<usize>,
    faces: Vec<Vec<Vec<usize>>>,
    degs: Vec<Vec<Vec<usize>>>,
}

impl Tables {
    pub fn new(data: &SimplicialData, limits: &Limits) -> Result<Tables> {
        let bound = data.bound();
        let mut refs: Vec<Vec<SimplexRef>> = Vec::with_capacity(bound + 1);
        let mut index: Vec<HashMap<SimplexRef, usize>> = Vec::with_capacity(bound + 1);
        let mut nondeg = Vec::with_capacity(bound + 1);
        for dim in 0..=bound {
            let mut level: Vec<SimplexRef> =
                (0..data.nondeg_count(dim)).map(SimplexRef::nondeg).collect();
            nondeg.push(level.len());
            let mut degenerate = Vec::new();
            for base_dim in 0..dim {
                for word in valid_words(base_dim, dim - base_dim) {
                    for base in 0..data.nondeg_count(base_dim) {
                        degenerate.push(SimplexRef { word: word.clone(), base });
                    }
                }
            }
            degenerate.sort_by(|a, b| (&a.base, &a.word).cmp(&(&b.base, &b.word)));
            level.extend(degenerate);
            limits.check_level(dim, level.len())?;
            let map = level
                .iter()
                .enumerate()
                .map(|(i, r)| (r.clone(), i))
                .collect::<HashMap<_, _>>();
            refs.push(level);
            index.push(map);
        }

        let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
        for dim in 1..=bound {
            let table = refs[dim]
                .iter()
                .map(|r| {
                    (0..=dim)
                        .map(|i| index[dim - 1][&data.face(dim, r, i)])
                        .collect()
                })
                .collect();
            faces.push(table);
        }
        let mut degs: Vec<Vec<Vec<usize>>> = Vec::with_capacity(bound);
        for dim in 0..bound {
            let table = refs[dim]
                .iter()
                .map(|r| {
                    (0..=dim)
                        .map(|i| index[dim + 1][&data.degeneracy(r, i)])
                        .collect()
                })
                .collect();
            degs.push(table);
        }

        Ok(Tables { bound, refs, index, nondeg, faces, degs })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn count(&self, dim: usize) -> usize {
        self.refs[dim].len()
    }

    pub fn nondeg_count(&self, dim: usize) -> usize {
        self.nondeg[dim]
    }

    pub fn is_nondeg(&self, dim: usize, idx: usize) -> bool {
        idx < self.nondeg[dim]
    }

    pub fn simplex_ref(&self, dim: usize, idx: usize) -> &SimplexRef {
        &self.refs[dim][idx]
    }

    pub fn idx(&self, dim: usize, r: &SimplexRef) -> usize {
        self.index[dim][r]
    }

    pub fn face(&self, dim: usize, idx: usize, i: usize) -> usize {
        self.faces[dim][idx][i]
    }

    pub fn degeneracy(&self, dim: usize, idx: usize, i: usize) -> usize {
        self.degs[dim][idx][i]
    }

    /// Index of `s_{dim-1} ... s_0 v` at `dim`.
    pub fn degenerate_vertex(&self, v: usize, dim: usize) -> usize {
        let mut idx = v;
        for d in 0..dim {
            idx = self.degs[d][idx][d];
        }
        idx
    }

    /// All face indices of `idx` at `dim` as a vector.
    pub fn face_vector(&self, dim: usize, idx: usize) -> Vec<usize> {
        self.faces[dim][idx].clone()
    }

    /// The image of simplex `idx` under the monotone vertex map recorded
    /// by `t`, a weakly increasing tuple with entries in `0..=dim`. Values
    /// missing from `t` become faces (taken largest first, so positions
    /// stay put) and repeated entries become degeneracies.
    pub fn restrict(&self, dim: usize, idx: usize, t: &[usize]) -> usize {
        let mut d = dim;
        let mut cur = idx;
        for m in (0..=dim).rev() {
            if !t.contains(&m) {
                cur = self.faces[d][cur][m];
                d -= 1;
            }
        }
        for j in 0..t.len().saturating_sub(1) {
            if t[j] == t[j + 1] {
                cur = self.degs[d][cur][j];
                d += 1;
            }
        }
        cur
    }
}

/// Lookup from prescribed faces to the simplices having them, one map per
/// "hole" position plus one for the full face vector. This is what makes
/// horn filling and lifting searches cheap: a filler candidate set is a
/// single hash lookup.
pub struct FillerIndex {
    dim: usize,
    by_hole: Vec<HashMap<Vec<usize>, Vec<usize>>>,
    full: HashMap<Vec<usize>, Vec<usize>>,
}

impl FillerIndex {
    /// Build for level `dim >= 1` of `tables`.
    pub fn new(tables: &Tables, dim: usize) -> FillerIndex {
        let mut by_hole: Vec<HashMap<Vec<usize>, Vec<usize>>> = vec![HashMap::new(); dim + 1];
        let mut full: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for idx in 0..tables.count(dim) {
            let fv = tables.face_vector(dim, idx);
            full.entry(fv.clone()).or_default().push(idx);
            for hole in 0..=dim {
                let mut partial = fv.clone();
                partial.remove(hole);
                by_hole[hole].entry(partial).or_default().push(idx);
            }
        }
        FillerIndex { dim, by_hole, full }
    }

    /// Simplices whose faces away from `hole` equal `faces_without_hole`.
    pub fn with_hole(&self, hole: usize, faces_without_hole: &[usize]) -> &[usize] {
        debug_assert!(hole <= self.dim);
        self.by_hole[hole]
            .get(faces_without_hole)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Simplices with exactly this face vector.
    pub fn with_faces(&self, faces: &[usize]) -> &[usize] {
        self.full.get(faces).map(Vec::as_slice).unwrap_or(&[])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::z2_nerve_by_hand;

    #[test]
    fn level_counts_match_the_closed_formula() {
        let data = z2_nerve_by_hand();
        let tables = Tables::new(&data, &Limits::default()).unwrap();
        for dim in 0..=2 {
            assert_eq!(tables.count(dim), data.total_count(dim));
        }
        assert_eq!(tables.count(2), 4);
    }

    #[test]
    fn tables_agree_with_reference_operators() {
        let data = z2_nerve_by_hand();
        let tables = Tables::new(&data, &Limits::default()).unwrap();
        for dim in 1..=2 {
            for idx in 0..tables.count(dim) {
                let r = tables.simplex_ref(dim, idx).clone();
                for i in 0..=dim {
                    let via_table = tables.face(dim, idx, i);
                    let via_ref = tables.idx(dim - 1, &data.face(dim, &r, i));
                    assert_eq!(via_table, via_ref);
                }
            }
        }
    }

    #[test]
    fn filler_index_finds_the_triangle() {
        let data = z2_nerve_by_hand();
        let tables = Tables::new(&data, &Limits::default()).unwrap();
        let idx = FillerIndex::new(&tables, 2);
        let g = 0usize; // the nondegenerate edge
        // inner horn (d_0 = g, hole, d_2 = g) is filled by the triangle (g,g)
        let fillers = idx.with_hole(1, &[g, g]);
        assert!(fillers.contains(&0));
    }
}
