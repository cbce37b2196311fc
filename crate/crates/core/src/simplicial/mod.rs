//! Bounded simplicial data in Eilenberg-Zilber canonical form.
//!
//! A space is stored as its nondegenerate simplices in dimensions `0..=bound`
//! together with their face pointers. Anything above the bound is never
//! stored: the denoted object is the coskeletal extension, so simplices up
//! there are exactly the compatible sphere families over level `bound` and
//! the Kan machinery reconstructs them on demand.
//!
//! A [`SimplexRef`] names an arbitrary simplex, degenerate or not, as a
//! canonical degeneracy word applied to a nondegenerate base. Face and
//! degeneracy operators act on references through the word calculus in
//! [`crate::word`], so the simplicial identities involving degeneracies hold
//! by construction; only the face-face identity is real data and it is what
//! [`SimplicialData::validate`] checks.

mod build;
mod domains;
mod tables;

pub use build::{assemble, Assembled, DenseLevels};
pub use domains::{circle, horn_domain, simplex_boundary, standard_simplex};
pub(crate) use domains::tuples;
pub use tables::{FillerIndex, Tables};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{EngineError, Result};
use crate::word::{self, FacePush};

/// A simplex in canonical form: `s_word` applied to nondegenerate base
/// number `base` of the appropriate lower level. The ambient dimension is
/// contextual; a reference of dimension `k` has a base of dimension
/// `k - word.len()`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimplexRef {
    pub word: Vec<usize>,
    pub base: usize,
}

impl SimplexRef {
    pub fn nondeg(base: usize) -> Self {
        SimplexRef { word: Vec::new(), base }
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.word.is_empty()
    }

    pub fn base_dim(&self, dim: usize) -> usize {
        dim - self.word.len()
    }
}

impl fmt::Debug for SimplexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "#{}", self.base)
        } else {
            write!(f, "s{:?}#{}", self.word, self.base)
        }
    }
}

/// One nondegenerate simplex: its `dim + 1` faces, each a reference one
/// level down. Vertices have no faces.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Simplex {
    pub faces: Vec<SimplexRef>,
}

/// Truncated simplicial data: levels `0..=bound` of nondegenerate simplices.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialData {
    bound: usize,
    levels: Vec<Vec<Simplex>>,
}

impl fmt::Debug for SimplicialData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SimplicialData(bound {}, nondeg {:?})",
            self.bound,
            self.levels.iter().map(Vec::len).collect::<Vec<_>>()
        )
    }
}

impl SimplicialData {
    /// Wrap raw levels. `levels.len()` must be `bound + 1` and the bound at
    /// least 1; face shapes are checked here, the identities by `validate`.
    pub fn new(bound: usize, levels: Vec<Vec<Simplex>>) -> Result<Self> {
        let mut shape = ValidationReport::default();
        if bound < 1 {
            shape.malformed.push(format!("bound must be at least 1, got {bound}"));
        }
        if levels.len() != bound + 1 {
            shape.malformed.push(format!(
                "expected {} levels for bound {bound}, got {}",
                bound + 1,
                levels.len()
            ));
        }
        if !shape.is_clean() {
            return Err(EngineError::InvalidData(shape));
        }
        let data = SimplicialData { bound, levels };
        let report = data.well_formedness();
        if !report.is_clean() {
            return Err(EngineError::InvalidData(report));
        }
        Ok(data)
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Number of nondegenerate simplices stored at `dim`.
    pub fn nondeg_count(&self, dim: usize) -> usize {
        if dim <= self.bound {
            self.levels[dim].len()
        } else {
            0
        }
    }

    pub fn simplex(&self, dim: usize, id: usize) -> &Simplex {
        &self.levels[dim][id]
    }

    pub fn vertex_count(&self) -> usize {
        self.levels[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels[0].is_empty()
    }

    pub(crate) fn clone_levels(&self) -> Vec<Vec<Simplex>> {
        self.levels.clone()
    }

    /// Total number of simplices at `dim`, degenerate ones included.
    pub fn total_count(&self, dim: usize) -> usize {
        (0..=dim.min(self.bound))
            .map(|p| {
                let words = binomial(dim, dim - p);
                self.levels[p].len() * words
            })
            .sum()
    }

    /// The i-th face of a reference of dimension `dim`.
    pub fn face(&self, dim: usize, r: &SimplexRef, i: usize) -> SimplexRef {
        debug_assert!(dim >= 1 && i <= dim);
        match word::push_face(&r.word, i) {
            FacePush::Cancelled(word) => SimplexRef { word, base: r.base },
            FacePush::Reached { residual, face } => {
                let base_dim = r.base_dim(dim);
                let stored = &self.levels[base_dim][r.base].faces[face];
                SimplexRef {
                    word: word::compose(&residual, &stored.word),
                    base: stored.base,
                }
            }
        }
    }

    /// The i-th degeneracy of a reference (dimension goes up by one).
    pub fn degeneracy(&self, r: &SimplexRef, i: usize) -> SimplexRef {
        let mut word = r.word.clone();
        word::insert_degeneracy(&mut word, i);
        SimplexRef { word, base: r.base }
    }

    /// Iterated degeneracy collapsing a vertex to dimension `dim`:
    /// `s_{dim-1} ... s_1 s_0` applied to vertex `v`.
    pub fn degenerate_vertex(&self, v: usize, dim: usize) -> SimplexRef {
        SimplexRef { word: (0..dim).rev().collect(), base: v }
    }

    /// Vertex `j` of a reference of dimension `dim`, by stripping all other
    /// faces. Faces above `j` first, then those below.
    pub fn vertex_of(&self, dim: usize, r: &SimplexRef, j: usize) -> usize {
        let mut cur = r.clone();
        let mut d = dim;
        while d > j {
            cur = self.face(d, &cur, d);
            d -= 1;
        }
        while d > 0 {
            cur = self.face(d, &cur, 0);
            d -= 1;
        }
        debug_assert!(cur.word.is_empty());
        cur.base
    }

    /// Check structural sanity plus the face-face identities
    /// `d_i d_j = d_{j-1} d_i` (i < j) on every stored simplex. The
    /// degeneracy identities hold by construction of the word calculus.
    pub fn validate(&self) -> ValidationReport {
        let mut report = self.well_formedness();
        for dim in 2..=self.bound {
            for id in 0..self.levels[dim].len() {
                let r = SimplexRef::nondeg(id);
                for j in 1..=dim {
                    for i in 0..j {
                        let lhs = self.face(dim - 1, &self.face(dim, &r, j), i);
                        let rhs = self.face(dim - 1, &self.face(dim, &r, i), j - 1);
                        if lhs != rhs {
                            report.violations.push(IdentityViolation {
                                dim,
                                id,
                                i,
                                j,
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
            }
        }
        report
    }

    fn well_formedness(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for dim in 0..=self.bound {
            for (id, simplex) in self.levels[dim].iter().enumerate() {
                let expected = if dim == 0 { 0 } else { dim + 1 };
                if simplex.faces.len() != expected {
                    report.malformed.push(format!(
                        "simplex {id} at level {dim} has {} faces, expected {expected}",
                        simplex.faces.len()
                    ));
                    continue;
                }
                for (i, face) in simplex.faces.iter().enumerate() {
                    if !word::is_canonical(&face.word) {
                        report.malformed.push(format!(
                            "face {i} of simplex {id} at level {dim} has word {:?}, not strictly decreasing",
                            face.word
                        ));
                        continue;
                    }
                    if face.word.len() > dim - 1 {
                        report.malformed.push(format!(
                            "face {i} of simplex {id} at level {dim} has word longer than its dimension"
                        ));
                        continue;
                    }
                    let base_dim = (dim - 1) - face.word.len();
                    if face.base >= self.levels[base_dim].len() {
                        report.malformed.push(format!(
                            "face {i} of simplex {id} at level {dim} points at missing base {} of level {base_dim}",
                            face.base
                        ));
                    }
                    if let Some(&w0) = face.word.first() {
                        if w0 > dim - 2 {
                            report.malformed.push(format!(
                                "face {i} of simplex {id} at level {dim} has out-of-range degeneracy index {w0}"
                            ));
                        }
                    }
                }
            }
        }
        report
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityViolation {
    pub dim: usize,
    pub id: usize,
    pub i: usize,
    pub j: usize,
    pub lhs: SimplexRef,
    pub rhs: SimplexRef,
}

impl fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d_{} d_{} = d_{} d_{} fails at simplex {} of level {}: {:?} vs {:?}",
            self.i,
            self.j,
            self.j - 1,
            self.i,
            self.id,
            self.dim,
            self.lhs,
            self.rhs
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub malformed: Vec<String>,
    pub violations: Vec<IdentityViolation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.malformed.is_empty() && self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_clean() {
            return write!(f, "ok");
        }
        for m in &self.malformed {
            writeln!(f, "{m}")?;
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Disjoint union of two data sets at equal bound; the second block's bases
/// are shifted level by level. Returns the union and the per-level offsets
/// of the right block.
pub fn coproduct_data(a: &SimplicialData, b: &SimplicialData) -> Result<(SimplicialData, Vec<usize>)> {
    if a.bound != b.bound {
        return Err(EngineError::BoundMismatch { left: a.bound, right: b.bound });
    }
    let mut levels = Vec::with_capacity(a.bound + 1);
    let mut offsets = Vec::with_capacity(a.bound + 1);
    for dim in 0..=a.bound {
        offsets.push(a.levels[dim].len());
        let mut level = a.levels[dim].clone();
        for simplex in &b.levels[dim] {
            let faces = simplex
                .faces
                .iter()
                .map(|r| {
                    let base_dim = (dim - 1) - r.word.len();
                    SimplexRef { word: r.word.clone(), base: r.base + a.levels[base_dim].len() }
                })
                .collect();
            level.push(Simplex { faces });
        }
        levels.push(level);
    }
    Ok((SimplicialData { bound: a.bound, levels }, offsets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::z2_nerve_by_hand;

    #[test]
    fn hand_built_nerve_validates() {
        let data = z2_nerve_by_hand();
        assert!(data.validate().is_clean());
        assert_eq!(data.total_count(0), 1);
        assert_eq!(data.total_count(1), 2);
        assert_eq!(data.total_count(2), 4);
    }

    #[test]
    fn redirected_face_is_reported_with_the_failing_identity() {
        // In Δ[2], send the long edge of the triangle to a short one; the
        // vertices stop matching and d_0 d_1 = d_0 d_0 fails at the 2-cell.
        let mut data = super::domains::standard_simplex(2, 2);
        data.levels[2][0].faces[1] = SimplexRef::nondeg(0);
        let report = data.validate();
        assert!(!report.is_clean());
        let v = &report.violations[0];
        assert_eq!((v.dim, v.id), (2, 0));
        let shown = v.to_string();
        assert!(shown.starts_with("d_0 d_1 = d_0 d_0"), "got: {shown}");
    }

    #[test]
    fn faces_of_degenerate_references_follow_the_identities() {
        let data = z2_nerve_by_hand();
        let g = SimplexRef::nondeg(0);
        // d_i s_0 g = g for i = 0, 1
        let s0g = data.degeneracy(&g, 0);
        assert_eq!(data.face(2, &s0g, 0), g);
        assert_eq!(data.face(2, &s0g, 1), g);
        // d_2 s_0 g = s_0 d_1 g = s_0(pt)
        assert_eq!(data.face(2, &s0g, 2), SimplexRef { word: vec![0], base: 0 });
    }

    #[test]
    fn vertices_of_simplices() {
        let data = z2_nerve_by_hand();
        let t = SimplexRef::nondeg(0);
        for j in 0..=2 {
            assert_eq!(data.vertex_of(2, &t, j), 0);
        }
    }

    #[test]
    fn coproduct_shifts_bases() {
        let a = z2_nerve_by_hand();
        let b = z2_nerve_by_hand();
        let (sum, offsets) = coproduct_data(&a, &b).unwrap();
        assert!(sum.validate().is_clean());
        assert_eq!(offsets, vec![1, 1, 1]);
        assert_eq!(sum.nondeg_count(0), 2);
        assert_eq!(sum.nondeg_count(2), 2);
        // the second triangle's faces point into the second block
        assert_eq!(sum.simplex(2, 1).faces[0], SimplexRef::nondeg(1));
    }
}
