//! Hand-built fixtures shared by unit tests across modules.

use crate::simplicial::{DenseLevels, Simplex, SimplexRef, SimplicialData};

/// Nerve of Z/2 truncated at 2, written out by hand: one vertex, one
/// nondegenerate edge g, one nondegenerate triangle (g, g).
pub(crate) fn z2_nerve_by_hand() -> SimplicialData {
    let v = vec![Simplex { faces: vec![] }];
    let e = vec![Simplex {
        faces: vec![SimplexRef::nondeg(0), SimplexRef::nondeg(0)],
    }];
    // faces of (g,g): d_0 = g, d_1 = g*g = e = s_0(pt), d_2 = g
    let t = vec![Simplex {
        faces: vec![
            SimplexRef::nondeg(0),
            SimplexRef { word: vec![0], base: 0 },
            SimplexRef::nondeg(0),
        ],
    }];
    SimplicialData::new(2, vec![v, e, t]).unwrap()
}

/// Z/2 nerve by the textbook tuple formulas, as a dense provider.
pub(crate) struct Z2Strings;

impl DenseLevels for Z2Strings {
    type Key = Vec<u8>;

    fn level(&self, k: usize) -> Vec<Vec<u8>> {
        let mut out = vec![vec![0u8; k]];
        for n in 1..(1usize << k) {
            out.push((0..k).map(|j| ((n >> j) & 1) as u8).collect());
        }
        out.sort();
        out
    }

    fn face(&self, k: usize, key: &Vec<u8>, i: usize) -> Vec<u8> {
        let mut out = key.clone();
        if i == 0 {
            out.remove(0);
        } else if i == k {
            out.pop();
        } else {
            let merged = out[i - 1] ^ out[i];
            out[i - 1] = merged;
            out.remove(i);
        }
        out
    }

    fn degeneracy(&self, _k: usize, key: &Vec<u8>, i: usize) -> Vec<u8> {
        let mut out = key.clone();
        out.insert(i, 0);
        out
    }
}
