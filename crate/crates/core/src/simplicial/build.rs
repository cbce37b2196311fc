use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::Result;
use crate::limits::Limits;

use super::{Simplex, SimplexRef, SimplicialData};

/// A simplicial object presented level by level with explicit operators,
/// typically by a formula (nerve strings, cocycles, pairs, bar tuples).
pub trait DenseLevels {
    type Key: Clone + Eq + Hash + Ord + Debug;

    /// All simplices of dimension `k`, degenerate ones included, without
    /// duplicates, in a deterministic order.
    fn level(&self, k: usize) -> Vec<Self::Key>;
    fn face(&self, k: usize, key: &Self::Key, i: usize) -> Self::Key;
    fn degeneracy(&self, k: usize, key: &Self::Key, i: usize) -> Self::Key;
}

/// Canonicalized output of [`assemble`]: the stored data plus the
/// translation between provider keys and canonical references.
pub struct Assembled<K> {
    pub data: SimplicialData,
    key_to_ref: Vec<HashMap<K, SimplexRef>>,
    keys: Vec<Vec<K>>,
}

impl<K: Clone + Eq + Hash + Ord + Debug> Assembled<K> {
    pub fn ref_of(&self, dim: usize, key: &K) -> &SimplexRef {
        self.key_to_ref[dim]
            .get(key)
            .unwrap_or_else(|| panic!("unknown key {key:?} at level {dim}"))
    }

    /// Like [`Assembled::ref_of`] for keys that may legitimately be absent.
    pub fn find_ref(&self, dim: usize, key: &K) -> Option<&SimplexRef> {
        self.key_to_ref[dim].get(key)
    }

    /// The key of the nondegenerate simplex `id` at `dim`.
    pub fn key_of_nondeg(&self, dim: usize, id: usize) -> &K {
        &self.keys[dim][id]
    }
}

/// Fold a dense presentation into canonical form: detect degenerate keys,
/// extract their words, number the nondegenerate ones in level order and
/// rewrite faces as references.
///
/// A key `x` of dimension `k` is degenerate exactly when `s_i(d_i(x)) = x`
/// for some `i`. Stripping the largest such `i` repeatedly yields the
/// canonical word directly: if removing `s_i` uncovered a degeneracy with
/// index `j >= i`, then `x = s_{j+1} s_i (...)` would have been degenerate
/// at `j+1 > i` already, contradicting maximality.
pub fn assemble<P: DenseLevels>(
    provider: &P,
    bound: usize,
    limits: &Limits,
) -> Result<Assembled<P::Key>> {
    let mut key_to_ref: Vec<HashMap<P::Key, SimplexRef>> = Vec::with_capacity(bound + 1);
    let mut keys: Vec<Vec<P::Key>> = Vec::with_capacity(bound + 1);
    let mut levels: Vec<Vec<Simplex>> = Vec::with_capacity(bound + 1);

    for dim in 0..=bound {
        let level = provider.level(dim);
        limits.check_level(dim, level.len())?;
        let mut map: HashMap<P::Key, SimplexRef> = HashMap::with_capacity(level.len());
        let mut nondeg_keys: Vec<P::Key> = Vec::new();
        let mut simplices: Vec<Simplex> = Vec::new();

        for key in &level {
            let mut word = Vec::new();
            let mut cur = key.clone();
            let mut d = dim;
            'strip: loop {
                for i in (0..d).rev() {
                    let f = provider.face(d, &cur, i);
                    if provider.degeneracy(d - 1, &f, i) == cur {
                        word.push(i);
                        cur = f;
                        d -= 1;
                        continue 'strip;
                    }
                }
                break;
            }
            let r = if word.is_empty() {
                let id = nondeg_keys.len();
                let faces = if dim == 0 {
                    Vec::new()
                } else {
                    (0..=dim)
                        .map(|i| {
                            let fk = provider.face(dim, key, i);
                            key_to_ref[dim - 1]
                                .get(&fk)
                                .unwrap_or_else(|| {
                                    panic!(
                                        "face {i} of {key:?} at level {dim} is not a level {} key",
                                        dim - 1
                                    )
                                })
                                .clone()
                        })
                        .collect()
                };
                nondeg_keys.push(key.clone());
                simplices.push(Simplex { faces });
                SimplexRef::nondeg(id)
            } else {
                let base = key_to_ref[d]
                    .get(&cur)
                    .unwrap_or_else(|| {
                        panic!("base {cur:?} of {key:?} is not a level {d} key")
                    });
                assert!(
                    base.is_nondegenerate(),
                    "stripping {key:?} ended on a key already marked degenerate"
                );
                SimplexRef { word, base: base.base }
            };
            map.insert(key.clone(), r);
        }

        key_to_ref.push(map);
        keys.push(nondeg_keys);
        levels.push(simplices);
    }

    let data = SimplicialData::new(bound, levels)?;
    Ok(Assembled { data, key_to_ref, keys })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::Z2Strings;

    #[test]
    fn dense_nerve_assembles_to_the_hand_written_complex() {
        let assembled = assemble(&Z2Strings, 2, &Limits::default()).unwrap();
        assert_eq!(assembled.data, crate::testutil::z2_nerve_by_hand());
        // key lookups match: (1,1) is the nondegenerate triangle
        assert_eq!(assembled.ref_of(2, &vec![1, 1]), &SimplexRef::nondeg(0));
        // (0,1) is s_0 of the edge, (1,0) is s_1 of it
        assert_eq!(assembled.ref_of(2, &vec![0, 1]), &SimplexRef { word: vec![0], base: 0 });
        assert_eq!(assembled.ref_of(2, &vec![1, 0]), &SimplexRef { word: vec![1], base: 0 });
    }

    #[test]
    fn cap_is_enforced() {
        let tight = Limits { level_cap: 3, ..Limits::default() };
        assert!(assemble(&Z2Strings, 2, &tight).is_err());
    }
}
