//! Degeneracy word arithmetic.
//!
//! Every simplex is written uniquely as `s_{w0} s_{w1} ... s_{wp-1} b` with a
//! nondegenerate base `b` and a strictly decreasing index word `w0 > w1 > ...`.
//! The functions here push face and degeneracy operators through such words
//! using the simplicial identities, so the rest of the crate never manipulates
//! raw operator strings.

/// Outcome of pushing `d_i` through a degeneracy word.
#[derive(Debug, PartialEq, Eq)]
pub enum FacePush {
    /// The face cancelled against one degeneracy; what is left is again canonical.
    Cancelled(Vec<usize>),
    /// The face reached the base as `d_j`; `residual` still has to be applied
    /// on top of the base's j-th face.
    Reached { residual: Vec<usize>, face: usize },
}

/// Compute the canonical form of `d_i` applied to `s_word`.
///
/// Walks the word left to right (outermost operator first) with
/// `d_i s_j = s_{j-1} d_i` (i < j), `d_i s_j = id` (i = j or i = j+1) and
/// `d_i s_j = s_j d_{i-1}` (i > j+1).
pub fn push_face(word: &[usize], i: usize) -> FacePush {
    let mut out = Vec::with_capacity(word.len());
    let mut i = i;
    for (pos, &w) in word.iter().enumerate() {
        if i < w {
            out.push(w - 1);
        } else if i == w || i == w + 1 {
            out.extend_from_slice(&word[pos + 1..]);
            return FacePush::Cancelled(out);
        } else {
            out.push(w);
            i -= 1;
        }
    }
    FacePush::Reached { residual: out, face: i }
}

/// Insert `s_i` on the outside of a canonical word, keeping it canonical.
/// Uses `s_i s_j = s_{j+1} s_i` for i <= j.
pub fn insert_degeneracy(word: &mut Vec<usize>, i: usize) {
    let mut pos = 0;
    while pos < word.len() && i <= word[pos] {
        word[pos] += 1;
        pos += 1;
    }
    word.insert(pos, i);
}

/// Canonical form of `s_outer ∘ s_inner`.
pub fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    let mut word = inner.to_vec();
    for &o in outer.iter().rev() {
        insert_degeneracy(&mut word, o);
    }
    word
}

/// All canonical words of length `len` whose application to a base of
/// dimension `base_dim` is defined. Entry `w_j` needs `w_j <= base_dim + (len - 1 - j)`
/// on top of the strict decrease. Ordered lexicographically.
pub fn valid_words(base_dim: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(base_dim: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let j = cur.len();
        let mut hi = base_dim + (len - 1 - j);
        if let Some(&prev) = cur.last() {
            if prev == 0 {
                return;
            }
            hi = hi.min(prev - 1);
        }
        for w in 0..=hi {
            cur.push(w);
            rec(base_dim, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(base_dim, len, &mut Vec::with_capacity(len), &mut out);
    out
}

pub fn is_canonical(word: &[usize]) -> bool {
    word.windows(2).all(|p| p[0] > p[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_cancels_adjacent_degeneracy() {
        assert_eq!(push_face(&[0], 0), FacePush::Cancelled(vec![]));
        assert_eq!(push_face(&[0], 1), FacePush::Cancelled(vec![]));
        assert_eq!(push_face(&[2, 0], 3), FacePush::Cancelled(vec![0]));
    }

    #[test]
    fn face_reaches_base_with_shifted_index() {
        // d_3 s_1 = s_1 d_2
        assert_eq!(
            push_face(&[1], 3),
            FacePush::Reached { residual: vec![1], face: 2 }
        );
        // d_0 s_2 = s_1 d_0
        assert_eq!(
            push_face(&[2], 0),
            FacePush::Reached { residual: vec![1], face: 0 }
        );
    }

    #[test]
    fn composition_normalizes() {
        // s_0 s_0 = s_1 s_0
        assert_eq!(compose(&[0], &[0]), vec![1, 0]);
        // s_1 s_0 already canonical
        assert_eq!(compose(&[1], &[0]), vec![1, 0]);
        // s_0 s_2 s_0: s_0 (s_2 s_0) -> insert 0 into [2,0]: bump both -> [3,1], insert 0
        assert_eq!(compose(&[0], &[2, 0]), vec![3, 1, 0]);
    }

    #[test]
    fn word_enumeration_counts_monotone_surjections() {
        // surjections [p+len] ->> [p] are counted by C(p+len, len)
        assert_eq!(valid_words(1, 2).len(), 3);
        assert_eq!(valid_words(0, 3).len(), 1);
        assert_eq!(valid_words(2, 1).len(), 3);
        assert_eq!(valid_words(0, 0), vec![Vec::<usize>::new()]);
        for w in valid_words(1, 2) {
            assert!(is_canonical(&w));
        }
    }
}
