//! Shape domains used for mapping spaces and lifting problems. These carry
//! no Kan or coskeletal semantics of their own; they only ever sit on the
//! left of a mapping space or describe a horn.

use super::{Simplex, SimplexRef, SimplicialData};

/// Nondegenerate k-simplices of Δ[n] are the strictly increasing
/// (k+1)-tuples in 0..=n; faces drop an entry, which keeps tuples strictly
/// increasing, so every stored face pointer is nondegenerate.
pub(crate) fn tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, len: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(n, len, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, len, 0, &mut Vec::new(), &mut out);
    out
}

fn simplex_levels(n: usize, bound: usize, skip: impl Fn(&[usize]) -> bool) -> SimplicialData {
    let mut levels: Vec<Vec<Simplex>> = Vec::with_capacity(bound + 1);
    let mut id_of: Vec<std::collections::HashMap<Vec<usize>, usize>> = Vec::new();
    for dim in 0..=bound {
        let kept: Vec<Vec<usize>> = tuples(n, dim + 1)
            .into_iter()
            .filter(|t| !skip(t))
            .collect();
        let ids = kept
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect::<std::collections::HashMap<_, _>>();
        let level = kept
            .iter()
            .map(|t| {
                let faces = if dim == 0 {
                    Vec::new()
                } else {
                    (0..=dim)
                        .map(|i| {
                            let mut f = t.clone();
                            f.remove(i);
                            SimplexRef::nondeg(id_of[dim - 1][&f])
                        })
                        .collect()
                };
                Simplex { faces }
            })
            .collect();
        levels.push(level);
        id_of.push(ids);
    }
    SimplicialData::new(bound, levels).expect("simplex shapes are well formed")
}

/// Δ[n] truncated at `bound`.
pub fn standard_simplex(n: usize, bound: usize) -> SimplicialData {
    simplex_levels(n, bound, |_| false)
}

/// ∂Δ[n] truncated at `bound`: drop the top cell.
pub fn simplex_boundary(n: usize, bound: usize) -> SimplicialData {
    simplex_levels(n, bound, |t| t.len() == n + 1)
}

/// Λ[n, i] truncated at `bound`: drop the top cell and its i-th facet.
pub fn horn_domain(n: usize, i: usize, bound: usize) -> SimplicialData {
    assert!(i <= n);
    simplex_levels(n, bound, move |t| {
        t.len() == n + 1 || (t.len() == n && !t.contains(&i))
    })
}

/// Δ[1] with its endpoints glued: one vertex, one nondegenerate loop, all
/// higher levels purely degenerate.
pub fn circle(bound: usize) -> SimplicialData {
    let mut levels = vec![
        vec![Simplex { faces: Vec::new() }],
        vec![Simplex { faces: vec![SimplexRef::nondeg(0), SimplexRef::nondeg(0)] }],
    ];
    for _ in 2..=bound {
        levels.push(Vec::new());
    }
    SimplicialData::new(bound, levels).expect("circle is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_simplex_counts() {
        let d3 = standard_simplex(3, 3);
        assert_eq!(d3.nondeg_count(0), 4);
        assert_eq!(d3.nondeg_count(1), 6);
        assert_eq!(d3.nondeg_count(2), 4);
        assert_eq!(d3.nondeg_count(3), 1);
        assert!(d3.validate().is_clean());
    }

    #[test]
    fn boundary_and_horn_drop_the_right_cells() {
        let b = simplex_boundary(2, 2);
        assert_eq!(b.nondeg_count(2), 0);
        assert_eq!(b.nondeg_count(1), 3);
        let h = horn_domain(2, 1, 2);
        assert_eq!(h.nondeg_count(1), 2);
        assert!(h.validate().is_clean());
    }

    #[test]
    fn circle_is_one_vertex_one_loop() {
        let c = circle(2);
        assert!(c.validate().is_clean());
        assert_eq!(c.nondeg_count(0), 1);
        assert_eq!(c.nondeg_count(1), 1);
        assert_eq!(c.nondeg_count(2), 0);
        assert_eq!(c.total_count(2), 3);
    }
}
