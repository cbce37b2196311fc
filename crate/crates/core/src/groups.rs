//! Finite groups as validated multiplication tables.
//!
//! Everything downstream (nerves, twisted quotients, homotopy groups) works
//! with elements as indices into a table, so construction checks the axioms
//! once and the rest of the crate never has to.

use std::collections::{HashMap, HashSet};

use crate::error::{EngineError, Result};

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validate closure, identity, inverses and associativity of `table`,
    /// where `table[a][b]` is the product `a * b`.
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let name = name.into();
        let n = table.len();
        let bad = |msg: String| EngineError::InvalidGroup(format!("{name}: {msg}"));
        if n == 0 {
            return Err(bad("empty table".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(bad(format!("row {a} has length {}, expected {n}", row.len())));
            }
            for (b, &p) in row.iter().enumerate() {
                if p >= n {
                    return Err(bad(format!("{a} * {b} = {p} is out of range")));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| bad("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| bad(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad(format!("({a} * {b}) * {c} != {a} * ({b} * {c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { name, table, identity, inverse })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders; an isomorphism invariant used for
    /// fast rejection.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut profile: Vec<usize> = (0..self.order()).map(|a| self.element_order(a)).collect();
        profile.sort_unstable();
        profile
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..n)
                .map(|g| self.mul(self.mul(g, a), self.inv(g)))
                .collect::<HashSet<_>>()
                .into_iter()
                .collect();
            class.sort_unstable();
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Greedy generating set: scan elements in index order, keep those not
    /// yet generated. Small and deterministic, which is all the
    /// isomorphism search needs.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut reach = self.closure(&gens);
        for a in 0..self.order() {
            if !reach[a] {
                gens.push(a);
                reach = self.closure(&gens);
            }
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut reach = vec![false; self.order()];
        reach[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !reach[y] {
                    reach[y] = true;
                    frontier.push(y);
                }
            }
        }
        reach
    }

    /// An isomorphism onto `other` as an image table, if one exists.
    /// Backtracking over generator images, pruned by element orders and by
    /// the size of the partially generated subgroup.
    pub fn isomorphism_to(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        let n = self.order();
        if n != other.order() || self.order_profile() != other.order_profile() {
            return None;
        }
        let gens = self.generators();
        if gens.is_empty() {
            return Some(vec![other.identity]);
        }
        // express every element as (earlier element) * generator, by
        // breadth-first products
        let mut expr: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut order_of_reach = vec![self.identity];
        let mut reached = vec![false; n];
        reached[self.identity] = true;
        let mut head = 0;
        while head < order_of_reach.len() {
            let x = order_of_reach[head];
            head += 1;
            for (gi, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                if !reached[y] {
                    reached[y] = true;
                    expr[y] = Some((x, gi));
                    order_of_reach.push(y);
                }
            }
        }
        let prefix_sizes: Vec<usize> = (1..=gens.len())
            .map(|k| self.closure(&gens[..k]).iter().filter(|&&b| b).count())
            .collect();

        let mut images = Vec::with_capacity(gens.len());
        self.assign(other, &gens, &prefix_sizes, &expr, &order_of_reach, &mut images)
    }

    fn assign(
        &self,
        other: &FiniteGroup,
        gens: &[usize],
        prefix_sizes: &[usize],
        expr: &[Option<(usize, usize)>],
        order_of_reach: &[usize],
        images: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        let t = images.len();
        if t == gens.len() {
            // reconstruct the full map along the expression table, then
            // check it is a bijective homomorphism
            let n = self.order();
            let mut map = vec![usize::MAX; n];
            map[self.identity] = other.identity;
            for &y in order_of_reach {
                if let Some((x, gi)) = expr[y] {
                    map[y] = other.mul(map[x], images[gi]);
                }
            }
            let mut hit = vec![false; n];
            for &m in &map {
                if m == usize::MAX || hit[m] {
                    return None;
                }
                hit[m] = true;
            }
            for a in 0..n {
                for b in 0..n {
                    if map[self.mul(a, b)] != other.mul(map[a], map[b]) {
                        return None;
                    }
                }
            }
            return Some(map);
        }
        let want = self.element_order(gens[t]);
        for cand in 0..other.order() {
            if other.element_order(cand) != want {
                continue;
            }
            images.push(cand);
            let generated = other.closure(images).iter().filter(|&&b| b).count();
            if generated == prefix_sizes[t] {
                if let Some(map) =
                    self.assign(other, gens, prefix_sizes, expr, order_of_reach, images)
                {
                    return Some(map);
                }
            }
            images.pop();
        }
        None
    }

    pub fn is_isomorphic(&self, other: &FiniteGroup) -> bool {
        self.isomorphism_to(other).is_some()
    }

    /// Match against a catalog of named groups of the same order.
    pub fn identify(&self) -> String {
        for g in catalog(self.order()) {
            if self.is_isomorphic(&g) {
                return g.name;
            }
        }
        format!("group of order {}", self.order())
    }
}

pub fn trivial() -> FiniteGroup {
    cyclic(1)
}

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::new(format!("Z/{n}"), table).expect("cyclic table is a group")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=k).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, k);
                    q
                })
            })
            .collect();
    }
    out.sort();
    out
}

fn parity(p: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2
}

fn permutation_group(name: String, perms: Vec<Vec<usize>>) -> FiniteGroup {
    let index: HashMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let table = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    // p after q as functions: x -> p(q(x))
                    let composed: Vec<usize> = (0..p.len()).map(|x| p[q[x]]).collect();
                    index[&composed]
                })
                .collect()
        })
        .collect();
    FiniteGroup::new(name, table).expect("permutation table is a group")
}

/// Permutations of n letters in lexicographic order of one-line notation.
pub fn symmetric(n: usize) -> FiniteGroup {
    permutation_group(format!("S_{n}"), permutations(n))
}

pub fn alternating(n: usize) -> FiniteGroup {
    let perms = permutations(n).into_iter().filter(|p| parity(p) == 0).collect();
    permutation_group(format!("A_{n}"), perms)
}

/// Symmetries of the n-gon, 2n elements: rotations first, then reflections.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let idx = |flip: usize, i: usize| flip * n + i;
    let mut table = vec![vec![0; 2 * n]; 2 * n];
    for f1 in 0..2 {
        for i in 0..n {
            for f2 in 0..2 {
                for j in 0..n {
                    // (s^f1 r^i)(s^f2 r^j) = s^(f1+f2) r^(±i+j) since r^i s = s r^-i
                    let k = if f2 == 1 { (n + j - i) % n } else { (i + j) % n };
                    table[idx(f1, i)][idx(f2, j)] = idx(f1 ^ f2, k);
                }
            }
        }
    }
    FiniteGroup::new(format!("D_{n}"), table).expect("dihedral table is a group")
}

/// The quaternion group: 1, -1, i, -i, j, -j, k, -k in that order.
pub fn quaternion() -> FiniteGroup {
    // units 0..4 = 1, i, j, k with i*j = k cyclically
    let unit_mul = |u: usize, v: usize| -> (usize, usize) {
        match (u, v) {
            (0, v) => (0, v),
            (u, 0) => (0, u),
            (u, v) if u == v => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        }
    };
    let idx = |sign: usize, unit: usize| 2 * unit + sign;
    let mut table = vec![vec![0; 8]; 8];
    for s1 in 0..2 {
        for u1 in 0..4 {
            for s2 in 0..2 {
                for u2 in 0..4 {
                    let (s, u) = unit_mul(u1, u2);
                    table[idx(s1, u1)][idx(s2, u2)] = idx(s1 ^ s2 ^ s, u);
                }
            }
        }
    }
    FiniteGroup::new("Q_8", table).expect("quaternion table is a group")
}

/// Direct product; element (a, b) has index `a * |h| + b`.
pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (n, m) = (g.order(), h.order());
    let table = (0..n * m)
        .map(|x| {
            (0..n * m)
                .map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m))
                .collect()
        })
        .collect();
    FiniteGroup::new(format!("{} x {}", g.name, h.name), table).expect("product table is a group")
}

/// Chains d_1, d_2, ... with each dividing the previous and product `n`;
/// the canonical shapes of finite abelian groups.
fn divisor_chains(n: usize, cap: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for d in (2..=cap.min(n)).rev() {
        if n % d == 0 {
            for mut rest in divisor_chains(n / d, d) {
                rest.insert(0, d);
                out.push(rest);
            }
        }
    }
    out
}

fn catalog(n: usize) -> Vec<FiniteGroup> {
    let mut out = Vec::new();
    for chain in divisor_chains(n, n) {
        let mut g = cyclic(chain.first().copied().unwrap_or(1));
        for &d in chain.iter().skip(1) {
            g = product(&g, &cyclic(d));
        }
        out.push(g);
    }
    if n == 6 {
        out.push(symmetric(3));
    }
    if n == 8 {
        out.push(quaternion());
    }
    if n == 12 {
        out.push(alternating(4));
    }
    if n == 24 {
        out.push(symmetric(4));
    }
    if n % 2 == 0 && n >= 6 {
        out.push(dihedral(n / 2));
    }
    out
}

/// A homomorphism as an image table, validated on construction.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    images: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: FiniteGroup, target: FiniteGroup, images: Vec<usize>) -> Result<GroupHom> {
        if images.len() != source.order() {
            return Err(EngineError::InvalidGroup(format!(
                "homomorphism needs {} images, got {}",
                source.order(),
                images.len()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&m| m >= target.order()) {
            return Err(EngineError::InvalidGroup(format!("image {bad} is out of range")));
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(EngineError::InvalidGroup(format!(
                        "images do not respect the product at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(GroupHom { source, target, images })
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    /// The inclusion of the even permutations.
    pub fn alternating_in_symmetric(n: usize) -> GroupHom {
        let a = alternating(n);
        let s = symmetric(n);
        let perms = permutations(n);
        let index: HashMap<Vec<usize>, usize> =
            perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let even: Vec<Vec<usize>> = permutations(n).into_iter().filter(|p| parity(p) == 0).collect();
        let images = even.iter().map(|p| index[p]).collect();
        GroupHom::new(a, s, images).expect("inclusion is a homomorphism")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_orders() {
        assert_eq!(cyclic(5).order(), 5);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(product(&cyclic(2), &cyclic(3)).order(), 6);
    }

    #[test]
    fn conjugacy_class_counts_match_the_textbook() {
        let sizes = |g: &FiniteGroup| {
            let mut s: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
            s.sort_unstable();
            s
        };
        assert_eq!(sizes(&symmetric(3)), vec![1, 2, 3]);
        assert_eq!(sizes(&symmetric(4)), vec![1, 3, 6, 6, 8]);
        assert_eq!(sizes(&quaternion()), vec![1, 1, 2, 2, 2]);
        assert_eq!(sizes(&cyclic(4)), vec![1, 1, 1, 1]);
    }

    #[test]
    fn isomorphism_search_finds_and_refuses() {
        assert!(cyclic(6).is_isomorphic(&product(&cyclic(2), &cyclic(3))));
        assert!(symmetric(3).is_isomorphic(&dihedral(3)));
        assert!(alternating(3).is_isomorphic(&cyclic(3)));
        assert!(!dihedral(4).is_isomorphic(&quaternion()));
        assert!(!cyclic(4).is_isomorphic(&product(&cyclic(2), &cyclic(2))));
    }

    #[test]
    fn identification_names() {
        assert_eq!(cyclic(6).identify(), "Z/6");
        assert_eq!(product(&cyclic(3), &cyclic(2)).identify(), "Z/6");
        assert_eq!(dihedral(3).identify(), "S_3");
        assert_eq!(quaternion().identify(), "Q_8");
        assert_eq!(product(&cyclic(2), &cyclic(4)).identify(), "Z/4 x Z/2");
        assert_eq!(symmetric(4).identify(), "S_4");
    }

    #[test]
    fn homomorphisms_validate() {
        let incl = GroupHom::alternating_in_symmetric(3);
        assert_eq!(incl.source().order(), 3);
        assert_eq!(incl.target().order(), 6);
        let bad = GroupHom::new(cyclic(2), cyclic(3), vec![0, 1]);
        assert!(bad.is_err());
    }

    #[test]
    fn rejected_tables() {
        // a latin square that is not associative
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::new("loop", table),
            Err(EngineError::InvalidGroup(_))
        ));
    }
}
