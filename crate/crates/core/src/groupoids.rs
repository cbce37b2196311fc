//! Finite groupoids: objects, arrows, a partial composition table.
//!
//! Arrows compose diagrammatically: `compose(f, g)` is "f then g" and is
//! defined when `dst(f) = src(g)`. Construction validates identities,
//! associativity where defined, and invertibility of every arrow.

use crate::error::{EngineError, Result};
use crate::groups::FiniteGroup;

#[derive(Clone, Debug)]
pub struct FiniteGroupoid {
    objects: usize,
    src: Vec<usize>,
    dst: Vec<usize>,
    identity: Vec<usize>,
    /// compose[f][g] = f then g, only meaningful when dst(f) = src(g)
    compose: Vec<Vec<Option<usize>>>,
    inverse: Vec<usize>,
}

impl FiniteGroupoid {
    pub fn new(
        objects: usize,
        src: Vec<usize>,
        dst: Vec<usize>,
        identity: Vec<usize>,
        compose: Vec<Vec<Option<usize>>>,
    ) -> Result<FiniteGroupoid> {
        let arrows = src.len();
        let bad = |msg: String| EngineError::InvalidGroupoid(msg);
        if objects == 0 {
            return Err(bad("a groupoid needs at least one object".into()));
        }
        if dst.len() != arrows || compose.len() != arrows {
            return Err(bad("src, dst and composition tables disagree on arrow count".into()));
        }
        if identity.len() != objects {
            return Err(bad(format!("expected {objects} identity arrows, got {}", identity.len())));
        }
        for (f, row) in compose.iter().enumerate() {
            if row.len() != arrows {
                return Err(bad(format!("composition row {f} has wrong length")));
            }
            if src[f] >= objects || dst[f] >= objects {
                return Err(bad(format!("arrow {f} has out-of-range endpoints")));
            }
        }
        for (x, &e) in identity.iter().enumerate() {
            if e >= arrows || src[e] != x || dst[e] != x {
                return Err(bad(format!("identity of object {x} is not an endo-arrow there")));
            }
        }
        // composites exist exactly when composable, land correctly, and
        // identities are neutral
        for f in 0..arrows {
            for g in 0..arrows {
                match compose[f][g] {
                    Some(h) => {
                        if dst[f] != src[g] {
                            return Err(bad(format!("{f} and {g} compose but do not meet")));
                        }
                        if h >= arrows || src[h] != src[f] || dst[h] != dst[g] {
                            return Err(bad(format!("composite of {f} and {g} has wrong endpoints")));
                        }
                    }
                    None => {
                        if dst[f] == src[g] {
                            return Err(bad(format!("{f} and {g} meet but have no composite")));
                        }
                    }
                }
            }
        }
        for f in 0..arrows {
            if compose[identity[src[f]]][f] != Some(f) || compose[f][identity[dst[f]]] != Some(f) {
                return Err(bad(format!("identities are not neutral for arrow {f}")));
            }
        }
        for f in 0..arrows {
            for g in 0..arrows {
                if dst[f] != src[g] {
                    continue;
                }
                for h in 0..arrows {
                    if dst[g] != src[h] {
                        continue;
                    }
                    let left = compose[compose[f][g].unwrap()][h];
                    let right = compose[f][compose[g][h].unwrap()];
                    if left != right {
                        return Err(bad(format!("associativity fails at ({f}, {g}, {h})")));
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; arrows];
        for f in 0..arrows {
            inverse[f] = (0..arrows)
                .find(|&g| {
                    compose[f][g] == Some(identity[src[f]]) && compose[g][f] == Some(identity[dst[f]])
                })
                .ok_or_else(|| bad(format!("arrow {f} has no inverse")))?;
        }
        Ok(FiniteGroupoid { objects, src, dst, identity, compose, inverse })
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn arrows(&self) -> usize {
        self.src.len()
    }

    pub fn src(&self, f: usize) -> usize {
        self.src[f]
    }

    pub fn dst(&self, f: usize) -> usize {
        self.dst[f]
    }

    pub fn identity_at(&self, x: usize) -> usize {
        self.identity[x]
    }

    pub fn inverse(&self, f: usize) -> usize {
        self.inverse[f]
    }

    /// f then g; panics if the arrows do not meet.
    pub fn then(&self, f: usize, g: usize) -> usize {
        self.compose[f][g].expect("arrows do not meet")
    }

    /// One object with the group as its arrows.
    pub fn one_object(group: &FiniteGroup) -> FiniteGroupoid {
        let n = group.order();
        let compose = (0..n)
            .map(|a| (0..n).map(|b| Some(group.mul(a, b))).collect())
            .collect();
        FiniteGroupoid::new(1, vec![0; n], vec![0; n], vec![group.identity()], compose)
            .expect("a group is a one-object groupoid")
    }

    /// n objects, identity arrows only.
    pub fn discrete(n: usize) -> FiniteGroupoid {
        let compose = (0..n)
            .map(|a| (0..n).map(|b| (a == b).then_some(a)).collect())
            .collect();
        FiniteGroupoid::new(n, (0..n).collect(), (0..n).collect(), (0..n).collect(), compose)
            .expect("a discrete groupoid is a groupoid")
    }

    /// The connected groupoid on `objects` objects with vertex group `g`:
    /// arrows x -> y are the elements of g, composing through the group.
    /// Arrow (x, y, a) has index `(x * objects + y) * |g| + a`.
    pub fn connected(objects: usize, g: &FiniteGroup) -> FiniteGroupoid {
        assert!(objects >= 1);
        let n = g.order();
        let arrows = objects * objects * n;
        let enc = |x: usize, y: usize, a: usize| (x * objects + y) * n + a;
        let mut src = vec![0; arrows];
        let mut dst = vec![0; arrows];
        let mut compose = vec![vec![None; arrows]; arrows];
        for x in 0..objects {
            for y in 0..objects {
                for a in 0..n {
                    src[enc(x, y, a)] = x;
                    dst[enc(x, y, a)] = y;
                }
            }
        }
        for f in 0..arrows {
            for g2 in 0..arrows {
                if dst[f] == src[g2] {
                    let (x, a) = (src[f], f % n);
                    let (z, b) = (dst[g2], g2 % n);
                    compose[f][g2] = Some(enc(x, z, g.mul(a, b)));
                }
            }
        }
        let identity = (0..objects).map(|x| enc(x, x, g.identity())).collect();
        FiniteGroupoid::new(objects, src, dst, identity, compose)
            .expect("the connected groupoid is a groupoid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, symmetric};

    #[test]
    fn constructors_validate() {
        let g = FiniteGroupoid::one_object(&symmetric(3));
        assert_eq!((g.objects(), g.arrows()), (1, 6));
        let d = FiniteGroupoid::discrete(4);
        assert_eq!((d.objects(), d.arrows()), (4, 4));
        let c = FiniteGroupoid::connected(3, &cyclic(2));
        assert_eq!((c.objects(), c.arrows()), (3, 18));
    }

    #[test]
    fn composition_in_the_connected_groupoid() {
        let g = cyclic(3);
        let c = FiniteGroupoid::connected(2, &g);
        let n = g.order();
        let enc = |x: usize, y: usize, a: usize| (x * 2 + y) * n + a;
        let f = enc(0, 1, 1);
        let h = enc(1, 0, 2);
        assert_eq!(c.then(f, h), enc(0, 0, 0));
        assert_eq!(c.inverse(f), enc(1, 0, 2));
    }

    #[test]
    fn broken_identity_is_rejected() {
        // two objects, one lonely identity claimed for both
        let r = FiniteGroupoid::new(
            2,
            vec![0],
            vec![0],
            vec![0, 0],
            vec![vec![Some(0)]],
        );
        assert!(matches!(r, Err(EngineError::InvalidGroupoid(_))));
    }
}
