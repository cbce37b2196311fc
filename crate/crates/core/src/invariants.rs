//! Homotopy invariants and the decision procedures built on them.
//!
//! Everything here reduces to finite search over the stored levels. The
//! carrier of pi_n is the set of spherical n-simplices (all faces at the
//! degenerate basepoint); two are identified when an (n+1)-simplex exhibits
//! a homotopy, and multiplication fills a horn. On a certified complex the
//! homotopy relation is an equivalence relation and the class of the filled
//! face is independent of the filler; both facts are checked during the
//! computation rather than assumed.

use std::collections::HashMap;
use std::fmt;

use num::{BigInt, BigRational, One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::groups::FiniteGroup;
use crate::hom::{hom_complex, strict_pullback, ProductSpace};
use crate::kan::{raise_bound, rebound_truncated, KanComplex};
use crate::limits::Limits;
use crate::maps::SimplicialMap;
use crate::paths::fibrant_replace;
use crate::simplicial::{DenseLevels, FillerIndex, SimplexRef, SimplicialData, Tables};
use crate::spaces::{discrete, point};

/// The path components of a complex: a partition of the vertices, each
/// class pointed by its least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    reps: Vec<usize>,
    class_of: Vec<usize>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// The least vertex of the class.
    pub fn rep(&self, class: usize) -> usize {
        self.reps[class]
    }

    pub fn class_of(&self, vertex: usize) -> usize {
        self.class_of[vertex]
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

/// Vertices modulo edge reachability. Edges can be walked against their
/// orientation because the complex fills horns, so the undirected relation
/// is already the right one.
pub fn pi0(x: &KanComplex) -> Components {
    components_of(x.data())
}

pub(crate) fn components_of(data: &SimplicialData) -> Components {
    let n = data.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();

    fn root(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }

    if data.bound() >= 1 {
        for id in 0..data.nondeg_count(1) {
            let ends = &data.simplex(1, id).faces;
            let (a, b) = (root(&mut parent, ends[0].base), root(&mut parent, ends[1].base));
            parent[a.max(b)] = a.min(b);
        }
    }

    let mut reps = Vec::new();
    let mut class_of = vec![0; n];
    let mut index: HashMap<usize, usize> = HashMap::new();
    for v in 0..n {
        let r = root(&mut parent, v);
        // roots are the least members because unions keep the smaller vertex
        let c = *index.entry(r).or_insert_with(|| {
            reps.push(r);
            reps.len() - 1
        });
        class_of[v] = c;
    }
    Components { reps, class_of }
}

/// A homotopy group presented by its spherical representatives.
#[derive(Debug, Clone)]
pub struct HomotopyGroup {
    degree: usize,
    reps: Vec<usize>,
    classes: HashMap<usize, usize>,
    group: FiniteGroup,
}

impl HomotopyGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Table index of one spherical simplex per class, in class order.
    /// Empty in degrees at or above the bound, where the group is trivial
    /// and there is no stored level to point into.
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    /// The class of a spherical simplex, by table index.
    pub fn class_of(&self, idx: usize) -> Option<usize> {
        self.classes.get(&idx).copied()
    }
}

/// The nth homotopy group at a basepoint vertex, for n >= 1. Degrees at or
/// above the bound collapse by coskeletality: any two sphericals up there
/// bound a compatible sphere family, so no search is run.
pub fn pi_n(x: &KanComplex, basepoint: usize, n: usize, limits: &Limits) -> Result<HomotopyGroup> {
    assert!(n >= 1, "components are a pointed set, not a group; use pi0");
    if n >= x.bound() {
        return Ok(trivial_in_degree(n));
    }
    let tables = Tables::new(x.data(), limits)?;
    homotopy_group(&tables, basepoint, n)
}

fn trivial_in_degree(n: usize) -> HomotopyGroup {
    let group = FiniteGroup::new(format!("pi_{n}"), vec![vec![0]])
        .expect("the one element table is a group");
    HomotopyGroup { degree: n, reps: Vec::new(), classes: HashMap::new(), group }
}

/// Core of [`pi_n`] over prebuilt tables, for 1 <= n < bound.
fn homotopy_group(tables: &Tables, basepoint: usize, n: usize) -> Result<HomotopyGroup> {
    let pt_below = tables.degenerate_vertex(basepoint, n - 1);
    let pt = tables.degenerate_vertex(basepoint, n);
    let spherical: Vec<usize> = (0..tables.count(n))
        .filter(|&idx| tables.face_vector(n, idx).iter().all(|&f| f == pt_below))
        .collect();

    let filler = FillerIndex::new(tables, n + 1);
    let related = |a: usize, b: usize| {
        let mut faces = vec![pt; n + 2];
        faces[n] = a;
        faces[n + 1] = b;
        !filler.with_faces(&faces).is_empty()
    };

    let m = spherical.len();
    let rel: Vec<Vec<bool>> = spherical
        .iter()
        .map(|&a| spherical.iter().map(|&b| related(a, b)).collect())
        .collect();
    for i in 0..m {
        assert!(rel[i][i], "homotopy is reflexive on a certified complex");
        for j in 0..m {
            assert!(rel[i][j] == rel[j][i], "homotopy is symmetric on a certified complex");
            for k in 0..m {
                assert!(
                    !(rel[i][j] && rel[j][k]) || rel[i][k],
                    "homotopy is transitive on a certified complex"
                );
            }
        }
    }

    let mut reps = Vec::new();
    let mut classes = HashMap::new();
    for i in 0..m {
        if !classes.contains_key(&spherical[i]) {
            let c = reps.len();
            reps.push(spherical[i]);
            for j in i..m {
                if rel[i][j] {
                    classes.insert(spherical[j], c);
                }
            }
        }
    }

    // multiply by filling the inner horn whose missing face is the product:
    // faces n-1 and n+1 carry the factors, everything else sits at the
    // basepoint, and any filler's nth face represents the same class
    let mul = |a: usize, b: usize| {
        let mut faces = vec![pt; n + 2];
        faces[n - 1] = b;
        faces[n + 1] = a;
        faces.remove(n);
        let fillers = filler.with_hole(n, &faces);
        let mut out = fillers.iter().map(|&w| classes[&tables.face(n + 1, w, n)]);
        let c = out.next().expect("certified complexes fill inner horns");
        assert!(out.all(|d| d == c), "horn fillers agree up to homotopy");
        c
    };

    let table = (0..reps.len())
        .map(|i| (0..reps.len()).map(|j| mul(reps[i], reps[j])).collect())
        .collect();
    let group = FiniteGroup::new(format!("pi_{n}"), table)
        .expect("homotopy classes of a certified complex form a group");
    assert!(
        n < 2 || group.is_abelian(),
        "higher homotopy groups commute by the interchange argument"
    );
    assert_eq!(classes[&pt], group.identity());
    Ok(HomotopyGroup { degree: n, reps, classes, group })
}

/// Sum over components of the alternating product of homotopy group
/// orders. Exact, and zero exactly for the empty space.
pub fn homotopy_cardinality(x: &KanComplex, limits: &Limits) -> Result<BigRational> {
    let comps = pi0(x);
    let mut total = BigRational::zero();
    for c in 0..comps.count() {
        let mut term = BigRational::one();
        for i in 1..x.bound() {
            let size = BigRational::from(BigInt::from(pi_n(x, comps.rep(c), i, limits)?.order()));
            term *= if i % 2 == 1 { size.recip() } else { size };
        }
        total += term;
    }
    Ok(total)
}

/// Outcome of the Whitehead test, with the first failure spelled out.
#[derive(Debug, Clone)]
pub enum EquivalenceVerdict {
    Holds,
    Fails(String),
}

impl EquivalenceVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, EquivalenceVerdict::Holds)
    }
}

impl fmt::Display for EquivalenceVerdict {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivalenceVerdict::Holds => write!(out, "equivalence"),
            EquivalenceVerdict::Fails(why) => write!(out, "not an equivalence: {why}"),
        }
    }
}

/// Whitehead test over the stored range: bijective on components and an
/// isomorphism on every homotopy group below the bound, at one basepoint
/// per source component. Sufficient because both sides are truncated at
/// the same bound.
pub fn is_equivalence(f: &SimplicialMap, limits: &Limits) -> Result<EquivalenceVerdict> {
    let src = components_of(f.source());
    let tgt = components_of(f.target());
    if src.count() != tgt.count() {
        return Ok(EquivalenceVerdict::Fails(format!(
            "pi_0 has {} classes on the left, {} on the right",
            src.count(),
            tgt.count()
        )));
    }
    let image_class =
        |v: usize| tgt.class_of(f.apply(0, &SimplexRef::nondeg(v)).base);
    let mut seen = vec![false; tgt.count()];
    for c in 0..src.count() {
        let t = image_class(src.rep(c));
        if seen[t] {
            return Ok(EquivalenceVerdict::Fails(
                "two components land in the same component".into(),
            ));
        }
        seen[t] = true;
    }

    let stab = Tables::new(f.source(), limits)?;
    let ttab = Tables::new(f.target(), limits)?;
    for c in 0..src.count() {
        let x0 = src.rep(c);
        let y0 = f.apply(0, &SimplexRef::nondeg(x0)).base;
        for n in 1..f.bound() {
            let gx = homotopy_group(&stab, x0, n)?;
            let gy = homotopy_group(&ttab, y0, n)?;
            if gx.order() != gy.order() {
                return Ok(EquivalenceVerdict::Fails(format!(
                    "pi_{n} at vertex {x0} has order {}, its image has order {}",
                    gx.order(),
                    gy.order()
                )));
            }
            let induced: Vec<usize> = gx
                .reps()
                .iter()
                .map(|&idx| {
                    let image = f.apply(n, stab.simplex_ref(n, idx));
                    gy.class_of(ttab.idx(n, &image))
                        .expect("maps send sphericals to sphericals")
                })
                .collect();
            let mut seen = vec![false; gy.order()];
            for &t in &induced {
                if seen[t] {
                    return Ok(EquivalenceVerdict::Fails(format!(
                        "pi_{n} at vertex {x0} is not injective"
                    )));
                }
                seen[t] = true;
            }
            // a simplicial map induces a homomorphism; cross-check the tables
            for i in 0..gx.order() {
                for j in 0..gx.order() {
                    assert_eq!(
                        gy.group().mul(induced[i], induced[j]),
                        induced[gx.group().mul(i, j)],
                        "induced maps respect multiplication"
                    );
                }
            }
        }
    }
    Ok(EquivalenceVerdict::Holds)
}

/// Outcome of [`are_equivalent`]: a witness, or the size of the exhausted
/// search space.
#[derive(Debug)]
pub enum EquivalenceDecision {
    Equivalent(SimplicialMap),
    Distinct { classes_searched: usize },
}

impl EquivalenceDecision {
    pub fn holds(&self) -> bool {
        matches!(self, EquivalenceDecision::Equivalent(_))
    }
}

/// Decide homotopy equivalence by testing one representative per component
/// of the function complex. Complete: every map is homotopic to a tested
/// one, and being an equivalence only depends on the homotopy class.
pub fn are_equivalent(
    x: &KanComplex,
    y: &KanComplex,
    limits: &Limits,
) -> Result<EquivalenceDecision> {
    let bound = x.bound().max(y.bound());
    let x = raise_bound(x, bound, limits)?;
    let y = raise_bound(y, bound, limits)?;
    let maps = hom_complex(x.data(), &y, limits)?;
    let comps = pi0(maps.space());
    for c in 0..comps.count() {
        let f = maps.vertex_map(comps.rep(c));
        if is_equivalence(&f, limits)?.holds() {
            return Ok(EquivalenceDecision::Equivalent(f));
        }
    }
    Ok(EquivalenceDecision::Distinct { classes_searched: comps.count() })
}

/// One component with nothing above it in the stored range.
pub fn is_contractible(x: &KanComplex, limits: &Limits) -> Result<bool> {
    let comps = pi0(x);
    if comps.count() != 1 {
        return Ok(false);
    }
    for n in 1..x.bound() {
        if !pi_n(x, comps.rep(0), n, limits)?.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A map is monic when every homotopy fiber, one per target component, is
/// empty or contractible: it embeds its source as a union of components up
/// to equivalence. This is the fiberwise reading of (-1)-truncated.
pub fn is_mono(f: &SimplicialMap, limits: &Limits) -> Result<bool> {
    let replaced = fibrant_replace(f, limits)?;
    let comps = components_of(f.target());
    let pt = raise_bound(&point(limits)?, f.bound(), limits)?;
    for c in 0..comps.count() {
        let at = SimplicialMap::constant(pt.data(), f.target(), comps.rep(c))?;
        let fiber = strict_pullback(&replaced.fibration, &at, limits)?.space;
        if !fiber.is_empty() && !is_contractible(&fiber, limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A union of components of an ambient complex, with its inclusion.
pub struct Subobject {
    /// Ambient pi_0 classes included, ascending.
    pub components: Vec<usize>,
    pub space: KanComplex,
    pub inclusion: SimplicialMap,
}

struct SpannedLevels<'a> {
    data: &'a SimplicialData,
    tab: &'a Tables,
    keep: &'a [bool],
}

impl DenseLevels for SpannedLevels<'_> {
    type Key = SimplexRef;

    fn level(&self, k: usize) -> Vec<SimplexRef> {
        // a simplex lies in the component of its first vertex
        (0..self.tab.count(k))
            .map(|i| self.tab.simplex_ref(k, i).clone())
            .filter(|r| self.keep[self.data.vertex_of(k, r, 0)])
            .collect()
    }

    fn face(&self, k: usize, key: &SimplexRef, i: usize) -> SimplexRef {
        self.data.face(k, key, i)
    }

    fn degeneracy(&self, _k: usize, key: &SimplexRef, i: usize) -> SimplexRef {
        self.data.degeneracy(key, i)
    }
}

/// The full subcomplex spanned by the chosen pi_0 classes.
pub fn subobject(x: &KanComplex, chosen: &[usize], limits: &Limits) -> Result<Subobject> {
    let comps = pi0(x);
    let mut components: Vec<usize> = chosen.to_vec();
    components.sort_unstable();
    components.dedup();
    assert!(components.iter().all(|&c| c < comps.count()), "no such component");

    let keep: Vec<bool> = (0..x.vertex_count())
        .map(|v| components.binary_search(&comps.class_of(v)).is_ok())
        .collect();
    let tab = Tables::new(x.data(), limits)?;
    let provider = SpannedLevels { data: x.data(), tab: &tab, keep: &keep };
    let (assembled, space) = rebound_truncated(&provider, x.bound() - 1, limits)?;
    let images = (0..=space.bound())
        .map(|k| (0..space.nondeg_count(k)).map(|id| assembled.key_of_nondeg(k, id).clone()).collect())
        .collect();
    let inclusion = SimplicialMap::new(space.data().clone(), x.data().clone(), images)?;
    Ok(Subobject { components, space, inclusion })
}

/// Every union of components, in mask order, so 2^pi_0 entries.
pub fn subobjects(x: &KanComplex, limits: &Limits) -> Result<Vec<Subobject>> {
    let count = pi0(x).count();
    (0..1usize << count)
        .map(|mask| {
            let chosen: Vec<usize> = (0..count).filter(|c| mask >> c & 1 == 1).collect();
            subobject(x, &chosen, limits)
        })
        .collect()
}

/// The characteristic map of a subobject into the two point classifier,
/// sending each simplex to the degenerate truth value of its component.
/// Vertex 1 plays true.
pub fn classify_subobject(
    x: &KanComplex,
    s: &Subobject,
    limits: &Limits,
) -> Result<SimplicialMap> {
    let comps = pi0(x);
    let two = raise_bound(&discrete(2, limits)?, x.bound(), limits)?;
    let images = (0..=x.bound())
        .map(|k| {
            (0..x.nondeg_count(k))
                .map(|id| {
                    let v = x.vertex_of(k, &SimplexRef::nondeg(id), 0);
                    let value = s.components.binary_search(&comps.class_of(v)).is_ok();
                    two.degenerate_vertex(value as usize, k)
                })
                .collect()
        })
        .collect();
    SimplicialMap::new(x.data().clone(), two.into_data(), images)
}

/// Pull a characteristic map back along true. Maps into a discrete complex
/// are fibrations, so the strict pullback is the homotopy pullback and
/// recovers the classified subobject; `left` is its inclusion.
pub fn pullback_of_true(chi: &SimplicialMap, limits: &Limits) -> Result<ProductSpace> {
    let pt = raise_bound(&point(limits)?, chi.bound(), limits)?;
    let along = SimplicialMap::constant(pt.data(), chi.target(), 1)?;
    strict_pullback(chi, &along, limits)
}

/// The complex of basepoint preserving maps: the fiber of evaluation at
/// `x0` over `y0`. Evaluating at a vertex is a fibration out of the
/// function complex, so the strict fiber is the homotopy fiber.
pub fn pointed_hom(
    x: &KanComplex,
    x0: usize,
    y: &KanComplex,
    y0: usize,
    limits: &Limits,
) -> Result<KanComplex> {
    let maps = hom_complex(x.data(), y, limits)?;
    let ev = maps.evaluation_at(x0)?;
    let pt = raise_bound(&point(limits)?, y.bound(), limits)?;
    let at = SimplicialMap::constant(pt.data(), y.data(), y0)?;
    Ok(strict_pullback(&ev, &at, limits)?.space)
}

/// Everything the standard report prints, in one machine friendly record.
#[derive(Debug, Clone, Serialize)]
pub struct SpaceReport {
    pub components: usize,
    pub per_component: Vec<ComponentReport>,
    /// Lowest terms, always with the slash: "1/6", "5/1".
    pub cardinality: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentReport {
    pub basepoint: usize,
    pub groups: Vec<GroupReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupReport {
    pub degree: usize,
    pub order: usize,
    pub name: String,
}

pub fn report(x: &KanComplex, limits: &Limits) -> Result<SpaceReport> {
    let comps = pi0(x);
    let mut per_component = Vec::new();
    for c in 0..comps.count() {
        let basepoint = comps.rep(c);
        let groups = (1..x.bound())
            .map(|n| {
                let g = pi_n(x, basepoint, n, limits)?;
                Ok(GroupReport { degree: n, order: g.order(), name: g.group().identify() })
            })
            .collect::<Result<_>>()?;
        per_component.push(ComponentReport { basepoint, groups });
    }
    let card = homotopy_cardinality(x, limits)?;
    Ok(SpaceReport {
        components: comps.count(),
        per_component,
        cardinality: format!("{}/{}", card.numer(), card.denom()),
    })
}

impl fmt::Display for SpaceReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "components: {}", self.components)?;
        for c in &self.per_component {
            write!(out, "  vertex {}:", c.basepoint)?;
            if c.groups.is_empty() {
                write!(out, " no groups in range")?;
            }
            for g in &c.groups {
                write!(out, " pi_{} = {} (order {})", g.degree, g.name, g.order)?;
            }
            writeln!(out)?;
        }
        write!(out, "cardinality: {}", self.cardinality)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, product as direct_product, symmetric};
    use crate::hom::{coproduct, product};
    use crate::maps::SimplicialMap;
    use crate::paths::loop_space;
    use crate::spaces::{classifying_space, eilenberg_maclane, symmetric_universe};

    fn limits() -> Limits {
        Limits::default()
    }

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn components_count_and_point() {
        let l = limits();
        let five = discrete(5, &l).unwrap();
        let comps = pi0(&five);
        assert_eq!(comps.count(), 5);
        assert_eq!((0..5).map(|c| comps.rep(c)).collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);

        let nerve = classifying_space(&symmetric(3), &l).unwrap();
        assert_eq!(pi0(&nerve).count(), 1);

        let sum = coproduct(
            &classifying_space(&cyclic(2), &l).unwrap(),
            &classifying_space(&cyclic(3), &l).unwrap(),
            &l,
        )
        .unwrap();
        let comps = pi0(&sum);
        assert_eq!(comps.count(), 2);
        assert_eq!(comps.class_of(0), 0);
        assert_eq!(comps.class_of(1), 1);
    }

    #[test]
    fn the_fundamental_group_of_a_nerve_is_the_group() {
        let l = limits();
        let nerve = classifying_space(&symmetric(3), &l).unwrap();
        let g = pi_n(&nerve, 0, 1, &l).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.group().is_isomorphic(&symmetric(3)));
        assert_eq!(g.group().identify(), "S_3");
    }

    #[test]
    fn fundamental_groups_of_products_multiply() {
        let l = limits();
        let x = classifying_space(&cyclic(2), &l).unwrap();
        let y = classifying_space(&cyclic(3), &l).unwrap();
        let xy = product(&x, &y, &l).unwrap().space;
        let g = pi_n(&xy, 0, 1, &l).unwrap();
        assert!(g.group().is_isomorphic(&cyclic(6)));
    }

    #[test]
    fn the_second_group_of_a_twice_delooped_cyclic_group() {
        let l = limits();
        let k = eilenberg_maclane(&cyclic(3), 2, &l).unwrap();
        assert!(pi_n(&k, 0, 1, &l).unwrap().is_trivial());
        let g = pi_n(&k, 0, 2, &l).unwrap();
        assert!(g.group().is_isomorphic(&cyclic(3)));
    }

    #[test]
    fn degrees_at_and_above_the_bound_vanish() {
        let l = limits();
        let nerve = classifying_space(&symmetric(3), &l).unwrap();
        assert!(pi_n(&nerve, 0, 2, &l).unwrap().is_trivial());
        assert!(pi_n(&nerve, 0, 5, &l).unwrap().is_trivial());
        let k = eilenberg_maclane(&cyclic(2), 2, &l).unwrap();
        assert!(pi_n(&k, 0, 3, &l).unwrap().is_trivial());
    }

    #[test]
    fn looping_shifts_the_groups_down() {
        let l = limits();
        let k = eilenberg_maclane(&cyclic(2), 2, &l).unwrap();
        let loops = loop_space(&k, 0, &l).unwrap();
        assert_eq!(pi0(&loops).count(), 1);
        let g = pi_n(&loops, 0, 1, &l).unwrap();
        assert!(g.group().is_isomorphic(&cyclic(2)));
    }

    #[test]
    fn cardinality_of_the_standard_fixtures() {
        let l = limits();
        assert_eq!(homotopy_cardinality(&discrete(5, &l).unwrap(), &l).unwrap(), rational(5, 1));
        assert_eq!(homotopy_cardinality(&discrete(0, &l).unwrap(), &l).unwrap(), rational(0, 1));

        let bs3 = classifying_space(&symmetric(3), &l).unwrap();
        assert_eq!(homotopy_cardinality(&bs3, &l).unwrap(), rational(1, 6));

        let k = eilenberg_maclane(&cyclic(2), 2, &l).unwrap();
        assert_eq!(homotopy_cardinality(&k, &l).unwrap(), rational(2, 1));

        let sum = coproduct(
            &classifying_space(&cyclic(2), &l).unwrap(),
            &classifying_space(&cyclic(3), &l).unwrap(),
            &l,
        )
        .unwrap();
        assert_eq!(homotopy_cardinality(&sum, &l).unwrap(), rational(5, 6));

        let universe = symmetric_universe(2, &l).unwrap();
        assert_eq!(homotopy_cardinality(&universe, &l).unwrap(), rational(5, 2));
    }

    #[test]
    fn identities_are_equivalences_and_collapses_are_not() {
        let l = limits();
        let nerve = classifying_space(&cyclic(2), &l).unwrap();
        let id = SimplicialMap::identity(nerve.data());
        assert!(is_equivalence(&id, &l).unwrap().holds());

        let pt = raise_bound(&point(&l).unwrap(), nerve.bound(), &l).unwrap();
        let collapse = SimplicialMap::constant(nerve.data(), pt.data(), 0).unwrap();
        let verdict = is_equivalence(&collapse, &l).unwrap();
        assert!(!verdict.holds());
        assert!(verdict.to_string().contains("pi_1"));
    }

    #[test]
    fn equivalence_search_tells_groups_of_order_four_apart() {
        let l = limits();
        let z4 = classifying_space(&cyclic(4), &l).unwrap();
        let klein = classifying_space(&direct_product(&cyclic(2), &cyclic(2)), &l).unwrap();
        match are_equivalent(&z4, &klein, &l).unwrap() {
            EquivalenceDecision::Distinct { classes_searched } => {
                // the four homomorphisms Z/4 -> Z/2 x Z/2 all fail
                assert_eq!(classes_searched, 4);
            }
            EquivalenceDecision::Equivalent(_) => panic!("Z/4 is not the Klein group"),
        }
    }

    #[test]
    fn a_space_is_equivalent_to_itself_via_some_witness() {
        let l = limits();
        let nerve = classifying_space(&cyclic(2), &l).unwrap();
        match are_equivalent(&nerve, &nerve, &l).unwrap() {
            EquivalenceDecision::Equivalent(f) => {
                assert!(is_equivalence(&f, &l).unwrap().holds());
            }
            EquivalenceDecision::Distinct { .. } => panic!("identity exists"),
        }
    }

    #[test]
    fn loops_on_the_double_delooping_recover_the_nerve() {
        let l = limits();
        let k = eilenberg_maclane(&cyclic(2), 2, &l).unwrap();
        let loops = loop_space(&k, 0, &l).unwrap();
        let nerve = classifying_space(&cyclic(2), &l).unwrap();
        assert!(are_equivalent(&loops, &nerve, &l).unwrap().holds());
    }

    #[test]
    fn summand_inclusions_are_monic_and_collapses_are_not() {
        let l = limits();
        let left = classifying_space(&cyclic(2), &l).unwrap();
        let right = classifying_space(&cyclic(3), &l).unwrap();
        let sum = coproduct(&left, &right, &l).unwrap();
        // the left summand keeps its table indices in the sum
        let images = (0..=left.bound())
            .map(|k| (0..left.nondeg_count(k)).map(SimplexRef::nondeg).collect())
            .collect();
        let include = SimplicialMap::new(left.data().clone(), sum.data().clone(), images).unwrap();
        assert!(is_mono(&include, &l).unwrap());
        assert!(is_mono(&SimplicialMap::identity(left.data()), &l).unwrap());

        let pt = raise_bound(&point(&l).unwrap(), left.bound(), &l).unwrap();
        let collapse = SimplicialMap::constant(left.data(), pt.data(), 0).unwrap();
        assert!(!is_mono(&collapse, &l).unwrap());
    }

    #[test]
    fn subobjects_are_subsets_of_components() {
        let l = limits();
        let three = discrete(3, &l).unwrap();
        let subs = subobjects(&three, &l).unwrap();
        assert_eq!(subs.len(), 8);
        assert!(subs[0].space.is_empty());
        assert_eq!(subs[7].space.vertex_count(), 3);

        let nerve = classifying_space(&symmetric(3), &l).unwrap();
        assert_eq!(subobjects(&nerve, &l).unwrap().len(), 2);
    }

    #[test]
    fn classification_round_trips_and_separates_subobjects() {
        let l = limits();
        let x = coproduct(
            &coproduct(
                &classifying_space(&cyclic(2), &l).unwrap(),
                &classifying_space(&cyclic(3), &l).unwrap(),
                &l,
            )
            .unwrap(),
            &point(&l).unwrap(),
            &l,
        )
        .unwrap();
        assert_eq!(pi0(&x).count(), 3);

        let mut seen_maps = Vec::new();
        for s in subobjects(&x, &l).unwrap() {
            let chi = classify_subobject(&x, &s, &l).unwrap();
            let back = pullback_of_true(&chi, &l).unwrap();
            let mut recovered: Vec<usize> = (0..back.space.vertex_count())
                .map(|v| back.left.apply(0, &SimplexRef::nondeg(v)).base)
                .collect();
            recovered.sort_unstable();
            let mut included: Vec<usize> = (0..s.space.vertex_count())
                .map(|v| s.inclusion.apply(0, &SimplexRef::nondeg(v)).base)
                .collect();
            included.sort_unstable();
            assert_eq!(recovered, included);

            let fingerprint: Vec<usize> =
                (0..x.vertex_count()).map(|v| chi.apply(0, &SimplexRef::nondeg(v)).base).collect();
            assert!(!seen_maps.contains(&fingerprint), "characteristic maps must differ");
            seen_maps.push(fingerprint);
        }
    }

    #[test]
    fn pointed_maps_between_nerves_are_homomorphisms() {
        let l = limits();
        let z2 = classifying_space(&cyclic(2), &l).unwrap();
        let based = pointed_hom(&z2, 0, &z2, 0, &l).unwrap();
        assert_eq!(pi0(&based).count(), 2);

        let s3 = classifying_space(&symmetric(3), &l).unwrap();
        let z5 = classifying_space(&cyclic(5), &l).unwrap();
        let based = pointed_hom(&s3, 0, &z5, 0, &l).unwrap();
        assert_eq!(pi0(&based).count(), 1);

        let pt = point(&l).unwrap();
        let based = pointed_hom(&pt, 0, &z2, 0, &l).unwrap();
        assert!(is_contractible(&based, &l).unwrap());
    }

    #[test]
    fn reports_carry_the_headline_numbers() {
        let l = limits();
        let bs3 = classifying_space(&symmetric(3), &l).unwrap();
        let report = report(&bs3, &l).unwrap();
        assert_eq!(report.components, 1);
        assert_eq!(report.cardinality, "1/6");
        assert_eq!(report.per_component[0].groups[0].name, "S_3");
        let text = report.to_string();
        assert!(text.contains("pi_1 = S_3 (order 6)"));
    }
}
