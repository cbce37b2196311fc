//! Plain-text persistence. Everything the command line reads or writes
//! goes through here: complexes, maps, group and groupoid tables, actions.
//!
//! All formats are line oriented. Blank lines and lines starting with `#`
//! are skipped. Parse errors carry the 1-based line number they happened
//! on. Saving and loading round-trips on the nose; the loaders re-derive
//! whatever is redundant in a file and reject mismatches rather than trust
//! them.
//!
//! Complex grammar:
//!
//! ```text
//! pifinite complex v1
//! bound 2
//! dim 0 count 1
//! 0 | |
//! dim 1 count 2
//! 0 | 0 0 |
//! 1 | 0 0 | 0
//! ...
//! ```
//!
//! One record per simplex, degenerate ones included, in table order
//! (stored simplices first, so record id equals stored id for those).
//! Record fields are separated by `|`: the id, the face ids one dimension
//! down, and the degeneracy word (empty exactly for the stored simplices).
//!
//! Map grammar: a `source` section and a `target` section, each holding a
//! complex body (everything after the format line), then a `map` section
//! with one id table per dimension,
//!
//! ```text
//! pifinite map v1
//! source
//! bound 1
//! ...
//! target
//! bound 1
//! ...
//! map
//! dim 0 : 0
//! dim 1 : 2 0
//! ```
//!
//! listing the image record id of each stored source simplex; images of
//! degenerate simplices follow from the simplicial identities and are not
//! written.
//!
//! Group grammar: element count, then the multiplication table row by row
//! (entry `i j` of row `i` is the product `i * j`). Groupoid grammar:
//! object and arrow counts, per-arrow endpoints, the identity arrow of
//! each object, and the composition table with `-` marking non-composable
//! pairs. Action grammar: a `group` section, a `space` section holding a
//! complex body, then per-element image tables per dimension.

use crate::error::{EngineError, Result};
use crate::groupoids::FiniteGroupoid;
use crate::groups::FiniteGroup;
use crate::kan::kan_check;
use crate::limits::Limits;
use crate::maps::SimplicialMap;
use crate::simplicial::{Simplex, SimplexRef, SimplicialData, Tables};
use crate::spaces::GroupAction;

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(EngineError::FileFormat { line, message: message.into() })
}

/// Cursor over the meaningful lines of a file, tracking 1-based numbers
/// for error reporting.
struct Reader<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Reader<'a> {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Reader { lines, pos: 0 }
    }

    fn next(&mut self) -> Result<(usize, &'a str)> {
        let got = self.lines.get(self.pos).copied();
        self.pos += 1;
        got.ok_or_else(|| EngineError::FileFormat {
            line: self.lines.last().map_or(1, |(n, _)| n + 1),
            message: "unexpected end of file".into(),
        })
    }

    fn expect(&mut self, exact: &str) -> Result<()> {
        let (n, l) = self.next()?;
        if l == exact {
            Ok(())
        } else {
            fail(n, format!("expected `{exact}`, found `{l}`"))
        }
    }

    /// A line of the shape `<head> <number>`.
    fn keyed_count(&mut self, head: &str) -> Result<usize> {
        let (n, l) = self.next()?;
        match l.strip_prefix(head).map(str::trim) {
            Some(rest) => rest
                .parse()
                .map_err(|_| EngineError::FileFormat {
                    line: n,
                    message: format!("`{head}` needs a number, found `{rest}`"),
                }),
            None => fail(n, format!("expected `{head} <n>`, found `{l}`")),
        }
    }

    fn at_end(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            None => Ok(()),
            Some(&(n, l)) => fail(n, format!("trailing content `{l}`")),
        }
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|w| {
            w.parse().map_err(|_| EngineError::FileFormat {
                line,
                message: format!("expected a number, found `{w}`"),
            })
        })
        .collect()
}

fn join(ns: &[usize]) -> String {
    ns.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

const COMPLEX_HEADER: &str = "pifinite complex v1";
const MAP_HEADER: &str = "pifinite map v1";
const GROUP_HEADER: &str = "pifinite group v1";
const GROUPOID_HEADER: &str = "pifinite groupoid v1";
const ACTION_HEADER: &str = "pifinite action v1";

fn write_complex_body(out: &mut String, tab: &Tables) {
    out.push_str(&format!("bound {}\n", tab.bound()));
    for dim in 0..=tab.bound() {
        out.push_str(&format!("dim {dim} count {}\n", tab.count(dim)));
        for idx in 0..tab.count(dim) {
            let faces: Vec<usize> = if dim == 0 {
                Vec::new()
            } else {
                (0..=dim).map(|i| tab.face(dim, idx, i)).collect()
            };
            let word = &tab.simplex_ref(dim, idx).word;
            out.push_str(&format!("{idx} | {} | {}\n", join(&faces), join(word)));
        }
    }
}

pub fn write_complex(data: &SimplicialData, limits: &Limits) -> Result<String> {
    let tab = Tables::new(data, limits)?;
    let mut out = String::from(COMPLEX_HEADER);
    out.push('\n');
    write_complex_body(&mut out, &tab);
    Ok(out)
}

/// One parsed simplex record.
struct Record {
    line: usize,
    faces: Vec<usize>,
    word: Vec<usize>,
}

fn read_records(r: &mut Reader, bound: usize) -> Result<Vec<Vec<Record>>> {
    let mut dims = Vec::with_capacity(bound + 1);
    for dim in 0..=bound {
        let (n, l) = r.next()?;
        let count = match l.strip_prefix(&format!("dim {dim} count ")) {
            Some(rest) => rest.parse().map_err(|_| EngineError::FileFormat {
                line: n,
                message: format!("bad count `{rest}`"),
            })?,
            None => return fail(n, format!("expected `dim {dim} count <n>`, found `{l}`")),
        };
        let mut records: Vec<Record> = Vec::with_capacity(count);
        for id in 0..count {
            let (n, l) = r.next()?;
            let parts: Vec<&str> = l.split('|').collect();
            if parts.len() != 3 {
                return fail(n, "a record is `<id> | <faces> | <word>`");
            }
            if numbers(n, parts[0])? != [id] {
                return fail(n, format!("expected record id {id}"));
            }
            let faces = numbers(n, parts[1])?;
            if faces.len() != if dim == 0 { 0 } else { dim + 1 } {
                return fail(n, format!("a {dim}-simplex lists {} faces", dim + 1));
            }
            let word = numbers(n, parts[2])?;
            records.push(Record { line: n, faces, word });
        }
        dims.push(records);
    }
    Ok(dims)
}

/// Resolve record `id` at `dim` to a reference into the stored levels by
/// chasing its degeneracy word down the face lists.
fn ref_of_record(dims: &[Vec<Record>], dim: usize, id: usize) -> Result<SimplexRef> {
    let rec = &dims[dim][id];
    let mut cur_dim = dim;
    let mut cur = id;
    for &j in &rec.word {
        if j >= cur_dim {
            return fail(rec.line, format!("degeneracy index {j} out of range at dimension {cur_dim}"));
        }
        cur = dims[cur_dim][cur].faces[j];
        cur_dim -= 1;
        if cur >= dims[cur_dim].len() {
            return fail(rec.line, format!("face id {cur} out of range at dimension {cur_dim}"));
        }
    }
    if !dims[cur_dim][cur].word.is_empty() {
        return fail(rec.line, "degeneracy word does not end on a stored simplex");
    }
    Ok(SimplexRef { word: rec.word.clone(), base: cur })
}

fn complex_body(r: &mut Reader, limits: &Limits) -> Result<SimplicialData> {
    let bound = r.keyed_count("bound")?;
    let dims = read_records(r, bound)?;
    let mut levels: Vec<Vec<Simplex>> = Vec::with_capacity(bound + 1);
    for dim in 0..=bound {
        let mut level = Vec::new();
        for (id, rec) in dims[dim].iter().enumerate() {
            if !rec.word.is_empty() {
                continue; // redundant; checked against the enumeration below
            }
            if id != level.len() {
                return fail(rec.line, "stored simplices must precede degenerate records");
            }
            let faces = rec
                .faces
                .iter()
                .map(|&f| {
                    if f >= dims[dim - 1].len() {
                        fail(rec.line, format!("face id {f} out of range"))
                    } else {
                        ref_of_record(&dims, dim - 1, f)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            level.push(Simplex { faces });
        }
        levels.push(level);
    }
    let data = SimplicialData::new(bound, levels).map_err(|e| EngineError::FileFormat {
        line: dims[0].first().map_or(1, |rec| rec.line),
        message: e.to_string(),
    })?;

    // The degenerate records are redundant; make sure they agree with the
    // enumeration so ids in this file mean what they appear to mean.
    let tab = Tables::new(&data, limits)?;
    for dim in 0..=bound {
        if tab.count(dim) != dims[dim].len() {
            let line = dims[dim].last().map_or(1, |rec| rec.line);
            return fail(line, format!("dimension {dim} holds {} simplices, file lists {}", tab.count(dim), dims[dim].len()));
        }
        for (id, rec) in dims[dim].iter().enumerate() {
            let expect = tab.simplex_ref(dim, id);
            if rec.word != expect.word {
                return fail(rec.line, format!("record {id} should carry word `{}`", join(&expect.word)));
            }
            for i in 0..rec.faces.len() {
                if rec.faces[i] != tab.face(dim, id, i) {
                    return fail(rec.line, format!("face {i} of record {id} should be {}", tab.face(dim, id, i)));
                }
            }
        }
    }
    Ok(data)
}

pub fn read_complex(text: &str, limits: &Limits) -> Result<SimplicialData> {
    let mut r = Reader::new(text);
    r.expect(COMPLEX_HEADER)?;
    let data = complex_body(&mut r, limits)?;
    r.at_end()?;
    Ok(data)
}

pub fn write_map(f: &SimplicialMap, limits: &Limits) -> Result<String> {
    let stab = Tables::new(f.source(), limits)?;
    let ttab = Tables::new(f.target(), limits)?;
    let mut out = String::from(MAP_HEADER);
    out.push_str("\nsource\n");
    write_complex_body(&mut out, &stab);
    out.push_str("target\n");
    write_complex_body(&mut out, &ttab);
    out.push_str("map\n");
    for dim in 0..=f.bound() {
        let images: Vec<usize> = (0..f.source().nondeg_count(dim))
            .map(|id| ttab.idx(dim, f.image(dim, id)))
            .collect();
        out.push_str(&format!("dim {dim} : {}\n", join(&images)));
    }
    Ok(out)
}

pub fn read_map(text: &str, limits: &Limits) -> Result<SimplicialMap> {
    let mut r = Reader::new(text);
    r.expect(MAP_HEADER)?;
    r.expect("source")?;
    let source = complex_body(&mut r, limits)?;
    r.expect("target")?;
    let target = complex_body(&mut r, limits)?;
    let ttab = Tables::new(&target, limits)?;
    r.expect("map")?;
    let mut images = Vec::with_capacity(source.bound() + 1);
    for dim in 0..=source.bound() {
        let (n, l) = r.next()?;
        let ids = match l.strip_prefix(&format!("dim {dim} :")) {
            Some(rest) => numbers(n, rest)?,
            None => return fail(n, format!("expected `dim {dim} : <ids>`, found `{l}`")),
        };
        if ids.len() != source.nondeg_count(dim) {
            return fail(n, format!("dimension {dim} needs {} images", source.nondeg_count(dim)));
        }
        let refs = ids
            .iter()
            .map(|&idx| {
                if idx >= ttab.count(dim) {
                    fail(n, format!("image id {idx} out of range at dimension {dim}"))
                } else {
                    Ok(ttab.simplex_ref(dim, idx).clone())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        images.push(refs);
    }
    r.at_end()?;
    SimplicialMap::new(source, target, images)
}

fn write_group_body(out: &mut String, g: &FiniteGroup) {
    out.push_str(&format!("name {}\n", g.name()));
    out.push_str(&format!("elements {}\n", g.order()));
    for a in 0..g.order() {
        let row: Vec<usize> = (0..g.order()).map(|b| g.mul(a, b)).collect();
        out.push_str(&join(&row));
        out.push('\n');
    }
}

pub fn write_group(g: &FiniteGroup) -> String {
    let mut out = String::from(GROUP_HEADER);
    out.push('\n');
    write_group_body(&mut out, g);
    out
}

fn group_body(r: &mut Reader) -> Result<FiniteGroup> {
    let (n, l) = r.next()?;
    let name = match l.strip_prefix("name ") {
        Some(rest) => rest.to_string(),
        None => return fail(n, format!("expected `name <label>`, found `{l}`")),
    };
    let order = r.keyed_count("elements")?;
    let mut table = Vec::with_capacity(order);
    for _ in 0..order {
        let (n, l) = r.next()?;
        let row = numbers(n, l)?;
        if row.len() != order {
            return fail(n, format!("a row of the table lists {order} products"));
        }
        table.push(row);
    }
    FiniteGroup::new(name, table)
}

pub fn read_group(text: &str) -> Result<FiniteGroup> {
    let mut r = Reader::new(text);
    r.expect(GROUP_HEADER)?;
    let g = group_body(&mut r)?;
    r.at_end()?;
    Ok(g)
}

pub fn write_groupoid(g: &FiniteGroupoid) -> String {
    let mut out = String::from(GROUPOID_HEADER);
    out.push('\n');
    out.push_str(&format!("objects {}\n", g.objects()));
    out.push_str(&format!("arrows {}\n", g.arrows()));
    for f in 0..g.arrows() {
        out.push_str(&format!("arrow {f} : {} {}\n", g.src(f), g.dst(f)));
    }
    let ids: Vec<usize> = (0..g.objects()).map(|x| g.identity_at(x)).collect();
    out.push_str(&format!("identity {}\n", join(&ids)));
    for f in 0..g.arrows() {
        let row: Vec<String> = (0..g.arrows())
            .map(|h| {
                if g.dst(f) == g.src(h) {
                    g.then(f, h).to_string()
                } else {
                    "-".into()
                }
            })
            .collect();
        out.push_str(&format!("compose {f} : {}\n", row.join(" ")));
    }
    out
}

pub fn read_groupoid(text: &str) -> Result<FiniteGroupoid> {
    let mut r = Reader::new(text);
    r.expect(GROUPOID_HEADER)?;
    let objects = r.keyed_count("objects")?;
    let arrows = r.keyed_count("arrows")?;
    let mut src = Vec::with_capacity(arrows);
    let mut dst = Vec::with_capacity(arrows);
    for f in 0..arrows {
        let (n, l) = r.next()?;
        let ends = match l.strip_prefix(&format!("arrow {f} :")) {
            Some(rest) => numbers(n, rest)?,
            None => return fail(n, format!("expected `arrow {f} : <src> <dst>`, found `{l}`")),
        };
        if ends.len() != 2 {
            return fail(n, "an arrow line lists a source and a target");
        }
        src.push(ends[0]);
        dst.push(ends[1]);
    }
    let (n, l) = r.next()?;
    let identity = match l.strip_prefix("identity") {
        Some(rest) => numbers(n, rest)?,
        None => return fail(n, format!("expected `identity <arrows>`, found `{l}`")),
    };
    let mut compose = Vec::with_capacity(arrows);
    for f in 0..arrows {
        let (n, l) = r.next()?;
        let rest = match l.strip_prefix(&format!("compose {f} :")) {
            Some(rest) => rest,
            None => return fail(n, format!("expected `compose {f} : <row>`, found `{l}`")),
        };
        let row = rest
            .split_whitespace()
            .map(|w| {
                if w == "-" {
                    Ok(None)
                } else {
                    w.parse().map(Some).map_err(|_| EngineError::FileFormat {
                        line: n,
                        message: format!("expected an arrow id or `-`, found `{w}`"),
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != arrows {
            return fail(n, format!("a composition row lists {arrows} entries"));
        }
        compose.push(row);
    }
    r.at_end()?;
    FiniteGroupoid::new(objects, src, dst, identity, compose)
}

pub fn write_action(a: &GroupAction, limits: &Limits) -> Result<String> {
    let tab = Tables::new(a.space().data(), limits)?;
    let mut out = String::from(ACTION_HEADER);
    out.push_str("\ngroup\n");
    write_group_body(&mut out, a.group());
    out.push_str("space\n");
    write_complex_body(&mut out, &tab);
    for g in 0..a.group().order() {
        for dim in 0..=a.space().bound() {
            let images: Vec<usize> = (0..a.space().nondeg_count(dim))
                .map(|id| a.act(g, dim, id))
                .collect();
            out.push_str(&format!("act {g} dim {dim} : {}\n", join(&images)));
        }
    }
    Ok(out)
}

pub fn read_action(text: &str, limits: &Limits) -> Result<GroupAction> {
    let mut r = Reader::new(text);
    r.expect(ACTION_HEADER)?;
    r.expect("group")?;
    let group = group_body(&mut r)?;
    r.expect("space")?;
    let data = complex_body(&mut r, limits)?;
    let space = kan_check(data, limits)?;
    let mut images = Vec::with_capacity(group.order());
    for g in 0..group.order() {
        let mut per = Vec::with_capacity(space.bound() + 1);
        for dim in 0..=space.bound() {
            let (n, l) = r.next()?;
            let ids = match l.strip_prefix(&format!("act {g} dim {dim} :")) {
                Some(rest) => numbers(n, rest)?,
                None => {
                    return fail(n, format!("expected `act {g} dim {dim} : <ids>`, found `{l}`"))
                }
            };
            if ids.len() != space.nondeg_count(dim) {
                return fail(n, format!("element {g} needs {} images at dimension {dim}", space.nondeg_count(dim)));
            }
            per.push(ids);
        }
        images.push(per);
    }
    r.at_end()?;
    GroupAction::new(group, space, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoids::FiniteGroupoid;
    use crate::groups::{cyclic, symmetric, GroupHom};
    use crate::spaces::{classifying_map, classifying_space, eilenberg_maclane, translation_action};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn complexes_round_trip() {
        for data in [
            crate::testutil::z2_nerve_by_hand(),
            classifying_space(&symmetric(3), &lim()).unwrap().into_data(),
            eilenberg_maclane(&cyclic(2), 2, &lim()).unwrap().into_data(),
            crate::simplicial::circle(2),
        ] {
            let text = write_complex(&data, &lim()).unwrap();
            let back = read_complex(&text, &lim()).unwrap();
            assert_eq!(back, data);
            // and the text itself is reproduced, not just the data
            assert_eq!(write_complex(&back, &lim()).unwrap(), text);
        }
    }

    #[test]
    fn maps_round_trip() {
        let incl = GroupHom::alternating_in_symmetric(3);
        let f = classifying_map(&incl, &lim()).unwrap();
        let text = write_map(&f, &lim()).unwrap();
        let back = read_map(&text, &lim()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn groups_and_groupoids_round_trip() {
        let g = symmetric(3);
        let back = read_group(&write_group(&g)).unwrap();
        assert_eq!(back.name(), "S_3");
        assert!(back.is_isomorphic(&g));
        assert_eq!((0..6).map(|a| back.mul(a, 2)).collect::<Vec<_>>(), (0..6).map(|a| g.mul(a, 2)).collect::<Vec<_>>());

        let gpd = FiniteGroupoid::connected(2, &cyclic(2));
        let back = read_groupoid(&write_groupoid(&gpd)).unwrap();
        assert_eq!(back.objects(), 2);
        assert_eq!(back.arrows(), gpd.arrows());
        for f in 0..back.arrows() {
            assert_eq!((back.src(f), back.dst(f)), (gpd.src(f), gpd.dst(f)));
        }
    }

    #[test]
    fn actions_round_trip() {
        let a = translation_action(&cyclic(3), &lim()).unwrap();
        let text = write_action(&a, &lim()).unwrap();
        let back = read_action(&text, &lim()).unwrap();
        assert_eq!(back.group().order(), 3);
        for g in 0..3 {
            for id in 0..3 {
                assert_eq!(back.act(g, 0, id), a.act(g, 0, id));
            }
        }
    }

    #[test]
    fn errors_point_at_the_offending_line() {
        let garbled = "pifinite complex v1\nbound 1\ndim 0 count 1\n0 | |\ndim 1 count 2\n0 | 0 0 |\n1 | 0 0 | 5\n";
        match read_complex(garbled, &lim()) {
            Err(EngineError::FileFormat { line, .. }) => assert_eq!(line, 7),
            other => panic!("expected a format error, got {other:?}"),
        }

        let misdeclared = "pifinite complex v1\nbound 1\ndim 0 count 1\n0 | |\ndim 1 count 1\n0 | 0 0 |\n";
        match read_complex(misdeclared, &lim()) {
            Err(EngineError::FileFormat { line, .. }) => assert_eq!(line, 6),
            other => panic!("expected a count mismatch, got {other:?}"),
        }

        match read_group("pifinite group v1\nname broken\nelements 2\n0 1\n1 1\n") {
            Err(EngineError::InvalidGroup(_)) => {}
            other => panic!("expected a group axiom failure, got {other:?}"),
        }
    }
}
