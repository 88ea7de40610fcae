//! Pattern detection and local rewriting for each move.

use std::collections::{BTreeMap, BTreeSet};

use super::work::{Vertex, Work};
use super::Direction::{Expand, Reduce};
use super::MoveTag::{self, *};
use super::MoveSite;
use crate::diagram::map::PlanarMap;
use crate::diagram::{Dir, PlanarDiagram};
use crate::ribbon::{FaceStep, Side};
use crate::{Error, Result};

/// R1 curl layouts `(e_in slot, curl tail, curl head, e_out slot)`:
/// positive over-first, positive under-first, negative under-first,
/// negative over-first.
const R1_LAYOUTS: [[usize; 4]; 4] = [[3, 1, 0, 2], [0, 2, 3, 1], [0, 2, 1, 3], [1, 3, 0, 2]];
const V1_LAYOUTS: [[usize; 4]; 2] = [[0, 2, 1, 3], [1, 3, 0, 2]];

fn site(tag: MoveTag, dir: super::Direction, anchors: Vec<String>) -> MoveSite {
    MoveSite::new(tag, dir, anchors)
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Left => "L",
        Side::Right => "R",
    }
}

fn parse_side(s: &str) -> Result<Side> {
    match s {
        "L" => Ok(Side::Left),
        "R" => Ok(Side::Right),
        _ => Err(Error::StaleSite(format!("bad side '{s}'"))),
    }
}

fn stale(msg: impl Into<String>) -> Error {
    Error::StaleSite(msg.into())
}

fn flip(d: Dir) -> Dir {
    match d {
        Dir::In => Dir::Out,
        Dir::Out => Dir::In,
    }
}

/// Arcs and corner vertices of a face.
fn face_parts(f: &[FaceStep]) -> (Vec<usize>, Vec<usize>) {
    (f.iter().map(|s| s.edge).collect(), f.iter().map(|s| s.corner.0).collect())
}

fn distinct(xs: &[usize]) -> bool {
    xs.iter().collect::<BTreeSet<_>>().len() == xs.len()
}

/// Kind of a triangle face, if it is a legal move site.
fn triangle_kind(map: &PlanarMap, f: &[FaceStep]) -> Option<MoveTag> {
    let (arcs, verts) = face_parts(f);
    if f.len() != 3 || !distinct(&arcs) || !distinct(&verts) || arcs.iter().any(|&a| map.arcs[a].bars != 0) {
        return None;
    }
    match verts.iter().filter(|&&v| map.is_classical(v)).count() {
        0 => Some(V3),
        1 => Some(V4),
        3 => {
            // Cyclic heights: every strand over at exactly one of its crossings.
            let cyclic = arcs.iter().all(|&a| {
                let arc = &map.arcs[a];
                (arc.tail.1 % 2 + arc.head.1 % 2) == 1
            });
            (!cyclic).then_some(R3)
        }
        _ => None,
    }
}

fn bigon_kind(map: &PlanarMap, f: &[FaceStep]) -> Option<MoveTag> {
    let (arcs, verts) = face_parts(f);
    if f.len() != 2 || !distinct(&arcs) || !distinct(&verts) {
        return None;
    }
    // The strands must stay apart once the bigon is gone: no arc outside it
    // may join two of its corners directly.
    let joined = verts.iter().flat_map(|&v| map.rotations[v].iter()).any(|&(a, _)| {
        !arcs.contains(&a) && verts.contains(&map.arcs[a].tail.0) && verts.contains(&map.arcs[a].head.0)
    });
    if joined {
        return None;
    }
    match verts.iter().filter(|&&v| map.is_classical(v)).count() {
        0 => Some(V2),
        2 => {
            let ok = arcs.iter().all(|&a| {
                let arc = &map.arcs[a];
                arc.bars == 0 && arc.tail.1 % 2 == arc.head.1 % 2
            });
            ok.then_some(R2)
        }
        _ => None,
    }
}

fn sorted_labels(map: &PlanarMap, arcs: &[usize]) -> Vec<String> {
    let mut l: Vec<String> = arcs.iter().map(|&a| map.arcs[a].label.clone()).collect();
    l.sort();
    l
}

/// Bar counts an expansion may move past its new crossings: loops have
/// no far side, so only 0 there.
fn splits(work: &Work, label: &str) -> std::ops::RangeInclusive<u32> {
    0..=if work.loops.contains_key(label) { 0 } else { work.bar_count(label) }
}

fn with_param(mut anchors: Vec<String>, key: &str, n: u32) -> Vec<String> {
    if n > 0 {
        anchors.push(format!("{key}={n}"));
    }
    anchors
}

/// R2 and V2 expansions for one pair of arc sides, over every bar split.
fn bigon_sites(out: &mut Vec<MoveSite>, work: &Work, base: Vec<String>) {
    for bx in splits(work, &base[0]) {
        for by in splits(work, &base[2]) {
            let a = with_param(with_param(base.clone(), "bx", bx), "by", by);
            for over in ["x", "y"] {
                let mut r = a.clone();
                r.push(format!("over={over}"));
                out.push(site(R2, Expand, r));
            }
            out.push(site(V2, Expand, a));
        }
    }
}

pub(super) fn find_all(d: &PlanarDiagram) -> Vec<MoveSite> {
    let map = PlanarMap::new(d);
    let faces = map.faces();
    let work = Work::new(d);
    let mut out = Vec::new();
    // Curls.
    for v in 0..map.vertex_count() {
        for k in 0..4u8 {
            let (a, is_tail) = map.rotations[v][k as usize];
            let arc = &map.arcs[a];
            if !is_tail || arc.head.0 != v || (arc.head.1 + 4 - k) % 2 == 0 {
                continue;
            }
            let anchors = vec![map.ids[v].clone(), arc.label.clone()];
            if !map.is_classical(v) {
                out.push(site(V1, Reduce, anchors));
            } else if arc.bars == 0 {
                out.push(site(R1, Reduce, anchors));
            }
        }
    }
    for f in &faces {
        let (arcs, _) = face_parts(f);
        if let Some(tag) = bigon_kind(&map, f) {
            out.push(site(tag, Reduce, sorted_labels(&map, &arcs)));
        }
        if let Some(tag) = triangle_kind(&map, f) {
            out.push(site(tag, Reduce, sorted_labels(&map, &arcs)));
        }
    }
    // Bars next to virtual crossings, and bar pairs.
    for arc in &map.arcs {
        if arc.bars >= 1 {
            let (h, hs) = arc.head;
            if !map.is_classical(h) && map.arcs[map.rotations[h][((hs + 2) % 4) as usize].0].label != arc.label {
                out.push(site(T1, Reduce, vec![arc.label.clone(), map.ids[h].clone()]));
            }
            let (t, ts) = arc.tail;
            if !map.is_classical(t) && map.arcs[map.rotations[t][((ts + 2) % 4) as usize].0].label != arc.label {
                out.push(site(T1, Expand, vec![arc.label.clone(), map.ids[t].clone()]));
            }
        }
    }
    let mut labels: Vec<String> = map.arcs.iter().map(|a| a.label.clone()).collect();
    labels.extend(d.loops.iter().cloned());
    for l in &labels {
        if work.bar_count(l) >= 2 {
            out.push(site(T2, Reduce, vec![l.clone()]));
        }
    }
    for c in &d.classical {
        for k in 0..2 {
            let s = site(T3, Reduce, vec![c.id.clone(), format!("k={k}")]);
            if t3_reduce(&mut work.clone(), &s).is_ok() {
                out.push(s);
            }
        }
    }
    // Expansions.
    for l in &labels {
        for b in splits(&work, l) {
            for v in 0..R1_LAYOUTS.len() {
                out.push(site(R1, Expand, with_param(vec![l.clone(), format!("v={v}")], "b", b)));
            }
            for curl in 0..=work.bar_count(l) - b {
                for v in 0..V1_LAYOUTS.len() {
                    let a = vec![l.clone(), format!("v={v}"), format!("curl={curl}")];
                    out.push(site(V1, Expand, with_param(a, "b", b)));
                }
            }
        }
        out.push(site(T2, Expand, vec![l.clone()]));
    }
    for f in &faces {
        let sides: BTreeSet<(usize, Side)> = f.iter().map(|s| (s.edge, s.side)).collect();
        for &(x, sx) in &sides {
            for &(y, sy) in &sides {
                if x == y {
                    continue;
                }
                let base = vec![
                    map.arcs[x].label.clone(),
                    side_name(sx).into(),
                    map.arcs[y].label.clone(),
                    side_name(sy).into(),
                ];
                bigon_sites(&mut out, &work, base);
            }
        }
    }
    // Split components can be placed in any face of one another.
    let (_, comp) = map.vertex_components();
    let mut parts: Vec<(&str, Option<usize>)> = map.arcs.iter().map(|a| (a.label.as_str(), Some(comp[a.tail.0]))).collect();
    parts.extend(d.loops.iter().map(|l| (l.as_str(), None)));
    for &(x, cx) in &parts {
        for &(y, cy) in &parts {
            if x == y || (cx.is_some() && cx == cy) {
                continue;
            }
            for sx in ["L", "R"] {
                for sy in ["L", "R"] {
                    bigon_sites(&mut out, &work, vec![x.into(), sx.into(), y.into(), sy.into()]);
                }
            }
        }
    }
    for c in &d.classical {
        for k in 0..2 {
            out.push(site(T3, Expand, vec![c.id.clone(), format!("k={k}")]));
        }
    }
    out.sort();
    out.dedup();
    out
}

pub(super) fn apply(d: &PlanarDiagram, s: &MoveSite) -> Result<PlanarDiagram> {
    let mut w = Work::new(d);
    match (s.tag, s.direction) {
        (R1 | V1, Expand) => curl_expand(&mut w, s)?,
        (R1 | V1, Reduce) => curl_reduce(&mut w, s)?,
        (R2 | V2, Expand) => bigon_expand(d, &mut w, s)?,
        (R2 | V2, Reduce) => bigon_reduce(d, &mut w, s)?,
        (R3 | V3 | V4, _) => triangle(d, &mut w, s)?,
        (T1, dir) => bar_slide(&mut w, s, dir == Reduce)?,
        (T2, dir) => {
            let e = s.pos(0)?;
            if !w.is_arc(e) && !w.loops.contains_key(e) {
                return Err(stale(format!("no edge '{e}'")));
            }
            let n = w.bar_count(e);
            match dir {
                Expand => w.set_bars(e, n + 2),
                Reduce if n >= 2 => w.set_bars(e, n - 2),
                Reduce => return Err(stale(format!("edge '{e}' has fewer than two bars"))),
            }
        }
        (T3, Expand) => t3_expand(&mut w, s)?,
        (T3, Reduce) => t3_reduce(&mut w, s)?,
    }
    Ok(w.into_diagram())
}

fn curl_expand(w: &mut Work, s: &MoveSite) -> Result<()> {
    let e = s.pos(0)?.to_string();
    let v = s.num("v")? as usize;
    let curl = s.num("curl")?;
    let layout = match s.tag {
        R1 if curl == 0 => R1_LAYOUTS.get(v),
        V1 => V1_LAYOUTS.get(v),
        _ => None,
    }
    .ok_or_else(|| stale(format!("bad curl parameters in {s}")))?;
    let after = s.num("b")?;
    let bars = w.bar_count(&e);
    if curl + after > bars || (after > 0 && w.loops.contains_key(&e)) {
        return Err(stale(format!("cannot split the bars of '{e}' as {s}")));
    }
    let out_label = if w.loops.contains_key(&e) {
        w.loops.remove(&e);
        e.clone()
    } else if w.is_arc(&e) {
        w.cut(&e)
    } else {
        return Err(stale(format!("no edge '{e}'")));
    };
    let k = w.fresh_edge();
    let mut slots: [(String, Dir); 4] = std::array::from_fn(|_| (String::new(), Dir::In));
    slots[layout[0]] = (e.clone(), Dir::In);
    slots[layout[1]] = (k.clone(), Dir::Out);
    slots[layout[2]] = (k.clone(), Dir::In);
    slots[layout[3]] = (out_label.clone(), Dir::Out);
    let virt = s.tag == V1;
    let id = w.fresh_vertex(virt);
    w.verts.push(Vertex { id, virt, slots });
    w.set_bars(&e, bars - curl - after);
    w.set_bars(&k, curl);
    if after > 0 {
        w.set_bars(&out_label, after);
    }
    Ok(())
}

fn curl_reduce(w: &mut Work, s: &MoveSite) -> Result<()> {
    let vi = w.vertex(s.pos(0)?).ok_or_else(|| stale("no such vertex"))?;
    let k = s.pos(1)?;
    let (tv, t) = w.end(k, Dir::Out).ok_or_else(|| stale("no curl arc"))?;
    let (hv, h) = w.end(k, Dir::In).ok_or_else(|| stale("no curl arc"))?;
    let ok = tv == vi && hv == vi && (t + 4 - h) % 2 == 1 && w.verts[vi].virt == (s.tag == V1);
    if !ok || (s.tag == R1 && w.bar_count(k) != 0) {
        return Err(stale(format!("no curl at {s}")));
    }
    w.remove_vertex(vi);
    Ok(())
}

/// Find the face containing the given arc sides.
fn face_with(map: &PlanarMap, want: &[(&str, Option<Side>)]) -> Option<Vec<FaceStep>> {
    map.faces().into_iter().find(|f| {
        want.iter().all(|(label, side)| {
            f.iter().any(|st| map.arcs[st.edge].label == *label && side.is_none_or(|sd| sd == st.side))
        }) && (want.iter().any(|w| w.1.is_some()) || f.len() == want.len())
    })
}

fn bigon_expand(d: &PlanarDiagram, w: &mut Work, s: &MoveSite) -> Result<()> {
    let (x, y) = (s.pos(0)?.to_string(), s.pos(2)?.to_string());
    let (sx, sy) = (parse_side(s.pos(1)?)?, parse_side(s.pos(3)?)?);
    let over_x = match (s.tag, s.param("over")) {
        (R2, Some("x")) => true,
        (R2, Some("y")) => false,
        (V2, None) => false,
        _ => return Err(stale(format!("bad parameters in {s}"))),
    };
    let map = PlanarMap::new(d);
    let (_, comp) = map.vertex_components();
    let comp_of = |l: &str| map.arcs.iter().find(|a| a.label == l).map(|a| comp[a.tail.0]);
    let known = |l: &str| w.loops.contains_key(l) || comp_of(l).is_some();
    if x == y || !known(&x) || !known(&y) {
        return Err(stale(format!("bad edges in {s}")));
    }
    let split = comp_of(&x).is_none() || comp_of(&y).is_none() || comp_of(&x) != comp_of(&y);
    if !split && face_with(&map, &[(&x, Some(sx)), (&y, Some(sy))]).is_none() {
        return Err(stale(format!("arcs do not share a face in {s}")));
    }
    // A loop is opened rather than cut: it closes up through the bigon.
    let open = |w: &mut Work, l: &str| match w.loops.remove(l) {
        Some(b) => {
            w.set_bars(l, b);
            l.to_string()
        }
        None => w.cut(l),
    };
    let mut moved = Vec::new();
    for (l, key) in [(&x, "bx"), (&y, "by")] {
        let n = s.num(key)?;
        if n > w.bar_count(l) || (n > 0 && w.loops.contains_key(l.as_str())) {
            return Err(stale(format!("cannot split the bars of '{l}' as {s}")));
        }
        moved.push(n);
    }
    let xb = open(w, &x);
    let yb = open(w, &y);
    for (l, far, n) in [(&x, &xb, moved[0]), (&y, &yb, moved[1])] {
        if n > 0 {
            let b = w.bar_count(l);
            w.set_bars(l, b - n);
            w.set_bars(far, n);
        }
    }
    let xm = w.fresh_edge();
    let ym = w.fresh_edge();
    let virt = s.tag == V2;
    let lower = w.fresh_vertex(virt);
    let upper = w.fresh_vertex(virt);
    // Rings indexed east, north, west, south.
    const E: usize = 0;
    const N: usize = 1;
    const W: usize = 2;
    const S: usize = 3;
    let empty = || -> [(String, Dir); 4] { std::array::from_fn(|_| (String::new(), Dir::In)) };
    let (mut lo, mut up) = (empty(), empty());
    let x_up = sx == Side::Right;
    let y_up = sy == Side::Left;
    {
        let (c1, c2) = if x_up { (&mut lo, &mut up) } else { (&mut up, &mut lo) };
        c1[W] = (x.clone(), Dir::In);
        c1[E] = (xm.clone(), Dir::Out);
        c2[E] = (xm.clone(), Dir::In);
        c2[W] = (xb, Dir::Out);
    }
    {
        let (first, second) = if y_up { (&mut lo, &mut up) } else { (&mut up, &mut lo) };
        let (inp, outp) = if y_up { (S, N) } else { (N, S) };
        first[inp] = (y.clone(), Dir::In);
        first[outp] = (ym.clone(), Dir::Out);
        second[inp] = (ym.clone(), Dir::In);
        second[outp] = (yb, Dir::Out);
    }
    // Over strand of x sits east-west.
    let under = if over_x { [false, true, false, true] } else { [true, false, true, false] };
    for (id, ring) in [(lower, lo), (upper, up)] {
        w.verts.push(if virt { Vertex::virtual_(id, ring) } else { Vertex::classical(id, ring, under) });
    }
    Ok(())
}

fn bigon_reduce(d: &PlanarDiagram, w: &mut Work, s: &MoveSite) -> Result<()> {
    let (p, q) = (s.pos(0)?, s.pos(1)?);
    let map = PlanarMap::new(d);
    let face = face_with(&map, &[(p, None), (q, None)]).ok_or_else(|| stale(format!("no bigon in {s}")))?;
    if bigon_kind(&map, &face) != Some(s.tag) {
        return Err(stale(format!("bigon does not match {s}")));
    }
    let ids: Vec<String> = face.iter().map(|st| map.ids[st.corner.0].clone()).collect();
    for id in ids {
        let vi = w.vertex(&id).expect("bigon vertex");
        w.remove_vertex(vi);
    }
    Ok(())
}

fn triangle(d: &PlanarDiagram, w: &mut Work, s: &MoveSite) -> Result<()> {
    let labels = [s.pos(0)?, s.pos(1)?, s.pos(2)?];
    let map = PlanarMap::new(d);
    let face = face_with(&map, &labels.map(|l| (l, None))).ok_or_else(|| stale(format!("no triangle in {s}")))?;
    if triangle_kind(&map, &face) != Some(s.tag) {
        return Err(stale(format!("triangle does not match {s}")));
    }
    let mut writes = Vec::new();
    for l in labels {
        let (p, i) = w.end(l, Dir::Out).expect("side tail");
        let (q, j) = w.end(l, Dir::In).expect("side head");
        let a = w.verts[p].slots[(i + 2) % 4].0.clone();
        let b = w.verts[q].slots[(j + 2) % 4].0.clone();
        if labels.contains(&a.as_str()) || labels.contains(&b.as_str()) {
            return Err(stale(format!("strand runs along two sides in {s}")));
        }
        writes.push((p, (i + 2) % 4, l.to_string(), Dir::In));
        writes.push((p, i, b, Dir::Out));
        writes.push((q, j, a, Dir::In));
        writes.push((q, (j + 2) % 4, l.to_string(), Dir::Out));
    }
    for (v, k, label, dir) in writes {
        w.verts[v].slots[k] = (label, dir);
    }
    Ok(())
}

fn bar_slide(w: &mut Work, s: &MoveSite, forward: bool) -> Result<()> {
    let a = s.pos(0)?;
    let vi = w.vertex(s.pos(1)?).ok_or_else(|| stale("no such vertex"))?;
    let end = if forward { w.end(a, Dir::In) } else { w.end(a, Dir::Out) };
    let (v, k) = end.ok_or_else(|| stale(format!("no arc '{a}'")))?;
    if v != vi || !w.verts[vi].virt {
        return Err(stale(format!("'{a}' does not meet a virtual crossing in {s}")));
    }
    let b = w.verts[vi].slots[(k + 2) % 4].0.clone();
    let n = w.bar_count(a);
    if b == a || n == 0 {
        return Err(stale(format!("no bar to slide in {s}")));
    }
    let m = w.bar_count(&b);
    w.set_bars(a, n - 1);
    w.set_bars(&b, m + 1);
    Ok(())
}

fn t3_expand(w: &mut Work, s: &MoveSite) -> Result<()> {
    let ci = w.vertex(s.pos(0)?).ok_or_else(|| stale("no such crossing"))?;
    let k = s.num("k")? as usize;
    if w.verts[ci].virt || k > 1 {
        return Err(stale(format!("bad T3 site {s}")));
    }
    let ext = w.verts[ci].slots.clone();
    let inner: Vec<String> = (0..4).map(|_| w.fresh_edge()).collect();
    let at = |j: usize| (j + k) % 4;
    let mut ring: [(String, Dir); 4] = std::array::from_fn(|_| (String::new(), Dir::In));
    for (p, q) in [(0, 1), (1, 0), (2, 3), (3, 2)] {
        // Position at(p) receives the continuation of end at(q).
        ring[at(p)] = (inner[at(q)].clone(), ext[at(q)].1);
    }
    let id = w.verts[ci].id.clone();
    w.verts[ci] = Vertex::classical(id, ring, [true, false, true, false]);
    for half in [0, 2] {
        let (j0, j1) = (at(half), at(half + 1));
        let ring = [
            ext[j0].clone(),
            ext[j1].clone(),
            (inner[j0].clone(), flip(ext[j0].1)),
            (inner[j1].clone(), flip(ext[j1].1)),
        ];
        let vid = w.fresh_vertex(true);
        w.verts.push(Vertex::virtual_(vid, ring));
    }
    for (e, _) in &ext {
        let n = w.bar_count(e);
        w.set_bars(e, n + 1);
    }
    Ok(())
}

fn t3_reduce(w: &mut Work, s: &MoveSite) -> Result<()> {
    let ci = w.vertex(s.pos(0)?).ok_or_else(|| stale("no such crossing"))?;
    let k = s.num("k")? as usize;
    if w.verts[ci].virt || k > 1 {
        return Err(stale(format!("bad T3 site {s}")));
    }
    let at = |j: usize| (j + k) % 4;
    let mid = w.verts[ci].slots.clone();
    let inner: BTreeSet<&str> = mid.iter().map(|m| m.0.as_str()).collect();
    if inner.len() != 4 || inner.iter().any(|m| w.bar_count(m) != 0) {
        return Err(stale(format!("no T3 pattern at {s}")));
    }
    let mut ext: Vec<(String, Dir)> = vec![(String::new(), Dir::In); 4];
    let mut flank = Vec::new();
    for half in [0, 2] {
        let (j0, j1) = (at(half), at(half + 1));
        // The arc at position j1 continues the outer end j0, and vice versa.
        let far = |label: &str, dir: Dir| w.end(label, flip(dir));
        let (v, r) = far(&mid[j1].0, mid[j1].1).ok_or_else(|| stale("dangling arc"))?;
        let (v2, r2) = far(&mid[j0].0, mid[j0].1).ok_or_else(|| stale("dangling arc"))?;
        if v == ci || v2 != v || !w.verts[v].virt || r2 != (r + 1) % 4 {
            return Err(stale(format!("no T3 pattern at {s}")));
        }
        let o0 = w.verts[v].slots[(r + 2) % 4].clone();
        let o1 = w.verts[v].slots[(r + 3) % 4].clone();
        if inner.contains(o0.0.as_str()) || inner.contains(o1.0.as_str()) {
            return Err(stale(format!("no T3 pattern at {s}")));
        }
        ext[j0] = o0;
        ext[j1] = o1;
        flank.push(w.verts[v].id.clone());
    }
    if flank[0] == flank[1] {
        return Err(stale(format!("no T3 pattern at {s}")));
    }
    // Each outer end carries the bar that the expansion put there.
    let mut need: BTreeMap<&str, u32> = BTreeMap::new();
    for (e, _) in &ext {
        *need.entry(e.as_str()).or_default() += 1;
    }
    if need.iter().any(|(e, &n)| w.bar_count(e) < n) {
        return Err(stale(format!("no T3 pattern at {s}")));
    }
    let id = w.verts[ci].id.clone();
    let ring: [(String, Dir); 4] = std::array::from_fn(|j| ext[j].clone());
    w.verts[ci] = Vertex::classical(id, ring, [true, false, true, false]);
    for vid in &flank {
        let vi = w.vertex(vid).expect("flank vertex");
        w.verts.remove(vi);
    }
    for (e, _) in &ext {
        let n = w.bar_count(e);
        w.set_bars(e, n - 1);
    }
    for m in inner {
        w.set_bars(m, 0);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::twisted_jones;
    use crate::diagram::{parse_tld, validate};
    use crate::group::{fingerprint, twisted_group};
    use crate::moves::planar_code;

    const TREFOIL: &str = "X 1 -e1 +e5 +e2 -e4\nX 2 -e3 +e1 +e4 -e6\nX 3 -e5 +e3 +e6 -e2\n";
    const ONEFOIL: &str = "X 1 -b +b +a -a\nB a 1\nB b 1\n";

    fn check_all(text: &str) {
        let d = parse_tld(text).unwrap();
        let a = d.project().unwrap();
        let v = twisted_jones(&a).unwrap();
        let g = fingerprint(&twisted_group(&a)).unwrap();
        let code = planar_code(&d);
        for s in find_all(&d) {
            let r = apply(&d, &s).unwrap_or_else(|e| panic!("{s}: {e}"));
            let rep = validate(&r);
            assert!(rep.valid, "{s} gave invalid diagram: {:?}\n{}", rep.violations, crate::diagram::serialize_tld(&r));
            let ra = r.project().unwrap();
            assert_eq!(twisted_jones(&ra).unwrap(), v, "{s}");
            assert_eq!(fingerprint(&twisted_group(&ra)).unwrap(), g, "{s}");
            // Some site of the result undoes the move.
            let back = find_all(&r).into_iter().any(|t| {
                t.tag == s.tag && apply(&r, &t).map(|x| planar_code(&x) == code).unwrap_or(false)
            });
            assert!(back, "{s} has no inverse site");
        }
    }

    #[test]
    fn every_site_on_small_diagrams() {
        check_all("O a\n");
        check_all("O a\nB a 1\n");
        check_all(ONEFOIL);
        check_all(TREFOIL);
    }

    #[test]
    fn second_generation_sites() {
        let d = parse_tld(TREFOIL).unwrap();
        for s in find_all(&d).into_iter().filter(|s| s.direction == Expand).step_by(7) {
            check_all(&crate::diagram::serialize_tld(&apply(&d, &s).unwrap()));
        }
    }

    #[test]
    fn stale_sites_are_rejected() {
        let d = parse_tld(TREFOIL).unwrap();
        for line in ["R1 reduce 1 e1", "R2 reduce e1 e2", "T2 reduce e1", "T3 reduce 1 k=0", "R1 expand zz v=0"] {
            let s: MoveSite = line.parse().unwrap();
            assert!(matches!(apply(&d, &s), Err(Error::StaleSite(_))), "{line}");
        }
    }
}
