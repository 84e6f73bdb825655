//! One pendant edge: `G'` is a bridgeless cubic `G` with the edge `e = uw`
//! subdivided by `v_e` and a pendant edge hung from `v_e`.
//!
//! Cases, tried in order:
//! - `e` has a parallel twin: the digon is replaced by a single edge.
//! - `G` is 3-edge-connected: a flow with the two other edges at `w` rich
//!   fixes a frame `x, y, z`; the halves of `e` get `y+z` and `x+y+z`, the
//!   pendant edge `x`.
//! - some ladder misses `e`: the side of the ladder holding `e` is closed
//!   off and colored recursively, the rest gets a flow coloring, and the two
//!   are matched across the ladder.
//! - every ladder contains `e`: `e` is an end rail edge, an inner rail edge
//!   or a rung of a ladder, and each position has its own template.

use alloc::vec;
use alloc::vec::Vec;

use super::lemmas::flow_two_adjacent_rich;
use super::{check_shrinks, palette_from_pairs, rename, trace_tags, CaseTag, Palette, TraceStep, IDENTITY_PALETTE};
use crate::coloring::{check_normal, color_set, edge_status, EdgeColoring, EdgeStatus};
use crate::cuts::{check_ladder, find_2_edge_cuts, find_bridges, ladder_containing, two_cut_reduction, Ladder, ReductionTrace};
use crate::error::{Error, Result};
use crate::flow::{nz_z23_flow, Automorphism, Gf2, GroupFlow};
use crate::graph::{induced_subgraph, EdgeId, Mapped, PseudoGraph, VertexId};

/// A bridgeless cubic graph and the edge to subdivide.
#[derive(Clone, Copy, Debug)]
pub struct PendantBlockInput<'a> {
    pub graph: &'a PseudoGraph,
    pub e: EdgeId,
}

impl PendantBlockInput<'_> {
    /// Connected, bridgeless, cubic, loopless, and simple apart from at most
    /// one edge parallel to `e`.
    pub fn validate(&self) -> Result<()> {
        let g = self.graph;
        g.check_edge(self.e)?;
        if let Some(v) = g.vertices().find(|&v| g.deg(v) != 3) {
            return Err(Error::Degree { vertex: v, degree: g.deg(v), expected: "3" });
        }
        if g.has_loop() {
            return Err(Error::Precondition("cubic graph without loops"));
        }
        if !g.is_connected() {
            return Err(Error::Precondition("graph must be connected"));
        }
        if let Some(&b) = find_bridges(g).first() {
            return Err(Error::Bridge(b));
        }
        let (u, w) = g.ends(self.e);
        let twins = g.edges_between(u, w).len();
        let elsewhere = g.edges().any(|f| {
            let (a, b) = g.ends(f);
            !((a == u && b == w) || (a == w && b == u)) && g.edges_between(a, b).len() > 1
        });
        if twins > 2 || elsewhere {
            return Err(Error::Precondition("subdividing e must leave a simple graph"));
        }
        Ok(())
    }
}

/// `G'` with a normal coloring in which only the pendant edge is exempt.
#[derive(Clone, Debug)]
pub struct PendantColoring {
    /// `G'`: vertices of `G`, then `v_e`, then the leaf. Edges of `G` keep
    /// their ids; the id of `e` now names the half at `ends(e).0`.
    pub graph: PseudoGraph,
    pub coloring: EdgeColoring,
    pub subdivision: VertexId,
    pub leaf: VertexId,
    pub bridge: EdgeId,
    /// `(endpoint of e in G, half of e at that endpoint)`.
    pub halves: [(VertexId, EdgeId); 2],
    pub trace: Vec<TraceStep>,
}

impl PendantColoring {
    pub fn half_at(&self, v: VertexId) -> Option<EdgeId> {
        self.halves.iter().find(|h| h.0 == v).map(|h| h.1)
    }

    fn color(&self, e: EdgeId) -> u8 {
        self.coloring.color(e)
    }
}

/// `G'` built from `(g, e)`, with colors still to be filled in.
struct Prime {
    graph: PseudoGraph,
    ve: VertexId,
    leaf: VertexId,
    bridge: EdgeId,
    halves: [(VertexId, EdgeId); 2],
    colors: Vec<u8>,
}

impl Prime {
    fn new(g: &PseudoGraph, e: EdgeId) -> Result<Prime> {
        let (u, w) = g.ends(e);
        let (sub, ve, hu, hw) = g.subdivide_edge(e)?;
        let (graph, leaf, bridge) = sub.attach_pendant(ve)?;
        let colors = vec![0; graph.edge_count()];
        Ok(Prime { graph, ve, leaf, bridge, halves: [(u, hu), (w, hw)], colors })
    }

    fn half_at(&self, v: VertexId) -> EdgeId {
        self.halves.iter().find(|h| h.0 == v).expect("endpoint of e").1
    }

    fn set(&mut self, e: EdgeId, c: Gf2) {
        self.colors[e.index()] = c.0;
    }

    /// Copies a flow of a derived graph onto the edges it shares with `G`.
    fn fill_from(&mut self, mapped: &Mapped, f: &GroupFlow) {
        for pe in mapped.graph.edges() {
            if let Some(orig) = mapped.edge_origin[pe.index()] {
                self.colors[orig.index()] = f.value(pe).0;
            }
        }
    }

    fn finish(self, tag_trace: Vec<TraceStep>, stage: &'static str) -> Result<PendantColoring> {
        let mut coloring = EdgeColoring::new(7, self.colors);
        coloring.exempt.push(self.bridge);
        if let Err(err) = check_normal(&self.graph, &coloring, stage) {
            let detail = match err {
                Error::Verification { detail, .. } => detail,
                other => alloc::format!("{other}"),
            };
            return Err(Error::Verification { stage, detail: alloc::format!("{detail} [{}]", trace_tags(&tag_trace)) });
        }
        Ok(PendantColoring {
            graph: self.graph,
            coloring,
            subdivision: self.ve,
            leaf: self.leaf,
            bridge: self.bridge,
            halves: self.halves,
            trace: tag_trace,
        })
    }
}

/// A normal 7-coloring of `G'` in which every edge but the pendant one is
/// poor or rich.
pub fn color_pendant_block(input: PendantBlockInput<'_>) -> Result<PendantColoring> {
    color_pendant_traced(input, &mut Vec::new())
}

/// [`color_pendant_block`], appending its steps to `trace`.
pub(super) fn color_pendant_traced(input: PendantBlockInput<'_>, trace: &mut Vec<TraceStep>) -> Result<PendantColoring> {
    input.validate()?;
    let mut steps = Vec::new();
    let out = block(input.graph, input.e, &mut steps)?;
    trace.extend(steps);
    Ok(out)
}

fn block(g: &PseudoGraph, e: EdgeId, trace: &mut Vec<TraceStep>) -> Result<PendantColoring> {
    let (u, w) = g.ends(e);
    if g.edges_between(u, w).len() == 2 {
        return digon(g, e, trace);
    }
    let cuts = find_2_edge_cuts(g)?;
    if cuts.is_empty() {
        return three_edge_connected(g, e, trace);
    }
    let mut containing = None;
    for cut in &cuts {
        let l = ladder_containing(g, &cut.edges)?;
        check_ladder(g, &l).map_err(|what| Error::Verification {
            stage: "ladder",
            detail: alloc::format!("grown ladder violates {what}"),
        })?;
        if !l.contains(e) {
            return ladder_avoids_e(g, e, &l, trace);
        }
        containing.get_or_insert(l);
    }
    let l = containing.expect("at least one cut");
    let m = l.m();
    let at_end = |rail: &[EdgeId]| rail[0] == e || rail[m - 1] == e;
    if at_end(&l.u_rail) || at_end(&l.v_rail) {
        initial_edge(g, e, l, trace)
    } else if l.rungs.contains(&e) {
        ladder_template(g, e, l, trace, CaseTag::Vertical)
    } else {
        ladder_template(g, e, l, trace, CaseTag::Horizontal)
    }
}

/// `e` and `f` join `u` and `w`; `a = ua'` and `b = wb'` are the third
/// edges. `H = G - {u, w} + a'b'` is colored with `a'b'` subdivided by `z`,
/// and `u`, `w`, `v_e` all take the color set of `z`.
fn digon(g: &PseudoGraph, e: EdgeId, trace: &mut Vec<TraceStep>) -> Result<PendantColoring> {
    trace.push(TraceStep::new(CaseTag::Digon, g));
    let (u, w) = g.ends(e);
    let f = *g.edges_between(u, w).iter().find(|&&x| x != e).expect("digon");
    let third = |x: VertexId| *g.incident(x).iter().find(|&&h| h != e && h != f).expect("cubic");
    let (a, b) = (third(u), third(w));
    let (a_end, b_end) = (g.other_end(a, u), g.other_end(b, w));
    let keep: Vec<bool> = g.vertices().map(|x| x != u && x != w).collect();
    let mut h = induced_subgraph(g, &keep);
    let ha = h.image_of_vertex(a_end).expect("kept");
    let hb = h.image_of_vertex(b_end).expect("kept");
    let eps = add_edge(&mut h, ha, hb)?;
    check_shrinks(g, &h.graph, "digon")?;
    let sub = block(&h.graph, eps, trace)?;

    let mut p = Prime::new(g, e)?;
    pull_back_shared(&sub, &h, &mut p.colors, &IDENTITY_PALETTE);
    let ca = sub.color(sub.half_at(ha).expect("end of eps"));
    let cb = sub.color(sub.half_at(hb).expect("end of eps"));
    let pendant = sub.color(sub.bridge);
    p.colors[a.index()] = ca;
    p.colors[b.index()] = cb;
    p.colors[f.index()] = pendant;
    let (hu, hw) = (p.half_at(u), p.half_at(w));
    p.colors[hu.index()] = cb;
    p.colors[hw.index()] = ca;
    p.colors[p.bridge.index()] = pendant;
    p.finish(trace.clone(), "pendant block: digon")
}

fn add_edge(m: &mut Mapped, a: VertexId, b: VertexId) -> Result<EdgeId> {
    let id = m.graph.add_edge(a, b)?;
    m.edge_origin.push(None);
    Ok(id)
}

/// Copies `sub`'s colors (renamed by `perm`) onto the edges of `G` that the
/// sub-instance `h` inherited, skipping the subdivided edge.
fn pull_back_shared(sub: &PendantColoring, h: &Mapped, out: &mut [u8], perm: &Palette) {
    let skip = [sub.halves[0].1, sub.halves[1].1, sub.bridge];
    for he in h.graph.edges() {
        if skip.contains(&he) {
            continue;
        }
        if let Some(orig) = h.edge_origin[he.index()] {
            out[orig.index()] = rename(perm, sub.color(he));
        }
    }
}

/// The frame at `w`: with `w1`, `w2` the ends of the two edges at `w` other
/// than `third`, `w1` sees `x, y` and `w2` sees `x, z`.
fn frame_at(g: &PseudoGraph, f: &GroupFlow, w: VertexId, third: EdgeId) -> Result<(Gf2, Gf2, Gf2)> {
    let others: Vec<EdgeId> = g.incident(w).iter().copied().filter(|&h| h != third).collect();
    let [e1, e2] = others[..] else {
        return Err(Error::Precondition("cubic vertex"));
    };
    let s1 = f.others_at(g, g.other_end(e1, w), e1);
    let s2 = f.others_at(g, g.other_end(e2, w), e2);
    let common: Vec<Gf2> = s1.iter().copied().filter(|v| s2.contains(v)).collect();
    let bad = || Error::Verification {
        stage: "frame",
        detail: alloc::format!("values {s1:?} and {s2:?} near {w} do not share exactly one element"),
    };
    let [x] = common[..] else { return Err(bad()) };
    let y = *s1.iter().find(|&&v| v != x).ok_or_else(bad)?;
    let z = *s2.iter().find(|&&v| v != x).ok_or_else(bad)?;
    if f.value(third) != y + z {
        return Err(Error::Verification { stage: "frame", detail: alloc::format!("edge {third} does not carry y+z") });
    }
    Ok((x, y, z))
}

/// Colors the halves of `e = uw` and the pendant edge from the frame at `w`.
fn finish_frame(p: &mut Prime, u: VertexId, w: VertexId, (x, y, z): (Gf2, Gf2, Gf2)) {
    let (hu, hw, br) = (p.half_at(u), p.half_at(w), p.bridge);
    p.set(hu, y + z);
    p.set(hw, x + y + z);
    p.set(br, x);
}

fn three_edge_connected(g: &PseudoGraph, e: EdgeId, trace: &mut Vec<TraceStep>) -> Result<PendantColoring> {
    let (u, w) = g.ends(e);
    let others: Vec<EdgeId> = g.incident(w).iter().copied().filter(|&h| h != e).collect();
    let theta = flow_two_adjacent_rich(g, others[0], others[1])?;
    let frame = frame_at(g, &theta, w, e)?;
    let (x, y, z) = frame;
    let ts = theta.others_at(g, u, e);
    let tag = if ts.iter().any(|t| [x, y, z].contains(t)) { CaseTag::ThreeEcCase2 } else { CaseTag::ThreeEcCase1 };
    trace.push(TraceStep::new(tag, g));
    let mut p = Prime::new(g, e)?;
    for h in g.edges() {
        if h != e {
            p.set(h, theta.value(h));
        }
    }
    finish_frame(&mut p, u, w, frame);
    p.finish(trace.clone(), "pendant block: 3-edge-connected")
}

/// Side of `G - E(L)` holding `L.u[0]`, as a vertex mask.
fn start_side(g: &PseudoGraph, l: &Ladder) -> Vec<bool> {
    let mut removed = vec![false; g.edge_count()];
    for e in l.edges() {
        removed[e.index()] = true;
    }
    let (_, label) = g.component_labels(&removed);
    let c = label[l.u[0].index()];
    label.iter().map(|&x| x == c).collect()
}

fn ladder_avoids_e(g: &PseudoGraph, e: EdgeId, l: &Ladder, trace: &mut Vec<TraceStep>) -> Result<PendantColoring> {
    // orient the ladder so that e lies on the side of u0, v0
    let mut l = l.clone();
    let mut side = start_side(g, &l);
    if !side[g.ends(e).0.index()] {
        l = l.reversed();
        side = start_side(g, &l);
    }
    let (u0, v0, u1, v1) = (l.u[0], l.v[0], l.u[1], l.v[1]);

    // H = G1 + u0v0, colored recursively
    let mut h = induced_subgraph(g, &side);
    let (hu0, hv0) = (h.image_of_vertex(u0).expect("G1"), h.image_of_vertex(v0).expect("G1"));
    let closing = add_edge(&mut h, hu0, hv0)?;
    check_shrinks(g, &h.graph, "ladder avoids e")?;
    let he = h.image_of_edge(e).expect("e lies in G1");
    let step_at = trace.len();
    let sub = block(&h.graph, he, trace)?;

    // H1 = G - V(G1) + u1v1, flow colored
    let rest: Vec<bool> = side.iter().map(|&s| !s).collect();
    let mut h1 = induced_subgraph(g, &rest);
    let (ru1, rv1) = (h1.image_of_vertex(u1).expect("rest"), h1.image_of_vertex(v1).expect("rest"));
    let link = add_edge(&mut h1, ru1, rv1)?;
    let mu = nz_z23_flow(&h1.graph)?;
    let c1 = EdgeColoring::new(7, mu.values.iter().map(|v| v.0).collect());

    let x_sub = sub.color(closing);
    let x1 = c1.color(link);
    let others = |c: &EdgeColoring, gr: &PseudoGraph, v: VertexId, skip: u8| -> Result<Vec<u8>> {
        let mask = color_set(gr, c, v)?;
        Ok((1..=7u8).filter(|&k| mask >> k & 1 == 1 && k != skip).collect())
    };
    let su0 = others(&sub.coloring, &sub.graph, hu0, x_sub)?;
    let sv0 = others(&sub.coloring, &sub.graph, hv0, x_sub)?;
    let su1 = others(&c1, &h1.graph, ru1, x1)?;
    let sv1 = others(&c1, &h1.graph, rv1, x1)?;
    let mut pairs = vec![(x_sub, x1), (su0[0], su1[0]), (su0[1], su1[1])];
    let rich_sub = edge_status(&sub.graph, &sub.coloring, closing)? == EdgeStatus::Rich;
    let rich_h1 = edge_status(&h1.graph, &c1, link)? == EdgeStatus::Rich;
    if rich_sub && rich_h1 {
        // both closing edges rich: match v0 with v1 as well
        pairs.extend([(sv0[0], sv1[0]), (sv0[1], sv1[1])]);
    }
    let perm = palette_from_pairs(&pairs)?;
    trace.insert(step_at, TraceStep::renamed(CaseTag::LadderAvoidsE, g, perm));

    let mut p = Prime::new(g, e)?;
    pull_back_shared(&sub, &h, &mut p.colors, &perm);
    for (gv, hv) in [(g.ends(e).0, h.image_of_vertex(g.ends(e).0)), (g.ends(e).1, h.image_of_vertex(g.ends(e).1))] {
        let hv = hv.expect("ends of e lie in G1");
        let half = sub.half_at(hv).expect("end of e");
        let target = p.half_at(gv);
        p.colors[target.index()] = rename(&perm, sub.color(half));
    }
    p.colors[p.bridge.index()] = rename(&perm, sub.color(sub.bridge));
    for he in h1.graph.edges() {
        if let Some(orig) = h1.edge_origin[he.index()] {
            p.colors[orig.index()] = c1.color(he);
        }
    }
    p.colors[l.u_rail[0].index()] = x1;
    p.colors[l.v_rail[0].index()] = x1;
    p.finish(trace.clone(), "pendant block: ladder avoids e")
}

/// Piece of a 2-cut reduction holding the image of `v`.
fn piece_holding(trace: &ReductionTrace, v: VertexId) -> usize {
    (0..2).find(|&s| trace.pieces[s].image_of_vertex(v).is_some()).expect("every vertex is on a side")
}

fn initial_edge(g: &PseudoGraph, e: EdgeId, l: Ladder, trace: &mut Vec<TraceStep>) -> Result<PendantColoring> {
    trace.push(TraceStep::new(CaseTag::InitialEdge, g));
    // normalize to e = u_{m-1} u_m
    let mut l = l;
    if l.u_rail[0] == e || l.v_rail[0] == e {
        l = l.reversed();
    }
    if l.v_rail.last() == Some(&e) {
        l = l.swapped();
    }
    let m = l.m();
    let (u, w, vm1, vm) = (l.u[m - 1], l.u[m], l.v[m - 1], l.v[m]);
    let red = two_cut_reduction(g, &[l.u_rail[m - 1], l.v_rail[m - 1]])?;
    let s1 = piece_holding(&red, u);
    let (h1, h2) = (&red.pieces[s1], &red.pieces[1 - s1]);
    check_shrinks(g, &h1.graph, "initial edge")?;
    check_shrinks(g, &h2.graph, "initial edge")?;
    let (a1, a2) = (red.arising[s1][0].0, red.arising[1 - s1][0].0);
    let theta1 = nz_z23_flow(&h1.graph)?;
    let w2 = h2.image_of_vertex(w).expect("w in H2");
    let rich: Vec<EdgeId> = h2.graph.incident(w2).iter().copied().filter(|&x| x != a2).collect();
    let theta2 = flow_two_adjacent_rich(&h2.graph, rich[0], rich[1])?;

    // rename theta1: its closing edge and the values at v_{m-1} onto H2's
    let (pv1, pv2) = (h1.image_of_vertex(vm1).expect("H1"), h2.image_of_vertex(vm).expect("H2"));
    let o1 = theta1.others_at(&h1.graph, pv1, a1);
    let o2 = theta2.others_at(&h2.graph, pv2, a2);
    let xp = theta2.value(a2);
    let auto = Automorphism::align(&[(theta1.value(a1), xp), (o1[0], o2[0])]).ok_or(Error::Verification {
        stage: "initial edge",
        detail: alloc::string::String::from("no automorphism aligns the pieces"),
    })?;
    let theta1 = theta1.apply(&auto);
    let frame = frame_at(&h2.graph, &theta2, w2, a2)?;
    if let Some(last) = trace.last_mut() {
        last.permutation = auto.as_permutation();
    }

    let mut p = Prime::new(g, e)?;
    p.fill_from(h1, &theta1);
    p.fill_from(h2, &theta2);
    p.set(l.v_rail[m - 1], xp);
    finish_frame(&mut p, u, w, frame);
    p.finish(trace.clone(), "pendant block: initial edge")
}

/// Values on the edges at `w` and at the far ends of its edges other than
/// `closing`.
fn values_near(g: &PseudoGraph, f: &GroupFlow, w: VertexId, closing: EdgeId) -> Vec<Gf2> {
    let mut out = f.values_at(g, w);
    for &h in g.incident(w) {
        if h != closing {
            out.extend(f.values_at(g, g.other_end(h, w)));
        }
    }
    out
}

/// Rail and rung colors of the Horizontal and Vertical templates, as
/// functions of position. Left of `e` the rails alternate `x`/`y` with rungs
/// `x+y`; right of `e` they alternate `x`/`z` with rungs `x+z`.
struct Template {
    u_rail: Vec<Gf2>,
    v_rail: Vec<Gf2>,
    /// `rungs[r - 1]` for rung `u_r v_r`; `None` at `e`.
    rungs: Vec<Option<Gf2>>,
    /// Colors of the halves at the `u`-side and `v`-side (or left/right)
    /// endpoint of `e`, then the pendant color.
    halves: [(VertexId, Gf2); 2],
    pendant: Gf2,
}

/// Position of `e`: the index `i` with `e = u_{i-1} u_i` (horizontal) or
/// `e = u_i v_i` (vertical); the ladder is swapped so `e` is never on the
/// `v` rail.
fn template(l: &Ladder, e: EdgeId, tag: CaseTag, x: Gf2, y: Gf2, z: Gf2) -> Template {
    let m = l.m();
    let alt = |a: Gf2, b: Gf2, k: usize| if k.is_multiple_of(2) { a } else { b };
    let mut u_rail = vec![Gf2(0); m];
    let mut v_rail = vec![Gf2(0); m];
    let mut rungs = vec![None; m - 1];
    match tag {
        CaseTag::Horizontal => {
            let i = l.u_rail.iter().position(|&h| h == e).expect("e on the u rail") + 1;
            for j in 0..m {
                if j + 2 <= i {
                    u_rail[j] = alt(x, y, i - 2 - j);
                    v_rail[j] = alt(y, x, i - 2 - j);
                } else if j >= i {
                    u_rail[j] = alt(x, z, j - i);
                    v_rail[j] = alt(z, x, j - i);
                }
            }
            v_rail[i - 1] = x;
            for r in 1..m {
                rungs[r - 1] = Some(if r < i { x + y } else { x + z });
            }
            Template { u_rail, v_rail, rungs, halves: [(l.u[i - 1], y), (l.u[i], z)], pendant: y + z }
        }
        _ => {
            let i = l.rungs.iter().position(|&h| h == e).expect("e is a rung") + 1;
            for j in 0..m {
                if j < i {
                    u_rail[j] = alt(y, x, i - 1 - j);
                    v_rail[j] = alt(x, y, i - 1 - j);
                } else {
                    u_rail[j] = alt(x, z, j - i);
                    v_rail[j] = alt(z, x, j - i);
                }
            }
            for r in 1..m {
                if r != i {
                    rungs[r - 1] = Some(if r < i { x + y } else { x + z });
                }
            }
            Template { u_rail, v_rail, rungs, halves: [(l.u[i], x + y), (l.v[i], x + z)], pendant: y + z }
        }
    }
}

fn ladder_template(g: &PseudoGraph, e: EdgeId, l: Ladder, trace: &mut Vec<TraceStep>, tag: CaseTag) -> Result<PendantColoring> {
    let l = if l.v_rail.contains(&e) { l.swapped() } else { l };
    let m = l.m();
    let stage = if tag == CaseTag::Vertical { "pendant block: vertical" } else { "pendant block: horizontal" };
    let near = |red: &ReductionTrace, v: VertexId| piece_holding(red, v);
    let red1 = two_cut_reduction(g, &[l.u_rail[0], l.v_rail[0]])?;
    let red2 = two_cut_reduction(g, &[l.u_rail[m - 1], l.v_rail[m - 1]])?;
    let (s1, s2) = (near(&red1, l.u[0]), near(&red2, l.u[m]));
    let (h1, h2) = (&red1.pieces[s1], &red2.pieces[s2]);
    check_shrinks(g, &h1.graph, stage)?;
    check_shrinks(g, &h2.graph, stage)?;
    let (c1, c2) = (red1.arising[s1][0].0, red2.arising[s2][0].0);

    // which end vertex carries the y (resp. z) rail edge depends only on
    // parity, so probe the template with independent placeholders
    let (px, py, pz) = (Gf2(1), Gf2(2), Gf2(4));
    let probe = template(&l, e, tag, px, py, pz);
    let w1 = if probe.u_rail[0] == py { l.u[0] } else { l.v[0] };
    let w2 = if probe.u_rail[m - 1] == pz { l.u[m] } else { l.v[m] };

    let rich_pair = |h: &Mapped, c: EdgeId, v: VertexId| -> Result<GroupFlow> {
        let hv = h.image_of_vertex(v).expect("end vertex kept");
        let inc: Vec<EdgeId> = h.graph.incident(hv).iter().copied().filter(|&x| x != c).collect();
        flow_two_adjacent_rich(&h.graph, inc[0], inc[1])
    };
    let theta1 = rich_pair(h1, c1, w1)?;
    let theta2 = rich_pair(h2, c2, w2)?;
    let x = theta1.value(c1);
    let near1 = values_near(&h1.graph, &theta1, h1.image_of_vertex(w1).expect("kept"), c1);
    let near2 = values_near(&h2.graph, &theta2, h2.image_of_vertex(w2).expect("kept"), c2);
    let missing = |near: &[Gf2]| Gf2::nonzero(3).find(|v| !near.contains(v));
    let y = missing(&near1).ok_or(Error::Verification { stage, detail: "every value occurs near w'".into() })?;
    let z2 = missing(&near2).ok_or(Error::Verification { stage, detail: "every value occurs near w''".into() })?;
    // z outside span{x, y} keeps x, y, z, x+y, x+z, y+z distinct
    let span = [x, y, x + y];
    let auto = Automorphism::find(&[(theta2.value(c2), x)], |a| !span.contains(&a.apply(z2))).ok_or(
        Error::Verification { stage, detail: "no automorphism separates z from span{x, y}".into() },
    )?;
    let theta2 = theta2.apply(&auto);
    let z = auto.apply(z2);
    trace.push(TraceStep::renamed(tag, g, auto.as_permutation()));

    let t = template(&l, e, tag, x, y, z);
    let mut p = Prime::new(g, e)?;
    p.fill_from(h1, &theta1);
    p.fill_from(h2, &theta2);
    for j in 0..m {
        if l.u_rail[j] != e {
            p.set(l.u_rail[j], t.u_rail[j]);
        }
        p.set(l.v_rail[j], t.v_rail[j]);
    }
    for (r, c) in t.rungs.iter().enumerate() {
        if let Some(c) = c {
            p.set(l.rungs[r], *c);
        }
    }
    for (v, c) in t.halves {
        let h = p.half_at(v);
        p.set(h, c);
    }
    let br = p.bridge;
    p.set(br, t.pendant);
    p.finish(trace.clone(), stage)
}
