//! Tiles, tile graphs and their realization as weighted graphs.
//!
//! A tile is a cycle whose boundary edges are listed clockwise. Edge `i`
//! runs from corner `i` to corner `i + 1`, so on a square the corners are
//! NW, NE, SE, SW and on a hexagon TL, TR, R, BR, BL, L. Gluing two tiles
//! identifies an edge of one with an edge of the other traversed in the
//! opposite direction. Realization is the only place where this structure
//! becomes a concrete vertex/edge graph.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::rootsys::{roots_of, Kind, RootVector, TypeSpec};

/// Edge positions on a square or trapezoid.
pub mod sq {
    pub const N: usize = 0;
    pub const E: usize = 1;
    pub const S: usize = 2;
    pub const W: usize = 3;
}

/// Edge and corner positions on a hexagon.
pub mod hex {
    pub const TOP: usize = 0;
    pub const NE: usize = 1;
    pub const SE: usize = 2;
    pub const BOTTOM: usize = 3;
    pub const SW: usize = 4;
    pub const NW: usize = 5;
    /// Corner between the top and NE edges.
    pub const TR: usize = 1;
    /// Corner between the NE and SE edges.
    pub const R: usize = 2;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Square,
    Hexagon,
    Trapezoid,
}

impl Shape {
    fn corner_names(self) -> &'static [&'static str] {
        match self {
            Shape::Hexagon => &["TL", "TR", "R", "BR", "BL", "L"],
            _ => &["NW", "NE", "SE", "SW"],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tile {
    pub name: String,
    /// Root coordinate this tile counts toward, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slot: Option<usize>,
    pub shape: Shape,
    /// Clockwise edge weights, each a single signed monomial.
    pub boundary: Vec<LaurentPolynomial>,
    #[serde(skip_serializing_if = "is_zero")]
    pub rotation: u16,
}

fn is_zero(x: &u16) -> bool {
    *x == 0
}

impl Tile {
    pub fn new(
        name: impl Into<String>,
        slot: Option<usize>,
        shape: Shape,
        boundary: Vec<LaurentPolynomial>,
    ) -> Self {
        let expected = if shape == Shape::Hexagon { 6 } else { 4 };
        assert_eq!(boundary.len(), expected, "{shape:?} needs {expected} edges");
        Tile {
            name: name.into(),
            slot,
            shape,
            boundary,
            rotation: 0,
        }
    }

    /// The same tile turned by 180 degrees.
    pub fn rotated_half(&self) -> Self {
        let mut t = self.clone();
        let k = t.boundary.len() / 2;
        t.boundary.rotate_left(k);
        t.rotation = (t.rotation + 180) % 360;
        t
    }
}

/// Identification of edge `a_edge` of tile `a` with edge `b_edge` of tile `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gluing {
    pub a: usize,
    pub a_edge: usize,
    pub b: usize,
    pub b_edge: usize,
    /// Marks the gluings that are allowed only as exceptions to the
    /// clockwise rule (a trapezoid on the eastern side of a hexagon, or on
    /// its top).
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub exception: bool,
}

/// A unit-weight edge between two tile corners.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub a: usize,
    pub a_corner: usize,
    pub b: usize,
    pub b_corner: usize,
}

/// Tiles with their gluing structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TileGraph {
    #[serde(skip)]
    pub nvars: usize,
    pub tiles: Vec<Tile>,
    pub gluings: Vec<Gluing>,
    pub arcs: Vec<Arc>,
    pub mu: Vec<i32>,
}

impl TileGraph {
    pub fn new(nvars: usize, rank: usize) -> Self {
        TileGraph {
            nvars,
            tiles: vec![],
            gluings: vec![],
            arcs: vec![],
            mu: vec![0; rank],
        }
    }

    pub fn add(&mut self, tile: Tile) -> usize {
        if let Some(s) = tile.slot {
            self.mu[s] += 1;
        }
        self.tiles.push(tile);
        self.tiles.len() - 1
    }

    pub fn glue(&mut self, a: usize, a_edge: usize, b: usize, b_edge: usize) {
        self.gluings.push(Gluing {
            a,
            a_edge,
            b,
            b_edge,
            exception: false,
        });
    }

    pub fn glue_exception(&mut self, a: usize, a_edge: usize, b: usize, b_edge: usize) {
        self.gluings.push(Gluing {
            a,
            a_edge,
            b,
            b_edge,
            exception: true,
        });
    }

    pub fn arc(&mut self, a: usize, a_corner: usize, b: usize, b_corner: usize) {
        self.arcs.push(Arc {
            a,
            a_corner,
            b,
            b_corner,
        });
    }

    pub fn root(&self) -> RootVector {
        RootVector(self.mu.clone())
    }

    /// Tile names in insertion order, e.g. `T1 T2 T3`.
    pub fn describe(&self) -> String {
        self.tiles
            .iter()
            .map(|t| t.name.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Tiles glued in a row, each east edge on the next west edge.
    pub fn strip(tiles: Vec<Tile>, nvars: usize, rank: usize) -> Self {
        let mut g = TileGraph::new(nvars, rank);
        let mut prev = None;
        for t in tiles {
            let i = g.add(t);
            if let Some(p) = prev {
                g.glue(p, sq::E, i, sq::W);
            }
            prev = Some(i);
        }
        g
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingEdge {
    pub u: usize,
    pub v: usize,
    pub weight: LaurentPolynomial,
    /// Tile edge this came from, e.g. `t0.e2`, or `arc`.
    pub origin: String,
}

/// A finite graph whose edges carry signed monomial weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingGraph {
    #[serde(skip)]
    pub nvars: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<MatchingEdge>,
}

impl MatchingGraph {
    pub fn new(nvars: usize) -> Self {
        MatchingGraph {
            nvars,
            vertices: vec![],
            edges: vec![],
        }
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> usize {
        self.vertices.push(name.into());
        self.vertices.len() - 1
    }

    pub fn add_edge(
        &mut self,
        u: usize,
        v: usize,
        weight: LaurentPolynomial,
        origin: impl Into<String>,
    ) {
        assert!(u < self.vertices.len() && v < self.vertices.len());
        assert!(weight.is_monomial(), "edge weights are single terms");
        self.edges.push(MatchingEdge {
            u,
            v,
            weight,
            origin: origin.into(),
        });
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Builds the concrete graph: one cycle per tile, glued edges merged,
/// arcs added as unit edges.
pub fn realize(g: &TileGraph) -> Result<MatchingGraph> {
    let mut base = Vec::with_capacity(g.tiles.len());
    let mut total = 0;
    for t in &g.tiles {
        base.push(total);
        total += t.boundary.len();
    }
    let corner = |t: usize, c: usize| base[t] + c % g.tiles[t].boundary.len();
    let mut parent: Vec<usize> = (0..total).collect();
    let mut merged: HashSet<(usize, usize)> = HashSet::new();
    for gl in &g.gluings {
        let (ta, tb) = match (g.tiles.get(gl.a), g.tiles.get(gl.b)) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::Structural(format!(
                    "gluing refers to a missing tile: {gl:?}"
                )))
            }
        };
        if gl.a == gl.b || gl.a_edge >= ta.boundary.len() || gl.b_edge >= tb.boundary.len() {
            return Err(Error::Structural(format!("bad gluing {gl:?}")));
        }
        if ta.boundary[gl.a_edge] != tb.boundary[gl.b_edge] {
            return Err(Error::Structural(format!(
                "glued edges carry different weights {} and {}",
                ta.boundary[gl.a_edge], tb.boundary[gl.b_edge]
            )));
        }
        if merged.contains(&(gl.a, gl.a_edge)) || !merged.insert((gl.b, gl.b_edge)) {
            return Err(Error::Structural(format!("edge glued twice: {gl:?}")));
        }
        for (x, y) in [
            (corner(gl.a, gl.a_edge), corner(gl.b, gl.b_edge + 1)),
            (corner(gl.a, gl.a_edge + 1), corner(gl.b, gl.b_edge)),
        ] {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            parent[rx.max(ry)] = rx.min(ry);
        }
    }
    let mut out = MatchingGraph::new(g.nvars);
    let mut vid = vec![usize::MAX; total];
    for (t, tile) in g.tiles.iter().enumerate() {
        for c in 0..tile.boundary.len() {
            let r = find(&mut parent, corner(t, c));
            if vid[r] == usize::MAX {
                vid[r] = out.add_vertex(format!("t{t}.{}", tile.shape.corner_names()[c]));
            }
        }
    }
    let mut vertex = |t: usize, c: usize| vid[find(&mut parent, corner(t, c))];
    for (t, tile) in g.tiles.iter().enumerate() {
        for (e, w) in tile.boundary.iter().enumerate() {
            if merged.contains(&(t, e)) {
                continue;
            }
            let (u, v) = (vertex(t, e), vertex(t, e + 1));
            if u == v {
                return Err(Error::Structural(format!(
                    "edge {e} of tile {t} collapsed to a loop"
                )));
            }
            out.add_edge(u, v, w.clone(), format!("t{t}.e{e}"));
        }
    }
    for a in &g.arcs {
        if a.a >= g.tiles.len() || a.b >= g.tiles.len() {
            return Err(Error::Structural(format!(
                "arc refers to a missing tile: {a:?}"
            )));
        }
        let (u, v) = (vertex(a.a, a.a_corner), vertex(a.b, a.b_corner));
        if u == v {
            return Err(Error::Structural(format!("arc {a:?} is a loop")));
        }
        out.add_edge(u, v, LaurentPolynomial::one(g.nvars), "arc");
    }
    Ok(out)
}

/// Graphviz text with edge labels set to the weights.
pub fn to_dot(g: &MatchingGraph) -> String {
    let mut s = String::from("graph G {\n");
    for (i, name) in g.vertices.iter().enumerate() {
        let _ = writeln!(s, "  v{i} [label=\"{name}\"];");
    }
    for e in &g.edges {
        let _ = writeln!(s, "  v{} -- v{} [label=\"{}\"];", e.u, e.v, e.weight);
    }
    s.push_str("}\n");
    s
}

fn x(spec: TypeSpec, slot: usize) -> LaurentPolynomial {
    LaurentPolynomial::var(spec.rank(), slot)
}

fn one(spec: TypeSpec) -> LaurentPolynomial {
    LaurentPolynomial::one(spec.rank())
}

/// `x_k` for a label `2 <= k <= top`, else the unit weight.
fn x_label(spec: TypeSpec, k: usize, top: usize) -> LaurentPolynomial {
    if (2..=top).contains(&k) {
        x(spec, spec.slot_of(k))
    } else {
        one(spec)
    }
}

fn a_tile(spec: TypeSpec, k: usize) -> Tile {
    let n = spec.rank();
    let w = |j: usize| {
        if j >= 1 && j <= n {
            x(spec, j - 1)
        } else {
            one(spec)
        }
    };
    Tile::new(
        format!("T{k}"),
        Some(k - 1),
        Shape::Square,
        vec![w(k + 1), one(spec), w(k - 1), one(spec)],
    )
}

fn trapezoid(spec: TypeSpec, name: &str, slot: usize) -> Tile {
    let o = one(spec);
    Tile::new(
        name,
        Some(slot),
        Shape::Trapezoid,
        vec![x(spec, spec.slot_of(2)), o.clone(), o.clone(), o],
    )
}

/// Rotated square of the B/D towers: west `x_{k+1}`, east `x_{k-1}`.
fn tower_tile(spec: TypeSpec, k: usize, top: usize) -> Tile {
    let o = one(spec);
    let west = x_label(spec, k + 1, top);
    let east = x_label(spec, k - 1, top);
    Tile::new(
        format!("T{k}"),
        Some(spec.slot_of(k)),
        Shape::Square,
        vec![o.clone(), east, o, west],
    )
}

fn hexagon(spec: TypeSpec) -> Tile {
    let o = one(spec);
    let w = match spec.kind() {
        Kind::B => vec![
            o.clone(),
            x(spec, 0),
            o.clone(),
            x(spec, 0),
            o.clone(),
            x_label(spec, 3, spec.rank()),
        ],
        Kind::D => vec![
            o.clone(),
            x(spec, 0),
            o.clone(),
            x(spec, 1),
            o.clone(),
            x(spec, spec.slot_of(3)),
        ],
        _ => vec![
            o.clone(),
            x(spec, 0),
            o.clone(),
            x(spec, 0),
            o.clone(),
            x(spec, 0),
        ],
    };
    Tile::new("T2", Some(spec.slot_of(2)), Shape::Hexagon, w)
}

/// The tiles of a supported type, in label order (`T1b` after `T1`).
pub fn tile_set(spec: TypeSpec) -> Vec<Tile> {
    let n = spec.rank();
    match spec.kind() {
        Kind::A => (1..=n).map(|k| a_tile(spec, k)).collect(),
        Kind::C => {
            let mut t: Vec<Tile> = (1..=n).map(|k| a_tile(spec, k)).collect();
            let x2 = x(spec, 1);
            t[0].boundary = vec![x2.clone(), one(spec), x2, one(spec)];
            t
        }
        Kind::B => {
            let mut t = vec![trapezoid(spec, "T1", 0), hexagon(spec)];
            t.extend((3..=n).map(|k| tower_tile(spec, k, n)));
            t
        }
        Kind::D => {
            let mut t = vec![
                trapezoid(spec, "T1", 0),
                trapezoid(spec, "T1b", 1),
                hexagon(spec),
            ];
            t.extend((3..n).map(|k| tower_tile(spec, k, n - 1)));
            t
        }
        Kind::G2 => vec![trapezoid(spec, "T1", 0), hexagon(spec)],
    }
}

fn c_multiset(spec: TypeSpec, i: usize, j: usize) -> TileGraph {
    let tiles = tile_set(spec);
    let mut seq: Vec<Tile> = (2..=i).rev().map(|k| tiles[k - 1].rotated_half()).collect();
    seq.push(tiles[0].clone());
    seq.extend((2..=j).map(|k| tiles[k - 1].clone()));
    TileGraph::strip(seq, spec.rank(), spec.rank())
}

/// Shared builder for the hexagon-based families (B, D and G2).
struct HexKit {
    spec: TypeSpec,
    /// Largest tower label.
    top: usize,
    hex: Tile,
    /// Trapezoid used on a hexagon's western side.
    west: Tile,
    /// Trapezoid used at the exceptional eastern position.
    east: Tile,
}

impl HexKit {
    fn new(spec: TypeSpec) -> Self {
        let top = if spec.kind() == Kind::D {
            spec.rank() - 1
        } else {
            spec.rank()
        };
        let west = trapezoid(
            spec,
            if spec.kind() == Kind::D { "T1b" } else { "T1" },
            if spec.kind() == Kind::D { 1 } else { 0 },
        );
        HexKit {
            spec,
            top,
            hex: hexagon(spec),
            west,
            east: trapezoid(spec, "T1", 0),
        }
    }

    /// The eastern hexagon of a double graph. In D_n it carries `x1b` on
    /// its NE edge and `x1` at the bottom.
    fn second_hex(&self) -> Tile {
        let mut h = self.hex.clone();
        if self.spec.kind() == Kind::D {
            h.boundary.swap(hex::NE, hex::BOTTOM);
        }
        h
    }

    fn graph(&self) -> TileGraph {
        TileGraph::new(self.spec.rank(), self.spec.rank())
    }

    /// Stacks `T_lo..=T_hi` on edge `base` (or free-standing).
    fn tower(&self, g: &mut TileGraph, base: Option<(usize, usize)>, lo: usize, hi: usize) {
        let mut below = base;
        for k in lo..=hi {
            let t = g.add(tower_tile(self.spec, k, self.top));
            if let Some((b, e)) = below {
                g.glue(t, sq::S, b, e);
            }
            below = Some((t, sq::N));
        }
    }

    /// Tower height on a hexagon after projecting a lifted height `m`.
    fn project(&self, m: usize) -> usize {
        if m <= self.top {
            m
        } else {
            2 * self.top + 1 - m
        }
    }

    fn west_trap(&self, g: &mut TileGraph, h: usize, trap: &Tile) {
        let t = g.add(trap.clone());
        g.glue(t, sq::E, h, hex::SW);
    }

    fn east_trap(&self, g: &mut TileGraph, h: usize) -> usize {
        let t = g.add(self.east.clone());
        g.glue_exception(t, sq::W, h, hex::SE);
        t
    }

    fn top_trap(&self, g: &mut TileGraph, h: usize) {
        let t = g.add(self.east.clone());
        g.glue_exception(t, sq::E, h, hex::TOP);
    }

    /// Two hexagons joined by a trapezoid, a second trapezoid on the
    /// eastern hexagon, and one arc.
    fn double(&self, g: &mut TileGraph) -> (usize, usize) {
        let h0 = g.add(self.hex.clone());
        let mid = g.add(self.west.clone());
        g.glue_exception(mid, sq::W, h0, hex::SE);
        let h1 = g.add(self.second_hex());
        g.glue(mid, sq::E, h1, hex::SW);
        self.east_trap(g, h1);
        g.arc(h0, hex::TR, h1, hex::R);
        (h0, h1)
    }

    fn b_family(&self) -> Vec<TileGraph> {
        let top = self.top;
        let mut out = vec![];
        for a in 3..=top {
            for b in a..=top {
                let mut g = self.graph();
                self.tower(&mut g, None, a, b);
                out.push(g);
            }
        }
        let mut traps = vec![self.east.clone()];
        if self.spec.kind() == Kind::D {
            traps.push(self.west.clone());
        }
        for trap in &traps {
            let mut g = self.graph();
            g.add(trap.clone());
            out.push(g);
        }
        for b in 2..=top {
            let mut g = self.graph();
            let h = g.add(self.hex.clone());
            self.tower(&mut g, Some((h, hex::TOP)), 3, b);
            out.push(g);
            for trap in &traps {
                let mut g = self.graph();
                let h = g.add(self.hex.clone());
                self.west_trap(&mut g, h, trap);
                self.tower(&mut g, Some((h, hex::TOP)), 3, b);
                out.push(g);
            }
            let mut g = self.graph();
            let h = g.add(self.hex.clone());
            self.west_trap(&mut g, h, &self.west);
            self.east_trap(&mut g, h);
            self.tower(&mut g, Some((h, hex::TOP)), 3, b);
            out.push(g);
        }
        let odd: Vec<usize> = (3..2 * top).step_by(2).collect();
        for (i, &m1) in odd.iter().enumerate() {
            for &m2 in &odd[i + 1..] {
                let mut g = self.graph();
                let (h0, h1) = self.double(&mut g);
                self.tower(&mut g, Some((h0, hex::TOP)), 3, self.project(m1));
                self.tower(&mut g, Some((h1, hex::TOP)), 3, self.project(m2));
                out.push(g);
            }
        }
        out
    }

    fn g2_family(&self) -> Vec<TileGraph> {
        let mut out = vec![];
        let mut g = self.graph();
        g.add(self.east.clone());
        out.push(g);
        let mut g = self.graph();
        g.add(self.hex.clone());
        out.push(g);
        let mut g = self.graph();
        let h = g.add(self.hex.clone());
        self.west_trap(&mut g, h, &self.west);
        out.push(g);
        for capped in [false, true] {
            let mut g = self.graph();
            let h = g.add(self.hex.clone());
            self.west_trap(&mut g, h, &self.west);
            self.east_trap(&mut g, h);
            if capped {
                self.top_trap(&mut g, h);
            }
            out.push(g);
        }
        let mut g = self.graph();
        let (h0, _) = self.double(&mut g);
        self.top_trap(&mut g, h0);
        out.push(g);
        out
    }
}

/// Every graph of the family of a supported type, sorted by multiplicity
/// vector.
pub fn enumerate_family(spec: TypeSpec) -> Vec<TileGraph> {
    let n = spec.rank();
    let mut out = match spec.kind() {
        Kind::A | Kind::C => {
            let tiles = tile_set(spec);
            let mut v = vec![];
            for i in 1..=n {
                for j in i..=n {
                    v.push(TileGraph::strip(tiles[i - 1..j].to_vec(), n, n));
                }
            }
            if spec.kind() == Kind::C {
                for i in 2..=n {
                    for j in i..=n {
                        v.push(c_multiset(spec, i, j));
                    }
                }
            }
            v
        }
        Kind::B | Kind::D => HexKit::new(spec).b_family(),
        Kind::G2 => HexKit::new(spec).g2_family(),
    };
    out.sort_by(|a, b| a.mu.cmp(&b.mu));
    out
}

/// The family member whose multiplicity vector is `alpha`.
pub fn graph_for_root(spec: TypeSpec, alpha: &RootVector) -> Result<TileGraph> {
    let roots: BTreeSet<RootVector> = roots_of(spec)?.into_iter().collect();
    if !roots.contains(alpha) {
        return Err(Error::Bijection(format!(
            "{alpha} is not a positive root of {spec}"
        )));
    }
    enumerate_family(spec)
        .into_iter()
        .find(|g| g.mu == alpha.0)
        .ok_or_else(|| Error::Bijection(format!("no graph of {spec} has multiplicities {alpha}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(k: Kind, n: usize) -> TypeSpec {
        TypeSpec::new(k, n).unwrap()
    }

    #[test]
    fn glue_weight_mismatch_is_structural() {
        let s = spec(Kind::A, 3);
        let t = tile_set(s);
        let mut g = TileGraph::new(3, 3);
        let a = g.add(t[0].clone());
        let b = g.add(t[1].clone());
        g.glue(a, sq::N, b, sq::S);
        assert!(matches!(realize(&g), Err(Error::Structural(_))));
    }

    #[test]
    fn double_gluing_is_structural() {
        let s = spec(Kind::A, 3);
        let t = tile_set(s);
        let mut g = TileGraph::new(3, 3);
        let a = g.add(t[0].clone());
        let b = g.add(t[1].clone());
        let c = g.add(t[2].clone());
        g.glue(a, sq::E, b, sq::W);
        g.glue(c, sq::E, b, sq::W);
        assert!(realize(&g).is_err());
    }

    #[test]
    fn arcs_and_missing_tiles() {
        let mut g = TileGraph::new(2, 2);
        g.arc(0, 0, 1, 0);
        assert!(realize(&g).is_err());
    }

    #[test]
    fn rotation_is_half_turn() {
        let s = spec(Kind::C, 3);
        let t = tile_set(s)[1].rotated_half();
        assert_eq!(t.boundary[sq::N], x(s, 0));
        assert_eq!(t.boundary[sq::S], x(s, 2));
        assert_eq!(t.rotation, 180);
    }
}
