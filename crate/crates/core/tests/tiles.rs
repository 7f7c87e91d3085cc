use std::collections::BTreeMap;

use clustermatch::matchenum::{matching_polynomial, perfect_matchings};
use clustermatch::rootsys::roots_of;
use clustermatch::tilegraphs::{
    enumerate_family, graph_for_root, realize, tile_set, to_dot, MatchingGraph, Shape, TileGraph,
};
use clustermatch::{Error, Kind, LaurentPolynomial as L, RootVector, TypeSpec};

fn spec(kind: Kind, rank: usize) -> TypeSpec {
    TypeSpec::new(kind, rank).unwrap()
}

fn p(s: &str, n: usize) -> L {
    L::parse(s, n).unwrap()
}

fn supported() -> Vec<TypeSpec> {
    let mut v: Vec<TypeSpec> = (2..=6).map(|n| spec(Kind::A, n)).collect();
    v.extend((2..=4).flat_map(|n| [spec(Kind::B, n), spec(Kind::C, n)]));
    v.extend((4..=5).map(|n| spec(Kind::D, n)));
    v.push(spec(Kind::G2, 2));
    v
}

#[test]
fn tile_weights() {
    let a5 = tile_set(spec(Kind::A, 5));
    assert_eq!(a5.len(), 5);
    let t1 = &a5[0];
    assert_eq!(t1.shape, Shape::Square);
    assert_eq!(
        t1.boundary,
        vec![p("x2", 5), p("1", 5), p("1", 5), p("1", 5)]
    );
    let t3 = &a5[2];
    assert_eq!(
        t3.boundary,
        vec![p("x4", 5), p("1", 5), p("x2", 5), p("1", 5)]
    );

    let c3 = tile_set(spec(Kind::C, 3));
    assert_eq!(c3[0].boundary[0], p("x2", 3));
    assert_eq!(c3[0].boundary[2], p("x2", 3));

    let b4 = tile_set(spec(Kind::B, 4));
    let hex = b4.iter().find(|t| t.name == "T2").unwrap();
    assert_eq!(hex.shape, Shape::Hexagon);
    let want: Vec<L> = ["1", "x1", "1", "x1", "1", "x3"]
        .iter()
        .map(|s| p(s, 4))
        .collect();
    assert_eq!(hex.boundary, want);
    let trap = b4.iter().find(|t| t.name == "T1").unwrap();
    assert_eq!(trap.shape, Shape::Trapezoid);
    assert_eq!(trap.boundary.iter().filter(|w| !w.is_one()).count(), 1);

    let d5 = tile_set(spec(Kind::D, 5));
    let hex = d5.iter().find(|t| t.shape == Shape::Hexagon).unwrap();
    let want: Vec<L> = ["1", "x1", "1", "x2", "1", "x4"]
        .iter()
        .map(|s| p(s, 5))
        .collect();
    assert_eq!(hex.boundary, want);

    let g2 = tile_set(spec(Kind::G2, 2));
    let hex = g2.iter().find(|t| t.shape == Shape::Hexagon).unwrap();
    assert_eq!(hex.boundary.iter().filter(|w| **w == p("x1", 2)).count(), 3);
}

#[test]
fn family_sizes() {
    assert_eq!(enumerate_family(spec(Kind::A, 5)).len(), 15);
    let c3 = enumerate_family(spec(Kind::C, 3));
    assert_eq!(c3.len(), 9);
    assert_eq!(c3.iter().filter(|g| g.mu.iter().any(|&m| m > 1)).count(), 3);
    assert_eq!(enumerate_family(spec(Kind::G2, 2)).len(), 6);
    for n in 2..=5 {
        assert_eq!(enumerate_family(spec(Kind::B, n)).len(), n * n);
    }
    for n in 4..=6 {
        assert_eq!(enumerate_family(spec(Kind::D, n)).len(), n * (n - 1));
    }
}

#[test]
fn multiplicities_are_the_roots() {
    for s in supported() {
        let fam = enumerate_family(s);
        let mus: Vec<RootVector> = fam.iter().map(|g| g.root()).collect();
        let mut sorted = mus.clone();
        sorted.sort();
        assert_eq!(mus, sorted, "{s} family is not sorted");
        assert_eq!(mus, roots_of(s).unwrap(), "{s}");
    }
}

#[test]
fn lookup_by_root() {
    let g = graph_for_root(spec(Kind::A, 5), &RootVector(vec![0, 1, 1, 1, 0])).unwrap();
    assert_eq!(g.describe(), "T2 T3 T4");
    let g = graph_for_root(spec(Kind::A, 3), &RootVector(vec![1, 0, 0])).unwrap();
    assert_eq!(g.describe(), "T1");

    let g = graph_for_root(spec(Kind::C, 3), &RootVector(vec![1, 2, 1])).unwrap();
    let mut names: Vec<&str> = g.tiles.iter().map(|t| t.name.as_str()).collect();
    names.sort();
    assert_eq!(names, vec!["T1", "T2", "T2", "T3"]);

    let err = graph_for_root(spec(Kind::A, 3), &RootVector(vec![1, 0, 1])).unwrap_err();
    assert!(matches!(err, Error::Bijection(_)));
}

fn degrees(g: &MatchingGraph) -> Vec<usize> {
    let mut d = vec![0; g.num_vertices()];
    for e in &g.edges {
        d[e.u] += 1;
        d[e.v] += 1;
    }
    d
}

#[test]
fn single_tiles_realize_as_cycles() {
    let a4 = spec(Kind::A, 4);
    let g = realize(&graph_for_root(a4, &RootVector(vec![0, 1, 0, 0])).unwrap()).unwrap();
    assert_eq!((g.num_vertices(), g.edges.len()), (4, 4));
    assert!(degrees(&g).iter().all(|&d| d == 2));
    assert_eq!(matching_polynomial(&g), p("x1*x3 + 1", 4));
    assert_eq!(perfect_matchings(&g).len(), 2);

    let b3 = spec(Kind::B, 3);
    let hex = realize(&graph_for_root(b3, &RootVector(vec![0, 1, 0])).unwrap()).unwrap();
    assert_eq!((hex.num_vertices(), hex.edges.len()), (6, 6));
    assert!(degrees(&hex).iter().all(|&d| d == 2));
    let weights: Vec<L> = perfect_matchings(&hex)
        .iter()
        .map(|m| m.weight(&hex))
        .collect();
    assert_eq!(weights.len(), 2);
    assert!(weights.contains(&L::one(3)));
    assert!(weights.contains(&p("x1^2*x3", 3)));

    let trap = realize(&graph_for_root(b3, &RootVector(vec![1, 0, 0])).unwrap()).unwrap();
    assert_eq!((trap.num_vertices(), trap.edges.len()), (4, 4));
}

#[test]
fn intervals_realize_as_ladders() {
    for n in 2..=6 {
        let s = spec(Kind::A, n);
        for g in enumerate_family(s) {
            let k = g.tiles.len();
            let m = realize(&g).unwrap();
            assert_eq!(m.num_vertices(), 2 * (k + 1));
            assert_eq!(m.edges.len(), 3 * k + 1);
        }
    }
    let grid =
        realize(&graph_for_root(spec(Kind::A, 3), &RootVector(vec![1, 1, 1])).unwrap()).unwrap();
    assert_eq!((grid.num_vertices(), grid.edges.len()), (8, 10));
}

#[test]
fn finite_type_edge_weights_are_unit_or_a_variable() {
    for s in supported() {
        for g in enumerate_family(s) {
            let m = realize(&g).unwrap();
            for e in &m.edges {
                let (exp, c) = e.weight.leading_term().unwrap();
                assert!(e.weight.is_monomial() && *c == 1.into(), "{s} {}", e.weight);
                assert!(exp.as_slice().iter().all(|&x| x == 0 || x == 1));
                assert!(exp.as_slice().iter().sum::<i32>() <= 1);
            }
        }
    }
}

#[test]
fn gluings_are_recorded_structurally() {
    for s in [spec(Kind::B, 4), spec(Kind::D, 5), spec(Kind::G2, 2)] {
        let fam = enumerate_family(s);
        let exceptions = fam
            .iter()
            .filter(|g| g.gluings.iter().any(|x| x.exception))
            .count();
        assert!(exceptions > 0, "{s}");
        for g in &fam {
            for x in &g.gluings {
                assert!(x.a < g.tiles.len() && x.b < g.tiles.len());
            }
        }
    }
    // One extra arc per two-hexagon graph.
    let b4 = enumerate_family(spec(Kind::B, 4));
    for g in &b4 {
        let hexes = g.tiles.iter().filter(|t| t.shape == Shape::Hexagon).count();
        assert_eq!(g.arcs.len(), (hexes == 2) as usize, "{}", g.describe());
    }
    assert_eq!(b4.iter().filter(|g| g.arcs.len() == 1).count(), 3);
}

#[test]
fn dot_output() {
    let sq = realize(&graph_for_root(spec(Kind::A, 2), &RootVector(vec![1, 0])).unwrap()).unwrap();
    let dot = to_dot(&sq);
    assert!(dot.starts_with("graph G {\n") && dot.ends_with("}\n"));
    assert_eq!(dot.matches("[label=").count(), 8);
    assert_eq!(dot.matches(" -- ").count(), 4);

    assert_eq!(to_dot(&MatchingGraph::new(2)), "graph G {\n}\n");

    let grid =
        realize(&graph_for_root(spec(Kind::A, 3), &RootVector(vec![1, 1, 1])).unwrap()).unwrap();
    let dot = to_dot(&grid);
    assert_eq!(
        dot.lines()
            .filter(|l| l.contains(" [label=") && !l.contains("--"))
            .count(),
        8
    );
    assert_eq!(dot.matches(" -- ").count(), 10);
    assert_eq!(dot.matches("[label=\"x2\"]").count(), 2);
}

#[test]
fn json_shape() {
    let g = graph_for_root(spec(Kind::B, 3), &RootVector(vec![1, 1, 0])).unwrap();
    let v = serde_json::to_value(&g).unwrap();
    assert_eq!(v["mu"], serde_json::json!([1, 1, 0]));
    assert_eq!(v["tiles"].as_array().unwrap().len(), 2);
    assert!(v.get("nvars").is_none());
    assert_eq!(v["tiles"][0]["boundary"][1], "x1");
}

#[test]
fn hand_built_strip() {
    let s = spec(Kind::A, 4);
    let tiles = tile_set(s);
    let g = TileGraph::strip(tiles[1..3].to_vec(), 4, 4);
    assert_eq!(g.mu, vec![0, 1, 1, 0]);
    let m = realize(&g).unwrap();
    let by_weight: BTreeMap<String, usize> = m.edges.iter().fold(BTreeMap::new(), |mut acc, e| {
        *acc.entry(e.weight.to_string()).or_default() += 1;
        acc
    });
    // T2: x3 north, x1 south. T3: x4 north, x2 south.
    assert_eq!(by_weight["x1"], 1);
    assert_eq!(by_weight["x2"], 1);
    assert_eq!(by_weight["x3"], 1);
    assert_eq!(by_weight["x4"], 1);
    assert_eq!(by_weight["1"], 3);
}
