//! Built-in diagrams.

pub mod tait;

use serde::Deserialize;

use crate::diagram::{load, validate, Crossing, DiagramCandidate, Side, SymmetricDiagram};
use crate::Error;
use tait::{torus_graph, TaitGraph};

const DATA_7_4B_PLUS: &str = include_str!("../../data/7_4b_plus.json");
const DATA_7_4B_MINUS: &str = include_str!("../../data/7_4b_minus.json");
const DATA_7_4B_MINUS_REGIONS: &str = include_str!("../../data/7_4b_minus.regions.json");

/// Which direction of the strongly invertible knot `7_4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Plus,
    Minus,
}

pub struct CatalogEntry {
    pub key: &'static str,
    pub description: &'static str,
    /// Whether the builder reads `--n`.
    pub takes_n: bool,
    /// Known value of the equivariant signature, given the parameter.
    pub expected_sigma_tilde: fn(usize) -> i64,
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        key: "unknot",
        description: "one-crossing unknot with its kink on the axis",
        takes_n: false,
        expected_sigma_tilde: |_| 0,
    },
    CatalogEntry {
        key: "torus",
        description: "alternating torus knot T(2,2n+1), one crossing on the axis",
        takes_n: true,
        expected_sigma_tilde: |n| -2 * n as i64,
    },
    CatalogEntry {
        key: "7_4b_plus",
        description: "7_4 with direction b+, alternating",
        takes_n: false,
        expected_sigma_tilde: |_| -6,
    },
    CatalogEntry {
        key: "7_4b_minus",
        description: "7_4 with direction b-",
        takes_n: false,
        expected_sigma_tilde: |_| -10,
    },
    CatalogEntry {
        key: "trefoil_kinks",
        description: "T(2,3) with a symmetric pair of off-axis kinks",
        takes_n: false,
        expected_sigma_tilde: |_| -2,
    },
    CatalogEntry {
        key: "trefoil_r2",
        description: "T(2,3) with a Reidemeister II pair on the axis",
        takes_n: false,
        expected_sigma_tilde: |_| -2,
    },
];

pub fn entry(key: &str) -> Result<&'static CatalogEntry, Error> {
    ENTRIES
        .iter()
        .find(|e| e.key == key)
        .ok_or_else(|| Error::UnknownCatalogKey(key.to_string()))
}

/// Builds a catalog diagram; `n` defaults to 1 where it is used.
pub fn build(key: &str, n: Option<usize>) -> Result<SymmetricDiagram, Error> {
    let e = entry(key)?;
    if n.is_some() && !e.takes_n {
        return Err(Error::CatalogParameter(format!("`{key}` takes no --n")));
    }
    match key {
        "unknot" => Ok(build_unknot_axis_kink()),
        "torus" => build_torus_2_odd(n.unwrap_or(1)),
        "7_4b_plus" => Ok(build_7_4(Direction::Plus)),
        "7_4b_minus" => Ok(build_7_4(Direction::Minus)),
        "trefoil_kinks" => Ok(build_trefoil_kinks()),
        "trefoil_r2" => Ok(build_trefoil_r2()),
        _ => unreachable!("every entry has a builder"),
    }
}

pub fn build_unknot_axis_kink() -> SymmetricDiagram {
    validate(DiagramCandidate {
        name: "unknot".into(),
        n: 1,
        crossings: vec![Crossing::new(1, [1, 4, 2, 3])],
        on_axis: vec![1],
        involution: vec![],
        h_side_at_start: Side::Right,
        h_side_at_end: Side::Left,
    })
    .expect("axis kink is valid")
}

/// `T(2, 2n+1)` with `2n+1` crossings, the middle one on the axis.
pub fn build_torus_2_odd(n: usize) -> Result<SymmetricDiagram, Error> {
    if n < 1 {
        return Err(Error::CatalogParameter(format!("torus needs n >= 1, got {n}")));
    }
    Ok(torus_graph(n, -1)
        .to_diagram(&format!("T(2,{})", 2 * n + 1), 0)?
        .diagram)
}

pub fn build_7_4(direction: Direction) -> SymmetricDiagram {
    let text = match direction {
        Direction::Plus => DATA_7_4B_PLUS,
        Direction::Minus => DATA_7_4B_MINUS,
    };
    load(text).expect("shipped 7_4 data is valid")
}

#[derive(Deserialize)]
struct RegionFile {
    regions: Vec<RegionLabel>,
}

/// A named region of the `7_4b-` diagram, located by one segment side.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct RegionLabel {
    pub label: String,
    pub segment: usize,
    pub side: Side,
}

/// Region names used for the printed `7_4b-` Goeritz matrix, in its row
/// order.
pub fn regions_7_4b_minus() -> Vec<RegionLabel> {
    serde_json::from_str::<RegionFile>(DATA_7_4B_MINUS_REGIONS)
        .expect("shipped region labels parse")
        .regions
}

fn trefoil_graph() -> TaitGraph {
    torus_graph(1, -1)
}

/// `T(2,3)` with an `R1` kink attached to each of the two swapped inner
/// regions.
pub fn build_trefoil_kinks() -> SymmetricDiagram {
    let mut g = trefoil_graph();
    // vertex 1 is an inner region; edge 0 joins it to the outer region
    g.add_kink_pair(1, 0, 1).expect("inner corner is off the axis");
    g.to_diagram("T(2,3) kinks", 0).expect("kinked trefoil builds").diagram
}

/// `T(2,3)` with a canceling pair of crossings stacked on the axis crossing.
pub fn build_trefoil_r2() -> SymmetricDiagram {
    let mut g = trefoil_graph();
    let axis = (0..g.edges.len())
        .find(|&e| g.edge_image[e] == e)
        .expect("trefoil has an axis edge");
    g.add_parallel_pair(axis, [1, -1]).expect("axis edge");
    g.to_diagram("T(2,3) R2", 0).expect("R2 trefoil builds").diagram
}

/// Tait graph of `7_4b+`: two swapped triple edges to the outer region
/// and one axis edge between the inner regions.
pub fn tait_7_4b_plus() -> TaitGraph {
    let mut g = TaitGraph::new(vec![0, 2, 1], 0);
    for e in 0..7 {
        let (tail, head) = match e {
            0..=2 => (0, 1),
            3..=5 => (0, 2),
            _ => (1, 2),
        };
        g.edges.push(tait::TaitEdge { tail, head, eta: -1 });
    }
    g.edge_image = vec![3, 4, 5, 0, 1, 2, 6];
    g.rotation = vec![vec![5, 4, 3, 0, 1, 2], vec![2, 1, 0, 6], vec![6, 3, 4, 5]];
    g
}

/// Tait graph of `7_4b-`: two swapped 5-cycles `r a b c d` and
/// `r a' b' c' d'` through the outer region, joined by the axis edge `d d'`.
pub fn tait_7_4b_minus() -> TaitGraph {
    // r = 0, a..d = 1..4, a'..d' = 5..8
    let mut g = TaitGraph::new(vec![0, 5, 6, 7, 8, 1, 2, 3, 4], 0);
    let ends = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 0),
        (0, 5),
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 0),
    ];
    for (tail, head) in ends {
        g.edges.push(tait::TaitEdge { tail, head, eta: 1 });
    }
    g.edges.push(tait::TaitEdge { tail: 4, head: 8, eta: -1 });
    g.edge_image = vec![5, 6, 7, 8, 9, 0, 1, 2, 3, 4, 10];
    g.rotation = vec![
        vec![5, 9, 4, 0],
        vec![0, 1],
        vec![1, 2],
        vec![2, 3],
        vec![3, 4, 10],
        vec![5, 6],
        vec![6, 7],
        vec![7, 8],
        vec![10, 9, 8],
    ];
    g
}
