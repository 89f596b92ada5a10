//! Symmetric diagrams built from their unshaded Tait graph.
//!
//! Vertices are unshaded regions, edges are crossings, and each vertex
//! carries the counterclockwise order of its edges. The inversion acts as an
//! orientation-reversing map on vertices and edges; the outer vertex is the
//! h' region. The knot is the medial curve: around each vertex it runs
//! through the corners between consecutive edges.
//!
//! At the crossing of edge `e = (tail, head)` the four corners are numbered
//! counterclockwise `1..=4`, the tail lying between 2 and 3 and the head
//! between 4 and 1. Strands join corners 1–3 and 2–4; the 1–3 strand is the
//! over-strand exactly when the edge has Goeritz type `+1`.

use crate::diagram::{validate, Crossing, DiagramCandidate, Side, SymmetricDiagram};
use crate::faces::analyze_faces;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TaitEdge {
    pub tail: usize,
    pub head: usize,
    pub eta: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaitGraph {
    pub outer: usize,
    pub vertex_image: Vec<usize>,
    pub edges: Vec<TaitEdge>,
    pub edge_image: Vec<usize>,
    /// Counterclockwise edge order at each vertex.
    pub rotation: Vec<Vec<usize>>,
}

/// A built diagram together with one segment side inside each vertex region.
#[derive(Clone, Debug)]
pub struct TaitDiagram {
    pub diagram: SymmetricDiagram,
    pub vertex_sides: Vec<(usize, Side)>,
}

fn corner_end(q: usize) -> usize {
    // strands pass 1 <-> 3 and 2 <-> 4
    (q + 1) % 4 + 1
}

fn bad(msg: impl Into<String>) -> Error {
    Error::CatalogParameter(msg.into())
}

impl TaitGraph {
    pub fn new(vertex_image: Vec<usize>, outer: usize) -> Self {
        let count = vertex_image.len();
        TaitGraph {
            outer,
            vertex_image,
            edges: Vec::new(),
            edge_image: Vec::new(),
            rotation: vec![Vec::new(); count],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_image.len()
    }

    /// Adds a pair of vertices swapped by the inversion.
    pub fn add_vertex_pair(&mut self) -> (usize, usize) {
        let v = self.vertex_count();
        self.vertex_image.push(v + 1);
        self.vertex_image.push(v);
        self.rotation.push(Vec::new());
        self.rotation.push(Vec::new());
        (v, v + 1)
    }

    /// Adds an edge that is its own image (it crosses the axis).
    pub fn add_axis_edge(&mut self, tail: usize, head: usize, eta: i32) -> usize {
        let e = self.edges.len();
        self.edges.push(TaitEdge { tail, head, eta });
        self.edge_image.push(e);
        e
    }

    /// Adds an edge and its image; returns both ids.
    pub fn add_edge_pair(&mut self, tail: usize, head: usize, eta: i32) -> (usize, usize) {
        let e = self.edges.len();
        self.edges.push(TaitEdge { tail, head, eta });
        self.edges.push(TaitEdge {
            tail: self.vertex_image[tail],
            head: self.vertex_image[head],
            eta,
        });
        self.edge_image.push(e + 1);
        self.edge_image.push(e);
        (e, e + 1)
    }

    fn position(&self, v: usize, e: usize) -> usize {
        self.rotation[v]
            .iter()
            .position(|&x| x == e)
            .unwrap_or_else(|| panic!("edge {e} not at vertex {v}"))
    }

    fn insert_after(&mut self, v: usize, anchor: usize, e: usize) {
        let p = self.position(v, anchor);
        self.rotation[v].insert(p + 1, e);
    }

    fn insert_before(&mut self, v: usize, anchor: usize, e: usize) {
        let p = self.position(v, anchor);
        self.rotation[v].insert(p, e);
    }

    /// Checks that the rotation system is compatible with the inversion.
    pub fn check(&self) -> Result<(), Error> {
        let nv = self.vertex_count();
        for v in 0..nv {
            if self.vertex_image[self.vertex_image[v]] != v {
                return Err(bad(format!("vertex map is not an involution at {v}")));
            }
        }
        if self.vertex_image[self.outer] != self.outer {
            return Err(bad("outer vertex must be fixed"));
        }
        let mut seen = vec![0usize; self.edges.len()];
        for (v, rot) in self.rotation.iter().enumerate() {
            for &e in rot {
                let TaitEdge { tail, head, .. } = self.edges[e];
                if tail == head || (v != tail && v != head) {
                    return Err(bad(format!("edge {e} listed at vertex {v}")));
                }
                seen[e] += 1;
            }
        }
        if let Some(e) = seen.iter().position(|&k| k != 2) {
            return Err(bad(format!("edge {e} appears {} times in rotations", seen[e])));
        }
        for (e, edge) in self.edges.iter().enumerate() {
            let f = self.edge_image[e];
            let image = self.edges[f];
            let ends = [self.vertex_image[edge.tail], self.vertex_image[edge.head]];
            let mut a = ends;
            let mut b = [image.tail, image.head];
            a.sort_unstable();
            b.sort_unstable();
            if self.edge_image[f] != e || a != b || image.eta != edge.eta {
                return Err(bad(format!("edge {e} and its image {f} do not match")));
            }
        }
        for v in 0..nv {
            let w = self.vertex_image[v];
            let mut expected: Vec<usize> = self.rotation[v].iter().rev().map(|&e| self.edge_image[e]).collect();
            let got = &self.rotation[w];
            if expected.len() != got.len() {
                return Err(bad(format!("vertices {v} and {w} have different degrees")));
            }
            if let Some(p) = expected.iter().position(|&e| Some(&e) == got.first()) {
                expected.rotate_left(p);
            }
            if &expected != got {
                return Err(bad(format!("rotation at {w} is not the mirror of {v}")));
            }
        }
        Ok(())
    }

    /// Corners `(w, e, e2)` with `e2` following `e` counterclockwise at `w`.
    fn corners(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (w, rot) in self.rotation.iter().enumerate() {
            for (i, &e) in rot.iter().enumerate() {
                out.push((w, e, rot[(i + 1) % rot.len()]));
            }
        }
        out
    }

    fn is_fixed_corner(&self, (w, e, e2): (usize, usize, usize)) -> bool {
        self.vertex_image[w] == w && self.edge_image[e2] == e
    }

    /// Builds the diagram whose `F0` is the chosen fixed corner (0 or 1, in
    /// vertex and rotation order); the other one becomes `F1`.
    pub fn to_diagram(&self, name: &str, start: usize) -> Result<TaitDiagram, Error> {
        self.check()?;
        let corners = self.corners();
        let m = self.edges.len();
        // corner end at crossing quadrant (e, q): index 4e + q - 1
        let mut end_owner = vec![(usize::MAX, 0usize); 4 * m];
        let mut ends = Vec::with_capacity(corners.len());
        for (ci, &(w, e, e2)) in corners.iter().enumerate() {
            let qa = if w == self.edges[e].tail { 2 } else { 4 };
            let qb = if w == self.edges[e2].head { 1 } else { 3 };
            let a = (e, qa);
            let b = (e2, qb);
            end_owner[4 * e + qa - 1] = (ci, 0);
            end_owner[4 * e2 + qb - 1] = (ci, 1);
            ends.push([a, b]);
        }
        if end_owner.iter().any(|&(ci, _)| ci == usize::MAX) {
            return Err(bad("rotation system leaves a crossing quadrant uncovered"));
        }
        let fixed: Vec<usize> = (0..corners.len())
            .filter(|&ci| self.is_fixed_corner(corners[ci]))
            .collect();
        if fixed.len() != 2 || fixed.iter().any(|&ci| corners[ci].0 != self.outer) {
            return Err(bad(format!(
                "expected two axis corners at the outer vertex, found {}",
                fixed.len()
            )));
        }
        if start > 1 {
            return Err(bad("start corner must be 0 or 1"));
        }
        let (f0, f1) = (fixed[start], fixed[1 - start]);
        let side_toward = |dir: usize| if dir == 0 { Side::Right } else { Side::Left };

        let mut label = vec![0usize; 4 * m];
        let mut under_quadrant: Vec<Vec<usize>> = vec![Vec::new(); m];
        let mut vertex_sides: Vec<Option<(usize, Side)>> = vec![None; self.vertex_count()];
        let (mut ci, mut dir) = (f0, 0usize);
        let mut seg = 1usize;
        let mut end_side = None;
        let mut steps = 0;
        loop {
            let w = corners[ci].0;
            vertex_sides[w].get_or_insert((seg, side_toward(dir)));
            let (e, q) = ends[ci][dir];
            let oq = corner_end(q);
            label[4 * e + q - 1] = seg;
            seg += 1;
            label[4 * e + oq - 1] = seg;
            under_quadrant[e].push(q);
            let (next, which) = end_owner[4 * e + oq - 1];
            ci = next;
            dir = 1 - which;
            if ci == f1 {
                if end_side.is_some() {
                    return Err(bad("axis corner visited twice"));
                }
                // h arrives on the side away from the outer region
                end_side = Some(side_toward(dir).opposite());
                seg += 1;
            }
            if ci == f0 {
                break;
            }
            steps += 1;
            if steps > 2 * m {
                return Err(bad("medial curve does not close up"));
            }
        }
        let Some(h_end) = end_side else {
            return Err(bad("medial curve has more than one component"));
        };
        if seg != 2 * m + 2 || under_quadrant.iter().any(|q| q.len() != 2) {
            return Err(bad("medial curve has more than one component"));
        }

        let mut crossings = Vec::with_capacity(m);
        for (e, passes) in under_quadrant.iter().enumerate() {
            let eta = self.edges[e].eta;
            let q0 = *passes
                .iter()
                .find(|&&q| {
                    let is_13 = q % 2 == 1;
                    let over = if eta == 1 { is_13 } else { !is_13 };
                    !over
                })
                .expect("one strand is under");
            let pd = std::array::from_fn(|k| label[4 * e + (q0 - 1 + k) % 4]);
            crossings.push(Crossing::new(e + 1, pd));
        }
        let on_axis = (0..m).filter(|&e| self.edge_image[e] == e).map(|e| e + 1).collect();
        let involution = (0..m)
            .filter(|&e| self.edge_image[e] > e)
            .map(|e| (e + 1, self.edge_image[e] + 1))
            .collect();
        let diagram = validate(DiagramCandidate {
            name: name.to_string(),
            n: m,
            crossings,
            on_axis,
            involution,
            // the outer region lies on the right of segment 1
            h_side_at_start: Side::Left,
            h_side_at_end: h_end,
        })?;
        analyze_faces(&diagram)?;
        let vertex_sides = vertex_sides
            .into_iter()
            .map(|s| s.expect("medial curve visits every vertex"))
            .collect();
        Ok(TaitDiagram {
            diagram,
            vertex_sides,
        })
    }

    /// Whether the corner after `anchor` at `v` carries the axis.
    pub fn corner_is_fixed(&self, v: usize, anchor: usize) -> bool {
        let rot = &self.rotation[v];
        let p = self.position(v, anchor);
        self.is_fixed_corner((v, anchor, rot[(p + 1) % rot.len()]))
    }

    /// Adds a nugatory crossing in the corner after `anchor` at `v`, and its
    /// mirror image. The corner must not carry the axis.
    pub fn add_kink_pair(&mut self, v: usize, anchor: usize, eta: i32) -> Result<(), Error> {
        if self.corner_is_fixed(v, anchor) {
            return Err(bad("cannot add a kink pair in an axis corner"));
        }
        let (p, p2) = self.add_vertex_pair();
        let (f, f2) = self.add_edge_pair(v, p, eta);
        self.rotation[p].push(f);
        self.rotation[p2].push(f2);
        self.insert_after(v, anchor, f);
        let (v2, anchor2) = (self.vertex_image[v], self.edge_image[anchor]);
        self.insert_before(v2, anchor2, f2);
        Ok(())
    }

    /// Adds two edges parallel to `e` on its left, and their images. The
    /// copies of an axis edge are axis edges themselves.
    pub fn add_parallel_pair(&mut self, e: usize, etas: [i32; 2]) -> Result<(), Error> {
        let TaitEdge { tail, head, .. } = self.edges[e];
        let image = self.edge_image[e];
        if image == e {
            let c1 = self.add_axis_edge(tail, head, etas[0]);
            let c2 = self.add_axis_edge(tail, head, etas[1]);
            self.insert_after(tail, e, c1);
            self.insert_after(tail, c1, c2);
            self.insert_before(head, e, c1);
            self.insert_before(head, c1, c2);
            return Ok(());
        }
        let (c1, c1m) = self.add_edge_pair(tail, head, etas[0]);
        let (c2, c2m) = self.add_edge_pair(tail, head, etas[1]);
        self.insert_after(tail, e, c1);
        self.insert_after(tail, c1, c2);
        self.insert_before(head, e, c1);
        self.insert_before(head, c1, c2);
        let (tm, hm) = (self.vertex_image[tail], self.vertex_image[head]);
        self.insert_before(tm, image, c1m);
        self.insert_before(tm, c1m, c2m);
        self.insert_after(hm, image, c1m);
        self.insert_after(hm, c1m, c2m);
        Ok(())
    }

    /// Splits `e` into a path of three edges with the given types from tail
    /// to head, and its image likewise. On an axis edge the first and last
    /// types must agree.
    pub fn subdivide(&mut self, e: usize, etas: [i32; 3]) -> Result<(), Error> {
        let image = self.edge_image[e];
        if image == e {
            if etas[0] != etas[2] {
                return Err(bad("axis edge subdivision must be symmetric"));
            }
            let TaitEdge { tail, head, .. } = self.edges[e];
            let (m1, m2) = self.add_vertex_pair();
            self.edges[e] = TaitEdge { tail, head: m1, eta: etas[0] };
            let e2 = self.add_axis_edge(m1, m2, etas[1]);
            let e3 = self.edges.len();
            self.edges.push(TaitEdge { tail: m2, head, eta: etas[2] });
            self.edge_image[e] = e3;
            self.edge_image.push(e);
            let p = self.position(head, e);
            self.rotation[head][p] = e3;
            self.rotation[m1] = vec![e, e2];
            self.rotation[m2] = vec![e2, e3];
            return Ok(());
        }
        let [m1, m2] = self.split_edge(e, etas);
        let TaitEdge { tail: it, .. } = self.edges[image];
        let same_direction = it == self.vertex_image[self.edges[e].tail];
        let image_etas = if same_direction {
            etas
        } else {
            [etas[2], etas[1], etas[0]]
        };
        let [n1, n2] = self.split_edge(image, image_etas);
        // split_edge appends the middle and last pieces in that order
        let pieces = |first: usize, k: usize| -> [usize; 3] { [first, k, k + 1] };
        let a = pieces(e, self.edges.len() - 4);
        let b = pieces(image, self.edges.len() - 2);
        let (vm1, vm2) = if same_direction { (n1, n2) } else { (n2, n1) };
        let b_ordered = if same_direction { b } else { [b[2], b[1], b[0]] };
        for k in 0..3 {
            self.edge_image[a[k]] = b_ordered[k];
            self.edge_image[b_ordered[k]] = a[k];
        }
        self.vertex_image[m1] = vm1;
        self.vertex_image[vm1] = m1;
        self.vertex_image[m2] = vm2;
        self.vertex_image[vm2] = m2;
        Ok(())
    }

    /// Replaces `e` by a tail-to-head path of three edges; the first piece
    /// keeps the id `e`. Returns the two new vertices, which are left fixed
    /// by the vertex map until the caller pairs them.
    fn split_edge(&mut self, e: usize, etas: [i32; 3]) -> [usize; 2] {
        let TaitEdge { tail, head, .. } = self.edges[e];
        let m1 = self.vertex_count();
        let m2 = m1 + 1;
        self.vertex_image.extend([m1, m2]);
        self.rotation.extend([Vec::new(), Vec::new()]);
        self.edges[e] = TaitEdge { tail, head: m1, eta: etas[0] };
        let e2 = self.edges.len();
        let e3 = e2 + 1;
        self.edges.push(TaitEdge { tail: m1, head: m2, eta: etas[1] });
        self.edges.push(TaitEdge { tail: m2, head, eta: etas[2] });
        self.edge_image.extend([e2, e3]);
        let p = self.position(head, e);
        self.rotation[head][p] = e3;
        self.rotation[m1] = vec![e, e2];
        self.rotation[m2] = vec![e2, e3];
        [m1, m2]
    }
}

/// Tait graph of the standard symmetric diagram of `T(2, 2k+1)`: a cycle
/// through the outer vertex and `k` swapped vertex pairs, with the middle
/// edge on the axis.
pub fn torus_graph(k: usize, eta: i32) -> TaitGraph {
    let mut g = TaitGraph::new(vec![0], 0);
    let mut xs = Vec::new();
    for _ in 0..k {
        xs.push(g.add_vertex_pair());
    }
    // chain: outer, x_1..x_k, x'_k..x'_1, outer
    let mut prev = (0usize, 0usize);
    for &(x, x2) in &xs {
        g.add_edge_pair(prev.0, x, eta);
        prev = (x, x2);
    }
    g.add_axis_edge(prev.0, prev.1, eta);
    // rotations: every vertex has degree two
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for e in 0..g.edges.len() {
        at[g.edges[e].tail].push(e);
        at[g.edges[e].head].push(e);
    }
    g.rotation = at;
    g
}
