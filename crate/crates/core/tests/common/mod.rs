#![allow(dead_code)]

use equisig::catalog::tait::{torus_graph, TaitGraph};
use equisig::catalog::{self, ENTRIES};
use equisig::diagram::{SignMode, StrandClass, SymmetricDiagram};
use equisig::faces::analyze_faces;
use equisig::forms::goeritz_eta;
use equisig::invariant::{analyze, correction_term};
use equisig::linalg::{signature, signature_oracle, SignatureTriple, SymIntMatrix, ORACLE_MAX_DIM};
use equisig::Side;
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn corpus(name: &str) -> String {
    let path = format!("{}/tests/corpus/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn pm1(rng: &mut impl Rng) -> i32 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

/// Random symmetric knot diagram grown from a torus Tait graph by kink
/// pairs, parallel pairs and subdivisions.
pub fn random_diagram(rng: &mut impl Rng) -> SymmetricDiagram {
    let mut g = torus_graph(rng.gen_range(1..=3), pm1(rng));
    let ops = rng.gen_range(0..=4);
    for _ in 0..ops {
        random_op(&mut g, rng);
    }
    let start = rng.gen_range(0..2);
    g.to_diagram("random", start)
        .expect("random Tait graph builds a valid admissible diagram")
        .diagram
}

fn random_op(g: &mut TaitGraph, rng: &mut impl Rng) {
    let m = g.edges.len();
    match rng.gen_range(0..3) {
        0 => {
            let mut options = Vec::new();
            for v in 0..g.vertex_count() {
                for &e in &g.rotation[v] {
                    if !g.corner_is_fixed(v, e) {
                        options.push((v, e));
                    }
                }
            }
            if let Some(&(v, e)) = options.choose(rng) {
                let eta = pm1(rng);
                g.add_kink_pair(v, e, eta).unwrap();
            }
        }
        1 => {
            let e = rng.gen_range(0..m);
            let etas = [pm1(rng), pm1(rng)];
            g.add_parallel_pair(e, etas).unwrap();
        }
        _ => {
            let e = rng.gen_range(0..m);
            let a = pm1(rng);
            let etas = if g.edge_image[e] == e {
                [a, pm1(rng), a]
            } else {
                [a, pm1(rng), pm1(rng)]
            };
            g.subdivide(e, etas).unwrap();
        }
    }
}

pub fn random_symmetric(rng: &mut impl Rng, dim: usize, bound: i64) -> SymIntMatrix {
    let mut rows = vec![vec![0i64; dim]; dim];
    for i in 0..dim {
        for j in i..dim {
            let x = rng.gen_range(-bound..=bound);
            rows[i][j] = x;
            rows[j][i] = x;
        }
    }
    SymIntMatrix::from_i64_rows(&rows).unwrap()
}

/// Product of random elementary integer matrices; determinant ±1.
pub fn random_unimodular(rng: &mut impl Rng, dim: usize) -> Vec<Vec<BigInt>> {
    let mut s: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
        .collect();
    for _ in 0..3 * dim {
        let i = rng.gen_range(0..dim);
        let j = rng.gen_range(0..dim);
        match rng.gen_range(0..3) {
            0 if i != j => {
                let k = rng.gen_range(-2..=2);
                for r in s.iter_mut() {
                    r[j] += k * r[i];
                }
            }
            1 => {
                for r in s.iter_mut() {
                    r.swap(i, j);
                }
            }
            _ => {
                for r in s.iter_mut() {
                    r[i] = -r[i];
                }
            }
        }
    }
    s.into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect()
}

/// Oracle inertia where the dimension allows it, elimination otherwise.
pub fn inertia(m: &SymIntMatrix) -> SignatureTriple {
    if m.dim() <= ORACLE_MAX_DIM {
        signature_oracle(m).unwrap()
    } else {
        signature(m)
    }
}

/// Checks the structural and face-level properties of a valid diagram.
pub fn check_diagram_properties(d: &SymmetricDiagram) -> Result<(), String> {
    let e = correction_term(d);
    if e % 2 != 0 {
        return Err(format!("correction term {e} is odd"));
    }
    for c in 1..=d.n() {
        let img = d.involution(c);
        let t = d.crossing_sign(c, SignMode::Traversal).unwrap();
        if t != d.crossing_sign(img, SignMode::Traversal).unwrap() {
            return Err(format!("crossing {c} and its image differ in sign"));
        }
        if d.strand_class(c) == StrandClass::AB {
            let ab = d.crossing_sign(c, SignMode::Ab).unwrap();
            if ab != -t || ab != d.crossing_sign(img, SignMode::Ab).unwrap() {
                return Err(format!("ab sign of crossing {c} inconsistent"));
            }
        } else if d.is_on_axis(c) {
            return Err(format!("on-axis crossing {c} is not an ab crossing"));
        }
    }

    let f = analyze_faces(d).map_err(|e| e.to_string())?;
    if f.complex.len() != d.n() + 2 {
        return Err(format!("{} faces for {} crossings", f.complex.len(), d.n()));
    }
    for s in 1..=d.segment_count() {
        let l = f.complex.face_of(s, Side::Left);
        let r = f.complex.face_of(s, Side::Right);
        if f.shading.is_shaded(l) == f.shading.is_shaded(r) {
            return Err(format!("segment {s} has the same color on both sides"));
        }
    }
    for face in 0..f.complex.len() {
        let img = f.involution.image(face);
        if f.involution.image(img) != face || f.shading.is_shaded(img) != f.shading.is_shaded(face) {
            return Err(format!("region map misbehaves at face {face}"));
        }
    }

    // Σ_axis η - Σ_ab ε_ab recomputed here, with η = ε_ab on the axis
    let mut cross = 0i64;
    for c in 1..=d.n() {
        if d.is_on_axis(c) {
            let eta = goeritz_eta(d, &f.complex, &f.shading, c);
            let ab = d.crossing_sign(c, SignMode::Ab).unwrap();
            if eta != ab {
                return Err(format!("axis crossing {c}: eta {eta}, ab sign {ab}"));
            }
            cross += eta as i64;
        }
        if d.strand_class(c) == StrandClass::AB {
            cross -= d.crossing_sign(c, SignMode::Ab).unwrap() as i64;
        }
    }
    if cross != e {
        return Err(format!("crosscheck {cross} differs from correction term {e}"));
    }

    let a = analyze(d).map_err(|e| e.to_string())?;
    let sg = inertia(&a.goeritz.matrix);
    let sp = inertia(&a.m_plus);
    let sm = inertia(&a.m_minus);
    if sp.signature() + sm.signature() != sg.signature() || sp.rank() + sm.rank() != sg.rank() {
        return Err(format!("eigenspace inertia {sp:?} + {sm:?} vs {sg:?}"));
    }
    if a.report.intermediates.crosscheck_e != e {
        return Err("report crosscheck differs".into());
    }
    Ok(())
}

/// Catalog diagrams used for the homomorphism checks.
pub fn catalog_diagrams() -> Vec<SymmetricDiagram> {
    let mut out = Vec::new();
    for entry in ENTRIES {
        if entry.takes_n {
            for n in 1..=3 {
                out.push(catalog::build(entry.key, Some(n)).unwrap());
            }
        } else {
            out.push(catalog::build(entry.key, None).unwrap());
        }
    }
    out
}
