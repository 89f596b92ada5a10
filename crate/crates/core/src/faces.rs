//! Faces of the projection, checkerboard shading and the induced map on
//! regions.
//!
//! Each crossing is a 4-valent vertex whose half-edges are ordered by the pd
//! tuple; the two fixed points are degree-2 vertices. A face is traced by
//! arriving along a segment and leaving along the next half-edge
//! counterclockwise, which keeps the face on the right of every step. The
//! side `(s, Right)` is the face traced while running along `s` forward,
//! `(s, Left)` the one traced while running backward.

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{Side, SymmetricDiagram};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FaceError {
    #[error("traced {found} faces, a planar diagram with {n} crossings has {expected}")]
    EulerRelation {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("faces {first} and {second} meet across segment {segment} but get the same color")]
    ColoringConflict {
        segment: usize,
        first: usize,
        second: usize,
    },
    #[error("face {face} maps to both {image} and {other} under the inversion")]
    InvolutionNotWellDefined {
        face: usize,
        image: usize,
        other: usize,
    },
    #[error("region map sends {face} to {image}, which does not map back")]
    InvolutionNotInvolutive { face: usize, image: usize },
    #[error("region map sends face {face} (shaded: {shaded}) to a face of the other color")]
    InvolutionBreaksShading { face: usize, shaded: bool },
}

impl FaceError {
    pub fn code(&self) -> &'static str {
        match self {
            FaceError::EulerRelation { .. } => "faces.euler",
            FaceError::ColoringConflict { .. } => "faces.coloring",
            FaceError::InvolutionNotWellDefined { .. } => "faces.region-involution",
            FaceError::InvolutionNotInvolutive { .. } => "faces.region-involution",
            FaceError::InvolutionBreaksShading { .. } => "faces.region-involution",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdmissibilityError {
    #[error("face on the {side} of segment {segment} at F1 is unshaded, so h does not end in the surface")]
    HEndUnshaded { segment: usize, side: Side },
    #[error("face on the {side} of segment {segment} at F1 is face {found}, not the h' region {expected}; h' would cross the diagram")]
    HPrimeMismatch {
        segment: usize,
        side: Side,
        expected: usize,
        found: usize,
    },
    #[error("on-axis crossing {crossing}: the axis corner between segments {from} and {to} is unshaded, so the axis leaves the surface there")]
    AxisCornerUnshaded {
        crossing: usize,
        from: usize,
        to: usize,
    },
    #[error("h' region {face} is not invariant under the region map (image {image})")]
    RInfinityNotInvariant { face: usize, image: usize },
}

impl AdmissibilityError {
    pub fn code(&self) -> &'static str {
        match self {
            AdmissibilityError::HEndUnshaded { .. } => "admissibility.h-end",
            AdmissibilityError::HPrimeMismatch { .. } => "admissibility.h-prime",
            AdmissibilityError::AxisCornerUnshaded { .. } => "admissibility.axis-corner",
            AdmissibilityError::RInfinityNotInvariant { .. } => "admissibility.r-infinity",
        }
    }
}

/// Faces as cyclic lists of segment sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceComplex {
    faces: Vec<Vec<(usize, Side)>>,
    /// `lookup[s - 1]` holds the faces on the (left, right) of segment `s`.
    lookup: Vec<[usize; 2]>,
}

impl FaceComplex {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[Vec<(usize, Side)>] {
        &self.faces
    }

    pub fn face_of(&self, segment: usize, side: Side) -> usize {
        let [l, r] = self.lookup[segment - 1];
        match side {
            Side::Left => l,
            Side::Right => r,
        }
    }

    /// Smallest segment label on the boundary of a face.
    pub fn min_segment(&self, face: usize) -> usize {
        self.faces[face].iter().map(|&(s, _)| s).min().unwrap_or(0)
    }

    /// Faces at the four corners of a crossing; corner `k` lies between pd
    /// slots `k` and `k + 1` (0-based, cyclic).
    pub fn corner_faces(&self, d: &SymmetricDiagram, crossing: usize) -> [usize; 4] {
        let c = d.crossing(crossing);
        std::array::from_fn(|k| {
            let side = if c.slot_is_incoming(k) {
                Side::Right
            } else {
                Side::Left
            };
            self.face_of(c.pd[k], side)
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum End {
    Head,
    Tail,
}

pub fn trace_faces(d: &SymmetricDiagram) -> Result<FaceComplex, Error> {
    let n = d.n();
    let total = d.segment_count();
    // Vertex rotations: crossings 0..n, then F1 and F0.
    let mut rotations: Vec<Vec<(usize, End)>> = Vec::with_capacity(n + 2);
    for c in d.crossings() {
        rotations.push(
            (0..4)
                .map(|k| {
                    let end = if c.slot_is_incoming(k) {
                        End::Head
                    } else {
                        End::Tail
                    };
                    (c.pd[k], end)
                })
                .collect(),
        );
    }
    rotations.push(vec![(n + 1, End::Head), (n + 2, End::Tail)]);
    rotations.push(vec![(total, End::Head), (1, End::Tail)]);

    // position of each half-edge: [head, tail] per segment
    let mut at: Vec<[(usize, usize); 2]> = vec![[(usize::MAX, 0); 2]; total + 1];
    for (v, rot) in rotations.iter().enumerate() {
        for (k, &(s, end)) in rot.iter().enumerate() {
            at[s][end as usize] = (v, k);
        }
    }

    // Darts: (segment, forward). Forward darts carry the right side.
    let dart_index = |s: usize, fwd: bool| 2 * (s - 1) + usize::from(fwd);
    let mut face_of_dart = vec![usize::MAX; 2 * total];
    let mut faces = Vec::new();
    for s in 1..=total {
        for fwd in [false, true] {
            if face_of_dart[dart_index(s, fwd)] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut cycle = Vec::new();
            let (mut cs, mut cf) = (s, fwd);
            while face_of_dart[dart_index(cs, cf)] == usize::MAX {
                face_of_dart[dart_index(cs, cf)] = id;
                cycle.push((cs, if cf { Side::Right } else { Side::Left }));
                let arrive = if cf { End::Head } else { End::Tail };
                let (v, k) = at[cs][arrive as usize];
                let rot = &rotations[v];
                let (ns, nend) = rot[(k + 1) % rot.len()];
                cs = ns;
                cf = nend == End::Tail;
            }
            faces.push(cycle);
        }
    }
    if faces.len() != n + 2 {
        return Err(FaceError::EulerRelation {
            n,
            expected: n + 2,
            found: faces.len(),
        }
        .into());
    }
    let lookup = (1..=total)
        .map(|s| [face_of_dart[dart_index(s, false)], face_of_dart[dart_index(s, true)]])
        .collect();
    Ok(FaceComplex { faces, lookup })
}

/// Checkerboard coloring with the surface containing h shaded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Shading {
    shaded: Vec<bool>,
    r_infinity: usize,
}

impl Shading {
    pub fn is_shaded(&self, face: usize) -> bool {
        self.shaded[face]
    }

    /// The unshaded region containing h'.
    pub fn r_infinity(&self) -> usize {
        self.r_infinity
    }

    pub fn shaded_faces(&self) -> Vec<usize> {
        (0..self.shaded.len()).filter(|&f| self.shaded[f]).collect()
    }

    pub fn unshaded_faces(&self) -> Vec<usize> {
        (0..self.shaded.len()).filter(|&f| !self.shaded[f]).collect()
    }
}

/// Colors the faces and checks that h lies in the shaded surface and h'
/// stays in a single unshaded region.
pub fn checkerboard(d: &SymmetricDiagram, fc: &FaceComplex) -> Result<Shading, Error> {
    let nf = fc.len();
    let mut adjacent: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nf];
    for s in 1..=d.segment_count() {
        let (l, r) = (fc.face_of(s, Side::Left), fc.face_of(s, Side::Right));
        adjacent[l].push((r, s));
        adjacent[r].push((l, s));
    }
    let start = fc.face_of(1, d.h_side_at_start());
    let mut color: Vec<Option<bool>> = vec![None; nf];
    color[start] = Some(true);
    let mut stack = vec![start];
    while let Some(f) = stack.pop() {
        let cf = color[f].expect("colored before push");
        for &(g, s) in &adjacent[f] {
            match color[g] {
                None => {
                    color[g] = Some(!cf);
                    stack.push(g);
                }
                Some(cg) if cg == cf => {
                    return Err(FaceError::ColoringConflict {
                        segment: s,
                        first: f.min(g),
                        second: f.max(g),
                    }
                    .into())
                }
                Some(_) => {}
            }
        }
    }
    // Faces of a connected projection are all reached from the start face.
    let shaded: Vec<bool> = color.into_iter().map(|c| c.unwrap_or(false)).collect();
    let r_infinity = fc.face_of(1, d.h_side_at_start().opposite());

    let n1 = d.n() + 1;
    let end_side = d.h_side_at_end();
    if !shaded[fc.face_of(n1, end_side)] {
        return Err(AdmissibilityError::HEndUnshaded {
            segment: n1,
            side: end_side,
        }
        .into());
    }
    let prime = fc.face_of(n1, end_side.opposite());
    if prime != r_infinity {
        return Err(AdmissibilityError::HPrimeMismatch {
            segment: n1,
            side: end_side.opposite(),
            expected: r_infinity,
            found: prime,
        }
        .into());
    }
    for &c in &d.on_axis() {
        let x = d.crossing(c);
        let corners = fc.corner_faces(d, c);
        for k in 0..4 {
            let (from, to) = (x.pd[k], x.pd[(k + 1) % 4]);
            if d.segment_mirror(from) == to && !shaded[corners[k]] {
                return Err(AdmissibilityError::AxisCornerUnshaded {
                    crossing: c,
                    from,
                    to,
                }
                .into());
            }
        }
    }
    Ok(Shading { shaded, r_infinity })
}

/// Map on faces induced by the strong inversion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegionInvolution {
    image: Vec<usize>,
}

impl RegionInvolution {
    pub fn image(&self, face: usize) -> usize {
        self.image[face]
    }

    pub fn is_fixed(&self, face: usize) -> bool {
        self.image[face] == face
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }
}

/// The inversion reverses both the direction of travel and the orientation
/// of the plane, so the side label of a segment is preserved:
/// `(s, side) -> (2n+3-s, side)`.
pub fn region_involution(d: &SymmetricDiagram, fc: &FaceComplex) -> Result<RegionInvolution, Error> {
    let mut image = Vec::with_capacity(fc.len());
    for (f, sides) in fc.faces().iter().enumerate() {
        let mut it = sides.iter().map(|&(s, side)| fc.face_of(d.segment_mirror(s), side));
        let first = it.next().expect("faces are nonempty");
        if let Some(other) = it.find(|&g| g != first) {
            return Err(FaceError::InvolutionNotWellDefined {
                face: f,
                image: first,
                other,
            }
            .into());
        }
        image.push(first);
    }
    for (f, &g) in image.iter().enumerate() {
        if image[g] != f {
            return Err(FaceError::InvolutionNotInvolutive { face: f, image: g }.into());
        }
    }
    Ok(RegionInvolution { image })
}

/// Checks that the region map respects the shading and fixes the h' region.
pub fn check_involution_shading(
    shading: &Shading,
    inv: &RegionInvolution,
) -> Result<(), Error> {
    for f in 0..inv.image.len() {
        if shading.is_shaded(f) != shading.is_shaded(inv.image(f)) {
            return Err(FaceError::InvolutionBreaksShading {
                face: f,
                shaded: shading.is_shaded(f),
            }
            .into());
        }
    }
    let r = shading.r_infinity();
    if !inv.is_fixed(r) {
        return Err(AdmissibilityError::RInfinityNotInvariant {
            face: r,
            image: inv.image(r),
        }
        .into());
    }
    Ok(())
}

/// Everything face-level about a diagram, checked.
#[derive(Clone, Debug)]
pub struct FaceData {
    pub complex: FaceComplex,
    pub shading: Shading,
    pub involution: RegionInvolution,
}

pub fn analyze_faces(d: &SymmetricDiagram) -> Result<FaceData, Error> {
    let complex = trace_faces(d)?;
    let shading = checkerboard(d, &complex)?;
    let involution = region_involution(d, &complex)?;
    check_involution_shading(&shading, &involution)?;
    Ok(FaceData {
        complex,
        shading,
        involution,
    })
}
