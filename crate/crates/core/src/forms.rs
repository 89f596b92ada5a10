//! Goeritz form of the shaded surface and its splitting under the inversion.

use serde::Serialize;

use crate::diagram::SymmetricDiagram;
use crate::faces::{FaceComplex, RegionInvolution, Shading};
use crate::linalg::SymIntMatrix;
use crate::Error;

/// Goeritz type of a crossing: `+1` when the corner between pd slots 2 and 3
/// (1-based) is shaded. On an on-axis crossing this equals the `ab` sign.
pub fn goeritz_eta(d: &SymmetricDiagram, fc: &FaceComplex, shading: &Shading, crossing: usize) -> i32 {
    if shading.is_shaded(fc.corner_faces(d, crossing)[1]) {
        1
    } else {
        -1
    }
}

/// The two unshaded faces at a crossing, in corner order.
fn unshaded_corners(
    d: &SymmetricDiagram,
    fc: &FaceComplex,
    shading: &Shading,
    crossing: usize,
) -> (usize, usize) {
    let corners = fc.corner_faces(d, crossing);
    if shading.is_shaded(corners[1]) {
        (corners[0], corners[2])
    } else {
        (corners[1], corners[3])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoeritzData {
    /// Unshaded faces other than the h' region, by smallest boundary label.
    pub basis: Vec<usize>,
    pub matrix: SymIntMatrix,
    pub r_infinity: usize,
}

impl GoeritzData {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, face: usize) -> Option<usize> {
        self.basis.iter().position(|&f| f == face)
    }

    /// The matrix with the h' row and column restored as the last index.
    pub fn full_matrix(&self) -> Vec<Vec<i64>> {
        let rows = self.matrix.to_i64_rows().expect("Goeritz entries fit in i64");
        let k = rows.len();
        let mut full: Vec<Vec<i64>> = rows
            .into_iter()
            .map(|mut r| {
                let s: i64 = r.iter().sum();
                r.push(-s);
                r
            })
            .collect();
        let last: Vec<i64> = (0..=k).map(|j| -(0..k).map(|i| full[i][j]).sum::<i64>()).collect();
        full.push(last);
        full
    }
}

/// Goeritz matrix on the unshaded regions, h' region dropped.
///
/// Each crossing joining distinct unshaded regions `x`, `y` adds `-eta` to
/// `G[x][y]` and `G[y][x]`; diagonal entries make every full row sum to zero.
pub fn goeritz_matrix(d: &SymmetricDiagram, fc: &FaceComplex, shading: &Shading) -> GoeritzData {
    let nf = fc.len();
    let mut full = vec![vec![0i64; nf]; nf];
    for c in 1..=d.n() {
        let (x, y) = unshaded_corners(d, fc, shading, c);
        if x == y {
            continue;
        }
        let eta = goeritz_eta(d, fc, shading, c) as i64;
        full[x][y] -= eta;
        full[y][x] -= eta;
        full[x][x] += eta;
        full[y][y] += eta;
    }
    let r_infinity = shading.r_infinity();
    let mut basis: Vec<usize> = shading
        .unshaded_faces()
        .into_iter()
        .filter(|&f| f != r_infinity)
        .collect();
    basis.sort_by_key(|&f| fc.min_segment(f));
    let rows: Vec<Vec<i64>> = basis
        .iter()
        .map(|&x| basis.iter().map(|&y| full[x][y]).collect())
        .collect();
    GoeritzData {
        basis,
        matrix: SymIntMatrix::from_i64_rows(&rows).expect("built symmetric"),
        r_infinity,
    }
}

/// Integer bases of the two eigenspaces of the inversion on `H_1`.
///
/// A region class `x` maps to `-x'` where `x'` is the image region, so
/// `x - x'` spans the `+1` space and `x + x'` the `-1` space; an invariant
/// region contributes `x` to the `-1` space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenSplit {
    pub plus_basis: Vec<Vec<i64>>,
    pub minus_basis: Vec<Vec<i64>>,
    /// Swapped region pairs `(representative, image)` as face ids.
    pub pairs: Vec<(usize, usize)>,
    /// Invariant regions in the basis.
    pub invariant: Vec<usize>,
}

pub fn eigen_split(g: &GoeritzData, inv: &RegionInvolution) -> Result<EigenSplit, Error> {
    let k = g.dim();
    let unit = |i: usize| {
        let mut v = vec![0i64; k];
        v[i] = 1;
        v
    };
    let mut done = vec![false; k];
    let mut split = EigenSplit {
        plus_basis: Vec::new(),
        minus_basis: Vec::new(),
        pairs: Vec::new(),
        invariant: Vec::new(),
    };
    let mut invariant_vectors = Vec::new();
    for (i, &x) in g.basis.iter().enumerate() {
        if done[i] {
            continue;
        }
        let image = inv.image(x);
        let Some(j) = g.index_of(image) else {
            return Err(Error::Consistency(format!(
                "region {x} maps to {image}, which is outside the Goeritz basis"
            )));
        };
        done[i] = true;
        done[j] = true;
        if i == j {
            split.invariant.push(x);
            invariant_vectors.push(unit(i));
        } else {
            let (ui, uj) = (unit(i), unit(j));
            split.plus_basis.push(ui.iter().zip(&uj).map(|(a, b)| a - b).collect());
            split.minus_basis.push(ui.iter().zip(&uj).map(|(a, b)| a + b).collect());
            split.pairs.push((x, image));
        }
    }
    split.minus_basis.extend(invariant_vectors);
    Ok(split)
}

/// The Goeritz form restricted to each eigenspace basis.
pub fn restricted_forms(g: &GoeritzData, split: &EigenSplit) -> (SymIntMatrix, SymIntMatrix) {
    (
        g.matrix.restrict(&split.plus_basis),
        g.matrix.restrict(&split.minus_basis),
    )
}
