//! The equivariant signature and the quantities it is assembled from.

use serde::Serialize;

use crate::diagram::{SignMode, StrandClass, SymmetricDiagram};
use crate::faces::{analyze_faces, FaceData};
use crate::forms::{eigen_split, goeritz_eta, goeritz_matrix, restricted_forms, EigenSplit, GoeritzData};
use crate::linalg::{signature, SignatureTriple, SymIntMatrix};
use crate::Error;

fn ab_sign(d: &SymmetricDiagram, c: usize) -> i64 {
    d.crossing_sign(c, SignMode::Ab).expect("caller checked class ab") as i64
}

fn is_ab(d: &SymmetricDiagram, c: usize) -> bool {
    d.strand_class(c) == StrandClass::AB
}

/// `-Σ ε_ab(c)` over off-axis crossings between the two arcs.
pub fn correction_term(d: &SymmetricDiagram) -> i64 {
    -(1..=d.n())
        .filter(|&c| !d.is_on_axis(c) && is_ab(d, c))
        .map(|c| ab_sign(d, c))
        .sum::<i64>()
}

/// `Σ_{on axis} η(c) - Σ_{all ab} ε_ab(c)`, checked against
/// [`correction_term`] and against `η = ε_ab` on every axis crossing.
pub fn correction_term_crosscheck(d: &SymmetricDiagram, faces: &FaceData) -> Result<i64, Error> {
    let mut total = 0i64;
    for c in 1..=d.n() {
        if d.is_on_axis(c) {
            if !is_ab(d, c) {
                return Err(Error::Consistency(format!(
                    "on-axis crossing {c} is class {}",
                    d.strand_class(c)
                )));
            }
            let eta = goeritz_eta(d, &faces.complex, &faces.shading, c) as i64;
            let eps = ab_sign(d, c);
            if eta != eps {
                return Err(Error::Consistency(format!(
                    "on-axis crossing {c} has eta {eta} but ab sign {eps}"
                )));
            }
            total += eta;
        }
        if is_ab(d, c) {
            total -= ab_sign(d, c);
        }
    }
    let e = correction_term(d);
    if total != e {
        return Err(Error::Consistency(format!(
            "correction term {e} disagrees with crosscheck {total}"
        )));
    }
    Ok(total)
}

/// `σ(M₊) - σ(M₋)`.
pub fn g_signature(m_plus: &SymIntMatrix, m_minus: &SymIntMatrix) -> i64 {
    signature(m_plus).signature() - signature(m_minus).signature()
}

/// True when every strand alternates over and under along the traversal.
pub fn is_alternating(d: &SymmetricDiagram) -> bool {
    // ends_over[s] is whether segment s ends at an over-crossing
    let total = d.segment_count();
    let mut ends_over: Vec<Option<bool>> = vec![None; total + 1];
    for c in d.crossings() {
        ends_over[c.under_in()] = Some(false);
        ends_over[c.over_in()] = Some(true);
    }
    let seq: Vec<bool> = ends_over.into_iter().flatten().collect();
    (0..seq.len()).all(|i| seq[i] != seq[(i + 1) % seq.len()])
}

/// `Σ ε_ab` over off-axis `ab` crossings; equals σ̃ for alternating diagrams.
pub fn alternating_fast_path(d: &SymmetricDiagram) -> Result<i64, Error> {
    if !is_alternating(d) {
        return Err(Error::NotAlternating);
    }
    Ok(-correction_term(d))
}

/// `⌈|σ̃| / 2⌉`.
pub fn butterfly_lower_bound(sigma_tilde: i64) -> i64 {
    (sigma_tilde.abs() + 1) / 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub n: usize,
    pub alternating: bool,
    pub e: i64,
    pub gsig: i64,
    pub sigma_tilde: i64,
    pub bg4_lower: i64,
    pub intermediates: Intermediates,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Intermediates {
    pub face_count: usize,
    pub unshaded_count: usize,
    pub r_infinity: usize,
    /// Goeritz basis as face ids, with the smallest boundary label of each.
    pub basis: Vec<usize>,
    pub basis_labels: Vec<usize>,
    pub goeritz: Vec<Vec<i64>>,
    pub goeritz_signature: SignatureTriple,
    pub plus_basis: Vec<Vec<i64>>,
    pub minus_basis: Vec<Vec<i64>>,
    pub invariant_regions: Vec<usize>,
    pub m_plus: Vec<Vec<i64>>,
    pub m_minus: Vec<Vec<i64>>,
    pub plus_signature: SignatureTriple,
    pub minus_signature: SignatureTriple,
    pub crosscheck_e: i64,
    pub fast_path: Option<i64>,
    /// Goeritz type of each crossing, indexed by `id - 1`.
    pub eta: Vec<i32>,
}

/// Full pipeline output, including the face and form data.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub faces: FaceData,
    pub goeritz: GoeritzData,
    pub split: EigenSplit,
    pub m_plus: SymIntMatrix,
    pub m_minus: SymIntMatrix,
    pub report: InvariantReport,
}

fn small(m: &SymIntMatrix, what: &str) -> Result<Vec<Vec<i64>>, Error> {
    m.to_i64_rows()
        .ok_or_else(|| Error::Consistency(format!("{what} entry exceeds 64 bits")))
}

pub fn analyze(d: &SymmetricDiagram) -> Result<Analysis, Error> {
    let faces = analyze_faces(d)?;
    let crosscheck_e = correction_term_crosscheck(d, &faces)?;
    let goeritz = goeritz_matrix(d, &faces.complex, &faces.shading);
    let split = eigen_split(&goeritz, &faces.involution)?;
    let (m_plus, m_minus) = restricted_forms(&goeritz, &split);

    let sg = signature(&goeritz.matrix);
    let sp = signature(&m_plus);
    let sm = signature(&m_minus);
    if sp.signature() + sm.signature() != sg.signature() || sp.rank() + sm.rank() != sg.rank() {
        return Err(Error::Consistency(format!(
            "eigenspace inertia {sp:?} + {sm:?} does not add up to {sg:?}"
        )));
    }
    let gsig = sp.signature() - sm.signature();
    let e = correction_term(d);
    let sigma_tilde = gsig - e;
    let alternating = is_alternating(d);
    let fast_path = if alternating {
        let fast = alternating_fast_path(d)?;
        if fast != sigma_tilde || gsig != 0 {
            return Err(Error::Consistency(format!(
                "alternating diagram: pipeline gives {sigma_tilde} (g-signature {gsig}), fast path {fast}"
            )));
        }
        Some(fast)
    } else {
        None
    };

    let intermediates = Intermediates {
        face_count: faces.complex.len(),
        unshaded_count: faces.shading.unshaded_faces().len(),
        r_infinity: faces.shading.r_infinity(),
        basis: goeritz.basis.clone(),
        basis_labels: goeritz.basis.iter().map(|&f| faces.complex.min_segment(f)).collect(),
        goeritz: small(&goeritz.matrix, "Goeritz")?,
        goeritz_signature: sg,
        plus_basis: split.plus_basis.clone(),
        minus_basis: split.minus_basis.clone(),
        invariant_regions: split.invariant.clone(),
        m_plus: small(&m_plus, "M+")?,
        m_minus: small(&m_minus, "M-")?,
        plus_signature: sp,
        minus_signature: sm,
        crosscheck_e,
        fast_path,
        eta: (1..=d.n())
            .map(|c| goeritz_eta(d, &faces.complex, &faces.shading, c))
            .collect(),
    };
    let report = InvariantReport {
        name: d.name().to_string(),
        n: d.n(),
        alternating,
        e,
        gsig,
        sigma_tilde,
        bg4_lower: butterfly_lower_bound(sigma_tilde),
        intermediates,
    };
    Ok(Analysis {
        faces,
        goeritz,
        split,
        m_plus,
        m_minus,
        report,
    })
}

/// Runs the whole pipeline and returns the report.
pub fn sigma_tilde(d: &SymmetricDiagram) -> Result<InvariantReport, Error> {
    analyze(d).map(|a| a.report)
}
