//! Symmetric knot diagrams: data model, file format and structural checks.
//!
//! Segments are labelled `1..=2n+2` in traversal order. The fixed point `F0`
//! sits just before segment 1 and `F1` between segments `n+1` and `n+2`, so
//! arc `a` is `1..=n+1`, arc `b` is `n+2..=2n+2` and the strong inversion acts
//! on labels as `j -> 2n+3-j`.
//!
//! Each crossing is a planar-diagram tuple listed counterclockwise starting at
//! the incoming under-strand.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Side of a directed segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub id: usize,
    /// Segment labels counterclockwise from the incoming under-strand.
    pub pd: [usize; 4],
}

impl Crossing {
    pub fn new(id: usize, pd: [usize; 4]) -> Self {
        Crossing { id, pd }
    }

    /// True when the over-strand enters at slot 4 and leaves at slot 2.
    pub fn over_runs_4_to_2(&self) -> bool {
        self.pd[1] == self.pd[3] + 1
    }

    /// Sign under the global traversal orientation.
    pub fn traversal_sign(&self) -> i32 {
        if self.over_runs_4_to_2() {
            1
        } else {
            -1
        }
    }

    /// Whether the segment at `slot` (0-based) arrives at this crossing.
    pub fn slot_is_incoming(&self, slot: usize) -> bool {
        match slot {
            0 => true,
            2 => false,
            1 => !self.over_runs_4_to_2(),
            3 => self.over_runs_4_to_2(),
            _ => panic!("slot {slot} out of range"),
        }
    }

    pub fn under_in(&self) -> usize {
        self.pd[0]
    }

    pub fn over_in(&self) -> usize {
        if self.over_runs_4_to_2() {
            self.pd[3]
        } else {
            self.pd[1]
        }
    }

    /// Same crossing with over and under exchanged, planar position fixed.
    pub fn switched(&self) -> Crossing {
        let [a, b, c, d] = self.pd;
        let pd = if self.over_runs_4_to_2() {
            [d, a, b, c]
        } else {
            [b, c, d, a]
        };
        Crossing { id: self.id, pd }
    }
}

/// Image of a crossing tuple under the strong inversion: labels mapped by
/// `j -> 2n+3-j`, cyclic order reversed, over and under exchanged.
pub(crate) fn inverted_pd(pd: [usize; 4], n: usize) -> [usize; 4] {
    let s = |j: usize| 2 * n + 3 - j;
    if pd[1] == pd[3] + 1 {
        [s(pd[1]), s(pd[0]), s(pd[3]), s(pd[2])]
    } else {
        [s(pd[3]), s(pd[2]), s(pd[1]), s(pd[0])]
    }
}

/// Parsed but unchecked diagram; holds exactly what the file says.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramCandidate {
    pub name: String,
    pub n: usize,
    pub crossings: Vec<Crossing>,
    pub on_axis: Vec<usize>,
    pub involution: Vec<(usize, usize)>,
    pub h_side_at_start: Side,
    pub h_side_at_end: Side,
}

/// A validated symmetric diagram. Immutable; build one with [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricDiagram {
    name: String,
    n: usize,
    crossings: Vec<Crossing>,
    image: Vec<usize>,
    h_side_at_start: Side,
    h_side_at_end: Side,
}

impl SymmetricDiagram {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of crossings.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn segment_count(&self) -> usize {
        2 * self.n + 2
    }

    /// Crossings sorted by id; `crossings()[k].id == k + 1`.
    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, id: usize) -> &Crossing {
        &self.crossings[id - 1]
    }

    /// Image of a crossing under the diagram involution.
    pub fn involution(&self, id: usize) -> usize {
        self.image[id - 1]
    }

    pub fn is_on_axis(&self, id: usize) -> bool {
        self.image[id - 1] == id
    }

    pub fn on_axis(&self) -> Vec<usize> {
        (1..=self.n).filter(|&c| self.is_on_axis(c)).collect()
    }

    /// Off-axis pairs `(c, c')` with `c < c'`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .filter(|&c| self.image[c - 1] > c)
            .map(|c| (c, self.image[c - 1]))
            .collect()
    }

    pub fn h_side_at_start(&self) -> Side {
        self.h_side_at_start
    }

    pub fn h_side_at_end(&self) -> Side {
        self.h_side_at_end
    }

    /// The strong inversion on segment labels.
    pub fn segment_mirror(&self, segment: usize) -> usize {
        2 * self.n + 3 - segment
    }

    pub fn arc_of(&self, segment: usize) -> Arc {
        if segment <= self.n + 1 {
            Arc::A
        } else {
            Arc::B
        }
    }

    pub fn strand_class(&self, id: usize) -> StrandClass {
        let c = self.crossing(id);
        match (self.arc_of(c.pd[0]), self.arc_of(c.pd[1])) {
            (Arc::A, Arc::A) => StrandClass::AA,
            (Arc::B, Arc::B) => StrandClass::BB,
            _ => StrandClass::AB,
        }
    }

    /// Crossing sign; see [`SignMode`].
    pub fn crossing_sign(&self, id: usize, mode: SignMode) -> Result<i32, SignError> {
        let sign = self.crossing(id).traversal_sign();
        match mode {
            SignMode::Traversal => Ok(sign),
            SignMode::Ab => match self.strand_class(id) {
                StrandClass::AB => Ok(-sign),
                class => Err(SignError::NotAb { crossing: id, class }),
            },
        }
    }

    pub fn to_candidate(&self) -> DiagramCandidate {
        DiagramCandidate {
            name: self.name.clone(),
            n: self.n,
            crossings: self.crossings.clone(),
            on_axis: self.on_axis(),
            involution: self.pairs(),
            h_side_at_start: self.h_side_at_start,
            h_side_at_end: self.h_side_at_end,
        }
    }

    /// Copy with a different display name.
    pub fn renamed(&self, name: impl Into<String>) -> SymmetricDiagram {
        SymmetricDiagram {
            name: name.into(),
            ..self.clone()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Arc {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StrandClass {
    AA,
    AB,
    BB,
}

impl std::fmt::Display for StrandClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            StrandClass::AA => "aa",
            StrandClass::AB => "ab",
            StrandClass::BB => "bb",
        })
    }
}

/// Orientation used for crossing signs.
///
/// `Traversal` orients the whole knot along the segment labels. `Ab` keeps
/// arc `a` in traversal direction and reverses arc `b`, so both arcs run from
/// `F0` to `F1`; on an `ab` crossing the two signs differ by `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignMode {
    Traversal,
    Ab,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignError {
    #[error("crossing {crossing} is class {class}, ab sign undefined")]
    NotAb { crossing: usize, class: StrandClass },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcClassification {
    /// Arc of each segment, indexed by `segment - 1`.
    pub segment_arcs: Vec<Arc>,
    /// Strand class of each crossing, indexed by `id - 1`.
    pub crossing_classes: Vec<StrandClass>,
    pub on_axis: Vec<bool>,
}

pub fn classify_strands(d: &SymmetricDiagram) -> ArcClassification {
    ArcClassification {
        segment_arcs: (1..=d.segment_count()).map(|s| d.arc_of(s)).collect(),
        crossing_classes: (1..=d.n()).map(|c| d.strand_class(c)).collect(),
        on_axis: (1..=d.n()).map(|c| d.is_on_axis(c)).collect(),
    }
}

// ---------------------------------------------------------------------------
// File format

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("crossings[{index}]: duplicate crossing id {id}")]
    DuplicateCrossing { index: usize, id: usize },
    #[error("{field}: segment label {label} outside 1..={max}")]
    SegmentOutOfRange { field: String, label: i64, max: usize },
    #[error("{field}: crossing id {id} outside 1..={max}")]
    CrossingOutOfRange { field: String, id: i64, max: usize },
}

impl ParseError {
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Json { .. } => "parse.json",
            ParseError::Field { .. } => "parse.field",
            ParseError::DuplicateCrossing { .. } => "parse.duplicate-crossing",
            ParseError::SegmentOutOfRange { .. } => "parse.segment-range",
            ParseError::CrossingOutOfRange { .. } => "parse.crossing-range",
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDiagram {
    name: String,
    n: i64,
    crossings: Vec<RawCrossing>,
    on_axis: Vec<i64>,
    involution: Vec<[i64; 2]>,
    h_side_at_start: Side,
    h_side_at_end: Side,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCrossing {
    id: i64,
    pd: [i64; 4],
}

/// Largest crossing count accepted by the parser.
pub const MAX_CROSSINGS: usize = 1 << 20;

/// Parses the JSON diagram format into an unvalidated candidate.
pub fn parse(text: &str) -> Result<DiagramCandidate, ParseError> {
    let raw: RawDiagram = serde_json::from_str(text).map_err(|e| {
        let mut message = e.to_string();
        if let Some(at) = message.rfind(" at line ") {
            message.truncate(at);
        }
        ParseError::Json {
            line: e.line(),
            column: e.column(),
            message,
        }
    })?;
    if raw.n < 1 {
        return Err(ParseError::Field {
            field: "n".into(),
            message: format!("crossing count must be at least 1, got {}", raw.n),
        });
    }
    if raw.n > MAX_CROSSINGS as i64 {
        return Err(ParseError::Field {
            field: "n".into(),
            message: format!("crossing count {} exceeds {MAX_CROSSINGS}", raw.n),
        });
    }
    let n = raw.n as usize;
    let max_label = 2 * n + 2;
    let crossing_id = |field: String, id: i64| -> Result<usize, ParseError> {
        if id < 1 || id as u64 > n as u64 {
            Err(ParseError::CrossingOutOfRange { field, id, max: n })
        } else {
            Ok(id as usize)
        }
    };

    let mut seen = BTreeSet::new();
    let mut crossings = Vec::with_capacity(raw.crossings.len());
    for (index, rc) in raw.crossings.iter().enumerate() {
        let id = crossing_id(format!("crossings[{index}].id"), rc.id)?;
        if !seen.insert(id) {
            return Err(ParseError::DuplicateCrossing { index, id });
        }
        let mut pd = [0usize; 4];
        for (k, &label) in rc.pd.iter().enumerate() {
            if label < 1 || label as u64 > max_label as u64 {
                return Err(ParseError::SegmentOutOfRange {
                    field: format!("crossings[{index}].pd[{k}]"),
                    label,
                    max: max_label,
                });
            }
            pd[k] = label as usize;
        }
        crossings.push(Crossing { id, pd });
    }
    let on_axis = raw
        .on_axis
        .iter()
        .enumerate()
        .map(|(k, &id)| crossing_id(format!("on_axis[{k}]"), id))
        .collect::<Result<Vec<_>, _>>()?;
    let involution = raw
        .involution
        .iter()
        .enumerate()
        .map(|(k, &[x, y])| {
            Ok((
                crossing_id(format!("involution[{k}][0]"), x)?,
                crossing_id(format!("involution[{k}][1]"), y)?,
            ))
        })
        .collect::<Result<Vec<_>, ParseError>>()?;

    Ok(DiagramCandidate {
        name: raw.name,
        n,
        crossings,
        on_axis,
        involution,
        h_side_at_start: raw.h_side_at_start,
        h_side_at_end: raw.h_side_at_end,
    })
}

/// Canonical text form: crossings by id, sorted pairs, two-space indent.
pub fn serialize(d: &SymmetricDiagram) -> String {
    let mut out = String::new();
    let name = serde_json::to_string(d.name()).expect("string serialization");
    out.push_str("{\n");
    let _ = writeln!(out, "  \"name\": {name},");
    let _ = writeln!(out, "  \"n\": {},", d.n());
    out.push_str("  \"crossings\": [\n");
    for (k, c) in d.crossings().iter().enumerate() {
        let sep = if k + 1 == d.n() { "" } else { "," };
        let [a, b, c2, e] = c.pd;
        let _ = writeln!(
            out,
            "    {{ \"id\": {}, \"pd\": [{a}, {b}, {c2}, {e}] }}{sep}",
            c.id
        );
    }
    out.push_str("  ],\n");
    let axis: Vec<String> = d.on_axis().iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "  \"on_axis\": [{}],", axis.join(", "));
    let pairs = d.pairs();
    if pairs.is_empty() {
        out.push_str("  \"involution\": [],\n");
    } else {
        out.push_str("  \"involution\": [\n");
        for (k, (x, y)) in pairs.iter().enumerate() {
            let sep = if k + 1 == pairs.len() { "" } else { "," };
            let _ = writeln!(out, "    [{x}, {y}]{sep}");
        }
        out.push_str("  ],\n");
    }
    let _ = writeln!(out, "  \"h_side_at_start\": \"{}\",", d.h_side_at_start());
    let _ = writeln!(out, "  \"h_side_at_end\": \"{}\"", d.h_side_at_end());
    out.push_str("}\n");
    out
}

// ---------------------------------------------------------------------------
// Structural validation

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("expected {expected} crossings, found {found}")]
    CrossingCount { expected: usize, found: usize },
    #[error("crossing id {id} is missing")]
    MissingCrossing { id: usize },
    #[error("crossing id {id} outside 1..={n}")]
    CrossingIdOutOfRange { id: usize, n: usize },
    #[error("crossing id {id} appears more than once")]
    DuplicateCrossing { id: usize },
    #[error("crossing {crossing}: segment label {label} outside 1..={max}")]
    LabelOutOfRange { crossing: usize, label: usize, max: usize },
    #[error("crossing {crossing}: under-strand {pd:?} is not a traversal step (slot 3 must follow slot 1)")]
    UnderStrandIncoherent { crossing: usize, pd: [usize; 4] },
    #[error("crossing {crossing}: over-strand {pd:?} is not a traversal step (slots 2 and 4 must be consecutive)")]
    OverStrandIncoherent { crossing: usize, pd: [usize; 4] },
    #[error("segment {segment} appears {found} times, expected {expected}")]
    SegmentMultiplicity {
        segment: usize,
        expected: usize,
        found: usize,
    },
    #[error("crossing {crossing} is paired with itself; list it under on_axis instead")]
    SelfPaired { crossing: usize },
    #[error("crossing {crossing} is assigned more than one involution image")]
    InvolutionConflict { crossing: usize },
    #[error("crossing {crossing} has no involution image (neither on axis nor paired)")]
    InvolutionIncomplete { crossing: usize },
    #[error("crossings {crossing} and {image} are paired but have signs {sign} and {image_sign}")]
    SignMismatch {
        crossing: usize,
        image: usize,
        sign: i32,
        image_sign: i32,
    },
    #[error("crossing {crossing}: inversion of {pd:?} gives {expected:?}, but its image {image} is {found:?}")]
    NotSymmetric {
        crossing: usize,
        image: usize,
        pd: [usize; 4],
        expected: [usize; 4],
        found: [usize; 4],
    },
}

impl ValidationError {
    pub fn code(&self) -> &'static str {
        match self {
            ValidationError::CrossingCount { .. } => "validate.crossing-count",
            ValidationError::MissingCrossing { .. } => "validate.missing-crossing",
            ValidationError::CrossingIdOutOfRange { .. } => "validate.crossing-range",
            ValidationError::DuplicateCrossing { .. } => "validate.duplicate-crossing",
            ValidationError::LabelOutOfRange { .. } => "validate.segment-range",
            ValidationError::UnderStrandIncoherent { .. } => "validate.traversal",
            ValidationError::OverStrandIncoherent { .. } => "validate.traversal",
            ValidationError::SegmentMultiplicity { .. } => "validate.segment-multiplicity",
            ValidationError::SelfPaired { .. } => "validate.self-paired",
            ValidationError::InvolutionConflict { .. } => "validate.involution",
            ValidationError::InvolutionIncomplete { .. } => "validate.involution",
            ValidationError::SignMismatch { .. } => "validate.symmetry-sign",
            ValidationError::NotSymmetric { .. } => "validate.symmetry",
        }
    }
}

/// Checks every structural invariant and returns the validated diagram.
pub fn validate(candidate: DiagramCandidate) -> Result<SymmetricDiagram, ValidationError> {
    let n = candidate.n;
    let total = 2 * n + 2;
    if candidate.crossings.len() != n {
        return Err(ValidationError::CrossingCount {
            expected: n,
            found: candidate.crossings.len(),
        });
    }
    let mut slots: Vec<Option<Crossing>> = vec![None; n];
    let in_range = |id: usize| -> Result<usize, ValidationError> {
        if id == 0 || id > n {
            Err(ValidationError::CrossingIdOutOfRange { id, n })
        } else {
            Ok(id - 1)
        }
    };
    for c in candidate.crossings {
        let k = in_range(c.id)?;
        if slots[k].is_some() {
            return Err(ValidationError::DuplicateCrossing { id: c.id });
        }
        if let Some(&label) = c.pd.iter().find(|&&s| s == 0 || s > total) {
            return Err(ValidationError::LabelOutOfRange {
                crossing: c.id,
                label,
                max: total,
            });
        }
        slots[k] = Some(c);
    }
    let mut crossings = Vec::with_capacity(n);
    for (k, c) in slots.into_iter().enumerate() {
        crossings.push(c.ok_or(ValidationError::MissingCrossing { id: k + 1 })?);
    }

    let at_fixed_point = |s: usize| s == n + 1 || s == total;
    for c in &crossings {
        let [a, b, cc, d] = c.pd;
        if cc != a + 1 || at_fixed_point(a) {
            return Err(ValidationError::UnderStrandIncoherent {
                crossing: c.id,
                pd: c.pd,
            });
        }
        let lo = b.min(d);
        if b.abs_diff(d) != 1 || at_fixed_point(lo) {
            return Err(ValidationError::OverStrandIncoherent {
                crossing: c.id,
                pd: c.pd,
            });
        }
    }

    let mut count = vec![0usize; total + 1];
    for c in &crossings {
        for &s in &c.pd {
            count[s] += 1;
        }
    }
    for s in 1..=total {
        let expected = if s == 1 || s == n + 1 || s == n + 2 || s == total {
            1
        } else {
            2
        };
        if count[s] != expected {
            return Err(ValidationError::SegmentMultiplicity {
                segment: s,
                expected,
                found: count[s],
            });
        }
    }

    let mut image: Vec<Option<usize>> = vec![None; n];
    let mut assign = |c: usize, to: usize| -> Result<(), ValidationError> {
        in_range(c)?;
        in_range(to)?;
        if image[c - 1].is_some() {
            return Err(ValidationError::InvolutionConflict { crossing: c });
        }
        image[c - 1] = Some(to);
        Ok(())
    };
    for &c in &candidate.on_axis {
        assign(c, c)?;
    }
    for &(x, y) in &candidate.involution {
        if x == y {
            return Err(ValidationError::SelfPaired { crossing: x });
        }
        assign(x, y)?;
        assign(y, x)?;
    }
    let image = image
        .into_iter()
        .enumerate()
        .map(|(k, im)| im.ok_or(ValidationError::InvolutionIncomplete { crossing: k + 1 }))
        .collect::<Result<Vec<_>, _>>()?;

    for c in &crossings {
        let im = &crossings[image[c.id - 1] - 1];
        if c.traversal_sign() != im.traversal_sign() {
            return Err(ValidationError::SignMismatch {
                crossing: c.id,
                image: im.id,
                sign: c.traversal_sign(),
                image_sign: im.traversal_sign(),
            });
        }
        let expected = inverted_pd(c.pd, n);
        if expected != im.pd {
            return Err(ValidationError::NotSymmetric {
                crossing: c.id,
                image: im.id,
                pd: c.pd,
                expected,
                found: im.pd,
            });
        }
    }

    Ok(SymmetricDiagram {
        name: candidate.name,
        n,
        crossings,
        image,
        h_side_at_start: candidate.h_side_at_start,
        h_side_at_end: candidate.h_side_at_end,
    })
}

/// `parse` followed by `validate`.
pub fn load(text: &str) -> Result<SymmetricDiagram, crate::Error> {
    Ok(validate(parse(text)?)?)
}
