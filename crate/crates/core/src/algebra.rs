//! Equivariant connected sum and mirror image of symmetric diagrams.

use crate::diagram::{validate, Crossing, DiagramCandidate, SymmetricDiagram};
use crate::faces::analyze_faces;
use crate::Error;

/// The same knot traversed backwards: labels `j -> 2n+3-j`, both h sides
/// flipped. Crossing tuples are re-read from the new incoming under-strand.
fn reversed(d: &SymmetricDiagram) -> DiagramCandidate {
    let mut cand = d.to_candidate();
    for c in &mut cand.crossings {
        let s = |j: usize| d.segment_mirror(j);
        let [p1, p2, p3, p4] = c.pd;
        c.pd = [s(p3), s(p4), s(p1), s(p2)];
    }
    cand.h_side_at_start = d.h_side_at_start().opposite();
    cand.h_side_at_end = d.h_side_at_end().opposite();
    cand
}

/// Splices `d2` into `d1` at the fixed point `F1` of `d1`, which becomes
/// `F0` of `d2`. Arc `a` of the result is arc `a` of `d1` followed by arc `a`
/// of `d2`; arc `b` likewise.
///
/// When `d2` leaves its `F0` on the opposite side from where `d1` arrives at
/// its `F1`, the summand is first relabelled along the reversed traversal so
/// both axes meet in the shaded surface.
pub fn connect_sum(d1: &SymmetricDiagram, d2: &SymmetricDiagram) -> Result<SymmetricDiagram, Error> {
    analyze_faces(d1)?;
    analyze_faces(d2)?;
    let second = if d1.h_side_at_end() == d2.h_side_at_start() {
        d2.to_candidate()
    } else {
        validate(reversed(d2))?.to_candidate()
    };
    let (n1, n2) = (d1.n(), d2.n());
    let map1 = |j: usize| if j <= n1 + 1 { j } else { j + 2 * n2 };
    let map2 = |j: usize| n1 + j;

    let mut crossings: Vec<Crossing> = d1
        .crossings()
        .iter()
        .map(|c| Crossing::new(c.id, c.pd.map(map1)))
        .collect();
    crossings.extend(
        second
            .crossings
            .iter()
            .map(|c| Crossing::new(c.id + n1, c.pd.map(map2))),
    );
    let mut on_axis = d1.on_axis();
    on_axis.extend(second.on_axis.iter().map(|&c| c + n1));
    let mut involution = d1.pairs();
    involution.extend(second.involution.iter().map(|&(x, y)| (x + n1, y + n1)));

    let sum = validate(DiagramCandidate {
        name: format!("{} # {}", d1.name(), d2.name()),
        n: n1 + n2,
        crossings,
        on_axis,
        involution,
        h_side_at_start: d1.h_side_at_start(),
        h_side_at_end: second.h_side_at_end,
    })?;
    analyze_faces(&sum)?;
    Ok(sum)
}

/// Switches every crossing in place, keeping the planar picture, the axis
/// and the direction.
pub fn mirror(d: &SymmetricDiagram) -> SymmetricDiagram {
    let mut cand = d.to_candidate();
    for c in &mut cand.crossings {
        *c = c.switched();
    }
    cand.name = format!("m{}", d.name());
    validate(cand).expect("switching all crossings preserves validity")
}
