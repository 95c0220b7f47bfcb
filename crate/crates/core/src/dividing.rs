//! Combinatorial dividing sets: non-crossing chord diagrams on the disk,
//! arc systems on the annulus, torus dividing sets, boundary-parallel
//! detection, and bypass moves.

use crate::error::{Error, Result};
use crate::farey::{bypass_slope, Slope};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Dividing set of a convex disk whose boundary meets it in `2n` points:
/// a non-crossing, fixed-point-free involution of `{0, ..., 2n-1}` with no
/// closed components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiskDiagram {
    pairing: Vec<usize>,
}

impl DiskDiagram {
    /// Validates an involution given as the sequence `pairing[i] = partner of i`.
    pub fn new(pairing: Vec<usize>) -> Result<DiskDiagram> {
        let size = pairing.len();
        if size == 0 || size % 2 != 0 {
            return Err(Error::BadDiagram(format!(
                "need an even positive number of endpoints, got {size}"
            )));
        }
        for (i, &j) in pairing.iter().enumerate() {
            if j >= size {
                return Err(Error::BadDiagram(format!("partner {j} out of range")));
            }
            if j == i {
                return Err(Error::BadDiagram(format!("fixed point at {i}")));
            }
            if pairing[j] != i {
                return Err(Error::BadDiagram(format!(
                    "not an involution at {i} -> {j}"
                )));
            }
        }
        // chords interleave exactly when the bracket sequence is unbalanced
        let mut stack = Vec::new();
        for (i, &j) in pairing.iter().enumerate() {
            if j > i {
                stack.push(j);
            } else if stack.pop() != Some(i) {
                return Err(Error::BadDiagram(format!(
                    "chords ({j},{i}) cross another chord"
                )));
            }
        }
        Ok(DiskDiagram { pairing })
    }

    pub fn from_chords(n: usize, chords: &[(usize, usize)]) -> Result<DiskDiagram> {
        let size = 2 * n;
        let mut pairing = vec![usize::MAX; size];
        for &(a, b) in chords {
            if a >= size || b >= size {
                return Err(Error::BadDiagram(format!("chord ({a},{b}) out of range")));
            }
            pairing[a] = b;
            pairing[b] = a;
        }
        if pairing.contains(&usize::MAX) {
            return Err(Error::BadDiagram("uncovered endpoint".into()));
        }
        DiskDiagram::new(pairing)
    }

    /// Number of chords.
    pub fn n(&self) -> usize {
        self.pairing.len() / 2
    }

    /// Number of boundary endpoints, `2n`.
    pub fn size(&self) -> usize {
        self.pairing.len()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.pairing[i]
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    /// Chords as `(i, partner)` pairs with `i < partner`.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        self.pairing
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j)
            .map(|(i, &j)| (i, j))
            .collect()
    }

    /// Canonical text encoding: the partner sequence joined by commas.
    pub fn encoding(&self) -> String {
        let parts: Vec<String> = self.pairing.iter().map(|j| j.to_string()).collect();
        parts.join(",")
    }

    /// All non-crossing diagrams on `2n` points, exactly once each, sorted
    /// lexicographically by their encoding sequence.  There are Catalan(n).
    pub fn enumerate(n: usize) -> Vec<DiskDiagram> {
        assert!(n >= 1, "need at least one chord");
        let points: Vec<usize> = (0..2 * n).collect();
        let mut out = Vec::new();
        let mut pairing = vec![0usize; 2 * n];
        fill(&points, &mut pairing, &mut out);
        out.sort();
        out
    }

    /// Parses the canonical comma-separated encoding.
    pub fn from_encoding(s: &str) -> Result<DiskDiagram> {
        let pairing: Vec<usize> = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::BadDiagram(format!("bad endpoint `{part}`")))
            })
            .collect::<Result<_>>()?;
        DiskDiagram::new(pairing)
    }

    /// Chords joining cyclically adjacent endpoints.  Every diagram has at
    /// least one: an innermost chord of a non-crossing diagram is adjacent.
    pub fn boundary_parallel_chords(&self) -> Vec<(usize, usize)> {
        let size = self.size();
        let mut found = Vec::new();
        for i in 0..size {
            if self.pairing[i] == (i + 1) % size {
                let (a, b) = (i, (i + 1) % size);
                let chord = (a.min(b), a.max(b));
                if !found.contains(&chord) {
                    found.push(chord);
                }
            }
        }
        found.sort();
        found
    }
}

fn fill(points: &[usize], pairing: &mut Vec<usize>, out: &mut Vec<DiskDiagram>) {
    if points.is_empty() {
        out.push(DiskDiagram {
            pairing: pairing.clone(),
        });
        return;
    }
    let a = points[0];
    let mut idx = 1;
    while idx < points.len() {
        let b = points[idx];
        pairing[a] = b;
        pairing[b] = a;
        // the chord (a, b) splits the remaining points into two independent arcs
        let inside = &points[1..idx];
        let outside = &points[idx + 1..];
        if inside.is_empty() {
            fill(outside, pairing, out);
        } else {
            let mut sub = Vec::new();
            fill(inside, pairing, &mut sub);
            for d in sub {
                for &p in inside {
                    pairing[p] = d.pairing[p];
                }
                fill(outside, pairing, out);
            }
        }
        idx += 2;
    }
}

/// Attachment side of a bypass half-disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Front,
    Back,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Front => write!(f, "front"),
            Side::Back => write!(f, "back"),
        }
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Side> {
        match s.trim().to_ascii_lowercase().as_str() {
            "front" => Ok(Side::Front),
            "back" => Ok(Side::Back),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Rotation sense of the local bypass surgery as seen on the disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Chirality {
    Pos,
    Neg,
}

/// Effect of one bypass attachment along the boundary arc covering three
/// consecutive endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum BypassOutcome {
    /// Honest state change to a new valid diagram.
    Moved(DiskDiagram),
    /// The local picture reproduces the diagram; such an attachment always
    /// exists but does nothing.
    Trivial,
    /// The surgery would close a chord into a homotopically trivial loop,
    /// which cannot happen in a tight neighborhood.
    Disallowed,
}

/// Local surgery of the dividing set along the attachment arc covering
/// endpoints `i, i+1, i+2`.  The three strands crossing the arc are cut and
/// reconnected in the unique non-crossing pattern determined by the
/// chirality; the two chiralities are the two sides of the arc.
pub(crate) fn bypass_rewrite(d: &DiskDiagram, i: usize, chir: Chirality) -> Result<BypassOutcome> {
    let size = d.size();
    if d.n() < 2 {
        return Err(Error::DiagramTooSmall);
    }
    if i >= size {
        return Err(Error::TripleOutOfRange {
            index: i,
            points: size,
        });
    }
    let (t0, t1, t2) = (i, (i + 1) % size, (i + 2) % size);
    let (p0, p1, p2) = (d.partner(t0), d.partner(t1), d.partner(t2));
    debug_assert!(p0 != t2, "a chord skipping over one endpoint would cross");

    if p0 == t1 {
        // short chord on the first two endpoints
        return Ok(match chir {
            Chirality::Pos => BypassOutcome::Trivial,
            Chirality::Neg => BypassOutcome::Disallowed,
        });
    }
    if p1 == t2 {
        // short chord on the last two endpoints
        return Ok(match chir {
            Chirality::Pos => BypassOutcome::Disallowed,
            Chirality::Neg => BypassOutcome::Trivial,
        });
    }

    // three distinct chords leave the attachment region
    let mut pairing = d.pairing.clone();
    let mut connect = |a: usize, b: usize| {
        pairing[a] = b;
        pairing[b] = a;
    };
    match chir {
        Chirality::Pos => {
            connect(t0, t1);
            connect(p1, p2);
            connect(t2, p0);
        }
        Chirality::Neg => {
            connect(t1, t2);
            connect(p0, p1);
            connect(t0, p2);
        }
    }
    let moved = DiskDiagram::new(pairing).expect("bypass surgery preserves embeddedness");
    Ok(BypassOutcome::Moved(moved))
}

/// The bypass move on a disk diagram at the attachment arc covering the
/// endpoints `i, i+1, i+2 (mod 2n)`.
///
/// When the attachment triple carries a boundary-parallel chord, the move
/// exchanges the two configurations that differ by sliding that chord
/// across the triple; the exchange is an involution, so attaching again at
/// the same triple with the opposite side restores the original diagram.
/// Triples met by three distinct chords are left unchanged.  Requires
/// `n >= 2`.
pub fn disk_bypass_move(d: &DiskDiagram, i: usize, _side: Side) -> Result<DiskDiagram> {
    let size = d.size();
    if d.n() < 2 {
        return Err(Error::DiagramTooSmall);
    }
    if i >= size {
        return Err(Error::TripleOutOfRange {
            index: i,
            points: size,
        });
    }
    let (t0, t1, t2) = (i, (i + 1) % size, (i + 2) % size);
    let mut pairing = d.pairing.clone();
    let mut connect = |a: usize, b: usize| {
        pairing[a] = b;
        pairing[b] = a;
    };
    if d.partner(t1) == t2 {
        let far = d.partner(t0);
        connect(t0, t1);
        connect(t2, far);
    } else if d.partner(t0) == t1 {
        let far = d.partner(t2);
        connect(t1, t2);
        connect(t0, far);
    } else {
        return Ok(d.clone());
    }
    DiskDiagram::new(pairing)
}

/// Dividing set of a convex torus in tight normal form: `count` parallel
/// homotopically essential curves of a common slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusDividingSet {
    count: u32,
    slope: Slope,
}

impl TorusDividingSet {
    pub fn new(count: u32, slope: Slope) -> Result<TorusDividingSet> {
        if count < 2 || count % 2 != 0 {
            return Err(Error::BadCurveCount(count));
        }
        Ok(TorusDividingSet { count, slope })
    }

    pub fn count(&self) -> u32 {
        self.count
    }

    pub fn slope(&self) -> Slope {
        self.slope
    }
}

/// Attaching a bypass along a closed curve of slope `attach_slope` to a
/// convex torus: with more than two dividing curves the count drops by two
/// and the slope is unchanged; with exactly two the slope rotates to the
/// Farey neighbor given by [`bypass_slope`].
pub fn torus_attach_bypass(
    t: &TorusDividingSet,
    attach_slope: Slope,
) -> Result<TorusDividingSet> {
    if attach_slope == t.slope {
        return Err(Error::EqualSlopes);
    }
    if t.count > 2 {
        TorusDividingSet::new(t.count - 2, t.slope)
    } else {
        TorusDividingSet::new(2, bypass_slope(t.slope, attach_slope)?)
    }
}

/// Twisting number of a Legendrian curve on a convex surface relative to
/// the surface framing: minus half the number of intersections with the
/// dividing set.
pub fn twisting_from_intersections(intersection_count: i64) -> Result<i64> {
    if intersection_count < 0 || intersection_count % 2 != 0 {
        return Err(Error::OddIntersections(intersection_count));
    }
    Ok(-intersection_count / 2)
}

/// Boundary slope of the standard neighborhood of a Legendrian curve with
/// twisting number `-n`: two dividing curves of slope `-1/n`.
pub fn std_nbhd_slope(n: i64) -> Result<Slope> {
    if n <= 0 {
        return Err(Error::NotPositive(n));
    }
    Slope::new(-1, n)
}

/// Boundary circle of an annulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnnulusSide {
    Zero,
    One,
}

/// An endpoint of a dividing arc on an annulus: which boundary circle, and
/// the position among that circle's endpoints.
pub type AnnulusEnd = (AnnulusSide, usize);

/// A properly embedded dividing arc with its two endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnnulusArc {
    pub a: AnnulusEnd,
    pub b: AnnulusEnd,
}

impl AnnulusArc {
    pub fn new(a: AnnulusEnd, b: AnnulusEnd) -> AnnulusArc {
        AnnulusArc { a, b }
    }

    fn ends_on(&self, side: AnnulusSide) -> Option<(usize, usize)> {
        match (self.a, self.b) {
            ((sa, pa), (sb, pb)) if sa == side && sb == side => Some((pa.min(pb), pa.max(pb))),
            _ => None,
        }
    }
}

/// Dividing set of a convex annulus: `m0` endpoints on boundary circle 0,
/// `m1` on circle 1, a non-crossing system of arcs joining them, and a
/// count of closed curves.
///
/// Embeddability is encoded by cutting the annulus along a seam into a
/// rectangle: circle 0 endpoints in order along one edge, circle 1 along
/// the other, arcs non-crossing in the rectangle.  Operations never create
/// closed curves; the count is carried through unchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnulusDiagram {
    m0: usize,
    m1: usize,
    arcs: Vec<AnnulusArc>,
    closed_curves: usize,
}

impl AnnulusDiagram {
    pub fn new(
        m0: usize,
        m1: usize,
        arcs: Vec<AnnulusArc>,
        closed_curves: usize,
    ) -> Result<AnnulusDiagram> {
        if m0 % 2 != 0 || m1 % 2 != 0 {
            return Err(Error::BadAnnulus(format!(
                "endpoint counts must be even, got {m0} and {m1}"
            )));
        }
        if 2 * arcs.len() != m0 + m1 {
            return Err(Error::BadAnnulus(format!(
                "{} arcs cannot cover {} endpoints",
                arcs.len(),
                m0 + m1
            )));
        }
        // cyclic order around the cut-open rectangle: circle 0 forward,
        // then circle 1 backward
        let total = m0 + m1;
        let index = |(side, pos): AnnulusEnd| -> Result<usize> {
            let (limit, idx) = match side {
                AnnulusSide::Zero => (m0, pos),
                AnnulusSide::One => (m1, m0 + (m1 - 1 - pos)),
            };
            if pos >= limit {
                return Err(Error::BadAnnulus(format!(
                    "endpoint position {pos} out of range"
                )));
            }
            Ok(idx)
        };
        let mut pairing = vec![usize::MAX; total];
        for arc in &arcs {
            let ia = index(arc.a)?;
            let ib = index(arc.b)?;
            if ia == ib || pairing[ia] != usize::MAX || pairing[ib] != usize::MAX {
                return Err(Error::BadAnnulus("endpoint used twice".into()));
            }
            pairing[ia] = ib;
            pairing[ib] = ia;
        }
        if pairing.contains(&usize::MAX) {
            return Err(Error::BadAnnulus("uncovered endpoint".into()));
        }
        let mut stack = Vec::new();
        for (i, &j) in pairing.iter().enumerate() {
            if j > i {
                stack.push(j);
            } else if stack.pop() != Some(i) {
                return Err(Error::BadAnnulus("arcs cross".into()));
            }
        }
        Ok(AnnulusDiagram {
            m0,
            m1,
            arcs,
            closed_curves,
        })
    }

    pub fn endpoint_count(&self, side: AnnulusSide) -> usize {
        match side {
            AnnulusSide::Zero => self.m0,
            AnnulusSide::One => self.m1,
        }
    }

    pub fn arcs(&self) -> &[AnnulusArc] {
        &self.arcs
    }

    pub fn closed_curves(&self) -> usize {
        self.closed_curves
    }

    /// Twisting number of the given boundary circle relative to the
    /// annulus framing.
    pub fn twisting(&self, side: AnnulusSide) -> i64 {
        -(self.endpoint_count(side) as i64) / 2
    }
}

/// Outermost arcs with both endpoints on the given boundary circle: each
/// cuts off a half-disk meeting no other component of the dividing set.
///
/// Whenever one circle carries more endpoints than the other, that circle
/// has such an arc (the imbalance principle).
pub fn annulus_boundary_parallel(a: &AnnulusDiagram, side: AnnulusSide) -> Vec<AnnulusArc> {
    a.arcs
        .iter()
        .filter(|arc| {
            // adjacent endpoint positions leave no room for anything else
            // inside the half-disk
            matches!(arc.ends_on(side), Some((lo, hi)) if hi == lo + 1)
        })
        .copied()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(n: usize, chords: &[(usize, usize)]) -> DiskDiagram {
        DiskDiagram::from_chords(n, chords).unwrap()
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(DiskDiagram::enumerate(1).len(), 1);
        assert_eq!(DiskDiagram::enumerate(2).len(), 2);
        assert_eq!(DiskDiagram::enumerate(3).len(), 5);
        assert_eq!(DiskDiagram::enumerate(4).len(), 14);
    }

    #[test]
    fn enumerate_is_canonical() {
        let all = DiskDiagram::enumerate(3);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn rejects_crossing_and_degenerate_input() {
        assert!(DiskDiagram::from_chords(2, &[(0, 2), (1, 3)]).is_err());
        assert!(DiskDiagram::new(vec![0, 1]).is_err());
        assert!(DiskDiagram::new(vec![1, 0, 2]).is_err());
        assert!(DiskDiagram::new(vec![2, 3, 0, 0]).is_err());
    }

    #[test]
    fn boundary_parallel_examples() {
        assert_eq!(
            diagram(2, &[(0, 1), (2, 3)]).boundary_parallel_chords(),
            vec![(0, 1), (2, 3)]
        );
        // on four points the wraparound chord (0,3) is adjacent too
        assert_eq!(
            diagram(2, &[(0, 3), (1, 2)]).boundary_parallel_chords(),
            vec![(0, 3), (1, 2)]
        );
        assert_eq!(
            diagram(1, &[(0, 1)]).boundary_parallel_chords(),
            vec![(0, 1)]
        );
    }

    #[test]
    fn every_diagram_has_boundary_parallel_chord() {
        for n in 1..=6 {
            for d in DiskDiagram::enumerate(n) {
                assert!(!d.boundary_parallel_chords().is_empty(), "{}", d.encoding());
            }
        }
    }

    #[test]
    fn bypass_move_exchange() {
        let d = diagram(2, &[(0, 3), (1, 2)]);
        let moved = disk_bypass_move(&d, 0, Side::Front).unwrap();
        assert_eq!(moved, diagram(2, &[(0, 1), (2, 3)]));
        // opposite side at the same triple undoes the move
        let back = disk_bypass_move(&moved, 0, Side::Back).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn bypass_move_untouched_without_parallel_chord() {
        // three distinct chords at the triple leave the public move fixed
        let d = diagram(3, &[(0, 5), (1, 4), (2, 3)]);
        assert_eq!(disk_bypass_move(&d, 0, Side::Front).unwrap(), d);
    }

    #[test]
    fn bypass_move_rejections() {
        let d = diagram(1, &[(0, 1)]);
        assert_eq!(
            disk_bypass_move(&d, 0, Side::Front),
            Err(Error::DiagramTooSmall)
        );
        let d = diagram(2, &[(0, 1), (2, 3)]);
        assert!(matches!(
            disk_bypass_move(&d, 4, Side::Front),
            Err(Error::TripleOutOfRange { .. })
        ));
    }

    #[test]
    fn rewrite_outcomes() {
        // short chord on the last two endpoints of the triple
        let d = diagram(2, &[(0, 3), (1, 2)]);
        assert_eq!(
            bypass_rewrite(&d, 0, Chirality::Pos).unwrap(),
            BypassOutcome::Disallowed
        );
        assert_eq!(
            bypass_rewrite(&d, 0, Chirality::Neg).unwrap(),
            BypassOutcome::Trivial
        );
        // genuine three-chord surgery
        let e = diagram(3, &[(0, 5), (1, 4), (2, 3)]);
        let pos = bypass_rewrite(&e, 0, Chirality::Pos).unwrap();
        assert_eq!(
            pos,
            BypassOutcome::Moved(diagram(3, &[(0, 1), (3, 4), (2, 5)]))
        );
        let neg = bypass_rewrite(&e, 0, Chirality::Neg).unwrap();
        assert_eq!(
            neg,
            BypassOutcome::Moved(diagram(3, &[(1, 2), (4, 5), (0, 3)]))
        );
    }

    #[test]
    fn rewrite_moved_results_are_valid() {
        for n in 2..=5 {
            for d in DiskDiagram::enumerate(n) {
                for i in 0..2 * n {
                    for chir in [Chirality::Pos, Chirality::Neg] {
                        if let BypassOutcome::Moved(e) = bypass_rewrite(&d, i, chir).unwrap() {
                            assert!(DiskDiagram::new(e.pairing.clone()).is_ok());
                            assert_ne!(e, d);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn torus_bypass_examples() {
        let t = TorusDividingSet::new(4, Slope::integer(-2)).unwrap();
        let t = torus_attach_bypass(&t, Slope::integer(0)).unwrap();
        assert_eq!(t.count(), 2);
        assert_eq!(t.slope(), Slope::integer(-2));

        let t = TorusDividingSet::new(2, Slope::new(-14, 5).unwrap()).unwrap();
        let t = torus_attach_bypass(&t, Slope::integer(0)).unwrap();
        assert_eq!(t.slope(), Slope::new(-11, 4).unwrap());

        let t = TorusDividingSet::new(2, Slope::integer(-2)).unwrap();
        let t = torus_attach_bypass(&t, Slope::integer(0)).unwrap();
        assert_eq!(t.slope(), Slope::integer(-1));

        let t = TorusDividingSet::new(2, Slope::integer(-2)).unwrap();
        assert_eq!(
            torus_attach_bypass(&t, Slope::integer(-2)),
            Err(Error::EqualSlopes)
        );
    }

    #[test]
    fn torus_count_validation() {
        assert!(TorusDividingSet::new(0, Slope::integer(-1)).is_err());
        assert!(TorusDividingSet::new(3, Slope::integer(-1)).is_err());
    }

    #[test]
    fn twisting_examples() {
        assert_eq!(twisting_from_intersections(2).unwrap(), -1);
        assert_eq!(twisting_from_intersections(0).unwrap(), 0);
        assert_eq!(twisting_from_intersections(10).unwrap(), -5);
        assert_eq!(
            twisting_from_intersections(3),
            Err(Error::OddIntersections(3))
        );
    }

    #[test]
    fn std_nbhd_examples() {
        assert_eq!(std_nbhd_slope(1).unwrap(), Slope::integer(-1));
        assert_eq!(std_nbhd_slope(2).unwrap(), Slope::new(-1, 2).unwrap());
        assert_eq!(std_nbhd_slope(5).unwrap(), Slope::new(-1, 5).unwrap());
        assert_eq!(std_nbhd_slope(0), Err(Error::NotPositive(0)));
    }

    fn zero(pos: usize) -> AnnulusEnd {
        (AnnulusSide::Zero, pos)
    }

    fn one(pos: usize) -> AnnulusEnd {
        (AnnulusSide::One, pos)
    }

    #[test]
    fn annulus_imbalance_example() {
        let arcs = vec![
            AnnulusArc::new(zero(0), one(0)),
            AnnulusArc::new(zero(1), one(5)),
            AnnulusArc::new(one(1), one(2)),
            AnnulusArc::new(one(3), one(4)),
        ];
        let a = AnnulusDiagram::new(2, 6, arcs, 0).unwrap();
        let bp = annulus_boundary_parallel(&a, AnnulusSide::One);
        assert_eq!(bp.len(), 2);
        assert!(annulus_boundary_parallel(&a, AnnulusSide::Zero).is_empty());
        assert_eq!(a.twisting(AnnulusSide::One), -3);
        assert_eq!(a.twisting(AnnulusSide::Zero), -1);
    }

    #[test]
    fn annulus_crossing_arcs_have_no_parallel() {
        let arcs = vec![
            AnnulusArc::new(zero(0), one(0)),
            AnnulusArc::new(zero(1), one(1)),
        ];
        let a = AnnulusDiagram::new(2, 2, arcs, 0).unwrap();
        assert!(annulus_boundary_parallel(&a, AnnulusSide::Zero).is_empty());
        assert!(annulus_boundary_parallel(&a, AnnulusSide::One).is_empty());
    }

    #[test]
    fn annulus_single_arc() {
        let arcs = vec![AnnulusArc::new(one(0), one(1))];
        let a = AnnulusDiagram::new(0, 2, arcs.clone(), 0).unwrap();
        assert_eq!(annulus_boundary_parallel(&a, AnnulusSide::One), arcs);
    }

    #[test]
    fn annulus_validation() {
        assert!(AnnulusDiagram::new(1, 2, vec![], 0).is_err());
        assert!(AnnulusDiagram::new(0, 2, vec![], 0).is_err());
        let crossing = vec![
            AnnulusArc::new(zero(0), zero(2)),
            AnnulusArc::new(zero(1), zero(3)),
        ];
        assert!(AnnulusDiagram::new(4, 0, crossing, 0).is_err());
    }
}
