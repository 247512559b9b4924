//! The doubled-circle spaces coding the half-plane partitions of the dense
//! circular tournament and the three-sector partitions of its third-turn
//! sibling.
//!
//! A flow point is an exact angle, doubled (carrying a bit) exactly when it
//! lies in the variant's boundary set: S ∪ (−S) for the two-part space,
//! S ∪ r(S) ∪ r⁻¹(S) for the three-part one, where S is the set of angles
//! with reduced denominator coprime to 6 and r rotates by a third turn.
//!
//! A flow point codes a partition: part 0 starts at the coded angle and the
//! parts proceed counterclockwise, each spanning one arc window. When a
//! partition boundary hits a point of S, the bit decides: label 0 places
//! the boundary point in the part starting there, label 1 in the part
//! ending there. Intervals [start, end] consist of the flow points strictly
//! between the endpoints together with (start, 1) and (end, 0); on finite
//! test families they realize exactly the equal-trace classes.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::circle::{CirclePlacement, TurnAngle};
use crate::{Error, Result};

/// Which doubled circle a point lives on.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum FlowVariant {
    /// Two half-turn parts.
    Hat,
    /// Three third-turn parts.
    Tilde,
}

impl FlowVariant {
    pub fn parts(self) -> usize {
        match self {
            FlowVariant::Hat => 2,
            FlowVariant::Tilde => 3,
        }
    }

    fn window(self) -> Ratio<i64> {
        Ratio::new(1, self.parts() as i64)
    }

    /// Whether an angle belongs to the variant's doubled set.
    pub fn is_doubled(self, base: TurnAngle) -> bool {
        match self {
            FlowVariant::Hat => {
                base.coprime_to_six() || base.sub(TurnAngle::new(1, 2).unwrap()).coprime_to_six()
            }
            FlowVariant::Tilde => {
                base.coprime_to_six()
                    || base.add(TurnAngle::new(1, 3).unwrap()).coprime_to_six()
                    || base.sub(TurnAngle::new(1, 3).unwrap()).coprime_to_six()
            }
        }
    }
}

/// A point of the doubled circle.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FlowPoint {
    variant: FlowVariant,
    base: TurnAngle,
    label: Option<u8>,
}

impl FlowPoint {
    /// The label must be present exactly when the base lies in the doubled
    /// set, and must be 0 or 1.
    pub fn new(variant: FlowVariant, base: TurnAngle, label: Option<u8>) -> Result<FlowPoint> {
        let doubled = variant.is_doubled(base);
        match (doubled, label) {
            (true, Some(l)) if l <= 1 => Ok(FlowPoint { variant, base, label }),
            (true, Some(l)) => Err(Error::InvalidInput(format!("label must be 0 or 1, got {l}"))),
            (true, None) => Err(Error::InvalidInput(format!(
                "angle {base} is doubled and needs a label"
            ))),
            (false, None) => Ok(FlowPoint { variant, base, label: None }),
            (false, Some(_)) => Err(Error::InvalidInput(format!(
                "angle {base} is not doubled and takes no label"
            ))),
        }
    }

    pub fn variant(&self) -> FlowVariant {
        self.variant
    }

    /// The natural projection to the circle.
    pub fn base(&self) -> TurnAngle {
        self.base
    }

    pub fn label(&self) -> Option<u8> {
        self.label
    }
}

/// An interval of the doubled circle, from `start` counterclockwise to
/// `end`. Both endpoints lie in the doubled set; their distance is at most
/// one arc window (exactly one window only for the two-part variant, where
/// single-point test families subdivide the circle into half-turn gaps).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Interval {
    variant: FlowVariant,
    start: TurnAngle,
    end: TurnAngle,
}

impl Interval {
    pub fn new(variant: FlowVariant, start: TurnAngle, end: TurnAngle) -> Result<Interval> {
        for t in [start, end] {
            if !variant.is_doubled(t) {
                return Err(Error::InvalidInput(format!(
                    "interval endpoint {t} is not in the doubled set"
                )));
            }
        }
        let d = end.sub(start);
        let window = variant.window();
        let ok = match variant {
            FlowVariant::Hat => d.numerator() != 0 && ratio_of(d) <= window,
            FlowVariant::Tilde => d.numerator() != 0 && ratio_of(d) < window,
        };
        if !ok {
            return Err(Error::InvalidInput(format!(
                "endpoints {start} and {end} are not within one arc step"
            )));
        }
        Ok(Interval { variant, start, end })
    }

    pub fn variant(&self) -> FlowVariant {
        self.variant
    }

    pub fn start(&self) -> TurnAngle {
        self.start
    }

    pub fn end(&self) -> TurnAngle {
        self.end
    }
}

fn ratio_of(t: TurnAngle) -> Ratio<i64> {
    Ratio::new(t.numerator(), t.denominator())
}

/// Membership of a flow point in an interval: the labeled copies
/// (start, 1) and (end, 0), plus everything projecting strictly between.
pub fn interval_membership(iv: &Interval, t: &FlowPoint) -> Result<bool> {
    if iv.variant != t.variant {
        return Err(Error::InvalidInput("interval and point live on different spaces".into()));
    }
    if t.base == iv.start {
        return Ok(t.label == Some(1));
    }
    if t.base == iv.end {
        return Ok(t.label == Some(0));
    }
    let window = iv.variant.window();
    let d1 = ratio_of(t.base.sub(iv.start));
    let d2 = ratio_of(iv.end.sub(t.base));
    Ok(d1 > Ratio::new(0, 1) && d1 < window && d2 > Ratio::new(0, 1) && d2 < window)
}

/// The partition trace of a flow point on a finite family: each point of
/// the family assigned to its part.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PartitionTrace {
    pub placement: CirclePlacement,
    pub parts: Vec<usize>,
}

/// Two-part coding: part 0 is [τ, τ + 1/2) counterclockwise, boundaries
/// resolved by the label.
pub fn partition_from_flowpoint(t: &FlowPoint, family: &CirclePlacement) -> Result<PartitionTrace> {
    if t.variant != FlowVariant::Hat {
        return Err(Error::InvalidInput("two-part coding needs a Hat point".into()));
    }
    trace(t, family)
}

/// Three-part coding: part j is [τ + j/3, τ + (j+1)/3), boundaries resolved
/// by the label.
pub fn partition_from_flowpoint_s3(
    t: &FlowPoint,
    family: &CirclePlacement,
) -> Result<PartitionTrace> {
    if t.variant != FlowVariant::Tilde {
        return Err(Error::InvalidInput("three-part coding needs a Tilde point".into()));
    }
    trace(t, family)
}

fn trace(t: &FlowPoint, family: &CirclePlacement) -> Result<PartitionTrace> {
    let p = t.variant.parts() as i64;
    let mut parts = Vec::with_capacity(family.len());
    for &x in family.points() {
        let d = ratio_of(x.sub(t.base)); // in [0, 1)
        let scaled = d * p; // in [0, p)
        let part = if scaled.is_integer() {
            // x sits on the partition boundary number `scaled`; every such x
            // lies in S, which forces the coded angle into the doubled set,
            // so the label is present by construction
            let b = scaled.to_integer() as usize;
            let label = t.label.expect("boundary hit implies a doubled coded angle");
            match label {
                0 => b,                                        // part starting here
                _ => (b + t.variant.parts() - 1) % t.variant.parts(), // part ending here
            }
        } else {
            scaled.floor().to_integer() as usize
        };
        parts.push(part);
    }
    Ok(PartitionTrace { placement: family.clone(), parts })
}

/// The basic open set around `t` determined by a finite family, as an
/// interval: the family and its antipodes subdivide the circle, and the
/// gap holding the point (sided by its label when it sits on a mark) is
/// the answer.
pub fn interval_from_basic_open(family: &CirclePlacement, t: &FlowPoint) -> Result<Interval> {
    if t.variant != FlowVariant::Hat {
        return Err(Error::InvalidInput("basic open intervals are built on the Hat space".into()));
    }
    if family.is_empty() {
        return Err(Error::InvalidInput("an empty family does not subdivide the circle".into()));
    }
    let mut marks: Vec<TurnAngle> = family.points().to_vec();
    let half = TurnAngle::new(1, 2).unwrap();
    marks.extend(family.points().iter().map(|&x| x.add(half)));
    marks.sort();
    marks.dedup();

    let pos = marks.iter().position(|&m| m == t.base);
    if let Some(i) = pos {
        let label = t.label.expect("marks lie in the doubled set");
        return if label == 1 {
            Interval::new(FlowVariant::Hat, marks[i], marks[(i + 1) % marks.len()])
        } else {
            Interval::new(FlowVariant::Hat, marks[(i + marks.len() - 1) % marks.len()], marks[i])
        };
    }
    // strictly inside a gap
    let after = marks.iter().position(|&m| m > t.base).unwrap_or(0);
    let start = marks[(after + marks.len() - 1) % marks.len()];
    let end = marks[after];
    Interval::new(FlowVariant::Hat, start, end)
}

/// The rotation action on flow points. Rotations by angles with
/// denominator coprime to 6 preserve the doubled sets and the label.
pub fn act_rotation(q: TurnAngle, t: &FlowPoint) -> Result<FlowPoint> {
    if !q.coprime_to_six() {
        return Err(Error::InvalidInput(format!(
            "rotation by {q} does not preserve the dense vertex set"
        )));
    }
    FlowPoint::new(t.variant, t.base.add(q), t.label)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn angle(n: i64, d: i64) -> TurnAngle {
        TurnAngle::new(n, d).unwrap()
    }

    fn family(points: &[(i64, i64)]) -> CirclePlacement {
        CirclePlacement::new(points.iter().map(|&(n, d)| angle(n, d)).collect()).unwrap()
    }

    fn hat(n: i64, d: i64, label: Option<u8>) -> FlowPoint {
        FlowPoint::new(FlowVariant::Hat, angle(n, d), label).unwrap()
    }

    fn tilde(n: i64, d: i64, label: Option<u8>) -> FlowPoint {
        FlowPoint::new(FlowVariant::Tilde, angle(n, d), label).unwrap()
    }

    #[test]
    fn doubling_rules() {
        assert!(FlowVariant::Hat.is_doubled(angle(0, 1)));
        assert!(FlowVariant::Hat.is_doubled(angle(1, 10)), "1/10 is the antipode of 3/5");
        assert!(!FlowVariant::Hat.is_doubled(angle(1, 4)));
        assert!(FlowVariant::Tilde.is_doubled(angle(1, 15)), "1/15 + 1/3 = 2/5");
        assert!(FlowVariant::Tilde.is_doubled(angle(8, 15)), "8/15 − 1/3 = 1/5");
        assert!(!FlowVariant::Tilde.is_doubled(angle(1, 8)));

        assert!(FlowPoint::new(FlowVariant::Hat, angle(0, 1), None).is_err());
        assert!(FlowPoint::new(FlowVariant::Hat, angle(1, 4), Some(0)).is_err());
        assert!(FlowPoint::new(FlowVariant::Hat, angle(0, 1), Some(2)).is_err());
    }

    #[test]
    fn hat_partition_examples() {
        let f = family(&[(0, 1), (1, 5), (3, 5)]);
        let t = partition_from_flowpoint(&hat(0, 1, Some(0)), &f).unwrap();
        assert_eq!(t.parts, vec![0, 0, 1]);
        let t = partition_from_flowpoint(&hat(0, 1, Some(1)), &f).unwrap();
        assert_eq!(t.parts, vec![1, 0, 1]);
    }

    #[test]
    fn hat_antipodal_boundary() {
        // base 1/10; the point 3/5 sits at τ + 1/2
        let f = family(&[(0, 1), (3, 5)]);
        let with_label0 = partition_from_flowpoint(&hat(1, 10, Some(0)), &f).unwrap();
        assert_eq!(with_label0.parts, vec![1, 1], "label 0 sends τ+1/2 to the part starting there");
        let with_label1 = partition_from_flowpoint(&hat(1, 10, Some(1)), &f).unwrap();
        assert_eq!(with_label1.parts, vec![1, 0]);
    }

    #[test]
    fn tilde_partition_examples() {
        let f = family(&[(0, 1), (2, 5), (5, 7)]);
        let t = partition_from_flowpoint_s3(&tilde(0, 1, Some(0)), &f).unwrap();
        assert_eq!(t.parts, vec![0, 1, 2]);
        let t = partition_from_flowpoint_s3(&tilde(0, 1, Some(1)), &family(&[(0, 1)])).unwrap();
        assert_eq!(t.parts, vec![2], "label 1 sends the coded angle to the part ending there");
        // base in r(S): 1/15 + 1/3 = 2/5; the boundary τ + 1/3 hits 2/5
        let t = partition_from_flowpoint_s3(&tilde(1, 15, Some(0)), &family(&[(2, 5)])).unwrap();
        assert_eq!(t.parts, vec![1]);
        let t = partition_from_flowpoint_s3(&tilde(1, 15, Some(1)), &family(&[(2, 5)])).unwrap();
        assert_eq!(t.parts, vec![0]);
        // base in r⁻¹(S): 8/15 − 1/3 = 1/5; the boundary τ + 2/3 hits 1/5
        let t = partition_from_flowpoint_s3(&tilde(8, 15, Some(0)), &family(&[(1, 5)])).unwrap();
        assert_eq!(t.parts, vec![2]);
        let t = partition_from_flowpoint_s3(&tilde(8, 15, Some(1)), &family(&[(1, 5)])).unwrap();
        assert_eq!(t.parts, vec![1]);
    }

    #[test]
    fn interval_membership_endpoints() {
        let iv = Interval::new(FlowVariant::Hat, angle(0, 1), angle(1, 5)).unwrap();
        assert!(interval_membership(&iv, &hat(0, 1, Some(1))).unwrap());
        assert!(!interval_membership(&iv, &hat(0, 1, Some(0))).unwrap());
        assert!(interval_membership(&iv, &hat(1, 5, Some(0))).unwrap());
        assert!(!interval_membership(&iv, &hat(1, 5, Some(1))).unwrap());
        // interior point, double-labeled base
        assert!(interval_membership(&iv, &hat(1, 10, Some(0))).unwrap());
        assert!(interval_membership(&iv, &hat(1, 10, Some(1))).unwrap());
        // outside
        assert!(!interval_membership(&iv, &hat(2, 5, Some(0))).unwrap());
    }

    #[test]
    fn basic_open_intervals() {
        let f = family(&[(0, 1), (1, 5)]);
        // marks: 0, 1/5, 1/2, 7/10
        let iv = interval_from_basic_open(&f, &hat(1, 10, Some(0))).unwrap();
        assert_eq!((iv.start(), iv.end()), (angle(0, 1), angle(1, 5)));
        let iv = interval_from_basic_open(&f, &hat(3, 5, Some(0))).unwrap();
        assert_eq!((iv.start(), iv.end()), (angle(1, 2), angle(7, 10)));
        // a single point subdivides into two half circles
        let iv = interval_from_basic_open(&family(&[(0, 1)]), &hat_undoubled(1, 4)).unwrap();
        assert_eq!((iv.start(), iv.end()), (angle(0, 1), angle(1, 2)));
        // a point sitting on a mark picks its side by label
        let iv = interval_from_basic_open(&f, &hat(0, 1, Some(1))).unwrap();
        assert_eq!((iv.start(), iv.end()), (angle(0, 1), angle(1, 5)));
        let iv = interval_from_basic_open(&f, &hat(0, 1, Some(0))).unwrap();
        assert_eq!((iv.start(), iv.end()), (angle(7, 10), angle(0, 1)));
    }

    fn hat_undoubled(n: i64, d: i64) -> FlowPoint {
        FlowPoint::new(FlowVariant::Hat, angle(n, d), None).unwrap()
    }

    #[test]
    fn basis_correspondence_on_a_sample() {
        // interval membership ⇔ equal traces, for a small family and a few
        // points around it
        let f = family(&[(0, 1), (1, 5)]);
        let points: Vec<FlowPoint> = vec![
            hat(0, 1, Some(0)),
            hat(0, 1, Some(1)),
            hat(1, 10, Some(0)),
            hat(1, 10, Some(1)),
            hat(1, 5, Some(0)),
            hat(1, 5, Some(1)),
            hat(2, 5, Some(0)),
            hat(3, 5, Some(0)),
            hat_undoubled(1, 4),
            hat_undoubled(3, 4),
        ];
        for t in &points {
            let iv = interval_from_basic_open(&f, t).unwrap();
            let trace_t = partition_from_flowpoint(t, &f).unwrap();
            for u in &points {
                let inside = interval_membership(&iv, u).unwrap();
                let same = partition_from_flowpoint(u, &f).unwrap() == trace_t;
                assert_eq!(inside, same, "t = {t:?}, u = {u:?}");
            }
        }
    }

    #[test]
    fn rotation_acts_and_is_equivariant() {
        assert_eq!(act_rotation(angle(0, 1), &hat(0, 1, Some(0))).unwrap(), hat(0, 1, Some(0)));
        assert_eq!(act_rotation(angle(1, 5), &hat(0, 1, Some(0))).unwrap(), hat(1, 5, Some(0)));
        assert!(act_rotation(angle(1, 4), &hat(0, 1, Some(0))).is_err());

        let q = angle(1, 7);
        let t = hat(0, 1, Some(0));
        let f = family(&[(0, 1), (2, 5)]);
        let before = partition_from_flowpoint(&t, &f).unwrap();
        let after = partition_from_flowpoint(
            &act_rotation(q, &t).unwrap(),
            &f.rotate(q).unwrap(),
        )
        .unwrap();
        assert_eq!(before.parts, after.parts);
    }

    #[test]
    fn traces_separate_distinct_points() {
        // distinct flow points differ on a family of at most two points
        let pts: Vec<FlowPoint> = vec![
            hat(0, 1, Some(0)),
            hat(0, 1, Some(1)),
            hat(1, 10, Some(0)),
            hat(1, 10, Some(1)),
            hat(1, 5, Some(0)),
            hat(2, 5, Some(1)),
            hat_undoubled(1, 4),
            hat_undoubled(1, 12),
        ];
        for (i, t) in pts.iter().enumerate() {
            for u in pts.iter().skip(i + 1) {
                let f = separating_family(t, u);
                let pt = partition_from_flowpoint(t, &f).unwrap();
                let pu = partition_from_flowpoint(u, &f).unwrap();
                assert_ne!(pt.parts, pu.parts, "t = {t:?}, u = {u:?}, f = {f:?}");
            }
        }
    }

    /// A family of at most two dense-set points whose trace distinguishes
    /// two distinct Hat points.
    fn separating_family(t: &FlowPoint, u: &FlowPoint) -> CirclePlacement {
        let half = angle(1, 2);
        if t.base() == u.base() {
            // labels differ; the boundary angle in S resolves them
            let x = if t.base().coprime_to_six() { t.base() } else { t.base().add(half) };
            return CirclePlacement::new(vec![x]).unwrap();
        }
        let d0 = u.base().sub(t.base());
        let (anchor, gap) = if ratio_of(d0) <= Ratio::new(1, 2) {
            (t.base(), d0)
        } else {
            (u.base(), t.base().sub(u.base()))
        };
        // a dense-set point just past the anchor, avoiding the other
        // partition's boundaries
        let mut denom = 5i64;
        loop {
            if denom % 2 != 0 && denom % 3 != 0 {
                let lo = ratio_of(anchor);
                let hi = lo + ratio_of(gap).min(Ratio::new(1, 2));
                let k = (lo * denom).floor().to_integer() + 1;
                for kk in [k, k + 1] {
                    let x = TurnAngle::new(kk, denom).unwrap();
                    // compare along the arc without wrapping
                    let pos = Ratio::new(kk, denom);
                    if pos > lo && pos < hi && x != t.base() && x != u.base() {
                        let d_t = x.sub(t.base());
                        let d_u = x.sub(u.base());
                        let on_boundary = |d: TurnAngle| {
                            let s = ratio_of(d) * 2;
                            s.is_integer()
                        };
                        if !on_boundary(d_t) && !on_boundary(d_u) {
                            return CirclePlacement::new(vec![x]).unwrap();
                        }
                    }
                }
            }
            denom += 2;
            assert!(denom < 1_000, "no separator found");
        }
    }
}
