//! The circular structures S(2) and S(3) on exact rational turn angles.
//!
//! Angles are fractions of a full turn in `[0, 1)`. Placement points carry
//! reduced denominators coprime to 6, which rules out antipodal pairs and
//! exact third-turn pairs, so the arc rules below are total on placements.
//!
//! * S(2): arc x → y iff the counterclockwise difference (y − x) mod 1 lies
//!   in (0, 1/2) — a tournament.
//! * S(3): arc x → y iff the difference lies in (0, 1/3); differences in
//!   (1/3, 2/3) carry no arc.
//! * The starred variants add unary parts cut by half planes (S(2)*) or by
//!   three sectors offset by 1/12 of a turn (S(3)*).
//!
//! `realize` decides whether an abstract structure occurs among placements
//! at all, by exhausting the finitely many combinatorial placement types;
//! a positive answer comes with explicit rational angles.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::structure::{Signature, Structure};
use crate::{Error, Result};

/// An exact angle in `[0, 1)`, as a fraction of a full turn.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TurnAngle(Ratio<i64>);

impl TurnAngle {
    pub fn new(numerator: i64, denominator: i64) -> Result<TurnAngle> {
        if denominator == 0 {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(TurnAngle::from_ratio(Ratio::new(numerator, denominator)))
    }

    pub fn zero() -> TurnAngle {
        TurnAngle(Ratio::zero())
    }

    fn from_ratio(r: Ratio<i64>) -> TurnAngle {
        let mut r = r.fract();
        if r.is_negative() {
            r += Ratio::from_integer(1);
        }
        // fract of an integer-valued ratio is 0, so r is now in [0, 1)
        TurnAngle(r)
    }

    pub fn numerator(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i64 {
        *self.0.denom()
    }

    pub fn add(&self, other: TurnAngle) -> TurnAngle {
        TurnAngle::from_ratio(self.0 + other.0)
    }

    pub fn sub(&self, other: TurnAngle) -> TurnAngle {
        TurnAngle::from_ratio(self.0 - other.0)
    }

    /// Reduced denominator coprime to 6: membership in the dense vertex set
    /// shared by S(2) and S(3).
    pub fn coprime_to_six(&self) -> bool {
        self.denominator().gcd(&6) == 1
    }

    fn ratio(&self) -> Ratio<i64> {
        self.0
    }
}

impl fmt::Display for TurnAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator() == 1 {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl FromStr for TurnAngle {
    type Err = Error;

    fn from_str(s: &str) -> Result<TurnAngle> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::InvalidInput(format!("bad numerator {n:?}: {e}")))?,
                d.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::InvalidInput(format!("bad denominator {d:?}: {e}")))?,
            ),
            None => (
                s.parse::<i64>()
                    .map_err(|e| Error::InvalidInput(format!("bad angle {s:?}: {e}")))?,
                1,
            ),
        };
        TurnAngle::new(num, den)
    }
}

impl Serialize for TurnAngle {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TurnAngle {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A strictly increasing sequence of turn angles with denominators coprime
/// to 6. No two points are antipodal or exactly a third of a turn apart;
/// both exclusions follow from the denominator condition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct CirclePlacement {
    points: Vec<TurnAngle>,
}

impl CirclePlacement {
    pub fn new(mut points: Vec<TurnAngle>) -> Result<CirclePlacement> {
        for p in &points {
            if !p.coprime_to_six() {
                return Err(Error::InvalidInput(format!(
                    "point {p} has denominator sharing a factor with 6"
                )));
            }
        }
        points.sort();
        points.dedup();
        Ok(CirclePlacement { points })
    }

    pub fn points(&self) -> &[TurnAngle] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn rotate(&self, q: TurnAngle) -> Result<CirclePlacement> {
        if !q.coprime_to_six() {
            return Err(Error::InvalidInput(format!(
                "rotation angle {q} would leave the dense vertex set"
            )));
        }
        CirclePlacement::new(self.points.iter().map(|p| p.add(q)).collect())
    }
}

/// The circle families with a realizability oracle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CircleFamily {
    S2,
    S2Star,
    S3,
    S3Star,
}

impl CircleFamily {
    /// Number of residues in the sign coordinate: 2 for half-turn families,
    /// 3 for third-turn families.
    fn period(self) -> usize {
        match self {
            CircleFamily::S2 | CircleFamily::S2Star => 2,
            CircleFamily::S3 | CircleFamily::S3Star => 3,
        }
    }

    fn starred(self) -> bool {
        matches!(self, CircleFamily::S2Star | CircleFamily::S3Star)
    }

    pub fn signature(self) -> Signature {
        match self {
            CircleFamily::S2 | CircleFamily::S3 => digraph_signature(),
            CircleFamily::S2Star => star_signature(2),
            CircleFamily::S3Star => star_signature(3),
        }
    }

    /// Window cut. For the starred families the cut sits on the part
    /// boundary, which makes part membership equal to the sign coordinate.
    fn cut(self) -> TurnAngle {
        match self {
            CircleFamily::S2 | CircleFamily::S3 => TurnAngle::zero(),
            CircleFamily::S2Star => TurnAngle::new(3, 4).unwrap(),
            CircleFamily::S3Star => TurnAngle::new(11, 12).unwrap(),
        }
    }

    pub fn structure(self, p: &CirclePlacement) -> Structure {
        match self {
            CircleFamily::S2 => s2_structure(p),
            CircleFamily::S2Star => s2_star_structure(p),
            CircleFamily::S3 => s3_structure(p),
            CircleFamily::S3Star => s3_star_structure(p),
        }
    }
}

/// `{arc/2}` — the language of S(2), S(3) and plain linear orders.
pub fn digraph_signature() -> Signature {
    Signature::new(vec![("arc", 2)]).unwrap()
}

/// `{arc/2, P0/1, …, P(parts−1)/1}` — the language of the starred circular
/// structures and of the partitioned dense orders they transform into.
pub fn star_signature(parts: usize) -> Signature {
    let mut symbols: Vec<(String, usize)> = vec![("arc".to_string(), 2)];
    for j in 0..parts {
        symbols.push((format!("P{j}"), 1));
    }
    Signature::new(symbols).unwrap()
}

/// `{P0/1, …}` — partitioned sets without any binary relation.
pub fn parts_signature(parts: usize) -> Signature {
    let symbols: Vec<(String, usize)> = (0..parts).map(|j| (format!("P{j}"), 1)).collect();
    Signature::new(symbols).unwrap()
}

/// `{P0/1, P1/1, arc/2}` — partitioned sets expanded by a binary relation.
pub fn parts_then_arc_signature() -> Signature {
    Signature::new(vec![("P0", 1), ("P1", 1), ("arc", 2)]).unwrap()
}

fn arc_in_window(x: TurnAngle, y: TurnAngle, window: TurnAngle) -> bool {
    let d = y.sub(x);
    d > TurnAngle::zero() && d.ratio() < window.ratio()
}

/// Tournament on the placement: arc x → y iff (y − x) mod 1 ∈ (0, 1/2).
pub fn s2_structure(p: &CirclePlacement) -> Structure {
    let half = TurnAngle::new(1, 2).unwrap();
    directed_structure(p, half, digraph_signature(), None)
}

/// Digraph on the placement: arc x → y iff (y − x) mod 1 ∈ (0, 1/3).
pub fn s3_structure(p: &CirclePlacement) -> Structure {
    let third = TurnAngle::new(1, 3).unwrap();
    directed_structure(p, third, digraph_signature(), None)
}

/// S(2) with the half-plane parts: P0 on [3/4, 1) ∪ [0, 1/4), P1 on
/// [1/4, 3/4). The boundary angles have even denominators and never occur.
pub fn s2_star_structure(p: &CirclePlacement) -> Structure {
    let half = TurnAngle::new(1, 2).unwrap();
    directed_structure(p, half, star_signature(2), Some(&s2_part))
}

/// S(3) with three sector parts: part j iff (t + 1/12) mod 1 ∈ [j/3, (j+1)/3).
pub fn s3_star_structure(p: &CirclePlacement) -> Structure {
    let third = TurnAngle::new(1, 3).unwrap();
    directed_structure(p, third, star_signature(3), Some(&s3_part))
}

pub(crate) fn s2_part(t: TurnAngle) -> usize {
    let quarter = Ratio::new(1i64, 4);
    let three_quarters = Ratio::new(3i64, 4);
    debug_assert!(t.ratio() != quarter && t.ratio() != three_quarters);
    if t.ratio() < quarter || t.ratio() >= three_quarters {
        0
    } else {
        1
    }
}

pub(crate) fn s3_part(t: TurnAngle) -> usize {
    let shifted = t.add(TurnAngle::new(1, 12).unwrap());
    let third = Ratio::new(1i64, 3);
    let r = shifted.ratio();
    debug_assert!(r != third && r != third * 2);
    if r < third {
        0
    } else if r < third * 2 {
        1
    } else {
        2
    }
}

fn directed_structure(
    p: &CirclePlacement,
    window: TurnAngle,
    signature: Signature,
    part: Option<&dyn Fn(TurnAngle) -> usize>,
) -> Structure {
    let n = p.len();
    let mut s = Structure::empty(signature, n);
    for i in 0..n {
        for j in 0..n {
            if i != j && arc_in_window(p.points()[i], p.points()[j], window) {
                s.insert(0, vec![i, j]).unwrap();
            }
        }
        if let Some(part) = part {
            let pj = part(p.points()[i]);
            s.insert(1 + pj, vec![i]).unwrap();
        }
    }
    s
}

/// Decide realizability of `a` in the given circle family. `None` is a
/// definitive refutation: every placement determines a combinatorial type
/// (window order of the points' residue representatives together with their
/// shift residues), the arc and part relations depend only on that type, and
/// the search below exhausts all types.
pub fn realize(
    family: CircleFamily,
    a: &Structure,
    size_limit: usize,
) -> Result<Option<CirclePlacement>> {
    if a.signature() != &family.signature() {
        return Err(Error::SignatureMismatch(format!(
            "structure is not over the {family:?} signature"
        )));
    }
    let n = a.size();
    if n > size_limit {
        return Err(Error::Resource(format!(
            "realize limited to size {size_limit}, structure has {n}"
        )));
    }
    if n == 0 {
        return Ok(Some(CirclePlacement::new(vec![])?));
    }

    let period = family.period();
    // For starred families the part pins the sign coordinate. A structure
    // whose parts fail to partition the universe occurs in no placement.
    let forced_signs: Option<Vec<usize>> = if family.starred() {
        match extract_parts(a, period) {
            Some(parts) => Some(parts),
            None => return Ok(None),
        }
    } else {
        None
    };

    let mut slots: Vec<(usize, usize)> = Vec::with_capacity(n); // (vertex, sign)
    let mut used = vec![false; n];
    if search_slots(a, period, &forced_signs, &mut slots, &mut used) {
        let placement = placement_from_slots(family, &slots)?;
        let induced = family.structure(&placement);
        if !induced.is_isomorphic_to(a)? {
            return Err(Error::Integrity(
                "constructed placement does not realize the requested structure".into(),
            ));
        }
        Ok(Some(placement))
    } else {
        Ok(None)
    }
}

/// Read unary parts off a structure over a starred signature; `None` if
/// they fail to partition the universe.
pub(crate) fn extract_parts(a: &Structure, parts: usize) -> Option<Vec<usize>> {
    let mut assignment = vec![usize::MAX; a.size()];
    for j in 0..parts {
        for t in a.relation(1 + j) {
            let v = t[0];
            if assignment[v] != usize::MAX {
                return None;
            }
            assignment[v] = j;
        }
    }
    if assignment.contains(&usize::MAX) {
        return None;
    }
    Some(assignment)
}

fn search_slots(
    a: &Structure,
    period: usize,
    forced_signs: &Option<Vec<usize>>,
    slots: &mut Vec<(usize, usize)>,
    used: &mut [bool],
) -> bool {
    if slots.len() == a.size() {
        return true;
    }
    for v in 0..a.size() {
        if used[v] {
            continue;
        }
        let signs: Vec<usize> = match forced_signs {
            Some(f) => vec![f[v]],
            None => (0..period).collect(),
        };
        for s in signs {
            if slots.iter().all(|&(u, su)| arcs_match(a, u, su, v, s, period)) {
                slots.push((v, s));
                used[v] = true;
                if search_slots(a, period, forced_signs, slots, used) {
                    return true;
                }
                used[v] = false;
                slots.pop();
            }
        }
    }
    false
}

/// Expected arcs between an earlier slot `u` (smaller window coordinate) and
/// a later slot `v`, from the shift residues alone. With d = (s_v − s_u)
/// mod p: d = 0 gives arc u → v, d = p−1 gives arc v → u, anything else
/// gives no arc (only possible for p = 3).
fn arcs_match(a: &Structure, u: usize, su: usize, v: usize, sv: usize, period: usize) -> bool {
    let d = (sv + period - su) % period;
    let expect_uv = d == 0;
    let expect_vu = d == period - 1;
    a.has(0, &[u, v]) == expect_uv && a.has(0, &[v, u]) == expect_vu
}

/// Explicit rational angles for a consistent slot assignment. Points are
/// chosen greedily on a grid with denominator coprime to 6, keeping the
/// window coordinates strictly increasing.
fn placement_from_slots(family: CircleFamily, slots: &[(usize, usize)]) -> Result<CirclePlacement> {
    let n = slots.len();
    let period = family.period() as i64;
    let cut = family.cut();
    let mut d = 3 * period * (n as i64 + 2);
    while d.gcd(&6) != 1 {
        d += 1;
    }
    let grid = Ratio::new(1i64, d);
    let mut points = Vec::with_capacity(n);
    let mut last_coord = Ratio::new(0i64, 1); // window coordinate, in [0, 1/period)
    for &(_, sign) in slots {
        // point = cut + coord + sign/period with coord ∈ (last, 1/period)
        let target = cut.ratio() + last_coord + Ratio::new(sign as i64, period);
        let c = (target / grid).floor().to_integer() + 1;
        let q = TurnAngle::from_ratio(Ratio::new(c, d));
        let coord = q.sub(cut).sub(TurnAngle::new(sign as i64, period)?);
        if coord.ratio() >= Ratio::new(1, period) {
            return Err(Error::Integrity("window overflow while placing points".into()));
        }
        last_coord = coord.ratio();
        points.push(q);
    }
    let mut by_vertex = vec![TurnAngle::zero(); n];
    for (k, &(v, _)) in slots.iter().enumerate() {
        by_vertex[v] = points[k];
    }
    let distinct: BTreeSet<TurnAngle> = by_vertex.iter().copied().collect();
    if distinct.len() != n {
        return Err(Error::Integrity("coincident points while placing".into()));
    }
    CirclePlacement::new(by_vertex)
}

/// All placements of `n` points of one combinatorial type per shift-residue
/// vector: enough to exhaust every isomorphism class the family realizes at
/// size `n` (arc and part relations depend only on window order and
/// residues, and the window order can be taken as given).
pub fn placements_of_size(family: CircleFamily, n: usize) -> Vec<CirclePlacement> {
    let period = family.period();
    let mut out = Vec::new();
    let mut signs = vec![0usize; n];
    loop {
        let slots: Vec<(usize, usize)> = signs.iter().copied().enumerate().collect();
        out.push(placement_from_slots(family, &slots).expect("greedy placement fits"));
        // odometer over sign vectors
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            signs[i] += 1;
            if signs[i] < period {
                break;
            }
            signs[i] = 0;
            i += 1;
        }
    }
}
