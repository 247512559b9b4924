//! The bundled experiments: one per acceptance check, runnable from the
//! command line and from the acceptance test suite.
//!
//! Every experiment recomputes its inputs from scratch, checks the claim
//! at the stated bounds, and reports a pass flag with a short deterministic
//! detail line. No wall-clock data enters the reports.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrow::{
    check_arrow, expansion_type_coloring, ramsey_degree_report, verify_bad_coloring, ArrowQuery,
    DegreeParams, SearchLimits,
};
use crate::catalog::{check_amalgamation, check_jep, generate_age, linear_order, Family};
use crate::circle::{s2_structure, s3_structure, CirclePlacement, TurnAngle};
use crate::expansion::{
    check_expansion_property, ep_witness_for_expansion, list_expansions, named_pair,
    transform_q2_s2star, transform_q3_s3star, transform_s2star_q2, transform_s3star_q3, EpOutcome,
};
use crate::flow::{
    interval_from_basic_open, interval_membership, partition_from_flowpoint,
    partition_from_flowpoint_s3, FlowPoint, FlowVariant,
};
use crate::oracles::{arrow_by_full_enumeration, isomorphic_by_permutation_search};
use crate::structure::Structure;
use crate::{Error, Result};

/// Outcome of one acceptance check.
#[derive(Clone, Debug, serde::Serialize)]
pub struct CriterionReport {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

impl CriterionReport {
    fn new(id: &str, pass: bool, detail: String) -> CriterionReport {
        CriterionReport { id: id.into(), pass, detail }
    }

    pub fn line(&self) -> String {
        format!("{} {}: {}", if self.pass { "PASS" } else { "FAIL" }, self.id, self.detail)
    }
}

pub const EXPERIMENT_NAMES: [&str; 10] = [
    "t-formula-s3",
    "t-formula-s2",
    "degree-s2-point",
    "order-ramsey",
    "transform-bijection",
    "ep-positive-s2",
    "ep-negative-q2",
    "fraisse-shadows",
    "flow-coding",
    "oracle-equivalence",
];

/// Run one experiment by name, or all of them for `"all"`.
pub fn run_experiment(name: &str, seed: u64) -> Result<Vec<CriterionReport>> {
    match name {
        "all" => EXPERIMENT_NAMES
            .iter()
            .map(|n| run_single(n, seed))
            .collect(),
        n => Ok(vec![run_single(n, seed)?]),
    }
}

fn run_single(name: &str, seed: u64) -> Result<CriterionReport> {
    match name {
        "t-formula-s3" => t_formula("s3", 3),
        "t-formula-s2" => t_formula("s2", 2),
        "degree-s2-point" => degree_s2_point(),
        "order-ramsey" => order_ramsey(),
        "transform-bijection" => transform_bijection(),
        "ep-positive-s2" => ep_positive_s2(),
        "ep-negative-q2" => ep_negative_q2(),
        "fraisse-shadows" => fraisse_shadows(),
        "flow-coding" => flow_coding(),
        "oracle-equivalence" => oracle_equivalence(seed),
        other => Err(Error::InvalidInput(format!("unknown experiment {other:?}"))),
    }
}

fn cyclic_triangle() -> Structure {
    let mut s = Structure::empty(crate::circle::digraph_signature(), 3);
    for (u, v) in [(0, 1), (1, 2), (2, 0)] {
        s.insert(0, vec![u, v]).unwrap();
    }
    s
}

/// t(A) = factor·|A|/|Aut(A)| for every base member with |A| ≤ 4.
fn t_formula(pair_name: &str, factor: usize) -> Result<CriterionReport> {
    let id = format!("t-formula-{pair_name}");
    let pair = named_pair(pair_name, 4)?;
    let mut checked = 0usize;
    for a in pair.base().members_up_to(4) {
        let t = list_expansions(&pair, a)?.count;
        let aut = a.automorphism_count();
        let expected_num = factor * a.size();
        if !expected_num.is_multiple_of(aut) || t != expected_num / aut {
            return Ok(CriterionReport::new(
                &id,
                false,
                format!(
                    "member of size {} has t = {t}, formula gives {factor}·{}/{aut}",
                    a.size(),
                    a.size()
                ),
            ));
        }
        checked += 1;
    }
    Ok(CriterionReport::new(
        &id,
        true,
        format!("t(A) = {factor}|A|/|Aut(A)| on all {checked} members of size ≤ 4"),
    ))
}

/// The point of the local-order age has degree exactly 2: upper bound from
/// t, lower bound from the half-plane colorings, which must defeat every
/// opponent of size ≤ 7 and re-verify as bad colorings for the cyclic
/// triangle target.
fn degree_s2_point() -> Result<CriterionReport> {
    let id = "degree-s2-point";
    let limits = SearchLimits::default();
    let pair = named_pair("s2", 7)?;
    let point = linear_order(1);
    let c3 = cyclic_triangle();

    let t = list_expansions(&pair, &point)?.count;
    if t != 2 {
        return Ok(CriterionReport::new(id, false, format!("t(point) = {t}, expected 2")));
    }

    let mut opponents = 0usize;
    let mut colorings = 0usize;
    for c in pair.base().members_up_to(7) {
        let q = ArrowQuery::new(c.clone(), c3.clone(), point.clone(), 2, 1)?;
        let cert = check_arrow(&q, &limits)?;
        if cert.holds {
            return Ok(CriterionReport::new(
                id,
                false,
                format!("an opponent of size {} satisfies the arrow", c.size()),
            ));
        }
        for c_star in list_expansions(&pair, c)?.representatives {
            let tc = expansion_type_coloring(&pair, &c_star, &point)?;
            if !verify_bad_coloring(&q, &tc.coloring)? {
                return Ok(CriterionReport::new(
                    id,
                    false,
                    format!("a half-plane coloring fails on an opponent of size {}", c.size()),
                ));
            }
            colorings += 1;
        }
        opponents += 1;
    }

    let report = ramsey_degree_report(
        &pair,
        &point,
        &DegreeParams { colors: 2, b_bound: 3, c_bound: 7 },
        &limits,
    )?;
    let pass = report.lower_bound == 2 && report.upper_bound == 2;
    Ok(CriterionReport::new(
        id,
        pass,
        format!(
            "bracket [{}, {}]; {opponents} opponents refuted, {colorings} half-plane colorings verified",
            report.lower_bound, report.upper_bound
        ),
    ))
}

/// The classical chain instance: the 6-chain arrows the 3-chain for pairs
/// with 2 colors, the 5-chain does not; both sides re-checked against the
/// full coloring enumeration.
fn order_ramsey() -> Result<CriterionReport> {
    let id = "order-ramsey";
    let limits = SearchLimits::default();
    let b = linear_order(3);
    let a = linear_order(2);

    let mut details = Vec::new();
    for (n, expected) in [(6usize, true), (5usize, false)] {
        let q = ArrowQuery::new(linear_order(n), b.clone(), a.clone(), 2, 1)?;
        let cert = check_arrow(&q, &limits)?;
        if cert.holds != expected {
            return Ok(CriterionReport::new(
                id,
                false,
                format!("arrow on the {n}-chain decided {}", cert.holds),
            ));
        }
        let copies_a = q.a.copies_in(&q.c)?;
        let copies_b = q.b.copies_in(&q.c)?;
        let members: Vec<Vec<usize>> = copies_b
            .iter()
            .map(|bc| {
                copies_a
                    .iter()
                    .enumerate()
                    .filter(|(_, ac)| ac.is_subset(bc))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let (oracle_holds, oracle_bad) =
            arrow_by_full_enumeration(copies_a.len(), 2, 1, &members)?;
        if oracle_holds != expected {
            return Ok(CriterionReport::new(id, false, format!("oracle disagrees at n = {n}")));
        }
        match (&cert.bad_coloring, oracle_bad) {
            (Some(found), Some(oracle)) => {
                if !verify_bad_coloring(&q, found)? || found.values != oracle {
                    return Ok(CriterionReport::new(
                        id,
                        false,
                        format!("bad coloring mismatch at n = {n}"),
                    ));
                }
                details.push(format!("{n}-chain: refuted, least bad coloring confirmed"));
            }
            (None, None) => details.push(format!(
                "{n}-chain: holds over all {} colorings",
                1u64 << copies_a.len()
            )),
            _ => return Ok(CriterionReport::new(id, false, format!("certificate shape at n = {n}"))),
        }
    }
    Ok(CriterionReport::new(id, true, details.join("; ")))
}

/// The arc-rewriting transforms are inverse bijections between the starred
/// catalogs and the labeled-chain catalogs.
fn transform_bijection() -> Result<CriterionReport> {
    let id = "transform-bijection";
    let mut details = Vec::new();

    let star2 = generate_age(&Family::S2Star, 5)?;
    let q2 = generate_age(&Family::Qn(2), 5)?;
    let mut image = BTreeSet::new();
    for (_, m) in star2.members() {
        let chain = transform_s2star_q2(m)?;
        if transform_q2_s2star(&chain)? != *m {
            return Ok(CriterionReport::new(id, false, "two-part round trip failed".into()));
        }
        image.insert(chain.canonical_code());
    }
    let q2_codes: BTreeSet<_> = q2.members().map(|(c, _)| c.clone()).collect();
    if image != q2_codes || image.len() != star2.len() {
        return Ok(CriterionReport::new(
            id,
            false,
            format!("two-part image has {} classes, target {}", image.len(), q2_codes.len()),
        ));
    }
    details.push(format!("two-part: {} classes at bound 5", image.len()));

    let star3 = generate_age(&Family::S3Star, 4)?;
    let q3 = generate_age(&Family::Qn(3), 4)?;
    let mut image = BTreeSet::new();
    for (_, m) in star3.members() {
        let chain = transform_s3star_q3(m)?;
        if transform_q3_s3star(&chain)? != *m {
            return Ok(CriterionReport::new(id, false, "three-part round trip failed".into()));
        }
        image.insert(chain.canonical_code());
    }
    let q3_codes: BTreeSet<_> = q3.members().map(|(c, _)| c.clone()).collect();
    if image != q3_codes || image.len() != star3.len() {
        return Ok(CriterionReport::new(
            id,
            false,
            format!("three-part image has {} classes, target {}", image.len(), q3_codes.len()),
        ));
    }
    details.push(format!("three-part: {} classes at bound 4", image.len()));

    Ok(CriterionReport::new(id, true, details.join("; ")))
}

/// Every local order of size ≤ 3 has an expansion-property witness of size
/// ≤ 7 over the half-plane expansion.
fn ep_positive_s2() -> Result<CriterionReport> {
    let id = "ep-positive-s2";
    let pair = named_pair("s2", 7)?;
    let mut found = Vec::new();
    for a in pair.base().members_up_to(3) {
        match check_expansion_property(&pair, a, 7)? {
            EpOutcome::Witness { witness, .. } => {
                found.push(format!("|A|={} → |B|={}", a.size(), witness.size()))
            }
            EpOutcome::NoneUpToBound { .. } => {
                return Ok(CriterionReport::new(
                    id,
                    false,
                    format!("no witness within bound 7 for a member of size {}", a.size()),
                ));
            }
        }
    }
    Ok(CriterionReport::new(id, true, found.join(", ")))
}

/// Free unary labels on chains refute the expansion property (with one
/// verified refutation per candidate), while the sorted subclass over
/// partitioned sets repairs it within bound 4.
fn ep_negative_q2() -> Result<CriterionReport> {
    let id = "ep-negative-q2";

    // mixed expansion of the 2-chain: the smaller element in P1
    let pair = named_pair("lo-q2", 6)?;
    let mut mixed = Structure::empty(crate::circle::star_signature(2), 2);
    mixed.insert(0, vec![0, 1])?;
    mixed.insert(2, vec![0])?;
    mixed.insert(1, vec![1])?;

    for bound in 1..=6usize {
        match ep_witness_for_expansion(&pair, &mixed, bound)? {
            EpOutcome::Witness { witness, .. } => {
                return Ok(CriterionReport::new(
                    id,
                    false,
                    format!("unexpected witness of size {} at bound {bound}", witness.size()),
                ));
            }
            EpOutcome::NoneUpToBound { refutations } => {
                if refutations.len() != bound {
                    return Ok(CriterionReport::new(
                        id,
                        false,
                        format!("{} refutations at bound {bound}", refutations.len()),
                    ));
                }
                for r in &refutations {
                    if !crate::expansion::verify_ep_refutation(r)? {
                        return Ok(CriterionReport::new(
                            id,
                            false,
                            "a refutation failed re-verification".into(),
                        ));
                    }
                }
            }
        }
    }

    // the repaired class: partitioned sets expanded by sorted chains
    let k_pair = named_pair("q2k", 4)?;
    let mut sorted_pair = Structure::empty(crate::circle::parts_then_arc_signature(), 2);
    sorted_pair.insert(0, vec![0])?;
    sorted_pair.insert(1, vec![1])?;
    sorted_pair.insert(2, vec![0, 1])?;
    let witness_size = match ep_witness_for_expansion(&k_pair, &sorted_pair, 4)? {
        EpOutcome::Witness { witness, .. } => witness.size(),
        EpOutcome::NoneUpToBound { .. } => {
            return Ok(CriterionReport::new(
                id,
                false,
                "no witness within bound 4 over the sorted subclass".into(),
            ));
        }
    };

    Ok(CriterionReport::new(
        id,
        true,
        format!(
            "refuted at every bound ≤ 6 with per-candidate certificates; sorted subclass witness of size {witness_size}"
        ),
    ))
}

/// Joint embedding and amalgamation certificates for all pairs and spans of
/// members of size ≤ 3, searched within bound 8.
fn fraisse_shadows() -> Result<CriterionReport> {
    let id = "fraisse-shadows";
    let mut detail = Vec::new();
    for family in [Family::S2, Family::S3, Family::Qn(2)] {
        let cat = generate_age(&family, 8)?;
        let small: Vec<Structure> = cat.members_up_to(3).cloned().collect();

        let mut jep = 0usize;
        for a in &small {
            for b in &small {
                let w = check_jep(&cat, a, b, 8)?;
                if !w.found() {
                    return Ok(CriterionReport::new(
                        id,
                        false,
                        format!("{}: joint embedding failed", family.name()),
                    ));
                }
                let witness = w.witness.as_ref().unwrap();
                for (m, src) in w.embeddings.iter().zip([a, b]) {
                    if !m.is_embedding()? || m.source() != src || m.target() != witness {
                        return Ok(CriterionReport::new(
                            id,
                            false,
                            format!("{}: joint-embedding certificate invalid", family.name()),
                        ));
                    }
                }
                jep += 1;
            }
        }

        let mut spans = 0usize;
        for a in &small {
            for b in &small {
                let fs = a.embeddings_into(b)?;
                if fs.is_empty() {
                    continue;
                }
                for c in &small {
                    let gs = a.embeddings_into(c)?;
                    for f in &fs {
                        for g in &gs {
                            let w = check_amalgamation(&cat, f, g, 8)?;
                            if !w.found() {
                                return Ok(CriterionReport::new(
                                    id,
                                    false,
                                    format!("{}: amalgamation failed", family.name()),
                                ));
                            }
                            let r = &w.embeddings[0];
                            let s = &w.embeddings[1];
                            let commutes = (0..a.size())
                                .all(|x| r.apply(f.apply(x)) == s.apply(g.apply(x)));
                            if !commutes || !r.is_embedding()? || !s.is_embedding()? {
                                return Ok(CriterionReport::new(
                                    id,
                                    false,
                                    format!("{}: amalgamation certificate invalid", family.name()),
                                ));
                            }
                            spans += 1;
                        }
                    }
                }
            }
        }
        detail.push(format!("{}: {jep} pairs, {spans} spans", family.name()));
    }
    Ok(CriterionReport::new(id, true, detail.join("; ")))
}

fn farey_angles(max_denominator: i64) -> Vec<TurnAngle> {
    let mut out = BTreeSet::new();
    for d in 1..=max_denominator {
        for n in 0..d {
            out.insert(TurnAngle::new(n, d).unwrap());
        }
    }
    out.into_iter().collect()
}

fn subsets_up_to<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = vec![vec![]];
    for item in items {
        let mut extended = Vec::new();
        for s in &out {
            if s.len() < k {
                let mut t = s.clone();
                t.push(item.clone());
                extended.push(t);
            }
        }
        out.extend(extended);
    }
    out.retain(|s| !s.is_empty());
    out
}

/// Flow codings on a dense test grid: traces land in the starred catalog,
/// basic open intervals realize exactly the equal-trace classes, and the
/// four boundary coding cases of the three-part space come out verbatim.
fn flow_coding() -> Result<CriterionReport> {
    let id = "flow-coding";
    let star2 = generate_age(&Family::S2Star, 3)?;
    let star3 = generate_age(&Family::S3Star, 2)?;

    // every angle with denominator ≤ 12; 26 doubled and 20 undoubled for
    // the two-part space
    let grid = farey_angles(12);
    let mut hat_points = Vec::new();
    for &b in &grid {
        if FlowVariant::Hat.is_doubled(b) {
            hat_points.push(FlowPoint::new(FlowVariant::Hat, b, Some(0))?);
            hat_points.push(FlowPoint::new(FlowVariant::Hat, b, Some(1))?);
        } else {
            hat_points.push(FlowPoint::new(FlowVariant::Hat, b, None)?);
        }
    }
    let s_grid: Vec<TurnAngle> = grid.iter().copied().filter(|t| t.coprime_to_six()).collect();
    let families: Vec<CirclePlacement> = subsets_up_to(&s_grid, 3)
        .into_iter()
        .map(|pts| CirclePlacement::new(pts).unwrap())
        .collect();

    let mut memberships = 0usize;
    let mut correspondences = 0usize;
    for f in &families {
        let base = s2_structure(f);
        let mut traces = Vec::with_capacity(hat_points.len());
        let mut intervals = Vec::with_capacity(hat_points.len());
        for t in &hat_points {
            let trace = partition_from_flowpoint(t, f)?;
            // (a) the induced expanded structure is a starred age member
            let mut expanded =
                Structure::empty(crate::circle::star_signature(2), base.size());
            for tuple in base.relation(0) {
                expanded.insert(0, tuple.clone())?;
            }
            for (v, &part) in trace.parts.iter().enumerate() {
                expanded.insert(1 + part, vec![v])?;
            }
            if !star2.contains(&expanded)? {
                return Ok(CriterionReport::new(
                    id,
                    false,
                    "a coded partition leaves the starred age".into(),
                ));
            }
            memberships += 1;
            intervals.push(interval_from_basic_open(f, t)?);
            traces.push(trace);
        }
        // (b) interval membership ⇔ equal traces
        for i in 0..hat_points.len() {
            for (j, u) in hat_points.iter().enumerate() {
                let inside = interval_membership(&intervals[i], u)?;
                let same = traces[i].parts == traces[j].parts;
                if inside != same {
                    return Ok(CriterionReport::new(
                        id,
                        false,
                        "basis correspondence failed".into(),
                    ));
                }
                correspondences += 1;
            }
        }
    }

    // (c) three-part analogue: catalog membership on families of size ≤ 2,
    // and the four boundary coding cases on constructed instances
    let mut tilde_points = Vec::new();
    for &b in &grid {
        if FlowVariant::Tilde.is_doubled(b) {
            tilde_points.push(FlowPoint::new(FlowVariant::Tilde, b, Some(0))?);
            tilde_points.push(FlowPoint::new(FlowVariant::Tilde, b, Some(1))?);
        } else {
            tilde_points.push(FlowPoint::new(FlowVariant::Tilde, b, None)?);
        }
    }
    for f in subsets_up_to(&s_grid, 2) {
        let f = CirclePlacement::new(f).unwrap();
        let base = s3_structure(&f);
        for t in &tilde_points {
            let trace = partition_from_flowpoint_s3(t, &f)?;
            let mut expanded = Structure::empty(crate::circle::star_signature(3), base.size());
            for tuple in base.relation(0) {
                expanded.insert(0, tuple.clone())?;
            }
            for (v, &part) in trace.parts.iter().enumerate() {
                expanded.insert(1 + part, vec![v])?;
            }
            if !star3.contains(&expanded)? {
                return Ok(CriterionReport::new(
                    id,
                    false,
                    "a three-part coded partition leaves the starred age".into(),
                ));
            }
            memberships += 1;
        }
    }

    let angle = |n: i64, d: i64| TurnAngle::new(n, d).unwrap();
    let single = |a: TurnAngle| CirclePlacement::new(vec![a]).unwrap();
    let tilde = |b: TurnAngle, l: u8| FlowPoint::new(FlowVariant::Tilde, b, Some(l)).unwrap();
    // dense-set coded angle: both labels at the coded angle itself
    let phi_cases = [
        (tilde(angle(0, 1), 0), single(angle(0, 1)), 0usize),
        (tilde(angle(0, 1), 1), single(angle(0, 1)), 2),
        // coded angle a third turn before a dense point: boundary τ + 1/3
        (tilde(angle(1, 15), 0), single(angle(2, 5)), 1),
        (tilde(angle(1, 15), 1), single(angle(2, 5)), 0),
        // coded angle a third turn after a dense point: boundary τ + 2/3
        (tilde(angle(8, 15), 0), single(angle(1, 5)), 2),
        (tilde(angle(8, 15), 1), single(angle(1, 5)), 1),
    ];
    for (t, f, expected_part) in phi_cases {
        let trace = partition_from_flowpoint_s3(&t, &f)?;
        if trace.parts != vec![expected_part] {
            return Ok(CriterionReport::new(
                id,
                false,
                "a three-part boundary coding case came out wrong".into(),
            ));
        }
    }
    // an interior coded angle needs no label and no boundary resolution
    let interior = FlowPoint::new(FlowVariant::Tilde, angle(1, 8), None)?;
    let trace = partition_from_flowpoint_s3(&interior, &single(angle(2, 5)))?;
    if trace.parts != vec![0] {
        return Ok(CriterionReport::new(id, false, "interior coding case came out wrong".into()));
    }

    Ok(CriterionReport::new(
        id,
        true,
        format!("{memberships} coded traces in catalog; {correspondences} basis checks exact; boundary cases verbatim"),
    ))
}

/// Canonical forms agree with the permutation oracle on the circle-age
/// catalogs up to size 5 (pairwise and under random relabelings), and the
/// arrow engine agrees with full coloring enumeration on every corpus
/// instance with at most 12 copies.
fn oracle_equivalence(seed: u64) -> Result<CriterionReport> {
    let id = "oracle-equivalence";
    let limits = SearchLimits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut iso_checks = 0usize;
    for family in [Family::S2, Family::S2Star, Family::S3, Family::S3Star] {
        let cat = generate_age(&family, 5)?;
        let members: Vec<Structure> = cat.members_up_to(5).cloned().collect();
        for (i, a) in members.iter().enumerate() {
            // pairwise against the permutation oracle (same-size pairs)
            for b in members.iter().skip(i) {
                if a.size() != b.size() {
                    continue;
                }
                let fast = a.is_isomorphic_to(b)?;
                let slow = isomorphic_by_permutation_search(a, b);
                if fast != slow {
                    return Ok(CriterionReport::new(
                        id,
                        false,
                        format!("{}: canonical and oracle disagree", family.name()),
                    ));
                }
                iso_checks += 1;
            }
            // random relabelings must keep the code
            let mut perm: Vec<usize> = (0..a.size()).collect();
            perm.shuffle(&mut rng);
            let relabeled = a.apply_permutation(&perm);
            if a.canonical_code() != relabeled.canonical_code() {
                return Ok(CriterionReport::new(
                    id,
                    false,
                    format!("{}: relabeling changed the code", family.name()),
                ));
            }
        }
    }

    // arrow corpus: every instance with at most 12 copies of A
    let s2 = generate_age(&Family::S2, 4)?;
    let s3 = generate_age(&Family::S3, 4)?;
    let point = linear_order(1);
    let arc = linear_order(2);
    let mut corpus: Vec<(Structure, Structure, Structure, usize, usize)> = Vec::new();
    for c in s2.members_up_to(4) {
        for b in [cyclic_triangle(), linear_order(3)] {
            for a in [point.clone(), arc.clone()] {
                for k in [2usize, 3] {
                    corpus.push((c.clone(), b.clone(), a.clone(), k, 1));
                }
            }
        }
    }
    for c in s3.members_up_to(4) {
        let b3: Vec<Structure> = s3.members_of_size(3).cloned().collect();
        for b in b3 {
            for (k, l) in [(2usize, 1usize), (3, 2)] {
                corpus.push((c.clone(), b.clone(), point.clone(), k, l));
            }
        }
    }
    corpus.push((linear_order(5), linear_order(3), linear_order(2), 2, 1));
    corpus.push((linear_order(5), linear_order(4), linear_order(2), 2, 1));
    corpus.push((linear_order(4), linear_order(3), linear_order(2), 3, 2));

    let mut arrow_checks = 0usize;
    for (c, b, a, k, l) in corpus {
        let copies_a = a.copies_in(&c)?;
        if copies_a.len() > 12 {
            continue;
        }
        let q = ArrowQuery::new(c, b, a, k, l)?;
        let cert = check_arrow(&q, &limits)?;
        let copies_b = q.b.copies_in(&q.c)?;
        let members: Vec<Vec<usize>> = copies_b
            .iter()
            .map(|bc| {
                copies_a
                    .iter()
                    .enumerate()
                    .filter(|(_, ac)| ac.is_subset(bc))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let (oracle_holds, _) = arrow_by_full_enumeration(copies_a.len(), k, l, &members)?;
        if cert.holds != oracle_holds {
            return Ok(CriterionReport::new(
                id,
                false,
                "arrow engine and full enumeration disagree".into(),
            ));
        }
        arrow_checks += 1;
    }

    // exercise the seeded rng so distinct seeds stay distinguishable in
    // reports without affecting the verdict
    let _: u32 = rng.gen();

    Ok(CriterionReport::new(
        id,
        true,
        format!("{iso_checks} isomorphism checks and {arrow_checks} arrow instances agree with brute force"),
    ))
}
