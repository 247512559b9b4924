//! Cross-route invariants: every check here pits one computation path
//! against an independent one (placement enumeration vs. combinatorial
//! characterization, transforms vs. embedding searches, searches vs.
//! certificates).

use std::collections::BTreeSet;

use structural_ramsey::arrow::{search_arrow_witness, ArrowSearchOutcome, SearchLimits};
use structural_ramsey::catalog::{check_jep, generate_age, linear_order, Family, WitnessKind};
use structural_ramsey::circle::{
    digraph_signature, placements_of_size, realize, s2_star_structure, s2_structure,
    s3_star_structure, s3_structure, CircleFamily, CirclePlacement, TurnAngle,
};
use structural_ramsey::expansion::{
    check_expansion_property, list_expansions, named_pair, reduct, transform_s2star_q2,
    transform_s3star_q3, EpOutcome,
};
use structural_ramsey::oracles::grid_realize;
use structural_ramsey::structure::Structure;

fn angle(n: i64, d: i64) -> TurnAngle {
    TurnAngle::new(n, d).unwrap()
}

/// A tournament is a local order when every out-set and in-set induces a
/// transitive tournament. This characterization of the circular age is
/// independent of the placement machinery.
fn is_local_order(t: &Structure) -> bool {
    let n = t.size();
    for u in 0..n {
        for v in 0..n {
            if u != v && t.has(0, &[u, v]) == t.has(0, &[v, u]) {
                return false; // not a tournament
            }
        }
    }
    for v in 0..n {
        for outward in [true, false] {
            let nbrs: Vec<usize> = (0..n)
                .filter(|&u| u != v)
                .filter(|&u| {
                    let tuple = if outward { [v, u] } else { [u, v] };
                    t.has(0, &tuple)
                })
                .collect();
            // transitivity of the induced sub-tournament
            for &a in &nbrs {
                for &b in &nbrs {
                    for &c in &nbrs {
                        if t.has(0, &[a, b]) && t.has(0, &[b, c]) && !t.has(0, &[a, c]) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

#[test]
fn s2_age_equals_local_orders() {
    // placement route vs. neighborhood-transitivity route, exhaustively to
    // size 5
    let s2 = generate_age(&Family::S2, 5).unwrap();
    let tournaments = generate_age(&Family::Tournaments, 5).unwrap();
    for size in 1..=5 {
        let from_placements: BTreeSet<_> = s2
            .members_of_size(size)
            .map(|m| m.canonical_code())
            .collect();
        let from_filter: BTreeSet<_> = tournaments
            .members_of_size(size)
            .filter(|m| is_local_order(m))
            .map(|m| m.canonical_code())
            .collect();
        assert_eq!(from_placements, from_filter, "size {size}");
    }
}

#[test]
fn realize_agrees_with_the_age_and_the_grid() {
    // every tournament of size ≤ 4: the placement search, the age catalog
    // and the bounded grid oracle must agree on realizability
    let tournaments = generate_age(&Family::Tournaments, 4).unwrap();
    let s2 = generate_age(&Family::S2, 4).unwrap();
    for (_, t) in tournaments.members() {
        let by_search = realize(CircleFamily::S2, t, 7).unwrap();
        let by_catalog = s2.contains(t).unwrap();
        assert_eq!(by_search.is_some(), by_catalog);
        let by_grid = grid_realize(CircleFamily::S2, t, 11).unwrap();
        assert_eq!(by_search.is_some(), by_grid.is_some());
        if let Some(p) = by_search {
            assert!(s2_structure(&p).is_isomorphic_to(t).unwrap());
        }
    }
}

#[test]
fn realize_s3_members_and_refutes_cyclic_triangle() {
    let s3 = generate_age(&Family::S3, 4).unwrap();
    for (_, m) in s3.members() {
        let p = realize(CircleFamily::S3, m, 7).unwrap().expect("member is realizable");
        assert!(s3_structure(&p).is_isomorphic_to(m).unwrap());
    }
    let mut c3 = Structure::empty(digraph_signature(), 3);
    for (u, v) in [(0, 1), (1, 2), (2, 0)] {
        c3.insert(0, vec![u, v]).unwrap();
    }
    assert!(realize(CircleFamily::S3, &c3, 7).unwrap().is_none());
    assert!(grid_realize(CircleFamily::S3, &c3, 11).unwrap().is_none());
}

#[test]
fn star_reducts_equal_plain_structures() {
    for p in placements_of_size(CircleFamily::S2Star, 4) {
        let star = s2_star_structure(&p);
        let plain = s2_structure(&p);
        assert_eq!(reduct(&star, plain.signature()).unwrap(), plain);
    }
    for p in placements_of_size(CircleFamily::S3Star, 3) {
        let star = s3_star_structure(&p);
        let plain = s3_structure(&p);
        assert_eq!(reduct(&star, plain.signature()).unwrap(), plain);
    }
}

#[test]
fn starred_parts_are_chains() {
    // every part of every starred member induces a transitive tournament
    for (family, parts) in [(Family::S2Star, 2usize), (Family::S3Star, 3)] {
        let cat = generate_age(&family, 5).unwrap();
        for (_, m) in cat.members() {
            for j in 0..parts {
                let members: BTreeSet<usize> = m.relation(1 + j).iter().map(|t| t[0]).collect();
                let induced = m.induced(&members).unwrap();
                let k = induced.size();
                for u in 0..k {
                    for v in 0..k {
                        if u != v {
                            assert!(
                                induced.has(0, &[u, v]) != induced.has(0, &[v, u]),
                                "parts carry a total arc relation"
                            );
                        }
                        for w in 0..k {
                            if induced.has(0, &[u, v]) && induced.has(0, &[v, w]) {
                                assert!(induced.has(0, &[u, w]));
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn transform_agrees_with_angle_sorting() {
    // the chain produced by the two-part rewrite orders points by their
    // half-turn-symmetrized angle; likewise three parts with third turns
    for p in placements_of_size(CircleFamily::S2Star, 4) {
        let star = s2_star_structure(&p);
        let chain = transform_s2star_q2(&star).unwrap();
        let keys: Vec<TurnAngle> = p
            .points()
            .iter()
            .enumerate()
            .map(|(v, &t)| {
                let sym = if star.has(2, &[v]) { t.add(angle(1, 2)) } else { t };
                sym.sub(angle(3, 4))
            })
            .collect();
        for u in 0..p.len() {
            for v in 0..p.len() {
                if u != v {
                    assert_eq!(chain.has(0, &[u, v]), keys[u] < keys[v]);
                }
            }
        }
    }
    for p in placements_of_size(CircleFamily::S3Star, 4) {
        let star = s3_star_structure(&p);
        let chain = transform_s3star_q3(&star).unwrap();
        let keys: Vec<TurnAngle> = p
            .points()
            .iter()
            .enumerate()
            .map(|(v, &t)| {
                let part = (0..3).find(|&j| star.has(1 + j, &[v])).unwrap();
                t.sub(angle(part as i64, 3)).sub(angle(11, 12))
            })
            .collect();
        for u in 0..p.len() {
            for v in 0..p.len() {
                if u != v {
                    assert_eq!(chain.has(0, &[u, v]), keys[u] < keys[v]);
                }
            }
        }
    }
}

#[test]
fn transforms_preserve_embeddability() {
    let star2 = generate_age(&Family::S2Star, 4).unwrap();
    let members: Vec<&Structure> = star2.members().map(|(_, m)| m).collect();
    for a in &members {
        for b in &members {
            let direct = !a.embeddings_into(b).unwrap().is_empty();
            let ta = transform_s2star_q2(a).unwrap();
            let tb = transform_s2star_q2(b).unwrap();
            let through = !ta.embeddings_into(&tb).unwrap().is_empty();
            assert_eq!(direct, through);
        }
    }
    let star3 = generate_age(&Family::S3Star, 3).unwrap();
    let members: Vec<&Structure> = star3.members().map(|(_, m)| m).collect();
    for a in &members {
        for b in &members {
            let direct = !a.embeddings_into(b).unwrap().is_empty();
            let ta = transform_s3star_q3(a).unwrap();
            let tb = transform_s3star_q3(b).unwrap();
            let through = !ta.embeddings_into(&tb).unwrap().is_empty();
            assert_eq!(direct, through);
        }
    }
}

#[test]
fn expansion_counts_match_reduct_grouping() {
    // enumeration route vs. catalog-grouping route: t(A) equals the number
    // of expanded classes whose reduct is isomorphic to A
    for name in ["s2", "s3"] {
        let pair = named_pair(name, 4).unwrap();
        for a in pair.base().members_up_to(4) {
            let by_enumeration = list_expansions(&pair, a).unwrap().count;
            let by_grouping = pair
                .star()
                .members_up_to(4)
                .filter(|m| m.size() == a.size())
                .filter(|m| {
                    reduct(m, pair.signature().base())
                        .unwrap()
                        .is_isomorphic_to(a)
                        .unwrap()
                })
                .count();
            assert_eq!(by_enumeration, by_grouping, "pair {name}, size {}", a.size());
        }
    }
}

#[test]
fn ep_witnesses_are_monotone_in_bound() {
    let pair = named_pair("s2", 6).unwrap();
    let point = linear_order(1);
    let at_four = check_expansion_property(&pair, &point, 4).unwrap();
    let at_six = check_expansion_property(&pair, &point, 6).unwrap();
    match (at_four, at_six) {
        (EpOutcome::Witness { witness: w4, .. }, EpOutcome::Witness { witness: w6, .. }) => {
            assert_eq!(w4, w6, "the smallest witness never changes as the bound grows");
        }
        other => panic!("expected witnesses at both bounds, got {other:?}"),
    }
}

#[test]
fn jep_witnesses_remain_valid_at_larger_bounds() {
    let cat = generate_age(&Family::S2, 6).unwrap();
    let t3 = linear_order(3);
    let small = check_jep(&cat, &t3, &t3, 4).unwrap();
    assert_eq!(small.kind, WitnessKind::Jep);
    let large = check_jep(&cat, &t3, &t3, 6).unwrap();
    assert_eq!(small.witness, large.witness);
}

#[test]
fn sorted_subclass_arrow_instances_have_witnesses() {
    // the sorted partitioned chains support pigeonhole-style arrow
    // witnesses for all embedded pairs of members of size ≤ 3
    let cat = generate_age(&Family::Q2K, 8).unwrap();
    let limits = SearchLimits::default();
    let small: Vec<Structure> = cat.members_up_to(3).cloned().collect();
    let mut witnessed = 0usize;
    for a in &small {
        for b in &small {
            if a.embeddings_into(b).unwrap().is_empty() {
                continue;
            }
            match search_arrow_witness(&cat, b, a, 2, 1, 8, &limits).unwrap() {
                ArrowSearchOutcome::Witness { .. } => witnessed += 1,
                ArrowSearchOutcome::NoneUpToBound { .. } => {
                    panic!("no witness for an embedded pair of sorted chains")
                }
            }
        }
    }
    assert!(witnessed >= 20, "covered {witnessed} embedded pairs");
}

#[test]
fn type_colorings_are_isomorphism_invariant() {
    use structural_ramsey::arrow::expansion_type_coloring;
    let pair = named_pair("s2", 4).unwrap();
    let point = linear_order(1);
    for c in pair.base().members_up_to(4) {
        for c_star in list_expansions(&pair, c).unwrap().representatives {
            let tc = expansion_type_coloring(&pair, &c_star, &point).unwrap();
            // copies supporting isomorphic expanded substructures share a color
            for (i, ci) in tc.coloring.domain.iter().enumerate() {
                for (j, cj) in tc.coloring.domain.iter().enumerate() {
                    let iso = c_star
                        .induced(ci)
                        .unwrap()
                        .is_isomorphic_to(&c_star.induced(cj).unwrap())
                        .unwrap();
                    assert_eq!(iso, tc.coloring.values[i] == tc.coloring.values[j]);
                }
            }
        }
    }
}

#[test]
fn rotation_gives_isomorphic_placement_structures() {
    let p = CirclePlacement::new(vec![angle(0, 1), angle(1, 5), angle(3, 5), angle(2, 7), angle(5, 7)])
        .unwrap();
    for q in [angle(1, 5), angle(6, 7), angle(9, 11)] {
        let rotated = p.rotate(q).unwrap();
        assert!(s2_structure(&p).is_isomorphic_to(&s2_structure(&rotated)).unwrap());
        assert!(s3_structure(&p).is_isomorphic_to(&s3_structure(&rotated)).unwrap());
        // the angle correspondence itself is the isomorphism
        let mapping: Vec<usize> = p
            .points()
            .iter()
            .map(|&t| rotated.points().iter().position(|&u| u == t.add(q)).unwrap())
            .collect();
        let m = structural_ramsey::structure::Mapping::new(
            s2_structure(&p),
            s2_structure(&rotated),
            mapping,
        )
        .unwrap();
        assert!(m.is_embedding().unwrap());
    }
}

#[test]
fn embedding_definition_expansion() {
    // is_embedding(m) ⇔ m is injective and the induced image is a copy of
    // the source via m, checked over all maps of small structures
    let s2 = generate_age(&Family::S2, 4).unwrap();
    let sources: Vec<Structure> = s2.members_up_to(2).cloned().collect();
    let targets: Vec<Structure> = s2.members_of_size(3).cloned().collect();
    for a in &sources {
        for b in &targets {
            let mut images = vec![0usize; a.size()];
            loop {
                let m = structural_ramsey::structure::Mapping::new(
                    a.clone(),
                    b.clone(),
                    images.clone(),
                )
                .unwrap();
                let fast = m.is_embedding().unwrap();
                let injective =
                    images.iter().collect::<BTreeSet<_>>().len() == images.len();
                let by_definition = injective && {
                    let range: BTreeSet<usize> = images.iter().copied().collect();
                    let induced = b.induced(&range).unwrap();
                    // relabel the source through the rank of each image
                    let ranks: Vec<usize> = images
                        .iter()
                        .map(|x| range.iter().position(|y| y == x).unwrap())
                        .collect();
                    a.apply_permutation(&ranks) == induced
                };
                assert_eq!(fast, by_definition, "images {images:?}");
                // odometer
                let mut i = 0;
                loop {
                    if i == images.len() {
                        break;
                    }
                    images[i] += 1;
                    if images[i] < b.size() {
                        break;
                    }
                    images[i] = 0;
                    i += 1;
                }
                if i == images.len() {
                    break;
                }
            }
        }
    }
}
