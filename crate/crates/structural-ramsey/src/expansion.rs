//! Expansions and reducts across signature extensions.
//!
//! An expansion pair couples a base catalog with a catalog over an enlarged
//! signature. Expansion counting enumerates every assignment of the extra
//! relations and keeps the assignments that land in the expanded catalog;
//! the count t(A) of surviving isomorphism classes is the combinatorial
//! quantity bounding Ramsey degrees from above.
//!
//! The module also houses the two arc-rewriting transforms between the
//! starred circular structures and the partitioned dense chains. Both
//! validate their outputs: they are only meaningful on age members, and a
//! non-member input surfaces as a loud integrity error instead of garbage.

use std::collections::BTreeMap;

use crate::catalog::{generate_age, AgeCatalog, Family};
use crate::circle::{extract_parts, star_signature};
use crate::structure::{CanonicalCode, Signature, Structure, Symbol};
use crate::{Error, Result};

/// A base signature together with the extra relation symbols of an
/// expansion. The combined object is itself a valid signature with the base
/// symbols first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExpandedSignature {
    base: Signature,
    extra: Vec<Symbol>,
    combined: Signature,
}

impl ExpandedSignature {
    pub fn new<S: Into<String>>(base: Signature, extra: Vec<(S, usize)>) -> Result<ExpandedSignature> {
        let mut symbols: Vec<(String, usize)> = base
            .symbols()
            .iter()
            .map(|s| (s.name.clone(), s.arity))
            .collect();
        let extra: Vec<Symbol> = extra
            .into_iter()
            .map(|(name, arity)| Symbol { name: name.into(), arity })
            .collect();
        for e in &extra {
            symbols.push((e.name.clone(), e.arity));
        }
        let combined = Signature::new(symbols)?; // rejects name clashes
        Ok(ExpandedSignature { base, extra, combined })
    }

    pub fn base(&self) -> &Signature {
        &self.base
    }

    pub fn extra(&self) -> &[Symbol] {
        &self.extra
    }

    pub fn combined(&self) -> &Signature {
        &self.combined
    }
}

/// Forget the extra relations of a structure over an extension of `base`.
pub fn reduct(a_star: &Structure, base: &Signature) -> Result<Structure> {
    if !base.is_prefix_of(a_star.signature()) {
        return Err(Error::SignatureMismatch(
            "structure signature does not extend the requested base".into(),
        ));
    }
    let relations = a_star.relations()[..base.len()].to_vec();
    Structure::new(base.clone(), a_star.size(), relations)
}

/// A base class and an expanded class over an enlarged signature.
#[derive(Clone, Debug)]
pub struct ExpansionPair {
    pub name: String,
    signature: ExpandedSignature,
    base: AgeCatalog,
    star: AgeCatalog,
}

impl ExpansionPair {
    /// Couple two catalogs. Construction verifies that the reduct of every
    /// expanded member is a base member.
    pub fn new(
        name: impl Into<String>,
        signature: ExpandedSignature,
        base: AgeCatalog,
        star: AgeCatalog,
    ) -> Result<ExpansionPair> {
        if base.signature() != signature.base() {
            return Err(Error::SignatureMismatch(
                "base catalog signature does not match the pair".into(),
            ));
        }
        if star.signature() != signature.combined() {
            return Err(Error::SignatureMismatch(
                "expanded catalog signature does not match the pair".into(),
            ));
        }
        for (_, m) in star.members() {
            let r = reduct(m, signature.base())?;
            if r.size() <= base.bound() && !base.contains(&r)? {
                return Err(Error::Integrity(format!(
                    "expanded member of size {} reducts outside the base catalog",
                    m.size()
                )));
            }
        }
        Ok(ExpansionPair { name: name.into(), signature, base, star })
    }

    pub fn signature(&self) -> &ExpandedSignature {
        &self.signature
    }

    pub fn base(&self) -> &AgeCatalog {
        &self.base
    }

    pub fn star(&self) -> &AgeCatalog {
        &self.star
    }
}

/// The built-in pairs.
///
/// * `s2` — local orders expanded by the half-plane parts.
/// * `s3` — the third-turn digraphs expanded by the sector parts.
/// * `lo-q2` — plain chains expanded by two free unary labels.
/// * `q2k` — partitioned sets expanded by a chain placing P0 below P1.
/// * `lo-trivial` — plain chains with no extra symbols.
pub fn named_pair(name: &str, bound: usize) -> Result<ExpansionPair> {
    match name {
        "s2" => ExpansionPair::new(
            name,
            ExpandedSignature::new(Family::S2.signature(), vec![("P0", 1), ("P1", 1)])?,
            generate_age(&Family::S2, bound)?,
            generate_age(&Family::S2Star, bound)?,
        ),
        "s3" => ExpansionPair::new(
            name,
            ExpandedSignature::new(
                Family::S3.signature(),
                vec![("P0", 1), ("P1", 1), ("P2", 1)],
            )?,
            generate_age(&Family::S3, bound)?,
            generate_age(&Family::S3Star, bound)?,
        ),
        "lo-q2" => ExpansionPair::new(
            name,
            ExpandedSignature::new(Family::LinearOrders.signature(), vec![("P0", 1), ("P1", 1)])?,
            generate_age(&Family::LinearOrders, bound)?,
            generate_age(&Family::Qn(2), bound)?,
        ),
        "q2k" => ExpansionPair::new(
            name,
            ExpandedSignature::new(Family::Parts2.signature(), vec![("arc", 2)])?,
            generate_age(&Family::Parts2, bound)?,
            generate_age(&Family::Q2K, bound)?,
        ),
        "lo-trivial" => {
            let cat = generate_age(&Family::LinearOrders, bound)?;
            ExpansionPair::new(
                name,
                ExpandedSignature::new(Family::LinearOrders.signature(), Vec::<(String, usize)>::new())?,
                cat.clone(),
                cat,
            )
        }
        other => Err(Error::InvalidInput(format!("unknown expansion pair {other:?}"))),
    }
}

pub fn pair_names() -> &'static [&'static str] {
    &["s2", "s3", "lo-q2", "q2k", "lo-trivial"]
}

/// The expansions of one base structure: count and representatives.
#[derive(Clone, Debug)]
pub struct ExpansionCount {
    pub structure: Structure,
    pub count: usize,
    pub representatives: Vec<Structure>,
}

/// Enumerate every assignment of the extra relations over `a`'s universe,
/// keep those landing in the expanded catalog, and deduplicate by canonical
/// code. The assignment space is guarded: it grows as 2^(Σ nᵃ) over the
/// extra symbols.
pub fn list_expansions(pair: &ExpansionPair, a: &Structure) -> Result<ExpansionCount> {
    if !pair.base.contains(a)? {
        return Err(Error::InvalidInput(
            "expansion counting requires a base catalog member".into(),
        ));
    }
    if a.size() > pair.star.bound() {
        return Err(Error::AboveBound { size: a.size(), bound: pair.star.bound() });
    }
    let n = a.size();
    let mut all_tuples: Vec<(usize, Vec<usize>)> = Vec::new(); // (symbol index in combined, tuple)
    for (i, sym) in pair.signature.extra().iter().enumerate() {
        let symbol = pair.signature.base().len() + i;
        let mut tuple = vec![0usize; sym.arity];
        collect_tuples(n, sym.arity, &mut tuple, 0, &mut |t| {
            all_tuples.push((symbol, t.to_vec()))
        });
    }
    if all_tuples.len() > 24 {
        return Err(Error::Resource(format!(
            "expansion assignment space 2^{} refused",
            all_tuples.len()
        )));
    }
    let mut classes: BTreeMap<CanonicalCode, Structure> = BTreeMap::new();
    for mask in 0u64..(1u64 << all_tuples.len()) {
        let mut candidate = Structure::empty(pair.signature.combined().clone(), n);
        for (si, rel) in a.relations().iter().enumerate() {
            for t in rel {
                candidate.insert(si, t.clone())?;
            }
        }
        for (bit, (symbol, tuple)) in all_tuples.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                candidate.insert(*symbol, tuple.clone())?;
            }
        }
        let code = candidate.canonical_code();
        if classes.contains_key(&code) {
            continue;
        }
        if pair.star.contains(&candidate)? {
            classes.insert(code, candidate);
        }
    }
    let representatives: Vec<Structure> = classes.into_values().collect();
    Ok(ExpansionCount { structure: a.clone(), count: representatives.len(), representatives })
}

fn collect_tuples(
    n: usize,
    arity: usize,
    tuple: &mut Vec<usize>,
    pos: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if pos == arity {
        f(tuple);
        return;
    }
    for v in 0..n {
        tuple[pos] = v;
        collect_tuples(n, arity, tuple, pos + 1, f);
    }
}

/// Per-size maximum of t(A) over the base catalog. A base member with no
/// expansion at all violates the construction of expanded ages and is an
/// integrity error.
pub fn precompactness_profile(pair: &ExpansionPair, bound: usize) -> Result<BTreeMap<usize, usize>> {
    if bound > pair.base.bound() || bound > pair.star.bound() {
        return Err(Error::AboveBound {
            size: bound,
            bound: pair.base.bound().min(pair.star.bound()),
        });
    }
    let mut profile = BTreeMap::new();
    for size in 1..=bound {
        let mut max = 0usize;
        for a in pair.base.members_of_size(size) {
            let t = list_expansions(pair, a)?.count;
            if t == 0 {
                return Err(Error::Integrity(format!(
                    "base member of size {size} has no expansion in the expanded catalog"
                )));
            }
            max = max.max(t);
        }
        profile.insert(size, max);
    }
    Ok(profile)
}

/// A refuted candidate in an expansion-property search: some expansion of
/// the candidate fails to contain the required expanded structure.
#[derive(Clone, Debug)]
pub struct EpRefutation {
    pub candidate: Structure,
    pub refuting_expansion: Structure,
    pub unembedded: Structure,
}

/// Outcome of an expansion-property search.
#[derive(Clone, Debug)]
pub enum EpOutcome {
    Witness { witness: Structure, pairs_checked: usize },
    NoneUpToBound { refutations: Vec<EpRefutation> },
}

impl EpOutcome {
    pub fn witness(&self) -> Option<&Structure> {
        match self {
            EpOutcome::Witness { witness, .. } => Some(witness),
            EpOutcome::NoneUpToBound { .. } => None,
        }
    }
}

/// Search for b in the base catalog (size ≤ bound) such that every
/// expansion of `a` embeds in every expansion of b; smallest witness in
/// (size, code) order, or the per-candidate refutations.
pub fn check_expansion_property(
    pair: &ExpansionPair,
    a: &Structure,
    bound: usize,
) -> Result<EpOutcome> {
    let expansions_a = list_expansions(pair, a)?.representatives;
    search_ep(pair, &expansions_a, bound)
}

/// The per-expansion form: search for b such that every expansion of b
/// contains the single expanded structure `a_star`.
pub fn ep_witness_for_expansion(
    pair: &ExpansionPair,
    a_star: &Structure,
    bound: usize,
) -> Result<EpOutcome> {
    if !pair.star.contains(a_star)? {
        return Err(Error::InvalidInput(
            "the expanded structure is not a member of the expanded catalog".into(),
        ));
    }
    search_ep(pair, std::slice::from_ref(a_star), bound)
}

fn search_ep(pair: &ExpansionPair, required: &[Structure], bound: usize) -> Result<EpOutcome> {
    let mut refutations = Vec::new();
    'candidates: for b in pair.base.members_up_to(bound) {
        let expansions_b = list_expansions(pair, b)?.representatives;
        let mut pairs_checked = 0usize;
        for b_star in &expansions_b {
            for a_star in required {
                pairs_checked += 1;
                if a_star.embeddings_into(b_star)?.is_empty() {
                    refutations.push(EpRefutation {
                        candidate: b.clone(),
                        refuting_expansion: b_star.clone(),
                        unembedded: a_star.clone(),
                    });
                    continue 'candidates;
                }
            }
        }
        return Ok(EpOutcome::Witness { witness: b.clone(), pairs_checked });
    }
    Ok(EpOutcome::NoneUpToBound { refutations })
}

/// Re-check a refutation by a direct embedding search.
pub fn verify_ep_refutation(r: &EpRefutation) -> Result<bool> {
    Ok(r.unembedded.embeddings_into(&r.refuting_expansion)?.is_empty())
}

fn strict_linear_order_ok(s: &Structure, arc: usize) -> bool {
    let n = s.size();
    for u in 0..n {
        if s.has(arc, &[u, u]) {
            return false;
        }
        for v in (u + 1)..n {
            if s.has(arc, &[u, v]) == s.has(arc, &[v, u]) {
                return false; // exactly one arc per pair
            }
        }
    }
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                if s.has(arc, &[u, v]) && s.has(arc, &[v, w]) && !s.has(arc, &[u, w]) {
                    return false;
                }
            }
        }
    }
    true
}

fn copy_structure_with_arcs(
    template: &Structure,
    arc: usize,
    arcs: Vec<(usize, usize)>,
) -> Structure {
    let mut out = Structure::empty(template.signature().clone(), template.size());
    for (si, rel) in template.relations().iter().enumerate() {
        if si == arc {
            continue;
        }
        for t in rel {
            out.insert(si, t.clone()).unwrap();
        }
    }
    for (u, v) in arcs {
        out.insert(arc, vec![u, v]).unwrap();
    }
    out
}

/// Rewrite a two-part starred tournament into a partitioned chain by
/// reversing every arc whose endpoints lie in distinct parts; parts are
/// kept. The same rule sends the chain back, so the map is an involution.
/// The output must come out a strict linear order, which certifies the
/// input as an age member.
pub fn transform_s2star_q2(a_star: &Structure) -> Result<Structure> {
    two_part_reversal(a_star, true)
}

/// The inverse direction; the identical rule with the linearity check moved
/// to the input side.
pub fn transform_q2_s2star(a_star: &Structure) -> Result<Structure> {
    two_part_reversal(a_star, false)
}

fn two_part_reversal(a_star: &Structure, check_output: bool) -> Result<Structure> {
    if a_star.signature() != &star_signature(2) {
        return Err(Error::SignatureMismatch(
            "expected a structure over {arc, P0, P1}".into(),
        ));
    }
    let parts = extract_parts(a_star, 2)
        .ok_or_else(|| Error::Integrity("unary parts do not partition the universe".into()))?;
    if !check_output && !strict_linear_order_ok(a_star, 0) {
        return Err(Error::Integrity("input arc relation is not a linear order".into()));
    }
    let mut arcs = Vec::new();
    for t in a_star.relation(0) {
        let (u, v) = (t[0], t[1]);
        if parts[u] == parts[v] {
            arcs.push((u, v));
        } else {
            arcs.push((v, u));
        }
    }
    let out = copy_structure_with_arcs(a_star, 0, arcs);
    if check_output && !strict_linear_order_ok(&out, 0) {
        return Err(Error::Integrity(
            "reversal did not produce a linear order; the input is not an age member".into(),
        ));
    }
    Ok(out)
}

/// Rewrite a three-part starred digraph into a partitioned chain. Pairs in
/// one part keep their arc. For x in P_j and y in P_{j+1} (indices mod 3):
/// an arc x → y is reversed, and a missing arc is created as x → y. The
/// output must come out a strict linear order.
pub fn transform_s3star_q3(a_star: &Structure) -> Result<Structure> {
    let parts = three_part_input(a_star)?;
    let n = a_star.size();
    let mut arcs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            if parts[y] == (parts[x] + 1) % 3 {
                // x in P_j, y in P_{j+1}: the only legal states are an arc
                // x → y or no arc at all
                if a_star.has(0, &[y, x]) {
                    return Err(Error::Integrity(
                        "arc against the sector orientation; not an age member".into(),
                    ));
                }
                if a_star.has(0, &[x, y]) {
                    arcs.push((y, x));
                } else {
                    arcs.push((x, y));
                }
            } else if parts[x] == parts[y] && a_star.has(0, &[x, y]) {
                arcs.push((x, y));
            }
        }
    }
    let out = copy_structure_with_arcs(a_star, 0, arcs);
    if !strict_linear_order_ok(&out, 0) {
        return Err(Error::Integrity(
            "rewriting did not produce a linear order; the input is not an age member".into(),
        ));
    }
    Ok(out)
}

/// The inverse rule: on a partitioned chain, a cross-sector arc y → x (for
/// x in P_j, y in P_{j+1}) is reversed back to x → y, and a cross-sector
/// arc x → y is deleted.
pub fn transform_q3_s3star(a_star: &Structure) -> Result<Structure> {
    let parts = three_part_input(a_star)?;
    if !strict_linear_order_ok(a_star, 0) {
        return Err(Error::Integrity("input arc relation is not a linear order".into()));
    }
    let n = a_star.size();
    let mut arcs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            if parts[y] == (parts[x] + 1) % 3 {
                if a_star.has(0, &[y, x]) {
                    arcs.push((x, y));
                }
                // an arc x → y in the chain came from a pair without an arc
            } else if parts[x] == parts[y] && a_star.has(0, &[x, y]) {
                arcs.push((x, y));
            }
        }
    }
    Ok(copy_structure_with_arcs(a_star, 0, arcs))
}

fn three_part_input(a_star: &Structure) -> Result<Vec<usize>> {
    if a_star.signature() != &star_signature(3) {
        return Err(Error::SignatureMismatch(
            "expected a structure over {arc, P0, P1, P2}".into(),
        ));
    }
    extract_parts(a_star, 3)
        .ok_or_else(|| Error::Integrity("unary parts do not partition the universe".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::{s2_star_structure, s3_star_structure, CirclePlacement, TurnAngle};

    fn angle(n: i64, d: i64) -> TurnAngle {
        TurnAngle::new(n, d).unwrap()
    }

    fn placement(points: &[(i64, i64)]) -> CirclePlacement {
        CirclePlacement::new(points.iter().map(|&(n, d)| angle(n, d)).collect()).unwrap()
    }

    #[test]
    fn reduct_forgets_extra_relations() {
        let pair = named_pair("s2", 3).unwrap();
        let starred = s2_star_structure(&placement(&[(0, 1), (1, 5), (3, 5)]));
        let r = reduct(&starred, pair.signature().base()).unwrap();
        assert_eq!(r.signature(), &Family::S2.signature());
        assert_eq!(r.relation(0), starred.relation(0));
        // a base structure is its own reduct
        let base = crate::catalog::linear_order(2);
        assert_eq!(reduct(&base, base.signature()).unwrap(), base);
        assert!(reduct(&base, pair.signature().combined()).is_err());
    }

    #[test]
    fn point_expansion_counts() {
        let s2 = named_pair("s2", 3).unwrap();
        let point = crate::catalog::linear_order(1);
        let t = list_expansions(&s2, &point).unwrap();
        assert_eq!(t.count, 2);

        let s3 = named_pair("s3", 3).unwrap();
        let t = list_expansions(&s3, &point).unwrap();
        assert_eq!(t.count, 3);
    }

    #[test]
    fn trivial_pair_has_unique_expansions() {
        let pair = named_pair("lo-trivial", 4).unwrap();
        let profile = precompactness_profile(&pair, 4).unwrap();
        assert!(profile.values().all(|&v| v == 1));
    }

    #[test]
    fn precompactness_profiles_at_size_one() {
        let s2 = named_pair("s2", 2).unwrap();
        assert_eq!(precompactness_profile(&s2, 1).unwrap()[&1], 2);
        let s3 = named_pair("s3", 2).unwrap();
        assert_eq!(precompactness_profile(&s3, 1).unwrap()[&1], 3);
    }

    #[test]
    fn reduct_compatibility_of_representatives() {
        let pair = named_pair("s2", 4).unwrap();
        for a in pair.base().members_up_to(3) {
            let exp = list_expansions(&pair, a).unwrap();
            for rep in &exp.representatives {
                let r = reduct(rep, pair.signature().base()).unwrap();
                assert!(r.is_isomorphic_to(a).unwrap());
            }
        }
    }

    #[test]
    fn two_part_transform_is_an_involution() {
        let starred = s2_star_structure(&placement(&[(0, 1), (1, 5), (3, 5)]));
        let chain = transform_s2star_q2(&starred).unwrap();
        assert!(strict_linear_order_ok(&chain, 0));
        let back = transform_q2_s2star(&chain).unwrap();
        assert_eq!(back, starred);
    }

    #[test]
    fn two_part_transform_keeps_same_part_arcs() {
        // both points in one part: nothing to reverse
        let starred = s2_star_structure(&placement(&[(0, 1), (1, 5)]));
        let chain = transform_s2star_q2(&starred).unwrap();
        assert_eq!(chain, starred);
        // single point unchanged
        let point = s2_star_structure(&placement(&[(0, 1)]));
        assert_eq!(transform_s2star_q2(&point).unwrap(), point);
    }

    #[test]
    fn three_part_transform_round_trips() {
        let starred = s3_star_structure(&placement(&[(0, 1), (2, 5), (5, 7)]));
        let chain = transform_s3star_q3(&starred).unwrap();
        assert!(strict_linear_order_ok(&chain, 0));
        let back = transform_q3_s3star(&chain).unwrap();
        assert_eq!(back, starred);
    }

    #[test]
    fn three_part_transform_creates_missing_cross_arcs() {
        // x at 0 in P0, y at 2/5 in P1, no arc between them
        let starred = s3_star_structure(&placement(&[(0, 1), (2, 5)]));
        assert!(!starred.has(0, &[0, 1]) && !starred.has(0, &[1, 0]));
        let chain = transform_s3star_q3(&starred).unwrap();
        assert!(chain.has(0, &[0, 1]), "an arc from x to y is created");
    }

    #[test]
    fn transform_rejects_non_members() {
        // cyclic triangle entirely inside P0 cannot be an age member
        let mut bad = Structure::empty(star_signature(2), 3);
        for (u, v) in [(0, 1), (1, 2), (2, 0)] {
            bad.insert(0, vec![u, v]).unwrap();
        }
        for v in 0..3 {
            bad.insert(1, vec![v]).unwrap();
        }
        assert!(matches!(transform_s2star_q2(&bad), Err(Error::Integrity(_))));
    }

    #[test]
    fn ep_trivial_pair_witnesses_immediately() {
        let pair = named_pair("lo-trivial", 3).unwrap();
        let point = crate::catalog::linear_order(1);
        match check_expansion_property(&pair, &point, 3).unwrap() {
            EpOutcome::Witness { witness, .. } => assert_eq!(witness, point),
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn ep_fails_for_free_labels_on_chains() {
        let pair = named_pair("lo-q2", 4).unwrap();
        let two_chain = crate::catalog::linear_order(2);
        match check_expansion_property(&pair, &two_chain, 4).unwrap() {
            EpOutcome::NoneUpToBound { refutations } => {
                assert_eq!(refutations.len(), 4, "one refutation per candidate");
                for r in &refutations {
                    assert!(verify_ep_refutation(r).unwrap());
                }
            }
            other => panic!("expected refutations, got {other:?}"),
        }
    }

    #[test]
    fn ep_witness_for_a_single_part_point() {
        // the arc pair has an all-P1 expansion, so the smallest structure
        // whose every expansion contains a P0 point is the cyclic triangle
        let pair = named_pair("s2", 5).unwrap();
        let mut p0_point = Structure::empty(star_signature(2), 1);
        p0_point.insert(1, vec![0]).unwrap();
        match ep_witness_for_expansion(&pair, &p0_point, 5).unwrap() {
            EpOutcome::Witness { witness, .. } => {
                assert_eq!(witness.size(), 3);
                assert_eq!(witness.automorphism_count(), 3, "cyclic triangle");
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn counting_rejects_non_members() {
        // the cyclic triangle is not in the third-turn age, so it has no
        // expansion count there
        let pair = named_pair("s3", 3).unwrap();
        let mut c3 = Structure::empty(crate::circle::digraph_signature(), 3);
        for (u, v) in [(0, 1), (1, 2), (2, 0)] {
            c3.insert(0, vec![u, v]).unwrap();
        }
        assert!(matches!(list_expansions(&pair, &c3), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn zero_expansion_members_are_an_integrity_error() {
        use crate::catalog::{generate_age, AgeCatalog, Family};
        let base = generate_age(&Family::LinearOrders, 2).unwrap();
        let sig = ExpandedSignature::new(Family::LinearOrders.signature(), vec![("P0", 1)]).unwrap();
        // a starred catalog holding only the labeled point: the 2-chain has
        // no expansion in it
        let mut point = Structure::empty(sig.combined().clone(), 1);
        point.insert(1, vec![0]).unwrap();
        let star = AgeCatalog::from_members("stub".into(), 2, vec![point]).unwrap();
        let pair = ExpansionPair::new("stub", sig, base, star).unwrap();
        assert!(matches!(
            precompactness_profile(&pair, 2),
            Err(Error::Integrity(_))
        ));
    }

    #[test]
    fn ep_witness_errors_outside_the_expanded_catalog() {
        let pair = named_pair("q2k", 3).unwrap();
        // mixed chain: P1 point below P0 point — not in the sorted class
        let mut mixed = Structure::empty(parts_then_arc_signature_for_tests(), 2);
        mixed.insert(1, vec![0]).unwrap();
        mixed.insert(0, vec![1]).unwrap();
        mixed.insert(2, vec![0, 1]).unwrap();
        assert!(matches!(
            ep_witness_for_expansion(&pair, &mixed, 3),
            Err(Error::InvalidInput(_))
        ));
    }

    fn parts_then_arc_signature_for_tests() -> Signature {
        crate::circle::parts_then_arc_signature()
    }
}
