//! Ages as finite catalogs: one canonical representative per isomorphism
//! class up to a size bound, verified hereditary.
//!
//! All "for all members" statements of the underlying classes become
//! bounded searches here. A search that exhausts its bound reports
//! `NoneUpToBound`, never a refutation: the classes are infinite and the
//! catalogs honest truncations.

use std::collections::BTreeMap;

use crate::circle::{
    digraph_signature, parts_signature, parts_then_arc_signature, placements_of_size,
    star_signature, CircleFamily,
};
use crate::structure::{CanonicalCode, Mapping, Signature, Structure};
use crate::{Error, Result};

/// A deterministic generator for the members of a class up to a size bound.
#[derive(Clone, Debug)]
pub enum Family {
    /// Local orders: the finite subtournaments of the dense circular
    /// tournament, generated from circle placements.
    S2,
    /// Local orders with the half-plane parts.
    S2Star,
    /// The circular digraph with the third-turn arc rule.
    S3,
    /// Same, with the three sector parts.
    S3Star,
    /// Linear orders with `n` unary labels: every labeled chain occurs.
    Qn(usize),
    /// The labeled chains in which every P0 element lies below every P1
    /// element, over the signature {P0, P1, arc}.
    Q2K,
    /// Sets partitioned into P0 and P1, no binary relation.
    Parts2,
    /// Plain linear orders.
    LinearOrders,
    /// All tournaments.
    Tournaments,
    /// A user-supplied list; hereditarity is verified, not repaired.
    Explicit { name: String, members: Vec<Structure> },
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::S2 => "s2".into(),
            Family::S2Star => "s2star".into(),
            Family::S3 => "s3".into(),
            Family::S3Star => "s3star".into(),
            Family::Qn(n) => format!("qn:{n}"),
            Family::Q2K => "q2k".into(),
            Family::Parts2 => "parts2".into(),
            Family::LinearOrders => "lo".into(),
            Family::Tournaments => "tournaments".into(),
            Family::Explicit { name, .. } => name.clone(),
        }
    }

    pub fn signature(&self) -> Signature {
        match self {
            Family::S2 | Family::S3 | Family::LinearOrders | Family::Tournaments => {
                digraph_signature()
            }
            Family::S2Star => star_signature(2),
            Family::S3Star => star_signature(3),
            Family::Qn(n) => star_signature(*n),
            Family::Q2K => parts_then_arc_signature(),
            Family::Parts2 => parts_signature(2),
            Family::Explicit { members, .. } => members
                .first()
                .map(|m| m.signature().clone())
                .unwrap_or_else(digraph_signature),
        }
    }

    pub fn parse(tag: &str) -> Result<Family> {
        match tag {
            "s2" => Ok(Family::S2),
            "s2star" => Ok(Family::S2Star),
            "s3" => Ok(Family::S3),
            "s3star" => Ok(Family::S3Star),
            "q2k" => Ok(Family::Q2K),
            "parts2" => Ok(Family::Parts2),
            "lo" => Ok(Family::LinearOrders),
            "tournaments" => Ok(Family::Tournaments),
            other => {
                if let Some(n) = other.strip_prefix("qn:") {
                    let n: usize = n
                        .parse()
                        .map_err(|e| Error::InvalidInput(format!("bad part count: {e}")))?;
                    if n == 0 {
                        return Err(Error::InvalidInput("qn needs at least one part".into()));
                    }
                    return Ok(Family::Qn(n));
                }
                Err(Error::InvalidInput(format!("unknown family tag {other:?}")))
            }
        }
    }

    /// Raw members of one size, before deduplication.
    fn raw_members(&self, size: usize, smaller: &[Vec<Structure>]) -> Vec<Structure> {
        match self {
            Family::S2 => circle_members(CircleFamily::S2, size),
            Family::S2Star => circle_members(CircleFamily::S2Star, size),
            Family::S3 => circle_members(CircleFamily::S3, size),
            Family::S3Star => circle_members(CircleFamily::S3Star, size),
            Family::Qn(n) => labeled_chains(*n, size),
            Family::Q2K => sorted_chains(size),
            Family::Parts2 => partitioned_sets(size),
            Family::LinearOrders => vec![linear_order(size)],
            Family::Tournaments => extend_tournaments(size, smaller),
            Family::Explicit { members, .. } => members
                .iter()
                .filter(|m| m.size() == size)
                .cloned()
                .collect(),
        }
    }
}

fn circle_members(family: CircleFamily, size: usize) -> Vec<Structure> {
    placements_of_size(family, size)
        .iter()
        .map(|p| family.structure(p))
        .collect()
}

/// The transitive tournament on `0..n` with arc i → j iff i < j. Throughout
/// the crate the arc relation of a chain is read as strictly-less-than.
pub fn linear_order(n: usize) -> Structure {
    let mut s = Structure::empty(digraph_signature(), n);
    for i in 0..n {
        for j in (i + 1)..n {
            s.insert(0, vec![i, j]).unwrap();
        }
    }
    s
}

/// All label sequences over `parts` labels on the `size`-chain. Labeled
/// chains are rigid, so the sequences are exactly the isomorphism classes.
fn labeled_chains(parts: usize, size: usize) -> Vec<Structure> {
    let mut out = Vec::new();
    let mut labels = vec![0usize; size];
    loop {
        let mut s = Structure::empty(star_signature(parts), size);
        for (i, &label) in labels.iter().enumerate() {
            for j in (i + 1)..size {
                s.insert(0, vec![i, j]).unwrap();
            }
            s.insert(1 + label, vec![i]).unwrap();
        }
        out.push(s);
        let mut i = 0;
        loop {
            if i == size {
                return out;
            }
            labels[i] += 1;
            if labels[i] < parts {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
    }
}

/// Chains whose P0 block precedes the P1 block, over {P0, P1, arc}.
fn sorted_chains(size: usize) -> Vec<Structure> {
    let sig = parts_then_arc_signature();
    (0..=size)
        .map(|zeros| {
            let mut s = Structure::empty(sig.clone(), size);
            for i in 0..size {
                for j in (i + 1)..size {
                    s.insert(2, vec![i, j]).unwrap();
                }
                s.insert(if i < zeros { 0 } else { 1 }, vec![i]).unwrap();
            }
            s
        })
        .collect()
}

fn partitioned_sets(size: usize) -> Vec<Structure> {
    let sig = parts_signature(2);
    (0..=size)
        .map(|zeros| {
            let mut s = Structure::empty(sig.clone(), size);
            for i in 0..size {
                s.insert(if i < zeros { 0 } else { 1 }, vec![i]).unwrap();
            }
            s
        })
        .collect()
}

/// Tournaments of `size`, built by adding one vertex to each smaller class
/// in every arc pattern.
fn extend_tournaments(size: usize, smaller: &[Vec<Structure>]) -> Vec<Structure> {
    if size == 1 {
        return vec![Structure::empty(digraph_signature(), 1)];
    }
    let base = match smaller.get(size - 2) {
        Some(b) => b,
        None => return Vec::new(),
    };
    let mut out = Vec::new();
    for t in base {
        let n = t.size();
        for pattern in 0..(1u64 << n) {
            let mut s = Structure::empty(digraph_signature(), n + 1);
            for tuple in t.relation(0) {
                s.insert(0, tuple.clone()).unwrap();
            }
            for v in 0..n {
                if pattern >> v & 1 == 1 {
                    s.insert(0, vec![v, n]).unwrap();
                } else {
                    s.insert(0, vec![n, v]).unwrap();
                }
            }
            out.push(s);
        }
    }
    out
}

/// Labeled chains with `parts` unary labels, up to a size bound: the age of
/// the dense partitioned order with that many dense parts.
pub fn qn_generator(parts: usize, bound: usize) -> Result<AgeCatalog> {
    if parts == 0 {
        return Err(Error::InvalidInput("need at least one part label".into()));
    }
    generate_age(&Family::Qn(parts), bound)
}

/// Isomorphism classes of a class's members up to a bound, keyed by
/// canonical code and verified hereditary.
#[derive(Clone, Debug)]
pub struct AgeCatalog {
    family_name: String,
    signature: Signature,
    bound: usize,
    members: BTreeMap<CanonicalCode, Structure>,
    by_size: Vec<Vec<CanonicalCode>>,
}

/// Build the catalog for a family. Fails loudly if the generated members
/// are not closed under one-point deletions.
#[allow(clippy::needless_range_loop)]
pub fn generate_age(family: &Family, bound: usize) -> Result<AgeCatalog> {
    if bound == 0 {
        return Err(Error::InvalidInput("catalog bound must be at least 1".into()));
    }
    let signature = family.signature();
    let mut per_size: Vec<Vec<Structure>> = Vec::new();
    let mut members = BTreeMap::new();
    let mut by_size = vec![Vec::new(); bound + 1];
    for size in 1..=bound {
        let raw = family.raw_members(size, &per_size);
        let mut classes: BTreeMap<CanonicalCode, Structure> = BTreeMap::new();
        for m in raw {
            if m.signature() != &signature {
                return Err(Error::SignatureMismatch(format!(
                    "generator for {} produced a member over a foreign signature",
                    family.name()
                )));
            }
            if m.size() != size {
                return Err(Error::Integrity(format!(
                    "generator for {} produced a size-{} member at size {size}",
                    family.name(),
                    m.size()
                )));
            }
            classes.entry(m.canonical_code()).or_insert(m);
        }
        for (code, m) in &classes {
            by_size[size].push(code.clone());
            members.insert(code.clone(), m.clone());
        }
        per_size.push(classes.into_values().collect());
    }
    let cat = AgeCatalog {
        family_name: family.name(),
        signature,
        bound,
        members,
        by_size,
    };
    cat.verify_hereditary()?;
    Ok(cat)
}

impl AgeCatalog {
    /// Rebuild a catalog from loaded members (catalog files); hereditarity
    /// is re-verified.
    pub fn from_members(
        family_name: String,
        bound: usize,
        list: Vec<Structure>,
    ) -> Result<AgeCatalog> {
        let signature = match list.first() {
            Some(m) => m.signature().clone(),
            None => return Err(Error::InvalidInput("catalog without members".into())),
        };
        let mut members = BTreeMap::new();
        let mut by_size = vec![Vec::new(); bound + 1];
        for m in list {
            if m.signature() != &signature {
                return Err(Error::SignatureMismatch(
                    "catalog members over mixed signatures".into(),
                ));
            }
            if m.size() == 0 || m.size() > bound {
                return Err(Error::AboveBound { size: m.size(), bound });
            }
            let code = m.canonical_code();
            if members.insert(code.clone(), m.clone()).is_none() {
                by_size[m.size()].push(code);
            }
        }
        for codes in &mut by_size {
            codes.sort();
        }
        let cat = AgeCatalog { family_name, signature, bound, members, by_size };
        cat.verify_hereditary()?;
        Ok(cat)
    }

    fn verify_hereditary(&self) -> Result<()> {
        for (_, m) in self.members() {
            if m.size() < 2 {
                continue;
            }
            for v in 0..m.size() {
                let rest: std::collections::BTreeSet<usize> =
                    (0..m.size()).filter(|&u| u != v).collect();
                let sub = m.induced(&rest)?;
                if !self.members.contains_key(&sub.canonical_code()) {
                    return Err(Error::Integrity(format!(
                        "family {} is not hereditary: a one-point deletion of a size-{} member is missing",
                        self.family_name,
                        m.size()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn family_name(&self) -> &str {
        &self.family_name
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in (size, code) order.
    pub fn members(&self) -> impl Iterator<Item = (&CanonicalCode, &Structure)> {
        self.by_size
            .iter()
            .flatten()
            .map(move |code| (code, &self.members[code]))
    }

    pub fn members_of_size(&self, size: usize) -> impl Iterator<Item = &Structure> {
        self.by_size
            .get(size)
            .into_iter()
            .flatten()
            .map(move |code| &self.members[code])
    }

    pub fn members_up_to(&self, bound: usize) -> impl Iterator<Item = &Structure> {
        let top = bound.min(self.bound);
        (1..=top).flat_map(move |size| self.members_of_size(size))
    }

    pub fn representative(&self, code: &CanonicalCode) -> Option<&Structure> {
        self.members.get(code)
    }

    /// Membership by canonical code. Sizes above the bound are an error,
    /// never a silent `false`; so are foreign signatures.
    pub fn contains(&self, a: &Structure) -> Result<bool> {
        if a.signature() != &self.signature {
            return Err(Error::SignatureMismatch(format!(
                "structure is not over the {} catalog signature",
                self.family_name
            )));
        }
        if a.size() > self.bound {
            return Err(Error::AboveBound { size: a.size(), bound: self.bound });
        }
        if a.size() == 0 {
            return Ok(true);
        }
        Ok(self.members.contains_key(&a.canonical_code()))
    }
}

/// Outcome of a bounded witness search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    Jep,
    Amalgamation,
    NoneUpToBound,
}

#[derive(Clone, Debug)]
pub struct WitnessCertificate {
    pub kind: WitnessKind,
    pub witness: Option<Structure>,
    pub embeddings: Vec<Mapping>,
}

impl WitnessCertificate {
    fn none() -> WitnessCertificate {
        WitnessCertificate { kind: WitnessKind::NoneUpToBound, witness: None, embeddings: vec![] }
    }

    pub fn found(&self) -> bool {
        self.kind != WitnessKind::NoneUpToBound
    }
}

/// Search catalog members of size ≤ bound for one embedding both `a` and
/// `b`; smallest witness in (size, code) order.
pub fn check_jep(
    cat: &AgeCatalog,
    a: &Structure,
    b: &Structure,
    bound: usize,
) -> Result<WitnessCertificate> {
    for s in [a, b] {
        if !cat.contains(s)? {
            return Err(Error::InvalidInput(
                "joint-embedding inputs must be catalog members".into(),
            ));
        }
    }
    for c in cat.members_up_to(bound) {
        if c.size() < a.size().max(b.size()) {
            continue;
        }
        let ea = a.embeddings_into(c)?;
        if ea.is_empty() {
            continue;
        }
        let eb = b.embeddings_into(c)?;
        if let Some(gb) = eb.into_iter().next() {
            return Ok(WitnessCertificate {
                kind: WitnessKind::Jep,
                witness: Some(c.clone()),
                embeddings: vec![ea.into_iter().next().unwrap(), gb],
            });
        }
    }
    Ok(WitnessCertificate::none())
}

/// Search for `d` with embeddings r: b → d and s: c → d satisfying
/// r∘f = s∘g; smallest witness in (size, code) order, embeddings in
/// lexicographic order.
pub fn check_amalgamation(
    cat: &AgeCatalog,
    f: &Mapping,
    g: &Mapping,
    bound: usize,
) -> Result<WitnessCertificate> {
    if !f.is_embedding()? || !g.is_embedding()? {
        return Err(Error::InvalidInput("amalgamation requires embeddings".into()));
    }
    if f.source() != g.source() {
        return Err(Error::InvalidInput(
            "amalgamation span must share its source structure".into(),
        ));
    }
    let a = f.source();
    let b = f.target();
    let c = g.target();
    for s in [a, b, c] {
        if !cat.contains(s)? {
            return Err(Error::InvalidInput(
                "amalgamation inputs must be catalog members".into(),
            ));
        }
    }
    for d in cat.members_up_to(bound) {
        if d.size() < b.size().max(c.size()) {
            continue;
        }
        for r in b.embeddings_into(d)? {
            // s is pinned on g(a): s(g(x)) = r(f(x))
            let mut pinned: BTreeMap<usize, usize> = BTreeMap::new();
            let mut consistent = true;
            for x in 0..a.size() {
                let want = r.apply(f.apply(x));
                if let Some(&prev) = pinned.get(&g.apply(x)) {
                    if prev != want {
                        consistent = false;
                        break;
                    }
                }
                pinned.insert(g.apply(x), want);
            }
            if !consistent {
                continue;
            }
            if let Some(s) = constrained_embedding(c, d, &pinned)? {
                return Ok(WitnessCertificate {
                    kind: WitnessKind::Amalgamation,
                    witness: Some(d.clone()),
                    embeddings: vec![r, s],
                });
            }
        }
    }
    Ok(WitnessCertificate::none())
}

/// First embedding of `source` into `target` extending `pinned`, if any.
fn constrained_embedding(
    source: &Structure,
    target: &Structure,
    pinned: &BTreeMap<usize, usize>,
) -> Result<Option<Mapping>> {
    fn go(
        source: &Structure,
        target: &Structure,
        pinned: &BTreeMap<usize, usize>,
        images: &mut Vec<usize>,
        used: &mut [bool],
    ) -> Option<Vec<usize>> {
        let v = images.len();
        if v == source.size() {
            return Some(images.clone());
        }
        let candidates: Vec<usize> = match pinned.get(&v) {
            Some(&w) => vec![w],
            None => (0..target.size()).collect(),
        };
        for w in candidates {
            if used[w] {
                continue;
            }
            images.push(w);
            used[w] = true;
            if partial_ok(source, target, images) {
                if let Some(done) = go(source, target, pinned, images, used) {
                    return Some(done);
                }
            }
            used[w] = false;
            images.pop();
        }
        None
    }
    fn partial_ok(source: &Structure, target: &Structure, images: &[usize]) -> bool {
        let k = images.len();
        for (si, sym) in source.signature().symbols().iter().enumerate() {
            let mut tuple = vec![0usize; sym.arity];
            if !check_tuples(source, target, images, si, sym.arity, k - 1, &mut tuple, 0) {
                return false;
            }
        }
        true
    }
    #[allow(clippy::too_many_arguments)]
    fn check_tuples(
        source: &Structure,
        target: &Structure,
        images: &[usize],
        symbol: usize,
        arity: usize,
        newest: usize,
        tuple: &mut Vec<usize>,
        pos: usize,
    ) -> bool {
        if pos == arity {
            if !tuple.contains(&newest) {
                return true;
            }
            let mapped: Vec<usize> = tuple.iter().map(|&v| images[v]).collect();
            return source.has(symbol, tuple) == target.has(symbol, &mapped);
        }
        for v in 0..images.len() {
            tuple[pos] = v;
            if !check_tuples(source, target, images, symbol, arity, newest, tuple, pos + 1) {
                return false;
            }
        }
        true
    }

    let mut images = Vec::with_capacity(source.size());
    let mut used = vec![false; target.size()];
    match go(source, target, pinned, &mut images, &mut used) {
        Some(images) => Ok(Some(Mapping::new(source.clone(), target.clone(), images)?)),
        None => Ok(None),
    }
}

/// Containment of catalogs as classes, up to a size bound.
#[derive(Clone, Debug)]
pub struct AgeSubsetOutcome {
    pub is_subset: bool,
    /// Smallest member of the first catalog missing from the second.
    pub counterexample: Option<Structure>,
}

pub fn age_subset(cat1: &AgeCatalog, cat2: &AgeCatalog, bound: usize) -> Result<AgeSubsetOutcome> {
    if cat1.signature() != cat2.signature() {
        return Err(Error::SignatureMismatch(
            "age containment needs a shared signature".into(),
        ));
    }
    if bound > cat1.bound() || bound > cat2.bound() {
        return Err(Error::AboveBound {
            size: bound,
            bound: cat1.bound().min(cat2.bound()),
        });
    }
    for m in cat1.members_up_to(bound) {
        if !cat2.contains(m)? {
            return Ok(AgeSubsetOutcome { is_subset: false, counterexample: Some(m.clone()) });
        }
    }
    Ok(AgeSubsetOutcome { is_subset: true, counterexample: None })
}
