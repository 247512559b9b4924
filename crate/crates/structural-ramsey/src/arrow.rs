//! Arrow partition relations with certificates.
//!
//! `check_arrow` decides C → (B)^A with k colors and value budget l by
//! searching for a bad coloring: one under which every copy of B sees more
//! than l values on its copies of A. The search backtracks over copy
//! colorings with an achievability bound per B-copy and breaks color
//! symmetry by requiring first occurrences of colors in increasing order
//! (the bad-coloring predicate is color-permutation invariant, so this
//! loses nothing). "Holds" means the search exhausted; a returned bad
//! coloring is re-verified by a direct scan before it leaves the module.

use std::collections::BTreeSet;

use crate::catalog::AgeCatalog;
use crate::expansion::{reduct, ExpansionPair};
use crate::structure::{CanonicalCode, Structure};
use crate::{Error, Result};

/// Configurable guards for the exhaustive searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Bound on |copies of A| · log2(k): the coloring-space exponent.
    pub max_color_bits: u64,
    /// Bound on explored search nodes.
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_color_bits: 80, max_nodes: 10_000_000 }
    }
}

/// A query C → (B)^A_{k,l}.
#[derive(Clone, Debug)]
pub struct ArrowQuery {
    pub c: Structure,
    pub b: Structure,
    pub a: Structure,
    pub colors: usize,
    pub value_budget: usize,
}

impl ArrowQuery {
    pub fn new(
        c: Structure,
        b: Structure,
        a: Structure,
        colors: usize,
        value_budget: usize,
    ) -> Result<ArrowQuery> {
        if c.signature() != b.signature() || b.signature() != a.signature() {
            return Err(Error::SignatureMismatch(
                "arrow query structures must share a signature".into(),
            ));
        }
        if colors < 1 || value_budget < 1 || value_budget > colors {
            return Err(Error::InvalidInput(format!(
                "need 1 ≤ l ≤ k, got k = {colors}, l = {value_budget}"
            )));
        }
        Ok(ArrowQuery { c, b, a, colors, value_budget })
    }
}

/// A k-coloring of the copy set binom(C, A), in the fixed lexicographic
/// order of the copies as element subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub domain: Vec<BTreeSet<usize>>,
    pub values: Vec<usize>,
    pub colors: usize,
}

/// Outcome of an arrow decision.
#[derive(Clone, Debug)]
pub struct ArrowCertificate {
    pub holds: bool,
    /// Present iff `holds` is false: a verified coloring under which every
    /// copy of B sees more than l values.
    pub bad_coloring: Option<Coloring>,
    pub explored: u64,
    pub pruned: u64,
    /// Degenerate-instance note (no copies of B, or no copies of A).
    pub vacuous: Option<String>,
}

/// Decide the arrow relation exactly.
pub fn check_arrow(q: &ArrowQuery, limits: &SearchLimits) -> Result<ArrowCertificate> {
    let copies_a = q.a.copies_in(&q.c)?;
    let copies_b = q.b.copies_in(&q.c)?;

    if q.value_budget >= q.colors {
        return Ok(ArrowCertificate {
            holds: true,
            bad_coloring: None,
            explored: 0,
            pruned: 0,
            vacuous: Some("every coloring takes at most k values".into()),
        });
    }
    if copies_b.is_empty() {
        // no copy of B exists, so no coloring has one: any coloring is bad
        let coloring = Coloring {
            domain: copies_a.clone(),
            values: vec![0; copies_a.len()],
            colors: q.colors,
        };
        debug_assert!(verify_bad_coloring(q, &coloring)?);
        return Ok(ArrowCertificate {
            holds: false,
            bad_coloring: Some(coloring),
            explored: 0,
            pruned: 0,
            vacuous: Some("no copies of b in c".into()),
        });
    }

    let bits = (copies_a.len() as u64) * (usize::BITS - (q.colors - 1).leading_zeros()).max(1) as u64;
    if bits > limits.max_color_bits {
        return Err(Error::Resource(format!(
            "coloring space needs {bits} bits, limit is {}",
            limits.max_color_bits
        )));
    }

    // indices of A-copies inside each B-copy
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
    // B-copies touching each A-copy
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); copies_a.len()];
    for (bi, m) in members.iter().enumerate() {
        for &ai in m {
            touching[ai].push(bi);
        }
    }

    let mut state = SearchState {
        colors: q.colors,
        budget: q.value_budget,
        touching: &touching,
        assignment: vec![usize::MAX; copies_a.len()],
        color_counts: vec![vec![0u32; q.colors]; members.len()],
        distinct: vec![0usize; members.len()],
        unassigned: members.iter().map(|m| m.len()).collect(),
        explored: 0,
        pruned: 0,
        max_nodes: limits.max_nodes,
    };

    // a B-copy that can never see budget+1 values rules out bad colorings
    if state.unassigned.iter().any(|&u| u <= q.value_budget) {
        return Ok(ArrowCertificate {
            holds: true,
            bad_coloring: None,
            explored: 0,
            pruned: 0,
            vacuous: if copies_a.is_empty() {
                Some("no copies of a in c".into())
            } else {
                None
            },
        });
    }

    let found = state.search(0, 0)?;
    let certificate = match found {
        true => {
            let coloring = Coloring {
                domain: copies_a,
                values: state.assignment.clone(),
                colors: q.colors,
            };
            if !verify_bad_coloring(q, &coloring)? {
                return Err(Error::Integrity(
                    "search produced a coloring that fails re-verification".into(),
                ));
            }
            ArrowCertificate {
                holds: false,
                bad_coloring: Some(coloring),
                explored: state.explored,
                pruned: state.pruned,
                vacuous: None,
            }
        }
        false => ArrowCertificate {
            holds: true,
            bad_coloring: None,
            explored: state.explored,
            pruned: state.pruned,
            vacuous: None,
        },
    };
    Ok(certificate)
}

struct SearchState<'a> {
    colors: usize,
    budget: usize,
    touching: &'a [Vec<usize>],
    assignment: Vec<usize>,
    color_counts: Vec<Vec<u32>>,
    distinct: Vec<usize>,
    unassigned: Vec<usize>,
    explored: u64,
    pruned: u64,
    max_nodes: u64,
}

impl SearchState<'_> {
    /// Depth-first over copies in lexicographic order, colors ascending and
    /// capped one above the maximum used so far. Returns true when a full
    /// bad coloring is reached; the first one found is the least canonical
    /// one, which is also the least overall.
    fn search(&mut self, idx: usize, used: usize) -> Result<bool> {
        if idx == self.assignment.len() {
            return Ok(true);
        }
        let cap = (used + 1).min(self.colors);
        for color in 0..cap {
            self.explored += 1;
            if self.explored > self.max_nodes {
                return Err(Error::Resource(format!(
                    "arrow search exceeded {} nodes",
                    self.max_nodes
                )));
            }
            let mut feasible = true;
            for &bi in &self.touching[idx] {
                if self.color_counts[bi][color] == 0 {
                    self.distinct[bi] += 1;
                }
                self.color_counts[bi][color] += 1;
                self.unassigned[bi] -= 1;
                if self.distinct[bi] + self.unassigned[bi] <= self.budget {
                    feasible = false;
                }
            }
            if feasible {
                self.assignment[idx] = color;
                if self.search(idx + 1, used.max(color + 1))? {
                    return Ok(true);
                }
                self.assignment[idx] = usize::MAX;
            } else {
                self.pruned += 1;
            }
            for &bi in &self.touching[idx] {
                self.color_counts[bi][color] -= 1;
                if self.color_counts[bi][color] == 0 {
                    self.distinct[bi] -= 1;
                }
                self.unassigned[bi] += 1;
            }
        }
        Ok(false)
    }
}

/// Independent check that a coloring is bad: every copy of B in C sees more
/// than the value budget on its copies of A. Scans everything; shares no
/// state with the search.
pub fn verify_bad_coloring(q: &ArrowQuery, coloring: &Coloring) -> Result<bool> {
    let copies_a = q.a.copies_in(&q.c)?;
    if copies_a != coloring.domain || coloring.values.len() != copies_a.len() {
        return Err(Error::InvalidInput("coloring domain does not match the query".into()));
    }
    for bc in q.b.copies_in(&q.c)? {
        let seen: BTreeSet<usize> = copies_a
            .iter()
            .zip(&coloring.values)
            .filter(|(ac, _)| ac.is_subset(&bc))
            .map(|(_, &v)| v)
            .collect();
        if seen.len() <= q.value_budget {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of a witness search over a catalog.
#[derive(Clone, Debug)]
pub enum ArrowSearchOutcome {
    Witness { c: Structure, certificate: ArrowCertificate },
    NoneUpToBound { skipped: Vec<(Structure, String)> },
}

/// First catalog member (in (size, code) order, size ≤ max_size) for which
/// the arrow holds. Candidates that trip a resource guard are skipped and
/// recorded.
pub fn search_arrow_witness(
    cat: &AgeCatalog,
    b: &Structure,
    a: &Structure,
    colors: usize,
    value_budget: usize,
    max_size: usize,
    limits: &SearchLimits,
) -> Result<ArrowSearchOutcome> {
    for s in [a, b] {
        if !cat.contains(s)? {
            return Err(Error::InvalidInput(
                "arrow witness search requires catalog members".into(),
            ));
        }
    }
    let mut skipped = Vec::new();
    for c in cat.members_up_to(max_size) {
        let q = ArrowQuery::new(c.clone(), b.clone(), a.clone(), colors, value_budget)?;
        match check_arrow(&q, limits) {
            Ok(cert) if cert.holds => {
                return Ok(ArrowSearchOutcome::Witness { c: c.clone(), certificate: cert })
            }
            Ok(_) => {}
            Err(Error::Resource(msg)) => skipped.push((c.clone(), msg)),
            Err(e) => return Err(e),
        }
    }
    Ok(ArrowSearchOutcome::NoneUpToBound { skipped })
}

/// A coloring of binom(reduct(C*), A) by the isomorphism type of the
/// expanded substructure each copy supports, palette in first-appearance
/// order.
#[derive(Clone, Debug)]
pub struct TypeColoring {
    pub coloring: Coloring,
    pub palette: Vec<CanonicalCode>,
}

pub fn expansion_type_coloring(
    pair: &ExpansionPair,
    c_star: &Structure,
    a: &Structure,
) -> Result<TypeColoring> {
    if !pair.star().contains(c_star)? {
        return Err(Error::InvalidInput(
            "type coloring requires a member of the expanded catalog".into(),
        ));
    }
    if !pair.base().contains(a)? {
        return Err(Error::InvalidInput(
            "type coloring requires a base catalog member to color".into(),
        ));
    }
    let c = reduct(c_star, pair.signature().base())?;
    let copies = a.copies_in(&c)?;
    let mut palette: Vec<CanonicalCode> = Vec::new();
    let mut values = Vec::with_capacity(copies.len());
    for copy in &copies {
        let code = c_star.induced(copy)?.canonical_code();
        let idx = match palette.iter().position(|p| p == &code) {
            Some(i) => i,
            None => {
                palette.push(code);
                palette.len() - 1
            }
        };
        values.push(idx);
    }
    let colors = palette.len().max(1);
    Ok(TypeColoring { coloring: Coloring { domain: copies, values, colors }, palette })
}

/// Parameters for a degree report.
#[derive(Clone, Copy, Debug)]
pub struct DegreeParams {
    /// Colors for the confirming arrow runs (raised to the lower bound when
    /// smaller).
    pub colors: usize,
    /// Size bound for the witness structure B.
    pub b_bound: usize,
    /// Size bound for the opponents C.
    pub c_bound: usize,
}

/// One verified instance backing a degree lower bound: in the type coloring
/// of this expansion of C, every copy of B sees at least `min_values`
/// values.
#[derive(Clone, Debug)]
pub struct DegreeInstance {
    pub c: Structure,
    pub expansion_index: usize,
    pub min_values: usize,
    /// True when C contains no copy of B at all (the arrow fails trivially).
    pub vacuous: bool,
}

/// A confirming run of the generic arrow engine.
#[derive(Clone, Debug)]
pub struct ArrowInstance {
    pub c: Structure,
    pub colors: usize,
    pub value_budget: usize,
    pub holds: bool,
}

/// A Ramsey-degree bracket. The upper bound is the expansion count t(A);
/// the lower bound is certified constructively by expansion-type colorings
/// against a single witness B over every opponent within the bound. The
/// report never claims the exact degree unless the bracket collapses.
#[derive(Clone, Debug)]
pub struct DegreeReport {
    pub target: Structure,
    pub upper_bound: usize,
    pub lower_bound: usize,
    pub lower_witness: Option<Structure>,
    pub instances: Vec<DegreeInstance>,
    pub confirming_arrows: Vec<ArrowInstance>,
}

pub fn ramsey_degree_report(
    pair: &ExpansionPair,
    a: &Structure,
    params: &DegreeParams,
    limits: &SearchLimits,
) -> Result<DegreeReport> {
    let expansions = crate::expansion::list_expansions(pair, a)?;
    let upper = expansions.count;
    if upper == 0 {
        return Err(Error::Integrity("target has no expansions at all".into()));
    }

    // Precompute type colorings per (c, expansion); reused across l0.
    struct Opponent {
        c: Structure,
        per_expansion: Vec<(usize, bool)>, // (min over B-copies of distinct values, vacuous)
    }
    let mut lower = 1usize;
    let mut lower_witness = None;
    let mut instances = Vec::new();

    'l0: for l0 in (2..=upper).rev() {
        'witness: for b in pair.base().members_up_to(params.b_bound) {
            let mut evidence: Vec<Opponent> = Vec::new();
            for c in pair.base().members_up_to(params.c_bound) {
                let b_copies = b.copies_in(c)?;
                let exp_c = crate::expansion::list_expansions(pair, c)?;
                let mut per_expansion = Vec::new();
                for c_star in &exp_c.representatives {
                    if b_copies.is_empty() {
                        per_expansion.push((usize::MAX, true));
                        continue;
                    }
                    let tc = expansion_type_coloring(pair, c_star, a)?;
                    let min_values = b_copies
                        .iter()
                        .map(|bc| {
                            tc.coloring
                                .domain
                                .iter()
                                .zip(&tc.coloring.values)
                                .filter(|(ac, _)| ac.is_subset(bc))
                                .map(|(_, &v)| v)
                                .collect::<BTreeSet<_>>()
                                .len()
                        })
                        .min()
                        .unwrap_or(usize::MAX);
                    if min_values < l0 {
                        continue 'witness;
                    }
                    per_expansion.push((min_values, false));
                }
                evidence.push(Opponent { c: c.clone(), per_expansion });
            }
            // every opponent's every expansion forces ≥ l0 values on every
            // copy of b
            lower = l0;
            lower_witness = Some(b.clone());
            for opp in evidence {
                for (idx, (min_values, vacuous)) in opp.per_expansion.into_iter().enumerate() {
                    instances.push(DegreeInstance {
                        c: opp.c.clone(),
                        expansion_index: idx,
                        min_values: if vacuous { 0 } else { min_values },
                        vacuous,
                    });
                }
            }
            break 'l0;
        }
    }

    // Confirm through the generic engine: with the witness B fixed, the
    // arrow at budget lower−1 must fail on every opponent.
    let mut confirming_arrows = Vec::new();
    if lower > 1 {
        if let Some(b) = &lower_witness {
            let k = params.colors.max(lower);
            for c in pair.base().members_up_to(params.c_bound) {
                let q = ArrowQuery::new(c.clone(), b.clone(), a.clone(), k, lower - 1)?;
                match check_arrow(&q, limits) {
                    Ok(cert) => confirming_arrows.push(ArrowInstance {
                        c: c.clone(),
                        colors: k,
                        value_budget: lower - 1,
                        holds: cert.holds,
                    }),
                    Err(Error::Resource(_)) => {}
                    Err(e) => return Err(e),
                }
            }
            if confirming_arrows.iter().any(|i| i.holds) {
                return Err(Error::Integrity(
                    "type-coloring lower bound contradicted by the arrow engine".into(),
                ));
            }
        }
    }

    Ok(DegreeReport {
        target: a.clone(),
        upper_bound: upper,
        lower_bound: lower,
        lower_witness,
        instances,
        confirming_arrows,
    })
}
