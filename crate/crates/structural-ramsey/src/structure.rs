//! Finite relational structures over explicit signatures.
//!
//! Universes are initial segments `0..n` of the naturals. Relation sets are
//! exact; structures are immutable values. An embedding is an injective map
//! preserving every relation in both directions, so that images are honest
//! copies. Canonical codes are computed by iterative invariant refinement
//! followed by a search over cell-respecting relabelings, which is complete
//! at the sizes this crate targets (n ≤ ~10).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A relation symbol: a name together with its arity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Symbol {
    pub name: String,
    pub arity: usize,
}

/// An ordered list of relation symbols. The order is part of the identity:
/// two signatures with permuted symbols are distinct.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Signature {
    symbols: Vec<Symbol>,
}

impl Signature {
    pub fn new<S: Into<String>>(symbols: Vec<(S, usize)>) -> Result<Self> {
        let symbols: Vec<Symbol> = symbols
            .into_iter()
            .map(|(name, arity)| Symbol { name: name.into(), arity })
            .collect();
        let mut seen = BTreeSet::new();
        for s in &symbols {
            if s.arity == 0 {
                return Err(Error::InvalidInput(format!("symbol {} has arity 0", s.name)));
            }
            if !seen.insert(s.name.clone()) {
                return Err(Error::InvalidInput(format!("duplicate symbol {}", s.name)));
            }
        }
        Ok(Signature { symbols })
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.name == name)
    }

    /// True when `self`'s symbols form a prefix of `other`'s, so that `other`
    /// is a signature expansion of `self`.
    pub fn is_prefix_of(&self, other: &Signature) -> bool {
        other.symbols.len() >= self.symbols.len()
            && self.symbols[..] == other.symbols[..self.symbols.len()]
    }
}

/// A finite relational structure with universe `0..size`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Structure {
    signature: Signature,
    size: usize,
    relations: Vec<BTreeSet<Vec<usize>>>,
}

impl Structure {
    /// Structure with all relations empty.
    pub fn empty(signature: Signature, size: usize) -> Structure {
        let relations = vec![BTreeSet::new(); signature.len()];
        Structure { signature, size, relations }
    }

    pub fn new(
        signature: Signature,
        size: usize,
        relations: Vec<BTreeSet<Vec<usize>>>,
    ) -> Result<Structure> {
        if relations.len() != signature.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} relation sets, got {}",
                signature.len(),
                relations.len()
            )));
        }
        for (sym, rel) in signature.symbols().iter().zip(&relations) {
            for t in rel {
                if t.len() != sym.arity {
                    return Err(Error::InvalidInput(format!(
                        "tuple {:?} has wrong arity for {}/{}",
                        t, sym.name, sym.arity
                    )));
                }
                if let Some(&x) = t.iter().find(|&&x| x >= size) {
                    return Err(Error::OutOfRange(format!(
                        "tuple entry {x} not below size {size}"
                    )));
                }
            }
        }
        Ok(Structure { signature, size, relations })
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn relation(&self, symbol: usize) -> &BTreeSet<Vec<usize>> {
        &self.relations[symbol]
    }

    pub fn relations(&self) -> &[BTreeSet<Vec<usize>>] {
        &self.relations
    }

    pub fn has(&self, symbol: usize, tuple: &[usize]) -> bool {
        self.relations[symbol].contains(tuple)
    }

    /// Add a tuple in place; used by builders before the structure is shared.
    pub fn insert(&mut self, symbol: usize, tuple: Vec<usize>) -> Result<()> {
        let sym = &self.signature.symbols()[symbol];
        if tuple.len() != sym.arity {
            return Err(Error::InvalidInput(format!(
                "tuple {:?} has wrong arity for {}/{}",
                tuple, sym.name, sym.arity
            )));
        }
        if let Some(&x) = tuple.iter().find(|&&x| x >= self.size) {
            return Err(Error::OutOfRange(format!(
                "tuple entry {x} not below size {}",
                self.size
            )));
        }
        self.relations[symbol].insert(tuple);
        Ok(())
    }

    /// The substructure induced on `subset`, relabeled `0..subset.len()`
    /// preserving the numeric order of the chosen elements.
    pub fn induced(&self, subset: &BTreeSet<usize>) -> Result<Structure> {
        if let Some(&x) = subset.iter().find(|&&x| x >= self.size) {
            return Err(Error::OutOfRange(format!(
                "element {x} not in universe of size {}",
                self.size
            )));
        }
        let elements: Vec<usize> = subset.iter().copied().collect();
        let mut new_label = BTreeMap::new();
        for (i, &v) in elements.iter().enumerate() {
            new_label.insert(v, i);
        }
        let relations = self
            .relations
            .iter()
            .map(|rel| {
                rel.iter()
                    .filter(|t| t.iter().all(|v| new_label.contains_key(v)))
                    .map(|t| t.iter().map(|v| new_label[v]).collect())
                    .collect()
            })
            .collect();
        Ok(Structure {
            signature: self.signature.clone(),
            size: elements.len(),
            relations,
        })
    }

    /// Relabel by `perm`, where `perm[v]` is the new label of `v`.
    pub fn apply_permutation(&self, perm: &[usize]) -> Structure {
        debug_assert_eq!(perm.len(), self.size);
        let relations = self
            .relations
            .iter()
            .map(|rel| rel.iter().map(|t| t.iter().map(|&v| perm[v]).collect()).collect())
            .collect();
        Structure {
            signature: self.signature.clone(),
            size: self.size,
            relations,
        }
    }

    /// All embeddings of `self` into `target`, in lexicographic order of the
    /// image vectors. Backtracking over partial injections with relation
    /// consistency checked at every extension.
    pub fn embeddings_into(&self, target: &Structure) -> Result<Vec<Mapping>> {
        if self.signature != target.signature {
            return Err(Error::SignatureMismatch(
                "embedding endpoints must share a signature".into(),
            ));
        }
        let mut found = Vec::new();
        let mut images: Vec<usize> = Vec::with_capacity(self.size);
        let mut used = vec![false; target.size];
        extend_embedding(self, target, &mut images, &mut used, &mut found);
        Ok(found)
    }

    /// The subsets of `target`'s universe inducing a copy of `self`, sorted.
    pub fn copies_in(&self, target: &Structure) -> Result<Vec<BTreeSet<usize>>> {
        let embeddings = self.embeddings_into(target)?;
        let mut out: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for m in embeddings {
            out.insert(m.images.iter().copied().collect());
        }
        Ok(out.into_iter().collect())
    }

    /// |Aut(self)|, computed exactly.
    pub fn automorphism_count(&self) -> usize {
        // An injective strong self-map of a finite structure is bijective,
        // and strong preservation makes it an automorphism.
        self.embeddings_into(self).map(|v| v.len()).unwrap_or(0)
    }

    pub fn is_rigid(&self) -> bool {
        self.automorphism_count() == 1
    }

    /// A code equal across isomorphic structures and distinct otherwise
    /// (within one signature). Deterministic across runs and platforms.
    pub fn canonical_code(&self) -> CanonicalCode {
        let colors = refine_colors(self);
        // Vertices grouped by refined color, cells in color order.
        let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            cells.entry(c).or_default().push(v);
        }
        let cells: Vec<Vec<usize>> = cells.into_values().collect();
        let mut best: Option<Vec<BTreeSet<Vec<usize>>>> = None;
        let mut perm = vec![usize::MAX; self.size];
        min_relabeling(self, &cells, 0, 0, &mut perm, &mut best);
        let relations = best.unwrap_or_else(|| self.relations.clone());
        CanonicalCode::encode(&self.signature, self.size, &relations)
    }

    pub fn is_isomorphic_to(&self, other: &Structure) -> Result<bool> {
        if self.signature != other.signature {
            return Err(Error::SignatureMismatch(
                "isomorphism endpoints must share a signature".into(),
            ));
        }
        if self.size != other.size {
            return Ok(false);
        }
        Ok(self.canonical_code() == other.canonical_code())
    }
}

fn extend_embedding(
    source: &Structure,
    target: &Structure,
    images: &mut Vec<usize>,
    used: &mut [bool],
    found: &mut Vec<Mapping>,
) {
    let v = images.len();
    if v == source.size {
        found.push(Mapping {
            source: source.clone(),
            target: target.clone(),
            images: images.clone(),
        });
        return;
    }
    for w in 0..target.size {
        if used[w] {
            continue;
        }
        images.push(w);
        used[w] = true;
        if consistent_on_assigned(source, target, images) {
            extend_embedding(source, target, images, used, found);
        }
        used[w] = false;
        images.pop();
    }
}

/// Check strong preservation of all tuples lying inside the assigned prefix
/// and involving the most recently assigned vertex.
fn consistent_on_assigned(source: &Structure, target: &Structure, images: &[usize]) -> bool {
    let newest = images.len() - 1;
    for (si, sym) in source.signature.symbols().iter().enumerate() {
        let mut tuple = vec![0usize; sym.arity];
        if !tuples_consistent(source, target, images, si, sym.arity, newest, &mut tuple, 0) {
            return false;
        }
    }
    true
}

#[allow(clippy::too_many_arguments)]
fn tuples_consistent(
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
            return true; // already checked at an earlier extension
        }
        let mapped: Vec<usize> = tuple.iter().map(|&v| images[v]).collect();
        return source.has(symbol, tuple) == target.has(symbol, &mapped);
    }
    for v in 0..images.len() {
        tuple[pos] = v;
        if !tuples_consistent(source, target, images, symbol, arity, newest, tuple, pos + 1) {
            return false;
        }
    }
    true
}

/// Depth-first search over relabelings that respect the refined cells,
/// keeping the lexicographically least relation encoding.
fn min_relabeling(
    s: &Structure,
    cells: &[Vec<usize>],
    cell_idx: usize,
    next_label: usize,
    perm: &mut Vec<usize>,
    best: &mut Option<Vec<BTreeSet<Vec<usize>>>>,
) {
    if cell_idx == cells.len() {
        let candidate = s.apply_permutation(perm).relations;
        match best {
            None => *best = Some(candidate),
            Some(b) => {
                if candidate < *b {
                    *best = Some(candidate);
                }
            }
        }
        return;
    }
    let cell = &cells[cell_idx];
    assign_cell(s, cells, cell_idx, cell, next_label, 0, perm, best);
}

#[allow(clippy::too_many_arguments)]
fn assign_cell(
    s: &Structure,
    cells: &[Vec<usize>],
    cell_idx: usize,
    cell: &[usize],
    next_label: usize,
    filled: usize,
    perm: &mut Vec<usize>,
    best: &mut Option<Vec<BTreeSet<Vec<usize>>>>,
) {
    if filled == cell.len() {
        min_relabeling(s, cells, cell_idx + 1, next_label + cell.len(), perm, best);
        return;
    }
    for &v in cell {
        if perm[v] == usize::MAX {
            perm[v] = next_label + filled;
            assign_cell(s, cells, cell_idx, cell, next_label, filled + 1, perm, best);
            perm[v] = usize::MAX;
        }
    }
}

/// Iterative invariant refinement. Each round recolors a vertex by the
/// multiset of (symbol, position, participant colors) patterns of the tuples
/// it sits in; colors are renumbered densely by sorted key, so they are
/// isomorphism-invariant.
fn refine_colors(s: &Structure) -> Vec<usize> {
    let n = s.size;
    let mut colors = vec![0usize; n];
    if n == 0 {
        return colors;
    }
    loop {
        type Key = (usize, Vec<(usize, usize, Vec<usize>)>);
        let mut keys: Vec<Key> = Vec::with_capacity(n);
        for v in 0..n {
            let mut patterns = Vec::new();
            for (si, rel) in s.relations.iter().enumerate() {
                for t in rel {
                    for (pos, &u) in t.iter().enumerate() {
                        if u == v {
                            patterns.push((si, pos, t.iter().map(|&w| colors[w]).collect()));
                        }
                    }
                }
            }
            patterns.sort();
            keys.push((colors[v], patterns));
        }
        // renumber densely in sorted key order, which is label-invariant
        let mut dense: BTreeMap<&Key, usize> = keys.iter().map(|k| (k, 0)).collect();
        for (i, (_, slot)) in dense.iter_mut().enumerate() {
            *slot = i;
        }
        let new_colors: Vec<usize> = keys.iter().map(|k| dense[k]).collect();
        if new_colors == colors {
            return colors;
        }
        colors = new_colors;
    }
}

/// A map between structures over one signature, given by the image of each
/// source element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Mapping {
    source: Structure,
    target: Structure,
    images: Vec<usize>,
}

impl Mapping {
    pub fn new(source: Structure, target: Structure, images: Vec<usize>) -> Result<Mapping> {
        if images.len() != source.size() {
            return Err(Error::InvalidInput(format!(
                "mapping of a {}-element structure needs {} images, got {}",
                source.size(),
                source.size(),
                images.len()
            )));
        }
        if let Some(&x) = images.iter().find(|&&x| x >= target.size()) {
            return Err(Error::OutOfRange(format!(
                "image {x} not in target universe of size {}",
                target.size()
            )));
        }
        Ok(Mapping { source, target, images })
    }

    pub fn identity(s: &Structure) -> Mapping {
        Mapping {
            source: s.clone(),
            target: s.clone(),
            images: (0..s.size()).collect(),
        }
    }

    pub fn source(&self) -> &Structure {
        &self.source
    }

    pub fn target(&self) -> &Structure {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    /// True iff the mapping is injective and preserves every relation in
    /// both directions: t ∈ R ⇔ m(t) ∈ R, for every tuple over the source.
    pub fn is_embedding(&self) -> Result<bool> {
        if self.source.signature() != self.target.signature() {
            return Err(Error::SignatureMismatch(
                "mapping endpoints must share a signature".into(),
            ));
        }
        let distinct: BTreeSet<usize> = self.images.iter().copied().collect();
        if distinct.len() != self.images.len() {
            return Ok(false);
        }
        for (si, sym) in self.source.signature().symbols().iter().enumerate() {
            let mut tuple = vec![0usize; sym.arity];
            if !self.strongly_preserved(si, sym.arity, &mut tuple, 0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn strongly_preserved(
        &self,
        symbol: usize,
        arity: usize,
        tuple: &mut Vec<usize>,
        pos: usize,
    ) -> bool {
        if pos == arity {
            let mapped: Vec<usize> = tuple.iter().map(|&v| self.images[v]).collect();
            return self.source.has(symbol, tuple) == self.target.has(symbol, &mapped);
        }
        for v in 0..self.source.size() {
            tuple[pos] = v;
            if !self.strongly_preserved(symbol, arity, tuple, pos + 1) {
                return false;
            }
        }
        true
    }

    /// Composition `other ∘ self` (apply `self` first).
    pub fn then(&self, other: &Mapping) -> Result<Mapping> {
        if self.target != other.source {
            return Err(Error::InvalidInput(
                "composition requires matching middle structure".into(),
            ));
        }
        Mapping::new(
            self.source.clone(),
            other.target.clone(),
            self.images.iter().map(|&v| other.images[v]).collect(),
        )
    }
}

/// A byte sequence uniquely determined by the isomorphism class of a
/// structure (signature included).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    fn encode(sig: &Signature, size: usize, relations: &[BTreeSet<Vec<usize>>]) -> CanonicalCode {
        let mut out = Vec::new();
        out.extend_from_slice(&(sig.len() as u32).to_le_bytes());
        for s in sig.symbols() {
            out.extend_from_slice(&(s.name.len() as u32).to_le_bytes());
            out.extend_from_slice(s.name.as_bytes());
            out.extend_from_slice(&(s.arity as u32).to_le_bytes());
        }
        out.extend_from_slice(&(size as u32).to_le_bytes());
        for rel in relations {
            out.extend_from_slice(&(rel.len() as u32).to_le_bytes());
            for t in rel {
                for &v in t {
                    out.extend_from_slice(&(v as u32).to_le_bytes());
                }
            }
        }
        CanonicalCode(out)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::digraph_signature;
    use crate::oracles::isomorphic_by_permutation_search;

    fn tournament(n: usize, arcs: &[(usize, usize)]) -> Structure {
        let mut s = Structure::empty(digraph_signature(), n);
        for &(u, v) in arcs {
            s.insert(0, vec![u, v]).unwrap();
        }
        s
    }

    fn transitive_chain(n: usize) -> Structure {
        let mut s = Structure::empty(digraph_signature(), n);
        for i in 0..n {
            for j in (i + 1)..n {
                s.insert(0, vec![i, j]).unwrap();
            }
        }
        s
    }

    fn cyclic_triangle() -> Structure {
        tournament(3, &[(0, 1), (1, 2), (2, 0)])
    }

    #[test]
    fn induced_restricts_relations() {
        let chain = transitive_chain(3);
        let sub = chain.induced(&BTreeSet::from([0, 2])).unwrap();
        assert_eq!(sub, tournament(2, &[(0, 1)]));

        let full = chain.induced(&BTreeSet::from([0, 1, 2])).unwrap();
        assert_eq!(full, chain);

        let cyc = cyclic_triangle();
        let pair = cyc.induced(&BTreeSet::from([0, 1])).unwrap();
        assert_eq!(pair, tournament(2, &[(0, 1)]));
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let chain = transitive_chain(3);
        assert!(matches!(
            chain.induced(&BTreeSet::from([0, 5])),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn embedding_checks() {
        let cyc = cyclic_triangle();
        assert!(Mapping::identity(&cyc).is_embedding().unwrap());

        let arc = tournament(2, &[(0, 1)]);
        let good = Mapping::new(arc.clone(), cyc.clone(), vec![0, 1]).unwrap();
        assert!(good.is_embedding().unwrap());
        let bad = Mapping::new(arc, cyc, vec![1, 0]).unwrap();
        assert!(!bad.is_embedding().unwrap());
    }

    #[test]
    fn embedding_counts() {
        let sig = Signature::new(vec![("r", 2)]).unwrap();
        let point = Structure::empty(sig.clone(), 1);
        let four = Structure::empty(sig, 4);
        assert_eq!(point.embeddings_into(&four).unwrap().len(), 4);

        let lo2 = transitive_chain(2);
        let lo4 = transitive_chain(4);
        assert_eq!(lo2.embeddings_into(&lo4).unwrap().len(), 6);

        // Oracle: all 6 permutations of the cyclic triangle, keep the
        // arc-preserving ones — exactly the three rotations.
        let cyc = cyclic_triangle();
        assert_eq!(cyc.embeddings_into(&cyc).unwrap().len(), 3);
    }

    #[test]
    fn copy_sets() {
        let lo2 = transitive_chain(2);
        let lo4 = transitive_chain(4);
        assert_eq!(lo2.copies_in(&lo4).unwrap().len(), 6);

        let cyc = cyclic_triangle();
        let t3 = transitive_chain(3);
        assert!(cyc.copies_in(&t3).unwrap().is_empty());
        assert_eq!(cyc.copies_in(&cyc).unwrap(), vec![BTreeSet::from([0, 1, 2])]);
    }

    #[test]
    fn automorphisms_and_rigidity() {
        assert_eq!(transitive_chain(3).automorphism_count(), 1);
        assert!(transitive_chain(3).is_rigid());
        assert_eq!(cyclic_triangle().automorphism_count(), 3);
        assert!(!cyclic_triangle().is_rigid());
        let sig = Signature::new(vec![("r", 2)]).unwrap();
        assert_eq!(Structure::empty(sig, 2).automorphism_count(), 2);
    }

    #[test]
    fn canonical_codes() {
        let cyc = cyclic_triangle();
        let relabeled = cyc.apply_permutation(&[1, 2, 0]);
        assert_eq!(cyc.canonical_code(), relabeled.canonical_code());
        assert_ne!(cyc.canonical_code(), transitive_chain(3).canonical_code());
    }

    #[test]
    fn isomorphism_matches_brute_force() {
        let cyc = cyclic_triangle();
        assert!(cyc.is_isomorphic_to(&cyc).unwrap());
        assert!(!cyc.is_isomorphic_to(&transitive_chain(3)).unwrap());

        // Two labelings of the 4-tournament with score sequence (1,1,2,2).
        let a = tournament(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 1), (3, 2)]);
        let b = a.apply_permutation(&[2, 0, 3, 1]);
        assert_eq!(
            a.is_isomorphic_to(&b).unwrap(),
            isomorphic_by_permutation_search(&a, &b)
        );
        assert!(a.is_isomorphic_to(&b).unwrap());
    }

    #[test]
    fn empty_structure_embeds_once() {
        let sig = digraph_signature();
        let empty = Structure::empty(sig, 0);
        let cyc = cyclic_triangle();
        assert_eq!(empty.embeddings_into(&cyc).unwrap().len(), 1);
        assert_eq!(empty.copies_in(&cyc).unwrap().len(), 1);
        assert_eq!(empty.automorphism_count(), 1);
    }

    #[test]
    fn embeddings_count_factors_through_copies() {
        let cyc = cyclic_triangle();
        let t3 = transitive_chain(3);
        for a in [&cyc, &t3, &tournament(2, &[(0, 1)])] {
            for b in [&cyc, &t3] {
                let e = a.embeddings_into(b).unwrap().len();
                let c = a.copies_in(b).unwrap().len();
                assert_eq!(e, c * a.automorphism_count());
            }
        }
    }
}
