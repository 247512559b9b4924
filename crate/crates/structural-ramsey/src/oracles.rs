//! Independent brute-force oracles.
//!
//! These deliberately avoid the search machinery of the main modules: the
//! isomorphism oracle tries every permutation, the arrow oracle enumerates
//! every coloring, and the grid oracle looks for placements on a fixed
//! denominator grid. They exist to be checked against, not to be fast.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::circle::{CircleFamily, CirclePlacement, TurnAngle};
use crate::structure::Structure;
use crate::{Error, Result};

/// Isomorphism by exhaustive permutation search.
pub fn isomorphic_by_permutation_search(a: &Structure, b: &Structure) -> bool {
    if a.signature() != b.signature() || a.size() != b.size() {
        return false;
    }
    let mut perm: Vec<usize> = (0..a.size()).collect();
    permutations(&mut perm, 0, &mut |p| a.apply_permutation(p) == *b)
}

fn permutations(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return f(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permutations(perm, k + 1, f) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Arrow decision by full enumeration of all k^|copies| colorings.
///
/// Returns whether the arrow holds, together with the lexicographically
/// least bad coloring when it fails. `copies_a` and `a_copies_per_b` must
/// describe the instance exactly as the search under test sees it.
pub fn arrow_by_full_enumeration(
    copies_a: usize,
    colors: usize,
    value_budget: usize,
    a_copies_per_b: &[Vec<usize>],
) -> Result<(bool, Option<Vec<usize>>)> {
    let bits = (copies_a as f64) * (colors as f64).log2();
    if bits > 26.0 {
        return Err(Error::Resource(format!(
            "full enumeration of {colors}^{copies_a} colorings refused"
        )));
    }
    let mut coloring = vec![0usize; copies_a];
    loop {
        let bad = a_copies_per_b.iter().all(|b_copy| {
            let seen: BTreeSet<usize> = b_copy.iter().map(|&i| coloring[i]).collect();
            seen.len() > value_budget
        });
        if bad {
            return Ok((false, Some(coloring)));
        }
        // odometer, most significant digit last: visits colorings in
        // lexicographic order of the value sequence read left to right
        let mut i = copies_a;
        loop {
            if i == 0 {
                return Ok((true, None));
            }
            i -= 1;
            coloring[i] += 1;
            if coloring[i] < colors {
                break;
            }
            coloring[i] = 0;
            if i == 0 {
                return Ok((true, None));
            }
        }
    }
}

/// Realizability by placement search over the grid of angles with reduced
/// denominator coprime to 6 and at most `max_denominator`. Positives only:
/// a miss on the grid proves nothing.
pub fn grid_realize(
    family: CircleFamily,
    a: &Structure,
    max_denominator: i64,
) -> Result<Option<CirclePlacement>> {
    let mut grid: Vec<TurnAngle> = Vec::new();
    for d in 1..=max_denominator {
        if d.gcd(&6) != 1 {
            continue;
        }
        for n in 0..d {
            grid.push(TurnAngle::new(n, d)?);
        }
    }
    grid.sort();
    grid.dedup();
    let mut chosen: Vec<TurnAngle> = Vec::new();
    search_grid(family, a, &grid, 0, &mut chosen)
}

fn search_grid(
    family: CircleFamily,
    a: &Structure,
    grid: &[TurnAngle],
    from: usize,
    chosen: &mut Vec<TurnAngle>,
) -> Result<Option<CirclePlacement>> {
    if chosen.len() == a.size() {
        let p = CirclePlacement::new(chosen.clone())?;
        if family.structure(&p).is_isomorphic_to(a)? {
            return Ok(Some(p));
        }
        return Ok(None);
    }
    for i in from..grid.len() {
        chosen.push(grid[i]);
        if let Some(p) = search_grid(family, a, grid, i + 1, chosen)? {
            return Ok(Some(p));
        }
        chosen.pop();
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::digraph_signature;

    #[test]
    fn permutation_oracle_basics() {
        let mut c3 = Structure::empty(digraph_signature(), 3);
        for (u, v) in [(0, 1), (1, 2), (2, 0)] {
            c3.insert(0, vec![u, v]).unwrap();
        }
        let relabeled = c3.apply_permutation(&[2, 0, 1]);
        assert!(isomorphic_by_permutation_search(&c3, &relabeled));
        let mut t3 = Structure::empty(digraph_signature(), 3);
        for (u, v) in [(0, 1), (0, 2), (1, 2)] {
            t3.insert(0, vec![u, v]).unwrap();
        }
        assert!(!isomorphic_by_permutation_search(&c3, &t3));
    }

    #[test]
    fn full_enumeration_pigeonhole() {
        // 3 points, 2 colors, every "pair" must avoid seeing 2 values:
        // pigeonhole says no bad coloring exists for budget 1 on any pair set
        // covering a monochromatic pair... here: pairs {0,1},{0,2},{1,2}.
        let pairs = vec![vec![0, 1], vec![0, 2], vec![1, 2]];
        let (holds, bad) = arrow_by_full_enumeration(3, 2, 1, &pairs).unwrap();
        assert!(holds);
        assert!(bad.is_none());

        // with a single pair {0,1} a bad coloring (0,1,·) exists
        let single = vec![vec![0, 1]];
        let (holds, bad) = arrow_by_full_enumeration(3, 2, 1, &single).unwrap();
        assert!(!holds);
        assert_eq!(bad.unwrap(), vec![0, 1, 0]);
    }

    #[test]
    fn grid_finds_triangles() {
        let mut c3 = Structure::empty(digraph_signature(), 3);
        for (u, v) in [(0, 1), (1, 2), (2, 0)] {
            c3.insert(0, vec![u, v]).unwrap();
        }
        let p = grid_realize(CircleFamily::S2, &c3, 7).unwrap();
        assert!(p.is_some());
    }
}
