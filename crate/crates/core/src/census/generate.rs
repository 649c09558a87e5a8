//! Isomorph-free generation by canonical deletion.
//!
//! A graph on k+1 vertices has a unique parent: delete the vertex of maximum
//! degree that comes last in the canonical labelling, and take the canonical
//! form of what remains. A child built from parent P by adding one vertex is
//! kept only if its parent is P, so each class is produced under exactly one
//! parent; duplicates under the same parent are removed by canonical form.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::Result;
use crate::graph::{canonical_lab, Graph};

/// Canonical adjacency rows; the sort key and identity of a census graph.
pub(crate) type Key = Vec<u64>;

fn children(parent: &Key) -> Result<Vec<Key>> {
    let k = parent.len();
    let mut seen: HashSet<Key> = HashSet::new();
    let mut out = Vec::new();
    let mut rows = parent.clone();
    rows.push(0);
    let mut deg: Vec<u32> = parent.iter().map(|r| r.count_ones()).collect();
    deg.push(0);
    for s in 0u64..1 << k {
        let new_deg = s.count_ones();
        for i in 0..k {
            let b = s >> i & 1;
            rows[i] = parent[i] | b << k;
            deg[i] = parent[i].count_ones() + b as u32;
        }
        rows[k] = s;
        deg[k] = new_deg;
        let max_deg = *deg.iter().max().expect("k + 1 >= 1 vertices");
        if new_deg < max_deg {
            continue;
        }
        let child = Graph::from_rows(&rows);
        let (lab, key) = canonical_lab(&child, None)?;
        let w = lab
            .iter()
            .rev()
            .map(|&v| v as usize)
            .find(|&v| deg[v] == max_deg)
            .expect("some vertex has maximum degree");
        if w != k {
            let keep: Vec<usize> = (0..=k).filter(|&v| v != w).collect();
            let rest = child.induced_subgraph(&keep)?;
            if &canonical_lab(&rest, None)?.1 != parent {
                continue;
            }
        }
        if seen.insert(key.clone()) {
            out.push(key);
        }
    }
    Ok(out)
}

/// All graphs on `1..=n` vertices, one canonical key per class, level by
/// level. Each level is sorted, so the result does not depend on how rayon
/// schedules the parents.
pub(crate) fn generate_levels(n: usize) -> Result<Vec<Vec<Key>>> {
    let mut levels: Vec<Vec<Key>> = vec![vec![vec![0]]];
    while levels.len() < n {
        let last = levels.last().expect("at least one level");
        let parts: Vec<Vec<Key>> = last.par_iter().map(children).collect::<Result<_>>()?;
        let mut next: Vec<Key> = parts.into_iter().flatten().collect();
        next.sort_unstable();
        levels.push(next);
    }
    Ok(levels)
}

pub(crate) fn key_graph(key: &Key) -> Graph {
    Graph::from_rows(key)
}

/// All trees on `n` vertices up to isomorphism, in canonical order. Trees
/// are grown by attaching leaves and deduplicated by canonical form.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: Vec<Key> = vec![vec![0]];
    for k in 1..n {
        let mut next: HashSet<Key> = HashSet::new();
        for t in &level {
            for v in 0..k {
                let mut rows = t.clone();
                rows[v] |= 1 << k;
                rows.push(1 << v);
                let g = Graph::from_rows(&rows);
                next.insert(canonical_lab(&g, None)?.1);
            }
        }
        level = next.into_iter().collect();
        level.sort_unstable();
    }
    Ok(level.iter().map(key_graph).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_levels() {
        let levels = generate_levels(6).unwrap();
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=11)
            .map(|n| enumerate_trees(n).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235]);
        for t in enumerate_trees(9).unwrap() {
            assert!(t.is_tree());
        }
    }
}
