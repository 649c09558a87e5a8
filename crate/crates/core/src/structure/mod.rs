//! Combinatorial invariants and recognitions: triangles, clique number,
//! induced-subgraph matching, Smith graphs and line-graph roots.

mod roots;

pub use roots::{root_graph_search, KrauszPartition, Root, RootClass, ROOT_SEARCH_CAP};

use num_rational::Rational64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{certify_rho_le, certify_rho_lt, trace_powers};
use crate::graph::Graph;

/// Cap for the bitset-based searches in this module.
pub const STRUCTURE_CAP: usize = 64;

fn check_cap(g: &Graph, operation: &'static str) -> Result<()> {
    if g.order() > STRUCTURE_CAP {
        return Err(Error::CapExceeded {
            operation,
            order: g.order(),
            cap: STRUCTURE_CAP,
        });
    }
    Ok(())
}

/// t(G) = tr(A³)/6.
pub fn triangle_count(g: &Graph) -> u64 {
    let t3: num_bigint::BigInt = trace_powers(g, 3).pop().unwrap_or_default();
    (t3 / num_bigint::BigInt::from(6))
        .to_u64()
        .expect("triangle count fits in u64")
}

/// Triangle count by enumerating vertex triples; the cross-check for
/// [`triangle_count`].
pub fn triangle_count_enumerated(g: &Graph) -> u64 {
    let n = g.order();
    let mut t = 0;
    for u in 0..n {
        for v in g.neighbors(u).filter(|&v| v > u) {
            t += g
                .neighbors(v)
                .filter(|&w| w > v && g.has_edge(u, w))
                .count() as u64;
        }
    }
    t
}

/// Exact clique number ω(G) by branch and bound with greedy-colouring
/// bounds. The null graph has clique number 0.
pub fn clique_number(g: &Graph) -> Result<usize> {
    check_cap(g, "clique_number")?;
    let adj: Vec<u64> = (0..g.order()).map(|v| g.row_mask(v)).collect();
    let all = if g.order() == 64 {
        u64::MAX
    } else {
        (1u64 << g.order()) - 1
    };
    let mut best = 0;
    expand(&adj, all, 0, &mut best);
    Ok(best)
}

fn expand(adj: &[u64], mut cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(cand.count_ones() as usize);
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !(1 << v) & !adj[v];
            uncolored &= !(1 << v);
            order.push((v, color));
        }
    }
    for &(v, c) in order.iter().rev() {
        if size + c <= *best {
            return;
        }
        expand(adj, cand & adj[v], size + 1, best);
        cand &= !(1 << v);
    }
}

/// First induced embedding of `pattern` into `g`, as `map[i]` = host vertex
/// of pattern vertex `i`. Pattern vertices are placed in index order and
/// host candidates tried in ascending order, so the result is the
/// lexicographically least embedding.
pub fn induced_subgraph_search(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.order();
    if k > g.order() {
        return None;
    }
    let pdeg = pattern.degrees();
    let gdeg = g.degrees();
    let mut map = Vec::with_capacity(k);
    let mut used = vec![false; g.order()];

    fn extend(
        g: &Graph,
        pattern: &Graph,
        pdeg: &[usize],
        gdeg: &[usize],
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = map.len();
        if i == pattern.order() {
            return true;
        }
        for h in 0..g.order() {
            if used[h] || gdeg[h] < pdeg[i] {
                continue;
            }
            if map
                .iter()
                .enumerate()
                .any(|(j, &hj)| pattern.has_edge(i, j) != g.has_edge(h, hj))
            {
                continue;
            }
            map.push(h);
            used[h] = true;
            if extend(g, pattern, pdeg, gdeg, map, used) {
                return true;
            }
            used[h] = false;
            map.pop();
        }
        false
    }

    extend(g, pattern, &pdeg, &gdeg, &mut map, &mut used).then_some(map)
}

/// Whether a connected graph has spectral radius exactly 2, decided by the
/// exact certificates λ₁ ≤ 2 (proved) and λ₁ < 2 (refuted).
pub fn is_smith(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.order() == 0 {
        return Ok(false);
    }
    let two = Rational64::from_integer(2);
    Ok(certify_rho_le(g, two).is_proved() && !certify_rho_lt(g, two).is_proved())
}
