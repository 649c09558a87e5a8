//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualise each vertex of the first non-trivial cell in
//! turn, and recurse. Every leaf is a discrete partition, i.e. a relabelling;
//! the canonical labelling is the leaf whose relabelled adjacency rows are
//! lexicographically greatest. Leaves that reproduce an earlier leaf's graph
//! yield automorphisms, which prune sibling branches lying in an explored
//! orbit and let the search jump back to the branching point.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by the canonical labelling routines.
pub const CANON_CAP: usize = 32;

type Perm = Vec<u8>;

struct Leaf {
    rows: Vec<u64>,
    lab: Vec<u8>,
}

struct Search {
    n: usize,
    adj: Vec<u64>,
    generators: Vec<Perm>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    path: Vec<u8>,
    first_path: Vec<u8>,
    best_path: Vec<u8>,
}

const DONE: usize = usize::MAX;

#[inline]
fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// Refines an ordered partition (cells as vertex masks) until it is
/// equitable. Splits depend only on cell positions and neighbour counts, so
/// the result commutes with relabelling.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    let mut buckets: Vec<(u32, u64)> = Vec::with_capacity(8);
    'restart: loop {
        for s in 0..cells.len() {
            let w = cells[s];
            for i in 0..cells.len() {
                let x = cells[i];
                if x & (x - 1) == 0 {
                    continue;
                }
                buckets.clear();
                for v in bits(x) {
                    let c = (adj[v] & w).count_ones();
                    match buckets.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, m)) => *m |= 1 << v,
                        None => buckets.push((c, 1 << v)),
                    }
                }
                if buckets.len() > 1 {
                    buckets.sort_unstable_by_key(|&(k, _)| k);
                    cells.splice(i..=i, buckets.iter().map(|&(_, m)| m));
                    continue 'restart;
                }
            }
        }
        return;
    }
}

impl Search {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        Search {
            n,
            adj: (0..n).map(|v| g.row_mask(v)).collect(),
            generators: Vec::new(),
            first: None,
            best: None,
            path: Vec::new(),
            first_path: Vec::new(),
            best_path: Vec::new(),
        }
    }

    fn relabelled_rows(&self, lab: &[u8]) -> Vec<u64> {
        let mut pos = vec![0u8; self.n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        lab.iter()
            .map(|&v| bits(self.adj[v as usize]).fold(0u64, |acc, u| acc | 1 << pos[u]))
            .collect()
    }

    fn common_prefix(a: &[u8], b: &[u8]) -> usize {
        a.iter().zip(b).take_while(|(x, y)| x == y).count()
    }

    fn record_automorphism(&mut self, from: &[u8], to: &[u8]) {
        let mut gamma = vec![0u8; self.n];
        for (&f, &t) in from.iter().zip(to) {
            gamma[f as usize] = t;
        }
        if gamma.iter().enumerate().any(|(i, &g)| i != g as usize) {
            self.generators.push(gamma);
        }
    }

    /// Returns the depth to unwind to, or `DONE` on normal completion.
    fn leaf(&mut self, cells: &[u64]) -> usize {
        let lab: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let rows = self.relabelled_rows(&lab);
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                rows: rows.clone(),
                lab: lab.clone(),
            });
            self.best = Some(Leaf { rows, lab });
            self.first_path = self.path.clone();
            self.best_path = self.path.clone();
            return DONE;
        };
        if rows == first.rows {
            let first_lab = first.lab.clone();
            self.record_automorphism(&lab, &first_lab);
            return Self::common_prefix(&self.path, &self.first_path);
        }
        let best = self.best.as_ref().expect("best leaf set with first");
        match rows.cmp(&best.rows) {
            std::cmp::Ordering::Equal => {
                let best_lab = best.lab.clone();
                self.record_automorphism(&lab, &best_lab);
                Self::common_prefix(&self.path, &self.best_path)
            }
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf { rows, lab });
                self.best_path = self.path.clone();
                DONE
            }
            std::cmp::Ordering::Less => DONE,
        }
    }

    /// Whether `v` lies in the orbit of an explored vertex under the
    /// automorphisms found so far that fix the current path pointwise.
    fn in_explored_orbit(&self, v: usize, explored: u64) -> bool {
        let mut parent: Vec<u8> = (0..self.n as u8).collect();
        fn find(p: &mut [u8], mut x: usize) -> usize {
            while p[x] as usize != x {
                p[x] = p[p[x] as usize];
                x = p[x] as usize;
            }
            x
        }
        let mut any = false;
        for g in &self.generators {
            if self.path.iter().any(|&x| g[x as usize] != x) {
                continue;
            }
            any = true;
            for (i, &j) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j as usize));
                if a != b {
                    parent[a.max(b)] = a.min(b) as u8;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        bits(explored).any(|u| find(&mut parent, u) == root)
    }

    fn run(&mut self, mut cells: Vec<u64>) -> usize {
        refine(&self.adj, &mut cells);
        if cells.len() == self.n {
            return self.leaf(&cells);
        }
        let depth = self.path.len();
        let target = cells
            .iter()
            .position(|c| c & (c - 1) != 0)
            .expect("non-discrete partition");
        let cell = cells[target];
        let mut explored = 0u64;
        for v in bits(cell) {
            if explored != 0 && self.in_explored_orbit(v, explored) {
                continue;
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            self.path.push(v as u8);
            let back = self.run(child);
            self.path.pop();
            if back != DONE && back < depth {
                return back;
            }
        }
        DONE
    }
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.order() > CANON_CAP {
        return Err(Error::CapExceeded {
            operation: "canonical labelling",
            order: g.order(),
            cap: CANON_CAP,
        });
    }
    Ok(())
}

/// Canonical labelling as `lab[position] = vertex`, together with the
/// relabelled adjacency rows. `colors` (if given) fixes an initial ordered
/// partition: vertices are grouped by ascending colour.
pub(crate) fn canonical_lab(g: &Graph, colors: Option<&[u32]>) -> Result<(Vec<u8>, Vec<u64>)> {
    check_cap(g)?;
    let n = g.order();
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let mut cells: Vec<u64> = match colors {
        None => vec![if n == 64 { u64::MAX } else { (1u64 << n) - 1 }],
        Some(c) => {
            if c.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "{} colours given for {} vertices",
                    c.len(),
                    n
                )));
            }
            let mut distinct: Vec<u32> = c.to_vec();
            distinct.sort_unstable();
            distinct.dedup();
            distinct
                .iter()
                .map(|&col| {
                    (0..n)
                        .filter(|&v| c[v] == col)
                        .fold(0u64, |m, v| m | 1 << v)
                })
                .collect()
        }
    };
    if n == 1 {
        return Ok((vec![0], vec![0]));
    }
    let mut search = Search::new(g);
    cells.retain(|&c| c != 0);
    search.run(cells);
    let best = search.best.expect("search visits at least one leaf");
    Ok((best.lab, best.rows))
}

/// Canonical relabelling: vertex `v` of `g` maps to `labelling[v]`, and
/// `g.relabel(&labelling)` is the same graph for every isomorphic input.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let (lab, _) = canonical_lab(g, None)?;
    Ok(invert(&lab))
}

/// Canonical labelling of a vertex-coloured graph. Colour classes keep
/// ascending colour order in the relabelled graph.
pub fn canonical_labeling_colored(g: &Graph, colors: &[u32]) -> Result<Vec<usize>> {
    let (lab, _) = canonical_lab(g, Some(colors))?;
    Ok(invert(&lab))
}

fn invert(lab: &[u8]) -> Vec<usize> {
    let mut perm = vec![0; lab.len()];
    for (i, &v) in lab.iter().enumerate() {
        perm[v as usize] = i;
    }
    perm
}

/// graph6 string of the canonical relabelling; equal for two graphs exactly
/// when they are isomorphic. Orders above [`CANON_CAP`] are rejected.
pub fn canonical_form(g: &Graph) -> Result<String> {
    let perm = canonical_labeling(g)?;
    Ok(g.relabel(&perm)?.to_graph6())
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    if g1.order() != g2.order() || g1.size() != g2.size() {
        check_cap(g1)?;
        check_cap(g2)?;
        return Ok(false);
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }
    Ok(canonical_lab(g1, None)?.1 == canonical_lab(g2, None)?.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};
    use crate::transforms::line_graph_simple;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fam(f: Family) -> Graph {
        make_family(&f).unwrap()
    }

    #[test]
    fn relabelled_path() {
        let p3 = fam(Family::Path { n: 3 });
        let q = p3.relabel(&[2, 0, 1]).unwrap();
        assert_ne!(p3, q);
        assert_eq!(canonical_form(&p3).unwrap(), canonical_form(&q).unwrap());
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let k3 = fam(Family::Complete { n: 3 });
        let p3 = fam(Family::Path { n: 3 });
        assert_ne!(canonical_form(&k3).unwrap(), canonical_form(&p3).unwrap());
        let star = fam(Family::Star { k: 4 });
        let c4k1 = fam(Family::Cycle { n: 4 }).disjoint_union(&Graph::empty(1));
        assert_ne!(
            canonical_form(&star).unwrap(),
            canonical_form(&c4k1).unwrap()
        );
    }

    #[test]
    fn isomorphism_examples() {
        let k4 = fam(Family::Complete { n: 4 });
        assert!(is_isomorphic(&k4, &fam(Family::Kite { p: 4, q: 0 })).unwrap());
        assert!(!is_isomorphic(&fam(Family::Path { n: 4 }), &fam(Family::Star { k: 3 })).unwrap());
        let lk3 = line_graph_simple(&fam(Family::Complete { n: 3 }));
        let lk13 = line_graph_simple(&fam(Family::Star { k: 3 }));
        assert!(is_isomorphic(&lk3, &lk13).unwrap());
    }

    #[test]
    fn highly_symmetric_graphs_terminate() {
        let graphs = [
            Graph::empty(CANON_CAP),
            fam(Family::Complete { n: 20 }),
            fam(Family::Cycle { n: 32 }),
            // 12 K2, a typical root of an edgeless line graph.
            Graph::from_edges(24, &(0..12).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>())
                .unwrap(),
            // Three disjoint triangles and K_{3,3,3}.
            Graph::from_edges(
                9,
                &[
                    (0, 1),
                    (1, 2),
                    (0, 2),
                    (3, 4),
                    (4, 5),
                    (3, 5),
                    (6, 7),
                    (7, 8),
                    (6, 8),
                ],
            )
            .unwrap(),
        ];
        for g in &graphs {
            let f = canonical_form(g).unwrap();
            let mut perm: Vec<usize> = (0..g.order()).collect();
            perm.reverse();
            assert_eq!(f, canonical_form(&g.relabel(&perm).unwrap()).unwrap());
            let c = g.complement();
            assert_eq!(
                canonical_form(&c).unwrap(),
                canonical_form(&c.relabel(&perm).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            canonical_form(&Graph::empty(CANON_CAP + 1)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn colours_separate_vertices() {
        let p2 = fam(Family::Path { n: 2 });
        let a = canonical_labeling_colored(&p2, &[1, 0]).unwrap();
        let b = canonical_labeling_colored(&p2, &[0, 1]).unwrap();
        assert_eq!(a, vec![1, 0]);
        assert_eq!(b, vec![0, 1]);
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
        let density: f64 = rng.gen_range(0.1..0.9);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(density) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn invariant_under_random_permutations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=9);
            let g = random_graph(&mut rng, n);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm).unwrap();
            assert_eq!(
                canonical_form(&g).unwrap(),
                canonical_form(&h).unwrap(),
                "{g:?}"
            );
            let lab = canonical_labeling(&g).unwrap();
            assert_eq!(
                g.relabel(&lab).unwrap().to_graph6(),
                canonical_form(&g).unwrap()
            );
        }
    }

    #[test]
    fn colored_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=10);
            let g = random_graph(&mut rng, n);
            let colors: Vec<u32> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm).unwrap();
            let mut hc = vec![0; n];
            for v in 0..n {
                hc[perm[v]] = colors[v];
            }
            let a = g
                .relabel(&canonical_labeling_colored(&g, &colors).unwrap())
                .unwrap();
            let b = h
                .relabel(&canonical_labeling_colored(&h, &hc).unwrap())
                .unwrap();
            assert_eq!(a, b);
        }
    }
}
