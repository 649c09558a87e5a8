//! Root-graph search: every B-graph (a simple graph with petals) whose line
//! graph is isomorphic to a given graph, found by exhaustive Krausz
//! partition search.
//!
//! In a line graph L(H) the edges at a root vertex form a clique, every
//! vertex of L(H) lies in at most two such cliques, and the cliques cover
//! each edge once. With petals, the two copies of a petal edge are
//! non-adjacent twins that sit together in the clique of their base vertex
//! and share a private second endpoint. The search therefore first chooses a
//! set of disjoint non-adjacent twin pairs to act as petals, joins each pair
//! by a virtual edge, and then enumerates edge partitions into cliques in
//! which petal vertices lie in exactly one cell and all others in at most
//! two.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical_lab, is_isomorphic, Graph, MultiGraph};
use crate::transforms::line_graph;

/// Largest order accepted by [`root_graph_search`].
pub const ROOT_SEARCH_CAP: usize = 12;

/// Edge partition of a graph into cliques with every vertex in at most two
/// cells. `petal_pairs` lists vertex pairs treated as the two copies of a
/// petal; each such pair is joined by a virtual edge inside its cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KrauszPartition {
    pub cells: Vec<Vec<usize>>,
    pub petal_pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootClass {
    Tree,
    OddUnicyclic,
    EvenUnicyclic,
    Other,
}

impl RootClass {
    pub fn of(g: &Graph) -> RootClass {
        if g.order() == 0 || !g.is_connected() {
            RootClass::Other
        } else if g.size() + 1 == g.order() {
            RootClass::Tree
        } else if g.size() == g.order() {
            if g.is_bipartite() {
                RootClass::EvenUnicyclic
            } else {
                RootClass::OddUnicyclic
            }
        } else {
            RootClass::Other
        }
    }
}

/// A root B-graph: `base` with `petals[i]` petals at vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Root {
    pub base: Graph,
    pub petals: Vec<usize>,
    /// Class of `base` (petals ignored).
    pub class: RootClass,
    #[serde(skip)]
    pub partition: KrauszPartition,
}

impl Root {
    pub fn petal_total(&self) -> usize {
        self.petals.iter().sum()
    }

    /// The root as a multigraph; petal vertices follow the base vertices.
    pub fn multigraph(&self) -> MultiGraph {
        crate::graph::b_graph(&self.base, &self.petals).expect("petal vector matches base order")
    }
}

struct Krausz<'a> {
    adj: Vec<u16>,
    limit: &'a [u8],
    count: Vec<u8>,
    cells: Vec<u16>,
    out: Vec<Vec<u16>>,
}

impl Krausz<'_> {
    fn run(&mut self) {
        let Some(u) = (0..self.adj.len()).find(|&u| self.adj[u] != 0) else {
            self.out.push(self.cells.clone());
            return;
        };
        let v = self.adj[u].trailing_zeros() as usize;
        if self.count[u] >= self.limit[u] || self.count[v] >= self.limit[v] {
            return;
        }
        let mut cand = self.adj[u] & self.adj[v];
        let mut w = cand;
        while w != 0 {
            let x = w.trailing_zeros() as usize;
            w &= w - 1;
            if self.count[x] >= self.limit[x] {
                cand &= !(1 << x);
            }
        }
        self.extend((1 << u) | (1 << v), cand);
    }

    /// Chooses the cell: the seed edge plus any clique drawn from `cand`,
    /// all of whose edges are still uncovered.
    fn extend(&mut self, cell: u16, cand: u16) {
        if cand == 0 {
            self.take(cell);
            return;
        }
        let x = cand.trailing_zeros() as usize;
        let rest = cand & !(1 << x);
        self.extend(cell | (1 << x), rest & self.adj[x]);
        self.extend(cell, rest);
    }

    fn take(&mut self, cell: u16) {
        let members: Vec<usize> = (0..16).filter(|&i| cell >> i & 1 == 1).collect();
        for &a in &members {
            self.adj[a] &= !cell;
            self.count[a] += 1;
        }
        let feasible = members
            .iter()
            .all(|&a| self.count[a] < self.limit[a] || self.adj[a] == 0);
        if feasible {
            self.cells.push(cell);
            self.run();
            self.cells.pop();
        }
        for &a in &members {
            self.adj[a] |= cell & !(1 << a);
            self.count[a] -= 1;
        }
    }
}

/// Disjoint sets of non-adjacent twin pairs (candidate petals).
fn petal_matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.order();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !g.has_edge(a, b) && g.neighbors(a).eq(g.neighbors(b)))
        .collect();
    let mut out = Vec::new();
    fn rec(
        pairs: &[(usize, usize)],
        used: u16,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        match pairs.split_first() {
            None => out.push(cur.clone()),
            Some((&(a, b), rest)) => {
                rec(rest, used, cur, out);
                if used >> a & 1 == 0 && used >> b & 1 == 0 {
                    cur.push((a, b));
                    rec(rest, used | 1 << a | 1 << b, cur, out);
                    cur.pop();
                }
            }
        }
    }
    rec(&pairs, 0, &mut Vec::new(), &mut out);
    out
}

fn build_root(g: &Graph, cells: &[u16], petal_pairs: &[(usize, usize)]) -> (Graph, Vec<usize>) {
    let n = g.order();
    let mut twin = vec![usize::MAX; n];
    for &(a, b) in petal_pairs {
        twin[a] = b;
        twin[b] = a;
    }
    // Base vertices: one per cell, then pendant ends, then K2 endpoints.
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next = cells.len();
    let mut petals = vec![0usize; cells.len()];
    for (x, &tx) in twin.iter().enumerate() {
        let mine: Vec<usize> = (0..cells.len())
            .filter(|&c| cells[c] >> x & 1 == 1)
            .collect();
        match mine.as_slice() {
            [c1, c2] => edges.push((*c1, *c2)),
            [c] if tx != usize::MAX => {
                if x < tx {
                    petals[*c] += 1;
                }
            }
            [c] => {
                edges.push((*c, next));
                next += 1;
            }
            [] => {
                edges.push((next, next + 1));
                next += 2;
            }
            _ => unreachable!("a vertex lies in at most two cells"),
        }
    }
    petals.resize(next, 0);
    let base = Graph::from_edges(next, &edges).expect("root edges are in range");
    (base, petals)
}

/// All B-graph roots `h` (without isolated vertices) with `L(h) ≅ g`, up to
/// isomorphism, in a deterministic order. An empty result means `g` is not
/// a generalized line graph.
pub fn root_graph_search(g: &Graph) -> Result<Vec<Root>> {
    let n = g.order();
    if n > ROOT_SEARCH_CAP {
        return Err(Error::CapExceeded {
            operation: "root_graph_search",
            order: n,
            cap: ROOT_SEARCH_CAP,
        });
    }
    let mut seen: Vec<(Vec<u64>, Vec<u32>)> = Vec::new();
    let mut roots = Vec::new();
    for matching in petal_matchings(g) {
        let mut adj: Vec<u16> = (0..n).map(|v| g.row_mask(v) as u16).collect();
        let mut limit = vec![2u8; n];
        for &(a, b) in &matching {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
            limit[a] = 1;
            limit[b] = 1;
        }
        let mut search = Krausz {
            adj,
            limit: &limit,
            count: vec![0; n],
            cells: Vec::new(),
            out: Vec::new(),
        };
        search.run();
        for cells in search.out {
            let (base, petals) = build_root(g, &cells, &matching);
            let colors: Vec<u32> = petals.iter().map(|&p| p as u32).collect();
            let (lab, rows) = canonical_lab(&base, Some(&colors))?;
            let key_colors: Vec<u32> = lab.iter().map(|&v| colors[v as usize]).collect();
            let key = (rows, key_colors);
            if seen.contains(&key) {
                continue;
            }
            let root_line = line_graph(&crate::graph::b_graph(&base, &petals)?);
            debug_assert!(
                is_isomorphic(&root_line, g)?,
                "Krausz reconstruction must invert the line graph"
            );
            seen.push(key);
            let partition = KrauszPartition {
                cells: cells
                    .iter()
                    .map(|&c| (0..n).filter(|&v| c >> v & 1 == 1).collect())
                    .collect(),
                petal_pairs: matching.clone(),
            };
            roots.push(Root {
                class: RootClass::of(&base),
                base,
                petals,
                partition,
            });
        }
    }
    Ok(roots)
}
