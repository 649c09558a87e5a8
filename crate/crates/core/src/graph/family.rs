//! Named graph families with a fixed vertex numbering.
//!
//! The numbering is part of the public contract:
//!
//! * `path n`: `0 - 1 - ... - (n-1)`.
//! * `cycle n`: the path plus the edge `(n-1) - 0`.
//! * `complete n`: all pairs.
//! * `star k` (K_{1,k}): centre `0`, leaves `1..=k`.
//! * `kite p,q`: clique on `0..p`, then a path `p-1 - p - ... - (p+q-1)`.
//!   For `p <= 2` the kite collapses to the path on `p+q` vertices.
//! * `lollipop n,p` (H_{n,p}): cycle on `0..p`, path `p-1 - p - ... - (n-1)`.
//! * `double_kite p,q`: clique on `0..p`, path on `p..p+q` attached to `p-1`,
//!   second clique on `p+q..2p+q` attached at `p+q` to the path's last vertex
//!   (or to `p-1` when `q = 0`).
//! * `starlike l1..lD`: centre `0`; branch `i` occupies the next `l_i`
//!   vertices in order, its first vertex adjacent to the centre.
//! * `smith_d n` (extended D_n, `n >= 4`, `n+1` vertices): spine path on
//!   `0..n-3`, leaves `n-3, n-2` on vertex `0` and `n-1, n` on vertex `n-4`.
//! * `smith_e6`, `smith_e7`, `smith_e8`: the starlike trees `T(2,2,2)`,
//!   `T(1,3,3)` and `T(1,2,5)`.

use std::fmt;
use std::str::FromStr;

use super::{Graph, MultiGraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Star { k: usize },
    Kite { p: usize, q: usize },
    Lollipop { n: usize, p: usize },
    DoubleKite { p: usize, q: usize },
    Starlike { branches: Vec<usize> },
    SmithD { n: usize },
    SmithE6,
    SmithE7,
    SmithE8,
}

fn out_of_domain(family: &'static str, bound: impl Into<String>) -> Error {
    Error::ParameterOutOfDomain {
        family,
        bound: bound.into(),
    }
}

struct Builder(Graph);

impl Builder {
    fn new(n: usize) -> Self {
        Builder(Graph::empty(n))
    }
    fn edge(&mut self, u: usize, v: usize) {
        self.0.set_edge(u, v);
    }
    fn clique(&mut self, start: usize, len: usize) {
        for u in start..start + len {
            for v in u + 1..start + len {
                self.edge(u, v);
            }
        }
    }
    fn path(&mut self, start: usize, len: usize) {
        for u in start..(start + len).saturating_sub(1) {
            self.edge(u, u + 1);
        }
    }
}

/// Builds a member of a named family. See the module docs for numbering.
pub fn make_family(spec: &Family) -> Result<Graph> {
    let g = match *spec {
        Family::Path { n } => {
            if n < 1 {
                return Err(out_of_domain("path", "n >= 1"));
            }
            let mut b = Builder::new(n);
            b.path(0, n);
            b.0
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(out_of_domain("cycle", "n >= 3"));
            }
            let mut b = Builder::new(n);
            b.path(0, n);
            b.edge(n - 1, 0);
            b.0
        }
        Family::Complete { n } => {
            if n < 1 {
                return Err(out_of_domain("complete", "n >= 1"));
            }
            let mut b = Builder::new(n);
            b.clique(0, n);
            b.0
        }
        Family::Star { k } => {
            if k < 1 {
                return Err(out_of_domain("star", "k >= 1"));
            }
            let mut b = Builder::new(k + 1);
            for leaf in 1..=k {
                b.edge(0, leaf);
            }
            b.0
        }
        Family::Kite { p, q } => {
            if p < 1 {
                return Err(out_of_domain("kite", "p >= 1"));
            }
            let mut b = Builder::new(p + q);
            b.clique(0, p);
            b.path(p - 1, q + 1);
            b.0
        }
        Family::Lollipop { n, p } => {
            if p < 3 || p > n {
                return Err(out_of_domain("lollipop", "3 <= p <= n"));
            }
            let mut b = Builder::new(n);
            b.path(0, p);
            b.edge(p - 1, 0);
            b.path(p - 1, n - p + 1);
            b.0
        }
        Family::DoubleKite { p, q } => {
            if p < 1 {
                return Err(out_of_domain("double_kite", "p >= 1"));
            }
            let mut b = Builder::new(2 * p + q);
            b.clique(0, p);
            b.path(p - 1, q + 2);
            b.clique(p + q, p);
            b.0
        }
        Family::Starlike { ref branches } => {
            if branches.len() < 3 {
                return Err(out_of_domain("starlike", "at least 3 branches"));
            }
            if branches.contains(&0) {
                return Err(out_of_domain("starlike", "every branch length >= 1"));
            }
            starlike(branches)
        }
        Family::SmithD { n } => {
            if n < 4 {
                return Err(out_of_domain("smith_d", "n >= 4"));
            }
            let spine = n - 3;
            let mut b = Builder::new(n + 1);
            b.path(0, spine);
            b.edge(0, n - 3);
            b.edge(0, n - 2);
            b.edge(spine - 1, n - 1);
            b.edge(spine - 1, n);
            b.0
        }
        Family::SmithE6 => starlike(&[2, 2, 2]),
        Family::SmithE7 => starlike(&[1, 3, 3]),
        Family::SmithE8 => starlike(&[1, 2, 5]),
    };
    Ok(g)
}

fn starlike(branches: &[usize]) -> Graph {
    let n = 1 + branches.iter().sum::<usize>();
    let mut b = Builder::new(n);
    let mut next = 1;
    for &len in branches {
        b.edge(0, next);
        b.path(next, len);
        next += len;
    }
    b.0
}

/// Attaches `petals[i]` petals (pendant double edges) at vertex `i` of `h`.
/// New petal vertices are numbered after the vertices of `h`, in order of
/// their attachment vertex.
pub fn b_graph(h: &Graph, petals: &[usize]) -> Result<MultiGraph> {
    if petals.len() != h.order() {
        return Err(Error::PetalCountMismatch {
            expected: h.order(),
            got: petals.len(),
        });
    }
    let total: usize = petals.iter().sum();
    let mut m = MultiGraph::empty(h.order() + total);
    for (u, v) in h.edges() {
        m.add_edges(u, v, 1)?;
    }
    let mut next = h.order();
    for (v, &count) in petals.iter().enumerate() {
        for _ in 0..count {
            m.add_edges(v, next, 2)?;
            next += 1;
        }
    }
    Ok(m)
}

impl Family {
    fn tag(&self) -> &'static str {
        match self {
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Complete { .. } => "complete",
            Family::Star { .. } => "star",
            Family::Kite { .. } => "kite",
            Family::Lollipop { .. } => "lollipop",
            Family::DoubleKite { .. } => "double_kite",
            Family::Starlike { .. } => "starlike",
            Family::SmithD { .. } => "smith_d",
            Family::SmithE6 => "smith_e6",
            Family::SmithE7 => "smith_e7",
            Family::SmithE8 => "smith_e8",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())?;
        match self {
            Family::Path { n }
            | Family::Cycle { n }
            | Family::Complete { n }
            | Family::SmithD { n } => {
                write!(f, ":n={n}")
            }
            Family::Star { k } => write!(f, ":k={k}"),
            Family::Kite { p, q } | Family::DoubleKite { p, q } => write!(f, ":p={p},q={q}"),
            Family::Lollipop { n, p } => write!(f, ":n={n},p={p}"),
            Family::Starlike { branches } => {
                let ls: Vec<String> = branches.iter().map(|l| l.to_string()).collect();
                write!(f, ":l={}", ls.join(","))
            }
            Family::SmithE6 | Family::SmithE7 | Family::SmithE8 => Ok(()),
        }
    }
}

/// Parses specs such as `kite:p=5,q=3`, `path:n=4` or `starlike:l=1,1,3`.
/// A bare comma-separated value continues the list of the preceding key.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let malformed = |reason: &str| Error::MalformedFamilySpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (tag, rest) = match s.split_once(':') {
            Some((t, r)) => (t.trim(), r.trim()),
            None => (s.trim(), ""),
        };
        let mut params: Vec<(String, Vec<usize>)> = Vec::new();
        if !rest.is_empty() {
            for tok in rest.split(',') {
                let tok = tok.trim();
                let (key, val) = match tok.split_once('=') {
                    Some((k, v)) => (Some(k.trim()), v.trim()),
                    None => (None, tok),
                };
                let val: usize = val
                    .parse()
                    .map_err(|_| malformed(&format!("`{val}` is not a non-negative integer")))?;
                match key {
                    Some(k) => {
                        if params.iter().any(|(pk, _)| pk == k) {
                            return Err(malformed(&format!("parameter `{k}` given twice")));
                        }
                        params.push((k.to_string(), vec![val]));
                    }
                    None => params
                        .last_mut()
                        .ok_or_else(|| malformed("value without a parameter name"))?
                        .1
                        .push(val),
                }
            }
        }
        let mut take = |key: &str| -> Result<usize> {
            let idx = params
                .iter()
                .position(|(k, _)| k == key)
                .ok_or_else(|| malformed(&format!("missing parameter `{key}`")))?;
            let (_, vals) = params.remove(idx);
            match vals.as_slice() {
                [v] => Ok(*v),
                _ => Err(malformed(&format!(
                    "parameter `{key}` takes a single value"
                ))),
            }
        };
        let fam = match tag {
            "path" => Family::Path { n: take("n")? },
            "cycle" => Family::Cycle { n: take("n")? },
            "complete" => Family::Complete { n: take("n")? },
            "star" => Family::Star { k: take("k")? },
            "kite" => Family::Kite {
                p: take("p")?,
                q: take("q")?,
            },
            "lollipop" => Family::Lollipop {
                n: take("n")?,
                p: take("p")?,
            },
            "double_kite" => Family::DoubleKite {
                p: take("p")?,
                q: take("q")?,
            },
            "starlike" => {
                let idx = params
                    .iter()
                    .position(|(k, _)| k == "l")
                    .ok_or_else(|| malformed("missing parameter `l`"))?;
                Family::Starlike {
                    branches: params.remove(idx).1,
                }
            }
            "smith_d" => Family::SmithD { n: take("n")? },
            "smith_e6" => Family::SmithE6,
            "smith_e7" => Family::SmithE7,
            "smith_e8" => Family::SmithE8,
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        if let Some((k, _)) = params.first() {
            return Err(malformed(&format!("unexpected parameter `{k}`")));
        }
        Ok(fam)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn kite_without_path_is_complete() {
        let g = make_family(&Family::Kite { p: 4, q: 0 }).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 6);
        assert!(g.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn kite_numbering() {
        let g = make_family(&Family::Kite { p: 4, q: 2 }).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.size(), 8);
        assert_eq!(g.degrees(), vec![3, 3, 3, 4, 2, 1]);
        assert!(g.has_edge(3, 4) && g.has_edge(4, 5));
    }

    #[test]
    fn small_kites_collapse_to_paths() {
        for q in 0..5 {
            for p in 1..=2 {
                let k = make_family(&Family::Kite { p, q }).unwrap();
                let path = make_family(&Family::Path { n: p + q }).unwrap();
                assert_eq!(k, path);
            }
        }
    }

    #[test]
    fn starlike_has_single_branch_vertex() {
        let g = make_family(&Family::Starlike {
            branches: vec![1, 1, 3],
        })
        .unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_tree());
        assert_eq!(g.degrees().iter().filter(|&&d| d == 3).count(), 1);
        assert!(g.degrees().iter().all(|&d| d <= 3));
        assert_eq!(g.degree(0), 3);
    }

    #[test]
    fn lollipop_and_double_kite() {
        let h = make_family(&Family::Lollipop { n: 7, p: 5 }).unwrap();
        assert_eq!((h.order(), h.size()), (7, 7));
        assert_eq!(h.degree(4), 3);
        let dk = make_family(&Family::DoubleKite { p: 3, q: 2 }).unwrap();
        assert_eq!((dk.order(), dk.size()), (8, 3 + 3 + 3));
        assert_eq!(sorted_degrees(&dk), vec![2, 2, 2, 2, 2, 2, 3, 3]);
        let dk0 = make_family(&Family::DoubleKite { p: 3, q: 0 }).unwrap();
        assert!(dk0.has_edge(2, 3));
        assert_eq!(dk0.size(), 7);
    }

    #[test]
    fn smith_trees() {
        let d4 = make_family(&Family::SmithD { n: 4 }).unwrap();
        let k14 = make_family(&Family::Star { k: 4 }).unwrap();
        assert!(crate::graph::is_isomorphic(&d4, &k14).unwrap());
        let d6 = make_family(&Family::SmithD { n: 6 }).unwrap();
        assert_eq!((d6.order(), d6.size()), (7, 6));
        assert_eq!(sorted_degrees(&d6), vec![1, 1, 1, 1, 2, 3, 3]);
        for (f, n) in [
            (Family::SmithE6, 7),
            (Family::SmithE7, 8),
            (Family::SmithE8, 9),
        ] {
            let g = make_family(&f).unwrap();
            assert_eq!(g.order(), n);
            assert!(g.is_tree());
        }
    }

    #[test]
    fn domain_errors_name_the_bound() {
        let cases = [
            Family::Path { n: 0 },
            Family::Cycle { n: 2 },
            Family::Star { k: 0 },
            Family::Kite { p: 0, q: 3 },
            Family::Lollipop { n: 4, p: 5 },
            Family::Lollipop { n: 4, p: 2 },
            Family::Starlike {
                branches: vec![1, 2],
            },
            Family::Starlike {
                branches: vec![1, 0, 2],
            },
            Family::SmithD { n: 3 },
        ];
        for c in cases {
            match make_family(&c) {
                Err(Error::ParameterOutOfDomain { bound, .. }) => assert!(!bound.is_empty()),
                other => panic!("{c}: expected domain error, got {other:?}"),
            }
        }
    }

    #[test]
    fn parse_specs() {
        assert_eq!(
            "kite:p=5,q=3".parse::<Family>().unwrap(),
            Family::Kite { p: 5, q: 3 }
        );
        assert_eq!(
            "starlike:l=1,1,3".parse::<Family>().unwrap(),
            Family::Starlike {
                branches: vec![1, 1, 3]
            }
        );
        assert_eq!("smith_e7".parse::<Family>().unwrap(), Family::SmithE7);
        assert!("kite:p=5".parse::<Family>().is_err());
        assert!("kite:p=5,q=1,r=2".parse::<Family>().is_err());
        assert!(matches!(
            "blob:n=3".parse::<Family>(),
            Err(Error::UnknownFamily(_))
        ));
        for f in [
            Family::Lollipop { n: 9, p: 3 },
            Family::Starlike {
                branches: vec![2, 2, 2, 1],
            },
        ] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
    }

    #[test]
    fn b_graph_petals() {
        let p2 = make_family(&Family::Path { n: 2 }).unwrap();
        let m = b_graph(&p2, &[0, 0]).unwrap();
        assert_eq!(m.to_simple().unwrap(), p2);

        let k1 = Graph::empty(1);
        let m = b_graph(&k1, &[1]).unwrap();
        assert_eq!(m.order(), 2);
        assert_eq!(m.multiplicity(0, 1), 2);

        let m = b_graph(&p2, &[1, 0]).unwrap();
        assert_eq!(m.order(), 3);
        assert_eq!(m.multiplicity(0, 1), 1);
        assert_eq!(m.multiplicity(0, 2), 2);
        assert_eq!(m.multiplicity(1, 2), 0);
        assert_eq!(m.size(), 1 + 2);

        assert!(matches!(
            b_graph(&p2, &[1]),
            Err(Error::PetalCountMismatch { .. })
        ));
    }
}
