//! Exhaustive censuses of small graphs: enumeration up to isomorphism,
//! grouping into cospectral classes by exact characteristic polynomial, and
//! decisions on whether a graph is determined by its spectrum (DS).
//!
//! A [`Census`] memoises enumerations and polynomial tables, optionally
//! persists the tables to a cache directory, and runs the parallel parts on
//! its own thread pool when a job count is given. Results never depend on
//! the number of threads.

mod cache;
mod generate;

pub use cache::GENERATOR_VERSION;
pub use generate::enumerate_trees;

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{charpoly, IntPoly, MatrixKind};
use crate::graph::{canonical_lab, make_family, Family, Graph};
use generate::{generate_levels, key_graph, Key};

/// Largest order for exhaustive enumeration (274 668 graphs at n = 9).
pub const CENSUS_CAP: usize = 9;

/// Environment variable overriding the default cache directory.
pub const CACHE_DIR_ENV: &str = "DSGRAPH_CACHE_DIR";

/// Default cache directory, relative to the working directory.
pub const DEFAULT_CACHE_DIR: &str = "census-cache";

/// What a census covers, stated in every report.
const SCOPE: &str =
    "exhaustive over all graphs of this order; statements about other orders are not covered";

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "census order must be at least 1".into(),
        ));
    }
    if n > CENSUS_CAP {
        return Err(Error::CapExceeded {
            operation: "census",
            order: n,
            cap: CENSUS_CAP,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    /// Worker threads; `None` uses rayon's global pool.
    pub jobs: Option<usize>,
    /// Directory for persisted tables; `None` keeps everything in memory.
    pub cache_dir: Option<PathBuf>,
}

/// One enumerated class with its exact polynomial.
#[derive(Debug, Clone)]
pub struct CensusEntry {
    /// The class representative, in canonical labelling.
    pub graph: Graph,
    pub charpoly: IntPoly,
    pub connected: bool,
    key: Key,
}

/// Every graph of one order with its characteristic polynomial for one
/// matrix kind, in canonical order.
#[derive(Debug)]
pub struct CensusTable {
    pub n: usize,
    pub kind: MatrixKind,
    pub entries: Vec<CensusEntry>,
    by_poly: HashMap<IntPoly, Vec<usize>>,
}

impl CensusTable {
    fn new(n: usize, kind: MatrixKind, rows: Vec<(Graph, IntPoly)>) -> Self {
        let entries: Vec<CensusEntry> = rows
            .into_iter()
            .map(|(graph, charpoly)| CensusEntry {
                key: (0..graph.order()).map(|v| graph.row_mask(v)).collect(),
                connected: graph.is_connected(),
                graph,
                charpoly,
            })
            .collect();
        let mut by_poly: HashMap<IntPoly, Vec<usize>> = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            by_poly.entry(e.charpoly.clone()).or_default().push(i);
        }
        CensusTable {
            n,
            kind,
            entries,
            by_poly,
        }
    }

    /// Classes with more than one member among the selected graphs, in
    /// order of their first member.
    pub fn nontrivial_classes(&self, connected_only: bool) -> Vec<Vec<&CensusEntry>> {
        let mut firsts: Vec<(usize, Vec<&CensusEntry>)> = self
            .by_poly
            .values()
            .map(|idx| {
                let members: Vec<&CensusEntry> = idx
                    .iter()
                    .map(|&i| &self.entries[i])
                    .filter(|e| e.connected || !connected_only)
                    .collect();
                (idx[0], members)
            })
            .filter(|(_, m)| m.len() > 1)
            .collect();
        firsts.sort_by_key(|(i, _)| *i);
        firsts.into_iter().map(|(_, m)| m).collect()
    }

    /// Members sharing `poly`, in canonical order.
    pub fn class_of(&self, poly: &IntPoly) -> Vec<&CensusEntry> {
        self.by_poly
            .get(poly)
            .map(|idx| idx.iter().map(|&i| &self.entries[i]).collect())
            .unwrap_or_default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "mates", rename_all = "snake_case")]
pub enum DsVerdict {
    Ds,
    Mates(Vec<Graph>),
}

impl DsVerdict {
    pub fn is_ds(&self) -> bool {
        matches!(self, DsVerdict::Ds)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CospectralClass {
    /// Shared characteristic polynomial, ascending coefficients.
    pub charpoly: String,
    pub members: Vec<Graph>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DsQuery {
    pub graph: Graph,
    pub verdict: DsVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub kind: MatrixKind,
    pub connected_only: bool,
    /// Number of isomorphism classes considered.
    pub total: usize,
    pub classes: Vec<CospectralClass>,
    pub ds_verdicts: Vec<DsQuery>,
    pub scope: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassConnectivity {
    pub charpoly: String,
    pub members: Vec<Graph>,
    pub contains_kite: bool,
    pub mixes_connectivity: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConnectivityReport {
    pub n: usize,
    pub nontrivial_classes: usize,
    pub classes_with_kite: usize,
    pub mixed_classes: usize,
    pub classes: Vec<ClassConnectivity>,
}

/// All kites on `n` vertices: `p + q = n` with `p >= 2`.
pub fn kites_of_order(n: usize) -> Vec<Graph> {
    (2..=n)
        .map(|p| make_family(&Family::Kite { p, q: n - p }).expect("kite parameters in domain"))
        .collect()
}

/// Census engine with memoised enumerations and tables.
pub struct Census {
    pool: Option<rayon::ThreadPool>,
    cache_dir: Option<PathBuf>,
    levels: Mutex<Vec<Vec<Key>>>,
    tables: Mutex<HashMap<(usize, MatrixKind), Arc<CensusTable>>>,
}

impl Default for Census {
    fn default() -> Self {
        Census::new(CensusOptions::default()).expect("default options are valid")
    }
}

impl Census {
    pub fn new(opts: CensusOptions) -> Result<Self> {
        let pool = match opts.jobs {
            None => None,
            Some(0) => return Err(Error::InvalidArgument("--jobs must be at least 1".into())),
            Some(j) => Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?,
            ),
        };
        Ok(Census {
            pool,
            cache_dir: opts.cache_dir,
            levels: Mutex::new(Vec::new()),
            tables: Mutex::new(HashMap::new()),
        })
    }

    fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match &self.pool {
            Some(p) => p.install(f),
            None => f(),
        }
    }

    fn keys(&self, n: usize) -> Result<Vec<Key>> {
        check_order(n)?;
        let mut levels = self.levels.lock().expect("census lock");
        if levels.len() < n {
            *levels = self.install(|| generate_levels(n))?;
        }
        Ok(levels[n - 1].clone())
    }

    /// Every graph on `n` vertices up to isomorphism, each in canonical
    /// labelling, in a fixed order.
    pub fn enumerate_graphs(&self, n: usize, connected_only: bool) -> Result<Vec<Graph>> {
        Ok(self
            .keys(n)?
            .iter()
            .map(key_graph)
            .filter(|g| !connected_only || g.is_connected())
            .collect())
    }

    /// The order-`n` table for `kind`, from memory, the cache directory, or
    /// a fresh enumeration (which is then written back to the cache).
    pub fn table(&self, n: usize, kind: MatrixKind) -> Result<Arc<CensusTable>> {
        check_order(n)?;
        if let Some(t) = self.tables.lock().expect("census lock").get(&(n, kind)) {
            return Ok(t.clone());
        }
        let cached = self
            .cache_dir
            .as_ref()
            .and_then(|d| cache::load(d, n, kind));
        let rows = match cached {
            Some(rows) => rows,
            None => {
                let keys = self.keys(n)?;
                let rows: Vec<(Graph, IntPoly)> = self.install(|| {
                    keys.par_iter()
                        .map(|k| {
                            let g = key_graph(k);
                            let p = charpoly(&g, kind)?;
                            Ok((g, p))
                        })
                        .collect::<Result<_>>()
                })?;
                if let Some(dir) = &self.cache_dir {
                    cache::store(dir, n, kind, &rows)?;
                }
                rows
            }
        };
        let table = Arc::new(CensusTable::new(n, kind, rows));
        self.tables
            .lock()
            .expect("census lock")
            .insert((n, kind), table.clone());
        Ok(table)
    }

    /// Groups the order-`n` census by exact characteristic polynomial and
    /// reports the classes with more than one member, plus DS verdicts for
    /// `queries` (graphs of order `n`).
    pub fn cospectral_classes(
        &self,
        n: usize,
        kind: MatrixKind,
        connected_only: bool,
        queries: &[Graph],
    ) -> Result<CensusReport> {
        let table = self.table(n, kind)?;
        let classes = table
            .nontrivial_classes(connected_only)
            .into_iter()
            .map(|m| CospectralClass {
                charpoly: m[0].charpoly.to_ascending_string(),
                members: m.iter().map(|e| e.graph.clone()).collect(),
            })
            .collect();
        let ds_verdicts = queries
            .iter()
            .map(|q| {
                Ok(DsQuery {
                    graph: q.clone(),
                    verdict: self.ds_check(q, kind, connected_only)?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(CensusReport {
            n,
            kind,
            connected_only,
            total: table
                .entries
                .iter()
                .filter(|e| e.connected || !connected_only)
                .count(),
            classes,
            ds_verdicts,
            scope: SCOPE,
        })
    }

    /// Compares `g` against every class of its order. With `connected_only`
    /// only connected mates count.
    pub fn ds_check(&self, g: &Graph, kind: MatrixKind, connected_only: bool) -> Result<DsVerdict> {
        let table = self.table(g.order(), kind)?;
        let p = charpoly(g, kind)?;
        let key = canonical_lab(g, None)?.1;
        let mates: Vec<Graph> = table
            .class_of(&p)
            .into_iter()
            .filter(|e| e.key != key && (e.connected || !connected_only))
            .map(|e| e.graph.clone())
            .collect();
        Ok(if mates.is_empty() {
            DsVerdict::Ds
        } else {
            DsVerdict::Mates(mates)
        })
    }

    /// For each nontrivial adjacency class of order `n`: whether it contains
    /// a kite and whether it mixes connected and disconnected members.
    pub fn connectivity_filter_report(&self, n: usize) -> Result<ConnectivityReport> {
        let table = self.table(n, MatrixKind::Adjacency)?;
        let kite_keys: Vec<Key> = kites_of_order(n)
            .iter()
            .map(|k| canonical_lab(k, None).map(|(_, key)| key))
            .collect::<Result<_>>()?;
        let classes: Vec<ClassConnectivity> = table
            .nontrivial_classes(false)
            .into_iter()
            .map(|m| ClassConnectivity {
                charpoly: m[0].charpoly.to_ascending_string(),
                contains_kite: m.iter().any(|e| kite_keys.contains(&e.key)),
                mixes_connectivity: m.iter().any(|e| e.connected) && m.iter().any(|e| !e.connected),
                members: m.iter().map(|e| e.graph.clone()).collect(),
            })
            .collect();
        Ok(ConnectivityReport {
            n,
            nontrivial_classes: classes.len(),
            classes_with_kite: classes.iter().filter(|c| c.contains_kite).count(),
            mixed_classes: classes.iter().filter(|c| c.mixes_connectivity).count(),
            classes,
        })
    }
}

/// [`Census::enumerate_graphs`] on a fresh in-memory engine.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    Census::default().enumerate_graphs(n, connected_only)
}

/// [`Census::cospectral_classes`] on a fresh in-memory engine, without
/// queries.
pub fn cospectral_classes(
    n: usize,
    kind: MatrixKind,
    connected_only: bool,
) -> Result<CensusReport> {
    Census::default().cospectral_classes(n, kind, connected_only, &[])
}

/// [`Census::ds_check`] on a fresh in-memory engine.
pub fn ds_check(g: &Graph, kind: MatrixKind, connected_only: bool) -> Result<DsVerdict> {
    Census::default().ds_check(g, kind, connected_only)
}

/// [`Census::connectivity_filter_report`] on a fresh in-memory engine.
pub fn connectivity_filter_report(n: usize) -> Result<ConnectivityReport> {
    Census::default().connectivity_filter_report(n)
}
