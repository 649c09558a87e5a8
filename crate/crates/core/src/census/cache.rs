//! Line-oriented census files: a version header, then one
//! `graph6<TAB>ascending coefficients` line per class.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::exact::{IntPoly, MatrixKind};
use crate::graph::Graph;

/// Bumped whenever the generator or file layout changes; files written by
/// another version are treated as stale and rebuilt.
pub const GENERATOR_VERSION: u32 = 1;

pub(crate) fn path(dir: &Path, n: usize, kind: MatrixKind) -> PathBuf {
    dir.join(format!("census-n{n}-{}.tsv", kind.name()))
}

fn header(n: usize, kind: MatrixKind) -> String {
    format!(
        "# dsgraph-census v{GENERATOR_VERSION} n={n} kind={}",
        kind.name()
    )
}

/// Loads a cached table. Missing, stale or unreadable files yield `None`.
pub(crate) fn load(dir: &Path, n: usize, kind: MatrixKind) -> Option<Vec<(Graph, IntPoly)>> {
    let file = fs::File::open(path(dir, n, kind)).ok()?;
    let mut lines = BufReader::new(file).lines();
    if lines.next()?.ok()? != header(n, kind) {
        return None;
    }
    let mut out = Vec::new();
    for line in lines {
        let line = line.ok()?;
        let (g6, poly) = line.split_once('\t')?;
        let g = Graph::from_graph6(g6).ok()?;
        let p = IntPoly::from_ascending_str(poly)?;
        if g.order() != n || p.degree() != Some(n) {
            return None;
        }
        out.push((g, p));
    }
    Some(out)
}

/// Writes a table atomically: a temporary file in the target directory is
/// renamed over the destination.
pub(crate) fn store(
    dir: &Path,
    n: usize,
    kind: MatrixKind,
    rows: &[(Graph, IntPoly)],
) -> Result<()> {
    let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    {
        let mut w = BufWriter::new(tmp.as_file());
        writeln!(w, "{}", header(n, kind)).map_err(io)?;
        for (g, p) in rows {
            writeln!(w, "{}\t{}", g.to_graph6(), p.to_ascending_string()).map_err(io)?;
        }
        w.flush().map_err(io)?;
    }
    tmp.persist(path(dir, n, kind)).map_err(|e| io(e.error))?;
    Ok(())
}
