//! The experiments behind the `ssgraph` binary, writing their artifacts to
//! an output directory.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::graph::checks::{
    classifier_disagreements, dual_transport_check, out_weight_failures, product_neighbour_discrepancies,
    ratio_failures,
};
use crate::graph::{
    build_graph, census, subgraph, to_dot, write_edges_csv, GraphFile, Subgraph, SuperspecialGraph, WeightedDigraph,
};
use crate::spectra::{
    detailed_balance_failures, diameter, drop_sinks, is_stationary, lambda_star, spectra_row, stationary_closed_form,
    SpectraRow, SpectralOptions, TransitionMatrix,
};
use crate::walk::{random_walk, random_walk_trace, WalkConfig, WalkStats};

/// Output format for `build`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Dot,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format {s:?} (json, dot, csv)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub out: PathBuf,
    pub seed: u64,
    pub dense_threshold: usize,
    pub extended_checks: bool,
    /// Extra formats for `build`; JSON and DOT are always written.
    pub format: Option<Format>,
}

impl RunConfig {
    pub fn new(out: impl Into<PathBuf>) -> Self {
        Self {
            out: out.into(),
            seed: crate::field::DEFAULT_SEED,
            dense_threshold: crate::spectra::DENSE_THRESHOLD,
            extended_checks: false,
            format: None,
        }
    }

    pub fn spectral_options(&self) -> SpectralOptions {
        SpectralOptions {
            dense_threshold: self.dense_threshold,
            seed: self.seed,
        }
    }

    fn dir(&self) -> Result<&Path> {
        fs::create_dir_all(&self.out).map_err(|e| Error::io(&self.out, e))?;
        Ok(&self.out)
    }
}

/// `"11"` or an inclusive range `"17..101"` of which the primes ≥ 7 are
/// kept. A single value must itself be such a prime.
pub fn parse_primes(s: &str) -> Result<Vec<u64>> {
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| Error::Precondition(format!("not a number: {t:?}")))
    };
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b)?);
        return Ok((a.max(7)..=b).filter(|&p| is_prime(p)).collect());
    }
    let p = num(s)?;
    if p < 7 || !is_prime(p) {
        return Err(Error::Precondition(format!("p = {p} must be a prime ≥ 7")));
    }
    Ok(vec![p])
}

fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

/// Human-readable summary: sizes, build checks and the census table.
pub fn summary(g: &SuperspecialGraph) -> String {
    let c = census(g);
    let mut s = format!(
        "p = {}: {} vertices, {} edge classes, seed {}\n\
         Richelot identity: {} checked, {} failed; dual round trips: {} checked, {} failed\n\
         {:<10} {:>8} {:>10}\n",
        g.p,
        g.len(),
        g.edges.len(),
        g.seed,
        g.stats.identity_checks,
        g.stats.identity_failures,
        g.stats.dual_checks,
        g.stats.dual_failures,
        "type",
        "observed",
        "expected"
    );
    for r in &c.rows {
        s += &format!(
            "{:<10} {:>8} {:>10}{}\n",
            r.ra_type.name(),
            r.observed,
            r.expected,
            if r.matches { "" } else { "  MISMATCH" }
        );
    }
    s
}

/// Builds Γ₂(2;p) and writes `graph-p.json`, `graph-p.dot`, `graph-p.txt`
/// and, when asked for, `edges-p.csv`.
pub fn cmd_build(p: u64, cfg: &RunConfig) -> Result<SuperspecialGraph> {
    parse_primes(&p.to_string())?;
    let g = build_graph(p, None)?;
    let dir = cfg.dir()?;
    GraphFile::from_graph(&g).write_json(&dir.join(format!("graph-{p}.json")))?;
    write_file(&dir.join(format!("graph-{p}.dot")), to_dot(&g).as_bytes())?;
    write_file(&dir.join(format!("graph-{p}.txt")), summary(&g).as_bytes())?;
    if cfg.format == Some(Format::Csv) {
        let path = dir.join(format!("edges-{p}.csv"));
        let f = fs::File::create(&path).map_err(|e| Error::io(&path, e))?;
        write_edges_csv(&g, f).map_err(|e| Error::io(&path, e.into()))?;
    }
    Ok(g)
}

/// Per-prime diameters and `λ̃⋆`, written to `spectra.csv`. At p = 11 the
/// returned notes also give the second adjacency eigenvalue.
pub fn cmd_spectra(primes: &[u64], cfg: &RunConfig) -> Result<(Vec<SpectraRow>, Vec<String>)> {
    let opts = cfg.spectral_options();
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for &p in primes {
        let g = build_graph(p, None)?;
        let row = spectra_row(&g, &opts);
        if p == 11 {
            let r = lambda_star(&g.digraph(), &opts);
            notes.push(format!(
                "p = 11: second adjacency eigenvalue 15·λ₂ = {:.9} (7 + √3 = {:.9}); Ramanujan bound 2√14 = {:.9}",
                15.0 * r.lambda2,
                7.0 + 3f64.sqrt(),
                2.0 * 14f64.sqrt()
            ));
        }
        rows.push(row);
    }
    let path = cfg.dir()?.join("spectra.csv");
    let f = fs::File::create(&path).map_err(|e| Error::io(&path, e))?;
    write_spectra_csv(&rows, f).map_err(|e| Error::io(&path, e.into()))?;
    Ok((rows, notes))
}

/// CSV with header `p,vertices,d_G,d_J,d_E,lambda_G,lambda_J,lambda_E`.
pub fn write_spectra_csv<W: Write>(rows: &[SpectraRow], out: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(["p", "vertices", "d_G", "d_J", "d_E", "lambda_G", "lambda_J", "lambda_E"])?;
    let d = |x: Option<usize>| x.map_or("inf".to_string(), |v| v.to_string());
    for r in rows {
        w.write_record([
            r.p.to_string(),
            r.vertices.to_string(),
            d(r.d_g),
            d(r.d_j),
            d(r.d_e),
            format!("{:.6}", r.lambda_g),
            format!("{:.6}", r.lambda_j),
            format!("{:.6}", r.lambda_e),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Runs a seeded walk; writes `walk-p.json` with the statistics and
/// `walk-p.csv` with one `step,vertex,kind` line per step.
pub fn cmd_walk(p: u64, walk: &WalkConfig, cfg: &RunConfig) -> Result<WalkStats> {
    parse_primes(&p.to_string())?;
    let g = build_graph(p, None)?;
    let stats = random_walk(&g, walk)?;
    let (_, trace) = random_walk_trace(&g, walk)?;
    let dir = cfg.dir()?;
    let path = dir.join(format!("walk-{p}.json"));
    let json = serde_json::to_vec_pretty(&stats).map_err(|e| Error::io(&path, e.into()))?;
    write_file(&path, &json)?;
    let path = dir.join(format!("walk-{p}.csv"));
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::io(&path, e.into());
    w.write_record(["step", "vertex", "kind"]).map_err(io)?;
    for (i, &v) in trace.iter().enumerate() {
        let kind = match g.vertices[v].kind {
            crate::graph::VertexKind::Jacobian => "jacobian",
            crate::graph::VertexKind::Product => "product",
        };
        w.write_record([(i + 1).to_string(), v.to_string(), kind.to_string()]).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::io(&path, std::io::Error::other(e.to_string())))?;
    write_file(&path, &bytes)?;
    Ok(stats)
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub items: Vec<CheckItem>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|c| c.pass)
    }

    fn push(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.items.push(CheckItem {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.items {
            writeln!(f, "[{}] {}: {}", if c.pass { "pass" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Stationarity and detailed balance of the walk on `g`.
fn stationarity(g: &WeightedDigraph) -> (bool, bool) {
    let (h, _) = drop_sinks(g);
    let m = TransitionMatrix::new(&h);
    let phi = stationary_closed_form(&h);
    (is_stationary(&m, &phi), detailed_balance_failures(&m, &phi).is_empty())
}

fn structure_checks(r: &mut VerifyReport, g: &WeightedDigraph, label: &str) {
    let sc = g.is_strongly_connected();
    let period = if sc { g.period() } else { 0 };
    r.push(
        &format!("{label} connected and aperiodic"),
        sc && period == 1,
        format!("strongly connected: {sc}, period {period}"),
    );
    let (st, db) = stationarity(g);
    r.push(&format!("{label} stationarity"), st && db, format!("Mφ = φ: {st}, detailed balance: {db}"));
}

/// The invariant suite on a freshly built graph.
pub fn cmd_verify(p: u64, cfg: &RunConfig) -> Result<VerifyReport> {
    parse_primes(&p.to_string())?;
    let g = build_graph(p, None)?;
    Ok(verify_graph(&g, cfg))
}

pub fn verify_graph(g: &SuperspecialGraph, cfg: &RunConfig) -> VerifyReport {
    let mut r = VerifyReport::default();
    let ow = out_weight_failures(g);
    r.push("out-weights sum to 15", ow.is_empty(), format!("{} vertices fail", ow.len()));
    let full = g.digraph();
    let rf = ratio_failures(&full);
    r.push("ratio principle", rf.is_empty(), format!("{} ordered pairs fail", rf.len()));
    let c = census(g);
    let detail = if c.all_match() {
        "every type matches".to_string()
    } else {
        c.mismatches()
            .iter()
            .map(|m| format!("{}: {} vs {}", m.ra_type, m.observed, m.expected))
            .collect::<Vec<_>>()
            .join(", ")
    };
    r.push("census", c.all_match(), detail);
    r.push(
        "Richelot identity",
        g.stats.identity_failures == 0,
        format!("{} of {} fail", g.stats.identity_failures, g.stats.identity_checks),
    );
    r.push(
        "dual round trips",
        g.stats.dual_failures == 0,
        format!("{} of {} fail", g.stats.dual_failures, g.stats.dual_checks),
    );
    let cd = classifier_disagreements(g);
    r.push("Bolza type agrees with Möbius stabilizer", cd.is_empty(), format!("{} disagree", cd.len()));
    // product-neighbour counts may change for particular p, so they are reported only
    let kt = product_neighbour_discrepancies(g);
    r.push(
        "product-neighbour counts (informational)",
        true,
        format!("{} Jacobians differ from the generic count", kt.len()),
    );
    structure_checks(&mut r, &full, "Γ₂");
    let (j, _) = subgraph(g, Subgraph::Jacobian);
    let (e, _) = subgraph(g, Subgraph::Product);
    structure_checks(&mut r, &j, "Jacobian subgraph");
    structure_checks(&mut r, &e, "product subgraph");
    let (dg, dj) = (diameter(&full), diameter(&j));
    let ok = matches!((dg, dj), (Some(a), Some(b)) if a <= b + 2 && b <= 2 * a);
    r.push("diameter inequalities", ok, format!("d(G) = {dg:?}, d(J) = {dj:?}"));
    if cfg.extended_checks {
        let t = dual_transport_check(g);
        r.push(
            "per-edge dual transport",
            t.failures.is_empty(),
            format!("{} of {} edges fail", t.failures.len(), t.checked),
        );
    }
    r
}

/// Structural checks on a graph file: schema, weights, ratio principle,
/// stationarity and connectivity.
pub fn verify_file(path: &Path) -> Result<VerifyReport> {
    let file = GraphFile::read_json(path)?;
    let g = file.digraph();
    let mut r = VerifyReport::default();
    let bad: Vec<usize> = g.out_degrees().iter().enumerate().filter(|(_, &d)| d != 15).map(|(v, _)| v).collect();
    r.push("out-weights sum to 15", bad.is_empty(), format!("{} vertices fail", bad.len()));
    let rf = ratio_failures(&g);
    r.push("ratio principle", rf.is_empty(), format!("{} ordered pairs fail", rf.len()));
    if bad.is_empty() {
        structure_checks(&mut r, &g, "Γ₂");
    }
    Ok(r)
}
