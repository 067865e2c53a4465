use std::path::Path;

use serde::Serialize;
use speclap::drawing::{self, SignedLayout};
use speclap::kway::{self, ClusterOptions, Mode, StopReason};
use speclap::laplacian::{self, LaplacianKind};
use speclap::{eigen, ncut2};

use crate::args::{BalanceArgs, ClusterArgs, DrawArgs};
use crate::edgelist::parse_graph;
use crate::error::{CliError, Result};

#[derive(Debug, Serialize)]
pub struct DrawReport {
    pub nodes: usize,
    pub dimension: usize,
    pub signed: bool,
    pub energy: f64,
    pub eigenvalues: Vec<f64>,
    pub files: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct TwoWayReport {
    pub assignments: Vec<usize>,
    pub ncut: f64,
    pub residual: f64,
}

#[derive(Debug, Serialize)]
pub struct ClusterReport {
    pub k: usize,
    pub mode: &'static str,
    pub assignments: Vec<usize>,
    pub objective: f64,
    pub relaxation_value: f64,
    pub iterations: usize,
    pub residual: f64,
    pub stop: &'static str,
    pub deformed_init: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ncut2: Option<TwoWayReport>,
}

#[derive(Debug, Serialize)]
pub struct BalanceReport {
    pub balanced: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bipartition: Option<Vec<i8>>,
    pub smallest_signed_laplacian_eigenvalue: f64,
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

pub fn draw(args: &DrawArgs, tol: f64) -> Result<DrawReport> {
    let g = parse_graph(&args.file)?;
    let d = if args.signed {
        let layout = if args.bipartite {
            SignedLayout::Bipartite
        } else {
            SignedLayout::Nonbipartite
        };
        drawing::signed_drawing(&g, args.dim, layout, tol)?
    } else {
        drawing::spectral_drawing(&g, args.dim, tol)?
    };
    let mut files = Vec::new();
    if let Some(path) = &args.svg {
        let written = drawing::emit_svg(&d.matrix, &g, path).map_err(|e| match e {
            speclap::Error::Io(source) => CliError::Io {
                path: path.display().to_string(),
                source,
            },
            other => other.into(),
        })?;
        files.extend(written.iter().map(|p| p.display().to_string()));
    }
    if let Some(path) = &args.csv {
        write_file(path, &d.matrix.to_csv())?;
        files.push(path.display().to_string());
    }
    Ok(DrawReport {
        nodes: g.node_count(),
        dimension: args.dim,
        signed: d.signed,
        energy: d.energy,
        eigenvalues: d.eigenvalues,
        files,
    })
}

fn stop_name(s: StopReason) -> &'static str {
    match s {
        StopReason::Repeated => "repeated",
        StopReason::Stalled => "stalled",
        StopReason::MaxIters => "max-iters",
    }
}

pub fn cluster(args: &ClusterArgs, tol: f64) -> Result<ClusterReport> {
    let g = parse_graph(&args.file)?;
    let mode = Mode::from(args.mode);
    let opts = ClusterOptions {
        rescale: args.rescale.into(),
        init: args.init.into(),
        flip: !args.no_flip,
        podr_scaling: args.podr.into(),
        max_iters: args.max_iters.max(1),
        greedy_first_row: (args.first_row - 1) as usize,
        eigen_tol: tol,
    };
    let r = kway::cluster(&g, args.k, mode, &opts)?;
    let ncut2 = if args.k == 2 && mode == Mode::Ncut {
        let t = ncut2::ncut2(&g, tol)?;
        Some(TwoWayReport {
            assignments: t
                .a
                .mask()
                .iter()
                .map(|&inside| if inside { 1 } else { 2 })
                .collect(),
            ncut: t.ncut,
            residual: t.residual,
        })
    } else {
        None
    };
    let report = ClusterReport {
        k: args.k,
        mode: mode.name(),
        assignments: r.partition.labels().iter().map(|l| l + 1).collect(),
        objective: r.objective,
        relaxation_value: r.z.relaxation_value(),
        iterations: r.iterations,
        residual: r.residual,
        stop: stop_name(r.stop),
        deformed_init: r.deformed_init,
        ncut2,
    };
    if let Some(path) = &args.json {
        write_file(path, &to_json(&report))?;
    }
    Ok(report)
}

pub fn balance(args: &BalanceArgs, tol: f64) -> Result<BalanceReport> {
    let g = parse_graph(&args.file)?;
    let report = laplacian::is_balanced(&g)?;
    let lbar = laplacian::laplacian(&g, LaplacianKind::SignedUnnormalized)?;
    let values = eigen::sym_eigen(&lbar.matrix, tol)?.values;
    Ok(BalanceReport {
        balanced: report.balanced,
        bipartition: report.bipartition,
        smallest_signed_laplacian_eigenvalue: values[0],
    })
}

/// Runs a parsed command and returns its JSON report.
pub fn run(cmd: &crate::args::Command, tol: f64) -> Result<String> {
    use crate::args::Command;
    Ok(match cmd {
        Command::Draw(a) => to_json(&draw(a, tol)?),
        Command::Cluster(a) => to_json(&cluster(a, tol)?),
        Command::Balance(a) => to_json(&balance(a, tol)?),
    })
}
