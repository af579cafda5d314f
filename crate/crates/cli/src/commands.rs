use std::collections::BTreeMap;

use clap::ValueEnum;
use num_bigint::BigInt;
use rayon::prelude::*;

use genus_forge::exact_arith::ExactInt;
use genus_forge::genus_distribution::{dist_via_hz, dist_via_stirling, dist_via_theorem, GenusDistribution};
use genus_forge::montecarlo::{run_mc_with, Boundary, McConfig, McReport};
use genus_forge::oracle::enumerate_census;
use genus_forge::Error;

use crate::output::{decimal, rat_string, Cell, Table};

/// Why a command did not succeed; maps onto the process exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad parameters or a request past a configured limit (exit 2).
    Usage(String),
    /// A check ran and did not hold (exit 1).
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Theorem,
    Stirling,
    Hz,
    Oracle,
    All,
}

impl Method {
    const EXACT: [Method; 4] = [Method::Theorem, Method::Stirling, Method::Hz, Method::Oracle];

    fn name(self) -> &'static str {
        match self {
            Method::Theorem => "theorem",
            Method::Stirling => "stirling",
            Method::Hz => "hz",
            Method::Oracle => "oracle",
            Method::All => "all",
        }
    }
}

fn distribution(n: usize, method: Method, oracle_limit: usize) -> Result<GenusDistribution, Failure> {
    Ok(match method {
        Method::Theorem => dist_via_theorem(n)?,
        Method::Stirling => dist_via_stirling(n)?,
        Method::Hz => dist_via_hz(n)?,
        Method::Oracle => enumerate_census(n, oracle_limit)?.distribution()?,
        Method::All => unreachable!("expanded by the caller"),
    })
}

fn epsilons(n: usize, method: Method, oracle_limit: usize) -> Result<BTreeMap<usize, ExactInt>, Failure> {
    if method == Method::Oracle {
        let census = enumerate_census(n, oracle_limit)?;
        return Ok(census
            .genus_counts()?
            .into_iter()
            .map(|(g, c)| (g, BigInt::from(c)))
            .collect());
    }
    Ok(distribution(n, method, oracle_limit)?.epsilon_counts()?)
}

fn check_oracle_reach(max_n: usize, oracle_limit: usize) -> Result<(), Failure> {
    if max_n > oracle_limit {
        return Err(Failure::Usage(format!(
            "oracle enumeration is capped at n = {oracle_limit} (asked for n = {max_n}); \
             raise --oracle-limit or GENUS_FORGE_ORACLE_LIMIT"
        )));
    }
    Ok(())
}

/// `ε_g(n)` for `n = 1..=n_max`. With [`Method::All`] every exact route
/// is tabulated, the oracle only up to `oracle_limit`, and each row carries
/// whether all routes agree at that `(n, g)`.
pub fn genus_table(n_max: usize, method: Method, oracle_limit: usize) -> Result<(Table, bool), Failure> {
    if method != Method::All {
        if method == Method::Oracle {
            check_oracle_reach(n_max, oracle_limit)?;
        }
        let per_n: Vec<_> = (1..=n_max)
            .into_par_iter()
            .map(|n| epsilons(n, method, oracle_limit))
            .collect::<Result<_, _>>()?;
        let mut table = Table::new(&["n", "g", "epsilon_g"]);
        for (n, eps) in (1..=n_max).zip(per_n) {
            for (g, e) in eps {
                table.push(vec![n.into(), g.into(), Cell::text(e.to_string())]);
            }
        }
        return Ok((table, true));
    }

    let per_n: Vec<Vec<(Method, BTreeMap<usize, ExactInt>)>> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            Method::EXACT
                .iter()
                .filter(|&&m| m != Method::Oracle || n <= oracle_limit)
                .map(|&m| Ok((m, epsilons(n, m, oracle_limit)?)))
                .collect::<Result<Vec<_>, Failure>>()
        })
        .collect::<Result<_, _>>()?;

    let mut table = Table::new(&["n", "g", "method", "epsilon_g", "check"]);
    let mut all_agree = true;
    for (n, routes) in (1..=n_max).zip(per_n) {
        let genera: std::collections::BTreeSet<usize> =
            routes.iter().flat_map(|(_, eps)| eps.keys().copied()).collect();
        for g in genera {
            let values: Vec<Option<&ExactInt>> = routes.iter().map(|(_, eps)| eps.get(&g)).collect();
            let agree = values.windows(2).all(|w| w[0] == w[1]);
            all_agree &= agree;
            let flag = if agree { "agree" } else { "disagree" };
            for ((m, _), v) in routes.iter().zip(values) {
                let shown = v.map(|e| e.to_string()).unwrap_or_else(|| "0".into());
                table.push(vec![
                    n.into(),
                    g.into(),
                    Cell::text(m.name()),
                    Cell::text(shown),
                    Cell::text(flag),
                ]);
            }
        }
    }
    Ok((table, all_agree))
}

/// `P(X_n = ν)` for every `ν` in `1..=n+1`, parity-excluded values included.
pub fn dist(n: usize, method: Method, oracle_limit: usize, digits: Option<usize>) -> Result<Table, Failure> {
    if method == Method::All {
        return Err(Failure::Usage("dist takes a single method".into()));
    }
    if method == Method::Oracle {
        check_oracle_reach(n, oracle_limit)?;
    }
    let d = distribution(n, method, oracle_limit)?;
    let mut cols = vec!["n", "nu", "probability_num", "probability_den"];
    if digits.is_some() {
        cols.push("probability_approx");
    }
    let mut table = Table::new(&cols);
    for (nu, p) in d.iter() {
        let mut row = vec![
            n.into(),
            nu.into(),
            Cell::text(p.numer().to_string()),
            Cell::text(p.denom().to_string()),
        ];
        if let Some(k) = digits {
            row.push(Cell::text(decimal(p, k)));
        }
        table.push(row);
    }
    Ok(table)
}

pub const MC_SIGMA_BAND: f64 = 4.0;

pub fn mc(config: &McConfig, digits: Option<usize>) -> Result<(Table, McReport), Failure> {
    let report = run_mc_with(config)?;
    let mut cols = vec![
        "n",
        "samples",
        "seed",
        "boundary",
        "counts",
        "tv",
        "chi_square",
        "degrees_of_freedom",
        "chi_square_p_value",
        "empirical_mean",
        "exact_mean",
        "mean_z",
        "within_band",
    ];
    if digits.is_some() {
        cols.extend(["tv_approx", "empirical_mean_approx", "exact_mean_approx"]);
    }
    let counts = report
        .counts
        .iter()
        .map(|(nu, c)| format!("{nu}:{c}"))
        .collect::<Vec<_>>()
        .join(" ");
    let boundary = match report.boundary {
        Boundary::Fixed => "fixed",
        Boundary::UniformUnicyclic => "unicyclic",
    };
    let mut row = vec![
        report.n.into(),
        report.samples.into(),
        report.seed.into(),
        Cell::text(boundary),
        Cell::text(counts),
        Cell::text(rat_string(&report.tv_distance)),
        Cell::text(format!("{:.6}", report.chi_square)),
        report.degrees_of_freedom.into(),
        Cell::text(format!("{:.6}", report.chi_square_p_value)),
        Cell::text(rat_string(&report.empirical_mean)),
        Cell::text(rat_string(&report.exact_mean)),
        Cell::text(format!("{:.6}", report.mean_z_score())),
        Cell::text(report.mean_within(MC_SIGMA_BAND).to_string()),
    ];
    if let Some(k) = digits {
        row.push(Cell::text(decimal(&report.tv_distance, k)));
        row.push(Cell::text(decimal(&report.empirical_mean, k)));
        row.push(Cell::text(decimal(&report.exact_mean, k)));
    }
    let mut table = Table::new(&cols);
    table.push(row);
    Ok((table, report))
}
