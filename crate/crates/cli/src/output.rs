use msaw_core::report;
use msaw_core::{AgreementReport, MonteCarloReport, RankingResult, ReversalReport};
use serde::Serialize;

use crate::config::{CliResult, OutputFormat};

fn json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(msaw_core::Error::from)?;
    s.push('\n');
    Ok(s)
}

fn csv(header: &str, rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let quote = |c: &String| {
        if c.contains([',', '"', '\n']) {
            format!("\"{}\"", c.replace('"', "\"\""))
        } else {
            c.clone()
        }
    };
    let mut out = format!("{header}\n");
    for r in rows {
        out.push_str(&r.iter().map(quote).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct Rankings<'a> {
    results: &'a [RankingResult],
}

pub fn rankings(results: &[RankingResult], format: OutputFormat) -> CliResult<String> {
    Ok(match format {
        OutputFormat::Text => report::render_rankings(results),
        OutputFormat::Json => json(&Rankings { results })?,
        OutputFormat::Csv => csv(
            "method,rank,alternative,score",
            results.iter().flat_map(|r| {
                r.order.iter().enumerate().map(move |(k, label)| {
                    vec![
                        r.method.to_string(),
                        (k + 1).to_string(),
                        label.clone(),
                        format!("{}", r.score_of(label).unwrap_or(f64::NAN)),
                    ]
                })
            }),
        ),
    })
}

pub fn agreement(rep: &AgreementReport, format: OutputFormat) -> CliResult<String> {
    Ok(match format {
        OutputFormat::Text => report::render_agreement(rep),
        OutputFormat::Json => json(rep)?,
        OutputFormat::Csv => csv(
            "method_a,method_b,kendall_tau",
            rep.methods.iter().zip(&rep.tau).flat_map(|(a, row)| {
                rep.methods
                    .iter()
                    .zip(row)
                    .map(move |(b, t)| vec![a.to_string(), b.to_string(), format!("{t}")])
            }),
        ),
    })
}

#[derive(Serialize)]
struct Reversals<'a> {
    reports: &'a [ReversalReport],
}

pub fn reversals(reports: &[ReversalReport], format: OutputFormat) -> CliResult<String> {
    Ok(match format {
        OutputFormat::Text => report::render_reversals(reports),
        OutputFormat::Json => json(&Reversals { reports })?,
        OutputFormat::Csv => csv(
            "method,reversed,flips,expected_order,observed_order",
            reports.iter().map(|r| {
                vec![
                    r.method.to_string(),
                    r.reversed.to_string(),
                    r.flips
                        .iter()
                        .map(|(a, b)| format!("{a}>{b}"))
                        .collect::<Vec<_>>()
                        .join(" "),
                    r.expected_order.join(" "),
                    r.reduced_order.join(" "),
                ]
            }),
        ),
    })
}

pub fn monte_carlo(rep: &MonteCarloReport, format: OutputFormat) -> CliResult<String> {
    Ok(match format {
        OutputFormat::Text => report::render_monte_carlo(rep),
        OutputFormat::Json => json(rep)?,
        OutputFormat::Csv => csv(
            "method,trials,reversals,frequency,total_flips",
            rep.methods.iter().map(|m| {
                vec![
                    m.method.to_string(),
                    m.trials.to_string(),
                    m.reversals.to_string(),
                    format!("{}", m.frequency),
                    m.total_flips.to_string(),
                ]
            }),
        ),
    })
}

