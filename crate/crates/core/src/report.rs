//! Aligned-column text rendering for terminal output.

use std::fmt::Write;

use crate::analysis::{AgreementReport, MonteCarloReport, ReversalReport};
use crate::ranking::RankingResult;

fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width = vec![0; cols];
    for r in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |r: &[String]| {
        let cells: Vec<String> = r
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    };
    line(header);
    for r in rows {
        line(r);
    }
    out
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// One block per method: position, alternative and score, best first.
pub fn render_rankings(results: &[RankingResult]) -> String {
    let mut out = String::new();
    for (i, r) in results.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "method: {}", r.method);
        let rows: Vec<Vec<String>> = r
            .order
            .iter()
            .enumerate()
            .map(|(k, label)| {
                vec![
                    (k + 1).to_string(),
                    label.clone(),
                    format!("{:.6}", r.score_of(label).unwrap_or(f64::NAN)),
                ]
            })
            .collect();
        out.push_str(&table(&strings(&["rank", "alternative", "score"]), &rows));
        for t in &r.ties {
            let _ = writeln!(out, "tie: {}", t.join(", "));
        }
    }
    out
}

/// One row per method with its full order.
pub fn render_orders(results: &[RankingResult]) -> String {
    let n = results.first().map_or(0, |r| r.order.len());
    let mut header = strings(&["method"]);
    header.extend((1..=n).map(|k| format!("#{k}")));
    let rows: Vec<Vec<String>> = results
        .iter()
        .map(|r| {
            let mut row = vec![r.method.to_string()];
            row.extend(r.order.iter().cloned());
            row
        })
        .collect();
    table(&header, &rows)
}

pub fn render_agreement(rep: &AgreementReport) -> String {
    let mut out = render_orders(&rep.rankings);
    out.push_str("\nkendall tau\n");
    let mut header = vec![String::new()];
    header.extend(rep.methods.iter().map(ToString::to_string));
    let rows: Vec<Vec<String>> = rep
        .methods
        .iter()
        .zip(&rep.tau)
        .map(|(m, row)| {
            let mut r = vec![m.to_string()];
            r.extend(row.iter().map(|t| format!("{t:.3}")));
            r
        })
        .collect();
    out.push_str(&table(&header, &rows));
    out
}

pub fn render_reversals(reports: &[ReversalReport]) -> String {
    let header = strings(&["method", "reversed", "flips", "expected", "observed"]);
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let flips = if r.flips.is_empty() {
                "-".to_string()
            } else {
                r.flips
                    .iter()
                    .map(|(a, b)| format!("{a}>{b}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            vec![
                r.method.to_string(),
                r.reversed.to_string(),
                flips,
                r.expected_order.join(" "),
                r.reduced_order.join(" "),
            ]
        })
        .collect();
    table(&header, &rows)
}

pub fn render_monte_carlo(rep: &MonteCarloReport) -> String {
    let mut out = format!(
        "trials: {}  seed: {}  alternatives per trial: {}\n",
        rep.trials, rep.seed, rep.alternatives_per_trial
    );
    let header = strings(&["method", "reversals", "frequency", "flipped pairs"]);
    let rows: Vec<Vec<String>> = rep
        .methods
        .iter()
        .map(|m| {
            vec![
                m.method.to_string(),
                m.reversals.to_string(),
                format!("{:.4}", m.frequency),
                m.total_flips.to_string(),
            ]
        })
        .collect();
    out.push_str(&table(&header, &rows));
    out
}
