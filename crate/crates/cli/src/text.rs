//! Human-readable rendering of reports.

use std::fmt::Write;

use crate::report::{AnalysisReport, Count, IdealAnalysis, SweepReport, Table1Report};

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn opt(c: Option<bool>) -> &'static str {
    c.map_or("-", mark)
}

fn join(counts: &[Count]) -> String {
    counts
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" / ")
}

pub fn analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "input: {}  max power: {}  checks: {}",
        r.input,
        r.max_power,
        r.checks.join(",")
    );
    for ideal in &r.ideals {
        out.push('\n');
        ideal_block(&mut out, ideal);
    }
    let _ = writeln!(out, "\nresult: {}", if r.passed { "PASS" } else { "FAIL" });
    out
}

fn ideal_block(out: &mut String, i: &IdealAnalysis) {
    if let (Some(ring), Some(prime)) = (&i.ring, &i.prime) {
        let _ = writeln!(
            out,
            "{ring}  P = {prime}  |R/P| = {}  members: {}",
            i.quotient_order.unwrap_or(0),
            i.members.as_deref().unwrap_or_default().join(", ")
        );
    }
    let _ = writeln!(
        out,
        "graph: K_{} v co-K_{}  clique number {}",
        i.a, i.b, i.clique_number
    );
    if let Some(s) = &i.ring_structure {
        let pair = s
            .non_adjacent_pair
            .as_ref()
            .map_or("-".to_string(), |(x, y)| format!("{x}, {y}"));
        let _ = writeln!(
            out,
            "structure: |R| = {} |P| = {}  order {}  b formula {}  b >= 2 {}  non-adjacent pair {pair}  split {}",
            s.ring_order,
            s.prime_size,
            mark(s.order_factors),
            mark(s.b_formula),
            opt(s.b_at_least_two),
            mark(s.split_verified),
        );
    }
    if let Some(c) = &i.covers {
        let sets: Vec<String> = c
            .closed_form
            .iter()
            .map(|s| format!("{{{}}}", s.join(", ")))
            .collect();
        let _ = writeln!(
            out,
            "minimal vertex covers ({}): {}",
            mark(c.bruteforce_equal),
            sets.join(" ")
        );
    }
    if let Some(d) = &i.decomposition {
        let comps: Vec<String> = d
            .components
            .iter()
            .map(|c| format!("({})", c.join(",")))
            .collect();
        let _ = writeln!(
            out,
            "primary decomposition ({}): {}\nheight {}  dim {}  unmixed {}  ({})",
            mark(d.verified),
            comps.join(" ∩ "),
            d.height,
            d.dim,
            d.unmixed,
            mark(d.height_law),
        );
    }
    let _ = writeln!(
        out,
        "{:>3}  {:>12}  {:>12}  {:>6}  {:>6}  {:>6}  {:>6}  {:>5}  betti",
        "n", "mu(closed)", "mu(oracle)", "count", "degree", "exch", "linq", "reg"
    );
    for p in &i.powers {
        let betti = p.certificate.as_ref().map_or("-".to_string(), |c| {
            c.betti
                .iter()
                .map(|e| e.beta.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        });
        let _ = writeln!(
            out,
            "{:>3}  {:>12}  {:>12}  {:>6}  {:>6}  {:>6}  {:>6}  {:>5}  {betti}",
            p.n,
            p.mu_closed_form.to_string(),
            p.mu_oracle
                .as_ref()
                .map_or("-".to_string(), ToString::to_string),
            mark(p.checks.count_equal && p.checks.oracle_equal.unwrap_or(true)),
            mark(p.checks.degree_law),
            opt(p.checks.polymatroidal),
            opt(p.checks.linear_quotients),
            p.certificate
                .as_ref()
                .map_or("-".to_string(), |c| c.reg.to_string()),
        );
    }
    for e in &i.errors {
        let _ = writeln!(out, "error: {e}");
    }
}

pub fn table1(r: &Table1Report) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<6} {:<4} {:>3} {:>3}  {:<18} {:<18} {:<18}",
        "ring", "P", "a", "b", "published", "closed form", "oracle"
    );
    for row in &r.rows {
        let published: Vec<String> = row.published.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "{:<6} {:<4} {:>3} {:>3}  {:<18} {:<18} {:<18}",
            row.ring,
            row.prime,
            row.a,
            row.b,
            published.join(" / "),
            join(&row.closed_form),
            join(&row.oracle),
        );
    }
    for m in &r.mismatches {
        let _ = writeln!(
            out,
            "mismatch: {} n = {} {}: expected {}, got {}",
            m.ring, m.n, m.source, m.expected, m.got
        );
    }
    let _ = writeln!(out, "{}", r.status);
    out
}

pub fn sweep(r: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<8} {:<6} {:>5} {:>6} {:>4}  {:<24} {:<24} {:<8} status",
        "ring", "P", "a", "b", "q", "mu", "oracle", "zpm"
    );
    for row in &r.rows {
        let _ = writeln!(
            out,
            "{:<8} {:<6} {:>5} {:>6} {:>4}  {:<24} {:<24} {:<8} {}",
            row.ring,
            row.prime,
            row.a,
            row.b,
            row.q,
            join(&row.mu),
            row.oracle.as_deref().map_or("-".to_string(), join),
            row.zpm_mu
                .as_ref()
                .map_or("-".to_string(), ToString::to_string),
            mark(row.ok),
        );
        if let Some(e) = &row.error {
            let _ = writeln!(out, "  error: {e}");
        }
    }
    let _ = writeln!(out, "{}", if r.passed { "PASS" } else { "FAIL" });
    out
}
