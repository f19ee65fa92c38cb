//! The ring → graph → edge ideal → powers pipeline.

use std::collections::BTreeSet;

use pigraph_core::edgeideal::{
    closed_form_generators_with_cap, count_generators, primary_decomposition, GeneratorPattern,
};
use pigraph_core::polymatroid::{betti_from_certificate, is_polymatroidal_with_cap};
use pigraph_core::ring::prime_ideals_with_cap;
use pigraph_core::{
    linear_quotients, EdgeIdealModel, MonomialIdeal, PolymatroidError, PrimeIdeal, RingSpec,
    SplitGraph,
};

use crate::report::{
    AnalysisReport, BettiRow, CertificateReport, Count, CoverReport, DecompositionReport,
    IdealAnalysis, PowerChecks, PowerReport, RingStructure,
};
use crate::{split_top_level, AnalysisConfig, Caps, Checks, CliError, PrimeSelector, Target};

/// Runs every enabled check. Input problems (bad ring string, non-prime
/// selector) are errors; failed checks and cap overflows during checking are
/// recorded in the report and make `passed` false.
pub fn analyze(cfg: &AnalysisConfig) -> Result<AnalysisReport, CliError> {
    let (input, ideals) = match &cfg.target {
        Target::Ring { spec, selector } => {
            let ring: RingSpec = spec.parse()?;
            ring.check_cap(cfg.caps.ring)?;
            let primes = select_primes(&ring, selector.as_ref(), cfg.caps.ring)?;
            let mut ideals = Vec::with_capacity(primes.len());
            for p in &primes {
                let g = SplitGraph::from_prime(&ring, p)?;
                ideals.push(analyze_graph(&g, Some((&ring, p)), cfg));
            }
            (ring.to_string(), ideals)
        }
        Target::Abstract { a, b } => {
            let g = SplitGraph::abstract_split(*a, *b)?;
            (
                format!("K_{a} v co-K_{b}"),
                vec![analyze_graph(&g, None, cfg)],
            )
        }
    };
    let passed = ideals.iter().all(|i| i.passed);
    Ok(AnalysisReport {
        input,
        max_power: cfg.max_power,
        checks: cfg.checks.names(),
        ideals,
        passed,
    })
}

/// The primes named by `selector`, or every prime ideal of `ring`.
pub fn select_primes(
    ring: &RingSpec,
    selector: Option<&PrimeSelector>,
    cap: u64,
) -> Result<Vec<PrimeIdeal>, CliError> {
    match selector {
        None => Ok(prime_ideals_with_cap(ring, cap)?),
        Some(PrimeSelector::Generator(text)) => {
            let g = ring.parse_element(text)?;
            Ok(vec![PrimeIdeal::generated_by_with_cap(ring, &g, cap)?])
        }
        Some(PrimeSelector::Members(text)) => {
            let members = split_top_level(text)
                .into_iter()
                .map(|t| ring.parse_element(t))
                .collect::<Result<BTreeSet<_>, _>>()?;
            Ok(vec![PrimeIdeal::from_members_with_cap(ring, members, cap)?])
        }
    }
}

fn ring_structure(g: &SplitGraph, ring: &RingSpec, p: &PrimeIdeal) -> RingStructure {
    let (a, b) = (g.a() as u64, g.b() as u64);
    let q = p.quotient_order();
    let order_factors = ring.order() == p.size() * q;
    let b_formula = b == (a + 1) * (q - 1);
    let b_at_least_two = (a >= 1).then_some(b >= 2);
    let non_adjacent_pair = if a >= 1 {
        g.non_adjacent_pair()
            .map(|(i, j)| (g.vertices()[i].to_string(), g.vertices()[j].to_string()))
    } else {
        None
    };
    let split_verified = g.verify_split().is_ok();
    let passed = order_factors
        && b_formula
        && b_at_least_two.unwrap_or(true)
        && (a == 0 || non_adjacent_pair.is_some())
        && split_verified;
    RingStructure {
        ring_order: ring.order(),
        prime_size: p.size(),
        order_factors,
        b_formula,
        b_at_least_two,
        non_adjacent_pair,
        split_verified,
        passed,
    }
}

fn analyze_graph(
    g: &SplitGraph,
    ring: Option<(&RingSpec, &PrimeIdeal)>,
    cfg: &AnalysisConfig,
) -> IdealAnalysis {
    let (a, b) = (g.a(), g.b());
    let checks = cfg.checks;
    let mut errors = Vec::new();

    let ring_structure = ring.map(|(r, p)| ring_structure(g, r, p));
    let covers = if checks.covers && a >= 1 {
        cover_report(g, cfg.caps, &mut errors)
    } else {
        None
    };
    let model = EdgeIdealModel::from_graph(g);
    let decomposition = if checks.primary && a >= 1 {
        decomposition_report(&model, &mut errors)
    } else {
        None
    };
    let powers = power_reports(&model, decomposition.as_ref(), checks, cfg, &mut errors);

    let passed = errors.is_empty()
        && ring_structure.as_ref().is_none_or(|r| r.passed)
        && covers.as_ref().is_none_or(|c| c.bruteforce_equal)
        && decomposition
            .as_ref()
            .is_none_or(|d| d.verified && d.height_law)
        && powers.iter().all(|p| p.checks.passed());

    IdealAnalysis {
        ring: ring.map(|(r, _)| r.to_string()),
        prime: ring.map(|(_, p)| p.to_string()),
        members: ring.map(|(_, p)| p.members().iter().map(ToString::to_string).collect()),
        quotient_order: ring.map(|(_, p)| p.quotient_order()),
        a,
        b,
        clique_number: g.clique_number(),
        ring_structure,
        covers,
        decomposition,
        powers,
        errors,
        passed,
    }
}

fn cover_report(g: &SplitGraph, caps: Caps, errors: &mut Vec<String>) -> Option<CoverReport> {
    let closed = g.minimal_vertex_covers_closed_form();
    match g.minimal_vertex_covers_bruteforce_with_cap(caps.vertices) {
        Ok(brute) => {
            let equal = closed.iter().cloned().collect::<BTreeSet<_>>()
                == brute.into_iter().collect::<BTreeSet<_>>();
            Some(CoverReport {
                closed_form: closed.iter().map(|c| g.label_set(c)).collect(),
                bruteforce_equal: equal,
            })
        }
        Err(e) => {
            errors.push(format!("vertex covers: {e}"));
            None
        }
    }
}

fn decomposition_report(
    model: &EdgeIdealModel,
    errors: &mut Vec<String>,
) -> Option<DecompositionReport> {
    let (a, b) = (model.a(), model.b());
    let d = match primary_decomposition(a, b) {
        Ok(d) => d,
        Err(e) => {
            errors.push(format!("primary decomposition: {e}"));
            return None;
        }
    };
    let verified = match d.verify(model) {
        Ok(v) => v,
        Err(e) => {
            errors.push(format!("primary decomposition: {e}"));
            return None;
        }
    };
    let hd = d.height_and_dim();
    Some(DecompositionReport {
        components: d
            .components()
            .iter()
            .map(|c| c.iter().map(ToString::to_string).collect())
            .collect(),
        verified,
        height: hd.height,
        dim: hd.dim,
        unmixed: hd.unmixed,
        height_law: (hd.height, hd.dim, hd.unmixed) == (a, b, b == 1),
    })
}

fn power_reports(
    model: &EdgeIdealModel,
    decomposition: Option<&DecompositionReport>,
    checks: Checks,
    cfg: &AnalysisConfig,
    errors: &mut Vec<String>,
) -> Vec<PowerReport> {
    let (a, b) = (model.a(), model.b());
    let mut reports = Vec::new();
    let mut oracle: Option<MonomialIdeal> = checks.oracle.then(|| MonomialIdeal::unit(a, b));

    for n in 1..=cfg.max_power {
        let closed = match closed_form_generators_with_cap(a, b, n, cfg.caps.gens) {
            Ok(c) => c,
            Err(e) => {
                errors.push(format!("closed form at n = {n}: {e}"));
                break;
            }
        };
        if let Some(prev) = oracle.take() {
            match prev.product_with_cap(model.ideal(), cfg.caps.gens) {
                Ok(next) => oracle = Some(next),
                Err(e) => errors.push(format!("power oracle at n = {n}: {e}")),
            }
        }

        let mu = count_generators(a as u64, b as u64, n as u64);
        let count_equal = Count::from(closed.len()) == Count(mu.clone());
        let degree_law = closed.gens().iter().all(|m| GeneratorPattern::admits(m, n));
        let oracle_equal = oracle.as_ref().map(|o| *o == closed);
        let primary_decomp = if n == 1 {
            decomposition.map(|d| d.verified)
        } else {
            None
        };

        let nonzero = !closed.is_zero();
        let polymatroidal = if checks.polymatroid && nonzero {
            match is_polymatroidal_with_cap(&closed, cfg.caps.exchange) {
                Ok(r) => Some(r.holds),
                Err(e) => {
                    errors.push(format!("exchange check at n = {n}: {e}"));
                    None
                }
            }
        } else {
            None
        };

        let mut certificate = None;
        let linear = if checks.linquot && nonzero {
            match linear_quotients(&closed) {
                Ok(c) => {
                    certificate = Some(CertificateReport {
                        order: c.order.iter().map(ToString::to_string).collect(),
                        r: c.colon_variable_counts.clone(),
                        betti: betti_from_certificate(&c, 2 * n)
                            .into_iter()
                            .map(|e| BettiRow {
                                i: e.i,
                                shift: e.shift,
                                beta: Count(e.beta),
                            })
                            .collect(),
                        reg: 2 * n,
                        polymatroidal,
                    });
                    Some(true)
                }
                Err(e @ PolymatroidError::NotLinearQuotients { .. }) => {
                    errors.push(format!("n = {n}: {e}"));
                    Some(false)
                }
                Err(e) => {
                    errors.push(format!("linear quotients at n = {n}: {e}"));
                    None
                }
            }
        } else {
            None
        };

        reports.push(PowerReport {
            a,
            b,
            n,
            mu_closed_form: Count(mu),
            mu_oracle: oracle.as_ref().map(|o| Count::from(o.len())),
            generators: closed.gen_strings(),
            checks: PowerChecks {
                oracle_equal,
                count_equal,
                degree_law,
                primary_decomp,
                polymatroidal,
                linear_quotients: linear,
            },
            certificate,
        });
    }
    reports
}
