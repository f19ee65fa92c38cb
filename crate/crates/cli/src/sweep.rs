//! Generator counts across a family of rings.

use pigraph_core::edgeideal::{zpm_mu, zpm_parameters};
use pigraph_core::ring::{is_prime, prime_ideals_with_cap};
use pigraph_core::{count_generators, EdgeIdealModel, MonomialIdeal, RingSpec, SplitGraph};

use crate::report::{Count, SweepReport, SweepRow};
use crate::{Caps, CliError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `Z_{p^m}` with `P = (p)`.
    Zpm {
        primes: Vec<u64>,
        exponents: Vec<u32>,
    },
    /// `Z_n` for `from ≤ n ≤ to`, every prime ideal.
    Zn { from: u64, to: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub family: Family,
    pub max_power: u32,
    pub oracle: bool,
    pub caps: Caps,
}

pub fn sweep(cfg: &SweepConfig) -> Result<SweepReport, CliError> {
    if cfg.max_power == 0 {
        return Err(CliError::Usage("--max-power must be at least 1".into()));
    }
    let mut rows = Vec::new();
    let family = match &cfg.family {
        Family::Zpm { primes, exponents } => {
            for &p in primes {
                if !is_prime(p) {
                    return Err(CliError::Usage(format!("{p} is not prime")));
                }
                for &m in exponents {
                    if m < 2 {
                        return Err(CliError::Usage(format!("exponent {m} must be at least 2")));
                    }
                    let n = p
                        .checked_pow(m)
                        .ok_or_else(|| CliError::Usage(format!("{p}^{m} overflows")))?;
                    rows.extend(ring_rows(n, Some((p, m)), cfg)?);
                }
            }
            "zpm"
        }
        Family::Zn { from, to } => {
            if *from < 2 || from > to {
                return Err(CliError::Usage(format!("bad range {from}..={to}")));
            }
            for n in *from..=*to {
                rows.extend(ring_rows(n, prime_power(n), cfg)?);
            }
            "zn"
        }
    };
    let passed = rows.iter().all(|r| r.ok);
    Ok(SweepReport {
        family: family.to_string(),
        max_power: cfg.max_power,
        rows,
        passed,
    })
}

/// `(p, m)` with `n = p^m` and `m ≥ 2`.
fn prime_power(n: u64) -> Option<(u64, u32)> {
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut rest = n;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1 && m >= 2).then_some((p, m))
}

fn ring_rows(
    n: u64,
    zpm: Option<(u64, u32)>,
    cfg: &SweepConfig,
) -> Result<Vec<SweepRow>, CliError> {
    let ring = RingSpec::cyclic(n)?;
    ring.check_cap(cfg.caps.ring)?;
    let mut rows = Vec::new();
    for prime in prime_ideals_with_cap(&ring, cfg.caps.ring)? {
        let graph = SplitGraph::from_prime(&ring, &prime)?;
        let model = EdgeIdealModel::from_graph(&graph);
        let (a, b) = (model.a(), model.b());
        let mu: Vec<Count> = (1..=cfg.max_power as u64)
            .map(|k| Count(count_generators(a as u64, b as u64, k)))
            .collect();

        let mut error = None;
        let mut ok = true;
        let oracle = if cfg.oracle {
            match oracle_counts(&model, cfg.max_power, cfg.caps.gens) {
                Ok(o) => {
                    ok &= o == mu;
                    Some(o)
                }
                Err(e) => {
                    error = Some(e.to_string());
                    ok = false;
                    None
                }
            }
        } else {
            None
        };

        let zpm_mu = match zpm {
            Some((p, m)) => match (zpm_parameters(p, m), zpm_mu(p, m)) {
                (Ok(params), Ok(v)) => {
                    ok &= params == (a as u64, b as u64) && mu[0].0 == v;
                    Some(Count(v))
                }
                (Err(e), _) | (_, Err(e)) => {
                    error.get_or_insert(e.to_string());
                    ok = false;
                    None
                }
            },
            None => None,
        };

        rows.push(SweepRow {
            ring: ring.to_string(),
            prime: prime.to_string(),
            a,
            b,
            q: prime.quotient_order(),
            mu,
            oracle,
            zpm_mu,
            error,
            ok,
        });
    }
    Ok(rows)
}

fn oracle_counts(
    model: &EdgeIdealModel,
    max_power: u32,
    cap: usize,
) -> Result<Vec<Count>, CliError> {
    let (a, b) = (model.a(), model.b());
    let mut power = MonomialIdeal::unit(a, b);
    let mut counts = Vec::new();
    for _ in 0..max_power {
        power = power.product_with_cap(model.ideal(), cap)?;
        counts.push(Count::from(power.len()));
    }
    Ok(counts)
}
