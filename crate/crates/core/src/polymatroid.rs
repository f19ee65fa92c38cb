//! Exchange-property check, linear-quotients certificates and the Betti
//! numbers they determine.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::edgeideal::{binomial, closed_form_generators, EdgeIdealError};
use crate::monomial::{colon_gens, Monomial, MonomialIdeal, Variable};

/// Largest generator set [`is_polymatroidal`] will check pairwise.
pub const DEFAULT_EXCHANGE_CAP: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolymatroidError {
    #[error("the zero ideal has no generators to check")]
    ZeroIdeal,
    #[error("ideal is not generated in a single degree")]
    MixedDegree,
    #[error("{count} generators exceed the cap of {cap}")]
    CapExceeded { count: usize, cap: usize },
    #[error("no linear quotients in descending revlex order: colon at generator {index} ({generator}) is {colon}")]
    NotLinearQuotients {
        index: usize,
        generator: String,
        colon: String,
    },
    #[error("regularity is only reported for a >= 1 and n >= 1")]
    BadParameters,
    #[error(transparent)]
    EdgeIdeal(#[from] EdgeIdealError),
}

/// A violated exchange: `u_p > v_p` but no `q` with `u_q < v_q` has
/// `z_q u / z_p` in `G(I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeFailure {
    pub u: Monomial,
    pub v: Monomial,
    pub position: Variable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeReport {
    pub holds: bool,
    pub counterexample: Option<ExchangeFailure>,
}

fn require_equigenerated(ideal: &MonomialIdeal) -> Result<u32, PolymatroidError> {
    if ideal.is_zero() {
        return Err(PolymatroidError::ZeroIdeal);
    }
    ideal
        .generating_degree()
        .ok_or(PolymatroidError::MixedDegree)
}

pub fn is_polymatroidal(ideal: &MonomialIdeal) -> Result<ExchangeReport, PolymatroidError> {
    is_polymatroidal_with_cap(ideal, DEFAULT_EXCHANGE_CAP)
}

/// Exhaustive exchange check over all ordered pairs of minimal generators.
/// Returns the first failure found.
pub fn is_polymatroidal_with_cap(
    ideal: &MonomialIdeal,
    cap: usize,
) -> Result<ExchangeReport, PolymatroidError> {
    require_equigenerated(ideal)?;
    let gens = ideal.gens();
    if gens.len() > cap {
        return Err(PolymatroidError::CapExceeded {
            count: gens.len(),
            cap,
        });
    }
    let (a, _) = ideal.widths();
    let members: HashSet<&[u32]> = gens.iter().map(Monomial::exponents).collect();
    let mut scratch: Vec<u32> = Vec::new();

    for u in gens {
        let ue = u.exponents();
        for v in gens {
            let ve = v.exponents();
            for p in 0..ue.len() {
                if ue[p] <= ve[p] {
                    continue;
                }
                scratch.clear();
                scratch.extend_from_slice(ue);
                scratch[p] -= 1;
                let exchanged = (0..ue.len()).filter(|&q| ue[q] < ve[q]).any(|q| {
                    scratch[q] += 1;
                    let hit = members.contains(scratch.as_slice());
                    scratch[q] -= 1;
                    hit
                });
                if !exchanged {
                    return Ok(ExchangeReport {
                        holds: false,
                        counterexample: Some(ExchangeFailure {
                            u: u.clone(),
                            v: v.clone(),
                            position: Variable::from_index(p, a),
                        }),
                    });
                }
            }
        }
    }
    Ok(ExchangeReport {
        holds: true,
        counterexample: None,
    })
}

/// Witness that `u_1, ..., u_m` (descending graded revlex) has linear
/// quotients: each `(u_1..u_{j-1}) : u_j` is generated by `r_j` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearQuotientsCertificate {
    pub order: Vec<Monomial>,
    pub colon_variable_counts: Vec<usize>,
    pub colon_variables: Vec<Vec<Variable>>,
}

pub fn linear_quotients(
    ideal: &MonomialIdeal,
) -> Result<LinearQuotientsCertificate, PolymatroidError> {
    require_equigenerated(ideal)?;
    let (a, b) = ideal.widths();
    let order = ideal.gens().to_vec();
    let mut colon_variables = Vec::with_capacity(order.len());
    let mut quotient = vec![0u32; a + b];
    for (j, u) in order.iter().enumerate() {
        let ue = u.exponents();
        // The colon is variable-generated iff every u_i / gcd(u_i, u_j) is
        // divisible by one of the degree-one quotients; those are then G.
        let mut vars = vec![false; a + b];
        let mut others: Vec<usize> = Vec::new();
        for (i, w) in order[..j].iter().enumerate() {
            for ((q, &we), &e) in quotient.iter_mut().zip(w.exponents()).zip(ue) {
                *q = we.saturating_sub(e);
            }
            if quotient.iter().sum::<u32>() == 1 {
                vars[quotient.iter().position(|&e| e == 1).expect("degree one")] = true;
            } else {
                others.push(i);
            }
        }
        let linear = others.iter().all(|&i| {
            order[i]
                .exponents()
                .iter()
                .zip(ue)
                .enumerate()
                .any(|(k, (&we, &e))| vars[k] && we > e)
        });
        if !linear {
            let colon = MonomialIdeal::from_generators(a, b, colon_gens(&order[..j], u))
                .expect("same widths");
            return Err(PolymatroidError::NotLinearQuotients {
                index: j + 1,
                generator: u.to_string(),
                colon: colon.to_string(),
            });
        }
        colon_variables.push(
            (0..a + b)
                .filter(|&k| vars[k])
                .map(|k| Variable::from_index(k, a))
                .collect(),
        );
    }
    let colon_variable_counts = colon_variables.iter().map(Vec::len).collect();
    Ok(LinearQuotientsCertificate {
        order,
        colon_variable_counts,
        colon_variables,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiEntry {
    pub i: usize,
    pub shift: u32,
    pub beta: BigUint,
}

/// `β_i = Σ_j C(r_j, i)` for `0 ≤ i ≤ max r_j`, each concentrated in degree
/// `gen_degree + i`.
pub fn betti_from_certificate(c: &LinearQuotientsCertificate, gen_degree: u32) -> Vec<BettiEntry> {
    let top = c.colon_variable_counts.iter().copied().max().unwrap_or(0);
    (0..=top)
        .map(|i| BettiEntry {
            i,
            shift: gen_degree + i as u32,
            beta: c
                .colon_variable_counts
                .iter()
                .map(|&r| binomial(r as i128, i as i128))
                .fold(BigUint::zero(), |acc, x| acc + x),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Regularity {
    pub reg: u32,
    pub certified: bool,
}

/// Regularity of `I^n` for `K_a ∨ K̄_b`, certified by linear quotients of
/// the closed-form generators.
pub fn regularity_report(a: usize, b: usize, n: u32) -> Result<Regularity, PolymatroidError> {
    if a == 0 || n == 0 {
        return Err(PolymatroidError::BadParameters);
    }
    let ideal = closed_form_generators(a, b, n)?;
    let degree = require_equigenerated(&ideal)?;
    linear_quotients(&ideal)?;
    Ok(Regularity {
        reg: degree,
        certified: degree == 2 * n,
    })
}
