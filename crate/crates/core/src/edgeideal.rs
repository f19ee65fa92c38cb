//! Edge ideals of complete split graphs and closed forms for their powers.
//!
//! With `I = J + K`, `J = (x_i x_j : i < j)` and `K = (x_i y_t)`, the minimal
//! generators of `I^n` are exactly the monomials `x^α y^β` with
//! `|α| + |β| = 2n`, `|β| ≤ n` and every `α_i ≤ n`. Everything here is a
//! direct enumeration or count of that description; [`crate::monomial`]
//! provides the independent products it is tested against.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::SplitGraph;
use crate::monomial::{Monomial, MonomialError, MonomialIdeal, Variable};
use crate::ring::is_prime;

/// Largest generator set the closed-form enumerations will materialize.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeIdealError {
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error("the clique part is empty (a = 0), the edge ideal is zero")]
    EmptyClique,
    #[error("the independent part must be nonempty (b >= 1)")]
    EmptyIndependentPart,
    #[error("powers are taken for n >= 1")]
    ZeroPower,
    #[error("enumeration exceeds the cap of {cap} generators")]
    EnumerationCap { cap: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent m = {0} must be at least 2")]
    BadExponent(u32),
    #[error("parameters overflow 64 bits")]
    Overflow,
    #[error("closed forms disagree: {0}")]
    Mismatch(String),
}

/// `C(r, s)` with `C(r, s) = 0` whenever `r < 0`, `s < 0` or `r < s`.
pub fn binomial(r: i128, s: i128) -> BigUint {
    if r < 0 || s < 0 || r < s {
        return BigUint::zero();
    }
    let k = s.min(r - s) as u128;
    let r = r as u128;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= r - i;
        acc /= i + 1;
    }
    acc
}

/// The edge ideal `I = J + K` of `K_a ∨ K̄_b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeIdealModel {
    a: usize,
    b: usize,
    ideal: MonomialIdeal,
}

impl EdgeIdealModel {
    /// Reads one generator `z_i z_j` off every edge of `g`.
    pub fn from_graph(g: &SplitGraph) -> EdgeIdealModel {
        let (a, b) = (g.a(), g.b());
        let gens = g.edges().iter().map(|&(i, j)| {
            let mut exps = vec![0; a + b];
            exps[i] = 1;
            exps[j] = 1;
            Monomial::from_exponents(a, exps)
        });
        let ideal =
            MonomialIdeal::from_generators(a, b, gens).expect("widths match by construction");
        EdgeIdealModel { a, b, ideal }
    }

    /// Same ideal built from the parameters alone.
    pub fn from_parameters(a: usize, b: usize) -> Result<EdgeIdealModel, EdgeIdealError> {
        if b == 0 {
            return Err(EdgeIdealError::EmptyIndependentPart);
        }
        let j = clique_part(a, b);
        let k = cross_part(a, b);
        let ideal =
            MonomialIdeal::from_generators(a, b, j.into_gens().into_iter().chain(k.into_gens()))?;
        Ok(EdgeIdealModel { a, b, ideal })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn clique_part(&self) -> MonomialIdeal {
        clique_part(self.a, self.b)
    }

    pub fn cross_part(&self) -> MonomialIdeal {
        cross_part(self.a, self.b)
    }
}

/// `J = (x_i x_j : 1 ≤ i < j ≤ a)`.
fn clique_part(a: usize, b: usize) -> MonomialIdeal {
    let mut gens = Vec::new();
    for i in 0..a {
        for j in i + 1..a {
            let mut exps = vec![0; a + b];
            exps[i] = 1;
            exps[j] = 1;
            gens.push(Monomial::from_exponents(a, exps));
        }
    }
    MonomialIdeal::from_generators(a, b, gens).expect("widths match by construction")
}

/// `K = (x_i y_t)`.
fn cross_part(a: usize, b: usize) -> MonomialIdeal {
    let mut gens = Vec::new();
    for i in 0..a {
        for t in 0..b {
            let mut exps = vec![0; a + b];
            exps[i] = 1;
            exps[a + t] = 1;
            gens.push(Monomial::from_exponents(a, exps));
        }
    }
    MonomialIdeal::from_generators(a, b, gens).expect("widths match by construction")
}

/// The membership conditions for `G(I^n)`: `|α| + |β| = 2n`, `|β| ≤ n`,
/// `0 ≤ α_i ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorPattern {
    alpha: Vec<u32>,
    beta: Vec<u32>,
    n: u32,
}

impl GeneratorPattern {
    pub fn new(alpha: Vec<u32>, beta: Vec<u32>, n: u32) -> Option<GeneratorPattern> {
        let pattern = GeneratorPattern { alpha, beta, n };
        pattern.holds().then_some(pattern)
    }

    fn holds(&self) -> bool {
        let x: u32 = self.alpha.iter().sum();
        let y: u32 = self.beta.iter().sum();
        x + y == 2 * self.n && y <= self.n && self.alpha.iter().all(|&e| e <= self.n)
    }

    /// Whether `m` satisfies the conditions for power `n`.
    pub fn admits(m: &Monomial, n: u32) -> bool {
        m.degree() == 2 * n && m.y_degree() <= n && m.alpha().iter().all(|&e| e <= n)
    }

    pub fn to_monomial(&self) -> Monomial {
        Monomial::new(&self.alpha, &self.beta)
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// Calls `f` on every vector of `len` entries in `0..=max` summing to
/// `total`, in lexicographically decreasing order.
fn for_each_composition(len: usize, total: u32, max: u32, f: &mut impl FnMut(&[u32])) {
    fn go(buf: &mut Vec<u32>, len: usize, left: u32, max: u32, f: &mut impl FnMut(&[u32])) {
        let slots = len - buf.len();
        if slots == 0 {
            if left == 0 {
                f(buf);
            }
            return;
        }
        if left as u64 > slots as u64 * max as u64 {
            return;
        }
        for e in (0..=left.min(max)).rev() {
            buf.push(e);
            go(buf, len, left - e, max, f);
            buf.pop();
        }
    }
    go(&mut Vec::with_capacity(len), len, total, max, f);
}

fn check_power_inputs(b: usize, n: u32) -> Result<(), EdgeIdealError> {
    if b == 0 {
        return Err(EdgeIdealError::EmptyIndependentPart);
    }
    if n == 0 {
        return Err(EdgeIdealError::ZeroPower);
    }
    Ok(())
}

/// `G(I^n)` split into strata by `s = |β|`, `s = 0..=n`; within a stratum the
/// order is lexicographic by `β` then `α`, both decreasing.
pub fn closed_form_strata(
    a: usize,
    b: usize,
    n: u32,
    cap: usize,
) -> Result<Vec<Vec<Monomial>>, EdgeIdealError> {
    check_power_inputs(b, n)?;
    if a == 0 {
        return Ok(vec![Vec::new(); n as usize + 1]);
    }
    let mut total = 0usize;
    let mut strata = Vec::with_capacity(n as usize + 1);
    for s in 0..=n {
        let mut betas = Vec::new();
        for_each_composition(b, s, s, &mut |beta| betas.push(beta.to_vec()));
        let mut stratum = Vec::new();
        let mut overflow = false;
        for beta in &betas {
            for_each_composition(a, 2 * n - s, n, &mut |alpha| {
                if total >= cap {
                    overflow = true;
                    return;
                }
                total += 1;
                stratum.push(Monomial::new(alpha, beta));
            });
            if overflow {
                return Err(EdgeIdealError::EnumerationCap { cap });
            }
        }
        strata.push(stratum);
    }
    Ok(strata)
}

/// `G(I^n)` by direct enumeration of the membership conditions; the zero
/// ideal when `a = 0`.
pub fn closed_form_generators(a: usize, b: usize, n: u32) -> Result<MonomialIdeal, EdgeIdealError> {
    closed_form_generators_with_cap(a, b, n, DEFAULT_ENUMERATION_CAP)
}

pub fn closed_form_generators_with_cap(
    a: usize,
    b: usize,
    n: u32,
    cap: usize,
) -> Result<MonomialIdeal, EdgeIdealError> {
    let strata = closed_form_strata(a, b, n, cap)?;
    let gens: Vec<Monomial> = strata.into_iter().flatten().collect();
    let count = gens.len();
    let ideal = MonomialIdeal::from_generators(a, b, gens)?;
    // all of degree 2n and distinct, hence already an antichain
    debug_assert_eq!(ideal.len(), count);
    Ok(ideal)
}

/// Generators of `I^n` with `|β| = s`:
/// `C(s+b-1, b-1) · [C(2n-s+a-1, a-1) - a·C(n-s+a-2, a-1)]`.
pub fn stratum_count(a: u64, b: u64, n: u64, s: u64) -> BigUint {
    let (a, b, n, s) = (a as i128, b as i128, n as i128, s as i128);
    let ys = binomial(s + b - 1, b - 1);
    let unrestricted = binomial(2 * n - s + a - 1, a - 1);
    let forbidden = BigUint::from(a as u64) * binomial(n - s + a - 2, a - 1);
    ys * (unrestricted - forbidden)
}

/// `μ(I^n)` from the counting formula, summed over `s = 0..=n`.
pub fn count_generators(a: u64, b: u64, n: u64) -> BigUint {
    if a == 0 {
        return BigUint::zero();
    }
    (0..=n).map(|s| stratum_count(a, b, n, s)).sum()
}

/// `G(J^q)` for `J = I(K_a)` in `k[x_1..x_a]`: `|δ| = 2q`, `0 ≤ δ_i ≤ q`.
pub fn complete_graph_power_generators(a: usize, q: u32) -> Result<MonomialIdeal, EdgeIdealError> {
    if a == 0 {
        return Err(EdgeIdealError::EmptyClique);
    }
    let mut gens = Vec::new();
    for_each_composition(a, 2 * q, q, &mut |delta| {
        gens.push(Monomial::new(delta, &[]))
    });
    if gens.is_empty() {
        // a = 1, q ≥ 1: x1^{2q} would need δ_1 ≤ q
        return Ok(MonomialIdeal::zero(a, 0));
    }
    Ok(MonomialIdeal::from_generators(a, 0, gens)?)
}

/// `G(K^s)`: `x^γ y^β` with `|γ| = |β| = s`.
pub fn cross_power_generators(a: usize, b: usize, s: u32) -> Result<MonomialIdeal, EdgeIdealError> {
    if a == 0 {
        return Err(EdgeIdealError::EmptyClique);
    }
    if b == 0 {
        return Err(EdgeIdealError::EmptyIndependentPart);
    }
    let mut gammas = Vec::new();
    for_each_composition(a, s, s, &mut |g| gammas.push(g.to_vec()));
    let mut gens = Vec::new();
    for gamma in &gammas {
        for_each_composition(b, s, s, &mut |beta| gens.push(Monomial::new(gamma, beta)));
    }
    Ok(MonomialIdeal::from_generators(a, b, gens)?)
}

/// `μ(I^n)` for a star `K_{1,b}`: `C(n+b-1, b-1)`.
pub fn star_count(b: u64, n: u64) -> BigUint {
    binomial(n as i128 + b as i128 - 1, b as i128 - 1)
}

/// An intersection of variable-generated primes, each named by its variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryDecomposition {
    a: usize,
    b: usize,
    components: Vec<BTreeSet<Variable>>,
}

impl PrimaryDecomposition {
    pub fn from_components(a: usize, b: usize, components: Vec<BTreeSet<Variable>>) -> Self {
        PrimaryDecomposition { a, b, components }
    }

    pub fn components(&self) -> &[BTreeSet<Variable>] {
        &self.components
    }

    pub fn component_ideals(&self) -> Vec<MonomialIdeal> {
        self.components
            .iter()
            .map(|c| MonomialIdeal::generated_by_variables(self.a, self.b, c.iter().copied()))
            .collect()
    }

    fn intersection_of(&self, skip: Option<usize>) -> Result<MonomialIdeal, MonomialError> {
        let mut acc = MonomialIdeal::unit(self.a, self.b);
        for (k, p) in self.component_ideals().iter().enumerate() {
            if Some(k) != skip {
                acc = acc.intersect(p)?;
            }
        }
        Ok(acc)
    }

    /// The intersection of all components.
    pub fn intersection(&self) -> Result<MonomialIdeal, MonomialError> {
        self.intersection_of(None)
    }

    /// True iff the components intersect to the model's ideal and dropping
    /// any single component changes the intersection.
    pub fn verify(&self, model: &EdgeIdealModel) -> Result<bool, EdgeIdealError> {
        if !self.intersection()?.equals(model.ideal())? {
            return Ok(false);
        }
        for k in 0..self.components.len() {
            if self.intersection_of(Some(k))?.equals(model.ideal())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Height, dimension and unmixedness read off the component sizes.
    pub fn height_and_dim(&self) -> HeightDim {
        let sizes: Vec<usize> = self.components.iter().map(BTreeSet::len).collect();
        let height = sizes.iter().copied().min().unwrap_or(0);
        HeightDim {
            height,
            dim: self.a + self.b - height,
            unmixed: sizes.iter().all(|&s| s == height),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeightDim {
    pub height: usize,
    pub dim: usize,
    pub unmixed: bool,
}

/// `𝔭_0 = (x_1..x_a)` and `𝔭_i = (x_1..x̂_i..x_a, y_1..y_b)`.
pub fn primary_decomposition(a: usize, b: usize) -> Result<PrimaryDecomposition, EdgeIdealError> {
    if a == 0 {
        return Err(EdgeIdealError::EmptyClique);
    }
    if b == 0 {
        return Err(EdgeIdealError::EmptyIndependentPart);
    }
    let xs: BTreeSet<Variable> = (1..=a).map(Variable::X).collect();
    let ys = (1..=b).map(Variable::Y);
    let mut components = vec![xs.clone()];
    for i in 1..=a {
        let mut c: BTreeSet<Variable> = xs
            .iter()
            .copied()
            .filter(|&v| v != Variable::X(i))
            .collect();
        c.extend(ys.clone());
        components.push(c);
    }
    Ok(PrimaryDecomposition { a, b, components })
}

/// Checks the closed-form decomposition of `model` against the intersection
/// engine, including irredundancy.
pub fn verify_primary_decomposition(model: &EdgeIdealModel) -> Result<bool, EdgeIdealError> {
    primary_decomposition(model.a(), model.b())?.verify(model)
}

/// `(ht I, dim S/I, unmixed)`, derived from the decomposition's component sizes.
pub fn height_and_dim(a: usize, b: usize) -> Result<HeightDim, EdgeIdealError> {
    Ok(primary_decomposition(a, b)?.height_and_dim())
}

/// `(a, b)` for `P = (p)` in `Z_{p^m}`: `a = p^{m-1} - 1`, `b = p^{m-1}(p - 1)`.
pub fn zpm_parameters(p: u64, m: u32) -> Result<(u64, u64), EdgeIdealError> {
    if !is_prime(p) {
        return Err(EdgeIdealError::NotPrime(p));
    }
    if m < 2 {
        return Err(EdgeIdealError::BadExponent(m));
    }
    let size = p.checked_pow(m - 1).ok_or(EdgeIdealError::Overflow)?;
    let b = size.checked_mul(p - 1).ok_or(EdgeIdealError::Overflow)?;
    if b > i64::MAX as u64 {
        return Err(EdgeIdealError::Overflow);
    }
    Ok((size - 1, b))
}

/// `μ(I)` for `Γ_{(p)}(Z_{p^m})`: `C(p^{m-1}-1, 2) + (p^{m-1}-1)·p^{m-1}·(p-1)`,
/// cross-checked against [`count_generators`] at `n = 1`.
pub fn zpm_mu(p: u64, m: u32) -> Result<BigUint, EdgeIdealError> {
    let (a, b) = zpm_parameters(p, m)?;
    let direct = binomial(a as i128, 2) + BigUint::from(a) * BigUint::from(b);
    let counted = count_generators(a, b, 1);
    if direct != counted {
        return Err(EdgeIdealError::Mismatch(format!(
            "zpm_mu({p}, {m}) = {direct} but the counting formula gives {counted}"
        )));
    }
    Ok(direct)
}
