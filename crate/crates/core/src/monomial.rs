//! Exact monomial ideal arithmetic over `k[x_1..x_a, y_1..y_b]`.
//!
//! Ideals are always held by their minimal generating set, sorted in
//! descending graded reverse lexicographic order with
//! `x_1 > ... > x_a > y_1 > ... > y_b`. Because minimal generators of a
//! monomial ideal are unique, equality of ideals is plain equality of those
//! vectors.
//!
//! This engine knows nothing about split graphs; it is the brute-force side
//! that the closed forms in [`crate::edgeideal`] are checked against.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};
use thiserror::Error;

/// Upper bound on intermediate products (or lcms) formed by a single
/// `product`/`intersect` call.
pub const DEFAULT_PRODUCT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("variable blocks differ: ({0}, {1}) vs ({2}, {3})")]
    WidthMismatch(usize, usize, usize, usize),
    #[error("{count} intermediate monomials exceed the cap of {cap}")]
    CapExceeded { count: usize, cap: usize },
    #[error("cannot parse monomial `{0}`")]
    Parse(String),
}

/// One of the polynomial ring variables, 1-based as printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    X(usize),
    Y(usize),
}

impl Variable {
    /// Position in the exponent vector of a monomial with an `a`-wide x-block.
    pub fn index(self, a: usize) -> usize {
        match self {
            Variable::X(i) => i - 1,
            Variable::Y(t) => a + t - 1,
        }
    }

    pub fn from_index(index: usize, a: usize) -> Variable {
        if index < a {
            Variable::X(index + 1)
        } else {
            Variable::Y(index - a + 1)
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::X(i) => write!(f, "x{i}"),
            Variable::Y(t) => write!(f, "y{t}"),
        }
    }
}

/// `x^alpha y^beta`, stored as one exponent vector with the x-block first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    a: usize,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(alpha: &[u32], beta: &[u32]) -> Monomial {
        let mut exps = Vec::with_capacity(alpha.len() + beta.len());
        exps.extend_from_slice(alpha);
        exps.extend_from_slice(beta);
        Monomial {
            a: alpha.len(),
            exps,
        }
    }

    pub fn from_exponents(a: usize, exps: Vec<u32>) -> Monomial {
        assert!(a <= exps.len(), "x-block wider than the exponent vector");
        Monomial { a, exps }
    }

    pub fn unit(a: usize, b: usize) -> Monomial {
        Monomial {
            a,
            exps: vec![0; a + b],
        }
    }

    pub fn variable(a: usize, b: usize, v: Variable) -> Monomial {
        let mut m = Monomial::unit(a, b);
        m.exps[v.index(a)] = 1;
        m
    }

    /// `(a, b)`.
    pub fn widths(&self) -> (usize, usize) {
        (self.a, self.exps.len() - self.a)
    }

    pub fn alpha(&self) -> &[u32] {
        &self.exps[..self.a]
    }

    pub fn beta(&self) -> &[u32] {
        &self.exps[self.a..]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.exps[v.index(self.a)]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn x_degree(&self) -> u32 {
        self.alpha().iter().sum()
    }

    pub fn y_degree(&self) -> u32 {
        self.beta().iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    fn same_widths(&self, other: &Monomial) -> Result<(), MonomialError> {
        if self.a != other.a || self.exps.len() != other.exps.len() {
            let (a1, b1) = self.widths();
            let (a2, b2) = other.widths();
            return Err(MonomialError::WidthMismatch(a1, b1, a2, b2));
        }
        Ok(())
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool, MonomialError> {
        self.same_widths(other)?;
        Ok(self.divides_unchecked(other))
    }

    fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        self.same_widths(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        self.same_widths(other)?;
        Ok(self.zip_with(other, u32::max))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        self.same_widths(other)?;
        Ok(self.zip_with(other, u32::min))
    }

    /// `self / gcd(self, other)`.
    pub fn strip_common(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        self.same_widths(other)?;
        Ok(self.zip_with(other, |a, b| a.saturating_sub(b)))
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        Monomial {
            a: self.a,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Parses the canonical text form (`x1^2*x3*y2`, or `1`) for the given
    /// block widths. Factors may appear in any order and repeat.
    pub fn parse(text: &str, a: usize, b: usize) -> Result<Monomial, MonomialError> {
        let bad = || MonomialError::Parse(text.to_string());
        let text = text.trim();
        let mut m = Monomial::unit(a, b);
        if text == "1" {
            return Ok(m);
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad())?),
                None => (factor, 1),
            };
            let (kind, idx) = var.split_at(var.len().min(1));
            let idx: usize = idx.parse().map_err(|_| bad())?;
            let v = match kind {
                "x" if (1..=a).contains(&idx) => Variable::X(idx),
                "y" if (1..=b).contains(&idx) => Variable::Y(idx),
                _ => return Err(bad()),
            };
            m.exps[v.index(a)] += exp;
        }
        Ok(m)
    }
}

/// Graded reverse lexicographic order, `x_1 > ... > x_a > y_1 > ... > y_b`.
/// Monomials over different blocks compare by block widths first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.widths()
            .cmp(&other.widths())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| {
                self.exps
                    .iter()
                    .zip(&other.exps)
                    .rev()
                    .find(|(a, b)| a != b)
                    .map_or(Ordering::Equal, |(a, b)| b.cmp(a))
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", Variable::from_index(i, self.a))?;
            if e >= 2 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A monomial ideal held by its minimal generating set `G(L)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    a: usize,
    b: usize,
    gens: Vec<Monomial>,
}

/// Drops duplicates and every monomial divisible by another, returning the
/// survivors in canonical (descending grevlex) order.
fn minimal_set(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by(|x, y| {
        x.degree()
            .cmp(&y.degree())
            .then_with(|| x.exps.cmp(&y.exps))
    });
    ms.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in ms {
        let d = m.degree();
        let redundant = kept
            .iter()
            .take_while(|k| k.degree() < d)
            .any(|k| k.divides_unchecked(&m));
        if !redundant {
            kept.push(m);
        }
    }
    kept.sort_by(|x, y| y.cmp(x));
    kept
}

/// `G` of the ideal generated by `ms`.
pub fn minimalize(
    a: usize,
    b: usize,
    ms: impl IntoIterator<Item = Monomial>,
) -> Result<MonomialIdeal, MonomialError> {
    MonomialIdeal::from_generators(a, b, ms)
}

impl MonomialIdeal {
    pub fn zero(a: usize, b: usize) -> MonomialIdeal {
        MonomialIdeal {
            a,
            b,
            gens: Vec::new(),
        }
    }

    pub fn unit(a: usize, b: usize) -> MonomialIdeal {
        MonomialIdeal {
            a,
            b,
            gens: vec![Monomial::unit(a, b)],
        }
    }

    pub fn from_generators(
        a: usize,
        b: usize,
        ms: impl IntoIterator<Item = Monomial>,
    ) -> Result<MonomialIdeal, MonomialError> {
        let reference = Monomial::unit(a, b);
        let ms: Vec<Monomial> = ms.into_iter().collect();
        for m in &ms {
            reference.same_widths(m)?;
        }
        Ok(MonomialIdeal {
            a,
            b,
            gens: minimal_set(ms),
        })
    }

    /// The prime ideal generated by the given variables.
    pub fn generated_by_variables(
        a: usize,
        b: usize,
        vars: impl IntoIterator<Item = Variable>,
    ) -> MonomialIdeal {
        let gens = vars
            .into_iter()
            .map(|v| Monomial::variable(a, b, v))
            .collect();
        MonomialIdeal {
            a,
            b,
            gens: minimal_set(gens),
        }
    }

    /// Parses canonical monomial strings.
    pub fn parse<'s>(
        a: usize,
        b: usize,
        texts: impl IntoIterator<Item = &'s str>,
    ) -> Result<MonomialIdeal, MonomialError> {
        let ms = texts
            .into_iter()
            .map(|t| Monomial::parse(t, a, b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MonomialIdeal {
            a,
            b,
            gens: minimal_set(ms),
        })
    }

    pub fn widths(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    /// Minimal generators in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Monomial> {
        self.gens
    }

    /// `mu(L)`, the number of minimal generators.
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        matches!(self.gens.as_slice(), [g] if g.is_unit())
    }

    pub fn gen_strings(&self) -> Vec<String> {
        self.gens.iter().map(ToString::to_string).collect()
    }

    fn same_widths(&self, other: &MonomialIdeal) -> Result<(), MonomialError> {
        if self.widths() != other.widths() {
            return Err(MonomialError::WidthMismatch(
                self.a, self.b, other.a, other.b,
            ));
        }
        Ok(())
    }

    /// Ideal membership of a monomial.
    pub fn contains(&self, m: &Monomial) -> Result<bool, MonomialError> {
        Monomial::unit(self.a, self.b).same_widths(m)?;
        Ok(self.gens.iter().any(|g| g.divides_unchecked(m)))
    }

    /// Whether `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool, MonomialError> {
        self.same_widths(other)?;
        Ok(other
            .gens
            .iter()
            .all(|m| self.gens.iter().any(|g| g.divides_unchecked(m))))
    }

    /// Set equality of minimal generating sets.
    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool, MonomialError> {
        self.same_widths(other)?;
        Ok(self.gens == other.gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, MonomialError> {
        self.product_with_cap(other, DEFAULT_PRODUCT_CAP)
    }

    pub fn product_with_cap(
        &self,
        other: &MonomialIdeal,
        cap: usize,
    ) -> Result<MonomialIdeal, MonomialError> {
        self.pairwise(other, cap, |u, v| u + v)
    }

    /// `I^n`; `I^0` is the unit ideal.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal, MonomialError> {
        self.power_with_cap(n, DEFAULT_PRODUCT_CAP)
    }

    pub fn power_with_cap(&self, n: u32, cap: usize) -> Result<MonomialIdeal, MonomialError> {
        let mut acc = MonomialIdeal::unit(self.a, self.b);
        for _ in 0..n {
            acc = acc.product_with_cap(self, cap)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, MonomialError> {
        self.intersect_with_cap(other, DEFAULT_PRODUCT_CAP)
    }

    pub fn intersect_with_cap(
        &self,
        other: &MonomialIdeal,
        cap: usize,
    ) -> Result<MonomialIdeal, MonomialError> {
        self.pairwise(other, cap, u32::max)
    }

    fn pairwise(
        &self,
        other: &MonomialIdeal,
        cap: usize,
        f: impl Fn(u32, u32) -> u32,
    ) -> Result<MonomialIdeal, MonomialError> {
        self.same_widths(other)?;
        let count = self.gens.len().saturating_mul(other.gens.len());
        if count > cap {
            return Err(MonomialError::CapExceeded { count, cap });
        }
        let mut out = Vec::with_capacity(count);
        for u in &self.gens {
            for v in &other.gens {
                out.push(u.zip_with(v, &f));
            }
        }
        Ok(MonomialIdeal {
            a: self.a,
            b: self.b,
            gens: minimal_set(out),
        })
    }

    /// `I : m`, generated by `u / gcd(u, m)` over `u in G(I)`.
    pub fn colon_by_monomial(&self, m: &Monomial) -> Result<MonomialIdeal, MonomialError> {
        Monomial::unit(self.a, self.b).same_widths(m)?;
        Ok(MonomialIdeal {
            a: self.a,
            b: self.b,
            gens: colon_gens(&self.gens, m),
        })
    }

    /// Radical test: a monomial ideal is radical iff it is squarefree.
    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// The common degree of all generators, if the ideal is nonzero and
    /// generated in a single degree.
    pub fn generating_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }
}

/// Minimal generators of `(gens) : m`; `m` must share the block widths.
pub(crate) fn colon_gens(gens: &[Monomial], m: &Monomial) -> Vec<Monomial> {
    minimal_set(
        gens.iter()
            .map(|u| u.zip_with(m, |a, b| a.saturating_sub(b)))
            .collect(),
    )
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.gens.len()))?;
        for g in &self.gens {
            seq.serialize_element(g)?;
        }
        seq.end()
    }
}
