//! Finite commutative rings of the form `Z_{n_1} x ... x Z_{n_k}` and their
//! proper prime ideals.
//!
//! Every ideal handed out by this module has been re-checked against the
//! definition of primality by exhaustive search over `R x R`, so the
//! number-theoretic construction in [`prime_ideals`] and the definition-level
//! check in [`verify_prime`] always agree on returned values.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest ring order accepted by the exhaustive (`O(|R|^2)`) operations.
pub const DEFAULT_RING_CAP: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("a ring needs at least one factor")]
    NoFactors,
    #[error("modulus {0} is invalid, every factor must be at least 2")]
    BadModulus(u64),
    #[error("ring order overflows 64 bits")]
    OrderOverflow,
    #[error("cannot parse ring spec `{0}` (expected something like Z6 or Z2xZ3)")]
    BadSpec(String),
    #[error("cannot parse ring element `{text}` for {ring}")]
    BadElement { text: String, ring: String },
    #[error("element has {found} coordinates but the ring has {expected} factors")]
    CoordinateCount { expected: usize, found: usize },
    #[error("coordinate {value} is out of range for Z{modulus}")]
    CoordinateRange { value: u64, modulus: u64 },
    #[error("ring order {order} exceeds the exhaustive-search cap {cap}")]
    CapExceeded { order: u64, cap: u64 },
    #[error("not a proper prime ideal: {0}")]
    NotPrime(NotPrime),
    #[error("ideal belongs to {found}, expected {expected}")]
    RingMismatch { expected: String, found: String },
}

/// The first violated clause found while checking that a subset of `R` is a
/// proper prime ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotPrime {
    MissingZero,
    NotProper,
    NotClosedUnderAddition { x: RingElement, y: RingElement },
    NotAbsorbing { r: RingElement, x: RingElement },
    ProductEscapes { x: RingElement, y: RingElement },
}

impl fmt::Display for NotPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotPrime::MissingZero => write!(f, "0 is not a member"),
            NotPrime::NotProper => write!(f, "the set is the whole ring"),
            NotPrime::NotClosedUnderAddition { x, y } => {
                write!(f, "{x} + {y} is not a member")
            }
            NotPrime::NotAbsorbing { r, x } => write!(f, "{r} * {x} is not a member"),
            NotPrime::ProductEscapes { x, y } => write!(
                f,
                "{x} * {y} is a member but neither {x} nor {y} is (primality witness)"
            ),
        }
    }
}

/// `Z_{n_1} x ... x Z_{n_k}`; `k = 1` is plain `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    factors: Vec<u64>,
    order: u64,
}

/// A ring element as a tuple of residues, one per factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElement {
    coords: Vec<u64>,
}

impl RingElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [c] = self.coords.as_slice() {
            return write!(f, "{c}");
        }
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl RingSpec {
    pub fn new(factors: Vec<u64>) -> Result<Self, RingError> {
        if factors.is_empty() {
            return Err(RingError::NoFactors);
        }
        if let Some(&bad) = factors.iter().find(|&&n| n < 2) {
            return Err(RingError::BadModulus(bad));
        }
        let order = factors
            .iter()
            .try_fold(1u64, |acc, &n| acc.checked_mul(n))
            .ok_or(RingError::OrderOverflow)?;
        Ok(RingSpec { factors, order })
    }

    /// `Z_n`.
    pub fn cyclic(n: u64) -> Result<Self, RingError> {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// `|R|`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn check_cap(&self, cap: u64) -> Result<(), RingError> {
        if self.order > cap {
            return Err(RingError::CapExceeded {
                order: self.order,
                cap,
            });
        }
        Ok(())
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            coords: vec![0; self.factors.len()],
        }
    }

    pub fn one(&self) -> RingElement {
        RingElement {
            coords: vec![1; self.factors.len()],
        }
    }

    pub fn element(&self, coords: Vec<u64>) -> Result<RingElement, RingError> {
        self.check_coords(&coords)?;
        Ok(RingElement { coords })
    }

    fn check_coords(&self, coords: &[u64]) -> Result<(), RingError> {
        if coords.len() != self.factors.len() {
            return Err(RingError::CoordinateCount {
                expected: self.factors.len(),
                found: coords.len(),
            });
        }
        for (&value, &modulus) in coords.iter().zip(&self.factors) {
            if value >= modulus {
                return Err(RingError::CoordinateRange { value, modulus });
            }
        }
        Ok(())
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        self.check_coords(&x.coords).is_ok()
    }

    /// Position of `x` in the ascending enumeration of [`RingSpec::elements`].
    pub fn index_of(&self, x: &RingElement) -> usize {
        x.coords
            .iter()
            .zip(&self.factors)
            .fold(0u64, |acc, (&c, &n)| acc * n + c) as usize
    }

    pub fn element_at(&self, mut index: usize) -> RingElement {
        let mut coords = vec![0; self.factors.len()];
        for (slot, &n) in coords.iter_mut().zip(&self.factors).rev() {
            *slot = index as u64 % n;
            index /= n as usize;
        }
        RingElement { coords }
    }

    /// All elements in ascending tuple order (numeric order for `Z_n`).
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.order as usize).map(move |i| self.element_at(i))
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> Result<RingElement, RingError> {
        self.check_coords(&x.coords)?;
        self.check_coords(&y.coords)?;
        Ok(self.add_unchecked(x, y))
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> Result<RingElement, RingError> {
        self.check_coords(&x.coords)?;
        self.check_coords(&y.coords)?;
        Ok(self.mul_unchecked(x, y))
    }

    fn add_unchecked(&self, x: &RingElement, y: &RingElement) -> RingElement {
        let coords = x
            .coords
            .iter()
            .zip(&y.coords)
            .zip(&self.factors)
            .map(|((&a, &b), &n)| ((a as u128 + b as u128) % n as u128) as u64)
            .collect();
        RingElement { coords }
    }

    pub(crate) fn mul_unchecked(&self, x: &RingElement, y: &RingElement) -> RingElement {
        let coords = x
            .coords
            .iter()
            .zip(&y.coords)
            .zip(&self.factors)
            .map(|((&a, &b), &n)| ((a as u128 * b as u128) % n as u128) as u64)
            .collect();
        RingElement { coords }
    }

    /// The principal ideal `R·g`.
    pub fn principal_ideal(&self, g: &RingElement) -> Result<BTreeSet<RingElement>, RingError> {
        self.check_coords(&g.coords)?;
        Ok(self.elements().map(|r| self.mul_unchecked(&r, g)).collect())
    }

    /// Parses `3` for single-factor rings and `(1,2)` (parentheses optional)
    /// for products.
    pub fn parse_element(&self, text: &str) -> Result<RingElement, RingError> {
        let bad = || RingError::BadElement {
            text: text.to_string(),
            ring: self.to_string(),
        };
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        let coords = inner
            .split(',')
            .map(|part| part.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        self.element(coords)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "Z{n}")?;
        }
        Ok(())
    }
}

impl FromStr for RingSpec {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RingError::BadSpec(s.to_string());
        let lowered = s.trim().to_ascii_lowercase();
        if lowered.is_empty() {
            return Err(bad());
        }
        let factors = lowered
            .split('x')
            .map(|part| {
                part.trim()
                    .strip_prefix('z')
                    .and_then(|digits| digits.parse::<u64>().ok())
                    .ok_or_else(bad)
            })
            .collect::<Result<Vec<_>, _>>()?;
        RingSpec::new(factors)
    }
}

/// A proper prime ideal, stored by its explicit member set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeIdeal {
    ring: RingSpec,
    members: BTreeSet<RingElement>,
    quotient_order: u64,
    generator: Option<RingElement>,
}

impl PrimeIdeal {
    /// Verifies `members` exhaustively and wraps it.
    pub fn from_members(
        ring: &RingSpec,
        members: BTreeSet<RingElement>,
    ) -> Result<Self, RingError> {
        Self::from_members_with_cap(ring, members, DEFAULT_RING_CAP)
    }

    pub fn from_members_with_cap(
        ring: &RingSpec,
        members: BTreeSet<RingElement>,
        cap: u64,
    ) -> Result<Self, RingError> {
        ring.check_cap(cap)?;
        for m in &members {
            ring.check_coords(&m.coords)?;
        }
        if let Some(witness) = prime_witness(ring, &members) {
            return Err(RingError::NotPrime(witness));
        }
        let quotient_order = ring.order() / members.len() as u64;
        Ok(PrimeIdeal {
            ring: ring.clone(),
            members,
            quotient_order,
            generator: None,
        })
    }

    /// The ideal `(g)`, verified to be prime.
    pub fn generated_by(ring: &RingSpec, g: &RingElement) -> Result<Self, RingError> {
        Self::generated_by_with_cap(ring, g, DEFAULT_RING_CAP)
    }

    pub fn generated_by_with_cap(
        ring: &RingSpec,
        g: &RingElement,
        cap: u64,
    ) -> Result<Self, RingError> {
        ring.check_cap(cap)?;
        let members = ring.principal_ideal(g)?;
        let mut ideal = Self::from_members_with_cap(ring, members, cap)?;
        ideal.generator = Some(g.clone());
        Ok(ideal)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn members(&self) -> &BTreeSet<RingElement> {
        &self.members
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        self.members.contains(x)
    }

    /// `|P|`.
    pub fn size(&self) -> u64 {
        self.members.len() as u64
    }

    /// `q = |R/P|`, the order of the residue field.
    pub fn quotient_order(&self) -> u64 {
        self.quotient_order
    }

    pub fn generator(&self) -> Option<&RingElement> {
        self.generator.as_ref()
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.generator {
            Some(g) => write!(f, "({g})"),
            None => {
                write!(f, "{{")?;
                for (i, m) in self.members.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            primes.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_divisors(n) == [n]
}

/// Every proper prime ideal of `ring`.
///
/// For a factor `Z_{n_i}` and a prime `p | n_i` the ideal is `(p)` in that
/// factor crossed with the full ring elsewhere; there are no others. Each
/// result is re-verified by [`verify_prime`] before it is returned.
pub fn prime_ideals(ring: &RingSpec) -> Result<Vec<PrimeIdeal>, RingError> {
    prime_ideals_with_cap(ring, DEFAULT_RING_CAP)
}

pub fn prime_ideals_with_cap(ring: &RingSpec, cap: u64) -> Result<Vec<PrimeIdeal>, RingError> {
    ring.check_cap(cap)?;
    let mut out = Vec::new();
    for (i, &n) in ring.factors().iter().enumerate() {
        for p in prime_divisors(n) {
            let members: BTreeSet<RingElement> =
                ring.elements().filter(|x| x.coords[i] % p == 0).collect();
            let mut gen = ring.one();
            gen.coords[i] = p % n;
            let mut ideal = PrimeIdeal::from_members_with_cap(ring, members, cap)?;
            ideal.generator = Some(gen);
            debug_assert_eq!(ideal.quotient_order, p);
            out.push(ideal);
        }
    }
    Ok(out)
}

/// True iff `s` is a proper ideal of `ring` and `xy in s` forces `x in s` or
/// `y in s`, checked exhaustively.
pub fn verify_prime(ring: &RingSpec, s: &BTreeSet<RingElement>) -> bool {
    s.iter().all(|x| ring.contains(x)) && prime_witness(ring, s).is_none()
}

/// The first failed clause of the proper-prime-ideal definition, if any.
/// Members must already lie in `ring`.
pub fn prime_witness(ring: &RingSpec, s: &BTreeSet<RingElement>) -> Option<NotPrime> {
    let order = ring.order() as usize;
    let mut member = vec![false; order];
    for x in s {
        member[ring.index_of(x)] = true;
    }
    if !member[0] {
        return Some(NotPrime::MissingZero);
    }
    if s.len() == order {
        return Some(NotPrime::NotProper);
    }
    for x in s {
        for y in s {
            if !member[ring.index_of(&ring.add_unchecked(x, y))] {
                return Some(NotPrime::NotClosedUnderAddition {
                    x: x.clone(),
                    y: y.clone(),
                });
            }
        }
    }
    let all: Vec<RingElement> = ring.elements().collect();
    for r in &all {
        for x in s {
            if !member[ring.index_of(&ring.mul_unchecked(r, x))] {
                return Some(NotPrime::NotAbsorbing {
                    r: r.clone(),
                    x: x.clone(),
                });
            }
        }
    }
    for (i, x) in all.iter().enumerate() {
        if member[i] {
            continue;
        }
        for (j, y) in all.iter().enumerate().skip(i) {
            if !member[j] && member[ring.index_of(&ring.mul_unchecked(x, y))] {
                return Some(NotPrime::ProductEscapes {
                    x: x.clone(),
                    y: y.clone(),
                });
            }
        }
    }
    None
}
