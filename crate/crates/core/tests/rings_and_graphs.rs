use std::collections::BTreeSet;

use pigraph_core::ring::{is_prime, prime_witness};
use pigraph_core::{prime_ideals, verify_prime, RingElement, RingSpec, SplitGraph};

fn corpus() -> Vec<RingSpec> {
    let mut rings: Vec<RingSpec> = [4, 5, 6, 8, 9, 10, 12]
        .iter()
        .map(|&n| RingSpec::cyclic(n).unwrap())
        .collect();
    rings.push(RingSpec::new(vec![2, 3]).unwrap());
    rings.push(RingSpec::new(vec![2, 2]).unwrap());
    rings.push(RingSpec::new(vec![4, 3]).unwrap());
    rings
}

/// All proper prime ideals found by testing every subset of `R` against the
/// definition.
fn primes_by_subsets(ring: &RingSpec) -> BTreeSet<BTreeSet<RingElement>> {
    let elems: Vec<RingElement> = ring.elements().collect();
    assert!(elems.len() <= 12);
    (0u32..1 << elems.len())
        .map(|mask| {
            elems
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, x)| x.clone())
                .collect::<BTreeSet<_>>()
        })
        .filter(|s| verify_prime(ring, s))
        .collect()
}

#[test]
fn prime_enumeration_matches_subset_search() {
    for ring in corpus() {
        let found: BTreeSet<_> = prime_ideals(&ring)
            .unwrap()
            .iter()
            .map(|p| p.members().clone())
            .collect();
        assert_eq!(found, primes_by_subsets(&ring), "{ring}");
    }
}

#[test]
fn cyclic_rings_have_one_prime_per_prime_divisor() {
    for n in 2..=60u64 {
        let ring = RingSpec::cyclic(n).unwrap();
        let divisors = (2..=n).filter(|&p| n % p == 0 && is_prime(p)).count();
        let primes = prime_ideals(&ring).unwrap();
        assert_eq!(primes.len(), divisors, "Z{n}");
        if is_prime(n) {
            assert_eq!(primes[0].size(), 1);
        }
    }
}

#[test]
fn ring_order_factors_through_prime() {
    for ring in corpus() {
        for p in prime_ideals(&ring).unwrap() {
            let q = p.quotient_order();
            assert!(q >= 2);
            assert_eq!(ring.order(), p.size() * q);
            assert!(prime_witness(&ring, p.members()).is_none());
            if p.size() >= 2 {
                assert!(ring.order() - p.size() >= 2);
                assert_eq!(ring.order() - p.size(), p.size() * (q - 1));
            }
        }
    }
}

/// Largest clique by subset search.
fn max_clique(g: &SplitGraph) -> usize {
    let n = g.vertices().len();
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|i| {
                (i + 1..n)
                    .all(|j| mask & (1 << i) == 0 || mask & (1 << j) == 0 || g.is_adjacent(i, j))
            })
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap()
}

#[test]
fn ring_graphs_are_split_and_match_parameters() {
    for ring in corpus() {
        for p in prime_ideals(&ring).unwrap() {
            let g = SplitGraph::from_prime(&ring, &p).unwrap();
            g.verify_split().unwrap();
            let (a, b) = (g.a(), g.b());
            assert_eq!(a as u64, p.size() - 1);
            assert_eq!(b as u64, ring.order() - p.size());
            assert_eq!(b as u64, (a as u64 + 1) * (p.quotient_order() - 1));
            assert!(b >= 1);
            if a >= 1 {
                assert!(b >= 2);
                assert!(g.non_adjacent_pair().is_some(), "{ring} {p} is complete");
            }
            let abstract_g = SplitGraph::abstract_split(a, b).unwrap();
            assert_eq!(g.edges(), abstract_g.edges());
            assert_eq!(g.clique_number(), max_clique(&g), "{ring} {p}");
        }
    }
}

#[test]
fn covers_match_bruteforce_on_corpus() {
    for ring in corpus() {
        for p in prime_ideals(&ring).unwrap() {
            let g = SplitGraph::from_prime(&ring, &p).unwrap();
            if g.a() == 0 {
                continue;
            }
            let closed: BTreeSet<_> = g.minimal_vertex_covers_closed_form().into_iter().collect();
            let brute: BTreeSet<_> = g
                .minimal_vertex_covers_bruteforce()
                .unwrap()
                .into_iter()
                .collect();
            assert_eq!(closed, brute, "{ring} {p}");
            assert_eq!(closed.len(), g.a() + 1);
        }
    }
}

#[test]
fn abstract_clique_numbers() {
    for a in 0..=4 {
        for b in 1..=4 {
            let g = SplitGraph::abstract_split(a, b).unwrap();
            assert_eq!(g.clique_number(), max_clique(&g), "({a},{b})");
        }
    }
}
