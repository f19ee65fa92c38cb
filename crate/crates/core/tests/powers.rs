//! Closed forms for powers of `I(K_a ∨ K̄_b)` against the monomial engine.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use pigraph_core::edgeideal::{
    closed_form_strata, complete_graph_power_generators, count_generators, cross_power_generators,
    height_and_dim, primary_decomposition, star_count, verify_primary_decomposition,
    GeneratorPattern,
};
use pigraph_core::{closed_form_generators, EdgeIdealModel, SplitGraph};

/// Every exponent vector of length `len` with entries summing to `total`,
/// built by plain odometer counting (no pruning, no shared code).
fn all_vectors(len: usize, total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut v = vec![0u32; len];
    loop {
        if v.iter().sum::<u32>() == total {
            out.push(v.clone());
        }
        let mut k = 0;
        loop {
            if k == len {
                return out;
            }
            if v[k] < total {
                v[k] += 1;
                break;
            }
            v[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn closed_form_equals_power_oracle_on_grid() {
    for a in 1..=4 {
        for b in 1..=5 {
            let g = SplitGraph::abstract_split(a, b).unwrap();
            let model = EdgeIdealModel::from_graph(&g);
            let mut power = model.ideal().clone();
            for n in 1..=4u32 {
                if n > 1 {
                    power = power.product(model.ideal()).unwrap();
                }
                let closed = closed_form_generators(a, b, n).unwrap();
                assert!(closed.equals(&power).unwrap(), "(a,b,n) = ({a},{b},{n})");
                assert_eq!(
                    BigUint::from(closed.len()),
                    count_generators(a as u64, b as u64, n as u64),
                    "count at ({a},{b},{n})"
                );
            }
        }
    }
}

#[test]
fn counting_formula_matches_exhaustive_filter() {
    // Filter every degree-2n monomial through the membership conditions,
    // independently of the stratified enumeration.
    for a in 1..=4usize {
        for b in 1..=4usize {
            for n in 1..=3u32 {
                let brute = all_vectors(a + b, 2 * n)
                    .into_iter()
                    .filter(|e| {
                        let (alpha, beta) = e.split_at(a);
                        GeneratorPattern::new(alpha.to_vec(), beta.to_vec(), n).is_some()
                    })
                    .count();
                assert_eq!(
                    BigUint::from(brute),
                    count_generators(a as u64, b as u64, n as u64),
                    "({a},{b},{n})"
                );
            }
        }
    }
}

#[test]
fn degree_law() {
    for a in 1..=4 {
        for b in 1..=5 {
            for n in 1..=4u32 {
                for m in closed_form_generators(a, b, n).unwrap().gens() {
                    assert_eq!(m.degree(), 2 * n);
                    assert!(m.y_degree() <= n);
                    assert!(m.alpha().iter().all(|&e| e <= n));
                    assert!(GeneratorPattern::admits(m, n));
                }
            }
        }
    }
}

#[test]
fn extreme_strata_match_direct_constructions() {
    for a in 1..=4 {
        for b in 1..=5 {
            for n in 1..=4u32 {
                let strata = closed_form_strata(a, b, n, usize::MAX).unwrap();

                let s0: BTreeSet<Vec<u32>> = strata[0].iter().map(|m| m.alpha().to_vec()).collect();
                let clique: BTreeSet<Vec<u32>> = complete_graph_power_generators(a, n)
                    .unwrap()
                    .gens()
                    .iter()
                    .map(|m| m.exponents().to_vec())
                    .collect();
                assert_eq!(s0, clique, "s = 0 at ({a},{b},{n})");

                let top: BTreeSet<_> = strata[n as usize].iter().cloned().collect();
                let cross: BTreeSet<_> = cross_power_generators(a, b, n)
                    .unwrap()
                    .gens()
                    .iter()
                    .cloned()
                    .collect();
                assert_eq!(top, cross, "s = n at ({a},{b},{n})");
            }
        }
    }
}

#[test]
fn star_reduction() {
    for b in 1..=8u64 {
        for n in 1..=6u64 {
            assert_eq!(count_generators(1, b, n), star_count(b, n), "b={b} n={n}");
        }
    }
}

#[test]
fn star_shape() {
    for b in 1..=4 {
        for n in 1..=4u32 {
            let g = closed_form_generators(1, b, n).unwrap();
            assert!(g
                .gens()
                .iter()
                .all(|m| m.alpha() == [n] && m.y_degree() == n));
        }
    }
}

#[test]
fn radicality_and_decomposition() {
    for a in 1..=5 {
        for b in 1..=5 {
            let model = EdgeIdealModel::from_parameters(a, b).unwrap();
            assert!(model.ideal().is_squarefree());
            assert!(verify_primary_decomposition(&model).unwrap(), "({a},{b})");

            let d = primary_decomposition(a, b).unwrap();
            assert_eq!(d.components().len(), a + 1);
            let mut sizes: Vec<usize> = d.components().iter().map(BTreeSet::len).collect();
            sizes.sort();
            assert_eq!(sizes[0], a);
            assert!(sizes[1..].iter().all(|&s| s == a + b - 1));

            let hd = height_and_dim(a, b).unwrap();
            assert_eq!((hd.height, hd.dim, hd.unmixed), (a, b, b == 1));
        }
    }
}

#[test]
fn square_of_edge_ideal_is_not_squarefree() {
    let sq = EdgeIdealModel::from_parameters(3, 4)
        .unwrap()
        .ideal()
        .power(2)
        .unwrap();
    assert!(!sq.is_squarefree());
    assert!(sq.gen_strings().contains(&"x1^2*x2*x3".to_string()));
}
