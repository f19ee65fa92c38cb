//! Reproduction of the published generator counts for `Z6` and `Z8`.

use num_bigint::BigUint;
use pigraph_core::{
    count_generators, EdgeIdealModel, MonomialIdeal, PrimeIdeal, RingSpec, SplitGraph,
};

use crate::report::{Count, Table1Mismatch, Table1Report, Table1Row};
use crate::CliError;

/// `(ring, generator of P, μ(I), μ(I²), μ(I³))`.
pub const PUBLISHED: [(&str, &str, [u64; 3]); 2] =
    [("Z6", "3", [4, 10, 20]), ("Z8", "2", [15, 94, 378])];

pub fn table1() -> Result<Table1Report, CliError> {
    table1_with(&count_generators)
}

/// Like [`table1`] with the closed-form counter replaced, so a faulty
/// formula can be shown to produce a `FAIL`.
pub fn table1_with(counter: &dyn Fn(u64, u64, u64) -> BigUint) -> Result<Table1Report, CliError> {
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for (spec, gen, published) in PUBLISHED {
        let ring: RingSpec = spec.parse()?;
        let prime = PrimeIdeal::generated_by(&ring, &ring.parse_element(gen)?)?;
        let graph = SplitGraph::from_prime(&ring, &prime)?;
        let model = EdgeIdealModel::from_graph(&graph);
        let (a, b) = (model.a(), model.b());

        let mut closed_form = Vec::new();
        let mut oracle = Vec::new();
        let mut power = MonomialIdeal::unit(a, b);
        for (k, &expected) in published.iter().enumerate() {
            let n = k as u32 + 1;
            power = power.product(model.ideal())?;
            let cf = Count(counter(a as u64, b as u64, n as u64));
            let or = Count::from(power.len());
            for (source, got) in [("closed_form", &cf), ("oracle", &or)] {
                if got.0 != BigUint::from(expected) {
                    mismatches.push(Table1Mismatch {
                        ring: spec.to_string(),
                        n,
                        source: source.to_string(),
                        expected,
                        got: got.clone(),
                    });
                }
            }
            closed_form.push(cf);
            oracle.push(or);
        }
        rows.push(Table1Row {
            ring: ring.to_string(),
            prime: prime.to_string(),
            a,
            b,
            published: published.to_vec(),
            closed_form,
            oracle,
        });
    }
    let status = if mismatches.is_empty() {
        "PASS"
    } else {
        "FAIL"
    }
    .to_string();
    Ok(Table1Report {
        rows,
        mismatches,
        status,
    })
}
