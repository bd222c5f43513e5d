//! Timing harness for `alcove bench`: the chain-walk character model against
//! the Demazure-operator recursion on V_ρ across small systems.
//!
//! Timings are machine-dependent and reported as raw measurements only; the
//! machine-independent part (the admissible-subset count equals the module
//! dimension, and the two characters agree) is asserted.

use std::time::Instant;

use crate::characters::{
    character_diff, demazure_character_via_operators, demazure_character_with_count, weyl_dimension,
};
use crate::error::{internal, Result};
use crate::root_system::{Family, RootSystem};
use crate::weyl::longest_element;

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub family: String,
    pub rank: usize,
    pub lambda: String,
    /// ℓ(u) for the Demazure element (here u = w∘).
    pub length_u: u32,
    /// Length of the reduced chain.
    pub chain_len: usize,
    /// Number of admissible subsets (equals dim V_λ).
    pub subsets: u64,
    pub millis_model: f64,
    pub millis_oracle: f64,
}

/// Time V_ρ in A_2, A_3, B_2, B_3 through both routes.
pub fn run() -> Result<Vec<BenchRow>> {
    let systems = [
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
    ];
    let mut rows = Vec::new();
    for (fam, rank) in systems {
        let rs = RootSystem::build(fam, rank)?;
        let rho = rs.rho().clone();
        let w0 = longest_element(&rs);
        let chain = crate::alcove::build_reduced_chain(&rs, &rho)?;

        let t0 = Instant::now();
        let (model, subsets) = demazure_character_with_count(&rs, &rho, &w0)?;
        let millis_model = t0.elapsed().as_secs_f64() * 1e3;

        let t1 = Instant::now();
        let oracle = demazure_character_via_operators(&rs, &rho, &w0)?;
        let millis_oracle = t1.elapsed().as_secs_f64() * 1e3;

        if !character_diff(&model, &oracle).is_empty() {
            return Err(internal("benchmark characters disagree between routes"));
        }
        if subsets != weyl_dimension(&rs, &rho)? {
            return Err(internal(
                "benchmark subset count differs from the dimension",
            ));
        }
        rows.push(BenchRow {
            family: fam.to_string(),
            rank,
            lambda: format!("[{}]", vec!["1"; rank].join(" ")),
            length_u: w0.length(),
            chain_len: chain.len(),
            subsets,
            millis_model,
            millis_oracle,
        });
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("family,rank,lambda,l,L,subsets,millis_model,millis_oracle\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{:.3},{:.3}\n",
            r.family,
            r.rank,
            r.lambda,
            r.length_u,
            r.chain_len,
            r.subsets,
            r.millis_model,
            r.millis_oracle
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bench_rows_are_consistent() {
        let rows = run().unwrap();
        assert_eq!(rows.len(), 4);
        let subsets: Vec<u64> = rows.iter().map(|r| r.subsets).collect();
        assert_eq!(subsets, vec![8, 64, 16, 512]);
        let csv = to_csv(&rows);
        assert!(csv.starts_with("family,rank,lambda,l,L,subsets,"));
        assert_eq!(csv.lines().count(), 5);
    }
}
