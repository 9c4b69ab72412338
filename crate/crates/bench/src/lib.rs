//! Fixtures shared by the benchmarks.

use srep_core::pairdb::{PairDb, SymmetricPair};
use srep_core::{RootVec, Q};

/// Every pair of the built-in database at `p <= p_max`, `n <= n_max`.
pub fn instances(p_max: i64, n_max: i64) -> Vec<SymmetricPair> {
    let db = PairDb::embedded().expect("built-in database");
    db.pairs()
        .iter()
        .flat_map(|d| {
            d.param_grid(p_max, n_max)
                .into_iter()
                .map(|p| d.instantiate(p).expect("valid parameters"))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Deterministic chamber points: positive rational combinations of the dual
/// basis, one per subset of basis vectors (capped at `limit`).
pub fn chamber_points(pair: &SymmetricPair, limit: usize) -> Vec<RootVec> {
    let basis = pair.system().dual_basis();
    let dim = basis[0].dim();
    (1u64..(1 << basis.len()))
        .take(limit)
        .map(|mask| {
            basis
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .fold(RootVec::zero(dim), |acc, (i, w)| {
                    acc.add_scaled(Q::new(i as i64 + 1, 2), w)
                })
        })
        .collect()
}
