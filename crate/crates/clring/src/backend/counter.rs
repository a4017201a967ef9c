//! Per-thread operation accounting for the pairing engine.
//!
//! Tallies the four costly operation classes: pairings, G1 scalar
//! multiplications, target-group exponentiations and MapToPoint hashes.
//! Point additions, scalar-field arithmetic and hashes to Z_q are
//! deliberately not tracked. Counters are thread-local: a measurement
//! session is valid on a single thread between a reset and a report.

use std::cell::Cell;

use serde::Serialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OpCounter {
    pub pairings: u64,
    pub g1_scalar_muls: u64,
    pub gt_exps: u64,
    pub map_to_point_hashes: u64,
}

thread_local! {
    static COUNTER: Cell<OpCounter> = const { Cell::new(OpCounter {
        pairings: 0,
        g1_scalar_muls: 0,
        gt_exps: 0,
        map_to_point_hashes: 0,
    }) };
}

/// Zeroes the current thread's tallies.
pub fn counter_reset() {
    COUNTER.with(|c| c.set(OpCounter::default()));
}

/// Tallies accumulated on the current thread since the last reset.
pub fn counter_report() -> OpCounter {
    COUNTER.with(|c| c.get())
}

fn bump(f: impl FnOnce(&mut OpCounter)) {
    COUNTER.with(|c| {
        let mut v = c.get();
        f(&mut v);
        c.set(v);
    });
}

pub(crate) fn count_pairing() {
    bump(|c| c.pairings += 1);
}

pub(crate) fn count_g1_mul() {
    bump(|c| c.g1_scalar_muls += 1);
}

pub(crate) fn count_gt_exp() {
    bump(|c| c.gt_exps += 1);
}

pub(crate) fn count_map_to_point() {
    bump(|c| c.map_to_point_hashes += 1);
}
