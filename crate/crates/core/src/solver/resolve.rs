//! Recovering a resolution of a design given only by its blocks.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::design::{verify_resolution, Design, Resolution};

use super::dlx::{Dlx, DlxResult};

#[derive(Clone, Debug)]
pub struct ResolveOptions {
    pub time_budget: Option<Duration>,
    /// Most parallel classes enumerated before giving up on the class-level
    /// search and falling back to assigning blocks to classes directly.
    pub class_cap: usize,
    /// Node cap unit: attempt `i` may expand `base_node_cap * luby(i)`
    /// nodes, where `luby` is the sequence 1, 1, 2, 1, 1, 2, 4, ...
    pub base_node_cap: u64,
    /// Seed for the row shuffles used by restarts after the first.
    pub seed: u64,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions { time_budget: None, class_cap: 2_000_000, base_node_cap: 20_000, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResolveOutcome {
    Found(Resolution),
    /// The design has no resolution (established by a complete search).
    NoResolution,
    Timeout,
    /// The point count, block count or point degrees rule out a resolution.
    NotApplicable(String),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ResolveStats {
    /// Parallel classes enumerated, or `None` when the enumeration hit
    /// `class_cap` (or the design has more than 128 points).
    pub candidate_classes: Option<usize>,
    /// Block-level attempts, made only when enumeration was abandoned.
    pub attempts: u32,
    pub nodes: u64,
    /// Node cap of the last attempt.
    pub final_cap: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolved {
    pub outcome: ResolveOutcome,
    pub stats: ResolveStats,
}

impl Resolved {
    pub fn resolution(&self) -> Option<&Resolution> {
        match &self.outcome {
            ResolveOutcome::Found(r) => Some(r),
            _ => None,
        }
    }
}

/// Partitions the blocks into parallel classes by exact cover.
///
/// First every parallel class is enumerated (up to `class_cap`), and the
/// blocks are covered exactly by a choice of those classes. If there are too
/// many classes, a second formulation is searched instead: rows are
/// (block, class) pairs; columns are the blocks and the
/// (class, point) pairs. Classes are interchangeable, so the blocks through
/// point 0 are pinned to classes 0, 1, ... in block order. Each attempt runs
/// under a node cap; an attempt that finishes within its cap is conclusive,
/// otherwise the search restarts with rows and columns shuffled. Caps follow
/// the Luby sequence, which is unbounded, so some attempt eventually runs
/// to completion.
pub fn find_resolution(design: &Design, opts: &ResolveOptions) -> Resolved {
    let start = Instant::now();
    let mut stats = ResolveStats::default();
    let finish = |outcome, mut stats: ResolveStats| {
        stats.elapsed = start.elapsed();
        Resolved { outcome, stats }
    };
    let (v, k, b) = (design.v(), design.k(), design.num_blocks());
    if k == 0 || v == 0 || v % k != 0 || (b * k) % v != 0 {
        return finish(
            ResolveOutcome::NotApplicable(format!("{b} blocks of size {k} on {v} points cannot form parallel classes")),
            stats,
        );
    }
    let r = b * k / v;
    let incidence = design.incidence();
    if let Some(p) = incidence.iter().position(|blocks| blocks.len() != r) {
        return finish(
            ResolveOutcome::NotApplicable(format!("point {p} lies in {} blocks, expected {r}", incidence[p].len())),
            stats,
        );
    }

    let deadline = opts.time_budget.map(|t| start + t);
    if let Some(classes) = parallel_classes(design, &incidence, opts.class_cap) {
        stats.candidate_classes = Some(classes.len());
        let mut dlx = Dlx::new(b, &classes);
        let result = dlx.solve(u64::MAX, deadline);
        stats.nodes = dlx.nodes;
        return match result {
            DlxResult::Found(chosen) => {
                let mut chosen: Vec<Vec<usize>> = chosen.into_iter().map(|c| classes[c].clone()).collect();
                chosen.sort_unstable();
                finish(ResolveOutcome::Found(checked(design, chosen)), stats)
            }
            DlxResult::Exhausted => finish(ResolveOutcome::NoResolution, stats),
            DlxResult::Stopped => finish(ResolveOutcome::Timeout, stats),
        };
    }

    let mut rows: Vec<(usize, usize)> = Vec::with_capacity(b * r);
    for block in 0..b {
        match incidence[0].iter().position(|&x| x == block) {
            Some(pinned) => rows.push((block, pinned)),
            None => rows.extend((0..r).map(|class| (block, class))),
        }
    }
    let columns = b + r * v;
    let mut column_order: Vec<usize> = (0..columns).collect();

    let mut rng = StdRng::seed_from_u64(opts.seed);
    loop {
        stats.attempts += 1;
        let cap = opts.base_node_cap.max(1).saturating_mul(luby(stats.attempts));
        stats.final_cap = cap;
        if stats.attempts > 1 {
            rows.shuffle(&mut rng);
            column_order.shuffle(&mut rng);
        }
        let cover_rows: Vec<Vec<usize>> = rows
            .iter()
            .map(|&(block, class)| {
                let mut cols = vec![column_order[block]];
                cols.extend(design.block(block).iter().map(|&p| column_order[b + class * v + p as usize]));
                cols
            })
            .collect();
        let mut dlx = Dlx::new(columns, &cover_rows);
        let result = dlx.solve(cap, deadline);
        stats.nodes += dlx.nodes;
        match result {
            DlxResult::Found(chosen) => {
                let mut classes = vec![Vec::new(); r];
                for row in chosen {
                    let (block, class) = rows[row];
                    classes[class].push(block);
                }
                for class in &mut classes {
                    class.sort_unstable();
                }
                return finish(ResolveOutcome::Found(checked(design, classes)), stats);
            }
            DlxResult::Exhausted => return finish(ResolveOutcome::NoResolution, stats),
            DlxResult::Stopped => {
                if deadline.is_some_and(|d| Instant::now() >= d) {
                    return finish(ResolveOutcome::Timeout, stats);
                }
            }
        }
    }
}

fn checked(design: &Design, classes: Vec<Vec<usize>>) -> Resolution {
    let res = Resolution::from_full_classes(classes);
    let ok = verify_resolution(design, &res, None).is_ok_and(|rep| rep.ok());
    assert!(ok, "exact cover produced an invalid resolution");
    res
}

/// Every set of blocks partitioning the point set, as sorted block indices,
/// or `None` past `cap` classes.
fn parallel_classes(design: &Design, incidence: &[Vec<usize>], cap: usize) -> Option<Vec<Vec<usize>>> {
    let v = design.v();
    if v > 128 {
        return None;
    }
    let masks: Vec<u128> = design.blocks().map(|b| b.iter().fold(0u128, |m, &p| m | 1 << p)).collect();
    let full = if v == 128 { u128::MAX } else { (1u128 << v) - 1 };
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn walk(
        covered: u128,
        full: u128,
        incidence: &[Vec<usize>],
        masks: &[u128],
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> bool {
        if covered == full {
            let mut class = stack.clone();
            class.sort_unstable();
            out.push(class);
            return out.len() <= cap;
        }
        let p = (!covered).trailing_zeros() as usize;
        for &b in &incidence[p] {
            if masks[b] & covered == 0 {
                stack.push(b);
                let more = walk(covered | masks[b], full, incidence, masks, stack, out, cap);
                stack.pop();
                if !more {
                    return false;
                }
            }
        }
        true
    }
    walk(0, full, incidence, &masks, &mut stack, &mut out, cap).then_some(out)
}

/// The `i`-th term (from 1) of the Luby restart sequence.
fn luby(i: u32) -> u64 {
    let i = u64::from(i);
    let mut k = 1;
    while (1u64 << k) - 1 < i {
        k += 1;
    }
    if (1u64 << k) - 1 == i {
        1 << (k - 1)
    } else {
        luby((i - (1 << (k - 1)) + 1) as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_kts9_blocks() {
        let blocks = [
            [0, 1, 2],
            [3, 4, 5],
            [6, 7, 8],
            [0, 3, 6],
            [1, 4, 7],
            [2, 5, 8],
            [0, 4, 8],
            [1, 5, 6],
            [2, 3, 7],
            [0, 5, 7],
            [1, 3, 8],
            [2, 4, 6],
        ];
        let d = Design::new(9, 3, blocks).unwrap();
        let out = find_resolution(&d, &ResolveOptions::default());
        assert_eq!(out.stats.candidate_classes, Some(4));
        assert_eq!(out.resolution().expect("KTS(9) is resolvable").len(), 4);
        let fallback = find_resolution(&d, &ResolveOptions { class_cap: 1, ..Default::default() });
        assert_eq!(fallback.stats.candidate_classes, None);
        let res = fallback.resolution().expect("KTS(9) is resolvable");
        assert_eq!(res.len(), 4);
        // The first class is pinned to contain the first block through 0.
        assert!(res.classes[0].blocks.contains(&0));
    }

    #[test]
    fn luby_sequence() {
        let terms: Vec<u64> = (1..=15).map(luby).collect();
        assert_eq!(terms, vec![1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8]);
    }

    #[test]
    fn rejects_wrong_order() {
        let fano =
            Design::new(7, 3, [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]]).unwrap();
        assert!(matches!(find_resolution(&fano, &ResolveOptions::default()).outcome, ResolveOutcome::NotApplicable(_)));
    }

    #[test]
    fn detects_non_resolvable() {
        // Every point has degree 2, but no two blocks are disjoint.
        let d = Design::new(6, 3, [[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 5]]).unwrap();
        assert_eq!(find_resolution(&d, &ResolveOptions::default()).outcome, ResolveOutcome::NoResolution);
        let fallback = ResolveOptions { class_cap: 0, ..Default::default() };
        assert_eq!(find_resolution(&d, &fallback).outcome, ResolveOutcome::NoResolution);
    }
}
