//! Backtracking search for weak colourings with per-block distinct-colour
//! minimums and colour-class size bounds.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use crate::design::{Colour, Design, Point};

use super::VariableOrder;

const UNSET: u8 = u8::MAX;

/// Bounds on colour-class sizes.
#[derive(Clone, Debug)]
pub(crate) enum SizeBounds {
    Free,
    /// Colour `c` must end with exactly `target[c]` points.
    Exact(Vec<usize>),
    /// Every class has `low` or `low + 1` points, with exactly `n_high`
    /// classes at `low + 1`.
    Equitable {
        low: usize,
        n_high: usize,
    },
}

/// A fully specified colouring problem.
#[derive(Clone, Debug)]
pub(crate) struct Problem {
    pub v: usize,
    pub k: usize,
    pub delta: usize,
    pub blocks: Vec<u32>,
    pub incidence: Vec<Vec<u32>>,
    /// Minimum number of distinct colours on each block.
    pub min_colours: Vec<u8>,
    pub bounds: SizeBounds,
    /// Colour `c` may be used for the first time only once `opener[c]` is in
    /// use. `None` means no restriction.
    pub opener: Vec<Option<usize>>,
    pub order: VariableOrder,
}

impl Problem {
    pub fn new(design: &Design, delta: usize, min_colours: Vec<u8>, bounds: SizeBounds, order: VariableOrder) -> Self {
        let v = design.v();
        let mut incidence = vec![Vec::new(); v];
        for (b, block) in design.blocks().enumerate() {
            for &p in block {
                incidence[p as usize].push(b as u32);
            }
        }
        let opener = match &bounds {
            Exact(target) => (0..delta).map(|c| (0..c).rev().find(|&d| target[d] == target[c])).collect(),
            _ => (0..delta).map(|c| c.checked_sub(1)).collect(),
        };
        Problem {
            v,
            k: design.k(),
            delta,
            blocks: design.blocks().flatten().copied().collect(),
            incidence,
            min_colours,
            bounds,
            opener,
            order,
        }
    }

    fn block(&self, b: usize) -> &[u32] {
        &self.blocks[b * self.k..(b + 1) * self.k]
    }

    fn max_size(&self, c: usize) -> usize {
        match &self.bounds {
            Free => self.v,
            Exact(t) => t[c],
            Equitable { low, n_high } => low + usize::from(*n_high > 0),
        }
    }
}

use SizeBounds::{Equitable, Exact, Free};

enum Undo {
    Assign(Point),
    Domain(Point, u64),
}

/// Why a search stopped early.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Stop {
    Timeout,
    /// Another worker finished.
    Cancelled,
}

pub(crate) struct Engine<'a> {
    p: &'a Problem,
    colour: Vec<u8>,
    domain: Vec<u64>,
    /// Per block and colour: number of points of that colour.
    count: Vec<u8>,
    assigned: Vec<u8>,
    distinct: Vec<u8>,
    /// Sum over blocks through the point of assigned points in that block.
    score: Vec<u32>,
    used: Vec<usize>,
    n_at_high: usize,
    unassigned: usize,
    trail: Vec<Undo>,
    static_order: Vec<Point>,
    pub nodes: u64,
    deadline: Option<Instant>,
    cancel: Option<&'a AtomicBool>,
}

impl<'a> Engine<'a> {
    pub fn new(p: &'a Problem, deadline: Option<Instant>, cancel: Option<&'a AtomicBool>) -> Self {
        let full = if p.delta == 64 { u64::MAX } else { (1u64 << p.delta) - 1 };
        let mut static_order: Vec<Point> = (0..p.v as Point).collect();
        static_order.sort_by_key(|&q| std::cmp::Reverse(p.incidence[q as usize].len()));
        Engine {
            p,
            colour: vec![UNSET; p.v],
            domain: vec![full; p.v],
            count: vec![0; p.blocks.len() / p.k.max(1) * p.delta],
            assigned: vec![0; p.blocks.len() / p.k.max(1)],
            distinct: vec![0; p.blocks.len() / p.k.max(1)],
            score: vec![0; p.v],
            used: vec![0; p.delta],
            n_at_high: 0,
            unassigned: p.v,
            trail: Vec::new(),
            static_order,
            nodes: 0,
            deadline,
            cancel,
        }
    }

    /// Blocks already unsatisfiable before any assignment.
    pub fn initially_consistent(&self) -> bool {
        (0..self.assigned.len())
            .all(|b| self.p.k >= self.p.min_colours[b] as usize && self.p.min_colours[b] as usize <= self.p.delta)
            && self.counts_feasible()
    }

    pub fn colours(&self) -> Vec<Colour> {
        self.colour.iter().map(|&c| c as Colour).collect()
    }

    fn set_domain(&mut self, q: Point, new: u64) -> bool {
        let old = self.domain[q as usize];
        if old != new {
            self.trail.push(Undo::Domain(q, old));
            self.domain[q as usize] = new;
        }
        new != 0
    }

    fn high_for(&self, c: usize) -> usize {
        match &self.p.bounds {
            Equitable { low, n_high } => {
                if self.used[c] > *low || self.n_at_high < *n_high {
                    low + usize::from(*n_high > 0)
                } else {
                    *low
                }
            }
            _ => self.p.max_size(c),
        }
    }

    fn counts_feasible(&self) -> bool {
        let deficit: usize = match &self.p.bounds {
            Free => 0,
            Exact(t) => (0..self.p.delta).map(|c| t[c].saturating_sub(self.used[c])).sum(),
            Equitable { low, .. } => (0..self.p.delta).map(|c| low.saturating_sub(self.used[c])).sum(),
        };
        deficit <= self.unassigned
    }

    /// Assigns `c` to `q` and propagates. Returns false on a conflict; the
    /// trail still records everything done, so `undo_to` restores state.
    pub fn assign(&mut self, q: Point, c: usize) -> bool {
        let p = self.p;
        self.colour[q as usize] = c as u8;
        self.trail.push(Undo::Assign(q));
        self.unassigned -= 1;
        self.used[c] += 1;
        let mut ok = if let Equitable { low, n_high } = p.bounds {
            if n_high > 0 && self.used[c] == low + 1 {
                self.n_at_high += 1;
            }
            self.used[c] <= low + usize::from(n_high > 0) && self.n_at_high <= n_high
        } else {
            self.used[c] <= p.max_size(c)
        };
        ok &= self.counts_feasible();
        for &b in &p.incidence[q as usize] {
            let b = b as usize;
            let slot = b * p.delta + c;
            self.count[slot] += 1;
            if self.count[slot] == 1 {
                self.distinct[b] += 1;
            }
            self.assigned[b] += 1;
            for &r in p.block(b) {
                if r != q {
                    self.score[r as usize] += 1;
                }
            }
        }
        if !ok {
            return false;
        }
        for &b in &p.incidence[q as usize] {
            let b = b as usize;
            let free = p.k - self.assigned[b] as usize;
            let distinct = self.distinct[b] as usize;
            let need = p.min_colours[b] as usize;
            if distinct + free < need {
                ok = false;
                break;
            }
            if free > 0 && distinct + free == need {
                let mut present = 0u64;
                for d in 0..p.delta {
                    if self.count[b * p.delta + d] > 0 {
                        present |= 1 << d;
                    }
                }
                for &r in p.block(b) {
                    if self.colour[r as usize] == UNSET && !self.set_domain(r, self.domain[r as usize] & !present) {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    break;
                }
            }
        }
        ok
    }

    pub fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().expect("trail longer than mark") {
                Undo::Domain(q, old) => self.domain[q as usize] = old,
                Undo::Assign(q) => {
                    let p = self.p;
                    let c = self.colour[q as usize] as usize;
                    for &b in &p.incidence[q as usize] {
                        let b = b as usize;
                        let slot = b * p.delta + c;
                        self.count[slot] -= 1;
                        if self.count[slot] == 0 {
                            self.distinct[b] -= 1;
                        }
                        self.assigned[b] -= 1;
                        for &r in p.block(b) {
                            if r != q {
                                self.score[r as usize] -= 1;
                            }
                        }
                    }
                    if let Equitable { low, n_high } = p.bounds {
                        if n_high > 0 && self.used[c] == low + 1 {
                            self.n_at_high -= 1;
                        }
                    }
                    self.used[c] -= 1;
                    self.unassigned += 1;
                    self.colour[q as usize] = UNSET;
                }
            }
        }
    }

    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    /// Colours that may still be given to a fresh point: not full, and
    /// (for unused colours) only the first of each interchangeable group.
    fn allowed_mask(&self) -> u64 {
        let mut mask = 0u64;
        for c in 0..self.p.delta {
            if self.used[c] >= self.high_for(c) {
                continue;
            }
            let open = self.used[c] > 0 || self.p.opener[c].is_none_or(|d| self.used[d] > 0);
            if open {
                mask |= 1 << c;
            }
        }
        mask
    }

    /// The next point to branch on and its candidate colours, or `None`
    /// when every point is coloured.
    fn choose(&self) -> Option<(Point, u64)> {
        let allowed = self.allowed_mask();
        match self.p.order {
            VariableOrder::StaticDegree => self
                .static_order
                .iter()
                .find(|&&q| self.colour[q as usize] == UNSET)
                .map(|&q| (q, self.domain[q as usize] & allowed)),
            VariableOrder::DynamicDegree => {
                let mut best: Option<(u32, u32, Point, u64)> = None;
                for q in 0..self.p.v {
                    if self.colour[q] != UNSET {
                        continue;
                    }
                    let cands = self.domain[q] & allowed;
                    let size = cands.count_ones();
                    if size == 0 {
                        return Some((q as Point, 0));
                    }
                    let key = (size, u32::MAX - self.score[q]);
                    if best.is_none_or(|(s, sc, _, _)| key < (s, sc)) {
                        best = Some((key.0, key.1, q as Point, cands));
                    }
                }
                best.map(|(_, _, q, cands)| (q, cands))
            }
        }
    }

    fn check_stop(&mut self) -> Result<(), Stop> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            if self.cancel.is_some_and(|c| c.load(Ordering::Relaxed)) {
                return Err(Stop::Cancelled);
            }
            if self.deadline.is_some_and(|d| Instant::now() >= d) {
                return Err(Stop::Timeout);
            }
        }
        Ok(())
    }

    /// Depth-first search from the current state. `Ok(true)` leaves the
    /// solution in place.
    pub fn solve(&mut self) -> Result<bool, Stop> {
        self.check_stop()?;
        let Some((q, mut cands)) = self.choose() else {
            return Ok(true);
        };
        while cands != 0 {
            let c = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let mark = self.mark();
            if self.assign(q, c) && self.solve()? {
                return Ok(true);
            }
            self.undo_to(mark);
        }
        Ok(false)
    }

    /// Decision prefixes of the subtrees at `depth`, in search order. A
    /// complete colouring found on the way is returned as a single prefix
    /// of full length.
    pub fn frontier(&mut self, depth: usize, prefix: &mut Vec<(Point, usize)>, out: &mut Vec<Vec<(Point, usize)>>) {
        if depth == 0 {
            out.push(prefix.clone());
            return;
        }
        let Some((q, mut cands)) = self.choose() else {
            out.push(prefix.clone());
            return;
        };
        while cands != 0 {
            let c = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let mark = self.mark();
            if self.assign(q, c) {
                prefix.push((q, c));
                self.frontier(depth - 1, prefix, out);
                prefix.pop();
            }
            self.undo_to(mark);
        }
    }
}
