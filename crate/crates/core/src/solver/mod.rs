//! Exact search: weak colourings under structural constraints, chromatic
//! numbers, and resolutions of blockwise-given designs.

mod dlx;
mod engine;
mod resolve;

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::design::{is_weak, rainbow_check, Colouring, Design, PartitionType, Resolution, VerifyError};
use engine::{Engine, Problem, SizeBounds, Stop};

pub use resolve::{find_resolution, ResolveOptions, ResolveOutcome, ResolveStats, Resolved};

/// Branching-point selection policy.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum VariableOrder {
    /// Fewest remaining colours first, ties broken by the number of
    /// already-coloured points sharing a block, then by point index.
    #[default]
    DynamicDegree,
    /// Points by descending block degree, then index, fixed in advance.
    StaticDegree,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub delta: u32,
    pub equitable: bool,
    pub required_type: Option<PartitionType>,
    /// Every block must receive at least this many distinct colours.
    pub min_colours_per_block: usize,
    /// Ask for a rainbow colouring with respect to this resolution.
    pub rainbow: Option<Resolution>,
    pub time_budget: Option<Duration>,
    pub threads: usize,
    pub order: VariableOrder,
}

impl SearchOptions {
    pub fn new(delta: u32) -> Self {
        SearchOptions {
            delta,
            equitable: false,
            required_type: None,
            min_colours_per_block: 2,
            rainbow: None,
            time_budget: None,
            threads: 1,
            order: VariableOrder::default(),
        }
    }

    pub fn equitable(mut self) -> Self {
        self.equitable = true;
        self
    }

    pub fn with_type(mut self, t: PartitionType) -> Self {
        self.required_type = Some(t);
        self
    }

    pub fn min_colours(mut self, m: usize) -> Self {
        self.min_colours_per_block = m;
        self
    }

    pub fn rainbow(mut self, res: Resolution) -> Self {
        self.rainbow = Some(res);
        self
    }

    pub fn budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }

    pub fn threads(mut self, n: usize) -> Self {
        self.threads = n.max(1);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("delta must be between 1 and 64, got {0}")]
    Delta(u32),
    #[error("at least {min} distinct colours per block is impossible with blocks of size {k}")]
    MinColours { min: usize, k: usize },
    #[error("rainbow search needs delta = 3 and blocks of size 3")]
    Rainbow,
    #[error("required type {found} does not match: {reason}")]
    Type { found: String, reason: String },
    #[error("solver produced a colouring that fails verification: {0}")]
    Unsound(String),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Sat(Colouring),
    Unsat,
    Timeout,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn colouring(&self) -> Option<&Colouring> {
        match &self.status {
            SearchStatus::Sat(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_sat(&self) -> bool {
        matches!(self.status, SearchStatus::Sat(_))
    }

    pub fn is_unsat(&self) -> bool {
        self.status == SearchStatus::Unsat
    }
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchStatus::Sat(_) => f.write_str("SAT"),
            SearchStatus::Unsat => f.write_str("UNSAT"),
            SearchStatus::Timeout => f.write_str("TIMEOUT"),
        }
    }
}

fn size_bounds(design: &Design, opts: &SearchOptions) -> Result<Option<SizeBounds>, SearchError> {
    let v = design.v();
    let delta = opts.delta as usize;
    let equitable = SizeBounds::Equitable { low: v / delta, n_high: v % delta };
    let Some(t) = &opts.required_type else {
        return Ok(Some(if opts.equitable { equitable } else { SizeBounds::Free }));
    };
    let type_error = |reason: String| SearchError::Type { found: t.to_string(), reason };
    if t.total() != v {
        return Err(type_error(format!("sizes sum to {}, the design has {v} points", t.total())));
    }
    if t.num_parts() > delta {
        return Err(type_error(format!("{} parts but only {delta} colours", t.num_parts())));
    }
    let mut target = t.sizes();
    target.sort_unstable_by(|a, b| b.cmp(a));
    target.resize(delta, 0);
    if opts.equitable {
        let (lo, hi) = (target.iter().min().copied().unwrap_or(0), target.iter().max().copied().unwrap_or(0));
        if hi > lo + 1 {
            return Ok(None);
        }
    }
    Ok(Some(SizeBounds::Exact(target)))
}

/// Runs the problem, splitting the top of the tree across threads when asked.
fn run(
    problem: &Problem,
    opts: &SearchOptions,
    deadline: Option<Instant>,
    nodes: &mut u64,
) -> Result<Option<Vec<u32>>, Stop> {
    if opts.threads <= 1 {
        let mut engine = Engine::new(problem, deadline, None);
        if !engine.initially_consistent() {
            return Ok(None);
        }
        let found = engine.solve();
        *nodes += engine.nodes;
        return found.map(|ok| ok.then(|| engine.colours()));
    }

    let mut prefixes = Vec::new();
    {
        let mut engine = Engine::new(problem, deadline, None);
        if !engine.initially_consistent() {
            return Ok(None);
        }
        let mut depth = 1;
        loop {
            prefixes.clear();
            engine.frontier(depth, &mut Vec::new(), &mut prefixes);
            if prefixes.len() >= 8 * opts.threads || depth >= problem.v {
                break;
            }
            let longest = prefixes.iter().map(Vec::len).max().unwrap_or(0);
            if longest < depth {
                break;
            }
            depth += 1;
        }
    }

    let cancel = AtomicBool::new(false);
    let next = AtomicUsize::new(0);
    let result: Mutex<(Option<Vec<u32>>, Option<Stop>, u64)> = Mutex::new((None, None, 0));
    std::thread::scope(|scope| {
        for _ in 0..opts.threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= prefixes.len() || cancel.load(Ordering::Relaxed) {
                    return;
                }
                let mut engine = Engine::new(problem, deadline, Some(&cancel));
                if !prefixes[i].iter().all(|&(q, c)| engine.assign(q, c)) {
                    continue;
                }
                let outcome = engine.solve();
                let mut shared = result.lock().expect("worker panicked");
                shared.2 += engine.nodes;
                match outcome {
                    Ok(true) => {
                        if shared.0.is_none() {
                            shared.0 = Some(engine.colours());
                        }
                        cancel.store(true, Ordering::Relaxed);
                        return;
                    }
                    Ok(false) => {}
                    Err(Stop::Cancelled) => return,
                    Err(Stop::Timeout) => {
                        shared.1 = Some(Stop::Timeout);
                        cancel.store(true, Ordering::Relaxed);
                        return;
                    }
                }
            });
        }
    });
    let (found, stop, worker_nodes) = result.into_inner().expect("worker panicked");
    *nodes += worker_nodes;
    match (found, stop) {
        (Some(c), _) => Ok(Some(c)),
        (None, Some(stop)) => Err(stop),
        (None, None) => Ok(None),
    }
}

/// Searches for a weak `delta`-colouring meeting every requested constraint.
///
/// UNSAT is reported only after the whole tree has been explored. Unused
/// colours are interchangeable at every node, so only the first unused
/// colour of each interchangeable group is tried; with a required type,
/// colours are interchangeable only when their target sizes agree.
pub fn search_weak_colouring(design: &Design, opts: &SearchOptions) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    if opts.delta == 0 || opts.delta > 64 {
        return Err(SearchError::Delta(opts.delta));
    }
    let k = design.k();
    if opts.min_colours_per_block > k && design.num_blocks() > 0 {
        return Err(SearchError::MinColours { min: opts.min_colours_per_block, k });
    }
    if opts.rainbow.is_some() && (opts.delta != 3 || k != 3) {
        return Err(SearchError::Rainbow);
    }
    let deadline = opts.time_budget.map(|b| start + b);
    let done = |status, nodes| SearchOutcome { status, stats: SearchStats { nodes, elapsed: start.elapsed() } };

    let mut nodes = 0;
    let base_min = vec![opts.min_colours_per_block as u8; design.num_blocks()];
    let mut found = None;
    if let Some(res) = &opts.rainbow {
        let v = design.v();
        if !v.is_multiple_of(3) {
            return Ok(done(SearchStatus::Unsat, 0));
        }
        let bounds = match size_bounds(design, opts)? {
            Some(SizeBounds::Exact(t)) if t.iter().any(|&s| s != v / 3) => None,
            _ => Some(SizeBounds::Exact(vec![v / 3; 3])),
        };
        if let Some(bounds) = bounds {
            for class in &res.classes {
                let mut min = base_min.clone();
                for &b in &class.blocks {
                    min[b] = 3;
                }
                let problem = Problem::new(design, 3, min, bounds.clone(), opts.order);
                match run(&problem, opts, deadline, &mut nodes) {
                    Ok(Some(c)) => {
                        found = Some(c);
                        break;
                    }
                    Ok(None) => {}
                    Err(_) => return Ok(done(SearchStatus::Timeout, nodes)),
                }
            }
        }
    } else if let Some(bounds) = size_bounds(design, opts)? {
        let problem = Problem::new(design, opts.delta as usize, base_min, bounds, opts.order);
        match run(&problem, opts, deadline, &mut nodes) {
            Ok(c) => found = c,
            Err(_) => return Ok(done(SearchStatus::Timeout, nodes)),
        }
    }

    let Some(colours) = found else {
        return Ok(done(SearchStatus::Unsat, nodes));
    };
    let colouring = Colouring::new(colours, opts.delta).map_err(|e| SearchError::Unsound(e.to_string()))?;
    certify(design, opts, &colouring)?;
    Ok(done(SearchStatus::Sat(colouring), nodes))
}

/// Re-checks a certificate against every requested constraint.
fn certify(design: &Design, opts: &SearchOptions, colouring: &Colouring) -> Result<(), SearchError> {
    let unsound = |what: &str| Err(SearchError::Unsound(what.to_string()));
    if !is_weak(design, colouring)?.ok() {
        return unsound("monochromatic block");
    }
    if design.blocks().any(|b| colouring.distinct_on(b) < opts.min_colours_per_block) {
        return unsound("block below the distinct-colour minimum");
    }
    if opts.equitable && !colouring.is_equitable() {
        return unsound("not equitable");
    }
    if let Some(t) = &opts.required_type {
        if colouring.colour_type() != *t {
            return unsound("wrong colour type");
        }
    }
    if let Some(res) = &opts.rainbow {
        if !rainbow_check(design, res, colouring)?.is_rainbow() {
            return unsound("not rainbow");
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chromatic {
    /// The chromatic number, with a witness colouring.
    Exact { delta: u32, colouring: Colouring },
    /// Every `delta <= max_delta` is UNSAT.
    AboveMax { max_delta: u32 },
    /// The search for `delta` timed out; all smaller values are UNSAT.
    Indeterminate { delta: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticOutcome {
    pub result: Chromatic,
    /// Status and statistics for every `delta` tried, in order.
    pub steps: Vec<(u32, SearchStatus, SearchStats)>,
}

/// Least `delta <= max_delta` admitting a weak colouring. Starts at 2 (or 1
/// when there are no blocks of size above 1) and proves UNSAT for every
/// smaller value on the way.
pub fn chromatic_number(
    design: &Design,
    max_delta: u32,
    budget: Option<Duration>,
    threads: usize,
) -> Result<ChromaticOutcome, SearchError> {
    let start = Instant::now();
    let mut steps = Vec::new();
    let first = if design.num_blocks() == 0 { 1 } else { 2 };
    for delta in first..=max_delta {
        let mut opts = SearchOptions::new(delta).threads(threads);
        if let Some(b) = budget {
            opts = opts.budget(b.saturating_sub(start.elapsed()));
        }
        let outcome = search_weak_colouring(design, &opts)?;
        steps.push((delta, outcome.status.clone(), outcome.stats));
        match outcome.status {
            SearchStatus::Sat(colouring) => {
                return Ok(ChromaticOutcome { result: Chromatic::Exact { delta, colouring }, steps })
            }
            SearchStatus::Timeout => return Ok(ChromaticOutcome { result: Chromatic::Indeterminate { delta }, steps }),
            SearchStatus::Unsat => {}
        }
    }
    Ok(ChromaticOutcome { result: Chromatic::AboveMax { max_delta }, steps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> Design {
        Design::new(7, 3, [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]]).unwrap()
    }

    #[test]
    fn single_block_is_two_colourable() {
        let d = Design::new(3, 3, [[0, 1, 2]]).unwrap();
        assert!(search_weak_colouring(&d, &SearchOptions::new(2)).unwrap().is_sat());
        assert!(search_weak_colouring(&d, &SearchOptions::new(1)).unwrap().is_unsat());
    }

    #[test]
    fn fano_plane_is_three_chromatic() {
        let out = chromatic_number(&fano(), 5, None, 1).unwrap();
        assert!(matches!(out.result, Chromatic::Exact { delta: 3, .. }));
        assert_eq!(out.steps[0].1, SearchStatus::Unsat);
    }

    #[test]
    fn threaded_search_agrees() {
        for delta in 2..=3 {
            let one = search_weak_colouring(&fano(), &SearchOptions::new(delta)).unwrap();
            let four = search_weak_colouring(&fano(), &SearchOptions::new(delta).threads(4)).unwrap();
            assert_eq!(one.is_sat(), four.is_sat());
        }
    }

    #[test]
    fn required_type_and_equitable() {
        let t = PartitionType::parse("1^1 3^2").unwrap();
        let out = search_weak_colouring(&fano(), &SearchOptions::new(3).with_type(t.clone())).unwrap();
        assert_eq!(out.colouring().unwrap().colour_type(), t);
        let eq = search_weak_colouring(&fano(), &SearchOptions::new(3).equitable()).unwrap();
        assert!(eq.colouring().unwrap().is_equitable());
        let bad = PartitionType::parse("1^1 2^1").unwrap();
        assert!(matches!(
            search_weak_colouring(&fano(), &SearchOptions::new(3).with_type(bad)),
            Err(SearchError::Type { .. })
        ));
    }

    #[test]
    fn three_colours_per_block() {
        let out = search_weak_colouring(&fano(), &SearchOptions::new(7).min_colours(3)).unwrap();
        let c = out.colouring().unwrap();
        assert!(fano().blocks().all(|b| c.distinct_on(b) == 3));
        let none = search_weak_colouring(&fano(), &SearchOptions::new(4).min_colours(3)).unwrap();
        // Any two points share a block, so all seven need distinct colours.
        assert!(none.is_unsat());
    }

    #[test]
    fn zero_budget_times_out_on_hard_instances_only() {
        let d = fano();
        let out = search_weak_colouring(&d, &SearchOptions::new(3).budget(Duration::ZERO)).unwrap();
        // Small searches finish before the first clock check.
        assert!(out.is_sat());
    }
}
