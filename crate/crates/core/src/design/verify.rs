//! Verification predicates. Every check is a pure function of its inputs and
//! returns a [`Report`] listing (a bounded number of) violations. Inputs that
//! are structurally unusable for a check return a [`VerifyError`] instead.

use std::fmt;

use thiserror::Error;

use super::types::{Colouring, Design, GroupPartition, Point, Resolution};

/// Reports keep at most this many violations, but always count all of them.
pub const DEFAULT_VIOLATION_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("class {class} refers to block {block}, but the design has {num_blocks} blocks")]
    BlockIndexOutOfRange { class: usize, block: usize, num_blocks: usize },
    #[error("class {class} misses group {group}, but only {num_groups} groups exist")]
    GroupIndexOutOfRange { class: usize, group: usize, num_groups: usize },
    #[error("class {class} is labelled with a missing group but no groups were supplied")]
    GroupsRequired { class: usize },
    #[error("{what} has {found} points, the design has {expected}")]
    PointCountMismatch { what: &'static str, expected: usize, found: usize },
    #[error("rainbow colourings use exactly 3 colours, got {delta}")]
    RainbowNeedsThreeColours { delta: u32 },
    #[error("block size {k} is not supported here (expected {expected})")]
    BlockSize { k: usize, expected: usize },
    #[error("point {point} is outside the design")]
    PointOutOfRange { point: Point },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An unordered pair lies in `count` blocks instead of exactly one.
    PairCount {
        a: Point,
        b: Point,
        count: usize,
    },
    /// Two points of one group share a block.
    PairInGroup {
        a: Point,
        b: Point,
        group: usize,
    },
    BlockMeetsGroupTwice {
        block: usize,
        group: usize,
    },
    BlockUnassigned {
        block: usize,
    },
    BlockInSeveralClasses {
        block: usize,
    },
    /// A class covers `point` `count` times; the expected count is 1, or 0
    /// for points of the group a partial class misses.
    ClassCoverage {
        class: usize,
        point: Point,
        count: usize,
    },
    ClassNotLabelled {
        class: usize,
    },
    GroupMissCount {
        group: usize,
        expected: usize,
        found: usize,
    },
    OddGroup {
        group: usize,
        size: usize,
    },
    Monochromatic {
        block: usize,
    },
    ColourClassSize {
        colour: u32,
        size: usize,
        expected: usize,
    },
    NoRainbowClass,
    BlockMeetsSubset {
        block: usize,
        count: usize,
    },
    SubsetClassNotParallel {
        class: usize,
    },
    SubsetClassCount {
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::PairCount { a, b, count } => write!(f, "pair {a} {b} covered {count} times"),
            Violation::PairInGroup { a, b, group } => write!(f, "pair {a} {b} of group {group} lies in a block"),
            Violation::BlockMeetsGroupTwice { block, group } => {
                write!(f, "block {block} meets group {group} more than once")
            }
            Violation::BlockUnassigned { block } => write!(f, "block {block} is in no class"),
            Violation::BlockInSeveralClasses { block } => write!(f, "block {block} is in several classes"),
            Violation::ClassCoverage { class, point, count } => {
                write!(f, "class {class} covers point {point} {count} times")
            }
            Violation::ClassNotLabelled { class } => write!(f, "class {class} misses no group"),
            Violation::GroupMissCount { group, expected, found } => {
                write!(f, "group {group} missed by {found} classes, expected {expected}")
            }
            Violation::OddGroup { group, size } => write!(f, "group {group} has odd size {size}"),
            Violation::Monochromatic { block } => write!(f, "block {block} is monochromatic"),
            Violation::ColourClassSize { colour, size, expected } => {
                write!(f, "colour {colour} used {size} times, expected {expected}")
            }
            Violation::NoRainbowClass => write!(f, "no class has every block in three colours"),
            Violation::BlockMeetsSubset { block, count } => {
                write!(f, "block {block} meets the subset in {count} points")
            }
            Violation::SubsetClassNotParallel { class } => {
                write!(f, "class {class} does not restrict to a parallel class of the subset")
            }
            Violation::SubsetClassCount { expected, found } => {
                write!(f, "subset has {found} induced classes, expected {expected}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub check: &'static str,
    pub violations: Vec<Violation>,
    /// Total number of violations found, including those not kept.
    pub total: usize,
    pub notes: Vec<String>,
    limit: usize,
}

impl Report {
    pub fn new(check: &'static str) -> Self {
        Report { check, violations: Vec::new(), total: 0, notes: Vec::new(), limit: DEFAULT_VIOLATION_LIMIT }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub fn ok(&self) -> bool {
        self.total == 0
    }

    pub fn push(&mut self, v: Violation) {
        self.total += 1;
        if self.violations.len() < self.limit {
            self.violations.push(v);
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Folds another report's violations and notes into this one.
    pub fn absorb(&mut self, other: Report) {
        for v in other.violations {
            if self.violations.len() < self.limit {
                self.violations.push(v);
            }
        }
        self.total += other.total;
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check: {}", self.check)?;
        writeln!(f, "ok: {}", self.ok())?;
        writeln!(f, "violations: {}", self.total)?;
        for v in &self.violations {
            writeln!(f, "violation: {v}")?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

/// Symmetric pair counter over `0..v`.
struct PairTable {
    v: usize,
    counts: Vec<u8>,
}

impl PairTable {
    fn new(v: usize) -> Self {
        PairTable { v, counts: vec![0; v * v] }
    }

    fn add_block(&mut self, block: &[Point]) {
        for (i, &a) in block.iter().enumerate() {
            for &b in &block[i + 1..] {
                let slot = &mut self.counts[a as usize * self.v + b as usize];
                *slot = slot.saturating_add(1);
            }
        }
    }

    fn count(&self, a: Point, b: Point) -> usize {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.counts[a as usize * self.v + b as usize] as usize
    }
}

/// Every unordered pair of points lies in exactly one block.
pub fn verify_pairwise_balance(design: &Design) -> Report {
    let mut report = Report::new("pairwise-balance");
    let v = design.v();
    let mut pairs = PairTable::new(v);
    for block in design.blocks() {
        pairs.add_block(block);
    }
    for a in 0..v as Point {
        for b in a + 1..v as Point {
            let count = pairs.count(a, b);
            if count != 1 {
                report.push(Violation::PairCount { a, b, count });
            }
        }
    }
    if v == 3 && design.k() == 3 && design.num_blocks() == 1 {
        report.note("degenerate triple system on 3 points");
    }
    report
}

fn check_class_indices(design: &Design, res: &Resolution, groups: Option<&GroupPartition>) -> Result<(), VerifyError> {
    let num_blocks = design.num_blocks();
    for (c, class) in res.classes.iter().enumerate() {
        if let Some(&block) = class.blocks.iter().find(|&&b| b >= num_blocks) {
            return Err(VerifyError::BlockIndexOutOfRange { class: c, block, num_blocks });
        }
        if let Some(g) = class.missing_group {
            let groups = groups.ok_or(VerifyError::GroupsRequired { class: c })?;
            if g >= groups.len() {
                return Err(VerifyError::GroupIndexOutOfRange { class: c, group: g, num_groups: groups.len() });
            }
        }
    }
    Ok(())
}

/// The classes partition the block set; a full class partitions all points and
/// a class labelled with missing group `G` partitions the points outside `G`.
pub fn verify_resolution(
    design: &Design,
    res: &Resolution,
    groups: Option<&GroupPartition>,
) -> Result<Report, VerifyError> {
    check_class_indices(design, res, groups)?;
    if let Some(groups) = groups {
        if groups.v() != design.v() {
            return Err(VerifyError::PointCountMismatch {
                what: "group partition",
                expected: design.v(),
                found: groups.v(),
            });
        }
    }
    let mut report = Report::new("resolution");
    let mut uses = vec![0usize; design.num_blocks()];
    for class in &res.classes {
        for &b in &class.blocks {
            uses[b] += 1;
        }
    }
    for (block, &n) in uses.iter().enumerate() {
        match n {
            0 => report.push(Violation::BlockUnassigned { block }),
            1 => {}
            _ => report.push(Violation::BlockInSeveralClasses { block }),
        }
    }
    let mut cover = vec![0usize; design.v()];
    for (c, class) in res.classes.iter().enumerate() {
        cover.iter_mut().for_each(|x| *x = 0);
        for &b in &class.blocks {
            for &p in design.block(b) {
                cover[p as usize] += 1;
            }
        }
        for (p, &count) in cover.iter().enumerate() {
            let in_hole = match (class.missing_group, groups) {
                (Some(g), Some(groups)) => groups.group_of(p as Point) == g,
                _ => false,
            };
            let expected = usize::from(!in_hole);
            if count != expected {
                report.push(Violation::ClassCoverage { class: c, point: p as Point, count });
            }
        }
    }
    Ok(report)
}

/// Cross-group pairs lie in exactly one block and no block meets a group
/// twice.
pub fn verify_gdd(design: &Design, groups: &GroupPartition) -> Result<Report, VerifyError> {
    if groups.v() != design.v() {
        return Err(VerifyError::PointCountMismatch {
            what: "group partition",
            expected: design.v(),
            found: groups.v(),
        });
    }
    let mut report = Report::new("gdd");
    for (b, block) in design.blocks().enumerate() {
        for (i, &x) in block.iter().enumerate() {
            if block[..i].iter().any(|&y| groups.group_of(y) == groups.group_of(x)) {
                report.push(Violation::BlockMeetsGroupTwice { block: b, group: groups.group_of(x) });
                break;
            }
        }
    }
    let v = design.v();
    let mut pairs = PairTable::new(v);
    for block in design.blocks() {
        pairs.add_block(block);
    }
    for a in 0..v as Point {
        for b in a + 1..v as Point {
            let count = pairs.count(a, b);
            let same = groups.group_of(a) == groups.group_of(b);
            if same && count > 0 {
                report.push(Violation::PairInGroup { a, b, group: groups.group_of(a) });
            } else if !same && count != 1 {
                report.push(Violation::PairCount { a, b, count });
            }
        }
    }
    Ok(report)
}

/// A frame: a GDD whose classes are all partial, each partitioning the points
/// outside its missing group, with every group `G` missed by `|G|/2` classes.
pub fn verify_frame(design: &Design, groups: &GroupPartition, res: &Resolution) -> Result<Report, VerifyError> {
    let mut report = verify_gdd(design, groups)?;
    report.check = "frame";
    for (group, g) in groups.groups().iter().enumerate() {
        if g.len() % 2 == 1 {
            report.push(Violation::OddGroup { group, size: g.len() });
        }
    }
    for (c, class) in res.classes.iter().enumerate() {
        if class.missing_group.is_none() {
            report.push(Violation::ClassNotLabelled { class: c });
        }
    }
    report.absorb(verify_resolution(design, res, Some(groups))?);
    let mut missed = vec![0usize; groups.len()];
    for class in &res.classes {
        if let Some(g) = class.missing_group {
            missed[g] += 1;
        }
    }
    for (group, &found) in missed.iter().enumerate() {
        let expected = groups.group(group).len() / 2;
        if found != expected {
            report.push(Violation::GroupMissCount { group, expected, found });
        }
    }
    Ok(report)
}

fn check_colouring_len(design: &Design, colouring: &Colouring) -> Result<(), VerifyError> {
    if colouring.v() != design.v() {
        return Err(VerifyError::PointCountMismatch { what: "colouring", expected: design.v(), found: colouring.v() });
    }
    Ok(())
}

/// No block is monochromatic.
pub fn is_weak(design: &Design, colouring: &Colouring) -> Result<Report, VerifyError> {
    check_colouring_len(design, colouring)?;
    let mut report = Report::new("weak-colouring");
    for (b, block) in design.blocks().enumerate() {
        let c = colouring.colour(block[0]);
        if block.iter().all(|&p| colouring.colour(p) == c) {
            report.push(Violation::Monochromatic { block: b });
        }
    }
    Ok(report)
}

/// Outcome of [`rainbow_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowReport {
    pub report: Report,
    /// Classes in which every block receives all three colours.
    pub rainbow_classes: Vec<usize>,
}

impl RainbowReport {
    pub fn is_rainbow(&self) -> bool {
        self.report.ok()
    }

    /// The rainbow parallel class, when the colouring is rainbow.
    pub fn rainbow_class(&self) -> Option<usize> {
        if self.is_rainbow() {
            self.rainbow_classes.first().copied()
        } else {
            None
        }
    }
}

/// Colour classes all of size `v/3` and some parallel class with every block
/// in three colours.
pub fn rainbow_check(design: &Design, res: &Resolution, colouring: &Colouring) -> Result<RainbowReport, VerifyError> {
    check_colouring_len(design, colouring)?;
    if colouring.delta() != 3 {
        return Err(VerifyError::RainbowNeedsThreeColours { delta: colouring.delta() });
    }
    check_class_indices(design, res, None)?;
    let mut report = Report::new("rainbow");
    let expected = design.v() / 3;
    for (colour, &size) in colouring.class_sizes().iter().enumerate() {
        if size != expected || !design.v().is_multiple_of(3) {
            report.push(Violation::ColourClassSize { colour: colour as u32, size, expected });
        }
    }
    let rainbow_classes: Vec<usize> = res
        .classes
        .iter()
        .enumerate()
        .filter(|(_, class)| {
            !class.blocks.is_empty() && class.blocks.iter().all(|&b| colouring.distinct_on(design.block(b)) == 3)
        })
        .map(|(c, _)| c)
        .collect();
    if rainbow_classes.is_empty() {
        report.push(Violation::NoRainbowClass);
    }
    Ok(RainbowReport { report, rainbow_classes })
}

/// `subset` carries a sub-KTS: every block meets it in 0, 1 or 3 points, the
/// blocks inside it form a triple system on it, and every class restricts to
/// either nothing or a parallel class of the subset.
pub fn verify_subsystem(design: &Design, res: &Resolution, subset: &[Point]) -> Result<Report, VerifyError> {
    if design.k() != 3 {
        return Err(VerifyError::BlockSize { k: design.k(), expected: 3 });
    }
    check_class_indices(design, res, None)?;
    let mut inside = vec![false; design.v()];
    for &p in subset {
        *inside.get_mut(p as usize).ok_or(VerifyError::PointOutOfRange { point: p })? = true;
    }
    let mut report = Report::new("subsystem");
    let (sub, _, map) = induced_subsystem(design, res, subset);
    for (b, block) in design.blocks().enumerate() {
        let count = block.iter().filter(|&&p| inside[p as usize]).count();
        if count == 2 {
            report.push(Violation::BlockMeetsSubset { block: b, count });
        }
    }
    let pair = verify_pairwise_balance(&sub);
    for v in pair.violations.iter() {
        if let Violation::PairCount { a, b, count } = *v {
            report.push(Violation::PairCount { a: map[a as usize], b: map[b as usize], count });
        }
    }
    report.total += pair.total - pair.violations.len();
    let mut induced = 0;
    for (c, class) in res.classes.iter().enumerate() {
        let mut cover = vec![0usize; subset.len()];
        let mut any = false;
        for &b in &class.blocks {
            let block = design.block(b);
            if block.iter().all(|&p| inside[p as usize]) {
                any = true;
                for &p in block {
                    let i = subset.iter().position(|&q| q == p).unwrap();
                    cover[i] += 1;
                }
            }
        }
        if any {
            induced += 1;
            if cover.iter().any(|&n| n != 1) {
                report.push(Violation::SubsetClassNotParallel { class: c });
            }
        }
    }
    let expected = subset.len().saturating_sub(1) / 2;
    if induced != expected {
        report.push(Violation::SubsetClassCount { expected, found: induced });
    }
    Ok(report)
}

/// The design induced on `subset`, relabelled to `0..subset.len()` in the
/// order given, with the induced classes (host classes with no block inside
/// the subset are dropped) and the map from new labels back to host points.
pub fn induced_subsystem(design: &Design, res: &Resolution, subset: &[Point]) -> (Design, Resolution, Vec<Point>) {
    let mut label = vec![u32::MAX; design.v()];
    for (i, &p) in subset.iter().enumerate() {
        label[p as usize] = i as Point;
    }
    let mut blocks = Vec::new();
    let mut new_index = vec![usize::MAX; design.num_blocks()];
    for (b, block) in design.blocks().enumerate() {
        if block.iter().all(|&p| label[p as usize] != u32::MAX) {
            new_index[b] = blocks.len();
            blocks.push(block.iter().map(|&p| label[p as usize]).collect::<Vec<_>>());
        }
    }
    let sub = Design::new(subset.len(), design.k(), blocks).expect("induced blocks inherit validity");
    let classes = res
        .classes
        .iter()
        .map(|c| c.blocks.iter().filter(|&&b| new_index[b] != usize::MAX).map(|&b| new_index[b]).collect::<Vec<_>>())
        .filter(|c| !c.is_empty())
        .collect();
    (sub, Resolution::from_full_classes(classes), subset.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::ResolutionClass;

    fn kts9() -> (Design, Resolution) {
        // Columns of the classic table, 0-based.
        let classes: [[[Point; 3]; 3]; 4] = [
            [[0, 1, 2], [3, 4, 5], [6, 7, 8]],
            [[0, 3, 6], [1, 4, 7], [2, 5, 8]],
            [[0, 4, 8], [1, 5, 6], [2, 3, 7]],
            [[0, 5, 7], [1, 3, 8], [2, 4, 6]],
        ];
        let blocks: Vec<[Point; 3]> = classes.iter().flatten().copied().collect();
        let design = Design::new(9, 3, blocks).unwrap();
        let res = Resolution::from_full_classes((0..4).map(|c| (3 * c..3 * c + 3).collect()).collect());
        (design, res)
    }

    #[test]
    fn duplicate_pair_is_reported() {
        let d = Design::new(4, 3, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let r = verify_pairwise_balance(&d);
        assert!(!r.ok());
        assert!(r.violations.contains(&Violation::PairCount { a: 0, b: 1, count: 2 }));
    }

    #[test]
    fn report_keeps_bounded_violations() {
        let d = Design::new(40, 3, [[0, 1, 2]]).unwrap();
        let r = verify_pairwise_balance(&d);
        assert_eq!(r.violations.len(), DEFAULT_VIOLATION_LIMIT);
        assert_eq!(r.total, 40 * 39 / 2 - 3);
    }

    #[test]
    fn broken_class_is_reported() {
        let (d, mut res) = kts9();
        let moved = res.classes[0].blocks.pop().unwrap();
        res.classes[1].blocks.push(moved);
        let r = verify_resolution(&d, &res, None).unwrap();
        assert!(!r.ok());
        assert!(r.violations.iter().any(|v| matches!(v, Violation::ClassCoverage { class: 0, .. })));
    }

    #[test]
    fn out_of_range_block_index_is_an_error() {
        let (d, mut res) = kts9();
        res.classes[0].blocks.push(99);
        assert!(matches!(verify_resolution(&d, &res, None), Err(VerifyError::BlockIndexOutOfRange { .. })));
        let (d, mut res) = kts9();
        res.classes[0] = ResolutionClass::partial(0, res.classes[0].blocks.clone());
        assert!(matches!(verify_resolution(&d, &res, None), Err(VerifyError::GroupsRequired { .. })));
    }

    #[test]
    fn singleton_groups_make_a_gdd() {
        let (d, _) = kts9();
        assert!(verify_gdd(&d, &GroupPartition::singletons(9)).unwrap().ok());
    }

    #[test]
    fn weak_and_monochromatic() {
        let (d, _) = kts9();
        let mono = Colouring::new(vec![0; 9], 1).unwrap();
        let r = is_weak(&d, &mono).unwrap();
        assert_eq!(r.total, 12);
        let short = Colouring::new(vec![0; 8], 1).unwrap();
        assert!(is_weak(&d, &short).is_err());
    }

    #[test]
    fn three_points_of_a_block_are_a_subsystem() {
        let (d, res) = kts9();
        assert!(verify_subsystem(&d, &res, &[3, 4, 5]).unwrap().ok());
        assert!(!verify_subsystem(&d, &res, &[0, 1, 3]).unwrap().ok());
    }

    #[test]
    fn rainbow_needs_three_colours() {
        let (d, res) = kts9();
        let c = Colouring::new(vec![0, 1, 0, 1, 0, 1, 0, 1, 0], 2).unwrap();
        assert!(matches!(rainbow_check(&d, &res, &c), Err(VerifyError::RainbowNeedsThreeColours { delta: 2 })));
    }
}
