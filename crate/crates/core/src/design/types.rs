use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

/// A point of a design. Points of a design on `v` points are `0..v`.
pub type Point = u32;

/// A colour index. Colourings with `delta` colours use `0..delta`.
pub type Colour = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DesignError {
    #[error("block {block} has {found} points, expected {expected}")]
    WrongBlockSize { block: usize, expected: usize, found: usize },
    #[error("block {block} contains point {point}, outside 0..{v}")]
    PointOutOfRange { block: usize, point: Point, v: usize },
    #[error("block {block} repeats point {point}")]
    RepeatedPoint { block: usize, point: Point },
    #[error("blocks {first} and {second} are identical")]
    DuplicateBlock { first: usize, second: usize },
    #[error("group partition: point {point} is outside 0..{v}")]
    GroupPointOutOfRange { point: Point, v: usize },
    #[error("group partition: point {point} lies in more than one group")]
    GroupOverlap { point: Point },
    #[error("group partition: point {point} is in no group")]
    GroupUncovered { point: Point },
    #[error("group partition: group {group} is empty")]
    EmptyGroup { group: usize },
    #[error("colouring has colour {colour} at point {point}, but only {delta} colours are declared")]
    ColourOutOfRange { point: Point, colour: Colour, delta: u32 },
    #[error("colour string has invalid character {ch:?} at position {position}")]
    BadColourChar { position: usize, ch: char },
    #[error("permutation is not a bijection on 0..{n}")]
    NotABijection { n: usize },
}

/// A block design with uniform block size and every block a strictly
/// increasing list of points.
///
/// Blocks are kept in insertion order, since resolutions refer to blocks by
/// index. [`Design::canonical`] sorts them for comparisons.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Design {
    v: usize,
    k: usize,
    points: Vec<Point>,
}

impl Design {
    /// Builds a design, sorting the points inside each block.
    ///
    /// Rejects blocks of the wrong size, out-of-range or repeated points and
    /// repeated blocks.
    pub fn new<I, B>(v: usize, k: usize, blocks: I) -> Result<Self, DesignError>
    where
        I: IntoIterator<Item = B>,
        B: AsRef<[Point]>,
    {
        let mut points = Vec::new();
        for (i, block) in blocks.into_iter().enumerate() {
            let block = block.as_ref();
            if block.len() != k {
                return Err(DesignError::WrongBlockSize { block: i, expected: k, found: block.len() });
            }
            let start = points.len();
            points.extend_from_slice(block);
            let sorted = &mut points[start..];
            sorted.sort_unstable();
            for (j, &p) in sorted.iter().enumerate() {
                if p as usize >= v {
                    return Err(DesignError::PointOutOfRange { block: i, point: p, v });
                }
                if j > 0 && sorted[j - 1] == p {
                    return Err(DesignError::RepeatedPoint { block: i, point: p });
                }
            }
        }
        let design = Design { v, k, points };
        design.check_distinct()?;
        Ok(design)
    }

    fn check_distinct(&self) -> Result<(), DesignError> {
        let mut seen: HashMap<&[Point], usize> = HashMap::with_capacity(self.num_blocks());
        for (i, block) in self.blocks().enumerate() {
            if let Some(&first) = seen.get(block) {
                return Err(DesignError::DuplicateBlock { first, second: i });
            }
            seen.insert(block, i);
        }
        Ok(())
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn num_blocks(&self) -> usize {
        self.points.len().checked_div(self.k).unwrap_or(0)
    }

    pub fn block(&self, index: usize) -> &[Point] {
        &self.points[index * self.k..(index + 1) * self.k]
    }

    pub fn blocks(&self) -> std::slice::ChunksExact<'_, Point> {
        self.points.chunks_exact(self.k.max(1))
    }

    /// Index of the block equal to `block` (given in any order).
    pub fn find_block(&self, block: &[Point]) -> Option<usize> {
        let mut sorted = block.to_vec();
        sorted.sort_unstable();
        self.blocks().position(|b| b == sorted.as_slice())
    }

    /// For every point, the indices of the blocks containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.v];
        for (i, block) in self.blocks().enumerate() {
            for &p in block {
                inc[p as usize].push(i);
            }
        }
        inc
    }

    /// The same design with blocks in lexicographic order.
    pub fn canonical(&self) -> Design {
        let mut blocks: Vec<&[Point]> = self.blocks().collect();
        blocks.sort_unstable();
        Design { v: self.v, k: self.k, points: blocks.concat() }
    }

    /// True when both designs have the same block set.
    pub fn same_blocks(&self, other: &Design) -> bool {
        self.v == other.v && self.k == other.k && self.canonical() == other.canonical()
    }

    /// Relabels every point through `map` (which must be injective into `0..v`).
    pub fn relabel(&self, v: usize, map: impl Fn(Point) -> Point) -> Result<Design, DesignError> {
        let blocks: Vec<Vec<Point>> = self.blocks().map(|b| b.iter().map(|&p| map(p)).collect()).collect();
        Design::new(v, self.k, blocks)
    }
}

/// Multiset of positive part sizes, written in exponent notation: `8^3 9^1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionType(BTreeMap<usize, usize>);

impl PartitionType {
    pub fn from_sizes(sizes: impl IntoIterator<Item = usize>) -> Self {
        let mut parts = BTreeMap::new();
        for s in sizes.into_iter().filter(|&s| s > 0) {
            *parts.entry(s).or_insert(0) += 1;
        }
        PartitionType(parts)
    }

    /// `(size, multiplicity)` pairs in increasing size order.
    pub fn parts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&s, &m)| (s, m))
    }

    /// All part sizes in increasing order, repeated by multiplicity.
    pub fn sizes(&self) -> Vec<usize> {
        self.parts().flat_map(|(s, m)| std::iter::repeat_n(s, m)).collect()
    }

    pub fn num_parts(&self) -> usize {
        self.0.values().sum()
    }

    pub fn total(&self) -> usize {
        self.parts().map(|(s, m)| s * m).sum()
    }

    pub fn multiplicity(&self, size: usize) -> usize {
        self.0.get(&size).copied().unwrap_or(0)
    }

    /// Parses `8^3 9^1`, `8^39^1` is ambiguous so parts must be separated by
    /// spaces or commas; bare sizes (`1,4,4`) count once each.
    pub fn parse(text: &str) -> Option<Self> {
        let mut parts = BTreeMap::new();
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let (size, mult) = match tok.split_once('^') {
                Some((s, m)) => (s.parse::<usize>().ok()?, m.parse::<usize>().ok()?),
                None => (tok.parse::<usize>().ok()?, 1),
            };
            if size == 0 || mult == 0 {
                return None;
            }
            *parts.entry(size).or_insert(0) += mult;
        }
        if parts.is_empty() {
            None
        } else {
            Some(PartitionType(parts))
        }
    }
}

impl fmt::Display for PartitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, m) in self.parts() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{s}^{m}")?;
        }
        Ok(())
    }
}

/// The groups of a GDD or frame: disjoint point sets covering `0..v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPartition {
    groups: Vec<Vec<Point>>,
    owner: Vec<usize>,
}

impl GroupPartition {
    pub fn new(v: usize, groups: Vec<Vec<Point>>) -> Result<Self, DesignError> {
        let mut owner = vec![usize::MAX; v];
        for (g, group) in groups.iter().enumerate() {
            if group.is_empty() {
                return Err(DesignError::EmptyGroup { group: g });
            }
            for &p in group {
                let slot = owner.get_mut(p as usize).ok_or(DesignError::GroupPointOutOfRange { point: p, v })?;
                if *slot != usize::MAX {
                    return Err(DesignError::GroupOverlap { point: p });
                }
                *slot = g;
            }
        }
        if let Some(p) = owner.iter().position(|&g| g == usize::MAX) {
            return Err(DesignError::GroupUncovered { point: p as Point });
        }
        Ok(GroupPartition { groups, owner })
    }

    /// Every point in its own group.
    pub fn singletons(v: usize) -> Self {
        GroupPartition { groups: (0..v as Point).map(|p| vec![p]).collect(), owner: (0..v).collect() }
    }

    pub fn groups(&self) -> &[Vec<Point>] {
        &self.groups
    }

    pub fn group(&self, index: usize) -> &[Point] {
        &self.groups[index]
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn v(&self) -> usize {
        self.owner.len()
    }

    pub fn group_of(&self, p: Point) -> usize {
        self.owner[p as usize]
    }

    pub fn group_type(&self) -> PartitionType {
        PartitionType::from_sizes(self.groups.iter().map(Vec::len))
    }
}

/// One class of a resolution: block indices, plus the group it misses when
/// the class is a partial (frame) class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionClass {
    pub blocks: Vec<usize>,
    pub missing_group: Option<usize>,
}

impl ResolutionClass {
    pub fn full(blocks: Vec<usize>) -> Self {
        ResolutionClass { blocks, missing_group: None }
    }

    pub fn partial(missing_group: usize, blocks: Vec<usize>) -> Self {
        ResolutionClass { blocks, missing_group: Some(missing_group) }
    }
}

/// A partition of a design's blocks into (partial) parallel classes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Resolution {
    pub classes: Vec<ResolutionClass>,
}

impl Resolution {
    pub fn new(classes: Vec<ResolutionClass>) -> Self {
        Resolution { classes }
    }

    pub fn from_full_classes(classes: Vec<Vec<usize>>) -> Self {
        Resolution { classes: classes.into_iter().map(ResolutionClass::full).collect() }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class index of every block; `None` for blocks in no class.
    pub fn class_of_blocks(&self, num_blocks: usize) -> Vec<Option<usize>> {
        let mut owner = vec![None; num_blocks];
        for (c, class) in self.classes.iter().enumerate() {
            for &b in &class.blocks {
                if let Some(slot) = owner.get_mut(b) {
                    *slot = Some(c);
                }
            }
        }
        owner
    }

    /// Rewrites the block indices of each class after the design's blocks were
    /// reordered; `new_index[old] = new`.
    pub fn reindexed(&self, new_index: &[usize]) -> Resolution {
        Resolution {
            classes: self
                .classes
                .iter()
                .map(|c| ResolutionClass {
                    blocks: c.blocks.iter().map(|&b| new_index[b]).collect(),
                    missing_group: c.missing_group,
                })
                .collect(),
        }
    }
}

/// An assignment of one of `delta` colours to every point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Colouring {
    colours: Vec<Colour>,
    delta: u32,
}

impl Colouring {
    pub fn new(colours: Vec<Colour>, delta: u32) -> Result<Self, DesignError> {
        if let Some((p, &c)) = colours.iter().enumerate().find(|(_, &c)| c >= delta) {
            return Err(DesignError::ColourOutOfRange { point: p as Point, colour: c, delta });
        }
        Ok(Colouring { colours, delta })
    }

    /// Uses one more than the largest colour present as `delta`.
    pub fn from_colours(colours: Vec<Colour>) -> Self {
        let delta = colours.iter().max().map_or(0, |&c| c + 1);
        Colouring { colours, delta }
    }

    /// Colour `c` on every point of `classes[c]`; points not listed are an
    /// error reported as colour out of range.
    pub fn from_classes(v: usize, classes: &[&[Point]]) -> Result<Self, DesignError> {
        let delta = classes.len() as u32;
        let mut colours = vec![delta; v];
        for (c, class) in classes.iter().enumerate() {
            for &p in class.iter() {
                if p as usize >= v {
                    return Err(DesignError::GroupPointOutOfRange { point: p, v });
                }
                colours[p as usize] = c as Colour;
            }
        }
        Colouring::new(colours, delta)
    }

    /// Parses the compact digit form: character `'1'` is colour 0, `'2'`
    /// colour 1 and so on; position `i` colours point `i`.
    pub fn from_digit_string(text: &str) -> Result<Self, DesignError> {
        let colours = text
            .trim()
            .chars()
            .enumerate()
            .map(|(position, ch)| match ch.to_digit(10) {
                Some(d) if d >= 1 => Ok(d - 1),
                _ => Err(DesignError::BadColourChar { position, ch }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Colouring::from_colours(colours))
    }

    pub fn to_digit_string(&self) -> Option<String> {
        if self.delta > 9 {
            return None;
        }
        Some(self.colours.iter().map(|&c| char::from(b'1' + c as u8)).collect())
    }

    /// Declares a larger number of colours.
    pub fn with_delta(mut self, delta: u32) -> Result<Self, DesignError> {
        if delta < self.delta {
            Colouring::new(self.colours, delta)
        } else {
            self.delta = delta;
            Ok(self)
        }
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn v(&self) -> usize {
        self.colours.len()
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn colour(&self, p: Point) -> Colour {
        self.colours[p as usize]
    }

    /// Sizes of all `delta` colour classes, including empty ones.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.delta as usize];
        for &c in &self.colours {
            sizes[c as usize] += 1;
        }
        sizes
    }

    pub fn class(&self, c: Colour) -> Vec<Point> {
        (0..self.colours.len() as Point).filter(|&p| self.colour(p) == c).collect()
    }

    /// Multiset of non-empty colour class sizes.
    pub fn colour_type(&self) -> PartitionType {
        PartitionType::from_sizes(self.class_sizes())
    }

    /// Class sizes, over all `delta` declared colours, differ by at most one.
    pub fn is_equitable(&self) -> bool {
        let sizes = self.class_sizes();
        match (sizes.iter().min(), sizes.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        }
    }

    /// Number of distinct colours on the given points.
    pub fn distinct_on(&self, block: &[Point]) -> usize {
        let mut seen: u64 = 0;
        let mut extra = Vec::new();
        for &p in block {
            let c = self.colour(p);
            if c < 64 {
                seen |= 1 << c;
            } else if !extra.contains(&c) {
                extra.push(c);
            }
        }
        seen.count_ones() as usize + extra.len()
    }

    /// Colour of `point` looked up through `map`, which sends this colouring's
    /// points onto another point set.
    pub fn transported(&self, v: usize, map: impl Fn(Point) -> Point) -> Result<Colouring, DesignError> {
        let mut colours = vec![u32::MAX; v];
        for (p, &c) in self.colours.iter().enumerate() {
            colours[map(p as Point) as usize] = c;
        }
        Colouring::new(colours, self.delta)
    }

    /// Applies `f` to every colour, declaring `delta` colours.
    pub fn recoloured(&self, delta: u32, f: impl Fn(Colour) -> Colour) -> Result<Colouring, DesignError> {
        Colouring::new(self.colours.iter().map(|&c| f(c)).collect(), delta)
    }
}

/// A bijection on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<Point>,
}

impl Permutation {
    pub fn new(images: Vec<Point>) -> Result<Self, DesignError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            match seen.get_mut(p as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(DesignError::NotABijection { n }),
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as Point).collect() }
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[Point]]) -> Result<Self, DesignError> {
        let mut images: Vec<Point> = (0..n as Point).collect();
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                *images.get_mut(p as usize).ok_or(DesignError::NotABijection { n })? = next;
            }
        }
        Permutation::new(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, p: Point) -> Point {
        self.images[p as usize]
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    /// `self` after `first`: `p ↦ self(first(p))`.
    pub fn after(&self, first: &Permutation) -> Permutation {
        Permutation { images: first.images.iter().map(|&p| self.apply(p)).collect() }
    }

    pub fn pow(&self, exp: usize) -> Permutation {
        let mut result = Permutation::identity(self.len());
        for _ in 0..exp {
            result = self.after(&result);
        }
        result
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (p, &q) in self.images.iter().enumerate() {
            images[q as usize] = p as Point;
        }
        Permutation { images }
    }

    pub fn apply_block(&self, block: &[Point]) -> Vec<Point> {
        let mut out: Vec<Point> = block.iter().map(|&p| self.apply(p)).collect();
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn design_sorts_blocks_and_rejects_bad_input() {
        let d = Design::new(4, 3, [[2, 0, 1], [3, 1, 0]]).unwrap();
        assert_eq!(d.block(0), &[0, 1, 2]);
        assert_eq!(d.block(1), &[0, 1, 3]);
        assert_eq!(Design::new(4, 3, [[0, 0, 1]]), Err(DesignError::RepeatedPoint { block: 0, point: 0 }));
        assert!(matches!(Design::new(3, 3, [[0, 1, 3]]), Err(DesignError::PointOutOfRange { .. })));
        assert!(matches!(Design::new(4, 3, [[0, 1, 2], [2, 1, 0]]), Err(DesignError::DuplicateBlock { .. })));
        assert!(matches!(Design::new(4, 3, [vec![0, 1]]), Err(DesignError::WrongBlockSize { .. })));
    }

    #[test]
    fn canonical_ignores_block_order() {
        let a = Design::new(5, 3, [[2, 3, 4], [0, 1, 2]]).unwrap();
        let b = Design::new(5, 3, [[0, 1, 2], [4, 3, 2]]).unwrap();
        assert_ne!(a, b);
        assert!(a.same_blocks(&b));
    }

    #[test]
    fn partition_type_notation() {
        let t = PartitionType::from_sizes([9, 8, 8, 8]);
        assert_eq!(t.to_string(), "8^3 9^1");
        assert_eq!(PartitionType::parse("8^3 9^1"), Some(t));
        assert_eq!(PartitionType::parse("1,4,4"), PartitionType::parse("1^1 4^2"));
        assert_eq!(PartitionType::parse("3^0"), None);
    }

    #[test]
    fn groups_must_partition() {
        assert!(GroupPartition::new(4, vec![vec![0, 1], vec![2, 3]]).is_ok());
        assert_eq!(
            GroupPartition::new(4, vec![vec![0, 1], vec![1, 2, 3]]),
            Err(DesignError::GroupOverlap { point: 1 })
        );
        assert_eq!(GroupPartition::new(4, vec![vec![0, 1], vec![2]]), Err(DesignError::GroupUncovered { point: 3 }));
    }

    #[test]
    fn colour_type_and_equity() {
        let c = Colouring::new(vec![0; 9], 2).unwrap();
        assert_eq!(c.colour_type().to_string(), "9^1");
        assert!(!c.is_equitable());
        let c = Colouring::from_digit_string("111221112211122233324433344433444").unwrap();
        assert_eq!(c.delta(), 4);
        assert_eq!(c.colour_type(), PartitionType::parse("8^3 9^1").unwrap());
        assert!(c.is_equitable());
        assert!(Colouring::new(vec![0, 3], 3).is_err());
    }

    #[test]
    fn permutation_cycles_and_powers() {
        let rho = Permutation::from_cycles(5, &[&[0, 1, 2, 3]]).unwrap();
        assert_eq!(rho.apply(3), 0);
        assert_eq!(rho.apply(4), 4);
        assert_eq!(rho.pow(4), Permutation::identity(5));
        assert_eq!(rho.after(&rho.inverse()), Permutation::identity(5));
        assert!(Permutation::new(vec![0, 0]).is_err());
    }
}
