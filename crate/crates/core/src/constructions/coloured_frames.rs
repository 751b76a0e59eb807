use crate::catalog::kts9;
use crate::design::{
    delete_point, is_weak, Colour, ColouredFrame, ColouredKts, Colouring, Design, Frame, GroupPartition, Kts, Point,
    Resolution, ResolutionClass,
};

use super::fill::frame_fill_one_point_coloured;
use super::{precondition, require, ColouredRgdd, ConstructionError, Rgdd};

/// Four classes of four triples `(x, y, z)`, the block `{x_0, y_1, z_2}`.
type Table = [[[u8; 3]; 4]; 4];

/// Deleting a group from the 4-GDD of type `4^4`.
const T0: Table = [
    [[0, 0, 1], [1, 1, 2], [2, 3, 3], [3, 2, 0]],
    [[0, 1, 3], [1, 0, 0], [2, 2, 1], [3, 3, 2]],
    [[0, 2, 2], [1, 3, 1], [2, 1, 0], [3, 0, 3]],
    [[0, 3, 0], [1, 2, 3], [2, 0, 2], [3, 1, 1]],
];
const TA: Table = [
    [[0, 0, 0], [1, 1, 1], [2, 2, 2], [3, 3, 3]],
    [[0, 1, 2], [1, 0, 3], [2, 3, 0], [3, 2, 1]],
    [[0, 2, 3], [1, 3, 2], [2, 0, 1], [3, 1, 0]],
    [[0, 3, 1], [1, 2, 0], [2, 1, 3], [3, 0, 2]],
];
const TB: Table = [
    [[0, 0, 0], [1, 2, 1], [2, 3, 2], [3, 1, 3]],
    [[0, 1, 2], [1, 3, 3], [2, 2, 0], [3, 0, 1]],
    [[0, 2, 3], [1, 0, 2], [2, 1, 1], [3, 3, 0]],
    [[0, 3, 1], [1, 1, 0], [2, 0, 3], [3, 2, 2]],
];
const TC: Table = [
    [[0, 0, 0], [1, 2, 2], [2, 3, 3], [3, 1, 1]],
    [[0, 2, 1], [1, 0, 3], [2, 1, 2], [3, 3, 0]],
    [[0, 1, 3], [1, 3, 1], [2, 2, 0], [3, 0, 2]],
    [[0, 3, 2], [1, 1, 0], [2, 0, 1], [3, 2, 3]],
];

fn swap_12(t: Table) -> Table {
    t.map(|class| class.map(|[x, y, z]| [x, z, y]))
}

fn relabel(t: Table, coord: usize, map: [u8; 4]) -> Table {
    t.map(|class| {
        class.map(|mut b| {
            b[coord] = map[b[coord] as usize];
            b
        })
    })
}

/// The 4-colour table for offsets `d1 <= d2` relative to group 0.
fn table_4(d1: u32, d2: u32) -> Table {
    match (d1, d2) {
        (0, 0) => T0,
        (1, 2) => TB,
        (1, 3) => TC,
        (2, 3) => swap_12(TC),
        _ => TA,
    }
}

/// Label maps for group points whose offset is `d` under `delta` colours.
fn label_fix(delta: u32, d: u32) -> Option<[u8; 4]> {
    match (delta, d) {
        (5, 2) => Some([0, 1, 3, 2]),
        (5, 3) => Some([0, 2, 3, 1]),
        (6, 3) => Some([0, 3, 2, 1]),
        _ => None,
    }
}

fn table_for(delta: u32, c: [Colour; 3]) -> Table {
    let d = [(c[1] + delta - c[0] % delta) % delta, (c[2] + delta - c[0] % delta) % delta];
    let swapped = d[0] > d[1];
    let (d1, d2) = if swapped { (d[1], d[0]) } else { (d[0], d[1]) };
    let mut t = if delta == 4 {
        table_4(d1, d2)
    } else {
        // Offsets whose colour window misses {0..3} cannot create a
        // monochromatic block with group 0.
        let clear = |d: u32| d >= 4 && d + 3 < delta;
        if clear(d1) || clear(d2) {
            TA
        } else {
            let near = |d: u32| if d <= 3 { d } else { 4 + d - delta };
            let (e1, e2) = (near(d1), near(d2));
            let mut t = if e1 <= e2 { table_4(e1, e2) } else { swap_12(table_4(e2, e1)) };
            for (coord, dj) in [(1, d1), (2, d2)] {
                if let Some(map) = label_fix(delta, dj) {
                    t = relabel(t, coord, map);
                }
            }
            t
        }
    };
    if swapped {
        t = swap_12(t);
    }
    t
}

/// How [`rgdd_4_3_with_method`] found its blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RgddMethod {
    Tables,
    /// The case tables failed; a relabelling of one of them was searched for.
    Search,
}

fn build_rgdd(t: &Table, c: [Colour; 3], delta: u32) -> Result<ColouredRgdd, ConstructionError> {
    let mut blocks = Vec::with_capacity(16);
    let mut classes = Vec::with_capacity(4);
    for class in t {
        classes.push((blocks.len()..blocks.len() + 4).collect());
        for &[x, y, z] in class {
            blocks.push([x as Point, 4 + y as Point, 8 + z as Point]);
        }
    }
    let design = Design::new(12, 3, blocks)?;
    let groups = GroupPartition::new(12, (0..3).map(|j| (4 * j..4 * j + 4).collect()).collect())?;
    let colouring = Colouring::new((0..12u32).map(|p| (c[(p / 4) as usize] + p % 4) % delta).collect(), delta)?;
    Ok(ColouredRgdd { rgdd: Rgdd { design, groups, resolution: Resolution::from_full_classes(classes) }, colouring })
}

fn rgdd_ok(out: &ColouredRgdd, c: [Colour; 3]) -> Result<bool, ConstructionError> {
    if !out.rgdd.verify()?.ok() || !is_weak(&out.rgdd.design, &out.colouring)?.ok() {
        return Ok(false);
    }
    let all_equal = c[0] == c[1] && c[1] == c[2];
    Ok(all_equal || out.rgdd.design.find_block(&[0, 4, 8]).is_some())
}

fn permutations4() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                let d = 6 - a - b - c;
                if a != b && a != c && b != c && d < 4 && d != a && d != b && d != c {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// [`rgdd_4_3_coloured`], also reporting whether the case tables sufficed.
pub fn rgdd_4_3_with_method(c: [Colour; 3], delta: u32) -> Result<(ColouredRgdd, RgddMethod), ConstructionError> {
    if delta < 4 {
        return precondition(format!("need at least 4 colours, got {delta}"));
    }
    let c = c.map(|x| x % delta);
    let out = build_rgdd(&table_for(delta, c), c, delta)?;
    if rgdd_ok(&out, c)? {
        return Ok((out, RgddMethod::Tables));
    }
    let perms = permutations4();
    for base in [TA, TB, TC, T0] {
        for p1 in &perms {
            for p2 in &perms {
                let t = relabel(relabel(base, 1, *p1), 2, *p2);
                let out = build_rgdd(&t, c, delta)?;
                if rgdd_ok(&out, c)? {
                    return Ok((out, RgddMethod::Search));
                }
            }
        }
    }
    Err(ConstructionError::Output {
        construction: "rgdd_4_3_coloured",
        report: format!("no resolvable GDD of type 4^3 found for colours {c:?} mod {delta}"),
    })
}

/// A resolvable 3-GDD of type `4^3` on `i_j ↦ 4j + i` with point `i_j`
/// coloured `c_j + i mod delta`, no monochromatic block, and containing
/// `{0_0, 0_1, 0_2}` unless the three offsets are equal.
pub fn rgdd_4_3_coloured(c: [Colour; 3], delta: u32) -> Result<ColouredRgdd, ConstructionError> {
    rgdd_4_3_with_method(c, delta).map(|(out, _)| out)
}

/// The Kirkman frame of type `2^4` left by deleting point 0 from the KTS(9).
pub fn default_base_frame() -> Frame {
    delete_point(&kts9().kts, 0).expect("KTS(9) minus a point is a frame")
}

/// A `delta`-coloured Kirkman frame of type `8^4` on `(4x + y)_j ↦ 8j + 4x + y`,
/// point `(4x + y)_j` coloured `c_j + 4x + y mod delta`, inflating a frame of
/// type `2^4` by weight 4 with the coloured GDDs of type `4^3`.
///
/// The base is relabelled so that its first block meeting groups 0, 1, 2 is
/// `{0_0, 0_1, 0_2}`; then `{0, 8, 16}` is a block unless `c_0 = c_1 = c_2`.
pub fn frame_8_4_coloured(c: [Colour; 4], delta: u32, base: &Frame) -> Result<ColouredFrame, ConstructionError> {
    if delta < 4 {
        return precondition(format!("need at least 4 colours, got {delta}"));
    }
    let report = base.verify()?;
    if !report.ok()
        || base.design.k() != 3
        || base.groups.groups().iter().any(|g| g.len() != 2)
        || base.groups.len() != 4
    {
        return precondition(format!("base must be a Kirkman frame of type 2^4:\n{report}"));
    }
    let c = c.map(|x| x % delta);
    let group_of = |p: Point| base.groups.group_of(p);
    let Some(anchor) = base.design.blocks().find(|b| {
        let mut g: Vec<usize> = b.iter().map(|&p| group_of(p)).collect();
        g.sort_unstable();
        g == [0, 1, 2]
    }) else {
        return precondition("base has no block meeting groups 0, 1 and 2");
    };
    // (group, x) for every base point.
    let mut label = vec![(0usize, 0u32); base.design.v()];
    for (j, grp) in base.groups.groups().iter().enumerate() {
        for (x, &p) in grp.iter().enumerate() {
            label[p as usize] = (j, x as u32);
        }
        if j < 3 {
            let zero = *anchor.iter().find(|&&p| group_of(p) == j).expect("anchor meets group j");
            for &p in grp {
                label[p as usize] = (j, u32::from(p != zero));
            }
        }
    }

    let mut blocks: Vec<Vec<Point>> = Vec::new();
    let mut classes = Vec::new();
    for class in &base.resolution.classes {
        let missing = class.missing_group.expect("frame classes are partial");
        let mut parts: [Vec<usize>; 4] = Default::default();
        for &b in &class.blocks {
            let mut pts: Vec<(usize, u32)> = base.design.block(b).iter().map(|&p| label[p as usize]).collect();
            pts.sort_unstable();
            let offsets = [0, 1, 2].map(|t| c[pts[t].0] + 4 * pts[t].1);
            let rgdd = rgdd_4_3_coloured(offsets, delta)?;
            for (k, rc) in rgdd.rgdd.resolution.classes.iter().enumerate() {
                for &rb in &rc.blocks {
                    parts[k].push(blocks.len());
                    blocks.push(
                        rgdd.rgdd
                            .design
                            .block(rb)
                            .iter()
                            .map(|&q| {
                                let (j, x) = pts[(q / 4) as usize];
                                8 * j as Point + 4 * x + q % 4
                            })
                            .collect(),
                    );
                }
            }
        }
        classes.extend(parts.into_iter().map(|p| ResolutionClass::partial(missing, p)));
    }

    let design = Design::new(32, 3, blocks)?;
    let groups = GroupPartition::new(32, (0..4).map(|j| (8 * j..8 * j + 8).collect()).collect())?;
    let colouring = Colouring::new((0..32u32).map(|p| (c[(p / 8) as usize] + p % 8) % delta).collect(), delta)?;
    let out = ColouredFrame { frame: Frame { design, groups, resolution: Resolution::new(classes) }, colouring };
    let report = out.verify()?;
    require("frame_8_4_coloured", report)?;
    if !(c[0] == c[1] && c[1] == c[2]) && out.frame.design.find_block(&[0, 8, 16]).is_none() {
        return Err(ConstructionError::Output {
            construction: "frame_8_4_coloured",
            report: "block {0, 8, 16} missing".into(),
        });
    }
    Ok(out)
}

/// Where a Steiner triple system sits inside a quadruple system: point `p`
/// of the STS is quadruple-system point `point_map[p]`, and STS block `i`
/// together with `extra[i]` is a block of the quadruple system.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Embedding {
    pub point_map: Vec<Point>,
    pub extra: Vec<Point>,
}

/// A KTS(8w + 1) containing a copy of a weakly `delta`-coloured STS `s`,
/// from a quadruple system `q` of order `w` into which `s` embeds.
///
/// Each point `j` of `q` becomes the group `{8j, ..., 8j + 7}`, coloured
/// `c(j) + i mod delta` where `c` extends the colouring of `s` (points off
/// the embedding take colours `0, 1, 2, ...` round-robin). Each block of `q`
/// carries a coloured frame of type `8^4`, ordered so that an embedded STS
/// block lands on groups 0, 1 and 2 and so gives the block `{8x, 8y, 8z}`.
/// Every group is then filled together with `∞ = 8w` (colour 0) by the first
/// relabelling of the KTS(9), in lexicographic order, that keeps the
/// colouring weak.
pub fn sts_to_kts_pipeline(
    s: &Design,
    s_colouring: &Colouring,
    q: &Design,
    embedding: &Embedding,
    delta: u32,
) -> Result<ColouredKts, ConstructionError> {
    if delta < 4 {
        return precondition(format!("need at least 4 colours, got {delta}"));
    }
    if s.num_blocks() > 0 && (s.k() != 3 || !crate::design::verify_pairwise_balance(s).ok()) {
        return precondition("s is not a Steiner triple system");
    }
    if s_colouring.v() != s.v() || s_colouring.delta() > delta || !is_weak(s, s_colouring)?.ok() {
        return precondition(format!("s colouring is not a weak colouring with at most {delta} colours"));
    }
    let w = q.v();
    if q.k() != 4 || !crate::design::verify_pairwise_balance(q).ok() {
        return precondition("q is not a quadruple system");
    }
    if embedding.point_map.len() != s.v() || embedding.extra.len() != s.num_blocks() {
        return precondition("embedding must map every point and give one extra point per block");
    }
    let mut image: Vec<Option<usize>> = vec![None; w];
    for (p, &j) in embedding.point_map.iter().enumerate() {
        if j as usize >= w || image[j as usize].is_some() {
            return precondition(format!("point map is not injective into q at {p}"));
        }
        image[j as usize] = Some(p);
    }
    let mut is_extra = vec![false; w];
    for &x in &embedding.extra {
        if x as usize >= w || image[x as usize].is_some() || is_extra[x as usize] {
            return precondition(format!("extra point {x} is reused or lies in the image of s"));
        }
        is_extra[x as usize] = true;
    }
    // For each q-block, the order of its points on frame groups 0..4.
    let mut order: Vec<Option<[Point; 4]>> = vec![None; q.num_blocks()];
    let mut embedded_triples = Vec::new();
    for (i, block) in s.blocks().enumerate() {
        let mut tri: Vec<Point> = block.iter().map(|&p| embedding.point_map[p as usize]).collect();
        tri.sort_unstable();
        let mut quad = [tri[0], tri[1], tri[2], embedding.extra[i]];
        quad.sort_unstable();
        let Some(b) = q.find_block(&quad) else {
            return precondition(format!("s block {i} with its extra point is not a block of q"));
        };
        if order[b].is_some() {
            return precondition(format!("two s blocks map into q block {b}"));
        }
        order[b] = Some([tri[0], tri[1], tri[2], embedding.extra[i]]);
        embedded_triples.push([8 * tri[0], 8 * tri[1], 8 * tri[2]]);
    }

    let mut q_colour = vec![0 as Colour; w];
    let mut next = 0;
    for j in 0..w {
        q_colour[j] = match image[j] {
            Some(p) => s_colouring.colour(p as Point),
            None => {
                next += 1;
                (next - 1) % delta
            }
        };
    }

    let base = default_base_frame();
    let mut blocks: Vec<Vec<Point>> = Vec::new();
    let mut parts: Vec<[Vec<usize>; 4]> = vec![Default::default(); w];
    for (bi, block) in q.blocks().enumerate() {
        let ord = order[bi].unwrap_or_else(|| [block[0], block[1], block[2], block[3]]);
        let frame = frame_8_4_coloured(ord.map(|j| q_colour[j as usize]), delta, &base)?;
        let mut rank = [0usize; 4];
        for class in &frame.frame.resolution.classes {
            let g = class.missing_group.expect("frame classes are partial");
            let target = &mut parts[ord[g] as usize][rank[g]];
            rank[g] += 1;
            for &b in &class.blocks {
                target.push(blocks.len());
                blocks.push(frame.frame.design.block(b).iter().map(|&p| 8 * ord[(p / 8) as usize] + p % 8).collect());
            }
        }
    }
    let n = 8 * w;
    let design = Design::new(n, 3, blocks)?;
    let groups = GroupPartition::new(n, (0..w as Point).map(|j| (8 * j..8 * j + 8).collect()).collect())?;
    let classes = parts
        .into_iter()
        .enumerate()
        .flat_map(|(j, ps)| ps.into_iter().map(move |p| ResolutionClass::partial(j, p)))
        .collect();
    let colouring =
        Colouring::new((0..n as Point).map(|p| (q_colour[(p / 8) as usize] + p % 8) % delta).collect(), delta)?;
    let frame = ColouredFrame { frame: Frame { design, groups, resolution: Resolution::new(classes) }, colouring };
    require("sts_to_kts_pipeline frame", frame.verify()?)?;

    let k9 = kts9().kts;
    let mut fills = Vec::with_capacity(w);
    for j in 0..w {
        let mut colours: Vec<Colour> = (0..8).map(|i| frame.colouring.colour(8 * j as Point + i)).collect();
        colours.push(0);
        let Some(fill) = weak_kts9_relabelling(&k9, &colours) else {
            return Err(ConstructionError::Output {
                construction: "sts_to_kts_pipeline",
                report: format!("no relabelling of KTS(9) is weak on group {j}"),
            });
        };
        fills.push(ColouredKts { kts: fill, colouring: Colouring::new(colours, delta)? });
    }
    let out = frame_fill_one_point_coloured(&frame, &fills)?;
    for t in &embedded_triples {
        if out.kts.design.find_block(t).is_none() {
            return Err(ConstructionError::Output {
                construction: "sts_to_kts_pipeline",
                report: format!("embedded block {t:?} missing"),
            });
        }
    }
    Ok(out)
}

/// Steps `perm` to the next permutation in lexicographic order.
fn next_permutation(perm: &mut [Point]) -> bool {
    let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
        return false;
    };
    let j = (i..perm.len()).rev().find(|&j| perm[j] > perm[i - 1]).expect("perm[i] qualifies");
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

fn weak_kts9_relabelling(k9: &Kts, colours: &[Colour]) -> Option<Kts> {
    let mut perm: Vec<Point> = (0..9).collect();
    loop {
        let weak = k9.design.blocks().all(|b| {
            let c = colours[perm[b[0] as usize] as usize];
            b.iter().any(|&p| colours[perm[p as usize] as usize] != c)
        });
        if weak {
            let design = k9.design.relabel(9, |p| perm[p as usize]).ok()?;
            return Some(Kts { design, resolution: k9.resolution.clone() });
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triples(out: &ColouredRgdd) -> Vec<Vec<[u32; 3]>> {
        out.rgdd
            .resolution
            .classes
            .iter()
            .map(|c| {
                c.blocks
                    .iter()
                    .map(|&b| {
                        let p = out.rgdd.design.block(b);
                        [p[0], p[1] - 4, p[2] - 8]
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn equal_offsets_use_the_deleted_group_table() {
        let (out, method) = rgdd_4_3_with_method([0, 0, 0], 4).unwrap();
        assert_eq!(method, RgddMethod::Tables);
        assert_eq!(triples(&out)[0], vec![[0, 0, 1], [1, 1, 2], [2, 3, 3], [3, 2, 0]]);
    }

    #[test]
    fn five_colour_worked_example() {
        let (out, method) = rgdd_4_3_with_method([0, 2, 4], 5).unwrap();
        assert_eq!(method, RgddMethod::Tables);
        let want = vec![
            vec![[0, 0, 0], [1, 3, 2], [2, 2, 3], [3, 1, 1]],
            vec![[0, 1, 2], [1, 2, 0], [2, 3, 1], [3, 0, 3]],
            vec![[0, 2, 1], [1, 1, 3], [2, 0, 2], [3, 3, 0]],
            vec![[0, 3, 3], [1, 0, 1], [2, 1, 0], [3, 2, 2]],
        ];
        assert_eq!(triples(&out), want);
    }

    #[test]
    fn four_colour_tables_need_no_search() {
        for c1 in 0..4 {
            for c2 in 0..4 {
                let (_, method) = rgdd_4_3_with_method([0, c1, c2], 4).unwrap();
                assert_eq!(method, RgddMethod::Tables, "offsets {c1} {c2}");
            }
        }
    }

    #[test]
    fn frame_8_4_groups_and_anchor() {
        let base = default_base_frame();
        let f = frame_8_4_coloured([0, 1, 2, 3], 4, &base).unwrap();
        assert!(f.frame.design.find_block(&[0, 8, 16]).is_some());
        for j in 0..4 {
            assert_eq!(f.frame.classes_missing(j).len(), 4);
        }
        let f = frame_8_4_coloured([0, 0, 0, 0], 4, &base).unwrap();
        for grp in f.frame.groups.groups() {
            let mut counts = [0; 4];
            for &p in grp {
                counts[f.colouring.colour(p) as usize] += 1;
            }
            assert_eq!(counts, [2; 4]);
        }
    }

    #[test]
    fn lexicographic_permutations() {
        let mut p = vec![0, 1, 2];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[1], vec![0, 2, 1]);
        assert_eq!(seen[5], vec![2, 1, 0]);
    }
}
