use crate::catalog::gdd_4x4;
use crate::design::{
    is_weak, verify_gdd, verify_pairwise_balance, ColouredFrame, ColouredGdd, Colouring, Design, Frame, Gdd,
    GroupPartition, Point, Resolution, ResolutionClass,
};

use super::{precondition, require, ConstructionError};

/// Checks the two colour conditions the blow-up needs: no block has more
/// than two points of one colour, and every group has exactly one point of
/// each of the 4 colours. Returns a description of the first failure.
pub fn blowup_properties(gdd: &ColouredGdd) -> Result<(), String> {
    let colouring = &gdd.colouring;
    if colouring.delta() != 4 {
        return Err(format!("expected 4 colours, found {}", colouring.delta()));
    }
    for (i, block) in gdd.gdd.design.blocks().enumerate() {
        let mut counts = [0; 4];
        for &p in block {
            counts[colouring.colour(p) as usize] += 1;
        }
        if counts.iter().any(|&n| n > 2) {
            return Err(format!("block {i} {block:?} has three points of one colour"));
        }
    }
    for (i, group) in gdd.gdd.groups.groups().iter().enumerate() {
        let mut colours: Vec<u32> = group.iter().map(|&p| colouring.colour(p)).collect();
        colours.sort_unstable();
        if colours != [0, 1, 2, 3] {
            return Err(format!("group {i} has colours {colours:?}"));
        }
    }
    Ok(())
}

/// A 4-coloured 4-GDD of type `4^u` from a quadruple system of order `u`:
/// point `(v, i) ↦ 4v + i` has colour `i`, group `v` is `{4v, ..., 4v+3}`,
/// and each block `{b0 < b1 < b2 < b3}` carries the 4-GDD of type `4^4`
/// with its group `j` on group `b_j`. For `u = 4` this is that 4-GDD itself.
pub fn quadruple_to_4gdd(q: &Design) -> Result<ColouredGdd, ConstructionError> {
    let u = q.v();
    if q.k() != 4 {
        return precondition(format!("expected blocks of size 4, found {}", q.k()));
    }
    if !(u % 12 == 1 || u % 12 == 4) || u < 4 {
        return precondition(format!("u = {u} is not 1 or 4 mod 12 with u >= 4"));
    }
    let report = verify_pairwise_balance(q);
    if !report.ok() {
        return precondition(format!("input is not a quadruple system:\n{report}"));
    }
    let base = gdd_4x4();
    let mut blocks = Vec::with_capacity(16 * q.num_blocks());
    for block in q.blocks() {
        for small in base.gdd.design.blocks() {
            blocks.push(small.iter().map(|&p| 4 * block[(p / 4) as usize] + p % 4).collect::<Vec<_>>());
        }
    }
    let n = 4 * u;
    let design = Design::new(n, 4, blocks)?;
    let groups = GroupPartition::new(n, (0..u as Point).map(|v| (4 * v..4 * v + 4).collect()).collect())?;
    let colouring = Colouring::new((0..n as Point).map(|p| p % 4).collect(), 4)?;
    let out = ColouredGdd { gdd: Gdd { design, groups }, colouring };
    require("quadruple_to_4gdd", verify_gdd(&out.gdd.design, &out.gdd.groups)?)?;
    blowup_properties(&out).map_err(|e| ConstructionError::Output { construction: "quadruple_to_4gdd", report: e })?;
    Ok(out)
}

/// A 4-coloured Kirkman frame of type `(8g)^u` from a 4-GDD of type `4^u`
/// meeting [`blowup_properties`] and a Kirkman frame of type `(2g)^4`.
///
/// Point `(v, i) ↦ 2g·v + i` for `i < 2g` has the colour of `v`. Each block
/// `{b0 < b1 < b2 < b3}` carries a copy of the ingredient with its group `j`
/// (points in ascending order) on `{b_j} × [2g]`. For each GDD point `v` and
/// each `k < g`, the `k`-th ingredient classes missing `v`'s group, taken
/// over all blocks through `v`, form one partial class missing the output
/// group of `v`.
pub fn gdd_blowup(gdd: &ColouredGdd, g: usize, ingredient: &Frame) -> Result<ColouredFrame, ConstructionError> {
    let report = verify_gdd(&gdd.gdd.design, &gdd.gdd.groups)?;
    if !report.ok() || gdd.gdd.design.k() != 4 || gdd.gdd.groups.groups().iter().any(|g| g.len() != 4) {
        return precondition(format!("input is not a 4-GDD of type 4^u:\n{report}"));
    }
    blowup_properties(gdd).map_err(ConstructionError::Precondition)?;
    let report = ingredient.verify()?;
    let sizes_ok = ingredient.groups.len() == 4 && ingredient.groups.groups().iter().all(|grp| grp.len() == 2 * g);
    if !report.ok() || !sizes_ok || ingredient.design.k() != 3 {
        return precondition(format!(
            "ingredient must be a Kirkman frame of type {}^4, found type {}\n{report}",
            2 * g,
            ingredient.groups.group_type()
        ));
    }

    let width = 2 * g as Point;
    let n = gdd.gdd.design.v() * 2 * g;
    // (ingredient group, position in group) of every ingredient point.
    let mut slot = vec![(0usize, 0 as Point); ingredient.design.v()];
    for (j, grp) in ingredient.groups.groups().iter().enumerate() {
        for (m, &p) in grp.iter().enumerate() {
            slot[p as usize] = (j, m as Point);
        }
    }
    // Rank of each ingredient class among those missing the same group.
    let rank: Vec<usize> = (0..ingredient.resolution.len())
        .map(|c| {
            let missing = ingredient.resolution.classes[c].missing_group;
            ingredient.resolution.classes[..c].iter().filter(|o| o.missing_group == missing).count()
        })
        .collect();

    let gdd_v = gdd.gdd.design.v();
    let mut blocks: Vec<Vec<Point>> = Vec::new();
    // parts[v][k]: blocks of the k-th partial class for GDD point v.
    let mut parts: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); g]; gdd_v];
    for big in gdd.gdd.design.blocks() {
        for (ci, class) in ingredient.resolution.classes.iter().enumerate() {
            let j = class.missing_group.expect("frame classes are partial");
            let target = &mut parts[big[j] as usize][rank[ci]];
            for &b in &class.blocks {
                target.push(blocks.len());
                blocks.push(
                    ingredient
                        .design
                        .block(b)
                        .iter()
                        .map(|&p| {
                            let (j, m) = slot[p as usize];
                            big[j] * width + m
                        })
                        .collect(),
                );
            }
        }
    }
    let design = Design::new(n, 3, blocks)?;
    let groups = GroupPartition::new(
        n,
        gdd.gdd
            .groups
            .groups()
            .iter()
            .map(|grp| grp.iter().flat_map(|&v| v * width..(v + 1) * width).collect())
            .collect(),
    )?;
    let mut classes = Vec::new();
    for (v, point_parts) in parts.into_iter().enumerate() {
        let group = gdd.gdd.groups.group_of(v as Point);
        classes.extend(point_parts.into_iter().map(|blocks| ResolutionClass::partial(group, blocks)));
    }
    let colouring = Colouring::new((0..n).map(|p| gdd.colouring.colour((p / (2 * g)) as Point)).collect(), 4)?;
    let out = ColouredFrame { frame: Frame { design, groups, resolution: Resolution::new(classes) }, colouring };
    let mut report = out.verify()?;
    report.absorb(is_weak(&out.frame.design, &out.colouring)?);
    require("gdd_blowup", report)?;
    for (i, grp) in out.frame.groups.groups().iter().enumerate() {
        let mut counts = [0usize; 4];
        for &p in grp {
            counts[out.colouring.colour(p) as usize] += 1;
        }
        if counts.iter().any(|&c| c != 2 * g) {
            return Err(ConstructionError::Output {
                construction: "gdd_blowup",
                report: format!("group {i} colour counts {counts:?}, expected {} each", 2 * g),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_block_gives_the_base_gdd() {
        let q = Design::new(4, 4, [[0, 1, 2, 3]]).unwrap();
        let out = quadruple_to_4gdd(&q).unwrap();
        assert_eq!(out, gdd_4x4());
    }

    #[test]
    fn rejects_bad_orders() {
        let q = Design::new(5, 4, [[0, 1, 2, 3]]).unwrap();
        assert!(matches!(quadruple_to_4gdd(&q), Err(ConstructionError::Precondition(_))));
    }
}
