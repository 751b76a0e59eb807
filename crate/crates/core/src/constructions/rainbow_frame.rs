use crate::design::{
    is_weak, rainbow_check, verify_subsystem, ColouredKts, Colouring, Design, Frame, Kts, Point, Resolution,
};

use super::{precondition, require, ConstructionError};

/// A rainbow KTS(3t + w) with a sub-KTS(w) on `sub`, used to fill a frame
/// group of size `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowIngredient {
    pub kts: ColouredKts,
    pub sub: Vec<Point>,
}

/// An ingredient checked and split into the pieces the construction uses.
struct Prepared {
    /// Non-subsystem points of each colour, ascending.
    outer: [Vec<Point>; 3],
    /// Subsystem points of each colour, ascending.
    inner: [Vec<Point>; 3],
    in_sub: Vec<bool>,
    /// Classes containing subsystem blocks, the rainbow class first.
    r1: Vec<usize>,
    r2: Vec<usize>,
}

impl RainbowIngredient {
    fn prepare(&self, w: usize) -> Result<Prepared, ConstructionError> {
        let report = self.kts.verify()?;
        if !report.ok() {
            return precondition(format!("ingredient is not a weakly coloured KTS:\n{report}"));
        }
        let (design, res, colouring) = (&self.kts.kts.design, &self.kts.kts.resolution, &self.kts.colouring);
        let v = design.v();
        if colouring.delta() != 3 {
            return precondition("ingredient colouring must use 3 colours");
        }
        let rainbow = rainbow_check(design, res, colouring)?;
        let Some(rainbow_class) = rainbow.rainbow_class() else {
            return precondition(format!("ingredient KTS({v}) colouring is not rainbow:\n{}", rainbow.report));
        };
        let sub_report = verify_subsystem(design, res, &self.sub)?;
        if self.sub.len() != w || !sub_report.ok() {
            return precondition(format!("{:?} does not carry a sub-KTS({w}):\n{sub_report}", self.sub));
        }
        let mut in_sub = vec![false; v];
        for &p in &self.sub {
            in_sub[p as usize] = true;
        }
        let mut outer: [Vec<Point>; 3] = Default::default();
        let mut inner: [Vec<Point>; 3] = Default::default();
        for p in 0..v as Point {
            let c = colouring.colour(p) as usize;
            if in_sub[p as usize] { &mut inner[c] } else { &mut outer[c] }.push(p);
        }
        if inner.iter().any(|s| s.len() * 3 != w) {
            return precondition("subsystem points must be equitably coloured");
        }
        let inside = |b: usize| design.block(b).iter().all(|&p| in_sub[p as usize]);
        let (mut r1, r2): (Vec<usize>, Vec<usize>) =
            (0..res.len()).partition(|&c| res.classes[c].blocks.iter().any(|&b| inside(b)));
        let Some(pos) = r1.iter().position(|&c| c == rainbow_class) else {
            return precondition("the rainbow class must contain the subsystem's blocks");
        };
        r1.remove(pos);
        r1.insert(0, rainbow_class);
        Ok(Prepared { outer, inner, in_sub, r1, r2 })
    }
}

/// The three classes a frame block `{x, y, z}` expands into, as copy indices
/// `(x_i, y_j, z_k)`.
const GADGET: [[[u32; 3]; 3]; 3] =
    [[[0, 0, 1], [1, 1, 2], [2, 2, 0]], [[0, 2, 2], [1, 0, 0], [2, 1, 1]], [[0, 1, 0], [1, 2, 1], [2, 0, 2]]];

/// A rainbow KTS(3v + w) from a Kirkman frame on `v` points and, for each
/// group size `t`, a rainbow KTS(3t + w) with a rainbow sub-KTS(w).
///
/// Points: `(x, i) ↦ 3x + i` for frame points `x`, and the subsystem points
/// `W × {0,1,2}` as `3v + 3m + i`. Point `p` has colour `p mod 3`. Each
/// ingredient copy sends its colour-`i` points, in ascending order, to the
/// colour-`i` points of its group (or of `W`), so that colours are preserved
/// and the rainbow class lands on the pattern `{(·,0), (·,1), (·,2)}`.
/// Group 0 receives the whole ingredient; the other groups omit the
/// subsystem blocks.
///
/// Classes, in order: for each group, its expanded partial classes each
/// paired with an ingredient class that has no subsystem block; then the
/// rainbow class; then the other classes through the subsystem, joined
/// across groups by position.
pub fn rainbow_frame_construction(
    frame: &Frame,
    w: usize,
    ingredients: &[RainbowIngredient],
) -> Result<ColouredKts, ConstructionError> {
    let report = frame.verify()?;
    if !report.ok() || frame.design.k() != 3 {
        return precondition(format!("input is not a Kirkman frame:\n{report}"));
    }
    if w % 6 != 3 {
        return precondition(format!("w = {w} must be 3 mod 6"));
    }
    let v = frame.design.v();
    let out_v = 3 * v + w;
    let w_base = 3 * v as Point;

    let mut blocks: Vec<Vec<Point>> = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut r1_joined: Vec<Vec<usize>> = vec![Vec::new(); (w - 1) / 2];

    for (gi, group) in frame.groups.groups().iter().enumerate() {
        let t = group.len();
        let Some(ingredient) = ingredients.iter().find(|ing| ing.kts.kts.v() == 3 * t + w) else {
            return precondition(format!("no ingredient KTS({}) for a group of size {t}", 3 * t + w));
        };
        let prep = ingredient.prepare(w)?;
        let kts = &ingredient.kts.kts;
        let mut map = vec![0 as Point; kts.v()];
        for c in 0..3 {
            for (m, &p) in prep.outer[c].iter().enumerate() {
                map[p as usize] = 3 * group[m] + c as Point;
            }
            for (m, &p) in prep.inner[c].iter().enumerate() {
                map[p as usize] = w_base + 3 * m as Point + c as Point;
            }
        }
        let copy_class = |class: usize, blocks: &mut Vec<Vec<Point>>| -> Vec<usize> {
            let mut out = Vec::new();
            for &b in &kts.resolution.classes[class].blocks {
                let block = kts.design.block(b);
                if gi != 0 && block.iter().all(|&p| prep.in_sub[p as usize]) {
                    continue;
                }
                out.push(blocks.len());
                blocks.push(block.iter().map(|&p| map[p as usize]).collect());
            }
            out
        };

        let missing = frame.classes_missing(gi);
        if 3 * missing.len() != prep.r2.len() {
            return precondition(format!(
                "group {gi} is missed by {} partial classes but the ingredient has {} classes off the subsystem",
                missing.len(),
                prep.r2.len()
            ));
        }
        let mut r2 = prep.r2.iter();
        for &pc in &missing {
            for gadget in GADGET {
                let mut class = Vec::new();
                for &b in &frame.resolution.classes[pc].blocks {
                    let xyz = frame.design.block(b);
                    for triple in gadget {
                        class.push(blocks.len());
                        blocks.push((0..3).map(|j| 3 * xyz[j] + triple[j]).collect());
                    }
                }
                class.extend(copy_class(*r2.next().expect("counted above"), &mut blocks));
                classes.push(class);
            }
        }
        if prep.r1.len() != r1_joined.len() {
            return precondition(format!("the ingredient's subsystem is not a sub-KTS({w})"));
        }
        for (j, &c) in prep.r1.iter().enumerate() {
            let part = copy_class(c, &mut blocks);
            r1_joined[j].extend(part);
        }
    }
    classes.extend(r1_joined);

    let design = Design::new(out_v, 3, blocks)?;
    let colouring = Colouring::new((0..out_v as Point).map(|p| p % 3).collect(), 3)?;
    let out = ColouredKts { kts: Kts { design, resolution: Resolution::from_full_classes(classes) }, colouring };
    let mut report = out.verify()?;
    report.absorb(is_weak(&out.kts.design, &out.colouring)?);
    report.absorb(out.rainbow()?.report);
    let sub: Vec<Point> = (w_base..out_v as Point).collect();
    report.absorb(verify_subsystem(&out.kts.design, &out.kts.resolution, &sub)?);
    require("rainbow_frame_construction", report)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gadget_covers_all_copy_pairs() {
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            let mut seen = [[0; 3]; 3];
            for class in GADGET {
                for t in class {
                    seen[t[a] as usize][t[b] as usize] += 1;
                }
            }
            assert!(seen.iter().flatten().all(|&n| n == 1));
        }
        // Each gadget class uses every copy of every point once.
        for class in GADGET {
            for j in 0..3 {
                let mut copies: Vec<u32> = class.iter().map(|t| t[j]).collect();
                copies.sort_unstable();
                assert_eq!(copies, vec![0, 1, 2]);
            }
        }
    }
}
