use crate::design::{is_weak, Colour, ColouredFrame, ColouredKts, Colouring, Design, Frame, Kts, Point, Resolution};

use super::{precondition, require, ConstructionError};

/// A KTS(gu + 1) from a Kirkman frame of type `g^u` by adding one point
/// `∞ = v` and, on each group `G ∪ {∞}`, a KTS(|G| + 1) from `fills`.
///
/// Fill `i` goes on group `i`: its points `0..|G|` land on the group's points
/// in ascending order and its last point on `∞`. The `|G|/2` partial classes
/// missing group `i` are paired, in order, with the fill's classes.
pub fn frame_fill_one_point(frame: &Frame, fills: &[Kts]) -> Result<Kts, ConstructionError> {
    fill(frame, fills, None).map(|(kts, _)| kts)
}

/// [`frame_fill_one_point`] with colourings: every fill must agree with the
/// frame colouring on its group and all fills must give `∞` the same colour.
pub fn frame_fill_one_point_coloured(
    frame: &ColouredFrame,
    fills: &[ColouredKts],
) -> Result<ColouredKts, ConstructionError> {
    let kts: Vec<Kts> = fills.iter().map(|f| f.kts.clone()).collect();
    let colourings: Vec<&Colouring> = fills.iter().map(|f| &f.colouring).collect();
    let (kts, colouring) = fill(&frame.frame, &kts, Some((&frame.colouring, &colourings)))?;
    Ok(ColouredKts { kts, colouring: colouring.expect("coloured inputs give a coloured output") })
}

fn fill(
    frame: &Frame,
    fills: &[Kts],
    colours: Option<(&Colouring, &[&Colouring])>,
) -> Result<(Kts, Option<Colouring>), ConstructionError> {
    let report = frame.verify()?;
    if !report.ok() || frame.design.k() != 3 {
        return precondition(format!("input is not a Kirkman frame:\n{report}"));
    }
    let groups = frame.groups.groups();
    if fills.len() != groups.len() {
        return precondition(format!("{} groups but {} fills", groups.len(), fills.len()));
    }
    let v = frame.design.v();
    let inf = v as Point;
    let mut blocks: Vec<Vec<Point>> = frame.design.blocks().map(<[Point]>::to_vec).collect();
    let mut classes = Vec::new();
    let mut inf_colour: Option<Colour> = None;
    let mut out_colours: Vec<Colour> = colours.map(|(c, _)| c.colours().to_vec()).unwrap_or_default();

    for (i, (group, kts)) in groups.iter().zip(fills).enumerate() {
        let g = group.len();
        let report = kts.verify()?;
        if !report.ok() || kts.v() != g + 1 {
            return precondition(format!("fill {i} is not a KTS({}):\n{report}", g + 1));
        }
        let missing = frame.classes_missing(i);
        if missing.len() != kts.resolution.len() {
            return precondition(format!(
                "group {i} is missed by {} partial classes but its fill has {} classes",
                missing.len(),
                kts.resolution.len()
            ));
        }
        let map = |p: Point| if (p as usize) < g { group[p as usize] } else { inf };
        if let Some((frame_colouring, fill_colourings)) = colours {
            let fc = fill_colourings[i];
            for (m, &p) in group.iter().enumerate() {
                if fc.colour(m as Point) != frame_colouring.colour(p) {
                    return precondition(format!(
                        "fill {i} colours its point {m} with {} but the frame colours point {p} with {}",
                        fc.colour(m as Point),
                        frame_colouring.colour(p)
                    ));
                }
            }
            let c = fc.colour(g as Point);
            match inf_colour {
                Some(prev) if prev != c => {
                    return precondition(format!("fills disagree on the colour of ∞ ({prev} and {c})"));
                }
                _ => inf_colour = Some(c),
            }
        }
        for (t, &pc) in missing.iter().enumerate() {
            let mut class = frame.resolution.classes[pc].blocks.clone();
            for &b in &kts.resolution.classes[t].blocks {
                class.push(blocks.len());
                blocks.push(kts.design.block(b).iter().map(|&p| map(p)).collect());
            }
            classes.push(class);
        }
    }

    let design = Design::new(v + 1, 3, blocks)?;
    let kts = Kts { design, resolution: Resolution::from_full_classes(classes) };
    let mut report = kts.verify()?;
    let colouring = match colours {
        Some((frame_colouring, fill_colourings)) => {
            out_colours.push(inf_colour.unwrap_or(0));
            let delta = fill_colourings.iter().map(|c| c.delta()).chain([frame_colouring.delta()]).max().unwrap_or(1);
            let colouring = Colouring::new(out_colours, delta)?;
            report.absorb(is_weak(&kts.design, &colouring)?);
            Some(colouring)
        }
        None => None,
    };
    require("frame_fill_one_point", report)?;
    Ok((kts, colouring))
}

/// Relabels a coloured KTS(g + 1) so that it can fill a group whose points
/// have colours `group_colours` (in ascending point order), with its last
/// point on `∞` coloured `inf_colour`.
///
/// Colours are permuted first, matching classes by size (lowest fill colour
/// with the right size for each target colour in turn). Then `∞` takes the
/// lowest fill point of colour `inf_colour`, and each group position takes
/// the lowest unused fill point of its colour.
pub fn align_fill(
    fill: &ColouredKts,
    group_colours: &[Colour],
    inf_colour: Colour,
) -> Result<ColouredKts, ConstructionError> {
    let n = fill.kts.v();
    if group_colours.len() + 1 != n {
        return precondition(format!("a KTS({n}) cannot fill a group of {} points", group_colours.len()));
    }
    let delta =
        group_colours.iter().copied().chain([inf_colour]).max().unwrap_or(0).max(fill.colouring.delta() - 1) + 1;
    let mut target = vec![0usize; delta as usize];
    for &c in group_colours.iter().chain([&inf_colour]) {
        target[c as usize] += 1;
    }
    let mut have = fill.colouring.class_sizes();
    have.resize(delta as usize, 0);

    let mut perm = vec![None; delta as usize];
    let mut taken = vec![false; delta as usize];
    for (t, &size) in target.iter().enumerate() {
        let Some(c) = (0..delta as usize).find(|&c| !taken[c] && have[c] == size) else {
            return precondition(format!(
                "fill colour type {} cannot be matched to the group's colours",
                fill.colouring.colour_type()
            ));
        };
        taken[c] = true;
        perm[c] = Some(t as Colour);
    }
    let recolour = |p: Point| perm[fill.colouring.colour(p) as usize].expect("every colour matched");

    let mut used = vec![false; n];
    let mut map = vec![0 as Point; n];
    let mut place = |label: Point, colour: Colour, used: &mut Vec<bool>| {
        let p = (0..n as Point).find(|&p| !used[p as usize] && recolour(p) == colour).expect("counts match");
        used[p as usize] = true;
        map[p as usize] = label;
    };
    place((n - 1) as Point, inf_colour, &mut used);
    for (m, &c) in group_colours.iter().enumerate() {
        place(m as Point, c, &mut used);
    }
    let design = fill.kts.design.relabel(n, |p| map[p as usize])?;
    let mut colours = vec![0; n];
    for p in 0..n as Point {
        colours[map[p as usize] as usize] = recolour(p);
    }
    Ok(ColouredKts {
        kts: Kts { design, resolution: fill.kts.resolution.clone() },
        colouring: Colouring::new(colours, delta)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::kts9;
    use crate::design::delete_point;

    #[test]
    fn delete_then_fill_round_trip() {
        let kts = kts9().kts;
        for p in 0..9 {
            let frame = delete_point(&kts, p).unwrap();
            let kts3 = Kts {
                design: Design::new(3, 3, [[0, 1, 2]]).unwrap(),
                resolution: Resolution::from_full_classes(vec![vec![0]]),
            };
            let filled = frame_fill_one_point(&frame, &vec![kts3; 4]).unwrap();
            // Undo the relabelling of delete_point: ∞ goes back to p.
            let back = filled
                .design
                .relabel(9, |q| {
                    if q == 8 {
                        p
                    } else if q >= p {
                        q + 1
                    } else {
                        q
                    }
                })
                .unwrap();
            assert!(back.same_blocks(&kts.design));
        }
    }

    #[test]
    fn align_fill_matches_colours() {
        let c = kts9();
        let fill = c.coloured_with("1-4-4").unwrap();
        let out = align_fill(&fill, &[2, 2, 1, 1, 1, 1, 2, 2], 0).unwrap();
        assert_eq!(out.colouring.colours(), &[2, 2, 1, 1, 1, 1, 2, 2, 0]);
        assert!(out.verify().unwrap().ok());
        assert!(align_fill(&fill, &[0, 0, 0, 1, 1, 1, 2, 2], 2).is_err());
    }
}
