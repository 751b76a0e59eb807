use crate::design::{is_weak, ColouredKts, Colouring, Design, GroupPartition, Kts, Point, Resolution};

use super::{precondition, require, ConstructionError, Rgdd};

/// The resolvable transversal design TD(3, v) for odd `v`.
///
/// Groups `A = 0..v`, `B = v..2v`, `C = 2v..3v`; class `d` holds the blocks
/// `{a_i, b_{i+d}, c_{2i+d}}` for `i ∈ Z_v`.
pub fn td3_resolvable(v: usize) -> Result<Rgdd, ConstructionError> {
    if v.is_multiple_of(2) {
        return precondition(format!("v = {v} must be odd, otherwise i ↦ 2i + d is not a bijection"));
    }
    let n = v as Point;
    let mut blocks = Vec::with_capacity(v * v);
    let mut classes = Vec::with_capacity(v);
    for d in 0..n {
        classes.push((blocks.len()..blocks.len() + v).collect());
        for i in 0..n {
            blocks.push([i, n + (i + d) % n, 2 * n + (2 * i + d) % n]);
        }
    }
    let design = Design::new(3 * v, 3, blocks)?;
    let groups = GroupPartition::new(3 * v, (0..3).map(|g| (g * n..(g + 1) * n).collect()).collect())?;
    let rgdd = Rgdd { design, groups, resolution: Resolution::from_full_classes(classes) };
    require("td3_resolvable", rgdd.verify()?)?;
    Ok(rgdd)
}

/// Group triples `(i, j, k)` for the nine transversal designs on
/// `A_i × B_j × C_k`, in three rows; each row covers every point once.
const SCHEDULE: [[[usize; 3]; 3]; 3] =
    [[[0, 0, 1], [1, 1, 2], [2, 2, 0]], [[0, 1, 0], [1, 2, 1], [2, 0, 2]], [[0, 2, 2], [1, 0, 0], [2, 1, 1]]];

/// A KTS(9v) from a KTS(3v) with an equitable weak 3-colouring, `v` odd.
///
/// Copies of the input sit on `A = 0..3v`, `B = 3v..6v`, `C = 6v..9v`, and
/// colour class `i` of the output is `A_i ∪ B_i ∪ C_i`. Classes `0..(3v-1)/2`
/// join matching classes of the three copies; each remaining class joins
/// one transversal-design class across the three triples of a schedule row.
pub fn tripling(input: &ColouredKts) -> Result<ColouredKts, ConstructionError> {
    let report = input.verify()?;
    if !report.ok() {
        return precondition(format!("input is not a weakly coloured KTS:\n{report}"));
    }
    let n3 = input.kts.v();
    let colouring = &input.colouring;
    if colouring.delta() != 3 || colouring.class_sizes().iter().any(|&s| s * 3 != n3) {
        return precondition(format!(
            "the colouring must have 3 classes of size {} (type {})",
            n3 / 3,
            colouring.colour_type()
        ));
    }
    let v = n3 / 3;
    if v.is_multiple_of(2) {
        return precondition(format!("KTS({n3}) has v = {v}, which must be odd"));
    }

    let copy = |c: usize, p: Point| (c * n3) as Point + p;
    let mut blocks: Vec<Vec<Point>> = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for class in &input.kts.resolution.classes {
        let mut joined = Vec::new();
        for c in 0..3 {
            for &b in &class.blocks {
                joined.push(blocks.len());
                blocks.push(input.kts.design.block(b).iter().map(|&p| copy(c, p)).collect());
            }
        }
        classes.push(joined);
    }

    let parts: Vec<Vec<Point>> = (0..3).map(|i| colouring.class(i)).collect();
    let td = td3_resolvable(v)?;
    for row in SCHEDULE {
        for d in &td.resolution.classes {
            let mut joined = Vec::new();
            for [i, j, k] in row {
                for &b in &d.blocks {
                    let [a, bb, c] = [0, 1, 2].map(|g| td.design.block(b)[g] as usize - g * v);
                    joined.push(blocks.len());
                    blocks.push(vec![copy(0, parts[i][a]), copy(1, parts[j][bb]), copy(2, parts[k][c])]);
                }
            }
            classes.push(joined);
        }
    }

    let design = Design::new(3 * n3, 3, blocks)?;
    let out_colouring = Colouring::new((0..3 * n3).map(|p| colouring.colour((p % n3) as Point)).collect(), 3)?;
    let out = ColouredKts {
        kts: Kts { design, resolution: Resolution::from_full_classes(classes) },
        colouring: out_colouring,
    };
    let mut report = out.verify()?;
    report.absorb(is_weak(&out.kts.design, &out.colouring)?);
    require("tripling", report)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn td3_small() {
        let td = td3_resolvable(3).unwrap();
        assert_eq!(td.design.num_blocks(), 9);
        assert_eq!(td.resolution.len(), 3);
        let first: Vec<&[Point]> = td.resolution.classes[0].blocks.iter().map(|&b| td.design.block(b)).collect();
        assert_eq!(first, vec![&[0, 3, 6][..], &[1, 4, 8], &[2, 5, 7]]);
        assert!(td3_resolvable(4).is_err());
    }

    #[test]
    fn schedule_covers_each_group_pair_once() {
        let mut ab = [[0; 3]; 3];
        let mut ac = [[0; 3]; 3];
        let mut bc = [[0; 3]; 3];
        for row in SCHEDULE {
            for [i, j, k] in row {
                ab[i][j] += 1;
                ac[i][k] += 1;
                bc[j][k] += 1;
            }
            let mut seen: Vec<usize> = row.iter().map(|t| t[0]).collect();
            seen.sort_unstable();
            assert_eq!(seen, vec![0, 1, 2]);
        }
        assert!([ab, ac, bc].iter().all(|m| m.iter().flatten().all(|&n| n == 1)));
        assert!(SCHEDULE.iter().flatten().all(|[i, j, k]| !(i == j && j == k)));
    }
}
