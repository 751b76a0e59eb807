use std::collections::HashSet;

use crate::design::{is_weak, verify_pairwise_balance, Colour, ColouredKts, Colouring, Design, Kts, Point};
use crate::solver::{find_resolution, ResolveOptions, ResolveOutcome};

use super::{precondition, require, ConstructionError};

/// A quadruple-system block in the order `(w, x, y, z)` used by K(Q).
pub type KqBlock = [Point; 4];

/// The triple system K(Q) of order `2v + 1` on `q_i = i`, `q_i' = v + i`
/// and `∞ = 2v`, built from the blocks of a quadruple system of order `v`
/// with each block's `w` listed first.
pub fn kq_design(v: usize, ordered: &[KqBlock]) -> Result<Design, ConstructionError> {
    let n = v as Point;
    let inf = 2 * n;
    let p = |a: Point| n + a;
    let mut seen = HashSet::new();
    let mut blocks: Vec<[Point; 3]> = Vec::with_capacity(9 * ordered.len());
    for &[w, x, y, z] in ordered {
        if [w, x, y, z].iter().any(|&a| a >= n) {
            return precondition(format!("block {:?} has a point outside 0..{v}", [w, x, y, z]));
        }
        for a in [w, x, y, z] {
            if seen.insert(a) {
                blocks.push([inf, a, p(a)]);
            }
        }
        blocks.extend([
            [x, y, z],
            [w, y, p(z)],
            [p(x), w, z],
            [x, w, p(y)],
            [p(x), p(y), p(z)],
            [p(w), p(y), z],
            [x, p(w), p(z)],
            [p(x), p(w), y],
        ]);
    }
    Ok(Design::new(2 * v + 1, 3, blocks)?)
}

/// K(Q) with a resolution recovered by [`find_resolution`].
pub fn kq_build(v: usize, ordered: &[KqBlock], options: &ResolveOptions) -> Result<Kts, ConstructionError> {
    let design = kq_design(v, ordered)?;
    require("kq_build", verify_pairwise_balance(&design))?;
    let resolved = find_resolution(&design, options);
    match resolved.outcome {
        ResolveOutcome::Found(resolution) => {
            let kts = Kts { design, resolution };
            require("kq_build", kts.verify()?)?;
            Ok(kts)
        }
        ResolveOutcome::NoResolution => Err(ConstructionError::Resolution("the design is not resolvable".into())),
        ResolveOutcome::Timeout => Err(ConstructionError::Resolution("time budget exhausted".into())),
        ResolveOutcome::NotApplicable(why) => Err(ConstructionError::Resolution(why)),
    }
}

fn check_input(q: &Design, colouring: &Colouring) -> Result<(), ConstructionError> {
    if q.k() != 4 {
        return precondition(format!("expected blocks of size 4, found {}", q.k()));
    }
    let report = verify_pairwise_balance(q);
    if !report.ok() {
        return precondition(format!("input is not a quadruple system:\n{report}"));
    }
    if colouring.v() != q.v() {
        return precondition(format!("colouring has {} points, design has {}", colouring.v(), q.v()));
    }
    let report = is_weak(q, colouring)?;
    if !report.ok() {
        return precondition(format!("colouring is not weak:\n{report}"));
    }
    Ok(())
}

fn finish(kts: Kts, colours: Vec<Colour>, delta: u32) -> Result<ColouredKts, ConstructionError> {
    let out = ColouredKts { kts, colouring: Colouring::new(colours, delta)? };
    require("kq colouring", out.verify()?)?;
    Ok(out)
}

/// K(Q) with a weak `2δ`-colouring from a weak `δ`-colouring of Q: `q_i'`
/// gets colour `φ(q_i) + δ` and `∞` colour 0. In each block, `w` is the
/// lowest point whose colour is most frequent, so `{x, y, z}` is never
/// monochromatic.
pub fn kq_colour_2delta(q: &Design, colouring: &Colouring) -> Result<ColouredKts, ConstructionError> {
    check_input(q, colouring)?;
    let delta = colouring.delta();
    let ordered: Vec<KqBlock> = q
        .blocks()
        .map(|b| {
            let count = |p: Point| b.iter().filter(|&&a| colouring.colour(a) == colouring.colour(p)).count();
            let best = b.iter().map(|&p| count(p)).max().expect("nonempty block");
            let w = *b.iter().find(|&&p| count(p) == best).expect("max is attained");
            let rest: Vec<Point> = b.iter().copied().filter(|&p| p != w).collect();
            [w, rest[0], rest[1], rest[2]]
        })
        .collect();
    let kts = kq_build(q.v(), &ordered, &ResolveOptions::default())?;
    let v = q.v() as Point;
    let colours = (0..2 * v + 1)
        .map(|p| match p {
            p if p < v => colouring.colour(p),
            p if p < 2 * v => colouring.colour(p - v) + delta,
            _ => 0,
        })
        .collect();
    finish(kts, colours, 2 * delta)
}

/// K(Q) with a weak `(δ + 1)`-colouring from a `δ`-colouring of Q giving
/// every block at least three colours: `q_i'` shares the colour of `q_i` and
/// `∞` gets the new colour `δ`. In each block `(x, y, z)` is the
/// lexicographically least triple with three different colours.
pub fn kq_colour_delta_plus_one(q: &Design, colouring: &Colouring) -> Result<ColouredKts, ConstructionError> {
    check_input(q, colouring)?;
    let delta = colouring.delta();
    let mut ordered = Vec::with_capacity(q.num_blocks());
    for (i, b) in q.blocks().enumerate() {
        let c = |t: usize| colouring.colour(b[t]);
        let triple = (0..4)
            .flat_map(|a| (a + 1..4).flat_map(move |bb| (bb + 1..4).map(move |cc| (a, bb, cc))))
            .find(|&(a, bb, cc)| c(a) != c(bb) && c(a) != c(cc) && c(bb) != c(cc));
        let Some((a, bb, cc)) = triple else {
            return precondition(format!("block {i} {b:?} has fewer than 3 colours"));
        };
        let w = 6 - a - bb - cc;
        ordered.push([b[w], b[a], b[bb], b[cc]]);
    }
    let kts = kq_build(q.v(), &ordered, &ResolveOptions::default())?;
    let v = q.v() as Point;
    let colours = (0..2 * v + 1).map(|p| if p < 2 * v { colouring.colour(p % v) } else { delta }).collect();
    finish(kts, colours, delta + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::q13;

    #[test]
    fn kq13_counts_and_infinity_triples() {
        let q = q13();
        let d = kq_design(13, &q.written).unwrap();
        assert_eq!(d.v(), 27);
        assert_eq!(d.num_blocks(), 117);
        for i in 0..13 {
            assert!(d.find_block(&[i, 13 + i, 26]).is_some());
        }
        assert!(verify_pairwise_balance(&d).ok());
    }

    #[test]
    fn rejects_two_coloured_blocks_for_delta_plus_one() {
        let q = q13();
        assert!(matches!(kq_colour_delta_plus_one(&q.design, &q.colouring), Err(ConstructionError::Precondition(_))));
    }
}
