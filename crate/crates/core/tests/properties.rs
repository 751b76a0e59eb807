use proptest::prelude::*;

use kirkman::catalog::{kts15, kts9, tv_kts33, CatalogKts};
use kirkman::constructions::{frame_fill_one_point, rgdd_4_3_coloured};
use kirkman::design::{delete_point, is_weak, Design, Kts, Point, Resolution};
use kirkman::format::{emit_colouring, emit_design, parse_colouring, parse_design};
use kirkman::solver::{search_weak_colouring, SearchOptions};

fn system(i: usize) -> CatalogKts {
    match i {
        0 => kts9(),
        1 => kts15(),
        i => tv_kts33(i - 1).unwrap(),
    }
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<Point>> {
    Just((0..n as Point).collect::<Vec<_>>()).prop_shuffle()
}

/// Exhaustive search over all colourings, for tiny instances.
fn brute_force(d: &Design, delta: u32) -> bool {
    let v = d.v() as u32;
    (0..delta.pow(v)).any(|mut code| {
        let c: Vec<u32> = (0..v)
            .map(|_| {
                let x = code % delta;
                code /= delta;
                x
            })
            .collect();
        d.blocks().all(|b| b.iter().any(|&p| c[p as usize] != c[b[0] as usize]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn relabelling_keeps_the_verdicts(perm in shuffled(15)) {
        let k = kts15();
        let design = k.kts.design.relabel(15, |p| perm[p as usize]).unwrap();
        let moved = Kts { design, resolution: k.kts.resolution.clone() };
        prop_assert!(moved.verify().unwrap().ok());
        let colouring = k.colouring("rainbow").unwrap().transported(15, |p| perm[p as usize]).unwrap();
        prop_assert!(is_weak(&moved.design, &colouring).unwrap().ok());
        for delta in [2, 3] {
            let a = search_weak_colouring(&k.kts.design, &SearchOptions::new(delta)).unwrap().is_sat();
            let b = search_weak_colouring(&moved.design, &SearchOptions::new(delta)).unwrap().is_sat();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn permuting_colours_keeps_weakness(sys in 0usize..8, perm in shuffled(4)) {
        let k = system(sys);
        let c = &k.colourings[0].colouring;
        let delta = c.delta();
        let recoloured = c.recoloured(delta, |x| perm.iter().copied().filter(|&y| y < delta).nth(x as usize).unwrap()).unwrap();
        prop_assert!(is_weak(&k.kts.design, &recoloured).unwrap().ok());
        prop_assert_eq!(recoloured.colour_type(), c.colour_type());
    }

    #[test]
    fn files_round_trip(sys in 0usize..32, perm in shuffled(33)) {
        let k = system(sys);
        let v = k.kts.v();
        let images: Vec<Point> = perm.into_iter().filter(|&p| (p as usize) < v).collect();
        let design = k.kts.design.relabel(v, |p| images[p as usize]).unwrap();
        let text = emit_design(&design, None, Some(&k.kts.resolution));
        let back = parse_design(&text).unwrap();
        prop_assert_eq!(&back.design, &design);
        prop_assert_eq!(back.resolution.as_ref(), Some(&k.kts.resolution));
        let c = &k.colourings[0].colouring;
        prop_assert_eq!(&parse_colouring(&emit_colouring(c), Some(v)).unwrap(), c);
    }

    #[test]
    fn delete_then_fill_restores_the_system(sys in 0usize..32, p in 0u32..33) {
        let k = system(sys).kts;
        let v = k.v();
        let p = p % v as u32;
        let frame = delete_point(&k, p).unwrap();
        prop_assert!(frame.verify().unwrap().ok());
        let kts3 = Kts { design: Design::new(3, 3, [[0, 1, 2]]).unwrap(), resolution: Resolution::from_full_classes(vec![vec![0]]) };
        let filled = frame_fill_one_point(&frame, &vec![kts3; (v - 1) / 2]).unwrap();
        let last = v as u32 - 1;
        let back = filled.design.relabel(v, |q| if q == last { p } else if q >= p { q + 1 } else { q }).unwrap();
        prop_assert!(back.same_blocks(&k.design));
    }

    #[test]
    fn coloured_rgdds_beyond_the_sweep(delta in 4u32..16, c in prop::array::uniform3(0u32..16)) {
        let c = c.map(|x| x % delta);
        let g = rgdd_4_3_coloured(c, delta).unwrap();
        prop_assert!(g.rgdd.verify().unwrap().ok());
        prop_assert!(is_weak(&g.rgdd.design, &g.colouring).unwrap().ok());
        for j in 0..3u32 {
            for i in 0..4 {
                prop_assert_eq!(g.colouring.colour(4 * j + i), (c[j as usize] + i) % delta);
            }
        }
        prop_assert!(c[0] == c[1] && c[1] == c[2] || g.rgdd.design.find_block(&[0, 4, 8]).is_some());
    }

    #[test]
    fn solver_matches_brute_force(
        v in 3usize..10,
        raw in prop::collection::vec(prop::array::uniform3(0u32..10), 1..14),
        delta in 2u32..4,
    ) {
        let mut blocks: Vec<[u32; 3]> = raw
            .into_iter()
            .map(|b| b.map(|p| p % v as u32))
            .filter(|b| b[0] != b[1] && b[1] != b[2] && b[0] != b[2])
            .map(|mut b| { b.sort_unstable(); b })
            .collect();
        blocks.sort_unstable();
        blocks.dedup();
        let d = Design::new(v, 3, blocks).unwrap();
        let out = search_weak_colouring(&d, &SearchOptions::new(delta)).unwrap();
        prop_assert_eq!(out.is_sat(), brute_force(&d, delta));
        prop_assert!(out.is_sat() || out.is_unsat());
    }
}
