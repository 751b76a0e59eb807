use std::collections::HashSet;

use kirkman::catalog::{gdd_4x4, ids, kts15, kts9, lookup, q13, self_test, sigma_kts, tv_kts33, tv_starters};
use kirkman::design::{is_weak, verify_pairwise_balance, Colouring, Design, PartitionType};

/// Blocks of each TV system outside the starter class, as printed in the
/// long-form listing, parsed independently of the development code.
fn developed_oracle() -> Vec<Vec<[u32; 3]>> {
    let text = include_str!("data/tv_developed.txt");
    let mut systems = Vec::new();
    for line in text.lines().filter(|l| !l.starts_with('#')) {
        if line.starts_with("system") {
            systems.push(Vec::new());
            continue;
        }
        let pts: Vec<u32> = line.split_whitespace().map(|t| t.parse().unwrap()).collect();
        let sys = systems.last_mut().unwrap();
        for t in pts.chunks(3) {
            let mut b = [t[0], t[1], t[2]];
            b.sort_unstable();
            sys.push(b);
        }
    }
    systems
}

#[test]
fn tv_development_matches_listing() {
    let oracle = developed_oracle();
    assert_eq!(oracle.len(), 30);
    for (i, blocks) in oracle.iter().enumerate() {
        let d = tv_kts33(i + 1).unwrap().kts.design;
        let distinct: HashSet<&[u32; 3]> = blocks.iter().collect();
        assert_eq!(distinct.len(), blocks.len(), "system {}", i + 1);
        for b in blocks {
            assert!(d.find_block(b).is_some(), "system {} lacks {b:?}", i + 1);
        }
        let (starter, _) = tv_starters(i + 1).unwrap();
        assert_eq!(starter.len(), 11);
    }
}

/// Sorted classes, each a sorted list of blocks.
fn canonical_classes(i: usize) -> Vec<Vec<Vec<u32>>> {
    let k = tv_kts33(i).unwrap().kts;
    let mut out: Vec<Vec<Vec<u32>>> = k
        .resolution
        .classes
        .iter()
        .map(|c| {
            let mut blocks: Vec<Vec<u32>> = c.blocks.iter().map(|&b| k.design.block(b).to_vec()).collect();
            blocks.sort();
            blocks
        })
        .collect();
    out.sort();
    out
}

#[test]
fn tv_systems_are_pairwise_distinct_kirkman_systems() {
    let resolved: HashSet<Vec<Vec<Vec<u32>>>> = (1..=30).map(canonical_classes).collect();
    assert_eq!(resolved.len(), 30);
    // Several of the thirty share an underlying STS and differ only in the
    // resolution: 11/12, 13/14, 15/16, 17/18, 20/21/22 and 24/25/26/27.
    let blocks: HashSet<Design> = (1..=30).map(|i| tv_kts33(i).unwrap().kts.design.canonical()).collect();
    assert_eq!(blocks.len(), 21);
    let same = |a: usize, b: usize| tv_kts33(a).unwrap().kts.design.same_blocks(&tv_kts33(b).unwrap().kts.design);
    assert!(same(11, 12) && same(20, 22) && same(24, 27));
    assert!(!same(1, 2));
}

#[test]
fn tv_certificates_have_type_8_8_8_9() {
    let want = PartitionType::parse("8^3 9^1").unwrap();
    for i in 1..=30 {
        let c = tv_kts33(i).unwrap();
        let col = c.colouring("paper").unwrap();
        assert_eq!(col.colour_type(), want);
        assert!(is_weak(&c.kts.design, col).unwrap().ok());
    }
}

#[test]
fn every_catalog_entry_self_tests() {
    for id in ids() {
        let e = lookup(&id).unwrap();
        assert!(self_test(&e).unwrap().ok(), "{id}");
    }
}

#[test]
fn kts9_colour_classes_from_the_table() {
    // 1-based classes {1,4,9}, {2,5,7}, {3,6,8}.
    let k = kts9();
    let c = Colouring::from_classes(9, &[&[0, 3, 8], &[1, 4, 6], &[2, 5, 7]]).unwrap();
    assert!(is_weak(&k.kts.design, &c).unwrap().ok());
    let rainbow =
        k.kts.resolution.classes.iter().position(|cl| cl.blocks.iter().any(|&b| k.kts.design.block(b) == [0, 1, 2]));
    let report = kirkman::design::rainbow_check(&k.kts.design, &k.kts.resolution, &c).unwrap();
    assert_eq!(report.rainbow_classes, vec![rainbow.unwrap()]);

    let lopsided = Colouring::from_classes(9, &[&[0], &[1, 2, 4, 8], &[3, 5, 6, 7]]).unwrap();
    assert_eq!(lopsided.colour_type().to_string(), "1^1 4^2");
    assert!(!lopsided.is_equitable());
}

#[test]
fn kts15_rainbow_partition() {
    let k = kts15();
    let c = Colouring::from_classes(15, &[&[0, 3, 6, 12, 13], &[1, 4, 5, 7, 8], &[2, 9, 10, 11, 14]]).unwrap();
    assert_eq!(&c, k.colouring("rainbow").unwrap());
    assert!(k.coloured().rainbow().unwrap().is_rainbow());
}

#[test]
fn sigma_systems_have_the_right_size() {
    for v in [21, 33, 39, 57, 69] {
        let k = sigma_kts(v).unwrap();
        assert_eq!(k.kts.design.num_blocks(), v * (v - 1) / 6);
        assert_eq!(k.kts.resolution.len(), (v - 1) / 2);
        assert_eq!(k.coloured().rainbow().unwrap().rainbow_classes.len(), 1);
    }
    assert!(sigma_kts(27).is_err());
}

#[test]
fn gdd_and_quadruple_system() {
    let g = gdd_4x4();
    // Tuple (0, 0, 1, 2) is the block {0_0, 0_1, 1_2, 2_3}.
    assert!(g.gdd.design.find_block(&[0, 4, 9, 14]).is_some());
    let q = q13();
    assert!(verify_pairwise_balance(&q.design).ok());
    assert_eq!(q.written[12], [12, 0, 2, 8]);
    assert!(is_weak(&q.design, &q.colouring).unwrap().ok());
}
