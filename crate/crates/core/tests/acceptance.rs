//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Built with `harness = false`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use kirkman::catalog::{
    gdd_4x4, ids, kts15, kts9, lookup, q13, rotational_kts33, self_test, sigma_kts, tv_kts33, CatalogKts,
};
use kirkman::constructions::{
    align_fill, default_base_frame, frame_8_4_coloured, frame_fill_one_point_coloured, gdd_blowup, kq_build,
    kq_colour_2delta, rainbow_frame_construction, rgdd_4_3_coloured, sts_to_kts_pipeline, tripling, Embedding,
    RainbowIngredient,
};
use kirkman::design::{
    delete_point, induced_subsystem, is_weak, rainbow_check, verify_frame, verify_pairwise_balance, verify_subsystem,
    ColouredKts, Colouring, Design, Kts, PartitionType, Point, Resolution,
};
use kirkman::solver::{
    chromatic_number, find_resolution, search_weak_colouring, Chromatic, ResolveOptions, SearchOptions,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ty(text: &str) -> PartitionType {
    PartitionType::parse(text).expect("valid type")
}

fn chi(design: &Design, max: u32) -> Result<u32, String> {
    match chromatic_number(design, max, None, 1).map_err(err)?.result {
        Chromatic::Exact { delta, .. } => Ok(delta),
        other => Err(format!("chromatic number not settled: {other:?}")),
    }
}

fn full_check(k: &ColouredKts) -> Result<(), String> {
    let report = k.verify().map_err(err)?;
    ensure!(report.ok(), "KTS({}) fails verification:\n{report}", k.kts.v());
    let v = k.kts.v();
    ensure!(k.kts.design.num_blocks() == v * (v - 1) / 6, "wrong block count for KTS({v})");
    ensure!(k.kts.resolution.len() == (v - 1) / 2, "wrong class count for KTS({v})");
    Ok(())
}

fn c1_catalog() -> Outcome {
    let list = ids();
    for id in &list {
        let entry = lookup(id).map_err(err)?;
        let report = self_test(&entry).map_err(err)?;
        ensure!(report.ok(), "{id}:\n{report}");
    }
    Ok(format!("{} entries", list.len()))
}

fn c2_certificates() -> Outcome {
    for i in 1..=30 {
        let k = tv_kts33(i).map_err(err)?;
        let c = k.colouring("paper").ok_or(format!("tv33-{i} has no colouring"))?;
        ensure!(is_weak(&k.kts.design, c).map_err(err)?.ok(), "tv33-{i} colouring is not weak");
        ensure!(c.colour_type() == ty("8^3 9^1"), "tv33-{i} has type {}", c.colour_type());
    }
    let rot = rotational_kts33().map_err(err)?;
    let c = rot.colouring("paper").ok_or("rot33-59a has no colouring")?;
    ensure!(c.delta() == 3 && is_weak(&rot.kts.design, c).map_err(err)?.ok(), "rot33-59a colouring");
    Ok("30 TV strings of type 8^3 9^1, rot33-59a weak 3-colouring".into())
}

fn kts3() -> CatalogKts {
    let design = Design::new(3, 3, [[0, 1, 2]]).expect("one block");
    let kts = Kts { design, resolution: Resolution::from_full_classes(vec![vec![0]]) };
    let colouring = Colouring::new(vec![0, 1, 2], 3).expect("three colours");
    CatalogKts { kts, colourings: vec![kirkman::catalog::NamedColouring { name: "rainbow", colouring }] }
}

fn c3_rainbow() -> Outcome {
    let mut systems = vec![kts3(), kts9(), kts15()];
    for v in [21, 33, 39, 57, 69] {
        systems.push(sigma_kts(v).map_err(err)?);
    }
    for k in &systems {
        let v = k.kts.v();
        let name = if v == 9 { "3x3" } else { "rainbow" };
        let c = k.colouring(name).ok_or(format!("KTS({v}) has no {name} colouring"))?;
        let r = rainbow_check(&k.kts.design, &k.kts.resolution, c).map_err(err)?;
        ensure!(r.is_rainbow(), "KTS({v}) is not rainbow:\n{}", r.report);
        ensure!(r.rainbow_classes.len() == 1, "KTS({v}) has rainbow classes {:?}", r.rainbow_classes);
    }
    Ok("v = 3, 9, 15, 21, 33, 39, 57, 69".into())
}

fn c4_kts9() -> Outcome {
    let d = kts9().kts.design;
    ensure!(search_weak_colouring(&d, &SearchOptions::new(2)).map_err(err)?.is_unsat(), "delta 2 is not UNSAT");
    ensure!(search_weak_colouring(&d, &SearchOptions::new(3)).map_err(err)?.is_sat(), "delta 3 is not SAT");
    for t in ["3^3", "2^1 3^1 4^1", "1^1 4^2"] {
        let out = search_weak_colouring(&d, &SearchOptions::new(3).with_type(ty(t))).map_err(err)?;
        let c = out.colouring().ok_or(format!("type {t} not found"))?;
        ensure!(c.colour_type() == ty(t), "type {t} search returned {}", c.colour_type());
    }
    ensure!(chi(&d, 4)? == 3, "chromatic number is not 3");
    Ok("chi = 3, types 3^3, 2^1 3^1 4^1, 1^1 4^2".into())
}

fn c5_tv() -> Outcome {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(30);
    let results: Vec<Result<u64, String>> = std::thread::scope(|s| {
        let chunks: Vec<Vec<usize>> = (0..threads).map(|t| (1..=30).skip(t).step_by(threads).collect()).collect();
        let handles: Vec<_> = chunks
            .into_iter()
            .map(|chunk| {
                s.spawn(move || {
                    chunk
                        .into_iter()
                        .map(|i| -> Result<u64, String> {
                            let d = tv_kts33(i).map_err(err)?.kts.design;
                            let three = search_weak_colouring(&d, &SearchOptions::new(3)).map_err(err)?;
                            ensure!(three.is_unsat(), "tv33-{i}: delta 3 gave {}", three.status);
                            let four = search_weak_colouring(
                                &d,
                                &SearchOptions::new(4).equitable().budget(Duration::from_secs(600)),
                            )
                            .map_err(err)?;
                            let c = four.colouring().ok_or(format!("tv33-{i}: delta 4 gave {}", four.status))?;
                            ensure!(c.is_equitable(), "tv33-{i}: delta 4 colouring is not equitable");
                            Ok(three.stats.nodes)
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker")).collect()
    });
    let mut max_nodes = 0;
    for r in results {
        max_nodes = max_nodes.max(r?);
    }
    Ok(format!("30 systems, exhaustive delta 3 UNSAT (at most {max_nodes} nodes), delta 4 equitable"))
}

/// Plain backtracking over points in index order; a block is checked only
/// once all its points are coloured.
fn oracle_colourable(d: &Design, delta: u32) -> bool {
    let v = d.v();
    let mut last: Vec<Vec<usize>> = vec![Vec::new(); v];
    for (i, b) in d.blocks().enumerate() {
        last[*b.iter().max().expect("nonempty") as usize].push(i);
    }
    fn go(p: usize, c: &mut Vec<u32>, d: &Design, last: &[Vec<usize>], delta: u32) -> bool {
        if p == c.len() {
            return true;
        }
        for x in 0..delta {
            c[p] = x;
            let ok = last[p].iter().all(|&i| {
                let b = d.block(i);
                b.iter().any(|&q| c[q as usize] != c[b[0] as usize])
            });
            if ok && go(p + 1, c, d, last, delta) {
                return true;
            }
        }
        false
    }
    go(0, &mut vec![0; v], d, &last, delta)
}

fn random_sub(d: &Design, rng: &mut StdRng) -> Design {
    let target = rng.gen_range(7..=15);
    let mut order: Vec<usize> = (0..d.num_blocks()).collect();
    order.shuffle(rng);
    let mut pts: Vec<Point> = Vec::new();
    for i in order {
        let mut next = pts.clone();
        next.extend(d.block(i).iter().copied().filter(|p| !pts.contains(p)));
        if next.len() <= target {
            pts = next;
        }
    }
    pts.sort_unstable();
    let index = |p: Point| pts.binary_search(&p).ok().map(|i| i as Point);
    let blocks: Vec<Vec<Point>> =
        d.blocks().filter_map(|b| b.iter().map(|&p| index(p)).collect::<Option<Vec<_>>>()).collect();
    Design::new(pts.len(), 3, blocks).expect("induced blocks")
}

fn c6_oracle() -> Outcome {
    let mut rng = StdRng::seed_from_u64(6);
    let mut cases = vec![kts9().kts.design, kts15().kts.design];
    for _ in 0..20 {
        let i = rng.gen_range(1..=30);
        cases.push(random_sub(&tv_kts33(i).map_err(err)?.kts.design, &mut rng));
    }
    let mut unsat = 0;
    for (n, d) in cases.iter().enumerate() {
        for delta in [2, 3] {
            let out = search_weak_colouring(d, &SearchOptions::new(delta)).map_err(err)?;
            let expect = oracle_colourable(d, delta);
            ensure!(
                !out.is_unsat() == expect && (out.is_sat() || out.is_unsat()),
                "case {n}, delta {delta}: solver {} vs oracle {expect}",
                out.status
            );
            unsat += usize::from(!expect);
        }
    }
    Ok(format!("{} hypergraphs, {} UNSAT instances agree", cases.len(), unsat))
}

fn c7_tripling() -> Outcome {
    let k27 = tripling(&kts9().coloured_with("3x3").ok_or("3x3")?).map_err(err)?;
    full_check(&k27)?;
    ensure!(
        k27.kts.v() == 27 && k27.colouring.colour_type() == ty("9^3"),
        "KTS(27) type {}",
        k27.colouring.colour_type()
    );
    let k45 = tripling(&kts15().coloured_with("rainbow").ok_or("rainbow")?).map_err(err)?;
    full_check(&k45)?;
    ensure!(
        k45.kts.v() == 45 && k45.colouring.colour_type() == ty("15^3"),
        "KTS(45) type {}",
        k45.colouring.colour_type()
    );
    Ok("KTS(27) type 9^3, KTS(45) type 15^3".into())
}

fn rainbow_ingredient() -> Result<RainbowIngredient, String> {
    let kts = kts9().coloured_with("3x3").ok_or("3x3")?;
    let class = kts.rainbow().map_err(err)?.rainbow_class().ok_or("KTS(9) is not rainbow")?;
    let sub = kts.kts.design.block(kts.kts.resolution.classes[class].blocks[0]).to_vec();
    Ok(RainbowIngredient { kts, sub })
}

fn rainbow_from(k: &Kts, ing: &RainbowIngredient) -> Result<ColouredKts, String> {
    let frame = delete_point(k, 0).map_err(err)?;
    let u = (k.v() - 1) / 2;
    ensure!(frame.groups.group_type() == ty(&format!("2^{u}")), "frame type {}", frame.groups.group_type());
    let out = rainbow_frame_construction(&frame, 3, std::slice::from_ref(ing)).map_err(err)?;
    full_check(&out)?;
    let r = out.rainbow().map_err(err)?;
    ensure!(
        r.is_rainbow() && r.rainbow_classes.len() == 1,
        "KTS({}) rainbow classes {:?}",
        out.kts.v(),
        r.rainbow_classes
    );
    ensure!(out.kts.v() == 3 * k.v(), "unexpected order {}", out.kts.v());
    Ok(out)
}

fn c8_rainbow_frame() -> Outcome {
    let k27 = rainbow_from(&kts9().kts, &rainbow_ingredient()?)?;
    ensure!(chi(&k27.kts.design, 4)? == 3, "chromatic number is not 3");
    Ok("frame 2^4 -> rainbow KTS(27), chi = 3".into())
}

fn c9_kts129() -> Outcome {
    let f84 = frame_8_4_coloured([0, 0, 0, 0], 4, &default_base_frame()).map_err(err)?;
    let f32 = gdd_blowup(&gdd_4x4(), 4, &f84.frame).map_err(err)?;
    let report = f32.verify().map_err(err)?;
    ensure!(report.ok(), "frame 32^4:\n{report}");
    ensure!(f32.frame.groups.group_type() == ty("32^4"), "frame type {}", f32.frame.groups.group_type());
    let tv = tv_kts33(1).map_err(err)?.coloured();
    let mut fills = Vec::new();
    for g in f32.frame.groups.groups() {
        let colours: Vec<u32> = g.iter().map(|&p| f32.colouring.colour(p)).collect();
        let t = PartitionType::from_sizes((0..4).map(|c| colours.iter().filter(|&&x| x == c).count()));
        ensure!(t == ty("8^4"), "group colour type {t}");
        fills.push(align_fill(&tv, &colours, 0).map_err(err)?);
    }
    let k = frame_fill_one_point_coloured(&f32, &fills).map_err(err)?;
    full_check(&k)?;
    ensure!(k.kts.v() == 129, "order {}", k.kts.v());
    ensure!(k.colouring.colour_type() == ty("32^3 33^1"), "colour type {}", k.colouring.colour_type());
    let mut sub = f32.frame.groups.group(0).to_vec();
    sub.push(128);
    ensure!(verify_subsystem(&k.kts.design, &k.kts.resolution, &sub).map_err(err)?.ok(), "no sub-KTS(33)");
    let (d33, _, _) = induced_subsystem(&k.kts.design, &k.kts.resolution, &sub);
    ensure!(
        search_weak_colouring(&d33, &SearchOptions::new(3)).map_err(err)?.is_unsat(),
        "sub-KTS(33) is 3-colourable"
    );
    Ok("KTS(129) type 32^3 33^1, embedded KTS(33) 3-UNSAT".into())
}

fn c10_rgdd() -> Outcome {
    let mut n = 0;
    for delta in 4..=8u32 {
        for c0 in 0..delta {
            for c1 in 0..delta {
                for c2 in 0..delta {
                    let c = [c0, c1, c2];
                    let g = rgdd_4_3_coloured(c, delta).map_err(err)?;
                    let report = g.rgdd.verify().map_err(err)?;
                    ensure!(report.ok(), "{c:?} delta {delta}:\n{report}");
                    ensure!(g.rgdd.groups.group_type() == ty("4^3"), "{c:?}: group type");
                    ensure!(
                        is_weak(&g.rgdd.design, &g.colouring).map_err(err)?.ok(),
                        "{c:?} delta {delta}: monochromatic"
                    );
                    for j in 0..3 {
                        for i in 0..4 {
                            let want = (c[j] + i) % delta;
                            ensure!(
                                g.colouring.colour(4 * j as u32 + i) == want,
                                "{c:?} delta {delta}: colour of {i}_{j}"
                            );
                        }
                    }
                    let anchor = g.rgdd.design.find_block(&[0, 4, 8]).is_some();
                    ensure!(anchor || (c0 == c1 && c1 == c2), "{c:?} delta {delta}: no {{0,4,8}}");
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} offset triples"))
}

fn c11_frame_8_4() -> Outcome {
    let base = default_base_frame();
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..20 {
        let c: [u32; 4] = std::array::from_fn(|_| rng.gen_range(0..4));
        let f = frame_8_4_coloured(c, 4, &base).map_err(err)?;
        let fr = &f.frame;
        let report = verify_frame(&fr.design, &fr.groups, &fr.resolution).map_err(err)?;
        ensure!(report.ok(), "{c:?}:\n{report}");
        ensure!(fr.groups.group_type() == ty("8^4"), "{c:?}: frame type {}", fr.groups.group_type());
        ensure!(is_weak(&fr.design, &f.colouring).map_err(err)?.ok(), "{c:?}: monochromatic triple");
        let anchor = fr.design.find_block(&[0, 8, 16]).is_some();
        ensure!(anchor || (c[0] == c[1] && c[1] == c[2]), "{c:?}: no {{0,8,16}}");
    }
    Ok("20 sampled offset vectors".into())
}

fn c12_kq() -> Outcome {
    let q = q13();
    let k = kq_build(13, &q.written, &ResolveOptions::default()).map_err(err)?;
    ensure!(k.v() == 27 && verify_pairwise_balance(&k.design).ok(), "K(Q13) is not an STS(27)");
    let r = find_resolution(&k.design, &ResolveOptions::default());
    ensure!(r.resolution().map(Resolution::len) == Some(13), "resolution search: {:?}", r.outcome);
    let p = |i: Point| 13 + i;
    let classes: [Vec<Point>; 3] = [
        vec![0, 1, 2, 3, 4, 5, 6, p(0), p(2)],
        vec![7, 8, 10, 12, p(6), p(8), p(9), p(11), p(12)],
        vec![9, 11, p(1), p(3), p(4), p(5), p(7), p(10), 26],
    ];
    let refs: Vec<&[Point]> = classes.iter().map(Vec::as_slice).collect();
    let three = Colouring::from_classes(27, &refs).map_err(err)?;
    ensure!(is_weak(&k.design, &three).map_err(err)?.ok(), "listed 3-colouring is not weak");
    ensure!(chi(&k.design, 4)? == 3, "chromatic number is not 3");
    let c4 = kq_colour_2delta(&q.design, &q.colouring).map_err(err)?;
    full_check(&c4)?;
    ensure!(c4.colouring.delta() == 4, "doubling gave {} colours", c4.colouring.delta());
    Ok("KTS(27), 13 classes, chi = 3, weak 4-colouring from the 2-colouring".into())
}

fn c13_substitutes() -> Outcome {
    let ing = rainbow_ingredient()?;
    let mut bases: Vec<Kts> = vec![kts9().kts, kts15().kts];
    for v in [21, 33, 39, 57, 69] {
        bases.push(sigma_kts(v).map_err(err)?.kts);
    }
    bases.extend((1..=30).map(|i| tv_kts33(i).expect("tv").kts));
    bases.push(rotational_kts33().map_err(err)?.kts);
    let k27 = tripling(&kts9().coloured_with("3x3").ok_or("3x3")?).map_err(err)?;
    let k81 = tripling(&k27).map_err(err)?;
    bases.push(k27.kts);
    bases.push(k81.kts);
    bases.push(tripling(&kts15().coloured()).map_err(err)?.kts);
    bases.push(kq_build(13, &q13().written, &ResolveOptions::default()).map_err(err)?);
    let r27 = rainbow_from(&kts9().kts, &ing)?;
    bases.push(rainbow_from(&r27.kts, &ing)?.kts);
    bases.push(r27.kts);
    for k in &bases {
        rainbow_from(k, &ing)?;
    }

    let q = q13();
    let empty = Design::new(0, 3, Vec::<[Point; 3]>::new()).map_err(err)?;
    let k105 = sts_to_kts_pipeline(&empty, &Colouring::from_colours(vec![]), &q.design, &Embedding::default(), 4)
        .map_err(err)?;
    full_check(&k105)?;
    ensure!(k105.kts.v() == 105 && k105.colouring.delta() == 4, "pipeline gave KTS({})", k105.kts.v());
    ensure!(is_weak(&k105.kts.design, &k105.colouring).map_err(err)?.ok(), "KTS(105) colouring is not weak");
    Ok(format!("{} frames 2^u through the rainbow construction, KTS(105) pipeline", bases.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("catalog validity", c1_catalog),
        ("colour certificates", c2_certificates),
        ("rainbow certificates", c3_rainbow),
        ("KTS(9) is 3-chromatic", c4_kts9),
        ("TV systems are 4-chromatic", c5_tv),
        ("solver agrees with enumeration", c6_oracle),
        ("tripling", c7_tripling),
        ("rainbow frame construction", c8_rainbow_frame),
        ("4-chromatic KTS(129)", c9_kts129),
        ("coloured RGDD 4^3 sweep", c10_rgdd),
        ("coloured frame 8^4 sample", c11_frame_8_4),
        ("K(Q) suite", c12_kq),
        ("desk-scale substitutes", c13_substitutes),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({ms} ms)", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({ms} ms)", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
