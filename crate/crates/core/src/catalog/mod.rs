//! Explicit designs and colouring certificates, stored as base data and
//! developed deterministically into full designs.
//!
//! Catalog identifiers: `kts9`, `kts15`, `sigma21`, `sigma33`, `sigma39`,
//! `sigma57`, `sigma69`, `tv33-1` .. `tv33-30`, `rot33-59a`, `gdd4x4`, `q13`.

mod sigma_data;
mod tv_data;

use std::sync::OnceLock;

use thiserror::Error;

use crate::design::{
    is_weak, rainbow_check, verify_gdd, verify_pairwise_balance, ColouredGdd, ColouredKts, Colouring, Design, Gdd,
    GroupPartition, Kts, Permutation, Point, Report, Resolution, VerifyError,
};
use crate::solver::{find_resolution, ResolveOutcome};

use sigma_data::{SigmaData, Sym, SIGMA_SYSTEMS};
use tv_data::TV_SYSTEMS;

/// Orders for which a σ-invariant rainbow system is stored.
pub const SIGMA_ORDERS: [usize; 5] = [21, 33, 39, 57, 69];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog identifier {0:?}")]
    UnknownId(String),
    #[error("no σ-invariant system of order {0} is stored (orders: 21, 33, 39, 57, 69)")]
    NoSigmaSystem(usize),
    #[error("system index {0} is outside 1..=30")]
    NoTvSystem(usize),
    #[error("stored data for {id} does not develop into a valid design: {detail}")]
    Corrupt { id: String, detail: String },
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedColouring {
    pub name: &'static str,
    pub colouring: Colouring,
}

/// A Kirkman triple system with its stored colouring certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogKts {
    pub kts: Kts,
    pub colourings: Vec<NamedColouring>,
}

impl CatalogKts {
    pub fn colouring(&self, name: &str) -> Option<&Colouring> {
        self.colourings.iter().find(|c| c.name == name).map(|c| &c.colouring)
    }

    /// The system paired with its first stored colouring.
    pub fn coloured(&self) -> ColouredKts {
        ColouredKts { kts: self.kts.clone(), colouring: self.colourings[0].colouring.clone() }
    }

    pub fn coloured_with(&self, name: &str) -> Option<ColouredKts> {
        self.colouring(name).map(|c| ColouredKts { kts: self.kts.clone(), colouring: c.clone() })
    }
}

fn one_based(blocks: &[[Point; 3]]) -> Vec<[Point; 3]> {
    blocks.iter().map(|b| b.map(|p| p - 1)).collect()
}

fn kts_from_classes(v: usize, classes: Vec<Vec<Vec<Point>>>) -> Kts {
    let mut blocks = Vec::new();
    let mut res = Vec::new();
    for class in classes {
        res.push((blocks.len()..blocks.len() + class.len()).collect());
        blocks.extend(class);
    }
    Kts {
        design: Design::new(v, 3, blocks).expect("catalog blocks are well formed"),
        resolution: Resolution::from_full_classes(res),
    }
}

/// The unique KTS(9), points `1..9` stored as `0..8`. Classes are the four
/// columns of the classic table; the first is `{1,2,3},{4,5,6},{7,8,9}`.
///
/// Colourings: `3x3` (rainbow), `2-3-4` and `1-4-4`, named by colour type.
pub fn kts9() -> CatalogKts {
    const CLASSES: [[[Point; 3]; 3]; 4] = [
        [[1, 2, 3], [4, 5, 6], [7, 8, 9]],
        [[1, 4, 7], [2, 5, 8], [3, 6, 9]],
        [[1, 5, 9], [2, 6, 7], [3, 4, 8]],
        [[1, 6, 8], [2, 4, 9], [3, 5, 7]],
    ];
    let classes = CLASSES.iter().map(|c| one_based(c).iter().map(|b| b.to_vec()).collect()).collect();
    let kts = kts_from_classes(9, classes);
    let certificate = |name, classes: &[&[Point]]| {
        let shifted: Vec<Vec<Point>> = classes.iter().map(|c| c.iter().map(|p| p - 1).collect()).collect();
        let refs: Vec<&[Point]> = shifted.iter().map(Vec::as_slice).collect();
        NamedColouring { name, colouring: Colouring::from_classes(9, &refs).expect("classes cover 1..9") }
    };
    CatalogKts {
        kts,
        colourings: vec![
            certificate("3x3", &[&[1, 4, 9], &[2, 5, 7], &[3, 6, 8]]),
            certificate("2-3-4", &[&[1, 2], &[3, 5, 8], &[4, 6, 7, 9]]),
            certificate("1-4-4", &[&[1], &[2, 3, 5, 9], &[4, 6, 7, 8]]),
        ],
    }
}

/// A KTS(15) (points `1..15` stored as `0..14`) with the rainbow colouring
/// `rainbow`.
pub fn kts15() -> CatalogKts {
    const CLASSES: [[[Point; 3]; 5]; 7] = [
        [[1, 2, 3], [4, 8, 12], [5, 10, 14], [6, 11, 13], [7, 9, 15]],
        [[1, 4, 5], [2, 8, 10], [3, 13, 15], [6, 9, 14], [7, 11, 12]],
        [[1, 6, 7], [2, 9, 11], [3, 12, 14], [4, 10, 15], [5, 8, 13]],
        [[1, 8, 9], [2, 12, 15], [3, 5, 6], [4, 11, 14], [7, 10, 13]],
        [[1, 10, 11], [2, 13, 14], [3, 4, 7], [5, 9, 12], [6, 8, 15]],
        [[1, 12, 13], [2, 4, 6], [3, 9, 10], [5, 11, 15], [7, 8, 14]],
        [[1, 14, 15], [2, 5, 7], [3, 8, 11], [4, 9, 13], [6, 10, 12]],
    ];
    let classes = CLASSES.iter().map(|c| one_based(c).iter().map(|b| b.to_vec()).collect()).collect();
    let kts = kts_from_classes(15, classes);
    let parts: [&[Point]; 3] = [&[0, 3, 6, 12, 13], &[1, 4, 5, 7, 8], &[2, 9, 10, 11, 14]];
    let colouring = Colouring::from_classes(15, &parts).expect("partition of 0..15");
    CatalogKts { kts, colourings: vec![NamedColouring { name: "rainbow", colouring }] }
}

/// Point encoding for the σ-systems: `i_j ↦ j·m + i`, `∞_k ↦ 3m + k`.
fn sigma_point(m: u32, s: Sym) -> Point {
    match s {
        Sym::Pt(i, j) => j * m + i,
        Sym::Inf(k) => 3 * m + k,
    }
}

/// σ, acting on encoded points.
fn sigma_permutation(m: u32) -> Permutation {
    let images = (0..3 * m + 3).map(|p| if p >= 3 * m { p } else { (p / m) * m + (p % m + 1) % m }).collect();
    Permutation::new(images).expect("σ is a bijection")
}

fn develop_starter(m: u32, sigma: &Permutation, starter: &[(u32, [Sym; 3])]) -> Vec<Vec<Point>> {
    starter
        .iter()
        .map(|&(power, pts)| {
            let block: Vec<Point> = pts.iter().map(|&s| sigma_point(m, s)).collect();
            sigma.pow(power as usize).apply_block(&block)
        })
        .collect()
}

fn same_block_set(a: &[Vec<Point>], b: &[Vec<Point>]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort();
    b.sort();
    a == b
}

/// The σ-invariant KTS(v), `v ∈ {21, 33, 39, 57, 69}`, with its rainbow
/// colouring `i_j ↦ j`, `∞_k ↦ k` (named `rainbow`). Class 0 is the class
/// fixed by σ and is the rainbow class.
pub fn sigma_kts(v: usize) -> Result<CatalogKts, CatalogError> {
    let data: &SigmaData = SIGMA_SYSTEMS.iter().find(|d| d.v == v).ok_or(CatalogError::NoSigmaSystem(v))?;
    let m = ((v - 3) / 3) as u32;
    let sigma = sigma_permutation(m);
    let id = format!("sigma{v}");

    let infinities: Vec<Point> = (0..3).map(|k| 3 * m + k).collect();
    let starter: Vec<Point> = data.fixed_starter.iter().map(|&s| sigma_point(m, s)).collect();
    let mut fixed = vec![infinities];
    let mut power = Permutation::identity(3 * m as usize + 3);
    for _ in 0..m {
        fixed.push(power.apply_block(&starter));
        power = sigma.after(&power);
    }
    let mut classes = vec![fixed];

    let short = develop_starter(m, &sigma, data.short_orbit);
    let half = sigma.pow(m as usize / 2);
    let image: Vec<Vec<Point>> = short.iter().map(|b| half.apply_block(b)).collect();
    if !same_block_set(&short, &image) {
        return Err(CatalogError::Corrupt { id, detail: "short-orbit class is not fixed by σ^(m/2)".into() });
    }
    let long = develop_starter(m, &sigma, data.long_orbit);
    for (starter, count) in [(&short, m / 2), (&long, m)] {
        let mut power = Permutation::identity(3 * m as usize + 3);
        for _ in 0..count {
            classes.push(starter.iter().map(|b| power.apply_block(b)).collect());
            power = sigma.after(&power);
        }
    }
    let kts = kts_from_classes(v, classes);
    let colouring = Colouring::new((0..v as Point).map(|p| if p >= 3 * m { p - 3 * m } else { p / m }).collect(), 3)
        .expect("three colours");
    Ok(CatalogKts { kts, colourings: vec![NamedColouring { name: "rainbow", colouring }] })
}

/// A starter class with, when present, extra starter blocks.
pub type TvStarters = (Vec<[Point; 3]>, Option<Vec<[Point; 3]>>);

/// Starter data of system `index` (1-based): the starter class and, for
/// systems 1 to 29, the five starter blocks.
pub fn tv_starters(index: usize) -> Result<TvStarters, CatalogError> {
    let data = index.checked_sub(1).and_then(|i| TV_SYSTEMS.get(i)).ok_or(CatalogError::NoTvSystem(index))?;
    Ok((data.starter_class.to_vec(), data.starter_blocks.map(|s| s.to_vec())))
}

/// KTS(33) number `index` (1..=30) of the thirty systems on `Z_33`, with its
/// equitable 4-colouring of type `8^3 9^1` (named `paper`).
pub fn tv_kts33(index: usize) -> Result<CatalogKts, CatalogError> {
    let data = index.checked_sub(1).and_then(|i| TV_SYSTEMS.get(i)).ok_or(CatalogError::NoTvSystem(index))?;
    let translate = |b: &[Point; 3], t: Point| b.iter().map(|&x| (x + t) % 33).collect::<Vec<_>>();
    let classes: Vec<Vec<Vec<Point>>> = match data.starter_blocks {
        Some(starters) => {
            let mut classes: Vec<Vec<Vec<Point>>> =
                (0..11).map(|s| data.starter_class.iter().map(|b| translate(b, 3 * s)).collect()).collect();
            classes.extend(starters.iter().map(|b| (0..11).map(|s| translate(b, 3 * s)).collect()));
            classes
        }
        None => {
            let cycle: Vec<Point> = (0..32).collect();
            let rho = Permutation::from_cycles(33, &[&cycle]).expect("a 32-cycle on 0..31");
            let mut power = Permutation::identity(33);
            let mut classes = Vec::new();
            for _ in 0..16 {
                classes.push(data.starter_class.iter().map(|b| power.apply_block(b)).collect());
                power = rho.after(&power);
            }
            classes
        }
    };
    let kts = kts_from_classes(33, classes);
    let colouring = Colouring::from_digit_string(data.colours).expect("stored colour strings are digits");
    Ok(CatalogKts { kts, colourings: vec![NamedColouring { name: "paper", colouring }] })
}

const ROTATIONAL_BASE: [[Point; 3]; 6] = [[1, 3, 9], [2, 5, 27], [6, 15, 20], [7, 24, 28], [13, 14, 26], [32, 0, 16]];
const ROTATIONAL_COLOURS: &str = "111211312131322322112233123233132";

/// Blocks of the 1-rotational KTS(33) "59a": the base blocks developed
/// modulo 32 with `∞ = 32` fixed, repeated blocks dropped, in orbit order.
pub fn rotational_kts33_design() -> Result<Design, CatalogError> {
    let mut blocks: Vec<Vec<Point>> = Vec::new();
    for base in ROTATIONAL_BASE {
        for t in 0..32 {
            let mut b: Vec<Point> = base.iter().map(|&x| if x == 32 { 32 } else { (x + t) % 32 }).collect();
            b.sort_unstable();
            if !blocks.contains(&b) {
                blocks.push(b);
            }
        }
    }
    let corrupt = |detail: String| CatalogError::Corrupt { id: "rot33-59a".into(), detail };
    let design = Design::new(33, 3, blocks).map_err(|e| corrupt(e.to_string()))?;
    let report = verify_pairwise_balance(&design);
    if design.num_blocks() != 176 || !report.ok() {
        return Err(corrupt(format!("{} blocks, {} pair violations", design.num_blocks(), report.total)));
    }
    Ok(design)
}

const ROTATIONAL_RESOLUTION: &str = include_str!("rot33_resolution.txt");

fn cached_rotational_resolution(design: &Design) -> Option<Resolution> {
    let classes: Option<Vec<Vec<usize>>> = ROTATIONAL_RESOLUTION
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| l.strip_prefix("CLASS")?.split_whitespace().map(|t| t.parse().ok()).collect())
        .collect();
    let res = Resolution::from_full_classes(classes?);
    crate::design::verify_resolution(design, &res, None).ok()?.ok().then_some(res)
}

/// The 1-rotational KTS(33) "59a" with its weak 3-colouring (`paper`; the
/// last position colours ∞).
///
/// The design is given blockwise. Its resolution was recovered by
/// exact-cover search and is stored with the crate; it is revalidated on
/// first use, and searched for again if the stored copy does not verify.
pub fn rotational_kts33() -> Result<CatalogKts, CatalogError> {
    static CACHE: OnceLock<Result<CatalogKts, CatalogError>> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let design = rotational_kts33_design()?;
            let resolution = match cached_rotational_resolution(&design) {
                Some(res) => res,
                None => match find_resolution(&design, &Default::default()).outcome {
                    ResolveOutcome::Found(res) => res,
                    other => {
                        return Err(CatalogError::Corrupt {
                            id: "rot33-59a".into(),
                            detail: format!("no resolution found: {other:?}"),
                        })
                    }
                },
            };
            let colouring = Colouring::from_digit_string(ROTATIONAL_COLOURS).expect("digits");
            Ok(CatalogKts {
                kts: Kts { design, resolution },
                colourings: vec![NamedColouring { name: "paper", colouring }],
            })
        })
        .clone()
}

/// The 4-GDD of type `4^4` on points `i_j ↦ 4j + i`, coloured `i_j ↦ i`.
/// Every block has at most two points of one colour and every group one
/// point of each colour.
pub fn gdd_4x4() -> ColouredGdd {
    // (x, y, z, w) is the block {x_0, y_1, z_2, w_3}.
    const TUPLES: [[Point; 4]; 16] = [
        [0, 0, 1, 2],
        [0, 1, 3, 1],
        [0, 2, 2, 0],
        [0, 3, 0, 3],
        [1, 0, 0, 1],
        [1, 1, 2, 2],
        [1, 2, 3, 3],
        [1, 3, 1, 0],
        [2, 0, 2, 3],
        [2, 1, 0, 0],
        [2, 2, 1, 1],
        [2, 3, 3, 2],
        [3, 0, 3, 0],
        [3, 1, 1, 3],
        [3, 2, 0, 2],
        [3, 3, 2, 1],
    ];
    let blocks = TUPLES.iter().map(|t| [t[0], 4 + t[1], 8 + t[2], 12 + t[3]]);
    let design = Design::new(16, 4, blocks).expect("sixteen distinct quadruples");
    let groups = GroupPartition::new(16, (0..4).map(|j| (4 * j..4 * j + 4).collect()).collect()).expect("4 groups");
    let colouring = Colouring::new((0..16).map(|p| p % 4).collect(), 4).expect("four colours");
    ColouredGdd { gdd: Gdd { design, groups }, colouring }
}

/// A quadruple system of order 13 with its 2-colouring `{0..6}` / `{7..12}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogQs {
    pub design: Design,
    /// Blocks in their listed point order, which fixes `(w, x, y, z)` for the
    /// doubling construction.
    pub written: Vec<[Point; 4]>,
    pub colouring: Colouring,
}

pub fn q13() -> CatalogQs {
    const WRITTEN: [[Point; 4]; 13] = [
        [0, 1, 3, 9],
        [1, 2, 4, 10],
        [2, 3, 5, 11],
        [3, 4, 6, 12],
        [4, 5, 7, 0],
        [5, 6, 8, 1],
        [6, 7, 9, 2],
        [7, 8, 10, 3],
        [8, 9, 11, 4],
        [9, 10, 12, 5],
        [10, 11, 0, 6],
        [11, 12, 1, 7],
        [12, 0, 2, 8],
    ];
    let design = Design::new(13, 4, WRITTEN).expect("thirteen quadruples");
    let colouring = Colouring::new((0..13).map(|p| u32::from(p > 6)).collect(), 2).expect("two colours");
    CatalogQs { design, written: WRITTEN.to_vec(), colouring }
}

/// A catalog item in the generic shape used by the file formats and CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub id: String,
    pub design: Design,
    pub groups: Option<GroupPartition>,
    pub resolution: Option<Resolution>,
    pub colourings: Vec<NamedColouring>,
}

impl Entry {
    pub fn colouring(&self, name: &str) -> Option<&Colouring> {
        match name {
            "paper" | "default" => self.colourings.first().map(|c| &c.colouring),
            _ => self.colourings.iter().find(|c| c.name == name).map(|c| &c.colouring),
        }
    }
}

impl Entry {
    fn from_kts(id: String, c: CatalogKts) -> Self {
        Entry { id, design: c.kts.design, groups: None, resolution: Some(c.kts.resolution), colourings: c.colourings }
    }
}

pub fn ids() -> Vec<String> {
    let mut ids = vec!["kts9".to_string(), "kts15".to_string()];
    ids.extend(SIGMA_ORDERS.iter().map(|v| format!("sigma{v}")));
    ids.extend((1..=30).map(|i| format!("tv33-{i}")));
    ids.extend(["rot33-59a", "gdd4x4", "q13"].map(String::from));
    ids
}

pub fn lookup(id: &str) -> Result<Entry, CatalogError> {
    let unknown = || CatalogError::UnknownId(id.to_string());
    let entry = match id {
        "kts9" => Entry::from_kts(id.into(), kts9()),
        "kts15" => Entry::from_kts(id.into(), kts15()),
        "rot33-59a" => Entry::from_kts(id.into(), rotational_kts33()?),
        "gdd4x4" => {
            let g = gdd_4x4();
            Entry {
                id: id.into(),
                design: g.gdd.design,
                groups: Some(g.gdd.groups),
                resolution: None,
                colourings: vec![NamedColouring { name: "paper", colouring: g.colouring }],
            }
        }
        "q13" => {
            let q = q13();
            Entry {
                id: id.into(),
                design: q.design,
                groups: None,
                resolution: None,
                colourings: vec![NamedColouring { name: "paper", colouring: q.colouring }],
            }
        }
        _ => {
            if let Some(v) = id.strip_prefix("sigma") {
                let v: usize = v.parse().map_err(|_| unknown())?;
                Entry::from_kts(id.into(), sigma_kts(v)?)
            } else if let Some(i) = id.strip_prefix("tv33-") {
                let i: usize = i.parse().map_err(|_| unknown())?;
                Entry::from_kts(id.into(), tv_kts33(i)?)
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(entry)
}

/// Runs every applicable verifier on a catalog entry: pairwise balance,
/// resolution or GDD structure, weakness of every certificate, and rainbow
/// checks for certificates named `rainbow` or `3x3`.
pub fn self_test(entry: &Entry) -> Result<Report, VerifyError> {
    let mut report = match &entry.groups {
        Some(groups) => verify_gdd(&entry.design, groups)?,
        None => verify_pairwise_balance(&entry.design),
    };
    report.check = "catalog";
    if let Some(res) = &entry.resolution {
        report.absorb(crate::design::verify_resolution(&entry.design, res, entry.groups.as_ref())?);
    }
    for c in &entry.colourings {
        report.absorb(is_weak(&entry.design, &c.colouring)?);
        if matches!(c.name, "rainbow" | "3x3") {
            if let Some(res) = &entry.resolution {
                report.absorb(rainbow_check(&entry.design, res, &c.colouring)?.report);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kts9_layout() {
        let c = kts9();
        assert_eq!(c.kts.design.num_blocks(), 12);
        assert_eq!(c.kts.resolution.len(), 4);
        let first: Vec<&[Point]> = c.kts.resolution.classes[0].blocks.iter().map(|&b| c.kts.design.block(b)).collect();
        assert_eq!(first, vec![&[0, 1, 2][..], &[3, 4, 5], &[6, 7, 8]]);
        assert!(c.kts.verify().unwrap().ok());
    }

    #[test]
    fn sigma_point_encoding() {
        // v = 21: m = 6, so 4_1 ↦ 10 and ∞_2 ↦ 20.
        assert_eq!(sigma_point(6, Sym::Pt(4, 1)), 10);
        assert_eq!(sigma_point(6, Sym::Inf(2)), 20);
        let sigma = sigma_permutation(6);
        assert_eq!(sigma.apply(5), 0);
        assert_eq!(sigma.apply(11), 6);
        assert_eq!(sigma.apply(18), 18);
    }

    #[test]
    fn unknown_ids() {
        assert!(matches!(lookup("kts10"), Err(CatalogError::UnknownId(_))));
        assert!(matches!(sigma_kts(27), Err(CatalogError::NoSigmaSystem(27))));
        assert!(matches!(tv_kts33(0), Err(CatalogError::NoTvSystem(0))));
        assert!(matches!(tv_kts33(31), Err(CatalogError::NoTvSystem(31))));
    }

    #[test]
    fn gdd_colour_properties() {
        let g = gdd_4x4();
        for block in g.gdd.design.blocks() {
            let mut counts = [0; 4];
            for &p in block {
                counts[g.colouring.colour(p) as usize] += 1;
            }
            assert!(counts.iter().all(|&n| n <= 2));
        }
        for group in g.gdd.groups.groups() {
            let mut colours: Vec<u32> = group.iter().map(|&p| g.colouring.colour(p)).collect();
            colours.sort_unstable();
            assert_eq!(colours, vec![0, 1, 2, 3]);
        }
        // (0,0,1,2) is {0_0, 0_1, 1_2, 2_3}.
        assert_eq!(g.gdd.design.block(0), &[0, 4, 9, 14]);
    }
}
