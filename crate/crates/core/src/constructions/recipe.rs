use std::collections::BTreeMap;

use thiserror::Error;

use crate::design::{
    delete_point, rainbow_check, Colour, ColouredFrame, ColouredGdd, ColouredKts, Colouring, DeletePointError, Design,
    Frame, Gdd, GroupPartition, Kts, Point, Resolution,
};
use crate::solver::ResolveOptions;

use super::{
    align_fill, default_base_frame, frame_8_4_coloured, frame_fill_one_point, frame_fill_one_point_coloured,
    gdd_blowup, kq_build, kq_colour_2delta, kq_colour_delta_plus_one, quadruple_to_4gdd, rainbow_frame_construction,
    rgdd_4_3_coloured, sts_to_kts_pipeline, tripling, ConstructionError, Embedding, RainbowIngredient,
};

/// A design with whatever structure came with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Artifact {
    pub design: Design,
    pub groups: Option<GroupPartition>,
    pub resolution: Option<Resolution>,
    pub colouring: Option<Colouring>,
}

impl Artifact {
    pub fn plain(design: Design) -> Self {
        Artifact { design, groups: None, resolution: None, colouring: None }
    }

    fn from_kts(kts: Kts, colouring: Option<Colouring>) -> Self {
        Artifact { design: kts.design, groups: None, resolution: Some(kts.resolution), colouring }
    }

    fn from_frame(frame: Frame, colouring: Option<Colouring>) -> Self {
        Artifact { design: frame.design, groups: Some(frame.groups), resolution: Some(frame.resolution), colouring }
    }
}

/// A recipe input: a design, or a colouring to attach to the design input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecipeInput {
    Design(Artifact),
    Colouring(Colouring),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecipeError {
    #[error("unknown recipe `{0}`")]
    Unknown(String),
    #[error("recipe `{recipe}` needs --input {name}")]
    MissingInput { recipe: &'static str, name: &'static str },
    #[error("recipe `{recipe}` needs --param {name}")]
    MissingParam { recipe: &'static str, name: &'static str },
    #[error("bad value `{value}` for parameter {name}")]
    BadParam { name: String, value: String },
    #[error("input `{name}` {problem}")]
    BadInput { name: String, problem: String },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    DeletePoint(#[from] DeletePointError),
}

/// A named construction with its parameters and inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecipeInfo {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub inputs: &'static [&'static str],
    pub summary: &'static str,
}

pub const RECIPES: &[RecipeInfo] = &[
    RecipeInfo {
        name: "delete-point",
        params: &["p"],
        inputs: &["kts"],
        summary: "Kirkman frame of type 2^((v-1)/2) from a KTS(v)",
    },
    RecipeInfo {
        name: "tripling",
        params: &[],
        inputs: &["kts", "colouring"],
        summary: "KTS(9v) from an equitably 3-coloured KTS(3v)",
    },
    RecipeInfo {
        name: "rainbow-frame",
        params: &["w", "sub"],
        inputs: &["frame", "ingredient", "colouring"],
        summary: "rainbow KTS(3v+w) from a frame and a rainbow ingredient with a sub-KTS(w)",
    },
    RecipeInfo {
        name: "quadruple-to-4gdd",
        params: &[],
        inputs: &["q"],
        summary: "4-coloured 4-GDD of type 4^u from a quadruple system",
    },
    RecipeInfo {
        name: "gdd-blowup",
        params: &["g"],
        inputs: &["gdd", "colouring", "frame"],
        summary: "4-coloured frame of type (8g)^u from a 4-GDD of type 4^u and a frame of type (2g)^4",
    },
    RecipeInfo {
        name: "frame-fill",
        params: &["inf"],
        inputs: &["frame", "colouring", "fill"],
        summary: "KTS(gu+1) from a frame of type g^u and a KTS(g+1) placed on every group",
    },
    RecipeInfo {
        name: "rgdd-4-3",
        params: &["c0", "c1", "c2", "delta"],
        inputs: &[],
        summary: "coloured resolvable 3-GDD of type 4^3",
    },
    RecipeInfo {
        name: "frame-8-4",
        params: &["c0", "c1", "c2", "c3", "delta"],
        inputs: &["base"],
        summary: "coloured Kirkman frame of type 8^4",
    },
    RecipeInfo {
        name: "pipeline",
        params: &["delta", "map", "extra"],
        inputs: &["q", "s", "colouring"],
        summary: "KTS(8w+1) from a quadruple system of order w containing a coloured STS",
    },
    RecipeInfo {
        name: "kq",
        params: &["colour"],
        inputs: &["q", "colouring"],
        summary: "KTS(2v+1) from a quadruple system of order v; colour = none, 2delta or delta+1",
    },
];

/// A parsed `construct` invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstructionRecipe {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub inputs: BTreeMap<String, RecipeInput>,
}

impl ConstructionRecipe {
    pub fn new(name: impl Into<String>) -> Self {
        ConstructionRecipe { name: name.into(), ..Default::default() }
    }

    pub fn param(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.params.insert(key.into(), value.into());
        self
    }

    pub fn input(mut self, key: impl Into<String>, input: RecipeInput) -> Self {
        self.inputs.insert(key.into(), input);
        self
    }

    pub fn info(&self) -> Result<&'static RecipeInfo, RecipeError> {
        RECIPES.iter().find(|r| r.name == self.name).ok_or_else(|| RecipeError::Unknown(self.name.clone()))
    }

    pub fn run(&self) -> Result<Artifact, RecipeError> {
        let info = self.info()?;
        let cx = Cx { recipe: self, name: info.name };
        match info.name {
            "delete-point" => {
                let kts = cx.kts("kts")?;
                let frame = delete_point(&kts, cx.num("p", None)?)?;
                Ok(Artifact::from_frame(frame, None))
            }
            "tripling" => {
                let input = cx.coloured_kts("kts")?;
                let out = tripling(&input)?;
                Ok(Artifact::from_kts(out.kts, Some(out.colouring)))
            }
            "rainbow-frame" => {
                let frame = cx.frame("frame")?.frame;
                let kts = cx.coloured_kts("ingredient")?;
                let w: usize = cx.num("w", Some(3))?;
                let sub = match self.params.get("sub") {
                    Some(s) => parse_list(s, "sub")?,
                    None => default_sub(&kts, w)?,
                };
                let out = rainbow_frame_construction(&frame, w, &[RainbowIngredient { kts, sub }])?;
                Ok(Artifact::from_kts(out.kts, Some(out.colouring)))
            }
            "quadruple-to-4gdd" => {
                let out = quadruple_to_4gdd(&cx.design("q")?.design)?;
                Ok(Artifact {
                    design: out.gdd.design,
                    groups: Some(out.gdd.groups),
                    resolution: None,
                    colouring: Some(out.colouring),
                })
            }
            "gdd-blowup" => {
                let a = cx.design("gdd")?;
                let groups = a.groups.clone().ok_or_else(|| cx.bad("gdd", "has no GROUPS section"))?;
                let colouring = cx.colouring_for("gdd")?.ok_or_else(|| cx.bad("gdd", "needs a colouring"))?;
                let gdd = ColouredGdd { gdd: Gdd { design: a.design.clone(), groups }, colouring };
                let frame = cx.frame("frame")?.frame;
                let out = gdd_blowup(&gdd, cx.num("g", None)?, &frame)?;
                Ok(Artifact::from_frame(out.frame, Some(out.colouring)))
            }
            "frame-fill" => {
                let frame = cx.frame("frame")?;
                let fill = cx.design("fill")?;
                let fill_kts = Kts {
                    design: fill.design.clone(),
                    resolution: fill.resolution.clone().ok_or_else(|| cx.bad("fill", "has no RESOLUTION section"))?,
                };
                let groups = frame.frame.groups.groups().to_vec();
                match &fill.colouring {
                    Some(fc) if frame.colouring.v() > 0 => {
                        let inf: Colour = cx.num("inf", Some(0))?;
                        let coloured = ColouredKts { kts: fill_kts, colouring: fc.clone() };
                        let fills = groups
                            .iter()
                            .map(|g| {
                                let cols: Vec<Colour> = g.iter().map(|&p| frame.colouring.colour(p)).collect();
                                align_fill(&coloured, &cols, inf)
                            })
                            .collect::<Result<Vec<_>, _>>()?;
                        let out = frame_fill_one_point_coloured(&frame, &fills)?;
                        Ok(Artifact::from_kts(out.kts, Some(out.colouring)))
                    }
                    _ => {
                        let out = frame_fill_one_point(&frame.frame, &vec![fill_kts; groups.len()])?;
                        Ok(Artifact::from_kts(out, None))
                    }
                }
            }
            "rgdd-4-3" => {
                let c = [cx.num("c0", None)?, cx.num("c1", None)?, cx.num("c2", None)?];
                let out = rgdd_4_3_coloured(c, cx.num("delta", None)?)?;
                Ok(Artifact {
                    design: out.rgdd.design,
                    groups: Some(out.rgdd.groups),
                    resolution: Some(out.rgdd.resolution),
                    colouring: Some(out.colouring),
                })
            }
            "frame-8-4" => {
                let c = [cx.num("c0", None)?, cx.num("c1", None)?, cx.num("c2", None)?, cx.num("c3", None)?];
                let base = match self.inputs.contains_key("base") {
                    true => cx.frame("base")?.frame,
                    false => default_base_frame(),
                };
                let out = frame_8_4_coloured(c, cx.num("delta", None)?, &base)?;
                Ok(Artifact::from_frame(out.frame, Some(out.colouring)))
            }
            "pipeline" => {
                let q = cx.design("q")?.design.clone();
                let delta: u32 = cx.num("delta", None)?;
                let (s, colouring, embedding) = if self.inputs.contains_key("s") {
                    let s = cx.design("s")?.design.clone();
                    let c = cx.colouring_for("s")?.ok_or_else(|| cx.bad("s", "needs a colouring"))?;
                    let map = parse_list(cx.raw("map")?, "map")?;
                    let extra = parse_list(cx.raw("extra")?, "extra")?;
                    (s, c, Embedding { point_map: map, extra })
                } else {
                    let empty = Design::new(0, 3, Vec::<[Point; 3]>::new()).map_err(ConstructionError::from)?;
                    (empty, Colouring::from_colours(Vec::new()), Embedding::default())
                };
                let out = sts_to_kts_pipeline(&s, &colouring, &q, &embedding, delta)?;
                Ok(Artifact::from_kts(out.kts, Some(out.colouring)))
            }
            "kq" => {
                let q = cx.design("q")?.design.clone();
                let mode = self.params.get("colour").map_or("none", String::as_str);
                let coloured = |f: fn(&Design, &Colouring) -> Result<ColouredKts, ConstructionError>| {
                    let c = cx.colouring_for("q")?.ok_or_else(|| cx.bad("q", "needs a colouring"))?;
                    let out = f(&q, &c)?;
                    Ok::<_, RecipeError>(Artifact::from_kts(out.kts, Some(out.colouring)))
                };
                match mode {
                    "none" => {
                        let ordered: Vec<[Point; 4]> = q.blocks().map(|b| [b[0], b[1], b[2], b[3]]).collect();
                        Ok(Artifact::from_kts(kq_build(q.v(), &ordered, &ResolveOptions::default())?, None))
                    }
                    "2delta" => coloured(kq_colour_2delta),
                    "delta+1" => coloured(kq_colour_delta_plus_one),
                    other => Err(RecipeError::BadParam { name: "colour".into(), value: other.into() }),
                }
            }
            _ => unreachable!("every listed recipe is handled"),
        }
    }
}

struct Cx<'a> {
    recipe: &'a ConstructionRecipe,
    name: &'static str,
}

impl Cx<'_> {
    fn bad(&self, input: &str, problem: &str) -> RecipeError {
        RecipeError::BadInput { name: input.into(), problem: problem.into() }
    }

    fn design(&self, key: &'static str) -> Result<&Artifact, RecipeError> {
        match self.recipe.inputs.get(key) {
            Some(RecipeInput::Design(a)) => Ok(a),
            Some(RecipeInput::Colouring(_)) => Err(self.bad(key, "must be a design")),
            None => Err(RecipeError::MissingInput { recipe: self.name, name: key }),
        }
    }

    /// The separate `colouring` input if given, else the design's own.
    fn colouring_for(&self, key: &'static str) -> Result<Option<Colouring>, RecipeError> {
        match self.recipe.inputs.get("colouring") {
            Some(RecipeInput::Colouring(c)) => Ok(Some(c.clone())),
            Some(RecipeInput::Design(_)) => Err(self.bad("colouring", "must be a colouring")),
            None => Ok(self.design(key)?.colouring.clone()),
        }
    }

    fn kts(&self, key: &'static str) -> Result<Kts, RecipeError> {
        let a = self.design(key)?;
        let resolution = a.resolution.clone().ok_or_else(|| self.bad(key, "has no RESOLUTION section"))?;
        Ok(Kts { design: a.design.clone(), resolution })
    }

    fn coloured_kts(&self, key: &'static str) -> Result<ColouredKts, RecipeError> {
        let kts = self.kts(key)?;
        let colouring = self.colouring_for(key)?.ok_or_else(|| self.bad(key, "needs a colouring"))?;
        Ok(ColouredKts { kts, colouring })
    }

    /// A frame; uncoloured frames get an empty colouring.
    fn frame(&self, key: &'static str) -> Result<ColouredFrame, RecipeError> {
        let a = self.design(key)?;
        let groups = a.groups.clone().ok_or_else(|| self.bad(key, "has no GROUPS section"))?;
        let resolution = a.resolution.clone().ok_or_else(|| self.bad(key, "has no RESOLUTION section"))?;
        let colouring = match self.recipe.inputs.get("colouring") {
            Some(RecipeInput::Colouring(c)) if key == "frame" => Some(c.clone()),
            _ => a.colouring.clone(),
        };
        Ok(ColouredFrame {
            frame: Frame { design: a.design.clone(), groups, resolution },
            colouring: colouring.unwrap_or_else(|| Colouring::from_colours(Vec::new())),
        })
    }

    fn raw(&self, key: &'static str) -> Result<&str, RecipeError> {
        self.recipe
            .params
            .get(key)
            .map(String::as_str)
            .ok_or(RecipeError::MissingParam { recipe: self.name, name: key })
    }

    fn num<T: std::str::FromStr>(&self, key: &'static str, default: Option<T>) -> Result<T, RecipeError> {
        match (self.recipe.params.get(key), default) {
            (Some(s), _) => s.parse().map_err(|_| RecipeError::BadParam { name: key.into(), value: s.clone() }),
            (None, Some(d)) => Ok(d),
            (None, None) => Err(RecipeError::MissingParam { recipe: self.name, name: key }),
        }
    }
}

fn parse_list(s: &str, name: &str) -> Result<Vec<Point>, RecipeError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| RecipeError::BadParam { name: name.into(), value: s.into() }))
        .collect()
}

/// For `w = 3`, the block of the rainbow class through the lowest point.
fn default_sub(kts: &ColouredKts, w: usize) -> Result<Vec<Point>, RecipeError> {
    let missing = || RecipeError::MissingParam { recipe: "rainbow-frame", name: "sub" };
    if w != 3 {
        return Err(missing());
    }
    let rainbow =
        rainbow_check(&kts.kts.design, &kts.kts.resolution, &kts.colouring).map_err(ConstructionError::from)?;
    let class = rainbow.rainbow_class().ok_or_else(missing)?;
    let first =
        kts.kts.resolution.classes[class].blocks.iter().map(|&b| kts.kts.design.block(b)).min().ok_or_else(missing)?;
    Ok(first.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::kts9;

    fn kts9_input(colouring: &str) -> RecipeInput {
        let c = kts9();
        RecipeInput::Design(Artifact::from_kts(c.kts.clone(), c.colouring(colouring).cloned()))
    }

    #[test]
    fn every_recipe_has_a_unique_name() {
        let mut names: Vec<&str> = RECIPES.iter().map(|r| r.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), RECIPES.len());
    }

    #[test]
    fn tripling_recipe() {
        let out = ConstructionRecipe::new("tripling").input("kts", kts9_input("3x3")).run().unwrap();
        assert_eq!(out.design.v(), 27);
        assert!(out.colouring.is_some());
    }

    #[test]
    fn missing_pieces_are_reported() {
        let err = ConstructionRecipe::new("tripling").run().unwrap_err();
        assert!(matches!(err, RecipeError::MissingInput { name: "kts", .. }));
        let err = ConstructionRecipe::new("rgdd-4-3").param("c0", "0").run().unwrap_err();
        assert!(matches!(err, RecipeError::MissingParam { name: "c1", .. }));
        assert!(matches!(ConstructionRecipe::new("nope").run(), Err(RecipeError::Unknown(_))));
    }

    #[test]
    fn rainbow_frame_recipe_defaults_sub() {
        let frame = delete_point(&kts9().kts, 0).unwrap();
        let out = ConstructionRecipe::new("rainbow-frame")
            .input("frame", RecipeInput::Design(Artifact::from_frame(frame, None)))
            .input("ingredient", kts9_input("3x3"))
            .run()
            .unwrap();
        assert_eq!(out.design.v(), 27);
    }
}
