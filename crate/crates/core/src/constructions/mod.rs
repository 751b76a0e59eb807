//! Recursive and direct constructions of Kirkman systems, frames and GDDs.
//!
//! Every construction verifies its own output before returning it; a
//! failure there is reported as [`ConstructionError::Output`] rather than
//! handing back an invalid design.

mod coloured_frames;
mod fill;
mod four_gdd;
mod kq;
mod rainbow_frame;
mod recipe;
mod tripling;

use thiserror::Error;

use crate::design::{Design, DesignError, GroupPartition, Report, Resolution, VerifyError};

pub use coloured_frames::{
    default_base_frame, frame_8_4_coloured, rgdd_4_3_coloured, rgdd_4_3_with_method, sts_to_kts_pipeline, Embedding,
    RgddMethod,
};
pub use fill::{align_fill, frame_fill_one_point, frame_fill_one_point_coloured};
pub use four_gdd::{blowup_properties, gdd_blowup, quadruple_to_4gdd};
pub use kq::{kq_build, kq_colour_2delta, kq_colour_delta_plus_one, kq_design, KqBlock};
pub use rainbow_frame::{rainbow_frame_construction, RainbowIngredient};
pub use recipe::{Artifact, ConstructionRecipe, RecipeError, RecipeInfo, RecipeInput, RECIPES};
pub use tripling::{td3_resolvable, tripling};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{construction} produced an output that fails verification:\n{report}")]
    Output { construction: &'static str, report: String },
    #[error("no resolution found for the constructed design: {0}")]
    Resolution(String),
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T, ConstructionError> {
    Err(ConstructionError::Precondition(msg.into()))
}

/// Turns a failed output report into an error.
pub(crate) fn require(construction: &'static str, report: Report) -> Result<(), ConstructionError> {
    if report.ok() {
        Ok(())
    } else {
        Err(ConstructionError::Output { construction, report: report.to_string() })
    }
}

/// A resolvable GDD: full parallel classes on a grouped point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rgdd {
    pub design: Design,
    pub groups: GroupPartition,
    pub resolution: Resolution,
}

impl Rgdd {
    pub fn verify(&self) -> Result<Report, VerifyError> {
        let mut report = crate::design::verify_gdd(&self.design, &self.groups)?;
        report.absorb(crate::design::verify_resolution(&self.design, &self.resolution, None)?);
        Ok(report)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredRgdd {
    pub rgdd: Rgdd,
    pub colouring: crate::design::Colouring,
}
