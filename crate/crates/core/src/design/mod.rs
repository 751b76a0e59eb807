//! Designs, group partitions, resolutions and colourings, with the
//! verification predicates every other module relies on.

mod admissible;
mod delete;
mod types;
mod verify;

pub use admissible::{admissible, Admissibility, AdmissibilityError};
pub use delete::{delete_point, DeletePointError};
pub use types::{
    Colour, Colouring, Design, DesignError, GroupPartition, PartitionType, Permutation, Point, Resolution,
    ResolutionClass,
};
pub use verify::{
    induced_subsystem, is_weak, rainbow_check, verify_frame, verify_gdd, verify_pairwise_balance, verify_resolution,
    verify_subsystem, RainbowReport, Report, VerifyError, Violation, DEFAULT_VIOLATION_LIMIT,
};

/// A triple system together with a resolution into parallel classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kts {
    pub design: Design,
    pub resolution: Resolution,
}

impl Kts {
    /// Pairwise balance and resolution, merged into one report.
    pub fn verify(&self) -> Result<Report, VerifyError> {
        let mut report = verify_pairwise_balance(&self.design);
        report.check = "kts";
        if self.design.k() != 3 {
            return Err(VerifyError::BlockSize { k: self.design.k(), expected: 3 });
        }
        report.absorb(verify_resolution(&self.design, &self.resolution, None)?);
        Ok(report)
    }

    pub fn v(&self) -> usize {
        self.design.v()
    }
}

/// A group divisible design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gdd {
    pub design: Design,
    pub groups: GroupPartition,
}

/// A GDD with a partition of its blocks into partial parallel classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub design: Design,
    pub groups: GroupPartition,
    pub resolution: Resolution,
}

impl Frame {
    pub fn verify(&self) -> Result<Report, VerifyError> {
        verify_frame(&self.design, &self.groups, &self.resolution)
    }

    /// Partial classes missing each group, in class order.
    pub fn classes_missing(&self, group: usize) -> Vec<usize> {
        (0..self.resolution.len()).filter(|&c| self.resolution.classes[c].missing_group == Some(group)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredKts {
    pub kts: Kts,
    pub colouring: Colouring,
}

impl ColouredKts {
    /// KTS checks plus weakness of the colouring.
    pub fn verify(&self) -> Result<Report, VerifyError> {
        let mut report = self.kts.verify()?;
        report.absorb(is_weak(&self.kts.design, &self.colouring)?);
        Ok(report)
    }

    pub fn rainbow(&self) -> Result<RainbowReport, VerifyError> {
        rainbow_check(&self.kts.design, &self.kts.resolution, &self.colouring)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredGdd {
    pub gdd: Gdd,
    pub colouring: Colouring,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredFrame {
    pub frame: Frame,
    pub colouring: Colouring,
}

impl ColouredFrame {
    /// Frame checks plus weakness of the colouring.
    pub fn verify(&self) -> Result<Report, VerifyError> {
        let mut report = self.frame.verify()?;
        report.absorb(is_weak(&self.frame.design, &self.colouring)?);
        Ok(report)
    }
}
