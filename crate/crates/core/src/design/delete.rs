use thiserror::Error;

use super::types::{Design, GroupPartition, Point, Resolution, ResolutionClass};
use super::verify::VerifyError;
use super::{Frame, Kts};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeletePointError {
    #[error("input is not a Kirkman triple system ({0} violations)")]
    NotKts(usize),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("point {point} is outside 0..{v}")]
    PointOutOfRange { point: Point, v: usize },
    #[error("deleting a point of a KTS({v}) leaves a frame with {u} groups; at least 4 are needed")]
    Degenerate { v: usize, u: usize },
}

/// Removes point `p` from a KTS(v), leaving a Kirkman frame of type
/// `2^((v-1)/2)`.
///
/// Group `i` is the pair that shared a block with `p` in class `i`; that class,
/// minus the block, becomes the partial class missing group `i`. Points above
/// `p` shift down by one.
pub fn delete_point(kts: &Kts, p: Point) -> Result<Frame, DeletePointError> {
    let report = kts.verify()?;
    if !report.ok() {
        return Err(DeletePointError::NotKts(report.total));
    }
    let v = kts.v();
    if p as usize >= v {
        return Err(DeletePointError::PointOutOfRange { point: p, v });
    }
    let u = (v - 1) / 2;
    if u < 4 {
        return Err(DeletePointError::Degenerate { v, u });
    }
    let relabel = |q: Point| if q > p { q - 1 } else { q };
    let mut blocks = Vec::new();
    let mut groups = Vec::with_capacity(u);
    let mut classes = Vec::with_capacity(u);
    for class in &kts.resolution.classes {
        let mut partial = Vec::new();
        for &b in &class.blocks {
            let block = kts.design.block(b);
            if block.contains(&p) {
                groups.push(block.iter().filter(|&&q| q != p).map(|&q| relabel(q)).collect::<Vec<_>>());
            } else {
                partial.push(blocks.len());
                blocks.push(block.iter().map(|&q| relabel(q)).collect::<Vec<_>>());
            }
        }
        classes.push(ResolutionClass::partial(groups.len() - 1, partial));
    }
    let design = Design::new(v - 1, 3, blocks).expect("sub-blocks of a valid design");
    let groups = GroupPartition::new(v - 1, groups).expect("blocks through a point partition the rest");
    Ok(Frame { design, groups, resolution: Resolution::new(classes) })
}
