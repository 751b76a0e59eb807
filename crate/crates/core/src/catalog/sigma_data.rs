//! Base blocks of the σ-invariant systems on `Z_m × Z_3 ∪ {∞_0, ∞_1, ∞_2}`.
//!
//! Each starter block is `(power, points)`: the block is σ^power applied to
//! `points`, where σ advances `i_j` to `(i+1)_j` and fixes every `∞_k`.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(super) enum Sym {
    /// `i_j`
    Pt(u32, u32),
    /// `∞_k`
    Inf(u32),
}

const fn pt(i: u32, j: u32) -> Sym {
    Sym::Pt(i, j)
}

const fn inf(k: u32) -> Sym {
    Sym::Inf(k)
}

pub(super) struct SigmaData {
    pub v: usize,
    pub fixed_starter: [Sym; 3],
    pub short_orbit: &'static [(u32, [Sym; 3])],
    pub long_orbit: &'static [(u32, [Sym; 3])],
}

pub(super) static SIGMA_SYSTEMS: [SigmaData; 5] = [
    SigmaData {
        v: 21,
        fixed_starter: [pt(0, 0), pt(4, 1), pt(1, 2)],
        short_orbit: &[
            (0, [pt(1, 0), pt(1, 1), pt(2, 1)]),
            (0, [pt(2, 0), pt(1, 2), pt(2, 2)]),
            (3, [pt(1, 0), pt(1, 1), pt(2, 1)]),
            (3, [pt(2, 0), pt(1, 2), pt(2, 2)]),
            (0, [inf(0), pt(0, 2), pt(3, 2)]),
            (0, [inf(1), pt(0, 0), pt(3, 0)]),
            (0, [inf(2), pt(0, 1), pt(3, 1)]),
        ],
        long_orbit: &[
            (0, [pt(0, 0), pt(1, 0), pt(3, 1)]),
            (0, [pt(2, 0), pt(4, 0), pt(0, 2)]),
            (0, [pt(1, 1), pt(5, 1), pt(3, 2)]),
            (0, [pt(0, 1), pt(1, 2), pt(5, 2)]),
            (0, [inf(1), pt(4, 1), pt(4, 2)]),
            (0, [inf(2), pt(5, 0), pt(2, 2)]),
            (0, [inf(0), pt(3, 0), pt(2, 1)]),
        ],
    },
    SigmaData {
        v: 33,
        fixed_starter: [pt(0, 0), pt(5, 1), pt(2, 2)],
        short_orbit: &[
            (0, [pt(1, 0), pt(2, 0), pt(1, 2)]),
            (0, [pt(3, 0), pt(1, 1), pt(2, 1)]),
            (0, [pt(4, 0), pt(2, 2), pt(8, 2)]),
            (0, [pt(3, 1), pt(9, 1), pt(4, 2)]),
            (5, [pt(1, 0), pt(2, 0), pt(1, 2)]),
            (5, [pt(3, 0), pt(1, 1), pt(2, 1)]),
            (5, [pt(4, 0), pt(2, 2), pt(8, 2)]),
            (5, [pt(3, 1), pt(9, 1), pt(4, 2)]),
            (0, [inf(1), pt(0, 0), pt(5, 0)]),
            (0, [inf(2), pt(0, 1), pt(5, 1)]),
            (0, [inf(0), pt(0, 2), pt(5, 2)]),
        ],
        long_orbit: &[
            (0, [pt(0, 0), pt(2, 0), pt(2, 1)]),
            (0, [pt(1, 0), pt(4, 0), pt(7, 1)]),
            (0, [pt(3, 0), pt(7, 0), pt(4, 1)]),
            (0, [pt(5, 0), pt(6, 2), pt(8, 2)]),
            (0, [pt(8, 0), pt(4, 2), pt(5, 2)]),
            (0, [pt(0, 1), pt(8, 1), pt(2, 2)]),
            (0, [pt(6, 1), pt(9, 1), pt(9, 2)]),
            (0, [pt(1, 1), pt(0, 2), pt(7, 2)]),
            (0, [inf(1), pt(5, 1), pt(3, 2)]),
            (0, [inf(2), pt(6, 0), pt(1, 2)]),
            (0, [inf(0), pt(9, 0), pt(3, 1)]),
        ],
    },
    SigmaData {
        v: 39,
        fixed_starter: [pt(0, 0), pt(9, 1), pt(3, 2)],
        short_orbit: &[
            (0, [pt(1, 0), pt(2, 0), pt(1, 1)]),
            (0, [pt(3, 0), pt(4, 1), pt(5, 1)]),
            (0, [pt(4, 0), pt(1, 2), pt(2, 2)]),
            (0, [pt(5, 0), pt(4, 2), pt(9, 2)]),
            (0, [pt(2, 1), pt(9, 1), pt(5, 2)]),
            (6, [pt(1, 0), pt(2, 0), pt(1, 1)]),
            (6, [pt(3, 0), pt(4, 1), pt(5, 1)]),
            (6, [pt(4, 0), pt(1, 2), pt(2, 2)]),
            (6, [pt(5, 0), pt(4, 2), pt(9, 2)]),
            (6, [pt(2, 1), pt(9, 1), pt(5, 2)]),
            (0, [inf(1), pt(0, 0), pt(6, 0)]),
            (0, [inf(2), pt(0, 1), pt(6, 1)]),
            (0, [inf(0), pt(0, 2), pt(6, 2)]),
        ],
        long_orbit: &[
            (0, [pt(0, 0), pt(2, 0), pt(5, 1)]),
            (0, [pt(1, 0), pt(4, 0), pt(8, 1)]),
            (0, [pt(3, 0), pt(7, 0), pt(1, 1)]),
            (0, [pt(5, 0), pt(10, 0), pt(0, 2)]),
            (0, [pt(6, 0), pt(7, 2), pt(11, 2)]),
            (0, [pt(9, 0), pt(3, 2), pt(5, 2)]),
            (0, [pt(0, 1), pt(9, 1), pt(2, 2)]),
            (0, [pt(2, 1), pt(4, 1), pt(1, 2)]),
            (0, [pt(6, 1), pt(10, 1), pt(10, 2)]),
            (0, [pt(11, 1), pt(6, 2), pt(9, 2)]),
            (0, [inf(1), pt(3, 1), pt(4, 2)]),
            (0, [inf(2), pt(8, 0), pt(8, 2)]),
            (0, [inf(0), pt(11, 0), pt(7, 1)]),
        ],
    },
    SigmaData {
        v: 57,
        fixed_starter: [pt(0, 0), pt(9, 1), pt(10, 2)],
        short_orbit: &[
            (0, [pt(1, 0), pt(2, 0), pt(1, 1)]),
            (0, [pt(3, 0), pt(5, 0), pt(1, 2)]),
            (0, [pt(4, 0), pt(2, 1), pt(5, 1)]),
            (0, [pt(6, 0), pt(3, 1), pt(8, 1)]),
            (0, [pt(7, 0), pt(2, 2), pt(4, 2)]),
            (0, [pt(8, 0), pt(7, 2), pt(8, 2)]),
            (0, [pt(6, 1), pt(7, 1), pt(3, 2)]),
            (0, [pt(13, 1), pt(5, 2), pt(15, 2)]),
            (9, [pt(1, 0), pt(2, 0), pt(1, 1)]),
            (9, [pt(3, 0), pt(5, 0), pt(1, 2)]),
            (9, [pt(4, 0), pt(2, 1), pt(5, 1)]),
            (9, [pt(6, 0), pt(3, 1), pt(8, 1)]),
            (9, [pt(7, 0), pt(2, 2), pt(4, 2)]),
            (9, [pt(8, 0), pt(7, 2), pt(8, 2)]),
            (9, [pt(6, 1), pt(7, 1), pt(3, 2)]),
            (9, [pt(13, 1), pt(5, 2), pt(15, 2)]),
            (0, [inf(1), pt(0, 0), pt(9, 0)]),
            (0, [inf(2), pt(0, 1), pt(9, 1)]),
            (0, [inf(0), pt(0, 2), pt(9, 2)]),
        ],
        long_orbit: &[
            (0, [pt(0, 0), pt(3, 0), pt(6, 1)]),
            (0, [pt(1, 0), pt(5, 0), pt(9, 1)]),
            (0, [pt(2, 0), pt(8, 0), pt(15, 1)]),
            (0, [pt(4, 0), pt(11, 0), pt(13, 2)]),
            (0, [pt(6, 0), pt(16, 0), pt(9, 2)]),
            (0, [pt(12, 0), pt(17, 0), pt(6, 2)]),
            (0, [pt(7, 0), pt(0, 1), pt(12, 1)]),
            (0, [pt(9, 0), pt(1, 1), pt(3, 1)]),
            (0, [pt(13, 0), pt(1, 2), pt(14, 2)]),
            (0, [pt(14, 0), pt(0, 2), pt(4, 2)]),
            (0, [pt(7, 1), pt(14, 1), pt(7, 2)]),
            (0, [pt(8, 1), pt(16, 1), pt(2, 2)]),
            (0, [pt(13, 1), pt(17, 1), pt(16, 2)]),
            (0, [pt(2, 1), pt(8, 2), pt(11, 2)]),
            (0, [pt(5, 1), pt(3, 2), pt(10, 2)]),
            (0, [pt(10, 1), pt(5, 2), pt(17, 2)]),
            (0, [inf(1), pt(4, 1), pt(12, 2)]),
            (0, [inf(2), pt(10, 0), pt(15, 2)]),
            (0, [inf(0), pt(15, 0), pt(11, 1)]),
        ],
    },
    SigmaData {
        v: 69,
        fixed_starter: [pt(0, 0), pt(14, 1), pt(9, 2)],
        short_orbit: &[
            (0, [pt(1, 0), pt(2, 0), pt(1, 1)]),
            (0, [pt(3, 0), pt(5, 0), pt(6, 1)]),
            (0, [pt(4, 0), pt(7, 0), pt(1, 2)]),
            (0, [pt(6, 0), pt(2, 1), pt(3, 1)]),
            (0, [pt(8, 0), pt(3, 2), pt(4, 2)]),
            (0, [pt(9, 0), pt(2, 2), pt(7, 2)]),
            (0, [pt(10, 0), pt(9, 2), pt(16, 2)]),
            (0, [pt(9, 1), pt(15, 1), pt(6, 2)]),
            (0, [pt(10, 1), pt(18, 1), pt(8, 2)]),
            (0, [pt(16, 1), pt(19, 1), pt(21, 2)]),
            (11, [pt(1, 0), pt(2, 0), pt(1, 1)]),
            (11, [pt(3, 0), pt(5, 0), pt(6, 1)]),
            (11, [pt(4, 0), pt(7, 0), pt(1, 2)]),
            (11, [pt(6, 0), pt(2, 1), pt(3, 1)]),
            (11, [pt(8, 0), pt(3, 2), pt(4, 2)]),
            (11, [pt(9, 0), pt(2, 2), pt(7, 2)]),
            (11, [pt(10, 0), pt(9, 2), pt(16, 2)]),
            (11, [pt(9, 1), pt(15, 1), pt(6, 2)]),
            (11, [pt(10, 1), pt(18, 1), pt(8, 2)]),
            (11, [pt(16, 1), pt(19, 1), pt(21, 2)]),
            (0, [inf(1), pt(0, 0), pt(11, 0)]),
            (0, [inf(2), pt(0, 1), pt(11, 1)]),
            (0, [inf(0), pt(0, 2), pt(11, 2)]),
        ],
        long_orbit: &[
            (0, [pt(0, 0), pt(4, 0), pt(2, 1)]),
            (0, [pt(1, 0), pt(6, 0), pt(10, 1)]),
            (0, [pt(3, 0), pt(9, 0), pt(14, 1)]),
            (0, [pt(5, 0), pt(20, 0), pt(15, 1)]),
            (0, [pt(7, 0), pt(17, 0), pt(8, 2)]),
            (0, [pt(11, 0), pt(19, 0), pt(19, 2)]),
            (0, [pt(12, 0), pt(21, 0), pt(1, 2)]),
            (0, [pt(14, 0), pt(4, 1), pt(8, 1)]),
            (0, [pt(15, 0), pt(1, 1), pt(6, 1)]),
            (0, [pt(16, 0), pt(0, 1), pt(9, 1)]),
            (0, [pt(8, 0), pt(13, 2), pt(15, 2)]),
            (0, [pt(10, 0), pt(2, 2), pt(14, 2)]),
            (0, [pt(13, 0), pt(3, 2), pt(16, 2)]),
            (0, [pt(11, 1), pt(21, 1), pt(7, 2)]),
            (0, [pt(13, 1), pt(20, 1), pt(20, 2)]),
            (0, [pt(17, 1), pt(19, 1), pt(11, 2)]),
            (0, [pt(5, 1), pt(6, 2), pt(9, 2)]),
            (0, [pt(7, 1), pt(10, 2), pt(18, 2)]),
            (0, [pt(12, 1), pt(5, 2), pt(21, 2)]),
            (0, [pt(16, 1), pt(0, 2), pt(4, 2)]),
            (0, [inf(1), pt(18, 1), pt(17, 2)]),
            (0, [inf(2), pt(2, 0), pt(12, 2)]),
            (0, [inf(0), pt(18, 0), pt(3, 1)]),
        ],
    },
];
