//! Starter data for thirty KTS(33) on `Z_33`.
//!
//! Systems 1 to 29: the starter class translated by multiples of 3 gives
//! eleven classes and each starter block `B` gives the class `{B + 3s}`.
//! System 30 has no starter blocks; its classes are the images of the starter
//! class under powers of `(0 1 ... 31)(32)`.
//!
//! `colours` is a 4-colouring in digit form, point 0 first.

pub(super) struct TvData {
    pub starter_class: [[u32; 3]; 11],
    pub starter_blocks: Option<&'static [[u32; 3]; 5]>,
    pub colours: &'static str,
}

pub(super) static TV_SYSTEMS: [TvData; 30] = [
    TvData {
        starter_class: [
            [1, 2, 4],
            [5, 6, 8],
            [18, 19, 21],
            [10, 16, 28],
            [11, 26, 32],
            [9, 24, 30],
            [7, 14, 23],
            [3, 12, 29],
            [15, 22, 31],
            [13, 17, 27],
            [20, 25, 0],
        ],
        starter_blocks: Some(&[[2, 6, 16], [3, 7, 17], [1, 6, 14], [3, 8, 16], [1, 12, 23]]),
        colours: "111221112211122233324433344433444",
    },
    TvData {
        starter_class: [
            [1, 2, 4],
            [8, 9, 11],
            [18, 19, 21],
            [13, 25, 31],
            [14, 26, 32],
            [12, 24, 30],
            [5, 22, 29],
            [3, 20, 27],
            [7, 16, 0],
            [10, 15, 23],
            [6, 17, 28],
        ],
        starter_blocks: Some(&[[1, 5, 15], [2, 6, 16], [3, 7, 17], [2, 7, 15], [3, 8, 16]]),
        colours: "111221112211122233324433344433444",
    },
    TvData {
        starter_class: [
            [1, 2, 4],
            [14, 15, 17],
            [30, 31, 0],
            [10, 22, 28],
            [5, 11, 26],
            [6, 12, 27],
            [7, 16, 23],
            [3, 20, 29],
            [9, 18, 25],
            [19, 24, 32],
            [8, 13, 21],
        ],
        starter_blocks: Some(&[[1, 5, 15], [2, 6, 16], [3, 7, 17], [3, 8, 16], [1, 12, 23]]),
        colours: "111221112211122233324343444334443",
    },
    TvData {
        starter_class: [
            [1, 2, 4],
            [8, 9, 11],
            [24, 25, 27],
            [10, 16, 28],
            [5, 17, 32],
            [12, 18, 30],
            [7, 14, 31],
            [3, 20, 29],
            [6, 15, 22],
            [19, 23, 0],
            [13, 21, 26],
        ],
        starter_blocks: Some(&[[2, 6, 16], [3, 7, 17], [1, 6, 26], [2, 7, 27], [1, 12, 23]]),
        colours: "111221112211122233324343434343444",
    },
    TvData {
        starter_class: [
            [1, 2, 4],
            [20, 21, 23],
            [12, 13, 15],
            [10, 22, 28],
            [5, 11, 26],
            [3, 18, 30],
            [7, 14, 31],
            [8, 17, 24],
            [9, 16, 0],
            [6, 25, 29],
            [19, 27, 32],
        ],
        starter_blocks: Some(&[[2, 6, 16], [3, 7, 17], [1, 6, 26], [2, 7, 27], [1, 12, 23]]),
        colours: "111221112211122233324343434343444",
    },
    TvData {
        starter_class: [
            [1, 2, 4],
            [17, 18, 20],
            [24, 25, 27],
            [10, 16, 28],
            [5, 11, 23],
            [3, 9, 21],
            [7, 14, 31],
            [8, 15, 32],
            [6, 13, 30],
            [22, 26, 12],
            [29, 0, 19],
        ],
        starter_blocks: Some(&[[3, 7, 26], [1, 6, 14], [2, 7, 15], [3, 8, 16], [1, 12, 23]]),
        colours: "111221112211122233324433344433444",
    },
    TvData {
        starter_class: [
            [1, 2, 4],
            [8, 9, 11],
            [18, 19, 21],
            [13, 25, 31],
            [14, 26, 32],
            [12, 24, 30],
            [5, 22, 29],
            [3, 20, 27],
            [7, 16, 0],
            [10, 15, 23],
            [28, 6, 17],
        ],
        starter_blocks: Some(&[[1, 5, 24], [2, 6, 25], [3, 7, 26], [2, 7, 15], [3, 8, 16]]),
        colours: "111221112211122233324433344433444",
    },
    TvData {
        starter_class: [
            [1, 2, 4],
            [14, 15, 17],
            [30, 31, 0],
            [22, 28, 10],
            [5, 11, 26],
            [6, 12, 27],
            [16, 23, 7],
            [29, 3, 20],
            [18, 25, 9],
            [19, 24, 32],
            [8, 13, 21],
        ],
        starter_blocks: Some(&[[1, 5, 24], [2, 6, 25], [3, 7, 26], [3, 8, 16], [1, 12, 23]]),
        colours: "111221112211122233324433344433444",
    },
    TvData {
        starter_class: [
            [1, 2, 4],
            [17, 18, 20],
            [24, 25, 27],
            [10, 16, 28],
            [5, 11, 23],
            [3, 9, 21],
            [7, 14, 31],
            [8, 15, 32],
            [6, 13, 30],
            [22, 26, 12],
            [29, 0, 19],
        ],
        starter_blocks: Some(&[[3, 7, 26], [1, 6, 26], [2, 7, 27], [3, 8, 28], [1, 12, 23]]),
        colours: "111221112211122233324343434343444",
    },
    TvData {
        starter_class: [
            [1, 2, 5],
            [8, 9, 12],
            [24, 25, 28],
            [4, 6, 18],
            [17, 19, 31],
            [11, 30, 32],
            [7, 13, 22],
            [14, 20, 29],
            [3, 21, 27],
            [10, 15, 23],
            [16, 26, 0],
        ],
        starter_blocks: Some(&[[2, 7, 15], [3, 8, 16], [1, 8, 24], [3, 10, 26], [1, 12, 23]]),
        colours: "111122211112222333314423343434444",
    },
    TvData {
        starter_class: [
            [1, 2, 5],
            [14, 15, 18],
            [9, 10, 13],
            [12, 31, 0],
            [4, 23, 25],
            [8, 27, 29],
            [7, 16, 22],
            [11, 20, 26],
            [3, 21, 30],
            [19, 24, 32],
            [6, 17, 28],
        ],
        starter_blocks: Some(&[[3, 8, 16], [2, 7, 15], [1, 8, 18], [2, 9, 19], [3, 10, 20]]),
        colours: "111122211112222333344431233434444",
    },
    TvData {
        starter_class: [
            [1, 2, 5],
            [20, 21, 24],
            [9, 10, 13],
            [6, 25, 27],
            [17, 19, 31],
            [11, 30, 32],
            [7, 16, 22],
            [14, 23, 29],
            [3, 12, 18],
            [8, 28, 0],
            [4, 15, 26],
        ],
        starter_blocks: Some(&[[3, 8, 16], [2, 7, 15], [1, 8, 18], [2, 9, 19], [3, 10, 20]]),
        colours: "111122211112222333344431233434444",
    },
    TvData {
        starter_class: [
            [1, 2, 5],
            [14, 15, 18],
            [9, 10, 13],
            [31, 0, 12],
            [23, 25, 4],
            [27, 29, 8],
            [16, 22, 7],
            [20, 26, 11],
            [30, 3, 21],
            [19, 24, 32],
            [28, 6, 17],
        ],
        starter_blocks: Some(&[[3, 8, 16], [2, 7, 15], [1, 8, 24], [2, 9, 25], [3, 10, 26]]),
        colours: "111122211112222333144323343434444",
    },
    TvData {
        starter_class: [
            [1, 2, 5],
            [20, 21, 24],
            [9, 10, 13],
            [25, 27, 6],
            [17, 19, 31],
            [30, 32, 11],
            [16, 22, 7],
            [23, 29, 14],
            [12, 18, 3],
            [28, 0, 8],
            [4, 15, 26],
        ],
        starter_blocks: Some(&[[3, 8, 16], [2, 7, 15], [1, 8, 24], [2, 9, 25], [3, 10, 26]]),
        colours: "111122211112222333144323343434444",
    },
    TvData {
        starter_class: [
            [1, 2, 5],
            [17, 18, 21],
            [9, 10, 13],
            [28, 30, 16],
            [23, 25, 11],
            [27, 29, 15],
            [31, 4, 22],
            [8, 14, 32],
            [0, 6, 24],
            [7, 12, 20],
            [19, 26, 3],
        ],
        starter_blocks: Some(&[[3, 8, 16], [2, 7, 15], [2, 9, 19], [3, 10, 20], [1, 12, 23]]),
        colours: "111122211112221332243343434344443",
    },
    TvData {
        starter_class: [
            [1, 2, 5],
            [8, 9, 12],
            [24, 25, 28],
            [31, 0, 19],
            [11, 13, 32],
            [18, 20, 6],
            [16, 22, 7],
            [23, 29, 14],
            [30, 3, 21],
            [10, 17, 27],
            [4, 15, 26],
        ],
        starter_blocks: Some(&[[3, 8, 16], [2, 7, 15], [1, 6, 14], [3, 10, 20], [2, 9, 19]]),
        colours: "111122211112221332243343434344443",
    },
    TvData {
        starter_class: [
            [1, 2, 5],
            [20, 21, 24],
            [15, 16, 19],
            [7, 9, 28],
            [11, 13, 32],
            [6, 8, 27],
            [31, 4, 22],
            [23, 29, 14],
            [12, 18, 3],
            [25, 30, 17],
            [26, 0, 10],
        ],
        starter_blocks: Some(&[[3, 8, 28], [2, 7, 27], [1, 8, 18], [3, 10, 20], [1, 12, 23]]),
        colours: "111122211112222333344431234334444",
    },
    TvData {
        starter_class: [
            [1, 2, 5],
            [8, 9, 12],
            [24, 25, 28],
            [31, 0, 19],
            [11, 13, 32],
            [18, 20, 6],
            [16, 22, 7],
            [23, 29, 14],
            [30, 3, 21],
            [10, 17, 27],
            [4, 15, 26],
        ],
        starter_blocks: Some(&[[3, 8, 28], [2, 7, 27], [1, 6, 26], [3, 10, 20], [2, 9, 19]]),
        colours: "111122211112222333344431234334444",
    },
    TvData {
        starter_class: [
            [1, 3, 16],
            [8, 10, 23],
            [2, 0, 15],
            [4, 25, 28],
            [14, 17, 26],
            [6, 27, 30],
            [7, 13, 21],
            [5, 11, 19],
            [18, 24, 32],
            [12, 22, 29],
            [9, 20, 31],
        ],
        starter_blocks: Some(&[[3, 10, 26], [2, 9, 25], [1, 2, 6], [2, 3, 7], [3, 4, 8]]),
        colours: "111112222111322223314343334344444",
    },
    TvData {
        starter_class: [
            [1, 3, 16],
            [2, 4, 17],
            [9, 11, 24],
            [7, 10, 19],
            [8, 29, 32],
            [15, 18, 27],
            [22, 28, 14],
            [20, 26, 12],
            [6, 25, 0],
            [5, 21, 31],
            [13, 23, 30],
        ],
        starter_blocks: Some(&[[3, 10, 26], [1, 2, 6], [2, 3, 7], [3, 4, 8], [1, 12, 23]]),
        colours: "111112222111322223314343334344444",
    },
    TvData {
        starter_class: [
            [1, 3, 16],
            [2, 4, 17],
            [27, 29, 9],
            [7, 10, 19],
            [8, 11, 20],
            [12, 15, 24],
            [22, 28, 14],
            [26, 32, 18],
            [31, 5, 21],
            [23, 30, 13],
            [0, 6, 25],
        ],
        starter_blocks: Some(&[[1, 2, 6], [2, 3, 7], [3, 4, 8], [1, 12, 23], [3, 10, 26]]),
        colours: "111112222111322223314343334344444",
    },
    TvData {
        starter_class: [
            [1, 3, 16],
            [8, 26, 28],
            [9, 11, 24],
            [19, 22, 31],
            [2, 5, 14],
            [6, 27, 30],
            [7, 13, 32],
            [15, 23, 29],
            [4, 12, 18],
            [10, 17, 0],
            [20, 21, 25],
        ],
        starter_blocks: Some(&[[3, 10, 26], [2, 9, 25], [1, 2, 6], [3, 4, 8], [1, 12, 23]]),
        colours: "111112222111322223314343334344444",
    },
    TvData {
        starter_class: [
            [1, 3, 16],
            [11, 13, 26],
            [15, 17, 30],
            [19, 22, 10],
            [32, 2, 23],
            [21, 24, 12],
            [25, 31, 6],
            [14, 20, 28],
            [27, 0, 8],
            [4, 5, 9],
            [7, 18, 29],
        ],
        starter_blocks: Some(&[[3, 10, 20], [2, 9, 19], [1, 8, 18], [3, 4, 8], [2, 3, 7]]),
        colours: "111112222111322223333444432334444",
    },
    TvData {
        starter_class: [
            [1, 3, 16],
            [17, 19, 32],
            [9, 11, 24],
            [22, 25, 13],
            [5, 8, 29],
            [27, 30, 18],
            [31, 4, 23],
            [14, 20, 6],
            [15, 21, 7],
            [28, 2, 12],
            [26, 0, 10],
        ],
        starter_blocks: Some(&[[3, 10, 20], [1, 2, 6], [2, 3, 7], [3, 4, 8], [1, 12, 23]]),
        colours: "111112222111322223133434434334444",
    },
    TvData {
        starter_class: [
            [1, 3, 16],
            [23, 25, 5],
            [0, 2, 15],
            [28, 31, 19],
            [8, 11, 32],
            [6, 9, 30],
            [4, 10, 29],
            [20, 26, 12],
            [21, 27, 13],
            [7, 14, 24],
            [17, 18, 22],
        ],
        starter_blocks: Some(&[[3, 10, 20], [2, 9, 19], [1, 2, 6], [3, 4, 8], [1, 12, 23]]),
        colours: "111112222111322223133434434334444",
    },
    TvData {
        starter_class: [
            [1, 3, 16],
            [5, 7, 20],
            [15, 17, 30],
            [28, 31, 19],
            [11, 14, 2],
            [21, 24, 12],
            [4, 10, 29],
            [26, 32, 18],
            [0, 6, 25],
            [22, 23, 27],
            [8, 9, 13],
        ],
        starter_blocks: Some(&[[3, 10, 20], [2, 9, 19], [1, 8, 18], [3, 4, 8], [1, 12, 23]]),
        colours: "111112222111322223133434434334444",
    },
    TvData {
        starter_class: [
            [1, 3, 16],
            [20, 22, 2],
            [30, 32, 12],
            [7, 10, 31],
            [26, 29, 17],
            [15, 18, 6],
            [19, 25, 11],
            [8, 14, 0],
            [21, 27, 13],
            [4, 5, 9],
            [23, 24, 28],
        ],
        starter_blocks: Some(&[[3, 10, 20], [2, 9, 19], [1, 8, 18], [3, 4, 8], [1, 12, 23]]),
        colours: "111112222111322223133434434334444",
    },
    TvData {
        starter_class: [
            [1, 3, 21],
            [26, 28, 13],
            [18, 20, 5],
            [7, 10, 19],
            [29, 32, 8],
            [12, 15, 24],
            [16, 22, 30],
            [17, 23, 31],
            [0, 6, 14],
            [4, 11, 27],
            [2, 9, 25],
        ],
        starter_blocks: Some(&[[3, 10, 26], [1, 2, 6], [2, 3, 7], [3, 4, 8], [1, 12, 23]]),
        colours: "111112222111322213334342434434434",
    },
    TvData {
        starter_class: [
            [1, 13, 19],
            [23, 11, 5],
            [3, 15, 21],
            [2, 4, 7],
            [12, 14, 17],
            [28, 30, 0],
            [6, 16, 25],
            [10, 20, 29],
            [8, 18, 27],
            [24, 31, 32],
            [9, 22, 26],
        ],
        starter_blocks: Some(&[[25, 32, 0], [26, 0, 1], [10, 23, 27], [11, 24, 28], [1, 12, 23]]),
        colours: "111112221212121232334433444343434",
    },
    TvData {
        starter_class: [
            [32, 0, 16],
            [1, 10, 15],
            [2, 22, 23],
            [3, 5, 9],
            [4, 12, 29],
            [6, 7, 18],
            [8, 27, 30],
            [11, 14, 24],
            [13, 20, 28],
            [17, 26, 31],
            [19, 21, 25],
        ],
        starter_blocks: None,
        colours: "111111222211332221333433434444244",
    },
];
