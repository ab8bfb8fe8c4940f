// Nonzero patterns of the Kw components.

use super::{Mark, MarkOp, PatternTable};
use crate::hw_bases::HwKind;

pub const HW0_ROWS: &[&str] = &[
    "(0,0,0)", "(1,0,0)", "(0,1,0)", "(0,0,1)", "(2,0,0)", "(1,1,0)", "(1,0,1)", "(0,2,0)",
    "(0,1,1)", "(0,0,2)", "(3,0,0)", "(2,1,0)", "(2,0,1)", "(1,2,0)", "(1,1,1)", "(1,0,2)",
    "(0,3,0)", "(0,2,1)", "(0,1,2)", "(0,0,3)",
];
pub const HW0_COLS: &[&str] = &[
    "(0,0,0)", "(1,0,0)", "(0,1,0)", "(0,0,1)", "(2,0,0)", "(1,1,0)", "(1,0,1)", "(0,2,0)",
    "(0,1,1)", "(0,0,2)", "(3,0,0)", "(2,1,0)", "(2,0,1)", "(1,2,0)", "(1,1,1)", "(1,0,2)",
    "(0,3,0)", "(0,2,1)", "(0,1,2)", "(0,0,3)",
];
pub const HW0_MARKS: &[Mark] = &[
    Mark {
        row: "(1,0,0)",
        col: "(0,0,0)",
        op: MarkOp::L(0, [0, -1, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,1,0)",
        col: "(0,0,0)",
        op: MarkOp::L(1, [-1, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,0,1)",
        col: "(0,0,0)",
        op: MarkOp::L(2, [-1, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(2,0,0)",
        col: "(1,0,0)",
        op: MarkOp::L(0, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,0)",
        col: "(1,0,0)",
        op: MarkOp::L(1, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,0)",
        col: "(0,1,0)",
        op: MarkOp::L(0, [0, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,0,1)",
        col: "(1,0,0)",
        op: MarkOp::L(2, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,0,1)",
        col: "(0,0,1)",
        op: MarkOp::L(0, [0, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,2,0)",
        col: "(0,1,0)",
        op: MarkOp::L(1, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,1,1)",
        col: "(0,1,0)",
        op: MarkOp::L(2, [0, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,1,1)",
        col: "(0,0,1)",
        op: MarkOp::L(1, [0, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,0,2)",
        col: "(0,0,1)",
        op: MarkOp::L(2, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(3,0,0)",
        col: "(2,0,0)",
        op: MarkOp::L(0, [0, -1, -1]),
        crossed: false,
    },
    Mark {
        row: "(2,1,0)",
        col: "(2,0,0)",
        op: MarkOp::L(1, [-1, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(2,1,0)",
        col: "(1,1,0)",
        op: MarkOp::L(0, [0, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(2,0,1)",
        col: "(2,0,0)",
        op: MarkOp::L(2, [-1, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(2,0,1)",
        col: "(1,0,1)",
        op: MarkOp::L(0, [0, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,2,0)",
        col: "(1,1,0)",
        op: MarkOp::L(1, [0, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(1,2,0)",
        col: "(0,2,0)",
        op: MarkOp::L(0, [0, -1, -1]),
        crossed: false,
    },
    Mark {
        row: "(1,1,1)",
        col: "(1,1,0)",
        op: MarkOp::L(2, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,1)",
        col: "(1,0,1)",
        op: MarkOp::L(1, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,1)",
        col: "(0,1,1)",
        op: MarkOp::L(0, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,0,2)",
        col: "(1,0,1)",
        op: MarkOp::L(2, [0, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,0,2)",
        col: "(0,0,2)",
        op: MarkOp::L(0, [0, -1, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,3,0)",
        col: "(0,2,0)",
        op: MarkOp::L(1, [-1, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,3,0)",
        col: "(3,0,0)",
        op: MarkOp::K(0, 1),
        crossed: false,
    },
    Mark {
        row: "(0,2,1)",
        col: "(0,2,0)",
        op: MarkOp::L(2, [-1, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,2,1)",
        col: "(0,1,1)",
        op: MarkOp::L(1, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,1,2)",
        col: "(0,1,1)",
        op: MarkOp::L(2, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,1,2)",
        col: "(0,0,2)",
        op: MarkOp::L(1, [-1, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,0,3)",
        col: "(0,0,2)",
        op: MarkOp::L(2, [-1, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,0,3)",
        col: "(3,0,0)",
        op: MarkOp::K(0, 2),
        crossed: false,
    },
    Mark {
        row: "(0,0,3)",
        col: "(0,3,0)",
        op: MarkOp::K(1, 2),
        crossed: false,
    },
];

pub const HW2_ROWS: &[&str] = &[
    "(0,0,0)01",
    "(1,0,0)01",
    "(0,1,0)01",
    "(0,0,1)01",
    "(2,0,0)01",
    "(1,1,0)01",
    "(0,2,0)01",
    "(0,0,0)02",
    "(1,0,0)02",
    "(0,1,0)02",
    "(0,0,1)02",
    "(2,0,0)02",
    "(0,0,2)02",
    "(0,0,0)12",
    "(1,0,0)12",
    "(0,1,0)12",
    "(0,0,1)12",
    "(0,2,0)12",
    "(0,1,1)12",
    "(0,0,2)12",
];
pub const HW2_COLS: &[&str] = &[
    "(0,0,0)01",
    "(1,0,0)01",
    "(0,1,0)01",
    "(0,0,1)01",
    "(2,0,0)01",
    "(1,1,0)01",
    "(0,2,0)01",
    "(0,0,0)02",
    "(1,0,0)02",
    "(0,1,0)02",
    "(0,0,1)02",
    "(2,0,0)02",
    "(0,0,2)02",
    "(0,0,0)12",
    "(1,0,0)12",
    "(0,1,0)12",
    "(0,0,1)12",
    "(0,2,0)12",
    "(0,1,1)12",
    "(0,0,2)12",
];
pub const HW2_MARKS: &[Mark] = &[
    Mark {
        row: "(1,0,0)01",
        col: "(0,0,0)01",
        op: MarkOp::L(0, [0, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,1,0)01",
        col: "(0,0,0)01",
        op: MarkOp::L(1, [0, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,0,1)01",
        col: "(0,0,0)01",
        op: MarkOp::L(2, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(2,0,0)01",
        col: "(1,0,0)01",
        op: MarkOp::L(0, [0, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(2,0,0)01",
        col: "(1,0,0)12",
        op: MarkOp::L(2, [-1, -1, 0]),
        crossed: true,
    },
    Mark {
        row: "(2,0,0)01",
        col: "(0,0,1)12",
        op: MarkOp::L(0, [0, -1, 0]),
        crossed: true,
    },
    Mark {
        row: "(1,1,0)01",
        col: "(1,0,0)01",
        op: MarkOp::L(1, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,0)01",
        col: "(0,1,0)01",
        op: MarkOp::L(0, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,0)01",
        col: "(1,0,0)02",
        op: MarkOp::L(2, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,0)01",
        col: "(0,0,1)02",
        op: MarkOp::L(0, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,2,0)01",
        col: "(0,1,0)01",
        op: MarkOp::L(1, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,2,0)01",
        col: "(0,1,0)02",
        op: MarkOp::L(2, [-1, -1, 0]),
        crossed: true,
    },
    Mark {
        row: "(0,2,0)01",
        col: "(0,0,1)02",
        op: MarkOp::L(1, [-1, 0, 0]),
        crossed: true,
    },
    Mark {
        row: "(1,0,0)02",
        col: "(0,0,0)02",
        op: MarkOp::L(0, [0, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,1,0)02",
        col: "(0,0,0)02",
        op: MarkOp::L(1, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,0,1)02",
        col: "(0,0,0)02",
        op: MarkOp::L(2, [0, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(2,0,0)02",
        col: "(1,0,0)02",
        op: MarkOp::L(0, [0, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(2,0,0)02",
        col: "(1,0,0)12",
        op: MarkOp::L(1, [-1, 0, -1]),
        crossed: true,
    },
    Mark {
        row: "(2,0,0)02",
        col: "(0,1,0)12",
        op: MarkOp::L(0, [0, 0, -1]),
        crossed: true,
    },
    Mark {
        row: "(0,0,2)02",
        col: "(0,1,0)01",
        op: MarkOp::L(2, [-1, 0, 0]),
        crossed: true,
    },
    Mark {
        row: "(0,0,2)02",
        col: "(0,0,1)01",
        op: MarkOp::L(1, [-1, 0, -1]),
        crossed: true,
    },
    Mark {
        row: "(0,0,2)02",
        col: "(0,0,1)02",
        op: MarkOp::L(2, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,0,0)12",
        col: "(0,0,0)12",
        op: MarkOp::L(0, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,1,0)12",
        col: "(0,0,0)12",
        op: MarkOp::L(1, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,0,1)12",
        col: "(0,0,0)12",
        op: MarkOp::L(2, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,2,0)12",
        col: "(1,0,0)02",
        op: MarkOp::L(1, [0, 0, -1]),
        crossed: true,
    },
    Mark {
        row: "(0,2,0)12",
        col: "(0,1,0)02",
        op: MarkOp::L(0, [0, -1, -1]),
        crossed: true,
    },
    Mark {
        row: "(0,2,0)12",
        col: "(0,1,0)12",
        op: MarkOp::L(1, [0, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,1,1)12",
        col: "(1,0,0)02",
        op: MarkOp::L(2, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,1,1)12",
        col: "(0,0,1)02",
        op: MarkOp::L(0, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,1,1)12",
        col: "(0,1,0)12",
        op: MarkOp::L(2, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,1,1)12",
        col: "(0,0,1)12",
        op: MarkOp::L(1, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,0,2)12",
        col: "(1,0,0)01",
        op: MarkOp::L(2, [0, -1, 0]),
        crossed: true,
    },
    Mark {
        row: "(0,0,2)12",
        col: "(0,0,1)01",
        op: MarkOp::L(0, [0, -1, -1]),
        crossed: true,
    },
    Mark {
        row: "(0,0,2)12",
        col: "(0,0,1)12",
        op: MarkOp::L(2, [0, -1, 0]),
        crossed: false,
    },
];

pub const HW1_PART1_ROWS: &[&str] = &[
    "(0,0,0)0", "(1,0,0)0", "(0,1,0)0", "(0,0,1)0", "(2,0,0)0", "(1,1,0)0", "(1,0,1)0", "(0,2,0)0",
    "(0,1,1)0", "(0,0,2)0", "(3,0,0)0", "(1,1,1)0", "(0,0,0)1", "(1,0,0)1", "(0,1,0)1", "(0,0,1)1",
    "(2,0,0)1", "(1,1,0)1", "(1,0,1)1", "(0,2,0)1", "(0,1,1)1", "(0,0,2)1", "(0,3,0)1", "(1,1,1)1",
    "(0,0,0)2", "(1,0,0)2", "(0,1,0)2", "(0,0,1)2", "(2,0,0)2", "(1,1,0)2", "(1,0,1)2", "(0,2,0)2",
    "(0,1,1)2", "(0,0,2)2", "(0,0,3)2", "(1,1,1)2",
];
pub const HW1_PART1_COLS: &[&str] = &[
    "(0,0,0)0", "(1,0,0)0", "(0,1,0)0", "(0,0,1)0", "(2,0,0)0", "(1,1,0)0", "(1,0,1)0", "(0,2,0)0",
    "(0,1,1)0", "(0,0,2)0", "(3,0,0)0", "(1,1,1)0", "(0,0,0)1", "(1,0,0)1", "(0,1,0)1", "(0,0,1)1",
    "(2,0,0)1", "(1,1,0)1",
];
pub const HW1_PART1_MARKS: &[Mark] = &[
    Mark {
        row: "(1,0,0)0",
        col: "(0,0,0)0",
        op: MarkOp::L(0, [0, -1, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,1,0)0",
        col: "(0,0,0)0",
        op: MarkOp::L(1, [0, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,0,1)0",
        col: "(0,0,0)0",
        op: MarkOp::L(2, [0, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(2,0,0)0",
        col: "(1,0,0)0",
        op: MarkOp::L(0, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,0)0",
        col: "(1,0,0)0",
        op: MarkOp::L(1, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,0)0",
        col: "(0,1,0)0",
        op: MarkOp::L(0, [0, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,0,1)0",
        col: "(1,0,0)0",
        op: MarkOp::L(2, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,0,1)0",
        col: "(0,0,1)0",
        op: MarkOp::L(0, [0, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,2,0)0",
        col: "(0,1,0)0",
        op: MarkOp::L(1, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,2,0)0",
        col: "(2,0,0)1",
        op: MarkOp::K(0, 1),
        crossed: false,
    },
    Mark {
        row: "(0,1,1)0",
        col: "(0,1,0)0",
        op: MarkOp::L(2, [-1, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,1,1)0",
        col: "(0,0,1)0",
        op: MarkOp::L(1, [-1, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,0,2)0",
        col: "(0,0,1)0",
        op: MarkOp::L(2, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(3,0,0)0",
        col: "(2,0,0)0",
        op: MarkOp::L(0, [0, -1, -1]),
        crossed: false,
    },
    Mark {
        row: "(3,0,0)0",
        col: "(2,0,0)1",
        op: MarkOp::L(1, [-1, 0, -1]),
        crossed: true,
    },
    Mark {
        row: "(3,0,0)0",
        col: "(1,1,0)1",
        op: MarkOp::L(0, [0, -1, -1]),
        crossed: true,
    },
    Mark {
        row: "(1,1,1)0",
        col: "(1,1,0)0",
        op: MarkOp::L(2, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,1)0",
        col: "(1,0,1)0",
        op: MarkOp::L(1, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,1)0",
        col: "(0,1,1)0",
        op: MarkOp::L(0, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,0,0)1",
        col: "(0,0,0)1",
        op: MarkOp::L(0, [0, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,1,0)1",
        col: "(0,0,0)1",
        op: MarkOp::L(1, [-1, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,0,1)1",
        col: "(0,0,0)1",
        op: MarkOp::L(2, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(2,0,0)1",
        col: "(0,2,0)0",
        op: MarkOp::K(1, 0),
        crossed: false,
    },
    Mark {
        row: "(2,0,0)1",
        col: "(1,0,0)1",
        op: MarkOp::L(0, [0, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,0)1",
        col: "(1,0,0)1",
        op: MarkOp::L(1, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,0)1",
        col: "(0,1,0)1",
        op: MarkOp::L(0, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,0,1)1",
        col: "(1,0,0)1",
        op: MarkOp::L(2, [-1, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,0,1)1",
        col: "(0,0,1)1",
        op: MarkOp::L(0, [0, -1, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,2,0)1",
        col: "(0,1,0)1",
        op: MarkOp::L(1, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,1,1)1",
        col: "(0,1,0)1",
        op: MarkOp::L(2, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,1,1)1",
        col: "(0,0,1)1",
        op: MarkOp::L(1, [0, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,0,2)1",
        col: "(0,0,1)1",
        op: MarkOp::L(2, [0, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,3,0)1",
        col: "(1,1,0)0",
        op: MarkOp::L(1, [-1, 0, -1]),
        crossed: true,
    },
    Mark {
        row: "(0,3,0)1",
        col: "(0,2,0)0",
        op: MarkOp::L(0, [0, -1, -1]),
        crossed: true,
    },
    Mark {
        row: "(1,1,1)1",
        col: "(2,0,0)0",
        op: MarkOp::L(2, [0, -1, 0]),
        crossed: true,
    },
    Mark {
        row: "(1,1,1)1",
        col: "(1,0,1)0",
        op: MarkOp::L(0, [0, -1, 0]),
        crossed: true,
    },
    Mark {
        row: "(1,1,1)1",
        col: "(1,1,0)1",
        op: MarkOp::L(2, [0, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(2,0,0)2",
        col: "(0,0,2)0",
        op: MarkOp::K(2, 0),
        crossed: false,
    },
    Mark {
        row: "(0,0,3)2",
        col: "(1,0,1)0",
        op: MarkOp::L(2, [-1, -1, 0]),
        crossed: true,
    },
    Mark {
        row: "(0,0,3)2",
        col: "(0,0,2)0",
        op: MarkOp::L(0, [0, -1, -1]),
        crossed: true,
    },
    Mark {
        row: "(1,1,1)2",
        col: "(2,0,0)0",
        op: MarkOp::L(1, [0, 0, -1]),
        crossed: true,
    },
    Mark {
        row: "(1,1,1)2",
        col: "(1,1,0)0",
        op: MarkOp::L(0, [0, 0, -1]),
        crossed: true,
    },
    Mark {
        row: "(1,1,1)2",
        col: "(1,1,0)1",
        op: MarkOp::L(1, [0, 0, -1]),
        crossed: true,
    },
];

pub const HW1_PART2_ROWS: &[&str] = &[
    "(0,0,0)0", "(1,0,0)0", "(0,1,0)0", "(0,0,1)0", "(2,0,0)0", "(1,1,0)0", "(1,0,1)0", "(0,2,0)0",
    "(0,1,1)0", "(0,0,2)0", "(3,0,0)0", "(1,1,1)0", "(0,0,0)1", "(1,0,0)1", "(0,1,0)1", "(0,0,1)1",
    "(2,0,0)1", "(1,1,0)1", "(1,0,1)1", "(0,2,0)1", "(0,1,1)1", "(0,0,2)1", "(0,3,0)1", "(1,1,1)1",
    "(0,0,0)2", "(1,0,0)2", "(0,1,0)2", "(0,0,1)2", "(2,0,0)2", "(1,1,0)2", "(1,0,1)2", "(0,2,0)2",
    "(0,1,1)2", "(0,0,2)2", "(0,0,3)2", "(1,1,1)2",
];
pub const HW1_PART2_COLS: &[&str] = &[
    "(1,0,1)1", "(0,2,0)1", "(0,1,1)1", "(0,0,2)1", "(0,3,0)1", "(1,1,1)1", "(0,0,0)2", "(1,0,0)2",
    "(0,1,0)2", "(0,0,1)2", "(2,0,0)2", "(1,1,0)2", "(1,0,1)2", "(0,2,0)2", "(0,1,1)2", "(0,0,2)2",
    "(0,0,3)2", "(1,1,1)2",
];
pub const HW1_PART2_MARKS: &[Mark] = &[
    Mark {
        row: "(3,0,0)0",
        col: "(2,0,0)2",
        op: MarkOp::L(2, [-1, -1, 0]),
        crossed: true,
    },
    Mark {
        row: "(3,0,0)0",
        col: "(1,0,1)2",
        op: MarkOp::L(0, [0, -1, -1]),
        crossed: true,
    },
    Mark {
        row: "(1,1,1)0",
        col: "(0,2,0)1",
        op: MarkOp::L(2, [-1, 0, 0]),
        crossed: true,
    },
    Mark {
        row: "(1,1,1)0",
        col: "(0,1,1)1",
        op: MarkOp::L(1, [-1, 0, 0]),
        crossed: true,
    },
    Mark {
        row: "(1,1,1)0",
        col: "(0,1,1)2",
        op: MarkOp::L(2, [-1, 0, 0]),
        crossed: true,
    },
    Mark {
        row: "(1,1,1)0",
        col: "(0,0,2)2",
        op: MarkOp::L(1, [-1, 0, 0]),
        crossed: true,
    },
    Mark {
        row: "(0,3,0)1",
        col: "(0,2,0)1",
        op: MarkOp::L(1, [-1, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,3,0)1",
        col: "(0,2,0)2",
        op: MarkOp::L(2, [-1, -1, 0]),
        crossed: true,
    },
    Mark {
        row: "(0,3,0)1",
        col: "(0,1,1)2",
        op: MarkOp::L(1, [-1, 0, -1]),
        crossed: true,
    },
    Mark {
        row: "(1,1,1)1",
        col: "(1,0,1)1",
        op: MarkOp::L(1, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,1)1",
        col: "(0,1,1)1",
        op: MarkOp::L(0, [0, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,1)1",
        col: "(1,0,1)2",
        op: MarkOp::L(2, [0, -1, 0]),
        crossed: true,
    },
    Mark {
        row: "(1,1,1)1",
        col: "(0,0,2)2",
        op: MarkOp::L(0, [0, -1, 0]),
        crossed: true,
    },
    Mark {
        row: "(1,0,0)2",
        col: "(0,0,0)2",
        op: MarkOp::L(0, [0, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,1,0)2",
        col: "(0,0,0)2",
        op: MarkOp::L(1, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,0,1)2",
        col: "(0,0,0)2",
        op: MarkOp::L(2, [-1, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(2,0,0)2",
        col: "(1,0,0)2",
        op: MarkOp::L(0, [0, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(1,1,0)2",
        col: "(1,0,0)2",
        op: MarkOp::L(1, [-1, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(1,1,0)2",
        col: "(0,1,0)2",
        op: MarkOp::L(0, [0, -1, -1]),
        crossed: false,
    },
    Mark {
        row: "(1,0,1)2",
        col: "(1,0,0)2",
        op: MarkOp::L(2, [-1, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,0,1)2",
        col: "(0,0,1)2",
        op: MarkOp::L(0, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,2,0)2",
        col: "(0,0,2)1",
        op: MarkOp::K(2, 1),
        crossed: false,
    },
    Mark {
        row: "(0,2,0)2",
        col: "(0,1,0)2",
        op: MarkOp::L(1, [0, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(0,1,1)2",
        col: "(0,1,0)2",
        op: MarkOp::L(2, [0, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,1,1)2",
        col: "(0,0,1)2",
        op: MarkOp::L(1, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,0,2)2",
        col: "(0,0,1)2",
        op: MarkOp::L(2, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(0,0,3)2",
        col: "(0,1,1)1",
        op: MarkOp::L(2, [-1, -1, 0]),
        crossed: true,
    },
    Mark {
        row: "(0,0,3)2",
        col: "(0,0,2)1",
        op: MarkOp::L(1, [-1, 0, -1]),
        crossed: true,
    },
    Mark {
        row: "(0,0,3)2",
        col: "(0,0,2)2",
        op: MarkOp::L(2, [-1, -1, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,1)2",
        col: "(0,2,0)1",
        op: MarkOp::L(0, [0, 0, -1]),
        crossed: true,
    },
    Mark {
        row: "(1,1,1)2",
        col: "(1,1,0)2",
        op: MarkOp::L(2, [0, 0, 0]),
        crossed: false,
    },
    Mark {
        row: "(1,1,1)2",
        col: "(1,0,1)2",
        op: MarkOp::L(1, [0, 0, -1]),
        crossed: false,
    },
    Mark {
        row: "(1,1,1)2",
        col: "(0,1,1)2",
        op: MarkOp::L(0, [0, 0, -1]),
        crossed: false,
    },
];

pub const TABLES: &[PatternTable] = &[
    PatternTable {
        name: "hw0",
        block: HwKind::HW0,
        rows: HW0_ROWS,
        cols: HW0_COLS,
        marks: HW0_MARKS,
    },
    PatternTable {
        name: "hw2",
        block: HwKind::HW2,
        rows: HW2_ROWS,
        cols: HW2_COLS,
        marks: HW2_MARKS,
    },
    PatternTable {
        name: "hw1_part1",
        block: HwKind::HW1,
        rows: HW1_PART1_ROWS,
        cols: HW1_PART1_COLS,
        marks: HW1_PART1_MARKS,
    },
    PatternTable {
        name: "hw1_part2",
        block: HwKind::HW1,
        rows: HW1_PART2_ROWS,
        cols: HW1_PART2_COLS,
        marks: HW1_PART2_MARKS,
    },
];
