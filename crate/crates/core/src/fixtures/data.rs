//! Representatives of the 39 conjugacy classes of subgroups of M11, as GAP
//! prints them (`ConjugacyClassesSubgroups2(MathieuGroup(11))`), verbatim.
//! Class 39 is M11 itself.
//!
//! Expected values are recorded per class: `nker` and `dnr` are the invariants
//! GAP reports for `Ker ψ1` and `Dnr`, `h1` the invariants of their quotient.
//! `table_name` uses index-based names (D4 for the dihedral group of order 8,
//! QD8 for the quasidihedral group of order 16); `gap_name` is GAP's
//! `StructureDescription`.

use super::FixtureClass;

pub const M11_GENERATORS: [&str; 2] = ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"];

pub const CLASSES: [FixtureClass; 39] = [
    FixtureClass {
        id: 1,
        gap_name: "1",
        table_name: "{1}",
        generators: &[],
        order: 1,
        syl2: "{1}",
        h1: &[],
        nker: &[],
        dnr: &[],
    },
    FixtureClass {
        id: 2,
        gap_name: "C2",
        table_name: "C2",
        generators: &["( 2, 8)( 3, 4)( 5, 6)(10,11)"],
        order: 2,
        syl2: "C2",
        h1: &[2],
        nker: &[2],
        dnr: &[],
    },
    FixtureClass {
        id: 3,
        gap_name: "C3",
        table_name: "C3",
        generators: &["( 2, 3,11)( 4, 8,10)( 5, 6, 7)"],
        order: 3,
        syl2: "{1}",
        h1: &[],
        nker: &[3],
        dnr: &[3],
    },
    FixtureClass {
        id: 4,
        gap_name: "C2 x C2",
        table_name: "V4",
        generators: &["( 1, 2)( 3, 7)( 4, 5)( 8,11)", "( 3,11)( 4, 5)( 6,10)( 7, 8)"],
        order: 4,
        syl2: "V4",
        h1: &[],
        nker: &[2, 2],
        dnr: &[2, 2],
    },
    FixtureClass {
        id: 5,
        gap_name: "C4",
        table_name: "C4",
        generators: &["( 2, 5, 3, 8)( 4,10, 6, 7)"],
        order: 4,
        syl2: "C4",
        h1: &[2],
        nker: &[4],
        dnr: &[2],
    },
    FixtureClass {
        id: 6,
        gap_name: "C5",
        table_name: "C5",
        generators: &["( 1, 6, 4, 3, 5)( 2, 8,10, 7,11)"],
        order: 5,
        syl2: "{1}",
        h1: &[],
        nker: &[5],
        dnr: &[5],
    },
    FixtureClass {
        id: 7,
        gap_name: "S3",
        table_name: "S3^(1)",
        generators: &["( 1, 9)( 2, 3)( 4, 8)( 5, 6)", "( 2, 3,11)( 4, 8,10)( 5, 6, 7)"],
        order: 6,
        syl2: "C2",
        h1: &[2],
        nker: &[2],
        dnr: &[],
    },
    FixtureClass {
        id: 8,
        gap_name: "S3",
        table_name: "S3^(2)",
        generators: &["( 2, 8)( 3, 4)( 5, 6)(10,11)", "( 2, 3,11)( 4, 8,10)( 5, 6, 7)"],
        order: 6,
        syl2: "C2",
        h1: &[2],
        nker: &[2],
        dnr: &[],
    },
    FixtureClass {
        id: 9,
        gap_name: "C6",
        table_name: "C6",
        generators: &["( 1, 6, 9)( 2,11, 7,10, 4, 5)( 3, 8)"],
        order: 6,
        syl2: "C2",
        h1: &[2],
        nker: &[6],
        dnr: &[3],
    },
    FixtureClass {
        id: 10,
        gap_name: "Q8",
        table_name: "Q8",
        generators: &["( 2, 4, 3, 6)( 5, 7, 8,10)", "( 2, 5, 3, 8)( 4,10, 6, 7)"],
        order: 8,
        syl2: "Q8",
        h1: &[],
        nker: &[2, 2],
        dnr: &[2, 2],
    },
    FixtureClass {
        id: 11,
        gap_name: "C8",
        table_name: "C8",
        generators: &["( 1, 3,11, 6, 7,10, 4, 5)( 8, 9)"],
        order: 8,
        syl2: "C8",
        h1: &[2],
        nker: &[8],
        dnr: &[4],
    },
    FixtureClass {
        id: 12,
        gap_name: "D8",
        table_name: "D4",
        generators: &["( 1,10)( 5,11)( 6, 9)( 7, 8)", "( 1, 4)( 3,10)( 5, 8)( 6, 9)"],
        order: 8,
        syl2: "D4",
        h1: &[],
        nker: &[2, 2],
        dnr: &[2, 2],
    },
    FixtureClass {
        id: 13,
        gap_name: "C3 x C3",
        table_name: "C3 x C3",
        generators: &["( 2, 3,11)( 4, 8,10)( 5, 6, 7)", "( 2, 7, 8)( 3, 5,10)( 4,11, 6)"],
        order: 9,
        syl2: "{1}",
        h1: &[],
        nker: &[3, 3],
        dnr: &[3, 3],
    },
    FixtureClass {
        id: 14,
        gap_name: "D10",
        table_name: "D5",
        generators: &["( 1, 6)( 2,10)( 4, 5)( 7,11)", "( 2, 8)( 3, 4)( 5, 6)(10,11)"],
        order: 10,
        syl2: "C2",
        h1: &[2],
        nker: &[2],
        dnr: &[],
    },
    FixtureClass {
        id: 15,
        gap_name: "C11",
        table_name: "C11",
        generators: &["( 1, 8, 7, 9, 3, 4, 5,10, 6, 2,11)"],
        order: 11,
        syl2: "{1}",
        h1: &[],
        nker: &[11],
        dnr: &[11],
    },
    FixtureClass {
        id: 16,
        gap_name: "A4",
        table_name: "A4",
        generators: &["( 2, 8)( 3, 4)( 5, 6)(10,11)", "( 1, 6, 8)( 2, 7, 5)( 4,11,10)"],
        order: 12,
        syl2: "V4",
        h1: &[],
        nker: &[3],
        dnr: &[3],
    },
    FixtureClass {
        id: 17,
        gap_name: "D12",
        table_name: "D6",
        generators: &["( 1, 6)( 2,10)( 4, 5)( 7,11)", "( 1, 9)( 2, 4)( 3, 8)(10,11)"],
        order: 12,
        syl2: "V4",
        h1: &[],
        nker: &[2, 2],
        dnr: &[2, 2],
    },
    FixtureClass {
        id: 18,
        gap_name: "QD16",
        table_name: "QD8",
        generators: &["( 1, 2)( 3, 7)( 4, 5)( 8,11)", "( 3,10,11, 6)( 4, 8, 5, 7)"],
        order: 16,
        syl2: "QD8",
        h1: &[],
        nker: &[2, 2],
        dnr: &[2, 2],
    },
    FixtureClass {
        id: 19,
        gap_name: "(C3 x C3) : C2",
        table_name: "(C3 x C3) : C2",
        generators: &[
            "( 2,11)( 4, 7)( 5,10)( 6, 8)",
            "( 3,11)( 4, 5)( 6,10)( 7, 8)",
            "( 2, 8)( 3, 4)( 5, 6)(10,11)",
        ],
        order: 18,
        syl2: "C2",
        h1: &[2],
        nker: &[2],
        dnr: &[],
    },
    FixtureClass {
        id: 20,
        gap_name: "C3 x S3",
        table_name: "C3 x S3",
        generators: &["( 1, 9)( 2, 3)( 4, 8)( 5, 6)", "( 1, 9)( 2, 5, 4)( 3, 7, 8,11, 6,10)"],
        order: 18,
        syl2: "C2",
        h1: &[2],
        nker: &[6],
        dnr: &[3],
    },
    FixtureClass {
        id: 21,
        gap_name: "C5 : C4",
        table_name: "C5 : C4",
        generators: &["( 1, 6)( 2,10)( 4, 5)( 7,11)", "( 2,10, 8,11)( 3, 6, 4, 5)"],
        order: 20,
        syl2: "C4",
        h1: &[2],
        nker: &[4],
        dnr: &[2],
    },
    FixtureClass {
        id: 22,
        gap_name: "SL(2,3)",
        table_name: "SL(2,3)",
        generators: &[
            "( 1, 6, 4, 2, 5,10)( 3,11, 9)( 7, 8)",
            "( 1, 8, 6, 2, 7, 5)( 3,11, 9)( 4,10)",
        ],
        order: 24,
        syl2: "Q8",
        h1: &[],
        nker: &[3],
        dnr: &[3],
    },
    FixtureClass {
        id: 23,
        gap_name: "S4",
        table_name: "S4",
        generators: &["( 2, 4, 3, 6)( 5, 7, 8,10)", "( 1, 8)( 2, 4)( 5,11)( 7,10)"],
        order: 24,
        syl2: "D4",
        h1: &[],
        nker: &[2],
        dnr: &[2],
    },
    FixtureClass {
        id: 24,
        gap_name: "(C3 x C3) : C4",
        table_name: "((C3 x C3) : C4)^(1)",
        generators: &["( 3,11)( 4, 5)( 6,10)( 7, 8)", "( 1, 6, 5, 3)( 7,11,10, 8)"],
        order: 36,
        syl2: "C4",
        h1: &[2],
        nker: &[4],
        dnr: &[2],
    },
    FixtureClass {
        id: 25,
        gap_name: "(C3 x C3) : C4",
        table_name: "((C3 x C3) : C4)^(2)",
        generators: &["( 2,11)( 4, 7)( 5,10)( 6, 8)", "( 2,10, 8,11)( 3, 6, 4, 5)"],
        order: 36,
        syl2: "C4",
        h1: &[2],
        nker: &[4],
        dnr: &[2],
    },
    FixtureClass {
        id: 26,
        gap_name: "S3 x S3",
        table_name: "S3 x S3",
        generators: &[
            "( 1, 9)( 2,11, 3)( 4, 7, 8, 5,10, 6)",
            "( 1, 9)( 2, 5, 4)( 3, 7, 8,11, 6,10)",
        ],
        order: 36,
        syl2: "V4",
        h1: &[],
        nker: &[2, 2],
        dnr: &[2, 2],
    },
    FixtureClass {
        id: 27,
        gap_name: "GL(2,3)",
        table_name: "GL(2,3)",
        generators: &["( 1, 9)( 2,10,11, 6, 7, 4, 5, 3)", "( 1, 8)( 2, 4)( 5,11)( 7,10)"],
        order: 48,
        syl2: "QD8",
        h1: &[],
        nker: &[2],
        dnr: &[2],
    },
    FixtureClass {
        id: 28,
        gap_name: "C11 : C5",
        table_name: "C11 : C5",
        generators: &["( 1, 2, 8, 7, 9)( 3,11,10, 6, 4)", "( 1, 4, 2, 5,11)( 3, 6,10, 7, 9)"],
        order: 55,
        syl2: "{1}",
        h1: &[],
        nker: &[5],
        dnr: &[5],
    },
    FixtureClass {
        id: 29,
        gap_name: "A5",
        table_name: "A5^(1)",
        generators: &["( 1, 6)( 2,10)( 4, 5)( 7,11)", "( 1, 7, 6, 3, 9)( 2,10, 8, 4, 5)"],
        order: 60,
        syl2: "V4",
        h1: &[],
        nker: &[],
        dnr: &[],
    },
    FixtureClass {
        id: 30,
        gap_name: "A5",
        table_name: "A5^(2)",
        generators: &[
            "( 2,11)( 4, 7)( 5,10)( 6, 8)",
            "( 1, 6)( 2,10)( 4, 5)( 7,11)",
            "( 2, 8)( 3, 4)( 5, 6)(10,11)",
        ],
        order: 60,
        syl2: "V4",
        h1: &[],
        nker: &[],
        dnr: &[],
    },
    FixtureClass {
        id: 31,
        gap_name: "(C3 x C3) : Q8",
        table_name: "(C3 x C3) : Q8",
        generators: &[
            "( 2,11)( 4, 7)( 5,10)( 6, 8)",
            "( 2, 5, 8, 6)( 3,10, 4,11)",
            "( 2,10, 8,11)( 3, 6, 4, 5)",
        ],
        order: 72,
        syl2: "Q8",
        h1: &[],
        nker: &[2, 2],
        dnr: &[2, 2],
    },
    FixtureClass {
        id: 32,
        gap_name: "(S3 x S3) : C2",
        table_name: "(S3 x S3) : C2",
        generators: &["( 1, 4)( 2, 9)( 3, 8)( 6, 7)", "( 1, 4, 6,11,10, 8)( 2, 9)( 3, 7, 5)"],
        order: 72,
        syl2: "D4",
        h1: &[],
        nker: &[2, 2],
        dnr: &[2, 2],
    },
    FixtureClass {
        id: 33,
        gap_name: "(C3 x C3) : C8",
        table_name: "(C3 x C3) : C8",
        generators: &["( 2,11)( 4, 7)( 5,10)( 6, 8)", "( 1, 9)( 2, 5, 3,11, 8, 6, 4,10)"],
        order: 72,
        syl2: "C8",
        h1: &[2],
        nker: &[8],
        dnr: &[4],
    },
    FixtureClass {
        id: 34,
        gap_name: "S5",
        table_name: "S5",
        generators: &["( 1, 6)( 2,10)( 4, 5)( 7,11)", "( 1, 7, 6, 9,11, 3)( 2, 5)( 4, 8,10)"],
        order: 120,
        syl2: "D4",
        h1: &[],
        nker: &[2],
        dnr: &[2],
    },
    FixtureClass {
        id: 35,
        gap_name: "(C3 x C3) : QD16",
        table_name: "(C3 x C3) : QD8",
        generators: &["( 1, 9)( 2,11, 3)( 4, 7, 8, 5,10, 6)", "( 2, 6, 8, 5)( 3,11, 4,10)"],
        order: 144,
        syl2: "QD8",
        h1: &[],
        nker: &[2, 2],
        dnr: &[2, 2],
    },
    FixtureClass {
        id: 36,
        gap_name: "A6",
        table_name: "A6",
        generators: &["( 1, 7, 8, 5)( 3,10, 9,11)", "( 1, 2)( 3, 6)( 5, 9)( 8,10)"],
        order: 360,
        syl2: "D4",
        h1: &[],
        nker: &[],
        dnr: &[],
    },
    FixtureClass {
        id: 37,
        gap_name: "PSL(2,11)",
        table_name: "PSL(2,11)",
        generators: &[
            "( 1, 2)( 4, 9)( 6, 7)(10,11)",
            "( 1, 8)( 3, 9)( 5, 7)(10,11)",
            "( 2,11)( 4, 7)( 5,10)( 6, 8)",
        ],
        order: 660,
        syl2: "V4",
        h1: &[],
        nker: &[],
        dnr: &[],
    },
    FixtureClass {
        id: 38,
        gap_name: "A6 . C2",
        table_name: "M10 = A6 . C2",
        generators: &["( 1, 7, 8, 5)( 3,10, 9,11)", "( 1, 6, 2, 3)( 5, 8, 9,10)"],
        order: 720,
        syl2: "QD8",
        h1: &[],
        nker: &[2],
        dnr: &[2],
    },
    FixtureClass {
        id: 39,
        gap_name: "M11",
        table_name: "M11",
        generators: &["( 1, 9)( 2, 3)( 4, 8)( 5, 6)", "( 1,10, 2,11)( 4, 7, 9, 6)"],
        order: 7920,
        syl2: "QD8",
        h1: &[],
        nker: &[],
        dnr: &[],
    },
];
