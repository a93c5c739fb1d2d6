//! Frozen reference fixtures: the ideals and the Hilbert-basis matrix the
//! verification claims diff against. These are constants on purpose — the
//! harness compares live computation against them, so they must not be
//! produced by the code under test.

/// Hilbert basis of the Rees cone of L_5, one row per element, degree
/// coordinate last, rows ascending lexicographically.
pub const HB_L5: &str = "\
0 0 0 0 0 0 1 0
0 0 0 0 0 1 0 0
0 0 0 0 1 0 0 0
0 0 0 1 0 0 0 0
0 0 0 1 1 1 0 1
0 0 1 0 0 0 0 0
0 0 1 1 0 1 0 1
0 1 0 0 0 0 0 0
0 1 0 1 1 0 1 1
0 1 1 0 0 1 0 1
0 1 1 0 1 0 1 1
1 0 0 0 0 0 0 0
1 0 0 0 1 1 0 1
1 0 1 0 1 0 1 1
1 0 1 1 0 0 1 1
1 1 0 0 0 1 0 1
1 1 0 1 0 0 1 1
1 1 1 1 1 1 1 2
";

/// Cover ideal of the 5-cycle.
pub const J_C5: &str = "\
dim 5
0 1 0 1 1
0 1 1 0 1
1 0 1 0 1
1 0 1 1 0
1 1 0 1 0
";

/// L_4 in 6 variables.
pub const L4: &str = "\
dim 6
0 0 1 1 1 0
0 1 0 1 0 1
0 1 1 0 1 0
1 0 0 1 1 0
1 0 1 0 0 1
1 1 0 0 1 0
";

/// L_5 in 7 variables.
pub const L5: &str = "\
dim 7
0 0 0 1 1 1 0
0 0 1 1 0 1 0
0 1 1 0 0 1 0
1 0 0 0 1 1 0
1 1 0 0 0 1 0
0 1 0 1 1 0 1
0 1 1 0 1 0 1
1 0 1 0 1 0 1
1 0 1 1 0 0 1
1 1 0 1 0 0 1
";

/// The seven-generator counterexample ideal T.
pub const T: &str = "\
dim 7
0 0 1 1 0 1 0
0 1 0 0 1 1 0
0 1 1 0 0 1 0
1 0 1 0 1 0 1
1 0 1 0 1 1 0
1 1 0 1 0 0 1
1 1 0 1 0 1 0
";

/// The ten-variable two-block counterexample ideal Q.
pub const Q: &str = "\
dim 10
0 0 0 0 0 0 1 0 1 1
0 0 0 0 0 0 1 1 0 1
0 0 0 0 0 1 0 1 0 1
0 0 0 0 0 1 0 1 1 0
0 0 0 0 0 1 1 0 1 0
0 1 0 1 1 0 0 0 0 0
0 1 1 0 1 0 0 0 0 0
1 0 1 0 1 0 0 0 0 0
1 0 1 1 0 0 0 0 0 0
1 1 0 1 0 0 0 0 0 0
";

pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub content: &'static str,
}

pub const ALL: &[Fixture] = &[
    Fixture {
        name: "hb-L5",
        description: "Hilbert basis of the Rees cone of L_5 (18 rows, degree coordinate last)",
        content: HB_L5,
    },
    Fixture {
        name: "J-C5",
        description: "cover ideal of the 5-cycle (5 generators)",
        content: J_C5,
    },
    Fixture {
        name: "L4",
        description: "L_4 = x5*I(C_4) + x6*J(C_4) in 6 variables",
        content: L4,
    },
    Fixture {
        name: "L5",
        description: "L_5 = x6*I(C_5) + x7*J(C_5) in 7 variables",
        content: L5,
    },
    Fixture {
        name: "T",
        description: "seven-generator linear-combination counterexample",
        content: T,
    },
    Fixture {
        name: "Q",
        description: "ten-variable disjoint-block counterexample",
        content: Q,
    },
];

pub fn find(name: &str) -> Option<&'static Fixture> {
    ALL.iter().find(|f| f.name == name)
}
