//! Preimage sets and root-set identities for the quaternionic E-type pairs,
//! in simple-root coordinates.

pub(super) struct Step {
    pub beta: &'static [i64],
    pub exclude: &'static [&'static [i64]],
    pub minus: &'static [i64],
    pub plus: &'static [i64],
}

pub(super) struct Case {
    pub algebra: &'static str,
    pub lambda: &'static [i64],
    pub lambda_preimage: &'static [&'static [i64]],
    pub nu: &'static [i64],
    pub nu_preimage: &'static [&'static [i64]],
    pub steps: &'static [Step],
}

const E6_A1: &[i64] = &[1, 0, 0, 0, 0, 0];
const E6_A6: &[i64] = &[0, 0, 0, 0, 0, 1];
const E6_NU: &[i64] = &[0, 0, 1, 1, 1, 1];

const E7_L1: &[i64] = &[0, 0, 0, 1, 0, 0, 0];
const E7_L2: &[i64] = &[0, 0, 0, 1, 1, 0, 0];
const E7_L3: &[i64] = &[0, 1, 0, 1, 0, 0, 0];
const E7_L4: &[i64] = &[0, 1, 0, 1, 1, 0, 0];
const E7_N1: &[i64] = &[0, 0, 1, 1, 0, 0, 0];
const E7_N2: &[i64] = &[0, 0, 1, 1, 1, 0, 0];

const E8_L1: &[i64] = &[1, 0, 0, 0, 0, 0, 0, 0];
const E8_L2: &[i64] = &[1, 0, 1, 0, 0, 0, 0, 0];
const E8_L3: &[i64] = &[1, 0, 1, 1, 0, 0, 0, 0];
const E8_L4: &[i64] = &[1, 1, 1, 1, 0, 0, 0, 0];
const E8_L5: &[i64] = &[1, 0, 1, 1, 1, 0, 0, 0];
const E8_L6: &[i64] = &[1, 1, 1, 1, 1, 0, 0, 0];
const E8_L7: &[i64] = &[1, 1, 1, 2, 1, 0, 0, 0];
const E8_L8: &[i64] = &[1, 1, 2, 2, 1, 0, 0, 0];
const E8_N1: &[i64] = &[1, 1, 1, 2, 2, 2, 1, 0];
const E8_N2: &[i64] = &[1, 1, 2, 2, 2, 2, 1, 0];
const E8_N3: &[i64] = &[1, 1, 2, 3, 2, 2, 1, 0];
const E8_N4: &[i64] = &[1, 2, 2, 3, 2, 2, 1, 0];

pub(super) const CASES: [Case; 3] = [
    Case {
        algebra: "E6",
        lambda: E6_A1,
        lambda_preimage: &[E6_A1, E6_A6],
        nu: E6_NU,
        nu_preimage: &[E6_NU, &[1, 0, 1, 1, 1, 0]],
        steps: &[Step {
            beta: E6_NU,
            exclude: &[],
            minus: E6_A6,
            plus: E6_A1,
        }],
    },
    Case {
        algebra: "E7",
        lambda: E7_L1,
        lambda_preimage: &[E7_L1, E7_L2, E7_L3, E7_L4],
        nu: E7_N1,
        nu_preimage: &[E7_N1, E7_N2, &[0, 1, 1, 1, 0, 0, 0], &[0, 1, 1, 1, 1, 0, 0]],
        steps: &[
            Step {
                beta: E7_N1,
                exclude: &[],
                minus: E7_L1,
                plus: E7_L4,
            },
            Step {
                beta: E7_N2,
                exclude: &[E7_L1, E7_L4],
                minus: E7_L2,
                plus: E7_L3,
            },
        ],
    },
    Case {
        algebra: "E8",
        lambda: E8_L1,
        lambda_preimage: &[E8_L1, E8_L2, E8_L3, E8_L4, E8_L5, E8_L6, E8_L7, E8_L8],
        nu: E8_N1,
        nu_preimage: &[
            E8_N1,
            E8_N2,
            E8_N3,
            E8_N4,
            &[1, 1, 2, 3, 3, 2, 1, 0],
            &[1, 2, 2, 3, 3, 2, 1, 0],
            &[1, 2, 2, 4, 3, 2, 1, 0],
            &[1, 2, 3, 4, 3, 2, 1, 0],
        ],
        steps: &[
            Step {
                beta: E8_N1,
                exclude: &[],
                minus: E8_L1,
                plus: E8_L8,
            },
            Step {
                beta: E8_N2,
                exclude: &[E8_L1, E8_L8],
                minus: E8_L2,
                plus: E8_L7,
            },
            Step {
                beta: E8_N3,
                exclude: &[E8_L1, E8_L8, E8_L2, E8_L7],
                minus: E8_L3,
                plus: E8_L6,
            },
            Step {
                beta: E8_N4,
                exclude: &[E8_L1, E8_L8, E8_L2, E8_L7, E8_L3, E8_L6],
                minus: E8_L4,
                plus: E8_L5,
            },
        ],
    },
];
