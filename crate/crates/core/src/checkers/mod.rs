//! Executable forms of the structural conditions on semirings, and the
//! harness that compares them with brute-force congruence verdicts.

mod conditions;
mod crosscheck;
mod enumerate;
mod special;
mod verdict;

pub use conditions::{
    check_condition, check_downward_directed, check_integral_main, check_omega, check_p71, check_prop61, check_si3,
    check_two_sided_separation, find_one_sided_separation, find_translated_separation, find_two_sided_separation,
    find_zero_separator, least_nonzero, zero_separation, Separator, S1,
};
pub use crosscheck::{
    crosscheck, crosscheck_with_threshold, end0_family_match, Agreement, BruteForce, CrossCheckReport, End0Match,
    Observation, ReportedCondition,
};
pub use enumerate::{enumerate_small, MAX_ENUMERATION_SIZE};
pub use special::{
    check_si_props, check_two_element, lukasiewicz_height, mv_basic_witness, rational, tropical_witness, SiPropsReport,
    TwoElementVerdict,
};
pub use verdict::{ConditionId, ConditionVerdict, LabeledVerdict, Witness};
