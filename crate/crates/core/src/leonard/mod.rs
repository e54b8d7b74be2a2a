//! Leonard systems: the defining predicate, its characterizations through
//! split decompositions and antiautomorphisms, and parameter arrays.
//!
//! `(A; A*; {Eᵢ}; {E*ᵢ})` is a Leonard system when both `E*ᵢAE*ⱼ` and
//! `EᵢA*Eⱼ` vanish for `|i − j| > 1` and are nonzero for `|i − j| = 1`.

mod antiauto;
mod characterize;
mod companion;
mod orderings;
mod params;
mod sample;
mod verdict;

pub use antiauto::{
    antiautomorphism_in_eigenbasis, char2_check, conjugator_space, eigenbasis_diagonal, Antiautomorphism,
    BasisContext,
};
pub use characterize::{char1_check, characterize, CharacterizationReport};
pub use companion::{g_conjugation, CompanionForm};
pub use orderings::find_leonard_orderings;
pub use params::{
    check_parameter_array, construct_pair, eigenvalue_ratios, FailedCondition, LeonardParameterReport, ParameterArray,
};
pub use sample::{random_element, random_parameter_array, SAMPLING_BUDGET};
pub use verdict::{leonard_verdict, three_gives_four, verdict_for, Condition, FailureWitness, LeonardVerdict};

pub(crate) use companion::companion_for;
