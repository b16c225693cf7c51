//! Rewriting: normal forms, ambiguities, confluence reports and ideal membership.

mod ambiguity;
mod membership;
mod system;

pub use ambiguity::{
    check_diamond, find_ambiguities, resolve_ambiguity, Ambiguity, AmbiguityEntry, AmbiguityKind,
    ConfluenceReport, ResolutionCertificate, RuleEntry,
};
pub use membership::{
    ideal_membership_search, BasisElement, IdealBasis, MemberStep, Membership, Origin,
    DEFAULT_BOUND, DEFAULT_MAX_LEN,
};
pub use system::{
    irreducible_words, normal_form, normal_form_by, normal_form_with_fuel, replay, Chooser,
    Reduction, ReductionSystem, RewriteRule, Step, DEFAULT_FUEL,
};
