//! Presented algebras, their structural maps and verification.

mod appendix;
mod maps;
mod presentation;
mod star;

pub use appendix::{
    build_appendix_system, extend_with_localization, primed_relations, PrimedRelations,
};
pub use presentation::{
    build_gab, build_gabcd, d_inverse_relations, reslot, tensor_presentation, GabcdData,
    Presentation,
};
pub use maps::{
    antipode, comultiplication, comultiplication_map, congruence_morphism, counit,
    hopf_congruence_morphism, hopf_flip_morphism, inversion_morphism, verify_hopf_identities,
    verify_morphism, verify_structural_map, AlgebraMap, HopfCertificate, MapCertificate,
    MorphismCertificate, MorphismSpec, RelationVerdict,
};
pub use star::{verify_star_structure, StarCertificate, StarMap};
