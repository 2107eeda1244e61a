//! Normal forms in the Artin braid groups `B_n`.
//!
//! A braid word is rewritten by gathering, strand by strand from the last,
//! the crossings that involve that strand into a block to the right:
//! `x1^m w3 w4 ... wN`. The same forms arise as residues of a confluent
//! rewriting system on crossing sequences.

pub mod artin;
pub mod crossing;
pub mod error;
pub mod gathering;
pub mod oracle;
pub mod randbraid;
pub mod rewriting;
pub mod word;

pub use artin::{embed_b3, equal_a, normalize_a, ArtinNormalForm, ArtinWord, SquareReflection};
pub use crossing::{
    crossings_to_word, validate, word_to_crossings, Crossing, CrossingSequence, PermutationAutomaton,
};
pub use error::{Error, Result};
pub use gathering::{
    check_b3_parity, gather_step, gather_strand, is_normal_form, nf_to_word, normal_form, normal_form_with,
    GatherOptions, NormalForm,
};
pub use randbraid::{random_braid, RandomParams};
pub use rewriting::{applicable_sites, apply_rule, residue, residue_with, RewriteOptions, Strategy};
pub use word::{aij, Arrangement, BraidWord, Generator, Sign};
