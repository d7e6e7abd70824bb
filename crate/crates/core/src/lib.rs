//! A workbench for intuitionistic propositional logic over finite Kripke
//! models.
//!
//! The crate evaluates the Kripke satisfaction relation, checks and computes
//! asimulations, simulations, bisimulations, homomorphisms and embeddings,
//! builds depth-bounded intuitionistic unravellings, and synthesizes
//! distinguishing formulas that witness failures of positive-theory
//! inclusion.
//!
//! Everything here is pure and deterministic: models are immutable after
//! validation, iteration orders are canonical (world file order, sorted
//! formula order), and no operation touches the outside world. The crate is
//! `no_std` + `alloc`; IO, file formats and the CLI live in the companion
//! `asimcheck` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod distinguish;
pub mod formula;
pub mod kripke;
pub mod relations;
pub mod semantics;
pub mod unravel;

pub use formula::{parse, Formula, ParseError, VocabError, Vocabulary};
pub use kripke::{
    chain_union, close, ClosureMode, KripkeError, KripkeModel, ModelDefect, PointedModel,
    RawModel, ViolationReport,
};
pub use semantics::{EvalError, Theory};
pub use relations::{Side, WRelation, WorldMap};
pub use unravel::UnravelledModel;
pub use distinguish::DistinguishResult;
