//! Exact construction and verification of rational extensions of the
//! harmonic oscillator indexed by Maya diagrams.
//!
//! The `examples/` directory of this crate walks through each capability:
//! diagrams and their coordinates, Hermite Wronskians, extension potentials,
//! regularity, intertwiners, ladder operators and their syzygies.
//!
//! ```
//! use maya_ladder::{ladder, MayaDiagram};
//!
//! let m: MayaDiagram = "K:{-2}".parse().unwrap();
//! assert_eq!(ladder(&m, 2).unwrap().order, 2);
//! ```

pub mod algebra;
pub mod cancel;
pub mod cli;
pub mod error;
pub mod extension;
pub mod hermite;
pub mod intertwine;
pub mod maya;
pub mod multiset;
pub mod verify;

pub use algebra::{DiffOperator, GaugedRational, Polynomial, Rational, RationalFunction};
pub use cancel::Cancellation;
pub use error::{Error, Result};
pub use extension::{
    bound_states, eigenfunction, exceptional_hermite, is_regular, potential, schrodinger,
    EigenState, RationalExtension,
};
pub use hermite::{
    conjugate_hermite, hermite, normalized_h, pseudo_wronskian, psi, wronskian_polynomial,
};
pub use intertwine::{
    compose_arrows, first_order_factorization, intertwiner, intertwiner_multiset, ladder,
    ladder_coefficient, ladder_order, syzygy, verify_functor, verify_intertwining, Arrow,
    LadderResult, Syzygy,
};
pub use maya::{
    parse_diagram, parse_multiset, BlockCoordinates, FrobeniusSymbol, Glyphs, MayaDiagram,
};
pub use multiset::IntegerMultiset;
