//! Combinatorial machinery for alternating link diagrams on the sphere and
//! for alternatingly weighted surgery trees.
//!
//! The crate is organised around five pieces:
//!
//! * [`diagram`] — link diagrams as decorated 4-valent combinatorial maps:
//!   parsing, faces, smoothings, canonical forms, Goeritz matrices and the
//!   branched-double-cover determinant.
//! * [`reduce`] — reducible disks, (I)/(II)-moves and the backtracking
//!   decision procedure for B-reducibility, with replayable certificates.
//! * [`minor`] — the smoothing order on diagrams and the Borromean minor
//!   test, plus the bi-implication cross-check between reducibility and
//!   Borromean-freeness.
//! * [`awtree`] — alternatingly weighted forests, their surgery matrices,
//!   exact determinants/permanents, expansion signatures and the strong
//!   L-space criterion.
//! * [`montesinos`] — linear realizations of trees, induced alternating
//!   diagrams, and the certificate-driven reverse translation, cross-checked
//!   by determinant conservation.

pub mod awtree;
pub mod diagram;
pub mod minor;
pub mod montesinos;
pub mod reduce;
