//! The cyclic Burrows-Wheeler transform, its inverse through rank
//! matching, and the Gessel-Reutenauer correspondence between words and
//! permutations.
//!
//! ```
//! use bwtgr::{bwt_transform, invert_bwt};
//!
//! let c = bwt_transform(b"abracadabra").unwrap();
//! assert_eq!(c.last_column.as_bytes(), b"rdarcaaaabb");
//! assert_eq!(invert_bwt(&c).unwrap().as_bytes(), b"abracadabra");
//! ```

pub mod bwt;
pub mod cli;
pub mod error;
pub mod gessel_reutenauer;
pub mod lyndon;
pub mod permutation;
pub mod pipeline;
pub mod suffix_array;
pub mod words;

pub use bwt::{
    bwt_transform, invert_bwt, permutation_from_bwt, pi_of, sigma, sigma_naive,
    sort_conjugates_fast, word_from, BwtContainer,
};
pub use error::{Error, Result};
pub use gessel_reutenauer::{
    binary_special_case_check, descent_bound_check, descents, enumerate_lyndon_colyndon, gr_cycles,
    gr_map, gr_notation, is_co_lyndon, lyndon_words, rho, verify_all, verify_theorem1,
    BijectionReport, DescentSet, RhoSet,
};
pub use lyndon::{is_lyndon, lyndon_factorize, word_type, LyndonFactorization};
pub use permutation::Permutation;
pub use pipeline::{compress, decompress, mtf_decode, mtf_encode, rle_decode, rle_encode};
pub use words::{canonical_rotation, conjugates, is_primitive, parikh, rank, ParikhVector, Word};
