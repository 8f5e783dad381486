//! Code constructions, the embedded length-80 figures and file formats.

pub mod constructions;
pub mod figures;
pub mod io;
pub mod octal;
pub mod support;

pub use constructions::{
    direct_sum, double_circulant, extended_hamming_8_4, extended_qr, golay24, hamming_7_4,
    neighbor, pairs_code, random_self_dual, reed_muller, systematic, Border,
};
pub use figures::{b80_4_leader, figure_matrix, n80};
pub use io::{parse_code, parse_vector, read_code, render_code, write_code, CodeFormat};
pub use octal::{parse_octal_matrix, render_octal_matrix};
pub use support::{parse_support, render_support};
