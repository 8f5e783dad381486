//! The two printed `[80, 40, 16]` generator matrices, shipped as assets.

use sha2::{Digest, Sha256};

use crate::catalog::constructions::systematic;
use crate::catalog::octal::parse_octal_matrix;
use crate::catalog::support::parse_support;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{BitMat, BitVec};

pub const M80_1_TEXT: &str = include_str!("../../assets/m80_1.oct");
pub const M80_2_TEXT: &str = include_str!("../../assets/m80_2.oct");

const M80_1_SHA256: &str = "27053267dab9b1933fa7e467ae74e4e7feed56278e9b3185f632e0a9b53bdee7";
const M80_2_SHA256: &str = "2d14d725397a530f132f4fcc8f0588fbc663ae990d8be6b7466f040e5dd38c44";

/// Support of a weight-13 coset leader printed for the bordered double
/// circulant code `B_{80,4}`.
pub const B80_4_LEADER: &str = "{2,5,8,11,14,17,20,23,26,29,32,35,38}";

fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Raw asset text for figure `index` (1 or 2), checksum-verified.
pub fn figure_text(index: u8) -> Result<&'static str> {
    let (text, sum) = match index {
        1 => (M80_1_TEXT, M80_1_SHA256),
        2 => (M80_2_TEXT, M80_2_SHA256),
        _ => return Err(Error::InvalidParameter(format!("no figure {index}"))),
    };
    let got = sha256_hex(text);
    if got != sum {
        return Err(Error::Parse(format!(
            "figure {index} asset checksum mismatch: {got}"
        )));
    }
    Ok(text)
}

/// The 40 x 40 matrix `M_{80,index}`.
pub fn figure_matrix(index: u8) -> Result<BitMat> {
    parse_octal_matrix(figure_text(index)?)
}

/// The code `N_{80,index}` with generator `(I_40 | M_{80,index})`.
pub fn n80(index: u8) -> Result<LinearCode> {
    systematic(&figure_matrix(index)?)
}

pub fn b80_4_leader() -> BitVec {
    parse_support(B80_4_LEADER, 80).expect("valid support")
}
