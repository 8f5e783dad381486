//! Standard constructions of small self-dual and extremal codes.

use rand::Rng;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{self, BitMat, BitVec};

/// Reed–Muller code `RM(r, m)`: evaluations of all monomials of degree at
/// most `r` in `m` Boolean variables, at the points `0..2^m` (bit `i` of the
/// point index is variable `i`).
pub fn reed_muller(r: usize, m: usize) -> Result<LinearCode> {
    if r > m || m > 20 {
        return Err(Error::InvalidParameter(format!(
            "RM({r}, {m}) needs 0 <= r <= m <= 20"
        )));
    }
    let n = 1usize << m;
    let mut rows = Vec::new();
    for mono in 0u32..(1 << m) {
        if mono.count_ones() as usize > r {
            continue;
        }
        let mut v = BitVec::zeros(n);
        for p in 0..n {
            if (p as u32) & mono == mono {
                v.set(p, true);
            }
        }
        rows.push(v);
    }
    LinearCode::from_rows(n, rows)
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn circulant(first: &BitVec) -> BitMat {
    let l = first.len();
    let rows = (0..l)
        .map(|i| {
            let mut r = BitVec::zeros(l);
            for j in first.ones_indices() {
                r.set((j + i) % l, true);
            }
            r
        })
        .collect();
    BitMat::from_rows(l, rows).expect("square")
}

/// Extended quadratic-residue code of prime length `p ≡ ±1 (mod 8)`.
///
/// The cyclic QR code is generated by the circulant of one of the
/// idempotents `e_Q`, `1 + e_N`, `e_N`, `1 + e_Q`; the first with rank
/// `(p+1)/2` is used, then every codeword gets an overall parity bit.
pub fn extended_qr(p: usize) -> Result<LinearCode> {
    if !is_prime(p) || !(p % 8 == 1 || p % 8 == 7) {
        return Err(Error::InvalidParameter(format!(
            "extended QR codes need a prime p = ±1 mod 8, got {p}"
        )));
    }
    let residues: Vec<bool> = {
        let mut q = vec![false; p];
        for i in 1..p {
            q[i * i % p] = true;
        }
        q
    };
    let e_q = BitVec::from_bools(&(0..p).map(|i| i > 0 && residues[i]).collect::<Vec<_>>());
    let e_n = BitVec::from_bools(&(0..p).map(|i| i > 0 && !residues[i]).collect::<Vec<_>>());
    let mut one = BitVec::zeros(p);
    one.set(0, true);
    let candidates = [e_q.clone(), one.xor(&e_n), e_n, one.xor(&e_q)];
    let target = p.div_ceil(2);
    let basis = candidates
        .iter()
        .map(|e| gf2::rref(&circulant(e)))
        .find(|r| r.rank == target)
        .ok_or_else(|| Error::InvalidParameter(format!("no QR idempotent of rank {target}")))?;
    let rows = basis
        .matrix
        .rows()
        .iter()
        .map(|r| {
            let mut parity = BitVec::zeros(1);
            parity.set(0, r.weight() % 2 == 1);
            r.concat(&parity)
        })
        .collect();
    LinearCode::from_rows(p + 1, rows)
}

/// Border of a bordered double circulant generator
/// `( I | [corner, row..row ; column..column, R] )`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Border {
    pub corner: bool,
    pub row: bool,
    pub column: bool,
}

impl Default for Border {
    fn default() -> Self {
        Self {
            corner: false,
            row: true,
            column: true,
        }
    }
}

/// Pure `(I_l | R)` or bordered `(I_{l+1} | B)` double circulant code, with
/// `R` the circulant whose first row is `first_row`.
pub fn double_circulant(first_row: &BitVec, border: Option<Border>) -> Result<LinearCode> {
    let l = first_row.len();
    if l == 0 {
        return Err(Error::InvalidParameter("empty first row".into()));
    }
    let r = circulant(first_row);
    let right = match border {
        None => r,
        Some(b) => {
            let mut rows = Vec::with_capacity(l + 1);
            let mut top = BitVec::zeros(l + 1);
            top.set(0, b.corner);
            for j in 1..=l {
                top.set(j, b.row);
            }
            rows.push(top);
            for row in r.rows() {
                let mut lead = BitVec::zeros(1);
                lead.set(0, b.column);
                rows.push(lead.concat(row));
            }
            BitMat::from_rows(l + 1, rows)?
        }
    };
    let gen = BitMat::identity(right.nrows()).hconcat(&right)?;
    Ok(LinearCode::from_generator(&gen))
}

/// `(I_r | M)` for an `r x c` matrix `M`.
pub fn systematic(m: &BitMat) -> Result<LinearCode> {
    Ok(LinearCode::from_generator(
        &BitMat::identity(m.nrows()).hconcat(m)?,
    ))
}

pub fn direct_sum(codes: &[LinearCode]) -> Result<LinearCode> {
    let n: usize = codes.iter().map(LinearCode::n).sum();
    let mut rows = Vec::new();
    let mut offset = 0;
    for c in codes {
        for r in c.generator().rows() {
            let idx: Vec<usize> = r.ones_indices().into_iter().map(|i| i + offset).collect();
            rows.push(BitVec::from_indices(n, &idx)?);
        }
        offset += c.n();
    }
    LinearCode::from_rows(n, rows)
}

/// The `[n, n/2, 2]` self-dual code `{00, 11}^(n/2)`.
pub fn pairs_code(n: usize) -> Result<LinearCode> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "pairs code needs a positive even length, got {n}"
        )));
    }
    let rows = (0..n / 2)
        .map(|i| BitVec::from_indices(n, &[2 * i, 2 * i + 1]))
        .collect::<Result<Vec<_>>>()?;
    LinearCode::from_rows(n, rows)
}

pub fn hamming_7_4() -> LinearCode {
    let g = BitMat::parse_rows("1000110\n0100011\n0010111\n0001101").expect("valid rows");
    LinearCode::from_generator(&g)
}

pub fn extended_hamming_8_4() -> LinearCode {
    reed_muller(1, 3).expect("valid parameters")
}

/// The extended Golay `[24, 12, 8]` code as a bordered double circulant
/// over the quadratic residues mod 11.
pub fn golay24() -> LinearCode {
    let first = BitVec::from_indices(11, &[0, 1, 3, 4, 5, 9]).expect("in range");
    double_circulant(&first, Some(Border::default())).expect("valid shape")
}

/// The self-dual neighbor `(C ∩ x^⊥) + <x>` of a self-dual code.
pub fn neighbor(c: &LinearCode, x: &BitVec) -> Result<LinearCode> {
    if x.weight() % 2 == 1 {
        return Err(Error::InvalidParameter(
            "neighbor vector must have even weight".into(),
        ));
    }
    let rows = c.generator().rows();
    let Some(pos) = rows.iter().position(|r| r.dot(x)) else {
        return Err(Error::InvalidParameter(
            "neighbor vector lies in the dual".into(),
        ));
    };
    let pivot = rows[pos].clone();
    let mut out: Vec<BitVec> = rows
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pos)
        .map(|(_, r)| if r.dot(x) { r.xor(&pivot) } else { r.clone() })
        .collect();
    out.push(x.clone());
    LinearCode::from_rows(c.n(), out)
}

/// Random self-dual code of length `n`: start from `{00,11}^(n/2)` under a
/// random coordinate permutation and take `steps` random neighbor steps.
pub fn random_self_dual<R: Rng + ?Sized>(n: usize, steps: usize, rng: &mut R) -> Result<LinearCode> {
    let base = pairs_code(n)?;
    if n == 2 {
        // {00, 11} is the only self-dual code of length 2
        return Ok(base);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    let mut c = LinearCode::from_generator(&base.generator().permute_columns(&perm));
    let mut taken = 0;
    while taken < steps {
        let mut x = BitVec::from_bools(&(0..n).map(|_| rng.random()).collect::<Vec<bool>>());
        if x.weight() % 2 == 1 {
            x.flip(rng.random_range(0..n));
        }
        if c.generator().rows().iter().any(|r| r.dot(&x)) {
            c = neighbor(&c, &x)?;
            taken += 1;
        }
    }
    Ok(c)
}
