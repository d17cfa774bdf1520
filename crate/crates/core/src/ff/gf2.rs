//! Word-packed Gauss–Jordan elimination over GF(2).
//!
//! Rows are bit vectors of `u64` words; elimination is xor of whole words.
//! The result is the same `Rref` the generic path produces, bit for bit.

use crate::ff::field::Fe;
use crate::ff::matrix::{MatF, Rref};

struct Packed {
    words: usize,
    bits: Vec<u64>,
}

impl Packed {
    fn from_matrix(m: &MatF) -> Self {
        let words = m.cols().div_ceil(64).max(1);
        let mut bits = vec![0u64; m.rows() * words];
        for i in 0..m.rows() {
            for (j, x) in m.row(i).iter().enumerate() {
                if x.0 != 0 {
                    bits[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        Packed { words, bits }
    }

    #[inline]
    fn bit(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for w in 0..self.words {
            self.bits.swap(a * self.words + w, b * self.words + w);
        }
    }

    /// row[dst] ^= row[src], starting at word `from`.
    fn xor_into(&mut self, dst: usize, src: usize, from: usize) {
        let w = self.words;
        for k in from..w {
            let s = self.bits[src * w + k];
            self.bits[dst * w + k] ^= s;
        }
    }
}

pub fn rref_packed(m: &MatF) -> Rref {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = Packed::from_matrix(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a.bit(i, c)) else {
            continue;
        };
        if piv != r {
            a.swap_rows(piv, r);
        }
        let from = c / 64;
        for i in 0..rows {
            if i != r && a.bit(i, c) {
                a.xor_into(i, r, from);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut data = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        data.extend((0..cols).map(|j| if a.bit(i, j) { Fe::ONE } else { Fe::ZERO }));
    }
    Rref {
        reduced: MatF::from_raw(m.ctx(), rows, cols, data).expect("shape preserved"),
        rank: r,
        pivots,
    }
}
