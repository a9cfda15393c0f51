//! Bit-packed matrices over the two-element field.

/// A `rows × cols` matrix over GF(2), stored column by column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = rows.div_ceil(64).max(1);
        Gf2Matrix { rows, cols, words, data: vec![0; words * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[c * self.words + r / 64] >> (r % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        let w = &mut self.data[c * self.words + r / 64];
        if bit {
            *w |= 1 << (r % 64);
        } else {
            *w &= !(1 << (r % 64));
        }
    }

    pub fn column(&self, c: usize) -> &[u64] {
        &self.data[c * self.words..(c + 1) * self.words]
    }

    /// Rank of the selected columns.
    pub fn rank_of_columns(&self, columns: &[usize]) -> usize {
        let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
        for &c in columns {
            let mut v = self.column(c).to_vec();
            for (pivot, b) in &basis {
                if v[pivot / 64] >> (pivot % 64) & 1 == 1 {
                    v.iter_mut().zip(b).for_each(|(x, y)| *x ^= y);
                }
            }
            if let Some(pivot) = lowest_set_bit(&v) {
                basis.push((pivot, v));
            }
        }
        basis.len()
    }

    pub fn rank(&self) -> usize {
        self.rank_of_columns(&(0..self.cols).collect::<Vec<_>>())
    }
}

fn lowest_set_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

pub fn gf2_rank(m: &Gf2Matrix, columns: &[usize]) -> usize {
    m.rank_of_columns(columns)
}
