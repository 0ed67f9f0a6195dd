//! Cartier–Manin (Hasse–Witt) matrix of `y^m = f(x)` over `F_p` with
//! `p ≡ 1 (mod m)`, and the p-rank it determines.
//!
//! The regular differentials split by the character of `y`: block `b`
//! has basis `x^(a-1) y^(-b) dx` for `1 ≤ a ≤ ⌈nb/m⌉ - 1`. The Cartier
//! operator maps `x^(a-1) y^(-b) dx` to `Σ_a' c_(pa'-a) x^(a'-1) y^(-b) dx`,
//! where `c_j` is the coefficient of `x^j` in `f^((p-1)b/m)`.

use std::fmt;

use thiserror::Error;

use crate::curve::SuperellipticCurve;
use crate::finite_field::PrimeField;
use crate::poly::{Poly, PolyRing};
use crate::ring::{Field, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartierError {
    #[error("p = {p} is not 1 mod m = {m}")]
    CongruenceViolation { p: u64, m: u32 },
    #[error("matrix shape mismatch")]
    Shape,
}

/// Dense matrix over `F_p`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.cols.max(1))).finish()
    }
}

impl FpMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Entries are reduced mod `p`.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self, CartierError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(CartierError::Shape);
        }
        let data = rows.iter().flatten().map(|&x| field.reduce_i64(x)).collect();
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.field.p();
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[u64]>::to_vec).collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self, CartierError> {
        if self.cols != other.rows {
            return Err(CartierError::Shape);
        }
        let k = &self.field;
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = k.add(&out.data[idx], &k.mul(&a, &other.get(l, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> Result<Self, CartierError> {
        if self.rows != self.cols {
            return Err(CartierError::Shape);
        }
        let mut base = self.clone();
        let mut acc = Self::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Row echelon form in place; returns the pivot count and the
    /// determinant factor from swaps and pivots.
    fn eliminate(&mut self) -> (usize, u64) {
        let k = self.field;
        let mut rank = 0;
        let mut det = 1u64;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| self.get(r, col) != 0) else {
                det = 0;
                continue;
            };
            if pivot != rank {
                for j in 0..self.cols {
                    self.data.swap(pivot * self.cols + j, rank * self.cols + j);
                }
                det = k.neg(&det);
            }
            let pv = self.get(rank, col);
            det = k.mul(&det, &pv);
            let inv = k.inv(&pv).expect("nonzero pivot");
            for r in rank + 1..self.rows {
                let factor = k.mul(&self.get(r, col), &inv);
                if factor == 0 {
                    continue;
                }
                for j in col..self.cols {
                    let v = k.sub(&self.get(r, j), &k.mul(&factor, &self.get(rank, j)));
                    self.data[r * self.cols + j] = v;
                }
            }
            rank += 1;
        }
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().0
    }

    /// Gaussian elimination with exact residues.
    pub fn det(&self) -> Result<u64, CartierError> {
        if self.rows != self.cols {
            return Err(CartierError::Shape);
        }
        if self.rows == 0 {
            return Ok(1);
        }
        Ok(self.clone().eliminate().1)
    }

    /// Gauss–Jordan inverse, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let k = self.field;
        let mut a = self.clone();
        let mut inv = Self::identity(self.field, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col) != 0)?;
            for j in 0..n {
                a.data.swap(pivot * n + j, col * n + j);
                inv.data.swap(pivot * n + j, col * n + j);
            }
            let s = k.inv(&a.get(col, col)).ok()?;
            for j in 0..n {
                a.data[col * n + j] = k.mul(&a.get(col, j), &s);
                inv.data[col * n + j] = k.mul(&inv.get(col, j), &s);
            }
            for r in (0..n).filter(|&r| r != col) {
                let factor = a.get(r, col);
                if factor == 0 {
                    continue;
                }
                for j in 0..n {
                    a.data[r * n + j] = k.sub(&a.get(r, j), &k.mul(&factor, &a.get(col, j)));
                    inv.data[r * n + j] = k.sub(&inv.get(r, j), &k.mul(&factor, &inv.get(col, j)));
                }
            }
        }
        Some(inv)
    }

    /// Block-diagonal matrix with the given square blocks.
    pub fn block_diagonal(field: PrimeField, blocks: &[FpMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(field, n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.data[(off + i) * n + off + j] = b.get(i, j);
                }
            }
            off += b.rows;
        }
        out
    }
}

/// Hasse–Witt matrix, one square block per character `b = 1..m-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartierMatrix {
    field: PrimeField,
    blocks: Vec<FpMatrix>,
}

impl CartierMatrix {
    /// From explicit square blocks (block-diagonal assembly).
    pub fn from_blocks(field: PrimeField, blocks: Vec<FpMatrix>) -> Result<Self, CartierError> {
        if blocks.iter().any(|b| b.rows != b.cols || b.field != field) {
            return Err(CartierError::Shape);
        }
        Ok(Self { field, blocks })
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn blocks(&self) -> &[FpMatrix] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(FpMatrix::rows).collect()
    }

    pub fn genus(&self) -> usize {
        self.block_sizes().iter().sum()
    }

    pub fn assembled(&self) -> FpMatrix {
        FpMatrix::block_diagonal(self.field, &self.blocks)
    }

    pub fn det(&self) -> u64 {
        self.blocks
            .iter()
            .fold(1, |acc, b| self.field.mul(&acc, &b.det().expect("square")))
    }
}

fn coefficient(f: &Poly<u64>, j: i64) -> u64 {
    usize::try_from(j).ok().and_then(|j| f.coeff(j).copied()).unwrap_or(0)
}

/// Hasse–Witt matrix of `y^m = f(x)`; requires `p ≡ 1 (mod m)`.
pub fn hasse_witt_matrix(curve: &SuperellipticCurve) -> Result<CartierMatrix, CartierError> {
    let (p, m) = (curve.p(), curve.m());
    if p % m as u64 != 1 {
        return Err(CartierError::CongruenceViolation { p, m });
    }
    let field = *curve.field();
    let ring = PolyRing::new(field);
    let n = curve.degree() as i64;
    let mut blocks = Vec::with_capacity(m as usize - 1);
    for b in 1..m as i64 {
        let dim = ((n * b + m as i64 - 1) / m as i64 - 1) as usize;
        let power = ring.pow(curve.f(), (p - 1) * b as u64 / m as u64);
        let mut block = FpMatrix::zeros(field, dim, dim);
        for a_out in 1..=dim {
            for a_in in 1..=dim {
                let j = p as i64 * a_out as i64 - a_in as i64;
                block.set(a_out - 1, a_in - 1, coefficient(&power, j));
            }
        }
        blocks.push(block);
    }
    let hw = CartierMatrix::from_blocks(field, blocks)?;
    assert_eq!(hw.genus(), curve.genus() as usize, "block sizes must sum to the genus");
    Ok(hw)
}

/// Stable rank of the Cartier operator: `rank(M^g)` (σ is trivial over `F_p`).
pub fn p_rank(hw: &CartierMatrix) -> usize {
    let g = hw.genus() as u32;
    hw.blocks
        .iter()
        .map(|b| b.pow(g).expect("square").rank())
        .sum()
}

/// `det M ≠ 0`, i.e. the p-rank equals the genus.
pub fn is_ordinary_cartier(curve: &SuperellipticCurve) -> Result<bool, CartierError> {
    Ok(hasse_witt_matrix(curve)?.det() != 0)
}
