//! The braid action on V_{r−1}^{⊗n}: the normalized R-matrix operator on a
//! pair of tensor slots, the generators σ_i, and word evaluation.
//!
//! σ_i acts on slots (i, i+1) by R̂, which preserves ε_i + ε_{i+1} and hence
//! every strong weight space. Generator matrices and their exact inverses
//! are memoized behind a mutex; everything else is pure.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::cyclo::{CycField, CycNum};
use crate::linalg::{inverse, Mat, RingElem};
use crate::weightspace::enumerate_basis;
use crate::{Error, Result};

/// A braid word on n strands: letters are signed generator indices,
/// 1 ≤ |g| ≤ n−1, negative = inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    pub n: u32,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: u32, letters: Vec<i32>) -> Result<Self> {
        for &g in &letters {
            if g == 0 || g.unsigned_abs() > n - 1 {
                return Err(Error::BadParameter(format!(
                    "braid letter {g} out of range for {n} strands"
                )));
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// Parse a comma-separated list of signed generator indices.
    pub fn parse(n: u32, text: &str) -> Result<Self> {
        let letters = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<i32>()
                    .map_err(|_| Error::BadParameter(format!("bad braid letter {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(n, letters)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|g| -g).collect(),
        }
    }

    pub fn repeat(&self, k: usize) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.repeat(k),
        }
    }
}

/// Δ_n = δ_n δ_{n−1} … δ_2 with δ_i = σ_1 σ_2 … σ_{i−1}.
pub fn half_twist_word(n: u32) -> BraidWord {
    assert!(n >= 2);
    let mut letters = Vec::new();
    for i in (2..=n).rev() {
        letters.extend(1..=(i as i32 - 1));
    }
    BraidWord { n, letters }
}

/// θ_n = δ_n^n (equal to Δ_n² in B_n; the equality is a test, not an input).
pub fn full_twist_word(n: u32) -> BraidWord {
    assert!(n >= 2);
    let delta: Vec<i32> = (1..=(n as i32 - 1)).collect();
    BraidWord {
        n,
        letters: delta.repeat(n as usize),
    }
}

/// Per-field table of the R̂ action on a pair of slots:
/// `table[a][b]` lists the terms (x, y, coeff) of R̂(u_a ⊗ u_b) = Σ coeff · u_x ⊗ u_y.
pub struct RhatTable {
    pub field: CycField,
    table: Vec<Vec<Vec<(u32, u32, CycNum)>>>,
}

impl RhatTable {
    pub fn terms(&self, a: u32, b: u32) -> &[(u32, u32, CycNum)] {
        &self.table[a as usize][b as usize]
    }
}

/// Build the R̂ table from the closed form
/// R̂(u_i ⊗ u_j) = s^{−(i+j)} Σ_{n=0}^{min(i, r−j−1)} q^{2(i−n)(j+n)}
///   q^{n(n−1)/2} [n+j choose j] Π_{m=0}^{n−1} {m+j+1} · u_{j+n} ⊗ u_{i−n}.
///
/// The exponent n(n−1)/2 is an integer since n(n−1) is even, so every
/// coefficient is an integer power of q (no q^{1/2} enters).
pub fn rhat_table(field: &CycField) -> RhatTable {
    let r = field.r() as i64;
    let mut table = Vec::with_capacity(r as usize);
    for i in 0..r {
        let mut row = Vec::with_capacity(r as usize);
        for j in 0..r {
            let mut terms = Vec::new();
            let nmax = i.min(r - j - 1);
            for n in 0..=nmax {
                let exp = -(r - 1) * (i + j) + 2 * (i - n) * (j + n) + n * (n - 1) / 2;
                let mut c = field.q_pow(exp);
                c = &c * &field.qbinom(n + j, j).expect("n + j < r by truncation");
                for m in 0..n {
                    c = &c * &field.qnum(m + j + 1);
                }
                if !c.is_zero() {
                    terms.push(((j + n) as u32, (i - n) as u32, c));
                }
            }
            row.push(terms);
        }
        table.push(row);
    }
    RhatTable {
        field: field.clone(),
        table,
    }
}

/// R̂ as a matrix on the slice V_{2,ℓ} (0 ≤ ℓ ≤ 2(r−1)).
pub fn rhat_pair(field: &CycField, l: u32) -> Mat<CycNum> {
    sigma_matrix_with(&rhat_table(field), 2, l, 1)
}

fn sigma_matrix_with(table: &RhatTable, n: u32, l: u32, i: u32) -> Mat<CycNum> {
    assert!((1..n).contains(&i), "generator index out of range");
    let field = &table.field;
    let basis = enumerate_basis(n, l, field.r());
    let mut m = Mat::zeros(basis.dim(), basis.dim(), &field.zero());
    let slot = (i - 1) as usize;
    for (col, comp) in basis.order.iter().enumerate() {
        let (a, b) = (comp.0[slot], comp.0[slot + 1]);
        for (x, y, c) in table.terms(a, b) {
            let mut img = comp.clone();
            img.0[slot] = *x;
            img.0[slot + 1] = *y;
            let row = basis.index_of(&img);
            m[(row, col)] = m[(row, col)].add_ref(c);
        }
    }
    m
}

type SigmaKey = (u32, u32, u32, u32, bool);

static SIGMA_CACHE: OnceLock<Mutex<HashMap<SigmaKey, Arc<Mat<CycNum>>>>> = OnceLock::new();

/// Matrix of σ_i (or its exact inverse) on V_{n,ℓ}, memoized per (n, ℓ, r, i).
pub fn sigma_matrix(field: &CycField, n: u32, l: u32, i: u32, inv: bool) -> Arc<Mat<CycNum>> {
    let key = (n, l, field.r(), i, inv);
    let cache = SIGMA_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(m) = cache.lock().unwrap().get(&key) {
        return m.clone();
    }
    let m = if inv {
        let fwd = sigma_matrix(field, n, l, i, false);
        let m = inverse(&fwd)
            .expect("braid generator is invertible; a singular matrix is an internal bug");
        Arc::new(m)
    } else {
        Arc::new(sigma_matrix_with(&rhat_table(field), n, l, i))
    };
    cache.lock().unwrap().insert(key, m.clone());
    m
}

/// Evaluate a braid word on V_{n,ℓ}: the ordered product of generator
/// matrices, ρ(g_1 g_2 … g_k) = ρ(g_1)·ρ(g_2)···ρ(g_k).
pub fn eval_word(field: &CycField, word: &BraidWord, l: u32) -> Mat<CycNum> {
    let n = word.n;
    let dim = enumerate_basis(n, l, field.r()).dim();
    let mut acc = Mat::identity(dim, &field.zero());
    for &g in &word.letters {
        let m = sigma_matrix(field, n, l, g.unsigned_abs(), g < 0);
        acc = acc.mul(&m);
    }
    acc
}
