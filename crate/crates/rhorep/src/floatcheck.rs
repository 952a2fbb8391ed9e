//! Complex-arithmetic oracle for the braid action, built from the weight
//! module form of the R-matrix rather than the closed-form coefficients:
//!
//!   R = q^{H⊗H/2} Σ_{n=0}^{r−1} ({1}^{2n}/{n}!) q^{n(n−1)/2} (E^n ⊗ F^n),
//!
//! composed with the flip and the q^{−(r−1)²/2} normalization. The diagonal
//! operator q^{H⊗H/2} uses the strong weights (r−1−2m), which requires
//! q^{1/2} = e^{iπ/2r} — fine in floating point, and a genuinely independent
//! code path from the exact construction.

use num_complex::Complex64;

use crate::cyclo::CycNum;
use crate::linalg::Mat;
use crate::weightspace::enumerate_basis;

fn q12(r: u32) -> Complex64 {
    // e^{i π / 2r}
    Complex64::new(0.0, std::f64::consts::PI / (2.0 * r as f64)).exp()
}

fn qc(r: u32) -> Complex64 {
    q12(r).powi(2)
}

fn qnum_c(r: u32, x: i32) -> Complex64 {
    let q = qc(r);
    q.powi(x) - q.powi(-x)
}

fn qint_c(r: u32, x: i32) -> Complex64 {
    qnum_c(r, x) / qnum_c(r, 1)
}

/// Terms of R̂(u_a ⊗ u_b) = Σ coeff · u_x ⊗ u_y in complex arithmetic.
fn rhat_terms_complex(r: u32, a: u32, b: u32) -> Vec<(u32, u32, Complex64)> {
    let z = q12(r);
    let mut out = Vec::new();
    for n in 0..r {
        if n > a || b + n > r - 1 {
            continue;
        }
        // {1}^{2n}/{n}! · q^{n(n−1)/2}
        let mut c = Complex64::new(1.0, 0.0);
        for _ in 0..(2 * n) {
            c *= qnum_c(r, 1);
        }
        for k in 1..=n {
            c /= qnum_c(r, k as i32);
        }
        c *= qc(r).powi((n as i32 * (n as i32 - 1)) / 2);
        // E^n u_a = u_{a−n}; F^n u_b = Π [b+m+1][r−1−b−m] u_{b+n}
        for m in 0..n {
            c *= qint_c(r, (b + m + 1) as i32) * qint_c(r, (r - 1 - b - m) as i32);
        }
        let (x, y) = (a - n, b + n);
        // q^{H⊗H/2} via strong weights, then flip, then normalization
        let wx = r as i32 - 1 - 2 * x as i32;
        let wy = r as i32 - 1 - 2 * y as i32;
        c *= z.powi(wx * wy);
        c *= z.powi(-((r as i32 - 1) * (r as i32 - 1)));
        out.push((y, x, c));
    }
    out
}

/// σ_i on V_{n,ℓ} as a complex matrix, from the weight-module R-matrix form.
pub fn sigma_complex(r: u32, n: u32, l: u32, i: u32) -> Vec<Vec<Complex64>> {
    let basis = enumerate_basis(n, l, r);
    let d = basis.dim();
    let mut m = vec![vec![Complex64::new(0.0, 0.0); d]; d];
    let slot = (i - 1) as usize;
    for (col, comp) in basis.order.iter().enumerate() {
        let (a, b) = (comp.0[slot], comp.0[slot + 1]);
        for (x, y, c) in rhat_terms_complex(r, a, b) {
            let mut img = comp.clone();
            img.0[slot] = x;
            img.0[slot + 1] = y;
            m[basis.index_of(&img)][col] += c;
        }
    }
    m
}

/// Largest |exact − oracle| over all entries of σ_i on V_{n,ℓ}.
pub fn sigma_deviation(exact: &Mat<CycNum>, r: u32, n: u32, l: u32, i: u32) -> f64 {
    let oracle = sigma_complex(r, n, l, i);
    let mut worst: f64 = 0.0;
    for row in 0..exact.rows() {
        for col in 0..exact.cols() {
            let d = (exact[(row, col)].to_complex() - oracle[row][col]).norm();
            worst = worst.max(d);
        }
    }
    worst
}
