//! Strong weight spaces V_{n,ℓ} of V_{r−1}^{⊗n} and the operators E, F, K.
//!
//! A basis vector u_{ε_1} ⊗ … ⊗ u_{ε_n} is indexed by the composition
//! (ε_1, …, ε_n) with 0 ≤ ε_i ≤ r−1 and Σ ε_i = ℓ; its strong weight is the
//! integer n(r−1) − 2ℓ. Bases are ordered ascending lexicographically, which
//! fixes every matrix in the crate.

use std::collections::HashMap;

use crate::cyclo::{CycField, CycNum};
use crate::linalg::{Mat, RingElem};

/// A weak n-composition of ℓ with parts below r: the index of one basis
/// tensor of V_{n,ℓ}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Index of the first nonzero part, if any.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.0.iter().position(|&e| e != 0)
    }
}

/// The ordered basis of V_{n,ℓ}.
pub struct SpaceBasis {
    pub n: u32,
    pub l: u32,
    pub r: u32,
    pub order: Vec<Composition>,
    index: HashMap<Composition, usize>,
}

impl SpaceBasis {
    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn index_of(&self, c: &Composition) -> usize {
        self.index[c]
    }

    pub fn get(&self, c: &Composition) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// Strong weight common to every vector of the space, as a plain integer.
    pub fn strong_weight(&self) -> i64 {
        self.n as i64 * (self.r as i64 - 1) - 2 * self.l as i64
    }

    /// Dense coordinate vector of the basis tensor `c`.
    pub fn unit(&self, field: &CycField, c: &Composition) -> Vec<CycNum> {
        let mut v = vec![field.zero(); self.dim()];
        v[self.index_of(c)] = field.one();
        v
    }
}

/// A vector of V_{n,ℓ} as a sparse coefficient map over the basis order.
#[derive(Clone, Debug, PartialEq)]
pub struct SpaceVec<T> {
    pub entries: std::collections::BTreeMap<usize, T>,
}

impl<T: RingElem> SpaceVec<T> {
    pub fn from_dense(v: &[T]) -> Self {
        let entries = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        SpaceVec { entries }
    }

    pub fn to_dense(&self, dim: usize, proto: &T) -> Vec<T> {
        let mut out = vec![proto.zero_like(); dim];
        for (&i, c) in &self.entries {
            out[i] = c.clone();
        }
        out
    }
}

/// Number of weak n-compositions of ℓ with each part less than r:
/// κ = Σ_{t + s·r = ℓ} (−1)^s C(n+t−1, t) C(n, s).
pub fn kappa(l: u32, r: u32, n: u32) -> u64 {
    let mut acc: i128 = 0;
    let mut s = 0u32;
    while (s * r) <= l {
        let t = l - s * r;
        let term =
            binom(n as u64 + t as u64 - 1, t as u64) as i128 * binom(n as u64, s as u64) as i128;
        if s.is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
        s += 1;
    }
    debug_assert!(acc >= 0);
    acc as u64
}

/// Plain binomial coefficient, exact for desk-scale arguments.
pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// All weak n-compositions of ℓ with parts < r, ascending lexicographic.
pub fn enumerate_basis(n: u32, l: u32, r: u32) -> SpaceBasis {
    let mut order = Vec::new();
    let mut parts = vec![0u32; n as usize];
    fn rec(order: &mut Vec<Composition>, parts: &mut Vec<u32>, pos: usize, rem: u32, r: u32) {
        if pos == parts.len() {
            if rem == 0 {
                order.push(Composition(parts.clone()));
            }
            return;
        }
        let hi = rem.min(r - 1);
        for v in 0..=hi {
            parts[pos] = v;
            rec(order, parts, pos + 1, rem - v, r);
        }
        parts[pos] = 0;
    }
    rec(&mut order, &mut parts, 0, l, r);
    // the recursion already emits ascending lexicographic order
    debug_assert!(order.windows(2).all(|w| w[0] < w[1]));
    let index = order.iter().cloned().zip(0..).collect();
    SpaceBasis {
        n,
        l,
        r,
        order,
        index,
    }
}

/// Membership of a basis tensor in the A/B decomposition of V_{n,ℓ}.
/// For ℓ ≥ 2 the first nonzero part decides (1 ⇒ A, ≥ 2 ⇒ B); ℓ = 1 puts
/// c_1, …, c_{n−1} in A and c_n in B; ℓ = 0 puts u_0^{⊗n} in A.
pub fn is_a_type(c: &Composition, l: u32) -> bool {
    match l {
        0 => true,
        1 => c.first_nonzero().is_some_and(|k| k + 1 < c.n()),
        _ => c.first_nonzero().is_some_and(|k| c.0[k] == 1),
    }
}

/// Column indices of the A-type and B-type basis tensors, in basis order.
pub fn ab_split(basis: &SpaceBasis) -> (Vec<usize>, Vec<usize>) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (i, c) in basis.order.iter().enumerate() {
        if is_a_type(c, basis.l) {
            a.push(i);
        } else {
            b.push(i);
        }
    }
    (a, b)
}

/// Matrix of the iterated-coproduct action of E: V_{n,ℓ} → V_{n,ℓ−1}.
///
/// E(u_{ε_1} ⊗ … ⊗ u_{ε_n}) = Σ_i (Π_{j>i} s q^{−2ε_j}) u_{…,ε_i−1,…},
/// dropping slots with ε_i = 0.
pub fn op_e(field: &CycField, n: u32, l: u32) -> Mat<CycNum> {
    assert!(l >= 1, "op_e requires l >= 1");
    let r = field.r();
    let src = enumerate_basis(n, l, r);
    let dst = enumerate_basis(n, l - 1, r);
    let mut m = Mat::zeros(dst.dim(), src.dim(), &field.zero());
    let rm1 = r as i64 - 1;
    for (col, comp) in src.order.iter().enumerate() {
        // running exponent of q in Π_{j>i} s q^{-2 ε_j}
        let mut suffix_exp = 0i64;
        for i in (0..comp.n()).rev() {
            let e = comp.0[i];
            if e > 0 {
                let mut img = comp.clone();
                img.0[i] -= 1;
                let row = dst.index_of(&img);
                let c = field.q_pow(suffix_exp);
                m[(row, col)] = m[(row, col)].add_ref(&c);
            }
            suffix_exp += rm1 - 2 * e as i64;
        }
    }
    m
}

/// Matrix of the iterated-coproduct action of F: V_{n,ℓ} → V_{n,ℓ+1}.
///
/// F(u_{ε_1} ⊗ … ⊗ u_{ε_n}) = Σ_i (Π_{j<i} s^{−1} q^{2ε_j}) \[ε_i+1\]\[r−1−ε_i\]
/// u_{…,ε_i+1,…}, dropping slots with ε_i = r−1.
pub fn op_f(field: &CycField, n: u32, l: u32) -> Mat<CycNum> {
    let r = field.r();
    assert!(l <= n * (r - 1), "op_f source space is empty above n(r-1)");
    let src = enumerate_basis(n, l, r);
    let dst = enumerate_basis(n, l + 1, r);
    let mut m = Mat::zeros(dst.dim(), src.dim(), &field.zero());
    let rm1 = r as i64 - 1;
    for (col, comp) in src.order.iter().enumerate() {
        let mut prefix_exp = 0i64;
        for i in 0..comp.n() {
            let e = comp.0[i];
            if e < r - 1 {
                let mut img = comp.clone();
                img.0[i] += 1;
                let row = dst.index_of(&img);
                let c = &field.q_pow(prefix_exp)
                    * &(&field.qint(e as i64 + 1) * &field.qint(rm1 - e as i64));
                m[(row, col)] = m[(row, col)].add_ref(&c);
            }
            prefix_exp += -rm1 + 2 * e as i64;
        }
    }
    m
}

/// K acts on all of V_{n,ℓ} by the single scalar s^n q^{−2ℓ}.
pub fn op_k(field: &CycField, n: u32, l: u32) -> CycNum {
    field.q_pow((field.r() as i64 - 1) * n as i64 - 2 * l as i64)
}

/// The composite FE: V_{n,ℓ} → V_{n,ℓ} (zero map for ℓ = 0).
pub fn op_fe(field: &CycField, n: u32, l: u32) -> Mat<CycNum> {
    let dim = enumerate_basis(n, l, field.r()).dim();
    if l == 0 {
        return Mat::zeros(dim, dim, &field.zero());
    }
    op_f(field, n, l - 1).mul(&op_e(field, n, l))
}
