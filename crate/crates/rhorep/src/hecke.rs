//! Minimal polynomials and generator orders for the ℓ = 2 extensions, the
//! 3-dimensional cubic Hecke representation, and the r = 3, n = 4 quotient
//! comparison W_{4,2}/S_{4,2} ≅ the cubic representation at x = q⁵, y = z = 1.

use num_rational::BigRational;

use crate::cyclo::{CycField, CycNum};
use crate::dominant::{basis_n20, basis_n21, decompose_csr, NBasis};
use crate::lawrence::{pair_basis, w_basis};
use crate::linalg::{coords_in_span, rref_in, solve, Mat, RingElem};
use crate::weightspace::{enumerate_basis, op_f, Composition};
use crate::{Error, Result};

/// The exact minimal polynomial of a square matrix over the cyclotomic
/// field, monic, coefficients ascending: the least k with I, M, …, M^k
/// linearly dependent, found by exact elimination on vectorized powers.
pub fn minimal_polynomial(m: &Mat<CycNum>) -> Vec<CycNum> {
    assert!(m.is_square());
    let field = m[(0, 0)].field().clone();
    let d = m.rows();
    let vec_len = d * d;
    let mut powers: Vec<Mat<CycNum>> = vec![Mat::identity(d, &field.zero())];
    loop {
        let k = powers.len();
        // solve Σ_{i<k} c_i vec(M^i) = vec(M^k)
        let a = Mat::from_fn(vec_len, k, |row, col| {
            powers[col][(row / d, row % d)].clone()
        });
        let target = powers[k - 1].mul(m);
        let b = Mat::from_fn(vec_len, 1, |row, _| target[(row / d, row % d)].clone());
        if let Some(x) = solve(&a, &b) {
            // verify: target == Σ c_i M^i (solve() only certifies pivot rows)
            let mut recomposed = Mat::zeros(d, d, &field.zero());
            for (i, p) in powers.iter().enumerate() {
                recomposed = recomposed.add(&p.scale(&x[(i, 0)]));
            }
            if recomposed == target {
                // minimal polynomial: X^k − Σ c_i X^i
                let mut coeffs: Vec<CycNum> = (0..k).map(|i| -&x[(i, 0)]).collect();
                coeffs.push(field.one());
                return coeffs;
            }
        }
        powers.push(target);
        assert!(
            powers.len() <= d + 1,
            "minimal polynomial exceeds dimension"
        );
    }
}

/// Evaluate a monic polynomial (ascending coefficients) at a matrix.
pub fn eval_poly_at(m: &Mat<CycNum>, coeffs: &[CycNum]) -> Mat<CycNum> {
    let field = m[(0, 0)].field().clone();
    let d = m.rows();
    let mut acc = Mat::zeros(d, d, &field.zero());
    for c in coeffs.iter().rev() {
        acc = acc.mul(m);
        let id = Mat::identity(d, &field.zero()).scale(c);
        acc = acc.add(&id);
    }
    acc
}

/// The cubic p(X) = (X − 1)(X + s^{−2})(X − s^{−4}q²) as ascending
/// coefficients over the cyclotomic field.
pub fn cubic_min_poly(field: &CycField) -> Vec<CycNum> {
    let one = field.one();
    let s2 = field.s_pow(-2);
    let eig3 = &field.s_pow(-4) * &field.q_pow(2);
    // (X - 1)(X + s^{-2})(X - s^{-4}q^2)
    // = X^3 + (-1 + s^{-2} - s^{-4}q^2) X^2
    //   + (-s^{-2} + s^{-4}q^2 - s^{-6}q^2) X + s^{-6}q^2
    let c2 = &(&s2 - &one) - &eig3;
    let c1 = &(&(-&s2) + &eig3) - &(&s2 * &eig3);
    let c0 = &s2 * &eig3;
    vec![c0, c1, c2, field.one()]
}

/// Which ℓ = 2 extension to inspect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtRep {
    /// N_{n,2,0}, requires n ≡ −1 mod r.
    N20,
    /// N_{n,2,1}, requires n ≡ −2 mod r.
    N21,
}

pub struct OrderReport {
    /// Least k ≥ 1 with σ_1^k = Id, or None if not reached by 2r (the
    /// eigenvalues are 2r-th roots of unity, so None signals non-semisimple
    /// torsion — reported, never expected).
    pub order: Option<u32>,
    /// p(σ_1) = 0 held exactly.
    pub annihilated_by_cubic: bool,
    /// The three eigenvalues 1, q^{r+2}, q⁶ are pairwise distinct (iff r ≥ 5).
    pub eigenvalues_distinct: bool,
}

fn ext_basis(field: &CycField, n: u32, rep: ExtRep) -> Result<NBasis> {
    match rep {
        ExtRep::N20 => basis_n20(field, n),
        ExtRep::N21 => basis_n21(field, n),
    }
}

/// Order of σ_1 on N_{n,2,·} together with the cubic-relation checks.
pub fn generator_order(field: &CycField, n: u32, rep: ExtRep) -> Result<OrderReport> {
    let r = field.r();
    let nb = ext_basis(field, n, rep)?;
    let m = nb.sigma(field, 1);
    let p = cubic_min_poly(field);
    let annihilated = eval_poly_at(&m, &p).is_zero_mat();
    let one = field.one();
    let e2 = field.q_pow(r as i64 + 2);
    let e3 = field.q_pow(6);
    let eigenvalues_distinct = one != e2 && one != e3 && e2 != e3;
    let d = m.rows();
    let mut acc = Mat::identity(d, &field.zero());
    let mut order = None;
    for k in 1..=(2 * r) {
        acc = acc.mul(&m);
        if acc.is_identity() {
            order = Some(k);
            break;
        }
    }
    Ok(OrderReport {
        order,
        annihilated_by_cubic: annihilated,
        eigenvalues_distinct,
    })
}

/// The 3-dimensional cubic Hecke representation of H_4 with parameters
/// (x, y, z): σ_1 = σ_3 and σ_2 as printed. Returns [ρ(σ_1), ρ(σ_2), ρ(σ_3)].
pub fn cubic_rep<T: RingElem>(x: &T, y: &T, z: &T) -> [Mat<T>; 3] {
    let zero = x.zero_like();
    let one = x.one_like();
    let xz_y2 = x.mul_ref(z).add_ref(&y.mul_ref(y));
    let m13 = Mat::from_fn(3, 3, |i, j| match (i, j) {
        (0, 0) => z.clone(),
        (1, 0) => xz_y2.clone(),
        (1, 1) => y.clone(),
        (2, 0) => y.clone(),
        (2, 1) => one.clone(),
        (2, 2) => x.clone(),
        _ => zero.clone(),
    });
    let m2 = Mat::from_fn(3, 3, |i, j| match (i, j) {
        (0, 0) => x.clone(),
        (0, 1) => one.neg_ref(),
        (0, 2) => y.clone(),
        (1, 1) => y.clone(),
        (1, 2) => xz_y2.neg_ref(),
        (2, 2) => z.clone(),
        _ => zero.clone(),
    });
    [m13.clone(), m2, m13]
}

pub struct Quotient42 {
    /// Quotient matrices of σ_1, σ_2, σ_3 on the basis \[g_1\], \[g_2\], \[g_3\].
    pub matrices: [Mat<CycNum>; 3],
    /// Entry-for-entry equality with cubic_rep(q⁵, 1, 1).
    pub matches_cubic_rep: bool,
}

/// The r = 3, n = 4 quotient W_{4,2}/S_{4,2} in the g-basis,
/// compared against the specialized cubic representation.
pub fn cubic_quotient_42(field: &CycField) -> Result<Quotient42> {
    if field.r() != 3 {
        return Err(Error::BadParameter(
            "cubic_quotient_42 is specific to r = 3".into(),
        ));
    }
    let n = 4u32;
    let wb = w_basis(field, n, 2)?;
    let csr = decompose_csr(field, n, 2)?;
    assert_eq!(csr.modular.lprime, Some(1));
    // S basis: F c̄_i for c̄_i = c_i − s^{n−i} c_n, i = 1, 2, 3
    let b1 = enumerate_basis(n, 1, 3);
    let f1 = op_f(field, n, 1);
    let cbar = |i: u32| -> Vec<CycNum> {
        let mut v = vec![field.zero(); b1.dim()];
        let mut ci = vec![0u32; n as usize];
        ci[(i - 1) as usize] = 1;
        let mut cn = vec![0u32; n as usize];
        cn[(n - 1) as usize] = 1;
        v[b1.index_of(&Composition(ci))] = field.one();
        v[b1.index_of(&Composition(cn))] = -&field.s_pow(n as i64 - i as i64);
        v
    };
    let f_cbar: Vec<Vec<CycNum>> = (1..=3).map(|i| f1.apply(&cbar(i))).collect();

    // g vectors in W coordinates (pair order (1,2),(1,3),(1,4),(2,3),(2,4),(3,4))
    let pairs = pair_basis(n);
    let wvec = |coeffs: &[(u32, u32, CycNum)]| -> Vec<CycNum> {
        let mut acc = vec![field.zero(); wb.dense_vectors()[0].len()];
        for (i, j, c) in coeffs {
            let pos = pairs.iter().position(|&p| p == (*i, *j)).unwrap();
            let v = &wb.dense_vectors()[pos];
            for (a, b) in acc.iter_mut().zip(v) {
                *a = &*a + &(c * b);
            }
        }
        acc
    };
    let q = |k: i64| field.q_pow(k);
    let quarter = field.from_rational(BigRational::new((-1).into(), 4.into()));
    let g1 = wvec(&[
        (1, 2, field.one()),
        (1, 3, -&q(2)),
        (2, 4, q(1)),
        (3, 4, field.one()),
    ]);
    let mq2_4 = &quarter * &q(2);
    let two = field.from_i64(2);
    let g2 = wvec(&[
        (1, 2, mq2_4.clone()),
        (1, 3, &mq2_4 * &two),
        (1, 4, mq2_4.clone()),
        (2, 3, mq2_4.clone()),
        (2, 4, &mq2_4 * &two),
        (3, 4, mq2_4.clone()),
    ]);
    let g3 = wvec(&[
        (1, 3, -&q(1)),
        (1, 4, -&field.one()),
        (2, 3, -&field.one()),
        (2, 4, &q(1) - &field.one()),
    ]);

    // mixed basis {g1, g2, g3, F c̄_1, F c̄_2, F c̄_3} of W_{4,2}
    let mut cols = vec![g1, g2, g3];
    cols.extend(f_cbar.iter().cloned());
    let span = Mat::from_columns(&cols, &field.zero());
    let mut matrices = Vec::with_capacity(3);
    for i in 1..=3u32 {
        let sigma = crate::braid::sigma_matrix(field, n, 2, i, false);
        let images: Vec<Vec<CycNum>> = cols.iter().map(|v| sigma.apply(v)).collect();
        let img = Mat::from_columns(&images, &field.zero());
        let coords = coords_in_span(&span, &img, "sigma on the mixed g/S basis");
        // quotient block: project S coordinates away
        matrices.push(Mat::from_fn(3, 3, |a, b| coords[(a, b)].clone()));
    }
    let expect = cubic_rep(&field.q_pow(5), &field.one(), &field.one());
    let matches = matrices[0] == expect[0] && matrices[1] == expect[1] && matrices[2] == expect[2];
    let matrices: [Mat<CycNum>; 3] = [
        matrices[0].clone(),
        matrices[1].clone(),
        matrices[2].clone(),
    ];
    Ok(Quotient42 {
        matrices,
        matches_cubic_rep: matches,
    })
}

/// Action of σ_i on the S part for the r = 3, n = 4 cell, as a matrix in the
/// basis {F c̄_1, F c̄_2, F c̄_3}; used to verify the closed five-case form.
pub fn s_part_action_42(field: &CycField, i: u32) -> Result<Mat<CycNum>> {
    if field.r() != 3 {
        return Err(Error::BadParameter("specific to r = 3".into()));
    }
    let n = 4u32;
    let b1 = enumerate_basis(n, 1, 3);
    let f1 = op_f(field, n, 1);
    let cbar = |k: u32| -> Vec<CycNum> {
        let mut v = vec![field.zero(); b1.dim()];
        let mut ck = vec![0u32; n as usize];
        ck[(k - 1) as usize] = 1;
        let mut cn = vec![0u32; n as usize];
        cn[(n - 1) as usize] = 1;
        v[b1.index_of(&Composition(ck))] = field.one();
        v[b1.index_of(&Composition(cn))] = -&field.s_pow(n as i64 - k as i64);
        v
    };
    let cols: Vec<Vec<CycNum>> = (1..=3).map(|k| f1.apply(&cbar(k))).collect();
    let span = Mat::from_columns(&cols, &field.zero());
    let sigma = crate::braid::sigma_matrix(field, n, 2, i, false);
    let images: Vec<Vec<CycNum>> = cols.iter().map(|v| sigma.apply(v)).collect();
    let img = Mat::from_columns(&images, &field.zero());
    Ok(coords_in_span(&span, &img, "sigma on S_{4,2}"))
}

/// RREF echelonization helper re-exported for reports.
pub fn echelon(m: &Mat<CycNum>) -> Mat<CycNum> {
    let mut work = m.clone();
    let order: Vec<usize> = (0..m.cols()).collect();
    rref_in(&mut work, &order);
    work
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::make_field;
    use crate::laurent::LPoly3;
    use crate::lawrence::braid_on_w;

    #[test]
    fn minpoly_of_identity() {
        let field = make_field(4).unwrap();
        let id = Mat::identity(3, &field.zero());
        let p = minimal_polynomial(&id);
        // X − 1
        assert_eq!(p.len(), 2);
        assert_eq!(p[0], -&field.one());
        assert!(p[1].is_one());
    }

    #[test]
    fn minpoly_on_w32_r4() {
        // eigenvalues 1 and q^6 with multiplicities 1 and 2
        let field = make_field(4).unwrap();
        let m = braid_on_w(&field, 3, 2, 1).unwrap();
        let p = minimal_polynomial(&m);
        // trace pins the multiplicities: 1 + 2 q^6
        let trace = &(&m[(0, 0)] + &m[(1, 1)]) + &m[(2, 2)];
        let expect = &field.one() + &(&field.from_i64(2) * &field.q_pow(6));
        assert_eq!(trace, expect);
        // p has roots exactly {1, q^6}: p(1) = 0 = p(q^6), p(x) != 0 otherwise
        let at = |x: &CycNum| -> CycNum {
            let mut acc = field.zero();
            for c in p.iter().rev() {
                acc = &(&acc * x) + c;
            }
            acc
        };
        assert!(at(&field.one()).is_zero());
        assert!(at(&field.q_pow(6)).is_zero());
        assert!(!at(&field.q_pow(2)).is_zero());
    }

    #[test]
    fn minpoly_cubic_on_extensions() {
        // p(σ_1) = 0 exactly on N_{4,2,0} at r = 5
        let field = make_field(5).unwrap();
        let rep = generator_order(&field, 4, ExtRep::N20).unwrap();
        assert!(rep.annihilated_by_cubic);
        assert!(rep.eigenvalues_distinct);
        assert_eq!(rep.order, Some(10)); // divides 2r = 10
                                         // and the minimal polynomial IS the cubic there
        let nb = basis_n20(&field, 4).unwrap();
        let m = nb.sigma(&field, 1);
        let p = minimal_polynomial(&m);
        let expect = cubic_min_poly(&field);
        assert_eq!(p.len(), expect.len());
        for (a, b) in p.iter().zip(&expect) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn cubic_annihilates_across_r_5_6_7() {
        // every (n, r) cell with n <= 5, r in {5, 6, 7} meeting a modular
        // condition: p(sigma_1) = 0 exactly
        for (n, r, rep) in [
            (4u32, 5u32, ExtRep::N20),
            (3, 5, ExtRep::N21),
            (5, 6, ExtRep::N20),
            (4, 6, ExtRep::N21),
            (5, 7, ExtRep::N21),
        ] {
            let field = make_field(r).unwrap();
            let report = generator_order(&field, n, rep).unwrap();
            assert!(report.annihilated_by_cubic, "n={n} r={r} {rep:?}");
            assert!(report.eigenvalues_distinct);
            let order = report.order.expect("finite order");
            assert_eq!((2 * r) % order, 0, "n={n} r={r}");
            if r % 2 == 0 {
                assert_eq!(r % order, 0, "sigma^r must be the identity for even r");
            }
        }
    }

    #[test]
    fn orders_divide_2r_and_r_when_even() {
        // r = 6 even, n = 5 ≡ -1 mod 6: order divides r
        let field6 = make_field(6).unwrap();
        let rep = generator_order(&field6, 5, ExtRep::N20).unwrap();
        let order = rep.order.expect("finite order");
        assert_eq!(12 % order, 0);
        assert_eq!(6 % order, 0, "order must divide r for even r");
        // r = 5 odd, n = 4: order divides 2r
        let field5 = make_field(5).unwrap();
        let rep = generator_order(&field5, 4, ExtRep::N20).unwrap();
        assert_eq!(10 % rep.order.unwrap(), 0);
        // eigenvalue distinctness boundary: r >= 5
        let field4 = make_field(4).unwrap();
        let one = field4.one();
        let e2 = field4.q_pow(4 + 2);
        let e3 = field4.q_pow(6);
        assert!(one != e2 && one != e3 && e2 == e3);
    }

    #[test]
    fn cubic_rep_relations_symbolic() {
        // x, y, z as independent symbols: reuse LPoly3 with x = q, y = s, z = t
        let x = LPoly3::q_pow(1);
        let y = LPoly3::s_pow(1);
        let z = LPoly3::t();
        let [m1, m2, m3] = cubic_rep(&x, &y, &z);
        assert!(m1 == m3);
        // braid relations of B_4
        let lhs = m1.mul(&m2).mul(&m1);
        let rhs = m2.mul(&m1).mul(&m2);
        assert!(lhs == rhs);
        let lhs = m2.mul(&m3).mul(&m2);
        let rhs = m3.mul(&m2).mul(&m3);
        assert!(lhs == rhs);
        assert!(m1.mul(&m3) == m3.mul(&m1));
        // cubic relation (σ − x)(σ − y)(σ − z) = 0
        for m in [&m1, &m2] {
            let id = Mat::identity(3, &LPoly3::one());
            let f1 = m.sub(&id.scale(&x));
            let f2 = m.sub(&id.scale(&y));
            let f3 = m.sub(&id.scale(&z));
            assert!(f1.mul(&f2).mul(&f3).is_zero_mat());
        }
        // fixture: σ_1 = [[z,0,0],[xz+y²,y,0],[y,1,x]]
        assert_eq!(m1[(0, 0)], z);
        assert_eq!(m1[(1, 0)], x.mul(&z).add(&y.mul(&y)));
        assert_eq!(m1[(2, 2)], x);
    }

    #[test]
    fn quotient_42_matches_specialized_cubic() {
        let field = make_field(3).unwrap();
        let rep = cubic_quotient_42(&field).unwrap();
        assert!(rep.matches_cubic_rep);
        // printed fixtures
        let q5 = field.q_pow(5);
        let m1 = &rep.matrices[0];
        assert!(m1[(0, 0)].is_one());
        assert_eq!(m1[(1, 0)], &field.one() + &q5);
        assert_eq!(m1[(2, 2)], q5);
        let m2 = &rep.matrices[1];
        assert_eq!(m2[(0, 0)], q5);
        assert_eq!(m2[(0, 1)], -&field.one());
        assert_eq!(m2[(1, 2)], -&(&field.one() + &q5));
        assert!(m2[(2, 2)].is_one());
        assert!(rep.matrices[0] == rep.matrices[2]);
    }

    #[test]
    fn s_part_five_case_action() {
        // σ_{n-1} F c̄_{n-1} = −s^{-2} F c̄_{n-1} at (r, n) = (3, 4)
        let field = make_field(3).unwrap();
        let m = s_part_action_42(&field, 3).unwrap();
        assert_eq!(m[(2, 2)], -&field.s_pow(-2));
        assert!(m[(0, 2)].is_zero() && m[(1, 2)].is_zero());
        // σ_i F c̄_i = (1 − s^{-2}) F c̄_i + s^{-1} F c̄_{i+1} for i ≠ n−1
        let m = s_part_action_42(&field, 1).unwrap();
        assert_eq!(m[(0, 0)], &field.one() - &field.s_pow(-2));
        assert_eq!(m[(1, 0)], field.s_pow(-1));
        // σ_i F c̄_{i+1} = s^{-1} F c̄_i
        assert_eq!(m[(0, 1)], field.s_pow(-1));
        assert!(m[(1, 1)].is_zero());
        // σ_{n-1} F c̄_j = F c̄_j − s^{n-j-1} F c̄_{n-1} for j ≠ n−1,
        // matching the b′ action under FE since F c̄_j = FE b′_j
        let m = s_part_action_42(&field, 3).unwrap();
        assert!(m[(0, 0)].is_one());
        assert_eq!(m[(2, 0)], -&field.s_pow(4 - 1 - 1));
    }
}
