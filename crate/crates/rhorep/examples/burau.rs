//! The unreduced Burau family on the basis ĉ_i = s^i c_i, its conjugacy
//! with the braid action on V_{n,1} at t = q², and the l = 1 extension:
//! N_{n,1,0} = V_{n,1} exactly when n ≡ 0 mod r.

use rhorep::braid::sigma_matrix;
use rhorep::cyclo::make_field;
use rhorep::dominant::n_space;
use rhorep::laurent::LPoly3;
use rhorep::lawrence::burau_generators;
use rhorep::linalg::Mat;
use rhorep::weightspace::{enumerate_basis, Composition};

fn main() {
    // generic Burau over Z[s^{±1}] at t = s^{-2}
    let gens = burau_generators(4, &LPoly3::mono(0, -2, 0, 1));
    println!("generic unreduced Burau, n = 4, t = s^-2:");
    for (k, g) in gens.iter().enumerate() {
        println!(
            "  sigma_{}: {}x{} over Z[q^±, s^±][t]",
            k + 1,
            g.rows(),
            g.cols()
        );
    }
    let lhs = gens[0].mul(&gens[1]).mul(&gens[0]);
    let rhs = gens[1].mul(&gens[0]).mul(&gens[1]);
    assert!(lhs == rhs);
    println!("braid relation sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2  ... verified");

    // conjugacy with V_{n,1} at the root of unity, through chat_i = s^i c_i
    let (n, r) = (4u32, 4u32);
    let field = make_field(r).unwrap();
    let t = field.q_pow(2);
    let burau = burau_generators(n, &t);
    let basis = enumerate_basis(n, 1, r);
    let mut change = Mat::zeros(basis.dim(), n as usize, &field.zero());
    for j in 1..=n {
        let mut comp = vec![0u32; n as usize];
        comp[(j - 1) as usize] = 1;
        change[(basis.index_of(&Composition(comp)), (j - 1) as usize)] = field.s_pow(j as i64);
    }
    for i in 1..n {
        let sigma = sigma_matrix(&field, n, 1, i, false);
        assert!(sigma.mul(&change) == change.mul(&burau[(i - 1) as usize]));
    }
    println!("sigma on V_{{4,1}} at r = 4 is conjugate to Burau at t = q^2  ... verified");

    // the l = 1 dominant space: full V_{n,1} exactly on the modular condition
    for (n, r) in [(3u32, 3u32), (4, 4), (3, 4), (4, 3)] {
        let field = make_field(r).unwrap();
        let nb = n_space(&field, n, 1).unwrap();
        let hit = n % r == 0;
        println!(
            "N_{{{n},1}} at r = {r}: dim {} ({})",
            nb.dim(),
            if hit {
                "= dim V, Burau extension"
            } else {
                "= n-1, reduced Burau only"
            }
        );
        assert_eq!(nb.dim(), if hit { n as usize } else { (n - 1) as usize });
    }
}
