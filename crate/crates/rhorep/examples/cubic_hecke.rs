//! The cubic Hecke connection: the 3-dimensional H_4 representation with
//! parameters (x, y, z), and the exact match of the r = 3, n = 4 quotient
//! W_{4,2}/S_{4,2} with its specialization at x = q^5, y = z = 1.

use rhorep::cyclo::make_field;
use rhorep::hecke::{cubic_quotient_42, cubic_rep, generator_order, ExtRep};
use rhorep::json::cyc_display;
use rhorep::laurent::LPoly3;
use rhorep::linalg::Mat;

fn main() {
    // symbolic parameters: braid and cubic relations
    let x = LPoly3::q_pow(1);
    let y = LPoly3::s_pow(1);
    let z = LPoly3::t();
    let [m1, m2, _m3] = cubic_rep(&x, &y, &z);
    let id = Mat::identity(3, &LPoly3::one());
    let cubic = m1
        .sub(&id.scale(&x))
        .mul(&m1.sub(&id.scale(&y)))
        .mul(&m1.sub(&id.scale(&z)));
    assert!(cubic.is_zero_mat());
    let lhs = m1.mul(&m2).mul(&m1);
    let rhs = m2.mul(&m1).mul(&m2);
    assert!(lhs == rhs);
    println!("symbolic cubic representation of H_4: braid + cubic relations  ... verified");

    // the quotient at r = 3, n = 4
    let field = make_field(3).unwrap();
    let rep = cubic_quotient_42(&field).unwrap();
    println!("\nW_{{4,2}}/S_{{4,2}} at r = 3 in the g-basis:");
    for (k, m) in rep.matrices.iter().enumerate() {
        println!("  sigma_{}:", k + 1);
        for row in 0..3 {
            let cells: Vec<String> = (0..3).map(|col| cyc_display(&m[(row, col)])).collect();
            println!("    [{}]", cells.join(", "));
        }
    }
    println!("matches cubic_rep(q^5, 1, 1): {}", rep.matches_cubic_rep);
    assert!(rep.matches_cubic_rep);

    // minimal polynomial and generator orders on the l = 2 extensions
    for (n, r, rep) in [(4u32, 5u32, ExtRep::N20), (4, 6, ExtRep::N21)] {
        let field = make_field(r).unwrap();
        let report = generator_order(&field, n, rep).unwrap();
        println!(
            "\nsigma_1 on N_{{{n},2,·}} at r = {r}: order {:?}, killed by (X-1)(X+s^-2)(X-s^-4 q^2): {}",
            report.order, report.annihilated_by_cubic
        );
        assert!(report.annihilated_by_cubic);
    }
}
