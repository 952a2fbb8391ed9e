//! The quantum group operators E, F, K on a strong weight space, and the
//! commutator identity [E, F] = (K − K⁻¹)/(q − q⁻¹) checked exactly.

use rhorep::cyclo::make_field;
use rhorep::json::cyc_display;
use rhorep::linalg::Mat;
use rhorep::weightspace::{enumerate_basis, op_e, op_f, op_k};

fn main() {
    let r = 4;
    let (n, l) = (3u32, 2u32);
    let field = make_field(r).unwrap();
    let basis = enumerate_basis(n, l, r);
    println!("V_{{{n},{l}}} at r = {r}: dim {}", basis.dim());
    println!(
        "basis (ascending lex): {:?}",
        basis.order.iter().map(|c| c.0.clone()).collect::<Vec<_>>()
    );
    println!("strong weight: {}", basis.strong_weight());

    let e = op_e(&field, n, l);
    println!(
        "\nE maps V_{{{n},{l}}} -> V_{{{n},{}}}, matrix {}x{}",
        l - 1,
        e.rows(),
        e.cols()
    );
    let f = op_f(&field, n, l);
    println!(
        "F maps V_{{{n},{l}}} -> V_{{{n},{}}}, matrix {}x{}",
        l + 1,
        f.rows(),
        f.cols()
    );
    println!("K acts by the scalar {}", cyc_display(&op_k(&field, n, l)));

    // [E, F] = (K - K^{-1})/(q - q^{-1}) as matrices on V_{n,l}
    let ef = op_e(&field, n, l + 1).mul(&op_f(&field, n, l));
    let fe = op_f(&field, n, l - 1).mul(&op_e(&field, n, l));
    let k = op_k(&field, n, l);
    let scalar = &(&k - &k.inv().unwrap()) * &field.qnum(1).inv().unwrap();
    let expect = Mat::identity(basis.dim(), &field.zero()).scale(&scalar);
    assert!(ef.sub(&fe) == expect);
    println!("\n[E, F] = (K - K^-1)/(q - q^-1)  ... verified exactly");
}
