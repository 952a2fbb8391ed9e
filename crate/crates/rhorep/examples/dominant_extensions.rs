//! The dominant spaces N_{n,l} = ker((FE)²) ∩ V_{n,l}, the C/S/R structure
//! of W_{n,l}, and the explicit l = 2 extensions with their canonical bases.

use rhorep::cyclo::make_field;
use rhorep::dominant::{
    basis_n20, basis_n21, decompose_csr, modular_data, n_space, quotient_matches_w_lprime,
};
use rhorep::json::cyc_display;

fn main() {
    println!("modular data and N dimensions:");
    for (n, l, r) in [(3u32, 2u32, 4u32), (4, 2, 3), (2, 2, 5), (4, 2, 5)] {
        let md = modular_data(n, l, r);
        let field = make_field(r).unwrap();
        let nb = n_space(&field, n, l).unwrap();
        println!(
            "  (n,l,r) = ({n},{l},{r}): j = {}, l' = {:?}, dim N = {} = {} + {}",
            md.j,
            md.lprime,
            nb.dim(),
            nb.w_part.dim(),
            nb.h_part.len()
        );
    }

    println!("\nC/S/R structure of W_{{n,l}}:");
    for (n, l, r) in [(3u32, 2u32, 4u32), (3, 1, 4), (3, 1, 5), (2, 2, 3)] {
        let field = make_field(r).unwrap();
        let rep = decompose_csr(&field, n, l).unwrap();
        println!(
            "  W_{{{n},{l}}} at r = {r}: case {:?}, (dim C, dim S, dim R) = ({}, {}, {})",
            rep.case, rep.dim_c, rep.dim_s, rep.dim_r
        );
    }

    // N_{3,2,0} at r = 4 with the head vector b = b_1 + b_2 + b_3
    let field = make_field(4).unwrap();
    let nb = basis_n20(&field, 3).unwrap();
    println!("\nN_{{3,2,0}} at r = 4, basis [b, w_12, w_13, w_23]; sigma_1:");
    let m = nb.sigma(&field, 1);
    for row in 0..m.rows() {
        let cells: Vec<String> = (0..m.cols())
            .map(|col| cyc_display(&m[(row, col)]))
            .collect();
        println!("  [{}]", cells.join(", "));
    }
    assert!(quotient_matches_w_lprime(&field, &nb).unwrap());
    println!("quotient action on N/W = trivial representation W_{{3,0}}  ... verified");

    // N_{4,2,1} at r = 3 with head vectors b'_1, b'_2, b'_3
    let field3 = make_field(3).unwrap();
    let nb = basis_n21(&field3, 4).unwrap();
    println!(
        "\nN_{{4,2,1}} at r = 3: dim {} = {} + {}, quotient = specialized Burau W_{{4,1}}",
        nb.dim(),
        nb.h_part.len(),
        nb.w_part.dim()
    );
    assert!(quotient_matches_w_lprime(&field3, &nb).unwrap());
    println!("quotient action on N/W = braid action on W_{{4,1}}  ... verified");
}
