//! The R-matrix action on pairs, braid generators on V_{n,l}, the braid
//! relations, and evaluation of braid words including the full twist.

use rhorep::braid::{
    eval_word, full_twist_word, half_twist_word, rhat_table, sigma_matrix, BraidWord,
};
use rhorep::cyclo::make_field;
use rhorep::json::cyc_display;

fn main() {
    let r = 3;
    let field = make_field(r).unwrap();

    println!("R-hat on pairs of Steinberg basis vectors, r = {r}:");
    let table = rhat_table(&field);
    for (a, b) in [(0u32, 0u32), (0, 1), (1, 0), (1, 1)] {
        let terms: Vec<String> = table
            .terms(a, b)
            .iter()
            .map(|(x, y, c)| format!("({}) u_{x}⊗u_{y}", cyc_display(c)))
            .collect();
        println!("  R(u_{a}⊗u_{b}) = {}", terms.join(" + "));
    }

    let (n, l) = (4u32, 2u32);
    println!("\nbraid relations on V_{{{n},{l}}}:");
    for i in 1..(n - 1) {
        let a = sigma_matrix(&field, n, l, i, false);
        let b = sigma_matrix(&field, n, l, i + 1, false);
        let holds = a.mul(&b).mul(&a) == b.mul(&a).mul(&b);
        println!(
            "  sigma_{i} sigma_{} sigma_{i} = sigma_{} sigma_{i} sigma_{}: {holds}",
            i + 1,
            i + 1,
            i + 1
        );
        assert!(holds);
    }

    let word = BraidWord::parse(n, "1,2,-1,3").unwrap();
    let m = eval_word(&field, &word, l);
    println!(
        "\neval of word {:?}: {}x{} matrix over Q(zeta_{})",
        word.letters,
        m.rows(),
        m.cols(),
        4 * r
    );

    // the full twist is central: it commutes with every generator
    let theta = eval_word(&field, &full_twist_word(n), l);
    for i in 1..n {
        let s = sigma_matrix(&field, n, l, i, false);
        assert!(theta.mul(&s) == s.mul(&theta));
    }
    println!("full twist delta_{n}^{n} commutes with every generator  ... verified");

    // and equals the square of the half twist
    let half = half_twist_word(n);
    assert!(eval_word(&field, &half.repeat(2), l) == theta);
    println!("Delta_{n}^2 = delta_{n}^{n}  ... verified");
}
