//! The full twist θ_n = δ_n^n on the dominant space N_{n,l}: exact word
//! evaluation against the closed formula
//! θ_n = q^{2l(n+l−1)} (Id + s^n q^{1−l−l'} (l−l') {1}²/{l−l'} · FE),
//! and the Jordan structure that makes the center act faithfully.

use rhorep::cyclo::make_field;
use rhorep::dominant::full_twist_check;

fn main() {
    for (n, l, r) in [
        (3u32, 2u32, 4u32),
        (4, 2, 3),
        (3, 1, 3),
        (4, 2, 5),
        (2, 2, 5),
        (3, 3, 4),
    ] {
        let field = make_field(r).unwrap();
        let rep = full_twist_check(&field, n, l).unwrap();
        println!(
            "theta_{n} on N_{{{n},{l}}} at r = {r}:  scalar q^{}  l' = {:?}",
            rep.scalar_exponent, rep.modular.lprime
        );
        println!(
            "  matches formula: {}   nilpotent part: {} (rank {}, square zero: {})",
            rep.matches_formula,
            if rep.nilpotent_nonzero {
                "nonzero"
            } else {
                "zero"
            },
            rep.nilpotent_rank,
            rep.nilpotent_square_zero,
        );
        assert!(rep.matches_formula);
        // a nonzero square-zero block appears exactly when the extension exists
        assert_eq!(rep.nilpotent_nonzero, rep.modular.lprime.is_some());
    }
    println!("\nthe center acts with infinite order whenever l' exists — the");
    println!("scalar is a root of unity but the nilpotent correction is not torsion");
}
