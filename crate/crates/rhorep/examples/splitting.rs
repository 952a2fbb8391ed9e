//! Split certification: the specialized Ñ_{n,2,0}(q, s, t) with
//! t = s^{-3}(1 - q²) admits an equivariant section exactly when
//! n !≡ -1 mod r, and the S ⊕ R decomposition of W_{3,2} at r = 4 is not a
//! module decomposition. Restricting N_{n,2,0} to B_{n-1} splits again.

use rhorep::cyclo::make_field;
use rhorep::dominant::{
    find_equivariant_section, n20_closed_form, restriction_check, sr_split_check, SectionResult,
};
use rhorep::json::cyc_display;

fn main() {
    println!("sections of the specialized N~_{{n,2,0}}(q, s, s^-3(1-q^2)):");
    for r in [3u32, 4, 5] {
        let field = make_field(r).unwrap();
        let t = &field.s_pow(-3) * &(&field.one() - &field.q_pow(2));
        for n in 2..=6u32 {
            let gens = n20_closed_form(&field, n, &t);
            let verdict = match find_equivariant_section(&gens, 1).unwrap() {
                SectionResult::Section(lambda) => {
                    format!(
                        "splits; lambda_{{n-1,n}} = {}",
                        cyc_display(&lambda[(lambda.rows() - 1, 0)])
                    )
                }
                SectionResult::NoSection {
                    rank_coefficient,
                    rank_augmented,
                } => format!(
                    "does NOT split (rank {rank_coefficient} vs augmented {rank_augmented})"
                ),
            };
            let marker = if (n + 1) % r == 0 {
                "  <- n ≡ -1 mod r"
            } else {
                ""
            };
            println!("  n = {n}, r = {r}: {verdict}{marker}");
        }
    }

    // the S + R vector space decomposition of W_{3,2} at r = 4 is not
    // a B_3-module decomposition
    let field = make_field(4).unwrap();
    match sr_split_check(&field, 3, 4).unwrap() {
        SectionResult::NoSection { rank_coefficient, rank_augmented } => println!(
            "\nW_{{3,2}} = S ⊕ R at r = 4: no module splitting (rank {rank_coefficient} vs {rank_augmented})"
        ),
        SectionResult::Section(_) => unreachable!("S ⊕ R must not split at r = 4"),
    }

    // but the restriction of N_{3,2,0} to B_2 = <sigma_2> splits
    let rep = restriction_check(&field, 3).unwrap();
    println!(
        "\nrestriction of N_{{3,2,0}} to the subgroup <sigma_2, ..>: equivariant embedding {}, splits {}",
        rep.equivariant, rep.restriction_splits
    );
    assert!(rep.equivariant && rep.restriction_splits);
}
