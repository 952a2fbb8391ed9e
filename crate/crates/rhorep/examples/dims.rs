//! Dimension tables: dim V_{n,l} = kappa(l, r, n), the A/B split, and
//! dim W_{n,l} = C(n+l-2, l) checked by exact rank.

use rhorep::cyclo::make_field;
use rhorep::lawrence::w_dim_by_rank;
use rhorep::weightspace::{ab_split, binom, enumerate_basis, kappa};

fn main() {
    for r in [3u32, 4, 5] {
        let field = make_field(r).unwrap();
        println!("r = {r}");
        println!(
            "{:>3} {:>3} {:>8} {:>6} {:>6} {:>6} {:>10}",
            "n", "l", "kappa", "dimA", "dimB", "dimW", "C(n+l-2,l)"
        );
        for n in 2..=5u32 {
            for l in 0..r.min(4) {
                let basis = enumerate_basis(n, l, r);
                let (a, b) = ab_split(&basis);
                let w = w_dim_by_rank(&field, n, l);
                println!(
                    "{:>3} {:>3} {:>8} {:>6} {:>6} {:>6} {:>10}",
                    n,
                    l,
                    kappa(l, r, n),
                    a.len(),
                    b.len(),
                    w,
                    binom((n + l - 2) as u64, l as u64),
                );
            }
        }
        println!();
    }
}
