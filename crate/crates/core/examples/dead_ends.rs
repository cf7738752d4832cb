//! The dead-end family d_m: every lamp of [-m, m] set to a^h.

use lamplighter::{phenomena, LnParams};

fn main() {
    for n in [2, 3, 4, 5] {
        let params = LnParams::new(n).unwrap();
        for m in 1..=3 {
            let d = phenomena::dead_end_family_d_m(params, m).unwrap();
            let report = phenomena::check_dead_end(&params, &d, 6);
            assert_eq!(report.length, phenomena::dead_end_family_length(params, m));
            println!("family=d_m n={n} m={m} {}", report.summary());
        }
    }
}
