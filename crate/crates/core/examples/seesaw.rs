//! Seesaw words w_n: pushing t or t^-1 keeps shortening the word for n
//! steps, while the two descending paths drift apart.

use lamplighter::{metric, phenomena, GenLetter, LnParams};

fn main() {
    let l2 = LnParams::new(2).unwrap();
    for n in 1..=5 {
        let w = phenomena::seesaw_family_w_n(l2, n, 1, 1).unwrap();
        let report = phenomena::check_seesaw(&l2, &w, GenLetter::T, n as u32);
        println!("family=w_n n={n} {report}");
    }

    let w = phenomena::seesaw_family_w_n(l2, 3, 1, 1).unwrap();
    let (mut fwd, mut bwd) = (w.clone(), w.clone());
    for l in 1..=3 {
        fwd = fwd.apply(GenLetter::T);
        bwd = bwd.apply(GenLetter::T_INV);
        println!(
            "l={l} |w t^l|={} |w t^-l|={} cursor gap={}",
            metric::word_length(&fwd),
            metric::word_length(&bwd),
            fwd.cursor() - bwd.cursor()
        );
    }
}
