//! Canonical geodesic and every enumerated variant, checked by evaluation.

use lamplighter::{metric, LnParams};

fn main() {
    let l2 = LnParams::new(2).unwrap();
    let l5 = LnParams::new(5).unwrap();
    let cases = [
        (l2, l2.element([(1, 1), (-1, 1)], 0)),
        (l2, l2.element([(0, 1), (2, 1)], 1)),
        (l5, l5.element([(0, 2), (-1, 1)], 1)),
    ];
    for (params, e) in cases {
        let length = metric::word_length(&e);
        println!("L_{} {e}  length={length}", params.n());
        println!("  canonical  {}", metric::emit_geodesic(&e));
        for w in metric::enumerate_geodesics(&e) {
            assert_eq!(params.eval(&w), e);
            assert_eq!(w.len() as u64, length);
            println!("  variant    {w}");
        }
    }
}
