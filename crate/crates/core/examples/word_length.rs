//! Word length in L_n from the closed-form metric, with both normal forms.
//!
//! cargo run --example word_length -- 3 "t a^2 T T a t"

use lamplighter::{metric, LnParams, Side};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map_or(2, |s| s.parse().expect("modulus"));
    let text = args.next().unwrap_or_else(|| "t a T T a t".to_string());

    let params = LnParams::new(n).expect("n >= 2");
    let word = params.parse(&text).expect("word");
    let e = params.eval(&word);

    println!("word     {word}");
    println!("element  {e}");
    println!("length   {}", metric::word_length(&e));
    for side in [Side::RightFirst, Side::LeftFirst] {
        println!("{}", metric::normal_form(&e, side));
    }
}
