//! Sphere sizes of L_n by breadth-first search, with every distance
//! compared against the closed-form metric.
//!
//! cargo run --release --example ball_growth -- 3 9

use lamplighter::{oracle, LnParams};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map_or(2, |s| s.parse().expect("modulus"));
    let radius: u32 = args.next().map_or(10, |s| s.parse().expect("radius"));

    let params = LnParams::new(n).expect("n >= 2");
    let ball = oracle::enumerate_ball(&params, radius).expect("ball fits the cap");
    print!("{}", ball.sphere_tsv());
    let check = oracle::check_metric(&params, &ball);
    println!("{check}");
}
