//! Two points at distance 2 on the sphere of radius 4n+1 that can only be
//! joined inside the ball by a path of length at least 8n+2.
//!
//! cargo run --release --example convexity -- 3

use lamplighter::{oracle, phenomena, LnParams};

fn main() {
    let max_n: i64 = std::env::args().nth(1).map_or(2, |s| s.parse().expect("n"));
    let l2 = LnParams::new(2).unwrap();
    for n in 1..=max_n {
        match phenomena::convexity_witness(l2, n, true, oracle::DEFAULT_CAP) {
            Ok(report) => println!("{report}"),
            Err(e) => println!("witness={n} {e}"),
        }
        let origin = phenomena::check_origin_bound(l2, n, 1000, 0x5eed).unwrap();
        println!("  origin {origin}");
    }
}
