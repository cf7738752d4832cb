//! G wr Z for a few finite groups: lengths, geodesics, and lifted dead ends.

use std::sync::Arc;

use lamplighter::{cyclic_group, oracle, WreathProduct};

fn main() {
    for k in [5, 6] {
        let w = WreathProduct::new(Arc::new(cyclic_group(k).unwrap()));
        let dead = (0..k)
            .filter(|&x| w.group().is_dead_end(x))
            .collect::<Vec<_>>();
        println!("Z_{k} dead ends {dead:?}");
        for &a in &dead {
            for m in 1..=2 {
                let e = w.lift_dead_end_family(a, m).unwrap();
                let depth = oracle::escape_depth(&w, &e, 8).unwrap();
                println!("  a={a} m={m} {e} length={} depth={depth}", w.length(&e));
            }
        }
    }

    let z6 = WreathProduct::new(Arc::new(cyclic_group(6).unwrap()));
    let e = z6.eval(&z6.parse_word("a^3 t a T^2 A").unwrap());
    println!("{e} length={}", z6.length(&e));
    println!("  geodesic {}", z6.render_word(&z6.emit_geodesic(&e)));
    let check = oracle::verify_metric_formula(&z6, 6).unwrap();
    println!("  {check}");
    assert!(check.passed());
}
