//! Loading a multiplication table and walking its Cayley graph.
//!
//! cargo run --example group_tables -- crates/core/data/s3.table

use lamplighter::load_group_file;

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/s3.table").to_string());
    let group = load_group_file(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    println!("{group}");
    for x in 0..group.order() {
        let geodesics: Vec<String> = group
            .all_geodesics(x)
            .iter()
            .map(|w| group.render_word(w))
            .collect();
        println!(
            "{x}: length={} dead_end={} geodesics={}",
            group.length(x),
            group.is_dead_end(x),
            geodesics.join(" | ")
        );
    }
}
