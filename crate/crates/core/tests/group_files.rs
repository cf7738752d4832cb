use lamplighter::finite_group::{FiniteGroupTable, GroupError};
use lamplighter::load_group_file;

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn cyclic_six() {
    let g = load_group_file(data("cyclic6.table")).unwrap();
    assert_eq!(g.order(), 6);
    assert_eq!(g.lengths(), &[0, 1, 2, 3, 2, 1]);
    assert_eq!(g.render_word(&g.group_geodesic(5)), "A");
}

#[test]
fn klein_four() {
    let g = load_group_file(data("klein4.table")).unwrap();
    assert_eq!(g.lengths(), &[0, 1, 1, 2]);
    assert!(g.is_dead_end(3));
    assert_eq!(
        FiniteGroupTable::parse(&g.to_text()).unwrap().lengths(),
        g.lengths()
    );
}

#[test]
fn symmetric_three() {
    let g = load_group_file(data("s3.table")).unwrap();
    assert_eq!(g.order(), 6);
    let mut lengths = g.lengths().to_vec();
    lengths.sort();
    assert_eq!(lengths, vec![0, 1, 1, 2, 2, 3]);
    // the longest element is the only dead end
    let dead: Vec<usize> = (0..6).filter(|&x| g.is_dead_end(x)).collect();
    assert_eq!(dead.len(), 1);
    assert_eq!(g.length(dead[0]), 3);
    let s = g.parse_word("s").unwrap();
    let r = g.parse_word("r").unwrap();
    assert_ne!(g.eval(&s.concat(&r)), g.eval(&r.concat(&s)));
}

#[test]
fn missing_file() {
    assert!(matches!(
        load_group_file(data("nope.table")),
        Err(GroupError::Io(_))
    ));
}
