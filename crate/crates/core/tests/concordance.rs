//! Brute-force commutant dimensions against the fusion count and the TL image rank.

use dn_core::centralizer_oracle::{commutant_dimension, cross_validate};
use dn_core::QContext;

#[test]
fn oracle_agrees_for_n3_n5() {
    for n in [3u32, 5] {
        let ctx = QContext::new(n).unwrap();
        let (rows, rep) = cross_validate(&ctx, 0, 5, 5).unwrap();
        assert!(rep.all_pass(true), "{}", rep.to_ascii());
        let dims: Vec<usize> = rows.iter().map(|c| c.oracle_dim).collect();
        let expected: &[usize] = if n == 3 { &[1, 2, 5, 14, 45] } else { &[1, 2, 5, 14, 42] };
        assert_eq!(dims, expected);
    }
}

#[test]
fn oracle_n2_matches_catalan_up_to_two() {
    let ctx = QContext::new(2).unwrap();
    let (rows, rep) = cross_validate(&ctx, 1, 4, 5).unwrap();
    assert!(rep.all_pass(true), "{}", rep.to_ascii());
    assert_eq!(rows[1].oracle_dim, 2);
}

/// Decides between summing (s+p)² over all indices and over simple-indexed ones only.
#[test]
fn projective_without_simple_contributes_p_squared() {
    let ctx = QContext::new(3).unwrap();
    assert_eq!(commutant_dimension(&ctx, 0, 6, 6).unwrap(), 162);
    let (rows, rep) = cross_validate(&ctx, 0, 6, 6).unwrap();
    assert!(rep.all_pass(true), "{}", rep.to_ascii());
    assert_eq!(rows[5].fusion_dim, Some(162));
}
