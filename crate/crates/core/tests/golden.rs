//! Bratteli rows and the Catalan/centralizer table for n = 5, V = V(2,0).

use dn_core::fusion::{bratteli_ascii, bratteli_rows, table_ascii, table_one, ModuleLabel};

const ROWS_N5: &str = "\
Row  1: (2,0)_1
Row  2: (3,0)_1 (1,1)_1
Row  3: (4,0)_1 (2,1)_2
Row  4: (5,0)_1 (3,1)_3 (1,2)_2
Row  5: P(4,1)_1 (4,1)_3 (2,2)_5
Row  6: P(3,2)_1 (5,1)_5 (3,2)_8 (1,3)_5
Row  7: P(2,3)_1 P(4,2)_6 (4,2)_8 (2,3)_13
Row  8: P(1,4)_1 P(3,3)_7 (5,2)_20 (3,3)_21 (1,4)_13
Row  9: (5,5)_2 P(2,4)_8 P(4,3)_27 (4,3)_21 (2,4)_34
Row 10: P(4,6)_2 P(1,5)_8 P(3,4)_35 (5,3)_75 (3,4)_55 (1,5)_34
Row 11: P(3,7)_2 (5,6)_20 P(2,5)_43 P(4,4)_110 (4,4)_55 (2,5)_89
";

#[test]
fn bratteli_rows_n5() {
    let rows = bratteli_rows(5, 0, 11).unwrap();
    assert_eq!(bratteli_ascii(&rows), ROWS_N5);
}

#[test]
fn bratteli_spot_values() {
    let rows = bratteli_rows(5, 0, 11).unwrap();
    let s = |l, r| ModuleLabel::simple(5, l, r).unwrap();
    let p = |l, r| ModuleLabel::proj(5, l, r).unwrap();
    assert_eq!(rows[5].mult(&s(5, 1)), 5);
    assert_eq!(rows[7].mult(&s(5, 2)), 20);
    assert_eq!(rows[8].mult(&p(4, 3)), 27);
    assert_eq!(rows[9].mult(&p(3, 4)), 35);
    assert_eq!(rows[10].mult(&p(4, 4)), 110);
    assert_eq!(rows[10].mult(&s(2, 5)), 89);
}

#[test]
fn table_columns_n5() {
    let rows = table_one(5, 11).unwrap();
    let catalan: Vec<u128> = rows.iter().map(|r| r.catalan).collect();
    let dim: Vec<u128> = rows.iter().map(|r| r.dim_end).collect();
    assert_eq!(catalan, [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786]);
    assert_eq!(dim, [1, 2, 5, 14, 42, 132, 429, 1430, 4865, 16846, 59346]);
    let first_cross = rows.iter().find(|r| r.cross_term > 0).unwrap();
    assert_eq!((first_cross.k, first_cross.cross_term), (10, 64));
    let full: Vec<u128> = rows.iter().map(|r| r.dim_end_all_indices).collect();
    assert_eq!(full[9..], [16850, 59350]);
}

#[test]
fn table_text_rows() {
    let text = table_ascii(&table_one(5, 11).unwrap());
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 13);
    assert_eq!(
        lines[11],
        "| 10 | 16796 |     2^2+8^2+(35)^2 |   (75)^2+(90)^2+(42)^2 |   2*2*8+2*8*2 |   16846 |"
    );
    assert_eq!(
        lines[12],
        "| 11 | 58786 | 2^2+(43)^2+(110)^2 | (20)^2+(165)^2+(132)^2 | 2*2*43+2*43*2 |   59346 |"
    );
}
