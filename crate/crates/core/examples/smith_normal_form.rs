//! Smith normal form with its unimodular transforms.

use hasse_obstruction::abgrp::{smith_normal_form, IntMatrix};

fn main() {
    let m = IntMatrix::from_rows(3, &[vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&m);
    println!("M = {m:?}");
    println!("S = {:?}", snf.s);
    println!(
        "diagonal: {:?}",
        snf.diagonal().iter().map(|d| d.to_string()).collect::<Vec<_>>()
    );
    assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.s);
    println!(
        "U * M * V == S, det U = {}, det V = {}",
        snf.u.determinant(),
        snf.v.determinant()
    );
}
