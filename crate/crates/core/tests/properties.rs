mod common;

use common::*;

#[test]
fn groebner_basis_ignores_generator_order_and_scaling() {
    gb_canonicity(100, 11).unwrap();
}

#[test]
fn hilbert_function_matches_macaulay_matrices() {
    hilbert_function_oracle(100, 12).unwrap();
}

#[test]
fn membership_matches_macaulay_matrices() {
    membership_oracle(100, 13).unwrap();
}

#[test]
fn product_intersection_sum_quotient_containments() {
    ideal_containments(40, 14).unwrap();
}

#[test]
fn euler_identity_for_forms() {
    euler_identity(100, 15).unwrap();
}

#[test]
fn five_point_verdicts_survive_coordinate_changes() {
    projective_invariance(5, 16).unwrap();
}
