//! Generation of invariant monomials by a candidate generating set.

use kummer_verify::quotient::{degree_three_indices, verify_invariant_generation, z7_invariant_generators, Grading};

fn main() {
    let z3 = Grading { modulus: 3, weights: vec![1, 1, 1] };
    let gens: Vec<Vec<u32>> = degree_three_indices().iter().map(|n| n.to_vec()).collect();
    println!("Z3, D = 12: {:?}", verify_invariant_generation(&z3, &gens, 12));

    let z7 = z7_invariant_generators();
    println!("{} box monomials", z7.count());
    let sigma = Grading { modulus: 7, weights: vec![1, 2, 3] };
    println!("Z7, D = 14: {:?}", verify_invariant_generation(&sigma, &z7.sigma_vectors(), 14));

    // dropping sigma_2^7 leaves a gap in degree 7
    let partial: Vec<Vec<u32>> = z7.sigma_vectors().into_iter().filter(|v| v != &vec![0, 7, 0]).collect();
    println!("without sigma2^7: {:?}", verify_invariant_generation(&sigma, &partial, 14).counterexample);
}
