//! Degrees of Kalman varieties of general tensors by two independent
//! routes: a division-free product of geometric sums and a Chern-series
//! coefficient extraction.

use kalman_varieties::degrees::singular_tuple_count;
use kalman_varieties::kalman::{general_degree_chern, general_degree_homogeneous};

fn main() {
    let shapes: [&[u32]; 5] = [&[4, 3], &[2, 2, 2], &[3, 2, 2], &[3, 3, 3], &[2, 2, 2, 2]];
    for dims in shapes {
        for d in 1..=dims[0] {
            let a = general_degree_homogeneous(d, dims).unwrap();
            let b = general_degree_chern(d, dims).unwrap();
            assert_eq!(a.degree, b.degree);
            println!("deg(d={}, dims={:?}) = {}  [target {}]", d, dims, a.degree, a.target);
        }
    }

    // at d = n_1 the degree is the generic number of singular tuples
    for dims in shapes {
        println!(
            "singular tuples of a generic {:?} tensor: {}",
            dims,
            singular_tuple_count(dims).unwrap()
        );
    }
}
