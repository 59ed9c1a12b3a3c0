//! Reproduce the small-matrix degree table with all three routes and
//! check the square-case simplification 2^(n-d) C(n, d-1).

use kalman_varieties::degrees::{matrix_degree_closed, matrix_degree_square};
use kalman_varieties::kalman::{general_degree_chern, general_degree_homogeneous};

fn main() {
    println!("  d  n  m  degree");
    for n in 1..=4u32 {
        for m in 2..=3u32 {
            for d in 1..=n {
                let closed = matrix_degree_closed(d, n, m).unwrap();
                assert_eq!(closed, general_degree_homogeneous(d, &[n, m]).unwrap().degree);
                assert_eq!(closed, general_degree_chern(d, &[n, m]).unwrap().degree);
                println!("{:>3}{:>3}{:>3}  {}", d, n, m, closed);
            }
        }
    }

    // once m >= n the double sum collapses to a single binomial
    for n in 1..=6u32 {
        for d in 1..=n {
            let square = matrix_degree_square(d, n).unwrap();
            assert_eq!(square, matrix_degree_closed(d, n, n + 2).unwrap());
            println!("deg(d={}, n={}, m>=n) = 2^{} C({},{}) = {}", d, n, n - d, n, d - 1, square);
        }
    }
}
