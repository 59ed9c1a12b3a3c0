//! Degrees of Kalman varieties of symmetric tensors, computed by the
//! closed-form sum and cross-checked against the Chern-series route.

use kalman_varieties::degrees::{eigenvector_count, symmetric_degree_closed};
use kalman_varieties::kalman::symmetric_degree_chern;

fn main() {
    println!("  d  n  k  degree");
    for n in 1..=5u32 {
        for k in 2..=4u32 {
            for d in 1..=n {
                let closed = symmetric_degree_closed(d, n, k).unwrap();
                let chern = symmetric_degree_chern(d, n, k).unwrap();
                assert_eq!(closed, chern.degree);
                println!("{:>3}{:>3}{:>3}  {}", d, n, k, closed);
            }
        }
    }

    // at d = n the variety is the whole space and the degree counts the
    // eigenvectors of a generic symmetric tensor
    for k in 2..=4u32 {
        let n = 5;
        assert_eq!(
            symmetric_degree_closed(n, n, k).unwrap(),
            eigenvector_count(n, k).unwrap()
        );
        println!(
            "eigenvectors of a generic order-{} tensor on C^{}: {}",
            k,
            n,
            eigenvector_count(n, k).unwrap()
        );
    }
}
