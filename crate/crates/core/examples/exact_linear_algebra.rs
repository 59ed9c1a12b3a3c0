//! Exact linear algebra over Q and Q(i): reduced row echelon form, rank,
//! kernel bases and span membership with no floating point anywhere.

use kalman_varieties::exactlin::{in_span, ExactMatrix, ExactVector, Scalar};

fn main() {
    let a = ExactMatrix::from_ints(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
    let (rref, pivots) = a.rref();
    println!("rank = {}, pivot columns = {:?}", a.rank(), pivots);
    for i in 0..rref.nrows() {
        let row: Vec<String> = (0..rref.ncols()).map(|j| rref.get(i, j).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }

    for k in a.kernel_basis() {
        let coords: Vec<String> = k.0.iter().map(|x| x.to_string()).collect();
        println!("kernel vector: ({})", coords.join(", "));
        assert!(a.matvec(&k).unwrap().is_zero());
    }

    let v = ExactVector::from_ints(&[5, 7, 9]);
    let basis = [a.col(0), a.col(1)];
    match in_span(&v, &basis).unwrap() {
        Some(coeffs) => {
            let c: Vec<String> = coeffs.iter().map(|x| x.to_string()).collect();
            println!("(5,7,9) = {} * col0 + {} * col1", c[0], c[1]);
        }
        None => println!("(5,7,9) is not in the span"),
    }

    // Gaussian rationals: i is an eigenvalue of a rotation
    let rot = ExactMatrix::from_ints(&[&[0, -1], &[1, 0]]);
    let shifted = rot.matmul(&ExactMatrix::identity(2)).unwrap();
    let mut m = shifted.clone();
    for j in 0..2 {
        m.set(j, j, m.get(j, j).sub(&Scalar::i()));
    }
    for k in m.kernel_basis() {
        let coords: Vec<String> = k.0.iter().map(|x| x.to_string()).collect();
        println!("eigenvector of the rotation for eigenvalue i: ({})", coords.join(", "));
    }

    // exact square roots in Q(i)
    for s in [Scalar::from_frac(9, 4), Scalar::from_int(-4), Scalar::from_int(2)] {
        match s.sqrt() {
            Some(r) => println!("sqrt({}) = {}", s, r),
            None => println!("sqrt({}) does not exist in Q(i)", s),
        }
    }
}
