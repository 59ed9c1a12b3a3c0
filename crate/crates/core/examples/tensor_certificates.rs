//! Exact certification of tensor eigenvectors and singular tuples: the
//! checks run over Q, so a yes answer is a proof, not an approximation.

use kalman_varieties::exactlin::{ExactMatrix, ExactVector, Scalar};
use kalman_varieties::pairs::{is_eigenvector, is_singular_tuple, DenseTensor, SymmetricTensor};

fn main() {
    // f(x, y) = x^3 + 3 x y^2 on C^2; its gradient at (1, 1) is (6, 6)
    let f = SymmetricTensor::new(
        2,
        3,
        vec![
            (vec![0, 0, 0], Scalar::one()),
            (vec![0, 1, 1], Scalar::from_int(3)),
        ],
    )
    .unwrap();
    let v = ExactVector::from_ints(&[1, 1]);
    match is_eigenvector(&f, &v).unwrap() {
        Some(lambda) => println!("(1,1) is an eigenvector, lambda = {}", lambda),
        None => println!("(1,1) is not an eigenvector"),
    }
    assert!(is_eigenvector(&f, &ExactVector::from_ints(&[1, 2])).unwrap().is_none());

    // singular tuples of a matrix, viewed as an order-2 tensor
    let a = ExactMatrix::from_ints(&[&[3, 0], &[0, 5]]);
    let t = DenseTensor::from_matrix(&a);
    let tuple = [ExactVector::from_ints(&[0, 1]), ExactVector::from_ints(&[0, 1])];
    match is_singular_tuple(&t, &tuple).unwrap() {
        Some(lambdas) => {
            let l: Vec<String> = lambdas.iter().map(|x| x.to_string()).collect();
            println!("(e2, e2) is a singular pair, lambdas = ({})", l.join(", "));
        }
        None => println!("(e2, e2) is not a singular pair"),
    }

    // a 2x2x2 tensor and one of its six singular triples
    let entries: Vec<Scalar> = [1, 0, 0, 0, 0, 0, 0, 2]
        .iter()
        .map(|&x| Scalar::from_int(x))
        .collect();
    let t = DenseTensor::new(vec![2, 2, 2], entries).unwrap();
    let e1 = ExactVector::from_ints(&[1, 0]);
    let triple = [e1.clone(), e1.clone(), e1];
    match is_singular_tuple(&t, &triple).unwrap() {
        Some(lambdas) => {
            let l: Vec<String> = lambdas.iter().map(|x| x.to_string()).collect();
            println!("(e1, e1, e1) is a singular triple, lambdas = ({})", l.join(", "));
        }
        None => println!("(e1, e1, e1) is not a singular triple"),
    }
}
