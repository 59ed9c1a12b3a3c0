//! Exact decision procedures for singular pairs of a matrix with the
//! first singular vector constrained to a given line, including the two
//! boundary cases where naive expectations fail.

use kalman_varieties::exactlin::{ExactMatrix, ExactVector, Scalar};
use kalman_varieties::pairs::{
    decide_equal_lambda_pair_in_line, decide_pair_in_line, decide_pair_in_line_proposition,
    EqualLambdaDecision,
};

fn report(label: &str, a: &ExactMatrix, v0: &ExactVector) {
    let direct = decide_pair_in_line(a, v0).unwrap();
    let prop = decide_pair_in_line_proposition(a, v0).unwrap();
    println!("{}:", label);
    match &direct {
        Some(p) => println!(
            "  pair exists, witness lambda1 = {}, lambda2 = {}",
            p.lambda1, p.lambda2
        ),
        None => println!("  no pair with v on this line"),
    }
    println!("  annihilator/rank procedure agrees: {}", direct.is_some() == prop);
    match decide_equal_lambda_pair_in_line(a, v0).unwrap() {
        EqualLambdaDecision::No => println!("  equal-lambda pair: no"),
        EqualLambdaDecision::Yes { witness } => {
            println!("  equal-lambda pair: yes, lambda = {}", witness.lambda1)
        }
        EqualLambdaDecision::YesOverClosure { mu } => {
            println!("  equal-lambda pair: only over the closure (mu = {})", mu)
        }
    }
}

fn main() {
    // the line of an actual singular vector admits a pair; a generic
    // line does not
    let a = ExactMatrix::from_ints(&[&[3, 0], &[0, 5]]);
    report("diagonal 2x2, singular line", &a, &ExactVector::from_ints(&[0, 1]));
    report("diagonal 2x2, generic line", &a, &ExactVector::from_ints(&[1, 1]));

    // a line in the image with nothing mapping back to it: no pair
    let a = ExactMatrix::from_ints(&[&[1], &[0]]);
    report("tall rank-one", &a, &ExactVector::from_ints(&[0, 1]));

    // over Q(i) a pair exists but no rescaling makes the two singular
    // values equal
    let i = Scalar::i();
    let a = ExactMatrix::from_rows(vec![
        vec![Scalar::one(), i.clone()],
        vec![Scalar::one(), i],
    ])
    .unwrap();
    report("isotropic rows over Q(i)", &a, &ExactVector::from_ints(&[1, 0]));
}
