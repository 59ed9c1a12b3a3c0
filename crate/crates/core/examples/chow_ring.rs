//! Arithmetic in a truncated polynomial ring: build Z[h,v]/(h^3, v^2),
//! invert a unit series and extract the coefficient used by the degree
//! computation for the 2x2 matrix case.

use kalman_varieties::ring::{Monomial, RingSpec, TruncatedPolynomial};

fn main() {
    // Chow ring of P^1 x P^1 with an extra h of cap 3
    let ring = RingSpec::chow(3, &[2]).unwrap();
    let h = TruncatedPolynomial::var(&ring, "h").unwrap();
    let v = TruncatedPolynomial::var(&ring, "v1").unwrap();
    let one = TruncatedPolynomial::one(&ring);

    // total Chern series of the twisted bundle for (d, n, k) = (1, 2, 2):
    // (1 + v + h)^2 / (1 + h)
    let numerator = one.add(&v).unwrap().add(&h).unwrap().pow(2);
    let denominator = one.add(&h).unwrap();
    let series = numerator.mul(&denominator.inverse().unwrap()).unwrap();
    println!("series   = {}", series);

    // the degree is the coefficient of h^(n-d) v^(d-1) = h^1 v^0
    let target = Monomial::from_pairs(&ring, &[("h", 1)]).unwrap();
    println!("deg      = {}", series.coefficient(&target).unwrap());

    // the same degree without any division, via the two-factor geometric
    // sum for the 2x2 matrix shape
    let ring2 = RingSpec::chow(2, &[2, 2]).unwrap();
    let h = TruncatedPolynomial::var(&ring2, "h").unwrap();
    let v1 = TruncatedPolynomial::var(&ring2, "v1").unwrap();
    let v2 = TruncatedPolynomial::var(&ring2, "v2").unwrap();
    let f1 = TruncatedPolynomial::geom_sum(&v2.add(&h).unwrap(), &v1, 2).unwrap();
    let f2 = TruncatedPolynomial::geom_sum(&v1.add(&h).unwrap(), &v2, 2).unwrap();
    let product = f1.mul(&f2).unwrap();
    println!("product  = {}", product);
    let target = Monomial::from_pairs(&ring2, &[("h", 1), ("v2", 1)]).unwrap();
    println!("deg      = {}", product.coefficient(&target).unwrap());
}
