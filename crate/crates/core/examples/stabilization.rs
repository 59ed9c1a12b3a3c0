//! Scan the last factor dimension of a tensor shape and watch the degree
//! stabilize at the boundary format n_k = 1 + sum(n_i - 1).

use kalman_varieties::kalman::stabilization_check;

fn main() {
    for (d, prefix) in [(1u32, vec![3u32]), (2, vec![4]), (1, vec![2, 2]), (2, vec![3, 3])] {
        let boundary = 1 + prefix.iter().map(|n| n - 1).sum::<u32>();
        let m_range: Vec<u32> = (1..=boundary + 3).collect();
        let report = stabilization_check(d, &prefix, &m_range).unwrap();
        println!("d = {}, prefix = {:?}, boundary m = {}", d, prefix, report.boundary);
        for row in &report.rows {
            let marker = if row.m == report.boundary { "  <-" } else { "" };
            println!("  m = {:<2} degree = {}{}", row.m, row.degree, marker);
        }
        assert!(report.stabilized);
        assert_eq!(report.boundary, boundary);
    }
}
