//! Jack polynomials in the monomial basis, and binomial coefficients read
//! off from `P_λ(1 + x)`.

use jackleaf::binomials::binomial;
use jackleaf::oracle::JackOracle;
use jackleaf::partitions::{partitions_of, sub_partitions, Partition};

fn main() -> jackleaf::Result<()> {
    let mut oracle = JackOracle::new();
    for lam in partitions_of(3) {
        let p = oracle.jack_polynomial(&lam, 3)?;
        println!("P_({lam}) in 3 variables:");
        for (nu, c) in p.coeffs() {
            println!("  m_({nu}): {c}");
        }
        println!("  P(1,1,1) = {}", p.eval_ones());
    }

    let lam: Partition = "2,1".parse()?;
    for mu in sub_partitions(&lam) {
        let b = oracle.binomial_oracle(&lam, &mu, 3)?;
        assert_eq!(b, binomial(&lam, &mu));
        println!("b^({lam})_({mu}) = {b}");
    }
    Ok(())
}
