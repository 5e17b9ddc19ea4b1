//! Stem, leaf and two-row data for two sample pairs.

use jackleaf::binomials::BinomialContext;
use jackleaf::partitions::{render_decomposition, two_row_data, Partition};
use jackleaf::stemleaf::stem_leaf;

fn main() -> jackleaf::Result<()> {
    let mut ctx = BinomialContext::new();
    for (l, m) in [("7,3,3,1", "4,3,1,1"), ("6,5,3,1", "6,2,1,1")] {
        let lam: Partition = l.parse()?;
        let mu: Partition = m.parse()?;
        let data = two_row_data(&lam, &mu)?;
        let sl = stem_leaf(&lam, &mu, &mut ctx)?;
        println!("λ = ({lam}), μ = ({mu})");
        print!("{}", render_decomposition(&lam, &mu, true)?);
        println!("u = {}, d = {}, m = {}, y = {}", data.u, data.d, data.m, data.y);
        println!("b = {}", ctx.binomial(&lam, &mu));
        println!("K = {}", sl.stem);
        println!("L = {}\n", sl.leaf);
    }
    Ok(())
}
