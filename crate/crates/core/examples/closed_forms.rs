//! The closed-form two-row leaf against the leaf computed from the binomial
//! recursion, over small gap and overlap shapes.

use jackleaf::algebra::MultiPoly;
use jackleaf::binomials::BinomialContext;
use jackleaf::closedforms::{closed_leaf, q_poly, LeafFormulaInput};
use jackleaf::partitions::{two_row_data, TwoRowShape};
use jackleaf::stemleaf::leaf;

fn main() -> jackleaf::Result<()> {
    println!("Q(2,1) = {}", q_poly(2, 1));
    println!("closed leaf (3,2,0,1+r) = {}", closed_leaf(&LeafFormulaInput::numeric(3, 2, 0, 1, 1))?);

    let mut ctx = BinomialContext::new();
    for shape in TwoRowShape::enumerate(3, 2, 1, 1) {
        let (lam, mu) = shape.minimal_container();
        let data = two_row_data(&lam, &mu)?;
        let formula = closed_leaf(&LeafFormulaInput::from(&data))?;
        let computed = leaf(&lam, &mu, &mut ctx)?;
        let same = computed.as_polynomial().map(MultiPoly::from_unipoly).as_ref() == Some(&formula);
        println!("({lam})/({mu})  {formula}  {}", if same { "ok" } else { "MISMATCH" });
    }
    Ok(())
}
