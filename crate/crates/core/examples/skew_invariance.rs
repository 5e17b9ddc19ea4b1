//! Realizations of the same skew box set have the same leaf; compare also
//! translated copies.

use jackleaf::verify::{realizations, skew_translation_report};

fn main() -> jackleaf::Result<()> {
    let groups = realizations(3, 6)?;
    for (shape, reals) in groups.iter().filter(|(_, r)| r.len() > 1).take(5) {
        let cells: Vec<String> = shape.cells().iter().map(ToString::to_string).collect();
        println!("{}", cells.join(" "));
        for (lam, mu, l) in reals {
            println!("  ({lam})/({mu}): {l}");
        }
    }
    println!("{}", skew_translation_report(4, 7)?);
    Ok(())
}
