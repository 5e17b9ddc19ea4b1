//! Print the induced decomposition of λ by μ, with the critical box.
//!
//! `cargo run --example decompose -- 8,7,3,3,1 8,4,3,1,1`

use jackleaf::partitions::{critical_data, induced_decomposition, render_decomposition, Label, Partition};

fn main() -> jackleaf::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let lam: Partition = args.first().map_or("8,7,3,3,1", String::as_str).parse()?;
    let mu: Partition = args.get(1).map_or("8,4,3,1,1", String::as_str).parse()?;
    print!("{}", render_decomposition(&lam, &mu, true)?);
    let labels = induced_decomposition(&lam, &mu)?;
    for l in Label::ALL {
        println!("{l}: {}", labels.count(l));
    }
    let crit = critical_data(&lam, &mu)?;
    match crit.xstar {
        Some(c) => println!("critical box {c}, y = {}", crit.y),
        None => println!("no J boxes, y = 0"),
    }
    Ok(())
}
