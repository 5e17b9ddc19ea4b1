//! Scan every pair up to a size bound for leaves that are not polynomials
//! with nonnegative coefficients, and write the table as CSV.
//!
//! `cargo run --release --example positivity_scan -- 8 leaves.csv`

use jackleaf::table::{positivity_scan, table_rows, write_table, ShapeFilter, TableFormat};

fn main() -> jackleaf::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let rows = table_rows(n, ShapeFilter::All)?;
    println!("{}", positivity_scan(&rows));
    let multi = rows.iter().filter(|r| !r.is_two_row());
    let bad = multi.clone().filter(|r| !(r.leaf_is_polynomial && r.leaf_nonnegative)).count();
    println!("{} leaves with three or more rows, {bad} not polynomial with nonnegative coefficients", multi.count());
    if let Some(path) = args.next() {
        write_table(&rows, TableFormat::Csv, std::fs::File::create(path)?)?;
    }
    Ok(())
}
