//! Trace reduction: words in the free group to polynomials in the
//! canonical coordinates, checked against random SL(2,C) matrices.
//!
//! cargo run --example reduce -- "c1 c3 c2 c4^-1"

use goldman::numeric::oracle_reduce;
use goldman::reduce::{class_key, reduce_trace};
use goldman::Word;

fn main() -> goldman::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() { vec!["c1 c3 c2".to_string(), "c1 c2 c3 c4".into(), "c2^-1 c1 c2 c3 c2".into(), "c1^3 c2^-2".into()] } else { args };
    for s in &inputs {
        let w: Word = s.parse()?;
        let p = reduce_trace(&w)?;
        let report = oracle_reduce(&w, 50, 7)?;
        println!("tr({w})");
        println!("  class   {}", class_key(&w));
        println!("  poly    {p}");
        println!("  latex   {}", p.latex());
        println!("  oracle  {:.2e} over {} samples", report.max_residual, report.samples);
    }
    Ok(())
}
