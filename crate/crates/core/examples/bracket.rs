//! Goldman brackets on the five-holed sphere, with the intersection points
//! that produce them.
//!
//! cargo run --example bracket -- "c1 c3" "c2 c4"

use goldman::goldman::{bracket, intersections};
use goldman::surface::FatGraph;

fn main() -> goldman::Result<()> {
    let fat = FatGraph::standard_model(5, 0)?;
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pairs: Vec<(String, String)> = match args.as_slice() {
        [a, b] => vec![(a.clone(), b.clone())],
        _ => vec![("c1 c3".into(), "c2 c4".into()), ("c1 c2".into(), "c1 c4".into()), ("c1 c2".into(), "c3 c4".into()), ("c1 c2 c4".into(), "c2 c3 c4".into())],
    };
    for (a, b) in pairs {
        let (alpha, beta) = (fat.parse_word(&a)?, fat.parse_word(&b)?);
        println!("{{tr({a}), tr({b})}}");
        for p in intersections(&fat, &alpha, &beta)? {
            println!("  {:+} at {}", p.sign, fat.format_word(&p.resolved));
        }
        println!("  = {}", bracket(&fat, &alpha, &beta)?);
    }

    // One handle: the generators meet once.
    let torus = FatGraph::standard_model(1, 1)?;
    let (a, b) = (torus.parse_word("a1")?, torus.parse_word("b1")?);
    println!("one-holed torus: {{tr a1, tr b1}} = {}", bracket(&torus, &a, &b)?);
    Ok(())
}
