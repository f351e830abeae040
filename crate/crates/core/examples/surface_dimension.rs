//! Fat graph models and character variety dimensions.
//!
//! cargo run --example surface_dimension

use goldman::surface::{dimension, FatGraph, GroupParams};

fn main() -> goldman::Result<()> {
    for (n, g) in [(5, 0), (1, 1), (2, 1), (1, 2)] {
        print!("{}", FatGraph::standard_model(n, g)?);
        println!();
    }
    println!("{:>8} {:>6} {:>6} {:>6}", "surface", "sl2", "sl3", "gl2");
    for (n, g) in [(2, 0), (3, 0), (5, 0), (1, 1), (0, 2), (0, 3), (0, 1)] {
        let row: Vec<String> = ["sl2", "sl3", "gl2"]
            .iter()
            .map(|name| dimension(n, g, GroupParams::named(name).unwrap()).map_or("-".into(), |d| d.to_string()))
            .collect();
        println!("{:>8} {:>6} {:>6} {:>6}", format!("{n},{g}"), row[0], row[1], row[2]);
    }
    Ok(())
}
