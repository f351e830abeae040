//! Every check of the five-holed sphere reference data: bracket table,
//! intersection diagrams, compressed form, Casimirs and the symmetry scan.
//!
//! cargo run --release --example verify_paper

use goldman::data::data_dir;
use goldman::verify::verify_paper;

fn main() -> goldman::Result<()> {
    let report = verify_paper(&data_dir(), 5, 42)?;
    print!("{report}");
    Ok(())
}
