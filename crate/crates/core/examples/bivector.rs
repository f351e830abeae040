//! Poisson bi-vectors of punctured spheres: entry tables, Casimirs,
//! the compressed symmetric form and a numeric Jacobi check.
//!
//! cargo run --release --example bivector

use goldman::bivector::{casimirs, compute_bivector, expand_symmetric_form, SymmetricForm};
use goldman::data::{data_dir, symmetric_form_path};
use goldman::numeric::Representation;
use goldman::surface::FatGraph;
use goldman::TraceVar;

fn main() -> goldman::Result<()> {
    for n in 2..=4 {
        let bv = compute_bivector(&FatGraph::standard_model(n, 0)?)?;
        let c: Vec<String> = casimirs(&bv).iter().map(|v| v.to_string()).collect();
        print!("{bv}");
        println!("casimirs: {}\n", c.join(", "));
    }

    let bv = compute_bivector(&FatGraph::standard_model(5, 0)?)?;
    println!("five-holed sphere: {} coordinates, {} non-zero entries", bv.coordinates.len(), bv.entries().count());
    let form = SymmetricForm::load(&symmetric_form_path(&data_dir()))?;
    let expanded = expand_symmetric_form(&form)?;
    let agree = bv.pairs().iter().filter(|(u, v)| expanded.get(u, v) == bv.get(u, v)).count();
    println!("compressed form with {} coefficients reproduces {agree}/{} entries", form.coefficients.len(), bv.pairs().len());

    let vals = Representation::sample(4, 3).coordinate_values();
    let (x, y, z) = (TraceVar::new(&[1, 3]), TraceVar::new(&[2, 4]), TraceVar::new(&[1, 2, 3]));
    println!("Jacobi residual for ({x}, {y}, {z}): {:.2e}", bv.jacobi_residual(&x, &y, &z, &vals)?);
    println!("\n{}", bv.latex().lines().next().unwrap_or_default());
    Ok(())
}
