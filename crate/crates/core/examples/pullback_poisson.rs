//! Maps of surfaces: pulling coordinates back along free-group maps and
//! checking that capping, inclusion and gluing are Poisson.
//!
//! cargo run --release --example pullback_poisson

use goldman::data::{data_dir, map_path};
use goldman::maps::{poisson_check, FreeHom};
use goldman::surface::FatGraph;
use goldman::TracePoly;

fn main() -> goldman::Result<()> {
    let dir = data_dir();
    let cap = FreeHom::load(&map_path(&dir, "disk_cap_4"))?;
    for s in ["t[1,4]", "t[4]", "t[1,2,4]", "t[1,3]*t[2,4] - t[1,2,4]"] {
        let p: TracePoly = s.parse()?;
        println!("cap c4: {p}  ->  {}", cap.pullback(&p)?);
    }
    let cases = [("disk_cap_4", (5, 0), (4, 0)), ("inclusion_3_4", (4, 0), (5, 0)), ("glue_4_0_to_2_1", (4, 0), (2, 1))];
    for (name, (sn, sg), (tn, tg)) in cases {
        let h = FreeHom::load(&map_path(&dir, name))?;
        let r = poisson_check(&h, &FatGraph::standard_model(sn, sg)?, &FatGraph::standard_model(tn, tg)?, 50, 42)?;
        println!("{name}: {} pairs, max residual {:.2e}, {}", r.pairs, r.max_residual, if r.passed() { "Poisson" } else { "not Poisson" });
    }
    Ok(())
}
