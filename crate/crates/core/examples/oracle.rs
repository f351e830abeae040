//! The numeric oracle on random words: exact reductions against direct
//! products of random SL(2,C) matrices.
//!
//! cargo run --release --example oracle -- 200

use goldman::numeric::oracle_reduce;
use goldman::word::{Letter, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> goldman::Result<()> {
    let count: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = (0.0, Word::empty());
    for _ in 0..count {
        let len = rng.gen_range(1..=10);
        let letters = (0..len).map(|_| Letter::new(rng.gen_range(1..=4), if rng.gen_bool(0.5) { 1 } else { -1 }));
        let w = goldman::word::free_reduce(letters);
        let r = oracle_reduce(&w, 20, rng.gen())?;
        if r.max_residual >= worst.0 {
            worst = (r.max_residual, w);
        }
    }
    println!("{count} words, worst relative residual {:.2e} for {}", worst.0, worst.1);
    Ok(())
}
