//! N-soliton solutions from the max-plus tau function: the fields read off
//! `Y^t_{n,j}` are a box-ball history, with no automaton run needed.
//!
//!     cargo run --example tau_solitons

use crystal_bbs::format::{render_state, Dialect};
use crystal_bbs::tau::{sample_params, TauSolitonParams, TauSolution, Window};
use crystal_bbs::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    let text = include_str!("data/two_solitons_tau.json");
    let params: TauSolitonParams = serde_json::from_str(text)?;
    let sol = TauSolution::new(&params)?;
    let w = Window { t0: 0, t1: 9, n0: 0, n1: 32 };
    for s in sol.states(&w)? {
        println!("{}", render_state(&s, Dialect::Auto));
    }
    println!("residual {}, automaton mismatch {:?}\n", sol.pl_residual(&w), sol.automaton_mismatch(&w)?);

    // three solitons, random capacities and carrier schedule
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let params = sample_params(&mut rng, 3, 2, &[2, 18, 34]);
    println!("amplitudes {:?}, contents {:?}", params.amplitudes, params.contents);
    let sol = TauSolution::new(&params)?;
    let w = Window { t0: 0, t1: 8, n0: 0, n1: 48 };
    for (t, s) in sol.states(&w)?.iter().enumerate() {
        println!("κ={:<2} {}", params.kappa_at(t as i64), render_state(s, Dialect::Dotted));
    }
    println!("residual {}, automaton mismatch {:?}", sol.pl_residual(&w), sol.automaton_mismatch(&w)?);
    Ok(())
}
