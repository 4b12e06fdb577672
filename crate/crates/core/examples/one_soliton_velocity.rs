//! A single soliton on boxes of capacities 1,2,1,2,3,2: where it sits,
//! its `(n, k, x, y)` data, and how far one carrier step moves it.
//!
//!     cargo run --example one_soliton_velocity

use crystal_bbs::evolution::evolve;
use crystal_bbs::format::{render_state, Dialect};
use crystal_bbs::profile::Profile;
use crystal_bbs::solitons::{inject, label_from_word, predicted_displacement, read_one_soliton, SolitonPlacement};
use crystal_bbs::reference::ONE_SOLITON_THETAS;
use crystal_bbs::Result;

fn main() -> Result<()> {
    let mut thetas = ONE_SOLITON_THETAS.to_vec();
    thetas.extend([1, 2, 1, 2, 3, 2, 1, 2, 1, 2]);
    let theta = Profile::new(1, thetas, 1);
    for word in ["1", "11223"] {
        let label = label_from_word(word, 3)?;
        for lead in [0, 2, 4] {
            let p = SolitonPlacement::on_profile(3, vec![label.clone()], &[lead], &theta)?;
            let s = inject(&p)?;
            let r = read_one_soliton(&s).expect("one soliton");
            print!("{word:>5} L0={lead}  {}  n={} n+k={} x={} y={}", render_state(&s, Dialect::Dotted), r.n, r.n + r.k as i64, r.x, r.y);
            for kappa in [1, 3] {
                let next = evolve(&s, kappa)?.state;
                let moved = read_one_soliton(&next).map(|q| q.x - r.x);
                print!("  κ={kappa}: Δx={} (predicted {})", moved.unwrap_or(i64::MIN), predicted_displacement(&s, &r, kappa));
            }
            println!();
        }
    }
    Ok(())
}
