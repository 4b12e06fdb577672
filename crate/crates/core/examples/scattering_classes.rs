//! The three homogeneous regimes: which soliton overtakes which, and
//! whether the outgoing labels follow the rank-(M-1) R.
//!
//!     cargo run --example scattering_classes

use crystal_bbs::solitons::{classify, label_from_word, overtakes_within, predicted_scattering, scatter, ScatterSetup};
use crystal_bbs::{Kappa, Result};

fn main() -> Result<()> {
    let cases = [
        ("123", "2", 1, Kappa::Infinite),
        ("113", "2", 1, Kappa::Finite(4)),
        ("2", "1223", 5, Kappa::Finite(1)),
        ("2", "112", 4, Kappa::Finite(2)),
        ("13", "2", 2, Kappa::Finite(2)),
    ];
    for (left, right, theta, kappa) in cases {
        let (a, b) = (label_from_word(left, 3)?, label_from_word(right, 3)?);
        let (l, k) = (a.capacity().max(b.capacity()), a.capacity().min(b.capacity()));
        let class = classify(l, k, theta, kappa)?;
        let setup = ScatterSetup::homogeneous(a.clone(), b.clone(), theta, kappa);
        print!("θ={theta} κ={kappa:<3} {left:>4}⊗{right:<4} class {class:?}: ");
        if overtakes_within(&setup, 60)? {
            let out = scatter(&setup)?;
            let (c, d) = predicted_scattering(&a, &b)?;
            println!("→ {}⊗{} in {} steps (R' gives {c}⊗{d})", out.left_out, out.right_out, out.steps);
        } else {
            println!("no overtaking within 60 steps");
        }
    }
    Ok(())
}
