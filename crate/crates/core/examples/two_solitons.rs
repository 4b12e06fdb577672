//! Two solitons in the homogeneous system with `T_∞`: the bigger one
//! catches up, they interact, and come out with swapped internal labels.
//!
//!     cargo run --example two_solitons

use crystal_bbs::conserved::{energy_kappa, rsk_tableau};
use crystal_bbs::format::{render_state, Dialect};
use crystal_bbs::reference;
use crystal_bbs::solitons::{extract_solitons, predicted_scattering};
use crystal_bbs::{Kappa, Result};

fn main() -> Result<()> {
    let run = reference::two_solitons();
    let rec = run.record()?;
    for t in 0..=rec.steps() {
        let s = rec.state(t);
        let labels = extract_solitons(&s, Some(1))
            .labels()
            .map(|ls| ls.iter().map(|l| l.word()).collect::<Vec<_>>().join(" "))
            .unwrap_or_else(|| "(interacting)".into());
        println!("t={t}  {}   {labels}", render_state(&s, Dialect::Auto));
    }

    let (a, b) = (
        crystal_bbs::Element::from_word("13", 2)?,
        crystal_bbs::Element::from_word("2", 2)?,
    );
    let (c, d) = predicted_scattering(&a, &b)?;
    println!("\npredicted by R on rank M-1: {a}⊗{b} ↦ {c}⊗{d}");

    let s = rec.state(0);
    let e: Vec<u64> = (1..=4).map(|k| energy_kappa(&s, Kappa::Finite(k))).collect::<Result<_>>()?;
    println!("E_1..E_4 = {e:?}, tableau {}", rsk_tableau(&s)?);
    Ok(())
}
