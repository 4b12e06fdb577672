//! Inhomogeneous box capacities and a carrier schedule `T_5⁴` then `T_2⁵`.
//! The two solitons collide twice and return to their original labels.
//!
//!     cargo run --example double_scattering

use crystal_bbs::format::{render_state, Dialect};
use crystal_bbs::reference;
use crystal_bbs::solitons::{extract_solitons, predicted_scattering};
use crystal_bbs::Result;

fn main() -> Result<()> {
    let run = reference::double_scattering();
    let rec = run.record()?;
    for t in 0..=rec.steps() {
        let kappa = rec.kappas.get(t).map(|k| format!("κ={k}")).unwrap_or_default();
        println!("t={t}  {}  {kappa}", render_state(&rec.state(t), Dialect::Auto));
    }
    println!();
    for &(t, _) in run.labels {
        let labels = extract_solitons(&rec.state(t), Some(1)).labels().unwrap();
        let words: Vec<String> = labels.iter().map(|l| l.word()).collect();
        println!("t={t}: solitons {words:?}");
    }
    let first = extract_solitons(&rec.state(0), Some(1)).labels().unwrap();
    let (c, d) = predicted_scattering(&first[0], &first[1])?;
    println!("R' predicts {}⊗{} ↦ {c}⊗{d}", first[0], first[1]);
    Ok(())
}
