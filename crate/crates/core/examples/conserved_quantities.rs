//! Energies `E_κ` and the RSK tableau stay fixed while the row changes.
//!
//!     cargo run --example conserved_quantities

use crystal_bbs::conserved::{energy_kappa, rsk_tableau};
use crystal_bbs::evolution::evolve;
use crystal_bbs::format::{parse_state, render_state, Dialect};
use crystal_bbs::{Kappa, Result};

fn main() -> Result<()> {
    let mut s = parse_state("14·3·123·111·24·1·1·111·11·1·1111·1111·11111·11111·111·1111", 3, 0, 1)?;
    for (t, kappa) in [5, 5, 2, 1, 7, 3].into_iter().enumerate() {
        let e: Vec<u64> = (1..=5).map(|k| energy_kappa(&s, Kappa::Finite(k))).collect::<Result<_>>()?;
        println!("t={t} {:<70} E={e:?} P={}", render_state(&s, Dialect::Auto), rsk_tableau(&s)?);
        s = evolve(&s, kappa)?.state;
    }
    Ok(())
}
