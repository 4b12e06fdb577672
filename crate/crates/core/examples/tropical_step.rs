//! One vertex in integer variables: the max-plus update of `(u, v)`
//! reproduces R, with the pairing counts behind it.
//!
//!     cargo run --example tropical_step

use crystal_bbs::piecewise_linear::{from_pl, pairing_counts, pl_carrier_step, to_pl};
use crystal_bbs::rmatrix::combinatorial_r;
use crystal_bbs::{Element, Result};

fn main() -> Result<()> {
    let m = 3;
    for (carrier, b) in [("2", "23"), ("13", "2"), ("1124", "34"), ("444", "1123")] {
        let (v, u) = (Element::from_word(carrier, m)?, Element::from_word(b, m)?);
        let (u2, v2) = pl_carrier_step(&to_pl(&u), &to_pl(&v))?;
        let p = pairing_counts(&to_pl(&u), &to_pl(&v))?;
        let r = combinatorial_r(&v, &u)?;
        println!(
            "v={carrier:<5} u={b:<5} u={:?} v={:?} -> u'={:?} v'={:?}  box {} carrier {}  paired {} (R: {}⊗{})",
            to_pl(&u).comps(),
            to_pl(&v).comps(),
            u2.comps(),
            v2.comps(),
            from_pl(&u2),
            from_pl(&v2),
            p.paired(),
            r.left_out,
            r.right_out
        );
    }
    Ok(())
}
