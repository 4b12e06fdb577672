//! `T_∞` as moving balls: each colour in turn, nearest free space to the
//! right. The canonical system gives every ball its own colour.
//!
//!     cargo run --example box_ball

use crystal_bbs::boxball::{boxball_step, canonicalize};
use crystal_bbs::evolution::evolve_infinity;
use crystal_bbs::format::{parse_state, render_state, Dialect};
use crystal_bbs::Result;

fn main() -> Result<()> {
    let mut s = parse_state("1·12·13·1·111·1·33·1·1·1·11·1·1·1", 2, 0, 1)?;
    for t in 0..4 {
        let (next, moves) = boxball_step(&s);
        let trace: Vec<String> = moves.iter().map(|m| format!("{}:{}→{}", m.index, m.from, m.to)).collect();
        println!("t={t} {:<40} {}", render_state(&s, Dialect::Dotted), trace.join(" "));
        assert!(next.same_configuration(&evolve_infinity(&s)?));
        s = next;
    }
    let c = canonicalize(&s)?;
    println!("\ncanonical (rank {}): {}", c.rank(), render_state(&c, Dialect::Dotted));
    Ok(())
}
