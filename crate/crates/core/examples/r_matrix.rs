//! Combinatorial R on `B_k ⊗ B_l`: the winding/unwinding rule, its energy,
//! and the check against an R built from crystal graphs alone.
//!
//!     cargo run --example r_matrix

use crystal_bbs::rmatrix::{combinatorial_r, crystal_graph_r_oracle, yang_baxter_check};
use crystal_bbs::{Element, Result};

fn main() -> Result<()> {
    let m = 2;
    for (left, right) in [("13", "2"), ("23", "2"), ("112", "3"), ("3", "1223")] {
        let b1 = Element::from_word(left, m)?;
        let b2 = Element::from_word(right, m)?;
        let r = combinatorial_r(&b1, &b2)?;
        println!(
            "{b1}⊗{b2} ↦ {}⊗{}   H = {:>2}   ({} unwinding, {} winding)",
            r.left_out,
            r.right_out,
            r.energy(),
            r.unwinding,
            r.winding
        );
        // R is an involution
        assert_eq!(combinatorial_r(&r.left_out, &r.right_out)?.image(), (b1, b2));
    }

    println!();
    for (k, l) in [(1, 2), (2, 3), (3, 3)] {
        let oracle = crystal_graph_r_oracle(k, l, m)?;
        let agree = oracle.iter().filter(|((a, b), img)| combinatorial_r(a, b).map(|r| &r.image() == *img).unwrap_or(false)).count();
        println!("B_{k}⊗B_{l}: rule agrees with the crystal-graph R on {agree}/{} pairs", oracle.len());
    }
    println!("Yang-Baxter on B_1⊗B_2⊗B_3: {}", yang_baxter_check(1, 2, 3, m)?);
    Ok(())
}
