//! Boxes of capacity 2 with a capacity-1 carrier. Here the smaller soliton
//! overtakes the larger one. The carrier rows form the dual system, where
//! the roles swap.
//!
//!     cargo run --example capacity_two

use crystal_bbs::format::{render_boxes, Dialect};
use crystal_bbs::reference;
use crystal_bbs::Result;

fn main() -> Result<()> {
    let rec = reference::capacity_two().record()?;
    rec.verify()?;
    for t in 0..=rec.steps() {
        println!("b  {}", render_boxes(&rec.boxes[t], Dialect::Dotted));
        if t < rec.steps() {
            println!("v   {}", render_boxes(&rec.carriers[t], Dialect::Digits));
        }
    }

    // space and time swapped: carriers become boxes, boxes become carriers
    let dual = rec.dual_record()?;
    dual.verify()?;
    println!("\ndual system ({} steps, κ = θ read right to left):", dual.steps());
    for row in dual.boxes.iter().take(6) {
        println!("  {}", render_boxes(row, Dialect::Auto));
    }
    Ok(())
}
