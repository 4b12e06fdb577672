//! Experiments as data: a JSONL list run in parallel, results in order.
//!
//!     cargo run --example batch

use crystal_bbs::cli::run_batch;

fn main() {
    let jobs = r#"
{"kind":"rmatrix","M":2,"pair":"13⊗2"}
{"kind":"evolve","M":3,"row":"111142113","kappas":["inf","inf",2]}
{"kind":"scatter","M":3,"left":"13","right":"2","theta":"1","kappa":"inf"}
{"kind":"conserved","M":3,"row":"111142113","kappas":[1,2,"inf"]}
{"kind":"verify","suite":"paper-examples","seed":1}
"#;
    for (i, r) in run_batch(jobs).iter().enumerate() {
        println!("#{i} exit {}\n{}", r.exit_code, r.text);
    }
}
