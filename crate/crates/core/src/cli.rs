//! Experiment specs run as data, singly or as a JSONL batch, behind `bbs`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::conserved::{energy_kappa, rsk_tableau};
use crate::crystal::{Element, TensorWord};
use crate::error::{Error, Result};
use crate::evolution::{AutomatonState, EvolutionRecord, Kappa};
use crate::format::{parse_row, render_boxes, Dialect};
use crate::piecewise_linear::{pairing_counts, pl_carrier_step, to_pl};
use crate::profile::Profile;
use crate::rmatrix::{combinatorial_r, crystal_graph_r_oracle, yang_baxter_check};
use crate::solitons::{classify, label_from_word, predicted_scattering, scatter, ScatterSetup};
use crate::tau::{TauSolitonParams, TauSolution, Window};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ExperimentSpec {
    Evolve(EvolveSpec),
    Scatter(ScatterSpec),
    Rmatrix(RmatrixSpec),
    Plstep(PlstepSpec),
    Conserved(ConservedSpec),
    Tau(TauSpec),
    Verify(VerifySpec),
}

fn one() -> u32 {
    1
}

fn auto() -> String {
    "auto".into()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EvolveSpec {
    #[serde(rename = "M")]
    pub rank: usize,
    /// Initial row, `111142113` or `14·3·123`; ignored when `state` is given.
    #[serde(default)]
    pub row: String,
    #[serde(default)]
    pub state: Option<AutomatonState>,
    #[serde(default)]
    pub window_start: i64,
    #[serde(default = "one")]
    pub default_capacity: u32,
    /// `κ` for each step.
    pub kappas: Vec<Kappa>,
    #[serde(default)]
    pub carriers: bool,
    #[serde(default = "auto")]
    pub dialect: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScatterSpec {
    #[serde(rename = "M")]
    pub rank: usize,
    pub left: String,
    pub right: String,
    /// Capacity profile, e.g. `"2"` or `"1,2,3,2*"`.
    pub theta: String,
    /// Carrier profile over time, e.g. `"inf"` or `"5*4,2*"`.
    pub kappa: String,
    #[serde(default)]
    pub gap: Option<u32>,
    #[serde(default)]
    pub threshold: Option<usize>,
    #[serde(default)]
    pub max_steps: Option<usize>,
    #[serde(default)]
    pub trace: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RmatrixSpec {
    #[serde(rename = "M")]
    pub rank: usize,
    /// `"13⊗2"`.
    #[serde(default)]
    pub pair: Option<String>,
    /// Compare the winding rule with the crystal-graph oracle on `B_k ⊗ B_l`.
    #[serde(default)]
    pub oracle: Option<(u32, u32)>,
    #[serde(default)]
    pub check_yb: Option<(u32, u32, u32)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PlstepSpec {
    #[serde(rename = "M")]
    pub rank: usize,
    pub carrier: String,
    #[serde(rename = "box")]
    pub box_word: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConservedSpec {
    #[serde(rename = "M")]
    pub rank: usize,
    #[serde(default)]
    pub row: String,
    #[serde(default)]
    pub state: Option<AutomatonState>,
    #[serde(default = "one")]
    pub default_capacity: u32,
    /// `E_κ` for these κ; otherwise `1..=kappa_max`.
    #[serde(default)]
    pub kappas: Option<Vec<Kappa>>,
    #[serde(default)]
    pub kappa_max: Option<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TauSpec {
    pub params: TauSolitonParams,
    pub window: Window,
    /// `fields`, `ascii` or `residual`.
    pub emit: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifySpec {
    #[serde(default = "paper_examples")]
    pub suite: String,
    #[serde(default)]
    pub seed: u64,
}

fn paper_examples() -> String {
    "paper-examples".into()
}

/// Output of one experiment: a human-readable text, the same content as
/// JSON, and an exit code.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub exit_code: i32,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Report {
        Report { exit_code: EXIT_OK, text, json }
    }

    fn from_error(e: &Error) -> Report {
        let code = match e {
            Error::Argument(_) | Error::Parse(_) | Error::RankMismatch { .. } | Error::Json(_) | Error::Io(_) => {
                EXIT_USAGE
            }
            _ => EXIT_FAILURE,
        };
        Report { exit_code: code, text: format!("error: {e}"), json: json!({ "error": e.to_string() }) }
    }
}

pub fn run(spec: &ExperimentSpec) -> Report {
    let out = match spec {
        ExperimentSpec::Evolve(s) => run_evolve(s),
        ExperimentSpec::Scatter(s) => run_scatter(s),
        ExperimentSpec::Rmatrix(s) => run_rmatrix(s),
        ExperimentSpec::Plstep(s) => run_plstep(s),
        ExperimentSpec::Conserved(s) => run_conserved(s),
        ExperimentSpec::Tau(s) => run_tau(s),
        ExperimentSpec::Verify(s) => run_verify(s),
    };
    out.unwrap_or_else(|e| Report::from_error(&e))
}

/// Runs one spec per nonblank line, in parallel; reports keep line order.
/// A line that does not parse yields a usage-error report.
pub fn run_batch(jsonl: &str) -> Vec<Report> {
    let lines: Vec<&str> = jsonl.lines().filter(|l| !l.trim().is_empty()).collect();
    lines
        .par_iter()
        .map(|line| match serde_json::from_str::<ExperimentSpec>(line) {
            Ok(spec) => run(&spec),
            Err(e) => Report::from_error(&Error::Json(e)),
        })
        .collect()
}

fn initial(rank: usize, row: &str, state: &Option<AutomatonState>, start: i64, cap: u32) -> Result<AutomatonState> {
    match state {
        Some(s) if s.rank() != rank => Err(Error::RankMismatch { left: rank, right: s.rank() }),
        Some(s) => Ok(s.clone()),
        None => AutomatonState::new(rank, start, parse_row(row, rank)?, cap),
    }
}

fn words(boxes: &[Element]) -> Vec<String> {
    boxes.iter().map(Element::word).collect()
}

fn run_evolve(s: &EvolveSpec) -> Result<Report> {
    let dialect: Dialect = s.dialect.parse()?;
    let initial = initial(s.rank, &s.row, &s.state, s.window_start, s.default_capacity)?;
    let rec = EvolutionRecord::run(&initial, &s.kappas)?;
    rec.verify()?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for t in 0..=rec.steps() {
        // a row keeps the input window unless balls leave it
        let state = rec.state(t);
        let lo = initial.window_start().min(state.normalized().window_start());
        let hi = initial.window_end().max(state.normalized().window_end());
        let boxes: Vec<Element> = (lo..hi).map(|n| state.box_at(n)).collect();
        let line = render_boxes(&boxes, dialect);
        text.push_str(&line);
        text.push('\n');
        if s.carriers && t < rec.steps() {
            text.push_str(&format!("  v: {}\n", render_boxes(&rec.carriers[t], dialect)));
        }
        rows.push(words(&boxes));
    }
    let carriers: Vec<Vec<String>> = rec.carriers.iter().map(|r| words(r)).collect();
    Ok(Report::ok(
        text,
        json!({ "kind": "evolve", "kappas": rec.kappas, "space_origin": rec.space_origin, "rows": rows, "carriers": carriers }),
    ))
}

fn run_scatter(s: &ScatterSpec) -> Result<Report> {
    let left = label_from_word(&s.left, s.rank)?;
    let right = label_from_word(&s.right, s.rank)?;
    let theta: Profile<u32> = s.theta.parse()?;
    let kappa: Profile<Kappa> = s.kappa.parse()?;
    let homogeneous = theta.values.iter().all(|&t| t == theta.default) && kappa.values.iter().all(|&k| k == kappa.default);
    let class = if homogeneous {
        let (l, k) = (left.capacity().max(right.capacity()), left.capacity().min(right.capacity()));
        classify(l, k, theta.default, kappa.default).ok()
    } else {
        None
    };
    let setup = ScatterSetup {
        rank: s.rank,
        left: left.clone(),
        right: right.clone(),
        theta,
        kappa,
        gap: s.gap,
        threshold: s.threshold,
        max_steps: s.max_steps.unwrap_or(10_000),
        keep_trace: s.trace,
    };
    let out = scatter(&setup)?;
    let (pl, pr) = predicted_scattering(&left, &right)?;
    let matches = (pl.clone(), pr.clone()) == (out.left_out.clone(), out.right_out.clone());
    let mut text = String::new();
    for st in &out.trace {
        text.push_str(&render_boxes(st.boxes(), Dialect::Auto));
        text.push('\n');
    }
    text.push_str(&format!("{left}⊗{right} ↦ {}⊗{} after {} steps\n", out.left_out, out.right_out, out.steps));
    text.push_str(&format!("R': {pl}⊗{pr} ({})\n", if matches { "agrees" } else { "differs" }));
    if let Some(c) = class {
        text.push_str(&format!("class {c:?}\n"));
    }
    Ok(Report::ok(
        text,
        json!({
            "kind": "scatter",
            "in": [left.word(), right.word()],
            "out": [out.left_out.word(), out.right_out.word()],
            "predicted": [pl.word(), pr.word()],
            "agrees": matches,
            "steps": out.steps,
            "class": class,
        }),
    ))
}

fn run_rmatrix(s: &RmatrixSpec) -> Result<Report> {
    let mut text = String::new();
    let mut out = json!({ "kind": "rmatrix" });
    let mut exit_code = EXIT_OK;
    if s.pair.is_none() && s.oracle.is_none() && s.check_yb.is_none() {
        return Err(Error::Argument("give a pair, --oracle K,L or --check-yb K,L,M".into()));
    }
    if let Some(pair) = &s.pair {
        let w = TensorWord::parse(pair, s.rank)?;
        if w.len() != 2 {
            return Err(Error::Argument(format!("expected two factors in {pair:?}")));
        }
        let r = combinatorial_r(&w.factors()[0], &w.factors()[1])?;
        text.push_str(&format!(
            "{w} ↦ {}⊗{}  H = {}  (unwinding {}, winding {})\n",
            r.left_out,
            r.right_out,
            r.energy(),
            r.unwinding,
            r.winding
        ));
        out["image"] = json!([r.left_out.word(), r.right_out.word()]);
        out["energy"] = json!(r.energy());
        out["unwinding"] = json!(r.unwinding);
        out["winding"] = json!(r.winding);
    }
    if let Some((k, l)) = s.oracle {
        let table = crystal_graph_r_oracle(k, l, s.rank)?;
        let mut mismatches = Vec::new();
        for ((b1, b2), want) in table.iter() {
            let got = combinatorial_r(b1, b2)?.image();
            if &got != want {
                mismatches.push(format!("{b1}⊗{b2}"));
            }
        }
        text.push_str(&format!("oracle B_{k}⊗B_{l}: {} pairs, {} mismatches\n", table.len(), mismatches.len()));
        out["oracle"] = json!({ "pairs": table.len(), "mismatches": mismatches });
        if !mismatches.is_empty() {
            exit_code = EXIT_FAILURE;
        }
    }
    if let Some((k, l, m)) = s.check_yb {
        let holds = yang_baxter_check(k, l, m, s.rank)?;
        text.push_str(&format!("Yang-Baxter on B_{k}⊗B_{l}⊗B_{m}: {}\n", if holds { "holds" } else { "FAILS" }));
        out["yang_baxter"] = json!(holds);
        if !holds {
            exit_code = EXIT_FAILURE;
        }
    }
    Ok(Report { exit_code, text, json: out })
}

fn run_plstep(s: &PlstepSpec) -> Result<Report> {
    let carrier = Element::from_word(&s.carrier, s.rank)?;
    let b = Element::from_word(&s.box_word, s.rank)?;
    let (u, v) = pl_carrier_step(&to_pl(&b), &to_pl(&carrier))?;
    let p = pairing_counts(&to_pl(&b), &to_pl(&carrier))?;
    let r = combinatorial_r(&carrier, &b)?;
    let agrees = (u.clone(), v.clone()) == (to_pl(&r.left_out), to_pl(&r.right_out));
    let text = format!(
        "u = {:?} v = {:?}\nu' = {:?} v' = {:?}\npaired {} (unwinding {}, winding {})\nR: box {}, carrier {} ({})\n",
        to_pl(&b).comps(),
        to_pl(&carrier).comps(),
        u.comps(),
        v.comps(),
        p.paired(),
        p.unwinding,
        p.winding,
        r.left_out,
        r.right_out,
        if agrees { "agrees" } else { "differs" }
    );
    let json = json!({
        "kind": "plstep",
        "u_next": u.comps(),
        "v_next": v.comps(),
        "unwinding": p.unwinding,
        "winding": p.winding,
        "agrees": agrees,
    });
    Ok(Report { exit_code: if agrees { EXIT_OK } else { EXIT_FAILURE }, text, json })
}

fn run_conserved(s: &ConservedSpec) -> Result<Report> {
    let state = initial(s.rank, &s.row, &s.state, 0, s.default_capacity)?;
    let kappas = match &s.kappas {
        Some(k) => k.clone(),
        None => (1..=s.kappa_max.unwrap_or(state.ball_count() + 1).max(1)).map(Kappa::Finite).collect(),
    };
    let e: Vec<u64> = kappas.iter().map(|&k| energy_kappa(&state, k)).collect::<Result<_>>()?;
    let tab = rsk_tableau(&state)?;
    let mut text: String = kappas.iter().zip(&e).map(|(k, e)| format!("E_{k} = {e}\n")).collect();
    text.push_str(&format!("tableau {}\n", serde_json::to_string(&tab.rows)?));
    Ok(Report::ok(
        text,
        json!({ "kind": "conserved", "kappas": kappas, "energies": e, "tableau": tab.rows, "shape": tab.shape() }),
    ))
}

fn run_tau(s: &TauSpec) -> Result<Report> {
    let sol = TauSolution::new(&s.params)?;
    let w = &s.window;
    match s.emit.as_str() {
        "residual" => {
            let r = sol.pl_residual(w);
            let code = if r == 0 { EXIT_OK } else { EXIT_FAILURE };
            Ok(Report { exit_code: code, text: format!("max residual {r}\n"), json: json!({ "kind": "tau", "residual": r }) })
        }
        "ascii" => {
            let states = sol.states(w)?;
            let rows: Vec<String> = states.iter().map(|st| render_boxes(st.boxes(), Dialect::Auto)).collect();
            Ok(Report::ok(rows.join("\n") + "\n", json!({ "kind": "tau", "rows": rows })))
        }
        "fields" => {
            let mut text = String::new();
            let mut u_rows = Vec::new();
            let mut v_rows = Vec::new();
            for t in w.t0..w.t1 {
                let (mut us, mut vs) = (Vec::new(), Vec::new());
                for n in w.n0..w.n1 {
                    let (b, v) = sol.fields(t, n)?;
                    us.push(to_pl(&b).comps().to_vec());
                    vs.push(to_pl(&v).comps().to_vec());
                }
                text.push_str(&format!("t={t} u={us:?}\n"));
                u_rows.push(us);
                v_rows.push(vs);
            }
            Ok(Report::ok(text, json!({ "kind": "tau", "u": u_rows, "v": v_rows })))
        }
        other => Err(Error::Argument(format!("unknown emit mode {other:?} (fields, ascii, residual)"))),
    }
}

fn run_verify(s: &VerifySpec) -> Result<Report> {
    let suite: Suite = s.suite.parse()?;
    let reports = run_suite(suite, s.seed);
    let failed = reports.iter().filter(|r| !r.passed).count();
    let mut text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    text.push_str(&format!("{} checks, {failed} failed\n", reports.len()));
    Ok(Report {
        exit_code: if failed == 0 { EXIT_OK } else { EXIT_FAILURE },
        text,
        json: json!({ "kind": "verify", "suite": s.suite, "seed": s.seed, "checks": reports }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evolve_prints_the_rows() {
        let spec: ExperimentSpec =
            serde_json::from_str(r#"{"kind":"evolve","M":3,"row":"111142113111111111111","kappas":["inf","inf"]}"#)
                .unwrap();
        let r = run(&spec);
        assert_eq!(r.exit_code, 0);
        assert_eq!(r.text, "111142113111111111111\n111111421311111111111\n111111114231111111111\n");
    }

    #[test]
    fn empty_state_is_fine() {
        let spec = ExperimentSpec::Evolve(EvolveSpec {
            rank: 2,
            row: String::new(),
            state: None,
            window_start: 0,
            default_capacity: 1,
            kappas: vec![Kappa::Finite(3)],
            carriers: false,
            dialect: "auto".into(),
        });
        let r = run(&spec);
        assert_eq!(r.exit_code, 0, "{}", r.text);
        let c = run(&ExperimentSpec::Conserved(ConservedSpec {
            rank: 2,
            row: String::new(),
            state: None,
            default_capacity: 1,
            kappas: Some(vec![Kappa::Finite(1), Kappa::Infinite]),
            kappa_max: None,
        }));
        assert_eq!(c.exit_code, 0, "{}", c.text);
    }

    #[test]
    fn batch_keeps_order_and_codes() {
        let jsonl = r#"{"kind":"rmatrix","M":2,"pair":"13⊗2"}
{"kind":"nonsense"}

{"kind":"rmatrix","M":2,"check_yb":[1,2,1]}
{"kind":"scatter","M":3,"left":"13","right":"2","theta":"1","kappa":"inf"}"#;
        let reports = run_batch(jsonl);
        assert_eq!(reports.iter().map(|r| r.exit_code).collect::<Vec<_>>(), [0, 2, 0, 0]);
        assert_eq!(reports[0].json["image"], json!(["1", "23"]));
        assert_eq!(reports[3].json["out"], json!(["1", "23"]));
        assert_eq!(reports[3].json["class"], json!("I"));
    }

    #[test]
    fn identical_specs_give_identical_output() {
        let spec = ExperimentSpec::Verify(VerifySpec { suite: "paper-examples".into(), seed: 3 });
        let strip = |v: &Value| {
            let mut v = v.clone();
            for c in v["checks"].as_array_mut().unwrap() {
                c["millis"] = json!(0);
            }
            v
        };
        assert_eq!(strip(&run(&spec).json), strip(&run(&spec).json));
    }

    #[test]
    fn usage_errors() {
        let bad = ExperimentSpec::Rmatrix(RmatrixSpec { rank: 2, pair: Some("15⊗2".into()), oracle: None, check_yb: None });
        assert_eq!(run(&bad).exit_code, EXIT_USAGE);
        let none = ExperimentSpec::Rmatrix(RmatrixSpec { rank: 2, pair: None, oracle: None, check_yb: None });
        assert_eq!(run(&none).exit_code, EXIT_USAGE);
    }
}
