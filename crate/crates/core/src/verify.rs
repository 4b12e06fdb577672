//! Regression and property suites. `bbs verify` and the acceptance harness
//! both run these; every randomized check draws from an explicit seed.

use std::fmt::Display;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::boxball::{canonicalize, evolve_boxball};
use crate::conserved::{energy_kappa, rsk_tableau};
use crate::crystal::{tensor_e, tensor_f, Crystal, Element, TensorWord};
use crate::evolution::{evolve, evolve_infinity, AutomatonState, Kappa};
use crate::format::{parse_row, render_boxes, Dialect};
use crate::piecewise_linear::{pl_carrier_step, to_pl};
use crate::profile::Profile;
use crate::reference::{self, ReferenceRun};
use crate::rmatrix::{combinatorial_r, crystal_graph_r_oracle, energy, yang_baxter_check};
use crate::solitons::{
    classify, extract_solitons, inject, label_from_word, overtakes_within, predicted_displacement,
    predicted_scattering, read_one_soliton, read_one_soliton_from, scatter, ScatterClass, ScatterSetup,
    SolitonPlacement,
};
use crate::tau::{sample_params, TauSolitonParams, TauSolution, Window};

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

impl Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{mark}] {:>3} {} ({} ms): {}", self.id, self.title, self.millis, self.detail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    PaperExamples,
    Full,
}

impl std::str::FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "paper-examples" => Ok(Suite::PaperExamples),
            "full" => Ok(Suite::Full),
            _ => Err(crate::Error::Parse(format!("unknown suite {s:?} (paper-examples, full)"))),
        }
    }
}

type Outcome = std::result::Result<String, String>;

trait Ctx<T> {
    fn ctx(self, what: impl Display) -> std::result::Result<T, String>;
}

impl<T> Ctx<T> for crate::Result<T> {
    fn ctx(self, what: impl Display) -> std::result::Result<T, String> {
        self.map_err(|e| format!("{what}: {e}"))
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn timed(id: String, title: &str, f: impl FnOnce() -> Outcome) -> CheckReport {
    let start = Instant::now();
    let out = f();
    let millis = start.elapsed().as_millis();
    let (passed, detail) = match out {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckReport { id, title: title.to_string(), passed, detail, millis }
}

pub const CRITERIA: [(u8, &str); 11] = [
    (1, "two-soliton run, unit boxes, T_inf^5"),
    (2, "capacity-2 run, T_1^8, boxes and carriers"),
    (3, "double scattering, T_5^4 T_2^5, labels and R'"),
    (4, "winding rule = crystal-graph oracle, M<=3, k,l<=4"),
    (5, "Yang-Baxter, (k,l,m) in {1,2,3}^3, M<=2"),
    (6, "PL step = combinatorial R"),
    (7, "scattering classes I/II/III"),
    (8, "one-soliton velocity on random profiles"),
    (9, "conserved energies and row-insertion tableau"),
    (10, "max-plus solutions = automaton"),
    (11, "crystal and dynamics structure suite"),
];

pub fn criterion(id: u8, seed: u64) -> CheckReport {
    let title = CRITERIA.iter().find(|c| c.0 == id).map(|c| c.1).unwrap_or("unknown criterion");
    let seed = seed.wrapping_add(id as u64);
    timed(id.to_string(), title, || match id {
        1 => c1_two_solitons(),
        2 => c2_capacity_two(),
        3 => c3_double_scattering(),
        4 => c4_oracle(),
        5 => c5_yang_baxter(),
        6 => c6_piecewise_linear(seed),
        7 => c7_classes(seed),
        8 => c8_velocity(seed),
        9 => c9_conserved(seed),
        10 => c10_tau(seed),
        11 => c11_structure(seed),
        _ => Err(format!("no criterion {id}")),
    })
}

pub fn run_suite(suite: Suite, seed: u64) -> Vec<CheckReport> {
    match suite {
        Suite::Full => CRITERIA.iter().map(|&(id, _)| criterion(id, seed)).collect(),
        Suite::PaperExamples => vec![
            criterion(1, seed),
            criterion(2, seed),
            criterion(3, seed),
            timed("R".into(), "R on B_2 x B_1 examples", worked_r_examples),
            timed("1s".into(), "one-soliton placements, readings and steps", worked_one_soliton),
            timed("S".into(), "two scattering readings", worked_scatterings),
            timed("E".into(), "energies and tableaux of the worked runs", || conserved_on_runs(true)),
            timed("A".into(), "two-soliton phase factor", || worked_phase_factor(seed)),
        ],
    }
}

// ---- sampling -------------------------------------------------------------

pub(crate) fn random_element<R: Rng>(rng: &mut R, rank: usize, capacity: u32) -> Element {
    let mut mult = vec![0u32; rank + 1];
    for _ in 0..capacity {
        mult[rng.gen_range(0..=rank)] += 1;
    }
    Element::new(mult).expect("capacity >= 1")
}

pub(crate) fn random_state<R: Rng>(rng: &mut R, rank: usize, max_theta: u32, width: usize) -> AutomatonState {
    let boxes = (0..width)
        .map(|_| {
            let theta = rng.gen_range(1..=max_theta);
            let mut mult = vec![0u32; rank + 1];
            for _ in 0..theta {
                mult[if rng.gen_bool(0.6) { 0 } else { rng.gen_range(1..=rank) }] += 1;
            }
            Element::new(mult).expect("theta >= 1")
        })
        .collect();
    AutomatonState::new(rank, 0, boxes, rng.gen_range(1..=max_theta)).expect("consistent ranks")
}

// ---- worked runs ----------------------------------------------------------

/// Boxes `0..width`, or `None` if a ball sits outside.
fn window_row(s: &AutomatonState, width: usize) -> Option<Vec<Element>> {
    let outside = s.boxes().iter().enumerate().any(|(i, b)| {
        let n = s.window_start() + i as i64;
        (n < 0 || n >= width as i64) && !b.is_vacuum()
    });
    (!outside).then(|| (0..width as i64).map(|n| s.box_at(n)).collect())
}

fn check_rows(run: &ReferenceRun) -> Outcome {
    let rec = run.record().ctx(run.name)?;
    rec.verify().ctx(run.name)?;
    let width = run.row(0).ctx(run.name)?.len();
    ensure!(rec.steps() + 1 == run.rows.len(), "{}: {} steps for {} rows", run.name, rec.steps(), run.rows.len());
    for (t, want) in run.rows.iter().enumerate() {
        let got = window_row(&rec.state(t), width).ok_or_else(|| format!("{}: t={t} left the window", run.name))?;
        let got = render_boxes(&got, Dialect::Auto);
        ensure!(got == *want, "{}: t={t} got {got}, want {want}", run.name);
    }
    Ok(format!("{} rows byte-equal", run.rows.len()))
}

fn c1_two_solitons() -> Outcome {
    check_rows(&reference::two_solitons())
}

fn c2_capacity_two() -> Outcome {
    let run = reference::capacity_two();
    let rows = check_rows(&run)?;
    let rec = run.record().ctx(run.name)?;
    let width = run.row(0).ctx(run.name)?.len();
    let carriers = run.carriers.unwrap_or_default();
    ensure!(rec.space_origin == 0, "record starts at {}", rec.space_origin);
    for (t, want) in carriers.iter().enumerate() {
        let row = &rec.carriers[t];
        ensure!(row[width + 1..].iter().all(Element::is_vacuum), "t={t}: carrier busy past the window");
        let got = render_boxes(&row[..=width], Dialect::Auto);
        ensure!(got == *want, "carriers t={t}: got {got}, want {want}");
    }
    Ok(format!("{rows}, {} carrier rows byte-equal", carriers.len()))
}

fn labels_at(run: &ReferenceRun, t: usize) -> std::result::Result<Vec<Element>, String> {
    let rec = run.record().ctx(run.name)?;
    extract_solitons(&rec.state(t), Some(1)).labels().ok_or_else(|| format!("{}: t={t} not separated", run.name))
}

fn check_labels(run: &ReferenceRun) -> Outcome {
    for &(t, want) in run.labels {
        let got: Vec<String> = labels_at(run, t)?.iter().map(Element::word).collect();
        ensure!(got == want, "{}: labels at t={t} are {got:?}, want {want:?}", run.name);
    }
    Ok(format!("labels {:?}", run.labels))
}

fn c3_double_scattering() -> Outcome {
    let run = reference::double_scattering();
    let rows = check_rows(&run)?;
    check_labels(&run)?;
    let stages: Vec<Vec<Element>> =
        run.labels.iter().map(|&(t, _)| labels_at(&run, t)).collect::<std::result::Result<_, _>>()?;
    for w in stages.windows(2) {
        let (a, b) = predicted_scattering(&w[0][0], &w[0][1]).ctx("R'")?;
        ensure!(vec![a.clone(), b.clone()] == w[1], "R'({}⊗{}) = {a}⊗{b}, observed {}⊗{}", w[0][0], w[0][1], w[1][0], w[1][1]);
    }
    Ok(format!("{rows}; 1223⊗13 → 23⊗1123 → 1223⊗13 agrees with R'"))
}

fn worked_r_examples() -> Outcome {
    for &(a, b, c, d) in reference::R_EXAMPLES {
        let r = combinatorial_r(&Element::from_word(a, 2).ctx(a)?, &Element::from_word(b, 2).ctx(b)?).ctx("R")?;
        ensure!((r.left_out.word(), r.right_out.word()) == (c.into(), d.into()), "R({a}⊗{b}) = {}⊗{}", r.left_out, r.right_out);
    }
    Ok(format!("{} images", reference::R_EXAMPLES.len()))
}

fn one_soliton(word: &str, l0: u32, l1: u32) -> std::result::Result<AutomatonState, String> {
    inject(&SolitonPlacement {
        rank: 3,
        labels: vec![label_from_word(word, 3).ctx(word)?],
        gaps: vec![l0, l1],
        window_start: 0,
        thetas: reference::ONE_SOLITON_THETAS.to_vec(),
        default_capacity: 1,
    })
    .ctx(word)
}

fn worked_one_soliton() -> Outcome {
    for &(word, l0, l1, boxes, n, nk, x, y) in reference::ONE_SOLITON_TABLE {
        let s = one_soliton(word, l0, l1)?;
        let want = parse_row(boxes, 3).ctx(boxes)?;
        ensure!(s.boxes() == want.as_slice(), "{word} ({l0},{l1}) placed as {}", render_boxes(s.boxes(), Dialect::Dotted));
        let r = read_one_soliton(&s).ok_or_else(|| format!("{word} ({l0},{l1}) not readable"))?;
        ensure!((r.n, r.n + r.k as i64, r.x, r.y) == (n, nk, x, y), "{word} ({l0},{l1}) read as {r:?}");
        ensure!(r.label.word() == word, "{word} read back as {}", r.label);
    }
    // T_κ steps through the amplitude-1 placements for every κ, and moves the
    // amplitude-5 soliton by min(κ, 5) letters
    let chain = [(0, 10), (2, 8), (3, 7), (5, 5), (8, 2)];
    for kappa in 1..=7u32 {
        for w in chain.windows(2) {
            let next = evolve(&one_soliton("1", w[0].0, w[0].1)?, kappa).ctx("evolve")?.state;
            ensure!(next.same_configuration(&one_soliton("1", w[1].0, w[1].1)?), "κ={kappa}: {:?} ↦ ?", w[0]);
        }
        let kp = kappa.min(5);
        let next = evolve(&one_soliton("11223", 0, 6)?, kappa).ctx("evolve")?.state;
        ensure!(next.same_configuration(&one_soliton("11223", kp, 6 - kp)?), "κ={kappa}: 11223 step");
    }
    Ok(format!("{} readings, 7 kappas", reference::ONE_SOLITON_TABLE.len()))
}

fn worked_scatterings() -> Outcome {
    let lab = |w: &str| label_from_word(w, 3).ctx(w);
    let cases = [("13", "2", 1, Kappa::Infinite, "1", "23"), ("3", "22", 2, Kappa::Finite(1), "23", "2")];
    for (a, b, theta, kappa, c, d) in cases {
        let out = scatter(&ScatterSetup::homogeneous(lab(a)?, lab(b)?, theta, kappa)).ctx("scatter")?;
        ensure!((out.left_out.word(), out.right_out.word()) == (c.into(), d.into()), "{a}⊗{b} ↦ {}⊗{}", out.left_out, out.right_out);
        let (pa, pb) = predicted_scattering(&lab(a)?, &lab(b)?).ctx("R'")?;
        ensure!((pa.word(), pb.word()) == (c.into(), d.into()), "R'({a}⊗{b}) = {pa}⊗{pb}");
    }
    Ok("13⊗2 ↦ 1⊗23 (θ=1, κ=∞); 3⊗22 ↦ 23⊗2 (θ=2, κ=1)".into())
}

fn worked_phase_factor(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..50 {
        let m = rng.gen_range(1..=4);
        let p = sample_params(&mut rng, 2, m, &[0, 10]);
        let sol = TauSolution::new(&p).ctx("params")?;
        for j in 0..m {
            let want = p.amplitudes[1] as i64 + p.contents[1][j] as i64;
            ensure!(sol.phase_factor(0b11, j) == want, "A((1,1);{j}) for {p:?}");
        }
    }
    Ok("A((1,1);j) = L2 + l2_{j+1} on 50 parameter sets".into())
}

// ---- R matrix -------------------------------------------------------------

fn c4_oracle() -> Outcome {
    let mut pairs = 0usize;
    for m in 1..=3 {
        for k in 1..=4 {
            for l in 1..=4 {
                let table = crystal_graph_r_oracle(k, l, m).ctx("oracle")?;
                for b1 in Element::enumerate(m, k) {
                    for b2 in Element::enumerate(m, l) {
                        let got = combinatorial_r(&b1, &b2).ctx("R")?.image();
                        let want = table.get(&b1, &b2).ok_or_else(|| format!("oracle misses {b1}⊗{b2}"))?;
                        ensure!(&got == want, "M={m}: R({b1}⊗{b2}) = {}⊗{}, oracle {}⊗{}", got.0, got.1, want.0, want.1);
                        pairs += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} pairs, 0 mismatches"))
}

fn c5_yang_baxter() -> Outcome {
    let mut triples = 0;
    for m in 1..=2 {
        for k in 1..=3 {
            for l in 1..=3 {
                for n in 1..=3 {
                    ensure!(yang_baxter_check(k, l, n, m).ctx("YB")?, "fails for M={m}, (k,l,m)=({k},{l},{n})");
                    triples += 1;
                }
            }
        }
    }
    Ok(format!("{triples} (M,k,l,m) cases"))
}

fn c6_piecewise_linear(seed: u64) -> Outcome {
    let agree = |b: &Element, c: &Element| -> std::result::Result<bool, String> {
        let (u, v) = pl_carrier_step(&to_pl(b), &to_pl(c)).ctx("PL")?;
        let r = combinatorial_r(c, b).ctx("R")?;
        Ok((u, v) == (to_pl(&r.left_out), to_pl(&r.right_out)))
    };
    let mut exhaustive = 0;
    for m in 1..=3 {
        for theta in 1..=4 {
            for kappa in 1..=4 {
                for b in Element::enumerate(m, theta) {
                    for c in Element::enumerate(m, kappa) {
                        ensure!(agree(&b, &c)?, "carrier {c}, box {b}");
                        exhaustive += 1;
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        let m = rng.gen_range(1..=4);
        let (theta, kappa) = (rng.gen_range(1..=12), rng.gen_range(1..=12));
        let b = random_element(&mut rng, m, theta);
        let c = random_element(&mut rng, m, kappa);
        ensure!(agree(&b, &c)?, "carrier {c}, box {b}");
    }
    Ok(format!("{exhaustive} exhaustive + 10000 random vertices"))
}

// ---- solitons -------------------------------------------------------------

fn sample_class<R: Rng>(rng: &mut R, want: ScatterClass) -> (usize, u32, u32, u32, Kappa) {
    loop {
        let m = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=4);
        let l = rng.gen_range(k + 1..=6);
        let theta = rng.gen_range(1..=4);
        let kappa = if rng.gen_bool(0.2) { Kappa::Infinite } else { Kappa::Finite(rng.gen_range(1..=7)) };
        if classify(l, k, theta, kappa).ok() == Some(want) {
            return (m, l, k, theta, kappa);
        }
    }
}

fn c7_classes(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (class, count) in [(ScatterClass::I, 100), (ScatterClass::II, 100)] {
        for case in 0..count {
            let (m, l, k, theta, kappa) = sample_class(&mut rng, class);
            let big = random_element(&mut rng, m - 1, l);
            let small = random_element(&mut rng, m - 1, k);
            let (left, right) = if class == ScatterClass::I { (big, small) } else { (small, big) };
            let setup = ScatterSetup::homogeneous(left.clone(), right.clone(), theta, kappa);
            let out = scatter(&setup).ctx(format!("class {class:?} case {case}"))?;
            let want = predicted_scattering(&left, &right).ctx("R'")?;
            ensure!(
                (out.left_out.clone(), out.right_out.clone()) == want,
                "class {class:?}, M={m}, θ={theta}, κ={kappa}: {left}⊗{right} ↦ {}⊗{}, R' gives {}⊗{}",
                out.left_out,
                out.right_out,
                want.0,
                want.1
            );
        }
    }
    for case in 0..50 {
        let (m, l, k, theta, kappa) = sample_class(&mut rng, ScatterClass::III);
        let big = random_element(&mut rng, m - 1, l);
        let small = random_element(&mut rng, m - 1, k);
        let (left, right) = if case % 2 == 0 { (big, small) } else { (small, big) };
        let setup = ScatterSetup::homogeneous(left.clone(), right.clone(), theta, kappa);
        ensure!(
            !overtakes_within(&setup, 50).ctx("class III")?,
            "class III overtakes: M={m}, θ={theta}, κ={kappa}, {left}⊗{right}"
        );
    }
    Ok("100 class I = R', 100 class II = R', 50 class III without overtaking".into())
}

fn c8_velocity(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..200 {
        let m = rng.gen_range(1..=3);
        let l = rng.gen_range(1..=5);
        let label = random_element(&mut rng, m - 1, l);
        let thetas: Vec<u32> = (0..30).map(|_| rng.gen_range(1..=4)).collect();
        let total: u32 = thetas.iter().sum();
        let l0 = rng.gen_range(0..=12);
        let p = SolitonPlacement {
            rank: m,
            labels: vec![label.clone()],
            gaps: vec![l0, total - l0 - l],
            window_start: 0,
            thetas,
            default_capacity: rng.gen_range(1..=4),
        };
        let s = inject(&p).ctx("inject")?;
        let kappa = rng.gen_range(1..=8);
        let r = read_one_soliton_from(&s, 0).ok_or_else(|| format!("case {case}: unreadable"))?;
        let next = evolve(&s, kappa).ctx("evolve")?.state;
        let r2 = read_one_soliton_from(&next, 0).ok_or_else(|| format!("case {case}: no longer one soliton"))?;
        let predicted = predicted_displacement(&s, &r, kappa);
        ensure!(r2.x - r.x == predicted, "case {case}: moved {} but predicted {predicted} (κ={kappa}, {p:?})", r2.x - r.x);
        ensure!(r2.label == label && r.label == label, "case {case}: label changed");
    }
    Ok("200 random profiles".into())
}

// ---- conserved quantities ---------------------------------------------------

fn conserved_on_runs(check_values: bool) -> Outcome {
    for run in reference::all() {
        let rec = run.record().ctx(run.name)?;
        let kmax = 8;
        let first: Vec<u64> =
            (1..=kmax).map(|k| energy_kappa(&rec.state(0), Kappa::Finite(k))).collect::<crate::Result<_>>().ctx("E")?;
        let tab = rsk_tableau(&rec.state(0)).ctx("tableau")?;
        if check_values {
            let want: Vec<u64> = (1..=kmax).map(|k| run.energy(k)).collect();
            ensure!(first == want, "{}: E = {first:?}, want {want:?}", run.name);
            ensure!(tab == run.tableau(), "{}: tableau {tab}, want {}", run.name, run.tableau());
        }
        for t in 1..=rec.steps() {
            let s = rec.state(t);
            let e: Vec<u64> = (1..=kmax).map(|k| energy_kappa(&s, Kappa::Finite(k))).collect::<crate::Result<_>>().ctx("E")?;
            ensure!(e == first, "{}: E changes at t={t}: {e:?}", run.name);
            ensure!(rsk_tableau(&s).ctx("tableau")? == tab, "{}: tableau changes at t={t}", run.name);
        }
    }
    Ok("E_1..E_8 and tableaux constant and as quoted on all three runs".into())
}

fn c9_conserved(seed: u64) -> Outcome {
    let runs = conserved_on_runs(true)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..100 {
        let (rank, width) = (rng.gen_range(1..=3), rng.gen_range(1..12));
        let mut s = random_state(&mut rng, rank, 3, width);
        let kmax = s.ball_count() + 1;
        let energies = |s: &AutomatonState| -> std::result::Result<Vec<u64>, String> {
            (1..=kmax).map(|k| energy_kappa(s, Kappa::Finite(k))).collect::<crate::Result<_>>().ctx("E")
        };
        let (e0, tab) = (energies(&s)?, rsk_tableau(&s).ctx("tableau")?);
        for _ in 0..6 {
            let kappa = rng.gen_range(1..=6);
            s = evolve(&s, kappa).ctx("evolve")?.state;
            ensure!(energies(&s)? == e0, "case {case}: E changes under T_{kappa}");
            ensure!(rsk_tableau(&s).ctx("tableau")? == tab, "case {case}: tableau changes under T_{kappa}");
        }
    }
    Ok(format!("{runs}; 100 random states x 6 random steps"))
}

// ---- tau ------------------------------------------------------------------

fn c10_tau(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let window = Window { t0: 0, t1: 30, n0: -3, n1: 200 };
    let mut collisions = 0;
    for n in 1..=2usize {
        for case in 0..50 {
            let m = rng.gen_range(1..=3);
            let positions: Vec<i64> = (0..n).map(|i| 2 + 12 * i as i64 + rng.gen_range(0..4)).collect();
            let mut p = sample_params(&mut rng, n, m, &positions);
            if case % 2 == 1 {
                // fast carriers so that more pairs meet inside the window
                p.kappa = Profile::constant(Kappa::Infinite);
            }
            let sol = TauSolution::new(&p).ctx("params")?;
            let residual = sol.pl_residual(&window);
            ensure!(residual == 0, "N={n} case {case}: residual {residual} for {p:?}");
            if let Some((t, x)) = sol.automaton_mismatch(&window).ctx(format!("N={n} case {case}"))? {
                return Err(format!("N={n} case {case}: automaton differs at t={t}, n={x} for {p:?}"));
            }
            if n == 2 {
                let order = |t: i64| -> Option<Vec<u32>> {
                    let s = sol.state(t, window.n0, window.n1).ok()?;
                    Some(extract_solitons(&s, Some(1)).solitons()?.iter().map(|r| r.amplitude).collect())
                };
                let (a, b) = (order(window.t0), order(window.t1 - 1));
                if a.is_some() && b.is_some() && a.as_ref().map(|v| v.len()) == Some(2) && a != b {
                    collisions += 1;
                }
            }
        }
    }
    for case in 0..10u32 {
        let l1 = 2 + case % 4;
        let l2 = 1 + (case / 4) % (l1 - 1);
        let p = TauSolitonParams {
            n: 2,
            m: 1,
            amplitudes: vec![l1, l2],
            contents: vec![vec![l1], vec![l2]],
            phases: vec![0, -30],
            theta: Profile::constant(1),
            kappa: Profile::constant(Kappa::Infinite),
        };
        let sol = TauSolution::new(&p).ctx("params")?;
        let amps = |t: i64| -> std::result::Result<Vec<u32>, String> {
            let s = sol.state(t, -10, 400).ctx("fields")?;
            let mut a: Vec<u32> = extract_solitons(&s, None)
                .solitons()
                .ok_or_else(|| format!("t={t}: not separated"))?
                .iter()
                .map(|r| r.amplitude)
                .collect();
            a.sort_unstable();
            Ok(a)
        };
        ensure!(amps(0)? == vec![l2, l1], "M=1 amplitudes before: {:?}", amps(0)?);
        ensure!(amps(70)? == vec![l2, l1], "M=1 amplitudes after: {:?}", amps(70)?);
    }
    Ok(format!(
        "N=1 and N=2, 50 sets each on a 30x203 window ({collisions} N=2 sets collide inside it); residual 0; M=1 amplitudes kept"
    ))
}

// ---- structure --------------------------------------------------------------

fn c11_structure(seed: u64) -> Outcome {
    let mut notes = Vec::new();

    // partial inverses and string lengths on single elements
    let mut count = 0;
    for m in 1..=3 {
        for k in 1..=4 {
            for b in Element::enumerate(m, k) {
                for i in 0..=m {
                    if let Some(f) = b.lower(i).ctx("f")? {
                        ensure!(f.raise(i).ctx("e")? == Some(b.clone()), "e_{i} f_{i} {b} != {b}");
                    }
                    if let Some(e) = b.raise(i).ctx("e")? {
                        ensure!(e.lower(i).ctx("f")? == Some(b.clone()), "f_{i} e_{i} {b} != {b}");
                    }
                    ensure!(b.epsilon(i).ctx("eps")? == string_length(&b, i, true)?, "eps_{i}({b})");
                    ensure!(b.phi(i).ctx("phi")? == string_length(&b, i, false)?, "phi_{i}({b})");
                    count += 1;
                }
            }
        }
    }
    notes.push(format!("{count} element checks"));

    // pairs: partial inverses, string lengths, equivariance of R, energy axiom
    let mut count = 0;
    for (m, kmax) in [(1, 4), (2, 3), (3, 2)] {
        for k in 1..=kmax {
            for l in 1..=kmax {
                for b1 in Element::enumerate(m, k) {
                    for b2 in Element::enumerate(m, l) {
                        let w = TensorWord::pair(b1.clone(), b2.clone()).ctx("pair")?;
                        let r = combinatorial_r(&b1, &b2).ctx("R")?;
                        let rw = TensorWord::pair(r.left_out.clone(), r.right_out.clone()).ctx("pair")?;
                        for i in 0..=m {
                            if let Some(f) = tensor_f(i, &w).ctx("f")? {
                                ensure!(tensor_e(i, &f).ctx("e")? == Some(w.clone()), "e_{i} f_{i} on {w}");
                            }
                            ensure!(w.epsilon(i).ctx("eps")? == string_length(&w, i, true)?, "eps_{i}({w})");
                            ensure!(w.phi(i).ctx("phi")? == string_length(&w, i, false)?, "phi_{i}({w})");
                            for raise in [true, false] {
                                let moved = if raise { tensor_e(i, &w) } else { tensor_f(i, &w) }.ctx("op")?;
                                let moved_image = if raise { tensor_e(i, &rw) } else { tensor_f(i, &rw) }.ctx("op")?;
                                let image_of_moved = match &moved {
                                    Some(x) => Some(r_pair(x)?),
                                    None => None,
                                };
                                ensure!(image_of_moved == moved_image, "R does not commute with op {i} on {w}");
                            }
                            if let Some(ew) = tensor_e(i, &w).ctx("e")? {
                                let h_new = energy(&ew.factors()[0], &ew.factors()[1]).ctx("H")?;
                                let left_before = b1.phi(0).ctx("phi")? >= b2.epsilon(0).ctx("eps")?;
                                let left_after = r.left_out.phi(0).ctx("phi")? >= r.right_out.epsilon(0).ctx("eps")?;
                                let want = match (i, left_before, left_after) {
                                    (0, true, true) => r.energy() + 1,
                                    (0, false, false) => r.energy() - 1,
                                    _ => r.energy(),
                                };
                                ensure!(h_new == want, "energy axiom: e_{i} on {w} gives H={h_new}, want {want}");
                            }
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    notes.push(format!("{count} pair checks"));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..150 {
        let (rank, width) = (rng.gen_range(1..=3), rng.gen_range(1..12));
        let s = random_state(&mut rng, rank, 3, width);
        let (k1, k2) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let a = evolve(&evolve(&s, k1).ctx("T")?.state, k2).ctx("T")?.state;
        let b = evolve(&evolve(&s, k2).ctx("T")?.state, k1).ctx("T")?.state;
        ensure!(a.same_configuration(&b), "case {case}: T_{k1} T_{k2} != T_{k2} T_{k1}");
        let inf = evolve_infinity(&s).ctx("T_inf")?;
        ensure!(inf.same_configuration(&evolve_boxball(&s)), "case {case}: ball moves differ from T_inf");
        let lhs = canonicalize(&evolve_boxball(&s)).ctx("canonical")?;
        let rhs = evolve_boxball(&canonicalize(&s).ctx("canonical")?);
        ensure!(lhs.same_configuration(&rhs), "case {case}: canonical system does not commute");
    }
    notes.push("150 random states for commutativity, factorization, canonical system".into());
    Ok(notes.join("; "))
}

fn r_pair(w: &TensorWord) -> std::result::Result<TensorWord, String> {
    let f = w.factors();
    let (a, b) = combinatorial_r(&f[0], &f[1]).ctx("R")?.image();
    TensorWord::pair(a, b).ctx("pair")
}

/// Number of raising (or lowering) steps before the zero element.
fn string_length<C: Crystal + Clone>(b: &C, i: usize, raise: bool) -> std::result::Result<u32, String> {
    let mut cur = b.clone();
    let mut n = 0;
    loop {
        let next = if raise { cur.raise(i) } else { cur.lower(i) };
        match next.ctx("op")? {
            Some(x) => {
                cur = x;
                n += 1;
            }
            None => return Ok(n),
        }
    }
}
