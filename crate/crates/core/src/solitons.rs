//! Solitons: labels in the rank-lowered crystal `B'_k`, their embedding into
//! states, parsing of states back into solitons, and two-soliton scattering.
//!
//! Box positions in readings are 1-based from an origin box (by default the
//! first box of the window), so the coordinate is
//! `x = θ_1 + ... + θ_n - t` counted from that origin.

use crate::crystal::{Element, TensorWord};
use crate::error::{arg, Error, Result};
use crate::evolution::{evolve, AutomatonState, Kappa};
use crate::profile::Profile;
use crate::rmatrix::combinatorial_r;

/// An element of `B'_k`: letters `1..=M`, stored with rank `M-1`.
pub type SolitonLabel = Element;

pub fn label_from_word(word: &str, rank: usize) -> Result<SolitonLabel> {
    if rank == 0 {
        return arg("automaton rank M must be >= 1");
    }
    Element::from_word(word, rank - 1)
}

/// `ι_k`: the label word reversed with every letter raised by one, as a
/// sequence of `B_1` letters.
pub fn embed_label(label: &SolitonLabel) -> Vec<usize> {
    let mut letters: Vec<usize> = label.letters().map(|m| m + 1).collect();
    letters.reverse();
    letters
}

/// `ι_k(label)` as a tensor word in `(B_1)^{⊗k}` of rank `M`.
pub fn embed_label_word(label: &SolitonLabel) -> Result<TensorWord> {
    let rank = label.rank() + 1;
    let factors = embed_label(label)
        .into_iter()
        .map(|m| Element::from_letters([m], rank))
        .collect::<Result<Vec<_>>>()?;
    TensorWord::new(factors)
}

/// Data of `ι^{(L_0,...,L_N)}_{k_1,...,k_N}(c_1 ⊗ ... ⊗ c_N)` on a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolitonPlacement {
    pub rank: usize,
    pub labels: Vec<SolitonLabel>,
    /// `L_0, ..., L_N`: runs of vacant `B_1` letters.
    pub gaps: Vec<u32>,
    pub window_start: i64,
    pub thetas: Vec<u32>,
    pub default_capacity: u32,
}

impl SolitonPlacement {
    /// Places the labels on a capacity profile starting at its first box,
    /// with `inner_gaps = (L_0, ..., L_{N-1})`; the window is the profile's
    /// explicit range, lengthened if needed, and `L_N` fills the rest.
    pub fn on_profile(
        rank: usize,
        labels: Vec<SolitonLabel>,
        inner_gaps: &[u32],
        theta: &Profile<u32>,
    ) -> Result<SolitonPlacement> {
        if inner_gaps.len() != labels.len() {
            return arg("need one leading gap per soliton");
        }
        let units: u64 = inner_gaps.iter().map(|&g| g as u64).sum::<u64>()
            + labels.iter().map(|c| c.capacity() as u64).sum::<u64>();
        let mut thetas = Vec::new();
        let mut total = 0u64;
        let mut n = theta.start;
        while total < units || n < theta.end() {
            let th = theta.at(n);
            if th == 0 {
                return arg("capacities must be >= 1");
            }
            thetas.push(th);
            total += th as u64;
            n += 1;
        }
        let mut gaps = inner_gaps.to_vec();
        gaps.push((total - units) as u32);
        Ok(SolitonPlacement { rank, labels, gaps, window_start: theta.start, thetas, default_capacity: theta.default })
    }
}

/// `θ̂ ∘ ι`: lays the `B_1` letters out in order and sorts each box.
pub fn inject(p: &SolitonPlacement) -> Result<AutomatonState> {
    if p.gaps.len() != p.labels.len() + 1 {
        return arg(format!("{} solitons need {} gaps, got {}", p.labels.len(), p.labels.len() + 1, p.gaps.len()));
    }
    if let Some(c) = p.labels.iter().find(|c| c.rank() + 1 != p.rank) {
        return Err(Error::RankMismatch { left: p.rank - 1, right: c.rank() });
    }
    let mut units: Vec<usize> = Vec::new();
    for (i, gap) in p.gaps.iter().enumerate() {
        units.extend(std::iter::repeat_n(1, *gap as usize));
        if let Some(c) = p.labels.get(i) {
            units.extend(embed_label(c));
        }
    }
    let capacity: usize = p.thetas.iter().map(|&t| t as usize).sum();
    if units.len() != capacity {
        return arg(format!("placement has {} letters for a window of capacity {capacity}", units.len()));
    }
    let mut rest = units.as_slice();
    let boxes = p
        .thetas
        .iter()
        .map(|&th| {
            let (head, tail) = rest.split_at(th as usize);
            rest = tail;
            Element::from_letters(head.iter().copied(), p.rank)
        })
        .collect::<Result<Vec<_>>>()?;
    AutomatonState::new(p.rank, p.window_start, boxes, p.default_capacity)
}

/// The data `(n, k, s, t)` of a soliton and its derived quantities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolitonReading {
    /// Absolute index of the first box `b_n`.
    pub box_index: i64,
    /// 1-based position of `b_n` from the origin.
    pub n: i64,
    pub k: usize,
    pub s: u32,
    pub t: u32,
    pub x: i64,
    pub y: u32,
    pub amplitude: u32,
    pub label: SolitonLabel,
}

impl SolitonReading {
    /// Absolute index of `b_{n+k}`.
    pub fn end_index(&self) -> i64 {
        self.box_index + self.k as i64
    }

    /// Absolute index of the last box holding a letter of this soliton.
    pub fn last_occupied(&self) -> i64 {
        if self.s > 0 {
            self.end_index()
        } else {
            self.end_index() - 1
        }
    }
}

fn balls_descending(b: &Element) -> impl Iterator<Item = usize> + '_ {
    b.letters().filter(|&m| m > 1).collect::<Vec<_>>().into_iter().rev()
}

/// Reads a soliton whose first box is `start` (which must not be vacuum).
fn read_at(s: &AutomatonState, start: i64, origin: i64) -> std::result::Result<SolitonReading, String> {
    let first = s.box_at(start);
    let t = first.ball_count();
    let mut k = 1;
    while s.box_at(start + k as i64).count(1) == 0 {
        k += 1;
    }
    let end = start + k as i64;
    let last = s.box_at(end);
    let sres = last.ball_count();

    let mut letters: Vec<usize> = Vec::new();
    let mut prev_min = usize::MAX;
    for n in start..=end {
        let b = s.box_at(n);
        let balls: Vec<usize> = balls_descending(&b).collect();
        if let (Some(&top), true) = (balls.first(), prev_min != usize::MAX) {
            if top > prev_min {
                return Err(format!("box {n} ({b}) breaks the descending soliton pattern"));
            }
        }
        if let Some(&low) = balls.last() {
            prev_min = low;
        }
        letters.extend(balls);
    }
    let rank = s.rank();
    let label = Element::from_letters(letters.iter().map(|m| m - 1), rank - 1).map_err(|e| e.to_string())?;
    let x = (origin..=start).map(|j| s.theta(j) as i64).sum::<i64>() - t as i64;
    let y = t + (start + 1..end).map(|j| s.theta(j)).sum::<u32>();
    Ok(SolitonReading {
        box_index: start,
        n: start - origin + 1,
        k,
        s: sres,
        t,
        x,
        y,
        amplitude: y + sres,
        label,
    })
}

fn first_occupied(s: &AutomatonState, from: i64) -> Option<i64> {
    (from.max(s.window_start())..s.window_end()).find(|&n| !s.box_at(n).is_vacuum())
}

/// The reading of a 1-soliton state, with positions counted from the first
/// box of the window. `None` for anything else, including the vacuum.
pub fn read_one_soliton(s: &AutomatonState) -> Option<SolitonReading> {
    read_one_soliton_from(s, s.window_start())
}

pub fn read_one_soliton_from(s: &AutomatonState, origin: i64) -> Option<SolitonReading> {
    let start = first_occupied(s, s.window_start())?;
    let r = read_at(s, start, origin).ok()?;
    first_occupied(s, r.end_index() + 1).is_none().then_some(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extraction {
    Solitons(Vec<SolitonReading>),
    NotAsymptotic(String),
}

impl Extraction {
    pub fn solitons(&self) -> Option<&[SolitonReading]> {
        match self {
            Extraction::Solitons(v) => Some(v),
            Extraction::NotAsymptotic(_) => None,
        }
    }

    pub fn labels(&self) -> Option<Vec<SolitonLabel>> {
        self.solitons().map(|v| v.iter().map(|r| r.label.clone()).collect())
    }
}

/// Splits a state into separated solitons, left to right. Neighbouring
/// solitons must be at least `threshold` vacuum boxes apart; the default is
/// `2 * (largest amplitude) + 2`.
pub fn extract_solitons(s: &AutomatonState, threshold: Option<usize>) -> Extraction {
    let mut out: Vec<SolitonReading> = Vec::new();
    let mut from = s.window_start();
    while let Some(start) = first_occupied(s, from) {
        match read_at(s, start, s.window_start()) {
            Ok(r) => {
                from = r.end_index() + 1;
                out.push(r);
            }
            Err(why) => return Extraction::NotAsymptotic(why),
        }
    }
    let need = threshold.unwrap_or_else(|| 2 * out.iter().map(|r| r.amplitude as usize).max().unwrap_or(0) + 2);
    for pair in out.windows(2) {
        let gap = (pair[1].box_index - pair[0].last_occupied() - 1) as usize;
        if gap < need {
            return Extraction::NotAsymptotic(format!(
                "solitons at boxes {} and {} are only {gap} vacuum boxes apart (need {need})",
                pair[0].box_index, pair[1].box_index
            ));
        }
    }
    Extraction::Solitons(out)
}

/// Predicted `x(T_κ p) - x(p)` for a 1-soliton state.
pub fn velocity_check(s: &AutomatonState, kappa: u32) -> Result<i64> {
    let r = read_one_soliton(s).ok_or_else(|| Error::Argument("not a 1-soliton state".into()))?;
    Ok(predicted_displacement(s, &r, kappa))
}

pub fn predicted_displacement(s: &AutomatonState, r: &SolitonReading, kappa: u32) -> i64 {
    let (kappa, l) = (kappa as i64, r.amplitude as i64);
    if kappa < r.y as i64 {
        kappa
    } else {
        kappa.min(l) + (s.theta(r.end_index()) as i64 - l).max(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ScatterClass {
    I,
    II,
    III,
}

/// Scattering regime for amplitudes `l > k` in a homogeneous system.
pub fn classify(l: u32, k: u32, theta: u32, kappa: Kappa) -> Result<ScatterClass> {
    if l <= k {
        return arg(format!("classification expects l > k, got l={l}, k={k}"));
    }
    let min_l_kappa = match kappa {
        Kappa::Finite(c) => l.min(c),
        Kappa::Infinite => l,
    };
    let max_k_kappa = match kappa {
        Kappa::Finite(c) => k.max(c),
        Kappa::Infinite => u32::MAX,
    };
    Ok(if min_l_kappa > k.max(theta) {
        ScatterClass::I
    } else if l.min(theta) > max_k_kappa {
        ScatterClass::II
    } else {
        ScatterClass::III
    })
}

/// A two-soliton collision experiment.
#[derive(Clone, Debug)]
pub struct ScatterSetup {
    pub rank: usize,
    /// Label of the soliton placed on the left.
    pub left: SolitonLabel,
    pub right: SolitonLabel,
    pub theta: Profile<u32>,
    /// `κ_t` for the step `t -> t+1`.
    pub kappa: Profile<Kappa>,
    /// Vacant letters between the two solitons initially.
    pub gap: Option<u32>,
    pub threshold: Option<usize>,
    pub max_steps: usize,
    pub keep_trace: bool,
}

impl ScatterSetup {
    pub fn homogeneous(left: SolitonLabel, right: SolitonLabel, theta: u32, kappa: Kappa) -> ScatterSetup {
        ScatterSetup {
            rank: left.rank() + 1,
            left,
            right,
            theta: Profile::constant(theta),
            kappa: Profile::constant(kappa),
            gap: None,
            threshold: None,
            max_steps: 10_000,
            keep_trace: false,
        }
    }

    fn initial_state(&self) -> Result<AutomatonState> {
        let amp = self.left.capacity().max(self.right.capacity());
        let theta_max = self.theta.values.iter().copied().chain([self.theta.default]).max().unwrap();
        let gap = self.gap.unwrap_or((2 * amp + 4) * theta_max);
        let placement =
            SolitonPlacement::on_profile(self.rank, vec![self.left.clone(), self.right.clone()], &[0, gap], &self.theta)?;
        inject(&placement)
    }
}

#[derive(Clone, Debug)]
pub struct ScatterOutcome {
    pub left_out: SolitonLabel,
    pub right_out: SolitonLabel,
    pub overtaken: bool,
    /// Steps until the separated pair was seen twice in a row.
    pub steps: usize,
    pub trace: Vec<AutomatonState>,
}

fn two_solitons(s: &AutomatonState, threshold: Option<usize>) -> Option<(SolitonReading, SolitonReading)> {
    match extract_solitons(s, threshold) {
        Extraction::Solitons(v) if v.len() == 2 => {
            let mut it = v.into_iter();
            Some((it.next().unwrap(), it.next().unwrap()))
        }
        _ => None,
    }
}

/// Evolves the two-soliton state until the solitons have exchanged order and
/// the outgoing labels are the same on two consecutive steps.
pub fn scatter(setup: &ScatterSetup) -> Result<ScatterOutcome> {
    let (l, k) = (setup.left.capacity(), setup.right.capacity());
    if l == k {
        return arg("scatter needs two different amplitudes");
    }
    let mut state = setup.initial_state()?;
    if two_solitons(&state, setup.threshold).is_none() {
        return arg("initial placement is not an asymptotic 2-soliton state");
    }
    let mut trace = Vec::new();
    if setup.keep_trace {
        trace.push(state.clone());
    }
    let mut previous: Option<(SolitonLabel, SolitonLabel)> = None;
    for t in 0..setup.max_steps {
        let kappa = setup.kappa.at(t as i64).resolve(&state);
        state = evolve(&state, kappa)?.state;
        if setup.keep_trace {
            trace.push(state.clone());
        }
        let current = two_solitons(&state, setup.threshold)
            .filter(|(a, b)| a.amplitude == k && b.amplitude == l)
            .map(|(a, b)| (a.label, b.label));
        if let Some((left_out, right_out)) = current.clone().filter(|_| current == previous) {
            return Ok(ScatterOutcome { left_out, right_out, overtaken: true, steps: t + 1, trace });
        }
        previous = current;
    }
    Err(Error::Timeout { steps: setup.max_steps })
}

/// Runs `steps` steps and reports whether the two solitons ever appear
/// separated in exchanged order.
pub fn overtakes_within(setup: &ScatterSetup, steps: usize) -> Result<bool> {
    let (l, k) = (setup.left.capacity(), setup.right.capacity());
    let mut state = setup.initial_state()?;
    for t in 0..steps {
        let kappa = setup.kappa.at(t as i64).resolve(&state);
        state = evolve(&state, kappa)?.state;
        if let Some((a, b)) = two_solitons(&state, setup.threshold) {
            if l != k && a.amplitude == k && b.amplitude == l {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// The scattering rule predicted for a pair of labels: the rank-`(M-1)`
/// combinatorial R.
pub fn predicted_scattering(left: &SolitonLabel, right: &SolitonLabel) -> Result<(SolitonLabel, SolitonLabel)> {
    if left.rank() == 0 {
        return Ok((right.clone(), left.clone()));
    }
    Ok(combinatorial_r(left, right)?.image())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{tensor_e, tensor_f, Crystal};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const THETA: [u32; 6] = [1, 2, 1, 2, 3, 2];

    fn one_soliton(word: &str, l0: u32, l1: u32) -> AutomatonState {
        let p = SolitonPlacement {
            rank: 3,
            labels: vec![label_from_word(word, 3).unwrap()],
            gaps: vec![l0, l1],
            window_start: 0,
            thetas: THETA.to_vec(),
            default_capacity: 1,
        };
        inject(&p).unwrap()
    }

    fn words(s: &AutomatonState) -> Vec<String> {
        s.boxes().iter().map(Element::word).collect()
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(words(&one_soliton("11223", 0, 6)), ["4", "33", "2", "12", "111", "11"]);
        assert_eq!(words(&one_soliton("1", 3, 7)), ["1", "11", "2", "11", "111", "11"]);
        assert_eq!(words(&one_soliton("11223", 1, 5)), ["1", "34", "3", "22", "111", "11"]);
        assert_eq!(words(&one_soliton("11223", 5, 1)), ["1", "11", "1", "14", "233", "12"]);
        let empty = SolitonPlacement {
            rank: 2,
            labels: vec![],
            gaps: vec![4],
            window_start: 0,
            thetas: vec![1, 3],
            default_capacity: 1,
        };
        assert!(inject(&empty).unwrap().is_vacuum());
        let bad = SolitonPlacement { gaps: vec![3], ..empty };
        assert!(inject(&bad).is_err());
    }

    #[test]
    fn readings_of_the_table() {
        let cases = [
            ("11223", 0, 6, 1, 4, 0, 4),
            ("11223", 1, 5, 2, 5, 1, 5),
            ("11223", 2, 4, 2, 5, 2, 4),
            ("11223", 3, 3, 3, 5, 3, 3),
            ("11223", 4, 2, 4, 6, 4, 5),
            ("11223", 5, 1, 4, 6, 5, 4),
            ("1", 0, 10, 1, 2, 0, 1),
            ("1", 2, 8, 2, 3, 2, 1),
            ("1", 3, 7, 3, 4, 3, 1),
            ("1", 5, 5, 4, 5, 5, 1),
            ("1", 8, 2, 5, 6, 8, 1),
        ];
        for (word, l0, l1, n, nk, x, y) in cases {
            let r = read_one_soliton(&one_soliton(word, l0, l1)).unwrap();
            assert_eq!((r.n, r.n + r.k as i64, r.x, r.y as i64), (n, nk, x, y), "{word} ({l0},{l1})");
            assert_eq!(r.label.word(), word);
            assert_eq!(r.amplitude as usize, word.len());
        }
        assert!(read_one_soliton(&AutomatonState::vacuum(3, 0, &THETA, 1).unwrap()).is_none());
    }

    #[test]
    fn non_injective_placements_coincide() {
        assert_eq!(one_soliton("1", 1, 9), one_soliton("1", 2, 8));
        assert_eq!(one_soliton("1", 6, 4), one_soliton("1", 8, 2));
    }

    #[test]
    fn example_evolutions() {
        let chain = [(0, 10), (2, 8), (3, 7), (5, 5), (8, 2)];
        for kappa in 1..=6 {
            for w in chain.windows(2) {
                let s = one_soliton("1", w[0].0, w[0].1);
                let next = evolve(&s, kappa).unwrap().state;
                assert!(next.same_configuration(&one_soliton("1", w[1].0, w[1].1)));
            }
            let s = one_soliton("11223", 0, 6);
            let kp = kappa.min(5);
            let next = evolve(&s, kappa).unwrap().state;
            assert!(next.same_configuration(&one_soliton("11223", kp, 6 - kp)), "kappa {kappa}");
            let r = read_one_soliton(&s).unwrap();
            let r2 = read_one_soliton(&next.padded(0, next.window_end()).unwrap()).unwrap();
            assert_eq!(r2.x - r.x, velocity_check(&s, kappa).unwrap());
        }
    }

    #[test]
    fn classification() {
        assert_eq!(classify(2, 1, 1, Kappa::Infinite).unwrap(), ScatterClass::I);
        assert_eq!(classify(2, 1, 2, Kappa::Finite(1)).unwrap(), ScatterClass::II);
        assert_eq!(classify(3, 1, 3, Kappa::Finite(2)).unwrap(), ScatterClass::II);
        assert_eq!(classify(3, 2, 3, Kappa::Finite(3)).unwrap(), ScatterClass::III);
        assert!(classify(1, 2, 1, Kappa::Infinite).is_err());
    }

    #[test]
    fn scatter_examples() {
        let lab = |w| label_from_word(w, 3).unwrap();
        let out = scatter(&ScatterSetup::homogeneous(lab("13"), lab("2"), 1, Kappa::Infinite)).unwrap();
        assert_eq!((out.left_out.word(), out.right_out.word()), ("1".into(), "23".into()));
        let out = scatter(&ScatterSetup::homogeneous(lab("3"), lab("22"), 2, Kappa::Finite(1))).unwrap();
        assert_eq!((out.left_out.word(), out.right_out.word()), ("23".into(), "2".into()));
        let same = ScatterSetup::homogeneous(lab("3"), lab("2"), 1, Kappa::Infinite);
        assert!(scatter(&same).is_err());
        let stuck = ScatterSetup { max_steps: 3, ..ScatterSetup::homogeneous(lab("13"), lab("2"), 1, Kappa::Infinite) };
        assert!(matches!(scatter(&stuck), Err(Error::Timeout { steps: 3 })));
    }

    #[test]
    fn highest_pairs() {
        for m in 2..=4 {
            for l in 2..=4u32 {
                for k in 1..l {
                    for h in 0..=k {
                        let mut b1 = vec![0; m];
                        b1[0] = l;
                        let mut b2 = vec![0; m];
                        b2[0] = h;
                        b2[1] = k - h;
                        let (b1, b2) = (Element::new(b1).unwrap(), Element::new(b2).unwrap());
                        let setup = ScatterSetup::homogeneous(b1.clone(), b2.clone(), 1, Kappa::Finite(l + k + 2));
                        let out = scatter(&setup).unwrap();
                        let mut c2 = vec![0; m];
                        c2[0] = k;
                        let mut c1 = vec![0; m];
                        c1[0] = l - k + h;
                        c1[1] = k - h;
                        assert_eq!(out.left_out.mult(), &c2[..]);
                        assert_eq!(out.right_out.mult(), &c1[..]);
                        assert_eq!(predicted_scattering(&b1, &b2).unwrap(), (out.left_out, out.right_out));
                    }
                }
            }
        }
    }

    #[test]
    fn embedding_intertwines_operators() {
        for m in 2..=3 {
            for k in 1..=4 {
                for c in Element::enumerate(m - 1, k) {
                    let w = embed_label_word(&c).unwrap();
                    for i in 1..m {
                        let lhs = c.raise(i).unwrap().map(|e| embed_label_word(&e).unwrap());
                        assert_eq!(lhs, tensor_e(i + 1, &w).unwrap(), "e'_{i} on {c}");
                        let lhs = c.lower(i).unwrap().map(|e| embed_label_word(&e).unwrap());
                        assert_eq!(lhs, tensor_f(i + 1, &w).unwrap(), "f'_{i} on {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn scattering_commutes_with_classical_operators() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..20 {
            let m = 3;
            let l = rng.gen_range(2..=3);
            let k = rng.gen_range(1..l);
            let pick = |rng: &mut ChaCha8Rng, cap| {
                let all = Element::enumerate(m - 1, cap);
                all[rng.gen_range(0..all.len())].clone()
            };
            let (b, c) = (pick(&mut rng, l), pick(&mut rng, k));
            let i = rng.gen_range(1..m);
            let w = TensorWord::pair(b.clone(), c.clone()).unwrap();
            let Some(fw) = tensor_f(i, &w).unwrap() else { continue };
            let run = |x: &Element, y: &Element| {
                let out = scatter(&ScatterSetup::homogeneous(x.clone(), y.clone(), 1, Kappa::Infinite)).unwrap();
                TensorWord::pair(out.left_out, out.right_out).unwrap()
            };
            let s_of_f = run(&fw.factors()[0], &fw.factors()[1]);
            let f_of_s = tensor_f(i, &run(&b, &c)).unwrap().unwrap();
            assert_eq!(s_of_f, f_of_s);
        }
    }

    #[test]
    fn round_trip_extraction() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..100 {
            let m = rng.gen_range(1..=4);
            let n = rng.gen_range(1..=3);
            let labels: Vec<Element> = (0..n)
                .map(|_| {
                    let all = Element::enumerate(m - 1, rng.gen_range(1..=4));
                    all[rng.gen_range(0..all.len())].clone()
                })
                .collect();
            let theta = Profile::new(0, (0..80).map(|_| rng.gen_range(1..=2)).collect(), 1);
            let gaps: Vec<u32> = (0..n).map(|i| if i == 0 { rng.gen_range(0..3) } else { 30 }).collect();
            let s = inject(&SolitonPlacement::on_profile(m, labels.clone(), &gaps, &theta).unwrap()).unwrap();
            assert_eq!(extract_solitons(&s, None).labels(), Some(labels));
        }
    }
}
