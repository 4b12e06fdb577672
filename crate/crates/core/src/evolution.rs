//! States of the automaton on `... ⊗ B_{θ_n} ⊗ B_{θ_{n+1}} ⊗ ...` and the
//! carrier-driven time evolutions `T_κ`.
//!
//! A state is a finite window of boxes; every box outside the window is the
//! vacuum `u_{θ_def}` of the default capacity.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crystal::Element;
use crate::error::{arg, Error, Result};
use crate::rmatrix::combinatorial_r;

/// Default bound on the number of vacuum boxes a single sweep may append.
pub const DEFAULT_EXTENSION_CAP: usize = 1_000_000;

/// Carrier capacity. `Infinite` is resolved per state to (ball count + 1),
/// which no finite state can saturate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kappa {
    Finite(u32),
    Infinite,
}

impl Kappa {
    pub fn resolve(self, state: &AutomatonState) -> u32 {
        match self {
            Kappa::Finite(k) => k,
            Kappa::Infinite => state.ball_count() + 1,
        }
    }
}

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kappa::Finite(k) => write!(f, "{k}"),
            Kappa::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Kappa {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Kappa::Infinite),
            t => match t.parse::<u32>() {
                Ok(k) if k >= 1 => Ok(Kappa::Finite(k)),
                _ => Err(Error::Parse(format!("kappa must be a positive integer or 'inf', got {s:?}"))),
            },
        }
    }
}

impl From<u32> for Kappa {
    fn from(k: u32) -> Self {
        Kappa::Finite(k)
    }
}

impl Serialize for Kappa {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Kappa::Finite(k) => s.serialize_u32(*k),
            Kappa::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Kappa {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(k) if k >= 1 => Ok(Kappa::Finite(k)),
            Raw::Num(k) => Err(serde::de::Error::custom(format!("kappa must be >= 1, got {k}"))),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "StateJson", into = "StateJson")]
pub struct AutomatonState {
    rank: usize,
    window_start: i64,
    boxes: Vec<Element>,
    default_capacity: u32,
}

/// Wire format of a state.
#[derive(Serialize, Deserialize)]
struct StateJson {
    #[serde(rename = "M")]
    rank: usize,
    window_start: i64,
    theta: Vec<u32>,
    default_capacity: u32,
    boxes: Vec<Vec<u32>>,
}

impl TryFrom<StateJson> for AutomatonState {
    type Error = Error;

    fn try_from(j: StateJson) -> Result<Self> {
        if j.theta.len() != j.boxes.len() {
            return arg(format!("{} capacities for {} boxes", j.theta.len(), j.boxes.len()));
        }
        let boxes = j
            .boxes
            .into_iter()
            .zip(&j.theta)
            .map(|(mult, &theta)| {
                if mult.len() != j.rank + 1 {
                    return arg(format!("box {mult:?} does not have M+1 = {} entries", j.rank + 1));
                }
                let b = Element::new(mult)?;
                if b.capacity() != theta {
                    return arg(format!("box {b} does not have capacity {theta}"));
                }
                Ok(b)
            })
            .collect::<Result<Vec<_>>>()?;
        AutomatonState::new(j.rank, j.window_start, boxes, j.default_capacity)
    }
}

impl From<AutomatonState> for StateJson {
    fn from(s: AutomatonState) -> Self {
        StateJson {
            rank: s.rank,
            window_start: s.window_start,
            theta: s.thetas(),
            default_capacity: s.default_capacity,
            boxes: s.boxes.into_iter().map(|b| b.mult().to_vec()).collect(),
        }
    }
}

impl AutomatonState {
    pub fn new(rank: usize, window_start: i64, boxes: Vec<Element>, default_capacity: u32) -> Result<Self> {
        if rank == 0 {
            return arg("automaton rank M must be >= 1");
        }
        if default_capacity == 0 {
            return arg("default capacity must be >= 1");
        }
        if let Some(b) = boxes.iter().find(|b| b.rank() != rank) {
            return Err(Error::RankMismatch { left: rank, right: b.rank() });
        }
        Ok(AutomatonState { rank, window_start, boxes, default_capacity })
    }

    /// All-vacuum state with the given capacities.
    pub fn vacuum(rank: usize, window_start: i64, thetas: &[u32], default_capacity: u32) -> Result<Self> {
        if thetas.contains(&0) {
            return arg("capacities must be >= 1");
        }
        let boxes = thetas.iter().map(|&t| Element::vacuum(rank, t)).collect();
        AutomatonState::new(rank, window_start, boxes, default_capacity)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn window_start(&self) -> i64 {
        self.window_start
    }

    /// One past the last box of the window.
    pub fn window_end(&self) -> i64 {
        self.window_start + self.boxes.len() as i64
    }

    pub fn boxes(&self) -> &[Element] {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn default_capacity(&self) -> u32 {
        self.default_capacity
    }

    pub fn thetas(&self) -> Vec<u32> {
        self.boxes.iter().map(Element::capacity).collect()
    }

    /// Capacity of box `n`, inside or outside the window.
    pub fn theta(&self, n: i64) -> u32 {
        self.index(n).map_or(self.default_capacity, |i| self.boxes[i].capacity())
    }

    /// Box `n`, inside or outside the window.
    pub fn box_at(&self, n: i64) -> Element {
        match self.index(n) {
            Some(i) => self.boxes[i].clone(),
            None => Element::vacuum(self.rank, self.default_capacity),
        }
    }

    fn index(&self, n: i64) -> Option<usize> {
        let i = n - self.window_start;
        (0..self.boxes.len() as i64).contains(&i).then_some(i as usize)
    }

    /// Number of letters different from 1.
    pub fn ball_count(&self) -> u32 {
        self.boxes.iter().map(Element::ball_count).sum()
    }

    /// Total multiplicity of each letter `2..=M+1`.
    pub fn letter_counts(&self) -> Vec<u32> {
        let mut out = vec![0; self.rank];
        for b in &self.boxes {
            for (c, x) in out.iter_mut().zip(&b.mult()[1..]) {
                *c += x;
            }
        }
        out
    }

    pub fn is_vacuum(&self) -> bool {
        self.boxes.iter().all(Element::is_vacuum)
    }

    fn is_default_vacuum(&self, b: &Element) -> bool {
        b.is_vacuum() && b.capacity() == self.default_capacity
    }

    /// Removes leading and trailing vacuum boxes of the default capacity.
    /// Two states describe the same configuration iff their normal forms agree.
    pub fn normalized(&self) -> AutomatonState {
        let first = self.boxes.iter().position(|b| !self.is_default_vacuum(b));
        let Some(first) = first else {
            return AutomatonState { boxes: Vec::new(), window_start: 0, ..self.clone() };
        };
        let last = self.boxes.iter().rposition(|b| !self.is_default_vacuum(b)).unwrap();
        AutomatonState {
            boxes: self.boxes[first..=last].to_vec(),
            window_start: self.window_start + first as i64,
            ..self.clone()
        }
    }

    pub fn same_configuration(&self, other: &AutomatonState) -> bool {
        self.normalized() == other.normalized()
    }

    /// The same configuration on the window `[start, end)`, which must cover
    /// every box that is not a default vacuum.
    pub fn padded(&self, start: i64, end: i64) -> Result<AutomatonState> {
        let norm = self.normalized();
        if !norm.boxes.is_empty() && (start > norm.window_start || end < norm.window_end()) {
            return arg(format!(
                "window [{start}, {end}) does not cover occupied range [{}, {})",
                norm.window_start,
                norm.window_end()
            ));
        }
        let boxes = (start..end).map(|n| self.box_at(n)).collect();
        Ok(AutomatonState { boxes, window_start: start, ..self.clone() })
    }

    pub(crate) fn with_boxes(&self, window_start: i64, boxes: Vec<Element>) -> AutomatonState {
        AutomatonState { boxes, window_start, ..self.clone() }
    }
}

/// Output of one carrier sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub state: AutomatonState,
    /// `v_n` for `n = window_start ..= window_end` of the output state:
    /// the carrier entering each box, followed by the exit carrier.
    pub carriers: Vec<Element>,
    /// Unwinding lines at each vertex.
    pub unwinding: Vec<u32>,
}

/// `T_κ` with the default extension cap.
pub fn evolve(s: &AutomatonState, kappa: u32) -> Result<Sweep> {
    evolve_capped(s, kappa, DEFAULT_EXTENSION_CAP)
}

pub fn evolve_capped(s: &AutomatonState, kappa: u32, cap: usize) -> Result<Sweep> {
    if kappa == 0 {
        return arg("kappa must be >= 1");
    }
    let vacuum = Element::vacuum(s.rank, kappa);
    let mut carrier = vacuum.clone();
    let mut boxes = Vec::with_capacity(s.boxes.len() + 1);
    let mut carriers = Vec::with_capacity(s.boxes.len() + 2);
    let mut unwinding = Vec::with_capacity(s.boxes.len() + 1);
    let mut step = |carrier: &mut Element, b: &Element| -> Result<()> {
        let r = combinatorial_r(carrier, b)?;
        carriers.push(std::mem::replace(carrier, r.right_out));
        boxes.push(r.left_out);
        unwinding.push(r.unwinding);
        Ok(())
    };
    for b in &s.boxes {
        step(&mut carrier, b)?;
    }
    let filler = Element::vacuum(s.rank, s.default_capacity);
    let mut extended = 0;
    while carrier != vacuum {
        if extended == cap {
            return Err(Error::Runaway { cap });
        }
        step(&mut carrier, &filler)?;
        extended += 1;
    }
    carriers.push(carrier);
    Ok(Sweep { state: s.with_boxes(s.window_start, boxes), carriers, unwinding })
}

/// `T_κ^{-1}`: the carrier enters from the right and R is applied with the
/// factors in the opposite order.
pub fn evolve_inverse(s: &AutomatonState, kappa: u32) -> Result<AutomatonState> {
    evolve_inverse_capped(s, kappa, DEFAULT_EXTENSION_CAP)
}

pub fn evolve_inverse_capped(s: &AutomatonState, kappa: u32, cap: usize) -> Result<AutomatonState> {
    if kappa == 0 {
        return arg("kappa must be >= 1");
    }
    let vacuum = Element::vacuum(s.rank, kappa);
    let mut carrier = vacuum.clone();
    let mut boxes = Vec::with_capacity(s.boxes.len() + 1);
    for b in s.boxes.iter().rev() {
        let r = combinatorial_r(b, &carrier)?;
        carrier = r.left_out;
        boxes.push(r.right_out);
    }
    let filler = Element::vacuum(s.rank, s.default_capacity);
    let mut extended = 0;
    while carrier != vacuum {
        if extended == cap {
            return Err(Error::Runaway { cap });
        }
        let r = combinatorial_r(&filler, &carrier)?;
        carrier = r.left_out;
        boxes.push(r.right_out);
        extended += 1;
    }
    boxes.reverse();
    Ok(s.with_boxes(s.window_start - extended as i64, boxes))
}

/// `T_∞` through the carrier sweep with a saturating capacity.
pub fn evolve_infinity(s: &AutomatonState) -> Result<AutomatonState> {
    Ok(evolve(s, Kappa::Infinite.resolve(s))?.state)
}

/// Applies `T_{κ_0}`, then `T_{κ_1}`, ...; returns every intermediate state.
pub fn evolve_steps(s: &AutomatonState, kappas: &[Kappa]) -> Result<Vec<AutomatonState>> {
    let mut out = vec![s.clone()];
    for &k in kappas {
        let cur = out.last().unwrap();
        out.push(evolve(cur, k.resolve(cur))?.state);
    }
    Ok(out)
}

/// Full space-time history `{b^t_n}`, `{v^t_n}` on a fixed window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvolutionRecord {
    pub rank: usize,
    /// `n` of the first column.
    pub space_origin: i64,
    /// `t` of the first row.
    pub time_origin: i64,
    /// Resolved `κ_t` per step.
    pub kappas: Vec<u32>,
    /// `boxes[t][i] = b^t_{space_origin + i}`; one more row than steps.
    pub boxes: Vec<Vec<Element>>,
    /// `carriers[t][i] = v^t_{space_origin + i}`; one more column than boxes.
    pub carriers: Vec<Vec<Element>>,
    pub default_capacity: u32,
}

impl EvolutionRecord {
    /// Runs the evolution and records it on a window wide enough that no
    /// step needs to extend it.
    pub fn run(initial: &AutomatonState, kappas: &[Kappa]) -> Result<EvolutionRecord> {
        let states = evolve_steps(initial, kappas)?;
        let end = states.iter().map(AutomatonState::window_end).max().unwrap();
        let mut cur = initial.padded(initial.window_start, end)?;
        let mut boxes = vec![cur.boxes.clone()];
        let mut carriers = Vec::new();
        let mut resolved = Vec::new();
        for &k in kappas {
            let kappa = k.resolve(&cur);
            let sweep = evolve(&cur, kappa)?;
            if sweep.state.len() != cur.len() {
                return Err(Error::Integrity("record window grew during replay".into()));
            }
            boxes.push(sweep.state.boxes.clone());
            carriers.push(sweep.carriers);
            resolved.push(kappa);
            cur = sweep.state;
        }
        Ok(EvolutionRecord {
            rank: initial.rank,
            space_origin: initial.window_start,
            time_origin: 0,
            kappas: resolved,
            boxes,
            carriers,
            default_capacity: initial.default_capacity,
        })
    }

    pub fn steps(&self) -> usize {
        self.carriers.len()
    }

    pub fn width(&self) -> usize {
        self.boxes.first().map_or(0, Vec::len)
    }

    pub fn state(&self, t: usize) -> AutomatonState {
        AutomatonState {
            rank: self.rank,
            window_start: self.space_origin,
            boxes: self.boxes[t].clone(),
            default_capacity: self.default_capacity,
        }
    }

    pub fn thetas(&self) -> Vec<u32> {
        self.boxes.first().map_or_else(Vec::new, |row| row.iter().map(Element::capacity).collect())
    }

    /// Re-checks `R: v^t_n ⊗ b^t_n ↦ b^{t+1}_n ⊗ v^t_{n+1}` at every vertex.
    pub fn verify(&self) -> Result<()> {
        let (steps, width) = (self.steps(), self.width());
        if self.boxes.len() != steps + 1 || self.kappas.len() != steps {
            return Err(Error::Integrity("row counts do not match the step count".into()));
        }
        for t in 0..steps {
            if self.boxes[t].len() != width || self.boxes[t + 1].len() != width || self.carriers[t].len() != width + 1 {
                return Err(Error::Integrity(format!("ragged row at t={t}")));
            }
            for i in 0..width {
                let r = combinatorial_r(&self.carriers[t][i], &self.boxes[t][i])?;
                if r.left_out != self.boxes[t + 1][i] || r.right_out != self.carriers[t][i + 1] {
                    return Err(Error::Integrity(format!(
                        "vertex (t={}, n={}): {}⊗{} ↦ {}⊗{}, recorded {}⊗{}",
                        self.time_origin + t as i64,
                        self.space_origin + i as i64,
                        self.carriers[t][i],
                        self.boxes[t][i],
                        r.left_out,
                        r.right_out,
                        self.boxes[t + 1][i],
                        self.carriers[t][i + 1]
                    )));
                }
                if self.carriers[t][i].capacity() != self.kappas[t] {
                    return Err(Error::Integrity(format!("carrier capacity at t={t}, column {i}")));
                }
            }
        }
        Ok(())
    }

    /// Space-time interchange: the carrier column `v_n` (read with `t`
    /// decreasing) becomes a state evolving leftward under `T_{θ_n}`, with the
    /// boxes `b^t_n` playing the carriers. Since R is an involution the dual
    /// satisfies the same vertex relation.
    pub fn dual_record(&self) -> Result<EvolutionRecord> {
        self.verify()?;
        let (steps, width) = (self.steps(), self.width());
        let boxes = (0..=width)
            .rev()
            .map(|col| (0..steps).rev().map(|t| self.carriers[t][col].clone()).collect())
            .collect();
        let carriers = (0..width)
            .rev()
            .map(|col| (0..=steps).rev().map(|t| self.boxes[t][col].clone()).collect())
            .collect();
        let kappas = self.thetas().into_iter().rev().collect();
        let default_capacity = self.kappas.first().copied().unwrap_or(self.default_capacity);
        Ok(EvolutionRecord {
            rank: self.rank,
            space_origin: -(self.time_origin + steps as i64 - 1),
            time_origin: -(self.space_origin + width as i64 - 1),
            kappas,
            boxes,
            carriers,
            default_capacity,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn digits(row: &str, rank: usize) -> AutomatonState {
        let boxes = row.chars().map(|c| Element::from_word(&c.to_string(), rank).unwrap()).collect();
        AutomatonState::new(rank, 0, boxes, 1).unwrap()
    }

    fn random_state(rng: &mut ChaCha8Rng, rank: usize, max_theta: u32, width: usize) -> AutomatonState {
        let boxes = (0..width)
            .map(|_| {
                let theta = rng.gen_range(1..=max_theta);
                let mut mult = vec![0u32; rank + 1];
                for _ in 0..theta {
                    let letter = if rng.gen_bool(0.6) { 0 } else { rng.gen_range(0..=rank) };
                    mult[letter] += 1;
                }
                Element::new(mult).unwrap()
            })
            .collect();
        AutomatonState::new(rank, rng.gen_range(-5..5), boxes, rng.gen_range(1..=max_theta)).unwrap()
    }

    #[test]
    fn vacuum_is_fixed() {
        let s = AutomatonState::vacuum(3, 0, &[1, 2, 3], 2).unwrap();
        let sweep = evolve(&s, 3).unwrap();
        assert_eq!(sweep.state, s);
        assert!(sweep.carriers.iter().all(|v| *v == Element::vacuum(3, 3)));
        assert_eq!(evolve_inverse(&s, 2).unwrap(), s);
    }

    #[test]
    fn single_ball_moves_one_step() {
        let s = digits("1211", 1);
        let next = evolve_infinity(&s).unwrap();
        assert!(next.same_configuration(&digits("1121", 1)));
    }

    #[test]
    fn first_step_of_two_soliton_example() {
        let s = digits("111142113111111111111", 3);
        let next = evolve_infinity(&s).unwrap();
        assert_eq!(next.padded(0, 21).unwrap(), digits("111111421311111111111", 3));
        let back = evolve_inverse(&next, Kappa::Infinite.resolve(&next)).unwrap();
        assert!(back.same_configuration(&s));
    }

    #[test]
    fn runaway_cap() {
        let s = digits("2222", 1);
        assert!(matches!(evolve_capped(&s, 10, 2), Err(Error::Runaway { cap: 2 })));
    }

    #[test]
    fn kappa_parsing() {
        assert_eq!("inf".parse::<Kappa>().unwrap(), Kappa::Infinite);
        assert_eq!("3".parse::<Kappa>().unwrap(), Kappa::Finite(3));
        assert!("0".parse::<Kappa>().is_err());
        assert_eq!(serde_json::to_string(&Kappa::Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::from_str::<Kappa>("4").unwrap(), Kappa::Finite(4));
    }

    #[test]
    fn json_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let rank = rng.gen_range(1..=4);
            let s = random_state(&mut rng, rank, 4, 12);
            let text = serde_json::to_string(&s).unwrap();
            assert_eq!(serde_json::from_str::<AutomatonState>(&text).unwrap(), s);
        }
        let bad = r#"{"M":2,"window_start":0,"theta":[2],"default_capacity":1,"boxes":[[1,0,0]]}"#;
        assert!(serde_json::from_str::<AutomatonState>(bad).is_err());
    }

    #[test]
    fn inverse_round_trip_and_conservation() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let rank = rng.gen_range(1..=3);
            let s = random_state(&mut rng, rank, 3, 10);
            let kappa = rng.gen_range(1..=5);
            let next = evolve(&s, kappa).unwrap().state;
            assert_eq!(next.letter_counts(), s.letter_counts());
            assert!(evolve_inverse(&next, kappa).unwrap().same_configuration(&s));
        }
    }

    #[test]
    fn commutativity() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let rank = rng.gen_range(1..=3);
            let s = random_state(&mut rng, rank, 3, 10);
            let (k1, k2) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
            let a = evolve(&evolve(&s, k1).unwrap().state, k2).unwrap().state;
            let b = evolve(&evolve(&s, k2).unwrap().state, k1).unwrap().state;
            assert!(a.same_configuration(&b));
        }
    }

    #[test]
    fn large_kappa_saturates() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..50 {
            let s = random_state(&mut rng, 2, 3, 8);
            let inf = evolve_infinity(&s).unwrap();
            let big = evolve(&s, s.ball_count().max(1)).unwrap().state;
            assert!(big.same_configuration(&inf));
        }
    }

    #[test]
    fn record_and_dual() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..30 {
            let rank = rng.gen_range(1..=3);
            let s = random_state(&mut rng, rank, 3, 8);
            let kappas: Vec<Kappa> = (0..5).map(|_| Kappa::Finite(rng.gen_range(1..=4))).collect();
            let rec = EvolutionRecord::run(&s, &kappas).unwrap();
            rec.verify().unwrap();
            let dual = rec.dual_record().unwrap();
            dual.verify().unwrap();
            assert_eq!(dual.dual_record().unwrap(), rec);
        }
    }

    #[test]
    fn corrupted_record_fails() {
        let s = digits("1213111", 2);
        let mut rec = EvolutionRecord::run(&s, &[Kappa::Finite(2); 3]).unwrap();
        rec.boxes[2][3] = Element::from_word("3", 2).unwrap();
        assert!(matches!(rec.verify(), Err(Error::Integrity(_))));
        assert!(rec.dual_record().is_err());
    }
}
