//! Max-plus N-soliton solutions `Y^t_{n,j}` and the box/carrier fields they
//! generate.
//!
//! Two index moduli are in play: contents `ℓ_j` are `M`-periodic in `j`,
//! while the fields `u_{n,j}`, `v_{n,j}` run over `j = 1..=M+1`, the last
//! component being fixed by the capacity.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::crystal::Element;
use crate::error::{arg, Error, Result};
use crate::evolution::{evolve, AutomatonState, Kappa};
use crate::piecewise_linear::{from_pl, pl_step_raw, PLVars};
use crate::profile::Profile;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauSolitonParams {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "M")]
    pub m: usize,
    /// `L^{(i)}`, weakly decreasing.
    pub amplitudes: Vec<u32>,
    /// `ℓ^{(i)}_j` for `j = 1..=M`.
    pub contents: Vec<Vec<u32>>,
    /// `K_0^{(i)}`.
    pub phases: Vec<i64>,
    pub theta: Profile<u32>,
    pub kappa: Profile<Kappa>,
}

impl TauSolitonParams {
    pub fn vacuum(m: usize, theta: Profile<u32>, kappa: Profile<Kappa>) -> Self {
        TauSolitonParams { n: 0, m, amplitudes: vec![], contents: vec![], phases: vec![], theta, kappa }
    }

    /// Shapes and capacities only.
    fn check_shape(&self) -> Result<()> {
        if self.m == 0 {
            return arg("M must be >= 1");
        }
        if self.amplitudes.len() != self.n || self.contents.len() != self.n || self.phases.len() != self.n {
            return arg(format!("expected {} amplitudes, contents and phases", self.n));
        }
        if let Some(c) = self.contents.iter().find(|c| c.len() != self.m) {
            return arg(format!("content {c:?} must have M = {} entries", self.m));
        }
        if self.theta.values.iter().chain([&self.theta.default]).any(|&t| t == 0) {
            return arg("theta must be >= 1");
        }
        if self.kappa.values.iter().chain([&self.kappa.default]).any(|&k| k == Kappa::Finite(0)) {
            return arg("kappa must be >= 1");
        }
        Ok(())
    }

    /// The hypotheses of the solution formula: sum constraints and both
    /// ordering chains.
    pub fn validate(&self) -> Result<()> {
        self.check_shape()?;
        for (i, (l, c)) in self.amplitudes.iter().zip(&self.contents).enumerate() {
            if c.iter().sum::<u32>() != *l {
                return arg(format!("content {c:?} of soliton {} does not sum to L = {l}", i + 1));
            }
        }
        if self.amplitudes.windows(2).any(|w| w[0] < w[1]) {
            return arg("amplitudes must be weakly decreasing");
        }
        for j in 0..self.m {
            if self.contents.windows(2).any(|w| w[0][j] < w[1][j]) {
                return arg(format!("contents l_{} must be weakly decreasing in i", j + 1));
            }
        }
        Ok(())
    }

    /// Carrier capacity standing in for `κ = ∞`.
    pub fn infinite_kappa(&self) -> u32 {
        self.amplitudes.iter().sum::<u32>() + 1
    }

    pub fn kappa_at(&self, t: i64) -> u32 {
        match self.kappa.at(t) {
            Kappa::Finite(k) => k,
            Kappa::Infinite => self.infinite_kappa(),
        }
    }
}

/// `Σ_{n'}^{n} X_{n'}`: the forward sum for `n >= 1`, zero at `n = 0`, and
/// minus the sum over `n+1..=0` for negative `n`. `X` is a profile, so the
/// sum is evaluated in O(1) from prefix sums.
#[derive(Clone, Debug)]
pub struct SignedRangeSum {
    start: i64,
    prefix: Vec<i64>,
    default: i64,
    offset: i64,
}

impl SignedRangeSum {
    pub fn new(x: &Profile<i64>) -> Self {
        let mut prefix = vec![0];
        for v in &x.values {
            prefix.push(prefix.last().unwrap() + v);
        }
        let mut s = SignedRangeSum { start: x.start, prefix, default: x.default, offset: 0 };
        s.offset = s.antiderivative(0);
        s
    }

    /// Any `G` with `G(n) - G(n-1) = X_n`.
    fn antiderivative(&self, n: i64) -> i64 {
        let last = self.start + self.prefix.len() as i64 - 2;
        if n < self.start - 1 {
            (n - (self.start - 1)) * self.default
        } else if n > last {
            self.prefix.last().unwrap() + (n - last) * self.default
        } else {
            self.prefix[(n - self.start + 1) as usize]
        }
    }

    pub fn sum_to(&self, n: i64) -> i64 {
        self.antiderivative(n) - self.offset
    }
}

/// `Y^t_{n,j}`: the closed-form max-plus expression evaluated at `(t-1, n-1, j-1)`.
pub fn shifted(t: i64, n: i64, j: usize) -> (i64, i64, usize) {
    (t - 1, n - 1, j - 1)
}

/// A `(t, n)` rectangle, half-open in both directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub t0: i64,
    pub t1: i64,
    pub n0: i64,
    pub n1: i64,
}

impl std::str::FromStr for Window {
    type Err = Error;

    /// `"t0:t1,n0:n1"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("window must look like t0:t1,n0:n1, got {s:?}"));
        let (t, n) = s.split_once(',').ok_or_else(bad)?;
        let range = |r: &str| -> Result<(i64, i64)> {
            let (a, b) = r.split_once(':').ok_or_else(bad)?;
            Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
        };
        let ((t0, t1), (n0, n1)) = (range(t)?, range(n)?);
        if t0 >= t1 || n0 >= n1 {
            return Err(bad());
        }
        Ok(Window { t0, t1, n0, n1 })
    }
}

/// Raw integer fields at one site, 0-based copies of `u_1..u_{M+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawFields {
    pub u: Vec<i64>,
    pub v: Vec<i64>,
}

/// Precomputed evaluator for one parameter set.
#[derive(Clone, Debug)]
pub struct TauSolution {
    params: TauSolitonParams,
    theta_sums: Vec<SignedRangeSum>,
    kappa_sums: Vec<SignedRangeSum>,
}

impl TauSolution {
    pub fn new(params: &TauSolitonParams) -> Result<Self> {
        params.validate()?;
        Ok(Self::build(params))
    }

    /// Skips the sum and ordering hypotheses, for probing parameters the
    /// formula is not meant for.
    pub fn unvalidated(params: &TauSolitonParams) -> Result<Self> {
        params.check_shape()?;
        Ok(Self::build(params))
    }

    fn build(params: &TauSolitonParams) -> Self {
        let theta_sums = params
            .amplitudes
            .iter()
            .map(|&l| SignedRangeSum::new(&params.theta.map(|&th| th.min(l) as i64)))
            .collect();
        let kappa_sums = params
            .amplitudes
            .iter()
            .map(|&l| {
                SignedRangeSum::new(&params.kappa.map(|&k| match k {
                    Kappa::Finite(k) => k.min(l) as i64,
                    Kappa::Infinite => l as i64,
                }))
            })
            .collect();
        TauSolution { params: params.clone(), theta_sums, kappa_sums }
    }

    pub fn params(&self) -> &TauSolitonParams {
        &self.params
    }

    /// `X^{(i)}(j) = Σ_{j'=1}^{j} ℓ^{(i)}_{j'}` with `ℓ` of period `M`.
    fn content_sum(&self, i: usize, j: usize) -> i64 {
        let c = &self.params.contents[i];
        let m = self.params.m;
        let full: i64 = c.iter().map(|&x| x as i64).sum();
        full * (j / m) as i64 + c[..j % m].iter().map(|&x| x as i64).sum::<i64>()
    }

    /// `K^{(i)}(t, n, j)`.
    pub fn phase(&self, i: usize, t: i64, n: i64, j: usize) -> i64 {
        self.params.phases[i] - self.content_sum(i, j) - self.kappa_sums[i].sum_to(t) + self.theta_sums[i].sum_to(n)
    }

    /// `A(μ; j)`, `mask` bit `i` standing for `μ_{i+1}`.
    pub fn phase_factor(&self, mask: u32, j: usize) -> i64 {
        let mut a = 0;
        let chosen = (0..self.params.n).filter(|&i| mask & (1 << i) != 0);
        for (k, i) in chosen.enumerate() {
            a += k as i64 * self.params.amplitudes[i] as i64 + self.content_sum(i, j + k) - self.content_sum(i, j);
        }
        a
    }

    /// The right-hand side of the solution formula, i.e. `Y^{t+1}_{n+1,j+1}`.
    pub fn unshifted(&self, t: i64, n: i64, j: usize) -> i64 {
        let k: Vec<i64> = (0..self.params.n).map(|i| self.phase(i, t, n, j)).collect();
        (0u32..1 << self.params.n)
            .map(|mask| {
                let sum: i64 = (0..self.params.n).filter(|&i| mask & (1 << i) != 0).map(|i| k[i]).sum();
                sum - self.phase_factor(mask, j)
            })
            .max()
            .unwrap_or(0)
    }

    /// `Y^t_{n,j}` for `j >= 1`.
    pub fn y(&self, t: i64, n: i64, j: usize) -> i64 {
        assert!(j >= 1, "Y is indexed from j = 1");
        let (t, n, j) = shifted(t, n, j);
        self.unshifted(t, n, j)
    }

    /// Box and carrier fields at `(t, n)` without sign checks.
    pub fn raw_fields(&self, t: i64, n: i64) -> RawFields {
        let m = self.params.m;
        let y = |t, n, j| self.y(t, n, j);
        let mut u: Vec<i64> = (1..=m).map(|j| y(t, n + 1, j) + y(t, n, j + 1) - y(t, n, j) - y(t, n + 1, j + 1)).collect();
        let mut v: Vec<i64> =
            (1..=m).map(|j| y(t + 1, n, j + 1) + y(t, n, j) - y(t, n, j + 1) - y(t + 1, n, j)).collect();
        u.push(self.params.theta.at(n) as i64 - u.iter().sum::<i64>());
        v.push(self.params.kappa_at(t) as i64 - v.iter().sum::<i64>());
        RawFields { u, v }
    }

    /// `(u^t_n, v^t_n)` as crystal elements.
    pub fn fields(&self, t: i64, n: i64) -> Result<(Element, Element)> {
        let raw = self.raw_fields(t, n);
        let check = |w: &[i64]| -> Result<Element> {
            if let Some(j) = w.iter().position(|&c| c < 0) {
                return Err(Error::SolutionValidity { t, n, j: j + 1, value: w[j] });
            }
            Ok(from_pl(&PLVars::new(w.iter().map(|&c| c as u32).collect())?))
        };
        Ok((check(&raw.u)?, check(&raw.v)?))
    }

    /// Box row at time `t` over `n0..n1`.
    pub fn state(&self, t: i64, n0: i64, n1: i64) -> Result<AutomatonState> {
        let boxes = (n0..n1).map(|n| self.fields(t, n).map(|f| f.0)).collect::<Result<Vec<_>>>()?;
        AutomatonState::new(self.params.m, n0, boxes, self.params.theta.default)
    }

    /// Box rows for `t0..t1`, rows computed in parallel.
    pub fn states(&self, w: &Window) -> Result<Vec<AutomatonState>> {
        (w.t0..w.t1).into_par_iter().map(|t| self.state(t, w.n0, w.n1)).collect()
    }

    /// Largest absolute violation of the carrier update over the window.
    pub fn pl_residual(&self, w: &Window) -> i64 {
        (w.t0..w.t1)
            .into_par_iter()
            .map(|t| {
                let mut worst = 0;
                for n in w.n0..w.n1 {
                    let here = self.raw_fields(t, n);
                    let (u_next, v_next) =
                        pl_step_raw(&here.u, &here.v, self.params.theta.at(n) as i64, self.params.kappa_at(t) as i64);
                    let later = self.raw_fields(t + 1, n).u;
                    let right = self.raw_fields(t, n + 1).v;
                    for (a, b) in u_next.iter().zip(&later).chain(v_next.iter().zip(&right)) {
                        worst = worst.max((a - b).abs());
                    }
                }
                worst
            })
            .max()
            .unwrap_or(0)
    }

    /// Evolves the window's first row with the automaton and compares every
    /// later box row and every carrier inside the window. Returns the first
    /// disagreeing site.
    pub fn automaton_mismatch(&self, w: &Window) -> Result<Option<(i64, i64)>> {
        let mut s = self.state(w.t0, w.n0, w.n1)?;
        for t in w.t0..w.t1 {
            let sweep = evolve(&s, self.params.kappa_at(t))?;
            for n in w.n0..w.n1 {
                let (b, v) = self.fields(t, n)?;
                let carrier = &sweep.carriers[(n - s.window_start()) as usize];
                if s.box_at(n) != b || *carrier != v {
                    return Ok(Some((t, n)));
                }
            }
            s = sweep.state;
        }
        Ok(None)
    }
}

/// The closed one-soliton form, written directly in `Y^t_{n,j}` indices.
pub fn one_soliton_y(params: &TauSolitonParams, t: i64, n: i64, j: usize) -> Result<i64> {
    params.validate()?;
    if params.n != 1 {
        return arg("one_soliton_y needs N = 1");
    }
    let l = params.amplitudes[0];
    let c = &params.contents[0];
    let before: i64 = (1..j).map(|i| c[(i - 1) % params.m] as i64).sum();
    let kappa = SignedRangeSum::new(&params.kappa.map(|&k| match k {
        Kappa::Finite(k) => k.min(l) as i64,
        Kappa::Infinite => l as i64,
    }));
    let theta = SignedRangeSum::new(&params.theta.map(|&th| th.min(l) as i64));
    Ok(0.max(params.phases[0] - before - kappa.sum_to(t - 1) + theta.sum_to(n - 1)))
}

/// Random valid parameters with amplitudes up to 4; soliton `i` sits near `positions[i]` at `t = 0`.
pub fn sample_params<R: Rng>(rng: &mut R, n: usize, m: usize, positions: &[i64]) -> TauSolitonParams {
    let mut amplitudes: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=4)).collect();
    amplitudes.sort_unstable_by(|a, b| b.cmp(a));
    // contents built from the last soliton upwards keep both chains
    let mut contents = vec![vec![0u32; m]; n];
    for i in (0..n).rev() {
        let mut c = if i + 1 < n { contents[i + 1].clone() } else { vec![0; m] };
        let mut extra = amplitudes[i] - c.iter().sum::<u32>();
        while extra > 0 {
            c[rng.gen_range(0..m)] += 1;
            extra -= 1;
        }
        contents[i] = c;
    }
    let theta = Profile::new(-20, (0..300).map(|_| rng.gen_range(1..=3)).collect(), rng.gen_range(1..=3));
    let kappa = Profile::new(
        0,
        (0..60).map(|_| if rng.gen_bool(0.3) { Kappa::Infinite } else { Kappa::Finite(rng.gen_range(1..=6)) }).collect(),
        Kappa::Infinite,
    );
    let mut p = TauSolitonParams { n, m, amplitudes, contents, phases: vec![0; n], theta, kappa };
    let tmp = TauSolution::build(&p);
    p.phases = (0..n).map(|i| -tmp.theta_sums[i].sum_to(positions[i])).collect();
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solitons::{extract_solitons, inject, label_from_word, SolitonPlacement};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn naive_sum(x: &Profile<i64>, n: i64) -> i64 {
        if n >= 1 {
            (1..=n).map(|k| x.at(k)).sum()
        } else if n == 0 {
            0
        } else {
            -(n + 1..=0).map(|k| x.at(k)).sum::<i64>()
        }
    }

    #[test]
    fn signed_range_sum_matches_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let start = rng.gen_range(-20..20);
            let values = (0..rng.gen_range(0..15)).map(|_| rng.gen_range(-3..6)).collect();
            let x = Profile::new(start, values, rng.gen_range(-2..4));
            let s = SignedRangeSum::new(&x);
            for n in -50..=50 {
                assert_eq!(s.sum_to(n), naive_sum(&x, n), "n = {n}");
                assert_eq!(s.sum_to(n) - s.sum_to(n - 1), x.at(n));
            }
        }
    }

    #[test]
    fn vacuum_parameters() {
        let p = TauSolitonParams::vacuum(2, "1,3,2".parse().unwrap(), Profile::constant(Kappa::Finite(2)));
        let sol = TauSolution::new(&p).unwrap();
        assert_eq!(sol.y(3, -4, 2), 0);
        let s = sol.state(0, 0, 4).unwrap();
        assert!(s.is_vacuum());
        assert_eq!(s.thetas(), vec![1, 3, 2, 2]);
    }

    #[test]
    fn shift_agrees_with_one_soliton_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..30 {
            let m = rng.gen_range(1..=3);
            let pos = rng.gen_range(-5..10);
            let p = sample_params(&mut rng, 1, m, &[pos]);
            let sol = TauSolution::new(&p).unwrap();
            for t in -3..8 {
                for n in -10..30 {
                    for j in 1..=m + 1 {
                        assert_eq!(sol.y(t, n, j), one_soliton_y(&p, t, n, j).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn two_soliton_phase_factor() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let m = rng.gen_range(1..=4);
            let p = sample_params(&mut rng, 2, m, &[0, 10]);
            let sol = TauSolution::new(&p).unwrap();
            for j in 0..m {
                let want = p.amplitudes[1] as i64 + p.contents[1][j] as i64;
                assert_eq!(sol.phase_factor(0b11, j), want);
                assert_eq!(sol.phase_factor(0b01, j), 0);
                assert_eq!(sol.phase_factor(0b10, j), 0);
            }
        }
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let good = sample_params(&mut rng, 2, 2, &[0, 10]);
        let mut bad = good.clone();
        bad.amplitudes.reverse();
        bad.contents.reverse();
        if bad != good {
            assert!(TauSolution::new(&bad).is_err());
        }
        let mut bad = good.clone();
        bad.contents[0][0] += 1;
        assert!(TauSolution::new(&bad).is_err());
        let mut bad = good;
        bad.phases.pop();
        assert!(TauSolution::unvalidated(&bad).is_err());
    }

    #[test]
    fn single_block_translates_by_amplitude() {
        for l in 1..=4u32 {
            let p = TauSolitonParams {
                n: 1,
                m: 1,
                amplitudes: vec![l],
                contents: vec![vec![l]],
                phases: vec![0],
                theta: Profile::constant(1),
                kappa: Profile::constant(Kappa::Infinite),
            };
            let sol = TauSolution::new(&p).unwrap();
            let rows: Vec<String> =
                (0..4).map(|t| sol.state(t, -5, 25).unwrap().boxes().iter().map(|b| b.word()).collect()).collect();
            let first = rows[0].find('2').unwrap();
            for (t, row) in rows.iter().enumerate() {
                let start = row.find('2').unwrap();
                assert_eq!(start, first + t * l as usize);
                assert_eq!(row.matches('2').count(), l as usize);
                assert!(row[start..start + l as usize].chars().all(|c| c == '2'));
            }
        }
    }

    #[test]
    fn one_soliton_matches_injected_soliton() {
        // the inhomogeneous profile used for one-soliton readings
        let thetas = vec![1, 2, 1, 2, 3, 2, 2, 1, 1, 2, 3, 1, 2, 2, 1, 3, 1, 1, 2, 2, 1, 2, 3, 1];
        let theta = Profile::new(0, thetas.clone(), 1);
        let label = label_from_word("12", 2).unwrap();
        let placed = inject(&SolitonPlacement {
            rank: 2,
            labels: vec![label],
            gaps: vec![3, 37],
            window_start: 0,
            thetas: thetas.clone(),
            default_capacity: 1,
        })
        .unwrap();
        // the same soliton through the formula: find the phase whose t = 0 row
        // coincides, then compare later rows
        let mut found = false;
        for k0 in -40..40 {
            let p = TauSolitonParams {
                n: 1,
                m: 2,
                amplitudes: vec![2],
                contents: vec![vec![1, 1]],
                phases: vec![k0],
                theta: theta.clone(),
                kappa: Profile::constant(Kappa::Finite(2)),
            };
            let sol = TauSolution::new(&p).unwrap();
            let row = sol.state(0, 0, placed.len() as i64).unwrap();
            if !row.same_configuration(&placed) {
                continue;
            }
            found = true;
            let mut s = placed.clone();
            for t in 1..6 {
                s = evolve(&s, 2).unwrap().state;
                let want = sol.state(t, 0, s.window_end() + 1).unwrap();
                assert!(s.same_configuration(&want), "t = {t}");
            }
        }
        assert!(found);
    }

    fn agreement(n: usize, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for case in 0..10 {
            let m = rng.gen_range(1..=3);
            let positions: Vec<i64> = (0..n).map(|i| 2 + 12 * i as i64 + rng.gen_range(0..4)).collect();
            let p = sample_params(&mut rng, n, m, &positions);
            let sol = TauSolution::new(&p).unwrap();
            let w = Window { t0: 0, t1: 30, n0: -3, n1: 200 };
            assert_eq!(sol.pl_residual(&w), 0, "case {case}: {p:?}");
            assert_eq!(sol.automaton_mismatch(&w).unwrap(), None, "case {case}: {p:?}");
        }
    }

    #[test]
    fn one_soliton_agrees_with_automaton() {
        agreement(1, 9);
    }

    #[test]
    fn two_solitons_agree_with_automaton() {
        agreement(2, 10);
    }

    #[test]
    fn violated_ordering_is_detected() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut detected = false;
        for _ in 0..200 {
            let mut p = sample_params(&mut rng, 2, 2, &[0, 6]);
            p.contents = vec![vec![0, p.amplitudes[0]], vec![p.amplitudes[1], 0]];
            if p.contents[1][0] == 0 {
                continue;
            }
            assert!(TauSolution::new(&p).is_err());
            let sol = TauSolution::unvalidated(&p).unwrap();
            if sol.pl_residual(&Window { t0: -5, t1: 25, n0: -10, n1: 120 }) > 0 {
                detected = true;
                break;
            }
        }
        assert!(detected);
    }

    #[test]
    fn phase_monotonicity() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..50 {
            let n = rng.gen_range(1..=3);
            let positions: Vec<i64> = (0..n).map(|i| 10 * i as i64).collect();
            let m = rng.gen_range(1..=3);
            let p = sample_params(&mut rng, n, m, &positions);
            let i = rng.gen_range(0..n);
            let mut q = p.clone();
            q.phases[i] += rng.gen_range(1..4);
            let (a, b) = (TauSolution::new(&p).unwrap(), TauSolution::new(&q).unwrap());
            for _ in 0..50 {
                let (t, x, j) = (rng.gen_range(-5..20), rng.gen_range(-10..60), rng.gen_range(1..=p.m + 1));
                assert!(b.y(t, x, j) >= a.y(t, x, j));
            }
        }
    }

    #[test]
    fn amplitudes_survive_collision_for_one_colour() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let l1 = rng.gen_range(2..=5);
            let l2 = rng.gen_range(1..l1);
            let p = TauSolitonParams {
                n: 2,
                m: 1,
                amplitudes: vec![l1, l2],
                contents: vec![vec![l1], vec![l2]],
                phases: vec![0, -30],
                theta: Profile::constant(1),
                kappa: Profile::constant(Kappa::Infinite),
            };
            let sol = TauSolution::new(&p).unwrap();
            let amps = |t: i64| -> Vec<u32> {
                let s = sol.state(t, -10, 400).unwrap();
                let mut a: Vec<u32> = extract_solitons(&s, None).solitons().unwrap().iter().map(|r| r.amplitude).collect();
                a.sort_unstable();
                a
            };
            let before = amps(0);
            assert_eq!(before, vec![l2, l1]);
            assert_eq!(amps(70), before);
        }
    }
}
