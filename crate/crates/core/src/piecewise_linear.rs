//! The carrier update `v ⊗ b ↦ b' ⊗ v'` as an integer max-plus recursion.
//!
//! Variables are indexed the other way round from multiplicity vectors:
//! `u_j` is the number of letters `M+2-j` in a box, so `u_1` counts the
//! largest letter and `u_{M+1}` counts the letter 1.

use crate::crystal::Element;
use crate::error::{arg, Error, Result};

/// Occupation numbers `(w_1, ..., w_{M+1})` of a box or a carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PLVars {
    comps: Vec<u32>,
    capacity: u32,
}

/// Box variables `u_{n,j}` with `θ_n`.
pub type PLBoxVars = PLVars;
/// Carrier variables `v_{n,j}` with `κ_t`.
pub type PLCarrierVars = PLVars;

impl PLVars {
    pub fn new(comps: Vec<u32>) -> Result<Self> {
        if comps.len() < 2 {
            return arg("PL variables need M+1 >= 2 components");
        }
        let capacity = comps.iter().sum();
        if capacity == 0 {
            return arg("capacity must be >= 1");
        }
        Ok(PLVars { comps, capacity })
    }

    /// Component `j` (1-based).
    pub fn get(&self, j: usize) -> u32 {
        self.comps[j - 1]
    }

    pub fn comps(&self) -> &[u32] {
        &self.comps
    }

    pub fn capacity(&self) -> u32 {
        self.capacity
    }

    pub fn rank(&self) -> usize {
        self.comps.len() - 1
    }
}

/// Multiplicities `(x_1, ..., x_{M+1})` to `(u_1, ..., u_{M+1})`, `u_j = x_{M+2-j}`.
pub fn to_pl(b: &Element) -> PLVars {
    let comps: Vec<u32> = b.mult().iter().rev().copied().collect();
    PLVars { capacity: b.capacity(), comps }
}

/// Inverse of [`to_pl`].
pub fn from_pl(w: &PLVars) -> Element {
    Element::from_mult_unchecked(w.comps.iter().rev().copied().collect())
}

/// `X_ℓ = Σ_{i=ℓ}^{M} u_i + Σ_{i=1}^{ℓ} v_i` for `ℓ = 1..=M` (index 0 unused).
fn x_values(u: &[i64], v: &[i64]) -> Vec<i64> {
    let m = u.len() - 1;
    let mut x = vec![0; m + 1];
    for (l, xl) in x.iter_mut().enumerate().skip(1) {
        *xl = u[l - 1..m].iter().sum::<i64>() + v[..l].iter().sum::<i64>();
    }
    x
}

/// One vertex of the recursion on raw integers: returns `(u', v')`, both of
/// length `M+1`, without any sign checks. Slices are 0-based copies of the
/// 1-based variables.
pub fn pl_step_raw(u: &[i64], v: &[i64], theta: i64, kappa: i64) -> (Vec<i64>, Vec<i64>) {
    let m = u.len() - 1;
    let x = x_values(u, v);
    let bound = |l: usize, j_theta: usize| if l <= j_theta { x[l] - theta } else { x[l] - kappa };
    let mut u_next = vec![0i64; m + 1];
    for j in 1..=m {
        let first = (1..=m).map(|l| bound(l, j - 1)).fold(0, i64::max);
        let second = (1..=m).map(|l| bound(l, j)).fold(0, i64::max);
        u_next[j - 1] = v[j - 1] + first - second;
    }
    u_next[m] = theta - u_next[..m].iter().sum::<i64>();
    let v_next = (0..=m).map(|j| u[j] + v[j] - u_next[j]).collect();
    (u_next, v_next)
}

/// `(u^{t+1}_n, v^t_{n+1})` from `(u^t_n, v^t_n)`.
pub fn pl_carrier_step(u: &PLBoxVars, v: &PLCarrierVars) -> Result<(PLBoxVars, PLCarrierVars)> {
    if u.rank() != v.rank() {
        return Err(Error::RankMismatch { left: v.rank(), right: u.rank() });
    }
    let widen = |w: &PLVars| w.comps.iter().map(|&c| c as i64).collect::<Vec<_>>();
    let (un, vn) = pl_step_raw(&widen(u), &widen(v), u.capacity as i64, v.capacity as i64);
    let narrow = |w: Vec<i64>, what: &str| -> Result<PLVars> {
        if let Some(bad) = w.iter().find(|&&c| c < 0) {
            return Err(Error::Integrity(format!("negative {what} component {bad} in {w:?}")));
        }
        PLVars::new(w.into_iter().map(|c| c as u32).collect())
    };
    Ok((narrow(un, "box")?, narrow(vn, "carrier")?))
}

/// Residual counts of the `Δ` pairing iteration between a carrier (left
/// column) and a box (right column).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingCounts {
    /// `u^{(M+1)}_j`: unpaired box dots per variable index.
    pub residual_u: Vec<u32>,
    /// `v^{(M+1)}_j`: unpaired carrier dots per variable index.
    pub residual_v: Vec<u32>,
    /// `u^{(M)}_j` and `v^{(M)}_j`, one pass before the last.
    pub penultimate_u: Vec<u32>,
    pub penultimate_v: Vec<u32>,
    /// Pairs made without passing the bottom row.
    pub unwinding: u32,
    pub winding: u32,
}

impl PairingCounts {
    pub fn paired(&self) -> u32 {
        self.unwinding + self.winding
    }
}

/// Pass `ℓ = 0..=M` pairs `u_j` with `v_{j+ℓ+1}` (indices mod `M+1`),
/// `Δ = min(u_j, v_{j+ℓ+1})`.
pub fn pairing_counts(u: &PLBoxVars, v: &PLCarrierVars) -> Result<PairingCounts> {
    if u.rank() != v.rank() {
        return Err(Error::RankMismatch { left: v.rank(), right: u.rank() });
    }
    let size = u.comps.len();
    let (mut uu, mut vv) = (u.comps.clone(), v.comps.clone());
    let (mut unwinding, mut winding) = (0, 0);
    let (mut pen_u, mut pen_v) = (uu.clone(), vv.clone());
    for l in 0..size {
        if l == size - 1 {
            pen_u = uu.clone();
            pen_v = vv.clone();
        }
        #[allow(clippy::needless_range_loop)]
        for j in 0..size {
            let target = j + l + 1;
            let k = target % size;
            let delta = uu[j].min(vv[k]);
            uu[j] -= delta;
            vv[k] -= delta;
            if target < size {
                unwinding += delta;
            } else {
                winding += delta;
            }
        }
    }
    Ok(PairingCounts {
        residual_u: uu,
        residual_v: vv,
        penultimate_u: pen_u,
        penultimate_v: pen_v,
        unwinding,
        winding,
    })
}
