//! Conserved quantities: the energies `E_κ` and the row-insertion tableau.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::evolution::{evolve, AutomatonState, Kappa};

/// `E_κ(p) = -Σ_n H(v_n ⊗ b_{n+1})` over one carrier sweep.
pub fn energy_kappa(s: &AutomatonState, kappa: Kappa) -> Result<u64> {
    let sweep = evolve(s, kappa.resolve(s))?;
    Ok(sweep.unwinding.iter().map(|&u| u as u64).sum())
}

/// `Σ_l min(l, κ) N_l` for the amplitude histogram `{l: N_l}`.
pub fn content_energy(histogram: &BTreeMap<u32, u32>, kappa: Kappa) -> u64 {
    histogram
        .iter()
        .map(|(&l, &n)| {
            let m = match kappa {
                Kappa::Finite(k) => l.min(k),
                Kappa::Infinite => l,
            };
            m as u64 * n as u64
        })
        .sum()
}

/// A semistandard tableau, rows top to bottom.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SSYTableau {
    pub rows: Vec<Vec<usize>>,
}

impl SSYTableau {
    /// Schensted row insertion of one letter.
    pub fn insert(&mut self, letter: usize) {
        let mut x = letter;
        for row in self.rows.iter_mut() {
            match row.iter().position(|&y| y > x) {
                Some(i) => x = std::mem::replace(&mut row[i], x),
                None => {
                    row.push(x);
                    return;
                }
            }
        }
        self.rows.push(vec![x]);
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let shape_ok = self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above));
        rows_ok && shape_ok && cols_ok
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn content(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }
}

impl fmt::Display for SSYTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for &x in row {
                crate::crystal::write_letter(f, x)?;
            }
        }
        Ok(())
    }
}

/// Inserts the lowered ball words `c̄_1, c̄_2, ...` of the non-vacuum boxes,
/// `c_1` being the rightmost one.
pub fn rsk_tableau(s: &AutomatonState) -> Result<SSYTableau> {
    let mut tab = SSYTableau::default();
    for b in s.boxes().iter().rev().filter(|b| !b.is_vacuum()) {
        for letter in b.letters().filter(|&m| m > 1) {
            tab.insert(letter - 1);
            if !tab.is_semistandard() {
                return Err(Error::Integrity(format!("row insertion broke semistandardness: {tab}")));
            }
        }
    }
    Ok(tab)
}
