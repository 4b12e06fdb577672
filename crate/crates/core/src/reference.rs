//! Worked runs with known box rows, carrier rows and conserved quantities.

use crate::conserved::SSYTableau;
use crate::crystal::Element;
use crate::error::Result;
use crate::evolution::{AutomatonState, EvolutionRecord, Kappa};
use crate::format::{parse_row, parse_state};

#[derive(Clone, Debug)]
pub struct ReferenceRun {
    pub name: &'static str,
    pub rank: usize,
    pub default_capacity: u32,
    pub kappas: Vec<Kappa>,
    pub rows: &'static [&'static str],
    /// Carrier rows `v_0 .. v_W`, when known.
    pub carriers: Option<&'static [&'static str]>,
    /// `E_1, E_2, ...`; the last value repeats for larger κ.
    pub energies: &'static [u64],
    pub tableau: &'static [&'static [usize]],
    /// Soliton labels at selected times.
    pub labels: &'static [(usize, &'static [&'static str])],
}

impl ReferenceRun {
    pub fn initial(&self) -> Result<AutomatonState> {
        parse_state(self.rows[0], self.rank, 0, self.default_capacity)
    }

    pub fn row(&self, t: usize) -> Result<Vec<Element>> {
        parse_row(self.rows[t], self.rank)
    }

    pub fn record(&self) -> Result<EvolutionRecord> {
        EvolutionRecord::run(&self.initial()?, &self.kappas)
    }

    pub fn energy(&self, kappa: u32) -> u64 {
        let k = (kappa as usize).min(self.energies.len());
        self.energies[k - 1]
    }

    pub fn tableau(&self) -> SSYTableau {
        SSYTableau { rows: self.tableau.iter().map(|r| r.to_vec()).collect() }
    }
}

const TWO_SOLITONS: &[&str] = &[
    "111142113111111111111",
    "111111421311111111111",
    "111111114231111111111",
    "111111111124311111111",
    "111111111112143111111",
    "111111111111211431111",
];

const CAPACITY_TWO: &[&str] = &[
    "14·11·11·33·11·11·11·11·11·11·11",
    "11·14·11·13·13·11·11·11·11·11·11",
    "11·11·14·11·33·11·11·11·11·11·11",
    "11·11·11·14·13·13·11·11·11·11·11",
    "11·11·11·11·34·11·13·11·11·11·11",
    "11·11·11·11·14·13·11·13·11·11·11",
    "11·11·11·11·11·34·11·11·13·11·11",
    "11·11·11·11·11·14·13·11·11·13·11",
    "11·11·11·11·11·11·34·11·11·11·13",
];

const CAPACITY_TWO_CARRIERS: &[&str] = &[
    "141131111111",
    "114131111111",
    "111413111111",
    "111141311111",
    "111113131111",
    "111114113111",
    "111111311311",
    "111111411131",
];

const DOUBLE: &[&str] = &[
    "14·3·123·111·24·1·1·111·11·1·1111·1111·11111·11111·111·1111",
    "11·1·114·233·11·4·2·111·11·1·1111·1111·11111·11111·111·1111",
    "11·1·111·111·34·3·1·224·11·1·1111·1111·11111·11111·111·1111",
    "11·1·111·111·11·1·4·113·34·2·1112·1111·11111·11111·111·1111",
    "11·1·111·111·11·1·1·114·13·1·1234·1112·11111·11111·111·1111",
    "11·1·111·111·11·1·1·111·14·3·1114·1223·11111·11111·111·1111",
    "11·1·111·111·11·1·1·111·11·1·1134·1234·11112·11111·111·1111",
    "11·1·111·111·11·1·1·111·11·1·1111·2334·11114·11112·111·1111",
    "11·1·111·111·11·1·1·111·11·1·1111·1134·11123·11114·112·1111",
    "11·1·111·111·11·1·1·111·11·1·1111·1111·12334·11111·114·1112",
];

/// Two solitons, unit boxes, `T_∞` five times.
pub fn two_solitons() -> ReferenceRun {
    ReferenceRun {
        name: "two-solitons",
        rank: 3,
        default_capacity: 1,
        kappas: vec![Kappa::Infinite; 5],
        rows: TWO_SOLITONS,
        carriers: None,
        energies: &[2, 3],
        tableau: &[&[1, 3], &[2]],
        labels: &[(0, &["13", "2"]), (5, &["1", "23"])],
    }
}

/// Capacity-2 boxes, `T_1` eight times, carriers included.
pub fn capacity_two() -> ReferenceRun {
    ReferenceRun {
        name: "capacity-two",
        rank: 3,
        default_capacity: 2,
        kappas: vec![Kappa::Finite(1); 8],
        rows: CAPACITY_TWO,
        carriers: Some(CAPACITY_TWO_CARRIERS),
        energies: &[2, 3],
        tableau: &[&[2, 2, 3]],
        labels: &[(0, &["3", "22"]), (8, &["23", "2"])],
    }
}

/// Inhomogeneous boxes, `T_5` four times then `T_2` five times.
pub fn double_scattering() -> ReferenceRun {
    let mut kappas = vec![Kappa::Finite(5); 4];
    kappas.extend([Kappa::Finite(2); 5]);
    ReferenceRun {
        name: "double-scattering",
        rank: 3,
        default_capacity: 1,
        kappas,
        rows: DOUBLE,
        carriers: None,
        energies: &[2, 4, 5, 6],
        tableau: &[&[1, 1, 2, 2, 3], &[3]],
        labels: &[(0, &["1223", "13"]), (4, &["23", "1123"]), (9, &["1223", "13"])],
    }
}

/// Capacities of the six-box one-soliton window.
pub const ONE_SOLITON_THETAS: [u32; 6] = [1, 2, 1, 2, 3, 2];

/// One soliton placed with leading/trailing vacant letters `(L_0, L_1)`:
/// `(label, L_0, L_1, boxes, n, n+k, x, y)`, boxes numbered from 1.
pub type OneSolitonRow = (&'static str, u32, u32, &'static str, i64, i64, i64, u32);

pub const ONE_SOLITON_TABLE: &[OneSolitonRow] = &[
    ("1", 0, 10, "2·11·1·11·111·11", 1, 2, 0, 1),
    ("1", 2, 8, "1·12·1·11·111·11", 2, 3, 2, 1),
    ("1", 3, 7, "1·11·2·11·111·11", 3, 4, 3, 1),
    ("1", 5, 5, "1·11·1·12·111·11", 4, 5, 5, 1),
    ("1", 8, 2, "1·11·1·11·112·11", 5, 6, 8, 1),
    ("11223", 0, 6, "4·33·2·12·111·11", 1, 4, 0, 4),
    ("11223", 1, 5, "1·34·3·22·111·11", 2, 5, 1, 5),
    ("11223", 2, 4, "1·14·3·23·112·11", 2, 5, 2, 4),
    ("11223", 3, 3, "1·11·4·33·122·11", 3, 5, 3, 3),
    ("11223", 4, 2, "1·11·1·34·223·11", 4, 6, 4, 5),
    ("11223", 5, 1, "1·11·1·14·233·12", 4, 6, 5, 4),
];

/// `R(b ⊗ b') = (c, c')` on `B_2 ⊗ B_1` with `M = 2`.
pub const R_EXAMPLES: &[(&str, &str, &str, &str)] = &[("13", "2", "1", "23"), ("23", "2", "3", "22")];

pub fn all() -> Vec<ReferenceRun> {
    vec![two_solitons(), capacity_two(), double_scattering()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conserved::{energy_kappa, rsk_tableau};
    use crate::format::{render_boxes, Dialect};
    use crate::solitons::extract_solitons;

    #[test]
    fn rows_reproduce() {
        for run in all() {
            let rec = run.record().unwrap();
            rec.verify().unwrap();
            for t in 0..run.rows.len() {
                let s = rec.state(t).padded(0, run.row(0).unwrap().len() as i64).unwrap().normalized();
                let want = parse_state(run.rows[t], run.rank, 0, run.default_capacity).unwrap().normalized();
                assert!(s.same_configuration(&want), "{} t={t}: {}", run.name, render_boxes(s.boxes(), Dialect::Auto));
            }
        }
    }

    #[test]
    fn carriers_reproduce() {
        let run = capacity_two();
        let rec = run.record().unwrap();
        for (t, row) in run.carriers.unwrap().iter().enumerate() {
            let got: String = rec.carriers[t].iter().map(|c| c.word()).collect();
            assert_eq!(&got[..row.len()], *row, "t={t}");
        }
    }

    #[test]
    fn invariants_and_labels() {
        for run in all() {
            let rec = run.record().unwrap();
            for t in 0..=rec.steps() {
                let s = rec.state(t);
                for k in 1..=6 {
                    assert_eq!(energy_kappa(&s, Kappa::Finite(k)).unwrap(), run.energy(k), "{} t={t} k={k}", run.name);
                }
                assert_eq!(rsk_tableau(&s).unwrap(), run.tableau(), "{} t={t}", run.name);
            }
            for &(t, want) in run.labels {
                let labels = extract_solitons(&rec.state(t), Some(1)).labels();
                let got: Option<Vec<String>> = labels.map(|v| v.iter().map(|l| l.word()).collect());
                assert_eq!(got, Some(want.iter().map(|w| w.to_string()).collect()), "{} t={t}", run.name);
            }
        }
    }
}
