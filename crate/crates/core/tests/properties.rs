use crystal_bbs::boxball::evolve_boxball;
use crystal_bbs::cli::{ExperimentSpec, EvolveSpec, TauSpec};
use crystal_bbs::conserved::{energy_kappa, rsk_tableau};
use crystal_bbs::evolution::{evolve, evolve_infinity, evolve_inverse};
use crystal_bbs::piecewise_linear::{from_pl, pl_carrier_step, to_pl};
use crystal_bbs::rmatrix::combinatorial_r;
use crystal_bbs::tau::{sample_params, TauSolution, Window};
use crystal_bbs::{AutomatonState, Element, Kappa};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn element(rank: usize, cap: u32) -> impl Strategy<Value = Element> {
    prop::collection::vec(1..=rank + 1, cap as usize).prop_map(move |ls| Element::from_letters(ls, rank).unwrap())
}

fn state() -> impl Strategy<Value = AutomatonState> {
    (1usize..=3).prop_flat_map(|rank| {
        let one_box = (1u32..=3).prop_flat_map(move |cap| {
            // mostly vacant so that the row stays sparse
            prop_oneof![3 => Just(Element::vacuum(rank, cap)), 2 => element(rank, cap)]
        });
        prop::collection::vec(one_box, 1..14)
            .prop_map(move |boxes| AutomatonState::new(rank, 0, boxes, 1).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn t_kappa_is_invertible(s in state(), kappa in 1u32..5) {
        let next = evolve(&s, kappa).unwrap().state;
        let back = evolve_inverse(&next, kappa).unwrap();
        prop_assert!(back.same_configuration(&s));
    }

    #[test]
    fn letters_energies_and_tableau_are_conserved(s in state(), kappa in 1u32..5) {
        let next = evolve(&s, kappa).unwrap().state;
        prop_assert_eq!(next.letter_counts(), s.letter_counts());
        prop_assert_eq!(rsk_tableau(&next).unwrap(), rsk_tableau(&s).unwrap());
        for k in 1..=5 {
            prop_assert_eq!(energy_kappa(&next, Kappa::Finite(k)).unwrap(), energy_kappa(&s, Kappa::Finite(k)).unwrap());
        }
    }

    #[test]
    fn carriers_commute(s in state(), k in 1u32..5, l in 1u32..5) {
        let kl = evolve(&evolve(&s, l).unwrap().state, k).unwrap().state;
        let lk = evolve(&evolve(&s, k).unwrap().state, l).unwrap().state;
        prop_assert!(kl.same_configuration(&lk));
    }

    #[test]
    fn boxball_rule_is_t_infinity(s in state()) {
        prop_assert!(evolve_boxball(&s).same_configuration(&evolve_infinity(&s).unwrap()));
    }

    #[test]
    fn tropical_step_is_r(
        (b, v) in (1usize..=4, 1u32..=4, 1u32..=4).prop_flat_map(|(m, k, l)| (element(m, k), element(m, l)))
    ) {
        let r = combinatorial_r(&v, &b).unwrap();
        let (u2, v2) = pl_carrier_step(&to_pl(&b), &to_pl(&v)).unwrap();
        prop_assert_eq!(from_pl(&u2), r.left_out);
        prop_assert_eq!(from_pl(&v2), r.right_out);
    }

    #[test]
    fn specs_round_trip_through_json(row in "[1-4]{0,12}", ks in prop::collection::vec(prop_oneof![Just(Kappa::Infinite), (1u32..9).prop_map(Kappa::Finite)], 0..6)) {
        let spec = ExperimentSpec::Evolve(EvolveSpec {
            rank: 3, row, state: None, window_start: -2, default_capacity: 2, kappas: ks, carriers: true, dialect: "dotted".into(),
        });
        let text = serde_json::to_string(&spec).unwrap();
        let back: ExperimentSpec = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn tau_solutions_solve_the_tropical_equations(seed in any::<u64>(), n in 1usize..=3, m in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let positions: Vec<i64> = (0..n as i64).map(|i| 4 + 14 * i).collect();
        let params = sample_params(&mut rng, n, m, &positions);
        let sol = TauSolution::new(&params).unwrap();
        let w = Window { t0: 0, t1: 4, n0: -2, n1: 50 };
        prop_assert_eq!(sol.pl_residual(&w), 0);
        prop_assert_eq!(sol.automaton_mismatch(&w).unwrap(), None);
    }
}

#[test]
fn tau_spec_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let params = sample_params(&mut rng, 2, 2, &[3, 20]);
    let spec = ExperimentSpec::Tau(TauSpec { params: params.clone(), window: "0:5,0:30".parse().unwrap(), emit: "ascii".into() });
    let back: ExperimentSpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
    match back {
        ExperimentSpec::Tau(t) => {
            assert_eq!(t.params, params);
            assert_eq!(t.window, Window { t0: 0, t1: 5, n0: 0, n1: 30 });
        }
        _ => panic!("wrong kind"),
    }
}
