//! Box-ball reading of `T_∞`: letter `i >= 2` is a ball with index `M+2-i`,
//! boxes have capacity `θ_n`, and `T_∞ = T̃_M ⋯ T̃_1` where `T̃_j` moves the
//! index-`j` balls one at a time, leftmost first, to the nearest box on the
//! right that has space.

use crate::crystal::Element;
use crate::error::Result;
use crate::evolution::AutomatonState;

/// One ball move of `T̃_M ⋯ T̃_1`, in the order performed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BallMove {
    pub index: usize,
    pub from: i64,
    pub to: i64,
}

pub fn ball_index(letter: usize, rank: usize) -> usize {
    rank + 2 - letter
}

pub fn ball_letter(index: usize, rank: usize) -> usize {
    rank + 2 - index
}

struct Slot {
    capacity: u32,
    unmoved: Vec<u32>,
    moved: Vec<u32>,
}

impl Slot {
    fn load(&self) -> u32 {
        self.unmoved.iter().sum::<u32>() + self.moved.iter().sum::<u32>()
    }
}

/// Runs `T̃_M ⋯ T̃_1` and returns the new state with the list of moves.
pub fn boxball_step(s: &AutomatonState) -> (AutomatonState, Vec<BallMove>) {
    let rank = s.rank();
    let total = s.ball_count() as usize;
    let start = s.window_start();
    let mut slots: Vec<Slot> = s
        .boxes()
        .iter()
        .chain(std::iter::repeat_n(&Element::vacuum(rank, s.default_capacity()), total))
        .map(|b| {
            // unmoved[j-1] counts index-j balls
            let unmoved = (1..=rank).map(|j| b.count(ball_letter(j, rank))).collect();
            Slot { capacity: b.capacity(), unmoved, moved: vec![0; rank] }
        })
        .collect();
    let mut moves = Vec::with_capacity(total);
    for j in 1..=rank {
        while let Some(from) = slots.iter().position(|slot| slot.unmoved[j - 1] > 0) {
            let to = (from + 1..slots.len())
                .find(|&i| slots[i].load() < slots[i].capacity)
                .expect("padding leaves room for every ball");
            slots[from].unmoved[j - 1] -= 1;
            slots[to].moved[j - 1] += 1;
            moves.push(BallMove { index: j, from: start + from as i64, to: start + to as i64 });
        }
    }
    let boxes = slots
        .iter()
        .map(|slot| {
            let mut mult = vec![0u32; rank + 1];
            for j in 1..=rank {
                mult[ball_letter(j, rank) - 1] = slot.moved[j - 1];
            }
            mult[0] = slot.capacity - slot.load();
            Element::new(mult).expect("capacity is positive")
        })
        .collect();
    let state = AutomatonState::new(rank, start, boxes, s.default_capacity()).expect("same rank");
    (state, moves)
}

/// `T_∞` by the box-ball rule.
pub fn evolve_boxball(s: &AutomatonState) -> AutomatonState {
    boxball_step(s).0
}

/// The canonical system `c(p)`: every ball is relabelled by its signature,
/// the step at which `T̃_M ⋯ T̃_1` moves it, giving a rank-`J` state with
/// `J` distinct ball indices.
pub fn canonicalize(s: &AutomatonState) -> Result<AutomatonState> {
    let j_total = s.ball_count() as usize;
    if j_total == 0 {
        return Ok(s.clone());
    }
    let (_, moves) = boxball_step(s);
    let mut letters: Vec<Vec<usize>> = vec![Vec::new(); s.len()];
    for (sig, mv) in moves.iter().enumerate() {
        letters[(mv.from - s.window_start()) as usize].push(ball_letter(sig + 1, j_total));
    }
    let boxes = s
        .boxes()
        .iter()
        .zip(letters)
        .map(|(b, balls)| {
            let vacancies = std::iter::repeat_n(1, b.count(1) as usize);
            Element::from_letters(vacancies.chain(balls), j_total)
        })
        .collect::<Result<Vec<_>>>()?;
    AutomatonState::new(j_total, s.window_start(), boxes, s.default_capacity())
}
