//! Combinatorial R matrix `B_k ⊗ B_l ≃ B_l ⊗ B_k` and the energy function.
//!
//! The production path is the winding-line rule on the two-column dot diagram:
//! the left column holds the `k` dots of `b1`, the right column the `l` dots of
//! `b2`, with row 1 at the top. A brute-force crystal-graph construction is
//! kept next to it as an oracle.

use std::collections::{HashMap, VecDeque};

use crate::crystal::{Crystal, Element, TensorWord};
use crate::error::{Error, Result};

/// Default bound on `|B_k ⊗ B_l|` for graph enumeration.
pub const DEFAULT_SIZE_GUARD: u128 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RResult {
    /// Element of `B_l`.
    pub left_out: Element,
    /// Element of `B_k`.
    pub right_out: Element,
    pub unwinding: u32,
    pub winding: u32,
}

impl RResult {
    pub fn energy(&self) -> i64 {
        -(self.unwinding as i64)
    }

    pub fn image(&self) -> (Element, Element) {
        (self.left_out.clone(), self.right_out.clone())
    }
}

fn check_ranks(b1: &Element, b2: &Element) -> Result<()> {
    if b1.rank() != b2.rank() {
        return Err(Error::RankMismatch { left: b1.rank(), right: b2.rank() });
    }
    Ok(())
}

/// Partner row for a dot in `row` of the scanned column.
///
/// `downward` selects the `k < l` mirror image of the rule: partners come from
/// strictly lower rows, taking the highest one, and wrap to the top.
fn partner_row(remaining: &[u32], row: usize, downward: bool) -> Option<(usize, bool)> {
    if downward {
        if let Some(r) = (row + 1..remaining.len()).find(|&r| remaining[r] > 0) {
            return Some((r, true));
        }
        (0..remaining.len()).find(|&r| remaining[r] > 0).map(|r| (r, false))
    } else {
        if let Some(r) = (0..row).rev().find(|&r| remaining[r] > 0) {
            return Some((r, true));
        }
        (0..remaining.len()).rev().find(|&r| remaining[r] > 0).map(|r| (r, false))
    }
}

/// Pairs every dot of `scanned` with a dot of `other`; the dots of `scanned`
/// are visited in the order given by `rows` (one entry per dot, or a bulk
/// count per row). Returns the unpaired dots of `other` and the line counts.
fn wind(
    scanned_rows: impl Iterator<Item = (usize, u32)>,
    other: &[u32],
    downward: bool,
) -> (Vec<u32>, u32, u32) {
    let mut remaining = other.to_vec();
    let (mut unwinding, mut winding) = (0, 0);
    for (row, mut dots) in scanned_rows {
        while dots > 0 {
            let (partner, unwound) = partner_row(&remaining, row, downward)
                .expect("the longer column always has a free dot");
            let take = dots.min(remaining[partner]);
            remaining[partner] -= take;
            dots -= take;
            if unwound {
                unwinding += take;
            } else {
                winding += take;
            }
        }
    }
    (remaining, unwinding, winding)
}

fn assemble(b1: &Element, b2: &Element, unpaired: Vec<u32>, unwinding: u32, winding: u32) -> RResult {
    let (x, y) = (b1.mult(), b2.mult());
    let (left, right): (Vec<u32>, Vec<u32>) = if b1.capacity() >= b2.capacity() {
        (
            x.iter().zip(&unpaired).map(|(a, u)| a - u).collect(),
            y.iter().zip(&unpaired).map(|(a, u)| a + u).collect(),
        )
    } else {
        (
            x.iter().zip(&unpaired).map(|(a, u)| a + u).collect(),
            y.iter().zip(&unpaired).map(|(a, u)| a - u).collect(),
        )
    };
    RResult {
        left_out: Element::from_mult_unchecked(left),
        right_out: Element::from_mult_unchecked(right),
        unwinding,
        winding,
    }
}

/// `R: b1 ⊗ b2 ↦ left_out ⊗ right_out` by the winding-line rule.
///
/// Dots of the shorter column are scanned row by row, top to bottom when the
/// right column is scanned and bottom to top in the mirrored case.
pub fn combinatorial_r(b1: &Element, b2: &Element) -> Result<RResult> {
    check_ranks(b1, b2)?;
    let (x, y) = (b1.mult(), b2.mult());
    let (unpaired, unwinding, winding) = if b1.capacity() >= b2.capacity() {
        wind(y.iter().copied().enumerate(), x, false)
    } else {
        wind(x.iter().copied().enumerate().rev(), y, true)
    };
    Ok(assemble(b1, b2, unpaired, unwinding, winding))
}

/// The winding-line rule with the dots of the shorter column visited in an
/// arbitrary order. `order` lists the row of each dot exactly once.
pub fn combinatorial_r_in_order(b1: &Element, b2: &Element, order: &[usize]) -> Result<RResult> {
    check_ranks(b1, b2)?;
    let (x, y) = (b1.mult(), b2.mult());
    let k_ge_l = b1.capacity() >= b2.capacity();
    let scanned = if k_ge_l { y } else { x };
    let mut seen = vec![0u32; scanned.len()];
    for &r in order {
        if r >= seen.len() {
            return Err(Error::Argument(format!("row {r} outside the diagram")));
        }
        seen[r] += 1;
    }
    if seen != scanned {
        return Err(Error::Argument("order must list every dot of the shorter column once".into()));
    }
    let rows = order.iter().map(|&r| (r, 1));
    let (unpaired, unwinding, winding) = if k_ge_l { wind(rows, x, false) } else { wind(rows, y, true) };
    Ok(assemble(b1, b2, unpaired, unwinding, winding))
}

/// Energy `H(b1 ⊗ b2)`: minus the number of unwinding lines.
pub fn energy(b1: &Element, b2: &Element) -> Result<i64> {
    Ok(combinatorial_r(b1, b2)?.energy())
}

/// The isomorphism `B_k ⊗ B_l → B_l ⊗ B_k` as an explicit table.
#[derive(Clone, Debug)]
pub struct RTable {
    pub rank: usize,
    pub k: u32,
    pub l: u32,
    map: HashMap<(Element, Element), (Element, Element)>,
}

impl RTable {
    pub fn get(&self, b1: &Element, b2: &Element) -> Option<&(Element, Element)> {
        self.map.get(&(b1.clone(), b2.clone()))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Element, Element), &(Element, Element))> {
        self.map.iter()
    }
}

/// Builds R by walking the crystal graphs of `B_k ⊗ B_l` and `B_l ⊗ B_k` in
/// lockstep from `u_k ⊗ u_l` and `u_l ⊗ u_k`.
pub fn crystal_graph_r_oracle(k: u32, l: u32, rank: usize) -> Result<RTable> {
    crystal_graph_r_oracle_guarded(k, l, rank, DEFAULT_SIZE_GUARD)
}

pub fn crystal_graph_r_oracle_guarded(k: u32, l: u32, rank: usize, limit: u128) -> Result<RTable> {
    if k == 0 || l == 0 || rank == 0 {
        return Err(Error::Argument("oracle needs k, l, M >= 1".into()));
    }
    let size = Element::crystal_size(rank, k) * Element::crystal_size(rank, l);
    if size > limit {
        return Err(Error::SizeGuard { size, limit });
    }
    let start = TensorWord::pair(Element::vacuum(rank, k), Element::vacuum(rank, l))?;
    let image = TensorWord::pair(Element::vacuum(rank, l), Element::vacuum(rank, k))?;
    let key = |w: &TensorWord| (w.factors()[0].clone(), w.factors()[1].clone());

    let mut map = HashMap::with_capacity(size as usize);
    map.insert(key(&start), key(&image));
    let mut queue = VecDeque::from([(start, image)]);
    while let Some((w, v)) = queue.pop_front() {
        for i in 0..=rank {
            for raising in [false, true] {
                let (w2, v2) = if raising {
                    (w.raise(i)?, v.raise(i)?)
                } else {
                    (w.lower(i)?, v.lower(i)?)
                };
                match (w2, v2) {
                    (None, None) => {}
                    (Some(w2), Some(v2)) => {
                        let (kw, kv) = (key(&w2), key(&v2));
                        match map.get(&kw) {
                            Some(prev) if *prev != kv => {
                                return Err(Error::Integrity(format!(
                                    "{w2} reached with images {}⊗{} and {v2}",
                                    prev.0, prev.1
                                )))
                            }
                            Some(_) => {}
                            None => {
                                map.insert(kw, kv);
                                queue.push_back((w2, v2));
                            }
                        }
                    }
                    (a, b) => {
                        return Err(Error::Integrity(format!(
                            "operator {i} defined on only one side at {w} / {v}: {a:?} vs {b:?}"
                        )))
                    }
                }
            }
        }
    }
    if map.len() as u128 != size {
        return Err(Error::Integrity(format!("graph walk reached {} of {size} vertices", map.len())));
    }
    Ok(RTable { rank, k, l, map })
}

type RFn<'a> = dyn Fn(&Element, &Element) -> Result<(Element, Element)> + 'a;

/// Checks the braid relation `R12 R23 R12 = R23 R12 R23` on all of
/// `B_k ⊗ B_l ⊗ B_m`.
pub fn yang_baxter_check(k: u32, l: u32, m: u32, rank: usize) -> Result<bool> {
    yang_baxter_check_with(k, l, m, rank, &|a, b| combinatorial_r(a, b).map(|r| r.image()))
}

/// [`yang_baxter_check`] with a caller-supplied R.
pub fn yang_baxter_check_with(k: u32, l: u32, m: u32, rank: usize, r: &RFn<'_>) -> Result<bool> {
    let size = Element::crystal_size(rank, k) * Element::crystal_size(rank, l) * Element::crystal_size(rank, m);
    if size > DEFAULT_SIZE_GUARD {
        return Err(Error::SizeGuard { size, limit: DEFAULT_SIZE_GUARD });
    }
    let r12 = |t: (Element, Element, Element)| -> Result<(Element, Element, Element)> {
        let (a, b) = r(&t.0, &t.1)?;
        Ok((a, b, t.2))
    };
    let r23 = |t: (Element, Element, Element)| -> Result<(Element, Element, Element)> {
        let (b, c) = r(&t.1, &t.2)?;
        Ok((t.0, b, c))
    };
    for a in Element::enumerate(rank, k) {
        for b in Element::enumerate(rank, l) {
            for c in Element::enumerate(rank, m) {
                let t = (a.clone(), b.clone(), c.clone());
                let lhs = r12(r23(r12(t.clone())?)?)?;
                let rhs = r23(r12(r23(t)?)?)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
