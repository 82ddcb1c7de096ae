//! Straight-line XOR programs for binary matrix–vector products.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::ops::Add;

use super::BinMatrix;
use crate::error::{Error, Result};
use crate::opcount::{AddStage, OpCounter};

/// A sequence of two-operand additions computing `A·x`.
///
/// Signals `0..inputs` are the inputs; step `k` defines signal `inputs + k` as the sum
/// of two earlier signals. `outputs[i]` names the signal holding row `i`, or `None` for
/// an all-zero row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditionSchedule {
    pub inputs: usize,
    pub steps: Vec<(usize, usize)>,
    pub outputs: Vec<Option<usize>>,
}

impl AdditionSchedule {
    /// Row-by-row schedule with no sharing; its length is the naive addition count.
    pub fn naive(a: &BinMatrix) -> AdditionSchedule {
        let rows = (0..a.rows()).map(|i| a.row_ones(i).collect()).collect();
        finish(a.cols(), Vec::new(), rows)
    }

    /// Number of additions.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn replay<T>(&self, x: &[T]) -> Result<Vec<T>>
    where
        T: Copy + Default + Add<Output = T>,
    {
        if x.len() != self.inputs {
            return Err(Error::LengthMismatch { expected: self.inputs, found: x.len() });
        }
        let mut sig = Vec::with_capacity(self.inputs + self.steps.len());
        sig.extend_from_slice(x);
        for &(a, b) in &self.steps {
            let v = sig[a] + sig[b];
            sig.push(v);
        }
        Ok(self.outputs.iter().map(|o| o.map_or_else(T::default, |s| sig[s])).collect())
    }

    /// As [`AdditionSchedule::replay`], recording every step as a binary-stage addition.
    pub fn replay_counted<T>(&self, x: &[T], counter: &mut OpCounter) -> Result<Vec<T>>
    where
        T: Copy + Default + Add<Output = T>,
    {
        let out = self.replay(x)?;
        counter.count_adds(AddStage::Binary, self.steps.len());
        Ok(out)
    }
}

/// Emits the remaining per-row sums as addition chains.
fn finish(inputs: usize, mut steps: Vec<(usize, usize)>, rows: Vec<Vec<usize>>) -> AdditionSchedule {
    let outputs = rows
        .into_iter()
        .map(|r| {
            let mut it = r.into_iter();
            let first = it.next()?;
            Some(it.fold(first, |acc, s| {
                steps.push((acc, s));
                inputs + steps.len() - 1
            }))
        })
        .collect();
    AdditionSchedule { inputs, steps, outputs }
}

#[derive(Default)]
struct PairQueue {
    counts: BTreeMap<(usize, usize), u32>,
    order: BTreeSet<(Reverse<u32>, usize, usize)>,
}

impl PairQueue {
    fn bump(&mut self, a: usize, b: usize, up: bool) {
        let key = if a < b { (a, b) } else { (b, a) };
        let c = self.counts.entry(key).or_insert(0);
        if *c > 0 {
            self.order.remove(&(Reverse(*c), key.0, key.1));
        }
        if up {
            *c += 1;
        } else {
            *c -= 1;
        }
        if *c > 0 {
            self.order.insert((Reverse(*c), key.0, key.1));
        } else {
            self.counts.remove(&key);
        }
    }

    fn best(&self) -> Option<(u32, usize, usize)> {
        self.order.first().map(|&(Reverse(c), a, b)| (c, a, b))
    }
}

/// Greedy common-subexpression elimination.
///
/// Repeatedly materializes the pair of signals that co-occurs in the most rows
/// (ties to the lowest pair of signal indices) until no pair is shared, then
/// finishes each row with a plain chain.
pub fn greedy_cse(a: &BinMatrix) -> AdditionSchedule {
    let inputs = a.cols();
    let mut rows: Vec<BTreeSet<usize>> = (0..a.rows()).map(|i| a.row_ones(i).collect()).collect();
    let mut queue = PairQueue::default();
    for r in &rows {
        let v: Vec<usize> = r.iter().copied().collect();
        for (i, &x) in v.iter().enumerate() {
            for &y in &v[i + 1..] {
                queue.bump(x, y, true);
            }
        }
    }
    let mut steps = Vec::new();
    while let Some((c, x, y)) = queue.best() {
        if c < 2 {
            break;
        }
        let s = inputs + steps.len();
        steps.push((x, y));
        for r in rows.iter_mut() {
            if !(r.contains(&x) && r.contains(&y)) {
                continue;
            }
            r.remove(&x);
            r.remove(&y);
            queue.bump(x, y, false);
            for &z in r.iter() {
                queue.bump(z, x, false);
                queue.bump(z, y, false);
                queue.bump(z, s, true);
            }
            r.insert(s);
        }
    }
    finish(inputs, steps, rows.into_iter().map(|r| r.into_iter().collect()).collect())
}
