//! Exact maximum Sidon/B₂[g] subsets of small integer sets by depth-first
//! branch and bound, the ground truth that extraction results are measured
//! against.
//!
//! Elements are scanned in ascending order, include branch first. The state
//! carries a sorted multiset of used pair sums (doubles included), so the
//! feasibility of adding x against chosen C costs |C|+1 lookups: the new
//! sums x+y, y ∈ C ∪ {x}, are pairwise distinct. A subtree is cut when
//! |chosen| + |remaining| ≤ best, and a greedy ascending pass seeds `best`
//! before the search starts. Exponential in |A|; intended for |A| ≤ 40.

use std::collections::BTreeMap;

use num_bigint::BigInt;

/// Outcome of a branch-and-bound run. When `exhausted` the search tree was
/// explored completely and `optimum` is exact; after a budget cutoff it is
/// only a certified lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub optimum: u64,
    /// A maximum subset (best found so far if not exhausted), ascending.
    pub witness: Vec<BigInt>,
    pub nodes_explored: u64,
    pub exhausted: bool,
}

/// Largest Sidon subset of `a`.
pub fn max_sidon(a: &[BigInt], budget: Option<u64>) -> OracleResult {
    max_b2g(a, 1, budget)
}

/// Largest B₂[g] subset of `a`: at most g unordered representations per
/// pair sum, doubles included. `budget` caps the number of search nodes.
pub fn max_b2g(a: &[BigInt], g: u64, budget: Option<u64>) -> OracleResult {
    assert!(g >= 1, "representation bound must be at least 1");
    let mut a = a.to_vec();
    a.sort();
    a.dedup();
    let greedy = greedy_b2g(&a, g);
    let mut search = Search {
        a: &a,
        g,
        best: greedy.len() as u64,
        witness: greedy,
        chosen: Vec::new(),
        sums: BTreeMap::new(),
        nodes: 0,
        budget,
        truncated: false,
    };
    search.go(0);
    OracleResult {
        optimum: search.best,
        witness: search.witness,
        nodes_explored: search.nodes,
        exhausted: !search.truncated,
    }
}

/// Ascending scan keeping every element that preserves the B₂[g] bound.
fn greedy_b2g(a: &[BigInt], g: u64) -> Vec<BigInt> {
    let mut chosen = Vec::new();
    let mut sums = BTreeMap::new();
    for x in a {
        if fits(&sums, &chosen, x, g) {
            add(&mut sums, &mut chosen, x.clone());
        }
    }
    chosen
}

struct Search<'a> {
    a: &'a [BigInt],
    g: u64,
    best: u64,
    witness: Vec<BigInt>,
    chosen: Vec<BigInt>,
    sums: BTreeMap<BigInt, u64>,
    nodes: u64,
    budget: Option<u64>,
    truncated: bool,
}

impl Search<'_> {
    fn go(&mut self, idx: usize) {
        if self.truncated {
            return;
        }
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.truncated = true;
            return;
        }
        if self.chosen.len() as u64 > self.best {
            self.best = self.chosen.len() as u64;
            self.witness = self.chosen.clone();
        }
        let remaining = self.a.len() - idx;
        if remaining == 0 || (self.chosen.len() + remaining) as u64 <= self.best {
            return;
        }
        let x = self.a[idx].clone();
        if fits(&self.sums, &self.chosen, &x, self.g) {
            add(&mut self.sums, &mut self.chosen, x);
            self.go(idx + 1);
            remove_last(&mut self.sums, &mut self.chosen);
        }
        self.go(idx + 1);
    }
}

fn fits(sums: &BTreeMap<BigInt, u64>, chosen: &[BigInt], x: &BigInt, g: u64) -> bool {
    chosen
        .iter()
        .chain(std::iter::once(x))
        .all(|y| sums.get(&(x + y)).is_none_or(|&c| c < g))
}

fn add(sums: &mut BTreeMap<BigInt, u64>, chosen: &mut Vec<BigInt>, x: BigInt) {
    for y in chosen.iter() {
        *sums.entry(y + &x).or_insert(0) += 1;
    }
    *sums.entry(&x + &x).or_insert(0) += 1;
    chosen.push(x);
}

fn remove_last(sums: &mut BTreeMap<BigInt, u64>, chosen: &mut Vec<BigInt>) {
    let x = chosen.pop().expect("remove_last on empty chosen");
    let mut dec = |s: BigInt| {
        let c = sums.get_mut(&s).expect("sum bookkeeping out of sync");
        if *c == 1 {
            sums.remove(&s);
        } else {
            *c -= 1;
        }
    };
    for y in chosen.iter() {
        dec(y + &x);
    }
    dec(&x + &x);
}
