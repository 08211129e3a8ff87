//! Knuth's Algorithm X on dancing links.
//!
//! Item choice is minimum remaining values with ties going to the lowest item
//! index; options under an item are tried in insertion order. The first
//! solution found is therefore a deterministic function of the input order.

use std::time::Instant;

use super::Budget;

pub(crate) struct ExactCover {
    n_items: usize,
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    column: Vec<usize>,
    option_of: Vec<usize>,
    size: Vec<usize>,
    n_options: usize,
}

pub(crate) struct Stats {
    pub nodes: u64,
}

pub(crate) enum Outcome {
    Solved(Vec<usize>),
    Exhausted,
    OverBudget,
}

impl ExactCover {
    pub fn new(n_items: usize) -> Self {
        let headers = n_items + 1;
        let mut dlx = ExactCover {
            n_items,
            left: (0..headers).map(|i| if i == 0 { n_items } else { i - 1 }).collect(),
            right: (0..headers).map(|i| if i == n_items { 0 } else { i + 1 }).collect(),
            up: (0..headers).collect(),
            down: (0..headers).collect(),
            column: (0..headers).collect(),
            option_of: vec![usize::MAX; headers],
            size: vec![0; headers],
            n_options: 0,
        };
        if n_items == 0 {
            dlx.left[0] = 0;
            dlx.right[0] = 0;
        }
        dlx
    }

    /// Adds an option covering `items` (0-based, distinct) and returns its id.
    pub fn add_option(&mut self, items: &[usize]) -> usize {
        let id = self.n_options;
        self.n_options += 1;
        let first = self.left.len();
        for (k, &item) in items.iter().enumerate() {
            assert!(item < self.n_items, "item out of range");
            let node = first + k;
            let col = item + 1;
            self.column.push(col);
            self.option_of.push(id);
            self.left.push(if k == 0 { first + items.len() - 1 } else { node - 1 });
            self.right.push(if k + 1 == items.len() { first } else { node + 1 });
            let last = self.up[col];
            self.up.push(last);
            self.down.push(col);
            self.down[last] = node;
            self.up[col] = node;
            self.size[col] += 1;
        }
        id
    }

    pub fn n_options(&self) -> usize {
        self.n_options
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.column[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.size[self.column[j]] += 1;
                self.down[u] = j;
                self.up[d] = j;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    fn choose_item(&self) -> usize {
        let mut best = self.right[0];
        let mut c = self.right[best];
        while c != 0 {
            if self.size[c] < self.size[best] {
                best = c;
            }
            c = self.right[c];
        }
        best
    }

    pub fn solve(&mut self, budget: &Budget, started: Instant, stats: &mut Stats) -> Outcome {
        let mut chosen = Vec::new();
        match self.search(budget, started, stats, &mut chosen) {
            Some(true) => {
                chosen.sort_unstable();
                Outcome::Solved(chosen)
            }
            Some(false) => Outcome::Exhausted,
            None => Outcome::OverBudget,
        }
    }

    /// `Some(found)`, or `None` once the budget runs out.
    fn search(&mut self, budget: &Budget, started: Instant, stats: &mut Stats, chosen: &mut Vec<usize>) -> Option<bool> {
        stats.nodes += 1;
        if budget.exceeded(stats.nodes, started) {
            return None;
        }
        if self.right[0] == 0 {
            return Some(true);
        }
        let c = self.choose_item();
        if self.size[c] == 0 {
            return Some(false);
        }
        self.cover(c);
        let mut r = self.down[c];
        while r != c {
            chosen.push(self.option_of[r]);
            let mut j = self.right[r];
            while j != r {
                self.cover(self.column[j]);
                j = self.right[j];
            }
            match self.search(budget, started, stats, chosen) {
                Some(false) => {}
                other => return other,
            }
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.column[j]);
                j = self.left[j];
            }
            chosen.pop();
            r = self.down[r];
        }
        self.uncover(c);
        Some(false)
    }
}
