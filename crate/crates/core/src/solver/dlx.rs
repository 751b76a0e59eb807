//! Dancing links for exact cover with all columns primary.

use std::time::Instant;

pub(crate) enum DlxResult {
    Found(Vec<usize>),
    Exhausted,
    /// The node cap or deadline was reached.
    Stopped,
}

pub(crate) struct Dlx {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    column: Vec<usize>,
    row: Vec<usize>,
    size: Vec<usize>,
    pub nodes: u64,
}

const ROOT: usize = 0;

impl Dlx {
    /// `rows[r]` lists the columns covered by row `r`.
    pub fn new(columns: usize, rows: &[Vec<usize>]) -> Self {
        let n = columns + 1;
        let mut d = Dlx {
            left: (0..n).map(|i| if i == 0 { columns } else { i - 1 }).collect(),
            right: (0..n).map(|i| if i == columns { 0 } else { i + 1 }).collect(),
            up: (0..n).collect(),
            down: (0..n).collect(),
            column: (0..n).collect(),
            row: vec![usize::MAX; n],
            size: vec![0; n],
            nodes: 0,
        };
        for (r, cols) in rows.iter().enumerate() {
            let first = d.left.len();
            for (i, &c) in cols.iter().enumerate() {
                let node = d.left.len();
                let header = c + 1;
                d.column.push(header);
                d.row.push(r);
                d.up.push(d.up[header]);
                d.down.push(header);
                let above = d.up[header];
                d.down[above] = node;
                d.up[header] = node;
                d.size[header] += 1;
                d.left.push(if i == 0 { node } else { node - 1 });
                d.right.push(first);
                if i > 0 {
                    d.right[node - 1] = node;
                    d.left[first] = node;
                }
            }
        }
        d
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
                self.down[u] = j;
                self.up[d] = j;
                self.size[self.column[j]] += 1;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    /// First exact cover found, trying columns of least remaining size.
    pub fn solve(&mut self, node_cap: u64, deadline: Option<Instant>) -> DlxResult {
        let mut chosen = Vec::new();
        match self.search(&mut chosen, node_cap, deadline) {
            Some(true) => DlxResult::Found(chosen),
            Some(false) => DlxResult::Exhausted,
            None => DlxResult::Stopped,
        }
    }

    fn search(&mut self, chosen: &mut Vec<usize>, cap: u64, deadline: Option<Instant>) -> Option<bool> {
        if self.right[ROOT] == ROOT {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > cap || (self.nodes.is_multiple_of(4096) && deadline.is_some_and(|d| Instant::now() >= d)) {
            return None;
        }
        let mut c = self.right[ROOT];
        let mut best = c;
        while c != ROOT {
            if self.size[c] < self.size[best] {
                best = c;
            }
            c = self.right[c];
        }
        if self.size[best] == 0 {
            return Some(false);
        }
        self.cover(best);
        let mut r = self.down[best];
        while r != best {
            chosen.push(self.row[r]);
            let mut j = self.right[r];
            while j != r {
                self.cover(self.column[j]);
                j = self.right[j];
            }
            let found = self.search(chosen, cap, deadline);
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.column[j]);
                j = self.left[j];
            }
            match found {
                Some(true) => {
                    self.uncover(best);
                    return Some(true);
                }
                None => {
                    self.uncover(best);
                    return None;
                }
                Some(false) => {
                    chosen.pop();
                }
            }
            r = self.down[r];
        }
        self.uncover(best);
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn knuth_example() {
        let rows = vec![vec![2, 4, 5], vec![0, 3, 6], vec![1, 2, 5], vec![0, 3], vec![1, 6], vec![3, 4, 6]];
        let mut d = Dlx::new(7, &rows);
        match d.solve(u64::MAX, None) {
            DlxResult::Found(mut rows) => {
                rows.sort_unstable();
                assert_eq!(rows, vec![0, 3, 4]);
            }
            _ => panic!("expected a cover"),
        }
    }

    #[test]
    fn no_cover() {
        let mut d = Dlx::new(3, &[vec![0, 1], vec![1, 2]]);
        assert!(matches!(d.solve(u64::MAX, None), DlxResult::Exhausted));
    }
}
