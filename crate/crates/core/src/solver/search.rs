//! Backtracking for the k-color decision problem on one connected component.
//!
//! Colors below the diameter are tracked per vertex as a bitmask domain.
//! Colors at or above the diameter can appear at most once in a connected
//! graph, so they are interchangeable: the search hands them out in
//! increasing order and only counts how many are left.
//!
//! Pruning, beyond forward checking:
//! * a colored vertex must not be recolorable to any smaller color. Every
//!   packing coloring can be turned into one with this property by repeatedly
//!   lowering colors, so restricting to such colorings loses no solutions.
//!   For each colored `x` and each smaller color `c`, some vertex within
//!   distance `c` of `x` must hold or still be able to take `c`.
//! * the number of uncolored vertices with an empty small-color domain may not
//!   exceed the number of unused large colors.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use crate::distance::DistanceMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Outcome {
    Found,
    Exhausted,
    Stopped,
}

pub(crate) struct Limits<'a> {
    pub deadline: Option<Instant>,
    pub stop: Option<&'a AtomicBool>,
}

#[derive(Clone)]
pub(crate) struct Search<'a> {
    n: usize,
    dist: &'a DistanceMatrix,
    /// Other vertices sorted by distance from `v`: `ball[v*(n-1)..]`.
    ball: &'a [u32],
    /// `within[v*(small+1) + c]`: how many of `ball` for `v` are at distance <= c.
    within: &'a [u32],
    rank: &'a [u32],
    small: u32,
    large_total: u32,
    large_used: u32,
    empty_domains: u32,
    domain: Vec<u64>,
    color: Vec<u32>,
    trail: Vec<(u32, u64)>,
    assigned: usize,
    /// Off only in tests, to cross-check the minimality pruning.
    minimal: bool,
    pub nodes: u64,
}

/// Distance tables shared by every search on one component.
pub(crate) struct Tables {
    pub ball: Vec<u32>,
    pub within: Vec<u32>,
    pub small: u32,
}

impl Tables {
    /// `small` is the number of distance-limited colors.
    pub fn new(dist: &DistanceMatrix, small: u32) -> Tables {
        let n = dist.n();
        let stride = n.saturating_sub(1);
        let mut ball = Vec::with_capacity(n * stride);
        let mut within = Vec::with_capacity(n * (small as usize + 1));
        for v in 0..n {
            let row = dist.row(v);
            let mut others: Vec<u32> = (0..n as u32).filter(|&w| w as usize != v).collect();
            others.sort_by_key(|&w| (row[w as usize], w));
            for c in 0..=small {
                within.push(others.partition_point(|&w| row[w as usize] <= c) as u32);
            }
            ball.extend(others);
        }
        Tables { ball, within, small }
    }
}

impl<'a> Search<'a> {
    pub fn new(dist: &'a DistanceMatrix, tables: &'a Tables, rank: &'a [u32], k: u32) -> Search<'a> {
        let n = dist.n();
        let small = tables.small;
        let full = if small == 64 { u64::MAX } else { (1u64 << small) - 1 };
        Search {
            n,
            dist,
            ball: &tables.ball,
            within: &tables.within,
            rank,
            small,
            large_total: k - small,
            large_used: 0,
            empty_domains: if small == 0 { n as u32 } else { 0 },
            domain: vec![full; n],
            color: vec![0; n],
            trail: Vec::new(),
            assigned: 0,
            minimal: true,
            nodes: 0,
        }
    }

    pub fn colors(&self) -> &[u32] {
        &self.color
    }

    fn large_left(&self) -> u32 {
        self.large_total - self.large_used
    }

    /// Other vertices within distance `c` of `v`.
    #[inline]
    fn ball(&self, v: usize, c: u32) -> &'a [u32] {
        let stride = self.n - 1;
        let c = c.min(self.small);
        let len = self.within[v * (self.small as usize + 1) + c as usize] as usize;
        &self.ball[v * stride..v * stride + len]
    }

    /// Every other vertex, nearest first.
    #[inline]
    fn ball_all(&self, v: usize) -> &'a [u32] {
        let stride = self.n - 1;
        &self.ball[v * stride..(v + 1) * stride]
    }

    /// Next vertex: smallest effective domain, ties by static rank.
    fn select(&self) -> Option<usize> {
        let extra = u32::from(self.large_left() > 0);
        (0..self.n)
            .filter(|&v| self.color[v] == 0)
            .min_by_key(|&v| (self.domain[v].count_ones() + extra, self.rank[v]))
    }

    /// Color choices for `v` in search order: small colors ascending, then
    /// the next unused large color.
    pub fn choices(&self, v: usize) -> Vec<u32> {
        let mut out = Vec::new();
        let mut d = self.domain[v];
        while d != 0 {
            out.push(d.trailing_zeros() + 1);
            d &= d - 1;
        }
        if self.large_left() > 0 {
            out.push(self.small + self.large_used + 1);
        }
        out
    }

    /// Whether `x` (colored) still has someone within distance `c` that
    /// holds or can take color `c`.
    fn blocked(&self, x: usize, c: u32) -> bool {
        let bit = 1u64 << (c - 1);
        self.ball(x, c).iter().any(|&w| {
            let w = w as usize;
            self.color[w] == c || (self.color[w] == 0 && self.domain[w] & bit != 0)
        })
    }

    /// Colors `v` with `c` and propagates. Returns false on a dead end; the
    /// caller must `undo` to `mark` either way.
    pub fn assign(&mut self, v: usize, c: u32) -> bool {
        debug_assert_eq!(self.color[v], 0);
        let before = self.domain[v];
        self.color[v] = c;
        self.assigned += 1;
        if before == 0 {
            self.empty_domains -= 1;
        }

        if c > self.small {
            self.large_used += 1;
        } else {
            let bit = 1u64 << (c - 1);
            for i in 0..self.ball(v, c).len() {
                let w = self.ball(v, c)[i] as usize;
                if self.color[w] == 0 && self.domain[w] & bit != 0 {
                    self.trail.push((w as u32, self.domain[w]));
                    self.domain[w] &= !bit;
                    if self.domain[w] == 0 {
                        self.empty_domains += 1;
                    }
                }
            }
        }
        if self.empty_domains > self.large_left() {
            return false;
        }
        if !self.minimal {
            return true;
        }

        // v itself: every smaller color that nothing colored blocks yet must
        // still be claimable by someone nearby.
        let below = c.min(self.small + 1) - 1;
        for c2 in 1..=below {
            if before & (1u64 << (c2 - 1)) != 0 && !self.blocked(v, c2) {
                return false;
            }
        }

        // Colored vertices that may have just lost their last blocker: those
        // for which v was a candidate, and those that relied on a vertex that
        // just lost color c.
        let reach = if c <= self.small { 2 * c } else { 0 };
        for &x in self.ball_all(v) {
            let x = x as usize;
            let cx = self.color[x];
            if cx <= 1 {
                continue;
            }
            let d = self.dist.get(v, x);
            let top = (cx - 1).min(self.small);
            if d > top && d > reach {
                continue;
            }
            for c2 in d.max(1)..=top {
                if c2 != c && !self.blocked(x, c2) {
                    return false;
                }
            }
            if c <= self.small && c < cx && d > c && d <= reach && !self.blocked(x, c) {
                return false;
            }
        }
        true
    }

    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    pub fn undo(&mut self, v: usize, mark: usize) {
        while self.trail.len() > mark {
            let (w, old) = self.trail.pop().expect("trail above mark");
            if self.domain[w as usize] == 0 {
                self.empty_domains -= 1;
            }
            self.domain[w as usize] = old;
        }
        let c = self.color[v];
        if c > self.small {
            self.large_used -= 1;
        }
        if self.domain[v] == 0 {
            self.empty_domains += 1;
        }
        self.color[v] = 0;
        self.assigned -= 1;
    }

    pub fn first_vertex(&self) -> Option<usize> {
        self.select()
    }

    pub fn run(&mut self, limits: &Limits) -> Outcome {
        self.nodes += 1;
        if self.nodes.is_multiple_of(512) {
            if limits.stop.is_some_and(|s| s.load(Ordering::Relaxed)) {
                return Outcome::Stopped;
            }
            if limits.deadline.is_some_and(|d| Instant::now() >= d) {
                return Outcome::Stopped;
            }
        }
        let Some(v) = self.select() else {
            return Outcome::Found;
        };
        for c in self.choices(v) {
            let mark = self.mark();
            if self.assign(v, c) {
                match self.run(limits) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
            self.undo(v, mark);
        }
        Outcome::Exhausted
    }
}
