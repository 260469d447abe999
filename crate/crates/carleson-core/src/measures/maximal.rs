//! Fefferman–Stein maximal function of a discrete measure.

use alloc::vec::Vec;

use super::DiscreteMeasure;
use crate::numerics::KahanSum;

// Safety factor applied to prune bounds so compensated-summation roundoff
// can never discard a candidate that is genuinely ahead.
const PRUNE_SLACK: f64 = 1.0 + 1e-12;

/// Evaluator for `psi_mu(x) = sup { mu(T(Q))/|Q| : Q an interval, x in Q }`.
///
/// The sup over the interval continuum is attained on minimal covering
/// intervals: each endpoint is either an atom shadow endpoint or `x`
/// itself. Candidates are scanned nearest-first with a total-mass bound
/// pruning branches that provably cannot beat the current best, so the
/// enumeration stays exact. Construction sorts the atom shadows once;
/// evaluations reuse them.
pub struct MaximalFunction {
    /// (l, u, w) sorted by shadow left end.
    by_left: Vec<(f64, f64, f64)>,
    /// Mass of atoms with shadow left end at or after each sorted position.
    suffix_mass: Vec<f64>,
    /// (u, l, w) sorted by shadow right end.
    by_right: Vec<(f64, f64, f64)>,
}

impl MaximalFunction {
    pub fn new(mu: &DiscreteMeasure) -> Self {
        let n = mu.len();
        let mut by_left: Vec<(f64, f64, f64)> = mu
            .atoms()
            .iter()
            .map(|a| (a.shadow_left(), a.shadow_right(), a.w))
            .collect();
        by_left.sort_by(|p, q| p.0.total_cmp(&q.0).then(p.1.total_cmp(&q.1)));
        let mut suffix_mass = Vec::new();
        suffix_mass.resize(n + 1, 0.0);
        let mut acc = KahanSum::new();
        for i in (0..n).rev() {
            acc.add(by_left[i].2);
            suffix_mass[i] = acc.value();
        }
        let mut by_right: Vec<(f64, f64, f64)> = mu
            .atoms()
            .iter()
            .map(|a| (a.shadow_right(), a.shadow_left(), a.w))
            .collect();
        by_right.sort_by(|p, q| p.0.total_cmp(&q.0).then(p.1.total_cmp(&q.1)));
        Self {
            by_left,
            suffix_mass,
            by_right,
        }
    }

    /// Exact value of the maximal function at `x`.
    pub fn at(&self, x: f64) -> f64 {
        let n = self.by_left.len();
        if n == 0 {
            return 0.0;
        }
        let total_mass = self.suffix_mass[0];
        let mut best = 0.0f64;

        // Left endpoints a <= x, nearest first; a = x comes first of all.
        let first_right_of_x = self.by_left.partition_point(|&(l, _, _)| l <= x);
        let mut a_cursor = first_right_of_x;
        let mut a_is_x = true;
        loop {
            let (a, mass_cap) = if a_is_x {
                (
                    x,
                    self.suffix_mass[self.by_left.partition_point(|&(l, _, _)| l < x)],
                )
            } else {
                if a_cursor == 0 {
                    break;
                }
                a_cursor -= 1;
                // Process each distinct left end once.
                while a_cursor > 0 && self.by_left[a_cursor - 1].0 == self.by_left[a_cursor].0 {
                    a_cursor -= 1;
                }
                (self.by_left[a_cursor].0, self.suffix_mass[a_cursor])
            };

            if !a_is_x {
                // All remaining left endpoints lie even further from x.
                if total_mass * PRUNE_SLACK / (x - a) < best {
                    break;
                }
                if mass_cap * PRUNE_SLACK / (x - a) < best {
                    continue;
                }
            }
            a_is_x = false;

            // Sweep right endpoints b >= x in ascending order, accumulating
            // the mass of atoms with shadow inside [a, b].
            let mut mass = KahanSum::new();
            let mut k = self.by_right.partition_point(|&(u, _, _)| u <= a);
            while k < n && self.by_right[k].0 <= x {
                if self.by_right[k].1 >= a {
                    mass.add(self.by_right[k].2);
                }
                k += 1;
            }
            if x > a && mass.value() / (x - a) > best {
                best = mass.value() / (x - a);
            }
            while k < n {
                let b = self.by_right[k].0;
                if mass_cap * PRUNE_SLACK / (b - a) < best {
                    break;
                }
                while k < n && self.by_right[k].0 == b {
                    if self.by_right[k].1 >= a {
                        mass.add(self.by_right[k].2);
                    }
                    k += 1;
                }
                let ratio = mass.value() / (b - a);
                if ratio > best {
                    best = ratio;
                }
            }
        }

        best
    }
}

/// One-shot evaluation of the maximal function; builds the sorted shadow
/// tables on each call. Construct a [`MaximalFunction`] for sweeps.
pub fn maximal_function_at(mu: &DiscreteMeasure, x: f64) -> f64 {
    MaximalFunction::new(mu).at(x)
}
