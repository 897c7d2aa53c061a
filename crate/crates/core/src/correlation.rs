//! Rank correlation between score vectors.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::{Error, Result};

/// Kendall's tau-b of two equally long samples in `O(n log n)`.
///
/// Ties are handled with the tau-b correction. Returns `None` when fewer
/// than two observations exist or either sample is constant.
pub fn kendall_tau_b(x: &[f64], y: &[f64]) -> Result<Option<f64>> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    if x.iter().chain(y).any(|v| v.is_nan()) {
        return Err(Error::InvalidParameter("samples must not contain NaN"));
    }
    let n = x.len();
    if n < 2 {
        return Ok(None);
    }

    let mut pairs: Vec<(f64, f64)> = x.iter().copied().zip(y.iter().copied()).collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));

    let total = pair_count(n as u64);
    let x_ties = tie_pairs(&pairs, |a, b| a.0.total_cmp(&b.0));
    let joint_ties = tie_pairs(&pairs, |a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));

    let mut ys: Vec<f64> = pairs.iter().map(|p| p.1).collect();
    let mut buffer = ys.clone();
    let swaps = merge_count(&mut ys, &mut buffer);
    let y_ties = tie_pairs(&ys, |a, b| a.total_cmp(b));

    let denom_x = total - x_ties;
    let denom_y = total - y_ties;
    if denom_x == 0 || denom_y == 0 {
        return Ok(None);
    }
    let numerator = total as f64 - x_ties as f64 - y_ties as f64 + joint_ties as f64 - 2.0 * swaps as f64;
    Ok(Some(numerator / libm::sqrt(denom_x as f64 * denom_y as f64)))
}

fn pair_count(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Number of tied pairs among runs of a sorted slice.
fn tie_pairs<T>(sorted: &[T], cmp: impl Fn(&T, &T) -> Ordering) -> u64 {
    sorted.chunk_by(|a, b| cmp(a, b) == Ordering::Equal).map(|run| pair_count(run.len() as u64)).sum()
}

/// Stable merge sort of `v` counting the inversions it removes.
fn merge_count(v: &mut [f64], buffer: &mut [f64]) -> u64 {
    let n = v.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut swaps = {
        let (left, right) = v.split_at_mut(mid);
        let (bl, br) = buffer.split_at_mut(mid);
        merge_count(left, bl) + merge_count(right, br)
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if v[j].total_cmp(&v[i]) == Ordering::Less {
            buffer[k] = v[j];
            swaps += (mid - i) as u64;
            j += 1;
        } else {
            buffer[k] = v[i];
            i += 1;
        }
        k += 1;
    }
    buffer[k..k + mid - i].copy_from_slice(&v[i..mid]);
    k += mid - i;
    buffer[k..k + n - j].copy_from_slice(&v[j..n]);
    v.copy_from_slice(&buffer[..n]);
    swaps
}
