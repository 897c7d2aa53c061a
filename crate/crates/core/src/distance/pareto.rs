use alloc::vec::Vec;

use crate::Time;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Entry {
    pub arrival: Time,
    /// Smaller is better.
    pub badness: u64,
    pub label: usize,
}

/// Non-dominated `(arrival, badness)` labels of one vertex.
///
/// Entry `x` dominates `y` iff `x.arrival <= y.arrival` and
/// `x.badness <= y.badness`. Entries are kept sorted by strictly increasing
/// arrival, which makes badness strictly decreasing.
#[derive(Debug, Clone, Default)]
pub(crate) struct ParetoFront {
    entries: Vec<Entry>,
}

impl ParetoFront {
    pub fn clear(&mut self) {
        self.entries.clear();
    }

    #[cfg(test)]
    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Best entry among those arriving no later than `t`.
    #[inline]
    pub fn best_until(&self, t: Time) -> Option<&Entry> {
        let p = self.entries.partition_point(|e| e.arrival <= t);
        p.checked_sub(1).map(|i| &self.entries[i])
    }

    /// Whether `(arrival, badness)` is currently an entry of the front.
    pub fn contains(&self, arrival: Time, badness: u64) -> bool {
        self.entries.binary_search_by_key(&arrival, |e| e.arrival).is_ok_and(|i| self.entries[i].badness == badness)
    }

    /// Inserts unless dominated; evicts entries the new one dominates.
    pub fn insert(&mut self, arrival: Time, badness: u64, label: usize) -> bool {
        let p = self.entries.partition_point(|e| e.arrival <= arrival);
        if p > 0 && self.entries[p - 1].badness <= badness {
            return false;
        }
        let from = if p > 0 && self.entries[p - 1].arrival == arrival { p - 1 } else { p };
        let mut to = p;
        while to < self.entries.len() && self.entries[to].badness >= badness {
            to += 1;
        }
        self.entries.splice(from..to, core::iter::once(Entry { arrival, badness, label }));
        true
    }
}
