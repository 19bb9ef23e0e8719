//! Partitions and Young-diagram combinatorics.
//!
//! Partitions are kept in the French convention: parts weakly increase from
//! left to right, e.g. `(1, 2, 4)`. Zero parts are normalized away at
//! construction, so callers may hand in tuples like `(r - j, ..., r + w)`
//! containing zeros.

use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds the canonical form: zero parts dropped, remaining parts sorted
    /// weakly increasing.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Partition {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable();
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    /// One row of length `n` (the empty partition when `n = 0`).
    pub fn row(n: u32) -> Partition {
        Partition::new([n])
    }

    /// `cols` repeated `rows` times.
    pub fn rectangle(rows: u32, cols: u32) -> Partition {
        Partition::new(std::iter::repeat(cols).take(rows as usize))
    }

    /// Parts in weakly increasing order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn largest_part(&self) -> u32 {
        self.parts.last().copied().unwrap_or(0)
    }

    /// Transposes the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let max = self.largest_part();
        Partition::new((1..=max).map(|k| {
            self.parts.iter().filter(|&&p| p >= k).count() as u32
        }))
    }

    /// Diagram containment: does `other` fit inside `self`?
    ///
    /// Compared right-aligned in the increasing convention: pad `other` with
    /// zeros to the same length and compare part-wise from the largest part
    /// down.
    pub fn contains(&self, other: &Partition) -> bool {
        if other.len() > self.len() {
            return false;
        }
        self.parts
            .iter()
            .rev()
            .zip(other.parts.iter().rev())
            .all(|(a, b)| a >= b)
    }

    /// Containment in the `(m, n)`-hook: at most `m` parts, or every part
    /// below the top `m` is at most `n`.
    pub fn in_hook(&self, m: u32, n: u32) -> bool {
        let s = self.len();
        s <= m as usize || self.parts[s - m as usize - 1] <= n
    }

    /// The unique `h >= 1` such that the diagram contains the rectangle
    /// `((r + h - 1)^h)` but not `((r + h)^(h+1))`; `None` when the single
    /// row `(r)` is already missing.
    pub fn classify_h(&self, r: u32) -> Option<u32> {
        let mut best = None;
        for h in 1..=self.len() as u32 {
            if self.contains(&Partition::rectangle(h, r + h - 1)) {
                best = Some(h);
            } else {
                break;
            }
        }
        best
    }

    /// Canonical sort key: pad the increasing part list with leading zeros to
    /// a common length; expansions render in descending padded-lex order.
    fn padded_lex_cmp(&self, other: &Partition) -> Ordering {
        let la = self.len();
        let lb = other.len();
        let width = la.max(lb);
        for i in 0..width {
            let a = if i + la >= width { self.parts[i + la - width] } else { 0 };
            let b = if i + lb >= width { other.parts[i + lb - width] } else { 0 };
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// Weight first, then reverse padded-lex, matching the printed order of
/// expansions such as `S_{222} + 5 S_{123} + 6 S_{114} + ...`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.padded_lex_cmp(other).reverse())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        if self.parts.iter().all(|&p| p <= 9) {
            for p in &self.parts {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let strs: Vec<String> = self.parts.iter().map(u32::to_string).collect();
            f.write_str(&strs.join(","))
        }
    }
}

/// All partitions fitting in a `rows x cols` box, ordered by weight and then
/// lexicographically on the zero-padded part list. The count is
/// `binomial(rows + cols, rows)`.
pub fn partitions_in_rectangle(rows: u32, cols: u32) -> Vec<Partition> {
    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut stack = vec![Vec::new()];
    while let Some(cur) = stack.pop() {
        if cur.len() == rows as usize {
            out.push(cur);
            continue;
        }
        let lo = cur.last().copied().unwrap_or(0);
        // descending push so the stack pops in ascending part order
        for next in (lo..=cols).rev() {
            let mut ext = cur.clone();
            ext.push(next);
            stack.push(ext);
        }
    }
    let mut parts: Vec<(u32, Vec<u32>)> = out
        .into_iter()
        .map(|p| (p.iter().sum::<u32>(), p))
        .collect();
    parts.sort_by(|(wa, pa), (wb, pb)| wa.cmp(wb).then_with(|| pa.cmp(pb)));
    parts.dedup();
    parts
        .into_iter()
        .map(|(_, p)| Partition::new(p))
        .collect()
}

/// All partitions of weight exactly `w`, in the canonical render order.
pub fn partitions_of_weight(w: u32) -> Vec<Partition> {
    fn rec(remaining: u32, min_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(cur.iter().copied()));
            return;
        }
        for p in min_part..=remaining {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, 1, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
