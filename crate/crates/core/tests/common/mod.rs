//! Brute-force oracles, independent of every implementation path they
//! check: plain recursive enumeration over the two-letter alphabet.

use std::collections::HashMap;

/// All balanced words of semilength `n` in series order, by direct
/// recursive enumeration with `'('` tried before `')'`.
pub fn enumerate_words(n: usize) -> Vec<String> {
    fn rec(opens_left: usize, unbalance: usize, buf: &mut String, out: &mut Vec<String>) {
        if opens_left == 0 && unbalance == 0 {
            out.push(buf.clone());
            return;
        }
        if opens_left > 0 {
            buf.push('(');
            rec(opens_left - 1, unbalance + 1, buf, out);
            buf.pop();
        }
        if unbalance > 0 {
            buf.push(')');
            rec(opens_left, unbalance - 1, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, &mut String::new(), &mut out);
    out
}

/// Counts, for every unbalance `j`, the walks of length `len` over
/// {up, down} whose prefixes never dip below zero. Exhaustive descent,
/// no recurrence involved.
pub fn walk_endpoint_counts(len: usize) -> HashMap<usize, u64> {
    fn rec(remaining: usize, unbalance: usize, out: &mut HashMap<usize, u64>) {
        if remaining == 0 {
            *out.entry(unbalance).or_insert(0) += 1;
            return;
        }
        rec(remaining - 1, unbalance + 1, out);
        if unbalance > 0 {
            rec(remaining - 1, unbalance - 1, out);
        }
    }
    let mut out = HashMap::new();
    rec(len, 0, &mut out);
    out
}

/// For each node `(i, j)`, how many complete `2n`-paths visit it.
/// The origin is visited by every path.
pub fn visit_counts(n: usize) -> HashMap<(usize, usize), u64> {
    let mut counts = HashMap::new();
    for word in enumerate_words(n) {
        *counts.entry((0usize, 0usize)).or_insert(0) += 1;
        let mut i = 0usize;
        let mut j = 0usize;
        for ch in word.chars() {
            i += 1;
            if ch == '(' {
                j += 1;
            } else {
                j -= 1;
            }
            *counts.entry((i, j)).or_insert(0) += 1;
        }
    }
    counts
}
