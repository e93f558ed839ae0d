//! Lexicographic k-subset enumeration over `0..n`, shared by the witness
//! searches and the cut/fault-set sweeps.

use alloc::vec::Vec;

/// Calls `visit` for every k-subset of `0..n` in lexicographic order until it
/// returns `true`; returns the first accepted subset, if any.
pub(crate) fn find_subset<F>(n: usize, k: usize, mut visit: F) -> Option<Vec<usize>>
where
    F: FnMut(&[usize]) -> bool,
{
    if k > n {
        return None;
    }
    let mut buf: Vec<usize> = (0..k).collect();
    loop {
        if visit(&buf) {
            return Some(buf);
        }
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if buf[i] != i + n - k {
                break;
            }
            if i == 0 {
                return None;
            }
        }
        buf[i] += 1;
        for j in i + 1..k {
            buf[j] = buf[j - 1] + 1;
        }
    }
}
