use super::WindowContext;
use crate::words::FWord;

/// Whether the window occurs in some word v 1^{s_1} v … 1^{s_k} v.
///
/// Runs the automaton whose states are "inside a copy of v, next symbol v[p]"
/// and "between copies"; every state may start, since the window can begin
/// anywhere in such a word and both ends may be extended.
pub fn detect_built_from(ctx: &WindowContext, v: &FWord) -> bool {
    let v = v.word().bits();
    let m = v.len();
    let between = m;
    let mut live = vec![true; m + 1];
    let mut next = vec![false; m + 1];
    for &c in ctx.word.bits() {
        next.iter_mut().for_each(|x| *x = false);
        for p in 0..m {
            if live[p] && v[p] == c {
                next[if p + 1 == m { between } else { p + 1 }] = true;
            }
        }
        if live[between] {
            if c == 1 {
                next[between] = true;
            }
            if c == v[0] {
                next[if m == 1 { between } else { 1 }] = true;
            }
        }
        std::mem::swap(&mut live, &mut next);
        if !live.iter().any(|&x| x) {
            return false;
        }
    }
    true
}
