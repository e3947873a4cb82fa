use super::group::GroupPresentation;
use super::word::{Letter, Word};
use crate::error::{Error, Result};

/// One-relator presentation `<a, b | a w b^-1 w^-1>` of the two-bridge knot
/// `S(p, q)`, where `w = b^e1 a^e2 b^e3 ...` has `p - 1` letters and
/// `e_i = (-1)^floor(i q / p)`.
pub fn two_bridge(p: u64, q: u64) -> Result<GroupPresentation> {
    if p < 3 || p.is_multiple_of(2) || q == 0 || q >= p || num_integer::gcd(p, q) != 1 {
        return Err(Error::Domain(format!("S({p}, {q}) is not a two-bridge knot")));
    }
    let w = Word::new((1..p).map(|i| {
        let e = if (i * q / p).is_multiple_of(2) { 1 } else { -1 };
        Letter::new(if i % 2 == 1 { 1 } else { 0 }, e)
    }));
    let r = Word::gen(0).mul(&w).mul(&Word::gen(1).inverse()).mul(&w.inverse());
    GroupPresentation::new(vec!["a".into(), "b".into()], vec![r], 0)
}
