//! Bit-mask enumeration helpers shared by the solvers.

/// All submasks of `mask`, from `mask` down to `0`.
pub(crate) fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// Every world over `n` atoms, as bit masks `0..2^n`.
pub(crate) fn all_worlds(n: usize) -> impl Iterator<Item = u64> {
    0..(1u64 << n)
}

/// Largest signature for which every nonempty set of worlds is enumerated.
pub(crate) const MAX_VIEW_ENUM_ATOMS: usize = 5;

/// Every nonempty set of worlds over `n` atoms (`n <= MAX_VIEW_ENUM_ATOMS`).
pub(crate) fn all_views(n: usize) -> impl Iterator<Item = Vec<u64>> {
    assert!(n <= MAX_VIEW_ENUM_ATOMS);
    let worlds = 1u64 << n;
    (1u64..(1u64 << worlds)).map(move |sel| (0..worlds).filter(|w| sel >> w & 1 == 1).collect())
}
