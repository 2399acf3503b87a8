use std::cmp::Ordering;
use std::fmt;

/// Largest generator index a [`Blade`] can hold. Index 0 is `w`.
pub const MAX_INDEX: u32 = 127;

/// Sign produced by reordering a product of generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self.is_negative() != rhs.is_negative())
    }
}

/// A square-free monomial in the anticommuting generators, stored as a bit set.
///
/// Bit `i` set means generator `i` occurs; bit 0 is the reserved generator `w`
/// and bits `1..=MAX_INDEX` are `v_1, v_2, ...`. The monomial is always read
/// in ascending index order.
///
/// Blades order by degree first, then lexicographically by their ascending
/// index sequences, which is the canonical term order for printing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u128);

impl Blade {
    pub const EMPTY: Blade = Blade(0);

    /// Blade holding the single generator `index`.
    ///
    /// # Panics
    ///
    /// Panics if `index > MAX_INDEX`.
    pub fn generator(index: u32) -> Blade {
        assert!(index <= MAX_INDEX, "generator index {index} exceeds {MAX_INDEX}");
        Blade(1u128 << index)
    }

    /// Builds a blade from a set of distinct indices. Returns `None` on a
    /// repeated index or an index above `MAX_INDEX`. The order of `indices`
    /// is ignored; use [`Blade::product_of`] when order carries a sign.
    pub fn from_set<I: IntoIterator<Item = u32>>(indices: I) -> Option<Blade> {
        let mut bits = 0u128;
        for i in indices {
            if i > MAX_INDEX || bits & (1u128 << i) != 0 {
                return None;
            }
            bits |= 1u128 << i;
        }
        Some(Blade(bits))
    }

    /// Ordered product `g_{i1} g_{i2} ... g_{ik}` of generators, as a signed
    /// blade, or `None` when an index repeats (the product vanishes).
    ///
    /// # Panics
    ///
    /// Panics if an index exceeds `MAX_INDEX`.
    pub fn product_of<I: IntoIterator<Item = u32>>(indices: I) -> Option<(Sign, Blade)> {
        indices
            .into_iter()
            .try_fold((Sign::Plus, Blade::EMPTY), |(sign, acc), i| {
                acc.wedge(Blade::generator(i)).map(|(s, b)| (sign * s, b))
            })
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_odd(self) -> bool {
        self.degree() % 2 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: u32) -> bool {
        index <= MAX_INDEX && self.0 & (1u128 << index) != 0
    }

    pub fn max_index(self) -> Option<u32> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros())
    }

    /// Ascending generator indices.
    pub fn indices(self) -> impl Iterator<Item = u32> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros();
            rest &= rest - 1;
            Some(i)
        })
    }

    /// Removes `index` from the set; the caller accounts for any sign.
    pub fn without(self, index: u32) -> Blade {
        Blade(self.0 & !(1u128 << index))
    }

    /// Product of two blades: `None` if they share a generator, otherwise
    /// the sign `(-1)^{#{(i, j) : i in self, j in rhs, i > j}}` and the union.
    pub fn wedge(self, rhs: Blade) -> Option<(Sign, Blade)> {
        if self.0 & rhs.0 != 0 {
            return None;
        }
        let mut swaps = 0u32;
        for j in rhs.indices() {
            // generators of `self` above j must move past it
            let above = if j == 127 { 0 } else { self.0 >> (j + 1) };
            swaps += above.count_ones();
        }
        Some((Sign::from_parity(swaps % 2 == 1), Blade(self.0 | rhs.0)))
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // lowest differing index belongs to self: its sequence is smaller
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_str("^")?;
            }
            if i == 0 {
                f.write_str("w")?;
            } else {
                write!(f, "v{i}")?;
            }
        }
        Ok(())
    }
}
