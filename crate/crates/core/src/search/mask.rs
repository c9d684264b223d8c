use std::ops::{BitOr, BitOrAssign};

/// Fixed-width bit set used on the search hot path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Mask<const W: usize>(pub [u64; W]);

impl<const W: usize> Mask<W> {
    pub fn zero() -> Self {
        Mask([0; W])
    }

    #[inline]
    pub fn set(&mut self, bit: usize) {
        self.0[bit >> 6] |= 1 << (bit & 63);
    }

    #[inline]
    pub fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    /// `|self \ other|`
    #[inline]
    pub fn count_without(&self, other: &Self) -> u32 {
        let mut c = 0;
        for i in 0..W {
            c += (self.0[i] & !other.0[i]).count_ones();
        }
        c
    }
}

impl<const W: usize> BitOr for Mask<W> {
    type Output = Self;
    #[inline]
    fn bitor(mut self, rhs: Self) -> Self {
        self |= rhs;
        self
    }
}

impl<const W: usize> BitOrAssign for Mask<W> {
    #[inline]
    fn bitor_assign(&mut self, rhs: Self) {
        for i in 0..W {
            self.0[i] |= rhs.0[i];
        }
    }
}
