use std::fmt;

use super::ToyError;

/// One of the four ontic states of an elementary system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OnticIndex(u8);

impl OnticIndex {
    pub const ALL: [OnticIndex; 4] = [OnticIndex(1), OnticIndex(2), OnticIndex(3), OnticIndex(4)];

    pub fn new(index: u8) -> Result<Self, ToyError> {
        if (1..=4).contains(&index) {
            Ok(OnticIndex(index))
        } else {
            Err(ToyError::InvalidOnticIndex(index))
        }
    }

    pub fn from_bits(z: bool, x: bool) -> Self {
        OnticIndex(1 + 2 * z as u8 + x as u8)
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn z(self) -> bool {
        (self.0 - 1) & 2 != 0
    }

    pub fn x(self) -> bool {
        (self.0 - 1) & 1 != 0
    }

    pub fn bits(self) -> (bool, bool) {
        (self.z(), self.x())
    }

    /// Zero-based position, `0..4`.
    pub(crate) fn offset(self) -> usize {
        (self.0 - 1) as usize
    }
}

impl fmt::Display for OnticIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A joint ontic state: one [`OnticIndex`] per system. For two systems the
/// first entry is the grid row (first qubit) and the second the column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OnticCell {
    len: u8,
    parts: [OnticIndex; 2],
}

impl OnticCell {
    pub fn single(index: OnticIndex) -> Self {
        OnticCell {
            len: 1,
            parts: [index, OnticIndex(1)],
        }
    }

    pub fn pair(row: OnticIndex, col: OnticIndex) -> Self {
        OnticCell {
            len: 2,
            parts: [row, col],
        }
    }

    /// Builds a cell from raw indices, e.g. `&[3, 2]` for row 3, column 2.
    pub fn from_indices(indices: &[u8]) -> Result<Self, ToyError> {
        match *indices {
            [a] => Ok(Self::single(OnticIndex::new(a)?)),
            [a, b] => Ok(Self::pair(OnticIndex::new(a)?, OnticIndex::new(b)?)),
            _ => Err(ToyError::UnsupportedSystems(indices.len())),
        }
    }

    pub fn n_systems(&self) -> usize {
        self.len as usize
    }

    pub fn systems(&self) -> &[OnticIndex] {
        &self.parts[..self.len as usize]
    }

    pub fn system(&self, k: usize) -> OnticIndex {
        self.systems()[k]
    }

    /// Dense index in `0..4^n`, first system most significant.
    pub(crate) fn code(&self) -> usize {
        self.systems().iter().fold(0, |acc, i| acc * 4 + i.offset())
    }

    pub(crate) fn from_code(code: usize, n_systems: usize) -> Self {
        debug_assert!(code < 4usize.pow(n_systems as u32));
        let idx = |off: usize| OnticIndex(off as u8 + 1);
        match n_systems {
            1 => Self::single(idx(code)),
            _ => Self::pair(idx(code / 4), idx(code % 4)),
        }
    }

    /// All `4^n` cells in code order.
    pub fn all(n_systems: usize) -> impl Iterator<Item = OnticCell> {
        (0..4usize.pow(n_systems as u32)).map(move |c| Self::from_code(c, n_systems))
    }

    pub(crate) fn with_system(mut self, k: usize, index: OnticIndex) -> Self {
        self.parts[k] = index;
        self
    }
}

impl fmt::Display for OnticCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.systems() {
            [a] => write!(f, "{a}"),
            [a, b] => write!(f, "({a},{b})"),
            _ => unreachable!(),
        }
    }
}
