use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use super::{OnticCell, OnticIndex, ToyError};

/// The six single-system states of maximal knowledge, named after the
/// Pauli eigenstates they stand in for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NamedToyState {
    Zero,
    One,
    Plus,
    Minus,
    PlusI,
    MinusI,
}

impl NamedToyState {
    pub const ALL: [NamedToyState; 6] = [
        NamedToyState::Zero,
        NamedToyState::One,
        NamedToyState::Plus,
        NamedToyState::Minus,
        NamedToyState::PlusI,
        NamedToyState::MinusI,
    ];

    /// The two ontic indices of the support, ascending.
    pub fn support(self) -> [OnticIndex; 2] {
        let [a, b] = match self {
            NamedToyState::Zero => [1, 2],
            NamedToyState::One => [3, 4],
            NamedToyState::Plus => [1, 3],
            NamedToyState::Minus => [2, 4],
            NamedToyState::PlusI => [1, 4],
            NamedToyState::MinusI => [2, 3],
        };
        [OnticIndex::new(a).unwrap(), OnticIndex::new(b).unwrap()]
    }

    /// Inverse of [`support`](Self::support). Total on two-element subsets.
    pub fn from_support(support: &BTreeSet<OnticIndex>) -> Option<Self> {
        Self::ALL
            .into_iter()
            .find(|s| s.support().iter().copied().collect::<BTreeSet<_>>() == *support)
    }

    pub fn label(self) -> &'static str {
        match self {
            NamedToyState::Zero => "zero",
            NamedToyState::One => "one",
            NamedToyState::Plus => "plus",
            NamedToyState::Minus => "minus",
            NamedToyState::PlusI => "plus_i",
            NamedToyState::MinusI => "minus_i",
        }
    }
}

impl fmt::Display for NamedToyState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for NamedToyState {
    type Err = ToyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|n| n.label() == s)
            .ok_or_else(|| ToyError::UnknownLabel(s.to_string()))
    }
}

/// Returns true iff `support` is a maximal-knowledge state of `n_systems`
/// systems: two cells for one system; for two systems either a product of
/// two-element supports or the graph of a bijection between row and column
/// indices.
pub fn is_valid_epistemic(support: &BTreeSet<OnticCell>, n_systems: usize) -> bool {
    if support.iter().any(|c| c.n_systems() != n_systems) {
        return false;
    }
    match n_systems {
        1 => support.len() == 2,
        2 => {
            if support.len() != 4 {
                return false;
            }
            let rows: BTreeSet<_> = support.iter().map(|c| c.system(0)).collect();
            let cols: BTreeSet<_> = support.iter().map(|c| c.system(1)).collect();
            // four distinct cells inside rows x cols: 2x2 forces the full
            // product, 4x4 forces one cell per row and per column
            matches!((rows.len(), cols.len()), (2, 2) | (4, 4))
        }
        _ => false,
    }
}

/// A maximal-knowledge epistemic state of one or two systems.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EpistemicState {
    n_systems: usize,
    support: BTreeSet<OnticCell>,
}

impl EpistemicState {
    pub fn new(
        n_systems: usize,
        cells: impl IntoIterator<Item = OnticCell>,
    ) -> Result<Self, ToyError> {
        if !(1..=2).contains(&n_systems) {
            return Err(ToyError::UnsupportedSystems(n_systems));
        }
        let support: BTreeSet<_> = cells.into_iter().collect();
        if !is_valid_epistemic(&support, n_systems) {
            let cells: Vec<_> = support.iter().map(ToString::to_string).collect();
            return Err(ToyError::InvalidState(format!(
                "support {{{}}} for {} system(s)",
                cells.join(","),
                n_systems
            )));
        }
        Ok(EpistemicState { n_systems, support })
    }

    /// Builds a state from raw index tuples, e.g. `&[&[1, 1], &[2, 2], ...]`.
    pub fn from_indices(n_systems: usize, cells: &[&[u8]]) -> Result<Self, ToyError> {
        let cells = cells
            .iter()
            .map(|c| OnticCell::from_indices(c))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(n_systems, cells)
    }

    pub fn named(state: NamedToyState) -> Self {
        Self::product(&[state])
    }

    /// The product of one named state per system (one or two factors).
    pub fn product(factors: &[NamedToyState]) -> Self {
        let cells: Vec<OnticCell> = match *factors {
            [a] => a.support().into_iter().map(OnticCell::single).collect(),
            [a, b] => a
                .support()
                .into_iter()
                .flat_map(|r| b.support().into_iter().map(move |c| OnticCell::pair(r, c)))
                .collect(),
            _ => panic!("toy states have one or two systems"),
        };
        Self::new(factors.len(), cells).expect("products of named states are valid")
    }

    /// The toy analogue of a computational basis state: zero for `false`,
    /// one for `true`.
    pub fn basis(bits: &[bool]) -> Result<Self, ToyError> {
        if !(1..=2).contains(&bits.len()) {
            return Err(ToyError::UnsupportedSystems(bits.len()));
        }
        let factors: Vec<_> = bits
            .iter()
            .map(|&b| {
                if b {
                    NamedToyState::One
                } else {
                    NamedToyState::Zero
                }
            })
            .collect();
        Ok(Self::product(&factors))
    }

    /// Every valid state: 6 for one system, 60 (36 product + 24 graph) for two.
    pub fn all_valid(n_systems: usize) -> Vec<EpistemicState> {
        match n_systems {
            1 => NamedToyState::ALL.into_iter().map(Self::named).collect(),
            2 => {
                let mut out: Vec<_> = NamedToyState::ALL
                    .into_iter()
                    .flat_map(|a| {
                        NamedToyState::ALL
                            .into_iter()
                            .map(move |b| Self::product(&[a, b]))
                    })
                    .collect();
                for perm in permutations_of_four() {
                    let cells = OnticIndex::ALL
                        .into_iter()
                        .zip(perm)
                        .map(|(r, c)| OnticCell::pair(r, c));
                    out.push(Self::new(2, cells).expect("graph of a bijection is valid"));
                }
                out
            }
            _ => Vec::new(),
        }
    }

    pub fn n_systems(&self) -> usize {
        self.n_systems
    }

    pub fn support(&self) -> &BTreeSet<OnticCell> {
        &self.support
    }

    pub fn contains(&self, cell: &OnticCell) -> bool {
        self.support.contains(cell)
    }

    /// The ontic indices system `k` takes anywhere in the support.
    pub fn marginal(&self, k: usize) -> BTreeSet<OnticIndex> {
        self.support.iter().map(|c| c.system(k)).collect()
    }

    /// Named factors if the state is a product state.
    pub fn as_product(&self) -> Option<Vec<NamedToyState>> {
        (0..self.n_systems)
            .map(|k| {
                let m = self.marginal(k);
                if m.len() == 2 {
                    NamedToyState::from_support(&m)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Outcome distribution of the z-bits for a cell drawn uniformly from the
    /// support. Entry `i` is the probability of the outcome whose bits, first
    /// system most significant, spell `i`.
    pub fn z_marginal(&self) -> Vec<Ratio<u32>> {
        let mut counts = vec![0u32; 1 << self.n_systems];
        for cell in &self.support {
            let outcome = cell
                .systems()
                .iter()
                .fold(0, |acc, i| acc * 2 + i.z() as usize);
            counts[outcome] += 1;
        }
        let total = self.support.len() as u32;
        counts.into_iter().map(|c| Ratio::new(c, total)).collect()
    }
}

impl fmt::Display for EpistemicState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(names) = self.as_product() {
            let names: Vec<_> = names.iter().map(|n| n.label()).collect();
            return f.write_str(&names.join("*"));
        }
        let cells: Vec<_> = self.support.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", cells.join(","))
    }
}

fn permutations_of_four() -> Vec<[OnticIndex; 4]> {
    let mut out = Vec::with_capacity(24);
    let all = OnticIndex::ALL;
    for a in all {
        for b in all {
            for c in all {
                for d in all {
                    let p = [a, b, c, d];
                    let distinct: BTreeSet<_> = p.iter().collect();
                    if distinct.len() == 4 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set1(idx: &[u8]) -> BTreeSet<OnticCell> {
        idx.iter()
            .map(|&i| OnticCell::single(OnticIndex::new(i).unwrap()))
            .collect()
    }

    fn set2(idx: &[(u8, u8)]) -> BTreeSet<OnticCell> {
        idx.iter()
            .map(|&(r, c)| OnticCell::from_indices(&[r, c]).unwrap())
            .collect()
    }

    #[test]
    fn single_system_validity() {
        assert!(is_valid_epistemic(&set1(&[1, 2]), 1));
        assert!(!is_valid_epistemic(&set1(&[1, 2, 3]), 1));
        assert!(!is_valid_epistemic(&set1(&[1]), 1));
        assert!(!is_valid_epistemic(&BTreeSet::new(), 1));
        // every two-element subset is one of the named states
        for a in 1..=4u8 {
            for b in (a + 1)..=4 {
                assert!(is_valid_epistemic(&set1(&[a, b]), 1));
                let m: BTreeSet<_> = [a, b]
                    .iter()
                    .map(|&i| OnticIndex::new(i).unwrap())
                    .collect();
                assert!(NamedToyState::from_support(&m).is_some());
            }
        }
    }

    #[test]
    fn two_system_validity() {
        assert!(is_valid_epistemic(
            &set2(&[(1, 1), (2, 2), (3, 3), (4, 4)]),
            2
        ));
        assert!(is_valid_epistemic(
            &set2(&[(1, 3), (1, 4), (2, 3), (2, 4)]),
            2
        ));
        // L-shape: two rows, three columns
        assert!(!is_valid_epistemic(
            &set2(&[(1, 1), (1, 2), (2, 2), (2, 3)]),
            2
        ));
        // a full row is not maximal knowledge for the column system
        assert!(!is_valid_epistemic(
            &set2(&[(1, 1), (1, 2), (1, 3), (1, 4)]),
            2
        ));
        // three rows
        assert!(!is_valid_epistemic(
            &set2(&[(1, 1), (2, 2), (3, 3), (3, 4)]),
            2
        ));
        // wrong arity for the declared system count
        assert!(!is_valid_epistemic(&set1(&[1, 2]), 2));
        assert!(!is_valid_epistemic(&set2(&[(1, 1), (2, 2)]), 1));
    }

    #[test]
    fn sixty_two_system_states() {
        let all = EpistemicState::all_valid(2);
        assert_eq!(all.len(), 60);
        let distinct: BTreeSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 60);
        assert_eq!(all.iter().filter(|s| s.as_product().is_some()).count(), 36);
        assert_eq!(EpistemicState::all_valid(1).len(), 6);
    }

    #[test]
    fn named_supports() {
        let s = EpistemicState::product(&[NamedToyState::Zero, NamedToyState::One]);
        assert_eq!(s.support(), &set2(&[(1, 3), (1, 4), (2, 3), (2, 4)]));
        assert_eq!(
            s.as_product().unwrap(),
            vec![NamedToyState::Zero, NamedToyState::One]
        );
        assert_eq!(s.to_string(), "zero*one");
        assert_eq!(
            "plus_i".parse::<NamedToyState>().unwrap(),
            NamedToyState::PlusI
        );
        assert!("plus-i".parse::<NamedToyState>().is_err());
        assert_eq!(
            EpistemicState::basis(&[true]).unwrap(),
            EpistemicState::named(NamedToyState::One)
        );
        assert!(EpistemicState::basis(&[]).is_err());
        assert!(EpistemicState::new(3, vec![]).is_err());
    }

    #[test]
    fn z_marginals() {
        let half = Ratio::new(1, 2);
        let zero = EpistemicState::named(NamedToyState::Zero).z_marginal();
        assert_eq!(zero, vec![Ratio::from_integer(1), Ratio::from_integer(0)]);
        let plus = EpistemicState::named(NamedToyState::Plus).z_marginal();
        assert_eq!(plus, vec![half, half]);
        let graph = EpistemicState::from_indices(2, &[&[1, 1], &[2, 2], &[3, 3], &[4, 4]]).unwrap();
        assert_eq!(
            graph.z_marginal(),
            vec![half, Ratio::from_integer(0), Ratio::from_integer(0), half]
        );
        for s in EpistemicState::all_valid(2) {
            let total: Ratio<u32> = s.z_marginal().into_iter().sum();
            assert_eq!(total, Ratio::from_integer(1));
        }
    }
}
