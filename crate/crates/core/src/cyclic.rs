//! Maximal cyclic subgroups and the invariants built on them.
//!
//! A [`CyclicDecomposition`] lists every maximal cyclic subgroup once, with a
//! canonical generator (the smallest element index generating it), in the
//! default order: descending size, then ascending generator.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::group::FiniteGroup;
use crate::set::ElementSet;

/// Index of the unordered pair `i < j` among the `m(m-1)/2` pairs, in
/// lexicographic order.
pub fn pair_index(m: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < m);
    i * (2 * m - i - 1) / 2 + (j - i - 1)
}

/// All pairs `(i, j)` with `i < j < m`, lexicographically.
pub fn pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..m).flat_map(move |i| (i + 1..m).map(move |j| (i, j)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalCyclic {
    pub generator: usize,
    pub members: ElementSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionError {
    MissingIdentity { entry: usize },
    Duplicate { first: usize, second: usize },
    Nested { inner: usize, outer: usize },
    Uncovered { element: usize },
    GeneratorOutside { entry: usize },
}

impl fmt::Display for DecompositionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionError::MissingIdentity { entry } => {
                write!(f, "entry {entry} does not contain the identity")
            }
            DecompositionError::Duplicate { first, second } => {
                write!(f, "entries {first} and {second} are equal")
            }
            DecompositionError::Nested { inner, outer } => {
                write!(f, "entry {inner} is contained in entry {outer}")
            }
            DecompositionError::Uncovered { element } => {
                write!(f, "element {element} lies in no entry")
            }
            DecompositionError::GeneratorOutside { entry } => {
                write!(f, "generator of entry {entry} is not a member")
            }
        }
    }
}

impl core::error::Error for DecompositionError {}

/// The essential cyclic set of a group together with pairwise intersections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicDecomposition {
    order: usize,
    subgroups: Vec<MaximalCyclic>,
    intersections: Vec<ElementSet>,
}

impl CyclicDecomposition {
    /// Enumerates all cyclic subgroups, keeps the maximal ones.
    pub fn of_group(g: &FiniteGroup) -> Self {
        let n = g.order();
        // ascending scan, so the first generator seen is the canonical one
        let mut cyclic: BTreeMap<ElementSet, usize> = BTreeMap::new();
        for x in 0..n {
            cyclic.entry(g.generated_subgroup(x)).or_insert(x);
        }
        let all: Vec<(ElementSet, usize)> = cyclic.into_iter().collect();
        let mut subgroups: Vec<MaximalCyclic> = all
            .iter()
            .filter(|(s, _)| {
                !all.iter().any(|(t, _)| t.len() > s.len() && s.is_subset(t))
            })
            .map(|(s, gen)| MaximalCyclic { generator: *gen, members: s.clone() })
            .collect();
        subgroups.sort_by(|a, b| {
            b.members.len().cmp(&a.members.len()).then(a.generator.cmp(&b.generator))
        });
        Self::with_intersections(n, subgroups)
    }

    /// Builds a decomposition from explicit subsets of `0..order` with
    /// identity `0`. Used for synthetic structures that are not groups.
    pub fn from_subsets(
        order: usize,
        entries: Vec<(usize, ElementSet)>,
    ) -> Result<Self, DecompositionError> {
        for (i, (gen, s)) in entries.iter().enumerate() {
            if !s.contains(0) {
                return Err(DecompositionError::MissingIdentity { entry: i });
            }
            if !s.contains(*gen) {
                return Err(DecompositionError::GeneratorOutside { entry: i });
            }
        }
        for i in 0..entries.len() {
            for j in 0..entries.len() {
                if i == j {
                    continue;
                }
                if entries[i].1 == entries[j].1 {
                    return Err(DecompositionError::Duplicate { first: i.min(j), second: i.max(j) });
                }
                if entries[i].1.is_subset(&entries[j].1) {
                    return Err(DecompositionError::Nested { inner: i, outer: j });
                }
            }
        }
        let mut cover = ElementSet::new(order);
        for (_, s) in &entries {
            cover.union_with(s);
        }
        if let Some(element) = (0..order).find(|&x| !cover.contains(x)) {
            return Err(DecompositionError::Uncovered { element });
        }
        let subgroups = entries
            .into_iter()
            .map(|(generator, members)| MaximalCyclic { generator, members })
            .collect();
        Ok(Self::with_intersections(order, subgroups))
    }

    fn with_intersections(order: usize, subgroups: Vec<MaximalCyclic>) -> Self {
        let m = subgroups.len();
        let mut intersections = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                intersections.push(subgroups[i].members.intersection(&subgroups[j].members));
            }
        }
        CyclicDecomposition { order, subgroups, intersections }
    }

    /// The same subgroups listed as `order[0], order[1], ...`.
    pub fn reordered(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.m(), "order must be a permutation of 0..m");
        let subgroups = order.iter().map(|&i| self.subgroups[i].clone()).collect();
        Self::with_intersections(self.order, subgroups)
    }

    /// Group order.
    pub fn order(&self) -> usize {
        self.order
    }

    /// `|Max_G|`.
    pub fn m(&self) -> usize {
        self.subgroups.len()
    }

    pub fn subgroups(&self) -> &[MaximalCyclic] {
        &self.subgroups
    }

    pub fn members(&self, i: usize) -> &ElementSet {
        &self.subgroups[i].members
    }

    pub fn generator(&self, i: usize) -> usize {
        self.subgroups[i].generator
    }

    pub fn intersection(&self, i: usize, j: usize) -> &ElementSet {
        &self.intersections[i * self.m() + j]
    }

    /// Indices of entries containing `x`.
    pub fn containing(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.m()).filter(move |&i| self.members(i).contains(x))
    }

    /// Independence cyclic set, maximal involutions and exclusion witnesses.
    pub fn ics_report(&self) -> IcsReport {
        let m = self.m();
        let mut ics = Vec::new();
        let mut excluded = Vec::new();
        for i in 0..m {
            let hit = (0..m).filter(|&j| j != i).find_map(|j| {
                self.intersection(i, j).iter().find(|&x| x != 0).map(|x| (j, x))
            });
            match hit {
                None => ics.push(i),
                Some((j, element)) => excluded.push(Exclusion { entry: i, other: j, element }),
            }
        }
        let invmax = ics.iter().copied().filter(|&i| self.members(i).len() == 2).collect();
        IcsReport { icn: ics.len(), ics_indices: ics, invmax_indices: invmax, excluded }
    }

    /// A choice of pairwise distinct non-identity `h[i][j]` in every
    /// pairwise intersection, when one exists.
    ///
    /// Distinct representatives are a bipartite matching between pairs and
    /// elements; augmenting paths are tried with pairs in lexicographic order
    /// and candidates in ascending element order, so the answer is
    /// deterministic.
    pub fn distinct_witnesses(&self) -> Option<WitnessMatrix> {
        let m = self.m();
        if m < 2 {
            return None;
        }
        let candidates: Vec<Vec<usize>> = pairs(m)
            .map(|(i, j)| self.intersection(i, j).iter().filter(|&x| x != 0).collect())
            .collect();
        if candidates.iter().any(|c| c.is_empty()) {
            return None;
        }
        let mut owner: Vec<Option<usize>> = vec![None; self.order];
        for p in 0..candidates.len() {
            let mut seen = vec![false; self.order];
            if !augment(p, &candidates, &mut owner, &mut seen) {
                return None;
            }
        }
        let mut h = vec![0; candidates.len()];
        for (x, o) in owner.iter().enumerate() {
            if let Some(p) = o {
                h[*p] = x;
            }
        }
        Some(WitnessMatrix { m, h })
    }
}

fn augment(
    p: usize,
    candidates: &[Vec<usize>],
    owner: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &x in &candidates[p] {
        if seen[x] {
            continue;
        }
        seen[x] = true;
        if owner[x].is_none_or(|q| augment(q, candidates, owner, seen)) {
            owner[x] = Some(p);
            return true;
        }
    }
    false
}

/// Upper-triangular matrix of elements `h[i][j]`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessMatrix {
    m: usize,
    h: Vec<usize>,
}

impl WitnessMatrix {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        let (i, j) = (i.min(j), i.max(j));
        self.h[pair_index(self.m, i, j)]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        pairs(self.m).map(move |(i, j)| (i, j, self.get(i, j)))
    }
}

/// Why entry `entry` is not in the independence cyclic set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exclusion {
    pub entry: usize,
    pub other: usize,
    /// A non-identity element of the intersection.
    pub element: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IcsReport {
    pub ics_indices: Vec<usize>,
    pub icn: usize,
    /// Entries of size 2, i.e. maximal involutions.
    pub invmax_indices: Vec<usize>,
    pub excluded: Vec<Exclusion>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupSpec, DEFAULT_ORDER_CAP};

    fn decompose(spec: &str) -> (FiniteGroup, CyclicDecomposition) {
        let g = FiniteGroup::construct(&spec.parse::<GroupSpec>().unwrap(), DEFAULT_ORDER_CAP).unwrap();
        let d = CyclicDecomposition::of_group(&g);
        (g, d)
    }

    #[test]
    fn pair_indexing() {
        let m = 5;
        let all: Vec<_> = pairs(m).collect();
        for (k, &(i, j)) in all.iter().enumerate() {
            assert_eq!(pair_index(m, i, j), k);
        }
        assert_eq!(all.len(), 10);
    }

    #[test]
    fn cyclic_group_has_one_entry() {
        let (_, d) = decompose("cyclic(6)");
        assert_eq!(d.m(), 1);
        assert_eq!(d.members(0).len(), 6);
        assert_eq!(d.generator(0), 1);
    }

    #[test]
    fn klein_four() {
        let (_, d) = decompose("elementary_abelian(2,2)");
        assert_eq!(d.m(), 3);
        assert!(d.subgroups().iter().all(|s| s.members.len() == 2));
        let r = d.ics_report();
        assert_eq!(r.icn, 3);
        assert_eq!(r.invmax_indices.len(), 3);
        assert!(d.distinct_witnesses().is_none());
    }

    #[test]
    fn quaternion() {
        let (g, d) = decompose("dicyclic(2)");
        assert_eq!(d.m(), 3);
        for (i, j) in pairs(3) {
            assert_eq!(d.members(i).len(), 4);
            assert_eq!(d.intersection(i, j).len(), 2);
            assert!(d.intersection(i, j).contains(g.involutions()[0]));
        }
        let r = d.ics_report();
        assert_eq!((r.icn, r.invmax_indices.len()), (0, 0));
        assert_eq!(r.excluded.len(), 3);
        assert!(d.distinct_witnesses().is_none());
    }

    #[test]
    fn z2_times_z4() {
        let (_, d) = decompose("product(cyclic(2),cyclic(4))");
        assert_eq!(d.m(), 4);
        assert_eq!(d.intersection(0, 1).len(), 2);
        let r = d.ics_report();
        assert_eq!(r.icn, 2);
        assert_eq!(r.ics_indices, vec![2, 3]);
        assert_eq!(r.invmax_indices, vec![2, 3]);
    }

    #[test]
    fn z3_times_z3_has_no_distinct_witnesses() {
        let (_, d) = decompose("elementary_abelian(3,2)");
        assert_eq!(d.m(), 4);
        assert!(pairs(4).all(|(i, j)| d.intersection(i, j).len() == 1));
        assert!(d.distinct_witnesses().is_none());
    }

    #[test]
    fn distinct_witnesses_in_z3_times_q8() {
        let (_, d) = decompose("product(cyclic(3),dicyclic(2))");
        assert_eq!(d.m(), 3);
        let w = d.distinct_witnesses().expect("centre has 5 non-identity elements");
        let mut seen = alloc::collections::BTreeSet::new();
        for (i, j, h) in w.entries() {
            assert_ne!(h, 0);
            assert!(d.intersection(i, j).contains(h));
            assert!(seen.insert(h));
        }
    }

    #[test]
    fn reordering_permutes_entries() {
        let (_, d) = decompose("product(cyclic(2),cyclic(4))");
        let r = d.reordered(&[3, 2, 1, 0]);
        assert_eq!(r.members(0), d.members(3));
        assert_eq!(r.intersection(2, 3), d.intersection(1, 0));
    }

    #[test]
    fn synthetic_subsets_are_checked() {
        let s = |v: &[usize]| ElementSet::from_iter_in(4, v.iter().copied());
        assert!(CyclicDecomposition::from_subsets(4, vec![(1, s(&[0, 1, 2])), (3, s(&[0, 2, 3]))]).is_ok());
        assert_eq!(
            CyclicDecomposition::from_subsets(4, vec![(1, s(&[0, 1])), (2, s(&[0, 2]))]),
            Err(DecompositionError::Uncovered { element: 3 })
        );
        assert_eq!(
            CyclicDecomposition::from_subsets(4, vec![(1, s(&[1, 2, 3]))]),
            Err(DecompositionError::MissingIdentity { entry: 0 })
        );
        assert!(matches!(
            CyclicDecomposition::from_subsets(4, vec![(1, s(&[0, 1])), (3, s(&[0, 1, 2, 3]))]),
            Err(DecompositionError::Nested { inner: 0, outer: 1 })
        ));
    }
}
