//! Mutation classes up to isomorphism, with the mutation graph and the
//! partition into sink/source orbits.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quiver::{CanonicalKey, Quiver};

/// Default bound on the number of members before enumeration gives up.
pub const DEFAULT_CAP: usize = 10_000;

/// Simply-laced Dynkin types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl DynkinType {
    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::D(n) => n,
            DynkinType::E6 => 6,
            DynkinType::E7 => 7,
            DynkinType::E8 => 8,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E6 => f.write_str("E6"),
            DynkinType::E7 => f.write_str("E7"),
            DynkinType::E8 => f.write_str("E8"),
        }
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, tail) = s.split_at(s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len()));
        let n: usize = tail
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::parse(format!("bad Dynkin type {s:?}")))?;
        match (head.to_ascii_uppercase().trim_end_matches('_'), n) {
            ("A", n) if n >= 1 => Ok(DynkinType::A(n)),
            ("D", n) if n >= 4 => Ok(DynkinType::D(n)),
            ("E", 6) => Ok(DynkinType::E6),
            ("E", 7) => Ok(DynkinType::E7),
            ("E", 8) => Ok(DynkinType::E8),
            _ => Err(Error::Unsupported(format!("Dynkin type {s:?}"))),
        }
    }
}

/// Fixed orientation of the Dynkin diagram: the path 1→2→…→m, plus for D and
/// E one extra vertex (the highest label) hanging off the branch vertex.
///
/// D_n branches at n−2, E_n at n−3, each with an arrow from the branch vertex.
pub fn dynkin_seed(t: DynkinType) -> Quiver {
    let n = t.rank();
    let (path_len, branch) = match t {
        DynkinType::A(n) => (n, None),
        DynkinType::D(n) => (n - 1, Some(n - 3)),
        DynkinType::E6 | DynkinType::E7 | DynkinType::E8 => (n - 1, Some(n - 4)),
    };
    let mut arrows: Vec<(usize, usize)> = (1..path_len).map(|i| (i - 1, i)).collect();
    if let Some(b) = branch {
        arrows.push((b, n - 1));
    }
    Quiver::from_arrows(n, &arrows).expect("Dynkin seed is a tree")
}

/// The closure of a seed under mutation, up to isomorphism.
#[derive(Clone, Debug)]
pub struct MutationClass {
    /// Canonical representatives in discovery order.
    pub members: Vec<Quiver>,
    /// Single mutations as (member, vertex, member reached), sorted.
    pub edges: Vec<(usize, usize, usize)>,
    index: HashMap<CanonicalKey, usize>,
    orbit_of: Vec<usize>,
    orbits: Vec<Vec<usize>>,
}

impl MutationClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member id of a quiver isomorphic to `q`, if any.
    pub fn find(&self, q: &Quiver) -> Result<Option<usize>> {
        Ok(self.index.get(&q.canonical_key()?).copied())
    }

    /// Sink/source orbits, each sorted by member id, ordered by their first member.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Orbit index of a member.
    pub fn orbit_of(&self, member: usize) -> usize {
        self.orbit_of[member]
    }

    /// Orbit representative: the member with the least canonical key.
    pub fn orbit_representative(&self, orbit: usize) -> usize {
        *self.orbits[orbit]
            .iter()
            .min_by_key(|&&m| self.members[m].counts().to_vec())
            .expect("orbits are non-empty")
    }

    /// Member reached by mutating `member` at `k`.
    pub fn mutation_target(&self, member: usize, k: usize) -> usize {
        self.edges[self.edge_offset(member) + k].2
    }

    fn edge_offset(&self, member: usize) -> usize {
        member * self.members[0].n()
    }
}

/// Breadth-first closure under all mutations, deduplicated by canonical key.
///
/// With `dynkin` set, every mutated quiver must be simply laced. Fails with
/// [`Error::CapExceeded`] once more than `cap` members are found.
pub fn enumerate(seed: &Quiver, cap: usize, dynkin: bool) -> Result<MutationClass> {
    let n = seed.n();
    let first = seed.canonical()?;
    let mut members = vec![first.clone()];
    let mut index = HashMap::new();
    index.insert(first.canonical_key()?, 0usize);
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        // mutate the whole frontier in parallel, then register serially in order
        let expanded: Vec<Result<Vec<(CanonicalKey, Quiver)>>> = frontier
            .par_iter()
            .map(|&m| {
                (0..n)
                    .map(|k| {
                        let q = members[m].mutate(k)?;
                        if dynkin && !q.is_simply_laced() {
                            return Err(Error::invariant(format!(
                                "mutation produced a multiple arrow: {q}"
                            )));
                        }
                        let (key, p) = q.canonical_form()?;
                        Ok((key, q.relabel(&p)))
                    })
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for (&m, row) in frontier.iter().zip(expanded) {
            for (k, (key, q)) in row?.into_iter().enumerate() {
                let id = match index.get(&key) {
                    Some(&id) => id,
                    None => {
                        let id = members.len();
                        if id >= cap {
                            return Err(Error::CapExceeded(format!(
                                "mutation class has more than {cap} members"
                            )));
                        }
                        index.insert(key, id);
                        members.push(q);
                        next.push(id);
                        id
                    }
                };
                edges.push((m, k, id));
            }
        }
        frontier = next;
    }
    edges.sort_unstable();
    let (orbit_of, orbits) = sink_source_orbits(&members, &index)?;
    Ok(MutationClass { members, edges, index, orbit_of, orbits })
}

fn sink_source_orbits(
    members: &[Quiver],
    index: &HashMap<CanonicalKey, usize>,
) -> Result<(Vec<usize>, Vec<Vec<usize>>)> {
    let mut uf = UnionFind::new(members.len());
    for (m, q) in members.iter().enumerate() {
        for k in 0..q.n() {
            if q.is_sink(k) || q.is_source(k) {
                let r = q.reflect(k)?;
                let id = *index.get(&r.canonical_key()?).ok_or_else(|| {
                    Error::invariant(format!("reflection left the mutation class: {r}"))
                })?;
                uf.union(m, id);
            }
        }
    }
    Ok(uf.partition())
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when two distinct sets were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Block index per element and the blocks, ordered by least element.
    pub fn partition(&mut self) -> (Vec<usize>, Vec<Vec<usize>>) {
        let n = self.parent.len();
        let mut block_of_root = HashMap::new();
        let mut block_of = vec![0; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            let b = *block_of_root.entry(r).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            block_of[x] = b;
            blocks[b].push(x);
        }
        (block_of, blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_have_the_dynkin_shape() {
        let e6 = dynkin_seed(DynkinType::E6);
        assert_eq!(e6.to_string(), "(1,2), (2,3), (3,4), (3,6), (4,5)");
        let e8 = dynkin_seed(DynkinType::E8);
        assert_eq!(e8.n(), 8);
        assert_eq!(e8.arrow_count(), 7);
        assert_eq!(e8.arrows_between(4, 7), 1);
        assert_eq!(dynkin_seed(DynkinType::A(2)).to_string(), "(1,2)");
        assert_eq!(dynkin_seed(DynkinType::D(4)).to_string(), "(1,2), (2,3), (2,4)");
    }

    #[test]
    fn type_names_parse() {
        assert_eq!("E7".parse::<DynkinType>().unwrap(), DynkinType::E7);
        assert_eq!("a_3".parse::<DynkinType>().unwrap(), DynkinType::A(3));
        assert!("E9".parse::<DynkinType>().is_err());
        assert!("D3".parse::<DynkinType>().is_err());
    }

    #[test]
    fn small_classes() {
        let a2 = enumerate(&dynkin_seed(DynkinType::A(2)), DEFAULT_CAP, true).unwrap();
        assert_eq!(a2.len(), 1);
        assert_eq!(a2.orbits().len(), 1);
        let a3 = enumerate(&dynkin_seed(DynkinType::A(3)), DEFAULT_CAP, true).unwrap();
        assert_eq!(a3.len(), 4);
        assert_eq!(a3.orbits().len(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        let e6 = dynkin_seed(DynkinType::E6);
        assert!(matches!(enumerate(&e6, 10, true), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn union_find_blocks() {
        let mut uf = UnionFind::new(5);
        uf.union(3, 1);
        uf.union(4, 3);
        let (of, blocks) = uf.partition();
        assert_eq!(blocks, vec![vec![0], vec![1, 3, 4], vec![2]]);
        assert_eq!(of[4], 1);
    }
}
