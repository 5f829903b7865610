//! Defining relations of a cluster-tilted algebra read off its quiver.
//!
//! For an arrow i→j, a *shortest path* is a path j⇝i without repeated
//! vertices whose cycle (the path followed by the arrow) induces a subquiver
//! with no arrows besides those of the cycle. One shortest path gives a zero
//! relation, two give a commutativity relation.

use std::fmt;

use crate::error::{Error, Result};
use crate::quiver::{Permutation, Quiver};

/// A path stored as its vertex sequence in traversal order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub vertices: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { vertices: vec![v] }
    }

    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty(), "a path visits at least one vertex");
        Path { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_trivial(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("non-empty")
    }

    /// True when every step follows an arrow of `q`.
    pub fn is_path_in(&self, q: &Quiver) -> bool {
        self.vertices.windows(2).all(|w| q.arrows_between(w[0], w[1]) > 0)
    }

    pub fn relabel(&self, p: &Permutation) -> Path {
        Path { vertices: self.vertices.iter().map(|&v| p.apply(v)).collect() }
    }
}

impl fmt::Display for Path {
    /// 1-based vertex sequence, e.g. "3->4->2".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| (v + 1).to_string()).collect();
        f.write_str(&parts.join("->"))
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path({self})")
    }
}

/// A path declared zero, together with the arrow it arises from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroRelation {
    pub arrow: (usize, usize),
    pub path: Path,
}

/// Two parallel paths declared equal, together with the arrow they arise from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CommutativityRelation {
    pub arrow: (usize, usize),
    pub paths: (Path, Path),
}

/// Minimal relations generating the ideal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationSet {
    pub zeros: Vec<ZeroRelation>,
    pub comms: Vec<CommutativityRelation>,
}

impl RelationSet {
    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty() && self.comms.is_empty()
    }
}

/// All shortest paths for the arrow i→j, sorted by vertex sequence.
pub fn shortest_paths(q: &Quiver, i: usize, j: usize) -> Vec<Path> {
    let mut out = Vec::new();
    if q.arrows_between(i, j) != 1 {
        return out;
    }
    let mut path = vec![j];
    let mut on_path = vec![false; q.n()];
    on_path[j] = true;
    extend(q, i, &mut path, &mut on_path, &mut out);
    out.sort();
    out
}

/// Depth-first extension of `path` (which starts at j) toward i, keeping the vertex set
/// free of arrows other than consecutive path steps and the closing arrow i→j.
fn extend(
    q: &Quiver,
    i: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Path>,
) {
    let last = *path.last().expect("non-empty");
    for w in 0..q.n() {
        if on_path[w] || q.arrows_between(last, w) != 1 {
            continue;
        }
        // the only arrows allowed between w and earlier vertices: last→w, and
        // i→j once w closes the cycle (w == i, then i→j joins it to path[0])
        let earlier = &path[..path.len() - 1];
        let clean = earlier.iter().enumerate().all(|(pos, &u)| {
            let closing = w == i && pos == 0;
            let expected_out = if closing { 1 } else { 0 };
            q.arrows_between(w, u) == expected_out && q.arrows_between(u, w) == 0
        });
        if !clean {
            continue;
        }
        path.push(w);
        if w == i {
            out.push(Path::new(path.clone()));
        } else {
            on_path[w] = true;
            extend(q, i, path, on_path, out);
            on_path[w] = false;
        }
        path.pop();
    }
}

/// Relations of the cluster-tilted algebra of `q`: one zero relation per
/// arrow with exactly one shortest path, one commutativity relation per arrow
/// with exactly two. More than two shortest paths is an error.
pub fn synthesize(q: &Quiver) -> Result<RelationSet> {
    let mut rels = RelationSet::default();
    for (i, j) in q.arrows() {
        let paths = shortest_paths(q, i, j);
        match paths.len() {
            0 => {}
            1 => rels.zeros.push(ZeroRelation {
                arrow: (i, j),
                path: paths.into_iter().next().expect("one path"),
            }),
            2 => {
                let mut it = paths.into_iter();
                let a = it.next().expect("two paths");
                let b = it.next().expect("two paths");
                rels.comms.push(CommutativityRelation { arrow: (i, j), paths: (a, b) });
            }
            m => {
                return Err(Error::invariant(format!(
                    "arrow {}->{} has {m} shortest paths",
                    i + 1,
                    j + 1
                )))
            }
        }
    }
    Ok(rels)
}
