//! The quotient KQ/I as a combinatorial object: a basis of nonzero path
//! classes with 0/1 structure constants, Hom spaces between indecomposable
//! projectives, and the Cartan matrix.
//!
//! Relations are monomials and unit binomials, so KQ/(I + J^N) has a basis
//! indexed by the connected components of the "differ by one substitution"
//! graph on paths of length < N that contain no zero path. A component is zero
//! when it touches a zero path or a path of length ≥ N. Commutativity
//! relations may join paths of different lengths, so components are not
//! graded. Once every path of length N−1 is zero, J^(N−1) ⊆ I + J^N, which
//! together with finite dimensionality gives J^(N−1) ⊆ I and the truncated
//! computation is exact.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::mutation_class::UnionFind;
use crate::quiver::Quiver;
use crate::relations::{Path, RelationSet};

/// A nonzero class of paths, represented by its lexicographically least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathClass {
    pub start: usize,
    pub end: usize,
    pub rep: Path,
    /// Every path of length < the stabilization length in this class.
    pub members: Vec<Path>,
}

/// Basis of KQ/I by path classes, with the multiplication table.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    n: usize,
    classes: Vec<PathClass>,
    class_of: HashMap<Vec<usize>, usize>,
    by_ends: Vec<Vec<usize>>,
    mult: Vec<Option<usize>>,
    stable_length: usize,
}

/// n×n integer matrix with `c[i][j]` = number of nonzero path classes i⇝j.
pub type CartanMatrix = Vec<Vec<i64>>;

impl PathAlgebra {
    /// Computes the quotient, raising the truncation until it stabilizes.
    /// `cap` bounds the truncation length (callers typically pass 4n).
    pub fn new(q: &Quiver, rels: &RelationSet, cap: usize) -> Result<Self> {
        if !q.is_simply_laced() {
            return Err(Error::Unsupported(
                "path classes are tracked by vertex sequence; multiple arrows are not supported"
                    .into(),
            ));
        }
        let zeros: Vec<&[usize]> = rels.zeros.iter().map(|z| z.path.vertices.as_slice()).collect();
        let mut subs: Vec<(&[usize], &[usize])> = Vec::new();
        for c in &rels.comms {
            let (a, b) = (&c.paths.0.vertices, &c.paths.1.vertices);
            subs.push((a, b));
            subs.push((b, a));
        }
        for trunc in 1..=cap.max(1) {
            if let Some(alg) = Self::truncated(q, &zeros, &subs, trunc) {
                return Ok(alg);
            }
        }
        Err(Error::CapExceeded(format!(
            "path classes did not stabilize below length {cap}"
        )))
    }

    /// The algebra KQ/(I + J^trunc) if every path of length trunc−1 is zero in
    /// it, `None` otherwise.
    fn truncated(
        q: &Quiver,
        zeros: &[&[usize]],
        subs: &[(&[usize], &[usize])],
        trunc: usize,
    ) -> Option<Self> {
        let n = q.n();
        // clean paths of length < trunc, by increasing length
        let mut paths: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        let mut layer: Vec<usize> = (0..n).collect();
        for _ in 1..trunc {
            let mut next = Vec::new();
            for &p in &layer {
                let last = *paths[p].last().expect("non-empty");
                for w in 0..n {
                    if q.arrows_between(last, w) == 0 {
                        continue;
                    }
                    let mut ext = paths[p].clone();
                    ext.push(w);
                    if !zeros.iter().any(|z| ext.ends_with(z)) {
                        next.push(paths.len());
                        paths.push(ext);
                    }
                }
            }
            layer = next;
        }
        let id: HashMap<Vec<usize>, usize> =
            paths.iter().enumerate().map(|(i, p)| (p.clone(), i + 1)).collect();
        let clean = |p: &[usize]| !zeros.iter().any(|z| p.windows(z.len()).any(|w| w == *z));
        let mut uf = UnionFind::new(paths.len() + 1);
        for (pi, p) in paths.iter().enumerate() {
            for &(from, to) in subs {
                if from.len() > p.len() {
                    continue;
                }
                for pos in 0..=p.len() - from.len() {
                    if &p[pos..pos + from.len()] != from {
                        continue;
                    }
                    let mut r = p[..pos].to_vec();
                    r.extend_from_slice(to);
                    r.extend_from_slice(&p[pos + from.len()..]);
                    let target = if r.len() > trunc || !clean(&r) {
                        0
                    } else {
                        id[&r]
                    };
                    uf.union(pi + 1, target);
                }
            }
        }
        let zero_root = uf.find(0);
        // stabilization: every path of length trunc−1 must be zero
        if layer.iter().any(|&p| uf.find(p + 1) != zero_root) {
            return None;
        }
        let mut root_class: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<PathClass> = Vec::new();
        let mut class_of = HashMap::new();
        for (pi, p) in paths.iter().enumerate() {
            let root = uf.find(pi + 1);
            if root == zero_root {
                continue;
            }
            let c = *root_class.entry(root).or_insert_with(|| {
                classes.push(PathClass {
                    start: p[0],
                    end: *p.last().expect("non-empty"),
                    rep: Path::new(p.clone()),
                    members: Vec::new(),
                });
                classes.len() - 1
            });
            classes[c].members.push(Path::new(p.clone()));
            class_of.insert(p.clone(), c);
        }
        for c in &mut classes {
            c.members.sort();
            c.rep = c.members[0].clone();
        }
        // deterministic class order: by endpoints, then representative
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by(|&a, &b| {
            let (x, y) = (&classes[a], &classes[b]);
            (x.start, x.end, &x.rep).cmp(&(y.start, y.end, &y.rep))
        });
        let mut renum = vec![0; classes.len()];
        for (new, &old) in order.iter().enumerate() {
            renum[old] = new;
        }
        let classes: Vec<PathClass> = order.iter().map(|&o| classes[o].clone()).collect();
        for c in class_of.values_mut() {
            *c = renum[*c];
        }
        let mut by_ends = vec![Vec::new(); n * n];
        for (c, cl) in classes.iter().enumerate() {
            by_ends[cl.start * n + cl.end].push(c);
        }
        let m = classes.len();
        let mut mult = vec![None; m * m];
        for (x, cx) in classes.iter().enumerate() {
            for (y, cy) in classes.iter().enumerate() {
                if cx.end != cy.start {
                    continue;
                }
                let mut cat = cx.rep.vertices.clone();
                cat.extend_from_slice(&cy.rep.vertices[1..]);
                mult[x * m + y] = class_of.get(&cat).copied();
            }
        }
        Some(PathAlgebra {
            n,
            classes,
            class_of,
            by_ends,
            mult,
            stable_length: trunc - 1,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the algebra.
    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[PathClass] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &PathClass {
        &self.classes[c]
    }

    /// Least length L such that every path of length ≥ L is zero.
    pub fn stable_length(&self) -> usize {
        self.stable_length
    }

    /// Class of a path, `None` when it is zero in the algebra.
    pub fn class_of(&self, p: &Path) -> Option<usize> {
        self.class_of.get(&p.vertices).copied()
    }

    /// Class of the trivial path at `v`.
    pub fn trivial(&self, v: usize) -> usize {
        self.class_of[&vec![v]]
    }

    /// Nonzero classes of paths i⇝j: a basis of Hom(P_j, P_i).
    pub fn paths_between(&self, i: usize, j: usize) -> &[usize] {
        &self.by_ends[i * self.n + j]
    }

    /// Class of the concatenation "first f, then g"; `None` when zero.
    ///
    /// As maps of projectives, f ∈ Hom(P_a, P_b) is a path b⇝a and
    /// g ∈ Hom(P_c, P_a) a path a⇝c, and `product(f, g)` is f∘g.
    pub fn product(&self, f: usize, g: usize) -> Option<usize> {
        self.mult[f * self.classes.len() + g]
    }

    /// [`product`](Self::product) with endpoint checking.
    pub fn compose(&self, f: usize, g: usize) -> Result<Option<usize>> {
        let (cf, cg) = (&self.classes[f], &self.classes[g]);
        if cf.end != cg.start {
            return Err(Error::DimensionMismatch(format!(
                "cannot concatenate {} with {}",
                cf.rep, cg.rep
            )));
        }
        Ok(self.product(f, g))
    }

    /// `c[i][j]` = dim Hom(P_j, P_i) = number of nonzero classes i⇝j.
    pub fn cartan(&self) -> CartanMatrix {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.paths_between(i, j).len() as i64).collect())
            .collect()
    }
}

/// Cartan matrix of the algebra of `q` with relations `rels`.
pub fn cartan_matrix(q: &Quiver, rels: &RelationSet) -> Result<CartanMatrix> {
    Ok(PathAlgebra::new(q, rels, 4 * q.n().max(1))?.cartan())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::synthesize;

    fn alg(s: &str) -> PathAlgebra {
        let q = Quiver::parse_tuples(s, None).unwrap();
        let r = synthesize(&q).unwrap();
        PathAlgebra::new(&q, &r, 4 * q.n()).unwrap()
    }

    fn p(v: &[usize]) -> Path {
        Path::new(v.iter().map(|x| x - 1).collect())
    }

    #[test]
    fn linear_a2() {
        let a = alg("(1,2)");
        assert_eq!(a.cartan(), vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(a.stable_length(), 2);
    }

    #[test]
    fn acyclic_paths_are_distinct_and_nonzero() {
        let a = alg("(1,2),(2,3),(1,4),(4,3)");
        // no relations: the square does not commute
        assert_eq!(a.paths_between(0, 2).len(), 2);
        assert_eq!(a.stable_length(), 3);
    }

    #[test]
    fn three_cycle_composites_vanish() {
        let a = alg("(2,1),(1,3),(3,2),(4,3),(5,4),(6,3)");
        for path in [p(&[1, 3, 2]), p(&[3, 2, 1]), p(&[2, 1, 3])] {
            assert_eq!(a.class_of(&path), None);
        }
        assert!(a.stable_length() <= 4);
        let f = a.class_of(&p(&[3, 2])).unwrap();
        let g = a.class_of(&p(&[2, 1])).unwrap();
        assert_eq!(a.compose(f, g).unwrap(), None);
        assert!(a.compose(g, f).is_err());
    }

    #[test]
    fn commutativity_merges_parallel_paths() {
        let a = alg("(2,3),(3,1),(3,4),(3,6),(4,2),(6,2),(5,4)");
        let x = a.class_of(&p(&[3, 4, 2])).unwrap();
        let y = a.class_of(&p(&[3, 6, 2])).unwrap();
        assert_eq!(x, y);
        let f = a.class_of(&p(&[4, 2])).unwrap();
        let g = a.class_of(&p(&[2, 3])).unwrap();
        assert_eq!(a.compose(f, g).unwrap(), None);
    }

    #[test]
    fn trivial_paths_are_units() {
        let a = alg("(2,3),(3,1),(3,4),(3,6),(4,2),(6,2),(5,4)");
        for c in 0..a.dim() {
            let cl = a.class(c);
            assert_eq!(a.product(a.trivial(cl.start), c), Some(c));
            assert_eq!(a.product(c, a.trivial(cl.end)), Some(c));
        }
    }
}
