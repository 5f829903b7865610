//! Quivers without loops and oriented 2-cycles.
//!
//! Vertices are 0-based in the API; every text format (arrow tuples,
//! permutation cycles, JSON) is 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count accepted by the exhaustive isomorphism search.
pub const MAX_CANONICAL_N: usize = 10;

/// A finite quiver stored as a matrix of arrow counts `a[i][j]` (arrows i→j).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quiver {
    n: usize,
    a: Vec<u32>,
}

impl Quiver {
    /// Quiver without arrows on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Quiver { n, a: vec![0; n * n] }
    }

    /// Builds a quiver from 0-based arrows; repeated tuples give multiple arrows.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut a = vec![0u32; n * n];
        for &(s, t) in arrows {
            for v in [s, t] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v + 1, n });
                }
            }
            a[s * n + t] += 1;
        }
        Self::from_counts(n, a)
    }

    /// Builds a quiver from a row-major count matrix, validating invariants.
    pub fn from_counts(n: usize, a: Vec<u32>) -> Result<Self> {
        if a.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "count matrix has {} entries, expected {}",
                a.len(),
                n * n
            )));
        }
        for i in 0..n {
            if a[i * n + i] != 0 {
                return Err(Error::Loop(i + 1));
            }
            for j in i + 1..n {
                if a[i * n + j] > 0 && a[j * n + i] > 0 {
                    return Err(Error::TwoCycle(i + 1, j + 1));
                }
            }
        }
        Ok(Quiver { n, a })
    }

    /// Builds a quiver from a skew-symmetric exchange matrix:
    /// `b[i][j] > 0` means `b[i][j]` arrows i→j, negative entries are the
    /// reversed arrows.
    pub fn from_signed(n: usize, b: &[i64]) -> Result<Self> {
        if b.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "exchange matrix has {} entries, expected {}",
                b.len(),
                n * n
            )));
        }
        let mut a = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let v = b[i * n + j];
                if v != -b[j * n + i] {
                    return Err(Error::invariant(format!(
                        "exchange matrix is not skew-symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
                if v > 0 {
                    a[i * n + j] = u32::try_from(v)
                        .map_err(|_| Error::CapExceeded("arrow multiplicity".into()))?;
                }
            }
        }
        Self::from_counts(n, a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of arrows i→j.
    pub fn arrows_between(&self, i: usize, j: usize) -> u32 {
        self.a[i * self.n + j]
    }

    /// Row-major count matrix.
    pub fn counts(&self) -> &[u32] {
        &self.a
    }

    /// Skew-symmetric exchange matrix `a[i][j] - a[j][i]`.
    pub fn signed(&self) -> Vec<i64> {
        let n = self.n;
        let mut b = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                b[i * n + j] = self.a[i * n + j] as i64 - self.a[j * n + i] as i64;
            }
        }
        b
    }

    /// All arrows as 0-based pairs, repeated by multiplicity, row-major.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                for _ in 0..self.a[i * self.n + j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn arrow_count(&self) -> u32 {
        self.a.iter().sum()
    }

    /// Tails of arrows ending at `k`, ascending, repeated by multiplicity.
    pub fn incoming(&self, k: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for j in 0..self.n {
            for _ in 0..self.arrows_between(j, k) {
                out.push(j);
            }
        }
        out
    }

    /// Heads of arrows starting at `k`, ascending, repeated by multiplicity.
    pub fn outgoing(&self, k: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for j in 0..self.n {
            for _ in 0..self.arrows_between(k, j) {
                out.push(j);
            }
        }
        out
    }

    pub fn is_sink(&self, k: usize) -> bool {
        (0..self.n).all(|j| self.arrows_between(k, j) == 0)
    }

    pub fn is_source(&self, k: usize) -> bool {
        (0..self.n).all(|j| self.arrows_between(j, k) == 0)
    }

    /// True when every pair of vertices is joined by at most one arrow.
    pub fn is_simply_laced(&self) -> bool {
        self.a.iter().all(|&c| c <= 1)
    }

    /// True when the underlying graph is connected (the empty quiver counts).
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..self.n {
                if !seen[w] && (self.arrows_between(v, w) > 0 || self.arrows_between(w, v) > 0) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn check_vertex(&self, k: usize) -> Result<()> {
        if k >= self.n {
            Err(Error::VertexOutOfRange { vertex: k + 1, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Mutation at `k`: composites i→k→j add arrows i→j, opposing arrows
    /// cancel, and the arrows at `k` are reversed.
    pub fn mutate(&self, k: usize) -> Result<Quiver> {
        self.check_vertex(k)?;
        let n = self.n;
        let b = self.signed();
        let mut c = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let bij = b[i * n + j];
                c[i * n + j] = if i == k || j == k {
                    -bij
                } else {
                    let bik = b[i * n + k];
                    let bkj = b[k * n + j];
                    bij + (bik.abs() * bkj + bik * bkj.abs()) / 2
                };
            }
        }
        Quiver::from_signed(n, &c)
    }

    /// All arrows reversed.
    pub fn opposite(&self) -> Quiver {
        let n = self.n;
        let mut a = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                a[j * n + i] = self.a[i * n + j];
            }
        }
        Quiver { n, a }
    }

    /// Reverses every arrow at a sink or source `k`.
    pub fn reflect(&self, k: usize) -> Result<Quiver> {
        self.check_vertex(k)?;
        if !self.is_sink(k) && !self.is_source(k) {
            return Err(Error::NotSinkOrSource(k + 1));
        }
        let n = self.n;
        let mut a = self.a.clone();
        for j in 0..n {
            a[k * n + j] = self.a[j * n + k];
            a[j * n + k] = self.a[k * n + j];
        }
        Ok(Quiver { n, a })
    }

    /// The quiver in which vertex `v` is renamed `p(v)`.
    pub fn relabel(&self, p: &Permutation) -> Quiver {
        let n = self.n;
        assert_eq!(p.len(), n, "permutation size must match the quiver");
        let mut a = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                a[p.apply(i) * n + p.apply(j)] = self.a[i * n + j];
            }
        }
        Quiver { n, a }
    }

    /// Canonical key together with a relabeling `p` such that
    /// `self.relabel(&p)` is the canonical representative.
    pub fn canonical_form(&self) -> Result<(CanonicalKey, Permutation)> {
        let n = self.n;
        if n > MAX_CANONICAL_N {
            return Err(Error::Unsupported(format!(
                "exhaustive canonical form needs n <= {MAX_CANONICAL_N}, got {n}"
            )));
        }
        let cells = self.refined_cells();
        let cell_perms: Vec<Vec<Vec<usize>>> = cells.iter().map(|c| permutations_of(c)).collect();
        let mut idx = vec![0usize; cells.len()];
        let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
        let mut order = Vec::with_capacity(n);
        loop {
            order.clear();
            for (c, &i) in idx.iter().enumerate() {
                order.extend_from_slice(&cell_perms[c][i]);
            }
            let bytes = self.serialize_in_order(&order);
            if best.as_ref().is_none_or(|(b, _)| bytes < *b) {
                best = Some((bytes, order.clone()));
            }
            // odometer over the per-cell permutations
            let mut c = cells.len();
            loop {
                if c == 0 {
                    let (bytes, order) = best.expect("at least one ordering");
                    let mut image = vec![0; n];
                    for (pos, &v) in order.iter().enumerate() {
                        image[v] = pos;
                    }
                    return Ok((CanonicalKey(bytes), Permutation { image }));
                }
                c -= 1;
                idx[c] += 1;
                if idx[c] < cell_perms[c].len() {
                    break;
                }
                idx[c] = 0;
            }
        }
    }

    pub fn canonical_key(&self) -> Result<CanonicalKey> {
        Ok(self.canonical_form()?.0)
    }

    /// The canonical representative of the isomorphism class.
    pub fn canonical(&self) -> Result<Quiver> {
        let (_, p) = self.canonical_form()?;
        Ok(self.relabel(&p))
    }

    /// Some σ with `self.relabel(σ) == other`, if the quivers are isomorphic.
    pub fn isomorphism_to(&self, other: &Quiver) -> Result<Option<Permutation>> {
        if self.n != other.n {
            return Ok(None);
        }
        let (k1, p1) = self.canonical_form()?;
        let (k2, p2) = other.canonical_form()?;
        if k1 != k2 {
            return Ok(None);
        }
        Ok(Some(p2.inverse().compose(&p1)))
    }

    /// Every σ with `self.relabel(σ) == other`, in lexicographic order of images.
    pub fn isomorphisms_to(&self, other: &Quiver) -> Vec<Permutation> {
        let n = self.n;
        if n != other.n || self.arrow_count() != other.arrow_count() {
            return Vec::new();
        }
        let deg = |q: &Quiver, v: usize| -> (u32, u32) {
            let out = (0..n).map(|j| q.arrows_between(v, j)).sum();
            let inc = (0..n).map(|j| q.arrows_between(j, v)).sum();
            (out, inc)
        };
        let mut out = Vec::new();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn rec(
            v: usize,
            a: &Quiver,
            b: &Quiver,
            image: &mut Vec<usize>,
            used: &mut Vec<bool>,
            deg: &dyn Fn(&Quiver, usize) -> (u32, u32),
            out: &mut Vec<Permutation>,
        ) {
            let n = a.n;
            if v == n {
                out.push(Permutation { image: image.clone() });
                return;
            }
            for w in 0..n {
                if used[w] || deg(a, v) != deg(b, w) {
                    continue;
                }
                let consistent = (0..v).all(|u| {
                    a.arrows_between(u, v) == b.arrows_between(image[u], w)
                        && a.arrows_between(v, u) == b.arrows_between(w, image[u])
                });
                if !consistent {
                    continue;
                }
                image[v] = w;
                used[w] = true;
                rec(v + 1, a, b, image, used, deg, out);
                used[w] = false;
            }
            image[v] = usize::MAX;
        }
        rec(0, self, other, &mut image, &mut used, &deg, &mut out);
        out
    }

    /// Color refinement by degrees and neighbour colors; returns the cells in
    /// an order that depends only on the isomorphism class.
    fn refined_cells(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut color: Vec<usize> = {
            let sigs: Vec<(u32, u32)> = (0..n)
                .map(|v| {
                    let out = (0..n).map(|j| self.arrows_between(v, j)).sum();
                    let inc = (0..n).map(|j| self.arrows_between(j, v)).sum();
                    (out, inc)
                })
                .collect();
            rank_signatures(&sigs)
        };
        let mut classes = distinct(&color);
        loop {
            let sigs: Vec<(usize, Vec<(usize, u32)>, Vec<(usize, u32)>)> = (0..n)
                .map(|v| {
                    let mut outs: Vec<(usize, u32)> = (0..n)
                        .filter(|&w| self.arrows_between(v, w) > 0)
                        .map(|w| (color[w], self.arrows_between(v, w)))
                        .collect();
                    let mut ins: Vec<(usize, u32)> = (0..n)
                        .filter(|&w| self.arrows_between(w, v) > 0)
                        .map(|w| (color[w], self.arrows_between(w, v)))
                        .collect();
                    outs.sort_unstable();
                    ins.sort_unstable();
                    (color[v], outs, ins)
                })
                .collect();
            let next = rank_signatures(&sigs);
            let next_classes = distinct(&next);
            color = next;
            if next_classes == classes {
                break;
            }
            classes = next_classes;
        }
        let mut cells: Vec<Vec<usize>> = vec![Vec::new(); classes];
        for v in 0..n {
            cells[color[v]].push(v);
        }
        cells
    }

    fn serialize_in_order(&self, order: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut bytes = Vec::with_capacity(n * n + 1);
        bytes.push(n as u8);
        for &i in order {
            for &j in order {
                bytes.push(self.a[i * n + j].min(255) as u8);
            }
        }
        bytes
    }

    /// Parses the tuple format "(1,2), (2,3)"; `n` defaults to the largest label.
    pub fn parse_tuples(s: &str, n: Option<usize>) -> Result<Quiver> {
        let mut arrows = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            rest = rest.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
            if rest.is_empty() {
                break;
            }
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(format!("expected '(' at {rest:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::parse(format!("unclosed tuple at {rest:?}")))?;
            let parts: Vec<&str> = body[..close].split(',').map(str::trim).collect();
            if parts.len() != 2 {
                return Err(Error::parse(format!("malformed tuple ({})", &body[..close])));
            }
            let parse = |p: &str| -> Result<usize> {
                let v: usize = p.parse().map_err(|_| Error::parse(format!("bad vertex {p:?}")))?;
                if v == 0 {
                    return Err(Error::parse("vertex labels start at 1"));
                }
                Ok(v)
            };
            arrows.push((parse(parts[0])?, parse(parts[1])?));
            rest = &body[close + 1..];
        }
        let max = arrows.iter().map(|&(s, t)| s.max(t)).max().unwrap_or(0);
        let n = match n {
            Some(n) if n < max => return Err(Error::VertexOutOfRange { vertex: max, n }),
            Some(n) => n,
            None => max,
        };
        let zero_based: Vec<(usize, usize)> = arrows.iter().map(|&(s, t)| (s - 1, t - 1)).collect();
        Quiver::from_arrows(n, &zero_based)
    }

    pub fn to_json(&self) -> QuiverJson {
        QuiverJson {
            n: self.n,
            arrows: self.arrows().into_iter().map(|(s, t)| [s + 1, t + 1]).collect(),
        }
    }

    pub fn from_json(j: &QuiverJson) -> Result<Quiver> {
        let mut arrows = Vec::with_capacity(j.arrows.len());
        for &[s, t] in &j.arrows {
            if s == 0 || t == 0 {
                return Err(Error::parse("vertex labels start at 1"));
            }
            arrows.push((s - 1, t - 1));
        }
        Quiver::from_arrows(j.n, &arrows)
    }
}

impl fmt::Display for Quiver {
    /// Tuple format, 1-based, row-major.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .arrows()
            .into_iter()
            .map(|(s, t)| format!("({},{})", s + 1, t + 1))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver[n={}; {}]", self.n, self)
    }
}

/// JSON wire form of a quiver: 1-based arrow pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub n: usize,
    pub arrows: Vec<[usize; 2]>,
}

/// Lexicographically minimal serialization of the count matrix over the
/// relabelings compatible with color refinement; equal iff isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey(pub Vec<u8>);

/// A bijection on `0..n`, written in 1-based disjoint-cycle notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::parse(format!("not a bijection: {image:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    /// Parses cycle notation such as "(135)(67)" or "(3,2,6)"; "(1)" and
    /// the empty string are the identity.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(format!("expected '(' in permutation {s:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::parse(format!("unclosed cycle in {s:?}")))?;
            let inner = body[..close].trim();
            let labels: Vec<usize> = if inner.contains(',') {
                inner
                    .split(',')
                    .map(|p| p.trim().parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::parse(format!("bad cycle ({inner})")))?
            } else {
                inner
                    .chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::parse(format!("bad cycle ({inner})")))?
            };
            if labels.len() > 1 {
                for &v in &labels {
                    if v == 0 || v > n {
                        return Err(Error::parse(format!("label {v} out of range in {s:?}")));
                    }
                    if moved[v - 1] {
                        return Err(Error::parse(format!("label {v} repeated in {s:?}")));
                    }
                    moved[v - 1] = true;
                }
                for w in 0..labels.len() {
                    image[labels[w] - 1] = labels[(w + 1) % labels.len()] - 1;
                }
            } else if let Some(&v) = labels.first() {
                if v == 0 || v > n {
                    return Err(Error::parse(format!("label {v} out of range in {s:?}")));
                }
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&v| self.image[v]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Permutation { image }
    }

    /// Every permutation of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let items: Vec<usize> = (0..n).collect();
        permutations_of(&items)
            .into_iter()
            .map(|image| Permutation { image })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.image.len();
        let sep = if n >= 10 { "," } else { "" };
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push((v + 1).to_string());
                v = self.image[v];
            }
            write!(f, "({})", cycle.join(sep))?;
            wrote = true;
        }
        if !wrote {
            f.write_str("(1)")?;
        }
        Ok(())
    }
}

fn rank_signatures<T: Ord + Clone>(sigs: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = sigs.to_vec();
    sorted.sort();
    sorted.dedup();
    sigs.iter().map(|s| sorted.binary_search(s).expect("present")).collect()
}

fn distinct(colors: &[usize]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m + 1)
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Quiver {
        Quiver::parse_tuples(s, None).unwrap()
    }

    #[test]
    fn sink_mutation_reverses_arrows() {
        assert_eq!(q("(1,2)").mutate(1).unwrap(), q("(2,1)"));
    }

    #[test]
    fn mutation_at_vertex_two_of_e6_orientation() {
        let q0 = q("(1,2),(2,3),(4,3),(5,4),(6,3)");
        let q1 = q("(2,1),(1,3),(3,2),(4,3),(5,4),(6,3)");
        assert_eq!(q0.mutate(1).unwrap(), q1);
        assert_eq!(q1.mutate(1).unwrap(), q0);
    }

    #[test]
    fn mutation_index_checked() {
        assert_eq!(
            q("(1,2)").mutate(2),
            Err(Error::VertexOutOfRange { vertex: 3, n: 2 })
        );
    }

    #[test]
    fn mutation_of_kronecker_pair_composite() {
        // 1→2→3 mutated at 2 gives the 3-cycle 1→3, 3→2, 2→1.
        assert_eq!(q("(1,2),(2,3)").mutate(1).unwrap(), q("(1,3),(3,2),(2,1)"));
    }

    #[test]
    fn opposite_and_reflection() {
        assert_eq!(q("(1,2)").opposite(), q("(2,1)"));
        assert_eq!(q("(1,2),(2,3)").reflect(2).unwrap(), q("(1,2),(3,2)"));
        assert_eq!(q("(1,2),(2,3)").reflect(1), Err(Error::NotSinkOrSource(2)));
    }

    #[test]
    fn construction_rejects_loops_and_two_cycles() {
        assert_eq!(Quiver::parse_tuples("(1,1)", None), Err(Error::Loop(1)));
        assert_eq!(Quiver::parse_tuples("(1,2),(2,1)", None), Err(Error::TwoCycle(1, 2)));
        assert!(Quiver::parse_tuples("(1,2", None).is_err());
        assert!(Quiver::parse_tuples("(1,2,3)", None).is_err());
    }

    #[test]
    fn canonical_keys() {
        assert_eq!(q("(1,2)").canonical_key(), q("(2,1)").canonical_key());
        assert_ne!(q("(1,2),(3,2)").canonical_key(), q("(2,1),(2,3)").canonical_key());
        let a = q("(1,2),(2,3),(4,3),(5,4),(6,3)");
        let p = Permutation::parse_cycles("(135)(46)", 6).unwrap();
        assert_eq!(a.canonical_key(), a.relabel(&p).canonical_key());
        let s = a.isomorphism_to(&a.relabel(&p)).unwrap().unwrap();
        assert_eq!(a.relabel(&s), a.relabel(&p));
    }

    #[test]
    fn all_isomorphisms_of_a_three_cycle() {
        let c = q("(1,2),(2,3),(3,1)");
        assert_eq!(c.isomorphisms_to(&c).len(), 3);
    }

    #[test]
    fn permutation_text() {
        let p = Permutation::parse_cycles("(135)(67)", 7).unwrap();
        assert_eq!(p.apply(0), 2);
        assert_eq!(p.apply(2), 4);
        assert_eq!(p.apply(4), 0);
        assert_eq!(p.to_string(), "(135)(67)");
        assert_eq!(Permutation::identity(3).to_string(), "(1)");
        assert!(Permutation::parse_cycles("(1)", 3).unwrap().is_identity());
        assert_eq!(Permutation::parse_cycles("(3,2,6)", 6).unwrap().to_string(), "(263)");
        assert!(Permutation::parse_cycles("(17542861)", 8).is_err());
    }

    #[test]
    fn tuple_and_json_round_trip() {
        let a = q("(1,2), (2,3), (3,4), (4,5), (4,7), (5,6)");
        assert_eq!(a.n(), 7);
        assert_eq!(Quiver::parse_tuples(&a.to_string(), None).unwrap(), a);
        assert_eq!(Quiver::from_json(&a.to_json()).unwrap(), a);
    }
}
