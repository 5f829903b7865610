//! Derived-equivalence classification of a mutation class: grouping by
//! associated polynomial, the closure of good mutations, sink/source moves and
//! opposite pairings, the comparison of both partitions, and the check of
//! reference good-mutation table rows.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures::{self, GoodMutationRow};
use crate::invariants::{associated_polynomial, cartan_permutation_matches, normalize_text};
use crate::mutation_class::{dynkin_seed, enumerate, DynkinType, MutationClass, UnionFind};
use crate::path_algebra::CartanMatrix;
use crate::quiver::{Permutation, Quiver};
use crate::tilting::{is_good_mutation, Algebra, Verdict};

/// Per-member algebra data.
#[derive(Clone, Debug, Serialize)]
pub struct MemberData {
    pub cartan: CartanMatrix,
    /// Associated polynomial in normalized display form, e.g. "3(x^6 + x^3 + 1)".
    pub polynomial: String,
}

/// Computes Cartan matrices and associated polynomials of all members.
pub fn member_data(class: &MutationClass) -> Result<Vec<MemberData>> {
    class
        .members
        .par_iter()
        .map(|q| {
            let alg = Algebra::new(q)?;
            let polynomial = associated_polynomial(&alg.cartan)?.normalized();
            Ok(MemberData { cartan: alg.cartan, polynomial })
        })
        .collect()
}

/// Members sharing one associated polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct PolynomialGroup {
    pub polynomial: String,
    pub members: Vec<usize>,
    /// Number of sink/source orbits inside the group.
    pub orbits: usize,
}

/// Groups members by polynomial, ordered by their least member id.
pub fn partition_by_polynomial(class: &MutationClass, data: &[MemberData]) -> Vec<PolynomialGroup> {
    let mut order: Vec<String> = Vec::new();
    let mut groups: HashMap<String, Vec<usize>> = HashMap::new();
    for (m, d) in data.iter().enumerate() {
        let key = normalize_text(&d.polynomial);
        groups
            .entry(key.clone())
            .or_insert_with(|| {
                order.push(d.polynomial.clone());
                Vec::new()
            })
            .push(m);
    }
    order
        .into_iter()
        .map(|p| {
            let members = groups.remove(&normalize_text(&p)).expect("group exists");
            let orbits: HashSet<usize> = members.iter().map(|&m| class.orbit_of(m)).collect();
            PolynomialGroup { polynomial: p, orbits: orbits.len(), members }
        })
        .collect()
}

/// Outcome of the good-mutation test at one (member, vertex) pair.
#[derive(Clone, Debug, Serialize)]
pub struct ScanEntry {
    pub member: usize,
    pub vertex: usize,
    /// Member reached by mutating at `vertex`.
    pub target: usize,
    pub verdict: Verdict,
    /// Summand pairs violating the Happel alternating-sum identity.
    pub happel_violations: usize,
    /// For good mutations: the polynomial of P C Pᵀ equals the member's.
    pub polynomial_preserved: Option<bool>,
}

/// Tests every member at every vertex with an incoming arrow.
pub fn scan_good_mutations(class: &MutationClass, data: &[MemberData]) -> Result<Vec<ScanEntry>> {
    let n = class.members.first().map_or(0, Quiver::n);
    let per_member: Vec<Result<Vec<ScanEntry>>> = class
        .members
        .par_iter()
        .enumerate()
        .map(|(m, q)| {
            let alg = Algebra::new(q)?;
            let mut out = Vec::new();
            for k in 0..n {
                if q.incoming(k).is_empty() {
                    continue;
                }
                let r = is_good_mutation(&alg, k)?;
                let polynomial_preserved = if r.verdict.is_good() {
                    Some(
                        associated_polynomial(&r.endomorphism_cartan)?.normalized()
                            == data[m].polynomial,
                    )
                } else {
                    None
                };
                out.push(ScanEntry {
                    member: m,
                    vertex: k,
                    target: class.mutation_target(m, k),
                    verdict: r.verdict,
                    happel_violations: r.tilting.happel_violations.len(),
                    polynomial_preserved,
                });
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for r in per_member {
        all.extend(r?);
    }
    Ok(all)
}

/// Partition generated by good mutations, sink/source reflections and
/// opposite pairings of good mutations.
#[derive(Clone, Debug, Serialize)]
pub struct Closure {
    pub block_of: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
    /// (source, vertex, target, permutation) for every good mutation.
    pub good_edges: Vec<(usize, usize, usize, String)>,
    pub sink_source_edges: usize,
    /// (A^op, B^op) for every good edge (A, B).
    pub opposite_edges: Vec<(usize, usize)>,
}

/// Union-find closure over the three witness relations.
pub fn good_mutation_closure(class: &MutationClass, scan: &[ScanEntry]) -> Result<Closure> {
    let mut uf = UnionFind::new(class.len());
    let mut good_edges = Vec::new();
    for e in scan {
        if let Verdict::Good { permutation } = &e.verdict {
            good_edges.push((e.member, e.vertex, e.target, permutation.clone()));
            uf.union(e.member, e.target);
        }
    }
    let mut sink_source_edges = 0;
    for &(m, k, t) in &class.edges {
        let q = &class.members[m];
        if q.is_sink(k) || q.is_source(k) {
            sink_source_edges += 1;
            uf.union(m, t);
        }
    }
    let opposite: Vec<usize> = class
        .members
        .par_iter()
        .map(|q| {
            class
                .find(&q.opposite())?
                .ok_or_else(|| Error::invariant(format!("opposite of {q} left the class")))
        })
        .collect::<Result<_>>()?;
    let mut opposite_edges: Vec<(usize, usize)> = good_edges
        .iter()
        .map(|&(a, _, b, _)| (opposite[a], opposite[b]))
        .collect();
    opposite_edges.sort_unstable();
    opposite_edges.dedup();
    for &(a, b) in &opposite_edges {
        uf.union(a, b);
    }
    let (block_of, blocks) = uf.partition();
    Ok(Closure { block_of, blocks, good_edges, sink_source_edges, opposite_edges })
}

/// Comparison of the polynomial partition with the closure partition.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremVerdict {
    pub pass: bool,
    pub polynomial_groups: usize,
    pub components: usize,
    /// Polynomials whose group splits into several components.
    pub split_groups: Vec<String>,
    /// Good edges joining different polynomials.
    pub crossing_edges: Vec<(usize, usize, usize)>,
}

pub fn verify_theorem(
    groups: &[PolynomialGroup],
    closure: &Closure,
    data: &[MemberData],
) -> TheoremVerdict {
    let mut split_groups = Vec::new();
    for g in groups {
        let comps: HashSet<usize> = g.members.iter().map(|&m| closure.block_of[m]).collect();
        if comps.len() != 1 {
            split_groups.push(g.polynomial.clone());
        }
    }
    let crossing_edges: Vec<(usize, usize, usize)> = closure
        .good_edges
        .iter()
        .filter(|(a, _, b, _)| data[*a].polynomial != data[*b].polynomial)
        .map(|&(a, k, b, _)| (a, k, b))
        .collect();
    let components = closure.blocks.len();
    TheoremVerdict {
        pass: split_groups.is_empty() && crossing_edges.is_empty() && components == groups.len(),
        polynomial_groups: groups.len(),
        components,
        split_groups,
        crossing_edges,
    }
}

/// A labeled quiver standing for a reference label, attached to its member.
#[derive(Clone, Debug)]
pub struct LabeledMember {
    pub member: usize,
    pub quiver: Quiver,
}

/// Reference labels resolved against an enumerated class.
#[derive(Clone, Debug, Default)]
pub struct LabelIndex {
    pub labels: BTreeMap<String, Vec<LabeledMember>>,
    /// Reference labels with no matching member.
    pub unmatched: Vec<String>,
}

impl LabelIndex {
    pub fn get(&self, label: &str) -> Option<&[LabeledMember]> {
        self.labels.get(label).map(Vec::as_slice).filter(|v| !v.is_empty())
    }

    /// Labels attached to each member.
    pub fn labels_of(&self, members: usize) -> Vec<Vec<String>> {
        let mut out = vec![Vec::new(); members];
        for (l, ms) in &self.labels {
            let mut seen = HashSet::new();
            for m in ms {
                if seen.insert(m.member) {
                    out[m.member].push(l.clone());
                }
            }
        }
        out
    }
}

/// Matches reference labels to members. E6 labels are given by Cartan
/// matrices: every member and relabeling reproducing the printed matrix is
/// kept. E7/E8 labels are given by arrow lists and match by isomorphism.
pub fn resolve_labels(t: DynkinType, class: &MutationClass, data: &[MemberData]) -> Result<LabelIndex> {
    let mut idx = LabelIndex::default();
    match t {
        DynkinType::E6 => {
            for f in fixtures::e6_cartans()? {
                let mut found = Vec::new();
                for (m, d) in data.iter().enumerate() {
                    for s in cartan_permutation_matches(&d.cartan, &f.cartan) {
                        let quiver = class.members[m].relabel(&s);
                        if !found.iter().any(|l: &LabeledMember| l.quiver == quiver) {
                            found.push(LabeledMember { member: m, quiver });
                        }
                    }
                }
                if found.is_empty() {
                    idx.unmatched.push(f.label.clone());
                }
                idx.labels.entry(f.label).or_default().extend(found);
            }
        }
        DynkinType::E7 | DynkinType::E8 => {
            for f in fixtures::labeled_quivers(t)? {
                match class.find(&f.quiver)? {
                    Some(m) => idx
                        .labels
                        .entry(f.label)
                        .or_default()
                        .push(LabeledMember { member: m, quiver: f.quiver }),
                    None => idx.unmatched.push(f.label),
                }
            }
        }
        _ => {}
    }
    Ok(idx)
}

/// Labeled quivers reachable by sink/source reflections, with the number of
/// reflections used, fewest first.
pub fn sink_source_orbit(q: &Quiver) -> Result<Vec<(Quiver, usize)>> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(q.counts().to_vec());
    let mut out = vec![(q.clone(), 0)];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let (cur, depth) = out[i].clone();
        for k in 0..cur.n() {
            if cur.is_sink(k) || cur.is_source(k) {
                let r = cur.reflect(k)?;
                if seen.insert(r.counts().to_vec()) {
                    out.push((r, depth + 1));
                    queue.push_back(out.len() - 1);
                }
            }
        }
    }
    Ok(out)
}

/// Status of one reference table row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Verified,
    /// The reference data needed to replay the row is missing.
    Unverifiable,
    Failed,
}

/// How the printed relabeling relates μ_k(source) to the target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PermutationMatch {
    /// μ_k(Q) relabeled by π is the target quiver.
    Forward,
    /// The target relabeled by π is μ_k(Q).
    Inverse,
    ForwardUpToSinkSource,
    InverseUpToSinkSource,
    /// Neither direction matches.
    NoMatch,
    /// The printed permutation is not a bijection.
    Malformed,
}

/// Result of replaying one table row.
#[derive(Clone, Debug, Serialize)]
pub struct RowCheck {
    pub row: String,
    pub status: RowStatus,
    pub detail: String,
    /// Sink/source reflections applied to the source quiver to reach the
    /// printed incoming arrows.
    pub reflections: Option<usize>,
    /// μ_k(Q) is isomorphic to the target quiver itself (not only sink/source
    /// equivalent).
    pub target_isomorphic: Option<bool>,
    pub permutation: Option<PermutationMatch>,
    /// The printed endomorphism Cartan matrix equals P C Pᵀ.
    pub cartan_matches: Option<bool>,
}

impl PermutationMatch {
    /// Preference order when several targets are tried; lower is better.
    pub fn preference(self) -> u8 {
        match self {
            PermutationMatch::Forward => 0,
            PermutationMatch::Inverse => 1,
            PermutationMatch::ForwardUpToSinkSource => 2,
            PermutationMatch::InverseUpToSinkSource => 3,
            PermutationMatch::Malformed => 4,
            PermutationMatch::NoMatch => 5,
        }
    }

    /// The printed relabeling is accepted, possibly up to sink/source moves.
    pub fn is_match(self) -> bool {
        !matches!(self, PermutationMatch::NoMatch | PermutationMatch::Malformed)
    }
}

impl RowCheck {
    fn new(row: &GoodMutationRow) -> Self {
        RowCheck {
            row: row.describe(),
            status: RowStatus::Failed,
            detail: String::new(),
            reflections: None,
            target_isomorphic: None,
            permutation: None,
            cartan_matches: None,
        }
    }
}

/// Relates μ_k(Q) to a labeled target through a printed relabeling.
pub fn permutation_match(mutated: &Quiver, target: &Quiver, perm: &str) -> Result<PermutationMatch> {
    let Ok(p) = Permutation::parse_cycles(perm, mutated.n()) else {
        return Ok(PermutationMatch::Malformed);
    };
    let fwd = mutated.relabel(&p);
    let inv = mutated.relabel(&p.inverse());
    if &fwd == target {
        return Ok(PermutationMatch::Forward);
    }
    if &inv == target {
        return Ok(PermutationMatch::Inverse);
    }
    let orbit: HashSet<Vec<u32>> =
        sink_source_orbit(target)?.into_iter().map(|(q, _)| q.counts().to_vec()).collect();
    if orbit.contains(fwd.counts()) {
        Ok(PermutationMatch::ForwardUpToSinkSource)
    } else if orbit.contains(inv.counts()) {
        Ok(PermutationMatch::InverseUpToSinkSource)
    } else {
        Ok(PermutationMatch::NoMatch)
    }
}

/// Replays a table row. The labeled source (or its opposite) is adjusted by
/// the fewest sink/source reflections producing the printed incoming arrows
/// at k; rows not marked as adjusted must match without reflections. The
/// adjusted source must be a good mutation at k whose mutated quiver lies in
/// the target's sink/source orbit, and the printed permutation (E7/E8) must
/// carry μ_k(Q) onto the labeled target in one of the two directions,
/// possibly up to sink/source moves. For E6 rows the printed endomorphism
/// Cartan matrix is compared with P C Pᵀ and the outcome recorded in
/// `cartan_matches`.
pub fn verify_table_row(
    class: &MutationClass,
    labels: &LabelIndex,
    row: &GoodMutationRow,
) -> Result<RowCheck> {
    let mut check = RowCheck::new(row);
    let (Some(sources), Some(targets)) = (labels.get(&row.source), labels.get(&row.target)) else {
        check.status = RowStatus::Unverifiable;
        let missing: Vec<&str> = [&row.source, &row.target]
            .into_iter()
            .filter(|l| labels.get(l).is_none())
            .map(String::as_str)
            .collect();
        check.detail = format!("no reference quiver for {}", missing.join(", "));
        return Ok(check);
    };
    let bases: Vec<Quiver> = sources
        .iter()
        .map(|s| if row.opposite { s.quiver.opposite() } else { s.quiver.clone() })
        .collect();
    let mut candidates: Vec<(Quiver, usize)> = Vec::new();
    for base in &bases {
        for (q, d) in sink_source_orbit(base)? {
            if q.incoming(row.vertex) == row.incoming {
                candidates.push((q, d));
            }
        }
    }
    candidates.sort_by_key(|(_, d)| *d);
    if candidates.is_empty() {
        check.detail = format!(
            "no sink/source adjustment of the source has the printed incoming arrows{}",
            alternative_vertices(class, &bases, targets)?
        );
        return Ok(check);
    }
    let mut best: Option<RowCheck> = None;
    for (q, depth) in &candidates {
        let c = replay(class, row, targets, q, *depth)?;
        if c.status == RowStatus::Verified {
            if *depth > 0 && !row.adjusted {
                let mut f = c;
                f.status = RowStatus::Failed;
                f.detail = format!(
                    "verifies only after {depth} sink/source reflection(s), but the row is not marked (*)"
                );
                return Ok(f);
            }
            return Ok(c);
        }
        let better = match &best {
            None => true,
            Some(b) => b.target_isomorphic.is_none() && c.target_isomorphic.is_some(),
        };
        if better {
            best = Some(c);
        }
    }
    Ok(best.expect("at least one candidate"))
}

/// Checks one adjusted source quiver against a row.
fn replay(
    class: &MutationClass,
    row: &GoodMutationRow,
    targets: &[LabeledMember],
    q: &Quiver,
    depth: usize,
) -> Result<RowCheck> {
    let mut c = RowCheck::new(row);
    c.reflections = Some(depth);
    let alg = Algebra::new(q)?;
    let report = is_good_mutation(&alg, row.vertex)?;
    if !report.verdict.is_good() {
        c.detail = format!("verdict {:?}", report.verdict);
        return Ok(c);
    }
    let m = class
        .find(&report.mutated)?
        .ok_or_else(|| Error::invariant("mutated quiver left the class"))?;
    let target_orbits: HashSet<usize> = targets.iter().map(|t| class.orbit_of(t.member)).collect();
    if !target_orbits.contains(&class.orbit_of(m)) {
        c.detail = "mutated quiver is not sink/source equivalent to the target".into();
        return Ok(c);
    }
    c.target_isomorphic = Some(targets.iter().any(|t| t.member == m));
    let mut notes = vec![format!(
        "good via {}",
        report.permutation.as_ref().map(ToString::to_string).unwrap_or_default()
    )];
    let mut ok = true;
    if let Some(perm) = &row.permutation {
        let mut pm = PermutationMatch::NoMatch;
        for t in targets {
            let r = permutation_match(&report.mutated, &t.quiver, perm)?;
            if r.preference() < pm.preference() {
                pm = r;
            }
        }
        c.permutation = Some(pm);
        if !pm.is_match() {
            ok = false;
            notes = vec![format!(
                "printed permutation {perm} does not match ({pm:?}); a matching relabeling is {}",
                witness_relabeling(&report.mutated, targets)?.unwrap_or_else(|| "none".into())
            )];
        }
    }
    if let Some(expected) = &row.endomorphism_cartan {
        let eq = &report.endomorphism_cartan == expected;
        c.cartan_matches = Some(eq);
        if !eq {
            notes.push("P C Pᵀ differs from the printed endomorphism Cartan matrix".into());
        }
    }
    if ok {
        c.status = RowStatus::Verified;
    }
    c.detail = notes.join("; ");
    Ok(c)
}

/// A relabeling carrying `mutated` onto a sink/source variant of a target,
/// preferring the target quiver itself.
fn witness_relabeling(mutated: &Quiver, targets: &[LabeledMember]) -> Result<Option<String>> {
    for t in targets {
        for (x, _) in sink_source_orbit(&t.quiver)? {
            if let Some(p) = mutated.isomorphisms_to(&x).into_iter().next() {
                return Ok(Some(p.to_string()));
            }
        }
    }
    Ok(None)
}

/// Describes the vertices of the (adjusted) source at which a good mutation
/// does reach the target's orbit.
fn alternative_vertices(
    class: &MutationClass,
    bases: &[Quiver],
    targets: &[LabeledMember],
) -> Result<String> {
    let target_orbits: HashSet<usize> = targets.iter().map(|t| class.orbit_of(t.member)).collect();
    let mut found: Vec<String> = Vec::new();
    for base in bases {
        for (q, d) in sink_source_orbit(base)? {
            let alg = Algebra::new(&q)?;
            for k in 0..q.n() {
                if q.incoming(k).is_empty() {
                    continue;
                }
                let r = is_good_mutation(&alg, k)?;
                let Some(m) = class.find(&r.mutated)? else { continue };
                if r.verdict.is_good() && target_orbits.contains(&class.orbit_of(m)) {
                    let inc: Vec<String> = q.incoming(k).iter().map(|v| (v + 1).to_string()).collect();
                    let s = format!("({};{}) after {d} reflection(s)", k + 1, inc.join(","));
                    if !found.contains(&s) {
                        found.push(s);
                    }
                }
            }
            if !found.is_empty() {
                break;
            }
        }
    }
    Ok(if found.is_empty() {
        "; no vertex of the source reaches the target by a good mutation".into()
    } else {
        format!("; the target is reached via {}", found.join(", "))
    })
}

/// Checks a reference pairing "A^op ∼ B": the opposite of A is isomorphic to
/// B (relation `Equal`) or sink/source equivalent to it. `None` when a label
/// has no reference quiver.
pub fn verify_opposite_pair(
    class: &MutationClass,
    labels: &LabelIndex,
    pair: &fixtures::OppositePair,
) -> Result<Option<bool>> {
    let (Some(a), Some(b)) = (labels.get(&pair.label), labels.get(&pair.opposite_label)) else {
        return Ok(None);
    };
    for x in a {
        let Some(op) = class.find(&x.quiver.opposite())? else { continue };
        for y in b {
            let ok = match pair.relation {
                fixtures::OppositeRelation::Equal => op == y.member,
                fixtures::OppositeRelation::SinkSource => class.orbit_of(op) == class.orbit_of(y.member),
            };
            if ok {
                return Ok(Some(true));
            }
        }
    }
    Ok(Some(false))
}


/// Everything computed for one Dynkin type.
#[derive(Clone, Debug)]
pub struct Classification {
    pub dynkin: DynkinType,
    pub class: MutationClass,
    pub data: Vec<MemberData>,
    pub groups: Vec<PolynomialGroup>,
    pub scan: Vec<ScanEntry>,
    pub closure: Closure,
    pub theorem: TheoremVerdict,
    pub labels: LabelIndex,
}

/// Enumerates the class of `t` and runs the full classification pipeline.
pub fn classify(t: DynkinType, cap: usize) -> Result<Classification> {
    let class = enumerate(&dynkin_seed(t), cap, true)?;
    let data = member_data(&class)?;
    let groups = partition_by_polynomial(&class, &data);
    let scan = scan_good_mutations(&class, &data)?;
    let closure = good_mutation_closure(&class, &scan)?;
    let theorem = verify_theorem(&groups, &closure, &data);
    let labels = resolve_labels(t, &class, &data)?;
    Ok(Classification { dynkin: t, class, data, groups, scan, closure, theorem, labels })
}

/// One row of a classification report.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub polynomial: String,
    pub members: usize,
    pub orbits: usize,
    pub components: usize,
    pub labels: Vec<String>,
}

/// Serializable summary of a classification.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub dynkin: String,
    pub members: usize,
    pub orbits: usize,
    pub groups: Vec<ReportRow>,
    pub good_mutations: usize,
    pub bad_mutations: usize,
    pub not_tilting: usize,
    pub opposite_edges: usize,
    pub theorem: TheoremVerdict,
}

impl Classification {
    pub fn report(&self) -> ClassificationReport {
        let labels_of = self.labels.labels_of(self.class.len());
        let groups = self
            .groups
            .iter()
            .map(|g| {
                let comps: HashSet<usize> =
                    g.members.iter().map(|&m| self.closure.block_of[m]).collect();
                let mut labels: Vec<String> =
                    g.members.iter().flat_map(|&m| labels_of[m].iter().cloned()).collect();
                labels.sort_by_key(|l| (l.len(), l.clone()));
                ReportRow {
                    polynomial: g.polynomial.clone(),
                    members: g.members.len(),
                    orbits: g.orbits,
                    components: comps.len(),
                    labels,
                }
            })
            .collect();
        let good = self.scan.iter().filter(|e| e.verdict.is_good()).count();
        let not_tilting =
            self.scan.iter().filter(|e| matches!(e.verdict, Verdict::NotTilting { .. })).count();
        ClassificationReport {
            dynkin: self.dynkin.to_string(),
            members: self.class.len(),
            orbits: self.class.orbits().len(),
            groups,
            good_mutations: good,
            bad_mutations: self.scan.len() - good,
            not_tilting,
            opposite_edges: self.closure.opposite_edges.len(),
            theorem: self.theorem.clone(),
        }
    }
}

impl ClassificationReport {
    /// Markdown table of (polynomial, number of algebras) plus the verdict.
    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "# Derived equivalence classes for type {}\n\n{} algebras, {} sink/source orbits\n\n",
            self.dynkin, self.members, self.orbits
        );
        s.push_str("| associated polynomial | number of algebras |\n|---|---|\n");
        for g in &self.groups {
            s.push_str(&format!("| {} | {} |\n", g.polynomial, g.members));
        }
        s.push_str(&format!(
            "\ngood mutations: {}, other mutations: {} ({} not tilting)\n",
            self.good_mutations, self.bad_mutations, self.not_tilting
        ));
        s.push_str(&format!(
            "closure components: {}, polynomial groups: {}, verdict: {}\n",
            self.theorem.components,
            self.theorem.polynomial_groups,
            if self.theorem.pass { "PASS" } else { "FAIL" }
        ));
        for p in &self.theorem.split_groups {
            s.push_str(&format!("open discrepancy: group {p} is not connected\n"));
        }
        s
    }

    /// Tab-separated rows: polynomial, members, orbits, components.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("polynomial\tmembers\torbits\tcomponents\n");
        for g in &self.groups {
            s.push_str(&format!("{}\t{}\t{}\t{}\n", g.polynomial, g.members, g.orbits, g.components));
        }
        s
    }
}
