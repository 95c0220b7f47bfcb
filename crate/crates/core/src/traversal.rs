//! Counting tight contact structures on a solid torus by state traversal:
//! cut along the meridional disk, round edges to a sphere dividing set,
//! and count connected components of the bypass transition graph whose
//! configurations all round to a single circle.

use crate::dividing::{bypass_rewrite, BypassOutcome, Chirality, DiskDiagram, Side};
use crate::error::{Error, Result};
use crate::farey::{gcd, Slope};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt::Write as _;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// A solid torus with two boundary dividing curves of slope `-p/q`,
/// `0 < q <= p` coprime.  The meridional disk meets the dividing set in
/// `2p` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolidTorusProblem {
    p: usize,
    q: usize,
}

impl SolidTorusProblem {
    pub fn new(p: i64, q: i64) -> Result<SolidTorusProblem> {
        if p <= 0 {
            return Err(Error::NotPositive(p));
        }
        if q <= 0 {
            return Err(Error::NotPositive(q));
        }
        if q > p {
            return Err(Error::NotExpandable { p, q });
        }
        if gcd(p, q) != 1 {
            return Err(Error::NotCoprime(p, q));
        }
        Ok(SolidTorusProblem {
            p: p as usize,
            q: q as usize,
        })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// The fixed boundary condition: two curves of slope `-p/q`.
    pub fn boundary_slope(&self) -> Slope {
        Slope::new(-(self.p as i64), self.q as i64).expect("p > 0")
    }
}

/// Position on the far disk copy reached from position `i` by following a
/// dividing arc across the annulus between the two copies of the cut.
///
/// The arcs of slope `-p/q` advance `2q` endpoint positions per meridian
/// crossing, and rounding the two cut edges shifts the combined return map
/// by one position; the net map must flip endpoint parity for the rounded
/// sphere curves to close up.
fn annulus_target(i: usize, q: usize, size: usize) -> usize {
    (i + 2 * q + size - 1) % size
}

fn annulus_source(j: usize, q: usize, size: usize) -> usize {
    (j + 2 * size + 1 - 2 * q) % size
}

/// Number of closed curves on the boundary sphere of the cut-open solid
/// torus, assembled from a diagram on each disk copy and the annulus
/// return map.
pub(crate) fn assembled_components(q: usize, plus: &DiskDiagram, minus: &DiskDiagram) -> usize {
    debug_assert_eq!(plus.size(), minus.size());
    let size = plus.size();
    let total = 2 * size;
    let mut visited = vec![false; total];
    let mut components = 0;
    for start in 0..total {
        if visited[start] {
            continue;
        }
        components += 1;
        let mut node = start;
        let mut follow_chord = true;
        loop {
            visited[node] = true;
            node = if follow_chord {
                if node < size {
                    plus.partner(node)
                } else {
                    size + minus.partner(node - size)
                }
            } else if node < size {
                size + annulus_target(node, q, size)
            } else {
                annulus_source(node - size, q, size)
            };
            follow_chord = !follow_chord;
            if node == start {
                break;
            }
        }
    }
    components
}

/// The rounded boundary sphere of the cut-open solid torus: one diagram on
/// each copy of the meridional disk, joined through the annulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereAssembly {
    p: usize,
    q: usize,
    plus_diagram: DiskDiagram,
    minus_diagram: DiskDiagram,
    component_count: usize,
}

impl SphereAssembly {
    /// Assembles the sphere from possibly different diagrams on the two
    /// copies, as happens midway through a bypass attachment.
    pub fn from_copies(
        prob: &SolidTorusProblem,
        plus_diagram: DiskDiagram,
        minus_diagram: DiskDiagram,
    ) -> Result<SphereAssembly> {
        for d in [&plus_diagram, &minus_diagram] {
            if d.n() != prob.p {
                return Err(Error::SizeMismatch {
                    expected: prob.p,
                    got: d.n(),
                });
            }
        }
        let component_count = assembled_components(prob.q, &plus_diagram, &minus_diagram);
        Ok(SphereAssembly {
            p: prob.p,
            q: prob.q,
            plus_diagram,
            minus_diagram,
            component_count,
        })
    }

    pub fn plus_diagram(&self) -> &DiskDiagram {
        &self.plus_diagram
    }

    pub fn minus_diagram(&self) -> &DiskDiagram {
        &self.minus_diagram
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }
}

/// Rounds the cut-open boundary with the configuration `d` on both copies
/// of the meridional disk.
pub fn assemble_sphere(prob: &SolidTorusProblem, d: &DiskDiagram) -> Result<SphereAssembly> {
    SphereAssembly::from_copies(prob, d.clone(), d.clone())
}

/// A configuration is potentially allowable when the rounded sphere
/// dividing set is a single circle, the only dividing set a sphere can
/// carry in a tight manifold.
pub fn is_potentially_allowable(prob: &SolidTorusProblem, d: &DiskDiagram) -> Result<bool> {
    Ok(assemble_sphere(prob, d)?.component_count() == 1)
}

fn side_action(side: Side) -> (Chirality, bool) {
    // attaching from the two sides of the disk applies the two mirror
    // surgeries, each seen on its own copy of the cut
    match side {
        Side::Front => (Chirality::Pos, true),
        Side::Back => (Chirality::Neg, false),
    }
}

/// Whether a candidate bypass attachment at the triple `(i, i+1, i+2)` of
/// the given copy exists: attaching it from the interior of the cut-open
/// ball must not increase the number of sphere dividing curves.
///
/// Trivial attachments always exist and leave the state unchanged; an
/// attachment that would close off a trivial loop never exists.
pub fn transition_exists(
    prob: &SolidTorusProblem,
    d: &DiskDiagram,
    i: usize,
    side: Side,
) -> Result<bool> {
    if d.n() != prob.p {
        return Err(Error::SizeMismatch {
            expected: prob.p,
            got: d.n(),
        });
    }
    let (chirality, on_plus) = side_action(side);
    match bypass_rewrite(d, i, chirality)? {
        BypassOutcome::Trivial => Ok(true),
        BypassOutcome::Disallowed => Ok(false),
        BypassOutcome::Moved(e) => {
            let before = assembled_components(prob.q, d, d);
            let after = if on_plus {
                assembled_components(prob.q, &e, d)
            } else {
                assembled_components(prob.q, d, &e)
            };
            Ok(after <= before)
        }
    }
}

/// One discovered state transition: attaching a bypass at `triple` on the
/// given side of the configuration `a` produced configuration `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StateEdge {
    pub a: usize,
    pub b: usize,
    pub triple: usize,
    pub side: Side,
}

/// The bypass transition graph over all disk configurations of a solid
/// torus problem.
#[derive(Debug, Clone)]
pub struct StateGraph {
    p: usize,
    q: usize,
    vertices: Vec<DiskDiagram>,
    allowable: Vec<bool>,
    sphere_components: Vec<usize>,
    edges: Vec<StateEdge>,
    component: Vec<usize>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn scan_vertex(
    prob: &SolidTorusProblem,
    index: &HashMap<Vec<usize>, usize>,
    vid: usize,
    d: &DiskDiagram,
) -> (usize, Vec<StateEdge>) {
    let before = assembled_components(prob.q, d, d);
    let mut edges = Vec::new();
    // The existence criterion lives in the cut-open ball of the current
    // state, which carries a contact structure only when its boundary
    // sphere has a single dividing curve.  States that already fail
    // allowability generate no transitions; their components are discarded
    // by the count regardless.
    if prob.p >= 2 && before == 1 {
        for i in 0..d.size() {
            for side in [Side::Front, Side::Back] {
                let (chirality, on_plus) = side_action(side);
                let outcome = bypass_rewrite(d, i, chirality).expect("valid triple");
                if let BypassOutcome::Moved(e) = outcome {
                    let after = if on_plus {
                        assembled_components(prob.q, &e, d)
                    } else {
                        assembled_components(prob.q, d, &e)
                    };
                    if after <= before {
                        let b = index[e.pairing()];
                        edges.push(StateEdge {
                            a: vid,
                            b,
                            triple: i,
                            side,
                        });
                    }
                }
            }
        }
    }
    (before, edges)
}

fn assemble_graph(
    prob: &SolidTorusProblem,
    vertices: Vec<DiskDiagram>,
    scans: Vec<(usize, Vec<StateEdge>)>,
) -> StateGraph {
    let mut sphere_components = Vec::with_capacity(vertices.len());
    let mut edges = Vec::new();
    let mut uf = UnionFind::new(vertices.len());
    for (vid, (before, found)) in scans.into_iter().enumerate() {
        sphere_components.push(before);
        for e in found {
            uf.union(vid, e.b);
            edges.push(e);
        }
    }
    let allowable: Vec<bool> = sphere_components.iter().map(|&c| c == 1).collect();
    // renumber components in first-seen vertex order
    let mut relabel: HashMap<usize, usize> = HashMap::new();
    let mut component = Vec::with_capacity(vertices.len());
    for v in 0..vertices.len() {
        let root = uf.find(v);
        let next = relabel.len();
        component.push(*relabel.entry(root).or_insert(next));
    }
    StateGraph {
        p: prob.p,
        q: prob.q,
        vertices,
        allowable,
        sphere_components,
        edges,
        component,
    }
}

/// Builds the state graph scanning vertices one at a time.
pub fn build_state_graph_seq(prob: &SolidTorusProblem) -> StateGraph {
    let vertices = DiskDiagram::enumerate(prob.p);
    let index: HashMap<Vec<usize>, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, d)| (d.pairing().to_vec(), i))
        .collect();
    let scans: Vec<_> = vertices
        .iter()
        .enumerate()
        .map(|(vid, d)| scan_vertex(prob, &index, vid, d))
        .collect();
    assemble_graph(prob, vertices, scans)
}

/// Builds the state graph scanning vertices in parallel.  Each scan is a
/// pure function of its vertex, and results are collected in vertex order,
/// so the output is identical to the sequential build.
#[cfg(feature = "parallel")]
pub fn build_state_graph_par(prob: &SolidTorusProblem) -> StateGraph {
    let vertices = DiskDiagram::enumerate(prob.p);
    let index: HashMap<Vec<usize>, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, d)| (d.pairing().to_vec(), i))
        .collect();
    let scans: Vec<_> = vertices
        .par_iter()
        .enumerate()
        .map(|(vid, d)| scan_vertex(prob, &index, vid, d))
        .collect();
    assemble_graph(prob, vertices, scans)
}

/// Builds the bypass transition graph: vertices are all non-crossing
/// configurations of the meridional disk, edges the admissible single
/// bypass attachments from either side.
pub fn build_state_graph(prob: &SolidTorusProblem) -> StateGraph {
    #[cfg(feature = "parallel")]
    {
        build_state_graph_par(prob)
    }
    #[cfg(not(feature = "parallel"))]
    {
        build_state_graph_seq(prob)
    }
}

impl StateGraph {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn vertices(&self) -> &[DiskDiagram] {
        &self.vertices
    }

    pub fn is_allowable(&self, vertex: usize) -> bool {
        self.allowable[vertex]
    }

    pub fn allowable_count(&self) -> usize {
        self.allowable.iter().filter(|&&a| a).count()
    }

    pub fn sphere_components(&self, vertex: usize) -> usize {
        self.sphere_components[vertex]
    }

    pub fn edges(&self) -> &[StateEdge] {
        &self.edges
    }

    /// Component label of a vertex, numbered in first-seen order.
    pub fn component(&self, vertex: usize) -> usize {
        self.component[vertex]
    }

    pub fn component_count(&self) -> usize {
        self.component.iter().max().map_or(0, |m| m + 1)
    }

    /// Tight contact structures correspond to the connected components all
    /// of whose configurations are potentially allowable.
    pub fn tight_count(&self) -> u64 {
        let components = self.component_count();
        let mut all_allowable = vec![true; components];
        for (v, &comp) in self.component.iter().enumerate() {
            all_allowable[comp] &= self.allowable[v];
        }
        all_allowable.iter().filter(|&&ok| ok).count() as u64
    }

    /// Deterministic DOT serialization.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("graph state_graph {\n");
        let _ = writeln!(out, "  // p={} q={} tight_count={}", self.p, self.q, self.tight_count());
        for (i, d) in self.vertices.iter().enumerate() {
            let _ = writeln!(
                out,
                "  {} [label=\"{}\", allowable={}];",
                i,
                d.encoding(),
                self.allowable[i]
            );
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  {} -- {} [triple={}, side={}];",
                e.a, e.b, e.triple, e.side
            );
        }
        out.push_str("}\n");
        out
    }

    /// Deterministic JSON serialization.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct VertexRecord {
            id: usize,
            r#match: Vec<usize>,
            allowable: bool,
        }
        #[derive(Serialize)]
        struct GraphRecord<'a> {
            schema_version: u32,
            p: usize,
            q: usize,
            vertices: Vec<VertexRecord>,
            edges: &'a [StateEdge],
            tight_count: u64,
        }
        let record = GraphRecord {
            schema_version: 1,
            p: self.p,
            q: self.q,
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, d)| VertexRecord {
                    id,
                    r#match: d.pairing().to_vec(),
                    allowable: self.allowable[id],
                })
                .collect(),
            edges: &self.edges,
            tight_count: self.tight_count(),
        };
        let mut json = serde_json::to_string_pretty(&record).expect("serializable");
        json.push('\n');
        json
    }
}

/// Number of tight contact structures on the solid torus with boundary
/// slope `-p/q`, computed by graph traversal.
pub fn tight_count_traversal(prob: &SolidTorusProblem) -> u64 {
    build_state_graph(prob).tight_count()
}

/// Output format for [`export_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<ExportFormat> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Builds the state graph and serializes it deterministically.
pub fn export_graph(prob: &SolidTorusProblem, format: ExportFormat) -> String {
    let graph = build_state_graph(prob);
    match format {
        ExportFormat::Dot => graph.to_dot(),
        ExportFormat::Json => graph.to_json(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prob(p: i64, q: i64) -> SolidTorusProblem {
        SolidTorusProblem::new(p, q).unwrap()
    }

    fn diagram(n: usize, chords: &[(usize, usize)]) -> DiskDiagram {
        DiskDiagram::from_chords(n, chords).unwrap()
    }

    #[test]
    fn problem_validation() {
        assert!(SolidTorusProblem::new(2, 1).is_ok());
        assert!(SolidTorusProblem::new(1, 1).is_ok());
        assert!(SolidTorusProblem::new(4, 2).is_err());
        assert!(SolidTorusProblem::new(2, 3).is_err());
        assert!(SolidTorusProblem::new(0, 1).is_err());
        assert_eq!(
            prob(14, 5).boundary_slope(),
            Slope::new(-14, 5).unwrap()
        );
    }

    #[test]
    fn base_case_assembly() {
        let a = assemble_sphere(&prob(1, 1), &diagram(1, &[(0, 1)])).unwrap();
        assert_eq!(a.component_count(), 1);
    }

    #[test]
    fn two_one_assembly() {
        let p = prob(2, 1);
        for d in DiskDiagram::enumerate(2) {
            let a = assemble_sphere(&p, &d).unwrap();
            assert_eq!(a.component_count(), 1, "{}", d.encoding());
            assert!(is_potentially_allowable(&p, &d).unwrap());
        }
    }

    #[test]
    fn assembly_rejects_size_mismatch() {
        let err = assemble_sphere(&prob(2, 1), &diagram(1, &[(0, 1)]));
        assert_eq!(
            err.unwrap_err(),
            Error::SizeMismatch {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn three_one_allowability() {
        // exactly the five configurations on six points, all allowable
        let p = prob(3, 1);
        for d in DiskDiagram::enumerate(3) {
            assert!(is_potentially_allowable(&p, &d).unwrap(), "{}", d.encoding());
        }
    }

    #[test]
    fn three_two_allowability() {
        let p = prob(3, 2);
        let allowable: Vec<String> = DiskDiagram::enumerate(3)
            .into_iter()
            .filter(|d| is_potentially_allowable(&p, d).unwrap())
            .map(|d| d.encoding())
            .collect();
        assert_eq!(allowable, vec!["1,0,3,2,5,4", "5,2,1,4,3,0"]);
    }

    #[test]
    fn trivial_transition_exists() {
        let p = prob(2, 1);
        let d = diagram(2, &[(0, 1), (2, 3)]);
        // triple (0,1,2) carries the chord (0,1): the front attachment is
        // the trivial one, the back attachment would close off a loop
        assert!(transition_exists(&p, &d, 0, Side::Front).unwrap());
        assert!(!transition_exists(&p, &d, 0, Side::Back).unwrap());
    }

    #[test]
    fn two_one_has_no_moved_transitions() {
        // both configurations are allowable and isolated, giving count two
        let g = build_state_graph(&prob(2, 1));
        assert_eq!(g.vertices().len(), 2);
        assert!(g.edges().is_empty());
        assert_eq!(g.allowable_count(), 2);
        assert_eq!(g.tight_count(), 2);
    }

    #[test]
    fn single_vertex_graph() {
        let g = build_state_graph(&prob(1, 1));
        assert_eq!(g.vertices().len(), 1);
        assert!(g.edges().is_empty());
        assert_eq!(g.tight_count(), 1);
    }

    #[test]
    fn three_one_components() {
        let g = build_state_graph(&prob(3, 1));
        assert_eq!(g.vertices().len(), 5);
        assert_eq!(g.allowable_count(), 5);
        assert_eq!(g.tight_count(), 3);
    }

    #[test]
    fn three_two_components() {
        let g = build_state_graph(&prob(3, 2));
        assert_eq!(g.tight_count(), 2);
    }

    #[test]
    fn seq_and_par_builds_agree() {
        let p = prob(5, 3);
        let seq = build_state_graph_seq(&p);
        #[cfg(feature = "parallel")]
        {
            let par = build_state_graph_par(&p);
            assert_eq!(seq.edges(), par.edges());
            assert_eq!(seq.tight_count(), par.tight_count());
        }
        assert_eq!(
            seq.tight_count(),
            crate::classify::solid_torus_count_formula(5, 3).unwrap()
        );
    }

    #[test]
    fn export_dot_single_vertex() {
        let out = export_graph(&prob(1, 1), ExportFormat::Dot);
        assert!(out.starts_with("graph state_graph {"));
        assert!(out.contains("0 [label=\"1,0\", allowable=true];"));
    }

    #[test]
    fn export_json_two_one() {
        let out = export_graph(&prob(2, 1), ExportFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["p"], 2);
        assert_eq!(v["vertices"].as_array().unwrap().len(), 2);
        assert_eq!(v["edges"].as_array().unwrap().len(), 0);
        assert_eq!(v["tight_count"], 2);
        assert_eq!(v["vertices"][0]["match"], serde_json::json!([1, 0, 3, 2]));
    }

    #[test]
    fn unknown_format_rejected() {
        assert_eq!(
            "xml".parse::<ExportFormat>(),
            Err(Error::UnknownFormat("xml".into()))
        );
        assert_eq!("dot".parse::<ExportFormat>(), Ok(ExportFormat::Dot));
    }

    #[test]
    fn components_invariant_under_rotation_and_reflection() {
        let p = prob(4, 3);
        let size = 8;
        for d in DiskDiagram::enumerate(4) {
            let c = assembled_components(p.q, &d, &d);
            for t in 0..size {
                let rotated: Vec<usize> = (0..size)
                    .map(|i| (d.partner((i + size - t) % size) + t) % size)
                    .collect();
                let r = DiskDiagram::new(rotated).unwrap();
                assert_eq!(assembled_components(p.q, &r, &r), c);
            }
            for c0 in 0..size {
                let reflected: Vec<usize> = (0..size)
                    .map(|i| {
                        let pre = (c0 + size - i % size) % size;
                        (c0 + size - d.partner(pre)) % size
                    })
                    .collect();
                let m = DiskDiagram::new(reflected).unwrap();
                assert_eq!(assembled_components(p.q, &m, &m), c);
            }
        }
    }
}
