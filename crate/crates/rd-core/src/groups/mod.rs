//! Group backends with exact arithmetic and proper length functions.
//!
//! Three vertex-level backends (free, weighted free-abelian, finite cyclic)
//! plus graph products over them. Every element is stored in a canonical
//! form, so equality of group elements is equality of payloads:
//!
//! * free words are freely reduced;
//! * integer vectors and cyclic residues are canonical as stored;
//! * graph-product words are reduced (no two syllables can be brought
//!   together and merged) and normalized to the lexicographically least
//!   word in their shuffle class under the vertex order.

mod abelian;
mod cyclic;
mod free;
mod graph;

pub use graph::Graph;
pub(crate) use graph::GraphProduct;

use std::fmt::Write as _;

use num::rational::Ratio;
use num::{One, Signed, ToPrimitive};
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::length::{parse_ratio, Length};
use crate::{Error, Result};

/// Canonical payload of a group element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Payload {
    /// Freely reduced word; letter `+k` is generator `k-1`, `-k` its inverse.
    Word(Vec<i32>),
    /// Exponent vector of a free-abelian element.
    Vector(Vec<i64>),
    /// Residue in `0..order` of a cyclic element.
    Torsion(u64),
    /// Reduced, shuffle-normalized syllable sequence of a graph-product element.
    Syllables(Vec<Syllable>),
}

/// One syllable of a graph-product word: a nontrivial element of one vertex group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Syllable {
    pub vertex: u32,
    pub value: Payload,
}

/// A group element in canonical form, tagged with its backend fingerprint.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Element {
    backend: u64,
    payload: Payload,
}

impl Element {
    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    pub(crate) fn backend_id(&self) -> u64 {
        self.backend
    }
}

/// Vertex-level backend kind (also the top-level kind for non-products).
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) enum VertexKind {
    Free { rank: u32 },
    Abelian { weights: Vec<Ratio<i64>> },
    Cyclic { order: u64 },
}

#[derive(Clone, Debug)]
pub(crate) enum Kind {
    Vertex(VertexKind),
    Graph(GraphProduct),
}

/// A group with exact multiplication, inversion and a proper length function.
#[derive(Clone, Debug)]
pub struct GroupBackend {
    id: u64,
    config_json: String,
    kind: Kind,
}

// ---------------------------------------------------------------------------
// Configuration parsing
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum RawConfig {
    Free {
        rank: u32,
    },
    WeightedAbelian {
        weights: Vec<serde_json::Value>,
    },
    Cyclic {
        order: u64,
    },
    GraphProduct {
        vertices: u32,
        edges: Vec<(u32, u32)>,
        vertex_groups: Vec<RawConfig>,
    },
}

fn parse_weight(v: &serde_json::Value) -> Result<Ratio<i64>> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Ratio::from_integer(i))
            } else {
                // Non-integer JSON number: parse its shortest decimal form exactly.
                parse_ratio(&n.to_string())
            }
        }
        serde_json::Value::String(s) => parse_ratio(s),
        other => Err(Error::InvalidConfig(format!(
            "weight must be a number or a rational string, got {other}"
        ))),
    }
}

fn validate_vertex(raw: &RawConfig, errors: &mut Vec<String>, path: &str) -> Option<VertexKind> {
    match raw {
        RawConfig::Free { rank } => {
            if *rank == 0 {
                errors.push(format!("{path}: free rank must be >= 1"));
                None
            } else {
                Some(VertexKind::Free { rank: *rank })
            }
        }
        RawConfig::WeightedAbelian { weights } => {
            if weights.is_empty() {
                errors.push(format!("{path}: weighted_abelian needs at least one weight"));
                return None;
            }
            let mut ws = Vec::with_capacity(weights.len());
            for (i, w) in weights.iter().enumerate() {
                match parse_weight(w) {
                    Ok(r) => {
                        if r < Ratio::one() {
                            errors.push(format!(
                                "{path}: weight {i} is {r} but properness requires every weight >= 1"
                            ));
                        } else {
                            ws.push(r);
                        }
                    }
                    Err(e) => errors.push(format!("{path}: weight {i}: {e}")),
                }
            }
            if ws.len() == weights.len() {
                Some(VertexKind::Abelian { weights: ws })
            } else {
                None
            }
        }
        RawConfig::Cyclic { order } => {
            if *order < 2 {
                errors.push(format!("{path}: cyclic order must be >= 2"));
                None
            } else {
                Some(VertexKind::Cyclic { order: *order })
            }
        }
        RawConfig::GraphProduct { .. } => {
            errors.push(format!(
                "{path}: nested graph products are not supported as vertex groups"
            ));
            None
        }
    }
}

impl GroupBackend {
    /// Parse and validate a group configuration from its JSON form.
    pub fn from_json(json: &str) -> Result<Self> {
        let raw: RawConfig =
            serde_json::from_str(json).map_err(|e| Error::InvalidConfig(e.to_string()))?;
        let mut errors = Vec::new();
        let kind = match &raw {
            RawConfig::GraphProduct {
                vertices,
                edges,
                vertex_groups,
            } => {
                if *vertices == 0 {
                    errors.push("graph product needs at least one vertex".to_string());
                }
                if vertex_groups.len() != *vertices as usize {
                    errors.push(format!(
                        "vertex_groups has {} entries but the graph has {} vertices",
                        vertex_groups.len(),
                        vertices
                    ));
                }
                let graph = match Graph::new(*vertices, edges) {
                    Ok(g) => Some(g),
                    Err(e) => {
                        errors.push(e.to_string());
                        None
                    }
                };
                let mut vks = Vec::new();
                for (i, vg) in vertex_groups.iter().enumerate() {
                    if let Some(vk) = validate_vertex(vg, &mut errors, &format!("vertex {i}")) {
                        vks.push(vk);
                    }
                }
                if errors.is_empty() {
                    Some(Kind::Graph(GraphProduct::new(graph.unwrap(), vks)))
                } else {
                    None
                }
            }
            vertex => validate_vertex(vertex, &mut errors, "group").map(Kind::Vertex),
        };
        if let Some(kind) = kind {
            if errors.is_empty() {
                return Ok(Self::from_kind(kind));
            }
        }
        Err(Error::InvalidConfig(errors.join("; ")))
    }

    pub(crate) fn from_kind(kind: Kind) -> Self {
        let config_json = canonical_config_json(&kind);
        let id = fnv64(config_json.as_bytes());
        GroupBackend {
            id,
            config_json,
            kind,
        }
    }

    /// The canonical JSON form of this backend's configuration.
    pub fn config_json(&self) -> &str {
        &self.config_json
    }

    /// Short hex digest of the canonical configuration, embedded in reports.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.config_json.as_bytes());
        let out = h.finalize();
        out[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub(crate) fn kind(&self) -> &Kind {
        &self.kind
    }

    pub(crate) fn check(&self, e: &Element) -> Result<()> {
        if e.backend == self.id {
            Ok(())
        } else {
            Err(Error::BackendMismatch)
        }
    }

    fn own(&self, payload: Payload) -> Element {
        Element {
            backend: self.id,
            payload,
        }
    }

    fn assert_own(&self, e: &Element) {
        assert_eq!(
            e.backend, self.id,
            "element belongs to a different group backend"
        );
    }

    // -- constructors --------------------------------------------------------

    /// Convenience constructors for the standalone backends.
    pub fn free(rank: u32) -> Self {
        Self::from_kind(Kind::Vertex(VertexKind::Free { rank }))
    }

    pub fn weighted_abelian(weights: Vec<Ratio<i64>>) -> Self {
        Self::from_kind(Kind::Vertex(VertexKind::Abelian { weights }))
    }

    pub fn weighted_abelian_int(weights: &[i64]) -> Self {
        Self::weighted_abelian(weights.iter().map(|&w| Ratio::from_integer(w)).collect())
    }

    pub fn cyclic(order: u64) -> Self {
        Self::from_kind(Kind::Vertex(VertexKind::Cyclic { order }))
    }

    pub fn graph_product(graph: Graph, vertex_configs: &[GroupBackend]) -> Result<Self> {
        let mut vks = Vec::with_capacity(vertex_configs.len());
        for b in vertex_configs {
            match &b.kind {
                Kind::Vertex(vk) => vks.push(vk.clone()),
                Kind::Graph(_) => {
                    return Err(Error::InvalidConfig(
                        "nested graph products are not supported as vertex groups".into(),
                    ))
                }
            }
        }
        if vks.len() != graph.vertex_count() as usize {
            return Err(Error::InvalidConfig(
                "vertex group count does not match the graph".into(),
            ));
        }
        Ok(Self::from_kind(Kind::Graph(GraphProduct::new(graph, vks))))
    }

    // -- core group operations ------------------------------------------------

    pub fn identity(&self) -> Element {
        let payload = match &self.kind {
            Kind::Vertex(vk) => vk.identity(),
            Kind::Graph(_) => Payload::Syllables(Vec::new()),
        };
        self.own(payload)
    }

    pub fn is_identity(&self, e: &Element) -> bool {
        self.assert_own(e);
        match &e.payload {
            Payload::Word(w) => w.is_empty(),
            Payload::Vector(v) => v.iter().all(|&x| x == 0),
            Payload::Torsion(t) => *t == 0,
            Payload::Syllables(s) => s.is_empty(),
        }
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        let payload = match (&self.kind, &a.payload, &b.payload) {
            (Kind::Vertex(vk), pa, pb) => vk.mul(pa, pb),
            (Kind::Graph(gp), Payload::Syllables(sa), Payload::Syllables(sb)) => {
                Payload::Syllables(gp.mul(sa, sb))
            }
            _ => return Err(Error::BackendMismatch),
        };
        Ok(self.own(payload))
    }

    /// Product of a slice of elements, left to right.
    pub fn product(&self, parts: &[Element]) -> Result<Element> {
        let mut acc = self.identity();
        for p in parts {
            acc = self.multiply(&acc, p)?;
        }
        Ok(acc)
    }

    pub fn inverse(&self, a: &Element) -> Element {
        self.assert_own(a);
        let payload = match (&self.kind, &a.payload) {
            (Kind::Vertex(vk), p) => vk.inv(p),
            (Kind::Graph(gp), Payload::Syllables(s)) => Payload::Syllables(gp.inv(s)),
            _ => panic!("payload does not match backend"),
        };
        self.own(payload)
    }

    pub fn length(&self, a: &Element) -> Length {
        self.assert_own(a);
        match (&self.kind, &a.payload) {
            (Kind::Vertex(vk), p) => vk.length(p),
            (Kind::Graph(gp), Payload::Syllables(s)) => gp.length(s),
            _ => panic!("payload does not match backend"),
        }
    }

    /// Word distance `L(a^{-1} b)`.
    pub fn distance(&self, a: &Element, b: &Element) -> Result<Length> {
        let d = self.multiply(&self.inverse(a), b)?;
        Ok(self.length(&d))
    }

    /// Syllable length of a graph-product element.
    pub fn syllable_length(&self, a: &Element) -> Result<u64> {
        self.check(a)?;
        match (&self.kind, &a.payload) {
            (Kind::Graph(_), Payload::Syllables(s)) => Ok(s.len() as u64),
            _ => Err(Error::NotGraphProduct),
        }
    }

    /// True iff `parts` multiply to `g` with additive syllable length.
    pub fn is_factorization(&self, g: &Element, parts: &[Element]) -> Result<bool> {
        let product = self.product(parts)?;
        if &product != g {
            return Err(Error::NotAProduct);
        }
        let total: u64 = parts
            .iter()
            .map(|p| self.syllable_length(p))
            .sum::<Result<u64>>()?;
        Ok(self.syllable_length(g)? == total)
    }

    /// Generator moves for ball enumeration: every generator and its inverse,
    /// deduplicated, paired with its length.
    pub fn generator_moves(&self) -> Vec<(Element, Length)> {
        let payloads = match &self.kind {
            Kind::Vertex(vk) => vk.generator_payloads(),
            Kind::Graph(gp) => gp.generator_payloads(),
        };
        let mut out: Vec<Element> = payloads.into_iter().map(|p| self.own(p)).collect();
        out.sort();
        out.dedup();
        out.into_iter()
            .map(|e| {
                let l = self.length(&e);
                (e, l)
            })
            .collect()
    }

    /// Canonicalize a payload of the right shape for this backend.
    ///
    /// Accepts unreduced input (unreduced words, mergeable syllables) and
    /// returns the canonical element; rejects structurally foreign payloads.
    pub fn canonical(&self, payload: Payload) -> Result<Element> {
        let canon = match (&self.kind, payload) {
            (Kind::Vertex(vk), p) => vk.canonical(p)?,
            (Kind::Graph(gp), Payload::Syllables(s)) => Payload::Syllables(gp.canon(s)?),
            _ => return Err(Error::InvalidArgument("payload does not match backend".into())),
        };
        Ok(self.own(canon))
    }

    // -- graph-product specifics ----------------------------------------------

    pub(crate) fn graph_product_kind(&self) -> Result<&GraphProduct> {
        match &self.kind {
            Kind::Graph(gp) => Ok(gp),
            _ => Err(Error::NotGraphProduct),
        }
    }

    /// The underlying graph of this graph product.
    pub fn graph(&self) -> Result<&Graph> {
        Ok(&self.graph_product_kind()?.graph)
    }

    pub(crate) fn syllables_of<'a>(&self, e: &'a Element) -> Result<&'a [Syllable]> {
        self.check(e)?;
        match &e.payload {
            Payload::Syllables(s) => Ok(s),
            _ => Err(Error::NotGraphProduct),
        }
    }

    pub(crate) fn element_from_syllables(&self, syllables: Vec<Syllable>) -> Result<Element> {
        let gp = self.graph_product_kind()?;
        Ok(self.own(Payload::Syllables(gp.canon(syllables)?)))
    }

    /// True iff every syllable of `e` lives on a vertex of `clique`.
    pub fn element_in_clique(&self, clique: &[u32], e: &Element) -> Result<bool> {
        let syl = self.syllables_of(e)?;
        Ok(syl.iter().all(|s| clique.contains(&s.vertex)))
    }

    /// The clique subgroup `G_C` as a standalone backend: the induced graph
    /// product on `clique` (a complete graph), vertices renumbered in
    /// ascending order of their original indices.
    pub fn clique_subgroup(&self, clique: &[u32]) -> Result<GroupBackend> {
        let gp = self.graph_product_kind()?;
        if !gp.graph.is_clique(clique) {
            return Err(Error::InvalidArgument(format!(
                "{clique:?} is not a clique of the graph"
            )));
        }
        let mut sorted: Vec<u32> = clique.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let k = sorted.len() as u32;
        let mut edges = Vec::new();
        for i in 0..k {
            for j in (i + 1)..k {
                edges.push((i, j));
            }
        }
        let graph = Graph::new(k, &edges)?;
        let vks: Vec<VertexKind> = sorted
            .iter()
            .map(|&v| gp.vertices[v as usize].clone())
            .collect();
        Ok(Self::from_kind(Kind::Graph(GraphProduct::new(graph, vks))))
    }

    /// Map an element of `clique_subgroup(clique)` into this graph product.
    pub fn embed_from_clique(
        &self,
        sub: &GroupBackend,
        clique: &[u32],
        e: &Element,
    ) -> Result<Element> {
        let mut sorted: Vec<u32> = clique.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let syl = sub.syllables_of(e)?;
        let mapped: Vec<Syllable> = syl
            .iter()
            .map(|s| Syllable {
                vertex: sorted[s.vertex as usize],
                value: s.value.clone(),
            })
            .collect();
        self.element_from_syllables(mapped)
    }

    /// The standalone backend of vertex `v` of a graph product.
    pub fn vertex_backend(&self, v: u32) -> Result<GroupBackend> {
        let gp = self.graph_product_kind()?;
        let vk = gp
            .vertices
            .get(v as usize)
            .ok_or_else(|| Error::InvalidArgument(format!("no vertex {v}")))?;
        Ok(Self::from_kind(Kind::Vertex(vk.clone())))
    }

    /// True iff the graph of this product is complete (realizes a direct product).
    pub fn is_complete_graph_product(&self) -> bool {
        match &self.kind {
            Kind::Graph(gp) => gp.graph.is_complete(),
            _ => false,
        }
    }

    /// Per-vertex components of an element of a complete graph product.
    ///
    /// Returns one element per vertex in the vertex's own backend (the
    /// identity where the vertex does not occur).
    pub fn direct_product_components(&self, e: &Element) -> Result<Vec<Element>> {
        let gp = self.graph_product_kind()?;
        if !gp.graph.is_complete() {
            return Err(Error::InvalidArgument(
                "component decomposition requires a complete graph".into(),
            ));
        }
        let syl = self.syllables_of(e)?;
        let mut out = Vec::with_capacity(gp.vertices.len());
        for v in 0..gp.vertices.len() as u32 {
            let vb = self.vertex_backend(v)?;
            let value = syl
                .iter()
                .find(|s| s.vertex == v)
                .map(|s| s.value.clone())
                .unwrap_or_else(|| gp.vertices[v as usize].identity());
            out.push(vb.canonical(value)?);
        }
        Ok(out)
    }

    /// Rebuild a complete-graph-product element from per-vertex components.
    pub fn from_direct_product_components(&self, components: &[Element]) -> Result<Element> {
        let gp = self.graph_product_kind()?;
        if components.len() != gp.vertices.len() {
            return Err(Error::InvalidArgument("component count mismatch".into()));
        }
        let syllables: Vec<Syllable> = components
            .iter()
            .enumerate()
            .map(|(v, c)| Syllable {
                vertex: v as u32,
                value: c.payload().clone(),
            })
            .collect();
        self.element_from_syllables(syllables)
    }

    /// The direct-product length `sum_v L_v(g_v)` of a complete-graph-product
    /// element (no syllable-count term).
    pub fn direct_product_length(&self, e: &Element) -> Result<Length> {
        let gp = self.graph_product_kind()?;
        if !gp.graph.is_complete() {
            return Err(Error::InvalidArgument(
                "direct-product length requires a complete graph".into(),
            ));
        }
        let syl = self.syllables_of(e)?;
        Ok(syl
            .iter()
            .map(|s| gp.vertices[s.vertex as usize].length(&s.value))
            .sum())
    }

    // -- canonical strings ----------------------------------------------------

    /// Canonical string form of an element.
    pub fn format_element(&self, e: &Element) -> String {
        self.assert_own(e);
        match (&self.kind, &e.payload) {
            (Kind::Vertex(vk), p) => vk.format(p),
            (Kind::Graph(gp), Payload::Syllables(s)) => {
                if s.is_empty() {
                    return "1".to_string();
                }
                let mut out = String::new();
                for (i, syl) in s.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" | ");
                    }
                    let _ = write!(
                        out,
                        "v{}:{}",
                        syl.vertex,
                        gp.vertices[syl.vertex as usize].format(&syl.value)
                    );
                }
                out
            }
            _ => panic!("payload does not match backend"),
        }
    }

    /// Parse a canonical element string (accepts unreduced input and
    /// canonicalizes it).
    pub fn parse_element(&self, s: &str) -> Result<Element> {
        let s = s.trim();
        let payload = match &self.kind {
            Kind::Vertex(vk) => vk.parse(s)?,
            Kind::Graph(gp) => {
                if s == "1" || s.is_empty() {
                    Payload::Syllables(Vec::new())
                } else {
                    let mut syllables = Vec::new();
                    for part in s.split('|') {
                        let part = part.trim();
                        let rest = part.strip_prefix('v').ok_or_else(|| Error::ParseElement {
                            input: s.into(),
                            reason: format!("syllable '{part}' must start with 'v<index>:'"),
                        })?;
                        let (idx, val) =
                            rest.split_once(':').ok_or_else(|| Error::ParseElement {
                                input: s.into(),
                                reason: format!("syllable '{part}' is missing ':'"),
                            })?;
                        let vertex: u32 =
                            idx.trim().parse().map_err(|_| Error::ParseElement {
                                input: s.into(),
                                reason: format!("bad vertex index '{idx}'"),
                            })?;
                        if vertex as usize >= gp.vertices.len() {
                            return Err(Error::ParseElement {
                                input: s.into(),
                                reason: format!("vertex {vertex} out of range"),
                            });
                        }
                        let value = gp.vertices[vertex as usize].parse(val.trim())?;
                        syllables.push(Syllable { vertex, value });
                    }
                    Payload::Syllables(gp.canon(syllables)?)
                }
            }
        };
        self.canonical(payload)
    }
}

// ---------------------------------------------------------------------------
// VertexKind dispatch
// ---------------------------------------------------------------------------

impl VertexKind {
    pub(crate) fn identity(&self) -> Payload {
        match self {
            VertexKind::Free { .. } => Payload::Word(Vec::new()),
            VertexKind::Abelian { weights } => Payload::Vector(vec![0; weights.len()]),
            VertexKind::Cyclic { .. } => Payload::Torsion(0),
        }
    }

    pub(crate) fn is_identity(&self, p: &Payload) -> bool {
        match p {
            Payload::Word(w) => w.is_empty(),
            Payload::Vector(v) => v.iter().all(|&x| x == 0),
            Payload::Torsion(t) => *t == 0,
            Payload::Syllables(_) => unreachable!("vertex payloads are not syllable words"),
        }
    }

    pub(crate) fn mul(&self, a: &Payload, b: &Payload) -> Payload {
        match (self, a, b) {
            (VertexKind::Free { .. }, Payload::Word(x), Payload::Word(y)) => {
                Payload::Word(free::mul(x, y))
            }
            (VertexKind::Abelian { .. }, Payload::Vector(x), Payload::Vector(y)) => {
                Payload::Vector(abelian::add(x, y))
            }
            (VertexKind::Cyclic { order }, Payload::Torsion(x), Payload::Torsion(y)) => {
                Payload::Torsion(cyclic::mul(*order, *x, *y))
            }
            _ => panic!("payload does not match vertex backend"),
        }
    }

    pub(crate) fn inv(&self, a: &Payload) -> Payload {
        match (self, a) {
            (VertexKind::Free { .. }, Payload::Word(x)) => Payload::Word(free::inv(x)),
            (VertexKind::Abelian { .. }, Payload::Vector(x)) => Payload::Vector(abelian::neg(x)),
            (VertexKind::Cyclic { order }, Payload::Torsion(x)) => {
                Payload::Torsion(cyclic::inv(*order, *x))
            }
            _ => panic!("payload does not match vertex backend"),
        }
    }

    pub(crate) fn length(&self, a: &Payload) -> Length {
        match (self, a) {
            (VertexKind::Free { .. }, Payload::Word(x)) => Length::from_integer(x.len() as i64),
            (VertexKind::Abelian { weights }, Payload::Vector(x)) => abelian::length(weights, x),
            (VertexKind::Cyclic { order }, Payload::Torsion(x)) => {
                Length::from_integer(cyclic::length(*order, *x) as i64)
            }
            _ => panic!("payload does not match vertex backend"),
        }
    }

    pub(crate) fn canonical(&self, p: Payload) -> Result<Payload> {
        match (self, p) {
            (VertexKind::Free { rank }, Payload::Word(x)) => {
                for &l in &x {
                    if l == 0 || l.unsigned_abs() > *rank {
                        return Err(Error::InvalidArgument(format!(
                            "letter {l} out of range for free rank {rank}"
                        )));
                    }
                }
                Ok(Payload::Word(free::reduce(x)))
            }
            (VertexKind::Abelian { weights }, Payload::Vector(x)) => {
                if x.len() != weights.len() {
                    return Err(Error::InvalidArgument(format!(
                        "vector has dimension {} but the group has rank {}",
                        x.len(),
                        weights.len()
                    )));
                }
                Ok(Payload::Vector(x))
            }
            (VertexKind::Cyclic { order }, Payload::Torsion(x)) => Ok(Payload::Torsion(x % order)),
            _ => Err(Error::InvalidArgument("payload does not match backend".into())),
        }
    }

    pub(crate) fn generator_payloads(&self) -> Vec<Payload> {
        match self {
            VertexKind::Free { rank } => {
                let mut out = Vec::new();
                for k in 1..=*rank as i32 {
                    out.push(Payload::Word(vec![k]));
                    out.push(Payload::Word(vec![-k]));
                }
                out
            }
            VertexKind::Abelian { weights } => {
                let n = weights.len();
                let mut out = Vec::new();
                for i in 0..n {
                    let mut plus = vec![0i64; n];
                    plus[i] = 1;
                    let mut minus = vec![0i64; n];
                    minus[i] = -1;
                    out.push(Payload::Vector(plus));
                    out.push(Payload::Vector(minus));
                }
                out
            }
            VertexKind::Cyclic { order } => {
                let mut out = vec![Payload::Torsion(1)];
                if *order > 2 {
                    out.push(Payload::Torsion(order - 1));
                }
                out
            }
        }
    }

    pub(crate) fn format(&self, p: &Payload) -> String {
        match (self, p) {
            (VertexKind::Free { rank }, Payload::Word(w)) => free::format(w, *rank),
            (VertexKind::Abelian { .. }, Payload::Vector(v)) => abelian::format(v),
            (VertexKind::Cyclic { .. }, Payload::Torsion(t)) => cyclic::format(*t),
            _ => panic!("payload does not match vertex backend"),
        }
    }

    pub(crate) fn parse(&self, s: &str) -> Result<Payload> {
        match self {
            VertexKind::Free { rank } => Ok(Payload::Word(free::parse(s, *rank)?)),
            VertexKind::Abelian { weights } => {
                Ok(Payload::Vector(abelian::parse(s, weights.len())?))
            }
            VertexKind::Cyclic { order } => Ok(Payload::Torsion(cyclic::parse(s, *order)?)),
        }
    }

    fn config_json(&self) -> String {
        match self {
            VertexKind::Free { rank } => format!(r#"{{"type":"free","rank":{rank}}}"#),
            VertexKind::Abelian { weights } => {
                let ws: Vec<String> = weights
                    .iter()
                    .map(|w| {
                        if w.is_integer() {
                            w.numer().to_string()
                        } else {
                            format!(r#""{}/{}""#, w.numer(), w.denom())
                        }
                    })
                    .collect();
                format!(
                    r#"{{"type":"weighted_abelian","weights":[{}]}}"#,
                    ws.join(",")
                )
            }
            VertexKind::Cyclic { order } => format!(r#"{{"type":"cyclic","order":{order}}}"#),
        }
    }
}

fn canonical_config_json(kind: &Kind) -> String {
    match kind {
        Kind::Vertex(vk) => vk.config_json(),
        Kind::Graph(gp) => {
            let edges: Vec<String> = gp
                .graph
                .edges()
                .iter()
                .map(|(i, j)| format!("[{i},{j}]"))
                .collect();
            let groups: Vec<String> = gp.vertices.iter().map(|v| v.config_json()).collect();
            format!(
                r#"{{"type":"graph_product","vertices":{},"edges":[{}],"vertex_groups":[{}]}}"#,
                gp.graph.vertex_count(),
                edges.join(","),
                groups.join(",")
            )
        }
    }
}

fn fnv64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// Exact weighted l1 norm helper used by the abelian backend and the lattice
/// analysis code.
pub(crate) fn weighted_l1(weights: &[Ratio<i64>], v: &[i64]) -> Ratio<i64> {
    let mut acc = Ratio::from_integer(0);
    for (w, &x) in weights.iter().zip(v) {
        acc += w * Ratio::from_integer(x.abs());
    }
    acc
}

pub(crate) fn ratio_to_f64(r: &Ratio<i64>) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[allow(unused)]
fn silence(r: &Ratio<i64>) -> bool {
    r.is_positive()
}
