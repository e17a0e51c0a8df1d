//! Finite components of the infinite Cayley tree of order 2.
//!
//! Vertices are addressed by their path from a distinguished root. The root
//! is the empty word and has three children `0`, `1`, `2`; every other
//! vertex `v` has the children `v0` and `v1`. Each vertex therefore has
//! degree three: the root through its children, everything else through
//! its parent and two children. Addresses order lexicographically, which
//! gives the enumeration oracle a canonical order on free edges.
//!
//! Textual form: the root is spelled `e`, other vertices are their branch
//! digits (`2`, `00`, `011`, ...).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexAddress(Vec<u8>);

impl VertexAddress {
    pub fn root() -> Self {
        VertexAddress(Vec::new())
    }

    /// Build an address from branch digits, validating the alphabet.
    pub fn from_branches(branches: &[u8]) -> Result<Self> {
        let ok = branches
            .iter()
            .enumerate()
            .all(|(i, &b)| b < 2 || (i == 0 && b == 2));
        if ok {
            Ok(VertexAddress(branches.to_vec()))
        } else {
            Err(Error::MalformedAddress(format!("{branches:?}")))
        }
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn branches(&self) -> &[u8] {
        &self.0
    }

    /// Distance from the root.
    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn parent(&self) -> Option<VertexAddress> {
        if self.0.is_empty() {
            None
        } else {
            Some(VertexAddress(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    pub fn child(&self, branch: u8) -> VertexAddress {
        let mut path = self.0.clone();
        path.push(branch);
        VertexAddress(path)
    }

    /// Children of this vertex: three for the root, two otherwise.
    pub fn children(&self) -> Vec<VertexAddress> {
        let arity = if self.is_root() { 3 } else { 2 };
        (0..arity).map(|b| self.child(b)).collect()
    }

    /// The three tree-neighbors.
    pub fn neighbors(&self) -> [VertexAddress; 3] {
        match self.parent() {
            None => [self.child(0), self.child(1), self.child(2)],
            Some(p) => [p, self.child(0), self.child(1)],
        }
    }

    pub fn is_neighbor(&self, other: &VertexAddress) -> bool {
        let (a, b) = (&self.0, &other.0);
        (a.len() + 1 == b.len() && b.starts_with(a)) || (b.len() + 1 == a.len() && a.starts_with(b))
    }

    fn common_prefix_len(&self, other: &VertexAddress) -> usize {
        self.0
            .iter()
            .zip(other.0.iter())
            .take_while(|(a, b)| a == b)
            .count()
    }

    /// Tree distance.
    pub fn distance(&self, other: &VertexAddress) -> usize {
        let lcp = self.common_prefix_len(other);
        self.0.len() + other.0.len() - 2 * lcp
    }
}

impl fmt::Display for VertexAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for VertexAddress {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "e" {
            return Ok(VertexAddress::root());
        }
        if s.is_empty() {
            return Err(Error::MalformedAddress(s.to_string()));
        }
        let mut path = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            match (i, c) {
                (_, '0') => path.push(0),
                (_, '1') => path.push(1),
                (0, '2') => path.push(2),
                _ => return Err(Error::MalformedAddress(s.to_string())),
            }
        }
        Ok(VertexAddress(path))
    }
}

/// Parse a vertex address, e.g. `"e"`, `"2"`, `"011"`.
pub fn addr(s: &str) -> Result<VertexAddress> {
    s.parse()
}

/// Finite connected vertex set of the tree.
///
/// Only the vertex set is stored; a connected subgraph of a tree is
/// determined by its vertices, and the edges are the induced tree edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    vertices: BTreeSet<VertexAddress>,
}

impl Component {
    /// Validate that `vertices` is non-empty and connected.
    pub fn new(vertices: impl IntoIterator<Item = VertexAddress>) -> Result<Self> {
        let vertices: BTreeSet<_> = vertices.into_iter().collect();
        if vertices.is_empty() {
            return Err(Error::TooSmall {
                what: "component size",
                min: 1,
                got: 0,
            });
        }
        // a finite vertex set of a tree is connected iff it has exactly
        // |V| - 1 induced edges
        let edges = vertices
            .iter()
            .filter(|v| v.parent().is_some_and(|p| vertices.contains(&p)))
            .count();
        if edges + 1 != vertices.len() {
            return Err(Error::Disconnected);
        }
        Ok(Component { vertices })
    }

    pub fn vertices(&self) -> &BTreeSet<VertexAddress> {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: &VertexAddress) -> bool {
        self.vertices.contains(v)
    }

    pub fn contains_component(&self, other: &Component) -> bool {
        other.vertices.is_subset(&self.vertices)
    }

    /// Induced tree edges as `(parent, child)` pairs.
    pub fn edges(&self) -> Vec<(VertexAddress, VertexAddress)> {
        self.vertices
            .iter()
            .filter_map(|v| {
                let p = v.parent()?;
                self.vertices.contains(&p).then(|| (p, v.clone()))
            })
            .collect()
    }

    /// Number of tree-neighbors of `v` inside the component.
    pub fn degree(&self, v: &VertexAddress) -> usize {
        v.neighbors()
            .iter()
            .filter(|u| self.vertices.contains(*u))
            .count()
    }

    fn require_pair(&self) -> Result<()> {
        if self.vertices.len() < 2 {
            Err(Error::TooSmall {
                what: "component size",
                min: 2,
                got: self.vertices.len(),
            })
        } else {
            Ok(())
        }
    }
}

/// Boundary/interior split of a component with at least two vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentProfile {
    pub boundary: BTreeSet<VertexAddress>,
    pub interior: BTreeSet<VertexAddress>,
    pub is_full: bool,
}

/// Boundary vertices have one neighbor inside `k`, interior ones at least
/// two; `k` is full when every interior vertex has all three.
pub fn classify(k: &Component) -> Result<ComponentProfile> {
    k.require_pair()?;
    let mut boundary = BTreeSet::new();
    let mut interior = BTreeSet::new();
    let mut is_full = true;
    for v in &k.vertices {
        match k.degree(v) {
            1 => {
                boundary.insert(v.clone());
            }
            d => {
                if d < 3 {
                    is_full = false;
                }
                interior.insert(v.clone());
            }
        }
    }
    Ok(ComponentProfile {
        boundary,
        interior,
        is_full,
    })
}

/// Fullness decided by counting: `|boundary| - |interior| == 2`.
pub fn is_full_by_count(k: &Component) -> Result<bool> {
    let p = classify(k)?;
    Ok(p.boundary.len() == p.interior.len() + 2)
}

/// Smallest full component containing `k`: add every tree-neighbor of
/// every interior vertex.
pub fn minimal_full_component(k: &Component) -> Result<Component> {
    let profile = classify(k)?;
    let mut vertices = k.vertices.clone();
    for v in &profile.interior {
        vertices.extend(v.neighbors());
    }
    Ok(Component { vertices })
}

/// Vertices of the unique path from `x` to `y`, in order.
pub fn path_between(x: &VertexAddress, y: &VertexAddress) -> Vec<VertexAddress> {
    let lcp = x.common_prefix_len(y);
    let mut path = Vec::with_capacity(x.distance(y) + 1);
    for len in (lcp..=x.depth()).rev() {
        path.push(VertexAddress(x.0[..len].to_vec()));
    }
    for len in lcp + 1..=y.depth() {
        path.push(VertexAddress(y.0[..len].to_vec()));
    }
    path
}

pub fn shortest_path(x: &VertexAddress, y: &VertexAddress) -> Result<Component> {
    if x == y {
        return Err(Error::InvalidArgument(format!(
            "shortest path needs two distinct vertices, got {x} twice"
        )));
    }
    Ok(Component {
        vertices: path_between(x, y).into_iter().collect(),
    })
}

/// Smallest connected vertex set containing `vertices` (their Steiner
/// tree, which is unique in a tree).
pub fn minimal_component<'a>(
    vertices: impl IntoIterator<Item = &'a VertexAddress>,
) -> Result<Component> {
    let distinct: BTreeSet<&VertexAddress> = vertices.into_iter().collect();
    if distinct.len() < 2 {
        return Err(Error::TooSmall {
            what: "fixed vertex count",
            min: 2,
            got: distinct.len(),
        });
    }
    let mut it = distinct.into_iter();
    let anchor = it.next().unwrap();
    let mut out = BTreeSet::new();
    out.insert(anchor.clone());
    for v in it {
        out.extend(path_between(anchor, v));
    }
    Ok(Component { vertices: out })
}

/// Caterpillar-shaped full component with `m` boundary vertices: the
/// interior is the chain `0, 00, 000, ...` of length `m - 2`, closed under
/// neighbors. For `m = 2` it is the edge `(e, 0)`.
pub fn canonical_full_component(m: usize) -> Result<Component> {
    if m < 2 {
        return Err(Error::TooSmall {
            what: "m",
            min: 2,
            got: m,
        });
    }
    if m == 2 {
        return Component::new(descending_chain(2));
    }
    let mut vertices = BTreeSet::new();
    for v in descending_chain(m - 1).into_iter().skip(1) {
        vertices.extend(v.neighbors());
        vertices.insert(v);
    }
    Ok(Component { vertices })
}

/// The path `e, 0, 00, ...` with `m` vertices.
pub fn canonical_path(m: usize) -> Result<Component> {
    if m < 2 {
        return Err(Error::TooSmall {
            what: "m",
            min: 2,
            got: m,
        });
    }
    Component::new(descending_chain(m))
}

fn descending_chain(len: usize) -> Vec<VertexAddress> {
    (0..len).map(|d| VertexAddress(vec![0; d])).collect()
}

/// All vertices within tree distance `radius` of `center`.
pub fn ball(center: &BTreeSet<VertexAddress>, radius: usize) -> BTreeSet<VertexAddress> {
    let mut seen: BTreeSet<VertexAddress> = center.clone();
    let mut queue: VecDeque<(VertexAddress, usize)> = center.iter().map(|v| (v.clone(), 0)).collect();
    while let Some((v, d)) = queue.pop_front() {
        if d == radius {
            continue;
        }
        for u in v.neighbors() {
            if seen.insert(u.clone()) {
                queue.push_back((u, d + 1));
            }
        }
    }
    seen
}
