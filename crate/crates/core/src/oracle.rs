//! Brute-force ground truth for the counting formulas.
//!
//! Counts `n`-vertex connected vertex sets of the tree that contain a given
//! fixed set, without any Catalan machinery. The fixed set is first closed
//! to its minimal connected component. From there the enumeration walks a
//! binary decision tree over free edges (edges leaving the current set),
//! taken in lexicographic order of their outer endpoint: either the first
//! undecided edge is excluded for good, or its outer endpoint joins the set
//! and contributes its own free edges. Every connected superset corresponds
//! to exactly one root-to-leaf decision path, so no deduplication is
//! needed.

use std::collections::{BTreeSet, HashSet};
use std::env;

use num_bigint::BigInt;

use crate::cayley_tree::{ball, canonical_full_component, canonical_path, classify, minimal_component, Component, VertexAddress};
use crate::error::{Error, Result};
use crate::full_count::{full_count_closed, full_count_series, full_min_n};
use crate::path_count::{path_count_closed, path_count_series};

/// Default largest `n` the oracle accepts.
pub const DEFAULT_ORACLE_CAP: usize = 14;

/// Environment variable overriding [`DEFAULT_ORACLE_CAP`].
pub const ORACLE_CAP_ENV: &str = "CAYLEY_ORACLE_CAP";

/// Number of decision levels split across rayon tasks.
const PARALLEL_DEPTH: usize = 6;

/// Host graph the components live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Host {
    /// The whole order-2 Cayley tree.
    #[default]
    Full,
    /// The semi-infinite tree below the root using only branches `0` and
    /// `1` (every vertex has two children).
    RootedBinary,
}

impl Host {
    fn allows(self, v: &VertexAddress) -> bool {
        match self {
            Host::Full => true,
            Host::RootedBinary => v.branches().first() != Some(&2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub cap: usize,
    pub parallel: bool,
    pub host: Host,
    /// Extra radius added to the truncated ball beyond the strict minimum.
    pub extra_radius: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap: DEFAULT_ORACLE_CAP,
            parallel: true,
            host: Host::Full,
            extra_radius: 0,
        }
    }
}

impl OracleConfig {
    /// Default config with the cap taken from `CAYLEY_ORACLE_CAP` if set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = OracleConfig::default();
        if let Ok(raw) = env::var(ORACLE_CAP_ENV) {
            cfg.cap = raw.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("{ORACLE_CAP_ENV}={raw:?} is not a non-negative integer"))
            })?;
        }
        Ok(cfg)
    }

    pub fn with_host(mut self, host: Host) -> Self {
        self.host = host;
        self
    }

    pub fn serial(mut self) -> Self {
        self.parallel = false;
        self
    }
}

/// The set a count is taken relative to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fixed {
    Vertices(BTreeSet<VertexAddress>),
    Component(Component),
}

impl From<Component> for Fixed {
    fn from(k: Component) -> Self {
        Fixed::Component(k)
    }
}

impl From<BTreeSet<VertexAddress>> for Fixed {
    fn from(v: BTreeSet<VertexAddress>) -> Self {
        Fixed::Vertices(v)
    }
}

impl Fixed {
    /// Minimal connected vertex set containing the fixed vertices.
    pub fn core(&self) -> Result<BTreeSet<VertexAddress>> {
        match self {
            Fixed::Component(k) => Ok(k.vertices().clone()),
            Fixed::Vertices(v) if v.len() == 1 => Ok(v.clone()),
            Fixed::Vertices(v) if v.is_empty() => Err(Error::TooSmall {
                what: "fixed vertex count",
                min: 1,
                got: 0,
            }),
            Fixed::Vertices(v) => Ok(minimal_component(v)?.vertices().clone()),
        }
    }
}

/// Vertices within distance `radius` of a center set, restricted to a host.
#[derive(Debug, Clone)]
pub struct TruncatedBall {
    pub center: BTreeSet<VertexAddress>,
    pub radius: usize,
    pub vertices: HashSet<VertexAddress>,
}

impl TruncatedBall {
    pub fn new(center: BTreeSet<VertexAddress>, radius: usize, host: Host) -> Self {
        let vertices = ball(&center, radius)
            .into_iter()
            .filter(|v| host.allows(v))
            .collect();
        TruncatedBall {
            center,
            radius,
            vertices,
        }
    }

    pub fn contains(&self, v: &VertexAddress) -> bool {
        self.vertices.contains(v)
    }
}

/// A free edge, identified by its endpoint outside the set and the set
/// vertex it hangs from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct FreeEdge {
    outer: VertexAddress,
    inner: VertexAddress,
}

struct Search<'a> {
    region: &'a TruncatedBall,
    target: usize,
}

impl Search<'_> {
    fn initial_frontier(&self, core: &BTreeSet<VertexAddress>) -> Vec<FreeEdge> {
        let mut out = Vec::new();
        for v in core {
            for u in v.neighbors() {
                if !core.contains(&u) && self.region.contains(&u) {
                    out.push(FreeEdge { outer: u, inner: v.clone() });
                }
            }
        }
        out.sort();
        out
    }

    /// Frontier after taking the first free edge's outer endpoint.
    fn include(&self, frontier: &[FreeEdge]) -> Vec<FreeEdge> {
        let FreeEdge { outer, inner } = &frontier[0];
        let mut next: Vec<FreeEdge> = frontier[1..].to_vec();
        for u in outer.neighbors() {
            if &u != inner && self.region.contains(&u) {
                next.push(FreeEdge { outer: u, inner: outer.clone() });
            }
        }
        next.sort();
        next
    }

    fn count(&self, size: usize, frontier: Vec<FreeEdge>, depth: usize, parallel: bool) -> u64 {
        if size == self.target {
            return 1;
        }
        if frontier.is_empty() {
            return 0;
        }
        let included = self.include(&frontier);
        let mut excluded = frontier;
        excluded.remove(0);
        if parallel && depth < PARALLEL_DEPTH {
            let (a, b) = rayon::join(
                || self.count(size, excluded, depth + 1, parallel),
                || self.count(size + 1, included, depth + 1, parallel),
            );
            a + b
        } else {
            self.count(size, excluded, depth + 1, parallel)
                + self.count(size + 1, included, depth + 1, parallel)
        }
    }

    fn collect(&self, members: &mut Vec<VertexAddress>, frontier: Vec<FreeEdge>, out: &mut Vec<BTreeSet<VertexAddress>>) {
        if members.len() == self.target {
            out.push(members.iter().cloned().collect());
            return;
        }
        if frontier.is_empty() {
            return;
        }
        let included = self.include(&frontier);
        members.push(frontier[0].outer.clone());
        self.collect(members, included, out);
        members.pop();
        let mut excluded = frontier;
        excluded.remove(0);
        self.collect(members, excluded, out);
    }
}

fn prepare(fixed: &Fixed, n: usize, config: &OracleConfig) -> Result<Option<TruncatedBall>> {
    if n > config.cap {
        return Err(Error::ResourceCap {
            what: "oracle n",
            got: n,
            cap: config.cap,
        });
    }
    let core = fixed.core()?;
    if let Some(v) = core.iter().find(|v| !config.host.allows(v)) {
        return Err(Error::InvalidArgument(format!("fixed vertex {v} is outside the host tree")));
    }
    if n < core.len() {
        return Ok(None);
    }
    let radius = n - core.len() + config.extra_radius;
    Ok(Some(TruncatedBall::new(core, radius, config.host)))
}

/// Number of connected `n`-vertex sets containing `fixed`.
///
/// Returns zero when `n` is below the size of the minimal component and
/// rejects `n` above the configured cap.
pub fn count_components_oracle(fixed: &Fixed, n: usize, config: &OracleConfig) -> Result<BigInt> {
    let Some(region) = prepare(fixed, n, config)? else {
        return Ok(BigInt::from(0));
    };
    let search = Search { region: &region, target: n };
    let frontier = search.initial_frontier(&region.center);
    Ok(BigInt::from(search.count(region.center.len(), frontier, 0, config.parallel)))
}

/// Every connected `n`-vertex set containing `fixed`, one entry per
/// decision-tree leaf. Intended for small instances.
pub fn enumerate_components_oracle(
    fixed: &Fixed,
    n: usize,
    config: &OracleConfig,
) -> Result<Vec<BTreeSet<VertexAddress>>> {
    let Some(region) = prepare(fixed, n, config)? else {
        return Ok(Vec::new());
    };
    let search = Search { region: &region, target: n };
    let frontier = search.initial_frontier(&region.center);
    let mut members: Vec<VertexAddress> = region.center.iter().cloned().collect();
    let mut out = Vec::new();
    search.collect(&mut members, frontier, &mut out);
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Full,
    Path,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Full => "full",
            Family::Path => "path",
        }
    }

    /// Smallest `n` with a nonzero count.
    pub fn min_n(self, m: usize) -> usize {
        match self {
            Family::Full => full_min_n(m),
            Family::Path => m,
        }
    }

    /// Vertex set the family fixes for a given `m`: the boundary of the
    /// caterpillar full component, or the two endpoints of the canonical
    /// path.
    pub fn fixed_vertices(self, m: usize) -> Result<BTreeSet<VertexAddress>> {
        let k = match self {
            Family::Full => canonical_full_component(m)?,
            Family::Path => canonical_path(m)?,
        };
        Ok(classify(&k)?.boundary)
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Family::Full),
            "path" => Ok(Family::Path),
            other => Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridPoint {
    pub n: usize,
    pub m: usize,
    pub oracle: BigInt,
    pub convolution: BigInt,
    pub closed: BigInt,
}

impl GridPoint {
    pub fn matched(&self) -> bool {
        self.oracle == self.convolution && self.convolution == self.closed
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub family: Family,
    pub points: Vec<GridPoint>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.points.iter().all(GridPoint::matched)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &GridPoint> {
        self.points.iter().filter(|p| !p.matched())
    }
}

/// Oracle against both formula routes on `2 <= m <= max_m`, valid
/// `n <= max_n`.
pub fn verify_family(family: Family, max_n: usize, max_m: usize, config: &OracleConfig) -> Result<VerifyReport> {
    if max_n > config.cap {
        return Err(Error::ResourceCap {
            what: "oracle n",
            got: max_n,
            cap: config.cap,
        });
    }
    let mut points = Vec::new();
    for m in 2..=max_m {
        let min_n = family.min_n(m);
        if min_n > max_n {
            continue;
        }
        let fixed = Fixed::Vertices(family.fixed_vertices(m)?);
        let series: Vec<BigInt> = match family {
            Family::Full => full_count_series(m, max_n)?,
            Family::Path => path_count_series(m, max_n)?,
        };
        for (n, convolution) in series.into_iter().enumerate().skip(min_n) {
            let closed = match family {
                Family::Full => full_count_closed(n, m)?,
                Family::Path => path_count_closed(n, m)?,
            };
            let oracle = count_components_oracle(&fixed, n, config)?;
            points.push(GridPoint { n, m, oracle, convolution, closed });
        }
    }
    Ok(VerifyReport { family, points })
}

/// Full component with `m` boundary vertices whose interior is not a path:
/// the root and its three neighbors, extended by a chain under `0`.
pub fn branched_full_component(m: usize) -> Result<Component> {
    if m < 6 {
        return Err(Error::TooSmall { what: "m", min: 6, got: m });
    }
    let mut interior: Vec<VertexAddress> = vec![VertexAddress::root()];
    interior.extend(VertexAddress::root().children());
    let mut tip = VertexAddress::root().child(0);
    for _ in 4..m - 2 {
        tip = tip.child(0);
        interior.push(tip.clone());
    }
    let mut vertices: BTreeSet<VertexAddress> = BTreeSet::new();
    for v in interior {
        vertices.extend(v.neighbors());
        vertices.insert(v);
    }
    Component::new(vertices)
}

/// Whether the caterpillar and the branched full component with `m`
/// boundary vertices admit the same number of `n`-vertex supersets.
pub fn shape_independence_check(m: usize, n: usize, config: &OracleConfig) -> Result<bool> {
    let branched = branched_full_component(m)?;
    let caterpillar = canonical_full_component(m)?;
    let a = count_components_oracle(&Fixed::Component(caterpillar), n, config)?;
    let b = count_components_oracle(&Fixed::Component(branched), n, config)?;
    Ok(a == b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_tree::addr;
    use crate::catalan::catalan;

    fn set(items: &[&str]) -> BTreeSet<VertexAddress> {
        items.iter().map(|s| addr(s).unwrap()).collect()
    }

    fn serial() -> OracleConfig {
        OracleConfig::default().serial()
    }

    #[test]
    fn rooted_binary_gives_catalan() {
        let cfg = serial().with_host(Host::RootedBinary);
        let root = Fixed::Vertices(set(&["e"]));
        assert_eq!(count_components_oracle(&root, 3, &cfg).unwrap(), BigInt::from(5));
        for n in 1..=9 {
            assert_eq!(count_components_oracle(&root, n, &cfg).unwrap(), catalan::<BigInt>(n));
        }
    }

    #[test]
    fn examples() {
        let cfg = serial();
        let edge = Fixed::Component(canonical_full_component(2).unwrap());
        assert_eq!(count_components_oracle(&edge, 4, &cfg).unwrap(), BigInt::from(14));

        let ends = Fixed::Vertices(Family::Path.fixed_vertices(3).unwrap());
        assert_eq!(ends, Fixed::Vertices(set(&["e", "00"])));
        assert_eq!(count_components_oracle(&ends, 5, &cfg).unwrap(), BigInt::from(20));

        let boundary = Fixed::Vertices(Family::Full.fixed_vertices(3).unwrap());
        assert_eq!(count_components_oracle(&boundary, 5, &cfg).unwrap(), BigInt::from(6));
    }

    #[test]
    fn vertex_set_and_component_inputs_agree() {
        let cfg = serial();
        let k = canonical_full_component(4).unwrap();
        let boundary = classify(&k).unwrap().boundary;
        for n in 6..=10 {
            assert_eq!(
                count_components_oracle(&Fixed::Component(k.clone()), n, &cfg).unwrap(),
                count_components_oracle(&Fixed::Vertices(boundary.clone()), n, &cfg).unwrap()
            );
        }
    }

    #[test]
    fn below_minimum_is_zero_and_cap_is_enforced() {
        let cfg = serial();
        let ends = Fixed::Vertices(set(&["e", "000"]));
        assert_eq!(count_components_oracle(&ends, 3, &cfg).unwrap(), BigInt::from(0));
        assert_eq!(count_components_oracle(&ends, 4, &cfg).unwrap(), BigInt::from(1));
        assert!(matches!(
            count_components_oracle(&ends, 15, &cfg),
            Err(Error::ResourceCap { .. })
        ));
        let wide = OracleConfig { cap: 20, ..cfg };
        assert!(count_components_oracle(&ends, 5, &wide).is_ok());
        assert!(count_components_oracle(&Fixed::Vertices(BTreeSet::new()), 3, &cfg).is_err());
        let outside = OracleConfig::default().with_host(Host::RootedBinary);
        assert!(count_components_oracle(&Fixed::Vertices(set(&["2"])), 3, &outside).is_err());
    }

    #[test]
    fn enumeration_is_unique_and_valid() {
        let cfg = serial();
        let cases = [
            (Fixed::Vertices(set(&["e", "00"])), 7),
            (Fixed::Vertices(set(&["01", "1", "000"])), 8),
            (Fixed::Component(canonical_full_component(3).unwrap()), 8),
        ];
        for (fixed, n) in cases {
            let sets = enumerate_components_oracle(&fixed, n, &cfg).unwrap();
            let distinct: HashSet<_> = sets.iter().cloned().collect();
            assert_eq!(distinct.len(), sets.len());
            assert_eq!(BigInt::from(sets.len()), count_components_oracle(&fixed, n, &cfg).unwrap());
            let core = fixed.core().unwrap();
            for s in &sets {
                assert_eq!(s.len(), n);
                assert!(core.is_subset(s));
                assert!(Component::new(s.iter().cloned()).is_ok());
            }
        }
    }

    #[test]
    fn truncation_radius_is_sufficient() {
        let base = serial();
        let padded = OracleConfig { extra_radius: 2, ..base };
        for m in 2..=4 {
            let fixed = Fixed::Vertices(Family::Path.fixed_vertices(m).unwrap());
            for n in m..=9 {
                assert_eq!(
                    count_components_oracle(&fixed, n, &base).unwrap(),
                    count_components_oracle(&fixed, n, &padded).unwrap()
                );
            }
        }
    }

    #[test]
    fn parallel_matches_serial() {
        let fixed = Fixed::Vertices(Family::Full.fixed_vertices(2).unwrap());
        let par = OracleConfig::default();
        assert_eq!(
            count_components_oracle(&fixed, 11, &par).unwrap(),
            count_components_oracle(&fixed, 11, &serial()).unwrap()
        );
    }

    #[test]
    fn verify_small_grids() {
        let cfg = OracleConfig::default();
        let r = verify_family(Family::Full, 10, 4, &cfg).unwrap();
        assert!(r.passed());
        assert_eq!(r.mismatches().count(), 0);
        let p = r.points.iter().find(|p| p.n == 6 && p.m == 2).unwrap();
        assert_eq!(p.oracle, BigInt::from(165));
        assert_eq!(p.convolution, BigInt::from(165));

        assert!(verify_family(Family::Path, 10, 5, &cfg).unwrap().passed());
        assert!(verify_family(Family::Path, 15, 2, &cfg).is_err());
    }

    #[test]
    fn branched_shape() {
        for m in 6..=9 {
            let k = branched_full_component(m).unwrap();
            let p = classify(&k).unwrap();
            assert!(p.is_full);
            assert_eq!((p.boundary.len(), p.interior.len()), (m, m - 2));
            // some interior vertex has three interior neighbors
            assert!(p
                .interior
                .iter()
                .any(|v| v.neighbors().iter().all(|u| p.interior.contains(u))));
        }
        assert!(branched_full_component(5).is_err());
    }

    #[test]
    fn shape_independence_small() {
        let cfg = OracleConfig::default();
        assert!(shape_independence_check(6, 10, &cfg).unwrap());
        assert!(shape_independence_check(6, 11, &cfg).unwrap());
        assert!(shape_independence_check(5, 10, &cfg).is_err());
    }

    #[test]
    fn family_parsing() {
        assert_eq!("full".parse::<Family>().unwrap(), Family::Full);
        assert_eq!("path".parse::<Family>().unwrap(), Family::Path);
        assert!("tree".parse::<Family>().is_err());
        assert_eq!(Family::Path.name(), "path");
    }
}
