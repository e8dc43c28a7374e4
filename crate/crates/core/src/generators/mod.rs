//! Named graph families, (d1,...,dq)-tree builders, and exhaustive small-graph
//! enumeration.

pub mod canon;
pub mod named;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{maximal_cliques, Graph, VertexSet, MAX_VERTICES};
use canon::{canonical_form, canonical_graph, CanonicalKey};

/// How a (d1,...,dq)-tree builder picks its glue cliques.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeMode {
    /// One tree, each glue clique drawn uniformly with a seeded RNG.
    Seeded(u64),
    /// Every tree, deduplicated up to isomorphism.
    Exhaustive,
}

/// A graph family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Two `K_r` joined by a bridge.
    Barbell(usize),
    /// Hub plus a cycle on `n - 1` vertices.
    Wheel(usize),
    /// Hub with the given complete graphs attached (every clique vertex is
    /// joined to the hub).
    StarComplete(Vec<usize>),
    Complete(usize),
    Cycle(usize),
    /// Path on `n` vertices.
    Path(usize),
    /// `K_m` with `r` pendant edges at every vertex.
    Gmr { m: usize, r: usize },
    /// `K_m` with `pendants[j]` pendant edges at vertex `j`; non-decreasing.
    Gmi(Vec<usize>),
    DqTree { sequence: Vec<usize>, mode: TreeMode },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

fn fits(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices { n, max: MAX_VERTICES })
    } else {
        Ok(())
    }
}

pub fn check_sequence(sequence: &[usize]) -> Result<()> {
    if sequence.is_empty() {
        return Err(invalid("a (d1,...,dq) sequence needs at least one entry"));
    }
    if sequence.iter().any(|&d| d == 0) {
        return Err(invalid("sequence entries must be positive"));
    }
    if sequence.windows(2).any(|w| w[0] < w[1]) {
        return Err(invalid("sequence must be non-increasing"));
    }
    fits(sequence[0] + sequence.len() - 1)
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::Barbell(r) => {
                if *r < 2 {
                    return Err(invalid("barbell needs r >= 2"));
                }
                fits(2 * r)
            }
            FamilySpec::Wheel(n) => {
                if *n < 4 {
                    return Err(invalid("wheel needs n >= 4"));
                }
                fits(*n)
            }
            FamilySpec::Cycle(n) => {
                if *n < 3 {
                    return Err(invalid("cycle needs n >= 3"));
                }
                fits(*n)
            }
            FamilySpec::Path(n) | FamilySpec::Complete(n) => fits(*n),
            FamilySpec::StarComplete(sizes) => {
                if sizes.iter().any(|&s| s == 0) {
                    return Err(invalid("attached complete graphs must be nonempty"));
                }
                fits(1 + sizes.iter().sum::<usize>())
            }
            FamilySpec::Gmr { m, r } => {
                if *m < 1 {
                    return Err(invalid("G_{m,r} needs m >= 1"));
                }
                fits(m * (r + 1))
            }
            FamilySpec::Gmi(pendants) => {
                if pendants.is_empty() {
                    return Err(invalid("G_{m,i_1..i_m} needs m >= 1"));
                }
                if pendants.windows(2).any(|w| w[0] > w[1]) {
                    return Err(invalid("pendant counts must be non-decreasing"));
                }
                fits(pendants.len() + pendants.iter().sum::<usize>())
            }
            FamilySpec::DqTree { sequence, .. } => check_sequence(sequence),
        }
    }

    /// Builds the family member; exhaustive tree mode yields every
    /// non-isomorphic tree, all other variants a single graph.
    pub fn build(&self) -> Result<Vec<Graph>> {
        self.validate()?;
        let g = match self {
            FamilySpec::Barbell(r) => named::barbell(*r),
            FamilySpec::Wheel(n) => named::wheel(*n),
            FamilySpec::StarComplete(sizes) => star_complete(sizes),
            FamilySpec::Complete(n) => Graph::complete(*n)?,
            FamilySpec::Cycle(n) => named::cycle(*n),
            FamilySpec::Path(n) => named::path(*n),
            FamilySpec::Gmr { m, r } => with_pendants(&vec![*r; *m]),
            FamilySpec::Gmi(pendants) => with_pendants(pendants),
            FamilySpec::DqTree {
                sequence,
                mode: TreeMode::Seeded(seed),
            } => random_dq_tree(sequence, &mut ChaCha8Rng::seed_from_u64(*seed))?,
            FamilySpec::DqTree {
                sequence,
                mode: TreeMode::Exhaustive,
            } => return all_dq_trees(sequence),
        };
        Ok(vec![g])
    }

    pub fn build_one(&self) -> Result<Graph> {
        Ok(self.build()?.swap_remove(0))
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| invalid(format!("expected an integer, got {t:?}")))
        })
        .collect()
}

fn parse_one(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| invalid(format!("expected an integer, got {s:?}")))
}

/// Textual family specs: `barbell:4`, `wheel:5`, `star-complete:2,3,1`,
/// `complete:4`, `cycle:5`, `path:3`, `gmr:3,2`, `gmi:1,1,2`,
/// `dq-tree:3,3,2:seed=7`, `dq-tree:3,3,2:all`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.splitn(3, ':');
        let name = parts.next().unwrap_or("");
        let args = parts
            .next()
            .ok_or_else(|| invalid(format!("missing parameters in {s:?}")))?;
        let extra = parts.next();
        let spec = match (name, extra) {
            ("barbell", None) => FamilySpec::Barbell(parse_one(args)?),
            ("wheel", None) => FamilySpec::Wheel(parse_one(args)?),
            ("complete", None) => FamilySpec::Complete(parse_one(args)?),
            ("cycle", None) => FamilySpec::Cycle(parse_one(args)?),
            ("path", None) => FamilySpec::Path(parse_one(args)?),
            ("star-complete", None) => FamilySpec::StarComplete(parse_list(args)?),
            ("gmr", None) => match parse_list(args)?.as_slice() {
                &[m, r] => FamilySpec::Gmr { m, r },
                _ => return Err(invalid("gmr takes m,r")),
            },
            ("gmi", None) => FamilySpec::Gmi(parse_list(args)?),
            ("dq-tree", mode) => {
                let mode = match mode.unwrap_or("seed=0") {
                    "all" => TreeMode::Exhaustive,
                    m => match m.strip_prefix("seed=") {
                        Some(seed) => TreeMode::Seeded(
                            seed.parse()
                                .map_err(|_| invalid(format!("bad seed {seed:?}")))?,
                        ),
                        None => return Err(invalid(format!("unknown tree mode {m:?}"))),
                    },
                };
                FamilySpec::DqTree {
                    sequence: parse_list(args)?,
                    mode,
                }
            }
            _ => return Err(invalid(format!("unknown family {s:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            FamilySpec::Barbell(r) => write!(f, "barbell:{r}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::StarComplete(s) => write!(f, "star-complete:{}", list(s)),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Gmr { m, r } => write!(f, "gmr:{m},{r}"),
            FamilySpec::Gmi(p) => write!(f, "gmi:{}", list(p)),
            FamilySpec::DqTree { sequence, mode } => match mode {
                TreeMode::Seeded(seed) => write!(f, "dq-tree:{}:seed={seed}", list(sequence)),
                TreeMode::Exhaustive => write!(f, "dq-tree:{}:all", list(sequence)),
            },
        }
    }
}

/// Hub `x1`; the cliques follow in order on consecutive labels.
fn star_complete(sizes: &[usize]) -> Graph {
    let n = 1 + sizes.iter().sum::<usize>();
    let mut g = Graph::new(n).unwrap();
    let mut next = 1;
    for &s in sizes {
        let block: Vec<usize> = (next..next + s).collect();
        for (i, &u) in block.iter().enumerate() {
            g.add_edge(0, u).unwrap();
            for &v in &block[i + 1..] {
                g.add_edge(u, v).unwrap();
            }
        }
        next += s;
    }
    g
}

/// `K_m` on `x1..xm`; the pendants of `xj` come after all pendants of
/// `x1..x(j-1)`.
fn with_pendants(pendants: &[usize]) -> Graph {
    let m = pendants.len();
    let n = m + pendants.iter().sum::<usize>();
    let mut g = Graph::new(n).unwrap();
    for u in 0..m {
        for v in u + 1..m {
            g.add_edge(u, v).unwrap();
        }
    }
    let mut next = m;
    for (j, &count) in pendants.iter().enumerate() {
        for _ in 0..count {
            g.add_edge(j, next).unwrap();
            next += 1;
        }
    }
    g
}

/// Partial (d1,...,dq)-tree: the graph and its facets (maximal cliques) in
/// build order.
#[derive(Clone)]
struct TreeState {
    graph: Graph,
    facets: Vec<VertexSet>,
}

impl TreeState {
    fn start(d1: usize, n: usize) -> TreeState {
        let mut graph = Graph::new(n).unwrap();
        for u in 0..d1 {
            for v in u + 1..d1 {
                graph.add_edge(u, v).unwrap();
            }
        }
        TreeState {
            graph,
            facets: vec![VertexSet::full(d1)],
        }
    }

    fn next_vertex(&self) -> usize {
        self.facets.iter().fold(VertexSet::EMPTY, |a, &f| a | f).len()
    }

    /// Every clique of size `k` (each lies inside some facet), sorted.
    fn glue_choices(&self, k: usize) -> Vec<VertexSet> {
        let mut out = BTreeSet::new();
        for &f in &self.facets {
            for s in subsets_of_size(f, k) {
                out.insert(s.bits());
            }
        }
        out.into_iter().map(VertexSet::from_bits).collect()
    }

    fn glue(&self, clique: VertexSet) -> TreeState {
        let x = self.next_vertex();
        let mut next = self.clone();
        for v in clique {
            next.graph.add_edge(x, v).unwrap();
        }
        next.facets.push(clique.with(x));
        next
    }
}

/// All `k`-subsets of `s`.
pub(crate) fn subsets_of_size(s: VertexSet, k: usize) -> Vec<VertexSet> {
    let members = s.to_vec();
    let mut out = Vec::new();
    fn rec(members: &[usize], k: usize, start: usize, acc: VertexSet, out: &mut Vec<VertexSet>) {
        if acc.len() == k {
            out.push(acc);
            return;
        }
        for i in start..members.len() {
            if members.len() - i < k - acc.len() {
                break;
            }
            rec(members, k, i + 1, acc.with(members[i]), out);
        }
    }
    if k <= members.len() {
        rec(&members, k, 0, VertexSet::EMPTY, &mut out);
    }
    out
}

/// A (d1,...,dq)-tree with glue cliques drawn uniformly by `rng`.
pub fn random_dq_tree<R: Rng>(sequence: &[usize], rng: &mut R) -> Result<Graph> {
    check_sequence(sequence)?;
    let n = sequence[0] + sequence.len() - 1;
    let mut state = TreeState::start(sequence[0], n);
    for &d in &sequence[1..] {
        let choices = state.glue_choices(d - 1);
        let clique = *choices.choose(rng).expect("a clique of size d-1 exists");
        state = state.glue(clique);
    }
    Ok(state.graph)
}

/// Every (d1,...,dq)-tree up to isomorphism, as canonical graphs sorted by
/// canonical key.
pub fn all_dq_trees(sequence: &[usize]) -> Result<Vec<Graph>> {
    check_sequence(sequence)?;
    let n = sequence[0] + sequence.len() - 1;
    let mut states = vec![TreeState::start(sequence[0], n)];
    for &d in &sequence[1..] {
        let mut seen: HashMap<CanonicalKey, TreeState> = HashMap::new();
        for state in &states {
            for clique in state.glue_choices(d - 1) {
                let next = state.glue(clique);
                let (key, _) = canonical_form(&next.graph);
                seen.entry(key).or_insert(next);
            }
        }
        let mut keyed: Vec<_> = seen.into_iter().collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        states = keyed.into_iter().map(|(_, s)| s).collect();
    }
    let mut out: Vec<(CanonicalKey, Graph)> = states
        .into_iter()
        .map(|s| (canonical_form(&s.graph).0, canonical_graph(&s.graph)))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

/// A random non-increasing positive sequence whose trees have at most
/// `max_n` vertices.
pub fn random_sequence<R: Rng>(rng: &mut R, max_n: usize) -> Vec<usize> {
    assert!(max_n >= 1);
    let n = rng.gen_range(1..=max_n);
    let d1 = rng.gen_range(1..=n);
    let q = n - d1 + 1;
    let mut seq = vec![d1];
    for _ in 1..q {
        let prev = *seq.last().unwrap();
        seq.push(rng.gen_range(1..=prev));
    }
    seq
}

pub const MAX_ENUMERATION_VERTICES: usize = 8;
pub const MAX_CHORDAL_ENUMERATION_VERTICES: usize = 10;

fn dedup_canonical(candidates: Vec<Graph>) -> Vec<Graph> {
    let mut keyed: Vec<(CanonicalKey, Graph)> = candidates
        .into_par_iter()
        .map(|g| {
            let (key, perm) = canonical_form(&g);
            (key, g.permuted(&perm).with_default_labels())
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, g)| g).collect()
}

fn extend(g: &Graph, neighbors: VertexSet) -> Graph {
    let n = g.vertex_count();
    let mut h = Graph::new(n + 1).unwrap();
    for (u, v) in g.edges() {
        h.add_edge(u, v).unwrap();
    }
    for v in neighbors {
        h.add_edge(v, n).unwrap();
    }
    h
}

/// All graphs on `n` vertices up to isomorphism (canonical representatives,
/// sorted by canonical key), built by adding one vertex at a time.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::VertexCapExceeded {
            what: "graph enumeration",
            n,
            cap: MAX_ENUMERATION_VERTICES,
        });
    }
    let mut level = vec![Graph::new(0)?];
    for k in 0..n {
        let candidates: Vec<Graph> = level
            .iter()
            .flat_map(|g| (0u64..1 << k).map(move |bits| extend(g, VertexSet::from_bits(bits))))
            .collect();
        level = dedup_canonical(candidates);
    }
    Ok(level)
}

/// Whether enumeration returns labelled graphs or one per isomorphism class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dedup {
    Labeled,
    UpToIsomorphism,
}

/// Connected graphs on `n <= 8` vertices.
pub fn enumerate_connected_graphs(
    n: usize,
    dedup: Dedup,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::VertexCapExceeded {
            what: "graph enumeration",
            n,
            cap: MAX_ENUMERATION_VERTICES,
        });
    }
    match dedup {
        Dedup::UpToIsomorphism => Ok(Box::new(
            enumerate_graphs(n)?.into_iter().filter(|g| g.is_connected()),
        )),
        Dedup::Labeled => {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let total = 1u64 << pairs.len();
            Ok(Box::new((0..total).filter_map(move |mask| {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                g.is_connected().then_some(g)
            })))
        }
    }
}

/// All chordal graphs on `n <= 10` vertices up to isomorphism, built by
/// repeatedly adding a simplicial vertex adjacent to some clique.
pub fn enumerate_chordal_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CHORDAL_ENUMERATION_VERTICES {
        return Err(Error::VertexCapExceeded {
            what: "chordal graph enumeration",
            n,
            cap: MAX_CHORDAL_ENUMERATION_VERTICES,
        });
    }
    let mut level = vec![Graph::new(0)?];
    for _ in 0..n {
        let candidates: Vec<Graph> = level
            .iter()
            .flat_map(|g| {
                let mut cliques = BTreeSet::new();
                for f in maximal_cliques(g) {
                    for k in 0..=f.len() {
                        for s in subsets_of_size(f, k) {
                            cliques.insert(s.bits());
                        }
                    }
                }
                cliques
                    .into_iter()
                    .map(|bits| extend(g, VertexSet::from_bits(bits)))
                    .collect::<Vec<_>>()
            })
            .collect();
        level = dedup_canonical(candidates);
    }
    Ok(level)
}

/// Shuffles a vertex order; used by property tests that relabel inputs.
pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

#[cfg(test)]
mod tests {
    use super::*;
    use canon::is_isomorphic;

    #[test]
    fn connected_counts_match_known_values() {
        // 1, 1, 2, 6, 21, 112 connected graphs on 1..6 vertices
        let expected = [1, 1, 2, 6, 21, 112];
        for n in 1..=6 {
            let count = enumerate_connected_graphs(n, Dedup::UpToIsomorphism)
                .unwrap()
                .count();
            assert_eq!(count, expected[n - 1], "n = {n}");
        }
    }

    #[test]
    fn labeled_enumeration_n4() {
        // 38 connected labelled graphs on 4 vertices
        assert_eq!(
            enumerate_connected_graphs(4, Dedup::Labeled).unwrap().count(),
            38
        );
    }

    #[test]
    fn enumeration_cap() {
        assert!(enumerate_connected_graphs(9, Dedup::UpToIsomorphism).is_err());
    }

    #[test]
    fn chordal_counts() {
        // chordal graphs on 1..6 vertices: 1, 2, 4, 10, 27, 94
        let expected = [1, 2, 4, 10, 27, 94];
        for n in 1..=6 {
            let gs = enumerate_chordal_graphs(n).unwrap();
            assert!(gs.iter().all(|g| g.is_chordal()));
            assert_eq!(gs.len(), expected[n - 1], "n = {n}");
        }
    }

    #[test]
    fn chordal_enumeration_matches_filter() {
        let filtered = enumerate_graphs(6)
            .unwrap()
            .into_iter()
            .filter(|g| g.is_chordal())
            .count();
        assert_eq!(enumerate_chordal_graphs(6).unwrap().len(), filtered);
    }

    #[test]
    fn exhaustive_332_trees() {
        let trees = all_dq_trees(&[3, 3, 2]).unwrap();
        assert_eq!(trees.len(), 2);
        let [a, b] = named::fig5();
        assert!(trees.iter().any(|t| is_isomorphic(t, &a)));
        assert!(trees.iter().any(|t| is_isomorphic(t, &b)));
    }

    #[test]
    fn family_parsing_round_trips() {
        for s in [
            "barbell:4",
            "wheel:5",
            "star-complete:2,3,1",
            "complete:4",
            "cycle:5",
            "path:3",
            "gmr:3,2",
            "gmi:1,1,2",
            "dq-tree:3,3,2:seed=7",
            "dq-tree:3,3,2:all",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("wheel:3".parse::<FamilySpec>().is_err());
        assert!("dq-tree:2,3".parse::<FamilySpec>().is_err());
        assert!("gmi:2,1".parse::<FamilySpec>().is_err());
        assert!("barbell:1".parse::<FamilySpec>().is_err());
        assert!("bogus:1".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn family_sizes() {
        let g = FamilySpec::Gmr { m: 3, r: 2 }.build_one().unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.max_degree().0, 4);
        let g = FamilySpec::StarComplete(vec![2, 3, 1]).build_one().unwrap();
        assert!(canon::is_isomorphic(&g, &named::fig10()));
        let w = FamilySpec::Wheel(5).build_one().unwrap();
        assert_eq!(w.degree(0).unwrap(), 4);
    }

    #[test]
    fn seeded_trees_are_reproducible() {
        let spec = FamilySpec::DqTree {
            sequence: vec![4, 3, 3, 2, 1],
            mode: TreeMode::Seeded(11),
        };
        assert_eq!(spec.build_one().unwrap(), spec.build_one().unwrap());
        assert_eq!(spec.build_one().unwrap().vertex_count(), 8);
    }

    #[test]
    fn random_sequences_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let s = random_sequence(&mut rng, 12);
            check_sequence(&s).unwrap();
            assert!(s[0] + s.len() - 1 <= 12);
        }
    }
}
