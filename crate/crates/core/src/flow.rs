//! Flow-network reduction for the bounded-coverage decision problem.
//!
//! For a set `S`, cap `k` and threshold `t`, the network has one vertex per
//! distinct endpoint plus a source before the first and a sink after the
//! last. Consecutive vertices are joined by backbone arcs (capacity `k` at
//! the two ends, `k - t` in between) and every interval contributes a unit
//! arc from its start vertex to its end vertex. A subset with coverage in
//! `[t, k]` everywhere on the span exists iff the max-flow has value `k`;
//! the intervals whose arcs carry flow form such a subset.

use std::collections::VecDeque;

use crate::coverage::IntervalSet;
use crate::error::{Error, Result};
use crate::solution::{Method, Solution, Work};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vertex {
    Source,
    Coord(u64),
    Sink,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcKind {
    Backbone,
    /// Carries the index of the interval in the input set.
    Interval(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: u64,
    pub kind: ArcKind,
}

/// The network `G(S, k, t)`.
///
/// Vertex 0 is the source, vertices `1..=m` are the sorted distinct
/// endpoints and vertex `m + 1` is the sink. Arcs are stored backbone first
/// (in coordinate order), then interval arcs in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    coords: Vec<u64>,
    arcs: Vec<Arc>,
    backbone_len: usize,
    k: u64,
    t: u64,
}

impl FlowNetwork {
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len() + 2
    }

    pub fn source(&self) -> usize {
        0
    }

    pub fn sink(&self) -> usize {
        self.coords.len() + 1
    }

    pub fn vertex(&self, v: usize) -> Vertex {
        if v == 0 {
            Vertex::Source
        } else if v == self.sink() {
            Vertex::Sink
        } else {
            Vertex::Coord(self.coords[v - 1])
        }
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn backbone_arcs(&self) -> &[Arc] {
        &self.arcs[..self.backbone_len]
    }

    pub fn interval_arcs(&self) -> &[Arc] {
        &self.arcs[self.backbone_len..]
    }

    /// Index of the arc carrying interval `i`.
    pub fn interval_arc_index(&self, i: usize) -> usize {
        self.backbone_len + i
    }
}

/// Builds `G(S, k, t)`. Requires a nonempty set and `t <= k`.
pub fn build_network(set: &IntervalSet, k: u64, t: u64) -> Result<FlowNetwork> {
    if set.is_empty() {
        return Err(Error::InvalidInstance("flow network needs at least one interval".into()));
    }
    if k < 1 {
        return Err(Error::InvalidCap(k));
    }
    if t > k {
        return Err(Error::InvalidInstance(format!("threshold t = {t} exceeds cap k = {k}")));
    }
    let coords = set.delimiters();
    let m = coords.len();
    let sink = m + 1;
    let mut arcs = Vec::with_capacity(m + 1 + set.len());
    for from in 0..=m {
        let capacity = if from == 0 || from == m { k } else { k - t };
        arcs.push(Arc {
            from,
            to: from + 1,
            capacity,
            kind: ArcKind::Backbone,
        });
    }
    debug_assert_eq!(arcs.last().map(|a| a.to), Some(sink));
    let vertex_of = |p: u64| coords.binary_search(&p).expect("endpoint is a delimiter") + 1;
    for (i, iv) in set.iter().enumerate() {
        arcs.push(Arc {
            from: vertex_of(iv.start),
            to: vertex_of(iv.end),
            capacity: 1,
            kind: ArcKind::Interval(i),
        });
    }
    Ok(FlowNetwork {
        coords,
        arcs,
        backbone_len: m + 1,
        k,
        t,
    })
}

/// An integral flow, one value per arc of the network it was built for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowAssignment {
    pub flow: Vec<u64>,
}

impl FlowAssignment {
    pub fn zero(net: &FlowNetwork) -> Self {
        Self {
            flow: vec![0; net.arcs.len()],
        }
    }

    /// Net flow out of the source.
    pub fn value(&self, net: &FlowNetwork) -> u64 {
        debug_assert_eq!(net.arcs[0].from, net.source());
        // the only arc touching the source is the first backbone arc
        self.flow[0]
    }

    /// Checks capacity constraints and conservation at every inner vertex.
    pub fn is_feasible(&self, net: &FlowNetwork) -> bool {
        if self.flow.len() != net.arcs.len() {
            return false;
        }
        let mut balance = vec![0i128; net.vertex_count()];
        for (arc, &f) in net.arcs.iter().zip(&self.flow) {
            if f > arc.capacity {
                return false;
            }
            balance[arc.from] -= f as i128;
            balance[arc.to] += f as i128;
        }
        balance[1..net.sink()].iter().all(|&b| b == 0)
    }
}

/// Flow of `k - t` along every backbone arc and nothing on interval arcs.
pub fn backbone_initial_flow(net: &FlowNetwork) -> FlowAssignment {
    let base = net.k - net.t;
    let flow = net
        .arcs
        .iter()
        .map(|a| match a.kind {
            ArcKind::Backbone => base,
            ArcKind::Interval(_) => 0,
        })
        .collect();
    FlowAssignment { flow }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFlow {
    pub assignment: FlowAssignment,
    pub value: u64,
    pub augmentations: u64,
}

/// Residual adjacency in compressed form: for each vertex, the arcs leaving
/// it forward and the arcs entering it (traversable backward).
struct Residual {
    offsets: Vec<usize>,
    // (arc index, forward?)
    entries: Vec<(usize, bool)>,
}

impl Residual {
    fn new(net: &FlowNetwork) -> Self {
        let n = net.vertex_count();
        let mut degree = vec![0usize; n + 1];
        for a in &net.arcs {
            degree[a.from + 1] += 1;
            degree[a.to + 1] += 1;
        }
        for v in 0..n {
            degree[v + 1] += degree[v];
        }
        let offsets = degree.clone();
        let mut fill = degree;
        let mut entries = vec![(0, false); 2 * net.arcs.len()];
        for (i, a) in net.arcs.iter().enumerate() {
            entries[fill[a.from]] = (i, true);
            fill[a.from] += 1;
            entries[fill[a.to]] = (i, false);
            fill[a.to] += 1;
        }
        Self { offsets, entries }
    }

    fn neighbors(&self, v: usize) -> &[(usize, bool)] {
        &self.entries[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// Augments `init` to a maximum flow using shortest (breadth-first)
/// augmenting paths in the residual network.
///
/// Arcs are scanned in construction order, so the result is deterministic.
pub fn max_flow_augmenting(net: &FlowNetwork, init: FlowAssignment) -> MaxFlow {
    debug_assert!(init.is_feasible(net), "initial flow must be feasible");
    let residual = Residual::new(net);
    let mut flow = init.flow;
    let n = net.vertex_count();
    let (source, sink) = (net.source(), net.sink());
    let mut parent: Vec<Option<(usize, bool)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::with_capacity(n);
    let mut augmentations = 0;

    loop {
        seen.iter_mut().for_each(|s| *s = false);
        queue.clear();
        seen[source] = true;
        queue.push_back(source);
        'bfs: while let Some(u) = queue.pop_front() {
            for &(ai, forward) in residual.neighbors(u) {
                let arc = &net.arcs[ai];
                let (next, room) = if forward {
                    (arc.to, arc.capacity - flow[ai])
                } else {
                    (arc.from, flow[ai])
                };
                if room == 0 || seen[next] {
                    continue;
                }
                seen[next] = true;
                parent[next] = Some((ai, forward));
                if next == sink {
                    break 'bfs;
                }
                queue.push_back(next);
            }
        }
        if !seen[sink] {
            break;
        }

        let mut bottleneck = u64::MAX;
        let mut v = sink;
        while v != source {
            let (ai, forward) = parent[v].expect("path vertex has a parent");
            let arc = &net.arcs[ai];
            if forward {
                bottleneck = bottleneck.min(arc.capacity - flow[ai]);
                v = arc.from;
            } else {
                bottleneck = bottleneck.min(flow[ai]);
                v = arc.to;
            }
        }
        let mut v = sink;
        while v != source {
            let (ai, forward) = parent[v].unwrap();
            let arc = &net.arcs[ai];
            if forward {
                flow[ai] += bottleneck;
                v = arc.from;
            } else {
                flow[ai] -= bottleneck;
                v = arc.to;
            }
        }
        augmentations += 1;
    }

    let assignment = FlowAssignment { flow };
    let value = assignment.value(net);
    MaxFlow {
        assignment,
        value,
        augmentations,
    }
}

/// A solved network, kept around for inspection.
#[derive(Debug, Clone)]
pub struct FlowRun {
    pub network: FlowNetwork,
    pub max_flow: MaxFlow,
}

impl FlowRun {
    pub fn is_feasible(&self) -> bool {
        self.max_flow.value == self.network.k
    }

    /// Indices of intervals whose arc carries one unit of flow.
    pub fn kept(&self) -> Vec<usize> {
        self.network
            .interval_arcs()
            .iter()
            .zip(&self.max_flow.assignment.flow[self.network.backbone_len..])
            .filter_map(|(arc, &f)| match arc.kind {
                ArcKind::Interval(i) if f == 1 => Some(i),
                _ => None,
            })
            .collect()
    }
}

/// Builds `G(S, k, t)` and computes a max-flow, either from zero
/// (`warm_start == false`) or from the backbone flow of value `k - t`.
pub fn run_flow(set: &IntervalSet, k: u64, t: u64, warm_start: bool) -> Result<FlowRun> {
    let network = build_network(set, k, t)?;
    let init = if warm_start {
        backbone_initial_flow(&network)
    } else {
        FlowAssignment::zero(&network)
    };
    let max_flow = max_flow_augmenting(&network, init);
    Ok(FlowRun { network, max_flow })
}

/// Decides whether some subset of `set` has coverage at most `k` everywhere
/// and at least `t` everywhere on the span of `set`, returning one if so.
pub fn decide(set: &IntervalSet, k: u64, t: u64, warm_start: bool) -> Result<Option<Solution>> {
    if k < 1 {
        return Err(Error::InvalidCap(k));
    }
    if set.is_empty() {
        return Err(Error::InvalidInstance("cannot decide on an empty set".into()));
    }
    if t > k {
        return Ok(None);
    }
    let run = run_flow(set, k, t, warm_start)?;
    if !run.is_feasible() {
        return Ok(None);
    }
    let method = if warm_start {
        Method::ExactTailored
    } else {
        Method::ExactGeneric
    };
    let work = Work {
        flow_solves: 1,
        augmentations: run.max_flow.augmentations,
        ..Work::default()
    };
    Ok(Some(Solution::measure(set, run.kept(), method, work)))
}
