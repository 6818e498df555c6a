"""Multi-edge DAG model: sources, sink, cuts, and the enumerations behind the bounds.

Edge ids are strings; the edge list order of the network file is the
canonical order everywhere (it also fixes the source ordering that
indexes coefficient-matrix rows).  All classifications are cached per
edge subset, so repeated queries during bound searches stay cheap.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidEdge, NotACut


@dataclass(frozen=True)
class SourceClassification:
    """Sources sorted by how an edge set sits between them and the sink.

    D: sources with some path to the sink through the set.
    I: sources disconnected from the sink once the set is removed.
    J: D minus I.
    """

    D: frozenset
    I: frozenset
    J: frozenset


@dataclass(frozen=True)
class WiretapModel:
    """Adversary observing any one edge subset of size at most r."""

    r: int


class Network:
    """Directed acyclic multigraph with ordered sources and a single sink."""

    def __init__(self, nodes, edges, sources, sink):
        self.nodes = tuple(nodes)
        self.edges = tuple((str(e), t, h) for e, t, h in edges)
        self.sources = tuple(sources)
        self.sink = sink
        self.edge_ids = tuple(e for e, _, _ in self.edges)
        self.edge_index = {e: i for i, (e, _, _) in enumerate(self.edges)}
        if len(self.edge_index) != len(self.edges):
            raise InvalidEdge("duplicate edge ids")
        self.tail = {e: t for e, t, _ in self.edges}
        self.head = {e: _h for e, _, _h in self.edges}
        self.out_edges = {v: [] for v in self.nodes}
        self.in_edges = {v: [] for v in self.nodes}
        for e, t, h in self.edges:
            if t not in self.out_edges or h not in self.in_edges:
                raise InvalidEdge(f"edge {e} references unknown node")
            self.out_edges[t].append(e)
            self.in_edges[h].append(e)
        self._classify_cache = {}
        self._reach_cache = None

    @property
    def s(self):
        return len(self.sources)

    def sorted_edges(self, edge_set):
        """Edges of the subset in canonical (file) order."""
        return sorted(edge_set, key=self.edge_index.__getitem__)

    def check_edges(self, edge_set):
        for e in edge_set:
            if e not in self.edge_index:
                raise InvalidEdge(f"unknown edge {e}")

    # -- reachability --------------------------------------------------------

    def _forward_reach(self):
        """For each node, the set of sources that can reach it; plus sink reachability."""
        if self._reach_cache is not None:
            return self._reach_cache
        order = self.topological_order()
        sources_reaching = {v: set() for v in self.nodes}
        for sigma in self.sources:
            sources_reaching[sigma].add(sigma)
        for v in order:
            for e in self.out_edges[v]:
                sources_reaching[self.head[e]] |= sources_reaching[v]
        reaches_sink = {v: False for v in self.nodes}
        reaches_sink[self.sink] = True
        for v in reversed(order):
            for e in self.out_edges[v]:
                if reaches_sink[self.head[e]]:
                    reaches_sink[v] = True
        self._reach_cache = (
            {v: frozenset(s) for v, s in sources_reaching.items()},
            reaches_sink,
        )
        return self._reach_cache

    def topological_order(self):
        indeg = {v: 0 for v in self.nodes}
        for e, t, h in self.edges:
            indeg[h] += 1
        stack = [v for v in self.nodes if indeg[v] == 0]
        order = []
        while stack:
            v = stack.pop()
            order.append(v)
            for e in self.out_edges[v]:
                h = self.head[e]
                indeg[h] -= 1
                if indeg[h] == 0:
                    stack.append(h)
        return order

    def nodes_reaching_sink(self, removed_edges):
        """Nodes with a directed path to the sink avoiding the removed edges."""
        reach = {self.sink}
        stack = [self.sink]
        while stack:
            v = stack.pop()
            for e in self.in_edges[v]:
                if e in removed_edges:
                    continue
                t = self.tail[e]
                if t not in reach:
                    reach.add(t)
                    stack.append(t)
        return reach

    def reachable_from(self, start_nodes, removed_edges=frozenset()):
        reach = set(start_nodes)
        stack = list(start_nodes)
        while stack:
            v = stack.pop()
            for e in self.out_edges[v]:
                if e in removed_edges:
                    continue
                h = self.head[e]
                if h not in reach:
                    reach.add(h)
                    stack.append(h)
        return reach

    def classify(self, edge_set):
        key = frozenset(edge_set)
        hit = self._classify_cache.get(key)
        if hit is not None:
            return hit
        self.check_edges(key)
        sources_reaching, reaches_sink = self._forward_reach()
        d = set()
        for e in key:
            if reaches_sink[self.head[e]]:
                d |= sources_reaching[self.tail[e]]
        still_connected = self.nodes_reaching_sink(key)
        i = frozenset(s for s in self.sources if s not in still_connected)
        result = SourceClassification(D=frozenset(d), I=i, J=frozenset(d) - i)
        self._classify_cache[key] = result
        return result


def validate_network(net):
    """All violated structural invariants, as human-readable strings."""
    violations = []
    if len(net.topological_order()) != len(net.nodes):
        violations.append("graph contains a directed cycle")
    for sigma in net.sources:
        if net.in_edges.get(sigma):
            violations.append(f"source {sigma} has incoming edges")
    if net.out_edges.get(net.sink):
        violations.append(f"sink {net.sink} has outgoing edges")
    if net.sink in net.sources:
        violations.append("sink is listed as a source")
    connected = net.nodes_reaching_sink(frozenset())
    for v in net.nodes:
        if v != net.sink and v not in connected:
            violations.append(f"node {v} has no directed path to the sink")
    return violations


def classify_sources(net, edge_set):
    return net.classify(edge_set)


def is_cut(net, edge_set):
    """True iff removing the set disconnects the sink from at least one source."""
    return bool(net.classify(edge_set).I)


def min_cut(net, src, dst):
    """Maximum number of edge-disjoint src-to-dst paths plus a witness cut.

    Unit capacities; augmenting-path max-flow, witness read off the
    residual reachability.
    """
    flow = {e: 0 for e in net.edge_ids}
    value = 0
    while True:
        parent = {src: None}
        stack = [src]
        while stack and dst not in parent:
            v = stack.pop()
            for e in net.out_edges[v]:
                h = net.head[e]
                if flow[e] == 0 and h not in parent:
                    parent[h] = ("f", e, v)
                    stack.append(h)
            for e in net.in_edges[v]:
                t = net.tail[e]
                if flow[e] == 1 and t not in parent:
                    parent[t] = ("b", e, v)
                    stack.append(t)
        if dst not in parent:
            break
        node = dst
        while parent[node] is not None:
            kind, e, prev = parent[node]
            flow[e] = 1 if kind == "f" else 0
            node = prev
        value += 1
    # residual reachability from src gives the witness
    reach = {src}
    stack = [src]
    while stack:
        v = stack.pop()
        for e in net.out_edges[v]:
            if flow[e] == 0 and net.head[e] not in reach:
                reach.add(net.head[e])
                stack.append(net.head[e])
        for e in net.in_edges[v]:
            if flow[e] == 1 and net.tail[e] not in reach:
                reach.add(net.tail[e])
                stack.append(net.tail[e])
    witness = frozenset(
        e for e in net.edge_ids if net.tail[e] in reach and net.head[e] not in reach
    )
    return value, witness


def min_source_cut(net):
    """Smallest min-cut value from any single source to the sink."""
    return min(min_cut(net, sigma, net.sink)[0] for sigma in net.sources)


def enumerate_cuts(net, max_size=None):
    """All cuts of size at most max_size, ordered by (size, canonical edge order)."""
    if max_size is None:
        max_size = len(net.edge_ids)
    out = []
    for k in range(1, max_size + 1):
        for combo in combinations(net.edge_ids, k):
            cand = frozenset(combo)
            if is_cut(net, cand):
                out.append(cand)
    return out


def iter_cuts_by_size(net, max_size):
    for k in range(1, max_size + 1):
        for combo in combinations(net.edge_ids, k):
            cand = frozenset(combo)
            if is_cut(net, cand):
                yield cand


def enumerate_wiretap_sets(net, r):
    """All edge subsets of size at most r, including the empty set."""
    if not 0 <= r <= len(net.edge_ids):
        raise InvalidEdge(f"security level {r} out of range")
    out = [frozenset()]
    for k in range(1, r + 1):
        out.extend(frozenset(c) for c in combinations(net.edge_ids, k))
    return out


def is_weak_partition(net, cut, parts):
    """Re-check the two weak-partition clauses from their definition."""
    cut = frozenset(cut)
    if frozenset().union(*parts) != cut or sum(len(p) for p in parts) != len(cut):
        return False
    infos = [net.classify(p) for p in parts]
    if any(not info.I for info in infos):
        return False
    whole = net.classify(cut)
    covered = frozenset().union(*(info.I for info in infos))
    loose = whole.I - covered
    allowed_extra = whole.J | loose
    return all(info.D <= (info.I | allowed_extra) for info in infos)


def weak_partitions(net, cut, max_parts=None):
    """Generate the weak partitions of a cut, trivial partition first.

    Restricted-growth enumeration over the cut's edges in canonical
    order; a branch dies as soon as some block can no longer become a
    cut even with every remaining edge added to it.
    """
    cut = frozenset(cut)
    if not is_cut(net, cut):
        raise NotACut(f"{sorted(cut)} is not a cut")
    edges = net.sorted_edges(cut)
    k = len(edges)
    whole = net.classify(cut)

    def feasible(parts, next_idx):
        rest = edges[next_idx:]
        for p in parts:
            if not net.classify(frozenset(p) | frozenset(rest)).I:
                return False
        return True

    results = []

    def rec(idx, parts):
        if idx == k:
            blocks = [frozenset(p) for p in parts]
            infos = [net.classify(b) for b in blocks]
            if any(not info.I for info in infos):
                return
            covered = frozenset().union(*(info.I for info in infos))
            allowed_extra = whole.J | (whole.I - covered)
            if all(info.D <= (info.I | allowed_extra) for info in infos):
                results.append(tuple(blocks))
            return
        e = edges[idx]
        for i in range(len(parts)):
            parts[i].append(e)
            if feasible(parts, idx + 1):
                rec(idx + 1, parts)
            parts[i].pop()
        if max_parts is None or len(parts) < max_parts:
            parts.append([e])
            if feasible(parts, idx + 1):
                rec(idx + 1, parts)
            parts.pop()

    rec(0, [])
    return results


def enumerate_weak_partitions(net, cut, max_parts=None):
    return weak_partitions(net, cut, max_parts=max_parts)


def separates(net, blocking, from_nodes, to_nodes):
    """True iff no path from any of from_nodes to any of to_nodes survives."""
    if not from_nodes or not to_nodes:
        return True
    reach = net.reachable_from(set(from_nodes), frozenset(blocking))
    return not (reach & set(to_nodes))


def enumerate_separators(net, cut, max_size=None):
    """Edge sets B that cut tail(C) off from J_C and satisfy D_B = J_C.

    Candidates are drawn from edges whose D already sits inside J_C,
    since any other edge would break the D_B = J_C requirement.
    """
    cut = frozenset(cut)
    if not is_cut(net, cut):
        raise NotACut(f"{sorted(cut)} is not a cut")
    info = net.classify(cut)
    tails = {net.tail[e] for e in cut}
    pool = [e for e in net.edge_ids if net.classify(frozenset([e])).D <= info.J]
    if max_size is None:
        max_size = len(pool)
    out = []
    for k in range(0, min(max_size, len(pool)) + 1):
        for combo in combinations(pool, k):
            b = frozenset(combo)
            if net.classify(b).D != info.J:
                continue
            if separates(net, b, info.J, tails):
                out.append(b)
    return out
