"""Digraphs on 0..n-1 with outdegree statistics, SCCs, and generators.

A digraph here is a finite set of ordered arcs (i, j) with i != j: no loops,
no parallel arcs, and at least one arc. Most of the package is driven by
outdegree data:

* outdegree d+(i): number of arcs leaving i
* 2-outdegree t+(i): sum of d+(j) over the out-neighbors j of i
* average 2-outdegree m+(i) = t+(i) / d+(i), undefined when d+(i) = 0
"""

import itertools
import random
from dataclasses import dataclass


@dataclass(frozen=True)
class Digraph:
    """Immutable digraph on vertices 0..n-1 with a nonempty arc set."""

    n: int
    arcs: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        for arc in self.arcs:
            i, j = arc
            if i == j:
                raise ValueError(f"loop arc ({i}, {j}) is not allowed")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"arc ({i}, {j}) out of range for n={self.n}")
        if not self.arcs:
            raise ValueError("digraph must have at least one arc")

    @property
    def m(self) -> int:
        """Number of arcs."""
        return len(self.arcs)

    def sorted_arcs(self) -> list:
        return sorted(self.arcs)

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)})"


def from_arc_list(n: int, pairs) -> Digraph:
    """Build a digraph from an iterable of (i, j) pairs; duplicates collapse."""
    return Digraph(n, frozenset((int(i), int(j)) for i, j in pairs))


def adjacency(g: Digraph):
    """Sorted out- and in-neighbor lists, one pass over the arc set."""
    out = [[] for _ in range(g.n)]
    into = [[] for _ in range(g.n)]
    for i, j in g.sorted_arcs():
        out[i].append(j)
        into[j].append(i)
    return out, into


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degree data plus graph-level extremes.

    avg_two_outdeg holds None at vertices with outdegree zero; the quantity
    is a ratio with d+(i) in the denominator and has no meaningful default.
    """

    outdeg: tuple
    indeg: tuple
    two_outdeg: tuple
    avg_two_outdeg: tuple
    max_outdeg: int
    min_outdeg: int
    arc_count: int


def degree_profile(g: Digraph) -> DegreeProfile:
    out, into = adjacency(g)
    return _profile_from_adjacency(out, into, g.m)


def _profile_from_adjacency(out, into, arc_count) -> DegreeProfile:
    outdeg = tuple(len(nbrs) for nbrs in out)
    indeg = tuple(len(nbrs) for nbrs in into)
    two_outdeg = tuple(sum(outdeg[j] for j in nbrs) for nbrs in out)
    avg = tuple(
        (t / d) if d > 0 else None for d, t in zip(outdeg, two_outdeg)
    )
    return DegreeProfile(
        outdeg=outdeg,
        indeg=indeg,
        two_outdeg=two_outdeg,
        avg_two_outdeg=avg,
        max_outdeg=max(outdeg),
        min_outdeg=min(outdeg),
        arc_count=arc_count,
    )


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components in reverse topological order.

    components lists the SCCs of the condensation so that every
    cross-component arc runs from a later-listed component to an
    earlier-listed one (sinks of the condensation come first). Vertices
    within a component are sorted. component_of[v] is the index of the
    component containing v.
    """

    component_of: tuple
    components: tuple


def scc(g: Digraph) -> SccDecomposition:
    """Tarjan's algorithm, iterative to stay clear of recursion limits."""
    out, _ = adjacency(g)
    n = g.n
    index = [-1] * n
    low = [0] * n
    onstack = [False] * n
    stack = []
    components = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        onstack[root] = True
        work = [(root, iter(out[root]))]
        while work:
            v, neighbor_iter = work[-1]
            advanced = False
            for w in neighbor_iter:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    onstack[w] = True
                    work.append((w, iter(out[w])))
                    advanced = True
                    break
                if onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(tuple(sorted(comp)))

    component_of = [0] * n
    for idx, comp in enumerate(components):
        for v in comp:
            component_of[v] = idx
    return SccDecomposition(tuple(component_of), tuple(components))


def is_strongly_connected(g: Digraph) -> bool:
    return len(scc(g).components) == 1


@dataclass(frozen=True)
class Classification:
    is_strongly_connected: bool
    is_regular: bool
    is_directed_cycle: bool
    is_bidirectional_star: bool
    is_bipartite_semiregular: bool
    is_in_g_star_class: bool


def classify(g: Digraph) -> Classification:
    """Structural flags used by the equality cases of the bound catalog."""
    profile = degree_profile(g)
    strongly = is_strongly_connected(g)
    regular = profile.max_outdeg == profile.min_outdeg
    directed_cycle = strongly and profile.max_outdeg == 1
    return Classification(
        is_strongly_connected=strongly,
        is_regular=regular,
        is_directed_cycle=directed_cycle,
        is_bidirectional_star=_is_bidirectional_star(g),
        is_bipartite_semiregular=_is_bipartite_semiregular(g, profile),
        is_in_g_star_class=_is_in_g_star_class(g, profile, strongly),
    )


def _is_bidirectional_star(g: Digraph) -> bool:
    # one center joined to every other vertex by a bidirected pair, nothing else
    if g.m != 2 * (g.n - 1):
        return False
    out, into = adjacency(g)
    for center in range(g.n):
        others = [v for v in range(g.n) if v != center]
        if out[center] == others and into[center] == others:
            if all(out[v] == [center] and into[v] == [center] for v in others):
                return True
    return False


def _is_bipartite_semiregular(g: Digraph, profile: DegreeProfile) -> bool:
    """True when some bipartition (X, Y) carries all arcs as bidirected
    cross pairs with one common outdegree on X and one on Y.

    The check is existential over the 2-colorings of the underlying graph,
    so disconnected unions with a consistent (r, s) also qualify.
    """
    if any((j, i) not in g.arcs for (i, j) in g.arcs):
        return False
    if profile.min_outdeg == 0:
        # a vertex without arcs cannot sit in either part: parts must
        # exchange arcs in both directions, forcing positive outdegrees
        return False
    out, _ = adjacency(g)

    color = [-1] * g.n
    options_per_comp = []
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        comp = [start]
        while queue:
            v = queue.pop()
            for w in out[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                    comp.append(w)
                elif color[w] == color[v]:
                    return False  # odd cycle in the underlying graph
        side0 = {profile.outdeg[v] for v in comp if color[v] == 0}
        side1 = {profile.outdeg[v] for v in comp if color[v] == 1}
        if len(side0) > 1 or len(side1) > 1:
            return False
        r = side0.pop()
        s = side1.pop() if side1 else r
        options = {(r, s), (s, r)}
        options_per_comp.append(options)

    # some global (r, s) must be available in every component
    for candidate in options_per_comp[0]:
        if all(candidate in options for options in options_per_comp):
            return True
    return False


def _is_in_g_star_class(g: Digraph, profile: DegreeProfile, strongly: bool) -> bool:
    """Strongly connected, min outdegree 1, max outdegree at least
    (m - (n - 1)) / 2, and some maximum-outdegree vertex has an
    out-neighbor of outdegree at least 2."""
    if not strongly or profile.min_outdeg != 1:
        return False
    if profile.max_outdeg < (profile.arc_count - (g.n - 1)) / 2:
        return False
    out, _ = adjacency(g)
    for v in range(g.n):
        if profile.outdeg[v] == profile.max_outdeg:
            if any(profile.outdeg[w] >= 2 for w in out[v]):
                return True
    return False


# ---------------------------------------------------------------------------
# generators


def gen_directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise ValueError("directed cycle needs n >= 2")
    return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def gen_bidirectional_complete(n: int) -> Digraph:
    if n < 2:
        raise ValueError("bidirectional complete digraph needs n >= 2")
    return Digraph(n, frozenset((i, j) for i in range(n) for j in range(n) if i != j))


def gen_bidirectional_star(n: int) -> Digraph:
    if n < 3:
        raise ValueError("bidirectional star needs n >= 3")
    arcs = set()
    for leaf in range(1, n):
        arcs.add((0, leaf))
        arcs.add((leaf, 0))
    return Digraph(n, frozenset(arcs))


def _undirected_components(vertex_count, edges):
    parent = list(range(vertex_count))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups = {}
    for v in range(vertex_count):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def gen_bipartite_semiregular(p: int, q: int, r: int, s: int) -> Digraph:
    """Bidirected bipartite digraph: part X of size p with outdegree r,
    part Y of size q with outdegree s. Feasibility needs p*r = q*s,
    r <= q, s <= p.

    Construction: x_i pairs with the r consecutive y's starting at i*r
    (mod q), then deterministic degree-preserving 2-swaps merge underlying
    components where possible. Sparse parameter sets (fewer undirected
    edges than p + q - 1) cannot be connected; the semiregular structure
    still holds per component.
    """
    if min(p, q, r, s) < 1:
        raise ValueError("all of p, q, r, s must be at least 1")
    if r > q or s > p or p * r != q * s:
        raise ValueError(
            f"infeasible bipartite parameters: need r <= q, s <= p and p*r == q*s, "
            f"got p={p}, q={q}, r={r}, s={s}"
        )
    edges = {(i, p + (i * r + t) % q) for i in range(p) for t in range(r)}

    for _ in range(p + q):
        comps = _undirected_components(p + q, edges)
        if len(comps) <= 1:
            break
        comp_of = {}
        for ci, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = ci
        first = sorted(e for e in edges if comp_of[e[0]] == 0)
        improved = False
        for other in range(1, len(comps)):
            rest = sorted(e for e in edges if comp_of[e[0]] == other)
            for (x1, y1), (x2, y2) in itertools.product(first, rest):
                trial = (edges - {(x1, y1), (x2, y2)}) | {(x1, y2), (x2, y1)}
                if len(_undirected_components(p + q, trial)) < len(comps):
                    edges = trial
                    improved = True
                    break
            if improved:
                break
        if not improved:
            break

    arcs = set()
    for a, b in edges:
        arcs.add((a, b))
        arcs.add((b, a))
    return Digraph(p + q, frozenset(arcs))


def gen_random_strongly_connected(n: int, arc_probability: float, seed: int) -> Digraph:
    """Seeded random strongly connected digraph.

    Procedure (fixed, so a seed pins the exact arc set):
      1. rng = random.Random(seed); shuffle 0..n-1 (Fisher-Yates) into a
         random Hamiltonian cycle, whose arcs are always included.
      2. Visit the remaining ordered pairs (i, j), i != j, in lexicographic
         order and include each independently when rng.random() falls
         below arc_probability.
    """
    if n < 2:
        raise ValueError("random strongly connected digraph needs n >= 2")
    if not 0.0 <= arc_probability <= 1.0:
        raise ValueError(f"arc_probability must lie in [0, 1], got {arc_probability}")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    cycle = {(perm[k], perm[(k + 1) % n]) for k in range(n)}
    arcs = set(cycle)
    for i in range(n):
        for j in range(n):
            if i != j and (i, j) not in cycle and rng.random() < arc_probability:
                arcs.add((i, j))
    return Digraph(n, frozenset(arcs))
