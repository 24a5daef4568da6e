"""Verification machinery: invariant sweeps over graph corpora, exhaustive
reconstruction of small digraphs from target value rows, and the
smallest-bound ranking report.

Reconstruction searches the space of labeled digraphs on n vertices for
arc sets whose computed spectral radius and bound row agree with a target
row within a tolerance. The target can fix the arc count m (enumeration
over arc subsets of that size), fix a per-vertex outdegree sequence
(enumeration over out-neighborhood choices), or leave both open, which is
only allowed up to n = 5. Matches are deduplicated up to digraph
isomorphism via a minimum-bitstring canonical form.
"""

import itertools
import math
import random
from dataclasses import dataclass
from math import comb
from typing import Mapping

from . import bounds as _bounds
from .bounds import BoundId, BoundValue, all_bounds, witness_value
from .digraph import (
    Digraph,
    classify,
    degree_profile,
    gen_random_strongly_connected,
    scc,
)
from .edgelist import serialize_edge_list
from .spectral import oval_containment, spectral_radius

DOMINANCE_TOL = 1e-9


# ---------------------------------------------------------------------------
# corpora


@dataclass(frozen=True)
class RandomCorpusSpec:
    """Deterministic random corpus: a master Random(seed) draws, per graph,
    n uniformly from [n_min, n_max], an arc probability from the given
    tuple, and a 64-bit seed for gen_random_strongly_connected."""

    count: int
    n_min: int
    n_max: int
    arc_probabilities: tuple
    seed: int

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("count must be nonnegative")
        if self.n_min < 2 or self.n_max < self.n_min:
            raise ValueError("need 2 <= n_min <= n_max")
        if not self.arc_probabilities:
            raise ValueError("need at least one arc probability")
        object.__setattr__(
            self, "arc_probabilities", tuple(self.arc_probabilities)
        )


def random_corpus(spec: RandomCorpusSpec) -> list:
    master = random.Random(spec.seed)
    corpus = []
    for k in range(spec.count):
        n = master.randint(spec.n_min, spec.n_max)
        p = master.choice(spec.arc_probabilities)
        seed = master.getrandbits(64)
        g = gen_random_strongly_connected(n, p, seed)
        corpus.append((f"random#{k}(n={n},p={p},seed={seed})", g))
    return corpus


# ---------------------------------------------------------------------------
# invariant sweep


@dataclass(frozen=True)
class GraphCase:
    label: str
    g: Digraph
    q: float
    row: tuple


def _build_case(label, g, spectral_tol):
    result = spectral_radius(g, tol=spectral_tol)
    return GraphCase(label=label, g=g, q=result.q, row=all_bounds(g))


def _inv_degree_consistency(case):
    profile = degree_profile(case.g)
    if sum(profile.outdeg) != case.g.m or sum(profile.indeg) != case.g.m:
        return f"degree sums disagree with arc count {case.g.m}"
    return None


def _inv_dominance(case):
    for bv in case.row:
        if bv.value is not None and case.q > bv.value + DOMINANCE_TOL:
            return (
                f"q = {case.q!r} exceeds {bv.id.value} = {bv.value!r}"
            )
    return None


def _inv_bracket_plain_rows(case):
    profile = degree_profile(case.g)
    lo, hi = 2.0 * profile.min_outdeg, 2.0 * profile.max_outdeg
    if not (lo - DOMINANCE_TOL <= case.q <= hi + DOMINANCE_TOL):
        return f"q = {case.q!r} outside plain row-sum bracket [{lo}, {hi}]"
    return None


def _inv_bracket_deg_avg(case):
    profile = degree_profile(case.g)
    if profile.min_outdeg == 0:
        return None
    sums = [d + t / d for d, t in zip(profile.outdeg, profile.two_outdeg)]
    lo, hi = min(sums), max(sums)
    if not (lo - DOMINANCE_TOL <= case.q <= hi + DOMINANCE_TOL):
        return (
            f"q = {case.q!r} outside degree-average row-sum bracket "
            f"[{lo!r}, {hi!r}]"
        )
    return None


def _inv_oval_contains_q(case):
    if len(scc(case.g).components) != 1:
        return None
    check = oval_containment(case.g, case.q)
    if not check.contained:
        return f"q = {case.q!r} escapes every per-arc oval"
    return None


def _inv_regular_equality(case):
    profile = degree_profile(case.g)
    if profile.min_outdeg != profile.max_outdeg:
        return None
    expected = 2.0 * profile.max_outdeg
    if abs(case.q - expected) > DOMINANCE_TOL:
        return f"regular digraph with q = {case.q!r}, expected {expected}"
    return None


def _inv_semiregular_equality(case):
    flags = classify(case.g)
    if not (flags.is_bipartite_semiregular and flags.is_strongly_connected):
        return None
    geo = next(bv for bv in case.row if bv.id == BoundId.OVAL_GEOMEAN)
    if geo.value is None or abs(geo.value - case.q) > DOMINANCE_TOL:
        return (
            f"bipartite semiregular digraph should attain oval_geomean; "
            f"q = {case.q!r}, bound = {geo.value!r}"
        )
    return None


def _inv_q_exceeds_max_outdeg(case):
    # observed to hold on strongly connected digraphs; checked, not relied on
    if len(scc(case.g).components) != 1:
        return None
    profile = degree_profile(case.g)
    if case.q <= profile.max_outdeg - DOMINANCE_TOL:
        return f"q = {case.q!r} not above max outdegree {profile.max_outdeg}"
    return None


def _inv_witness_consistency(case):
    for bv in case.row:
        replay = witness_value(case.g, bv)
        if replay is not None and replay != bv.value:
            return (
                f"witness replay for {bv.id.value} gives {replay!r}, "
                f"stored {bv.value!r}"
            )
    return None


INVARIANTS = {
    "degree_consistency": _inv_degree_consistency,
    "dominance": _inv_dominance,
    "bracket_plain_rows": _inv_bracket_plain_rows,
    "bracket_deg_avg": _inv_bracket_deg_avg,
    "oval_contains_q": _inv_oval_contains_q,
    "regular_equality": _inv_regular_equality,
    "semiregular_equality": _inv_semiregular_equality,
    "q_exceeds_max_outdeg": _inv_q_exceeds_max_outdeg,
    "witness_consistency": _inv_witness_consistency,
}


@dataclass(frozen=True)
class SweepFailure:
    label: str
    invariant: str
    detail: str
    edge_list: str


@dataclass(frozen=True)
class SweepReport:
    description: str
    graph_count: int
    invariants: tuple
    checks_run: int
    failures: tuple

    @property
    def passed(self) -> bool:
        return not self.failures


def sweep(corpus, invariants=None, description="", spectral_tol=1e-12) -> SweepReport:
    """Run the named invariants over (label, digraph) pairs.

    Failures are data: each carries the offending graph serialized in the
    edge-list format so a report is reproducible on its own.
    """
    names = tuple(invariants) if invariants is not None else tuple(INVARIANTS)
    unknown = [name for name in names if name not in INVARIANTS]
    if unknown:
        raise ValueError(f"unknown invariants: {unknown}")
    corpus = list(corpus)
    failures = []
    checks = 0
    for label, g in corpus:
        case = _build_case(label, g, spectral_tol)
        for name in names:
            checks += 1
            detail = INVARIANTS[name](case)
            if detail is not None:
                failures.append(
                    SweepFailure(
                        label=label,
                        invariant=name,
                        detail=detail,
                        edge_list=serialize_edge_list(g),
                    )
                )
    return SweepReport(
        description=description,
        graph_count=len(corpus),
        invariants=names,
        checks_run=checks,
        failures=tuple(failures),
    )


# ---------------------------------------------------------------------------
# isomorphism canonical form


def canonical_form(g: Digraph):
    """Minimum adjacency bitstring over all vertex relabelings.

    Factorial cost; meant for the small matches that come out of a
    reconstruction (n <= 6), not for bulk candidate filtering.
    """
    n = g.n
    best = None
    for perm in itertools.permutations(range(n)):
        bits = 0
        for i, j in g.arcs:
            bits |= 1 << (perm[i] * n + perm[j])
        if best is None or bits < best:
            best = bits
    return (n, best)


# ---------------------------------------------------------------------------
# reconstruction


@dataclass(frozen=True)
class ReconstructionTarget:
    """Search target: expected q and bound-row values, plus structural
    constraints narrowing the candidate space.

    row maps BoundId to the expected value; inapplicable candidates never
    match a numeric expectation. tolerance applies to q and every row
    entry (absolute deviation). outdeg_sequence, when given, fixes the
    outdegree of each vertex in order and switches enumeration to
    per-vertex out-neighborhood choices.
    """

    n: int
    q: float
    row: tuple = ()
    m: int | None = None
    tolerance: float = 5e-4
    require_strongly_connected: bool = True
    require_g_star: bool = False
    max_outdeg: int | None = None
    min_outdeg: int | None = None
    outdeg_sequence: tuple | None = None
    name: str = ""

    def __post_init__(self):
        row = self.row
        if isinstance(row, Mapping):
            row = tuple(
                (bid, float(row[bid])) for bid in _bounds.ROW_ORDER if bid in row
            )
        object.__setattr__(self, "row", tuple(row))
        if self.outdeg_sequence is not None:
            object.__setattr__(
                self, "outdeg_sequence", tuple(self.outdeg_sequence)
            )
        if self.n < 2:
            raise ValueError("target needs n >= 2")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")


@dataclass(frozen=True)
class ReconstructionMatch:
    digraph: Digraph
    q: float
    row: tuple
    max_deviation: float


@dataclass(frozen=True)
class ReconstructionReport:
    target: ReconstructionTarget
    matches: tuple
    candidates_visited: int
    nearest_miss: ReconstructionMatch | None

    @property
    def found(self) -> bool:
        return bool(self.matches)


# candidate spaces above this size use cheap-filter-first evaluation;
# nearest-miss tracking then falls back to a prefilter-depth heuristic
_FULL_EVAL_LIMIT = 20_000

# row entries roughly ordered by evaluation cost: degree-sequence bounds
# first, arc scans after, so mismatches are rejected before eigenwork
_PREFILTER_ORDER = (
    BoundId.DEG_PLUS_AVG,
    BoundId.HONG_YOU,
    BoundId.DEG_EXTREMES,
    BoundId.MAXDEG_PLUS_2,
    BoundId.ARC_DEG_SUM,
    BoundId.INDEG_SQRT,
    BoundId.WEIGHT_DEG_SUM,
    BoundId.OVAL_AVG,
    BoundId.OVAL_GEOMEAN,
    BoundId.WEIGHT_SQRT_PROD,
    BoundId.WEIGHT_SQRT_SUM,
    BoundId.WEIGHT_SUM_SQRT,
)


def _candidate_space(target: ReconstructionTarget):
    """(total candidate count, iterator of arc frozensets)."""
    n = target.n
    slots = [(i, j) for i in range(n) for j in range(n) if i != j]
    if target.outdeg_sequence is not None:
        seq = target.outdeg_sequence
        if len(seq) != n:
            raise ValueError("outdeg_sequence length must equal n")
        if any(d < 0 or d > n - 1 for d in seq):
            raise ValueError("outdegrees must lie in [0, n-1]")
        if sum(seq) < 1:
            raise ValueError("outdeg_sequence must place at least one arc")
        if target.m is not None and sum(seq) != target.m:
            raise ValueError(
                f"outdeg_sequence sums to {sum(seq)} but m = {target.m}"
            )
        total = 1
        for d in seq:
            total *= comb(n - 1, d)
        pools = [
            list(itertools.combinations([j for j in range(n) if j != i], d))
            for i, d in enumerate(seq)
        ]

        def gen_sequence():
            for choice in itertools.product(*pools):
                yield frozenset(
                    (i, j) for i, nbrs in enumerate(choice) for j in nbrs
                )

        return total, gen_sequence()
    if target.m is not None:
        if not 1 <= target.m <= len(slots):
            raise ValueError(
                f"m must lie in [1, {len(slots)}] for n = {n}, got {target.m}"
            )
        total = comb(len(slots), target.m)
        gen_fixed_m = (
            frozenset(combo) for combo in itertools.combinations(slots, target.m)
        )
        return total, gen_fixed_m
    if n > 5:
        raise ValueError(
            "unconstrained enumeration above n = 5 is not desk scale; fix the "
            "arc count m or supply an outdegree sequence"
        )
    k = len(slots)
    total = (1 << k) - 1

    def gen_subsets():
        for mask in range(1, 1 << k):
            yield frozenset(slots[b] for b in range(k) if mask >> b & 1)

    return total, gen_subsets()


def _structural_reject(target, g, profile, strongly):
    if target.require_strongly_connected and not strongly:
        return True
    if target.max_outdeg is not None and profile.max_outdeg != target.max_outdeg:
        return True
    if target.min_outdeg is not None and profile.min_outdeg != target.min_outdeg:
        return True
    if target.require_g_star and not classify(g).is_in_g_star_class:
        return True
    return False


def _row_deviation(target, q, row_by_id):
    devs = [abs(q - target.q)]
    for bid, expected in target.row:
        bv = row_by_id[bid]
        if bv.value is None:
            return math.inf
        devs.append(abs(bv.value - expected))
    return max(devs)


def reconstruct(target: ReconstructionTarget, spectral_tol=1e-12) -> ReconstructionReport:
    """Exhaustively search the target's candidate space for digraphs whose
    computed q and bound row sit within tolerance of the target.

    candidates_visited counts every enumerated arc set, before any
    filtering. Matches are reduced to one representative per isomorphism
    class, in candidate order. When the space is small enough for full
    evaluation, the nearest miss is exact: the constraint-satisfying
    candidate of smallest maximum deviation. Above _FULL_EVAL_LIMIT the
    nearest miss is heuristic — the candidate surviving the most cheap
    filters before a numeric rejection (ties to the smallest deviation at
    the rejecting column) — which still shows which column blocks a match.
    """
    total, candidates = _candidate_space(target)
    early_mode = total > _FULL_EVAL_LIMIT
    expected = dict(target.row)
    prefilter = [bid for bid in _PREFILTER_ORDER if bid in expected]

    visited = 0
    matches = []
    nearest = None
    best_early = None  # (prefilter depth reached, deviation there, arc set)

    def note_early_reject(depth, dev, arcs):
        nonlocal best_early
        if not math.isfinite(dev):
            return
        if (
            best_early is None
            or depth > best_early[0]
            or (depth == best_early[0] and dev < best_early[1])
        ):
            best_early = (depth, dev, arcs)

    for arcs in candidates:
        visited += 1
        g = Digraph(target.n, arcs)
        profile = degree_profile(g)
        strongly = len(scc(g).components) == 1
        if _structural_reject(target, g, profile, strongly):
            continue
        if early_mode:
            ctx = _bounds._make_ctx(g)
            rejected = False
            for depth, bid in enumerate(prefilter):
                bv = _bounds._EVALUATORS[bid](ctx)
                dev = (
                    math.inf if bv.value is None
                    else abs(bv.value - expected[bid])
                )
                if dev > target.tolerance:
                    note_early_reject(depth, dev, arcs)
                    rejected = True
                    break
            if rejected:
                continue
        result = spectral_radius(g, tol=spectral_tol)
        if early_mode and abs(result.q - target.q) > target.tolerance:
            note_early_reject(len(prefilter), abs(result.q - target.q), arcs)
            continue
        row = all_bounds(g)
        row_by_id = {bv.id: bv for bv in row}
        deviation = _row_deviation(target, result.q, row_by_id)
        candidate = ReconstructionMatch(
            digraph=g, q=result.q, row=row, max_deviation=deviation
        )
        if deviation <= target.tolerance:
            matches.append(candidate)
        elif not early_mode and math.isfinite(deviation):
            if nearest is None or deviation < nearest.max_deviation:
                nearest = candidate

    if not matches and nearest is None and best_early is not None:
        g = Digraph(target.n, best_early[2])
        result = spectral_radius(g, tol=spectral_tol)
        row = all_bounds(g)
        nearest = ReconstructionMatch(
            digraph=g,
            q=result.q,
            row=row,
            max_deviation=_row_deviation(
                target, result.q, {bv.id: bv for bv in row}
            ),
        )

    unique = []
    seen = set()
    for match in matches:
        key = canonical_form(match.digraph)
        if key not in seen:
            seen.add(key)
            unique.append(match)
    return ReconstructionReport(
        target=target,
        matches=tuple(unique),
        candidates_visited=visited,
        nearest_miss=nearest if not unique else None,
    )


# Bundled reference targets. gstar pins a 4-vertex, 9-arc family where the
# conditional maxdeg_plus_2 bound beats the arc degree sum; g1 is a full
# 4-vertex comparison row; g2 is a 6-vertex row kept as golden expected
# values, searchable once the caller narrows the space (m or an outdegree
# sequence), since 2^30 arc subsets are out of desk range.
PRESETS = {
    "gstar": ReconstructionTarget(
        n=4,
        m=9,
        q=4.7321,
        row={BoundId.ARC_DEG_SUM: 6.0, BoundId.MAXDEG_PLUS_2: 5.0},
        max_outdeg=3,
        min_outdeg=1,
        require_g_star=True,
        name="gstar",
    ),
    "g1": ReconstructionTarget(
        n=4,
        q=3.0,
        row={
            BoundId.ARC_DEG_SUM: 4.0,
            BoundId.DEG_PLUS_AVG: 3.5,
            BoundId.OVAL_AVG: 3.3028,
            BoundId.INDEG_SQRT: 3.4142,
            BoundId.HONG_YOU: 3.5616,
            BoundId.DEG_EXTREMES: 3.5,
            BoundId.OVAL_GEOMEAN: 3.5651,
            BoundId.WEIGHT_SQRT_PROD: 3.4495,
            BoundId.WEIGHT_DEG_SUM: 3.3333,
            BoundId.WEIGHT_SQRT_SUM: 3.6029,
            BoundId.WEIGHT_SUM_SQRT: 3.5731,
        },
        name="g1",
    ),
    "g2": ReconstructionTarget(
        n=6,
        q=4.1984,
        row={
            BoundId.ARC_DEG_SUM: 5.0,
            BoundId.DEG_PLUS_AVG: 4.6667,
            BoundId.OVAL_AVG: 4.6016,
            BoundId.INDEG_SQRT: 5.0,
            BoundId.HONG_YOU: 4.7321,
            BoundId.DEG_EXTREMES: 5.5,
            BoundId.OVAL_GEOMEAN: 4.7913,
            BoundId.WEIGHT_SQRT_PROD: 4.5644,
            BoundId.WEIGHT_DEG_SUM: 4.6,
            BoundId.WEIGHT_SQRT_SUM: 4.7956,
            BoundId.WEIGHT_SUM_SQRT: 4.7866,
        },
        name="g2",
    ),
}


# ---------------------------------------------------------------------------
# smallest-bound ranking


@dataclass(frozen=True)
class RemarkReport:
    """Comparison record around the conditional maxdeg_plus_2 bound and the
    ranking of the eleven always-reported bounds.

    For members of the g-star class, maxdeg_plus_2 <= arc_deg_sum must
    hold (the max-outdegree vertex has an out-neighbor of outdegree >= 2,
    so some arc already sums past max outdegree + 2).
    """

    in_g_star_class: bool
    maxdeg_plus_2: BoundValue
    arc_deg_sum: BoundValue
    g_star_inequality_holds: bool | None
    ranking: tuple
    smallest: BoundId | None
    second_smallest: BoundId | None


def remark_check(g: Digraph) -> RemarkReport:
    flags = classify(g)
    row = all_bounds(g)
    row_by_id = {bv.id: bv for bv in row}
    plus2 = row_by_id[BoundId.MAXDEG_PLUS_2]
    arcsum = row_by_id[BoundId.ARC_DEG_SUM]
    holds = None
    if flags.is_in_g_star_class and plus2.value is not None and arcsum.value is not None:
        holds = plus2.value <= arcsum.value
    applicable = [
        (bv.id, bv.value)
        for bv in row
        if bv.id in _bounds.TABLE_ORDER and bv.value is not None
    ]
    order_index = {bid: k for k, bid in enumerate(_bounds.TABLE_ORDER)}
    ranking = tuple(
        sorted(applicable, key=lambda item: (item[1], order_index[item[0]]))
    )
    return RemarkReport(
        in_g_star_class=flags.is_in_g_star_class,
        maxdeg_plus_2=plus2,
        arc_deg_sum=arcsum,
        g_star_inequality_holds=holds,
        ranking=ranking,
        smallest=ranking[0][0] if ranking else None,
        second_smallest=ranking[1][0] if len(ranking) > 1 else None,
    )
