"""Closed-form upper bounds on the signless Laplacian spectral radius.

Every bound evaluates to a BoundValue. A bound whose hypotheses fail on
the given digraph is not an error: it comes back inapplicable, carrying a
reason instead of a number, so a full row can always be assembled for
side-by-side comparison. all_bounds returns that row in a fixed column
order (ROW_ORDER) used everywhere downstream.

Notation in the formulas below: d(i) is the outdegree of i, t(i) the sum
of outdegrees over the out-neighbors of i (2-outdegree), and
m(i) = t(i)/d(i) the average 2-outdegree, undefined when d(i) = 0. Note
d(i) * m(i) = t(i), which several formulas exploit to stay on integer
arithmetic as long as possible.
"""

import enum
import math
from dataclasses import dataclass
from typing import Callable

from .digraph import Digraph, adjacency, degree_profile, is_strongly_connected


class BoundId(enum.Enum):
    ARC_DEG_SUM = "arc_deg_sum"
    DEG_PLUS_AVG = "deg_plus_avg"
    OVAL_AVG = "oval_avg"
    INDEG_SQRT = "indeg_sqrt"
    HONG_YOU = "hong_you"
    DEG_EXTREMES = "deg_extremes"
    OVAL_GEOMEAN = "oval_geomean"
    GENERIC_WEIGHT = "generic_weight"
    WEIGHT_SQRT_PROD = "weight_sqrt_prod"
    WEIGHT_DEG_SUM = "weight_deg_sum"
    WEIGHT_SQRT_SUM = "weight_sqrt_sum"
    WEIGHT_SUM_SQRT = "weight_sum_sqrt"
    MAXDEG_PLUS_2 = "maxdeg_plus_2"


# Fixed comparison-row order: the five classical bounds, then the newer
# family, with the conditional maxdeg_plus_2 bound appended last.
TABLE_ORDER = (
    BoundId.ARC_DEG_SUM,
    BoundId.DEG_PLUS_AVG,
    BoundId.OVAL_AVG,
    BoundId.INDEG_SQRT,
    BoundId.HONG_YOU,
    BoundId.DEG_EXTREMES,
    BoundId.OVAL_GEOMEAN,
    BoundId.WEIGHT_SQRT_PROD,
    BoundId.WEIGHT_DEG_SUM,
    BoundId.WEIGHT_SQRT_SUM,
    BoundId.WEIGHT_SUM_SQRT,
)
ROW_ORDER = TABLE_ORDER + (BoundId.MAXDEG_PLUS_2,)


DESCRIPTIONS = {
    BoundId.ARC_DEG_SUM: "max over arcs (i,j) of d(i) + d(j)",
    BoundId.DEG_PLUS_AVG: "max over vertices of d(i) + m(i)",
    BoundId.OVAL_AVG: "max over arcs of (d(i)+d(j)+sqrt((d(i)-d(j))^2+4 m(i) m(j)))/2",
    BoundId.INDEG_SQRT: "max over vertices of d(i) + sqrt(sum of d(j) over in-neighbors j)",
    BoundId.HONG_YOU: "min over sorted-outdegree positions of a quadratic-root expression",
    BoundId.DEG_EXTREMES: "larger of two expressions in max/min outdegree, m and n",
    BoundId.OVAL_GEOMEAN: "max over arcs of (d(i)+d(j)+sqrt((d(i)-d(j))^2+4 sqrt(t(i) t(j))))/2",
    BoundId.GENERIC_WEIGHT: "max over arcs of (row sums of a positive arc weight) / weight",
    BoundId.WEIGHT_SQRT_PROD: "arc-weight bound specialised to f = sqrt(d(i) d(j))",
    BoundId.WEIGHT_DEG_SUM: "arc-weight bound specialised to f = d(i) + d(j)",
    BoundId.WEIGHT_SQRT_SUM: "arc-weight bound specialised to f = sqrt(d(i) + d(j))",
    BoundId.WEIGHT_SUM_SQRT: "arc-weight bound specialised to f = sqrt(d(i)) + sqrt(d(j))",
    BoundId.MAXDEG_PLUS_2: "max outdegree + 2, under the g-star style hypotheses",
}


ArcWeightFunction = Callable[[int, int], float]


@dataclass(frozen=True)
class BoundValue:
    """Evaluated bound: either a finite nonnegative value with an optional
    witness, or inapplicable with a reason.

    witness is the arc (i, j) for arc-maximum bounds, the vertex for
    vertex-maximum bounds, and the 0-based position into the
    non-increasing outdegree sort for hong_you. Ties resolve to the
    lexicographically first arc / smallest vertex / smallest position.
    """

    id: BoundId
    value: float | None
    reason: str | None = None
    witness: object = None

    def __post_init__(self):
        if self.value is None:
            if not self.reason:
                raise ValueError(f"inapplicable bound {self.id} needs a reason")
        else:
            if not math.isfinite(self.value) or self.value < 0:
                raise ValueError(
                    f"bound {self.id} produced a non-finite or negative value "
                    f"{self.value}"
                )

    @property
    def applicable(self) -> bool:
        return self.value is not None


_NOT_SC = "not strongly connected"
_NEEDS_N3 = "needs at least 3 vertices"


@dataclass
class _Ctx:
    g: Digraph
    arcs: list
    out: list
    into: list
    outdeg: tuple
    two_outdeg: tuple
    max_outdeg: int
    min_outdeg: int
    strongly_connected: bool


def _make_ctx(g: Digraph) -> _Ctx:
    out, into = adjacency(g)
    profile = degree_profile(g)
    return _Ctx(
        g=g,
        arcs=g.sorted_arcs(),
        out=out,
        into=into,
        outdeg=profile.outdeg,
        two_outdeg=profile.two_outdeg,
        max_outdeg=profile.max_outdeg,
        min_outdeg=profile.min_outdeg,
        strongly_connected=is_strongly_connected(g),
    )


def _arc_max(ctx: _Ctx, term) -> tuple:
    """Maximize an arc term over sorted arcs; first maximizer wins ties."""
    best = None
    witness = None
    for i, j in ctx.arcs:
        value = term(ctx, i, j)
        if best is None or value > best:
            best = value
            witness = (i, j)
    return best, witness


# --- per-element terms, shared by the bound evaluators and witness replay ---


def _term_arc_deg_sum(ctx, i, j):
    return float(ctx.outdeg[i] + ctx.outdeg[j])


def _term_deg_plus_avg(ctx, i):
    return ctx.outdeg[i] + ctx.two_outdeg[i] / ctx.outdeg[i]


def _term_oval_avg(ctx, i, j):
    d, t = ctx.outdeg, ctx.two_outdeg
    mi = t[i] / d[i]
    mj = t[j] / d[j]
    return (d[i] + d[j] + math.sqrt((d[i] - d[j]) ** 2 + 4.0 * mi * mj)) / 2.0


def _term_indeg_sqrt(ctx, i):
    insum = sum(ctx.outdeg[j] for j in ctx.into[i])
    return ctx.outdeg[i] + math.sqrt(insum)


def _hong_you_term(sorted_degs, prefix, pos):
    """Term at 0-based position pos of the non-increasing outdegree sort;
    prefix[pos] is the sum of the first pos entries."""
    d1 = sorted_degs[0]
    di = sorted_degs[pos]
    surplus = prefix[pos] - pos * di  # sum of (d_k - d_i) over k before pos
    return (
        d1 + 2 * di - 1 + math.sqrt((2 * di - d1 + 1) ** 2 + 8 * surplus)
    ) / 2.0


def _term_oval_geomean(ctx, i, j):
    d, t = ctx.outdeg, ctx.two_outdeg
    # d(i) m(i) = t(i), so the geometric-mean radicand is sqrt(t(i) t(j))
    inner = math.sqrt(t[i]) * math.sqrt(t[j])
    return (d[i] + d[j] + math.sqrt((d[i] - d[j]) ** 2 + 4.0 * inner)) / 2.0


def _term_weight_sqrt_prod(ctx, i, j):
    d, t = ctx.outdeg, ctx.two_outdeg
    mi = t[i] / d[i]
    mj = t[j] / d[j]
    return d[i] * math.sqrt(mi / d[j]) + d[j] * math.sqrt(mj / d[i])


def _term_weight_deg_sum(ctx, i, j):
    d, t = ctx.outdeg, ctx.two_outdeg
    # integer numerator and denominator: d(i)(d(i)+m(i)) = d(i)^2 + t(i)
    return (d[i] * d[i] + t[i] + d[j] * d[j] + t[j]) / (d[i] + d[j])


def _term_weight_sqrt_sum(ctx, i, j):
    d, t = ctx.outdeg, ctx.two_outdeg
    mi = t[i] / d[i]
    mj = t[j] / d[j]
    return (
        d[i] * math.sqrt(d[i] + mi) + d[j] * math.sqrt(d[j] + mj)
    ) / math.sqrt(d[i] + d[j])


def _term_weight_sum_sqrt(ctx, i, j):
    d, t = ctx.outdeg, ctx.two_outdeg
    mi = t[i] / d[i]
    mj = t[j] / d[j]
    return (
        d[i] * (math.sqrt(d[i]) + math.sqrt(mi))
        + d[j] * (math.sqrt(d[j]) + math.sqrt(mj))
    ) / (math.sqrt(d[i]) + math.sqrt(d[j]))


# --- bound evaluators -------------------------------------------------------


def _eval_arc_deg_sum(ctx: _Ctx) -> BoundValue:
    if not ctx.strongly_connected:
        return BoundValue(BoundId.ARC_DEG_SUM, None, _NOT_SC)
    value, witness = _arc_max(ctx, _term_arc_deg_sum)
    return BoundValue(BoundId.ARC_DEG_SUM, value, witness=witness)


def _eval_deg_plus_avg(ctx: _Ctx) -> BoundValue:
    best = None
    witness = None
    for i in range(ctx.g.n):
        if ctx.outdeg[i] == 0:
            continue  # m(i) undefined; the max runs over the rest
        value = _term_deg_plus_avg(ctx, i)
        if best is None or value > best:
            best = value
            witness = i
    if best is None:
        raise RuntimeError("digraph with arcs but no positive outdegree")
    return BoundValue(BoundId.DEG_PLUS_AVG, best, witness=witness)


def _eval_oval_avg(ctx: _Ctx) -> BoundValue:
    if not ctx.strongly_connected:
        return BoundValue(BoundId.OVAL_AVG, None, _NOT_SC)
    value, witness = _arc_max(ctx, _term_oval_avg)
    return BoundValue(BoundId.OVAL_AVG, value, witness=witness)


def _eval_indeg_sqrt(ctx: _Ctx) -> BoundValue:
    if not ctx.strongly_connected:
        return BoundValue(BoundId.INDEG_SQRT, None, _NOT_SC)
    best = None
    witness = None
    for i in range(ctx.g.n):
        value = _term_indeg_sqrt(ctx, i)
        if best is None or value > best:
            best = value
            witness = i
    return BoundValue(BoundId.INDEG_SQRT, best, witness=witness)


def _eval_hong_you(ctx: _Ctx) -> BoundValue:
    degs = sorted(ctx.outdeg, reverse=True)
    prefix = [0]
    for d in degs:
        prefix.append(prefix[-1] + d)
    best = None
    witness = None
    for pos in range(len(degs)):
        value = _hong_you_term(degs, prefix, pos)
        if best is None or value < best:
            best = value
            witness = pos
    return BoundValue(BoundId.HONG_YOU, best, witness=witness)


def _eval_deg_extremes(ctx: _Ctx) -> BoundValue:
    if not ctx.strongly_connected:
        return BoundValue(BoundId.DEG_EXTREMES, None, _NOT_SC)
    if ctx.g.n < 3:
        return BoundValue(BoundId.DEG_EXTREMES, None, _NEEDS_N3)
    n, m = ctx.g.n, ctx.g.m
    hi, lo = ctx.max_outdeg, ctx.min_outdeg
    surplus = m - lo * (n - 1)
    value = max(hi + lo - 1 + surplus / hi, lo + 1 + surplus / 2)
    return BoundValue(BoundId.DEG_EXTREMES, value)


def _eval_maxdeg_plus_2(ctx: _Ctx) -> BoundValue:
    bid = BoundId.MAXDEG_PLUS_2
    if not ctx.strongly_connected:
        return BoundValue(bid, None, _NOT_SC)
    if ctx.g.n < 3:
        return BoundValue(bid, None, _NEEDS_N3)
    if ctx.min_outdeg != 1:
        return BoundValue(bid, None, f"min outdegree is {ctx.min_outdeg}, needs 1")
    threshold = (ctx.g.m - (ctx.g.n - 1)) / 2
    if ctx.max_outdeg < threshold:
        return BoundValue(
            bid, None,
            f"max outdegree {ctx.max_outdeg} below (m-(n-1))/2 = {threshold}",
        )
    return BoundValue(bid, float(ctx.max_outdeg + 2))


def _eval_oval_geomean(ctx: _Ctx) -> BoundValue:
    if not ctx.strongly_connected:
        return BoundValue(BoundId.OVAL_GEOMEAN, None, _NOT_SC)
    value, witness = _arc_max(ctx, _term_oval_geomean)
    return BoundValue(BoundId.OVAL_GEOMEAN, value, witness=witness)


def _heads_with_zero_outdeg(ctx: _Ctx):
    return sorted({j for _, j in ctx.arcs if ctx.outdeg[j] == 0})


def _eval_weight_family(ctx: _Ctx, bid: BoundId, term) -> BoundValue:
    zero_heads = _heads_with_zero_outdeg(ctx)
    if zero_heads:
        return BoundValue(
            bid, None,
            f"arc head {zero_heads[0]} has outdegree 0, so its average "
            f"2-outdegree is undefined",
        )
    value, witness = _arc_max(ctx, term)
    return BoundValue(bid, value, witness=witness)


def _eval_weight_sqrt_prod(ctx):
    return _eval_weight_family(ctx, BoundId.WEIGHT_SQRT_PROD, _term_weight_sqrt_prod)


def _eval_weight_deg_sum(ctx):
    return _eval_weight_family(ctx, BoundId.WEIGHT_DEG_SUM, _term_weight_deg_sum)


def _eval_weight_sqrt_sum(ctx):
    return _eval_weight_family(ctx, BoundId.WEIGHT_SQRT_SUM, _term_weight_sqrt_sum)


def _eval_weight_sum_sqrt(ctx):
    return _eval_weight_family(ctx, BoundId.WEIGHT_SUM_SQRT, _term_weight_sum_sqrt)


_EVALUATORS = {
    BoundId.ARC_DEG_SUM: _eval_arc_deg_sum,
    BoundId.DEG_PLUS_AVG: _eval_deg_plus_avg,
    BoundId.OVAL_AVG: _eval_oval_avg,
    BoundId.INDEG_SQRT: _eval_indeg_sqrt,
    BoundId.HONG_YOU: _eval_hong_you,
    BoundId.DEG_EXTREMES: _eval_deg_extremes,
    BoundId.OVAL_GEOMEAN: _eval_oval_geomean,
    BoundId.WEIGHT_SQRT_PROD: _eval_weight_sqrt_prod,
    BoundId.WEIGHT_DEG_SUM: _eval_weight_deg_sum,
    BoundId.WEIGHT_SQRT_SUM: _eval_weight_sqrt_sum,
    BoundId.WEIGHT_SUM_SQRT: _eval_weight_sum_sqrt,
    BoundId.MAXDEG_PLUS_2: _eval_maxdeg_plus_2,
}


# --- public API -------------------------------------------------------------


def bound_arc_deg_sum(g: Digraph) -> BoundValue:
    """Max of d(i) + d(j) over arcs (i, j); needs strong connectivity."""
    return _eval_arc_deg_sum(_make_ctx(g))


def bound_deg_plus_avg(g: Digraph) -> BoundValue:
    """Max of d(i) + m(i) over vertices with positive outdegree."""
    return _eval_deg_plus_avg(_make_ctx(g))


def bound_oval_avg(g: Digraph) -> BoundValue:
    """Max over arcs of (d(i)+d(j)+sqrt((d(i)-d(j))^2 + 4 m(i) m(j))) / 2."""
    return _eval_oval_avg(_make_ctx(g))


def bound_indeg_sqrt(g: Digraph) -> BoundValue:
    """Max over vertices of d(i) + sqrt(sum of in-neighbor outdegrees)."""
    return _eval_indeg_sqrt(_make_ctx(g))


def bound_hong_you(g: Digraph) -> BoundValue:
    """Min over positions of the sorted outdegree sequence d_1 >= ... >= d_n
    of (d_1 + 2 d_i - 1 + sqrt((2 d_i - d_1 + 1)^2 + 8 sum_{k<i}(d_k - d_i))) / 2."""
    return _eval_hong_you(_make_ctx(g))


def bound_deg_extremes(g: Digraph) -> BoundValue:
    """max(D + d - 1 + (m - d(n-1))/D, d + 1 + (m - d(n-1))/2) where D and d
    are the max and min outdegree; strongly connected, n >= 3."""
    return _eval_deg_extremes(_make_ctx(g))


def bound_maxdeg_plus_2(g: Digraph) -> BoundValue:
    """Max outdegree + 2; needs strong connectivity, n >= 3, min outdegree
    exactly 1, and max outdegree at least (m - (n-1)) / 2."""
    return _eval_maxdeg_plus_2(_make_ctx(g))


def bound_oval_geomean(g: Digraph) -> BoundValue:
    """Like bound_oval_avg with the product m(i) m(j) relaxed to the
    geometric-mean form sqrt(d(i) m(i)) sqrt(d(j) m(j)) = sqrt(t(i) t(j))."""
    return _eval_oval_geomean(_make_ctx(g))


def bound_generic_f(g: Digraph, f: ArcWeightFunction) -> BoundValue:
    """Arc-weight bound: max over arcs (i, j) of (F(i) + F(j)) / f(i, j),
    where F(v) = sum of f(v, k) over out-neighbors k of v.

    f must be positive and finite on every arc; that is checked up front
    and violations raise ValueError. Values of f off the arc set never
    enter the computation. The bound is scale-invariant in f and collapses
    to bound_arc_deg_sum when f is constant.
    """
    ctx = _make_ctx(g)
    weights = {}
    for i, j in ctx.arcs:
        w = float(f(i, j))
        if not math.isfinite(w) or w <= 0.0:
            raise ValueError(
                f"arc weight function must be positive and finite on every "
                f"arc; got f({i}, {j}) = {w}"
            )
        weights[i, j] = w
    row = [0.0] * g.n
    for v in range(g.n):
        row[v] = sum(weights[v, k] for k in ctx.out[v])
    best = None
    witness = None
    for i, j in ctx.arcs:
        value = (row[i] + row[j]) / weights[i, j]
        if best is None or value > best:
            best = value
            witness = (i, j)
    return BoundValue(BoundId.GENERIC_WEIGHT, best, witness=witness)


def bound_weight_sqrt_prod(g: Digraph) -> BoundValue:
    """Arc-weight bound closed form for f = sqrt(d(i) d(j)):
    max over arcs of d(i) sqrt(m(i)/d(j)) + d(j) sqrt(m(j)/d(i))."""
    return _eval_weight_sqrt_prod(_make_ctx(g))


def bound_weight_deg_sum(g: Digraph) -> BoundValue:
    """Arc-weight bound closed form for f = d(i) + d(j):
    max over arcs of (d(i)(d(i)+m(i)) + d(j)(d(j)+m(j))) / (d(i)+d(j)).
    This one is the exact arc-weight value, not a relaxation."""
    return _eval_weight_deg_sum(_make_ctx(g))


def bound_weight_sqrt_sum(g: Digraph) -> BoundValue:
    """Arc-weight bound closed form for f = sqrt(d(i) + d(j))."""
    return _eval_weight_sqrt_sum(_make_ctx(g))


def bound_weight_sum_sqrt(g: Digraph) -> BoundValue:
    """Arc-weight bound closed form for f = sqrt(d(i)) + sqrt(d(j))."""
    return _eval_weight_sum_sqrt(_make_ctx(g))


def all_bounds(g: Digraph) -> tuple:
    """Evaluate the full comparison row in ROW_ORDER.

    Per-bound hypothesis failures surface as inapplicable entries, never
    exceptions, so the row always has all twelve columns.
    """
    ctx = _make_ctx(g)
    return tuple(_EVALUATORS[bid](ctx) for bid in ROW_ORDER)


def witness_value(g: Digraph, bv: BoundValue) -> float | None:
    """Recompute the term the witness claims attains the bound.

    Returns None for bounds without witness semantics (deg_extremes,
    maxdeg_plus_2) and for inapplicable values. The replay runs the same
    code path as the evaluator, so a valid witness reproduces the stored
    value exactly.
    """
    if bv.value is None or bv.witness is None:
        return None
    ctx = _make_ctx(g)
    arc_terms = {
        BoundId.ARC_DEG_SUM: _term_arc_deg_sum,
        BoundId.OVAL_AVG: _term_oval_avg,
        BoundId.OVAL_GEOMEAN: _term_oval_geomean,
        BoundId.WEIGHT_SQRT_PROD: _term_weight_sqrt_prod,
        BoundId.WEIGHT_DEG_SUM: _term_weight_deg_sum,
        BoundId.WEIGHT_SQRT_SUM: _term_weight_sqrt_sum,
        BoundId.WEIGHT_SUM_SQRT: _term_weight_sum_sqrt,
    }
    if bv.id in arc_terms:
        i, j = bv.witness
        return arc_terms[bv.id](ctx, i, j)
    if bv.id == BoundId.DEG_PLUS_AVG:
        return _term_deg_plus_avg(ctx, bv.witness)
    if bv.id == BoundId.INDEG_SQRT:
        return _term_indeg_sqrt(ctx, bv.witness)
    if bv.id == BoundId.HONG_YOU:
        degs = sorted(ctx.outdeg, reverse=True)
        prefix = [0]
        for d in degs:
            prefix.append(prefix[-1] + d)
        return _hong_you_term(degs, prefix, bv.witness)
    return None
