"""Signless Laplacian of a digraph and its spectral radius.

Q(G) = D(G) + A(G) where D is the diagonal matrix of outdegrees and A the
adjacency matrix. Q is entrywise nonnegative, so its spectral radius q(G)
is a real eigenvalue (Perron-Frobenius).

The radius is computed blockwise: permuting vertices into reverse
topological SCC order makes Q block triangular, so the spectrum of Q is
the union of the spectra of the diagonal blocks Q[S] taken over the
strongly connected components S. Each block keeps the full-graph
outdegrees on its diagonal. Blocks of size one contribute their diagonal
entry directly; larger blocks are irreducible with strictly positive
diagonal, hence primitive, and power iteration started from the all-ones
vector converges with a two-sided Collatz-Wielandt enclosure.
"""

import math
from dataclasses import dataclass

import numpy as np

from .digraph import Digraph, adjacency, degree_profile, is_strongly_connected, scc


class ConvergenceError(RuntimeError):
    """Power iteration failed to reach the requested tolerance."""


# The matrix D + A itself; kept as a plain dense array, the alias just
# names the role it plays in signatures.
SignlessLaplacian = np.ndarray

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 1_000_000


@dataclass(frozen=True)
class SpectralResult:
    """q is the max over per_component block radii; residual is the worst
    final-iterate defect ||Qx - qx||_inf / ||x||_inf over the iterated
    blocks (size-one blocks are exact and contribute zero); iterations
    counts matrix-vector products across all blocks."""

    q: float
    residual: float
    iterations: int
    per_component: tuple


def build_q(g: Digraph) -> SignlessLaplacian:
    """Dense signless Laplacian D + A as a float array."""
    q = np.zeros((g.n, g.n))
    for i, j in g.arcs:
        q[i, j] = 1.0
        q[i, i] += 1.0
    return q


def row_sum_bracket(matrix) -> tuple:
    """(min, max) row sum of a nonnegative matrix; these bracket the
    spectral radius, with equality throughout iff all row sums agree."""
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square matrix")
    if (m < 0).any():
        raise ValueError("matrix must be entrywise nonnegative")
    sums = m.sum(axis=1)
    return float(sums.min()), float(sums.max())


def _power_iteration(block: np.ndarray, tol: float, max_iter: int):
    """Collatz-Wielandt power iteration on a primitive nonnegative block.

    The iterate stays strictly positive (positive diagonal), so
    lo = min_i (Bx)_i / x_i and hi = max_i (Bx)_i / x_i enclose the
    spectral radius; hi is non-increasing and lo non-decreasing. Stop
    when hi - lo <= tol and report the midpoint.
    """
    x = np.ones(block.shape[0])
    for iteration in range(1, max_iter + 1):
        y = block @ x
        ratios = y / x
        hi = float(ratios.max())
        lo = float(ratios.min())
        if hi - lo <= tol:
            rho = 0.5 * (hi + lo)
            residual = float(np.abs(y - rho * x).max() / np.abs(x).max())
            return rho, residual, iteration
        x = y / y.max()  # entries are positive, so max() is the sup norm
    raise ConvergenceError(
        f"power iteration did not close a two-sided gap of {tol} within "
        f"{max_iter} iterations (block size {block.shape[0]})"
    )


def spectral_radius(g: Digraph, tol: float = DEFAULT_TOL,
                    max_iter: int = DEFAULT_MAX_ITER) -> SpectralResult:
    """Spectral radius of Q(G) via per-SCC power iteration."""
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be at least 1, got {max_iter}")
    q_matrix = build_q(g)
    decomposition = scc(g)
    per_component = []
    total_iterations = 0
    worst_residual = 0.0
    for cid, comp in enumerate(decomposition.components):
        if len(comp) == 1:
            v = comp[0]
            value = float(q_matrix[v, v])
        else:
            block = q_matrix[np.ix_(comp, comp)]
            value, block_residual, block_iterations = _power_iteration(
                block, tol, max_iter
            )
            total_iterations += block_iterations
            worst_residual = max(worst_residual, block_residual)
        per_component.append((cid, value))
    return SpectralResult(
        q=max(value for _, value in per_component),
        residual=worst_residual,
        iterations=total_iterations,
        per_component=tuple(per_component),
    )


_SIMILARITY_KINDS = ("plain_Q", "deg_inverse", "deg_sqrt")


def similarity_row_sums(g: Digraph, kind: str) -> list:
    """Row sums of Q under a diagonal similarity, in closed form.

    plain_Q      -> 2 d+(i)
    deg_inverse  -> d+(i) + m+(i)            (rows of D^-1 Q D)
    deg_sqrt     -> d+(i) + sum over out-neighbors j of sqrt(d+(j)/d+(i))
                                              (rows of D^-1/2 Q D^1/2)

    The two D-inverse kinds need every outdegree positive.
    """
    if kind not in _SIMILARITY_KINDS:
        raise ValueError(f"unknown kind {kind!r}, expected one of {_SIMILARITY_KINDS}")
    profile = degree_profile(g)
    if kind == "plain_Q":
        return [2.0 * d for d in profile.outdeg]
    if profile.min_outdeg == 0:
        raise ValueError(
            f"kind {kind!r} conjugates by a power of D and needs every "
            f"outdegree positive; vertex "
            f"{profile.outdeg.index(0)} has outdegree 0"
        )
    if kind == "deg_inverse":
        return [d + t / d for d, t in zip(profile.outdeg, profile.two_outdeg)]
    out, _ = adjacency(g)
    return [
        profile.outdeg[i]
        + sum(math.sqrt(profile.outdeg[j] / profile.outdeg[i]) for j in out[i])
        for i in range(g.n)
    ]


@dataclass(frozen=True)
class OvalRegion:
    """Cassini oval |z - center_i| * |z - center_j| <= radius_i * radius_j
    attached to one arc of the degree-similarity matrix P = D^-1/2 Q D^1/2."""

    center_i: float
    center_j: float
    radius_i: float
    radius_j: float

    def contains(self, value: float, tol: float = 1e-9) -> bool:
        # Equality cases (e.g. the bidirectional star) put the spectral
        # radius exactly on the boundary, where the radius product can
        # round one ulp short; allow a small relative slack.
        lhs = abs(value - self.center_i) * abs(value - self.center_j)
        rhs = self.radius_i * self.radius_j
        return lhs <= rhs + tol * max(1.0, rhs)


@dataclass(frozen=True)
class OvalCheck:
    contained: bool
    witness_arc: tuple | None


def _deleted_row_sums_sqrt(g: Digraph):
    """Off-diagonal row sums of P = D^-1/2 Q D^1/2: sum of sqrt(d+(j)/d+(i))
    over out-neighbors j of each vertex i."""
    profile = degree_profile(g)
    out, _ = adjacency(g)
    sums = [
        sum(math.sqrt(profile.outdeg[j] / profile.outdeg[i]) for j in out[i])
        for i in range(g.n)
    ]
    return profile, sums


def oval_containment(g: Digraph, value: float) -> OvalCheck:
    """Whether value lies in the union of the per-arc Cassini ovals of
    P = D^-1/2 Q D^1/2. For a strongly connected digraph every eigenvalue
    of Q lies in that union, so the computed q must test as contained.

    The witness is the lexicographically first arc whose oval contains
    the value; membership allows the small relative slack documented on
    OvalRegion.contains.
    """
    if not is_strongly_connected(g):
        raise ValueError("oval containment needs a strongly connected digraph")
    profile, deleted = _deleted_row_sums_sqrt(g)
    for i, j in g.sorted_arcs():
        region = OvalRegion(
            center_i=float(profile.outdeg[i]),
            center_j=float(profile.outdeg[j]),
            radius_i=deleted[i],
            radius_j=deleted[j],
        )
        if region.contains(value):
            return OvalCheck(contained=True, witness_arc=(i, j))
    return OvalCheck(contained=False, witness_arc=None)
