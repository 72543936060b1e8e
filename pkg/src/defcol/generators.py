"""Instance generators: complete, axis-aligned grid, and random families.

All randomness is drawn from ``random.Random(seed)`` so that a given
(parameters, seed) pair always produces the same instance.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from .hypergraph import Hypergraph

__all__ = [
    "complete",
    "grid",
    "coords_to_index",
    "index_to_coords",
    "grid_base_degree",
    "random_bounded_degree",
    "random_linear",
]


def complete(n: int, u: int) -> Hypergraph:
    """The complete u-uniform hypergraph on n vertices: every u-set is an edge."""
    if u < 2:
        raise ValueError(f"uniformity must be >= 2, got {u}")
    if n < u:
        raise ValueError(f"need n >= u, got n={n}, u={u}")
    return Hypergraph(n, u, combinations(range(n), u))


# -- axis-aligned grid -------------------------------------------------------
#
# Vertices are the points of {1..n}^r, flattened row-major (the last
# coordinate varies fastest).  Each edge consists of a base point together
# with one point per axis obtained by increasing that single coordinate.


def coords_to_index(coords: tuple[int, ...], n: int) -> int:
    """Row-major index of a point of {1..n}^r."""
    idx = 0
    for c in coords:
        if not 1 <= c <= n:
            raise ValueError(f"coordinate {c} outside 1..{n}")
        idx = idx * n + (c - 1)
    return idx


def index_to_coords(idx: int, n: int, r: int) -> tuple[int, ...]:
    """Inverse of :func:`coords_to_index` for points of {1..n}^r."""
    if not 0 <= idx < n**r:
        raise ValueError(f"index {idx} outside 0..{n ** r - 1}")
    coords = []
    for _ in range(r):
        coords.append(idx % n + 1)
        idx //= n
    return tuple(reversed(coords))


def grid_base_degree(n: int, r: int) -> int:
    """Edges based at the all-ones corner: (n-1)^r, an upper bound witness.

    The corner point (1,...,1) is the base of exactly this many edges.  The
    true maximum degree also counts non-base roles, so callers that need a
    maximum degree should compute it from the generated instance rather
    than trust this formula.
    """
    return (n - 1) ** r


def grid(n: int, r: int) -> Hypergraph:
    """Axis grid on {1..n}^r with (r+1)-vertex edges.

    An edge is {v, v_1, ..., v_r} where v_i agrees with the base v except
    that its i-th coordinate is strictly larger.  Any r+2 vertices induce
    at most 2 edges, which keeps the instance sparse in the sense that
    matters for lower-bound experiments.

    Raises:
        ValueError: if n < 2 or r < 1 (no edges could exist).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    edges = []
    for base in product(range(1, n), repeat=r):  # all coordinates < n
        base_idx = coords_to_index(base, n)
        for bumps in product(*(range(1, n - c + 1) for c in base)):
            edge = [base_idx]
            for axis, bump in enumerate(bumps):
                shifted = list(base)
                shifted[axis] += bump
                edge.append(coords_to_index(tuple(shifted), n))
            edges.append(edge)
    return Hypergraph(n**r, r + 1, edges)


# -- random families ---------------------------------------------------------


def random_bounded_degree(
    n: int,
    u: int,
    max_degree: int,
    target_m: int,
    seed: int = 0,
) -> Hypergraph:
    """Random u-uniform hypergraph with every degree <= max_degree.

    Draws uniform u-sets and keeps one when it is new and would not push
    any member's degree over the cap.  Gives up after 10 * target_m
    attempts and returns whatever was accepted by then; the degree cap is
    a hard guarantee, the edge count is best effort.
    """
    return _rejection_sample(n, u, max_degree, target_m, seed, linear=False)


def random_linear(
    n: int,
    u: int,
    max_degree: int,
    target_m: int,
    seed: int = 0,
) -> Hypergraph:
    """Like :func:`random_bounded_degree` but the result is linear.

    A candidate edge is also rejected when it shares two or more vertices
    with an already accepted edge.
    """
    return _rejection_sample(n, u, max_degree, target_m, seed, linear=True)


def _rejection_sample(
    n: int,
    u: int,
    max_degree: int,
    target_m: int,
    seed: int,
    linear: bool,
) -> Hypergraph:
    if u < 2:
        raise ValueError(f"uniformity must be >= 2, got {u}")
    if n < u:
        raise ValueError(f"need n >= u, got n={n}, u={u}")
    if max_degree < 0 or target_m < 0:
        raise ValueError("max_degree and target_m must be non-negative")

    rng = random.Random(seed)
    degrees = [0] * n
    accepted: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    used_pairs: set[tuple[int, int]] = set()
    budget = 10 * target_m

    for _ in range(budget):
        if len(accepted) == target_m:
            break
        edge = tuple(sorted(rng.sample(range(n), u)))
        if edge in seen:
            continue
        if any(degrees[v] + 1 > max_degree for v in edge):
            continue
        if linear and any(pair in used_pairs for pair in combinations(edge, 2)):
            continue
        seen.add(edge)
        accepted.append(edge)
        for v in edge:
            degrees[v] += 1
        if linear:
            used_pairs.update(combinations(edge, 2))

    return Hypergraph(n, u, accepted)
