"""Colouring algorithms: random palettes, resampling rounds, and endgames.

A colouring is d-defective when every vertex lies in at most d
monochromatic edges.  The engine offers five modes:

* ``theorem``       rounds of random colouring with a fixed geometric
                    palette schedule and a halving degree guarantee;
* ``adaptive``      the same round structure, but each round searches for
                    the smallest palette that works;
* ``naive-lll``     one-shot random colouring of a linear hypergraph with
                    resampling until no vertex is over budget;
* ``graph-maxcut``  the exact graph-case construction via the local-search
                    partition (2-uniform only);
* ``greedy-proper`` a deterministic proper colouring, always valid.

Rounds resample with a Moser-Tardos flavour: pick the lowest-index
"terrible" vertex and redraw the colours of its closed second
neighbourhood, the full variable support of the event being violated.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace

import numpy as np

from .hypergraph import Hypergraph

__all__ = [
    "MODES",
    "Colouring",
    "RoundTrace",
    "EngineConfig",
    "EngineResult",
    "BudgetExhaustedError",
    "default_budget",
    "uniform_colouring",
    "mono_degree",
    "classify",
    "closed_second_neighbourhood",
    "nibble_round",
    "nibble_colouring",
    "adaptive_colouring",
    "linear_lll_colouring",
    "graph_maxcut_colouring",
    "greedy_proper",
    "run_engine",
]

MODES = ("theorem", "adaptive", "naive-lll", "graph-maxcut", "greedy-proper")

# Degree bound below which the round machinery is pointless and an exact
# endgame (single colour or greedy proper) takes over.
SMALL_DEGREE_CUTOFF = 8


class BudgetExhaustedError(RuntimeError):
    """Resampling did not reach a good colouring within its budget."""


def default_budget(n: int) -> int:
    """Default resample budget for one round: 1000 per vertex."""
    return max(1, 1000 * n)


@dataclass(frozen=True)
class Colouring:
    """A (possibly partial) assignment of colours out of a declared palette."""

    colours: tuple[int | None, ...]
    num_colours: int

    def __post_init__(self) -> None:
        for v, c in enumerate(self.colours):
            if c is not None and not 0 <= c < self.num_colours:
                raise ValueError(f"vertex {v} has colour {c}, outside palette 0..{self.num_colours - 1}")

    @property
    def is_total(self) -> bool:
        return all(c is not None for c in self.colours)

    def distinct_used(self) -> int:
        return len({c for c in self.colours if c is not None})

    def uncoloured(self) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.colours) if c is None)


@dataclass(frozen=True)
class RoundTrace:
    """Audit record for one engine round (or endgame step)."""

    index: int
    kind: str  # "nibble" | "single" | "greedy" | "lll" | "maxcut"
    palette_size: int
    palette_start: int
    degree_bound: float
    resamples: int
    residual_size: int
    succeeded: bool
    probes: int = 1  # nibble attempts made for this round, failures included


@dataclass(frozen=True)
class EngineConfig:
    mode: str
    defect: int
    seed: int = 0
    budget: int | None = None
    terrible_threshold: float | None = None

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}, expected one of {MODES}")
        if self.defect < 0:
            raise ValueError(f"defect must be >= 0, got {self.defect}")
        if self.budget is not None and self.budget < 1:
            raise ValueError(f"budget must be >= 1, got {self.budget}")


@dataclass(frozen=True)
class EngineResult:
    mode: str
    colouring: Colouring
    traces: tuple[RoundTrace, ...]


# -- elementary operations ----------------------------------------------------


def uniform_colouring(hg: Hypergraph, k: int, seed: int = 0) -> Colouring:
    """Independent uniform colour draws for every vertex."""
    if k < 1:
        raise ValueError(f"palette must have >= 1 colours, got {k}")
    rng = np.random.default_rng(seed)
    draws = rng.integers(0, k, size=hg.n)
    return Colouring(tuple(int(c) for c in draws), k)


def mono_degree(hg: Hypergraph, colouring: Colouring, v: int) -> int:
    """Number of edges through v whose vertices all share v's colour.

    Edges with any uncoloured vertex never count.

    Raises:
        ValueError: if v itself is uncoloured.
    """
    cols = colouring.colours
    cv = cols[v]
    if cv is None:
        raise ValueError(f"vertex {v} is uncoloured")
    count = 0
    for idx in hg.incident(v):
        if all(cols[w] == cv for w in hg.edges[idx]):
            count += 1
    return count


def classify(
    hg: Hypergraph,
    colouring: Colouring,
    d: int,
    bad_edge_threshold: float | None = None,
) -> tuple[set[int], set[int]]:
    """Split vertices into bad and terrible under a total colouring.

    A vertex is bad when its monochromatic degree is at least d+1.  An
    edge is bad when every one of its vertices is bad (it need not be
    monochromatic itself).  A vertex is terrible when it lies in strictly
    more bad edges than the threshold, which defaults to 2^(-r) * max
    degree with r = u-1.

    Returns:
        (bad vertices, terrible vertices)
    """
    if not colouring.is_total:
        raise ValueError("classification needs a total colouring")
    if bad_edge_threshold is None:
        bad_edge_threshold = hg.max_degree * 2.0 ** -(hg.u - 1)

    cols = colouring.colours
    mono = [0] * hg.n
    for e in hg.edges:
        c0 = cols[e[0]]
        if all(cols[w] == c0 for w in e[1:]):
            for w in e:
                mono[w] += 1
    bad = {v for v in range(hg.n) if mono[v] >= d + 1}

    bad_edge_count = [0] * hg.n
    for e in hg.edges:
        if all(w in bad for w in e):
            for w in e:
                bad_edge_count[w] += 1
    terrible = {v for v in range(hg.n) if bad_edge_count[v] > bad_edge_threshold}
    return bad, terrible


def closed_second_neighbourhood(hg: Hypergraph, v: int) -> tuple[int, ...]:
    """All vertices within hypergraph distance 2 of v, v included."""
    nbr = hg.neighbour_sets()
    first = set(nbr[v])
    first.add(v)
    second = set(first)
    for w in first:
        second |= nbr[w]
    return tuple(sorted(second))


# -- vectorised resampling state ----------------------------------------------


def _edge_array(hg: Hypergraph) -> np.ndarray:
    if hg.m:
        return np.asarray(hg.edges, dtype=np.int64)
    return np.empty((0, hg.u), dtype=np.int64)


def _classify_arrays(
    colours: np.ndarray, edges: np.ndarray, n: int, d: int, threshold: float
) -> tuple[np.ndarray, np.ndarray]:
    """(bad mask, terrible mask) for the current colour vector."""
    if edges.shape[0]:
        ec = colours[edges]
        mono = (ec == ec[:, :1]).all(axis=1)
        mono_deg = np.bincount(edges[mono].ravel(), minlength=n)
        bad = mono_deg >= d + 1
        bad_edge = bad[edges].all(axis=1)
        bad_count = np.bincount(edges[bad_edge].ravel(), minlength=n)
    else:
        bad = np.zeros(n, dtype=bool)
        bad_count = np.zeros(n, dtype=np.int64)
    return bad, bad_count > threshold


def nibble_round(
    hg: Hypergraph,
    d: int,
    k: int,
    threshold: float | None = None,
    budget: int | None = None,
    seed: int = 0,
) -> tuple[Colouring, tuple[int, ...] | None, RoundTrace]:
    """One random-colouring round with terrible-vertex resampling.

    Draws a uniform k-colouring, then, while any terrible vertex exists
    and budget remains, redraws the colours of the closed second
    neighbourhood of the lowest-index terrible one.  On success all bad
    vertices are uncoloured; the remaining coloured vertices have mono
    degree at most d and the residual (uncoloured) set induces a
    subhypergraph of max degree at most the threshold.

    Returns:
        (colouring, residual, trace).  On success the colouring is
        partial and the residual lists the uncoloured vertices; on budget
        exhaustion the trace carries succeeded=False, the colouring is
        the last total draw, and the residual is None.
    """
    if k < 1:
        raise ValueError(f"palette must have >= 1 colours, got {k}")
    if d < 0:
        raise ValueError(f"defect must be >= 0, got {d}")
    if threshold is None:
        threshold = hg.max_degree * 2.0 ** -(hg.u - 1)
    if budget is None:
        budget = default_budget(hg.n)

    rng = np.random.default_rng(seed)
    colours = rng.integers(0, k, size=hg.n, dtype=np.int64)
    edges = _edge_array(hg)
    support_cache: dict[int, np.ndarray] = {}
    resamples = 0

    while True:
        bad, terrible = _classify_arrays(colours, edges, hg.n, d, threshold)
        if not terrible.any():
            assignment = tuple(None if bad[v] else int(colours[v]) for v in range(hg.n))
            residual = tuple(int(v) for v in np.flatnonzero(bad))
            trace = RoundTrace(
                index=0,
                kind="nibble",
                palette_size=k,
                palette_start=0,
                degree_bound=float(hg.max_degree),
                resamples=resamples,
                residual_size=len(residual),
                succeeded=True,
            )
            return Colouring(assignment, k), residual, trace
        if resamples >= budget or k == 1:
            # k == 1: redrawing from a one-colour palette changes nothing,
            # so a terrible vertex now is a terrible vertex forever.
            trace = RoundTrace(
                index=0,
                kind="nibble",
                palette_size=k,
                palette_start=0,
                degree_bound=float(hg.max_degree),
                resamples=resamples,
                residual_size=0,
                succeeded=False,
            )
            return Colouring(tuple(int(c) for c in colours), k), None, trace
        target = int(np.argmax(terrible))
        support = support_cache.get(target)
        if support is None:
            support = np.asarray(closed_second_neighbourhood(hg, target), dtype=np.int64)
            support_cache[target] = support
        colours[support] = rng.integers(0, k, size=support.shape[0])
        resamples += 1


# -- full pipelines -----------------------------------------------------------


def _apply_partial(
    out: list[int | None],
    alive: list[int],
    partial: Colouring,
    offset: int,
) -> None:
    for local, c in enumerate(partial.colours):
        if c is not None:
            out[alive[local]] = offset + c


def _single_colour_endgame(
    out: list[int | None], alive: list[int], offset: int, index: int, bound: float
) -> RoundTrace:
    for v in alive:
        out[v] = offset
    return RoundTrace(index, "single", 1, offset, bound, 0, 0, True)


def _greedy_endgame(
    out: list[int | None],
    alive: list[int],
    current: Hypergraph,
    offset: int,
    index: int,
    bound: float,
) -> RoundTrace:
    sub = greedy_proper(current)
    for local, c in enumerate(sub.colours):
        out[alive[local]] = offset + c
    return RoundTrace(index, "greedy", sub.num_colours, offset, bound, 0, 0, True)


def nibble_colouring(
    hg: Hypergraph,
    d: int,
    seed: int = 0,
    budget: int | None = None,
) -> tuple[Colouring, tuple[RoundTrace, ...]]:
    """Round-based colouring on the fixed geometric palette schedule.

    Round i colours the residual of round i-1 with a fresh palette of
    k_i = floor(49 * (D_i / (d+1))^(1/r)) colours, where D_i is the
    halving degree bound 2^(-r*i) * max_degree and r = u-1.  Because
    palettes never overlap, a monochromatic edge lives entirely inside
    one round's graph, so per-round defect guarantees survive into the
    final total colouring.  When the bound drops to max(d, 8), or the
    formula palette collapses below 2, an exact endgame finishes: one
    fresh colour if the residual's degree is at most d, else a greedy
    proper colouring.

    Failed rounds escalate by doubling k up to 5 times, then fall back to
    the greedy endgame; validity is never at stake, only colour count.
    """
    if hg.u < 2:
        raise ValueError("round colouring needs uniformity >= 2")
    if d < 0:
        raise ValueError(f"defect must be >= 0, got {d}")

    master = random.Random(seed)
    r = hg.u - 1
    out: list[int | None] = [None] * hg.n
    traces: list[RoundTrace] = []
    alive = list(range(hg.n))
    current = hg
    bound = float(hg.max_degree)
    offset = 0
    round_idx = 0

    while alive:
        actual = current.max_degree
        if actual <= d:
            traces.append(_single_colour_endgame(out, alive, offset, round_idx, bound))
            offset += 1
            break
        k = math.floor(49.0 * (bound / (d + 1)) ** (1.0 / r))
        if bound <= max(d, SMALL_DEGREE_CUTOFF) or k < 2:
            trace = _greedy_endgame(out, alive, current, offset, round_idx, bound)
            traces.append(trace)
            offset += trace.palette_size
            break

        threshold = bound * 2.0 ** -r
        partial = residual = None
        trace = None
        k_try = k
        attempts = 0
        for attempts in range(1, 7):  # the first try plus up to 5 doublings
            partial, residual, trace = nibble_round(
                current, d, k_try, threshold, budget, master.getrandbits(63)
            )
            if trace.succeeded:
                break
            k_try *= 2
        if not trace.succeeded:
            trace = _greedy_endgame(out, alive, current, offset, round_idx, bound)
            traces.append(replace(trace, probes=attempts))
            offset += trace.palette_size
            break

        _apply_partial(out, alive, partial, offset)
        traces.append(
            replace(
                trace,
                index=round_idx,
                palette_start=offset,
                degree_bound=bound,
                probes=attempts,
            )
        )
        offset += partial.num_colours
        if residual:
            current, idx_map = current.induced(residual)
            alive = [alive[old] for old in idx_map]
        else:
            alive = []
        bound *= 2.0 ** -r
        round_idx += 1

    return Colouring(tuple(out), offset), tuple(traces)


def adaptive_colouring(
    hg: Hypergraph,
    d: int,
    seed: int = 0,
    budget: int | None = None,
) -> tuple[Colouring, tuple[RoundTrace, ...]]:
    """Round-based colouring that searches each round for a small palette.

    Same round structure as :func:`nibble_colouring`, but instead of the
    formula palette each round finds the smallest workable k by doubling
    up from 1 and then bisecting between the last failure and the first
    success.  The threshold is 2^(-r) times the residual's actual max
    degree, so degrees still at least halve per round.  If no palette up
    to twice (max degree + 1) works, a greedy proper endgame finishes the
    job; the result is always a valid d-defective total colouring.
    """
    if hg.u < 2:
        raise ValueError("round colouring needs uniformity >= 2")
    if d < 0:
        raise ValueError(f"defect must be >= 0, got {d}")

    master = random.Random(seed)
    r = hg.u - 1
    out: list[int | None] = [None] * hg.n
    traces: list[RoundTrace] = []
    alive = list(range(hg.n))
    current = hg
    offset = 0
    round_idx = 0

    while alive:
        actual = current.max_degree
        if actual <= d:
            traces.append(_single_colour_endgame(out, alive, offset, round_idx, float(actual)))
            offset += 1
            break
        if actual <= SMALL_DEGREE_CUTOFF:
            trace = _greedy_endgame(out, alive, current, offset, round_idx, float(actual))
            traces.append(trace)
            offset += trace.palette_size
            break

        threshold = actual * 2.0 ** -r
        cap = 2 * (actual + 1)  # beyond this greedy would use fewer colours anyway
        outcomes: dict[int, tuple[Colouring, tuple[int, ...]]] = {}
        probes = 0

        k = 1
        first_success = None
        while k <= cap:
            partial, residual, trace = nibble_round(
                current, d, k, threshold, budget, master.getrandbits(63)
            )
            probes += 1
            if trace.succeeded:
                first_success = k
                outcomes[k] = (partial, residual)
                success_trace = trace
                break
            k *= 2

        if first_success is None:
            trace = _greedy_endgame(out, alive, current, offset, round_idx, float(actual))
            traces.append(replace(trace, probes=probes))
            offset += trace.palette_size
            break

        lo, hi = first_success // 2 + 1, first_success
        while lo < hi:
            mid = (lo + hi) // 2
            partial, residual, trace = nibble_round(
                current, d, mid, threshold, budget, master.getrandbits(63)
            )
            probes += 1
            if trace.succeeded:
                hi = mid
                outcomes[mid] = (partial, residual)
                success_trace = trace
            else:
                lo = mid + 1

        partial, residual = outcomes[hi]
        _apply_partial(out, alive, partial, offset)
        traces.append(
            replace(
                success_trace,
                index=round_idx,
                palette_size=hi,
                palette_start=offset,
                degree_bound=float(actual),
                probes=probes,
            )
        )
        offset += hi
        if residual:
            current, idx_map = current.induced(residual)
            alive = [alive[old] for old in idx_map]
        else:
            alive = []
        round_idx += 1

    return Colouring(tuple(out), offset), tuple(traces)


def linear_lll_colouring(
    hg: Hypergraph,
    d: int,
    seed: int = 0,
    budget: int | None = None,
) -> Colouring:
    """Single-palette colouring of a linear hypergraph by resampling.

    Uses k = floor(100 * (max_degree / (d+1))^(1/r)) colours, draws all
    of them at once, and while any vertex has mono degree over d redraws
    the closed (first) neighbourhood of the lowest-index offender.  That
    neighbourhood carries every colour the offending event can read.

    Raises:
        ValueError: if the hypergraph is not linear.
        BudgetExhaustedError: if the resample budget runs out.
    """
    colouring, _ = _lll_run(hg, d, seed, budget)
    return colouring


def _lll_run(
    hg: Hypergraph,
    d: int,
    seed: int,
    budget: int | None,
) -> tuple[Colouring, RoundTrace]:
    if hg.u < 2:
        raise ValueError("needs uniformity >= 2")
    if d < 0:
        raise ValueError(f"defect must be >= 0, got {d}")
    if not hg.is_linear():
        raise ValueError("hypergraph is not linear (two edges share two or more vertices)")
    if budget is None:
        budget = default_budget(hg.n)

    r = hg.u - 1
    k = max(1, math.floor(100.0 * (hg.max_degree / (d + 1)) ** (1.0 / r)))
    rng = np.random.default_rng(seed)
    colours = rng.integers(0, k, size=hg.n, dtype=np.int64)
    edges = _edge_array(hg)
    nbr = hg.neighbour_sets()
    support_cache: dict[int, np.ndarray] = {}
    resamples = 0

    while True:
        if edges.shape[0]:
            ec = colours[edges]
            mono = (ec == ec[:, :1]).all(axis=1)
            mono_deg = np.bincount(edges[mono].ravel(), minlength=hg.n)
            bad = mono_deg >= d + 1
        else:
            bad = np.zeros(hg.n, dtype=bool)
        if not bad.any():
            trace = RoundTrace(0, "lll", k, 0, float(hg.max_degree), resamples, 0, True)
            return Colouring(tuple(int(c) for c in colours), k), trace
        if resamples >= budget or k == 1:
            raise BudgetExhaustedError(
                f"no d-defective colouring found within {budget} resamples (k={k})"
            )
        target = int(np.argmax(bad))
        support = support_cache.get(target)
        if support is None:
            closed = set(nbr[target])
            closed.add(target)
            support = np.asarray(sorted(closed), dtype=np.int64)
            support_cache[target] = support
        colours[support] = rng.integers(0, k, size=support.shape[0])
        resamples += 1


def graph_maxcut_colouring(hg: Hypergraph, d: int, seed: int = 0) -> Colouring:
    """Exact graph-case colouring with floor(max_degree/(d+1)) + 1 colours.

    The parts of a locally optimal partition become the colour classes.
    Local optimality bounds every vertex's same-part degree by
    max_degree / num_parts < d+1, so the colouring is d-defective with no
    probabilistic slack.

    Raises:
        ValueError: if the hypergraph is not 2-uniform.
    """
    from .partition import max_cut_partition

    if hg.u != 2:
        raise ValueError(f"needs a 2-uniform hypergraph, got uniformity {hg.u}")
    if d < 0:
        raise ValueError(f"defect must be >= 0, got {d}")
    num_parts = hg.max_degree // (d + 1) + 1
    partition = max_cut_partition(hg, num_parts, seed)
    return Colouring(tuple(partition.parts), num_parts)


def greedy_proper(hg: Hypergraph) -> Colouring:
    """Deterministic proper colouring with at most max_degree + 1 colours.

    Vertices are coloured in index order; a colour is forbidden for v only
    when some incident edge has all its other vertices already coloured
    with exactly that colour, so at most deg(v) colours are ever ruled out.
    """
    if hg.u == 1 and hg.m:
        raise ValueError("singleton edges are monochromatic under any colouring")
    out = [0] * hg.n
    for v in range(hg.n):
        forbidden = set()
        for idx in hg.incident(v):
            others = [w for w in hg.edges[idx] if w != v]
            if all(w < v for w in others):
                shared = out[others[0]]
                if all(out[w] == shared for w in others[1:]):
                    forbidden.add(shared)
        c = 0
        while c in forbidden:
            c += 1
        out[v] = c
    palette = max(out) + 1 if hg.n else 0
    return Colouring(tuple(out), palette)


def run_engine(hg: Hypergraph, config: EngineConfig) -> EngineResult:
    """Dispatch one colouring run according to the configuration."""
    mode, d, seed, budget = config.mode, config.defect, config.seed, config.budget
    if mode == "theorem":
        colouring, traces = nibble_colouring(hg, d, seed, budget)
        return EngineResult(mode, colouring, traces)
    if mode == "adaptive":
        colouring, traces = adaptive_colouring(hg, d, seed, budget)
        return EngineResult(mode, colouring, traces)
    if mode == "naive-lll":
        colouring, trace = _lll_run(hg, d, seed, budget)
        return EngineResult(mode, colouring, (trace,))
    if mode == "graph-maxcut":
        colouring = graph_maxcut_colouring(hg, d, seed)
        trace = RoundTrace(0, "maxcut", colouring.num_colours, 0, float(hg.max_degree), 0, 0, True)
        return EngineResult(mode, colouring, (trace,))
    if mode == "greedy-proper":
        colouring = greedy_proper(hg)
        trace = RoundTrace(0, "greedy", colouring.num_colours, 0, float(hg.max_degree), 0, 0, True)
        return EngineResult(mode, colouring, (trace,))
    raise ValueError(f"unknown mode {mode!r}")  # unreachable; EngineConfig validates
