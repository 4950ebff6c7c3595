"""Odd/even census of edge-induced subgraphs.

For a graph G and each k, O_k counts the nonempty edge subsets F whose
induced vertex set V(F) (the endpoints of F) has exactly k vertices and
|F| is odd; E_k counts those with |F| even; delta_k = O_k - E_k. The
empty edge set is excluded everywhere, so a profile's odd and even
counts always sum to 2^m - 1.

Three interchangeable engines compute the census:

* ``delta_naive``     : visits every subset independently, recomputing
                        V(F) from scratch each time (the reference
                        enumerator, deliberately unclever).
* ``delta_graycode``  : visits subsets in Gray-code order, updating
                        per-vertex incidence counts incrementally, so
                        each step costs O(1) amortized.
* ``delta_by_components``: multiplies per-component subgraph-weight
                        polynomials, so only sum(2^m_i) subsets are ever
                        enumerated instead of 2^m. Returns delta only.

All counts are plain Python integers, hence arbitrary precision end to
end. Enumeration engines may split the subset space into disjoint
contiguous rank ranges (for process parallelism capped by the
OED_THREADS environment variable); partial profiles merge by elementwise
addition, so results are identical for every degree of parallelism.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import CapError
from .graph import Graph, connected_components, induced_subgraph

EDGE_CAP = 62
IE_EDGE_CAP = 20

# Below this subset count, process startup dwarfs the work; stay serial.
_POOL_THRESHOLD = 1 << 14


@dataclass(frozen=True)
class DeltaProfile:
    """Census of a single graph: arrays indexed by vertex count k in [0, n].

    ``odd_counts`` and ``even_counts`` are None when the engine that
    produced the profile recovers only the difference (the component
    engine), never the parity split.
    """

    n: int
    odd_counts: tuple[int, ...] | None
    even_counts: tuple[int, ...] | None
    delta: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.delta) != self.n + 1:
            raise ValueError(f"delta array has length {len(self.delta)}, expected {self.n + 1}")
        if self.delta[0] != 0 or (self.n >= 1 and self.delta[1] != 0):
            raise ValueError("delta must vanish for k < 2 (an edge spans two vertices)")
        if (self.odd_counts is None) != (self.even_counts is None):
            raise ValueError("odd_counts and even_counts must be both present or both absent")
        if self.odd_counts is not None and self.even_counts is not None:
            if len(self.odd_counts) != self.n + 1 or len(self.even_counts) != self.n + 1:
                raise ValueError("count arrays must have length n + 1")
            if any(x < 0 for x in self.odd_counts) or any(x < 0 for x in self.even_counts):
                raise ValueError("subgraph counts cannot be negative")
            if any(o - e != d for o, e, d in zip(self.odd_counts, self.even_counts, self.delta)):
                raise ValueError("delta must equal odd_counts - even_counts elementwise")

    @property
    def has_parity_counts(self) -> bool:
        return self.odd_counts is not None


@dataclass(frozen=True)
class DeltaPolynomial:
    """Integer polynomial with coefficient k weighting vertex count k.

    Used both for D(x) = sum_k delta_k x^k and for its companion
    W(x) = 1 - D(x). W is multiplicative over disjoint unions, which is
    what makes the component engine correct: the vertex sets of edge
    subsets drawn from disjoint parts add, and their parities add.
    """

    coeffs: tuple[int, ...]

    def __mul__(self, other: "DeltaPolynomial") -> "DeltaPolynomial":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return DeltaPolynomial(tuple(out))

    def padded(self, length: int) -> tuple[int, ...]:
        """Coefficients extended with zeros to the given length."""
        if len(self.coeffs) > length:
            if any(self.coeffs[length:]):
                raise ValueError("cannot truncate nonzero coefficients")
            return self.coeffs[:length]
        return self.coeffs + (0,) * (length - len(self.coeffs))


def delta_polynomial(profile: DeltaProfile) -> DeltaPolynomial:
    """D(x) = sum_k delta_k x^k."""
    return DeltaPolynomial(profile.delta)


def w_polynomial(profile: DeltaProfile) -> DeltaPolynomial:
    """Companion W(x) = 1 - D(x); coefficient k counts signed subsets, empty set included."""
    coeffs = [-d for d in profile.delta]
    if not coeffs:
        coeffs = [0]
    coeffs[0] += 1
    return DeltaPolynomial(tuple(coeffs))


# ---------------------------------------------------------------------------
# range workers (module level so process pools can pickle them)


def _naive_range(n: int, endpoints: tuple[tuple[int, int], ...], lo: int, hi: int):
    """Census of subset masks in [lo, hi), each evaluated from scratch."""
    odd = [0] * (n + 1)
    even = [0] * (n + 1)
    emask = {1 << j: (1 << u) | (1 << v) for j, (u, v) in enumerate(endpoints)}
    for mask in range(lo, hi):
        s = mask
        vm = 0
        while s:
            b = s & -s
            vm |= emask[b]
            s ^= b
        if mask.bit_count() & 1:
            odd[vm.bit_count()] += 1
        else:
            even[vm.bit_count()] += 1
    return odd, even


def _gray_range(n: int, endpoints: tuple[tuple[int, int], ...], lo: int, hi: int):
    """Census of subset ranks in [lo, hi) visited in Gray-code order.

    Rank i denotes the subset gray(i) = i ^ (i >> 1). Between rank i-1
    and rank i exactly one edge flips (the lowest set bit of i), and the
    subset's edge parity equals the parity of i itself. The state (edge
    mask, per-vertex incidence counts, current |V(F)|) is derived from
    scratch for the range's first subset, then maintained incrementally.
    """
    odd = [0] * (n + 1)
    even = [0] * (n + 1)
    inc = [0] * n
    cur = lo ^ (lo >> 1)
    k = 0
    s = cur
    while s:
        b = s & -s
        s ^= b
        u, v = endpoints[b.bit_length() - 1]
        if not inc[u]:
            k += 1
        inc[u] += 1
        if not inc[v]:
            k += 1
        inc[v] += 1
    if lo:
        (odd if lo & 1 else even)[k] += 1
    elow = {1 << j: uv for j, uv in enumerate(endpoints)}
    for i in range(lo + 1, hi):
        b = i & -i
        u, v = elow[b]
        cur ^= b
        if cur & b:
            t = inc[u]
            if not t:
                k += 1
            inc[u] = t + 1
            t = inc[v]
            if not t:
                k += 1
            inc[v] = t + 1
        else:
            t = inc[u] - 1
            inc[u] = t
            if not t:
                k -= 1
            t = inc[v] - 1
            inc[v] = t
            if not t:
                k -= 1
        if i & 1:
            odd[k] += 1
        else:
            even[k] += 1
    return odd, even


# ---------------------------------------------------------------------------
# partitioning


def resolve_jobs(jobs: int | None = None) -> int:
    """Worker count: explicit argument, else OED_THREADS, else 1."""
    if jobs is None:
        raw = os.environ.get("OED_THREADS")
        if raw is None:
            return 1
        try:
            jobs = int(raw)
        except ValueError:
            raise ValueError(f"OED_THREADS must be a positive integer, got {raw!r}") from None
        if jobs < 1:
            raise ValueError(f"OED_THREADS must be a positive integer, got {raw!r}")
        return jobs
    if jobs < 1:
        raise ValueError(f"jobs must be a positive integer, got {jobs}")
    return jobs


def _split_ranges(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Split [lo, hi) into at most ``parts`` contiguous nonempty ranges."""
    total = hi - lo
    parts = max(1, min(parts, total))
    base, rem = divmod(total, parts)
    ranges = []
    start = lo
    for i in range(parts):
        stop = start + base + (1 if i < rem else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def _enumerate_census(g: Graph, worker, jobs: int | None) -> tuple[list[int], list[int]]:
    """Run a range worker over all nonempty subset ranks, merging partials."""
    n, m = g.n, g.m
    jobs = resolve_jobs(jobs)
    endpoints = tuple((e.u, e.v) for e in g.edges)
    top = 1 << m
    ranges = _split_ranges(1, top, jobs)
    if len(ranges) == 1:
        partials = [worker(n, endpoints, *ranges[0])]
    elif top - 1 < _POOL_THRESHOLD:
        partials = [worker(n, endpoints, lo, hi) for lo, hi in ranges]
    else:
        with ProcessPoolExecutor(max_workers=len(ranges)) as pool:
            futures = [pool.submit(worker, n, endpoints, lo, hi) for lo, hi in ranges]
            partials = [f.result() for f in futures]
    odd = [0] * (n + 1)
    even = [0] * (n + 1)
    for podd, peven in partials:
        for k in range(n + 1):
            odd[k] += podd[k]
            even[k] += peven[k]
    return odd, even


def _zero_profile(n: int, with_counts: bool) -> DeltaProfile:
    zeros = (0,) * (n + 1)
    counts = zeros if with_counts else None
    return DeltaProfile(n=n, odd_counts=counts, even_counts=counts, delta=zeros)


def _check_edge_cap(m: int) -> None:
    if m > EDGE_CAP:
        raise CapError(f"graph has {m} edges, enumeration engines support at most {EDGE_CAP}")


# ---------------------------------------------------------------------------
# engines


def delta_naive(g: Graph, jobs: int | None = None) -> DeltaProfile:
    """Census by plain enumeration of all 2^m - 1 nonempty edge subsets.

    Every subset is evaluated independently of enumeration order; this is
    the reference engine the others are checked against. An edgeless
    graph yields the all-zero profile.
    """
    _check_edge_cap(g.m)
    if g.m == 0:
        return _zero_profile(g.n, with_counts=True)
    odd, even = _enumerate_census(g, _naive_range, jobs)
    delta = tuple(o - e for o, e in zip(odd, even))
    return DeltaProfile(n=g.n, odd_counts=tuple(odd), even_counts=tuple(even), delta=delta)


def delta_graycode(g: Graph, jobs: int | None = None) -> DeltaProfile:
    """Census by Gray-code enumeration; output is identical to delta_naive."""
    _check_edge_cap(g.m)
    if g.m == 0:
        return _zero_profile(g.n, with_counts=True)
    odd, even = _enumerate_census(g, _gray_range, jobs)
    delta = tuple(o - e for o, e in zip(odd, even))
    return DeltaProfile(n=g.n, odd_counts=tuple(odd), even_counts=tuple(even), delta=delta)


def delta_by_components(g: Graph, jobs: int | None = None) -> DeltaProfile:
    """Census via per-component factorization of W(x) = 1 - D(x).

    Each connected component is enumerated separately (the edge cap
    applies per component, so the whole graph may exceed it) and the
    component W polynomials are multiplied. Isolated vertices contribute
    the factor 1. Only delta is recovered; the parity split is lost in
    the product, so odd/even counts are marked not computed.
    """
    w_total = DeltaPolynomial((1,))
    for comp in connected_components(g):
        if len(comp) == 1:
            continue
        sub = induced_subgraph(g, comp)
        _check_edge_cap(sub.m)
        profile = delta_graycode(sub, jobs=jobs)
        w_total = w_total * w_polynomial(profile)
    coeffs = w_total.padded(g.n + 1)
    delta = tuple(1 - coeffs[0] if k == 0 else -coeffs[k] for k in range(g.n + 1))
    return DeltaProfile(n=g.n, odd_counts=None, even_counts=None, delta=delta)


ENGINES = {
    "naive": delta_naive,
    "gray": delta_graycode,
    "components": delta_by_components,
}


def inclusion_exclusion_direct(g: Graph) -> int:
    """Literal alternating-sum evaluation of the non-cover count.

    Sums (-1)^(|F|+1) * 2^(n - |V(F)|) over every nonempty edge subset F.
    Oracle grade only: capped at 20 edges. Returns 0 for an edgeless
    graph (an empty union).
    """
    n, m = g.n, g.m
    if m == 0:
        return 0
    if m > IE_EDGE_CAP:
        raise CapError(
            f"graph has {m} edges, the direct inclusion-exclusion oracle supports at most {IE_EDGE_CAP}"
        )
    emask = {1 << j: (1 << e.u) | (1 << e.v) for j, e in enumerate(g.edges)}
    total = 0
    for mask in range(1, 1 << m):
        s = mask
        vm = 0
        while s:
            b = s & -s
            vm |= emask[b]
            s ^= b
        term = 1 << (n - vm.bit_count())
        if mask.bit_count() & 1:
            total += term
        else:
            total -= term
    return total


# ---------------------------------------------------------------------------
# serialization


def profile_to_json_dict(profile: DeltaProfile) -> dict:
    """JSON-ready form; counts rendered as base-10 strings (they can exceed 2^53)."""
    as_strings = lambda xs: None if xs is None else [str(x) for x in xs]
    return {
        "n": profile.n,
        "O": as_strings(profile.odd_counts),
        "E": as_strings(profile.even_counts),
        "delta": [str(x) for x in profile.delta],
    }
