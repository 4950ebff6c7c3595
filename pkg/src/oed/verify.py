"""Cross-check harness: every identity the package relies on, run at desk scale.

``run_verification`` checks, per graph, that the three census engines
agree, that the census is complete (counts sum to 2^m - 1) with signed
sum 1, and that the cover count comes out identical via the census
reduction, the brute-force scan, the independent-set scan, and the
direct alternating sum. Graphs come from exhaustive enumeration of all
labeled graphs up to a small n and from seeded random sampling, so a
report is fully reproducible from (seed, parameters).

``run_bench`` times engines on one input and refuses to report numbers
unless every engine produced the identical delta array.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations

from .covers import (
    VERTEX_CAP,
    brute_force_vc_count,
    independent_set_count,
    non_cover_count,
    vc_count_reduction,
)
from .delta import (
    ENGINES,
    IE_EDGE_CAP,
    DeltaProfile,
    delta_by_components,
    delta_graycode,
    delta_naive,
    inclusion_exclusion_direct,
)
from .errors import EngineDisagreement
from .graph import Graph, connected_components, random_graph, to_edge_list

# The naive engine joins the per-graph cross-check only below this edge
# count; above it the check would dominate the run for no extra coverage.
NAIVE_CHECK_CAP = 20

EXHAUSTIVE_N_CAP = 5


@dataclass(frozen=True)
class Failure:
    """One broken identity: which graph, which pair of methods, which values."""

    graph_text: str
    methods: tuple[str, str]
    expected: str
    got: str

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph_text,
            "methods": list(self.methods),
            "expected": self.expected,
            "got": self.got,
        }


@dataclass
class VerificationReport:
    trials: int
    failures: list[Failure]
    seed: int
    wall_time: float

    @property
    def passing(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "failures": [f.to_json_dict() for f in self.failures],
            "seed": self.seed,
            "wall_time": self.wall_time,
            "passing": self.passing,
        }


def _corrupted(profile: DeltaProfile) -> DeltaProfile:
    """Deliberately wrong copy of a profile (harness self-test hook)."""
    delta = list(profile.delta)
    delta[2] += 1
    return DeltaProfile(n=profile.n, odd_counts=None, even_counts=None, delta=tuple(delta))


def check_graph(g: Graph, corrupt_profile: bool = False) -> list[Failure]:
    """Run every applicable identity on one graph; return the violations.

    With ``corrupt_profile`` the component-engine profile is perturbed
    before comparison, which must surface as exactly one failure (the
    harness proving it can see a lie).
    """
    failures: list[Failure] = []
    text = to_edge_list(g)

    def expect(left_name: str, left, right_name: str, right) -> None:
        if left != right:
            failures.append(
                Failure(
                    graph_text=text,
                    methods=(left_name, right_name),
                    expected=str(right),
                    got=str(left),
                )
            )

    n, m = g.n, g.m
    gray = delta_graycode(g)
    comp = delta_by_components(g)
    if corrupt_profile:
        comp = _corrupted(comp)

    if m <= NAIVE_CHECK_CAP:
        naive = delta_naive(g)
        expect("delta_naive", naive.delta, "delta_graycode", gray.delta)
        expect(
            "delta_naive:census_total",
            sum(naive.odd_counts) + sum(naive.even_counts),
            "2^m-1",
            (1 << m) - 1,
        )
    expect("delta_graycode", gray.delta, "delta_by_components", comp.delta)
    expect(
        "delta_graycode:census_total",
        sum(gray.odd_counts) + sum(gray.even_counts),
        "2^m-1",
        (1 << m) - 1,
    )
    expect("delta_graycode:delta_sum", sum(gray.delta), "signed_identity", 1 if m else 0)

    reduction = vc_count_reduction(g, engine="gray")
    expect(
        "reduction[gray]",
        reduction,
        "reduction[components]",
        vc_count_reduction(g, engine="components"),
    )
    if n <= VERTEX_CAP:
        brute = brute_force_vc_count(g)
        independent = independent_set_count(g)
        expect("reduction", reduction, "brute_force", brute)
        expect("brute_force", brute, "independent_set", independent)
        expect("non_cover+brute_force", non_cover_count(g) + brute, "2^n", 1 << n)
        if 1 <= m <= IE_EDGE_CAP:
            direct = inclusion_exclusion_direct(g)
            weighted = sum(gray.delta[k] << (n - k) for k in range(2, n + 1))
            expect("inclusion_exclusion", direct, "delta_weighted_sum", weighted)
            expect("inclusion_exclusion", direct, "non_cover", (1 << n) - brute)
    return failures


def all_labeled_graphs(n: int):
    """Yield every graph on vertices 0..n-1, one per subset of the pair set."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        chosen = [pairs[j] for j in range(len(pairs)) if mask >> j & 1]
        yield Graph.from_edges(n, chosen)


def _draw_trial_graph(rng: random.Random, n_max: int, m_max: int) -> Graph:
    # n uniform in [2, n_max], p uniform in (0, 1), resample until m fits.
    for _ in range(100_000):
        n = rng.randint(2, n_max)
        p = rng.random()
        g = random_graph(n, p, seed=rng.getrandbits(64))
        if g.m <= m_max:
            return g
    raise RuntimeError(f"could not sample a graph with at most {m_max} edges")


def run_verification(
    exhaustive_n: int = 0,
    n_max: int = 0,
    m_max: int = 0,
    trials: int = 0,
    seed: int = 0,
    _corrupt_graph_index: int | None = None,
) -> VerificationReport:
    """Exhaustive plus randomized identity checking; see module docstring.

    ``exhaustive_n >= 1`` checks every labeled graph on at most that many
    vertices (0 skips the exhaustive stage entirely); ``trials`` then adds
    seeded random graphs. ``_corrupt_graph_index`` perturbs the profile of
    the graph at that position in the run (test hook; not exposed on the
    command line).
    """
    if exhaustive_n < 0 or exhaustive_n > EXHAUSTIVE_N_CAP:
        raise ValueError(
            f"exhaustive_n must be in [0, {EXHAUSTIVE_N_CAP}], got {exhaustive_n}"
        )
    if trials < 0:
        raise ValueError(f"trials must be nonnegative, got {trials}")
    if trials > 0 and n_max < 2:
        raise ValueError(f"random trials need n_max >= 2, got {n_max}")
    start = time.perf_counter()
    failures: list[Failure] = []
    checked = 0
    if exhaustive_n > 0:
        for n in range(exhaustive_n + 1):
            for g in all_labeled_graphs(n):
                failures.extend(check_graph(g, corrupt_profile=checked == _corrupt_graph_index))
                checked += 1
    rng = random.Random(seed)
    for _ in range(trials):
        g = _draw_trial_graph(rng, n_max, m_max)
        failures.extend(check_graph(g, corrupt_profile=checked == _corrupt_graph_index))
        checked += 1
    wall = time.perf_counter() - start
    return VerificationReport(trials=checked, failures=failures, seed=seed, wall_time=wall)


# ---------------------------------------------------------------------------
# benchmarking


@dataclass(frozen=True)
class BenchRecord:
    engine: str
    edges: int
    subsets: int
    wall_time: float
    subsets_per_second: float

    def to_json_dict(self) -> dict:
        return {
            "engine": self.engine,
            "edges": self.edges,
            "subsets": str(self.subsets),
            "wall_time": self.wall_time,
            "subsets_per_second": self.subsets_per_second,
        }


def subsets_visited(g: Graph, engine: str) -> int:
    """Nonempty subsets an engine enumerates: 2^m - 1, or the per-component sum."""
    if engine == "components":
        total = 0
        for comp in connected_components(g):
            mc = sum(1 for e in g.edges if e.u in comp)
            total += (1 << mc) - 1
        return total
    return (1 << g.m) - 1


def run_bench(g: Graph, engines: list[str], repeats: int = 1) -> list[BenchRecord]:
    """Time each engine ``repeats`` times; all runs must agree on delta."""
    if repeats < 1:
        raise ValueError(f"repeats must be >= 1, got {repeats}")
    if not engines:
        raise ValueError("no engines given")
    for name in engines:
        if name not in ENGINES:
            raise ValueError(f"unknown engine {name!r}; known engines: {', '.join(ENGINES)}")
    records: list[BenchRecord] = []
    deltas: dict[str, tuple[int, ...]] = {}
    for name in engines:
        fn = ENGINES[name]
        for _ in range(repeats):
            t0 = time.perf_counter()
            profile = fn(g)
            wall = time.perf_counter() - t0
            visited = subsets_visited(g, name)
            rate = visited / wall if wall > 0 else 0.0
            records.append(
                BenchRecord(
                    engine=name,
                    edges=g.m,
                    subsets=visited,
                    wall_time=wall,
                    subsets_per_second=rate,
                )
            )
            previous = deltas.setdefault(name, profile.delta)
            if previous != profile.delta:
                raise EngineDisagreement(f"engine {name!r} is not deterministic across repeats")
    reference_name = engines[0]
    for name, delta in deltas.items():
        if delta != deltas[reference_name]:
            raise EngineDisagreement(
                f"engines {reference_name!r} and {name!r} disagree on delta"
            )
    return records
