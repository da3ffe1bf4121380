"""Independence numbers of Paley graph powers, explicit independent-set
constructions, clique numbers, and Shannon-capacity bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import SolverTimeout
from .graphs import (
    CayleyGraph,
    ProductGraph,
    build_paley,
    complement,
    graph_fingerprint,
    strong_power,
)
from .rings import (
    RingCtx,
    RingSpec,
    factor_prime_power,
    generator,
    make_ring,
    non_kth_power,
)
from .solver import DEFAULT_BUDGET_S, IndepSet, max_independent_set, verify_independent

SOLVER_VERTEX_CAP = 400


def alpha_product(R: RingCtx, k: int, n: int, budget_s: float = DEFAULT_BUDGET_S) -> int:
    """Independence number of the n-fold strong power of Paley_k(R)."""
    G = build_paley(R, k)
    H = G if n == 1 else strong_power(G, n)
    return max_independent_set(H, budget_s=budget_s).size


def diagonal_indep_set(q: int, k: int, graph: ProductGraph | None = None) -> IndepSet:
    """Geometric tuples (x, bx, b^2 x, ..., b^(k-1) x) with b a generator
    of F_q^*; an independent set of size q in the k-th strong power of the
    complement of Paley_k(F_q)."""
    R = make_ring(RingSpec.field(*factor_prime_power(q)))
    if graph is None:
        graph = complement_power_graph(q, k)
    beta = generator(R)
    tuples = []
    for x in R.elements():
        row = []
        acc = x
        for _ in range(k):
            row.append(acc)
            acc = R.mul(acc, beta)
        tuples.append(tuple(row))
    out = IndepSet(
        vertices=tuple(tuples), size=len(tuples),
        graph_fingerprint=graph_fingerprint(graph),
    )
    assert verify_independent(graph, out.vertices)
    return out


def complement_power_graph(q: int, k: int) -> ProductGraph:
    """The k-th strong power of the complement of Paley_k(F_q), built as a
    Cayley graph on the complementary connection set."""
    R = make_ring(RingSpec.field(*factor_prime_power(q)))
    comp = build_paley(R, k).complement_cayley()
    return strong_power(comp, k)


def beta_pair_set(q: int, k: int, graph: ProductGraph | None = None) -> IndepSet:
    """Pairs (x, bx) with b the least non-k-th-power: an independent set of
    size q in Paley_k(F_q) x Paley_k(F_q)."""
    R = make_ring(RingSpec.field(*factor_prime_power(q)))
    beta = non_kth_power(R, k)  # raises AllPowers when gcd(k, q-1) = 1
    if graph is None:
        graph = strong_power(build_paley(R, k), 2)
    tuples = tuple((x, R.mul(beta, x)) for x in R.elements())
    out = IndepSet(
        vertices=tuples, size=len(tuples),
        graph_fingerprint=graph_fingerprint(graph),
    )
    assert verify_independent(graph, out.vertices)
    return out


def clique_number(G, budget_s: float = DEFAULT_BUDGET_S) -> int:
    """Exact clique number as the independence number of the complement."""
    comp = (
        G.complement_cayley() if isinstance(G, CayleyGraph) else complement(G)
    )
    return max_independent_set(comp, budget_s=budget_s).size


def cohen_bound(q: int, k: int) -> float:
    """Asymptotic clique-number lower bound for undirected Paley_k(F_q),
    clamped below at 1 (a clique always has at least one vertex).

    Uses d = gcd(k, q-1) and natural logarithms.
    """
    p, _ = factor_prime_power(q)
    d = math.gcd(k, q - 1)
    if d < 2:
        raise ValueError("requires gcd(k, q-1) >= 2")
    raw = (
        p / ((p - 1) * math.log(d)) * (0.5 * math.log(q) - 2 * math.log(math.log(q)))
        - 1
    )
    return max(raw, 1.0)


@dataclass(frozen=True)
class CapacityBounds:
    """Sandwich for the Shannon capacity: best power root vs theta."""

    lower: float
    upper: float
    n_used: int


def capacity_bounds(
    R: RingCtx,
    k: int,
    max_n: int,
    use_complement: bool = False,
    budget_s: float = DEFAULT_BUDGET_S,
    solver_cap: int = SOLVER_VERTEX_CAP,
) -> CapacityBounds:
    """Lower bound: max over 1 <= n <= max_n of alpha(G^n)^(1/n), solving
    exactly when the power fits under solver_cap and falling back to the
    explicit constructions otherwise.  Upper bound: the theta value.
    """
    from .theta import lovasz_theta, lovasz_theta_complement

    G = build_paley(R, k)
    base = G.complement_cayley() if use_complement else G
    q = R.order
    best = 1.0
    n_used = 0
    for n in range(1, max_n + 1):
        alpha_n = None
        if q**n <= solver_cap:
            H = base if n == 1 else strong_power(base, n)
            try:
                alpha_n = max_independent_set(H, budget_s=budget_s).size
            except SolverTimeout as exc:
                alpha_n = exc.incumbent.size  # still a valid lower bound
        elif use_complement and n == k and R.is_field:
            alpha_n = q  # diagonal geometric tuples
        elif not use_complement and n == 2 and R.is_field and math.gcd(k, q - 1) > 1:
            alpha_n = q  # beta pairs
        if alpha_n is None:
            continue
        root = alpha_n ** (1.0 / n)
        if root > best:
            best = root
            n_used = n
    upper = (
        lovasz_theta_complement(G).value if use_complement else lovasz_theta(G).value
    )
    assert best <= upper + 1e-9
    return CapacityBounds(lower=best, upper=upper, n_used=n_used)
