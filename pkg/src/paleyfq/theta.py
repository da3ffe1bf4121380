"""Spectra of abelian Cayley graphs and Lovász theta via the ratio bound.

For an undirected Paley graph over a field the multiplicative action of
the k-th-power subgroup is transitive on edges, so the ratio bound
n(-lambda_min)/(lambda_max - lambda_min) equals theta exactly.  The
complement of such a graph is generally not edge-transitive, but both
graphs are vertex-transitive, so theta(G) * theta(complement) = n gives
the complement value in closed form.  Composite moduli are handled by
CRT factorization and the multiplicativity of theta over strong
products, which only ever yields an upper bound and is exactly how the
composite bound is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as iproduct

import numpy as np

from .errors import (
    DirectedFactor,
    DirectedUnsupported,
    NotEdgeTransitive,
    NotSquarefree,
    OrderTooLarge,
    SolverTimeout,
)
from .graphs import CayleyGraph, build_paley
from .rings import RingSpec, factorize, is_prime, make_ring
from .solver import DEFAULT_BUDGET_S, max_independent_set

SPECTRUM_CAP = 1 << 16
REL_TOL = 1e-6


@dataclass(frozen=True)
class ThetaReport:
    value: float
    method: str  # "ratio" | "product" | "closed_form"
    lambda_max: float
    lambda_min: float
    factors: tuple["ThetaReport", ...] | None = None

    def to_json(self) -> dict:
        out = {
            "value": self.value,
            "method": self.method,
            "lambda_max": self.lambda_max,
            "lambda_min": self.lambda_min,
        }
        if self.factors is not None:
            out["factors"] = [f.to_json() for f in self.factors]
        return out


def cayley_spectrum(G: CayleyGraph) -> list[float]:
    """Adjacency eigenvalues via additive characters, sorted ascending.

    Z/m uses the circulant sums over the connection set; F_{p^s} uses the
    F_p dot product of coefficient vectors.  Imaginary parts must vanish,
    which checks the symmetry of the connection set.
    """
    if not G.symmetric:
        raise DirectedUnsupported("spectrum needs an undirected graph")
    R = G.ring
    n = R.order
    if n > SPECTRUM_CAP:
        raise OrderTooLarge(f"order {n} exceeds spectrum cap {SPECTRUM_CAP}")
    conn = sorted(G.connection)
    if not conn:
        return [0.0] * n
    if R.spec.kind == "zmod":
        m = R.spec.m
        phases = np.multiply.outer(np.arange(n), np.array(conn)) % m
        vals = np.exp(2j * np.pi / m * phases).sum(axis=1)
    else:
        p = R.spec.p
        digits = np.array([R.digits(x) for x in range(n)], dtype=np.int64)
        cdig = np.array([R.digits(s) for s in conn], dtype=np.int64)
        phases = (digits @ cdig.T) % p
        vals = np.exp(2j * np.pi / p * phases).sum(axis=1)
    assert np.abs(vals.imag).max() < 1e-9
    lam = np.sort(vals.real)
    deg = len(conn)
    assert abs(lam.sum()) < 1e-6 * max(n, deg)
    assert abs(lam[-1] - deg) < 1e-9
    return [float(x) for x in lam]


def _ratio_theta(G: CayleyGraph) -> ThetaReport:
    lam = cayley_spectrum(G)
    lam_min, lam_max = lam[0], lam[-1]
    n = G.ring.order
    if lam_max == lam_min:  # edgeless
        return ThetaReport(value=float(n), method="ratio",
                           lambda_max=lam_max, lambda_min=lam_min)
    value = n * (-lam_min) / (lam_max - lam_min)
    return ThetaReport(value=value, method="ratio",
                       lambda_max=lam_max, lambda_min=lam_min)


def _edge_transitive(G: CayleyGraph) -> bool:
    # field Paley graphs: maps x -> a x + b with a a k-th power act
    # transitively on edges; Z/p is the field F_p; complement connection
    # sets are unions of power cosets and lose this
    spec = G.ring.spec
    return G.power_connection and (spec.kind == "fq" or is_prime(spec.m))


def lovasz_theta(G: CayleyGraph) -> ThetaReport:
    """Exact theta of an undirected Paley graph over a field (or prime
    modulus), by the spectral ratio bound."""
    if not G.symmetric:
        raise DirectedUnsupported("theta needs an undirected graph")
    if not _edge_transitive(G):
        raise NotEdgeTransitive(
            "ratio bound needs an edge-transitive graph; use theta_zmod for "
            "composite moduli and lovasz_theta_complement for complements"
        )
    report = _ratio_theta(G)
    q = G.ring.order
    # undirected means -1 is a k-th power, so the field bound applies
    assert report.value <= q ** (1 - 1 / G.k) + REL_TOL * q
    return report


def lovasz_theta_complement(G: CayleyGraph) -> ThetaReport:
    """Theta of the complement via theta(G) * theta(complement) = n,
    exact because both graphs are vertex-transitive.  The ratio formula
    itself is not tight on complements that fail edge-transitivity."""
    base = lovasz_theta(G)
    n = G.ring.order
    comp = G.complement_cayley()
    if comp.connection:
        lam = cayley_spectrum(comp)
        lam_min, lam_max = lam[0], lam[-1]
    else:
        lam_min = lam_max = 0.0
    return ThetaReport(
        value=n / base.value, method="closed_form",
        lambda_max=lam_max, lambda_min=lam_min,
    )


def theta_zmod(m: int, k: int) -> ThetaReport:
    """Upper bound for theta of Paley_k(Z/m), m squarefree, as the product
    of exact per-prime theta values."""
    fac = factorize(m)
    if any(e > 1 for _, e in fac):
        raise NotSquarefree(f"m={m} is not squarefree")
    primes = [p for p, _ in fac]
    if len(primes) == 1:
        return lovasz_theta(build_paley(make_ring(RingSpec.zmod(m)), k))
    reports = []
    for p in primes:
        Gp = build_paley(make_ring(RingSpec.zmod(p)), k)
        if not Gp.symmetric:
            raise DirectedFactor(f"Paley_{k}(Z/{p}) is directed")
        reports.append(lovasz_theta(Gp))
    value = math.prod(r.value for r in reports)
    lam_max = math.prod(1 + r.lambda_max for r in reports) - 1
    lam_min = (
        min(
            math.prod(ext)
            for ext in iproduct(*[(1 + r.lambda_min, 1 + r.lambda_max) for r in reports])
        )
        - 1
    )
    return ThetaReport(
        value=value, method="product",
        lambda_max=lam_max, lambda_min=lam_min, factors=tuple(reports),
    )


@dataclass(frozen=True)
class RuzsaCheck:
    applicable: bool
    bound: float
    alpha: int | None
    alpha_status: str  # "exact" | "timeout" | "skipped"

    def to_json(self) -> dict:
        return {
            "applicable": self.applicable,
            "bound": self.bound,
            "alpha": self.alpha,
            "alpha_status": self.alpha_status,
        }


def ruzsa_bound_check(
    m: int,
    k: int,
    budget_s: float = DEFAULT_BUDGET_S,
    solver_cap: int = 400,
) -> RuzsaCheck:
    """Check the composite-modulus bound alpha(Paley_k(Z/m)) < m^(1-1/k).

    Applicable iff m > 1 is squarefree and, writing k = d * 2^s with d
    odd, every prime dividing m is 1 mod 2^(s+1) (for odd k this only
    requires odd primes).  Strictness is asserted through integrality:
    alpha <= ceil(bound) - 1.
    """
    if m <= 1:
        raise ValueError("m must exceed 1")
    fac = factorize(m)
    squarefree = all(e == 1 for _, e in fac)
    s = 0
    kk = k
    while kk % 2 == 0:
        kk //= 2
        s += 1
    modulus = 1 << (s + 1)
    applicable = squarefree and all(p % modulus == 1 for p, _ in fac)
    bound = m ** (1 - 1 / k)
    alpha = None
    status = "skipped"
    if m <= solver_cap:
        G = build_paley(make_ring(RingSpec.zmod(m)), k)
        try:
            alpha = max_independent_set(G, budget_s=budget_s).size
            status = "exact"
        except SolverTimeout as exc:
            alpha = exc.incumbent.size
            status = "timeout"
    if applicable and status == "exact":
        assert alpha <= math.ceil(bound) - 1
    return RuzsaCheck(applicable=applicable, bound=bound, alpha=alpha,
                      alpha_status=status)
