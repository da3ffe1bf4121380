"""Sets of polynomials in P_{q,n} avoiding k-th power differences.

Two constructions are provided.  The general one, for an arbitrary
degree-k polynomial F, restricts every coefficient at an index divisible
by k to b_k * S, where S is a maximum independent set of Paley_k(F_q)
containing 0 and b_k the leading coefficient of F.  The monomial one,
for F = b_k T^k, constrains coefficient pairs (c_i, c_{n-k-i}) to lie in
a scaled independent set of the two-fold strong product, which is what
makes the larger exponent possible.  An independent brute-force verifier
enumerates all relevant F(u) shifts and tests membership, so it shares
nothing with the construction logic beyond the membership predicate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterator

from .errors import (
    AllPowers,
    BadDegree,
    BadN,
    NotApplicable,
    NotMonomial,
    SolverTimeout,
    VerificationTooLarge,
)
from .graphs import build_paley, strong_power
from .indep import beta_pair_set
from .polys import PolyFq, compose, enumerate_polynomials, poly
from .rings import RingCtx
from .solver import DEFAULT_BUDGET_S, max_independent_set

VERIFY_CAP = 10**8
MATERIALIZE_CAP = 10**7


@dataclass(frozen=True)
class ConstructionParams:
    ring: RingCtx
    k: int
    n: int
    F: PolyFq
    variant: str  # "general" | "power"

    @property
    def q(self) -> int:
        return self.ring.order


class DifferenceFreeSet:
    """Membership predicate, iterator, and certificate for a constructed
    difference-free subset of P_{q,n}."""

    def __init__(self, params, coeff_set=None, pair_set=None, base_indep=None):
        self.params = params
        self.coeff_set = coeff_set  # frozenset of allowed single coefficients
        self.pair_set = pair_set  # frozenset of allowed (c_i, c_{n-k-i}) pairs
        self.base_indep = base_indep  # unscaled S or U certificate
        q, k, n = params.q, params.k, params.n
        if coeff_set is not None:
            self.size = len(coeff_set) ** (n // k) * q ** (n - n // k)
        else:
            self.size = len(pair_set) ** (n // (2 * k)) * q ** (n - n // k)

    def contains(self, u: PolyFq) -> bool:
        p = self.params
        if u.degree >= p.n:
            return False
        if self.coeff_set is not None:
            return all(u.coeff(i) in self.coeff_set for i in range(0, p.n, p.k))
        half = p.n // 2
        return all(
            (u.coeff(i), u.coeff(p.n - p.k - i)) in self.pair_set
            for i in range(0, half, p.k)
        )

    def __iter__(self) -> Iterator[PolyFq]:
        """Members in coefficient-lexicographic order (c_0 most significant
        among the constrained choices); materialization is capped."""
        if self.size > MATERIALIZE_CAP:
            raise VerificationTooLarge(
                f"set of size {self.size} exceeds cap {MATERIALIZE_CAP}"
            )
        p = self.params
        q, k, n = p.q, p.k, p.n
        free_idx = [i for i in range(n) if i % k]
        if self.coeff_set is not None:
            con_idx = list(range(0, n, k))
            choices = [sorted(self.coeff_set)] * len(con_idx)
            for con in iproduct(*choices):
                for free in iproduct(range(q), repeat=len(free_idx)):
                    c = [0] * n
                    for i, v in zip(con_idx, con):
                        c[i] = v
                    for i, v in zip(free_idx, free):
                        c[i] = v
                    yield PolyFq(p.ring, c)
        else:
            pair_idx = list(range(0, n // 2, k))
            choices = [sorted(self.pair_set)] * len(pair_idx)
            for con in iproduct(*choices):
                for free in iproduct(range(q), repeat=len(free_idx)):
                    c = [0] * n
                    for i, (lo, hi) in zip(pair_idx, con):
                        c[i] = lo
                        c[n - k - i] = hi
                    for i, v in zip(free_idx, free):
                        c[i] = v
                    yield PolyFq(p.ring, c)

    def to_json(self) -> dict:
        p = self.params
        out = {
            "q": p.q,
            "p": p.ring.spec.p,
            "s": p.ring.spec.s,
            "k": p.k,
            "n": p.n,
            "F": list(p.F.coeffs),
            "variant": p.variant,
            "size": self.size,
        }
        if self.coeff_set is not None:
            out["coeff_set"] = sorted(self.coeff_set)
        else:
            out["pair_set"] = sorted(list(t) for t in self.pair_set)
        return out


def monomial(ring: RingCtx, k: int, lead: int = 1) -> PolyFq:
    """The polynomial lead * T^k."""
    return poly(ring, [0] * k + [lead])


def construct(params: ConstructionParams, budget_s: float = DEFAULT_BUDGET_S) -> DifferenceFreeSet:
    if params.variant == "power":
        return construct_power(params, budget_s=budget_s)
    if params.variant == "general":
        return construct_general(params, budget_s=budget_s)
    raise ValueError(f"unknown variant {params.variant!r}")


def construct_general(params: ConstructionParams, budget_s: float = DEFAULT_BUDGET_S) -> DifferenceFreeSet:
    """Coefficients at indices divisible by k drawn from b_k * S."""
    R, k, n = params.ring, params.k, params.n
    _check_degree(params)
    if n % k:
        raise BadN(f"n={n} must be divisible by k={k}")
    if math.gcd(k, R.order - 1) == 1:
        raise AllPowers("every element is a k-th power; S degenerates to {0}")
    G = build_paley(R, k)
    cert = max_independent_set(G, budget_s=budget_s)
    S = _reroot(R, cert.vertices)
    bk = params.F.coeffs[-1]
    scaled = frozenset(R.mul(bk, x) for x in S)
    return DifferenceFreeSet(params, coeff_set=scaled, base_indep=tuple(sorted(S)))


def construct_power(params: ConstructionParams, budget_s: float = DEFAULT_BUDGET_S) -> DifferenceFreeSet:
    """Pairs (c_i, c_{n-k-i}) drawn from b_k * U, U independent in the
    two-fold strong product; needs the monomial F = b_k T^k."""
    R, k, n = params.ring, params.k, params.n
    _check_degree(params)
    if n % (2 * k):
        raise BadN(f"n={n} must be divisible by 2k={2 * k}")
    if any(params.F.coeffs[i] for i in range(k)):
        raise NotMonomial("the paired construction needs F = b_k * T^k")
    G = build_paley(R, k)
    P = strong_power(G, 2)
    try:
        cert = max_independent_set(P, budget_s=budget_s)
        U = [tuple(v) for v in cert.vertices]
    except SolverTimeout:
        U = list(beta_pair_set(R.order, k, graph=P).vertices)
    bk = params.F.coeffs[-1]
    scaled = frozenset((R.mul(bk, a), R.mul(bk, b)) for a, b in U)
    return DifferenceFreeSet(params, pair_set=scaled, base_indep=tuple(sorted(U)))


def _check_degree(params) -> None:
    if params.F.degree != params.k:
        raise BadDegree(f"deg F = {params.F.degree}, expected k = {params.k}")


def _reroot(R: RingCtx, vertices) -> frozenset[int]:
    """Translate an independent set so it contains 0 (translation keeps
    independence in a Cayley graph)."""
    verts = sorted(vertices)
    shift = verts[0]
    return frozenset(R.sub(x, shift) for x in verts)


def verify_no_F_difference(A: DifferenceFreeSet) -> bool:
    """Independent oracle: enumerate every u with deg F(u) < n, compute
    d = F(u), and scan all members a for membership of a + d. True iff
    the only hits have d = 0.

    a + d only needs checking at the constrained coefficient positions;
    free positions never block membership.
    """
    p = A.params
    R, q, k, n = p.ring, p.q, p.k, p.n
    depth = (n - 1) // k + 1
    if A.size * q**depth > VERIFY_CAP:
        raise VerificationTooLarge(
            f"|A| * q^depth = {A.size * q ** depth} exceeds cap {VERIFY_CAP}"
        )
    add = R.add
    if A.coeff_set is not None:
        con = list(range(0, n, k))
        allowed = A.coeff_set
        members = [tuple(m.coeff(i) for i in con) for m in A]
        for u in enumerate_polynomials(R, depth):
            d = compose(p.F, u)
            if d.is_zero():
                continue
            dt = [d.coeff(i) for i in con]
            for a in members:
                if all(add(ai, di) in allowed for ai, di in zip(a, dt)):
                    return False
        return True
    pair_lo = list(range(0, n // 2, k))
    pairs = A.pair_set
    members = [
        tuple((m.coeff(i), m.coeff(n - k - i)) for i in pair_lo) for m in A
    ]
    for u in enumerate_polynomials(R, depth):
        d = compose(p.F, u)
        if d.is_zero():
            continue
        dt = [(d.coeff(i), d.coeff(n - k - i)) for i in pair_lo]
        for a in members:
            if all(
                (add(lo, dlo), add(hi, dhi)) in pairs
                for (lo, hi), (dlo, dhi) in zip(a, dt)
            ):
                return False
    return True


def greedy_difference_free(R: RingCtx, n: int, k: int) -> list[PolyFq]:
    """First-fit scan of P_{q,n} in enumeration order, keeping a
    polynomial iff no difference with a chosen one, in either order, is a
    nonzero k-th power.  The guaranteed size q^(n-1-floor((n-1)/k)) needs
    -1 to be a k-th power (both orders then coincide); the scan itself
    runs regardless and its output is always difference-free."""
    depth = (n - 1) // k + 1
    powers = set()
    for b in enumerate_polynomials(R, depth):
        w = b**k
        if w.degree < n:
            powers.add(w)
    powers.discard(poly(R, ()))
    chosen: list[PolyFq] = []
    for cand in enumerate_polynomials(R, n):
        if all(
            (cand - c) not in powers and (c - cand) not in powers
            for c in chosen
        ):
            chosen.append(cand)
    return chosen


def greedy_lower_bound(q: int, n: int, k: int) -> int:
    return q ** (n - 1 - (n - 1) // k)


def pigeonhole_upper(q: int, n: int, k: int) -> int:
    """Upper bound q^(n - floor((n-1)/k)), valid when k is a power of q."""
    t = k
    while t > 1 and t % q == 0:
        t //= q
    if t != 1 or k < q:
        raise NotApplicable(f"k={k} is not a positive power of q={q}")
    return q ** (n - (n - 1) // k)
