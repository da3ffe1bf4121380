"""Finite commutative ring arithmetic for F_{p^s} and Z/mZ.

Elements are canonical integer indices in [0, |R|).  For F_{p^s} the index
is the base-p evaluation of the coefficient vector of the residue
polynomial modulo a fixed irreducible; for Z/mZ it is the least
nonnegative residue.  A RingCtx is immutable after construction and all
operations are pure, so contexts can be shared freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AllPowers, BadModulus, NotAField, NotPrime, OrderTooLarge

ORDER_CAP = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n as (prime, exponent) pairs, primes ascending."""
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            e += 1
            n //= d
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def factor_prime_power(q: int) -> tuple[int, int]:
    """q as (p, s) with p prime and q = p^s, else ValueError."""
    fac = factorize(q)
    if q < 2 or len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    return fac[0]


@dataclass(frozen=True)
class RingSpec:
    """Which ring to build: kind 'fq' uses (p, s), kind 'zmod' uses m."""

    kind: str
    p: int = 0
    s: int = 0
    m: int = 0

    @classmethod
    def field(cls, p: int, s: int = 1) -> "RingSpec":
        return cls(kind="fq", p=p, s=s)

    @classmethod
    def zmod(cls, m: int) -> "RingSpec":
        return cls(kind="zmod", m=m)

    @property
    def order(self) -> int:
        return self.p**self.s if self.kind == "fq" else self.m


# ---------------------------------------------------------------------------
# small helpers for polynomials over F_p (internal representation of F_{p^s})
# coefficient tuples, low degree first, trailing zeros trimmed

def _ptrim(c: list[int]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _pmul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: tuple[int, ...], m: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a modulo monic m."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * mi) % p
        a.pop()
    return _ptrim(a)


def _is_irreducible(m: tuple[int, ...], p: int) -> bool:
    """Trial division by all monic polynomials of degree 1..deg(m)//2."""
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            low = _decode_poly(code, p)
            div = tuple(list(low) + [0] * (d - len(low)) + [1])
            if not _pmod(m, div, p):
                return False
    return True


def _decode_poly(code: int, p: int) -> tuple[int, ...]:
    c = []
    while code:
        c.append(code % p)
        code //= p
    return tuple(c)


def _find_modulus(p: int, s: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree s over F_p, ordered by the
    base-p encoding of the non-leading coefficients."""
    for code in range(p**s):
        low = _decode_poly(code, p)
        m = tuple(list(low) + [0] * (s - len(low)) + [1])
        if _is_irreducible(m, p):
            return m
    raise AssertionError("an irreducible of every degree exists")


class RingCtx:
    """Arithmetic context for one ring; build via make_ring()."""

    __slots__ = (
        "spec", "order", "modulus", "exp", "log", "_digits", "_power_sets",
    )

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.order = spec.order
        self._power_sets: dict[int, frozenset[int]] = {}
        if spec.kind == "fq":
            p, s = spec.p, spec.s
            self.modulus = _find_modulus(p, s) if s > 1 else (0, 1)
            self._digits = [self._index_digits(x) for x in range(self.order)]
            self._build_tables()
        else:
            self.modulus = None
            self._digits = None
            self.exp = None
            self.log = None

    # -- representation helpers (fields) ------------------------------------

    def _index_digits(self, x: int) -> tuple[int, ...]:
        p, s = self.spec.p, self.spec.s
        d = []
        for _ in range(s):
            d.append(x % p)
            x //= p
        return tuple(d)

    def digits(self, x: int) -> tuple[int, ...]:
        """Coefficient vector of the residue representative (fields only)."""
        return self._digits[x]

    def from_digits(self, d) -> int:
        p = self.spec.p
        x = 0
        for c in reversed(d):
            x = x * p + c
        return x

    def _raw_mul(self, x: int, y: int) -> int:
        p = self.spec.p
        rem = _pmod(_pmul(self._digits[x], self._digits[y], p), self.modulus, p)
        return self.from_digits(rem)

    def _raw_pow(self, x: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, x)
            x = self._raw_mul(x, x)
            e >>= 1
        return r

    def _build_tables(self):
        """Locate the least-index multiplicative generator and tabulate
        exp/log with respect to it."""
        q = self.order
        if q == 2:
            g = 1
        else:
            qm1 = q - 1
            primes = [r for r, _ in factorize(qm1)]
            g = None
            for x in range(1, q):
                if all(self._raw_pow(x, qm1 // r) != 1 for r in primes):
                    g = x
                    break
            assert g is not None
        exp = [0] * (q - 1)
        log = [0] * q
        acc = 1
        for i in range(q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._raw_mul(acc, g)
        assert acc == 1, "generator order must be q-1"
        self.exp = exp
        self.log = log

    # -- ring operations -----------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.spec.kind == "zmod":
            return (x + y) % self.spec.m
        p = self.spec.p
        return self.from_digits(
            [(a + b) % p for a, b in zip(self._digits[x], self._digits[y])]
        )

    def neg(self, x: int) -> int:
        if self.spec.kind == "zmod":
            return (-x) % self.spec.m
        p = self.spec.p
        return self.from_digits([(-a) % p for a in self._digits[x]])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.spec.kind == "zmod":
            return (x * y) % self.spec.m
        if x == 0 or y == 0:
            return 0
        return self.exp[(self.log[x] + self.log[y]) % (self.order - 1)]

    def inv(self, x: int) -> int:
        if self.spec.kind == "zmod":
            return pow(x, -1, self.spec.m)  # ValueError for non-units
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[(-self.log[x]) % (self.order - 1)]

    def pow_elem(self, x: int, e: int) -> int:
        if self.spec.kind == "zmod":
            return pow(x, e, self.spec.m)
        if x == 0:
            return 0 if e else 1
        return self.exp[(self.log[x] * e) % (self.order - 1)]

    def elements(self) -> range:
        return range(self.order)

    @property
    def is_field(self) -> bool:
        return self.spec.kind == "fq"

    def __repr__(self):
        if self.spec.kind == "fq":
            return f"RingCtx(F_{self.order})"
        return f"RingCtx(Z/{self.spec.m})"


def make_ring(spec: RingSpec) -> RingCtx:
    """Validate a RingSpec and build its arithmetic context."""
    if spec.kind == "fq":
        if not is_prime(spec.p):
            raise NotPrime(f"p={spec.p} is not prime")
        if spec.s < 1:
            raise BadModulus(f"s={spec.s} must be >= 1")
        if spec.order > ORDER_CAP:
            raise OrderTooLarge(f"q={spec.order} exceeds cap {ORDER_CAP}")
        return RingCtx(spec)
    if spec.kind == "zmod":
        if spec.m < 2:
            raise BadModulus(f"m={spec.m} must be >= 2")
        if spec.m > ORDER_CAP:
            raise OrderTooLarge(f"m={spec.m} exceeds cap {ORDER_CAP}")
        return RingCtx(spec)
    raise BadModulus(f"unknown ring kind {spec.kind!r}")


def kth_power_set(R: RingCtx, k: int) -> frozenset[int]:
    """The set {z^k : z in R}, cached per (R, k)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    cached = R._power_sets.get(k)
    if cached is not None:
        return cached
    if R.is_field:
        q = R.order
        d = math.gcd(k, q - 1)
        out = frozenset({0} | {R.exp[(k * i) % (q - 1)] for i in range(q - 1)})
        assert len(out) == 1 + (q - 1) // d
    else:
        m = R.spec.m
        out = frozenset(pow(z, k, m) for z in range(m))
    R._power_sets[k] = out
    return out


def is_kth_power(R: RingCtx, x: int, k: int) -> bool:
    """True iff x = z^k for some z in R."""
    if x == 0:
        return True
    if R.is_field:
        d = math.gcd(k, R.order - 1)
        return R.log[x] % d == 0
    return x in kth_power_set(R, k)


def non_kth_power(R: RingCtx, k: int) -> int:
    """Least-index element of F_q that is not a k-th power."""
    if not R.is_field:
        raise NotAField("non_kth_power is defined for fields")
    if math.gcd(k, R.order - 1) == 1:
        raise AllPowers(f"every element of F_{R.order} is a {k}-th power")
    for x in R.elements():
        if not is_kth_power(R, x, k):
            return x
    raise AssertionError("unreachable: gcd > 1 guarantees a non-power")


def generator(R: RingCtx) -> int:
    """Least-index multiplicative generator of F_q^* (the table base)."""
    if not R.is_field:
        raise NotAField("generator is defined for fields")
    return R.exp[1] if R.order > 2 else 1


def crt_split(m: int) -> list[int]:
    """Prime-power factors of m, ascending by prime; their product is m."""
    return [p**e for p, e in factorize(m)]


def crt_map(x: int, factors: list[int]) -> tuple[int, ...]:
    """Residue tuple of x under Z/m -> prod Z/f_i."""
    return tuple(x % f for f in factors)


def crt_combine(residues, factors: list[int]) -> int:
    """Inverse of crt_map (factors pairwise coprime)."""
    m = math.prod(factors)
    x = 0
    for r, f in zip(residues, factors):
        mf = m // f
        x += r * mf * pow(mf, -1, f)
    return x % m
