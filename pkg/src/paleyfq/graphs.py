"""Generalized Paley graphs, complements, strong products, and DIMACS I/O.

Adjacency is stored as one Python int bitmask per vertex (bit j of
rows[i] set iff there is an edge i -> j).  Graphs are immutable after
construction and safe to share.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field

from .errors import DirectedUnsupported, NotCoprime, ProductTooLarge
from .rings import RingCtx, RingSpec, kth_power_set, make_ring

PRODUCT_CAP = 10**5


@dataclass(frozen=True)
class GenericGraph:
    """Plain adjacency-bitmask graph; no self-loops."""

    n: int
    rows: tuple[int, ...]
    symmetric: bool = field(default=False)

    def __post_init__(self):
        for i, r in enumerate(self.rows):
            if r >> i & 1:
                raise ValueError("self-loops are not allowed")

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def edge_count(self) -> int:
        total = sum(r.bit_count() for r in self.rows)
        return total // 2 if self.symmetric else total


def _rows_symmetric(n: int, rows) -> bool:
    for i in range(n):
        r = rows[i]
        while r:
            j = (r & -r).bit_length() - 1
            if not rows[j] >> i & 1:
                return False
            r &= r - 1
    return True


def generic_graph(n: int, rows) -> GenericGraph:
    rows = tuple(rows)
    return GenericGraph(n=n, rows=rows, symmetric=_rows_symmetric(n, rows))


@dataclass(frozen=True)
class CayleyGraph:
    """Paley_k(R): x -> y is an edge iff x - y is a k-th power (nonzero).

    power_connection records whether the connection set really is the
    k-th-power set; complements carry False, which matters because only
    the power connection is known edge-transitive.
    """

    ring: RingCtx
    k: int
    connection: frozenset[int]
    symmetric: bool
    power_connection: bool = True

    @property
    def n(self) -> int:
        return self.ring.order

    def to_generic(self) -> GenericGraph:
        R = self.ring
        n = R.order
        rows = [0] * n
        for x in range(n):
            m = 0
            for s in self.connection:
                m |= 1 << R.sub(x, s)
            rows[x] = m
        return GenericGraph(n=n, rows=tuple(rows), symmetric=self.symmetric)

    def complement_cayley(self) -> "CayleyGraph":
        """Cayley graph on the complementary connection set."""
        conn = frozenset(
            x for x in self.ring.elements() if x and x not in self.connection
        )
        return CayleyGraph(
            ring=self.ring, k=self.k, connection=conn,
            symmetric=_negation_closed(self.ring, conn),
            power_connection=False,
        )


def _negation_closed(R: RingCtx, conn: frozenset[int]) -> bool:
    return all(R.neg(s) in conn for s in conn)


def build_paley(R: RingCtx, k: int) -> CayleyGraph:
    """Construct Paley_k(R) from the k-th power set of R."""
    if k < 2:
        raise ValueError("k must be >= 2")
    conn = frozenset(kth_power_set(R, k) - {0})
    symmetric = _negation_closed(R, conn)
    if R.is_field and R.spec.p != 2:
        # -1 is a k-th power iff (q-1)/gcd(q-1,k) is even; char 2 has -1 = 1
        q = R.order
        criterion = ((q - 1) // math.gcd(q - 1, k)) % 2 == 0
        assert symmetric == criterion
    return CayleyGraph(ring=R, k=k, connection=conn, symmetric=symmetric)


def complement(G) -> GenericGraph:
    """Complement graph: (x, y) is an edge iff x != y and (x, y) was not."""
    g = as_generic(G)
    full = (1 << g.n) - 1
    rows = tuple((full & ~g.rows[i]) & ~(1 << i) for i in range(g.n))
    return GenericGraph(n=g.n, rows=rows, symmetric=g.symmetric)


@dataclass(frozen=True)
class ProductGraph:
    """Strong product with explicit tuple vertices (row-major indexing)."""

    factors: tuple
    graph: GenericGraph
    orders: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.graph.n

    def vertex_tuple(self, index: int) -> tuple[int, ...]:
        out = []
        for size in reversed(self.orders):
            out.append(index % size)
            index //= size
        return tuple(reversed(out))

    def vertex_index(self, tup) -> int:
        if len(tup) != len(self.orders):
            raise ValueError("tuple arity mismatch")
        idx = 0
        for t, size in zip(tup, self.orders):
            if not 0 <= t < size:
                raise ValueError("coordinate out of range")
            idx = idx * size + t
        return idx

    def vertices(self):
        return (self.vertex_tuple(i) for i in range(self.n))


def as_generic(G) -> GenericGraph:
    if isinstance(G, GenericGraph):
        return G
    if isinstance(G, CayleyGraph):
        return G.to_generic()
    if isinstance(G, ProductGraph):
        return G.graph
    raise TypeError(f"not a graph: {G!r}")


def _flatten_factors(G):
    if isinstance(G, ProductGraph):
        return list(G.factors), list(G.orders)
    g = as_generic(G)
    return [G], [g.n]


def strong_product(G, H) -> ProductGraph:
    """Strong product: (a,b) -> (c,d) iff each coordinate pair is an edge
    or equal, and the endpoints differ.  Directed inputs are permitted."""
    g, h = as_generic(G), as_generic(H)
    n = g.n * h.n
    if n > PRODUCT_CAP:
        raise ProductTooLarge(f"{n} vertices exceeds cap {PRODUCT_CAP}")
    closed_h = [h.rows[b] | (1 << b) for b in range(h.n)]
    rows = [0] * n
    idx = 0
    for a in range(g.n):
        ca = g.rows[a] | (1 << a)
        segments = []
        while ca:
            x = (ca & -ca).bit_length() - 1
            segments.append(x * h.n)
            ca &= ca - 1
        for b in range(h.n):
            chb = closed_h[b]
            m = 0
            for shift in segments:
                m |= chb << shift
            rows[idx] = m & ~(1 << idx)
            idx += 1
    fg, og = _flatten_factors(G)
    fh, oh = _flatten_factors(H)
    symmetric = (g.symmetric and h.symmetric) or _rows_symmetric(n, rows)
    graph = GenericGraph(n=n, rows=tuple(rows), symmetric=symmetric)
    return ProductGraph(factors=tuple(fg + fh), graph=graph, orders=tuple(og + oh))


def strong_power(G, n: int) -> ProductGraph:
    """n-fold strong product of G with itself."""
    if n < 1:
        raise ValueError("power must be >= 1")
    g = as_generic(G)
    acc = ProductGraph(factors=(G,), graph=g, orders=(g.n,))
    for _ in range(n - 1):
        acc = strong_product(acc, G)
    return acc


def crt_factor_check(m: int, n: int, k: int) -> bool:
    """True iff the CRT bijection x -> (x mod m, x mod n) is an exact
    adjacency isomorphism Paley_k(Z/mn) = Paley_k(Z/m) x Paley_k(Z/n)."""
    if m <= 1 or n <= 1:
        raise NotCoprime("factors must exceed 1")
    if math.gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m},{n}) != 1")
    big = build_paley(make_ring(RingSpec.zmod(m * n)), k).to_generic()
    prod = strong_product(
        build_paley(make_ring(RingSpec.zmod(m)), k),
        build_paley(make_ring(RingSpec.zmod(n)), k),
    )
    perm = [prod.vertex_index((x % m, x % n)) for x in range(m * n)]
    for x in range(m * n):
        row = 0
        pr = prod.graph.rows[perm[x]]
        for y in range(m * n):
            if pr >> perm[y] & 1:
                row |= 1 << y
        if row != big.rows[x]:
            return False
    return True


def export_dimacs(G, path: str) -> None:
    """Write an undirected graph in DIMACS format (1-based, edges sorted)."""
    g = as_generic(G)
    if not g.symmetric:
        raise DirectedUnsupported("DIMACS export needs an undirected graph")
    edges = []
    for i in range(g.n):
        r = g.rows[i] >> (i + 1) << (i + 1)  # j > i only
        while r:
            j = (r & -r).bit_length() - 1
            edges.append((i + 1, j + 1))
            r &= r - 1
    with open(path, "w") as fh:
        fh.write(f"p edge {g.n} {len(edges)}\n")
        for i, j in edges:
            fh.write(f"e {i} {j}\n")


def import_dimacs(path: str) -> GenericGraph:
    """Read a DIMACS undirected graph file."""
    n = 0
    rows: list[int] = []
    with open(path) as fh:
        for line in fh:
            parts = line.split()
            if not parts or parts[0] == "c":
                continue
            if parts[0] == "p":
                n = int(parts[2])
                rows = [0] * n
            elif parts[0] == "e":
                i, j = int(parts[1]) - 1, int(parts[2]) - 1
                if i != j:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
    return GenericGraph(n=n, rows=tuple(rows), symmetric=True)


def graph_fingerprint(G) -> str:
    """SHA-256 over vertex count and adjacency rows; binds certificates."""
    g = as_generic(G)
    h = hashlib.sha256()
    h.update(str(g.n).encode())
    nbytes = (g.n + 7) // 8
    for r in g.rows:
        h.update(r.to_bytes(nbytes, "little"))
    return h.hexdigest()
