"""Cartan matrices, weights, roots and simple reflections for the finite types.

Conventions, fixed once for the whole package:

* the Cartan matrix is stored as ``a[i][j] = alpha_j(h_i)``, with 1-based
  indices in every public signature;
* weights live in fundamental-weight coordinates, entry t is ``<h_t, lam>``;
* roots live in simple-root coordinates, entry t is the coefficient of
  ``alpha_t``.

Diagrams are numbered as in Kac's tables: A/B/C are chains 1..n with the
asymmetric bond at the tail (B has a[n][n-1] = -2, C has a[n-1][n] = -2),
D forks at the tail (n-1 and n both attached to n-2), E6/E7/E8 hang their
last node off node 3/4/5 of the chain, F4 has a[3][2] = -2, and G2 has
a[2][1] = -3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class RootSystemError(ValueError):
    """Illegal Cartan type, rank or index."""


class NotMinuscule(ValueError):
    """The fundamental representation for this index is not minuscule."""


_FAMILIES = "ABCDEFG"
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class CartanType:
    """A family letter plus a rank, e.g. C3 or E7."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise RootSystemError(f"unknown family {self.family!r}")
        lo, hi = _RANK_RANGE[self.family]
        if not isinstance(self.rank, int) or self.rank < lo or (hi is not None and self.rank > hi):
            raise RootSystemError(f"rank {self.rank} is out of range for family {self.family}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """Parse strings like "C3", "d4", " g2 " (case-insensitive)."""
        s = text.strip().upper()
        if len(s) < 2 or s[0] not in _FAMILIES or not s[1:].isdigit():
            raise RootSystemError(f"cannot parse a Cartan type from {text!r}")
        return cls(s[0], int(s[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class CartanData:
    """A Cartan matrix with its type tag.

    ``rows[i-1][j-1]`` is a_{i,j} = alpha_j(h_i).
    """

    ctype: CartanType
    n: int
    rows: tuple[tuple[int, ...], ...]

    def a(self, i: int, j: int) -> int:
        """Entry a_{i,j} = alpha_j(h_i), both indices 1-based."""
        return self.rows[i - 1][j - 1]


@dataclass(frozen=True)
class WeightVec:
    """An integral weight in fundamental-weight coordinates."""

    coords: tuple[int, ...]

    def pairing(self, t: int) -> int:
        """<h_t, lambda>, 1-based t."""
        return self.coords[t - 1]

    def __add__(self, other: "WeightVec") -> "WeightVec":
        return WeightVec(tuple(x + y for x, y in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "WeightVec") -> "WeightVec":
        return WeightVec(tuple(x - y for x, y in zip(self.coords, other.coords, strict=True)))

    def __neg__(self) -> "WeightVec":
        return WeightVec(tuple(-x for x in self.coords))


@dataclass(frozen=True)
class RootVec:
    """A root in simple-root coordinates."""

    coords: tuple[int, ...]

    @property
    def is_positive(self) -> bool:
        return any(self.coords) and all(c >= 0 for c in self.coords)

    @property
    def is_negative(self) -> bool:
        return any(self.coords) and all(c <= 0 for c in self.coords)

    def __neg__(self) -> "RootVec":
        return RootVec(tuple(-x for x in self.coords))


def fundamental_weight(n: int, i: int) -> WeightVec:
    """Lambda_i as a WeightVec of length n."""
    if not 1 <= i <= n:
        raise RootSystemError(f"index {i} out of [1, {n}]")
    return WeightVec(tuple(1 if t == i - 1 else 0 for t in range(n)))


def zero_weight(n: int) -> WeightVec:
    return WeightVec((0,) * n)


def simple_root(n: int, j: int) -> RootVec:
    """alpha_j as a RootVec of length n."""
    if not 1 <= j <= n:
        raise RootSystemError(f"index {j} out of [1, {n}]")
    return RootVec(tuple(1 if t == j - 1 else 0 for t in range(n)))


def simple_root_weight(cd: CartanData, j: int) -> WeightVec:
    """alpha_j written in fundamental-weight coordinates (column j of the Cartan matrix)."""
    return WeightVec(tuple(cd.rows[t][j - 1] for t in range(cd.n)))


def _bonds(ctype: CartanType) -> list[tuple[int, int, int, int]]:
    """Dynkin bonds as (i, j, a_ij, a_ji) with i < j."""
    fam, n = ctype.family, ctype.rank
    chain = [(i, i + 1, -1, -1) for i in range(1, n)]
    if fam == "A":
        return chain
    if fam == "B":
        chain[-1] = (n - 1, n, -1, -2)
        return chain
    if fam == "C":
        chain[-1] = (n - 1, n, -2, -1)
        return chain
    if fam == "D":
        return [(i, i + 1, -1, -1) for i in range(1, n - 2)] + [
            (n - 2, n - 1, -1, -1),
            (n - 2, n, -1, -1),
        ]
    if fam == "E":
        branch = {6: 3, 7: 4, 8: 5}[n]
        return [(i, i + 1, -1, -1) for i in range(1, n - 1)] + [(branch, n, -1, -1)]
    if fam == "F":
        return [(1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)]
    # G2
    return [(1, 2, -1, -3)]


@lru_cache(maxsize=None)
def cartan_matrix(ctype: CartanType) -> CartanData:
    """The Cartan matrix of the given type, a_{i,j} = alpha_j(h_i)."""
    n = ctype.rank
    m = [[2 if r == c else 0 for c in range(n)] for r in range(n)]
    for i, j, aij, aji in _bonds(ctype):
        m[i - 1][j - 1] = aij
        m[j - 1][i - 1] = aji
    return CartanData(ctype, n, tuple(tuple(row) for row in m))


def dual_cartan(cd: CartanData) -> CartanData:
    """The transposed Cartan matrix; the type tag is kept only as bookkeeping."""
    return CartanData(cd.ctype, cd.n, tuple(zip(*cd.rows)))


def reflect(cd: CartanData, j: int, lam: WeightVec) -> WeightVec:
    """s_j(lambda) = lambda - <h_j, lambda> alpha_j in fundamental coordinates."""
    cj = lam.coords[j - 1]
    if cj == 0:
        return lam
    return WeightVec(tuple(lam.coords[t] - cj * cd.rows[t][j - 1] for t in range(cd.n)))


def reflect_root(cd: CartanData, j: int, beta: RootVec) -> RootVec:
    """s_j(beta) = beta - <h_j, beta> alpha_j in simple-root coordinates."""
    pairing = sum(cd.rows[j - 1][t] * beta.coords[t] for t in range(cd.n))
    if pairing == 0:
        return beta
    out = list(beta.coords)
    out[j - 1] -= pairing
    return RootVec(tuple(out))


@lru_cache(maxsize=None)
def positive_roots(cd: CartanData) -> frozenset[RootVec]:
    """All positive roots, as the reflection closure of the simple roots."""
    roots: set[RootVec] = {simple_root(cd.n, j) for j in range(1, cd.n + 1)}
    frontier = list(roots)
    while frontier:
        beta = frontier.pop()
        for j in range(1, cd.n + 1):
            img = reflect_root(cd, j, beta)
            if img.is_positive and img not in roots:
                roots.add(img)
                frontier.append(img)
    return frozenset(roots)


@lru_cache(maxsize=None)
def minuscule_indices(cd: CartanData) -> frozenset[int]:
    """Indices i whose fundamental representation is minuscule.

    Criterion: every positive coroot pairs with Lambda_i in {0, 1}, i.e. every
    positive root of the dual (transposed) matrix has alpha_i-coefficient at
    most 1.
    """
    dual_roots = positive_roots(dual_cartan(cd))
    out = set()
    for i in range(1, cd.n + 1):
        if max(r.coords[i - 1] for r in dual_roots) <= 1:
            out.add(i)
    return frozenset(out)
