"""Independent brute-force recomputations of the monomial sets.

Two oracles, deliberately sharing nothing with the graph builder:

* trail enumeration in a minuscule weight diagram, walking weight paths
  gamma_0 -> gamma_N with steps of 0 or 1 times a simple root, which yields
  both the exponent vectors c and the monomials d;
* exact symbolic expansion of the relevant minor of the matrix product
  x_{-i_1}(t_1) ... x_{-i_N}(t_N) in type A, which also recovers the
  positive integer coefficients the graph never sees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .decograph import b_from_d, build_graph
from .monomial import ExponentVec, render
from .rootsystem import (
    CartanData,
    NotMinuscule,
    WeightVec,
    fundamental_weight,
    minuscule_indices,
    reflect,
    simple_root_weight,
)
from .wordtools import ReducedWord


class NotTypeA(ValueError):
    """The minor oracle only speaks type A."""


class MixedSigns(RuntimeError):
    """A minor expansion with both signs; the sign convention is broken."""


# ---------------------------------------------------------------- trails


def _minus_w0_lambda(cd: CartanData, w: ReducedWord, i: int) -> WeightVec:
    """-w0 Lambda_i, with w0 taken from the word itself."""
    mu = fundamental_weight(cd.n, i)
    for l in range(w.N, 0, -1):
        mu = reflect(cd, w.letter(l), mu)
    return -mu


def _orbit(cd: CartanData, start: WeightVec) -> frozenset[WeightVec]:
    seen = {start}
    frontier = [start]
    while frontier:
        mu = frontier.pop()
        for j in range(1, cd.n + 1):
            nu = reflect(cd, j, mu)
            if nu not in seen:
                seen.add(nu)
                frontier.append(nu)
    return frozenset(seen)


def minuscule_weight_diagram(cd: CartanData, w: ReducedWord, i: int) -> frozenset[WeightVec]:
    """The weight set of the minuscule representation with highest weight -w0 Lambda_i.

    A single Weyl orbit; every pairing with a coroot lands in {-1, 0, 1},
    which is asserted because the trail walk depends on it.
    """
    if i not in minuscule_indices(cd):
        raise NotMinuscule(f"index {i} of {cd.ctype} is not minuscule")
    weights = _orbit(cd, _minus_w0_lambda(cd, w, i))
    for mu in weights:
        if any(abs(c) > 1 for c in mu.coords):
            raise AssertionError(f"non-minuscule pairing in diagram for ({cd.ctype}, {i}): {mu}")
    return weights


def _trails(cd: CartanData, w: ReducedWord, i: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (c-vector, d-vector) pairs of weight paths gamma_0 -> -s_i Lambda_i.

    gamma_{k-1} = gamma_k + c_k alpha_{i_k} with c_k in {0, 1} and every
    gamma_k inside the weight diagram; d_k = <h_{i_k}, gamma_k> + c_k.
    """
    weights = minuscule_weight_diagram(cd, w, i)
    target = -reflect(cd, i, fundamental_weight(cd.n, i))
    alphas = {j: simple_root_weight(cd, j) for j in set(w.letters)}
    start = _minus_w0_lambda(cd, w, i)
    out: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    cs: list[int] = []
    ds: list[int] = []

    def rec(k: int, gamma: WeightVec) -> None:
        if k > w.N:
            if gamma == target:
                out.append((tuple(cs), tuple(ds)))
            return
        letter = w.letter(k)
        for c in (0, 1):
            nxt = gamma - alphas[letter] if c else gamma
            if nxt in weights:
                cs.append(c)
                ds.append(nxt.pairing(letter) + c)
                rec(k + 1, nxt)
                cs.pop()
                ds.pop()

    rec(1, start)
    return out


def minuscule_trail_monomials(cd: CartanData, w: ReducedWord, i: int) -> set[ExponentVec]:
    """The monomial set read off from the trails alone."""
    return {ExponentVec(ds) for _, ds in _trails(cd, w, i)}


def crosscheck_b_equals_c(cd: CartanData, w: ReducedWord, i: int) -> dict:
    """For every trail, the b recursion on its d-vector must return its c-vector."""
    trails = _trails(cd, w, i)
    mismatches = []
    for cs, ds in trails:
        b = b_from_d(cd, w, i, ExponentVec(ds))
        if b != cs:
            mismatches.append({"d": list(ds), "c": list(cs), "b": list(b)})
    return {
        "input": {"type": str(cd.ctype), "word": list(w.letters), "i": i},
        "trails": len(trails),
        "status": "pass" if not mismatches else "fail",
        "mismatches": mismatches,
    }


# ---------------------------------------------------------------- type A minors


@dataclass
class LaurentPoly:
    """A Laurent polynomial in t_1..t_N over the integers; zero terms never stored."""

    N: int
    terms: dict[tuple[int, ...], int] = field(default_factory=dict)

    @classmethod
    def zero(cls, N: int) -> "LaurentPoly":
        return cls(N, {})

    @classmethod
    def monomial(cls, N: int, expo: tuple[int, ...], coeff: int = 1) -> "LaurentPoly":
        return cls(N, {expo: coeff}) if coeff else cls(N, {})

    @classmethod
    def one(cls, N: int) -> "LaurentPoly":
        return cls.monomial(N, (0,) * N)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def add(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly(self.N, out)

    def mul(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return LaurentPoly(self.N, out)

    def neg(self) -> "LaurentPoly":
        return LaurentPoly(self.N, {e: -c for e, c in self.terms.items()})

    def support(self) -> set[ExponentVec]:
        return {ExponentVec(e) for e in self.terms}


def _poly_matmul(A, B, N):
    size = len(A)
    out = [[LaurentPoly.zero(N) for _ in range(size)] for _ in range(size)]
    for r in range(size):
        for c in range(size):
            acc = LaurentPoly.zero(N)
            for m in range(size):
                if A[r][m].is_zero or B[m][c].is_zero:
                    continue
                acc = acc.add(A[r][m].mul(B[m][c]))
            out[r][c] = acc
    return out


def _poly_det(M, N):
    size = len(M)
    det = LaurentPoly.zero(N)
    for perm in permutations(range(size)):
        inversions = sum(
            1 for x in range(size) for y in range(x + 1, size) if perm[x] > perm[y]
        )
        term = LaurentPoly.one(N)
        for r in range(size):
            term = term.mul(M[r][perm[r]])
            if term.is_zero:
                break
        if term.is_zero:
            continue
        det = det.add(term if inversions % 2 == 0 else term.neg())
    return det


def typeA_minor_poly(cd: CartanData, w: ReducedWord, i: int) -> LaurentPoly:
    """Exact expansion of the minor on rows {n+2-i..n+1}, columns [1,i-1] u {i+1}.

    The matrix is the product over the word of the one-parameter factors,
    each the identity except for the 2x2 block [[t^-1, 0], [1, t]] at the
    letter's position. The result is normalized to positive coefficients;
    a genuinely mixed-sign expansion is a hard error.
    """
    if cd.ctype.family != "A":
        raise NotTypeA(f"minor oracle needs type A, got {cd.ctype}")
    n, N = cd.n, w.N
    size = n + 1
    prod = [
        [LaurentPoly.one(N) if r == c else LaurentPoly.zero(N) for c in range(size)]
        for r in range(size)
    ]
    for l in range(1, N + 1):
        m = w.letter(l)
        e_inv = tuple(-1 if t == l - 1 else 0 for t in range(N))
        e_pos = tuple(1 if t == l - 1 else 0 for t in range(N))
        factor = [
            [LaurentPoly.one(N) if r == c else LaurentPoly.zero(N) for c in range(size)]
            for r in range(size)
        ]
        factor[m - 1][m - 1] = LaurentPoly.monomial(N, e_inv)
        factor[m][m - 1] = LaurentPoly.one(N)
        factor[m][m] = LaurentPoly.monomial(N, e_pos)
        prod = _poly_matmul(prod, factor, N)
    rows = list(range(n + 2 - i, n + 2))
    cols = list(range(1, i)) + [i + 1]
    sub = [[prod[r - 1][c - 1] for c in cols] for r in rows]
    det = _poly_det(sub, N)
    coeffs = list(det.terms.values())
    if coeffs and all(c < 0 for c in coeffs):
        det = det.neg()
    elif any(c < 0 for c in coeffs):
        raise MixedSigns(f"minor for ({cd.ctype}, i={i}, word {w}) has mixed signs")
    return det


# ---------------------------------------------------------------- agreement


def agreement_report(cd: CartanData, w: ReducedWord, i: int) -> dict:
    """Compare the graph vertex set against every oracle that applies.

    Type A gets the three-way comparison with coefficients; other types with
    a minuscule index get the trail comparison only.
    """
    graph_set = set(build_graph(cd, w, i).vertices.keys())
    trail_set = minuscule_trail_monomials(cd, w, i) if i in minuscule_indices(cd) else None
    minor = typeA_minor_poly(cd, w, i) if cd.ctype.family == "A" else None

    oracle_set = None
    notes = []
    if minor is not None:
        oracle_set = minor.support()
    if trail_set is not None:
        if oracle_set is None:
            oracle_set = trail_set
        elif oracle_set != trail_set:
            notes.append("trail and minor oracles disagree with each other")
    if oracle_set is None:
        raise NotMinuscule(f"no oracle applies to ({cd.ctype}, i={i})")

    missing = sorted(oracle_set - graph_set, key=lambda v: v.d)
    extra = sorted(graph_set - oracle_set, key=lambda v: v.d)
    status = "pass" if not missing and not extra and not notes else "fail"
    report = {
        "input": {"type": str(cd.ctype), "word": list(w.letters), "i": i},
        "status": status,
        "graph_count": len(graph_set),
        "trail_count": len(trail_set) if trail_set is not None else None,
        "minor_count": len(minor.terms) if minor is not None else None,
        "missing_in_graph": [render(v) for v in missing],
        "extra_in_graph": [render(v) for v in extra],
        "coefficient_table": (
            {render(ExponentVec(e)): c for e, c in sorted(minor.terms.items())}
            if minor is not None
            else None
        ),
        "notes": notes,
    }
    return report
