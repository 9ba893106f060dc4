"""Tropicalization of the monomial sets into an inequality system.

Each monomial prod t_l^{d_l} contributes the row sum_l d_l z_l >= 0; the
minimum of linear forms is nonnegative exactly when every form is, so the
system over all indices i cuts out the cone. Lattice points graded by
letter sums are counted against the Kostant partition function of the dual
root system.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .decograph import build_graph
from .monomial import ExponentVec
from .rootsystem import CartanData, dual_cartan, positive_roots
from .wordtools import ReducedWord


@dataclass(frozen=True)
class ConeSystem:
    cd: CartanData
    word: ReducedWord
    rows: tuple[tuple[int, ExponentVec], ...]

    @property
    def N(self) -> int:
        return self.word.N


def half_potential_monomials(cd: CartanData, w: ReducedWord, force: bool = False) -> dict[int, list[ExponentVec]]:
    """For each index i, the monomial set of its summand, in creation order."""
    return {
        i: list(build_graph(cd, w, i, force=force).vertices.keys())
        for i in range(1, cd.n + 1)
    }


def string_cone(cd: CartanData, w: ReducedWord, force: bool = False) -> ConeSystem:
    """One inequality row per monomial over all i, deduplicated, ordered by i then creation."""
    rows: list[tuple[int, ExponentVec]] = []
    seen: set[ExponentVec] = set()
    for i, monomials in half_potential_monomials(cd, w, force=force).items():
        for d in monomials:
            if d not in seen:
                seen.add(d)
                rows.append((i, d))
    return ConeSystem(cd, w, tuple(rows))


def contains(cone: ConeSystem, z) -> bool:
    """Whether the integer vector z satisfies every row."""
    zt = tuple(z)
    if len(zt) != cone.N:
        raise ValueError(f"expected a vector of length {cone.N}, got {len(zt)}")
    return all(sum(c * x for c, x in zip(row.d, zt)) >= 0 for _, row in cone.rows)


def _class_tuples(size: int, total: int, bound: int) -> list[tuple[int, ...]]:
    """All integer tuples of the given size with entries in [-bound, bound] summing to total."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], left: int, remaining: int) -> None:
        if left == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        lo = max(-bound, remaining - bound * (left - 1))
        hi = min(bound, remaining + bound * (left - 1))
        for x in range(lo, hi + 1):
            prefix.append(x)
            rec(prefix, left - 1, remaining - x)
            prefix.pop()

    rec([], size, total)
    return out


def weight_census(cone: ConeSystem, mvec) -> int:
    """Count lattice points of the cone with prescribed letter sums.

    For each letter value t, the coordinates at positions carrying t must sum
    to mvec[t-1]. Candidates range over [-S, S] per coordinate with
    S = sum(mvec); rows whose support sits inside a single letter class
    filter that class before the full product is formed.
    """
    w = cone.word
    n, N = cone.cd.n, cone.N
    mv = tuple(int(x) for x in mvec)
    if len(mv) != n or any(x < 0 for x in mv):
        raise ValueError(f"mvec must be {n} nonnegative integers")
    S = sum(mv)
    if S == 0:
        return 1
    classes = [[l for l in range(1, N + 1) if w.letter(l) == t] for t in range(1, n + 1)]
    for t0 in range(n):
        if mv[t0] > 0 and not classes[t0]:
            return 0
    row_mat = np.array([row.d for _, row in cone.rows], dtype=np.int64)

    class_arrays = []
    for t0 in range(n):
        positions = classes[t0]
        if not positions:
            class_arrays.append((positions, np.zeros((1, 0), dtype=np.int64)))
            continue
        arr = np.array(_class_tuples(len(positions), mv[t0], S), dtype=np.int64)
        if arr.size == 0:
            return 0
        arr = arr.reshape(-1, len(positions))
        pos_set = set(positions)
        for _, row in cone.rows:
            support = {l for l in range(1, N + 1) if row.d[l - 1] != 0}
            if support and support <= pos_set:
                sub = np.array([row.d[l - 1] for l in positions], dtype=np.int64)
                arr = arr[arr @ sub >= 0]
                if arr.shape[0] == 0:
                    return 0
        class_arrays.append((positions, arr))

    z = np.zeros((1, N), dtype=np.int64)
    for positions, arr in class_arrays:
        if not positions:
            continue
        k = arr.shape[0]
        prev = z.shape[0]
        z = np.repeat(z, k, axis=0)
        block = np.tile(arr, (prev, 1))
        z[:, [l - 1 for l in positions]] = block
    feasible = (z @ row_mat.T >= 0).all(axis=1)
    return int(feasible.sum())


@lru_cache(maxsize=None)
def _dual_positive_root_list(cd: CartanData) -> tuple[tuple[int, ...], ...]:
    roots = sorted(r.coords for r in positive_roots(dual_cartan(cd)))
    return tuple(roots)


def dual_kostant_count(cd: CartanData, mvec) -> int:
    """Number of multisets of dual positive roots summing to sum mvec[t-1] alpha_t.

    This is the reference count the census must reproduce; the dual
    (transposed-matrix) system is used here and nowhere else.
    """
    roots = _dual_positive_root_list(cd)
    target = tuple(int(x) for x in mvec)

    @lru_cache(maxsize=None)
    def count(idx: int, remaining: tuple[int, ...]) -> int:
        if not any(remaining):
            return 1
        if idx == len(roots):
            return 0
        root = roots[idx]
        total = 0
        rem = list(remaining)
        while True:
            total += count(idx + 1, tuple(rem))
            if any(rv > r for rv, r in zip(root, rem)):
                break
            for t in range(len(rem)):
                rem[t] -= root[t]
        return total

    return count(0, target)


def _row_text(row: ExponentVec, sep: str = "") -> str:
    terms = []
    for l, c in enumerate(row.d, start=1):
        if c == 0:
            continue
        mag = abs(c)
        body = f"z_{l}" if mag == 1 else f"{mag}z_{l}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    if not terms:
        return "0"
    return " ".join(terms)


def render(cone: ConeSystem, fmt: str = "text") -> str:
    """The system as text, LaTeX or JSON; one row per line for the text forms."""
    if fmt == "text":
        return "\n".join(f"{_row_text(row)} >= 0" for _, row in cone.rows) + "\n"
    if fmt == "latex":
        lines = [f"{_row_text(row)} &\\geq 0 \\\\" for _, row in cone.rows]
        return "\\begin{align*}\n" + "\n".join(lines) + "\n\\end{align*}\n"
    if fmt == "json":
        return json.dumps(to_json_dict(cone), indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def to_json_dict(cone: ConeSystem) -> dict:
    return {
        "type": str(cone.cd.ctype),
        "rank": cone.cd.n,
        "word": list(cone.word.letters),
        "rows": [{"i": i, "coeffs": list(row.d)} for i, row in cone.rows],
    }
