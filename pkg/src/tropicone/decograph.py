"""The monomial graph of one half-potential summand.

Vertices are Laurent monomials in t_1..t_N, each carrying its b integer
vector; edges divide by an A_j monomial. Construction starts from the single
all-nonnegative monomial t_k and repeatedly fires the arrow conditions:

  a position j fires when j+ <= N, d_j > 0, b_{j+} > 0 and either
    (a) d_{j+} < d_j, or
    (b) d_{j+} = d_j and the chain j^{2+}, j^{3+}, ... shows the pattern
        (d, b) = (0, 0) until it terminates in (d, b) = (-1, 1).

Each fire produces d' = d / A_j and b' = b with +1 at j and -1 at j+, and
b' must agree with the b recursion recomputed from d' alone; a disagreement
means a convention bug or an input outside the proven support, and is never
silently accepted.

The quantity L = sum_t t * b_t drops by exactly j+ - j along every edge,
which is what makes the worklist terminate and the graph acyclic.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from enum import Enum

from .monomial import ExponentVec, a_monomial, lowest_term, render
from .rootsystem import (
    CartanData,
    CartanType,
    NotMinuscule,
    fundamental_weight,
    minuscule_indices,
    reflect,
)
from .wordtools import ReducedWord, j_plus, source_index


class GraphError(RuntimeError):
    """Base for internal assertion failures during graph construction."""


class ClosedFormMismatch(GraphError):
    """The b recursion and its closed form disagree on the initial vertex."""


class BUpdateMismatch(GraphError):
    """A fired b update disagrees with the b recursion on the target."""


class InvariantViolation(GraphError):
    """A structural invariant (edge gate, L drop, b sign) failed."""


class UnsupportedIndex(RuntimeError):
    """No correctness result covers this (type, i); pass force to build anyway."""


class SupportStatus(Enum):
    MINUSCULE_LIKE = "minuscule_like"
    G2_PROVEN = "g2_proven"
    UNPROVEN = "unproven"


# Indices with a proven monomial-set description, per exceptional family.
_EXCEPTIONAL_OK = {
    "E6": frozenset({1, 2, 4, 5, 6}),
    "E7": frozenset({1, 5, 6, 7}),
    "E8": frozenset({1, 7}),
    "F4": frozenset({1, 4}),
}


def supported(ctype: CartanType, i: int) -> SupportStatus:
    if ctype.family == "G":
        return SupportStatus.G2_PROVEN
    if ctype.family in "ABCD":
        return SupportStatus.MINUSCULE_LIKE
    if i in _EXCEPTIONAL_OK.get(str(ctype), frozenset()):
        return SupportStatus.MINUSCULE_LIKE
    return SupportStatus.UNPROVEN


@dataclass(frozen=True)
class Vertex:
    d: ExponentVec
    b: tuple[int, ...]


@dataclass
class DecoGraph:
    cd: CartanData
    word: ReducedWord
    i: int
    vertices: dict[ExponentVec, Vertex]
    edges: list[tuple[ExponentVec, int, ExponentVec]]
    source: ExponentVec
    status: SupportStatus
    rule: str
    forced: bool = False
    violations: list[str] = field(default_factory=list)

    def sinks(self) -> list[ExponentVec]:
        has_out = {src for src, _, _ in self.edges}
        return [d for d in self.vertices if d not in has_out]


def b_from_d(cd: CartanData, w: ReducedWord, i: int, d: ExponentVec) -> tuple[int, ...]:
    """The b integers of a monomial, from the downward recursion.

    b_N = d_N + <h_{i_N}, s_i Lambda_i> and, going down,
    b_t = d_t + <h_{i_t}, s_i Lambda_i> - sum_{l=t}^{N-1} b_{l+1} a_{i_t, i_{l+1}}.
    """
    N = w.N
    silam = reflect(cd, i, fundamental_weight(cd.n, i))
    pair = [silam.pairing(w.letters[t0]) for t0 in range(N)]
    b = [0] * N
    b[N - 1] = d.d[N - 1] + pair[N - 1]
    for t0 in range(N - 2, -1, -1):
        row = cd.rows[w.letters[t0] - 1]
        acc = 0
        for l0 in range(t0 + 1, N):
            acc += b[l0] * row[w.letters[l0] - 1]
        b[t0] = d.d[t0] + pair[t0] - acc
    return tuple(b)


def _initial_b_closed_form(cd: CartanData, w: ReducedWord, i: int, k: int) -> tuple[int, ...]:
    """b at the source, via suffix reflections instead of the recursion.

    Above k the pairing is taken against s_{i_{t+1}} ... s_{i_N} s_i Lambda_i,
    below k against s_{i_{t+1}} ... s_{i_N} Lambda_i, and b_k = 0.
    """
    N = w.N
    out = [0] * N
    mu = reflect(cd, i, fundamental_weight(cd.n, i))
    for t in range(N, k, -1):
        out[t - 1] = mu.pairing(w.letter(t))
        mu = reflect(cd, w.letter(t), mu)
    nu = fundamental_weight(cd.n, i)
    for t in range(N, 0, -1):
        val = nu.pairing(w.letter(t))
        nu = reflect(cd, w.letter(t), nu)
        if t < k:
            out[t - 1] = val
    return tuple(out)


def initial_vertex(cd: CartanData, w: ReducedWord, i: int) -> Vertex:
    """The source vertex t_k, with its b vector checked two independent ways."""
    k = source_index(w, i)
    d = ExponentVec.unit(w.N, k)
    b = b_from_d(cd, w, i, d)
    closed = _initial_b_closed_form(cd, w, i, k)
    if b != closed:
        raise ClosedFormMismatch(
            f"initial b mismatch for {cd.ctype} i={i} word {w}: recursion {b}, closed form {closed}"
        )
    return Vertex(d, b)


def _condition_b(w: ReducedWord, v: Vertex, j: int) -> bool:
    """The (d,b) = (0,0) ... (-1,1) chain test along j^{2+}, j^{3+}, ..."""
    pos = j_plus(w, j)
    while True:
        pos = j_plus(w, pos)
        if pos > w.N:
            return False
        dp, bp = v.d.d[pos - 1], v.b[pos - 1]
        if dp == -1 and bp == 1:
            return True
        if not (dp == 0 and bp == 0):
            return False


def firing_labels(cd: CartanData, w: ReducedWord, v: Vertex) -> list[int]:
    """All positions that fire from v under the generic rule, ascending."""
    out = []
    for j in range(1, w.N + 1):
        jp = j_plus(w, j)
        if jp > w.N:
            continue
        if v.d.d[j - 1] <= 0 or v.b[jp - 1] <= 0:
            continue
        dj, djp = v.d.d[j - 1], v.d.d[jp - 1]
        if djp < dj or (djp == dj and _condition_b(w, v, j)):
            out.append(j)
    return out


def firing_labels_minuscule(cd: CartanData, w: ReducedWord, v: Vertex, i: int | None = None) -> list[int]:
    """The fast rule d_j = 1, d_{j+} != 1; only valid on minuscule (type, i)."""
    if i is not None and i not in minuscule_indices(cd):
        raise NotMinuscule(f"index {i} of {cd.ctype} is not minuscule")
    out = []
    for j in range(1, w.N + 1):
        jp = j_plus(w, j)
        if jp > w.N:
            continue
        if v.d.d[j - 1] == 1 and v.d.d[jp - 1] != 1:
            out.append(j)
    return out


def step_vertex(cd: CartanData, w: ReducedWord, i: int, v: Vertex, j: int) -> Vertex:
    """Fire position j: divide by A_j and shift b at j and j+.

    The shifted b must equal the recursion on the new monomial.
    """
    jp = j_plus(w, j)
    if jp > w.N:
        raise InvariantViolation(f"position {j} has no next occurrence; cannot fire")
    if v.b[jp - 1] <= 0:
        raise InvariantViolation(
            f"edge at j={j} would have b_(j+) = {v.b[jp - 1]} <= 0 on {render(v.d)}"
        )
    d2 = v.d.div(a_monomial(cd, w, j))
    b2 = list(v.b)
    b2[j - 1] += 1
    b2[jp - 1] -= 1
    b2 = tuple(b2)
    expected = b_from_d(cd, w, i, d2)
    if b2 != expected:
        raise BUpdateMismatch(
            f"b update at j={j} from {render(v.d)} gives {b2}, recursion on {render(d2)} gives {expected}"
        )
    return Vertex(d2, b2)


def _weight_L(b: tuple[int, ...]) -> int:
    return sum(t * bt for t, bt in enumerate(b, start=1))


def build_graph(
    cd: CartanData,
    w: ReducedWord,
    i: int,
    force: bool = False,
    rule: str = "generic",
    max_vertices: int = 100000,
) -> DecoGraph:
    """Worklist construction of the whole monomial graph for one index i.

    FIFO over vertices, each expanded exactly once, labels ascending; targets
    are merged by exponent vector with a hard b-equality check. For inputs
    without a proven description (status Unproven, reachable only with
    force=True) the internal assertions are collected into graph.violations
    instead of raised, since there is no theorem to contradict.
    """
    if rule not in ("generic", "minuscule"):
        raise ValueError(f"unknown rule {rule!r}")
    status = supported(cd.ctype, i)
    if status is SupportStatus.UNPROVEN and not force:
        raise UnsupportedIndex(
            f"no proven monomial description for ({cd.ctype}, i={i}); use force to build anyway"
        )
    tolerant = status is SupportStatus.UNPROVEN

    v0 = initial_vertex(cd, w, i)
    vertices: dict[ExponentVec, Vertex] = {v0.d: v0}
    edges: list[tuple[ExponentVec, int, ExponentVec]] = []
    violations: list[str] = []
    queue: deque[ExponentVec] = deque([v0.d])

    def labels_of(v: Vertex) -> list[int]:
        if rule == "minuscule":
            return firing_labels_minuscule(cd, w, v, i)
        return firing_labels(cd, w, v)

    while queue:
        v = vertices[queue.popleft()]
        for j in labels_of(v):
            jp = j_plus(w, j)
            d2 = v.d.div(a_monomial(cd, w, j))
            b2 = list(v.b)
            b2[j - 1] += 1
            b2[jp - 1] -= 1
            b2 = tuple(b2)
            problems = []
            update_broken = False
            if v.b[jp - 1] <= 0:
                problems.append(f"edge ({render(v.d)}, {j}) with b_(j+) <= 0")
            expected = b_from_d(cd, w, i, d2)
            if b2 != expected:
                update_broken = True
                problems.append(
                    f"b update at j={j} from {render(v.d)}: shifted {b2}, recursion {expected}"
                )
                b2 = expected
            if _weight_L(b2) != _weight_L(v.b) + j - jp:
                problems.append(f"L does not drop by {jp - j} on edge ({render(v.d)}, {j})")
            if any(x < 0 for x in b2):
                problems.append(f"negative b entry on {render(d2)}: {b2}")
            if problems:
                if not tolerant:
                    cls = BUpdateMismatch if update_broken else InvariantViolation
                    raise cls("; ".join(problems))
                violations.extend(problems)
            known = vertices.get(d2)
            if known is None:
                if len(vertices) >= max_vertices:
                    raise GraphError(f"vertex cap {max_vertices} hit; aborting")
                vertices[d2] = Vertex(d2, b2)
                queue.append(d2)
            elif known.b != b2:
                msg = f"merge at {render(d2)}: stored b {known.b}, incoming {b2}"
                if not tolerant:
                    raise BUpdateMismatch(msg)
                violations.append(msg)
            edges.append((v.d, j, d2))

    return DecoGraph(
        cd=cd,
        word=w,
        i=i,
        vertices=vertices,
        edges=edges,
        source=v0.d,
        status=status,
        rule=rule,
        forced=force,
        violations=violations,
    )


def verify_graph(g: DecoGraph) -> dict:
    """Recheck the structural invariants of a finished graph, from scratch.

    Returns {"checks": [{"name", "status", "details"}...], "status": "pass"|"fail"}.
    """
    cd, w, i = g.cd, g.word, g.i
    checks = []

    def add(name: str, ok: bool, details: str = "") -> None:
        checks.append({"name": name, "status": "pass" if ok else "fail", "details": details})

    k = source_index(w, i)
    nonneg = [d for d in g.vertices if all(e >= 0 for e in d.d)]
    ok = nonneg == [g.source] and g.source == ExponentVec.unit(w.N, k)
    add("unique_nonnegative_source", ok, f"nonnegative vertices: {[render(d) for d in nonneg]}")

    lt = lowest_term(cd, w, i)
    sinks = g.sinks()
    add(
        "lowest_term_is_sink",
        lt in g.vertices and lt in sinks,
        f"lowest term {render(lt)}, sinks {[render(d) for d in sinks]}",
    )

    bad_div = [e for e in g.edges if e[2] != e[0].div(a_monomial(cd, w, e[1]))]
    add("edges_divide_by_a", not bad_div, f"{len(bad_div)} bad edges")

    bad_b = []
    bad_gate = []
    bad_l = []
    for src, j, dst in g.edges:
        jp = j_plus(w, j)
        bs, bd = g.vertices[src].b, g.vertices[dst].b
        shifted = list(bs)
        shifted[j - 1] += 1
        shifted[jp - 1] -= 1
        if tuple(shifted) != bd:
            bad_b.append((render(src), j))
        if bs[jp - 1] <= 0:
            bad_gate.append((render(src), j))
        if _weight_L(bd) != _weight_L(bs) + j - jp or jp <= j:
            bad_l.append((render(src), j))
    add("b_update_on_edges", not bad_b, f"{len(bad_b)} bad edges")
    add("edge_gate_b_positive", not bad_gate, f"{len(bad_gate)} bad edges")
    add("l_drops_on_edges", not bad_l, f"{len(bad_l)} bad edges")

    bad_bneg = [render(d) for d, v in g.vertices.items() if any(x < 0 for x in v.b)]
    add("b_entries_nonnegative", not bad_bneg, f"{len(bad_bneg)} vertices")

    bad_rec = [
        render(d) for d, v in g.vertices.items() if v.b != b_from_d(cd, w, i, d)
    ]
    add("b_matches_recursion", not bad_rec, f"{len(bad_rec)} vertices")

    if i in minuscule_indices(cd):
        fast = build_graph(cd, w, i, rule="minuscule")
        same = set(fast.vertices) == set(g.vertices) and set(fast.edges) == set(g.edges)
        add("minuscule_rule_equivalent", same, "")

    status = "pass" if all(c["status"] == "pass" for c in checks) else "fail"
    return {"checks": checks, "status": status}


def to_dot(g: DecoGraph) -> str:
    """DOT text; vertex labels are the rendered monomials, edge labels the positions."""
    names = {d: f"v{idx}" for idx, d in enumerate(g.vertices)}
    lines = [f'digraph "{g.cd.ctype}_i{g.i}" {{', "  rankdir=TB;"]
    for d, name in names.items():
        lines.append(f'  {name} [label="{render(d)}"];')
    for src, j, dst in g.edges:
        lines.append(f'  {names[src]} -> {names[dst]} [label="{j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(g: DecoGraph) -> dict:
    return {
        "meta": {
            "type": str(g.cd.ctype),
            "rank": g.cd.n,
            "word": list(g.word.letters),
            "i": g.i,
            "support": g.status.value,
            "rule": g.rule,
            "forced": g.forced,
            "vertex_count": len(g.vertices),
            "edge_count": len(g.edges),
        },
        "vertices": [
            {"d": list(d.d), "b": list(v.b), "monomial": render(d)} for d, v in g.vertices.items()
        ],
        "edges": [{"src": list(s.d), "j": j, "dst": list(t.d)} for s, j, t in g.edges],
        "source": list(g.source.d),
        "sinks": [list(d.d) for d in g.sinks()],
        "violations": list(g.violations),
    }


def to_json(g: DecoGraph) -> str:
    return json.dumps(to_json_dict(g), indent=2) + "\n"
