"""Congruence enumeration and closure suites for homomorphic images (H) and products (P)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable

from .algebra import Congruence, FiniteSemigroup, direct_product, quotient
from .classes import _named, get_class
from .errors import BudgetExceeded, OrderCapExceeded
from .evaluate import DEFAULT_BUDGET, evaluate

CONGRUENCE_CAP = 7


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        self.parent[a] = b
        return True


def _close(S: FiniteSemigroup, uf: _UnionFind, pairs: list[tuple[int, int]]) -> Congruence:
    """Smallest congruence containing the partition of ``uf`` and the given pairs."""
    rows = S.rows
    n = S.order
    queue = list(pairs)
    while queue:
        a, b = queue.pop()
        if not uf.union(a, b):
            continue
        for s in range(n):
            queue.append((rows[s][a], rows[s][b]))
            queue.append((rows[a][s], rows[b][s]))
    return Congruence([uf.find(e) for e in range(n)])


def principal_congruence(S: FiniteSemigroup, a: int, b: int) -> Congruence:
    """The least congruence identifying a and b."""
    return _close(S, _UnionFind(S.order), [(a, b)])


def join(S: FiniteSemigroup, c1: Congruence, c2: Congruence) -> Congruence:
    """Transitive closure of the union of two congruences (again a congruence)."""
    uf = _UnionFind(S.order)
    for c in (c1, c2):
        for cls in c.classes():
            for e in cls[1:]:
                uf.union(cls[0], e)
    return Congruence([uf.find(e) for e in range(S.order)])


def all_congruences(S: FiniteSemigroup, *, cap: int = CONGRUENCE_CAP) -> list[Congruence]:
    """Every congruence on S, each once, ordered by number of classes (descending) then blocks."""
    if S.order > cap:
        raise OrderCapExceeded(f"order {S.order} exceeds congruence cap {cap}")
    n = S.order
    principals = {principal_congruence(S, a, b) for a in range(n) for b in range(a + 1, n)}
    found = {Congruence.identity(n)} | principals
    frontier = set(found)
    while frontier:
        new = set()
        for c in frontier:
            for p in principals:
                j = join(S, c, p)
                if j not in found:
                    new.add(j)
        found |= new
        frontier = new
    return sorted(found, key=lambda c: (-c.count, c.blocks))


@dataclass(frozen=True)
class Violation:
    source: str
    image: str
    detail: str = ""


def _membership(class_id: str, via: str, budget: int) -> Callable[[FiniteSemigroup], bool]:
    entry = get_class(class_id)
    if via == "oracle":
        return entry.closure_oracle or entry.oracle
    if via == "basis":
        return lambda S: evaluate(S, entry.basis, budget=budget, traces=False).verdict
    raise ValueError(f"via must be 'oracle' or 'basis', not {via!r}")


def closed_under_H(class_id: str, corpus, *, via: str = "oracle", cap: int = CONGRUENCE_CAP,
                   budget: int = DEFAULT_BUDGET) -> list[Violation]:
    """Quotients of members that fail membership.  Members above the cap are reported, not fatal."""
    member = _membership(class_id, via, budget)
    out = []
    for name, S in _named(corpus):
        if not member(S):
            continue
        try:
            congs = all_congruences(S, cap=cap)
        except OrderCapExceeded as exc:
            out.append(Violation(name, "", f"skipped: {exc}"))
            continue
        for c in congs:
            Q = quotient(S, c)
            try:
                ok = member(Q)
            except BudgetExceeded as exc:
                out.append(Violation(name, repr(c), f"budget exceeded: {exc.estimated_cost}"))
                continue
            if not ok:
                out.append(Violation(name, repr(c)))
    return out


def closed_under_P(class_id: str, corpus, *, via: str = "oracle",
                   budget: int = DEFAULT_BUDGET) -> list[Violation]:
    """Products S x T of members (including S x S) that fail membership."""
    member = _membership(class_id, via, budget)
    members = [(n, S) for n, S in _named(corpus) if member(S)]
    out = []
    for (n1, S), (n2, T) in combinations_with_replacement(members, 2):
        try:
            ok = member(direct_product(S, T))
        except BudgetExceeded as exc:
            out.append(Violation(n1, f"{n1} x {n2}", f"budget exceeded: {exc.estimated_cost}"))
            continue
        if not ok:
            out.append(Violation(n1, f"{n1} x {n2}"))
    return out
