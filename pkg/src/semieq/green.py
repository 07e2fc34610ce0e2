"""Green's relations, inverses, cores, local submonoids and isomorphism testing."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .algebra import ElementSubset, FiniteSemigroup, _induced, subsemigroup_generated
from .errors import NoIdempotents, NotIdempotent

RELATIONS = ("R", "L", "H", "D", "J")


def _canonical(keys) -> tuple[int, ...]:
    ids: dict = {}
    return tuple(ids.setdefault(k, len(ids)) for k in keys)


@dataclass(frozen=True)
class GreenData:
    r_class: tuple[int, ...]
    l_class: tuple[int, ...]
    h_class: tuple[int, ...]
    d_class: tuple[int, ...]
    j_class: tuple[int, ...]
    idempotents: ElementSubset
    group_h: tuple[bool, ...]
    # principal two-sided ideals S^1 a S^1 as bitmasks, used for the J-order
    j_ideal: tuple[int, ...]

    def of(self, rel: str) -> tuple[int, ...]:
        return {"R": self.r_class, "L": self.l_class, "H": self.h_class,
                "D": self.d_class, "J": self.j_class}[rel]

    def related(self, rel: str, a: int, b: int) -> bool:
        c = self.of(rel)
        return c[a] == c[b]

    def classes(self, rel: str) -> list[list[int]]:
        c = self.of(rel)
        out: list[list[int]] = [[] for _ in range(max(c) + 1)]
        for e, k in enumerate(c):
            out[k].append(e)
        return out

    def j_leq(self, a: int, b: int) -> bool:
        """a <=_J b, i.e. a lies in S^1 b S^1."""
        return bool(self.j_ideal[b] >> a & 1)


def green_data(S: FiniteSemigroup) -> GreenData:
    cached = S._cache.get("green")
    if cached is not None:
        return cached
    n = S.order
    rows = S.rows
    right = []   # a S^1
    left = []    # S^1 a
    for a in range(n):
        r = 1 << a
        for v in rows[a]:
            r |= 1 << v
        right.append(r)
        l_ = 1 << a
        for s in range(n):
            l_ |= 1 << rows[s][a]
        left.append(l_)
    two_sided = []
    for a in range(n):
        m = 0
        lm = left[a]
        u = 0
        while lm:
            if lm & 1:
                m |= right[u]
            lm >>= 1
            u += 1
        two_sided.append(m)
    r_class = _canonical(right)
    l_class = _canonical(left)
    h_class = _canonical(zip(r_class, l_class))
    j_class = _canonical(two_sided)
    d_class = _join(r_class, l_class)
    if d_class != j_class:
        raise AssertionError("D != J on a finite semigroup; Green computation is broken")
    idem = frozenset(a for a in range(n) if rows[a][a] == a)
    group_h = tuple(h_class[rows[a][a]] == h_class[a] for a in range(n))
    data = GreenData(r_class, l_class, h_class, d_class, j_class, idem, group_h, tuple(two_sided))
    S._cache["green"] = data
    return data


def _join(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    parent = list(range(len(p)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (p, q):
        first: dict[int, int] = {}
        for e, k in enumerate(part):
            if k in first:
                a, b = find(e), find(first[k])
                if a != b:
                    parent[a] = b
            else:
                first[k] = e
    return _canonical(find(e) for e in range(len(p)))


def inverses_of(S: FiniteSemigroup, a: int) -> ElementSubset:
    rows = S.rows
    return frozenset(x for x in range(S.order)
                     if rows[rows[a][x]][a] == a and rows[rows[x][a]][x] == x)


def is_regular(S: FiniteSemigroup) -> bool:
    """Every R-class contains an idempotent."""
    g = green_data(S)
    return {g.r_class[e] for e in g.idempotents} == set(g.r_class)


def core(S: FiniteSemigroup) -> tuple[FiniteSemigroup, tuple[int, ...]]:
    """The subsemigroup generated by the idempotents, with its embedding."""
    E = S.idempotents()
    if not E:
        raise NoIdempotents("semigroup has no idempotents")
    return subsemigroup_generated(S, E)


def local_subsemigroup(S: FiniteSemigroup, e: int) -> tuple[FiniteSemigroup, tuple[int, ...]]:
    """eSe with the induced product; a monoid with identity e."""
    rows = S.rows
    if rows[e][e] != e:
        raise NotIdempotent(f"element {S.label(e)} is not idempotent")
    elems = sorted({rows[rows[e][s]][e] for s in range(S.order)})
    return _induced(S, elems)


def element_profile(S: FiniteSemigroup, a: int) -> tuple:
    """Isomorphism-invariant description of one element."""
    g = green_data(S)
    rows = S.rows
    powers = [a]
    seen = {a: 0}
    while True:
        nxt = rows[powers[-1]][a]
        if nxt in seen:
            index, period = seen[nxt] + 1, len(powers) - seen[nxt]
            break
        seen[nxt] = len(powers)
        powers.append(nxt)
    sizes = tuple(Counter(g.of(rel))[g.of(rel)[a]] for rel in RELATIONS)
    roots = sum(1 for x in range(S.order) if rows[x][x] == a)
    fixes = (sum(1 for x in range(S.order) if rows[a][x] == x),
             sum(1 for x in range(S.order) if rows[x][a] == x))
    return (a in g.idempotents, index, period, sizes, roots, fixes,
            bin(g.j_ideal[a]).count("1"))


def are_isomorphic(S: FiniteSemigroup, T: FiniteSemigroup) -> tuple[int, ...] | None:
    """A bijection phi with phi(ab) = phi(a)phi(b), or None.

    Backtracking over candidates with matching element profiles; every assignment
    forces the images of all products with already-mapped elements.
    """
    n = S.order
    if n != T.order:
        return None
    ps = [element_profile(S, a) for a in range(n)]
    pt = [element_profile(T, b) for b in range(n)]
    if Counter(ps) != Counter(pt):
        return None
    cand = [frozenset(b for b in range(n) if pt[b] == ps[a]) for a in range(n)]
    srows, trows = S.rows, T.rows
    phi = [-1] * n
    used = [False] * n
    mapped: list[int] = []

    def assign(a: int, b: int, trail: list[int]) -> bool:
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            if phi[x] != -1:
                if phi[x] != y:
                    return False
                continue
            if used[y] or y not in cand[x]:
                return False
            phi[x] = y
            used[y] = True
            trail.append(x)
            for z in list(mapped) + [x]:
                for p, q in ((x, z), (z, x)):
                    queue.append((srows[p][q], trows[phi[p]][phi[q]]))
            mapped.append(x)
        return True

    def undo(trail: list[int]) -> None:
        for x in reversed(trail):
            used[phi[x]] = False
            phi[x] = -1
            mapped.remove(x)

    order = sorted(range(n), key=lambda a: (len(cand[a]), a))

    def search(k: int) -> bool:
        while k < n and phi[order[k]] != -1:
            k += 1
        if k == n:
            return True
        a = order[k]
        for b in sorted(cand[a]):
            trail: list[int] = []
            if assign(a, b, trail) and search(k + 1):
                return True
            undo(trail)
        return False

    return tuple(phi) if search(0) else None


def has_maximum_j_class(S: FiniteSemigroup) -> int | None:
    """Representative of a J-class lying J-above every element, if one exists."""
    g = green_data(S)
    full = (1 << S.order) - 1
    for a in range(S.order):
        if g.j_ideal[a] == full:
            return a
    return None
