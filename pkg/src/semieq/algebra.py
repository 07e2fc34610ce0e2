"""Finite semigroups as validated multiplication tables, plus basic constructions."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from .errors import (EmptyGeneratorSet, NonAssociative, NotACongruence, NotAnIdeal,
                     OutOfRangeEntry, TableShapeError)

# Sets of element indices (idempotents, generators, ideals, inverse sets).
ElementSubset = frozenset


class FiniteSemigroup:
    """A finite semigroup on the indices ``0..order-1``.

    ``table[i, j]`` is the index of the product of element ``i`` and element ``j``.
    Instances are immutable; derived data (Green's relations and the like) is cached
    on the instance by the modules that compute it.
    """

    def __init__(self, table, labels: Sequence[str] | None = None, *, check: bool = True):
        arr = np.array(table)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise TableShapeError(f"table must be a nonempty square array, got shape {arr.shape}")
        if arr.dtype.kind not in "iu":
            if arr.dtype.kind == "f" and np.all(arr == np.round(arr)):
                arr = arr.astype(np.int64)
            else:
                raise TableShapeError("table entries must be integers")
        n = arr.shape[0]
        arr = arr.astype(np.intp)
        if check:
            bad = np.argwhere((arr < 0) | (arr >= n))
            if len(bad):
                i, j = (int(v) for v in bad[0])
                raise OutOfRangeEntry(i, j, int(arr[i, j]), n)
            _check_associative(arr)
        arr.setflags(write=False)
        self.table = arr
        self.rows: tuple[tuple[int, ...], ...] = tuple(tuple(int(v) for v in row) for row in arr)
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n or len(set(labels)) != n:
                raise ValueError("labels must be pairwise distinct, one per element")
        self.labels: tuple[str, ...] | None = labels
        self._cache: dict = {}

    @property
    def order(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    def index(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def evaluate_word(self, word: Iterable[int]) -> int:
        it = iter(word)
        v = next(it)
        for w in it:
            v = self.rows[v][w]
        return v

    def identity(self) -> int | None:
        n = self.order
        ar = np.arange(n)
        for e in range(n):
            if np.array_equal(self.table[e], ar) and np.array_equal(self.table[:, e], ar):
                return e
        return None

    def idempotents(self) -> ElementSubset:
        return frozenset(i for i in range(self.order) if self.rows[i][i] == i)

    def recheck(self) -> None:
        """Re-run the associativity check (debug aid for derived constructions)."""
        _check_associative(self.table)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self.rows == other.rows and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.rows, self.labels))

    def __repr__(self) -> str:
        return f"FiniteSemigroup(order={self.order})"


def _check_associative(arr: np.ndarray) -> None:
    # one row slab at a time keeps memory at O(n^2)
    n = arr.shape[0]
    for i in range(n):
        left = arr[arr[i]]          # left[j, k] = (i j) k
        right = arr[i][arr]         # right[j, k] = i (j k)
        diff = np.argwhere(left != right)
        if len(diff):
            j, k = (int(v) for v in diff[0])
            raise NonAssociative(i, j, k)


def validate(table, labels: Sequence[str] | None = None) -> FiniteSemigroup:
    """Build a semigroup from a square index table, checking range and associativity."""
    return FiniteSemigroup(table, labels)


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup, *, check: bool = False) -> FiniteSemigroup:
    """Componentwise product; element ``(s, t)`` has index ``s * |T| + t``."""
    n, m = S.order, T.order
    s_idx = np.repeat(np.arange(n), m)
    t_idx = np.tile(np.arange(m), n)
    st = S.table[np.ix_(s_idx, s_idx)]
    tt = T.table[np.ix_(t_idx, t_idx)]
    labels = [f"({S.label(s)},{T.label(t)})" for s, t in zip(s_idx, t_idx)]
    return FiniteSemigroup(st * m + tt, labels, check=check)


def subsemigroup_generated(S: FiniteSemigroup, gens: Iterable[int], *,
                           check: bool = False) -> tuple[FiniteSemigroup, tuple[int, ...]]:
    """Closure of ``gens`` under multiplication.

    Returns the subsemigroup re-indexed in increasing parent order together with the
    embedding (sub index -> parent index).
    """
    members = set(int(g) for g in gens)
    if not members:
        raise EmptyGeneratorSet("cannot generate a subsemigroup from no elements")
    frontier = list(members)
    rows = S.rows
    while frontier:
        new = []
        for a in frontier:
            for b in list(members):
                for c in (rows[a][b], rows[b][a]):
                    if c not in members:
                        members.add(c)
                        new.append(c)
        frontier = new
    return _induced(S, sorted(members), check=check)


def _induced(S: FiniteSemigroup, elems: Sequence[int], *, check: bool = False):
    pos = {e: i for i, e in enumerate(elems)}
    table = [[pos[S.rows[a][b]] for b in elems] for a in elems]
    labels = [S.label(e) for e in elems]
    return FiniteSemigroup(table, labels, check=check), tuple(elems)


def is_subsemigroup(S: FiniteSemigroup, elems: Iterable[int]) -> bool:
    elems = set(elems)
    return bool(elems) and all(S.rows[a][b] in elems for a in elems for b in elems)


class Congruence:
    """A partition of a semigroup's elements, stored as canonical block ids.

    Block ids are numbered by first occurrence, so two equal partitions compare equal.
    Compatibility with multiplication is not enforced here; see :func:`is_congruence`.
    """

    __slots__ = ("blocks",)

    def __init__(self, blocks: Sequence[int]):
        relabel: dict[int, int] = {}
        self.blocks = tuple(relabel.setdefault(int(b), len(relabel)) for b in blocks)

    @classmethod
    def identity(cls, n: int) -> Congruence:
        return cls(range(n))

    @classmethod
    def universal(cls, n: int) -> Congruence:
        return cls([0] * n)

    @property
    def count(self) -> int:
        return max(self.blocks) + 1

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.count)]
        for e, b in enumerate(self.blocks):
            out[b].append(e)
        return out

    def related(self, a: int, b: int) -> bool:
        return self.blocks[a] == self.blocks[b]

    def __eq__(self, other) -> bool:
        return isinstance(other, Congruence) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __repr__(self) -> str:
        return f"Congruence({self.classes()})"


def is_congruence(S: FiniteSemigroup, c: Congruence) -> bool:
    if len(c) != S.order:
        return False
    blk = np.array(c.blocks)
    reps = [cls[0] for cls in c.classes()]
    t = S.table
    # a ~ rep(a) must give s*a ~ s*rep(a) and a*s ~ rep(a)*s
    rep_of = np.array([reps[b] for b in c.blocks])
    return bool(np.array_equal(blk[t], blk[t[:, rep_of]]) and
                np.array_equal(blk[t], blk[t[rep_of, :]]))


def quotient(S: FiniteSemigroup, c: Congruence, *, check: bool = False) -> FiniteSemigroup:
    """The semigroup of blocks of ``c``; block ``k`` becomes element ``k``."""
    if not is_congruence(S, c):
        raise NotACongruence("partition is not compatible with multiplication")
    classes = c.classes()
    reps = [cls[0] for cls in classes]
    table = [[c.blocks[S.rows[a][b]] for b in reps] for a in reps]
    labels = ["{" + ",".join(S.label(e) for e in cls) + "}" for cls in classes]
    return FiniteSemigroup(table, labels, check=check)


def is_ideal(S: FiniteSemigroup, ideal: Iterable[int]) -> bool:
    ideal = set(ideal)
    if not ideal:
        return False
    t = S.table
    idx = sorted(ideal)
    return set(t[idx, :].ravel().tolist()) <= ideal and set(t[:, idx].ravel().tolist()) <= ideal


def rees_quotient(S: FiniteSemigroup, ideal: Iterable[int], *, check: bool = False) -> FiniteSemigroup:
    """Collapse a two-sided ideal to a single zero.

    The zero takes the position of the smallest ideal element; the remaining elements
    keep their relative order, so collapsing a one-element ideal returns ``S`` unchanged.
    """
    ideal = set(int(i) for i in ideal)
    if not is_ideal(S, ideal):
        raise NotAnIdeal("subset is not a two-sided ideal")
    z = min(ideal)
    keep = [e for e in range(S.order) if e not in ideal or e == z]
    pos = {e: i for i, e in enumerate(keep)}

    def img(e: int) -> int:
        return pos[z] if e in ideal else pos[e]

    table = [[img(S.rows[a][b]) if a != z and b != z else pos[z] for b in keep] for a in keep]
    labels = [S.label(e) for e in keep]
    return FiniteSemigroup(table, labels, check=check)


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    """S with a new identity appended at the end, or S itself if it is already a monoid."""
    if S.identity() is not None:
        return S
    n = S.order
    table = np.empty((n + 1, n + 1), dtype=np.intp)
    table[:n, :n] = S.table
    table[n, :] = np.arange(n + 1)
    table[:, n] = np.arange(n + 1)
    labels = list(S.labels) if S.labels is not None else [str(i) for i in range(n)]
    one = "1"
    while one in labels:
        one += "'"
    return FiniteSemigroup(table, labels + [one], check=False)


def is_homomorphism(S: FiniteSemigroup, T: FiniteSemigroup, phi: Sequence[int]) -> bool:
    phi = np.asarray(phi)
    return bool(np.array_equal(phi[S.table], T.table[np.ix_(phi, phi)]))
