"""Named families of finite semigroups and the descriptor strings that select them.

Descriptors::

    Zn:<n>          cyclic group of order n
    mono:<i>,<p>    monogenic semigroup with index i and period p
    chain:<k>       k-element chain semilattice (product = minimum)
    null:<k>        k-element null semigroup (element 0 is the zero)
    lz:<k> rz:<k>   left / right zero semigroups
    T:<n>           full transformation monoid on n points (n <= 4)
    U3              the non-permutations of T:3
    brandt:<n>      combinatorial Brandt semigroup, n*n matrix units plus zero
    btrunc:<i>      {0} + {(j,k): j,k < i} + {(i,i)} inside the infinite Brandt semigroup
    zrb:<r>x<c>:<rows>
                    0-rectangular band whose r x c structure matrix P is given row by
                    row (comma separated 0/1 strings).  Rows of P index the L-classes,
                    columns the R-classes: (i,l)(j,m) = (i,m) if P[l][j] == 1 else 0.
    <d1> x <d2>     direct product (spaces around the x are required)
"""

from __future__ import annotations

import re
from itertools import product

from .algebra import FiniteSemigroup, direct_product
from .errors import UnsupportedParameter

T_MAX = 4

# The 0-rectangular band of the E-solidity counterexample: 4 R-classes, 4 L-classes,
# idempotents at (1,1),(1,2),(1,4),(2,1),(2,2),(3,2),(3,4),(4,3).
NON_E_SOLID_BAND = "zrb:4x4:1100,1110,0001,1010"


def cyclic_group(n: int) -> FiniteSemigroup:
    if n < 1:
        raise UnsupportedParameter("Zn needs n >= 1")
    return FiniteSemigroup([[(i + j) % n for j in range(n)] for i in range(n)],
                           [str(i) for i in range(n)], check=False)


def monogenic(index: int, period: int) -> FiniteSemigroup:
    """<a | a^(index+period) = a^index>; element k stands for a^(k+1)."""
    if index < 1 or period < 1:
        raise UnsupportedParameter("mono needs index >= 1 and period >= 1")
    n = index + period - 1

    def red(e: int) -> int:  # exponent -> canonical exponent
        return e if e < index + period else index + (e - index) % period

    table = [[red(i + j + 2) - 1 for j in range(n)] for i in range(n)]
    labels = ["a" if k == 0 else f"a^{k + 1}" for k in range(n)]
    return FiniteSemigroup(table, labels, check=False)


def chain(k: int) -> FiniteSemigroup:
    if k < 1:
        raise UnsupportedParameter("chain needs k >= 1")
    return FiniteSemigroup([[min(i, j) for j in range(k)] for i in range(k)],
                           [f"e{i}" for i in range(k)], check=False)


def null(k: int) -> FiniteSemigroup:
    if k < 1:
        raise UnsupportedParameter("null needs k >= 1")
    return FiniteSemigroup([[0] * k for _ in range(k)],
                           ["0"] + [f"n{i}" for i in range(1, k)], check=False)


def left_zero(k: int) -> FiniteSemigroup:
    if k < 1:
        raise UnsupportedParameter("lz needs k >= 1")
    return FiniteSemigroup([[i] * k for i in range(k)], [f"l{i}" for i in range(k)], check=False)


def right_zero(k: int) -> FiniteSemigroup:
    if k < 1:
        raise UnsupportedParameter("rz needs k >= 1")
    return FiniteSemigroup([list(range(k)) for _ in range(k)], [f"r{i}" for i in range(k)], check=False)


def _maps(n: int, keep=lambda f: True) -> FiniteSemigroup:
    # maps act on the right: x(fg) = (xf)g
    maps = [f for f in product(range(n), repeat=n) if keep(f)]
    pos = {f: i for i, f in enumerate(maps)}
    table = [[pos[tuple(g[f[x]] for x in range(n))] for g in maps] for f in maps]
    labels = ["".join(str(v + 1) for v in f) for f in maps]
    return FiniteSemigroup(table, labels, check=False)


def full_transformation(n: int) -> FiniteSemigroup:
    """T_n, elements labelled by image strings (``"123"`` is the identity of T_3)."""
    if not 1 <= n <= T_MAX:
        raise UnsupportedParameter(f"T:n supports 1 <= n <= {T_MAX}")
    return _maps(n)


def singular_part(n: int = 3) -> FiniteSemigroup:
    """The non-permutation maps of T_n."""
    if not 2 <= n <= T_MAX:
        raise UnsupportedParameter(f"U needs 2 <= n <= {T_MAX}")
    return _maps(n, keep=lambda f: len(set(f)) < n)


def _matrix_units(units, extra=()) -> FiniteSemigroup:
    elems = [None] + list(units) + list(extra)
    pos = {e: i for i, e in enumerate(elems)}

    def mul(p, q):
        if p is None or q is None or p[1] != q[0]:
            return 0
        return pos[(p[0], q[1])]

    table = [[mul(p, q) for q in elems] for p in elems]
    return FiniteSemigroup(table, check=False), elems


def brandt(n: int) -> FiniteSemigroup:
    """B_n with zero at index 0; labels use 1-based matrix positions."""
    if n < 1:
        raise UnsupportedParameter("brandt needs n >= 1")
    S, elems = _matrix_units(product(range(1, n + 1), repeat=2))
    return FiniteSemigroup(S.table, ["0"] + [f"({i},{j})" for i, j in elems[1:]], check=False)


def truncated_brandt(i: int) -> FiniteSemigroup:
    """{0} + {(j,k): 0 <= j,k <= i-1} + {(i,i)} with the Brandt product (0-based labels)."""
    if i < 1:
        raise UnsupportedParameter("btrunc needs i >= 1")
    S, elems = _matrix_units(product(range(i), repeat=2), [(i, i)])
    return FiniteSemigroup(S.table, ["0"] + [f"({j},{k})" for j, k in elems[1:]], check=False)


def zero_rectangular_band(matrix) -> FiniteSemigroup:
    """0-rectangular band from a structure matrix indexed [L-class][R-class]."""
    rows = [[int(v) for v in r] for r in matrix]
    n_l = len(rows)
    n_r = len(rows[0]) if rows else 0
    if n_l == 0 or n_r == 0 or any(len(r) != n_r for r in rows) or \
            any(v not in (0, 1) for r in rows for v in r):
        raise UnsupportedParameter("structure matrix must be a nonempty rectangular 0/1 array")
    elems = [None] + [(i, l) for i in range(n_r) for l in range(n_l)]
    pos = {e: k for k, e in enumerate(elems)}

    def mul(p, q):
        if p is None or q is None or not rows[p[1]][q[0]]:
            return 0
        return pos[(p[0], q[1])]

    table = [[mul(p, q) for q in elems] for p in elems]
    labels = ["0"] + [f"({i + 1},{l + 1})" for i, l in elems[1:]]
    # a 0/1 sandwich product is always associative
    return FiniteSemigroup(table, labels, check=False)


def _ints(text: str, count: int, desc: str) -> list[int]:
    parts = text.split(",")
    if len(parts) != count or not all(re.fullmatch(r"\d+", p) for p in parts):
        raise UnsupportedParameter(f"bad parameters in descriptor {desc!r}")
    return [int(p) for p in parts]


def make_family(desc: str) -> FiniteSemigroup:
    """Construct a semigroup from a family descriptor string (see module docstring)."""
    desc = desc.strip()
    if " x " in desc:
        left, right = desc.split(" x ", 1)
        return direct_product(make_family(left), make_family(right))
    if desc == "U3":
        return singular_part(3)
    name, sep, arg = desc.partition(":")
    if not sep:
        raise UnsupportedParameter(f"unknown family descriptor {desc!r}")
    simple = {"Zn": cyclic_group, "chain": chain, "null": null, "lz": left_zero,
              "rz": right_zero, "T": full_transformation, "brandt": brandt,
              "btrunc": truncated_brandt}
    if name in simple:
        (k,) = _ints(arg, 1, desc)
        return simple[name](k)
    if name == "mono":
        i, p = _ints(arg, 2, desc)
        return monogenic(i, p)
    if name == "zrb":
        m = re.fullmatch(r"(\d+)x(\d+):([01,]+)", arg)
        if not m:
            raise UnsupportedParameter(f"bad zrb descriptor {desc!r}")
        r, c = int(m.group(1)), int(m.group(2))
        rows = m.group(3).split(",")
        if len(rows) != r or any(len(row) != c for row in rows):
            raise UnsupportedParameter(f"zrb matrix does not match declared shape {r}x{c}")
        return zero_rectangular_band([[int(ch) for ch in row] for row in rows])
    raise UnsupportedParameter(f"unknown family descriptor {desc!r}")
