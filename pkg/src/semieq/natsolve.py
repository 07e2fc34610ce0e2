"""Word equations with parameters over the positive integers under addition.

Substituting positive integers into p = q turns it into the linear equation
sum t_i m_i = sum a_j n_j with m_i = |p|_{x_i} - |q|_{x_i} and n_j = |q|_{a_j} - |p|_{a_j}.
Solvability for every parameter choice is containment of sum-sets S(n) in S(m), where
S(c) = {sum t_i c_i : t_i >= 1}.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Sequence

from .eqdsl import Word, parse_word
from .errors import EquationSyntaxError, HasParameters, UnknownSymbol

MAX_COUNT = 10 ** 6
MAX_COEFF = 10 ** 6


def gcd_all(values: Sequence[int]) -> int:
    """gcd of the absolute values; 0 for an empty or all-zero list."""
    return reduce(gcd, (abs(v) for v in values), 0)


@dataclass(frozen=True)
class AdditiveEquationProfile:
    params: tuple[str, ...]
    variables: tuple[str, ...]
    r: tuple[int, ...]   # |p|_{x_i}
    s: tuple[int, ...]   # |q|_{x_i}
    p: tuple[int, ...]   # |p|_{a_j}
    q: tuple[int, ...]   # |q|_{a_j}
    lhs: Word = field(default=(), repr=False)
    rhs: Word = field(default=(), repr=False)

    @property
    def m(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.r, self.s))

    @property
    def n(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in zip(self.p, self.q))

    @property
    def d(self) -> int:
        return gcd_all(self.m)

    @property
    def dprime(self) -> int:
        return gcd_all(self.n)


def profile(p: Word, q: Word, params: Sequence[str], variables: Sequence[str]
            ) -> AdditiveEquationProfile:
    params, variables = tuple(params), tuple(variables)
    if set(params) & set(variables):
        raise ValueError("a symbol cannot be both a parameter and a variable")
    known = set(params) | set(variables)
    for s in (*p, *q):
        if s not in known:
            raise UnknownSymbol(f"symbol {s!r} is neither a parameter nor a variable")
    if len(p) > MAX_COUNT or len(q) > MAX_COUNT:
        raise OverflowError("word too long for the additive solver")
    cp, cq = Counter(p), Counter(q)
    return AdditiveEquationProfile(
        params, variables,
        tuple(cp[x] for x in variables), tuple(cq[x] for x in variables),
        tuple(cp[a] for a in params), tuple(cq[a] for a in params),
        tuple(p), tuple(q))


# ---------------------------------------------------------------------------
# sum-sets

@dataclass(frozen=True)
class Empty:
    def __contains__(self, v: int) -> bool:
        return False

    def describe(self) -> str:
        return "empty"


@dataclass(frozen=True)
class ZeroOnly:
    def __contains__(self, v: int) -> bool:
        return v == 0

    def describe(self) -> str:
        return "{0}"


@dataclass(frozen=True)
class FullLattice:
    d: int

    def __contains__(self, v: int) -> bool:
        return v % self.d == 0

    def describe(self) -> str:
        return f"{self.d}Z"


@dataclass(frozen=True)
class Positive:
    """Members below the conductor are listed; from the conductor on, every multiple of d."""
    d: int
    base: tuple[int, ...]
    conductor: int

    def __contains__(self, v: int) -> bool:
        if v >= self.conductor:
            return v % self.d == 0
        return v in self._base_set

    @property
    def _base_set(self) -> frozenset[int]:
        return frozenset(self.base)

    @property
    def minimum(self) -> int:
        return self.base[0] if self.base else self.conductor

    def describe(self) -> str:
        return f"positive(d={self.d}, below={list(self.base)}, conductor={self.conductor})"


@dataclass(frozen=True)
class Negative:
    """Mirror image of a Positive set: v is a member iff -v is in ``mirror``."""
    mirror: Positive

    @property
    def d(self) -> int:
        return self.mirror.d

    def __contains__(self, v: int) -> bool:
        return -v in self.mirror

    def describe(self) -> str:
        return f"negative({self.mirror.describe()})"


SemigroupOfSums = Empty | ZeroOnly | FullLattice | Positive | Negative


def _positive_structure(coeffs: Sequence[int]) -> Positive:
    """S(c) for positive c: (sum c) + the numerical-semigroup-like set of sums with t_i >= 0."""
    d = gcd_all(coeffs)
    g = sorted({c // d for c in coeffs})
    shift = sum(coeffs) // d
    smallest = g[0]
    # reachable[v] for the monoid generated by g, scanned until `smallest` consecutive hits
    reach = [True]
    run = 1 if smallest == 1 else 0
    v = 0
    while run < smallest:
        v += 1
        ok = any(v >= c and reach[v - c] for c in g)
        reach.append(ok)
        run = run + 1 if ok else 0
    cond = v - smallest + 1          # first of the run of consecutive members
    base = tuple((shift + i) * d for i in range(cond) if reach[i])
    return Positive(d, base, (shift + cond) * d)


def sums_structure(coeffs: Sequence[int]) -> SemigroupOfSums:
    coeffs = [int(c) for c in coeffs]
    if any(abs(c) > MAX_COEFF for c in coeffs):
        raise OverflowError("coefficient too large for the additive solver")
    if not coeffs:
        return Empty()
    nz = [c for c in coeffs if c]
    if not nz:
        return ZeroOnly()
    d = gcd_all(nz)
    if any(c > 0 for c in nz) and any(c < 0 for c in nz):
        return FullLattice(d)
    # zero coefficients contribute nothing to the sums
    if nz[0] > 0:
        return _positive_structure(nz)
    return Negative(_positive_structure([-c for c in nz]))


def _contains(outer: SemigroupOfSums, inner: SemigroupOfSums) -> bool:
    """inner is a subset of outer, decided on canonical forms."""
    if isinstance(inner, Empty):
        return True
    if isinstance(inner, ZeroOnly):
        return 0 in outer
    if isinstance(outer, (Empty, ZeroOnly)):
        return False
    if isinstance(outer, FullLattice):
        return inner.d % outer.d == 0
    if isinstance(inner, FullLattice):
        return False   # inner has members of both signs, outer is one-signed
    if isinstance(inner, Negative) != isinstance(outer, Negative):
        return False
    if isinstance(inner, Negative):
        inner, outer = inner.mirror, outer.mirror
    if inner.d % outer.d:
        return False
    # below the larger conductor compare explicitly; beyond it both are full residue tails
    top = max(inner.conductor, outer.conductor)
    return all(v in outer for v in range(inner.minimum, top + 1, inner.d) if v in inner)


@dataclass(frozen=True)
class Decision:
    solvable: bool
    rationale: str
    structure_m: SemigroupOfSums
    structure_n: SemigroupOfSums


def decide_solvable_in_P(prof: AdditiveEquationProfile) -> Decision:
    """Solvable in (Z+, +) for every choice of the parameters."""
    m, n = prof.m, prof.n
    sm, sn = sums_structure(m), sums_structure(n)
    if not m:
        return Decision(all(v == 0 for v in n), "no-variables", sm, sn)
    # with no parameters the right-hand side is the single target 0
    general = _contains(sm, sn if n else ZeroOnly())
    if isinstance(sm, FullLattice):
        shortcut = prof.dprime % prof.d == 0
        if shortcut != general:
            raise AssertionError("gcd shortcut disagrees with containment")
        return Decision(general, "gcd-divisibility", sm, sn)
    return Decision(general, "containment", sm, sn)


def _substitute(words: Word, values: dict[str, int]) -> int:
    return sum(values[s] for s in words)


def substitution_value(prof: AdditiveEquationProfile, witness: Sequence[int],
                       param_values: Sequence[int]) -> tuple[int, int]:
    """Both sides of the original equation after substituting the numbers."""
    values = dict(zip(prof.variables, witness)) | dict(zip(prof.params, param_values))
    return _substitute(prof.lhs, values), _substitute(prof.rhs, values)


def _reachable_sets(m: Sequence[int], lo: int, hi: int, bound: int) -> list[set[int]]:
    """suffix[i]: sums of t_k m_k over k >= i with 1 <= t_k <= bound, clipped to [lo, hi]."""
    suffix: list[set[int]] = [set() for _ in range(len(m) + 1)]
    suffix[len(m)] = {0}
    for i in range(len(m) - 1, -1, -1):
        nxt = suffix[i + 1]
        cur = set()
        for t in range(1, bound + 1):
            step = t * m[i]
            for v in nxt:
                w = v + step
                if lo <= w <= hi:
                    cur.add(w)
        suffix[i] = cur
    return suffix


def witness_bound(m: Sequence[int], target: int) -> int:
    """Per-coordinate search bound for witnesses of sum t_i m_i = target."""
    nz = [abs(c) for c in m if c]
    if not nz:
        return 1
    conductor = 0
    for part in ([c for c in m if c > 0], [-c for c in m if c < 0]):
        if part:
            conductor = max(conductor, _positive_structure(part).conductor)
    return max(conductor, abs(target)) // min(nz) + len(m) + 1 + max(nz)


def find_witness(prof: AdditiveEquationProfile, param_values: Sequence[int]) -> tuple[int, ...] | None:
    """Lexicographically least t (t_i >= 1, within the search bound) with sum t_i m_i = target."""
    if len(param_values) != len(prof.params):
        raise ValueError(f"expected {len(prof.params)} parameter values")
    if any(int(a) < 1 for a in param_values):
        raise ValueError("parameter values must be positive integers")
    m = prof.m
    target = sum(a * c for a, c in zip(param_values, prof.n))
    if not m:
        return () if target == 0 else None
    bound = witness_bound(m, target)
    span = bound * sum(abs(c) for c in m)
    lo, hi = -span, span
    suffix = _reachable_sets(m, lo, hi, bound)
    if target not in suffix[0]:
        if target in sums_structure(m):
            raise AssertionError(f"target {target} is a sum but no witness within bound {bound}")
        return None
    out = []
    rest = target
    for i, c in enumerate(m):
        t = next(t for t in range(1, bound + 1) if rest - t * c in suffix[i + 1])
        out.append(t)
        rest -= t * c
    witness = tuple(out)
    left, right = substitution_value(prof, witness, param_values)
    if left != right:
        raise AssertionError(f"witness {witness} does not balance: {left} != {right}")
    return witness


# ---------------------------------------------------------------------------
# parameterless equations in arbitrary semigroups

@dataclass(frozen=True)
class Universality:
    universal: bool
    condition: str


def classify_universal(p: Word, q: Word, variables: Sequence[str] | None = None) -> Universality:
    """Whether p = q (all symbols existential) has a solution in every semigroup.

    Universal iff every variable occurs equally often on both sides, or some variable
    occurs more often on the left and another more often on the right.
    """
    symbols = set(p) | set(q)
    if variables is None:
        variables = sorted(symbols)
    extra = symbols - set(variables)
    if extra:
        raise HasParameters(f"parameters {sorted(extra)} present; expected a parameterless equation")
    prof = profile(p, q, (), variables)
    m = prof.m
    if all(v == 0 for v in m):
        return Universality(True, "equal-counts")
    if any(v > 0 for v in m) and any(v < 0 for v in m):
        return Universality(True, "mixed-counts")
    return Universality(False, "one-sided-counts")


# ---------------------------------------------------------------------------
# text format:  params: a b ; vars: x y ; eq: <word> = <word>

_FIELD = re.compile(r"^\s*(params|vars|eq)\s*:\s*(.*?)\s*$", re.S)


def parse_additive(text: str) -> AdditiveEquationProfile:
    fields: dict[str, str] = {}
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        m = _FIELD.match(chunk)
        if not m:
            raise EquationSyntaxError(f"expected 'params:', 'vars:' or 'eq:' in {chunk.strip()!r}", 1, 1)
        if m.group(1) in fields:
            raise EquationSyntaxError(f"field {m.group(1)!r} given twice", 1, 1)
        fields[m.group(1)] = m.group(2)
    if "eq" not in fields:
        raise EquationSyntaxError("missing 'eq:' field", 1, 1)
    if "=" not in fields["eq"] or fields["eq"].count("=") != 1:
        raise EquationSyntaxError("equation needs exactly one '='", 1, 1)
    lhs, rhs = (parse_word(side) for side in fields["eq"].split("="))
    params = fields.get("params", "").split()
    if "vars" in fields:
        variables = fields["vars"].split()
    else:
        variables = sorted((set(lhs) | set(rhs)) - set(params))
    return profile(lhs, rhs, params, variables)
