"""Skolemisation of equation systems and the localisation transform, with finite-model checks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence, Union

from .algebra import FiniteSemigroup
from .eqdsl import (EquationSystem, Green, InG, InV, WordEq, desugar, make_system,
                    map_words, render_word)
from .errors import (BudgetExceeded, DisjunctiveMatrix, EquivalenceViolation, NotRegular,
                     UnsupportedAtom)
from .evaluate import DEFAULT_BUDGET, evaluate
from .green import are_isomorphic, green_data, is_regular, local_subsemigroup


@dataclass(frozen=True)
class SkolemApp:
    """A Skolem operation applied to universally bound symbols."""
    name: str
    args: tuple[str, ...]


Factor = Union[str, SkolemApp]
Term = tuple[Factor, ...]


@dataclass(frozen=True)
class SkolemSignature:
    symbols: tuple[tuple[str, int], ...]   # (name, arity)

    def arity(self, name: str) -> int:
        return dict(self.symbols)[name]

    def header(self) -> str:
        return "skolem: " + " ".join(f"{n}/{k}" for n, k in self.symbols)


@dataclass(frozen=True)
class IdentitySystem:
    universals: tuple[str, ...]
    identities: tuple[tuple[Term, Term], ...]
    signature: SkolemSignature

    @property
    def existentials(self) -> tuple[str, ...]:
        return ()


_NULLARY_NAMES = ("e",)
_NAMES = ("f", "g", "h", "k", "p", "q", "r", "s")


def _fresh_names(taken: set[str], arities: Sequence[int]) -> list[str]:
    out = []
    used = set(taken)
    for ar in arities:
        pool = _NULLARY_NAMES + _NAMES if ar == 0 else _NAMES
        name = next((n for n in pool if n not in used), None)
        i = 1
        while name is None:
            cand = f"{pool[0]}{i}"
            name = cand if cand not in used else None
            i += 1
        used.add(name)
        out.append(name)
    return out


def skolemize(sys: EquationSystem, names: Sequence[str] | None = None
              ) -> tuple[IdentitySystem, SkolemSignature]:
    """Replace each existential, leftmost first, by a fresh operation of the preceding universals."""
    for d in sys.matrix:
        for atom in d:
            if isinstance(atom, (InG, Green)):
                raise UnsupportedAtom(f"cannot Skolemise a membership/Green atom: {atom!r}")
    if len(sys.matrix) != 1:
        raise DisjunctiveMatrix("Skolemisation needs a single conjunction")
    sys = desugar(sys)
    universals: list[str] = []
    pending: list[tuple[str, tuple[str, ...]]] = []   # existential -> args
    for block in sys.prefix:
        for s in block.symbols:
            if block.quantifier == "forall":
                universals.append(s)
            else:
                pending.append((s, tuple(universals)))
    arities = [len(args) for _, args in pending]
    if names is None:
        names = _fresh_names(set(sys.symbols), arities)
    names = list(names)
    if len(names) != len(pending):
        raise ValueError(f"need {len(pending)} Skolem names, got {len(names)}")
    if len(set(names)) != len(names) or set(names) & set(sys.symbols):
        raise ValueError("Skolem names must be distinct and fresh")
    sub = {y: SkolemApp(n, args) for (y, args), n in zip(pending, names)}

    def term(w) -> Term:
        return tuple(sub.get(s, s) for s in w)

    identities = tuple((term(a.lhs), term(a.rhs)) for a in sys.matrix[0])
    sig = SkolemSignature(tuple(zip(names, arities)))
    return IdentitySystem(tuple(universals), identities, sig), sig


# ---------------------------------------------------------------------------
# rendering

def _dsl_factor(f: Factor) -> str:
    if isinstance(f, str):
        return f
    return f"{f.name}({','.join(f.args)})"


def _math_factor(f: Factor) -> str:
    if isinstance(f, str):
        return f
    if not f.args:
        return f.name
    if f.name == "\\" and len(f.args) == 2:
        return f"({f.args[0]}\\{f.args[1]})"
    if f.name == "/" and len(f.args) == 2:
        # right division is written with the divisor on the right
        return f"({f.args[1]}/{f.args[0]})"
    return f"{f.name}({','.join(f.args)})"


def _join_term(t: Term, fmt, sep: str) -> str:
    parts = []
    i = 0
    while i < len(t):
        j = i
        while j < len(t) and t[j] == t[i]:
            j += 1
        s = fmt(t[i])
        parts.append(s if j - i == 1 else (f"{s}^{j - i}" if isinstance(t[i], str) else f"({s})^{j - i}"))
        i = j
    return sep.join(parts)


def _skolem_names(t: Term) -> frozenset[str]:
    return frozenset(f.name for f in t if isinstance(f, SkolemApp))


def render_identities(ids: IdentitySystem, style: str = "dsl") -> str:
    """``dsl``: signature header plus a universally quantified conjunction.

    ``math``: juxtaposed products; consecutive identities with the same right-hand
    side and the same Skolem operations are chained, e.g. ``ea=ae=a``.
    """
    if style == "dsl":
        body = " & ".join(f"{_join_term(l, _dsl_factor, '*')} = {_join_term(r, _dsl_factor, '*')}"
                          for l, r in ids.identities)
        prefix = f"forall {' '.join(ids.universals)}. " if ids.universals else ""
        return f"{ids.signature.header()}\n{prefix}{body}"
    if style != "math":
        raise ValueError(f"unknown style {style!r}")
    chains: list[list] = []
    for l, r in ids.identities:
        if chains and chains[-1][-1] == r and _skolem_names(chains[-1][0]) == _skolem_names(l):
            chains[-1].insert(-1, l)
        else:
            chains.append([l, r])
    return ", ".join("=".join(_join_term(t, _math_factor, "") for t in c) for c in chains)


# ---------------------------------------------------------------------------
# interpretation search

def _term_cells(t: Term, u: Mapping[str, int]):
    return [(f.name, tuple(u[a] for a in f.args)) for f in t if isinstance(f, SkolemApp)]


def skolem_model(S: FiniteSemigroup, ids: IdentitySystem, *, budget: int = DEFAULT_BUDGET
                 ) -> dict | None:
    """Interpretations of the Skolem operations over S satisfying every identity, or None.

    Each ground instance of the universals is a constraint over the operation cells it
    mentions.  Constraints are split into independent components on unassigned cells,
    and within a component the most constrained instance is branched on first.
    """
    n = S.order
    rows = S.rows
    cons = []
    for vals in product(range(n), repeat=len(ids.universals)):
        u = dict(zip(ids.universals, vals))
        pairs = [tuple(tuple(u[f] if isinstance(f, str) else (f.name, tuple(u[a] for a in f.args))
                             for f in side) for side in (l, r)) for l, r in ids.identities]
        cells = frozenset(c for l, r in ids.identities for t in (l, r) for c in _term_cells(t, u))
        cons.append((cells, pairs))
    asg: dict = {}
    nodes = [0]
    total_cells = len({c for cells, _ in cons for c in cells})

    def value(tm) -> int:
        it = iter(tm)
        first = next(it)
        acc = first if isinstance(first, int) else asg[first]
        for f in it:
            acc = rows[acc][f if isinstance(f, int) else asg[f]]
        return acc

    def holds(pairs) -> bool:
        return all(value(l) == value(r) for l, r in pairs)

    def components(cs):
        parent = list(range(len(cs)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        owner: dict = {}
        for i, (cells, _) in enumerate(cs):
            for c in cells:
                if c in asg:
                    continue
                if c in owner:
                    parent[find(i)] = find(owner[c])
                else:
                    owner[c] = i
        groups: dict[int, list] = {}
        for i in range(len(cs)):
            groups.setdefault(find(i), []).append(cs[i])
        return list(groups.values())

    def solve(cs) -> bool:
        live = []
        for cells, pairs in cs:
            if all(c in asg for c in cells):
                if not holds(pairs):
                    return False
            else:
                live.append((cells, pairs))
        if not live:
            return True
        before = set(asg)
        if all(solve_component(comp) for comp in components(live)):
            return True
        for c in set(asg) - before:   # undo components that succeeded before a failure
            del asg[c]
        return False

    def solve_component(cs) -> bool:
        cells, _ = min(cs, key=lambda c: sum(1 for x in c[0] if x not in asg))
        free = sorted(c for c in cells if c not in asg)
        for vals in product(range(n), repeat=len(free)):
            nodes[0] += 1
            if nodes[0] > budget:
                raise BudgetExceeded(n ** total_cells, budget)
            for c, v in zip(free, vals):
                asg[c] = v
            if solve(cs):
                return True
            for c in free:
                asg.pop(c, None)
        return False

    if not solve(cons):
        return None
    return dict(asg)


def verify_skolem(S: FiniteSemigroup, sys: EquationSystem,
                  result: tuple[IdentitySystem, SkolemSignature] | None = None, *,
                  budget: int = DEFAULT_BUDGET) -> bool:
    """Whether the Skolem operations can be interpreted on S; must agree with evaluate."""
    ids = (result or skolemize(sys))[0]
    found = skolem_model(S, ids, budget=budget) is not None
    direct = evaluate(S, sys, budget=budget, traces=False).verdict
    if found != direct:
        raise EquivalenceViolation(f"Skolem interpretation {found} but evaluation {direct}")
    return found


# ---------------------------------------------------------------------------
# localisation

def _fresh(base: str, taken: set[str]) -> str:
    if base not in taken:
        return base
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def localise(sys: EquationSystem) -> EquationSystem:
    """forall A exists X, X in V(A), with every symbol t replaced by A*X*t*A*X."""
    taken = set(sys.symbols)
    A = _fresh("A", taken)
    X = _fresh("X", taken | {A})
    wrap = (lambda w: tuple(s for t in w for s in (A, X, t, A, X)))
    matrix = [[InV((X,), (A,))] + [map_words(a, wrap) for a in d] for d in sys.matrix]
    blocks = [("forall", (A,)), ("exists", (X,))] + [(b.quantifier, b.symbols) for b in sys.prefix]
    return make_system(blocks, matrix)


def verify_localise(S: FiniteSemigroup, sys: EquationSystem, *,
                    budget: int = DEFAULT_BUDGET) -> bool:
    """S satisfies the localised system iff every local submonoid eSe satisfies sys."""
    if not is_regular(S):
        raise NotRegular("localisation equivalence needs a regular semigroup")
    lhs = evaluate(S, localise(sys), budget=budget, traces=False).verdict
    rhs = all(evaluate(local_subsemigroup(S, e)[0], sys, budget=budget, traces=False).verdict
              for e in sorted(S.idempotents()))
    if lhs != rhs:
        raise EquivalenceViolation(f"localised verdict {lhs}, local submonoids {rhs}")
    return lhs


def local_isomorphism_failures(S: FiniteSemigroup) -> list[tuple[int, int]]:
    """D-related idempotent pairs (e, f) whose local submonoids are not isomorphic."""
    g = green_data(S)
    E = sorted(S.idempotents())
    locals_ = {e: local_subsemigroup(S, e)[0] for e in E}
    return [(e, f) for i, e in enumerate(E) for f in E[i + 1:]
            if g.d_class[e] == g.d_class[f] and are_isomorphic(locals_[e], locals_[f]) is None]


def render_term(t: Term, style: str = "dsl") -> str:
    return _join_term(t, _dsl_factor if style == "dsl" else _math_factor,
                      "*" if style == "dsl" else "")


__all__ = ["SkolemApp", "SkolemSignature", "IdentitySystem", "skolemize", "render_identities",
           "skolem_model", "verify_skolem", "localise", "verify_localise",
           "local_isomorphism_failures", "render_term", "render_word"]
