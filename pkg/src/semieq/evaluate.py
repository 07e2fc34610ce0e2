"""Deciding S |= system by depth-first quantifier search.

Atoms are compiled into table-lookup lambdas and checked at the first depth at which
all their symbols are bound, so a failing atom prunes every extension of the current
partial assignment.  Disjuncts are tracked as a set of still-possible alternatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .algebra import FiniteSemigroup
from .eqdsl import (EquationSystem, Green, InE, InG, InV, WordEq, atom_symbols, desugar)
from .errors import BudgetExceeded
from .green import green_data

DEFAULT_BUDGET = 10 ** 8
DEFAULT_SAMPLES = 16


@dataclass(frozen=True)
class EvalReport:
    verdict: bool
    witness_trace: tuple[dict, ...] = ()
    # outermost universal assignment with no completion (None when satisfied)
    failure_trace: dict | None = None
    nodes: int = 0
    matrix_evals: int = 0
    estimated_cost: int = 0
    system: EquationSystem | None = field(default=None, repr=False)

    def __bool__(self) -> bool:
        return self.verdict


class _Compiled:
    def __init__(self, sys: EquationSystem):
        self.system = sys
        self.symbols = sys.symbols
        self.pos = {s: i for i, s in enumerate(self.symbols)}
        self.forall = tuple(sys.quantifier_of(s) == "forall" for s in self.symbols)
        self.first_block = len(sys.prefix[0].symbols)
        k = len(self.symbols)
        lines = ["def _factory(R, G, CR, CL, CH, CD, CJ):", "    return ["]
        for d in sys.matrix:
            by_level: dict[int, list[str]] = {}
            for atom in d:
                level = max(self.pos[s] for s in atom_symbols(atom))
                by_level.setdefault(level, []).append(self._atom_expr(atom))
            cells = []
            for lv in range(k):
                if lv in by_level:
                    body = " and ".join(f"({e})" for e in by_level[lv])
                    cells.append(f"lambda v: {body}")
                else:
                    cells.append("None")
            lines.append("        [" + ", ".join(cells) + "],")
        lines.append("    ]")
        namespace: dict = {}
        exec(compile("\n".join(lines), "<equation-system>", "exec"), namespace)
        self._factory = namespace["_factory"]
        self.uses_green = any(isinstance(a, (InG, Green)) for d in sys.matrix for a in d)

    def _word_expr(self, w) -> str:
        e = f"v[{self.pos[w[0]]}]"
        for s in w[1:]:
            e = f"R[{e}][v[{self.pos[s]}]]"
        return e

    def _atom_expr(self, atom) -> str:
        if isinstance(atom, WordEq):
            return f"{self._word_expr(atom.lhs)} == {self._word_expr(atom.rhs)}"
        if isinstance(atom, InG):
            return f"G[{self._word_expr(atom.w)}]"
        if isinstance(atom, Green):
            c = "C" + atom.rel
            return f"{c}[{self._word_expr(atom.u)}] == {c}[{self._word_expr(atom.v)}]"
        raise TypeError(f"atom {atom!r} should have been desugared")

    def bind(self, S: FiniteSemigroup):
        if self.uses_green:
            g = green_data(S)
            return self._factory(S.rows, g.group_h, g.r_class, g.l_class, g.h_class,
                                 g.d_class, g.j_class)
        return self._factory(S.rows, None, None, None, None, None, None)


@lru_cache(maxsize=512)
def _compile(sys: EquationSystem) -> _Compiled:
    return _Compiled(desugar(sys))


class _Search:
    def __init__(self, comp: _Compiled, S: FiniteSemigroup, budget: int,
                 fixed: Mapping[str, int] | None):
        self.comp = comp
        self.checks = comp.bind(S)
        self.k = len(comp.symbols)
        n = S.order
        self.domains = [range(n)] * self.k
        for s, val in (fixed or {}).items():
            if s not in comp.pos:
                raise KeyError(f"{s!r} is not bound by the system")
            self.domains[comp.pos[s]] = (int(val),)
        self.v = [0] * self.k
        self.budget = budget
        self.estimated = n ** self.k
        self.nodes = 0
        self.leaves = 0
        self.failure: list[int] | None = None

    def _alive(self, d: int, alive: tuple[int, ...]) -> tuple[int, ...]:
        v = self.v
        out = []
        for j in alive:
            f = self.checks[j][d]
            if f is None or f(v):
                out.append(j)
        return tuple(out)

    def run(self, d: int, alive: tuple[int, ...]) -> bool:
        forall = self.comp.forall[d]
        last = d == self.k - 1
        v = self.v
        checks = self.checks
        single = checks[0][d] if len(checks) == 1 else None
        for val in self.domains[d]:
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(self.estimated, self.budget)
            v[d] = val
            if len(checks) == 1:
                ok = single is None or single(v)
                nxt = alive if ok else ()
            else:
                nxt = self._alive(d, alive)
            if last:
                self.leaves += 1
                res = bool(nxt)
            elif nxt:
                res = self.run(d + 1, nxt)
            else:
                res = False
            if forall:
                if not res:
                    if self.failure is None and d < self.comp.first_block:
                        self.failure = v[:d + 1] + [self.domains[i][0]
                                                    for i in range(d + 1, self.comp.first_block)]
                    return False
            elif res:
                return True
        return forall

    def strategy(self, d: int, alive: tuple[int, ...], out: list, limit: int) -> None:
        """Collect satisfying leaves following the first winning existential choices."""
        forall = self.comp.forall[d]
        last = d == self.k - 1
        for val in self.domains[d]:
            if len(out) >= limit:
                return
            self.v[d] = val
            nxt = self._alive(d, alive)
            if forall:
                if last:
                    out.append(self._snapshot())
                else:
                    self.strategy(d + 1, nxt, out, limit)
            else:
                if last:
                    if nxt:
                        out.append(self._snapshot())
                        return
                elif nxt and self.run(d + 1, nxt):
                    self.v[d] = val
                    self.strategy(d + 1, nxt, out, limit)
                    return

    def _snapshot(self) -> dict:
        return dict(zip(self.comp.symbols, self.v))


def evaluate(S: FiniteSemigroup, sys: EquationSystem, *, budget: int = DEFAULT_BUDGET,
             samples: int = DEFAULT_SAMPLES, fixed: Mapping[str, int] | None = None,
             traces: bool = True) -> EvalReport:
    """Decide whether S satisfies the system.

    ``fixed`` pins some bound symbols to given elements (used to replay traces).
    Raises BudgetExceeded when more than ``budget`` bindings would be explored.
    """
    comp = _compile(sys)
    search = _Search(comp, S, budget, fixed)
    alive = tuple(range(len(comp.system.matrix)))
    verdict = search.run(0, alive)
    witness: tuple[dict, ...] = ()
    failure = None
    if traces:
        if verdict:
            out: list[dict] = []
            search.strategy(0, alive, out, samples)
            witness = tuple(out)
        elif comp.forall[0]:
            failure = dict(zip(comp.symbols, search.failure or []))
        else:
            failure = {}
    return EvalReport(verdict, witness, failure, search.nodes, search.leaves,
                      search.estimated, sys)


def satisfies(S: FiniteSemigroup, sys: EquationSystem, *, budget: int = DEFAULT_BUDGET) -> bool:
    return evaluate(S, sys, budget=budget, traces=False).verdict


def _word_value(S: FiniteSemigroup, w, asg: Mapping[str, int]) -> int:
    return S.evaluate_word(asg[s] for s in w)


def evaluate_atom(S: FiniteSemigroup, atom, asg: Mapping[str, int]) -> bool:
    if isinstance(atom, WordEq):
        return _word_value(S, atom.lhs, asg) == _word_value(S, atom.rhs, asg)
    if isinstance(atom, InV):
        x, a = _word_value(S, atom.x, asg), _word_value(S, atom.a, asg)
        return S.mul(S.mul(a, x), a) == a and S.mul(S.mul(x, a), x) == x
    if isinstance(atom, InE):
        w = _word_value(S, atom.w, asg)
        return S.mul(w, w) == w
    g = green_data(S)
    if isinstance(atom, InG):
        return g.group_h[_word_value(S, atom.w, asg)]
    return g.related(atom.rel, _word_value(S, atom.u, asg), _word_value(S, atom.v, asg))


def evaluate_matrix(S: FiniteSemigroup, matrix, assignment: Mapping[str, int]) -> bool:
    """Disjunction over disjuncts of the conjunction of their atoms, at a total assignment."""
    return any(all(evaluate_atom(S, a, assignment) for a in d) for d in matrix)
