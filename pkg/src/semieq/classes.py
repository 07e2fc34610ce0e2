"""Catalogue of semigroup classes: a structural oracle and an equational basis for each.

Oracles work from the multiplication table and Green's relations only and never call
the evaluator, so comparing the two columns is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable

from .algebra import FiniteSemigroup, is_subsemigroup
from .eqdsl import EquationSystem, InE, InG, InV, WordEq, make_system, parse
from .errors import BudgetExceeded, EquivalenceViolation, UnknownClass
from .evaluate import DEFAULT_BUDGET, evaluate
from .families import full_transformation, singular_part
from .green import core, green_data, has_maximum_j_class, inverses_of, is_regular

# idempotent words built from a pair of inverses: ax, xa, by, yb
FSET = (("a", "x"), ("x", "a"), ("b", "y"), ("y", "b"))


@dataclass(frozen=True)
class ClassEntry:
    class_id: str
    oracle: Callable[[FiniteSemigroup], bool]
    basis: EquationSystem
    notes: str
    regular: bool = False          # every member is a regular semigroup
    cross_validated: bool = True   # False only for the deliberately weakened basis
    # membership test used by closure suites when it differs from the oracle
    closure_oracle: Callable[[FiniteSemigroup], bool] | None = None


# ---------------------------------------------------------------------------
# structural oracles

def _single_class(rel: str) -> Callable[[FiniteSemigroup], bool]:
    return lambda S: len(set(green_data(S).of(rel))) == 1


is_right_simple = _single_class("R")
is_left_simple = _single_class("L")
is_simple = _single_class("J")
is_bisimple = _single_class("D")


def is_group(S: FiniteSemigroup) -> bool:
    return is_left_simple(S) and is_right_simple(S)


def is_completely_regular(S: FiniteSemigroup) -> bool:
    return all(green_data(S).group_h)


def idempotents_central(S: FiniteSemigroup) -> bool:
    rows = S.rows
    return all(rows[e][s] == rows[s][e] for e in S.idempotents() for s in range(S.order))


def is_clifford(S: FiniteSemigroup) -> bool:
    return is_completely_regular(S) and idempotents_central(S)


def is_completely_simple(S: FiniteSemigroup) -> bool:
    E = S.idempotents()
    if not is_simple(S) or not E:
        return False
    rows = S.rows
    # primitive: e <= f (e = ef = fe) forces e = f
    return all(e == f for e in E for f in E if rows[e][f] == e and rows[f][e] == e)


def has_group_inverse(S: FiniteSemigroup) -> bool:
    g = green_data(S)
    return all(any(g.group_h[x] for x in inverses_of(S, a)) for a in range(S.order))


def h_is_congruence(S: FiniteSemigroup) -> bool:
    h = green_data(S).h_class
    rows = S.rows
    n = S.order
    for a, b in combinations(range(n), 2):
        if h[a] != h[b]:
            continue
        for s in range(n):
            if h[rows[a][s]] != h[rows[b][s]] or h[rows[s][a]] != h[rows[s][b]]:
                return False
    return True


def is_cryptogroup(S: FiniteSemigroup) -> bool:
    return is_completely_regular(S) and h_is_congruence(S)


def has_right_identity(S: FiniteSemigroup) -> bool:
    return any(all(S.rows[a][e] == a for a in range(S.order)) for e in range(S.order))


def is_monoid(S: FiniteSemigroup) -> bool:
    return S.identity() is not None


def top_j_class_condition(S: FiniteSemigroup) -> bool:
    """Maximum J-class J exists and the principal factor S/(S-J) is not null.

    The factor is null exactly when J*J misses J.  For S = J the factor is S itself,
    which is never null in this sense (J*J meets J in a simple semigroup).
    """
    top = has_maximum_j_class(S)
    if top is None:
        return False
    j = green_data(S).j_class
    J = [a for a in range(S.order) if j[a] == j[top]]
    return any(j[S.rows[a][b]] == j[top] for a in J for b in J)


def top_j_class_not_n(S: FiniteSemigroup) -> bool:
    """Maximum J-class J exists and S/(S-J) is not isomorphic to the 2-element null semigroup."""
    from .algebra import rees_quotient
    from .families import null
    from .green import are_isomorphic

    top = has_maximum_j_class(S)
    if top is None:
        return False
    j = green_data(S).j_class
    rest = [a for a in range(S.order) if j[a] != j[top]]
    Q = rees_quotient(S, rest) if rest else S
    return are_isomorphic(Q, null(2)) is None


def is_right_group(S: FiniteSemigroup) -> bool:
    return is_right_simple(S) and bool(S.idempotents())


def unique_right_division(S: FiniteSemigroup) -> bool:
    """ax = b has exactly one solution x for every a, b."""
    return all(sorted(row) == list(range(S.order)) for row in S.rows)


def is_right_group_checked(S: FiniteSemigroup) -> bool:
    v = is_right_group(S)
    if v != unique_right_division(S):
        raise EquivalenceViolation("right group characterisations disagree")
    return v


def has_idempotent(S: FiniteSemigroup) -> bool:
    return bool(S.idempotents())


def idempotents_commute(S: FiniteSemigroup) -> bool:
    rows = S.rows
    E = S.idempotents()
    return all(rows[e][f] == rows[f][e] for e in E for f in E)


def is_inverse(S: FiniteSemigroup) -> bool:
    return is_regular(S) and idempotents_commute(S)


def idempotents_closed(S: FiniteSemigroup) -> bool:
    rows = S.rows
    E = S.idempotents()
    return all(rows[e][f] in E for e in E for f in E)


def is_orthodox(S: FiniteSemigroup) -> bool:
    return is_regular(S) and idempotents_closed(S)


def core_is_union_of_groups(S: FiniteSemigroup) -> bool:
    C, _ = core(S)
    return is_completely_regular(C)


def solidity(S: FiniteSemigroup) -> bool:
    """Idempotents e L f R g always admit an idempotent h with e R h L g."""
    g = green_data(S)
    E = sorted(S.idempotents())
    idem_cells = {(g.r_class[h], g.l_class[h]) for h in E}
    for f in E:
        for e in E:
            if g.l_class[e] != g.l_class[f]:
                continue
            for k in E:
                if g.r_class[k] == g.r_class[f] and (g.r_class[e], g.l_class[k]) not in idem_cells:
                    return False
    return True


def is_e_solid(S: FiniteSemigroup) -> bool:
    """Regular with completely regular core; cross-checked against the solidity condition."""
    if not is_regular(S):
        return False
    v = core_is_union_of_groups(S)
    if v != solidity(S):
        raise EquivalenceViolation("E-solid characterisations disagree")
    return v


def locally_unital(S: FiniteSemigroup) -> bool:
    """Every element lies in some local submonoid eSe."""
    rows = S.rows
    E = S.idempotents()
    return all(any(rows[e][a] == a and rows[a][e] == a for e in E) for a in range(S.order))


def is_nr(S: FiniteSemigroup) -> bool:
    return is_regular(S) and locally_unital(S)


# ---------------------------------------------------------------------------
# bases

def _cat(*words) -> tuple[str, ...]:
    return tuple(s for w in words for s in w)


def _pair_inverses():
    return [InV(("x",), ("a",)), InV(("y",), ("b",))]


def _length3_products():
    return [_cat(g1, g2, g3) for g1, g2, g3 in product(FSET, repeat=3)]


def esolid_basis() -> EquationSystem:
    atoms = _pair_inverses() + [InG(p) for p in _length3_products()]
    return make_system([("forall", "ab"), ("exists", "xy")], [atoms])


def orthodox_basis() -> EquationSystem:
    atoms = _pair_inverses() + [InE(p) for p in _length3_products()]
    return make_system([("forall", "ab"), ("exists", "xy")], [atoms])


def inverse_basis() -> EquationSystem:
    atoms = _pair_inverses() + [WordEq(_cat(g1, g2), _cat(g2, g1))
                                for g1, g2 in combinations(FSET, 2)]
    return make_system([("forall", "ab"), ("exists", "xy")], [atoms])


def weakened_esolid_basis() -> EquationSystem:
    """Inverses for a, b with every length-2 product from FSET idempotent."""
    atoms = _pair_inverses() + [InE(_cat(g1, g2)) for g1, g2 in product(FSET, repeat=2)]
    return make_system([("forall", "ab"), ("exists", "xy")], [atoms])


REG = "forall a b. exists x u v. x in V(a) & u in V(a^2) & v in V(b^2)"

_TEXT_BASES = {
    "group": "forall a b. exists x y. a*x = b & y*a = b",
    "regular": "forall a. exists x. a*x*a = a",
    "cr": "forall a. exists x. a = a*x*a & a*x = x*a",
    "clifford": "forall a b. exists x y. a = a*x*a & a*b = b*y*a",
    "cs": "forall a b. exists x y. a = a*x*a & a = a*b*a*y",
    "ig": "forall a. exists x y. x in V(a) & x H y & y in E",
    "crypto": "forall a b. exists x. a = a*x*a & a*x = x*a & a*b H a*x*b & b*a H b*x*a",
    "rightid": "exists x. forall a. a*x = a",
    "monoid": "exists x. forall a. x*a = a & a*x = a",
    "simple": "forall a b. exists x y. a = x*b*y",
    "rightsimple": "forall a b. exists x. a = b*x",
    "leftsimple": "forall a b. exists x. a = x*b",
    "maxj": "exists y. forall a. exists x z. a = x*y*z",
    "bisimple": ("forall a b. exists t v x u y. "
                 "a = t*u & t = a*v & t = x*b & b = y*t | a = x*b & b = y*a | a = b*x & b = a*y"),
    "rightgroup": "forall a b. exists x y. a*x = b & y = y^2",
    "id": "exists x. x = x^2",
    "reg34": REG,
    "inv35": REG + " & a*u*a*b*v*b = b*v*b*a*u*a",
    "orth36": REG + " & a*u*a*b*v*b in E",
    "es37": REG + " & a*u*a*b*v*b in G",
    "nr": "forall a. exists x y. a = a*x*a & a = y*a & a = a*y",
}


def _build() -> tuple[ClassEntry, ...]:
    b = {k: parse(v) for k, v in _TEXT_BASES.items()}
    E = ClassEntry
    return (
        E("group", is_group, b["group"], "left and right simple", regular=True),
        E("regular", is_regular, b["regular"], "every R-class holds an idempotent", regular=True),
        E("cr", is_completely_regular, b["cr"], "every H-class is a group", regular=True),
        E("clifford", is_clifford, b["clifford"], "completely regular, central idempotents",
          regular=True),
        E("cs", is_completely_simple, b["cs"], "simple with primitive idempotents", regular=True),
        E("ig", has_group_inverse, b["ig"], "every element has an inverse in a subgroup",
          regular=True),
        E("crypto", is_cryptogroup, b["crypto"], "completely regular and H is a congruence",
          regular=True),
        E("rightid", has_right_identity, b["rightid"], "has a right identity"),
        E("monoid", is_monoid, b["monoid"], "has a two-sided identity"),
        E("simple", is_simple, b["simple"], "single J-class"),
        E("rightsimple", is_right_simple, b["rightsimple"], "single R-class"),
        E("leftsimple", is_left_simple, b["leftsimple"], "single L-class"),
        E("maxj", top_j_class_condition, b["maxj"],
          "maximum J-class whose principal factor is not null",
          closure_oracle=lambda S: has_maximum_j_class(S) is not None),
        E("bisimple", is_bisimple, b["bisimple"], "single D-class"),
        E("rightgroup", is_right_group_checked, b["rightgroup"],
          "right simple with an idempotent; cross-checked with unique right division",
          regular=True),
        E("id", has_idempotent, b["id"], "has an idempotent"),
        E("inverse", is_inverse, inverse_basis(), "regular, idempotents commute", regular=True),
        E("orthodox", is_orthodox, orthodox_basis(), "regular, idempotents closed",
          regular=True),
        E("esolid", is_e_solid, esolid_basis(), "regular, core is a union of groups",
          regular=True),
        E("esolid2", is_e_solid, weakened_esolid_basis(),
          "length-2 products only; strictly weaker than E-solidity", regular=True,
          cross_validated=False),
        E("reg34", is_regular, b["reg34"], "regular, via inverses of a, a^2, b^2", regular=True),
        E("inv35", is_inverse, b["inv35"], "inverse, via aua and bvb commuting", regular=True),
        E("orth36", is_orthodox, b["orth36"], "orthodox, via aua*bvb idempotent", regular=True),
        E("es37", is_e_solid, b["es37"], "E-solid, via aua*bvb in a subgroup", regular=True),
        E("nr", is_nr, b["nr"], "regular, every element in some eSe", regular=True),
    )


_CATALOGUE: tuple[ClassEntry, ...] | None = None


def catalogue() -> tuple[ClassEntry, ...]:
    global _CATALOGUE
    if _CATALOGUE is None:
        _CATALOGUE = _build()
    return _CATALOGUE


def class_ids() -> list[str]:
    return [e.class_id for e in catalogue()]


def get_class(class_id: str) -> ClassEntry:
    for e in catalogue():
        if e.class_id == class_id:
            return e
    raise UnknownClass(class_id)


def oracle_check(class_id: str, S: FiniteSemigroup) -> bool:
    return bool(get_class(class_id).oracle(S))


def basis_check(class_id: str, S: FiniteSemigroup, *, budget: int = DEFAULT_BUDGET) -> bool:
    return evaluate(S, get_class(class_id).basis, budget=budget, traces=False).verdict


@dataclass(frozen=True)
class Discrepancy:
    name: str
    oracle: bool | None
    basis: bool | None
    note: str = ""


def _named(corpus) -> Iterable[tuple[str, FiniteSemigroup]]:
    for item in corpus:
        if isinstance(item, FiniteSemigroup):
            yield repr(item), item
        elif hasattr(item, "semigroup"):
            yield item.name, item.semigroup
        else:
            yield item


def cross_validate(class_id: str, corpus, *, budget: int = DEFAULT_BUDGET) -> list[Discrepancy]:
    """Members on which the oracle and the basis disagree (budget overruns are recorded)."""
    entry = get_class(class_id)
    out = []
    for name, S in _named(corpus):
        o = bool(entry.oracle(S))
        try:
            b = evaluate(S, entry.basis, budget=budget, traces=False).verdict
        except BudgetExceeded as exc:
            out.append(Discrepancy(name, o, None, f"budget exceeded: {exc.estimated_cost}"))
            continue
        if o != b:
            out.append(Discrepancy(name, o, b))
    return out


def nr_counterexample_check() -> dict:
    """T_3 satisfies the NR basis, its regular subsemigroup of singular maps does not."""
    T3 = full_transformation(3)
    U = singular_part(3)
    nr = get_class("nr").basis
    in_t3 = [T3.index(lbl) for lbl in U.labels]
    rep_t = evaluate(T3, nr)
    rep_u = evaluate(U, nr)
    a = U.index("233")   # 1 -> 2 -> 3 -> 3
    rep_a = evaluate(U, nr, fixed={"a": a})
    return {
        "T3_satisfies_nr": rep_t.verdict,
        "U_satisfies_nr": rep_u.verdict,
        "U_regular": is_regular(U),
        "U_subsemigroup_of_T3": is_subsemigroup(T3, in_t3) and all(
            T3.rows[in_t3[i]][in_t3[j]] == in_t3[U.rows[i][j]]
            for i in range(U.order) for j in range(U.order)),
        "failing_element": U.label(a),
        "failing_element_fails": not rep_a.verdict,
        "U_failure_trace": {k: U.label(v) for k, v in (rep_u.failure_trace or {}).items()},
    }
