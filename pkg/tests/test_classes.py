import pytest

from semieq.classes import (FSET, catalogue, class_ids, core_is_union_of_groups, cross_validate,
                            get_class, is_regular, nr_counterexample_check, oracle_check, solidity,
                            top_j_class_condition, top_j_class_not_n, unique_right_division)
from semieq.eqdsl import InE, InG, InV, WordEq, desugar
from semieq.errors import UnknownClass
from semieq.families import NON_E_SOLID_BAND, make_family

IDS = ["group", "regular", "cr", "clifford", "cs", "ig", "crypto", "rightid", "monoid", "simple",
       "rightsimple", "leftsimple", "maxj", "bisimple", "rightgroup", "id", "inverse", "orthodox",
       "esolid", "esolid2", "reg34", "inv35", "orth36", "es37", "nr"]


def test_catalogue_ids_exact():
    assert class_ids() == IDS
    assert len(catalogue()) >= 19


def test_fset():
    assert len(FSET) == 4 and all(len(w) == 2 for w in FSET)


@pytest.mark.parametrize("cid", IDS)
def test_bases_desugar(cid):
    desugar(get_class(cid).basis)


def test_esolid_basis_shape():
    atoms = get_class("esolid").basis.matrix[0]
    assert sum(isinstance(a, InG) for a in atoms) == 64
    assert sum(isinstance(a, InV) for a in atoms) == 2
    assert all(len(a.w) == 6 for a in atoms if isinstance(a, InG))


def test_orthodox_basis_shape():
    atoms = get_class("orthodox").basis.matrix[0]
    assert sum(isinstance(a, InE) for a in atoms) == 64


def test_inverse_basis_shape():
    b = get_class("inverse").basis
    assert b.universals == ("a", "b") and b.existentials == ("x", "y")
    eqs = [a for a in b.matrix[0] if isinstance(a, WordEq)]
    assert len(eqs) == 6
    assert WordEq(("a", "x", "x", "a"), ("x", "a", "a", "x")) in eqs


def test_unknown_class():
    with pytest.raises(UnknownClass):
        oracle_check("nope", make_family("Zn:2"))


@pytest.mark.parametrize("cid, desc, expected", [
    ("inverse", "brandt:2", True),
    ("esolid", NON_E_SOLID_BAND, False),
    ("orthodox", NON_E_SOLID_BAND, False),
    ("maxj", "null:2 x null:2", False),
    ("maxj", "brandt:2", True),
    ("rightgroup", "rz:2", True),
    ("rightgroup", "lz:2", False),
    ("group", "Zn:5", True),
    ("clifford", "Zn:2 x chain:2", True),
    ("cs", "lz:2 x rz:2", True),
    ("crypto", "Zn:2 x lz:2", True),
    ("nr", "T:3", True),
    ("nr", "U3", False),
    ("bisimple", "brandt:2", False),
    ("bisimple", "lz:2 x rz:2", True),
    ("id", "mono:2,2", True),
    ("ig", "null:2", False),
    ("ig", "brandt:2", False),
    ("ig", "Zn:2 x chain:2", True),
])
def test_oracle_examples(cid, desc, expected):
    assert oracle_check(cid, make_family(desc)) == expected


def test_right_group_characterisations_agree(corpus):
    for e in corpus:
        S = e.semigroup
        assert oracle_check("rightgroup", S) == unique_right_division(S)


def test_esolid_characterisations_agree_on_regular(corpus):
    for e in corpus:
        S = e.semigroup
        if is_regular(S):
            assert core_is_union_of_groups(S) == solidity(S), e.name


def test_maxj_conditions_agree(corpus):
    for e in corpus:
        S = e.semigroup
        assert top_j_class_condition(S) == top_j_class_not_n(S), e.name


@pytest.mark.parametrize("cid", [c for c in IDS if c not in ("esolid2", "bisimple")])
def test_cross_validation_small(cid, corpus):
    assert cross_validate(cid, corpus.up_to(11)) == []


def test_weakened_basis_disagrees_on_band():
    disc = cross_validate("esolid2", [("band", make_family(NON_E_SOLID_BAND))])
    assert len(disc) == 1 and disc[0].oracle is False and disc[0].basis is True


@pytest.mark.parametrize("pair", [("inverse", "orthodox"), ("orthodox", "esolid"),
                                  ("cs", "crypto"), ("clifford", "inverse"), ("clifford", "cr")])
def test_class_inclusions(pair, corpus):
    small, big = pair
    for e in corpus:
        if oracle_check(small, e.semigroup):
            assert oracle_check(big, e.semigroup), (pair, e.name)


def test_esolid_and_ig_is_cr(corpus):
    for e in corpus:
        S = e.semigroup
        assert (oracle_check("esolid", S) and oracle_check("ig", S)) == oracle_check("cr", S)


def test_nr_counterexample():
    r = nr_counterexample_check()
    assert r["T3_satisfies_nr"] and not r["U_satisfies_nr"]
    assert r["U_regular"] and r["U_subsemigroup_of_T3"]
    assert r["failing_element"] == "233" and r["failing_element_fails"]
