import pytest

from semieq.classes import get_class
from semieq.eqdsl import InV, parse
from semieq.errors import DisjunctiveMatrix, NotRegular, UnsupportedAtom
from semieq.evaluate import evaluate
from semieq.families import make_family
from semieq.green import is_regular
from semieq.transforms import (SkolemApp, local_isomorphism_failures, localise,
                               render_identities, skolem_model, skolemize, verify_localise,
                               verify_skolem)


def test_monoid_skolem_form():
    ids, sig = skolemize(get_class("monoid").basis)
    assert sig.symbols == (("e", 0),)
    assert render_identities(ids, "math") == "ea=ae=a"


def test_group_skolem_form():
    ids, sig = skolemize(get_class("group").basis, names=["\\", "/"])
    assert sig.symbols == (("\\", 2), ("/", 2))
    assert render_identities(ids, "math") == "a(a\\b)=b, (b/a)a=b"


def test_regular_skolem_dsl():
    ids, sig = skolemize(parse("forall a. exists x. a*x*a = a"))
    assert sig.header() == "skolem: f/1"
    assert ids.identities == (((("a"), SkolemApp("f", ("a",)), "a"), ("a",)),)
    assert render_identities(ids) == "skolem: f/1\nforall a. a*f(a)*a = a"


def test_arity_counts_preceding_universals():
    ids, sig = skolemize(parse("exists y. forall a. exists x z. a = x*y*z"))
    assert [a for _, a in sig.symbols] == [0, 1, 1]
    assert ids.existentials == ()


def test_skolemize_rejections():
    with pytest.raises(UnsupportedAtom):
        skolemize(get_class("esolid").basis)
    with pytest.raises(UnsupportedAtom):
        skolemize(parse("forall a b. a H b"))
    with pytest.raises(DisjunctiveMatrix):
        skolemize(parse("forall a. a = a | a = a*a"))


def test_skolem_names_must_be_fresh():
    with pytest.raises(ValueError):
        skolemize(parse("forall a. exists x. a = x"), names=["a"])


@pytest.mark.parametrize("desc, cid, expected", [
    ("Zn:2", "group", True), ("chain:2", "group", False), ("null:2", "monoid", False),
    ("brandt:2", "regular", True), ("mono:2,2", "regular", False),
])
def test_verify_skolem(desc, cid, expected):
    assert verify_skolem(make_family(desc), get_class(cid).basis) == expected


def test_group_model_is_division():
    S = make_family("Zn:3")
    ids, _ = skolemize(get_class("group").basis, names=["L", "R"])
    model = skolem_model(S, ids)
    for a in range(3):
        for b in range(3):
            assert S.mul(a, model[("L", (a, b))]) == b
            assert S.mul(model[("R", (a, b))], a) == b


def test_localise_shape():
    loc = localise(parse("forall a. exists x. a*x*a = a"))
    expected = parse("forall A. exists X. forall a. exists x. X in V(A) & "
                     "(A*X*a*A*X)*(A*X*x*A*X)*(A*X*a*A*X) = A*X*a*A*X")
    assert loc == expected


def test_localise_fresh_names_and_trivial():
    loc = localise(parse("forall A. exists X. A = X"))
    assert loc.symbols[:2] == ("A1", "X1")
    loc = localise(parse("exists x. x = x"))
    assert loc.prefix[0].symbols == ("A",)
    assert loc.prefix[1].symbols == ("X", "x")
    assert loc.matrix[0][0] == InV(("X",), ("A",))


def test_localise_injective():
    a = localise(parse("forall a. exists x. a*x*a = a"))
    b = localise(parse("forall a. exists x. a*x = a"))
    assert a != b


@pytest.mark.parametrize("desc", ["brandt:2", "lz:2 x rz:2", "T:2", "Zn:3", "chain:3"])
@pytest.mark.parametrize("cid", ["clifford", "group", "inverse", "cr"])
def test_verify_localise(desc, cid):
    verify_localise(make_family(desc), get_class(cid).basis)


@pytest.mark.parametrize("desc", ["T:2", "Zn:3", "chain:2"])
@pytest.mark.parametrize("cid", ["group", "clifford", "regular"])
def test_local_monoid_at_identity(desc, cid):
    # eSe = S when e is the identity, so the localised verdict forces S itself into the class
    S = make_family(desc)
    sys_ = get_class(cid).basis
    if verify_localise(S, sys_):
        assert evaluate(S, sys_).verdict


def test_verify_localise_needs_regular():
    with pytest.raises(NotRegular):
        verify_localise(make_family("null:2"), get_class("group").basis)


def test_local_isomorphism_t3():
    assert local_isomorphism_failures(make_family("T:3")) == []
