import pytest

from semieq.errors import UnsupportedParameter
from semieq.families import NON_E_SOLID_BAND, make_family


@pytest.mark.parametrize("desc, order", [
    ("Zn:1", 1), ("Zn:6", 6), ("mono:3,3", 5), ("mono:1,1", 1), ("chain:4", 4),
    ("null:3", 3), ("lz:3", 3), ("rz:2", 2), ("T:2", 4), ("T:3", 27), ("U3", 21),
    ("brandt:2", 5), ("brandt:3", 10), ("btrunc:1", 3), ("btrunc:2", 6), ("btrunc:3", 11),
    (NON_E_SOLID_BAND, 17), ("Zn:2 x chain:3", 6), ("lz:2 x rz:2", 4),
])
def test_orders(desc, order):
    S = make_family(desc)
    assert S.order == order
    S.recheck()


@pytest.mark.parametrize("desc", ["Zn:0", "T:5", "mono:0,1", "foo:3", "zrb:2x2:11", "Zn:x", "U4"])
def test_bad_descriptors(desc):
    with pytest.raises(UnsupportedParameter):
        make_family(desc)


def test_t3_identity_label():
    T3 = make_family("T:3")
    assert T3.label(T3.identity()) == "123"


def test_maps_act_on_the_right():
    T3 = make_family("T:3")
    f, g = T3.index("213"), T3.index("111")
    # x(fg) = (xf)g: everything goes to 1
    assert T3.label(T3.mul(f, g)) == "111"
    # 1 -> 1 then swap 1,2: "111" then "213" sends everything to 2
    assert T3.label(T3.mul(g, f)) == "222"


def test_non_e_solid_band_idempotents():
    B = make_family(NON_E_SOLID_BAND)
    idem = sorted(B.label(e) for e in B.idempotents() if e != 0)
    assert idem == ["(1,1)", "(1,2)", "(1,4)", "(2,1)", "(2,2)", "(3,2)", "(3,4)", "(4,3)"]


def test_brandt_labels():
    B = make_family("brandt:2")
    a, b = B.index("(1,2)"), B.index("(2,1)")
    assert B.label(B.mul(a, b)) == "(1,1)"
    assert B.mul(a, a) == 0


def test_truncated_brandt_extra_idempotent():
    B = make_family("btrunc:2")
    e = B.index("(2,2)")
    assert B.mul(e, e) == e
    assert B.mul(e, B.index("(0,0)")) == 0
