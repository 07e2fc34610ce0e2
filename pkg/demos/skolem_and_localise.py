"""Skolem forms of a few class bases and the localised regular system."""

from semieq.classes import get_class
from semieq.eqdsl import render
from semieq.families import make_family
from semieq.transforms import localise, render_identities, skolemize, verify_skolem


def main() -> None:
    for cid, names in (("monoid", None), ("group", ["\\", "/"]), ("regular", None)):
        ids, _ = skolemize(get_class(cid).basis, names=names)
        print(f"{cid:8s} {render_identities(ids, 'math')}")
    for desc in ("Zn:3", "chain:2", "null:2"):
        ok = verify_skolem(make_family(desc), get_class("group").basis)
        print(f"group operations interpretable on {desc}: {ok}")
    print(render(localise(get_class("regular").basis)))


if __name__ == "__main__":
    main()
