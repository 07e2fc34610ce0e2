"""A 17-element band satisfying the weakened solidity system but not E-solid."""

from semieq.classes import core_is_union_of_groups, get_class, solidity
from semieq.evaluate import evaluate
from semieq.families import NON_E_SOLID_BAND, make_family


def main() -> None:
    B = make_family(NON_E_SOLID_BAND)
    print(f"{NON_E_SOLID_BAND}: order {B.order}")
    weak = evaluate(B, get_class("esolid2").basis)
    full = evaluate(B, get_class("esolid").basis)
    print("weakened system holds:", weak.verdict)
    print("E-solid basis holds:  ", full.verdict)
    print("core is a union of groups:", core_is_union_of_groups(B))
    print("idempotent solidity:      ", solidity(B))


if __name__ == "__main__":
    main()
