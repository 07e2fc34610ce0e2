"""Deciding solvability of a word equation over the positive integers, with witnesses."""

from semieq.natsolve import (decide_solvable_in_P, find_witness, parse_additive,
                             substitution_value, sums_structure)

EQUATIONS = [
    "params: a b; vars: x y; eq: x^13*y^24*a^2*b^5 = x^10*y^16*a^13*b^19",
    "params: a1 a2 a3; vars: x1 x2; "
    "eq: x1^9*x2^23*a1^2*a2^13*a3 = x1^30*x2^8*a1^11*a2^7*a3^10",
]


def main() -> None:
    for text in EQUATIONS:
        prof = parse_additive(text)
        dec = decide_solvable_in_P(prof)
        print(text)
        print(f"  d={prof.d} d'={prof.dprime} solvable={dec.solvable} ({dec.rationale})")
    pos = parse_additive(EQUATIONS[0])
    w = find_witness(pos, (2, 3))
    print("least witness at a=2, b=3:", w, "value", substitution_value(pos, w, (2, 3)))
    s = sums_structure((3, 8))
    print("S(3,8):", s, "gaps above 10:", [v for v in range(11, 30) if v not in s])


if __name__ == "__main__":
    main()
