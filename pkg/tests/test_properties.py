"""Randomised property suites; every loop is driven by a fixed seed."""

import random

import numpy as np
import pytest

from semieq.eqdsl import (Block, EquationSystem, Green, InE, InG, InV, WordEq, make_system,
                          parse, render)
from semieq.evaluate import satisfies
from semieq.natsolve import (FullLattice, Positive, ZeroOnly, classify_universal,
                             decide_solvable_in_P, find_witness, profile, sums_structure)

CASES = 1000
SEED = 20240601


def reachable(coeffs, bound):
    """Offset and boolean array of all sums sum t_i c_i with 1 <= t_i <= bound."""
    span = bound * sum(abs(c) for c in coeffs)
    cur = np.zeros(2 * span + 1, dtype=bool)
    cur[span] = True
    for c in coeffs:
        nxt = np.zeros_like(cur)
        for t in range(1, bound + 1):
            shift = t * c
            if shift >= 0:
                nxt[shift:] |= cur[:len(cur) - shift]
            else:
                nxt[:shift] |= cur[-shift:]
        cur = nxt
    return span, cur


def member(span, arr, v):
    i = v + span
    return 0 <= i < len(arr) and bool(arr[i])


def window_closure(coeffs, lo, hi):
    """Sums reachable from sum(c) by adding generators, never leaving [lo, hi].

    Any multiset of steps can be ordered so partial sums stay within max|c| of the
    segment between start and target, so a padded window loses nothing.
    """
    size = hi - lo + 1
    reach = np.zeros(size, dtype=bool)
    start = sum(coeffs) - lo
    if not 0 <= start < size:
        return reach
    reach[start] = True
    while True:
        before = reach.copy()
        for c in coeffs:
            if c > 0:
                reach[c:] |= reach[:-c]
            elif c < 0:
                reach[:c] |= reach[-c:]
        if np.array_equal(before, reach):
            return reach


def test_sums_structure_matches_window_closure():
    rng = random.Random(SEED)
    kinds = set()
    for _ in range(CASES):
        coeffs = [rng.randint(-30, 30) for _ in range(rng.randint(1, 4))]
        if rng.random() < 0.5:
            coeffs = [abs(c) for c in coeffs]
        s = sums_structure(coeffs)
        kinds.add(type(s).__name__)
        if isinstance(s, ZeroOnly):
            assert all(c == 0 for c in coeffs)
            continue
        pad = max(abs(c) for c in coeffs) + sum(abs(c) for c in coeffs)
        if isinstance(s, FullLattice):
            check = range(-40, 41)
        else:
            pos = s if isinstance(s, Positive) else s.mirror
            top = 2 * pos.conductor
            check = range(0, top + 1) if isinstance(s, Positive) else range(-top, 1)
        lo, hi = min(check) - pad, max(check) + pad
        reach = window_closure(coeffs, lo, hi)
        for v in check:
            assert (v in s) == bool(reach[v - lo]), (coeffs, v)
    assert kinds >= {"Positive", "Negative", "FullLattice"}


def random_profile(rng):
    l, k = rng.randint(1, 3), rng.randint(1, 3)
    r = [rng.randint(0, 6) for _ in range(l)]
    s = [rng.randint(0, 6) for _ in range(l)]
    p = [rng.randint(0, 6) for _ in range(k)]
    q = [rng.randint(0, 6) for _ in range(k)]
    xs = [f"x{i}" for i in range(l)]
    ps = [f"a{j}" for j in range(k)]
    lhs = tuple(sym for sym, c in zip(xs + ps, r + p) for _ in range(c)) or (xs[0],)
    rhs = tuple(sym for sym, c in zip(xs + ps, s + q) for _ in range(c)) or (xs[0],)
    return profile(lhs, rhs, ps, xs)


def test_decision_agrees_with_sampled_search():
    rng = random.Random(SEED + 1)
    refuted = 0
    for case in range(CASES):
        prof = random_profile(rng)
        dec = decide_solvable_in_P(prof)
        span, arr = reachable(prof.m, 120)
        tuples = [tuple(rng.randint(1, 6) for _ in prof.params) for _ in range(20)]
        missing = [a for a in tuples
                   if not member(span, arr, sum(x * c for x, c in zip(a, prof.n)))]
        # a sampled parameter tuple without a witness refutes solvability
        if missing:
            refuted += 1
            assert not dec.solvable, (prof, missing[0])
        if case % 10 == 0:
            for a in tuples[:3]:
                w = find_witness(prof, a)
                target = sum(x * c for x, c in zip(a, prof.n))
                assert (w is not None) == member(span, arr, target)
    assert refuted > 50


def test_witness_is_lexicographically_least():
    rng = random.Random(SEED + 2)
    for _ in range(CASES):
        m = [rng.randint(1, 7) for _ in range(2)]
        target = rng.randint(2, 60)
        prof = profile(("x",) * m[0] + ("y",) * m[1] + ("a",), ("a",) * (target + 1), ["a"],
                       ["x", "y"])
        w = find_witness(prof, (1,))
        brute = next(((t1, t2) for t1 in range(1, 61) for t2 in range(1, 61)
                      if t1 * m[0] + t2 * m[1] == target), None)
        assert w == brute


def random_word(rng, symbols, max_len=5):
    return tuple(rng.choice(symbols) for _ in range(rng.randint(1, max_len)))


def test_universal_equations_hold_on_corpus(corpus):
    rng = random.Random(SEED + 3)
    members = [e.semigroup for e in corpus]
    universal = 0
    for _ in range(CASES):
        syms = ["x", "y", "z"][:rng.randint(1, 3)]
        lhs, rhs = random_word(rng, syms), random_word(rng, syms)
        res = classify_universal(lhs, rhs)
        if not res.universal:
            continue
        universal += 1
        used = sorted(set(lhs) | set(rhs))
        sys_ = make_system([("exists", used)], [[WordEq(lhs, rhs)]])
        for S in members:
            assert satisfies(S, sys_)
    assert universal > 200


def random_system(rng):
    pool = list("abcdxyzuvw")
    rng.shuffle(pool)
    n_blocks = rng.randint(1, 3)
    q = rng.choice(["forall", "exists"])
    blocks, used = [], 0
    for _ in range(n_blocks):
        size = rng.randint(1, 2)
        blocks.append(Block(q, tuple(pool[used:used + size])))
        used += size
        q = "exists" if q == "forall" else "forall"
    syms = pool[:used]

    def atom():
        kind = rng.randrange(5)
        w = lambda: random_word(rng, syms, 4)  # noqa: E731
        if kind == 0:
            return WordEq(w(), w())
        if kind == 1:
            return InV(w(), w())
        if kind == 2:
            return InE(w())
        if kind == 3:
            return InG(w())
        return Green(rng.choice("RLHDJ"), w(), w())

    matrix = tuple(tuple(atom() for _ in range(rng.randint(1, 3)))
                   for _ in range(rng.randint(1, 2)))
    return EquationSystem(tuple(blocks), matrix)


def test_parse_render_round_trip():
    rng = random.Random(SEED + 4)
    for _ in range(CASES):
        s = random_system(rng)
        text = render(s)
        assert parse(text) == s
        assert render(parse(text)) == text
