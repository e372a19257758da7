from itertools import product

import numpy as np
import pytest

from corpus import corpus
from rrcodes.bounds import bound_I_search, bound_II_search
from rrcodes.channel import burst_channel, random_codeword
from rrcodes.code import DefiningSet, code_from_defining_set
from rrcodes.field import field_create
from rrcodes.oracle import classical_bch_decode, min_distance_exhaustive
from rrcodes.poly import Polynomial


def naive_min_distance(C):
    best = C.n + 1
    for msg in product(range(C.field.q), repeat=C.k):
        if any(msg):
            best = min(best, C.encode(Polynomial(C.field, msg)).weight())
    return best


SMALL = [
    (2, 1, 7, 1, [1, 2, 4], 2),
    (2, 1, 7, 1, [1, 2, 4, 0], 1),
    (2, 1, 5, 2, [1, 2, 3, 4], 3),
    (3, 1, 4, 1, [1, 3], 2),
    (3, 1, 8, 1, [1, 3, 2, 6, 5, 7], 3),
    (2, 2, 5, 1, [1, 4], 2),
    (5, 1, 4, 1, [1, 2, 3], 5),
]


@pytest.mark.parametrize("spec", SMALL, ids=lambda s: f"p{s[0]}m{s[1]}n{s[2]}s{s[3]}")
def test_oracle_matches_naive_enumeration(spec):
    p, m, n, s, idx, mult = spec
    F = field_create(p, m)
    C = code_from_defining_set(F, n, s, DefiningSet.uniform(n, idx, mult).closure(F.q))
    res = min_distance_exhaustive(C)
    assert res.distance == naive_min_distance(C)
    assert res.count == F.q ** C.k
    assert C.is_codeword(res.codeword) and res.codeword.weight() == res.distance
    assert len(res.to_dict()["codeword"]) == C.n


def test_oracle_on_bch15(bch15):
    assert min_distance_exhaustive(bch15).distance == 5


def test_oracle_cap(code34):
    with pytest.raises(ValueError):
        min_distance_exhaustive(code34, cap=1000)


def test_oracle_dominates_bounds_on_corpus():
    codes = corpus()
    assert len(codes) >= 50
    violations = []
    for C in codes:
        d = min_distance_exhaustive(C).distance
        b1, b2 = bound_I_search(C).value, bound_II_search(C).value
        if not b1 <= b2 <= d:
            violations.append((C, b1, b2, d))
    assert violations == []


def test_classical_decoder_corrects_two_errors(bch15):
    w = bound_I_search(bch15)
    rng = np.random.default_rng(0)
    for _ in range(50):
        c = random_codeword(bch15, rng)
        e = [0] * 15
        for j in rng.choice(15, size=int(rng.integers(0, 3)), replace=False):
            e[int(j)] = 1
        r = c + Polynomial(bch15.field, e)
        assert classical_bch_decode(bch15, r, w.f, w.m, w.delta) == c


def test_classical_decoder_refuses_repeated_roots(code34):
    with pytest.raises(ValueError):
        classical_bch_decode(code34, Polynomial.zero(code34.field), 1, 1, 3)


def test_classical_decoder_beyond_radius_returns_none_or_a_codeword(bch15):
    w = bound_I_search(bch15)
    rng = np.random.default_rng(3)
    for _ in range(30):
        c = random_codeword(bch15, rng)
        r, _ = burst_channel(bch15, c, 3, rng)
        out = classical_bch_decode(bch15, r, w.f, w.m, w.delta)
        assert out is None or bch15.is_codeword(out)
