import dataclasses
from functools import reduce

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rrcodes.bounds import bound_I_search, bound_II_search, product_witness
from rrcodes.channel import burst_channel, random_codeword
from rrcodes.code import fold
from rrcodes.decoder import (
    SyndromeSet,
    chien_search,
    decode_alg1,
    decode_alg2,
    decompose,
    error_values_folded,
    geea,
    reassemble,
    syndromes_folded,
    syndromes_product,
)
from rrcodes.field import field_create
from rrcodes.poly import Polynomial

seeds = st.integers(0, 2 ** 32 - 1)


@pytest.fixture(scope="module")
def ht_witness(code34):
    return bound_II_search(code34)


@pytest.fixture(scope="module")
def product_setup(code34, parity3):
    w = product_witness(code34, parity3, 47, 1)
    b = Polynomial(code34.field, [1, 1])
    return parity3.code, b, w


# -- key equation solver --

def test_geea_on_zero_syndromes_gives_unit_locator():
    K = field_create(2, 4)
    sol = geea(SyndromeSet(K, ((0, 0, 0, 0), (0, 0, 0, 0)), {}))
    assert sol.locator == Polynomial.one(K)
    assert all(o.is_zero() for o in sol.evaluators)


def test_geea_needs_a_sequence():
    with pytest.raises(ValueError):
        geea(SyndromeSet(field_create(2, 4), (), {}))


def _syndromes_of(K, locs, vals, L):
    """S_t[i] = sum_j v_{t,j} x_j^i for each sequence t."""
    return tuple(tuple(
        reduce(K.add, (K.mul(v, K.pow(x, i)) for x, v in zip(locs, row)), 0) for i in range(L)) for row in vals)


@given(st.data())
def test_geea_recovers_planted_locator(data):
    K = field_create(2, 6)
    tau = data.draw(st.integers(1, 3))
    locs = data.draw(st.lists(st.integers(1, K.q - 1), min_size=tau, max_size=tau, unique=True))
    T = data.draw(st.integers(1, 3))
    vals = [data.draw(st.lists(st.integers(1, K.q - 1), min_size=tau, max_size=tau)) for _ in range(T)]
    S = SyndromeSet(K, _syndromes_of(K, locs, vals, 2 * tau), {})
    sol = geea(S)
    assert sol.satisfies(S)
    expect = Polynomial.one(K)
    for x in locs:
        expect = expect * Polynomial(K, (1, x))
    assert sol.locator == expect


def test_chien_search_returns_labels_of_roots():
    K = field_create(2, 4)
    lam = Polynomial(K, (1, 3)) * Polynomial(K, (1, 5))
    cands = [(j, K.inv(x)) for j, x in enumerate(range(1, 16))]
    assert sorted(chien_search(lam, cands)) == [2, 4]


# -- Algorithm 1 --

def test_alg1_clean_word(code34, ht_witness):
    c = random_codeword(code34, 1)
    rep = decode_alg1(code34, c, ht_witness)
    assert rep.success and rep.decoded == c and rep.tau == 0


def test_alg1_single_burst(code34, ht_witness):
    c = random_codeword(code34, 2)
    e = Polynomial(code34.field, [0] * 10 + [1, 1])
    rep = decode_alg1(code34, c + e, ht_witness)
    assert rep.success and rep.decoded == c
    assert rep.error_positions == [5] and rep.error_values[5] == (1, 1)


def test_alg1_rejects_foreign_witness(code34, bch15, ht_witness):
    with pytest.raises(ValueError):
        decode_alg1(bch15, Polynomial.zero(bch15.field), ht_witness)
    bad = dataclasses.replace(ht_witness, delta=5, value=6)
    with pytest.raises(ValueError):
        decode_alg1(code34, Polynomial.zero(code34.field), bad)


def test_alg1_rejects_wrong_length(code34, ht_witness):
    with pytest.raises(ValueError):
        decode_alg1(code34, Polynomial.monomial(code34.field, 34), ht_witness)


@given(seeds, st.integers(0, 2))
def test_key_equation_congruence(code34, ht_witness, seed, tau):
    rng = np.random.default_rng(seed)
    c = random_codeword(code34, rng)
    r, _ = burst_channel(code34, c, tau, rng)
    S = syndromes_folded(code34, fold(code34, r), ht_witness)
    assert len(S.sequences) == ht_witness.nu + 1 and S.length == ht_witness.delta - 1
    sol = geea(S)
    assert sol.satisfies(S)
    assert sol.tau == tau


@given(seeds, st.integers(0, 2))
def test_locator_matches_ground_truth(code34, ht_witness, seed, tau):
    rng = np.random.default_rng(seed)
    c = random_codeword(code34, rng)
    r, rec = burst_channel(code34, c, tau, rng)
    rep = decode_alg1(code34, r, ht_witness)
    assert rep.success and rep.decoded == c
    assert sorted(rep.error_positions) == list(rec.positions)
    assert [rep.error_values[j] for j in rec.positions] == list(rec.values)


@given(seeds, st.integers(0, 3))
def test_syndromes_do_not_depend_on_the_codeword(code34, ht_witness, seed, tau):
    rng = np.random.default_rng(seed)
    c1, c2 = random_codeword(code34, rng), random_codeword(code34, rng)
    _, rec = burst_channel(code34, c1, tau, rng)
    s1 = syndromes_folded(code34, fold(code34, c1 + rec.error), ht_witness)
    s2 = syndromes_folded(code34, fold(code34, c2 + rec.error), ht_witness)
    s0 = syndromes_folded(code34, fold(code34, rec.error), ht_witness)
    assert s1 == s2 == s0


@given(seeds, st.integers(1, 2))
def test_error_values_agree_across_evaluators(code34, ht_witness, seed, tau):
    rng = np.random.default_rng(seed)
    r, rec = burst_channel(code34, random_codeword(code34, rng), tau, rng)
    S = syndromes_folded(code34, fold(code34, r), ht_witness)
    sol = geea(S)
    per_t = [error_values_folded(code34, sol, rec.positions, ht_witness, t) for t in range(ht_witness.nu + 1)]
    assert all(v == per_t[0] for v in per_t)


def test_alg1_beyond_radius_only_returns_codewords(code34, ht_witness):
    # three bursts exceed the guaranteed radius; the decoder either fails or
    # returns some codeword, and every success passes the re-encode check
    outcomes = {"success": 0, "failure": 0}
    for seed in range(60):
        rng = np.random.default_rng(seed)
        c = random_codeword(code34, rng)
        r, _ = burst_channel(code34, c, 3, rng)
        rep = decode_alg1(code34, r, ht_witness)
        outcomes[rep.outcome] += 1
        if rep.success:
            assert code34.is_codeword(rep.decoded) and rep.decoded != c
    assert outcomes["failure"] > 0


def test_alg1_with_nu_zero_on_bch(bch15):
    w = bound_I_search(bch15)
    c = random_codeword(bch15, 5)
    e = Polynomial(bch15.field, [0, 0, 1, 0, 0, 0, 0, 0, 0, 1])
    rep = decode_alg1(bch15, c + e, w)
    assert rep.success and rep.decoded == c and rep.error_positions == [2, 9]


def test_decoder_report_serializes(code34, ht_witness):
    c = random_codeword(code34, 3)
    rep = decode_alg1(code34, c + Polynomial.monomial(code34.field, 7), ht_witness)
    d = rep.to_dict()
    assert d["outcome"] == "success" and d["error_positions"] == [3]
    assert d["error_values"] == [["0x0", "0x1"]]


# -- Algorithm 2 --

def test_decompose_reassemble(code34):
    r = Polynomial(code34.field, [1, 0, 1, 1, 0, 0, 0, 1])
    parts = decompose(code34, r)
    assert [p.coeffs for p in parts] == [(1, 1), (0, 1, 0, 1)]
    assert reassemble(code34, parts) == r


def test_alg2_clean_word(code34, product_setup):
    B, b, w = product_setup
    c = random_codeword(code34, 11)
    rep = decode_alg2(code34, B, b, c, w)
    assert rep.success and rep.decoded == c


def test_alg2_product_syndromes_vanish_on_codewords(code34, product_setup):
    B, b, w = product_setup
    c = random_codeword(code34, 12)
    S = syndromes_product(code34, B, b, decompose(code34, c), w)
    assert S.is_zero() and len(S.sequences) == 2 and S.length == 9


@given(seeds, st.integers(1, 2))
def test_alg2_within_radius(code34, product_setup, seed, tau):
    B, b, w = product_setup
    rng = np.random.default_rng(seed)
    c = random_codeword(code34, rng)
    r, rec = burst_channel(code34, c, tau, rng)
    rep = decode_alg2(code34, B, b, r, w)
    assert rep.success and rep.decoded == c
    assert sorted(rep.error_positions) == list(rec.positions)
    S = syndromes_product(code34, B, b, decompose(code34, r), w)
    assert rep.solution.satisfies(S)
    assert rep.solution.tau == tau * 2


def test_alg2_tau_max(code34, product_setup):
    B, b, w = product_setup
    rng = np.random.default_rng(99)
    r, _ = burst_channel(code34, random_codeword(code34, rng), 2, rng)
    rep = decode_alg2(code34, B, b, r, w, tau_max=1)
    assert not rep.success and "radius" in rep.reason


def test_alg2_input_checks(code34, product_setup):
    B, b, w = product_setup
    zero = Polynomial.zero(code34.field)
    with pytest.raises(ValueError):
        decode_alg2(code34, B, Polynomial(code34.field, [1]), zero, w)  # not in B
    with pytest.raises(ValueError):
        decode_alg2(code34, B, b, zero, bound_II_search(code34))


def test_single_burst_syndrome_formula(code34, ht_witness):
    w = ht_witness
    e = Polynomial(code34.field, [0] * 12 + [1, 1])  # burst at phase position 6
    S = syndromes_folded(code34, fold(code34, e), w)
    W, basis = code34.folding.field, code34.folding
    g = code34.to_working(code34.phase_root)
    eps = basis.combine((1, 1))
    for t, seq in enumerate(S.sequences):
        assert list(seq) == [W.mul(eps, W.pow(g, (w.f + i * w.m + t) * 6 % 17)) for i in range(w.delta - 1)]


def test_two_bursts_are_located(code34, ht_witness):
    e = [0] * 34
    e[6:8] = [1, 0]
    e[22:24] = [1, 1]
    S = syndromes_folded(code34, fold(code34, Polynomial(code34.field, e)), ht_witness)
    sol = geea(S)
    W, g = code34.folding.field, code34.to_working(code34.phase_root)
    cands = [(j, W.pow(g, -j * ht_witness.m % 17)) for j in range(17)]
    assert sorted(chien_search(sol.locator, cands)) == [3, 11]
    assert sol.tau == 2 and sol.locator.coeff(0) == 1
