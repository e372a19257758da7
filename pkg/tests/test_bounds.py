import dataclasses

import pytest
from hypothesis import given, strategies as st

from rrcodes.bounds import (
    AssociatedCode,
    ProductCode,
    bezout_pair,
    bound_I_search,
    bound_II_optima,
    bound_II_search,
    bound_III_search,
    parity_code,
    product_defining_set,
    product_generator,
    product_witness,
    repetition_code,
    standard_candidates,
    trivial_code,
    verify_witness,
    zero_run,
)
from rrcodes.code import DefiningSet, code_from_defining_set
from rrcodes.field import field_create

# 33 indices of the product of the [34,18] code with the [3,2,2] parity code
PRODUCT_INDICES = [0, 1, 2, 3, 4, 6, 8, 9, 12, 13, 15, 16, 18, 19, 21, 24, 25, 26, 27,
                   30, 32, 33, 35, 36, 38, 39, 42, 43, 45, 47, 48, 49, 50]


def test_zero_run_examples(code34):
    D = code34.defining_set
    assert zero_run(D, 1, 7, 2) == 3  # 1, 8, 15
    assert zero_run(D, 1, 1, 2) == 2  # 1, 2
    assert zero_run(D, 0, 1, 2) == 0
    assert zero_run(D, 1, 7, 3) == 0


def test_zero_run_on_a_full_set_is_capped():
    D = DefiningSet.uniform(5, range(5), 1)
    assert zero_run(D, 0, 1, 1) == 5


def test_bound_I_of_the_34_18_code(code34):
    w = bound_I_search(code34)
    assert (w.family, w.value, w.delta, w.nu) == ("I", 4, 4, 0)
    assert verify_witness(code34, w)


def test_bound_II_of_the_34_18_code(code34):
    w = bound_II_search(code34)
    assert w.value == 5
    assert (w.f, w.m, w.delta, w.nu) == (1, 7, 4, 1)
    assert verify_witness(code34, w)
    optima = {(o.f, o.m, o.delta, o.nu) for o in bound_II_optima(code34)}
    assert (1, 7, 4, 1) in optima
    assert all(verify_witness(code34, o) for o in bound_II_optima(code34))


def test_bound_II_with_nu_zero_equals_bound_I(code34, bch15):
    for C in (code34, bch15):
        assert bound_II_search(C, nu_max=0).value == bound_I_search(C).value


def test_bch_bound(bch15):
    assert bound_I_search(bch15).value == 5


def test_bounds_of_a_code_without_full_zeros(gf2):
    C = code_from_defining_set(gf2, 7, 1, DefiningSet.uniform(7, [1, 2, 4], 1))
    assert bound_I_search(C).value == 1
    assert bound_I_search(C).f is None
    assert verify_witness(C, bound_I_search(C))


def test_verify_witness_rejects_perturbations(code34):
    w = bound_II_search(code34)
    assert not verify_witness(code34, dataclasses.replace(w, delta=5, value=6))
    assert not verify_witness(code34, dataclasses.replace(w, value=6))
    assert not verify_witness(code34, dataclasses.replace(w, m=17))
    assert not verify_witness(code34, dataclasses.replace(w, family="I"))


def test_bezout_pairs():
    assert bezout_pair(34, 3) == (1, -11)
    assert bezout_pair(17, 3) == (2, -11)
    assert bezout_pair(5, 1) == (0, 1)
    for na, nb in [(34, 3), (15, 7), (9, 4), (2, 5)]:
        a, b = bezout_pair(na, nb)
        assert a * na + b * nb == 1
    with pytest.raises(ValueError):
        bezout_pair(6, 4)


def test_product_defining_set_with_the_parity_code(code34, parity3):
    P = product_defining_set(code34, parity3.code)
    assert P.modulus == 51
    assert P == DefiningSet.uniform(51, PRODUCT_INDICES, 2)
    assert len(P) == 33 and P.total() == 66


def test_product_generator_with_the_parity_code(code34, parity3):
    pc = ProductCode(code34, parity3.code)
    assert pc.generator.degree == 66
    assert pc.dimension == 36
    assert pc.n == 102 and pc.n - pc.generator.degree == pc.dimension
    assert pc.root_profile() == DefiningSet.uniform(51, PRODUCT_INDICES, 2)
    assert product_generator(code34, parity3.code) == pc.generator


def test_product_generator_simple_root(gf2, bch15):
    # product of the [15,7] BCH code and the [7,1,7] repetition code
    rep = repetition_code(gf2, 7)
    assert rep.code.k == 1
    pc = ProductCode(bch15, rep.code)
    assert pc.generator.degree == pc.n - 7
    assert pc.root_profile() == product_defining_set(bch15, rep.code)


def test_bound_III_with_the_parity_code(code34, parity3):
    w = bound_III_search(code34, [parity3])
    assert (w.delta, w.value, w.d_b) == (10, 5, 2)
    assert verify_witness(code34, w)


def test_product_witness_at_47(code34, parity3):
    w = product_witness(code34, parity3, 47, 1)
    assert (w.f_a, w.f_b, w.m_a, w.m_b) == (13, 2, 1, 1)
    assert (w.delta, w.value) == (10, 5)
    assert verify_witness(code34, w)
    with pytest.raises(ValueError):
        product_witness(code34, parity3, 47, 1, delta=11)


def test_bound_III_rounds_up(gf2):
    # run of 2 full zeros, d_b = 2: ceil(3 / 2) = 2
    A = code_from_defining_set(gf2, 7, 1, DefiningSet.uniform(7, [1, 2, 4], 2))
    w = bound_III_search(A, [parity_code(gf2, 3)])
    assert w.value == -(-w.delta // 2)
    assert verify_witness(A, w)


def test_bound_III_with_trivial_associate_collapses_to_bound_I(code34, bch15):
    for C in (code34, bch15):
        w = bound_III_search(C, [trivial_code(C.field)])
        assert w.value == bound_I_search(C).value


def test_bound_III_requires_candidates(code34):
    with pytest.raises(ValueError):
        bound_III_search(code34, [])


def test_associated_code_must_be_simple_root(code34):
    with pytest.raises(ValueError):
        AssociatedCode(code34, 5)


def test_product_requires_coprime_lengths(code34, gf2):
    with pytest.raises(ValueError):
        product_defining_set(code34, parity_code(gf2, 17).code)


def test_standard_candidates_are_coprime(code34):
    cands = standard_candidates(code34)
    assert cands and all(c.code.n % 2 and c.code.n % 17 for c in cands)
    names = [c.name for c in cands]
    assert "parity[3,2,2]" in names and "repetition[3,1,3]" in names


small_codes = st.sampled_from([
    (2, 7, 1, [1, 2, 4], 2),
    (2, 7, 1, [0, 3, 5, 6], 2),
    (2, 15, 1, [1, 2, 4, 8, 3, 6, 12, 9], 2),
    (3, 4, 1, [1, 3], 3),
    (3, 8, 1, [1, 3, 2, 6], 3),
    (2, 5, 2, [1, 2, 3, 4], 4),
])


@given(small_codes)
def test_bounds_are_ordered(spec):
    p, n, s, idx, mult = spec
    C = code_from_defining_set(field_create(p, 1), n, s, DefiningSet.uniform(n, idx, mult))
    d1, d2 = bound_I_search(C), bound_II_search(C)
    assert d1.value <= d2.value
    assert verify_witness(C, d1) and verify_witness(C, d2)
    w3 = bound_III_search(C, standard_candidates(C, max_nb=5) + [trivial_code(C.field)])
    assert w3.value >= d1.value
    assert verify_witness(C, w3)
