import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cdifflab.fpoly import (LinearizedPoly, UniPoly, algebraic_degree, digit_sum, eval_linearized,
                            eval_poly, interpolate_table, linearized_support,
                            support_gcd_without_n, tabulate)
from cdifflab.gf import GF, DomainError
from cdifflab.sboxcorpus import builtin

SMALL = [(2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 1)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_interpolation_roundtrip(fp, data):
    F = GF(*fp)
    table = data.draw(st.lists(st.integers(0, F.q - 1), min_size=F.q, max_size=F.q))
    P = interpolate_table(F, table)
    assert tabulate(P).tolist() == table
    assert P.degree < F.q


def test_interpolation_of_monomials():
    F = GF(3, 3)
    for e in (1, 2, 5, F.q - 2, F.q - 1):
        P = interpolate_table(F, F.pow(F.elements(), e))
        assert P.terms == {e: 1}


def test_aes_sbox_polynomial():
    # the well-known sparse form of the AES S-box over x^8 + x^4 + x^3 + x + 1
    S = builtin("AES")
    P = interpolate_table(GF(2, 8), S.table)
    assert P.terms == {0: 0x63, 127: 0x8F, 191: 0xB5, 223: 0x01, 239: 0xF4,
                       247: 0x25, 251: 0xF9, 253: 0x09, 254: 0x05}
    assert algebraic_degree(P) == 7


def test_interpolation_wrong_length():
    with pytest.raises(ValueError):
        interpolate_table(GF(2, 4), list(range(15)))
    with pytest.raises(ValueError):
        interpolate_table(GF(2, 4), [16] + list(range(15)))


def test_monomial_reduction_keeps_zero():
    F = GF(2, 4)
    P = UniPoly.monomial(F, 30)  # x^30 = x^15 on F*, and 0 at 0
    assert P.terms == {15: 1}
    assert eval_poly(P, 0) == 0
    xs = F.elements()
    assert np.array_equal(eval_poly(P, xs), F.pow(xs, 30))


def test_unipoly_validation_and_json():
    F = GF(3, 2)
    with pytest.raises(ValueError):
        UniPoly(F, {9: 1})
    with pytest.raises(ValueError):
        UniPoly(F, {1: 9})
    P = UniPoly(F, {0: 2, 4: 5, 3: 0})
    assert P.terms == {0: 2, 4: 5}
    assert UniPoly.from_json(F, P.to_json()).terms == P.terms
    assert (P + P).terms == {0: 1, 4: F.add(5, 5)}


def test_digit_sum():
    assert digit_sum(254, 2) == 7
    assert digit_sum(0, 3) == 0
    assert digit_sum(80, 3) == 8  # 2222 in base 3


def test_linearized_matches_unipoly():
    F = GF(3, 3)
    rng = np.random.default_rng(3)
    for _ in range(10):
        L = LinearizedPoly.random(F, rng)
        xs = F.elements()
        assert np.array_equal(eval_linearized(L, xs), eval_poly(L.as_unipoly(), xs))
        # F_p-linearity
        y = int(rng.integers(0, F.q))
        assert np.array_equal(L(F.add(xs, y)), F.add(L(xs), L(y)))
        assert LinearizedPoly.from_json(F, L.to_json()) == L


def test_linearized_validation():
    F = GF(2, 4)
    with pytest.raises(ValueError):
        LinearizedPoly(F, (1, 0, 0))
    with pytest.raises(ValueError):
        LinearizedPoly(F, (16, 0, 0, 0))
    assert json.loads(LinearizedPoly.monomial(F, 5).to_json())["a"] == [0, 1, 0, 0]


def test_linearized_support():
    F = GF(3, 4)
    L = LinearizedPoly(F, (0, 0, 1, 0))
    assert linearized_support(L) == ([2], 2)
    assert support_gcd_without_n(L) == 2
    L0 = LinearizedPoly(F, (1, 0, 0, 0))
    assert linearized_support(L0) == ([0], 4)  # gcd(0, n) = n
    assert support_gcd_without_n(L0) == 0
    with pytest.raises(DomainError):
        linearized_support(LinearizedPoly.zero(F))


def test_adding_x_changes_only_the_linear_term():
    F = GF(2, 8)
    S = np.array(builtin("AES").table)
    P = interpolate_table(F, S)
    Q = interpolate_table(F, F.add(S, F.elements()))
    diff = {e for e in set(P.terms) | set(Q.terms) if P.terms.get(e) != Q.terms.get(e)}
    assert diff == {1}
