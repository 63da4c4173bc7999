import itertools
import math

import numpy as np
import pytest

from cdifflab.charsums import (CharacterContext, c2_condition, char_eval, count_via_characters,
                               epsilon, gauss_sum, rank_mod_p, linearized_bounds, tn_eval,
                               tn_kernel_count, verify_weil_identity, weil_report, weil_sum_do)
from cdifflab.fpoly import LinearizedPoly, eval_linearized
from cdifflab.gf import GF, DomainError


@pytest.mark.parametrize("fp", [(3, 2), (5, 2), (3, 3), (7, 1)])
def test_gauss_sum_modulus(fp):
    F = GF(*fp)
    ctx = CharacterContext(F)
    assert abs(gauss_sum(ctx, 0) + 1) < 1e-9  # trivial multiplicative character
    for k in range(1, F.q - 1):
        assert abs(abs(gauss_sum(ctx, k)) - math.sqrt(F.q)) < 1e-9


def test_quadratic_gauss_sum_prime_field():
    # classical value over F_p: sqrt(p) for p = 1 mod 4, i sqrt(p) for p = 3 mod 4
    for p in (5, 13):
        g = gauss_sum(CharacterContext(GF(p, 1)), (p - 1) // 2)
        assert abs(g - math.sqrt(p)) < 1e-9
    for p in (3, 7, 11):
        g = gauss_sum(CharacterContext(GF(p, 1)), (p - 1) // 2)
        assert abs(g - 1j * math.sqrt(p)) < 1e-9


def test_additive_orthogonality():
    F = GF(3, 3)
    ctx = CharacterContext(F)
    xs = F.elements()
    for alpha in range(1, F.q):
        assert abs(ctx.additive(F.mul(alpha, xs)).sum()) < 1e-9
    assert abs(ctx.additive(xs).sum()) < 1e-9
    assert ctx.additive(0) == 1


def test_multiplicative_characters():
    F = GF(5, 2)
    ctx = CharacterContext(F)
    with pytest.raises(DomainError):
        ctx.multiplicative(1, 0)
    xs = np.arange(1, F.q)
    for k in range(1, F.q - 1):
        assert abs(ctx.multiplicative(k, xs).sum()) < 1e-9
    x, y = 7, 13
    assert abs(ctx.multiplicative(3, F.mul(x, y)) - ctx.multiplicative(3, x) * ctx.multiplicative(3, y)) < 1e-12
    with pytest.raises(ValueError):
        char_eval(ctx, "bogus", 1)


def test_counting_identity():
    F = GF(3, 2)
    ctx = CharacterContext(F)
    rng = np.random.default_rng(2)
    f = rng.integers(0, F.q, F.q)
    for b in range(F.q):
        assert round(count_via_characters(ctx, f, b)) == int((f == b).sum())
        assert abs(count_via_characters(ctx, f, b) - (f == b).sum()) < 1e-9


@pytest.mark.parametrize("fp", [(3, 2), (3, 3), (5, 2), (3, 4)])
def test_weil_identity_random(fp):
    F = GF(*fp)
    rng = np.random.default_rng(sum(fp))
    for _ in range(8):
        res = verify_weil_identity(LinearizedPoly.random(F, rng))
        assert res.passed, res.max_rel_error


def test_weil_identity_structured():
    F = GF(3, 3)
    for L in (LinearizedPoly.monomial(F, 0), LinearizedPoly.monomial(F, 2, 5), LinearizedPoly.zero(F)):
        assert verify_weil_identity(L).passed
    res = verify_weil_identity(LinearizedPoly.zero(F))
    assert all(r.N_alpha == F.q for r in res.reports)


def test_printed_kernel_equation_is_not_the_radical():
    # derived: the coefficient pattern as printed disagrees with |S|^2 = q N for
    # multi-term L once n >= 3, while single-term L and the polarization agree
    F = GF(3, 3)
    L = LinearizedPoly(F, (1, 1, 0))
    assert not verify_weil_identity(L, "restated").passed
    assert verify_weil_identity(L, "radical").passed
    assert verify_weil_identity(LinearizedPoly.monomial(F, 1, 2), "restated").passed


def test_kernel_rank_matches_exhaustive():
    F = GF(3, 3)
    rng = np.random.default_rng(9)
    for _ in range(5):
        L = LinearizedPoly.random(F, rng)
        for alpha in (1, 5, 17):
            assert tn_kernel_count(L, alpha)[0] == tn_kernel_count(L, alpha, exhaustive=True)[0]


def test_tn_is_linear():
    F = GF(5, 2)
    L = LinearizedPoly(F, (3, 7))
    xs = F.elements()
    for y in (1, 6, 24):
        assert np.array_equal(tn_eval(L, 4, F.add(xs, y)), F.add(tn_eval(L, 4, xs), tn_eval(L, 4, y)))
    with pytest.raises(ValueError):
        tn_eval(L, 1, 1, "bogus")


def test_rank_mod_p():
    assert rank_mod_p(np.eye(3, dtype=int), 3) == 3
    assert rank_mod_p([[1, 2], [2, 4]], 5) == 1
    assert rank_mod_p([[1, 1], [1, 2]], 2) == 2


def test_weil_report_sign():
    F = GF(3, 2)
    r = weil_report(CharacterContext(F), LinearizedPoly.monomial(F, 0), 1)
    assert r.mu_alpha in (1, -1)
    assert abs(abs(r.S_alpha) ** 2 - F.q * r.N_alpha) < 1e-9
    assert set(r.to_dict()["S_alpha"]) == {"re", "im"}


def test_c2_and_epsilon():
    F = GF(3, 4)
    ok, parts = c2_condition(LinearizedPoly.monomial(F, 2))
    assert ok and all(parts.values())
    assert not c2_condition(LinearizedPoly.monomial(F, 1))[0]
    assert epsilon(LinearizedPoly(F, (0, 1, 0, 1))) == 2


def test_linearized_bounds_frobenius_square_on_f81():
    # derived: L = x^9 over GF(3^4)
    F = GF(3, 4)
    res = linearized_bounds(LinearizedPoly.monomial(F, 2), threads=1)
    assert res.c2_satisfied and res.N == 81 and res.upper == (3 * 81) ** 2
    assert abs(res.lower - 10) < 1e-9 and abs(res.lower_imag) < 1e-9
    assert res.b0_count == 10 and res.observed == 11
    assert res.lower <= res.observed <= res.upper


def test_linearized_bounds_identity_on_f81():
    F = GF(3, 4)
    res = linearized_bounds(LinearizedPoly.monomial(F, 0), threads=1)
    assert (res.N, res.upper, res.observed) == (1, 9.0, 5)


def test_linearized_bounds_zero_L_is_degenerate():
    res = linearized_bounds(LinearizedPoly.zero(GF(3, 2)), threads=1)
    assert res.degenerate and res.N == 9


def test_upper_bound_small_n_counterexamples():
    # derived, outside the n >= 4 hypothesis: over GF(9) exactly L = a x with
    # a in {1, 2, 3, 6} exceed (pN)^(n/2)
    F = GF(3, 2)
    bad = []
    for a in itertools.product(range(F.q), repeat=2):
        res = linearized_bounds(LinearizedPoly(F, a), threads=1)
        if res.observed > res.upper:
            bad.append(a)
    assert bad == [(1, 0), (2, 0), (3, 0), (6, 0)]


def test_char2_rejected():
    with pytest.raises(ValueError):
        linearized_bounds(LinearizedPoly.monomial(GF(2, 4), 1))
    with pytest.raises(ValueError):
        verify_weil_identity(LinearizedPoly.monomial(GF(2, 4), 1))


def test_weil_sum_direct():
    F = GF(3, 2)
    ctx = CharacterContext(F)
    L = LinearizedPoly(F, (2, 5))
    xs = F.elements()
    direct = sum(np.exp(2j * np.pi * F.trace(F.mul(3, F.mul(int(x), eval_linearized(L, int(x))))) / 3) for x in xs)
    assert abs(weil_sum_do(ctx, L, 3) - direct) < 1e-9
