"""Additive/multiplicative characters, Gauss sums and Weil sums of x L(x).

Everything here is double-precision complex arithmetic over fields of odd
characteristic small enough to enumerate.  Sums are accumulated in
ascending element order so results are reproducible bit for bit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cdiff import FunctionTable, cdu_spectrum
from .fpoly import LinearizedPoly, eval_linearized, linearized_support
from .gf import DomainError, FieldSpec

KAHAN_THRESHOLD = 10_000


def _csum(z: np.ndarray) -> complex:
    z = np.asarray(z, dtype=complex).ravel()
    if z.size > KAHAN_THRESHOLD:
        return complex(math.fsum(z.real), math.fsum(z.imag))
    return complex(z.sum())


class CharacterContext:
    """Cached roots of unity for the canonical additive character and the
    multiplicative characters of one field."""

    def __init__(self, F: FieldSpec):
        self.field = F
        self.add_roots = np.exp(2j * np.pi * np.arange(F.p) / F.p)
        self.mul_roots = np.exp(2j * np.pi * np.arange(F.q - 1) / (F.q - 1))

    def additive(self, x):
        """chi_1(x) = exp(2 pi i Tr(x) / p)."""
        r = self.add_roots[self.field.trace(np.asarray(x, dtype=np.int64))]
        return complex(r) if np.ndim(x) == 0 else r

    def multiplicative(self, k: int, x):
        """psi_k(g^l) = exp(2 pi i k l / (q - 1)); undefined at 0."""
        xs = np.asarray(x, dtype=np.int64)
        if (xs == 0).any():
            raise DomainError("multiplicative characters are not evaluated at 0")
        r = self.mul_roots[(k * self.field.log[xs]) % (self.field.q - 1)]
        return complex(r) if np.ndim(x) == 0 else r


def char_eval(ctx: CharacterContext, kind: str, x, k: int = 0):
    if kind == "additive":
        return ctx.additive(x)
    if kind == "multiplicative":
        return ctx.multiplicative(k, x)
    raise ValueError(f"unknown character kind {kind!r}")


def gauss_sum(ctx: CharacterContext, k: int) -> complex:
    """G(psi_k, chi_1) = sum over nonzero z of psi_k(z) chi_1(z)."""
    F = ctx.field
    if not 0 <= k <= F.q - 2:
        raise ValueError("k must lie in [0, q-2]")
    z = np.arange(1, F.q, dtype=np.int64)
    return _csum(ctx.multiplicative(k, z) * ctx.additive(z))


def weil_sum_do(ctx: CharacterContext, L: LinearizedPoly, alpha: int) -> complex:
    """S_alpha = sum_x chi_1(alpha x L(x))."""
    F = ctx.field
    xs = F.elements()
    vals = F.mul(alpha, F.mul(xs, eval_linearized(L, xs)))
    return _csum(ctx.additive(vals))


def count_via_characters(ctx: CharacterContext, fvals: np.ndarray, target: int) -> float:
    """(1/q) sum_alpha sum_x chi_1(alpha (f(x) - target)) for a tabulated f."""
    F = ctx.field
    u = F.sub(np.asarray(fvals, dtype=np.int64), target)
    total = 0j
    for alpha in range(F.q):
        total += _csum(ctx.additive(F.mul(alpha, u)))
    return (total / F.q).real


# ---------------------------------------------------------------------------
# the linear map whose kernel controls |S_alpha|

def tn_eval(L: LinearizedPoly, alpha: int, w, variant: str = "radical"):
    """T_n(w) for the DO polynomial alpha x L(x).

    ``restated``: 2 A_0 w + sum_{i>=1} (A_i w^(p^i) + (A_i w)^(p^(n-i))) with
    A_i = (alpha a_i)^(p^(n-i)); negative Frobenius powers in the printed
    form coincide with this one once read modulo n.
    ``radical``: the polarization of Tr(alpha x L(x)),
    sum_i (alpha a_i w^(p^i) + (alpha a_i w)^(p^(n-i))), whose kernel is the
    radical of the quadratic form.
    """
    F = L.field
    n = F.n
    ws = np.asarray(w, dtype=np.int64)
    acc = np.zeros(ws.shape, dtype=np.int64)
    for i, ai in enumerate(L.a):
        if not ai:
            continue
        c = F.mul(alpha, ai)
        if variant == "restated":
            A = F.frobenius(c, (n - i) % n)
            t1 = F.mul(A, F.frobenius(ws, i))
            t2 = F.frobenius(F.mul(A, ws), (n - i) % n)
        elif variant == "radical":
            t1 = F.mul(c, F.frobenius(ws, i))
            t2 = F.frobenius(F.mul(c, ws), (n - i) % n)
        else:
            raise ValueError(f"unknown T_n variant {variant!r}")
        acc = F.add(acc, F.add(t1, t2))
    return int(acc) if np.ndim(w) == 0 else acc


def rank_mod_p(M: np.ndarray, p: int) -> int:
    M = np.array(M, dtype=np.int64) % p
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i, c]), None)
        if piv is None:
            continue
        M[[r, piv]] = M[[piv, r]]
        M[r] = (M[r] * pow(int(M[r, c]), p - 2, p)) % p
        for i in range(rows):
            if i != r and M[i, c]:
                M[i] = (M[i] - M[i, c] * M[r]) % p
        r += 1
        if r == rows:
            break
    return r


def tn_kernel_count(L: LinearizedPoly, alpha: int, variant: str = "radical",
                    exhaustive: bool = False) -> tuple[int, int | None]:
    """(N_alpha, gamma_alpha) with N_alpha = #{w : T_n(w) = 0}.

    T_n is F_p-linear, so N_alpha = p^(n - rank); ``exhaustive`` counts
    zeros over the whole field instead.  gamma_alpha is reported when
    N_alpha is a power of p^delta, otherwise None.
    """
    F = L.field
    if exhaustive:
        N = int(np.count_nonzero(tn_eval(L, alpha, F.elements(), variant) == 0))
    else:
        basis = F.p ** np.arange(F.n, dtype=np.int64)
        images = tn_eval(L, alpha, basis, variant)
        M = F.digits[images]  # row j: coordinates of T_n(basis_j)
        N = F.p ** (F.n - rank_mod_p(M, F.p))
    return N, _gamma(L, N)


def _gamma(L: LinearizedPoly, N: int) -> int | None:
    if L.is_zero():
        return None
    _, delta = linearized_support(L)
    e = round(math.log(N, L.field.p))
    if L.field.p ** e != N or e % delta:
        return None
    return e // delta


@dataclass
class WeilReport:
    alpha: int
    S_alpha: complex
    N_alpha: int
    gamma_alpha: int | None
    mu_alpha: int | None

    def to_dict(self) -> dict:
        return {"alpha": self.alpha, "S_alpha": {"re": self.S_alpha.real, "im": self.S_alpha.imag},
                "N_alpha": self.N_alpha, "gamma_alpha": self.gamma_alpha, "mu_alpha": self.mu_alpha}


def weil_report(ctx: CharacterContext, L: LinearizedPoly, alpha: int,
                variant: str = "radical") -> WeilReport:
    S = weil_sum_do(ctx, L, alpha)
    N, g = tn_kernel_count(L, alpha, variant)
    mu = None
    if abs(S.imag) <= 1e-6 * max(1.0, abs(S)) and abs(S.real) > 0.5:
        mu = 1 if S.real > 0 else -1
    return WeilReport(alpha, S, N, g, mu)


@dataclass
class WeilIdentityCheck:
    reports: list
    failures: list = field(default_factory=list)
    max_rel_error: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_weil_identity(L: LinearizedPoly, variant: str = "radical",
                         tol: float = 1e-6) -> WeilIdentityCheck:
    """| |S_alpha|^2 - q N_alpha | <= tol q N_alpha for every alpha != 0."""
    F = L.field
    if F.p == 2:
        raise ValueError("the Weil-sum identity is checked for odd characteristic")
    ctx = CharacterContext(F)
    out = WeilIdentityCheck([])
    for alpha in range(1, F.q):
        rep = weil_report(ctx, L, alpha, variant)
        out.reports.append(rep)
        target = F.q * rep.N_alpha
        err = abs(abs(rep.S_alpha) ** 2 - target) / target
        out.max_rel_error = max(out.max_rel_error, err)
        if err > tol:
            out.failures.append(alpha)
    return out


# ---------------------------------------------------------------------------
# bounds for x^(q-2) + L(x)

def c2_condition(L: LinearizedPoly) -> tuple[bool, dict]:
    """Literal evaluation of the technical condition for the lower bound."""
    F = L.field
    p, n = F.p, F.n
    support, delta = linearized_support(L)
    parts = {
        "n_even": n % 2 == 0,
        "n_over_delta_even": (n // delta) % 2 == 0,
        "pairwise_2delta": all((si - sj) % (2 * delta) == 0 for si in support for sj in support),
        "p_delta_plus_1_gt_4": p ** delta + 1 > 4,
        "divides_all": all((p ** s + 1) % (p ** delta + 1) == 0 for s in support),
    }
    return all(parts.values()), parts


def epsilon(L: LinearizedPoly) -> int:
    support, _ = linearized_support(L)
    n = L.field.n
    s0, rest = support[0], support[1:]
    vals = [2 * s0, n]
    for si in rest:
        vals += [s0 + si, s0 + n - si]
    return math.gcd(*vals)


@dataclass
class LinearizedBoundsResult:
    upper: float
    upper_sqrt_qN: float
    N: int
    delta: int | None
    delta_without_n: int | None
    epsilon: int | None
    c2_satisfied: bool
    c2_parts: dict
    lower: float | None
    lower_imag: float | None
    b0_count: int
    observed: int | None
    degenerate: bool = False

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def linearized_bounds(L: LinearizedPoly, variant: str = "radical", observe: bool = True,
                 threads: int | None = None) -> LinearizedBoundsResult:
    """Upper bound (pN)^(n/2), the signed lower-bound sum when the technical
    condition holds, and (optionally) the brute-force uniformity of
    x^(q-2) + L(x) over c != 1."""
    F = L.field
    p, n, q = F.p, F.n, F.q
    if p == 2:
        raise ValueError("bounds are stated for odd characteristic")
    ctx = CharacterContext(F)
    xs = F.elements()
    # #{x : x L(x) = -1}, the a = b = 0 solutions besides x = 0
    b0 = int(np.count_nonzero(F.mul(xs, eval_linearized(L, xs)) == F.neg(1)))
    observed = None
    if observe:
        G = FunctionTable.inverse(F) + L
        observed = cdu_spectrum(G, "exclude-1", threads).max_c_ne_1
    if L.is_zero():
        return LinearizedBoundsResult((p * q) ** (n / 2), float(q), q, None, None, None, False, {},
                           None, None, b0, observed, degenerate=True)
    _, delta = linearized_support(L)
    d0 = math.gcd(*[i for i, c in enumerate(L.a) if c])
    Ns = {alpha: tn_kernel_count(L, alpha, variant) for alpha in range(1, q)}
    N = max(v[0] for v in Ns.values())
    upper = (p * N) ** (n / 2)
    ok, parts = c2_condition(L)
    lower = lower_im = None
    if ok:
        m = n // 2
        total = 1.0 + 0j  # alpha = 0 contributes chi_1(0) S_0 / q = 1
        sign = (-1) ** (m // delta)
        for alpha in range(1, q):
            Na, g = Ns[alpha]
            chi = ctx.additive(alpha)
            if Na == 1:
                total += sign * chi / p ** m
            else:
                g = g if g is not None else round(math.log(Na, p)) / delta
                total += sign * chi * (-1) ** (g / 2) * p ** (delta * g / 2) / p ** m
        lower, lower_im = total.real, total.imag
    return LinearizedBoundsResult(float(upper), math.sqrt(q * N), N, delta, d0, epsilon(L), ok, parts,
                       lower, lower_im, b0, observed)


# name used by the operation catalogue
thm41_bounds = linearized_bounds
