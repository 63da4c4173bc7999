"""Univariate and linearized polynomials over GF(p^n)."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .gf import DomainError, FieldSpec


@dataclass(frozen=True)
class UniPoly:
    """Sparse polynomial ``sum c_e x^e`` with exponents reduced below q."""

    field: FieldSpec
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            e, c = int(e), int(c)
            if not 0 <= e < self.field.q:
                raise ValueError(f"exponent {e} outside [0, q)")
            if not 0 <= c < self.field.q:
                raise ValueError(f"coefficient {c} is not a field element")
            if c:
                clean[e] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def monomial(cls, F: FieldSpec, e: int, c: int = 1) -> "UniPoly":
        # x^e and x^(e mod (q-1)) agree on F* but not at 0 when e is a positive multiple
        if e >= F.q:
            e = (e - 1) % (F.q - 1) + 1
        return cls(F, {e: c})

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if other.field != self.field:
            raise ValueError("polynomials over different fields")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = self.field.add(out.get(e, 0), c)
        return UniPoly(self.field, out)

    @property
    def degree(self) -> int:
        return max(self.terms, default=-1)

    def __call__(self, x):
        return eval_poly(self, x)

    def to_json(self) -> str:
        return json.dumps({"terms": [{"e": e, "c": c} for e, c in self.terms.items()]})

    @classmethod
    def from_json(cls, F: FieldSpec, text: str) -> "UniPoly":
        d = json.loads(text)
        return cls(F, {int(t["e"]): int(t["c"]) for t in d["terms"]})


def eval_poly(P: UniPoly, x):
    """Evaluate P at a scalar or an array of points (0^0 = 1)."""
    F = P.field
    xs = np.asarray(x, dtype=np.int64)
    acc = np.zeros(xs.shape, dtype=np.int64)
    for e, c in P.terms.items():
        acc = F.add(acc, F.mul(c, F.pow(xs, e)))
    return int(acc) if np.ndim(x) == 0 else acc


def tabulate(P: UniPoly) -> np.ndarray:
    return eval_poly(P, P.field.elements())


def interpolate_table(F: FieldSpec, table) -> UniPoly:
    """Reduced polynomial of degree < q agreeing with ``table`` everywhere.

    Lagrange over the full field: with the basis 1 - (x - a)^(q-1),
    c_0 = T(0), c_k = -sum_{a != 0} T(a) a^(-k) for 0 < k < q-1 and
    c_{q-1} = -sum_a T(a).
    """
    T = np.asarray(table, dtype=np.int64)
    if T.shape != (F.q,):
        raise ValueError(f"table must have exactly {F.q} entries, got {T.size}")
    F._check(T)
    q = F.q
    nz = np.arange(1, q)
    logs = F.log[nz]
    vals = T[1:]
    nzv = vals != 0
    lv = F.log[np.where(nzv, vals, 1)]
    terms = {0: int(T[0])}
    # products T(a) * a^(-k) for all k at once, through logs
    k = np.arange(1, q - 1)[:, None]
    prod = np.where(nzv[None, :], F.exp[(lv[None, :] - k * logs[None, :]) % (q - 1)], 0)
    for i, row in enumerate(prod):
        c = F.neg(F.sum(row))
        if c:
            terms[i + 1] = c
    top = F.neg(F.sum(T))
    if top:
        terms[q - 1] = top
    return UniPoly(F, terms)


def digit_sum(e: int, p: int) -> int:
    s = 0
    while e:
        e, r = divmod(e, p)
        s += r
    return s


def algebraic_degree(P: UniPoly) -> int:
    """Largest base-p digit sum over exponents with nonzero coefficient."""
    return max((digit_sum(e, P.field.p) for e in P.terms), default=0)


@dataclass(frozen=True)
class LinearizedPoly:
    """L(x) = sum_{i<n} a_i x^(p^i)."""

    field: FieldSpec
    a: tuple

    def __post_init__(self):
        a = tuple(int(v) for v in self.a)
        if len(a) != self.field.n:
            raise ValueError(f"need exactly n = {self.field.n} coefficients")
        self.field._check(np.array(a))
        object.__setattr__(self, "a", a)

    @classmethod
    def monomial(cls, F: FieldSpec, i: int, coeff: int = 1) -> "LinearizedPoly":
        a = [0] * F.n
        a[i % F.n] = coeff
        return cls(F, tuple(a))

    @classmethod
    def zero(cls, F: FieldSpec) -> "LinearizedPoly":
        return cls(F, (0,) * F.n)

    @classmethod
    def random(cls, F: FieldSpec, rng: np.random.Generator) -> "LinearizedPoly":
        return cls(F, tuple(int(v) for v in rng.integers(0, F.q, F.n)))

    def is_zero(self) -> bool:
        return not any(self.a)

    def __call__(self, x):
        return eval_linearized(self, x)

    def as_unipoly(self) -> UniPoly:
        F = self.field
        return UniPoly(F, {F.p ** i: c for i, c in enumerate(self.a) if c})

    def to_json(self) -> str:
        return json.dumps({"a": list(self.a)})

    @classmethod
    def from_json(cls, F: FieldSpec, text: str) -> "LinearizedPoly":
        return cls(F, tuple(json.loads(text)["a"]))


def eval_linearized(L: LinearizedPoly, x):
    F = L.field
    xs = np.asarray(x, dtype=np.int64)
    acc = np.zeros(xs.shape, dtype=np.int64)
    for i, c in enumerate(L.a):
        if c:
            acc = F.add(acc, F.mul(c, F.frobenius(xs, i)))
    return int(acc) if np.ndim(x) == 0 else acc


def linearized_support(L: LinearizedPoly) -> tuple[list[int], int]:
    """Nonzero coefficient indices and delta = gcd(indices, n) (0 contributes nothing)."""
    if L.is_zero():
        raise DomainError("the zero linearized polynomial has no support")
    support = [i for i, c in enumerate(L.a) if c]
    return support, math.gcd(*support, L.field.n)


def support_gcd_without_n(L: LinearizedPoly) -> int:
    """gcd of the support indices alone (0 when the support is {0})."""
    support, _ = linearized_support(L)
    return math.gcd(*support)
