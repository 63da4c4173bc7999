"""Table-driven arithmetic in GF(p^n) for desk-scale fields (q <= 2^16).

Elements are plain integers whose base-p digits are the polynomial-basis
coordinates, least significant digit = constant term.  Every arithmetic
method of :class:`FieldSpec` accepts either Python ints or integer numpy
arrays; scalar inputs give ``int`` results, array inputs give arrays.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_ORDER = 1 << 16
# odd fields up to this order get a full addition table (int32, <= ~19 MB)
ADD_TABLE_LIMIT = 2187

AES_MODULUS = (1, 1, 0, 1, 1, 0, 0, 0, 1)  # x^8 + x^4 + x^3 + x + 1


class FieldMismatchError(ValueError):
    """Operands belong to different fields."""


class DomainError(ValueError):
    """Input outside the domain of the operation (e.g. inverting zero)."""


class DegenerateInputError(ValueError):
    """Coefficients make the equation degenerate (caller handles that case)."""


def prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def is_prime(m: int) -> bool:
    return m >= 2 and prime_factors(m) == [m]


# ---------------------------------------------------------------------------
# dense polynomials over F_p, coefficient lists low -> high

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = _trim(a)
    m = _trim(m)
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        f = a[-1] * inv_lead % p
        s = len(a) - len(m)
        for i, c in enumerate(m):
            a[s + i] = (a[s + i] - f * c) % p
        a = _trim(a)
    return a


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, m, p)


def _ppowmod(a, e, m, p):
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return _pmod(result, m, p)


def _pgcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(modulus, p: int) -> bool:
    """Rabin's test for a monic polynomial given low -> high."""
    m = _trim(modulus)
    n = len(m) - 1
    if n < 1 or m[-1] != 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p ** n, m, p), x, p):
        return False
    for ell in prime_factors(n):
        h = _psub(_ppowmod(x, p ** (n // ell), m, p), x, p)
        if len(_pgcd(m, h, p)) != 1:
            return False
    return True


def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree n, ordered by integer encoding."""
    for low in range(p ** n):
        coeffs = [(low // p ** i) % p for i in range(n)] + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")


def _digits(v: int, p: int, n: int) -> list[int]:
    return [(v // p ** i) % p for i in range(n)]


def _undigits(d, p: int) -> int:
    return sum(int(c) * p ** i for i, c in enumerate(d))


# ---------------------------------------------------------------------------

class FieldSpec:
    """The field GF(p^n) with a fixed modulus and primitive element.

    Construction precomputes exp/log tables; the instance is immutable
    afterwards and can be shared between threads.
    """

    def __init__(self, p: int, n: int, modulus=None, generator: int | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        if p ** n > MAX_ORDER:
            raise ValueError(f"field order {p}^{n} exceeds {MAX_ORDER}")
        if modulus is None:
            modulus = default_modulus(p, n)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n (low -> high coefficients)")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = modulus
        self._build_tables(generator)

    # -- construction -----------------------------------------------------

    def _slow_mul(self, x: int, y: int) -> int:
        prod = _pmulmod(_digits(x, self.p, self.n), _digits(y, self.p, self.n),
                        list(self.modulus), self.p)
        return _undigits(prod, self.p)

    def _slow_pow(self, x: int, e: int) -> int:
        r = _ppowmod(_digits(x, self.p, self.n), e, list(self.modulus), self.p)
        return _undigits(r, self.p)

    def _is_primitive(self, g: int) -> bool:
        order = self.q - 1
        if g == 0 or self._slow_pow(g, order) != 1:
            return False
        return all(self._slow_pow(g, order // ell) != 1 for ell in prime_factors(order))

    def _build_tables(self, generator):
        q, p, n = self.q, self.p, self.n
        if generator is None:
            generator = next(g for g in range(1, q) if self._is_primitive(g))
        elif not (0 < generator < q and self._is_primitive(generator)):
            raise ValueError(f"{generator} is not a primitive element")
        self.generator = int(generator)

        # multiply-by-generator as an F_p-linear map on digit vectors
        pw = p ** np.arange(n, dtype=np.int64)
        cols = np.array([_digits(self._slow_mul(self.generator, p ** i), p, n)
                         for i in range(n)], dtype=np.int64)
        exp = np.empty(q - 1, dtype=np.int64)
        cur = np.zeros(n, dtype=np.int64)
        cur[0] = 1
        for k in range(q - 1):
            exp[k] = int(cur @ pw)
            cur = (cur @ cols) % p
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        if (log[1:] < 0).any():
            raise AssertionError("generator does not span the multiplicative group")
        self.exp = exp
        self.log = log
        self._pw = pw
        digits = (np.arange(q)[:, None] // pw[None, :]) % p
        self.digits = digits
        frob = np.zeros((n, q), dtype=np.int64)
        for i in range(n):
            e = pow(p, i)
            frob[i, 1:] = exp[(log[1:] * e) % (q - 1)]
        self._frob = frob
        tr = np.zeros(q, dtype=np.int64)
        for i in range(n):
            tr = self.add(tr, frob[i])
        if tr.max() >= p:
            raise AssertionError("trace left the prime field")
        self._trace = tr
        for arr in (self.exp, self.log, self.digits, self._frob, self._trace):
            arr.setflags(write=False)

    @classmethod
    def aes(cls) -> "FieldSpec":
        return GF(2, 8, AES_MODULUS)

    # -- identity ----------------------------------------------------------

    def _key(self):
        return (self.p, self.n, self.modulus, self.generator)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldSpec(p={self.p}, n={self.n}, modulus={self.modulus}, generator={self.generator})"

    def to_json(self) -> str:
        return json.dumps({"p": self.p, "n": self.n, "modulus": list(self.modulus),
                           "generator": self.generator})

    @classmethod
    def from_json(cls, text: str) -> "FieldSpec":
        d = json.loads(text)
        return GF(int(d["p"]), int(d["n"]), tuple(d["modulus"]), d.get("generator"))

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    @property
    def prime_subfield(self) -> np.ndarray:
        return np.arange(self.p, dtype=np.int64)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, x):
        a = np.asarray(x, dtype=np.int64)
        if a.size and (a.min() < 0 or a.max() >= self.q):
            raise ValueError(f"value out of range for GF({self.p}^{self.n})")
        return a

    @staticmethod
    def _ret(res, *inputs):
        if all(np.ndim(v) == 0 for v in inputs):
            return int(res)
        return res

    def _digitwise(self, a, b, sign):
        da = (a[..., None] // self._pw) % self.p
        db = (b[..., None] // self._pw) % self.p
        return ((da + sign * db) % self.p) @ self._pw

    def _odd_tables(self):
        # addition and negation tables for small odd fields, built on first use
        tabs = self.__dict__.get("_addtab")
        if tabs is None:
            xs = np.arange(self.q, dtype=np.int64)
            add = self._digitwise(xs[:, None], xs[None, :], 1).astype(np.int32)
            neg = self._digitwise(np.zeros_like(xs), xs, -1)
            add.setflags(write=False)
            neg.setflags(write=False)
            tabs = self._addtab = (add, neg)
        return tabs

    def add(self, x, y):
        a, b = self._check(x), self._check(y)
        if self.p == 2:
            r = a ^ b
        elif self.n == 1:
            r = (a + b) % self.p
        elif self.q <= ADD_TABLE_LIMIT:
            r = self._odd_tables()[0][a, b].astype(np.int64)
        else:
            r = self._digitwise(a, b, 1)
        return self._ret(r, x, y)

    def neg(self, x):
        a = self._check(x)
        if self.p == 2:
            return self._ret(a.copy(), x)
        if self.n == 1:
            return self._ret((-a) % self.p, x)
        if self.q <= ADD_TABLE_LIMIT:
            return self._ret(self._odd_tables()[1][a], x)
        return self._ret(self._digitwise(np.zeros_like(a), a, -1), x)

    def sub(self, x, y):
        if self.p == 2:
            return self.add(x, y)
        if self.n == 1 or self.q <= ADD_TABLE_LIMIT:
            return self.add(x, self.neg(y))
        a, b = self._check(x), self._check(y)
        return self._ret(self._digitwise(a, b, -1), x, y)

    def mul(self, x, y):
        a, b = self._check(x), self._check(y)
        la, lb = self.log[a], self.log[b]
        r = np.where((a == 0) | (b == 0), 0, self.exp[(la + lb) % (self.q - 1)])
        return self._ret(r, x, y)

    def inv(self, x):
        a = self._check(x)
        if (a == 0).any():
            raise DomainError("zero has no multiplicative inverse")
        return self._ret(self.exp[(-self.log[a]) % (self.q - 1)], x)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def inverse_function(self, x):
        """x -> x^(q-2); sends 0 to 0."""
        a = self._check(x)
        r = np.where(a == 0, 0, self.exp[(-self.log[a]) % (self.q - 1)])
        return self._ret(r, x)

    def pow(self, x, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        a = self._check(x)
        if e == 0:
            r = np.ones_like(a)
        else:
            r = np.where(a == 0, 0, self.exp[(self.log[a] * (e % (self.q - 1))) % (self.q - 1)])
        return self._ret(r, x)

    def scalar(self, k: int) -> int:
        """Image of the integer k in the prime field."""
        return k % self.p

    def trace(self, x):
        a = self._check(x)
        return self._ret(self._trace[a], x)

    def frobenius(self, x, i: int = 1):
        a = self._check(x)
        return self._ret(self._frob[i % self.n][a], x)

    def dlog(self, x):
        a = self._check(x)
        if (a == 0).any():
            raise DomainError("discrete log of zero")
        return self._ret(self.log[a], x)

    def sum(self, values) -> int:
        """Field sum of a 1-D array of elements."""
        v = self._check(values).ravel()
        if self.p == 2:
            return int(np.bitwise_xor.reduce(v)) if v.size else 0
        d = (v[:, None] // self._pw) % self.p
        return int((d.sum(axis=0) % self.p) @ self._pw)

    def kth_power_test(self, x, k: int):
        """True where x is a nonzero k-th power."""
        a = self._check(x)
        if (a == 0).any():
            raise DomainError("k-th power test is defined on nonzero elements")
        g = math.gcd(k, self.q - 1)
        r = self.log[a] % g == 0
        return bool(r) if np.ndim(x) == 0 else r

    def sqrt(self, x):
        """One square root of x, or None when x is a non-square."""
        x = int(x)
        if x == 0:
            return 0
        if self.p == 2:
            return self.frobenius(x, self.n - 1)
        e = int(self.log[x])
        if e % 2:
            return None
        return int(self.exp[e // 2])

    def order(self, x: int) -> int:
        if x == 0:
            raise DomainError("zero has no multiplicative order")
        return (self.q - 1) // math.gcd(int(self.log[x]), self.q - 1)

    # -- extension ---------------------------------------------------------

    def quadratic_extension(self) -> tuple["FieldSpec", np.ndarray]:
        """GF(p^{2n}) together with the embedding table of this field into it."""
        return _quadratic_extension(self)


@lru_cache(maxsize=None)
def GF(p: int, n: int, modulus: tuple | None = None, generator: int | None = None) -> FieldSpec:
    """Cached FieldSpec constructor."""
    return FieldSpec(p, n, modulus, generator)


@lru_cache(maxsize=None)
def _quadratic_extension(F: FieldSpec):
    E = GF(F.p, 2 * F.n)
    # find a root of F's modulus inside E; x -> beta is then a field embedding
    xs = E.elements()
    acc = np.zeros(E.q, dtype=np.int64)
    for i, c in enumerate(F.modulus):
        if c:
            acc = E.add(acc, E.mul(c, E.pow(xs, i)))
    beta = int(np.flatnonzero(acc == 0)[0])
    powers = [E.pow(beta, i) for i in range(F.n)]
    embed = np.zeros(F.q, dtype=np.int64)
    for v in range(F.q):
        y = 0
        for i, dgt in enumerate(_digits(v, F.p, F.n)):
            if dgt:
                y = E.add(y, E.mul(dgt, powers[i]))
        embed[v] = y
    embed.setflags(write=False)
    return E, embed


@dataclass(frozen=True)
class FieldElement:
    """An element bound to its field; operators refuse to mix fields."""

    field: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"{self.value} is not an element of GF({self.field.p}^{self.field.n})")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError("operands belong to different fields")
            return other.value
        if isinstance(other, int):
            return self.field.scalar(other)
        return NotImplemented

    def _wrap(self, v):
        return FieldElement(self.field, int(v))

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.value, o))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        if e < 0:
            return self._wrap(self.field.pow(self.field.inv(self.value), -e))
        return self._wrap(self.field.pow(self.value, e))

    def inverse(self):
        return self._wrap(self.field.inv(self.value))

    def trace(self) -> int:
        return self.field.trace(self.value)

    def frobenius(self, i: int = 1):
        return self._wrap(self.field.frobenius(self.value, i))

    def dlog(self) -> int:
        return self.field.dlog(self.value)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value:#x}" if self.field.p == 2 else str(self.value)


# ---------------------------------------------------------------------------
# root counts for low-degree equations

def _artin_schreier_solver(F: FieldSpec) -> np.ndarray:
    """Table y[k] with y^2 + y = k for every k of trace 0 (p = 2).

    Uses y = sum_{i<n-1} k^{2^i} * sum_{j>i} d^{2^j} with Tr(d) = 1; for
    odd n the choice d = 1 gives the half-trace.
    """
    n = F.n
    d = 1 if n % 2 else int(np.flatnonzero(F._trace == 1)[0])
    ks = F.elements()
    y = np.zeros(F.q, dtype=np.int64)
    for i in range(n - 1):
        inner = 0
        for j in range(i + 1, n):
            inner = F.add(inner, F.frobenius(d, j))
        y = F.add(y, F.mul(F.frobenius(ks, i), inner))
    return np.where(F._trace == 0, y, -1)


_AS_CACHE: dict = {}


def artin_schreier_table(F: FieldSpec) -> np.ndarray:
    if F not in _AS_CACHE:
        t = _artin_schreier_solver(F)
        t.setflags(write=False)
        _AS_CACHE[F] = t
    return _AS_CACHE[F]


def quadratic_root_counts(F: FieldSpec, a, b, c) -> np.ndarray:
    """Vectorized root counts of a x^2 + b x + c via the trace/discriminant criterion."""
    a, b, c = (np.asarray(v, dtype=np.int64) for v in (a, b, c))
    if (a == 0).any():
        raise DegenerateInputError("leading coefficient must be nonzero")
    a, b, c = (np.atleast_1d(v) for v in np.broadcast_arrays(a, b, c))
    if F.p == 2:
        counts = np.ones(a.shape, dtype=np.int64)
        nz = b != 0
        bb = np.where(nz, b, 1)
        k = F.mul(F.mul(a, c), F.inv(F.mul(bb, bb)))
        counts[nz] = np.where(F.trace(k)[nz] == 0, 2, 0)
        return counts
    disc = F.sub(F.mul(b, b), F.mul(F.mul(4 % F.p, a), c))
    dz = disc == 0
    sq = np.where(dz, True, F.log[np.where(dz, 1, disc)] % 2 == 0)
    return np.where(dz, 1, np.where(sq, 2, 0))


def root_count_quadratic(F: FieldSpec, a: int, b: int, c: int) -> tuple[int, list[int]]:
    """Number and list of roots of a x^2 + b x + c = 0 in F."""
    if a == 0:
        raise DegenerateInputError("a = 0: the equation is linear")
    count = int(quadratic_root_counts(F, a, b, c)[0])
    if count == 0:
        return 0, []
    if F.p == 2:
        if b == 0:
            return 1, [F.sqrt(F.div(c, a))]
        # x = (b/a) y with y^2 + y = ac/b^2
        k = F.div(F.mul(a, c), F.mul(b, b))
        y = int(artin_schreier_table(F)[k])
        s = F.div(b, a)
        return 2, sorted([F.mul(s, y), F.mul(s, y ^ 1)])
    disc = F.sub(F.mul(b, b), F.mul(F.mul(4 % F.p, a), c))
    r = F.sqrt(disc)
    inv2a = F.inv(F.mul(2, a))
    roots = {F.mul(F.sub(r, b), inv2a), F.mul(F.sub(F.neg(r), b), inv2a)}
    return count, sorted(roots)


def _cube_test_pairs(F: FieldSpec, a, b):
    """For x^3 + a x + b (p = 2, Tr(a^3/b^2) = Tr(1)): whether t1 and t2 are cubes.

    t1, t2 are the roots of t^2 + b t + a^3; they live in F when n is even
    and in the quadratic extension when n is odd.  Returns two boolean arrays.
    """
    if F.n % 2 == 0:
        K, emb = F, np.arange(F.q, dtype=np.int64)
    else:
        K, emb = F.quadratic_extension()
    A, B = emb[a], emb[b]
    A3 = K.pow(A, 3)
    k = K.mul(A3, K.inv(K.mul(B, B)))
    y = artin_schreier_table(K)[k]
    if (y < 0).any():
        raise AssertionError("auxiliary quadratic has no root in the splitting field")
    t1 = K.mul(B, y)
    t2 = K.add(t1, B)
    c1 = np.where(t1 == 0, True, K.log[np.where(t1 == 0, 1, t1)] % 3 == 0)
    c2 = np.where(t2 == 0, True, K.log[np.where(t2 == 0, 1, t2)] % 3 == 0)
    return c1, c2


def cubic_root_counts(F: FieldSpec, a, b) -> np.ndarray:
    """Vectorized root counts of x^3 + a x + b over GF(2^n), b != 0."""
    if F.p != 2:
        raise ValueError("the cubic criterion is for characteristic 2")
    a, b = (np.atleast_1d(v) for v in np.broadcast_arrays(np.asarray(a, dtype=np.int64),
                                                            np.asarray(b, dtype=np.int64)))
    if (b == 0).any():
        raise DegenerateInputError("b = 0")
    tr1 = F.n % 2
    k = F.mul(F.pow(a, 3), F.inv(F.mul(b, b)))
    tr = F.trace(k)
    counts = np.ones(a.shape, dtype=np.int64)
    same = tr == tr1
    if same.any():
        c1, c2 = _cube_test_pairs(F, a[same], b[same])
        counts[same] = np.where(c1 & c2, 3, 0)
    return counts


def cubic_mixed_cube_cases(F: FieldSpec, a, b) -> int:
    """How many (a, b) pairs, a != 0, in the Tr = Tr(1) branch have exactly one cube among t1, t2.

    For a = 0 the roots are 0 and b, so a "mixed" pair is expected there and
    is not counted.
    """
    a, b = (np.atleast_1d(v) for v in np.broadcast_arrays(np.asarray(a, dtype=np.int64),
                                                            np.asarray(b, dtype=np.int64)))
    keep = a != 0
    a, b = a[keep], b[keep]
    if a.size == 0:
        return 0
    k = F.mul(F.pow(a, 3), F.inv(F.mul(b, b)))
    same = F.trace(k) == F.n % 2
    if not same.any():
        return 0
    c1, c2 = _cube_test_pairs(F, a[same], b[same])
    return int((c1 != c2).sum())


def root_count_cubic_char2(F: FieldSpec, a: int, b: int) -> tuple[int, list[int]]:
    """Roots of x^3 + a x + b = 0 over GF(2^n), b != 0.

    The count comes from the trace/cube criterion; the roots themselves are
    recovered with Cardano's substitution x = u + a/u, u^3 = t1, carried out
    in the quadratic extension.
    """
    if F.p != 2:
        raise ValueError("the cubic criterion is for characteristic 2")
    if b == 0:
        raise DegenerateInputError("b = 0")
    count = int(cubic_root_counts(F, a, b)[0])
    if count == 0:
        return 0, []
    E, emb = F.quadratic_extension()
    back = {int(v): i for i, v in enumerate(emb)}
    A, B = int(emb[a]), int(emb[b])
    k = E.div(E.pow(A, 3), E.mul(B, B))
    y = int(artin_schreier_table(E)[k])
    t1 = E.mul(B, y)
    if t1 == 0:
        t1 = B
    e = int(E.log[t1])
    if e % 3:
        # t1 not a cube in the extension: no root anywhere in F
        raise AssertionError("criterion reported roots but t1 is not a cube")
    w = (E.q - 1) // 3
    roots = set()
    for j in range(3):
        u = int(E.exp[(e // 3 + j * w) % (E.q - 1)])
        x = E.add(u, E.div(A, u)) if A else u
        if x in back:
            roots.add(back[x])
    if len(roots) != count:
        raise AssertionError(f"criterion count {count} but Cardano found {sorted(roots)}")
    return count, sorted(roots)


def brute_force_roots(F: FieldSpec, coeffs) -> list[int]:
    """All x with sum coeffs[i] x^i = 0, by evaluation at every element."""
    xs = F.elements()
    acc = np.zeros(F.q, dtype=np.int64)
    for i, c in enumerate(coeffs):
        if c:
            acc = F.add(acc, F.mul(c, F.pow(xs, i)))
    return [int(v) for v in np.flatnonzero(acc == 0)]
