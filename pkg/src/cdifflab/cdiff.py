"""c-difference distribution tables and c-differential uniformity scans.

For an (n,n)-function F and constants a, b, c the c-DDT entry counts the x
with F(x + a) - c F(x) = b.  The uniformity at c is the largest entry,
with the row a = 0 excluded only when c = 1 (which then gives the
classical differential uniformity).

The engine works one c at a time on blocks of rows a: it forms the matrix
F(x + a) - c F(x) and histograms each row with a single ``bincount``.
Work over c is split across a thread pool; results are merged in
ascending-c order so the output never depends on the thread count.
"""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np

from .fpoly import LinearizedPoly, UniPoly, eval_linearized, tabulate
from .gf import FieldSpec

# elements per histogram block; keeps temporaries around a few MB
BLOCK_ELEMS = 1 << 20
FULL_SHIFT_LIMIT = 1 << 22
SUB_TABLE_LIMIT = 2187


@dataclass(frozen=True, eq=False)
class FunctionTable:
    field: FieldSpec
    values: np.ndarray
    name: str = ""

    def __post_init__(self):
        v = np.array(self.values, dtype=np.int64)
        if v.shape != (self.field.q,):
            raise ValueError(f"function table needs {self.field.q} entries, got {v.size}")
        self.field._check(v)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @classmethod
    def from_poly(cls, P: UniPoly, name: str = "") -> "FunctionTable":
        return cls(P.field, tabulate(P), name)

    @classmethod
    def inverse(cls, F: FieldSpec) -> "FunctionTable":
        return cls(F, F.inverse_function(F.elements()), "inv")

    @classmethod
    def monomial(cls, F: FieldSpec, e: int) -> "FunctionTable":
        return cls.from_poly(UniPoly.monomial(F, e), f"x^{e}")

    @classmethod
    def identity(cls, F: FieldSpec) -> "FunctionTable":
        return cls(F, F.elements(), "x")

    def __add__(self, other) -> "FunctionTable":
        """Pointwise field sum with another table or a linearized polynomial."""
        if isinstance(other, LinearizedPoly):
            vals = eval_linearized(other, self.field.elements())
            label = "L"
        elif isinstance(other, FunctionTable):
            vals = other.values
            label = other.name
        else:
            return NotImplemented
        if other.field != self.field:
            raise ValueError("functions live over different fields")
        return FunctionTable(self.field, self.field.add(self.values, vals),
                             f"{self.name}+{label}" if self.name else "")

    def plus_frobenius(self, i: int) -> "FunctionTable":
        """F + x^(p^i)."""
        F = self.field
        out = self + LinearizedPoly.monomial(F, i)
        return FunctionTable(F, out.values, f"{self.name}+x^{F.p ** i}")

    def is_permutation(self) -> bool:
        return np.unique(self.values).size == self.field.q

    def __len__(self):
        return self.field.q


def inverse_plus_frobenius(F: FieldSpec, t: int) -> FunctionTable:
    """x^(q-2) + x^(p^t)."""
    return FunctionTable.inverse(F).plus_frobenius(t)


# ---------------------------------------------------------------------------
# low-level helpers

@lru_cache(maxsize=8)
def _sub_table(F: FieldSpec) -> np.ndarray:
    xs = F.elements()
    t = F.sub(xs[:, None], xs[None, :]).astype(np.int32)
    t.setflags(write=False)
    return t


def _field_sub(F: FieldSpec, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    if F.p == 2:
        return u ^ v
    if F.q <= SUB_TABLE_LIMIT:
        return _sub_table(F)[u, v]
    return F.sub(u, v)


def _shift_rows(F: FieldSpec, values: np.ndarray, a_rows: np.ndarray) -> np.ndarray:
    """Matrix M[i, x] = values[x + a_rows[i]]."""
    xs = F.elements()
    if F.p == 2:
        return values[xs[None, :] ^ a_rows[:, None]]
    return values[F.add(xs[None, :], a_rows[:, None])]


class _Scanner:
    """Precomputed shifted table for repeated scans of one function."""

    def __init__(self, fn: FunctionTable):
        self.F = fn.field
        self.values = fn.values
        q = self.F.q
        self.rows_per_block = max(1, min(q, BLOCK_ELEMS // q))
        self.shifted = None
        self.tagged = None
        if q * q <= FULL_SHIFT_LIMIT:
            self.shifted = _shift_rows(self.F, self.values, self.F.elements())
            if self.F.p == 2:
                # row index folded into the high bits: (a << n) | F(x + a), so that
                # XOR with c F(x) yields the histogram bin directly
                rows = np.arange(q, dtype=np.int64)[:, None] << self.F.n
                self.tagged = self.shifted | rows

    def _block(self, lo: int, hi: int) -> np.ndarray:
        if self.shifted is not None:
            return self.shifted[lo:hi]
        return _shift_rows(self.F, self.values, np.arange(lo, hi, dtype=np.int64))

    def counts_block(self, c: int, lo: int, hi: int) -> np.ndarray:
        """c-DDT rows a in [lo, hi)."""
        F, q = self.F, self.F.q
        cf = F.mul(c, self.values)
        if self.tagged is not None:
            idx = (self.tagged[lo:hi] ^ cf[None, :]).ravel()
            if lo:
                idx -= lo * q
            return np.bincount(idx, minlength=(hi - lo) * q).reshape(hi - lo, q)
        diff = _field_sub(F, self._block(lo, hi), cf[None, :])
        rows = hi - lo
        idx = diff + (np.arange(rows, dtype=np.int64) * q)[:, None]
        return np.bincount(idx.ravel(), minlength=rows * q).reshape(rows, q)

    def uniformity(self, c: int) -> tuple[int, int, int]:
        """(delta, a, b) with (a, b) the row-major first entry attaining delta."""
        q = self.F.q
        best, wa, wb = -1, -1, -1
        start = 1 if c == 1 else 0
        for lo in range(start, q, self.rows_per_block):
            hi = min(q, lo + self.rows_per_block)
            counts = self.counts_block(c, lo, hi)
            k = int(counts.argmax())
            m = int(counts.flat[k])
            if m > best:
                best, wa, wb = m, lo + k // q, k % q
        return best, wa, wb


# ---------------------------------------------------------------------------
# table-level operations

@dataclass(frozen=True, eq=False)
class CDDT:
    c: int
    counts: np.ndarray

    @property
    def q(self) -> int:
        return self.counts.shape[0]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a\\b"] + list(range(self.q)))
        for a, row in enumerate(self.counts):
            w.writerow([a] + [int(v) for v in row])
        return buf.getvalue()


def cddt_entry(fn: FunctionTable, c: int, a: int, b: int) -> int:
    """#{x : F(x + a) - c F(x) = b}, counted directly."""
    F = fn.field
    xs = F.elements()
    lhs = F.sub(fn.values[F.add(xs, a)], F.mul(c, fn.values))
    return int(np.count_nonzero(lhs == b))


def cddt_table(fn: FunctionTable, c: int) -> CDDT:
    sc = _Scanner(fn)
    q = fn.field.q
    blocks = [sc.counts_block(c, lo, min(q, lo + sc.rows_per_block))
              for lo in range(0, q, sc.rows_per_block)]
    return CDDT(c, np.vstack(blocks))


def cdu(fn: FunctionTable, c: int) -> int:
    """c-differential uniformity of fn at c."""
    return _Scanner(fn).uniformity(c)[0]


def du(fn: FunctionTable) -> int:
    """Classical differential uniformity (c = 1, a != 0)."""
    return cdu(fn, 1)


# ---------------------------------------------------------------------------
# spectra

@dataclass
class CduReport:
    per_c: dict
    witnesses: dict = field(repr=False)
    max_c_ne_1: int | None = None
    max_c_ne_01: int | None = None
    argmax_witness: tuple | None = None
    argmax_witness_ne_01: tuple | None = None

    @classmethod
    def from_results(cls, results: Sequence[tuple[int, int, int, int]]) -> "CduReport":
        results = sorted(results)
        per_c = {c: d for c, d, _, _ in results}
        wit = {c: (a, b) for c, _, a, b in results}
        rep = cls(per_c, wit)
        for attr, wattr, skip in (("max_c_ne_1", "argmax_witness", {1}),
                                  ("max_c_ne_01", "argmax_witness_ne_01", {0, 1})):
            best = None
            for c, d, a, b in results:
                if c in skip:
                    continue
                if best is None or d > best[0]:
                    best = (d, (c, a, b))
            if best is not None:
                setattr(rep, attr, best[0])
                setattr(rep, wattr, best[1])
        return rep

    def max_over(self, cs: Iterable[int]) -> int:
        return max(self.per_c[c] for c in cs)

    def to_dict(self) -> dict:
        def w(t):
            return None if t is None else {"c": t[0], "a": t[1], "b": t[2]}
        return {
            "per_c": {str(c): d for c, d in self.per_c.items()},
            "max_c_ne_1": self.max_c_ne_1,
            "max_c_ne_01": self.max_c_ne_01,
            "witness": w(self.argmax_witness),
            "witness_c_ne_01": w(self.argmax_witness_ne_01),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def select_c(F: FieldSpec, c_range="exclude-1") -> list[int]:
    """Resolve a c selector: 'all', 'exclude-1', 'exclude-0-and-1' or an explicit list."""
    if isinstance(c_range, str):
        everything = list(range(F.q))
        if c_range == "all":
            return everything
        if c_range == "exclude-1":
            return [c for c in everything if c != 1]
        if c_range in ("exclude-0-and-1", "exclude-01"):
            return [c for c in everything if c not in (0, 1)]
        raise ValueError(f"unknown c range {c_range!r}")
    cs = sorted({int(c) for c in c_range})
    F._check(np.array(cs))
    return cs


def _default_threads() -> int:
    return os.cpu_count() or 1


def cdu_spectrum(fn: FunctionTable, c_range="exclude-1", threads: int | None = None,
                 progress: Callable[[int, int], None] | None = None) -> CduReport:
    """Uniformity at every selected c, with aggregate maxima and witnesses."""
    cs = select_c(fn.field, c_range)
    sc = _Scanner(fn)
    threads = threads or _default_threads()

    def work(c):
        d, a, b = sc.uniformity(c)
        return c, d, a, b

    results = []
    if threads == 1:
        for i, c in enumerate(cs):
            results.append(work(c))
            if progress:
                progress(i + 1, len(cs))
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for i, r in enumerate(pool.map(work, cs)):
                results.append(r)
                if progress:
                    progress(i + 1, len(cs))
    return CduReport.from_results(results)


def max_cdu(fn: FunctionTable, c_range="exclude-1", threads: int | None = None) -> int:
    return cdu_spectrum(fn, c_range, threads).max_c_ne_1


@dataclass
class MonomialScan:
    base_max: int
    per_i: dict
    best_i: int

    @property
    def maximum(self) -> int:
        return self.per_i[self.best_i]


def perturb_scan_monomials(fn: FunctionTable, threads: int | None = None) -> MonomialScan:
    """Max over c != 1 of the uniformity of fn + x^(p^i), for each 0 <= i < n."""
    base = cdu_spectrum(fn, "exclude-1", threads).max_c_ne_1
    per_i = {i: cdu_spectrum(fn.plus_frobenius(i), "exclude-1", threads).max_c_ne_1
             for i in range(fn.field.n)}
    best = min(per_i, key=lambda i: (-per_i[i], i))
    return MonomialScan(base, per_i, best)


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class Classification:
    c: int
    delta: int

    @property
    def label(self) -> str:
        if self.delta == 1:
            return "PcN"
        if self.delta == 2:
            return "APcN"
        return f"{self.delta}-uniform"

    def __str__(self):
        return self.label


def classify(fn: FunctionTable, c: int) -> Classification:
    return Classification(c, cdu(fn, c))


def c_derivative(fn: FunctionTable, c: int, a: int) -> np.ndarray:
    F = fn.field
    xs = F.elements()
    return F.sub(fn.values[F.add(xs, a)], F.mul(c, fn.values))


def is_pcn_by_permutation(fn: FunctionTable, c: int) -> bool:
    """PcN test through the permutation property of every c-derivative (c != 1)."""
    if c == 1:
        raise ValueError("the permutation characterization needs c != 1")
    q = fn.field.q
    return all(np.unique(c_derivative(fn, c, a)).size == q for a in range(q))
