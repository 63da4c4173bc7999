"""Built-in S-box corpus, S-box file ingestion and the corpus report.

Tables are interpreted as functions on GF(2^n) through the usual bit-vector
encoding (bit i = coefficient of x^i).  Because the resulting uniformities
depend on the modulus, the field used for each width is pinned here.
"""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .cdiff import FunctionTable, cdu_spectrum, du, perturb_scan_monomials
from .gf import AES_MODULUS, GF, FieldSpec, default_modulus

REPORT_HEADER = ["name", "DU", "cDU", "cDU_w_linearized_monomial"]


class SboxFormatError(ValueError):
    pass


# width -> pinned modulus (low -> high coefficients)
PINNED_MODULI = {
    4: default_modulus(2, 4),  # x^4 + x + 1
    6: default_modulus(2, 6),  # x^6 + x + 1
    8: AES_MODULUS,
}

PROVENANCE = {
    "Rectangle": "RECTANGLE block cipher S-box (Zhang et al., 2014)",
    "Serpent-3": "Serpent S-box S2, i.e. the third box when counting from 1 (Anderson, Biham, Knudsen)",
    "APN": "Dillon's 6-bit APN permutation as listed by Browning, Dillon, McQuistan, Wolfe (2010)",
    "Fides": ("STAND-IN: the Fides 6-bit table could not be sourced offline; this is the APN "
              "permutation above with input and output bits reversed (a linear equivalent, still APN)"),
    "AES": "AES / Rijndael S-box (FIPS-197), regenerated and checked against inverse + affine map",
    "Skipjack": "Skipjack F-table (NSA specification, 1998)",
}

_BUILTIN_FILES = ["rectangle", "serpent3", "apn", "fides", "aes", "skipjack"]


@dataclass(frozen=True, eq=False)
class SboxRecord:
    name: str
    n: int
    table: tuple
    provenance: str = ""

    def __post_init__(self):
        _validate(self.n, self.table)
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))

    @property
    def is_bijective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def function(self, F: FieldSpec | None = None) -> FunctionTable:
        F = F or field_for_width(self.n)
        return FunctionTable(F, np.array(self.table, dtype=np.int64), self.name)

    def to_json(self) -> str:
        return json.dumps({"name": self.name, "n": self.n, "table": list(self.table)})


def _validate(n, table):
    if not isinstance(n, int) or n < 1 or n > 16:
        raise SboxFormatError(f"bad width n={n!r}")
    size = 1 << n
    if len(table) != size:
        raise SboxFormatError(f"table has {len(table)} entries, expected {size} "
                              f"(first missing/extra index {min(len(table), size)})")
    for i, v in enumerate(table):
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or not 0 <= v < size:
            raise SboxFormatError(f"entry {i} = {v!r} is outside [0, {size})")


def parse_sbox(text: str, provenance: str = "") -> SboxRecord:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise SboxFormatError(f"not JSON: {e}") from None
    if not isinstance(d, dict) or not {"n", "table"} <= d.keys():
        raise SboxFormatError('expected an object with "name", "n" and "table"')
    return SboxRecord(str(d.get("name", "")), d["n"], d["table"], provenance)


def load_sbox(source) -> SboxRecord:
    """Read an S-box JSON file; bijectivity is reported via ``is_bijective``."""
    path = Path(source)
    return parse_sbox(path.read_text(), provenance=f"file:{path}")


def builtin_corpus() -> list[SboxRecord]:
    out = []
    pkg = resources.files("cdifflab") / "data"
    for stem in _BUILTIN_FILES:
        rec = parse_sbox((pkg / f"{stem}.json").read_text())
        out.append(SboxRecord(rec.name, rec.n, rec.table, PROVENANCE[rec.name]))
    return out


def builtin(name: str) -> SboxRecord:
    for rec in builtin_corpus():
        if rec.name.lower() == name.lower():
            return rec
    raise KeyError(name)


def field_for_width(n: int) -> FieldSpec:
    return GF(2, n, PINNED_MODULI.get(n))


def aes_sbox_reference() -> list[int]:
    """AES S-box from its definition: inversion in GF(2^8) then the affine layer."""
    F = GF(2, 8, AES_MODULUS)
    inv = F.inverse_function(F.elements())
    out = []
    for b in inv:
        b = int(b)
        s = 0
        for i in range(8):
            bit = 0
            for j in (0, 4, 5, 6, 7):
                bit ^= (b >> ((i + j) % 8)) & 1
            s |= bit << i
        out.append(s ^ 0x63)
    return out


@dataclass
class SboxReport:
    name: str
    du: int
    cdu_max: int
    cdu_with_monomial_max: int
    modulus: tuple
    per_i: dict

    def row(self) -> tuple[int, int, int]:
        return self.du, self.cdu_max, self.cdu_with_monomial_max

    def to_dict(self) -> dict:
        return {"name": self.name, "DU": self.du, "cDU": self.cdu_max,
                "cDU_w_linearized_monomial": self.cdu_with_monomial_max,
                "modulus": list(self.modulus),
                "per_i": {str(i): v for i, v in self.per_i.items()}}


def sbox_report(S: SboxRecord, F: FieldSpec | None = None, threads: int | None = None) -> SboxReport:
    """(DU, max over c != 1, max over i and c != 1 of S + x^(2^i))."""
    fn = S.function(F)
    scan = perturb_scan_monomials(fn, threads)
    return SboxReport(S.name, du(fn), scan.base_max, scan.maximum, fn.field.modulus, scan.per_i)


def corpus_report(records=None, threads: int | None = None) -> list[SboxReport]:
    records = builtin_corpus() if records is None else records
    # records are independent; the per-c scan already uses the pool, so keep this level serial
    # unless explicitly asked for more
    if threads and threads > 1 and len(records) > 1:
        with ThreadPoolExecutor(max_workers=min(threads, len(records))) as pool:
            return list(pool.map(lambda r: sbox_report(r, threads=1), records))
    return [sbox_report(r, threads=threads) for r in records]


def report_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_HEADER)
    for r in reports:
        w.writerow([r.name, r.du, r.cdu_max, r.cdu_with_monomial_max])
    return buf.getvalue()
