"""Command-line front end.

Machine-readable output goes to stdout (or --out); diagnostics and progress
go to stderr.  Exit status: 0 success, 1 a verification failed, 2 usage or
input-format error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import charsums, theorems
from .cdiff import (FunctionTable, cddt_table, cdu_spectrum, perturb_scan_monomials)
from .fpoly import LinearizedPoly, UniPoly, algebraic_degree, interpolate_table
from .gf import AES_MODULUS, GF, FieldSpec
from .sboxcorpus import (builtin_corpus, corpus_report, field_for_width, load_sbox,
                         parse_sbox, report_csv)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_int(text: str) -> int:
    """Decimal or 0x-prefixed hex."""
    s = text.strip().lower()
    try:
        if s.startswith(("0x", "-0x")):
            return int(s, 16)
        return int(s, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def parse_modulus(text: str, p: int, n: int) -> tuple:
    """Comma-separated coefficients (low -> high) or an integer read in base p."""
    if "," in text:
        coeffs = tuple(parse_int(c) for c in text.split(","))
    else:
        v = parse_int(text)
        coeffs = tuple((v // p ** i) % p for i in range(n + 1))
        if v >= p ** (n + 1):
            raise UsageError(f"modulus {text} has degree > {n}")
    if len(coeffs) != n + 1:
        raise UsageError(f"modulus needs {n + 1} coefficients, got {len(coeffs)}")
    return coeffs


# ---------------------------------------------------------------------------
# shared argument groups

def _field_args(sp, default_n=8):
    sp.add_argument("--p", type=parse_int, default=2, help="characteristic (default 2)")
    sp.add_argument("--n", type=parse_int, default=default_n, help="extension degree")
    sp.add_argument("--modulus", help="hex/decimal integer in base p, or comma-separated coefficients")
    sp.add_argument("--aes-field", action="store_true", help="GF(2^8) with x^8+x^4+x^3+x+1")


def _fn_args(sp):
    sp.add_argument("--fn", help="inv | mono:<e> | inv+mono:<t> | inv+lin:<file> | table:<file> | poly:<file>")
    sp.add_argument("--sbox", help="S-box JSON file (uses the pinned field for its width)")


def _c_args(sp):
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--c", type=parse_int, help="a single multiplier c")
    g.add_argument("--all-c", action="store_true", help="every c, including c = 1")
    g.add_argument("--exclude-zero", action="store_true", help="c outside {0, 1}")


def _out_args(sp, csv_ok=False):
    sp.add_argument("--json", action="store_true", help="JSON output")
    if csv_ok:
        sp.add_argument("--csv", action="store_true", help="CSV output")
    sp.add_argument("--out", help="write output to this path instead of stdout")
    sp.add_argument("--threads", type=parse_int, default=None, help="worker threads")
    sp.add_argument("--progress", action="store_true", help="progress on stderr")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cdifflab", description="c-differential uniformity toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("field", help="describe a field (and optionally one element)")
    _field_args(sp)
    sp.add_argument("--element", type=parse_int, help="element to describe")
    _out_args(sp)

    sp = sub.add_parser("cddt", help="full c-DDT of a function at one c")
    _field_args(sp)
    _fn_args(sp)
    sp.add_argument("--c", type=parse_int, required=True)
    _out_args(sp, csv_ok=True)

    for name, hlp in (("cdu", "c-differential uniformity summary"),
                      ("spectrum", "uniformity for every selected c")):
        sp = sub.add_parser(name, help=hlp)
        _field_args(sp)
        _fn_args(sp)
        _c_args(sp)
        _out_args(sp, csv_ok=name == "spectrum")

    sp = sub.add_parser("scan-monomials", help="max uniformity of F + x^(p^i) for every i")
    _field_args(sp)
    _fn_args(sp)
    _out_args(sp)

    sp = sub.add_parser("interpolate", help="univariate polynomial of a function table")
    _field_args(sp)
    _fn_args(sp)
    _out_args(sp)

    sp = sub.add_parser("verify", help="exhaustive checks of the counting statements")
    sp.add_argument("suite", choices=["gcd", "bluher", "lemma-roots", "main-thm",
                                      "second-thm", "weil", "all"])
    sp.add_argument("--p", type=parse_int)
    sp.add_argument("--n", type=parse_int)
    sp.add_argument("--t", type=parse_int)
    sp.add_argument("--exclude-zero", action="store_true", help="main-thm: also drop c = 0")
    sp.add_argument("--samples", type=parse_int, default=50, help="weil: random L per configuration")
    sp.add_argument("--seed", type=parse_int, default=0)
    _out_args(sp)

    sp = sub.add_parser("report", help="DU / cDU / cDU with linearized monomial for S-boxes")
    sp.add_argument("--corpus", action="store_true", help="the built-in corpus (default)")
    sp.add_argument("--sbox", action="append", help="S-box JSON file (repeatable)")
    _out_args(sp, csv_ok=True)

    sp = sub.add_parser("charsum", help="Gauss sums, Weil sums and the x^(q-2)+L bounds")
    sp.add_argument("kind", choices=["gauss", "weil", "bounds"])
    _field_args(sp, default_n=2)
    sp.add_argument("--k", type=parse_int, help="gauss: a single exponent")
    sp.add_argument("--lin", help="LinearizedPoly JSON {\"a\": [...]} (default: x)")
    sp.add_argument("--alpha", type=parse_int, help="weil: a single alpha")
    sp.add_argument("--no-observe", action="store_true", help="bounds: skip the brute-force scan")
    _out_args(sp)
    return ap


# ---------------------------------------------------------------------------
# helpers

def _field(args) -> FieldSpec:
    if getattr(args, "aes_field", False):
        return GF(2, 8, AES_MODULUS)
    mod = parse_modulus(args.modulus, args.p, args.n) if args.modulus else None
    return GF(args.p, args.n, mod)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _table_from_file(F: FieldSpec, path: str) -> np.ndarray:
    d = json.loads(_read(path))
    if isinstance(d, dict):
        d = d.get("table")
    if not isinstance(d, list) or len(d) != F.q:
        raise UsageError(f"{path}: expected a table of {F.q} entries")
    return np.array(d, dtype=np.int64)


def parse_fn(spec: str, F: FieldSpec) -> FunctionTable:
    """Resolve the --fn mini-language over F."""
    kind, _, arg = spec.partition(":")
    if kind == "inv" and not arg:
        return FunctionTable.inverse(F)
    if kind == "mono":
        return FunctionTable.monomial(F, parse_int(arg))
    if kind == "inv+mono":
        t = parse_int(arg)
        return FunctionTable.inverse(F).plus_frobenius(t)
    if kind == "inv+lin":
        return FunctionTable.inverse(F) + LinearizedPoly.from_json(F, _read(arg))
    if kind == "table":
        return FunctionTable(F, _table_from_file(F, arg), Path(arg).stem)
    if kind == "poly":
        return FunctionTable.from_poly(UniPoly.from_json(F, _read(arg)), Path(arg).stem)
    raise UsageError(f"unknown --fn {spec!r}")


def _function(args) -> FunctionTable:
    if args.sbox and args.fn:
        raise UsageError("give either --fn or --sbox, not both")
    if args.sbox:
        rec = load_sbox(args.sbox)
        F = _field(args) if (args.modulus or args.aes_field) else field_for_width(rec.n)
        if F.p != 2 or F.n != rec.n:
            raise UsageError("S-box width does not match the field")
        return rec.function(F)
    if not args.fn:
        raise UsageError("--fn or --sbox is required")
    return parse_fn(args.fn, _field(args))


def _c_range(args, F: FieldSpec):
    if args.c is not None:
        if not 0 <= args.c < F.q:
            raise UsageError(f"c = {args.c} is not an element of the field")
        return [args.c]
    if args.all_c:
        return "all"
    if args.exclude_zero:
        return "exclude-0-and-1"
    return "exclude-1"


def _progress(args):
    if not (args.progress or sys.stderr.isatty()):
        return None

    def cb(done, total):
        if done == total or done % max(1, total // 20) == 0:
            print(f"\r{done}/{total}", end="\n" if done == total else "", file=sys.stderr, flush=True)
    return cb


def _emit(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, default=_json_default)


def _json_default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, complex):
        return {"re": o.real, "im": o.imag}
    if isinstance(o, float) and not math.isfinite(o):
        return str(o)
    raise TypeError(type(o).__name__)


# ---------------------------------------------------------------------------
# subcommands

def cmd_field(args) -> int:
    F = _field(args)
    d = json.loads(F.to_json())
    d["q"] = F.q
    if args.element is not None:
        x = args.element
        if not 0 <= x < F.q:
            raise UsageError(f"{x} is not an element of the field")
        d["element"] = {
            "value": x, "trace": F.trace(x), "frobenius": F.frobenius(x),
            "inverse": F.inverse_function(x),
            "log": None if x == 0 else F.dlog(x),
            "order": None if x == 0 else F.order(x),
        }
    if args.json:
        _emit(args, _dumps(d))
    else:
        lines = [f"{k}: {v}" for k, v in d.items() if k != "element"]
        lines += [f"element.{k}: {v}" for k, v in d.get("element", {}).items()]
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_cddt(args) -> int:
    fn = _function(args)
    if not 0 <= args.c < fn.field.q:
        raise UsageError(f"c = {args.c} is not an element of the field")
    tab = cddt_table(fn, args.c)
    if args.json:
        _emit(args, _dumps({"c": args.c, "counts": tab.counts.tolist()}))
    else:
        _emit(args, tab.to_csv())
    return EXIT_OK


def cmd_cdu(args) -> int:
    fn = _function(args)
    rep = cdu_spectrum(fn, _c_range(args, fn.field), args.threads, _progress(args))
    d = rep.to_dict()
    if args.json:
        _emit(args, _dumps(d))
    else:
        lines = [f"function: {fn.name or '?'} over GF({fn.field.p}^{fn.field.n})",
                 f"c values scanned: {len(rep.per_c)}"]
        if rep.max_c_ne_1 is not None:
            c, a, b = rep.argmax_witness
            lines.append(f"max over c != 1: {rep.max_c_ne_1}  (c={c}, a={a}, b={b})")
        if rep.max_c_ne_01 is not None:
            lines.append(f"max over c not in {{0,1}}: {rep.max_c_ne_01}")
        if 1 in rep.per_c:
            lines.append(f"DU (c = 1): {rep.per_c[1]}")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    fn = _function(args)
    rep = cdu_spectrum(fn, _c_range(args, fn.field), args.threads, _progress(args))
    if args.json:
        rows = [{"c": c, "delta": d, "a": rep.witnesses[c][0], "b": rep.witnesses[c][1]}
                for c, d in rep.per_c.items()]
        _emit(args, _dumps({"spectrum": rows}))
    else:
        lines = ["c,delta,a,b"] + [f"{c},{d},{rep.witnesses[c][0]},{rep.witnesses[c][1]}"
                                   for c, d in rep.per_c.items()]
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_scan(args) -> int:
    fn = _function(args)
    scan = perturb_scan_monomials(fn, args.threads)
    d = {"base_max": scan.base_max, "per_i": {str(i): v for i, v in scan.per_i.items()},
         "best_i": scan.best_i, "max": scan.maximum}
    if args.json:
        _emit(args, _dumps(d))
    else:
        lines = [f"base max over c != 1: {scan.base_max}"]
        lines += [f"+ x^({fn.field.p}^{i}): {v}" for i, v in scan.per_i.items()]
        lines.append(f"max: {scan.maximum} at i = {scan.best_i}")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_interpolate(args) -> int:
    fn = _function(args)
    P = interpolate_table(fn.field, fn.values)
    d = json.loads(P.to_json())
    d["degree"] = P.degree
    d["algebraic_degree"] = algebraic_degree(P)
    if args.json:
        _emit(args, _dumps(d))
    else:
        terms = " + ".join(f"{c}*x^{e}" for e, c in reversed(list(P.terms.items()))) or "0"
        _emit(args, f"{terms}\ndegree: {P.degree}\nalgebraic degree: {d['algebraic_degree']}")
    return EXIT_OK


# -- verification suites ------------------------------------------------------

def _suite_gcd(args):
    return theorems.check_gcd_grid()


def _suite_bluher(args):
    if args.p and args.n and args.t:
        count, formula = theorems.bluher_census(args.p, args.t, args.n)
        chk = theorems.BoundCheck({"p": args.p, "n": args.n, "t": args.t}, formula, formula, count)
        return [chk.judge()]
    return theorems.check_bluher_grid()


def _suite_lemma_roots(args):
    fields = [GF(args.p, args.n)] if args.p and args.n else list(theorems.small_fields(256))
    out = []
    for F in fields:
        r = theorems.check_root_criteria(F)
        bad = r["quadratic_mismatches"] + r.get("cubic_mismatches", 0)
        chk = theorems.BoundCheck({"p": F.p, "n": F.n}, 0, 0, bad, extra=r)
        out.append(chk.judge())
    return out


def _suite_main(args):
    p = args.p or 2
    if args.n is None:
        raise UsageError("verify main-thm needs --n (and optionally --t)")
    ts = [args.t] if args.t is not None else range(1, args.n)
    return [theorems.verify_main_thm(p, args.n, t, args.exclude_zero, args.threads) for t in ts]


def _suite_second(args):
    if args.n is None:
        raise UsageError("verify second-thm needs --n")
    variants = ["t0", "t1"] if args.t is None else [f"t{args.t}"]
    if any(v not in ("t0", "t1") for v in variants):
        raise UsageError("second-thm takes --t 0 or --t 1")
    return [theorems.verify_second_thm(args.n, v, args.threads) for v in variants]


def _suite_weil(args):
    rng = np.random.default_rng(args.seed)
    configs = [(args.p, args.n)] if args.p and args.n else [(p, n) for p in (3, 5) for n in (2, 3, 4)]
    out = []
    for p, n in configs:
        if p == 2:
            raise UsageError("the Weil-sum identity is checked for odd p")
        F = GF(p, n)
        Ls = [LinearizedPoly.monomial(F, 0), LinearizedPoly.monomial(F, 1 % n),
              LinearizedPoly.zero(F)]
        Ls += [LinearizedPoly.random(F, rng) for _ in range(args.samples)]
        worst, bad = 0.0, 0
        for L in Ls:
            res = charsums.verify_weil_identity(L)
            worst = max(worst, res.max_rel_error)
            bad += len(res.failures)
        chk = theorems.BoundCheck({"p": p, "n": n, "polys": len(Ls)}, 0, 0, bad,
                                  extra={"max_rel_error": worst})
        out.append(chk.judge())
    return out


def _suite_all(args):
    checks = []
    checks += _suite_gcd(args)
    checks += theorems.check_bluher_grid(max_order=1 << 8)
    checks += _suite_lemma_roots(argparse.Namespace(p=None, n=None))
    checks.append(theorems.verify_main_thm(2, 8, 4, threads=args.threads))
    checks.append(theorems.verify_main_thm(3, 4, 2, threads=args.threads))
    for n in (4, 5, 6):
        checks.append(theorems.verify_second_thm(n, "t0", args.threads))
    checks += _suite_weil(argparse.Namespace(p=3, n=2, samples=10, seed=args.seed))
    return checks


SUITES = {"gcd": _suite_gcd, "bluher": _suite_bluher, "lemma-roots": _suite_lemma_roots,
          "main-thm": _suite_main, "second-thm": _suite_second, "weil": _suite_weil,
          "all": _suite_all}


def cmd_verify(args) -> int:
    checks = SUITES[args.suite](args)
    failed = [c for c in checks if c.verdict == theorems.FAIL]
    counts = {v: sum(c.verdict == v for c in checks)
              for v in (theorems.PASS, theorems.FAIL, theorems.SKIPPED)}
    if args.json:
        d = {"suite": args.suite, "passed": not failed, "counts": counts,
             "grid": [c.to_dict() for c in checks]}
        if len(checks) == 1:
            d.update({k: v for k, v in checks[0].to_dict().items() if k not in d})
        _emit(args, _dumps(d))
    else:
        lines = []
        for c in checks:
            ps = " ".join(f"{k}={v}" for k, v in c.params.items())
            lines.append(f"{c.verdict.upper():7s} {ps}  observed={c.observed} "
                         f"bounds=[{c.lower}, {c.upper}]" + (f"  ({c.reason})" if c.reason else ""))
        lines.append(f"{counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped")
        _emit(args, "\n".join(lines))
    return EXIT_FAIL if failed else EXIT_OK


def cmd_report(args) -> int:
    records = [load_sbox(p) for p in args.sbox] if args.sbox else []
    if args.corpus or not records:
        records = builtin_corpus() + records
    reps = corpus_report(records, args.threads)
    if args.json:
        _emit(args, _dumps({"rows": [r.to_dict() for r in reps]}))
    else:
        _emit(args, report_csv(reps))
    for rec in records:
        print(f"{rec.name}: n={rec.n}, bijective={rec.is_bijective}, modulus="
              f"{list(field_for_width(rec.n).modulus)}; {rec.provenance}", file=sys.stderr)
    return EXIT_OK


def cmd_charsum(args) -> int:
    F = _field(args)
    if F.p == 2:
        raise UsageError("character sums are provided for odd characteristic")
    L = LinearizedPoly.from_json(F, _read(args.lin)) if args.lin else LinearizedPoly.monomial(F, 0)
    ctx = charsums.CharacterContext(F)
    if args.kind == "gauss":
        ks = [args.k] if args.k is not None else range(1, F.q - 1)
        rows = []
        for k in ks:
            g = charsums.gauss_sum(ctx, k)
            rows.append({"k": k, "G": g, "abs": abs(g), "abs_over_sqrt_q": abs(g) / math.sqrt(F.q)})
        if args.json:
            _emit(args, _dumps({"q": F.q, "gauss": rows}))
        else:
            _emit(args, "\n".join(["k,re,im,abs"] + [f"{r['k']},{r['G'].real:.12g},{r['G'].imag:.12g},"
                                                      f"{r['abs']:.12g}" for r in rows]))
        return EXIT_OK
    if args.kind == "weil":
        alphas = [args.alpha] if args.alpha is not None else range(1, F.q)
        reps = [charsums.weil_report(ctx, L, a) for a in alphas]
        if args.json:
            _emit(args, _dumps({"weil": [r.to_dict() for r in reps]}))
        else:
            _emit(args, "\n".join(["alpha,re,im,N_alpha,|S|^2,qN"] + [
                f"{r.alpha},{r.S_alpha.real:.12g},{r.S_alpha.imag:.12g},{r.N_alpha},"
                f"{abs(r.S_alpha) ** 2:.12g},{F.q * r.N_alpha}" for r in reps]))
        return EXIT_OK
    res = charsums.linearized_bounds(L, observe=not args.no_observe, threads=args.threads)
    d = res.to_dict()
    if args.json:
        _emit(args, _dumps(d))
    else:
        _emit(args, "\n".join(f"{k}: {v}" for k, v in d.items()))
    if res.observed is not None and res.observed > res.upper:
        print("observed uniformity exceeds the upper bound", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


COMMANDS = {"field": cmd_field, "cddt": cmd_cddt, "cdu": cmd_cdu, "spectrum": cmd_spectrum,
            "scan-monomials": cmd_scan, "interpolate": cmd_interpolate, "verify": cmd_verify,
            "report": cmd_report, "charsum": cmd_charsum}


def parse_and_dispatch(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError, KeyError, json.JSONDecodeError) as e:
        print(f"cdifflab {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as e:
        print(f"cdifflab {args.command}: internal check failed: {e}", file=sys.stderr)
        return EXIT_FAIL


def main():
    sys.exit(parse_and_dispatch())


if __name__ == "__main__":
    main()
