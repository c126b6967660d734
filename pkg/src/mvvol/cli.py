r"""Command line front end.

Verbs:
  volume STRATUM     exact volume of one stratum
  principal G        closed-form principal-stratum volume at genus G
  table              volumes/predictions for all strata up to a total degree
  sv STRATUM         Siegel-Veech style constants from volume ratios
  selftest           run the built-in oracle suite

STRATUM is comma-separated nonnegative zero degrees, optionally wrapped as
H(...), e.g. "2,1,1" or "H(3,1)".  Exit codes: 0 success, 2 invalid input,
3 infeasible size (raise --max-weight to force), 4 selftest failure.

A JSON volume cache can be kept across runs with --cache PATH; the
MV_CACHE environment variable overrides the flag.  Cached entries are
exact (num/den/pi_exp) and re-checked against the pi^(2g) grading on load.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional

from . import siegel_veech, volumes
from .combinatorics import partitions_of_size
from .exact_arith import PiValue
from .selftest import run_selftest
from .volumes import (
    InfeasibleSizeError,
    InvalidStratumError,
    Stratum,
    prediction,
    principal_volume,
    volume,
)

__all__ = ["main", "entry", "parse_stratum", "load_cache", "save_cache", "CacheError"]

CACHE_VERSION = 1


class CacheError(ValueError):
    """Cache file is unreadable or inconsistent with the pi^(2g) grading."""


def parse_stratum(text: str) -> Stratum:
    s = text.strip()
    if s.upper().startswith("H(") and s.endswith(")"):
        s = s[2:-1]
    s = s.strip()
    if not s:
        return Stratum([])
    try:
        degrees = [int(tok) for tok in s.split(",")]
    except ValueError as exc:
        raise InvalidStratumError(f"cannot parse stratum {text!r}") from exc
    return Stratum(degrees)


# -- cache file ------------------------------------------------------------


def _cache_path(flag_value: Optional[str]) -> Optional[str]:
    return os.environ.get("MV_CACHE") or flag_value


def load_cache(path: str) -> None:
    """Populate the volume memo from a cache file written by save_cache."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        return
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheError(f"cannot read cache {path}: {exc}") from exc
    if not isinstance(data, dict) or data.get("version") != CACHE_VERSION:
        raise CacheError(f"cache {path} has unsupported version {data.get('version')!r}")
    memo = volumes.volume_cache()
    for key, rec in data.get("entries", {}).items():
        try:
            degrees = tuple(int(t) for t in key.split(",")) if key else ()
            num, den = int(rec["num"]), int(rec["den"])
            exp = int(rec["pi_exp"])
        except (ValueError, KeyError, TypeError) as exc:
            raise CacheError(f"malformed cache entry {key!r} in {path}") from exc
        if any(d <= 0 for d in degrees) or num <= 0 or den <= 0:
            raise CacheError(f"malformed cache entry {key!r} in {path}")
        if exp != sum(degrees) + 2:
            raise CacheError(
                f"cache entry {key!r} claims pi-exponent {exp}, expected {sum(degrees) + 2}"
            )
        memo[degrees] = PiValue([(exp, Fraction(num, den))])


def save_cache(path: str) -> None:
    entries = {}
    for degrees, value in volumes.volume_cache().items():
        q, e = value.monomial()
        key = ",".join(str(d) for d in degrees)
        entries[key] = {"num": str(q.numerator), "den": str(q.denominator), "pi_exp": e}
    payload = {"version": CACHE_VERSION, "entries": entries}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


# -- rendering ---------------------------------------------------------------


def _decimal_str(value: PiValue, digits: int) -> str:
    return str(value.to_decimal(digits))


def _ratio_decimal(value: PiValue, ref: Fraction, digits: int = 15) -> str:
    """Signed relative deviation value/ref - 1 at `digits` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits + 15
        dev = value.to_decimal(digits + 10) / (
            Decimal(ref.numerator) / Decimal(ref.denominator)
        ) - 1
        ctx.prec = digits
        return str(+dev)


def _print_volume(res, fmt: str, digits: int) -> None:
    if fmt == "exact":
        print(res.value)
    elif fmt == "decimal":
        print(_decimal_str(res.value, digits))
    else:
        q, e = res.value.monomial()
        record = {
            "stratum": res.stratum.key,
            "num": str(q.numerator),
            "den": str(q.denominator),
            "pi_exp": e,
            "prediction": str(res.prediction),
            "relative_error": str(res.relative_error),
        }
        print(json.dumps(record, sort_keys=True))


# -- verbs -------------------------------------------------------------------


def _cmd_volume(args) -> int:
    st = parse_stratum(args.stratum)
    res = volume(st, max_weight=args.max_weight, threads=args.threads)
    _print_volume(res, args.format, args.digits)
    return 0


def _cmd_principal(args) -> int:
    if args.genus < 2:
        raise InvalidStratumError("principal stratum needs genus >= 2")
    val = principal_volume(args.genus)
    matches: Optional[bool] = None
    if args.verify:
        general = volume(
            Stratum([1] * (2 * args.genus - 2)),
            max_weight=args.max_weight,
            threads=args.threads,
        ).value
        matches = general == val
    if args.format == "exact":
        print(val)
    elif args.format == "decimal":
        print(_decimal_str(val, args.digits))
    else:
        q, e = val.monomial()
        record = {
            "genus": args.genus,
            "num": str(q.numerator),
            "den": str(q.denominator),
            "pi_exp": e,
        }
        if matches is not None:
            record["matches_general_pipeline"] = matches
        print(json.dumps(record, sort_keys=True))
        return 0 if matches in (None, True) else 1
    if matches is not None:
        print(f"matches general pipeline: {'yes' if matches else 'no'}")
        if not matches:
            return 1
    return 0


def _cmd_table(args) -> int:
    rows = []
    for total in range(2, args.max_size + 1, 2):
        genus_rows = []
        for m in partitions_of_size(total):
            res = volume(Stratum(m), max_weight=args.max_weight, threads=args.threads)
            genus_rows.append(res)
        rows.append((total, genus_rows))
    if args.format == "json":
        payload = []
        for total, genus_rows in rows:
            for res in genus_rows:
                q, e = res.value.monomial()
                payload.append(
                    {
                        "stratum": res.stratum.key,
                        "num": str(q.numerator),
                        "den": str(q.denominator),
                        "pi_exp": e,
                        "prediction": str(res.prediction),
                        "relative_error": str(res.relative_error),
                    }
                )
        print(json.dumps(payload, sort_keys=True))
        return 0
    for total, genus_rows in rows:
        g = total // 2 + 1
        for res in genus_rows:
            if args.format == "decimal":
                shown = _decimal_str(res.value, args.digits)
            else:
                shown = str(res.value)
            print(
                f"H({','.join(map(str, res.stratum.degrees))})\t{shown}\t"
                f"prediction {res.prediction}\trel.err {res.relative_error}"
            )
        smallest = min(genus_rows, key=lambda r: abs(r.relative_error))
        largest = max(genus_rows, key=lambda r: abs(r.relative_error))
        expected = (
            smallest.stratum.stripped == tuple([1] * total)
            and largest.stratum.stripped == (total,)
        )
        print(
            f"# g={g}: smallest |rel.err| at {smallest.stratum}, largest at "
            f"{largest.stratum} (principal..minimal ordering: {'yes' if expected else 'no'})"
        )
    return 0


def _parse_zeros(text: Optional[str]) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise InvalidStratumError(f"cannot parse zero indices {text!r}") from exc


def _cmd_sv(args) -> int:
    st = parse_stratum(args.stratum)
    zeros = _parse_zeros(args.zeros)
    kw = {"max_weight": args.max_weight, "threads": args.threads}
    kind = args.kind
    if kind == "sc":
        if len(zeros) != 2:
            raise InvalidStratumError("--kind sc needs --zeros i,j")
        res = siegel_veech.sc_constant(st, *zeros, **kw)
    elif kind == "sc2":
        if st.stripped != tuple([1] * (2 * st.genus - 2)):
            raise InvalidStratumError("--kind sc2 needs a principal stratum 1,...,1")
        res = siegel_veech.sc2_principal(st.genus, **kw)
    elif kind == "loop":
        if len(zeros) != 1:
            raise InvalidStratumError("--kind loop needs --zeros i")
        res = siegel_veech.loop_constant(st, zeros[0], **kw)
    elif kind == "loop_per_angle":
        if len(zeros) != 1 or args.angle is None:
            raise InvalidStratumError("--kind loop_per_angle needs --zeros i and --angle j")
        res = siegel_veech.loop_per_angle(st, zeros[0], args.angle, **kw)
    elif kind == "cyl":
        if len(zeros) != 2:
            raise InvalidStratumError("--kind cyl needs --zeros i,j")
        res = siegel_veech.cyl_constant(st, *zeros, **kw)
    elif kind == "handle":
        if len(zeros) != 1:
            raise InvalidStratumError("--kind handle needs --zeros i")
        res = siegel_veech.handle_constant(st, zeros[0], **kw)
    elif kind == "cyl1":
        res = siegel_veech.cyl1_total(st, **kw)
    else:  # area1
        res = siegel_veech.area1_constant(st, **kw)

    exp = None if res.value.is_zero() else res.pi_exponent
    deviation = (
        "n/a"
        if res.predictor == 0 or res.value.is_zero()
        else _ratio_decimal(res.value, res.predictor)
    )
    if args.format == "json":
        record = {
            "kind": res.kind,
            "stratum": ",".join(map(str, res.stratum.degrees)),
            "value": str(res.value),
            "pi_exp": exp,
            "predictor": str(res.predictor),
            "relative_deviation": deviation,
            "multiple_components_possible": res.multiple_components_possible,
        }
        if res.zeros:
            record["zeros"] = list(res.zeros)
        if res.angle is not None:
            record["angle"] = res.angle
        print(json.dumps(record, sort_keys=True))
        return 0
    shown = _decimal_str(res.value, args.digits) if args.format == "decimal" else str(res.value)
    print(f"value: {shown}")
    print(f"pi exponent: {'none (zero value)' if exp is None else exp}")
    print(f"predictor: {res.predictor}")
    print(f"relative deviation: {deviation}")
    if res.multiple_components_possible:
        print("warning: stratum may be disconnected; volumes span all components")
    return 0


def _cmd_selftest(args) -> int:
    ok, lines = run_selftest(threads=args.threads, max_weight=args.max_weight)
    for line in lines:
        print(line)
    print("selftest: " + ("all criteria passed" if ok else "FAILURES present"))
    return 0 if ok else 4


# -- argument plumbing -------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mvvol",
        description="Exact Masur-Veech volumes of strata of abelian differentials.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("exact", "decimal", "json"), default="exact")
        p.add_argument("--digits", type=int, default=50, help="decimal digits (<= 100)")
        p.add_argument("--cache", default=None, help="JSON volume cache path")
        p.add_argument("--max-weight", type=int, default=volumes.DEFAULT_MAX_WEIGHT,
                       help="feasibility bound on sum of (m_i + 1)")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--verify", action="store_true",
                       help="cross-check against the independent pipeline where available")

    p_volume = sub.add_parser("volume", help="volume of one stratum")
    p_volume.add_argument("stratum")
    common(p_volume)
    p_volume.set_defaults(func=_cmd_volume)

    p_principal = sub.add_parser("principal", help="principal-stratum volume by closed form")
    p_principal.add_argument("genus", type=int)
    common(p_principal)
    p_principal.set_defaults(func=_cmd_principal)

    p_table = sub.add_parser("table", help="volumes for all strata with 2g-2 <= max-size")
    p_table.add_argument("--max-size", type=int, default=6)
    common(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_sv = sub.add_parser("sv", help="Siegel-Veech constants from volume ratios")
    p_sv.add_argument("stratum")
    p_sv.add_argument(
        "--kind",
        required=True,
        choices=("sc", "sc2", "loop", "loop_per_angle", "cyl", "handle", "cyl1", "area1"),
    )
    p_sv.add_argument("--zeros", default=None, help="1-based zero indices i or i,j")
    p_sv.add_argument("--angle", type=int, default=None)
    common(p_sv)
    p_sv.set_defaults(func=_cmd_sv)

    p_self = sub.add_parser("selftest", help="run the built-in oracle suite")
    common(p_self)
    p_self.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cache_path = _cache_path(args.cache)
    try:
        if cache_path:
            load_cache(cache_path)
        code = args.func(args)
        if cache_path:
            save_cache(cache_path)
        return code
    except InfeasibleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InvalidStratumError, CacheError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
