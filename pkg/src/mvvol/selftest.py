r"""Built-in oracle suite: one check per shipped acceptance criterion.

Each check returns (ok, detail) where detail is deterministic text (never
timings), so the rendered report is byte-identical across repeated runs,
thread counts, and cache states.  The CLI `selftest` verb prints one
PASS/FAIL line per check; the test suite drives the same functions.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction
from typing import Callable

from .bracket import error_term, single_bracket
from .combinatorics import (
    SetPartition,
    complementary_partitions,
    partitions_of_size,
    set_partitions,
)
from .exact_arith import PiValue
from .siegel_veech import (
    area1_constant,
    cyl1_total,
    cyl_constant,
    handle_constant,
    loop_constant,
    loop_per_angle,
    sc2_principal,
    sc_constant,
)
from .volumes import (
    DEFAULT_MAX_WEIGHT,
    Stratum,
    clear_caches,
    principal_volume,
    volume,
)
from .wick import multi_bracket

__all__ = ["run_selftest", "CHECKS"]


def _mono(num: int, den: int, exp: int) -> PiValue:
    return PiValue([(exp, Fraction(num, den))])


def _check_minimal(threads: int, max_weight: int) -> tuple[bool, str]:
    clear_caches()
    t0 = time.perf_counter()
    res = volume(Stratum([2]), max_weight=max_weight, threads=threads)
    fast = time.perf_counter() - t0 < 1.0
    ok = res.value == _mono(1, 120, 4) and fast
    return ok, f"volume(H(2)) = {res.value}"


def _check_principal_two_ways(threads: int, max_weight: int) -> tuple[bool, str]:
    t0 = time.perf_counter()
    general = volume(Stratum([1, 1]), max_weight=max_weight, threads=threads).value
    closed = principal_volume(2)
    fast = time.perf_counter() - t0 < 1.0
    ok = general == closed == _mono(1, 135, 4) and fast
    return ok, f"volume(H(1,1)) = {general} by both pipelines"


def _check_principal_equality(threads: int, max_weight: int) -> tuple[bool, str]:
    t0 = time.perf_counter()
    results = []
    for g in (3, 4):
        general = volume(Stratum([1] * (2 * g - 2)), max_weight=max_weight, threads=threads).value
        results.append(general == principal_volume(g))
    within = time.perf_counter() - t0 < 600.0
    return all(results) and within, "closed form matches general pipeline at g=3,4"


def _check_grading(threads: int, max_weight: int) -> tuple[bool, str]:
    ok = True
    for total in (2, 4, 6):
        for m in partitions_of_size(total):
            val = volume(Stratum(m), max_weight=max_weight, threads=threads).value
            q, e = val.monomial()
            ok = ok and q > 0 and e == total + 2
    return ok, "each volume with 2g-2 <= 6 is a positive rational times pi^(2g)"


def _check_error_ordering(threads: int, max_weight: int) -> tuple[bool, str]:
    principal = volume(Stratum([1, 1, 1, 1]), max_weight=max_weight, threads=threads)
    minimal = volume(Stratum([4]), max_weight=max_weight, threads=threads)
    ok = abs(principal.relative_error) < abs(minimal.relative_error)
    return ok, (
        f"at g=3: |rel.err|(H(1,1,1,1)) = {abs(principal.relative_error)} < "
        f"{abs(minimal.relative_error)} = |rel.err|(H(4))"
    )


def _check_minimal_trend(threads: int, max_weight: int) -> tuple[bool, str]:
    ratios = []
    for g in (2, 3, 4):
        val = volume(Stratum([2 * g - 2]), max_weight=max_weight, threads=threads).value
        ratios.append(float(val.to_decimal(30)) * (2 * g - 1) / 4)
    ok = all(0.55 < r < 1.0 for r in ratios) and ratios[0] < ratios[1] < ratios[2]
    shown = ", ".join(f"g={g}: {r:.4f}" for g, r in zip((2, 3, 4), ratios))
    return ok, f"volume(H(2g-2))*(2g-1)/4 increasing in (0.55, 1.0): {shown}"


def _check_sv_exactness(threads: int, max_weight: int) -> tuple[bool, str]:
    kw = {"max_weight": max_weight, "threads": threads}
    ok = sc_constant(Stratum([1, 1]), 1, 2, **kw).value == _mono(27, 8, 0)
    ok = ok and sc2_principal(2, **kw).value == _mono(5, 8, 0)
    ok = ok and sc_constant(Stratum([0, 2]), 1, 2, **kw).value == _mono(3, 1, 0)
    ok = ok and sc_constant(Stratum([0, 0]), 1, 2, **kw).value == _mono(1, 1, 0)
    ok = ok and loop_per_angle(Stratum([2]), 1, 1, **kw).value == _mono(20, 1, -2)
    ok = ok and cyl_constant(Stratum([1, 1]), 1, 2, **kw).value == _mono(15, 1, -2)
    ok = ok and handle_constant(Stratum([2]), 1, **kw).value == _mono(10, 1, -2)
    ok = ok and cyl1_total(Stratum([1, 1]), **kw).value == _mono(15, 1, -2)
    ok = ok and cyl1_total(Stratum([2]), **kw).value == _mono(10, 1, -2)
    ok = ok and area1_constant(Stratum([1, 1]), **kw).value == _mono(15, 4, -2)
    ok = ok and area1_constant(Stratum([2]), **kw).value == _mono(10, 3, -2)

    rational = [
        sc_constant(Stratum([1, 1]), 1, 2, **kw),
        sc_constant(Stratum([2, 1, 1]), 1, 2, **kw),
        sc_constant(Stratum([2, 2]), 1, 2, **kw),
        sc2_principal(2, **kw),
        sc2_principal(3, **kw),
    ]
    over_pi2 = [
        loop_per_angle(Stratum([3, 1]), 1, 1, **kw),
        loop_per_angle(Stratum([3, 1]), 1, 2, **kw),
        loop_constant(Stratum([4]), 1, **kw),
        loop_constant(Stratum([3, 1]), 1, **kw),
        cyl_constant(Stratum([2, 2]), 1, 2, **kw),
        cyl_constant(Stratum([3, 1]), 1, 2, **kw),
        handle_constant(Stratum([4]), 1, **kw),
        handle_constant(Stratum([3, 1]), 1, **kw),
        cyl1_total(Stratum([2, 2]), **kw),
        cyl1_total(Stratum([1, 1, 1, 1]), **kw),
        area1_constant(Stratum([3, 1]), **kw),
        area1_constant(Stratum([2, 1, 1]), **kw),
    ]
    ok = ok and all(r.pi_exponent == 0 for r in rational)
    ok = ok and all(r.value.is_zero() or r.pi_exponent == -2 for r in over_pi2)
    return ok, "sc(H(1,1)) = 27/8, sc2(g=2) = 5/8; exponent classes 0 and -2 as required"


def _check_decomposition(threads: int, max_weight: int) -> tuple[bool, str]:
    kw = {"max_weight": max_weight, "threads": threads}
    ok = True
    for total in (2, 4):
        for m in partitions_of_size(total):
            st = Stratum(m)
            n = st.zero_count
            acc = PiValue.zero()
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    acc += cyl_constant(st, i, j, **kw).value
                acc += handle_constant(st, i, **kw).value
            ok = ok and acc == cyl1_total(st, **kw).value
    return ok, "cyl1_total = sum of cyl pairs + handles, bit-exact, for 2g-2 <= 4"


def _joined(alpha_masks: tuple[int, ...], rho_masks: tuple[int, ...]) -> bool:
    comps = list(alpha_masks)
    for rm in rho_masks:
        merged = 0
        keep = []
        for c in comps:
            if c & rm:
                merged |= c
            else:
                keep.append(c)
        keep.append(merged)
        comps = keep
    return len(comps) == 1


def _check_cross_consistency(threads: int, max_weight: int) -> tuple[bool, str]:
    ok = True
    for s in range(1, 9):
        for lam in partitions_of_size(s):
            if multi_bracket([(v,) for v in lam], threads=threads) != single_bracket(lam):
                ok = False
    for n in range(1, 9):
        universe = list(set_partitions(n))
        masks = {p: tuple(sum(1 << (x - 1) for x in b) for b in p) for p in universe}
        by_len: dict[int, list[SetPartition]] = {}
        for p in universe:
            by_len.setdefault(len(p), []).append(p)
        for rho in universe:
            k = n + 1 - len(rho)
            rmask = masks[rho]
            want = {a for a in by_len.get(k, ()) if _joined(masks[a], rmask)}
            got = set(complementary_partitions(rho))
            if got != want:
                ok = False
    return ok, "single-part Wick merge <= 8 and complement enumeration vs filter N <= 8"


def _check_identities(threads: int, max_weight: int) -> tuple[bool, str]:
    ok = True
    for n in range(1, 10):
        parts = partitions_of_size(n)
        for k in range(1, n + 1):
            acc = Fraction(0)
            for lam in parts:
                if len(lam) != k:
                    continue
                denom = 1
                for mult in lam.multiplicities().values():
                    denom *= math.factorial(mult)
                acc += Fraction(math.factorial(k), denom)
            if acc != math.comb(n - 1, k - 1):
                ok = False
    bells = [sum(1 for _ in set_partitions(n)) for n in range(1, 7)]
    ok = ok and bells == [1, 2, 5, 15, 52, 203]
    return ok, "weighted composition identity k <= n <= 9; Bell counts 1..6"


def _check_tripwire(threads: int, max_weight: int) -> tuple[bool, str]:
    ok = True
    for s in range(2, 11):
        for lam in partitions_of_size(s):
            if lam[-1] < 2:
                continue
            bound = 2.0**40 * math.factorial(s - 1)
            if abs(error_term(lam).to_float()) > bound:
                ok = False
    return ok, "correction term stays below 2^40 (|m|-1)! for parts >= 2, |m| <= 10"


def _render_bundle(threads: int, max_weight: int) -> str:
    lines = []
    for total in (2, 4):
        for m in partitions_of_size(total):
            res = volume(Stratum(m), max_weight=max_weight, threads=threads)
            lines.append(f"{res.stratum} {res.value} {res.relative_error}")
    lines.append(str(sc_constant(Stratum([1, 1]), 1, 2, max_weight=max_weight, threads=threads).value))
    lines.append(str(cyl1_total(Stratum([2, 2]), max_weight=max_weight, threads=threads).value))
    return "\n".join(lines)


def _check_determinism(threads: int, max_weight: int) -> tuple[bool, str]:
    outputs = []
    for t in (1, 4, 16):
        clear_caches()
        cold = _render_bundle(t, max_weight)
        warm = _render_bundle(t, max_weight)
        outputs.extend((cold, warm))
    ok = len(set(outputs)) == 1
    return ok, "volume and SV reports byte-identical across threads 1/4/16, cold and warm"


CHECKS: list[tuple[str, Callable[[int, int], tuple[bool, str]]]] = [
    ("minimal stratum volume", _check_minimal),
    ("principal volume via two pipelines", _check_principal_two_ways),
    ("principal equality at g=3,4", _check_principal_equality),
    ("pi^(2g) grading for 2g-2 <= 6", _check_grading),
    ("error ordering at genus 3", _check_error_ordering),
    ("minimal-stratum ratio trend", _check_minimal_trend),
    ("Siegel-Veech exactness and exponent classes", _check_sv_exactness),
    ("cylinder decomposition", _check_decomposition),
    ("module cross-consistency", _check_cross_consistency),
    ("combinatorial identities", _check_identities),
    ("correction-term tripwire bound", _check_tripwire),
    ("determinism across threads and cache states", _check_determinism),
]


def run_selftest(threads: int = 1, max_weight: int = DEFAULT_MAX_WEIGHT) -> tuple[bool, list[str]]:
    """Run all checks; returns (all_passed, one report line per check)."""
    lines = []
    all_ok = True
    for idx, (title, fn) in enumerate(CHECKS, 1):
        ok, detail = fn(threads, max_weight)
        all_ok = all_ok and ok
        lines.append(f"{'PASS' if ok else 'FAIL'} criterion {idx:2d} ({title}): {detail}")
    return all_ok, lines
