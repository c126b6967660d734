r"""Masur-Veech volumes of strata of abelian differentials.

A stratum is the multiset of zero degrees (m_1, ..., m_n), nonnegative with
even sum; degree-0 entries are marked points and drop out of every volume.
The normalized volume of the unit-area hypersurface is

    volume(H(m)) = 2 * c_value(m_1 + 1, ..., m_n + 1),

    c_value(a) = 1 / (|a|! * prod a_i) * multi_bracket expansion of the
                 degree-a_i generators capital_f(a_1), ..., capital_f(a_n),

expanded multilinearly over the power-sum supports with identical partition
tuples grouped before Wick evaluation.  The result is always a single
positive rational multiple of pi^(2g) with g = (sum m_i + 2) / 2.

The genus-1 edge cases H() and H(0, ..., 0) are normalized through
c_value((1,)) = pi^2/6, giving the torus volume pi^2/3.

principal_volume(g) evaluates the stratum with 2g - 2 simple zeros by an
independent closed form: with n = 2g - 2,

    c = n! * sum over even partitions mu of n + 2 of
        (-1)^(len(mu)-1) / ((2n - len(mu) + 2)! * prod_i M_i(mu)!)
        * prod_i (2 mu_i - 3)!! * frak_z(mu_i),

and the volume is 2c.  Agreement with the general pipeline is a strong
cross-check of the whole correlator stack (it is exercised in the tests).

prediction(s) is the large-genus approximation 4 / prod (m_i + 1); each
VolumeResult carries the signed relative deviation of the exact volume from
it, evaluated to 15 significant digits.

Computation cost grows quickly with sum (m_i + 1); volume() refuses strata
above a configurable bound (default 14) with a dedicated error so callers
can distinguish bad input from an oversized request.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from itertools import product
from typing import Iterable, Union

from . import bracket, wick
from .combinatorics import Partition, partitions_of_size
from .exact_arith import PiValue, frak_z
from .f_expansion import capital_f

__all__ = [
    "InvalidStratumError",
    "InfeasibleSizeError",
    "Stratum",
    "VolumeResult",
    "c_value",
    "volume",
    "principal_volume",
    "prediction",
    "clear_caches",
]

DEFAULT_MAX_WEIGHT = 14


class InvalidStratumError(ValueError):
    """Degrees are not a valid stratum (negative entries or odd sum)."""


class InfeasibleSizeError(RuntimeError):
    """Requested stratum exceeds the configured feasibility bound."""

    def __init__(self, weight: int, limit: int):
        super().__init__(
            f"sum of (m_i + 1) is {weight}, above the feasibility bound {limit}; "
            f"raise the bound explicitly to force the computation"
        )
        self.weight = weight
        self.limit = limit


class Stratum:
    """Multiset of zero degrees, canonically sorted in decreasing order."""

    __slots__ = ("degrees",)

    def __init__(self, degrees: Iterable[int]):
        degs = []
        for d in degrees:
            if not isinstance(d, int) or d < 0:
                raise InvalidStratumError(f"zero degrees must be nonnegative integers: {d!r}")
            degs.append(d)
        if sum(degs) % 2 != 0:
            raise InvalidStratumError(f"degree sum must be even: {sorted(degs, reverse=True)}")
        self.degrees = tuple(sorted(degs, reverse=True))

    @property
    def stripped(self) -> tuple[int, ...]:
        """Positive degrees only; marked points do not affect the volume."""
        return tuple(d for d in self.degrees if d > 0)

    @property
    def genus(self) -> int:
        return (sum(self.degrees) + 2) // 2

    @property
    def zero_count(self) -> int:
        return len(self.stripped)

    @property
    def dim_complex(self) -> int:
        return 2 * self.genus + self.zero_count - 1

    @property
    def key(self) -> str:
        return ",".join(str(d) for d in self.stripped)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Stratum):
            return self.degrees == other.degrees
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.degrees)

    def __repr__(self) -> str:
        return f"H({','.join(str(d) for d in self.degrees)})"


StratumLike = Union[Stratum, Iterable[int]]


def _as_stratum(s: StratumLike) -> Stratum:
    return s if isinstance(s, Stratum) else Stratum(s)


@dataclass(frozen=True)
class VolumeResult:
    """Exact volume of a stratum plus its large-genus comparison data."""

    stratum: Stratum
    value: PiValue
    prediction: Fraction
    relative_error: Decimal
    terms_evaluated: int
    elapsed: float

    @property
    def pi_exponent(self) -> int:
        return self.value.monomial()[1]


_C_CACHE: dict[tuple[int, ...], PiValue] = {}
_VOLUME_CACHE: dict[tuple[int, ...], PiValue] = {}


def c_value(m: Iterable[int], threads: int = 1) -> PiValue:
    """Normalized correlator of the incremented degree multiset.

    m must be a nonempty multiset of positive integers.  Memoized; the
    multilinear expansion groups equal partition tuples so each distinct
    Wick evaluation runs once.
    """
    key = tuple(sorted((int(v) for v in m), reverse=True))
    if not key:
        raise ValueError("c_value of an empty multiset")
    if key[-1] <= 0:
        raise ValueError(f"entries must be positive: {key}")
    cached = _C_CACHE.get(key)
    if cached is not None:
        return cached

    supports = [sorted(capital_f(k).items()) for k in key]
    grouped: dict[tuple[Partition, ...], Fraction] = {}
    for choice in product(*supports):
        tup = tuple(sorted(lam for lam, _ in choice))
        coeff = Fraction(1)
        for _, q in choice:
            coeff *= q
        grouped[tup] = grouped.get(tup, Fraction(0)) + coeff

    total = PiValue.zero()
    for tup, coeff in grouped.items():
        if coeff:
            total += wick.multi_bracket(tup, threads=threads) * coeff

    denom = math.factorial(sum(key))
    for v in key:
        denom *= v
    value = total / denom
    _C_CACHE[key] = value
    return value


def prediction(s: StratumLike) -> Fraction:
    """Large-genus volume approximation 4 / prod (m_i + 1)."""
    st = _as_stratum(s)
    denom = 1
    for d in st.stripped:
        denom *= d + 1
    return Fraction(4, denom)


def _relative_error(value: PiValue, predicted: Fraction, digits: int = 15) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits + 15
        exact = value.to_decimal(digits + 10)
        pred = Decimal(predicted.numerator) / Decimal(predicted.denominator)
        eps = exact / pred - 1
        ctx.prec = digits
        return +eps


def volume(
    s: StratumLike,
    max_weight: int = DEFAULT_MAX_WEIGHT,
    threads: int = 1,
) -> VolumeResult:
    """Exact normalized volume of the stratum with the given zero degrees.

    Raises InvalidStratumError for bad degrees and InfeasibleSizeError when
    sum (m_i + 1) over positive degrees exceeds max_weight.
    """
    st = _as_stratum(s)
    stripped = st.stripped
    start = time.perf_counter()
    before = wick.term_count()

    cached = _VOLUME_CACHE.get(stripped)
    if cached is not None:
        value = cached
    else:
        if stripped:
            weight = sum(d + 1 for d in stripped)
            if weight > max_weight:
                raise InfeasibleSizeError(weight, max_weight)
            value = 2 * c_value([d + 1 for d in stripped], threads=threads)
        else:
            value = 2 * c_value((1,))  # torus convention: H() and H(0,...)
        q, e = value.monomial()
        if q <= 0 or e != 2 * st.genus:
            raise AssertionError(f"volume of {st} violates the pi^(2g) form: {value}")
        _VOLUME_CACHE[stripped] = value

    pred = prediction(st)
    return VolumeResult(
        stratum=st,
        value=value,
        prediction=pred,
        relative_error=_relative_error(value, pred),
        terms_evaluated=wick.term_count() - before,
        elapsed=time.perf_counter() - start,
    )


def _odd_double_factorial(k: int) -> int:
    """(k)!! for odd k >= -1; (-1)!! = 1."""
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def principal_volume(g: int) -> PiValue:
    """Volume of the stratum with 2g - 2 simple zeros, by the closed form."""
    if g < 2:
        raise ValueError("principal_volume needs genus g >= 2")
    n = 2 * g - 2
    total = PiValue.zero()
    for lam in partitions_of_size((n + 2) // 2):
        mu = Partition(tuple(2 * p for p in lam))
        ell = len(mu)
        denom = math.factorial(2 * n - ell + 2)
        for mult in mu.multiplicities().values():
            denom *= math.factorial(mult)
        coeff = Fraction((-1) ** (ell - 1), denom)
        term = PiValue.from_rational(coeff)
        for p in mu:
            term = term * (frak_z(p) * _odd_double_factorial(2 * p - 3))
        total += term
    return total * (2 * math.factorial(n))


def clear_caches() -> None:
    """Drop every memo table in the pipeline (volumes, Wick, brackets)."""
    _C_CACHE.clear()
    _VOLUME_CACHE.clear()
    wick.clear_cache()
    bracket.clear_cache()


def volume_cache() -> dict[tuple[int, ...], PiValue]:
    """Live handle on the stratum -> volume memo (used by the CLI cache)."""
    return _VOLUME_CACHE
