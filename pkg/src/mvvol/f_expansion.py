r"""Degree-k insertion polynomials in the power-sum basis.

capital_f(k) expands the weight-(k+1) generator used by the volume pipeline
as an exact linear combination of power sums p_lam:

    capital_f(k) = sum over partitions lam of weight k + 1 of
                   (-k)^(len(lam) - 1) / prod_i M_i(lam)!  *  p_lam,

where M_i(lam) is the multiplicity of i in lam.  For k = 1 the only
weight-2 partition is (1), giving capital_f(1) = p_(1); this degenerate
degree is what a stratum's marked-point-free torus normalization rests on.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .combinatorics import Partition, partitions_of_weight

__all__ = ["capital_f"]


@lru_cache(maxsize=None)
def _capital_f_items(k: int) -> tuple[tuple[Partition, Fraction], ...]:
    items = []
    for lam in partitions_of_weight(k + 1):
        denom = 1
        for mult in lam.multiplicities().values():
            for j in range(2, mult + 1):
                denom *= j
        coeff = Fraction((-k) ** (len(lam) - 1), denom)
        items.append((lam, coeff))
    return tuple(items)


def capital_f(k: int) -> dict[Partition, Fraction]:
    """Coefficient map partition -> rational for the degree-k generator."""
    if k < 1:
        raise ValueError("capital_f is defined for k >= 1")
    return dict(_capital_f_items(k))
