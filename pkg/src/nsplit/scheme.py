"""Arithmetic over (n, m) split schemes.

A scheme (n, m) splits a file into n module files so that any m of them
recover the original. Everything here is exact: integer counts and
``fractions.Fraction`` ratios, never floats, so that identities between
related schemes hold bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class SchemeParams:
    """Scheme parameters: n modules, any m of which suffice to recover."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"module count n must be >= 1, got {self.n}")
        if not 1 <= self.m <= self.n:
            raise ValueError(
                f"threshold m must satisfy 1 <= m <= n, got m={self.m}, n={self.n}"
            )


@dataclass(frozen=True)
class SchemeCharacteristics:
    """Quantities derived from (n, m).

    big_r: number of elements the file is cut into.
    k: elements stored in each module.
    redundancy_z: total stored size over original size (an integer, n-m+1).
    module_ratio_ml: one module's size over the original size, exact.
    min_modules_d: fewest modules that can ever suffice for recovery.
    """

    big_r: int
    k: int
    redundancy_z: int
    module_ratio_ml: Fraction
    min_modules_d: int


@dataclass(frozen=True)
class SavingsReport:
    """Percentage gains of a scheme over mirroring the whole file n times."""

    pr1_percent: Fraction  # extra capacity stored on n equal media
    pr2_percent: Fraction  # traffic saved per stored copy


def derive_characteristics(params: SchemeParams) -> SchemeCharacteristics:
    """Compute R, K, Z, ml and D for a scheme.

    Each element must appear in n-m+1 modules, so the table of element
    placements has lcm(n, n-m+1) cells: R = n/gcd(n, n-m+1) elements and
    K = (n-m+1)/gcd(n, n-m+1) columns. D = ceil(n / (n-m+1)) is the
    fewest modules whose K·D cells can reach all R elements.
    """
    n, m = params.n, params.m
    z = n - m + 1
    g = gcd(n, z)
    return SchemeCharacteristics(
        big_r=n // g,
        k=z // g,
        redundancy_z=z,
        module_ratio_ml=Fraction(z, n),
        min_modules_d=-(-n // z),
    )


def is_similar(a: SchemeParams, b: SchemeParams) -> bool:
    """True iff the schemes have equal n/(m-1) ratios.

    Compared cross-multiplied so m = 1 needs no special case: all (n, 1)
    schemes count as mutually similar and similar to nothing else.
    """
    return a.n * (b.m - 1) == b.n * (a.m - 1)


def is_base(params: SchemeParams) -> bool:
    """True iff no similar scheme has a smaller n, i.e. gcd(n, m-1) = 1."""
    return gcd(params.n, params.m - 1) == 1


def base_of(params: SchemeParams) -> SchemeParams:
    """The smallest scheme similar to this one."""
    g = gcd(params.n, params.m - 1)
    return SchemeParams(params.n // g, (params.m - 1) // g + 1)


def scale(base: SchemeParams, scale_factor: int) -> SchemeParams:
    """Scale a scheme within its similarity family.

    Multiplies both n and m-1 by scale_factor, preserving the n/(m-1)
    ratio and therefore K, R, ml and D.
    """
    if scale_factor < 1:
        raise ValueError(f"scale factor must be >= 1, got {scale_factor}")
    return SchemeParams(scale_factor * base.n, scale_factor * (base.m - 1) + 1)


def family_members(params: SchemeParams, max_n: int) -> list[SchemeParams]:
    """All schemes similar to ``params`` with n <= max_n, smallest first."""
    base = base_of(params)
    members = []
    factor = 1
    while factor * base.n <= max_n:
        members.append(scale(base, factor))
        factor += 1
    return members


def savings(params: SchemeParams) -> SavingsReport:
    """Capacity and traffic savings versus full replication.

    Pr1 = (R-K)/K = (m-1)/(n-m+1): how much more data fits on n equal
    media than under mirroring. Pr2 = (R-K)/R = (m-1)/n: how much less
    data each storage target receives than a full copy.
    """
    n, m = params.n, params.m
    return SavingsReport(
        pr1_percent=Fraction(100 * (m - 1), n - m + 1),
        pr2_percent=Fraction(100 * (m - 1), n),
    )
