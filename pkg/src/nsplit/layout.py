"""Element placement: which elements of the file land in which module.

The placement table has one row per module and K columns. Cells are
filled column-major with each element id written in a run of n-m+1
consecutive cells, which puts every element into exactly n-m+1 distinct
rows; any m rows then jointly contain every element, because an element
is absent from only m-1 rows.

The optimized ordering permutes the rows (and rotates ids inside each
row) so that any D = ceil(n/(n-m+1)) consecutive modules cover every
element and every column position runs through all R element ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .scheme import SchemeParams, derive_characteristics


class UnsupportedSchemeError(Exception):
    """The module-reordering formula did not yield a permutation for this scheme."""


class LayoutConsistencyError(Exception):
    """Internal mismatch between the module reordering and the rotation rule."""


@dataclass(frozen=True)
class LayoutTable:
    """Per-module rows of element ids (each id in 1..R).

    ``rows`` is indexed 0-based; position i of the scheme is ``rows[i-1]``.
    """

    params: SchemeParams
    rows: tuple[tuple[int, ...], ...]
    optimized: bool = False


@dataclass(frozen=True)
class ModuleOrdering:
    """Module permutation: ``order[i-1]`` is the old module placed at position i."""

    params: SchemeParams
    order: tuple[int, ...]


@lru_cache(maxsize=None)
def build_table(params: SchemeParams) -> LayoutTable:
    """Fill the n x K table column-major, each element id n-m+1 cells at a time."""
    chars = derive_characteristics(params)
    n = params.n
    z = n - params.m + 1
    rows = [[0] * chars.k for _ in range(n)]
    for cell in range(n * chars.k):
        rows[cell % n][cell // n] = cell // z + 1
    return LayoutTable(params=params, rows=tuple(tuple(row) for row in rows))


def element_at(params: SchemeParams, i: int, j: int) -> int:
    """Element id at row i, column j (1-based) of the unoptimized table.

    Closed form of the column-major fill:
    floor(((j-1)n + i - 1) / (n-m+1)) + 1.
    """
    chars = derive_characteristics(params)
    if not 1 <= i <= params.n:
        raise IndexError(f"row index {i} out of range 1..{params.n}")
    if not 1 <= j <= chars.k:
        raise IndexError(f"column index {j} out of range 1..{chars.k}")
    return ((j - 1) * params.n + i - 1) // (params.n - params.m + 1) + 1


def _old_module_index(params: SchemeParams, position: int) -> int:
    # ((n-m+1)(i-1) + 1 + floor((i-1) gcd(n, m-1) / n)) mod n, residue 0 -> n
    n, m = params.n, params.m
    g = gcd(n, m - 1)
    value = ((n - m + 1) * (position - 1) + 1 + (position - 1) * g // n) % n
    return value or n


@lru_cache(maxsize=None)
def optimize_ordering(params: SchemeParams) -> ModuleOrdering:
    """Module permutation under which any D consecutive modules recover the file.

    Position 1 keeps module 1; position i takes the module n-m+1 further
    on (cyclically), with a gcd(n, m-1)-dependent correction that keeps
    the map a permutation for non-base schemes. Raises
    UnsupportedSchemeError if the formula fails to permute 1..n.
    """
    n = params.n
    order = tuple(_old_module_index(params, i) for i in range(1, n + 1))
    if sorted(order) != list(range(1, n + 1)):
        raise UnsupportedSchemeError(
            f"module reordering is not a permutation for scheme ({n}, {params.m})"
        )
    return ModuleOrdering(params=params, order=order)


def _rotate_to(sorted_row: list[int], target: int, position: int) -> tuple[int, ...]:
    if target not in sorted_row:
        raise LayoutConsistencyError(
            f"element {target} is not in the module assigned to position {position}"
        )
    at = sorted_row.index(target)
    return tuple(sorted_row[at:] + sorted_row[:at])


def apply_optimization(table: LayoutTable, ordering: ModuleOrdering) -> LayoutTable:
    """Reorder rows and rotate each so column positions cover all elements.

    New row i holds the elements of old row ``ordering.order[i-1]`` in
    ascending order rotated to start at element ((i-1) mod R) + 1, so the
    first column reads 1, 2, ..., R cyclically.
    """
    if table.optimized:
        raise ValueError("table is already optimized")
    if ordering.params != table.params:
        raise ValueError("ordering was built for a different scheme")
    big_r = derive_characteristics(table.params).big_r
    new_rows = []
    for i, old_index in enumerate(ordering.order, start=1):
        row = sorted(table.rows[old_index - 1])
        new_rows.append(_rotate_to(row, (i - 1) % big_r + 1, i))
    return LayoutTable(params=table.params, rows=tuple(new_rows), optimized=True)


def row_elements(params: SchemeParams, position: int, optimized: bool = False) -> tuple[int, ...]:
    """Elements of the module at ``position``, in payload order.

    Computed straight from the formulas, without materializing the whole
    table; agrees with build_table / apply_optimization row for row.
    """
    chars = derive_characteristics(params)
    if not 1 <= position <= params.n:
        raise IndexError(f"position {position} out of range 1..{params.n}")
    if not optimized:
        return tuple(element_at(params, position, j) for j in range(1, chars.k + 1))
    old = _old_module_index(params, position)
    row = sorted(element_at(params, old, j) for j in range(1, chars.k + 1))
    return _rotate_to(row, (position - 1) % chars.big_r + 1, position)


def min_covering_consecutive(table: LayoutTable, cyclic: bool = False) -> int:
    """Smallest d such that every d consecutive rows jointly hold all elements.

    Windows slide over start positions 1..n-d+1; with cyclic=True they
    also wrap around from the last module back to the first. The result
    equals the scheme's min_modules_d.
    """
    if not table.optimized:
        raise ValueError("consecutive-window coverage is defined for optimized tables")
    n = table.params.n
    full = frozenset(range(1, derive_characteristics(table.params).big_r + 1))
    row_sets = [frozenset(row) for row in table.rows]
    for d in range(1, n + 1):
        starts = range(n) if cyclic else range(n - d + 1)
        if all(
            frozenset().union(*(row_sets[(s + o) % n] for o in range(d))) >= full
            for s in starts
        ):
            return d
    raise AssertionError("unreachable: the full table covers every element")
