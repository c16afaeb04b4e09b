"""
Evaluation of species expressions to truncated cycle indices.

One-sort expressions (X only) evaluate to PSeries, two-sort expressions
(X and Y) to BiSeries. Results are memoized per (expression, bounds).
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from src.algebra.multisort import (
    BiSeries,
    bi_linear_combine,
    bi_multiply,
    bi_one,
    bi_plethysm,
    bi_plethystic_exp,
)
from src.algebra.partitions import EMPTY, Partition
from src.algebra.symfunc import (
    FixFn,
    PSeries,
    complete,
    complete_series,
    fix_counts,
    from_fix,
    linear_combine,
    multiply,
    one,
    p1_derivative,
    plethysm,
    plethystic_exp,
    power_sum,
    zero,
)
from src.species.expr import (
    SORT_Y,
    Compose,
    Derivative,
    Difference,
    NonemptySet,
    One,
    Product,
    SetOfSize,
    SetSpecies,
    Singleton,
    SpeciesExpr,
    Sum,
    Zero,
)
from src.utils.logging import get_logger

logger = get_logger("cycle_index")


class SortError(ValueError):
    pass


def _check_bound(name: str, value: int):
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")


@lru_cache(maxsize=4096)
def _one_sort(expr: SpeciesExpr, bound: int) -> PSeries:
    if isinstance(expr, Zero):
        return zero(bound)
    if isinstance(expr, One):
        return one(bound)
    if isinstance(expr, Singleton):
        if expr.sort == SORT_Y:
            raise SortError(f"Y appears in a one-sort expression at {expr.span}")
        return power_sum(1, bound)
    if isinstance(expr, SetSpecies):
        return complete_series(bound)
    if isinstance(expr, SetOfSize):
        return complete(expr.k, bound)
    if isinstance(expr, NonemptySet):
        return complete_series(bound) - one(bound)
    if isinstance(expr, Sum):
        return linear_combine([(1, _one_sort(expr.left, bound)), (1, _one_sort(expr.right, bound))])
    if isinstance(expr, Difference):
        return linear_combine([(1, _one_sort(expr.left, bound)), (-1, _one_sort(expr.right, bound))])
    if isinstance(expr, Product):
        return multiply(_one_sort(expr.left, bound), _one_sort(expr.right, bound))
    if isinstance(expr, Derivative):
        series = _one_sort(expr.operand, bound + expr.order)
        for _ in range(expr.order):
            series = p1_derivative(series)
        return series
    if isinstance(expr, Compose):
        inner = _one_sort(expr.inner, bound)
        if isinstance(expr.outer, SetSpecies):
            return plethystic_exp(inner)
        if isinstance(expr.outer, NonemptySet):
            return plethystic_exp(inner) - one(bound)
        outer = _outer_series(expr.outer, bound)
        return plethysm(outer, inner).truncate(bound)
    raise TypeError(f"not a species expression: {expr!r}")


def _outer_series(outer: SpeciesExpr, bound: int) -> PSeries:
    """Outer argument of a composition: exact polynomial when strictly finite."""
    if SORT_Y in outer.sorts():
        raise SortError(f"the outer species of a composition must not mention Y: {outer.pretty()}")
    degree = outer.degree()
    return _one_sort(outer, bound if degree is None else degree)


@lru_cache(maxsize=4096)
def _two_sort(expr: SpeciesExpr, bound_x: int, bound_y: int) -> BiSeries:
    if SORT_Y not in expr.sorts():
        return BiSeries.from_x(_one_sort(expr, bound_x), bound_y)
    if isinstance(expr, Singleton):
        return BiSeries({(EMPTY, Partition((1,))): 1}, bound_x, bound_y)
    if isinstance(expr, (Sum, Difference, Product)):
        left = _two_sort(expr.left, bound_x, bound_y)
        right = _two_sort(expr.right, bound_x, bound_y)
        if isinstance(expr, Product):
            return bi_multiply(left, right)
        sign = 1 if isinstance(expr, Sum) else -1
        return bi_linear_combine([(1, left), (sign, right)])
    if isinstance(expr, Derivative):
        raise SortError(f"derivative of a two-sort expression is not supported: {expr.pretty()}")
    if isinstance(expr, Compose):
        inner = _two_sort(expr.inner, bound_x, bound_y)
        if isinstance(expr.outer, SetSpecies):
            return bi_plethystic_exp(inner)
        if isinstance(expr.outer, NonemptySet):
            return bi_plethystic_exp(inner) - bi_one(bound_x, bound_y)
        outer = _outer_series(expr.outer, bound_x + bound_y)
        return bi_plethysm(outer, inner)
    raise TypeError(f"not a species expression: {expr!r}")


def one_sort_cycle_index(expr: SpeciesExpr, bound: int) -> PSeries:
    _check_bound("bound", bound)
    return _one_sort(expr, bound)


def two_sort_cycle_index(expr: SpeciesExpr, bound_x: int, bound_y: int) -> BiSeries:
    _check_bound("bound_x", bound_x)
    _check_bound("bound_y", bound_y)
    return _two_sort(expr, bound_x, bound_y)


def cycle_index(expr: SpeciesExpr, bound_x: int, bound_y: Optional[int] = None) -> Union[PSeries, BiSeries]:
    """
    Z_expr truncated at bound_x (and bound_y for the y sort).

    Without bound_y the expression must be one-sort and a PSeries is
    returned; with bound_y the result is always a BiSeries.
    """
    if bound_y is None:
        if SORT_Y in expr.sorts():
            raise SortError(f"{expr.pretty()} mentions Y; give a y bound for a two-sort cycle index")
        return one_sort_cycle_index(expr, bound_x)
    return two_sort_cycle_index(expr, bound_x, bound_y)


def clear_cache():
    _one_sort.cache_clear()
    _two_sort.cache_clear()


def species_fix(expr: SpeciesExpr, bound: int) -> FixFn:
    """fix F[λ] for |λ| ≤ bound, read off the cycle index."""
    fn = fix_counts(one_sort_cycle_index(expr, bound))
    fn.name = f"fix {expr.pretty()}"
    return fn


@dataclass(frozen=True)
class VirtualSpecies:
    """
    A (possibly virtual) one-sort species given either as an expression or
    as fix counts. Exactly one of expr and fix is set.
    """

    expr: Optional[SpeciesExpr] = None
    fix: Optional[FixFn] = None

    def __post_init__(self):
        if (self.expr is None) == (self.fix is None):
            raise ValueError("VirtualSpecies needs exactly one of expr and fix")

    @classmethod
    def of(cls, value: Union[SpeciesExpr, FixFn, "VirtualSpecies"]) -> "VirtualSpecies":
        if isinstance(value, VirtualSpecies):
            return value
        if isinstance(value, FixFn):
            return cls(fix=value)
        return cls(expr=value)

    @property
    def name(self) -> str:
        return self.expr.pretty() if self.expr is not None else self.fix.name

    def degree(self) -> Optional[int]:
        return self.expr.degree() if self.expr is not None else self.fix.degree

    def cycle_index(self, bound: int) -> PSeries:
        if self.expr is not None:
            return one_sort_cycle_index(self.expr, bound)
        return from_fix(self.fix, bound)

    def fix_fn(self, bound: int) -> FixFn:
        if self.fix is not None:
            return self.fix
        return species_fix(self.expr, bound)
