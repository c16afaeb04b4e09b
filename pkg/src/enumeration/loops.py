"""
Removing loops by changing the out-set species.

A G-digraph with loops allowed whose out-set species is G_1 + G_1' has the
same isomorphism types as a loopless G-digraph; so loopless counts for G
come from any virtual G_1 with G_1 + G_1' = G. For G-graphs the analogous
equation is G_1 + G_1'' + G_1'''' + ... = G, solved by G - G''.
"""
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from src.algebra.partitions import Partition, augment
from src.algebra.symfunc import FixFn
from src.enumeration.requests import PreconditionError
from src.species.cycle_index import VirtualSpecies, species_fix
from src.species.expr import (
    Derivative,
    Difference,
    NonemptySet,
    One,
    SetSpecies,
    SpeciesExpr,
    Sum,
)
from src.utils.logging import get_logger

logger = get_logger("loops")

Terms = List[Tuple[int, SpeciesExpr]]


def split_set_part(expr: SpeciesExpr) -> Tuple[int, Terms]:
    """
    Write expr as c·E + Σ a_i P_i with every P_i strictly finite, using
    E' = E and Eplus = E - 1. Raises PreconditionError when that is impossible.
    """
    if isinstance(expr, SetSpecies):
        return 1, []
    if isinstance(expr, NonemptySet):
        return 1, [(-1, One())]
    if isinstance(expr, (Sum, Difference)):
        c1, left = split_set_part(expr.left)
        c2, right = split_set_part(expr.right)
        sign = 1 if isinstance(expr, Sum) else -1
        return c1 + sign * c2, left + [(sign * a, p) for a, p in right]
    if isinstance(expr, Derivative):
        c, terms = split_set_part(expr.operand)
        return c, [(a, Derivative(p, expr.order)) for a, p in terms]
    if expr.is_strictly_finite():
        return 0, [(1, expr)]
    raise PreconditionError(
        f"{expr.pretty()} is neither strictly finite nor a combination of E with a strictly finite species"
    )


def _alternating(fix: FixFn, degree: int) -> FixFn:
    """fix G_1[λ] = Σ_{j ≥ 0} (-1)^j fix G[λ ∪ 1^j]; finite since fix G vanishes above degree."""

    def rule(lam: Partition) -> Fraction:
        total = Fraction(0)
        for j in range(0, degree - lam.size + 1):
            value = fix(augment(lam, j))
            total += value if j % 2 == 0 else -value
        return total

    return FixFn(rule, name=f"alternating solution of ({fix.name})", degree=degree)


def loopless_digraph_solution(species: Union[SpeciesExpr, FixFn, VirtualSpecies]) -> FixFn:
    """Fix counts of a virtual G_1 with G_1 + G_1' = G."""
    species = VirtualSpecies.of(species)
    if species.expr is None:
        degree = species.fix.degree
        if degree is None:
            raise PreconditionError(f"loop removal needs a strictly finite G, got {species.name}")
        return _alternating(species.fix, degree)

    c, terms = split_set_part(species.expr)
    solution: Optional[FixFn] = None
    if terms:
        degree = max(p.degree() for _, p in terms)
        finite = None
        for a, p in terms:
            part = species_fix(p, degree).scaled(a)
            finite = part if finite is None else finite + part
        finite.degree = degree
        solution = _alternating(finite, degree)
    if c:
        # E_0 + E_2 + E_4 + ... solves G_1 + G_1' = E
        even = FixFn.even_size().scaled(c)
        solution = even if solution is None else solution + even
    if solution is None:
        solution = FixFn.zero()
    solution.name = f"loopless solution for {species.name}"
    logger.debug(f"{solution.name}: set part {c}, {len(terms)} finite terms")
    return solution


def loopless_graph_solution(expr: SpeciesExpr) -> SpeciesExpr:
    """G - G'', which satisfies G_1 + G_1'' + G_1'''' + ... = G by telescoping."""
    degree = expr.degree()
    if degree is None:
        raise PreconditionError(f"loop removal for graphs needs a strictly finite G, got {expr.pretty()}")
    if degree < 2:
        return expr
    return Difference(expr, Derivative(expr, 2))
