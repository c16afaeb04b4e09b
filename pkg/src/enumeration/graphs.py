"""
G-graphs: every vertex carries a G-structure on its incident half-edges.

Half-edges are Y-points. E(X·G(Y)) is a set of vertices each holding a
G-structure of half-edges, E(E_2(Y)) pairs up half-edges into edges, and
⟨E(X·G(Y)), E(E_2(Y))⟩_Y glues the two. A pair of half-edges at the same
vertex is a loop; loopless counts replace G by G - G''.
"""
from fractions import Fraction
from typing import List, Tuple

from src.algebra.multisort import BiSeries, bi_plethystic_exp, scalar_y_by_degree
from src.algebra.partitions import Partition, augment
from src.algebra.symfunc import FixFn, complete, plethystic_exp, specialize
from src.enumeration.loops import loopless_graph_solution
from src.enumeration.requests import BoundError, CountTable, EnumerationRequest, PreconditionError, exact_count
from src.species.cycle_index import VirtualSpecies
from src.utils.logging import get_logger

logger = get_logger("graphs")

_SINGLE = Partition((1,))


def half_edge_species(species: VirtualSpecies, loops: bool) -> VirtualSpecies:
    if loops:
        return species
    if species.expr is not None:
        return VirtualSpecies(expr=loopless_graph_solution(species.expr))
    fix = species.fix
    solved = FixFn(
        lambda lam: fix(lam) - fix(augment(lam, 2)),
        name=f"({fix.name}) - ({fix.name})''",
        degree=fix.degree,
    )
    return VirtualSpecies(fix=solved)


def required_bound_y(species: VirtualSpecies, max_n: int) -> int:
    degree = species.degree()
    if degree is None:
        raise PreconditionError(f"G-graphs are defined only for strictly finite G, got {species.name}")
    return degree * max_n


def _graded_counts(request: EnumerationRequest) -> Tuple[List[List[Fraction]], int, VirtualSpecies]:
    """
    counts[m][n]: iso-type weight of n vertices with m half-edges. With loops
    forbidden the out-set species is virtual, so only the sum over m is a count.
    """
    max_n = request.max_vertices
    needed = required_bound_y(request.species, max_n)
    bound_y = needed if request.max_y is None else request.max_y
    if bound_y < needed:
        raise BoundError(
            f"max_y = {bound_y} truncates graphs on {max_n} vertices with G = {request.species.name}",
            needed,
        )

    half_edges = half_edge_species(request.species, request.loops)
    z_g = half_edges.cycle_index(bound_y)
    vertices = BiSeries._make({(_SINGLE, mu): c for mu, c in z_g.items()}, max_n, bound_y)
    left = bi_plethystic_exp(vertices)
    right = BiSeries.from_y(plethystic_exp(complete(2, bound_y)), bound_x=max_n)
    layers = scalar_y_by_degree(left, right)

    counts = [specialize(layer, "iso_types") for layer in layers]
    logger.info(f"graphs with G = {request.species.name}, loops={request.loops}: bound_y {bound_y}")
    return counts, bound_y, half_edges


def graph_counts(request: EnumerationRequest) -> CountTable:
    """Unlabeled G-graphs (multiple edges allowed) on n = 1..max_vertices vertices."""
    if request.family != "graph":
        raise PreconditionError(f"graph_counts got a {request.family} request")
    counts, bound_y, half_edges = _graded_counts(request)
    table = CountTable(("n",))
    for n in range(1, request.max_vertices + 1):
        total = sum((layer[n] for layer in counts), Fraction(0))
        table.add((n,), exact_count(total, f"graph count at n = {n}"))
    table.provenance = {
        "family": "graph",
        "species": request.species.name,
        "loops": request.loops,
        "solver": "direct" if request.loops else half_edges.name,
        "bound_y": bound_y,
    }
    return table


def graph_edge_counts(request: EnumerationRequest) -> CountTable:
    """The same graphs split by edge count e (y-degree 2e); loops allowed only."""
    if request.family != "graph":
        raise PreconditionError(f"graph_edge_counts got a {request.family} request")
    if not request.loops:
        raise PreconditionError("edge counts are available for graphs with loops allowed only")
    counts, bound_y, half_edges = _graded_counts(request)
    table = CountTable(("n", "e"))
    for m, layer in enumerate(counts):
        for n in range(1, request.max_vertices + 1):
            if layer[n]:
                if m % 2:
                    raise ArithmeticError(f"odd half-edge count {m} with a nonzero graph count")
                table.add((n, m // 2), exact_count(layer[n], f"graph count at n = {n}, {m // 2} edges"))
    table.provenance = {
        "family": "graph",
        "species": request.species.name,
        "loops": request.loops,
        "solver": "direct" if request.loops else half_edges.name,
        "bound_y": bound_y,
    }
    return table
