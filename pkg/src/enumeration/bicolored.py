"""
Bicolored G-graphs: vertices split into two non-empty unordered colour
classes, edges only between the classes, each vertex carrying a G-structure
on its half-edges.

One colour class is Eplus(X·G(Y)); two classes that share their half-edges
(each Y-point belongs to one vertex of each class) are E_2 ⊛_Y of it.
Counted by vertices (x-degree) and edges (y-degree).
"""
from fractions import Fraction
from typing import List

from src.algebra.multisort import BiSeries, bi_plethystic_exp, bi_one, iso_types_xy
from src.algebra.partitions import Partition
from src.algebra.symfunc import complete
from src.enumeration.requests import CountTable, PreconditionError, exact_count
from src.species.cycle_index import VirtualSpecies
from src.species.inner import inner_plethysm_y
from src.utils.logging import get_logger

logger = get_logger("bicolored")

_SINGLE = Partition((1,))


def bicolored_series(species, bound_x: int, bound_y: int) -> BiSeries:
    """Two-sort cycle index E_2 ⊛_Y Eplus(X·G(Y)) truncated at (bound_x, bound_y)."""
    if bound_x < 0 or bound_y < 0:
        raise PreconditionError(f"bounds must be nonnegative, got ({bound_x}, {bound_y})")
    species = VirtualSpecies.of(species)
    z_g = species.cycle_index(bound_y)
    vertices = BiSeries._make({(_SINGLE, mu): c for mu, c in z_g.items()}, bound_x, bound_y)
    one_class = bi_plethystic_exp(vertices) - bi_one(bound_x, bound_y)
    return inner_plethysm_y(complete(2, 2), one_class)


def bicolored_counts(species, bound_x: int, bound_y: int) -> CountTable:
    """Counts keyed by (n vertices, e edges) for 1 ≤ n ≤ bound_x and 0 ≤ e ≤ bound_y."""
    species = VirtualSpecies.of(species)
    grid: List[List[Fraction]] = iso_types_xy(bicolored_series(species, bound_x, bound_y))
    table = CountTable(("n", "e"))
    for n in range(1, bound_x + 1):
        for e in range(bound_y + 1):
            table.add((n, e), exact_count(grid[n][e], f"bicolored count at n = {n}, e = {e}"))
    table.provenance = {
        "family": "bicolored",
        "species": species.name,
        "bound_x": bound_x,
        "bound_y": bound_y,
    }
    logger.info(f"bicolored graphs with G = {species.name}: bounds ({bound_x}, {bound_y})")
    return table
