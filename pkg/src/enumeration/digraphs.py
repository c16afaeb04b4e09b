"""
G-digraphs: every vertex carries a G-structure on its set of out-neighbours.

The species of G-digraphs with loops allowed is the diagonal of Φ(E·G):
a vertex picks its out-neighbours (with a G-structure) and leaves the rest
(an E-structure). Loopless counts use the same formula with G replaced by
a solution G_1 of G_1 + G_1' = G.
"""
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Iterable, List

from tqdm import tqdm

from src.algebra.partitions import enumerate_partitions, partitions_up_to, z_of
from src.algebra.symfunc import FixFn, PSeries, complete_series, fix_counts, multiply
from src.enumeration.loops import loopless_digraph_solution
from src.enumeration.requests import CountTable, EnumerationRequest, PreconditionError, exact_count
from src.species.cycle_index import VirtualSpecies
from src.species.expr import SetOfSize, set_of_sizes
from src.species.inner import phi_diagonal_fix
from src.utils.logging import get_logger

logger = get_logger("digraphs")


def out_set_species(species, loops: bool) -> VirtualSpecies:
    """The species actually placed on out-sets: G itself, or a loopless solution."""
    species = VirtualSpecies.of(species)
    if loops:
        return species
    return VirtualSpecies(fix=loopless_digraph_solution(species))


def vertex_fix(species: VirtualSpecies, bound: int) -> FixFn:
    """fix (E·G)[μ] for |μ| ≤ bound, from one series product."""
    return fix_counts(multiply(complete_series(bound), species.cycle_index(bound)))


def _row_count(vertex: FixFn, n: int) -> int:
    total = Fraction(0)
    for lam in enumerate_partitions(n):
        value = phi_diagonal_fix(vertex, lam)
        if value:
            total += value / z_of(lam)
    return exact_count(total, f"digraph count at n = {n}")


def digraph_cycle_index(species, loops: bool, bound: int) -> PSeries:
    """One-sort cycle index of the G-digraph species, truncated at bound."""
    vertex = vertex_fix(out_set_species(species, loops), bound)
    coeffs = {}
    for lam in partitions_up_to(bound):
        value = phi_diagonal_fix(vertex, lam)
        if value:
            coeffs[lam] = value / z_of(lam)
    return PSeries(coeffs, bound)


def _map_rows(fn, ns: List[int], threads: int, progress: bool, desc: str) -> List[int]:
    bar = tqdm(total=len(ns), desc=desc, unit="row", disable=not progress)
    results = []
    try:
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for value in pool.map(fn, ns):
                    results.append(value)
                    bar.update(1)
        else:
            for n in ns:
                results.append(fn(n))
                bar.update(1)
    finally:
        bar.close()
    return results


def digraph_counts(request: EnumerationRequest, threads: int = 1, progress: bool = False) -> CountTable:
    """Unlabeled G-digraphs on n = 1..max_vertices vertices."""
    if request.family != "digraph":
        raise PreconditionError(f"digraph_counts got a {request.family} request")
    max_n = request.max_vertices
    out_sets = out_set_species(request.species, request.loops)
    vertex = vertex_fix(out_sets, max_n)
    ns = list(range(1, max_n + 1))
    counts = _map_rows(lambda n: _row_count(vertex, n), ns, threads, progress, "digraphs")

    table = CountTable(("n",))
    for n, count in zip(ns, counts):
        table.add((n,), count)
    table.provenance = {
        "family": "digraph",
        "species": request.species.name,
        "loops": request.loops,
        "solver": "direct" if request.loops else out_sets.name,
        "bound": max_n,
    }
    logger.info(f"digraphs with G = {request.species.name}, loops={request.loops}: {max_n} rows")
    return table


def outdegree_counts(k: int, max_n: int, loops: bool = False, **kwargs) -> CountTable:
    return digraph_counts(EnumerationRequest("digraph", SetOfSize(k), loops=loops, max_vertices=max_n), **kwargs)


def outdegree_set_counts(sizes: Iterable[int], max_vertices: int, threads: int = 1, progress: bool = False) -> CountTable:
    """Loopless digraphs whose outdegrees all lie in the given set."""
    sizes = sorted(set(sizes))
    if not sizes:
        raise PreconditionError("outdegree set must not be empty")
    if sizes[0] < 0:
        raise PreconditionError(f"outdegrees must be nonnegative, got {sizes}")
    request = EnumerationRequest("digraph", set_of_sizes(sizes), loops=False, max_vertices=max_vertices)
    table = digraph_counts(request, threads=threads, progress=progress)
    table.provenance["outdegrees"] = sizes
    return table


def outdegree_table(max_k: int, max_n: int, threads: int = 1, progress: bool = False) -> CountTable:
    """Loopless outdegree-k digraphs for k = 1..max_k and n = 1..max_n."""
    table = CountTable(("n", "k"))
    for k in range(1, max_k + 1):
        column = outdegree_counts(k, max_n, threads=threads, progress=progress)
        for (n,), count in column.rows:
            table.add((n, k), count)
    table.provenance = {"family": "digraph", "species": f"E_1..E_{max_k}", "loops": False, "bound": max_n}
    return table
