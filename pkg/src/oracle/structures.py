"""
Direct fixed-point counts for two species constructions on small sets.

Inner plethysm F ⊛ G on A: F-assemblies, with repetition, of G-structures
on A. For F = E_k that is the k-element multisets of G[A].

Composition F ∘ G on A: a partition of A into blocks, a G-structure on each
block and an F-structure on the set of blocks.

The small species understood here all have at most one structure per set
except E*E (subsets) and E_k*E (k-subsets), which exercise a nontrivial
transport of G-structures.
"""
import re
from itertools import combinations, combinations_with_replacement
from typing import Callable, Dict, FrozenSet, Iterator, List

from src.algebra.partitions import Partition, enumerate_partitions
from src.oracle.burnside import DEFAULT_BUDGET, permutation_of_type
from src.oracle.families import BudgetExceeded
from src.utils.logging import get_logger

logger = get_logger("structures")

_SET_OF_SIZE = re.compile(r"^E_(\d+)$")
_SUBSETS_OF_SIZE = re.compile(r"^E_(\d+)\*E$")

Block = FrozenSet[int]


def _size_rule(name: str) -> Callable[[int], bool]:
    """Sizes carrying exactly one structure, for X, E, Eplus and E_k."""
    if name == "X":
        return lambda m: m == 1
    if name == "E":
        return lambda m: True
    if name == "Eplus":
        return lambda m: m >= 1
    match = _SET_OF_SIZE.match(name)
    if match:
        k = int(match.group(1))
        return lambda m: m == k
    raise ValueError(f"unsupported species {name!r} for direct counting")


def g_structures(name: str, n: int) -> List[Block]:
    """G[{0..n-1}] as frozensets; transport is elementwise."""
    name = name.replace(" ", "")
    if name == "E*E":
        return [frozenset(c) for s in range(n + 1) for c in combinations(range(n), s)]
    match = _SUBSETS_OF_SIZE.match(name)
    if match:
        return [frozenset(c) for c in combinations(range(n), int(match.group(1)))]
    return [frozenset(range(n))] if _size_rule(name)(n) else []


def _assembly_size(name: str) -> int:
    """k for F = E_k (X is E_1); F must be strictly finite."""
    if name == "X":
        return 1
    match = _SET_OF_SIZE.match(name)
    if match:
        return int(match.group(1))
    raise ValueError(f"inner plethysm needs F = X or E_k, got {name!r}")


def brute_inner_plethysm_fix(f_name: str, g_name: str, n: int, budget: int = DEFAULT_BUDGET) -> Dict[Partition, int]:
    """fix (F ⊛ G)[μ] for every μ ⊢ n, by testing each multiset for invariance."""
    k = _assembly_size(f_name)
    structures = g_structures(g_name, n)
    index = {s: i for i, s in enumerate(structures)}
    assemblies = list(combinations_with_replacement(range(len(structures)), k))
    classes = enumerate_partitions(n)
    checks = len(assemblies) * len(classes)
    if checks > budget:
        raise BudgetExceeded(f"{f_name} ⊛ {g_name} on {n} points", checks, budget)

    out: Dict[Partition, int] = {}
    for mu in classes:
        perm = permutation_of_type(mu)
        induced = [index[frozenset(perm[i] for i in s)] for s in structures]
        out[mu] = sum(1 for m in assemblies if tuple(sorted(induced[i] for i in m)) == m)
    logger.debug(f"{f_name} ⊛ {g_name}, n = {n}: {len(structures)} G-structures, {len(assemblies)} assemblies")
    return out


def set_partitions(n: int) -> Iterator[List[Block]]:
    """All partitions of {0..n-1} into non-empty blocks."""

    def grow(i: int, blocks: List[List[int]]) -> Iterator[List[Block]]:
        if i == n:
            yield [frozenset(b) for b in blocks]
            return
        for b in blocks:
            b.append(i)
            yield from grow(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from grow(i + 1, blocks)
        blocks.pop()

    return grow(0, [])


def brute_composition_fix(f_name: str, g_name: str, n: int, budget: int = DEFAULT_BUDGET) -> Dict[Partition, int]:
    """fix (F ∘ G)[μ] for every μ ⊢ n, with F in {X, E_k, E} and G in {X, E_k, Eplus}."""
    block_ok = _size_rule(g_name)
    count_ok = _size_rule(f_name)
    if block_ok(0):
        raise ValueError(f"inner species {g_name!r} has a structure on the empty set; composition diverges")
    admissible = [
        frozenset(p)
        for p in set_partitions(n)
        if count_ok(len(p)) and all(block_ok(len(b)) for b in p)
    ]
    classes = enumerate_partitions(n)
    checks = len(admissible) * len(classes)
    if checks > budget:
        raise BudgetExceeded(f"{f_name} ∘ {g_name} on {n} points", checks, budget)

    out: Dict[Partition, int] = {}
    for mu in classes:
        perm = permutation_of_type(mu)
        out[mu] = sum(
            1 for p in admissible if frozenset(frozenset(perm[i] for i in b) for b in p) == p
        )
    return out
