"""
Orbit counting by Burnside's lemma over S_n acting on a labeled family.

The number of isomorphism classes is (1/n!) Σ_σ #{structures fixed by σ}.
Fixed points are found by transporting every structure and comparing,
with no use of cycle-type formulas.
"""
import random
from itertools import permutations
from math import factorial
from typing import Dict, Iterable, List

from src.algebra.partitions import Partition, class_size, enumerate_partitions
from src.oracle.families import BudgetExceeded, LabeledStructureSet, Perm
from src.utils.logging import get_logger

logger = get_logger("burnside")

DEFAULT_BUDGET = 10 ** 9


def permutation_of_type(lam: Iterable[int]) -> Perm:
    """A permutation of {0..n-1} whose cycles have the lengths in lam, consecutive blocks."""
    perm: List[int] = []
    start = 0
    for length in lam:
        block = list(range(start, start + length))
        perm.extend(block[1:] + block[:1])
        start += length
    return tuple(perm)


def cycle_type(perm: Perm) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if not seen[i]:
            length, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            lengths.append(length)
    return Partition(lengths)


def compose(sigma: Perm, tau: Perm) -> Perm:
    """σ∘τ: apply τ first."""
    return tuple(sigma[tau[i]] for i in range(len(tau)))


def fixed_count(family: LabeledStructureSet, perm: Perm) -> int:
    return sum(1 for s in family if family.act(perm, s) == s)


def check_budget(family: LabeledStructureSet, budget: int) -> int:
    """
    Checks needed (size times n!), refusing before any fixed-point work. For a
    family without a closed-form size at most budget // n! + 1 structures are
    listed before a refusal.
    """
    order = factorial(family.n)
    size = family.size_at_most(budget // order)
    if size is None:
        exact = family.known_size is not None
        required = family.known_size * order if exact else (budget // order + 1) * order
        logger.warning(f"refusing {family.name} on {family.n} vertices: {required} checks > budget {budget}")
        raise BudgetExceeded(f"{family.name} on {family.n} vertices", required, budget, exact=exact)
    return size * order


def burnside_count(family: LabeledStructureSet, budget: int = DEFAULT_BUDGET, exhaustive: bool = False) -> int:
    """
    Number of isomorphism classes of the family.

    By default one permutation per cycle type is tested and weighted by the
    class size; exhaustive=True sums over every permutation of S_n.
    """
    checks = check_budget(family, budget)
    n = family.n
    total = 0
    if exhaustive:
        for perm in permutations(range(n)):
            total += fixed_count(family, perm)
    else:
        for lam in enumerate_partitions(n):
            total += class_size(lam) * fixed_count(family, permutation_of_type(lam))
    order = factorial(n)
    if total % order:
        raise ArithmeticError(f"Burnside sum {total} for {family.name} is not divisible by {n}!")
    logger.debug(f"{family.name}, n = {n}: {family.size} structures, {checks} checks, sum {total}")
    return total // order


def fixed_counts_by_type(family: LabeledStructureSet, budget: int = DEFAULT_BUDGET) -> Dict[Partition, int]:
    """fix[λ] for every cycle type λ ⊢ n, from one representative each."""
    check_budget(family, budget)
    return {lam: fixed_count(family, permutation_of_type(lam)) for lam in enumerate_partitions(family.n)}


def check_class_invariance(family: LabeledStructureSet, lam: Partition, seed: int = 0) -> bool:
    """Fixed counts of two permutations of the same type agree (a conjugate by a random relabeling)."""
    rng = random.Random(seed)
    base = permutation_of_type(lam)
    relabel = list(range(len(base)))
    rng.shuffle(relabel)
    relabel = tuple(relabel)
    inverse = tuple(sorted(range(len(relabel)), key=relabel.__getitem__))
    conjugate = compose(compose(relabel, base), inverse)
    return fixed_count(family, base) == fixed_count(family, conjugate)


def check_action(family: LabeledStructureSet, samples: int = 20, seed: int = 0) -> bool:
    """Identity and compatibility laws of the action on a sample of structures."""
    rng = random.Random(seed)
    n = family.n
    identity = tuple(range(n))
    for index, s in enumerate(family):
        if index >= samples:
            break
        sigma, tau = list(identity), list(identity)
        rng.shuffle(sigma)
        rng.shuffle(tau)
        sigma, tau = tuple(sigma), tuple(tau)
        if family.act(identity, s) != s:
            return False
        if family.act(sigma, family.act(tau, s)) != family.act(compose(sigma, tau), s):
            return False
    return True
