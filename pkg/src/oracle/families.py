"""
Explicit families of labeled structures on the vertex set {0, ..., n-1}.

Each family enumerates its structures exhaustively and without duplicates
and knows how a permutation of the vertices transports a structure. Nothing
here uses cycle indices: the oracle must stay independent of the engine.
"""
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Callable, FrozenSet, Hashable, Iterable, Iterator, List, Optional, Tuple

from src.utils.logging import get_logger

logger = get_logger("families")

Perm = Tuple[int, ...]
OutSets = Tuple[FrozenSet[int], ...]
Matrix = Tuple[Tuple[int, ...], ...]

FAMILY_NAMES = ("outdegree", "outdegree-set", "relation", "digraphs", "regular")


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, required: int, budget: int, exact: bool = True):
        self.required = required
        self.budget = budget
        self.exact = exact
        needs = f"{required}" if exact else f"more than {required - 1}"
        super().__init__(f"{message}: needs {needs} checks, budget is {budget}")


@dataclass
class LabeledStructureSet:
    """
    A family listed by `generate`. Families without a closed-form size are
    counted on demand; `size_at_most` stops counting past a limit.
    """

    name: str
    n: int
    generate: Callable[[], Iterator[Hashable]]
    act: Callable[[Perm, Hashable], Hashable]
    known_size: Optional[int] = None

    def __iter__(self) -> Iterator[Hashable]:
        return self.generate()

    @property
    def size(self) -> int:
        if self.known_size is None:
            self.known_size = sum(1 for _ in self.generate())
        return self.known_size

    def size_at_most(self, limit: int) -> Optional[int]:
        """The size if it is at most `limit`, else None after listing at most limit + 1 structures."""
        if self.known_size is not None:
            return self.known_size if self.known_size <= limit else None
        count = 0
        for _ in self.generate():
            count += 1
            if count > limit:
                return None
        self.known_size = count
        return count


# -- digraphs as out-set assignments ------------------------------------


def act_on_out_sets(perm: Perm, out: OutSets) -> OutSets:
    image: List[FrozenSet[int]] = [frozenset()] * len(out)
    for v, targets in enumerate(out):
        image[perm[v]] = frozenset(perm[w] for w in targets)
    return tuple(image)


def out_set_family(n: int, sizes: Optional[Iterable[int]], loops: bool, name: str) -> LabeledStructureSet:
    """
    Every vertex chooses its out-neighbours, a subset of size in `sizes`
    (any size if None) of the other vertices, or of all vertices with loops.
    """
    allowed = None if sizes is None else frozenset(sizes)
    pool_size = n if loops else n - 1
    per_vertex = sum(comb(pool_size, s) for s in range(pool_size + 1) if allowed is None or s in allowed)

    def choices(v: int) -> List[FrozenSet[int]]:
        pool = [w for w in range(n) if loops or w != v]
        out = []
        for s in range(len(pool) + 1):
            if allowed is None or s in allowed:
                out.extend(frozenset(c) for c in combinations(pool, s))
        return out

    def enumerate_out_sets() -> Iterator[OutSets]:
        return product(*(choices(v) for v in range(n)))

    return LabeledStructureSet(name, n, enumerate_out_sets, act_on_out_sets, known_size=per_vertex ** n)


def outdegree_digraphs(k: int, n: int, loops: bool = False) -> LabeledStructureSet:
    return out_set_family(n, [k], loops, f"outdegree {k} digraphs" + (" with loops" if loops else ""))


def outdegree_set_digraphs(sizes: Iterable[int], n: int, loops: bool = False) -> LabeledStructureSet:
    sizes = sorted(sizes)
    return out_set_family(n, sizes, loops, f"outdegree in {sizes} digraphs")


def all_digraphs(n: int, loops: bool = False) -> LabeledStructureSet:
    return out_set_family(n, None, loops, "digraphs" + (" with loops" if loops else ""))


def relations(n: int) -> LabeledStructureSet:
    """All subsets of V × V."""
    return out_set_family(n, None, True, "relations")


# -- multigraphs as symmetric matrices -----------------------------------


def act_on_matrix(perm: Perm, matrix: Matrix) -> Matrix:
    n = len(matrix)
    image = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            image[perm[i]][perm[j]] = matrix[i][j]
    return tuple(tuple(row) for row in image)


def _regular_matrices(k: int, n: int, loops: bool) -> Iterator[Matrix]:
    """Symmetric nonnegative integer matrices; off-diagonal entries count edges, a diagonal entry counts loops (2 each)."""
    cells = [(i, j) for i in range(n) for j in range(i, n) if loops or i != j]
    matrix = [[0] * n for _ in range(n)]
    remaining = [k] * n

    def last_cell_of(v: int) -> int:
        return max(idx for idx, (i, j) in enumerate(cells) if v in (i, j)) if cells else -1

    closing = [last_cell_of(v) for v in range(n)] if n else []

    def place(idx: int) -> Iterator[Matrix]:
        if idx == len(cells):
            if all(r == 0 for r in remaining):
                yield tuple(tuple(row) for row in matrix)
            return
        i, j = cells[idx]
        cost = 2 if i == j else 1
        cap = remaining[i] // 2 if i == j else min(remaining[i], remaining[j])
        for value in range(cap + 1):
            remaining[i] -= cost * value if i == j else value
            if i != j:
                remaining[j] -= value
            matrix[i][j] = matrix[j][i] = value
            # a vertex whose last cell is behind us must be saturated
            if all(remaining[v] == 0 for v in range(n) if closing[v] == idx):
                yield from place(idx + 1)
            remaining[i] += cost * value if i == j else value
            if i != j:
                remaining[j] += value
        matrix[i][j] = matrix[j][i] = 0

    if n == 0:
        return iter(())
    if not cells:
        return iter([tuple(tuple(row) for row in matrix)] if k == 0 else [])
    return place(0)


def regular_multigraphs(k: int, n: int, loops: bool = False) -> LabeledStructureSet:
    name = f"{k}-regular multigraphs" + (" with loops" if loops else "")
    return LabeledStructureSet(name, n, lambda: _regular_matrices(k, n, loops), act_on_matrix)


def family_for(name: str, argument, n: int, loops: bool = False) -> LabeledStructureSet:
    """Build a family from its CLI name: outdegree, outdegree-set, relation, digraphs, regular."""
    if name == "outdegree":
        return outdegree_digraphs(int(argument), n, loops)
    if name == "outdegree-set":
        return outdegree_set_digraphs(argument, n, loops)
    if name == "relation":
        return relations(n)
    if name == "digraphs":
        return all_digraphs(n, loops)
    if name == "regular":
        return regular_multigraphs(int(argument), n, loops)
    raise ValueError(f"unknown family {name!r}; expected one of {FAMILY_NAMES}")
