"""
Species expression trees.

Nodes are frozen dataclasses so that equal expressions hash equally and
evaluation results can be cached per (expression, bounds). Source spans
are carried for error messages but ignored by equality.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Optional, Tuple

Span = Optional[Tuple[int, int]]

SORT_X = "X"
SORT_Y = "Y"


class SpeciesExpr:
    """Base class of every expression node."""

    def pretty(self) -> str:
        raise NotImplementedError

    def to_dict(self) -> Dict[str, Any]:
        raise NotImplementedError

    def children(self) -> Tuple["SpeciesExpr", ...]:
        return ()

    def sorts(self) -> FrozenSet[str]:
        out: FrozenSet[str] = frozenset()
        for child in self.children():
            out |= child.sorts()
        return out

    def degree(self) -> Optional[int]:
        """Largest size carrying a structure, None when unbounded."""
        raise NotImplementedError

    def is_strictly_finite(self) -> bool:
        return self.degree() is not None

    def __str__(self) -> str:
        return self.pretty()


# -- atoms --------------------------------------------------------------


@dataclass(frozen=True)
class Zero(SpeciesExpr):
    span: Span = field(default=None, compare=False, repr=False)

    def pretty(self) -> str:
        return "0"

    def to_dict(self):
        return {"node": "Zero"}

    def degree(self):
        return 0


@dataclass(frozen=True)
class One(SpeciesExpr):
    span: Span = field(default=None, compare=False, repr=False)

    def pretty(self) -> str:
        return "1"

    def to_dict(self):
        return {"node": "One"}

    def degree(self):
        return 0


@dataclass(frozen=True)
class Singleton(SpeciesExpr):
    sort: str = SORT_X
    span: Span = field(default=None, compare=False, repr=False)

    def pretty(self) -> str:
        return self.sort

    def to_dict(self):
        return {"node": "Singleton", "sort": self.sort}

    def sorts(self):
        return frozenset({self.sort})

    def degree(self):
        return 1


@dataclass(frozen=True)
class SetSpecies(SpeciesExpr):
    span: Span = field(default=None, compare=False, repr=False)

    def pretty(self) -> str:
        return "E"

    def to_dict(self):
        return {"node": "SetSpecies"}

    def degree(self):
        return None


@dataclass(frozen=True)
class SetOfSize(SpeciesExpr):
    k: int = 0
    span: Span = field(default=None, compare=False, repr=False)

    def pretty(self) -> str:
        return f"E_{self.k}"

    def to_dict(self):
        return {"node": "SetOfSize", "k": self.k}

    def degree(self):
        return self.k


@dataclass(frozen=True)
class NonemptySet(SpeciesExpr):
    span: Span = field(default=None, compare=False, repr=False)

    def pretty(self) -> str:
        return "Eplus"

    def to_dict(self):
        return {"node": "NonemptySet"}

    def degree(self):
        return None


# -- operators ----------------------------------------------------------


def _wrap(expr: SpeciesExpr, inside: type) -> str:
    text = expr.pretty()
    if isinstance(expr, inside):
        return f"({text})"
    return text


@dataclass(frozen=True)
class Sum(SpeciesExpr):
    left: SpeciesExpr
    right: SpeciesExpr
    span: Span = field(default=None, compare=False, repr=False)

    def children(self):
        return (self.left, self.right)

    def pretty(self) -> str:
        return f"{self.left.pretty()} + {_wrap(self.right, (Sum, Difference))}"

    def to_dict(self):
        return {"node": "Sum", "left": self.left.to_dict(), "right": self.right.to_dict()}

    def degree(self):
        a, b = self.left.degree(), self.right.degree()
        return None if a is None or b is None else max(a, b)


@dataclass(frozen=True)
class Difference(SpeciesExpr):
    left: SpeciesExpr
    right: SpeciesExpr
    span: Span = field(default=None, compare=False, repr=False)

    def children(self):
        return (self.left, self.right)

    def pretty(self) -> str:
        return f"{self.left.pretty()} - {_wrap(self.right, (Sum, Difference))}"

    def to_dict(self):
        return {"node": "Difference", "left": self.left.to_dict(), "right": self.right.to_dict()}

    def degree(self):
        a, b = self.left.degree(), self.right.degree()
        return None if a is None or b is None else max(a, b)


@dataclass(frozen=True)
class Product(SpeciesExpr):
    left: SpeciesExpr
    right: SpeciesExpr
    span: Span = field(default=None, compare=False, repr=False)

    def children(self):
        return (self.left, self.right)

    def pretty(self) -> str:
        left = _wrap(self.left, (Sum, Difference))
        right = _wrap(self.right, (Sum, Difference, Product))
        return f"{left}*{right}"

    def to_dict(self):
        return {"node": "Product", "left": self.left.to_dict(), "right": self.right.to_dict()}

    def degree(self):
        a, b = self.left.degree(), self.right.degree()
        return None if a is None or b is None else a + b


@dataclass(frozen=True)
class Compose(SpeciesExpr):
    outer: SpeciesExpr
    inner: SpeciesExpr
    span: Span = field(default=None, compare=False, repr=False)

    def children(self):
        return (self.outer, self.inner)

    def pretty(self) -> str:
        return f"{_wrap(self.outer, (Sum, Difference, Product, Derivative, Compose))}({self.inner.pretty()})"

    def to_dict(self):
        return {"node": "Compose", "outer": self.outer.to_dict(), "inner": self.inner.to_dict()}

    def degree(self):
        a, b = self.outer.degree(), self.inner.degree()
        if a == 0 or b == 0:
            # a constant outer, or an inner with no structure above size 0
            return 0
        return None if a is None or b is None else a * b


@dataclass(frozen=True)
class Derivative(SpeciesExpr):
    operand: SpeciesExpr
    order: int = 1
    span: Span = field(default=None, compare=False, repr=False)

    def children(self):
        return (self.operand,)

    def pretty(self) -> str:
        inner = _wrap(self.operand, (Sum, Difference, Product, Compose))
        return inner + "'" * self.order

    def to_dict(self):
        return {"node": "Derivative", "order": self.order, "operand": self.operand.to_dict()}

    def degree(self):
        d = self.operand.degree()
        return None if d is None else max(d - self.order, 0)


def set_of_sizes(sizes) -> SpeciesExpr:
    """Σ_{k ∈ sizes} E_k, the out-set species of an outdegree-set digraph."""
    ordered = sorted(sizes)
    if not ordered:
        return Zero()
    expr: SpeciesExpr = SetOfSize(ordered[0])
    for k in ordered[1:]:
        expr = Sum(expr, SetOfSize(k))
    return expr
