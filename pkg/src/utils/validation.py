import re
from typing import FrozenSet, Optional, Tuple

_INT_LIST = re.compile(r"^\s*\d+(\s*,\s*\d+)*\s*$")


def parse_positive_int(text: str, what: str = "value") -> int:
    """Parse a strictly positive integer or raise ValueError naming the option."""
    try:
        value = int(str(text).strip())
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {text!r}")
    if value < 1:
        raise ValueError(f"{what} must be positive, got {value}")
    return value


def parse_nonnegative_int(text: str, what: str = "value") -> int:
    try:
        value = int(str(text).strip())
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {text!r}")
    if value < 0:
        raise ValueError(f"{what} must be nonnegative, got {value}")
    return value


def parse_int_set(text: str, what: str = "set") -> FrozenSet[int]:
    """
    Parse a comma-separated set of positive integers such as "1,3,4".
    Braces are tolerated so "{1,3,4}" works too.
    """
    cleaned = str(text).strip().strip("{}")
    if not _INT_LIST.match(cleaned):
        raise ValueError(f"{what} must be a comma-separated list of integers, got {text!r}")
    values = frozenset(int(v) for v in cleaned.split(","))
    if 0 in values:
        raise ValueError(f"{what} must contain positive integers only, got {text!r}")
    return values


def parse_family(text: str) -> Tuple[str, Optional[str]]:
    """
    Split an oracle family name "name[:argument]" such as "outdegree:2" or
    "outdegree-set:1,3,4" into its name and raw argument.
    """
    if not text or not text.strip():
        raise ValueError("family must not be empty")
    name, sep, arg = text.strip().partition(":")
    name = name.strip().lower()
    if not re.match(r"^[a-z][a-z-]*$", name):
        raise ValueError(f"invalid family name {name!r}")
    return name, (arg.strip() if sep else None)
