import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Union

from src.algebra.multisort import BiSeries
from src.algebra.partitions import Partition
from src.algebra.symfunc import PSeries
from src.species.expr import SpeciesExpr
from src.utils.logging import get_logger

logger = get_logger("series_io")


def fraction_to_str(value: Fraction) -> str:
    return str(Fraction(value))


def fraction_from_str(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"invalid coefficient {text!r}: {e}")


def pseries_to_dict(f: PSeries) -> Dict[str, Any]:
    """{"bound": N, "terms": [{"partition": [...], "coeff": "a/b"}, ...]} in canonical order."""
    return {
        "bound": f.bound,
        "terms": [{"partition": lam.to_json(), "coeff": fraction_to_str(c)} for lam, c in f.items()],
    }


def pseries_from_dict(data: Dict[str, Any]) -> PSeries:
    coeffs = {Partition(t["partition"]): fraction_from_str(t["coeff"]) for t in data.get("terms", [])}
    return PSeries(coeffs, int(data["bound"]))


def biseries_to_dict(f: BiSeries) -> Dict[str, Any]:
    return {
        "bound_x": f.bound_x,
        "bound_y": f.bound_y,
        "terms": [
            {"x": lam.to_json(), "y": mu.to_json(), "coeff": fraction_to_str(c)}
            for (lam, mu), c in f.items()
        ],
    }


def biseries_from_dict(data: Dict[str, Any]) -> BiSeries:
    coeffs = {
        (Partition(t["x"]), Partition(t["y"])): fraction_from_str(t["coeff"]) for t in data.get("terms", [])
    }
    return BiSeries(coeffs, int(data["bound_x"]), int(data["bound_y"]))


def series_to_dict(f: Union[PSeries, BiSeries]) -> Dict[str, Any]:
    if isinstance(f, BiSeries):
        return biseries_to_dict(f)
    return pseries_to_dict(f)


def series_from_dict(data: Dict[str, Any]) -> Union[PSeries, BiSeries]:
    if "bound_x" in data:
        return biseries_from_dict(data)
    return pseries_from_dict(data)


def expr_to_dict(expr: SpeciesExpr) -> Dict[str, Any]:
    return expr.to_dict()


def dumps(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2, sort_keys=False, ensure_ascii=False)


def save_series(f: Union[PSeries, BiSeries], path: Path):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(series_to_dict(f)))
        fh.write("\n")
    logger.info(f"Series saved to {path} ({len(f)} terms)")


def load_series(path: Path) -> Union[PSeries, BiSeries]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as e:
        raise ValueError(f"Failed to parse series file {path}: {e}")
    return series_from_dict(data)
