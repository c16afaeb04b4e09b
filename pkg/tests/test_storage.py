import json
from fractions import Fraction

import pytest

from src.algebra.symfunc import complete, complete_series
from src.enumeration.requests import CountTable
from src.species.cycle_index import cycle_index
from src.species.parser import parse_species
from src.storage.series_io import (
    expr_to_dict,
    fraction_from_str,
    load_series,
    save_series,
    series_to_dict,
)
from src.storage.tables import render, render_csv, render_json, render_text, table_to_frame


def single_key_table():
    table = CountTable(("n",))
    for n, count in [(3, 1), (1, 0), (2, 0), (4, 13027956824399552)]:
        table.add((n,), count)
    table.provenance = {"bound": 4}
    return table


def test_series_dict_is_canonical():
    data = series_to_dict(complete(2, 3))
    assert data == {
        "bound": 3,
        "terms": [{"partition": [2], "coeff": "1/2"}, {"partition": [1, 1], "coeff": "1/2"}],
    }


def test_series_files(tmp_path):
    one_sort = complete_series(4)
    two_sort = cycle_index(parse_species("E_2(X*E_2(Y))"), 2, 4)
    save_series(one_sort, tmp_path / "out" / "e.json")
    save_series(two_sort, tmp_path / "g.json")
    assert load_series(tmp_path / "out" / "e.json") == one_sort
    assert load_series(tmp_path / "g.json") == two_sort


def test_bad_series_files(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{")
    with pytest.raises(ValueError):
        load_series(path)
    with pytest.raises(ValueError):
        fraction_from_str("1/0")
    assert fraction_from_str("-3/6") == Fraction(-1, 2)


def test_expression_tree_dict():
    assert expr_to_dict(parse_species("E_3 - X")) == {
        "node": "Difference",
        "left": {"node": "SetOfSize", "k": 3},
        "right": {"node": "Singleton", "sort": "X"},
    }


def test_rows_are_sorted_and_exact():
    table = single_key_table()
    assert table.series() == [0, 0, 1, 13027956824399552]
    frame = table_to_frame(table)
    assert list(frame.columns) == ["n", "count"]
    assert frame["count"].iloc[-1] == 13027956824399552


def test_text_skips_leading_zero_rows():
    assert render_text(single_key_table()) == "# n = 3..4\n1,13027956824399552\n"
    assert render_text(single_key_table(), provenance=True).startswith("# bound: 4\n")


def test_csv_and_json():
    assert render_csv(single_key_table()) == "n,count\n1,0\n2,0\n3,1\n4,13027956824399552\n"
    records = json.loads(render_json(single_key_table()))
    assert records[0] == {"n": 1, "count": "0"}
    assert records[-1] == {"n": 4, "count": "13027956824399552"}
    with_provenance = json.loads(render_json(single_key_table(), provenance=True))
    assert with_provenance["provenance"] == {"bound": 4}
    assert with_provenance["rows"] == records


def test_two_key_text():
    table = CountTable(("n", "e"))
    for key, count in [((1, 0), 0), ((1, 1), 0), ((2, 0), 1), ((2, 1), 1)]:
        table.add(key, count)
    assert render(table, "text") == "# rows n, columns e = 0..1\n1: 0,0\n2: 1,1\n"


def test_empty_table_and_unknown_format():
    assert render_text(CountTable(("n",))) == "# empty\n"
    with pytest.raises(ValueError):
        render(single_key_table(), "xml")


def test_count_table_merge_and_lookup():
    left = CountTable(("n",))
    left.add((1,), 2)
    right = CountTable(("n",))
    right.add((2,), 10)
    merged = left.merge(right)
    assert merged.as_dict() == {(1,): 2, (2,): 10}
    assert merged.count(2) == 10
    with pytest.raises(KeyError):
        merged.count(3)
    with pytest.raises(ArithmeticError):
        merged.add((3,), -1)
    with pytest.raises(ValueError):
        left.merge(CountTable(("n", "k")))
