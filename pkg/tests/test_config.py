import io
import json
import sys

import pytest

from src.utils.config import BUDGET_ENV_VAR, Config, ConfigError
from src.utils.logging import get_logger, setup_logging
from src.utils.validation import parse_family, parse_int_set, parse_nonnegative_int, parse_positive_int


@pytest.fixture
def settings_file(tmp_path):
    def write(data):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps(data) if not isinstance(data, str) else data)
        return path

    return write


def test_defaults_without_a_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    config = Config()
    assert config.get("cli.format") == "text"
    assert config.get("cycle_index.max_degree") == 4
    assert config.get("oracle.exhaustive") is False
    assert config.get("missing.key", "fallback") == "fallback"


def test_file_values_merge_over_defaults(settings_file):
    config = Config(settings_file({"oracle": {"budget": 1234}}))
    assert config.get("oracle.budget") == 1234
    assert config.get("oracle.exhaustive") is False


def test_missing_explicit_file_is_an_error(tmp_path):
    with pytest.raises(ConfigError):
        Config(tmp_path / "nope.json")


def test_invalid_json_is_an_error(settings_file):
    with pytest.raises(ConfigError):
        Config(settings_file("{not json"))
    with pytest.raises(ConfigError):
        Config(settings_file("[1, 2]"))


def test_budget_precedence(settings_file, monkeypatch):
    config = Config(settings_file({"oracle": {"budget": 500}}))
    monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)
    assert config.oracle_budget() == 500
    monkeypatch.setenv(BUDGET_ENV_VAR, "70")
    assert config.oracle_budget() == 70
    assert config.oracle_budget(9) == 9
    monkeypatch.setenv(BUDGET_ENV_VAR, "lots")
    with pytest.raises(ConfigError):
        config.oracle_budget()


def test_integer_parsing():
    assert parse_positive_int(" 7 ") == 7
    assert parse_nonnegative_int("0") == 0
    with pytest.raises(ValueError):
        parse_positive_int("0", "--max-n")
    with pytest.raises(ValueError):
        parse_nonnegative_int("-1")
    with pytest.raises(ValueError):
        parse_positive_int("three")


def test_int_set_parsing():
    assert parse_int_set("1,3,4") == frozenset({1, 3, 4})
    assert parse_int_set("{1, 3}") == frozenset({1, 3})
    for bad in ["", "1,,2", "a,b", "0,1"]:
        with pytest.raises(ValueError):
            parse_int_set(bad)


def test_family_parsing():
    assert parse_family("outdegree:2") == ("outdegree", "2")
    assert parse_family("Relation") == ("relation", None)
    assert parse_family("outdegree-set:1,3,4") == ("outdegree-set", "1,3,4")
    with pytest.raises(ValueError):
        parse_family("")
    with pytest.raises(ValueError):
        parse_family("2:3")


def test_log_records_follow_a_replaced_stderr(monkeypatch):
    setup_logging()
    replaced = io.StringIO()
    monkeypatch.setattr(sys, "stderr", replaced)
    get_logger("config-test").info("written after the swap")
    assert "written after the swap" in replaced.getvalue()
