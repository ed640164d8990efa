import json

import pytest

from thagkl.config import Settings, SettingsStore
from thagkl.errors import InvalidInputError


@pytest.fixture()
def store(temp_home):
    return SettingsStore(temp_home)


def test_defaults_without_file(store):
    assert store.load() == Settings()
    assert store.overridden == set()
    assert not store.config_file.exists()


def test_set_value_round_trips(store):
    store.set_value("series_order", "6")
    loaded = store.load()
    assert loaded.series_order == 6
    assert loaded.max_n == 10


def test_set_value_keeps_other_keys(store):
    store.set_value("max_n", "4")
    store.set_value("default_format", "latex")
    assert store.load() == Settings(max_n=4, default_format="latex")


def test_unreadable_file_is_ignored(store):
    store.config_dir.mkdir(parents=True)
    store.config_file.write_text("{not json")
    assert store.load() == Settings()


def test_unknown_and_bad_keys_are_skipped(store):
    store.config_dir.mkdir(parents=True)
    store.config_file.write_text(json.dumps({"max_n": "7", "colour": "red", "series_order": "many"}))
    assert store.load() == Settings(max_n=7)


def test_out_of_range_file_falls_back_to_defaults(store):
    store.config_dir.mkdir(parents=True)
    store.config_file.write_text(json.dumps({"max_n": 50}))
    assert store.load() == Settings()


def test_environment_overrides_file(store, monkeypatch):
    store.set_value("max_n", "4")
    monkeypatch.setenv("THAG_MAX_N", "6")
    loaded = store.load()
    assert loaded.max_n == 6
    assert store.overridden == {"max_n"}


def test_non_integer_environment_is_ignored(store, monkeypatch):
    monkeypatch.setenv("THAG_MAX_N", "six")
    assert store.load().max_n == 10
    assert store.overridden == set()


@pytest.mark.parametrize(
    "key, raw",
    [("max_n", "21"), ("series_order", "1"), ("default_format", "yaml"), ("max_n", "x"), ("depth", "3")],
)
def test_set_value_rejects(store, key, raw):
    with pytest.raises(InvalidInputError):
        store.set_value(key, raw)
    assert not store.config_file.exists()
