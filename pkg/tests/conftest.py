"""Shared pytest fixtures for thagkl tests."""

import sys
import importlib

import pytest
from click.testing import CliRunner


@pytest.fixture()
def temp_home(monkeypatch, tmp_path):
    """Point HOME/USERPROFILE at an isolated directory for the settings file."""
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.setenv("USERPROFILE", str(tmp_path))
    monkeypatch.delenv("THAG_MAX_N", raising=False)
    return tmp_path


@pytest.fixture()
def cli_module(temp_home):
    """Reload the CLI module with the temporary home directory in place."""
    sys.modules.pop("thagkl.cli", None)
    return importlib.import_module("thagkl.cli")


@pytest.fixture()
def runner():
    return CliRunner()
