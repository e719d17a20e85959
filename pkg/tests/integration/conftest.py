"""Shared fixtures for command-line tests."""

from pathlib import Path

import pytest

from linhash.cli import run_cli


@pytest.fixture
def build_code(tmp_path):
    """Run ``linhash build`` with the given flags and return the code file path."""

    def build(name: str, *flags: str) -> Path:
        path = tmp_path / name
        status = run_cli(["build", *flags, "--out", str(path)])
        assert status == 0
        return path

    return build
