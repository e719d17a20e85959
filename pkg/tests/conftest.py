"""Pytest configuration and shared fixtures for tests."""

import os

import pytest

from linhash.config import get_settings
from linhash.models import BitWord, BurstVariant, CodeMode, CodeSpec, DistortionSet, LinearHashFunction


@pytest.fixture(scope="session", autouse=True)
def socket_allow_unix():
    """Keep tests off the network; unix sockets stay available."""

    import pytest_socket

    pytest_socket.enable_socket()
    pytest_socket.socket_allow_hosts(["localhost", "127.0.0.1"])
    pytest_socket.disable_socket(allow_unix_socket=True)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Drop cached settings and any LINHASH_* variables from the environment."""
    for key in list(os.environ):
        if key.upper().startswith("LINHASH_"):
            monkeypatch.delenv(key, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def burst_strict() -> DistortionSet:
    """Two adjacent flips on 6-bit words."""
    return DistortionSet.burst(6, 2, BurstVariant.STRICT)


@pytest.fixture
def detect_code() -> CodeSpec:
    """Detection code for adjacent double flips on 6 bits: alternating table, check at position 1."""
    h = LinearHashFunction.from_strings(["1", "0", "1", "0", "1", "0"])
    return CodeSpec.leading_checks(h, CodeMode.DETECT, {})


@pytest.fixture
def correct_code() -> CodeSpec:
    """Correction code for adjacent double flips on 6 bits, with v_5 = 1111 and v_6 = 1000."""
    h = LinearHashFunction.from_strings(["1000", "0100", "0010", "0001", "1111", "1000"])
    return CodeSpec.leading_checks(h, CodeMode.CORRECT, {"distortions": "burst:2:strict"})


@pytest.fixture
def word():
    """Shorthand for BitWord.from_string."""
    return BitWord.from_string
