"""Tests for linhash."""
