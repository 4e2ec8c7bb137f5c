"""Shared hypothesis strategies for partition-valued tests."""

from __future__ import annotations

from hypothesis import strategies as st


def partitions(max_part: int = 8, max_len: int = 8):
    """Random partitions as weakly decreasing tuples, including the empty one."""
    return st.lists(st.integers(1, max_part), max_size=max_len).map(
        lambda parts: tuple(sorted(parts, reverse=True))
    )


def moduli(lo: int = 2, hi: int = 5):
    return st.integers(lo, hi)


def jm_moduli(hi: int = 5):
    """Moduli valid for the JM / Mullineux layer (needs at least 3)."""
    return st.integers(3, hi)
