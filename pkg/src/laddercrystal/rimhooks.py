"""Removable rim hooks of length ell, ell-cores and ell-weights."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import NamedTuple

from .partitions import (
    Box,
    Partition,
    check_ell,
    check_partition,
    hook_grid,
    transpose,
)

HORIZONTAL = "horizontal"
VERTICAL = "vertical"
NEITHER = "neither"


class InvalidHookError(ValueError):
    pass


@dataclass(frozen=True)
class RimHook:
    """A removable rim hook; boxes run along the rim from northeast to southwest."""

    boxes: tuple[Box, ...]
    shape: str

    def __len__(self) -> int:
        return len(self.boxes)

    @property
    def box_set(self) -> frozenset[Box]:
        return frozenset(self.boxes)


class CoreResult(NamedTuple):
    core: Partition
    weight: int


def _rim_walk(lam: Partition, base: Box) -> tuple[Box, ...]:
    """The rim boxes between the end of base's row and the foot of base's column."""
    row, col = base
    foot_row = transpose(lam)[col - 1]
    i, j = row, lam[row - 1]
    path = [(i, j)]
    while (i, j) != (foot_row, col):
        if i < len(lam) and lam[i] >= j:
            i += 1
        else:
            j -= 1
        path.append((i, j))
    return tuple(path)


def _classify(boxes: tuple[Box, ...]) -> str:
    if all(b[0] == boxes[0][0] for b in boxes):
        return HORIZONTAL
    if all(b[1] == boxes[0][1] for b in boxes):
        return VERTICAL
    return NEITHER


def removable_rim_hooks(lam: Partition, ell: int) -> list[RimHook]:
    """All removable ell-rim hooks, ordered by the row of their northeast box.

    There is one removable hook per box of hook length exactly ell, and hook
    lengths strictly decrease along a row, so rows contribute at most one each.
    """
    check_ell(ell)
    grid = hook_grid(lam)
    out = []
    for row in range(1, len(lam) + 1):
        hooks = grid[row - 1]
        for col in range(1, lam[row - 1] + 1):
            h = hooks[col - 1]
            if h < ell:
                break
            if h == ell:
                boxes = _rim_walk(lam, (row, col))
                out.append(RimHook(boxes, _classify(boxes)))
                break
    return out


def _remove(lam: Partition, hook: RimHook) -> Partition:
    new = list(lam)
    for row, _col in hook.boxes:
        new[row - 1] -= 1
    return check_partition(new)


def remove_rim_hook(lam: Partition, hook: RimHook) -> Partition:
    """Remove *hook* from lam; raises InvalidHookError unless it is removable."""
    ell = len(hook.boxes)
    if ell < 2:
        raise InvalidHookError(f"hook too short: {hook}")
    for candidate in removable_rim_hooks(lam, ell):
        if candidate.box_set == hook.box_set:
            return _remove(lam, candidate)
    raise InvalidHookError(f"{hook} is not a removable rim hook of {lam}")


@functools.lru_cache(maxsize=None)
def ell_core(lam: Partition, ell: int) -> CoreResult:
    """Remove ell-rim hooks until none remain (topmost hook first each time).

    The resulting core and the number of hooks removed (the weight) do not
    depend on the removal order.
    """
    check_ell(ell)
    weight = 0
    cur = lam
    while True:
        hooks = removable_rim_hooks(cur, ell)
        if not hooks:
            return CoreResult(cur, weight)
        cur = _remove(cur, hooks[0])
        weight += 1


def is_core(lam: Partition, ell: int) -> bool:
    """True when no hook length is divisible by ell."""
    check_ell(ell)
    return not any(h % ell == 0 for row in hook_grid(lam) for h in row)


def adjacent(a: RimHook, b: RimHook) -> bool:
    """True when some box of a shares an edge with some box of b.

    The hooks must not overlap.
    """
    sa, sb = a.box_set, b.box_set
    if sa & sb:
        raise InvalidHookError(f"hooks overlap: {sorted(sa & sb)}")
    for row, col in sa:
        for nbr in ((row + 1, col), (row - 1, col), (row, col + 1), (row, col - 1)):
            if nbr in sb:
                return True
    return False
