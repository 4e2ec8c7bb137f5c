"""Classical and ladder crystal operators on partitions.

Both models read a signature word over the addable (+) and removable (-)
boxes of one residue, cancel adjacent "-+" pairs, and act at the surviving
good/cogood box.  They differ only in the reading order: the classical word
runs bottom-left to top-right; the ladder word runs ladder by ladder,
top-to-bottom within each ladder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .partitions import (
    Box,
    Partition,
    add_box,
    addable_boxes,
    check_ell,
    contains,
    ladder_index,
    remove_box,
    removable_boxes,
    residue,
)

PLUS = "+"
MINUS = "-"

CLASSICAL = "classical"
LADDER = "ladder"


class SignatureEntry(NamedTuple):
    sign: str
    box: Box


@dataclass(frozen=True)
class SignatureWord:
    entries: tuple[SignatureEntry, ...]
    order: str

    @property
    def word(self) -> str:
        return "".join(e.sign for e in self.entries)

    def __iter__(self):
        return iter(self.entries)


def _entries(lam: Partition, i: int, ell: int) -> list[SignatureEntry]:
    plus = [SignatureEntry(PLUS, b) for b in addable_boxes(lam, i, ell)]
    minus = [SignatureEntry(MINUS, b) for b in removable_boxes(lam, i, ell)]
    return plus + minus


def i_signature(lam: Partition, i: int, ell: int) -> SignatureWord:
    """Classical signature: entries ordered from the bottom row upward.

    No row carries two entries (an addable and a removable box of one residue
    cannot share a row), so the order is total.
    """
    entries = sorted(_entries(lam, i, ell), key=lambda e: -e.box[0])
    rows = [e.box[0] for e in entries]
    assert len(rows) == len(set(rows)), f"duplicate signature row for {lam}, i={i}"
    return SignatureWord(tuple(entries), CLASSICAL)


def ladder_i_signature(lam: Partition, i: int, ell: int) -> SignatureWord:
    """Ladder signature: by increasing ladder index, top-to-bottom in a ladder."""
    entries = sorted(
        _entries(lam, i, ell),
        key=lambda e: (ladder_index(e.box, ell), e.box[0]),
    )
    return SignatureWord(tuple(entries), order=LADDER)


def reduce_signature(sig: SignatureWord) -> SignatureWord:
    """Cancel adjacent "-+" pairs exhaustively, leaving a word "+...+-...-"."""
    stack: list[SignatureEntry] = []
    for entry in sig.entries:
        if entry.sign == PLUS and stack and stack[-1].sign == MINUS:
            stack.pop()
        else:
            stack.append(entry)
    return SignatureWord(tuple(stack), sig.order)


def _good_box(sig: SignatureWord) -> Box | None:
    for entry in reduce_signature(sig):
        if entry.sign == MINUS:
            return entry.box
    return None


def _cogood_box(sig: SignatureWord) -> Box | None:
    last = None
    for entry in reduce_signature(sig):
        if entry.sign == PLUS:
            last = entry.box
    return last


def epsilon(lam: Partition, i: int, ell: int) -> int:
    return sum(1 for e in reduce_signature(i_signature(lam, i, ell)) if e.sign == MINUS)


def phi(lam: Partition, i: int, ell: int) -> int:
    return sum(1 for e in reduce_signature(i_signature(lam, i, ell)) if e.sign == PLUS)


def ladder_epsilon(lam: Partition, i: int, ell: int) -> int:
    return sum(1 for e in reduce_signature(ladder_i_signature(lam, i, ell)) if e.sign == MINUS)


def ladder_phi(lam: Partition, i: int, ell: int) -> int:
    return sum(1 for e in reduce_signature(ladder_i_signature(lam, i, ell)) if e.sign == PLUS)


def e_tilde(lam: Partition, i: int, ell: int) -> Partition | None:
    """Remove the good i-box (classical), or None when epsilon is 0."""
    box = _good_box(i_signature(lam, i, ell))
    return None if box is None else remove_box(lam, box)


def f_tilde(lam: Partition, i: int, ell: int) -> Partition | None:
    """Add the cogood i-box (classical), or None when phi is 0."""
    box = _cogood_box(i_signature(lam, i, ell))
    return None if box is None else add_box(lam, box)


def e_hat(lam: Partition, i: int, ell: int) -> Partition | None:
    """Remove the good i-box (ladder reading), or None."""
    box = _good_box(ladder_i_signature(lam, i, ell))
    return None if box is None else remove_box(lam, box)


def f_hat(lam: Partition, i: int, ell: int) -> Partition | None:
    """Add the cogood i-box (ladder reading), or None."""
    box = _cogood_box(ladder_i_signature(lam, i, ell))
    return None if box is None else add_box(lam, box)


def residue_content(lam: Partition, ell: int) -> tuple[int, ...]:
    """How many boxes of each residue the diagram holds."""
    check_ell(ell)
    counts = [0] * ell
    for row, part in enumerate(lam, start=1):
        for col in range(1, part + 1):
            counts[(col - row) % ell] += 1
    return tuple(counts)


# Box types (a)-(k).  Positions on row 0 or column 0 count as inside the
# diagram; type (e) boxes are exactly the removable ones and type (j)
# positions exactly the addable ones.


def _inside(lam: Partition, pos: Box) -> bool:
    row, col = pos
    if row <= 0 or col <= 0:
        return True
    return contains(lam, pos)


def box_type(lam: Partition, pos: Box) -> str:
    row, col = pos
    if row < 0 or col < 0:
        raise ValueError(f"position must have non-negative coordinates: {pos}")
    if _inside(lam, pos):
        below = _inside(lam, (row + 1, col))
        right = _inside(lam, (row, col + 1))
        if _inside(lam, (row + 1, col + 1)):
            return "a"
        if below and right:
            return "b"
        if col == 0 and not _inside(lam, (row, 1)):
            return "f"
        if below and not right:
            return "c"
        if right and not below:
            return "d"
        return "e"
    diagonal = (row - 1, col - 1)
    if not _inside(lam, diagonal):
        return "k"
    return {"e": "g", "c": "h", "d": "i", "b": "j", "f": "k"}.get(box_type(lam, diagonal), "k")
