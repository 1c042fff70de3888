"""Compressed move sequences: lists of (from, to, count) slide triples."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import InputError


class MoveSequence:
    """Ordered slides, run-length compressed.

    A triple (u, v, c) stands for c consecutive slides of one token from u
    to v.  ``total_length`` is the number of unit moves, which may be far
    larger than the number of triples.
    """

    __slots__ = ("moves", "total_length")

    def __init__(self, moves: Iterable[tuple[int, int, int]] = ()):
        out = []
        total = 0
        for u, v, c in moves:
            if u == v:
                raise InputError(f"move ({u}, {v}) does not change anything")
            if c < 1:
                raise InputError(f"move ({u}, {v}) has count {c} < 1")
            out.append((u, v, c))
            total += c
        self.moves = tuple(out)
        self.total_length = total

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        return iter(self.moves)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MoveSequence):
            return NotImplemented
        return self.moves == other.moves

    def __repr__(self) -> str:
        return f"MoveSequence({len(self.moves)} triples, {self.total_length} moves)"


def expand_moves(seq: MoveSequence) -> list[tuple[int, int]]:
    """Flatten to unit moves, preserving order."""
    out = []
    for u, v, c in seq.moves:
        out.extend([(u, v)] * c)
    return out


def iter_unit_moves(seq: MoveSequence) -> Iterator[tuple[int, int]]:
    for u, v, c in seq.moves:
        for _ in range(c):
            yield (u, v)


def compress_moves(unit_moves: Iterable[tuple[int, int]]) -> MoveSequence:
    """Merge consecutive identical unit moves into triples."""
    triples: list[list[int]] = []
    for u, v in unit_moves:
        if triples and triples[-1][0] == u and triples[-1][1] == v:
            triples[-1][2] += 1
        else:
            triples.append([u, v, 1])
    return MoveSequence(tuple(t) for t in triples)
