"""Ground-truth occurrence counters.

All counters run on prefix-indexed tabulation (never literal enumeration of
occurrence tuples), so they stay linear-ish in the word length and exact for
arbitrarily large counts.  Conventions: the empty subword/factor/piece counts
1 occurrence in any word; a both-anchored empty piece counts 1 only in the
empty word.
"""

from __future__ import annotations

from .words import GapPattern, Piece


def factor_starts(w: str, u: str) -> list[int]:
    """1-based start positions of u in w as a factor, overlaps included."""
    if not u:
        raise ValueError("factor_starts requires a nonempty factor")
    out = []
    start = w.find(u)
    while start != -1:
        out.append(start + 1)
        start = w.find(u, start + 1)
    return out


def count_subword(w: str, u: str) -> int:
    """Occurrences of u in w as a scattered subword (increasing positions)."""
    # ways[j] = occurrences of u[:j] in the prefix of w scanned so far
    ways = [1] + [0] * len(u)
    for ch in w:
        for j in range(len(u), 0, -1):
            if u[j - 1] == ch:
                ways[j] += ways[j - 1]
    return ways[len(u)]


def count_factor(w: str, u: str) -> int:
    """Occurrences of u in w as a contiguous factor; empty u counts 1."""
    if not u:
        return 1
    return len(factor_starts(w, u))


def _count_runs(
    w: str,
    runs: tuple[str, ...],
    left_anchored: bool,
    right_anchored: bool,
) -> int:
    """Placements of the runs in order, gap >= 0 between consecutive runs."""
    positions = []
    for run in runs:
        starts = factor_starts(w, run)
        if not starts:
            return 0
        positions.append(starts)
    if left_anchored:
        ways = [1 if p == 1 else 0 for p in positions[0]]
    else:
        ways = [1] * len(positions[0])
    for k in range(1, len(runs)):
        prev_starts = positions[k - 1]
        prev_ways = ways
        min_gap = len(runs[k - 1])
        ways = []
        acc = 0
        idx = 0
        for p in positions[k]:
            while idx < len(prev_starts) and prev_starts[idx] + min_gap <= p:
                acc += prev_ways[idx]
                idx += 1
            ways.append(acc)
    if right_anchored:
        pinned = len(w) - len(runs[-1]) + 1
        return sum(n for p, n in zip(positions[-1], ways) if p == pinned)
    return sum(ways)


def count_gapped(w: str, pattern: GapPattern) -> int:
    """Occurrences of the gap pattern in w: factors matched contiguously,
    consecutive factors separated by a gap of length >= 0."""
    return _count_runs(w, pattern.factors, False, False)


def count_piece(w: str, piece: Piece) -> int:
    """Occurrences of an anchored piece in w.

    Empty piece: 1 when unanchored or single-anchored, [w is empty] when
    both-anchored.
    """
    if piece.is_empty:
        if piece.left_anchored and piece.right_anchored:
            return 1 if not w else 0
        return 1
    return _count_runs(w, piece.runs, piece.left_anchored, piece.right_anchored)
