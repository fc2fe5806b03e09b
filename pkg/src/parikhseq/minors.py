"""Special minors of sequence matrices and the witness-word reduction.

The special minor of a pattern with factors q_1 .. q_x in a word w is the
(x+1) x (x+1) unit upper-triangular matrix whose (i, j) entry above the
diagonal counts q_i . ... . q_{j-1} in w.  It equals the principal submatrix
of the full sequence matrix on the index set {1} union {(L-1) + l_m} union
{3(L-1)}, and it is always the classic Parikh matrix of a witness word over
a derived x-letter alphabet, which makes every minor determinant
nonnegative.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from heapq import heappop, heappush
from itertools import combinations

from .counting import count_gapped, factor_starts
from .intmat import IntMatrix
from .parikh import ParikhContext, parikh_matrix
from .seqmat import SeqMatrix
from .words import Alphabet, GapPattern

# single-character pool backing the derived alphabet a_1 < ... < a_x
_WITNESS_POOL = string.ascii_lowercase + string.ascii_uppercase + string.digits


def minor_index_set(pattern: GapPattern) -> tuple[int, ...]:
    """1-based row/column indices of the special minor inside the full matrix."""
    length = pattern.flat_length
    if length < 2:
        raise ValueError(
            f"pattern {pattern} has no full matrix to extract from (flat length < 2)"
        )
    d = length - 1
    cuts = sorted(pattern.boundaries)
    return (1, *[d + l for l in cuts], 3 * d)


def special_minor(pattern: GapPattern, w: str) -> IntMatrix:
    """Direct construction from gapped-subsequence counts."""
    x = len(pattern.factors)
    rows = []
    for i in range(1, x + 2):
        row = []
        for j in range(1, x + 2):
            if j < i:
                row.append(0)
            elif j == i:
                row.append(1)
            else:
                row.append(count_gapped(w, pattern.factor_slice(i, j - 1)))
        rows.append(row)
    return IntMatrix(rows)


def special_minor_from_matrix(sm: SeqMatrix) -> IntMatrix:
    """Extraction route: principal submatrix of a sequence matrix."""
    idx = minor_index_set(sm.pattern)
    return sm.matrix.minor(idx, idx)


def witness_alphabet(x: int) -> Alphabet:
    """Derived alphabet a_1 < ... < a_x, one symbol per factor index."""
    if not 1 <= x <= len(_WITNESS_POOL):
        raise ValueError(f"witness alphabet supports 1..{len(_WITNESS_POOL)} factors")
    return Alphabet(tuple(_WITNESS_POOL[:x]))


def witness_text(witness: tuple[int, ...], x: int) -> str:
    """Render factor indices as a_1..a_x tokens; comma-joined when x > 9."""
    tokens = [f"a{i}" for i in witness]
    return ",".join(tokens) if x > 9 else "".join(tokens)


def witness_parikh_matrix(witness: tuple[int, ...], x: int) -> IntMatrix:
    """Classic Parikh matrix of the witness over the derived alphabet."""
    alphabet = witness_alphabet(x)
    word = "".join(alphabet.symbols[i - 1] for i in witness)
    return parikh_matrix(ParikhContext.classic(alphabet), word)


def witness_word(pattern: GapPattern, w: str) -> tuple[int, ...]:
    """Word over factor indices 1..x whose classic Parikh matrix equals the
    special minor of the pattern in w.

    The matrix entry for a_i..a_j counts index chains whose symbols appear in
    increasing position order, so the witness only has to realize one forced
    orientation per pair: the symbol for occurrence k of q_l precedes the
    symbol for occurrence m of q_{l+1} exactly when the former ends before
    the latter starts (overlapping or reversed occurrences go the other way
    round), and same-factor symbols keep their start order.  Together with
    the fact that occurrences of one factor all have the same length, these
    orientations form an acyclic digraph: along any cycle the start position
    would gain at least len(q_l) on every upward crossing and lose at most
    len(q_l) - 1 on every downward one, a net strict increase.  Emitting any
    linear extension therefore reproduces every matrix entry; ties are broken
    by (start position, longer factor first, larger index first), matching
    the natural left-to-right scan of w.

    (A bubble-sort-style repair restricted to overlapping pairs cannot do
    this in general: for the pattern ba.a.b in the word "ba" the required
    word is a3 a2 a1, but the symbols for q_2 and q_3 never overlap, so no
    sweep may reorder them once the q_1/q_2 swap puts them the wrong way.)
    """
    factors = pattern.factors
    x = len(factors)
    occurrences = [factor_starts(w, q) for q in factors]

    ready: list[tuple[tuple[int, int, int, int], tuple[int, int]]] = []
    succs: dict[tuple[int, int], list[tuple[int, int]]] = {}
    indegree: dict[tuple[int, int], int] = {}

    def key(level: int, ordinal: int) -> tuple[int, int, int, int]:
        start = occurrences[level - 1][ordinal]
        return (start, -len(factors[level - 1]), -level, ordinal)

    for level in range(1, x + 1):
        for ordinal in range(len(occurrences[level - 1])):
            node = (level, ordinal)
            succs[node] = []
            indegree[node] = 0

    def add_edge(a: tuple[int, int], b: tuple[int, int]) -> None:
        succs[a].append(b)
        indegree[b] += 1

    for level in range(1, x + 1):
        for ordinal in range(len(occurrences[level - 1]) - 1):
            add_edge((level, ordinal), (level, ordinal + 1))
    for level in range(1, x):
        low_len = len(factors[level - 1])
        for k, s_low in enumerate(occurrences[level - 1]):
            end_low = s_low + low_len - 1
            for m, s_high in enumerate(occurrences[level]):
                if end_low < s_high:
                    add_edge((level, k), (level + 1, m))
                else:
                    add_edge((level + 1, m), (level, k))

    for node, deg in indegree.items():
        if deg == 0:
            heappush(ready, (key(*node), node))
    word: list[int] = []
    while ready:
        _, node = heappop(ready)
        word.append(node[0])
        for nxt in succs[node]:
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                heappush(ready, (key(*nxt), nxt))
    if len(word) != len(succs):
        raise RuntimeError(
            "witness orientation graph has a cycle; this indicates a bug in "
            "the construction, not an input problem"
        )
    return tuple(word)


@dataclass(frozen=True)
class MinorSweep:
    """Result of enumerating minor determinants up to a given order."""

    dim: int
    max_order: int
    minors_checked: int
    violations: tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]

    @property
    def all_nonnegative(self) -> bool:
        return not self.violations


def check_minor_nonneg(matrix: IntMatrix, max_order: int) -> MinorSweep:
    """Enumerate every square minor of order <= max_order and report any with
    a negative determinant."""
    if not matrix.is_unit_upper_triangular():
        raise ValueError("minor sweep expects a unit upper-triangular matrix")
    n = matrix.dim
    checked = 0
    violations = []
    for order in range(1, min(max_order, n) + 1):
        for rows in combinations(range(1, n + 1), order):
            for cols in combinations(range(1, n + 1), order):
                det = matrix.minor(rows, cols).det()
                checked += 1
                if det < 0:
                    violations.append((rows, cols, det))
    return MinorSweep(n, max_order, checked, tuple(violations))


def verify_witness(pattern: GapPattern, w: str) -> tuple[tuple[int, ...], IntMatrix, bool]:
    """Build the witness and confirm its Parikh matrix equals the minor."""
    witness = witness_word(pattern, w)
    minor = special_minor(pattern, w)
    psi = witness_parikh_matrix(witness, len(pattern.factors))
    return witness, minor, psi == minor
