"""Factor and sequence matrices over gap patterns.

For a pattern with flat length L >= 2 the matrix has dimension 3(L-1) and
block layout

    [[I, E, F],
     [0, C, S],
     [0, 0, I]]

with each block (L-1) x (L-1).  Cell meanings, with d = L-1 and B the
pattern's boundary set (1-based block coordinates, i <= j):

    F[i][j]  occurrences of the fragment [i, j+1], no anchors
    E[i][j]  fragment [i, j], anchored to the word's end iff j is not in B
    S[i][j]  fragment [i+1, j+1], anchored to the word's start iff i not in B
    C[i][j]  fragment [i+1, j], start-anchored iff i not in B, end-anchored
             iff j not in B (diagonal: the empty fragment, so 1 at boundary
             indices and [w is empty] elsewhere)

Everything below these triangles is 0 and the outer identity blocks hold 1s.
The mapping is a homomorphism: the matrix of a concatenation is the product
of the matrices, which the streaming fold exploits letter by letter.
"""

from __future__ import annotations

from typing import Iterable, Union

from .counting import count_piece
from .intmat import IntMatrix
from .words import GapPattern, PatternError, Piece, SYMBOL_CHARS

BLOCK_NAMES = ("E", "F", "C", "S")

Cell = Union[int, Piece]


def block_dim(pattern: GapPattern) -> int:
    """Block dimension L-1; rejects flat length < 2 (matrix undefined)."""
    d = pattern.flat_length - 1
    if d < 1:
        raise PatternError(
            f"pattern {pattern} has flat length {pattern.flat_length}; "
            "the matrix mapping needs flat length >= 2"
        )
    return d


class EntryLayout:
    """Total cell map of the matrix for one pattern: 0, 1, or a piece."""

    def __init__(self, pattern: GapPattern):
        self.pattern = pattern
        self.dim_block = block_dim(pattern)
        self.dim = 3 * self.dim_block

    def suffix_cell(self, i: int, j: int) -> Piece:
        """E[i][j] for 1 <= i <= j <= d."""
        b = self.pattern.boundaries
        return self.pattern.piece(i, j, False, j not in b)

    def factor_cell(self, i: int, j: int) -> Piece:
        """F[i][j] for 1 <= i <= j <= d."""
        return self.pattern.piece(i, j + 1, False, False)

    def prefix_cell(self, i: int, j: int) -> Piece:
        """S[i][j] for 1 <= i <= j <= d."""
        b = self.pattern.boundaries
        return self.pattern.piece(i + 1, j + 1, i not in b, False)

    def whole_cell(self, i: int, j: int) -> Piece:
        """C[i][j] for 1 <= i <= j <= d; the diagonal is the empty piece,
        unanchored at boundary indices and both-anchored elsewhere."""
        b = self.pattern.boundaries
        return self.pattern.piece(i + 1, j, i not in b, j not in b)

    def block_cell(self, name: str, i: int, j: int) -> Cell:
        """Cell (i, j) of a named block, including its zero lower triangle."""
        d = self.dim_block
        if not (1 <= i <= d and 1 <= j <= d):
            raise ValueError(f"block cell ({i}, {j}) outside [1, {d}]^2")
        if j < i:
            return 0
        if name == "E":
            return self.suffix_cell(i, j)
        if name == "F":
            return self.factor_cell(i, j)
        if name == "S":
            return self.prefix_cell(i, j)
        if name == "C":
            return self.whole_cell(i, j)
        raise ValueError(f"unknown block {name!r}")

    def cell(self, row: int, col: int) -> Cell:
        """Cell of the full 3d x 3d matrix (1-based)."""
        d = self.dim_block
        if not (1 <= row <= 3 * d and 1 <= col <= 3 * d):
            raise ValueError(f"cell ({row}, {col}) outside [1, {3 * d}]^2")
        br, i = divmod(row - 1, d)
        bc, j = divmod(col - 1, d)
        i += 1
        j += 1
        if br == bc and br != 1:
            return 1 if i == j else 0
        if br > bc:
            return 0
        name = [["", "E", "F"], ["", "C", "S"]][br][bc] if br < 2 else ""
        if not name:
            return 0
        return self.block_cell(name, i, j)


def entry_spec(pattern: GapPattern) -> EntryLayout:
    return EntryLayout(pattern)


class SeqMatrix:
    """A pattern together with its 3(L-1)-dimensional matrix image."""

    __slots__ = ("pattern", "matrix")

    def __init__(self, pattern: GapPattern, matrix: IntMatrix):
        d = block_dim(pattern)
        if matrix.dim != 3 * d:
            raise ValueError(
                f"matrix dim {matrix.dim} does not match pattern dim {3 * d}"
            )
        object.__setattr__(self, "pattern", pattern)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("SeqMatrix is immutable")

    @property
    def dim_block(self) -> int:
        return self.matrix.dim // 3

    def block(self, name: str) -> IntMatrix:
        """Named (L-1) x (L-1) block: E, F, C, or S."""
        d = self.dim_block
        offsets = {"E": (0, d), "F": (0, 2 * d), "C": (d, d), "S": (d, 2 * d)}
        if name not in offsets:
            raise ValueError(f"unknown block {name!r}")
        r0, c0 = offsets[name]
        return IntMatrix(
            [row[c0 : c0 + d] for row in self.matrix.rows[r0 : r0 + d]]
        )

    def blocks(self) -> dict[str, IntMatrix]:
        return {name: self.block(name) for name in BLOCK_NAMES}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeqMatrix):
            return NotImplemented
        return self.pattern == other.pattern and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((self.pattern, self.matrix))

    def __str__(self) -> str:
        return str(self.matrix)


def seq_matrix_direct(pattern: GapPattern, w: str) -> SeqMatrix:
    """Matrix built cell by cell from anchored-piece counts."""
    layout = EntryLayout(pattern)
    n = layout.dim
    rows = []
    for row in range(1, n + 1):
        out = []
        for col in range(1, n + 1):
            cell = layout.cell(row, col)
            out.append(count_piece(w, cell) if isinstance(cell, Piece) else cell)
        rows.append(out)
    return SeqMatrix(pattern, IntMatrix(rows))


def seq_matrix_letter(pattern: GapPattern, letter: str) -> IntMatrix:
    """Generator matrix of a single letter."""
    if len(letter) != 1 or letter not in SYMBOL_CHARS:
        raise PatternError(f"invalid letter {letter!r}")
    return seq_matrix_direct(pattern, letter).matrix


class SeqFold:
    """Streaming left-to-right fold of letter matrices for one pattern.

    A letter's generator is sparse: its E and S blocks are diagonal 0/1, its
    C block is a 0/1 diagonal plus a 0/1 superdiagonal, and its F block is
    zero.  Appending letter c therefore reduces to per-column updates on the
    running blocks (stored column-major), using the product rules

        F <- F + E * S_c      S <- S + C * S_c
        E <- E_c + E * C_c    C <- C * C_c

    with the F and S updates reading the pre-push E and C.  O(1) matrices are
    in flight regardless of word length.
    """

    def __init__(self, pattern: GapPattern):
        d = block_dim(pattern)
        self.pattern = pattern
        self._d = d
        # column-major blocks: block[j][i] is the (i, j) entry (0-based)
        self._e = [[0] * d for _ in range(d)]
        self._f = [[0] * d for _ in range(d)]
        self._s = [[0] * d for _ in range(d)]
        self._c = [[1 if i == j else 0 for i in range(d)] for j in range(d)]
        self._bdiag = [(j + 1) in pattern.boundaries for j in range(d)]
        self._masks: dict[str, tuple[list[bool], list[bool]]] = {}

    def _mask(self, letter: str) -> tuple[list[bool], list[bool]]:
        try:
            return self._masks[letter]
        except KeyError:
            if len(letter) != 1 or letter not in SYMBOL_CHARS:
                raise PatternError(f"invalid letter {letter!r}") from None
            flat = self.pattern.flat
            d = self._d
            head = [flat[j] == letter for j in range(d)]
            tail = [flat[j + 1] == letter for j in range(d)]
            self._masks[letter] = (head, tail)
            return head, tail

    def push(self, letter: str) -> None:
        head, tail = self._mask(letter)
        d = self._d
        e, f, s, c = self._e, self._f, self._s, self._c
        bdiag = self._bdiag
        for j in range(d):
            if tail[j]:
                f[j] = [a + b for a, b in zip(f[j], e[j])]
                s[j] = [a + b for a, b in zip(s[j], c[j])]
        new_e = []
        new_c = []
        for j in range(d):
            keep = bdiag[j]
            shift = j > 0 and head[j]
            if keep and shift:
                col_e = [a + b for a, b in zip(e[j], e[j - 1])]
                col_c = [a + b for a, b in zip(c[j], c[j - 1])]
            elif keep:
                col_e = list(e[j])
                col_c = list(c[j])
            elif shift:
                col_e = list(e[j - 1])
                col_c = list(c[j - 1])
            else:
                col_e = [0] * d
                col_c = [0] * d
            if head[j]:
                col_e[j] += 1
            new_e.append(col_e)
            new_c.append(col_c)
        self._e = new_e
        self._c = new_c

    def extend(self, letters: Iterable[str]) -> None:
        for letter in letters:
            self.push(letter)

    def result(self) -> SeqMatrix:
        d = self._d
        n = 3 * d
        rows = [[0] * n for _ in range(n)]
        for k in range(n):
            rows[k][k] = 1
        for j in range(d):
            for i in range(d):
                rows[i][d + j] = self._e[j][i]
                rows[i][2 * d + j] = self._f[j][i]
                rows[d + i][2 * d + j] = self._s[j][i]
                rows[d + i][d + j] = self._c[j][i]
        return SeqMatrix(self.pattern, IntMatrix(rows))


def seq_matrix(pattern: GapPattern, letters: Union[str, Iterable[str]]) -> SeqMatrix:
    """Matrix image of a word, computed as the streaming fold of letter
    generators; equals seq_matrix_direct on every input."""
    fold = SeqFold(pattern)
    fold.extend(letters)
    return fold.result()


def factor_matrix(sigma: str, w: str) -> SeqMatrix:
    """Factor-counting special case: the bullet-free pattern [sigma]."""
    if len(sigma) < 2:
        raise PatternError(f"factor matrix needs |sigma| >= 2, got {sigma!r}")
    return seq_matrix(GapPattern((sigma,)), w)
