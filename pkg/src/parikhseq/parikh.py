"""Classic and extended Parikh matrix mappings.

The mapping induced by a word v of length k sends each letter to a unit
upper-triangular (k+1) x (k+1) matrix with a 1 at (q, q+1) for every
position q where v carries that letter, and extends to words as the product
of letter matrices.  Entry (i, j+1) of the image of w then counts the
occurrences of v[i..j] in w as a scattered subword.  The classic mapping is
the special case where v enumerates the ordered alphabet.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intmat import IntMatrix
from .words import Alphabet, PatternError, parse_word


@dataclass(frozen=True)
class ParikhContext:
    """Alphabet plus the inducing word that fixes the matrix dimension."""

    alphabet: Alphabet
    inducing: str

    def __post_init__(self) -> None:
        if not self.inducing:
            raise PatternError("inducing word must be nonempty")
        parse_word(self.inducing, self.alphabet)

    @classmethod
    def classic(cls, alphabet: Alphabet) -> ParikhContext:
        """Inducing word = the alphabet in order (the original mapping)."""
        return cls(alphabet, alphabet.concat())

    @classmethod
    def induced_by(cls, inducing: str, alphabet: Alphabet | None = None) -> ParikhContext:
        if alphabet is None:
            alphabet = Alphabet(tuple(sorted(set(inducing))))
        return cls(alphabet, inducing)

    @property
    def dim(self) -> int:
        return len(self.inducing) + 1

    @property
    def is_classic(self) -> bool:
        return self.inducing == self.alphabet.concat()


def letter_matrix(ctx: ParikhContext, letter: str) -> IntMatrix:
    """Image of a single letter: unit upper triangular with a 1 at (q, q+1)
    for every inducing-word position q holding that letter."""
    if letter not in ctx.alphabet:
        raise PatternError(f"symbol {letter!r} not in alphabet {ctx.alphabet}")
    n = ctx.dim
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for q, ch in enumerate(ctx.inducing):
        if ch == letter:
            rows[q][q + 1] = 1
    return IntMatrix(rows)


class ParikhFold:
    """Streaming left-to-right fold of letter matrices.

    Appending a letter multiplies on the right by a sparse generator, which
    reduces to column updates col[q+1] += col[q]; columns are processed in
    descending order so each update reads pre-push values.
    """

    def __init__(self, ctx: ParikhContext):
        self.ctx = ctx
        n = ctx.dim
        self._cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
        self._hits: dict[str, tuple[int, ...]] = {}

    def _positions(self, letter: str) -> tuple[int, ...]:
        try:
            return self._hits[letter]
        except KeyError:
            if letter not in self.ctx.alphabet:
                raise PatternError(
                    f"symbol {letter!r} not in alphabet {self.ctx.alphabet}"
                ) from None
            pos = tuple(
                q for q in range(len(self.ctx.inducing) - 1, -1, -1)
                if self.ctx.inducing[q] == letter
            )
            self._hits[letter] = pos
            return pos

    def push(self, letter: str) -> None:
        cols = self._cols
        for q in self._positions(letter):
            cols[q + 1] = [a + b for a, b in zip(cols[q + 1], cols[q])]

    def extend(self, letters) -> None:
        for letter in letters:
            self.push(letter)

    def result(self) -> IntMatrix:
        return IntMatrix(list(zip(*self._cols)))


def parikh_matrix(ctx: ParikhContext, w: str) -> IntMatrix:
    """Image of w under the mapping induced by ctx (fold of letter matrices)."""
    fold = ParikhFold(ctx)
    fold.extend(w)
    return fold.result()
