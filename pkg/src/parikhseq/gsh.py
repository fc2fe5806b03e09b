"""Generalized subword histories: expressions over gapped-subsequence counts.

A monomial is a factor tuple evaluated as a gapped-subsequence count (the
empty tuple is the unit, value 1).  Expressions combine monomials with +, -,
x and integer scaling; every expression is equivalent to a linear form, a
finite integer combination of monomials, computed here by eliminating
products.

Product elimination enumerates merge schemes: ways to interleave the two
factor sequences into an alternating run sequence in which some adjacent
(run of one side, run of the other side) pairs are fused into junctions.  A
junction contributes its reduction: the words carrying an overlap-connected,
span-filling joint placement of both runs, each weighted by the number of
such placements.  Junction-free schemes are exactly the ground shuffle
terms.  The paper-style rule set that reduces only plain-run-then-primed-run
junctions is kept as `linearize_product_literal` for comparison; it
undercounts (e.g. (a.a) x a on the word aa) and is not used by `linearize`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product
from typing import Iterator, Union

from .counting import count_gapped
from .words import Alphabet, GapPattern, PatternError

Monomial = tuple[str, ...]


def mono_key(m: Monomial) -> tuple:
    return (sum(map(len, m)), len(m), m)


def render_mono(m: Monomial) -> str:
    return ".".join(m) if m else "#e"


def canonical_mono(factors) -> Monomial:
    """Drop empty factors (the unit acts as identity under the gap marker)."""
    return tuple(f for f in factors if f)


class Expr:
    """Base expression node; combines with +, -, * and unary minus."""

    def __add__(self, other: Expr) -> Expr:
        return Sum((self, other))

    def __sub__(self, other: Expr) -> Expr:
        return Sum((self, Neg(other)))

    def __neg__(self) -> Expr:
        return Neg(self)

    def __mul__(self, other: Expr) -> Expr:
        return Prod((self, other))

    def __rmul__(self, coeff: int) -> Expr:
        return Scale(int(coeff), self)


@dataclass(frozen=True)
class Mono(Expr):
    factors: Monomial

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", canonical_mono(self.factors))

    def __str__(self) -> str:
        return render_mono(self.factors)


@dataclass(frozen=True)
class Neg(Expr):
    inner: Expr

    def __str__(self) -> str:
        return f"-({self.inner})"


@dataclass(frozen=True)
class Sum(Expr):
    terms: tuple[Expr, ...]

    def __str__(self) -> str:
        return "(" + " + ".join(str(t) for t in self.terms) + ")"


@dataclass(frozen=True)
class Prod(Expr):
    parts: tuple[Expr, ...]

    def __str__(self) -> str:
        return "(" + " * ".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class Scale(Expr):
    coeff: int
    inner: Expr

    def __str__(self) -> str:
        return f"{self.coeff}({self.inner})"


def mono(*factors: str) -> Mono:
    return Mono(canonical_mono(factors))


EPSILON = Mono(())


class LinearForm:
    """Finite map from canonical monomials to nonzero integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    key = canonical_mono(m)
                    clean[key] = clean.get(key, 0) + c
        object.__setattr__(self, "_terms", {m: c for m, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("LinearForm is immutable")

    @classmethod
    def zero(cls) -> LinearForm:
        return cls()

    def items(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda kv: mono_key(kv[0]))

    def coeff(self, m: Monomial) -> int:
        return self._terms.get(canonical_mono(m), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: LinearForm) -> LinearForm:
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return LinearForm(out)

    def __sub__(self, other: LinearForm) -> LinearForm:
        return self + other.scale(-1)

    def scale(self, coeff: int) -> LinearForm:
        return LinearForm({m: coeff * c for m, c in self._terms.items()})

    def evaluate(self, w: str) -> int:
        return sum(c * _mono_value(m, w) for m, c in self._terms.items())

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            text = render_mono(m)
            mag = abs(c)
            body = text if mag == 1 else f"{mag}({text})"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json_list(self) -> list[dict[str, str]]:
        return [
            {"monomial": render_mono(m), "coeff": str(c)} for m, c in self.items()
        ]

    @classmethod
    def from_json_list(cls, data) -> LinearForm:
        terms: dict[Monomial, int] = {}
        for item in data:
            text = item["monomial"]
            m = () if text == "#e" else GapPattern.parse(text).factors
            terms[m] = terms.get(m, 0) + int(item["coeff"])
        return cls(terms)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LinearForm({self._terms!r})"


def _mono_value(m: Monomial, w: str) -> int:
    if not m:
        return 1
    return count_gapped(w, GapPattern(m))


def evaluate(e: Union[Expr, LinearForm], w: str) -> int:
    """Value of an expression or linear form in w."""
    if isinstance(e, LinearForm):
        return e.evaluate(w)
    if isinstance(e, Mono):
        return _mono_value(e.factors, w)
    if isinstance(e, Neg):
        return -evaluate(e.inner, w)
    if isinstance(e, Sum):
        return sum(evaluate(t, w) for t in e.terms)
    if isinstance(e, Prod):
        value = 1
        for p in e.parts:
            value *= evaluate(p, w)
        return value
    if isinstance(e, Scale):
        return e.coeff * evaluate(e.inner, w)
    raise TypeError(f"not an expression: {e!r}")


def ground_shuffle(p: Monomial, q: Monomial) -> list[Monomial]:
    """All order-preserving interleavings of the two factor sequences, as a
    multiset (list) of size binomial(x+y, x)."""
    p = canonical_mono(p)
    q = canonical_mono(q)
    out: list[Monomial] = []

    def rec(i: int, j: int, acc: list[str]) -> None:
        if i == len(p) and j == len(q):
            out.append(tuple(acc))
            return
        if i < len(p):
            acc.append(p[i])
            rec(i + 1, j, acc)
            acc.pop()
        if j < len(q):
            acc.append(q[j])
            rec(i, j + 1, acc)
            acc.pop()

    rec(0, 0, [])
    return out


def is_interleaved(
    p_factors: Monomial,
    p_starts: tuple[int, ...],
    q_factors: Monomial,
    q_starts: tuple[int, ...],
) -> bool:
    """True iff every consecutive factor pair of one occurrence is bridged by
    a factor of the other occurrence overlapping both."""

    def spans(factors, starts):
        return [(s, s + len(f) - 1) for f, s in zip(factors, starts)]

    ps = spans(p_factors, p_starts)
    qs = spans(q_factors, q_starts)

    def bridged(pairs, others):
        for (a1, b1), (a2, b2) in zip(pairs, pairs[1:]):
            if not any(a <= b1 and a1 <= b and a <= b2 and a2 <= b for a, b in others):
                return False
        return True

    return bridged(ps, qs) and bridged(qs, ps)


def _placements(runs: Monomial, max_end: int) -> Iterator[tuple[int, ...]]:
    """Start tuples with gap >= 0 between runs and every span within
    [1, max_end]."""

    def rec(k: int, lo: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if k == len(runs):
            yield tuple(acc)
            return
        top = max_end - len(runs[k]) + 1
        for start in range(lo, top + 1):
            acc.append(start)
            yield from rec(k + 1, start + len(runs[k]), acc)
            acc.pop()

    yield from rec(0, 1, [])


def _connected_span(intervals: list[tuple[int, int]]) -> int | None:
    """Right end of the overlap-connected union starting at 1, or None if the
    intervals do not chain into a single cluster from position 1."""
    ordered = sorted(intervals)
    if ordered[0][0] != 1:
        return None
    reach = ordered[0][1]
    for start, end in ordered[1:]:
        if start > reach:
            return None
        reach = max(reach, end)
    return reach


@lru_cache(maxsize=None)
def red(p_run: Monomial, q_run: Monomial) -> LinearForm:
    """Junction reduction: words v carrying a joint placement of both runs
    whose spans form one overlap-connected cluster filling v exactly, each
    weighted by its number of such placements.  Zero form when no word
    qualifies."""
    if not p_run or not q_run:
        raise ValueError("red needs nonempty runs on both sides")
    max_end = sum(map(len, p_run)) + sum(map(len, q_run)) - 1
    acc: dict[Monomial, int] = {}
    for p_starts in _placements(p_run, max_end):
        letters: dict[int, str] = {}
        for factor, start in zip(p_run, p_starts):
            for offset, ch in enumerate(factor):
                letters[start + offset] = ch
        p_intervals = [(s, s + len(f) - 1) for f, s in zip(p_run, p_starts)]
        for q_starts in _placements(q_run, max_end):
            merged = dict(letters)
            ok = True
            for factor, start in zip(q_run, q_starts):
                for offset, ch in enumerate(factor):
                    pos = start + offset
                    if merged.setdefault(pos, ch) != ch:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            intervals = p_intervals + [
                (s, s + len(f) - 1) for f, s in zip(q_run, q_starts)
            ]
            span = _connected_span(intervals)
            if span is None:
                continue
            word = "".join(merged[pos] for pos in range(1, span + 1))
            assert len(word) == span, "connected cluster left a gap"
            acc[(word,)] = acc.get((word,), 0) + 1
    return LinearForm(acc)


def _schemes(np: int, nq: int) -> Iterator[tuple[tuple, ...]]:
    """Segment sequences: P runs, Q runs, junctions; no two adjacent pure
    segments on the same side (a junction may neighbor anything)."""

    def rec(i: int, j: int, last: str) -> Iterator[tuple[tuple, ...]]:
        if i == np and j == nq:
            yield ()
            return
        if last != "P":
            for r in range(1, np - i + 1):
                for rest in rec(i + r, j, "P"):
                    yield (("P", i, i + r),) + rest
        if last != "Q":
            for s in range(1, nq - j + 1):
                for rest in rec(i, j + s, "Q"):
                    yield (("Q", j, j + s),) + rest
        for r in range(1, np - i + 1):
            for s in range(1, nq - j + 1):
                for rest in rec(i + r, j + s, "J"):
                    yield (("J", i, i + r, j, j + s),) + rest

    yield from rec(0, 0, "")


@lru_cache(maxsize=None)
def linearize_product(p: Monomial, q: Monomial) -> LinearForm:
    """Linear form equivalent to the product of two monomials."""
    p = canonical_mono(p)
    q = canonical_mono(q)
    if not p:
        return LinearForm({q: 1})
    if not q:
        return LinearForm({p: 1})
    acc: dict[Monomial, int] = {}
    for scheme in _schemes(len(p), len(q)):
        partial: dict[Monomial, int] = {(): 1}
        for seg in scheme:
            if seg[0] == "P":
                run = p[seg[1] : seg[2]]
                partial = {m + run: c for m, c in partial.items()}
            elif seg[0] == "Q":
                run = q[seg[1] : seg[2]]
                partial = {m + run: c for m, c in partial.items()}
            else:
                reduction = red(p[seg[1] : seg[2]], q[seg[3] : seg[4]])
                if not reduction:
                    partial = {}
                    break
                partial = {
                    m + v: c * a
                    for m, c in partial.items()
                    for v, a in reduction.items()
                }
        for m, c in partial.items():
            acc[m] = acc.get(m, 0) + c
    return LinearForm(acc)


def linearize_product_literal(p: Monomial, q: Monomial) -> LinearForm:
    """Rule-by-rule reduction over ground shuffle terms, reducing a junction
    only where a plain run is immediately followed by a primed run.  Kept for
    side-by-side comparison with linearize_product; known to undercount."""
    p = canonical_mono(p)
    q = canonical_mono(q)
    if not p:
        return LinearForm({q: 1})
    if not q:
        return LinearForm({p: 1})
    acc: dict[Monomial, int] = {}

    def terms(i: int, j: int, sequence: list[tuple[str, str]]) -> None:
        if i == len(p) and j == len(q):
            runs: list[tuple[str, Monomial]] = []
            for side, factor in sequence:
                if runs and runs[-1][0] == side:
                    runs[-1] = (side, runs[-1][1] + (factor,))
                else:
                    runs.append((side, (factor,)))
            forms = [LinearForm({(): 1})]
            k = 0
            while k < len(runs):
                side, run = runs[k]
                if side == "P" and k + 1 < len(runs):
                    follow = runs[k + 1][1]
                    branch = LinearForm({run + follow: 1}) + red(run, follow)
                    forms.append(branch)
                    k += 2
                else:
                    forms.append(LinearForm({run: 1}))
                    k += 1
            total: dict[Monomial, int] = {(): 1}
            for form in forms:
                total = {
                    m1 + m2: c1 * c2
                    for m1, c1 in total.items()
                    for m2, c2 in form.items()
                }
            for m, c in total.items():
                acc[m] = acc.get(m, 0) + c
            return
        if i < len(p):
            terms(i + 1, j, sequence + [("P", p[i])])
        if j < len(q):
            terms(i, j + 1, sequence + [("Q", q[j])])

    terms(0, 0, [])
    return LinearForm(acc)


def linearize(e: Expr) -> LinearForm:
    """Equivalent linear form: structural recursion, products distributed
    bilinearly over linearize_product."""
    if isinstance(e, Mono):
        return LinearForm({e.factors: 1})
    if isinstance(e, Neg):
        return linearize(e.inner).scale(-1)
    if isinstance(e, Scale):
        return linearize(e.inner).scale(e.coeff)
    if isinstance(e, Sum):
        out = LinearForm.zero()
        for term in e.terms:
            out = out + linearize(term)
        return out
    if isinstance(e, Prod):
        acc = LinearForm({(): 1})
        for part in e.parts:
            rhs = linearize(part)
            combined: dict[Monomial, int] = {}
            for m1, c1 in acc.items():
                for m2, c2 in rhs.items():
                    for m, c in linearize_product(m1, m2).items():
                        key = m
                        combined[key] = combined.get(key, 0) + c1 * c2 * c
            acc = LinearForm(combined)
        return acc
    raise TypeError(f"not an expression: {e!r}")


def equivalent(e1: Expr, e2: Expr) -> bool:
    """True iff the canonical linear forms coincide."""
    return linearize(e1) == linearize(e2)


def words_up_to(alphabet: Alphabet, max_len: int) -> Iterator[str]:
    for n in range(max_len + 1):
        for combo in iter_product(alphabet.symbols, repeat=n):
            yield "".join(combo)


def equivalent_bounded(
    e1: Union[Expr, LinearForm],
    e2: Union[Expr, LinearForm],
    alphabet: Alphabet,
    max_len: int,
) -> tuple[bool, str | None]:
    """Exhaustive evaluation oracle: first differing word up to max_len, if
    any."""
    for w in words_up_to(alphabet, max_len):
        if evaluate(e1, w) != evaluate(e2, w):
            return False, w
    return True, None


# ---------------------------------------------------------------------------
# expression text format
#
#   expr := ['-'] term (('+'|'-') term)*
#   term := atom ('*' atom)*
#   atom := INT atom | monomial | '#e' | '(' expr ')'
#
# Monomials use the pattern grammar (factors of [a-zA-Z0-9] joined by '.').
# A leading digit run always parses as an integer coefficient, so a monomial
# whose first symbol is a digit cannot be written bare inside an expression.

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<mono>[A-Za-z][A-Za-z0-9.•]*)|(?P<eps>#e)"
    r"|(?P<op>[-+*()]))"
)


class GshSyntaxError(PatternError):
    """Malformed generalized-subword-history expression text."""


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise GshSyntaxError(f"bad token at {text[pos:]!r}")
            break
        pos = m.end()
        for kind in ("int", "mono", "eps", "op"):
            value = m.group(kind)
            if value is not None:
                tokens.append((kind, value))
                break
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise GshSyntaxError("unexpected end of expression")
        self.pos += 1
        return tok

    def expr(self) -> Expr:
        negate = False
        if self.peek() == ("op", "-"):
            self.take()
            negate = True
        node = self.term()
        if negate:
            node = Neg(node)
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self) -> Expr:
        node = self.atom()
        while self.peek() == ("op", "*"):
            self.take()
            node = node * self.atom()
        return node

    def atom(self) -> Expr:
        kind, value = self.take()
        if kind == "int":
            return Scale(int(value), self.atom())
        if kind == "mono":
            try:
                return Mono(GapPattern.parse(value).factors)
            except PatternError as exc:
                raise GshSyntaxError(str(exc)) from None
        if kind == "eps":
            return EPSILON
        if (kind, value) == ("op", "("):
            node = self.expr()
            if self.take() != ("op", ")"):
                raise GshSyntaxError("expected ')'")
            return node
        raise GshSyntaxError(f"unexpected token {value!r}")


def parse_expr(text: str) -> Expr:
    parser = _Parser(_tokenize(text))
    node = parser.expr()
    if parser.peek() is not None:
        raise GshSyntaxError(f"trailing input at {parser.peek()[1]!r}")
    return node
