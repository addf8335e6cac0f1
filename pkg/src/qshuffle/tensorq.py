"""Quasi-shuffle products and the deconcatenation coalgebra.

Words over a coefficient algebra's letters are plain tuples; the empty
tuple is the unit word. ``TensorElement`` is an exact-rational combination
of words. The quasi-shuffle product is defined by the recursion

    (a x) * (b y) = (a.b)(x * y) + a(x * (b y)) + b((a x) * y),

with the empty word as unit, where a.b is the letter product in the
coefficient algebra. An independent evaluator expands the same product as
a sum over lattice paths with unit steps right, up, and diagonal, where a
diagonal step multiplies the two letters it consumes; the two routes are
cross-checked in the test suite.

The product splits into three partial operations

    x < y  (left:  keep the head of x),
    x > y  (right: keep the head of y),
    x . y  (dot:   multiply the heads),

whose unit conventions are  1<x = 0, x<1 = x, 1>x = x, x>1 = 0 and
1.x = 0 = x.1, while 1<1, 1>1 and 1.1 are undefined: applying a partial
operation to two elements that both have a nonzero coefficient on the
empty word raises ``UnitPairingError``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

from .coeff import (
    CoeffAlgebraSpec,
    CoeffCombination,
    Letter,
    _require_member,
    involute_letter,
)
from .coeff import DomainError
from .lincomb import LinearCombination

Word = tuple[Letter, ...]

EMPTY_WORD: Word = ()

# A path step consumes one letter of the first word, the second, or both.
LatticePath = tuple[tuple[int, int], ...]


class UnitPairingError(ValueError):
    """A partial operation was applied to a pair of units it is undefined on."""


def word_degree(word: Word) -> int:
    """Total degree: the sum of the letter degrees."""
    return sum(letter.degree for letter in word)


def word_sort_key(word: Word):
    """Length-then-letterwise total order on words."""
    return (len(word), tuple(letter.sort_key for letter in word))


class TensorElement(LinearCombination):
    """Exact-rational combination of words over one coefficient algebra."""

    @staticmethod
    def sort_key(key: Word):
        return word_sort_key(key)

    @classmethod
    def from_word(cls, word, coeff: int | Fraction = 1) -> "TensorElement":
        return cls.basis(tuple(word), coeff)

    @classmethod
    def from_letter(cls, letter: Letter, coeff: int | Fraction = 1) -> "TensorElement":
        return cls.basis((letter,), coeff)

    @classmethod
    def unit(cls) -> "TensorElement":
        return cls.basis(EMPTY_WORD)

    def max_word_length(self) -> int:
        return max((len(w) for w in self._terms), default=0)


class TensorSquareElement(LinearCombination):
    """Exact-rational combination of pairs of words (a two-fold tensor)."""

    @staticmethod
    def sort_key(key: tuple[Word, Word]):
        return (word_sort_key(key[0]), word_sort_key(key[1]))

    @classmethod
    def from_pair(cls, left, right, coeff: int | Fraction = 1) -> "TensorSquareElement":
        return cls.basis((tuple(left), tuple(right)), coeff)


def _check_word(alg: CoeffAlgebraSpec, word: Word) -> None:
    for letter in word:
        _require_member(alg, letter)


def _check_element(alg: CoeffAlgebraSpec, element: TensorElement) -> None:
    if not isinstance(element, TensorElement):
        raise TypeError(f"TensorElement expected, got {type(element).__name__}")
    for word in element.items():
        _check_word(alg, word[0])


# ---------------------------------------------------------------------------
# quasi-shuffle product: memoized recursion


def _shuffle_words(alg: CoeffAlgebraSpec, u: Word, v: Word) -> Mapping[Word, Fraction]:
    """Word-level quasi-shuffle as a zero-free dict. Cached per algebra.

    Cached dicts are shared and must never be mutated by callers.
    """
    if not u:
        return {v: Fraction(1)}
    if not v:
        return {u: Fraction(1)}
    cache = alg.cache.setdefault("shuffle", {})
    key = (u, v)
    hit = cache.get(key)
    if hit is not None:
        return hit
    a, x = u[0], u[1:]
    b, y = v[0], v[1:]
    acc: dict[Word, Fraction] = {}
    for w, c in _shuffle_words(alg, x, v).items():
        wa = (a,) + w
        acc[wa] = acc.get(wa, 0) + c
    for w, c in _shuffle_words(alg, u, y).items():
        wb = (b,) + w
        acc[wb] = acc.get(wb, 0) + c
    merged = alg.product_rule(a, b)
    if merged:
        tails = _shuffle_words(alg, x, y)
        for letter, cl in merged.items():
            for w, c in tails.items():
                wm = (letter,) + w
                val = acc.get(wm, 0) + cl * c
                if val:
                    acc[wm] = val
                else:
                    del acc[wm]
    cache[key] = acc
    return acc


def quasi_shuffle(alg: CoeffAlgebraSpec, x: TensorElement, y: TensorElement) -> TensorElement:
    """Quasi-shuffle product of two elements. Total; the empty word is a unit."""
    _check_element(alg, x)
    _check_element(alg, y)
    acc: dict[Word, Fraction] = {}
    for u, cu in x.items():
        for v, cv in y.items():
            cuv = cu * cv
            for w, c in _shuffle_words(alg, u, v).items():
                val = acc.get(w, 0) + cuv * c
                if val:
                    acc[w] = val
                else:
                    del acc[w]
    return TensorElement._raw(acc)


# ---------------------------------------------------------------------------
# lattice-path oracle

_STEP_FIRST = (1, 0)
_STEP_SECOND = (0, 1)
_STEP_BOTH = (1, 1)


def enumerate_lattice_paths(p: int, q: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All step sequences from (0,0) to (p,q) over right, up and diagonal.

    A (1,0) step consumes a letter of the first word, (0,1) one of the
    second, (1,1) one of each. Path counts are the Delannoy numbers.
    """
    if p < 0 or q < 0:
        raise ValueError("path endpoints need nonnegative coordinates")
    if p == 0 and q == 0:
        yield ()
        return
    if p > 0:
        for rest in enumerate_lattice_paths(p - 1, q):
            yield (_STEP_FIRST,) + rest
    if q > 0:
        for rest in enumerate_lattice_paths(p, q - 1):
            yield (_STEP_SECOND,) + rest
    if p > 0 and q > 0:
        for rest in enumerate_lattice_paths(p - 1, q - 1):
            yield (_STEP_BOTH,) + rest


def _path_word_terms(
    alg: CoeffAlgebraSpec, steps, u: Word, v: Word
) -> dict[Word, Fraction]:
    """Words contributed by one path; a zero letter product kills the path."""
    terms: dict[Word, Fraction] = {EMPTY_WORD: Fraction(1)}
    i = j = 0
    for step in steps:
        if step == _STEP_FIRST:
            pieces = ((u[i], Fraction(1)),)
            i += 1
        elif step == _STEP_SECOND:
            pieces = ((v[j], Fraction(1)),)
            j += 1
        else:
            merged = alg.product_rule(u[i], v[j])
            i += 1
            j += 1
            if not merged:
                return {}
            pieces = tuple(merged.items())
        terms = {
            w + (letter,): c * cl for w, c in terms.items() for letter, cl in pieces
        }
    return terms


def quasi_shuffle_paths(alg: CoeffAlgebraSpec, u, v) -> TensorElement:
    """Independent quasi-shuffle of two words via lattice-path expansion."""
    u = tuple(u)
    v = tuple(v)
    _check_word(alg, u)
    _check_word(alg, v)
    acc: dict[Word, Fraction] = {}
    for steps in enumerate_lattice_paths(len(u), len(v)):
        for w, c in _path_word_terms(alg, steps, u, v).items():
            val = acc.get(w, 0) + c
            if val:
                acc[w] = val
            else:
                del acc[w]
    return TensorElement._raw(acc)


# ---------------------------------------------------------------------------
# the three partial operations


def _word_op_left(alg: CoeffAlgebraSpec, u: Word, v: Word) -> dict[Word, Fraction]:
    if not u:
        if not v:
            raise UnitPairingError("1 < 1 is not defined")
        return {}
    if not v:
        return {u: Fraction(1)}
    head, tail = u[0], u[1:]
    return {(head,) + w: c for w, c in _shuffle_words(alg, tail, v).items()}


def _word_op_right(alg: CoeffAlgebraSpec, u: Word, v: Word) -> dict[Word, Fraction]:
    if not v:
        if not u:
            raise UnitPairingError("1 > 1 is not defined")
        return {}
    if not u:
        return {v: Fraction(1)}
    head, tail = v[0], v[1:]
    return {(head,) + w: c for w, c in _shuffle_words(alg, u, tail).items()}


def _word_op_dot(alg: CoeffAlgebraSpec, u: Word, v: Word) -> dict[Word, Fraction]:
    if not u and not v:
        raise UnitPairingError("1 . 1 is not defined")
    if not u or not v:
        return {}
    merged = alg.product_rule(u[0], v[0])
    if not merged:
        return {}
    tails = _shuffle_words(alg, u[1:], v[1:])
    out: dict[Word, Fraction] = {}
    for letter, cl in merged.items():
        for w, c in tails.items():
            wm = (letter,) + w
            val = out.get(wm, 0) + cl * c
            if val:
                out[wm] = val
            else:
                del out[wm]
    return out


def _bilinear(alg, word_op, x: TensorElement, y: TensorElement) -> TensorElement:
    _check_element(alg, x)
    _check_element(alg, y)
    if x.coefficient(EMPTY_WORD) and y.coefficient(EMPTY_WORD):
        raise UnitPairingError(
            "operation undefined: both arguments have a nonzero empty-word coefficient"
        )
    acc: dict[Word, Fraction] = {}
    for u, cu in x.items():
        for v, cv in y.items():
            cuv = cu * cv
            for w, c in word_op(alg, u, v).items():
                val = acc.get(w, 0) + cuv * c
                if val:
                    acc[w] = val
                else:
                    del acc[w]
    return TensorElement._raw(acc)


def op_left(alg: CoeffAlgebraSpec, x: TensorElement, y: TensorElement) -> TensorElement:
    """x < y: the part of x * y whose first letter comes from x."""
    return _bilinear(alg, _word_op_left, x, y)


def op_right(alg: CoeffAlgebraSpec, x: TensorElement, y: TensorElement) -> TensorElement:
    """x > y: the part of x * y whose first letter comes from y."""
    return _bilinear(alg, _word_op_right, x, y)


def op_dot(alg: CoeffAlgebraSpec, x: TensorElement, y: TensorElement) -> TensorElement:
    """x . y: the part of x * y whose first letter merges both heads."""
    return _bilinear(alg, _word_op_dot, x, y)


OPERATIONS = {
    "left": op_left,
    "right": op_right,
    "dot": op_dot,
    "star": quasi_shuffle,
}


# ---------------------------------------------------------------------------
# deconcatenation coalgebra


def deconcatenate(x: TensorElement) -> TensorSquareElement:
    """Full deconcatenation coproduct, including the w (x) 1 and 1 (x) w ends."""
    acc: dict[tuple[Word, Word], Fraction] = {}
    for w, c in x.items():
        for i in range(len(w) + 1):
            key = (w[:i], w[i:])
            val = acc.get(key, 0) + c
            if val:
                acc[key] = val
            else:
                del acc[key]
    return TensorSquareElement._raw(acc)


def reduced_coproduct(x: TensorElement) -> TensorSquareElement:
    """Deconcatenation with both trivial ends removed.

    Defined on the augmentation ideal only: a nonzero coefficient on the
    empty word raises ``DomainError``.
    """
    if x.coefficient(EMPTY_WORD):
        raise DomainError("reduced coproduct needs a zero empty-word coefficient")
    acc: dict[tuple[Word, Word], Fraction] = {}
    for w, c in x.items():
        for i in range(1, len(w)):
            key = (w[:i], w[i:])
            val = acc.get(key, 0) + c
            if val:
                acc[key] = val
            else:
                del acc[key]
    return TensorSquareElement._raw(acc)


def is_primitive(x: TensorElement) -> bool:
    """True when the reduced coproduct vanishes (zero counts as primitive)."""
    return reduced_coproduct(x).is_zero


def coradical_degree(x: TensorElement) -> int:
    """Least filtration stage containing x; equals the maximal word length.

    Stage 0 is the span of the empty word; stage r collects elements whose
    reduced coproduct lands in stage r-1 tensor stage r-1. For the word
    basis this is exactly the maximal length in the support.
    """
    return x.max_word_length()


def project_to_letters(x: TensorElement) -> CoeffCombination:
    """Corestriction onto the letter component (length-one words)."""
    return CoeffCombination(
        (w[0], c) for w, c in x.items() if len(w) == 1
    )


def involute_element(alg: CoeffAlgebraSpec, x: TensorElement) -> TensorElement:
    """Letterwise involution; tensor factor order is unchanged."""
    _check_element(alg, x)
    acc: dict[Word, Fraction] = {}
    for w, c in x.items():
        iw = tuple(involute_letter(alg, letter) for letter in w)
        val = acc.get(iw, 0) + c
        if val:
            acc[iw] = val
        else:
            del acc[iw]
    return TensorElement._raw(acc)


def square_star(
    alg: CoeffAlgebraSpec, a: TensorSquareElement, b: TensorSquareElement
) -> TensorSquareElement:
    """Componentwise quasi-shuffle on two-fold tensors. Total."""
    acc: dict[tuple[Word, Word], Fraction] = {}
    for (u1, v1), c1 in a.items():
        for (u2, v2), c2 in b.items():
            c12 = c1 * c2
            lefts = _shuffle_words(alg, u1, u2)
            rights = _shuffle_words(alg, v1, v2)
            for lw, lc in lefts.items():
                for rw, rc in rights.items():
                    key = (lw, rw)
                    val = acc.get(key, 0) + c12 * lc * rc
                    if val:
                        acc[key] = val
                    else:
                        del acc[key]
    return TensorSquareElement._raw(acc)
