"""Shared text grammar: letters, words, elements, free terms.

Letters render as ``y<k>`` (weight), ``[x1 x2]`` (monomial, auto-sorted),
``(x1 x2)`` (word letter), bare lowercase names (atoms); a bare ``x<i>``
abbreviates the singleton monomial or word letter. Words join letters with
``.`` and the empty word prints as ``1``. Elements are signed sums of
optionally weighted words, e.g. ``2*y1.y1 + y2 - 1/2*y3``. Free terms are
fully parenthesized binary expressions over generators ``a``..``z`` or
``g<i>``: ``((a < b) . c)``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .coeff import (
    CoeffAlgebraSpec,
    Letter,
    atom_letter,
    mono_letter,
    weight_letter,
    word_letter,
)
from .freectd import FreeTerm, NormalForm, dot, gen, prec, succ
from .tensorq import EMPTY_WORD, TensorElement, TensorSquareElement, Word


class ParseError(ValueError):
    """Syntax or range error in grammar input, with a character position."""

    def __init__(self, message: str, position: int = 0) -> None:
        super().__init__(message)
        self.position = position


# ---------------------------------------------------------------------------
# parsing

_WEIGHT_RE = re.compile(r"y([1-9]\d*)")
_SINGLETON_RE = re.compile(r"x([1-9]\d*)")
_ATOM_RE = re.compile(r"[a-z][a-z0-9]*")
_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/[1-9]\d*)?")


def _generator_indices(body: str, position: int) -> tuple[int, ...]:
    tokens = body.split()
    if not tokens:
        raise ParseError("a bracketed letter needs at least one generator", position)
    indices = []
    for token in tokens:
        m = _SINGLETON_RE.fullmatch(token)
        if not m:
            raise ParseError(f"expected a generator like x1, got {token!r}", position)
        indices.append(int(m.group(1)))
    return tuple(indices)


def parse_letter(alg: CoeffAlgebraSpec, text: str, position: int = 0) -> Letter:
    """Parse one letter in the algebra's letter style; checks membership."""
    text = text.strip()
    style = alg.letter_style
    letter: Letter | None = None
    if style == "weight":
        m = _WEIGHT_RE.fullmatch(text)
        if m:
            letter = weight_letter(int(m.group(1)))
    elif style == "mono":
        m = _SINGLETON_RE.fullmatch(text)
        if m:
            letter = mono_letter((int(m.group(1)),))
        elif text.startswith("[") and text.endswith("]"):
            letter = mono_letter(_generator_indices(text[1:-1], position))
    elif style == "word":
        m = _SINGLETON_RE.fullmatch(text)
        if m:
            letter = word_letter((int(m.group(1)),))
        elif text.startswith("(") and text.endswith(")"):
            letter = word_letter(_generator_indices(text[1:-1], position))
    elif style == "atom":
        if _ATOM_RE.fullmatch(text):
            letter = atom_letter(text)
    if letter is None:
        raise ParseError(
            f"cannot read {text!r} as a letter of {alg.name}", position
        )
    if letter not in alg:
        raise ParseError(f"letter {letter} is not in {alg.name}", position)
    return letter


def _split_top_level(text: str, separator: str, position: int) -> list[tuple[str, int]]:
    """Split on a separator outside [] and (); returns chunks with offsets."""
    chunks: list[tuple[str, int]] = []
    depth = 0
    start = 0
    for idx, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced bracket", position + idx)
        elif ch == separator and depth == 0:
            chunks.append((text[start:idx], position + start))
            start = idx + 1
    if depth != 0:
        raise ParseError("unbalanced bracket", position + len(text))
    chunks.append((text[start:], position + start))
    return chunks


def parse_word(alg: CoeffAlgebraSpec, text: str, position: int = 0) -> Word:
    """Parse a dot-joined word; ``1`` is the empty word."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty word", position)
    if stripped == "1":
        return EMPTY_WORD
    letters = []
    for chunk, offset in _split_top_level(stripped, ".", position):
        if not chunk.strip():
            raise ParseError("empty letter between dots", offset)
        letters.append(parse_letter(alg, chunk, offset))
    return tuple(letters)


def _parse_rational(text: str, position: int) -> Fraction:
    if not _RATIONAL_RE.fullmatch(text):
        raise ParseError(f"expected a rational coefficient, got {text!r}", position)
    return Fraction(text)


def _signed_chunks(text: str) -> list[tuple[int, str, int]]:
    """Split an element into (sign, chunk, offset) at top-level + and -."""
    out: list[tuple[int, str, int]] = []
    depth = 0
    sign = 1
    cur: list[str] = []
    cur_start = 0
    for idx, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced bracket", idx)
        if depth == 0 and ch in "+-":
            if not "".join(cur).strip():
                # unary sign before the term starts
                if ch == "-":
                    sign = -sign
                cur = []
                continue
            out.append((sign, "".join(cur), cur_start))
            sign = 1 if ch == "+" else -1
            cur = []
            cur_start = idx + 1
            continue
        if not cur and not ch.isspace():
            cur_start = idx
        cur.append(ch)
    if depth != 0:
        raise ParseError("unbalanced bracket", len(text))
    if not "".join(cur).strip():
        raise ParseError("element ends with a dangling sign or is empty", len(text))
    out.append((sign, "".join(cur), cur_start))
    return out


def parse_element(alg: CoeffAlgebraSpec, text: str) -> TensorElement:
    """Parse a signed sum of optionally weighted words."""
    if not text.strip():
        raise ParseError("empty element", 0)
    terms: list[tuple[Word, Fraction]] = []
    for sign, chunk, offset in _signed_chunks(text):
        body = chunk.strip()
        star_chunks = _split_top_level(body, "*", offset)
        if len(star_chunks) == 2:
            coeff_text, coeff_pos = star_chunks[0]
            word_text, word_pos = star_chunks[1]
            coeff = _parse_rational(coeff_text.strip(), coeff_pos)
            word = parse_word(alg, word_text, word_pos)
        elif len(star_chunks) == 1:
            if _RATIONAL_RE.fullmatch(body):
                coeff = Fraction(body)
                word = EMPTY_WORD
            else:
                coeff = Fraction(1)
                word = parse_word(alg, body, offset)
        else:
            raise ParseError("at most one * per term", offset)
        terms.append((word, sign * coeff))
    return TensorElement(terms)


class _TermScanner:
    __slots__ = ("text", "pos")

    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""


_TERM_BUILDERS = {"<": prec, ">": succ, ".": dot}


def _parse_term_node(sc: _TermScanner) -> FreeTerm:
    sc.skip_ws()
    ch = sc.peek()
    if ch == "(":
        sc.pos += 1
        left = _parse_term_node(sc)
        sc.skip_ws()
        op_ch = sc.peek()
        if op_ch not in _TERM_BUILDERS:
            raise ParseError("expected an operation: < > or .", sc.pos)
        sc.pos += 1
        right = _parse_term_node(sc)
        sc.skip_ws()
        if sc.peek() != ")":
            raise ParseError("expected )", sc.pos)
        sc.pos += 1
        return _TERM_BUILDERS[op_ch](left, right)
    if ch == "g" and sc.pos + 1 < len(sc.text) and sc.text[sc.pos + 1].isdigit():
        m = re.compile(r"g([1-9]\d*)").match(sc.text, sc.pos)
        if not m:
            raise ParseError("malformed generator", sc.pos)
        sc.pos = m.end()
        return gen(int(m.group(1)))
    if ch.isalpha() and ch.islower():
        after = sc.text[sc.pos + 1] if sc.pos + 1 < len(sc.text) else ""
        if after.isalnum():
            raise ParseError("generators are single letters a..z or g<i>", sc.pos)
        sc.pos += 1
        return gen(ord(ch) - ord("a") + 1)
    raise ParseError("expected a generator or (", sc.pos)


def parse_free_term(text: str) -> FreeTerm:
    """Parse a fully parenthesized term over generators a..z or g<i>."""
    sc = _TermScanner(text)
    term = _parse_term_node(sc)
    sc.skip_ws()
    if sc.pos != len(text):
        raise ParseError("unexpected trailing input", sc.pos)
    return term


# ---------------------------------------------------------------------------
# rendering


def render_word(word: Word) -> str:
    if not word:
        return "1"
    return ".".join(str(letter) for letter in word)


def _join_signed(parts: list[tuple[str, Fraction]]) -> str:
    if not parts:
        return "0"
    rendered = []
    for body, coeff in parts:
        mag = abs(coeff)
        if body == "1":
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        rendered.append(("-" if coeff < 0 else "+", text))
    sign, first = rendered[0]
    out = ("-" if sign == "-" else "") + first
    for sign, text in rendered[1:]:
        out += f" {sign} {text}"
    return out


def render_element(element: TensorElement) -> str:
    return _join_signed([(render_word(w), c) for w, c in element.terms()])


def render_square_element(square: TensorSquareElement) -> str:
    return _join_signed(
        [(f"{render_word(u)} (x) {render_word(v)}", c) for (u, v), c in square.terms()]
    )


def render_partition(blocks) -> str:
    return "".join("(" + " ".join(f"v{i}" for i in block) + ")" for block in blocks)


def render_normal_form(nf: NormalForm) -> str:
    return _join_signed([(render_partition(blocks), c) for blocks, c in nf.terms()])


# ---------------------------------------------------------------------------
# JSON forms (letters as grammar strings, coefficients as "p/q")


def _coeff_string(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def element_to_json(element: TensorElement) -> dict:
    return {
        "terms": [
            {"coeff": _coeff_string(c), "word": [str(letter) for letter in w]}
            for w, c in element.terms()
        ]
    }


def element_from_json(alg: CoeffAlgebraSpec, data: dict) -> TensorElement:
    terms = []
    for entry in data["terms"]:
        coeff = Fraction(entry["coeff"])
        word = tuple(parse_letter(alg, token) for token in entry["word"])
        terms.append((word, coeff))
    return TensorElement(terms)


def square_to_json(square: TensorSquareElement) -> dict:
    return {
        "terms": [
            {
                "coeff": _coeff_string(c),
                "left": [str(letter) for letter in u],
                "right": [str(letter) for letter in v],
            }
            for (u, v), c in square.terms()
        ]
    }


def normal_form_to_json(nf: NormalForm) -> dict:
    return {
        "terms": [
            {"coeff": _coeff_string(c), "blocks": [list(block) for block in blocks]}
            for blocks, c in nf.terms()
        ]
    }
