"""Bialgebra structure: tensor-square operations, coproducts, primitives.

The two-fold tensor of the tensor module carries partial operations acting
on the left factors with the quasi-shuffle on the right factors:

    (a (x) b) < (a' (x) b')  =  (a < a') (x) (b * b')
    (a (x) b) . (a' (x) b')  =  (a . a') (x) (b * b')

completed by the unit-pairing convention: when a and a' are both the unit
the undefined head operation is pushed to the right factors,

    (1 (x) b) < (1 (x) b')  =  1 (x) (b < b')
    (1 (x) b) . (1 (x) b')  =  1 (x) (b . b')

and only the all-four-units pairing stays undefined. With this structure
the deconcatenation coproduct is compatible with the partial operations:

    coproduct(x < y) = coproduct(x) < coproduct(y)
    coproduct(x . y) = coproduct(x) . coproduct(y)

which ``check_compatibility`` verifies pair by pair. The length-one words
are exactly the primitives in each graded piece; ``reduced_coproduct_kernel``
recomputes that kernel by exact Gaussian elimination as an independent
route.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .coeff import CoeffAlgebraSpec, DomainError, mono_letter, sym_algebra
from .freectd import FreeTerm, SignatureError
from .lincomb import LinearCombination
from .tensorq import (
    EMPTY_WORD,
    TensorElement,
    TensorSquareElement,
    Word,
    _shuffle_words,
    _word_op_dot,
    _word_op_left,
    deconcatenate,
    is_primitive,
    op_dot,
    op_left,
    reduced_coproduct,
)


def square_left_pairs(
    alg: CoeffAlgebraSpec, p1: tuple[Word, Word], p2: tuple[Word, Word]
) -> dict[tuple[Word, Word], Fraction]:
    """Basis-pair < on the tensor square, unit-pairing convention included."""
    return _square_pairs(alg, _word_op_left, p1, p2)


def square_dot_pairs(
    alg: CoeffAlgebraSpec, p1: tuple[Word, Word], p2: tuple[Word, Word]
) -> dict[tuple[Word, Word], Fraction]:
    """Basis-pair . on the tensor square, unit-pairing convention included."""
    return _square_pairs(alg, _word_op_dot, p1, p2)


def _square_pairs(alg, word_op, p1, p2) -> dict[tuple[Word, Word], Fraction]:
    (u1, v1), (u2, v2) = p1, p2
    if not u1 and not u2:
        # both heads are the unit: the operation moves to the right factors;
        # raises UnitPairingError when all four components are units
        inner = word_op(alg, v1, v2)
        return {(EMPTY_WORD, w): c for w, c in inner.items()}
    heads = word_op(alg, u1, u2)
    if not heads:
        return {}
    tails = _shuffle_words(alg, v1, v2)
    out: dict[tuple[Word, Word], Fraction] = {}
    for hw, hc in heads.items():
        for tw, tc in tails.items():
            key = (hw, tw)
            val = out.get(key, 0) + hc * tc
            if val:
                out[key] = val
            else:
                del out[key]
    return out


def _square_bilinear(alg, pair_op, a, b) -> TensorSquareElement:
    acc: dict[tuple[Word, Word], Fraction] = {}
    for p1, c1 in a.items():
        for p2, c2 in b.items():
            c12 = c1 * c2
            for key, c in pair_op(alg, p1, p2).items():
                val = acc.get(key, 0) + c12 * c
                if val:
                    acc[key] = val
                else:
                    del acc[key]
    return TensorSquareElement._raw(acc)


def square_left(
    alg: CoeffAlgebraSpec, a: TensorSquareElement, b: TensorSquareElement
) -> TensorSquareElement:
    """< on two-fold tensors; undefined only on the all-units pairing."""
    return _square_bilinear(alg, square_left_pairs, a, b)


def square_dot(
    alg: CoeffAlgebraSpec, a: TensorSquareElement, b: TensorSquareElement
) -> TensorSquareElement:
    """. on two-fold tensors; undefined only on the all-units pairing."""
    return _square_bilinear(alg, square_dot_pairs, a, b)


# ---------------------------------------------------------------------------
# coproduct on free CTD terms


def free_ctd_coproduct(term: FreeTerm, n_generators: int) -> TensorSquareElement:
    """Coproduct of a CTD term, with components as quasi-shuffle images.

    Generators are primitive; the coproduct of a node applies the matching
    tensor-square operation to the children's coproducts. Components are
    words over sym(n), i.e. the images of free elements in the tensor
    module, where the identification is one word per comb.
    """
    if not term.is_ctd:
        raise SignatureError("the free coproduct is defined for CTD terms only")
    alg = sym_algebra(n_generators)
    return _free_coproduct(term, alg)


def _free_coproduct(term: FreeTerm, alg: CoeffAlgebraSpec) -> TensorSquareElement:
    if term.op == "gen":
        letter = mono_letter((term.index,))
        if letter not in alg:
            raise DomainError(
                f"generator index {term.index} exceeds the generator count of {alg.name}"
            )
        word = (letter,)
        return TensorSquareElement(
            (((word, EMPTY_WORD), 1), ((EMPTY_WORD, word), 1))
        )
    left = _free_coproduct(term.left, alg)
    right = _free_coproduct(term.right, alg)
    if term.op == "prec":
        return square_left(alg, left, right)
    return square_dot(alg, left, right)


# ---------------------------------------------------------------------------
# compatibility of deconcatenation with the partial operations


@dataclass
class CompatViolation:
    relation: str
    x: TensorElement
    y: TensorElement
    lhs: TensorSquareElement
    rhs: TensorSquareElement


@dataclass
class CompatReport:
    checked_pairs: int = 0
    violations: list[CompatViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def absorb(self, other: "CompatReport") -> None:
        self.checked_pairs += other.checked_pairs
        self.violations.extend(other.violations)


def check_compatibility(
    alg: CoeffAlgebraSpec, x: TensorElement, y: TensorElement
) -> CompatReport:
    """Deconcatenation against the tensor-square < and . for one pair.

    Arguments should lie in the augmentation ideal or be units; when both
    carry a unit component the operations themselves are undefined and the
    resulting ``UnitPairingError`` propagates.
    """
    report = CompatReport(checked_pairs=1)
    dx = deconcatenate(x)
    dy = deconcatenate(y)
    lhs = deconcatenate(op_left(alg, x, y))
    rhs = square_left(alg, dx, dy)
    if lhs != rhs:
        report.violations.append(CompatViolation("left", x, y, lhs, rhs))
    lhs = deconcatenate(op_dot(alg, x, y))
    rhs = square_dot(alg, dx, dy)
    if lhs != rhs:
        report.violations.append(CompatViolation("dot", x, y, lhs, rhs))
    return report


def primitives_closed_under_dot(alg: CoeffAlgebraSpec, pairs) -> bool:
    """Dot of primitives is primitive on every supplied pair."""
    for x, y in pairs:
        if not (is_primitive(x) and is_primitive(y)):
            raise DomainError("primitives_closed_under_dot expects primitive inputs")
        if not is_primitive(op_dot(alg, x, y)):
            return False
    return True


# ---------------------------------------------------------------------------
# graded pieces and the primitive kernel by linear solve


def graded_basis_words(alg: CoeffAlgebraSpec, degree: int) -> list[Word]:
    """All words of exact total degree, in canonical order."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")

    def rec(remaining: int) -> list[Word]:
        if remaining == 0:
            return [EMPTY_WORD]
        out: list[Word] = []
        for d in range(1, remaining + 1):
            for letter in alg.letters_of_degree(d):
                for rest in rec(remaining - d):
                    out.append((letter,) + rest)
        return out

    words = [w for w in rec(degree) if w or degree == 0]
    words.sort(key=TensorElement.sort_key)
    return words


def _rational_nullspace(rows: list[list[Fraction]], width: int) -> list[list[Fraction]]:
    """Basis of the right nullspace by fraction-exact Gauss-Jordan."""
    matrix = [row[:] for row in rows]
    pivot_cols: list[int] = []
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][col]), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        inv = 1 / matrix[r][col]
        matrix[r] = [v * inv for v in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][col]:
                factor = matrix[i][col]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivot_cols.append(col)
        r += 1
        if r == len(matrix):
            break
    free_cols = [c for c in range(width) if c not in pivot_cols]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * width
        vec[free] = Fraction(1)
        for row_idx, col in enumerate(pivot_cols):
            vec[col] = -matrix[row_idx][free]
        basis.append(vec)
    return basis


def reduced_coproduct_kernel(alg: CoeffAlgebraSpec, degree: int) -> list[TensorElement]:
    """Kernel of the reduced coproduct on one graded piece, by linear solve.

    Independent of ``is_primitive``: builds the matrix of the reduced
    coproduct over the degree-graded word basis and solves exactly.
    """
    if degree < 1:
        raise ValueError("graded primitive computation needs degree >= 1")
    words = graded_basis_words(alg, degree)
    pair_index: dict[tuple[Word, Word], int] = {}
    columns = []
    for w in words:
        image = reduced_coproduct(TensorElement.from_word(w))
        col = {}
        for pair, c in image.items():
            idx = pair_index.setdefault(pair, len(pair_index))
            col[idx] = c
        columns.append(col)
    height = len(pair_index)
    rows = [[Fraction(0)] * len(words) for _ in range(height)]
    for j, col in enumerate(columns):
        for i, c in col.items():
            rows[i][j] = c
    kernel = _rational_nullspace(rows, len(words))
    return [
        TensorElement((words[j], c) for j, c in enumerate(vec) if c) for vec in kernel
    ]


# ---------------------------------------------------------------------------
# projection onto generator words and its splitting


def generator_projection(x: TensorElement) -> TensorElement:
    """Keep words whose letters all have degree one; kill everything else.

    This is the coalgebra map cogenerated by the projection of letters onto
    the degree-one component.
    """
    return TensorElement._raw(
        {
            w: c
            for w, c in x.items()
            if all(letter.degree == 1 for letter in w)
        }
    )


def generator_inclusion(x: TensorElement) -> TensorElement:
    """Embed an element supported on pure generator words; a section of the
    projection, and a coalgebra map for deconcatenation."""
    for w, _ in x.items():
        if any(letter.degree != 1 for letter in w):
            raise DomainError(
                "generator_inclusion expects words of degree-one letters only"
            )
    return TensorElement._raw(dict(x.items()))


def splitting_identity_holds(alg: CoeffAlgebraSpec, max_word_length: int) -> bool:
    """projection(inclusion(w)) == w for every pure generator word in range."""
    letters = alg.letters_of_degree(1)
    stack: list[Word] = [EMPTY_WORD]
    while stack:
        w = stack.pop()
        el = TensorElement.from_word(w)
        if generator_projection(generator_inclusion(el)) != el:
            return False
        if len(w) < max_word_length:
            stack.extend(w + (letter,) for letter in letters)
    return True


# Established aliases kept alongside the descriptive names.
TensorSquareCtdElement = TensorSquareElement
delta_free_ctd = free_ctd_coproduct
check_compat = check_compatibility
phi_coalgebra = generator_projection
