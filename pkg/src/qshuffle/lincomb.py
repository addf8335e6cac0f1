"""Exact-rational formal linear combinations over hashable basis keys.

Every algebraic object in this package (letter combinations, tensor
elements, tensor squares, normal forms) is a finite formal sum with
``fractions.Fraction`` coefficients. Zero coefficients are never stored,
so two combinations are equal exactly when their backing dicts are equal;
there is no float tolerance anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping


def as_scalar(value: object) -> Fraction:
    """Coerce an int to Fraction; reject anything inexact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact rational scalar required, got {type(value).__name__}")


class LinearCombination:
    """A finite formal sum ``sum(c_k * k)`` with exact rational ``c_k``.

    Subclasses fix the total order on basis keys (``sort_key``) used for
    deterministic iteration and rendering. Arithmetic is defined between
    combinations of the same concrete type only; scalars multiply from
    either side.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple] = ()) -> None:
        data: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, value in items:
            coeff = as_scalar(value)
            if not coeff:
                continue
            acc = data.get(key, 0) + coeff
            if acc:
                data[key] = acc
            else:
                del data[key]
        self._terms = data

    @classmethod
    def _raw(cls, data: dict) -> "LinearCombination":
        # internal fast path: data must already be zero-free with Fraction values
        out = cls.__new__(cls)
        out._terms = data
        return out

    @staticmethod
    def sort_key(key):
        """Total order on basis keys; subclasses override."""
        return key

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def basis(cls, key, coeff: int | Fraction = 1):
        return cls(((key, coeff),))

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def items(self):
        """Unordered (key, coefficient) view; use terms() for canonical order."""
        return self._terms.items()

    def terms(self) -> list:
        """Canonically ordered list of (key, coefficient) pairs."""
        kind = type(self)
        return sorted(self._terms.items(), key=lambda kv: kind.sort_key(kv[0]))

    def support(self) -> list:
        kind = type(self)
        return sorted(self._terms, key=kind.sort_key)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.terms())

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # dict-backed, deliberately unhashable

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        data = dict(self._terms)
        for key, value in other._terms.items():
            acc = data.get(key, 0) + value
            if acc:
                data[key] = acc
            else:
                del data[key]
        return type(self)._raw(data)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        data = dict(self._terms)
        for key, value in other._terms.items():
            acc = data.get(key, 0) - value
            if acc:
                data[key] = acc
            else:
                del data[key]
        return type(self)._raw(data)

    def __neg__(self):
        return type(self)._raw({k: -v for k, v in self._terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, LinearCombination):
            return NotImplemented
        c = as_scalar(scalar)
        if not c:
            return type(self)._raw({})
        return type(self)._raw({k: v * c for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        body = ", ".join(f"{k!r}: {v}" for k, v in self.terms())
        return f"{type(self).__name__}({{{body}}})"
