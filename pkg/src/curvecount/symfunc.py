"""Symmetric polynomials over the integers, and the elementary-basis rewrite.

The splitting principle reduces every characteristic-class formula to
symmetric-function algebra in formal root variables.  This module supplies
the exact kernel for that: sparse integer polynomials, and the rewrite of a
symmetric polynomial as a polynomial in the elementary symmetric functions
e_1..e_r by repeated lexicographic leading-term elimination.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Mapping

Exponents = tuple[int, ...]


class SymmetricPoly:
    """Sparse integer polynomial in `nvars` formal variables.

    Terms map exponent tuples to nonzero integers.  Construction does not
    force symmetry; `reduce_to_elementary` rejects non-symmetric input when
    the elimination gets stuck on a non-dominant leading term.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | None = None):
        self.nvars = nvars
        clean: dict[Exponents, int] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent tuple {e} does not have {nvars} entries")
                if c:
                    clean[tuple(e)] = int(c)
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c: int) -> "SymmetricPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def linear_form(cls, coeffs: tuple[int, ...]) -> "SymmetricPoly":
        """The form sum(coeffs[i] * x_i)."""
        n = len(coeffs)
        terms = {}
        for i, m in enumerate(coeffs):
            if m:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = m
        return cls(n, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def homogeneous_part(self, k: int) -> "SymmetricPoly":
        return SymmetricPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == k})

    def evaluate(self, values: tuple[int, ...]) -> int:
        if len(values) != self.nvars:
            raise ValueError(f"need {self.nvars} values, got {len(values)}")
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, a in zip(values, e):
                term *= v**a
            total += term
        return total

    def __add__(self, other):
        if not isinstance(other, SymmetricPoly) or other.nvars != self.nvars:
            return NotImplemented
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) + c
        return SymmetricPoly(self.nvars, acc)

    def __neg__(self):
        return SymmetricPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SymmetricPoly) or other.nvars != self.nvars:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymmetricPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        if isinstance(other, SymmetricPoly) and other.nvars == self.nvars:
            return self.mul_truncated(other, None)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def mul_truncated(self, other: "SymmetricPoly", max_degree: int | None) -> "SymmetricPoly":
        """Product, discarding monomials of total degree above `max_degree`."""
        acc: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if max_degree is not None and d1 + sum(e2) > max_degree:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return SymmetricPoly(self.nvars, acc)

    def __eq__(self, other) -> bool:
        if isinstance(other, SymmetricPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i}^{a}" if a > 1 else f"x{i}" for i, a in enumerate(e) if a)
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


def elementary(nvars: int, k: int) -> SymmetricPoly:
    """The k-th elementary symmetric polynomial e_k in `nvars` variables."""
    if k < 0 or k > nvars:
        return SymmetricPoly(nvars)
    terms: dict[Exponents, int] = {}
    for subset in combinations(range(nvars), k):
        e = [0] * nvars
        for i in subset:
            e[i] = 1
        terms[tuple(e)] = 1
    return SymmetricPoly(nvars, terms)


@lru_cache(maxsize=None)
def _elementary_monomial(nvars: int, exps: Exponents) -> SymmetricPoly:
    """Expansion of e_1^exps[0] * ... * e_nvars^exps[-1] into monomials."""
    out = SymmetricPoly.constant(nvars, 1)
    for i, a in enumerate(exps):
        ei = elementary(nvars, i + 1)
        for _ in range(a):
            out = out * ei
    return out


def reduce_to_elementary(p: SymmetricPoly) -> dict[Exponents, int]:
    """Rewrite a symmetric polynomial in the elementary basis.

    Returns a map from exponent tuples (a_1, ..., a_r) to integers, meaning
    sum of coeff * e_1^a_1 * ... * e_r^a_r.  The loop peels the lex-leading
    monomial x^m (necessarily with weakly decreasing m when the input is
    symmetric) against e_1^(m_1-m_2) ... e_r^(m_r), which has the same
    leading term with coefficient 1.  A non-dominant leading term signals a
    non-symmetric input and raises ValueError.
    """
    r = p.nvars
    work = dict(p.terms)
    out: dict[Exponents, int] = {}
    while work:
        m = max(work)
        c = work[m]
        if any(m[i] < m[i + 1] for i in range(r - 1)):
            raise ValueError(f"input is not symmetric: stuck on leading monomial {m}")
        e_exps = tuple(m[i] - m[i + 1] for i in range(r - 1)) + (m[r - 1],)
        out[e_exps] = out.get(e_exps, 0) + c
        for e, k in _elementary_monomial(r, e_exps).terms.items():
            new = work.get(e, 0) - c * k
            if new:
                work[e] = new
            else:
                work.pop(e, None)
    return out


def elementary_to_monomials(nvars: int, epoly: Mapping[Exponents, int]) -> SymmetricPoly:
    """Inverse of `reduce_to_elementary`: expand an e-polynomial into monomials."""
    out = SymmetricPoly(nvars)
    for exps, c in epoly.items():
        out = out + c * _elementary_monomial(nvars, tuple(exps))
    return out
