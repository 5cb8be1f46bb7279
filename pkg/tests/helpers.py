"""Shared test oracles and random generators.

The oracles here deliberately avoid the production Littlewood-Richardson
code path: `brute_lr_coefficient` fills skew tableaux cell by cell, and
`oracle_multiply` evaluates products through determinant expansion in
special classes followed by iterated Pieri steps only.
"""

from __future__ import annotations

from itertools import permutations
from random import Random

from curvecount import ChernVector, ChowClass, GrassmannianRing, Partition, pieri


def brute_lr_coefficient(lam, mu, nu) -> int:
    """Count Littlewood-Richardson skew tableaux of shape nu/lam, content mu.

    Cells are filled row-major with entries 1..len(mu), keeping rows weakly
    and columns strictly increasing; the reverse reading word (rows top to
    bottom, each right to left) must be a lattice word.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    rows = len(nu)
    lam_p = lam + (0,) * (rows - len(lam))
    if any(lam_p[i] > nu[i] for i in range(rows)):
        return 0
    cells = [(r, c) for r in range(rows) for c in range(lam_p[r], nu[r])]
    if not cells:
        return 1 if not mu else 0
    grid: dict[tuple[int, int], int] = {}
    remaining = list(mu)
    found = 0

    def reverse_word_is_lattice() -> bool:
        counts = [0] * (len(mu) + 1)
        for r in range(rows):
            for c in range(nu[r] - 1, lam_p[r] - 1, -1):
                v = grid[(r, c)]
                counts[v] += 1
                if v >= 2 and counts[v] > counts[v - 1]:
                    return False
        return True

    def fill(idx: int) -> None:
        nonlocal found
        if idx == len(cells):
            if reverse_word_is_lattice():
                found += 1
            return
        r, c = cells[idx]
        left = grid.get((r, c - 1))
        above = grid.get((r - 1, c))
        for v in range(1, len(mu) + 1):
            if remaining[v - 1] == 0:
                continue
            if left is not None and v < left:
                continue
            if above is not None and v <= above:
                continue
            grid[(r, c)] = v
            remaining[v - 1] -= 1
            fill(idx + 1)
            remaining[v - 1] += 1
            del grid[(r, c)]

    fill(0)
    return found


def _determinant_terms(parts: tuple[int, ...], cols: int):
    """Signed special-class monomials of det(sigma_(parts[i] + j - i))."""
    size = len(parts)
    if size == 0:
        yield 1, ()
        return
    for perm in permutations(range(size)):
        rows = tuple(parts[i] + perm[i] - i for i in range(size))
        if any(m < 0 or m > cols for m in rows):
            continue
        inversions = sum(
            1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j]
        )
        yield (-1 if inversions % 2 else 1), rows


def oracle_multiply(ring: GrassmannianRing, lam, mu) -> ChowClass:
    """sigma_lam * sigma_mu evaluated without the LR rule.

    Both factors are expanded as determinants in special classes; every
    monomial of the product is then evaluated by iterated Pieri steps.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    total = ring.zero()
    for s1, rows1 in _determinant_terms(lam.parts, ring.cols):
        for s2, rows2 in _determinant_terms(mu.parts, ring.cols):
            term = ring.one()
            for a in rows1 + rows2:
                term = pieri(term, a)
            total = total + s1 * s2 * term
    return total


def random_class(ring: GrassmannianRing, rng: Random, max_terms: int = 5) -> ChowClass:
    """Random class: up to `max_terms` basis classes with coefficients in [-9, 9]."""
    basis = ring.basis()
    terms = {}
    for p in rng.sample(basis, min(max_terms, len(basis))):
        c = rng.randint(-9, 9)
        if c:
            terms[p] = c
    return ChowClass(ring, terms)


def random_homogeneous_class(ring: GrassmannianRing, rng: Random, degree: int) -> ChowClass:
    basis = ring.basis(degree)
    return ChowClass(ring, {p: rng.randint(-9, 9) for p in basis})


def random_bundle_vector(ring: GrassmannianRing, rng: Random, rank: int) -> ChernVector:
    """Random Chern vector: component i is a random homogeneous class of degree i."""
    top = min(rank, ring.dim)
    comps = [ring.one()]
    comps += [random_homogeneous_class(ring, rng, i) for i in range(1, top + 1)]
    return ChernVector(ring, rank, comps)
