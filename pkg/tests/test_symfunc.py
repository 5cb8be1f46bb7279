from itertools import permutations
from random import Random

import pytest

from curvecount import SymmetricPoly, elementary, reduce_to_elementary
from curvecount.symfunc import elementary_to_monomials


def x_power(nvars, i, a=1):
    e = [0] * nvars
    e[i] = a
    return SymmetricPoly(nvars, {tuple(e): 1})


def symmetrize(p: SymmetricPoly) -> SymmetricPoly:
    acc = SymmetricPoly(p.nvars)
    for perm in permutations(range(p.nvars)):
        acc = acc + SymmetricPoly(
            p.nvars, {tuple(e[i] for i in perm): c for e, c in p.terms.items()}
        )
    return acc


def random_symmetric(rng: Random, nvars: int, max_degree: int) -> SymmetricPoly:
    acc = SymmetricPoly(nvars)
    for _ in range(rng.randint(1, 4)):
        exps = [0] * nvars
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(nvars)] += 1
        mono = SymmetricPoly(nvars, {tuple(exps): rng.randint(-3, 3)})
        acc = acc + symmetrize(mono)
    return acc


class TestReduceToElementary:
    def test_power_sum_two_vars(self):
        # x^2 + y^2 = e1^2 - 2 e2, by hand.
        p = x_power(2, 0, 2) + x_power(2, 1, 2)
        assert reduce_to_elementary(p) == {(2, 0): 1, (0, 1): -2}

    def test_e2_itself(self):
        p = SymmetricPoly(2, {(1, 1): 1})
        assert reduce_to_elementary(p) == {(0, 1): 1}

    def test_degree_four_hand_case(self):
        # x^3 y + x y^3 = e2 (e1^2 - 2 e2) = e1^2 e2 - 2 e2^2, by hand.
        p = SymmetricPoly(2, {(3, 1): 1, (1, 3): 1})
        assert reduce_to_elementary(p) == {(2, 1): 1, (0, 2): -2}

    def test_constant(self):
        assert reduce_to_elementary(SymmetricPoly.constant(3, 7)) == {(0, 0, 0): 7}

    def test_zero(self):
        assert reduce_to_elementary(SymmetricPoly(3)) == {}

    def test_rejects_non_symmetric(self):
        with pytest.raises(ValueError):
            reduce_to_elementary(x_power(2, 0))
        with pytest.raises(ValueError):
            reduce_to_elementary(SymmetricPoly(2, {(2, 0): 1, (1, 1): 1}))

    def test_round_trip_random(self):
        rng = Random(95)
        for _ in range(20):
            nvars = rng.randint(1, 4)
            p = random_symmetric(rng, nvars, 6)
            epoly = reduce_to_elementary(p)
            assert elementary_to_monomials(nvars, epoly) == p

    def test_random_evaluation_agreement(self):
        # Evaluating the e-polynomial at the elementary symmetric values of a
        # random integer tuple must reproduce the original polynomial's value.
        rng = Random(777)
        for _ in range(25):
            nvars = rng.randint(1, 4)
            p = random_symmetric(rng, nvars, 8)
            epoly = reduce_to_elementary(p)
            values = tuple(rng.randint(-5, 5) for _ in range(nvars))
            e_values = [elementary(nvars, k).evaluate(values) for k in range(1, nvars + 1)]
            total = 0
            for exps, c in epoly.items():
                term = c
                for i, a in enumerate(exps):
                    term *= e_values[i] ** a
                total += term
            assert total == p.evaluate(values)


class TestSymmetricPoly:
    def test_permutation_invariance_of_symmetrized_input(self):
        rng = Random(4)
        p = random_symmetric(rng, 3, 5)
        for perm in ((1, 0, 2), (2, 1, 0), (1, 2, 0)):
            permuted = SymmetricPoly(
                3, {tuple(e[i] for i in perm): c for e, c in p.terms.items()}
            )
            assert permuted == p

    def test_arithmetic(self):
        x, y = x_power(2, 0), x_power(2, 1)
        assert (x + y) * (x + y) == x * x + 2 * (x * y) + y * y
        assert (x - y) + (y - x) == SymmetricPoly(2)
        assert 3 * x == x * 3

    def test_truncated_multiplication(self):
        x, y = x_power(2, 0), x_power(2, 1)
        p = (SymmetricPoly.constant(2, 1) + x).mul_truncated(
            SymmetricPoly.constant(2, 1) + y, 1
        )
        assert p == SymmetricPoly.constant(2, 1) + x + y

    def test_evaluate(self):
        p = SymmetricPoly(2, {(2, 1): 3, (0, 0): -1})
        assert p.evaluate((2, 5)) == 3 * 4 * 5 - 1

    def test_elementary_values(self):
        assert elementary(3, 1) == x_power(3, 0) + x_power(3, 1) + x_power(3, 2)
        assert elementary(3, 3) == SymmetricPoly(3, {(1, 1, 1): 1})
        assert elementary(3, 4).is_zero()

    def test_exponent_length_checked(self):
        with pytest.raises(ValueError):
            SymmetricPoly(2, {(1, 2, 3): 1})
