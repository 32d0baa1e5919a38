from fractions import Fraction
from itertools import product

import pytest

from nccumulants import partitions
from nccumulants.oracle import random_functional
from nccumulants.prelie import (
    Functional,
    PreLieMonomial,
    TruncationError,
    all_words,
    effective_degree,
    eval_blocks,
    exp_left,
    left_power,
    magnus,
    magnus_inverse,
    prelie_product,
    right_power,
    word_from_text,
    word_text,
)

AB = ("a", "b")


def _sub(f, w, block):
    # value of f on the subword cut out by a 1-based block
    return f.value(tuple(w[i - 1] for i in block))


class TestFunctional:
    def test_dense_zero_table(self):
        f = Functional(AB, 2)
        assert f.value(("a",)) == 0
        assert f.value(("b", "a")) == 0
        assert sum(1 for _ in f.words()) == 6

    def test_values_applied(self):
        f = Functional(("a",), 3, {("a", "a"): "3/2"})
        assert f.value(("a", "a")) == Fraction(3, 2)
        assert f.value(("a",)) == 0

    def test_validation(self):
        with pytest.raises(ValueError):
            Functional((), 2)
        with pytest.raises(ValueError):
            Functional(("a", "a"), 2)
        with pytest.raises(ValueError):
            Functional(("a,b",), 2)
        with pytest.raises(ValueError):
            Functional(AB, 0)
        with pytest.raises(ValueError):
            Functional(AB, 2, {("a", "a", "a"): 1})
        with pytest.raises(ValueError):
            Functional(AB, 2, {("c",): 1})

    def test_unknown_word_lookup(self):
        f = Functional(AB, 2)
        with pytest.raises(ValueError):
            f.value(("a", "a", "a"))
        with pytest.raises(ValueError):
            f.value(("c",))

    def test_vector_ops(self):
        f = random_functional(AB, 3, 11)
        g = random_functional(AB, 3, 12)
        assert f.negate().negate() == f
        assert (f + f.negate()).is_zero()
        assert (f + f).scale(Fraction(1, 2)) == f
        assert f + g == g + f
        assert (f - g) + g == f

    def test_space_mismatch(self):
        f = Functional(AB, 3)
        with pytest.raises(ValueError):
            f.add(Functional(AB, 4))
        with pytest.raises(ValueError):
            f.add(Functional(("a",), 3))

    def test_json_roundtrip(self):
        f = random_functional(AB, 3, 13)
        obj = f.to_json()
        assert obj["alphabet"] == ["a", "b"]
        assert all("/" in v or v.lstrip("-").isdigit() for v in obj["values"].values())
        assert Functional.from_json(obj) == f

    def test_json_omits_zeros(self):
        f = Functional(AB, 2, {("a",): 1})
        assert set(f.to_json()["values"]) == {"a"}

    def test_json_validation(self):
        with pytest.raises(ValueError):
            Functional.from_json({"alphabet": ["a"], "max_order": 2, "values": {"a,a,a": "1"}})
        with pytest.raises(ValueError):
            Functional.from_json({"alphabet": ["a"], "max_order": 2, "values": {"b": "1"}})
        with pytest.raises(ValueError):
            Functional.from_json({"alphabet": ["a"]})

    def test_word_text_roundtrip(self):
        assert word_from_text("a,b,a") == ("a", "b", "a")
        assert word_text(("a", "b")) == "a,b"
        with pytest.raises(ValueError):
            word_from_text("a,,b")


class TestEvalBlocks:
    def test_single_block(self):
        f = random_functional(AB, 3, 21)
        w = ("a", "b")
        assert eval_blocks(f, w, [[1, 2]]) == f.value(w)

    def test_two_blocks(self):
        f = random_functional(AB, 3, 22)
        w = ("a", "b", "a")
        assert eval_blocks(f, w, [[1, 3], [2]]) == f.value(("a", "a")) * f.value(("b",))

    def test_concrete_product(self):
        f = Functional(("a",), 2, {("a", "a"): 2, ("a",): 3})
        assert eval_blocks(f, ("a", "a", "a"), [[1, 3], [2]]) == 6

    def test_not_a_partition(self):
        f = Functional(AB, 3)
        with pytest.raises(ValueError):
            eval_blocks(f, ("a", "b"), [[1]])
        with pytest.raises(ValueError):
            eval_blocks(f, ("a", "b"), [[1, 2], [2]])

    def test_truncation(self):
        f = Functional(("a",), 2)
        with pytest.raises(TruncationError):
            eval_blocks(f, ("a",) * 4, [[1, 2, 3], [4]])


class TestProduct:
    def test_vanishes_below_length_three(self):
        a = random_functional(AB, 4, 31)
        b = random_functional(AB, 4, 32)
        p = prelie_product(a, b)
        for w in all_words(AB, 2):
            assert p.value(w) == 0

    def test_univariate_low_orders(self):
        a = random_functional(("a",), 6, 33)
        b = random_functional(("a",), 6, 34)
        p = prelie_product(a, b)

        def A(n):
            return a.value(("a",) * n)

        def B(n):
            return b.value(("a",) * n)

        assert p.value(("a",) * 2) == 0
        assert p.value(("a",) * 3) == -B(2) * A(1)
        assert p.value(("a",) * 4) == -2 * B(3) * A(1) - B(2) * A(2)
        assert p.value(("a",) * 5) == -3 * B(4) * A(1) - 2 * B(3) * A(2) - B(2) * A(3)
        assert p.value(("a",) * 6) == (
            -4 * B(5) * A(1) - 3 * B(4) * A(2) - 2 * B(3) * A(3) - B(2) * A(4)
        )

    def test_univariate_closed_formula(self):
        a = random_functional(("a",), 10, 35)
        b = random_functional(("a",), 10, 36)
        p = prelie_product(a, b)
        for n in range(1, 11):
            closed = -sum(
                (
                    (n - l - 1) * b.value(("a",) * (n - l)) * a.value(("a",) * l)
                    for l in range(1, n - 1)
                ),
                Fraction(0),
            )
            assert p.value(("a",) * n) == closed

    def test_matches_two_block_partition_sum(self):
        # the product is the signed sum over irreducible partitions with two
        # blocks: the outer block feeds the right factor, the inner the left
        a = random_functional(AB, 5, 37)
        b = random_functional(AB, 5, 38)
        p = prelie_product(a, b)
        two_block = {
            m: [
                q
                for q in partitions.enumerate_nc_irr(m)
                if q.num_blocks == 2
            ]
            for m in range(1, 6)
        }
        for w in all_words(AB, 5):
            total = Fraction(0)
            for q in two_block[len(w)]:
                total += _sub(b, w, q.blocks[0]) * _sub(a, w, q.blocks[1])
            assert p.value(w) == -total

    def test_space_mismatch(self):
        with pytest.raises(ValueError):
            prelie_product(Functional(AB, 3), Functional(AB, 4))

    def test_prelie_identity(self):
        a = random_functional(AB, 6, 7)
        b = random_functional(AB, 6, 8)
        c = random_functional(AB, 6, 9)
        lhs = prelie_product(a, prelie_product(b, c)) - prelie_product(
            prelie_product(a, b), c
        )
        rhs = prelie_product(b, prelie_product(a, c)) - prelie_product(
            prelie_product(b, a), c
        )
        assert lhs == rhs


class TestIteratedProducts:
    def test_powers_base_cases(self):
        a = random_functional(AB, 4, 41)
        b = random_functional(AB, 4, 42)
        assert left_power(a, b, 0) == b
        assert right_power(a, b, 0) == b
        assert left_power(a, b, 1) == prelie_product(a, b)
        assert right_power(a, b, 1) == prelie_product(b, a)
        with pytest.raises(ValueError):
            left_power(a, b, -1)

    def test_right_iteration_ladder_sum(self):
        # ((k1 |> k2) |> k3) ... |> k_{n+1} is the signed sum over irreducible
        # partitions whose nesting tree is the (n+1)-ladder, outermost block
        # paired with the last factor
        n_max = 8
        fs = [random_functional(AB, n_max, 50 + i) for i in range(4)]
        for n in (1, 2, 3):
            chain = fs[0]
            for i in range(1, n + 1):
                chain = prelie_product(chain, fs[i])
            ladder_enc = "[" * (n + 1) + "]" * (n + 1)
            per_length = {}
            for m in range(1, n_max + 1):
                per_length[m] = [
                    p
                    for p in partitions.enumerate_nc_irr(m)
                    if p.num_blocks == n + 1
                    and partitions.nesting_forest(p).encoding == ladder_enc
                ]
            for w in all_words(AB, n_max):
                total = Fraction(0)
                for p in per_length[len(w)]:
                    term = Fraction((-1) ** n)
                    for depth, block in enumerate(p.blocks):
                        term *= _sub(fs[n - depth], w, block)
                    total += term
                assert chain.value(w) == total

    def test_left_iteration_monotone_sum(self):
        # k1 |> (k2 |> (... |> k_{n+1})) sums over irreducible monotone
        # partitions, the block labeled j paired with factor n+2-j
        n_max = 8
        fs = [random_functional(AB, n_max, 60 + i) for i in range(4)]
        for n in (1, 2, 3):
            chain = fs[n]
            for i in range(n - 1, -1, -1):
                chain = prelie_product(fs[i], chain)
            per_length = {
                m: partitions.enumerate_monotone_irr(m, n + 1)
                for m in range(1, n_max + 1)
            }
            for w in all_words(AB, n_max):
                total = Fraction(0)
                for mp in per_length[len(w)]:
                    term = Fraction((-1) ** n)
                    for j, block in enumerate(mp.blocks_by_label):
                        term *= _sub(fs[n - j], w, block)
                    total += term
                assert chain.value(w) == total

    def test_left_power_block_count_sum(self):
        # equal-argument left powers collapse to the count-weighted sum over
        # irreducible partitions with n+1 blocks
        n_max = 8
        rho = random_functional(AB, n_max, 70)
        kap = random_functional(AB, n_max, 71)
        for n in (1, 2, 3):
            lhs = left_power(rho, kap, n)
            per_length = {
                m: [
                    (p, partitions.monotone_count_partition(p))
                    for p in partitions.enumerate_nc_irr(m)
                    if p.num_blocks == n + 1
                ]
                for m in range(1, n_max + 1)
            }
            for w in all_words(AB, n_max):
                total = Fraction(0)
                for p, count in per_length[len(w)]:
                    term = Fraction((-1) ** n * count) * _sub(kap, w, p.blocks[0])
                    for block in p.blocks[1:]:
                        term *= _sub(rho, w, block)
                    total += term
                assert lhs.value(w) == total


class TestEffectiveDegree:
    def test_examples(self):
        a, b, c, d = (random_functional(AB, 6, 80 + i) for i in range(4))
        la, lb, lc, ld = (PreLieMonomial.leaf(f) for f in (a, b, c, d))
        assert effective_degree(la) == 1
        ab = PreLieMonomial.product(la, lb)
        assert effective_degree(ab) == 3
        assert effective_degree(PreLieMonomial.product(la, ab)) == 4
        assert effective_degree(PreLieMonomial.product(ab, lc)) == 5
        cd = PreLieMonomial.product(lc, ld)
        assert effective_degree(PreLieMonomial.product(ab, cd)) == 6

    def test_vanishing_law(self):
        a, b, c, d = (random_functional(AB, 6, 90 + i) for i in range(4))
        la, lb, lc, ld = (PreLieMonomial.leaf(f) for f in (a, b, c, d))
        shapes = [
            PreLieMonomial.product(la, lb),
            PreLieMonomial.product(la, PreLieMonomial.product(lb, lc)),
            PreLieMonomial.product(PreLieMonomial.product(la, lb), lc),
            PreLieMonomial.product(
                PreLieMonomial.product(la, lb), PreLieMonomial.product(lc, ld)
            ),
        ]
        for mono in shapes:
            deg = effective_degree(mono)
            value = mono.evaluate()
            for w in all_words(AB, min(deg - 1, 6)):
                assert value.value(w) == 0

    def test_leaf_without_functional(self):
        bad = PreLieMonomial.leaf("not a functional")
        assert effective_degree(bad) == 1
        with pytest.raises(ValueError):
            bad.evaluate()


class TestMagnus:
    def test_low_order_expansion(self):
        kappa = random_functional(AB, 4, 100)
        theta = magnus(kappa)
        for w in all_words(AB, 4):
            m = len(w)
            if m <= 2:
                assert theta.value(w) == kappa.value(w)
            elif m == 3:
                expected = kappa.value(w) + Fraction(1, 2) * kappa.value(
                    (w[0], w[2])
                ) * kappa.value((w[1],))
                assert theta.value(w) == expected
            else:
                expected = (
                    kappa.value(w)
                    + Fraction(1, 2)
                    * (
                        kappa.value((w[0], w[3])) * kappa.value((w[1], w[2]))
                        + kappa.value((w[0], w[2], w[3])) * kappa.value((w[1],))
                        + kappa.value((w[0], w[1], w[3])) * kappa.value((w[2],))
                    )
                    + Fraction(1, 6)
                    * kappa.value((w[0], w[3]))
                    * kappa.value((w[1],))
                    * kappa.value((w[2],))
                )
                assert theta.value(w) == expected

    def test_inverse_low_order(self):
        kappa = random_functional(AB, 3, 101)
        w_exp = magnus_inverse(kappa)
        for w in all_words(AB, 3):
            if len(w) < 3:
                assert w_exp.value(w) == kappa.value(w)
            else:
                expected = kappa.value(w) - Fraction(1, 2) * kappa.value(
                    (w[0], w[2])
                ) * kappa.value((w[1],))
                assert w_exp.value(w) == expected

    def test_mutual_inverses(self):
        kappa = random_functional(AB, 7, 102)
        assert magnus_inverse(magnus(kappa)) == kappa
        assert magnus(magnus_inverse(kappa)) == kappa

    def test_zero_fixed_point(self):
        zero = Functional(AB, 5)
        assert magnus(zero).is_zero()
        assert magnus_inverse(zero).is_zero()


class TestExpLeft:
    def test_short_words_unchanged(self):
        theta = random_functional(AB, 5, 110)
        kappa = random_functional(AB, 5, 111)
        for sign in (1, -1):
            e = exp_left(theta, kappa, sign)
            for w in all_words(AB, 2):
                assert e.value(w) == kappa.value(w)

    def test_zero_operator(self):
        kappa = random_functional(AB, 5, 112)
        assert exp_left(Functional(AB, 5), kappa, 1) == kappa

    def test_signs_invert(self):
        theta = random_functional(AB, 6, 113)
        kappa = random_functional(AB, 6, 114)
        assert exp_left(theta, exp_left(theta, kappa, 1), -1) == kappa

    def test_bad_sign(self):
        f = Functional(AB, 3)
        with pytest.raises(ValueError):
            exp_left(f, f, 2)
