from fractions import Fraction

import pytest

from betahole.expansions import (
    greedy_digits,
    is_admissible,
    orbit_min,
    quasi_greedy_digits,
    rotation_numerators,
    survives,
    t_beta,
)
from betahole.numberfield import BetaKind, eval_eventually_periodic, eval_periodic, make_context
from betahole.words import PeriodicSeq, lex_min_rotation, rotations

ALL_KINDS = list(BetaKind)


def all_words(max_len):
    for n in range(1, max_len + 1):
        for v in range(1 << n):
            yield format(v, f"0{n}b")


class TestTBeta:
    def test_fixed_point_zero(self):
        for kind in ALL_KINDS:
            ctx = make_context(kind)
            assert t_beta(ctx.zero(), ctx).is_zero()

    def test_base2_is_doubling(self):
        ctx = make_context("2")
        assert t_beta(ctx.from_rational(Fraction(3, 7)), ctx) == Fraction(6, 7)

    def test_golden_period3_orbit(self):
        ctx = make_context("golden")
        x0 = eval_periodic("001", ctx)  # the period-3 point 1/(2*beta)
        x = x0
        seen = []
        for _ in range(3):
            seen.append(x)
            x = t_beta(x, ctx)
        assert x == x0
        assert len({s.coeffs for s in seen}) == 3

    def test_domain_errors(self):
        ctx = make_context("golden")
        with pytest.raises(ValueError):
            t_beta(ctx.one(), ctx)
        with pytest.raises(ValueError):
            t_beta(ctx.from_rational(-1), ctx)


class TestGreedy:
    def test_examples(self):
        ctx2 = make_context("2")
        assert greedy_digits(ctx2.from_rational(Fraction(1, 2)), ctx2, 5) == "10000"
        assert greedy_digits(ctx2.zero(), ctx2, 4) == "0000"
        ctxg = make_context("golden")
        x = eval_periodic("001", ctxg)
        assert greedy_digits(x, ctxg, 6) == "001001"

    def test_round_trip_bound(self):
        # the n-digit prefix plus a zero tail undershoots x by less than beta^-n
        for kind in ALL_KINDS:
            ctx = make_context(kind)
            for w in ("001", "01011", "0001"):
                x = eval_periodic(w, ctx)
                for n in (1, 3, 7):
                    prefix = greedy_digits(x, ctx, n)
                    approx = eval_eventually_periodic(PeriodicSeq(prefix, "0"), ctx)
                    gap = x - approx
                    assert gap.sign() >= 0
                    assert (gap * ctx.beta_pow(n) - 1).sign() < 0


class TestQuasiGreedy:
    def test_half_in_base2(self):
        ctx = make_context("2")
        out = quasi_greedy_digits(ctx.from_rational(Fraction(1, 2)), ctx, 10)
        assert out == PeriodicSeq("0", "1")

    def test_golden_one_over_beta(self):
        ctx = make_context("golden")
        x = ctx.beta().inverse()
        out = quasi_greedy_digits(x, ctx, 10)
        assert out == PeriodicSeq("0", "10")
        assert eval_eventually_periodic(out, ctx) == x

    def test_already_infinite_is_untouched(self):
        ctx = make_context("golden")
        x = eval_periodic("001", ctx)
        assert quasi_greedy_digits(x, ctx, 12) == PeriodicSeq("", "001")

    def test_zero_rejected(self):
        ctx = make_context("2")
        with pytest.raises(ValueError):
            quasi_greedy_digits(ctx.zero(), ctx, 5)

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_round_trip_for_finite_expansions(self, kind):
        # x with finite greedy expansion of length <= 8: eval(quasi(x)) == x
        ctx = make_context(kind)
        for prefix in ("1", "01", "101", "0011", "10101", "01000001"):
            x = eval_eventually_periodic(PeriodicSeq(prefix, "0"), ctx)
            if x.sign() <= 0 or (x - 1).sign() >= 0:
                continue
            out = quasi_greedy_digits(x, ctx, 40)
            assert isinstance(out, PeriodicSeq)
            assert eval_eventually_periodic(out, ctx) == x
            # never ends in 0^inf: the period contains a 1
            assert "1" in out.period

    def test_unresolved_orbit_returns_prefix(self):
        # base2 remainders of 1/10 cycle with period 4 after one step;
        # with n too small to see it, the greedy prefix comes back
        ctx = make_context("2")
        x = ctx.from_rational(Fraction(1, 10))
        out = quasi_greedy_digits(x, ctx, 3)
        assert out == "000"


class TestAdmissibility:
    def test_golden_examples(self):
        ctx = make_context("golden")
        rep = is_admissible("01", ctx)
        assert not rep.admissible
        assert rep.failing_rotation_offset == 1
        assert rep.failing_comparison == ("10", "(10)")
        assert "offset=1" in rep.render()
        assert is_admissible("001", ctx).admissible

    def test_tribonacci_examples(self):
        ctx = make_context("tribonacci")
        assert not is_admissible("11", ctx).admissible
        assert is_admissible("0011", ctx).admissible
        assert not is_admissible("011", ctx).admissible  # rotation 110 hits delta

    def test_base2_excludes_exactly_all_ones(self):
        ctx = make_context("2")
        for w in all_words(6):
            assert is_admissible(w, ctx).admissible == ("0" in w)

    def test_rotation_invariance_and_first_offset(self):
        from betahole.words import cyclic_lt

        for kind in ALL_KINDS:
            ctx = make_context(kind)
            for w in all_words(7):
                rep = is_admissible(w, ctx)
                assert rep.admissible == is_admissible(lex_min_rotation(w), ctx).admissible
                if not rep.admissible:
                    k = rep.failing_rotation_offset
                    rots = rotations(w)
                    assert rep.failing_comparison[0] == rots[k]
                    # the reported offset is the smallest failing one
                    assert all(cyclic_lt(rots[i], ctx.delta.period) for i in range(k))


class TestOrbitMin:
    def test_golden_example(self):
        ctx = make_context("golden")
        rot, value = orbit_min("100", ctx)
        assert rot == "001"
        assert value.coeffs == (Fraction(-1, 2), Fraction(1, 2))  # 1/(2*beta)
        assert value.decimal(5) == "0.30902"

    def test_zero_word(self):
        for kind in ALL_KINDS:
            ctx = make_context(kind)
            rot, value = orbit_min("0", ctx)
            assert rot == "0" and value.is_zero()

    def test_tribonacci_example(self):
        ctx = make_context("tribonacci")
        rot, value = orbit_min("0011", ctx)
        assert rot == "0011"
        assert value == eval_periodic("0011", ctx)

    def test_min_is_exact_min_of_all_rotations(self):
        for kind in ALL_KINDS:
            ctx = make_context(kind)
            for w in ("0010", "01011", "000101"):
                if not is_admissible(w, ctx).admissible:
                    continue
                _, value = orbit_min(w, ctx)
                values = [eval_periodic(r, ctx) for r in rotations(w)]
                assert all((value - v).sign() <= 0 for v in values)
                assert any(value == v for v in values)

    def test_inadmissible_rejected(self):
        with pytest.raises(ValueError):
            orbit_min("01", make_context("golden"))

    def test_rotation_numerators_match_direct_evaluation(self):
        for kind in ALL_KINDS:
            ctx = make_context(kind)
            for w in ("0010011", "01101", "0001"):
                nums = rotation_numerators(w, ctx)
                for k, r in enumerate(rotations(w)):
                    assert nums[k] == ctx.int_horner(r)


class TestSurvives:
    def test_examples(self):
        ctx = make_context("golden")
        t_star = eval_periodic("001", ctx)  # 1/(2*beta)
        assert survives("001", 0, ctx)
        assert survives("001", t_star, ctx)
        assert not survives("001", t_star + Fraction(1, 1000), ctx)

    def test_preconditions(self):
        ctx = make_context("golden")
        with pytest.raises(ValueError):
            survives("01", 0, ctx)  # inadmissible word
        with pytest.raises(ValueError):
            survives("001", 1, ctx)  # hole bound outside [0, 1)


class TestShiftCommutation:
    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_up_to_length_7(self, kind):
        # T_beta on the periodic point equals the value of the rotated word
        ctx = make_context(kind)
        for w in all_words(7):
            if not is_admissible(w, ctx).admissible:
                continue
            left = t_beta(eval_periodic(w, ctx), ctx)
            right = eval_periodic(w[1:] + w[0], ctx)
            assert left == right
