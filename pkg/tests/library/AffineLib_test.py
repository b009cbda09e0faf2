import pytest

from tg_embeddings import errors as err
from tg_embeddings.library import AffineLib
from tg_embeddings.types import AffineExpr, ParamBound, ParamRange

s = AffineLib.param("s")
k = AffineLib.param("k")
l = AffineLib.param("l")


class TestAffineExpr:
    def test_terms_are_merged_and_sorted(self):
        assert AffineLib.add(AffineLib.param("l", 2), AffineLib.add(k, AffineLib.param("l", -2))) == k

    def test_at_most_two_params(self):
        with pytest.raises(err.PresentationError, match=err.AFFINE_TOO_MANY_PARAMS):
            AffineLib.add(AffineLib.add(k, l), s)

    def test_is_zero(self):
        assert AffineLib.is_zero(AffineLib.subtract(s, s))
        assert not AffineLib.is_zero(s)


class TestArithmetic:
    def test_evaluate(self):
        assert AffineLib.evaluate(AffineLib.add(AffineLib.scale(s, 2), AffineLib.constant(-1)), {"s": 4}) == 7

    def test_evaluate_unbound(self):
        with pytest.raises(err.PresentationError, match=err.AFFINE_UNBOUND_PARAM):
            AffineLib.evaluate(s, {})

    def test_multiply_by_constant(self):
        assert AffineLib.multiply(AffineLib.constant(3), s) == AffineLib.param("s", 3)

    def test_multiply_nonlinear(self):
        with pytest.raises(err.PresentationError, match=err.PARAMETRIC_POWER_NONLINEAR):
            AffineLib.multiply(s, k)

    def test_substitute_constants(self):
        expr = AffineLib.add(AffineLib.param("p", 2), s)
        assert AffineLib.substitute_constants(expr, {"p": 3}) == AffineLib.add(s, AffineLib.constant(6))


class TestRanges:
    def test_bounds_unbounded_above(self):
        param_range = ParamRange((ParamBound("s", 2),))
        assert AffineLib.bounds(AffineLib.subtract(s, AffineLib.constant(1)), param_range) == (1, None)
        assert AffineLib.bounds(AffineLib.negate(s), param_range) == (None, -2)

    def test_bounds_two_params(self):
        param_range = ParamRange((ParamBound("k", 1, 3), ParamBound("l", 2, 5)))
        assert AffineLib.bounds(AffineLib.subtract(k, l), param_range) == (-4, 1)

    def test_sign_on(self):
        param_range = ParamRange((ParamBound("s", 1),))
        assert AffineLib.sign_on(s, param_range) == 1
        assert AffineLib.sign_on(AffineLib.negate(s), param_range) == -1
        assert AffineLib.sign_on(AffineLib.subtract(s, AffineLib.constant(2)), param_range) is None

    def test_inverted_range(self):
        with pytest.raises(err.PresentationError, match=err.RANGE_BOUNDS_INVERTED):
            ParamBound("s", 3, 2)

    def test_duplicate_param(self):
        with pytest.raises(err.PresentationError, match=err.RANGE_DUPLICATE_PARAM):
            ParamRange((ParamBound("s", 1), ParamBound("s", 2)))


class TestFormat:
    @pytest.mark.parametrize(
        "expr, text",
        [
            (AffineExpr(-1, (("s", 2),)), "2s-1"),
            (AffineExpr(0, (("k", 1), ("l", -1))), "k-l"),
            (AffineExpr(0, (("s", -1),)), "-s"),
            (AffineExpr(3), "3"),
            (AffineExpr(0), "0"),
        ],
    )
    def test_format_affine(self, expr, text):
        assert AffineLib.format_affine(expr) == text
