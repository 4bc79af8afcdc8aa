import math
from fractions import Fraction

import pytest
from hypothesis import assume, given

from bqalg.algebra.backends import Backend, ComplexScalar, Tolerance
from bqalg.algebra.biquaternion import Biquaternion, is_close, scalar_multiply, semi_norm, square
from bqalg.algebra.quaternion import Quaternion
from bqalg.algebra.roots import RootOfMinusOne, satisfies_root_structure, trivial_root_sign
from bqalg.algebra.structure import (
    Classification,
    DecompositionKind,
    classify,
    decompose_zero_divisor,
    idempotent_axis,
    idempotent_partner,
    is_idempotent,
    is_nilpotent,
    is_pure,
    is_root_of_minus_one,
    is_zero_divisor,
    is_zero_divisor_hamilton,
    make_idempotent,
    make_nilpotent,
    make_zero_divisor,
    normalize_nilpotent,
    normalize_to_idempotent,
    square_scaling_check,
)
from bqalg.algebra.text import parse_biquaternion
from bqalg.errors import (
    BadFrameError,
    IrrationalAxisError,
    NonFiniteValueError,
    NotNilpotentError,
    NotRootOfMinusOneError,
    NotZeroDivisorError,
    PureInputError,
    TrivialRootError,
    UsageError,
    ZeroInputError,
    ZeroScaleError,
)
from tests.strategies import biquaternions, pure_biquaternions

HALF = Fraction(1, 2)
I_Q = Quaternion.of(0, 1, 0, 0)
J_Q = Quaternion.of(0, 0, 1, 0)


def root(text: str, **kwargs) -> RootOfMinusOne:
    return RootOfMinusOne.from_biquaternion(parse_biquaternion(text), **kwargs)


class TestCriteria:
    def test_norms_four_example(self, norms_four):
        assert is_zero_divisor(norms_four)
        assert is_zero_divisor_hamilton(norms_four)

    @pytest.mark.parametrize("text", ["1 + Ii", "i + Ij", "1/2 + 1/2Ii", "(1+1I) + (1-1I)i"])
    def test_divisors(self, text):
        q = parse_biquaternion(text)
        assert is_zero_divisor(q) and is_zero_divisor_hamilton(q)

    @pytest.mark.parametrize("text", ["1", "2 + i", "I", "i + j + k"])
    def test_non_divisors(self, text):
        q = parse_biquaternion(text)
        assert not is_zero_divisor(q) and not is_zero_divisor_hamilton(q)

    def test_zero_is_excluded(self):
        with pytest.raises(ZeroInputError):
            is_zero_divisor(Biquaternion.zero())
        with pytest.raises(ZeroInputError):
            is_zero_divisor_hamilton(Biquaternion.zero())

    @given(q=biquaternions)
    def test_criteria_agree(self, q):
        assume(not q.is_exact_zero())
        assert is_zero_divisor(q) == is_zero_divisor_hamilton(q)

    def test_sqrt_eight_example(self, sqrt_eight):
        tol = Tolerance(1e-12, Backend.APPROX)
        assert is_zero_divisor(sqrt_eight, tol)
        assert is_zero_divisor_hamilton(sqrt_eight, tol)


class TestPredicates:
    def test_pure(self, nilpotent, bq):
        assert is_pure(nilpotent)
        assert not is_pure(bq("1 + i"))

    def test_idempotent(self, bq):
        assert is_idempotent(bq("1/2 + 1/2Ii"))
        assert is_idempotent(bq("0")) and is_idempotent(bq("1"))
        assert not is_idempotent(bq("1 + Ii"))

    def test_nilpotent(self, nilpotent, bq):
        assert square(nilpotent) == Biquaternion.zero()
        assert is_nilpotent(nilpotent)
        assert not is_nilpotent(bq("1 + Ii"))
        assert not is_nilpotent(bq("i"))

    @given(q=pure_biquaternions)
    def test_pure_with_vanishing_semi_norm_is_nilpotent(self, q):
        assert is_nilpotent(q) == semi_norm(q).is_exact_zero()

    def test_root_of_minus_one(self, bq):
        assert is_root_of_minus_one(bq("i"))
        assert is_root_of_minus_one(bq("I"))
        assert is_root_of_minus_one(bq("-I"))
        assert is_root_of_minus_one(bq("5/4i + 3/4Ij"))
        assert not is_root_of_minus_one(bq("i + j"))
        assert not is_root_of_minus_one(bq("1 + i"))


class TestClassify:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("0", Classification.ZERO),
            ("1", Classification.TRIVIAL_IDEMPOTENT),
            ("1/2 + 1/2Ii", Classification.IDEMPOTENT),
            ("1/2 - 1/2Ii", Classification.IDEMPOTENT),
            ("i + Ij", Classification.NILPOTENT),
            ("1 + Ii", Classification.NON_PURE_ZERO_DIVISOR),
            ("(1+1I) + (1-1I)i + (-1-1I)j + (-1+1I)k", Classification.NON_PURE_ZERO_DIVISOR),
            ("2 + i", Classification.INVERTIBLE),
            ("I", Classification.INVERTIBLE),
        ],
    )
    def test_classify(self, text, expected):
        assert classify(parse_biquaternion(text)) is expected

    def test_classify_approx(self, sqrt_eight):
        assert classify(sqrt_eight) is Classification.NON_PURE_ZERO_DIVISOR

    def test_small_semi_norm_on_large_value_is_invertible(self):
        q = parse_biquaternion("100 + 100Ii + 0.005j")
        assert classify(q) is Classification.INVERTIBLE
        assert not is_zero_divisor(q)
        assert not is_zero_divisor_hamilton(q)

    def test_overflow_is_reported_by_both_criteria(self):
        q = parse_biquaternion("1.0e200i")
        with pytest.raises(NonFiniteValueError):
            is_zero_divisor(q)
        with pytest.raises(NonFiniteValueError):
            is_zero_divisor_hamilton(q)
        with pytest.raises(NonFiniteValueError):
            classify(q)


class TestRoots:
    def test_trivial_roots(self, bq):
        assert trivial_root_sign(bq("I")) == 1
        assert trivial_root_sign(bq("-I")) == -1
        assert trivial_root_sign(bq("i")) == 0
        with pytest.raises(TrivialRootError):
            root("I")
        assert root("I", allow_trivial=True).is_trivial

    def test_real_root(self):
        xi = root("3/5i + 4/5k")
        assert xi.is_real
        assert not xi.is_trivial

    def test_complex_root(self):
        xi = root("5/4i + 3/4Ij")
        assert not xi.is_real
        assert xi.alpha_vec == Quaternion.of(0, Fraction(5, 4), 0, 0)
        assert xi.beta_vec == Quaternion.of(0, 0, Fraction(3, 4), 0)

    def test_not_a_root(self, bq):
        with pytest.raises(NotRootOfMinusOneError):
            root("i + j")
        with pytest.raises(NotRootOfMinusOneError):
            root("1/2 + i")
        assert not satisfies_root_structure(bq("i + Ii"))

    def test_times_imaginary_unit(self, bq):
        assert root("i").times_imaginary_unit() == bq("Ii")


class TestConstructors:
    def test_make_idempotent_real_axis(self, bq):
        assert make_idempotent(root("i")) == bq("1/2 + 1/2Ii")
        assert make_idempotent(root("i"), -1) == bq("1/2 - 1/2Ii")

    def test_make_idempotent_complex_axis(self, bq):
        q = make_idempotent(root("5/4i + 3/4Ij"))
        assert q == bq("1/2 + 5/8Ii - 3/8j")
        assert square(q) == q

    def test_make_idempotent_trivial(self):
        xi = root("I", allow_trivial=True)
        with pytest.raises(TrivialRootError):
            make_idempotent(xi)
        assert make_idempotent(xi, 1, allow_trivial=True) == Biquaternion.zero()
        assert make_idempotent(xi, -1, allow_trivial=True) == Biquaternion.one()

    def test_make_idempotent_sign(self):
        with pytest.raises(UsageError):
            make_idempotent(root("i"), 2)

    def test_idempotent_partner(self, bq):
        q = bq("1/2 + 5/8Ii - 3/8j")
        partner = idempotent_partner(q)
        assert is_idempotent(partner)
        assert q * partner == Biquaternion.zero()
        assert partner == bq("1/2 - 5/8Ii + 3/8j")
        with pytest.raises(UsageError):
            idempotent_partner(bq("2 + i"))

    def test_idempotent_axis(self, bq):
        assert idempotent_axis(bq("1/2 + 1/2Ii")).value == bq("i")
        assert idempotent_axis(bq("1/2 - 1/2Ii")).value == bq("-i")
        xi = root("5/4i + 3/4Ij")
        assert idempotent_axis(make_idempotent(xi)) == xi
        assert idempotent_axis(make_idempotent(root("3/5i + 4/5k"))).is_real

    def test_idempotent_axis_domain(self, bq):
        with pytest.raises(UsageError):
            idempotent_axis(bq("2 + i"))
        with pytest.raises(TrivialRootError):
            idempotent_axis(Biquaternion.one())

    def test_make_nilpotent(self, nilpotent):
        assert make_nilpotent(I_Q, J_Q, ComplexScalar.one()) == nilpotent
        scaled = make_nilpotent(I_Q, J_Q, ComplexScalar.of(2, 3))
        assert square(scaled) == Biquaternion.zero()

    @pytest.mark.parametrize(
        "mu, nu",
        [
            (I_Q, I_Q),
            (I_Q, Quaternion.of(0, 0, 2, 0)),
            (Quaternion.of(1, 1, 0, 0), J_Q),
            (Quaternion.zero(), Quaternion.zero()),
        ],
    )
    def test_make_nilpotent_bad_frame(self, mu, nu):
        with pytest.raises(BadFrameError):
            make_nilpotent(mu, nu, ComplexScalar.one())

    def test_make_nilpotent_zero_scale(self):
        with pytest.raises(ZeroScaleError):
            make_nilpotent(I_Q, J_Q, ComplexScalar.zero())

    def test_make_zero_divisor(self, bq):
        p = make_zero_divisor(ComplexScalar.of(2), root("i"))
        assert p == bq("1 + Ii")
        with pytest.raises(ZeroScaleError):
            make_zero_divisor(ComplexScalar.zero(), root("i"))


class TestNormalization:
    def test_normalize_to_idempotent(self, bq):
        alpha, q = normalize_to_idempotent(bq("1 + Ii"))
        assert alpha == ComplexScalar.of(2)
        assert q == bq("1/2 + 1/2Ii")

    def test_normalize_idempotent_is_fixed(self, bq):
        alpha, q = normalize_to_idempotent(bq("1/2 + 1/2Ii"))
        assert alpha == ComplexScalar.one()
        assert q == bq("1/2 + 1/2Ii")

    def test_normalize_to_idempotent_domain(self, bq):
        with pytest.raises(PureInputError):
            normalize_to_idempotent(bq("i + Ij"))
        with pytest.raises(NotZeroDivisorError):
            normalize_to_idempotent(bq("2 + i"))
        with pytest.raises(ZeroInputError):
            normalize_to_idempotent(bq("0"))

    def test_normalize_sqrt_eight(self, sqrt_eight):
        tol = Tolerance(1e-12, Backend.APPROX)
        alpha, q = normalize_to_idempotent(sqrt_eight, tol)
        assert alpha.re == pytest.approx(2 * math.sqrt(8))
        assert is_close(square(q), q, tol)
        assert q.W.re == pytest.approx(0.5)

    def test_square_scaling(self, norms_four):
        alpha = square_scaling_check(norms_four)
        assert alpha == ComplexScalar.of(2, 2)
        assert square(norms_four) == scalar_multiply(alpha, norms_four)

    def test_normalize_nilpotent(self, nilpotent):
        form = normalize_nilpotent(nilpotent)
        assert form.mu == I_Q and form.nu == J_Q
        assert form.common_norm == 1
        assert form.recompose() == nilpotent

    def test_normalize_scaled_nilpotent(self, bq):
        p = bq("2i + 2Ij")
        form = normalize_nilpotent(p)
        assert form.common_norm == 4
        assert form.scale == 2
        assert form.mu == I_Q
        assert form.recompose() == p

    def test_normalize_nilpotent_irrational(self, bq):
        p = bq("(1+1I)i + (1-1I)j")
        assert is_nilpotent(p)
        with pytest.raises(IrrationalAxisError):
            normalize_nilpotent(p)
        approx = parse_biquaternion("(1+1I)i + (1-1I)j", Backend.APPROX)
        form = normalize_nilpotent(approx)
        assert form.scale == pytest.approx(math.sqrt(2))
        assert is_close(form.recompose(), approx)

    def test_normalize_nilpotent_domain(self, bq):
        with pytest.raises(NotNilpotentError):
            normalize_nilpotent(bq("1"))
        with pytest.raises(ZeroInputError):
            normalize_nilpotent(bq("0"))


class TestDecomposition:
    def test_non_pure(self, bq):
        d = decompose_zero_divisor(bq("1 + Ii"))
        assert d.kind is DecompositionKind.NON_PURE
        assert d.scale == ComplexScalar.of(2)
        assert d.idempotent == bq("1/2 + 1/2Ii")
        assert d.recompose() == bq("1 + Ii")

    def test_pure(self, nilpotent):
        d = decompose_zero_divisor(nilpotent)
        assert d.kind is DecompositionKind.PURE
        assert d.recompose() == nilpotent

    def test_domain(self, bq):
        with pytest.raises(NotZeroDivisorError):
            decompose_zero_divisor(bq("2 + i"))
        with pytest.raises(ZeroInputError):
            decompose_zero_divisor(bq("0"))
