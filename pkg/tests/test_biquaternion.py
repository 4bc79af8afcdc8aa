from fractions import Fraction

import pytest
from hypothesis import assume, given

from bqalg.algebra.backends import Backend, ComplexScalar
from bqalg.algebra.biquaternion import (
    Biquaternion,
    add,
    annihilator,
    assemble_pair,
    complex_conjugate,
    conjugate,
    inverse,
    is_close,
    is_zero,
    magnitude,
    multiply,
    pair_view,
    scalar_axis_form,
    scalar_multiply,
    scale_of,
    semi_norm,
    semi_norm_parts,
    square,
    subtract,
    to_backend,
    vector_square_sum,
)
from bqalg.algebra.quaternion import Quaternion
from bqalg.algebra.text import parse_biquaternion
from bqalg.errors import (
    AxisUndefinedError,
    BackendMismatchError,
    IrrationalAxisError,
    NonFiniteValueError,
    NotZeroDivisorError,
    ZeroDivisorError,
    ZeroInputError,
    ZeroVectorPartError,
)
from tests.strategies import approx_biquaternions, biquaternions

ZERO = Biquaternion.zero()
ONE = Biquaternion.one()
I_UNIT = Biquaternion.imaginary_unit()


class TestArithmetic:
    def test_basis_products(self, bq):
        assert bq("i") * bq("j") == bq("k")
        assert bq("j") * bq("i") == bq("-k")
        assert bq("i") * bq("i") == bq("-1")
        assert I_UNIT * I_UNIT == bq("-1")

    def test_imaginary_unit_commutes(self, bq):
        for unit in ("i", "j", "k"):
            assert I_UNIT * bq(unit) == bq(unit) * I_UNIT == bq(f"I{unit}")

    def test_add_subtract(self, bq):
        assert add(bq("1 + i"), bq("Ij")) == bq("1 + i + Ij")
        assert subtract(bq("1 + i"), bq("i")) == ONE
        assert bq("2i") - bq("i") == bq("i")
        assert -bq("1 + Ik") == bq("-1 - Ik")

    def test_scalar_multiply(self, bq):
        assert scalar_multiply(ComplexScalar.of(0, 1), bq("1 + i")) == bq("I + Ii")

    def test_mixed_backends(self, bq):
        with pytest.raises(BackendMismatchError):
            multiply(bq("1"), bq("1.0"))

    def test_conjugates(self, bq):
        q = bq("(1+2I) + (3+4I)i + 5j + 6Ik")
        assert conjugate(q) == bq("(1+2I) - (3+4I)i - 5j - 6Ik")
        assert complex_conjugate(q) == bq("(1-2I) + (3-4I)i + 5j - 6Ik")

    def test_semi_norm_example(self, norms_four):
        assert semi_norm(norms_four) == ComplexScalar.zero()
        assert not norms_four.is_exact_zero()

    def test_vector_square_sum(self, nilpotent):
        assert vector_square_sum(nilpotent) == ComplexScalar.zero()

    def test_magnitude_and_scale(self, bq):
        assert magnitude(bq("(1-2I) + 3i")) == 6
        assert scale_of(bq("1/4")) == 1.0
        assert scale_of(bq("(1-2I) + 3i")) == 6.0


class TestRepresentations:
    def test_pair_view(self, norms_four):
        view = pair_view(norms_four)
        assert view.real_part == Quaternion.of(1, 1, -1, -1)
        assert view.imag_part == Quaternion.of(1, -1, -1, 1)
        assert assemble_pair(view) == norms_four

    def test_from_quaternion(self):
        q = Biquaternion.from_quaternion(Quaternion.of(1, 2, 3, 4))
        assert q.imag_part() == Quaternion.zero()

    def test_scalar_axis_form(self, bq):
        form = scalar_axis_form(bq("1 + 3i + 4j"))
        assert form.A == ComplexScalar.one()
        assert form.B == ComplexScalar.of(5)
        assert form.axis == bq("3/5i + 4/5j")
        assert form.recompose() == bq("1 + 3i + 4j")

    def test_scalar_axis_form_complex_modulus(self, bq):
        # X^2 = -1: B = I, axis = i
        form = scalar_axis_form(bq("2 + Ii"))
        assert form.B == ComplexScalar.of(0, 1)
        assert form.axis == bq("i")
        assert square(form.axis) == bq("-1")

    def test_axis_undefined_for_nilpotent(self, nilpotent):
        with pytest.raises(AxisUndefinedError):
            scalar_axis_form(nilpotent)

    def test_zero_vector_part(self, bq):
        with pytest.raises(ZeroVectorPartError):
            scalar_axis_form(bq("3 + I"))
        form = scalar_axis_form(bq("3 + I"), allow_zero_vector=True)
        assert form.axis is None
        assert form.recompose() == bq("3 + I")

    def test_irrational_axis_on_exact_backend(self, bq):
        with pytest.raises(IrrationalAxisError):
            scalar_axis_form(bq("i + j"))

    def test_approx_axis(self, bq, approx_tol):
        q = bq("1.0 + i + j")
        form = scalar_axis_form(q, approx_tol)
        assert form.B.re == pytest.approx(2 ** 0.5)
        assert is_close(form.recompose(), q, approx_tol)

    def test_to_backend(self, bq):
        q = bq("1/2 + 3/4Ii")
        approx = to_backend(q, Backend.APPROX)
        assert approx.backend is Backend.APPROX
        assert to_backend(approx, Backend.EXACT) == q


class TestInverse:
    def test_inverse(self, bq):
        q = bq("2 + i")
        assert inverse(q) * q == ONE
        assert q * inverse(q) == ONE

    def test_inverse_with_small_semi_norm(self):
        # semi-norm 2.5e-5 is far above epsilon * scale_of(q) = 2e-7
        q = parse_biquaternion("100 + 100Ii + 0.005j")
        inv = inverse(q)
        assert inv.W.re == pytest.approx(100 / 0.005 ** 2, rel=1e-9)
        assert inv.Y.re == pytest.approx(-0.005 / 0.005 ** 2, rel=1e-9)

    def test_divisor_of_zero_has_no_inverse(self, bq):
        with pytest.raises(ZeroDivisorError):
            inverse(bq("1 + Ii"))

    def test_annihilator(self, norms_four):
        a = annihilator(norms_four)
        assert not a.is_exact_zero()
        assert norms_four * a == ZERO
        assert a * norms_four == ZERO

    def test_annihilator_domain(self, bq):
        with pytest.raises(ZeroInputError):
            annihilator(ZERO)
        with pytest.raises(NotZeroDivisorError):
            annihilator(bq("2 + i"))


class TestRingLaws:
    @given(a=biquaternions, b=biquaternions, c=biquaternions)
    def test_associativity(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(a=biquaternions, b=biquaternions, c=biquaternions)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c

    @given(a=biquaternions)
    def test_identities(self, a):
        assert a * ONE == ONE * a == a
        assert a + ZERO == a
        assert a + (-a) == ZERO

    @given(a=biquaternions, b=biquaternions)
    def test_conjugate_is_anti_automorphism(self, a, b):
        assert conjugate(a * b) == conjugate(b) * conjugate(a)

    @given(a=biquaternions, b=biquaternions)
    def test_complex_conjugate_is_automorphism(self, a, b):
        assert complex_conjugate(a * b) == complex_conjugate(a) * complex_conjugate(b)

    @given(a=biquaternions)
    def test_semi_norm_is_product_with_conjugate(self, a):
        n = Biquaternion.of(semi_norm(a))
        assert a * conjugate(a) == n
        assert conjugate(a) * a == n

    @given(a=biquaternions, b=biquaternions)
    def test_semi_norm_is_multiplicative(self, a, b):
        assert semi_norm(a * b) == semi_norm(a) * semi_norm(b)

    @given(a=biquaternions)
    def test_semi_norm_parts(self, a):
        real, imag = semi_norm_parts(a)
        assert semi_norm(a) == ComplexScalar(real, imag)

    @given(a=biquaternions)
    def test_inverse_when_semi_norm_nonzero(self, a):
        assume(not semi_norm(a).is_exact_zero())
        assert a * inverse(a) == ONE

    @given(a=approx_biquaternions, b=approx_biquaternions)
    def test_approx_conjugation_within_tolerance(self, a, b):
        scale = scale_of(a) * scale_of(b)
        assert is_close(conjugate(a * b), conjugate(b) * conjugate(a), scale=scale)

    def test_is_zero_scaled(self, approx_tol):
        q = Biquaternion.of(ComplexScalar(1e-8, 0.0), backend=Backend.APPROX)
        assert not is_zero(q, approx_tol)
        assert is_zero(q, approx_tol, scale=100.0)

    def test_fraction_components_survive(self):
        q = Biquaternion.of((Fraction(1, 3), Fraction(2, 3)))
        assert (q * q).W == ComplexScalar.of(Fraction(1, 9) - Fraction(4, 9), Fraction(4, 9))


class TestExactArithmetic:
    @given(a=biquaternions, b=biquaternions)
    def test_product_matches_complex_hamilton_formula(self, a, b):
        expected = Biquaternion(
            a.W * b.W - a.X * b.X - a.Y * b.Y - a.Z * b.Z,
            a.W * b.X + a.X * b.W + a.Y * b.Z - a.Z * b.Y,
            a.W * b.Y - a.X * b.Z + a.Y * b.W + a.Z * b.X,
            a.W * b.Z + a.X * b.Y - a.Y * b.X + a.Z * b.W,
        )
        assert multiply(a, b) == expected

    @given(a=biquaternions)
    def test_semi_norm_matches_sum_of_squares(self, a):
        assert semi_norm(a) == a.W.square() + a.X.square() + a.Y.square() + a.Z.square()

    @given(a=biquaternions, b=biquaternions)
    def test_approx_product_follows_exact_product(self, a, b):
        approx = multiply(to_backend(a, Backend.APPROX), to_backend(b, Backend.APPROX))
        assert is_close(approx, to_backend(multiply(a, b), Backend.APPROX), scale=scale_of(a) * scale_of(b))


class TestNonFinite:
    def test_overflowing_scale(self):
        q = Biquaternion.of(1e308, 1e308, backend=Backend.APPROX)
        with pytest.raises(NonFiniteValueError):
            scale_of(q)

    def test_overflowing_semi_norm(self):
        q = parse_biquaternion("1.0e200i")
        with pytest.raises(NonFiniteValueError):
            semi_norm(q)
        with pytest.raises(NonFiniteValueError):
            semi_norm_parts(q)

    def test_overflowing_inverse(self):
        with pytest.raises(NonFiniteValueError):
            inverse(parse_biquaternion("1.0e200 + 1.0e200i"))
