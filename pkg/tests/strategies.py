"""
Hypothesis strategies for algebra values
"""
from hypothesis import strategies as st

from bqalg.algebra.backends import ComplexScalar
from bqalg.algebra.biquaternion import Biquaternion
from bqalg.algebra.quaternion import Quaternion

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
floats = st.floats(min_value=-50, max_value=50, allow_nan=False, allow_infinity=False)

complex_rationals = st.builds(ComplexScalar, rationals, rationals)
complex_floats = st.builds(ComplexScalar, floats, floats)

quaternions = st.builds(Quaternion, rationals, rationals, rationals, rationals)
pure_quaternions = st.builds(Quaternion, st.just(0), rationals, rationals, rationals)

biquaternions = st.builds(Biquaternion, complex_rationals, complex_rationals, complex_rationals, complex_rationals)
pure_biquaternions = st.builds(
    Biquaternion, st.just(ComplexScalar.zero()), complex_rationals, complex_rationals, complex_rationals
)
approx_biquaternions = st.builds(Biquaternion, complex_floats, complex_floats, complex_floats, complex_floats)
