"""
End-to-end checks: worked examples reproduced exactly, then the seeded property suites
"""
import time

import pytest

from bqalg.algebra.backends import Backend, ComplexScalar, Tolerance
from bqalg.algebra.biquaternion import (
    Biquaternion,
    pair_view,
    scalar_axis_form,
    scale_of,
    semi_norm,
    square,
    subtract,
)
from bqalg.algebra.quaternion import inner_product, quaternion_norm
from bqalg.algebra.structure import normalize_to_idempotent
from bqalg.algebra.verification import TheoremId, verify_theorem
from bqalg.cli import main
from bqalg.errors import AxisUndefinedError

CLI_THEOREMS = [
    TheoremId.CRITERION_EQUIVALENCE,
    TheoremId.IDEMPOTENTS_ARE_DIVISORS,
    TheoremId.NILPOTENTS_ARE_PURE,
    TheoremId.PURE_DIVISORS_SQUARE_ZERO,
    TheoremId.DECOMPOSITION_ROUNDTRIP,
    TheoremId.SQUARE_SCALING,
]


class TestWorkedExamples:
    def test_equal_part_norms(self, norms_four):
        assert semi_norm(norms_four) == ComplexScalar.zero()
        view = pair_view(norms_four)
        assert quaternion_norm(view.real_part) == 4
        assert quaternion_norm(view.imag_part) == 4
        assert inner_product(view.real_part, view.imag_part) == 0

    def test_sqrt_eight(self, sqrt_eight):
        tol = Tolerance(1e-12, Backend.APPROX)
        n = semi_norm(sqrt_eight)
        assert n.magnitude() <= 1e-12 * scale_of(sqrt_eight)
        view = pair_view(sqrt_eight)
        assert quaternion_norm(view.real_part) == pytest.approx(8, abs=1e-12)
        assert quaternion_norm(view.imag_part) == pytest.approx(8, abs=1e-12)
        _, q = normalize_to_idempotent(sqrt_eight, tol)
        residual = subtract(square(q), q)
        assert all(abs(c.re) <= 1e-12 and abs(c.im) <= 1e-12 for c in residual.components())

    def test_idempotent(self, bq):
        q = bq("1/2 + 1/2Ii")
        assert square(q) == q

    def test_nilpotent(self, nilpotent):
        assert square(nilpotent) == Biquaternion.zero()
        with pytest.raises(AxisUndefinedError):
            scalar_axis_form(nilpotent)


@pytest.mark.slow
class TestSuites:
    @pytest.mark.parametrize(
        "theorem",
        [
            TheoremId.IDEMPOTENTS_ARE_DIVISORS,
            TheoremId.NILPOTENTS_ARE_PURE,
            TheoremId.DECOMPOSITION_ROUNDTRIP,
        ],
    )
    def test_ten_thousand_exact_trials(self, theorem):
        result = verify_theorem(theorem, trials=10_000, seed=1)
        assert result.failures == 0

    def test_criterion_equivalence_within_budget(self):
        result = verify_theorem(TheoremId.CRITERION_EQUIVALENCE, trials=10_000, seed=1, workers=1)
        assert result.failures == 0
        assert result.elapsed < 5.0

    def test_both_decomposition_branches_at_full_count(self):
        # every trial draws a non-pure divisor: p^2 = 2W p, then decompose and recompose
        non_pure = verify_theorem(TheoremId.SQUARE_SCALING, trials=10_000, seed=1)
        # every trial draws a pure divisor: Pure branch, recompose, p^2 = 0
        pure = verify_theorem(TheoremId.PURE_DIVISORS_SQUARE_ZERO, trials=10_000, seed=1)
        assert non_pure.failures == 0
        assert pure.failures == 0

    def test_ring_laws(self):
        assert verify_theorem(TheoremId.RING_LAWS, trials=1_000, seed=1).failures == 0


class TestCli:
    def test_generate_is_byte_identical(self, capsys):
        argv = ["generate", "zero-divisor", "--seed", "42", "--count", "100"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first

    @pytest.mark.parametrize("theorem", CLI_THEOREMS)
    def test_verify_commands_pass(self, capsys, theorem):
        code = main(["verify", theorem.value, "--trials", "200", "--seed", "1", "--workers", "1"])
        assert code == 0
        assert '"failures":0' in capsys.readouterr().out

    @pytest.mark.slow
    def test_verify_commands_within_budget(self, capsys):
        started = time.perf_counter()
        for theorem in CLI_THEOREMS:
            # default trial count
            assert main(["verify", theorem.value, "--seed", "1", "--workers", "1", "--no-timing"]) == 0
            assert '"failures":0' in capsys.readouterr().out
        assert time.perf_counter() - started < 10.0
