import random

import pytest
from hypothesis import given, settings, strategies as st

from multjump import _pykernels, kernels, monomial
from multjump.newton import build_newton

from conftest import random_ideal

compiled = pytest.mark.skipif(kernels.BACKEND != "compiled", reason="compiled kernels not built")


def test_backend_names():
    assert kernels.BACKEND in ("compiled", "python")


def test_python_kernel_counts_cusp():
    counts = _pykernels.scaling_counts([[2, 3]], [6], [6, 4], 2, 1)
    assert counts[(5, 6)] == 1 and counts[(11, 6)] == 2 and counts[(2, 1)] == 1


@compiled
@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3]), st.fractions(min_value=1, max_value=5, max_denominator=7))
def test_backends_agree(seed, d, bound):
    P = build_newton(random_ideal(random.Random(seed), d))
    assert (monomial.jumping_spectrum(P, bound, backend="python").entries
            == monomial.jumping_spectrum(P, bound, backend="compiled").entries)
    assert (monomial.multiplier_ideal_generators(P, bound, backend="python")
            == monomial.multiplier_ideal_generators(P, bound, backend="compiled"))


@compiled
def test_overflow_guard():
    big = [[2**40, 3]]
    with pytest.raises(OverflowError):
        kernels.scaling_counts(big, [2**41], [2, 2], 2**30, 1, backend="compiled")
    # the default silently falls back to Python
    assert kernels.scaling_counts(big, [2**41], [2, 2], 1, 1) == _pykernels.scaling_counts(big, [2**41], [2, 2], 1, 1)
