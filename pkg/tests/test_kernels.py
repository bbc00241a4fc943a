"""Backend parity: the compiled kernels must match the pure-Python ones."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coverlab.kernels import BACKEND
from coverlab.kernels import pure


def _compiled():
    try:
        from coverlab.kernels import _fastcore

        return _fastcore
    except ImportError:
        return None


compiled = _compiled()
needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled kernels not built"
)


def test_backend_reports_something_sane():
    assert BACKEND in ("python", "c")


vec_lists = st.integers(1, 5).flatmap(
    lambda n: st.lists(
        st.tuples(*([st.integers(0, 6)] * n)), min_size=0, max_size=14
    )
)


@needs_compiled
@settings(max_examples=120, deadline=None)
@given(vec_lists)
def test_minimalize_parity(vecs):
    assert compiled.minimalize(vecs) == pure.minimalize(vecs)


@needs_compiled
@settings(max_examples=80, deadline=None)
@given(vec_lists, st.integers(0, 10**6))
def test_product_and_lcm_parity(vecs, seed):
    rng = random.Random(seed)
    if vecs:
        n = len(vecs[0])
        other = [
            tuple(rng.randint(0, 6) for _ in range(n))
            for _ in range(rng.randint(0, 10))
        ]
    else:
        other = []
    assert compiled.product_minimalize(vecs, other) == pure.product_minimalize(
        vecs, other
    )
    assert compiled.lcm_minimalize(vecs, other) == pure.lcm_minimalize(vecs, other)


def test_pure_minimalize_properties():
    vecs = [(2, 0), (0, 2), (1, 1), (2, 2), (3, 0)]
    got = pure.minimalize(vecs)
    assert got == [(0, 2), (1, 1), (2, 0)]
    # idempotent
    assert pure.minimalize(got) == got


def test_pure_handles_empty_and_zero():
    assert pure.minimalize([]) == []
    assert pure.minimalize([(0, 0), (1, 0)]) == [(0, 0)]
    assert pure.product_minimalize([], [(1,)]) == []
    assert pure.lcm_minimalize([(1, 0)], [(0, 1)]) == [(1, 1)]


@needs_compiled
def test_compiled_survives_large_values():
    # values big enough to matter but inside 64-bit range
    big = 2**40
    vecs = [(big, 0), (0, big)]
    assert compiled.product_minimalize(vecs, vecs) == pure.product_minimalize(
        vecs, vecs
    )


@needs_compiled
def test_compiled_rejects_overflow():
    big = 2**63 - 1
    with pytest.raises(OverflowError):
        compiled.product_minimalize([(big, 0)], [(big, 0)])


def test_dispatch_env_var():
    import os
    import subprocess
    import sys

    code = "from coverlab.kernels import BACKEND; print(BACKEND)"
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={**os.environ, "COVERLAB_KERNEL": "py"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
    bad = subprocess.run(
        [sys.executable, "-c", code],
        env={**os.environ, "COVERLAB_KERNEL": "nonsense"},
        capture_output=True,
        text=True,
    )
    assert bad.returncode != 0
