import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monogenic12 import _kernels_py as py
from monogenic12 import kernels

ext = pytest.importorskip("monogenic12._kernels")

PRIMES = [2, 3, 5, 7, 13, 101, 65521, 2147483629]


@st.composite
def poly_and_prime(draw, max_len=14):
    p = draw(st.sampled_from(PRIMES))
    coeffs = draw(st.lists(st.integers(0, p - 1), max_size=max_len))
    return py.trim(coeffs), p


@st.composite
def two_polys(draw):
    (a, p) = draw(poly_and_prime())
    b = py.trim(draw(st.lists(st.integers(0, p - 1), max_size=14)))
    return a, b, p


@given(two_polys())
def test_mul_sub_agree(t):
    a, b, p = t
    assert ext.pmul(a, b, p) == py.pmul(a, b, p)
    assert ext.psub(a, b, p) == py.psub(a, b, p)


@given(two_polys())
def test_divmod_gcd_agree(t):
    a, b, p = t
    if not b:
        return
    assert ext.pdivmod(a, b, p) == py.pdivmod(a, b, p)
    assert ext.pgcd(a, b, p) == py.pgcd(a, b, p)
    q, r = py.pdivmod(a, b, p)
    assert py.trim(py.psub(a, py.pmul(q, b, p), p)) == r


@given(two_polys(), st.integers(0, 10**6))
def test_powmod_agrees(t, e):
    a, m, p = t
    if len(m) < 2:
        return
    assert ext.ppowmod(a, e, m, p) == py.ppowmod(a, e, m, p)


@given(poly_and_prime())
def test_ddf_agrees(t):
    f, p = t
    if len(f) < 2:
        return
    f = py.pmonic(f, p)
    g = py.pgcd(f, [(i * c) % p for i, c in enumerate(f)][1:], p)
    if len(g) > 1:  # ddf wants squarefree input
        return
    assert ext.ddf(f, p) == py.ddf(f, p)
    assert sum(len(g) - 1 for _, g in py.ddf(f, p)) == len(f) - 1


def test_large_modulus_routes_to_python():
    p = (1 << 61) - 1
    a, b = [3, 1, 4, 1, 5], [9, 2, 6]
    assert kernels.pmul(a, b, p) == py.pmul(a, b, p)


def test_backend_selection_env():
    code = "import monogenic12.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, MONOGENIC12_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    env.pop("MONOGENIC12_PURE_PYTHON")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "cython"


def test_pure_python_pipeline():
    env = dict(os.environ, MONOGENIC12_PURE_PYTHON="1")
    r = subprocess.run([sys.executable, "-m", "monogenic12", "verify", "--box", "4"], env=env, capture_output=True, text=True)
    assert r.returncode == 0, r.stdout + r.stderr
