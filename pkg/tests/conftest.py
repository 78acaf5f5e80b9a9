import os
import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gmtkit.exact_core import MultiPoly, monomials_of_degree

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)


@st.composite
def polys(draw, nvars=2, max_exp=3, max_terms=5):
    mons = st.tuples(*[st.integers(0, max_exp)] * nvars)
    terms = draw(st.dictionaries(mons, rationals, max_size=max_terms))
    return MultiPoly(nvars, terms)


@st.composite
def homogeneous_polys(draw, nvars, deg, max_terms=6):
    pool = monomials_of_degree(nvars, deg)
    chosen = draw(st.lists(st.sampled_from(pool), max_size=max_terms, unique=True))
    return MultiPoly(nvars, {m: draw(rationals) for m in chosen})


def random_homogeneous(rng: random.Random, nvars, deg, nterms=6):
    if deg < 0:
        return MultiPoly.zero(nvars)
    pool = monomials_of_degree(nvars, deg)
    picks = rng.sample(pool, min(nterms, len(pool)))
    return MultiPoly(nvars, {m: Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for m in picks})


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("GMTKIT_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        title, ok = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
