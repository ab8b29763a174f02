# tests/conftest.py
from __future__ import annotations

import numpy as np
import pytest

from superal.algebra.graded_core import GradedDim, SuperAlgebra, gl_basis
from superal.algebra.osp_construct import osp_basis


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


@pytest.fixture(scope="session")
def gl12():
    return gl_basis(1, 2)


@pytest.fixture(scope="session")
def osp2():
    """osp(1,2): 3 even + 2 odd basis matrices of size 3x3."""
    return osp_basis(1)


@pytest.fixture(scope="session")
def faulty_osp():
    """
    An 'osp(1,2)' whose odd part was widened to the full odd block of gl(1,2).
    A_6 does not vanish on it, so verification must come back falsified.
    """
    base = gl_basis(1, 2)
    return SuperAlgebra("osp(1,2)+fault", GradedDim(1, 2), base.basis)


@pytest.fixture(autouse=True)
def _no_metrics(monkeypatch):
    monkeypatch.delenv("METRICS_JSON", raising=False)
