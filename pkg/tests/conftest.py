"""Shared test helpers."""

from __future__ import annotations

import math

import pytest

SQRT2 = math.sqrt(2.0)

# Constrained-square optimum, frozen from two independent solves of the
# stationarity cubic (bisection root and the closed radical form).
B_STAR = 0.24809127016999159
A_STAR = 0.54368901269207636
E_STAR = 0.13488449773624590
T_STAR = 0.49808761294574631          # sqrt(B_STAR)
YE_TRUNCATED = 0.99905705940525747    # y_e at the 3-d.p. truncated optimum
E_ROUGH = 2.0 / 17.0                  # e(0.5, 0.25) by direct evaluation
A_CR_CLOSED = (1.0 + SQRT2) / 2.0


def approx(value: float, *, abs: float) -> object:
    return pytest.approx(value, abs=abs)
