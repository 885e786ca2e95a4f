# Copyright 2026 The erwmoments Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python front end to the erwmoments C++ core.

alpha and beta may be given as ``fractions.Fraction``, ``int`` or strings such
as ``"1/4"``. Floats are refused: 0.1 is not 1/10, and the regime boundaries
are decided by exact comparison.
"""

from fractions import Fraction

from . import _core
from ._core import ContractViolation, DomainError, ResourceLimitError

__version__ = _core.__version__

__all__ = [
    "ContractViolation",
    "DomainError",
    "ResourceLimitError",
    "berry_esseen_shape",
    "brute_force_moment",
    "crossover_scan",
    "deviation_series",
    "exact_moments",
    "first_return_censored_means",
    "predict_rate",
    "second_moment_closed_form",
    "simulate",
    "variance_sums",
]


def _rat(x):
    if isinstance(x, float):
        raise TypeError("pass alpha/beta as Fraction, int or 'p/q' string, not float")
    if isinstance(x, (Fraction, int)):
        f = Fraction(x)
        return f"{f.numerator}/{f.denominator}"
    return str(x)


def exact_moments(alpha, beta, n, max_order=4):
    """{k: Fraction(E[S_n^k])} for k = 1..max_order."""
    raw = _core.exact_moments(_rat(alpha), _rat(beta), n, max_order)
    return {k: Fraction(v) for k, v in raw.items()}


def brute_force_moment(alpha, beta, n, k):
    return Fraction(_core.brute_force_moment(_rat(alpha), _rat(beta), n, k))


def second_moment_closed_form(alpha, n):
    return _core.second_moment_closed_form(_rat(alpha), n)


def deviation_series(alpha, beta, order, n_max=10**6, points_per_decade=40):
    """(grid, values, normalization) on a geometric grid up to n_max."""
    return _core.deviation_series(_rat(alpha), _rat(beta), order, n_max, points_per_decade)


def predict_rate(alpha, beta, k):
    return _core.predict_rate(_rat(alpha), _rat(beta), k)


def crossover_scan(alphas=(), orders=(), n_max=10**6, threads=1):
    return _core.crossover_scan([_rat(a) for a in alphas], list(orders), n_max, threads)


def simulate(alpha, beta, n, replicas, seed, dynamics="conditional", checkpoints=(), threads=1):
    return _core.simulate(_rat(alpha), _rat(beta), n, replicas, seed, dynamics, list(checkpoints), threads)


def first_return_censored_means(alpha, beta, horizons, replicas, seed, threads=1):
    return _core.first_return_censored_means(_rat(alpha), _rat(beta), list(horizons), replicas, seed, threads)


def berry_esseen_shape(alpha, n):
    return _core.berry_esseen_shape(_rat(alpha), n)


def variance_sums(alpha, n):
    """(s_n^2, sigma_n^2) by direct summation."""
    return _core.variance_sums(_rat(alpha), n)
