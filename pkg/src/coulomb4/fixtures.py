"""Published four-decimal parameter sets and their rounding boxes.

``G*`` sets close the ground-state constraint, ``E*`` sets the first-excited
one. Each value is rounded to four decimals, so the exact closure lies within
``ROUNDING`` of every printed ``alpha3``/``alpha4``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import PotentialParams
from .ordinary_qes import solve_alpha2_ground, solve_constraint_n1

ROUNDING = 5e-5


@dataclass(frozen=True)
class ReferenceSet:
    name: str
    n: int
    params: PotentialParams

    def closed_alpha2(self) -> float:
        """``alpha2`` closing the constraint exactly at the printed triple.

        For ``n = 1`` this is the smaller root, whose polynomial factor has a
        node on the half-line.
        """
        p = self.params
        if self.n == 0:
            return solve_alpha2_ground(p.alpha1, p.alpha3, p.alpha4)
        return solve_constraint_n1(p.alpha1, p.alpha3, p.alpha4)[0]

    def closed_params(self) -> PotentialParams:
        return self.params.with_alpha2(self.closed_alpha2())

    def alpha2_rounding_range(self, samples: int = 21) -> tuple[float, float]:
        """Span of the exact ``alpha2`` as ``alpha3`` and ``alpha4`` move within the rounding box."""
        p = self.params
        d = np.linspace(-ROUNDING, ROUNDING, samples)
        vals = []
        for u, v in itertools.product(d, d):
            a3, a4 = p.alpha3 + u, p.alpha4 + v
            if self.n == 0:
                vals.append(solve_alpha2_ground(p.alpha1, a3, a4))
            else:
                vals.append(solve_constraint_n1(p.alpha1, a3, a4)[0])
        return min(vals), max(vals)


def _ref(name: str, n: int, a1: float, a2: float, a3: float, a4: float) -> ReferenceSet:
    return ReferenceSet(name, n, PotentialParams(a1, a2, a3, a4))


REFERENCE_SETS: dict[str, ReferenceSet] = {
    r.name: r
    for r in (
        _ref("G1", 0, -0.1, -0.0776, -0.0097, 0.0053),
        _ref("G2", 0, -0.1, -0.0603, -0.0070, 0.0037),
        _ref("G3", 0, -0.1, -0.0527, -0.0102, 0.0053),
        _ref("E1", 1, -0.2, -0.0301, -0.0002, 0.0029),
        _ref("E2", 1, -0.2, -0.0141, -0.0003, 0.0569),
        _ref("E3", 1, -0.2, -0.0880, -0.0075, 0.0438),
    )
}
