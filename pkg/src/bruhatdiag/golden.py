"""Closed-form fixtures for low-dimensional spaces, checked against the
determinant route on seeded random payloads.

Two layout-driven details are easy to get wrong and worth stating:

* quaternionic projective line: each coordinate occupies two slots of the
  layout, so the size-two minors double and the linear terms of the middle
  entries carry coefficient 2;
* odd-dimensional real projective space: with the central torus slot
  holding ``diag(is, -is)``, the two unimodular middle entries come out in
  the order ``(1 - is)/(1 + is)`` then ``(1 + is)/(1 - is)``, as the
  piecewise determinant list forces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .bruhat import diagonal_via_cayley
from .spaces import Coordinates, SpaceSpec, aiii, build_tangent, cii, diii

GOLDEN_RADIUS = 0.5
GOLDEN_DRAWS = 50
GOLDEN_TOL = 1e-9


def _disc(rng: np.random.Generator, shape, radius: float) -> np.ndarray:
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, size=shape))
    phi = rng.uniform(0.0, 2.0 * np.pi, size=shape)
    return r * np.exp(1j * phi)


def cpn_closed_form(zs) -> np.ndarray:
    """Diagonal for the complex projective space in graph coordinates.

    Entry k is a ratio of signed square-norm sums; the first entry at
    n = 1 is the height function in stereographic coordinates.
    """
    zs = np.asarray(zs, dtype=complex)
    n = zs.size
    a = np.abs(zs) ** 2
    F = np.empty(n + 2, dtype=float)
    F[0] = 1.0 + a.sum()
    for k in range(1, n + 2):
        F[k] = 1.0 + a[: k - 1].sum() - a[k - 1:].sum()
    return (F[1:] / F[:-1]).astype(complex)


def so6u3_closed_form(z11, z12, z21) -> np.ndarray:
    """Six-entry diagonal for the n = 3 orthogonal case."""
    a, b, c = abs(z11) ** 2, abs(z21) ** 2, abs(z12) ** 2
    d1 = (1 - a + b - c) / (1 + a + b + c)
    d2 = ((1 + a + b - c) * (1 - a - b - c)) / ((1 - a + b - c) * (1 + a + b + c))
    d3 = (1 - a - b - c) / (1 + a + b - c)
    return np.array([d1, d2, d3, 1 / d3, 1 / d2, 1 / d1], dtype=complex)


def hp1_closed_form(z1, z2) -> np.ndarray:
    """Diagonal for the quaternionic projective line."""
    a, b = abs(z1) ** 2, abs(z2) ** 2
    d1 = (1 - a - b) / (1 + a + b)
    d2 = (1 + 2 * a - 2 * b + (a + b) ** 2) / (1 - (a + b) ** 2)
    return np.array([d1, d2, 1 / d2, 1 / d1], dtype=complex)


def rp_even_closed_form(zs) -> np.ndarray:
    """Diagonal for even real projective space from its piecewise determinants.

    The layout doubles each coordinate row/column, so every square norm
    appears with coefficient 2 and the flipped determinants are piecewise
    constant-plus-partial-sums.
    """
    zs = np.asarray(zs, dtype=complex)
    n = zs.size
    a = np.abs(zs) ** 2
    F = np.empty(2 * n + 2, dtype=float)
    F[0] = 1.0 + 2.0 * a.sum()
    for k in range(1, 2 * n + 2):
        if k <= n:
            F[k] = 1.0 + 2.0 * a[: n - k].sum()
        elif k == n + 1:
            F[k] = 1.0
        else:
            F[k] = 1.0 + 2.0 * a[: k - (n + 1)].sum()
    return (F[1:] / F[:-1]).astype(complex)


def rp_odd_closed_form(zs, s: float) -> np.ndarray:
    """Diagonal for odd real projective space.

    The doubled coordinates carry coefficient 4; the central torus
    parameter s produces the unimodular phase pair in the middle.
    """
    zs = np.asarray(zs, dtype=complex)
    n = zs.size
    a = np.abs(zs) ** 2
    F = np.empty(2 * n + 3, dtype=complex)
    F[0] = 1.0 + s * s + 4.0 * a.sum()
    for k in range(1, 2 * n + 3):
        if k < n:
            F[k] = 1.0 + s * s + 4.0 * a[: n - k].sum()
        elif k == n:
            F[k] = 1.0 + s * s
        elif k == n + 1:
            F[k] = (1.0 - 1j * s) ** 2
        elif k == n + 2:
            F[k] = 1.0 + s * s
        else:
            F[k] = 1.0 + s * s + 4.0 * a[: k - (n + 2)].sum()
    return F[1:] / F[:-1]


@dataclass
class GoldenResult:
    suite: str
    draws: int
    max_deviation: float
    tolerance: float

    @property
    def ok(self) -> bool:
        return self.max_deviation <= self.tolerance

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "draws": self.draws,
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
            "ok": self.ok,
        }


def _rel(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b) / np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))))


def _run_cpn(rng, draws, radius, n_values=(1, 2, 3, 4)) -> float:
    worst = 0.0
    for n in n_values:
        spec = aiii(1, n)
        for _ in range(draws):
            zs = _disc(rng, (n,), radius)
            X = build_tangent(spec, Coordinates(family="AIII", Z=zs.reshape(1, n)))
            worst = max(worst, _rel(diagonal_via_cayley(X).entries, cpn_closed_form(zs)))
    return worst


def _run_so6u3(rng, draws, radius) -> float:
    spec = diii(3)
    worst = 0.0
    for _ in range(draws):
        z11, z12, z21 = _disc(rng, (3,), radius)
        Z = np.array([[z11, z12, 0.0], [z21, 0.0, -z12], [0.0, -z21, -z11]])
        X = build_tangent(spec, Coordinates(family="DIII", Z=Z))
        worst = max(worst, _rel(diagonal_via_cayley(X).entries,
                                so6u3_closed_form(z11, z12, z21)))
    return worst


def _run_hp1(rng, draws, radius) -> float:
    spec = cii(1, 1)
    worst = 0.0
    for _ in range(draws):
        z1, z2 = _disc(rng, (2,), radius)
        coords = Coordinates(family="CII", Z1=np.array([[z1]]), Z2=np.array([[z2]]))
        X = build_tangent(spec, coords)
        worst = max(worst, _rel(diagonal_via_cayley(X).entries, hp1_closed_form(z1, z2)))
    return worst


def _rp_even_tangent(zs) -> tuple[SpaceSpec, np.ndarray]:
    zs = np.asarray(zs, dtype=complex)
    n = zs.size
    spec = SpaceSpec("BDI_even", p=2 * n, q=1)
    Z = zs[::-1].reshape(n, 1)  # layout stores the coordinates bottom-up
    return spec, build_tangent(spec, Coordinates(family="BDI_even", Z=Z))


def _rp_odd_tangent(zs, s: float) -> tuple[SpaceSpec, np.ndarray]:
    zs = np.asarray(zs, dtype=complex)
    n = zs.size
    spec = SpaceSpec("BDI_oddodd", p=2 * n + 1, q=1)
    coords = Coordinates(
        family="BDI_oddodd",
        Z1=np.zeros((n, 0)), Z2=np.zeros((n, 0)),
        w1=zs[::-1].copy(), w2=np.zeros(0), s=float(s),
    )
    return spec, build_tangent(spec, coords)


def _run_rp_even(rng, draws, radius, n_values=(1, 2, 3)) -> float:
    worst = 0.0
    for n in n_values:
        for _ in range(draws):
            zs = _disc(rng, (n,), radius)
            _, X = _rp_even_tangent(zs)
            worst = max(worst, _rel(diagonal_via_cayley(X).entries, rp_even_closed_form(zs)))
    return worst


def _run_rp6(rng, draws, radius) -> float:
    return _run_rp_even(rng, draws, radius, n_values=(3,))


def _run_rp_odd(rng, draws, radius, n_values=(1, 2, 3)) -> float:
    worst = 0.0
    for n in n_values:
        for _ in range(draws):
            zs = _disc(rng, (n,), radius)
            s = float(rng.uniform(-radius, radius))
            _, X = _rp_odd_tangent(zs, s)
            worst = max(worst, _rel(diagonal_via_cayley(X).entries, rp_odd_closed_form(zs, s)))
    return worst


def _run_rp5(rng, draws, radius) -> float:
    return _run_rp_odd(rng, draws, radius, n_values=(2,))


_SUITES: dict[str, Callable] = {
    "cpn": _run_cpn,
    "so6u3": _run_so6u3,
    "hp1": _run_hp1,
    "rp_even": _run_rp_even,
    "rp_odd": _run_rp_odd,
    "rp6": _run_rp6,
    "rp5": _run_rp5,
}

#: Per-suite tolerance; the projective-space ratio formula is benign enough
#: to hold an extra digit.
_SUITE_TOL = {name: GOLDEN_TOL for name in _SUITES}
_SUITE_TOL["cpn"] = 1e-10


def suite_names() -> tuple[str, ...]:
    return tuple(sorted(_SUITES))


def run_suite(name: str, draws: int = GOLDEN_DRAWS, seed: int = 0,
              radius: float = GOLDEN_RADIUS,
              tol: float | None = None) -> GoldenResult:
    """Compare one suite's closed form against the determinant route."""
    if name not in _SUITES:
        raise ValueError(f"unknown golden suite {name!r}; choose from {suite_names()}")
    rng = np.random.default_rng(seed)
    worst = _SUITES[name](rng, draws, radius)
    return GoldenResult(
        suite=name, draws=draws, max_deviation=worst,
        tolerance=_SUITE_TOL[name] if tol is None else tol,
    )


def run_all(draws: int = GOLDEN_DRAWS, seed: int = 0,
            radius: float = GOLDEN_RADIUS) -> list[GoldenResult]:
    return [run_suite(name, draws=draws, seed=seed, radius=radius)
            for name in suite_names()]
