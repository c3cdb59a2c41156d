"""Wigner rotations induced on the foliation vector n (and, for comparison,
on momentum), plus the induced transformation of parametrized packet states.

D(Lambda, n) = L(n)^{-1} Lambda L(Lambda^{-1} n) is an SU(2) element; here n
is the *transformed* fiber label, so a state at n_old picks up
D(Lambda, Lambda n_old) = L(Lambda n_old)^{-1} Lambda L(n_old) acting on its
spin coefficient column.  With that orientation successive transformations
compose as a single one (cocycle identity, see wigner_d docstring).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import minkowski, sl2c

SU2_TOL = 1e-10


def check_su2(d, tol=SU2_TOL):
    d = np.asarray(d, dtype=complex)
    dev_u = np.max(np.abs(d.conj().T @ d - np.eye(2)))
    dev_det = abs(np.linalg.det(d) - 1.0)
    if dev_u > tol or dev_det > tol:
        raise ValueError(f"not SU(2): unitarity dev {dev_u:.3e}, det dev {dev_det:.3e}")
    return d


def wigner_d(a, n):
    """Little-group rotation L(n)^{-1} A L(Lambda^{-1} n) for unit timelike n.

    Satisfies the cocycle D(A1 A2, n) = D(A1, n) D(A2, Lambda1^{-1} n).
    """
    minkowski.check_unit_timelike_future(n)
    lam = sl2c.spinor_map(a)
    n_back = minkowski.apply(minkowski.inverse(lam), n)
    d = (sl2c.canonical_boost(n).inv() @ a @ sl2c.canonical_boost(n_back)).matrix
    return check_su2(d)


def momentum_wigner_d(a, p, m, rel_tol=1e-6):
    """Same construction on the momentum orbit, with L(p/m)."""
    if m <= 0:
        raise ValueError("mass must be positive")
    mass2 = -minkowski.dot(p, p)
    if p[0] <= 0 or abs(mass2 - m * m) > rel_tol * m * m:
        raise ValueError(f"momentum off shell: -p.p = {mass2!r}, m^2 = {m * m!r}")
    n = np.asarray(p, dtype=float) / m
    n = n / np.sqrt(-minkowski.dot(n, n))  # absorb residual off-shellness
    return wigner_d(a, n)


@dataclass(frozen=True)
class InducedPacketState:
    """Gaussian packet parameters plus 2 spin coefficients on a fiber n."""

    n: np.ndarray
    spin: np.ndarray          # 2 complex coefficients, unit norm
    center_x: np.ndarray
    center_p: np.ndarray
    width: float = 1.0

    def __post_init__(self):
        minkowski.check_unit_timelike_future(self.n)
        spin = np.asarray(self.spin, dtype=complex)
        if spin.shape != (2,):
            raise ValueError("spin coefficients must have length 2")
        if abs(np.linalg.norm(spin) - 1.0) > 1e-10:
            raise ValueError("spin coefficients must be normalized")
        if self.width <= 0:
            raise ValueError("width must be positive")
        object.__setattr__(self, "spin", spin)
        object.__setattr__(self, "center_x", np.asarray(self.center_x, dtype=float))
        object.__setattr__(self, "center_p", np.asarray(self.center_p, dtype=float))


def induced_transform(state, a):
    """Lorentz-transform a packet state: n, centers by the vector map, spin
    coefficients by the little-group rotation at the transformed fiber."""
    lam = sl2c.spinor_map(a)
    n_new = minkowski.apply(lam, state.n)
    n_new = n_new / np.sqrt(-minkowski.dot(n_new, n_new))
    d = wigner_d(a, n_new)
    return replace(
        state,
        n=n_new,
        spin=d @ state.spin,
        center_x=minkowski.apply(lam, state.center_x),
        center_p=minkowski.apply(lam, state.center_p),
    )


def su2_angle_axis(d):
    """Rotation angle in [0, pi] and unit axis of an SU(2) element.

    d = cos(theta/2) I - i sin(theta/2) sigma.axis up to a global sign,
    which is fixed so the half-angle cosine is >= 0.
    """
    d = np.asarray(d, dtype=complex)
    c = 0.5 * np.trace(d).real
    comps = np.array([0.5j * np.trace(s @ d) for s in sl2c.PAULI[1:]])
    if c < 0:
        c, comps = -c, -comps
    s = np.linalg.norm(comps.real)
    angle = 2.0 * np.arctan2(s, min(c, 1.0))
    if s < 1e-14:
        return 0.0, np.array([0.0, 0.0, 1.0])
    return float(angle), comps.real / s
