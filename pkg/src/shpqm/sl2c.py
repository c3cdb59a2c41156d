"""SL(2,C) double cover of the Lorentz group.

Convention: a first-representation element A acts on the Hermitian matrix
X(n) = n0*I + n.sigma built from *contravariant* components as

    A X(n) A^dagger = X(Lambda n),

which fixes the vector-level map Lambda = spinor_map(A).  The second
fundamental representation uses X_bar(n) = n0*I - n.sigma and the element
(A^dagger)^{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import minkowski

DET_TOL = 1e-10

SIGMA0 = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA2 = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA3 = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULI = np.stack([SIGMA0, SIGMA1, SIGMA2, SIGMA3])
PAULI.setflags(write=False)


@dataclass(frozen=True)
class SL2CElement:
    """2x2 complex unit-determinant matrix with a representation tag."""

    matrix: np.ndarray
    rep: str = "first"

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError("SL(2,C) element must be 2x2")
        det = np.linalg.det(m)
        if abs(det - 1.0) > DET_TOL:
            raise ValueError(f"determinant {det!r} not 1 within {DET_TOL}")
        if self.rep not in ("first", "second"):
            raise ValueError(f"unknown rep tag {self.rep!r}")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __matmul__(self, other):
        if self.rep != other.rep:
            raise ValueError("cannot compose elements of different representations")
        return SL2CElement(self.matrix @ other.matrix, self.rep)

    def inv(self):
        m = self.matrix
        adj = np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]])
        return SL2CElement(adj / np.linalg.det(m), self.rep)


IDENTITY = SL2CElement(np.eye(2))


def hermitian_form(v):
    """X(v) = v0*I + v.sigma from contravariant components."""
    v = np.asarray(v, dtype=float)
    return v[0] * SIGMA0 + v[1] * SIGMA1 + v[2] * SIGMA2 + v[3] * SIGMA3


def hermitian_form_bar(v):
    """Second-representation form X_bar(v) = v0*I - v.sigma."""
    v = np.asarray(v, dtype=float)
    return v[0] * SIGMA0 - v[1] * SIGMA1 - v[2] * SIGMA2 - v[3] * SIGMA3


def vector_from_form(x):
    """Inverse of hermitian_form: v^mu = (1/2) tr(sigma_mu X)."""
    return np.array([0.5 * np.trace(s @ x).real for s in PAULI])


def _require_first(a):
    if a.rep != "first":
        raise ValueError("operation requires a first-representation element; "
                         "convert with second_rep only after mapping")


def spinor_map(a):
    """Vector-level Lorentz matrix induced by a first-rep SL(2,C) element.

    Built column-wise from the action on basis vectors; validated as proper
    orthochronous before returning.
    """
    _require_first(a)
    m = a.matrix
    cols = [vector_from_form(m @ s @ m.conj().T) for s in PAULI]
    lam = np.column_stack(cols)
    return minkowski.check_proper_lorentz(lam, tol=1e-10)


def canonical_boost(n):
    """Positive-definite Hermitian L(n) with spinor_map(L(n)) N0 = n.

    Principal square root of X(n), via closed-form eigendecomposition of the
    2x2 Hermitian matrix.
    """
    minkowski.check_unit_timelike_future(n)
    vals, vecs = np.linalg.eigh(hermitian_form(n))
    if np.any(vals <= 0.0):
        raise ValueError("X(n) not positive definite; n is not future-timelike")
    root = (vecs * np.sqrt(vals)) @ vecs.conj().T
    return SL2CElement(root)


def second_rep(a):
    """Map to the second fundamental representation, (A^dagger)^{-1}."""
    _require_first(a)
    m = np.linalg.inv(a.matrix.conj().T)
    return SL2CElement(m, rep="second")


def sl2c_rotation(axis, angle):
    """exp(-i angle/2 sigma.axis): SU(2) rotation about a spatial axis."""
    ax = minkowski.axis_vector(axis)
    s = ax[0] * SIGMA1 + ax[1] * SIGMA2 + ax[2] * SIGMA3
    return SL2CElement(np.cos(angle / 2) * SIGMA0 - 1.0j * np.sin(angle / 2) * s)


def sl2c_boost(axis, rapidity):
    """exp(rapidity/2 sigma.axis): Hermitian boost along a spatial axis."""
    ax = minkowski.axis_vector(axis)
    s = ax[0] * SIGMA1 + ax[1] * SIGMA2 + ax[2] * SIGMA3
    return SL2CElement(np.cosh(rapidity / 2) * SIGMA0 + np.sinh(rapidity / 2) * s)


def random_sl2c(rng, max_rapidity=3.0):
    """Seeded random first-rep element: rotation times bounded boost."""
    rot_axis = rng.normal(size=3)
    rot_axis /= np.linalg.norm(rot_axis)
    boost_axis = rng.normal(size=3)
    boost_axis /= np.linalg.norm(boost_axis)
    rot = sl2c_rotation(rot_axis, rng.uniform(0.0, 2 * np.pi))
    bst = sl2c_boost(boost_axis, rng.uniform(0.0, max_rapidity))
    return rot @ bst
