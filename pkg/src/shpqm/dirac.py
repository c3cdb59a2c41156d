"""Covariant Dirac-operator toolkit on a timelike foliation vector n.

Gamma matrices are the standard Dirac-representation ones (diagonal gamma^0,
off-diagonal spatial gammas).  Index contractions use the library metric
diag(-1,1,1,1), so the Clifford relation reads

    {gamma^mu, gamma^nu} = -2 g^{mu nu} I,

which makes (gamma.n)^2 = +1 for unit timelike n and (gamma5)^2 = +1.  Both
signs are deliberate: they are forced by K_L^2 = (p.n)^2 and by idempotence
of the light-cone and helicity projections, and they are reported as
convention flags by the verification suites.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import minkowski, sl2c

_S0, _S1, _S2, _S3 = sl2c.SIGMA0, sl2c.SIGMA1, sl2c.SIGMA2, sl2c.SIGMA3
_Z = np.zeros((2, 2), dtype=complex)


def _block(a, b, c, d):
    return np.block([[a, b], [c, d]])


GAMMA = np.stack([
    _block(_S0, _Z, _Z, -_S0),
    _block(_Z, _S1, -_S1, _Z),
    _block(_Z, _S2, -_S2, _Z),
    _block(_Z, _S3, -_S3, _Z),
])
GAMMA.setflags(write=False)

GAMMA5 = 1.0j * GAMMA[0] @ GAMMA[1] @ GAMMA[2] @ GAMMA[3]
GAMMA5.setflags(write=False)

# Block matrix assembling the two-spinor pair into a four-spinor; also the
# basis change between the pair (chiral-like) picture and the gammas above.
ASSEMBLY = np.block([[_S0, _S0], [-_S0, _S0]]) / np.sqrt(2.0)
ASSEMBLY.setflags(write=False)

ID4 = np.eye(4, dtype=complex)

CONVENTION_FLAGS = ("gamma_dot_n_squared_plus_one", "gamma5_squared_plus_one")


def gamma(mu):
    return GAMMA[mu]


def gamma5():
    return GAMMA5


def gamma_dot(v):
    """gamma.v = gamma^mu v_mu (covariant contraction)."""
    v = np.asarray(v, dtype=float)
    return -v[0] * GAMMA[0] + v[1] * GAMMA[1] + v[2] * GAMMA[2] + v[3] * GAMMA[3]


_SIGMA_ALL = np.stack([[0.25j * (GAMMA[m] @ GAMMA[n] - GAMMA[n] @ GAMMA[m])
                        for n in range(4)] for m in range(4)])
_SIGMA_ALL.setflags(write=False)


def sigma(mu, nu):
    """Spin generator (i/4) [gamma^mu, gamma^nu]."""
    return _SIGMA_ALL[mu, nu]


def k_vec(mu, n):
    """K^mu = Sigma^{mu nu} n_nu."""
    return np.einsum("nab,n->ab", _SIGMA_ALL[mu], minkowski.lower(n))


def k_all(n):
    """All four K^mu stacked, shape (4, 4, 4)."""
    return np.einsum("mnab,n->mab", _SIGMA_ALL, minkowski.lower(n))


def projector_pi(n):
    """pi^{lambda mu} = g^{lambda mu} + n^lambda n^mu."""
    n = np.asarray(n, dtype=float)
    return minkowski.METRIC + np.outer(n, n)


def gamma_n(mu, n):
    """Projected gamma matrix gamma_lambda pi^{lambda mu} = gamma^mu + (gamma.n) n^mu."""
    n = np.asarray(n, dtype=float)
    return GAMMA[mu] + n[mu] * gamma_dot(n)


def sigma_n(mu, nu, n):
    """Covariant Pauli matrix Sigma_n^{mu nu} = Sigma^{mu nu} + K^mu n^nu - K^nu n^mu."""
    n = np.asarray(n, dtype=float)
    return sigma(mu, nu) + n[nu] * k_vec(mu, n) - n[mu] * k_vec(nu, n)


def sigma_n_all(n):
    """All Sigma_n^{mu nu} stacked, shape (4, 4, 4, 4)."""
    n = np.asarray(n, dtype=float)
    k = k_all(n)
    return (_SIGMA_ALL
            + np.einsum("mab,n->mnab", k, n)
            - np.einsum("nab,m->mnab", k, n))


def k_l(p, n):
    """Longitudinal (sector-Hermitian) part of gamma.p, -(p.n)(gamma.n)."""
    return -minkowski.dot(p, n) * gamma_dot(n)


def k_t(p, n):
    """Transverse part, -2i gamma5 (p.K)(gamma.n)."""
    p_dot_k = np.einsum("mab,m->ab", k_all(n), minkowski.lower(p))
    return -2.0j * GAMMA5 @ p_dot_k @ gamma_dot(n)


def k_l_symmetrized(p, n):
    """(1/2)(gamma.p + gamma.n gamma.p gamma.n); equal to k_l."""
    gp, gn = gamma_dot(p), gamma_dot(n)
    return 0.5 * (gp + gn @ gp @ gn)


def k_t_symmetrized(p, n):
    """(1/2) gamma5 (gamma.p - gamma.n gamma.p gamma.n); equal to k_t."""
    gp, gn = gamma_dot(p), gamma_dot(n)
    return 0.5 * GAMMA5 @ (gp - gn @ gp @ gn)


def free_k0(p, m_param, n=None):
    """Free evolution operator (K_T^2 - K_L^2)/2M = (p.p/2M) I.

    The result is independent of n; n only selects the split into K_T, K_L.
    """
    if m_param <= 0:
        raise ValueError("mass parameter must be positive")
    if n is None:
        n = minkowski.N0
    kt, kl = k_t(p, n), k_l(p, n)
    return (kt @ kt - kl @ kl) / (2.0 * m_param)


@dataclass(frozen=True)
class FieldTensor:
    """Constant electromagnetic field F_{mu nu} with coupling e and mass M.

    Stored with lower indices; F_{0i} = E_i and F_{ij} = eps_{ijk} B_k.
    """

    f_lower: np.ndarray
    charge: float
    mass: float

    def __post_init__(self):
        f = np.asarray(self.f_lower, dtype=float)
        if f.shape != (4, 4) or np.max(np.abs(f + f.T)) != 0.0:
            raise ValueError("field tensor must be exactly antisymmetric 4x4")
        if self.mass <= 0:
            raise ValueError("mass parameter must be positive")
        f = f.copy()
        f.setflags(write=False)
        object.__setattr__(self, "f_lower", f)

    @classmethod
    def from_fields(cls, e_field, b_field, charge=1.0, mass=1.0):
        ex, ey, ez = np.asarray(e_field, dtype=float)
        bx, by, bz = np.asarray(b_field, dtype=float)
        f = np.array([
            [0.0, ex, ey, ez],
            [-ex, 0.0, bz, -by],
            [-ey, -bz, 0.0, bx],
            [-ez, by, -bx, 0.0],
        ])
        return cls(f, charge, mass)

    def f_upper(self):
        g = minkowski.METRIC
        return g @ self.f_lower @ g

    def projected_lower(self, n):
        """F projected into the foliation subspace on both indices."""
        n = np.asarray(n, dtype=float)
        pim = np.eye(4) + np.outer(n, minkowski.lower(n))  # pi^alpha_mu
        return pim.T @ self.f_lower @ pim


def spin_hamiltonian(p_kinetic, n, field):
    """Interacting evolution operator: kinetic scalar plus (e/2M) Sigma_n.F.

    F enters through its projection into the surface orthogonal to n, which
    changes nothing numerically since Sigma_n projects each index itself.
    """
    minkowski.check_unit_timelike_future(n)
    kinetic = minkowski.dot(p_kinetic, p_kinetic) / (2.0 * field.mass)
    spin_term = np.einsum("mnab,mn->ab", sigma_n_all(n), field.projected_lower(n))
    return kinetic * ID4 + (field.charge / (2.0 * field.mass)) * spin_term


def dipole_rhs(n, field):
    """Spin coupling that becomes a pure electric dipole term in the n frame:
    -i e gamma5 (K^mu n^nu - K^nu n^mu) F_{mu nu}."""
    minkowski.check_unit_timelike_future(n)
    n = np.asarray(n, dtype=float)
    k = k_all(n)
    anti = (np.einsum("mab,n->mnab", k, n) - np.einsum("nab,m->mnab", k, n))
    contracted = np.einsum("mnab,mn->ab", anti, field.f_lower)
    return -1.0j * field.charge * GAMMA5 @ contracted


def projections(p, n):
    """The three conserved projection pairs (light-cone, energy-sign, helicity).

    Returns a dict with keys 'cone', 'energy', 'helicity', each a (P+, P-) pair.
    """
    minkowski.check_unit_timelike_future(n)
    pn = minkowski.dot(p, n)
    norm2 = minkowski.dot(p, p) + pn * pn
    if norm2 <= 0:
        raise ValueError("p^2 + (p.n)^2 must be positive for the helicity pair")
    gn = gamma_dot(n)
    cone = (0.5 * (ID4 - gn), 0.5 * (ID4 + gn))
    if pn == 0.0:
        raise ValueError("p.n = 0: energy-sign projection undefined")
    s = pn / abs(pn)
    energy = (0.5 * (1.0 - s) * ID4, 0.5 * (1.0 + s) * ID4)
    p_dot_k = np.einsum("mab,m->ab", k_all(n), minkowski.lower(p))
    hel_op = 2.0j * GAMMA5 @ p_dot_k / np.sqrt(norm2)
    helicity = (0.5 * (ID4 + hel_op), 0.5 * (ID4 - hel_op))
    return {"cone": cone, "energy": energy, "helicity": helicity}


def helicity_operator(p, n):
    """The operator inside the helicity projection, 2i gamma5 K.p / sqrt(p^2+(p.n)^2)."""
    pn = minkowski.dot(p, n)
    norm2 = minkowski.dot(p, p) + pn * pn
    p_dot_k = np.einsum("mab,m->ab", k_all(n), minkowski.lower(p))
    return 2.0j * GAMMA5 @ p_dot_k / np.sqrt(norm2)


def sector_metric(n):
    """eta with <psi|phi>_n = psi^dagger eta phi: -+ gamma^0 (gamma.n) for n in
    the future/past light cone.  Reduces to the identity at the rest frame."""
    sign = -1.0 if n[0] > 0 else 1.0
    return sign * GAMMA[0] @ gamma_dot(n)


def is_sector_hermitian(op, n, tol=1e-10):
    """True when eta op = op^dagger eta in the n-sector scalar product."""
    eta = sector_metric(n)
    return np.max(np.abs(eta @ op - op.conj().T @ eta)) <= tol


@dataclass(frozen=True)
class TwoSpinorPair:
    """First- and second-representation 2-spinors on a common fiber n."""

    psi: np.ndarray
    phi: np.ndarray
    n: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "psi", np.asarray(self.psi, dtype=complex))
        object.__setattr__(self, "phi", np.asarray(self.phi, dtype=complex))
        object.__setattr__(self, "n", np.asarray(self.n, dtype=float))


@dataclass(frozen=True)
class FourSpinor:
    """4-component spinor labeled by its fiber n."""

    components: np.ndarray
    n: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "components",
                           np.asarray(self.components, dtype=complex))
        object.__setattr__(self, "n", np.asarray(self.n, dtype=float))


def assemble_spinor(pair):
    """Build the four-spinor from the pair via the block assembly matrix.

    The boost factors enter inverted relative to the canonical_boost
    orientation; this is the form for which the sector norm equals
    |psi|^2 + |phi|^2 identically (see the convention notes in README).
    """
    boost = sl2c.canonical_boost(pair.n)
    first = boost.inv().matrix @ pair.psi
    second = boost.matrix @ pair.phi   # second-rep boost inverse equals L(n)
    stacked = np.concatenate([first, second])
    return FourSpinor(ASSEMBLY @ stacked, pair.n)


def sector_norm(spinor):
    """Invariant norm -+ psibar (gamma.n) psi; positive on the future cone."""
    c = spinor.components
    val = c.conj() @ sector_metric(spinor.n) @ c
    return float(val.real)


def s_lambda(a):
    """4x4 spinor representation S(Lambda) of a first-rep SL(2,C) element."""
    if a.rep != "first":
        raise ValueError("s_lambda expects a first-representation element")
    bar = sl2c.second_rep(a).matrix
    blockdiag = np.block([[bar, _Z], [_Z, a.matrix]])
    return ASSEMBLY @ blockdiag @ ASSEMBLY.conj().T


def transform_pair(pair, a):
    """Wigner-rotate both 2-spinors onto the transformed fiber."""
    from . import little_group

    lam = sl2c.spinor_map(a)
    n_new = minkowski.apply(lam, pair.n)
    n_new = n_new / np.sqrt(-minkowski.dot(n_new, n_new))
    d = little_group.wigner_d(a, n_new)
    return TwoSpinorPair(d @ pair.psi, d @ pair.phi, n_new)
