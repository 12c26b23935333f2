"""Qubit digitization of a scalar field and the truncated two-site Schwinger model.

Field digitization maps 2^{n_q} field values onto the odd-integer
ladder, with exact sigma-z string decompositions obtained by an
integer Walsh-Hadamard transform.  Harmonic-oscillator eigenfunctions
sampled on the Nyquist window quantify how much information the
digitization keeps.  The Schwinger-model half builds the truncated
4x4 Hamiltonian, its ground state and real-time evolution, and
rederives the matrix from first principles on the full
16 x 81-dimensional fermion-flux space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

__all__ = [
    "PauliDecomposition",
    "DigitizedField",
    "SchwingerParams",
    "FidelityReport",
    "GroundState",
    "EvolutionSeries",
    "digitize",
    "nyquist_L",
    "hermite_eigenfunction",
    "sampling_grid",
    "sampling_fidelity",
    "schwinger_h4",
    "schwinger_ground_state",
    "schwinger_evolve",
    "schwinger_project",
    "gauss_report",
]


@dataclass(frozen=True)
class PauliDecomposition:
    """Diagonal operator as integer-weighted sigma-z strings.

    Each term is (coefficient, factors) with factors a per-qubit tuple
    over {"1", "z"}, leftmost factor acting on the most significant
    qubit.  Coefficients are exact integers.
    """

    terms: tuple

    def n_qubits(self) -> int:
        return len(self.terms[0][1])

    def diagonal(self) -> list:
        """Eigenvalue ladder reconstructed with integer arithmetic."""
        n = self.n_qubits()
        diag = [0] * (2**n)
        for coeff, factors in self.terms:
            mask = 0
            for q, f in enumerate(factors):
                if f == "z":
                    mask |= 1 << (n - 1 - q)
            for k in range(2**n):
                sign = -1 if bin(k & mask).count("1") % 2 else 1
                diag[k] += coeff * sign
        return diag


def _walsh_decompose(values) -> PauliDecomposition:
    # Exact integer Walsh-Hadamard transform of a diagonal: the
    # coefficient of the z-string with support mask s is
    # (1/N) sum_k values[k] (-1)^{popcount(k & s)}.
    vals = [int(v) for v in values]
    size = len(vals)
    n = size.bit_length() - 1
    coeffs = list(vals)
    h = 1
    while h < size:
        for i in range(0, size, 2 * h):
            for j in range(i, i + h):
                a, b = coeffs[j], coeffs[j + h]
                coeffs[j], coeffs[j + h] = a + b, a - b
        h *= 2
    terms = []
    for mask in range(size):
        if coeffs[mask] == 0:
            continue
        if coeffs[mask] % size != 0:
            raise ArithmeticError("ladder is not an integer sigma-z combination")
        factors = tuple(
            "z" if mask & (1 << (n - 1 - q)) else "1" for q in range(n)
        )
        terms.append((coeffs[mask] // size, factors))
    return PauliDecomposition(tuple(terms))


@dataclass(frozen=True)
class DigitizedField:
    """Field digitized to N_phi = 2^{n_q} values per site.

    The integer eigenvalues are the odd ladder N_phi - 1 - 2k ordered
    by basis index (the rescaled field 2 phi/delta + 1); delta is the
    field spacing implied by the Nyquist window.
    """

    n_q: int
    delta: float
    eigenvalues: tuple
    phi_q: PauliDecomposition
    phi_q_squared: PauliDecomposition


def digitize(n_q: int) -> DigitizedField:
    """Digitize one field onto n_q qubits, with exact string decompositions.

    phi_q comes out as sum_k 2^k sigma-z (most significant qubit at
    weight 2^{n_q - 1}); phi_q^2 is decomposed by squaring the ladder
    and transforming, not by symbolic multiplication.
    """
    if not 1 <= n_q <= 10:
        raise ValueError(f"n_q must lie in 1..10, got {n_q}")
    size = 2**n_q
    ladder = [size - 1 - 2 * k for k in range(size)]
    length = nyquist_L(size)
    return DigitizedField(
        n_q=n_q,
        delta=2.0 * length / size,
        eigenvalues=tuple(ladder),
        phi_q=_walsh_decompose(ladder),
        phi_q_squared=_walsh_decompose([v * v for v in ladder]),
    )


def nyquist_L(n_phi: int) -> float:
    """Optimal field-space truncation L = sqrt(N_phi pi / 2)."""
    if n_phi < 2:
        raise ValueError(f"N_phi must be >= 2, got {n_phi}")
    return math.sqrt(n_phi * math.pi / 2.0)


def hermite_eigenfunction(n: int, x):
    """Normalized oscillator eigenfunction Psi_n(x).

    Evaluated by the stable three-term recurrence on Psi directly,
    which avoids Hermite-polynomial overflow; n is capped at 60, the
    verified stable range.
    """
    if not 0 <= n <= 60:
        raise ValueError(f"level must lie in 0..60, got {n}")
    x = np.asarray(x, dtype=float)
    p0 = np.pi**-0.25 * np.exp(-x * x / 2.0)
    if n == 0:
        return p0
    p1 = math.sqrt(2.0) * x * p0
    for k in range(2, n + 1):
        p0, p1 = p1, math.sqrt(2.0 / k) * x * p1 - math.sqrt((k - 1) / k) * p0
    return p1


def sampling_grid(n_q: int):
    """The N_phi uniform sample points in [-L, L].

    Symmetric half-integer grid x_j = (2j - N + 1) L / N: the odd
    eigenvalue ladder rescaled by L/N.
    """
    size = 2**n_q
    length = nyquist_L(size)
    return (2.0 * np.arange(size) - size + 1) * (length / size)


def _dirichlet(u: np.ndarray, period: float, n_samples: int) -> np.ndarray:
    # Band-limited interpolation kernel for an even number of uniform
    # samples; the removable singularity at u = 0 (mod period) is 1.
    a = np.pi * u / period
    out = np.ones_like(u)
    open_angle = np.abs(np.sin(a)) >= 1e-12
    out[open_angle] = np.sin(n_samples * a[open_angle]) / (
        n_samples * np.tan(a[open_angle]))
    return out


class FidelityReport(NamedTuple):
    """Reconstruction quality of one eigenfunction from its samples."""

    level: int
    max_error: float
    infidelity: float


def sampling_fidelity(n_q: int, n_levels: int, fine_points: int = 4001) -> list:
    """Reconstruct Psi_n from its N_phi samples and measure the error.

    Samples on the [-L, L] grid are interpolated through the discrete
    Fourier (Dirichlet kernel) interpolant and compared against the
    exact eigenfunction on a fine grid.  Both the max pointwise error
    and the overlap infidelity 1 - |<exact|recon>| are reported; the
    pointwise number is meaningful near the window edge where the
    eigenfunction has not fully decayed, the overlap number measures
    the retained state information.
    """
    if not 1 <= n_q <= 8:
        raise ValueError(f"n_q must lie in 1..8, got {n_q}")
    if n_levels < 1:
        raise ValueError("need at least one level")
    size = 2**n_q
    length = nyquist_L(size)
    xs = sampling_grid(n_q)
    xf = np.linspace(-length, length, fine_points)
    kernel = _dirichlet(xf[:, None] - xs[None, :], 2.0 * length, size)
    reports = []
    for n in range(n_levels):
        exact = hermite_eigenfunction(n, xf)
        recon = kernel @ hermite_eigenfunction(n, xs)
        overlap = np.trapezoid(exact * recon, xf)
        norm = math.sqrt(np.trapezoid(exact * exact, xf) *
                         np.trapezoid(recon * recon, xf))
        reports.append(FidelityReport(
            n, float(np.max(np.abs(exact - recon))), float(1.0 - abs(overlap) / norm)))
    return reports


@dataclass(frozen=True)
class SchwingerParams:
    """Dimensionless couplings x = 1/(ag)^2 and mu = 2m/(ag^2)."""

    x: float
    mu: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.mu)):
            raise ValueError("x and mu must be finite")


def schwinger_h4(params: SchwingerParams) -> np.ndarray:
    """The Hamiltonian on the 4-dimensional gauge-invariant subspace."""
    x, mu = params.x, params.mu
    r2x = math.sqrt(2.0) * x
    return np.array([
        [-2.0 * mu, 2.0 * x, 0.0, 0.0],
        [2.0 * x, 1.0, r2x, 0.0],
        [0.0, r2x, 2.0 + 2.0 * mu, r2x],
        [0.0, 0.0, r2x, 3.0],
    ])


class GroundState(NamedTuple):
    """Lowest eigenpair over the states |s1>..|s4>."""

    energy: float
    amplitudes: np.ndarray


def schwinger_ground_state(params: SchwingerParams) -> GroundState:
    """Ground state of the truncated model: a condensate of fermion pairs for x > 0."""
    evals, vecs = np.linalg.eigh(schwinger_h4(params))
    amps = vecs[:, 0]
    # fix the overall sign so the leading component is nonnegative
    lead = np.argmax(np.abs(amps))
    if amps[lead] < 0:
        amps = -amps
    return GroundState(float(evals[0]), amps)


class EvolutionSeries(NamedTuple):
    """Occupation probabilities of |s1>..|s4> along a time grid."""

    t: np.ndarray
    probabilities: np.ndarray


def schwinger_evolve(params: SchwingerParams, t_grid, initial=None) -> EvolutionSeries:
    """p_i(t) = |<s_i| exp(-i H4 t) |initial>|^2 via the eigen propagator."""
    t = np.asarray(t_grid, dtype=float)
    if initial is None:
        psi0 = np.zeros(4, dtype=complex)
        psi0[0] = 1.0
    else:
        psi0 = np.asarray(initial, dtype=complex)
        if psi0.shape != (4,):
            raise ValueError("initial state must be a 4-vector")
    evals, vecs = np.linalg.eigh(schwinger_h4(params))
    coeffs = vecs.conj().T @ psi0
    phases = np.exp(-1j * np.outer(t, evals))
    amplitudes = phases * coeffs @ vecs.T.astype(complex)
    return EvolutionSeries(t, np.abs(amplitudes) ** 2)


# First-principles construction on the full fermion-flux space:
# four staggered sites (dim 2 each, sites 0,2 occupied = (10), sites
# 1,3 occupied = (01)) and four links with flux in {-1, 0, +1}
# (dim 3, ordered by flux value).

_SP = np.array([[0.0, 1.0], [0.0, 0.0]])
_SM = _SP.T
_SZ = np.diag([1.0, -1.0])
_FLUX = np.diag([-1.0, 0.0, 1.0])
_RAISE = np.diag([1.0, 1.0], -1)   # |l> -> |l+1>
_LOWER = _RAISE.T

# The four gauge-invariant states as (occupation per site, flux per link)
# component lists with a common normalization.
_S_COMPONENTS = (
    ((((0, 0, 0, 0), (0, 0, 0, 0)),), 1.0),
    ((((1, 1, 0, 0), (-1, 0, 0, 0)),
      ((0, 0, 1, 1), (0, 0, -1, 0)),
      ((1, 0, 0, 1), (0, 0, 0, 1)),
      ((0, 1, 1, 0), (0, 1, 0, 0))), 0.5),
    ((((1, 1, 1, 1), (-1, 0, -1, 0)),
      ((1, 1, 1, 1), (0, 1, 0, 1))), 1.0 / math.sqrt(2.0)),
    ((((1, 1, 0, 0), (0, 1, 1, 1)),
      ((0, 0, 1, 1), (1, 1, 0, 1)),
      ((1, 0, 0, 1), (-1, -1, -1, 0)),
      ((0, 1, 1, 0), (-1, 0, -1, -1))), 0.5),
)


def _occupation_bits(occupations) -> list:
    # (10) is the occupied state on even sites, (01) on odd sites.
    bits = []
    for site, occ in enumerate(occupations):
        if site % 2 == 0:
            bits.append(0 if occ else 1)
        else:
            bits.append(1 if occ else 0)
    return bits


def _string_op(site_ops: dict, link_ops: dict) -> np.ndarray:
    factors = [site_ops.get(n, np.eye(2)) for n in range(4)]
    factors += [link_ops.get(n, np.eye(3)) for n in range(4)]
    out = factors[0]
    for f in factors[1:]:
        out = np.kron(out, f)
    return out


def _full_hamiltonian(params: SchwingerParams) -> np.ndarray:
    x, mu = params.x, params.mu
    dim = 16 * 81
    h = np.zeros((dim, dim))
    for n in range(4):
        m = (n + 1) % 4
        # The sigma+_n sigma-_{n+1} hop moves the fermion pattern across
        # link n; under the staggered occupation convention the flux
        # change that keeps Gauss's law satisfied is -1 for every n.
        h += x * _string_op({n: _SP, m: _SM}, {n: _LOWER})
        h += x * _string_op({n: _SM, m: _SP}, {n: _RAISE})
        h += _string_op({}, {n: _FLUX @ _FLUX})
        h += (mu / 2.0) * (-1) ** n * _string_op({n: _SZ}, {})
    return h


def _component_vector(occupations, fluxes) -> np.ndarray:
    ferm_index = 0
    for b in _occupation_bits(occupations):
        ferm_index = ferm_index * 2 + b
    link_index = 0
    for f in fluxes:
        link_index = link_index * 3 + (f + 1)
    v = np.zeros(16 * 81)
    v[ferm_index * 81 + link_index] = 1.0
    return v


def _schwinger_states() -> list:
    states = []
    for components, weight in _S_COMPONENTS:
        v = np.zeros(16 * 81)
        for occupations, fluxes in components:
            v += _component_vector(occupations, fluxes)
        states.append(weight * v)
    return states


def gauss_report() -> list:
    """Check every printed state component against Gauss's law.

    Moving past an occupied site changes the flux by the site's charge
    (+1 for a positron site, -1 for an electron site); links are
    periodic.  Also checks the flux truncation |l| <= 1 and
    sum l^2 < 4.  Returns a list of violation descriptions; empty
    means all components are consistent.
    """
    problems = []
    for si, (components, _) in enumerate(_S_COMPONENTS, start=1):
        for occupations, fluxes in components:
            for n in range(4):
                charge = 0
                if occupations[n]:
                    charge = -1 if n % 2 == 0 else 1
                expected = fluxes[n - 1] + charge  # link n-1 wraps to link 3
                if fluxes[n] != expected:
                    problems.append(
                        f"s{si} component {occupations}/{fluxes}: link {n} "
                        f"is {fluxes[n]}, Gauss's law needs {expected}")
            if any(abs(f) > 1 for f in fluxes):
                problems.append(
                    f"s{si} component {occupations}/{fluxes}: flux outside -1..1")
            if sum(f * f for f in fluxes) >= 4:
                problems.append(
                    f"s{si} component {occupations}/{fluxes}: sum l^2 >= 4")
    return problems


def schwinger_project(params: SchwingerParams) -> np.ndarray:
    """<s_i| H |s_j> from the first-principles Hamiltonian.

    Builds the full 1296-dimensional operator and the four explicit
    states, then projects.  Must reproduce schwinger_h4 within 1e-10;
    a mismatch or a Gauss-law violation in the constructed states is
    an error.
    """
    problems = gauss_report()
    if problems:
        raise ValueError("state construction violates Gauss's law: "
                         + "; ".join(problems))
    h = _full_hamiltonian(params)
    states = _schwinger_states()
    gram = np.array([[si @ sj for sj in states] for si in states])
    if np.max(np.abs(gram - np.eye(4))) > 1e-12:
        raise ValueError("constructed states are not orthonormal")
    return np.array([[si @ h @ sj for sj in states] for si in states])
