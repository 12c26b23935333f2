"""Hamiltonians as weighted operator strings and exact time evolution.

Hamiltonians are sums of tensor-product strings over the single-qubit
symbols {1, x, y, z, +, -}.  Evolution uses the Hermitian
eigendecomposition U(t) = V exp(-i L t) V', which keeps U exactly
unitary at these dimensions and doubles as the spectrum oracle.  The
module also houses the named interaction models (Rabi exchange, the
two-splitting measurement model, the three-qubit decoherence model),
Kraus-operator extraction from the joint unitary, and the swap-based
measurement demonstration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import density, qstate
from .density import DensityMatrix
from .qstate import StateVector

__all__ = [
    "OperatorString",
    "HamiltonianSpec",
    "KrausSet",
    "build_hamiltonian",
    "dense",
    "from_dense",
    "propagator",
    "evolve",
    "ReducedSample",
    "reduced_evolution",
    "rabi_hamiltonian",
    "measurement_hamiltonian",
    "decoherence_hamiltonian",
    "kraus_extract",
    "swap_measurement_demo",
]

_SYMBOLS = {
    "1": np.eye(2, dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
    "+": np.array([[0, 1], [0, 0]], dtype=complex),
    "-": np.array([[0, 0], [1, 0]], dtype=complex),
}


@dataclass(frozen=True)
class OperatorString:
    """One weighted tensor-product term, e.g. 0.5 * (z 1 1)."""

    coefficient: complex
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for f in self.factors:
            if f not in _SYMBOLS:
                raise ValueError(f"unknown factor symbol {f!r}; use one of {sorted(_SYMBOLS)}")
        if not self.factors:
            raise ValueError("factors must be nonempty")

    def dense(self) -> np.ndarray:
        out = np.array([[self.coefficient]], dtype=complex)
        for f in self.factors:
            out = np.kron(out, _SYMBOLS[f])
        return out


@dataclass(frozen=True)
class HamiltonianSpec:
    """Validated sum of operator strings; the dense total is Hermitian."""

    n_qubits: int
    terms: tuple


def build_hamiltonian(terms) -> HamiltonianSpec:
    """Assemble operator strings into a Hamiltonian, enforcing Hermiticity.

    Each term is an OperatorString or a (coefficient, factors) pair.
    All strings must act on the same number of qubits and the dense sum
    must be Hermitian within 1e-12.
    """
    strings = []
    for term in terms:
        if not isinstance(term, OperatorString):
            coeff, factors = term
            term = OperatorString(complex(coeff), tuple(factors))
        strings.append(term)
    if not strings:
        raise ValueError("a Hamiltonian needs at least one term")
    n = len(strings[0].factors)
    for s in strings:
        if len(s.factors) != n:
            raise ValueError("all operator strings must share one qubit count")
    spec = HamiltonianSpec(n, tuple(strings))
    h = dense(spec)
    if np.max(np.abs(h - h.conj().T)) > 1e-12:
        raise ValueError("operator-string sum is not Hermitian")
    return spec


def dense(h: HamiltonianSpec) -> np.ndarray:
    """Dense matrix sum of the operator strings."""
    dim = 2**h.n_qubits
    out = np.zeros((dim, dim), dtype=complex)
    for term in h.terms:
        out += term.dense()
    return out


def from_dense(matrix) -> HamiltonianSpec:
    """Decompose a Hermitian 2^n x 2^n matrix into Pauli strings.

    Coefficients are trace inner products tr(P H)/2^n; terms below
    1e-12 are dropped.  The result round-trips through dense().
    """
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    n = int(round(math.log2(m.shape[0])))
    if 2**n != m.shape[0]:
        raise ValueError("dimension must be a power of 2")
    if np.max(np.abs(m - m.conj().T)) > 1e-12:
        raise ValueError("matrix must be Hermitian")
    dim = m.shape[0]
    labels = "1xyz"
    terms = []
    for idx in range(4**n):
        factors = []
        k = idx
        for _ in range(n):
            factors.append(labels[k % 4])
            k //= 4
        factors = tuple(reversed(factors))
        p = np.array([[1.0]], dtype=complex)
        for f in factors:
            p = np.kron(p, _SYMBOLS[f])
        coeff = np.trace(p @ m) / dim
        if abs(coeff) > 1e-12:
            # Hermitian input guarantees a real coefficient on Pauli strings.
            terms.append(OperatorString(complex(coeff.real), factors))
    return build_hamiltonian(terms)


def propagator(h: HamiltonianSpec, t: float) -> np.ndarray:
    """U(t) = exp(-i H t) through the Hermitian eigendecomposition."""
    if t == 0.0:
        return np.eye(2**h.n_qubits, dtype=complex)
    evals, vecs = np.linalg.eigh(dense(h))
    return (vecs * np.exp(-1j * evals * t)) @ vecs.conj().T


def evolve(h: HamiltonianSpec, t: float, initial):
    """Evolve a StateVector or DensityMatrix by exp(-i H t).

    Returns the same kind as the input; t = 0 returns the input
    unchanged.
    """
    if t == 0.0:
        return initial
    u = propagator(h, t)
    if isinstance(initial, StateVector):
        if initial.n_qubits != h.n_qubits:
            raise ValueError("state and Hamiltonian qubit counts differ")
        return StateVector(h.n_qubits, u @ initial.amplitudes)
    if isinstance(initial, DensityMatrix):
        if initial.matrix.shape[0] != 2**h.n_qubits:
            raise ValueError("density matrix and Hamiltonian dimensions differ")
        return DensityMatrix(u @ initial.matrix @ u.conj().T, check_psd=False)
    raise TypeError(f"cannot evolve {type(initial).__name__}")


@dataclass(frozen=True)
class ReducedSample:
    """One time point of a reduced-dynamics run."""

    t: float
    rho: DensityMatrix
    entropy_bits: float
    purity: float
    offdiag_abs: float


def reduced_evolution(h: HamiltonianSpec, t_grid, rho_se0: DensityMatrix, keep) -> list:
    """Reduced system dynamics: rho_S(t) = tr_E(U rho_SE(0) U') on a grid.

    keep lists the system qubit indices.  Each sample carries the
    entropy in bits, the purity, and the largest off-diagonal magnitude
    of rho_S(t).  One eigendecomposition serves the whole grid.
    """
    evals, vecs = np.linalg.eigh(dense(h))
    rho0 = vecs.conj().T @ rho_se0.matrix @ vecs
    samples = []
    for t in np.asarray(t_grid, dtype=float):
        phase = np.exp(-1j * evals * float(t))
        rho_t = (vecs * phase) @ rho0 @ (vecs * phase).conj().T
        rho_s = density.partial_trace(
            DensityMatrix(rho_t, check_psd=False), keep)
        report = density.von_neumann_entropy(rho_s)
        off = rho_s.matrix - np.diag(np.diag(rho_s.matrix))
        samples.append(ReducedSample(
            float(t), rho_s, report.entropy_bits, report.purity,
            float(np.max(np.abs(off))),
        ))
    return samples


def rabi_hamiltonian(c1: float = 1.0, c2: float = 1.0) -> HamiltonianSpec:
    """Exchange model behind the Rabi-oscillation run.

    H = -(c1 z1 + c2 (+- + -+)): a level splitting on the system qubit
    plus excitation exchange with one environment qubit.
    """
    return build_hamiltonian([
        (-c1, "z1"),
        (-c2, "+-"),
        (-c2, "-+"),
    ])


def measurement_hamiltonian(c11: float = 1.0, c22: float = 1.0,
                            c12: float = 1.0) -> HamiltonianSpec:
    """Two-splitting exchange model used for Kraus extraction.

    H = -(c11 z1 + c22 1z + c12 (+- + -+)); both qubits carry level
    splittings, which makes the extracted Kraus pairs act like
    approximate pointer-basis projectors.
    """
    return build_hamiltonian([
        (-c11, "z1"),
        (-c22, "1z"),
        (-c12, "+-"),
        (-c12, "-+"),
    ])


def decoherence_hamiltonian(c11: float = 0.9, c22: float = 0.3, c33: float = 0.4,
                            c12: float = 0.5, c13: float = 0.4) -> HamiltonianSpec:
    """Three-qubit model: one system qubit exchanging with two environment qubits.

    H = -(c11 z11 + c22 1z1 + c33 11z + c12 (+-1 + -+1) + c13 (+1- + -1+)).
    """
    return build_hamiltonian([
        (-c11, "z11"),
        (-c22, "1z1"),
        (-c33, "11z"),
        (-c12, "+-1"),
        (-c12, "-+1"),
        (-c13, "+1-"),
        (-c13, "-1+"),
    ])


@dataclass(frozen=True)
class KrausSet:
    """Kraus operators from the 2x2 sub-blocks of a two-qubit unitary.

    With basis order |se> (system bit first), e_ij maps the
    environment-j input sector to the environment-i output sector.
    """

    e11: np.ndarray
    e12: np.ndarray
    e21: np.ndarray
    e22: np.ndarray
    time: float

    def apply(self, rho_s: np.ndarray, env_bit: int) -> np.ndarray:
        """Reduced evolution of a system matrix for environment |0> or |1>."""
        pair = (self.e11, self.e21) if env_bit == 0 else (self.e12, self.e22)
        return sum(e @ rho_s @ e.conj().T for e in pair)

    def p_matrices(self):
        """The bilinear combinations P_ij = E_ij E_ij'.

        Each row pair sums to the identity: P11 + P12 = P21 + P22 = 1.
        """
        return tuple(e @ e.conj().T for e in (self.e11, self.e12, self.e21, self.e22))

    def completeness_defect(self) -> float:
        """Max deviation of the two trace-preservation sums from identity."""
        eye = np.eye(2)
        d0 = self.e11.conj().T @ self.e11 + self.e21.conj().T @ self.e21 - eye
        d1 = self.e12.conj().T @ self.e12 + self.e22.conj().T @ self.e22 - eye
        return float(max(np.max(np.abs(d0)), np.max(np.abs(d1))))


def kraus_extract(h: HamiltonianSpec, t: float) -> KrausSet:
    """Kraus operators of a two-qubit model at time t.

    E11 = U[(0,2),(0,2)], E12 = U[(0,2),(1,3)], E21 = U[(1,3),(0,2)],
    E22 = U[(1,3),(1,3)]: the environment-bit sectors of the joint
    unitary, read in the |se> basis.
    """
    if h.n_qubits != 2:
        raise ValueError("Kraus extraction expects a two-qubit Hamiltonian")
    u = propagator(h, t)
    env0, env1 = [0, 2], [1, 3]
    return KrausSet(
        u[np.ix_(env0, env0)], u[np.ix_(env0, env1)],
        u[np.ix_(env1, env0)], u[np.ix_(env1, env1)],
        float(t),
    )


def swap_measurement_demo(t: float, shots: int, seed: int):
    """Swap-then-measure circuit run: returns (record, correlation).

    The prepared qubit state X^t is swapped onto qubit 0 and both
    qubits are measured.  The sample correlation between the q0 and q1
    registers is 0.0 by convention when either register is constant.
    """
    if not 0.0 <= t <= 2.0:
        raise ValueError(f"t must lie in [0, 2], got {t}")
    record = qstate.run_circuit(qstate.exchange_circuit(t), shots, seed)
    q0 = np.array([int(b) for b in record.registers["q0"]], dtype=float)
    q1 = np.array([int(b) for b in record.registers["q1"]], dtype=float)
    if np.std(q0) == 0.0 or np.std(q1) == 0.0:
        corr = 0.0
    else:
        corr = float(np.corrcoef(q0, q1)[0, 1])
    return record, corr
