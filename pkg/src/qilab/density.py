"""Density matrices: partial trace, purity, von Neumann entropy (base 2),
mutual information, Bloch-ball geometry."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .qstate import BlochVector, SimulationFault, StateVector

_HERM_ATOL = 1e-12
_EIG_CLAMP = 1e-10


class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix on n qubits."""

    __slots__ = ("n_qubits", "matrix")

    def __init__(self, matrix: np.ndarray, check_psd: bool = True):
        m = np.asarray(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("density matrix must be square")
        n = int(round(math.log2(m.shape[0])))
        if 2**n != m.shape[0]:
            raise ValueError(f"dimension {m.shape[0]} is not a power of two")
        if np.abs(m - m.conj().T).max() > _HERM_ATOL:
            raise ValueError("matrix is not Hermitian within 1e-12")
        if abs(np.trace(m).real - 1.0) > _HERM_ATOL:
            raise ValueError(f"trace is {np.trace(m).real}, not 1")
        if check_psd and float(np.linalg.eigvalsh(m)[0]) < -_EIG_CLAMP:
            raise ValueError("matrix has an eigenvalue below -1e-10")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "n_qubits", n)
        object.__setattr__(self, "matrix", m)

    def __setattr__(self, *a):
        raise AttributeError("DensityMatrix is immutable")

    def to_json(self) -> str:
        d = self.matrix.shape[0]
        entries = [[v.real, v.imag] for v in self.matrix.reshape(-1)]
        return json.dumps({"dim": d, "entries": entries})

    @classmethod
    def from_json(cls, blob: str) -> "DensityMatrix":
        d = json.loads(blob)
        m = np.array([complex(re, im) for re, im in d["entries"]])
        return cls(m.reshape(d["dim"], d["dim"]))


def from_statevector(state: StateVector) -> DensityMatrix:
    """The projector |psi><psi|."""
    a = state.amplitudes
    return DensityMatrix(np.outer(a, a.conj()), check_psd=False)


def partial_trace(rho: DensityMatrix, keep: Sequence[int]) -> DensityMatrix:
    """Trace out every qubit not in `keep`.

    Kept qubits appear in the result in ascending original order. Works by
    index arithmetic on the reshaped 2n-axis tensor, no projector matrices.
    """
    n = rho.n_qubits
    keep = sorted(set(int(q) for q in keep))
    for q in keep:
        if not 0 <= q < n:
            raise ValueError(f"qubit {q} out of range for {n} qubits")
    if not keep:
        raise ValueError("keep must be nonempty (the trace of rho is 1 trivially)")
    if len(keep) == n:
        return rho
    traced = [q for q in range(n) if q not in keep]
    t = rho.matrix.reshape([2] * (2 * n))
    # pair up the row/col axes of each traced qubit
    for i, q in enumerate(traced):
        t = np.trace(t, axis1=q - i, axis2=q - i + n - i)
    d = 2 ** len(keep)
    return DensityMatrix(t.reshape(d, d), check_psd=False)


def _clamped_eigenvalues(rho: DensityMatrix) -> np.ndarray:
    lam = np.linalg.eigvalsh(rho.matrix)
    if float(lam[0]) < -_EIG_CLAMP:
        raise ValueError(f"eigenvalue {lam[0]} below the -1e-10 PSD window")
    # unit trace bounds the top excess by the same roundoff window
    return np.clip(lam, 0.0, 1.0)


def purity(rho: DensityMatrix) -> float:
    """tr(rho^2); 1 for pure states."""
    m = rho.matrix
    return float(np.einsum("ij,ji->", m, m).real)


def entropy_bits(eigenvalues: np.ndarray) -> float:
    lam = np.asarray(eigenvalues, dtype=float)
    lam = lam[lam > 0.0]
    s = float(-(lam * np.log2(lam)).sum()) if lam.size else 0.0
    return s + 0.0  # fold -0.0 from a pure spectrum


@dataclass(frozen=True)
class EntropyReport:
    entropy_bits: float
    purity: float
    eigenvalues: tuple


def von_neumann_entropy(rho: DensityMatrix) -> EntropyReport:
    """S(rho) = -tr(rho log2 rho) via Hermitian eigendecomposition."""
    lam = _clamped_eigenvalues(rho)
    return EntropyReport(entropy_bits(lam), purity(rho), tuple(float(v) for v in lam))


def mutual_information(rho_ab: DensityMatrix, partition: Sequence[int]) -> float:
    """MI = S_A + S_B - S_AB for the bipartition (partition, complement)."""
    n = rho_ab.n_qubits
    part_a = sorted(set(int(q) for q in partition))
    part_b = [q for q in range(n) if q not in part_a]
    if not part_a or not part_b:
        raise ValueError("partition must be a nonempty proper subset")
    s_a = von_neumann_entropy(partial_trace(rho_ab, part_a)).entropy_bits
    s_b = von_neumann_entropy(partial_trace(rho_ab, part_b)).entropy_bits
    s_ab = von_neumann_entropy(rho_ab).entropy_bits
    return s_a + s_b - s_ab


def bloch_ball_analysis(rho: DensityMatrix):
    """Bloch vector, radius and entropy of a single-qubit state.

    The entropy comes from the closed form in r; det(rho) = (1-r^2)/4 is
    checked against the matrix as a consistency guard.
    """
    if rho.matrix.shape != (2, 2):
        raise ValueError("bloch_ball_analysis takes a single-qubit state")
    m = rho.matrix
    v = BlochVector(
        float(2 * m[0, 1].real), float(-2 * m[0, 1].imag), float((m[0, 0] - m[1, 1]).real)
    )
    r = v.r
    if r > 1 + 1e-9:
        raise ValueError(f"Bloch radius {r} outside the ball")
    det = float(np.linalg.det(m).real)
    if abs(det - (1 - r * r) / 4.0) > 1e-12:
        raise SimulationFault("det(rho) != (1-r^2)/4; inconsistent state")
    p = np.array([(1 + r) / 2.0, (1 - r) / 2.0])
    s = entropy_bits(p)
    return v, r, s
