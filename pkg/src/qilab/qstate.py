"""Dense state-vector simulation of small qubit registers.

Qubit 0 is the most significant bit of the basis index: |q0 q1 ... qn-1>
with basis index sum(q_i * 2^(n-1-i)). Global phase is not tracked as
physical; comparisons go through Bloch vectors or overlap magnitudes.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

_ATOL_UNITARY = 1e-12
_MIN_BRANCH_PROB = 1e-15


class SimulationFault(RuntimeError):
    """Internal numerical fault (not a user-input error)."""


def _rng(seed: int) -> np.random.Generator:
    # PCG64 draws are platform-stable, which the output contracts rely on
    return np.random.Generator(np.random.PCG64(seed))


# ---------------------------------------------------------------------------
# gates

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_H = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)

_CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)
_SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)


def _controlled(u: np.ndarray) -> np.ndarray:
    m = np.eye(4, dtype=complex)
    m[2:, 2:] = u
    return m


@dataclass(frozen=True)
class Gate:
    """A 1- or 2-qubit unitary with a display name."""

    name: str
    params: tuple
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape not in ((2, 2), (4, 4)):
            raise ValueError(f"gate matrix must be 2x2 or 4x4, got {m.shape}")
        if np.abs(m @ m.conj().T - np.eye(m.shape[0])).max() > _ATOL_UNITARY:
            raise ValueError(f"gate {self.name!r} is not unitary within {_ATOL_UNITARY}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def arity(self) -> int:
        return 1 if self.matrix.shape[0] == 2 else 2

    def label(self) -> str:
        if not self.params:
            return self.name
        if self.name == "RPhi":
            return "R(%g)" % self.params[0]
        return "%s^%g" % (self.name[0], self.params[0])


def _pow_gate(pauli: np.ndarray, name: str, t: float) -> Gate:
    # exp(i * pauli * pi * t / 2); t=1 gives i*pauli, a global phase away
    # from the bare Pauli
    a = math.pi * float(t) / 2.0
    return Gate(name, (float(t),), math.cos(a) * _I2 + 1j * math.sin(a) * pauli)


def standard_gate(name: str, *params: float) -> Gate:
    """Look up a gate from the standard library by name and parameters."""
    fixed = {
        "X": _X, "Y": _Y, "Z": _Z, "H": _H,
        "CNOT": _CNOT, "CX": _CNOT,
        "CY": _controlled(_Y), "CZ": _controlled(_Z),
        "SWAP": _SWAP,
    }
    if name in fixed:
        if params:
            raise ValueError(f"gate {name} takes no parameters")
        return Gate(name, (), fixed[name])
    if name in ("XPow", "YPow", "ZPow"):
        if len(params) != 1:
            raise ValueError(f"gate {name} takes exactly one parameter")
        pauli = {"XPow": _X, "YPow": _Y, "ZPow": _Z}[name]
        return _pow_gate(pauli, name, params[0])
    if name == "RPhi":
        if len(params) != 1:
            raise ValueError("gate RPhi takes exactly one parameter")
        phi = float(params[0])
        return Gate("RPhi", (phi,), np.array([[1, 0], [0, np.exp(1j * phi)]]))
    raise ValueError(f"unknown gate {name!r}")


# ---------------------------------------------------------------------------
# states

class StateVector:
    """Immutable n-qubit pure state."""

    __slots__ = ("n_qubits", "amplitudes")

    def __init__(self, n_qubits: int, amplitudes: np.ndarray):
        if n_qubits < 1:
            raise ValueError("need at least one qubit")
        a = np.asarray(amplitudes, dtype=complex).reshape(-1).copy()
        if a.size != 2**n_qubits:
            raise ValueError(f"expected {2**n_qubits} amplitudes, got {a.size}")
        n = float(np.linalg.norm(a))
        if abs(n - 1.0) > 1e-9:
            raise ValueError(f"state not normalized: |psi| = {n}")
        a.setflags(write=False)
        object.__setattr__(self, "n_qubits", n_qubits)
        object.__setattr__(self, "amplitudes", a)

    def __setattr__(self, *a):
        raise AttributeError("StateVector is immutable")

    @classmethod
    def zeros(cls, n_qubits: int) -> "StateVector":
        a = np.zeros(2**n_qubits, dtype=complex)
        a[0] = 1.0
        return cls(n_qubits, a)

    @classmethod
    def computational(cls, bits: Sequence[int]) -> "StateVector":
        n = len(bits)
        idx = 0
        for b in bits:
            idx = idx * 2 + int(b)
        a = np.zeros(2**n, dtype=complex)
        a[idx] = 1.0
        return cls(n, a)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def overlap(self, other: "StateVector") -> float:
        """|<self|other>|, insensitive to global phase."""
        return float(abs(np.vdot(self.amplitudes, other.amplitudes)))


def apply_gate(state: StateVector, gate: Gate, targets: Sequence[int]) -> StateVector:
    """Apply a gate to the listed target qubits.

    For 2-qubit gates targets[0] supplies the most significant bit of the
    gate's own basis index (the control for CNOT/CY/CZ).
    """
    n = state.n_qubits
    targets = list(targets)
    if len(targets) != gate.arity:
        raise ValueError(f"gate {gate.name} wants {gate.arity} targets, got {len(targets)}")
    if len(set(targets)) != len(targets):
        raise ValueError("duplicate target qubits")
    for q in targets:
        if not 0 <= q < n:
            raise ValueError(f"target {q} out of range for {n} qubits")
    psi = state.amplitudes.reshape([2] * n)
    k = gate.arity
    u = gate.matrix.reshape([2] * (2 * k))
    # einsum subscripts: U[out_axes, in_axes] * psi[..., in_axes, ...]
    letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    psi_sub = list(letters[:n])
    out_sub = list(psi_sub)
    u_sub = []
    for i, q in enumerate(targets):
        u_sub.append(letters[n + i])
        out_sub[q] = letters[n + i]
    for q in targets:
        u_sub.append(psi_sub[q])
    new = np.einsum("".join(u_sub) + "," + "".join(psi_sub) + "->" + "".join(out_sub), u, psi)
    return StateVector(n, new.reshape(-1))


def bell_basis_rotation(state: StateVector, q0: int, q1: int, inverse: bool = False) -> StateVector:
    """Map the computational basis of (q0, q1) onto the Bell basis.

    Forward: H on q0 then CNOT(q0 -> q1), so |00> -> (|00>+|11>)/sqrt2.
    inverse=True applies the adjoint (the Bell measurement rotation).
    """
    h = standard_gate("H")
    cnot = standard_gate("CNOT")
    if inverse:
        state = apply_gate(state, cnot, [q0, q1])
        return apply_gate(state, h, [q0])
    state = apply_gate(state, h, [q0])
    return apply_gate(state, cnot, [q0, q1])


def measure(state: StateVector, qubits: Sequence[int], rng: np.random.Generator):
    """Projectively measure the listed qubits.

    Returns (bits, collapsed_state) with bits ordered like `qubits`.
    Sampling draws one uniform variate and inverts the cumulative
    distribution, so a fixed generator state gives a fixed outcome.
    """
    n = state.n_qubits
    qubits = list(qubits)
    if len(set(qubits)) != len(qubits):
        raise ValueError("duplicate measured qubits")
    for q in qubits:
        if not 0 <= q < n:
            raise ValueError(f"qubit {q} out of range for {n} qubits")
    view = state.amplitudes.reshape([2] * n)
    probs = np.abs(view) ** 2
    others = tuple(q for q in range(n) if q not in qubits)
    pm = probs.sum(axis=others) if others else probs
    # pm axes are the measured qubits in ascending order; put them in
    # caller order before flattening
    srt = sorted(qubits)
    pm = np.transpose(pm, [srt.index(q) for q in qubits])
    flat = pm.reshape(-1)
    cum = np.cumsum(flat)
    u = rng.random() * cum[-1]
    k = int(np.searchsorted(cum, u, side="right"))
    k = min(k, flat.size - 1)
    p = float(flat[k])
    if p < _MIN_BRANCH_PROB:
        raise SimulationFault(f"collapse onto branch with probability {p}")
    m = len(qubits)
    bits = tuple((k >> (m - 1 - i)) & 1 for i in range(m))
    idx: list = [slice(None)] * n
    for q, b in zip(qubits, bits):
        idx[q] = b
    new = np.zeros_like(view)
    new[tuple(idx)] = view[tuple(idx)] / math.sqrt(p)
    return bits, StateVector(n, new.reshape(-1))


class BlochVector(NamedTuple):
    x: float
    y: float
    z: float

    @property
    def r(self) -> float:
        return math.sqrt(self.x**2 + self.y**2 + self.z**2)


def bloch_vector(state, qubit: int) -> BlochVector:
    """Bloch vector of one qubit of a StateVector, density matrix object,
    or raw density matrix array."""
    if isinstance(state, StateVector):
        n = state.n_qubits
        view = np.moveaxis(state.amplitudes.reshape([2] * n), qubit, 0).reshape(2, -1)
        a0, a1 = view[0], view[1]
        r01 = complex(np.sum(a0 * a1.conj()))
        z = float(np.sum(np.abs(a0) ** 2) - np.sum(np.abs(a1) ** 2))
    else:
        m = np.asarray(getattr(state, "matrix", state), dtype=complex)
        n = int(round(math.log2(m.shape[0])))
        view = m.reshape([2] * (2 * n))
        view = np.moveaxis(view, (qubit, n + qubit), (0, 1))
        d = 2 ** (n - 1)
        view = view.reshape(2, 2, d, d)
        red = np.trace(view, axis1=2, axis2=3)
        r01 = complex(red[0, 1])
        z = float((red[0, 0] - red[1, 1]).real)
    v = BlochVector(2 * r01.real, -2 * r01.imag, z)
    if v.r > 1 + 1e-12:
        raise SimulationFault(f"Bloch radius {v.r} exceeds 1")
    return v


# ---------------------------------------------------------------------------
# circuits

@dataclass(frozen=True)
class GateStep:
    gate: Gate
    targets: tuple
    condition: Optional[tuple] = None  # (register, required int value)


@dataclass(frozen=True)
class MeasureStep:
    qubits: tuple
    key: str


class Circuit:
    """An ordered list of gate and measurement steps on n qubits.

    Build with add_gate/add_measure or from_ops; running a circuit never
    mutates it, so one instance may be shared across shots and threads.
    """

    def __init__(self, n_qubits: int):
        if n_qubits < 1:
            raise ValueError("need at least one qubit")
        self.n_qubits = n_qubits
        self.steps: list = []
        self._registers: dict = {}

    def add_gate(self, name: str, targets: Sequence[int], params: Iterable[float] = (),
                 condition: Optional[tuple] = None) -> "Circuit":
        gate = standard_gate(name, *params)
        targets = tuple(int(q) for q in targets)
        if len(targets) != gate.arity:
            raise ValueError(f"gate {name} wants {gate.arity} targets, got {len(targets)}")
        if len(set(targets)) != len(targets):
            raise ValueError("duplicate target qubits")
        for q in targets:
            if not 0 <= q < self.n_qubits:
                raise ValueError(f"target {q} out of range")
        if condition is not None:
            reg, val = condition
            if reg not in self._registers:
                raise ValueError(f"condition register {reg!r} not measured earlier")
            condition = (str(reg), int(val))
        self.steps.append(GateStep(gate, targets, condition))
        return self

    def add_measure(self, qubits: Sequence[int], key: str) -> "Circuit":
        qubits = tuple(int(q) for q in qubits)
        if len(set(qubits)) != len(qubits):
            raise ValueError("duplicate measured qubits")
        for q in qubits:
            if not 0 <= q < self.n_qubits:
                raise ValueError(f"qubit {q} out of range")
        if key in self._registers:
            raise ValueError(f"register {key!r} already used")
        self._registers[key] = len(qubits)
        self.steps.append(MeasureStep(qubits, str(key)))
        return self

    def register_widths(self) -> dict:
        return dict(self._registers)

    def to_ops(self) -> list:
        ops = []
        for s in self.steps:
            if isinstance(s, MeasureStep):
                ops.append({"measure": list(s.qubits), "key": s.key})
            else:
                d = {"gate": s.gate.name, "targets": list(s.targets)}
                if s.gate.params:
                    d["params"] = list(s.gate.params)
                if s.condition is not None:
                    d["condition"] = [s.condition[0], s.condition[1]]
                ops.append(d)
        return ops

    @classmethod
    def from_ops(cls, n_qubits: int, ops: Sequence[dict]) -> "Circuit":
        c = cls(n_qubits)
        for op in ops:
            if "measure" in op:
                c.add_measure(op["measure"], op["key"])
            elif "gate" in op:
                cond = op.get("condition")
                c.add_gate(op["gate"], op["targets"], op.get("params", ()),
                           condition=tuple(cond) if cond else None)
            else:
                raise ValueError(f"unrecognized op {op!r}")
        return c

    def digest(self) -> str:
        blob = json.dumps({"n": self.n_qubits, "ops": self.to_ops()},
                          sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def execute(circuit: Circuit, rng: np.random.Generator):
    """Run one shot. Returns (final StateVector, register map of bitstrings)."""
    state = StateVector.zeros(circuit.n_qubits)
    registers: dict = {}
    for step in circuit.steps:
        if isinstance(step, MeasureStep):
            bits, state = measure(state, step.qubits, rng)
            registers[step.key] = "".join(str(b) for b in bits)
        else:
            if step.condition is not None:
                reg, want = step.condition
                if int(registers[reg], 2) != want:
                    continue
            state = apply_gate(state, step.gate, step.targets)
    return state, registers


@dataclass
class ExperimentRecord:
    """Outcome record of a repeated-shot run."""

    shots: int
    seed: int
    circuit_digest: str
    registers: dict  # register name -> list of per-shot bitstrings

    def qubit_stream(self, key: str, position: int) -> str:
        """All shots of one bit position of a register, as a 0/1 string."""
        return "".join(s[position] for s in self.registers[key])

    def to_json(self) -> str:
        return json.dumps(
            {"shots": self.shots, "seed": self.seed,
             "circuit_digest": self.circuit_digest, "registers": self.registers},
            sort_keys=True, indent=2)


def run_circuit(circuit: Circuit, shots: int, seed: int) -> ExperimentRecord:
    """Run `shots` independent shots from |0...0> with a seeded generator."""
    if shots < 1:
        raise ValueError("shots must be positive")
    rng = _rng(seed)
    names = list(circuit.register_widths())
    registers: dict = {k: [] for k in names}
    for _ in range(shots):
        _, regs = execute(circuit, rng)
        for k in names:
            registers[k].append(regs.get(k, ""))
    return ExperimentRecord(shots, seed, circuit.digest(), registers)


# ---------------------------------------------------------------------------
# circuit catalog

def flip_circuit() -> Circuit:
    """Flip one qubit and measure it."""
    return Circuit(1).add_gate("X", [0]).add_measure([0], "Final state")


def bell_pair_circuit() -> Circuit:
    """Prepare (|00>+|11>)/sqrt2 and measure both qubits together."""
    c = Circuit(2).add_gate("H", [0]).add_gate("CNOT", [0, 1])
    return c.add_measure([0, 1], "Final state")


def exchange_circuit(t: float) -> Circuit:
    """Swap |+> and XPow(t)|0> between two wires with three CNOTs, then
    measure each wire into its own register."""
    c = Circuit(2)
    c.add_gate("H", [0]).add_gate("XPow", [1], (t,))
    c.add_gate("CNOT", [0, 1]).add_gate("CNOT", [1, 0]).add_gate("CNOT", [0, 1])
    c.add_measure([1], "q1").add_measure([0], "q0")
    return c


def teleport_circuit(a: float, b: float, deferred: bool) -> Circuit:
    """Teleport XPow(a), YPow(b) applied to |0> from wire 0 to wire 2.

    deferred=False measures the message and ancilla and applies classically
    controlled X/Z on wire 2; deferred=True keeps the controls quantum.
    """
    c = Circuit(3)
    c.add_gate("XPow", [0], (a,)).add_gate("YPow", [0], (b,))
    c.add_gate("H", [1]).add_gate("CNOT", [1, 2])
    # Bell measurement rotation on (message, ancilla)
    c.add_gate("CNOT", [0, 1]).add_gate("H", [0])
    if deferred:
        c.add_gate("CNOT", [1, 2]).add_gate("CZ", [0, 2])
    else:
        c.add_measure([1], "alice").add_measure([0], "msg")
        c.add_gate("X", [2], condition=("alice", 1))
        c.add_gate("Z", [2], condition=("msg", 1))
    return c


@dataclass
class TeleportResult:
    message_initial: BlochVector
    bob: BlochVector
    message_final: BlochVector


def teleport(message_prep: tuple, deferred: bool, seed: int) -> TeleportResult:
    """Teleport the state XPow(a), YPow(b)|0> and report Bloch vectors."""
    a, b = message_prep
    msg = StateVector.zeros(1)
    msg = apply_gate(msg, standard_gate("XPow", a), [0])
    msg = apply_gate(msg, standard_gate("YPow", b), [0])
    initial = bloch_vector(msg, 0)
    state, _ = execute(teleport_circuit(a, b, deferred), _rng(seed))
    return TeleportResult(initial, bloch_vector(state, 2), bloch_vector(state, 0))


# ---------------------------------------------------------------------------
# text rendering

def render_circuit(circuit: Circuit, wire_names: Optional[Sequence[str]] = None) -> str:
    """Wire-diagram listing of a circuit (informational only)."""
    n = circuit.n_qubits
    rows = 2 * n - 1  # wire rows interleaved with connector rows
    grid: list = [[] for _ in range(rows)]
    for step in circuit.steps:
        col = [""] * rows
        if isinstance(step, MeasureStep):
            top = min(step.qubits)
            for q in step.qubits:
                col[2 * q] = f"M({step.key!r})" if q == top else "M"
            qs = step.qubits
        else:
            g = step.gate
            labels = {
                "CNOT": ("@", "X"), "CX": ("@", "X"), "CY": ("@", "Y"),
                "CZ": ("@", "@"), "SWAP": ("×", "×"),
            }
            if g.arity == 2:
                l0, l1 = labels.get(g.name, (g.label(), g.label()))
                col[2 * step.targets[0]] = l0
                col[2 * step.targets[1]] = l1
            else:
                lab = g.label()
                if step.condition is not None:
                    lab += "?%s" % step.condition[0]
                col[2 * step.targets[0]] = lab
            qs = step.targets
        if len(qs) >= 2:
            lo, hi = min(qs) * 2, max(qs) * 2
            for r in range(lo + 1, hi):
                col[r] = col[r] or ("┼" if r % 2 == 0 else "│")
        width = max(len(s) for s in col)
        for r in range(rows):
            s = col[r]
            if r % 2 == 0:
                grid[r].append(s.ljust(width, "─") if s else "─" * width)
            else:
                grid[r].append(s.ljust(width) if s else " " * width)
    lines = []
    if wire_names is None:
        prefix = [f"{q}: " for q in range(n)]
    else:
        if len(wire_names) != n:
            raise ValueError("need one wire name per qubit")
        prefix = [f"{name}: " for name in wire_names]
    pw = max(len(p) for p in prefix)
    for r in range(rows):
        if r % 2 == 0:
            head = prefix[r // 2].rjust(pw)
            lines.append(head + "───" + "───".join(grid[r]) + "───")
        else:
            body = "   ".join(grid[r])
            if body.strip():
                lines.append(" " * pw + "   " + body + "   ")
    return "\n".join(line.rstrip() for line in lines)
