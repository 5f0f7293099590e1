"""Core circuit IR: reversible gates over indexed qubit lines, line
permutations, and the gate cost model.

Line indices are 0-based with the topmost line = 0. Circuits are immutable
after construction; every transformation returns a new Circuit.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class MustDecomposeError(ValueError):
    """Raised when an operation that requires an NCT-only circuit meets an MCT gate."""


class CapacityError(ValueError):
    """Raised when an operation would exceed its size guard or resource pool."""


class GateKind(Enum):
    NOT = "not"
    CNOT = "cnot"
    TOFFOLI = "toffoli"
    MCT = "mct"
    SWAP = "swap"


_CONTROL_COUNTS = {GateKind.NOT: 0, GateKind.CNOT: 1, GateKind.TOFFOLI: 2, GateKind.SWAP: 1}


@dataclass(frozen=True)
class Gate:
    """One reversible gate: control line indices plus a target line index.

    Controls are stored sorted ascending, so ``controls[0]`` is always the
    lowest-indexed control. A SWAP stores its two exchanged lines as
    ``controls[0]`` and ``target`` with ``controls[0] < target``.
    """

    kind: GateKind
    controls: tuple[int, ...]
    target: int

    def __post_init__(self):
        lines = (*self.controls, self.target)
        if any(q < 0 for q in lines):
            raise ValueError(f"negative line index in {lines}")
        if len(set(lines)) != len(lines):
            raise ValueError(f"gate references a line twice: {lines}")
        controls = tuple(sorted(self.controls))
        target = self.target
        if self.kind is GateKind.SWAP and controls and controls[0] > target:
            controls, target = (target,), controls[0]
        object.__setattr__(self, "controls", controls)
        object.__setattr__(self, "target", target)
        expected = _CONTROL_COUNTS.get(self.kind)
        if expected is not None and len(controls) != expected:
            raise ValueError(f"{self.kind.value} gate takes {expected} controls, got {len(controls)}")
        if self.kind is GateKind.MCT and len(controls) < 3:
            raise ValueError(f"mct gate takes >= 3 controls, got {len(controls)}")

    @classmethod
    def x(cls, target: int) -> "Gate":
        return cls(GateKind.NOT, (), target)

    @classmethod
    def cx(cls, control: int, target: int) -> "Gate":
        return cls(GateKind.CNOT, (control,), target)

    @classmethod
    def ccx(cls, control1: int, control2: int, target: int) -> "Gate":
        return cls(GateKind.TOFFOLI, (control1, control2), target)

    @classmethod
    def mcx(cls, controls, target: int) -> "Gate":
        controls = tuple(controls)
        if len(controls) == 0:
            return cls.x(target)
        if len(controls) == 1:
            return cls.cx(controls[0], target)
        if len(controls) == 2:
            return cls.ccx(controls[0], controls[1], target)
        return cls(GateKind.MCT, controls, target)

    @classmethod
    def swap(cls, a: int, b: int) -> "Gate":
        return cls(GateKind.SWAP, (a,), b)

    def lines(self) -> tuple[int, ...]:
        """All line indices the gate touches, controls first."""
        return (*self.controls, self.target)

    def remap(self, perm) -> "Gate":
        """Relabel every line index through ``perm`` (roles are preserved)."""
        return Gate(self.kind, tuple(perm[c] for c in self.controls), perm[self.target])


@dataclass(frozen=True)
class Line:
    """Per-line metadata: name, optional constant input value, garbage flag."""

    name: str
    constant: int | None = None
    garbage: bool = False


def default_lines(num_lines: int) -> tuple[Line, ...]:
    return tuple(Line(f"x{i}") for i in range(num_lines))


@dataclass(frozen=True)
class Circuit:
    """An ordered gate sequence over ``num_lines`` qubit lines."""

    num_lines: int
    gates: tuple[Gate, ...] = ()
    lines: tuple[Line, ...] = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.num_lines < 1:
            raise ValueError("circuit needs at least one line")
        object.__setattr__(self, "gates", tuple(self.gates))
        lines = default_lines(self.num_lines) if self.lines is None else tuple(self.lines)
        object.__setattr__(self, "lines", lines)
        if len(lines) != self.num_lines:
            raise ValueError(f"{len(lines)} line records for {self.num_lines} lines")
        names = [ln.name for ln in lines]
        if len(set(names)) != len(names):
            raise ValueError("line names must be unique")
        for g in self.gates:
            hi = max(g.lines())
            if hi >= self.num_lines:
                raise ValueError(f"gate touches line {hi} but circuit has {self.num_lines} lines")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def with_gates(self, gates) -> "Circuit":
        return Circuit(self.num_lines, tuple(gates), self.lines)

    def has_mct(self) -> bool:
        return any(g.kind is GateKind.MCT for g in self.gates)


def gate_span(gate: Gate) -> tuple[int, int]:
    """Lowest and highest line index the gate touches."""
    lines = gate.lines()
    return min(lines), max(lines)


# --- line orderings ---------------------------------------------------------
#
# An ordering is a permutation ``perm`` of length N with perm[i] = the new
# index of original line i.


def identity_ordering(num_lines: int) -> tuple[int, ...]:
    return tuple(range(num_lines))


def check_ordering(perm, num_lines: int) -> tuple[int, ...]:
    perm = tuple(perm)
    if len(perm) != num_lines:
        raise ValueError(f"ordering has length {len(perm)}, circuit has {num_lines} lines")
    if sorted(perm) != list(range(num_lines)):
        raise ValueError(f"ordering {perm} is not a permutation of 0..{num_lines - 1}")
    return perm


def inverse_ordering(perm) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def compose_orderings(outer, inner) -> tuple[int, ...]:
    """The ordering that applies ``inner`` first, then ``outer``."""
    return tuple(outer[inner[i]] for i in range(len(inner)))


def apply_ordering(circuit: Circuit, perm) -> Circuit:
    """Relabel every line of the circuit through ``perm``.

    Gate order is unchanged; line metadata moves with its line. Applying an
    ordering and then its inverse restores the original circuit.
    """
    perm = check_ordering(perm, circuit.num_lines)
    new_lines: list[Line | None] = [None] * circuit.num_lines
    for i, line in enumerate(circuit.lines):
        new_lines[perm[i]] = line
    gates = tuple(g.remap(perm) for g in circuit.gates)
    return Circuit(circuit.num_lines, gates, tuple(new_lines))


# --- cost model -------------------------------------------------------------


@dataclass(frozen=True)
class CostModel:
    """Per-gate quantum costs. NOT/CNOT/SWAP values follow the standard
    NCT accounting; Toffoli = 5 is the usual elementary-gate equivalent."""

    not_cost: int = 1
    cnot_cost: int = 1
    toffoli_cost: int = 5
    swap_cost: int = 3

    def gate_cost(self, gate: Gate) -> int:
        if gate.kind is GateKind.NOT:
            return self.not_cost
        if gate.kind is GateKind.CNOT:
            return self.cnot_cost
        if gate.kind is GateKind.TOFFOLI:
            return self.toffoli_cost
        if gate.kind is GateKind.SWAP:
            return self.swap_cost
        raise MustDecomposeError("MCT gates have no direct cost; decompose to NCT first")


DEFAULT_COST_MODEL = CostModel()


def quantum_cost(circuit: Circuit, model: CostModel = DEFAULT_COST_MODEL) -> int:
    """Sum of per-gate costs. MCT gates must be decomposed first."""
    return sum(model.gate_cost(g) for g in circuit.gates)
