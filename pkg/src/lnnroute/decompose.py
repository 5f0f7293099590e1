"""Rewrite multiple-controlled Toffoli gates into plain Toffoli networks.

A C^kNOT with k >= 3 controls becomes a V-chain over k-2 clean ancilla
lines: a compute cascade of Toffolis ANDing the controls pairwise into the
ancillas, one Toffoli firing the target, and the mirrored cascade restoring
every ancilla to 0. Total: 2(k-2)+1 Toffolis per gate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import CapacityError, Circuit, Gate, GateKind, Line


@dataclass(frozen=True)
class DecompositionPlan:
    """Record of one MCT gate's replacement."""

    gate_index: int
    control_count: int
    ancillas_used: tuple[int, ...]
    gates: tuple[Gate, ...]


def decompose_mct(gate: Gate, ancilla_pool) -> list[Gate]:
    """V-chain replacement of one MCT gate.

    ``ancilla_pool`` must supply at least k-2 lines, distinct from the gate's
    own lines and initialized to 0; the emitted network leaves them at 0.
    Controls are consumed in ascending index order.
    """
    if gate.kind is not GateKind.MCT:
        raise ValueError(f"decompose_mct expects an MCT gate, got {gate.kind.value}")
    k = len(gate.controls)
    needed = k - 2
    ancillas = list(dict.fromkeys(ancilla_pool))[:needed]
    if len(ancillas) < needed:
        raise CapacityError(f"need {needed} ancilla lines for {k} controls, pool has {len(ancillas)}")
    used = set(gate.lines())
    clash = used.intersection(ancillas)
    if clash:
        raise ValueError(f"ancilla lines {sorted(clash)} overlap the gate's own lines")

    ctrl = gate.controls
    compute = [Gate.ccx(ctrl[0], ctrl[1], ancillas[0])]
    for i in range(2, k - 1):
        compute.append(Gate.ccx(ctrl[i], ancillas[i - 2], ancillas[i - 1]))
    fire = Gate.ccx(ctrl[k - 1], ancillas[-1], gate.target)
    return compute + [fire] + compute[::-1]


def decompose_with_plans(circuit: Circuit) -> tuple[Circuit, list[DecompositionPlan]]:
    """Decompose every MCT gate, returning the new circuit and per-gate plans.

    Ancilla lines are appended after the existing lines, sized to the largest
    control count in the circuit and shared across gates (the uncompute
    cascade returns them to 0, so reuse is sound).
    """
    mct_widths = [len(g.controls) for g in circuit.gates if g.kind is GateKind.MCT]
    if not mct_widths:
        return circuit, []

    n_anc = max(mct_widths) - 2
    ancillas = tuple(range(circuit.num_lines, circuit.num_lines + n_anc))
    lines = circuit.lines + _ancilla_lines(n_anc, {ln.name for ln in circuit.lines})

    gates: list[Gate] = []
    plans: list[DecompositionPlan] = []
    for index, gate in enumerate(circuit.gates):
        if gate.kind is not GateKind.MCT:
            gates.append(gate)
            continue
        emitted = decompose_mct(gate, ancillas)
        k = len(gate.controls)
        plans.append(DecompositionPlan(index, k, ancillas[: k - 2], tuple(emitted)))
        gates.extend(emitted)
    return Circuit(circuit.num_lines + n_anc, tuple(gates), lines), plans


def decompose_circuit(circuit: Circuit) -> Circuit:
    """Decompose every MCT gate; NCT-only circuits pass through unchanged."""
    return decompose_with_plans(circuit)[0]


def _ancilla_lines(count: int, taken: set[str]) -> tuple[Line, ...]:
    lines = []
    i = 0
    while len(lines) < count:
        name = f"anc{i}"
        i += 1
        if name not in taken:
            lines.append(Line(name, constant=0))
    return tuple(lines)
