"""SWAP-pair accounting for linear-nearest-neighbor conversion.

A gate whose lines are not adjacent needs SWAP gates to bring them together;
each required SWAP comes as a pair (one before the gate, its mirror after),
so line positions are restored once the gate has fired. This module counts
the pairs per gate by the case rules below, inserts the concrete SWAPs, and
checks LNN form.

Counting rules (lines indexed top=0; for a Toffoli ctrl1 < ctrl2):
    NOT                          0
    CNOT / SWAP (a, b)           |a - b| - 1   (intermediate lines)
    Toffoli, target < ctrl1 < ctrl2:
        ctrl1 - target > 1   ->  (ctrl1-target-1) + (ctrl2-target-2)
        elif ctrl2 - ctrl1 > 1 -> ctrl2 - ctrl1 - 1, else 0
    Toffoli, ctrl1 < target < ctrl2:
        (target-ctrl1-1 if > 0) + (ctrl2-target-1 if > 0)
    Toffoli, ctrl1 < ctrl2 < target:
        target - ctrl2 > 1   ->  (target-ctrl2-1) + (target-ctrl1-2)
        elif ctrl2 - ctrl1 > 1 -> ctrl2 - ctrl1 - 1, else 0

The counts are realized by walking each control next to the target, one
adjacent SWAP per step, and mirroring the walk afterwards. A Toffoli spanning
three consecutive lines counts 0 even with the target on an end; pass
``strict=True`` to is_lnn to demand target-in-the-middle instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit, Gate, GateKind, MustDecomposeError


@dataclass(frozen=True)
class SwapCount:
    """SWAP-pair tally; each pair is two SWAP gates of quantum cost 3 each."""

    pairs: int

    @property
    def swap_gates(self) -> int:
        return 2 * self.pairs

    @property
    def swap_quantum_cost(self) -> int:
        return 3 * self.swap_gates

    def __add__(self, other: "SwapCount") -> "SwapCount":
        return SwapCount(self.pairs + other.pairs)


def swap_pairs_for_gate(gate: Gate) -> SwapCount:
    """SWAP pairs needed to run one gate on adjacent lines."""
    return SwapCount(_pairs(gate))


def circuit_swap_pairs(circuit: Circuit) -> SwapCount:
    """Total SWAP pairs over all gates, counted gate by gate."""
    return SwapCount(sum(_pairs(g) for g in circuit.gates))


def toffoli_pairs(ctrl1: int, ctrl2: int, target: int) -> int:
    """The Toffoli case rules on raw line indices; control order is free."""
    c1, c2, t = min(ctrl1, ctrl2), max(ctrl1, ctrl2), target
    if t < c1:  # case 1: target on top
        if c1 - t > 1:
            return (c1 - t - 1) + (c2 - t - 2)
        if c2 - c1 > 1:
            return c2 - c1 - 1
        return 0
    if t < c2:  # case 2: target in the middle
        return max(t - c1 - 1, 0) + max(c2 - t - 1, 0)
    # case 3: target at the bottom
    if t - c2 > 1:
        return (t - c2 - 1) + (t - c1 - 2)
    if c2 - c1 > 1:
        return c2 - c1 - 1
    return 0


def _pairs(gate: Gate) -> int:
    if gate.kind is GateKind.MCT:
        raise MustDecomposeError("SWAP counting is defined on NCT gates; decompose MCT first")
    if gate.kind is GateKind.NOT:
        return 0
    if gate.kind in (GateKind.CNOT, GateKind.SWAP):
        return abs(gate.controls[0] - gate.target) - 1
    return toffoli_pairs(gate.controls[0], gate.controls[1], gate.target)


def _walk(src: int, dst: int) -> list[Gate]:
    """Adjacent SWAPs carrying the value at ``src`` to ``dst``."""
    if dst < src:
        return [Gate.swap(p - 1, p) for p in range(src, dst, -1)]
    return [Gate.swap(p, p + 1) for p in range(src, dst)]


def _movement_plan(gate: Gate) -> tuple[list[Gate], Gate]:
    """Pre-gate SWAPs plus the gate relocated to the positions they produce."""
    if gate.kind is GateKind.NOT:
        return [], gate
    if gate.kind in (GateKind.CNOT, GateKind.SWAP):
        a, t = gate.controls[0], gate.target
        # walk the first line next to the second, on its own side
        dst = t - 1 if a < t else t + 1
        return _walk(a, dst), Gate(gate.kind, (dst,), t)
    c1, c2 = gate.controls
    t = gate.target
    if c1 < t < c2:
        swaps = _walk(c1, t - 1) + _walk(c2, t + 1)
        return swaps, Gate.ccx(t - 1, t + 1, t)
    if t < c1:
        # walk ctrl1 up first so ctrl2 never crosses it
        swaps = _walk(c1, t + 1) + _walk(c2, t + 2)
        return swaps, Gate.ccx(t + 1, t + 2, t)
    swaps = _walk(c2, t - 1) + _walk(c1, t - 2)
    return swaps, Gate.ccx(t - 2, t - 1, t)


def insert_swaps(circuit: Circuit) -> Circuit:
    """Rewrite the circuit into LNN form.

    Every gate needing s pairs gets exactly s SWAPs before it and the same s
    SWAPs mirrored after it, restoring line positions; gates already on
    adjacent lines pass through untouched.
    """
    out: list[Gate] = []
    for gate in circuit.gates:
        if gate.kind is GateKind.MCT:
            raise MustDecomposeError("cannot make an MCT gate nearest-neighbor; decompose first")
        swaps, moved = _movement_plan(gate)
        assert len(swaps) == _pairs(gate)
        out.extend(swaps)
        out.append(moved)
        out.extend(reversed(swaps))
    return circuit.with_gates(out)


def is_lnn(circuit: Circuit, strict: bool = False) -> bool:
    """True iff every gate acts on adjacent lines only.

    A Toffoli on three consecutive lines passes even with its target on an
    end, matching the counting rules; ``strict=True`` additionally requires
    the target between the controls. MCT gates are never in LNN form.
    """
    for gate in circuit.gates:
        if gate.kind is GateKind.MCT:
            return False
        if _pairs(gate) != 0:
            return False
        if strict and gate.kind is GateKind.TOFFOLI:
            c1, c2 = gate.controls
            if not (c1 == gate.target - 1 and c2 == gate.target + 1):
                return False
    return True
