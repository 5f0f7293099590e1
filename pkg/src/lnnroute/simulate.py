"""Classical truth-table simulation and equivalence checking.

Every gate in scope (NOT/CNOT/Toffoli/MCT/SWAP) permutes computational basis
states, so circuits are compared exactly by their action on bit vectors.
A basis state is an int whose bit i is the value on line i.
"""

from __future__ import annotations

from .circuit import CapacityError, Circuit, Gate, GateKind, identity_ordering

DEFAULT_MAX_LINES = 20


def apply_gate(gate: Gate, state: int) -> int:
    if gate.kind is GateKind.SWAP:
        a, b = gate.controls[0], gate.target
        bit_a = (state >> a) & 1
        bit_b = (state >> b) & 1
        if bit_a != bit_b:
            state ^= (1 << a) | (1 << b)
        return state
    # NOT/CNOT/Toffoli/MCT: flip target iff every control is 1
    for c in gate.controls:
        if not (state >> c) & 1:
            return state
    return state ^ (1 << gate.target)


def simulate(circuit: Circuit, state: int, max_lines: int = DEFAULT_MAX_LINES) -> int:
    """Run ``circuit`` on one basis state."""
    if circuit.num_lines > max_lines:
        raise CapacityError(f"{circuit.num_lines} lines exceeds the simulation guard of {max_lines}")
    if not 0 <= state < (1 << circuit.num_lines):
        raise ValueError(f"state {state} out of range for {circuit.num_lines} lines")
    for gate in circuit.gates:
        state = apply_gate(gate, state)
    return state


def truth_table(circuit: Circuit, max_lines: int = DEFAULT_MAX_LINES) -> list[int]:
    """Output state for every basis input, in input order."""
    return [simulate(circuit, x, max_lines) for x in range(1 << circuit.num_lines)]


def equivalent(
    reference: Circuit,
    candidate: Circuit,
    line_map=None,
    ancilla_lines=None,
    max_lines: int = DEFAULT_MAX_LINES,
) -> bool:
    """Exhaustively check that ``candidate`` computes the same function as
    ``reference`` on the mapped lines.

    ``line_map[i]`` is the candidate line carrying reference line i (defaults
    to identity). Candidate lines outside the map are ancillas: they are fed 0
    and ignored on output. ``ancilla_lines`` may restrict that set explicitly;
    it must not overlap the map.
    """
    if line_map is None:
        line_map = identity_ordering(reference.num_lines)
    line_map = tuple(line_map)
    if len(line_map) != reference.num_lines:
        raise ValueError(f"line map covers {len(line_map)} lines, reference has {reference.num_lines}")
    mapped = set(line_map)
    if len(mapped) != len(line_map) or any(not 0 <= q < candidate.num_lines for q in line_map):
        raise ValueError(f"line map {line_map} is not injective into the candidate's lines")
    spare = set(range(candidate.num_lines)) - mapped
    if ancilla_lines is not None and set(ancilla_lines) != spare:
        raise ValueError(f"ancilla lines {sorted(spare)} expected, got {sorted(set(ancilla_lines))}")
    if reference.num_lines > max_lines or candidate.num_lines > max_lines:
        raise CapacityError(f"equivalence check exceeds the {max_lines}-line guard")

    for x in range(1 << reference.num_lines):
        mapped_in = 0
        for i in range(reference.num_lines):
            if (x >> i) & 1:
                mapped_in |= 1 << line_map[i]
        out_ref = simulate(reference, x, max_lines)
        out_cand = simulate(candidate, mapped_in, max_lines)
        for i in range(reference.num_lines):
            if (out_ref >> i) & 1 != (out_cand >> line_map[i]) & 1:
                return False
    return True
