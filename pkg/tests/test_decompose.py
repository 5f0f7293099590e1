import random

import pytest

from lnnroute import (
    CapacityError,
    Circuit,
    Gate,
    GateKind,
    Line,
    decompose_circuit,
    decompose_mct,
    decompose_with_plans,
    equivalent,
    load_real,
    simulate,
)

from conftest import REVLIB, random_nct_circuit


class TestDecomposeMct:
    def test_four_controls_needs_five_toffolis(self):
        gates = decompose_mct(Gate.mcx([0, 1, 2, 3], 4), [5, 6])
        assert len(gates) == 5
        assert all(g.kind is GateKind.TOFFOLI for g in gates)

    def test_three_controls_needs_three_toffolis(self):
        gates = decompose_mct(Gate.mcx([0, 1, 2], 3), [4])
        assert len(gates) == 3

    @pytest.mark.parametrize("k", range(3, 9))
    def test_gate_count_law(self, k):
        gate = Gate.mcx(range(k), k)
        pool = range(k + 1, k + 1 + (k - 2))
        assert len(decompose_mct(gate, pool)) == 2 * (k - 2) + 1

    def test_uncompute_mirrors_compute(self):
        gates = decompose_mct(Gate.mcx([0, 1, 2, 3], 4), [5, 6])
        assert gates[0] == gates[-1]
        assert gates[1] == gates[-2]

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_truth_table_equivalence_with_clean_ancillas(self, k):
        gate = Gate.mcx(range(k), k)
        ancillas = tuple(range(k + 1, k + 1 + (k - 2)))
        reference = Circuit(k + 1, (gate,))
        network = Circuit(k + 1 + (k - 2), tuple(decompose_mct(gate, ancillas)))
        assert equivalent(reference, network)

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_ancillas_restored_for_every_basis_state(self, k):
        # compute/uncompute are inverse, so restoration holds even for dirty ancillas
        gate = Gate.mcx(range(k), k)
        total = k + 1 + (k - 2)
        ancillas = tuple(range(k + 1, total))
        network = Circuit(total, tuple(decompose_mct(gate, ancillas)))
        anc_mask = sum(1 << a for a in ancillas)
        for x in range(1 << total):
            assert simulate(network, x) & anc_mask == x & anc_mask

    def test_insufficient_pool(self):
        with pytest.raises(CapacityError, match="ancilla"):
            decompose_mct(Gate.mcx([0, 1, 2, 3], 4), [5])

    def test_pool_overlapping_gate(self):
        with pytest.raises(ValueError, match="overlap"):
            decompose_mct(Gate.mcx([0, 1, 2], 3), [2])

    def test_not_an_mct(self):
        with pytest.raises(ValueError, match="MCT"):
            decompose_mct(Gate.ccx(0, 1, 2), [3])


class TestDecomposeCircuit:
    def test_nct_only_passes_through(self):
        rng = random.Random(31)
        c = random_nct_circuit(rng, 5, 10, allow_swap=True)
        assert decompose_circuit(c) == c

    def test_single_c4not(self):
        c = Circuit(5, (Gate.mcx([0, 1, 2, 3], 4),))
        out = decompose_circuit(c)
        assert out.num_lines == 7
        assert len(out.gates) == 5
        assert not out.has_mct()

    def test_ancillas_shared_across_gates(self):
        c = Circuit(6, (Gate.mcx([0, 1, 2, 3, 4], 5), Gate.mcx([0, 1, 2], 3)))
        out, plans = decompose_with_plans(c)
        assert out.num_lines == 6 + 3  # max(k) - 2, not the sum
        assert plans[0].ancillas_used == (6, 7, 8)
        assert plans[1].ancillas_used == (6,)
        assert [len(p.gates) for p in plans] == [7, 3]

    def test_ancilla_line_metadata(self):
        c = Circuit(4, (Gate.mcx([0, 1, 2], 3),))
        out = decompose_circuit(c)
        anc = out.lines[4]
        assert anc.constant == 0
        assert not anc.garbage

    def test_ancilla_names_avoid_collisions(self):
        lines = (Line("anc0"), Line("a"), Line("b"), Line("c"))
        c = Circuit(4, (Gate.mcx([1, 2, 3], 0),), lines)
        out = decompose_circuit(c)
        names = [ln.name for ln in out.lines]
        assert len(set(names)) == len(names)

    def test_functional_equivalence_mixed_circuits(self):
        rng = random.Random(32)
        for _ in range(15):
            n = rng.randint(4, 6)
            gates = []
            for _ in range(rng.randint(1, 8)):
                if rng.random() < 0.4:
                    k = rng.randint(3, n - 1)
                    qs = rng.sample(range(n), k + 1)
                    gates.append(Gate.mcx(qs[:-1], qs[-1]))
                else:
                    a, b = rng.sample(range(n), 2)
                    gates.append(Gate.cx(a, b))
            c = Circuit(n, tuple(gates))
            out = decompose_circuit(c)
            assert not out.has_mct()
            assert equivalent(c, out)

    def test_pinned_bdd_benchmark_is_already_nct(self):
        c = load_real(REVLIB / "4mod5-bdd_287.real")
        out = decompose_circuit(c)
        assert out is c
        assert (out.num_lines, len(out.gates)) == (7, 8)
