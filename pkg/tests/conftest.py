import random
from pathlib import Path

import pytest

from lnnroute import Circuit, Gate

FIXTURES = Path(__file__).parent / "fixtures"
REVLIB = FIXTURES / "revlib"
BAD = FIXTURES / "bad"


@pytest.fixture
def revlib_dir() -> Path:
    return REVLIB


def fixture_text(name: str) -> str:
    return (REVLIB / name).read_text(encoding="utf-8")


def random_nct_circuit(rng: random.Random, num_lines: int, num_gates: int,
                       allow_swap: bool = False) -> Circuit:
    """Seeded random circuit over the NCT (+ optional SWAP) library."""
    gates = []
    for _ in range(num_gates):
        roll = rng.random()
        if roll < 0.15 or num_lines < 2:
            gates.append(Gate.x(rng.randrange(num_lines)))
        elif roll < 0.55 or num_lines < 3:
            c, t = rng.sample(range(num_lines), 2)
            gates.append(Gate.cx(c, t))
        elif allow_swap and roll < 0.65:
            a, b = rng.sample(range(num_lines), 2)
            gates.append(Gate.swap(a, b))
        else:
            c1, c2, t = rng.sample(range(num_lines), 3)
            gates.append(Gate.ccx(c1, c2, t))
    return Circuit(num_lines, tuple(gates))
