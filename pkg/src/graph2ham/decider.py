"""Resolve a local Hamiltonian promise instance into case 1, case 2, or an
explicit promise violation.

Case 1: some eigenvalue is <= a. Case 2: every eigenvalue exceeds b. For
reduction-produced instances the spectrum is integral and (a, b] contains
no integer, so a violation can never occur; on arbitrary inputs it is
reported rather than treated as an error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Assignment
from .operators import EnergyValue
from .oracles import dense_min_eigenvalue, min_energy

CASE1 = "case1"
CASE2 = "case2"
PROMISE_VIOLATION = "promise_violation"

FLOAT_GUARD = 1e-9


@dataclass(frozen=True)
class Decision:
    outcome: str
    min_energy: EnergyValue
    witness: Assignment | None


def decide(hamiltonian, promise, workers=None, max_enum_qubits=28,
           max_dense_qubits=12):
    """Classify an instance against its (a, b) thresholds.

    Diagonal Hamiltonians are enumerated and, when the spectrum is exactly
    quarter-integral, compared in integer quarters; everything else falls
    back to floats with a small guard band.
    """
    if hamiltonian.is_diagonal:
        energy, witness = min_energy(
            hamiltonian, workers=workers, max_qubits=max_enum_qubits
        )
    else:
        energy = EnergyValue.from_float(
            dense_min_eigenvalue(hamiltonian, max_qubits=max_dense_qubits)
        )
        witness = None
    if energy.is_exact:
        if energy.quarters <= promise.a_quarters:
            outcome = CASE1
        elif energy.quarters > promise.b_quarters:
            outcome = CASE2
        else:
            outcome = PROMISE_VIOLATION
    else:
        value = energy.float_value
        if value <= promise.a + FLOAT_GUARD:
            outcome = CASE1
        elif value > promise.b + FLOAT_GUARD:
            outcome = CASE2
        else:
            outcome = PROMISE_VIOLATION
    return Decision(outcome=outcome, min_energy=energy, witness=witness)
