"""Vectorized numpy fallback for the exhaustive diagonal energy scan.

Shares its call signature with the compiled kernel so the two are
interchangeable. Terms arrive flattened: `shifts` holds the right-shift
amount (n - q) for every term qubit, `term_ptr` delimits terms inside it,
and `diag`/`diag_ptr` hold the concatenated diagonal entries.
"""

import numpy as np

NAME = "pure"


def _energies(start, stop, shifts, term_ptr, diag, diag_ptr, dtype):
    if stop <= start:
        raise ValueError("empty scan range")
    idx = np.arange(start, stop, dtype=np.int64)
    energy = np.zeros(idx.shape[0], dtype=dtype)
    for j in range(term_ptr.shape[0] - 1):
        sub = np.zeros(idx.shape[0], dtype=np.int64)
        for i in range(term_ptr[j], term_ptr[j + 1]):
            sub = (sub << 1) | ((idx >> int(shifts[i])) & 1)
        energy += diag[int(diag_ptr[j]) : int(diag_ptr[j + 1])][sub]
    return energy


def scan_min_int(start, stop, shifts, term_ptr, diag, diag_ptr):
    """Minimum integer energy over basis indices [start, stop) and the
    first index attaining it."""
    energy = _energies(start, stop, shifts, term_ptr, diag, diag_ptr, np.int64)
    k = int(np.argmin(energy))
    return int(energy[k]), start + k


def scan_min_float(start, stop, shifts, term_ptr, diag, diag_ptr):
    """Float variant for diagonal terms with non-integer entries."""
    energy = _energies(start, stop, shifts, term_ptr, diag, diag_ptr, np.float64)
    k = int(np.argmin(energy))
    return float(energy[k]), start + k
