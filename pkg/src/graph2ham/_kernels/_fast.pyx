# cython: boundscheck=False, wraparound=False, initializedcheck=False
# cython: cdivision=True, language_level=3
"""Compiled inner loop for the exhaustive diagonal energy scan.

Same flattened-term layout as the pure backend; releases the GIL so the
caller can fan chunks out across threads.
"""

from libc.stdint cimport int64_t

NAME = "fast"


def scan_min_int(long long start, long long stop,
                 const int64_t[::1] shifts, const int64_t[::1] term_ptr,
                 const int64_t[::1] diag, const int64_t[::1] diag_ptr):
    """Minimum integer energy over basis indices [start, stop) and the
    first index attaining it."""
    cdef Py_ssize_t nterms = term_ptr.shape[0] - 1
    cdef long long idx
    cdef int64_t energy, sub, best
    cdef long long best_idx = start
    cdef Py_ssize_t j, i
    if stop <= start:
        raise ValueError("empty scan range")
    best = 0x7fffffffffffffff
    with nogil:
        for idx in range(start, stop):
            energy = 0
            for j in range(nterms):
                sub = 0
                for i in range(term_ptr[j], term_ptr[j + 1]):
                    sub = (sub << 1) | ((idx >> shifts[i]) & 1)
                energy += diag[diag_ptr[j] + sub]
            if energy < best:
                best = energy
                best_idx = idx
    return best, best_idx
