"""Dense complex matrix primitives shared by every other module.

Matrices are plain ``numpy.ndarray`` objects with dtype ``complex128``.
All public index arguments are 1-based; 0-based storage never leaks out.
Determinants go through LAPACK's partially pivoted LU (``numpy.linalg.det``),
and the principal-minor expansion provides the independent combinatorial
route to ``det(1 + A)`` for cross checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

#: Largest side length accepted by :func:`principal_minor_expansion`.
#: The expansion has 2**n terms, so this is an oracle-scale cap, not a
#: performance tuning knob.
EXPANSION_CAP = 10


class ExpansionLimitError(ValueError):
    """Raised when a principal-minor expansion is requested above the cap."""


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a square complex matrix and validate its entries."""
    A = np.asarray(a, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if A.size and not np.all(np.isfinite(A.view(float))):
        raise ValueError("matrix entries must be finite")
    return A


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing 1-based row/column indices into an n x n matrix.

    The empty index set is allowed; it selects the 0 x 0 block whose
    determinant is 1 by convention.
    """

    indices: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        if self.n < 0:
            raise ValueError("ambient size must be non-negative")
        prev = 0
        for i in self.indices:
            if i <= prev:
                raise ValueError(f"indices must be strictly increasing, got {self.indices}")
            prev = i
        if self.indices and (self.indices[0] < 1 or self.indices[-1] > self.n):
            raise IndexError(f"indices {self.indices} out of range for ambient size {self.n}")

    def __len__(self) -> int:
        return len(self.indices)

    def zero_based(self) -> np.ndarray:
        return np.array(self.indices, dtype=int) - 1


def _as_index_array(idx, n: int) -> np.ndarray:
    if isinstance(idx, IndexSet):
        if idx.n != n:
            raise IndexError(f"index set built for size {idx.n}, matrix has size {n}")
        return idx.zero_based()
    return IndexSet(tuple(idx), n).zero_based()


def submatrix(A, rows, cols) -> np.ndarray:
    """Extract ``A[rows, cols]`` with 1-based strictly increasing index sets."""
    A = np.asarray(A, dtype=complex)
    r = _as_index_array(rows, A.shape[0])
    c = _as_index_array(cols, A.shape[1])
    return A[np.ix_(r, c)]


def principal_block(A, k: int) -> np.ndarray:
    """The top-left ``k x k`` block, i.e. rows and columns 1..k."""
    A = np.asarray(A, dtype=complex)
    if k < 0 or k > min(A.shape):
        raise IndexError(f"principal block size {k} out of range for shape {A.shape}")
    return A[:k, :k]


def reversal_matrix(n: int) -> np.ndarray:
    """The permutation with ones on the antidiagonal."""
    return np.eye(n)[::-1].astype(complex)


def antitranspose(A) -> np.ndarray:
    """Reflect ``A`` across its antidiagonal.

    For an ``m x n`` input the result is ``n x m`` with entry ``(i, j)``
    taken from ``(m + 1 - j, n + 1 - i)`` (1-based).  On square matrices
    this is the involutive anti-automorphism ``A -> J A^T J``.
    """
    A = np.asarray(A, dtype=complex)
    return A.T[::-1, ::-1].copy()


def conj_antitranspose(A) -> np.ndarray:
    """Antitranspose of the conjugate transpose.

    For ``m x n`` input the result is again ``m x n``; entry ``(i, j)`` is
    the conjugate of ``A[m + 1 - i, n + 1 - j]`` (1-based).
    """
    return antitranspose(np.conj(np.asarray(A, dtype=complex)).T)


def signature_matrix(runs: Sequence[int]) -> np.ndarray:
    """Diagonal +/-1 matrix with alternating sign runs starting at -1.

    ``runs = (a, b, c, ...)`` produces ``a`` leading ``-1`` entries, then
    ``b`` entries ``+1``, then ``c`` entries ``-1``, and so on.  A leading
    run of length 0 yields the identity.
    """
    diag = []
    sign = -1.0
    for r in runs:
        r = int(r)
        if r < 0:
            raise ValueError(f"run lengths must be non-negative, got {runs}")
        diag.extend([sign] * r)
        sign = -sign
    return np.diag(np.array(diag, dtype=complex))


def leading_signature(n: int, k: int) -> np.ndarray:
    """The ``n x n`` diagonal matrix flipping the sign of the first k rows."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return signature_matrix((k, n - k))


def det(A) -> complex:
    """Determinant through partially pivoted LU, as a Python complex."""
    A = as_matrix(A)
    if A.shape[0] == 0:
        return 1.0 + 0.0j
    return complex(np.linalg.det(A))


def principal_minor_terms(A) -> Iterator[tuple[tuple[int, ...], complex]]:
    """Yield ``(alpha, det A[alpha, alpha])`` over all index sets.

    Index sets are 1-based and enumerated in order of size, lexicographically
    within each size, starting with the empty set (whose minor is 1).
    """
    A = as_matrix(A)
    n = A.shape[0]
    yield (), 1.0 + 0.0j
    for size in range(1, n + 1):
        for alpha in itertools.combinations(range(n), size):
            ix = np.array(alpha)
            minor = complex(np.linalg.det(A[np.ix_(ix, ix)]))
            yield tuple(i + 1 for i in alpha), minor


def principal_minor_expansion(A, cap: int = EXPANSION_CAP) -> complex:
    """``det(1 + A)`` as the sum of all principal minors of ``A``.

    The sum has 2**n terms (the empty set contributes 1), so the side
    length is capped; above the cap the caller should evaluate
    ``det(1 + A)`` directly.
    """
    A = as_matrix(A)
    n = A.shape[0]
    if n > cap:
        raise ExpansionLimitError(
            f"matrix size {n} exceeds the expansion cap {cap}; use det(1 + A) directly"
        )
    total = 1.0 + 0.0j
    for size in range(1, n + 1):
        subsets = list(itertools.combinations(range(n), size))
        stack = np.empty((len(subsets), size, size), dtype=complex)
        for t, alpha in enumerate(subsets):
            ix = np.array(alpha)
            stack[t] = A[np.ix_(ix, ix)]
        total += complex(np.linalg.det(stack).sum())
    return total


def max_abs(A) -> float:
    A = np.asarray(A)
    return float(np.abs(A).max()) if A.size else 0.0


# --- JSON form ------------------------------------------------------------
#
# Matrices travel as {"n": int, "entries": [[[re, im], ...], ...]} row-major.

def complex_to_pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def pair_to_complex(pair) -> complex:
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ValueError(f"complex entries must be [re, im] pairs, got {pair!r}")
    return complex(float(pair[0]), float(pair[1]))


def matrix_to_json(A) -> dict:
    A = as_matrix(A)
    return {
        "n": A.shape[0],
        "entries": [[complex_to_pair(z) for z in row] for row in A],
    }


def matrix_from_json(obj) -> np.ndarray:
    if not isinstance(obj, dict) or "n" not in obj or "entries" not in obj:
        raise ValueError('matrix JSON must carry fields "n" and "entries"')
    n = int(obj["n"])
    rows = obj["entries"]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f'field "entries" must be an {n} x {n} grid')
    A = np.array([[pair_to_complex(z) for z in row] for row in rows], dtype=complex)
    return as_matrix(A)


def rectangular_from_json(rows, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Parse a rectangular [[re, im]] grid; used for coordinate payloads."""
    A = np.array([[pair_to_complex(z) for z in row] for row in rows], dtype=complex)
    if A.size == 0:
        A = A.reshape(shape if shape is not None else (0, 0))
    if shape is not None and A.shape != tuple(shape):
        raise ValueError(f"payload block has shape {A.shape}, expected {tuple(shape)}")
    return A


def rectangular_to_json(A) -> list:
    A = np.asarray(A, dtype=complex)
    return [[complex_to_pair(z) for z in row] for row in A]
