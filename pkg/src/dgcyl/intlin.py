"""Exact integer linear algebra: Smith form, solving, kernels, cohomology.

Matrices are numpy arrays of dtype ``object`` holding Python ints, so
entries never overflow.  Elimination works on nested lists internally.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def as_int_matrix(a, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Coerce ``a`` to a 2-d object array of Python ints."""
    if shape is not None and (a is None or np.size(a) == 0):
        return np.zeros(shape, dtype=object)
    m = np.array(a, dtype=object)
    if m.ndim == 1:
        m = m.reshape(1, -1) if m.size else np.zeros((0, 0), dtype=object)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got ndim={m.ndim}")
    if shape is not None and m.shape != shape:
        raise ValueError(f"matrix has shape {m.shape}, expected {shape}")
    return np.vectorize(int, otypes=[object])(m) if m.size else m.astype(object)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)


def eye(n: int) -> np.ndarray:
    m = zeros(n, n)
    for k in range(n):
        m[k, k] = 1
    return m


def _to_lists(a: np.ndarray) -> list[list[int]]:
    return [[int(x) for x in row] for row in a]


def _identity_lists(n: int) -> list[list[int]]:
    return [[1 if r == c else 0 for c in range(n)] for r in range(n)]


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == S`` with ``U``, ``V`` unimodular and ``S`` diagonal."""

    U: np.ndarray
    S: np.ndarray
    V: np.ndarray

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        n = min(self.S.shape)
        return tuple(int(self.S[k, k]) for k in range(n) if self.S[k, k] != 0)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def smith(a) -> SmithDecomposition:
    """Smith normal form with deterministic pivoting.

    At each stage the pivot is the nonzero entry of smallest absolute value
    in the remaining block, ties broken by row-major position.
    """
    A = as_int_matrix(a)
    m, n = A.shape
    S = _to_lists(A)
    U = _identity_lists(m)
    V = _identity_lists(n)

    def swap_rows(i, j):
        if i != j:
            S[i], S[j] = S[j], S[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in S:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        # row[dst] += c * row[src]
        S[dst] = [x + c * y for x, y in zip(S[dst], S[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in S:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def pick_pivot(t):
        best = None
        for r in range(t, m):
            for c in range(t, n):
                x = S[r][c]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), r, c)
        return best

    t = 0
    while t < min(m, n):
        best = pick_pivot(t)
        if best is None:
            break
        _, r, c = best
        swap_rows(t, r)
        swap_cols(t, c)
        while True:
            p = S[t][t]
            dirty = False
            for r in range(t + 1, m):
                if S[r][t]:
                    add_row(t, r, -(S[r][t] // p))
                    dirty = dirty or S[r][t] != 0
            for c in range(t + 1, n):
                if S[t][c]:
                    add_col(t, c, -(S[t][c] // p))
                    dirty = dirty or S[t][c] != 0
            if dirty:
                # a remainder survived: move the smallest one into the pivot slot
                best = None
                for r in range(t, m):
                    if S[r][t] and (best is None or abs(S[r][t]) < best[0]):
                        best = (abs(S[r][t]), r, t)
                for c in range(t + 1, n):
                    if S[t][c] and abs(S[t][c]) < best[0]:
                        best = (abs(S[t][c]), t, c)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            # divisibility of the remaining block by the pivot
            bad = next(((r, c) for r in range(t + 1, m) for c in range(t + 1, n)
                        if S[r][c] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    return SmithDecomposition(as_int_matrix(U, (m, m)), as_int_matrix(S, (m, n)),
                              as_int_matrix(V, (n, n)))


def _vec(b, n: int) -> np.ndarray:
    v = np.array(list(b), dtype=object).reshape(-1)
    if v.shape[0] != n:
        raise ValueError(f"vector of length {v.shape[0]}, expected {n}")
    return v


def solve(a, b, smith_form: SmithDecomposition | None = None) -> list[int] | None:
    """An integer ``x`` with ``A @ x == b``, or ``None`` if none exists.

    The returned solution is the particular one read off the Smith form
    (free coordinates set to zero), so ``b == 0`` yields ``x == 0``.
    """
    A = as_int_matrix(a)
    m, n = A.shape
    bv = _vec(b, m)
    snf = smith_form or smith(A)
    c = snf.U @ bv if m else bv
    y = [0] * n
    for k in range(m):
        s = snf.S[k, k] if k < n else 0
        ck = int(c[k])
        if s:
            if ck % s:
                return None
            y[k] = ck // s
        elif ck:
            return None
    x = snf.V @ np.array(y, dtype=object) if n else np.zeros(0, dtype=object)
    return [int(v) for v in x]


def kernel_basis(a) -> list[list[int]]:
    """A Z-basis of ``{x : A @ x == 0}`` from the trailing columns of ``V``."""
    A = as_int_matrix(a)
    snf = smith(A)
    n = A.shape[1]
    return [[int(v) for v in snf.V[:, c]] for c in range(snf.rank, n)]


def rank(a) -> int:
    return smith(a).rank


def is_surjective(a) -> bool:
    A = as_int_matrix(a)
    factors = smith(A).invariant_factors
    return len(factors) == A.shape[0] and all(f == 1 for f in factors)


def is_unimodular(a) -> bool:
    A = as_int_matrix(a)
    return A.shape[0] == A.shape[1] and is_surjective(A)


def inverse(a) -> np.ndarray:
    """Integer inverse of a unimodular matrix."""
    A = as_int_matrix(a)
    if not is_unimodular(A):
        raise ValueError("matrix is not invertible over Z")
    snf = smith(A)
    # U A V = diag(±1) normalized to I, so A^{-1} = V U
    return snf.V @ snf.U


@dataclass
class IntCochainComplex:
    """Free Z-modules ``C^p`` of rank ``ranks[p]`` with ``d^p: C^p -> C^{p+1}``.

    ``diffs[p]`` has shape ``(ranks[p+1], ranks[p])``; missing entries are zero.
    """

    ranks: dict[int, int]
    diffs: dict[int, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        self.ranks = {p: r for p, r in self.ranks.items()}
        fixed = {}
        for p in self.degrees:
            shape = (self.rank(p + 1), self.rank(p))
            d = self.diffs.get(p)
            fixed[p] = zeros(*shape) if d is None else as_int_matrix(d, shape)
        self.diffs = fixed

    @property
    def degrees(self) -> list[int]:
        return sorted(self.ranks)

    def rank(self, p: int) -> int:
        return self.ranks.get(p, 0)

    def d(self, p: int) -> np.ndarray:
        if p in self.diffs:
            return self.diffs[p]
        return zeros(self.rank(p + 1), self.rank(p))

    def check(self) -> list[int]:
        """Degrees ``p`` where ``d^{p+1} d^p != 0``."""
        return [p for p in self.degrees
                if np.any(self.d(p + 1) @ self.d(p) != 0)]


@dataclass(frozen=True)
class CohomologyGroup:
    free_rank: int
    torsion: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        if not parts:
            return "0"
        return " + ".join(parts)


def cohomology(C: IntCochainComplex) -> dict[int, CohomologyGroup]:
    bad = C.check()
    if bad:
        raise ValueError(f"d∘d != 0 starting in degree(s) {bad}")
    out = {}
    for p in C.degrees:
        out_rank = rank(C.d(p))
        incoming = smith(C.d(p - 1)).invariant_factors
        free = C.rank(p) - out_rank - len(incoming)
        out[p] = CohomologyGroup(free, tuple(f for f in incoming if f != 1))
    return out
