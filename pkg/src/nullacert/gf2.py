"""Dense GF(2) linear algebra on bit-packed 64-bit words.

Column c of a matrix lives at bit c % 64 of word c // 64 of each row
(least-significant bit first); padding bits beyond the logical width are
always zero.  Matrices are immutable after construction; elimination
runs on private copies, with a fixed pivot rule (leftmost nonzero
column, first available row) so every result is bit-exact and
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CapacityError

#: Default cap on matrix payload: 1 GiB of bits.
DEFAULT_BIT_CAP = 8 * (1 << 30)

_ONE = np.uint64(1)


class Gf2Matrix:
    """Immutable rows x cols bit matrix over GF(2)."""

    __slots__ = ("rows", "cols", "_words")

    def __init__(
        self,
        rows: int,
        cols: int,
        words: np.ndarray | None = None,
        *,
        bit_cap: int | None = DEFAULT_BIT_CAP,
    ):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if bit_cap is not None and rows * cols > bit_cap:
            raise CapacityError(
                f"matrix payload of {rows} x {cols} = {rows * cols} bits exceeds "
                f"the {bit_cap}-bit cap"
            )
        nwords = (cols + 63) // 64
        if words is None:
            words = np.zeros((rows, nwords), dtype=np.uint64)
        else:
            words = np.array(words, dtype=np.uint64, copy=True)
            if words.shape != (rows, nwords):
                raise ValueError(
                    f"expected word array of shape {(rows, nwords)}, got {words.shape}"
                )
            if cols % 64 and nwords:
                words[:, -1] &= np.uint64((1 << (cols % 64)) - 1)
        words.flags.writeable = False
        self.rows = rows
        self.cols = cols
        self._words = words

    # -- construction -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int, **kw) -> "Gf2Matrix":
        return cls(rows, cols, **kw)

    @classmethod
    def identity(cls, k: int, **kw) -> "Gf2Matrix":
        words = np.zeros((k, (k + 63) // 64), dtype=np.uint64)
        for r in range(k):
            words[r, r // 64] = _ONE << np.uint64(r % 64)
        return cls(k, k, words, **kw)

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[int]], **kw) -> "Gf2Matrix":
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        words = np.zeros((rows, (cols + 63) // 64), dtype=np.uint64)
        for r, row in enumerate(entries):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for c, bit in enumerate(row):
                if bit & 1:
                    words[r, c // 64] ^= _ONE << np.uint64(c % 64)
        return cls(rows, cols, words, **kw)

    @classmethod
    def from_row_supports(
        cls, cols: int, supports: Iterable[Iterable[int]], **kw
    ) -> "Gf2Matrix":
        """Rows given as iterables of set column indices (XOR semantics)."""
        sup = [list(s) for s in supports]
        rows = len(sup)
        words = np.zeros((rows, (cols + 63) // 64), dtype=np.uint64)
        r_idx, w_idx, vals = [], [], []
        for r, cs in enumerate(sup):
            for c in cs:
                if not 0 <= c < cols:
                    raise ValueError(f"column {c} out of range")
                r_idx.append(r)
                w_idx.append(c // 64)
                vals.append(1 << (c % 64))
        if r_idx:
            np.bitwise_xor.at(
                words,
                (np.array(r_idx), np.array(w_idx)),
                np.array(vals, dtype=np.uint64),
            )
        return cls(rows, cols, words, **kw)

    @classmethod
    def from_col_supports(
        cls, rows: int, supports: Iterable[Iterable[int]], **kw
    ) -> "Gf2Matrix":
        """Columns given as iterables of set row indices (XOR semantics)."""
        sup = [list(s) for s in supports]
        cols = len(sup)
        words = np.zeros((rows, (cols + 63) // 64), dtype=np.uint64)
        r_idx, w_idx, vals = [], [], []
        for c, rs in enumerate(sup):
            for r in rs:
                if not 0 <= r < rows:
                    raise ValueError(f"row {r} out of range")
                r_idx.append(r)
                w_idx.append(c // 64)
                vals.append(1 << (c % 64))
        if r_idx:
            np.bitwise_xor.at(
                words,
                (np.array(r_idx), np.array(w_idx)),
                np.array(vals, dtype=np.uint64),
            )
        return cls(rows, cols, words, **kw)

    # -- access --------------------------------------------------------------

    def get(self, r: int, c: int) -> int:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError((r, c))
        return int(self._words[r, c // 64] >> np.uint64(c % 64) & _ONE)

    def row_support(self, r: int) -> list[int]:
        out = []
        for w in range(self._words.shape[1]):
            word = int(self._words[r, w])
            while word:
                low = word & -word
                out.append(w * 64 + low.bit_length() - 1)
                word ^= low
        return out

    def to_dense(self) -> list[list[int]]:
        return [[self.get(r, c) for c in range(self.cols)] for r in range(self.rows)]

    def transpose(self) -> "Gf2Matrix":
        if self.rows == 0 or self.cols == 0:
            return Gf2Matrix(self.cols, self.rows, bit_cap=None)
        # uint64 words viewed little-endian match the LSB-first bit layout
        byte_view = np.ascontiguousarray(self._words).view(np.uint8)
        bits = np.unpackbits(byte_view, axis=1, bitorder="little")[:, : self.cols]
        packed = np.packbits(bits.T, axis=1, bitorder="little")
        nwords = (self.rows + 63) // 64
        out = np.zeros((self.cols, nwords * 8), dtype=np.uint8)
        out[:, : packed.shape[1]] = packed
        return Gf2Matrix(self.cols, self.rows, out.view(np.uint64), bit_cap=None)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and np.array_equal(self._words, other._words)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._words.tobytes()))

    def __repr__(self):
        return f"Gf2Matrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class SolveResult:
    """Outcome of solving A x = b; solution is a 0/1 tuple when feasible."""

    feasible: bool
    solution: tuple[int, ...] | None
    rank: int


def _eliminate(words: np.ndarray, rows: int, ncols: int) -> list[tuple[int, int]]:
    """In-place forward elimination to row echelon form.

    Pivot rule: scan columns left to right, pivot on the first remaining
    row with a set bit.  Returns the (row, col) pivot list.
    """
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        w, b = divmod(c, 64)
        colbits = (words[r:, w] >> np.uint64(b)) & _ONE
        nz = np.nonzero(colbits)[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            words[[r, p]] = words[[p, r]]
        if nz.size > 1:
            words[r + nz[1:]] ^= words[r]
        pivots.append((r, c))
        r += 1
    return pivots


def rank(m: Gf2Matrix) -> int:
    words = m._words.copy()
    return len(_eliminate(words, m.rows, m.cols))


def solve(a: Gf2Matrix, b: Sequence[int]) -> SolveResult:
    """Particular solution of A x = b (free variables set to 0), or infeasible."""
    rhs = [int(bit) & 1 for bit in b]
    if len(rhs) != a.rows:
        raise ValueError(f"right-hand side has length {len(rhs)}, expected {a.rows}")
    rows, cols = a.rows, a.cols
    aug_words = (cols + 1 + 63) // 64
    m = np.zeros((rows, aug_words), dtype=np.uint64)
    m[:, : a._words.shape[1]] = a._words
    wb, bb = divmod(cols, 64)
    for r, bit in enumerate(rhs):
        if bit:
            m[r, wb] |= _ONE << np.uint64(bb)
    pivots = _eliminate(m, rows, cols)
    rk = len(pivots)
    if rk < rows:
        tail = (m[rk:, wb] >> np.uint64(bb)) & _ONE
        if tail.any():
            return SolveResult(False, None, rk)
    xwords = np.zeros(a._words.shape[1], dtype=np.uint64)
    for r, c in reversed(pivots):
        # x_c = b_r + sum over later pivot columns; free variables are 0 and
        # earlier pivot columns are clear in this row after elimination.
        parity = int(np.bitwise_count(m[r, : xwords.size] & xwords).sum())
        parity ^= int(m[r, wb] >> np.uint64(bb) & _ONE)
        if parity & 1:
            xwords[c // 64] |= _ONE << np.uint64(c % 64)
    solution = tuple(
        int(xwords[c // 64] >> np.uint64(c % 64) & _ONE) for c in range(cols)
    )
    if cols:
        check = np.bitwise_count(a._words & xwords[None, :]).sum(axis=1) & 1
    else:
        check = np.zeros(rows, dtype=np.uint64)
    if not np.array_equal(check.astype(np.int64), np.array(rhs, dtype=np.int64)):
        raise RuntimeError("internal error: extracted solution fails A x = b")
    return SolveResult(True, solution, rk)


def in_span(
    vectors: Sequence[Sequence[int]], target: Sequence[int]
) -> tuple[bool, list[int] | None]:
    """Is target a GF(2) combination of the vectors?  Returns witness indices.

    The witness re-sums to the target; that identity is re-checked here
    rather than trusted from the solver.
    """
    tgt = [int(bit) & 1 for bit in target]
    length = len(tgt)
    cols = []
    for v in vectors:
        vec = [int(bit) & 1 for bit in v]
        if len(vec) != length:
            raise ValueError("all vectors must have the target's length")
        cols.append([r for r, bit in enumerate(vec) if bit])
    matrix = Gf2Matrix.from_col_supports(length, cols)
    result = solve(matrix, tgt)
    if not result.feasible:
        return False, None
    witness = [i for i, bit in enumerate(result.solution) if bit]
    acc = [0] * length
    for i in witness:
        for r in cols[i]:
            acc[r] ^= 1
    if acc != tgt:
        raise RuntimeError("internal error: witness does not re-sum to target")
    return True, witness
