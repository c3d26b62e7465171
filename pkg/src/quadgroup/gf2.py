"""Bit-packed GF(2) linear algebra on Python integers (one int per row)."""

from __future__ import annotations


def parity(x: int) -> int:
    return x.bit_count() & 1


def gf2_rank(rows: list[int]) -> int:
    """Rank of the matrix whose rows are the given bit masks."""
    pivots: list[int] = []
    for row in rows:
        for p in pivots:
            low = p & -p
            if row & low:
                row ^= p
        if row:
            pivots.append(row)
    return len(pivots)


class Gf2Solver:
    """Row-reduced system B x = v for a fixed full-row-rank matrix B.

    Rows of B are bit masks over the column space; solve() returns the
    coefficient mask over the rows, or raises if v is outside the span.
    """

    def __init__(self, rows: list[int]):
        self.nrows = len(rows)
        # (reduced row, combination mask over original rows)
        self._pivots: list[tuple[int, int]] = []
        for i, row in enumerate(rows):
            comb = 1 << i
            for p, pc in self._pivots:
                if row & (p & -p):
                    row ^= p
                    comb ^= pc
            if row == 0:
                raise ValueError(f"row {i} is dependent on earlier rows")
            self._pivots.append((row, comb))

    def solve(self, v: int) -> int:
        comb = 0
        for p, pc in self._pivots:
            if v & (p & -p):
                v ^= p
                comb ^= pc
        if v != 0:
            raise ValueError("vector is outside the row span")
        return comb
