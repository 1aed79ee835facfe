"""Pure-Python fraction-free (Bareiss) row reduction over Python integers.

This is the fallback for the compiled kernel ``hpade._elim``; both expose
the same ``echelon`` contract and must produce bit-identical results.

The reduction is the one-step Bareiss scheme: after each pivot step every
entry is an exact minor of the input divided by the previous pivot, so all
divisions are exact and intermediate growth stays polynomial in the bit
size of the input.  The pivot within a column is the nonzero candidate of
smallest bit size (ties broken by row index), which keeps the minors small.
"""

from __future__ import annotations


def echelon(rows: list[list[int]], nrows: int, ncols: int) -> list[int]:
    """Reduce ``rows`` in place to fraction-free row echelon form.

    Returns the list of pivot columns; the rank is its length.  Rows below
    the last pivot end up identically zero.
    """
    pivot_cols: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        best_bits = 0
        for i in range(r, nrows):
            v = rows[i][c]
            if v != 0:
                bits = v.bit_length() if v > 0 else (-v).bit_length()
                if best < 0 or bits < best_bits:
                    best = i
                    best_bits = bits
        if best < 0:
            continue
        if best != r:
            rows[best], rows[r] = rows[r], rows[best]
        row_r = rows[r]
        pivot = row_r[c]
        for i in range(r + 1, nrows):
            row_i = rows[i]
            lead = row_i[c]
            if lead == 0:
                # Bareiss still rescales rows with a zero leading entry.
                for j in range(c + 1, ncols):
                    row_i[j] = (pivot * row_i[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row_i[j] = (pivot * row_i[j] - lead * row_r[j]) // prev
                row_i[c] = 0
        pivot_cols.append(c)
        prev = pivot
        r += 1
    return pivot_cols
