# cython: language_level=3
"""Compiled fraction-free (Bareiss) row reduction over Python integers.

Mirror of ``hpade._elim_py.echelon``: same pivot rule (smallest bit size
among nonzero candidates, lowest row index on ties), same in-place
contract, bit-identical output.  The arithmetic stays on arbitrary
precision Python ints; the compilation removes the interpreter dispatch
around the inner loops.
"""


def echelon(list rows, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef list pivot_cols = []
    cdef list row_r, row_i
    cdef Py_ssize_t r = 0, c, i, j, best
    cdef long best_bits = 0, bits
    cdef object prev = 1
    cdef object pivot, lead, v

    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        best_bits = 0
        for i in range(r, nrows):
            v = (<list> rows[i])[c]
            if v != 0:
                bits = (v if v > 0 else -v).bit_length()
                if best < 0 or bits < best_bits:
                    best = i
                    best_bits = bits
        if best < 0:
            continue
        if best != r:
            rows[best], rows[r] = rows[r], rows[best]
        row_r = <list> rows[r]
        pivot = row_r[c]
        for i in range(r + 1, nrows):
            row_i = <list> rows[i]
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
