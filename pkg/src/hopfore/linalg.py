"""Exact linear algebra over a field context.

Matrices are lists of lists of FieldElement (row major); sparse systems are
lists of {column: coefficient} dictionaries.  Everything is deterministic:
pivots are chosen by smallest column index, so kernel bases are reproducible.
"""

from __future__ import annotations


def mat_identity(field, n):
    return [[field.one if i == j else field.zero for j in range(n)]
            for i in range(n)]


def mat_zero(field, r, c):
    return [[field.zero] * c for _ in range(r)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        arow = a[i]
        orow = []
        for j in range(cols):
            acc = None
            for k in range(inner):
                term = arow[k] * b[k][j]
                acc = term if acc is None else acc + term
            orow.append(acc)
        out.append(orow)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        acc = None
        for x, y in zip(row, v):
            term = x * y
            acc = term if acc is None else acc + term
        out.append(acc)
    return out


def mat_eq(a, b):
    if len(a) != len(b) or (a and len(a[0]) != len(b[0])):
        return False
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_pow(a, k):
    n = len(a)
    field = a[0][0].field
    acc = mat_identity(field, n)
    base = a
    while k:
        if k & 1:
            acc = mat_mul(acc, base)
        base = mat_mul(base, base)
        k >>= 1
    return acc


def mat_is_zero(a):
    return all(x.is_zero() for row in a for x in row)


def kron(a, b):
    """Kronecker product acting on e_i (x) f_j with index i*cols(b)+j."""
    rb, cb = len(b), len(b[0])
    out = []
    for i in range(len(a)):
        for k in range(rb):
            row = []
            for j in range(len(a[0])):
                for l in range(cb):
                    row.append(a[i][j] * b[k][l])
            out.append(row)
    return out


def block_diag(field, blocks):
    n = sum(len(b) for b in blocks)
    out = mat_zero(field, n, n)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


def mat_inverse(a):
    """Inverse by Gauss-Jordan; None if singular."""
    n = len(a)
    field = a[0][0].field
    work = [list(row) + list(idrow) for row, idrow in zip(a, mat_identity(field, n))]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not work[r][col].is_zero():
                piv = r
                break
        if piv is None:
            return None
        work[col], work[piv] = work[piv], work[col]
        inv = work[col][col].inverse()
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and not work[r][col].is_zero():
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def mat_is_invertible(a):
    return mat_inverse(a) is not None


def mat_is_nilpotent(a):
    return mat_is_zero(mat_pow(a, len(a)))


# ---------------------------------------------------------------------------
# sparse elimination

def _row_reduce_by(row, pivot_col, pivot_row):
    f = row.get(pivot_col)
    if f is None:
        return
    for c, v in pivot_row.items():
        cur = row.get(c)
        nxt = (cur - f * v) if cur is not None else -(f * v)
        if nxt.is_zero():
            row.pop(c, None)
        else:
            row[c] = nxt


def sparse_pivots(rows):
    """Fully reduced pivot rows of a sparse homogeneous system.

    rows: iterable of {col: FieldElement}.  Returns {pivot_col: row} where
    every pivot row is normalized and contains no other pivot column.
    """
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c in pivots:
                _row_reduce_by(row, c, pivots[c])
                continue
            inv = row[c].inverse()
            row = {k: v * inv for k, v in row.items()}
            # keep the invariant: no pivot row mentions another pivot column
            for pc in list(row):
                if pc != c and pc in pivots:
                    _row_reduce_by(row, pc, pivots[pc])
            for other in pivots.values():
                if c in other:
                    _row_reduce_by(other, c, row)
            pivots[c] = row
            break
    return pivots


def sparse_kernel(rows, ncols, field):
    """Kernel basis of the homogeneous system, one vector per free column.

    Vectors come back as dense lists in column order; the basis is the
    reduced-echelon parametrization, hence deterministic.
    """
    pivots = sparse_pivots(rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec = [field.zero] * ncols
        vec[f] = field.one
        for c, row in pivots.items():
            v = row.get(f)
            if v is not None:
                vec[c] = -v
        basis.append(vec)
    return basis


def kernel_of_matrix(a, field):
    """Kernel of a dense matrix (list of rows)."""
    rows = []
    for row in a:
        d = {j: x for j, x in enumerate(row) if not x.is_zero()}
        if d:
            rows.append(d)
    ncols = len(a[0]) if a else 0
    return sparse_kernel(rows, ncols, field)


def solve_in_span(vectors, target, field):
    """Coefficients expressing target in the span of vectors, or None.

    vectors and target are dense coordinate lists of equal length.
    """
    if not vectors:
        return None if any(not x.is_zero() for x in target) else []
    ncols = len(vectors)
    rows = {}
    for j, vec in enumerate(vectors):
        for i, x in enumerate(vec):
            if not x.is_zero():
                rows.setdefault(i, {})[j] = x
    for i, x in enumerate(target):
        if not x.is_zero():
            rows.setdefault(i, {})[ncols] = -x
    pivots = sparse_pivots(rows.values())
    if ncols in pivots:
        return None  # inconsistent: target has a pivot of its own
    coeffs = [field.zero] * ncols
    for c, row in pivots.items():
        v = row.get(ncols)
        if v is not None:
            coeffs[c] = -v
    return coeffs


def intersect_kernels(mats, field):
    """Common kernel of several square matrices (stacked system)."""
    rows = []
    for a in mats:
        for row in a:
            d = {j: x for j, x in enumerate(row) if not x.is_zero()}
            if d:
                rows.append(d)
    n = len(mats[0][0]) if mats else 0
    return sparse_kernel(rows, n, field)
