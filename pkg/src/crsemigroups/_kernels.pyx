# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the hot kernels in `_kernels_py`.

Identical call surface and identical outputs; the selection happens in
`kernels` at import time.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

BACKEND_NAME = "cython"


cdef int* _to_c_table(object flat, int nn) except NULL:
    cdef int* t = <int*> PyMem_Malloc(nn * sizeof(int))
    if t == NULL:
        raise MemoryError()
    cdef int i
    for i in range(nn):
        t[i] = flat[i]
    return t


def associativity_witness(flat, int n):
    """First triple (a, b, c) with (a*b)*c != a*(b*c), or None."""
    cdef int nn = n * n
    cdef int* t = _to_c_table(flat, nn)
    cdef int a, b, c, ab
    try:
        for a in range(n):
            for b in range(n):
                ab = t[a * n + b]
                for c in range(n):
                    if t[ab * n + c] != t[a * n + t[b * n + c]]:
                        return (a, b, c)
        return None
    finally:
        PyMem_Free(t)


cdef int _find(int* parent, int x) noexcept:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def closure_blocks(flat, int n, pairs):
    """Least congruence containing `pairs`, as a raw block-id list."""
    cdef int nn = n * n
    cdef int* t = _to_c_table(flat, nn)
    cdef int* parent = <int*> PyMem_Malloc(n * sizeof(int))
    # worst case: initial pairs plus 2n pairs per successful union
    cdef Py_ssize_t cap = 2 * len(pairs) + 4 * n * n + 8
    cdef int* stack = <int*> PyMem_Malloc(2 * cap * sizeof(int))
    if parent == NULL or stack == NULL:
        PyMem_Free(t)
        if parent != NULL:
            PyMem_Free(parent)
        if stack != NULL:
            PyMem_Free(stack)
        raise MemoryError()
    cdef Py_ssize_t top = 0
    cdef int i, a, b, ra, rb, c, ca, cb, ac, bc
    try:
        for i in range(n):
            parent[i] = i
        for a, b in pairs:
            stack[2 * top] = a
            stack[2 * top + 1] = b
            top += 1
        while top > 0:
            top -= 1
            a = stack[2 * top]
            b = stack[2 * top + 1]
            ra = _find(parent, a)
            rb = _find(parent, b)
            if ra == rb:
                continue
            parent[rb] = ra
            for c in range(n):
                ca = t[c * n + a]
                cb = t[c * n + b]
                if ca != cb:
                    if top == cap:
                        raise AssertionError("closure worklist overflow")
                    stack[2 * top] = ca
                    stack[2 * top + 1] = cb
                    top += 1
                ac = t[a * n + c]
                bc = t[b * n + c]
                if ac != bc:
                    if top == cap:
                        raise AssertionError("closure worklist overflow")
                    stack[2 * top] = ac
                    stack[2 * top + 1] = bc
                    top += 1
        return [_find(parent, i) for i in range(n)]
    finally:
        PyMem_Free(t)
        PyMem_Free(parent)
        PyMem_Free(stack)


def greatest_contained_blocks(flat, int n, eq_blocks):
    """Greatest congruence inside the equivalence given by eq_blocks."""
    cdef int nn = n * n
    cdef int* t = _to_c_table(flat, nn)
    cdef int* eq = <int*> PyMem_Malloc(n * sizeof(int))
    cdef int* parent = <int*> PyMem_Malloc(n * sizeof(int))
    if eq == NULL or parent == NULL:
        PyMem_Free(t)
        if eq != NULL:
            PyMem_Free(eq)
        if parent != NULL:
            PyMem_Free(parent)
        raise MemoryError()
    cdef int i, a, b, x, y, xa, xb, ra, rb
    cdef bint ok
    try:
        for i in range(n):
            eq[i] = eq_blocks[i]
            parent[i] = i
        for a in range(n):
            for b in range(a + 1, n):
                if eq[a] != eq[b]:
                    continue
                ok = True
                for x in range(n + 1):
                    if x == n:
                        xa = a
                        xb = b
                    else:
                        xa = t[x * n + a]
                        xb = t[x * n + b]
                    if xa == xb:
                        continue
                    if eq[xa] != eq[xb]:
                        ok = False
                        break
                    for y in range(n):
                        if eq[t[xa * n + y]] != eq[t[xb * n + y]]:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    ra = _find(parent, a)
                    rb = _find(parent, b)
                    if ra != rb:
                        parent[rb] = ra
        return [_find(parent, i) for i in range(n)]
    finally:
        PyMem_Free(t)
        PyMem_Free(eq)
        PyMem_Free(parent)


def saturation_blocks(flat, int n, member):
    """Greatest congruence saturating the flagged subset."""
    cdef int nn = n * n
    cdef int* t = _to_c_table(flat, nn)
    cdef int* mem = <int*> PyMem_Malloc((n + 1) * sizeof(int))
    cdef int* parent = <int*> PyMem_Malloc(n * sizeof(int))
    if mem == NULL or parent == NULL:
        PyMem_Free(t)
        if mem != NULL:
            PyMem_Free(mem)
        if parent != NULL:
            PyMem_Free(parent)
        raise MemoryError()
    cdef int i, a, b, x, y, xa, xb, pa, pb, ra, rb
    cdef bint ok
    try:
        for i in range(n + 1):
            mem[i] = member[i]
        for i in range(n):
            parent[i] = i
        for a in range(n):
            for b in range(a + 1, n):
                ok = True
                for x in range(n + 1):
                    if x == n:
                        xa = a
                        xb = b
                    else:
                        xa = t[x * n + a]
                        xb = t[x * n + b]
                    for y in range(n + 1):
                        if y == n:
                            pa = xa
                            pb = xb
                        else:
                            pa = t[xa * n + y]
                            pb = t[xb * n + y]
                        if mem[pa] != mem[pb]:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    ra = _find(parent, a)
                    rb = _find(parent, b)
                    if ra != rb:
                        parent[rb] = ra
        return [_find(parent, i) for i in range(n)]
    finally:
        PyMem_Free(t)
        PyMem_Free(mem)
        PyMem_Free(parent)


cdef bint _consistent(int* flat, int n, int i, int j) noexcept:
    cdef int v = flat[i * n + j]
    cdef int a, b, c, jc, ai, bj, ib, lhs, rhs
    # triples (i, j, c)
    for c in range(n):
        jc = flat[j * n + c]
        if jc >= 0:
            lhs = flat[v * n + c]
            rhs = flat[i * n + jc]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
    # triples (a, i, j)
    for a in range(n):
        ai = flat[a * n + i]
        if ai >= 0:
            lhs = flat[ai * n + j]
            rhs = flat[a * n + v]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
    # triples (a, b, j) with a*b = i
    for a in range(n):
        for b in range(n):
            if flat[a * n + b] == i:
                bj = flat[b * n + j]
                if bj >= 0:
                    rhs = flat[a * n + bj]
                    if rhs >= 0 and rhs != v:
                        return False
    # triples (i, b, c) with b*c = j
    for b in range(n):
        ib = flat[i * n + b]
        if ib < 0:
            continue
        for c in range(n):
            if flat[b * n + c] == j:
                lhs = flat[ib * n + c]
                if lhs >= 0 and lhs != v:
                    return False
    return True


cdef void _search(int* flat, int n, int pos, list out):
    cdef int nn = n * n
    cdef int i, j, v
    if pos == nn:
        out.append(tuple([flat[i] for i in range(nn)]))
        return
    i = pos // n
    j = pos - i * n
    for v in range(n):
        flat[pos] = v
        if _consistent(flat, n, i, j):
            _search(flat, n, pos + 1, out)
    flat[pos] = -1


def associative_tables(int n):
    """All associative n x n tables, flattened, in lexicographic order."""
    if n == 1:
        return [(0,)]
    cdef int nn = n * n
    cdef int* flat = <int*> PyMem_Malloc(nn * sizeof(int))
    if flat == NULL:
        raise MemoryError()
    cdef int i
    out: list = []
    try:
        for i in range(nn):
            flat[i] = -1
        _search(flat, n, 0, out)
        return out
    finally:
        PyMem_Free(flat)
