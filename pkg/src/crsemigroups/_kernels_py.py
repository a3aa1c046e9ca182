"""Pure-Python implementations of the hot kernels.

Same call surface as the compiled `_kernels` extension; `kernels` picks one
at import time.  All functions work on a flattened Cayley table (row-major,
length n*n) and return plain lists/tuples so that callers never see which
backend ran.
"""

from __future__ import annotations

BACKEND_NAME = "python"


def associativity_witness(flat, n):
    """First triple (a, b, c) with (a*b)*c != a*(b*c), or None."""
    for a in range(n):
        arow = a * n
        for b in range(n):
            ab = flat[arow + b]
            brow = b * n
            abrow = ab * n
            for c in range(n):
                if flat[abrow + c] != flat[arow + flat[brow + c]]:
                    return (a, b, c)
    return None


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def closure_blocks(flat, n, pairs):
    """Least congruence containing `pairs`, as a raw block-id list.

    Union-find plus a worklist: whenever the classes of a and b merge, the
    pairs (c*a, c*b) and (a*c, b*c) are enqueued for every c.  Block ids are
    union-find roots; canonicalisation is the caller's job.
    """
    parent = list(range(n))
    work = [(a, b) for (a, b) in pairs]
    while work:
        a, b = work.pop()
        ra = _find(parent, a)
        rb = _find(parent, b)
        if ra == rb:
            continue
        parent[rb] = ra
        for c in range(n):
            crow = c * n
            ca = flat[crow + a]
            cb = flat[crow + b]
            if ca != cb:
                work.append((ca, cb))
            ac = flat[a * n + c]
            bc = flat[b * n + c]
            if ac != bc:
                work.append((ac, bc))
    return [_find(parent, i) for i in range(n)]


def greatest_contained_blocks(flat, n, eq_blocks):
    """Greatest congruence contained in the equivalence given by eq_blocks.

    Pair (a, b) survives iff x*a*y and x*b*y are equivalent for all x, y
    drawn from the semigroup with a virtual identity adjoined (index n).
    """
    parent = list(range(n))
    for a in range(n):
        arow = a * n
        for b in range(a + 1, n):
            if eq_blocks[a] != eq_blocks[b]:
                continue
            brow = b * n
            ok = True
            for x in range(n + 1):
                if x == n:
                    xa, xb = a, b
                else:
                    xrow = x * n
                    xa = flat[xrow + a]
                    xb = flat[xrow + b]
                if xa == xb:
                    continue
                xarow = xa * n
                xbrow = xb * n
                if eq_blocks[xa] != eq_blocks[xb]:
                    ok = False
                    break
                for y in range(n):
                    if eq_blocks[flat[xarow + y]] != eq_blocks[flat[xbrow + y]]:
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


def saturation_blocks(flat, n, member):
    """Greatest congruence saturating the subset flagged by `member`.

    Pair (a, b) survives iff x*a*y lands in the subset exactly when x*b*y
    does, for all x, y over the semigroup with a virtual identity (index n).
    """
    parent = list(range(n))
    for a in range(n):
        for b in range(a + 1, n):
            ok = True
            for x in range(n + 1):
                if x == n:
                    xa, xb = a, b
                else:
                    xrow = x * n
                    xa = flat[xrow + a]
                    xb = flat[xrow + b]
                xarow = xa * n
                xbrow = xb * n
                for y in range(n + 1):
                    if y == n:
                        pa, pb = xa, xb
                    else:
                        pa = flat[xarow + y]
                        pb = flat[xbrow + y]
                    if member[pa] != member[pb]:
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


def associative_tables(n):
    """All associative n x n tables, flattened, in lexicographic order.

    Depth-first fill in row-major order; after each assignment only the
    triples whose four lookups just became defined are re-checked, so
    violations prune the subtree immediately.
    """
    if n == 1:
        return [(0,)]
    nn = n * n
    flat = [-1] * nn
    out = []

    def consistent(i, j):
        v = flat[i * n + j]
        irow = i * n
        vrow = v * n
        # triples (i, j, c): (i*j)*c vs i*(j*c)
        jrow = j * n
        for c in range(n):
            jc = flat[jrow + c]
            if jc >= 0:
                lhs = flat[vrow + c]
                rhs = flat[irow + jc]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
        # triples (a, i, j): (a*i)*j vs a*(i*j)
        for a in range(n):
            ai = flat[a * n + i]
            if ai >= 0:
                lhs = flat[ai * n + j]
                rhs = flat[a * n + v]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
        # triples (a, b, j) with a*b = i: (a*b)*j = v vs a*(b*j)
        for a in range(n):
            arow = a * n
            for b in range(n):
                if flat[arow + b] == i:
                    bj = flat[b * n + j]
                    if bj >= 0:
                        rhs = flat[arow + bj]
                        if rhs >= 0 and rhs != v:
                            return False
        # triples (i, b, c) with b*c = j: (i*b)*c vs i*(b*c) = v
        for b in range(n):
            brow = b * n
            ib = flat[irow + b]
            if ib < 0:
                continue
            ibrow = ib * n
            for c in range(n):
                if flat[brow + c] == j:
                    lhs = flat[ibrow + c]
                    if lhs >= 0 and lhs != v:
                        return False
        return True

    def rec(pos):
        if pos == nn:
            out.append(tuple(flat))
            return
        i, j = divmod(pos, n)
        for v in range(n):
            flat[pos] = v
            if consistent(i, j):
                rec(pos + 1)
        flat[pos] = -1

    rec(0)
    return out
