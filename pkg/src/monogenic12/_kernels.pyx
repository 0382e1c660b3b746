# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled polynomial kernels over GF(p), p < 2**31.

Same contract as ``_kernels_py``; callers route larger moduli to the
Python implementation.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef i64 _inv(i64 a, i64 p):
    cdef i64 t = 0, nt = 1, r = p, nr = a % p, q, tmp
    while nr:
        q = r // nr
        tmp = t - q * nt; t = nt; nt = tmp
        tmp = r - q * nr; r = nr; nr = tmp
    if t < 0:
        t += p
    return t


cdef int _deg(i64* a, int n):
    # degree of a[0..n), -1 for zero
    cdef int k = n - 1
    while k >= 0 and a[k] == 0:
        k -= 1
    return k


cdef i64* _load(list a, int size):
    cdef i64* buf = <i64*> malloc(max(size, 1) * sizeof(i64))
    cdef int i
    for i in range(size):
        buf[i] = a[i] if i < len(a) else 0
    return buf


cdef list _dump(i64* a, int deg):
    return [a[i] for i in range(deg + 1)]


cdef int _mul(i64* a, int da, i64* b, int db, i64* out, i64 p):
    # out has room for da + db + 1 entries; returns degree
    cdef int i, j
    cdef i64 x
    if da < 0 or db < 0:
        return -1
    for i in range(da + db + 1):
        out[i] = 0
    for i in range(da + 1):
        x = a[i]
        if x:
            for j in range(db + 1):
                out[i + j] = (out[i + j] + x * b[j]) % p
    return _deg(out, da + db + 1)


cdef int _rem(i64* r, int dr, i64* m, int dm, i64 inv, i64 p):
    # reduce r in place modulo m (deg dm, inv = leading coefficient inverse)
    cdef int k, j
    cdef i64 c
    for k in range(dr - dm, -1, -1):
        c = r[k + dm] * inv % p
        if c:
            for j in range(dm + 1):
                r[k + j] = (r[k + j] - c * m[j]) % p
                if r[k + j] < 0:
                    r[k + j] += p
    return _deg(r, dm if dr >= dm else dr + 1)


def pmul(list a, list b, long long p):
    if not a or not b:
        return []
    cdef int na = len(a), nb = len(b)
    cdef i64* x = _load(a, na)
    cdef i64* y = _load(b, nb)
    cdef i64* out = <i64*> malloc((na + nb) * sizeof(i64))
    cdef int d = _mul(x, na - 1, y, nb - 1, out, p)
    res = _dump(out, d)
    free(x); free(y); free(out)
    return res


def pdivmod(list a, list b, long long p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef int na = len(a), db = len(b) - 1, k, j
    if na - 1 < db:
        return [], list(a)
    cdef i64* r = _load(a, na)
    cdef i64* m = _load(b, db + 1)
    cdef i64 inv = _inv(m[db], p), c
    q = [0] * (na - db)
    for k in range(na - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = (r[k + j] - c * m[j]) % p
                if r[k + j] < 0:
                    r[k + j] += p
    rem = _dump(r, _deg(r, db))
    free(r); free(m)
    while q and not q[-1]:
        q.pop()
    return q, rem


def prem(list a, list b, long long p):
    return pdivmod(a, b, p)[1]


def pmulmod(list a, list b, list m, long long p):
    return pdivmod(pmul(a, b, p), m, p)[1]


cdef int _powmod(i64* base, int dbase, object e, i64* m, int dm, i64 p, i64* result):
    # result gets base**e mod m; buffers sized 2*dm + 1
    cdef i64 inv = _inv(m[dm], p)
    cdef i64* tmp = <i64*> malloc((2 * dm + 1) * sizeof(i64))
    cdef int dres, i, dt
    if dm == 0:
        free(tmp)
        return -1
    result[0] = 1
    dres = 0
    for bit in bin(e)[2:]:
        dt = _mul(result, dres, result, dres, tmp, p)
        dres = _rem(tmp, dt, m, dm, inv, p)
        for i in range(dres + 1):
            result[i] = tmp[i]
        if bit == "1":
            dt = _mul(result, dres, base, dbase, tmp, p)
            dres = _rem(tmp, dt, m, dm, inv, p)
            for i in range(dres + 1):
                result[i] = tmp[i]
    free(tmp)
    return dres


def ppowmod(list a, e, list m, long long p):
    cdef int dm = len(m) - 1
    if dm <= 0:
        return []
    base = prem(a, m, p)
    cdef int db = len(base) - 1
    cdef i64* x = _load(base, dm + 1)
    cdef i64* mm = _load(m, dm + 1)
    cdef i64* out = <i64*> malloc((2 * dm + 1) * sizeof(i64))
    cdef int d = _powmod(x, db, e, mm, dm, p, out)
    res = _dump(out, d)
    free(x); free(mm); free(out)
    return res


def pmonic(list a, long long p):
    if not a:
        return []
    cdef i64 inv = _inv(a[-1], p)
    return [c * inv % p for c in a]


def pgcd(list a, list b, long long p):
    a = list(a)
    b = list(b)
    while a and not a[-1]:
        a.pop()
    while b and not b[-1]:
        b.pop()
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    return pmonic(a, p)


def psub(list a, list b, long long p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    while out and not out[-1]:
        out.pop()
    return out


def ddf(list f, long long p):
    out = []
    f = list(f)
    h = [0, 1]
    cdef int d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = ppowmod(h, p, f, p)
        g = pgcd(f, psub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((d, g))
            f = pdivmod(f, g, p)[0]
            h = prem(h, f, p)
    if len(f) > 1:
        out.append((len(f) - 1, f))
    return out
