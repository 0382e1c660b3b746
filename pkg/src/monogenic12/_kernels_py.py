"""Pure-Python polynomial kernels over GF(p).

Polynomials are lists of residues in [0, p), constant term first, with no
trailing zeros; ``[]`` is the zero polynomial.  ``_kernels.pyx`` implements
the same functions in Cython for moduli below 2**31.
"""


def trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], trim(r)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = (r[k + j] - c * b[j]) % p
    return trim(q), trim(r[:db])


def prem(a, b, p):
    return pdivmod(a, b, p)[1]


def pmulmod(a, b, m, p):
    return pdivmod(pmul(a, b, p), m, p)[1]


def ppowmod(a, e, m, p):
    """a**e mod m over GF(p), by left-to-right square and multiply."""
    result = [1] if len(m) > 1 else []
    base = prem(a, m, p)
    for bit in bin(e)[2:]:
        result = pmulmod(result, result, m, p)
        if bit == "1":
            result = pmulmod(result, base, m, p)
    return result


def pmonic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def pgcd(a, b, p):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    return pmonic(a, p)


def psub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return trim(out)


def ddf(f, p):
    """Distinct-degree factorization of a monic squarefree f.

    Returns ``[(d, g_d), ...]`` where g_d is the product of all monic
    irreducible factors of degree d (only nonconstant g_d are listed).
    """
    out = []
    f = list(f)
    h = [0, 1]
    d = 0
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
