"""Small dense linear algebra over a prime field F_p.

Everything here works on plain lists of Python ints reduced mod p.  Sizes are
tiny (matrices indexed by conjugacy classes), so clarity and determinism beat
asymptotics: row order, eigenvalue order and nullspace bases are all fixed
functions of the input.
"""

from __future__ import annotations

from .errors import SubdepthError

__all__ = [
    "is_prime", "smallest_dixon_prime", "primitive_root", "sqrt_mod",
    "matvec_mod", "rref_mod", "nullspace_mod", "charpoly_mod", "roots_mod",
]


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def smallest_dixon_prime(exponent, order):
    """The smallest prime p == 1 (mod exponent) with p^2 > 4*order.

    Such a prime makes F_p a splitting field for the group and large enough to
    lift character degrees and multiplicities uniquely.
    """
    p = exponent + 1
    while True:
        if p * p > 4 * order and is_prime(p):
            return p
        p += exponent


def validate_dixon_prime(p, exponent, order):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if (p - 1) % exponent:
        raise ValueError(f"{p} is not congruent to 1 mod the group exponent {exponent}")
    if p * p <= 4 * order:
        raise ValueError(f"{p} is not larger than twice the square root of the group order")


def _factorize(n):
    out = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def primitive_root(p):
    """The smallest primitive root modulo the prime p."""
    if p == 2:
        return 1
    factors = _factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise SubdepthError(f"no primitive root found modulo {p}")  # unreachable for prime p


def sqrt_mod(a, p):
    """The square root of a mod p lying in [0, p/2), or None if a is a non-residue.

    p stays small here (a few thousand at the default cap), so a direct scan is
    both fast enough and trivially deterministic.
    """
    a %= p
    for r in range((p + 1) // 2):
        if r * r % p == a:
            return r
    return None


def matvec_mod(m, v, p):
    return [sum(a * b for a, b in zip(row, v)) % p for row in m]


def rref_mod(rows, p):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [r[:] for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c] % p
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace_mod(m, p):
    """Basis of the right nullspace of m over F_p, free variables ascending."""
    n = len(m[0]) if m else 0
    red, pivots = rref_mod(m, p)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [0] * n
        vec[fc] = 1
        for ri, pc in enumerate(pivots):
            vec[pc] = (-red[ri][fc]) % p
        basis.append(vec)
    return basis


def charpoly_mod(a, p):
    """Characteristic polynomial det(xI - A) mod p, ascending coefficients, monic.

    Computed by similarity reduction to upper Hessenberg form followed by the
    standard leading-minor recurrence.
    """
    n = len(a)
    if n == 0:
        return [1]
    h = [[v % p for v in row] for row in a]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        inv = pow(h[j + 1][j], -1, p)
        for i in range(j + 2, n):
            if h[i][j]:
                f = h[i][j] * inv % p
                hi, hj1 = h[i], h[j + 1]
                for t in range(j, n):
                    hi[t] = (hi[t] - f * hj1[t]) % p
                for t in range(n):
                    h[t][j + 1] = (h[t][j + 1] + f * h[t][i]) % p
    # p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i h[i-1][m-1] * (prod of subdiagonals) p_{i-1}
    polys = [[1]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        diag = h[m - 1][m - 1]
        poly = [0] + prev
        for i, c in enumerate(prev):
            poly[i] = (poly[i] - diag * c) % p
        poly = [v % p for v in poly]
        prod = 1
        for i in range(m - 1, 0, -1):
            prod = prod * h[i][i - 1] % p
            coef = h[i - 1][m - 1] * prod % p
            if coef:
                q = polys[i - 1]
                for t, c in enumerate(q):
                    poly[t] = (poly[t] - coef * c) % p
        polys.append(poly)
    return polys[n]


def roots_mod(poly, p):
    """All roots of the polynomial in F_p, ascending."""
    out = []
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            out.append(x)
    return out
