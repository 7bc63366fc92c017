"""Independent routes used to check library results without going through it."""

from fractions import Fraction
from itertools import combinations
from math import gcd

from firmhom.modules import TensorProduct, regular_module
from firmhom.zlinalg import GroupHom, IntMatrix, RawGroup, subgroup


def det(rows):
    # Gaussian elimination over Q; exact since entries are Fractions
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    sign = 1
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    out = Fraction(sign)
    for i in range(n):
        out *= a[i][i]
    return int(out)


def determinantal_divisors(A):
    """Invariant factors from gcds of k x k minors."""
    m, n = A.shape
    out = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = gcd(g, det([[A.data[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def is_unimodular(U):
    return abs(det(U.data)) == 1


def tensor_square_defects(R):
    """(coker, ker) of R (x)_R R -> R, computed without resolutions.

    From 0 -> R -> U -> Z -> 0 one gets Tor_1^U(Z, Z) = R / R^2 and
    Tor_2^U(Z, Z) = ker(R (x)_R R -> R), so this is an independent route.
    """
    T = TensorProduct(regular_module(R, "right"), regular_module(R, "left"))
    k = R.rank
    cols = [R.c[a][b] for a in range(k) for b in range(k)]
    mu = GroupHom(T.group, regular_module(R).group, IntMatrix.from_columns(cols, k) @ T.section, check=False)
    return mu.cokernel()[0], mu.kernel()[0]


def koszul_oracle(M):
    """Tor_0 = M / sum x_i M and Tor_n = common kernel of the x_i, via plain group maps."""
    n = M.ring.n
    gens = [a.column(j) for a in M.actions for j in range(M.ngens)]
    _, inc = subgroup(M.group, gens)
    t0 = inc.cokernel()[0]
    stacked = IntMatrix(M.ngens * n, M.ngens, [row for a in M.actions for row in a.data])
    big = RawGroup.power(M.group, n)
    tn = GroupHom(M.group, big, stacked, check=False).kernel()[0]
    return t0, tn
