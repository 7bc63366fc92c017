"""Exact integer linear algebra.

Matrices are small and dense, entries are Python ints.  A finitely generated
abelian group is kept in normalized form: free coordinates first, then the
torsion coordinates with ascending invariant factors.
"""

from __future__ import annotations

from math import gcd


class DimensionMismatch(ValueError):
    pass


class IntMatrix:
    """Dense integer matrix with an explicit shape (so 0 x n is representable)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            data = [[0] * cols for _ in range(rows)]
        self.data = data

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(map(int, r)) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged matrix")
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns, rows):
        columns = [list(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise DimensionMismatch("column length %d != %d" % (len(c), rows))
        data = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls(rows, len(columns), data)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def diagonal(cls, values, rows=None, cols=None):
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        m = cls(rows, cols)
        for i, v in enumerate(values):
            m.data[i][i] = v
        return m

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def entries(self):
        return tuple(x for r in self.data for x in r)

    def copy(self):
        return IntMatrix(self.rows, self.cols, [r[:] for r in self.data])

    def to_lists(self):
        return [r[:] for r in self.data]

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def select_columns(self, idx):
        return IntMatrix(self.rows, len(idx), [[r[j] for j in idx] for r in self.data])

    def select_rows(self, idx):
        return IntMatrix(len(idx), self.cols, [self.data[i][:] for i in idx])

    def transpose(self):
        return IntMatrix(self.cols, self.rows, [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    T = property(transpose)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch("%s @ %s" % (self.shape, other.shape))
            ot = other.transpose().data
            return IntMatrix(self.rows, other.cols,
                             [[sum(a * b for a, b in zip(r, c) if a) for c in ot] for r in self.data])
        v = list(other)
        if len(v) != self.cols:
            raise DimensionMismatch("%s @ vector of length %d" % (self.shape, len(v)))
        return [sum(a * b for a, b in zip(r, v) if a) for r in self.data]

    def __add__(self, other):
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other):
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self):
        return IntMatrix(self.rows, self.cols, [[-a for a in r] for r in self.data])

    def scale(self, k):
        return IntMatrix(self.rows, self.cols, [[k * a for a in r] for r in self.data])

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch("%s vs %s" % (self.shape, other.shape))

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def is_zero(self):
        return all(a == 0 for r in self.data for a in r)

    def __repr__(self):
        return "IntMatrix(%r)" % (self.data,) if self.rows else "IntMatrix(0x%d)" % self.cols


def as_matrix(a, cols=None):
    if isinstance(a, IntMatrix):
        return a
    return IntMatrix.from_rows(a, cols)


def hstack(*ms):
    rows = ms[0].rows
    for m in ms:
        if m.rows != rows:
            raise DimensionMismatch("hstack row mismatch")
    return IntMatrix(rows, sum(m.cols for m in ms), [sum((m.data[i] for m in ms), []) for i in range(rows)])


def vstack(*ms):
    cols = ms[0].cols
    for m in ms:
        if m.cols != cols:
            raise DimensionMismatch("vstack column mismatch")
    return IntMatrix(sum(m.rows for m in ms), cols, [r[:] for m in ms for r in m.data])


def block_diag(*ms):
    out = IntMatrix(sum(m.rows for m in ms), sum(m.cols for m in ms))
    r0 = c0 = 0
    for m in ms:
        for i in range(m.rows):
            out.data[r0 + i][c0:c0 + m.cols] = m.data[i][:]
        r0 += m.rows
        c0 += m.cols
    return out


def kron(a, b):
    out = IntMatrix(a.rows * b.rows, a.cols * b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            x = a.data[i][j]
            if not x:
                continue
            for k in range(b.rows):
                row = out.data[i * b.rows + k]
                for l in range(b.cols):
                    row[j * b.cols + l] = x * b.data[k][l]
    return out


# --------------------------------------------------------------------------
# Smith normal form


def _pick_pivot(D, t, strategy):
    best = None
    for i in range(t, len(D)):
        row = D[i]
        for j in range(t, len(row)):
            x = row[j]
            if x:
                if strategy == "first":
                    return i, j
                if best is None or abs(x) < best[0]:
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        return i, j
    return None if best is None else best[1:]


def smith_normal_form(A, pivot="min"):
    """Return (U, D, V) with U*A*V = D, U and V unimodular, D in Smith form.

    ``pivot`` is "min" (smallest absolute value, the default) or "first"
    (first nonzero entry in row-major order); both give the same D.
    """
    U, D, V, _, _ = _snf(as_matrix(A), pivot)
    return U, D, V


def _snf(A, pivot="min"):
    m, n = A.shape
    D = A.to_lists()
    U = IntMatrix.identity(m).data
    Ui = IntMatrix.identity(m).data
    V = IntMatrix.identity(n).data
    Vi = IntMatrix.identity(n).data

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        U[i], U[k] = U[k], U[i]
        for r in Ui:
            r[i], r[k] = r[k], r[i]

    def swap_cols(j, k):
        for r in D:
            r[j], r[k] = r[k], r[j]
        for r in V:
            r[j], r[k] = r[k], r[j]
        Vi[j], Vi[k] = Vi[k], Vi[j]

    def add_row(src, dst, q):
        # row_dst -= q * row_src
        if not q:
            return
        rs, rd = D[src], D[dst]
        for c in range(n):
            if rs[c]:
                rd[c] -= q * rs[c]
        us, ud = U[src], U[dst]
        for c in range(m):
            if us[c]:
                ud[c] -= q * us[c]
        for r in Ui:
            if r[dst]:
                r[src] += q * r[dst]

    def add_col(src, dst, q):
        # col_dst -= q * col_src
        if not q:
            return
        for r in D:
            if r[src]:
                r[dst] -= q * r[src]
        for r in V:
            if r[src]:
                r[dst] -= q * r[src]
        vs, vd = Vi[src], Vi[dst]
        for c in range(n):
            if vd[c]:
                vs[c] += q * vd[c]

    t = 0
    while t < min(m, n):
        p = _pick_pivot(D, t, pivot)
        if p is None:
            break
        swap_rows(t, p[0])
        swap_cols(t, p[1])
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, D[i][t] // D[t][t])
                    if D[i][t]:
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, D[t][j] // D[t][t])
                    if D[t][j]:
                        done = False
            if not done:
                # move the smallest remaining entry of row/column t to the pivot
                best = (abs(D[t][t]), None, None)
                for i in range(t + 1, m):
                    if D[i][t] and abs(D[i][t]) < best[0]:
                        best = (abs(D[i][t]), i, None)
                for j in range(t + 1, n):
                    if D[t][j] and abs(D[t][j]) < best[0]:
                        best = (abs(D[t][j]), None, j)
                if best[1] is not None:
                    swap_rows(t, best[1])
                elif best[2] is not None:
                    swap_cols(t, best[2])
                continue
            piv = D[t][t]
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, -1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
            for r in Ui:
                r[t] = -r[t]
        t += 1
    return (IntMatrix(m, m, U), IntMatrix(m, n, D), IntMatrix(n, n, V),
            IntMatrix(m, m, Ui), IntMatrix(n, n, Vi))


def snf_diagonal(A):
    _, D, _ = smith_normal_form(A)
    return [D.data[i][i] for i in range(min(D.rows, D.cols))]


# --------------------------------------------------------------------------
# Column echelon form: kernels and exact solving


class LinearSolver:
    """Column echelon form A*V = E, reused for integer kernels and solves."""

    def __init__(self, A):
        A = as_matrix(A)
        self.A = A
        m, n = A.shape
        E = A.to_lists()
        V = IntMatrix.identity(n).data
        pivots = []
        pc = 0
        for i in range(m):
            if pc >= n:
                break
            row = E[i]
            while True:
                nz = [j for j in range(pc, n) if row[j]]
                if not nz:
                    break
                j0 = min(nz, key=lambda j: abs(row[j]))
                if j0 != pc:
                    for r in E:
                        r[pc], r[j0] = r[j0], r[pc]
                    for r in V:
                        r[pc], r[j0] = r[j0], r[pc]
                p = row[pc]
                left = False
                for j in range(pc + 1, n):
                    if row[j]:
                        q = row[j] // p
                        for r in E:
                            if r[pc]:
                                r[j] -= q * r[pc]
                        for r in V:
                            if r[pc]:
                                r[j] -= q * r[pc]
                        if row[j]:
                            left = True
                if not left:
                    break
            if pc < n and row[pc]:
                if row[pc] < 0:
                    for r in E:
                        r[pc] = -r[pc]
                    for r in V:
                        r[pc] = -r[pc]
                p = row[pc]
                # keep earlier columns reduced at this row to limit growth
                for l in range(pc):
                    q = row[l] // p
                    if q:
                        for r in E:
                            if r[pc]:
                                r[l] -= q * r[pc]
                        for r in V:
                            if r[pc]:
                                r[l] -= q * r[pc]
                pivots.append(i)
                pc += 1
        self.E = E
        self.V = V
        self.pivots = pivots
        self.rank = len(pivots)
        self.n = n
        self.m = m

    def kernel_basis(self):
        """Z-basis of {x : A x = 0} as a list of vectors."""
        return [[self.V[i][j] for i in range(self.n)] for j in range(self.rank, self.n)]

    def solve(self, b):
        b = list(b)
        if len(b) != self.m:
            raise DimensionMismatch("rhs length %d, expected %d" % (len(b), self.m))
        y = [0] * self.n
        E = self.E
        for k, pr in enumerate(self.pivots):
            s = b[pr] - sum(E[pr][l] * y[l] for l in range(k) if E[pr][l])
            p = E[pr][k]
            if s % p:
                return None
            y[k] = s // p
        for i in range(self.m):
            if sum(E[i][l] * y[l] for l in range(self.rank) if E[i][l]) != b[i]:
                return None
        return [sum(self.V[i][l] * y[l] for l in range(self.rank) if self.V[i][l]) for i in range(self.n)]


def integer_kernel(A):
    return LinearSolver(A).kernel_basis()


def solve_diophantine(A, b):
    """Integer solution x of A x = b, or None when none exists."""
    A = as_matrix(A)
    b = list(b)
    if len(b) != A.rows:
        raise DimensionMismatch("A has %d rows but b has length %d" % (A.rows, len(b)))
    return LinearSolver(A).solve(b)


def infeasibility_certificate(A, b):
    """For an infeasible system return (index, entry, divisor) in SNF coordinates.

    With U A V = D the system reads D y = U b; infeasibility means some U b
    entry is not divisible by the matching diagonal entry (zero beyond rank).
    """
    U, D, _ = smith_normal_form(A)
    ub = U @ list(b)
    for i, x in enumerate(ub):
        d = D.data[i][i] if i < min(D.rows, D.cols) else 0
        if (d == 0 and x != 0) or (d != 0 and x % d):
            return (i, x, d)
    return None


# --------------------------------------------------------------------------
# Finitely generated abelian groups


class FgAbelianGroup:
    """Z^free_rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ..., d_i >= 2.

    ``basis_transform`` maps presentation-generator coordinates to normalized
    coordinates; ``section`` sends normalized generators back to presentation
    coordinates.
    """

    def __init__(self, free_rank, invariant_factors, basis_transform=None, section=None):
        self.free_rank = free_rank
        self.invariant_factors = tuple(invariant_factors)
        for d in self.invariant_factors:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
            if b % a:
                raise ValueError("divisibility chain violated: %r" % (self.invariant_factors,))
        n = self.ngens
        self.basis_transform = basis_transform if basis_transform is not None else IntMatrix.identity(n)
        self.section = section if section is not None else IntMatrix.identity(n)

    @classmethod
    def free(cls, r):
        return cls(r, ())

    @classmethod
    def cyclic(cls, d):
        if d == 0:
            return cls(1, ())
        if abs(d) == 1:
            return cls(0, ())
        return cls(0, (abs(d),))

    @property
    def ngens(self):
        return self.free_rank + len(self.invariant_factors)

    @property
    def orders(self):
        return [0] * self.free_rank + list(self.invariant_factors)

    def is_zero(self):
        return self.ngens == 0

    def is_finite(self):
        return self.free_rank == 0

    def is_free(self):
        return not self.invariant_factors

    def order(self):
        if self.free_rank:
            return None
        o = 1
        for d in self.invariant_factors:
            o *= d
        return o

    def signature(self):
        return (self.free_rank, self.invariant_factors)

    def reduce(self, v):
        return [x % d if d else x for x, d in zip(v, self.orders)]

    def reduce_matrix(self, M):
        orders = self.orders
        return IntMatrix(M.rows, M.cols, [[x % d if d else x for x in r] for r, d in zip(M.data, orders)])

    def relation_matrix(self):
        """n x k matrix whose columns d_i e_i generate the relations."""
        n = self.ngens
        cols = []
        for i, d in enumerate(self.orders):
            if d:
                c = [0] * n
                c[i] = d
                cols.append(c)
        return IntMatrix.from_columns(cols, n)

    def is_zero_element(self, v):
        return all(x == 0 for x in self.reduce(v))

    def isomorphic(self, other):
        return self.signature() == other.signature()

    def __eq__(self, other):
        return hasattr(other, "signature") and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        return "FgAbelianGroup(%s)" % self.describe()

    def describe(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z/%d" % d for d in self.invariant_factors)
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.invariant_factors)}


def presented_group(generators, relation_columns, pivot="min"):
    """Cokernel of Z^m -> Z^generators whose columns are the relations."""
    R = relation_columns if isinstance(relation_columns, IntMatrix) else IntMatrix.from_columns(relation_columns, generators)
    if R.rows != generators:
        raise DimensionMismatch("relations have %d rows, expected %d" % (R.rows, generators))
    U, D, V, Ui, _ = _snf(R, pivot)
    g = generators
    diag = [D.data[i][i] if i < min(D.rows, D.cols) else 0 for i in range(g)]
    free_idx = [i for i in range(g) if diag[i] == 0]
    tors_idx = sorted((i for i in range(g) if diag[i] > 1), key=lambda i: diag[i])
    keep = free_idx + tors_idx
    T = U.select_rows(keep)
    S = Ui.select_columns(keep)
    G = FgAbelianGroup(len(free_idx), [diag[i] for i in tors_idx], T, S)
    G.basis_transform = G.reduce_matrix(T)
    return G


def group_from_presentation(relations, generators):
    """Normalized cokernel of a relation matrix whose rows are relations."""
    R = as_matrix(relations, generators)
    if R.cols != generators:
        raise DimensionMismatch("relations have %d columns, expected %d" % (R.cols, generators))
    return presented_group(generators, R.transpose())


def direct_sum_groups(*groups):
    cols = []
    n = sum(G.ngens for G in groups)
    off = 0
    for G in groups:
        for i, d in enumerate(G.orders):
            if d:
                c = [0] * n
                c[off + i] = d
                cols.append(c)
        off += G.ngens
    return presented_group(n, IntMatrix.from_columns(cols, n))


def group_tensor(A, B):
    """A (x)_Z B on the pair generators (a, b) indexed a * B.ngens + b."""
    na, nb = A.ngens, B.ngens
    n = na * nb
    cols = []
    for a, da in enumerate(A.orders):
        for b, db in enumerate(B.orders):
            g = gcd(da, db)
            if g:
                c = [0] * n
                c[a * nb + b] = g
                cols.append(c)
    return presented_group(n, IntMatrix.from_columns(cols, n))


# --------------------------------------------------------------------------
# Homomorphisms


class GroupHom:
    """Homomorphism between normalized groups, matrix in normalized coordinates."""

    def __init__(self, domain, codomain, matrix, check=True):
        matrix = as_matrix(matrix, domain.ngens) if not isinstance(matrix, IntMatrix) else matrix
        if matrix.shape != (codomain.ngens, domain.ngens):
            raise DimensionMismatch("matrix %s for %d -> %d" % (matrix.shape, domain.ngens, codomain.ngens))
        self.domain = domain
        self.codomain = codomain
        self.matrix = codomain.reduce_matrix(matrix)
        self._solver = None
        if check:
            for j, d in enumerate(domain.orders):
                if d and not codomain.is_zero_element([d * x for x in self.matrix.column(j)]):
                    raise ValueError("map does not respect the order %d of generator %d" % (d, j))

    @classmethod
    def identity(cls, G):
        return cls(G, G, IntMatrix.identity(G.ngens), check=False)

    @classmethod
    def zero(cls, A, B):
        return cls(A, B, IntMatrix.zeros(B.ngens, A.ngens), check=False)

    def __call__(self, v):
        return self.codomain.reduce(self.matrix @ list(v))

    def compose(self, other):
        """self o other."""
        if other.codomain.signature() != self.domain.signature():
            raise DimensionMismatch("cannot compose")
        return GroupHom(other.domain, self.codomain, self.matrix @ other.matrix, check=False)

    def __matmul__(self, other):
        return self.compose(other)

    def __add__(self, other):
        return GroupHom(self.domain, self.codomain, self.matrix + other.matrix, check=False)

    def __sub__(self, other):
        return GroupHom(self.domain, self.codomain, self.matrix - other.matrix, check=False)

    def __neg__(self):
        return GroupHom(self.domain, self.codomain, -self.matrix, check=False)

    def equals(self, other):
        return (self.domain == other.domain and self.codomain == other.codomain
                and self.codomain.reduce_matrix(self.matrix - other.matrix).is_zero())

    def is_zero(self):
        return self.matrix.is_zero()

    def is_identity(self):
        return self.domain == self.codomain and self.equals(GroupHom.identity(self.domain))

    def _system(self):
        return hstack(self.matrix, self.codomain.relation_matrix())

    def solver(self):
        if self._solver is None:
            self._solver = LinearSolver(self._system())
        return self._solver

    def preimage(self, v):
        """Some x with f(x) = v, or None."""
        sol = self.solver().solve(list(v))
        if sol is None:
            return None
        return self.domain.reduce(sol[:self.domain.ngens])

    def kernel(self):
        """(K, inclusion K -> domain)."""
        n = self.domain.ngens
        gens = [v[:n] for v in integer_kernel(self._system())]
        return subgroup(self.domain, gens)

    def image(self):
        return subgroup(self.codomain, self.matrix.columns())

    def cokernel(self):
        """(C, projection codomain -> C)."""
        H = self.codomain
        C = presented_group(H.ngens, self._system())
        return C, GroupHom(H, C, C.basis_transform, check=False)

    def is_injective(self):
        return self.kernel()[0].is_zero()

    def is_surjective(self):
        return self.cokernel()[0].is_zero()

    def is_iso(self):
        return self.is_injective() and self.is_surjective()

    def inverse(self):
        if not self.is_iso():
            raise ValueError("map is not an isomorphism")
        cols = []
        for j in range(self.codomain.ngens):
            e = [0] * self.codomain.ngens
            e[j] = 1
            cols.append(self.preimage(e))
        return GroupHom(self.codomain, self.domain, IntMatrix.from_columns(cols, self.domain.ngens), check=False)

    def __repr__(self):
        return "GroupHom(%s -> %s, %r)" % (self.domain.describe(), self.codomain.describe(), self.matrix.data)


def subgroup(G, generators):
    """Subgroup of G generated by the given vectors: (K, inclusion K -> G)."""
    n = G.ngens
    gens = [G.reduce(v) for v in generators]
    s = len(gens)
    S = IntMatrix.from_columns(gens, n) if gens else IntMatrix.zeros(n, 0)
    rels = [v[:s] for v in integer_kernel(hstack(S, G.relation_matrix()))]
    K = presented_group(s, IntMatrix.from_columns(rels, s) if rels else IntMatrix.zeros(s, 0))
    incl = S @ K.section
    return K, GroupHom(K, G, incl, check=False)


def coordinates_in(incl, v):
    """Coordinates of v in the subgroup given by an injective hom, or None."""
    return incl.preimage(v)


def restrict_to(incl, f_matrix, target_incl):
    """Matrix of f restricted to sub-objects: f(incl(K)) expressed in target_incl."""
    cols = []
    for j in range(incl.domain.ngens):
        v = f_matrix @ incl.matrix.column(j)
        c = target_incl.preimage(v)
        if c is None:
            raise ValueError("image leaves the target subgroup")
        cols.append(c)
    return GroupHom(incl.domain, target_incl.domain, IntMatrix.from_columns(cols, target_incl.domain.ngens), check=False)


class Homology:
    """Homology at the middle of A --f--> B --g--> C (requires g f = 0)."""

    def __init__(self, f, g):
        if not g.compose(f).is_zero():
            raise ValueError("not a complex: g o f != 0")
        self.f, self.g = f, g
        self.cycles, self.incl = g.kernel()
        K = self.cycles
        cols = []
        for j in range(f.domain.ngens):
            c = self.incl.preimage(f.matrix.column(j))
            cols.append(c)
        self.boundary_map = GroupHom(f.domain, K, IntMatrix.from_columns(cols, K.ngens), check=False)
        self.group, self.quotient = self.boundary_map.cokernel()

    def class_of(self, b):
        c = self.incl.preimage(b)
        if c is None:
            raise ValueError("not a cycle")
        return self.quotient(c)

    def representative(self, j):
        """Chain-level representative of the j-th homology generator."""
        c = self.group.section.column(j)
        return self.incl(c)

    def induced(self, chain_matrix, target):
        """Map on homology induced by a chain map given on the middle term."""
        cols = []
        for j in range(self.group.ngens):
            cols.append(target.class_of(chain_matrix @ self.representative(j)))
        return GroupHom(self.group, target.group, IntMatrix.from_columns(cols, target.group.ngens), check=False)


class RawGroup:
    """Z/o_1 + ... + Z/o_n in the given coordinate order (o_i = 0 means Z).

    Used for tuple groups such as M^n whose concatenated coordinates are not
    in normalized order.  Orders equal to 1 are allowed and mean a dead
    coordinate.
    """

    def __init__(self, orders):
        self.orders = [int(o) for o in orders]
        self._normal = None

    @classmethod
    def power(cls, G, n):
        return cls(list(G.orders) * n)

    @classmethod
    def concat(cls, *groups):
        return cls([o for G in groups for o in G.orders])

    @property
    def ngens(self):
        return len(self.orders)

    def reduce(self, v):
        return [x % d if d else x for x, d in zip(v, self.orders)]

    def reduce_matrix(self, M):
        return IntMatrix(M.rows, M.cols, [[x % d if d else x for x in r] for r, d in zip(M.data, self.orders)])

    def relation_matrix(self):
        n = self.ngens
        cols = []
        for i, d in enumerate(self.orders):
            if d:
                c = [0] * n
                c[i] = d
                cols.append(c)
        return IntMatrix.from_columns(cols, n)

    def is_zero_element(self, v):
        return all(x == 0 for x in self.reduce(v))

    def normalized(self):
        if self._normal is None:
            self._normal = presented_group(self.ngens, self.relation_matrix())
        return self._normal

    def signature(self):
        return self.normalized().signature()

    def is_zero(self):
        return self.normalized().is_zero()

    def describe(self):
        return self.normalized().describe()

    def __eq__(self, other):
        return hasattr(other, "signature") and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        return "RawGroup(%r)" % (self.orders,)
