"""Nonunital rings: a finite-rank structure-constant backend and a monomial backend.

A finite-rank ring is a free abelian group with basis b_0..b_{k-1} and
structure constants c with b_i b_j = sum_l c[i][j][l] b_l.  The monomial
backend models Z[x_1^{1/N}, ..., x_n^{1/N}] with its ideal of positive-degree
monomials; ind-rings are chains of such levels.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .verdict import Verdict
from .zlinalg import IntMatrix, LinearSolver, presented_group


class RingError(ValueError):
    pass


class AssociativityViolation(RingError):
    def __init__(self, i, j, l, lhs, rhs):
        self.triple = (i, j, l)
        self.lhs = lhs
        self.rhs = rhs
        super().__init__("(b%d b%d) b%d = %r but b%d (b%d b%d) = %r" % (i, j, l, lhs, i, j, l, rhs))


class BackendMismatch(RingError):
    pass


class MissingIdentity(RingError):
    pass


class TorsionHomGroup(RingError):
    pass


class LevelChainError(RingError):
    pass


class FiniteRankRing:
    """Ring structure on Z^k given by structure constants."""

    backend = "finite_rank"

    def __init__(self, basis_labels, structure_constants, validate=True):
        self.labels = tuple(str(x) for x in basis_labels)
        k = len(self.labels)
        c = [[list(map(int, structure_constants[i][j])) for j in range(k)] for i in range(k)] if k else []
        if len(structure_constants) != k or any(len(row) != k for row in structure_constants):
            raise RingError("structure constants must have shape %dx%dx%d" % (k, k, k))
        for i in range(k):
            for j in range(k):
                if len(c[i][j]) != k:
                    raise RingError("structure constants must have shape %dx%dx%d" % (k, k, k))
        self.c = c
        self._op = None
        self._lmats = None
        self._rmats = None
        if validate:
            check_associativity(self)

    @property
    def rank(self):
        return len(self.labels)

    def basis_vector(self, i):
        v = [0] * self.rank
        v[i] = 1
        return v

    def mul(self, x, y):
        k = self.rank
        out = [0] * k
        for i in range(k):
            if not x[i]:
                continue
            for j in range(k):
                if not y[j]:
                    continue
                s = x[i] * y[j]
                cij = self.c[i][j]
                for l in range(k):
                    if cij[l]:
                        out[l] += s * cij[l]
        return out

    def left_mult_matrices(self):
        """Matrices of x -> b_i x (the left regular action)."""
        if self._lmats is None:
            k = self.rank
            self._lmats = [IntMatrix.from_columns([self.c[i][j] for j in range(k)], k) for i in range(k)]
        return self._lmats

    def right_mult_matrices(self):
        """Matrices of x -> x b_i (the right regular action)."""
        if self._rmats is None:
            k = self.rank
            self._rmats = [IntMatrix.from_columns([self.c[j][i] for j in range(k)], k) for i in range(k)]
        return self._rmats

    def left_mult(self, x):
        k = self.rank
        return IntMatrix.from_columns([self.mul(x, self.basis_vector(j)) for j in range(k)], k)

    def right_mult(self, x):
        k = self.rank
        return IntMatrix.from_columns([self.mul(self.basis_vector(j), x) for j in range(k)], k)

    def opposite(self):
        if self._op is None:
            k = self.rank
            op = FiniteRankRing(self.labels, [[self.c[j][i] for j in range(k)] for i in range(k)], validate=False)
            op._op = self
            self._op = op
        return self._op

    def is_commutative(self):
        k = self.rank
        return all(self.c[i][j] == self.c[j][i] for i in range(k) for j in range(k))

    def find_unit(self):
        """A two-sided unit element, or None."""
        k = self.rank
        rows = []
        rhs = []
        for j in range(k):
            for l in range(k):
                rows.append([self.c[i][j][l] for i in range(k)])
                rhs.append(1 if j == l else 0)
                rows.append([self.c[j][i][l] for i in range(k)])
                rhs.append(1 if j == l else 0)
        if not rows:
            return None
        return LinearSolver(IntMatrix.from_rows(rows, k)).solve(rhs)

    def structurally_equal(self, other):
        return isinstance(other, FiniteRankRing) and self.rank == other.rank and self.c == other.c

    def to_json(self):
        return {"backend": "finite_rank", "basis": list(self.labels), "structure": self.c}

    def __repr__(self):
        return "FiniteRankRing(%s)" % ", ".join(self.labels)


class Unitalization(FiniteRankRing):
    """Z + R with the unit as basis element 0 and R on basis elements 1..k."""

    def __init__(self, base):
        k = base.rank
        labels = ("1",) + base.labels
        c = [[[0] * (k + 1) for _ in range(k + 1)] for _ in range(k + 1)]
        for i in range(k + 1):
            c[0][i][i] = 1
            c[i][0][i] = 1
        for i in range(k):
            for j in range(k):
                c[i + 1][j + 1][1:] = list(base.c[i][j])
        super().__init__(labels, c, validate=False)
        self.base = base
        # re-unitalizing a unital ring is allowed; the result behaves like Z x R
        self.base_has_unit = base.rank > 0 and base.find_unit() is not None

    def restrict_to_ideal(self):
        k = self.base.rank
        return FiniteRankRing(self.base.labels, [[self.c[i + 1][j + 1][1:] for j in range(k)] for i in range(k)], validate=False)


def check_associativity(R):
    k = R.rank
    c = R.c
    for i, j, l in product(range(k), repeat=3):
        lhs = [0] * k
        for p in range(k):
            if c[i][j][p]:
                for q in range(k):
                    lhs[q] += c[i][j][p] * c[p][l][q]
        rhs = [0] * k
        for p in range(k):
            if c[j][l][p]:
                for q in range(k):
                    rhs[q] += c[j][l][p] * c[i][p][q]
        if lhs != rhs:
            raise AssociativityViolation(i, j, l, lhs, rhs)


def make_finite_rank_ring(basis_labels, structure_constants):
    return FiniteRankRing(basis_labels, structure_constants)


def zero_ring():
    return FiniteRankRing([], [])


def unitalize(R):
    if not isinstance(R, FiniteRankRing):
        raise BackendMismatch("unitalize needs the finite-rank backend; monomial rings carry their own unit")
    return Unitalization(R)


def opposite(R):
    return R.opposite()


def direct_product(R, S):
    if not (isinstance(R, FiniteRankRing) and isinstance(S, FiniteRankRing)):
        raise BackendMismatch("direct products need finite-rank backends")
    k, m = R.rank, S.rank
    n = k + m
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(k):
        for j in range(k):
            c[i][j][:k] = list(R.c[i][j])
    for i in range(m):
        for j in range(m):
            c[k + i][k + j][k:] = list(S.c[i][j])
    labels = list(R.labels) + list(S.labels)
    if len(set(labels)) < len(labels) and m and k:
        labels = ["%s_1" % x for x in R.labels] + ["%s_2" % x for x in S.labels]
    return FiniteRankRing(labels, c, validate=False)


def derive_ring(op, *args):
    if op == "opposite":
        (R,) = args
        if not isinstance(R, FiniteRankRing):
            raise BackendMismatch("opposite needs the finite-rank backend")
        return R.opposite()
    if op == "direct_product":
        R, S = args
        return direct_product(R, S)
    raise ValueError("unknown derivation %r" % op)


# --------------------------------------------------------------------------
# Rings from small preadditive categories


class CategoryRing(FiniteRankRing):
    """Ring of a finite preadditive category with free hom-groups.

    ``blocks[(x, y)]`` lists the basis indices spanning Hom(x, y), and
    ``idempotents[x]`` is the vector of id_x.
    """

    def __init__(self, labels, c, objects, blocks, idempotents):
        super().__init__(labels, c)
        self.objects = tuple(objects)
        self.blocks = blocks
        self.idempotents = idempotents


def ring_from_preadditive_category(objects, hom_groups, compositions, identities=None):
    """Build R = (+)_{x,y} Hom(x, y) with multiplication given by composition.

    hom_groups maps (x, y) to a rank or a free FgAbelianGroup.  compositions
    maps (x, y, z) to a table T with T[a][b] the coordinates of a o b in
    Hom(x, z) for a in Hom(y, z) and b in Hom(x, y).
    """
    objects = list(objects)
    ranks = {}
    for x in objects:
        for y in objects:
            h = hom_groups.get((x, y), 0)
            if hasattr(h, "invariant_factors"):
                if h.invariant_factors:
                    raise TorsionHomGroup("Hom(%s, %s) has torsion %r; only free hom-groups are supported"
                                          % (x, y, list(h.invariant_factors)))
                h = h.free_rank
            ranks[(x, y)] = int(h)
    blocks = {}
    labels = []
    for x in objects:
        for y in objects:
            idx = []
            for a in range(ranks[(x, y)]):
                idx.append(len(labels))
                labels.append("%s->%s" % (x, y) if ranks[(x, y)] == 1 else "%s->%s:%d" % (x, y, a))
            blocks[(x, y)] = idx
    n = len(labels)
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for x in objects:
        for y in objects:
            for z in objects:
                ryz, rxy, rxz = ranks[(y, z)], ranks[(x, y)], ranks[(x, z)]
                if not (ryz and rxy):
                    continue
                table = compositions.get((x, y, z))
                if table is None:
                    raise RingError("missing composition table for %s -> %s -> %s" % (x, y, z))
                for a in range(ryz):
                    for b in range(rxy):
                        v = list(table[a][b])
                        if len(v) != rxz:
                            raise RingError("composition %s->%s->%s has wrong length" % (x, y, z))
                        row = c[blocks[(y, z)][a]][blocks[(x, y)][b]]
                        for t, val in enumerate(v):
                            row[blocks[(x, z)][t]] = val
    try:
        R0 = FiniteRankRing(labels, c)
    except AssociativityViolation as exc:
        raise RingError("composition is not associative: %s" % exc) from exc

    idem = {}
    for x in objects:
        if identities and x in identities:
            e = [0] * n
            for t, val in enumerate(identities[x]):
                e[blocks[(x, x)][t]] = val
        else:
            e = _solve_identity(R0, blocks, objects, x)
        if e is None:
            raise MissingIdentity("no identity morphism on object %s" % x)
        idem[x] = e
    R = CategoryRing(labels, c, objects, blocks, idem)
    _check_idempotent_family(R)
    return R


def _solve_identity(R, blocks, objects, x):
    n = R.rank
    cols = blocks[(x, x)]
    if not cols:
        return None
    rows, rhs = [], []
    for w in objects:
        for g in blocks[(w, x)]:
            # e o g = g
            for l in range(n):
                rows.append([R.c[i][g][l] for i in cols])
                rhs.append(1 if l == g else 0)
    for z in objects:
        for h in blocks[(x, z)]:
            for l in range(n):
                rows.append([R.c[h][i][l] for i in cols])
                rhs.append(1 if l == h else 0)
    sol = LinearSolver(IntMatrix.from_rows(rows, len(cols))).solve(rhs)
    if sol is None:
        return None
    e = [0] * n
    for i, v in zip(cols, sol):
        e[i] = v
    return e


def _check_idempotent_family(R):
    n = R.rank
    total = [0] * n
    for x, ex in R.idempotents.items():
        for y, ey in R.idempotents.items():
            p = R.mul(ex, ey)
            want = ex if x == y else [0] * n
            if p != want:
                raise RingError("idempotents are not orthogonal at (%s, %s)" % (x, y))
        total = [a + b for a, b in zip(total, ex)]
    for i in range(n):
        b = R.basis_vector(i)
        if R.mul(total, b) != b or R.mul(b, total) != b:
            raise MissingIdentity("sum of identities does not act as a unit on %s" % R.labels[i])


# --------------------------------------------------------------------------
# Monomial backend


class MonomialLevelRing:
    """Z[x_1^{1/N}, ..., x_n^{1/N}] with R_N the span of positive-degree monomials.

    Monomials are exponent tuples of numerators over the common denominator N.
    With ``kill_degree`` set, monomials of total degree >= kill_degree vanish
    (the quotient by that monomial ideal).
    """

    backend = "monomial"

    def __init__(self, n, N, kill_degree=None):
        if n < 1 or N < 1:
            raise RingError("need n >= 1 variables and level N >= 1")
        self.n = int(n)
        self.N = int(N)
        self.kill_degree = None if kill_degree is None else Fraction(kill_degree)

    @property
    def variables(self):
        return self.n

    @property
    def level(self):
        return self.N

    def degree(self, mono):
        return Fraction(sum(mono), self.N)

    def survives(self, mono):
        return self.kill_degree is None or self.degree(mono) < self.kill_degree

    def in_ideal(self, mono):
        return any(mono) and self.survives(mono)

    def mul(self, a, b):
        """Product of sparse elements {exponent tuple: coefficient}."""
        out = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                if not self.survives(m):
                    continue
                out[m] = out.get(m, 0) + ca * cb
        return {m: c for m, c in out.items() if c}

    def generator(self, i):
        m = [0] * self.n
        m[i] = 1
        return {tuple(m): 1}

    def monomials_of_degree(self, d):
        """Exponent tuples of total degree d (d a Fraction)."""
        d = Fraction(d)
        t = d * self.N
        if t.denominator != 1 or t < 0:
            return []
        t = int(t)
        out = []

        def rec(prefix, left, k):
            if k == 1:
                out.append(tuple(prefix + [left]))
                return
            for a in range(left, -1, -1):
                rec(prefix + [a], left - a, k - 1)
        rec([], t, self.n)
        return sorted(out, reverse=True)

    def quotient(self, kill_degree):
        return MonomialLevelRing(self.n, self.N, kill_degree)

    def to_json(self):
        return {"backend": "monomial", "variables": self.n, "level": self.N}

    def __eq__(self, other):
        return (isinstance(other, MonomialLevelRing) and (self.n, self.N, self.kill_degree)
                == (other.n, other.N, other.kill_degree))

    def __hash__(self):
        return hash((self.n, self.N, self.kill_degree))

    def __repr__(self):
        q = "" if self.kill_degree is None else ", kill>=%s" % self.kill_degree
        return "MonomialLevelRing(n=%d, N=%d%s)" % (self.n, self.N, q)


def make_monomial_level_ring(n, N):
    return MonomialLevelRing(n, N)


def doubling_levels(start, count):
    return [start * 2 ** i for i in range(count)]


class IndRing:
    """Chain of level rings R_{N_1} -> R_{N_2} -> ... with N_i | N_{i+1}."""

    backend = "ind"

    def __init__(self, n, levels):
        levels = [int(N) for N in levels]
        if not levels:
            raise LevelChainError("empty level chain")
        for a, b in zip(levels, levels[1:]):
            if b <= a or b % a:
                raise LevelChainError("levels must be strictly ascending and divide each other: %r" % levels)
        self.n = int(n)
        self.levels = levels
        self.rings = [MonomialLevelRing(n, N) for N in levels]
        for k in range(len(levels) - 1):
            self.transition(k).check()
        for k in range(len(levels) - 2):
            t01 = self.transition(k)
            t12 = self.transition(k + 1)
            direct = RingHom(self.rings[k], self.rings[k + 2], substitution=levels[k + 2] // levels[k])
            for i in range(self.n):
                g = self.rings[k].generator(i)
                if t12.apply(t01.apply(g)) != direct.apply(g):
                    raise LevelChainError("transitions are not coherent at level %d" % levels[k])

    def ring_at(self, level):
        return self.rings[self.levels.index(level)]

    def transition(self, k):
        return RingHom(self.rings[k], self.rings[k + 1], substitution=self.levels[k + 1] // self.levels[k])

    def to_json(self):
        return {"backend": "ind", "variables": self.n, "levels": list(self.levels)}

    def __repr__(self):
        return "IndRing(n=%d, levels=%r)" % (self.n, self.levels)


def build_ind_ring(n, levels=None, start=1, count=3):
    if levels is None:
        levels = doubling_levels(start, count)
    return IndRing(n, levels)


# --------------------------------------------------------------------------
# Ring homomorphisms


class RingHom:
    """Ring homomorphism: a matrix (finite rank) or a monomial substitution.

    For the monomial backend the substitution x^{a/N} -> x^{a m / (N m)}
    relabels exponents; it is the inclusion of level N into level N*m.
    """

    def __init__(self, domain, codomain, matrix=None, substitution=None):
        self.domain = domain
        self.codomain = codomain
        if matrix is not None:
            if not (isinstance(domain, FiniteRankRing) and isinstance(codomain, FiniteRankRing)):
                raise BackendMismatch("matrix homomorphisms need finite-rank rings")
            # rows are codomain coordinates, columns are images of domain basis elements
            m = matrix if isinstance(matrix, IntMatrix) else IntMatrix.from_rows(matrix, domain.rank)
            if m.shape != (codomain.rank, domain.rank):
                raise RingError("homomorphism matrix has shape %s, expected %s"
                                % (m.shape, (codomain.rank, domain.rank)))
            self.matrix = m
            self.substitution = None
        else:
            if not (isinstance(domain, MonomialLevelRing) and isinstance(codomain, MonomialLevelRing)):
                raise BackendMismatch("substitutions need monomial rings")
            if substitution is None or codomain.N != domain.N * substitution or codomain.n != domain.n:
                raise RingError("substitution must relabel level %d into level %d" % (domain.N, codomain.N))
            self.matrix = None
            self.substitution = substitution

    @classmethod
    def from_images(cls, domain, codomain, images):
        """images[i] is f(b_i) as a coordinate vector in the codomain."""
        return cls(domain, codomain, matrix=IntMatrix.from_columns(images, codomain.rank))

    def apply(self, x):
        if self.matrix is not None:
            return self.matrix @ list(x)
        m = self.substitution
        return {tuple(a * m for a in mono): c for mono, c in x.items()}

    def check(self):
        if self.matrix is not None:
            K, R = self.domain, self.codomain
            for i in range(K.rank):
                for j in range(K.rank):
                    lhs = self.apply(K.c[i][j])
                    rhs = R.mul(self.apply(K.basis_vector(i)), self.apply(K.basis_vector(j)))
                    if lhs != rhs:
                        raise RingError("f(b%d b%d) != f(b%d) f(b%d)" % (i, j, i, j))
        else:
            K = self.domain
            for i in range(K.n):
                for j in range(K.n):
                    a, b = K.generator(i), K.generator(j)
                    if self.apply(K.mul(a, b)) != self.codomain.mul(self.apply(a), self.apply(b)):
                        raise RingError("substitution is not multiplicative")
        return self

    def __repr__(self):
        if self.matrix is not None:
            return "RingHom(%r)" % (self.matrix.data,)
        return "RingHom(level %d -> %d)" % (self.domain.N, self.codomain.N)


def ring_hom(domain, codomain, images):
    return RingHom.from_images(domain, codomain, images).check()


def identity_hom(R):
    return RingHom.from_images(R, R, [R.basis_vector(i) for i in range(R.rank)])


def zero_hom(K, R):
    return RingHom.from_images(K, R, [[0] * R.rank for _ in range(K.rank)])


# --------------------------------------------------------------------------
# Idempotency


def is_idempotent_ring(R):
    """Decide R^2 = R, with a certificate in the verdict data."""
    if isinstance(R, FiniteRankRing):
        k = R.rank
        products = [R.c[i][j] for i in range(k) for j in range(k)]
        Q = presented_group(k, IntMatrix.from_columns(products, k) if products else IntMatrix.zeros(k, 0))
        if Q.is_zero():
            return Verdict.yes("products of basis elements span R")
        return Verdict.no("R/R^2 = %s" % Q.describe(), quotient=Q)
    if isinstance(R, MonomialLevelRing):
        d = Fraction(1, R.N)
        if R.kill_degree is not None and d >= R.kill_degree:
            return Verdict.yes("the ring is zero")
        return Verdict.no("monomials of degree %s are not products of positive-degree monomials" % d,
                          missing_degree=d)
    if isinstance(R, IndRing):
        certs = []
        for k in range(len(R.levels) - 1):
            m = R.levels[k + 1] // R.levels[k]
            # x_i^{1/N} = x_i^{1/(Nm)} * x_i^{(m-1)/(Nm)} at the next level
            nxt = R.rings[k + 1]
            for i in range(R.n):
                a = nxt.generator(i)
                b = {tuple((m - 1) if t == i else 0 for t in range(R.n)): 1}
                if nxt.mul(a, b) != R.transition(k).apply(R.rings[k].generator(i)):
                    return Verdict(None, "generator %d at level %d not split" % (i, R.levels[k]))
            certs.append((R.levels[k], R.levels[k + 1]))
        if not certs:
            return Verdict(None, "a single level cannot certify idempotency", "HEURISTIC")
        return Verdict.yes("every generator below the top level is a product one level up",
                           certifying_levels=certs)
    raise BackendMismatch("unsupported ring %r" % (R,))


# --------------------------------------------------------------------------
# JSON


def ring_from_json(obj):
    if not isinstance(obj, dict):
        raise RingError("ring must be a JSON object")
    backend = obj.get("backend")
    if backend == "finite_rank":
        basis = obj.get("basis")
        structure = obj.get("structure")
        if not isinstance(basis, list) or not isinstance(structure, list):
            raise RingError("finite_rank ring needs 'basis' and 'structure' arrays")
        k = len(basis)
        if len(structure) != k:
            raise RingError("field 'structure': expected %d rows, got %d" % (k, len(structure)))
        for i, row in enumerate(structure):
            if not isinstance(row, list) or len(row) != k:
                raise RingError("field 'structure[%d]': expected %d entries" % (i, k))
            for j, vec in enumerate(row):
                if not isinstance(vec, list) or len(vec) != k or not all(isinstance(x, int) for x in vec):
                    raise RingError("field 'structure[%d][%d]': expected %d integers" % (i, j, k))
        return make_finite_rank_ring(basis, structure)
    if backend == "monomial":
        n, N = obj.get("variables"), obj.get("level")
        if not isinstance(n, int) or not isinstance(N, int):
            raise RingError("monomial ring needs integer 'variables' and 'level'")
        return make_monomial_level_ring(n, N)
    if backend == "ind":
        n, levels = obj.get("variables"), obj.get("levels")
        if not isinstance(n, int) or not isinstance(levels, list):
            raise RingError("ind ring needs integer 'variables' and a 'levels' array")
        return build_ind_ring(n, levels)
    raise RingError("field 'backend': unknown value %r" % (backend,))


def truncated_monomial_ring(n, cutoff):
    """Positive part of Z[x_1..x_n] / (monomials of degree >= cutoff) as a finite-rank ring."""
    monos = []
    for d in range(1, cutoff):
        monos.extend(MonomialLevelRing(n, 1).monomials_of_degree(d))
    index = {m: i for i, m in enumerate(monos)}
    k = len(monos)
    c = [[[0] * k for _ in range(k)] for _ in range(k)]
    for i, a in enumerate(monos):
        for j, b in enumerate(monos):
            s = tuple(x + y for x, y in zip(a, b))
            if s in index:
                c[i][j][index[s]] = 1
    names = "xyzw"
    labels = []
    for m in monos:
        parts = []
        for v, e in enumerate(m):
            if e:
                var = names[v] if n <= len(names) else "x%d" % (v + 1)
                parts.append(var if e == 1 else "%s^%d" % (var, e))
        labels.append("".join(parts))
    return FiniteRankRing(labels, c)
