"""Modules over nonunital rings whose underlying groups are finitely generated.

A left module over a finite-rank ring R is a normalized group with one action
matrix per basis element of R.  Right modules are handled as left modules
over the opposite ring.  Tensor products and Hom groups are computed over the
unitalization, where they agree with the nonunital ones.
"""

from __future__ import annotations

from fractions import Fraction

from .rings import FiniteRankRing, MonomialLevelRing, RingError, RingHom
from .zlinalg import (
    FgAbelianGroup,
    GroupHom,
    IntMatrix,
    RawGroup,
    block_diag,
    kron,
    presented_group,
    restrict_to,
    subgroup,
)


class ModuleError(ValueError):
    pass


class ActionIncompatibility(ModuleError):
    def __init__(self, i, j, detail=""):
        self.pair = (i, j)
        super().__init__("actions of basis elements %d and %d are incompatible%s" % (i, j, detail))


class RingMismatch(ModuleError):
    pass


def _orders_group(group):
    """Normalize a group description; returns (group, transform, section)."""
    if isinstance(group, FgAbelianGroup):
        return group, None, None
    if isinstance(group, dict):
        orders = [0] * int(group.get("free_rank", 0)) + [int(d) for d in group.get("torsion", [])]
    else:
        orders = [int(d) for d in group]
    raw = RawGroup(orders)
    if all(d == 0 for d in orders) or FgAbelianGroup_is_normal(orders):
        free = sum(1 for d in orders if d == 0)
        return FgAbelianGroup(free, [d for d in orders if d]), None, None
    G = raw.normalized()
    return G, G.basis_transform, G.section


def FgAbelianGroup_is_normal(orders):
    free = 0
    while free < len(orders) and orders[free] == 0:
        free += 1
    tors = orders[free:]
    if any(d < 2 for d in tors):
        return False
    return all(b % a == 0 for a, b in zip(tors, tors[1:]))


class Module:
    """Module over a finite-rank ring or a monomial level ring.

    ``actions[i]`` is the matrix of m -> b_i m (left) or m -> m b_i (right)
    in normalized coordinates.  Over a monomial ring there is one action per
    variable x_i^{1/N}.
    """

    def __init__(self, ring, side, group, actions, validate=True, name=None):
        if side not in ("left", "right"):
            raise ModuleError("side must be 'left' or 'right'")
        self.ring = ring
        self.side = side
        self.group = group
        self.actions = [group.reduce_matrix(a if isinstance(a, IntMatrix) else IntMatrix.from_rows(a, group.ngens))
                        for a in actions]
        self.name = name
        self._left = None
        if validate:
            self.validate()

    # -- structure -------------------------------------------------------

    @property
    def ngens(self):
        return self.group.ngens

    @property
    def lring(self):
        """The ring acting from the left in the equivalent left-module view."""
        if isinstance(self.ring, FiniteRankRing) and self.side == "right":
            return self.ring.opposite()
        return self.ring

    def as_left(self):
        if self.side == "left":
            return self
        if self._left is None:
            self._left = Module(self.lring, "left", self.group, self.actions, validate=False, name=self.name)
        return self._left

    def as_side(self, ring, side):
        """Reinterpret a left module over R^op as a right module over R (and back)."""
        return Module(ring, side, self.group, self.actions, validate=False, name=self.name)

    def action_of(self, x):
        """Matrix of the action of a ring element given by coordinates."""
        n = self.ngens
        out = IntMatrix.zeros(n, n)
        for i, c in enumerate(x):
            if c:
                out = out + self.actions[i].scale(c)
        return self.group.reduce_matrix(out)

    def unital_actions(self):
        """Actions of the unitalization basis (1, b_0, b_1, ...)."""
        return [IntMatrix.identity(self.ngens)] + list(self.actions)

    def validate(self):
        G = self.group
        for i, a in enumerate(self.actions):
            if a.shape != (G.ngens, G.ngens):
                raise ModuleError("action %d has shape %s, expected %s" % (i, a.shape, (G.ngens, G.ngens)))
            try:
                GroupHom(G, G, a)
            except ValueError as exc:
                raise ModuleError("action %d does not respect torsion: %s" % (i, exc)) from exc
        R = self.ring
        if isinstance(R, FiniteRankRing):
            if len(self.actions) != R.rank:
                raise ModuleError("need %d actions, got %d" % (R.rank, len(self.actions)))
            c = self.lring.c
            A = self.actions
            for i in range(R.rank):
                for j in range(R.rank):
                    lhs = A[i] @ A[j]
                    rhs = self.action_of(c[i][j])
                    if not G.reduce_matrix(lhs - rhs).is_zero():
                        raise ActionIncompatibility(i, j)
        elif isinstance(R, MonomialLevelRing):
            if len(self.actions) != R.n:
                raise ModuleError("need %d variable actions, got %d" % (R.n, len(self.actions)))
            A = self.actions
            for i in range(R.n):
                for j in range(i + 1, R.n):
                    if not G.reduce_matrix(A[i] @ A[j] - A[j] @ A[i]).is_zero():
                        raise ActionIncompatibility(i, j, ": variable actions must commute")
            for i in range(R.n):
                if not is_nilpotent(G, A[i]):
                    raise ActionIncompatibility(i, i, ": variable action must be nilpotent")
        else:
            raise ModuleError("unsupported ring %r" % (R,))
        return self

    def is_null(self):
        return all(a.is_zero() for a in self.actions)

    def is_zero(self):
        return self.group.is_zero()

    def __repr__(self):
        label = self.name or self.group.describe()
        return "Module(%s, %s, %s)" % (label, self.side, self.ring)


def is_nilpotent(G, A):
    bound = G.free_rank + sum(d.bit_length() for d in G.invariant_factors) + 1
    P = IntMatrix.identity(G.ngens)
    for _ in range(bound):
        P = G.reduce_matrix(A @ P)
        if P.is_zero():
            return True
    return False


def make_module(ring, side, group, actions, name=None):
    G, T, S = _orders_group(group)
    acts = [a if isinstance(a, IntMatrix) else IntMatrix.from_rows(a, len(a[0]) if a else 0) for a in actions]
    if T is not None:
        acts = [T @ a @ S for a in acts]
    return Module(ring, side, G, acts, name=name)


# -- standard modules -----------------------------------------------------


def regular_module(R, side="left"):
    acts = R.left_mult_matrices() if side == "left" else R.right_mult_matrices()
    return Module(R, side, FgAbelianGroup.free(R.rank), acts, validate=False, name="R" if side == "left" else "R_R")


def null_module(R, group, side="left", name=None):
    G, _, _ = _orders_group(group)
    count = R.rank if isinstance(R, FiniteRankRing) else R.n
    return Module(R, side, G, [IntMatrix.zeros(G.ngens, G.ngens) for _ in range(count)], validate=False, name=name)


def trivial_module(R, side="left"):
    """Z = R~/R with R acting by zero."""
    return null_module(R, [0], side, name="Z")


def free_unital_module(R, g, side="left"):
    """The free R~-module of rank g viewed as an R-module (group of rank (k+1) g)."""
    from .rings import Unitalization
    U = Unitalization(R)
    mats = U.left_mult_matrices() if side == "left" else U.right_mult_matrices()
    acts = [block_diag(*([mats[i + 1]] * g)) if g else IntMatrix.zeros(0, 0) for i in range(R.rank)]
    return Module(R, side, FgAbelianGroup.free((R.rank + 1) * g), acts, validate=False, name="R~^%d" % g)


def direct_sum(*mods):
    R = mods[0].ring
    side = mods[0].side
    for M in mods:
        if M.ring is not R and not _same_ring(M.ring, R):
            raise RingMismatch("direct sum over different rings")
        if M.side != side:
            raise RingMismatch("direct sum of modules of different sides")
    raw = RawGroup.concat(*[M.group for M in mods])
    G = raw.normalized()
    acts = []
    for i in range(len(mods[0].actions)):
        big = block_diag(*[M.actions[i] for M in mods])
        acts.append(G.basis_transform @ big @ G.section)
    out = Module(R, side, G, acts, validate=False)
    out.summand_transform = G.basis_transform
    out.summand_section = G.section
    return out


def _same_ring(R, S):
    if R is S:
        return True
    if isinstance(R, FiniteRankRing) and isinstance(S, FiniteRankRing):
        return R.structurally_equal(S)
    return R == S


def check_same_ring(M, N):
    if not _same_ring(M.ring, N.ring):
        raise RingMismatch("modules live over different rings")


# -- morphisms ------------------------------------------------------------


class ModuleHom:
    """Module morphism: a group hom commuting with every action."""

    def __init__(self, domain, codomain, hom, check=True):
        self.domain = domain
        self.codomain = codomain
        self.hom = hom if isinstance(hom, GroupHom) else GroupHom(domain.group, codomain.group, hom)
        if check:
            for i, (a, b) in enumerate(zip(domain.actions, codomain.actions)):
                if not codomain.group.reduce_matrix(self.hom.matrix @ a - b @ self.hom.matrix).is_zero():
                    raise ModuleError("morphism does not commute with action %d" % i)

    @property
    def matrix(self):
        return self.hom.matrix

    def compose(self, other):
        return ModuleHom(other.domain, self.codomain, self.hom.compose(other.hom), check=False)

    def is_iso(self):
        return self.hom.is_iso()

    def __repr__(self):
        return "ModuleHom(%r)" % (self.hom,)


def submodule(M, incl):
    """Module structure on a subgroup (K, inclusion) stable under the actions."""
    acts = [restrict_to(incl, a, incl).matrix for a in M.actions]
    S = Module(M.ring, M.side, incl.domain, acts, validate=False)
    return S, ModuleHom(S, M, incl, check=False)


def quotient_module(M, generators):
    """M / S where the vectors span (as a group) a submodule S."""
    G = M.group
    cols = [G.reduce(v) for v in generators]
    rel = IntMatrix.from_columns(cols, G.ngens) if cols else IntMatrix.zeros(G.ngens, 0)
    from .zlinalg import hstack
    Q = presented_group(G.ngens, hstack(rel, G.relation_matrix()))
    acts = [Q.basis_transform @ a @ Q.section for a in M.actions]
    QM = Module(M.ring, M.side, Q, acts, validate=False)
    return QM, ModuleHom(M, QM, GroupHom(G, Q, Q.basis_transform, check=False), check=False)


def kernel_module(f):
    K, incl = f.hom.kernel()
    return submodule(f.domain, incl)


def cokernel_module(f):
    return quotient_module(f.codomain, f.hom.matrix.columns())


def image_module(f):
    K, incl = f.hom.image()
    return submodule(f.codomain, incl)


def submodule_generated(M, vectors):
    """Smallest submodule containing the vectors (closure under the actions)."""
    G = M.group
    gens = [G.reduce(v) for v in vectors]
    while True:
        K, incl = subgroup(G, gens)
        new = []
        for a in M.actions:
            for j in range(K.ngens):
                v = a @ incl.matrix.column(j)
                if incl.preimage(v) is None:
                    new.append(G.reduce(v))
        if not new:
            return submodule(M, incl)
        gens = gens + new


# -- tensor products --------------------------------------------------------


class TensorProduct:
    """N (x)_R M for a right module N and a left module M.

    Pair generators (a, b) are indexed a * M.ngens + b.  ``transform`` maps
    pair coordinates to normalized coordinates of ``group``; ``section``
    lifts normalized generators to pair coordinates.
    """

    def __init__(self, N, M):
        if N.side != "right" or M.side != "left":
            raise ModuleError("tensor_over_ring expects a right module and a left module")
        check_same_ring(N, M)
        if not isinstance(N.ring, FiniteRankRing):
            raise ModuleError("tensor products need the finite-rank backend")
        self.N, self.M = N, M
        nN, nM = N.ngens, M.ngens
        self.npairs = nN * nM
        cols = []
        from math import gcd
        for a, da in enumerate(N.group.orders):
            for b, db in enumerate(M.group.orders):
                g = gcd(da, db)
                if g:
                    c = [0] * self.npairs
                    c[a * nM + b] = g
                    cols.append(c)
        for r in range(N.ring.rank):
            An, Am = N.actions[r], M.actions[r]
            for a in range(nN):
                for b in range(nM):
                    c = [0] * self.npairs
                    for i in range(nN):
                        if An.data[i][a]:
                            c[i * nM + b] += An.data[i][a]
                    for j in range(nM):
                        if Am.data[j][b]:
                            c[a * nM + j] -= Am.data[j][b]
                    if any(c):
                        cols.append(c)
        self.group = presented_group(self.npairs, IntMatrix.from_columns(cols, self.npairs))
        self.transform = self.group.basis_transform
        self.section = self.group.section

    def pair(self, a, b):
        return a * self.M.ngens + b

    def element(self, n_vec, m_vec):
        """Normalized coordinates of n (x) m."""
        v = [0] * self.npairs
        nM = self.M.ngens
        for a, x in enumerate(n_vec):
            if x:
                for b, y in enumerate(m_vec):
                    if y:
                        v[a * nM + b] += x * y
        return self.group.reduce(self.transform @ v)

    def induced(self, pair_matrix, target=None):
        """Normalized matrix of a map given on pair coordinates."""
        target = target or self
        return target.group.reduce_matrix(target.transform @ pair_matrix @ self.section)

    def left_action(self, ops):
        """Actions induced by endomorphisms of N (e.g. a left ring action on a bimodule)."""
        eye = IntMatrix.identity(self.M.ngens)
        return [self.induced(kron(op, eye)) for op in ops]

    def right_action(self, ops):
        eye = IntMatrix.identity(self.N.ngens)
        return [self.induced(kron(eye, op)) for op in ops]

    def as_module(self, ring, side, ops, from_left_factor=True):
        acts = self.left_action(ops) if from_left_factor else self.right_action(ops)
        return Module(ring, side, self.group, acts, validate=False)


def tensor_over_ring(N, M):
    return TensorProduct(N, M)


def tensor_map(T1, T2, phi, psi):
    """phi (x) psi : T1 -> T2 for phi: N1 -> N2 and psi: M1 -> M2 (matrices)."""
    return GroupHom(T1.group, T2.group, T1.induced(kron(phi, psi), T2), check=False)


# -- Hom groups -----------------------------------------------------------


class HomGroup:
    """Hom_R(L, M) for left modules, as a subgroup of the tuple group M^{L.ngens}.

    A tuple coordinate (j, i) is the i-th coordinate of the image of the j-th
    generator of L and is indexed j * M.ngens + i.
    """

    def __init__(self, L, M):
        if L.side != M.side:
            raise ModuleError("Hom needs modules on the same side")
        check_same_ring(L, M)
        L, M = L.as_left(), M.as_left()
        self.L, self.M = L, M
        nL, nM = L.ngens, M.ngens
        self.tuples = RawGroup.power(M.group, nL)
        rows = []
        out_orders = []
        # well-definedness on torsion generators of L
        for j, d in enumerate(L.group.orders):
            if d:
                for i in range(nM):
                    row = [0] * (nL * nM)
                    row[j * nM + i] = d
                    rows.append(row)
                out_orders.extend(M.group.orders)
        # X A_L(r) = A_M(r) X
        for r in range(len(L.actions)):
            AL, AM = L.actions[r], M.actions[r]
            for j in range(nL):
                for i in range(nM):
                    row = [0] * (nL * nM)
                    for p in range(nL):
                        if AL.data[p][j]:
                            row[p * nM + i] += AL.data[p][j]
                    for q in range(nM):
                        if AM.data[i][q]:
                            row[j * nM + q] -= AM.data[i][q]
                    rows.append(row)
                out_orders.extend(M.group.orders)
        if rows:
            phi = GroupHom(self.tuples, RawGroup(out_orders), IntMatrix.from_rows(rows, nL * nM), check=False)
            self.group, self.incl = phi.kernel()
        else:
            self.group, self.incl = subgroup(self.tuples, IntMatrix.identity(nL * nM).columns())

    def tuple_of(self, x):
        """Tuple coordinates of a Hom element given in normalized coordinates."""
        return self.incl(x)

    def coords_of_tuple(self, t):
        c = self.incl.preimage(t)
        if c is None:
            raise ModuleError("tuple is not a module morphism")
        return c

    def as_matrix(self, x):
        """The morphism L -> M represented by x, as an M.ngens x L.ngens matrix."""
        t = self.tuple_of(x)
        nM = self.M.ngens
        return IntMatrix.from_columns([t[j * nM:(j + 1) * nM] for j in range(self.L.ngens)], nM)

    def coords_of_matrix(self, X):
        t = []
        for j in range(self.L.ngens):
            t.extend(X.column(j))
        return self.coords_of_tuple(t)

    def precompose_action(self, ops):
        """Actions (s.phi)(l) = phi(l.s) for endomorphisms ops of L."""
        nM = self.M.ngens
        eye = IntMatrix.identity(nM)
        acts = []
        for B in ops:
            big = kron(B.transpose(), eye)
            acts.append(restrict_to(self.incl, big, self.incl).matrix)
        return acts

    def as_module(self, ring, side, ops):
        return Module(ring, side, self.group, self.precompose_action(ops), validate=False)


def hom_module(L, M):
    return HomGroup(L, M)


def hom_postcompose(H1, H2, f_matrix):
    """Hom(L, f): Hom(L, M1) -> Hom(L, M2)."""
    big = block_diag(*([f_matrix] * H1.L.ngens))
    return restrict_to(H1.incl, big, H2.incl)


# -- comparison maps --------------------------------------------------------


class TensorWithRing:
    """R (x)_R M as a left R-module together with the multiplication map."""

    def __init__(self, M):
        M = M.as_left()
        R = M.ring
        self.M = M
        self.Rright = regular_module(R, "right")
        self.tensor = TensorProduct(self.Rright, M)
        self.module = self.tensor.as_module(R, "left", R.left_mult_matrices())
        nM = M.ngens
        cols = []
        for i in range(R.rank):
            for b in range(nM):
                cols.append(M.actions[i].column(b))
        P = IntMatrix.from_columns(cols, nM) if cols else IntMatrix.zeros(nM, 0)
        self.mult = ModuleHom(self.module, M, GroupHom(self.module.group, M.group, P @ self.tensor.section, check=False),
                              check=False)


class HomFromRing:
    """Hom_R(R, P) as a left R-module together with the map P -> Hom_R(R, P)."""

    def __init__(self, P):
        P = P.as_left()
        R = P.ring
        self.P = P
        self.hom = HomGroup(regular_module(R, "left"), P)
        self.module = self.hom.as_module(R, "left", R.right_mult_matrices())
        cols = []
        for g in range(P.ngens):
            t = []
            for i in range(R.rank):
                t.extend(P.actions[i].column(g))
            cols.append(self.hom.coords_of_tuple(t))
        E = IntMatrix.from_columns(cols, self.hom.group.ngens)
        self.eta = ModuleHom(P, self.module, GroupHom(P.group, self.module.group, E, check=False), check=False)


def unitality_maps(M):
    """Comparison maps of M: 'left' R(x)M -> M or 'right' N(x)R -> N, and 'hom'."""
    out = {}
    tw = TensorWithRing(M)
    out["left" if M.side == "left" else "right"] = tw.mult
    out["hom"] = HomFromRing(M).eta
    return out


# -- associativity and adjunction -------------------------------------------


def check_associativity_adjunction(N, B, M, P, B_right_ops):
    """Compare (N(x)B)(x)M with N(x)(B(x)M) and Hom(B(x)M, P) with Hom(M, Hom(B, P)).

    B is a left module with a commuting right action given by B_right_ops
    (one matrix per basis element); N is a right module, M and P are left
    modules, all over one ring.  Returns a dict of Verdicts.
    """
    from .verdict import Verdict
    R = B.ring
    for X in (N, M, P):
        check_same_ring(X, B)
    if B.side != "left" or M.side != "left" or P.side != "left" or N.side != "right":
        raise ModuleError("shape mismatch: need N right, B, M, P left")
    B_as_right = Module(R, "right", B.group, B_right_ops, validate=False)
    # (N (x) B) (x) M
    NB = TensorProduct(N, Module(R, "left", B.group, B.actions, validate=False))
    NB_right = NB.as_module(R, "right", B_right_ops, from_left_factor=False)
    left_side = TensorProduct(NB_right, M)
    # N (x) (B (x) M)
    BM = TensorProduct(B_as_right, M)
    BM_left = BM.as_module(R, "left", B.actions)
    right_side = TensorProduct(N, BM_left)
    nM = M.ngens
    nBM = BM_left.ngens
    cols = []
    for s in range(NB.group.ngens):
        lift = NB.section.column(s)
        for m in range(nM):
            v = [0] * right_side.npairs
            for p, coeff in enumerate(lift):
                if not coeff:
                    continue
                n, b = divmod(p, B.ngens)
                e = [0] * BM.npairs
                e[b * nM + m] = 1
                bm = BM.transform @ e
                for t in range(nBM):
                    if bm[t]:
                        v[n * nBM + t] += coeff * bm[t]
            cols.append(v)
    pairmat = IntMatrix.from_columns(cols, right_side.npairs) if cols else IntMatrix.zeros(right_side.npairs, 0)
    assoc = GroupHom(left_side.group, right_side.group, left_side.induced(pairmat, right_side), check=False)
    tensor_verdict = Verdict(assoc.is_iso(), "(N(x)B)(x)M -> N(x)(B(x)M) on generators",
                             groups=(left_side.group, right_side.group))

    # Hom(B (x) M, P) -> Hom(M, Hom(B, P))
    H1 = HomGroup(BM_left, P)
    HBP = HomGroup(B, P)
    HBP_mod = HBP.as_module(R, "left", B_right_ops)
    H2 = HomGroup(M, HBP_mod)
    cols = []
    nB = B.ngens
    for x in range(H1.group.ngens):
        phi = H1.as_matrix(_unit(H1.group.ngens, x))
        t2 = []
        for m in range(nM):
            tb = []
            for b in range(nB):
                e = [0] * BM.npairs
                e[b * nM + m] = 1
                tb.extend(phi @ (BM.transform @ e))
            t2.extend(HBP.coords_of_tuple(tb))
        cols.append(H2.coords_of_tuple(t2))
    adj = GroupHom(H1.group, H2.group, IntMatrix.from_columns(cols, H2.group.ngens), check=False)
    hom_verdict = Verdict(adj.is_iso(), "Hom(B(x)M, P) -> Hom(M, Hom(B, P)) on generators",
                          groups=(H1.group, H2.group))
    return {"associativity": tensor_verdict, "adjunction": hom_verdict,
            "maps": {"associativity": assoc, "adjunction": adj}}


def _unit(n, i):
    v = [0] * n
    v[i] = 1
    return v


# -- restriction of scalars -------------------------------------------------


def restrict_scalars(f, M):
    """View an R-module as a K-module through f: K -> R."""
    if not isinstance(f, RingHom) or f.matrix is None:
        raise ModuleError("restriction of scalars needs a finite-rank homomorphism")
    if not _same_ring(f.codomain, M.ring):
        raise RingMismatch("module is not over the codomain of f")
    K = f.domain
    acts = [M.action_of(f.apply(K.basis_vector(i))) for i in range(K.rank)]
    try:
        return Module(K, M.side, M.group, acts)
    except ActionIncompatibility as exc:
        raise RingError("f is not multiplicative: %s" % exc) from exc


# -- degree components of tensor squares (monomial backend) -----------------


class DegreeComponent:
    """Degree-d part of R (x)_R R on pair-monomial generators.

    ``classes`` lists the surviving classes as lists of pairs (a, b);
    ``map_to_target`` sends the class of (a, b) to the monomial a + b.
    """

    def __init__(self, ring, degree, pairs, classes, group, target_monomials, map_to_target):
        self.ring = ring
        self.degree = degree
        self.pairs = pairs
        self.classes = classes
        self.group = group
        self.target_monomials = target_monomials
        self.map_to_target = map_to_target

    def class_index(self, pair):
        for k, cl in enumerate(self.classes):
            if pair in cl:
                return k
        return None

    def __repr__(self):
        return "DegreeComponent(d=%s, %s)" % (self.degree, self.group.describe())


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the zero marker as a root
            if ry == "zero":
                rx, ry = ry, rx
            self.parent[ry] = rx


def degree_component_tensor_square(R, d):
    if not isinstance(R, MonomialLevelRing):
        raise ModuleError("degree components need the monomial backend")
    d = Fraction(d)
    if (d * R.N).denominator != 1:
        raise ModuleError("degree %s has denominator not dividing the level %d" % (d, R.N))
    t = int(d * R.N)
    monos = {}
    for s in range(1, t + 1):
        monos[s] = [m for m in R.monomials_of_degree(Fraction(s, R.N)) if R.in_ideal(m)]
    pairs = []
    for s in range(1, t):
        for a in monos[s]:
            for b in monos[t - s]:
                pairs.append((a, b))
    uf = _UnionFind(pairs + ["zero"])
    add = lambda x, y: tuple(p + q for p, q in zip(x, y))
    pairset = set(pairs)
    # relations (a c) (x) b = a (x) (c b) for ideal monomials a, b, c
    for sc in range(1, t):
        for c in monos[sc]:
            for sa in range(1, t - sc):
                sb = t - sc - sa
                for a in monos[sa]:
                    for b in monos[sb]:
                        x = (add(a, c), b)
                        y = (a, add(b, c))
                        xs = x if R.survives(x[0]) else "zero"
                        ys = y if R.survives(y[1]) else "zero"
                        if xs != "zero" and xs not in pairset:
                            xs = "zero"
                        if ys != "zero" and ys not in pairset:
                            ys = "zero"
                        uf.union(xs, ys)
    roots = {}
    classes = []
    zero_root = uf.find("zero")
    for p in pairs:
        r = uf.find(p)
        if r == zero_root:
            continue
        if r not in roots:
            roots[r] = len(classes)
            classes.append([])
        classes[roots[r]].append(p)
    G = presented_group(len(classes), IntMatrix.zeros(len(classes), 0))
    target = [m for m in R.monomials_of_degree(d) if R.in_ideal(m)] if t > 0 else []
    Tgt = FgAbelianGroup.free(len(target))
    cols = []
    for cl in classes:
        a, b = cl[0]
        s = add(a, b)
        col = [0] * len(target)
        if s in target:
            col[target.index(s)] = 1
        cols.append(col)
    M = IntMatrix.from_columns(cols, len(target)) if cols else IntMatrix.zeros(len(target), 0)
    f = GroupHom(G, Tgt, M @ G.section, check=False)
    return DegreeComponent(R, d, pairs, classes, G, target, f)


def degree_component_map(src, dst):
    """Map between degree components induced by sending each pair to the same pair."""
    cols = []
    for cl in src.classes:
        k = dst.class_index(cl[0])
        col = [0] * len(dst.classes)
        if k is not None:
            col[k] = 1
        cols.append(col)
    M = IntMatrix.from_columns(cols, len(dst.classes)) if cols else IntMatrix.zeros(len(dst.classes), 0)
    return GroupHom(src.group, dst.group, dst.group.basis_transform @ M @ src.group.section, check=False)


# -- monomial modules -------------------------------------------------------


def truncated_pruefer(n, N=1, variables=1, variable=0):
    """x^{-n} Z[x] / Z[x]: basis x^{-1}, ..., x^{-n} with x x^{-k} = x^{-k+1}."""
    R = MonomialLevelRing(variables, N)
    shift = IntMatrix.zeros(n, n)
    for k in range(1, n):
        # basis index k-1 <-> x^{-k}; x sends x^{-(k+1)} to x^{-k}
        shift.data[k - 1][k] = 1
    acts = [shift if v == variable else IntMatrix.zeros(n, n) for v in range(variables)]
    return Module(R, "left", FgAbelianGroup.free(n), acts, name="P(%d)" % n)


def external_tensor(A, B):
    """A (x)_Z B over the level ring in the variables of A followed by those of B."""
    RA, RB = A.ring, B.ring
    if RA.N != RB.N:
        raise ModuleError("factors must share the level")
    from .zlinalg import group_tensor
    G = group_tensor(A.group, B.group)
    ea = IntMatrix.identity(A.ngens)
    eb = IntMatrix.identity(B.ngens)
    acts = [G.basis_transform @ kron(a, eb) @ G.section for a in A.actions]
    acts += [G.basis_transform @ kron(ea, b) @ G.section for b in B.actions]
    R = MonomialLevelRing(RA.n + RB.n, RA.N)
    return Module(R, "left", G, acts, name="(%s)(x)(%s)" % (A.name, B.name))


def monomial_trivial_module(n, N=1):
    R = MonomialLevelRing(n, N)
    return Module(R, "left", FgAbelianGroup.free(1), [IntMatrix.zeros(1, 1)] * n, validate=False, name="Z")


# -- JSON -----------------------------------------------------------------


def module_from_json(obj, ring_resolver):
    if not isinstance(obj, dict):
        raise ModuleError("module must be a JSON object")
    for field in ("ring", "side", "group", "actions"):
        if field not in obj:
            raise ModuleError("missing field '%s'" % field)
    R = ring_resolver(obj["ring"])
    side = obj["side"]
    if side not in ("left", "right"):
        raise ModuleError("field 'side': expected 'left' or 'right'")
    group = obj["group"]
    if not isinstance(group, dict) or not isinstance(group.get("free_rank", 0), int) \
            or not all(isinstance(d, int) and d >= 0 for d in group.get("torsion", [])):
        raise ModuleError("field 'group': expected {free_rank: int, torsion: [int]}")
    n = group.get("free_rank", 0) + len(group.get("torsion", []))
    acts = obj["actions"]
    if not isinstance(acts, list):
        raise ModuleError("field 'actions': expected a list of matrices")
    mats = []
    for k, a in enumerate(acts):
        if not isinstance(a, list) or len(a) != n or not all(isinstance(r, list) and len(r) == n for r in a):
            raise ModuleError("field 'actions[%d]': expected a %dx%d matrix" % (k, n, n))
        mats.append(IntMatrix.from_rows(a, n))
    return make_module(R, side, group, mats)
