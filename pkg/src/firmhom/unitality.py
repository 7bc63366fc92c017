"""t-, s- and c-unitality of modules and rings, null defects and the equivalences.

t-unital: R (x)_R M -> M is an isomorphism.  s-unital: every m has some e in
R with em = m.  c-unital: P -> Hom_R(R, P) is an isomorphism.
"""

from __future__ import annotations

from fractions import Fraction

from .modules import (
    HomFromRing,
    HomGroup,
    ModuleError,
    ModuleHom,
    TensorProduct,
    TensorWithRing,
    cokernel_module,
    degree_component_tensor_square,
    hom_postcompose,
    kernel_module,
    regular_module,
)
from .rings import FiniteRankRing, IndRing, MonomialLevelRing, RingError
from .verdict import HEURISTIC, Verdict
from .zlinalg import GroupHom, IntMatrix, LinearSolver, hstack, kron


class RingNotTUnital(ModuleError):
    pass


class UnitalityReport:
    def __init__(self, module, t_unital, s_unital, c_unital, null, witness=None, defects=None):
        self.module = module
        self.t_unital = t_unital
        self.s_unital = s_unital
        self.c_unital = c_unital
        self.null = null
        self.witness = witness
        self.defects = defects or {}

    def flags(self):
        return {"t_unital": self.t_unital, "s_unital": self.s_unital,
                "c_unital": self.c_unital, "null": self.null}

    def to_json(self):
        out = {k: v.label() for k, v in self.flags().items()}
        out["witness"] = self.witness
        out["defects"] = {k: G.to_json() for k, G in self.defects.items()}
        return out

    def __repr__(self):
        return "UnitalityReport(%s)" % ", ".join("%s=%s" % (k, v.label()) for k, v in self.flags().items())


# -- s-unital witnesses ----------------------------------------------------------


def common_witness(M, vectors=None):
    """Some e in R with e g = g for every given vector (default: all generators), or None.

    For right modules this solves g e = g.  One common witness for the
    generators covers every element since e acts Z-linearly.
    """
    L = M.as_left()
    G = L.group
    n = G.ngens
    vecs = vectors if vectors is not None else [[1 if t == s else 0 for t in range(n)] for s in range(n)]
    if not vecs:
        return [0] * len(L.actions)
    k = len(L.actions)
    rows, rhs = [], []
    rel_cols = []
    orders = G.orders
    for s, g in enumerate(vecs):
        images = [L.actions[i] @ g for i in range(k)]
        for p in range(n):
            rows.append([images[i][p] for i in range(k)])
            rhs.append(g[p])
            if orders[p]:
                c = [0] * (n * len(vecs))
                c[s * n + p] = orders[p]
                rel_cols.append(c)
    A = IntMatrix.from_rows(rows, k)
    if rel_cols:
        A = hstack(A, IntMatrix.from_columns(rel_cols, len(rows)))
    sol = LinearSolver(A).solve(rhs)
    if sol is None:
        return None
    return sol[:k]


def _witness_kernel(M):
    """Directions along which a common witness can be moved."""
    L = M.as_left()
    G = L.group
    n = G.ngens
    k = len(L.actions)
    rows = []
    rel_cols = []
    for s in range(n):
        for p in range(n):
            rows.append([L.actions[i].data[p][s] for i in range(k)])
            if G.orders[p]:
                c = [0] * (n * n)
                c[s * n + p] = G.orders[p]
                rel_cols.append(c)
    if not rows:
        return []
    A = IntMatrix.from_rows(rows, k)
    if rel_cols:
        A = hstack(A, IntMatrix.from_columns(rel_cols, len(rows)))
    return [v[:k] for v in LinearSolver(A).kernel_basis() if any(v[:k])]


# -- module classification ---------------------------------------------------------


def _tensor_map(M):
    return TensorWithRing(M).mult


def _hom_map(M):
    return HomFromRing(M).eta


def classify_module(M):
    if isinstance(M.ring, MonomialLevelRing):
        return _classify_monomial(M)
    if not isinstance(M.ring, FiniteRankRing):
        raise ModuleError("unsupported backend for %r" % (M,))
    mu = _tensor_map(M).hom
    eta = _hom_map(M).hom
    defects = {
        "tensor_kernel": mu.kernel()[0],
        "tensor_cokernel": mu.cokernel()[0],
        "hom_kernel": eta.kernel()[0],
        "hom_cokernel": eta.cokernel()[0],
    }
    t = defects["tensor_kernel"].is_zero() and defects["tensor_cokernel"].is_zero()
    c = defects["hom_kernel"].is_zero() and defects["hom_cokernel"].is_zero()
    e = common_witness(M)
    null = M.is_null()
    rep = UnitalityReport(
        M,
        Verdict(t, "R(x)M -> M has kernel %s, cokernel %s" % (defects["tensor_kernel"].describe(),
                                                              defects["tensor_cokernel"].describe())),
        Verdict(e is not None, "common witness %s" % (e,) if e is not None else "no common witness on the generators"),
        Verdict(c, "M -> Hom(R,M) has kernel %s, cokernel %s" % (defects["hom_kernel"].describe(),
                                                                 defects["hom_cokernel"].describe())),
        Verdict(null, "all actions vanish" if null else "some action is nonzero"),
        witness=e,
        defects=defects,
    )
    return rep


def _classify_monomial(M):
    from .homology import t_unital_via_tor
    t = t_unital_via_tor(M)
    zero = M.is_zero()
    # the ideal acts nilpotently, so em = m forces m = 0
    s = Verdict(zero, "the ideal acts nilpotently" if not zero else "zero module")
    c = Verdict.not_applicable("Hom(R, -) is not finitely generated on this backend")
    null = M.is_null()
    return UnitalityReport(M, t, s, c, Verdict(null, "all actions vanish" if null else "some action is nonzero"))


# -- rings -------------------------------------------------------------------------


def is_t_unital_ring(R):
    if isinstance(R, FiniteRankRing):
        mu = _tensor_map(regular_module(R, "left")).hom
        ok = mu.is_iso()
        return Verdict(ok, "R(x)R -> R is %san isomorphism" % ("" if ok else "not "),
                       kernel=mu.kernel()[0], cokernel=mu.cokernel()[0])
    if isinstance(R, MonomialLevelRing):
        d = Fraction(1, R.N)
        comp = degree_component_tensor_square(R, d)
        # nothing of degree 1/N is a product, so the degree-1/N part of R(x)R is zero
        if comp.group.is_zero() and comp.target_monomials:
            return Verdict.no("R(x)R -> R misses degree %s" % d, missing_degree=d, component=comp)
        return Verdict(None, "degree %s component does not decide" % d, HEURISTIC)
    if isinstance(R, IndRing):
        from .homology import t_unital_via_tor
        return t_unital_via_tor(R)
    raise RingError("unsupported ring %r" % (R,))


def degree_support_check(R):
    """Certify r not in R r for the minimal-degree generators (graded rings without unit).

    Every element of R has support in degrees >= 1/N, so every element of
    R r has support in degrees > deg r.  Over an ind-ring the bound holds at
    each level, so r = z^{1/N} never lies in R r at any later level either.
    """
    rings = R.rings if isinstance(R, IndRing) else [R]
    witnesses = []
    for Rk in rings:
        r = Rk.generator(0)
        deg_r = Rk.degree(next(iter(r)))
        min_deg = Fraction(1, Rk.N)
        # smallest degree present in R r
        product_min = deg_r + min_deg
        if product_min <= deg_r:
            return Verdict(None, "degree bound fails at level %d" % Rk.N, HEURISTIC)
        witnesses.append((Rk.N, deg_r, product_min))
    return Verdict.no("r = z^(1/N) has degree below every element of R r", witnesses=witnesses)


def is_s_unital_ring(R, side="left"):
    if isinstance(R, FiniteRankRing):
        e = common_witness(regular_module(R, side))
        if e is None:
            return Verdict.no("no %s witness for the basis" % side)
        return Verdict.yes("%s witness %s" % (side, e), witness=e)
    if isinstance(R, (MonomialLevelRing, IndRing)):
        return degree_support_check(R)
    raise RingError("unsupported ring %r" % (R,))


# -- unitalization functors ----------------------------------------------------------


def _require_t_unital(R):
    if not is_t_unital_ring(R):
        raise RingNotTUnital("the ring is not t-unital")


def t_unitalization(M):
    """(R (x)_R M, counit R (x)_R M -> M)."""
    _require_t_unital(M.lring)
    tw = TensorWithRing(M)
    return tw.module, tw.mult


def c_unitalization(P):
    """(Hom_R(R, P), unit P -> Hom_R(R, P))."""
    _require_t_unital(P.lring)
    hf = HomFromRing(P)
    return hf.module, hf.eta


def null_defect(M, variant="tensor"):
    """Kernel and cokernel of the comparison map, with a check that R acts by zero on both."""
    f = _tensor_map(M) if variant == "tensor" else _hom_map(M)
    K, _ = kernel_module(f)
    C, _ = cokernel_module(f)
    both = K.is_null() and C.is_null()
    return K.group, C.group, Verdict(both, "kernel %s, cokernel %s" % (K.group.describe(), C.group.describe()))


# -- equivalence roundtrips ------------------------------------------------------------


def equivalence_roundtrip(M):
    """M -> R (x) M -> R (x) Hom(R, M) -> M is the identity and evaluation is an isomorphism."""
    M = M.as_left()
    R = M.ring
    if not is_t_unital_ring(R):
        return Verdict.not_applicable("ring is not t-unital")
    tw = TensorWithRing(M)
    if not tw.mult.is_iso():
        return Verdict.not_applicable("module is not t-unital")
    hf = HomFromRing(M)
    H = hf.module
    T2 = TensorProduct(tw.Rright, H)
    k = R.rank
    # R (x) eta on pair coordinates
    eye = IntMatrix.identity(k)
    r_eta = GroupHom(tw.module.group, T2.group, tw.tensor.induced(kron(eye, hf.eta.matrix), T2), check=False)
    # evaluation r (x) phi -> phi(r)
    cols = []
    for i in range(k):
        for h in range(H.ngens):
            x = [1 if t == h else 0 for t in range(H.ngens)]
            cols.append(hf.hom.as_matrix(x).column(i))
    ev_pairs = IntMatrix.from_columns(cols, M.ngens) if cols else IntMatrix.zeros(M.ngens, 0)
    ev = GroupHom(T2.group, M.group, ev_pairs @ T2.section, check=False)
    composite = ev.compose(r_eta).compose(tw.mult.hom.inverse())
    ident = composite.is_identity()
    iso = ev.is_iso()
    return Verdict(ident and iso, "composite identity: %s, evaluation iso: %s" % (ident, iso),
                   composite=composite, evaluation=ev)


def dual_equivalence_roundtrip(P):
    """P -> Hom(R, R (x) P) -> Hom(R, P) -> P is the identity and Hom(R, mu) is an isomorphism."""
    P = P.as_left()
    R = P.ring
    if not is_t_unital_ring(R):
        return Verdict.not_applicable("ring is not t-unital")
    hf = HomFromRing(P)
    if not hf.eta.is_iso():
        return Verdict.not_applicable("module is not c-unital")
    tw = TensorWithRing(P)
    H1 = HomGroup(regular_module(R, "left"), tw.module)
    k = R.rank
    cols = []
    for p in range(P.ngens):
        e = [1 if t == p else 0 for t in range(P.ngens)]
        tup = []
        for i in range(k):
            tup.extend(tw.tensor.element(R.basis_vector(i), e))
        cols.append(H1.coords_of_tuple(tup))
    unit = GroupHom(P.group, H1.group, IntMatrix.from_columns(cols, H1.group.ngens), check=False)
    hom_mu = hom_postcompose(H1, hf.hom, tw.mult.matrix)
    composite = hf.eta.hom.inverse().compose(hom_mu).compose(unit)
    ident = composite.is_identity()
    iso = hom_mu.is_iso()
    return Verdict(ident and iso, "composite identity: %s, Hom(R, mu) iso: %s" % (ident, iso),
                   composite=composite, hom_mu=hom_mu)


# -- the inverse map for s-unital modules ----------------------------------------------


def s_unital_inverse_map(M):
    """phi(g) = e (x) g for a common witness e, checked against a second witness."""
    R = M.lring
    if not is_s_unital_ring(R, "left"):
        raise ModuleError("ring is not left s-unital")
    e = common_witness(M)
    if e is None:
        raise ModuleError("no witness found although the module was assumed s-unital")
    tw = TensorWithRing(M)
    L = M.as_left()
    n = L.ngens
    cols = [tw.tensor.element(e, [1 if t == s else 0 for t in range(n)]) for s in range(n)]
    phi = GroupHom(L.group, tw.module.group, IntMatrix.from_columns(cols, tw.module.group.ngens), check=False)
    mu = tw.mult.hom
    inverse = mu.compose(phi).is_identity() and phi.compose(mu).is_identity()
    others = _witness_kernel(M)
    f = [a + b for a, b in zip(e, others[0])] if others else e
    cols2 = [tw.tensor.element(f, [1 if t == s else 0 for t in range(n)]) for s in range(n)]
    phi2 = GroupHom(L.group, tw.module.group, IntMatrix.from_columns(cols2, tw.module.group.ngens), check=False)
    independent = phi.equals(phi2)
    hom = ModuleHom(L, tw.module, phi, check=False)
    return hom, Verdict(inverse and independent, "mutually inverse: %s, witness-independent: %s"
                        % (inverse, independent), witness=e, second_witness=f)


def witnesses_agree(M, e, f, m):
    """e (x) m = f (x) m in R (x)_R M for two witnesses of m."""
    L = M.as_left()
    for w in (e, f):
        if L.group.reduce(L.action_of(w) @ m) != L.group.reduce(m):
            raise ModuleError("%s is not a witness for %s" % (w, m))
    tw = TensorWithRing(M)
    return tw.tensor.element(e, m) == tw.tensor.element(f, m)
