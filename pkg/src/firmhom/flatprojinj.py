"""Projectivity, flatness and injectivity tests, character duals and closure criteria.

All modules here are finitely generated over Z, hence finitely presented
over the unitalization, so flat and projective agree and projectivity is a
split test on a free cover.
"""

from __future__ import annotations

from .homology import free_resolution_prefix
from .modules import HomGroup, Module, ModuleError, TensorWithRing, free_unital_module, regular_module
from .rings import FiniteRankRing
from .unitality import classify_module, is_t_unital_ring
from .verdict import Verdict
from .zlinalg import IntMatrix, LinearSolver, hstack, infeasibility_certificate


class InfiniteGroup(ModuleError):
    pass


def free_cover(M):
    """(F, epsilon) with F free over the unitalization and epsilon: F -> M onto."""
    res = free_resolution_prefix(M, 0)
    F = free_unital_module(M.lring, res.ranks[0])
    return F, res.augmentation


def is_projective_nonunital(M):
    """Split test: is there a module map s: M -> F with epsilon s = id?"""
    L = M.as_left()
    if not isinstance(L.ring, FiniteRankRing):
        raise ModuleError("projectivity needs the finite-rank backend")
    if L.is_zero():
        return Verdict.yes("zero module")
    F, eps = free_cover(L)
    H = HomGroup(L, F)
    n = L.ngens
    G = L.group
    # unknown x in Hom(M, F); need eps @ s(x) = id modulo the torsion of M
    cols = []
    for t in range(H.group.ngens):
        S = H.as_matrix([1 if r == t else 0 for r in range(H.group.ngens)])
        P = eps @ S
        cols.append([P.data[p][j] for j in range(n) for p in range(n)])
    A = IntMatrix.from_columns(cols, n * n) if cols else IntMatrix.zeros(n * n, 0)
    rel = []
    for j in range(n):
        for p, d in enumerate(G.orders):
            if d:
                c = [0] * (n * n)
                c[j * n + p] = d
                rel.append(c)
    if rel:
        A = hstack(A, IntMatrix.from_columns(rel, n * n))
    target = [1 if j == p else 0 for j in range(n) for p in range(n)]
    sol = LinearSolver(A).solve(target)
    if sol is None:
        return Verdict.no("no splitting of the free cover", certificate=infeasibility_certificate(A, target))
    x = sol[:H.group.ngens]
    return Verdict.yes("free cover splits", section=H.as_matrix(x), cover=F)


def _t_unital_replacement(M):
    if not is_t_unital_ring(M.lring):
        raise ModuleError("ring is not t-unital")
    return TensorWithRing(M).module


def is_c_projective(Q):
    """Q is c-projective iff R (x)_R Q is projective as a nonunital module."""
    T = _t_unital_replacement(Q)
    v = is_projective_nonunital(T)
    return Verdict(v.value, "R(x)Q = %s: %s" % (T.group.describe(), v.reason), replacement=T)


def is_t_flat(F):
    """F is t-flat iff R (x)_R F is flat, i.e. projective since it is finitely presented."""
    T = _t_unital_replacement(F)
    v = is_projective_nonunital(T)
    return Verdict(v.value, "R(x)F = %s: %s" % (T.group.describe(), v.reason), replacement=T)


class CharacterDual:
    """N^+ realized on the group of N: A*[k][j] = A[j][k] d_k / d_j, on the opposite side."""

    def __init__(self, N):
        G = N.group
        if not G.is_finite():
            raise InfiniteGroup("character duals are supported for finite modules only")
        d = G.orders
        acts = []
        for A in N.actions:
            n = G.ngens
            rows = [[A.data[j][k] * d[k] // d[j] for j in range(n)] for k in range(n)]
            acts.append(IntMatrix(n, n, rows))
        side = "right" if N.side == "left" else "left"
        self.source = N
        self.dual = Module(N.ring, side, G, acts)


def character_dual(N):
    return CharacterDual(N)


def is_t_injective_finite(J):
    """J is t-injective iff J^+ is t-flat; cross-checked through R (x)_R J."""
    if not J.group.is_finite():
        raise InfiniteGroup("t-injectivity is supported for finite modules only")
    if J.is_zero():
        return Verdict.yes("zero module", routes={})
    direct = is_t_flat(character_dual(J).dual)
    T = _t_unital_replacement(J)
    cross = is_t_flat(character_dual(T).dual) if T.group.is_finite() else Verdict.not_applicable("R(x)J infinite")
    gate = classify_module(J).c_unital
    routes = {"dual_t_flat": direct, "tensor_replacement": cross, "c_unital": gate}
    consistent = cross.value is None or cross.value == direct.value
    if not consistent:
        return Verdict(None, "routes disagree", "HEURISTIC", routes=routes)
    return Verdict(direct.value, "J^+ t-flat: %s; c-unital: %s" % (direct.label(), gate.label()), routes=routes)


def closure_criteria(R):
    """t-unital modules closed under kernels iff R is flat over the unitalization (right),
    c-unital modules closed under cokernels iff R is projective over it (left)."""
    right = is_projective_nonunital(regular_module(R, "right"))
    left = is_projective_nonunital(regular_module(R, "left"))
    return {
        "kernels_closed": Verdict(right.value, "R as a right module: " + right.reason),
        "cokernels_closed": Verdict(left.value, "R as a left module: " + left.reason),
        "ring_t_unital": is_t_unital_ring(R),
    }
