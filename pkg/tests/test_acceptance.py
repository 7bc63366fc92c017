"""One test per acceptance criterion; each prints a "criterion N: PASS|FAIL" line.

Run standalone with ``pytest tests/test_acceptance.py -s``.
"""

import random
from fractions import Fraction

from firmhom.corpus import (
    corpus_homs,
    corpus_modules,
    corpus_ring,
    corpus_ring_names,
    enough_idempotents_square,
    kuenneth_pairs,
    multiplication_sequence,
    random_module,
    random_short_exact_sequence,
    t_unital_corpus_rings,
)
from firmhom.flatprojinj import character_dual, closure_criteria, is_c_projective, is_t_flat
from firmhom.homology import (
    bar_fragment_homotopy,
    ind_tor_colimit,
    koszul_tor,
    kuenneth_check,
    null_vanishing_check,
    pruefer_chain,
    pruefer_square_chain,
    q_chain,
    t_unital_via_tor,
    tor_ext,
)
from firmhom.homs import verify_hom_propositions
from firmhom.modules import (
    TensorWithRing,
    degree_component_map,
    degree_component_tensor_square,
    external_tensor,
    monomial_trivial_module,
    regular_module,
    truncated_pruefer,
)
from firmhom.rings import IndRing, MonomialLevelRing, Unitalization, check_associativity
from firmhom.unitality import (
    c_unitalization,
    classify_module,
    common_witness,
    dual_equivalence_roundtrip,
    equivalence_roundtrip,
    is_s_unital_ring,
    is_t_unital_ring,
    null_defect,
)
from firmhom.verdict import CERTIFIED
from firmhom.zlinalg import IntMatrix, smith_normal_form

from oracles import is_unimodular, koszul_oracle, tensor_square_defects


class Gate:
    def __init__(self, number):
        self.number = number
        self.failures = []

    def check(self, ok, what):
        if not ok:
            self.failures.append(what)

    def finish(self):
        print("criterion %d: %s" % (self.number, "FAIL" if self.failures else "PASS"))
        assert not self.failures, self.failures


def test_criterion_1_d_and_d_times_dop():
    g = Gate(1)
    D = corpus_ring("D")
    check_associativity(D)
    g.check(is_s_unital_ring(D, "left").value is True, "D left s-unital")
    g.check(common_witness(regular_module(D, "left")) == [1, 0], "witness u")
    g.check(is_s_unital_ring(D, "right").value is False, "D not right s-unital")
    P = corpus_ring("D_x_D_op")
    g.check(Unitalization(P).rank == 5, "unitalization rank 5")
    g.check(is_t_unital_ring(P).value is True, "D x D_op t-unital by definition")
    tor = t_unital_via_tor(P)
    g.check(tor.value is True, "D x D_op t-unital via Tor")
    g.check(all(G.is_zero() for G in tor.data["tor"]), "Tor_1 = Tor_2 = 0")
    coker, ker = tensor_square_defects(P)
    g.check(coker.is_zero() and ker.is_zero(), "R (x) R -> R is an isomorphism")
    g.check(is_s_unital_ring(P, "left").value is False, "not left s-unital")
    g.check(is_s_unital_ring(P, "right").value is False, "not right s-unital")
    g.finish()


def test_criterion_2_rational_exponent_levels():
    g = Gate(2)
    I = IndRing(1, [1, 2, 4])
    table = ind_tor_colimit(I, 1, 3)
    for k, N in enumerate(I.levels):
        _, t1 = koszul_oracle(monomial_trivial_module(1, N))
        g.check(table.entries[(1, k)] == t1 and t1.describe() == "Z", "Tor_1 at level %d" % N)
        g.check(is_t_unital_ring(I.rings[k]).value is False, "level %d not t-unital" % N)
    for k in range(len(I.levels) - 1):
        g.check(table.transitions[(1, k)].is_zero(), "transition %d zero" % k)
    v = table.verdicts[1]
    g.check(v == "ZERO" and v.certification == CERTIFIED, "ZERO certified, got %r" % (v,))
    g.check(is_s_unital_ring(I).value is False, "s-unital NO")
    g.finish()


def test_criterion_3_truncated_degree_one():
    g = Gate(3)
    R = MonomialLevelRing(1, 4)
    S = MonomialLevelRing(1, 4, kill_degree=1)
    for t in range(1, 5):
        d = Fraction(t, 4)
        cR = degree_component_tensor_square(R, d)
        cS = degree_component_tensor_square(S, d)
        g.check(degree_component_map(cR, cS).is_iso(), "comparison iso in degree %s" % d)
        if d == 1:
            g.check(cS.group.describe() == "Z", "S(x)S degree 1 is Z")
            g.check(cS.map_to_target.is_zero(), "S(x)S -> S zero in degree 1")
            g.check(cR.map_to_target.is_iso(), "R(x)R -> R iso in degree 1")
    g.finish()


def test_criterion_4_pruefer_square_and_kernel():
    g = Gate(4)
    ns = list(range(1, 7))
    table = ind_tor_colimit(pruefer_square_chain(ns), [0, 1, 2], 3)
    for k, n in enumerate(ns):
        row = [table.entries[(i, k)] for i in range(3)]
        g.check([G.describe() for G in row] == ["Z", "Z^2", "Z"], "level values at n=%d" % n)
        t0, t2 = koszul_oracle(external_tensor(truncated_pruefer(n), truncated_pruefer(n)))
        g.check(row[0] == t0 and row[2] == t2, "Koszul oracle at n=%d" % n)
        g.check(t0.free_rank - row[1].free_rank + t2.free_rank == 0, "Euler characteristic at n=%d" % n)
    g.check([table.verdicts[i].describe() for i in range(3)] == ["ZERO", "ZERO", "STABLE(Z)"], "colimit verdicts")
    g.check(ind_tor_colimit(pruefer_chain(ns), 1, 3).verdicts[1] == "STABLE(Z)", "P_x colimit Tor_1")
    g.check(ind_tor_colimit(q_chain(ns), 1, 3).verdicts[1].describe() == "STABLE(Z)", "Q colimit Tor_1")
    for n in ns:
        Q, M, C, inc, mult = multiplication_sequence(n)
        ok = (mult.hom.compose(inc.hom).is_zero() and inc.hom.is_injective() and mult.hom.is_surjective()
              and Q.group.free_rank + C.group.free_rank == M.group.free_rank)
        g.check(ok, "short exact at n=%d" % n)
    mid = ind_tor_colimit(pruefer_square_chain(ns, shift=1), [0, 1], 3)
    cok = ind_tor_colimit(pruefer_square_chain(ns), [0, 1], 3)
    ker = ind_tor_colimit(q_chain(ns), [0, 1], 3)
    g.check([mid.verdicts[i] for i in (0, 1)] == ["ZERO", "ZERO"], "middle t-unital in the colimit")
    g.check([cok.verdicts[i] for i in (0, 1)] == ["ZERO", "ZERO"], "cokernel t-unital in the colimit")
    g.check(ker.verdicts[1] == "STABLE(Z)", "kernel not t-unital in the colimit")
    g.finish()


def test_criterion_5_kuenneth():
    g = Gate(5)
    applicable = 0
    for A, B in kuenneth_pairs():
        for n in range(3):
            v = kuenneth_check(A, B, n)
            if v.value is None:
                continue
            applicable += 1
            g.check(v.data["direct"] == v.data["formula"], "%s, %s, n=%d" % (A.name, B.name, n))
        if A.group.is_free() and B.group.is_free():
            t0, t2 = koszul_oracle(external_tensor(A, B))
            g.check(koszul_tor(external_tensor(A, B), 0) == t0, "Tor_0 oracle for %s, %s" % (A.name, B.name))
            g.check(koszul_tor(external_tensor(A, B), 2) == t2, "Tor_2 oracle for %s, %s" % (A.name, B.name))
    g.check(applicable >= 27, "only %d applicable instances" % applicable)
    g.finish()


def test_criterion_6_equivalence_roundtrips():
    g = Gate(6)
    count = 0
    for name in ("D", "D_x_D_op", "A2"):
        for side in ("left", "right"):
            for label, M in corpus_modules(name, side).items():
                if classify_module(M).t_unital:
                    count += 1
                    g.check(equivalence_roundtrip(M).value is True, "%s/%s/%s roundtrip" % (name, side, label))
                H, _ = c_unitalization(M)
                g.check(dual_equivalence_roundtrip(H).value is True, "%s/%s/%s dual roundtrip" % (name, side, label))
    g.check(count >= 6, "too few t-unital modules")
    g.finish()


def test_criterion_7_null_suite():
    g = Gate(7)
    rng = random.Random(0)
    for name in corpus_ring_names():
        R = corpus_ring(name)
        for t in range(100):
            M = random_module(R, rng, 3)
            g.check(M.ngens <= 3, "rank bound")
            for variant in ("tensor", "hom"):
                g.check(null_defect(M, variant)[2].value is True, "%s #%d %s defect" % (name, t, variant))
    for name in t_unital_corpus_rings():
        for side in ("left", "right"):
            for label, N in corpus_modules(name, side).items():
                if not N.is_null():
                    continue
                v = null_vanishing_check(N)
                g.check(v.value is True and len(v.data["groups"]) == 4
                        and all(G.is_zero() for G in v.data["groups"].values()),
                        "%s/%s/%s vanishing" % (name, side, label))
    g.finish()


def test_criterion_8_enough_idempotents():
    g = Gate(8)
    R = corpus_ring("A2")
    count = 0
    for label, L in corpus_modules("A2").items():
        if not classify_module(L).t_unital:
            continue
        for x in R.objects:
            count += 1
            first, second, direct = enough_idempotents_square(R, x, L)
            g.check(first.is_iso(), "e_%s R (x) %s -> e_%s L" % (x, label, x))
            g.check(second.is_iso(), "e_%s %s -> Hom(R e_%s, L)" % (x, label, x))
            g.check(direct.equals(second.compose(first)), "square for e_%s, %s" % (x, label))
    g.check(count >= 4, "too few instances")
    g.finish()


def test_criterion_9_flat_projective_injective():
    g = Gate(9)
    for name in t_unital_corpus_rings():
        for side in ("left", "right"):
            for label, M in corpus_modules(name, side).items():
                tag = "%s/%s/%s" % (name, side, label)
                cp, tf = is_c_projective(M), is_t_flat(M)
                g.check(not cp or tf, "c-projective => t-flat on " + tag)
                T = TensorWithRing(M).module.as_side(M.ring, M.side)
                H, _ = c_unitalization(M)
                H = H.as_side(M.ring, M.side)
                for pred in (is_c_projective, is_t_flat):
                    g.check(len({pred(X).value for X in (M, T, H)}) == 1, "%s invariance on %s" % (pred.__name__, tag))
                if M.group.is_finite():
                    dd = character_dual(character_dual(M).dual).dual
                    f1 = {k: v.value for k, v in classify_module(M).flags().items()}
                    f2 = {k: v.value for k, v in classify_module(dd).flags().items()}
                    g.check(f1 == f2, "double dual flags on " + tag)
    cc = closure_criteria(corpus_ring("D"))
    g.check((cc["kernels_closed"].value, cc["cokernels_closed"].value) == (True, True), "closure_criteria(D)")
    g.finish()


def test_criterion_10_bar_homotopy_and_hom_statements():
    g = Gate(10)
    v = bar_fragment_homotopy(corpus_homs()["Ze->D"])
    h = v.data["homotopy"].matrix
    g.check(v.value is True and h == IntMatrix.identity(h.rows), "dh + hd = id entrywise")
    rng = random.Random(1)
    for name, f in corpus_homs().items():
        R = f.codomain
        left = list(corpus_modules_or_empty(R, "left")) + [random_module(R, rng, 3, "left") for _ in range(3)]
        right = list(corpus_modules_or_empty(R, "right")) + [random_module(R, rng, 3, "right") for _ in range(3)]
        for sid, w in verify_hom_propositions(f, left, right):
            g.check(w.value is not False, "%s: %s" % (name, sid))
    g.finish()


def corpus_modules_or_empty(R, side):
    for name in corpus_ring_names():
        if corpus_ring(name) is R:
            return corpus_modules(name, side).values()
    return [regular_module(R, side)]


def corpus_pairs():
    for name in ("D", "D_op", "A2", "S2", "Ze", "zero"):
        for A in corpus_modules(name, "right").values():
            for B in corpus_modules(name, "left").values():
                yield name, A, B


def test_criterion_11_property_suites():
    g = Gate(11)
    rng = random.Random(11)
    for t in range(1000):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        A = IntMatrix(m, n, [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)])
        U, D, V = smith_normal_form(A)
        diag = [D.data[i][i] for i in range(min(m, n))]
        nz = [d for d in diag if d]
        ok = (U @ A @ V == D and is_unimodular(U) and is_unimodular(V)
              and all(D.data[i][j] == 0 for i in range(m) for j in range(n) if i != j)
              and all(d > 0 for d in nz) and all(b % a == 0 for a, b in zip(nz, nz[1:]))
              and diag[len(nz):] == [0] * (len(diag) - len(nz)))
        g.check(ok, "SNF #%d" % t)
    for name, A, B in corpus_pairs():
        for i in range(3):
            g.check(tor_ext(i, A, B, "tor", "greedy") == tor_ext(i, A, B, "tor", "reverse"),
                    "Tor_%d on %s: %s, %s" % (i, name, A.name, B.name))
    hits = {"t": 0, "c": 0, "s": 0}
    for name in corpus_ring_names():
        R = corpus_ring(name)
        t_ring = name in t_unital_corpus_rings()
        for t in range(30):
            K, M, C, _, _ = random_short_exact_sequence(R, rng)
            fk, fm, fc = (classify_module(X) for X in (K, M, C))
            if t_ring:
                if fk.t_unital and fc.t_unital:
                    hits["t"] += 1
                    g.check(bool(fm.t_unital), "t-unital extension over %s" % name)
                if fk.t_unital and fm.t_unital:
                    g.check(bool(fc.t_unital), "t-unital cokernel over %s" % name)
                if fk.c_unital and fc.c_unital:
                    hits["c"] += 1
                    g.check(bool(fm.c_unital), "c-unital extension over %s" % name)
                if fm.c_unital and fc.c_unital:
                    g.check(bool(fk.c_unital), "c-unital kernel over %s" % name)
            if fm.s_unital:
                hits["s"] += 1
                g.check(bool(fk.s_unital) and bool(fc.s_unital), "s-unital sub and quotient over %s" % name)
            if fk.s_unital and fc.s_unital:
                g.check(bool(fm.s_unital), "s-unital extension over %s" % name)
    g.check(all(hits.values()), "closure premises never met: %s" % hits)
    g.finish()
