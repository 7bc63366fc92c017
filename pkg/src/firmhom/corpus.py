"""Named rings and modules, a registry of worked examples, file checks and reports."""

from __future__ import annotations

import json
import os
import random
import time
from fractions import Fraction

from .flatprojinj import (
    character_dual,
    closure_criteria,
    is_c_projective,
    is_projective_nonunital,
    is_t_flat,
    is_t_injective_finite,
)
from .homology import (
    ind_tor_colimit,
    kuenneth_check,
    null_vanishing_check,
    bar_fragment_homotopy,
    pruefer_chain,
    pruefer_square_chain,
    q_chain,
    t_unital_via_tor,
)
from .homs import OUT_OF_SCOPE_ENTRIES, classify_ring_hom, verify_hom_propositions
from .modules import (
    HomGroup,
    Module,
    ModuleError,
    ModuleHom,
    TensorProduct,
    TensorWithRing,
    degree_component_map,
    degree_component_tensor_square,
    direct_sum,
    free_unital_module,
    external_tensor,
    make_module,
    module_from_json,
    null_module,
    quotient_module,
    regular_module,
    submodule_generated,
    truncated_pruefer,
)
from .rings import (
    FiniteRankRing,
    IndRing,
    MonomialLevelRing,
    RingError,
    Unitalization,
    build_ind_ring,
    direct_product,
    is_idempotent_ring,
    make_finite_rank_ring,
    ring_from_json,
    ring_from_preadditive_category,
    ring_hom,
    truncated_monomial_ring,
    zero_ring,
)
from .unitality import (
    c_unitalization,
    classify_module,
    common_witness,
    dual_equivalence_roundtrip,
    equivalence_roundtrip,
    is_s_unital_ring,
    is_t_unital_ring,
    null_defect,
)
from .verdict import CERTIFIED, HEURISTIC, NOT_APPLICABLE, Verdict
from .zlinalg import FgAbelianGroup, GroupHom, IntMatrix, kron, subgroup


# -- rings ---------------------------------------------------------------------


def ring_D():
    """Z^2 with (a, b)(c, d) = (ac, ad): u u = u, u v = v, v u = v v = 0."""
    return make_finite_rank_ring(["u", "v"], [[[1, 0], [0, 1]], [[0, 0], [0, 0]]])


def ring_A2():
    """Upper triangular 2x2 integer matrices as the ring of the A2 quiver category."""
    return ring_from_preadditive_category(
        [1, 2], {(1, 1): 1, (2, 2): 1, (1, 2): 1},
        {(1, 1, 1): [[[1]]], (2, 2, 2): [[[1]]], (1, 1, 2): [[[1]]], (1, 2, 2): [[[1]]]})


def ring_S2():
    """Z eps with eps^2 = 0 (the degree < 1 truncation at level 2)."""
    return make_finite_rank_ring(["eps"], [[[0]]])


def ring_Ze():
    return make_finite_rank_ring(["e"], [[[1]]])


_RINGS = {
    "D": ring_D,
    "D_op": lambda: ring_D().opposite(),
    "D_x_D_op": lambda: direct_product(ring_D(), ring_D().opposite()),
    "A2": ring_A2,
    "zero": zero_ring,
    "S2": ring_S2,
    "Ze": ring_Ze,
    "trunc_xy3": lambda: truncated_monomial_ring(2, 3),
}
_CACHE = {}


def corpus_ring(name):
    if name not in _RINGS:
        raise KeyError("unknown corpus ring %r" % name)
    if name not in _CACHE:
        _CACHE[name] = _RINGS[name]()
    return _CACHE[name]


def corpus_ring_names():
    return list(_RINGS)


def t_unital_corpus_rings():
    return ["D", "D_op", "D_x_D_op", "A2", "zero", "Ze"]


# -- modules -------------------------------------------------------------------------


def corpus_modules(name, side="left"):
    """Named modules over a corpus ring (a small, fixed list per ring)."""
    R = corpus_ring(name)
    out = {
        "regular": regular_module(R, side),
        "null_Z": null_module(R, [0], side),
        "null_Z2": null_module(R, [2], side),
        "zero": null_module(R, [], side),
    }
    if name == "D":
        if side == "left":
            out["Z_u1"] = make_module(R, "left", [0], [[[1]], [[0]]])
            out["Z2_u1"] = make_module(R, "left", [2], [[[1]], [[0]]])
            out["D_plus_null_Z2"] = direct_sum(regular_module(R), null_module(R, [2]))
            out["D_squared"] = direct_sum(regular_module(R), regular_module(R))
        else:
            out["Z_u1"] = make_module(R, "right", [0], [[[1]], [[0]]])
    if name == "A2":
        for x in R.objects:
            e = R.idempotents[x]
            gen = submodule_generated(regular_module(R, side), [e])[0]
            out["column_%s" % x if side == "left" else "row_%s" % x] = gen
    if name == "D_x_D_op" and side == "left":
        # pulled back along the projection onto the D factor
        out["Z_u1_first"] = make_module(R, "left", [0], [[[1]], [[0]], [[0]], [[0]]])
    if name == "Ze":
        out["Z_e1"] = make_module(R, side, [0], [[[1]]])
        out["Z3_e1"] = make_module(R, side, [3], [[[1]]])
    return out


def random_module(R, rng, max_rank=3, side="left", tries=50):
    """Seeded random module of rank at most max_rank built from free and null pieces.

    Starts from a free module over the unitalization, a regular module or a
    null module, then passes to random quotients, submodules and direct sums.
    """
    for _ in range(tries):
        pick = rng.randrange(4)
        if pick == 0:
            M = free_unital_module(R, 1, side)
        elif pick == 1:
            M = regular_module(R, side)
        elif pick == 2:
            M = null_module(R, [rng.choice([0, 2, 3, 4])], side)
        else:
            M = null_module(R, [0, rng.choice([0, 2, 6])], side)
        for _ in range(rng.randrange(3)):
            if M.ngens == 0:
                break
            op = rng.randrange(3)
            v = [rng.randint(-2, 2) for _ in range(M.ngens)]
            if op == 0:
                inc = submodule_generated(M, [v])[1]
                M = quotient_module(M, inc.matrix.columns())[0]
            elif op == 1:
                M = submodule_generated(M, [v])[0]
            else:
                M = direct_sum(M, null_module(R, [rng.choice([0, 2])], side))
        if M.ngens <= max_rank:
            return M
    return null_module(R, [0], side)


def random_short_exact_sequence(R, rng, max_rank=4):
    """(K, M, C, inclusion, projection) with K a random submodule of a random M."""
    M = random_module(R, rng, max_rank)
    n = M.ngens
    v = [rng.randint(-2, 2) for _ in range(n)]
    K, inc = submodule_generated(M, [v] if n else [])
    C, proj = quotient_module(M, inc.matrix.columns())
    return K, M, C, inc, proj


# -- reports -----------------------------------------------------------------------------

ORIGINS = ("reference-result", "by-construction", "computed-oracle")


class Check:
    def __init__(self, name, expected, computed, passed, origin, anchor=""):
        if origin not in ORIGINS:
            raise ValueError("unknown origin %r" % origin)
        self.name = name
        self.expected = expected
        self.computed = computed
        self.passed = passed
        self.origin = origin
        self.anchor = anchor

    @property
    def status(self):
        if self.passed is None:
            return "INCONCLUSIVE"
        return "PASS" if self.passed else "FAIL"

    def to_json(self):
        return {"name": self.name, "status": self.status, "expected": self.expected,
                "computed": self.computed, "origin": self.origin, "anchor": self.anchor}


def _check(name, expected, computed, origin, anchor=""):
    passed = expected == computed
    return Check(name, _render(expected), _render(computed), passed, origin, anchor)


def _mark_inconclusive(checks):
    # a colimit that the level window cannot decide is not a falsification
    for c in checks:
        text = json.dumps(c.computed)
        if not c.passed and ("INCONCLUSIVE" in text or '"HEURISTIC"' in text):
            c.passed = None


def _render(x):
    if isinstance(x, FgAbelianGroup):
        return x.describe()
    if isinstance(x, Verdict):
        return x.label()
    if isinstance(x, (list, tuple)):
        return [_render(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _render(v) for k, v in x.items()}
    if isinstance(x, Fraction):
        return str(x)
    if hasattr(x, "describe"):
        return x.describe()
    return x


class Report:
    def __init__(self, entry_id, checks, certification, wall_time=None, note=""):
        self.entry_id = entry_id
        self.checks = checks
        self.certification = certification
        self.wall_time = wall_time
        self.note = note

    @property
    def status(self):
        if any(c.passed is False for c in self.checks):
            return "FAIL"
        if any(c.passed is None for c in self.checks):
            return "INCONCLUSIVE"
        return "PASS"

    def exit_code(self):
        return {"PASS": 0, "FAIL": 1, "INCONCLUSIVE": 3}[self.status]

    def to_json(self, timing=False):
        out = {"id": self.entry_id, "status": self.status, "certification": self.certification,
               "checks": [c.to_json() for c in self.checks]}
        if self.note:
            out["note"] = self.note
        if timing and self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def render(self, fmt="text", timing=False):
        if fmt == "json":
            return json.dumps(self.to_json(timing), indent=2, sort_keys=True)
        lines = ["%s: %s (%s)" % (self.entry_id, self.status, self.certification)]
        if self.note:
            lines.append("  note: %s" % self.note)
        for c in self.checks:
            lines.append("  [%s] %s: expected %s, computed %s (%s)" % (
                c.status, c.name, json.dumps(c.expected), json.dumps(c.computed), c.origin))
            if c.anchor:
                lines.append("         about: %s" % c.anchor)
        if timing and self.wall_time is not None:
            lines.append("  wall time: %.3fs" % self.wall_time)
        return "\n".join(lines)


def render_reports(reports, fmt="text", timing=False):
    if fmt == "json":
        return json.dumps([r.to_json(timing) for r in reports], indent=2, sort_keys=True)
    return "\n".join(r.render("text", timing) for r in reports)


def combined_exit_code(reports):
    codes = [r.exit_code() for r in reports]
    if 1 in codes:
        return 1
    if 3 in codes:
        return 3
    return 0


# -- options -------------------------------------------------------------------------------


def cap_levels(levels):
    """Keep at most FIRMHOM_MAX_LEVEL entries of a level chain."""
    cap = os.environ.get("FIRMHOM_MAX_LEVEL")
    if not cap:
        return list(levels)
    try:
        cap = int(cap)
    except ValueError:
        raise ValueError("FIRMHOM_MAX_LEVEL must be a positive integer") from None
    if cap < 1:
        raise ValueError("FIRMHOM_MAX_LEVEL must be a positive integer")
    return list(levels)[:cap]


class Options:
    def __init__(self, levels=None, level=None, degree_cutoff=2, tor_max=2, stability_window=3,
                 truncations=None, random_count=100, seed=0):
        self.explicit_levels = bool(levels)
        self.levels = list(levels) if levels else [1, 2, 4]
        self.level = level
        self.degree_cutoff = Fraction(degree_cutoff)
        if self.degree_cutoff <= 0:
            raise ValueError("degree cutoff must be positive")
        self.tor_max = tor_max
        self.stability_window = stability_window
        self.truncations = list(truncations) if truncations else list(range(1, 7))
        self.random_count = random_count
        self.seed = seed
        self.levels = cap_levels(self.levels)
        self.truncations = cap_levels(self.truncations)
        if self.stability_window < 1:
            raise ValueError("stability window must be at least 1")
        if self.tor_max < 0:
            raise ValueError("tor-max must be non-negative")
        for a, b in zip(self.levels, self.levels[1:]):
            if b <= a or b % a:
                raise ValueError("levels must ascend and divide each other")


# -- registry entries ----------------------------------------------------------------------


def _entry_d_ring(opt):
    D = corpus_ring("D")
    checks = [
        _check("ring validates", True, True, "by-construction", "associativity of the D table"),
        _check("left s-unital", "YES", is_s_unital_ring(D, "left").label(), "reference-result",
               "u is a left unit"),
        _check("left witness", [1, 0], common_witness(regular_module(D, "left")), "reference-result",
               "the witness is u"),
        _check("right s-unital", "NO", is_s_unital_ring(D, "right").label(), "reference-result",
               "v D = 0 rules out right witnesses"),
        _check("t-unital", "YES", is_t_unital_ring(D).label(), "reference-result",
               "left s-unital rings are t-unital"),
        _check("t-unital via Tor", "YES", t_unital_via_tor(D).label(), "computed-oracle",
               "Tor_1 and Tor_2 of Z over the unitalization vanish"),
        _check("idempotent", "YES", is_idempotent_ring(D).label(), "computed-oracle", "u u and u v span D"),
        _check("c-unital (left regular)", "NO", classify_module(regular_module(D)).c_unital.label(),
               "computed-oracle", "Hom_D(D, D) is larger than the image of D"),
    ]
    return checks, CERTIFIED


def _entry_d_times_dop(opt):
    R = corpus_ring("D_x_D_op")
    tor = t_unital_via_tor(R)
    t1, t2 = tor.data["tor"]
    checks = [
        _check("rank of the unitalization", 5, Unitalization(R).rank, "by-construction"),
        _check("t-unital (definition)", "YES", is_t_unital_ring(R).label(), "reference-result",
               "products of t-unital rings are t-unital"),
        _check("Tor_1(Z, Z)", "0", t1.describe(), "computed-oracle"),
        _check("Tor_2(Z, Z)", "0", t2.describe(), "computed-oracle"),
        _check("left s-unital", "NO", is_s_unital_ring(R, "left").label(), "reference-result",
               "the D_op factor has no left witness"),
        _check("right s-unital", "NO", is_s_unital_ring(R, "right").label(), "reference-result",
               "the D factor has no right witness"),
    ]
    return checks, CERTIFIED


def _entry_rational_levels(opt):
    I = build_ind_ring(1, opt.levels)
    table = ind_tor_colimit(I, 1, opt.stability_window)
    checks = []
    for k, N in enumerate(I.levels):
        checks.append(_check("Tor_1(Z, Z) at level %d" % N, "Z", table.entries[(1, k)].describe(),
                             "computed-oracle", "Koszul complex of Z over Z[z^(1/N)]"))
        checks.append(_check("R_%d t-unital" % N, "NO", is_t_unital_ring(I.rings[k]).label(), "computed-oracle",
                             "nothing of degree 1/N is a product"))
    for k in range(len(I.levels) - 1):
        checks.append(_check("transition %d -> %d zero" % (I.levels[k], I.levels[k + 1]), True,
                             table.transitions[(1, k)].is_zero(), "computed-oracle"))
    v = table.verdicts[1]
    checks.append(_check("colimit Tor_1 verdict", "ZERO", v.describe(), "reference-result",
                         "the colimit ring is t-unital"))
    checks.append(_check("colimit t-unital", "YES", t_unital_via_tor(I).label(), "reference-result"))
    checks.append(_check("s-unital (degree support)", "NO", is_s_unital_ring(I).label(), "reference-result",
                         "no nonzero r lies in R r"))
    checks.append(_check("idempotent along the chain", "YES", is_idempotent_ring(I).label(), "reference-result",
                         "z^(1/N) = z^(1/2N) z^(1/2N)"))
    return checks, CERTIFIED if v.label == "ZERO" else HEURISTIC


def _entry_truncated_degree_one(opt):
    N = opt.level or 4
    # the comparison is only claimed up to degree 1, so larger cutoffs are clipped
    cutoff = min(opt.degree_cutoff, Fraction(1))
    R = MonomialLevelRing(1, N)
    S = MonomialLevelRing(1, N, kill_degree=1)
    checks = []
    top = None
    for t in range(1, int(cutoff * N) + 1):
        d = Fraction(t, N)
        cR = degree_component_tensor_square(R, d)
        cS = degree_component_tensor_square(S, d)
        phi = degree_component_map(cR, cS)
        checks.append(_check("R(x)R -> S(x)S iso in degree %s" % d, True, phi.is_iso(), "reference-result",
                             "the comparison is an isomorphism in degrees at most 1"))
        top = (d, cR, cS)
    if top and top[0] == 1:
        d, cR, cS = top
        checks.append(_check("S(x)S in degree 1", "Z", cS.group.describe(), "computed-oracle"))
        checks.append(_check("S(x)S -> S in degree 1 is zero", True, cS.map_to_target.is_zero(),
                             "reference-result", "the class of z^(1/2) (x) z^(1/2) survives in S(x)S"))
        checks.append(_check("R(x)R -> R in degree 1 iso", True, cR.map_to_target.is_iso(), "computed-oracle"))
    return checks, CERTIFIED


def _pruefer_tor_checks(opt):
    ns = opt.truncations
    degrees = list(range(opt.tor_max + 1))
    chain = pruefer_square_chain(ns)
    table = ind_tor_colimit(chain, degrees, opt.stability_window)
    # the two-variable Koszul complex has length 2, so higher Tor vanishes
    level = ["Z", "Z^2", "Z"] + ["0"] * len(degrees)
    colim = ["ZERO", "ZERO", "STABLE(Z)"] + ["ZERO"] * len(degrees)
    checks = []
    for k, n in enumerate(ns):
        checks.append(_check("Tor_0..%d at n=%d" % (opt.tor_max, n), level[:len(degrees)],
                             [table.entries[(i, k)].describe() for i in degrees], "computed-oracle"))
    checks.append(_check("colimit verdicts", colim[:len(degrees)], [table.verdicts[i].describe() for i in degrees],
                         "reference-result", "Tor_n of P_x (x) P_y vanishes for n = 0, 1 and is Z for n = 2"))
    return checks, table


def _entry_pruefer_square(opt):
    checks, table = _pruefer_tor_checks(opt)
    single = ind_tor_colimit(pruefer_chain(opt.truncations), [0, 1], opt.stability_window)
    checks.append(_check("P_x colimit Tor_0, Tor_1", ["ZERO", "STABLE(Z)"],
                         [single.verdicts[i].describe() for i in (0, 1)], "reference-result",
                         "Tor_0(Z, P_x) = 0 and Tor_1(Z, P_x) = Z"))
    spot = all(table.spot_check(i, k) for i in range(opt.tor_max + 1) for k in range(len(opt.truncations) - 2))
    checks.append(_check("transitions agree with composite chain maps", True, spot, "computed-oracle"))
    return checks, HEURISTIC


def multiplication_sequence(n):
    """0 -> Q^(n) -> P_x^(n+1) (x) P_y^(n) -> P_x^(n) (x) P_y^(n) -> 0, maps in normalized coordinates."""
    Q = external_tensor(truncated_pruefer(1), truncated_pruefer(n))
    M = external_tensor(truncated_pruefer(n + 1), truncated_pruefer(n))
    C = external_tensor(truncated_pruefer(n), truncated_pruefer(n))
    e0 = IntMatrix.from_columns([[1] + [0] * n], n + 1)
    inc_raw = kron(e0, IntMatrix.identity(n))
    shift = IntMatrix.zeros(n, n + 1)
    for k in range(1, n + 1):
        shift.data[k - 1][k] = 1
    mult_raw = kron(shift, IntMatrix.identity(n))
    inc = ModuleHom(Q, M, M.group.basis_transform @ inc_raw @ Q.group.section)
    mult = ModuleHom(M, C, C.group.basis_transform @ mult_raw @ M.group.section)
    return Q, M, C, inc, mult


def _sequence_exact(inc, mult):
    if not mult.hom.compose(inc.hom).is_zero():
        return False
    if not inc.hom.is_injective() or not mult.hom.is_surjective():
        return False
    K, kincl = mult.hom.kernel()
    img, _ = inc.hom.image()
    if K.signature() != img.signature():
        return False
    return all(inc.hom.preimage(kincl.matrix.column(j)) is not None for j in range(K.ngens))


def _entry_kernel_failure(opt):
    ns = opt.truncations
    checks = []
    for n in ns:
        Q, M, C, inc, mult = multiplication_sequence(n)
        checks.append(_check("exact at n=%d" % n, True, _sequence_exact(inc, mult), "computed-oracle"))
        flags = [t_unital_via_tor(X).label() for X in (Q, M, C)]
        checks.append(_check("level-n t-unital flags at n=%d" % n, ["NO", "NO", "NO"], flags, "computed-oracle",
                             "finite truncations are never t-unital; the colimits decide"))
    mid = ind_tor_colimit(pruefer_square_chain(ns, shift=1), [0, 1], opt.stability_window)
    cok = ind_tor_colimit(pruefer_square_chain(ns), [0, 1], opt.stability_window)
    ker = ind_tor_colimit(q_chain(ns), [0, 1], opt.stability_window)
    checks.append(_check("middle colimit Tor_0, Tor_1", ["ZERO", "ZERO"],
                         [mid.verdicts[i].describe() for i in (0, 1)], "reference-result",
                         "the middle term is t-unital"))
    checks.append(_check("cokernel colimit Tor_0, Tor_1", ["ZERO", "ZERO"],
                         [cok.verdicts[i].describe() for i in (0, 1)], "reference-result",
                         "the cokernel is t-unital"))
    checks.append(_check("kernel colimit Tor_1", "STABLE(Z)", ker.verdicts[1].describe(), "reference-result",
                         "the kernel is not t-unital"))
    checks.append(_check("kernel per-level Tor_1", ["Z^2"] * len(ns),
                         [ker.entries[(1, k)].describe() for k in range(len(ns))], "computed-oracle"))
    return checks, HEURISTIC


def kuenneth_pairs():
    """Admissible one-variable factor pairs plus one with torsion in Tor."""
    R = MonomialLevelRing(1, 1)
    z2 = Module(R, "left", FgAbelianGroup.free(2), [IntMatrix.zeros(2, 2)], name="Z^2 null")
    tw = Module(R, "left", FgAbelianGroup.free(2), [IntMatrix.from_rows([[0, 2], [0, 0]])], name="x=2 shift")
    pairs = [(truncated_pruefer(a), truncated_pruefer(b)) for a in (1, 2, 3) for b in (1, 2, 3)]
    pairs += [(truncated_pruefer(3), z2), (z2, truncated_pruefer(2)), (tw, truncated_pruefer(2))]
    return pairs


def _entry_kuenneth(opt):
    checks = []
    for A, B in kuenneth_pairs():
        for n in range(3):
            v = kuenneth_check(A, B, n)
            if not v.applicable:
                checks.append(Check("%s, %s, n=%d" % (A.name, B.name, n), "NOT-APPLICABLE", "NOT-APPLICABLE",
                                    True, "computed-oracle", v.reason))
                continue
            checks.append(_check("%s, %s, n=%d" % (A.name, B.name, n), v.data["formula"].describe(),
                                 v.data["direct"].describe(), "computed-oracle"))
    return checks, CERTIFIED


def _entry_equivalence(opt):
    checks = []
    for name in ("D", "D_x_D_op", "A2"):
        for label, M in corpus_modules(name, "left").items():
            rep = classify_module(M)
            if rep.t_unital:
                v = equivalence_roundtrip(M)
                checks.append(_check("%s/%s roundtrip" % (name, label), "YES", v.label(), "reference-result",
                                     "M -> R(x)Hom(R,M) -> M is the identity"))
            H, _ = c_unitalization(M)
            v = dual_equivalence_roundtrip(H)
            checks.append(_check("%s/Hom(R,%s) dual roundtrip" % (name, label), "YES", v.label(),
                                 "reference-result", "P -> Hom(R, R(x)P) -> P is the identity"))
    return checks, CERTIFIED


def _entry_null(opt):
    checks = []
    rng = random.Random(opt.seed)
    for name in corpus_ring_names():
        R = corpus_ring(name)
        bad = []
        for t in range(opt.random_count):
            M = random_module(R, rng, 3)
            for variant in ("tensor", "hom"):
                if not null_defect(M, variant)[2]:
                    bad.append((t, variant))
        checks.append(_check("%s: defects null on %d random modules" % (name, opt.random_count), [], bad,
                             "reference-result", "kernel and cokernel of the comparison maps are null"))
    for name in t_unital_corpus_rings():
        for label in ("null_Z", "null_Z2", "zero"):
            N = corpus_modules(name)[label]
            v = null_vanishing_check(N)
            checks.append(_check("%s/%s vanishing" % (name, label), "YES", v.label(), "reference-result",
                                 "R(x)N, Tor_1(R,N), Hom(R,N), Ext^1(R,N) vanish"))
    return checks, CERTIFIED


def enough_idempotents_square(R, x, L):
    """Maps e_x R (x) L -> e_x L -> Hom(R e_x, L) and the direct composite, as GroupHoms."""
    e = R.idempotents[x]
    row, row_incl = submodule_generated(regular_module(R, "right"), [e])
    col, col_incl = submodule_generated(regular_module(R, "left"), [e])
    T = TensorProduct(row, L)
    Ex = L.action_of(e)
    exL, exL_incl = subgroup(L.group, Ex.columns())
    H = HomGroup(col, L)
    n = L.ngens
    unit = lambda i, m: [1 if t == i else 0 for t in range(m)]
    cols = []
    for a in range(row.ngens):
        r = row_incl.matrix.column(a)
        for l in range(n):
            cols.append(L.action_of(r) @ unit(l, n))
    first_raw = IntMatrix.from_columns(cols, n)
    first = GroupHom(T.group, exL, _coords(exL_incl, first_raw @ T.section), check=False)
    cols = []
    for j in range(exL.ngens):
        m = exL_incl.matrix.column(j)
        tup = []
        for s in range(col.ngens):
            tup.extend(L.action_of(col_incl.matrix.column(s)) @ m)
        cols.append(H.coords_of_tuple(tup))
    second = GroupHom(exL, H.group, IntMatrix.from_columns(cols, H.group.ngens), check=False)
    cols = []
    for a in range(row.ngens):
        r = row_incl.matrix.column(a)
        for l in range(n):
            tup = []
            for s in range(col.ngens):
                tup.extend(L.action_of(R.mul(col_incl.matrix.column(s), r)) @ unit(l, n))
            cols.append(H.coords_of_tuple(tup))
    direct_raw = IntMatrix.from_columns(cols, H.group.ngens)
    direct = GroupHom(T.group, H.group, direct_raw @ T.section, check=False)
    return first, second, direct


def _coords(incl, M):
    return IntMatrix.from_columns([incl.preimage(M.column(j)) for j in range(M.cols)], incl.domain.ngens)


def _entry_a2(opt):
    R = corpus_ring("A2")
    checks = [
        _check("A2 ring rank", 3, R.rank, "computed-oracle", "Hom(1,1), Hom(1,2), Hom(2,2)"),
        _check("left s-unital", "YES", is_s_unital_ring(R, "left").label(), "reference-result",
               "rings with enough idempotents are s-unital"),
        _check("right s-unital", "YES", is_s_unital_ring(R, "right").label(), "reference-result"),
        _check("t-unital", "YES", is_t_unital_ring(R).label(), "reference-result"),
    ]
    for x in R.objects:
        col = corpus_modules("A2")["column_%s" % x]
        checks.append(_check("R e_%s projective" % x, "YES", is_projective_nonunital(col).label(),
                             "reference-result", "R e_x is a projective unital module"))
    for label, L in corpus_modules("A2").items():
        if not classify_module(L).t_unital:
            continue
        for x in R.objects:
            first, second, direct = enough_idempotents_square(R, x, L)
            ok = first.is_iso() and second.is_iso() and direct.equals(second.compose(first))
            checks.append(_check("e_%s square for %s" % (x, label), True, ok, "reference-result",
                                 "e_x R (x) L = e_x L = Hom(R e_x, L)"))
    return checks, CERTIFIED


def _flat_modules():
    out = []
    for name in t_unital_corpus_rings():
        for side in ("left", "right"):
            for label, M in corpus_modules(name, side).items():
                out.append(("%s/%s/%s" % (name, side, label), M))
    return out


def _entry_flat(opt):
    checks = []
    bad = []
    inv = []
    duals = []
    for label, M in _flat_modules():
        cp, tf = is_c_projective(M), is_t_flat(M)
        if cp and not tf:
            bad.append(label)
        T = TensorWithRing(M).module.as_side(M.ring, M.side)
        Hm, _ = c_unitalization(M)
        Hm = Hm.as_side(M.ring, M.side)
        for pred in (is_c_projective, is_t_flat):
            vals = {pred(X).label() for X in (M, T, Hm)}
            if len(vals) != 1:
                inv.append((label, pred.__name__))
        if M.group.is_finite():
            dd = character_dual(character_dual(M).dual).dual
            f1 = {k: v.label() for k, v in classify_module(M).flags().items()}
            f2 = {k: v.label() for k, v in classify_module(dd).flags().items()}
            if f1 != f2:
                duals.append(label)
    checks.append(_check("c-projective implies t-flat", [], bad, "reference-result"))
    checks.append(_check("invariance under R(x)- and Hom(R,-)", [], inv, "reference-result"))
    checks.append(_check("double dual keeps flags", [], duals, "computed-oracle"))
    cc = closure_criteria(corpus_ring("D"))
    checks.append(_check("closure criteria for D", ["YES", "YES"],
                         [cc["kernels_closed"].label(), cc["cokernels_closed"].label()], "reference-result",
                         "D is flat on the right and projective on the left over its unitalization"))
    cc = closure_criteria(corpus_ring("A2"))
    checks.append(_check("closure criteria for A2", ["YES", "YES"],
                         [cc["kernels_closed"].label(), cc["cokernels_closed"].label()], "reference-result"))
    cc = closure_criteria(corpus_ring("trunc_xy3"))
    checks.append(_check("kernel closure for Z[x,y]/(x,y)^3", "NO", cc["kernels_closed"].label(),
                         "computed-oracle"))
    Z2 = null_module(corpus_ring("zero"), [2])
    checks.append(_check("Z/2 over the zero ring t-injective", "YES", is_t_injective_finite(Z2).label(),
                         "by-construction", "every module over the zero ring is t-injective"))
    return checks, CERTIFIED


def corpus_homs():
    D, A2, Ze = corpus_ring("D"), corpus_ring("A2"), corpus_ring("Ze")
    K = truncated_monomial_ring(1, 3)
    R = truncated_monomial_ring(1, 5)
    return {
        "Ze->D": ring_hom(Ze, D, [[1, 0]]),
        "id_D": ring_hom(D, D, [[1, 0], [0, 1]]),
        "Ze->A2 unit": ring_hom(Ze, A2, [[a + b for a, b in zip(A2.idempotents[1], A2.idempotents[2])]]),
        "Ze->D_op": ring_hom(Ze, D.opposite(), [[1, 0]]),
        "Ze->A2 corner": ring_hom(Ze, A2, [A2.idempotents[1]]),
        "y->x^2 truncated": ring_hom(K, R, [[0, 1, 0, 0], [0, 0, 0, 1]]),
        "id_A2": ring_hom(A2, A2, [A2.basis_vector(i) for i in range(3)]),
    }


def _hom_test_modules(R):
    left = [regular_module(R, "left"), null_module(R, [0], "left"), null_module(R, [2], "left")]
    right = [regular_module(R, "right"), null_module(R, [0], "right")]
    rng = random.Random(7)
    for _ in range(4):
        left.append(random_module(R, rng, 3, "left"))
        right.append(random_module(R, rng, 3, "right"))
    return left, right


def _entry_bar(opt):
    homs = corpus_homs()
    v = bar_fragment_homotopy(homs["Ze->D"])
    checks = [
        _check("R(x)_K R for Ze -> D", "Z^2", v.data["tensor_group"].describe(), "computed-oracle",
               "(v, u) and (v, v) vanish since v e = 0"),
        _check("dh + hd = id (Ze -> D)", "YES", v.label(), "reference-result",
               "the bar fragment is split right exact"),
        _check("conclusion: D t-unital", "YES", is_t_unital_ring(corpus_ring("D")).label(), "reference-result"),
        _check("dh + hd = id (Ze -> A2 unit)", "YES", bar_fragment_homotopy(homs["Ze->A2 unit"]).label(),
               "computed-oracle"),
        _check("dh + hd = id (identity of A2)", "YES", bar_fragment_homotopy(homs["id_A2"]).label(),
               "by-construction"),
        _check("corner Ze -> A2 precondition", "NOT-APPLICABLE",
               bar_fragment_homotopy(homs["Ze->A2 corner"]).label(), "computed-oracle",
               "e_1 R is smaller than R, so K(x)_K R -> R is not onto"),
    ]
    return checks, CERTIFIED


def _entry_restriction(opt):
    checks = []
    for name, f in corpus_homs().items():
        left, right = _hom_test_modules(f.codomain)
        for sid, v in verify_hom_propositions(f, left, right):
            checks.append(Check("%s: %s" % (name, sid), "not NO", v.label(), v.value is not False,
                                "reference-result", v.reason))
    rep = classify_ring_hom(corpus_homs()["Ze->D"])
    checks.append(_check("Ze->D flags", {"left_s": "YES", "right_s": "NO"},
                         {"left_s": rep.left_s.label(), "right_s": rep.right_s.label()}, "computed-oracle",
                         "v f(e) = 0 blocks right witnesses"))
    return checks, CERTIFIED


def _entry_free_products(opt):
    checks = [Check(e["id"], e["expected"], "not computed", True, "reference-result", e["ring"])
              for e in OUT_OF_SCOPE_ENTRIES]
    return checks, NOT_APPLICABLE


class CorpusEntry:
    def __init__(self, entry_id, description, runner):
        self.id = entry_id
        self.description = description
        self.runner = runner


REGISTRY = {e.id: e for e in [
    CorpusEntry("d-ring", "the ring D: left but not right s-unital", _entry_d_ring),
    CorpusEntry("d-times-dop", "D x D_op: t-unital, neither left nor right s-unital", _entry_d_times_dop),
    CorpusEntry("rational-exponent-levels", "Z[z^(1/N)] levels: t-unital colimit, not s-unital",
                _entry_rational_levels),
    CorpusEntry("truncated-degree-one", "degree components of R(x)R and S(x)S up to degree 1",
                _entry_truncated_degree_one),
    CorpusEntry("pruefer-square", "Tor of truncated Pruefer products over Z[x, y]", _entry_pruefer_square),
    CorpusEntry("kernel-of-multiplication", "a kernel of t-unital modules that is not t-unital",
                _entry_kernel_failure),
    CorpusEntry("kuenneth", "Kuenneth formula for one-variable factors", _entry_kuenneth),
    CorpusEntry("equivalence-roundtrip", "t-unital and c-unital roundtrip identities", _entry_equivalence),
    CorpusEntry("null-modules", "null defects and vanishing against null modules", _entry_null),
    CorpusEntry("enough-idempotents-a2", "A2 quiver ring: idempotent decompositions", _entry_a2),
    CorpusEntry("flat-projective-injective", "c-projective, t-flat, t-injective and closure", _entry_flat),
    CorpusEntry("bar-homotopy", "contracting homotopy of the bar fragment", _entry_bar),
    CorpusEntry("restriction-of-scalars", "homomorphism statements on test modules", _entry_restriction),
    CorpusEntry("free-products", "documented free-product statements (not computed)", _entry_free_products),
]}


def run_example(entry_id, options=None):
    if entry_id not in REGISTRY:
        raise KeyError("unknown example id %r" % entry_id)
    opt = options or Options()
    start = time.perf_counter()
    checks, cert = REGISTRY[entry_id].runner(opt)
    _mark_inconclusive(checks)
    return Report(entry_id, checks, cert, time.perf_counter() - start)


def run_all(options=None, only=None):
    ids = sorted(REGISTRY) if not only else list(only)
    return [run_example(i, options) for i in ids]


# -- file checks -----------------------------------------------------------------------------


class InputError(ValueError):
    pass


PREDICATES = ("t-unital", "s-unital", "c-unital", "c-projective", "t-flat", "t-injective-finite",
              "idempotent", "closure-criteria", "classify-hom")


def _resolve_ring(ref):
    if isinstance(ref, str):
        try:
            return corpus_ring(ref)
        except KeyError as exc:
            raise InputError("field 'ring': %s" % exc) from exc
    try:
        return ring_from_json(ref)
    except RingError as exc:
        raise InputError("field 'ring': %s" % exc) from exc


def load_input(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc)) from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("line %d, column %d: %s" % (exc.lineno, exc.colno, exc.msg)) from exc
    if not isinstance(obj, dict):
        raise InputError("top level must be a JSON object")
    if "backend" in obj:
        try:
            return "ring", ring_from_json(obj)
        except RingError as exc:
            raise InputError(str(exc)) from exc
    if "domain" in obj and "codomain" in obj:
        K, R = _resolve_ring(obj["domain"]), _resolve_ring(obj["codomain"])
        images = obj.get("images")
        if not isinstance(images, list):
            raise InputError("field 'images': expected one coordinate vector per domain basis element")
        try:
            return "hom", ring_hom(K, R, images)
        except (RingError, ValueError) as exc:
            raise InputError("field 'images': %s" % exc) from exc
    if "ring" in obj:
        try:
            return "module", module_from_json(obj, _resolve_ring)
        except ModuleError as exc:
            raise InputError(str(exc)) from exc
    raise InputError("expected a ring (field 'backend'), a module (field 'ring') or a homomorphism "
                     "(fields 'domain', 'codomain')")


def _not_applicable_check(pred, kind):
    return [Check(pred, "applicable input", kind, None, "by-construction",
                  "predicate %s does not apply to a %s" % (pred, kind))]


def check_file(path, predicate, options=None):
    if predicate not in PREDICATES:
        raise InputError("unknown predicate %r; choose from %s" % (predicate, ", ".join(PREDICATES)))
    opt = options or Options()
    kind, obj = load_input(path)
    start = time.perf_counter()
    checks = _run_predicate(predicate, kind, obj, opt)
    cert = CERTIFIED
    if any(c.passed is None for c in checks):
        cert = HEURISTIC
    return Report("%s:%s" % (os.path.basename(path), predicate), checks, cert, time.perf_counter() - start)


def _verdict_check(name, v, **extra):
    comp = {"verdict": v.label()}
    for key, val in extra.items():
        comp[key] = _render(val)
    return Check(name, "YES", comp, v.value, "computed-oracle", v.reason)


def _run_predicate(pred, kind, obj, opt):
    if pred == "classify-hom":
        if kind != "hom":
            return _not_applicable_check(pred, kind)
        rep = classify_ring_hom(obj)
        return [_verdict_check(k, v) for k, v in rep.flags().items()]
    if kind == "ring":
        R = obj
        if isinstance(R, IndRing):
            R = IndRing(R.n, opt.levels if opt.explicit_levels else cap_levels(R.levels))
        if isinstance(R, MonomialLevelRing) and opt.level and opt.level != R.N:
            R = MonomialLevelRing(R.n, opt.level)
        if pred == "t-unital":
            v = is_t_unital_ring(R)
            extra = {}
            if "missing_degree" in v.data:
                extra["missing_degree"] = v.data["missing_degree"]
            return [_verdict_check("t-unital", v, **extra)]
        if pred == "s-unital":
            if isinstance(R, FiniteRankRing):
                return [_verdict_check("left s-unital", is_s_unital_ring(R, "left")),
                        _verdict_check("right s-unital", is_s_unital_ring(R, "right"))]
            return [_verdict_check("s-unital", is_s_unital_ring(R))]
        if pred == "idempotent":
            return [_verdict_check("idempotent", is_idempotent_ring(R))]
        if pred == "closure-criteria":
            if not isinstance(R, FiniteRankRing):
                return _not_applicable_check(pred, "non-finite-rank ring")
            cc = closure_criteria(R)
            return [_verdict_check(k, v) for k, v in cc.items()]
        if pred in ("c-unital", "c-projective", "t-flat", "t-injective-finite"):
            if not isinstance(R, FiniteRankRing):
                return _not_applicable_check(pred, "non-finite-rank ring")
            return _run_predicate(pred, "module", regular_module(R, "left"), opt)
        return _not_applicable_check(pred, kind)
    if kind == "module":
        M = obj
        if pred in ("t-unital", "s-unital", "c-unital"):
            rep = classify_module(M)
            v = {"t-unital": rep.t_unital, "s-unital": rep.s_unital, "c-unital": rep.c_unital}[pred]
            extra = {"witness": rep.witness} if pred == "s-unital" and rep.witness else {}
            return [_verdict_check(pred, v, **extra)]
        if not isinstance(M.ring, FiniteRankRing):
            return _not_applicable_check(pred, "monomial module")
        try:
            if pred == "c-projective":
                return [_verdict_check(pred, is_c_projective(M))]
            if pred == "t-flat":
                return [_verdict_check(pred, is_t_flat(M))]
            if pred == "t-injective-finite":
                return [_verdict_check(pred, is_t_injective_finite(M))]
        except ModuleError as exc:
            return [Check(pred, "applicable input", str(exc), None, "by-construction", str(exc))]
        return _not_applicable_check(pred, kind)
    return _not_applicable_check(pred, kind)


def predicate_exit_code(report):
    """0 when every verdict is YES, 1 when one is NO, 3 when one is undecided."""
    return report.exit_code()
