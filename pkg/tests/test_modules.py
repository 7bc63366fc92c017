import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from firmhom.corpus import corpus_modules, corpus_ring, corpus_ring_names, random_module
from firmhom.modules import (
    ActionIncompatibility,
    HomFromRing,
    HomGroup,
    Module,
    ModuleError,
    ModuleHom,
    RingMismatch,
    TensorProduct,
    TensorWithRing,
    check_associativity_adjunction,
    degree_component_map,
    degree_component_tensor_square,
    direct_sum,
    external_tensor,
    free_unital_module,
    make_module,
    module_from_json,
    null_module,
    quotient_module,
    regular_module,
    restrict_scalars,
    submodule_generated,
    truncated_pruefer,
)
from firmhom.rings import MonomialLevelRing, ring_hom, zero_ring
from firmhom.zlinalg import FgAbelianGroup, IntMatrix

from strategies import seeds

cyclic_orders = st.sampled_from([0, 2, 3, 4, 6, 9])


def test_incompatible_actions_rejected():
    D = corpus_ring("D")
    # u acting as 0 and v as 1 gives v v = v, but v v = 0 in D
    with pytest.raises(ActionIncompatibility):
        make_module(D, "left", [0], [[[0]], [[1]]])


def test_torsion_must_be_respected():
    D = corpus_ring("D")
    with pytest.raises(ModuleError):
        Module(D, "left", FgAbelianGroup(1, (2,)), [[[1, 0], [1, 1]], [[0, 0], [0, 0]]])


def test_monomial_actions_must_be_nilpotent():
    R = MonomialLevelRing(1, 1)
    with pytest.raises(ActionIncompatibility):
        Module(R, "left", FgAbelianGroup.free(1), [[[1]]])


def test_non_normal_group_is_normalized():
    D = corpus_ring("D")
    M = make_module(D, "left", [6, 4], [IntMatrix.identity(2), IntMatrix.zeros(2, 2)])
    assert M.group.signature() == (0, (2, 12))
    assert M.actions[0] == IntMatrix.identity(2)


def test_direct_sum_rejects_mixed_sides():
    D = corpus_ring("D")
    with pytest.raises(RingMismatch):
        direct_sum(regular_module(D, "left"), regular_module(D, "right"))


def test_s2_tensor_square_is_free_of_rank_one():
    # eps (x) eps has no relations since every product of two elements is zero
    S2 = corpus_ring("S2")
    T = TensorProduct(regular_module(S2, "right"), regular_module(S2, "left"))
    assert T.group.describe() == "Z"


def test_s2_hom_and_unit_map():
    # Hom(S2, S2) = Z (any Z-linear endomorphism commutes with the zero action)
    # and P -> Hom(R, P) sends eps to the map eps -> eps^2 = 0
    S2 = corpus_ring("S2")
    P = regular_module(S2)
    H = HomFromRing(P)
    assert H.module.group.describe() == "Z"
    assert H.eta.hom.is_zero()


@settings(max_examples=40, deadline=None)
@given(cyclic_orders, cyclic_orders)
def test_tensor_over_zero_ring_is_group_tensor(a, b):
    Z0 = zero_ring()
    T = TensorProduct(null_module(Z0, [a], "right"), null_module(Z0, [b], "left"))
    g = gcd(a, b)
    assert T.group.signature() == ((1, ()) if g == 0 else ((0, ()) if g == 1 else (0, (g,))))


@settings(max_examples=40, deadline=None)
@given(cyclic_orders, cyclic_orders)
def test_hom_over_zero_ring(a, b):
    # Hom(Z/a, Z/b) = Z/gcd(a, b), with Z/0 read as Z
    Z0 = zero_ring()
    H = HomGroup(null_module(Z0, [a]), null_module(Z0, [b]))
    g = gcd(a, b)
    if a == 0:
        expected = (1, ()) if b == 0 else (0, (b,))
    elif b == 0:
        expected = (0, ())
    else:
        expected = (0, ()) if g == 1 else (0, (g,))
    assert H.group.signature() == expected


def test_hom_tuple_roundtrip():
    D = corpus_ring("D")
    M = direct_sum(regular_module(D), null_module(D, [2]))
    H = HomGroup(regular_module(D), M)
    for x in range(H.group.ngens):
        e = [1 if t == x else 0 for t in range(H.group.ngens)]
        X = H.as_matrix(e)
        assert H.group.reduce(H.coords_of_matrix(X)) == H.group.reduce(e)
        ModuleHom(regular_module(D), M, X)


def test_tensor_with_d_on_p():
    # P = Z with u = 1, v = 0 over D is t-unital
    P = corpus_modules("D")["Z_u1"]
    tw = TensorWithRing(P)
    assert tw.module.group.describe() == "Z"
    assert tw.mult.is_iso()


def test_free_unital_module_shape():
    D = corpus_ring("D")
    F = free_unital_module(D, 2)
    assert F.group.describe() == "Z^6"
    F.validate()


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(corpus_ring_names()), seeds)
def test_random_modules_validate(name, seed):
    R = corpus_ring(name)
    M = random_module(R, random.Random(seed), 3)
    assert M.ngens <= 3
    M.validate()


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(corpus_ring_names()), seeds)
def test_submodule_quotient_sequence_is_exact(name, seed):
    rng = random.Random(seed)
    R = corpus_ring(name)
    M = random_module(R, rng, 3)
    v = [rng.randint(-2, 2) for _ in range(M.ngens)]
    K, inc = submodule_generated(M, [v])
    C, proj = quotient_module(M, inc.matrix.columns())
    K.validate()
    C.validate()
    ModuleHom(K, M, inc.hom)
    ModuleHom(M, C, proj.hom)
    assert proj.hom.compose(inc.hom).is_zero()
    assert inc.hom.is_injective() and proj.hom.is_surjective()
    ker, kincl = proj.hom.kernel()
    assert all(inc.hom.preimage(kincl.matrix.column(j)) is not None for j in range(ker.ngens))


def test_associativity_and_adjunction_on_d():
    D = corpus_ring("D")
    B = regular_module(D, "left")
    v = check_associativity_adjunction(regular_module(D, "right"), B, corpus_modules("D")["Z_u1"],
                                       corpus_modules("D")["D_plus_null_Z2"], D.right_mult_matrices())
    assert v["associativity"] and v["adjunction"]


def test_restrict_scalars_along_unit_inclusion():
    D = corpus_ring("D")
    f = ring_hom(corpus_ring("Ze"), D, [[1, 0]])
    M = restrict_scalars(f, regular_module(D))
    assert M.actions[0] == regular_module(D).actions[0]
    with pytest.raises(RingMismatch):
        restrict_scalars(f, regular_module(corpus_ring("A2")))


def test_degree_components_level_four():
    R = MonomialLevelRing(1, 4)
    S = MonomialLevelRing(1, 4, kill_degree=1)
    # degree-1 pairs z^(a/4) (x) z^((4-a)/4), a = 1..3, all identified
    cR = degree_component_tensor_square(R, Fraction(1))
    cS = degree_component_tensor_square(S, Fraction(1))
    assert cR.group.describe() == "Z" and cS.group.describe() == "Z"
    assert cR.map_to_target.is_iso()
    assert cS.map_to_target.is_zero()
    assert degree_component_map(cR, cS).is_iso()


def test_degree_component_rejects_bad_degree():
    with pytest.raises(ModuleError):
        degree_component_tensor_square(MonomialLevelRing(1, 4), Fraction(1, 3))


def test_pruefer_modules():
    P = truncated_pruefer(3)
    assert P.group.describe() == "Z^3"
    X = external_tensor(truncated_pruefer(2), truncated_pruefer(3))
    assert X.ring.n == 2 and X.ngens == 6
    X.validate()


def test_module_json_roundtrip_and_errors():
    obj = {"ring": "D", "side": "left", "group": {"free_rank": 1, "torsion": []}, "actions": [[[1]], [[0]]]}
    M = module_from_json(obj, corpus_ring)
    assert M.group.describe() == "Z"
    bad = dict(obj, actions=[[[1, 0]], [[0]]])
    with pytest.raises(ModuleError):
        module_from_json(bad, corpus_ring)
    with pytest.raises(ModuleError):
        module_from_json({"ring": "D"}, corpus_ring)
    with pytest.raises(ModuleError):
        module_from_json(dict(obj, side="middle"), corpus_ring)
