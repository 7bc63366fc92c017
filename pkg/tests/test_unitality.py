import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from firmhom.corpus import corpus_modules, corpus_ring, corpus_ring_names, random_module
from firmhom.homology import t_unital_via_tor
from firmhom.modules import ModuleError, direct_sum, make_module, null_module, regular_module, truncated_pruefer
from firmhom.rings import IndRing, MonomialLevelRing
from firmhom.unitality import (
    RingNotTUnital,
    c_unitalization,
    classify_module,
    common_witness,
    dual_equivalence_roundtrip,
    equivalence_roundtrip,
    is_s_unital_ring,
    is_t_unital_ring,
    null_defect,
    s_unital_inverse_map,
    t_unitalization,
    witnesses_agree,
)

from strategies import seeds


def test_d_flags():
    D = corpus_ring("D")
    assert is_s_unital_ring(D, "left").value is True
    assert common_witness(regular_module(D)) == [1, 0]
    assert is_s_unital_ring(D, "right").value is False
    assert is_t_unital_ring(D).value is True


def test_s2_is_nothing():
    S2 = corpus_ring("S2")
    rep = classify_module(regular_module(S2))
    assert not rep.t_unital and not rep.s_unital and not rep.c_unital
    assert rep.null


def test_null_module_flags():
    D = corpus_ring("D")
    rep = classify_module(null_module(D, [2]))
    assert rep.null and not rep.t_unital and not rep.s_unital


def test_s_unital_implies_t_unital_over_left_s_unital_ring():
    # over D (left s-unital) every s-unital left module is t-unital
    for M in corpus_modules("D").values():
        rep = classify_module(M)
        if rep.s_unital:
            assert rep.t_unital


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["D", "A2", "Ze"]), seeds)
def test_s_unital_implies_t_unital_random(name, seed):
    M = random_module(corpus_ring(name), random.Random(seed), 3)
    rep = classify_module(M)
    if rep.s_unital:
        assert rep.t_unital


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(corpus_ring_names()), seeds)
def test_t_unital_flag_agrees_with_tor(name, seed):
    # R (x) M -> M is an isomorphism iff Tor_0(Z, M) = Tor_1(Z, M) = 0 over the unitalization
    R = corpus_ring(name)
    if not is_t_unital_ring(R):
        return
    M = random_module(R, random.Random(seed), 3)
    assert bool(classify_module(M).t_unital) == bool(t_unital_via_tor(M))


def test_monomial_modules():
    rep = classify_module(truncated_pruefer(2))
    assert rep.t_unital.value is False
    assert rep.s_unital.value is False
    assert rep.c_unital.value is None


def test_monomial_ring_missing_degree():
    v = is_t_unital_ring(MonomialLevelRing(1, 2))
    assert v.value is False
    assert str(v.data["missing_degree"]) == "1/2"


def test_ind_ring_s_unital_no():
    assert is_s_unital_ring(IndRing(1, [1, 2, 4])).value is False
    assert is_t_unital_ring(IndRing(1, [1, 2, 4])).value is True


def test_functors_need_t_unital_ring():
    S2 = corpus_ring("S2")
    with pytest.raises(RingNotTUnital):
        t_unitalization(regular_module(S2))
    with pytest.raises(RingNotTUnital):
        c_unitalization(regular_module(S2))


@pytest.mark.parametrize("name", ["D", "A2", "D_x_D_op"])
def test_unitalizations_are_unital(name):
    for M in corpus_modules(name).values():
        T, _ = t_unitalization(M)
        assert classify_module(T).t_unital
        H, _ = c_unitalization(M)
        assert classify_module(H).c_unital


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(corpus_ring_names()), seeds, st.sampled_from(["tensor", "hom"]))
def test_null_defects_are_null(name, seed, variant):
    M = random_module(corpus_ring(name), random.Random(seed), 3)
    assert null_defect(M, variant)[2].value is True


@pytest.mark.parametrize("name", ["D", "A2", "D_x_D_op"])
def test_roundtrips_on_corpus(name):
    for M in corpus_modules(name).values():
        if classify_module(M).t_unital:
            assert equivalence_roundtrip(M).value is True
        if classify_module(M).c_unital:
            assert dual_equivalence_roundtrip(M).value is True


def test_roundtrip_not_applicable_for_non_unital_module():
    D = corpus_ring("D")
    assert equivalence_roundtrip(null_module(D, [0])).value is None


def test_s_unital_inverse_map():
    D = corpus_ring("D")
    M = direct_sum(regular_module(D), corpus_modules("D")["Z_u1"])
    hom, v = s_unital_inverse_map(M)
    assert v.value is True
    assert witnesses_agree(M, [1, 0], [1, 5], [1, 0, 0])


def test_s_unital_inverse_needs_left_s_unital_ring():
    with pytest.raises(ModuleError):
        s_unital_inverse_map(regular_module(corpus_ring("D"), "right"))


def test_right_module_over_d_witness():
    # Z with u acting by 1 on the right has witness u but D is not right s-unital
    D = corpus_ring("D")
    M = make_module(D, "right", [0], [[[1]], [[0]]])
    assert common_witness(M) == [1, 0]
