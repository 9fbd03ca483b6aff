import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import given

from braidmono import (
    BraidWord,
    Factorization,
    LiftSpec,
    StrandMismatchError,
    ValidationError,
    braids_equal,
    conj,
    forget_strand,
    full_twist,
    kummer_infinity_braid,
    lift_braid,
    lift_factorization,
    permutation_of,
    to_marked_generators,
)
from oracles import fast_equal


def w(d, *letters):
    return BraidWord(d, letters)


def stabilizer_words(k: int, max_size: int = 6):
    """Words over s_1..s_{k-1} and s_k^{+-2} on k+1 strands."""
    gens = [(i,) for i in range(1, k)] + [(k, k)]
    pieces = st.sampled_from(gens).flatmap(
        lambda g: st.sampled_from((g, tuple(-x for x in g)))
    )
    return st.lists(pieces, max_size=max_size).map(
        lambda ps: BraidWord(k + 1, tuple(x for p in ps for x in p))
    )


@st.composite
def spec_and_word(draw, systems=("circular", "radial")):
    k = draw(st.integers(1, 3))
    n = draw(st.integers(1, 3))
    system = draw(st.sampled_from(systems))
    return LiftSpec(n, k, system), draw(stabilizer_words(k))


# ------------------------------------------------------------ validation


def test_spec_validation():
    with pytest.raises(ValidationError):
        LiftSpec(3, 2, "straight2")
    with pytest.raises(ValidationError):
        LiftSpec(0, 2)
    with pytest.raises(ValidationError):
        LiftSpec(2, 2, "spiral")


def test_odd_power_of_last_generator_is_rejected():
    with pytest.raises(ValidationError):
        lift_braid(LiftSpec(2, 2), w(3, 2, 1, 2, 2))


def test_strand_count_must_match():
    with pytest.raises(StrandMismatchError):
        lift_braid(LiftSpec(2, 2), w(4, 1))


def test_degree_one_is_identity_map():
    b = w(4, 1, 3, 3, -2)
    assert lift_braid(LiftSpec(1, 3), b) == b
    f = Factorization(4, (b, w(4, 3, 3)), marked=True)
    lifted = lift_factorization(LiftSpec(1, 3), f)
    assert [e.letters for e in lifted] == [b.letters, (3, 3)]


# ---------------------------------------------------------- hand examples


@pytest.mark.parametrize("n", range(2, 7))
def test_axis_loop_lifts_to_rotation(n):
    spec = LiftSpec(n, 1)
    lifted = forget_strand(lift_braid(spec, w(2, 1, 1)), spec.strands)
    assert fast_equal(lifted, w(n, *range(n - 1, 0, -1)))


def test_straight_system_table():
    spec = LiftSpec(2, 2, "straight2")
    fixed = spec.fixed_strand("native")
    assert fixed == 3
    s1 = forget_strand(lift_braid(spec, w(3, 1), "native"), fixed)
    s2 = forget_strand(lift_braid(spec, w(3, 2, 2), "native"), fixed)
    assert fast_equal(s1, w(4, 1, 3))
    assert fast_equal(s2, w(4, 2))


@pytest.mark.parametrize("n, k", [(2, 2), (3, 2), (2, 3), (3, 3), (4, 3)])
def test_half_twist_forms_agree(n, k):
    spec = LiftSpec(n, k)
    d = spec.strands
    for i in range(1, k):
        for j in range(1, n + 1):
            one = w(d, *spec.alpha(i, j, 1))
            assert fast_equal(one, w(d, *spec.alpha(i, j, 3)))
            vias = [(a, b) for a in range(1, k + 1) for b in range(1, n + 1)
                    if spec.circ(i, j) <= spec.circ(a, b) <= spec.d - 1]
            for via in vias:
                assert fast_equal(one, w(d, *spec.alpha(i, j, 2, via))), (i, j, via)


# ------------------------------------------------------------- properties


@given(spec_and_word(), st.data())
def test_lift_is_a_homomorphism(sw, data):
    spec, u = sw
    v = data.draw(stabilizer_words(spec.k))
    assert fast_equal(lift_braid(spec, u * v), lift_braid(spec, u) * lift_braid(spec, v))


@given(spec_and_word())
def test_lift_fixes_the_marked_strand(sw):
    spec, u = sw
    assert permutation_of(lift_braid(spec, u)).fixes(spec.strands)


@given(spec_and_word(("circular",)))
def test_systems_agree(sw):
    circ, u = sw
    ref = lift_braid(circ, u)
    assert fast_equal(lift_braid(LiftSpec(circ.n, circ.k, "radial"), u), ref)
    if circ.n == 2:
        straight = LiftSpec(2, circ.k, "straight2")
        assert fast_equal(lift_braid(straight, u), ref)
        native = lift_braid(straight, u, "native")
        assert braids_equal(straight.to_artin(native), ref)


@pytest.mark.parametrize("k, n", list(itertools.product(range(1, 4), range(1, 5))))
@pytest.mark.parametrize("system", ["circular", "radial"])
def test_central_compatibility(k, n, system):
    spec = LiftSpec(n, k, system)
    twist = to_marked_generators(full_twist(k + 1) ** n)
    assert braids_equal(lift_braid(spec, twist), full_twist(spec.strands))


def test_central_compatibility_seed_case():
    assert fast_equal(w(3, 2, 2, 1) ** 2, w(3, 2, 1) ** 3)
    assert fast_equal(lift_braid(LiftSpec(2, 1), w(2, 1, 1)) ** 2, full_twist(3))


# ----------------------------------------------------- factorization lifts


@st.composite
def marked_factorizations(draw):
    k = draw(st.integers(1, 3))
    n = draw(st.integers(1, 3))
    # kept small: the lifted product grows quickly and both equality routes are exponential in it
    entries = tuple(draw(stabilizer_words(k, 3)) for _ in range(draw(st.integers(1, 2))))
    return LiftSpec(n, k, draw(st.sampled_from(("circular", "radial")))), Factorization(
        k + 1, entries, marked=True
    )


@given(marked_factorizations())
def test_lifted_factorization_multiplies_to_lifted_product(sf):
    spec, T = sf
    out = lift_factorization(spec, T)
    assert len(out) == spec.n * (len(T) - 1) + 1
    # the blocks are conjugates by powers of the lifted axis loop, so the product telescopes
    # to the n-th power of the lifted product
    c = to_marked_generators(T.pseudo_coxeter() ** spec.n)
    assert fast_equal(out.pseudo_coxeter(), lift_braid(spec, c))


def test_lifted_blocks_are_conjugates():
    spec = LiftSpec(3, 2)
    T = Factorization(3, (w(3, 1), w(3, 2, 2)), marked=True)
    out = lift_factorization(spec, T)
    zero = lift_braid(spec, w(3, 2, 2))
    a = lift_braid(spec, w(3, 1))
    assert [fast_equal(e, x) for e, x in zip(out, [a, conj(a, zero), conj(a, zero**2), zero**3])] == [True] * 4
    assert out.labels[-1] == "x=0 lifted"


# --------------------------------------------------------- braids at infinity


def test_conic_braid_at_infinity_cubed():
    conic = Factorization(3, (w(3, 2, 2, 2, 2), w(3, 1)), marked=True)
    at_inf = full_twist(3) * conic.pseudo_coxeter().inverse()
    assert fast_equal(at_inf**3, conj(w(3, 1, 1, 1), w(3, 2, 2)))


def test_nodal_cubic_braid_at_infinity():
    from braidmono.fixtures import nodal_cubic

    cubic = nodal_cubic()
    at_inf = full_twist(4) * cubic.pseudo_coxeter().inverse()
    assert fast_equal(at_inf, conj(w(4, 1, 2), w(4, 3, 3, 2)))


def test_kummer_infinity_braid_completes_the_lift():
    T = Factorization(3, (w(3, 1), w(3, 2, 2)), marked=True)
    spec = LiftSpec(3, 2)
    lifted = lift_factorization(spec, T)
    inf = kummer_infinity_braid(spec, T)
    total = Factorization(spec.strands, lifted.entries + (inf,))
    assert fast_equal(total.pseudo_coxeter(), full_twist(spec.strands))
