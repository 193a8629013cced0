import pytest

from smalg.core import (
    CapExceeded,
    EvalError,
    FiniteAlgebra,
    Identity,
    Morphism,
    NotCompatible,
    Signature,
    SignatureMismatch,
    app,
    direct_product,
    enumerate_morphisms,
    eval_term,
    find_isomorphism,
    holds_identity,
    induced_subalgebra,
    quotient,
    subuniverse_generated,
    var,
)
from smalg.congruence import Congruence
from smalg.tnorm import lukasiewicz_spec, make_chain

from oracles import brute_force_morphisms


def test_signature_rejects_duplicates():
    with pytest.raises(SignatureMismatch):
        Signature((("f", 2), ("f", 1)))


def test_algebra_table_validation():
    sig = Signature((("f", 1),))
    with pytest.raises(Exception):
        FiniteAlgebra(sig, 2, ((0, 5),))
    with pytest.raises(Exception):
        FiniteAlgebra(sig, 2, ((0,),))


def test_eval_join_with_top(two):
    t = app("∨", var(0), var(1))
    assert eval_term(two, t, (0, 1)) == 1


def test_eval_variable_projection():
    l6 = make_chain(lukasiewicz_spec(6))   # 7 elements
    assert eval_term(l6, var(0), (5, 0, 3)) == 5


def test_eval_luk2_square_of_middle(l2):
    # oracle: max(1/2 + 1/2 - 1, 0) = 0 on the index grid
    t = app("⊙", var(0), var(0))
    assert eval_term(l2, t, (1,)) == 0


def test_eval_errors(two):
    with pytest.raises(EvalError):
        eval_term(two, app("nosuch", var(0)), (0,))
    with pytest.raises(EvalError):
        eval_term(two, app("∨", var(0)), (0,))
    with pytest.raises(EvalError):
        eval_term(two, var(3), (0,))


def test_identity_meet_idempotent(two):
    ident = Identity(app("∧", var(0), var(0)), var(0), 1)
    assert holds_identity(two, ident).holds


def test_identity_mul_idempotent_fails_on_l2(l2):
    # oracle: exhaustive over the 3 assignments; x=middle is the least witness
    ident = Identity(app("⊙", var(0), var(0)), var(0), 1)
    check = holds_identity(l2, ident)
    assert not check.holds
    assert check.witness == (1,)


def test_identity_prelinearity_on_bl(g3):
    lhs = app("∨", app("→", var(0), var(1)), app("→", var(1), var(0)))
    ident = Identity(lhs, app("1"), 2)
    assert holds_identity(g3, ident).holds


def test_identity_least_witness(l2):
    # x ⊙ y = 1 fails everywhere except (1,1)=top pair; least witness is (0,0)
    ident = Identity(app("⊙", var(0), var(1)), app("1"), 2)
    check = holds_identity(l2, ident)
    assert check.witness == (0, 0)


def test_identity_cap(l2):
    ident = Identity(var(0), var(0), 20)
    with pytest.raises(CapExceeded):
        holds_identity(l2, ident)


def test_product_of_two_is_boolean_square(two, square):
    prod, (p1, p2) = direct_product(two, two)
    assert prod.size == 4
    assert prod.tables == square.tables
    iso = find_isomorphism(prod, square)
    assert iso is not None


def test_product_sizes(two, g3):
    prod, _ = direct_product(g3, two)
    assert prod.size == 6


def test_projections_recover_components(two, g3):
    prod, (p1, p2) = direct_product(g3, two)
    for i in range(3):
        for j in range(2):
            e = i * 2 + j
            assert p1.map[e] == i
            assert p2.map[e] == j


def test_subuniverse_whole(g3):
    assert subuniverse_generated(g3, range(3)) == (0, 1, 2)


def test_subuniverse_constants(two):
    assert subuniverse_generated(two, []) == (0, 1)


def test_subuniverse_l4_middle(l4):
    # closure of {1/2} under the residuated operations (frozen fixpoint)
    assert subuniverse_generated(l4, [2]) == (0, 2, 4)


def test_subuniverse_minimality(g3, l2):
    for algebra in (g3, l2):
        for seed in ([], [1]):
            closure = set(subuniverse_generated(algebra, seed))
            for e in closure - set(seed):
                trimmed = closure - {e}
                still_closed = (
                    set(subuniverse_generated(algebra, trimmed)) <= trimmed
                    and all(
                        algebra.table(sym)[0] in trimmed
                        for sym, arity in algebra.signature.symbols if arity == 0
                    )
                )
                assert not still_closed


def test_quotient_by_identity(g3):
    q, canon = quotient(g3, Congruence.identity(3))
    assert q.size == 3
    assert find_isomorphism(q, g3) is not None
    assert canon.map == (0, 1, 2)


def test_quotient_by_total(g3):
    q, _ = quotient(g3, Congruence.total(3))
    assert q.size == 1


def test_quotient_by_projection_kernel(square):
    # kernel of the first projection: blocks {0,1}, {2,3}; factor has size 2
    theta = Congruence.from_blocks(4, [[0, 1], [2, 3]])
    q, canon = quotient(square, theta)
    assert q.size == 2
    assert canon.is_surjective()


def test_quotient_rejects_incompatible(g3):
    bad = Congruence.from_blocks(3, [[0, 2], [1]])
    with pytest.raises(NotCompatible) as err:
        quotient(g3, bad)
    assert err.value.symbol in ("∧", "∨", "⊙", "→")


def test_idempotent_endos_of_two(two):
    endos = enumerate_morphisms(two, two, "idempotent-endomorphisms")
    assert [m.map for m in endos] == [(0, 1)]


def test_idempotent_endos_of_square_match_brute_force(square):
    # oracle: filter all 256 self-maps by homomorphism + idempotence
    oracle = brute_force_morphisms(square, square, idempotent=True)
    endos = enumerate_morphisms(square, square, "idempotent-endomorphisms")
    assert [m.map for m in endos] == oracle
    assert len(endos) == 3   # id and the two coordinate collapses


def test_embeddings_two_into_g3(two, g3):
    # oracle: all 9 maps; only 0->0, 1->2 is a homomorphism
    oracle = brute_force_morphisms(two, g3, injective=True)
    embeds = enumerate_morphisms(two, g3, "embeddings")
    assert [m.map for m in embeds] == oracle == [(0, 2)]


def test_enumerated_morphisms_are_verified(g3):
    for m in enumerate_morphisms(g3, g3, "all"):
        assert m.violation() is None
    for m in enumerate_morphisms(g3, g3, "idempotent-endomorphisms"):
        assert all(m.map[m.map[x]] == m.map[x] for x in range(g3.size))


def test_enumeration_order_is_sorted(g3):
    maps = [m.map for m in enumerate_morphisms(g3, g3, "all")]
    assert maps == sorted(maps)


def test_endo_mode_requires_same_algebra(two, g3):
    with pytest.raises(Exception):
        enumerate_morphisms(two, g3, "endomorphisms")


def test_product_quotient_isomorphic_to_factor(g3):
    square, (p1, _) = direct_product(g3, g3)
    kernel = Congruence.from_labels(p1.map)
    factor, _ = quotient(square, kernel)
    assert find_isomorphism(factor, g3) is not None


def test_induced_subalgebra_reindexes(g3):
    sub, incl = induced_subalgebra(g3, (0, 2))
    assert sub.size == 2
    assert incl.map == (0, 2)
    assert incl.violation() is None


def test_morphism_compose(two, g3):
    e = enumerate_morphisms(two, g3, "embeddings")[0]
    endo = Morphism(g3, g3, (0, 2, 2))
    composed = endo.compose(e)
    assert composed.map == (0, 2)
