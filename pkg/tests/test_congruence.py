import pytest

from smalg.congruence import (
    CapExceeded,
    Congruence,
    cep_extension,
    congruence_lattice,
    generated_congruence,
    is_congruence,
    is_subdirectly_irreducible,
    iter_partitions,
    malcev_witness,
    monolith,
)
from smalg.core import WorkbenchError, induced_subalgebra, make_algebra, Signature

from oracles import compatible_partitions, least_congruence_containing

import random


def test_canonical_labeling():
    c = Congruence.from_labels([7, 7, 3, 3, 7])
    assert c.block_id == (0, 0, 2, 2, 0)
    assert all(c.block_id[c.block_id[x]] == c.block_id[x] for x in range(5))


def test_from_blocks_and_blocks_roundtrip():
    c = Congruence.from_blocks(4, [[0, 3], [1], [2]])
    assert c.blocks() == ((0, 3), (1,), (2,))


def test_meet_join_refines():
    a = Congruence.from_blocks(4, [[0, 1], [2, 3]])
    b = Congruence.from_blocks(4, [[0, 2], [1, 3]])
    assert a.meet(b).is_identity()
    assert a.join(b).is_total()
    assert Congruence.identity(4).refines(a)
    assert a.refines(Congruence.total(4))


def test_generated_empty_is_identity(g3):
    assert generated_congruence(g3, []).is_identity()


def test_generated_total_on_simple(two):
    assert generated_congruence(two, [(0, 1)]).is_total()


def test_generated_on_g3_matches_partition_oracle(g3):
    # oracle: all 5 partitions of a 3-set, filtered by compatibility
    expected = least_congruence_containing(g3, [(1, 2)])
    got = generated_congruence(g3, [(1, 2)])
    assert got == expected
    assert got.blocks() == ((0,), (1, 2))


def test_generated_matches_oracle_on_all_pairs(g3, l2, square):
    for algebra in (g3, l2, square):
        for a in range(algebra.size):
            for b in range(a + 1, algebra.size):
                assert generated_congruence(algebra, [(a, b)]) == \
                    least_congruence_containing(algebra, [(a, b)])


def test_lattice_two_element(two):
    lattice = congruence_lattice(two)
    assert [c.block_id for c in lattice] == [(0, 1), (0, 0)]


def test_lattice_boolean_square_matches_oracle(square):
    # oracle: all 15 partitions of a 4-set filtered by compatibility
    assert set(congruence_lattice(square)) == set(compatible_partitions(square))
    assert len(congruence_lattice(square)) == 4


def test_lattice_l2_simple(l2):
    # oracle: all 5 partitions filtered by compatibility
    assert set(congruence_lattice(l2)) == set(compatible_partitions(l2))
    assert len(congruence_lattice(l2)) == 2


def test_lattice_order_finest_first(g3):
    lattice = congruence_lattice(g3)
    assert lattice[0].is_identity()
    assert lattice[-1].is_total()
    counts = [c.block_count() for c in lattice]
    assert counts == sorted(counts, reverse=True)


def test_lattice_cap():
    sig = Signature((("f", 1),))
    big = make_algebra(sig, 13, {"f": tuple(range(13))})
    with pytest.raises(CapExceeded):
        congruence_lattice(big)


def test_monolith_cases(two, square, l2):
    assert monolith(two).is_total()
    assert monolith(square) is None
    assert monolith(l2).is_total()


def test_monolith_trivial_algebra_not_si():
    sig = Signature((("f", 1),))
    one = make_algebra(sig, 1, {"f": (0,)})
    assert monolith(one) is None
    assert not is_subdirectly_irreducible(one)


def test_monolith_agrees_with_lattice_atoms(g3, square, l2):
    for algebra in (g3, square, l2):
        lattice = congruence_lattice(algebra)
        proper = [c for c in lattice if not c.is_identity()]
        atoms = [c for c in proper
                 if not any(d != c and d.refines(c) for d in proper)]
        mono = monolith(algebra)
        if len(atoms) == 1:
            assert mono == atoms[0]
        else:
            assert mono is None


def test_malcev_reflexive_target_is_empty_chain(g3):
    wit = malcev_witness(g3, [(1, 2)], (1, 1))
    assert wit.steps == ()
    assert wit.replay(g3)


def test_malcev_generator_pair_single_step(g3):
    wit = malcev_witness(g3, [(1, 2)], (1, 2))
    assert len(wit.steps) == 1
    step = wit.steps[0]
    assert step.generator_pair in ((1, 2), (2, 1))
    assert wit.replay(g3)


def test_malcev_replay_on_samples(g3, l2, square, l4):
    rng = random.Random(7)
    for algebra in (g3, l2, square, l4):
        n = algebra.size
        for _ in range(25):
            pairs = [(rng.randrange(n), rng.randrange(n))
                     for _ in range(rng.choice((1, 2)))]
            cong = generated_congruence(algebra, pairs)
            related = [(a, b) for a in range(n) for b in range(n)
                       if cong.relates(a, b)]
            target = rng.choice(related)
            wit = malcev_witness(algebra, pairs, target)
            assert wit.replay(algebra)


def test_malcev_rejects_unrelated(g3):
    with pytest.raises(WorkbenchError):
        malcev_witness(g3, [(1, 2)], (0, 1))


def test_cep_identity_extension(g3):
    sub, incl = induced_subalgebra(g3, (0, 2))
    phi = cep_extension(g3, incl, Congruence.identity(2))
    assert phi == Congruence.identity(3)


def test_cep_improper_case(g3):
    sub, incl = induced_subalgebra(g3, (0, 1, 2))
    phi = cep_extension(g3, incl, Congruence.total(3))
    assert phi.is_total()


def test_cep_two_chain_in_g3(g3):
    # oracle: of the Goedel chain's 3 congruences only the total one
    # relates 0 and 2, and it restricts to the total congruence of the
    # subalgebra; the generated extension reproduces it
    sub, incl = induced_subalgebra(g3, (0, 2))
    phi = cep_extension(g3, incl, Congruence.total(2))
    assert phi == Congruence.total(3)
    assert generated_congruence(g3, [(0, 2)]).is_total()


def test_cep_cap(g3):
    sub, incl = induced_subalgebra(g3, (0, 2))
    with pytest.raises(CapExceeded):
        cep_extension(g3, incl, Congruence.identity(2), cap=2)


def test_join_laws_on_lattice(square):
    lattice = congruence_lattice(square)
    delta = Congruence.identity(square.size)
    for x in lattice:
        assert x.join(x) == x
        assert x.join(delta) == x
        for y in lattice:
            assert x.join(y) == y.join(x)
            for z in lattice:
                assert x.join(y.join(z)) == x.join(y).join(z)


def test_iter_partitions_counts():
    # Bell numbers 1, 2, 5, 15, 52
    for n, bell in ((1, 1), (2, 2), (3, 5), (4, 15), (5, 52)):
        assert sum(1 for _ in iter_partitions(n)) == bell


def test_is_congruence_matches_definition(g3, square):
    from oracles import all_partitions, is_compatible

    for algebra in (g3, square):
        for p in all_partitions(algebra.size):
            assert is_congruence(algebra, p) == is_compatible(algebra, p)
