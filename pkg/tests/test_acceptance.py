"""Acceptance criteria, one test per criterion, each printing a verdict line.

Runtime-bounded criteria assert their stated wall-clock budgets.  Expected
values come from independent oracles (all-partitions filters, powerset
filter enumeration, brute-force self-map filters) or are trivially forced.
"""
import random
import shutil
import time
from itertools import combinations, product
from pathlib import Path

import pytest

from smalg.congruence import congruence_lattice, generated_congruence, \
    is_congruence, malcev_witness, monolith
from smalg.core import enumerate_morphisms, induced_subalgebra, subuniverse_generated
from smalg.corpus import bundled_corpus_dir, load_corpus
from smalg.generator_check import run_generator_check
from smalg.residuated import (
    ResiduatedView,
    build_diagonal_pair,
    build_radical_square,
    build_tau_h,
    check_axioms,
    check_state_operator,
    classify_trichotomy,
    si_state_bl_report,
)
from smalg.state_morphism import StateMorphismAlgebra, lift_congruence, \
    subdiagonal_embedding, theta_tau
from smalg.tnorm import goedel_spec, lukasiewicz_spec, make_chain
from smalg.verify import VerifyCaps, run_verify_suite
from smalg.core import verified_morphism

from oracles import compatible_partitions, least_congruence_containing


def _verdict(number, label, elapsed=None):
    clock = f" ({elapsed:.2f}s)" if elapsed is not None else ""
    print(f"ACCEPTANCE {number:>2} {label}: PASS{clock}")


@pytest.fixture(scope="module")
def docs():
    return load_corpus(bundled_corpus_dir())


@pytest.fixture(scope="module")
def bl_docs(docs):
    return {
        name: doc for name, doc in docs.items()
        if doc.alg_class in ("BL", "MV")
    }


def _expansions(docs, max_size):
    """Every (base, idempotent endomorphism) pairing from the corpus."""
    out = []
    for name in sorted(docs):
        algebra = docs[name].to_algebra()
        if algebra.size > max_size:
            continue
        for endo in enumerate_morphisms(algebra, algebra, "idempotent-endomorphisms"):
            out.append((name, StateMorphismAlgebra(algebra, endo.map)))
    return out


def test_acceptance_1_axiom_suite(docs):
    start = time.monotonic()
    for n in range(1, 7):
        assert check_axioms(docs[f"luk_chain_{n}"].to_algebra(), "BL").ok
        assert check_axioms(docs[f"luk_chain_{n}"].to_algebra(), "MV").ok
    for n in range(2, 7):
        assert check_axioms(docs[f"godel_chain_{n}"].to_algebra(), "BL").ok
    for name in ("os_g2_l2", "os_l2_g2", "os_l1_g1_l2"):
        assert check_axioms(docs[name].to_algebra(), "BL").ok
    g3 = docs["godel_chain_2"].to_algebra()
    verdict = check_axioms(g3, "MV")
    assert not verdict.ok and verdict.axiom == "involution" and verdict.witness == (1,)
    elapsed = time.monotonic() - start
    assert elapsed < 1.0
    _verdict(1, "axiom suite on bundled chains", elapsed)


def test_acceptance_2_congruence_oracle(docs):
    start = time.monotonic()
    rng = random.Random(2)
    for name in sorted(docs):
        algebra = docs[name].to_algebra()
        if algebra.size > 6:
            continue
        oracle = compatible_partitions(algebra)
        assert set(congruence_lattice(algebra)) == set(oracle)
        n = algebra.size
        for a in range(n):
            for b in range(a + 1, n):
                assert generated_congruence(algebra, [(a, b)]) == \
                    least_congruence_containing(algebra, [(a, b)])
        for _ in range(3):
            pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(2)]
            assert generated_congruence(algebra, pairs) == \
                least_congruence_containing(algebra, pairs)
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    _verdict(2, "congruence lattice and generation match the partition oracle", elapsed)


def test_acceptance_3_malcev_witnesses(docs):
    rng = random.Random(3)
    samples = 0
    for name in sorted(docs):
        algebra = docs[name].to_algebra()
        n = algebra.size
        if n < 2 or n > 9:
            continue
        for _ in range(14):
            pairs = [(rng.randrange(n), rng.randrange(n))
                     for _ in range(rng.choice((1, 2)))]
            cong = generated_congruence(algebra, pairs)
            related = [(a, b) for a in range(n) for b in range(n)
                       if cong.relates(a, b)]
            target = rng.choice(related)
            witness = malcev_witness(algebra, pairs, target)
            assert witness.replay(algebra)
            samples += 1
    assert samples >= 200
    _verdict(3, f"{samples} chain witnesses replay exactly")


def test_acceptance_4_kernel_lift_suites(docs):
    failures = []
    for name, sma in _expansions(docs, 6):
        algebra = sma.base
        image = sma.image()
        image_alg, _ = sma.image_subalgebra()
        kernel = theta_tau(sma)
        for phi in congruence_lattice(image_alg):
            lifted = lift_congruence(sma, phi)
            if not is_congruence(sma.expansion, lifted):
                failures.append((name, "lift not a congruence of the expansion"))
            if lifted.restrict(image) != phi:
                failures.append((name, "lift does not restrict to phi"))
        for theta in congruence_lattice(algebra):
            if theta.refines(kernel) and not is_congruence(sma.expansion, theta):
                failures.append((name, "sub-kernel congruence not tau-compatible"))
        image_pairs = list(combinations(image, 2))
        for x, y in image_pairs:
            if generated_congruence(algebra, [(x, y)]) != \
                    generated_congruence(sma.expansion, [(x, y)]):
                failures.append((name, f"generation differs at ({x},{y})"))
        if image_pairs:
            if generated_congruence(algebra, image_pairs) != \
                    generated_congruence(sma.expansion, image_pairs):
                failures.append((name, "generation differs on the full image square"))
    assert not failures, failures
    _verdict(4, "kernel-lift and image-generation suites, zero failures")


def test_acceptance_5_subdiagonal_certificates(docs):
    start = time.monotonic()
    checked = 0
    for name, sma in _expansions(docs, 6):
        if monolith(sma.expansion) is None:
            continue
        cert = subdiagonal_embedding(sma)
        assert cert.injective, (name, sma.tau)
        assert cert.homomorphic, (name, sma.tau)
        assert cert.tau_commuting, (name, sma.tau)
        assert cert.target_si, (name, sma.tau)
        checked += 1
    elapsed = time.monotonic() - start
    assert elapsed < 300.0
    assert checked >= 10
    _verdict(5, f"{checked} subdiagonal certificates, zero failures", elapsed)


def test_acceptance_6_si_transfer(docs):
    checked = 0
    for name in sorted(docs):
        algebra = docs[name].to_algebra()
        if algebra.size > 6 or monolith(algebra) is None:
            continue
        for endo in enumerate_morphisms(algebra, algebra, "idempotent-endomorphisms"):
            sma = StateMorphismAlgebra(algebra, endo.map)
            assert monolith(sma.expansion) is not None, (name, endo.map)
            checked += 1
    assert checked >= 10
    _verdict(6, f"{checked} expansions of irreducible bases stay irreducible")


def _state_operator_pool(view, doc, algebra):
    pool = {}
    if doc.tau is not None:
        pool[tuple(doc.tau)] = True
    if algebra.size <= 6:
        for endo in enumerate_morphisms(algebra, algebra, "idempotent-endomorphisms"):
            pool.setdefault(endo.map, True)
    if algebra.size <= 5:
        for cand in product(range(algebra.size), repeat=algebra.size):
            if check_state_operator(view, cand).ok:
                pool.setdefault(cand, True)
    return sorted(pool)


def test_acceptance_7_si_conditions_biconditional(bl_docs):
    checked = 0
    for name in sorted(bl_docs):
        doc = bl_docs[name]
        algebra = doc.to_algebra()
        if algebra.size > 8:
            continue
        view = ResiduatedView(algebra)
        for tau in _state_operator_pool(view, doc, algebra):
            report = si_state_bl_report(view, tau)
            assert report.consistent, (name, tau)
            checked += 1
    assert checked >= 30
    _verdict(7, f"{checked} state algebras: conditions hold iff a monolith exists")


def test_acceptance_8_trichotomy(docs, bl_docs):
    two = make_chain(lukasiewicz_spec(1)).rename("2")
    l2 = make_chain(lukasiewicz_spec(2)).rename("L2")
    g3 = make_chain(goedel_spec(2)).rename("G3")

    # the two diagonal operators on a square are isomorphic via the swap
    for base in (two, l2, g3):
        assert build_diagonal_pair(base).swap_is_isomorphism

    # product-with-graph instances classify as case iii exactly when SI
    injective = build_tau_h(two, l2, verified_morphism(two, l2, (0, 2)))
    assert injective.is_si and injective.expected_si
    trich = classify_trichotomy(injective.sma)
    assert trich.case_tag == "iii" and trich.witnesses["h"].is_injective()
    collapsing = build_tau_h(g3, g3, verified_morphism(g3, g3, (0, 2, 2)))
    assert not collapsing.is_si and not collapsing.expected_si
    assert classify_trichotomy(collapsing.sma).case_tag == "not-SI"

    # radical-square instance lands in case ii
    radical = build_radical_square(g3)
    assert classify_trichotomy(radical.sma).case_tag == "ii"

    # every irreducible expansion in the corpus gets exactly one tag
    tagged = 0
    for name in sorted(bl_docs):
        doc = bl_docs[name]
        sma = doc.to_state_morphism()
        if sma is None or sma.size > 12:
            continue
        result = classify_trichotomy(sma)
        if monolith(sma.expansion) is None:
            assert result.case_tag == "not-SI", name
        else:
            assert result.case_tag in ("i", "ii", "iii"), name
            tagged += 1
    assert tagged >= 4
    _verdict(8, f"trichotomy checks and {tagged} corpus classifications")


def test_acceptance_9_cep(bl_docs):
    start = time.monotonic()
    from smalg.congruence import cep_extension

    extensions = 0
    for name in sorted(bl_docs):
        doc = bl_docs[name]
        algebra = doc.to_algebra()
        n = algebra.size
        if n > 8:
            continue
        subuniverses = {
            subuniverse_generated(algebra, [x for x in range(n) if bits[x]])
            for bits in product((0, 1), repeat=n)
        }
        for elems in sorted(subuniverses):
            sub, incl = induced_subalgebra(algebra, elems)
            for theta in congruence_lattice(sub):
                phi = cep_extension(algebra, incl, theta)
                assert phi is not None, (name, elems, theta.block_id)
                assert phi.restrict(elems) == theta, (name, elems)
                extensions += 1
        if doc.tau is None:
            continue
        sma = doc.to_state_morphism()
        tau_subs = {
            subuniverse_generated(sma.expansion, [x for x in range(n) if bits[x]])
            for bits in product((0, 1), repeat=n)
        }
        for elems in sorted(tau_subs):
            sub_exp, _ = induced_subalgebra(sma.expansion, elems)
            for theta in congruence_lattice(sub_exp):
                pairs = [(elems[x], elems[y]) for x, y in theta.pairs()]
                base_gen = generated_congruence(algebra, pairs)
                assert base_gen == generated_congruence(sma.expansion, pairs)
                assert is_congruence(sma.expansion, base_gen)
    elapsed = time.monotonic() - start
    assert elapsed < 300.0
    assert extensions >= 100
    _verdict(9, f"{extensions} congruence extensions, zero failures", elapsed)


def test_acceptance_10_boolean_generator():
    start = time.monotonic()
    result = run_generator_check(variables=3, depth=3, max_size=8)
    assert result.ok, result.discrepancies[:3]
    assert result.algebra_count == 16      # diagonal square + 15 expansions
    assert result.function_count == result.reference_count
    elapsed = time.monotonic() - start
    _verdict(
        10,
        f"{result.function_count} depth-3 term functions, zero separating identities",
        elapsed,
    )


def test_acceptance_11_fault_injection(tmp_path):
    rng = random.Random(11)
    source = bundled_corpus_dir()
    docs = load_corpus(source)
    bl_names = [n for n, d in docs.items()
                if d.alg_class in ("BL", "MV") and d.size >= 2]
    caps = VerifyCaps(generator_depth=0)
    detected = 0
    for trial in range(10):
        work = tmp_path / f"trial{trial}"
        work.mkdir()
        for name in docs:
            shutil.copy(Path(source) / f"{name}.alg", work)
        victim = rng.choice(bl_names)
        doc = docs[victim]
        sym_index = rng.randrange(len(doc.signature.symbols))
        sym, arity = doc.signature.symbols[sym_index]
        table = list(doc.tables[sym_index])
        pos = rng.randrange(len(table))
        old = table[pos]
        table[pos] = rng.choice([v for v in range(doc.size) if v != old]) \
            if doc.size > 1 else old
        if table[pos] == old:
            continue
        from dataclasses import replace
        from smalg.fileformat import render_algebra

        tables = list(doc.tables)
        tables[sym_index] = tuple(table)
        mutated = replace(doc, tables=tuple(tables))
        (work / f"{victim}.alg").write_text(render_algebra(mutated), encoding="utf-8")
        report = run_verify_suite(work, caps)
        bad = [r for r in report.failures if r.instance == victim]
        assert bad, (victim, sym, pos)
        assert any(r.detail for r in bad), "failures must carry a witness"
        detected += 1
    assert detected == 10
    _verdict(11, "10 random single-entry mutations, all detected with witnesses")


def test_acceptance_suite_green_at_default_caps():
    start = time.monotonic()
    report = run_verify_suite(bundled_corpus_dir(), VerifyCaps())
    assert report.ok, report.failures[:5]
    elapsed = time.monotonic() - start
    _verdict(0, f"verification suite green at default caps "
                f"({len(report.results)} checks)", elapsed)
