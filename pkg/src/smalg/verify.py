"""One-shot verification suite over an instance corpus.

Each named check replays one of the structural facts the package is built
around (congruence/filter correspondences, kernel-lift laws, diagonal
embeddings, irreducibility transfer, the trichotomy classifier, CEP, and
the Boolean generator comparison) on every applicable corpus instance.
Reports are deterministic and byte-stable for fixed inputs and caps.
"""
from __future__ import annotations

import random
import zlib
from dataclasses import dataclass
from itertools import combinations, product
from pathlib import Path

from .congruence import (
    Congruence,
    cep_extension,
    congruence_lattice,
    generated_congruence,
    is_congruence,
    iter_partitions,
    malcev_witness,
    monolith,
)
from .core import (
    WorkbenchError,
    direct_product,
    enumerate_morphisms,
    find_isomorphism,
    induced_subalgebra,
    quotient,
    subuniverse_generated,
    MODE_IDEMPOTENT,
)
from .corpus import load_corpus
from .fileformat import AlgebraDocument
from .residuated import (
    ResiduatedView,
    build_diagonal_pair,
    check_axioms,
    check_state_operator,
    classify_trichotomy,
    congruence_of_filter,
    filter_of_congruence,
    filters,
    mv_skeleton_algebra,
    si_state_bl_report,
    structure_probes,
)
from .state_morphism import (
    StateMorphismAlgebra,
    con_sma,
    diagonal,
    lift_congruence,
    subdiagonal_embedding,
    theta_tau,
    verify_state_morphism,
)


@dataclass(frozen=True)
class VerifyCaps:
    """Size bounds and knobs for the suite; defaults match the library caps."""

    lattice: int = 12
    cep: int = 10
    suite_size: int = 6          # expansion-pool suites (kernel lifts, embeddings)
    bl_size: int = 8             # residuated suites (irreducibility report, CEP)
    oracle_size: int = 6         # all-partitions congruence oracle
    state_op_enum: int = 5       # exhaustive internal-state map enumeration
    diag_si_size: int = 4        # diagonal-preserves-SI check on bases up to this size
    malcev_samples: int = 16     # chain-witness samples per instance
    generator_depth: int = 3     # Boolean generator comparison depth; 0 disables
    generator_max_size: int = 8


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    instance: str
    passed: bool
    detail: str = ""


def _result(check_id, instance, passed, detail=""):
    return CheckResult(check_id, instance, bool(passed), " ".join(str(detail).split()))


def _rng(name: str) -> random.Random:
    return random.Random(zlib.crc32(name.encode("utf-8")))


# ---------------------------------------------------------------------------
# Instance-level checks
# ---------------------------------------------------------------------------

def _residuated_classes():
    return ("BL", "MV", "MTL", "naBL")


def _axiom_checks(name, doc, algebra, out):
    """Declared-class axioms; returns False when downstream checks must stop."""
    if doc.alg_class in (None, "generic"):
        return True
    verdict = check_axioms(algebra, doc.alg_class)
    out.append(_result(
        "axioms-declared", name, verdict.ok,
        "" if verdict.ok else f"{verdict.axiom} at {verdict.witness}",
    ))
    if not verdict.ok:
        return False
    if doc.alg_class in _residuated_classes():
        try:
            ResiduatedView(algebra)
            out.append(_result("order-sanity", name, True))
        except WorkbenchError as err:
            out.append(_result("order-sanity", name, False, err))
            return False
    return True


def _congruence_oracle_checks(name, algebra, caps, out):
    n = algebra.size
    if n > caps.oracle_size:
        return
    compatible = [p for p in iter_partitions(n) if is_congruence(algebra, p)]
    lattice = congruence_lattice(algebra, caps.lattice)
    out.append(_result(
        "congruence-oracle", name,
        set(compatible) == set(lattice),
        f"lattice {len(lattice)} vs oracle {len(compatible)}",
    ))
    ok = True
    witness = ""
    for a in range(n):
        for b in range(a + 1, n):
            least = None
            for p in compatible:
                if p.relates(a, b) and (least is None or p.refines(least)):
                    least = p
            # the oracle least is the meet of all compatible partitions above (a,b)
            meet = None
            for p in compatible:
                if p.relates(a, b):
                    meet = p if meet is None else meet.meet(p)
            if generated_congruence(algebra, [(a, b)]) != meet:
                ok = False
                witness = f"principal ({a},{b})"
                break
        if not ok:
            break
    out.append(_result("principal-oracle", name, ok, witness))


def _lattice_law_checks(name, algebra, caps, out):
    if algebra.size > caps.lattice:
        return
    lattice = congruence_lattice(algebra, caps.lattice)
    delta = Congruence.identity(algebra.size)
    ok = all(x.join(delta) == x for x in lattice)
    ok = ok and all(x.join(x) == x for x in lattice)
    ok = ok and all(x.join(y) == y.join(x) for x in lattice for y in lattice)
    ok = ok and all(
        x.join(y.join(z)) == x.join(y).join(z)
        for x in lattice for y in lattice for z in lattice
    )
    out.append(_result("lattice-join-laws", name, ok))

    mono = monolith(algebra, caps.lattice)
    proper = [c for c in lattice if not c.is_identity()]
    if mono is None:
        atoms = [c for c in proper if not any(
            d != c and d.refines(c) for d in proper
        )]
        ok = len(atoms) != 1 or algebra.size == 1
    else:
        ok = all(mono.refines(c) for c in proper) and bool(proper)
    out.append(_result("monolith-atom", name, ok))


def _malcev_checks(name, algebra, caps, out):
    if algebra.size < 2 or algebra.size > caps.lattice:
        return
    rng = _rng(name)
    n = algebra.size
    replayed = 0
    ok = True
    witness = ""
    for _ in range(caps.malcev_samples):
        k = rng.choice((1, 1, 2))
        pairs = [
            (rng.randrange(n), rng.randrange(n)) for _ in range(k)
        ]
        cong = generated_congruence(algebra, pairs)
        related = [
            (a, b) for a in range(n) for b in range(n) if cong.relates(a, b)
        ]
        target = rng.choice(related)
        wit = malcev_witness(algebra, pairs, target)
        replayed += 1
        if not wit.replay(algebra):
            ok = False
            witness = f"pairs {pairs} target {target}"
            break
        symmetric = set(pairs) | {(b, a) for a, b in pairs}
        if any(step.generator_pair not in symmetric for step in wit.steps):
            ok = False
            witness = f"foreign generator pair for {pairs} -> {target}"
            break
    out.append(_result("malcev-replay", name, ok, witness or f"{replayed} samples"))


def _subuniverse_minimality_check(name, algebra, caps, out):
    if algebra.size > caps.oracle_size:
        return
    rng = _rng(name + "#sub")
    ok = True
    witness = ""
    seeds = [set(), {rng.randrange(algebra.size)}, {rng.randrange(algebra.size)}]
    for seed in seeds:
        closure = set(subuniverse_generated(algebra, seed))
        for e in sorted(closure - seed):
            trimmed = closure - {e}
            closed = set(subuniverse_generated(algebra, trimmed)) <= trimmed if trimmed else False
            constants_ok = all(
                algebra.table(sym)[0] in trimmed
                for sym, arity in algebra.signature.symbols if arity == 0
            )
            if closed and constants_ok:
                ok = False
                witness = f"seed {sorted(seed)} drop {e}"
                break
        if not ok:
            break
    out.append(_result("subuniverse-minimal", name, ok, witness))


def _product_quotient_check(name, algebra, caps, out):
    if algebra.size > caps.bl_size:
        return
    square, (p1, _) = direct_product(algebra, algebra)
    kernel = Congruence.from_labels(p1.map)
    factor, _ = quotient(square, kernel)
    iso = find_isomorphism(factor, algebra)
    out.append(_result("product-quotient-iso", name, iso is not None))


def _expansion_pool(doc, algebra, caps):
    """State-morphism expansions attached to an instance."""
    pool = []
    if doc.tau is not None and algebra.size <= caps.lattice:
        pool.append(("file-tau", StateMorphismAlgebra(algebra, doc.tau, doc.name)))
    if algebra.size <= caps.suite_size:
        for endo in enumerate_morphisms(algebra, algebra, MODE_IDEMPOTENT):
            if doc.tau is not None and endo.map == tuple(doc.tau):
                continue
            pool.append((f"endo-{''.join(map(str, endo.map))}",
                         StateMorphismAlgebra(algebra, endo.map)))
    return pool


def _kernel_lift_checks(name, doc, algebra, caps, out):
    pool = _expansion_pool(doc, algebra, caps)
    if not pool:
        return
    lift_ok, lift_wit = True, ""
    contain_ok, contain_wit = True, ""
    gen_ok, gen_wit = True, ""
    remark_ok, remark_wit = True, ""
    for tag, sma in pool:
        if not verify_state_morphism(algebra, sma.tau).ok:
            lift_ok, lift_wit = False, f"{tag} invalid"
            break
        image = sma.image()
        image_alg, _ = sma.image_subalgebra()
        theta_t = theta_tau(sma)
        image_con = congruence_lattice(image_alg, caps.lattice)
        for phi in image_con:
            lifted = lift_congruence(sma, phi)
            if not is_congruence(sma.expansion, lifted):
                lift_ok, lift_wit = False, f"{tag} lift not compatible"
            if lifted.restrict(image) != phi:
                lift_ok, lift_wit = False, f"{tag} lift does not restrict to phi"
            base_pairs = [
                (image[x], image[y]) for x, y in phi.pairs()
            ]
            if any(not lifted.relates(a, b) for a, b in base_pairs):
                contain_ok, contain_wit = False, f"{tag} phi not below lift"
            gen_exp = generated_congruence(sma.expansion, base_pairs)
            if not gen_exp.refines(lifted):
                contain_ok, contain_wit = False, f"{tag} generated above lift"
            if generated_congruence(algebra, base_pairs) != gen_exp:
                gen_ok, gen_wit = False, f"{tag} base/expansion generation differ"
        if lift_congruence(sma, Congruence.identity(len(image))) != theta_t:
            lift_ok, lift_wit = False, f"{tag} identity lift is not the tau kernel"
        # base congruences below the kernel stay compatible with tau
        for theta in congruence_lattice(algebra, caps.lattice):
            if theta.refines(theta_t) and not is_congruence(sma.expansion, theta):
                contain_ok, contain_wit = False, f"{tag} sub-kernel congruence broken"
        for x, y in theta_t.pairs():
            if generated_congruence(algebra, [(x, y)]) != generated_congruence(
                sma.expansion, [(x, y)]
            ):
                gen_ok, gen_wit = False, f"{tag} kernel pair ({x},{y})"
                break
        for x, y in combinations(image, 2):
            if generated_congruence(algebra, [(x, y)]) != generated_congruence(
                sma.expansion, [(x, y)]
            ):
                gen_ok, gen_wit = False, f"{tag} image pair ({x},{y})"
                break
        identity_lift = lift_congruence(sma, Congruence.identity(len(image)))
        faithful = sma.is_faithful()
        if (identity_lift.is_identity()) != faithful:
            remark_ok, remark_wit = False, tag
    out.append(_result("kernel-lift", name, lift_ok, lift_wit))
    out.append(_result("kernel-lift-bounds", name, contain_ok, contain_wit))
    out.append(_result("image-generation", name, gen_ok, gen_wit))
    out.append(_result("faithful-iff-trivial-kernel", name, remark_ok, remark_wit))


def _subdiagonal_checks(name, doc, algebra, caps, out):
    pool = _expansion_pool(doc, algebra, caps)
    if not pool:
        return
    emb_ok, emb_wit = True, ""
    any_si = False
    for tag, sma in pool:
        if sma.size > caps.lattice:
            continue
        if monolith(sma.expansion, caps.lattice) is None:
            continue
        any_si = True
        cert = subdiagonal_embedding(sma, caps.lattice)
        if not cert.all_ok():
            emb_ok = False
            emb_wit = (
                f"{tag} inj={cert.injective} hom={cert.homomorphic} "
                f"tau={cert.tau_commuting} target-si={cert.target_si}"
            )
            break
    if any_si or not emb_ok:
        out.append(_result("subdiagonal-embedding", name, emb_ok, emb_wit))

    if algebra.size <= caps.suite_size and monolith(algebra, caps.lattice) is not None:
        ok, wit = True, ""
        for endo in enumerate_morphisms(algebra, algebra, MODE_IDEMPOTENT):
            sma = StateMorphismAlgebra(algebra, endo.map)
            if monolith(sma.expansion, caps.lattice) is None:
                ok, wit = False, f"endo {endo.map}"
                break
        out.append(_result("si-transfer", name, ok, wit))


def _state_operator_pool(view, doc, algebra, caps):
    """Internal-state maps to test: the file's, idempotent endos, enumerated."""
    pool = {}
    if doc.tau is not None:
        pool[tuple(doc.tau)] = "file-tau"
    if algebra.size <= caps.suite_size:
        for endo in enumerate_morphisms(algebra, algebra, MODE_IDEMPOTENT):
            pool.setdefault(endo.map, "endo")
    if algebra.size <= caps.state_op_enum:
        n = algebra.size
        for candidate in product(range(n), repeat=n):
            if check_state_operator(view, candidate).ok:
                pool.setdefault(candidate, "enumerated")
    return pool


def _residuated_checks(name, doc, algebra, caps, out):
    if doc.alg_class not in ("BL", "MV", "MTL"):
        return
    view = ResiduatedView(algebra)
    n = algebra.size

    if n <= caps.lattice:
        all_filters = filters(view)
        lattice = congruence_lattice(algebra, caps.lattice)
        out.append(_result(
            "filter-congruence-bijection", name,
            len(all_filters) == len(lattice),
            f"{len(all_filters)} filters vs {len(lattice)} congruences",
        ))
        ok, wit = True, ""
        for f in all_filters:
            cong = congruence_of_filter(view, f)
            if filter_of_congruence(view, cong) != f:
                ok, wit = False, f"filter {f.members}"
                break
        for cong in lattice:
            f = filter_of_congruence(view, cong)
            if congruence_of_filter(view, f) != cong:
                ok, wit = False, f"congruence {cong.block_id}"
                break
        out.append(_result("filter-roundtrip", name, ok, wit))

    if doc.alg_class in ("BL", "MV"):
        probes = structure_probes(view)
        out.append(_result(
            "boolean-complement-closed", name, probes.boolean_complement_closed
        ))
        skeleton = mv_skeleton_algebra(view)
        verdict = check_axioms(skeleton, "MV")
        out.append(_result(
            "mv-skeleton", name, verdict.ok,
            "" if verdict.ok else f"{verdict.axiom} at {verdict.witness}",
        ))

    if doc.alg_class in ("BL", "MV") and n <= caps.bl_size:
        _state_bl_checks(name, doc, view, algebra, caps, out)
        _cep_checks(name, doc, view, algebra, caps, out)


def _state_bl_checks(name, doc, view, algebra, caps, out):
    pool = _state_operator_pool(view, doc, algebra, caps)
    if not pool:
        return
    bic_ok, bic_wit = True, ""
    lin_ok, lin_wit = True, ""
    for tau in sorted(pool):
        report = si_state_bl_report(view, tau, caps.lattice)
        if not report.consistent:
            bic_ok = False
            bic_wit = (f"tau {tau}: conditions {report.conditions_hold} "
                       f"but si {report.is_si}")
            break
        if report.is_si:
            if not view.linear_subset(report.image):
                lin_ok, lin_wit = False, f"tau {tau} image not a chain"
            if not view.linear_subset(report.kernel.members):
                lin_ok, lin_wit = False, f"tau {tau} kernel not a chain"
    out.append(_result("si-conditions-biconditional", name, bic_ok, bic_wit))
    out.append(_result("si-image-kernel-linear", name, lin_ok, lin_wit))

    if doc.tau is not None and verify_state_morphism(algebra, doc.tau).ok:
        sma = StateMorphismAlgebra(algebra, doc.tau, doc.name)
        out.append(_result(
            "state-morphism-is-state-operator", name,
            check_state_operator(view, doc.tau).ok,
        ))
        tau_filters = filters(view, "tau-filters", tau=doc.tau)
        expansion_lattice = con_sma(sma, caps.lattice)
        out.append(_result(
            "tau-filter-congruence-bijection", name,
            len(tau_filters) == len(expansion_lattice),
            f"{len(tau_filters)} tau-filters vs {len(expansion_lattice)} congruences",
        ))
        trich = classify_trichotomy(sma, caps.lattice)
        ok, wit = _trichotomy_consistent(trich, sma, caps)
        out.append(_result("trichotomy", name, ok, f"case {trich.case_tag} {wit}"))

    if algebra.size <= caps.diag_si_size:
        example = build_diagonal_pair(algebra)
        out.append(_result("diagonal-swap-iso", name, example.swap_is_isomorphism))


def _trichotomy_consistent(trich, sma, caps):
    if trich.case_tag == "not-SI":
        return monolith(sma.expansion, caps.lattice) is None, ""
    if trich.case_tag == "i":
        ok = trich.witnesses["linear"] and trich.witnesses["base_si"]
        return ok, "" if ok else "identity case side conditions"
    if trich.case_tag == "ii":
        keys = ("not_faithful", "no_nontrivial_booleans", "local",
                "kernel_si_or_trivial", "disjunction", "linear_iff_rad1_linear")
        bad = [k for k in keys if not trich.witnesses[k]]
        return not bad, ",".join(bad)
    if trich.case_tag == "iii":
        ok = trich.witnesses["tau_commutes"] and trich.witnesses["h_injective"]
        return ok, "" if ok else "product recovery"
    return False, f"unknown tag {trich.case_tag}"


def _cep_checks(name, doc, view, algebra, caps, out):
    n = algebra.size
    subuniverses = set()
    for bits in product((0, 1), repeat=n):
        seed = [x for x in range(n) if bits[x]]
        subuniverses.add(subuniverse_generated(algebra, seed))
    ok, wit = True, ""
    checked = 0
    for elems in sorted(subuniverses):
        sub, incl = induced_subalgebra(algebra, elems)
        for theta in congruence_lattice(sub, caps.lattice):
            phi = cep_extension(algebra, incl, theta, max(caps.cep, n))
            checked += 1
            if phi is None:
                ok, wit = False, f"subalgebra {elems} theta {theta.block_id}"
                break
            if phi.restrict(elems) != theta:
                ok, wit = False, f"bad restriction on {elems}"
                break
        if not ok:
            break
    out.append(_result("cep-extension", name, ok, wit or f"{checked} extensions"))

    if doc.tau is None or not verify_state_morphism(algebra, doc.tau).ok:
        return
    sma = StateMorphismAlgebra(algebra, doc.tau, doc.name)
    tau_subs = set()
    for bits in product((0, 1), repeat=n):
        seed = [x for x in range(n) if bits[x]]
        tau_subs.add(subuniverse_generated(sma.expansion, seed))
    ok, wit = True, ""
    for elems in sorted(tau_subs):
        sub_exp, incl = induced_subalgebra(sma.expansion, elems)
        for theta in congruence_lattice(sub_exp, caps.lattice):
            pairs = [(elems[x], elems[y]) for x, y in theta.pairs()]
            base_gen = generated_congruence(algebra, pairs)
            exp_gen = generated_congruence(sma.expansion, pairs)
            if base_gen != exp_gen or not is_congruence(sma.expansion, base_gen):
                ok, wit = False, f"tau-subalgebra {elems} theta {theta.block_id}"
                break
        if not ok:
            break
    out.append(_result("cep-tau-compatible", name, ok, wit))


def check_instance(path: str, caps: VerifyCaps) -> list[CheckResult]:
    """Run every applicable check on one corpus file."""
    from .fileformat import parse_algebra_file

    name = Path(path).stem
    out: list[CheckResult] = []
    try:
        doc = parse_algebra_file(path)
    except WorkbenchError as err:
        return [_result("parse", name, False, err)]
    out.append(_result("parse", name, True))
    algebra = doc.to_algebra()

    try:
        residuated_ok = _axiom_checks(name, doc, algebra, out)
    except WorkbenchError as err:
        out.append(_result("axioms-declared", name, False, err))
        residuated_ok = False

    if doc.tau is not None:
        verdict = verify_state_morphism(algebra, doc.tau)
        out.append(_result(
            "state-morphism-valid", name, verdict.ok,
            "" if verdict.ok else f"{verdict.kind} at {verdict.witness}",
        ))
        if not verdict.ok:
            return out

    try:
        _congruence_oracle_checks(name, algebra, caps, out)
        _lattice_law_checks(name, algebra, caps, out)
        _malcev_checks(name, algebra, caps, out)
        _subuniverse_minimality_check(name, algebra, caps, out)
        _product_quotient_check(name, algebra, caps, out)
        _kernel_lift_checks(name, doc, algebra, caps, out)
        _subdiagonal_checks(name, doc, algebra, caps, out)
        if residuated_ok:
            _residuated_checks(name, doc, algebra, caps, out)
    except WorkbenchError as err:
        out.append(_result("internal-error", name, False, err))
    return out


# ---------------------------------------------------------------------------
# Corpus-level checks and the suite driver
# ---------------------------------------------------------------------------

FAMILY = "(corpus)"


def _family_checks(docs: dict[str, AlgebraDocument], caps: VerifyCaps):
    out: list[CheckResult] = []
    # Scoped to residuated classes: with distributive congruence lattices the
    # square has no skew congruences, so the tau-kernel atom is the monolith.
    # Outside that scope the claim is false (the squared three-element cyclic
    # group carries an incomparable diagonal-subgroup congruence).
    ok, wit = True, ""
    for name in sorted(docs):
        if docs[name].alg_class not in _residuated_classes():
            continue
        algebra = docs[name].to_algebra()
        if algebra.size > caps.diag_si_size or algebra.size < 2:
            continue
        if monolith(algebra, caps.lattice) is None:
            continue
        diag = diagonal(algebra.rename(name))
        if monolith(diag.expansion, max(caps.lattice, algebra.size**2)) is None:
            ok, wit = False, name
            break
    out.append(_result("diagonal-preserves-si", FAMILY, ok, wit))

    if caps.generator_depth > 0:
        from .generator_check import run_generator_check

        result = run_generator_check(
            3, caps.generator_depth, caps.generator_max_size
        )
        detail = (
            f"{result.function_count} functions over {result.algebra_count} algebras"
            if result.ok
            else f"separating identity {result.discrepancies[0]}"
        )
        out.append(_result("boolean-generator", FAMILY, result.ok, detail))
    return out


@dataclass(frozen=True)
class VerifyReport:
    results: tuple[CheckResult, ...]
    instances: int

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self):
        return tuple(r for r in self.results if not r.passed)


def run_verify_suite(corpus_dir, caps: VerifyCaps = VerifyCaps(),
                     jobs: int = 1) -> VerifyReport:
    """Run all checks over every .alg file in a directory.

    Results are ordered by corpus filename (family checks last) regardless
    of completion order; jobs > 1 parallelizes per instance.
    """
    corpus_dir = Path(corpus_dir)
    docs = load_corpus(corpus_dir)
    paths = [str(corpus_dir / f"{name}.alg") for name in sorted(docs)]
    results: list[CheckResult] = []
    if jobs > 1 and len(paths) > 1:
        import multiprocessing as mp

        with mp.get_context("fork").Pool(jobs) as pool:
            chunks = pool.starmap(check_instance, [(p, caps) for p in paths])
        for chunk in chunks:
            results.extend(chunk)
    else:
        for path in paths:
            results.extend(check_instance(path, caps))
    results.extend(_family_checks(docs, caps))
    return VerifyReport(tuple(results), len(docs))


def render_report(report: VerifyReport, fmt: str = "text",
                  show_witnesses: bool = False) -> str:
    if fmt == "machine":
        lines = []
        for r in report.results:
            line = f"{r.check_id} {r.instance} {'pass' if r.passed else 'fail'}"
            if r.detail and (show_witnesses or not r.passed):
                line += f" {r.detail}"
            lines.append(line)
        return "\n".join(lines) + "\n"
    lines = []
    if report.instances == 0:
        lines.append("warning: 0 instances in corpus")
    current = None
    for r in report.results:
        if r.instance != current:
            current = r.instance
            lines.append(f"== {current}")
        status = "PASS" if r.passed else "FAIL"
        detail = f"  [{r.detail}]" if r.detail and (show_witnesses or not r.passed) else ""
        lines.append(f"  {status:<4} {r.check_id}{detail}")
    failures = report.failures
    lines.append(
        f"== summary: {len(report.results) - len(failures)}/{len(report.results)} "
        f"checks passed on {report.instances} instances"
    )
    for r in failures:
        lines.append(f"   FAIL {r.check_id} {r.instance} {r.detail}")
    return "\n".join(lines) + "\n"


def save_figures(report: VerifyReport, directory) -> list[Path]:
    """Render summary figures next to the delimited report output."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []

    by_check: dict[str, list[bool]] = {}
    for r in report.results:
        by_check.setdefault(r.check_id, []).append(r.passed)
    checks = sorted(by_check)
    passes = [sum(by_check[c]) for c in checks]
    fails = [len(by_check[c]) - sum(by_check[c]) for c in checks]
    fig, ax = plt.subplots(figsize=(8, max(3, 0.3 * len(checks))))
    ypos = range(len(checks))
    ax.barh(ypos, passes, color="#4a7", label="pass")
    ax.barh(ypos, fails, left=passes, color="#c55", label="fail")
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(checks, fontsize=7)
    ax.set_xlabel("instances checked")
    ax.set_title("verification suite results by check")
    ax.legend(loc="lower right")
    fig.tight_layout()
    path = directory / "suite_summary.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    by_instance: dict[str, list[bool]] = {}
    for r in report.results:
        by_instance.setdefault(r.instance, []).append(r.passed)
    names = sorted(by_instance)
    counts = [len(by_instance[i]) for i in names]
    failed = [len(by_instance[i]) - sum(by_instance[i]) for i in names]
    fig, ax = plt.subplots(figsize=(8, max(3, 0.25 * len(names))))
    ypos = range(len(names))
    ax.barh(ypos, counts, color="#79b")
    for y, (c, f) in enumerate(zip(counts, failed)):
        if f:
            ax.barh([y], [f], left=[c - f], color="#c55")
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names, fontsize=7)
    ax.set_xlabel("checks run (red: failed)")
    ax.set_title("verification coverage by instance")
    fig.tight_layout()
    path = directory / "instance_coverage.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)
    return written
