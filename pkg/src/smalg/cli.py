"""Command-line interface.

Exit codes: 0 success/pass, 1 check failed, 2 input error, 3 cap exceeded.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .congruence import (
    DEFAULT_CEP_CAP,
    DEFAULT_LATTICE_CAP,
    congruence_lattice,
    cep_extension,
    malcev_witness,
    monolith,
)
from .core import (
    CapExceeded,
    WorkbenchError,
    enumerate_morphisms,
    induced_subalgebra,
    subuniverse_generated,
    MODE_IDEMPOTENT,
)
from .corpus import bundled_corpus_dir
from .fileformat import (
    ParseError,
    document_from_algebra,
    parse_algebra_file,
    render_algebra,
    write_algebra_file,
)
from .residuated import (
    ResiduatedView,
    check_axioms,
    check_state_operator,
    classify_trichotomy,
    filters as enumerate_filters,
    structure_probes,
)
from .state_morphism import (
    StateMorphismAlgebra,
    subdiagonal_embedding,
    verify_state_morphism,
)
from .tnorm import (
    goedel_spec,
    grid_labels,
    lukasiewicz_spec,
    make_chain,
    ordinal_sum_spec,
    spec_label,
)
from .verify import VerifyCaps, render_report, run_verify_suite, save_figures

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_CAP_EXCEEDED = 3


class Output:
    def __init__(self, fmt: str):
        self.machine = fmt == "machine"

    def line(self, *tokens):
        print(" ".join(str(t) for t in tokens))

    def kv(self, key, value=""):
        if self.machine:
            print(f"{key} {value}".rstrip())
        else:
            print(f"{key}: {value}" if value != "" else key)


def _load(path):
    doc = parse_algebra_file(path)
    return doc, doc.to_algebra()


def _blocks_str(cong):
    return "|".join(",".join(map(str, blk)) for blk in cong.blocks())


def cmd_check(args, out: Output) -> int:
    failed = False
    for path in args.files:
        doc, algebra = _load(path)
        name = doc.name
        cls = args.cls or doc.alg_class
        if cls and cls != "generic":
            verdict = check_axioms(algebra, cls)
            status = "pass" if verdict.ok else f"fail {verdict.axiom} at {verdict.witness}"
            out.line("axioms", name, cls, status)
            failed |= not verdict.ok
        if doc.tau is not None:
            verdict = verify_state_morphism(algebra, doc.tau)
            status = "pass" if verdict.ok else f"fail {verdict.kind} at {verdict.witness}"
            out.line("state-morphism", name, status)
            failed |= not verdict.ok
            if cls in ("BL", "MV") and verdict.ok:
                so = check_state_operator(ResiduatedView(algebra), doc.tau)
                status = "pass" if so.ok else f"fail {so.first_violation[0]} at {so.first_violation[1]}"
                out.line("state-operator", name, status)
                failed |= not so.ok
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_conlat(args, out: Output) -> int:
    doc, algebra = _load(args.file)
    if doc.tau is not None:
        algebra = StateMorphismAlgebra(algebra, doc.tau, doc.name).expansion
    lattice = congruence_lattice(algebra, args.cap_lattice)
    for i, cong in enumerate(lattice):
        out.line("congruence", i, f"blocks={cong.block_count()}", _blocks_str(cong))
    for i, lower in enumerate(lattice):
        for j, upper in enumerate(lattice):
            if i == j or not lower.refines(upper):
                continue
            if any(
                k not in (i, j)
                and lower.refines(lattice[k]) and lattice[k].refines(upper)
                for k in range(len(lattice))
            ):
                continue
            out.line("covers", i, j)
    if args.witnesses and len(lattice) > 1:
        sample = next(c for c in lattice if not c.is_identity())
        pair = sample.pairs()[0]
        wit = malcev_witness(algebra, sample.pairs(), pair)
        out.line("witness", f"{pair[0]}~{pair[1]}", f"steps={len(wit.steps)}")
    return EXIT_OK


def cmd_si(args, out: Output) -> int:
    doc, algebra = _load(args.file)
    mono = monolith(algebra, args.cap_lattice)
    out.line("base-si", doc.name, "yes" if mono else "no",
             _blocks_str(mono) if mono else "")
    exit_code = EXIT_OK
    if doc.tau is not None:
        sma = StateMorphismAlgebra(algebra, doc.tau, doc.name)
        mono_t = monolith(sma.expansion, args.cap_lattice)
        out.line("expansion-si", doc.name, "yes" if mono_t else "no",
                 _blocks_str(mono_t) if mono_t else "")
        if args.witnesses and mono_t is not None:
            pair = mono_t.pairs()[0]
            wit = malcev_witness(sma.expansion, mono_t.pairs(), pair)
            replay = "replays" if wit.replay(sma.expansion) else "broken"
            out.line("witness", f"{pair[0]}~{pair[1]}", f"steps={len(wit.steps)}", replay)
    return exit_code


def cmd_embed_diagonal(args, out: Output) -> int:
    doc, algebra = _load(args.file)
    if doc.tau is None:
        raise WorkbenchError("embed-diagonal needs an instance with a tau row")
    sma = StateMorphismAlgebra(algebra, doc.tau, doc.name)
    cert = subdiagonal_embedding(sma, args.cap_lattice)
    out.line("target-size", cert.target.size)
    out.line("theta-star", _blocks_str(cert.theta_star))
    out.line("embedding", " ".join(map(str, cert.embedding.map)))
    for field in ("injective", "homomorphic", "tau_commuting", "target_si"):
        out.line(field.replace("_", "-"), "yes" if getattr(cert, field) else "no")
    if args.out:
        target_doc = document_from_algebra(
            cert.target, name=f"{doc.name}_target",
            note=f"subdiagonal target for {doc.name}",
        )
        path = Path(args.out)
        write_algebra_file(path, target_doc)
        out.line("written", path)
    return EXIT_OK if cert.all_ok() else EXIT_CHECK_FAILED


def cmd_classify_bl(args, out: Output) -> int:
    doc, algebra = _load(args.file)
    if doc.tau is None:
        raise WorkbenchError("classify-bl needs an instance with a tau row")
    verdict = check_axioms(algebra, "BL")
    if not verdict.ok:
        raise WorkbenchError(f"instance is not a BL-algebra: {verdict.axiom}")
    sma = StateMorphismAlgebra(algebra, doc.tau, doc.name)
    result = classify_trichotomy(sma, args.cap_lattice)
    out.line("case", result.case_tag)
    if result.case_tag == "iii":
        out.line("factor-a-size", result.witnesses["A"].size)
        out.line("factor-b-size", result.witnesses["B"].size)
        out.line("h", " ".join(map(str, result.witnesses["h"].map)))
        out.line("boolean-element", result.witnesses["boolean"])
    elif result.case_tag == "ii":
        for key in ("local", "disjunction", "kernel_si_or_trivial"):
            out.line(key.replace("_", "-"), "yes" if result.witnesses[key] else "no")
    return EXIT_OK


def cmd_filters(args, out: Output) -> int:
    doc, algebra = _load(args.file)
    view = ResiduatedView(algebra)
    mode = args.mode
    tau = doc.tau if mode == "tau-filters" else None
    if mode == "tau-filters" and tau is None:
        raise WorkbenchError("tau-filters mode needs an instance with a tau row")
    for f in enumerate_filters(view, mode, tau=tau):
        out.line("filter", ",".join(map(str, f.members)))
    probes = structure_probes(view)
    out.line("rad1", ",".join(map(str, probes.rad1.members)))
    out.line("local", "yes" if probes.is_local else "no")
    out.line("boolean-elements", ",".join(map(str, probes.boolean_elements)))
    out.line("mv-skeleton", ",".join(map(str, probes.mv_skeleton)))
    return EXIT_OK


def cmd_gen_chain(args, out: Output) -> int:
    if args.kind == "ordinal-sum":
        if not args.components:
            raise WorkbenchError("ordinal-sum needs --components kind:n,kind:n,...")
        comps = []
        for token in args.components.split(","):
            kind, _, npts = token.partition(":")
            kind = kind.strip()
            if kind == "lukasiewicz":
                comps.append(lukasiewicz_spec(int(npts)))
            elif kind == "goedel":
                comps.append(goedel_spec(int(npts)))
            else:
                raise WorkbenchError(f"unknown component kind {kind!r}")
        spec = ordinal_sum_spec(comps)
    elif args.kind == "lukasiewicz":
        spec = lukasiewicz_spec(args.n)
    elif args.kind == "goedel":
        spec = goedel_spec(args.n)
    else:
        raise WorkbenchError(f"unknown chain kind {args.kind!r}")
    algebra = make_chain(spec)
    cls = "MV" if spec.kind == "lukasiewicz" else "BL"
    doc = document_from_algebra(
        algebra, element_names=grid_labels(spec.points), alg_class=cls,
        name=args.name or spec_label(spec),
    )
    if args.out:
        write_algebra_file(Path(args.out), doc)
        out.line("written", args.out)
    else:
        sys.stdout.write(render_algebra(doc))
    return EXIT_OK


def cmd_endos(args, out: Output) -> int:
    doc, algebra = _load(args.file)
    endos = enumerate_morphisms(algebra, algebra, MODE_IDEMPOTENT)
    for e in endos:
        out.line("idempotent-endomorphism", " ".join(map(str, e.map)))
    out.line("count", len(endos))
    return EXIT_OK


def cmd_cep(args, out: Output) -> int:
    doc, algebra = _load(args.file)
    seed = [int(t) for t in args.subset.split(",")] if args.subset else []
    elems = subuniverse_generated(algebra, seed)
    sub, incl = induced_subalgebra(algebra, elems)
    out.line("subalgebra", ",".join(map(str, elems)))
    failed = False
    for theta in congruence_lattice(sub, args.cap_lattice):
        phi = cep_extension(algebra, incl, theta, args.cap_search)
        if phi is None:
            out.line("extension", _blocks_str(theta), "absent")
            failed = True
            continue
        out.line("extension", _blocks_str(theta), "->", _blocks_str(phi))
        if args.witnesses:
            pairs = [(elems[x], elems[y]) for x, y in theta.pairs()]
            if pairs:
                wit = malcev_witness(algebra, pairs, pairs[0])
                out.line("witness", f"{pairs[0][0]}~{pairs[0][1]}",
                         f"steps={len(wit.steps)}")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_verify(args, out: Output) -> int:
    corpus = Path(args.corpus) if args.corpus else bundled_corpus_dir()
    caps = VerifyCaps(
        lattice=args.cap_lattice,
        cep=args.cap_search,
        generator_depth=args.gen_depth,
    )
    report = run_verify_suite(corpus, caps, jobs=args.jobs)
    text = render_report(report, "machine" if out.machine else "text",
                         show_witnesses=args.witnesses)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    sys.stdout.write(text)
    if args.figures:
        for path in save_figures(report, args.figures):
            print(f"figure {path}" if out.machine else f"wrote figure {path}")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smalg",
        description="finite-model workbench for state-morphism algebras",
    )
    parser.add_argument("--cap-lattice", type=int, default=DEFAULT_LATTICE_CAP,
                        help="congruence lattice size cap")
    parser.add_argument("--cap-search", type=int, default=DEFAULT_CEP_CAP,
                        help="CEP search size cap")
    parser.add_argument("--witnesses", action="store_true",
                        help="include witness chains and details in output")
    parser.add_argument("--jobs", type=int, default=1,
                        help="parallel workers for per-instance suite execution")
    parser.add_argument("--format", choices=("text", "machine"), default="text",
                        help="report format")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="axiom / state-morphism / state-operator checks")
    p.add_argument("files", nargs="+")
    p.add_argument("--class", dest="cls", default=None,
                   choices=("BL", "MV", "MTL", "naBL", "hoop"))
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("conlat", help="congruence lattice and covering relation")
    p.add_argument("file")
    p.set_defaults(fn=cmd_conlat)

    p = sub.add_parser("si", help="subdirect irreducibility and monolith")
    p.add_argument("file")
    p.set_defaults(fn=cmd_si)

    p = sub.add_parser("embed-diagonal", help="subdiagonal embedding certificate")
    p.add_argument("file")
    p.add_argument("--out", default=None, help="write the target algebra file here")
    p.set_defaults(fn=cmd_embed_diagonal)

    p = sub.add_parser("classify-bl", help="irreducible-expansion trichotomy")
    p.add_argument("file")
    p.set_defaults(fn=cmd_classify_bl)

    p = sub.add_parser("filters", help="filters, radical, locality, Boolean elements")
    p.add_argument("file")
    p.add_argument("--mode", choices=("all", "maximal", "tau-filters"), default="all")
    p.set_defaults(fn=cmd_filters)

    p = sub.add_parser("gen-chain", help="generate a residuated chain file")
    p.add_argument("--kind", required=True,
                   choices=("lukasiewicz", "goedel", "ordinal-sum"))
    p.add_argument("--n", type=int, default=2, help="segment count for primitive kinds")
    p.add_argument("--components", default=None,
                   help="ordinal-sum components, e.g. goedel:2,lukasiewicz:2")
    p.add_argument("--name", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_gen_chain)

    p = sub.add_parser("endos", help="idempotent endomorphism enumeration")
    p.add_argument("file")
    p.set_defaults(fn=cmd_endos)

    p = sub.add_parser("cep", help="congruence extensions from a generated subalgebra")
    p.add_argument("file")
    p.add_argument("--subset", default="", help="comma-separated generator elements")
    p.set_defaults(fn=cmd_cep)

    p = sub.add_parser("verify", help="run the verification suite on a corpus")
    p.add_argument("corpus", nargs="?", default=None,
                   help="corpus directory (default: bundled)")
    p.add_argument("--out", default=None, help="also write the report to this file")
    p.add_argument("--figures", default=None,
                   help="directory for summary figures")
    p.add_argument("--gen-depth", type=int, default=3,
                   help="generator comparison depth (0 disables)")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format)
    try:
        return args.fn(args, out)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except CapExceeded as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except (WorkbenchError, FileNotFoundError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
