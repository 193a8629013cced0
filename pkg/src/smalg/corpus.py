"""The bundled instance corpus: construction and on-disk location.

Instances are generated programmatically and shipped as .alg files; the
builders here are the single source of truth, and a test pins the shipped
files to their output.
"""
from __future__ import annotations

from importlib import resources
from pathlib import Path

from .core import (
    Signature,
    WorkbenchError,
    direct_product,
    make_algebra,
    verified_morphism,
)
from .fileformat import AlgebraDocument, document_from_algebra, render_algebra
from .residuated import build_radical_square, build_tau_h
from .state_morphism import diagonal
from .tnorm import (
    goedel_spec,
    grid_labels,
    lukasiewicz_spec,
    make_chain,
    ordinal_sum_spec,
)


def _chain_doc(spec, name, alg_class) -> AlgebraDocument:
    algebra = make_chain(spec)
    return document_from_algebra(
        algebra.rename(name),
        element_names=grid_labels(spec.points),
        alg_class=alg_class,
        name=name,
    )


def _nm_chain_4() -> AlgebraDocument:
    """Nilpotent-minimum chain on 4 grid points: prelinear but not divisible."""
    from .tnorm import GroupoidTable, chain_algebra_from_mul

    n = 3
    mul = tuple(
        (min(x, y) if x + y > n else 0) for x in range(n + 1) for y in range(n + 1)
    )
    algebra = chain_algebra_from_mul(GroupoidTable(n + 1, mul), "nm_chain_4")
    return document_from_algebra(
        algebra, element_names=grid_labels(n + 1), alg_class="MTL", name="nm_chain_4"
    )


def _nabl_chain_4() -> AlgebraDocument:
    """A 4-point commutative monotone table that is divisible but not associative."""
    from .tnorm import GroupoidTable, chain_algebra_from_mul

    table = [
        0, 0, 0, 0,
        0, 0, 1, 1,
        0, 1, 1, 2,
        0, 1, 2, 3,
    ]
    algebra = chain_algebra_from_mul(GroupoidTable(4, tuple(table)), "nabl_chain_4")
    return document_from_algebra(
        algebra, element_names=grid_labels(4), alg_class="naBL", name="nabl_chain_4"
    )


def _boolean_square() -> AlgebraDocument:
    two = make_chain(lukasiewicz_spec(1))
    square, _ = direct_product(two, two)
    return document_from_algebra(
        square.rename("boolean_square"), alg_class="MV", name="boolean_square"
    )


def _d2() -> AlgebraDocument:
    two = make_chain(lukasiewicz_spec(1)).rename("luk_1")
    sma = diagonal(two)
    return document_from_algebra(
        sma.base.rename("d2"), tau=sma.tau, alg_class="MV", name="d2",
        note="square of the two-element chain with the diagonal state-morphism",
    )


def _d_l2() -> AlgebraDocument:
    l2 = make_chain(lukasiewicz_spec(2)).rename("luk_2")
    sma = diagonal(l2)
    return document_from_algebra(
        sma.base.rename("d_luk2"), tau=sma.tau, alg_class="MV", name="d_luk2",
        note="square of the three-element chain with the diagonal state-morphism",
    )


def _godel3_collapse() -> AlgebraDocument:
    """Three-element chain with the middle element sent to the top."""
    g3 = make_chain(goedel_spec(2)).rename("godel_2")
    return document_from_algebra(
        g3.rename("godel3_collapse"), tau=(0, 2, 2), alg_class="BL",
        name="godel3_collapse",
    )


def _luk2_identity() -> AlgebraDocument:
    l2 = make_chain(lukasiewicz_spec(2))
    return document_from_algebra(
        l2.rename("luk2_id"), element_names=grid_labels(3), tau=(0, 1, 2),
        alg_class="MV", name="luk2_id",
    )


def _tauh_2xl2() -> AlgebraDocument:
    """Product of the 2-chain and the 3-chain with tau (a, b) = (a, h(a)), h injective."""
    two = make_chain(lukasiewicz_spec(1)).rename("luk_1")
    l2 = make_chain(lukasiewicz_spec(2)).rename("luk_2")
    h = verified_morphism(two, l2, (0, 2))
    example = build_tau_h(two, l2, h)
    return document_from_algebra(
        example.sma.base.rename("tauh_2xl2"), tau=example.sma.tau,
        alg_class="MV", name="tauh_2xl2",
    )


def _radical_square_g3() -> AlgebraDocument:
    """Diagonal map on the radical-square subalgebra of the squared 3-chain."""
    g3 = make_chain(goedel_spec(2)).rename("godel_2")
    example = build_radical_square(g3)
    return document_from_algebra(
        example.sma.base.rename("radsq_godel3"), tau=example.sma.tau,
        alg_class="BL", name="radsq_godel3",
    )


def _meet_chain_3() -> AlgebraDocument:
    sig = Signature((("∧", 2),))
    table = tuple(min(x, y) for x in range(3) for y in range(3))
    algebra = make_algebra(sig, 3, {"∧": table}, "meet_chain_3")
    return document_from_algebra(algebra, alg_class="generic", name="meet_chain_3")


def _z3() -> AlgebraDocument:
    sig = Signature((("+", 2), ("-", 1), ("e", 0)))
    add = tuple((x + y) % 3 for x in range(3) for y in range(3))
    neg = tuple((-x) % 3 for x in range(3))
    algebra = make_algebra(sig, 3, {"+": add, "-": neg, "e": (0,)}, "z3_group")
    return document_from_algebra(algebra, alg_class="generic", name="z3_group")


def _one_element_bl() -> AlgebraDocument:
    tables = {"∧": (0,), "∨": (0,), "⊙": (0,), "→": (0,), "0": (0,), "1": (0,)}
    from .residuated import BL_SIGNATURE

    algebra = make_algebra(BL_SIGNATURE, 1, tables, "trivial_bl")
    return document_from_algebra(algebra, alg_class="BL", name="trivial_bl")


def build_corpus() -> dict[str, AlgebraDocument]:
    docs: dict[str, AlgebraDocument] = {}

    for n in range(1, 7):
        name = f"luk_chain_{n}"
        docs[name] = _chain_doc(lukasiewicz_spec(n), name, "MV")
    for n in range(2, 7):
        name = f"godel_chain_{n}"
        docs[name] = _chain_doc(goedel_spec(n), name, "BL")

    sums = {
        "os_g2_l2": ordinal_sum_spec([goedel_spec(2), lukasiewicz_spec(2)]),
        "os_l2_g2": ordinal_sum_spec([lukasiewicz_spec(2), goedel_spec(2)]),
        "os_l1_g1_l2": ordinal_sum_spec(
            [lukasiewicz_spec(1), goedel_spec(1), lukasiewicz_spec(2)]
        ),
    }
    for name, spec in sums.items():
        docs[name] = _chain_doc(spec, name, "BL")

    for builder in (
        _boolean_square,
        _d2,
        _d_l2,
        _godel3_collapse,
        _luk2_identity,
        _tauh_2xl2,
        _radical_square_g3,
        _nm_chain_4,
        _nabl_chain_4,
        _meet_chain_3,
        _z3,
        _one_element_bl,
    ):
        doc = builder()
        docs[doc.name] = doc

    return docs


def bundled_corpus_dir() -> Path:
    path = resources.files("smalg") / "data" / "corpus"
    return Path(str(path))


def write_corpus(directory) -> list[Path]:
    """Render every corpus document into <directory>/<name>.alg."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, doc in sorted(build_corpus().items()):
        target = directory / f"{name}.alg"
        target.write_text(render_algebra(doc), encoding="utf-8")
        written.append(target)
    return written


def load_corpus(directory) -> dict[str, AlgebraDocument]:
    from .fileformat import parse_algebra_file

    directory = Path(directory)
    if not directory.is_dir():
        raise WorkbenchError(f"corpus directory {directory} does not exist")
    docs = {}
    for path in sorted(directory.glob("*.alg")):
        docs[path.stem] = parse_algebra_file(path)
    return docs
