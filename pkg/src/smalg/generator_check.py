"""Variety-generation spot check for diagonal squares of Boolean algebras.

Falsification direction: an identity (bounded variable count and depth)
holds in the diagonal square of the two-element algebra iff it holds in
every expansion of a Boolean algebra of bounded size by an idempotent
endomorphism.  Rather than enumerating identities pairwise, the check
enumerates the distinct term functions simultaneously on all algebras and
compares equality kernels: a discrepancy is a pair of terms agreeing on
the diagonal square but separating some other algebra (or vice versa; the
diagonal square is itself in the enumerated family, so only one direction
has content).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import direct_product, enumerate_morphisms, make_algebra, MODE_IDEMPOTENT
from .state_morphism import StateMorphismAlgebra, diagonal
from .tnorm import lukasiewicz_spec, make_chain


@dataclass(frozen=True)
class GeneratorCheckResult:
    variables: int
    depth: int
    algebra_count: int
    function_count: int          # distinct functions on the whole family
    reference_count: int         # distinct functions on the diagonal square alone
    discrepancies: tuple[tuple[str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def boolean_algebras_upto(max_size: int):
    """One Boolean algebra per size 2**k <= max_size, built as powers of the 2-chain."""
    two = make_chain(lukasiewicz_spec(1)).rename("2")
    one = make_algebra(
        two.signature, 1,
        {sym: tuple([0] * (1**arity)) for sym, arity in two.signature.symbols},
        "1",
    )
    out = [one]
    current = two
    while current.size <= max_size:
        out.append(current)
        nxt, _ = direct_product(current, two)
        current = nxt
    return out


def small_state_morphism_booleans(max_size: int = 8):
    """Every (B, tau) with B Boolean of size <= max_size and tau idempotent."""
    smas = []
    for b in boolean_algebras_upto(max_size):
        for endo in enumerate_morphisms(b, b, MODE_IDEMPOTENT):
            smas.append(StateMorphismAlgebra(b, endo.map))
    return smas


def run_generator_check(
    variables: int = 3, depth: int = 3, max_size: int = 8
) -> GeneratorCheckResult:
    """Compare term-function kernels of the diagonal square against the family.

    Functions are tabulated as flat vectors over all algebras at once,
    with per-algebra offset coding so one lookup table per operation
    covers the family.  Distinct functions are grown level by level up to
    the depth bound (variables have depth 0, constants depth 1).
    """
    two = make_chain(lukasiewicz_spec(1)).rename("2")
    reference = diagonal(two)
    algebras = [reference.expansion]
    algebras += [sma.expansion for sma in small_state_morphism_booleans(max_size)]

    sizes = [a.size for a in algebras]
    offsets = np.cumsum([0] + sizes[:-1])
    total_codes = int(sum(sizes))
    ref_len = sizes[0] ** variables

    sig = algebras[0].signature
    binops = [s for s, a in sig.symbols if a == 2]
    unops = [s for s, a in sig.symbols if a == 1]
    consts = [s for s, a in sig.symbols if a == 0]

    bin_tables = {}
    for s in binops:
        t = np.zeros((total_codes, total_codes), dtype=np.int16)
        for alg, off in zip(algebras, offsets):
            block = np.array(alg.table(s), dtype=np.int64).reshape(alg.size, alg.size)
            t[off:off + alg.size, off:off + alg.size] = block + off
        bin_tables[s] = t
    un_tables = {}
    for s in unops:
        t = np.zeros(total_codes, dtype=np.int16)
        for alg, off in zip(algebras, offsets):
            t[off:off + alg.size] = np.array(alg.table(s)) + off
        un_tables[s] = t

    def var_vector(i: int):
        segs = []
        for alg, off in zip(algebras, offsets):
            env = np.indices((alg.size,) * variables).reshape(variables, -1)
            segs.append(env[i] + off)
        return np.concatenate(segs).astype(np.int16)

    def const_vector(s: str):
        segs = [
            np.full(alg.size**variables, alg.table(s)[0] + off, dtype=np.int16)
            for alg, off in zip(algebras, offsets)
        ]
        return np.concatenate(segs)

    index_of: dict[bytes, int] = {}
    vectors: list[np.ndarray] = []
    witness: list[str] = []

    def add(vec: np.ndarray, term: str) -> None:
        key = vec.tobytes()
        if key not in index_of:
            index_of[key] = len(vectors)
            vectors.append(vec)
            witness.append(term)

    for i in range(variables):
        add(var_vector(i), f"x{i}")
    if depth >= 1:
        for s in consts:
            add(const_vector(s), s)

    for _ in range(depth):
        level = list(vectors)
        level_terms = list(witness)
        stacked = np.stack(level)
        for s in unops:
            rows = un_tables[s][stacked]
            for j in range(len(level)):
                add(rows[j], f"{s}({level_terms[j]})")
        for s in binops:
            table = bin_tables[s]
            for j in range(len(level)):
                rows = table[stacked, level[j][None, :]]
                for i in range(len(level)):
                    add(rows[i], f"{s}({level_terms[i]},{level_terms[j]})")

    by_reference: dict[bytes, int] = {}
    discrepancies = []
    for idx, vec in enumerate(vectors):
        key = vec[:ref_len].tobytes()
        if key in by_reference:
            discrepancies.append((witness[by_reference[key]], witness[idx]))
        else:
            by_reference[key] = idx

    return GeneratorCheckResult(
        variables=variables,
        depth=depth,
        algebra_count=len(algebras),
        function_count=len(vectors),
        reference_count=len(by_reference),
        discrepancies=tuple(discrepancies),
    )
