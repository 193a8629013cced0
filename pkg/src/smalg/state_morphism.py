"""Idempotent-endomorphism expansions and the diagonal embedding machinery."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .congruence import (
    DEFAULT_LATTICE_CAP,
    Congruence,
    congruence_lattice,
    is_congruence,
    monolith,
)
from .core import (
    FiniteAlgebra,
    Morphism,
    Signature,
    SignatureMismatch,
    WorkbenchError,
    direct_product,
    enumerate_morphisms,
    induced_subalgebra,
    quotient,
    MODE_IDEMPOTENT,
)

TAU_SYMBOL = "tau"


@dataclass(frozen=True)
class StateMorphismVerdict:
    ok: bool
    kind: str | None = None        # "homomorphism" | "idempotence" | "length"
    witness: tuple | None = None


def verify_state_morphism(algebra: FiniteAlgebra, tau) -> StateMorphismVerdict:
    """Check that tau is an endomorphism with tau(tau(x)) = tau(x) for all x."""
    tau = tuple(tau)
    if len(tau) != algebra.size:
        return StateMorphismVerdict(False, "length", (len(tau), algebra.size))
    for v in tau:
        if not 0 <= v < algebra.size:
            return StateMorphismVerdict(False, "length", (v,))
    m = Morphism(algebra, algebra, tau)
    bad = m.violation()
    if bad is not None:
        return StateMorphismVerdict(False, "homomorphism", bad)
    for x in range(algebra.size):
        if tau[tau[x]] != tau[x]:
            return StateMorphismVerdict(False, "idempotence", (x,))
    return StateMorphismVerdict(True)


@dataclass(frozen=True)
class StateMorphismAlgebra:
    """A finite algebra paired with a verified idempotent endomorphism."""

    base: FiniteAlgebra
    tau: tuple[int, ...]
    name: str = field(default="", compare=False)
    expansion: FiniteAlgebra = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        verdict = verify_state_morphism(self.base, self.tau)
        if not verdict.ok:
            raise WorkbenchError(
                f"tau is not a state-morphism ({verdict.kind} failure at {verdict.witness})"
            )
        if TAU_SYMBOL in self.base.signature:
            raise SignatureMismatch(f"base signature already uses {TAU_SYMBOL!r}")
        sig = Signature(self.base.signature.symbols + ((TAU_SYMBOL, 1),))
        expansion = FiniteAlgebra(
            sig,
            self.base.size,
            self.base.tables + (self.tau,),
            f"{self.name or self.base.name}+tau",
        )
        object.__setattr__(self, "expansion", expansion)

    @property
    def size(self) -> int:
        return self.base.size

    def is_faithful(self) -> bool:
        return all(self.tau[x] == x for x in range(self.size))

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.tau)))

    def image_subalgebra(self) -> tuple[FiniteAlgebra, Morphism]:
        """The induced algebra on tau's image, with its inclusion."""
        return induced_subalgebra(self.base, self.image())


def theta_tau(sma: StateMorphismAlgebra) -> Congruence:
    """Kernel partition of tau, a congruence of the expansion."""
    return Congruence.from_labels(sma.tau)


# The relation {(x, y) : tau(x) = tau(y)} under its other customary name.
kernel_congruence = theta_tau


def lift_congruence(sma: StateMorphismAlgebra, phi: Congruence) -> Congruence:
    """Pull a congruence of the image subalgebra back through tau.

    phi lives on the re-indexed image subalgebra; the result relates x, y
    exactly when their tau-images are phi-related, and restricts back to
    phi on the image.
    """
    img = sma.image()
    if phi.size != len(img):
        raise WorkbenchError("phi does not live on the image subalgebra")
    sub, _ = sma.image_subalgebra()
    if not is_congruence(sub, phi):
        raise WorkbenchError("phi is not a congruence of the image subalgebra")
    pos = {x: i for i, x in enumerate(img)}
    labels = [phi.block_id[pos[sma.tau[x]]] for x in range(sma.size)]
    lifted = Congruence.from_labels(labels)
    if not is_congruence(sma.expansion, lifted):
        raise WorkbenchError("lifted relation is not a congruence of the expansion")
    return lifted


def con_sma(sma: StateMorphismAlgebra, cap: int = DEFAULT_LATTICE_CAP):
    """Congruence lattice of the expansion (base operations plus tau)."""
    return congruence_lattice(sma.expansion, cap)


def diagonal(algebra: FiniteAlgebra) -> StateMorphismAlgebra:
    """The square of an algebra with (x, y) |-> (x, x) as state-morphism."""
    square, _ = direct_product(algebra, algebra)
    n = algebra.size
    tau = tuple((e // n) * n + (e // n) for e in range(square.size))
    name = f"D({algebra.name})" if algebra.name else "D"
    return StateMorphismAlgebra(square.rename(name), tau, name)


@dataclass(frozen=True)
class SubdiagonalCertificate:
    """Witness that an SI state-morphism algebra embeds into a diagonal one."""

    target: FiniteAlgebra
    embedding: Morphism           # base -> target x target (pair encoding)
    theta_star: Congruence
    injective: bool
    homomorphic: bool
    tau_commuting: bool
    target_si: bool

    def all_ok(self) -> bool:
        return self.injective and self.homomorphic and self.tau_commuting and self.target_si


def _certificate(sma: StateMorphismAlgebra, target: FiniteAlgebra,
                 mapping, theta_star: Congruence, cap: int) -> SubdiagonalCertificate:
    dsq = diagonal(target)
    emb = Morphism(sma.base, dsq.base, tuple(mapping))
    injective = emb.is_injective()
    homomorphic = emb.violation() is None
    tau_commuting = all(
        emb.map[sma.tau[x]] == dsq.tau[emb.map[x]] for x in range(sma.size)
    )
    target_si = monolith(target, cap) is not None
    return SubdiagonalCertificate(
        target, emb, theta_star, injective, homomorphic, tau_commuting, target_si
    )


def subdiagonal_embedding(
    sma: StateMorphismAlgebra, cap: int = DEFAULT_LATTICE_CAP
) -> SubdiagonalCertificate:
    """Embed a subdirectly irreducible (A, tau) into D(B) with B subdirectly irreducible.

    When the base itself is SI the embedding is x |-> (tau(x), x) into
    D(A).  Otherwise B = A/theta* for a maximal congruence theta* of the
    base meeting the tau-kernel trivially, and x |-> (tau(x)/theta*,
    x/theta*).
    """
    if monolith(sma.expansion, cap) is None:
        raise WorkbenchError("input state-morphism algebra is not subdirectly irreducible")
    n = sma.size
    if monolith(sma.base, cap) is not None:
        mapping = [sma.tau[x] * n + x for x in range(n)]
        return _certificate(sma, sma.base, mapping, Congruence.identity(n), cap)

    theta_t = theta_tau(sma)
    delta = Congruence.identity(n)
    disjoint = [
        c for c in congruence_lattice(sma.base, cap)
        if c.meet(theta_t) == delta
    ]
    maximal = [
        c for c in disjoint
        if not any(c != d and c.refines(d) for d in disjoint)
    ]
    theta_star = sorted(maximal, key=lambda c: c.sort_key())[0]
    target, canon = quotient(sma.base, theta_star)
    m = target.size
    mapping = [canon.map[sma.tau[x]] * m + canon.map[x] for x in range(n)]
    return _certificate(sma, target, mapping, theta_star, cap)


@dataclass(frozen=True)
class SITransferReport:
    """Per-endomorphism monoliths of the expansions of an SI base algebra."""

    base: FiniteAlgebra
    entries: tuple[tuple[tuple[int, ...], Congruence | None], ...]

    def all_si(self) -> bool:
        return all(mono is not None for _, mono in self.entries)


def si_transfer_check(algebra: FiniteAlgebra, cap: int = DEFAULT_LATTICE_CAP) -> SITransferReport:
    """For an SI algebra, expand by every idempotent endomorphism and report monoliths."""
    if monolith(algebra, cap) is None:
        raise WorkbenchError("base algebra is not subdirectly irreducible")
    entries = []
    for endo in enumerate_morphisms(algebra, algebra, MODE_IDEMPOTENT):
        sma = StateMorphismAlgebra(algebra, endo.map)
        entries.append((endo.map, monolith(sma.expansion, cap)))
    return SITransferReport(algebra, tuple(entries))


def idempotent_endomorphisms(algebra: FiniteAlgebra):
    return tuple(m.map for m in enumerate_morphisms(algebra, algebra, MODE_IDEMPOTENT))


def sma_isomorphism(a: StateMorphismAlgebra, b: StateMorphismAlgebra) -> Morphism | None:
    """First isomorphism of expansions (hence of state-morphism algebras), or None."""
    if a.size != b.size:
        return None
    embeds = enumerate_morphisms(a.expansion, b.expansion, mode="embeddings")
    if not embeds:
        return None
    m = embeds[0]
    return Morphism(a.base, b.base, m.map)


def tau_closed_subuniverses(sma: StateMorphismAlgebra):
    """All subuniverses of the expansion (closed under operations and tau)."""
    from .core import subuniverse_generated

    seen = set()
    n = sma.size
    for bits in product((0, 1), repeat=n):
        seed = [x for x in range(n) if bits[x]]
        seen.add(subuniverse_generated(sma.expansion, seed))
    return tuple(sorted(seen))
