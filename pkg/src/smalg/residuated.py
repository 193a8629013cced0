"""Residuated chains and their expansions: axiom systems, filters, probes.

Covers the fixed signature (∧, ∨, ⊙, →, 0, 1): axiom checking for the
supported classes, filter enumeration and the filter/congruence
correspondence, radicals and locality, Boolean elements, internal-state
axioms, and the classifier for subdirectly irreducible expansions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .congruence import (
    DEFAULT_LATTICE_CAP,
    Congruence,
    generated_congruence,
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
    induced_subalgebra,
    quotient,
    subuniverse_generated,
    verified_morphism,
)
from .state_morphism import StateMorphismAlgebra

MEET, JOIN, MUL, IMP, ZERO, ONE = "∧", "∨", "⊙", "→", "0", "1"

BL_SIGNATURE = Signature(((MEET, 2), (JOIN, 2), (MUL, 2), (IMP, 2), (ZERO, 0), (ONE, 0)))
HOOP_SIGNATURE = Signature(((IMP, 2), (MUL, 2), (ONE, 0)))

RESIDUATED_CLASSES = ("BL", "MV", "MTL", "naBL", "hoop")


class ResiduatedView(object):
    """Convenience wrapper for an algebra over the residuated signature.

    The derived order is x <= y iff x∧y = x and the complement is
    a⁻ = a→0.  Construction verifies that <= is a partial order with
    bottom 0 and top 1; full axiom checking is check_axioms' job.
    """

    def __init__(self, algebra: FiniteAlgebra):
        if algebra.signature != BL_SIGNATURE:
            raise SignatureMismatch("expected the residuated signature ∧ ∨ ⊙ → 0 1")
        self.algebra = algebra
        self.n = algebra.size
        self._meet = algebra.table(MEET)
        self._join = algebra.table(JOIN)
        self._mul = algebra.table(MUL)
        self._imp = algebra.table(IMP)
        self.zero = algebra.table(ZERO)[0]
        self.one = algebra.table(ONE)[0]
        self._check_order()

    def _check_order(self):
        n = self.n
        for x in range(n):
            if self.meet(x, x) != x:
                raise WorkbenchError(f"derived order not reflexive at {x}")
            if not self.leq(self.zero, x):
                raise WorkbenchError(f"0 is not a bottom element (at {x})")
            if not self.leq(x, self.one):
                raise WorkbenchError(f"1 is not a top element (at {x})")
        for x in range(n):
            for y in range(n):
                if x != y and self.leq(x, y) and self.leq(y, x):
                    raise WorkbenchError(f"derived order not antisymmetric at ({x},{y})")
                for z in range(n):
                    if self.leq(x, y) and self.leq(y, z) and not self.leq(x, z):
                        raise WorkbenchError(f"derived order not transitive at ({x},{y},{z})")

    def meet(self, x, y):
        return self._meet[x * self.n + y]

    def join(self, x, y):
        return self._join[x * self.n + y]

    def mul(self, x, y):
        return self._mul[x * self.n + y]

    def imp(self, x, y):
        return self._imp[x * self.n + y]

    def leq(self, x, y) -> bool:
        return self._meet[x * self.n + y] == x

    def neg(self, x):
        return self._imp[x * self.n + self.zero]

    def is_linear(self) -> bool:
        return all(
            self.leq(x, y) or self.leq(y, x)
            for x in range(self.n) for y in range(x + 1, self.n)
        )

    def linear_subset(self, elements) -> bool:
        elems = list(elements)
        return all(
            self.leq(x, y) or self.leq(y, x)
            for i, x in enumerate(elems) for y in elems[i + 1:]
        )


# ---------------------------------------------------------------------------
# Axiom systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AxiomVerdict:
    ok: bool
    axiom: str | None = None
    witness: tuple | None = None


def _lattice_axioms(t, n, meet, join, zero, one):
    for x, y in product(range(n), repeat=2):
        if meet(x, y) != meet(y, x):
            return "meet-commutativity", (x, y)
        if join(x, y) != join(y, x):
            return "join-commutativity", (x, y)
        if meet(x, join(x, y)) != x:
            return "absorption-meet-join", (x, y)
        if join(x, meet(x, y)) != x:
            return "absorption-join-meet", (x, y)
    for x, y, z in product(range(n), repeat=3):
        if meet(meet(x, y), z) != meet(x, meet(y, z)):
            return "meet-associativity", (x, y, z)
        if join(join(x, y), z) != join(x, join(y, z)):
            return "join-associativity", (x, y, z)
    for x in range(n):
        if meet(zero, x) != zero:
            return "bottom", (x,)
        if join(one, x) != one:
            return "top", (x,)
    return None


def check_axioms(algebra: FiniteAlgebra, cls: str) -> AxiomVerdict:
    """Exhaustively check the axiom system of the given class.

    Returns the first violated axiom with a witness tuple; the witness
    lists the quantified elements in order.
    """
    if cls not in RESIDUATED_CLASSES:
        raise WorkbenchError(f"unknown class {cls!r}; expected one of {RESIDUATED_CLASSES}")
    if cls == "hoop":
        return _check_hoop(algebra)
    if algebra.signature != BL_SIGNATURE:
        raise SignatureMismatch(f"class {cls} expects the signature ∧ ∨ ⊙ → 0 1")

    n = algebra.size
    tm, tj = algebra.table(MEET), algebra.table(JOIN)
    tp, ti = algebra.table(MUL), algebra.table(IMP)
    zero, one = algebra.table(ZERO)[0], algebra.table(ONE)[0]
    meet = lambda x, y: tm[x * n + y]
    join = lambda x, y: tj[x * n + y]
    mul = lambda x, y: tp[x * n + y]
    imp = lambda x, y: ti[x * n + y]
    leq = lambda x, y: meet(x, y) == x

    bad = _lattice_axioms(algebra, n, meet, join, zero, one)
    if bad:
        return AxiomVerdict(False, *bad)

    for x, y in product(range(n), repeat=2):
        if mul(x, y) != mul(y, x):
            return AxiomVerdict(False, "product-commutativity", (x, y))
    for x in range(n):
        if mul(x, one) != x:
            return AxiomVerdict(False, "product-unit", (x,))
    if cls != "naBL":
        for x, y, z in product(range(n), repeat=3):
            if mul(mul(x, y), z) != mul(x, mul(y, z)):
                return AxiomVerdict(False, "product-associativity", (x, y, z))

    for a, b, c in product(range(n), repeat=3):
        if leq(c, imp(a, b)) != leq(mul(a, c), b):
            return AxiomVerdict(False, "residuation", (a, b, c))

    if cls in ("BL", "MV", "naBL"):
        for a, b in product(range(n), repeat=2):
            if meet(a, b) != mul(a, imp(a, b)):
                return AxiomVerdict(False, "divisibility", (a, b))

    if cls in ("BL", "MV", "MTL"):
        for a, b in product(range(n), repeat=2):
            if join(imp(a, b), imp(b, a)) != one:
                return AxiomVerdict(False, "prelinearity", (a, b))

    if cls == "MV":
        for a in range(n):
            if imp(imp(a, zero), zero) != a:
                return AxiomVerdict(False, "involution", (a,))

    if cls == "naBL":
        for x, y, a, b in product(range(n), repeat=4):
            u = imp(x, y)
            v = imp(y, x)
            alpha = imp(mul(a, b), mul(a, mul(b, v)))
            if join(u, alpha) != one:
                return AxiomVerdict(False, "alpha-prelinearity", (x, y, a, b))
            beta = imp(b, imp(a, mul(mul(a, b), v)))
            if join(u, beta) != one:
                return AxiomVerdict(False, "beta-prelinearity", (x, y, a, b))

    return AxiomVerdict(True)


def _check_hoop(algebra: FiniteAlgebra) -> AxiomVerdict:
    if algebra.signature != HOOP_SIGNATURE:
        raise SignatureMismatch("class hoop expects the signature → ⊙ 1")
    n = algebra.size
    ti, tp = algebra.table(IMP), algebra.table(MUL)
    one = algebra.table(ONE)[0]
    imp = lambda x, y: ti[x * n + y]
    mul = lambda x, y: tp[x * n + y]
    for x, y in product(range(n), repeat=2):
        if mul(x, y) != mul(y, x):
            return AxiomVerdict(False, "product-commutativity", (x, y))
    for x in range(n):
        if mul(x, one) != x:
            return AxiomVerdict(False, "product-unit", (x,))
        if imp(x, x) != one:
            return AxiomVerdict(False, "reflexivity", (x,))
    for x, y in product(range(n), repeat=2):
        if mul(x, imp(x, y)) != mul(y, imp(y, x)):
            return AxiomVerdict(False, "divisibility", (x, y))
    for x, y, z in product(range(n), repeat=3):
        if mul(mul(x, y), z) != mul(x, mul(y, z)):
            return AxiomVerdict(False, "product-associativity", (x, y, z))
        if imp(mul(x, y), z) != imp(x, imp(y, z)):
            return AxiomVerdict(False, "exchange", (x, y, z))
    return AxiomVerdict(True)


# ---------------------------------------------------------------------------
# Filters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Filter:
    """An upward-closed, ⊙-closed subset containing 1."""

    members: tuple[int, ...]

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)

    def issubset(self, other: "Filter") -> bool:
        return set(self.members) <= set(other.members)


def _filter_closure(view: ResiduatedView, seed) -> Filter:
    members = set(seed)
    members.add(view.one)
    changed = True
    while changed:
        changed = False
        for x in list(members):
            for y in list(members):
                v = view.mul(x, y)
                if v not in members:
                    members.add(v)
                    changed = True
        for x in list(members):
            for y in range(view.n):
                if view.leq(x, y) and y not in members:
                    members.add(y)
                    changed = True
    return Filter(tuple(sorted(members)))


def principal_filter(view: ResiduatedView, a: int) -> Filter:
    return _filter_closure(view, [a])


def filters(view: ResiduatedView, mode: str = "all", tau=None):
    """Enumerate filters (closures of principal upsets joined to fixpoint).

    mode "maximal" keeps maximal proper filters; mode "tau-filters" keeps
    those with tau(F) ⊆ F.
    """
    found = {_filter_closure(view, [])}
    frontier = []
    for a in range(view.n):
        f = principal_filter(view, a)
        if f not in found:
            found.add(f)
            frontier.append(f)
    while frontier:
        f = frontier.pop()
        for g in list(found):
            joined = _filter_closure(view, f.members + g.members)
            if joined not in found:
                found.add(joined)
                frontier.append(joined)
    ordered = sorted(found, key=lambda f: (len(f.members), f.members))
    if mode == "all":
        return tuple(ordered)
    if mode == "maximal":
        proper = [f for f in ordered if len(f.members) < view.n]
        return tuple(
            f for f in proper
            if not any(f != g and f.issubset(g) for g in proper)
        )
    if mode == "tau-filters":
        if tau is None:
            raise WorkbenchError("tau-filters mode requires a tau map")
        return tuple(
            f for f in ordered if all(tau[x] in f for x in f.members)
        )
    raise WorkbenchError(f"unknown filter mode {mode!r}")


def congruence_of_filter(view: ResiduatedView, f: Filter) -> Congruence:
    """x ~ y iff x→y and y→x lie in the filter."""
    mem = set(f.members)
    if view.one not in mem:
        raise WorkbenchError("filters must contain 1")
    n = view.n
    labels = list(range(n))
    for x in range(n):
        for y in range(x):
            if view.imp(x, y) in mem and view.imp(y, x) in mem:
                labels[x] = labels[y]
                break
    cong = Congruence.from_labels(labels)
    # The relation of a genuine filter is transitive; reject junk inputs.
    for x, y in product(range(n), repeat=2):
        related = view.imp(x, y) in mem and view.imp(y, x) in mem
        if related != cong.relates(x, y):
            raise WorkbenchError("input is not a filter (relation not transitive)")
    if not is_congruence(view.algebra, cong):
        raise WorkbenchError("filter relation is not a congruence")
    return cong


def filter_of_congruence(view: ResiduatedView, theta: Congruence) -> Filter:
    """The block of 1."""
    if theta.size != view.n:
        raise WorkbenchError("congruence size mismatch")
    one_block = tuple(sorted(
        x for x in range(view.n) if theta.block_id[x] == theta.block_id[view.one]
    ))
    return Filter(one_block)


def ker_tau_bl(view: ResiduatedView, tau) -> Filter:
    """The filter {a : tau(a) = 1}."""
    return Filter(tuple(sorted(a for a in range(view.n) if tau[a] == view.one)))


# ---------------------------------------------------------------------------
# Structure probes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureProbes:
    maximal_filters: tuple[Filter, ...]
    rad1: Filter
    is_local: bool
    boolean_elements: tuple[int, ...]
    mv_skeleton: tuple[int, ...]
    boolean_complement_closed: bool
    is_linear: bool


def structure_probes(view: ResiduatedView) -> StructureProbes:
    maximal = filters(view, "maximal")
    if maximal:
        rad = set(range(view.n))
        for f in maximal:
            rad &= set(f.members)
        rad1 = Filter(tuple(sorted(rad)))
    else:
        rad1 = Filter(tuple(range(view.n)))
    booleans = tuple(
        a for a in range(view.n)
        if view.neg(view.neg(a)) == a and view.mul(a, a) == a
    )
    skeleton = tuple(a for a in range(view.n) if view.neg(view.neg(a)) == a)
    closed = all(view.neg(a) in booleans for a in booleans)
    return StructureProbes(
        maximal_filters=maximal,
        rad1=rad1,
        is_local=len(maximal) == 1,
        boolean_elements=booleans,
        mv_skeleton=skeleton,
        boolean_complement_closed=closed,
        is_linear=view.is_linear(),
    )


def nontrivial_booleans(view: ResiduatedView):
    return tuple(
        a for a in structure_probes(view).boolean_elements
        if a not in (view.zero, view.one)
    )


def mv_skeleton_algebra(view: ResiduatedView) -> FiniteAlgebra:
    """The involutive elements as an algebra over the residuated signature.

    The structure is derived from a⊕b := (a⁻ ⊙ b⁻)⁻ and the complement;
    on the skeleton this yields a bounded residuated structure which the
    MV axiom check must accept.
    """
    elems = tuple(a for a in range(view.n) if view.neg(view.neg(a)) == a)
    pos = {a: i for i, a in enumerate(elems)}
    m = len(elems)

    def oplus(a, b):
        return view.neg(view.mul(view.neg(a), view.neg(b)))

    def s_mul(a, b):
        return view.neg(oplus(view.neg(a), view.neg(b)))

    def s_imp(a, b):
        return oplus(view.neg(a), b)

    def s_join(a, b):
        return s_imp(s_imp(a, b), b)

    def s_meet(a, b):
        return view.neg(s_join(view.neg(a), view.neg(b)))

    tables = {MEET: [], JOIN: [], MUL: [], IMP: []}
    for a, b in product(elems, repeat=2):
        for name, fn in ((MEET, s_meet), (JOIN, s_join), (MUL, s_mul), (IMP, s_imp)):
            v = fn(a, b)
            if v not in pos:
                raise WorkbenchError(f"skeleton not closed under derived {name} at ({a},{b})")
            tables[name].append(pos[v])
    out = {name: tuple(vals) for name, vals in tables.items()}
    out[ZERO] = (pos[view.zero],)
    out[ONE] = (pos[view.neg(view.zero)],)
    ordered = tuple(out[sym] for sym, _ in BL_SIGNATURE.symbols)
    return FiniteAlgebra(BL_SIGNATURE, m, ordered,
                         f"MV({view.algebra.name})" if view.algebra.name else "")


def hoop_on(view: ResiduatedView, subset) -> FiniteAlgebra:
    """The ⟨→, ⊙, 1⟩ algebra induced on a subset (0 need not belong)."""
    elems = tuple(sorted(set(subset)))
    pos = {a: i for i, a in enumerate(elems)}
    if view.one not in pos:
        raise WorkbenchError("hoop carrier must contain 1")
    imp_t, mul_t = [], []
    for a, b in product(elems, repeat=2):
        u, v = view.imp(a, b), view.mul(a, b)
        if u not in pos or v not in pos:
            raise WorkbenchError(f"subset not closed under → or ⊙ at ({a},{b})")
        imp_t.append(pos[u])
        mul_t.append(pos[v])
    return FiniteAlgebra(
        HOOP_SIGNATURE, len(elems), (tuple(imp_t), tuple(mul_t), (pos[view.one],))
    )


# ---------------------------------------------------------------------------
# Internal-state axioms
# ---------------------------------------------------------------------------

STATE_AXIOMS = (
    "fixes-zero",
    "implication-shift",
    "product-shift",
    "image-product-fixed",
    "image-implication-fixed",
)


@dataclass(frozen=True)
class StateOperatorVerdict:
    ok: bool
    status: tuple[tuple[str, bool], ...]
    first_violation: tuple[str, tuple] | None = None


def check_state_operator(view: ResiduatedView, tau) -> StateOperatorVerdict:
    """Check the five internal-state axioms over all pairs."""
    tau = tuple(tau)
    if len(tau) != view.n:
        raise WorkbenchError("tau length must equal universe size")
    holds = {name: True for name in STATE_AXIOMS}
    first = None

    def fail(name, witness):
        nonlocal first
        holds[name] = False
        if first is None:
            first = (name, witness)

    if tau[view.zero] != view.zero:
        fail("fixes-zero", (view.zero,))
    for x, y in product(range(view.n), repeat=2):
        if tau[view.imp(x, y)] != view.imp(tau[x], tau[view.meet(x, y)]):
            fail("implication-shift", (x, y))
            break
    for x, y in product(range(view.n), repeat=2):
        if tau[view.mul(x, y)] != view.mul(tau[x], tau[view.imp(x, view.mul(x, y))]):
            fail("product-shift", (x, y))
            break
    for x, y in product(range(view.n), repeat=2):
        v = view.mul(tau[x], tau[y])
        if tau[v] != v:
            fail("image-product-fixed", (x, y))
            break
    for x, y in product(range(view.n), repeat=2):
        v = view.imp(tau[x], tau[y])
        if tau[v] != v:
            fail("image-implication-fixed", (x, y))
            break
    status = tuple((name, holds[name]) for name in STATE_AXIOMS)
    return StateOperatorVerdict(first is None, status, first)


def disjunction_property(view: ResiduatedView, h1, h2):
    """No x in h1, y in h2 with x < 1, y < 1 and x∨y = 1; witness on failure."""
    for x in sorted(h1):
        if x == view.one:
            continue
        for y in sorted(h2):
            if y == view.one:
                continue
            if view.join(x, y) == view.one:
                return False, (x, y)
    return True, None


def state_expansion(view: ResiduatedView, tau) -> FiniteAlgebra:
    """The algebra extended by tau as an extra unary operation."""
    sig = Signature(BL_SIGNATURE.symbols + (("tau", 1),))
    return FiniteAlgebra(sig, view.n, view.algebra.tables + (tuple(tau),),
                         f"{view.algebra.name}+tau")


@dataclass(frozen=True)
class SIStateReport:
    """The three irreducibility conditions against direct monolith detection."""

    faithful: bool
    image: tuple[int, ...]
    image_si: bool
    kernel: Filter
    kernel_trivial: bool
    kernel_si: bool
    disjunction_ok: bool
    conditions_hold: bool
    is_si: bool

    @property
    def consistent(self) -> bool:
        return self.conditions_hold == self.is_si


def si_state_bl_report(view: ResiduatedView, tau,
                       cap: int = DEFAULT_LATTICE_CAP) -> SIStateReport:
    verdict = check_state_operator(view, tau)
    if not verdict.ok:
        raise WorkbenchError(f"tau is not a state-operator: fails {verdict.first_violation}")
    tau = tuple(tau)
    kernel = ker_tau_bl(view, tau)
    faithful = kernel.members == (view.one,)

    image = tuple(sorted(set(tau)))
    closed = subuniverse_generated(view.algebra, image)
    if closed != image:
        raise WorkbenchError("tau image is not a subuniverse")
    image_alg, _ = induced_subalgebra(view.algebra, image)
    image_si = monolith(image_alg, cap) is not None

    kernel_trivial = len(kernel.members) == 1
    if kernel_trivial:
        kernel_si = False
    else:
        kernel_si = monolith(hoop_on(view, kernel.members), cap) is not None

    disjunction_ok, _ = disjunction_property(view, kernel.members, image)

    if faithful:
        conditions = image_si
    else:
        conditions = kernel_si and disjunction_ok

    expansion = state_expansion(view, tau)
    is_si = monolith(expansion, cap) is not None
    return SIStateReport(
        faithful=faithful,
        image=image,
        image_si=image_si,
        kernel=kernel,
        kernel_trivial=kernel_trivial,
        kernel_si=kernel_si,
        disjunction_ok=disjunction_ok,
        conditions_hold=conditions,
        is_si=is_si,
    )


# ---------------------------------------------------------------------------
# Trichotomy classifier
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TrichotomyResult:
    case_tag: str                 # "i" | "ii" | "iii" | "not-SI"
    witnesses: dict = field(compare=False, default_factory=dict)


def classify_trichotomy(sma: StateMorphismAlgebra,
                        cap: int = DEFAULT_LATTICE_CAP) -> TrichotomyResult:
    """Classify a subdirectly irreducible expansion of a residuated base.

    Case i: tau is the identity (base must then be a linear SI algebra).
    Case iii: a nontrivial Boolean element exists; the base decomposes
    along the pair of factor congruences it generates, recovering factors
    A, B and an injective homomorphism h with tau acting as
    (a, b) |-> (a, h(a)).  Case ii: the remaining local situation.
    """
    view = ResiduatedView(sma.base)
    if monolith(sma.expansion, cap) is None:
        return TrichotomyResult("not-SI")

    if sma.is_faithful():
        evidence = {
            "linear": view.is_linear(),
            "base_si": monolith(sma.base, cap) is not None,
        }
        return TrichotomyResult("i", evidence)

    booleans = nontrivial_booleans(view)
    if booleans:
        witnesses = _recover_product_form(sma, view, booleans, cap)
        return TrichotomyResult("iii", witnesses)

    kernel = ker_tau_bl(view, sma.tau)
    probes = structure_probes(view)
    kernel_trivial = len(kernel.members) == 1
    kernel_si = (
        False if kernel_trivial
        else monolith(hoop_on(view, kernel.members), cap) is not None
    )
    disj, _ = disjunction_property(view, kernel.members, sorted(set(sma.tau)))
    evidence = {
        "not_faithful": not sma.is_faithful(),
        "no_nontrivial_booleans": True,
        "local": probes.is_local,
        "kernel_si_or_trivial": kernel_trivial or kernel_si,
        "disjunction": disj,
        "rad1": probes.rad1,
        "kernel": kernel,
        "linear_iff_rad1_linear":
            view.is_linear() == view.linear_subset(probes.rad1.members),
    }
    return TrichotomyResult("ii", evidence)


def _recover_product_form(sma, view, booleans, cap):
    """Factor the base along Θ(y,1), Θ(y⁻,1) for a nontrivial Boolean y."""
    n = sma.size
    delta = Congruence.identity(n)
    failures = []
    for y in booleans:
        yneg = view.neg(y)
        th_b = generated_congruence(sma.base, [(y, view.one)])
        th_a = generated_congruence(sma.base, [(yneg, view.one)])
        if th_a.meet(th_b) != delta:
            failures.append((y, "factor congruences not disjoint"))
            continue
        a_alg, p_a = quotient(sma.base, th_a)
        b_alg, p_b = quotient(sma.base, th_b)
        if a_alg.size * b_alg.size != n:
            failures.append((y, "not a direct decomposition"))
            continue
        iso_map = tuple(p_a.map[x] * b_alg.size + p_b.map[x] for x in range(n))
        if len(set(iso_map)) != n:
            failures.append((y, "pairing map not bijective"))
            continue
        if any(p_a.map[sma.tau[x]] != p_a.map[x] for x in range(n)):
            failures.append((y, "tau does not fix the first factor"))
            continue
        h_map = [None] * a_alg.size
        ok = True
        for x in range(n):
            a = p_a.map[x]
            hb = p_b.map[sma.tau[x]]
            if h_map[a] is None:
                h_map[a] = hb
            elif h_map[a] != hb:
                ok = False
                break
        if not ok:
            failures.append((y, "second coordinate of tau not a function of the first"))
            continue
        h = Morphism(a_alg, b_alg, tuple(h_map))
        if h.violation() is not None or not h.is_injective():
            failures.append((y, "recovered map not an injective homomorphism"))
            continue
        prod_alg, _ = direct_product(a_alg, b_alg)
        iso = verified_morphism(sma.base, prod_alg, iso_map)
        tau_target = tuple(
            (e // b_alg.size) * b_alg.size + h_map[e // b_alg.size]
            for e in range(prod_alg.size)
        )
        commutes = all(
            iso.map[sma.tau[x]] == tau_target[iso.map[x]] for x in range(n)
        )
        return {
            "boolean": y,
            "A": a_alg,
            "B": b_alg,
            "h": h,
            "iso": iso,
            "tau_commutes": commutes,
            "h_injective": h.is_injective(),
        }
    raise WorkbenchError(f"product recovery failed for all Boolean elements: {failures}")


# ---------------------------------------------------------------------------
# Constructed example families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiagonalPairExample:
    first: StateMorphismAlgebra       # square with (a,b) -> (a,a)
    second: StateMorphismAlgebra      # square with (a,b) -> (b,b)
    swap: Morphism
    swap_is_isomorphism: bool


def build_diagonal_pair(algebra: FiniteAlgebra) -> DiagonalPairExample:
    """Both diagonal operators on a square, with the coordinate swap between them."""
    from .state_morphism import diagonal

    first = diagonal(algebra)
    n = algebra.size
    square = first.base
    tau2 = tuple((e % n) * n + (e % n) for e in range(square.size))
    second = StateMorphismAlgebra(square, tau2, f"D2({algebra.name})")
    swap_map = tuple((e % n) * n + (e // n) for e in range(square.size))
    swap = Morphism(square, square, swap_map)
    ok = (
        swap.violation() is None
        and swap.is_injective()
        and all(swap.map[first.tau[e]] == second.tau[swap.map[e]]
                for e in range(square.size))
    )
    return DiagonalPairExample(first, second, swap, ok)


@dataclass(frozen=True)
class RadicalSquareExample:
    sma: StateMorphismAlgebra
    carrier: tuple[int, ...]          # elements inside the ambient square
    union_form_ok: bool               # carrier == (R x R) ∪ (R x R)⁻
    kernel: Filter
    no_nontrivial_booleans: bool
    is_si: bool
    is_linear: bool


def build_radical_square(algebra: FiniteAlgebra,
                         cap: int = DEFAULT_LATTICE_CAP) -> RadicalSquareExample:
    """Subalgebra of a square generated by the radical square, with the diagonal map.

    Requires a local base whose radical is its unique nontrivial proper
    filter.  No finite chain with involutive negation qualifies (powers of
    any a < 1 reach 0), so the natural inputs are non-involutive chains.
    """
    view = ResiduatedView(algebra)
    probes = structure_probes(view)
    if not probes.is_local:
        raise WorkbenchError("radical-square construction needs a local base")
    rad = probes.rad1
    if rad.members == (view.one,):
        raise WorkbenchError("radical must be nontrivial")
    proper_nontrivial = [
        f for f in filters(view)
        if len(f.members) < view.n and f.members != (view.one,)
    ]
    if proper_nontrivial != [rad]:
        raise WorkbenchError("radical must be the unique nontrivial proper filter")

    square, _ = direct_product(algebra, algebra)
    n = algebra.size
    seed = [x * n + y for x in rad.members for y in rad.members]
    carrier = subuniverse_generated(square, seed)
    sub, incl = induced_subalgebra(square, carrier)
    pos = {e: i for i, e in enumerate(carrier)}
    tau_sq = {e: (e // n) * n + (e // n) for e in carrier}
    if any(tau_sq[e] not in pos for e in carrier):
        raise WorkbenchError("generated carrier is not closed under the diagonal map")
    tau = tuple(pos[tau_sq[e]] for e in carrier)
    sma = StateMorphismAlgebra(sub.rename(f"radsq({algebra.name})"), tau)

    sq_view = ResiduatedView(square)
    expected = set(seed) | {sq_view.neg(e) for e in seed}
    union_form_ok = expected == set(carrier)

    sub_view = ResiduatedView(sma.base)
    kernel = ker_tau_bl(sub_view, tau)
    return RadicalSquareExample(
        sma=sma,
        carrier=carrier,
        union_form_ok=union_form_ok,
        kernel=kernel,
        no_nontrivial_booleans=not nontrivial_booleans(sub_view),
        is_si=monolith(sma.expansion, cap) is not None,
        is_linear=sub_view.is_linear(),
    )


@dataclass(frozen=True)
class TauHExample:
    sma: StateMorphismAlgebra
    h_kernel: Filter                  # {a : h(a) = 1} in the first factor
    expected_si: bool                 # h kernel trivial
    is_si: bool
    kernel: Filter                    # {1} x B inside the product
    least_tau_filter: Filter | None
    nontrivial_booleans: tuple[int, ...]


def build_tau_h(a: FiniteAlgebra, b: FiniteAlgebra, h: Morphism,
                cap: int = DEFAULT_LATTICE_CAP) -> TauHExample:
    """Product of two residuated algebras with (x, y) |-> (x, h(x))."""
    view_a = ResiduatedView(a)
    view_b = ResiduatedView(b)
    if not view_a.is_linear() or a.size < 2:
        raise WorkbenchError("first factor must be a nontrivial chain")
    if monolith(b, cap) is None:
        raise WorkbenchError("second factor must be subdirectly irreducible")
    if h.domain.tables != a.tables or h.codomain.tables != b.tables:
        raise WorkbenchError("h must map the first factor into the second")
    if h.violation() is not None:
        raise WorkbenchError("h is not a homomorphism")

    prod, _ = direct_product(a, b)
    nb = b.size
    tau = tuple((e // nb) * nb + h.map[e // nb] for e in range(prod.size))
    sma = StateMorphismAlgebra(
        prod.rename(f"tauh({a.name},{b.name})"), tau
    )
    view_m = ResiduatedView(sma.base)
    h_kernel = Filter(tuple(sorted(
        x for x in range(a.size) if h.map[x] == view_b.one
    )))
    expected_si = h_kernel.members == (view_a.one,)
    is_si = monolith(sma.expansion, cap) is not None
    kernel = ker_tau_bl(view_m, tau)

    least = None
    tau_filters = [
        f for f in filters(view_m, "tau-filters", tau=tau)
        if f.members != (view_m.one,)
    ]
    for f in tau_filters:
        if all(f.issubset(g) for g in tau_filters):
            least = f
            break
    return TauHExample(
        sma=sma,
        h_kernel=h_kernel,
        expected_si=expected_si,
        is_si=is_si,
        kernel=kernel,
        least_tau_filter=least,
        nontrivial_booleans=nontrivial_booleans(view_m),
    )


def build_example(kind: str, **inputs):
    """Dispatch for the three constructed families."""
    if kind == "diagonal-pair":
        return build_diagonal_pair(inputs["algebra"])
    if kind == "radical-square":
        return build_radical_square(inputs["algebra"], inputs.get("cap", DEFAULT_LATTICE_CAP))
    if kind == "tau-h":
        return build_tau_h(inputs["a"], inputs["b"], inputs["h"],
                           inputs.get("cap", DEFAULT_LATTICE_CAP))
    raise WorkbenchError(f"unknown example kind {kind!r}")
