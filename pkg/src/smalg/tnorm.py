"""Finite residuated chains from t-norm families and groupoid tables.

Grid points are stored as indices 0..n of the uniform grid {0, 1/n, ..., 1};
rational labels are display-only.  Only grid-closed families are generated
(the product t-norm closes no nontrivial uniform grid and is rejected).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .core import FiniteAlgebra, WorkbenchError
from .residuated import (
    BL_SIGNATURE,
    IMP,
    JOIN,
    MEET,
    MUL,
    ONE,
    ZERO,
    AxiomVerdict,
    check_axioms,
)

KIND_LUKASIEWICZ = "lukasiewicz"
KIND_GOEDEL = "goedel"
KIND_ORDINAL_SUM = "ordinal-sum"
PRIMITIVE_KINDS = (KIND_LUKASIEWICZ, KIND_GOEDEL)


@dataclass(frozen=True)
class ChainSpec:
    """A chain description: primitive kind on a grid, or an ordinal sum.

    points counts grid points (n+1 for the grid {0, 1/n, ..., 1}).  Ordinal
    sum components partition the grid into consecutive intervals sharing
    endpoints, so the total is the component sum minus the shared points.
    """

    kind: str
    points: int
    components: tuple["ChainSpec", ...] = ()

    def __post_init__(self):
        if self.kind in PRIMITIVE_KINDS:
            if self.components:
                raise WorkbenchError("primitive chain specs take no components")
            if self.points < 2:
                raise WorkbenchError("a chain needs at least the two bounds")
        elif self.kind == KIND_ORDINAL_SUM:
            if not self.components:
                raise WorkbenchError("ordinal sum needs at least one component")
            for comp in self.components:
                if comp.kind not in PRIMITIVE_KINDS:
                    raise WorkbenchError("ordinal sum components must be primitive chains")
            expected = sum(c.points for c in self.components) - (len(self.components) - 1)
            if self.points != expected:
                raise WorkbenchError(
                    f"ordinal sum of {[c.points for c in self.components]} points "
                    f"spans {expected} grid points, not {self.points}"
                )
        else:
            raise WorkbenchError(f"unknown chain kind {self.kind!r}")


def lukasiewicz_spec(n: int) -> ChainSpec:
    return ChainSpec(KIND_LUKASIEWICZ, n + 1)


def goedel_spec(n: int) -> ChainSpec:
    return ChainSpec(KIND_GOEDEL, n + 1)


def ordinal_sum_spec(components) -> ChainSpec:
    comps = tuple(components)
    points = sum(c.points for c in comps) - (len(comps) - 1)
    return ChainSpec(KIND_ORDINAL_SUM, points, comps)


def spec_label(spec: ChainSpec) -> str:
    if spec.kind == KIND_LUKASIEWICZ:
        return f"luk_{spec.points - 1}"
    if spec.kind == KIND_GOEDEL:
        return f"godel_{spec.points - 1}"
    return "os_" + "_".join(spec_label(c) for c in spec.components)


def grid_labels(points: int) -> tuple[str, ...]:
    n = points - 1
    return tuple(str(Fraction(i, n)) for i in range(points))


@dataclass(frozen=True)
class GroupoidTable:
    """A binary operation on a chain of grid indices, top index neutral."""

    size: int
    table: tuple[int, ...]
    intended_class: str = "tnorm"     # tnorm | left-continuous-tnorm-surrogate | nat-norm

    def __post_init__(self):
        if len(self.table) != self.size * self.size:
            raise WorkbenchError("groupoid table must be size*size entries")
        for v in self.table:
            if not 0 <= v < self.size:
                raise WorkbenchError("groupoid entry out of range")

    def apply(self, x: int, y: int) -> int:
        return self.table[x * self.size + y]


def _mul_table(spec: ChainSpec) -> tuple[int, ...]:
    n = spec.points - 1
    if spec.kind == KIND_LUKASIEWICZ:
        return tuple(max(x + y - n, 0) for x in range(n + 1) for y in range(n + 1))
    if spec.kind == KIND_GOEDEL:
        return tuple(min(x, y) for x in range(n + 1) for y in range(n + 1))
    # Ordinal sum: each component acts inside its interval (rescaled to
    # interval endpoints), and min applies across components.
    bounds = [0]
    for comp in spec.components:
        bounds.append(bounds[-1] + comp.points - 1)
    if bounds[-1] != n:
        raise WorkbenchError("ordinal sum components do not span the grid")

    def segment(x: int) -> int:
        for k in range(len(bounds) - 1):
            if bounds[k] <= x <= bounds[k + 1]:
                if x < bounds[k + 1] or k == len(bounds) - 2:
                    return k
        return len(bounds) - 2

    def t(x: int, y: int) -> int:
        if x > y:
            x, y = y, x
        # x <= y; if y is at or beyond x's segment top, it acts as the unit.
        sx = segment(x)
        lo, hi = bounds[sx], bounds[sx + 1]
        if y >= hi:
            return x
        comp = spec.components[sx]
        if comp.kind == KIND_LUKASIEWICZ:
            return max(x + y - hi, lo)
        return min(x, y)

    return tuple(t(x, y) for x in range(n + 1) for y in range(n + 1))


@dataclass(frozen=True)
class ResiduumResult:
    table: tuple[int, ...]
    adjoint: bool
    witness: tuple[int, int, int] | None = None


def residuum_from_table(t: GroupoidTable) -> ResiduumResult:
    """x→y as the greatest z with t(z, x) <= y (attained on a finite chain).

    The returned table is checked against the residuation equivalence over
    all triples; a failure is reported with a witness but the table is
    still returned for inspection.
    """
    m = t.size
    imp = []
    for x in range(m):
        for y in range(m):
            best = 0
            for z in range(m):
                if t.apply(z, x) <= y:
                    best = z
            imp.append(best)
    adjoint = True
    witness = None
    for z, x, y in product(range(m), repeat=3):
        if (t.apply(z, x) <= y) != (z <= imp[x * m + y]):
            adjoint = False
            witness = (z, x, y)
            break
    return ResiduumResult(tuple(imp), adjoint, witness)


def chain_algebra_from_mul(mul: GroupoidTable, name: str = "") -> FiniteAlgebra:
    """Assemble the full residuated chain (min, max, mul, residuum, 0, top)."""
    m = mul.size
    res = residuum_from_table(mul)
    if not res.adjoint:
        raise WorkbenchError(f"residuation fails at (z,x,y) = {res.witness}")
    tables = {
        MEET: tuple(min(x, y) for x in range(m) for y in range(m)),
        JOIN: tuple(max(x, y) for x in range(m) for y in range(m)),
        MUL: mul.table,
        IMP: res.table,
        ZERO: (0,),
        ONE: (m - 1,),
    }
    ordered = tuple(tables[sym] for sym, _ in BL_SIGNATURE.symbols)
    return FiniteAlgebra(BL_SIGNATURE, m, ordered, name)


def make_chain(spec: ChainSpec) -> FiniteAlgebra:
    """Generate the residuated chain for a spec and verify its class.

    Every generated chain must pass the BL axioms; pure Łukasiewicz chains
    must additionally pass MV.
    """
    mul = GroupoidTable(spec.points, _mul_table(spec))
    algebra = chain_algebra_from_mul(mul, spec_label(spec))
    verdict = check_axioms(algebra, "BL")
    if not verdict.ok:
        raise WorkbenchError(
            f"generated chain violates {verdict.axiom} at {verdict.witness}"
        )
    if spec.kind == KIND_LUKASIEWICZ:
        verdict = check_axioms(algebra, "MV")
        if not verdict.ok:
            raise WorkbenchError(
                f"generated chain violates {verdict.axiom} at {verdict.witness}"
            )
    return algebra


@dataclass(frozen=True)
class NatNormVerdict:
    ok: bool
    failed: str | None = None          # commutativity | neutrality | monotonicity
    witness: tuple | None = None
    continuity: str = "not-applicable"  # vacuous on finite chains
    residuum: ResiduumResult | None = None
    nabl: AxiomVerdict | None = None


def validate_nat_norm(t: GroupoidTable) -> NatNormVerdict:
    """Check the non-associative t-norm laws, then the full naBL candidate.

    Commutativity, neutrality of the top element, and monotonicity are
    required; continuity has no finite content and is recorded as
    not-applicable.  On success the residuum is computed and the derived
    chain is run through the naBL axioms.
    """
    m = t.size
    top = m - 1
    for x, y in product(range(m), repeat=2):
        if t.apply(x, y) != t.apply(y, x):
            return NatNormVerdict(False, "commutativity", (x, y))
    for x in range(m):
        if t.apply(x, top) != x:
            return NatNormVerdict(False, "neutrality", (x,))
    for x, y, z in product(range(m), repeat=3):
        if x <= y and t.apply(x, z) > t.apply(y, z):
            return NatNormVerdict(False, "monotonicity", (x, y, z))
    res = residuum_from_table(t)
    if not res.adjoint:
        return NatNormVerdict(True, residuum=res)
    algebra = chain_algebra_from_mul(t)
    return NatNormVerdict(True, residuum=res, nabl=check_axioms(algebra, "naBL"))


GRID_FORMULAS = (KIND_LUKASIEWICZ, KIND_GOEDEL, "product")


def grid_closure_check(formula: str, points: int) -> bool:
    """Whether the uniform grid with the given point count is closed under the formula.

    Łukasiewicz and Gödel close every uniform grid; the product t-norm only
    the two-point grid {0, 1}.
    """
    if formula not in GRID_FORMULAS:
        raise WorkbenchError(f"unknown t-norm formula {formula!r}")
    if points < 2:
        raise WorkbenchError("a grid needs at least the two bounds")
    if formula in (KIND_LUKASIEWICZ, KIND_GOEDEL):
        return True
    n = points - 1
    for i, j in product(range(points), repeat=2):
        v = Fraction(i, n) * Fraction(j, n)
        if v.denominator != 1 and n % v.denominator != 0:
            return False
    return True
