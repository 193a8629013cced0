"""Finite algebras of arbitrary signature.

Everything operates on total operation tables over the universe
{0, ..., n-1}.  Values are immutable and hashable; all operations are
pure functions.  External element labels live in the file format only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product


DEFAULT_EVAL_CAP = 10**7


class WorkbenchError(Exception):
    """Base class for all errors raised by this package."""


class SignatureMismatch(WorkbenchError):
    pass


class EvalError(WorkbenchError):
    pass


class CapExceeded(WorkbenchError):
    pass


class NotCompatible(WorkbenchError):
    """A partition is not compatible with some operation.

    Carries the violating symbol and the pair of argument tuples.
    """

    def __init__(self, symbol, args_a, args_b):
        self.symbol = symbol
        self.args_a = tuple(args_a)
        self.args_b = tuple(args_b)
        super().__init__(
            f"partition not compatible with {symbol} at {self.args_a} ~ {self.args_b}"
        )


@dataclass(frozen=True)
class Signature:
    """An ordered sequence of (name, arity) pairs.

    The order is fixed and determines table order in files.
    """

    symbols: tuple[tuple[str, int], ...]

    def __post_init__(self):
        names = [name for name, _ in self.symbols]
        if len(set(names)) != len(names):
            raise SignatureMismatch(f"duplicate symbol names in {names}")
        for name, arity in self.symbols:
            if arity < 0:
                raise SignatureMismatch(f"negative arity for {name}")

    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.symbols)

    def arity(self, name: str) -> int:
        for sym, arity in self.symbols:
            if sym == name:
                return arity
        raise SignatureMismatch(f"unknown symbol {name!r}")

    def index(self, name: str) -> int:
        for i, (sym, _) in enumerate(self.symbols):
            if sym == name:
                return i
        raise SignatureMismatch(f"unknown symbol {name!r}")

    def __contains__(self, name: str) -> bool:
        return any(sym == name for sym, _ in self.symbols)


def signature(*symbols: tuple[str, int]) -> Signature:
    return Signature(tuple(symbols))


@dataclass(frozen=True)
class FiniteAlgebra:
    """A finite algebra: signature plus one total table per symbol.

    Tables are flat, row-major tuples: a k-ary table has n**k entries and
    the tuple (x1, ..., xk) is found at index x1*n**(k-1) + ... + xk.
    Nullary tables hold exactly one entry (the constant's value).
    """

    signature: Signature
    size: int
    tables: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = self.size
        if n <= 0:
            raise WorkbenchError("universe must be non-empty")
        if len(self.tables) != len(self.signature.symbols):
            raise SignatureMismatch("one table per symbol required")
        for (sym, arity), table in zip(self.signature.symbols, self.tables):
            if len(table) != n**arity:
                raise WorkbenchError(
                    f"table for {sym}/{arity} has {len(table)} entries, expected {n**arity}"
                )
            for v in table:
                if not 0 <= v < n:
                    raise WorkbenchError(f"table entry {v} for {sym} out of range 0..{n - 1}")

    @property
    def universe(self) -> range:
        return range(self.size)

    def table(self, sym: str) -> tuple[int, ...]:
        return self.tables[self.signature.index(sym)]

    def apply(self, sym: str, *args: int) -> int:
        arity = self.signature.arity(sym)
        if len(args) != arity:
            raise EvalError(f"{sym} expects {arity} arguments, got {len(args)}")
        idx = 0
        for a in args:
            idx = idx * self.size + a
        return self.tables[self.signature.index(sym)][idx]

    def constants(self) -> dict[str, int]:
        return {
            sym: self.tables[i][0]
            for i, (sym, arity) in enumerate(self.signature.symbols)
            if arity == 0
        }

    def rename(self, name: str) -> "FiniteAlgebra":
        return FiniteAlgebra(self.signature, self.size, self.tables, name)


def make_algebra(
    sig: Signature, size: int, tables: dict[str, tuple[int, ...]], name: str = ""
) -> FiniteAlgebra:
    """Build an algebra from a name->flat-table mapping, in signature order."""
    missing = [sym for sym, _ in sig.symbols if sym not in tables]
    if missing:
        raise SignatureMismatch(f"missing tables for {missing}")
    ordered = tuple(tuple(tables[sym]) for sym, _ in sig.symbols)
    return FiniteAlgebra(sig, size, ordered, name)


# ---------------------------------------------------------------------------
# Terms and identities
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class App:
    symbol: str
    args: tuple = ()


Term = Var | App


def var(i: int) -> Var:
    return Var(i)


def app(symbol: str, *args: Term) -> App:
    return App(symbol, tuple(args))


def term_depth(t: Term) -> int:
    if isinstance(t, Var):
        return 0
    if not t.args:
        return 1
    return 1 + max(term_depth(a) for a in t.args)


def term_vars(t: Term) -> set[int]:
    if isinstance(t, Var):
        return {t.index}
    out: set[int] = set()
    for a in t.args:
        out |= term_vars(a)
    return out


def term_str(t: Term) -> str:
    if isinstance(t, Var):
        return f"x{t.index}"
    if not t.args:
        return t.symbol
    return f"{t.symbol}({', '.join(term_str(a) for a in t.args)})"


def check_term(sig: Signature, t: Term) -> None:
    """Raise EvalError unless t is well-formed over sig."""
    if isinstance(t, Var):
        if t.index < 0:
            raise EvalError(f"negative variable index {t.index}")
        return
    if t.symbol not in sig:
        raise EvalError(f"unknown symbol {t.symbol!r}")
    if len(t.args) != sig.arity(t.symbol):
        raise EvalError(
            f"{t.symbol} expects {sig.arity(t.symbol)} arguments, got {len(t.args)}"
        )
    for a in t.args:
        check_term(sig, a)


def eval_term(algebra: FiniteAlgebra, t: Term, env) -> int:
    """Value of t in the algebra under the given variable assignment."""
    if isinstance(t, Var):
        if t.index >= len(env):
            raise EvalError(f"variable x{t.index} not bound (env has {len(env)} entries)")
        return env[t.index]
    if t.symbol not in algebra.signature:
        raise EvalError(f"unknown symbol {t.symbol!r}")
    arity = algebra.signature.arity(t.symbol)
    if len(t.args) != arity:
        raise EvalError(f"{t.symbol} expects {arity} arguments, got {len(t.args)}")
    args = [eval_term(algebra, a, env) for a in t.args]
    idx = 0
    for a in args:
        idx = idx * algebra.size + a
    return algebra.tables[algebra.signature.index(t.symbol)][idx]


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term
    variable_count: int

    def __post_init__(self):
        used = term_vars(self.lhs) | term_vars(self.rhs)
        if used and max(used) >= self.variable_count:
            raise EvalError(
                f"variable x{max(used)} exceeds declared count {self.variable_count}"
            )


@dataclass(frozen=True)
class IdentityCheck:
    holds: bool
    witness: tuple[int, ...] | None = None


def holds_identity(
    algebra: FiniteAlgebra, ident: Identity, cap: int = DEFAULT_EVAL_CAP
) -> IdentityCheck:
    """Exhaustively check lhs = rhs under all assignments.

    Returns the lexicographically least witnessing assignment on failure.
    Aborts with CapExceeded when size**variable_count exceeds the cap;
    sampling is never used.
    """
    check_term(algebra.signature, ident.lhs)
    check_term(algebra.signature, ident.rhs)
    n = algebra.size
    total = n**ident.variable_count
    if total > cap:
        raise CapExceeded(
            f"identity check too large: {n}**{ident.variable_count} = {total} > {cap}"
        )
    for env in product(range(n), repeat=ident.variable_count):
        if eval_term(algebra, ident.lhs, env) != eval_term(algebra, ident.rhs, env):
            return IdentityCheck(False, env)
    return IdentityCheck(True, None)


# ---------------------------------------------------------------------------
# Morphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Morphism:
    domain: FiniteAlgebra
    codomain: FiniteAlgebra
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.domain.size:
            raise WorkbenchError("morphism map length must equal domain size")
        for v in self.map:
            if not 0 <= v < self.codomain.size:
                raise WorkbenchError(f"morphism image {v} out of codomain range")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def violation(self) -> tuple[str, tuple[int, ...]] | None:
        """First (symbol, args) where f(g_dom(args)) != g_cod(f(args)), or None."""
        if self.domain.signature != self.codomain.signature:
            raise SignatureMismatch("domain and codomain signatures differ")
        n = self.domain.size
        for sym, arity in self.domain.signature.symbols:
            for args in product(range(n), repeat=arity):
                lhs = self.map[self.domain.apply(sym, *args)]
                rhs = self.codomain.apply(sym, *(self.map[a] for a in args))
                if lhs != rhs:
                    return sym, args
        return None

    def is_homomorphism(self) -> bool:
        return self.violation() is None

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.codomain.size

    def compose(self, inner: "Morphism") -> "Morphism":
        """self after inner."""
        return Morphism(inner.domain, self.codomain, tuple(self.map[x] for x in inner.map))


def verified_morphism(domain, codomain, mapping) -> Morphism:
    m = Morphism(domain, codomain, tuple(mapping))
    bad = m.violation()
    if bad is not None:
        raise WorkbenchError(f"map is not a homomorphism: violates {bad[0]} at {bad[1]}")
    return m


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def direct_product(a: FiniteAlgebra, b: FiniteAlgebra):
    """Product on pairs encoded as i*|B| + j, with coordinatewise operations.

    Returns (product, (first projection, second projection)); both
    projections are verified morphisms.
    """
    if a.signature != b.signature:
        raise SignatureMismatch("direct product requires equal signatures")
    n = a.size * b.size
    tables = []
    for sym, arity in a.signature.symbols:
        ta = a.table(sym)
        tb = b.table(sym)
        entries = []
        for args in product(range(n), repeat=arity):
            ia = 0
            ib = 0
            for x in args:
                ia = ia * a.size + x // b.size
                ib = ib * b.size + x % b.size
            entries.append(ta[ia] * b.size + tb[ib])
        tables.append(tuple(entries))
    name = f"({a.name}x{b.name})" if a.name and b.name else ""
    prod = FiniteAlgebra(a.signature, n, tuple(tables), name)
    p1 = verified_morphism(prod, a, tuple(x // b.size for x in range(n)))
    p2 = verified_morphism(prod, b, tuple(x % b.size for x in range(n)))
    return prod, (p1, p2)


def subuniverse_generated(algebra: FiniteAlgebra, seed) -> tuple[int, ...]:
    """Least subset containing seed and all constants, closed under all operations."""
    n = algebra.size
    members = set(seed)
    for x in members:
        if not 0 <= x < n:
            raise WorkbenchError(f"seed element {x} out of range")
    for sym, arity in algebra.signature.symbols:
        if arity == 0:
            members.add(algebra.table(sym)[0])
    changed = True
    while changed:
        changed = False
        current = sorted(members)
        for sym, arity in algebra.signature.symbols:
            if arity == 0:
                continue
            table = algebra.table(sym)
            for args in product(current, repeat=arity):
                idx = 0
                for x in args:
                    idx = idx * n + x
                v = table[idx]
                if v not in members:
                    members.add(v)
                    changed = True
    return tuple(sorted(members))


def induced_subalgebra(algebra: FiniteAlgebra, subuniverse) -> tuple[FiniteAlgebra, Morphism]:
    """Subalgebra on a closed subset, re-indexed in increasing element order.

    Returns (subalgebra, inclusion morphism into the parent).
    """
    elems = tuple(sorted(set(subuniverse)))
    pos = {x: i for i, x in enumerate(elems)}
    m = len(elems)
    tables = []
    for sym, arity in algebra.signature.symbols:
        entries = []
        for args in product(elems, repeat=arity):
            v = algebra.apply(sym, *args)
            if v not in pos:
                raise WorkbenchError(f"subset not closed under {sym} at {args} -> {v}")
            entries.append(pos[v])
        tables.append(tuple(entries))
    sub = FiniteAlgebra(algebra.signature, m, tuple(tables),
                        f"{algebra.name}|{elems}" if algebra.name else "")
    incl = verified_morphism(sub, algebra, elems)
    return sub, incl


def quotient(algebra: FiniteAlgebra, theta) -> tuple[FiniteAlgebra, Morphism]:
    """Quotient by a congruence; raises NotCompatible on any violation.

    Block universe is ordered by least member; the canonical map is a
    verified surjective morphism.
    """
    n = algebra.size
    if theta.size != n:
        raise WorkbenchError("congruence universe size mismatch")
    leaders = sorted(set(theta.block_id))
    pos = {b: i for i, b in enumerate(leaders)}
    cls = tuple(pos[theta.block_id[x]] for x in range(n))
    m = len(leaders)
    tables = []
    for sym, arity in algebra.signature.symbols:
        entries = {}
        for args in product(range(n), repeat=arity):
            key = tuple(cls[x] for x in args)
            v = cls[algebra.apply(sym, *args)]
            if key in entries:
                if entries[key][0] != v:
                    raise NotCompatible(sym, args, entries[key][1])
            else:
                entries[key] = (v, args)
        flat = []
        for key in product(range(m), repeat=arity):
            flat.append(entries[key][0])
        tables.append(tuple(flat))
    q = FiniteAlgebra(algebra.signature, m, tuple(tables),
                      f"{algebra.name}/~" if algebra.name else "")
    canon = verified_morphism(algebra, q, cls)
    return q, canon


# ---------------------------------------------------------------------------
# Morphism enumeration
# ---------------------------------------------------------------------------

MODE_ALL = "all"
MODE_ENDO = "endomorphisms"
MODE_IDEMPOTENT = "idempotent-endomorphisms"
MODE_EMBED = "embeddings"


def enumerate_morphisms(a: FiniteAlgebra, b: FiniteAlgebra, mode: str = MODE_ALL):
    """All homomorphisms a -> b in the requested mode, sorted by map tuple.

    Backtracking over element images; once the images of a generating set
    are fixed the remaining images are forced by closure, which is the
    main pruning lever.  Constants seed the search.
    """
    if a.signature != b.signature:
        raise SignatureMismatch("morphism enumeration requires equal signatures")
    if mode in (MODE_ENDO, MODE_IDEMPOTENT) and (a.size != b.size or a.tables != b.tables):
        raise WorkbenchError("endomorphism modes require identical domain and codomain")
    if mode not in (MODE_ALL, MODE_ENDO, MODE_IDEMPOTENT, MODE_EMBED):
        raise WorkbenchError(f"unknown mode {mode!r}")

    n = a.size
    idempotent = mode == MODE_IDEMPOTENT
    injective = mode == MODE_EMBED
    symbols = [(sym, arity) for sym, arity in a.signature.symbols if arity > 0]
    results: list[tuple[int, ...]] = []

    def propagate(images: dict[int, int]) -> dict[int, int] | None:
        """Close the partial map under operations; None on contradiction."""
        images = dict(images)
        changed = True
        while changed:
            changed = False
            known = sorted(images)
            for sym, arity in symbols:
                for args in product(known, repeat=arity):
                    src = a.apply(sym, *args)
                    dst = b.apply(sym, *(images[x] for x in args))
                    if src in images:
                        if images[src] != dst:
                            return None
                    else:
                        images[src] = dst
                        changed = True
                        if idempotent:
                            if dst in images:
                                if images[dst] != dst:
                                    return None
                            else:
                                images[dst] = dst
            if idempotent:
                for x, y in list(images.items()):
                    if y in images:
                        if images[y] != y:
                            return None
                    else:
                        images[y] = y
                        changed = True
        if injective:
            seen = set()
            for y in images.values():
                if y in seen:
                    return None
                seen.add(y)
        return images

    start: dict[int, int] = {}
    for sym, arity in a.signature.symbols:
        if arity == 0:
            ca = a.table(sym)[0]
            cb = b.table(sym)[0]
            if start.get(ca, cb) != cb:
                return ()
            start[ca] = cb
    start_closed = propagate(start)
    if start_closed is None:
        return ()

    def extend(images: dict[int, int]):
        if len(images) == n:
            results.append(tuple(images[x] for x in range(n)))
            return
        x = min(y for y in range(n) if y not in images)
        for y in range(b.size):
            if injective and y in images.values():
                continue
            trial = dict(images)
            trial[x] = y
            if idempotent:
                if trial.get(y, y) != y:
                    continue
                trial[y] = y
            closed = propagate(trial)
            if closed is not None:
                extend(closed)

    extend(start_closed)
    results.sort()
    return tuple(Morphism(a, b, m) for m in results)


def find_isomorphism(a: FiniteAlgebra, b: FiniteAlgebra) -> Morphism | None:
    """First isomorphism a -> b in map order, or None."""
    if a.signature != b.signature or a.size != b.size:
        return None
    embeds = enumerate_morphisms(a, b, MODE_EMBED)
    return embeds[0] if embeds else None
