"""Congruence computation: principal generation, lattices, monoliths, CEP.

Generated congruences are computed by union-find closure under unary
polynomial translations (each operation with all but one argument fixed),
which is the executable form of chain-style congruence generation.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, product

from .core import (
    App,
    CapExceeded,
    FiniteAlgebra,
    Morphism,
    Term,
    Var,
    WorkbenchError,
    eval_term,
)

DEFAULT_LATTICE_CAP = 12
DEFAULT_CEP_CAP = 10


@dataclass(frozen=True)
class Congruence:
    """A partition of {0,...,n-1}, canonically labeled by least block member.

    block_id[x] is the least element of the block of x, so
    block_id[block_id[x]] == block_id[x] always holds and equality of
    congruences is plain tuple equality.
    """

    size: int
    block_id: tuple[int, ...]

    def __post_init__(self):
        if len(self.block_id) != self.size:
            raise WorkbenchError("block_id length must equal universe size")
        for x, b in enumerate(self.block_id):
            if not 0 <= b <= x:
                raise WorkbenchError("block labels must be least block members")
            if self.block_id[b] != b:
                raise WorkbenchError("block labels must be canonical")

    @staticmethod
    def identity(n: int) -> "Congruence":
        return Congruence(n, tuple(range(n)))

    @staticmethod
    def total(n: int) -> "Congruence":
        return Congruence(n, (0,) * n)

    @staticmethod
    def from_labels(labels) -> "Congruence":
        """Canonicalize an arbitrary element->class labeling."""
        n = len(labels)
        first: dict = {}
        for x in range(n):
            first.setdefault(labels[x], x)
        return Congruence(n, tuple(first[labels[x]] for x in range(n)))

    @staticmethod
    def from_blocks(n: int, blocks) -> "Congruence":
        label = [-1] * n
        for blk in blocks:
            for x in blk:
                if label[x] != -1:
                    raise WorkbenchError("blocks overlap")
                label[x] = min(blk)
        if -1 in label:
            raise WorkbenchError("blocks do not cover the universe")
        return Congruence(n, tuple(label))

    def relates(self, x: int, y: int) -> bool:
        return self.block_id[x] == self.block_id[y]

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        by_leader: dict[int, list[int]] = {}
        for x in range(self.size):
            by_leader.setdefault(self.block_id[x], []).append(x)
        return tuple(tuple(by_leader[b]) for b in sorted(by_leader))

    def block_count(self) -> int:
        return len(set(self.block_id))

    def is_identity(self) -> bool:
        return self.block_id == tuple(range(self.size))

    def is_total(self) -> bool:
        return self.block_count() <= 1

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """All related pairs (x, y) with x < y."""
        out = []
        for blk in self.blocks():
            out.extend(combinations(blk, 2))
        return tuple(out)

    def refines(self, other: "Congruence") -> bool:
        """True iff self is contained in other as a relation."""
        if self.size != other.size:
            raise WorkbenchError("size mismatch")
        return all(other.block_id[x] == other.block_id[self.block_id[x]]
                   for x in range(self.size))

    def meet(self, other: "Congruence") -> "Congruence":
        if self.size != other.size:
            raise WorkbenchError("size mismatch")
        return Congruence.from_labels(
            [(self.block_id[x], other.block_id[x]) for x in range(self.size)]
        )

    def join(self, other: "Congruence") -> "Congruence":
        """Join as equivalence relations (transitive closure of the union)."""
        if self.size != other.size:
            raise WorkbenchError("size mismatch")
        uf = _UnionFind(self.size)
        for x in range(self.size):
            uf.union(x, self.block_id[x])
            uf.union(x, other.block_id[x])
        return uf.congruence()

    def restrict(self, elements) -> "Congruence":
        """Restriction to a subset, re-indexed in increasing element order."""
        elems = sorted(elements)
        return Congruence.from_labels([self.block_id[x] for x in elems])

    def sort_key(self):
        return (self.block_count(), self.block_id)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True

    def congruence(self) -> Congruence:
        return Congruence.from_labels([self.find(x) for x in range(len(self.parent))])


def is_congruence(algebra: FiniteAlgebra, part: Congruence) -> bool:
    return compatibility_violation(algebra, part) is None


def compatibility_violation(algebra: FiniteAlgebra, part: Congruence):
    """First (symbol, args_a, args_b) violating compatibility, or None.

    One argument position is varied at a time; this is equivalent to full
    componentwise compatibility.
    """
    n = algebra.size
    if part.size != n:
        raise WorkbenchError("partition size mismatch")
    related = [blk for blk in part.blocks() if len(blk) > 1]
    for sym, arity in algebra.signature.symbols:
        if arity == 0:
            continue
        table = algebra.table(sym)
        for blk in related:
            for x, y in combinations(blk, 2):
                for pos in range(arity):
                    for params in product(range(n), repeat=arity - 1):
                        args_x = params[:pos] + (x,) + params[pos:]
                        args_y = params[:pos] + (y,) + params[pos:]
                        ix = 0
                        iy = 0
                        for a, b in zip(args_x, args_y):
                            ix = ix * n + a
                            iy = iy * n + b
                        if part.block_id[table[ix]] != part.block_id[table[iy]]:
                            return sym, args_x, args_y
    return None


# ---------------------------------------------------------------------------
# Generated congruences and Mal'cev-style witnesses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MalcevStep:
    """One chain link: endpoints are the term evaluated at the generator pair.

    The term uses variable x0 for the generator slot and x1.. for the
    fixed parameters, so eval(term, (c, *parameters)) == endpoints[0] and
    eval(term, (d, *parameters)) == endpoints[1] for generator_pair (c, d).
    """

    term: Term
    parameters: tuple[int, ...]
    generator_pair: tuple[int, int]
    endpoints: tuple[int, int]


@dataclass(frozen=True)
class MalcevWitness:
    source: int
    target: int
    steps: tuple[MalcevStep, ...]

    def replay(self, algebra: FiniteAlgebra) -> bool:
        at = self.source
        for step in self.steps:
            c, d = step.generator_pair
            lo = eval_term(algebra, step.term, (c,) + step.parameters)
            hi = eval_term(algebra, step.term, (d,) + step.parameters)
            if (lo, hi) != step.endpoints or lo != at:
                return False
            at = hi
        return at == self.target


@dataclass
class _Edge:
    other: int
    term: Term
    parameters: tuple[int, ...]
    generator_pair: tuple[int, int]
    endpoints: tuple[int, int]


def _closure(algebra: FiniteAlgebra, pairs, record: bool):
    """Union-find closure of pairs under all unary polynomial translations.

    Every union is witnessed by a single-step translation of a generator
    pair, so with record=True the edge graph is a forest whose unique
    paths are chain witnesses.
    """
    n = algebra.size
    uf = _UnionFind(n)
    graph: list[list[_Edge]] = [[] for _ in range(n)] if record else []
    todo: deque = deque()

    def add_edge(u, v, term, params, gen):
        if record:
            graph[u].append(_Edge(v, term, params, gen, (u, v)))
            graph[v].append(_Edge(u, term, params, gen, (u, v)))
        todo.append((u, v, term, params, gen))

    seed_term = Var(0)
    for c, d in pairs:
        if not (0 <= c < n and 0 <= d < n):
            raise WorkbenchError(f"pair ({c},{d}) out of range")
        if uf.union(c, d):
            add_edge(c, d, seed_term, (), (c, d))

    symbols = [(sym, arity) for sym, arity in algebra.signature.symbols if arity > 0]
    while todo:
        u, v, term, params, gen = todo.popleft()
        nparams = len(params)
        for sym, arity in symbols:
            table = algebra.table(sym)
            for pos in range(arity):
                for extra in product(range(n), repeat=arity - 1):
                    iu = 0
                    iv = 0
                    for k in range(arity):
                        if k == pos:
                            iu = iu * n + u
                            iv = iv * n + v
                        else:
                            a = extra[k if k < pos else k - 1]
                            iu = iu * n + a
                            iv = iv * n + a
                    fu, fv = table[iu], table[iv]
                    if uf.find(fu) != uf.find(fv):
                        uf.union(fu, fv)
                        if record:
                            args = []
                            j = len(params) + 1
                            for k in range(arity):
                                if k == pos:
                                    args.append(term)
                                else:
                                    args.append(Var(j))
                                    j += 1
                            new_term = App(sym, tuple(args))
                            new_params = params + extra
                        else:
                            new_term, new_params = seed_term, ()
                        add_edge(fu, fv, new_term, new_params, gen)
    return uf.congruence(), graph


def generated_congruence(algebra: FiniteAlgebra, pairs) -> Congruence:
    """Least congruence of the algebra containing the given pairs."""
    cong, _ = _closure(algebra, pairs, record=False)
    return cong


def principal_congruence(algebra: FiniteAlgebra, a: int, b: int) -> Congruence:
    return generated_congruence(algebra, [(a, b)])


def malcev_witness(algebra: FiniteAlgebra, pairs, target) -> MalcevWitness:
    """A replayable chain certifying that target lies in the generated congruence."""
    a, b = target
    cong, graph = _closure(algebra, pairs, record=True)
    if not cong.relates(a, b):
        raise WorkbenchError(f"target ({a},{b}) not in the generated congruence")
    if a == b:
        return MalcevWitness(a, b, ())
    # BFS over the recorded forest; paths are unique up to edge multiplicity.
    prev: dict[int, tuple[int, _Edge]] = {a: (a, None)}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for edge in graph[x]:
            if edge.other not in prev:
                prev[edge.other] = (x, edge)
                queue.append(edge.other)
    steps = []
    x = b
    chain = []
    while x != a:
        px, edge = prev[x]
        chain.append((px, x, edge))
        x = px
    chain.reverse()
    for u, v, edge in chain:
        c, d = edge.generator_pair
        if edge.endpoints == (u, v):
            steps.append(MalcevStep(edge.term, edge.parameters, (c, d), (u, v)))
        else:
            steps.append(MalcevStep(edge.term, edge.parameters, (d, c), (u, v)))
    return MalcevWitness(a, b, tuple(steps))


# ---------------------------------------------------------------------------
# Lattice, monolith, CEP
# ---------------------------------------------------------------------------

def congruence_lattice(algebra: FiniteAlgebra, cap: int = DEFAULT_LATTICE_CAP):
    """All congruences: principal congruences closed under pairwise join.

    Sorted from finest to coarsest (decreasing block count), ties broken by
    block_id; the identity congruence comes first, the total one last.
    """
    n = algebra.size
    if n > cap:
        raise CapExceeded(f"congruence lattice cap exceeded: {n} > {cap}")
    found: set[Congruence] = {Congruence.identity(n)}
    principals = set()
    for a in range(n):
        for b in range(a + 1, n):
            principals.add(generated_congruence(algebra, [(a, b)]))
    found |= principals
    frontier = list(principals)
    while frontier:
        theta = frontier.pop()
        for other in list(found):
            joined = theta.join(other)
            if joined not in found:
                found.add(joined)
                frontier.append(joined)
    return tuple(sorted(found, key=lambda c: (-c.block_count(), c.block_id)))


def monolith(algebra: FiniteAlgebra, cap: int = DEFAULT_LATTICE_CAP) -> Congruence | None:
    """The least non-identity congruence when one exists, else None.

    Computed as the meet of all principal congruences: every proper
    congruence contains a principal one, so a non-identity meet is the
    unique atom below everything.  One-element algebras are never
    subdirectly irreducible.
    """
    n = algebra.size
    if n > cap:
        raise CapExceeded(f"monolith cap exceeded: {n} > {cap}")
    if n == 1:
        return None
    result: Congruence | None = None
    for a in range(n):
        for b in range(a + 1, n):
            theta = generated_congruence(algebra, [(a, b)])
            result = theta if result is None else result.meet(theta)
            if result.is_identity():
                return None
    return result


def is_subdirectly_irreducible(algebra: FiniteAlgebra, cap: int = DEFAULT_LATTICE_CAP) -> bool:
    return monolith(algebra, cap) is not None


def cep_extension(
    algebra: FiniteAlgebra,
    embedding: Morphism,
    theta: Congruence,
    cap: int = DEFAULT_CEP_CAP,
) -> Congruence | None:
    """Least congruence of the parent restricting to theta, or None.

    The congruence generated by the embedded pairs is contained in every
    extension, so it is the least extension exactly when its restriction
    is theta; otherwise no extension exists.
    """
    if algebra.size > cap:
        raise CapExceeded(f"CEP search cap exceeded: {algebra.size} > {cap}")
    if embedding.codomain.tables != algebra.tables or embedding.codomain.size != algebra.size:
        raise WorkbenchError("embedding codomain is not the given algebra")
    if not embedding.is_injective():
        raise WorkbenchError("subalgebra embedding must be injective")
    if theta.size != embedding.domain.size:
        raise WorkbenchError("theta does not live on the subalgebra")
    image_pairs = [(embedding.map[x], embedding.map[y]) for x, y in theta.pairs()]
    phi = generated_congruence(algebra, image_pairs)
    restricted = Congruence.from_labels(
        [phi.block_id[embedding.map[x]] for x in range(theta.size)]
    )
    if restricted == theta:
        return phi
    return None


def iter_partitions(n: int):
    """All partitions of {0,...,n-1} as Congruence values (restricted growth)."""
    labels = [0] * n

    def rec(i: int, maxused: int):
        if i == n:
            yield Congruence.from_labels(labels)
            return
        for c in range(maxused + 2):
            labels[i] = c
            yield from rec(i + 1, max(maxused, c))

    if n == 0:
        return
    yield from rec(1, 0)
