"""Independent brute-force oracles used to freeze expected test values.

Everything here avoids the library's own computation paths: partitions are
enumerated recursively, compatibility is checked from the definition, and
morphisms are filtered from all set maps.
"""
from itertools import product

from smalg.congruence import Congruence
from smalg.core import Morphism


def all_partitions(n):
    """Every partition of {0,...,n-1} as a Congruence, by block assignment."""
    out = []

    def rec(x, blocks):
        if x == n:
            out.append(Congruence.from_blocks(n, [list(b) for b in blocks]))
            return
        for b in blocks:
            b.append(x)
            rec(x + 1, blocks)
            b.pop()
        blocks.append([x])
        rec(x + 1, blocks)
        blocks.pop()

    rec(0, [])
    return out


def is_compatible(algebra, part):
    """Definition-level congruence test: full componentwise compatibility."""
    n = algebra.size
    for sym, arity in algebra.signature.symbols:
        if arity == 0:
            continue
        for xs in product(range(n), repeat=arity):
            for ys in product(range(n), repeat=arity):
                if all(part.relates(x, y) for x, y in zip(xs, ys)):
                    if not part.relates(algebra.apply(sym, *xs), algebra.apply(sym, *ys)):
                        return False
    return True


def compatible_partitions(algebra):
    return [p for p in all_partitions(algebra.size) if is_compatible(algebra, p)]


def least_congruence_containing(algebra, pairs):
    """Meet of all compatible partitions relating every given pair."""
    best = None
    for p in compatible_partitions(algebra):
        if all(p.relates(a, b) for a, b in pairs):
            best = p if best is None else best.meet(p)
    return best


def brute_force_morphisms(a, b, idempotent=False, injective=False):
    """All homomorphisms a -> b by filtering every set map."""
    out = []
    for m in product(range(b.size), repeat=a.size):
        mo = Morphism(a, b, m)
        if mo.violation() is not None:
            continue
        if idempotent and any(m[m[x]] != m[x] for x in range(a.size)):
            continue
        if injective and len(set(m)) != len(m):
            continue
        out.append(m)
    return sorted(out)


def brute_force_filters(algebra):
    """All filter subsets by scanning the powerset (needs the residuated signature)."""
    n = algebra.size
    mul = algebra.table("⊙")
    meet = algebra.table("∧")
    one = algebra.table("1")[0]
    found = []
    for bits in product((0, 1), repeat=n):
        members = {x for x in range(n) if bits[x]}
        if one not in members:
            continue
        if any(mul[x * n + y] not in members for x in members for y in members):
            continue
        if any(
            meet[x * n + y] == x and y not in members
            for x in members for y in range(n)
        ):
            continue
        found.append(tuple(sorted(members)))
    return sorted(found, key=lambda f: (len(f), f))
