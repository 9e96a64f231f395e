"""Finite abelian group arithmetic over canonical invariant factors.

A group is described by its invariant-factor chain ``n1 | n2 | ... | nk``
and elements are coordinate tuples reduced modulo those factors.  At the
scale this package targets (orders up to a few thousand) everything is
explicit: subgroups store their full element set and quotients keep a
complete coset table.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

Element = tuple[int, ...]

__all__ = [
    "Element",
    "Group",
    "Subgroup",
    "QuotientView",
    "DirectProduct",
    "SubgroupEmbedding",
    "make_group",
    "subgroup_closure",
    "quotient",
    "classify_abelian",
    "abelian_basis",
    "direct_product",
    "sylow_cyclic_nontrivial",
    "subgroup_as_group",
    "parse_group",
    "parse_element",
    "parse_generator_list",
    "is_prime",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _crt(residues: Sequence[tuple[int, int]]) -> int:
    """Combine residues (r_i mod q_i) with pairwise coprime moduli."""
    r, q = 0, 1
    for r2, q2 in residues:
        r = r + q * (((r2 - r) * pow(q, -1, q2)) % q2)
        q *= q2
    return r


def _canonical_chain(
    raw: Sequence[int],
) -> tuple[tuple[int, ...], Callable[[Sequence[int]], Element]]:
    """Reduce a factor list to an invariant chain plus the coordinate map.

    Each raw factor is split into prime powers; for every prime the largest
    power is routed to the largest invariant factor, the second largest to
    the next one, and so on.  The returned mapper carries raw coordinates to
    canonical ones through per-slot CRT recombination and is an isomorphism
    by construction.  When ``raw`` is already a chain the mapper is the
    identity.
    """
    by_prime: dict[int, list[tuple[int, int]]] = {}
    for idx, m in enumerate(raw):
        for p, e in _factorize(m).items():
            by_prime.setdefault(p, []).append((e, idx))
    for lst in by_prime.values():
        lst.sort(key=lambda t: (-t[0], -t[1]))
    k = max((len(v) for v in by_prime.values()), default=0)
    slot_parts: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    for p in sorted(by_prime):
        for t, (e, idx) in enumerate(by_prime[p]):
            slot_parts[t].append((p**e, idx))
    chain = tuple(math.prod(q for q, _ in parts) for parts in reversed(slot_parts))

    def mapper(coords: Sequence[int]) -> Element:
        out = [_crt([(coords[idx] % q, q) for q, idx in parts]) for parts in slot_parts]
        return tuple(reversed(out))

    return chain, mapper


@dataclass(frozen=True)
class Group:
    """Finite abelian group in invariant-factor form.

    ``factors`` is the canonical chain; the empty tuple is the trivial
    group.  Construct through :func:`make_group`, which normalizes
    arbitrary factor lists.
    """

    factors: tuple[int, ...]

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def is_cyclic(self) -> bool:
        return len(self.factors) <= 1

    @property
    def exponent(self) -> int:
        return self.factors[-1] if self.factors else 1

    def zero(self) -> Element:
        return (0,) * len(self.factors)

    def _check(self, a: Element) -> None:
        if len(a) != len(self.factors):
            raise ValueError(
                f"element {a!r} has {len(a)} coordinates, expected {len(self.factors)}"
            )

    def contains(self, a: object) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == len(self.factors)
            and all(isinstance(c, int) and 0 <= c < n for c, n in zip(a, self.factors))
        )

    def element(self, coords: Sequence[int]) -> Element:
        """Reduce arbitrary integer coordinates into this group."""
        if len(coords) != len(self.factors):
            raise ValueError(
                f"expected {len(self.factors)} coordinates, got {len(coords)}"
            )
        return tuple(c % n for c, n in zip(coords, self.factors))

    def add(self, a: Element, b: Element) -> Element:
        self._check(a)
        self._check(b)
        return tuple((x + y) % n for x, y, n in zip(a, b, self.factors))

    def neg(self, a: Element) -> Element:
        self._check(a)
        return tuple((-x) % n for x, n in zip(a, self.factors))

    def sub(self, a: Element, b: Element) -> Element:
        self._check(a)
        self._check(b)
        return tuple((x - y) % n for x, y, n in zip(a, b, self.factors))

    def scale(self, k: int, a: Element) -> Element:
        self._check(a)
        return tuple((k * x) % n for x, n in zip(a, self.factors))

    def element_order(self, a: Element) -> int:
        self._check(a)
        return math.lcm(*(n // math.gcd(n, x) for x, n in zip(a, self.factors)), 1)

    @cached_property
    def _element_list(self) -> tuple[Element, ...]:
        return tuple(itertools.product(*(range(n) for n in self.factors)))

    def elements(self) -> tuple[Element, ...]:
        """All elements in lexicographic coordinate order."""
        return self._element_list

    def notation(self) -> str:
        return "Z(" + ",".join(str(n) for n in self.factors) + ")"

    def format_element(self, a: Element) -> str:
        self._check(a)
        if len(self.factors) == 1:
            return str(a[0])
        return "(" + ",".join(str(c) for c in a) + ")"

    def __str__(self) -> str:
        return self.notation()


def make_group(factors: Iterable[int]) -> Group:
    """Build a group from any factor list, normalizing to canonical form.

    Normalization preserves the isomorphism class but may merge or reorder
    factors, e.g. ``[2, 5]`` becomes ``[10]``.
    """
    raw = tuple(factors)
    for f in raw:
        if not isinstance(f, int) or f < 2:
            raise ValueError(f"group factors must be integers >= 2, got {f!r}")
    chain, _ = _canonical_chain(raw)
    return Group(chain)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup stored as its full, sorted element set."""

    parent: Group
    generators: tuple[Element, ...]
    elements: tuple[Element, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def _member_set(self) -> frozenset[Element]:
        return frozenset(self.elements)

    def contains(self, a: Element) -> bool:
        return a in self._member_set

    def __str__(self) -> str:
        return "{" + ", ".join(self.parent.format_element(a) for a in self.elements) + "}"


def subgroup_closure(group: Group, generators: Iterable[Element]) -> Subgroup:
    """Close a generator list under addition and negation."""
    gens = tuple(group.element(g) for g in generators)
    seen = {group.zero()}
    frontier = [group.zero()]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = group.add(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    # negation closure is automatic in a finite group: -a = (ord(a)-1)*a
    return Subgroup(parent=group, generators=gens, elements=tuple(sorted(seen)))


def _explicit_identity(elements: Sequence, add: Callable) -> object:
    for e in elements:
        if add(e, e) == e:
            return e
    raise ValueError("composition law has no identity element")


def _explicit_order(a, add: Callable, zero, limit: int) -> int:
    k = 1
    cur = a
    while cur != zero:
        cur = add(cur, a)
        k += 1
        if k > limit:
            raise ValueError("element order exceeds group size; law is not a group")
    return k


def abelian_basis(elements: Sequence, add: Callable) -> tuple[tuple[int, ...], tuple]:
    """Invariant factors plus an aligned basis for an explicit abelian group.

    Works on any finite abelian group given by its element list and
    composition law.  Repeatedly splits off the cyclic factor generated by
    the first element of maximal order, recurses on the quotient and lifts
    the quotient basis back, order for order.  Returns the ascending factor
    chain and basis elements such that every group element is uniquely
    ``sum(c_i * b_i)`` with ``c_i`` ranging modulo the factors.
    """
    elems = sorted(elements)
    n = len(elems)
    zero = _explicit_identity(elems, add)
    if n == 1:
        return (), ()
    orders = {a: _explicit_order(a, add, zero, n) for a in elems}
    m = max(orders.values())
    gen = next(a for a in elems if orders[a] == m)
    cyc = [zero]
    cur = gen
    while cur != zero:
        cyc.append(cur)
        cur = add(cur, gen)
    rep_of: dict = {}
    for a in elems:
        if a in rep_of:
            continue
        members = [add(a, c) for c in cyc]
        r = min(members)
        for b in members:
            rep_of[b] = r
    qelems = sorted(set(rep_of.values()))

    def qadd(r1, r2):
        return rep_of[add(r1, r2)]

    qfactors, qbasis = abelian_basis(qelems, qadd)
    lifts = []
    for rbar, r in zip(qbasis, qfactors):
        coset = sorted(add(rbar, z) for z in cyc)
        lifts.append(next(c for c in coset if _explicit_order(c, add, zero, n) == r))
    factors = qfactors + (m,)
    basis = tuple(lifts) + (gen,)
    if math.prod(factors) != n:
        raise ValueError("factor product does not match group size; law is not a group")
    return factors, basis


def _span_map(factors: Sequence[int], basis: Sequence, add: Callable, zero) -> dict:
    """Map each coordinate tuple over ``factors`` to its basis combination."""
    span = {(): zero}
    for f, b in zip(factors, basis):
        nxt = {}
        multiple = zero
        for c in range(f):
            for coords, val in span.items():
                nxt[coords + (c,)] = add(val, multiple)
            multiple = add(multiple, b)
        span = nxt
    if len(set(span.values())) != len(span):
        raise ValueError("basis does not span the group freely")
    return span


def classify_abelian(
    elements: Sequence, add: Callable, *, validate: bool = False
) -> tuple[int, ...]:
    """Canonical invariant factors of an explicit finite abelian group.

    With ``validate=True`` the law is first checked for closure,
    commutativity and associativity (cubic in the group order; intended for
    debugging small inputs).
    """
    elems = sorted(elements)
    if validate:
        eset = set(elems)
        for a in elems:
            for b in elems:
                ab = add(a, b)
                if ab not in eset:
                    raise ValueError(f"law is not closed at {a!r} + {b!r}")
                if ab != add(b, a):
                    raise ValueError(f"law is not commutative at {a!r}, {b!r}")
        for a in elems:
            for b in elems:
                for c in elems:
                    if add(add(a, b), c) != add(a, add(b, c)):
                        raise ValueError("law is not associative")
    return abelian_basis(elems, add)[0]


class QuotientView:
    """Coset structure of ``parent / kernel`` with a canonical chart.

    ``group`` is the quotient expressed in invariant-factor form and the
    view provides the two directions of the canonical chart: ``project``
    sends a parent element to its coset written as an element of ``group``,
    and ``lift`` sends such an element back to the lexicographically least
    representative of its coset.  When the kernel is trivial the chart is
    the identity.
    """

    def __init__(self, parent: Group, kernel: Subgroup) -> None:
        if kernel.parent != parent:
            raise ValueError("kernel is not a subgroup of the given group")
        self.parent = parent
        self.kernel = kernel
        rep_of: dict[Element, Element] = {}
        for a in parent.elements():
            if a in rep_of:
                continue
            members = [parent.add(a, h) for h in kernel.elements]
            r = min(members)
            for b in members:
                rep_of[b] = r
        reps = tuple(sorted(set(rep_of.values())))
        self.coset_reps = reps
        rep_index = {r: i for i, r in enumerate(reps)}
        self._coset_of: dict[Element, int] = {a: rep_index[rep_of[a]] for a in rep_of}

        if kernel.order == 1:
            self.structure = parent.factors
            self.group = parent
            self._rep_of_canonical = {a: a for a in reps}
        else:

            def qadd(r1: Element, r2: Element) -> Element:
                return rep_of[parent.add(r1, r2)]

            factors, basis = abelian_basis(reps, qadd)
            self.structure = factors
            self.group = Group(factors)
            # the zero coset is represented by the parent zero (lex minimum)
            self._rep_of_canonical = _span_map(factors, basis, qadd, parent.zero())
        self._canonical_of_rep = {r: q for q, r in self._rep_of_canonical.items()}

    @property
    def coset_count(self) -> int:
        return len(self.coset_reps)

    def coset_index(self, a: Element) -> int:
        return self._coset_of[a]

    def project(self, a: Element) -> Element:
        """Image of ``a`` in the quotient, as an element of ``self.group``."""
        return self._canonical_of_rep[self.coset_reps[self._coset_of[a]]]

    def lift(self, q: Element) -> Element:
        """Least representative of the coset written as quotient element ``q``."""
        return self._rep_of_canonical[q]


def quotient(group: Group, kernel: Subgroup) -> QuotientView:
    """Coset partition of ``group`` by ``kernel`` with classified structure."""
    return QuotientView(group, kernel)


class DirectProduct:
    """Direct product with embeddings consistent with raw coordinates."""

    def __init__(self, left: Group, right: Group) -> None:
        self.left = left
        self.right = right
        raw = left.factors + right.factors
        chain, mapper = _canonical_chain(raw)
        self.group = Group(chain)
        self._mapper = mapper

    def embed_left(self, a: Element) -> Element:
        self.left._check(a)
        return self._mapper(a + self.right.zero())

    def embed_right(self, b: Element) -> Element:
        self.right._check(b)
        return self._mapper(self.left.zero() + b)

    def pair(self, a: Element, b: Element) -> Element:
        self.left._check(a)
        self.right._check(b)
        return self._mapper(a + b)


def direct_product(left: Group, right: Group) -> DirectProduct:
    return DirectProduct(left, right)


def sylow_cyclic_nontrivial(group: Group, p: int) -> bool:
    """Whether the Sylow ``p``-subgroup is nontrivial and cyclic.

    Reads off the invariant factors: nontrivial means ``p`` divides the
    order, cyclic means ``p`` divides only the largest factor.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if group.order % p != 0:
        return False
    return all(n % p != 0 for n in group.factors[:-1])


class SubgroupEmbedding:
    """A subgroup recast as a standalone group plus both chart directions."""

    def __init__(self, sub: Subgroup) -> None:
        parent = sub.parent
        factors, basis = abelian_basis(sub.elements, parent.add)
        self.subgroup = sub
        self.group = Group(factors)
        span = _span_map(factors, basis, parent.add, parent.zero())
        self._to_parent = span
        self._from_parent = {v: k for k, v in span.items()}

    def to_parent(self, a: Element) -> Element:
        return self._to_parent[a]

    def from_parent(self, a: Element) -> Element:
        return self._from_parent[a]


def subgroup_as_group(sub: Subgroup) -> SubgroupEmbedding:
    return SubgroupEmbedding(sub)


_GROUP_RE = re.compile(r"^Z\(\s*([0-9,\s]*)\)$")


def parse_group(text: str) -> Group:
    """Parse group notation ``Z(n1,...,nk)``."""
    m = _GROUP_RE.match(text.strip())
    if not m:
        raise ValueError(f"invalid group notation {text!r}; expected Z(n1,...,nk)")
    body = m.group(1).strip()
    if not body:
        return make_group([])
    try:
        factors = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"invalid group notation {text!r}") from None
    return make_group(factors)


def parse_element(group: Group, text: str) -> Element:
    """Parse ``(c1,...,ck)`` coordinates; bare integers for cyclic groups."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        body = s[1:-1].strip()
        parts = [tok.strip() for tok in body.split(",")] if body else []
    else:
        parts = [s]
    try:
        coords = [int(tok) for tok in parts]
    except ValueError:
        raise ValueError(f"invalid element {text!r} for {group}") from None
    if len(coords) != group.rank:
        raise ValueError(
            f"element {text!r} has {len(coords)} coordinates; {group} needs {group.rank}"
        )
    a = tuple(c % n for c, n in zip(coords, group.factors))
    return a


def parse_generator_list(group: Group, text: str) -> list[Element]:
    """Parse a `;`-separated generator list; empty text means no generators."""
    s = text.strip()
    if not s:
        return []
    return [parse_element(group, tok) for tok in s.split(";") if tok.strip()]
