"""Constructive routes to frame starters and strong complete mappings.

Every construction verifies its own output before returning it; a
construction that hands back an unverified object is treated as a bug, so
the checks run in all modes, not just under tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .gf import FieldElement, FiniteField, additive_group
from .groups import (
    Element,
    Group,
    QuotientView,
    Subgroup,
    direct_product,
    subgroup_as_group,
    subgroup_closure,
    sylow_cyclic_nontrivial,
)
from .starters import FrameStarter, complement_elements, is_strong, verify_frame_starter

__all__ = [
    "Scm",
    "check_scm",
    "patterned_starter",
    "scm_doubling",
    "scm_field",
    "scm_exists",
    "scm_search",
    "mult_construction",
    "mult_var_construction",
    "gross_leonard",
]

SCM_SEARCH_CAP = 32


@dataclass(frozen=True)
class Scm:
    """A strong complete mapping stored as an explicit permutation table.

    ``images`` is aligned with ``group.elements()``; the defining property
    is that x -> images(x), x -> images(x) - x and x -> images(x) + x are
    all bijections.
    """

    group: Group
    images: tuple[Element, ...]

    @cached_property
    def _map(self) -> dict[Element, Element]:
        return dict(zip(self.group.elements(), self.images))

    def __call__(self, x: Element) -> Element:
        return self._map[x]

    def table(self) -> dict[Element, Element]:
        return dict(self._map)


def check_scm(scm: Scm) -> None:
    """Raise unless all three bijection invariants hold, exhaustively."""
    g = scm.group
    elems = g.elements()
    if len(scm.images) != len(elems):
        raise ValueError("mapping table does not cover the group")
    n = g.order
    if len(set(scm.images)) != n:
        raise ValueError("mapping is not a bijection")
    if len({g.sub(scm(x), x) for x in elems}) != n:
        raise ValueError("x -> f(x) - x is not a bijection")
    if len({g.add(scm(x), x) for x in elems}) != n:
        raise ValueError("x -> f(x) + x is not a bijection")


def _require(report, what: str) -> None:
    if not report.ok:
        details = "; ".join(report.describe())
        raise AssertionError(f"{what} produced an invalid output: {details}")


def patterned_starter(group: Group, subgroup: Subgroup) -> FrameStarter:
    """The pair set {x, -x} over the subgroup complement.

    Exists exactly when every element outside the subgroup has odd order;
    the first offending even-order element is reported otherwise.
    """
    if subgroup.parent != group:
        raise ValueError("subgroup does not belong to the given group")
    outside = complement_elements(group, subgroup)
    for x in outside:
        order = group.element_order(x)
        if order % 2 == 0:
            raise ValueError(
                f"element {group.format_element(x)} has even order {order}; "
                "no patterned frame starter exists"
            )
    pairs = []
    used = set()
    for x in outside:
        if x in used:
            continue
        y = group.neg(x)
        used.add(x)
        used.add(y)
        pairs.append((x, y))
    out = FrameStarter.make(group, subgroup, pairs)
    _require(verify_frame_starter(out), "patterned construction")
    return out


def scm_doubling(group: Group) -> Scm:
    """x -> 2x, a strong complete mapping whenever gcd(|G|, 6) = 1."""
    if math.gcd(group.order, 6) != 1:
        raise ValueError(
            f"doubling needs gcd(|G|, 6) = 1, but |G| = {group.order}"
        )
    scm = Scm(group=group, images=tuple(group.add(x, x) for x in group.elements()))
    check_scm(scm)
    return scm


def scm_field(field: FiniteField, alpha: FieldElement) -> Scm:
    """x -> alpha*x on the additive group of GF(q), q >= 4, alpha != 0,1,-1."""
    if field.q < 4:
        raise ValueError(f"field multiplication mapping needs q >= 4, got q={field.q}")
    field._check(alpha)
    if alpha in (field.zero(), field.one(), field.minus_one()):
        raise ValueError(
            f"alpha = {field.format_element(alpha)} is forbidden (0, 1, or -1)"
        )
    view = additive_group(field)
    images = tuple(
        view.to_group(field.mul(alpha, view.from_group(x)))
        for x in view.group.elements()
    )
    scm = Scm(group=view.group, images=images)
    check_scm(scm)
    return scm


def scm_exists(group: Group) -> bool:
    """Existence test: neither Sylow 2- nor 3-subgroup nontrivial cyclic."""
    return not sylow_cyclic_nontrivial(group, 2) and not sylow_cyclic_nontrivial(
        group, 3
    )


def scm_search(group: Group, cap: int = SCM_SEARCH_CAP) -> Scm | None:
    """Backtracking witness search; ``None`` certifies nonexistence.

    The search fixes f(0) = 0: translating any strong complete mapping by
    -f(0) gives another one, so this loses no solutions.  Variables are
    chosen fewest-candidates-first with forward checking over the three
    bijection constraints.
    """
    n = group.order
    if n > cap:
        raise ValueError(f"group order {n} exceeds the search cap {cap}")
    elems = group.elements()
    index = {a: i for i, a in enumerate(elems)}
    add = [[index[group.add(a, b)] for b in elems] for a in elems]
    sub = [[index[group.sub(a, b)] for b in elems] for a in elems]
    full = (1 << n) - 1

    assignment = [-1] * n
    # fix f(0) = 0 (zero is index 0: elements are sorted and all-zeros least)
    assignment[0] = 0
    used_v = used_d = used_s = 1  # value 0, difference 0, sum 0

    def candidates(x: int, used_v: int, used_d: int, used_s: int) -> list[int]:
        out = []
        for v in range(n):
            bit = 1 << v
            if used_v & bit:
                continue
            if used_d >> sub[v][x] & 1:
                continue
            if used_s >> add[v][x] & 1:
                continue
            out.append(v)
        return out

    def dfs(used_v: int, used_d: int, used_s: int) -> bool:
        if used_v == full:
            return True
        best_x, best = -1, None
        for x in range(n):
            if assignment[x] >= 0:
                continue
            cand = candidates(x, used_v, used_d, used_s)
            if best is None or len(cand) < len(best):
                best_x, best = x, cand
                if not cand:
                    return False
        for v in best:
            assignment[best_x] = v
            if dfs(
                used_v | 1 << v,
                used_d | 1 << sub[v][best_x],
                used_s | 1 << add[v][best_x],
            ):
                return True
            assignment[best_x] = -1
        return False

    if n == 0 or dfs(used_v, used_d, used_s):
        scm = Scm(group=group, images=tuple(elems[v] for v in assignment))
        check_scm(scm)
        return scm
    return None


def _product_context(g1: Group, g2: Group):
    prod = direct_product(g1, g2)
    g2_gens = [
        tuple(1 if j == i else 0 for j in range(g2.rank)) for i in range(g2.rank)
    ]
    return prod, g2_gens


def mult_construction(starter: FrameStarter, scm: Scm) -> FrameStarter:
    """Cross a strong frame starter in G1 \\ H with a strong complete
    mapping on G2, yielding one in (G1 x G2) \\ (H x G2).

    Each pair {x, y} (taken in canonical orientation) is replaced by the
    |G2| pairs {(x, z), (y, f(z))}.
    """
    _require(is_strong(starter), "input check: first factor")
    check_scm(scm)
    g1, h, g2 = starter.group, starter.subgroup, scm.group
    prod, g2_gens = _product_context(g1, g2)
    sub_gens = [prod.embed_left(a) for a in h.generators] + [
        prod.embed_right(b) for b in g2_gens
    ]
    subgroup = subgroup_closure(prod.group, sub_gens)
    pairs = []
    for x, y in starter.pairs:
        for z in g2.elements():
            pairs.append((prod.pair(x, z), prod.pair(y, scm(z))))
    out = FrameStarter.make(prod.group, subgroup, pairs)
    _require(is_strong(out), "product construction")
    return out


def mult_var_construction(
    s1: FrameStarter, s2: FrameStarter, scm: Scm
) -> FrameStarter:
    """Product construction that keeps only H x {0} excluded.

    ``s1`` is a strong frame starter in G1 \\ H, ``s2`` one in
    (H x G2) \\ (H x {0}) expressed over the canonical form of H x G2, and
    ``scm`` a strong complete mapping on G2.  The product pairs of
    :func:`mult_construction` are adjoined with the embedded pairs of
    ``s2``.
    """
    base = mult_construction(s1, scm)
    g1, h, g2 = s1.group, s1.subgroup, scm.group
    prod, _ = _product_context(g1, g2)

    hemb = subgroup_as_group(h)
    hg2 = direct_product(hemb.group, g2)
    if s2.group != hg2.group:
        raise ValueError(
            f"second starter must live over H x G2 = {hg2.group}, got {s2.group}"
        )
    expected_sub = {hg2.embed_left(a) for a in hemb.group.elements()}
    if set(s2.subgroup.elements) != expected_sub:
        raise ValueError("second starter must exclude exactly H x {0}")
    _require(is_strong(s2), "input check: second factor")

    into_product = {
        hg2.pair(a, b): prod.pair(hemb.to_parent(a), b)
        for a in hemb.group.elements()
        for b in g2.elements()
    }
    pairs = list(base.pairs)
    for x, y in s2.pairs:
        pairs.append((into_product[x], into_product[y]))
    subgroup = subgroup_closure(prod.group, [prod.embed_left(a) for a in h.generators])
    out = FrameStarter.make(prod.group, subgroup, pairs)
    _require(is_strong(out), "extended product construction")
    return out


def gross_leonard(
    quotient_starter: FrameStarter, scm: Scm, view: QuotientView
) -> FrameStarter:
    """Lift a strong starter in G/H through a strong complete mapping on H.

    Each quotient pair, canonically oriented and lifted to its least coset
    representatives (x, y), expands into the |H| pairs
    {z + x, f(z) + y} for z ranging over the subgroup.
    """
    group, kernel = view.parent, view.kernel
    if quotient_starter.group != view.group:
        raise ValueError(
            f"quotient starter must live over {view.group}, got {quotient_starter.group}"
        )
    if quotient_starter.subgroup.order != 1:
        raise ValueError("quotient starter must be a plain starter (trivial subgroup)")
    _require(is_strong(quotient_starter), "input check: quotient starter")
    hemb = subgroup_as_group(kernel)
    if scm.group != hemb.group:
        raise ValueError(
            f"mapping must live on the subgroup as {hemb.group}, got {scm.group}"
        )
    check_scm(scm)
    pairs = []
    for qx, qy in quotient_starter.pairs:
        x, y = view.lift(qx), view.lift(qy)
        for z_abs in hemb.group.elements():
            z = hemb.to_parent(z_abs)
            fz = hemb.to_parent(scm(z_abs))
            pairs.append((group.add(z, x), group.add(fz, y)))
    out = FrameStarter.make(group, kernel, pairs)
    _require(is_strong(out), "quotient lifting construction")
    return out
