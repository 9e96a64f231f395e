"""GF(p^k) arithmetic in polynomial representation.

Field elements are coefficient tuples of length ``k``, constant term
first, reduced modulo a monic irreducible polynomial.  The modulus is the
lexicographically smallest monic irreducible of the right degree (compared
constant-term up), found by exhaustive search; this keeps construction
deterministic without any polynomial tables.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

from .groups import Group, is_prime, make_group

FieldElement = tuple[int, ...]

_Q_CAP = 10_000

__all__ = [
    "FieldElement",
    "FiniteField",
    "AdditiveGroupView",
    "gf_make",
    "additive_group",
    "parse_field_element",
]


def _poly_mod(coeffs: list[int], modulus: Sequence[int], p: int) -> list[int]:
    """Remainder of a coefficient list modulo a monic polynomial."""
    out = [c % p for c in coeffs]
    k = len(modulus) - 1
    for i in range(len(out) - 1, k - 1, -1):
        c = out[i]
        if c:
            for j in range(k + 1):
                out[i - k + j] = (out[i - k + j] - c * modulus[j]) % p
    del out[k:]
    out.extend([0] * (k - len(out)))
    return out


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _is_irreducible(candidate: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree up to deg/2."""
    k = len(candidate) - 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_poly_mod(list(candidate), divisor, p)):
                return False
    return True


@dataclass(frozen=True)
class FiniteField:
    """GF(p^k) with elements as length-k coefficient tuples."""

    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.k

    def zero(self) -> FieldElement:
        return (0,) * self.k

    def one(self) -> FieldElement:
        return (1,) + (0,) * (self.k - 1)

    def minus_one(self) -> FieldElement:
        return (self.p - 1,) + (0,) * (self.k - 1)

    def _check(self, a: FieldElement) -> None:
        if len(a) != self.k or any(not 0 <= c < self.p for c in a):
            raise ValueError(f"{a!r} is not an element of {self}")

    @cached_property
    def _element_list(self) -> tuple[FieldElement, ...]:
        return tuple(itertools.product(*(range(self.p),) * self.k))

    def elements(self) -> tuple[FieldElement, ...]:
        return self._element_list

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self._check(a)
        self._check(b)
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a: FieldElement) -> FieldElement:
        self._check(a)
        return tuple((-x) % self.p for x in a)

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.add(a, self.neg(b))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self._check(a)
        self._check(b)
        return tuple(_poly_mod(_poly_mul(a, b, self.p), self.modulus, self.p))

    def inv(self, a: FieldElement) -> FieldElement:
        """Multiplicative inverse via a^(q-2)."""
        self._check(a)
        if a == self.zero():
            raise ValueError("zero has no multiplicative inverse")
        result = self.one()
        base = a
        e = self.q - 2
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def from_int(self, c: int) -> FieldElement:
        return (c % self.p,) + (0,) * (self.k - 1)

    def format_element(self, a: FieldElement) -> str:
        self._check(a)
        return "(" + ",".join(str(c) for c in a) + ")"

    def __str__(self) -> str:
        return f"GF({self.q})"


def gf_make(p: int, k: int) -> FiniteField:
    """Build GF(p^k) with the least monic irreducible modulus of degree k."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k!r}")
    if p**k > _Q_CAP:
        raise ValueError(f"field size {p}^{k} exceeds the supported cap {_Q_CAP}")
    if k == 1:
        return FiniteField(p=p, k=1, modulus=(0, 1))
    for low in itertools.product(range(p), repeat=k):
        candidate = low + (1,)
        if _is_irreducible(candidate, p):
            return FiniteField(p=p, k=k, modulus=candidate)
    raise AssertionError("no irreducible polynomial found")  # cannot happen


@dataclass(frozen=True)
class AdditiveGroupView:
    """The additive group of a field together with its coordinate chart."""

    field: FiniteField
    group: Group
    to_group: Callable[[FieldElement], tuple[int, ...]]
    from_group: Callable[[tuple[int, ...]], FieldElement]


def additive_group(field: FiniteField) -> AdditiveGroupView:
    """Additive group Z(p,...,p); the chart is the identity on tuples."""
    group = make_group([field.p] * field.k)
    return AdditiveGroupView(
        field=field,
        group=group,
        to_group=lambda a: a,
        from_group=lambda a: a,
    )


_TERM_RE = re.compile(r"^(\d*)\*?(x(?:\^(\d+))?)?$")


def parse_field_element(field: FiniteField, text: str) -> FieldElement:
    """Parse ``(c0,...)`` coefficient tuples, integers, or polynomials in x.

    Polynomial syntax accepts forms like ``x``, ``x+1``, ``2x^2+x+1``.
    """
    s = text.strip().replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        parts = s[1:-1].split(",") if s[1:-1] else []
        try:
            coeffs = [int(tok) for tok in parts]
        except ValueError:
            raise ValueError(f"invalid field element {text!r}") from None
        if len(coeffs) != field.k:
            raise ValueError(
                f"element {text!r} has {len(coeffs)} coefficients; {field} needs {field.k}"
            )
        return tuple(c % field.p for c in coeffs)
    coeffs = [0] * field.k
    for signed in re.finditer(r"([+-]?)([^+-]+)", s):
        sign = -1 if signed.group(1) == "-" else 1
        m = _TERM_RE.match(signed.group(2))
        if not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"invalid field element {text!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            degree = 0
        else:
            degree = int(m.group(3)) if m.group(3) else 1
        if degree >= field.k:
            raise ValueError(
                f"term of degree {degree} does not fit in {field} (degree < {field.k})"
            )
        coeffs[degree] = (coeffs[degree] + sign * coeff) % field.p
    return tuple(coeffs)
