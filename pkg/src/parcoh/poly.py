"""Dense polynomials over the scalar field, Sturm counting, root discovery.

The zero polynomial is the empty coefficient list; its degree is undefined
and degree-requiring operations reject it.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import NonRealCoefficients, ScalarFieldTooSmall
from .field import FieldElement, sign_real


class Poly:
    """Coefficients low-to-high; the trailing coefficient is nonzero."""

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs):
        cs = [c if isinstance(c, FieldElement) else FieldElement(d, c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, d: int) -> Poly:
        return cls(d, [])

    @classmethod
    def one(cls, d: int) -> Poly:
        return cls(d, [1])

    @classmethod
    def x(cls, d: int) -> Poly:
        return cls(d, [0, 1])

    @classmethod
    def from_roots(cls, d: int, roots) -> Poly:
        out = cls.one(d)
        for r in roots:
            out = out * cls(d, [-r, FieldElement(d, 1)])
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.d == other.d and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.d, self.coeffs))

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        zero = FieldElement(self.d, 0)
        a = list(self.coeffs) + [zero] * (n - len(self.coeffs))
        b = list(other.coeffs) + [zero] * (n - len(other.coeffs))
        return Poly(self.d, [x + y for x, y in zip(a, b)])

    def __neg__(self) -> Poly:
        return Poly(self.d, [-c for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction, FieldElement)):
            o = other if isinstance(other, FieldElement) else FieldElement(self.d, other)
            return Poly(self.d, [c * o for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.d)
        zero = FieldElement(self.d, 0)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci.is_zero():
                continue
            for j, cj in enumerate(other.coeffs):
                out[i + j] = out[i + j] + ci * cj
        return Poly(self.d, out)

    __rmul__ = __mul__

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Poly.zero(self.d), Poly.zero(self.d)
        lead_inv = other.leading().inverse()
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(self.d), self
        quo = [FieldElement(self.d, 0)] * (dq + 1)
        for k in range(dq, -1, -1):
            top = rem[k + len(other.coeffs) - 1]
            if top.is_zero():
                continue
            q = top * lead_inv
            quo[k] = q
            for j, oc in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - q * oc
        return Poly(self.d, quo), Poly(self.d, rem)

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def derivative(self) -> Poly:
        return Poly(self.d, [c * k for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return Poly(self.d, [c * inv for c in self.coeffs])

    def eval(self, x: FieldElement) -> FieldElement:
        acc = FieldElement(self.d, 0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def conj_complex(self) -> Poly:
        return Poly(self.d, [c.conj_complex() for c in self.coeffs])

    def is_real_coeffs(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    def is_rational_coeffs(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Poly(d={self.d}, [{', '.join(str(c) for c in self.coeffs)}])"


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def is_squarefree_poly(p: Poly) -> bool:
    g = poly_gcd(p, p.derivative())
    return g.is_zero() or g.degree() == 0


def sturm_real_root_count(p: Poly) -> int:
    """Number of distinct real roots of p over (-∞, +∞), exactly.

    Coefficients must lie in the real subfield.  Multiple roots are counted
    once: dividing the whole remainder chain by gcd(p, p') changes no sign
    variation at ±∞.
    """
    if p.is_zero():
        raise ValueError("Sturm count of the zero polynomial")
    if not p.is_real_coeffs():
        raise NonRealCoefficients("Sturm sequences need real-subfield coefficients")
    if p.degree() == 0:
        return 0
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree() > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero():
        chain.pop()

    def variations(at_minus_infinity: bool) -> int:
        signs = []
        for q in chain:
            s = sign_real(q.leading())
            if at_minus_infinity and q.degree() % 2 == 1:
                s = -s
            if s != 0:
                signs.append(s)
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

    return variations(True) - variations(False)


# -- rational-coefficient root extraction -------------------------------------


def _to_primitive_int(p: Poly) -> list[int]:
    """Scale a rational-coefficient polynomial to primitive integer form."""
    fracs = [Fraction(c.a) for c in p.coeffs]
    denom = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * denom) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return [v // g for v in ints] if g else ints


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            if k != n // k:
                out.append(n // k)
        k += 1
    return sorted(out)


def rational_roots(p: Poly) -> tuple[list[tuple[Fraction, int]], Poly]:
    """All rational roots with multiplicities, plus the root-free cofactor.

    Uses the rational root theorem on the primitive integer form.
    """
    if p.is_zero():
        raise ValueError("root extraction from the zero polynomial")
    if not p.is_rational_coeffs():
        raise ValueError("rational_roots needs rational coefficients")
    d = p.d
    roots: list[tuple[Fraction, int]] = []
    rem = p
    # split off x^k first
    k = 0
    while not rem.coeffs[0]:
        rem = rem // Poly.x(d)
        k += 1
    if k:
        roots.append((Fraction(0), k))
    if rem.degree() == 0:
        return roots, rem
    ints = _to_primitive_int(rem)
    candidates: list[Fraction] = []
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            cand = Fraction(num, den)
            candidates.append(cand)
            candidates.append(-cand)
    seen = set()
    for cand in candidates:
        if cand in seen:
            continue
        seen.add(cand)
        ce = FieldElement(d, cand)
        if not rem.eval(ce).is_zero():
            continue
        mult = 0
        factor = Poly(d, [-ce, FieldElement(d, 1)])
        while rem.eval(ce).is_zero():
            rem = rem // factor
            mult += 1
            if rem.degree() == 0:
                break
        roots.append((cand, mult))
        if rem.degree() == 0:
            break
    return roots, rem


def _quadratic_roots_in_field(q: Poly) -> list[FieldElement] | None:
    """Both roots of a degree-2 polynomial if they lie in the field, else None."""
    d = q.d
    c0, c1, c2 = q.coeffs
    disc = c1 * c1 - FieldElement(d, 4) * c2 * c0
    s = disc.sqrt()
    if s is None:
        return None
    two_a_inv = (FieldElement(d, 2) * c2).inverse()
    return [(-c1 + s) * two_a_inv, (-c1 - s) * two_a_inv]


def real_roots_in_field(p: Poly) -> list[FieldElement]:
    """All distinct real roots of p, certified complete.

    The list covers every real root of p in C, each represented in the
    field.  Raises ScalarFieldTooSmall when real roots exist that the
    discovery routes cannot express or certify.  Route: reduce to
    g = gcd(p, conj p) (real coefficients, same real roots), then rational
    root extraction plus quadratic factors; a Sturm count certifies that
    undiscovered factors have no real roots.
    """
    if p.is_zero():
        raise ValueError("root discovery on the zero polynomial")
    d = p.d
    g = poly_gcd(p, p.conj_complex())
    if g.is_zero() or g.degree() == 0:
        return []
    assert g.is_real_coeffs(), "gcd with the conjugate is conjugation-stable"
    if not g.is_rational_coeffs():
        if sturm_real_root_count(g) == 0:
            return []
        raise ScalarFieldTooSmall(
            "characteristic polynomial has irrational coefficients and real roots; "
            "supply eigenvalue certificates"
        )
    found, rem = rational_roots(g)
    roots = [FieldElement(d, r) for r, _ in found]
    if rem.degree() == 0:
        return roots
    if rem.degree() == 2:
        pair = _quadratic_roots_in_field(rem)
        if pair is not None:
            roots.extend(r for r in pair if r.is_real())
            return roots
        if sturm_real_root_count(rem) == 0:
            return roots
        raise ScalarFieldTooSmall(
            "quadratic factor has real roots outside the field; "
            "supply eigenvalue certificates or enlarge d"
        )
    if sturm_real_root_count(rem) == 0:
        return roots
    raise ScalarFieldTooSmall(
        f"cannot split a degree-{rem.degree()} factor with real roots; "
        "supply eigenvalue certificates"
    )


def candidate_roots_in_field(p: Poly) -> list[FieldElement]:
    """Best-effort list of distinct roots of p lying in the field.

    Unlike real_roots_in_field this makes no completeness promise; callers
    verify sufficiency themselves (e.g. by eigenspace dimension counts).
    """
    if p.is_zero():
        raise ValueError("root discovery on the zero polynomial")
    d = p.d
    roots: list[FieldElement] = []
    rem = p
    if p.is_rational_coeffs():
        found, rem = rational_roots(p)
        roots = [FieldElement(d, r) for r, _ in found]
    if not rem.is_zero() and not rem.degree() == 0:
        if rem.degree() == 1:
            roots.append(-rem.coeffs[0] / rem.coeffs[1])
        elif rem.degree() == 2:
            pair = _quadratic_roots_in_field(rem)
            if pair is not None:
                roots.extend(pair)
    out: list[FieldElement] = []
    for r in roots:
        if r not in out:
            out.append(r)
    return out
