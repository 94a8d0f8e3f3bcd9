"""Exact arithmetic in the tower Q ⊂ Q(√d) ⊂ Q(√d)(i).

Every scalar in the library is a FieldElement: four rationals (a, b, c, e)
representing a + b·√d + c·i + e·i·√d under the designated embedding into C
(√d the positive real root, i the usual imaginary unit).  d is a squarefree
non-negative integer; d ∈ {0, 1} degenerates the tower to Q(i) and elements
are normalised so equality stays canonical.

No floating arithmetic appears here except in the explicitly-named
``approx`` helper, which exists for test oracles only.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt

from .errors import InputFormatError, NonRealInput

Rational = int | Fraction


def is_squarefree(n: int) -> bool:
    if n < 0:
        return False
    if n in (0, 1):
        return True
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None if x is not a square."""
    if x < 0:
        return None
    if x == 0:
        return Fraction(0)
    pn, qn = x.numerator, x.denominator
    rp, rq = isqrt(pn), isqrt(qn)
    if rp * rp == pn and rq * rq == qn:
        return Fraction(rp, rq)
    return None


def sqrt_bounds(d: int, bits: int) -> tuple[Fraction, Fraction]:
    """Rational bounds lo <= √d <= hi with hi - lo <= 2^-bits."""
    if d == 0:
        return Fraction(0), Fraction(0)
    scale = 1 << bits
    s = isqrt(d * scale * scale)
    return Fraction(s, scale), Fraction(s + 1, scale)


class FieldDescriptor:
    """The single parameter of the scalar tower: the quadratic radicand d."""

    __slots__ = ("d",)

    def __init__(self, d: int):
        if not isinstance(d, int) or d < 0 or not is_squarefree(d):
            raise InputFormatError(f"field parameter d must be a squarefree non-negative integer, got {d!r}")
        self.d = d

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldDescriptor) and self.d == other.d

    def __hash__(self) -> int:
        return hash(("FieldDescriptor", self.d))

    def __repr__(self) -> str:
        return f"FieldDescriptor(d={self.d})"

    def zero(self) -> FieldElement:
        return FieldElement(self.d, 0)

    def one(self) -> FieldElement:
        return FieldElement(self.d, 1)

    def rational(self, x: Rational) -> FieldElement:
        return FieldElement(self.d, x)

    def sqrt_gen(self) -> FieldElement:
        return FieldElement(self.d, 0, 1)

    def imag_unit(self) -> FieldElement:
        return FieldElement(self.d, 0, 0, 1)

    def parse(self, text: str) -> FieldElement:
        return parse_element(self.d, text)


_F0 = Fraction(0)


class FieldElement:
    """Immutable element a + b√d + c·i + e·i√d with rational coefficients."""

    __slots__ = ("d", "a", "b", "c", "e")

    def __init__(self, d: int, a: Rational, b: Rational = 0, c: Rational = 0, e: Rational = 0):
        if type(a) is not Fraction:
            a = Fraction(a)
        if type(b) is not Fraction:
            b = Fraction(b)
        if type(c) is not Fraction:
            c = Fraction(c)
        if type(e) is not Fraction:
            e = Fraction(e)
        if d == 1:
            # √1 = 1 folds onto the rational coordinates.
            a, b = a + b, _F0
            c, e = c + e, _F0
        elif d == 0:
            b = e = _F0
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "e", e)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def rational(cls, d: int, x: Rational) -> FieldElement:
        return cls(d, x)

    def _coerce(self, other) -> FieldElement | None:
        if isinstance(other, FieldElement):
            if other.d != self.d:
                raise ValueError(f"mixed field parameters: {self.d} vs {other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.d, other)
        return None

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.e)

    def is_real(self) -> bool:
        return not (self.c or self.e)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.e)

    def real_part(self) -> FieldElement:
        return FieldElement(self.d, self.a, self.b)

    def imag_part(self) -> FieldElement:
        """The real element c + e√d with self = real_part + i*imag_part."""
        return FieldElement(self.d, self.c, self.e)

    def conj_complex(self) -> FieldElement:
        return FieldElement(self.d, self.a, self.b, -self.c, -self.e)

    def conj_sqrt(self) -> FieldElement:
        """Galois twist √d -> -√d."""
        return FieldElement(self.d, self.a, -self.b, self.c, -self.e)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not (o.a or o.b or o.c or o.e):
            return self
        if not (self.a or self.b or self.c or self.e):
            return o
        return FieldElement(self.d, self.a + o.a, self.b + o.b, self.c + o.c, self.e + o.e)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.d, -self.a, -self.b, -self.c, -self.e)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not (o.a or o.b or o.c or o.e):
            return self
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.d
        a1, b1, c1, e1 = self.a, self.b, self.c, self.e
        a2, b2, c2, e2 = o.a, o.b, o.c, o.e
        # scalar fast paths carry most of the elimination pipelines
        if not (b2 or c2 or e2):
            if not a2:
                return o
            return FieldElement(d, a1 * a2, b1 * a2, c1 * a2, e1 * a2)
        if not (b1 or c1 or e1):
            if not a1:
                return self
            return FieldElement(d, a1 * a2, a1 * b2, a1 * c2, a1 * e2)
        return FieldElement(
            d,
            a1 * a2 + d * b1 * b2 - c1 * c2 - d * e1 * e2,
            a1 * b2 + b1 * a2 - c1 * e2 - e1 * c2,
            a1 * c2 + c1 * a2 + d * (b1 * e2 + e1 * b2),
            a1 * e2 + e1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        s = self.conj_sqrt()
        n1 = self * s                      # lies in Q(i): b = e = 0
        n2 = n1 * n1.conj_complex()        # rational and positive
        assert n1.b == 0 and n1.e == 0
        assert n2.b == 0 and n2.c == 0 and n2.e == 0 and n2.a > 0
        return s * n1.conj_complex() * FieldElement(self.d, Fraction(1) / n2.a)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = FieldElement(self.d, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        if o is None:
            return NotImplemented
        return (self.a, self.b, self.c, self.e) == (o.a, o.b, o.c, o.e)

    def __hash__(self) -> int:
        return hash((self.d, self.a, self.b, self.c, self.e))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"FieldElement(d={self.d}, {format_element(self)!r})"

    def __str__(self) -> str:
        return format_element(self)

    # -- roots -------------------------------------------------------------

    def sqrt(self) -> FieldElement | None:
        """An element s of the same field with s*s == self, or None.

        Complete: if any square root of self lies in Q(√d)(i), one is found.
        Writing self = A + B·i with A, B in the real subfield, a root s + t·i
        satisfies s² - t² = A and 2st = B, which reduces to square roots
        inside Q(√d); those in turn reduce to rational squares via the norm.
        """
        A = self.real_part()
        B = self.imag_part()
        if B.is_zero():
            s = _sqrt_real(A)
            if s is not None:
                return s
            t = _sqrt_real(-A)
            if t is not None:
                return t * FieldElement(self.d, 0, 0, 1)
            return None
        norm = _sqrt_real(A * A + B * B)
        if norm is None:
            return None
        if sign_real(norm) < 0:
            norm = -norm
        two = FieldElement(self.d, 2)
        for s2 in ((A + norm) / two, (A - norm) / two):
            s = _sqrt_real(s2)
            if s is not None and not s.is_zero():
                t = B / (two * s)
                cand = s + t * FieldElement(self.d, 0, 0, 1)
                if cand * cand == self:
                    return cand
        return None

    # -- embedding oracles ---------------------------------------------------

    def interval(self, bits: int = 64) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Exact rational enclosure (re_lo, re_hi, im_lo, im_hi) of the embedding."""
        lo, hi = sqrt_bounds(self.d, bits)

        def part(p: Fraction, q: Fraction) -> tuple[Fraction, Fraction]:
            if q >= 0:
                return p + q * lo, p + q * hi
            return p + q * hi, p + q * lo

        re_lo, re_hi = part(self.a, self.b)
        im_lo, im_hi = part(self.c, self.e)
        return re_lo, re_hi, im_lo, im_hi

    def approx(self) -> complex:
        """Floating approximation of the embedding.  Test oracles only."""
        r = self.d ** 0.5
        return complex(float(self.a) + float(self.b) * r,
                       float(self.c) + float(self.e) * r)


def _sqrt_real(x: FieldElement) -> FieldElement | None:
    """Square root of a real-subfield element inside Q(√d), or None."""
    if not x.is_real():
        raise NonRealInput("square root in Q(√d) of a non-real element")
    d = x.d
    if x.is_zero():
        return FieldElement(d, 0)
    if sign_real(x) < 0:
        return None
    a, b = x.a, x.b
    if b == 0:
        r = rational_sqrt(a)
        if r is not None:
            return FieldElement(d, r)
        if d >= 2:
            v = rational_sqrt(a / d)
            if v is not None:
                return FieldElement(d, 0, v)
        return None
    # (u + v√d)² = x forces the norm a² - d·b² to be a rational square.
    t = rational_sqrt(a * a - d * b * b)
    if t is None:
        return None
    for u2 in ((a + t) / 2, (a - t) / 2):
        u = rational_sqrt(u2)
        if u is not None and u != 0:
            v = b / (2 * u)
            cand = FieldElement(d, u, v)
            if cand * cand == x:
                return cand
    return None


def sign_real(x: FieldElement) -> int:
    """Exact sign of a real-subfield element under the embedding."""
    if not x.is_real():
        raise NonRealInput(f"sign of non-real element {x}")
    a, b = x.a, x.b
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    t = a * a - x.d * b * b
    if t == 0:
        return 0
    s = 1 if t > 0 else -1
    return s if a > 0 else -s


def compare_real(x: FieldElement, y: FieldElement) -> int:
    return sign_real(x - y)


def abs_real(x: FieldElement) -> FieldElement:
    return -x if sign_real(x) < 0 else x


# -- textual form ------------------------------------------------------------
#
# Canonical form "a+b*r+c*i+e*i*r" with rationals as "p/q", r = √d, zero
# terms omitted, unit coefficients contracted ("r", "-i", "3/2*i*r"), and
# "0" for zero.

_TERM_RE = re.compile(r"[+-]?[^+-]+")


def format_element(x: FieldElement) -> str:
    parts: list[tuple[str, str]] = []

    def add(coef: Fraction, sym: str) -> None:
        if coef == 0:
            return
        sign = "-" if coef < 0 else "+"
        mag = -coef if coef < 0 else coef
        if not sym:
            body = str(mag)
        elif mag == 1:
            body = sym
        else:
            body = f"{mag}*{sym}"
        parts.append((sign, body))

    add(x.a, "")
    add(x.b, "r")
    add(x.c, "i")
    add(x.e, "i*r")
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


def parse_element(d: int, text: str) -> FieldElement:
    if not isinstance(text, str) or not text.strip():
        raise InputFormatError(f"empty field element literal {text!r}")
    s = text.replace(" ", "")
    coeffs = {(False, False): Fraction(0), (True, False): Fraction(0),
              (False, True): Fraction(0), (True, True): Fraction(0)}
    matched = "".join(_TERM_RE.findall(s))
    if matched != s:
        raise InputFormatError(f"cannot parse field element {text!r}")
    for term in _TERM_RE.findall(s):
        sign = 1
        if term[0] in "+-":
            sign = -1 if term[0] == "-" else 1
            term = term[1:]
        if not term:
            raise InputFormatError(f"cannot parse field element {text!r}")
        has_r = has_i = False
        coef = Fraction(1)
        saw_number = False
        for factor in term.split("*"):
            if factor == "r":
                if has_r:
                    raise InputFormatError(f"repeated r in term of {text!r}")
                has_r = True
            elif factor == "i":
                if has_i:
                    raise InputFormatError(f"repeated i in term of {text!r}")
                has_i = True
            else:
                if saw_number or not factor:
                    raise InputFormatError(f"cannot parse field element {text!r}")
                try:
                    coef = Fraction(factor)
                except (ValueError, ZeroDivisionError) as exc:
                    raise InputFormatError(f"bad rational {factor!r} in {text!r}") from exc
                saw_number = True
        coeffs[(has_r, has_i)] += sign * coef
    return FieldElement(d, coeffs[(False, False)], coeffs[(True, False)],
                        coeffs[(False, True)], coeffs[(True, True)])
