"""Exact arithmetic in K = Q(i, sqrt(d)) and its field automorphisms.

Every quantity in this package is a K-scalar: a + b*sqrt(d) + (c + e*sqrt(d))*i
with rational components and a fixed squarefree d >= 2 (default 2).  The four
components are kept as `fractions.Fraction`, so equality is exact and
componentwise.  K carries exactly four field automorphisms commuting with
complex conjugation: identity, complex conjugation (i -> -i), the real flip
(sqrt(d) -> -sqrt(d)), and their composition.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


class ParseError(ValueError):
    """Scalar-grammar syntax error, carrying the offending position."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def _is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        while n % p == 0:
            n //= p
        p += 1
    return True


class FieldContext:
    """Fixes the field K = Q(i, sqrt(d)) all scalars of a computation live in."""

    __slots__ = ("d",)

    def __init__(self, d: int = 2):
        if d < 2 or not _is_squarefree(d):
            raise ValueError(f"d must be a squarefree integer >= 2, got {d}")
        self.d = d

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldContext) and self.d == other.d

    def __hash__(self) -> int:
        return hash(("FieldContext", self.d))

    def __repr__(self) -> str:
        return f"FieldContext(d={self.d})"

    def elem(self, a: Rat = 0, b: Rat = 0, c: Rat = 0, e: Rat = 0) -> FieldElem:
        """The element a + b*sqrt(d) + (c + e*sqrt(d))*i."""
        return FieldElem(Fraction(a), Fraction(b), Fraction(c), Fraction(e), self)

    @property
    def zero(self) -> FieldElem:
        return self.elem(0)

    @property
    def one(self) -> FieldElem:
        return self.elem(1)

    @property
    def i(self) -> FieldElem:
        return self.elem(0, 0, 1)

    @property
    def sqrt_d(self) -> FieldElem:
        return self.elem(0, 1)

    def parse(self, text: str) -> FieldElem:
        return parse_scalar(text, self)


class FieldElem:
    """An element of K = Q(i, sqrt(d)), immutable, with exact operator arithmetic.

    Canonical representation: four independently normalized rationals, so
    equality and hashing are componentwise.  Supports mixing with int and
    Fraction on either side.
    """

    __slots__ = ("a", "b", "c", "e", "ctx")

    def __init__(self, a: Fraction, b: Fraction, c: Fraction, e: Fraction,
                 ctx: FieldContext):
        self.a = a
        self.b = b
        self.c = c
        self.e = e
        self.ctx = ctx

    # -- basic structure ---------------------------------------------------

    @property
    def d(self) -> int:
        return self.ctx.d

    def _coerce(self, other: object) -> "FieldElem | None":
        if isinstance(other, FieldElem):
            if other.ctx.d != self.ctx.d:
                raise ValueError(
                    f"mixing scalars from d={self.ctx.d} and d={other.ctx.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.elem(other)
        return None

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.a, self.b, self.c, self.e) == (o.a, o.b, o.c, o.e)

    def __hash__(self) -> int:
        if not self.b and not self.c and not self.e:
            return hash(self.a)
        return hash((self.a, self.b, self.c, self.e, self.ctx.d))

    def __bool__(self) -> bool:
        return bool(self.a or self.b or self.c or self.e)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.e)

    def is_real(self) -> bool:
        return not (self.c or self.e)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: object) -> "FieldElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.a + o.a, self.b + o.b, self.c + o.c,
                         self.e + o.e, self.ctx)

    __radd__ = __add__

    def __neg__(self) -> "FieldElem":
        return FieldElem(-self.a, -self.b, -self.c, -self.e, self.ctx)

    def __sub__(self, other: object) -> "FieldElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "FieldElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "FieldElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.ctx.d
        a1, b1, c1, e1 = self.a, self.b, self.c, self.e
        a2, b2, c2, e2 = o.a, o.b, o.c, o.e
        # rational factors are the common case; skip the full expansion
        if not (b1 or c1 or e1):
            return FieldElem(a1 * a2, a1 * b2, a1 * c2, a1 * e2, self.ctx)
        if not (b2 or c2 or e2):
            return FieldElem(a2 * a1, a2 * b1, a2 * c1, a2 * e1, self.ctx)
        # (u1 + v1*i)(u2 + v2*i) with u, v in Q(sqrt(d)):
        # real part u1*u2 - v1*v2, imaginary part u1*v2 + v1*u2.
        ra = (a1 * a2 + d * b1 * b2) - (c1 * c2 + d * e1 * e2)
        rb = (a1 * b2 + b1 * a2) - (c1 * e2 + e1 * c2)
        rc = (a1 * c2 + d * b1 * e2) + (c1 * a2 + d * e1 * b2)
        re = (a1 * e2 + b1 * c2) + (c1 * b2 + e1 * a2)
        return FieldElem(ra, rb, rc, re, self.ctx)

    __rmul__ = __mul__

    def conj(self) -> "FieldElem":
        """Complex conjugation: i -> -i."""
        return FieldElem(self.a, self.b, -self.c, -self.e, self.ctx)

    def inv(self) -> "FieldElem":
        """Multiplicative inverse, by two-stage rationalization.

        First multiply by the complex conjugate to land in Q(sqrt(d)), then by
        the sqrt(d)-conjugate to land in Q.
        """
        if not self:
            raise ZeroDivisionError("inversion of zero scalar")
        d = self.ctx.d
        w = self * self.conj()           # real: w = s + t*sqrt(d), w > 0
        s, t = w.a, w.b
        n = s * s - d * t * t            # nonzero since w != 0 and sqrt(d) irrational
        winv = FieldElem(s / n, -t / n, Fraction(0), Fraction(0), self.ctx)
        return self.conj() * winv

    def __truediv__(self, other: object) -> "FieldElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other: object) -> "FieldElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int) -> "FieldElem":
        if n < 0:
            return self.inv() ** (-n)
        result = self.ctx.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order on the real subfield ----------------------------------------

    def real_sign(self) -> int:
        """Sign of a real element a + b*sqrt(d), as -1, 0 or +1."""
        if not self.is_real():
            raise ValueError("sign is defined only for real scalars")
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # mixed signs: compare |a| with |b|*sqrt(d) via squares
        lead = (a > 0) - (a < 0)
        cmp = a * a - self.ctx.d * b * b
        if cmp == 0:
            raise ValueError(f"a^2 = d*b^2 contradicts d={self.ctx.d} squarefree")
        return lead if cmp > 0 else -lead

    def __repr__(self) -> str:
        return f"FieldElem({format_scalar(self)!r}, d={self.ctx.d})"

    def __str__(self) -> str:
        return format_scalar(self)


class Automorphism(enum.Enum):
    """The four field automorphisms of K, each an involution commuting with conj."""

    ID = "id"
    CONJ = "conj"
    FLIP = "flip"
    CONJFLIP = "conjflip"

    def __call__(self, x: FieldElem) -> FieldElem:
        return apply_automorphism(self, x)

    def compose_conj(self) -> "Automorphism":
        """The automorphism x -> f(conj(x)) (= conj(f(x)) since they commute)."""
        return {
            Automorphism.ID: Automorphism.CONJ,
            Automorphism.CONJ: Automorphism.ID,
            Automorphism.FLIP: Automorphism.CONJFLIP,
            Automorphism.CONJFLIP: Automorphism.FLIP,
        }[self]

    @classmethod
    def from_name(cls, name: str) -> "Automorphism":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(
                f"unknown automorphism {name!r}; expected one of "
                f"{[m.value for m in cls]}") from None


ALL_AUTOMORPHISMS = (Automorphism.ID, Automorphism.CONJ,
                     Automorphism.FLIP, Automorphism.CONJFLIP)


def apply_automorphism(f: Automorphism, x: FieldElem) -> FieldElem:
    """Apply f to x.  CONJ negates i, FLIP negates sqrt(d), CONJFLIP both."""
    if f is Automorphism.ID:
        return x
    if f is Automorphism.CONJ:
        return FieldElem(x.a, x.b, -x.c, -x.e, x.ctx)
    if f is Automorphism.FLIP:
        return FieldElem(x.a, -x.b, x.c, -x.e, x.ctx)
    return FieldElem(x.a, -x.b, -x.c, x.e, x.ctx)


# -- parsing and formatting -------------------------------------------------
#
# elem     := [sign] term (sign term)*
# term     := rat unitpart? | unitpart
# unitpart := ("*"? unit)+        unit in {i, r}, each at most once per term
# rat      := integer ("/" positive-integer)?
#
# whitespace is insignificant; "r" denotes sqrt(d).


def parse_scalar(text: str, ctx: FieldContext) -> FieldElem:
    """Parse the scalar grammar into a canonical FieldElem."""
    return _ScalarParser(text, ctx).parse()


class _ScalarParser:
    def __init__(self, text: str, ctx: FieldContext):
        self.text = text
        self.ctx = ctx
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> FieldElem:
        total = self.ctx.zero
        sign = 1
        ch = self.peek()
        if ch in ("+", "-"):
            sign = -1 if ch == "-" else 1
            self.pos += 1
        while True:
            total = total + self.parse_term(sign)
            ch = self.peek()
            if ch == "":
                return total
            if ch not in ("+", "-"):
                raise self.error(f"expected '+', '-' or end of input, found {ch!r}")
            sign = -1 if ch == "-" else 1
            self.pos += 1

    def parse_term(self, sign: int) -> FieldElem:
        ch = self.peek()
        if ch.isdigit():
            coef = self.parse_rational()
            units = self.parse_unitpart(require=False)
        elif ch in ("i", "r"):
            coef = Fraction(1)
            units = self.parse_unitpart(require=True)
        else:
            raise self.error("expected a rational or unit ('i'/'r')")
        coef *= sign
        has_i, has_r = units
        z = Fraction(0)
        if not has_i and not has_r:
            return FieldElem(coef, z, z, z, self.ctx)
        if has_r and not has_i:
            return FieldElem(z, coef, z, z, self.ctx)
        if has_i and not has_r:
            return FieldElem(z, z, coef, z, self.ctx)
        return FieldElem(z, z, z, coef, self.ctx)

    def parse_rational(self) -> Fraction:
        num = self.parse_integer()
        if self.peek() == "/":
            self.pos += 1
            mark = self.pos
            den = self.parse_integer()
            if den == 0:
                self.pos = mark
                raise self.error("division by zero literal")
            return Fraction(num, den)
        return Fraction(num)

    def parse_integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse_unitpart(self, require: bool) -> tuple[bool, bool]:
        has_i = has_r = False
        first = True
        while True:
            ch = self.peek()
            if ch == "*":
                save = self.pos
                self.pos += 1
                ch = self.peek()
                if ch not in ("i", "r"):
                    if first and require:
                        raise self.error("expected unit 'i' or 'r' after '*'")
                    self.pos = save
                    break
            elif ch not in ("i", "r"):
                break
            if ch == "i":
                if has_i:
                    raise self.error("unit 'i' appears twice in one term")
                has_i = True
            else:
                if has_r:
                    raise self.error("unit 'r' appears twice in one term")
                has_r = True
            self.pos += 1
            first = False
        if require and not (has_i or has_r):
            raise self.error("expected unit 'i' or 'r'")
        return has_i, has_r


def format_scalar(x: FieldElem) -> str:
    """Canonical text form: rational part, r-term, i-term, r*i-term.

    Zero components are omitted; the zero element prints as "0".  The output
    reparses to an equal element.
    """
    parts: list[tuple[Fraction, str]] = []
    for comp, unit in ((x.a, ""), (x.b, "r"), (x.c, "i"), (x.e, "r*i")):
        if comp:
            parts.append((comp, unit))
    if not parts:
        return "0"
    out: list[str] = []
    for idx, (comp, unit) in enumerate(parts):
        mag = abs(comp)
        if not unit:
            body = str(mag)
        elif mag == 1:
            body = unit
        else:
            body = f"{mag}*{unit}"
        if idx == 0:
            out.append(f"-{body}" if comp < 0 else body)
        else:
            out.append(f"-{body}" if comp < 0 else f"+{body}")
    return "".join(out)
