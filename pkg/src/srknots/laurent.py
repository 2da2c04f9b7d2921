"""Exact sparse Laurent polynomial arithmetic over the integers.

A Laurent polynomial in t is stored as a sparse map from integer exponents
(possibly negative) to nonzero arbitrary-precision integer coefficients; the
zero polynomial is the empty map.  All arithmetic is exact: no rounding, no
overflow.

Polynomials a and b are *unit-equivalent* when a = +-t^k * b for some integer
k.  Every nonzero polynomial has a unique unit-equivalent representative with
lowest exponent 0 and positive constant term (`normalize`); unit equivalence
is decided by comparing these normal forms (`equal_up_to_unit`).

Text grammar accepted by `parse` and emitted by `str()`:

    poly := ['-'] term (('+' | '-') term)*
    term := INT | INT '*' 't' ['^' ['-'] INT] | 't' ['^' ['-'] INT]

Whitespace is insignificant.  The printer emits terms in ascending exponent
order with explicit '*' and '^' and spaces around binary +/- ; printed forms
are byte-stable and round-trip exactly through `parse`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

__all__ = [
    "LaurentPoly",
    "NormalForm",
    "PolyParseError",
    "add",
    "mul",
    "substitute_inverse",
    "normalize",
    "equal_up_to_unit",
    "eval_int",
    "divide_exact",
    "parse",
]

# Above this combined span, multiplication keeps the sparse dict path instead
# of densifying (protects against huge shifted supports).
_DENSE_LIMIT = 4096


class PolyParseError(ValueError):
    """Malformed polynomial text; `position` is the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class LaurentPoly:
    """An immutable Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        data: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    data[e] = c
        object.__setattr__(self, "_terms", data)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "LaurentPoly":
        return _ONE

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def var(cls) -> "LaurentPoly":
        """The polynomial t."""
        return _T

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], val: int = 0) -> "LaurentPoly":
        """Build from a dense coefficient list starting at exponent `val`."""
        return cls({val + i: c for i, c in enumerate(coeffs)})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no minimum exponent")
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no maximum exponent")
        return max(self._terms)

    @property
    def span(self) -> int:
        """max_exp - min_exp; 0 for the zero polynomial."""
        if not self._terms:
            return 0
        return max(self._terms) - min(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def items(self):
        """Terms as (exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._terms.items())

    @property
    def terms(self) -> dict[int, int]:
        """A copy of the sparse exponent -> coefficient map."""
        return dict(self._terms)

    def _dense(self) -> tuple[int, list[int]]:
        v = min(self._terms)
        arr = [0] * (max(self._terms) - v + 1)
        for e, c in self._terms.items():
            arr[e - v] = c
        return v, arr

    @classmethod
    def _from_dense(cls, val: int, coeffs: list[int]) -> "LaurentPoly":
        return cls({val + i: c for i, c in enumerate(coeffs) if c})

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(tuple(sorted(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Union[int, "LaurentPoly"]) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        data = dict(self._terms)
        for e, c in other._terms.items():
            s = data.get(e, 0) + c
            if s:
                data[e] = s
            elif e in data:
                del data[e]
        out = LaurentPoly()
        object.__setattr__(out, "_terms", data)
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly()
        object.__setattr__(out, "_terms", {e: -c for e, c in self._terms.items()})
        return out

    def __sub__(self, other: Union[int, "LaurentPoly"]) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Union[int, "LaurentPoly"]) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Union[int, "LaurentPoly"]) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            out = LaurentPoly()
            object.__setattr__(
                out, "_terms", {e: c * other for e, c in self._terms.items()}
            )
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO
        if self.span + other.span <= _DENSE_LIMIT:
            av, ac = self._dense()
            bv, bc = other._dense()
            out = [0] * (len(ac) + len(bc) - 1)
            for i, x in enumerate(ac):
                if x:
                    for j, y in enumerate(bc):
                        if y:
                            out[i + j] += x * y
            return LaurentPoly._from_dense(av + bv, out)
        data: dict[int, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = ea + eb
                s = data.get(e, 0) + ca * cb
                if s:
                    data[e] = s
                elif e in data:
                    del data[e]
        out_poly = LaurentPoly()
        object.__setattr__(out_poly, "_terms", data)
        return out_poly

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        if k == 0:
            return self
        out = LaurentPoly()
        object.__setattr__(out, "_terms", {e + k: c for e, c in self._terms.items()})
        return out

    def substitute_inverse(self) -> "LaurentPoly":
        """Replace t by 1/t term by term (an involution)."""
        out = LaurentPoly()
        object.__setattr__(out, "_terms", {-e: c for e, c in self._terms.items()})
        return out

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                tpart = "t" if e == 1 else f"t^{e}"
                body = tpart if mag == 1 else f"{mag}*{tpart}"
            if i == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


_ZERO = LaurentPoly.__new__(LaurentPoly)
object.__setattr__(_ZERO, "_terms", {})
object.__setattr__(_ZERO, "_hash", None)
_ONE = LaurentPoly({0: 1})
_T = LaurentPoly({1: 1})


@dataclass(frozen=True)
class NormalForm:
    """A nonzero polynomial with lowest exponent 0 and positive constant term.

    Instances certify their own shape: constructing one from a polynomial
    that is not in normal form raises ValueError.
    """

    poly: LaurentPoly

    def __post_init__(self):
        p = self.poly
        if p.is_zero:
            raise ValueError("the zero polynomial has no normal form")
        if p.min_exp != 0:
            raise ValueError("normal form must have minimum exponent 0")
        if p.coeff(0) <= 0:
            raise ValueError("normal form must have a positive constant term")

    @property
    def span(self) -> int:
        return self.poly.span

    def __str__(self) -> str:
        return str(self.poly)


# -- module-level operations ------------------------------------------------


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact sum."""
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact product."""
    return a * b


def substitute_inverse(p: LaurentPoly) -> LaurentPoly:
    """t -> 1/t, term by term."""
    return p.substitute_inverse()


def normalize(p: LaurentPoly) -> NormalForm:
    """Canonical unit-equivalent representative of a nonzero polynomial."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no normal form")
    shifted = p.shift(-p.min_exp)
    if shifted.coeff(0) < 0:
        shifted = -shifted
    return NormalForm(shifted)


def equal_up_to_unit(a: LaurentPoly, b: LaurentPoly) -> bool:
    """True when a = +-t^k * b for some integer k (both zero counts)."""
    if a.is_zero or b.is_zero:
        return a.is_zero and b.is_zero
    return normalize(a).poly == normalize(b).poly


def eval_int(p: LaurentPoly, x: int) -> Union[int, Fraction]:
    """Exact evaluation at an integer point.

    Returns an int when the polynomial has no negative exponents, otherwise
    an exact Fraction.  Evaluation at 0 is an error in the presence of
    negative exponents.
    """
    if x == 0:
        if not p.is_zero and p.min_exp < 0:
            raise ValueError("cannot evaluate negative exponents at 0")
        return p.coeff(0)
    if p.is_zero:
        return 0
    if p.min_exp >= 0:
        total = 0
        for e, c in p._terms.items():
            total += c * x**e
        return total
    fx = Fraction(x)
    acc = Fraction(0)
    for e, c in p._terms.items():
        acc += c * fx**e
    return acc


def divide_exact(a: LaurentPoly, b: LaurentPoly) -> Optional[LaurentPoly]:
    """The exact quotient a / b over the Laurent ring, or None if b does not divide a."""
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero:
        return _ZERO
    av, ac = a._dense()
    bv, bc = b._dense()
    la, lb = len(ac), len(bc)
    if la < lb:
        return None
    lead = bc[0]
    rem = list(ac)
    nq = la - lb + 1
    quot = [0] * nq
    for i in range(nq):
        r = rem[i]
        if r == 0:
            continue
        if r % lead:
            return None
        f = r // lead
        quot[i] = f
        for j in range(1, lb):
            rem[i + j] -= f * bc[j]
    if any(rem[nq:]):
        return None
    return LaurentPoly._from_dense(av - bv, quot)


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<t>t)|(?P<op>[*^+\-]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise PolyParseError(f"unexpected character {stripped[0]!r}", pos)
        if m.lastgroup == "int":
            tokens.append(("int", int(m.group("int")), m.start("int")))
        elif m.lastgroup == "t":
            tokens.append(("t", "t", m.start("t")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    return tokens


def parse(text: str) -> LaurentPoly:
    """Parse the polynomial grammar; raises PolyParseError with a position."""
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial text", 0)
    pos = 0
    total = LaurentPoly.zero()
    end = len(tokens)

    def peek():
        return tokens[pos] if pos < end else ("end", None, len(text))

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def parse_exponent() -> int:
        kind, val, at = peek()
        sign = 1
        if kind == "op" and val in "+-":
            take()
            sign = -1 if val == "-" else 1
            kind, val, at = peek()
        if kind != "int":
            raise PolyParseError("expected an exponent after '^'", at)
        take()
        return sign * val

    def parse_term(sign: int) -> LaurentPoly:
        kind, val, at = peek()
        if kind == "int":
            take()
            coeff = sign * val
            kind2, val2, _ = peek()
            if kind2 == "op" and val2 == "*":
                take()
                kind3, _, at3 = peek()
                if kind3 != "t":
                    raise PolyParseError("expected 't' after '*'", at3)
                take()
                exp = 1
                kind4, val4, _ = peek()
                if kind4 == "op" and val4 == "^":
                    take()
                    exp = parse_exponent()
                return LaurentPoly.monomial(coeff, exp)
            return LaurentPoly.constant(coeff)
        if kind == "t":
            take()
            exp = 1
            kind2, val2, _ = peek()
            if kind2 == "op" and val2 == "^":
                take()
                exp = parse_exponent()
            return LaurentPoly.monomial(sign, exp)
        raise PolyParseError("expected a term", at)

    sign = 1
    kind, val, _ = peek()
    if kind == "op" and val == "-":
        take()
        sign = -1
    total = total + parse_term(sign)
    while pos < end:
        kind, val, at = take()
        if kind != "op" or val not in "+-":
            raise PolyParseError("expected '+' or '-' between terms", at)
        total = total + parse_term(-1 if val == "-" else 1)
    return total
