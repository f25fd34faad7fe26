"""Exact ring elements: Python ints, ``fractions.Fraction`` and sparse
integer polynomials (:class:`Poly`).

A monomial is stored as a sorted tuple of variable names with repetition,
so ``w_1_2**2 * w_1_3`` is ``('w_1_2', 'w_1_2', 'w_1_3')``.  Products of
monomials are then a tuple concatenation followed by a sort, which keeps
the hot loops of the enumeration oracles cheap.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import groupby
from numbers import Integral

from .errors import MixedRing, NonIntegerResult, UnboundVariable

__all__ = [
    "Poly",
    "var",
    "edge_var",
    "ring_add",
    "ring_sub",
    "ring_mul",
    "ring_neg",
    "ring_pow",
    "normalize",
    "poly_eval",
    "render",
    "parse_poly",
    "is_zero",
]

ONE_MONOMIAL = ()


def _mono_key(mono):
    return tuple((name, len(list(grp))) for name, grp in groupby(mono))


class Poly:
    """Sparse multivariate polynomial with integer coefficients.

    Instances are treated as immutable.  Zero coefficients are never stored,
    so the zero polynomial has an empty ``terms`` mapping.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {m: c for m, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise MixedRing("polynomial coefficients must be integers")
            c = c.numerator
        return cls._raw({ONE_MONOMIAL: int(c)} if c else {})

    @classmethod
    def var(cls, name):
        return cls._raw({(name,): 1})

    @classmethod
    def monomial(cls, names, coeff=1):
        return cls._raw({tuple(sorted(names)): coeff} if coeff else {})

    # -- inspection -------------------------------------------------------

    def variables(self):
        return sorted({v for m in self.terms for v in m})

    def is_constant(self):
        return all(m == ONE_MONOMIAL for m in self.terms)

    def constant_term(self):
        return self.terms.get(ONE_MONOMIAL, 0)

    def degree(self, name=None):
        if not self.terms:
            return -1
        if name is None:
            return max(len(m) for m in self.terms)
        return max(m.count(name) for m in self.terms)

    def coeff(self, name, k):
        """Coefficient of ``name**k`` as a polynomial in the other variables."""
        out = {}
        for m, c in self.terms.items():
            if m.count(name) == k:
                rest = tuple(v for v in m if v != name)
                out[rest] = out.get(rest, 0) + c
        return Poly(out)

    def coefficients(self, name):
        """Mapping ``k -> coefficient of name**k`` (nonzero entries only)."""
        out = {}
        for k in range(self.degree(name) + 1):
            c = self.coeff(name, k)
            if c.terms:
                out[k] = c
        return out

    def items(self):
        """(monomial as ((var, exp), ...), coefficient) in monomial order:
        lexicographic on (variable, exponent) sequences, constant term last."""
        return sorted(((_mono_key(m), c) for m, c in self.terms.items()), key=lambda t: (not t[0], t[0]))

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, Integral):
            return Poly.const(int(other))
        if isinstance(other, Fraction):
            if other.denominator == 1:
                return Poly.const(other.numerator)
            raise MixedRing("cannot combine a rational number with a polynomial")
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Poly._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return Poly._raw({})
        if len(b) == 1 and ONE_MONOMIAL in b:
            k = b[ONE_MONOMIAL]
            return Poly._raw({m: c * k for m, c in a.items()})
        if len(a) == 1 and ONE_MONOMIAL in a:
            k = a[ONE_MONOMIAL]
            return Poly._raw({m: c * k for m, c in b.items()})
        terms = {}
        get = terms.get
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(sorted(ma + mb)) if ma and mb else (ma or mb)
                terms[m] = get(m, 0) + ca * cb
        return Poly._raw({m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, Integral) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, d):
        """Divide every coefficient by the integer ``d``; must be exact."""
        d = int(d)
        if d == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        terms = {}
        for m, c in self.terms.items():
            q, r = divmod(c, d)
            if r:
                raise NonIntegerResult(f"coefficient {c} is not divisible by {d}")
            terms[m] = q
        return Poly._raw(terms)

    def subs(self, assignment):
        """Partial substitution; unassigned variables are kept."""
        result = 0
        for m, c in self.terms.items():
            term = c
            kept = []
            for name in m:
                if name in assignment:
                    term = ring_mul(term, assignment[name])
                else:
                    kept.append(name)
            if kept:
                term = ring_mul(term, Poly.monomial(kept))
            result = ring_add(result, term)
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (Integral, Fraction)):
            if not self.terms:
                return other == 0
            return len(self.terms) == 1 and self.terms.get(ONE_MONOMIAL) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Poly({render(self)!r})"


def var(name):
    return Poly.var(name)


def edge_var(i, j, prefix="w"):
    """Variable for the symmetric weight of the pair {i, j}; i and j may come in either order."""
    if i > j:
        i, j = j, i
    return Poly.var(f"{prefix}_{i}_{j}")


# ---------------------------------------------------------------------------
# generic ring operations over int | Fraction | Poly


def normalize(x):
    """Canonical scalar form: Fractions with denominator 1 become ints."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    if isinstance(x, bool):
        return int(x)
    return x


def _check(a, b):
    if isinstance(a, Poly) and isinstance(b, Fraction) and b.denominator != 1:
        raise MixedRing("cannot combine a rational number with a polynomial")
    if isinstance(b, Poly) and isinstance(a, Fraction) and a.denominator != 1:
        raise MixedRing("cannot combine a rational number with a polynomial")


def ring_add(a, b):
    _check(a, b)
    return normalize(a + b)


def ring_sub(a, b):
    _check(a, b)
    return normalize(a - b)


def ring_mul(a, b):
    _check(a, b)
    return normalize(a * b)


def ring_neg(a):
    return normalize(-a)


def ring_pow(a, k):
    return normalize(a ** k)


def is_zero(x):
    return x == 0


def poly_eval(p, assignment):
    """Substitute values for every variable of ``p``.

    Raises :class:`UnboundVariable` if a variable of ``p`` has no value.
    """
    if not isinstance(p, Poly):
        return normalize(p)
    for name in p.variables():
        if name not in assignment:
            raise UnboundVariable(name)
    return normalize(p.subs(assignment))


# ---------------------------------------------------------------------------
# text form


def _render_mono(key):
    parts = []
    for name, e in key:
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def render(x):
    """Text form used by the CLI, e.g. ``w_1_2*w_1_3 + 2*w_2_3``."""
    if not isinstance(x, Poly):
        return str(normalize(x))
    if not x.terms:
        return "0"
    out = []
    for key, c in x.items():
        mono = _render_mono(key)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


_TERM = re.compile(r"\s*([+-]?)\s*([^+-]+)")


def parse_poly(text):
    """Inverse of :func:`render`.  Returns an int/Fraction for constants."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    if re.fullmatch(r"-?\d+/\d+", text):
        return normalize(Fraction(text))
    terms = {}
    pos = 0
    for match in _TERM.finditer(text):
        if match.start() != pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        pos = match.end()
        sign = -1 if match.group(1) == "-" else 1
        coeff = 1
        names = []
        for factor in match.group(2).strip().split("*"):
            factor = factor.strip()
            if re.fullmatch(r"\d+", factor):
                coeff *= int(factor)
            elif "^" in factor:
                name, e = factor.split("^")
                names.extend([name.strip()] * int(e))
            elif factor:
                names.append(factor)
            else:
                raise ValueError(f"cannot parse polynomial {text!r}")
        m = tuple(sorted(names))
        terms[m] = terms.get(m, 0) + sign * coeff
    if pos != len(text):
        raise ValueError(f"cannot parse polynomial {text!r}")
    p = Poly(terms)
    if p.is_constant():
        return p.constant_term()
    return p
