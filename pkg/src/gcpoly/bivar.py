"""Exact bivariate polynomials with ring-flexible coefficients.

Coefficients are python ints in the common case, but any value with ring
arithmetic against ints works (fractions.Fraction, the cyclotomic numbers
from gcpoly.cyclotomic).  Zero coefficients are never stored.  The one
term order used everywhere, for printing and for structured output, is
graded lexicographic with the highest total degree first and ties broken
by the first variable's exponent, descending.
"""

from __future__ import annotations

from fractions import Fraction

LM = ("l", "m")
UT = ("u", "t")


def _is_zero(c) -> bool:
    return not c


class BivarPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, terms=None, variables=LM):
        self.variables = tuple(variables)
        if len(self.variables) != 2:
            raise ValueError("exactly two variable names are required")
        clean = {}
        if terms:
            for (i, j), c in dict(terms).items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in term {(i, j)}")
                if not _is_zero(c):
                    clean[(i, j)] = c
        self.terms = clean

    # construction helpers

    @classmethod
    def zero(cls, variables=LM) -> BivarPoly:
        return cls({}, variables)

    @classmethod
    def constant(cls, c, variables=LM) -> BivarPoly:
        return cls({(0, 0): c}, variables)

    @classmethod
    def variable(cls, axis: int, variables=LM) -> BivarPoly:
        if axis not in (0, 1):
            raise ValueError("axis must be 0 or 1")
        key = (1, 0) if axis == 0 else (0, 1)
        return cls({key: 1}, variables)

    # predicates and degrees

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((i + j for i, j in self.terms), default=-1)

    def degree_in(self, axis: int) -> int:
        if axis not in (0, 1):
            raise ValueError("axis must be 0 or 1")
        return max((k[axis] for k in self.terms), default=-1)

    # ring structure

    def _check_compatible(self, other: BivarPoly):
        if self.variables != other.variables:
            raise ValueError(
                f"variable mismatch: {self.variables} vs {other.variables}")

    def _coerce(self, other) -> BivarPoly:
        if isinstance(other, BivarPoly):
            self._check_compatible(other)
            return other
        return BivarPoly.constant(other, self.variables)

    def __eq__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self.terms.items()}, self.variables)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if _is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return BivarPoly(out, self.variables)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, BivarPoly):
            if _is_zero(other):
                return BivarPoly.zero(self.variables)
            return BivarPoly({k: c * other for k, c in self.terms.items()},
                             self.variables)
        self._check_compatible(other)
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                s = out.get(k, 0) + c1 * c2
                if _is_zero(s):
                    out.pop(k, None)
                else:
                    out[k] = s
        return BivarPoly(out, self.variables)

    def __rmul__(self, other):
        if _is_zero(other):
            return BivarPoly.zero(self.variables)
        return BivarPoly({k: other * c for k, c in self.terms.items()},
                         self.variables)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BivarPoly.constant(1, self.variables)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # calculus and evaluation

    def partial(self, axis: int) -> BivarPoly:
        """Formal partial derivative along variable 0 or 1."""
        out = {}
        for (i, j), c in self.terms.items():
            e = (i, j)[axis]
            if e == 0:
                continue
            k = (i - 1, j) if axis == 0 else (i, j - 1)
            out[k] = c * e
        return BivarPoly(out, self.variables)

    def evaluate(self, x, y):
        """Exact value at (x, y); x and y may be ints, Fractions or any
        coefficients compatible with the stored ones."""
        xp, yp = {0: 1}, {0: 1}

        def pw(cache, base, e):
            v = cache.get(e)
            if v is None:
                v = cache[e - 1] * base if (e - 1) in cache else base ** e
                cache[e] = v
            return v

        acc = 0
        for (i, j) in sorted(self.terms):
            c = self.terms[(i, j)]
            acc = acc + c * pw(xp, x, i) * pw(yp, y, j)
        return acc

    def substitute(self, first=None, second=None) -> BivarPoly:
        """Substitute polynomials (or scalars) for the variables.

        None keeps the variable as-is.  The result uses the same variable
        names as self.
        """
        vs = self.variables
        sub0 = BivarPoly.variable(0, vs) if first is None else self._coerce(first)
        sub1 = BivarPoly.variable(1, vs) if second is None else self._coerce(second)
        p0 = {0: BivarPoly.constant(1, vs)}
        p1 = {0: BivarPoly.constant(1, vs)}

        def pw(cache, base, e):
            while e not in cache:
                top = max(cache)
                cache[top + 1] = cache[top] * base
            return cache[e]

        acc = BivarPoly.zero(vs)
        for (i, j), c in self.terms.items():
            acc = acc + pw(p0, sub0, i) * pw(p1, sub1, j) * c
        return acc

    def shift_first(self, second_coeff=0, const=0) -> BivarPoly:
        """p(x, y) -> p(x + a*y + b, y) for the stored variable pair."""
        vs = self.variables
        shifted = BivarPoly({(1, 0): 1, (0, 1): second_coeff, (0, 0): const}, vs)
        return self.substitute(first=shifted)

    def map_coefficients(self, fn) -> BivarPoly:
        return BivarPoly({k: fn(c) for k, c in self.terms.items()},
                         self.variables)

    # canonical ordering and rendering

    def sorted_terms(self):
        keys = sorted(self.terms, key=lambda k: (k[0] + k[1], k[0]),
                      reverse=True)
        return [(k, self.terms[k]) for k in keys]

    def text(self, names: tuple[str, str] | None = None) -> str:
        """Canonical text form, e.g. 'l^2 + 2*l*m + m^2 - 1'."""
        if not self.terms:
            return "0"
        n0, n1 = names if names is not None else self.variables
        pieces = []
        for (i, j), c in self.sorted_terms():
            mono = "*".join(
                ([f"{n0}^{i}" if i > 1 else n0] if i else []) +
                ([f"{n1}^{j}" if j > 1 else n1] if j else []))
            if not isinstance(c, (int, Fraction)):
                is_rat = getattr(c, "is_rational", None)
                if is_rat is not None and c.is_rational():
                    c = c.rational_value()
                    if c.denominator == 1:
                        c = int(c)
            sign = None
            if isinstance(c, int) or isinstance(c, Fraction):
                if c < 0:
                    sign, c = "-", -c
                else:
                    sign = "+"
                if c == 1 and mono:
                    body = mono
                else:
                    body = f"{c}*{mono}" if mono else f"{c}"
            else:
                sign = "+"
                body = f"({c})*{mono}" if mono else f"({c})"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def terms_list(self) -> list[dict]:
        """Structured form: one entry per term in canonical order."""
        return [{"i": i, "j": j, "c": str(c)}
                for (i, j), c in self.sorted_terms()]

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"BivarPoly({self.text()!r}, variables={self.variables!r})"


def as_integer_poly(p: BivarPoly) -> BivarPoly:
    """Convert Fraction coefficients back to ints, refusing silent rounding."""
    out = {}
    for k, c in p.terms.items():
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ArithmeticError(
                    f"non-integer coefficient {c} at exponents {k}")
            c = int(c)
        elif not isinstance(c, int):
            raise ArithmeticError(
                f"coefficient of unexpected type {type(c).__name__} at {k}")
        out[k] = c
    return BivarPoly(out, p.variables)
