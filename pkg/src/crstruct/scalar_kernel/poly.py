"""Monomials and polynomials over Q(i) in conjugation-closed symbols."""

from __future__ import annotations

from typing import Iterable, Mapping

from .gaussrat import ONE, ZERO, GaussRat


class Monomial:
    """A power product ``s1^e1 * s2^e2 * ...`` with positive exponents.

    Factors are kept sorted by the global symbol order, so equal monomials
    have identical factor tuples.
    """

    __slots__ = ("factors", "_hash", "_order")

    def __init__(self, factors: tuple = ()):
        self.factors = factors
        self._hash = None
        self._order = None

    @classmethod
    def from_dict(cls, exps: Mapping) -> Monomial:
        items = [(s, e) for s, e in exps.items() if e]
        for s, e in items:
            if e < 0:
                raise ValueError(f"negative exponent for {s}")
        items.sort(key=lambda se: se[0].sort_key)
        return cls(tuple(items))

    @classmethod
    def of(cls, symbol, exp: int = 1) -> Monomial:
        return cls(((symbol, exp),)) if exp else ONE_MONO

    def as_dict(self) -> dict:
        return dict(self.factors)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.factors == other.factors

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.factors)
        return self._hash

    def __repr__(self):
        return f"Monomial({self.to_expr()})"

    def __bool__(self):
        return bool(self.factors)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.factors)

    @property
    def order_key(self) -> tuple:
        """Sort key realising degree-lexicographic order, largest first."""
        if self._order is None:
            self._order = (
                -self.degree,
                tuple((s.sort_key, -e) for s, e in self.factors),
            )
        return self._order

    def symbols(self):
        return [s for s, _ in self.factors]

    def exponent(self, symbol) -> int:
        for s, e in self.factors:
            if s == symbol:
                return e
        return 0

    def __mul__(self, other: Monomial) -> Monomial:
        if not self.factors:
            return other
        if not other.factors:
            return self
        exps = dict(self.factors)
        for s, e in other.factors:
            exps[s] = exps.get(s, 0) + e
        return Monomial.from_dict(exps)

    def __pow__(self, n: int) -> Monomial:
        if n == 0:
            return ONE_MONO
        return Monomial(tuple((s, e * n) for s, e in self.factors))

    def divides(self, other: Monomial) -> bool:
        exps = dict(other.factors)
        return all(exps.get(s, 0) >= e for s, e in self.factors)

    def __truediv__(self, other: Monomial) -> Monomial:
        exps = dict(self.factors)
        for s, e in other.factors:
            left = exps.get(s, 0) - e
            if left < 0:
                raise ValueError(f"{other.to_expr()} does not divide {self.to_expr()}")
            exps[s] = left
        return Monomial.from_dict(exps)

    def gcd(self, other: Monomial) -> Monomial:
        exps = dict(other.factors)
        return Monomial.from_dict(
            {s: min(e, exps[s]) for s, e in self.factors if s in exps}
        )

    def lcm(self, other: Monomial) -> Monomial:
        exps = dict(self.factors)
        for s, e in other.factors:
            exps[s] = max(exps.get(s, 0), e)
        return Monomial.from_dict(exps)

    def conj(self) -> Monomial:
        return Monomial.from_dict({s.conj(): e for s, e in self.factors})

    def is_unit(self) -> bool:
        return all(s.unit for s, _ in self.factors)

    def to_expr(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for s, e in self.factors:
            parts.append(s.to_expr() if e == 1 else f"{s.to_expr()}^{e}")
        return "*".join(parts)


ONE_MONO = Monomial()


def _format_term(coeff: GaussRat, mono: Monomial) -> str:
    if not mono:
        return coeff.to_expr()
    m = mono.to_expr()
    if coeff == 1:
        return m
    if coeff == -1:
        return "-" + m
    return f"{coeff.to_expr()}*{m}"


class StarPoly:
    """A polynomial with Gaussian-rational coefficients.

    Zero coefficients are never stored; two polynomials are equal exactly when
    their term dictionaries are equal.  ``terms`` lists them in canonical
    degree-lexicographic order.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, GaussRat] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> StarPoly:
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, value) -> StarPoly:
        c = GaussRat.coerce(value)
        return cls._raw({ONE_MONO: c} if c else {})

    @classmethod
    def symbol(cls, symbol, exp: int = 1) -> StarPoly:
        return cls._raw({Monomial.of(symbol, exp): ONE})

    @classmethod
    def monomial(cls, mono: Monomial, coeff=ONE) -> StarPoly:
        c = GaussRat.coerce(coeff)
        return cls._raw({mono: c} if c else {})

    @property
    def terms(self) -> list[tuple[Monomial, GaussRat]]:
        return sorted(self._terms.items(), key=lambda mc: mc[0].order_key)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONO in self._terms)

    def constant_value(self) -> GaussRat:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get(ONE_MONO, ZERO)

    def coefficient(self, mono: Monomial) -> GaussRat:
        return self._terms.get(mono, ZERO)

    def symbols(self) -> set:
        out = set()
        for m in self._terms:
            out.update(m.symbols())
        return out

    def degree(self) -> int:
        return max((m.degree for m in self._terms), default=0)

    def leading(self) -> tuple[Monomial, GaussRat]:
        m = min(self._terms, key=lambda mono: mono.order_key)
        return m, self._terms[m]

    def __eq__(self, other):
        if isinstance(other, StarPoly):
            return self._terms == other._terms
        if isinstance(other, (int, GaussRat)):
            return self == StarPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"StarPoly({self.to_expr()})"

    def __str__(self):
        return self.to_expr()

    def to_expr(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for i, (m, c) in enumerate(self.terms):
            t = _format_term(c, m)
            if i == 0:
                out = t
            elif t.startswith("-"):
                out += " - " + t[1:]
            else:
                out += " + " + t
        return out

    @staticmethod
    def _lift(value) -> StarPoly:
        if isinstance(value, StarPoly):
            return value
        return StarPoly.constant(value)

    @staticmethod
    def _try_lift(value):
        if isinstance(value, StarPoly):
            return value
        try:
            return StarPoly.constant(value)
        except TypeError:
            return None

    def __neg__(self):
        return StarPoly._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other):
        other = StarPoly._try_lift(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return StarPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = StarPoly._try_lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return StarPoly._lift(other) - self

    def __mul__(self, other):
        other = StarPoly._try_lift(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                c = c1 * c2
                s = out.get(m)
                if s is None:
                    out[m] = c
                else:
                    s = s + c
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        return StarPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> StarPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = StarPoly.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, coeff) -> StarPoly:
        c = GaussRat.coerce(coeff)
        if not c:
            return StarPoly()
        return StarPoly._raw({m: v * c for m, v in self._terms.items()})

    def mul_mono(self, mono: Monomial) -> StarPoly:
        return StarPoly._raw({m * mono: c for m, c in self._terms.items()})

    def conj(self) -> StarPoly:
        return StarPoly._raw({m.conj(): c.conj() for m, c in self._terms.items()})

    def diff(self, symbol) -> StarPoly:
        """Partial derivative treating every other symbol (incl. conj) as independent."""
        out: dict = {}
        for m, c in self._terms.items():
            e = m.exponent(symbol)
            if not e:
                continue
            exps = m.as_dict()
            exps[symbol] = e - 1
            nm = Monomial.from_dict(exps)
            out[nm] = out.get(nm, ZERO) + c * e
        return StarPoly(out)

    def subs(self, mapping: Mapping) -> StarPoly:
        """Replace symbols by polynomials; unmapped symbols stay."""
        if not mapping:
            return self
        result = StarPoly()
        cache: dict = {}
        for m, c in self._terms.items():
            term = StarPoly.constant(c)
            rest = {}
            for s, e in m.factors:
                if s in mapping:
                    key = (s, e)
                    if key not in cache:
                        cache[key] = StarPoly._lift(mapping[s]) ** e
                    term = term * cache[key]
                else:
                    rest[s] = e
            if rest:
                term = term.mul_mono(Monomial.from_dict(rest))
            result = result + term
        return result

    def divmod(self, divisor: StarPoly) -> tuple[StarPoly, StarPoly]:
        """Multivariate division by a single polynomial in deg-lex order.

        The remainder is zero exactly when ``divisor`` divides ``self``.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lm, lc = divisor.leading()
        quotient: dict = {}
        remainder: dict = {}
        p = self
        while p._terms:
            m, c = p.leading()
            if lm.divides(m):
                qm, qc = m / lm, c / lc
                quotient[qm] = quotient.get(qm, ZERO) + qc
                p = p - divisor.mul_mono(qm).scale(qc)
            else:
                remainder[m] = remainder.get(m, ZERO) + c
                p = StarPoly._raw({k: v for k, v in p._terms.items() if k != m})
        return StarPoly(quotient), StarPoly(remainder)

    def min_exponents(self) -> Monomial:
        """The largest monomial dividing every term."""
        it = iter(self._terms)
        try:
            g = next(it)
        except StopIteration:
            return ONE_MONO
        for m in it:
            g = g.gcd(m)
            if not g:
                break
        return g

    def div_mono(self, mono: Monomial) -> StarPoly:
        return StarPoly._raw({m / mono: c for m, c in self._terms.items()})


def poly_sum(polys: Iterable[StarPoly]) -> StarPoly:
    total = StarPoly()
    for p in polys:
        total = total + p
    return total
