"""Exact integer Laurent polynomials in finitely many ordered variables.

Terms are stored sparsely as {exponent tuple: coefficient} with Python
integers, so coefficients never overflow and division is exact or fails
loudly.  Exact division shifts both operands into the polynomial cone and
eliminates lexicographic leading terms; lex is a well-order on the shifted
exponents, so the loop terminates, and any leading-term mismatch proves the
quotient does not exist over the integers.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class NonLaurentDivisionError(ArithmeticError):
    """The requested quotient is not an integer Laurent polynomial."""


class Laurent:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, int] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple, int] = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    if len(exp) != nvars:
                        raise ValueError("exponent arity mismatch")
                    self.terms[tuple(exp)] = c

    # -- constructors

    @classmethod
    def zero(cls, nvars: int) -> "Laurent":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "Laurent":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def generator(cls, nvars: int, position: int) -> "Laurent":
        exp = [0] * nvars
        exp[position] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, nvars: int, exponents: Iterable[int], coeff: int = 1) -> "Laurent":
        return cls(nvars, {tuple(exponents): coeff})

    # -- structure

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars: 1}

    def is_positive(self) -> bool:
        """All coefficients nonnegative (and by storage convention, nonzero)."""
        return all(c > 0 for c in self.terms.values())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Laurent)
            and other.nvars == self.nvars
            and other.terms == self.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- ring operations

    def _binary_check(self, other: "Laurent") -> None:
        if self.nvars != other.nvars:
            raise ValueError("operands live in different Laurent rings")

    def __add__(self, other: "Laurent") -> "Laurent":
        self._binary_check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            v = out.get(exp, 0) + c
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        return Laurent(self.nvars, out)

    def __neg__(self) -> "Laurent":
        return Laurent(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent") -> "Laurent":
        self._binary_check(other)
        out: dict[tuple, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(exp, 0) + c1 * c2
                if v:
                    out[exp] = v
                else:
                    out.pop(exp, None)
        return Laurent(self.nvars, out)

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            raise ValueError("negative powers only exist for monomials; invert explicitly")
        result = Laurent.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exponents: Iterable[int]) -> "Laurent":
        """Multiply by the (possibly inverse) monomial with the given exponents."""
        delta = tuple(exponents)
        return Laurent(
            self.nvars,
            {tuple(a + b for a, b in zip(e, delta)): c for e, c in self.terms.items()},
        )

    def exact_div(self, other: "Laurent") -> "Laurent":
        """Exact quotient self / other; raises NonLaurentDivisionError otherwise."""
        self._binary_check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return Laurent.zero(self.nvars)

        # Shift by the true per-coordinate minimum exponents.  min-exponent is
        # a valuation (no zero divisors), so the shifted quotient has minimum
        # exponent exactly 0 in every coordinate whenever it exists: honest
        # polynomial division below is then complete, not just sound.
        def floor_exps(poly: Laurent) -> tuple:
            its = iter(poly.terms)
            mins = list(next(its))
            for e in its:
                for k, v in enumerate(e):
                    if v < mins[k]:
                        mins[k] = v
            return tuple(mins)

        fshift = floor_exps(self)
        gshift = floor_exps(other)
        num = self.shift(tuple(-v for v in fshift))
        den = other.shift(tuple(-v for v in gshift))

        lead_g = max(den.terms)
        cg = den.terms[lead_g]
        quotient: dict[tuple, int] = {}
        rem = dict(num.terms)
        while rem:
            lead_f = max(rem)
            cf = rem[lead_f]
            exp = tuple(a - b for a, b in zip(lead_f, lead_g))
            if any(v < 0 for v in exp) or cf % cg != 0:
                raise NonLaurentDivisionError("non-Laurent division")
            coeff = cf // cg
            quotient[exp] = coeff
            for eg, vg in den.terms.items():
                e = tuple(a + b for a, b in zip(exp, eg))
                v = rem.get(e, 0) - coeff * vg
                if v:
                    rem[e] = v
                else:
                    rem.pop(e, None)
        back = tuple(g - f for f, g in zip(fshift, gshift))
        return Laurent(self.nvars, quotient).shift(tuple(-v for v in back))

    # -- presentation

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        return sorted(self.terms.items(), reverse=True)

    def format(self, names: list[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, exp):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Laurent({self.format([f'x{k}' for k in range(self.nvars)])})"

    def to_json(self) -> list:
        return [[list(e), c] for e, c in self.sorted_terms()]
