"""Exact sparse polynomial arithmetic over the fixed variable set {a, b, x, t}.

A polynomial is a mapping from exponent 4-tuples (deg_a, deg_b, deg_x,
deg_t) to nonzero arbitrary-precision integer coefficients; the zero
polynomial is the empty mapping.  Every operation returns this canonical
form (no zero coefficient is ever stored), so structural equality is
exact polynomial equality and is the only equality the identity suite
relies on.  Coefficients are plain Python ints, never floats: several of
the quantities computed downstream (row sums of the weight triangles, for
instance) grow superexponentially.

Text rendering is deterministic -- terms in descending lexicographic
order of the exponent tuples, e.g. ``2*a*b + 3*b^2`` -- and is shared by
the CLI and the golden tests.
"""

from __future__ import annotations

from typing import Mapping

VARIABLES = ("a", "b", "x", "t")

Monomial = tuple[int, int, int, int]

_CONST: Monomial = (0, 0, 0, 0)


class Polynomial:
    """Immutable sparse polynomial in a, b, x, t with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None) -> None:
        data: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    if len(mono) != 4 or any(e < 0 for e in mono):
                        raise ValueError(f"bad monomial {mono!r}")
                    data[tuple(mono)] = coeff
        self._terms = data

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls({_CONST: value}) if value else cls()

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        idx = VARIABLES.index(name)
        mono = tuple(1 if i == idx else 0 for i in range(4))
        return cls({mono: 1})

    # ------------------------------------------------------------------
    # inspection

    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self, var: str | None = None) -> int:
        """Max exponent of ``var``, or max total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(m) for m in self._terms)
        idx = VARIABLES.index(var)
        return max(m[idx] for m in self._terms)

    def as_int(self) -> int:
        """The value of a constant polynomial."""
        if not self._terms:
            return 0
        if set(self._terms) != {_CONST}:
            raise ValueError(f"not a constant polynomial: {self}")
        return self._terms[_CONST]

    # ------------------------------------------------------------------
    # equality / hashing

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # ------------------------------------------------------------------
    # ring operations

    @staticmethod
    def _coerce(value: "Polynomial | int") -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, int):
            return Polynomial.constant(value)
        return NotImplemented

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc = out.get(mono, 0) + coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        result = Polynomial.__new__(Polynomial)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        result = Polynomial.__new__(Polynomial)
        result._terms = {m: -c for m, c in self._terms.items()}
        return result

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "Polynomial | int") -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            result = Polynomial.__new__(Polynomial)
            result._terms = {m: c * other for m, c in self._terms.items()} if other else {}
            return result
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                acc = out.get(mono, 0) + c1 * c2
                if acc:
                    out[mono] = acc
                else:
                    out.pop(mono, None)
        result = Polynomial.__new__(Polynomial)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        acc = ONE
        for _ in range(exponent):
            acc = acc * self
        return acc

    # ------------------------------------------------------------------
    # substitution

    def eval(self, bindings: Mapping[str, int] | None = None, **by_name: int) -> "Polynomial":
        """Substitute integers for a subset of the variables.

        The result is a polynomial in the remaining variables; a full
        binding yields a constant polynomial (read it with ``as_int``).
        """
        merged = dict(bindings or {})
        merged.update(by_name)
        if not merged:
            return self
        pairs = []
        for name, value in merged.items():
            if name not in VARIABLES:
                raise KeyError(f"unknown variable {name!r}")
            pairs.append((VARIABLES.index(name), int(value)))
        out: dict[Monomial, int] = {}
        for mono, coeff in self._terms.items():
            c = coeff
            new = list(mono)
            for idx, value in pairs:
                e = new[idx]
                if e:
                    c *= value ** e
                new[idx] = 0
            if c:
                key = tuple(new)
                acc = out.get(key, 0) + c
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        result = Polynomial.__new__(Polynomial)
        result._terms = out
        return result

    def substitute(self, **replacements: "Polynomial | int") -> "Polynomial":
        """Substitute polynomials for variables (a ring homomorphism)."""
        repl: dict[int, Polynomial] = {}
        for name, value in replacements.items():
            if name not in VARIABLES:
                raise KeyError(f"unknown variable {name!r}")
            repl[VARIABLES.index(name)] = self._coerce(value)
        if not repl:
            return self
        total = ZERO
        for mono, coeff in self._terms.items():
            term = Polynomial.constant(coeff)
            for idx, e in enumerate(mono):
                if not e:
                    continue
                base = repl.get(idx)
                if base is None:
                    key = tuple(e if i == idx else 0 for i in range(4))
                    term = term * Polynomial({key: 1})
                else:
                    term = term * base ** e
            total = total + term
        return total

    def swap_ab(self) -> "Polynomial":
        """Exchange the roles of the a and b variables."""
        result = Polynomial.__new__(Polynomial)
        result._terms = {(m[1], m[0], m[2], m[3]): c for m, c in self._terms.items()}
        return result

    # ------------------------------------------------------------------
    # rendering / pickling

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for mono in sorted(self._terms, reverse=True):
            coeff = self._terms[mono]
            factors = []
            for name, e in zip(VARIABLES, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if factors:
                pieces = ([str(mag)] if mag != 1 else []) + factors
                body = "*".join(pieces)
            else:
                body = str(mag)
            if not parts:
                parts.append(("-" if coeff < 0 else "") + body)
            else:
                parts.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial<{self}>"

    def __reduce__(self):
        return (Polynomial, (self._terms,))


ZERO = Polynomial()
ONE = Polynomial.constant(1)
A = Polynomial.variable("a")
B = Polynomial.variable("b")
X = Polynomial.variable("x")
T = Polynomial.variable("t")


def range_product(base: Polynomial | int, step: Polynomial | int, count: int) -> Polynomial:
    """Return ``prod_{i=0}^{count-1} (base + i*step)``; an empty product is 1.

    With integer base and step this is the rising factorial (step=1) or
    falling factorial (step=-1) written symbolically.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    base = Polynomial._coerce(base)
    step = Polynomial._coerce(step)
    acc = ONE
    for i in range(count):
        acc = acc * (base + step * i)
    return acc
