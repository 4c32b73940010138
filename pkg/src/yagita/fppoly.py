"""Polynomials over the prime field F_p.

These carry the total Chern classes produced by the chern module.  The two
operations that matter beyond plain arithmetic are the gcd of the exponents
appearing in a polynomial (which measures the largest n such that the
polynomial lies in the subalgebra generated by x^n) and root extraction over
the unit group F_p^x by trial division.

A polynomial is stored densely: ``coeffs[i]`` is the coefficient of x^i,
reduced mod p, with no trailing zeros.  The zero polynomial has an empty
coefficient tuple.  The degree gcd of a constant polynomial is ``INFINITY``
(a genuinely distinct value, not a sentinel integer): a constant imposes no
constraint at all.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass

from .numutil import is_prime

INFINITY = math.inf

_TERM_RE = re.compile(r"^\s*([+-]?\d+|[+-])?\s*\*?\s*(x(?:\^(\d+))?)?\s*$")


class FpPoly:
    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        cs = [int(c) % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))

    # immutable
    def __setattr__(self, *_):
        raise AttributeError("FpPoly is immutable")

    @classmethod
    def zero(cls, p: int) -> FpPoly:
        return cls(p, ())

    @classmethod
    def one(cls, p: int) -> FpPoly:
        return cls(p, (1,))

    @classmethod
    def constant(cls, p: int, c: int) -> FpPoly:
        return cls(p, (c,))

    @classmethod
    def x(cls, p: int) -> FpPoly:
        return cls(p, (0, 1))

    @classmethod
    def one_plus_ax(cls, p: int, a: int) -> FpPoly:
        return cls(p, (1, a))

    @property
    def degree(self) -> int:
        """Degree of the leading term; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = FpPoly.constant(self.p, other)
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __add__(self, other) -> FpPoly:
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return FpPoly(self.p, out)

    __radd__ = __add__

    def __neg__(self) -> FpPoly:
        return FpPoly(self.p, (-c for c in self.coeffs))

    def __sub__(self, other) -> FpPoly:
        return self + (-self._coerce(other))

    def __mul__(self, other) -> FpPoly:
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return FpPoly.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPoly(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> FpPoly:
        if e < 0:
            raise ValueError("negative powers of polynomials are undefined")
        out = FpPoly.one(self.p)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def _coerce(self, other) -> FpPoly:
        if isinstance(other, FpPoly):
            if other.p != self.p:
                raise ValueError("mixed characteristics")
            return other
        if isinstance(other, int):
            return FpPoly.constant(self.p, other)
        raise TypeError(f"cannot combine FpPoly with {type(other).__name__}")

    def evaluate(self, r: int) -> int:
        """Value at r, as a residue in [0, p)."""
        p, y = self.p, 0
        r %= p
        for c in reversed(self.coeffs):
            y = (y * r + c) % p
        return y

    __call__ = evaluate

    def compose_xk(self, k: int) -> FpPoly:
        """The polynomial f(x^k)."""
        if k < 1:
            raise ValueError("k must be positive")
        out = [0] * (k * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return FpPoly(self.p, out)

    def exponent_gcd(self):
        """Gcd of the exponents of the nonconstant terms; INFINITY for constants.

        This is the largest n such that the polynomial can be written as a
        polynomial in x^n (unbounded for constants, whence INFINITY).
        """
        g = 0
        for i, c in enumerate(self.coeffs):
            if i and c:
                g = math.gcd(g, i)
        return g if g else INFINITY

    def _divide_linear(self, r: int) -> FpPoly:
        # synthetic division by (x - r); caller guarantees r is a root
        p = self.p
        out = [0] * (len(self.coeffs) - 1)
        acc = 0
        for i in range(len(self.coeffs) - 1, 0, -1):
            acc = (acc * r + self.coeffs[i]) % p
            out[i - 1] = acc
        return FpPoly(p, out)

    def all_roots_in_units(self) -> tuple[bool, Counter]:
        """Strip every root in F_p^x by trial division.

        Returns (True, multiset of roots) when the fully divided quotient is
        constant, i.e. the polynomial splits with all roots in the unit group;
        otherwise (False, {}).
        """
        if self.is_zero:
            raise ValueError("zero polynomial has no well-defined root set")
        g = self
        roots: Counter = Counter()
        for r in range(1, self.p):
            while not g.is_constant and g.evaluate(r) == 0:
                g = g._divide_linear(r)
                roots[r] += 1
        if g.is_constant:
            return True, roots
        return False, Counter()

    def __str__(self) -> str:
        if self.is_zero:
            return f"0 (mod {self.p})"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(parts) + f" (mod {self.p})"

    def __repr__(self) -> str:
        return f"FpPoly({self.p}, {self.coeffs})"


def multiply(f: FpPoly, g: FpPoly) -> FpPoly:
    return f * g


def evaluate(f: FpPoly, r: int) -> int:
    return f.evaluate(r)


def exponent_gcd(f: FpPoly):
    return f.exponent_gcd()


def all_roots_in_units(f: FpPoly) -> tuple[bool, Counter]:
    return f.all_roots_in_units()


def mp_q_decompose(n: int, p: int) -> tuple[int, int]:
    """Write n = m * p**q with p not dividing m; returns (m, q)."""
    if n < 1:
        raise ValueError("n must be positive")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = 0
    while n % p == 0:
        n //= p
        q += 1
    return n, q


@dataclass(frozen=True)
class Prop6Verdict:
    gcd: int
    m: int
    q: int
    holds: bool


def check_prop6(f: FpPoly) -> Prop6Verdict:
    """For nonconstant f with all roots in F_p^x, decompose its exponent gcd.

    Writing the gcd as m * p**q, the factor m must divide p - 1.  A failure
    here cannot come from the input (the divisibility is a theorem), so it is
    raised as an arithmetic error rather than returned.
    """
    if f.is_constant:
        raise ValueError("need a nonconstant polynomial")
    ok, _ = f.all_roots_in_units()
    if not ok:
        raise ValueError("polynomial has roots outside F_p^x")
    n = f.exponent_gcd()
    m, q = mp_q_decompose(int(n), f.p)
    holds = (f.p - 1) % m == 0
    if not holds:
        raise ArithmeticError(
            f"exponent gcd {n} = {m}*{f.p}^{q} with {m} not dividing {f.p - 1}; "
            "this indicates an arithmetic bug"
        )
    return Prop6Verdict(int(n), m, q, holds)


def random_unit_root_product(p: int, rng, max_factors: int = 10) -> FpPoly:
    """Random product of at most max_factors linear factors (1 + a*x), a in F_p^x."""
    k = rng.randint(1, max_factors)
    f = FpPoly.one(p)
    for _ in range(k):
        f = f * FpPoly.one_plus_ax(p, rng.randint(1, p - 1))
    return f


def parse_fp_poly(text: str, p: int | None = None) -> FpPoly:
    """Parse "c0 + c1*x + c2*x^2 (mod p)"; the trailing modulus wins over p."""
    text = text.strip()
    m = re.search(r"\(mod\s+(\d+)\)\s*$", text)
    if m:
        p = int(m.group(1))
        text = text[: m.start()].strip()
    if p is None:
        raise ValueError("no modulus given: append '(mod p)' or pass p")
    coeffs: dict[int, int] = {}
    for chunk in re.split(r"(?=[+-])", text.replace(" ", "")):
        if not chunk or chunk in "+-":
            continue
        m = _TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"cannot parse term {chunk!r}")
        c_str, x_part, exp_str = m.groups()
        if c_str is None and x_part is None:
            continue
        c = int(c_str) if c_str not in (None, "+", "-") else (-1 if c_str == "-" else 1)
        e = 0 if x_part is None else (1 if exp_str is None else int(exp_str))
        coeffs[e] = coeffs.get(e, 0) + c
    out = [0] * (max(coeffs, default=0) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return FpPoly(p, out)
