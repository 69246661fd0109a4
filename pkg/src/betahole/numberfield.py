"""Exact arithmetic in Q(beta) for beta in {2, golden ratio, tribonacci}.

Elements are rational-coefficient polynomials in beta reduced modulo the
(irreducible, monic) minimal polynomial, so equality is literal coefficient
equality.  Signs are decided without floating point: an element is scaled to
integer coefficients and bracketed with a dyadic isolating interval for the
root, refined by bisection until the sign is definite.  Base 2 is carried as
a degree-1 field so every kind runs through the same code path.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction

from .words import PeriodicSeq, as_seq, check_word

NEG, ZERO, POS = -1, 0, 1

_MAX_SCALE_BITS = 1 << 20  # refinement safety cap; never reached for nonzero input


class BetaKind(str, Enum):
    BASE2 = "2"
    GOLDEN = "golden"
    TRIBONACCI = "tribonacci"


# kind -> (ascending monic minpoly, initial isolating interval, delta period)
_KIND_DATA = {
    BetaKind.BASE2: ((-2, 1), (Fraction(2), Fraction(2)), "1"),
    BetaKind.GOLDEN: ((-1, -1, 1), (Fraction(8, 5), Fraction(17, 10)), "10"),
    BetaKind.TRIBONACCI: ((-1, -1, -1, 1), (Fraction(9, 5), Fraction(19, 10)), "110"),
}


class BetaContext:
    """Which beta: minimal polynomial, isolating root interval, delta(beta)."""

    __slots__ = (
        "kind",
        "minpoly",
        "degree",
        "root_interval",
        "delta",
        "_reduction",
        "_floor_cache",
        "_int_pow_cache",
        "_pow_cache",
    )

    def __init__(self, kind: BetaKind) -> None:
        minpoly, interval, delta_period = _KIND_DATA[kind]
        self.kind = kind
        self.minpoly = minpoly
        self.degree = len(minpoly) - 1
        self.root_interval = interval
        self.delta = PeriodicSeq.pure(delta_period)
        # x^degree = sum(_reduction[i] * x^i)
        self._reduction = tuple(-c for c in minpoly[:-1])
        self._floor_cache: dict[int, int] = {}
        self._int_pow_cache: list[tuple[int, ...]] = [
            (1,) + (0,) * (self.degree - 1)
        ]
        self._pow_cache: list[FieldElement] = []

    @property
    def name(self) -> str:
        return self.kind.value

    def zero(self) -> "FieldElement":
        return FieldElement(self, (Fraction(0),) * self.degree)

    def one(self) -> "FieldElement":
        return self.from_rational(1)

    def from_rational(self, q) -> "FieldElement":
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(q)
        return FieldElement(self, tuple(coeffs))

    def beta(self) -> "FieldElement":
        if self.degree == 1:
            return self.from_rational(2)
        coeffs = [Fraction(0)] * self.degree
        coeffs[1] = Fraction(1)
        return FieldElement(self, tuple(coeffs))

    def beta_pow(self, k: int) -> "FieldElement":
        """beta**k for k >= 0, cached."""
        if k < 0:
            return self.one() / self.beta_pow(-k)
        while len(self._pow_cache) <= k:
            if not self._pow_cache:
                self._pow_cache.append(self.one())
            else:
                self._pow_cache.append(self._pow_cache[-1] * self.beta())
        return self._pow_cache[k]

    # -- integer-coefficient kernels (used by the enumeration hot path) --

    def int_mul_beta(self, c: tuple[int, ...]) -> tuple[int, ...]:
        """Multiply an integer-coefficient element by beta, reduced."""
        red = self._reduction
        top = c[-1]
        out = [top * red[0]]
        for i in range(1, self.degree):
            out.append(c[i - 1] + top * red[i])
        return tuple(out)

    def int_horner(self, word: str) -> tuple[int, ...]:
        """sum(word[i] * beta**(p-1-i)) as integer coefficients."""
        acc = (0,) * self.degree
        for ch in word:
            acc = self.int_mul_beta(acc)
            if ch == "1":
                acc = (acc[0] + 1,) + acc[1:]
        return acc

    def int_beta_pow(self, k: int) -> tuple[int, ...]:
        while len(self._int_pow_cache) <= k:
            self._int_pow_cache.append(self.int_mul_beta(self._int_pow_cache[-1]))
        return self._int_pow_cache[k]

    def beta_floor_scaled(self, s: int) -> int:
        """Integer L with L/2^s <= beta <= (L+1)/2^s, by bisection on minpoly.

        The minimal polynomial is strictly increasing on (1, 2], so its sign
        at t/2^s locates t relative to the root.
        """
        cached = self._floor_cache.get(s)
        if cached is not None:
            return cached
        lo, hi = self.root_interval
        lo_t = (lo.numerator << s) // lo.denominator
        hi_t = -((-hi.numerator << s) // hi.denominator)  # ceil
        d = self.degree

        def value(t: int) -> int:
            return sum(c * t**i * (1 << (s * (d - i))) for i, c in enumerate(self.minpoly))

        if value(lo_t) > 0 or value(hi_t) < 0:
            raise AssertionError("isolating interval does not bracket the root")
        while hi_t - lo_t > 1:
            mid = (lo_t + hi_t) // 2
            if value(mid) <= 0:
                lo_t = mid
            else:
                hi_t = mid
        self._floor_cache[s] = lo_t
        return lo_t

    def int_sign(self, coeffs: tuple[int, ...]) -> int:
        """Sign of an integer-coefficient element; exact, no floating point."""
        if all(c == 0 for c in coeffs):
            return ZERO
        if self.degree == 1 or all(c == 0 for c in coeffs[1:]):
            return POS if coeffs[0] > 0 else NEG
        s = 64
        while s <= _MAX_SCALE_BITS:
            L = self.beta_floor_scaled(s)
            # bound sum(c_k * beta^k) * 2^(s*(degree-1)) between lo and hi
            lo = hi = 0
            for k, c in enumerate(coeffs):
                if c == 0:
                    continue
                scale = 1 << (s * (self.degree - 1 - k))
                a = c * L**k * scale
                b = c * (L + 1) ** k * scale
                lo += min(a, b)
                hi += max(a, b)
            if lo > 0:
                return POS
            if hi < 0:
                return NEG
            s *= 2
        raise RuntimeError("sign refinement exceeded the scale cap")

    def int_compare(self, a: tuple[int, ...], b: tuple[int, ...]) -> int:
        return self.int_sign(tuple(x - y for x, y in zip(a, b)))

    def __repr__(self) -> str:
        return f"BetaContext({self.kind.value})"


_CONTEXTS: dict[BetaKind, BetaContext] = {}


def make_context(kind: "BetaKind | str") -> BetaContext:
    kind = BetaKind(kind)
    ctx = _CONTEXTS.get(kind)
    if ctx is None:
        ctx = _CONTEXTS[kind] = BetaContext(kind)
    return ctx


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = a[:]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv_lead
        q[k] = c
        if c:
            for i, bc in enumerate(b):
                a[k + i] -= c * bc
    return q, _poly_trim(a)


def _poly_inverse(coeffs: tuple[Fraction, ...], minpoly: tuple[int, ...]) -> list[Fraction]:
    """Inverse modulo the minimal polynomial via the extended Euclidean algorithm."""
    r0 = [Fraction(c) for c in minpoly]
    r1 = _poly_trim(list(coeffs))
    t0: list[Fraction] = []
    t1: list[Fraction] = [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        prod = [Fraction(0)] * (len(q) + len(t1) - 1)
        for i, qc in enumerate(q):
            if qc:
                for j, tc in enumerate(t1):
                    prod[i + j] += qc * tc
        nxt = [Fraction(0)] * max(len(t0), len(prod))
        for i, c in enumerate(t0):
            nxt[i] += c
        for i, c in enumerate(prod):
            nxt[i] -= c
        t0, t1 = t1, _poly_trim(nxt)
    # minpoly is irreducible, so the gcd is the nonzero constant r1[0]
    c = r1[0]
    return [t / c for t in t1]


class FieldElement:
    """An exact element of Q(beta): c0 + c1*b + ... reduced mod the minpoly."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: BetaContext, coeffs: tuple[Fraction, ...]) -> None:
        if len(coeffs) != ctx.degree:
            raise ValueError("coefficient count must equal the field degree")
        self.ctx = ctx
        self.coeffs = coeffs

    @classmethod
    def from_int_coeffs(cls, ctx: BetaContext, ints: tuple[int, ...]) -> "FieldElement":
        return cls(ctx, tuple(Fraction(c) for c in ints))

    def _coerce(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ValueError("mixed BetaContext arithmetic")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.ctx, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.ctx, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.ctx.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        red = self.ctx._reduction
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                prod[k] = Fraction(0)
                for i, r in enumerate(red):
                    prod[k - d + i] += c * r
        return FieldElement(self.ctx, tuple(prod[:d]))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(beta)")
        inv = _poly_inverse(self.coeffs, self.ctx.minpoly)
        inv += [Fraction(0)] * (self.ctx.degree - len(inv))
        return FieldElement(self.ctx, tuple(inv))

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
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def sign(self) -> int:
        """NEG, ZERO or POS; exact via interval refinement around the root."""
        if self.is_zero():
            return ZERO
        if all(c == 0 for c in self.coeffs[1:]):
            return POS if self.coeffs[0] > 0 else NEG
        q = math.lcm(*(c.denominator for c in self.coeffs))
        ints = tuple(int(c * q) for c in self.coeffs)
        return self.ctx.int_sign(ints)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ctx.from_rational(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ctx.kind, self.coeffs))

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare FieldElement with {type(other).__name__}")
        return (self - o).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def decimal(self, digits: int) -> str:
        """Decimal string correct to `digits` significant digits.

        Rational values round exactly; irrational ones refine the root
        interval until both interval ends round to the same string.
        """
        if digits < 1:
            raise ValueError("digits must be >= 1")
        if self.is_zero():
            return "0"
        if all(c == 0 for c in self.coeffs[1:]):
            return _decimal_of_fraction(self.coeffs[0], digits)
        q = math.lcm(*(c.denominator for c in self.coeffs))
        ints = tuple(int(c * q) for c in self.coeffs)
        ctx = self.ctx
        s = 64
        while s <= _MAX_SCALE_BITS:
            L = ctx.beta_floor_scaled(s)
            lo = hi = 0
            for k, c in enumerate(ints):
                if c == 0:
                    continue
                scale = 1 << (s * (ctx.degree - 1 - k))
                a = c * L**k * scale
                b = c * (L + 1) ** k * scale
                lo += min(a, b)
                hi += max(a, b)
            den = q * (1 << (s * (ctx.degree - 1)))
            slo = _decimal_of_fraction(Fraction(lo, den), digits)
            shi = _decimal_of_fraction(Fraction(hi, den), digits)
            if slo == shi:
                return slo
            s *= 2
        raise RuntimeError("decimal refinement exceeded the scale cap")

    def __float__(self) -> float:
        return float(Fraction(self.decimal(17)))

    def __repr__(self) -> str:
        return self.serialize()

    def serialize(self) -> str:
        """Render as `c0 + c1*b + c2*b^2` with exact rationals, zero terms dropped."""
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            coeff = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if k == 0:
                term = coeff
            else:
                var = "b" if k == 1 else f"b^{k}"
                term = var if mag == 1 else f"{coeff}*{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts) if parts else "0"


def _decimal_of_fraction(x: Fraction, digits: int) -> str:
    """Round a rational to `digits` significant digits (half away from zero)."""
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    x = abs(x)
    e = len(str(x.numerator)) - len(str(x.denominator))
    while x >= 10 ** (e + 1):
        e += 1
    while x < 10**e:
        e -= 1
    scaled = x * Fraction(10) ** (digits - 1 - e)
    q = (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)
    if q >= 10**digits:
        q //= 10
        e += 1
    digs = str(q)
    if e >= digits - 1:
        body = digs + "0" * (e - digits + 1)
    elif e >= 0:
        body = digs[: e + 1] + "." + digs[e + 1 :]
    else:
        body = "0." + "0" * (-e - 1) + digs
    return sign + body


def eval_periodic(word: str, ctx: BetaContext) -> FieldElement:
    """Exact value of the purely periodic expansion (word)^inf.

    Equals (sum of word[i] * beta^(p-i)) / (beta^p - 1).
    """
    check_word(word)
    p = len(word)
    num = FieldElement.from_int_coeffs(ctx, ctx.int_horner(word))
    den = FieldElement.from_int_coeffs(ctx, ctx.int_beta_pow(p)) - 1
    return num / den


def eval_eventually_periodic(seq: "PeriodicSeq | str", ctx: BetaContext) -> FieldElement:
    """Exact value of pre followed by (period)^inf."""
    seq = as_seq(seq)
    tail = eval_periodic(seq.period, ctx)
    if not seq.pre:
        return tail
    head = FieldElement.from_int_coeffs(ctx, ctx.int_horner(seq.pre))
    den = FieldElement.from_int_coeffs(ctx, ctx.int_beta_pow(len(seq.pre)))
    return (head + tail) / den
