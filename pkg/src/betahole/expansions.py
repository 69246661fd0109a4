"""The beta-transformation, greedy/quasi-greedy digits, and admissibility.

A finite word is admissible for a given beta when every cyclic rotation,
extended periodically, stays strictly below delta(beta) in lexicographic
order; those are exactly the periodic sequences realized as expansions of
orbit points in [0, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numberfield import BetaContext, FieldElement
from .words import PeriodicSeq, check_word, cyclic_lt, rotations


def _require_unit_interval(x: FieldElement, allow_zero: bool = True) -> None:
    s = x.sign()
    if s < 0 or (s == 0 and not allow_zero) or (x - 1).sign() >= 0:
        lo = "[0, 1)" if allow_zero else "(0, 1)"
        raise ValueError(f"argument outside {lo}: {x!r}")


def t_beta(x: FieldElement, ctx: BetaContext) -> FieldElement:
    """One step of x -> beta*x mod 1; the integer part is found by exact sign tests."""
    _require_unit_interval(x)
    y = x * ctx.beta()
    if (y - 1).sign() >= 0:
        y = y - 1
    return y


def greedy_digits(x: FieldElement, ctx: BetaContext, n: int) -> str:
    """First n digits of the greedy expansion of x in [0, 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _require_unit_interval(x)
    digits = []
    r = x
    for _ in range(n):
        y = r * ctx.beta()
        if (y - 1).sign() >= 0:
            digits.append("1")
            r = y - 1
        else:
            digits.append("0")
            r = y
    return "".join(digits)


def quasi_greedy_digits(x: FieldElement, ctx: BetaContext, n: int) -> "PeriodicSeq | str":
    """Quasi-greedy expansion of x in (0, 1): the greedy one unless it terminates.

    A terminating greedy expansion b_1..b_k 0^inf is rewritten by decrementing
    its last nonzero digit and appending delta(beta), so the output never ends
    in 0^inf.  Returns an exact PeriodicSeq when the remainder orbit hits zero
    or cycles within n steps, otherwise the n-digit greedy prefix.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if x.sign() == 0:
        raise ValueError("0 has no expansion avoiding a 0^inf tail")
    _require_unit_interval(x, allow_zero=False)
    digits: list[str] = []
    seen: dict[FieldElement, int] = {}
    r = x
    for i in range(n):
        if r.is_zero():
            # greedy expansion is finite: apply the last-digit decrement rule
            k = "".join(digits).rfind("1")
            pre = "".join(digits[:k]) + "0" + ctx.delta.pre
            return PeriodicSeq(pre, ctx.delta.period).canonical()
        if r in seen:
            j = seen[r]
            return PeriodicSeq("".join(digits[:j]), "".join(digits[j:])).canonical()
        seen[r] = i
        y = r * ctx.beta()
        if (y - 1).sign() >= 0:
            digits.append("1")
            r = y - 1
        else:
            digits.append("0")
            r = y
    return "".join(digits)


@dataclass(frozen=True)
class AdmissibilityReport:
    word: str
    admissible: bool
    failing_rotation_offset: int | None = None
    failing_comparison: tuple[str, str] | None = None

    def render(self) -> str:
        if self.admissible:
            return f"{self.word}: admissible"
        rot, delta = self.failing_comparison
        return (
            f"{self.word}: inadmissible offset={self.failing_rotation_offset}: "
            f"({rot})^∞ ⊀ {delta}"
        )


def is_admissible(w: str, ctx: BetaContext) -> AdmissibilityReport:
    """Check every rotation of w against delta(beta), smallest offset first."""
    check_word(w)
    dper = ctx.delta.period
    for offset, r in enumerate(rotations(w)):
        if not cyclic_lt(r, dper):
            return AdmissibilityReport(w, False, offset, (r, str(ctx.delta)))
    return AdmissibilityReport(w, True)


def rotation_numerators(w: str, ctx: BetaContext) -> list[tuple[int, ...]]:
    """Integer-coefficient numerators of all rotations' periodic values.

    The value of (rotation k)^inf is numerator_k / (beta^p - 1); successive
    numerators follow the shift identity N(sigma w) = beta*N(w) - w_1*(beta^p - 1).
    """
    p = len(w)
    dcoeffs = ctx.int_beta_pow(p)
    dcoeffs = (dcoeffs[0] - 1,) + dcoeffs[1:]  # beta^p - 1
    n = ctx.int_horner(w)
    out = [n]
    for k in range(p - 1):
        n = ctx.int_mul_beta(n)
        if w[k] == "1":
            n = tuple(a - b for a, b in zip(n, dcoeffs))
        out.append(n)
    return out


def orbit_min(w: str, ctx: BetaContext) -> tuple[str, FieldElement]:
    """The rotation of w with the smallest periodic value, and that exact value.

    Two independent routes must agree: the exact minimum over all rotations'
    values, and the lexicographically least rotation.  A disagreement would
    mean the order/value correspondence is broken, so it raises.
    """
    report = is_admissible(w, ctx)
    if not report.admissible:
        raise ValueError(f"inadmissible word: {report.render()}")
    nums = rotation_numerators(w, ctx)
    best = 0
    for k in range(1, len(nums)):
        if ctx.int_compare(nums[k], nums[best]) < 0:
            best = k
    rots = rotations(w)
    lex_idx = rots.index(min(rots))
    if best != lex_idx:
        raise RuntimeError(
            f"orbit minimum of {w} at offset {best} but lex-min rotation at {lex_idx}"
        )
    p = len(w)
    num = FieldElement.from_int_coeffs(ctx, nums[best])
    den = FieldElement.from_int_coeffs(ctx, ctx.int_beta_pow(p)) - 1
    return rots[best], num / den


def survives(w: str, t, ctx: BetaContext) -> bool:
    """Whether the periodic point of w keeps its whole orbit at or above t."""
    if isinstance(t, (int, Fraction)):
        t = ctx.from_rational(t)
    _require_unit_interval(t)
    _, value = orbit_min(w, ctx)
    return (value - t).sign() >= 0
