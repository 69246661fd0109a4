"""The critical hole size for period-p survivors, computed three ways.

For each supported beta the largest hole [0, t) whose survivor set still
contains a point of smallest period p is found by (1) exhaustive search over
primitive cyclic words, (2) the known critical words per period class, and
(3) closed-form expressions in Q(beta).  The cross-check engine runs all
available paths and demands exact agreement.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .expansions import is_admissible, rotation_numerators
from .numberfield import BetaContext, BetaKind, FieldElement, eval_periodic, make_context
from .words import lex_min_rotation, primitive_representatives, rotations

BRUTE, THEOREM, CLOSED = "BruteForce", "TheoremWord", "ClosedForm"

DEFAULT_P_CAP = 20
HARD_P_CAP = 26


@dataclass(frozen=True)
class SurvivorRecord:
    """One row of the critical-value table for a single period p."""

    p: int
    word: str | None
    value: FieldElement
    value_float: str
    method: str
    empty: bool
    ties: int

    def describe(self, kind: BetaKind) -> str:
        if self.empty and self.word is None:
            return f"{kind.value} p={self.p} {self.method}: empty (S=0)"
        word = self.word if self.word is not None else "-"
        line = (
            f"{kind.value} p={self.p} {self.method}: word={word}"
            f" S={self.value.serialize()} ≈ {self.value_float}"
        )
        if self.method == BRUTE:
            line += f" ties={self.ties}"
        return line


def _scan_range(kind_value: str, p: int, lo: int, hi: int):
    """Best admissible class in the value range [lo, hi); pure, fork-safe.

    Returns (numerator coefficients of the best orbit minimum, best word,
    tie count) with ties resolved toward the lexicographically smaller word.
    """
    ctx = make_context(kind_value)
    best_num: tuple[int, ...] | None = None
    best_word: str | None = None
    ties = 0
    for w in primitive_representatives(p, lo, hi):
        if not is_admissible(w, ctx).admissible:
            continue
        nums = rotation_numerators(w, ctx)
        lowest = 0
        for k in range(1, p):
            if ctx.int_compare(nums[k], nums[lowest]) < 0:
                lowest = k
        # dual-route contract: the value minimum must sit at the lex-min rotation
        rots = rotations(w)
        if rots[lowest] != min(rots):
            raise RuntimeError(f"orbit/lex minimum disagreement for {w}")
        if best_num is None:
            best_num, best_word, ties = nums[lowest], w, 1
            continue
        c = ctx.int_compare(nums[lowest], best_num)
        if c > 0:
            best_num, best_word, ties = nums[lowest], w, 1
        elif c == 0:
            ties += 1  # enumeration order is increasing, keep the earlier word
    return best_num, best_word, ties


def brute_force_S(
    ctx: BetaContext,
    p: int,
    workers: int = 1,
    allow_large: bool = False,
    digits: int = 10,
) -> SurvivorRecord:
    """Exhaustive maximum of the orbit minimum over admissible primitive classes."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if p > HARD_P_CAP:
        raise ValueError(f"p={p} exceeds the enumeration cap of {HARD_P_CAP}")
    if p > DEFAULT_P_CAP and not allow_large:
        raise ValueError(
            f"p={p} exceeds the default cap of {DEFAULT_P_CAP}; pass allow_large"
        )
    if workers < 1:
        raise ValueError("workers must be >= 1")

    span = 1 << p
    if workers == 1 or span < 4 * workers:
        parts = [_scan_range(ctx.kind.value, p, 0, span)]
    else:
        bounds = [span * i // workers for i in range(workers + 1)]
        jobs = [(ctx.kind.value, p, bounds[i], bounds[i + 1]) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_range_star, jobs))

    best_num: tuple[int, ...] | None = None
    best_word: str | None = None
    ties = 0
    for num, word, part_ties in parts:
        if num is None:
            continue
        if best_num is None:
            best_num, best_word, ties = num, word, part_ties
            continue
        c = ctx.int_compare(num, best_num)
        if c > 0:
            best_num, best_word, ties = num, word, part_ties
        elif c == 0:
            ties += part_ties  # ranges ascend, earlier word already wins the tie

    if best_num is None:
        return SurvivorRecord(p, None, ctx.zero(), "0", BRUTE, True, 0)
    num = FieldElement.from_int_coeffs(ctx, best_num)
    den = FieldElement.from_int_coeffs(ctx, ctx.int_beta_pow(p)) - 1
    value = num / den
    return SurvivorRecord(p, best_word, value, value.decimal(digits), BRUTE, False, ties)


def _scan_range_star(args):
    return _scan_range(*args)


def _block(reps: int) -> str:
    """The building block 01 (011)^reps of the tribonacci critical words."""
    return "01" + "011" * reps


def theorem_word(kind: "BetaKind | str", p: int) -> str | None:
    """The asserted critical word for period p, or None on the S=0 branches."""
    kind = BetaKind(kind)
    if p < 1:
        raise ValueError("p must be >= 1")
    if kind is BetaKind.BASE2:
        return "0" + "1" * (p - 1)
    if kind is BetaKind.GOLDEN:
        if p in (1, 2):
            return None
        if p % 2 == 1:
            return "0" + "01" * ((p - 1) // 2)
        if p == 4:
            return "0001"
        if p == 6:
            return "000101"
        if p % 4 == 2:
            m = (p - 2) // 4  # m >= 2 here
            return "001" + "01" * (m - 2) + "001" + "01" * m
        m = (p - 4) // 4  # p = 4m+4, m >= 1
        return "001" + "01" * (m - 1) + "001" + "01" * m
    # tribonacci
    if p == 1:
        return None
    if p == 3:
        return "001"
    if p == 4:
        return "0011"
    if p == 6:
        return "001101"
    if p % 3 == 2:
        return _block((p - 2) // 3)
    if p % 3 == 1:
        m = (p - 1) // 3  # m >= 2 here
        if m % 2 == 0:
            z = m // 2
            return _block(z - 1) + _block(z)
        z = (m - 1) // 2
        return _block(z - 1) + _block(z + 1)
    m = p // 3  # p = 3m, m >= 3 here
    if m % 3 == 0:
        z = m // 3
        return _block(z - 1) + _block(z - 1) + _block(z)
    if m % 3 == 1:
        z = (m - 1) // 3
        return _block(z - 1) + _block(z) + _block(z)
    z = (m - 2) // 3
    return _block(z - 1) + _block(z + 1) + _block(z)


def theorem_record(kind: "BetaKind | str", p: int, digits: int = 10) -> SurvivorRecord:
    kind = BetaKind(kind)
    ctx = make_context(kind)
    w = theorem_word(kind, p)
    if w is None:
        return SurvivorRecord(p, None, ctx.zero(), "0", THEOREM, True, 0)
    value = eval_periodic(w, ctx)
    return SurvivorRecord(p, w, value, value.decimal(digits), THEOREM, False, 1)


def closed_form(kind: "BetaKind | str", p: int) -> FieldElement | None:
    """Exact evaluation of the printed rational expressions; None where uncovered."""
    kind = BetaKind(kind)
    if p < 1:
        raise ValueError("p must be >= 1")
    ctx = make_context(kind)
    b = ctx.beta_pow
    if kind is BetaKind.BASE2:
        return ctx.from_rational(2 ** (p - 1) - 1) / (2**p - 1)
    if kind is BetaKind.GOLDEN:
        if p == 2:
            return None
        if p % 2 == 1:
            m = (p - 1) // 2
            return (1 - b(2 * m)) / ((b(2 * m + 1) - 1) * (1 - b(2)))
        if p == 4:
            return 1 / (b(4) - 1)
        if p == 6:
            return (b(2) + 1) / (b(6) - 1)
        if p % 4 == 2:
            m = (p - 2) // 4
            return (1 + b(2 * m + 3) - b(2 * m + 2) - b(4 * m + 1)) / (
                (b(4 * m + 2) - 1) * (1 - b(2))
            )
        m = (p - 4) // 4
        return (1 + b(2 * m + 3) - b(2 * m + 2) - b(4 * m + 3)) / (
            (b(4 * m + 4) - 1) * (1 - b(2))
        )
    # tribonacci
    if p in (1, 3, 4, 6):
        return None
    if p % 3 == 2:
        m = (p - 2) // 3
        return (1 + b(1) - b(3 * m + 1) - b(3 * m + 3)) / (
            (1 - b(3)) * (b(3 * m + 2) - 1)
        )
    if p % 3 == 1:
        m = (p - 1) // 3
        if m % 2 == 0:
            z = m // 2
            return (1 + b(1) + b(3 * z + 2) - b(3 * z + 1) - b(6 * z) - b(6 * z + 2)) / (
                (1 - b(3)) * (b(6 * z + 1) - 1)
            )
        z = (m - 1) // 2
        return (1 + b(1) + b(3 * z + 5) - b(3 * z + 4) - b(6 * z + 3) - b(6 * z + 5)) / (
            (1 - b(3)) * (b(6 * z + 4) - 1)
        )
    m = p // 3
    if m % 3 == 0:
        z = m // 3
        return (
            1 + b(1) + b(3 * z + 2) + b(6 * z + 1)
            - b(3 * z + 1) - b(6 * z) - b(9 * z - 1) - b(9 * z + 1)
        ) / ((1 - b(3)) * (b(9 * z) - 1))
    if m % 3 == 1:
        z = (m - 1) // 3
        return (
            1 + b(1) + b(3 * z + 2) + b(6 * z + 4)
            - b(3 * z + 1) - b(6 * z + 3) - b(9 * z + 2) - b(9 * z + 4)
        ) / ((1 - b(3)) * (b(9 * z + 3) - 1))
    z = (m - 2) // 3
    return (
        1 + b(1) + b(3 * z + 2) + b(6 * z + 7)
        - b(3 * z + 1) - b(6 * z + 6) - b(9 * z + 5) - b(9 * z + 7)
    ) / ((1 - b(3)) * (b(9 * z + 6) - 1))


def closed_record(kind: "BetaKind | str", p: int, digits: int = 10) -> SurvivorRecord | None:
    kind = BetaKind(kind)
    value = closed_form(kind, p)
    if value is None:
        return None
    return SurvivorRecord(p, None, value, value.decimal(digits), CLOSED, False, 1)


def limit_value(kind: "BetaKind | str") -> FieldElement:
    """The exact constant the critical values increase to within each family."""
    kind = BetaKind(kind)
    ctx = make_context(kind)
    b = ctx.beta_pow
    if kind is BetaKind.BASE2:
        return ctx.from_rational(1) / 2
    if kind is BetaKind.GOLDEN:
        return 1 / (b(3) - b(1))
    return (b(2) + 1) / (b(4) - b(1))


@dataclass(frozen=True)
class CrossCheckRow:
    p: int
    method: str
    word: str
    exact: str
    value_float: str
    agrees: bool


@dataclass(frozen=True)
class CrossCheckReport:
    kind: BetaKind
    p_max: int
    rows: tuple[CrossCheckRow, ...]
    theorem_mismatches: tuple[str, ...]
    formula_mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.theorem_mismatches and not self.formula_mismatches

    def csv_rows(self) -> list[str]:
        out = []
        for r in self.rows:
            agrees = "true" if r.agrees else "false"
            out.append(
                f"{self.kind.value},{r.p},{r.method},{r.word},{r.exact},{r.value_float},{agrees}"
            )
        return out


CSV_HEADER = "kind,p,method,word,exact,float,agrees"


def cross_check(
    kind: "BetaKind | str",
    p_max: int,
    workers: int = 1,
    allow_large: bool = False,
    digits: int = 10,
) -> CrossCheckReport:
    """Run every computation path for p <= p_max and compare them exactly.

    The theorem word is the reference.  A brute-force disagreement is fatal
    evidence ("theorem mismatch"); a closed-form disagreement while brute
    force matches the word is a "paper-formula mismatch".  Both are data.
    """
    kind = BetaKind(kind)
    ctx = make_context(kind)
    rows: list[CrossCheckRow] = []
    theorem_bad: list[str] = []
    formula_bad: list[str] = []
    for p in range(1, p_max + 1):
        trec = theorem_record(kind, p, digits)
        reference = trec.value
        brec = brute_force_S(ctx, p, workers=workers, allow_large=allow_large, digits=digits)
        value_ok = (brec.value - reference).sign() == 0
        word_ok = True
        if trec.word is not None:
            word_ok = brec.word == lex_min_rotation(trec.word)
        if not (value_ok and word_ok):
            theorem_bad.append(
                f"{kind.value} p={p}: brute word={brec.word} S={brec.value.serialize()}"
                f" vs theorem word={trec.word} S={reference.serialize()}"
            )
        rows.append(
            CrossCheckRow(
                p, BRUTE, brec.word or "", brec.value.serialize(), brec.value_float,
                value_ok and word_ok,
            )
        )
        rows.append(
            CrossCheckRow(p, THEOREM, trec.word or "", reference.serialize(), trec.value_float, True)
        )
        crec = closed_record(kind, p, digits)
        if crec is not None:
            formula_ok = (crec.value - reference).sign() == 0
            if not formula_ok:
                tag = "paper-formula mismatch" if value_ok else "theorem mismatch"
                formula_bad.append(
                    f"{kind.value} p={p} ({tag}): closed form {crec.value.serialize()}"
                    f" vs theorem word value {reference.serialize()}"
                )
            rows.append(
                CrossCheckRow(p, CLOSED, "", crec.value.serialize(), crec.value_float, formula_ok)
            )
    return CrossCheckReport(kind, p_max, tuple(rows), tuple(theorem_bad), tuple(formula_bad))
