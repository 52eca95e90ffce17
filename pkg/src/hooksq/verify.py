"""Exhaustive and randomized invariant sweeps behind the ``verify`` command.

Each suite walks one family of identities up to a size bound and reports how
many checks ran, how many failed, and the first counterexample seen.  The
suites are shared by the command-line front end and the acceptance tests.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .characters import (
    ORACLE_MAX_N,
    decompose_oracle,
    hook_rep_character,
    inner_product,
    irreducible_character,
    restrict_character,
    square_characters,
)
from .closed_form import full_table, psi
from .partitions import (
    DoubleHook,
    Partition,
    Permutation,
    branch_up,
    classify_shape,
    enumerate_partitions,
    hook_partition,
)
from .tableaux import (
    Coloring,
    action_sign,
    is_proper_swap,
    verify_skew_symmetry,
)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: int = 0
    first_failure: str | None = None
    details: dict = field(default_factory=dict)

    def record(self, ok: bool, message):
        self.checks += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = message() if callable(message) else message

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _all_colorings(n: int):
    for colors in itertools.product((0, 1, 2, 3), repeat=n):
        yield Coloring._unsafe(colors)


def _balanced_tuples(m: int):
    """All color tuples of length m with equally many 1s and 2s."""

    def rec(pos, diff, prefix):
        remaining = m - pos
        if abs(diff) > remaining:
            return
        if pos == m:
            yield prefix
            return
        for c in (0, 1, 2, 3):
            step = 1 if c == 1 else (-1 if c == 2 else 0)
            yield from rec(pos + 1, diff + step, prefix + (c,))

    yield from rec(0, 0, ())


def balanced_colorings(n: int):
    """All colorings of [n] with equally many cells of color 1 and color 2."""
    for colors in _balanced_tuples(n):
        yield Coloring._unsafe(colors)


def first_row_constrained_colorings(lam: Partition):
    """Balanced colorings whose first row carries only colors 0 and 3."""
    q = lam[0]
    for head in itertools.product((0, 3), repeat=q):
        for tail in _balanced_tuples(lam.n - q):
            yield Coloring._unsafe(head + tail)


def suite_epsilon(max_n: int) -> SuiteResult:
    """Sign cocycle and the elementary transposition sign rules: exhaustive
    over transposition generators up to n = 6, randomized beyond."""
    result = SuiteResult("epsilon")
    for n in range(2, min(max_n, 6) + 1):
        cells = [
            (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
        ]
        trans = [Permutation.transposition(n, i, j) for i, j in cells]
        products = {
            (a, b): trans[a] * trans[b]
            for a in range(len(trans))
            for b in range(len(trans))
        }
        for x in _all_colorings(n):
            acted = [x.act(s) for s in trans]
            signs = [action_sign(x, s) for s in trans]
            swapped = x.swap_colors()
            for idx, s in enumerate(trans):
                result.record(
                    action_sign(swapped, s) == signs[idx],
                    lambda x=x, s=s: f"sign changed under color swap: x={tuple(x)}, s={s!r}",
                )
                i, j = cells[idx]
                if x.color(i) == x.color(j):
                    if x.color(i) in (1, 2):
                        result.record(
                            signs[idx] == -1,
                            lambda x=x, s=s: f"equal painted cells must give -1: x={tuple(x)}, s={s!r}",
                        )
                    else:
                        result.record(
                            signs[idx] == 1,
                            lambda x=x, s=s: f"equal blank cells must give +1: x={tuple(x)}, s={s!r}",
                        )
            for a in range(len(trans)):
                xs = acted[a]
                ea = signs[a]
                for b in range(len(trans)):
                    lhs = action_sign(x, products[(a, b)])
                    rhs = ea * action_sign(xs, trans[b])
                    result.record(
                        lhs == rhs,
                        lambda x=x, s=trans[a], t=trans[b]: (
                            f"cocycle failed: x={tuple(x)}, s={s!r}, t={t!r}"
                        ),
                    )
    rng = random.Random(0xC0C)
    for n in range(2, max_n + 1):
        for _ in range(200):
            x = Coloring._unsafe(rng.choices((0, 1, 2, 3), k=n))
            s = Permutation(rng.sample(range(1, n + 1), n))
            t = Permutation(rng.sample(range(1, n + 1), n))
            lhs = action_sign(x, s * t)
            rhs = action_sign(x, s) * action_sign(x.act(s), t)
            result.record(
                lhs == rhs,
                lambda x=x, s=s, t=t: f"cocycle failed: x={tuple(x)}, s={s!r}, t={t!r}",
            )
    return result


def suite_swaps(max_n: int) -> SuiteResult:
    """Order-preserving 1-2 pairings: the balance condition forces sign +1,
    and its failure really can produce -1 (at least one witness recorded)."""
    result = SuiteResult("swaps")
    witnesses = 0
    first_witness = None
    for n in range(1, min(max_n, 7) + 1):
        for x in _all_colorings(n):
            ones = [i for i in range(1, n + 1) if x[i - 1] == 1]
            twos = [i for i in range(1, n + 1) if x[i - 1] == 2]
            for m in range(1, min(len(ones), len(twos)) + 1):
                for sub_ones in itertools.combinations(ones, m):
                    for sub_twos in itertools.combinations(twos, m):
                        s = Permutation.from_cycles(n, list(zip(sub_ones, sub_twos)))
                        balanced = is_proper_swap(x, s)
                        sign = action_sign(x, s)
                        if balanced:
                            result.record(
                                sign == 1,
                                lambda x=x, s=s: f"balanced swap with sign -1: x={tuple(x)}, s={s!r}",
                            )
                        else:
                            result.checks += 1
                            if sign == -1:
                                witnesses += 1
                                if first_witness is None:
                                    first_witness = f"x={tuple(x)}, s={s!r}"
    if max_n >= 3:
        result.record(
            witnesses > 0,
            "expected at least one unbalanced pairing with sign -1",
        )
    result.details["witnesses"] = witnesses
    result.details["first_witness"] = first_witness
    return result


def _lemma31_cases():
    """Base-case colorings: first row blank, every longer row partly blank."""
    blank_pairs = list(itertools.product((0, 3), repeat=2))
    mixed_pairs = [
        p for p in itertools.product((0, 1, 2, 3), repeat=2) if 0 in p or 3 in p
    ]
    lam222 = Partition((2, 2, 2))
    for head in blank_pairs:
        for mid in mixed_pairs:
            for bot in mixed_pairs:
                yield lam222, Coloring._unsafe(head + mid + bot), 1
    lam2211 = Partition((2, 2, 1, 1))
    for head in blank_pairs:
        for mid in mixed_pairs:
            for tail in itertools.product((0, 1, 2, 3), repeat=2):
                if not (set(tail) & {0, 3}):
                    continue
                x = Coloring._unsafe(head + mid + tail)
                if x.k == x.l:
                    yield lam2211, x, -1


def suite_lemma31(max_n: int) -> SuiteResult:
    """Exact skew-symmetry base cases on the two six-box shapes."""
    result = SuiteResult("lemma31")
    if max_n < 6:
        return result
    for lam, x, sign in _lemma31_cases():
        report = verify_skew_symmetry(lam, x, sign, "exact")
        result.record(
            report.verified,
            lambda lam=lam, x=x, sign=sign: f"lam={tuple(lam)}, x={tuple(x)}, expected {sign}",
        )
    return result


def suite_prop32(max_n: int) -> SuiteResult:
    """Exact skew-symmetry for even-tail double hooks, first row blank."""
    result = SuiteResult("prop32")
    for n in range(4, max_n + 1):
        for lam in enumerate_partitions(n):
            shape = classify_shape(lam)
            if not isinstance(shape, DoubleHook) or shape.d1 % 2:
                continue
            sign = (-1) ** (shape.d1 // 2 % 2)
            for x in first_row_constrained_colorings(lam):
                if x.swap_colors() < x:
                    continue
                report = verify_skew_symmetry(lam, x, sign, "exact")
                result.record(
                    report.verified,
                    lambda lam=lam, x=x, sign=sign: f"lam={tuple(lam)}, x={tuple(x)}, expected {sign}",
                )
    return result


def suite_hooks(max_n: int) -> SuiteResult:
    """Projected skew-symmetry for hooks over every balanced coloring."""
    result = SuiteResult("hooks")
    for n in range(1, max_n + 1):
        for m in range(n):
            lam = hook_partition(n, m)
            sign = (-1) ** (m // 2 % 2)
            for x in balanced_colorings(n):
                if x.swap_colors() < x:
                    continue
                report = verify_skew_symmetry(lam, x, sign, "mod-K")
                result.record(
                    report.verified,
                    lambda lam=lam, x=x, sign=sign: f"lam={tuple(lam)}, x={tuple(x)}, expected {sign}",
                )
    return result


def suite_branching(max_n: int) -> SuiteResult:
    """Induction/restriction bookkeeping: adjointness of the two, and the
    three-part expansion of a restricted square."""
    result = SuiteResult("branching")
    for n in range(2, min(max_n, ORACLE_MAX_N) + 1):
        for k in range(n):
            chi = hook_rep_character(n, k)
            parts = dict(zip(("sym", "ext"), square_characters(chi)))
            for fname, fchar in parts.items():
                res = restrict_character(fchar)
                for mu in enumerate_partitions(n - 1):
                    lhs = sum(
                        inner_product(irreducible_character(lam), fchar)
                        for lam in branch_up(mu)
                    )
                    rhs = inner_product(irreducible_character(mu), res)
                    result.record(
                        lhs == rhs,
                        lambda n=n, k=k, mu=mu, fname=fname: (
                            f"adjointness failed: n={n}, k={k}, mu={tuple(mu)}, part={fname}"
                        ),
                    )
    for n in range(3, min(max_n, ORACLE_MAX_N) + 1):
        for k in range(1, n - 1):
            chi = hook_rep_character(n, k)
            sym, ext = square_characters(chi)
            small_k = hook_rep_character(n - 1, k)
            small_km1 = hook_rep_character(n - 1, k - 1)
            sym_k, ext_k = square_characters(small_k)
            sym_km1, ext_km1 = square_characters(small_km1)
            cross = small_k * small_km1
            expect = {
                "sym": sym_k + sym_km1 + cross,
                "ext": ext_k + ext_km1 + cross,
            }
            got = {"sym": restrict_character(sym), "ext": restrict_character(ext)}
            for fname in ("sym", "ext"):
                result.record(
                    got[fname] == expect[fname],
                    lambda n=n, k=k, fname=fname: (
                        f"restricted square expansion failed: n={n}, k={k}, part={fname}"
                    ),
                )
    return result


def suite_psi(max_n: int) -> SuiteResult:
    """Recurrences of the window function and the tensor-square window
    formula for double hooks."""
    result = SuiteResult("psi")
    if max_n < 1:
        return result
    for a in range(-30, 31):
        for b in range(2, 31):
            result.record(
                psi(a, b) - psi(a - 1, b - 1) == psi(a + b - 1, 1),
                lambda a=a, b=b: f"window recurrence failed at a={a}, b={b}",
            )
    for v in range(-30, 31):
        result.record(
            psi(v, 2) - psi(v - 1, 1) - psi(v + 1, 1) == 0,
            lambda v=v: f"window split failed at x={v}",
        )
    for n in range(4, min(max_n, 12) + 1):
        for k in range(n):
            chi = hook_rep_character(n, k)
            tensor = chi * chi
            for lam in enumerate_partitions(n):
                shape = classify_shape(lam)
                if not isinstance(shape, DoubleHook):
                    continue
                got = inner_product(irreducible_character(lam), tensor)
                want = psi(2 * k + 1 - n, shape.q - shape.p + 1)
                result.record(
                    got == want,
                    lambda n=n, k=k, lam=lam: (
                        f"tensor window formula failed: n={n}, k={k}, lam={tuple(lam)}"
                    ),
                )
    return result


def suite_tables(max_n: int, oracle_budget: int = ORACLE_MAX_N) -> SuiteResult:
    """Closed-form tables against the character oracle, row by row."""
    result = SuiteResult("tables")
    for n in range(1, min(max_n, oracle_budget) + 1):
        for k in range(n):
            closed = full_table(n, k)
            oracle = decompose_oracle(n, k, budget=oracle_budget)
            result.record(
                closed == oracle,
                lambda n=n, k=k: f"closed form disagrees with oracle at n={n}, k={k}",
            )
    return result


SUITES = {
    "epsilon": suite_epsilon,
    "swaps": suite_swaps,
    "lemma31": suite_lemma31,
    "prop32": suite_prop32,
    "hooks": suite_hooks,
    "branching": suite_branching,
    "psi": suite_psi,
    "tables": suite_tables,
}


def run_suites(max_n: int, names=None) -> list[SuiteResult]:
    if max_n < 0:
        raise ValueError(f"--max-n must be nonnegative, got {max_n}")
    if names is None:
        names = list(SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    ordered = [name for name in SUITES if name in names]
    if max_n == 0:
        return []
    return [SUITES[name](max_n) for name in ordered]
