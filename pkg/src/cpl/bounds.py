"""Closed-form bounds and thresholds for the convex-position problem family.

Everything here is exact integer arithmetic on arbitrary-precision values;
the evaluators are pure and total over their stated domains.  The notation
follows the usual one for this family: g(n) forces n points in convex
position, h(n, k) forces a convex n-gon with at most k interior points,
h(n, mod q) constrains the interior count to a multiple of q, and f(l, m)
forces an l-cup or an m-cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


def binom(a: int, b: int) -> int:
    """Exact binomial coefficient; zero outside ``0 <= b <= a``."""
    if type(a) is not int or a < 0:
        raise ValueError("a must be a nonnegative integer")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class GBoundsRow:
    """Best known sandwich for g(n): conjectured-exact lower bound and two
    binomial upper bounds (the classical one and the sharper one, which
    needs n >= 5)."""

    n: int
    lower: int
    upper_es: int
    upper_tv: int | None


def g_bounds(n: int) -> GBoundsRow:
    """Lower bound 2^(n-2)+1 and upper bounds C(2n-4, n-2)+1, C(2n-5, n-3)+1."""
    if type(n) is not int or n < 3:
        raise ValueError("n must be an integer >= 3")
    lower = 2 ** (n - 2) + 1
    upper_es = binom(2 * n - 4, n - 2) + 1
    upper_tv = binom(2 * n - 5, n - 3) + 1 if n >= 5 else None
    return GBoundsRow(n, lower, upper_es, upper_tv)


def f_threshold(l: int, m: int) -> int:
    """Least set size forcing an l-cup or an m-cap: C(l+m-4, l-2)+1."""
    if type(l) is not int or type(m) is not int or l < 2 or m < 2:
        raise ValueError("l and m must be integers >= 2")
    return binom(l + m - 4, l - 2) + 1


def sendov_k(n: int) -> int:
    """Largest k from the (r+4)*2^(m-1) - 4m - r - 1 schedule, n+2 = 4m+r."""
    if type(n) is not int or n < 7:
        raise ValueError("n must be an integer >= 7")
    m, r = divmod(n + 2, 4)
    return (r + 4) * 2 ** (m - 1) - 4 * m - r - 1


def koshelev_nonexist_k(n: int) -> int:
    """Largest k from the central-binomial schedule: C(n-7, (n-7)/2) - 1 for
    odd n and 2*C(n-8, (n-8)/2) - 1 for even n."""
    if type(n) is not int or n < 7:
        raise ValueError("n must be an integer >= 7")
    if n % 2 == 1:
        return binom(n - 7, (n - 7) // 2) - 1
    return 2 * binom(n - 8, (n - 8) // 2) - 1


def best_known_nonexist_k(n: int) -> int:
    """Largest k, over both schedules, for which h(n, k) is known not to exist.

    The central-binomial schedule wins everywhere except n = 9 and n = 11,
    where the older one is larger; taking the max reproduces the published
    best-known row exactly.
    """
    return max(sendov_k(n), koshelev_nonexist_k(n))


def survival_k(n: int) -> int:
    """Largest scheduled k with h(n, k) > 2^(n-2)+1: C(n-3, ceil((n-3)/2)) - ceil(n/2)."""
    if type(n) is not int or n < 6:
        raise ValueError("n must be an integer >= 6")
    return binom(n - 3, (n - 2) // 2) - (n + 1) // 2


def c_of_r(r: int) -> int:
    """2^floor((r-2)/2) + 2^ceil((r-2)/2) - r - 1; may be nonpositive."""
    if type(r) is not int or r < 2:
        raise ValueError("r must be an integer >= 2")
    return 2 ** ((r - 2) // 2) + 2 ** ((r - 1) // 2) - r - 1


def f_nonexist_pair(l: int, m: int, l0: int, m0: int) -> tuple[int, int] | None:
    """Interior budgets (l1, m1) for which f(l, m, l1, m1) does not exist.

    Defined when c(l0) and c(m0) are both positive; returns None otherwise
    (the construction behind the pair needs both factors positive).
    """
    if type(l0) is not int or type(m0) is not int or l0 < 2 or m0 < 2:
        raise ValueError("l0 and m0 must be integers >= 2")
    if type(l) is not int or type(m) is not int or l < max(5, l0) or m < max(5, m0):
        raise ValueError("need l >= max(5, l0) and m >= max(5, m0)")
    cl, cm = c_of_r(l0), c_of_r(m0)
    if cl <= 0 or cm <= 0:
        return None
    t = l + m - l0 - m0
    return cl * binom(t, l - l0) - 1, cm * binom(t, m - m0) - 1


def f_survival_thresholds(l: int, m: int) -> tuple[int | None, int | None]:
    """Budgets (l1, m1) with f(l, m, l1, *) > f(l, m) and symmetrically.

    l1 = C(l+m-6, l-3) - m + 1 and m1 = C(l+m-6, m-3) - l + 1; a slot is None
    when its value is negative (the statement needs nonnegative budgets).
    """
    if type(l) is not int or type(m) is not int or l < 4 or m < 4:
        raise ValueError("l and m must be integers >= 4")
    l1 = binom(l + m - 6, l - 3) - m + 1
    m1 = binom(l + m - 6, m - 3) - l + 1
    return (l1 if l1 >= 0 else None), (m1 if m1 >= 0 else None)


def bdv_nprime(n: int, q: int) -> int:
    """Least n' >= n with n' congruent to 2 modulo q."""
    if type(n) is not int or n < 3:
        raise ValueError("n must be an integer >= 3")
    if type(q) is not int or q < 2:
        raise ValueError("q must be an integer >= 2")
    return n + (2 - n) % q


def modq_upper(n: int, q: int) -> int | None:
    """Upper bound for h(n, mod q) when n >= 2q-1: the sharper binomial upper
    bound evaluated at q(n-4)+4.  None when the hypothesis fails or the
    composed argument is below the bound's domain."""
    if type(n) is not int or n < 3:
        raise ValueError("n must be an integer >= 3")
    if type(q) is not int or q < 2:
        raise ValueError("q must be an integer >= 2")
    if n < 2 * q - 1:
        return None
    big_n = q * (n - 4) + 4
    if big_n < 5:
        return None
    return binom(2 * big_n - 5, big_n - 3) + 1


# Published best-known nonexistence thresholds with no generating formula;
# stored verbatim for table rendering.
NYKLOVA_NONEXIST_K: dict[int, int] = {
    7: 0, 8: 1, 9: 2, 10: 3, 11: 6, 12: 9, 13: 13, 14: 19, 15: 27, 16: 39,
    17: 51, 18: 63, 19: 91, 20: 119, 21: 147, 22: 175, 23: 238, 24: 301,
    25: 373,
}

NONEXIST_TABLE_NS = range(7, 26)
SURVIVAL_TABLE_NS = range(6, 26)
CHAIN_TABLE_LS = range(4, 16)
CHAIN_TABLE_MS = range(4, 16)

_TABLE_TITLES = {
    1: "largest k with h(n,k) nonexistent, by schedule",
    2: "largest scheduled k with h(n,k) > 2^(n-2)+1",
    4: "largest scheduled l1 with f(l,m,l1,*) > f(l,m)",
}


def _table_rows(table_id: int) -> list[list[str]]:
    if table_id == 1:
        header = ["n"] + [str(n) for n in NONEXIST_TABLE_NS]
        return [
            header,
            ["sendov"] + [str(sendov_k(n)) for n in NONEXIST_TABLE_NS],
            ["nyklova"] + [str(NYKLOVA_NONEXIST_K[n]) for n in NONEXIST_TABLE_NS],
            ["koshelev"] + [str(best_known_nonexist_k(n)) for n in NONEXIST_TABLE_NS],
        ]
    if table_id == 2:
        return [
            ["n"] + [str(n) for n in SURVIVAL_TABLE_NS],
            ["k"] + [str(survival_k(n)) for n in SURVIVAL_TABLE_NS],
        ]
    if table_id == 4:
        rows = [["l\\m"] + [str(m) for m in CHAIN_TABLE_MS]]
        for l in CHAIN_TABLE_LS:
            row = [str(l)]
            for m in CHAIN_TABLE_MS:
                l1, _ = f_survival_thresholds(l, m)
                row.append("---" if l1 is None else str(l1))
            rows.append(row)
        return rows
    raise ValueError(f"unknown table id {table_id!r} (valid: 1, 2, 4)")


def render_table(table_id: int | str, fmt: str = "text") -> str:
    """Render a summary table: ``fmt='text'`` aligned, ``fmt='tsv'`` one row
    per line with tab-separated cells (the golden-test format)."""
    tid = int(table_id)
    rows = _table_rows(tid)
    if fmt == "tsv":
        return "".join("\t".join(row) + "\n" for row in rows)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r} (valid: text, tsv)")
    widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
    lines = [_TABLE_TITLES[tid]]
    for row in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return "".join(line + "\n" for line in lines)
