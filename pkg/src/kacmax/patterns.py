"""Pattern-avoiding permutations and their lattice-path bijection.

A permutation avoids the strictly-decreasing pattern of length k+1 exactly
when its longest strictly decreasing subsequence has length <= k; the number
of such permutations of 1..ell equals the sum of squared standard-tableau
counts over partition shapes of ell with at most k rows.  For k = 2 the
classical bijection sends each 321-avoiding permutation to a monotone path
weakly below the diagonal, implemented here in both directions.
"""

from __future__ import annotations

from bisect import bisect_left
from itertools import permutations
from math import factorial

from .lattice_paths import LatticePath

__all__ = [
    "parse_perm",
    "format_perm",
    "longest_decreasing",
    "count_avoiding",
    "count_avoiding_bruteforce",
    "bjs_perm_to_path",
    "bjs_path_to_perm",
]


def parse_perm(text: str) -> tuple[int, ...]:
    t = text.strip()
    if "," in t:
        vals = tuple(int(p) for p in t.split(","))
    elif t.isdigit():
        vals = tuple(int(ch) for ch in t)
    else:
        raise ValueError(f"permutation text must be digits or comma-separated, got {text!r}")
    if sorted(vals) != list(range(1, len(vals) + 1)):
        raise ValueError(f"not a permutation of 1..{len(vals)}: {text!r}")
    return vals


def format_perm(w: tuple[int, ...]) -> str:
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)


def longest_decreasing(w) -> int:
    """Length of the longest strictly decreasing subsequence (patience
    sorting on the reversed word)."""
    tails: list[int] = []
    for v in reversed(tuple(w)):
        pos = bisect_left(tails, v)
        if pos == len(tails):
            tails.append(v)
        else:
            tails[pos] = v
    return len(tails)


def _hook_product_count(shape) -> int:
    # standard tableaux of the given partition shape, by the hook formula
    total = sum(shape)
    prod = 1
    for i, row in enumerate(shape):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for r in shape[i + 1:] if r > j)
            prod *= arm + leg + 1
    count, rem = divmod(factorial(total), prod)
    assert rem == 0, shape
    return count


def _shapes(total, max_rows, cap=None):
    if total == 0:
        yield ()
        return
    if max_rows == 0:
        return
    top = total if cap is None else min(cap, total)
    for first in range(top, 0, -1):
        for rest in _shapes(total - first, max_rows - 1, first):
            yield (first,) + rest


def count_avoiding(ell: int, k: int) -> int:
    """Permutations of 1..ell with no strictly decreasing subsequence of
    length k+1, summed over at-most-k-row shapes by the hook formula."""
    if ell < 1 or k < 1:
        raise ValueError(f"need ell >= 1 and k >= 1, got ell={ell}, k={k}")
    return sum(_hook_product_count(sh) ** 2 for sh in _shapes(ell, k))


def count_avoiding_bruteforce(ell: int, k: int) -> int:
    """Same count by scanning every permutation; guarded to ell <= 10."""
    if ell < 1 or k < 1:
        raise ValueError(f"need ell >= 1 and k >= 1, got ell={ell}, k={k}")
    if ell > 10:
        raise ValueError(f"exhaustive scan is restricted to ell <= 10, got {ell}")
    return sum(1 for w in permutations(range(1, ell + 1)) if longest_decreasing(w) <= k)


def bjs_perm_to_path(w) -> LatticePath:
    """Path image of a 321-avoiding permutation: positions j with inversion
    count c_j > 0 contribute a corner at (c_j + j - 1, j); raises ValueError
    when the permutation contains a strictly decreasing triple."""
    w = tuple(w)
    if longest_decreasing(w) >= 3:
        raise ValueError(f"{format_perm(w)} contains a strictly decreasing triple")
    ell = len(w)
    moves, x, y = [], 0, 0
    for pos, value in enumerate(w, start=1):
        c = sum(1 for later in w[pos:] if later < value)
        if c > 0:
            tx = c + pos - 1
            assert tx >= x and pos >= y, (w, pos, c)  # corners move monotonically
            moves.append("R" * (tx - x))
            moves.append("U" * (pos - y))
            x, y = tx, pos
    moves.append("R" * (ell - x))
    moves.append("U" * (ell - y))
    return LatticePath("".join(moves))


def bjs_path_to_perm(p: LatticePath) -> tuple[int, ...]:
    """Permutation whose image is the path: every maximal vertical run except
    the last, topping out at (v, j), forces value v + 1 at position j; the
    remaining values fill the remaining positions in increasing order.
    Raises ValueError when the path strays above the diagonal."""
    if not p.weakly_below_diagonal:
        raise ValueError(f"path {p.moves} crosses above the main diagonal")
    ell = p.ell
    run_tops, x, y = [], 0, 0
    for ch, nxt in zip(p.moves, p.moves[1:] + "R"):
        if ch == "R":
            x += 1
        else:
            y += 1
            if nxt != "U":
                run_tops.append((x, y))
    placed = {j: v + 1 for v, j in run_tops[:-1]}
    rest = iter(sorted(set(range(1, ell + 1)) - set(placed.values())))
    return tuple(placed.get(pos) or next(rest) for pos in range(1, ell + 1))
