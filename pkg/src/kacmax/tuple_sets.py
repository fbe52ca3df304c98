"""Boundary-anchored families of concave integer tuples.

The underlying inequality system: a nonnegative integer tuple (x_1,...,x_{n-1})
with prescribed first and last entries whose image under the classical Cartan
matrix is entrywise >= 0, except that -1 is allowed at one marked position s
(no relaxation when s = 0).  `enumerate_S_bruteforce` realizes that definition
by direct backtracking.  The five `enumerate_M` families produce the same set
piecewise, split by where the maximal plateau of the tuple sits relative to s;
their building blocks are segments with concave differences.
"""

from __future__ import annotations

__all__ = [
    "format_x",
    "parse_x",
    "is_in_I",
    "max_ell",
    "enumerate_M",
    "enumerate_S_bruteforce",
]


def format_x(x: tuple[int, ...]) -> str:
    return "(" + ",".join(str(v) for v in x) + ")"


def parse_x(text: str) -> tuple[int, ...]:
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise ValueError(f"tuple text must look like (1,2,1), got {text!r}")
    inner = t[1:-1].strip()
    if not inner:
        raise ValueError("tuple text must contain at least one entry")
    try:
        return tuple(int(p) for p in inner.split(","))
    except ValueError:
        raise ValueError(f"tuple entries must be integers, got {text!r}") from None


def is_in_I(xs: tuple[int, ...], i_min: int, i_max: int, reverse: bool = False) -> bool:
    """Membership in the concave-difference segment family.

    Forward: every consecutive difference lies in [i_min, i_max] and the
    differences are weakly decreasing.  With reverse=True the same test is
    applied to the reversed tuple (the strictly-decreasing-segment family
    when i_min >= 1).
    """
    seq = xs[::-1] if reverse else xs
    diffs = [b - a for a, b in zip(seq, seq[1:])]
    if any(d < i_min or d > i_max for d in diffs):
        return False
    return all(a >= b for a, b in zip(diffs, diffs[1:]))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def max_ell(c: int, d: int, e: int, f: int) -> int:
    """Largest ell >= 0 with ceil(ell/c) + ceil((ell-e)/d) <= f.

    Closed form, self-checked at runtime.  Raises ValueError when c or d is
    not positive or when even ell = 0 fails the inequality.
    """
    if c < 1 or d < 1:
        raise ValueError(f"need positive c and d, got c={c}, d={d}")

    def cost(ell: int) -> int:
        return _ceil_div(ell, c) + _ceil_div(ell - e, d)

    if cost(0) > f:
        raise ValueError(f"no nonnegative solution for c={c} d={d} e={e} f={f}")
    m = (d * f + e) % (c + d)
    base = c * (d * f + e - m) // (c + d)
    ans = max(base, base + m - d)
    assert cost(ans) <= f and cost(ans + 1) > f, (c, d, e, f, ans)
    return ans


def _partitions(total, max_part, min_part):
    # weakly decreasing part tuples of `total` with parts in [min_part, max_part]
    if total == 0:
        yield ()
        return
    if total < 0 or min_part > max_part or min_part < 1:
        return
    for first in range(min(total, max_part), min_part - 1, -1):
        for rest in _partitions(total - first, first, min_part):
            yield (first,) + rest


def _rises(start, top, d_max):
    # tuples (start, ..., top) with weakly decreasing differences in [1, d_max];
    # the single-entry tuple when start == top
    if top < start:
        return
    for parts in _partitions(top - start, d_max, 1):
        seq = [start]
        for d in parts:
            seq.append(seq[-1] + d)
        yield tuple(seq)


def _falls(top, bottom, d_min, d_max, length=None, first_drop=None):
    # tuples (top, ..., bottom) whose drops read left to right are weakly
    # increasing and lie in [d_min, d_max]; optional exact length and exact
    # first (i.e. smallest) drop
    if bottom > top:
        return
    for parts in _partitions(top - bottom, d_max, max(d_min, 1)):
        if length is not None and len(parts) != length - 1:
            continue
        if first_drop is not None and (not parts or parts[-1] != first_drop):
            continue
        seq = [top]
        for d in reversed(parts):  # smallest drop first
            seq.append(seq[-1] - d)
        yield tuple(seq)


def _m1(s, n, x1, xn1):
    # plateau strictly before s, with a jump of size t1 right after s
    if s == 0:
        return set()
    out = set()

    if s == n - 1:
        # tail segment degenerates to the single entry x_s = x_{n-1}, and
        # the jump parameter is pinned to t1 = x_{n-1} (possibly zero, in
        # which case the descent onto it proceeds by unit steps)
        xs_ = xn1
        t1 = xn1
        if xs_ > x1 * (s - 1) - 1:
            return set()
        for ell1 in range(max(x1, xs_ + 1), max_ell(x1, t1 + 1, xs_, s) + 1):
            for rise in _rises(x1, ell1, x1):
                p = len(rise)
                for d1 in _falls(ell1, xs_, 1, t1 + 1):
                    q = s - len(d1) + 1
                    if q < p:
                        continue
                    out.add(rise + (ell1,) * (q - p) + d1[1:])
        return out

    xs_hi = min(x1 * (s - 1) - 1, xn1 * (n - s))
    for xs_ in range(xn1 + n - s - 1, xs_hi + 1):
        t_lo = max(1, xs_ - xn1 * (n - s - 1))
        t_hi = (xs_ - xn1) // (n - s - 1)
        for t1 in range(t_lo, t_hi + 1):
            tails = list(_falls(xs_, xn1, t1, xn1, length=n - s, first_drop=t1))
            if not tails:
                continue
            for ell1 in range(max(x1, xs_ + 1), max_ell(x1, t1 + 1, xs_, s) + 1):
                for rise in _rises(x1, ell1, x1):
                    p = len(rise)
                    for d1 in _falls(ell1, xs_, 1, t1 + 1):
                        q = s - len(d1) + 1
                        if q < p:
                            continue
                        head = rise + (ell1,) * (q - p) + d1[1:]
                        for d2 in tails:
                            out.add(head + d2[1:])
    return out


def _m2(s, n, x1, xn1):
    # plateau strictly before s, unit-step descent onto a second plateau at x_s
    if s == 0 or s == n - 1:
        return set()
    out = set()
    xs_hi = min(xn1 * (n - s - 1), x1 * (s - 1) - 1)
    for xs_ in range(max(xn1, x1 - s + 1), xs_hi + 1):
        for ell2 in range(max(x1, xs_ + 1), max_ell(x1, 1, xs_, s) + 1):
            q = s - (ell2 - xs_)
            d1 = tuple(range(ell2, xs_ - 1, -1))  # forced unit drops
            for rise in _rises(x1, ell2, x1):
                p = len(rise)
                if q < p:
                    continue
                head = rise + (ell2,) * (q - p) + d1[1:]
                for r in range(s + 1, n):
                    for d2 in _falls(xs_, xn1, 1, xn1, length=n - r):
                        out.add(head + (xs_,) * (r - s) + d2[1:])
    return out


def _m5(s, n, x1, xn1):
    # single plateau covering position s (any plateau position when s = 0)
    if s == 0:
        if x1 == 0 or xn1 == 0:
            return {(0,) * (n - 1)} if x1 == xn1 == 0 else set()
        ell_hi = max_ell(x1, xn1, 0, n)
    else:
        ell_hi = min(s * x1, (n - s) * xn1)
    out = set()
    for ell5 in range(max(x1, xn1), ell_hi + 1):
        for rise in _rises(x1, ell5, x1):
            q = len(rise)
            if s > 0 and q > s:
                continue
            for fall in _falls(ell5, xn1, 1, xn1):
                r = n - len(fall)
                if r < q or (s > 0 and r < s):
                    continue
                out.add(rise + (ell5,) * (r - q) + fall[1:])
    return out


def _validate_params(s, n, x1, xn1):
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not 0 <= s <= n - 1:
        raise ValueError(f"s must lie in 0..{n - 1}, got {s}")
    if x1 < 0 or xn1 < 0:
        raise ValueError(f"boundary entries must be nonnegative, got {x1}, {xn1}")


def enumerate_M(family: int, s: int, n: int, x1: int, xn1: int) -> frozenset:
    """One of the five plateau-position families, as a frozenset of tuples.

    Families 3 and 4 are the mirror images of families 1 and 2 (reverse each
    tuple, swap s -> n-s and the boundary entries).  Families 1..4 are empty
    when s = 0.  For n = 2 the single coordinate is both boundary entries, so
    mismatched boundary parameters give the empty set.
    """
    _validate_params(s, n, x1, xn1)
    if n == 2 and x1 != xn1:
        return frozenset()
    if family == 1:
        return frozenset(_m1(s, n, x1, xn1))
    if family == 2:
        return frozenset(_m2(s, n, x1, xn1))
    if family == 3:
        if s == 0:
            return frozenset()
        return frozenset(t[::-1] for t in _m1(n - s, n, xn1, x1))
    if family == 4:
        if s == 0:
            return frozenset()
        return frozenset(t[::-1] for t in _m2(n - s, n, xn1, x1))
    if family == 5:
        return frozenset(_m5(s, n, x1, xn1))
    raise ValueError(f"family must be 1..5, got {family}")


def enumerate_S_bruteforce(n: int, s: int, x1: int, xn1: int) -> frozenset:
    """Definitional backtracking over the inequality system.

    Returns every nonnegative tuple with the given boundary entries whose
    classical-Cartan image is >= 0 away from s and >= -1 at s (s >= 1).  The
    cap B = (n+1)*(x1+xn1+1) can never bind for genuine members (differences
    are concave); it is a safety net, enforced with an assert.
    """
    _validate_params(s, n, x1, xn1)
    if n == 2:
        # single coordinate; (Ax)_1 = 2*x1 >= -1 always holds
        return frozenset({(x1,)}) if x1 == xn1 else frozenset()
    cap = (n + 1) * (x1 + xn1 + 1)

    def slack(pos):  # position labels are 1-based
        return 1 if pos == s else 0

    found = []

    def extend(xs):
        i = len(xs)  # xs holds x_1..x_i
        if i == n - 2:
            full = xs + (xn1,)
            # last two constraints close over the fixed final entry
            lhs = 2 * full[-2] - (full[-3] if n > 3 else 0) - full[-1]
            if lhs < -slack(n - 2):
                return
            if 2 * full[-1] - full[-2] < -slack(n - 1):
                return
            found.append(full)
            return
        # constraint at position i pins down the next entry's range:
        # 2*x_i - x_{i-1} - x_{i+1} >= -slack(i)
        hi = 2 * xs[-1] - (xs[-2] if i >= 2 else 0) + slack(i)
        assert hi <= cap, (n, s, x1, xn1, xs)
        for v in range(0, hi + 1):
            extend(xs + (v,))

    extend((x1,))
    return frozenset(found)
