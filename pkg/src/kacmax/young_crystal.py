"""Extended Young diagrams and the level-k crystal model.

A charge-zero extended diagram is stored as its tuple of weakly increasing
nonpositive column entries with trailing zero columns trimmed; entry -d means
the column holds d boxes.  The box in column i (0-based) at row r (1-based
from the top) carries color i - r + 1, reduced mod n to the symmetric window
(-n/2, n/2].  Containment of diagrams is pointwise domination of depths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .affine_core import AlphaExpansion, gamma

__all__ = [
    "ExtendedYoungDiagram",
    "NodeBudgetExceeded",
    "color_counts",
    "diagram_weight",
    "from_color_counts",
    "shift",
    "is_crystal_element",
    "enumerate_weight_space",
    "parse_diagram",
]


class NodeBudgetExceeded(RuntimeError):
    """Raised when an exhaustive diagram search would visit too many states."""


@dataclass(frozen=True)
class ExtendedYoungDiagram:
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        e = self.entries
        if any(v > 0 for v in e):
            raise ValueError(f"column entries must be nonpositive, got {e}")
        if any(a > b for a, b in zip(e, e[1:])):
            raise ValueError(f"column entries must be weakly increasing, got {e}")
        if e and e[-1] == 0:
            raise ValueError(f"trailing zero columns must be trimmed, got {e}")

    @classmethod
    def from_entries(cls, seq) -> "ExtendedYoungDiagram":
        e = list(seq)
        while e and e[-1] == 0:
            e.pop()
        return cls(tuple(e))

    @classmethod
    def from_depths(cls, depths) -> "ExtendedYoungDiagram":
        return cls.from_entries(-d for d in depths)

    def entry(self, i: int) -> int:
        return self.entries[i] if 0 <= i < len(self.entries) else 0

    @property
    def depths(self) -> tuple[int, ...]:
        return tuple(-v for v in self.entries)

    @property
    def boxes(self) -> int:
        return -sum(self.entries)

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.entries) + "]"


def parse_diagram(text: str) -> ExtendedYoungDiagram:
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"diagram text must look like [-2,-1], got {text!r}")
    inner = t[1:-1].strip()
    if not inner:
        return ExtendedYoungDiagram(())
    try:
        vals = tuple(int(p) for p in inner.split(","))
    except ValueError:
        raise ValueError(f"diagram entries must be integers, got {text!r}") from None
    return ExtendedYoungDiagram.from_entries(vals)


def _symmetric_residue(v: int, n: int) -> int:
    r = v % n
    return r - n if r > n // 2 else r


def color_counts(y: ExtendedYoungDiagram, n: int) -> dict[int, int]:
    """How many boxes of each color the diagram holds, keyed by the
    symmetric residue in (-n/2, n/2]."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    counts: dict[int, int] = {}
    for i, d in enumerate(y.depths):
        for r in range(1, d + 1):
            c = _symmetric_residue(i - r + 1, n)
            counts[c] = counts.get(c, 0) + 1
    return counts


def diagram_weight(y: ExtendedYoungDiagram, n: int) -> AlphaExpansion:
    """The level-1 weight of a single diagram: the fundamental weight for
    node 0 minus one alpha per box, colors taken mod n."""
    m = [0] * n
    for c, cnt in color_counts(y, n).items():
        m[c % n] += cnt
    return AlphaExpansion(n, 1, 0, tuple(m))


def shift(y: ExtendedYoungDiagram, n: int) -> tuple[int, ...]:
    """Raw entries of the diagram shifted up by n.  The implicit columns past
    the end shift from 0 to n, so the result is not itself a diagram; use
    it only for entrywise comparisons."""
    return tuple(v + n for v in y.entries)


def from_color_counts(counts: dict[int, int]) -> ExtendedYoungDiagram:
    """The unique diagram whose exact (unreduced) color counts are `counts`.

    A color c >= 0 with count m occupies columns c..c+m-1, one box each, at
    rows i - c + 1; a color c < 0 occupies columns 0..m-1 at rows i - c + 1.
    Construct-and-verify: raises ValueError when no diagram realizes the
    counts (a column with a gap, or depths not weakly decreasing).
    """
    columns: dict[int, set[int]] = {}
    for c, cnt in counts.items():
        if cnt < 0:
            raise ValueError(f"color {c} has negative count {cnt}")
        start = c if c >= 0 else 0
        for i in range(start, start + cnt):
            columns.setdefault(i, set()).add(i - c + 1)
    if not columns:
        return ExtendedYoungDiagram(())
    width = max(columns) + 1
    depths = []
    for i in range(width):
        rows = columns.get(i, set())
        d = len(rows)
        if rows != set(range(1, d + 1)):
            raise ValueError(f"counts leave a gap in column {i}: rows {sorted(rows)}")
        depths.append(d)
    if any(a < b for a, b in zip(depths, depths[1:])):
        raise ValueError(f"counts give non-monotone column depths {depths}")
    return ExtendedYoungDiagram.from_depths(depths)


def is_crystal_element(diagrams, n: int) -> bool:
    """Level-k crystal membership for a tuple (Y_1, ..., Y_k): a containment
    chain whose last member contains the first shifted by n, such that no
    column index is slack in every consecutive pair (the pair after Y_k wraps
    to the shifted Y_1)."""
    ys = tuple(diagrams)
    k = len(ys)
    if k < 1:
        raise ValueError("need at least one diagram")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    width = max((len(y.entries) for y in ys), default=0) + 2
    for a, b in zip(ys, ys[1:]):
        if any(b.entry(i) < a.entry(i) for i in range(width)):
            return False
    first, last = ys[0], ys[-1]
    if any(last.entry(i) > first.entry(i) + n for i in range(width)):
        return False

    def upper(j, i):  # entry of Y_{j+1}, wrapping to the shifted Y_1
        return ys[j].entry(i) if j < k else first.entry(i) + n

    for i in range(width):
        if not any(upper(j + 1, i) > ys[j].entry(i + 1) for j in range(k)):
            return False
    return True


def enumerate_weight_space(n: int, k: int, ell: int, node_budget: int = 10**8) -> frozenset:
    """All crystal elements of weight k*(node-0 fundamental) minus the
    staircase gamma_ell: containment chains of k diagrams whose color counts
    sum to the staircase budget, checked against the membership predicate.

    The search counts visited states and raises NodeBudgetExceeded beyond
    `node_budget`; it also refuses up front when the square of the number of
    bounded diagrams already exceeds the budget.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if not 1 <= ell <= n // 2:
        raise ValueError(f"ell must lie in 1..{n // 2} for n={n}, got {ell}")
    if math.comb(2 * ell, ell) ** 2 > node_budget:
        raise NodeBudgetExceeded(
            f"about {math.comb(2 * ell, ell)}^2 chain prefixes at ell={ell}, "
            f"beyond the budget of {node_budget} states"
        )
    gm = gamma(n, ell, k).m
    budget = {_symmetric_residue(node, n): gm[node] for node in range(n)}
    visited = [0]

    def tick():
        visited[0] += 1
        if visited[0] > node_budget:
            raise NodeBudgetExceeded(f"search exceeded {node_budget} states")

    # single diagrams whose counts fit under the budget, with their counts
    candidates: list[tuple[tuple[int, ...], dict[int, int]]] = []

    def grow(depths, counts):
        tick()
        candidates.append((tuple(depths), dict(counts)))
        cap = depths[-1] if depths else max(budget.values(), default=0)
        i = len(depths)
        for d in range(1, cap + 1):
            added = {}
            for r in range(1, d + 1):
                c = _symmetric_residue(i - r + 1, n)
                added[c] = added.get(c, 0) + 1
            if any(counts.get(c, 0) + v > budget.get(c, 0) for c, v in added.items()):
                continue
            for c, v in added.items():
                counts[c] = counts.get(c, 0) + v
            depths.append(d)
            grow(depths, counts)
            depths.pop()
            for c, v in added.items():
                counts[c] -= v
    grow([], {})

    total_boxes = ell * ell
    results = []

    def dominated(small, big):
        return len(small) <= len(big) and all(a <= b for a, b in zip(small, big))

    def extend(chain, cum, boxes):
        tick()
        j = len(chain)
        if j == k:
            if boxes == total_boxes:
                ys = tuple(ExtendedYoungDiagram.from_depths(d) for d, _ in chain)
                assert is_crystal_element(ys, n), ys
                results.append(ys)
            return
        prev = chain[-1][0]
        left = k - j
        for cand in candidates:
            depths, counts = cand
            if not dominated(depths, prev):
                continue
            # remaining diagrams are all contained in this one: each missing
            # color total must still be reachable
            if any(
                budget[c] - cum.get(c, 0) - counts.get(c, 0) > (left - 1) * counts.get(c, 0)
                for c in budget
            ):
                continue
            if any(cum.get(c, 0) + counts.get(c, 0) > budget[c] for c in counts):
                continue
            new_cum = dict(cum)
            for c, v in counts.items():
                new_cum[c] = new_cum.get(c, 0) + v
            extend(chain + [cand], new_cum, boxes + sum(counts.values()))

    for cand in candidates:
        depths, counts = cand
        if any(budget[c] > k * counts.get(c, 0) for c in budget):
            continue
        extend([cand], dict(counts), sum(counts.values()))
    return frozenset(results)
