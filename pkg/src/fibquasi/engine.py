"""Oracle-grade decision procedures for covers, seeds, and circular covers.

Everything here works on arbitrary binary words and favors being
obviously correct over being fast: occurrence scanning plus explicit
chain conditions. The exhaustive extension search in is_seed is the
definitive seed oracle; is_seed_fast is the occurrence-gap criterion
that must agree with it (a tested property, and re-checked at runtime
on small inputs by seeds_of).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeLimitError
from .words import (canonical, covered_prefix_extent, covered_suffix_extent,
                    is_cover, occurrences, period_of, require_word)

# seeds_of / circular_covers_of refuse longer words unless forced: their
# candidate sets grow quadratically and the oracle loops are deliberately
# naive.
SIZE_REFUSAL_LIMIT = 2000

# Below this length seeds_of runs every candidate through both the fast
# criterion and the exhaustive oracle and insists they agree.
DUAL_CHECK_LIMIT = 60


def distinct_factors(y: str) -> list[str]:
    """All distinct nonempty factors of y, canonically ordered."""
    n = len(y)
    return canonical(y[i:j] for i in range(n) for j in range(i + 1, n + 1))


def covers_of(y: str) -> list[str]:
    """Every factor that covers y: the borders that pass the occurrence
    chain test, plus y itself."""
    require_word(y)
    if not y:
        raise ValueError("word must be nonempty")
    candidates = [y[:k] for k in range(1, len(y)) if y.endswith(y[:k])]
    candidates.append(y)
    return canonical(u for u in candidates if is_cover(u, y)[0])


def is_left_seed(z: str, y: str) -> bool:
    """A prefix z of y is a left seed iff it covers a prefix of y at
    least as long as the period of y."""
    if not z:
        raise ValueError("pattern must be nonempty")
    if not y.startswith(z):
        return False
    return covered_prefix_extent(z, y) >= period_of(y)


def left_seeds_of(y: str) -> list[str]:
    require_word(y)
    if not y:
        raise ValueError("word must be nonempty")
    p = period_of(y)
    return [y[:k] for k in range(1, len(y) + 1)
            if covered_prefix_extent(y[:k], y) >= p]


def left_seeds_by_extension(y: str) -> list[str]:
    """Independent left-seed oracle straight from the definition: z is a
    left seed when it covers y extended by some right extension v.

    Any covered extension y*v ends with z, so v is a suffix of z; trying
    every suffix shorter than z is exhaustive.
    """
    require_word(y)
    if not y:
        raise ValueError("word must be nonempty")
    out = []
    for k in range(1, len(y) + 1):
        z = y[:k]
        for vlen in range(0, k):
            v = z[k - vlen:] if vlen else ""
            if is_cover(z, y + v)[0]:
                out.append(z)
                break
    return out


def is_right_seed(z: str, y: str) -> bool:
    """Mirror of is_left_seed: z must be a suffix of y covering a
    suffix at least as long as the period."""
    if not z:
        raise ValueError("pattern must be nonempty")
    if not y.endswith(z):
        return False
    return covered_suffix_extent(z, y) >= period_of(y)


def right_seeds_of(y: str) -> list[str]:
    require_word(y)
    if not y:
        raise ValueError("word must be nonempty")
    p = period_of(y)
    return [y[len(y) - k:] for k in range(1, len(y) + 1)
            if covered_suffix_extent(y[len(y) - k:], y) >= p]


@dataclass(frozen=True)
class SeedWitness:
    """A covering superstring for a seed: left_ext * y * right_ext is
    covered by the seed at the recorded 1-based positions.

    left_ext is a proper prefix of the seed and right_ext a proper
    suffix: a covered superstring starts and ends with the seed, which
    forces exactly those shapes once extensions are shorter than the
    seed.
    """

    left_ext: str
    right_ext: str
    positions: tuple[int, ...]

    def to_json(self) -> dict:
        return {"left": self.left_ext, "right": self.right_ext,
                "positions": list(self.positions)}


def is_seed(u: str, y: str) -> tuple[bool, SeedWitness | None]:
    """Exhaustive seed oracle: try every proper prefix of u as a left
    extension and every proper suffix as a right extension, and test the
    cover condition on the extended word.

    The search runs shortest total extension first, ties broken by the
    shorter left extension, so the witness is canonical.
    """
    if not u:
        raise ValueError("pattern must be nonempty")
    if u not in y:
        raise ValueError(f"{u!r} is not a factor of the subject word")
    m = len(u)
    for total in range(0, 2 * m - 1):
        for llen in range(max(0, total - (m - 1)), min(m - 1, total) + 1):
            rlen = total - llen
            left = u[:llen]
            right = u[m - rlen:] if rlen else ""
            ok, pos = is_cover(u, left + y + right)
            if ok:
                return True, SeedWitness(left, right, pos)
    return False, None


def is_seed_fast(u: str, y: str) -> bool:
    """Occurrence-gap seed criterion, equivalent to is_seed.

    u is a seed iff (a) consecutive occurrences of u in y are at most
    |u| apart, (b) the head of y before the first occurrence can be
    absorbed by an occurrence hanging off the left edge (some prefix
    y[1..e] is a suffix of u, e reaching back to the first occurrence),
    and (c) symmetrically for the tail after the last occurrence.
    """
    if not u:
        raise ValueError("pattern must be nonempty")
    occ = occurrences(u, y)
    if not occ:
        raise ValueError(f"{u!r} is not a factor of the subject word")
    m, n = len(u), len(y)
    if any(q - p > m for p, q in zip(occ, occ[1:])):
        return False
    if occ[0] != 1:
        if not any(y[:e] == u[m - e:] for e in range(occ[0] - 1, m)):
            return False
    last_end = occ[-1] + m - 1
    if last_end != n:
        lo = max(n - last_end, 1)
        if not any(y[n - e:] == u[:e] for e in range(lo, m)):
            return False
    return True


def seeds_of(y: str, force: bool = False) -> list[str]:
    """All distinct factors of y that are seeds of y.

    Uses the fast criterion; on words up to DUAL_CHECK_LIMIT letters
    every candidate is additionally run through the exhaustive oracle
    and any disagreement is a hard error.
    """
    require_word(y)
    if not y:
        raise ValueError("word must be nonempty")
    if len(y) > SIZE_REFUSAL_LIMIT and not force:
        raise SizeLimitError(
            f"refusing seed enumeration for |y|={len(y)} > "
            f"{SIZE_REFUSAL_LIMIT}; pass force=True to override")
    out = []
    dual = len(y) <= DUAL_CHECK_LIMIT
    for u in distinct_factors(y):
        fast = is_seed_fast(u, y)
        if dual and fast != is_seed(u, y)[0]:
            raise RuntimeError(
                f"seed criteria disagree on {u!r} in {y!r}")
        if fast:
            out.append(u)
    return out


def is_circular_cover(u: str, y: str) -> bool:
    """True iff the occurrences of u around the cycle of y leave no gap.

    Occurrences are located in y*y at starts within the first period;
    the cycle is covered iff every cyclic gap between consecutive starts
    is at most |u| (an occurrence reaches |u|-1 past its start, so a gap
    over |u| strands the letters in between).
    """
    if not u:
        raise ValueError("pattern must be nonempty")
    n = len(y)
    if len(u) > n:
        return False
    starts = [p for p in occurrences(u, y + y) if p <= n]
    if not starts:
        return False
    m = len(u)
    if any(q - p > m for p, q in zip(starts, starts[1:])):
        return False
    return starts[0] + n - starts[-1] <= m


def circular_covers_of(y: str, unrestricted: bool = False,
                       force: bool = False) -> list[str]:
    """All covers of the cyclic word over y.

    Candidates are the factors of the linear y by default; with
    ``unrestricted`` they are all factors of y*y no longer than y,
    which admits covers that only exist as rotations.
    """
    require_word(y)
    if not y:
        raise ValueError("word must be nonempty")
    if len(y) > SIZE_REFUSAL_LIMIT and not force:
        raise SizeLimitError(
            f"refusing circular-cover enumeration for |y|={len(y)} > "
            f"{SIZE_REFUSAL_LIMIT}; pass force=True to override")
    if unrestricted:
        candidates = [u for u in distinct_factors(y + y) if len(u) <= len(y)]
    else:
        candidates = distinct_factors(y)
    return canonical(u for u in candidates if is_circular_cover(u, y))
