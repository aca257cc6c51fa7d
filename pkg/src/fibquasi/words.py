"""Primitive relations on binary words: factors, borders, periods, covers.

Words are plain Python strings over the two-letter alphabet {a, b}.
Positions are 1-based in every position-valued result, matching the
usual stringology convention y[1..n]. All functions are pure.
"""

from __future__ import annotations

ALPHABET = "ab"

_LETTERS = frozenset(ALPHABET)


def require_word(w: str, name: str = "word") -> str:
    """Validate that *w* uses only the letters a and b."""
    if not _LETTERS.issuperset(w):
        bad = sorted(set(w) - _LETTERS)
        raise ValueError(f"{name} contains letters outside {{a, b}}: {bad}")
    return w


def _require_nonempty(w: str, name: str) -> str:
    if not w:
        raise ValueError(f"{name} must be nonempty")
    return w


def canonical(items) -> list[str]:
    """Deduplicate and order by (length, lexicographic) — the single
    ordering used for every word-set output."""
    return sorted(set(items), key=lambda w: (len(w), w))


def is_factor(u: str, y: str) -> bool:
    """True iff u occurs contiguously in y. The empty word is a factor
    of everything."""
    return u in y


def occurrences(u: str, y: str) -> tuple[int, ...]:
    """All (possibly overlapping) start positions of u in y, 1-based,
    ascending."""
    _require_nonempty(u, "pattern")
    out = []
    i = y.find(u)
    while i != -1:
        out.append(i + 1)
        i = y.find(u, i + 1)
    return tuple(out)


def borders(y: str) -> list[str]:
    """All nonempty proper borders of y (prefixes that are also
    suffixes, shorter than y), in canonical order."""
    _require_nonempty(y, "word")
    return [y[:k] for k in range(1, len(y)) if y.endswith(y[:k])]


def period_of(y: str) -> int:
    """Length of the shortest period of y: |y| minus the longest border
    length (0 when y has no border)."""
    _require_nonempty(y, "word")
    bs = borders(y)
    longest = len(bs[-1]) if bs else 0
    return len(y) - longest


def is_cover(u: str, y: str) -> tuple[bool, tuple[int, ...] | None]:
    """Decide whether every position of y lies inside an occurrence of u.

    Returns (True, occurrence starts) on success, (False, None)
    otherwise. A word covers itself (the trivial cover), which falls out
    of the occurrence-chain condition with no special casing.
    """
    _require_nonempty(u, "pattern")
    occ = occurrences(u, y)
    m, n = len(u), len(y)
    if not occ or occ[0] != 1 or occ[-1] != n - m + 1:
        return False, None
    if any(q - p > m for p, q in zip(occ, occ[1:])):
        return False, None
    return True, occ


def covered_prefix_extent(u: str, y: str) -> int:
    """Largest L such that u covers y[1..L]; 0 when u is not a prefix
    of y.

    Occurrences of u are chained from position 1 while consecutive gaps
    stay within |u|; the extent is the end of the chain.
    """
    _require_nonempty(u, "pattern")
    occ = occurrences(u, y)
    if not occ or occ[0] != 1:
        return 0
    end = len(u)
    for p in occ[1:]:
        if p <= end + 1:
            end = p + len(u) - 1
        else:
            break
    return end


def covered_suffix_extent(u: str, y: str) -> int:
    """Largest L such that u covers y[n-L+1..n]; 0 when u is not a
    suffix of y. Mirror image of covered_prefix_extent."""
    _require_nonempty(u, "pattern")
    occ = occurrences(u, y)
    m, n = len(u), len(y)
    if not occ or occ[-1] != n - m + 1:
        return 0
    start = occ[-1]
    for p in reversed(occ[:-1]):
        if p + m >= start:
            start = p
        else:
            break
    return n - start + 1


def superpose(u: str, v: str, overlap: int) -> str:
    """Merge u and v over a shared part of the given length.

    The last *overlap* letters of u must equal the first *overlap*
    letters of v; the result is u followed by the remainder of v.
    """
    _require_nonempty(u, "left word")
    _require_nonempty(v, "right word")
    if not 1 <= overlap <= min(len(u), len(v)):
        raise ValueError(
            f"overlap {overlap} out of range [1, {min(len(u), len(v))}]")
    if u[len(u) - overlap:] != v[:overlap]:
        raise ValueError(
            f"overlap mismatch: {u[len(u) - overlap:]!r} != {v[:overlap]!r}")
    return u + v[overlap:]
