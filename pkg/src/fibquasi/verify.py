"""Cross-validation harness: catalog enumerations against oracle sets.

Every (index, category) cell compares the closed-form catalog with the
brute-force oracle and reports the exact set difference. Disputed words
are individually re-verified against the per-word predicate before they
are emitted, and annotated with the clause that produced them (extra
words) or the nearest clause shape (missing words). Property batteries
cover the structural facts the catalogs rely on: the cover chain, the
order-independence of the tiling rewrite, the occurrence fast path, and
the two families of near-miss extensions that must never be seeds.

Mismatches are findings, not errors: the suite completes every cell and
the summary says what failed. Two runs with the same configuration
produce identical reports except for the timing fields.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import closed_form, engine, words
from .closed_form import (CATEGORIES, CATEGORY_BORDERS,
                          CATEGORY_CIRCULAR_COVERS, CATEGORY_COVERS,
                          CATEGORY_LEFT_SEEDS, CATEGORY_RIGHT_SEEDS,
                          CATEGORY_SEEDS, ENUMERATORS)
from .errors import SizeLimitError
from .fib import (KIND_SMALL, expansion, fib_len, fib_occurrences, fib_word,
                  materialization_limit, scan_occurrences)

DEFAULT_CAPS = {
    CATEGORY_BORDERS: 14,
    CATEGORY_COVERS: 14,
    CATEGORY_LEFT_SEEDS: 14,
    CATEGORY_RIGHT_SEEDS: 14,
    CATEGORY_SEEDS: 10,
    CATEGORY_CIRCULAR_COVERS: 10,
}

# Exhaustive length for the cover-chain battery (every binary word).
COVER_CHAIN_MAX_LEN = 14


_ORACLES = {
    CATEGORY_BORDERS: words.borders,
    CATEGORY_COVERS: engine.covers_of,
    CATEGORY_LEFT_SEEDS: engine.left_seeds_of,
    CATEGORY_RIGHT_SEEDS: engine.right_seeds_of,
    CATEGORY_SEEDS: engine.seeds_of,
    CATEGORY_CIRCULAR_COVERS: engine.circular_covers_of,
}


def _predicate(category: str, u: str, y: str) -> bool:
    """Single-word oracle check, used to re-verify disputed words."""
    if category == CATEGORY_BORDERS:
        return u != y and y.startswith(u) and y.endswith(u)
    if category == CATEGORY_COVERS:
        return words.is_cover(u, y)[0]
    if category == CATEGORY_LEFT_SEEDS:
        return engine.is_left_seed(u, y)
    if category == CATEGORY_RIGHT_SEEDS:
        return engine.is_right_seed(u, y)
    if category == CATEGORY_SEEDS:
        return u in y and engine.is_seed_fast(u, y)
    if category == CATEGORY_CIRCULAR_COVERS:
        return u in y and engine.is_circular_cover(u, y)
    raise ValueError(f"unknown category {category!r}")


@dataclass(frozen=True)
class QuasiReport:
    """Exact comparison record for one (index, category) cell."""

    n: int
    category: str
    enumerated_count: int
    oracle_count: int
    missing: tuple[str, ...]  # oracle-only words
    extra: tuple[str, ...]    # catalog-only words
    diagnostics: tuple[dict, ...] = ()
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.missing and not self.extra

    def to_json(self, include_timing: bool = True) -> dict:
        doc = {"n": self.n, "category": self.category,
               "passed": self.passed,
               "enumerated_count": self.enumerated_count,
               "oracle_count": self.oracle_count,
               "missing": list(self.missing), "extra": list(self.extra),
               "diagnostics": [dict(d) for d in self.diagnostics]}
        if include_timing:
            doc["elapsed_ms"] = self.elapsed_ms
        return doc


@dataclass(frozen=True)
class BatteryResult:
    """Outcome of one property battery run."""

    name: str
    detail: str
    passed: bool
    failures: tuple[str, ...] = ()
    elapsed_ms: float = 0.0

    def to_json(self, include_timing: bool = True) -> dict:
        doc = {"battery": self.name, "detail": self.detail,
               "passed": self.passed, "failures": list(self.failures)}
        if include_timing:
            doc["elapsed_ms"] = self.elapsed_ms
        return doc


@dataclass(frozen=True)
class SuiteConfig:
    """What to verify: an inclusive index range, the categories, and the
    per-category oracle caps (cells above a cap are skipped)."""

    n_lo: int = 0
    n_hi: int = 12
    categories: tuple[str, ...] = CATEGORIES
    caps: dict = field(default_factory=lambda: dict(DEFAULT_CAPS))

    def validate(self) -> None:
        if self.n_lo < 0 or self.n_hi < self.n_lo:
            raise ValueError(
                f"invalid index range [{self.n_lo}, {self.n_hi}]")
        limit = materialization_limit()
        if self.n_hi > limit:
            raise ValueError(
                f"index range reaches {self.n_hi}, beyond the "
                f"materialization guard N_max={limit}")
        unknown = set(self.categories) - set(CATEGORIES)
        if unknown:
            raise ValueError(f"unknown categories: {sorted(unknown)}")
        for cat, cap in self.caps.items():
            if cat not in CATEGORIES:
                raise ValueError(f"cap for unknown category {cat!r}")
            if fib_len(cap) > engine.SIZE_REFUSAL_LIMIT:
                raise ValueError(
                    f"cap {cap} for {cat} exceeds the engine refusal "
                    f"threshold")


def _diagnose(word: str, n: int, enum_result,
              side: str) -> dict:
    if side == "extra":
        producing = [f.to_json() for f in enum_result.forms
                     if f.materialize() == word]
        return {"word": word, "side": side, "clauses": producing}
    near = [f.to_json() for f in closed_form.nearest_forms(word, n)]
    return {"word": word, "side": side, "clauses": near,
            "note": "oracle-only word; listed clauses are relaxed shape "
                    "matches that no printed family instantiates"}


def check_category(n: int, category: str,
                   caps: dict | None = None) -> QuasiReport:
    """Run one catalog-versus-oracle comparison cell."""
    if category not in CATEGORIES:
        raise ValueError(f"unknown category {category!r}")
    cap = (caps or DEFAULT_CAPS)[category]
    if n > cap:
        raise SizeLimitError(
            f"index {n} exceeds the oracle cap {cap} for {category}")
    t0 = time.perf_counter()
    enum_result = ENUMERATORS[category](n)
    subject = fib_word(n)
    oracle = _ORACLES[category](subject)
    enumerated = set(enum_result.words)
    expected = set(oracle)
    missing = tuple(words.canonical(expected - enumerated))
    extra = tuple(words.canonical(enumerated - expected))
    for w in missing:
        if not _predicate(category, w, subject):
            raise RuntimeError(
                f"unsound report: {w!r} classified missing but fails the "
                f"{category} predicate at n={n}")
    for w in extra:
        if _predicate(category, w, subject):
            raise RuntimeError(
                f"unsound report: {w!r} classified extra but passes the "
                f"{category} predicate at n={n}")
    diagnostics = tuple(_diagnose(w, n, enum_result, "missing")
                        for w in missing)
    diagnostics += tuple(_diagnose(w, n, enum_result, "extra")
                         for w in extra)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return QuasiReport(n, category, len(enumerated), len(expected),
                       missing, extra, diagnostics, elapsed)


def _battery(name: str, detail: str, failures: list[str],
             t0: float) -> BatteryResult:
    elapsed = (time.perf_counter() - t0) * 1000.0
    return BatteryResult(name, detail, not failures,
                         tuple(failures[:10]), elapsed)


def _battery_cover_chain(max_len: int) -> BatteryResult:
    """For every binary word y and proper cover u of y: a factor z of y
    no longer than u covers y iff it covers u."""
    t0 = time.perf_counter()
    failures = []
    for length in range(1, max_len + 1):
        for bits in range(1 << length):
            y = "".join("ab"[(bits >> i) & 1] for i in range(length))
            cov_y = set(engine.covers_of(y))
            proper = [u for u in cov_y if u != y]
            if not proper:
                continue
            factors = engine.distinct_factors(y)
            for u in proper:
                cov_u = set(engine.covers_of(u))
                for z in factors:
                    if len(z) > len(u) or z == u:
                        continue
                    if (z in cov_y) != (z in cov_u):
                        failures.append(f"y={y} u={u} z={z}")
    return _battery("cover_chain",
                    f"all binary words up to length {max_len}",
                    failures, t0)


def _battery_expansion_determinism(n_lo: int, n_hi: int) -> BatteryResult:
    """Leftmost-first and rightmost-first rewriting give the same
    tiling, the tiling reproduces the word, and no two small factors
    are adjacent."""
    t0 = time.perf_counter()
    failures = []
    for n in range(max(2, n_lo), n_hi + 1):
        subject = fib_word(n)
        for m in range(1, n):
            left = expansion(n, m, order="leftmost")
            right = expansion(n, m, order="rightmost")
            if left != right:
                failures.append(f"n={n} m={m}: rewrite order changed result")
                continue
            if left.materialize() != subject:
                failures.append(f"n={n} m={m}: tiling does not reproduce word")
            kinds = [item.kind for item in left.items]
            if any(a == KIND_SMALL == b for a, b in zip(kinds, kinds[1:])):
                failures.append(f"n={n} m={m}: adjacent small factors")
    return _battery("expansion_determinism",
                    f"indices {max(2, n_lo)}..{n_hi}, all bases",
                    failures, t0)


def _battery_occurrence_fast_path(n_lo: int, n_hi: int) -> BatteryResult:
    """Closed-form occurrence placement equals the naive scan on every
    valid (n, m) pair in range."""
    t0 = time.perf_counter()
    failures = []
    for n in range(max(5, n_lo), n_hi + 1):
        for m in range(3, n - 1):
            fast = fib_occurrences(n, m)
            naive = scan_occurrences(n, m)
            if fast != naive:
                failures.append(f"n={n} m={m}: {fast} != {naive}")
    return _battery("occurrence_fast_path",
                    f"indices {max(5, n_lo)}..{n_hi}, bases 3..n-2",
                    failures, t0)


def _battery_near_miss_left(n_lo: int, n_hi: int) -> BatteryResult:
    """The prefix of F_n one letter short of F_{n-1} is never a left
    seed (n >= 5)."""
    t0 = time.perf_counter()
    failures = []
    for n in range(max(5, n_lo), n_hi + 1):
        subject = fib_word(n)
        candidate = subject[:fib_len(n - 1) - 1]
        if engine.is_left_seed(candidate, subject):
            failures.append(f"n={n}: length-{len(candidate)} prefix accepted")
    return _battery("near_miss_left_seeds",
                    f"indices {max(5, n_lo)}..{n_hi}",
                    failures, t0)


def _battery_near_miss_right(n_lo: int, n_hi: int) -> BatteryResult:
    """No proper nonempty suffix of F_{n-3} prepended to F_{n-4} is a
    right seed of F_n (n >= 5)."""
    t0 = time.perf_counter()
    failures = []
    for n in range(max(5, n_lo), n_hi + 1):
        subject = fib_word(n)
        tail = fib_word(n - 4)
        source = fib_word(n - 3)
        for l in range(1, len(source)):
            candidate = source[len(source) - l:] + tail
            if engine.is_right_seed(candidate, subject):
                failures.append(f"n={n} extension_len={l}: accepted")
    return _battery("near_miss_right_seeds",
                    f"indices {max(5, n_lo)}..{n_hi}",
                    failures, t0)


@dataclass(frozen=True)
class SuiteResult:
    config: SuiteConfig
    cells: tuple[QuasiReport, ...]
    batteries: tuple[BatteryResult, ...]

    @property
    def summary(self) -> dict:
        entries = list(self.cells) + list(self.batteries)
        passed = sum(1 for e in entries if e.passed)
        return {"cells": len(entries), "passed": passed,
                "failed": len(entries) - passed}

    @property
    def all_passed(self) -> bool:
        return self.summary["failed"] == 0

    def to_json_lines(self, include_timing: bool = True) -> list[str]:
        lines = [json.dumps(cell.to_json(include_timing))
                 for cell in self.cells]
        lines += [json.dumps(b.to_json(include_timing))
                  for b in self.batteries]
        lines.append(json.dumps(self.summary))
        return lines

    def to_json(self, include_timing: bool = True) -> dict:
        return {"cells": [c.to_json(include_timing) for c in self.cells],
                "batteries": [b.to_json(include_timing)
                              for b in self.batteries],
                "summary": self.summary}


def run_suite(config: SuiteConfig) -> SuiteResult:
    """Run every (index, category) cell in range and under caps, then
    the property batteries. Failures are collected, never thrown, so a
    discrepancy is localized rather than aborting the sweep."""
    config.validate()
    cells = []
    for n in range(config.n_lo, config.n_hi + 1):
        for category in CATEGORIES:
            if category not in config.categories:
                continue
            if n > config.caps.get(category, DEFAULT_CAPS[category]):
                continue
            cells.append(check_category(n, category, config.caps))
    batteries = [
        _battery_cover_chain(min(COVER_CHAIN_MAX_LEN, fib_len(config.n_hi))),
        _battery_expansion_determinism(config.n_lo, config.n_hi),
        _battery_occurrence_fast_path(config.n_lo, config.n_hi),
        _battery_near_miss_left(config.n_lo, config.n_hi),
        _battery_near_miss_right(config.n_lo, config.n_hi),
    ]
    return SuiteResult(config, tuple(cells), tuple(batteries))
