"""Level-wise Apriori mining, strong-rule generation and a brute-force oracle."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .model import (
    RuleHidingError,
    Rule,
    Thresholds,
    TransactionDB,
    canon,
    is_strong,
    itemset_key,
    sort_rules,
    stats_from_counts,
)

MAX_ORACLE_ALPHABET = 20


class AlphabetTooLarge(RuleHidingError):
    pass


@dataclass
class ScanCounter:
    """Counts complete passes over a transaction list, per phase label."""

    passes: Counter = field(default_factory=Counter)

    def tick(self, phase: str) -> None:
        self.passes[phase] += 1

    @property
    def total(self) -> int:
        return sum(self.passes.values())

    def merge(self, other: "ScanCounter") -> None:
        self.passes.update(other.passes)

    def as_dict(self) -> dict:
        return dict(sorted(self.passes.items()))


@dataclass(frozen=True)
class FrequentSet:
    entries: dict
    n: int
    min_supp: Fraction

    def __contains__(self, s):
        return frozenset(s) in self.entries

    def __getitem__(self, s) -> int:
        return self.entries[frozenset(s)]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(sorted(self.entries, key=itemset_key))

    def __eq__(self, other):
        if not isinstance(other, FrequentSet):
            return NotImplemented
        return self.entries == other.entries and self.n == other.n

    def is_frequent(self, count: int) -> bool:
        return Fraction(count, self.n) >= self.min_supp


def _large(count: int, n: int, min_supp: Fraction) -> bool:
    return Fraction(count, n) >= min_supp


def _candidates(prev: list, k: int) -> list:
    """Join (k-1)-itemsets sharing a (k-2)-prefix, then prune by downward closure."""
    prev_set = set(prev)
    out = []
    for i, a in enumerate(prev):
        for b in prev[i + 1:]:
            if a[:-1] != b[:-1]:
                break
            cand = a + (b[-1],)
            if all(sub in prev_set for sub in combinations(cand, k - 1)):
                out.append(cand)
    return out


def frequent_itemsets(db: TransactionDB, th: Thresholds,
                      counter: ScanCounter | None = None) -> FrequentSet:
    counter = counter if counter is not None else ScanCounter()
    n = len(db)
    rows = [t.items for t in db]

    counts = Counter()
    for items in rows:
        counts.update(items)
    counter.tick("apriori")
    level = sorted((item,) for item, c in counts.items() if _large(c, n, th.min_supp))
    entries = {frozenset(s): counts[s[0]] for s in level}

    k = 2
    while level:
        cands = _candidates(level, k)
        if not cands:
            break
        cand_sets = [frozenset(c) for c in cands]
        counts = Counter()
        for items in rows:
            if len(items) < k:
                continue
            for c in cand_sets:
                if c <= items:
                    counts[c] += 1
        counter.tick("apriori")
        level = sorted(canon(c) for c in cand_sets if _large(counts[c], n, th.min_supp))
        for s in level:
            entries[frozenset(s)] = counts[frozenset(s)]
        k += 1

    return FrequentSet(entries, n, th.min_supp)


def brute_force_frequent(db: TransactionDB, th: Thresholds) -> FrequentSet:
    """Reference implementation: count every non-empty subset of the alphabet."""
    alphabet = sorted(db.alphabet)
    if len(alphabet) > MAX_ORACLE_ALPHABET:
        raise AlphabetTooLarge(f"{len(alphabet)} items exceeds oracle limit {MAX_ORACLE_ALPHABET}")
    n = len(db)
    entries = {}
    for size in range(1, len(alphabet) + 1):
        for combo in combinations(alphabet, size):
            s = set(combo)
            c = 0
            for t in db.transactions:
                if s.issubset(t.items):
                    c += 1
            if c * th.min_supp.denominator >= th.min_supp.numerator * n:
                entries[frozenset(combo)] = c
    return FrequentSet(entries, n, th.min_supp)


def generate_rules(fs: FrequentSet, db: TransactionDB, th: Thresholds) -> dict:
    """Every strong X => Z\\X over the frequent itemsets Z with |Z| >= 2.

    Antecedent counts come from ``fs`` (downward closure guarantees they are
    present), so no further database pass is needed.
    """
    rules = {}
    for z, z_count in fs.entries.items():
        if len(z) < 2:
            continue
        for size in range(1, len(z)):
            for x in combinations(canon(z), size):
                x = frozenset(x)
                stats = stats_from_counts(z_count, fs.entries[x], len(db))
                if is_strong(stats, th):
                    rules[Rule(x, z - x)] = stats
    return sort_rules(rules)


def strong_rules(db: TransactionDB, th: Thresholds,
                 counter: ScanCounter | None = None) -> dict:
    return generate_rules(frequent_itemsets(db, th, counter), db, th)
