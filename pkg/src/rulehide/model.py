"""Items, itemsets, transactions, thresholds and rules, plus the basket codec.

Itemsets are plain ``frozenset`` objects of string tokens.  All ratios are
``fractions.Fraction`` so that strength decisions never depend on float
rounding (2/6 against a 33% threshold is the classic trap).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

Item = str
Itemset = frozenset

_FORBIDDEN = re.compile(r"[\s#,>]")

RatioLike = Union[Fraction, int, float, str]


class RuleHidingError(ValueError):
    """Base class for all input and contract errors raised by the package."""


class EmptyDatabase(RuleHidingError):
    def __init__(self):
        super().__init__("empty database")


class DuplicateItemInTransaction(RuleHidingError):
    def __init__(self, tid: int, item: str):
        self.tid = tid
        self.item = item
        super().__init__(f"duplicate item {item!r} in transaction {tid}")


class BadToken(RuleHidingError):
    def __init__(self, line: int, token: str):
        self.line = line
        self.token = token
        super().__init__(f"bad item token {token!r} on line {line}")


class ZeroAntecedentSupport(RuleHidingError):
    pass


class InvalidRule(RuleHidingError):
    pass


class InvalidThreshold(RuleHidingError):
    pass


def check_item(token: str) -> str:
    if not isinstance(token, str) or not token or _FORBIDDEN.search(token):
        raise BadToken(0, str(token))
    return token


def itemset(items: Iterable[str] | str = ()) -> frozenset:
    """Build an itemset; a bare string is split on whitespace or commas."""
    if isinstance(items, str):
        items = [tok for tok in re.split(r"[\s,]+", items) if tok]
    return frozenset(check_item(i) for i in items)


def canon(s: Iterable[str]) -> tuple:
    return tuple(sorted(s))


def itemset_key(s: Iterable[str]) -> tuple:
    """Canonical itemset order: smaller sets first, then lexicographic."""
    t = canon(s)
    return (len(t), t)


def fmt_itemset(s: Iterable[str], sep: str = ",") -> str:
    return sep.join(canon(s))


# -- rationals ---------------------------------------------------------------

def parse_ratio(value: RatioLike) -> Fraction:
    """Parse ``"33%"``, ``"0.33"``, ``"1/3"`` (or numbers) to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidThreshold(f"not a ratio: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # repr round-trips, so 0.33 becomes 33/100 rather than its binary expansion
        return Fraction(repr(value))
    text = str(value).strip()
    try:
        if text.endswith("%"):
            return Fraction(text[:-1].strip()) / 100
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InvalidThreshold(f"not a ratio: {value!r}") from None


def fmt_ratio(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def fmt_percent(q: Fraction, places: int = 3) -> str:
    """Render a ratio as a percentage, rounding half-to-even."""
    scale = 10 ** places
    n = round(q * 100 * scale)  # Fraction.__round__ is half-even
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // scale}.{n % scale:0{places}d}%"


@dataclass(frozen=True)
class Thresholds:
    """Minimum support and confidence as exact rationals.

    Values above 1 are accepted (they simply select nothing); the CLI
    restricts user input to [0, 1].
    """

    min_supp: Fraction
    min_conf: Fraction

    def __post_init__(self):
        for name in ("min_supp", "min_conf"):
            q = parse_ratio(getattr(self, name))
            if q < 0:
                raise InvalidThreshold(f"{name} must be non-negative, got {q}")
            object.__setattr__(self, name, q)


# -- transactions ------------------------------------------------------------

@dataclass(frozen=True)
class Transaction:
    tid: int
    items: frozenset

    def __post_init__(self):
        if not isinstance(self.tid, int) or self.tid < 1:
            raise RuleHidingError(f"tid must be a positive integer, got {self.tid!r}")
        object.__setattr__(self, "items", frozenset(self.items))


@dataclass(frozen=True)
class TransactionDB:
    transactions: tuple
    alphabet: frozenset = field(init=False, compare=False)

    def __post_init__(self):
        txs = tuple(self.transactions)
        if not txs:
            raise EmptyDatabase()
        seen = set()
        for t in txs:
            if t.tid in seen:
                raise RuleHidingError(f"duplicate tid {t.tid}")
            seen.add(t.tid)
            if not t.items:
                raise RuleHidingError(f"transaction {t.tid} is empty")
            for item in t.items:
                check_item(item)
        object.__setattr__(self, "transactions", txs)
        object.__setattr__(self, "alphabet", frozenset().union(*(t.items for t in txs)))

    @classmethod
    def from_itemsets(cls, rows: Iterable, tids: Iterable[int] | None = None) -> "TransactionDB":
        """Build a database from item collections; tids default to 1..N."""
        rows = [itemset(r) for r in rows]
        tids = list(tids) if tids is not None else range(1, len(rows) + 1)
        return cls(tuple(Transaction(tid, r) for tid, r in zip(tids, rows)))

    def __len__(self):
        return len(self.transactions)

    def __iter__(self):
        return iter(self.transactions)

    @property
    def tids(self) -> tuple:
        return tuple(t.tid for t in self.transactions)

    def get(self, tid: int) -> Transaction:
        for t in self.transactions:
            if t.tid == tid:
                return t
        raise KeyError(tid)

    def replace(self, updates: dict) -> "TransactionDB":
        """Return a copy with the itemsets of the given tids replaced."""
        return TransactionDB(tuple(
            Transaction(t.tid, updates[t.tid]) if t.tid in updates else t
            for t in self.transactions
        ))


def parse_database(data: bytes | str) -> TransactionDB:
    """Read the basket format: one transaction per line, whitespace-separated
    items, ``#`` comment lines and blank lines skipped."""
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tid = len(rows) + 1
        items = set()
        for tok in stripped.split():
            if _FORBIDDEN.search(tok):
                raise BadToken(lineno, tok)
            if tok in items:
                raise DuplicateItemInTransaction(tid, tok)
            items.add(tok)
        rows.append(Transaction(tid, frozenset(items)))
    if not rows:
        raise EmptyDatabase()
    return TransactionDB(tuple(rows))


def serialize_database(db: TransactionDB) -> str:
    return "".join(" ".join(canon(t.items)) + "\n" for t in db)


# -- counting ----------------------------------------------------------------

def support_count(db: TransactionDB, s: Iterable[str]) -> int:
    s = frozenset(s)
    return sum(1 for t in db if s <= t.items)


@dataclass(frozen=True)
class Rule:
    antecedent: frozenset
    consequent: frozenset

    def __post_init__(self):
        a = frozenset(self.antecedent)
        c = frozenset(self.consequent)
        if not a or not c:
            raise InvalidRule("antecedent and consequent must be non-empty")
        if a & c:
            raise InvalidRule(f"antecedent and consequent overlap on {sorted(a & c)}")
        object.__setattr__(self, "antecedent", a)
        object.__setattr__(self, "consequent", c)

    @classmethod
    def of(cls, antecedent, consequent) -> "Rule":
        return cls(itemset(antecedent), itemset(consequent))

    @classmethod
    def parse(cls, text: str) -> "Rule":
        """Parse ``"C=>A,B"`` style rule text."""
        if text.count("=>") != 1:
            raise InvalidRule(f"expected exactly one '=>' in {text!r}")
        lhs, rhs = text.split("=>")
        try:
            return cls.of(lhs.replace(",", " "), rhs.replace(",", " "))
        except BadToken as exc:
            raise InvalidRule(f"bad item {exc.token!r} in rule {text!r}") from None

    @property
    def items(self) -> frozenset:
        return self.antecedent | self.consequent

    def mentions(self, item: str) -> bool:
        return item in self.antecedent or item in self.consequent

    def sort_key(self) -> tuple:
        return (itemset_key(self.antecedent), itemset_key(self.consequent))

    def __str__(self):
        return f"{fmt_itemset(self.antecedent)} => {fmt_itemset(self.consequent)}"


@dataclass(frozen=True)
class RuleStats:
    support: Fraction
    confidence: Fraction
    support_count: int


def stats_from_counts(union_count: int, antecedent_count: int, n: int) -> RuleStats:
    if antecedent_count == 0:
        raise ZeroAntecedentSupport("antecedent never occurs")
    return RuleStats(Fraction(union_count, n), Fraction(union_count, antecedent_count), union_count)


def rule_stats(db: TransactionDB, r: Rule) -> RuleStats:
    a = support_count(db, r.antecedent)
    if a == 0:
        raise ZeroAntecedentSupport(f"antecedent of {r} never occurs")
    return stats_from_counts(support_count(db, r.items), a, len(db))


def is_strong(stats: RuleStats, th: Thresholds) -> bool:
    return stats.support >= th.min_supp and stats.confidence >= th.min_conf


def sort_rules(rules: dict) -> dict:
    """Return a rule->stats mapping in canonical rule order."""
    return {r: rules[r] for r in sorted(rules, key=Rule.sort_key)}
