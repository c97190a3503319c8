"""Cover operator and representative rules.

The cover of ``X => Y`` is every rule ``X|Z => V`` with ``Z, V`` disjoint
subsets of ``Y`` and ``V`` non-empty.  It has ``3**m - 2**m`` members for
``m = |Y|``: each consequent item goes to Z, to V, or is dropped, minus the
assignments that leave V empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .model import Item, Rule, canon, itemset_key, sort_rules


@dataclass(frozen=True)
class Cover:
    base: Rule
    members: frozenset

    def __len__(self):
        return len(self.members)

    def __contains__(self, rule):
        return rule in self.members

    def ordered(self) -> list:
        return sorted(self.members, key=Rule.sort_key)


def cover(base: Rule) -> Cover:
    ys = canon(base.consequent)
    members = set()
    # 0 = dropped, 1 = moved to the antecedent (Z), 2 = kept in the consequent (V)
    for assign in product((0, 1, 2), repeat=len(ys)):
        v = frozenset(y for y, a in zip(ys, assign) if a == 2)
        if not v:
            continue
        z = frozenset(y for y, a in zip(ys, assign) if a == 1)
        members.add(Rule(base.antecedent | z, v))
    return Cover(base, frozenset(members))


def covers(outer: Rule, inner: Rule) -> bool:
    """True iff ``inner`` is a member of ``cover(outer)``."""
    return (inner.antecedent >= outer.antecedent
            and inner.items <= outer.items
            and inner.consequent <= outer.consequent)


def representative_set(ar: dict) -> dict:
    """Rules of ``ar`` not covered by any other rule of ``ar``."""
    rules = list(ar)
    keep = {
        r: ar[r] for r in rules
        if not any(other != r and covers(other, r) for other in rules)
    }
    return sort_rules(keep)


@dataclass(frozen=True)
class HidingTarget:
    """A joined rule the hider attacks: the antecedent plus the union of the
    consequents of all sensitive rules sharing that antecedent."""

    sensitive: Item
    antecedent: frozenset
    joined_consequent: frozenset

    def __post_init__(self):
        if self.antecedent & self.joined_consequent:
            raise ValueError("antecedent and joined consequent overlap")
        if self.sensitive not in self.antecedent | self.joined_consequent:
            raise ValueError(f"{self.sensitive!r} does not occur in the target")

    @property
    def full_itemset(self) -> frozenset:
        return self.antecedent | self.joined_consequent

    @property
    def rule(self) -> Rule:
        return Rule(self.antecedent, self.joined_consequent)

    def __str__(self):
        return str(self.rule)


def join_targets(sensitive_rules, h: Item) -> list:
    """Group rules by antecedent and join each group's consequents.

    The group whose antecedent is exactly ``{h}`` is built first and wins
    ties; the rest follow in canonical antecedent order.  The result is then
    stably sorted by descending size of the full itemset.
    """
    groups = {}
    for r in sensitive_rules:
        groups.setdefault(r.antecedent, set()).update(r.consequent)
    alone = frozenset([h])
    order = sorted(groups, key=lambda a: (a != alone, itemset_key(a)))
    targets = [HidingTarget(h, a, frozenset(groups[a])) for a in order]
    targets.sort(key=lambda t: -len(t.full_itemset))
    return targets
