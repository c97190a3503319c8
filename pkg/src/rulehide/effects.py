"""Side-effect accounting for a sanitized database.

Both databases are re-mined from scratch at the same thresholds and the two
strong-rule sets are compared.
"""

from __future__ import annotations

from dataclasses import dataclass

from .miner import ScanCounter, strong_rules
from .model import RuleHidingError, Thresholds, TransactionDB, sort_rules, support_count


class ShapeMismatch(RuleHidingError):
    pass


@dataclass
class SideEffectReport:
    hidden_sensitive: dict
    surviving_sensitive: dict
    lost_rules: dict
    ghost_rules: dict
    moves_applied: int
    transactions_modified: int
    support_invariant_ok: bool
    support_before: dict
    support_after: dict
    scans: ScanCounter

    @property
    def rules_pruned(self) -> int:
        return len(self.hidden_sensitive)


def support_profile(db: TransactionDB, items) -> dict:
    return {h: support_count(db, {h}) for h in items}


def analyze(before: TransactionDB, after: TransactionDB, th: Thresholds,
            sensitive, moves: int | None = None) -> SideEffectReport:
    """Classify rule changes between ``before`` and ``after``.

    ``moves`` is the number of relocations performed, when known; otherwise it
    is estimated as the number of sensitive-item occurrences removed.
    """
    sensitive = list(sensitive)
    if before.tids != after.tids:
        raise ShapeMismatch(
            f"databases differ in shape ({len(before)} vs {len(after)} transactions)")

    scans = ScanCounter()
    strong_before = strong_rules(before, th, scans)
    strong_after = strong_rules(after, th, scans)

    def is_sensitive(rule):
        return any(rule.mentions(h) for h in sensitive)

    hidden, surviving, lost = {}, {}, {}
    for r, s in strong_before.items():
        if r in strong_after:
            if is_sensitive(r):
                surviving[r] = strong_after[r]
        elif is_sensitive(r):
            hidden[r] = s
        else:
            lost[r] = s
    ghosts = {r: s for r, s in strong_after.items() if r not in strong_before}

    modified = 0
    removed = 0
    for t_before, t_after in zip(before, after):
        if t_before.items != t_after.items:
            modified += 1
            removed += sum(1 for h in sensitive if h in t_before.items - t_after.items)

    prof_before = support_profile(before, sensitive)
    prof_after = support_profile(after, sensitive)
    return SideEffectReport(
        hidden_sensitive=sort_rules(hidden),
        surviving_sensitive=sort_rules(surviving),
        lost_rules=sort_rules(lost),
        ghost_rules=sort_rules(ghosts),
        moves_applied=removed if moves is None else moves,
        transactions_modified=modified,
        support_invariant_ok=prof_before == prof_after,
        support_before=prof_before,
        support_after=prof_after,
        scans=scans,
    )
