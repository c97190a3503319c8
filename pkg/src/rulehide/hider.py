"""Support-preserving rule hiding by relocating sensitive items.

For each sensitive item ``h`` the strong rules mentioning ``h`` are joined
into targets.  While a target stays strong, ``h`` is deleted from a donor
transaction that fully supports the target and added to a recipient that
lacks ``h`` and only partially supports the remaining target items.  Every
move removes one occurrence and adds one, so the support of ``h`` and the
database size never change.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .miner import ScanCounter, strong_rules
from .model import (
    Item,
    RuleHidingError,
    RuleStats,
    Thresholds,
    TransactionDB,
    is_strong,
    sort_rules,
    stats_from_counts,
    support_count,
)
from .representative import HidingTarget, join_targets

log = logging.getLogger(__name__)


class PreconditionViolated(RuleHidingError):
    pass


class EmptySensitiveSet(RuleHidingError):
    def __init__(self):
        super().__init__("no sensitive items given")


@dataclass(frozen=True)
class Move:
    sensitive: Item
    donor_tid: int
    recipient_tid: int
    target: HidingTarget
    conf_before: Fraction
    conf_after: Fraction


@dataclass
class SanitizationResult:
    transformed: TransactionDB
    moves: list = field(default_factory=list)
    dropped_items: list = field(default_factory=list)
    unhidden: dict = field(default_factory=dict)
    scans: ScanCounter = field(default_factory=ScanCounter)


def select_sensitive_rules(ar: dict, h: Item) -> dict:
    return {r: s for r, s in ar.items() if r.mentions(h)}


def find_donor(db: TransactionDB, target: HidingTarget) -> int | None:
    """Largest transaction containing the whole target; lowest tid on ties."""
    full = target.full_itemset
    best = None
    for t in db:
        if full <= t.items and (best is None or len(t.items) > len(best.items)):
            best = t
    return best.tid if best is not None else None


def find_recipient(db: TransactionDB, target: HidingTarget) -> int | None:
    """Transaction without ``h`` that misses at least one other target item.

    Prefers the fewest target items present, then the lowest tid.
    """
    rest = target.full_itemset - {target.sensitive}
    best, best_overlap = None, None
    for t in db:
        if target.sensitive in t.items or rest <= t.items:
            continue
        overlap = len(rest & t.items)
        if best is None or overlap < best_overlap:
            best, best_overlap = t, overlap
    return best.tid if best is not None else None


def apply_move(db: TransactionDB, donor: int, recipient: int, h: Item) -> TransactionDB:
    if donor == recipient:
        raise PreconditionViolated("donor and recipient are the same transaction")
    try:
        d, r = db.get(donor), db.get(recipient)
    except KeyError as exc:
        raise PreconditionViolated(f"no transaction with tid {exc.args[0]}") from None
    if h not in d.items:
        raise PreconditionViolated(f"donor T{donor} does not contain {h!r}")
    if h in r.items:
        raise PreconditionViolated(f"recipient T{recipient} already contains {h!r}")
    if d.items == {h}:
        raise PreconditionViolated(f"donor T{donor} would become empty")
    return db.replace({donor: d.items - {h}, recipient: r.items | {h}})


def target_stats(db: TransactionDB, target: HidingTarget,
                 counter: ScanCounter | None = None) -> RuleStats | None:
    """Stats of the joined target rule, or None if its antecedent never occurs."""
    if counter is not None:
        counter.tick("confidence")
    a = support_count(db, target.antecedent)
    if a == 0:
        return None
    return stats_from_counts(support_count(db, target.full_itemset), a, len(db))


def _still_strong(stats: RuleStats | None, th: Thresholds) -> bool:
    return stats is not None and is_strong(stats, th)


def hide_item(db: TransactionDB, th: Thresholds, h: Item,
              counter: ScanCounter | None = None):
    """Hide every strong rule mentioning ``h``.

    Returns ``(transformed_db, moves, unhidden)`` where ``unhidden`` holds the
    sensitive rules of this item's agenda that are still strong at the end.
    If ``{h}`` is not large the database is returned unchanged with no moves
    and ``unhidden`` is None, signalling that ``h`` was dropped.
    """
    counter = counter if counter is not None else ScanCounter()
    if not _is_large(db, th, h, counter):
        log.info("item %s is not large; skipped", h)
        return db, [], None

    agenda = select_sensitive_rules(strong_rules(db, th, counter), h)
    moves = []
    for target in join_targets(agenda, h):
        stats = target_stats(db, target, counter)
        while _still_strong(stats, th):
            counter.tick("donor")
            donor = find_donor(db, target)
            counter.tick("recipient")
            recipient = find_recipient(db, target) if donor is not None else None
            if donor is None or recipient is None:
                log.info("target %s: no %s left", target,
                         "donor" if donor is None else "recipient")
                break
            db = apply_move(db, donor, recipient, h)
            after = target_stats(db, target, counter)
            moves.append(Move(h, donor, recipient, target, stats.confidence,
                              after.confidence if after is not None else Fraction(0)))
            log.debug("moved %s from T%d to T%d (%s: %s -> %s)", h, donor, recipient,
                      target, stats.confidence, moves[-1].conf_after)
            stats = after

    remaining = strong_rules(db, th, counter)
    unhidden = sort_rules({r: remaining[r] for r in agenda if r in remaining})
    return db, moves, unhidden


def _is_large(db, th, h, counter) -> bool:
    counter.tick("item-support")
    return h in db.alphabet and support_count(db, {h}) * th.min_supp.denominator \
        >= th.min_supp.numerator * len(db)


def hide_all(db: TransactionDB, th: Thresholds, sensitive) -> SanitizationResult:
    """Hide each sensitive item in turn, feeding each step the previous output.

    ``unhidden`` in the result lists the sensitive rules that were strong in
    the input database and are still strong in the final one.
    """
    sensitive = list(sensitive)
    if not sensitive:
        raise EmptySensitiveSet()
    if len(set(sensitive)) != len(sensitive):
        raise RuleHidingError("sensitive items must be distinct")

    counter = ScanCounter()
    original = strong_rules(db, th, counter)
    result = SanitizationResult(db, scans=counter)
    current = db
    for h in sensitive:
        current, moves, unhidden = hide_item(current, th, h, counter)
        if unhidden is None:
            result.dropped_items.append(h)
        result.moves.extend(moves)

    final = strong_rules(current, th, counter)
    result.transformed = current
    result.unhidden = sort_rules({
        r: final[r] for r in original
        if r in final and any(r.mentions(h) for h in sensitive)
    })
    return result
