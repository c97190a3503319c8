"""Association rule mining and support-preserving hiding of sensitive items."""

from .effects import SideEffectReport, ShapeMismatch, analyze, support_profile
from .hider import (
    EmptySensitiveSet,
    Move,
    PreconditionViolated,
    SanitizationResult,
    apply_move,
    find_donor,
    find_recipient,
    hide_all,
    hide_item,
    select_sensitive_rules,
)
from .miner import (
    AlphabetTooLarge,
    FrequentSet,
    ScanCounter,
    brute_force_frequent,
    frequent_itemsets,
    generate_rules,
    strong_rules,
)
from .model import (
    BadToken,
    DuplicateItemInTransaction,
    EmptyDatabase,
    InvalidRule,
    InvalidThreshold,
    Rule,
    RuleHidingError,
    RuleStats,
    Thresholds,
    Transaction,
    TransactionDB,
    ZeroAntecedentSupport,
    is_strong,
    itemset,
    parse_database,
    parse_ratio,
    rule_stats,
    serialize_database,
    support_count,
)
from .representative import Cover, HidingTarget, cover, covers, join_targets, representative_set

__version__ = "0.1.0"
