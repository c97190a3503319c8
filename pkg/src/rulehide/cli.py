"""Command-line front end: ``rulehide mine|hide|eval|cover``.

Exit codes: 0 success (and every sensitive rule hidden), 1 some sensitive
rule is still strong, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .effects import SideEffectReport, analyze
from .hider import hide_all
from .model import (
    InvalidRule,
    Rule,
    RuleHidingError,
    Thresholds,
    check_item,
    fmt_percent,
    fmt_ratio,
    parse_database,
    parse_ratio,
    serialize_database,
)
from .miner import strong_rules
from .representative import cover

EXIT_OK, EXIT_SURVIVORS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def threshold(text: str):
    try:
        q = parse_ratio(text)
    except RuleHidingError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if not 0 <= q <= 1:
        raise argparse.ArgumentTypeError(f"threshold {text!r} is outside [0, 1]")
    return q


def sensitive_list(text: str) -> list:
    items = [tok.strip() for tok in text.split(",") if tok.strip()]
    if not items:
        raise UsageError("--sensitive needs at least one item")
    if len(set(items)) != len(items):
        raise UsageError("--sensitive items must be distinct")
    for item in items:
        try:
            check_item(item)
        except RuleHidingError:
            raise UsageError(f"bad sensitive item {item!r}") from None
    return items


def load_db(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_database(data)
    except UnicodeDecodeError:
        raise UsageError(f"{path}: not valid UTF-8") from None
    except RuleHidingError as exc:
        raise UsageError(f"{path}: {exc}") from None


# -- rendering ---------------------------------------------------------------

def rule_line(rule: Rule, stats) -> str:
    return f"{rule} ({fmt_percent(stats.support)}, {fmt_percent(stats.confidence)})"


def rule_json(rule: Rule, stats) -> dict:
    return {
        "antecedent": sorted(rule.antecedent),
        "consequent": sorted(rule.consequent),
        "support": fmt_ratio(stats.support),
        "confidence": fmt_ratio(stats.confidence),
    }


def rules_json(rules: dict) -> list:
    return [rule_json(r, s) for r, s in rules.items()]


def report_json(rep: SideEffectReport) -> dict:
    return {
        "hidden_sensitive": rules_json(rep.hidden_sensitive),
        "surviving_sensitive": rules_json(rep.surviving_sensitive),
        "lost_rules": rules_json(rep.lost_rules),
        "ghost_rules": rules_json(rep.ghost_rules),
        "rules_pruned": rep.rules_pruned,
        "moves_applied": rep.moves_applied,
        "transactions_modified": rep.transactions_modified,
        "support_invariant_ok": rep.support_invariant_ok,
        "support_before": rep.support_before,
        "support_after": rep.support_after,
        "scans": rep.scans.as_dict(),
    }


def report_text(rep: SideEffectReport) -> list:
    lines = []
    for title, rules in (("hidden sensitive rules", rep.hidden_sensitive),
                         ("surviving sensitive rules", rep.surviving_sensitive),
                         ("lost rules", rep.lost_rules),
                         ("ghost rules", rep.ghost_rules)):
        lines.append(f"{title}: {len(rules)}")
        lines.extend(f"  {rule_line(r, s)}" for r, s in rules.items())
    lines.append(f"rules pruned: {rep.rules_pruned}")
    lines.append(f"moves applied: {rep.moves_applied}")
    lines.append(f"transactions modified: {rep.transactions_modified}")
    for h in rep.support_before:
        lines.append(f"support {h}: {rep.support_before[h]} -> {rep.support_after[h]}")
    lines.append(f"support invariant: {'ok' if rep.support_invariant_ok else 'VIOLATED'}")
    lines.append(f"db scans: {rep.scans.total}")
    return lines


def emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- subcommands -------------------------------------------------------------

def cmd_mine(args) -> int:
    db = load_db(args.db)
    th = Thresholds(args.min_support, args.min_confidence)
    rules = strong_rules(db, th)
    if args.format == "json":
        sys.stdout.write(dump_json({"n": len(db), "rules": rules_json(rules)}))
    else:
        for r, s in rules.items():
            print(rule_line(r, s))
    return EXIT_OK


def cmd_hide(args) -> int:
    db = load_db(args.db)
    sensitive = sensitive_list(args.sensitive)
    th = Thresholds(args.min_support, args.min_confidence)
    result = hide_all(db, th, sensitive)
    rep = analyze(db, result.transformed, th, sensitive, moves=len(result.moves))

    Path(args.out).write_text(serialize_database(result.transformed), encoding="utf-8")

    moves = [
        {"item": m.sensitive, "donor": m.donor_tid, "recipient": m.recipient_tid,
         "target": str(m.target), "conf_before": fmt_ratio(m.conf_before),
         "conf_after": fmt_ratio(m.conf_after)}
        for m in result.moves
    ]
    if args.format == "json":
        body = report_json(rep)
        body.update(moves=moves, dropped_items=result.dropped_items,
                    unhidden=rules_json(result.unhidden),
                    hide_scans=result.scans.as_dict())
        text = dump_json(body)
    else:
        lines = [f"move {m['item']}: T{m['donor']} -> T{m['recipient']} "
                 f"(target {m['target']}, conf {m['conf_before']} -> {m['conf_after']})"
                 for m in moves]
        lines.append(f"dropped items: {', '.join(result.dropped_items) or '-'}")
        lines.append(f"unhidden rules: {len(result.unhidden)}")
        lines.extend(f"  {rule_line(r, s)}" for r, s in result.unhidden.items())
        lines.extend(report_text(rep))
        text = "\n".join(lines) + "\n"
    emit(text, args.report)
    return EXIT_SURVIVORS if result.unhidden else EXIT_OK


def cmd_eval(args) -> int:
    before, after = load_db(args.before), load_db(args.after)
    sensitive = sensitive_list(args.sensitive) if args.sensitive is not None else []
    th = Thresholds(args.min_support, args.min_confidence)
    rep = analyze(before, after, th, sensitive)
    if args.format == "json":
        text = dump_json(report_json(rep))
    else:
        text = "\n".join(report_text(rep)) + "\n"
    emit(text, args.report)
    return EXIT_SURVIVORS if rep.surviving_sensitive else EXIT_OK


def cmd_cover(args) -> int:
    try:
        base = Rule.parse(args.rule)
    except InvalidRule as exc:
        raise UsageError(str(exc)) from None
    cov = cover(base)
    members = cov.ordered()
    m = len(base.consequent)
    if args.format == "json":
        sys.stdout.write(dump_json({
            "base": {"antecedent": sorted(base.antecedent), "consequent": sorted(base.consequent)},
            "members": [{"antecedent": sorted(r.antecedent), "consequent": sorted(r.consequent)}
                        for r in members],
            "count": len(members),
        }))
    else:
        for r in members:
            print(r)
        print(f"count: 3^{m} - 2^{m} = {len(members)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rulehide",
        description="Mine association rules and hide rules on sensitive items "
                    "without changing the items' support.")
    sub = parser.add_subparsers(dest="command", required=True)

    def thresholds(p):
        p.add_argument("--min-support", type=threshold, required=True,
                       help="e.g. 33%%, 0.33 or 1/3")
        p.add_argument("--min-confidence", type=threshold, required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("mine", help="list strong rules")
    p.add_argument("--db", required=True)
    thresholds(p)
    fmt(p)
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("hide", help="sanitize a database")
    p.add_argument("--db", required=True)
    thresholds(p)
    p.add_argument("--sensitive", required=True, help="comma-separated items, processed in order")
    p.add_argument("--out", required=True, help="path for the transformed basket file")
    p.add_argument("--report", help="report path (default: stdout)")
    fmt(p)
    p.set_defaults(func=cmd_hide)

    p = sub.add_parser("eval", help="compare a database with its sanitized version")
    p.add_argument("--before", required=True)
    p.add_argument("--after", required=True)
    thresholds(p)
    p.add_argument("--sensitive", help="comma-separated items")
    p.add_argument("--report", help="report path (default: stdout)")
    fmt(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("cover", help="enumerate the cover of a rule")
    p.add_argument("--rule", required=True, help='e.g. "C=>A,B"')
    fmt(p)
    p.set_defaults(func=cmd_cover)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, RuleHidingError) as exc:
        print(f"rulehide: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"rulehide: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
