"""Command-line front end.

Exit codes: 0 success, 1 validation or parse error, 2 negative verdict
(not additive, VIOLATES, VULNERABLE), 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import gamefile
from .additivity import check_additive, decompose
from .analysis import (
    DutchBookVerdict,
    PropositionVerdict,
    analyze,
    brute_force_optimum,
    dutch_book_verdict,
    ex_ante,
    witness_dict,
)
from .credence import credence_for, custom
from .decision import DecisionContext, Theory, action_values, best_response, stable_policies
from .errors import InvalidGame, ModelError, NotAdditive
from .game import enumerate_policies, find_violations, parse_policy, validate
from .generator import GeneratorParams, random_game
from .library import BUILTINS, builtin_spec
from .montecarlo import monte_carlo
from .rational import decimal, format_rational

EXIT_OK, EXIT_INVALID, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2, 3

fr = format_rational


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _source(p):
    p.add_argument("game", nargs="?", help="game file (JSON)")
    p.add_argument("--builtin", metavar="NAME", help="built-in game name")


def _fmt(p):
    p.add_argument("--format", choices=("table", "machine"), default="table")


def _credence(p):
    p.add_argument("--credence", default="thirder", metavar="RULE",
                   help="thirder | halfer | custom=<weights.json>")


def _theory(p):
    p.add_argument("--dt", default="cdt", choices=("cdt", "edt"), help="decision theory")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="beautygames", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help, source=True, fmt=True):
        p = sub.add_parser(name, help=help)
        if source:
            _source(p)
        if fmt:
            _fmt(p)
        return p

    cmd("validate", "check a game against every structural invariant")
    _credence(cmd("credence", "credence profile per information set"))
    p = cmd("decide", "action values and best responses under a conjecture")
    _credence(p)
    _theory(p)
    p.add_argument("--policy", required=True, help="conjecture, e.g. all:Left or I1=Left,I2=Right")
    p.add_argument("--infoset", help="restrict to one information set")
    p = cmd("stable", "stable uniform policies")
    _credence(p)
    _theory(p)
    cmd("evaluate", "ex ante value of a policy").add_argument("--policy", required=True)
    cmd("optimum", "brute-force ex ante optimum")
    cmd("check-additive", "payoff additivity check").add_argument(
        "--method", choices=("pruned", "exhaustive"), default="pruned")
    cmd("decompose", "per-event payoffs and realization constants").add_argument(
        "--defaults", help="all:<action>, <set>=<action> or <r/i>=<action>, comma separated")
    p = cmd("proposition", "are stable policies ex ante optimal in an additive game?")
    _credence(p)
    _theory(p)
    p = cmd("dutchbook", "sure-loss verdict for stable policies")
    _credence(p)
    _theory(p)
    p = cmd("simulate", "Monte Carlo awakening frequencies")
    p.add_argument("--trials", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p = cmd("generate", "print a random game as JSON", source=False, fmt=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--additive", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--with-decline", action="store_true")
    p.add_argument("--max-realizations", type=int, default=4)
    p.add_argument("--max-awakenings", type=int, default=3)
    p.add_argument("--max-infosets", type=int, default=3)
    p.add_argument("--max-actions", type=int, default=3)
    cmd("list-builtins", "names of the built-in games", source=False)
    return parser


def _load_game(args):
    if (args.game is None) == (args.builtin is None):
        raise UsageError("give exactly one game source: a file path or --builtin NAME")
    if args.builtin is not None:
        return validate(builtin_spec(args.builtin)), args.builtin
    try:
        text = Path(args.game).read_text()
    except OSError as exc:
        raise ModelError("IO_ERROR", str(exc)) from None
    return validate(gamefile.loads(text)), args.game


def _credence_arg(game, text):
    if text.startswith("custom="):
        try:
            weights = gamefile.load_weights(Path(text[7:]).read_text())
        except OSError as exc:
            raise ModelError("IO_ERROR", str(exc)) from None
        return custom(game, weights)
    if text not in ("thirder", "halfer"):
        raise UsageError(f"--credence: expected thirder, halfer or custom=<file>, got {text!r}")
    return credence_for(game, text)


def _emit(args, machine, table):
    if getattr(args, "format", "machine") == "machine":
        print(json.dumps(machine, indent=2))
    else:
        print(table)


def _rows(rows):
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _num(x):
    return f"{fr(x)} ({decimal(x)})"


def cmd_validate(args):
    if (args.game is None) == (args.builtin is None):
        raise UsageError("give exactly one game source: a file path or --builtin NAME")
    if args.builtin is not None:
        spec, name = builtin_spec(args.builtin), args.builtin
    else:
        spec, name = gamefile.load(args.game), args.game
    violations = find_violations(spec)
    if violations:
        _emit(args, {"game": name, "valid": False,
                     "violations": [{"code": v.code, "element": v.element, "message": v.message}
                                    for v in violations]},
              "\n".join(["invalid"] + [f"  {v}" for v in violations]))
        return EXIT_INVALID
    game = validate(spec)
    info = {"game": name, "valid": True, "realizations": len(game.realizations),
            "infosets": len(game.infosets), "events": len(game.events),
            "policies": len(enumerate_policies(game))}
    _emit(args, info, _rows([(k, str(v)) for k, v in info.items()]))
    return EXIT_OK


def cmd_credence(args):
    game, name = _load_game(args)
    prof = _credence_arg(game, args.credence)
    machine = {"game": name, "credence": prof.rule, "infosets": {
        s.label: {
            "realizations": {r: fr(p) for r, p in prof.realization[s.label].items()},
            "events": {v.key: fr(p) for v, p in prof.event[s.label].items()},
        } for s in game.infosets}}
    rows = []
    for s in game.infosets:
        for r, p in prof.realization[s.label].items():
            rows.append((f"{s.label}  P({r}|{s.label})", _num(p)))
        for v, p in prof.event[s.label].items():
            rows.append((f"{s.label}  P({v.key}|{s.label})", _num(p)))
    _emit(args, machine, _rows(rows))
    return EXIT_OK


def cmd_decide(args):
    game, name = _load_game(args)
    prof = _credence_arg(game, args.credence)
    ctx = DecisionContext(game, prof, Theory.parse(args.dt), parse_policy(game, args.policy))
    labels = [args.infoset] if args.infoset else game.infoset_labels
    machine = {"game": name, "credence": prof.rule, "theory": args.dt,
               "conjecture": ctx.conjecture.as_dict(), "infosets": {}}
    rows = []
    for label in labels:
        values = action_values(ctx, label)
        best = best_response(ctx, label)
        machine["infosets"][label] = {"values": {a: fr(x) for a, x in values.items()},
                                      "best_response": list(best)}
        for a, x in values.items():
            rows.append((f"{label}  {a}", _num(x) + ("  *" if a in best else "")))
    _emit(args, machine, _rows(rows))
    return EXIT_OK


def cmd_stable(args):
    game, name = _load_game(args)
    prof = _credence_arg(game, args.credence)
    stable = [(p, ex_ante(game, p)) for p in stable_policies(game, prof, args.dt)]
    machine = {"game": name, "credence": prof.rule, "theory": args.dt,
               "stable_policies": [{"policy": p.as_dict(), "ex_ante": fr(v)} for p, v in stable]}
    if not stable:
        machine["status"] = "NO_STABLE_POLICY"
    table = _rows([(str(p), _num(v)) for p, v in stable]) if stable else "NO_STABLE_POLICY"
    _emit(args, machine, table)
    return EXIT_OK


def cmd_evaluate(args):
    game, name = _load_game(args)
    policy = parse_policy(game, args.policy)
    value = ex_ante(game, policy)
    _emit(args, {"game": name, "policy": policy.as_dict(), "ex_ante": fr(value)},
          _rows([("policy", str(policy)), ("ex ante", _num(value))]))
    return EXIT_OK


def cmd_optimum(args):
    game, name = _load_game(args)
    value, best = brute_force_optimum(game)
    _emit(args, {"game": name, "value": fr(value), "policies": [p.as_dict() for p in best]},
          _rows([("optimum", _num(value))] + [("policy", str(p)) for p in best]))
    return EXIT_OK


def cmd_check_additive(args):
    game, name = _load_game(args)
    verdict = check_additive(game, args.method)
    w = verdict.witness
    _emit(args, {"game": name, "additive": verdict.additive,
                 "witness": None if w is None else witness_dict(w)},
          "additive" if verdict.additive else f"NOT additive\nwitness  {w}")
    return EXIT_OK if verdict.additive else EXIT_NEGATIVE


def _parse_defaults(game, text):
    if not text:
        return None
    if text.startswith("all:"):
        action = text[4:]
        return {v: action for v in game.events if action in game.infoset(v.infoset).actions}
    out = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        key, sep, action = part.partition("=")
        if not sep:
            raise UsageError(f"--defaults: expected <key>=<action>, got {part!r}")
        if "/" in key:
            out[game.event(key)] = action
        else:
            for v in game.events_in(key):
                out[v] = action
    return out


def cmd_decompose(args):
    game, name = _load_game(args)
    try:
        dec = decompose(game, _parse_defaults(game, args.defaults))
    except NotAdditive as exc:
        w = exc.witness
        _emit(args, {"game": name, "additive": False, "witness": witness_dict(w)},
              f"NOT additive\nwitness  {w}")
        return EXIT_NEGATIVE
    machine = {"game": name,
               "events": {v.key: {"infoset": v.infoset, "default": dec.defaults[v],
                                  "values": {a: fr(x) for a, x in vals.items()}}
                          for v, vals in dec.event_payoffs.items()},
               "constants": {r: fr(c) for r, c in dec.constants.items()}}
    rows = [(f"pi[{v.key}]", "  ".join(f"{a}={fr(x)}" for a, x in vals.items()))
            for v, vals in dec.event_payoffs.items()]
    rows += [(f"c({r})", fr(c)) for r, c in dec.constants.items()]
    _emit(args, machine, _rows(rows))
    return EXIT_OK


def cmd_proposition(args):
    game, name = _load_game(args)
    prof = _credence_arg(game, args.credence)
    report = analyze(game, prof, args.dt, game_id=name)
    _emit(args, report.to_dict(), report.to_table())
    return EXIT_NEGATIVE if report.proposition.verdict is PropositionVerdict.VIOLATES else EXIT_OK


def cmd_dutchbook(args):
    game, name = _load_game(args)
    prof = _credence_arg(game, args.credence)
    res = dutch_book_verdict(game, prof, args.dt)
    machine = {"game": name, "credence": prof.rule, "theory": args.dt,
               "verdict": res.verdict.value,
               "policy": None if res.policy is None else res.policy.as_dict(),
               "worst_payoff": None if res.loss is None else fr(res.loss.worst)}
    if res.reason:
        machine["reason"] = res.reason
    rows = [("verdict", res.verdict.value)]
    if res.policy is not None:
        rows += [("policy", str(res.policy)), ("worst payoff", _num(res.loss.worst))]
    if res.reason:
        rows.append(("reason", res.reason))
    _emit(args, machine, _rows(rows))
    return EXIT_NEGATIVE if res.verdict is DutchBookVerdict.VULNERABLE else EXIT_OK


def cmd_simulate(args):
    game, name = _load_game(args)
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    res = monte_carlo(game, args.trials, args.seed)
    counts = res.event_counts()
    freqs = res.frequencies()
    rfreqs = res.realization_frequencies()
    machine = {"game": name, "trials": args.trials, "seed": args.seed, "infosets": {}}
    rows = [("trials", str(args.trials)), ("seed", str(args.seed))]
    for s in game.infosets:
        total = sum(counts[s.label].values())
        machine["infosets"][s.label] = {
            "awakenings": total,
            "events": {v.key: {"count": c, "fraction": fr(freqs[s.label][v])}
                       for v, c in counts[s.label].items()},
            "realizations": {r: fr(f) for r, f in rfreqs[s.label].items()},
        }
        for r, f in rfreqs[s.label].items():
            c = sum(n for v, n in counts[s.label].items() if v.realization == r)
            rows.append((f"{s.label}  {r}", f"{c}/{total} = {decimal(f)}"))
    _emit(args, machine, _rows(rows))
    return EXIT_OK


def cmd_generate(args):
    params = GeneratorParams(seed=args.seed, additive=args.additive,
                             max_realizations=args.max_realizations,
                             max_awakenings=args.max_awakenings,
                             max_infosets=args.max_infosets, max_actions=args.max_actions,
                             with_decline=args.with_decline)
    print(gamefile.dumps(random_game(params)))
    return EXIT_OK


def cmd_list_builtins(args):
    _emit(args, {"builtins": list(BUILTINS)}, "\n".join(BUILTINS))
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate, "credence": cmd_credence, "decide": cmd_decide,
    "stable": cmd_stable, "evaluate": cmd_evaluate, "optimum": cmd_optimum,
    "check-additive": cmd_check_additive, "decompose": cmd_decompose,
    "proposition": cmd_proposition, "dutchbook": cmd_dutchbook, "simulate": cmd_simulate,
    "generate": cmd_generate, "list-builtins": cmd_list_builtins,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"beautygames {args.command}: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidGame as exc:
        for v in exc.violations:
            print(f"error: {v}", file=sys.stderr)
        return EXIT_INVALID
    except ModelError as exc:
        print(f"error: {exc.code}: {exc.message}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
