"""Command line: ``analyze`` one (group, sigma) pair or ``verify`` the corpus.

Exit codes: 0 success, 1 falsification, 2 usage or parse error, 3 order cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import CATALOG, SIGMA_SPECS, ParseError, parse_sigma_spec, resolve_group
from .group import GroupError, OrderCapExceeded
from .report import analyze, run_campaign

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _flag(b) -> str:
    return "yes" if b else "no"


def _analysis_text(r: dict) -> str:
    c = r["classifiers"]
    p = r["psigmat"]
    lines = [
        f"group {r['group']['key']} (order {r['group']['order']}), sigma {r['sigma']}",
        f"  sigma(G): {' '.join(r['sigma_of_G']) or '(none)'}",
        f"  sigma-primary {_flag(c['sigma_primary'])}, sigma-nilpotent "
        f"{_flag(c['sigma_nilpotent'])}, sigma-soluble {_flag(c['sigma_soluble'])}, "
        f"sigma-full of Sylow type {_flag(c['sigma_full_sylow_type'])}",
        f"  sigma-nilpotent residual: order {r['residual']['order']}",
        f"  complete Hall sigma-sets: {r['hall_set_count']}",
        f"  PsigmaT (brute force): {_flag(p['bruteforce']['value'])}",
        f"  PsigmaT (subnormal criterion): {_flag(p['subnormal']['value'])}",
    ]
    for route in ("bruteforce", "subnormal"):
        w = p[route]["witness"]
        if w:
            lines.append(f"    {route} witness: {json.dumps(w, sort_keys=True)}")
    sp = r["special_psigmat"]
    if sp:
        lines.append(f"  special PsigmaT: yes (block {sp['block']}, |D|={sp['D']['order']}, "
                     f"|E|={sp['E']['order']}, |S|={sp['S']['order']})")
    else:
        lines.append("  special PsigmaT: no")
    tc = r["theorem_C"]
    lines.append(f"  Theorem C: applicable {_flag(tc['applicable'])}, "
                 f"criterion {_flag(tc['verdict'])}")
    for row in r["theorem_A_B"]:
        lines.append(f"  D of order {row['D']['order']}: Theorem A premises "
                     f"{_flag(row['theorem_A_premises'])}, Theorem B premises "
                     f"{_flag(row['theorem_B_premises'])}")
    lines.append(f"  status: {r['status']}")
    return "\n".join(lines)


def _summary_text(res: dict) -> str:
    s = res["summary"]
    lines = []
    for c in res["cells"]:
        mark = "FAIL" if c["falsifications"] else "ok"
        lines.append(f"{mark:4} {c['key']:>8} {c['sigma']:<10} PsigmaT={_flag(c['psigmat']):3} "
                     f"C-applicable={_flag(c['theorem_c_applicable'])}")
        for f in c["falsifications"]:
            lines.append(f"       falsified {f['check']}: {json.dumps(f.get('witness'), sort_keys=True)}")
    lines.append(f"cells: {s['cells']}, falsified cells: {s['falsified_cells']}, "
                 f"falsifications: {s['falsifications']}")
    lines.append(f"Theorem C applicable: {s['theorem_C_applicable']} "
                 f"(true {s['theorem_C_applicable_true']}, false "
                 f"{s['theorem_C_applicable_false']}), agreement "
                 f"{100 * s['theorem_C_agreement_rate']:.1f}%")
    lines.append(f"nontrivial premise-true instances: Theorem A "
                 f"{s['theorem_A_nontrivial_premises']}, Theorem B "
                 f"{s['theorem_B_nontrivial_premises']}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    key, G = resolve_group(args.group, cap=args.cap)
    sigma = parse_sigma_spec(args.sigma)
    r = analyze(G, sigma, key)
    print(_dump(r) if args.json else _analysis_text(r))
    return EXIT_OK if r["status"] == "OK" else EXIT_FALSIFIED


def _read_sigma_list(path: str) -> tuple[str, ...]:
    try:
        with open(path) as fh:
            lines = [ln.split("#", 1)[0].strip() for ln in fh]
    except OSError as e:
        raise ParseError(f"cannot read sigma list {path!r}: {e.strerror}") from None
    specs = tuple(ln for ln in lines if ln)
    for s in specs:
        parse_sigma_spec(s)
    return specs


def cmd_verify(args) -> int:
    if args.only is None:
        keys = list(CATALOG)
    else:
        keys = [k.strip() for k in args.only.split(",") if k.strip()]
        unknown = [k for k in keys if k not in CATALOG]
        if unknown:
            raise ParseError(f"unknown catalog keys: {', '.join(unknown)}")
    specs = _read_sigma_list(args.sigma_list) if args.sigma_list else SIGMA_SPECS
    res = run_campaign(keys, specs, cap=args.cap, jobs=args.jobs)
    print(_dump(res) if args.json else _summary_text(res))
    return EXIT_FALSIFIED if res["summary"]["falsifications"] else EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sigmagroups", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="analyse one group under one sigma-partition")
    a.add_argument("--group", required=True, help="group file path or builder:NAME")
    a.add_argument("--sigma", required=True, help="sigma spec such as '3,5|*'")
    a.add_argument("--json", action="store_true", help="emit the JSON report")
    a.add_argument("--cap", type=int, default=None, help="order cap")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run the verification campaign")
    v.add_argument("--only", default=None, help="comma-separated catalog keys")
    v.add_argument("--sigma-list", default=None, help="file with one sigma spec per line")
    v.add_argument("--cap", type=int, default=None, help="order cap")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.add_argument("--json", action="store_true", help="emit the JSON report")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except OrderCapExceeded as e:
        print(f"sigmagroups: {e}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, GroupError) as e:
        print(f"sigmagroups: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
