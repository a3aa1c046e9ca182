"""Command-line front end.

Subcommands: validate, classify, congruences, network, lattice, verify,
census.  Input is the Cayley text format (multiple tables per file separated
by blank lines); output is byte-deterministic for a fixed input and
configuration.

Exit codes: 0 ok, 2 parse error, 3 not associative, 4 not completely
regular, 5 order bound exceeded, 6 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .classify import classify, named_congruences
from .core import FiniteSemigroup
from .errors import OrderBoundExceeded
from .instances import IngestResult, enumerate_semigroups, ingest
from .kernel_trace import combined_network_dot, min_network
from .relations import all_congruences
from .verifiers import INFORMATIONAL_IDS, RESULT_IDS, verify_all

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_ASSOCIATIVE = 3
EXIT_NOT_CR = 4
EXIT_BOUND = 5
EXIT_VERIFY = 6


@dataclass
class RunConfig:
    command: str
    inputs: list[str]
    fmt: str = "table"
    bound: int = 8
    jobs: int = 1
    root: str = "both"
    max_order: int = 3
    full: bool = False
    out: str | None = None


def _emit(config: RunConfig, text: str) -> None:
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _load_inputs(config: RunConfig) -> tuple[list[tuple[str, int, FiniteSemigroup]], list[str], int]:
    """All tables across the input files, plus error lines and worst status."""
    tables: list[tuple[str, int, FiniteSemigroup]] = []
    problems: list[str] = []
    status = EXIT_OK
    for path in config.inputs:
        result: IngestResult = ingest(path)
        for err in result.errors:
            problems.append(f"{path}:{err.line}: {err.kind}: {err.message}")
            if err.kind == "not-associative":
                if status != EXIT_PARSE:
                    status = EXIT_NOT_ASSOCIATIVE
            else:
                status = EXIT_PARSE
        for S, line in zip(result.semigroups, result.lines):
            tables.append((path, line, S))
    return tables, problems, status


def _cmd_validate(config: RunConfig) -> int:
    lines = []
    status = EXIT_OK
    for path in config.inputs:
        result = ingest(path)
        for S, line in zip(result.semigroups, result.lines):
            lines.append(f"{path}:{line}: OK order={S.order}")
        for err in result.errors:
            lines.append(f"{path}:{err.line}: ERROR {err.kind}: {err.message}")
            if err.kind == "not-associative":
                if status != EXIT_PARSE:
                    status = EXIT_NOT_ASSOCIATIVE
            else:
                status = EXIT_PARSE
    _emit(config, "\n".join(lines) + "\n")
    return status


def _classify_one(S: FiniteSemigroup) -> dict:
    return classify(S).to_json_dict()


def _cmd_classify(config: RunConfig) -> int:
    tables, problems, status = _load_inputs(config)
    if status != EXIT_OK:
        _emit(config, "\n".join(problems) + "\n")
        return status
    if config.jobs > 1 and len(tables) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(_classify_one, [S for _, _, S in tables]))
    else:
        reports = [_classify_one(S) for _, _, S in tables]
    if config.fmt == "json":
        payload = [
            {"input": f"{path}:{line}", "classification": report}
            for (path, line, _), report in zip(tables, reports)
        ]
        _emit(config, _json({"schema": 1, "results": payload}))
    else:
        out = []
        for (path, line, _), report in zip(tables, reports):
            out.append(f"{path}:{line}")
            for key in sorted(report):
                if key == "schema":
                    continue
                out.append(f"  {key}: {report[key]}")
        _emit(config, "\n".join(out) + "\n")
    return EXIT_OK


def _require_cr(tables) -> tuple[int, str | None]:
    for path, line, S in tables:
        if not S.is_completely_regular():
            return EXIT_NOT_CR, f"{path}:{line}: not completely regular\n"
    return EXIT_OK, None


def _cmd_congruences(config: RunConfig) -> int:
    tables, problems, status = _load_inputs(config)
    if status != EXIT_OK:
        _emit(config, "\n".join(problems) + "\n")
        return status
    code, message = _require_cr(tables)
    if code != EXIT_OK:
        _emit(config, message)
        return code
    results = []
    for path, line, S in tables:
        entry = {
            "input": f"{path}:{line}",
            "named": named_congruences(S).to_json_dict(),
        }
        if config.full:
            entry["lattice"] = all_congruences(S, config.bound).to_json_dict()
        results.append(entry)
    _emit(config, _json({"schema": 1, "results": results}))
    return EXIT_OK


def _cmd_network(config: RunConfig) -> int:
    tables, problems, status = _load_inputs(config)
    if status != EXIT_OK:
        _emit(config, "\n".join(problems) + "\n")
        return status
    code, message = _require_cr(tables)
    if code != EXIT_OK:
        _emit(config, message)
        return code
    chunks = []
    for path, line, S in tables:
        if config.fmt == "dot":
            if config.root == "both":
                chunks.append(combined_network_dot(S))
            else:
                chunks.append(min_network(S, config.root).to_dot())
        else:
            roots = ["omega", "d"] if config.root == "both" else [config.root]
            chunks.append(
                _json(
                    {
                        "schema": 1,
                        "input": f"{path}:{line}",
                        "networks": [min_network(S, r).to_json_dict() for r in roots],
                    }
                )
            )
    _emit(config, "".join(chunks))
    return EXIT_OK


def _cmd_lattice(config: RunConfig) -> int:
    tables, problems, status = _load_inputs(config)
    if status != EXIT_OK:
        _emit(config, "\n".join(problems) + "\n")
        return status
    chunks = []
    for path, line, S in tables:
        try:
            lattice = all_congruences(S, config.bound)
        except OrderBoundExceeded as e:
            _emit(config, f"{path}:{line}: {e}\n")
            return EXIT_BOUND
        if config.fmt == "dot":
            chunks.append(lattice.to_dot())
        else:
            chunks.append(_json({"input": f"{path}:{line}", **lattice.to_json_dict()}))
    _emit(config, "".join(chunks))
    return EXIT_OK


def _verify_one(args) -> list[dict]:
    S, bound = args
    return [v.to_json_dict() for v in verify_all(S, bound)]


def _cmd_verify(config: RunConfig) -> int:
    tables, problems, status = _load_inputs(config)
    if status != EXIT_OK:
        _emit(config, "\n".join(problems) + "\n")
        return status
    code, message = _require_cr(tables)
    if code != EXIT_OK:
        _emit(config, message)
        return code
    try:
        if config.jobs > 1 and len(tables) > 1:
            with ProcessPoolExecutor(max_workers=config.jobs) as pool:
                all_verdicts = list(
                    pool.map(_verify_one, [(S, config.bound) for _, _, S in tables])
                )
        else:
            all_verdicts = [_verify_one((S, config.bound)) for _, _, S in tables]
    except OrderBoundExceeded as e:
        _emit(config, f"{e}\n")
        return EXIT_BOUND
    failed = False
    if config.fmt == "json":
        payload = [
            {"input": f"{path}:{line}", "verdicts": verdicts}
            for (path, line, _), verdicts in zip(tables, all_verdicts)
        ]
        _emit(config, _json({"schema": 1, "results": payload}))
    else:
        out = []
        for (path, line, _), verdicts in zip(tables, all_verdicts):
            out.append(f"{path}:{line}")
            for v in verdicts:
                mark = "info" if v["result_id"] in INFORMATIONAL_IDS else (
                    "vacuous" if v["vacuous"] else ("holds" if v["holds"] else "FAIL")
                )
                extra = ""
                if not v["holds"] and v["witness"] is not None:
                    extra = "  witness=" + json.dumps(v["witness"], sort_keys=True)
                out.append(f"  {v['result_id']:<24} {mark}{extra}")
        _emit(config, "\n".join(out) + "\n")
    for verdicts in all_verdicts:
        for v in verdicts:
            if v["result_id"] not in INFORMATIONAL_IDS and not v["holds"]:
                failed = True
    return EXIT_VERIFY if failed else EXIT_OK


def _cmd_census(config: RunConfig) -> int:
    lines = ["order  total  completely_regular  battery_pass  battery_fail"]
    any_fail = False
    try:
        for n in range(1, config.max_order + 1):
            total = 0
            cr = 0
            passed = 0
            failures = 0
            for entry in enumerate_semigroups(n):
                total += 1
                if entry.flags.completely_regular:
                    cr += 1
                    verdicts = verify_all(entry.semigroup, config.bound)
                    ok = all(
                        v.holds
                        for v in verdicts
                        if v.result_id not in INFORMATIONAL_IDS
                    )
                    if ok:
                        passed += 1
                    else:
                        failures += 1
                        any_fail = True
            lines.append(
                f"{n:>5}  {total:>5}  {cr:>18}  {passed:>12}  {failures:>12}"
            )
    except OrderBoundExceeded as e:
        _emit(config, f"{e}\n")
        return EXIT_BOUND
    _emit(config, "\n".join(lines) + "\n")
    return EXIT_VERIFY if any_fail else EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "classify": _cmd_classify,
    "congruences": _cmd_congruences,
    "network": _cmd_network,
    "lattice": _cmd_lattice,
    "verify": _cmd_verify,
    "census": _cmd_census,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crsg",
        description="Compute with finite completely regular semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, needs_input: bool = True):
        p = sub.add_parser(name, help=help_text)
        if needs_input:
            p.add_argument("--input", nargs="+", required=True, help="Cayley table files")
        p.add_argument(
            "--format",
            dest="fmt",
            choices=["json", "dot", "table"],
            default="table",
        )
        p.add_argument("--bound", type=int, default=8, help="congruence lattice order bound")
        p.add_argument("--jobs", type=int, default=1, help="parallelism across input tables")
        p.add_argument("--out", default=None, help="write output to a file instead of stdout")
        return p

    add("validate", "check table syntax and associativity")
    add("classify", "class membership flags per table")
    p = add("congruences", "named congruences (optionally the full lattice)")
    p.add_argument("--full", action="store_true", help="include the whole lattice")
    p = add("network", "min-network of the universal congruence and Green's D")
    p.add_argument("--root", choices=["omega", "d", "both"], default="both")
    add("lattice", "congruence lattice Hasse diagram")
    add("verify", "run the whole verification battery")
    p = add("census", "enumerate small semigroups, classify and verify them", needs_input=False)
    p.add_argument("--max-order", type=int, default=3)
    return parser


def run(config: RunConfig) -> int:
    if config.bound < 1:
        raise ValueError("--bound must be at least 1")
    if config.jobs < 1:
        raise ValueError("--jobs must be at least 1")
    return _COMMANDS[config.command](config)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        command=args.command,
        inputs=getattr(args, "input", []) or [],
        fmt=args.fmt,
        bound=args.bound,
        jobs=args.jobs,
        root=getattr(args, "root", "both"),
        max_order=getattr(args, "max_order", 3),
        full=getattr(args, "full", False),
        out=args.out,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
