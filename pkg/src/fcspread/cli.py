"""Command line front end.

Every run emits a result log plus exactly one manifest.  The result log is
line-delimited JSON: first a header object with the log format version, the
resolved configuration and its digest, then one canonically serialized
record per line.  The record section carries no timestamps and is sorted
canonically, so reruns with the same configuration and package version are
byte-identical.  Timing, paths and totals live in the manifest, written to
<output>.manifest.json when --output is given and to stderr otherwise.

Exit codes: 0 run completed and matched expectations, 1 completed but found
something unexpected (a counterexample, a catalog mismatch, a failed
verification), 2 usage or configuration error, 3 runtime failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
import traceback
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from . import abc_check, arith, families, products, search
from .search import FORMAT_VERSION, CheckpointMismatch, SearchConfig, canon_json

RESULT_LOG_FORMAT = "fcspread-result-log"
MANIFEST_FORMAT = "fcspread-manifest"

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2
EXIT_RUNTIME = 3


class UsageError(Exception):
    """Bad flags, bad config file, or inconsistent run setup."""


# ---------------------------------------------------------------------------
# Small parsing helpers


def _parse_range(text: str) -> Tuple[int, int]:
    """"N" or "A..B" as an inclusive integer range."""
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"expected N or A..B, got {text!r}") from None
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _parse_coeffs(text: str) -> Tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"expected A,B,C coefficients, got {text!r}")
    try:
        a, b, c = (int(p) for p in parts)
    except ValueError:
        raise UsageError(f"non-integer coefficient in {text!r}") from None
    return a, b, c


def _load_config_file(path: Optional[str]) -> Dict[str, Any]:
    if not path:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"config file is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    return data


def _merge_options(
    file_cfg: Dict[str, Any], args: argparse.Namespace, keys: Sequence[str]
) -> Dict[str, Any]:
    """Precedence: defaults (handled downstream) < config file < flags."""
    merged: Dict[str, Any] = {}
    for key in keys:
        if key in file_cfg:
            merged[key] = file_cfg[key]
        val = getattr(args, key, None)
        if val is not None:
            merged[key] = val
    return merged


def _digest_params(params: Dict[str, Any]) -> str:
    return hashlib.sha256(canon_json(params).encode("utf-8")).hexdigest()


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _package_version() -> str:
    try:
        from importlib.metadata import version

        return version("fcspread")
    except Exception:
        return "unknown"


# ---------------------------------------------------------------------------
# Result log and manifest emission


def _atomic_write(path: str, data: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(data)
    os.replace(tmp, path)


def _write_log(
    output: Optional[str], header: Dict[str, Any], records: Sequence[Dict[str, Any]]
) -> None:
    lines = [canon_json(header)]
    lines.extend(canon_json(rec) for rec in records)
    data = "\n".join(lines) + "\n"
    if output:
        _atomic_write(output, data)
    else:
        sys.stdout.write(data)


def _emit(
    subcommand: str,
    params: Dict[str, Any],
    digest: str,
    records: Sequence[Dict[str, Any]],
    totals: Dict[str, int],
    exit_code: int,
    started: str,
    *,
    output: Optional[str] = None,
    input_path: Optional[str] = None,
    checkpoint: Optional[str] = None,
    log: bool = True,
) -> int:
    header = {
        "format": RESULT_LOG_FORMAT,
        "version": FORMAT_VERSION,
        "subcommand": subcommand,
        "config": params,
        "config_digest": digest,
    }
    if log:
        _write_log(output, header, records)
    manifest = {
        "format": MANIFEST_FORMAT,
        "version": FORMAT_VERSION,
        "package_version": _package_version(),
        "subcommand": subcommand,
        "config": params,
        "config_digest": digest,
        "input": input_path,
        "output": output,
        "checkpoint": checkpoint,
        "started": started,
        "finished": _now(),
        "totals": totals,
        "exit_code": exit_code,
    }
    if output:
        _atomic_write(output + ".manifest.json", canon_json(manifest) + "\n")
    else:
        sys.stderr.write(canon_json(manifest) + "\n")
    return exit_code


# ---------------------------------------------------------------------------
# Records for identities, decompositions and basic arithmetic


def _jsonify(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    return value


def identity_record(sol: families.KnownSolution) -> Dict[str, Any]:
    (x, dx), (y, dy), (z, dz) = sol.terms
    return {
        "kind": "identity",
        "sign": sol.sign,
        "source": sol.source,
        "x": x,
        "y": y,
        "z": z,
        "x_factors": list(dx.factors),
        "y_factors": list(dy.factors),
        "z_factors": list(dz.factors),
        "weight": str(sol.weight()),
        "checks": _jsonify(sol.checks),
    }


def verify_identity_record(rec: Dict[str, Any]) -> List[str]:
    problems: List[str] = []

    def check(ok: bool, msg: str) -> None:
        if not ok:
            problems.append(msg)

    if rec.get("kind") == "identity-failure":
        if rec.get("family") != "standard":
            return [f"unknown failing family {rec.get('family')!r}"]
        p = rec["params"]
        res = families.gen_standard(p["v"], p["w"], p["n"])
        if not isinstance(res, families.IdentityFailure):
            return ["claimed failure actually holds"]
        check(res.lhs == rec["lhs"] and res.rhs == rec["rhs"], "lhs/rhs mismatch")
        return problems
    if rec.get("kind") != "identity":
        return [f"unknown record kind {rec.get('kind')!r}"]
    x, y, z = rec["x"], rec["y"], rec["z"]
    if rec["sign"] == "plus":
        check(x + y == z, f"{x} + {y} != {z}")
    elif rec["sign"] == "minus":
        check(x - y == z, f"{x} - {y} != {z}")
    else:
        check(False, f"bad sign {rec['sign']!r}")
    decs = []
    for name, val in (("x", x), ("y", y), ("z", z)):
        factors = rec[f"{name}_factors"]
        check(
            math.prod(factors) == val,
            f"{name}_factors do not multiply to {val}",
        )
        decs.append(products.analyze(factors))
    weight = products.fc_weight((d.spread, d.degree) for d in decs)
    check(str(weight) == rec["weight"], "weight mismatch")
    checks = rec.get("checks", {})
    if "maxgcd" in checks:
        check(
            checks["maxgcd"] == (math.gcd(x, y) == min(x, y)),
            "maxgcd flag wrong",
        )
    return problems


def decomposition_record(dec: products.ProductDecomposition) -> Dict[str, Any]:
    return {
        "kind": "decomposition",
        "value": dec.value,
        "factors": list(dec.factors),
        "base": dec.base,
        "spread": dec.spread,
        "degree": dec.degree,
        "weight": str(dec.weight),
    }


def verify_decomposition_record(
    rec: Dict[str, Any], params: Dict[str, Any]
) -> List[str]:
    problems: List[str] = []
    if rec.get("kind") != "decomposition":
        return [f"unknown record kind {rec.get('kind')!r}"]
    dec = products.analyze(rec["factors"])
    for field in ("value", "base", "spread", "degree"):
        if getattr(dec, field) != rec[field]:
            problems.append(f"{field} mismatch")
    if str(dec.weight) != rec["weight"]:
        problems.append("weight mismatch")
    if params.get("value") is not None and dec.value != params["value"]:
        problems.append("value disagrees with the run parameters")
    if params.get("max_spread") is not None and dec.spread > params["max_spread"]:
        problems.append("spread over the configured cap")
    return problems


def _arith_record(kind: str, n: int) -> Dict[str, Any]:
    if kind == "factorization":
        return {"kind": kind, "n": n, "factors": [[p, e] for p, e in arith.factorize(n)]}
    return {"kind": "radical", "n": n, "radical": arith.radical(n)}


def verify_arith_record(rec: Dict[str, Any]) -> List[str]:
    problems: List[str] = []
    if rec.get("kind") == "factorization":
        n = rec["n"]
        got = math.prod(p**e for p, e in rec["factors"])
        if got != n:
            problems.append(f"factors multiply to {got}, not {n}")
        last = 1
        for p, e in rec["factors"]:
            if not arith.is_prime(p):
                problems.append(f"{p} is not prime")
            if p <= last:
                problems.append("primes not strictly increasing")
            if e < 1:
                problems.append(f"bad exponent {e}")
            last = p
        return problems
    if rec.get("kind") == "radical":
        if arith.radical(rec["n"]) != rec["radical"]:
            problems.append("radical mismatch")
        return problems
    return [f"unknown record kind {rec.get('kind')!r}"]


# ---------------------------------------------------------------------------
# Subcommand handlers


_SEARCH_OPTION_KEYS = (
    "max_bits",
    "sign",
    "min_exp",
    "max_exp",
    "min_exp_cap",
    "degree",
    "n_range",
    "m_range",
    "max_spread",
    "f_bound",
    "f_strict",
    "q_bound",
    "m_bound",
    "difference",
    "coeffs",
)


def _cmd_search(args: argparse.Namespace) -> int:
    started = _now()
    mode = "fermat-catalan" if args.mode == "fc" else args.mode
    file_cfg = _load_config_file(args.config)
    overrides = _merge_options(file_cfg, args, _SEARCH_OPTION_KEYS)
    for key in ("degree", "n_range", "m_range"):
        if isinstance(overrides.get(key), str):
            overrides[key] = _parse_range(overrides[key])
    if isinstance(overrides.get("coeffs"), str):
        overrides["coeffs"] = _parse_coeffs(overrides["coeffs"])
    try:
        cfg = search.make_config(mode, **overrides)
        cfg.validate()
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    threads = args.threads if args.threads is not None else os.cpu_count() or 1
    n_chunks = args.chunks if args.chunks is not None else max(16, 4 * threads)
    if threads < 1 or n_chunks < 1:
        raise UsageError("--threads and --chunks must be >= 1")
    result = search.run_chunked(
        cfg,
        n_chunks=n_chunks,
        checkpoint_path=args.checkpoint,
        resume=args.resume,
        threads=threads,
    )
    ok, summary = search.expectation_report(cfg, result.records)
    totals = {
        "chunks": result.chunks_run,
        "candidates": result.candidates,
        "records": len(result.records),
        "errors": 0,
    }
    exit_code = EXIT_OK if ok else EXIT_FINDINGS
    sys.stderr.write(
        f"search {args.mode}: {len(result.records)} records from "
        f"{result.chunks_run}/{result.chunks_total} chunks; {summary}\n"
    )
    return _emit(
        f"search {args.mode}",
        cfg.semantic_dict(),
        cfg.digest(),
        result.records,
        totals,
        exit_code,
        started,
        output=args.output,
        checkpoint=args.checkpoint,
    )


def _cmd_decompose(args: argparse.Namespace) -> int:
    started = _now()
    file_cfg = _load_config_file(args.config)
    merged = _merge_options(file_cfg, args, ("degree", "max_spread"))
    if "degree" not in merged:
        raise UsageError("decompose needs --degree N or A..B")
    degree = merged["degree"]
    if isinstance(degree, str):
        degree = _parse_range(degree)
    elif isinstance(degree, int):
        degree = (degree, degree)
    else:
        degree = tuple(degree)
    max_spread = int(merged.get("max_spread", 0))
    params = {
        "value": args.value,
        "degree": list(degree),
        "max_spread": max_spread,
    }
    records = []
    try:
        for d in range(degree[0], degree[1] + 1):
            for dec in products.decompose(args.value, d, max_spread):
                records.append(decomposition_record(dec))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    records.sort(key=lambda r: (r["degree"], r["factors"]))
    totals = {"chunks": 0, "candidates": len(records), "records": len(records), "errors": 0}
    sys.stderr.write(f"decompose {args.value}: {len(records)} decompositions\n")
    return _emit(
        "decompose",
        params,
        _digest_params(params),
        records,
        totals,
        EXIT_OK,
        started,
        output=args.output,
    )


def _cmd_gen(args: argparse.Namespace) -> int:
    started = _now()
    family = args.family
    exit_code = EXIT_OK
    try:
        record, params, exit_code = _gen_record(args, family)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    totals = {"chunks": 0, "candidates": 1, "records": 1, "errors": 0}
    sys.stderr.write(f"gen {family}: {'ok' if exit_code == EXIT_OK else 'identity fails'}\n")
    return _emit(
        f"gen {family}",
        params,
        _digest_params(params),
        [record],
        totals,
        exit_code,
        started,
        output=args.output,
    )


def _gen_record(
    args: argparse.Namespace, family: str
) -> Tuple[Dict[str, Any], Dict[str, Any], int]:
    exit_code = EXIT_OK
    if family == "standard":
        params = {"family": family, "v": args.v, "w": args.w, "n": args.n}
        res = families.gen_standard(args.v, args.w, args.n)
        if isinstance(res, families.IdentityFailure):
            record = {
                "kind": "identity-failure",
                "family": "standard",
                "params": dict(res.params),
                "lhs": res.lhs,
                "rhs": res.rhs,
                "reason": res.reason,
            }
            exit_code = EXIT_FINDINGS
        else:
            record = identity_record(res)
    elif family == "maxgcd-trivial":
        params = {"family": family, "x": args.x, "p": args.p}
        record = identity_record(families.gen_maxgcd_trivial(args.x, args.p))
    elif family == "pythagorean":
        params = {"family": family, "a": args.a, "n": args.n, "m": args.m}
        record = identity_record(families.gen_pythagorean(args.a, args.n, args.m))
    else:  # counterexample
        params = {
            "family": family,
            "a": args.a,
            "alpha": args.alpha,
            "extra_degree": args.extra_degree,
        }
        record = identity_record(
            families.gen_counterexample_family(args.a, args.alpha, args.extra_degree)
        )
    return record, params, exit_code


def _cmd_catalog(args: argparse.Namespace) -> int:
    started = _now()
    sols = (
        families.fermat_catalan_catalog()
        if args.which == "fc"
        else families.degree3_catalog()
    )
    params: Dict[str, Any] = {"catalog": args.which, "max_bits": args.max_bits}
    records = []
    for sol in sols:
        if args.max_bits is not None:
            if max(v for v, _ in sol.terms) > (1 << args.max_bits):
                continue
        records.append(identity_record(sol))
    totals = {"chunks": 0, "candidates": len(sols), "records": len(records), "errors": 0}
    sys.stderr.write(f"catalog {args.which}: {len(records)} entries\n")
    return _emit(
        f"catalog {args.which}",
        params,
        _digest_params(params),
        records,
        totals,
        EXIT_OK,
        started,
        output=args.output,
    )


def _parse_classic(specs: Optional[Sequence[str]]) -> List[Tuple[str, str]]:
    pairs: List[Tuple[str, str]] = []
    for spec in specs or ():
        parts = spec.split(",")
        if len(parts) == 1:
            pairs.append((parts[0], "1"))
        elif len(parts) == 2:
            pairs.append((parts[0], parts[1]))
        else:
            raise UsageError(f"expected EPS or EPS,C, got {spec!r}")
    return pairs


def _cmd_abc_check(args: argparse.Namespace) -> int:
    started = _now()
    file_cfg = _load_config_file(args.config)
    classic = _parse_classic(args.classic) or [
        (str(e), str(c)) for e, c in file_cfg.get("classic", [])
    ]
    params = {"classic": [[e, c] for e, c in classic]}
    if args.input and args.input != "-":
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read input: {exc}") from None
    else:
        text = sys.stdin.read()
    parsed = abc_check.parse_triples(text)
    records = []
    failures = 0
    for t in parsed.triples:
        rec = abc_check.report(t, classic).to_dict()
        rec["kind"] = "abc-check"
        records.append(rec)
        if not rec["explicit_pass"]:
            failures += 1
    for err in parsed.errors:
        sys.stderr.write(f"abc check: {err}\n")
    totals = {
        "chunks": 0,
        "candidates": len(parsed.triples),
        "records": len(records),
        "errors": len(parsed.errors),
    }
    if failures:
        exit_code = EXIT_FINDINGS
    elif parsed.errors:
        exit_code = EXIT_USAGE
    else:
        exit_code = EXIT_OK
    sys.stderr.write(
        f"abc check: {len(records)} triples, {failures} explicit failures, "
        f"{len(parsed.errors)} parse errors\n"
    )
    return _emit(
        "abc check",
        params,
        _digest_params(params),
        records,
        totals,
        exit_code,
        started,
        output=args.output,
        input_path=args.input,
    )


def _cmd_abc_scan(args: argparse.Namespace) -> int:
    started = _now()
    file_cfg = _load_config_file(args.config)
    limit = args.limit if args.limit is not None else int(file_cfg.get("limit", 10**5))
    params = {"limit": limit}
    try:
        violations = abc_check.brute_force_scan(limit, args.memory_budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    records = []
    for t in violations:
        rec = abc_check.check_explicit(t).to_dict()
        rec["kind"] = "abc-scan"
        records.append(rec)
    totals = {
        "chunks": 0,
        "candidates": len(records),
        "records": len(records),
        "errors": 0,
    }
    exit_code = EXIT_OK if not records else EXIT_FINDINGS
    sys.stderr.write(f"abc scan: {len(records)} violations up to {limit}\n")
    return _emit(
        "abc scan",
        params,
        _digest_params(params),
        records,
        totals,
        exit_code,
        started,
        output=args.output,
    )


def _cmd_abc_filter(args: argparse.Namespace) -> int:
    started = _now()
    file_cfg = _load_config_file(args.config)
    merged = _merge_options(file_cfg, args, ("limit", "eps", "q_bound"))
    limit = int(merged.get("limit", 1000))
    eps = str(merged.get("eps", "1/10"))
    q_bound = str(merged.get("q_bound", "1"))
    params = {"limit": limit, "eps": eps, "q_bound": q_bound}
    try:
        pairs = abc_check.excess_pairs(limit, q_bound, eps)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    records = []
    for p in pairs:
        rec = dict(p)
        rec["kind"] = "abc-filter"
        records.append(rec)
    totals = {
        "chunks": 0,
        "candidates": len(records),
        "records": len(records),
        "errors": 0,
    }
    sys.stderr.write(f"abc filter: {len(records)} pairs up to {limit}\n")
    return _emit(
        "abc filter",
        params,
        _digest_params(params),
        records,
        totals,
        EXIT_OK,
        started,
        output=args.output,
    )


def _cmd_factor(args: argparse.Namespace) -> int:
    started = _now()
    kind = "factorization" if args.op == "factor" else "radical"
    if args.n < 1:
        raise UsageError("n must be >= 1")
    params = {"n": args.n}
    record = _arith_record(kind, args.n)
    totals = {"chunks": 0, "candidates": 1, "records": 1, "errors": 0}
    return _emit(
        args.op,
        params,
        _digest_params(params),
        [record],
        totals,
        EXIT_OK,
        started,
        output=args.output,
    )


def verify_log_lines(lines: Sequence[str]) -> Tuple[int, List[str]]:
    """Re-verify a result log; returns (records_checked, problems)."""
    problems: List[str] = []
    if not lines:
        return 0, ["empty log"]
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        return 0, [f"header is not valid JSON: {exc}"]
    if header.get("format") != RESULT_LOG_FORMAT:
        return 0, [f"not a result log (format {header.get('format')!r})"]
    if header.get("version") != FORMAT_VERSION:
        return 0, [f"unsupported log version {header.get('version')!r}"]
    sub = header.get("subcommand", "")
    config = header.get("config", {})
    search_cfg: Optional[SearchConfig] = None
    if sub.startswith("search "):
        search_cfg = SearchConfig.from_dict(config)
        if search_cfg.digest() != header.get("config_digest"):
            problems.append("config digest does not match the config")
    elif _digest_params(config) != header.get("config_digest"):
        problems.append("config digest does not match the config")
    checked = 0
    for lineno, line in enumerate(lines[1:], 2):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            problems.append(f"line {lineno}: not valid JSON: {exc}")
            continue
        checked += 1
        try:
            if search_cfg is not None:
                probs = search.verify_record(rec, search_cfg)
            elif sub in ("abc check", "abc scan", "abc filter"):
                probs = abc_check.verify_abc_record(rec, config)
            elif sub.startswith("catalog") or sub.startswith("gen"):
                probs = verify_identity_record(rec)
            elif sub == "decompose":
                probs = verify_decomposition_record(rec, config)
            elif sub in ("factor", "radical"):
                probs = verify_arith_record(rec)
            else:
                probs = [f"unknown subcommand {sub!r}"]
        except Exception as exc:  # records come from disk, treat as hostile
            probs = [f"verification raised {type(exc).__name__}: {exc}"]
        problems.extend(f"line {lineno}: {p}" for p in probs)
    return checked, problems


def _cmd_verify_log(args: argparse.Namespace) -> int:
    started = _now()
    try:
        with open(args.log, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read log: {exc}") from None
    checked, problems = verify_log_lines(lines)
    for p in problems:
        sys.stdout.write(f"{args.log}: {p}\n")
    exit_code = EXIT_OK if not problems else EXIT_FINDINGS
    sys.stderr.write(
        f"verify-log: {checked} records checked, {len(problems)} problems\n"
    )
    totals = {
        "chunks": 0,
        "candidates": checked,
        "records": checked,
        "errors": len(problems),
    }
    params = {"log": args.log}
    return _emit(
        "verify-log",
        params,
        _digest_params(params),
        [],
        totals,
        exit_code,
        started,
        input_path=args.log,
        log=False,
    )


# ---------------------------------------------------------------------------
# Parser assembly


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", metavar="PATH", help="result log path (default stdout)")
    p.add_argument("--config", metavar="PATH", help="JSON config file")


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-bits", dest="max_bits", type=int, metavar="N",
                   help="search ceiling 2^N")
    p.add_argument("--threads", type=int, metavar="N",
                   help="worker processes (default: hardware)")
    p.add_argument("--chunks", type=int, metavar="N",
                   help="chunk count for the work plan")
    p.add_argument("--checkpoint", metavar="PATH", help="checkpoint file")
    p.add_argument("--resume", action="store_true",
                   help="resume from the checkpoint file")
    p.add_argument("--sign", choices=("plus", "minus", "both"))
    p.add_argument("--f-bound", dest="f_bound", metavar="RAT",
                   help="weight bound, e.g. 1 or 41/42")
    p.add_argument("--f-strict", dest="f_strict", action="store_true",
                   default=None, help="require weight strictly under the bound")
    p.add_argument("--q-bound", dest="q_bound", metavar="RAT",
                   help="gcd quality bound g/rad(g)")
    p.add_argument("--m-bound", dest="m_bound", metavar="RAT",
                   help="spread^2/base bound")
    p.add_argument("--min-exp", dest="min_exp", type=int, metavar="N")
    p.add_argument("--max-exp", dest="max_exp", type=int, metavar="N")
    p.add_argument("--min-exp-cap", dest="min_exp_cap", type=int, metavar="N",
                   help="cap when minimizing the smallest exponent")
    p.add_argument("--degree", metavar="N|A..B", help="product degree range")
    p.add_argument("--max-spread", dest="max_spread", type=int, metavar="N")
    p.add_argument("--difference", type=int, metavar="B",
                   help="gap for near-power searches")
    p.add_argument("--n-range", dest="n_range", metavar="A..B")
    p.add_argument("--m-range", dest="m_range", metavar="A..B")
    p.add_argument("--coeffs", metavar="A,B,C",
                   help="equation coefficients for fc searches")
    _add_common(p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fcspread",
        description="Exhaustive searches and exact checks for power-sum "
        "equations over products of bounded spread.",
    )
    sub = parser.add_subparsers(dest="command")

    p_search = sub.add_parser("search", help="run an exhaustive search mode")
    p_search.add_argument("mode", choices=("fc",) + search.MODES)
    _add_search_flags(p_search)
    p_search.set_defaults(handler=_cmd_search)

    p_dec = sub.add_parser("decompose", help="bounded-spread decompositions of N")
    p_dec.add_argument("value", type=int)
    p_dec.add_argument("--degree", metavar="N|A..B")
    p_dec.add_argument("--max-spread", dest="max_spread", type=int, metavar="N")
    _add_common(p_dec)
    p_dec.set_defaults(handler=_cmd_decompose)

    p_gen = sub.add_parser("gen", help="generate a parametric family member")
    gen_sub = p_gen.add_subparsers(dest="family", required=True)
    g_std = gen_sub.add_parser("standard")
    g_std.add_argument("--v", type=int, default=1)
    g_std.add_argument("--w", type=int, default=2)
    g_std.add_argument("--n", type=int, default=3)
    _add_common(g_std)
    g_tri = gen_sub.add_parser("maxgcd-trivial")
    g_tri.add_argument("--x", type=int, default=2)
    g_tri.add_argument("--p", type=int, default=5)
    _add_common(g_tri)
    g_pyt = gen_sub.add_parser("pythagorean")
    g_pyt.add_argument("--a", type=int, default=2)
    g_pyt.add_argument("--n", type=int, default=4)
    g_pyt.add_argument("--m", type=int, default=5)
    _add_common(g_pyt)
    g_ctr = gen_sub.add_parser("counterexample")
    g_ctr.add_argument("--a", type=int, default=2)
    g_ctr.add_argument("--alpha", type=int, default=2)
    g_ctr.add_argument("--extra-degree", dest="extra_degree", type=int, default=100)
    _add_common(g_ctr)
    p_gen.set_defaults(handler=_cmd_gen)

    p_cat = sub.add_parser("catalog", help="print a known-solution catalog")
    p_cat.add_argument("which", choices=("fc", "degree3"))
    p_cat.add_argument("--max-bits", dest="max_bits", type=int, metavar="N")
    _add_common(p_cat)
    p_cat.set_defaults(handler=_cmd_catalog)

    p_abc = sub.add_parser("abc", help="radical inequality checks")
    abc_sub = p_abc.add_subparsers(dest="abc_command", required=True)
    a_chk = abc_sub.add_parser("check")
    a_chk.add_argument("--input", metavar="PATH", help="triple file ('-' for stdin)")
    a_chk.add_argument("--classic", action="append", metavar="EPS[,C]",
                       help="also check c < C rad^(1+EPS); repeatable")
    _add_common(a_chk)
    a_chk.set_defaults(handler=_cmd_abc_check)
    a_scn = abc_sub.add_parser("scan")
    a_scn.add_argument("--limit", type=int, metavar="N")
    a_scn.add_argument("--memory-budget", dest="memory_budget", type=int,
                       default=4 << 30, metavar="BYTES")
    _add_common(a_scn)
    a_scn.set_defaults(handler=_cmd_abc_scan)
    a_flt = abc_sub.add_parser("filter")
    a_flt.add_argument("--limit", type=int, metavar="N")
    a_flt.add_argument("--eps", metavar="RAT")
    a_flt.add_argument("--q-bound", dest="q_bound", metavar="RAT")
    _add_common(a_flt)
    a_flt.set_defaults(handler=_cmd_abc_filter)

    p_ver = sub.add_parser("verify-log", help="recompute every record in a log")
    p_ver.add_argument("log", metavar="PATH")
    p_ver.set_defaults(handler=_cmd_verify_log)

    for op in ("factor", "radical"):
        p_op = sub.add_parser(op, help=f"{op} of n")
        p_op.add_argument("n", type=int)
        _add_common(p_op)
        p_op.set_defaults(handler=_cmd_factor, op=op)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if exc.code is not None else 0
        return EXIT_USAGE if code not in (0, "0") else EXIT_OK
    if not getattr(args, "handler", None):
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args)
    except (UsageError, CheckpointMismatch) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except MemoryError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RUNTIME
    except KeyboardInterrupt:
        sys.stderr.write("interrupted\n")
        return EXIT_RUNTIME
    except Exception:
        traceback.print_exc()
        return EXIT_RUNTIME


def main() -> None:
    sys.exit(run())
