"""Group-spec strings, JSON reports and manifest-driven suites."""

from __future__ import annotations

import json
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from math import comb
from pathlib import Path
from typing import Any

from . import constructions as C
from .analysis import (
    build_saxl,
    check_cnc,
    check_edge_disjoint_cnc,
    common_valency,
    flag_tour_verdict,
    gossip_profile,
    is_kn_complete,
    rays_semiregular_check,
    structural_report,
    valency_check,
)
from .bases import DEFAULT_CONFIG, BaseSearchConfig, base_size
from .constructions import GroupSpec
from .errors import BudgetExceeded, ManifestError, ParseError, SaxlError
from .field import is_prime, prime_power
from .group import PermGroup
from .perm import read_generators

SCHEMA_VERSION = 1

ALL_CHECKS = ("complete", "valency", "cnc", "edcnc", "gossip", "flagtour", "rays", "structure")

_ALIASES = {
    "S": "SymNat",
    "SYM": "SymNat",
    "A": "AltNat",
    "ALT": "AltNat",
    "PSL2": "PSL2",
    "PGL2": "PGL2",
    "PGAMMAL2": "PGammaL2",
    "AGL1": "AGL1Sub",
    "AFFDEL": "AffDeletedModule",
    "AFFDELEVEN": "AffDeletedModule",
    "WR": "WreathProduct",
    "COSET": "CosetAction",
    "CAT": "CatalogName",
    "TRIV": "Trivial",
    "PAIRS": "Subsets",
    "GENS": "GeneratorFile",
}


# -- parsing -----------------------------------------------------------------


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, int]] = []
        pos = 0
        for part in text.split(":"):
            self.items.append((part, pos))
            pos += len(part) + 1
        self.i = 0

    def next(self, what: str) -> tuple[str, int]:
        if self.i >= len(self.items):
            raise ParseError(f"expected {what} at end of spec", len(self.text))
        tok = self.items[self.i]
        self.i += 1
        if not tok[0]:
            raise ParseError(f"expected {what}, found empty field", tok[1])
        return tok

    def int(self, what: str, lo: int = 1) -> tuple[int, int]:
        tok, pos = self.next(what)
        if not re.fullmatch(r"\d+", tok):
            raise ParseError(f"expected integer {what}, found {tok!r}", pos)
        v = int(tok)
        if v < lo:
            raise ParseError(f"{what} must be at least {lo}, found {v}", pos)
        return v, pos


def _prime_power_tok(toks: _Tokens, lo: int = 2) -> tuple[int, int]:
    q, pos = toks.int("q", lo)
    if prime_power(q) is None:
        raise ParseError(f"{q} is not a prime power", pos)
    return q, pos


def _parse(toks: _Tokens) -> GroupSpec:
    start = toks.items[toks.i][1] if toks.i < len(toks.items) else len(toks.text)
    head, hpos = toks.next("group kind")
    kind = _ALIASES.get(head.upper())
    notes: tuple = ()
    if kind is None:
        if head in C.CATALOG:
            return GroupSpec("CatalogName", (head,), head)
        raise ParseError(f"unknown group kind {head!r}", hpos)
    if kind in ("SymNat", "AltNat", "Trivial"):
        n, pos = toks.int("degree")
        if kind == "AltNat" and n < 3:
            raise ParseError("Alt needs degree at least 3", pos)
        params = (n,)
    elif kind in ("PSL2", "PGL2", "PGammaL2"):
        q, pos = _prime_power_tok(toks)
        if q < 3:
            raise ParseError("projective groups need q >= 3", pos)
        if kind == "PSL2" and q % 2 == 0:
            kind, notes = "PGL2", ("PSL(2,q) = PGL(2,q) for even q",)
        params = (q,)
    elif kind == "AGL1Sub":
        q, _ = _prime_power_tok(toks)
        d, pos = toks.int("d")
        if (q - 1) % d:
            raise ParseError(f"{d} does not divide {q - 1}", pos)
        params = (q, d)
    elif kind == "AffDeletedModule":
        q, qpos = _prime_power_tok(toks, 3 if head.upper() == "AFFDEL" else 2)
        k, _ = toks.int("k")
        even_ok = head.upper() == "AFFDELEVEN"
        if q % 2 == 0 and not even_ok:
            raise ParseError("AFFDEL needs odd q (use AFFDELEVEN for even q)", qpos)
        params = (q, k, even_ok)
    elif kind == "WreathProduct":
        inner = _parse(toks)
        k, _ = toks.int("arity")
        top = _parse(toks)
        params = (inner, k, top)
    elif kind == "CosetAction":
        g, _ = toks.next("generator file")
        h, _ = toks.next("subgroup file")
        params = (g, h)
    elif kind == "CatalogName":
        name, pos = toks.next("catalog name")
        if name not in C.CATALOG:
            raise ParseError(f"unknown catalog name {name!r}", pos)
        params = (name,)
    elif kind == "Subsets":
        params = (_parse(toks), 2)
    elif kind == "GeneratorFile":
        params = (toks.next("file")[0],)
    else:  # pragma: no cover
        raise ParseError(f"unhandled kind {kind}", hpos)
    end = toks.items[toks.i - 1][1] + len(toks.items[toks.i - 1][0])
    return GroupSpec(kind, params, toks.text[start:end], notes)


def parse_spec(text: str) -> GroupSpec:
    text = text.strip()
    if not text:
        raise ParseError("empty group spec", 0)
    toks = _Tokens(text)
    spec = _parse(toks)
    if toks.i != len(toks.items):
        raise ParseError("trailing input after group spec", toks.items[toks.i][1])
    return spec


def build_group(spec: GroupSpec | str) -> PermGroup:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    k, p = spec.kind, spec.params
    if k == "SymNat":
        return C.natural_group("Sym", p[0])
    if k == "AltNat":
        return C.natural_group("Alt", p[0])
    if k == "Trivial":
        return C.trivial_group(p[0])
    if k in ("PSL2", "PGL2", "PGammaL2"):
        return C.projective_group(k, p[0])
    if k == "AGL1Sub":
        return C.agl1_subgroup(*p)
    if k == "AffDeletedModule":
        return C.affine_deleted_module(p[0], p[1], allow_even=p[2])
    if k == "WreathProduct":
        return C.wreath_product_action(build_group(p[0]), p[1], build_group(p[2]))
    if k == "CosetAction":
        n, gens = read_generators(p[0])
        m, hgens = read_generators(p[1])
        if m != n:
            raise ParseError(f"subgroup file has degree {m}, group file {n}", 0)
        from .group import group_from_generators

        return C.coset_action(group_from_generators(gens, n), hgens)
    if k == "CatalogName":
        return C.catalog_lookup(p[0])
    if k == "Subsets":
        return C.subset_action(build_group(p[0]), p[1])
    if k == "GeneratorFile":
        from .group import group_from_generators

        n, gens = read_generators(p[0])
        return group_from_generators(gens, n)
    raise ParseError(f"unknown kind {k}", 0)


# -- reports -----------------------------------------------------------------


def parse_checks(text: str | None) -> tuple[set[str], int]:
    """``"cnc,gossip=3"`` -> ({"cnc", "gossip"}, 3)."""
    if not text or text == "all":
        return set(ALL_CHECKS), 3
    checks, gossip_n = set(), 3
    for item in text.split(","):
        item = item.strip()
        if item.startswith("gossip="):
            gossip_n = int(item.split("=", 1)[1])
            item = "gossip"
        if item not in ALL_CHECKS:
            raise ValueError(f"unknown check {item!r}; choose from {', '.join(ALL_CHECKS)}")
        checks.add(item)
    return checks, gossip_n


_UNKNOWN = {"status": "unknown"}


def _blank_report(text: str) -> dict[str, Any]:
    # fixed key order: every field is always present
    return {
        "schema_version": SCHEMA_VERSION,
        "group_spec": text,
        "degree": None,
        "order": None,
        "transitive": None,
        "primitive": None,
        "base_size": None,
        "uniformity": None,
        "edge_count": None,
        "valency": None,
        "complete": None,
        "kn_certificate": None,
        "valency_check": None,
        "cnc": None,
        "edge_disjoint_cnc": None,
        "gossip": None,
        "flag_tour": None,
        "prime_valency": None,
        "rays_semiregular": None,
        "structure": None,
        "notes": [],
        "budget_exhausted": False,
        "timings": None,
    }


def run_report(
    spec: GroupSpec | str,
    checks: set[str] | None = None,
    cfg: BaseSearchConfig = DEFAULT_CONFIG,
    gossip_n: int = 3,
    timings: bool = False,
    group: PermGroup | None = None,
) -> dict[str, Any]:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    checks = set(ALL_CHECKS) if checks is None else set(checks)
    rep = _blank_report(str(spec))
    rep["notes"] = list(spec.notes)
    clock: dict[str, float] = {}

    def timed(name, fn):
        t0 = time.perf_counter()
        try:
            return fn()
        finally:
            clock[name] = round(time.perf_counter() - t0, 4)

    G = group if group is not None else timed("build", lambda: build_group(spec))
    rep["degree"], rep["order"] = G.degree, G.order
    rep["transitive"] = G.is_transitive()
    rep["primitive"] = G.is_primitive()
    if spec.kind in ("PSL2", "PGL2") and spec.params[0] == 11:
        rep["notes"].append("degree-12 projective line action of PSL/PGL(2,11); no second degree-12 action is built")

    try:
        b = timed("base_size", lambda: base_size(G, cfg))
    except BudgetExceeded as exc:
        return _exhausted(rep, str(exc), clock, timings)
    rep["base_size"] = b
    if b < 2:
        rep["notes"].append(f"base size {b} < 2: the Saxl hypergraph has no edges")
        rep["complete"] = False
        if timings:
            rep["timings"] = clock
        return rep
    try:
        S = timed("edges", lambda: build_saxl(G, cfg, spec))
    except BudgetExceeded as exc:
        return _exhausted(rep, str(exc), clock, timings)
    H = S.hypergraph
    rep["uniformity"] = H.uniformity()
    rep["edge_count"] = len(H.edges)
    rep["valency"] = common_valency(S)
    rep["complete"] = len(H.edges) == comb(G.degree, b)

    def guarded(key, name, fn):
        try:
            rep[key] = timed(name, fn)
        except BudgetExceeded as exc:
            rep[key] = dict(_UNKNOWN, note=str(exc))
            rep["budget_exhausted"] = True
        except SaxlError as exc:
            rep[key] = {"status": "error", "error": type(exc).__name__, "message": str(exc)}

    if "complete" in checks:
        def kn():
            cert = is_kn_complete(G, b, cfg)
            return {"n": cert.n, "recursive": cert.recursive, "direct": cert.direct, "trail": [list(t) for t in cert.trail]}

        guarded("kn_certificate", "complete", kn)
    if "valency" in checks and S.transitive:
        guarded("valency_check", "valency", lambda: vars(valency_check(S, cfg)).copy())
    if "cnc" in checks:
        guarded("cnc", "cnc", lambda: check_cnc(S).as_dict())
    if "edcnc" in checks:
        guarded("edge_disjoint_cnc", "edcnc", lambda: check_edge_disjoint_cnc(S).as_dict())
    if "gossip" in checks:
        guarded("gossip", "gossip", lambda: gossip_profile(S, gossip_n))
    if "flagtour" in checks:
        def ft():
            v = flag_tour_verdict(S)
            return {
                "has_tour": v.has_tour,
                "case": v.case,
                "in_scope": v.in_scope,
                "odd_vertex": v.parity.odd_vertex,
                "reason": v.parity.reason,
            }

        guarded("flag_tour", "flagtour", ft)
    d = rep["valency"]
    rep["prime_valency"] = bool(S.transitive and b in (3, 4) and d is not None and is_prime(d))
    if "rays" in checks:
        guarded("rays_semiregular", "rays", lambda: rays_semiregular_check(S))
    if "structure" in checks:
        guarded("structure", "structure", lambda: structural_report(S))
    if timings:
        rep["timings"] = clock
    return rep


def _exhausted(rep, message, clock, timings):
    rep["budget_exhausted"] = True
    rep["notes"].append(f"budget exhausted: {message}")
    for key in ("complete", "cnc", "edge_disjoint_cnc", "flag_tour", "kn_certificate"):
        rep[key] = dict(_UNKNOWN)
    if timings:
        rep["timings"] = clock
    return rep


def dumps_report(rep: dict) -> str:
    return json.dumps(rep, indent=2) + "\n"


# -- suites ------------------------------------------------------------------


@dataclass
class SuiteRow:
    spec: str
    passed: bool
    failures: list[str] = field(default_factory=list)
    exhausted: bool = False
    error: str | None = None
    report: dict | None = None


def _matches(expected, actual) -> bool:
    if isinstance(expected, dict):
        return isinstance(actual, dict) and all(k in actual and _matches(v, actual[k]) for k, v in expected.items())
    if isinstance(actual, dict) and not isinstance(expected, dict):
        for key in ("status", "has_tour", "value"):
            if key in actual:
                return actual[key] == expected
        return False
    if isinstance(expected, list) and isinstance(actual, list):
        return len(expected) == len(actual) and all(_matches(e, a) for e, a in zip(expected, actual))
    return expected == actual


def load_manifest(path) -> tuple[list[dict], dict]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ManifestError(f"cannot read manifest {path}: {exc}") from None
    options = {}
    if isinstance(data, dict):
        options = {k: v for k, v in data.items() if k != "groups"}
        data = data.get("groups")
    if not isinstance(data, list):
        raise ManifestError("manifest must be a list of {spec, expect} objects or {groups: [...]}")
    for i, item in enumerate(data):
        if not isinstance(item, dict) or "spec" not in item or not isinstance(item.get("expect", {}), dict):
            raise ManifestError(f"manifest entry {i} needs a 'spec' string and an 'expect' object")
    return data, options


def _run_entry(args) -> SuiteRow:
    item, cfg, default_checks = args
    text = item["spec"]
    try:
        spec = parse_spec(text)
        checks, gossip_n = parse_checks(item.get("checks", default_checks))
        rep = run_report(spec, checks, cfg, gossip_n)
    except (ParseError, ValueError, OSError) as exc:
        return SuiteRow(text, False, error=f"{type(exc).__name__}: {exc}")
    failures = [
        f"{k}: expected {v!r}, got {rep.get(k)!r}"
        for k, v in item.get("expect", {}).items()
        if not _matches(v, rep.get(k))
    ]
    return SuiteRow(text, not failures, failures, rep["budget_exhausted"], report=rep)


def run_suite(manifest, cfg: BaseSearchConfig | None = None, workers: int = 1) -> tuple[int, list[SuiteRow]]:
    """Run every manifest entry; returns (exit code, rows).

    Exit codes: 0 all pass, 1 expectation failure, 2 budget exhaustion, 3 input error.
    """
    entries, options = load_manifest(manifest)
    if cfg is None:
        cfg = DEFAULT_CONFIG
        if "max_edges" in options or "time_budget" in options:
            cfg = replace(cfg, max_edges=options.get("max_edges", cfg.max_edges), time_budget=options.get("time_budget"))
    default_checks = options.get("checks")
    jobs = [(item, cfg, default_checks) for item in entries]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_run_entry, jobs))
    else:
        rows = [_run_entry(j) for j in jobs]
    if any(r.error for r in rows):
        code = 3
    elif any(r.failures for r in rows):
        code = 1
    elif any(r.exhausted for r in rows):
        code = 2
    else:
        code = 0
    return code, rows


def format_suite(rows: list[SuiteRow]) -> str:
    width = max([len(r.spec) for r in rows] + [4])
    lines = [f"{'spec'.ljust(width)}  result"]
    for r in rows:
        if r.error:
            status = f"ERROR {r.error}"
        elif r.failures:
            status = "FAIL " + "; ".join(r.failures)
        elif r.exhausted:
            status = "BUDGET"
        else:
            status = "pass"
        lines.append(f"{r.spec.ljust(width)}  {status}")
    return "\n".join(lines)
