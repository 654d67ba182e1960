"""Command-line front end.

Every subcommand builds a report dict ``{"tool", "version", "config", "result"}``
and renders it as a table, JSON or CSV.  Exit status: 0 on success,
2 on invalid input, 3 when a verification check fails.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, asdict
from typing import Callable

from . import __version__
from .linalg import Field

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3

COMMANDS = ("algebra", "resolution", "hh", "ring", "wreath", "kernel-pi", "quotient", "blocks")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    e: int | None = None
    w: int | None = None
    n: int | None = None
    field: str = "rational"
    max_degree: int | None = None
    format: str = "table"
    cache_path: str | None = None
    verify: bool = False
    generators: str | None = None

    def validate(self) -> Field:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        try:
            F = Field.from_descriptor(self.field)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        needs_e = self.command != "quotient" or self.generators in (None, "kernel")
        if needs_e and (self.e is None or self.e < 2):
            raise UsageError("--e must be an integer >= 2")
        if self.command in ("wreath", "kernel-pi", "quotient") and (self.w is None or self.w < 1):
            raise UsageError("--w must be an integer >= 1")
        if self.command in ("kernel-pi", "quotient") and self.max_degree is None:
            raise UsageError("--max-degree is required")
        if self.command == "kernel-pi" and self.max_degree < self.e + self.w + 1:
            raise UsageError("--max-degree must be at least e + w + 1")
        if self.max_degree is not None and self.max_degree < 0:
            raise UsageError("--max-degree must be non-negative")
        if self.command == "blocks" and (self.n is None or self.n < 0):
            raise UsageError("--n must be a non-negative integer")
        if self.format not in ("table", "json", "csv"):
            raise UsageError("--format must be table, json or csv")
        return F


@dataclass
class Outcome:
    result: dict
    rows: list  # CSV rows, header first
    lines: list  # table lines
    failure: str | None = None


# -- pipelines ------------------------------------------------------------------------

def _algebra(cfg: RunConfig, F: Field) -> Outcome:
    from .algebra import (build_A_e, center, heredity_chain_search, idempotent_ideal, is_heredity_ideal,
                          radical)
    A = build_A_e(cfg.e, F)
    Z = center(A)
    J2 = radical(A, 2)
    J3 = radical(A, 3)
    h = is_heredity_ideal(A, idempotent_ideal(A, [cfg.e]))
    chain = heredity_chain_search(A)
    result = {
        "dim": A.dim, "expected_dim": 4 * cfg.e - 3,
        "center_dim": len(Z), "center_basis": [str(z) for z in Z],
        "radical_dims": [len(radical(A, 1)), len(J2), len(J3)],
        "basis": list(A.labels),
        "heredity_top_vertex": {"ok": h.ok, "reason": h.reason},
        "heredity_chain_dims": [I.dim for I in chain] if chain else None,
    }
    failure = None
    if A.dim != 4 * cfg.e - 3:
        failure = f"dim A_{cfg.e} = {A.dim}, expected {4 * cfg.e - 3}"
    elif len(Z) != cfg.e:
        failure = f"dim Z(A_{cfg.e}) = {len(Z)}, expected {cfg.e}"
    elif chain is None:
        failure = "no heredity chain found"
    rows = [["label", "source", "target", "length"]]
    rows += [[lab, p.source, p.target, A.path_length(k)] for k, (lab, p) in enumerate(zip(A.labels, A.paths))]
    lines = [f"A_{cfg.e} over {F.descriptor()}: dim {A.dim}, dim Z {len(Z)}",
             f"radical powers dims J, J^2, J^3: {result['radical_dims']}",
             f"center basis: {', '.join(result['center_basis'])}",
             f"A e_{cfg.e} A heredity ideal: {h.ok}",
             f"heredity chain dims: {result['heredity_chain_dims']}"]
    return Outcome(result, rows, lines, failure)


def _resolution(cfg: RunConfig, F: Field) -> Outcome:
    from .resolution import (cached_paper_resolution, generator_multiset, generic_minimal_resolution,
                             paper_resolution_term, ResolutionError)
    try:
        cx, rpt, hit = cached_paper_resolution(cfg.e, F, cfg.cache_path)
    except ResolutionError as exc:
        return Outcome({"error": str(exc)}, [["error"], [str(exc)]], [str(exc)], str(exc))
    terms = [[list(g) for g in t.generators] for t in cx.terms]
    result = {"length": cx.length, "generators": terms, "repair": cx.info.get("repair"),
              "verification": rpt.to_json()}
    failure = None if rpt.ok else rpt.first_failure()
    if cfg.verify:
        gen = generic_minimal_resolution(cx.algebra, cx.length + 1)
        shape = []
        for n in range(cx.length + 2):
            got = generator_multiset(gen.generators(n)) if n <= gen.length else {}
            want = generator_multiset(paper_resolution_term(cfg.e, n))
            shape.append(got == want and generator_multiset(cx.generators(n) if n <= cx.length else []) == want)
        result["matches_generic_minimal_resolution"] = all(shape)
        if not all(shape) and failure is None:
            failure = f"generator multiset mismatch in degree {shape.index(False)}"
    rows = [["degree", "generator_i", "generator_j"]]
    for n, gens in enumerate(terms):
        rows += [[n, i, j] for i, j in gens]
    rep = cx.info.get("repair", {})
    chosen = rep.get("chosen", rep)
    lines = [f"resolution of A_{cfg.e}: length {cx.length}"]
    lines += [f"R_{n}: " + " + ".join(f"P{tuple(g)}" for g in gens) for n, gens in enumerate(terms)]
    lines += [f"repair choices: {chosen}",
              f"d o d = 0: {'pass' if rpt.dd_ok else 'FAIL'}",
              f"exactness: {'pass' if rpt.exact_ok else 'FAIL'}",
              f"minimality: {'pass' if rpt.minimal_ok else 'FAIL'}"]
    if cfg.verify:
        lines.append(f"matches generic minimal resolution: {result['matches_generic_minimal_resolution']}")
    return Outcome(result, rows, lines, failure)


def _hh_complex(cfg: RunConfig, F: Field):
    from .hochschild import HochschildComplex, hochschild_complex
    if cfg.cache_path:
        from .resolution import cached_paper_resolution
        return HochschildComplex(cached_paper_resolution(cfg.e, F, cfg.cache_path)[0])
    return hochschild_complex(cfg.e, F)


def _hh(cfg: RunConfig, F: Field) -> Outcome:
    hc = _hh_complex(cfg, F)
    top = hc.top if cfg.max_degree is None else cfg.max_degree
    dims = [hc.hh_dim(n) for n in range(top + 1)]
    cochains = [hc.cochain_dim(n) for n in range(top + 1)]
    kern = [hc.hom_kernel_dim(n) for n in range(top + 1)]
    result = {"degree_convention": "cohomological degree", "dims": dims,
              "cochain_dims": cochains, "hom_kernel_dims": kern}
    expected = [cfg.e] + [1] * min(top, hc.top) + [0] * max(0, top - hc.top)
    failure = None if dims == expected else f"HH dims {dims} differ from {expected}"
    rows = [["degree", "hh_dim", "cochain_dim", "hom_kernel_dim"]]
    rows += [[n, dims[n], cochains[n], kern[n]] for n in range(top + 1)]
    lines = [f"HH^*(A_{cfg.e}) over {F.descriptor()}", "degree  HH  Hom(R_n,A)  Hom(Ker d_n,A)"]
    lines += [f"{n:>6}  {dims[n]:>2}  {cochains[n]:>10}  {kern[n]:>14}" for n in range(top + 1)]
    return Outcome(result, rows, lines, failure)


def _ring(cfg: RunConfig, F: Field) -> Outcome:
    from .hochschild import verify_ring_presentation
    rpt = verify_ring_presentation(cfg.e, F)
    result = rpt.to_json()
    failure = None
    if not rpt.passed:
        bad = rpt.failures()
        failure = bad[0]["check"] if bad else "presented dims differ from HH dims"
    rows = [["check", "kind", "degree", "passed", "witness"]]
    rows += [[c["check"], c["kind"], c["degree"], c["passed"], c["witness"] or ""] for c in rpt.checks]
    lines = [f"HH^*(A_{cfg.e}) = k[z_1..z_{cfg.e - 1}, x, y]/J over {F.descriptor()}",
             f"HH dims {rpt.hh_dims}; presented ring dims {rpt.presented_dims}"]
    lines += [f"  {k} = {v}" for k, v in rpt.generators.items()]
    lines += [f"  [{'pass' if c['passed'] else 'FAIL'}] {c['check']}" for c in rpt.checks]
    return Outcome(result, rows, lines, failure)


def _wreath(cfg: RunConfig, F: Field) -> Outcome:
    from .hochschild import hochschild_complex
    from .symwreath import wreath_hh_dims
    v = hochschild_complex(cfg.e, F).dims()
    out = {conv: wreath_hh_dims(v, cfg.w, conv).as_list() for conv in ("unsigned", "signed")}
    result = {"degree_convention": "cohomological degree", "hh_dims": v.as_list(), **out,
              "even_part": {k: v for k, v in enumerate(out["unsigned"]) if k % 2 == 0}}
    n = max(len(x) for x in out.values())
    rows = [["degree", "unsigned", "signed"]]
    rows += [[d, out["unsigned"][d] if d < len(out["unsigned"]) else 0,
              out["signed"][d] if d < len(out["signed"]) else 0] for d in range(n)]
    lines = [f"HH dims of the wreath product of A_{cfg.e} with w = {cfg.w} (graded vector space)",
             f"input HH(A_{cfg.e}): {v.as_list()}",
             f"unsigned: {out['unsigned']}", f"signed:   {out['signed']}"]
    return Outcome(result, rows, lines)


def _kernel_pi(cfg: RunConfig, F: Field) -> Outcome:
    from .symwreath import kernel_pi_report
    rng = None
    if cfg.generators is not None:
        try:
            lo, hi = (int(x) for x in cfg.generators.split("-"))
        except ValueError:
            raise UsageError("kernel-pi --generators must be a range 'a-b'") from None
        if lo < 1 or hi < lo:
            raise UsageError("kernel-pi --generators needs 1 <= a <= b")
        rng = (lo, hi)
    rpt = kernel_pi_report(cfg.e, cfg.w, cfg.max_degree, F, generator_range=rng)
    rows = [["degree", "lambda_dim", "kernel_dim", "ideal_dim", "kernel_mod_ideal_dim", "kernel_in_ideal",
             "ideal_in_kernel", "power_sum_witness", "kernel_not_in_ideal"]]
    rows += [[r["degree"], r["lambda_dim"], r["kernel_dim"], r["ideal_dim"], r["kernel_mod_ideal_dim"],
              r["kernel_in_ideal"],
              r["ideal_in_kernel"], r["power_sum_witness"] or "", "; ".join(r["kernel_not_in_ideal"])]
             for r in rpt["degrees"]]
    gens = ", ".join(rpt["generators"])
    lines = [f"Ker pi versus <{gens}> for e = {cfg.e}, w = {cfg.w} (y-degree)",
             f"power sums in Ker pi: {', '.join(f'p_{k}' for k in rpt['power_sums_in_kernel'])}",
             f"agree in every degree: {rpt['agree']}"]
    for r in rpt["degrees"]:
        note = ""
        if not r["kernel_in_ideal"]:
            wit = r["power_sum_witness"] or r["kernel_not_in_ideal"][0]
            note = f"  kernel element outside <{gens}>: {wit}"
        lines.append(f"  degree {r['degree']}: dim Lambda {r['lambda_dim']}, dim Ker {r['kernel_dim']}, "
                     f"dim ideal {r['ideal_dim']}, dim Ker/(Ker meet ideal) {r['kernel_mod_ideal_dim']}{note}")
    return Outcome(rpt, rows, lines)


def _parse_generators(choice: str | None, e: int | None, w: int) -> tuple[str, list]:
    from .symwreath import power_sum_in_e
    if choice is None:
        if e is None:
            raise UsageError("--generators or --e is required")
        choice = f"{e + 1}-{e + w + 1}"
    if choice == "kernel":
        return choice, []
    try:
        if "-" in choice:
            lo, hi = (int(x) for x in choice.split("-"))
            ks = list(range(lo, hi + 1))
        else:
            ks = [int(x) for x in choice.split(",") if x]
    except ValueError:
        raise UsageError("--generators must be 'kernel', a range 'a-b' or a list 'a,b,c'") from None
    if any(k < 1 for k in ks):
        raise UsageError("power sum indices must be positive")
    return choice, [(k, power_sum_in_e(k, w)) for k in ks]


def _quotient(cfg: RunConfig, F: Field) -> Outcome:
    from .symwreath import kernel_pi_basis, quotient_hilbert, truncated_invariant_dims
    choice, gens = _parse_generators(cfg.generators, cfg.e, cfg.w)
    if choice == "kernel":
        polys = kernel_pi_basis(cfg.e, cfg.w, cfg.max_degree, F)
        names = ["Ker pi"]
    else:
        polys = [p for _, p in gens]
        names = [f"p_{k}" for k, _ in gens]
    dims = quotient_hilbert(cfg.w, polys, cfg.max_degree, F).as_list(cfg.max_degree + 1)
    result = {"degree_convention": "y-degree", "generators": names, "dims": dims}
    if cfg.e is not None:
        result["truncated_invariant_dims"] = truncated_invariant_dims(cfg.e, cfg.w).as_list(cfg.max_degree + 1)
    rows = [["degree", "quotient_dim"] + (["truncated_invariant_dim"] if cfg.e is not None else [])]
    for d in range(cfg.max_degree + 1):
        rows.append([d, dims[d]] + ([result["truncated_invariant_dims"][d]] if cfg.e is not None else []))
    lines = [f"Lambda_{cfg.w} / <{', '.join(names)}> (y-degree): {dims}"]
    if cfg.e is not None:
        lines.append(f"truncated invariants, e = {cfg.e}: {result['truncated_invariant_dims']}")
    return Outcome(result, rows, lines)


def _blocks(cfg: RunConfig, F: Field) -> Outcome:
    from .blockcomb import blocks_of, blocks_to_json, is_rouquier_core
    blocks = blocks_of(cfg.n, cfg.e)
    data = blocks_to_json(blocks)
    for entry, lab in zip(data, blocks):
        if lab.weight:
            entry["rouquier"] = is_rouquier_core(lab.core, cfg.e, lab.weight)
    result = {"n": cfg.n, "blocks": data}
    rows = [["weight", "core", "partition"]]
    for lab, ps in blocks.items():
        rows += [[lab.weight, " ".join(map(str, lab.core.parts)), " ".join(map(str, p.parts))] for p in ps]
    lines = [f"{len(blocks)} blocks of partitions of {cfg.n} for e = {cfg.e}"]
    for entry, (lab, ps) in zip(data, blocks.items()):
        extra = " (Rouquier core)" if entry.get("rouquier") else ""
        lines.append(f"  {lab}{extra}: " + " ".join(str(p) for p in ps))
    return Outcome(result, rows, lines)


PIPELINES: dict[str, Callable[[RunConfig, Field], Outcome]] = {
    "algebra": _algebra, "resolution": _resolution, "hh": _hh, "ring": _ring,
    "wreath": _wreath, "kernel-pi": _kernel_pi, "quotient": _quotient, "blocks": _blocks,
}


# -- rendering -----------------------------------------------------------------------

def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def build_report(cfg: RunConfig, outcome: Outcome) -> dict:
    return {"tool": "qschur-hh", "version": __version__, "config": asdict(cfg),
            "status": "fail" if outcome.failure else "ok", "failure": outcome.failure,
            "result": _jsonable(outcome.result)}


def render(cfg: RunConfig, outcome: Outcome) -> str:
    if cfg.format == "json":
        return json.dumps(build_report(cfg, outcome), indent=2, sort_keys=True) + "\n"
    if cfg.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(outcome.rows)
        return buf.getvalue()
    head = f"qschur-hh {__version__} | " + " ".join(
        f"{k}={v}" for k, v in asdict(cfg).items() if v is not None and v is not False)
    tail = [f"VERIFICATION FAILED: {outcome.failure}"] if outcome.failure else []
    return "\n".join([head] + outcome.lines + tail) + "\n"


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        F = cfg.validate()
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    try:
        outcome = PIPELINES[cfg.command](cfg, F)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    out.write(render(cfg, outcome))
    if outcome.failure:
        err.write(f"verification failed: {outcome.failure}\n")
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qschur-hh", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "algebra": "construct A_e; report dimension, center, radical layers and heredity chain",
        "resolution": "build and verify the bimodule resolution of A_e",
        "hh": "Hochschild cohomology dimensions of A_e",
        "ring": "verify the ring presentation of HH^*(A_e)",
        "wreath": "graded dims for the wreath product of A_e with S_w",
        "kernel-pi": "compare Ker pi with the ideal of power sums",
        "quotient": "Hilbert function of Lambda_w modulo power sums or Ker pi",
        "blocks": "group partitions of n into blocks by e-core and e-weight",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, help=helps[name])
        p.add_argument("--e", type=int)
        p.add_argument("--field", default="rational", help="rational or prime(l)")
        p.add_argument("--format", default="table", choices=("table", "json", "csv"))
        if name in ("wreath", "kernel-pi", "quotient"):
            p.add_argument("--w", type=int)
        if name in ("hh", "kernel-pi", "quotient"):
            p.add_argument("--max-degree", type=int)
        if name in ("resolution", "hh"):
            p.add_argument("--cache", dest="cache_path", help="resolution cache file (JSON)")
        if name == "resolution":
            p.add_argument("--verify", action="store_true", help="also compare with a generic minimal resolution")
        if name == "quotient":
            p.add_argument("--generators", help="'kernel', a range 'a-b' or a list 'a,b' of power sums")
        if name == "kernel-pi":
            p.add_argument("--generators", help="power-sum index range 'a-b' (default e+1 to e+w+1)")
        if name == "blocks":
            p.add_argument("--n", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items()})
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
