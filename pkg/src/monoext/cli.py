"""Command-line interface: validate datasets, evaluate and classify queries.

Usage:
    monoext validate --mode vector --data samples.json
    monoext eval --mode vector --data samples.json --queries queries.json
    monoext classify --mode poset --data order.json --queries queries.json --out report.json

Dataset schema, vector mode::

    {"k": 2, "samples": [{"x": [0.0, 0.0], "value": 0.0}, ...]}

Dataset schema, poset mode (an edge [lo, hi] asserts hi > lo)::

    {"elements": ["a", "b", "c"],
     "edges": [["a", "b"], ["b", "c"]],
     "samples": [{"e": "a", "value": 0.0}, ...]}

Queries are ``{"queries": [...]}`` with points (vector mode) or element ids
(poset mode).  Results come back as ``{"results": [...]}`` in query order;
infinite bounds are encoded as the strings "-inf" and "+inf".

Exit codes: 0 on success, 1 on usage, I/O or schema errors, 2 when the
dataset fails validation (no strictly monotone extension exists; the
offending sample pair is reported as a witness).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .baseutil import ArctanSumUtility, PosetDepthUtility
from .bounds import SECTORS, bounds_batch, sector_matrix
from .dataset import NotExtendibleError, SeparabilityWitness, UtilityDataset, load_dataset
from .extension import FORMS, Extension
from .poset import FinitePoset

__all__ = ["RunManifest", "main"]


class _SchemaError(ValueError):
    """Malformed input document (exit code 1)."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors by default; the CLI
    # contract reserves 2 for dataset-validation failures, so remap to 1.
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunManifest:
    """One parsed CLI invocation."""

    command: str
    mode: str
    data: str
    queries: str | None
    alpha: float
    beta: float
    base: str | None
    form: str
    out: str | None


def _build_parser() -> _Parser:
    parser = _Parser(prog="monoext", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", required=True, choices=("vector", "poset"))
    common.add_argument("--data", required=True, help="dataset JSON file")
    common.add_argument("--queries", help="queries JSON file")
    common.add_argument("--alpha", type=float, default=0.0)
    common.add_argument("--beta", type=float, default=1.0)
    common.add_argument(
        "--base",
        choices=("arctan", "poset-depth"),
        help="base utility (default: arctan for vector mode, poset-depth for poset mode)",
    )
    common.add_argument("--form", choices=FORMS, default="canonical")
    common.add_argument("--out", help="output file (default: stdout)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("validate", parents=[common], help="check the dataset")
    sub.add_parser("eval", parents=[common], help="evaluate the extension at query points")
    sub.add_parser("classify", parents=[common], help="report bounds and regions at query points")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    manifest = RunManifest(
        command=args.command,
        mode=args.mode,
        data=args.data,
        queries=args.queries,
        alpha=args.alpha,
        beta=args.beta,
        base=args.base,
        form=args.form,
        out=args.out,
    )
    try:
        return _run(manifest)
    except NotExtendibleError as exc:
        _emit({"error": str(exc), "witness": _witness_doc(exc.witness)}, manifest.out)
        print(f"monoext {manifest.command}: {exc}", file=sys.stderr)
        return 2
    except (_SchemaError, OSError, KeyError, ValueError) as exc:
        detail = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"monoext {manifest.command}: {detail}", file=sys.stderr)
        return 1


def _run(manifest: RunManifest) -> int:
    dataset = _load_dataset_file(manifest)
    if manifest.command == "validate":
        return _cmd_validate(manifest, dataset)
    if manifest.queries is None:
        raise _SchemaError(f"--queries is required for '{manifest.command}'")
    if manifest.command == "eval":
        return _cmd_eval(manifest, dataset)
    return _cmd_classify(manifest, dataset)


# -- commands ------------------------------------------------------------------


def _cmd_validate(manifest: RunManifest, dataset: UtilityDataset) -> int:
    strict_ok, _ = dataset.is_strictly_increasing()
    sep_ok, witness = dataset.is_separably_increasing()
    report = {
        "strictly_increasing": strict_ok,
        "separably_increasing": sep_ok,
        "pareto_set": dataset.is_pareto_set(),
        "sample_count": dataset.sample_count,
    }
    if witness is not None:
        report["witness"] = _witness_doc(witness)
    _emit(report, manifest.out)
    return 0 if sep_ok else 2


def _cmd_eval(manifest: RunManifest, dataset: UtilityDataset) -> int:
    extension = Extension(dataset, _resolve_base(manifest, dataset), manifest.form)
    queries, echoes = _load_queries_file(manifest, dataset)
    results = []
    for echo, res in zip(echoes, extension.evaluate_batch(queries)):
        results.append(
            {
                "query": echo,
                "f": _num(res.value),
                "a": _num(res.lower),
                "b": _num(res.upper),
                "alun": res.region.zone,
                "s": list(res.region.sectors),
                "u": _num(res.base_value),
            }
        )
    _emit({"results": results}, manifest.out)
    return 0


def _cmd_classify(manifest: RunManifest, dataset: UtilityDataset) -> int:
    ok, witness = dataset.is_separably_increasing()
    if not ok:
        raise NotExtendibleError("dataset failed validation", witness)
    if not manifest.alpha < manifest.beta:
        raise _SchemaError(f"alpha must be strictly below beta, got {manifest.alpha} >= {manifest.beta}")
    queries, echoes = _load_queries_file(manifest, dataset)
    normalized = dataset.normalize_queries(queries)
    lower, upper, _, zone = bounds_batch(dataset, normalized)
    sectors = sector_matrix(lower, upper, manifest.alpha, manifest.beta)
    results = []
    for i, echo in enumerate(echoes):
        results.append(
            {
                "query": echo,
                "a": _num(float(lower[i])),
                "b": _num(float(upper[i])),
                "alun": str(zone[i]),
                "s": [name for name, hit in zip(SECTORS, sectors[i]) if hit],
            }
        )
    _emit({"results": results}, manifest.out)
    return 0


# -- input handling --------------------------------------------------------------


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise _SchemaError(f"{path}: not valid JSON ({exc})") from exc


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise _SchemaError(message)


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def _load_dataset_file(manifest: RunManifest) -> UtilityDataset:
    doc = _read_json(manifest.data)
    _require(isinstance(doc, dict), f"{manifest.data}: dataset document must be a JSON object")
    samples = doc.get("samples")
    _require(isinstance(samples, list), f"{manifest.data}: 'samples' must be a list")

    if manifest.mode == "vector":
        _require("k" in doc, f"{manifest.data}: vector dataset needs an integer 'k'")
        k = doc["k"]
        _require(isinstance(k, int) and not isinstance(k, bool) and k >= 1,
                 f"{manifest.data}: 'k' must be an integer >= 1")
        records = []
        for i, s in enumerate(samples):
            _require(isinstance(s, dict) and "x" in s and "value" in s,
                     f"{manifest.data}: samples[{i}] must have 'x' and 'value'")
            x = s["x"]
            _require(isinstance(x, list) and len(x) == k and all(_is_number(c) for c in x),
                     f"{manifest.data}: samples[{i}].x must be a list of {k} numbers")
            _require(_is_number(s["value"]), f"{manifest.data}: samples[{i}].value must be a number")
            records.append((x, s["value"]))
        return load_dataset(records, k)

    _require(isinstance(doc.get("elements"), list) and doc["elements"],
             f"{manifest.data}: poset dataset needs a non-empty 'elements' list")
    _require(all(isinstance(e, str) for e in doc["elements"]),
             f"{manifest.data}: 'elements' must be strings")
    edges = doc.get("edges", [])
    _require(isinstance(edges, list), f"{manifest.data}: 'edges' must be a list")
    for i, e in enumerate(edges):
        _require(isinstance(e, list) and len(e) == 2 and all(isinstance(v, str) for v in e),
                 f"{manifest.data}: edges[{i}] must be a [lo, hi] pair of element ids")
    poset = FinitePoset(doc["elements"], [tuple(e) for e in edges])
    records = []
    for i, s in enumerate(samples):
        _require(isinstance(s, dict) and "e" in s and "value" in s,
                 f"{manifest.data}: samples[{i}] must have 'e' and 'value'")
        _require(isinstance(s["e"], str), f"{manifest.data}: samples[{i}].e must be an element id")
        _require(_is_number(s["value"]), f"{manifest.data}: samples[{i}].value must be a number")
        records.append((s["e"], s["value"]))
    return load_dataset(records, poset)


def _load_queries_file(manifest: RunManifest, dataset: UtilityDataset):
    doc = _read_json(manifest.queries)
    _require(isinstance(doc, dict) and isinstance(doc.get("queries"), list),
             f"{manifest.queries}: queries document must be {{'queries': [...]}}")
    entries = doc["queries"]
    if dataset.is_vector:
        k = dataset.dimension
        for i, q in enumerate(entries):
            _require(isinstance(q, list) and len(q) == k and all(_is_number(c) for c in q),
                     f"{manifest.queries}: queries[{i}] must be a list of {k} numbers")
        echoes = [[float(c) for c in q] for q in entries]
        queries = np.array(echoes, dtype=np.float64).reshape(len(entries), k)
        _require(bool(np.isfinite(queries).all()) if queries.size else True,
                 f"{manifest.queries}: query coordinates must be finite")
        return queries, echoes
    for i, q in enumerate(entries):
        _require(isinstance(q, str), f"{manifest.queries}: queries[{i}] must be an element id")
        _require(q in dataset.poset, f"{manifest.queries}: unknown element {q!r}")
    return list(entries), list(entries)


def _resolve_base(manifest: RunManifest, dataset: UtilityDataset):
    if dataset.is_vector:
        if manifest.base not in (None, "arctan"):
            raise _SchemaError("--base poset-depth requires --mode poset")
        return ArctanSumUtility(manifest.alpha, manifest.beta)
    if manifest.base not in (None, "poset-depth"):
        raise _SchemaError("--base arctan requires --mode vector")
    return PosetDepthUtility(dataset.poset, manifest.alpha, manifest.beta)


# -- output ---------------------------------------------------------------------


def _num(v: float):
    if v == float("inf"):
        return "+inf"
    if v == float("-inf"):
        return "-inf"
    return float(v)


def _witness_doc(w: SeparabilityWitness) -> dict:
    def key(x):
        return list(x) if isinstance(x, tuple) else x

    return {
        "lower": key(w.lower),
        "upper": key(w.upper),
        "sup_below_lower": _num(w.sup_below_lower),
        "inf_above_upper": _num(w.inf_above_upper),
    }


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


if __name__ == "__main__":
    sys.exit(main())
