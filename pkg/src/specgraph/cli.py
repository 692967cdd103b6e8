"""Batch command-line front end: generation, spectra, character tables,
bound audits, corpus verification, and isomorphism comparison, all emitting
schema-validated JSON with the seed and configuration echoed for
reproducibility.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import jsonschema

from . import __version__
from . import bounds as bd
from . import characters as ch
from . import corpus as corpus_mod
from . import finite_field as ff
from . import graph_core as gc
from . import graph_families as gfam
from . import spectra as sp
from .errors import CapExceeded, Mismatch, NoClosedForm, SpecgraphError

DEFAULT_CAPS = {"chi": gc.CHI_CAP, "beta": gc.BETA_CAP, "iso": gc.ISO_CAP}
DEFAULT_SEED = 20150901

_RECORD_SCHEMA = {
    "type": "object",
    "required": ["name", "status"],
    "properties": {
        "name": {"type": "string"},
        "status": {"enum": ["pass", "fail", "skipped"]},
    },
}

SCHEMAS = {
    "graph": {
        "type": "object",
        "required": ["version", "config", "n", "edges"],
        "properties": {
            "n": {"type": "integer", "minimum": 1},
            "edges": {"type": "array", "items": {"type": "array",
                                                 "items": {"type": "integer"}}},
        },
    },
    "spectrum": {
        "type": "object",
        "required": ["version", "config", "spectrum"],
        "properties": {
            "spectrum": {
                "type": "object",
                "required": ["kind", "entries"],
                "properties": {"entries": {"type": "array"}},
            },
        },
    },
    "chars": {
        "type": "object",
        "required": ["version", "config", "rows"],
        "properties": {
            "rows": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["field", "sum_type", "indices", "re", "im",
                                 "magnitude", "bound", "pass"],
                },
            },
        },
    },
    "audit": {
        "type": "object",
        "required": ["version", "config", "audit"],
        "properties": {"audit": {"type": "object",
                                 "properties": {"records": {"type": "array",
                                                            "items": _RECORD_SCHEMA}}}},
    },
    "verify": {
        "type": "object",
        "required": ["version", "config", "graphs", "summary"],
    },
    "iso": {
        "type": "object",
        "required": ["version", "config", "verdict"],
    },
}


def _emit(kind: str, payload: dict, config: dict, path: str | None) -> None:
    doc = {"version": __version__, "config": config}
    doc.update(payload)
    jsonschema.validate(doc, SCHEMAS[kind])
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_caps(text: str | None) -> dict:
    caps = dict(DEFAULT_CAPS)
    if not text:
        return caps
    for part in text.split(","):
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in caps:
            raise SystemExit(f"unknown cap {key!r}; expected chi, beta, iso")
        # caps may only be lowered below the defaults, never raised
        caps[key] = min(caps[key], int(value))
    return caps


def load_graph_source(source: str, *params) -> gc.Graph:
    """A graph source is an edge-list file path, or a family name followed by
    parameters (either separate arguments or colon/comma packed)."""
    if os.path.exists(source) and not params:
        with open(source) as fh:
            return gc.parse_edge_list(fh.read(), name=os.path.basename(source))
    family = source
    args: list = list(params)
    if ":" in source:
        family, _, packed = source.partition(":")
        args = [p for p in packed.split(",") if p] + args
    return gfam.build(family, *args)


def _graph_payload(g: gc.Graph) -> dict:
    return gc.to_json_dict(g)


def cmd_gen(args) -> int:
    g = load_graph_source(args.family, *args.params)
    if args.json:
        args.out = "json"
    config = {"command": "gen", "family": args.family, "params": list(args.params),
              "out": args.out, "seed": args.seed}
    if args.out == "edgelist":
        text = gc.to_edge_list(g)
        if args.path:
            open(args.path, "w").write(text)
        else:
            sys.stdout.write(text)
    elif args.out == "dot":
        text = gc.to_dot(g)
        if args.path:
            open(args.path, "w").write(text)
        else:
            sys.stdout.write(text)
    else:
        _emit("graph", _graph_payload(g), config, args.path)
    return 0


def cmd_spec(args) -> int:
    g = load_graph_source(args.source, *args.params)
    config = {"command": "spec", "source": args.source, "params": list(args.params),
              "kind": args.kind, "seed": args.seed}
    matrix = sp.adjacency_matrix(g) if args.kind == "adjacency" else sp.laplacian_matrix(g)
    spectrum = sp.eig_symmetric(matrix, args.kind)
    payload: dict = {"graph": {"n": g.n, "edges": g.edge_count, "name": g.name},
                     "spectrum": spectrum.to_json()}
    if args.closed_form:
        family = args.source.partition(":")[0]
        try:
            cf = sp.closed_form_spectrum(family, *_coerced(args))
            if args.kind == "laplacian":
                if not g.is_regular:
                    raise NoClosedForm("laplacian closed form needs a regular family")
                cf = cf.laplacian_for_regular(g.max_degree)
            result = sp.verify_closed_form(g, cf)
            payload["closed_form"] = {"entries": cf.to_json()["entries"],
                                      "match": result}
        except NoClosedForm as exc:
            payload["closed_form"] = {"error": str(exc)}
        except Mismatch as exc:
            payload["closed_form"] = {"mismatch": str(exc)}
    _emit("spectrum", payload, config, args.path)
    return 0


def _coerced(args) -> list:
    out = []
    packed = args.source.partition(":")[2]
    for p in ([x for x in packed.split(",") if x] + list(args.params)):
        out.append(int(p) if isinstance(p, str) and p.lstrip("-").isdigit() else p)
    return out


def _char_rows(q: int, ext: int | None) -> list[dict]:
    spec = ff.construct_field(*ff.prime_power_decomposition(q))
    rows = []
    sq = math.sqrt(q)

    def row(sum_type, indices, value, bound, ok):
        rows.append({
            "field": f"GF({q})", "sum_type": sum_type, "indices": list(indices),
            "re": value.real, "im": value.imag, "magnitude": abs(value),
            "bound": bound, "pass": bool(ok),
        })

    for t in range(q):
        psi = ch.AdditiveCharacter(spec, spec.element(t))
        for k in range(q - 1):
            chi = ch.MultiplicativeCharacter(spec, k)
            val = ch.gauss_sum(psi, chi)
            if t == 0 and k == 0:
                expected, ok = float(q - 1), abs(val - (q - 1)) <= 1e-9
            elif t == 0:
                expected, ok = 0.0, abs(val) <= 1e-9
            elif k == 0:
                expected, ok = 1.0, abs(val + 1) <= 1e-9
            else:
                expected, ok = sq, abs(abs(val) - sq) <= 1e-9
            row("gauss", (t, k), val, expected, ok)
    for k1 in range(q - 1):
        for k2 in range(q - 1):
            val = ch.jacobi_sum(ch.MultiplicativeCharacter(spec, k1),
                                ch.MultiplicativeCharacter(spec, k2))
            if k1 == 0 and k2 == 0:
                expected, ok = float(q), abs(val - q) <= 1e-9
            elif k1 == 0 or k2 == 0:
                expected, ok = 0.0, abs(val) <= 1e-9
            elif (k1 + k2) % (q - 1) == 0:
                expected, ok = 1.0, abs(abs(val) - 1) <= 1e-9
            else:
                expected, ok = sq, abs(abs(val) - sq) <= 1e-9
            row("jacobi", (k1, k2), val, expected, ok)
    for t1 in range(1, q):
        for t2 in range(1, q):
            val = ch.kloosterman_sum(ch.AdditiveCharacter(spec, spec.element(t1)),
                                     ch.AdditiveCharacter(spec, spec.element(t2)))
            row("kloosterman", (t1, t2), val, 2 * sq, abs(val) <= 2 * sq + 1e-9)
    if ext:
        big = ff.construct_field(spec.p, spec.d * ext)
        emb = ff.subfield_embedding(big, spec)
        for k in range(big.q - 1):
            chi = ch.MultiplicativeCharacter(big, k)
            val = ch.eisenstein_sum(emb, chi)
            if k == 0:
                expected = float(q ** (ext - 1))
                ok = abs(val - expected) <= 1e-9
            elif k % (q - 1) == 0:
                expected = q ** (ext / 2 - 1)
                ok = abs(abs(val) - expected) <= 1e-9
            else:
                expected = q ** ((ext - 1) / 2)
                ok = abs(abs(val) - expected) <= 1e-9
            row("eisenstein", (k,), val, expected, ok)
    return rows


def cmd_chars(args) -> int:
    config = {"command": "chars", "q": args.q, "ext": args.ext, "seed": args.seed}
    rows = _char_rows(args.q, args.ext)
    _emit("chars", {"rows": rows}, config, args.path)
    return 0 if all(r["pass"] for r in rows) else 1


def _audit_graph(g: gc.Graph, caps: dict, seed: int) -> bd.AuditReport:
    inv = gc.invariant_report(g, chi_cap=caps["chi"], beta_cap=caps["beta"])
    adj, lap = sp.graph_spectra(g)
    return bd.audit_bounds(g, inv, adj, lap, seed=seed)


def cmd_audit(args) -> int:
    g = load_graph_source(args.source, *args.params)
    caps = _parse_caps(args.caps)
    config = {"command": "audit", "source": args.source, "params": list(args.params),
              "seed": args.seed, "caps": caps}
    report = _audit_graph(g, caps, args.seed)
    _emit("audit", {"audit": report.to_json()}, config, args.path)
    return 0 if report.ok else 1


def cmd_verify(args) -> int:
    caps = _parse_caps(args.caps)
    ids = args.families.split(",") if args.families else None
    config = {"command": "verify", "families": args.families, "seed": args.seed,
              "caps": caps}
    graphs = []
    total_fail = 0
    closed_forms = []
    if ids is None:
        # smallest-three closed-form sweep across every family with a formula
        for family, instances in sorted(corpus_mod.SMALLEST_THREE.items()):
            for params in instances:
                g = gfam.build(family, *params)
                try:
                    result = sp.verify_closed_form(g, sp.closed_form_spectrum(family, *params))
                    closed_forms.append({"family": family, "params": list(params),
                                         "ok": result["ok"]})
                except Mismatch as exc:
                    closed_forms.append({"family": family, "params": list(params),
                                         "ok": False, "error": str(exc)})
                    total_fail += 1
    for cid, family, params, has_cf, g in corpus_mod.build_corpus(ids):
        entry: dict = {"id": cid, "n": g.n, "edges": g.edge_count}
        if has_cf:
            try:
                cf = sp.closed_form_spectrum(family, *params)
                entry["closed_form"] = sp.verify_closed_form(g, cf)
            except Mismatch as exc:
                entry["closed_form"] = {"ok": False, "error": str(exc)}
                total_fail += 1
        report = _audit_graph(g, caps, args.seed)
        entry["audit"] = {"passed": len(report.records) - len(report.failed) - len(report.skipped),
                          "failed": [r.name for r in report.failed],
                          "skipped": [r.name for r in report.skipped]}
        total_fail += len(report.failed)
        graphs.append(entry)
    summary = {"graphs": len(graphs), "failures": total_fail}
    payload = {"graphs": graphs, "summary": summary}
    if closed_forms:
        payload["closed_forms"] = closed_forms
    _emit("verify", payload, config, args.path)
    return 0 if total_fail == 0 else 1


def cmd_iso(args) -> int:
    g = load_graph_source(args.first)
    h = load_graph_source(args.second)
    caps = _parse_caps(args.caps)
    config = {"command": "iso", "first": args.first, "second": args.second,
              "seed": args.seed, "caps": caps}
    payload: dict = {"first": {"n": g.n, "edges": g.edge_count},
                     "second": {"n": h.n, "edges": h.edge_count}}
    adj_g = sp.eig_symmetric(sp.adjacency_matrix(g))
    adj_h = sp.eig_symmetric(sp.adjacency_matrix(h))
    isospectral = (g.n == h.n and len(adj_g.entries) == len(adj_h.entries) and all(
        abs(a - b) <= 1e-7 and ma == mb
        for (a, ma), (b, mb) in zip(adj_g.entries, adj_h.entries)))
    payload["isospectral"] = isospectral
    try:
        verdict, mapping = gc.is_isomorphic(g, h, cap=caps["iso"])
        payload["verdict"] = "isomorphic" if verdict else "non-isomorphic"
        if mapping is not None:
            payload["mapping"] = mapping
        if not verdict and isospectral:
            payload["verdict"] = "non-isomorphic; isospectral"
    except CapExceeded:
        payload["verdict"] = "undecided"
        payload["note"] = "over the isomorphism cap; invariant and spectrum comparison only"
        payload["degree_sequences_match"] = sorted(g.degrees) == sorted(h.degrees)
    _emit("iso", payload, config, args.path)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="specgraph",
        description="algebraic graph families, character sums, spectra, and bound audits")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--path", help="write the artifact to this file instead of stdout")
        p.add_argument("--caps", help="lower the exact-engine caps, e.g. chi=32,beta=16,iso=24")
        p.add_argument("--json", action="store_true",
                       help="force JSON output (reports already emit JSON)")

    p_gen = sub.add_parser("gen", help="generate a family member")
    p_gen.add_argument("family")
    p_gen.add_argument("params", nargs="*")
    p_gen.add_argument("--out", choices=["edgelist", "dot", "json"], default="edgelist")
    common(p_gen)
    p_gen.set_defaults(fn=cmd_gen)

    p_spec = sub.add_parser("spec", help="spectrum of a graph source")
    p_spec.add_argument("source")
    p_spec.add_argument("params", nargs="*")
    p_spec.add_argument("--kind", choices=["adjacency", "laplacian"], default="adjacency")
    p_spec.add_argument("--closed-form", action="store_true")
    common(p_spec)
    p_spec.set_defaults(fn=cmd_spec)

    p_chars = sub.add_parser("chars", help="character sum tables over GF(q)")
    p_chars.add_argument("q", type=int)
    p_chars.add_argument("--ext", type=int, help="extension degree for Eisenstein sums")
    common(p_chars)
    p_chars.set_defaults(fn=cmd_chars)

    p_audit = sub.add_parser("audit", help="spectral bound audit of one graph")
    p_audit.add_argument("source")
    p_audit.add_argument("params", nargs="*")
    common(p_audit)
    p_audit.set_defaults(fn=cmd_audit)

    p_verify = sub.add_parser("verify", help="closed forms + audits over the corpus")
    p_verify.add_argument("--families", help="comma-separated corpus ids to restrict to")
    common(p_verify)
    p_verify.set_defaults(fn=cmd_verify)

    p_iso = sub.add_parser("iso", help="compare two graph sources")
    p_iso.add_argument("first")
    p_iso.add_argument("second")
    common(p_iso)
    p_iso.set_defaults(fn=cmd_iso)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SpecgraphError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
