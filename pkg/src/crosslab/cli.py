"""Command-line front end: solve, tabulate, trend, construct, sample, audit.

Every artifact-writing command resolves its options from an optional
``key = value`` config file overridden by command-line flags, and embeds
the sha256 of the resolved options plus the seed in its outputs.  JSON
payloads carry no timestamp, so identical configs rerun byte-identically;
CSV files isolate the timestamp in a single leading comment line.

Exit codes: 0 success, 1 usage or config problem, 2 solver budget
exceeded, 3 internal invariant failure (including failed audits).
"""

from __future__ import annotations

import argparse
import datetime
import hashlib
import json
import os
import sys
from fractions import Fraction

from .classes import parse_class_spec
from .constructions import (BlowupParams, blow_up, exact_expectations,
                            sample_induced, split_to_max_degree)
from .errors import BudgetExceeded, CrosslabError, InputError, ParseError
from .graphs import from_graph6
from .harness import (build_table, crossing_lemma_audit, gamma_series, kappa,
                      read_table_csv, subadditivity_audit, table_from_json,
                      table_to_json, write_table_csv)
from .solver import DrawingCertificate, crossing_number, verify_certificate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_INTERNAL = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; route through our codes
    def error(self, message):
        raise _UsageError(message)


# option names that may appear in a config file (any command's options;
# a single file may drive a whole experiment grid)
_CONFIG_KEYS = {
    "class", "n", "n_min", "n_max", "n_list", "e", "a", "p", "trials",
    "seed", "budget", "t", "clones", "copies", "workers", "out",
    "json_out", "cert_out", "table", "analytic", "graph", "certificate",
}


def load_config(path) -> dict:
    """Flat ``key = value`` lines; '#' comments and blank lines ignored."""
    cfg = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise InputError(f"{path}:{lineno}: expected key = value")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in _CONFIG_KEYS:
                raise InputError(f"{path}:{lineno}: unknown option {key!r}")
            cfg[key] = value
    return cfg


def _resolve(args, names) -> dict:
    """Effective string-valued options: config file, then flag overrides."""
    cfg = load_config(args.config) if args.config else {}
    out = {}
    for name in names:
        # 'class' is a keyword, so argparse stores that flag under 'cls'
        flag = getattr(args, "cls" if name == "class" else name, None)
        if flag is not None:
            out[name] = str(flag)
        elif name in cfg:
            out[name] = cfg[name]
    return out


def _require(opts, name):
    if name not in opts:
        raise InputError(f"missing required option --{name.replace('_', '-')}")
    return opts[name]


def _as_int(opts, name, default=None, least=None):
    if name not in opts:
        if default is None:
            return None
        value = default
    else:
        try:
            value = int(opts[name])
        except ValueError as exc:
            raise InputError(f"--{name} wants an integer, "
                             f"got {opts[name]!r}") from exc
    if least is not None and value < least:
        raise InputError(f"--{name} must be >= {least}")
    return value


def _as_fraction(opts, name):
    try:
        return Fraction(opts[name])
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"--{name} wants a rational like 5/2 or 0.5, "
                         f"got {opts[name]!r}") from exc


def _as_bool(opts, name) -> bool:
    value = opts.get(name, "false").lower()
    if value not in ("true", "false"):
        raise InputError(f"--{name} wants true or false, got {value!r}")
    return value == "true"


def _workers(opts) -> int:
    # reductions run sequentially and deterministically; the flag caps
    # future parallelism and is validated so configs stay portable
    return _as_int(opts, "workers", default=os.cpu_count() or 1, least=1)


def _config_hash(command: str, opts: dict) -> str:
    blob = json.dumps({"command": command, "options": opts}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _meta(command: str, opts: dict) -> dict:
    return {"command": command,
            "config_sha256": _config_hash(command, opts),
            "seed": int(opts["seed"]) if "seed" in opts else None}


def _csv_header(meta) -> list:
    stamp = datetime.datetime.now(datetime.timezone.utc).isoformat()
    seed = meta["seed"] if meta["seed"] is not None else "none"
    return [f"generated-at: {stamp}",
            f"config: sha256={meta['config_sha256']} seed={seed}"]


def _write_json(path, payload: dict, meta: dict) -> None:
    doc = dict(payload)
    doc["meta"] = meta
    with open(path, "w") as fh:
        fh.write(json.dumps(doc, sort_keys=True, separators=(",", ":")))
        fh.write("\n")


def _frac_str(x) -> str:
    return str(Fraction(x))


def _load_graph(source: str):
    """graph6 literal, or a file whose first non-blank line is one."""
    text = source
    if os.path.isfile(source):
        with open(source) as fh:
            text = next((ln.strip() for ln in fh if ln.strip()), "")
    return from_graph6(text)


def _load_certificate(path: str) -> DrawingCertificate:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except ValueError as exc:
        raise ParseError(f"{path}: not JSON: {exc}") from exc
    if isinstance(doc, dict) and "certificate" in doc:
        doc = doc["certificate"]
    return DrawingCertificate.from_json(json.dumps(doc))


def _certificate_source(opts) -> DrawingCertificate:
    """A drawing to operate on: explicit certificate, or solved graph."""
    if "certificate" in opts:
        return _load_certificate(opts["certificate"])
    if "graph" in opts:
        g = _load_graph(opts["graph"])
        _, cert = crossing_number(g, budget=_as_int(opts, "budget", least=1))
        return cert
    raise InputError("need --certificate FILE or --graph G6")


# -- subcommands ---------------------------------------------------------------

def cmd_cr(args) -> int:
    opts = _resolve(args, ("graph", "budget", "cert_out"))
    source = _require(opts, "graph")
    g = _load_graph(source)
    budget = _as_int(opts, "budget", least=1)
    meta = _meta("cr", opts)
    cert_out = opts.get("cert_out", "certificate.json")
    try:
        value, cert = crossing_number(g, budget=budget)
    except BudgetExceeded as exc:
        _write_json(cert_out,
                    {"certificate": json.loads(exc.certificate.to_json())},
                    meta)
        print(f"cr>={exc.lower_bound}")
        print(f"cr<={exc.upper_bound}")
        print(f"certificate={cert_out}")
        return EXIT_BUDGET
    _write_json(cert_out, {"certificate": json.loads(cert.to_json())}, meta)
    print(f"cr={value}")
    print(f"certificate={cert_out}")
    return EXIT_OK


def cmd_kappa(args) -> int:
    opts = _resolve(args, ("class", "n", "n_min", "n_max", "e", "budget",
                           "workers", "out", "json_out"))
    spec = parse_class_spec(opts.get("class", "all"))
    _workers(opts)
    budget = _as_int(opts, "budget", least=1)
    single = _as_int(opts, "n", least=1)
    n_min = single if single is not None else _as_int(opts, "n_min",
                                                      default=1, least=1)
    n_max = single if single is not None else _as_int(opts, "n_max", least=1)
    if n_max is None:
        raise InputError("need --n or --n-max")
    e_fixed = _as_int(opts, "e", least=0)
    out = _require(opts, "out")
    if e_fixed is None:
        records = build_table(spec, n_max, n_min=n_min, budget=budget)
    else:
        records = tuple(kappa(spec, n, e_fixed, budget=budget)
                        for n in range(n_min, n_max + 1))
    meta = _meta("kappa", opts)
    write_table_csv(records, out, header_lines=_csv_header(meta))
    if "json_out" in opts:
        with open(opts["json_out"], "w") as fh:
            fh.write(table_to_json(records, meta))
    exact = sum(1 for r in records if r.exact)
    print(f"rows={len(records)} exact={exact} out={out}")
    return EXIT_OK


def cmd_gamma(args) -> int:
    opts = _resolve(args, ("class", "a", "n_list", "n_min", "n_max",
                           "budget", "workers", "out"))
    spec = parse_class_spec(opts.get("class", "all"))
    _workers(opts)
    _require(opts, "a")
    a = _as_fraction(opts, "a")
    if "n_list" in opts:
        try:
            ns = [int(part) for part in opts["n_list"].split(",") if part]
        except ValueError as exc:
            raise InputError(f"--n-list wants comma-separated integers: "
                             f"{exc}") from exc
    else:
        lo = _as_int(opts, "n_min", least=1)
        hi = _as_int(opts, "n_max", least=1)
        if lo is None or hi is None:
            raise InputError("need --n-list or both --n-min and --n-max")
        ns = list(range(lo, hi + 1))
    out = _require(opts, "out")
    series = gamma_series(spec, a, ns, budget=_as_int(opts, "budget", least=1))
    payload = {
        "class": spec.label(),
        "a": _frac_str(series.a),
        "points": [[n, _frac_str(v)] for n, v in series.points],
        "exact": list(series.exact),
    }
    _write_json(out, payload, _meta("gamma", opts))
    print(f"points={len(series.points)} out={out}")
    return EXIT_OK


def cmd_sample(args) -> int:
    opts = _resolve(args, ("certificate", "graph", "p", "trials", "seed",
                           "budget", "analytic", "out"))
    cert = _certificate_source(opts)
    _require(opts, "p")
    p = _as_fraction(opts, "p")
    out = _require(opts, "out")
    analytic = _as_bool(opts, "analytic")
    meta = _meta("sample", opts)
    if analytic:
        nu, eta, xi = exact_expectations(cert, p)
        payload = {"expected": {"nu": _frac_str(nu), "eta": _frac_str(eta),
                                "xi": _frac_str(xi)},
                   "n": cert.base.n, "e": len(cert.base.edges),
                   "crossings": cert.crossing_count}
    else:
        if "seed" not in opts:
            raise InputError("--seed is required for sampling")
        seed = _as_int(opts, "seed")
        trials = _as_int(opts, "trials", least=1)
        if trials is None:
            raise InputError("missing required option --trials")
        stats = sample_induced(cert, float(p), trials, seed)
        payload = {"stats": json.loads(stats.to_json())}
    _write_json(out, payload, meta)
    print(f"out={out}")
    return EXIT_OK


def cmd_blowup(args) -> int:
    opts = _resolve(args, ("certificate", "graph", "t", "clones", "copies",
                           "budget", "out"))
    cert = _certificate_source(opts)
    t = _as_int(opts, "t", least=1)
    L = _as_int(opts, "clones", default=1, least=1)
    K = _as_int(opts, "copies", default=1, least=1)
    out = _require(opts, "out")
    stages = {"input": {"n": cert.base.n, "e": len(cert.base.edges),
                        "crossings": cert.crossing_count}}
    if t is not None:
        cert = split_to_max_degree(cert, t)
        stages["split"] = {"t": t, "n": cert.base.n,
                           "e": len(cert.base.edges),
                           "crossings": cert.crossing_count}
    t_eff = t if t is not None else max(cert.base.degrees(), default=1)
    big, bound = blow_up(cert, BlowupParams(t=max(t_eff, 1), L=L, K=K))
    ok = verify_certificate(big)
    payload = dict(stages)
    payload["result"] = {"clones": L, "copies": K, "n": big.base.n,
                         "e": len(big.base.edges),
                         "counted": big.crossing_count, "bound": bound,
                         "verified": ok}
    payload["certificate"] = json.loads(big.to_json())
    _write_json(out, payload, _meta("blowup", opts))
    print(f"n={big.base.n} e={len(big.base.edges)} "
          f"counted={big.crossing_count} bound={bound} out={out}")
    return EXIT_INTERNAL if not ok else EXIT_OK


def cmd_audit(args) -> int:
    opts = _resolve(args, ("table", "out", "workers"))
    path = _require(opts, "table")
    _workers(opts)
    if path.endswith(".json"):
        with open(path) as fh:
            rows = table_from_json(fh.read())
    else:
        rows = read_table_csv(path)
    sub = subadditivity_audit(rows)
    lemma = crossing_lemma_audit(rows)
    skipped = [[r.spec.label(), r.n, r.e] for r in rows if not r.exact]
    payload = {
        "rows": len(rows),
        "exact_rows": len(rows) - len(skipped),
        "skipped": skipped,
        "subadditivity_violations": [list(map(list, v)) for v in sub],
        "crossing_lemma_violations": [list(v) for v in lemma],
    }
    if "out" in opts:
        _write_json(opts["out"], payload, _meta("audit", opts))
    bad = len(sub) + len(lemma)
    print(f"rows={len(rows)} skipped={len(skipped)} violations={bad}")
    return EXIT_INTERNAL if bad else EXIT_OK


# -- wiring --------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="crosslab",
                     description="exact crossing numbers, class tables, "
                                 "and drawing constructions at desk scale")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    def common(p):
        p.add_argument("--config", help="key = value options file")
        p.add_argument("--budget", type=int,
                       help="planarity-test budget per exact solve")

    p = sub.add_parser("cr", help="exact crossing number of one graph")
    common(p)
    p.add_argument("graph", nargs="?",
                   help="graph6 string, or file containing one")
    p.add_argument("--cert-out", dest="cert_out",
                   help="certificate path (default certificate.json)")
    p.set_defaults(handler=cmd_cr)

    p = sub.add_parser("kappa", help="minimum-crossing table for a class")
    common(p)
    p.add_argument("--class", dest="cls", help="class spec, e.g. bipartite")
    p.add_argument("--n", type=int, help="single vertex count")
    p.add_argument("--n-min", dest="n_min", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--e", type=int, help="single edge threshold (default all)")
    p.add_argument("--workers", type=int)
    p.add_argument("--out", help="CSV output path")
    p.add_argument("--json-out", dest="json_out",
                   help="full-record JSON output path")
    p.set_defaults(handler=cmd_kappa)

    p = sub.add_parser("gamma", help="kappa(n, ceil(a*n))/n series")
    common(p)
    p.add_argument("--class", dest="cls")
    p.add_argument("--a", help="edge density, rational like 5/2")
    p.add_argument("--n-list", dest="n_list", help="comma-separated n values")
    p.add_argument("--n-min", dest="n_min", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--out", help="JSON output path")
    p.set_defaults(handler=cmd_gamma)

    p = sub.add_parser("sample", help="random induced subsampling of a drawing")
    common(p)
    p.add_argument("--certificate", help="drawing certificate JSON")
    p.add_argument("--graph", help="graph6 to solve and then sample")
    p.add_argument("--p", help="keep probability")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, help="required unless --analytic")
    p.add_argument("--analytic", nargs="?", const="true",
                   help="emit exact expectations instead of sampling")
    p.add_argument("--out", help="JSON output path")
    p.set_defaults(handler=cmd_sample)

    p = sub.add_parser("blowup",
                       help="split / clone / replicate a drawing certificate")
    common(p)
    p.add_argument("--certificate", help="drawing certificate JSON")
    p.add_argument("--graph", help="graph6 to solve and then blow up")
    p.add_argument("--t", type=int, help="degree ceiling before cloning")
    p.add_argument("--clones", type=int, help="clone multiplicity L")
    p.add_argument("--copies", type=int, help="disjoint copy count K")
    p.add_argument("--out", help="JSON output path")
    p.set_defaults(handler=cmd_blowup)

    p = sub.add_parser("audit", help="inequality audits over a saved table")
    common(p)
    p.add_argument("--table", help="table CSV or JSON from the kappa command")
    p.add_argument("--out", help="violations report JSON path")
    p.add_argument("--workers", type=int)
    p.set_defaults(handler=cmd_audit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CrosslabError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:   # noqa: BLE001 -- exit-code contract
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
