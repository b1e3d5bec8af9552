"""Minimum-crossing tables over graph classes, and inequality audits.

kappa(spec, n, e) is the smallest crossing number among class members
with n vertices and *at least* e edges.  The "at least" is an explicit
minimum over edge counts e' >= e, so monotonicity in e is a checked
property of output tables rather than a baked-in assumption.  Records
carry a witness graph, a drawing certificate realizing the reported
value, and an exactness flag; inexact records (solver budget or size
limits) are upper bounds and are excluded from every audit.

All audit predicates compare exact integers and fractions; no floats.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from ._geom import best_convex_placement, convex_drawing_data
from .classes import ClassSpec, contains, max_edges, parse_class_spec
from .enumeration import enumerate_graphs
from .errors import (BudgetExceeded, ClassEmpty, EmptyGrid, InputError,
                     InputTooLarge, ParseError, PreconditionFailed)
from .graphs import Graph, complete_graph, from_graph6, to_graph6
from .solver import (SOLVER_EDGE_CEILING, DrawingCertificate,
                     build_certificate, crossing_number,
                     crossing_number_lower_bound)


@dataclass(frozen=True)
class KappaRecord:
    """One table entry: the cheapest drawing over graphs with >= e edges.

    ``exact`` is true only when every enumerated competitor was either
    solved outright or ruled out by a sound lower bound at or above
    ``kappa``; any budget or size escape that leaves a competitor
    unaccounted for poisons the flag, and inexact records are treated
    as upper bounds everywhere downstream.
    """

    spec: ClassSpec
    n: int
    e: int
    kappa: int
    witness: Graph
    certificate: DrawingCertificate
    exact: bool


@dataclass(frozen=True)
class TableRow:
    """A persisted table row; enough for audits, no certificate."""

    spec: ClassSpec
    n: int
    e: int
    kappa: int
    exact: bool
    witness_graph6: str


@dataclass(frozen=True)
class GammaSeries:
    """Raw per-vertex crossing cost along one edge-density ray.

    points are (n, kappa(n, ceil(a*n))/n) sorted by n.  No limit is
    extrapolated: the series is data for a human to look at.
    """

    spec: ClassSpec
    a: Fraction
    points: tuple[tuple[int, Fraction], ...]
    exact: tuple[bool, ...]


@dataclass(frozen=True)
class SandwichReport:
    """Outcome of the density-cubed sandwich check at one (a, n) point.

    lower_ok is None when the point's value was not certified exactly:
    an upper-bound witness can still settle the upper inequality, but
    the lower side is skipped and reported as such.
    """

    spec: ClassSpec
    a: Fraction
    n: int
    e: int
    kappa: int
    exact: bool
    lower_ok: bool | None
    upper_ok: bool

    @property
    def lower_skipped(self) -> bool:
        return self.lower_ok is None

    @property
    def holds(self) -> bool:
        return self.upper_ok and self.lower_ok is not False

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class ConvexityReport:
    """Finite-n convexity probe along one vertex count.

    Failures are data, not errors: the convexity statement is about the
    limiting sequence, and nothing pins down the finite-n analogue.
    """

    spec: ClassSpec
    n: int
    densities: tuple[Fraction, Fraction, Fraction]
    kappas: tuple[int, int, int]
    holds: bool


@dataclass(frozen=True)
class DEstimate:
    """Desk-scale stand-in for the cubic-normalized density limit.

    finite_scale is always true: these grids cannot see the limsup, so
    the window verdict is a caveat-carrying observation.
    """

    spec: ClassSpec
    grid: tuple[tuple[Fraction, Fraction], ...]
    d_value: Fraction
    window_ok: bool
    finite_scale: bool


def _convex_certificate(g: Graph) -> DrawingCertificate:
    """Certificate for a locally optimized convex placement of g."""
    pos, _ = best_convex_placement(g)
    crossings, orders = convex_drawing_data(g, pos)
    return build_certificate(g, crossings, orders)


def kappa(spec: ClassSpec, n: int, e, budget: int | None = None) -> KappaRecord:
    """Minimum crossing number over class members with >= e edges.

    Scans edge counts upward from ceil(e), pruning with the static
    lower bound, and stops once no denser level can beat the incumbent
    (a level where every graph's Euler bound meets the incumbent ends
    the scan, as does an incumbent of zero).  Levels beyond the exact
    solver's edge ceiling contribute a convex-placement upper bound
    from their first enumerated graph and poison exactness unless the
    level's Euler bound already rules it out.
    """
    if n < 1:
        raise InputError("kappa needs at least one vertex")
    e_req = max(0, ceil(Fraction(e)))
    cap = max_edges(spec, n)
    if e_req > cap:
        raise ClassEmpty(
            f"no {spec.label()} graph on {n} vertices has {e_req} edges")

    best: tuple[int, Graph, DrawingCertificate] | None = None
    open_lbs: list[int] = []   # sound lower bounds of unsolved competitors
    found_any = False
    for e2 in range(e_req, cap + 1):
        euler = max(0, e2 - 3 * n + 6) if n >= 3 else 0
        if best is not None and (best[0] == 0 or euler >= best[0]):
            break
        candidates = enumerate_graphs(spec, n, e2)
        if not candidates:
            continue
        found_any = True
        if e2 > SOLVER_EDGE_CEILING:
            # exact search cannot run at this size; take one witness and
            # account for the whole level by its Euler bound
            cert = _convex_certificate(candidates[0])
            value = cert.crossing_count
            open_lbs.append(euler)
            if best is None or value < best[0]:
                best = (value, candidates[0], cert)
            continue
        ranked = sorted(candidates, key=crossing_number_lower_bound)
        for g in ranked:
            lb = crossing_number_lower_bound(g)
            if best is not None and lb >= best[0]:
                break   # ascending order: no later graph can improve
            try:
                value, cert = crossing_number(g, budget=budget)
            except BudgetExceeded as exc:
                open_lbs.append(exc.lower_bound)
                value, cert = exc.upper_bound, exc.certificate
            if best is None or value < best[0]:
                best = (value, g, cert)
    if best is None:
        if not found_any:
            raise ClassEmpty(
                f"no {spec.label()} graph on {n} vertices has "
                f"{e_req} or more edges")
        raise ClassEmpty(
            f"enumeration produced no candidate for ({n}, {e_req})")
    value, witness, cert = best
    exact = all(lb >= value for lb in open_lbs)
    return KappaRecord(spec=spec, n=n, e=e_req, kappa=value, witness=witness,
                       certificate=cert, exact=exact)


def gamma_series(spec: ClassSpec, a, n_list,
                 budget: int | None = None) -> GammaSeries:
    """kappa(n, ceil(a*n))/n for each n, as raw trend data."""
    af = Fraction(a)
    if af < 0:
        raise InputError("edge density must be nonnegative")
    points: list[tuple[int, Fraction]] = []
    flags: list[bool] = []
    for n in sorted(set(int(x) for x in n_list)):
        rec = kappa(spec, n, ceil(af * n), budget=budget)
        points.append((n, Fraction(rec.kappa, n)))
        flags.append(rec.exact)
    return GammaSeries(spec=spec, a=af, points=tuple(points),
                       exact=tuple(flags))


def _exact_table(records) -> dict[tuple[int, int], int]:
    """(n, e) -> kappa over the exact records; rejects mixed classes."""
    specs = {r.spec for r in records}
    if len(specs) > 1:
        raise InputError("audit records mix graph classes")
    table: dict[tuple[int, int], int] = {}
    for r in records:
        if not r.exact:
            continue
        key = (r.n, r.e)
        if key in table and table[key] != r.kappa:
            raise InputError(f"conflicting exact values at {key}")
        table[key] = r.kappa
    return table


def subadditivity_audit(records):
    """Violations of kappa(n1+n2, e1+e2) <= kappa(n1,e1) + kappa(n2,e2).

    Checks every unordered pair of exact table points (a point may pair
    with itself) whose coordinate sum is also in the table.  Returns
    violating ((n1,e1,k1), (n2,e2,k2), (n,e,k)) triples; an empty list
    is the expected outcome.
    """
    table = _exact_table(records)
    keys = sorted(table)
    violations = []
    for i, (n1, e1) in enumerate(keys):
        for n2, e2 in keys[i:]:
            ks = table.get((n1 + n2, e1 + e2))
            if ks is None:
                continue
            if ks > table[(n1, e1)] + table[(n2, e2)]:
                violations.append(((n1, e1, table[(n1, e1)]),
                                   (n2, e2, table[(n2, e2)]),
                                   (n1 + n2, e1 + e2, ks)))
    return violations


def crossing_lemma_audit(records):
    """Violations of the density lower bounds on exact records.

    For e > 4n the reported kappa must reach e^3/(64 n^2); for e > 7n
    it must also reach e^3/(29 n^2).  Comparisons are exact rationals.
    Returns (n, e, kappa, rule) tuples; empty means the audit passed.
    """
    violations = []
    for r in records:
        if not r.exact:
            continue
        n, e = r.n, r.e
        if e > 4 * n and Fraction(e ** 3, 64 * n * n) > r.kappa:
            violations.append((n, e, r.kappa, "e>4n: e^3/(64n^2)"))
        if e > 7 * n and Fraction(e ** 3, 29 * n * n) > r.kappa:
            violations.append((n, e, r.kappa, "e>7n: e^3/(29n^2)"))
    return violations


def sandwich_audit(spec: ClassSpec, a, n: int,
                   budget: int | None = None) -> SandwichReport:
    """Check a^3/100 <= kappa(n, ceil(a*n))/n <= 8*a^3 at one point.

    Requires a >= 4 and n >= 2a + 1.  When the point's value cannot be
    certified exactly (solver budget or edge ceiling), the upper
    inequality is still checked against the witness's crossing count --
    a genuine upper bound -- and the lower side is reported skipped.
    The one enumeration-ceiling escape hatch: if the requested edge
    count forces the complete graph, the unique candidate is solved (or
    bounded) directly without enumerating the level.
    """
    af = Fraction(a)
    if af < 4:
        raise PreconditionFailed("sandwich check needs density a >= 4")
    if n < 2 * af + 1:
        raise PreconditionFailed("sandwich check needs n >= 2a + 1")
    e_req = ceil(af * n)
    if e_req > max_edges(spec, n):
        raise ClassEmpty(
            f"no {spec.label()} graph on {n} vertices has {e_req} edges")
    try:
        rec = kappa(spec, n, e_req, budget=budget)
    except InputError:
        if e_req != n * (n - 1) // 2 or not contains(spec, complete_graph(n)):
            raise
        g = complete_graph(n)
        try:
            value, cert = crossing_number(g, budget=budget)
            exact = True
        except (BudgetExceeded, InputTooLarge) as exc:
            cert = getattr(exc, "certificate", None) or _convex_certificate(g)
            value, exact = cert.crossing_count, False
        rec = KappaRecord(spec=spec, n=n, e=e_req, kappa=value, witness=g,
                          certificate=cert, exact=exact)
    ratio = Fraction(rec.kappa, n)
    upper_ok = ratio <= 8 * af ** 3
    lower_ok = (ratio >= af ** 3 / 100) if rec.exact else None
    return SandwichReport(spec=spec, a=af, n=n, e=rec.e, kappa=rec.kappa,
                          exact=rec.exact, lower_ok=lower_ok,
                          upper_ok=upper_ok)


def convexity_probe(spec: ClassSpec, n: int, a1, a2, a3,
                    budget: int | None = None) -> ConvexityReport:
    """Finite-n convexity check of kappa(n, a*n)/n at three densities.

    The middle density is written as the convex combination of the
    outer two and the corresponding inequality is evaluated exactly.
    A failed check is reported, never raised.
    """
    ds = tuple(Fraction(x) for x in (a1, a2, a3))
    if not ds[0] <= ds[1] <= ds[2]:
        raise PreconditionFailed("densities must be in ascending order")
    es = []
    for d in ds:
        prod = d * n
        if prod.denominator != 1:
            raise PreconditionFailed(f"density {d} is not integral at n={n}")
        es.append(int(prod))
    recs = [kappa(spec, n, e, budget=budget) for e in es]
    if not all(r.exact for r in recs):
        raise PreconditionFailed("convexity probe needs exact values")
    k1, k2, k3 = (r.kappa for r in recs)
    if ds[0] == ds[2]:
        holds = k1 == k2 == k3   # degenerate ray: equality is forced
    else:
        lam = (ds[2] - ds[1]) / (ds[2] - ds[0])
        holds = Fraction(k2, n) <= lam * Fraction(k1, n) \
            + (1 - lam) * Fraction(k3, n)
    return ConvexityReport(spec=spec, n=n, densities=ds,
                           kappas=(k1, k2, k3), holds=holds)


def d_estimate(spec: ClassSpec, grid,
               budget: int | None = None) -> DEstimate:
    """Max of (kappa(n, ceil(a*n))/n) / a^3 over a grid of (a, n) points."""
    pts = [(Fraction(a), int(n)) for a, n in grid]
    if not pts:
        raise EmptyGrid("density estimate needs at least one (a, n) point")
    out: list[tuple[Fraction, Fraction]] = []
    d_value: Fraction | None = None
    for af, n in pts:
        if af <= 0:
            raise InputError("grid densities must be positive")
        rec = kappa(spec, n, ceil(af * n), budget=budget)
        gamma_est = Fraction(rec.kappa, n)
        out.append((af, gamma_est))
        cand = gamma_est / af ** 3
        d_value = cand if d_value is None else max(d_value, cand)
    window_ok = Fraction(1, 100) <= d_value <= 8
    return DEstimate(spec=spec, grid=tuple(out), d_value=d_value,
                     window_ok=window_ok, finite_scale=True)


def build_table(spec: ClassSpec, n_max: int, n_min: int = 1,
                budget: int | None = None) -> tuple[KappaRecord, ...]:
    """One KappaRecord per (n, e), e from 0 to the class maximum."""
    if n_min < 1 or n_max < n_min:
        raise InputError("need 1 <= n_min <= n_max")
    records = []
    for n in range(n_min, n_max + 1):
        for e in range(max_edges(spec, n) + 1):
            records.append(kappa(spec, n, e, budget=budget))
    return tuple(records)


# -- persistence --------------------------------------------------------------

CSV_COLUMNS = ("class", "n", "e", "kappa", "exact", "witness_graph6")


def _row_key(r):
    return (r.spec.label(), r.n, r.e)


def write_table_csv(records, path, header_lines=()) -> None:
    """CSV table, rows sorted by (class, n, e).

    header_lines become leading '# ' comment lines; a timestamp, if
    wanted, belongs there so the data payload stays byte-stable.
    """
    rows = sorted(records, key=_row_key)
    with open(path, "w", newline="") as fh:
        for line in header_lines:
            fh.write(f"# {line}\n")
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in rows:
            writer.writerow([r.spec.label(), r.n, r.e, r.kappa,
                             "true" if r.exact else "false",
                             to_graph6(r.witness)])


def read_table_csv(path) -> tuple[TableRow, ...]:
    """Rows back from write_table_csv; comment lines are skipped."""
    rows = []
    with open(path, newline="") as fh:
        data = [ln for ln in fh if not ln.startswith("#")]
    reader = csv.reader(data)
    header = next(reader, None)
    if header is None or tuple(header) != CSV_COLUMNS:
        raise ParseError(f"unrecognized table header in {path}")
    for rec in reader:
        if len(rec) != len(CSV_COLUMNS):
            raise ParseError(f"short table row: {rec!r}")
        label, n, e, k, exact, g6 = rec
        if exact not in ("true", "false"):
            raise ParseError(f"bad exact flag {exact!r}")
        try:
            rows.append(TableRow(spec=parse_class_spec(label), n=int(n),
                                 e=int(e), kappa=int(k),
                                 exact=exact == "true", witness_graph6=g6))
        except ValueError as exc:
            raise ParseError(f"bad table row {rec!r}: {exc}") from exc
    return tuple(rows)


def table_to_json(records, meta=None) -> str:
    """Full records (certificates included) as a deterministic JSON text."""
    rows = []
    for r in sorted(records, key=_row_key):
        rows.append({
            "class": r.spec.label(),
            "n": r.n,
            "e": r.e,
            "kappa": r.kappa,
            "exact": r.exact,
            "witness": to_graph6(r.witness),
            "certificate": json.loads(r.certificate.to_json()),
        })
    payload = {"records": rows}
    if meta:
        payload["meta"] = dict(meta)
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def table_from_json(text: str) -> tuple[KappaRecord, ...]:
    """Inverse of table_to_json; certificates are revalidated on load."""
    try:
        payload = json.loads(text)
        rows = payload["records"]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed table JSON: {exc}") from exc
    records = []
    for row in rows:
        try:
            cert = DrawingCertificate.from_json(json.dumps(row["certificate"]))
            records.append(KappaRecord(
                spec=parse_class_spec(row["class"]), n=int(row["n"]),
                e=int(row["e"]), kappa=int(row["kappa"]),
                witness=from_graph6(row["witness"]),
                certificate=cert, exact=bool(row["exact"])))
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"malformed table record: {exc}") from exc
    return tuple(records)
