"""Batch front end: census computation, formula-vs-oracle verification,
self-duality tables, orbit listings, and a persistent result cache.

Exit codes: 0 success / all comparisons pass, 1 at least one mismatch,
2 usage error, 3 resource guard tripped.  Output is deterministic for a
fixed invocation, independent of thread count and cache state.
"""

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass

from . import census, oracle
from .canonical import all_classes, is_exceptional
from .gfield import ResourceLimitError, make_field
from .numth import divisors, is_prime, mobius, odd_part, prime_power

# q at or below which full enumeration commands run by default;
# verify --level bruteforce is stricter (see BRUTE_BOUND) because it adds
# per-orbit searches on top of the partition.
ENUM_BOUND = 13
BRUTE_BOUND = 9
FORCED_BOUND = 27      # partition-only ceiling under verify --force
MAX_Q = 10 ** 6        # declared parameter range for verify


@dataclass(frozen=True)
class RunConfig:
    command: str
    fmt: str
    cache_dir: str
    threads: int
    seed: int


# ---------------------------------------------------------------------------
# input validation

def _odd_prime_power(q):
    pp = prime_power(q)
    if pp is None or pp[0] == 2:
        raise ValueError("q must be a power of an odd prime, got %d" % q)
    return pp


def _verify_q(q):
    if q > MAX_Q:
        raise ValueError(
            "q=%d is outside the supported range (3 <= q <= %d)" % (q, MAX_Q))
    if q < 3:
        raise ValueError("q must be at least 3, got %d" % q)
    return _odd_prime_power(q)


# ---------------------------------------------------------------------------
# result cache: one JSON document per (p, f)

def _cache_path(cache_dir, p, f):
    return os.path.join(cache_dir, "census_p%d_f%d.json" % (p, f))


def _cache_load(cache_dir, p, f):
    path = _cache_path(cache_dir, p, f)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, ValueError):
        return {}
    if doc.get("schema") != str(census.SCHEMA_VERSION):
        print("note: ignoring cache with unknown schema at %s" % path,
              file=sys.stderr)
        return {}
    return doc


def _cache_store(cache_dir, p, f, doc):
    os.makedirs(cache_dir, exist_ok=True)
    doc = dict(doc)
    doc["schema"] = str(census.SCHEMA_VERSION)
    path = _cache_path(cache_dir, p, f)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
    os.replace(tmp, path)


# ---------------------------------------------------------------------------
# output helpers

def _write(text):
    sys.stdout.write(text)


def _emit_json(obj):
    _write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _emit_csv(header, rows):
    lines = [",".join(header)]
    lines.extend(",".join(str(v) for v in row) for row in rows)
    _write("\n".join(lines) + "\n")


def _bool_str(b):
    return "true" if b else "false"


# ---------------------------------------------------------------------------
# check lists (verify)

def _render_checks(cfg, label, checks):
    """checks: list of (name, expected, actual); returns the exit code."""
    failed = [c for c in checks if c[1] != c[2]]
    if cfg.fmt == "json":
        _emit_json({
            "label": label,
            "checks": [{"name": n, "expected": str(e), "actual": str(a),
                        "ok": e == a} for n, e, a in checks],
            "passed": not failed,
        })
    elif cfg.fmt == "csv":
        _emit_csv(["name", "expected", "actual", "ok"],
                  [(n, e, a, _bool_str(e == a)) for n, e, a in checks])
    else:
        width = max(len(c[0]) for c in checks)
        for n, e, a in checks:
            mark = "ok  " if e == a else "FAIL"
            _write("%s %s  expected %s  actual %s\n"
                   % (mark, n.ljust(width), e, a))
        _write("%s: %d/%d checks passed\n"
               % (label_text(label), len(checks) - len(failed), len(checks)))
    return 1 if failed else 0


def label_text(label):
    return " ".join("%s=%s" % (k, v) for k, v in label.items())


# ---------------------------------------------------------------------------
# count

# fixed rendering orders so output bytes do not depend on dict round-trips
ORBIT_KEYS = ("dia_generic", "dia_exceptional", "off_generic",
              "off_exceptional", "total")
REFLEX_KEYS = ("dia_plain", "dia_twisted", "off_plain", "off_twisted",
               "dia_total", "off_total", "total")


def cmd_count(cfg, args):
    p, f = args.p, args.f
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime, got %d" % p)
    if f < 1:
        raise ValueError("f must be a positive integer, got %d" % f)

    report = None
    doc = _cache_load(cfg.cache_dir, p, f) if cfg.cache_dir else {}
    if "census" in doc:
        report = census.CensusReport.from_json_dict(doc["census"])
    if report is None:
        report = census.build_report(p, f)
        if cfg.cache_dir:
            doc["census"] = report.to_json_dict()
            _cache_store(cfg.cache_dir, p, f, doc)

    q = p ** f
    alpha, o = odd_part(f)
    lattice = []
    for d in divisors(o):
        e = 2 ** alpha * d
        orb = census.total_orbits(p ** e)
        mu = mobius(o // d)
        lattice.append((e, orb, mu, mu * orb))
    lattice.sort()

    if cfg.fmt == "json":
        out = {
            "p": str(p), "f": str(f), "q": str(q),
            "orbit_counts": {k: str(v) for k, v in report.orbit_counts.items()},
            "divisor_lattice": [
                {"level": str(e), "orbits": str(orb), "mobius": str(mu),
                 "term": str(term)} for e, orb, mu, term in lattice],
            "generating_orbits": str(report.generating_orbits),
            "maps": str(report.maps),
        }
        if args.reflexible:
            out["reflexible_orbit_counts"] = {
                k: str(v) for k, v in report.reflexible_orbit_counts.items()}
            out["reflexible_generating_orbits"] = str(
                report.reflexible_generating_orbits)
            out["reflexible_maps"] = str(report.reflexible_maps)
        _emit_json(out)
        return 0

    if cfg.fmt == "csv":
        rows = [("p", p), ("f", f), ("q", q)]
        rows += [("orbits_%s" % k, report.orbit_counts[k])
                 for k in ORBIT_KEYS]
        for e, orb, mu, term in lattice:
            rows += [("lattice_e%d_orbits" % e, orb),
                     ("lattice_e%d_mobius" % e, mu),
                     ("lattice_e%d_term" % e, term)]
        rows += [("generating_orbits", report.generating_orbits),
                 ("maps", report.maps)]
        if args.reflexible:
            rows += [("reflexible_%s" % k, report.reflexible_orbit_counts[k])
                     for k in REFLEX_KEYS]
            rows += [("reflexible_generating_orbits",
                      report.reflexible_generating_orbits),
                     ("reflexible_maps", report.reflexible_maps)]
        _emit_csv(["key", "value"], rows)
        return 0

    _write("census p=%d f=%d (q=%d)\n" % (p, f, q))
    _write("orbit counts over GF(%d^2)\n" % q)
    for k in ORBIT_KEYS:
        _write("  %-18s %d\n" % (k.replace("_", " "), report.orbit_counts[k]))
    _write("divisor lattice (twisted levels e | f, f/e odd)\n")
    for e, orb, mu, term in lattice:
        _write("  e=%-3d orbits %-12d mobius %+d  term %d\n"
               % (e, orb, mu, term))
    _write("generating orbits  %d\n" % report.generating_orbits)
    _write("maps               %d\n" % report.maps)
    if args.reflexible:
        _write("reflexible orbit counts over GF(%d^2)\n" % q)
        for k in REFLEX_KEYS:
            _write("  %-18s %d\n"
                   % (k.replace("_", " "), report.reflexible_orbit_counts[k]))
        _write("reflexible generating orbits  %d\n"
               % report.reflexible_generating_orbits)
        _write("reflexible maps               %d\n" % report.reflexible_maps)
    return 0


# ---------------------------------------------------------------------------
# verify

def _formula_checks(q, p, f):
    counts = census.orbit_counts(q)
    parts = [counts[k] for k in ("dia_generic", "dia_exceptional",
                                 "off_generic", "off_exceptional")]
    rcounts = census.reflexible_orbit_counts(q)
    rparts = [rcounts[k] for k in ("dia_plain", "dia_twisted",
                                   "off_plain", "off_twisted")]
    roundtrip = sum(census.count_generating_orbits(p, e)
                    for e in census.twisted_divisors(f))
    exc_forms = sorted({cls.form for cls in all_classes(q)
                        if is_exceptional(cls, q)})
    return [
        ("orbit-sum", census.total_orbits(q), sum(parts)),
        ("reflexible-sum", census.total_reflexible_orbits(q), sum(rparts)),
        ("mobius-roundtrip", census.total_orbits(q), roundtrip),
        ("maps-divisibility", 0, census.count_generating_orbits(p, f) % f),
        ("reflexible-maps-divisibility", 0,
         census.count_reflexible_generating_orbits(p, f) % f),
        ("exceptional-side", "dia" if q % 4 == 3 else "off",
         ",".join(exc_forms)),
    ]


def _count_checks(q, summary):
    expected = census.orbit_counts(q)
    keys = ("dia_generic", "dia_exceptional", "off_generic",
            "off_exceptional", "total")
    return [("orbits-" + k, expected[k], summary[k]) for k in keys]


def _oracle_compute(cfg, q, p, f, want):
    """Compute (or load from cache) the oracle aggregates named in want."""
    doc = _cache_load(cfg.cache_dir, p, f) if cfg.cache_dir else {}
    have = doc.get("oracle", {})
    if all(k in have for k in want):
        return have

    fresh = {}
    orbits = oracle.enumerate_orbits(q, cfg.threads)
    summary = oracle.orbit_count_summary(q, orbits=orbits)
    fresh["orbit_counts"] = {k: str(v) for k, v in summary.items()}
    if "reflexible" in want or "selfdual" in want or "levels" in want:
        records = oracle.orbit_records(q, orbits=orbits)
        fresh["reflexible"] = {
            form: str(sum(1 for r in records
                          if r.form == form and r.reflexible))
            for form in ("dia", "off")}
        fresh["levels"] = {"generating": str(
            sum(1 for r in records if r.level == f))}
        if f > 1:
            bundles = oracle.galois_fuse(orbits, p, f)
            fresh["fusion"] = {
                "bundles": str(len(bundles)),
                "size_violations": str(
                    sum(1 for b in bundles if len(b) != f))}
            table_records = oracle.fused_records(q, orbits=orbits)
        else:
            table_records = records
        cells = oracle.selfdual_cells(
            [r for r in table_records if r.level == f])
        fresh["selfdual"] = {form: [str(v) for v in cells[form]]
                             for form in ("dia", "off")}

    have.update(fresh)
    if cfg.cache_dir:
        doc["oracle"] = have
        _cache_store(cfg.cache_dir, p, f, doc)
    return have


def _closure_checks(cfg, q, p, f):
    """Spot-check that sampled representative pairs generate the whole
    group, by explicit closure.  Only run where |M(q^2)| is tiny."""
    F = make_field(p, 2 * f)
    reps = []
    for cls in all_classes(q):
        for orbit in oracle.orbit_partition(F, cls):
            reps.append((cls, orbit[0]))
    rng = random.Random(cfg.seed)
    sample = rng.sample(reps, min(3, len(reps)))
    expected = q * q * (q ** 4 - 1)
    out = []
    for j, (cls, quad) in enumerate(sample):
        pair = oracle.quad_pair(F, cls, quad)
        out.append(("closure-sample-%d" % j, expected,
                    oracle.closure_order(pair)))
    return out


def cmd_verify(cfg, args):
    q = args.q
    p, f = _verify_q(q)
    label = {"q": str(q), "level": args.level}

    if args.level == "formulas":
        return _render_checks(cfg, label, _formula_checks(q, p, f))

    if args.level == "orbits":
        if q > ENUM_BOUND:
            raise ResourceLimitError(
                "orbit enumeration is capped at q <= %d" % ENUM_BOUND)
        have = _oracle_compute(cfg, q, p, f, ["orbit_counts"])
        summary = {k: int(v) for k, v in have["orbit_counts"].items()}
        return _render_checks(cfg, label, _count_checks(q, summary))

    if args.level == "selfdual":
        if q not in oracle.SELFDUAL_TABLE:
            raise ValueError("no embedded reference row for q=%d" % q)
        if q > ENUM_BOUND:
            raise ResourceLimitError(
                "self-duality enumeration is capped at q <= %d" % ENUM_BOUND)
        have = _oracle_compute(cfg, q, p, f, ["selfdual"])
        checks = []
        for form in ("dia", "off"):
            actual = [int(v) for v in have["selfdual"][form]]
            expect = oracle.SELFDUAL_TABLE[q][form]
            for col, name in enumerate(("k_eq_l", "pos_sd", "neg_sd", "both")):
                checks.append(("selfdual-%s-%s" % (form, name),
                               expect[col], actual[col]))
        return _render_checks(cfg, label, checks)

    # bruteforce
    if q > BRUTE_BOUND:
        if not args.force:
            raise ResourceLimitError(
                "bruteforce is capped at q <= %d; pass --force for a "
                "partition-only run up to q <= %d" % (BRUTE_BOUND, FORCED_BOUND))
        if q > FORCED_BOUND:
            raise ResourceLimitError(
                "forced partition-only runs are capped at q <= %d"
                % FORCED_BOUND)
        have = _oracle_compute(cfg, q, p, f, ["orbit_counts"])
        summary = {k: int(v) for k, v in have["orbit_counts"].items()}
        return _render_checks(cfg, label, _count_checks(q, summary))

    want = ["orbit_counts", "reflexible", "selfdual", "levels"]
    if f > 1:
        want.append("fusion")
    have = _oracle_compute(cfg, q, p, f, want)

    summary = {k: int(v) for k, v in have["orbit_counts"].items()}
    checks = _count_checks(q, summary)

    rcounts = census.reflexible_orbit_counts(q)
    for form in ("dia", "off"):
        checks.append(("reflexible-" + form, rcounts[form + "_total"],
                       int(have["reflexible"][form])))

    checks.append(("generating-orbits",
                   census.count_generating_orbits(p, f),
                   int(have["levels"]["generating"])))
    if f > 1:
        checks.append(("fusion-bundles", census.count_maps(p, f),
                       int(have["fusion"]["bundles"])))
        checks.append(("fusion-size-violations", 0,
                       int(have["fusion"]["size_violations"])))

    if q in oracle.SELFDUAL_TABLE:
        for form in ("dia", "off"):
            actual = [int(v) for v in have["selfdual"][form]]
            expect = oracle.SELFDUAL_TABLE[q][form]
            for col, name in enumerate(("k_eq_l", "pos_sd", "neg_sd", "both")):
                checks.append(("selfdual-%s-%s" % (form, name),
                               expect[col], actual[col]))

    if q <= 5:
        checks.extend(_closure_checks(cfg, q, p, f))

    return _render_checks(cfg, label, checks)


# ---------------------------------------------------------------------------
# selfdual

def cmd_selfdual(cfg, args):
    q = args.q
    p, f = _odd_prime_power(q)
    if q > ENUM_BOUND:
        raise ResourceLimitError(
            "self-duality enumeration is capped at q <= %d" % ENUM_BOUND)
    have = _oracle_compute(cfg, q, p, f, ["selfdual"])
    cells = {form: [int(v) for v in have["selfdual"][form]]
             for form in ("dia", "off")}

    surplus = sum(cells[form][2] - cells[form][3] for form in ("dia", "off"))
    if surplus > 0:
        # observed so far: negatively self-dual maps are also positively
        # self-dual; report any counterexample, never assert it away
        print("note: %d negatively self-dual classes are not positively "
              "self-dual" % surplus, file=sys.stderr)

    rows = [(q, form, cells[form][0], cells[form][1], cells[form][2],
             cells[form][3]) for form in ("dia", "off")]
    if cfg.fmt == "json":
        _emit_json({"q": str(q), "rows": [
            {"form": form, "k_eq_l": str(a), "pos_sd": str(b),
             "neg_sd": str(c), "both": str(d)}
            for _, form, a, b, c, d in rows]})
    elif cfg.fmt == "csv":
        _emit_csv(["q", "form", "k_eq_l", "pos_sd", "neg_sd", "both"], rows)
    else:
        _write("self-dual map classes at q=%d\n" % q)
        _write("  %-4s %8s %8s %8s %8s\n"
               % ("form", "k=l", "pos", "neg", "both"))
        for _, form, a, b, c, d in rows:
            _write("  %-4s %8d %8d %8d %8d\n" % (form, a, b, c, d))
    return 0


# ---------------------------------------------------------------------------
# orbits

def _parse_type(text):
    try:
        k, l = (int(part) for part in text.split(","))
    except ValueError:
        raise ValueError("--type wants two comma-separated integers, "
                         "got %r" % text)
    return k, l


def cmd_orbits(cfg, args):
    q = args.q
    _odd_prime_power(q)
    if q > args.bound:
        raise ResourceLimitError(
            "orbit listing is capped at q <= %d (see --bound)" % args.bound)
    if args.fuse:
        records = oracle.fused_records(q, cfg.threads)
    else:
        records = oracle.orbit_records(q, cfg.threads)
    if args.type:
        k, l = _parse_type(args.type)
        records = [r for r in records if r.k == k and r.l == l]

    if cfg.fmt == "json":
        _emit_json({"q": str(q), "fused": bool(args.fuse), "rows": [
            {"form": r.form, "i": str(r.i),
             "e1": str(r.key[0]), "e2": str(r.key[1]), "u": str(r.key[2]),
             "size": str(r.size), "level": str(r.level),
             "k": str(r.k), "l": str(r.l), "reflexible": r.reflexible,
             "pos_sd": r.pos_selfdual, "neg_sd": r.neg_selfdual}
            for r in records]})
    elif cfg.fmt == "csv":
        _emit_csv(
            ["form", "i", "e1", "e2", "u", "size", "level", "k", "l",
             "reflexible", "pos_sd", "neg_sd"],
            [(r.form, r.i, r.key[0], r.key[1], r.key[2], r.size, r.level,
              r.k, r.l, _bool_str(r.reflexible), _bool_str(r.pos_selfdual),
              _bool_str(r.neg_selfdual)) for r in records])
    else:
        for r in records:
            flags = "".join((
                "R" if r.reflexible else "-",
                "+" if r.pos_selfdual else "-",
                "x" if r.neg_selfdual else "-"))
            _write("%-3s i=%-2d key=(%d,%d,%d) size=%-4d level=%d "
                   "type=(%d,%d) %s\n"
                   % (r.form, r.i, r.key[0], r.key[1], r.key[2], r.size,
                      r.level, r.k, r.l, flags))
        _write("%d rows\n" % len(records))
    return 0


# ---------------------------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="twistedmaps",
        description="Censuses of orientably-regular maps on twisted "
                    "linear fractional groups, with brute-force "
                    "verification at small field sizes.")
    parser.add_argument("--format", choices=("text", "json", "csv"),
                        default="text", help="output format")
    parser.add_argument("--cache-dir", default=None,
                        help="directory for per-(p,f) result caches")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker processes for enumeration")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for sampled spot checks")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="closed-form census for one (p, f)")
    c.add_argument("--p", type=int, required=True, help="odd prime")
    c.add_argument("--f", type=int, required=True, help="field exponent")
    c.add_argument("--reflexible", action="store_true",
                   help="include the reflexible census")

    v = sub.add_parser("verify", help="compare formulas against the oracle")
    v.add_argument("--q", type=int, required=True, help="odd prime power")
    v.add_argument("--level", required=True,
                   choices=("formulas", "orbits", "bruteforce", "selfdual"))
    v.add_argument("--force", action="store_true",
                   help="allow partition-only bruteforce beyond q=%d"
                        % BRUTE_BOUND)

    s = sub.add_parser("selfdual", help="self-duality table for one q")
    s.add_argument("--q", type=int, required=True, help="odd prime power")

    o = sub.add_parser("orbits", help="list pair orbits at one q")
    o.add_argument("--q", type=int, required=True, help="odd prime power")
    o.add_argument("--type", default=None, metavar="K,L",
                   help="only orbits of vertex/face orders (K, L)")
    o.add_argument("--fuse", action="store_true",
                   help="aggregate orbits into Galois bundles")
    o.add_argument("--bound", type=int, default=ENUM_BOUND,
                   help="enumeration ceiling (default %d)" % ENUM_BOUND)
    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    cfg = RunConfig(command=args.command, fmt=args.format,
                    cache_dir=args.cache_dir, threads=max(1, args.threads),
                    seed=args.seed)
    handlers = {"count": cmd_count, "verify": cmd_verify,
                "selfdual": cmd_selfdual, "orbits": cmd_orbits}
    try:
        return handlers[cfg.command](cfg, args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
