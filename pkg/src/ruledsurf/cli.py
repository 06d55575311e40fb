"""Command-line front end.

    ruledsurf reproduce example1 --seed 0..4 --jobs 2 --out runs
    ruledsurf construct scroll --config scroll.cfg --out runs/s
    ruledsurf analyze runs/s/ideals/surface.txt --betti --hilbert 0..10
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .core.field import DEFAULT_PRIME, is_prime
from .core.matrix import RingMatrix
from .core.ring import PolyRing
from .errors import PreconditionError, RetryBudgetExceeded
from .groebner.ideal import Ideal, dim_degree, hilbert_values
from .groebner.resolution import minimal_free_resolution
from .modules import GradedModule, direct_sum, dual_of_divisor_ideal, random_extension
from .recipes import PIPELINES, Check, run
from .rng import SeedStream
from .surfaces import analysis as an
from .surfaces.bundles import BundleConfig, divisor, k_bundle_ideal
from .surfaces.curves import (CurveModel, coordinate_ring, plane_cubic, random_genus2_curve,
                              random_plane_cubic, random_points, smoothness_check)
from .surfaces.scroll import scroll_ideal

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- serialisation ---------------------------------------------------------------------
def format_ideal(I: Ideal) -> str:
    ring = I.ring
    lines = [f"# ring: {' '.join(ring.names)}", f"# p: {ring.p}"]
    lines += [str(g) for g in I.gens]
    return "\n".join(lines) + "\n"


def read_ideal(path: Path) -> Ideal:
    names, p, polys = None, DEFAULT_PRIME, []
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, val = line[1:].partition(":")
            if key.strip() == "ring":
                names = val.split()
            elif key.strip() == "p":
                p = int(val)
            continue
        polys.append(line)
    if names is None:
        raise UsageError(f"{path}: missing '# ring:' header")
    ring = PolyRing(names, p=p)
    return Ideal([ring(s) for s in polys], ring)


def parse_range(text: str) -> list[int]:
    """'3', '0..4' or '1,5,7'."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            a, b = part.split("..")
            out.extend(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise UsageError(f"empty range {text!r}")
    return out


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    if isinstance(x, list):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def write_outputs(out: Path, command: str, config: dict, ideals: dict[str, Ideal], checks: list[Check],
                  report_lines: list[str], seconds: float):
    out.mkdir(parents=True, exist_ok=True)
    idir = out / "ideals"
    idir.mkdir(exist_ok=True)
    paths = {}
    for name, I in ideals.items():
        path = idir / f"{name}.txt"
        path.write_text(format_ideal(I))
        paths[name] = str(path.relative_to(out))
    (out / "report.txt").write_text("\n".join(report_lines) + "\n")
    manifest = {
        "command": command,
        "config": _jsonable(config),
        "outputs": paths,
        "checks": {c.name: {"expected": _jsonable(c.expected), "computed": _jsonable(c.computed),
                            "passed": c.passed} for c in checks},
        "passed": all(c.passed for c in checks),
        "wall_seconds": round(seconds, 3),
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def check_lines(checks: list[Check]) -> list[str]:
    lines = []
    for c in sorted(checks, key=lambda c: c.name):
        status = "PASS" if c.passed else "FAIL"
        line = f"check.{c.name} = {status}"
        if not c.passed:
            line += f"  expected={_jsonable(c.expected)} computed={_jsonable(c.computed)}"
        lines.append(line)
    return lines


def report_lines(rep: an.SurfaceReport, prefix: str = "surface") -> list[str]:
    d = rep.as_dict()
    lines = [f"{prefix}.{k} = {json.dumps(_jsonable(d[k]))}" for k in sorted(d)]
    if rep.betti is not None:
        lines.append(f"{prefix}.betti_table:")
        lines += ["  " + row for row in rep.betti.render().splitlines()]
    return lines


# -- reproduce -------------------------------------------------------------------------
def _reproduce_one(args: tuple) -> tuple[int, bool, list[str]]:
    name, seed, p, retries, out = args
    res = run(name, seed, p, retries)
    lines = [f"pipeline = {name}", f"seed = {seed}", f"p = {p}"] + check_lines(res.checks)
    if out is not None:
        write_outputs(Path(out) / name / f"seed-{seed}", f"reproduce {name}",
                      {"pipeline": name, "seed": seed, "p": p, "retries": retries},
                      res.ideals, res.checks, lines, res.seconds)
    return seed, res.passed, lines


def cmd_reproduce(ns) -> int:
    if ns.name not in PIPELINES:
        raise UsageError(f"unknown pipeline {ns.name!r}; choose from {', '.join(PIPELINES)}")
    seeds = parse_range(ns.seed)
    jobs = [(ns.name, s, ns.p, ns.retries, ns.out) for s in seeds]
    if ns.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=ns.jobs) as ex:
            results = list(ex.map(_reproduce_one, jobs))
    else:
        results = [_reproduce_one(j) for j in jobs]
    ok = True
    for seed, passed, lines in results:
        print("\n".join(lines))
        print(f"result = {'PASS' if passed else 'FAIL'}\n")
        ok &= passed
    return EXIT_OK if ok else EXIT_CHECK


# -- construct -------------------------------------------------------------------------
def load_config(path: str | None, overrides: dict) -> dict:
    cfg: dict = {}
    if path:
        parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}") from exc
        try:
            parser.read_string("[run]\n" + text)
        except configparser.Error as exc:
            raise UsageError(f"bad config: {exc}") from exc
        cfg.update(parser["run"])
    cfg.update({k: v for k, v in overrides.items() if v is not None})
    return cfg


def _int(cfg, key, default):
    try:
        return int(cfg.get(key, default))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"config key {key!r} must be an integer") from exc


def build_curve(cfg: dict, p: int, seed: int, retries: int) -> CurveModel:
    kind = str(cfg.get("curve", "cubic")).strip()
    if kind == "genus2":
        return random_genus2_curve(seed, p, retries)
    if kind in ("cubic", "random-cubic"):
        return random_plane_cubic(seed, p, retries)
    # explicit generators, separated by ';' (plane cubics only)
    n = _int(cfg, "ambient", 2) + 1
    R = coordinate_ring(n, p)
    gens = [s for s in kind.split(";") if s.strip()]
    if n == 3 and len(gens) == 1:
        return plane_cubic(gens[0], R)
    raise UsageError("explicit curves must be a single plane cubic")


def build_divisor(C: CurveModel, text, stream: SeedStream, avoid=()):
    text = str(text).strip()
    if not text or text == "0":
        return divisor(C, [])
    if ":" in text:
        pts = [tuple(int(c) for c in item.split(":")) for item in text.split(",") if item.strip()]
        return divisor(C, pts)
    return random_points(C, int(text), stream, avoid=avoid)


def _module(cfg: dict, C: CurveModel, stream: SeedStream, D1, D2) -> GradedModule:
    DS = dual_of_divisor_ideal(C.to_S(D1.ideal))
    D2S = dual_of_divisor_ideal(C.to_S(D2.ideal))
    kind = cfg.get("module", "extension")
    if kind == "sum":
        M = direct_sum(DS, D2S)
    elif kind == "extension":
        M = random_extension(D2S, DS, stream.child("extension"))
    else:
        raise UsageError(f"module must be 'sum' or 'extension', not {kind!r}")
    twist = _int(cfg, "twist", 0)
    if twist:
        pres = M.presentation
        M = GradedModule(RingMatrix(pres.ring, pres.entries, [t - twist for t in pres.row_twists],
                                    [t - twist for t in pres.col_twists], ncols=pres.ncols))
    return M


def cmd_construct(ns) -> int:
    cfg = load_config(ns.config, {"p": ns.p, "seed": ns.seed, "retries": ns.retries})
    p = _int(cfg, "p", DEFAULT_PRIME)
    if not is_prime(p) or p < 5:
        raise UsageError(f"p = {p} is not a usable prime")
    seed = _int(cfg, "seed", 0)
    retries = _int(cfg, "retries", 20)
    stream = SeedStream(seed)
    t = time.perf_counter()
    try:
        C = build_curve(cfg, p, int(stream.child("curve").integer(0, 2 ** 31)), retries)
    except ValueError as exc:
        raise UsageError(f"bad curve: {exc}") from exc
    D = build_divisor(C, cfg.get("d", cfg.get("d1", "3")), stream.child("D"))
    D2 = build_divisor(C, cfg.get("d2", "3"), stream.child("D2"), avoid=D.points)
    ideals = {"curve": C.ideal}
    checks: list[Check] = []
    if ns.kind == "scroll":
        M = _module(cfg, C, stream, D, D2)
        emb = scroll_ideal(M, C)
        I = emb.ideal
        ideals["scroll"] = I
        rep = an.surface_report(I, seed=seed)
    else:
        k = 2 if ns.kind == "conic-bundle" else _int(cfg, "k", 3)
        if ns.kind == "k-bundle" and k < 3:
            raise UsageError("k-bundle needs k >= 3")
        b_text = str(cfg.get("b", "0")).strip()
        if b_text.isdigit():
            B = divisor(C, list(D.points[:int(b_text)]))
        else:
            B = build_divisor(C, b_text, stream.child("B"))
        bc = BundleConfig(C, k, B, D, D2, seed=seed)
        bc.module = _module(cfg, C, stream, D, D2)
        try:
            out = k_bundle_ideal(bc)
        except ValueError as exc:
            raise PreconditionError(str(exc)) from exc
        I = out.ideal
        ideals.update(scroll=out.scroll.ideal, fibres=out.fibre_ideal, surface=I)
        rep = out.report
    for key, target in (("expect_dim", "dim"), ("expect_degree", "degree")):
        if key in cfg:
            checks.append(Check(target, int(cfg[key]), getattr(rep, target)))
    if "expect_betti" in cfg:
        checks.append(Check("betti_totals", parse_range(cfg["expect_betti"]), rep.betti.totals()))
    lines = [f"construct = {ns.kind}", f"seed = {seed}", f"p = {p}"] + report_lines(rep) + check_lines(checks)
    if ns.out:
        write_outputs(Path(ns.out), f"construct {ns.kind}", cfg, ideals, checks, lines,
                      time.perf_counter() - t)
    print("\n".join(lines))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_CHECK


# -- analyze ---------------------------------------------------------------------------
def cmd_analyze(ns) -> int:
    I = read_ideal(Path(ns.ideal))
    lines = [f"ideal = {ns.ideal}", f"generators = {len(I.gens)}"]
    checks: list[Check] = []
    d, e = dim_degree(I)
    lines += [f"dim = {d}", f"degree = {e}"]
    if ns.hilbert:
        ts = parse_range(ns.hilbert)
        hv = hilbert_values(I, max(ts))
        vals = [hv[t] for t in ts]
        lines.append(f"hilbert = {json.dumps(vals)}")
        if ns.expect_hilbert:
            checks.append(Check("hilbert", parse_range(ns.expect_hilbert), vals))
    if ns.betti or ns.expect_betti:
        bt = minimal_free_resolution(I).betti
        lines.append(f"betti_totals = {json.dumps(bt.totals())}")
        lines.append("betti_table:")
        lines += ["  " + row for row in bt.render().splitlines()]
        if ns.expect_betti:
            checks.append(Check("betti_totals", parse_range(ns.expect_betti), bt.totals()))
    if ns.smooth:
        lines.append(f"smooth = {json.dumps(smoothness_check(I, I.ring.nvars - d))}")
    if ns.net:
        Q = [g for g in I.mingens() if g.degree() == 2]
        if not Q:
            raise PreconditionError("the ideal contains no quadrics")
        loci = an.net_rank_loci(an.quadric_net_matrix(Q))
        lines.append(f"net.size = {len(Q)}")
        lines.append(f"net.det = {loci.det}")
        lines.append(f"net.minors5_zero = {json.dumps(loci.minors5.is_zero())}")
        lines.append(f"net.saturated_minors4_unit = {json.dumps(loci.saturated4.is_unit())}")
    if ns.expect_dim_degree:
        checks.append(Check("dim_degree", parse_range(ns.expect_dim_degree), [d, e]))
    lines += check_lines(checks)
    print("\n".join(lines))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_CHECK


# -- entry point -----------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ruledsurf", description="Ideals of ruled surfaces over finite fields.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, seed_default="0"):
        sp.add_argument("--seed", default=seed_default)
        sp.add_argument("--p", type=int, default=None)
        sp.add_argument("--retries", type=int, default=None)
        sp.add_argument("--out", default=None)
        sp.add_argument("--jobs", type=int, default=1)

    rp = sub.add_parser("reproduce", help="run a worked example pipeline")
    rp.add_argument("name", choices=sorted(PIPELINES))
    common(rp)
    rp.set_defaults(func=cmd_reproduce)

    cp = sub.add_parser("construct", help="build a surface from a config file")
    cp.add_argument("kind", choices=["scroll", "conic-bundle", "k-bundle"])
    cp.add_argument("--config", default=None)
    common(cp, seed_default=None)
    cp.set_defaults(func=cmd_construct)

    an_ = sub.add_parser("analyze", help="recompute invariants of a stored ideal")
    an_.add_argument("ideal")
    an_.add_argument("--betti", action="store_true")
    an_.add_argument("--hilbert", default=None, metavar="RANGE")
    an_.add_argument("--smooth", action="store_true")
    an_.add_argument("--net", action="store_true")
    an_.add_argument("--expect-betti", default=None)
    an_.add_argument("--expect-hilbert", default=None)
    an_.add_argument("--expect-dim-degree", default=None)
    an_.set_defaults(func=cmd_analyze)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    if ns.command == "reproduce":
        ns.p = ns.p or DEFAULT_PRIME
        ns.retries = ns.retries or 20
        if not is_prime(ns.p):
            print(f"error: p = {ns.p} is not prime", file=sys.stderr)
            return EXIT_USAGE
    try:
        return ns.func(ns)
    except (UsageError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RetryBudgetExceeded as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
