"""Command line front end.

Subcommands: lfactor (closed-form L-factors of a representation
descriptor), period (mirabolic period report), verify (named check
suites over a descriptor or the built-in seeded corpora), segments
(segment-combinatorics report). Output is deterministic JSON by
default; --output table renders the same data as text.

Exit codes: 0 success (a pole in a value is a result, not a failure),
1 verification failure, 2 input error, 3 non-generic input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import corpus
from .descriptors import (
    DescriptorError,
    field_json,
    load_rep_file,
    ratfunc_json,
    segment_json,
    series_json,
    value_str,
)
from .lfactors import (
    asai_L,
    asai_L_multiplicative,
    asai_factor_list,
    kable_factorization_check,
    rs_L,
    rs_factor_list,
)
from .localfields import FieldPair
from .periods import (
    flicker_series,
    lattice_value_at,
    rs_series,
    verify_c_pi,
    verify_theorem1,
)
from .ratfunc import series_of
from .rational import is_integral, rat_str
from .scalars import AlgNum, GaussRat
from .segments import (
    GenericRep,
    NotGenericError,
    UnramifiedModule,
    asai_holomorphic_witness,
    conductor,
    is_conjugate_selfdual,
    is_generic,
    is_unramified_rep,
    pi_u,
    standard_order,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_NOT_GENERIC = 3


@dataclass
class RunConfig:
    command: str
    rep_path: str | None
    secondary_rep_path: str | None
    order: int
    at_s: int | None
    output: str
    suite: str


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asaiperiods",
        description="Exact local Asai/Rankin-Selberg L-factors and mirabolic periods",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, rep_required: bool):
        p.add_argument("--rep", required=rep_required, metavar="PATH",
                       help="representation descriptor (JSON file)")
        p.add_argument("--order", type=int, default=40, metavar="N",
                       help="series truncation order (default 40)")
        p.add_argument("--output", choices=("json", "table"), default="json")

    p = sub.add_parser("lfactor", help="closed-form L-factors")
    common(p, True)
    p.add_argument("--against", metavar="PATH",
                   help="secondary descriptor for the Rankin-Selberg factor")

    p = sub.add_parser("period", help="mirabolic period report")
    common(p, True)
    p.add_argument("--at-s", dest="at_s", metavar="S",
                   help="also evaluate at integer s >= 1 (t = q_F^-s)")

    p = sub.add_parser("verify", help="run a verification suite")
    common(p, False)
    p.add_argument("--suite", default="all",
                   choices=("theorem1", "cpi", "multiplicativity", "identities", "all"))

    p = sub.add_parser("segments", help="segment combinatorics report")
    common(p, True)
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    at_s = None
    raw = getattr(ns, "at_s", None)
    if raw is not None:
        try:
            at_s = int(raw)
        except ValueError:
            raise DescriptorError("--at-s: expected a positive integer, got %r" % raw)
        if at_s < 1:
            raise DescriptorError("--at-s: expected a positive integer, got %r" % raw)
    if ns.order < 1:
        raise DescriptorError("--order: must be >= 1")
    return RunConfig(
        command=ns.command,
        rep_path=getattr(ns, "rep", None),
        secondary_rep_path=getattr(ns, "against", None),
        order=ns.order,
        at_s=at_s,
        output=ns.output,
        suite=getattr(ns, "suite", "all"),
    )


def _scalar_str(g: GaussRat) -> str:
    return value_str(AlgNum(g))


def _short(g: GaussRat) -> str:
    """Compact coefficient display for factored forms."""
    if g.is_real():
        if is_integral(g.re):
            return str(g.re.numerator)
        return rat_str(g.re)
    return "(" + str(g) + ")"


def _factor_str(c: GaussRat, k: int, var: str = "t") -> str:
    mono = var if k == 1 else "%s^%d" % (var, k)
    if c == GaussRat(1):
        return "(1 - %s)" % mono
    if c == GaussRat(-1):
        return "(1 + %s)" % mono
    return "(1 - %s*%s)" % (_short(c), mono)


def _factored(factors, var: str = "t") -> str:
    if not factors:
        return "1"
    return "1 / " + "".join(_factor_str(c, k, var) for c, k in factors)


def _load_generic_rep(path: str) -> GenericRep:
    fp, segments = load_rep_file(path)
    return GenericRep(fp, tuple(segments))


def _emit(obj: dict, cfg: RunConfig, table_lines) -> None:
    if cfg.output == "json":
        print(json.dumps(obj))
    else:
        for line in table_lines(obj):
            print(line)


# -- lfactor -----------------------------------------------------------


def cmd_lfactor(cfg: RunConfig) -> int:
    rep = _load_generic_rep(cfg.rep_path)
    mod = pi_u(rep)
    report = {
        "field": field_json(rep.fp),
        "piU": [_scalar_str(v) for v in mod.satake],
        "asai": ratfunc_json(asai_L(mod)),
    }
    rs_info = None
    if cfg.secondary_rep_path:
        other = _load_generic_rep(cfg.secondary_rep_path)
        if other.fp != rep.fp:
            raise DescriptorError("--against: field pair differs from --rep")
        if not (is_unramified_rep(rep) and is_unramified_rep(other)):
            raise DescriptorError(
                "--against: the Rankin-Selberg factor is modeled for unramified representations"
            )
        m2 = pi_u(other)
        rs_info = (mod, m2)
        report["rs"] = {
            "tE": ratfunc_json(rs_L(mod, m2)),
            "t": ratfunc_json(rs_L(mod, m2, as_t=True)),
        }

    def tables(obj):
        yield "Asai L-factor in t = q_F^-s:"
        yield "  " + _factored(asai_factor_list(mod))
        if rs_info is not None:
            m1, m2 = rs_info
            yield "Rankin-Selberg L-factor in t_E = q_E^-s:"
            yield "  " + _factored(rs_factor_list(m1, m2), var="tE")

    _emit(report, cfg, tables)
    return EXIT_OK


# -- period ------------------------------------------------------------


def cmd_period(cfg: RunConfig) -> int:
    rep = _load_generic_rep(cfg.rep_path)
    try:
        report = verify_theorem1(rep, cfg.order)
    except ValueError as exc:
        raise DescriptorError(str(exc))
    obj = {
        "series": series_json(report.series),
        "reconstructed": None if report.reconstructed is None else ratfunc_json(report.reconstructed),
        "closedForm": ratfunc_json(report.closed_form),
        "match": report.match,
        "valueAt1": value_str(report.value_at_1),
    }
    if cfg.at_s is not None:
        try:
            obj["valueAtS"] = value_str(lattice_value_at(rep, cfg.at_s))
        except ZeroDivisionError:
            obj["valueAtS"] = "pole"

    def tables(o):
        yield "order: %d" % report.series.order
        yield "match: %s" % ("yes" if o["match"] else "NO")
        yield "closed form: (%s) / (%s)" % (
            report.closed_form.num.to_str(),
            report.closed_form.den.to_str(),
        )
        yield "value at s=1: %s" % o["valueAt1"]
        if "valueAtS" in o:
            yield "value at s=%d: %s" % (cfg.at_s, o["valueAtS"])

    _emit(obj, cfg, tables)
    return EXIT_OK


# -- segments ----------------------------------------------------------


def cmd_segments(cfg: RunConfig) -> int:
    fp, segments = load_rep_file(cfg.rep_path)
    if not is_generic(segments, fp.q_E):
        _emit({"generic": False}, cfg, lambda o: ["generic: no"])
        return EXIT_OK
    rep = GenericRep(fp, tuple(segments))
    csd = is_conjugate_selfdual(rep)
    obj = {
        "generic": True,
        "standardOrder": [segment_json(s) for s in standard_order(segments, fp.q_E)],
        "piU": [_scalar_str(v) for v in pi_u(rep).satake],
        "conductor": conductor(rep),
        "conjugateSelfDual": csd,
        "asaiHolomorphicWitness": asai_holomorphic_witness(rep) if csd else None,
    }

    def tables(o):
        yield "generic: yes"
        yield "standard order: " + " x ".join(
            "[%s; k=%d]" % (_scalar_str(s.rho.at_unif), s.k)
            for s in standard_order(segments, fp.q_E)
        )
        yield "pi_u: [%s]" % ", ".join(o["piU"])
        yield "conductor: %d" % o["conductor"]
        yield "conjugate self-dual: %s" % ("yes" if csd else "no")
        if o["asaiHolomorphicWitness"] is not None:
            yield "holomorphy witness: %s" % ("yes" if o["asaiHolomorphicWitness"] else "NO")

    _emit(obj, cfg, tables)
    return EXIT_OK


# -- verify ------------------------------------------------------------


def _check_theorem1(name: str, rep: GenericRep, order: int) -> dict:
    report = verify_theorem1(rep, order)
    out = {
        "suite": "theorem1",
        "check": name,
        "pass": report.match,
        "valueAt1": value_str(report.value_at_1),
    }
    if not report.match:
        expected = series_of(report.closed_form, report.series.order)
        idx = report.series.first_mismatch(expected)
        out["firstFailIndex"] = idx
    return out


def _suite_theorem1(cfg: RunConfig):
    order = cfg.order
    if cfg.rep_path:
        yield _check_theorem1("user-rep", _load_generic_rep(cfg.rep_path), order)
        return
    yield _check_theorem1("steinberg-gl2-unram-pair", corpus.steinberg_gl2(FieldPair(2, False)), order)
    yield _check_theorem1("steinberg-gl2-ram-pair", corpus.steinberg_gl2(FieldPair(3, True, 1)), order)
    yield _check_theorem1("unitary-gl2", corpus.unitary_gl2_example(), order)
    rng = random.Random(61409)
    for i in range(3):
        fp = corpus.rand_field(rng, ramified=bool(i % 2))
        yield _check_theorem1("ramified-mix-%d" % i, corpus.ramified_rep(rng, fp), order)
    fp = FieldPair(5, False)
    r0 = GenericRep(fp, (corpus.selfdual_ramified_segment(rng, 1, 2),))
    yield _check_theorem1("no-unramified-support", r0, order)


def _suite_cpi(cfg: RunConfig):
    if cfg.rep_path:
        rep = _load_generic_rep(cfg.rep_path)
        try:
            ok = verify_c_pi(rep)
        except ValueError as exc:
            yield {"suite": "cpi", "check": "user-rep", "pass": False, "error": str(exc)}
            return
        yield {"suite": "cpi", "check": "user-rep", "pass": ok}
        return
    rng = random.Random(7021)
    for i in range(6):
        rep = corpus.csd_rep(rng, corpus.rand_field(rng, ramified=False))
        yield {"suite": "cpi", "check": "unram-pair-%d" % i, "pass": verify_c_pi(rep)}
    for i in range(6):
        rep = corpus.csd_rep(rng, corpus.rand_field(rng, ramified=True))
        yield {"suite": "cpi", "check": "ram-pair-%d" % i, "pass": verify_c_pi(rep)}


def _suite_multiplicativity(cfg: RunConfig):
    if cfg.rep_path:
        mod = pi_u(_load_generic_rep(cfg.rep_path))
        ok = asai_L(mod) == asai_L_multiplicative(mod)
        yield {"suite": "multiplicativity", "check": "user-rep", "pass": ok}
        return
    rng = random.Random(40104)
    for i in range(100):
        fp = corpus.rand_field(rng, ramified=bool(i % 2))
        mod = corpus.rand_module(rng, fp, rng.randint(0, 5))
        ok = asai_L(mod) == asai_L_multiplicative(mod)
        yield {"suite": "multiplicativity", "check": "module-%03d" % i, "pass": ok}


def _series_check(name: str, got, expected) -> dict:
    ok = got == expected
    out = {"suite": "identities", "check": name, "pass": ok}
    if not ok:
        out["firstFailIndex"] = got.first_mismatch(expected)
    return out


def _suite_identities(cfg: RunConfig):
    order = min(cfg.order, 20)
    rng = random.Random(90125)
    if cfg.rep_path:
        mods = [pi_u(_load_generic_rep(cfg.rep_path))]
    else:
        mods = [
            corpus.rand_module(rng, FieldPair(3, False), 3),
            corpus.rand_module(rng, FieldPair(2, True, 1), 3),
        ]
    for mod in mods:
        kind = "ram" if mod.fp.ramified else "unram"
        yield _series_check(
            "littlewood-%s-r%d" % (kind, mod.r),
            flicker_series(mod, order),
            series_of(asai_L(mod), order),
        )
        if mod.r >= 1:
            sub = UnramifiedModule(mod.fp, mod.satake[: mod.r - 1])
            yield _series_check(
                "cauchy-%s-r%d" % (kind, mod.r),
                rs_series(mod, sub, order),
                series_of(rs_L(mod, sub), order),
            )
        if not mod.fp.ramified:
            yield {
                "suite": "identities",
                "check": "kable-%s-r%d" % (kind, mod.r),
                "pass": kable_factorization_check(mod),
            }
    if not cfg.rep_path:
        for i in range(10):
            mod = corpus.rand_module(rng, corpus.rand_field(rng, False), rng.randint(1, 4))
            yield {
                "suite": "identities",
                "check": "kable-random-%d" % i,
                "pass": kable_factorization_check(mod),
            }


_SUITES = {
    "theorem1": _suite_theorem1,
    "cpi": _suite_cpi,
    "multiplicativity": _suite_multiplicativity,
    "identities": _suite_identities,
}


def cmd_verify(cfg: RunConfig) -> int:
    names = list(_SUITES) if cfg.suite == "all" else [cfg.suite]
    all_ok = True
    for name in names:
        for check in _SUITES[name](cfg):
            all_ok = all_ok and bool(check["pass"])
            if cfg.output == "json":
                print(json.dumps(check))
            else:
                status = "PASS" if check["pass"] else "FAIL"
                extra = ""
                if "valueAt1" in check:
                    extra = " valueAt1=%s" % check["valueAt1"]
                if "firstFailIndex" in check:
                    extra += " firstFailIndex=%s" % check["firstFailIndex"]
                if "error" in check:
                    extra += " error=%s" % check["error"]
                print("[%s] %s: %s%s" % (check["suite"], check["check"], status, extra))
    return EXIT_OK if all_ok else EXIT_VERIFY_FAIL


_COMMANDS = {
    "lfactor": cmd_lfactor,
    "period": cmd_period,
    "verify": cmd_verify,
    "segments": cmd_segments,
}


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = _config(ns)
        return _COMMANDS[cfg.command](cfg)
    except DescriptorError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except NotGenericError as exc:
        print("not generic: %s" % exc, file=sys.stderr)
        return EXIT_NOT_GENERIC


if __name__ == "__main__":
    sys.exit(main())
