"""Command line: series evaluation, condition checks, grid scans, oracle runs, SVG.

Exit codes: 0 pass, 1 hypothesis/criterion fail, 2 domain or usage error,
3 series non-convergence, 4 I/O failure.  Every option can also be supplied
in a ``key = value`` config file (``#`` comments allowed, unknown keys
rejected); explicit flags override the file.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import sys

import numpy as np

from numpy.polynomial import polynomial as npoly

from .criteria import (
    THEOREM_IDS,
    class_bound_coeffs,
    close_to_convex_probe,
    stated_hypothesis,
)
from .errors import ConvergenceError, DomainError
from .mappings import (
    CoefficientSeq,
    ConvolutionSpec,
    ImageCoefficients,
    convolve,
    random_coefficients,
)
from .oracle import SampleGrid, sweep
from .wright import SeriesControl, WrightParams, derivs_at_one, normalized_eval, wright_eval

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_DOMAIN = 2
EXIT_NONCONV = 3
EXIT_IO = 4

_GLOBAL_DEFAULTS = {"ctrl-max-terms": "2000", "ctrl-tol": "1e-14", "seed": "0"}

# Per-command option defaults; None marks a required option, lists are
# repeatable options (';'-separated when given through a config file).
_CMD_DEFAULTS = {
    "eval": {"p": None, "z": "1,0"},
    "derivs": {"p": None},
    "check": {"p1": None, "p2": "", "sigma": "0", "order": "0", "b1": "0", "gate": "derived"},
    "scan": {"axis": None, "fix": [], "out": None},
    "verify": {
        "p1": None,
        "p2": "",
        "sigma": "0",
        "order": "0",
        "b1": "0",
        "f": "random",
        "count": "20",
        "nmax": "50",
        "radii": "0.5,0.9,0.99",
        "theta-count": "4096",
        "gate": "derived",
    },
    "render": {
        "f": "identity",
        "p1": "",
        "p2": "",
        "sigma": "",
        "nmax": "12",
        "radii": "0.25,0.5,0.75,0.9",
        "theta-count": "512",
        "width": "800",
        "height": "800",
        "out": None,
    },
}

_LIST_OPTIONS = {"axis", "fix"}

_PARAM_NAMES = (
    "alpha1",
    "beta1",
    "gamma1",
    "delta1",
    "alpha2",
    "beta2",
    "gamma2",
    "delta2",
    "sigma",
    "order",
    "b1",
)

_SCAN_HEADER = list(_PARAM_NAMES) + [
    "lhs_stated",
    "rhs_stated",
    "sat_stated",
    "lhs_derived",
    "rhs_derived",
    "sat_derived",
]

_STARLIKE_THEOREMS = {"T3.1", "C1", "T3.2", "T3.3"}
_CONVEX_THEOREMS = {"T4.1", "R1", "T4.2", "T4.3"}


# ----------------------------- value parsing --------------------------------


def _parse_float(text, key):
    try:
        return float(text)
    except ValueError:
        raise DomainError(f"{key}: expected a number, got {text!r}") from None


def _parse_int(text, key):
    try:
        return int(text)
    except ValueError:
        raise DomainError(f"{key}: expected an integer, got {text!r}") from None


def parse_params(text: str) -> WrightParams:
    """'alpha,beta,gamma,delta' -> WrightParams."""
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 4:
        raise DomainError(f"expected 'alpha,beta,gamma,delta', got {text!r}")
    return WrightParams(*(_parse_float(s, "params") for s in parts))


def parse_complex(text: str) -> complex:
    """'re' or 're,im' -> complex."""
    parts = [s.strip() for s in text.split(",")]
    if len(parts) not in (1, 2):
        raise DomainError(f"expected 're' or 're,im', got {text!r}")
    re = _parse_float(parts[0], "complex")
    im = _parse_float(parts[1], "complex") if len(parts) == 2 else 0.0
    return complex(re, im)


def parse_float_list(text: str):
    text = text.strip()
    if not text:
        return []
    return [_parse_float(s, "list") for s in text.split(",")]


def _fmt(x: float) -> str:
    return f"{float(x):.16g}"


def _csv_num(x: float) -> str:
    return f"{float(x):.17g}"


# ------------------------- config file / merging ----------------------------


def load_config(path: str, allowed) -> dict:
    """Read 'key = value' lines; '#' starts a comment; unknown keys rejected."""
    merged = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise DomainError(f"cannot read config file {path}: {exc}") from None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"{path}:{lineno}: expected 'key = value', got {raw.rstrip()!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in allowed:
            raise DomainError(f"{path}:{lineno}: unknown key {key!r}")
        merged[key] = value
    return merged


def _effective_options(cmd: str, args: argparse.Namespace) -> dict:
    """defaults < config file < explicit flags, all at string level."""
    table = dict(_GLOBAL_DEFAULTS)
    table.update(_CMD_DEFAULTS[cmd])
    if args.config:
        for key, value in load_config(args.config, set(table)).items():
            table[key] = [s.strip() for s in value.split(";")] if key in _LIST_OPTIONS else value
    for key in list(table):
        provided = getattr(args, key.replace("-", "_"), None)
        if provided not in (None, []):
            table[key] = provided
    missing = sorted(k for k, v in table.items() if v is None)
    if missing:
        raise DomainError(f"missing required option(s): {', '.join('--' + m for m in missing)}")
    return table


def _show_config(cmd: str, opts: dict) -> None:
    print(f"# effective configuration ({cmd})")
    for key in sorted(opts):
        value = opts[key]
        if isinstance(value, list):
            value = "; ".join(value)
        print(f"{key} = {value}")


def _ctrl(opts) -> SeriesControl:
    return SeriesControl(
        _parse_int(opts["ctrl-max-terms"], "ctrl-max-terms"),
        _parse_float(opts["ctrl-tol"], "ctrl-tol"),
    )


def _conv_spec(opts) -> ConvolutionSpec:
    p1 = parse_params(opts["p1"])
    p2 = parse_params(opts["p2"]) if opts["p2"] else p1
    return ConvolutionSpec(p1, p2, parse_complex(opts["sigma"]))


# ------------------------------ coefficient csv -----------------------------


def write_coeff_csv(path: str, f: CoefficientSeq) -> None:
    """Serialize a CoefficientSeq as rows part,n,re,im (part 'a' from n=2, 'b' from n=1)."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["part", "n", "re", "im"])
        for k, v in enumerate(f.a):
            writer.writerow(["a", k + 2, _csv_num(v.real), _csv_num(v.imag)])
        for k, v in enumerate(f.b):
            writer.writerow(["b", k + 1, _csv_num(v.real), _csv_num(v.imag)])


def read_coeff_csv(path: str) -> CoefficientSeq:
    a_vals, b_vals = {}, {}
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [s.strip() for s in header] != ["part", "n", "re", "im"]:
            raise DomainError(f"{path}: expected header 'part,n,re,im'")
        for row in reader:
            if not row:
                continue
            if len(row) != 4:
                raise DomainError(f"{path}: malformed row {row!r}")
            part, n = row[0].strip(), _parse_int(row[1], "n")
            val = complex(_parse_float(row[2], "re"), _parse_float(row[3], "im"))
            if part == "a" and n >= 2:
                a_vals[n] = val
            elif part == "b" and n >= 1:
                b_vals[n] = val
            else:
                raise DomainError(f"{path}: bad part/index {part!r}/{n}")
    a = np.zeros(max(a_vals, default=1) - 1, dtype=complex)
    for n, v in a_vals.items():
        a[n - 2] = v
    b = np.zeros(max(b_vals, default=0), dtype=complex)
    for n, v in b_vals.items():
        b[n - 1] = v
    return CoefficientSeq(a, b)


# --------------------------------- commands ---------------------------------


def _cmd_eval(opts) -> int:
    p = parse_params(opts["p"])
    z = parse_complex(opts["z"])
    ctrl = _ctrl(opts)
    w = wright_eval(p, z, ctrl)
    nv = normalized_eval(p, z, ctrl)
    print(f"wright = {_fmt(w.real)},{_fmt(w.imag)}")
    print(f"normalized = {_fmt(nv.real)},{_fmt(nv.imag)}")
    return EXIT_OK


def _cmd_derivs(opts) -> int:
    d = derivs_at_one(parse_params(opts["p"]), _ctrl(opts))
    for name in ("w1", "wp1", "wpp1", "wppp1"):
        print(f"{name} = {_fmt(getattr(d, name))}")
    return EXIT_OK


def _report_line(rep) -> str:
    return (
        f"{rep.id} {rep.form}: lhs={_fmt(rep.lhs)} rhs={_fmt(rep.rhs)} "
        f"margin={_fmt(rep.margin)} satisfied={str(rep.satisfied).lower()}"
    )


def _cmd_check(theorem: str, opts) -> int:
    gate = opts["gate"]
    if gate not in ("stated", "derived"):
        raise DomainError(f"gate must be 'stated' or 'derived', got {gate!r}")
    stated, derived = stated_hypothesis(
        theorem,
        _conv_spec(opts),
        _parse_float(opts["order"], "order"),
        _parse_float(opts["b1"], "b1"),
        _ctrl(opts),
    )
    print(_report_line(stated))
    print(_report_line(derived))
    gated = derived if gate == "derived" else stated
    print(f"gate={gate} result={'pass' if gated.satisfied else 'fail'}")
    return EXIT_OK if gated.satisfied else EXIT_FAIL


def _axis_values(start: float, stop: float, step: float):
    if step <= 0:
        raise DomainError(f"axis step must be > 0, got {step}")
    values = []
    k = 0
    while True:
        v = start + k * step
        if v > stop + 1e-12 * max(1.0, abs(step)):
            break
        values.append(v)
        k += 1
    if not values:
        raise DomainError(f"axis produced no values (start={start}, stop={stop}, step={step})")
    return values


def _parse_axis(text: str):
    if "=" not in text:
        raise DomainError(f"axis must look like 'name=start:stop:step', got {text!r}")
    name, spec = (s.strip() for s in text.split("=", 1))
    if name not in _PARAM_NAMES:
        raise DomainError(f"unknown scan parameter {name!r}; known: {', '.join(_PARAM_NAMES)}")
    parts = spec.split(":")
    if len(parts) != 3:
        raise DomainError(f"axis range must be 'start:stop:step', got {spec!r}")
    start, stop, step = (_parse_float(s, name) for s in parts)
    return name, _axis_values(start, stop, step)


def _parse_fix(text: str):
    if "=" not in text:
        raise DomainError(f"fix must look like 'name=value', got {text!r}")
    name, value = (s.strip() for s in text.split("=", 1))
    if name not in _PARAM_NAMES:
        raise DomainError(f"unknown scan parameter {name!r}; known: {', '.join(_PARAM_NAMES)}")
    return name, _parse_float(value, name)


def _point_reports(theorem, values, ctrl):
    p1 = WrightParams(values["alpha1"], values["beta1"], values["gamma1"], values["delta1"])
    p2 = WrightParams(values["alpha2"], values["beta2"], values["gamma2"], values["delta2"])
    spec = ConvolutionSpec(p1, p2, values["sigma"])
    return stated_hypothesis(theorem, spec, values["order"], values["b1"], ctrl)


def _cmd_scan(theorem: str, opts) -> int:
    base = {name: 1.0 for name in _PARAM_NAMES}
    base.update({"sigma": 0.0, "order": 0.0, "b1": 0.0})
    for text in opts["fix"]:
        name, value = _parse_fix(text)
        base[name] = value
    axes = [_parse_axis(text) for text in opts["axis"]]
    if not axes:
        raise DomainError("scan needs at least one --axis")
    ctrl = _ctrl(opts)
    rows = []
    for combo in itertools.product(*(vals for _, vals in axes)):
        values = dict(base)
        for (name, _), v in zip(axes, combo):
            values[name] = v
        stated, derived = _point_reports(theorem, values, ctrl)
        rows.append(
            [theorem]
            + [_csv_num(values[name]) for name in _PARAM_NAMES]
            + [
                _csv_num(stated.lhs),
                _csv_num(stated.rhs),
                str(stated.satisfied).lower(),
                _csv_num(derived.lhs),
                _csv_num(derived.rhs),
                str(derived.satisfied).lower(),
            ]
        )
    with open(opts["out"], "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["theorem"] + _SCAN_HEADER)
        writer.writerows(rows)
    print(f"wrote {len(rows)} rows to {opts['out']}")
    return EXIT_OK


def _verify_sources(opts, rng):
    source = opts["f"]
    nmax = _parse_int(opts["nmax"], "nmax")
    if source == "identity":
        return [CoefficientSeq()]
    if source == "random":
        count = _parse_int(opts["count"], "count")
        if count < 1:
            raise DomainError(f"count must be >= 1, got {count}")
        return [random_coefficients(rng, nmax) for _ in range(count)]
    if source.startswith("classbound:"):
        klass = source.split(":", 1)[1]
        a_abs, b_abs = class_bound_coeffs(klass, _parse_float(opts.get("b1", "0"), "b1"), nmax)
        return [CoefficientSeq(a_abs.astype(complex), b_abs.astype(complex))]
    if source.startswith("file:"):
        return [read_coeff_csv(source.split(":", 1)[1])]
    raise DomainError(
        f"f source must be identity, random, classbound:<class> or file:<path>, got {source!r}"
    )


def _cmd_verify(theorem: str, opts) -> int:
    if theorem not in THEOREM_IDS:
        raise DomainError(f"unknown theorem id {theorem!r}")
    gate = opts["gate"]
    if gate not in ("stated", "derived"):
        raise DomainError(f"gate must be 'stated' or 'derived', got {gate!r}")
    spec = _conv_spec(opts)
    order = _parse_float(opts["order"], "order")
    ctrl = _ctrl(opts)
    grid = SampleGrid(
        tuple(parse_float_list(opts["radii"])), _parse_int(opts["theta-count"], "theta-count")
    )
    rng = np.random.default_rng(_parse_int(opts["seed"], "seed"))
    counts = {"CONSISTENT": 0, "VACUOUS": 0, "COUNTEREXAMPLE": 0}
    for k, f in enumerate(_verify_sources(opts, rng)):
        img = convolve(f, spec)
        b1_eff = abs(img.g[1]) if img.g.size > 1 else 0.0
        stated, derived = stated_hypothesis(theorem, spec, order, b1_eff, ctrl)
        gated = derived if gate == "derived" else stated
        if not gated.satisfied:
            counts["VACUOUS"] += 1
            print(f"f[{k}]: VACUOUS ({gated.form} lhs={_fmt(gated.lhs)} > rhs={_fmt(gated.rhs)})")
            continue
        if theorem in _STARLIKE_THEOREMS or theorem in _CONVEX_THEOREMS:
            quantity = "dtheta_arg_f" if theorem in _STARLIKE_THEOREMS else "dtheta_arg_ftheta"
            rep = sweep(img, grid, quantity, order - 1e-9)
            if rep.violations:
                v = rep.violations[0]
                counts["COUNTEREXAMPLE"] += 1
                print(
                    f"f[{k}]: COUNTEREXAMPLE {quantity} at r={_fmt(v.point.r)} "
                    f"theta={_fmt(v.point.theta)} value={_fmt(v.value)} ({v.kind})"
                )
            else:
                counts["CONSISTENT"] += 1
                print(f"f[{k}]: CONSISTENT (min {quantity} = {_fmt(rep.min_value)})")
        else:
            probes = close_to_convex_probe(img)
            failing = [p for p in probes if not p.satisfied]
            if failing:
                counts["COUNTEREXAMPLE"] += 1
                print(f"f[{k}]: COUNTEREXAMPLE close-to-convex probe {failing[0].id} "
                      f"lhs={_fmt(failing[0].lhs)} > 1")
            else:
                counts["CONSISTENT"] += 1
                print(f"f[{k}]: CONSISTENT (all {len(probes)} epsilon probes pass)")
    print(
        f"verdicts: {counts['CONSISTENT']} consistent, {counts['VACUOUS']} vacuous, "
        f"{counts['COUNTEREXAMPLE']} counterexample"
    )
    return EXIT_FAIL if counts["COUNTEREXAMPLE"] else EXIT_OK


# --------------------------------- rendering --------------------------------


def sample_boundary_curves(img: ImageCoefficients, radii, theta_count: int):
    """Image of each circle |z| = r under the mapping, sampled at theta_count angles."""
    radii = [float(r) for r in radii]
    if not radii:
        raise DomainError("radii must be non-empty")
    if not all(0 < r < 1 for r in radii):
        raise DomainError(f"every radius must lie in (0, 1), got {radii}")
    if theta_count < 64:
        raise DomainError(f"theta_count must be >= 64, got {theta_count}")
    thetas = 2 * np.pi * np.arange(theta_count) / theta_count
    curves = []
    for r in radii:
        z = r * np.exp(1j * thetas)
        curves.append(npoly.polyval(z, img.h) + np.conj(npoly.polyval(z, img.g)))
    return curves


def curves_to_svg(curves, width: int, height: int) -> str:
    """SVG 1.1 document: one closed polyline per curve plus coordinate axes."""
    if width < 1 or height < 1:
        raise DomainError(f"width/height must be >= 1, got {width}x{height}")
    xs = np.concatenate([c.real for c in curves] + [np.zeros(1)])
    ys = np.concatenate([-c.imag for c in curves] + [np.zeros(1)])  # screen y grows downward
    xmin, xmax = float(xs.min()), float(xs.max())
    ymin, ymax = float(ys.min()), float(ys.max())
    span = max(xmax - xmin, ymax - ymin, 1e-9)
    pad = 0.05 * span
    vb = (xmin - pad, ymin - pad, (xmax - xmin) + 2 * pad, (ymax - ymin) + 2 * pad)
    stroke = span / 400
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="{vb[0]:.12g} {vb[1]:.12g} {vb[2]:.12g} {vb[3]:.12g}">',
        f'  <line x1="{vb[0]:.12g}" y1="0" x2="{vb[0] + vb[2]:.12g}" y2="0" '
        f'stroke="#999" stroke-width="{stroke:.12g}"/>',
        f'  <line x1="0" y1="{vb[1]:.12g}" x2="0" y2="{vb[1] + vb[3]:.12g}" '
        f'stroke="#999" stroke-width="{stroke:.12g}"/>',
    ]
    for curve in curves:
        closed = np.concatenate([curve, curve[:1]])
        points = " ".join(f"{p.real:.12g},{-p.imag:.12g}" for p in closed)
        lines.append(
            f'  <polyline fill="none" stroke="#1f4e9c" stroke-width="{2 * stroke:.12g}" '
            f'points="{points}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _cmd_render(opts) -> int:
    radii = parse_float_list(opts["radii"])
    theta_count = _parse_int(opts["theta-count"], "theta-count")
    width = _parse_int(opts["width"], "width")
    height = _parse_int(opts["height"], "height")
    rng = np.random.default_rng(_parse_int(opts["seed"], "seed"))
    nmax = _parse_int(opts["nmax"], "nmax")

    source = opts["f"]
    if source == "identity":
        f = CoefficientSeq()
    elif source == "random":
        f = random_coefficients(rng, nmax)
        scale = 0.45 / max(np.abs(f.a).sum() + np.abs(f.b).sum(), 1.0)  # keep it univalent-ish
        f = CoefficientSeq(f.a * scale, f.b * scale)
    elif source.startswith("file:"):
        f = read_coeff_csv(source.split(":", 1)[1])
    else:
        raise DomainError(f"render f source must be identity, random or file:<path>, got {source!r}")

    if opts["p1"] or opts["p2"] or opts["sigma"]:
        p1 = parse_params(opts["p1"]) if opts["p1"] else WrightParams(1, 1, 1, 1)
        p2 = parse_params(opts["p2"]) if opts["p2"] else p1
        sigma = parse_complex(opts["sigma"]) if opts["sigma"] else 0j
        img = convolve(f, ConvolutionSpec(p1, p2, sigma))
    else:
        img = ImageCoefficients(f.a, f.b)

    curves = sample_boundary_curves(img, radii, theta_count)
    svg = curves_to_svg(curves, width, height)
    with open(opts["out"], "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {opts['out']} ({len(curves)} curves, {theta_count} points each)")
    return EXIT_OK


# ----------------------------------- main -----------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ctrl-max-terms", type=str)
    common.add_argument("--ctrl-tol", type=str)
    common.add_argument("--config", type=str)
    common.add_argument("--seed", type=str)
    common.add_argument("--show-config", action="store_true")

    parser = argparse.ArgumentParser(
        prog="wrightmaps",
        description="Wright-kernel harmonic mapping toolkit: evaluate, check, scan, verify, render.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate the series at a point")
    p_eval.add_argument("--p", type=str)
    p_eval.add_argument("--z", type=str)

    p_derivs = sub.add_parser("derivs", parents=[common], help="derivative values at z = 1")
    p_derivs.add_argument("--p", type=str)

    p_check = sub.add_parser("check", parents=[common], help="check one sufficient condition")
    p_check.add_argument("theorem", choices=THEOREM_IDS)
    for flag in ("--p1", "--p2", "--sigma", "--order", "--b1", "--gate"):
        p_check.add_argument(flag, type=str)

    p_scan = sub.add_parser("scan", parents=[common], help="grid scan to CSV")
    p_scan.add_argument("theorem", choices=THEOREM_IDS)
    p_scan.add_argument("--axis", action="append", type=str)
    p_scan.add_argument("--fix", action="append", type=str)
    p_scan.add_argument("--out", type=str)

    p_verify = sub.add_parser("verify", parents=[common], help="criteria vs geometric oracle")
    p_verify.add_argument("theorem", choices=THEOREM_IDS)
    for flag in (
        "--p1",
        "--p2",
        "--sigma",
        "--order",
        "--b1",
        "--f",
        "--count",
        "--nmax",
        "--radii",
        "--theta-count",
        "--gate",
    ):
        p_verify.add_argument(flag, type=str)

    p_render = sub.add_parser("render", parents=[common], help="boundary curves to SVG")
    for flag in (
        "--f",
        "--p1",
        "--p2",
        "--sigma",
        "--nmax",
        "--radii",
        "--theta-count",
        "--width",
        "--height",
        "--out",
    ):
        p_render.add_argument(flag, type=str)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    cmd = args.command
    try:
        opts = _effective_options(cmd, args)
        if args.show_config:
            _show_config(cmd, opts)
        if cmd == "eval":
            return _cmd_eval(opts)
        if cmd == "derivs":
            return _cmd_derivs(opts)
        if cmd == "check":
            return _cmd_check(args.theorem, opts)
        if cmd == "scan":
            return _cmd_scan(args.theorem, opts)
        if cmd == "verify":
            return _cmd_verify(args.theorem, opts)
        if cmd == "render":
            return _cmd_render(opts)
        raise DomainError(f"unknown command {cmd!r}")
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONV
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
