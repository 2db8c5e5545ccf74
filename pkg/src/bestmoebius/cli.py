"""Command-line front end: ``bestmoebius <command> ...``.

Exit status is 0 on success, 1 on bad input or a numerical precondition
failure (one-line diagnostic on stderr), 2 when a ``verify`` suite fails.
"""
import argparse
import csv
import json
import os
import sys

import numpy as np

from . import catalog
from .boundary import (pole_locus, prevertex_arc, profile_shape_check, arc_integrals,
                       triangle_balance)
from .convexity import concavity_report, convexity_report
from .errors import BMAError, BadParameter
from .maps import dual_map
from .moebius import INFINITY, bma, classify_pole, region_sample
from .polygon import (PolygonData, exterior_from_data, interior_from_data, side_lengths,
                      triangle_prevertices_normalized, turning_angles, vertices_of)
from .verification import CHECKS, run_check

FMT = ".17g"


def fnum(x):
    return format(float(x), FMT)


def fcomplex(z):
    if z is INFINITY or not np.isfinite(z):
        return "inf"
    z = complex(z)
    im = format(z.imag, FMT)
    sign = "" if im.startswith("-") else "+"
    return f"{format(z.real, FMT)}{sign}{im}i"


def _floats(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise BadParameter(f"expected comma-separated numbers, got {text!r}") from None


def _window(text):
    vals = [float(x) for x in text.split(":")]
    if len(vals) != 4 or vals[0] >= vals[1] or vals[2] >= vals[3]:
        raise BadParameter("window must be h0:h1:k0:k1 with h0 < h1 and k0 < k1")
    return tuple(vals)


class Context:
    def __init__(self, args):
        self.config = catalog.RunConfig.load(args.config) if args.config else catalog.RunConfig()
        self.out = sys.stdout

    def map(self, spec):
        return catalog.build(spec, self.config.maps)

    def grid(self, text, rmax):
        if text is None:
            n_r, n_t, r = self.config.grid
        else:
            (n_r, n_t), r = catalog.parse_grid(text), self.config.grid[2]
        return n_r, n_t, rmax if rmax is not None else r

    def path(self, name):
        """Output path; relative names land in the configured output directory."""
        if name is None or os.path.isabs(name):
            return name
        return os.path.join(self.config.output_dir, name)

    def print(self, *parts):
        print(*parts, file=self.out)


def _write_csv(path, header, rows, ctx):
    path = ctx.path(path)
    fh = open(path, "w", newline="") if path else ctx.out
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    finally:
        if path:
            fh.close()


# commands ------------------------------------------------------------------

def cmd_eval(args, ctx):
    f = ctx.map(args.map)
    j = f.jet(catalog.parse_complex(args.z))
    for name in ("f0", "f1", "f2", "f3"):
        ctx.print(f"{name} = {fcomplex(getattr(j, name))}")


def cmd_bma(args, ctx):
    f = ctx.map(args.map)
    zeta = catalog.parse_complex(args.z)
    T = bma(f, zeta)
    for name in "abcd":
        ctx.print(f"{name} = {fcomplex(getattr(T, name))}")
    ctx.print(f"det = {fcomplex(T.det)}")
    ctx.print(f"pole = {fcomplex(T.pole)}")


def cmd_classify(args, ctx):
    c = classify_pole(ctx.map(args.map), catalog.parse_complex(args.z))
    ctx.print(f"h = {fnum(c.h)}")
    ctx.print(f"k = {fnum(c.k)}")
    ctx.print(f"class = {c.cls}")
    ctx.print(f"pole = {fcomplex(c.pole)}")
    ctx.print(f"collinear = {str(c.collinear).lower()}")
    ctx.print(f"antipodal = {str(c.antipodal).lower()}")


def cmd_shape(args, ctx):
    f = ctx.map(args.map)
    grid = ctx.grid(args.grid, args.rmax)
    r = concavity_report(f, grid) if f.exterior else convexity_report(f, grid)
    z, mod, ratio = r.extremal_sample
    ctx.print(f"verdict = {r.verdict}")
    ctx.print(f"grid = {grid[0]}x{grid[1]} rmax={fnum(grid[2])}")
    ctx.print(f"min_pole = {fnum(r.min_pole)}")
    ctx.print(f"max_pole = {fnum(r.max_pole)}")
    ctx.print(f"extremal_zeta = {fcomplex(z)}")
    ctx.print(f"extremal_pole_modulus = {fnum(mod)}")
    ctx.print(f"{'omega' if f.exterior else 'phi'}_modulus = {fnum(ratio)}")
    if f.exterior:
        ctx.print(f"weak_violations = {r.weak_violations}")


def cmd_dual(args, ctx):
    f = ctx.map(args.map)
    g = dual_map(f)
    data = getattr(f, "data", None)
    if data is not None and not f.exterior:
        text = (f"kind = exterior\nangles = {json.dumps([float(a) for a in data.alphas])}\n"
                f"prevertices = {json.dumps([float(t) for t in data.angles])}\n")
    else:
        text = f"spec = dual:{args.map}\n"
    if args.out:
        with open(ctx.path(args.out), "w") as fh:
            fh.write(text)
        ctx.print(f"wrote {args.out} ({'exterior' if g.exterior else 'interior'} dual)")
    else:
        ctx.out.write(text)


def cmd_polygon(args, ctx):
    if args.file:
        f = catalog.load_map_file(args.file, ctx.config.maps)
        data = getattr(f, "data", None)
        if data is None:
            raise BadParameter("polygon file must describe angles/prevertices")
    else:
        if not args.angles:
            raise BadParameter("give --angles or --file")
        alphas = _floats(args.angles)
        if args.prevertices:
            data = PolygonData(tuple(_floats(args.prevertices)), tuple(alphas))
        elif len(alphas) == 3:
            data = triangle_prevertices_normalized(alphas)
        else:
            raise BadParameter("--prevertices required unless the polygon is a triangle")
        f = exterior_from_data(data) if args.exterior else interior_from_data(data)
    v = vertices_of(f)
    ctx.print(f"kind = {'exterior' if f.exterior else 'interior'}")
    ctx.print(f"moment = {fcomplex(data.moment())}")
    ctx.print("k,prevertex,alpha,vertex_re,vertex_im,turning,side")
    turns, sides = turning_angles(v), side_lengths(v)
    for k in range(data.n):
        ctx.print(",".join([str(k), fnum(data.angles[k]), fnum(data.alphas[k]), fnum(v[k].real),
                            fnum(v[k].imag), fnum(turns[k]), fnum(sides[k])]))


def cmd_locus(args, ctx):
    f = ctx.map(args.map)
    loc = pole_locus(f, prevertex_arc(f, args.arc), n_samples=args.samples)
    rows = [(fnum(t), fnum(p.real), fnum(p.imag), fnum(a))
            for t, p, a in zip(loc.t, loc.poles, loc.unwrapped_arg)]
    _write_csv(args.out, ("t", "re_p", "im_p", "arg_unwrapped"), rows, ctx)
    if args.out:
        ctx.print(f"direction = {loc.direction}")
        ctx.print(f"variation = {fnum(loc.variation)}")
        ctx.print(f"start = {fcomplex(loc.start)}")
        ctx.print(f"end = {fcomplex(loc.end)}")
        ctx.print(f"min_gap = {fnum(loc.min_gap)}")


def cmd_profile(args, ctx):
    f = ctx.map(args.map)
    rep = profile_shape_check(f, prevertex_arc(f, args.arc), n=args.samples)
    speed = rep.profile ** -2.0
    rows = [(fnum(t), fnum(s), fnum(u)) for t, s, u in zip(rep.t, speed, rep.profile)]
    _write_csv(args.out, ("t", "speed", "profile"), rows, ctx)
    stream = ctx.out if args.out else sys.stderr
    print(f"shape = {rep.shape}", file=stream)
    print(f"verdict = {'PASS' if rep.ok else 'FAIL'}", file=stream)
    print(f"second_diff_max = {fnum(rep.second_diff_max)}", file=stream)
    print(f"second_diff_min = {fnum(rep.second_diff_min)}", file=stream)
    print(f"scale = {fnum(rep.scale)}", file=stream)


def cmd_arcs(args, ctx):
    f = ctx.map(args.map)
    if f.prevertex_angles is None:
        raise BadParameter(f"{f.kind}: not a polygon map")
    ctx.print("k,t_start,t_end,int_speed,int_inverse_speed,ratio")
    for k in range(len(f.prevertex_angles)):
        arc = prevertex_arc(f, k)
        i1, i2 = arc_integrals(f, k)
        ctx.print(",".join([str(k), fnum(arc.t_start), fnum(arc.t_end), fnum(i1), fnum(i2),
                            fnum(i1 / i2)]))
    if len(f.prevertex_angles) == 3 and not f.exterior:
        r = triangle_balance(f, tol=args.tol)
        ctx.print(f"verdict = {r.verdict}")
        ctx.print(f"spread = {fnum(r.spread)}")
        if r.bound:
            ctx.print(f"b = {fnum(r.bound['b'])}")
            ctx.print(f"C = {fnum(r.bound['C'])}")
            ctx.print(f"sandwich = {'holds' if r.bound['holds'] else 'violated'}")


def _svg(ras, window, size=600):
    h0, h1, k0, k1 = window
    nx, ny = len(ras.h), len(ras.k)
    cw, ch = size / nx, size / ny
    colours = {-1: "#9bb7d4", 0: "#222222", 1: "#f3d9a4"}

    def px(h, k):
        return (h - h0) / (h1 - h0) * size, (k1 - k) / (k1 - k0) * size

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">']
    for j in range(ny):
        row = ras.classes[j]
        start = 0
        for i in range(1, nx + 1):
            if i == nx or row[i] != row[start]:
                y = (ny - 1 - j) * ch
                out.append(f'<rect x="{start * cw:.3f}" y="{y:.3f}" width="{(i - start) * cw:.3f}" '
                           f'height="{ch:.3f}" fill="{colours[int(row[start])]}"/>')
                start = i
    x0, _ = px(0.0, 0.0)
    out.append(f'<line x1="{x0:.3f}" y1="0" x2="{x0:.3f}" y2="{size}" stroke="#000" '
               f'stroke-width="1.5"/>')
    for m in ras.landmarks:
        x, y = px(m["h"], m["k"])
        p = "inf" if not np.isfinite(m["pole"]) else f"{m['pole'].real:g}{m['pole'].imag:+g}i"
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="4" fill="#c00"/>')
        out.append(f'<text x="{x + 6:.3f}" y="{y - 6:.3f}" font-size="12" '
                   f'font-family="sans-serif">({m["h"]:g}, {m["k"]:g}): p = {p}</text>')
    out.append(f'<text x="8" y="{size - 8}" font-size="12" font-family="sans-serif">'
               f'h &lt; 0: |p| &lt; |z|   h = 0: |p| = |z|   h &gt; 0: |p| &gt; |z|</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_regions(args, ctx):
    window = _window(args.window)
    ras = region_sample(args.grid, window)
    if args.out and args.out.endswith(".svg"):
        with open(ctx.path(args.out), "w") as fh:
            fh.write(_svg(ras, window))
    else:
        rows = []
        for j, k in enumerate(ras.k):
            for i, h in enumerate(ras.h):
                p = ras.poles[j, i]
                fin = np.isfinite(p)
                rows.append((fnum(h), fnum(k), int(ras.classes[j, i]),
                             fnum(p.real) if fin else "inf", fnum(p.imag) if fin else "inf"))
        _write_csv(args.out, ("h", "k", "class", "re_p", "im_p"), rows, ctx)
    if args.out:
        for m in ras.landmarks:
            ctx.print(f"landmark ({fnum(m['h'])}, {fnum(m['k'])}): p = {fcomplex(m['pole'])} "
                      f"[{m['name']}]")


def cmd_verify(args, ctx):
    ids = list(CHECKS) if args.check == "all" else [args.check]
    grid = ctx.grid(args.grid, args.rmax) if (args.grid or args.rmax) else None
    target = (args.map, ctx.map(args.map)) if args.map else None
    failed = False
    for cid in ids:
        res = run_check(cid, map=target, grid=grid)
        ctx.print(json.dumps({"id": res.id, "title": res.title,
                              "result": "PASS" if res.passed else "FAIL",
                              "assertions": len(res.lines),
                              "failures": sum(1 for l in res.lines if l.startswith("FAIL"))}))
        if args.verbose:
            for line in res.lines:
                ctx.print("  " + line)
        if not res.passed:
            failed = True
            print(res.summary(), file=sys.stderr)
            for line in res.lines:
                if line.startswith("FAIL"):
                    print("  " + line, file=sys.stderr)
    return 2 if failed else 0


# parser --------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="bestmoebius",
                                description="Best Moebius approximations of conformal maps.")
    p.add_argument("--config", help="INI file with [map NAME] sections and defaults")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, map_required=True):
        sp = sub.add_parser(name, help=help)
        if map_required:
            sp.add_argument("--map", required=True, help="map spec, config name or file:PATH")
        sp.set_defaults(func=func)
        return sp

    for name, func, text in (("eval", cmd_eval, "print the 3-jet of a map at a point"),
                             ("bma", cmd_bma, "print BMA coefficients and pole"),
                             ("classify", cmd_classify, "pole position relative to |z| = |zeta|")):
        add(name, func, text).add_argument("--z", required=True, help="point, e.g. 0.3+0.1i")

    sp = add("shape", cmd_shape, "convexity / concavity report on a polar grid")
    sp.add_argument("--grid", help="NRxNT, default 50x128")
    sp.add_argument("--rmax", type=float)

    sp = add("dual", cmd_dual, "write the definition of the dual map")
    sp.add_argument("--out")

    sp = add("polygon", cmd_polygon, "prevertices, vertices and sides of a polygon map",
             map_required=False)
    sp.add_argument("--angles", help="exterior angles / pi, comma separated")
    sp.add_argument("--prevertices", help="prevertex arguments in radians")
    sp.add_argument("--exterior", action="store_true")
    sp.add_argument("--file", help="key-value polygon definition")

    sp = add("locus", cmd_locus, "BMA pole locus along a prevertex arc (CSV)")
    sp.add_argument("--arc", type=int, default=0)
    sp.add_argument("--samples", type=int, default=720)
    sp.add_argument("--out")

    sp = add("profile", cmd_profile, "boundary speed profile on an arc (CSV + verdict)")
    sp.add_argument("--arc", type=int, default=0)
    sp.add_argument("--samples", type=int, default=2000)
    sp.add_argument("--out")

    sp = add("arcs", cmd_arcs, "arc integrals and triangle balance")
    sp.add_argument("--tol", type=float, default=1e-6)

    sp = add("regions", cmd_regions, "trichotomy raster in the (h, k)-plane (SVG or CSV)",
             map_required=False)
    sp.add_argument("--window", default="-3:3:-3:3")
    sp.add_argument("--grid", type=int, default=400)
    sp.add_argument("--out")

    sp = add("verify", cmd_verify, "run one acceptance suite", map_required=False)
    sp.add_argument("check", help=f"one of {', '.join(CHECKS)}, an alias, or 'all'")
    sp.add_argument("--map")
    sp.add_argument("--grid", help="NRxNT for shape suites")
    sp.add_argument("--rmax", type=float)
    sp.add_argument("-v", "--verbose", action="store_true")
    return p


VALUE_OPTIONS = ("--window", "--z", "--angles", "--prevertices")


def _glue_negative_values(argv):
    """Let ``--window -3:3:-3:3`` through argparse, which reads it as an option."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(_glue_negative_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        ctx = Context(args)
        code = args.func(args, ctx)
    except (BMAError, ValueError, OSError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
