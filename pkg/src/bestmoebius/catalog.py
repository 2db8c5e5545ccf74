"""Named maps and the textual map-spec grammar used by the CLI and config files.

Grammar (complex literals as ``a+bi``, angles in radians)::

    strip | koebe | sector[:alpha] | lens[:alpha]
    moebius:a,b,c,d | polynomial:c0,c1,...
    square | equilateral | triangle[:a1,a2,a3] | pentagon
    ext-square | blaschke-in:z1;z2;... | blaschke-ext:z1;z2;...
    dual:<spec> | shift:<a>:<spec> | file:<path>
"""
import configparser
import json
import re
from dataclasses import dataclass, field

import numpy as np

from .blaschke import BlaschkeProduct
from .errors import BadParameter
from .maps import dual_map, make_builtin, precompose_automorphism
from .polygon import (PolygonData, exterior_from_blaschke, exterior_from_data,
                      interior_from_blaschke, interior_from_data,
                      triangle_prevertices_normalized)

SQUARE = PolygonData((0.0, np.pi / 2, np.pi, 3 * np.pi / 2), (0.5, 0.5, 0.5, 0.5))
PENTAGON = PolygonData((0.0, 1.1, 2.3, 3.9, 5.0), (0.3, 0.45, 0.5, 0.35, 0.4))
SCALENE = (0.5, 0.7, 0.8)


def parse_complex(text):
    s = text.strip().replace(" ", "").replace("i", "j")
    try:
        return complex(s)
    except ValueError:
        raise BadParameter(f"bad complex literal {text!r}") from None


def _floats(text):
    return [float(x) for x in text.split(",") if x.strip()]


def build(spec, named=None):
    """Construct a map from its textual spec; ``named`` resolves config names."""
    spec = spec.strip()
    if named and spec in named:
        return named[spec]
    head, _, rest = spec.partition(":")
    head = head.lower()
    if head in ("strip", "koebe"):
        return make_builtin(head)
    if head in ("sector", "lens"):
        return make_builtin(head, alpha=float(rest) if rest else (1.0 if head == "sector" else 0.5))
    if head == "moebius":
        return make_builtin("moebius", coeffs=[parse_complex(x) for x in rest.split(",")])
    if head == "polynomial":
        return make_builtin("polynomial", coeffs=[parse_complex(x) for x in rest.split(",")])
    if head == "square":
        return interior_from_data(SQUARE)
    if head == "pentagon":
        return interior_from_data(PENTAGON)
    if head == "equilateral":
        return interior_from_blaschke(BlaschkeProduct([0.0, 0.0]))
    if head == "triangle":
        angles = _floats(rest) if rest else SCALENE
        return interior_from_data(triangle_prevertices_normalized(angles))
    if head == "ext-square":
        return exterior_from_blaschke(BlaschkeProduct([0.0, 0.0, 0.0]))
    if head in ("blaschke-in", "blaschke-ext"):
        zeros = [parse_complex(x) for x in rest.split(";") if x.strip()]
        B = BlaschkeProduct(zeros)
        return interior_from_blaschke(B) if head == "blaschke-in" else exterior_from_blaschke(B)
    if head == "dual":
        return dual_map(build(rest, named))
    if head == "shift":
        a, _, inner = rest.partition(":")
        return precompose_automorphism(build(inner, named), parse_complex(a))
    if head == "file":
        return load_map_file(rest, named)
    raise BadParameter(f"unknown map spec {spec!r}")


def parse_keyvalue(text):
    """Flat ``key = value`` text; lists in JSON syntax, everything else a bare string."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise BadParameter(f"line {lineno}: expected key = value")
        value = value.strip()
        if value.startswith("["):
            try:
                out[key.strip()] = json.loads(value)
            except json.JSONDecodeError as exc:
                raise BadParameter(f"line {lineno}: {exc}") from None
        else:
            out[key.strip()] = value
    return out


def map_from_definition(d, named=None):
    kind = d.get("kind", "interior").lower()
    if "spec" in d:
        return build(d["spec"], named)
    if kind not in ("interior", "exterior"):
        raise BadParameter(f"unknown polygon kind {kind!r}")
    if "angles" not in d:
        raise BadParameter("polygon definition needs angles = [...]")
    alphas = [float(a) for a in d["angles"]]
    if "prevertices" in d:
        data = PolygonData(tuple(float(t) for t in d["prevertices"]), tuple(alphas))
    elif len(alphas) == 3:
        data = triangle_prevertices_normalized(alphas)
    else:
        raise BadParameter("prevertices = [...] required unless the polygon is a triangle")
    return interior_from_data(data) if kind == "interior" else exterior_from_data(data)


def load_map_file(path, named=None):
    with open(path) as fh:
        return map_from_definition(parse_keyvalue(fh.read()), named)


def definition_text(f, source_spec):
    """Key-value text that rebuilds ``f`` (polygon data when available)."""
    data = getattr(f, "data", None)
    if data is not None:
        kind = "exterior" if f.exterior else "interior"
        return (f"kind = {kind}\n"
                f"angles = {json.dumps([float(a) for a in data.alphas])}\n"
                f"prevertices = {json.dumps([float(t) for t in data.angles])}\n")
    return f"spec = {source_spec}\n"


@dataclass
class RunConfig:
    """Named maps, tolerances, grid and output settings from an INI-style file."""

    maps: dict = field(default_factory=dict)
    quad_tol: float = 1e-12
    grid: tuple = (50, 128, 0.999)
    output_dir: str = "."
    formats: tuple = ("csv",)

    @classmethod
    def load(cls, path):
        cp = configparser.ConfigParser(interpolation=None)
        if not cp.read(path):
            raise BadParameter(f"cannot read config {path!r}")
        cfg = cls()
        pending = {}
        for section in cp.sections():
            if section.startswith("map "):
                pending[section[4:].strip()] = dict(cp[section])
        for name, d in pending.items():
            parsed = {k: (json.loads(v) if v.strip().startswith("[") else v) for k, v in d.items()}
            cfg.maps[name] = map_from_definition(parsed, cfg.maps)
        if cp.has_section("quadrature"):
            cfg.quad_tol = cp["quadrature"].getfloat("tol", cfg.quad_tol)
            if cfg.quad_tol <= 0:
                raise BadParameter("quadrature tol must be positive")
        if cp.has_section("grid"):
            g = cp["grid"]
            n_r, n_t = parse_grid(g.get("shape", f"{cfg.grid[0]}x{cfg.grid[1]}"))
            cfg.grid = (n_r, n_t, g.getfloat("rmax", cfg.grid[2]))
        if cp.has_section("output"):
            cfg.output_dir = cp["output"].get("dir", cfg.output_dir)
            cfg.formats = tuple(x.strip() for x in cp["output"].get("formats", "csv").split(","))
        return cfg


def parse_grid(text):
    m = re.fullmatch(r"\s*(\d+)\s*x\s*(\d+)\s*", text)
    if not m:
        raise BadParameter(f"grid must look like 64x128, got {text!r}")
    n_r, n_t = int(m.group(1)), int(m.group(2))
    if n_r < 1 or n_t < 1:
        raise BadParameter("grid sizes must be positive")
    return n_r, n_t
