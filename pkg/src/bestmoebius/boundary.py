"""Boundary behaviour of polygon maps: pole loci, speed profiles, arc integrals."""
from dataclasses import dataclass, field

import numpy as np

from .blaschke import circle_level_roots
from .errors import ArcCrossesPrevertex, BadParameter, NotATriangle
from .maps import Precomposed, schwarzian
from .quadrature import arc_integral

TWO_PI = 2 * np.pi


@dataclass(frozen=True)
class CircleArc:
    t_start: float
    t_end: float
    open_start: bool = True
    open_end: bool = True

    def __post_init__(self):
        if not self.t_start < self.t_end <= self.t_start + TWO_PI:
            raise BadParameter("arc needs t_start < t_end <= t_start + 2 pi")

    @property
    def length(self):
        return self.t_end - self.t_start

    def grid(self, n, margin=0.0):
        return np.linspace(self.t_start + margin, self.t_end - margin, n)


def prevertex_arc(f, k):
    """Open arc I_k from z_k to z_{k+1} (indices mod n)."""
    t = _angles(f)
    n = len(t)
    end = t[(k + 1) % n] + (TWO_PI if k + 1 >= n else 0.0)
    return CircleArc(float(t[k % n]), float(end))


def _angles(f):
    if f.prevertex_angles is None:
        raise BadParameter(f"{f.kind}: no prevertices")
    return np.asarray(f.prevertex_angles, dtype=float)


def _check_arc(f, arc):
    t = _angles(f)
    rel = np.mod(t - arc.t_start, TWO_PI)
    if np.any((rel > 1e-12) & (rel < arc.length - 1e-12)):
        raise ArcCrossesPrevertex("arc contains a prevertex in its interior")


def boundary_speed(f, t):
    """|f'(e^{it})|."""
    return f.boundary_speed(t)


@dataclass
class PoleLocus:
    t: np.ndarray
    poles: np.ndarray
    unwrapped_arg: np.ndarray
    start: complex = 0j
    end: complex = 0j
    direction: str = ""
    variation: float = 0.0
    min_gap: float = 0.0          # circular distance from the closed arc; < 0 means inside
    modulus_error: float = 0.0


def _gap_to_arc(theta, arc):
    rel = np.mod(theta - arc.t_start, TWO_PI)
    inside = rel <= arc.length
    dist = np.minimum(rel - arc.length, TWO_PI - rel)
    return np.where(inside, -np.minimum(rel, arc.length - rel), dist)


def pole_locus(f, arc, n_samples=720, eps=1e-11):
    """BMA poles p(e^{it}) along an arc between consecutive prevertices."""
    _check_arc(f, arc)
    n = int(n_samples)
    while True:
        t = np.linspace(arc.t_start + eps, arc.t_end - eps, n)
        z = np.exp(1j * t)
        P, _ = f.pre_schwarzian(z)
        p = z + 2 / P
        arg = np.unwrap(np.angle(p))
        if np.max(np.abs(np.diff(arg))) < np.pi / 4:
            break
        n *= 2
    d = np.diff(arg)
    direction = "decreasing" if np.all(d < 0) else "increasing" if np.all(d > 0) else "mixed"
    return PoleLocus(t, p, arg, start=complex(p[0]), end=complex(p[-1]), direction=direction,
                     variation=float(arg[-1] - arg[0]),
                     min_gap=float(np.min(_gap_to_arc(np.angle(p), arc))),
                     modulus_error=float(np.max(np.abs(np.abs(p) - 1))))


@dataclass
class ProfileReport:
    t: np.ndarray
    profile: np.ndarray            # u = |f'|^(-1/2) (or v for exterior maps)
    second_diff_max: float
    second_diff_min: float
    scale: float
    shape: str                     # "concave" or "convex" as required by the map kind
    ok: bool
    speed_convex: bool = True      # induced convexity of |f'| (interior maps)
    extras: dict = field(default_factory=dict)


def profile_shape_check(f, arc, n=2000, delta=None, tol=1e-8):
    """Second differences of |f'(e^{it})|^(-1/2) on the delta-shrunken arc.

    Interior maps must give a concave profile, exterior maps a convex one.
    """
    _check_arc(f, arc)
    if delta is None:
        delta = 1e-3 * arc.length
    t = arc.grid(n, delta)
    speed = f.boundary_speed(t)
    u = speed ** -0.5
    d2 = u[2:] - 2 * u[1:-1] + u[:-2]
    scale = float(np.max(np.abs(u)))
    if f.exterior:
        ok = bool(d2.min() >= -tol * scale)
        shape = "convex"
        speed_convex = True
    else:
        ok = bool(d2.max() <= tol * scale)
        shape = "concave"
        s2 = speed[2:] - 2 * speed[1:-1] + speed[:-2]
        speed_convex = bool(s2.min() >= -tol * float(np.max(speed)))
    return ProfileReport(t, u, float(d2.max()), float(d2.min()), scale, shape, ok, speed_convex)


def sturm_residual(f, arc, step=1e-3, margin=None):
    """max |u'' + Re{S psi} u / 2| / max|u| with S psi = -z^2 Sf + 1/2.

    u'' is the fourth-order central difference with the given step; samples
    stay ``margin`` away from the prevertices (default 5% of the arc).
    """
    if margin is None:
        margin = 0.05 * arc.length
    t = np.arange(arc.t_start + margin, arc.t_end - margin, step)
    u = f.boundary_speed(t) ** -0.5
    upp = (-u[4:] + 16 * u[3:-1] - 30 * u[2:-2] + 16 * u[1:-3] - u[:-4]) / (12 * step**2)
    z = np.exp(1j * t[2:-2])
    s_curve = -z * z * schwarzian(f, z) + 0.5
    res = upp + 0.5 * s_curve.real * u[2:-2]
    return float(np.max(np.abs(res)) / np.max(np.abs(u)))


def schwarzian_sign_facts(f, arc, n=400, margin=None):
    """Max of Re{z^2 Sf} (interior) or of Re{S psi} (exterior) on the arc; both should be < 0."""
    if margin is None:
        margin = 1e-3 * arc.length
    z = np.exp(1j * arc.grid(n, margin))
    q = z * z * schwarzian(f, z)
    if f.exterior:
        return float(np.max((-q + 0.5).real))
    return float(np.max(q.real))


def _golden(func, a, b, tol=1e-10):
    """Minimiser of a unimodal ``func`` on [a, b]."""
    g = (np.sqrt(5) - 1) / 2
    c, d = b - g * (b - a), a + g * (b - a)
    fc, fd = func(c), func(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - g * (b - a)
            fc = func(c)
        else:
            a, c, fc = c, d, fd
            d = a + g * (b - a)
            fd = func(d)
    return (a + b) / 2


@dataclass
class ExtremalPoint:
    angle: float
    arc_index: int
    golden_angle: float
    stationary_points: int
    residual: float          # |1 + zeta f''/f'| at the point

    @property
    def certified(self):
        return (abs(self.angle - self.golden_angle) < 1e-6 and self.stationary_points == 1
                and self.residual < 1e-9)


def extremal_points(f, n_scan=4000):
    """Roots w_k of zB(z) = -1, certified as the unique extremum of |f'| on each arc.

    On I_k the profile |f'|^(-1/2) is concave for interior maps (so |f'| has a
    unique interior minimum at w_k) and convex for exterior maps (|g'| has a
    unique maximum there).
    """
    B = f.blaschke()
    roots = circle_level_roots(B, -1)
    t = _angles(f)
    out = []
    for k in range(len(t)):
        arc = prevertex_arc(f, k)
        rel = np.mod(roots - arc.t_start, TWO_PI)
        inside = np.nonzero((rel > 0) & (rel < arc.length))[0]
        if len(inside) != 1:
            raise BadParameter(f"arc {k} holds {len(inside)} roots of zB = -1")
        w = arc.t_start + rel[inside[0]]
        sign = -1.0 if f.exterior else 1.0
        margin = 1e-6 * arc.length

        def neg_profile(s):
            return -sign * float(f.boundary_speed(s)) ** -0.5

        g = _golden(neg_profile, arc.t_start + margin, arc.t_end - margin)
        grid = arc.grid(n_scan, margin)
        prof = sign * f.boundary_speed(grid) ** -0.5
        dsign = np.sign(np.diff(prof))
        dsign = dsign[dsign != 0]
        stationary = int(np.sum(dsign[1:] != dsign[:-1]))
        zeta = np.exp(1j * w)
        P, _ = f.pre_schwarzian(zeta)
        out.append(ExtremalPoint(float(np.mod(w, TWO_PI)), k, float(np.mod(g, TWO_PI)),
                                 stationary, float(abs(1 + zeta * P))))
    return out


def _beta(f):
    if f.singular_exponents is None:
        raise BadParameter(f"{f.kind}: no prevertex exponents")
    return np.asarray(f.singular_exponents, dtype=float)


def arc_integrals(f, k, tol=1e-12):
    """(integral of |f'|, integral of 1/|f'|) over the prevertex arc I_k."""
    arc = prevertex_arc(f, k)
    beta = _beta(f)
    n = len(beta)
    ba, bb = beta[k % n], beta[(k + 1) % n]
    speed = f.boundary_speed
    i1 = arc_integral(lambda s: speed(s), arc.t_start, arc.t_end, ba, bb, tol=tol)
    i2 = arc_integral(lambda s: 1 / speed(s), arc.t_start, arc.t_end, -ba, -bb, tol=tol)
    return float(i1), float(i2)


@dataclass
class BalanceReport:
    ratios: np.ndarray
    integrals: list
    spread: float
    verdict: str
    bound: dict = None


def triangle_balance(f, tol=1e-6):
    """Ratios r_k = int |f'| / int 1/|f'| over the three prevertex arcs.

    For a precomposed map g = f o sigma with f''(0) = 0 the report also checks
    C b^-2 int 1/|g'| <= int |g'| <= C b^2 int 1/|g'| on every arc, where C is
    the common ratio of f and b = (1 + |a|)/(1 - |a|), a = sigma(0).
    """
    if f.prevertex_angles is None or len(f.prevertex_angles) != 3:
        raise NotATriangle("balance test needs exactly three prevertices")
    integrals = [arc_integrals(f, k) for k in range(3)]
    ratios = np.array([i1 / i2 for i1, i2 in integrals])
    spread = float(ratios.max() / ratios.min() - 1)
    report = BalanceReport(ratios, integrals, spread, "Balanced" if spread < tol else "Unbalanced")
    if isinstance(f, Precomposed):
        outer = triangle_balance(f.outer, tol)
        C = float(np.mean(outer.ratios))
        a = abs(f.sigma(0.0))
        b = (1 + a) / (1 - a)
        rows = []
        for i1, i2 in integrals:
            rows.append((C * i2 / b**2 <= i1 * (1 + 1e-12), i1 <= C * b**2 * i2 * (1 + 1e-12)))
        report.bound = {"C": C, "a": a, "b": b, "outer_spread": outer.spread,
                        "holds": all(all(r) for r in rows), "rows": rows}
    return report
