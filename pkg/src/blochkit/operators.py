"""Multiplication-operator diagnostics: the boundary weight
sigma_psi = sup_z omega(z) Q_psi(z), operator-norm sandwiches, spectra
as sampled range clouds, and compactness / isometry verdicts.

Key facts wired into the verdicts:

  * max(||psi||_B, ||psi||_inf) <= ||M_psi|| <= max(||psi||_B,
    ||psi||_inf + sigma_psi), so sampled lower bounds for the
    components certify an operator-norm lower bound.
  * the spectrum is the closure of the symbol's range, and the
    resolvent at lambda is controlled by sigma_psi / dist^2.
  * M_psi is compact only for the zero symbol.
  * M_psi is an isometry iff psi is a unimodular constant whenever the
    domain's seminorm ceiling sits strictly below one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import atanh, inf, isinf

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .bloch import (AGAINST, _golden_max, _sup_estimate, beta_estimate,
                    beta_upper_poly, bloch_norm_estimate,
                    little_star_membership_diagnostic, q_value, q_values)
from .constants import in_class_D, resolved_constant
from .domains import (DomainDescriptor, Kind, sample_interior,
                      sample_near_distinguished_boundary)
from .errors import UnsupportedMetricError, UsageError
from .estimates import (EstimateInterval, MODE_ANALYTIC_BOUNDS,
                        MODE_SAMPLED_LOWER, SamplingConfig, exact)
from .metric import _require_metric
from .symbols import (Polynomial, SymbolExpr, combine, constant, evaluate,
                      evaluate_many, is_constant, supnorm_upper)

DEFAULT_BOUNDARY_EPS = (0.1, 0.01, 1e-3, 1e-4)

BOUNDED = "bounded"
BOUNDED_EVIDENCE = "bounded-evidence"
UNBOUNDED_EVIDENCE = "unbounded-evidence"
INCONCLUSIVE = "inconclusive"


# ---------------------------------------------------------------------------
# pointwise growth envelopes

def _omega_envelopes(d: DomainDescriptor, little: bool):
    """(lower, upper) vectorized maps Z -> certified omega bounds.

    With little=True the lower envelope only uses test functions from
    the vanishing class; on disk and ball the two growths coincide in
    the limit, so only a 1e-6 shave separates the envelopes.
    """
    k = d.kind
    shave = 1.0 - 1e-6

    if k in (Kind.DISK, Kind.BALL):
        def lower(Z):
            r = np.linalg.norm(Z, axis=1)
            if little:
                return np.arctanh(shave * r) / shave
            return np.arctanh(r)

        def upper(Z):
            return np.arctanh(np.linalg.norm(Z, axis=1))

        return lower, upper

    if k is Kind.POLYDISK:
        def lower(Z):
            m = np.max(np.abs(Z), axis=1)
            if little:
                return np.arctanh(shave * m) / shave
            return np.arctanh(m)

        def upper(Z):
            return np.sum(np.arctanh(np.abs(Z)), axis=1)

        return lower, upper

    if k is Kind.PRODUCT:
        parts = [(s, t, _omega_envelopes(f, little)) for s, t, f in d.factor_slices()]

        def lower(Z):
            return np.max(np.stack([lo(Z[:, s:t]) for s, t, (lo, _) in parts]), axis=0)

        def upper(Z):
            return np.sum(np.stack([hi(Z[:, s:t]) for s, t, (_, hi) in parts]), axis=0)

        return lower, upper

    raise UnsupportedMetricError(f"no growth envelopes for {d}")


_PEAK_CACHE: dict[str, float] = {}


def _radial_peak() -> float:
    # max over r in (0,1) of arctanh(r) * sqrt(1 - r^2)
    if "peak" not in _PEAK_CACHE:
        _, val = _golden_max(lambda r: atanh(r) * np.sqrt(1.0 - r * r),
                             1e-9, 1.0 - 1e-12, 200)
        _PEAK_CACHE["peak"] = val
    return _PEAK_CACHE["peak"]


def sigma_upper_poly(d: DomainDescriptor, psi: Polynomial) -> float:
    """Certified ceiling for the boundary weight of a polynomial symbol.

    Disk and ball only: Q <= sqrt(1 - |z|^2) * G with G the gradient
    coefficient bound, and arctanh(r) sqrt(1 - r^2) peaks below 0.6628.
    On polydisks and products the weight is genuinely infinite for most
    polynomials (growth in one factor, nonvanishing Q in another), so
    no finite ceiling is returned there.
    """
    if not isinstance(psi, Polynomial):
        raise UsageError("polynomial ceiling needs a polynomial symbol")
    if d.kind in (Kind.DISK, Kind.BALL):
        return _radial_peak() * beta_upper_poly(psi)
    return inf


def sigma_estimate(d: DomainDescriptor, psi: SymbolExpr,
                   cfg: SamplingConfig = SamplingConfig(),
                   which: str = "sigma") -> EstimateInterval:
    """Boundary-weight estimate sup_z omega(z) Q_psi(z); which="sigma0"
    replaces omega by the vanishing-class growth.

    The lower end runs the sampled sup against the certified lower
    growth envelope, so it is a true lower bound even where omega is
    only bracketed. Disk/ball (growth exact there): upper end is the
    polynomial ceiling when available, +inf otherwise. Polydisk and
    products: the interval brackets the weight between the sampled
    sups of the two envelopes.
    """
    if which not in ("sigma", "sigma0"):
        raise UsageError("which must be 'sigma' or 'sigma0'")
    _require_metric(d)
    if is_constant(psi) is not None:
        return exact(0.0)
    omega_lower, omega_upper = _omega_envelopes(d, which == "sigma0")

    def batch(Z):
        return q_values(d, psi, Z) * omega_lower(Z)

    def point(z):
        return q_value(d, psi, z) * float(omega_lower(z.reshape(1, -1))[0])

    lower, argmax, ns = _sup_estimate(d, batch, point, cfg)
    if d.kind in (Kind.DISK, Kind.BALL):
        upper = inf
        if isinstance(psi, Polynomial):
            upper = max(sigma_upper_poly(d, psi), lower)
        return EstimateInterval(lower, upper, MODE_SAMPLED_LOWER, ns, cfg.seed,
                                argmax=tuple(argmax.tolist()))

    def batch_hi(Z):
        return q_values(d, psi, Z) * omega_upper(Z)

    def point_hi(z):
        return q_value(d, psi, z) * float(omega_upper(z.reshape(1, -1))[0])

    hi, _, _ = _sup_estimate(d, batch_hi, point_hi, cfg)
    return EstimateInterval(lower, max(hi, lower), MODE_ANALYTIC_BOUNDS,
                            ns, cfg.seed, argmax=tuple(argmax.tolist()))


def supnorm_estimate(d: DomainDescriptor, psi: SymbolExpr,
                     cfg: SamplingConfig = SamplingConfig()) -> EstimateInterval:
    """Sampled lower / analytic upper interval for sup_z |psi(z)|."""
    _require_metric(d)
    c = is_constant(psi)
    if c is not None:
        return exact(abs(c))
    lower, argmax, ns = _sup_estimate(
        d,
        lambda Z: np.abs(evaluate_many(psi, Z)),
        lambda z: abs(evaluate(psi, z)),
        cfg)
    upper = max(supnorm_upper(psi), lower)
    return EstimateInterval(lower, upper, MODE_SAMPLED_LOWER, ns, cfg.seed,
                            argmax=tuple(argmax.tolist()))


# ---------------------------------------------------------------------------
# boundedness

@dataclass(frozen=True)
class BoundednessReport:
    verdict: str
    eps: tuple[float, ...]
    maxima: tuple[float, ...]
    supnorm_lower: float
    note: str

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "eps": list(self.eps),
                "maxima": list(self.maxima),
                "supnorm_lower": self.supnorm_lower, "note": self.note}


def boundedness_verdict(d: DomainDescriptor, psi: SymbolExpr,
                        cfg: SamplingConfig = SamplingConfig(),
                        eps_ladder: tuple[float, ...] = DEFAULT_BOUNDARY_EPS,
                        space: str = "B") -> BoundednessReport:
    """Heuristic verdict from shell maxima of the criterion quantity
    omega_lower * Q toward the distinguished boundary.

    bounded-evidence when the last two shells agree within 5% or the
    maxima never increase (decay is stronger evidence than a plateau);
    unbounded-evidence when every step grows by more than 20%; else
    inconclusive. Never a proof in either direction. space="B0*"
    additionally requires the symbol's own decay diagnostic to pass.
    """
    if space not in ("B", "B0*"):
        raise UsageError("space must be 'B' or 'B0*'")
    _require_metric(d)
    eps = tuple(eps_ladder)
    if is_constant(psi) is not None:
        return BoundednessReport(BOUNDED, eps, (0.0,) * len(eps),
                                 abs(is_constant(psi)),
                                 "constant symbol, zero boundary weight")
    sup_lower = float(np.max(np.abs(evaluate_many(
        psi, sample_interior(d, max(256, cfg.samples // 4), cfg.seed,
                             cfg.shells)))))
    omega_lower, _ = _omega_envelopes(d, little=(space == "B0*"))
    count = max(64, cfg.samples // max(1, len(eps)))
    maxima = []
    for e in eps:
        Z = sample_near_distinguished_boundary(d, count, e, cfg.seed)
        maxima.append(float(np.max(q_values(d, psi, Z) * omega_lower(Z))))
    m = tuple(maxima)
    if space == "B0*":
        _, diag = little_star_membership_diagnostic(d, psi, cfg=cfg)
        if diag == AGAINST:
            return BoundednessReport(
                UNBOUNDED_EVIDENCE, eps, m, sup_lower,
                "symbol fails the vanishing-class decay diagnostic")
    if max(m) <= 1e-15:
        return BoundednessReport(BOUNDED, eps, m, sup_lower,
                                 "criterion quantity vanishes on all shells")
    plateau = abs(m[-1] - m[-2]) < 0.05 * max(m[-1], m[-2]) if len(m) >= 2 else True
    non_increasing = all(b <= a * (1.0 + 1e-9) for a, b in zip(m, m[1:]))
    if plateau or non_increasing:
        return BoundednessReport(BOUNDED_EVIDENCE, eps, m, sup_lower,
                                 "shell maxima do not grow toward the boundary")
    if all(b > 1.2 * a for a, b in zip(m, m[1:])):
        return BoundednessReport(UNBOUNDED_EVIDENCE, eps, m, sup_lower,
                                 "shell maxima grow by more than 20% per shell")
    return BoundednessReport(INCONCLUSIVE, eps, m, sup_lower,
                             "shell maxima neither settle nor grow cleanly")


# ---------------------------------------------------------------------------
# operator norm

@dataclass(frozen=True)
class NormBounds:
    """Sandwich for ||M_psi|| with the component estimates exposed."""

    lower: float
    upper: float
    sup: EstimateInterval
    bloch: EstimateInterval
    sigma: EstimateInterval
    space: str

    def as_dict(self) -> dict:
        def iv(e: EstimateInterval) -> dict:
            return {"lower": e.lower,
                    "upper": None if isinf(e.upper) else e.upper,
                    "mode": e.mode}
        return {"lower": self.lower,
                "upper": None if isinf(self.upper) else self.upper,
                "space": self.space,
                "supnorm": iv(self.sup), "bloch_norm": iv(self.bloch),
                "boundary_weight": iv(self.sigma)}


def norm_bounds(d: DomainDescriptor, psi: SymbolExpr,
                cfg: SamplingConfig = SamplingConfig(),
                space: str = "B") -> NormBounds:
    """Two-sided operator-norm sandwich.

    lower = max of the sampled component lower bounds (the Bloch-norm
    component is what acting on the constant function one yields);
    upper = max(bloch upper, sup upper + sigma upper) when every piece
    is finite, +inf otherwise. space="B0*" uses the vanishing-class
    boundary weight.
    """
    if space not in ("B", "B0*"):
        raise UsageError("space must be 'B' or 'B0*'")
    cert = None
    if isinstance(psi, Polynomial):
        cert = abs(evaluate(psi, np.zeros(d.ambient_dim))) + beta_upper_poly(psi)
    sup_est = supnorm_estimate(d, psi, cfg)
    bloch_est = bloch_norm_estimate(d, psi, cfg, certified_upper=cert)
    sigma_est = sigma_estimate(d, psi, cfg,
                               which=("sigma0" if space == "B0*" else "sigma"))
    lower = max(sup_est.lower, bloch_est.lower)
    upper = max(bloch_est.upper, sup_est.upper + sigma_est.upper)
    upper = max(upper, lower)
    return NormBounds(lower, upper, sup_est, bloch_est, sigma_est, space)


def _battery(d: DomainDescriptor, nfuncs: int, seed: int) -> list[Polynomial]:
    n = d.ambient_dim
    out = [constant(1.0, n)]
    for j in range(min(n, 3)):
        exps = tuple(1 if i == j else 0 for i in range(n))
        out.append(Polynomial(n, ((exps, 1.0 + 0.0j),)))
    rng = np.random.Generator(np.random.PCG64(
        np.random.SeedSequence(entropy=seed, spawn_key=(31,))))
    while len(out) < nfuncs:
        terms = []
        for _ in range(3):
            exps = tuple(int(e) for e in rng.integers(0, 3, size=n))
            if sum(exps) == 0:
                continue
            c = complex(rng.normal(), rng.normal())
            terms.append((exps, c))
        if terms:
            out.append(combine("sum", *[Polynomial(n, (t,)) for t in terms]))
    return out


def empirical_opnorm_lower(d: DomainDescriptor, psi: SymbolExpr,
                           cfg: SamplingConfig = SamplingConfig(),
                           nfuncs: int = 12, seed: int = 42) -> float:
    """Operator-norm lower bound from a battery of certified test
    functions: max over f of lower(||psi f||_B) / upper(||f||_B)."""
    _require_metric(d)
    best = 0.0
    for f in _battery(d, nfuncs, seed):
        denom = abs(evaluate(f, np.zeros(d.ambient_dim))) + beta_upper_poly(f)
        if denom <= 0:
            continue
        prod = combine("product", psi, f)
        num = bloch_norm_estimate(d, prod, cfg).lower
        best = max(best, num / denom)
    return best


# ---------------------------------------------------------------------------
# spectrum

@dataclass(frozen=True)
class SpectrumCloud:
    """Sampled image of the symbol; the spectrum is its closure."""

    points: np.ndarray = field(repr=False)
    bbox: tuple[float, float, float, float]
    hull_area: float
    hull_vertices: np.ndarray = field(repr=False)
    is_singleton: bool

    def distance(self, lam: complex) -> float:
        return float(np.min(np.abs(self.points - complex(lam))))

    def resolvent_scale(self, lam: complex, sigma: float) -> float:
        alpha = self.distance(lam)
        if alpha <= 0.0:
            return inf
        return sigma / (alpha * alpha)

    def as_dict(self) -> dict:
        return {"count": int(self.points.size),
                "bbox": list(self.bbox),
                "hull_area": self.hull_area,
                "is_singleton": self.is_singleton}


def spectrum_cloud(d: DomainDescriptor, psi: SymbolExpr,
                   cfg: SamplingConfig = SamplingConfig()) -> SpectrumCloud:
    _require_metric(d)
    Z = sample_interior(d, cfg.samples, cfg.seed, cfg.shells)
    vals = evaluate_many(psi, Z)
    xy = np.column_stack([vals.real, vals.imag])
    bbox = (float(xy[:, 0].min()), float(xy[:, 0].max()),
            float(xy[:, 1].min()), float(xy[:, 1].max()))
    spread = max(bbox[1] - bbox[0], bbox[3] - bbox[2])
    singleton = spread <= 1e-12
    try:
        hull = ConvexHull(xy)
        area = float(hull.volume)  # 2-d: volume is the area
        verts = vals[hull.vertices]
    except QhullError:
        area = 0.0
        verts = np.array([vals[0]]) if singleton else np.unique(vals)
    return SpectrumCloud(vals, bbox, area, verts, singleton)


def grid_coverage(points: np.ndarray, radius: float = 0.95,
                  n: int = 20) -> tuple[np.ndarray, int]:
    """Occupancy counts over an n x n grid of the axis-aligned square
    inscribed in the disk |lambda| <= radius (every cell lies inside
    the disk). Returns (counts, number of empty cells)."""
    half = radius / np.sqrt(2.0)
    x = np.clip((points.real + half) / (2 * half) * n, 0, None)
    y = np.clip((points.imag + half) / (2 * half) * n, 0, None)
    ix, iy = np.floor(x).astype(int), np.floor(y).astype(int)
    ok = (points.real >= -half) & (points.real <= half) \
        & (points.imag >= -half) & (points.imag <= half)
    ix, iy = np.minimum(ix[ok], n - 1), np.minimum(iy[ok], n - 1)
    counts = np.zeros((n, n), dtype=int)
    np.add.at(counts, (ix, iy), 1)
    return counts, int(np.sum(counts == 0))


# ---------------------------------------------------------------------------
# compactness

@dataclass(frozen=True)
class CompactnessReport:
    verdict: str
    witness: dict

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "witness": self.witness}


def compactness_verdict(d: DomainDescriptor, psi: SymbolExpr,
                        cfg: SamplingConfig = SamplingConfig()) -> CompactnessReport:
    """Only the zero symbol gives a compact multiplier.

    Witness shapes: two sampled points with distinct symbol values, or
    for a (numerically) constant nonzero symbol the singleton-range
    argument (a one-point range away from zero is already forbidden).
    The zero certificate is exact for folded polynomial constants and
    sampled otherwise.
    """
    c = is_constant(psi)
    if c is not None:
        if c == 0:
            return CompactnessReport("compact", {"reason": "zero symbol"})
        return CompactnessReport(
            "not-compact",
            {"reason": "singleton range differs from zero", "value": repr(c)})
    _require_metric(d)
    Z = sample_interior(d, max(256, cfg.samples // 8), cfg.seed, cfg.shells)
    vals = evaluate_many(psi, Z)
    j = int(np.argmax(np.abs(vals - vals[0])))
    if abs(vals[j] - vals[0]) > 1e-12:
        return CompactnessReport(
            "not-compact",
            {"reason": "two distinct range values",
             "point_a": [repr(x) for x in Z[0]], "value_a": repr(vals[0]),
             "point_b": [repr(x) for x in Z[j]], "value_b": repr(vals[j])})
    if abs(vals[0]) <= 1e-12:
        return CompactnessReport(
            "compact-evidence",
            {"reason": "symbol vanishes at all sampled points",
             "samples": int(len(vals))})
    return CompactnessReport(
        "not-compact",
        {"reason": "singleton range differs from zero",
         "value": repr(vals[0]), "samples": int(len(vals))})


# ---------------------------------------------------------------------------
# isometry

@dataclass(frozen=True)
class IsometryReport:
    verdict: str
    reason: str
    ceiling: float | None = None
    modulus_at_zero: float | None = None
    modulus_powers: tuple[float, ...] = ()
    crossing_k: int | None = None
    power_betas: dict[int, float] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "reason": self.reason,
                "ceiling": self.ceiling,
                "modulus_at_zero": self.modulus_at_zero,
                "modulus_powers": list(self.modulus_powers),
                "crossing_k": self.crossing_k,
                "power_betas": {str(k): v for k, v in self.power_betas.items()}}


def isometry_verdict(d: DomainDescriptor, psi: SymbolExpr,
                     cfg: SamplingConfig = SamplingConfig(),
                     k_max: int = 16) -> IsometryReport:
    """Three branches.

    1. Constant symbols: isometry iff unimodular.
    2. Non-constant symbol on a domain whose seminorm ceiling is below
       one: never an isometry. Evidence: |psi(0)|^k falling through
       1 - ceiling (an isometry would pin every power's norm at one),
       plus sampled seminorms of the powers where a metric is wired.
    3. Otherwise (a disk factor is present) only the necessary
       conditions ||psi||_inf <= 1 and ||psi||_B = 1 are tested; a
       numerical violation yields not-isometry-evidence, anything else
       is inconclusive (no theorem covers this case).
    """
    c = is_constant(psi)
    if c is not None:
        if abs(abs(c) - 1.0) <= 1e-12:
            return IsometryReport("isometry", "unimodular constant symbol",
                                  modulus_at_zero=abs(c))
        return IsometryReport("not-isometry",
                              "constant symbol scales norms by |c| != 1",
                              modulus_at_zero=abs(c))

    if in_class_D(d):
        ceiling = resolved_constant(d)
        z0 = np.zeros(d.ambient_dim)
        m0 = abs(evaluate(psi, z0))
        powers = tuple(m0 ** k for k in range(1, k_max + 1))
        crossing = next((k for k, v in enumerate(powers, start=1)
                         if v < 1.0 - ceiling), None)
        betas: dict[int, float] = {}
        if d.metric_supported:
            # evidence rows only, never a verdict input: sample coarsely
            small = cfg.with_(samples=max(256, cfg.samples // 16),
                              refine_restarts=1, refine_iters=12)
            for k in (1, 2, 4, 8, 16):
                if k > k_max:
                    break
                try:
                    pk = combine("power", psi, k)
                except UsageError:
                    break  # power would cross the degree cap
                betas[k] = beta_estimate(d, pk, small).lower
        return IsometryReport(
            "not-isometry",
            "non-constant symbol on a domain with seminorm ceiling below one",
            ceiling=ceiling, modulus_at_zero=m0, modulus_powers=powers,
            crossing_k=crossing, power_betas=betas)

    if not d.metric_supported:
        return IsometryReport(
            INCONCLUSIVE,
            "no metric wired for this domain and the ceiling is not below one")
    sup_est = supnorm_estimate(d, psi, cfg)
    cert = None
    if isinstance(psi, Polynomial):
        cert = abs(evaluate(psi, np.zeros(d.ambient_dim))) + beta_upper_poly(psi)
    norm_est = bloch_norm_estimate(d, psi, cfg, certified_upper=cert)
    m0 = abs(evaluate(psi, np.zeros(d.ambient_dim)))
    if sup_est.lower > 1.0 + 1e-9:
        return IsometryReport("not-isometry-evidence",
                              "sampled sup-norm exceeds one", modulus_at_zero=m0)
    if norm_est.lower > 1.0 + 1e-9:
        return IsometryReport("not-isometry-evidence",
                              "sampled Bloch norm exceeds one", modulus_at_zero=m0)
    if norm_est.upper < 1.0 - 1e-9:
        return IsometryReport("not-isometry-evidence",
                              "certified Bloch norm stays below one",
                              modulus_at_zero=m0)
    return IsometryReport(INCONCLUSIVE,
                          "necessary conditions hold within sampling resolution",
                          modulus_at_zero=m0)


# ---------------------------------------------------------------------------
# aggregate

@dataclass(frozen=True)
class OperatorReport:
    """Everything about one multiplier in one bundle. The two norm
    sandwiches share components; sigma0_lower <= sigma_upper ordering
    holds because the vanishing-class growth never exceeds the full
    one."""

    domain: str
    symbol_text: str
    sup_norm: EstimateInterval
    bloch_norm: EstimateInterval
    sigma: EstimateInterval
    sigma0: EstimateInterval
    verdicts: dict

    def as_dict(self) -> dict:
        def iv(e: EstimateInterval) -> dict:
            return {"lower": e.lower,
                    "upper": None if isinf(e.upper) else e.upper,
                    "mode": e.mode}
        return {"domain": self.domain, "symbol": self.symbol_text,
                "sup_norm": iv(self.sup_norm), "bloch_norm": iv(self.bloch_norm),
                "sigma": iv(self.sigma), "sigma0": iv(self.sigma0),
                "verdicts": self.verdicts}


def operator_report(d: DomainDescriptor, psi: SymbolExpr, symbol_text: str,
                    cfg: SamplingConfig = SamplingConfig()) -> OperatorReport:
    cert = None
    if isinstance(psi, Polynomial):
        cert = abs(evaluate(psi, np.zeros(d.ambient_dim))) + beta_upper_poly(psi)
    sup_est = supnorm_estimate(d, psi, cfg)
    bloch_est = bloch_norm_estimate(d, psi, cfg, certified_upper=cert)
    sig = sigma_estimate(d, psi, cfg, which="sigma")
    sig0 = sigma_estimate(d, psi, cfg, which="sigma0")
    lower = max(sup_est.lower, bloch_est.lower)
    verdicts = {
        "norm_lower": lower,
        "norm_upper_B": max(bloch_est.upper, sup_est.upper + sig.upper, lower),
        "norm_upper_B0*": max(bloch_est.upper, sup_est.upper + sig0.upper, lower),
        "boundedness": boundedness_verdict(d, psi, cfg).as_dict(),
    }
    return OperatorReport(str(d), symbol_text, sup_est, bloch_est, sig, sig0,
                          verdicts)
