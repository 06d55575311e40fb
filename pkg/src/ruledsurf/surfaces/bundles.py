"""Embeddings of P(E) whose fibres are rational curves of degree k."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..core.ring import Polynomial
from ..groebner.ideal import Ideal, intersect_all, ring_map_kernel, saturation
from ..modules import GradedModule, dual_of_divisor_ideal, random_extension
from ..rng import SeedStream
from .analysis import SurfaceReport, surface_report
from .curves import CurveModel, DivisorRep, normalize_point, point_ideal
from .scroll import ScrollEmbedding, pullback_ideal, quotient_form_basis, scroll_ideal


def multiplicities(D: DivisorRep) -> Counter:
    return Counter(D.points)


@dataclass
class BundleConfig:
    """Data for the embedding of P(E) by |k C_0 + p^*B|.

    E (twisted by D) is a random extension of O(D2) by O(D1); D1 defaults to
    D, and D2 should represent L + D.  D - B must be effective.  Very
    ampleness is the caller's responsibility."""

    curve: CurveModel
    k: int
    B: DivisorRep
    D: DivisorRep
    D2: DivisorRep
    D1: DivisorRep | None = None
    seed: int = 0
    module: GradedModule | None = field(default=None, repr=False)

    def fibre_divisor(self) -> Counter:
        """Multiplicities of k D - B."""
        mD, mB = multiplicities(self.D), multiplicities(self.B)
        out = Counter({pt: self.k * m for pt, m in mD.items()})
        for pt, m in mB.items():
            out[pt] -= m
            if out[pt] < 0:
                raise ValueError("D - B is not effective")
        return Counter({pt: m for pt, m in out.items() if m > 0})

    def validate(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        self.fibre_divisor()
        C = self.curve
        for D in (self.B, self.D, self.D2, self.D1 or self.D):
            for pt in D.points:
                if any(g.evaluate(pt) for g in C.ideal.gens):
                    raise ValueError(f"point {pt} is not on the curve")


@dataclass
class BundleResult:
    ideal: Ideal
    report: SurfaceReport
    scroll: ScrollEmbedding
    fibre_ideal: Ideal          # fibres of X' over k D - B
    forms: list[Polynomial]     # embedding forms of degree k on X'


def extension_module(cfg: BundleConfig) -> GradedModule:
    if cfg.module is not None:
        return cfg.module
    C = cfg.curve
    D1 = cfg.D1 or cfg.D
    DS = dual_of_divisor_ideal(C.to_S(D1.ideal))
    D2S = dual_of_divisor_ideal(C.to_S(cfg.D2.ideal))
    return random_extension(D2S, DS, SeedStream(cfg.seed).child("extension"))


def fibres_over(emb: ScrollEmbedding, divisor: Counter) -> Ideal:
    R = emb.curve.ring
    parts = []
    for pt in sorted(divisor):
        P = point_ideal(R, pt)
        parts.append(pullback_ideal(emb, P ** divisor[pt]))
    return intersect_all(parts).minimalized()


def k_bundle_ideal(cfg: BundleConfig, report: bool = True) -> BundleResult:
    cfg.validate()
    M = extension_module(cfg)
    emb = scroll_ideal(M, cfg.curve)
    A = fibres_over(emb, cfg.fibre_divisor())
    forms = quotient_form_basis(A, emb.ideal, cfg.k)
    I = ring_map_kernel(emb.ideal, forms)
    rep = surface_report(I) if report else None
    return BundleResult(I, rep, emb, A, forms)


def conic_bundle_ideal(cfg: BundleConfig, report: bool = True) -> BundleResult:
    if cfg.k != 2:
        raise ValueError("conic bundles have k = 2")
    return k_bundle_ideal(cfg, report)


def image_of_fibre(result: BundleResult, pt) -> Ideal:
    """Ideal of the image, under the final embedding, of the fibre over pt."""
    emb = result.scroll
    F = pullback_ideal(emb, point_ideal(emb.curve.ring, pt))
    return ring_map_kernel(F, result.forms)


def divisor(C: CurveModel, pts) -> DivisorRep:
    """Divisor from a list of points; repeated points give multiplicities."""
    pts = sorted(normalize_point(p, C.ring.p) for p in pts)
    if not pts:
        return DivisorRep(Ideal([C.ring.one()], C.ring), 0, ())
    mult = Counter(pts)
    parts = []
    for pt in sorted(mult):
        P = point_ideal(C.ring, pt)
        if mult[pt] == 1:
            parts.append(P)
        else:
            parts.append(saturation(P ** mult[pt] + C.ideal))
    return DivisorRep(intersect_all(parts).minimalized(), len(pts), tuple(pts))
