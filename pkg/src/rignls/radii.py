"""Problem-agnostic radii-polynomial assembly, verification, certificates.

A prover hands over ``BoundData``: per-index componentwise bounds ``Y_k``
and polynomial bounds ``Z_k(r)`` for the finite blocks, plus uniform
tail bounds ``Y_M``, ``Z_M(r)``.  The engine forms

    p_k(r) = |Y_k + Z_k(r)|_inf - r / w_k^s   (finite blocks)
    p_M(r) = Y_M + Z_M(r) - r                 (tail)

and scans a geometric grid for a radius at which every polynomial is
negative, evaluating in interval arithmetic so the verified values are
themselves the proof.  ``issue_certificate`` is the only constructor of
``EnclosureCertificate`` and re-evaluates the polynomials at the claimed
radius; nothing verdict-like is accepted from callers.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction

from .interval import Interval, imax, iv_pow_int
from .seqspace import inv_weight_pow

__all__ = [
    "Block",
    "BoundData",
    "RadiiPolynomialSet",
    "VerifiedRadius",
    "VerificationFailure",
    "InjectivityAttestation",
    "EnclosureCertificate",
    "CertificateError",
    "assemble_polynomials",
    "find_negative_radius",
    "issue_certificate",
    "load_certificate",
    "save_certificate",
]

FORMAT_TAG = "rignls-certificate-v1"


class VerificationFailure(RuntimeError):
    """No radius on the grid makes every polynomial negative."""

    def __init__(self, message, most_violating=None, stage=None):
        super().__init__(message)
        self.most_violating = most_violating
        self.stage = stage


class CertificateError(ValueError):
    """A certificate file failed structural or proof-value validation."""


@dataclass(frozen=True)
class Block:
    """Bounds for one finite index: componentwise Y and Z coefficients."""

    index: int
    wbase: int
    y: tuple
    zcoefs: tuple  # zcoefs[i-1] = componentwise coefficients of r**i

    def ncomp(self) -> int:
        return len(self.y)


@dataclass(frozen=True)
class BoundData:
    """Everything the engine needs: finite blocks plus the uniform tail."""

    s: Fraction
    M: int
    p: int
    blocks: tuple
    y_tail: Interval
    z_tail: tuple  # coefficients of r**1 .. r**p

    def __post_init__(self):
        for blk in self.blocks:
            if len(blk.zcoefs) != self.p:
                raise ValueError(
                    f"block {blk.index}: expected degree {self.p} Z data"
                )
            for comp in blk.y:
                if comp.lo < 0:
                    raise ValueError(f"negative Y bound at block {blk.index}")
            for ci in blk.zcoefs:
                for comp in ci:
                    if comp.lo < 0:
                        raise ValueError(
                            f"negative Z coefficient at block {blk.index}"
                        )
        if len(self.z_tail) != self.p:
            raise ValueError("tail Z degree mismatch")
        if self.y_tail.lo < 0:
            raise ValueError("negative tail Y bound")


class RadiiPolynomialSet:
    """Assembled polynomials, ready for interval evaluation at any r."""

    def __init__(self, bounds: BoundData):
        self.bounds = bounds
        self._winv = [
            inv_weight_pow(blk.wbase, bounds.s) for blk in bounds.blocks
        ]

    def evaluate(self, r: float) -> list:
        """Interval values ``[p_k(r) for finite blocks] + [p_M(r)]``."""
        b = self.bounds
        riv = Interval(float(r))
        rpow = [iv_pow_int(riv, i) for i in range(1, b.p + 1)]
        out = []
        for blk, winv in zip(b.blocks, self._winv):
            best = None
            for c in range(blk.ncomp()):
                acc = blk.y[c]
                for i in range(b.p):
                    acc = acc + blk.zcoefs[i][c] * rpow[i]
                m = acc.mag()
                best = m if best is None else imax(best, m)
            out.append(best - riv * winv)
        tail = b.y_tail
        for i in range(b.p):
            tail = tail + b.z_tail[i] * rpow[i]
        out.append(tail - riv)
        return out


@dataclass(frozen=True)
class VerifiedRadius:
    """A grid radius with proof values, plus the largest verified one."""

    r_star: float
    values_at_r: tuple
    r_star_large: float = None


def assemble_polynomials(bounds: BoundData) -> RadiiPolynomialSet:
    return RadiiPolynomialSet(bounds)


def _radius_grid():
    # published enclosure radii span roughly 1e-14 .. 1e-4; the geometric
    # grid covers [1e-16, 1] with ratio 1.5 and an explicit endpoint.
    out = []
    r = 1e-16
    while r <= 1.0:
        out.append(r)
        r *= 1.5
    if out[-1] != 1.0:
        out.append(1.0)
    return out


def find_negative_radius(polys: RadiiPolynomialSet) -> VerifiedRadius:
    """Smallest grid radius with every ``p_k`` verifiably negative.

    The interval values at the returned radius are recorded as the
    proof.  The largest verified grid point is kept as well (it is the
    uniqueness-strength reading of the same theorem).
    """
    grid = _radius_grid()
    smallest = None
    values = None
    largest = None
    best_violation = None  # (max upper bound, argmax index, r)
    for r in grid:
        vals = polys.evaluate(r)
        worst = max(v.hi for v in vals)
        if worst < 0.0:
            if smallest is None:
                smallest = r
                values = vals
            largest = r
        elif best_violation is None or worst < best_violation[0]:
            k = max(range(len(vals)), key=lambda i: vals[i].hi)
            best_violation = (worst, k, r)
    if smallest is None:
        worst, k, r = best_violation
        blocks = polys.bounds.blocks
        label = blocks[k].index if k < len(blocks) else polys.bounds.M
        raise VerificationFailure(
            f"no radius verified; closest miss at r={r:.3e} where "
            f"p[{label}] has upper bound {worst:.3e}",
            most_violating=label,
        )
    return VerifiedRadius(r_star=smallest, values_at_r=tuple(values), r_star_large=largest)


@dataclass(frozen=True)
class InjectivityAttestation:
    """Caller-side proof record that the fixed-point operator is injective.

    ``finite_block`` certifies the finite section (norm of I - A*Df
    strictly below one); ``tail`` certifies invertibility of every
    diagonal tail operator.
    """

    finite_block: bool
    tail: bool
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.finite_block and self.tail


@dataclass(frozen=True)
class EnclosureCertificate:
    """A proved ball: center, radius, space parameters, proof values.

    Only ``issue_certificate`` constructs these.
    """

    problem: str
    sigma: int
    mu: str
    nodes: int
    s: str
    m: int
    M: int
    center: dict
    radius: float
    polys_at_r: tuple
    radius_large: float = None
    extra: dict = field(default_factory=dict)

    @property
    def s_fraction(self) -> Fraction:
        return Fraction(self.s)

    @property
    def mu_float(self) -> float:
        return float(self.mu)

    def to_payload(self) -> dict:
        return {
            "problem": self.problem,
            "sigma": self.sigma,
            "mu": self.mu,
            "nodes": self.nodes,
            "s": self.s,
            "m": self.m,
            "M": self.M,
            "center": self.center,
            "radius": repr(self.radius),
            "radius_large": None if self.radius_large is None else repr(self.radius_large),
            "polys_at_r": [[lo, hi] for lo, hi in self.polys_at_r],
            "extra": self.extra,
        }


def issue_certificate(
    polys: RadiiPolynomialSet,
    verified: VerifiedRadius,
    *,
    problem: str,
    sigma: int,
    mu: str,
    nodes: int,
    m: int,
    center: dict,
    attestation: InjectivityAttestation,
    extra: dict = None,
) -> EnclosureCertificate:
    """Re-verify at ``verified.r_star`` and mint an immutable certificate."""
    if attestation is None or not attestation.ok:
        raise VerificationFailure(
            "missing or failed injectivity attestation: "
            + (attestation.detail if attestation else "none supplied"),
            stage="attestation",
        )
    vals = polys.evaluate(verified.r_star)
    for v in vals:
        if not v.hi < 0.0:
            raise VerificationFailure(
                "re-evaluation at the claimed radius is not negative",
                stage="issue",
            )
    return EnclosureCertificate(
        problem=problem,
        sigma=int(sigma),
        mu=str(mu),
        nodes=int(nodes),
        s=str(polys.bounds.s),
        m=int(m),
        M=int(polys.bounds.M),
        center=center,
        radius=verified.r_star,
        radius_large=verified.r_star_large,
        polys_at_r=tuple((v.lo, v.hi) for v in vals),
        extra=dict(extra or {}),
    )


def _floats_to_strings(xs) -> list:
    return [repr(float(x)) for x in xs]


def _strings_to_floats(xs) -> list:
    return [float(x) for x in xs]


def save_certificate(cert: EnclosureCertificate, path: str) -> None:
    """Atomic write: temp file in the target directory, then rename."""
    payload = cert.to_payload()
    doc = {"format": FORMAT_TAG, "payload": payload}
    directory = os.path.dirname(os.path.abspath(path)) or "."
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_certificate(path: str) -> EnclosureCertificate:
    """Load and validate; rejects tampered proof values."""
    with open(path) as fh:
        doc = json.load(fh)
    if doc.get("format") != FORMAT_TAG:
        raise CertificateError(f"unrecognized certificate format in {path}")
    p = doc["payload"]
    try:
        polys = tuple((float(lo), float(hi)) for lo, hi in p["polys_at_r"])
        cert = EnclosureCertificate(
            problem=str(p["problem"]),
            sigma=int(p["sigma"]),
            mu=str(p["mu"]),
            nodes=int(p["nodes"]),
            s=str(p["s"]),
            m=int(p["m"]),
            M=int(p["M"]),
            center=dict(p["center"]),
            radius=float(p["radius"]),
            radius_large=None if p.get("radius_large") is None else float(p["radius_large"]),
            polys_at_r=polys,
            extra=dict(p.get("extra", {})),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"malformed certificate {path}: {exc}") from exc
    if cert.radius <= 0.0:
        raise CertificateError("nonpositive radius")
    for lo, hi in cert.polys_at_r:
        if not (lo <= hi < 0.0):
            raise CertificateError(
                "stored polynomial values are not uniformly negative; "
                "certificate rejected"
            )
    return cert
