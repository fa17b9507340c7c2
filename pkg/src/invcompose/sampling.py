"""Seeded constructive samplers for Group I and Group II configurations.

Forward samplers build configurations satisfying one hypothesis disjunct;
inverse samplers build configurations satisfying the context and the
conclusion without presupposing either disjunct.  Every sampler takes an
explicit :class:`random.Random` so runs are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict

from .geometry import (
    DegenerateConfig, GroupIConfig, GroupIIConfig, Point, midpoint, reflect,
)

MAX_RETRIES = 100


@dataclass(frozen=True)
class SampleRanges:
    coord: int = 10     # base point coordinates are integers in [-coord, coord]
    ratio: int = 20     # rational numerators/denominators in [1, ratio]


DEFAULT_RANGES = SampleRanges()


class SamplerExhausted(RuntimeError):
    pass


def _int(rng: random.Random, ranges: SampleRanges) -> int:
    return rng.randint(-ranges.coord, ranges.coord)


def _point(rng, ranges) -> Point:
    return Point(_int(rng, ranges), _int(rng, ranges))


def _nonzero_vector(rng, ranges) -> Point:
    while True:
        v = _point(rng, ranges)
        if not v.is_zero():
            return v


def _positive_rat(rng, ranges) -> Fraction:
    return Fraction(rng.randint(1, ranges.ratio), rng.randint(1, ranges.ratio))


def _nonzero_rat(rng, ranges) -> Fraction:
    return _positive_rat(rng, ranges) * rng.choice((-1, 1))


def _rat(rng, ranges) -> Fraction:
    """Rational in [-ratio, ratio], zero allowed."""
    return Fraction(rng.randint(-ranges.ratio, ranges.ratio), rng.randint(1, ranges.ratio))


def _retry(build, rng, what: str):
    for _ in range(MAX_RETRIES):
        try:
            return build()
        except DegenerateConfig:
            continue
    raise SamplerExhausted(f"{what}: {MAX_RETRIES} degenerate draws in a row")


# ---------------------------------------------------------------- group I

def sample_group1_forward(branch: str, rng: random.Random,
                          ranges: SampleRanges = DEFAULT_RANGES) -> GroupIConfig:
    """Triangle with g through C chosen as the median (or the parallel to AB)."""
    if branch not in ("median", "parallel"):
        raise ValueError(f"unknown group I branch {branch!r}")

    def build():
        A, B, C = _point(rng, ranges), _point(rng, ranges), _point(rng, ranges)
        d = midpoint(A, B) - C if branch == "median" else B - A
        return GroupIConfig(A, B, C, d, _nonzero_rat(rng, ranges))

    return _retry(build, rng, f"group1.forward.{branch}")


def sample_group1_inverse(side: str, rng: random.Random,
                          ranges: SampleRanges = DEFAULT_RANGES) -> GroupIConfig:
    """Configuration with A and B equidistant from line CM.

    ``same``: B = A + k*d, so B is on A's side.  ``opposite``: B is the mirror
    image of A shifted along g.  Either way the two triangles sharing side CM
    have equal altitudes, hence equal areas.
    """
    if side not in ("same", "opposite"):
        raise ValueError(f"unknown side {side!r}")

    def build():
        C = _point(rng, ranges)
        d = _nonzero_vector(rng, ranges)
        A = _point(rng, ranges)
        if side == "same":
            k = _nonzero_rat(rng, ranges)
            B = A + d * k
        else:
            B = reflect(A, C, d) + d * _rat(rng, ranges)
        # A on g makes A, B, C collinear in both constructions: rejected here
        return GroupIConfig(A, B, C, d, _nonzero_rat(rng, ranges))

    return _retry(build, rng, f"group1.inverse.{side}")


def sample_group1_random(rng: random.Random,
                         ranges: SampleRanges = DEFAULT_RANGES) -> GroupIConfig:
    def build():
        return GroupIConfig(_point(rng, ranges), _point(rng, ranges), _point(rng, ranges),
                            _nonzero_vector(rng, ranges), _nonzero_rat(rng, ranges))

    return _retry(build, rng, "group1.random")


# --------------------------------------------------------------- group II

def _rotation(rng, ranges):
    m = _rat(rng, ranges)
    den = 1 + m * m
    return (1 - m * m) / den, 2 * m / den


def _similarity(points, rng, ranges):
    cos, sin = _rotation(rng, ranges)
    scale = _positive_rat(rng, ranges)
    shift = _point(rng, ranges)
    out = []
    for p in points:
        x = (p.x * cos - p.y * sin) * scale
        y = (p.x * sin + p.y * cos) * scale
        out.append(Point(x, y) + shift)
    return out


def trapezium_frame(b, D: Point, mu) -> tuple:
    """Canonical A=(0,0), B=(b,0), D, C = D + mu*(B-A)."""
    A = Point(0, 0)
    B = Point(b, 0)
    return A, B, D + (B - A) * mu, D


def sample_group2_forward(branch: str, rng: random.Random,
                          ranges: SampleRanges = DEFAULT_RANGES) -> GroupIIConfig:
    """Trapezium (mu != 1) or parallelogram (mu = 1) under a random rational similarity."""
    if branch not in ("trapezium", "parallelogram"):
        raise ValueError(f"unknown group II branch {branch!r}")

    def build():
        b = _positive_rat(rng, ranges)
        D = Point(_int(rng, ranges), _positive_rat(rng, ranges))
        if branch == "parallelogram":
            mu = Fraction(1)
        else:
            mu = _positive_rat(rng, ranges)
            if mu == 1:
                raise DegenerateConfig("mu = 1 in trapezium branch")
        frame = trapezium_frame(b, D, mu)
        return GroupIIConfig(*_similarity(frame, rng, ranges))

    return _retry(build, rng, f"group2.forward.{branch}")


def _diagonal_construction(rng, ranges, lam, perturb=Fraction(0)):
    u = _nonzero_vector(rng, ranges)
    v = _nonzero_vector(rng, ranges)
    c = _positive_rat(rng, ranges)
    t = _positive_rat(rng, ranges)
    A = u * (-lam * c)
    C = u * c
    B = v * (-(lam + perturb) * t)
    D = v * t
    return GroupIIConfig(A, B, C, D)


def _lambda(rng, ranges, parallelogram: bool) -> Fraction:
    if parallelogram:
        return Fraction(1)
    while True:
        lam = _positive_rat(rng, ranges)
        if lam != 1:
            return lam


def sample_group2_inverse(rng: random.Random,
                          ranges: SampleRanges = DEFAULT_RANGES) -> GroupIIConfig:
    """Quadrilateral with AO/OC = BO/OD built around O at the origin.

    The ratio is 1 or a random rational != 1 with equal probability, so both
    outcomes of the inverse claim are exercised.
    """
    def build():
        lam = _lambda(rng, ranges, rng.random() < 0.5)
        return _diagonal_construction(rng, ranges, lam)

    return _retry(build, rng, "group2.inverse")


def sample_group2_perturbed(rng: random.Random,
                            ranges: SampleRanges = DEFAULT_RANGES) -> GroupIIConfig:
    """Negative control: BO/OD is lambda + eps with eps != 0."""
    def build():
        lam = _lambda(rng, ranges, rng.random() < 0.5)
        eps = _nonzero_rat(rng, ranges) / ranges.ratio
        if lam + eps <= 0:
            raise DegenerateConfig("perturbed ratio not positive")
        return _diagonal_construction(rng, ranges, lam, eps)

    return _retry(build, rng, "group2.control.perturbed")


def sample_group2_random(rng: random.Random,
                         ranges: SampleRanges = DEFAULT_RANGES) -> GroupIIConfig:
    def build():
        return GroupIIConfig(*(_point(rng, ranges) for _ in range(4)))

    return _retry(build, rng, "group2.random")


Sampler = Callable[[random.Random], object]

SAMPLERS: Dict[str, tuple] = {
    # id: (group, callable)
    "group1.forward.median": (1, lambda rng: sample_group1_forward("median", rng)),
    "group1.forward.parallel": (1, lambda rng: sample_group1_forward("parallel", rng)),
    "group1.inverse": (1, lambda rng: sample_group1_inverse(rng.choice(("opposite", "same")), rng)),
    "group1.random": (1, sample_group1_random),
    "group2.forward.trapezium": (2, lambda rng: sample_group2_forward("trapezium", rng)),
    "group2.forward.parallelogram": (2, lambda rng: sample_group2_forward("parallelogram", rng)),
    "group2.inverse": (2, sample_group2_inverse),
    "group2.control.perturbed": (2, sample_group2_perturbed),
    "group2.random": (2, sample_group2_random),
}


def get_sampler(sampler_id: str) -> tuple:
    try:
        return SAMPLERS[sampler_id]
    except KeyError:
        raise KeyError(f"unknown sampler {sampler_id!r}") from None


def sample_rng(seed: int, index: int) -> random.Random:
    """Per-sample generator derived only from (seed, index)."""
    return random.Random(f"{seed}:{index}")
