"""Exact distributions over compositions inside a rectangle.

Two random variables live here, both over compositions with at most m
parts drawn from the interval {a, ..., b}:

* ``pmf_X``: the integer represented by a uniformly chosen composition.
  Its weight at n is the number of such compositions summing to n,
  i.e. the sum of polynomial coefficients C(j, n - j*a) over j = 1..m.
* ``pmf_S``: the sum of exactly m independent uniform draws from
  {a, ..., b}; its weights are a single triangle row.

Both are kept as big-integer weight vectors plus a big-integer total, so
every identity about them can be checked in exact rational arithmetic.
X decomposes as gamma * S + e with an explicit nonnegative error term
that shrinks roughly quadratically as the part range widens; the
``error_decomposition`` report carries the exact gamma and the error
curve.  Normal-law comparisons (KS distance, pointwise cell-mass
differences) and a reproducible sampler round out the module.
"""
from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .compositions import Composition
from .polycoeff import iter_raw_rows, triangle_row
from .rng import SplitMix64


@dataclass(frozen=True)
class RectSpec:
    """Composition family: at most ``m`` parts, each in {a, ..., b}."""

    a: int
    b: int
    m: int

    def __post_init__(self) -> None:
        if self.a < 0:
            raise ValueError(f"lower part bound must be >= 0, got {self.a}")
        if self.b < self.a:
            raise ValueError(f"upper bound {self.b} below lower bound {self.a}")
        if self.m < 1:
            raise ValueError(f"max parts m must be >= 1, got {self.m}")

    @property
    def width(self) -> int:
        """Part range width b - a (the triangle parameter)."""
        return self.b - self.a


@dataclass(frozen=True)
class ExactPmf:
    """Integer-weighted pmf on the contiguous support [offset, offset+len-1].

    ``weights[i] / total`` is the probability of ``offset + i``; the
    weights sum to ``total`` exactly, so probabilities sum to 1 by
    construction.  Interior zeros are allowed.
    """

    offset: int
    weights: tuple[int, ...]
    total: int

    def __post_init__(self) -> None:
        if not self.weights:
            raise ValueError("pmf needs at least one support point")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")
        if sum(self.weights) != self.total:
            raise ValueError("weights do not sum to the stated total")

    @property
    def support(self) -> range:
        return range(self.offset, self.offset + len(self.weights))

    def weight(self, n: int) -> int:
        i = n - self.offset
        if 0 <= i < len(self.weights):
            return self.weights[i]
        return 0

    def prob(self, n: int) -> Fraction:
        return Fraction(self.weight(n), self.total)

    def float_prob(self, n: int) -> float:
        # int/int true division is correctly rounded even for big ints.
        return self.weight(n) / self.total

    def float_probs(self) -> list[float]:
        return [w / self.total for w in self.weights]

    def cdf_float(self, n: int) -> float:
        i = n - self.offset
        if i < 0:
            return 0.0
        if i >= len(self.weights):
            return 1.0
        return sum(self.weights[: i + 1]) / self.total

    def argmax(self) -> int:
        best = max(range(len(self.weights)), key=lambda i: self.weights[i])
        return self.offset + best

    def mean(self) -> Fraction:
        num = sum((self.offset + i) * w for i, w in enumerate(self.weights))
        return Fraction(num, self.total)

    def variance(self) -> Fraction:
        mu = self.mean()
        num = sum((self.offset + i) ** 2 * w for i, w in enumerate(self.weights))
        return Fraction(num, self.total) - mu * mu


@dataclass(frozen=True)
class NormalRef:
    """Matching normal law: mean m(a+b)/2, variance m((b-a+1)**2 - 1)/12."""

    mu: float
    sigma2: float

    @classmethod
    def for_spec(cls, spec: RectSpec) -> "NormalRef":
        r = spec.width + 1
        return cls(mu=spec.m * (spec.a + spec.b) / 2,
                   sigma2=spec.m * (r * r - 1) / 12)

    @property
    def sigma(self) -> float:
        return math.sqrt(self.sigma2)

    def cdf(self, x: float) -> float:
        return 0.5 * math.erfc((self.mu - x) / (self.sigma * math.sqrt(2)))

    def cell_mass(self, n: int) -> float:
        """Probability the normal assigns to the lattice cell [n-1/2, n+1/2]."""
        return self.cdf(n + 0.5) - self.cdf(n - 0.5)


@dataclass(frozen=True)
class ErrorReport:
    """Decomposition P[X=n] = gamma * P[S=n] + e[n] and the X-vs-S gap.

    ``gamma`` is exact, chosen so the identity holds in rational
    arithmetic: gamma = (r-1)/r * r**m / (r**m - 1) with r = l+1.
    ``e_values[i]`` is the float of the exact error term at support
    point i (all nonnegative); ``max_abs_diff`` is the sup-distance
    max over n of |P[X=n] - P[S=n]|.
    """

    gamma: Fraction
    alpha: Fraction
    e_values: tuple[float, ...]
    e_max: float
    max_abs_diff: float


@dataclass(frozen=True)
class DistanceReport:
    """How far pmf_X sits from its matching normal law."""

    normal: NormalRef
    offset: int
    pmf_diffs: tuple[float, ...]
    max_pmf_diff: float
    ks: float
    pmf_argmax: int


def pmf_S(spec: RectSpec) -> ExactPmf:
    """Distribution of the sum of exactly m uniform draws from {a..b}.

    Support [m*a, m*b]; the weight at n is the triangle entry
    C(m, n - m*a) of width b-a, with total (b-a+1)**m.
    """
    row = triangle_row(spec.width, spec.m)
    return ExactPmf(offset=spec.m * spec.a, weights=row.entries,
                    total=(spec.width + 1) ** spec.m)


def _x_weights(spec: RectSpec) -> tuple[int, list[int], int]:
    """Offset, weights, and total of pmf_X, as raw integers."""
    r = spec.width + 1
    offset = spec.a
    size = spec.m * spec.b - offset + 1
    acc = [0] * size
    for j, row in enumerate(iter_raw_rows(spec.width, spec.m)):
        if j == 0:
            continue
        shift = j * spec.a - offset
        for i, c in enumerate(row):
            acc[shift + i] += c
    if r == 1:
        total = spec.m
    else:
        total = (r ** (spec.m + 1) - r) // (r - 1)
    return offset, acc, total


def pmf_X(spec: RectSpec) -> ExactPmf:
    """Distribution of the integer represented by a uniform composition.

    A composition with j parts (j = 1..m, zero parts allowed when a=0)
    sums to n in [j*a, j*b]; the weight at n adds the shifted triangle
    entries C(j, n - j*a) over all j, and the total is the composition
    count, the geometric sum of (b-a+1)**j.  The empty composition is
    excluded.
    """
    offset, acc, total = _x_weights(spec)
    return ExactPmf(offset=offset, weights=tuple(acc), total=total)


def gamma_leading(l: int) -> Fraction:
    """First-order approximation l/(l+1) to the exact mixing ratio.

    The exact ratio exceeds this by a factor r**m/(r**m - 1), which is
    exponentially close to 1 in m.
    """
    if l < 1:
        raise ValueError(f"width l must be >= 1, got {l}")
    return Fraction(l, l + 1)


def error_decomposition(spec: RectSpec) -> ErrorReport:
    """Split pmf_X into gamma * pmf_S plus a nonnegative error term.

    Requires a = 0 and b = l >= 1.  With r = l+1 and
    alpha = l / ((r**m - 1) * r), the weight identity
    sum_{j<=m} C(j,n) = C(m,n) + sum_{j<m} C(j,n) gives exactly

        P[X=n] = gamma * P[S=n] + alpha * sum_{j<m} C(j, n),

    where gamma = alpha * r**m.  The error term is nonnegative
    everywhere, so P[X] >= gamma * P[S] pointwise.
    """
    if spec.a != 0:
        raise ValueError("decomposition requires lower bound a = 0")
    l = spec.b
    m = spec.m
    if l < 1:
        raise ValueError("decomposition requires b >= 1 (zero-width pmf is a point mass)")
    r = l + 1
    rm = r ** m
    alpha = Fraction(l, (rm - 1) * r)
    gamma = alpha * rm

    size = l * m + 1
    head = [0] * size            # sum of rows 1..m-1
    last: list[int] = [1]
    for j, row in enumerate(iter_raw_rows(l, m)):
        if 1 <= j <= m - 1:
            for i, c in enumerate(row):
                head[i] += c
        last = row
    x_weights = [h + c for h, c in zip(head, last + [0] * (size - len(last)))]

    tx = (r ** (m + 1) - r) // l
    ts = rm
    # e[n] = alpha * head[n]; floats via one correctly rounded division each.
    e_den = (rm - 1) * r
    e_values = tuple((l * h) / e_den for h in head)
    e_max = max(e_values)
    diff_num = max(
        abs(wx * ts - ws * tx)
        for wx, ws in zip(x_weights, last + [0] * (size - len(last)))
    )
    max_abs_diff = diff_num / (tx * ts)
    return ErrorReport(gamma=gamma, alpha=alpha, e_values=e_values,
                       e_max=e_max, max_abs_diff=max_abs_diff)


def normal_distance(spec: RectSpec) -> DistanceReport:
    """KS and pointwise distances from pmf_X to its matching normal law.

    The KS statistic compares the exact CDF at each integer n with the
    normal CDF at n + 1/2 (continuity correction); the point just below
    the support is included so the supremum really runs over all
    integers.  The pointwise track compares P[X=n] with the normal mass
    of the unit cell centered at n.
    """
    if spec.b == spec.a:
        raise ValueError("normal comparison needs b > a (nonzero variance)")
    ref = NormalRef.for_spec(spec)
    sigma = ref.sigma
    px = pmf_X(spec)

    ks = ref.cdf(px.offset - 0.5)
    cum = 0
    diffs = []
    for i, w in enumerate(px.weights):
        n = px.offset + i
        cum += w
        ks = max(ks, abs(cum / px.total - ref.cdf(n + 0.5)))
        diffs.append(abs(w / px.total - ref.cell_mass(n)))
    return DistanceReport(
        normal=ref,
        offset=px.offset,
        pmf_diffs=tuple(diffs),
        max_pmf_diff=max(diffs),
        ks=ks,
        pmf_argmax=px.argmax(),
    )


def stirling_h_estimate(l: int, m: int) -> float:
    """Normal-style estimate of the composition count at the central value.

    Evaluates ((l+1)**m - 1) * (l+1)/l / sqrt(2*pi*m*((l+1)**2-1)/12)
    in log space; the exact count at floor(m*l/2) divided by this tends
    to 1 as m grows.
    """
    if l < 1:
        raise ValueError(f"width l must be >= 1 (zero variance at l=0), got {l}")
    if m < 1:
        raise ValueError(f"max parts m must be >= 1, got {m}")
    log_est = (
        math.log((l + 1) ** m - 1)
        + math.log(l + 1)
        - math.log(l)
        - 0.5 * math.log(2 * math.pi * m * ((l + 1) ** 2 - 1) / 12)
    )
    try:
        return math.exp(log_est)
    except OverflowError:
        return math.inf


def stirling_h_ratio(l: int, m: int) -> float:
    """Exact central composition count over its normal-style estimate.

    Stays in log space end to end, so it is finite even when both the
    count and the estimate overflow float64.
    """
    if l < 1:
        raise ValueError(f"width l must be >= 1, got {l}")
    if m < 1:
        raise ValueError(f"max parts m must be >= 1, got {m}")
    acc = 0
    target = (m * l) // 2
    for j, row in enumerate(iter_raw_rows(l, m)):
        if j >= 1 and target < len(row):
            acc += row[target]
    log_est = (
        math.log((l + 1) ** m - 1)
        + math.log(l + 1)
        - math.log(l)
        - 0.5 * math.log(2 * math.pi * m * ((l + 1) ** 2 - 1) / 12)
    )
    return math.exp(math.log(acc) - log_est)


def sample(spec: RectSpec, count: int, seed: int) -> list[Composition]:
    """Draw ``count`` uniform compositions from the rectangle family.

    Uniformity over all compositions factors through the number of
    parts: j is chosen with probability (b-a+1)**j over the geometric
    total, then each of the j parts is uniform on {a..b}.  Driven by a
    seeded SplitMix64 stream, so identical seeds give identical samples
    on any platform.  The stream lives and dies inside this call; for
    parallel sampling give each worker its own seed.
    """
    if count < 0:
        raise ValueError(f"sample count must be >= 0, got {count}")
    r = spec.width + 1
    cumulative = []
    acc = 0
    for j in range(1, spec.m + 1):
        acc += r ** j
        cumulative.append(acc)
    total = cumulative[-1]

    gen = SplitMix64(seed)
    out: list[Composition] = []
    for _ in range(count):
        u = gen.below(total)
        j = bisect_right(cumulative, u) + 1
        if r == 1:
            out.append((spec.a,) * j)
        else:
            out.append(tuple(spec.a + gen.below(r) for _ in range(j)))
    return out
