"""Channel parameter types and parameter-level composition rules.

A memoryless deletion/substitution channel drops each transmitted bit with
probability ``d``, flips it with probability ``f``, and passes it through
unchanged with probability ``1 - d - f``.  A pure deletion channel has
``f = 0``.  Routing each bit independently to one of several component
channels (a parallel mixture) yields another channel of the same family
whose parameters are the weight-averaged component parameters.
"""

from __future__ import annotations

from dataclasses import dataclass

WEIGHT_SUM_TOL = 1e-12


@dataclass(frozen=True)
class ChannelParams:
    """Parameters of one memoryless deletion/substitution channel."""

    d: float
    f: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.d <= 1.0:
            raise ValueError(f"deletion probability d={self.d} outside [0, 1]")
        if not 0.0 <= self.f <= 1.0 - self.d:
            raise ValueError(
                f"flip probability f={self.f} outside [0, 1-d]=[0, {1.0 - self.d}]"
            )

    @property
    def s(self) -> float:
        """Crossover of the serialized per-survivor BSC; 0 for the d=1 channel."""
        if self.d == 1.0:
            return 0.0
        return self.f / (1.0 - self.d)


@dataclass(frozen=True)
class ConcatenationSpec:
    """Weighted list of component channels defining a parallel mixture."""

    components: tuple[tuple[float, ChannelParams], ...]

    def __post_init__(self):
        if len(self.components) < 1:
            raise ValueError("mixture needs at least one component")
        weights = [w for w, _ in self.components]
        if any(w < 0.0 for w in weights):
            raise ValueError(f"negative mixture weight in {weights}")
        total = sum(weights)
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError(f"mixture weights sum to {total!r}, expected 1")

    @property
    def num_components(self) -> int:
        return len(self.components)


def make_channel(d: float, f: float = 0.0) -> ChannelParams:
    """Validate (d, f) and return the channel parameters."""
    return ChannelParams(float(d), float(f))


def make_mixture(components) -> ConcatenationSpec:
    """Build a validated parallel mixture from (weight, params) pairs."""
    return ConcatenationSpec(tuple((float(w), p) for w, p in components))


def serialize(params: ChannelParams) -> tuple[float, float]:
    """Factor the channel into deletion probability and per-survivor BSC crossover."""
    return params.d, params.s


def deserialize(d: float, s: float) -> ChannelParams:
    """Inverse of serialize: recover (d, f) from the deletion + BSC factorization."""
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"crossover s={s} outside [0, 1]")
    return make_channel(d, (1.0 - d) * s)


def mixture_equivalent(spec: ConcatenationSpec) -> ChannelParams:
    """Single-channel equivalent of a parallel mixture.

    Each bit is routed independently, so the equivalent deletion and flip
    probabilities are the weight-averaged component probabilities.
    """
    d = sum(w * p.d for w, p in spec.components)
    f = sum(w * p.f for w, p in spec.components)
    # Weighted means of valid parameters stay valid up to rounding; clip the
    # float dust so the ChannelParams invariant check stays strict.
    d = min(max(d, 0.0), 1.0)
    f = min(max(f, 0.0), 1.0 - d)
    return ChannelParams(d, f)
