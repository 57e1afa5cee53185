"""Pruning and merging that keeps a Gaussian mixture small.

The routine runs after every measurement update:

1. if every incoming amplitude is below the amplitude threshold the track
   is considered lost: the components keep their centres and amplitudes and
   their variances double, nothing else happens;
2. otherwise amplitudes are rescaled so the tallest is 1;
3. components below the amplitude threshold are dropped;
4. the closest pair by symmetric KL divergence is merged while that
   divergence is below the KL threshold;
5. merging can lift the maximum above 1, so components are pruned once more
   relative to the new maximum.

Calling :func:`reduce` on its own output changes nothing except the common
amplitude scale that step 2 removes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from larmortrack.core.errors import UninitializedStateError
from larmortrack.mixture.component import GaussianComponent, merge_pair, symmetric_kl
from larmortrack.mixture.mixture import GaussianMixture


@dataclass(frozen=True)
class ReductionConfig:
    amplitude_threshold: float = 0.04
    kl_threshold: float = 0.001
    max_components: int | None = None

    def __post_init__(self) -> None:
        if not 0.0 < self.amplitude_threshold < 1.0:
            raise ValueError(f"amplitude_threshold must lie in (0, 1), got {self.amplitude_threshold!r}")
        if not self.kl_threshold > 0.0:
            raise ValueError(f"kl_threshold must be positive, got {self.kl_threshold!r}")
        if self.max_components is not None and self.max_components < 1:
            raise ValueError(f"max_components must be at least 1, got {self.max_components!r}")


def reduce(
    mixture: GaussianMixture,
    amplitude_threshold: float = 0.04,
    kl_threshold: float = 0.001,
    max_components: int | None = None,
) -> GaussianMixture:
    if mixture.is_empty:
        raise UninitializedStateError("Cannot reduce an empty mixture.")
    config = ReductionConfig(amplitude_threshold, kl_threshold, max_components)

    peak = mixture.max_amplitude
    if peak < config.amplitude_threshold:
        return mixture.with_components(
            GaussianComponent(c.amplitude, c.centre, c.sigma * math.sqrt(2.0)) for c in mixture
        )

    scaled = [c.scaled(1.0 / peak) for c in mixture] if peak != 1.0 else list(mixture)
    kept = [c for c in scaled if c.amplitude >= config.amplitude_threshold]
    merged = merge_similar(kept, config.kl_threshold)

    new_peak = max(c.amplitude for c in merged)
    floor = config.amplitude_threshold * new_peak
    survivors = [c for c in merged if c.amplitude >= floor]

    if config.max_components is not None and len(survivors) > config.max_components:
        ranked = sorted(range(len(survivors)), key=lambda i: (-survivors[i].amplitude, i))
        keep = set(ranked[: config.max_components])
        survivors = [c for i, c in enumerate(survivors) if i in keep]

    return mixture.with_components(survivors)


def merge_similar(components: list[GaussianComponent], kl_threshold: float) -> list[GaussianComponent]:
    """Greedily merge the closest qualifying pair until none is left.

    The merged component takes the lower index of the pair; exact ties in
    divergence go to the pair with the lower indices.
    """
    items = list(components)
    while len(items) > 1:
        pair = _closest_pair(items, kl_threshold)
        if pair is None:
            break
        i, j = pair
        items[i] = merge_pair(items[i], items[j])
        del items[j]
    return items


def _closest_pair(items: list[GaussianComponent], kl_threshold: float) -> tuple[int, int] | None:
    # KL(p||q) >= (dc)^2 / (2 sigma_q^2), so no qualifying pair is further
    # apart than sqrt(2 KL_th) times the widest sigma.
    reach = math.sqrt(2.0 * kl_threshold) * max(c.sigma for c in items)
    order = sorted(range(len(items)), key=lambda i: items[i].centre)
    best: tuple[float, int, int] | None = None
    for pos, i in enumerate(order):
        centre = items[i].centre
        for j in order[pos + 1 :]:
            if items[j].centre - centre >= reach:
                break
            divergence = symmetric_kl(items[i], items[j])
            if divergence >= kl_threshold:
                continue
            candidate = (divergence, min(i, j), max(i, j))
            if best is None or candidate < best:
                best = candidate
    if best is None:
        return None
    return best[1], best[2]
