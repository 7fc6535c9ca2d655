"""
Seeded sampling of sequence parameters and ordered execution of independent checks over a process pool.
"""

from __future__ import annotations

import logging
import os
import typing
from concurrent.futures import ProcessPoolExecutor

from polynomial_zsigmondy.poly import Poly, coeff_map_sigma, gcd_monic
from polynomial_zsigmondy.sequences import SequenceSpec, check_admissible

if typing.TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    from polynomial_zsigmondy.fields import FieldDescriptor
    from polynomial_zsigmondy.rng import RngState

logger = logging.getLogger(__name__)

WORKERS_ENV = "ZSIG_WORKERS"
MAX_REJECTIONS = 10_000

T = typing.TypeVar("T")
R = typing.TypeVar("R")


def default_workers() -> int:
    value = os.environ.get(WORKERS_ENV, "1")
    try:
        workers = int(value)
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be an integer; got {value!r}") from None
    return max(workers, 1)


def random_poly(field: FieldDescriptor, max_degree: int, rng: RngState) -> Poly:
    """Uniform over coefficient tuples of length max_degree + 1."""
    return Poly.from_raw(field, (field.random_element(rng) for _ in range(max_degree + 1)))


def _sample(description: str, draw: Callable[[], T | None]) -> T:
    for _ in range(MAX_REJECTIONS):
        value = draw()
        if value is not None:
            return value
    raise ValueError(f"Could not sample {description} after {MAX_REJECTIONS} attempts")


def random_coprime_pair(
    field: FieldDescriptor,
    max_degree: int,
    rng: RngState,
    exclude_g_one: bool = False,
) -> tuple[Poly, Poly]:
    def draw():
        f, g = random_poly(field, max_degree, rng), random_poly(field, max_degree, rng)
        if f.is_zero or g.is_zero or (f.is_constant and g.is_constant):
            return None
        if exclude_g_one and g.is_one:
            return None
        if not gcd_monic(f, g).is_one:
            return None
        return f, g

    return _sample(f"a coprime pair over {field}", draw)


def random_non_unit(field: FieldDescriptor, max_degree: int, rng: RngState) -> Poly:
    def draw():
        f = random_poly(field, max_degree, rng)
        return None if f.is_constant else f

    return _sample(f"a non-unit over {field}", draw)


def random_admissible_lucas(extension: FieldDescriptor, max_degree: int, rng: RngState) -> Poly:
    def draw():
        p = random_poly(extension, max_degree, rng)
        if p.is_constant or p == coeff_map_sigma(p):
            return None
        return p if check_admissible(SequenceSpec.lucas(p))[0] else None

    return _sample(f"an admissible Lucas parameter over {extension}", draw)


def run_ordered(function: Callable[[T], R], jobs: Sequence[T], workers: int = 1, unit: str = " case") -> list[R]:
    """Results in job order, whatever the worker count."""
    try:
        import tqdm
    except ImportError:
        tqdm = None

    logger.info("Running %d jobs on %d workers", len(jobs), workers)
    if workers <= 1:
        iterator = map(function, jobs)
        if tqdm is not None:
            iterator = tqdm.tqdm(iterator, total=len(jobs), unit=unit, disable=None)
        return list(iterator)

    with ProcessPoolExecutor(max_workers=workers) as executor:
        iterator = executor.map(function, jobs)
        if tqdm is not None:
            iterator = tqdm.tqdm(iterator, total=len(jobs), unit=unit, disable=None)
        return list(iterator)
