import math
import random
from fractions import Fraction
from typing import Iterable, Optional

from ..config import Config
from ..core import PLFunction
from .equation import EquationSpec


def residual(f: PLFunction, spec: EquationSpec, grid: Iterable[Fraction]) -> Fraction:
    """
    Exact max |sum_j n_j f(x+j) - (rhs_slope x + rhs)| over the grid.

    Raises:
        ValueError: If the grid is empty.
        TropDomainError: If f is -inf somewhere it is evaluated.
    """
    points = list(grid)
    if not points:
        raise ValueError("residual needs a non-empty grid")
    return max(abs(spec.defect(f, Fraction(x))) for x in points)


def default_grid(
    n: Optional[int] = None,
    window: Optional[tuple[Fraction, Fraction]] = None,
    seed: Optional[int] = None,
) -> list[Fraction]:
    """
    Integers and half-integers of the window, topped up to n points with
    seeded random rationals of denominator 3 to 7.
    """
    n = Config.get_grid_size() if n is None else n
    lo, hi = Config.get_grid_window() if window is None else window
    seed = Config.get_seed() if seed is None else seed
    lattice = [Fraction(k) for k in range(math.ceil(lo), math.floor(hi) + 1)]
    halves = [k + Fraction(1, 2) for k in range(math.floor(lo), math.floor(hi) + 1) if lo <= k + Fraction(1, 2) <= hi]
    points = list(dict.fromkeys(lattice + halves))[:n]
    rng = random.Random(seed)
    seen = set(points)
    attempts = 0
    while len(points) < n and attempts < 100 * n:
        attempts += 1
        q = rng.randint(3, 7)
        p = rng.randint(math.ceil(lo * q), math.floor(hi * q))
        x = Fraction(p, q)
        if x not in seen:
            seen.add(x)
            points.append(x)
    return sorted(points)
