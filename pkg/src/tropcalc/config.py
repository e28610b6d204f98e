from fractions import Fraction


class Config:
    """
    Global configuration for tropcalc.

    All values are process-wide defaults; commands and library calls accept
    explicit overrides. Nothing is read from the environment.
    """

    _bracket_window: tuple[Fraction, Fraction] = (Fraction(-64), Fraction(64))
    _grid_window: tuple[Fraction, Fraction] = (Fraction(-8), Fraction(8))
    _grid_size: int = 64
    _seed: int = 0
    _radius_exponents: tuple[int, int] = (3, 13)
    _doubling_cap: int = 10
    _bruck_tails: tuple[tuple[Fraction, Fraction], ...] = (
        (Fraction(-40), Fraction(-20)),
        (Fraction(20), Fraction(40)),
    )

    @classmethod
    def get_bracket_window(cls) -> tuple[Fraction, Fraction]:
        """Return the window on which bracket() validates its vanishing lattice."""
        return cls._bracket_window

    @classmethod
    def set_bracket_window(cls, lo: Fraction, hi: Fraction) -> None:
        """
        Set the bracket validation window.

        Raises:
            ValueError: If the window is empty.
        """
        cls._bracket_window = _checked_window(lo, hi)

    @classmethod
    def get_grid_window(cls) -> tuple[Fraction, Fraction]:
        """Return the default residual grid window."""
        return cls._grid_window

    @classmethod
    def set_grid_window(cls, lo: Fraction, hi: Fraction) -> None:
        """Set the default residual grid window."""
        cls._grid_window = _checked_window(lo, hi)

    @classmethod
    def get_grid_size(cls) -> int:
        """Return the default number of residual grid points."""
        return cls._grid_size

    @classmethod
    def set_grid_size(cls, size: int) -> None:
        """Set the default number of residual grid points."""
        if size < 1:
            raise ValueError(f"Grid size must be positive, got {size}")
        cls._grid_size = size

    @classmethod
    def get_seed(cls) -> int:
        """Return the seed used for every randomised sample."""
        return cls._seed

    @classmethod
    def set_seed(cls, seed: int) -> None:
        """Set the seed used for every randomised sample."""
        cls._seed = seed

    @classmethod
    def get_radii(cls) -> list[Fraction]:
        """Return the default geometric radius grid 2^k."""
        first, last = cls._radius_exponents
        return [Fraction(2) ** k for k in range(first, last + 1)]

    @classmethod
    def set_radius_exponents(cls, first: int, last: int) -> None:
        """
        Set the exponent range of the radius grid.

        Raises:
            ValueError: If fewer than 8 radii would result.
        """
        if last - first + 1 < 8:
            raise ValueError(
                f"Radius grid needs at least 8 points, got exponents {first}..{last}"
            )
        cls._radius_exponents = (first, last)

    @classmethod
    def get_doubling_cap(cls) -> int:
        """Return the maximum number of window doublings."""
        return cls._doubling_cap

    @classmethod
    def set_doubling_cap(cls, cap: int) -> None:
        """Set the maximum number of window doublings."""
        if cap < 0:
            raise ValueError(f"Doubling cap must be non-negative, got {cap}")
        cls._doubling_cap = cap

    @classmethod
    def get_bruck_tails(cls) -> tuple[tuple[Fraction, Fraction], ...]:
        """Return the default tails used by the Brück checker."""
        return cls._bruck_tails

    @classmethod
    def set_bruck_tails(cls, left: tuple[Fraction, Fraction], right: tuple[Fraction, Fraction]) -> None:
        """Set the left and right tails used by the Brück checker."""
        cls._bruck_tails = (_checked_window(*left), _checked_window(*right))

    @classmethod
    def reset(cls) -> None:
        """Restore every default."""
        cls._bracket_window = (Fraction(-64), Fraction(64))
        cls._grid_window = (Fraction(-8), Fraction(8))
        cls._grid_size = 64
        cls._seed = 0
        cls._radius_exponents = (3, 13)
        cls._doubling_cap = 10
        cls._bruck_tails = (
            (Fraction(-40), Fraction(-20)),
            (Fraction(20), Fraction(40)),
        )


def _checked_window(lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError(f"Window must satisfy lo < hi, got [{lo}, {hi}]")
    return lo, hi
