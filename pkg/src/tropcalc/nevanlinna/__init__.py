from .functionals import (
    proximity,
    counting,
    characteristic,
    order_estimate,
    nevanlinna_report,
)

__all__ = [
    "proximity",
    "counting",
    "characteristic",
    "order_estimate",
    "nevanlinna_report",
]
