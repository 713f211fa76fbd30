from core.series.engine import (
    Series,
    SeriesPair,
    borel,
    compose,
    divided_difference,
    exp_series,
    inverse_borel,
    log_series,
    phi_tau,
    reciprocal,
    tau_inverse_substitute,
    tau_power_substitute,
    tau_substitute,
)

__all__ = [
    "Series",
    "SeriesPair",
    "borel",
    "compose",
    "divided_difference",
    "exp_series",
    "inverse_borel",
    "log_series",
    "phi_tau",
    "reciprocal",
    "tau_inverse_substitute",
    "tau_power_substitute",
    "tau_substitute",
]
